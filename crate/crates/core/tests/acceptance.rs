//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines reach stdout unbuffered; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use permtab::codec::{
    btableau_to_json, parse_btableau, parse_tableau, perm_to_json, shape_to_json, sym_to_json,
    tableau_to_json,
};
use permtab::imbalance::{bivariate_check, s_of_n, urc_series_check, Method};
use permtab::involutions::{chi, in_r, in_ss, in_u, in_v, phi_12, r_n_census, theta, typeb_swap};
use permtab::perm::{all_perms, enumerate_symmetric_perms, Perm};
use permtab::permstat::{four_sets, nwnm_sign};
use permtab::shape::{shapes_of_length, Shape};
use permtab::tableau::tableaux_of_shape;
use permtab::typeb::{enumerate_b, phi_b, phi_b_inverse, s_b_of_n, BMethod};
use permtab::verify::{verify, Claim};
use permtab::{phi, Result};
use rayon::prelude::*;

const S: [i64; 8] = [1, 0, -2, -4, -4, 0, 8, 16];
const PI_B: [u32; 16] = [8, 1, 12, 4, 3, 7, 11, 2, 15, 6, 10, 14, 13, 5, 16, 9];

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

fn golden(name: &str) -> String {
    let path: PathBuf = [env!("CARGO_MANIFEST_DIR"), "tests", "golden", name]
        .iter()
        .collect();
    fs::read_to_string(path).unwrap_or_default()
}

fn claim_passes(c: Claim, max_n: u32) -> bool {
    verify(c, max_n).map(|r| r.passed()).unwrap_or(false)
}

fn involution_on(n: u32, map: fn(&Perm) -> Result<Perm>, domain: fn(&Perm) -> bool) -> bool {
    all_perms(n).filter(domain).all(|p| match map(&p) {
        Ok(q) => domain(&q) && map(&q).ok().as_ref() == Some(&p) && nwnm_sign(&q) == -nwnm_sign(&p),
        Err(_) => false,
    })
}

fn cardinality() -> (bool, String) {
    let mut ok = true;
    let mut n9 = Duration::ZERO;
    for n in 1..=9u32 {
        let start = Instant::now();
        let count: usize = shapes_of_length(n)
            .par_iter()
            .map(|s| tableaux_of_shape(s).len())
            .sum();
        if n == 9 {
            n9 = start.elapsed();
        }
        ok &= count as u64 == factorial(n);
    }
    ok &= n9 < Duration::from_secs(60);
    for n in 1..=5u32 {
        ok &= enumerate_b(n).count() as u64 == factorial(n) << n;
    }
    (
        ok,
        format!("type A n<=9 (n=9 in {} ms), type B n<=5", n9.as_millis()),
    )
}

fn four_way() -> (bool, String) {
    let ok = (1..=8u32).all(|n| {
        let want = S[n as usize - 1];
        [
            Method::Enumerate,
            Method::Permutation,
            Method::Formula,
            Method::Recurrence,
        ]
        .iter()
        .all(|&m| s_of_n(n, m) == want)
    });
    (
        ok,
        "s(1..8) = 1,0,-2,-4,-4,0,8,16 by enumeration, permutations, closed form, recurrence"
            .into(),
    )
}

fn recurrence() -> (bool, String) {
    let s: Vec<i64> = (1..=9).map(|n| s_of_n(n, Method::Enumerate)).collect();
    let ok = (2..s.len()).all(|i| s[i] == 2 * s[i - 1] - 2 * s[i - 2]);
    (ok, "s(n) = 2s(n-1) - 2s(n-2) for 3<=n<=9".into())
}

fn generating_function() -> (bool, String) {
    let c = urc_series_check(8);
    let at_minus_one = c.rhs.specialize_t(-1);
    let at_one = c.rhs.specialize_t(1);
    let mut ok = c.holds();
    for n in 1..=8u32 {
        ok &= at_minus_one[n as usize] == BigInt::from(S[n as usize - 1]);
        ok &= at_one[n as usize] == BigInt::from(factorial(n));
    }
    (
        ok,
        "series identity through x^8, t=-1 and t=1 specializations".into(),
    )
}

fn bivariate() -> (bool, String) {
    let ok = (1..=9).all(|n| bivariate_check(n).holds());
    (ok, "bivariate identity with (x+y)_(n-1) for 1<=n<=9".into())
}

fn four_sets_correspondence() -> (bool, String) {
    let set = |v: &[u32]| v.iter().copied().collect::<BTreeSet<u32>>();
    let mut ok = claim_passes(Claim::FourSets, 8);
    let t = parse_tableau(golden("sample_tableau.json").trim()).expect("golden tableau");
    let p = phi(&t);
    let st = t.row_column_statistics();
    let fs = four_sets(&p);
    ok &= st.restricted_rows == set(&[2, 7, 8]) && fs.wm == set(&[5, 8, 9]);
    ok &= st.restricted_cols == set(&[5, 6]) && fs.nwm == set(&[3, 4]);
    ok &= st.unrestricted_rows == set(&[1, 4, 10, 12]) && fs.wnm == set(&[6, 10, 11, 12]);
    ok &= st.unrestricted_cols == set(&[3, 9, 11]) && fs.nwnm == set(&[1, 2, 7]);
    (
        ok,
        "set correspondence for n<=8 and the worked example".into(),
    )
}

fn involutions() -> (bool, String) {
    let mut ok = true;
    for n in 1..=8 {
        ok &= involution_on(n, phi_12, in_v);
        ok &= involution_on(n, chi, |p| !in_r(p));
        if n >= 4 {
            ok &= involution_on(n, theta, in_u);
        }
    }
    ok &= r_n_census(4).count == 4 && r_n_census(8).count == 16;
    (
        ok,
        "phi on V_n, theta on U_n, chi off R_n for n<=8; |R_4|=4, |R_8|=16".into(),
    )
}

fn label_and_path_properties() -> (bool, String) {
    let ok = claim_passes(Claim::RowsAreWeakExcedances, 8)
        && claim_passes(Claim::PathIntersections, 7)
        && claim_passes(Claim::TypeBLabels, 5);
    (
        ok,
        "rows are weak excedances (n<=8), path intersections (n<=7), type-B labels (n<=5)".into(),
    )
}

fn type_b() -> (bool, String) {
    let mut ok = true;
    for n in 1..=5 {
        ok &= enumerate_b(n).all(|t| phi_b_inverse(&phi_b(&t)).as_ref() == Ok(&t));
    }
    let t = parse_btableau(golden("sample_btableau.json").trim()).expect("golden type-B tableau");
    ok &= phi_b(&t).word() == PI_B;
    ok &= t.symmetrize().removed == [4, 13];
    ok &= claim_passes(Claim::UrBEqualsUrc, 5) && claim_passes(Claim::TypeBDistribution, 5);
    let want = [0i64, 2, 0, 4, 0];
    for n in 1..=5u32 {
        for m in [BMethod::Enumerate, BMethod::Permutation, BMethod::Formula] {
            ok &= s_b_of_n(n, m) == want[n as usize - 1];
        }
    }
    for n in 2..=4 {
        ok &= enumerate_symmetric_perms(n)
            .iter()
            .filter(|p| in_ss(p))
            .all(|p| match typeb_swap(p) {
                Ok(q) => {
                    in_ss(&q) && typeb_swap(&q).as_ref() == Ok(p) && nwnm_sign(&q) == -nwnm_sign(p)
                }
                Err(_) => false,
            });
    }
    (
        ok,
        "round trips n<=5, worked example, ur_B = urc(T_A), distribution, s_B(1..5), swap n<=4"
            .into(),
    )
}

fn golden_files() -> (bool, String) {
    let line = |s: String| s + "\n";
    let shape = Shape::from_column_labels(12, &[11, 9, 6, 5, 3]).expect("sample shape");
    let mut ok = line(shape_to_json(&shape)) == golden("labeled_shape.json");
    let t = parse_tableau(golden("sample_tableau.json").trim());
    ok &= t
        .as_ref()
        .is_ok_and(|t| t.validate() && line(tableau_to_json(t)) == golden("sample_tableau.json"));
    ok &= t
        .as_ref()
        .is_ok_and(|t| line(perm_to_json(&phi(t))) == golden("sample_perm.json"));
    let b = parse_btableau(golden("sample_btableau.json").trim());
    ok &= b.as_ref().is_ok_and(|b| {
        b.validate_b() && line(btableau_to_json(b)) == golden("sample_btableau.json")
    });
    ok &= b
        .as_ref()
        .is_ok_and(|b| line(sym_to_json(&b.symmetrize())) == golden("sample_sym.json"));
    (
        ok,
        "shape labeling, tableau and image, type-B tableau, symmetric pair".into(),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> (bool, String)); 10] = [
        ("cardinality", cardinality),
        ("sign-imbalance closed form", four_way),
        ("sign-imbalance recurrence", recurrence),
        ("urc generating function", generating_function),
        ("bivariate rising factorial", bivariate),
        ("four-set correspondence", four_sets_correspondence),
        ("parity-reversing involutions", involutions),
        ("label and path properties", label_and_path_properties),
        ("type B", type_b),
        ("golden files", golden_files),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let (ok, detail) = run();
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:>2} {name}: {detail} [{} ms]",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            start.elapsed().as_millis()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
