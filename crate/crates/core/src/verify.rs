//! Exhaustive machine checks of the identities and structural claims
//! about permutation tableaux, reported as JSON.
//!
//! Every sweep searches shards in parallel with `find_map_first`, so the
//! reported counterexample is the first one in enumeration order no matter
//! how many threads run.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::codec::{btableau_to_value, perm_to_value, tableau_to_value};
use crate::error::{Error, Result};
use crate::imbalance::{
    bivariate_check, e_t, s_of_n, urc_series_check, IdentityCheck, Method, SignImbalanceLedger,
};
use crate::involutions::{
    chi, in_r, in_ss, in_u, in_v, in_w, phi_12, r_n_census, theta, typeb_swap, w_involution,
};
use crate::perm::{enumerate_symmetric_perms, perms_with_first, Perm};
use crate::permstat::{
    check_four_set_correspondence, four_sets, four_sets_of_partial, nwnm, nwnm_sign,
    weak_excedances,
};
use crate::series::{IntPoly, TruncatedSeries};
use crate::shape::shapes_of_length;
use crate::tableau::{tableaux_of_shape, Tableau};
use crate::typeb::{
    btableaux_of_shape, phi_b, s_b_of_n, shifted_shapes_of_length, BMethod, BTableau,
};
use crate::zigzag::{check_path_intersections, phi, phi_partial};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Claim {
    Bivariate,
    UrcSeries,
    ClosedForm,
    Recurrence,
    FourSets,
    WInvolution,
    VInvolution,
    RowsAreWeakExcedances,
    PathIntersections,
    TypeBLabels,
    TypeBDistribution,
    TypeBImbalance,
    UrBEqualsUrc,
}

impl Claim {
    pub const ALL: [Claim; 13] = [
        Claim::Bivariate,
        Claim::UrcSeries,
        Claim::ClosedForm,
        Claim::Recurrence,
        Claim::FourSets,
        Claim::WInvolution,
        Claim::VInvolution,
        Claim::RowsAreWeakExcedances,
        Claim::PathIntersections,
        Claim::TypeBLabels,
        Claim::TypeBDistribution,
        Claim::TypeBImbalance,
        Claim::UrBEqualsUrc,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Claim::Bivariate => "eq1.1",
            Claim::UrcSeries => "thm1.1",
            Claim::ClosedForm => "thm1.2",
            Claim::Recurrence => "thm1.3",
            Claim::FourSets => "lemma2.1",
            Claim::WInvolution => "lemma2.2",
            Claim::VInvolution => "lemma2.3",
            Claim::RowsAreWeakExcedances => "prop2.1",
            Claim::PathIntersections => "prop2.2",
            Claim::TypeBLabels => "prop3.1",
            Claim::TypeBDistribution => "lemma3.1",
            Claim::TypeBImbalance => "thm3.1",
            Claim::UrBEqualsUrc => "urB-eq-urc",
        }
    }

    /// Smallest `n` the check is stated for.
    pub fn min_n(self) -> u32 {
        match self {
            Claim::UrcSeries => 0,
            Claim::Recurrence => 3,
            Claim::WInvolution => 4,
            _ => 1,
        }
    }

    pub fn describe(self) -> &'static str {
        match self {
            Claim::Bivariate => "tableaux by (urr - 1, topone) give (x + y)_(n-1)",
            Claim::UrcSeries => "urc generating function equals (1 + E_t) / (1 + (t - 1) x E_t)",
            Claim::ClosedForm => "closed form of s(n), four independent computations",
            Claim::Recurrence => "s(n) = 2 s(n-1) - 2 s(n-2)",
            Claim::FourSets => "restricted/unrestricted rows and columns map onto WM/NWM/WNM/NWNM",
            Claim::WInvolution => "the involution on W_n flips nwnm parity",
            Claim::VInvolution => "the 1-2 swap on V_n flips nwnm parity",
            Claim::RowsAreWeakExcedances => "row labels are the weak excedances",
            Claim::PathIntersections => {
                "zigzag paths meet only at points, later meetings on 1-cells"
            }
            Claim::TypeBLabels => "fixed points and excedances of the type-B image classify labels",
            Claim::TypeBDistribution => {
                "ur_B over type-B tableaux is distributed as nwnm over symmetric permutations"
            }
            Claim::TypeBImbalance => "s_B(n) is 2^(n/2) for even n and 0 for odd n",
            Claim::UrBEqualsUrc => "ur_B(T) = urc(T_A)",
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Claim {
    type Err = Error;

    fn from_str(s: &str) -> Result<Claim> {
        Claim::ALL
            .into_iter()
            .find(|c| c.id() == s)
            .ok_or_else(|| Error::Parse(format!("unknown claim {s:?}")))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerifyReport {
    pub claim: String,
    pub n_range: [u32; 2],
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub values: Option<Value>,
    pub wall_time_ms: u64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

struct Outcome {
    witness: Option<Value>,
    values: Option<Value>,
}

pub fn verify(claim: Claim, max_n: u32) -> Result<VerifyReport> {
    let lo = claim.min_n();
    if max_n < lo {
        return Err(Error::RangeTooSmall {
            claim: claim.id(),
            min: lo,
        });
    }
    let start = Instant::now();
    let ns = lo..=max_n;
    let out = match claim {
        Claim::Bivariate => check_bivariate(ns),
        Claim::UrcSeries => check_urc_series(max_n),
        Claim::ClosedForm => check_closed_form(ns),
        Claim::Recurrence => check_recurrence(max_n),
        Claim::FourSets => tableau_sweep(ns, check_four_set_correspondence),
        Claim::WInvolution => perm_sweep(ns, |p| {
            (!in_u(p) || flips(p, theta, in_u)) && (!in_w(p) || flips(p, w_involution, in_w))
        }),
        Claim::VInvolution => perm_sweep(ns, |p| !in_v(p) || flips(p, phi_12, in_v)),
        Claim::RowsAreWeakExcedances => {
            tableau_sweep(ns, |t| weak_excedances(&phi(t)) == t.shape().rows())
        }
        Claim::PathIntersections => tableau_sweep(ns, |t| check_path_intersections(t).is_empty()),
        Claim::TypeBLabels => btableau_sweep(ns, type_b_labels_hold),
        Claim::TypeBDistribution => check_ur_b_distribution(ns),
        Claim::TypeBImbalance => check_type_b_imbalance(ns),
        Claim::UrBEqualsUrc => btableau_sweep(ns, |t| {
            t.b_statistics().ur_b() == t.symmetrize().ta.row_column_statistics().urc()
        }),
    };
    Ok(VerifyReport {
        claim: claim.id().to_string(),
        n_range: [lo, max_n],
        status: if out.witness.is_none() {
            Status::Pass
        } else {
            Status::Fail
        },
        witness: out.witness,
        values: out.values,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

/// `map` sends `p` back into `domain`, squares to the identity, and flips
/// the parity of nwnm.
fn flips(p: &Perm, map: impl Fn(&Perm) -> Result<Perm>, domain: impl Fn(&Perm) -> bool) -> bool {
    let Ok(q) = map(p) else { return false };
    domain(&q) && map(&q).as_ref() == Ok(p) && nwnm_sign(&q) == -nwnm_sign(p)
}

fn first_tableau_failure(n: u32, ok: &(impl Fn(&Tableau) -> bool + Sync)) -> Option<Tableau> {
    shapes_of_length(n)
        .par_iter()
        .find_map_first(|s| tableaux_of_shape(s).into_iter().find(|t| !ok(t)))
}

fn first_btableau_failure(n: u32, ok: &(impl Fn(&BTableau) -> bool + Sync)) -> Option<BTableau> {
    shifted_shapes_of_length(n)
        .par_iter()
        .find_map_first(|s| btableaux_of_shape(s).into_iter().find(|t| !ok(t)))
}

fn first_perm_failure(n: u32, ok: &(impl Fn(&Perm) -> bool + Sync)) -> Option<Perm> {
    (1..=n)
        .into_par_iter()
        .find_map_first(|first| perms_with_first(n, first).find(|p| !ok(p)))
}

fn factorial(n: u32) -> u64 {
    (1..=n as u64).product()
}

fn tableau_sweep(ns: impl Iterator<Item = u32>, ok: impl Fn(&Tableau) -> bool + Sync) -> Outcome {
    let mut counts = Vec::new();
    for n in ns {
        if let Some(t) = first_tableau_failure(n, &ok) {
            return Outcome {
                witness: Some(tableau_to_value(&t)),
                values: None,
            };
        }
        counts.push(factorial(n));
    }
    Outcome {
        witness: None,
        values: Some(json!({ "checked": counts })),
    }
}

fn btableau_sweep(ns: impl Iterator<Item = u32>, ok: impl Fn(&BTableau) -> bool + Sync) -> Outcome {
    let mut counts = Vec::new();
    for n in ns {
        if let Some(t) = first_btableau_failure(n, &ok) {
            return Outcome {
                witness: Some(btableau_to_value(&t)),
                values: None,
            };
        }
        counts.push(factorial(n) << n);
    }
    Outcome {
        witness: None,
        values: Some(json!({ "checked": counts })),
    }
}

fn perm_sweep(ns: impl Iterator<Item = u32>, ok: impl Fn(&Perm) -> bool + Sync) -> Outcome {
    let mut counts = Vec::new();
    for n in ns {
        if let Some(p) = first_perm_failure(n, &ok) {
            return Outcome {
                witness: Some(perm_to_value(&p)),
                values: None,
            };
        }
        counts.push(factorial(n));
    }
    Outcome {
        witness: None,
        values: Some(json!({ "checked": counts })),
    }
}

fn identity_values<T: fmt::Display>(n: u32, c: &IdentityCheck<T>) -> Value {
    json!({ "n": n, "lhs": c.lhs.to_string(), "rhs": c.rhs.to_string() })
}

fn check_bivariate(ns: impl Iterator<Item = u32>) -> Outcome {
    let mut values = Vec::new();
    for n in ns {
        let c = bivariate_check(n);
        let v = identity_values(n, &c);
        if !c.holds() {
            return Outcome {
                witness: Some(v),
                values: None,
            };
        }
        values.push(v);
    }
    Outcome {
        witness: None,
        values: Some(Value::Array(values)),
    }
}

fn check_urc_series(cutoff: u32) -> Outcome {
    let cutoff = cutoff as usize;
    let c = urc_series_check(cutoff);
    if let Some(k) = (0..=cutoff).find(|&k| c.lhs.coeff(k) != c.rhs.coeff(k)) {
        let w =
            json!({ "n": k, "lhs": c.lhs.coeff(k).to_string(), "rhs": c.rhs.coeff(k).to_string() });
        return Outcome {
            witness: Some(w),
            values: None,
        };
    }
    let e = e_t(cutoff);
    let one = TruncatedSeries::one(cutoff);
    let denominator = one.add(&e.shift().scale(&IntPoly::from_i64s(&[-1, 1])));
    if denominator.mul(&c.rhs) != one.add(&e) {
        return Outcome {
            witness: Some(json!({ "division": "denominator * quotient != numerator" })),
            values: None,
        };
    }
    let at_minus_one = c.rhs.specialize_t(-1);
    let at_one = c.rhs.specialize_t(1);
    for n in 0..=cutoff as u32 {
        let s = BigInt::from(s_of_n(n, Method::Formula));
        let fact = BigInt::from(factorial(n));
        if at_minus_one[n as usize] != s || at_one[n as usize] != fact {
            let w = json!({ "n": n, "at_minus_one": at_minus_one[n as usize].to_string(), "at_one": at_one[n as usize].to_string() });
            return Outcome {
                witness: Some(w),
                values: None,
            };
        }
    }
    let coeffs: Vec<String> = c.rhs.coeffs().iter().map(IntPoly::to_string).collect();
    let specialized: Vec<String> = at_minus_one.iter().map(BigInt::to_string).collect();
    Outcome {
        witness: None,
        values: Some(json!({ "coefficients": coeffs, "at_t_minus_one": specialized })),
    }
}

fn check_closed_form(ns: impl Iterator<Item = u32>) -> Outcome {
    let ns: Vec<u32> = ns.collect();
    let ledger = SignImbalanceLedger::compute(ns.iter().copied());
    if let Some(row) = ledger.rows.iter().find(|r| !r.agrees()) {
        let w = json!({
            "n": row.n,
            "enumerate": row.s_enum,
            "permutation": row.s_perm,
            "formula": row.s_formula,
            "recurrence": row.s_recur,
        });
        return Outcome {
            witness: Some(w),
            values: None,
        };
    }
    for &n in &ns {
        let census = r_n_census(n);
        let block_count_ok = n % 4 != 0 || census.count == 1usize << (n / 2);
        if census.signed_sum != s_of_n(n, Method::Formula) || !block_count_ok {
            let w = json!({ "n": n, "r_count": census.count, "r_signed_sum": census.signed_sum });
            return Outcome {
                witness: Some(w),
                values: None,
            };
        }
        let not_in_r = |p: &Perm| !in_r(p);
        if let Some(p) = first_perm_failure(n, &|p: &Perm| in_r(p) || flips(p, chi, not_in_r)) {
            return Outcome {
                witness: Some(perm_to_value(&p)),
                values: None,
            };
        }
    }
    let values: Vec<i64> = ledger.rows.iter().map(|r| r.s_formula).collect();
    Outcome {
        witness: None,
        values: Some(json!(values)),
    }
}

fn check_recurrence(max_n: u32) -> Outcome {
    let s: Vec<i64> = (0..=max_n).map(|n| s_of_n(n, Method::Enumerate)).collect();
    for n in 3..=max_n as usize {
        if s[n] != 2 * s[n - 1] - 2 * s[n - 2] {
            let w = json!({ "n": n, "s": [s[n - 2], s[n - 1], s[n]] });
            return Outcome {
                witness: Some(w),
                values: None,
            };
        }
    }
    Outcome {
        witness: None,
        values: Some(json!(s[1..].to_vec())),
    }
}

fn type_b_labels_hold(t: &BTableau) -> bool {
    let n = t.n();
    let p = phi_b(t);
    let ts = t.symmetrize().ts;
    let shape = ts.shape();
    (1..=2 * n).all(|i| {
        let v = p.at(i);
        let as_row = v > i || (v == i && i > n);
        if as_row {
            shape.is_row(i)
        } else {
            shape.is_col(i)
        }
    })
}

fn histogram(values: impl Iterator<Item = usize>) -> Vec<u64> {
    let mut h = Vec::new();
    for v in values {
        if h.len() <= v {
            h.resize(v + 1, 0);
        }
        h[v] += 1;
    }
    h
}

fn check_ur_b_distribution(ns: impl Iterator<Item = u32>) -> Outcome {
    let same_nwnm = |t: &BTableau| {
        let sym = t.symmetrize();
        four_sets_of_partial(&phi_partial(&sym.ta)).nwnm == four_sets(&phi_b(t)).nwnm
    };
    let mut values = Vec::new();
    for n in ns {
        if let Some(t) = first_btableau_failure(n, &same_nwnm) {
            return Outcome {
                witness: Some(btableau_to_value(&t)),
                values: None,
            };
        }
        let ur_b: Vec<Vec<u64>> = shifted_shapes_of_length(n)
            .par_iter()
            .map(|s| {
                histogram(
                    btableaux_of_shape(s)
                        .iter()
                        .map(|t| t.b_statistics().ur_b()),
                )
            })
            .collect();
        let ur_b = ur_b.into_iter().fold(Vec::new(), |mut acc, h| {
            if acc.len() < h.len() {
                acc.resize(h.len(), 0);
            }
            acc.iter_mut().zip(h).for_each(|(a, b)| *a += b);
            acc
        });
        let nw = histogram(enumerate_symmetric_perms(n).iter().map(nwnm));
        if ur_b != nw {
            return Outcome {
                witness: Some(json!({ "n": n, "ur_b": ur_b, "nwnm": nw })),
                values: None,
            };
        }
        values.push(json!({ "n": n, "distribution": ur_b }));
    }
    Outcome {
        witness: None,
        values: Some(Value::Array(values)),
    }
}

fn check_type_b_imbalance(ns: impl Iterator<Item = u32>) -> Outcome {
    let mut values = Vec::new();
    for n in ns {
        let by = |m| s_b_of_n(n, m);
        let (e, p, f) = (
            by(BMethod::Enumerate),
            by(BMethod::Permutation),
            by(BMethod::Formula),
        );
        if e != p || p != f {
            let w = json!({ "n": n, "enumerate": e, "permutation": p, "formula": f });
            return Outcome {
                witness: Some(w),
                values: None,
            };
        }
        if n >= 3 && f != 2 * s_b_of_n(n - 2, BMethod::Enumerate) {
            return Outcome {
                witness: Some(json!({ "n": n, "recurrence": "s_B(n) != 2 s_B(n-2)" })),
                values: None,
            };
        }
        let swap_ok = |q: &Perm| !in_ss(q) || flips(q, typeb_swap, in_ss);
        if let Some(q) = enumerate_symmetric_perms(n)
            .into_iter()
            .find(|q| !swap_ok(q))
        {
            return Outcome {
                witness: Some(perm_to_value(&q)),
                values: None,
            };
        }
        values.push(f);
    }
    Outcome {
        witness: None,
        values: Some(json!(values)),
    }
}

/// Claim ids in a stable order.
pub fn claim_ids() -> BTreeSet<&'static str> {
    Claim::ALL.iter().map(|c| c.id()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for c in Claim::ALL {
            assert_eq!(c.id().parse::<Claim>().unwrap(), c);
        }
        assert!("thm9.9".parse::<Claim>().is_err());
        assert_eq!(claim_ids().len(), Claim::ALL.len());
    }

    #[test]
    fn small_runs_pass() {
        for c in Claim::ALL {
            let r = verify(c, 5).unwrap();
            assert!(r.passed(), "{c}: {:?}", r.witness);
        }
    }

    #[test]
    fn values() {
        let r = verify(Claim::ClosedForm, 8).unwrap();
        assert_eq!(r.values, Some(json!([1, 0, -2, -4, -4, 0, 8, 16])));
        let r = verify(Claim::TypeBImbalance, 5).unwrap();
        assert_eq!(r.values, Some(json!([0, 2, 0, 4, 0])));
        let r = verify(Claim::Bivariate, 1).unwrap();
        assert_eq!(r.values, Some(json!([{ "n": 1, "lhs": "1", "rhs": "1" }])));
    }

    #[test]
    fn range_checks() {
        assert!(verify(Claim::WInvolution, 3).is_err());
        assert!(verify(Claim::Recurrence, 2).is_err());
        assert_eq!(verify(Claim::UrcSeries, 0).unwrap().n_range, [0, 0]);
    }

    #[test]
    fn failure_reports_first_witness() {
        let w = first_tableau_failure(3, &|t: &Tableau| t.ones() < 2).unwrap();
        assert_eq!(
            tableau_to_value(&w),
            json!({"n":3,"cols":[3,2],"rows":[1],"fill":[[1,1]]})
        );
        let w = first_perm_failure(4, &|p: &Perm| p.at(1) != 3).unwrap();
        assert_eq!(w.word(), &[3, 1, 2, 4]);
    }

    #[test]
    fn report_shape() {
        let r = verify(Claim::TypeBImbalance, 2).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["claim"], "thm3.1");
        assert_eq!(v["n_range"], json!([1, 2]));
        assert_eq!(v["status"], "pass");
        assert!(v.get("witness").is_none());
    }
}
