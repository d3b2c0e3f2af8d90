//! Sign-imbalance of permutation tableaux and the generating-function
//! identities behind it, computed exactly.

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::perm::perms_with_first;
use crate::permstat::nwnm_sign;
use crate::series::{rising_factorial, rising_factorial_xy, BivarPoly, IntPoly, TruncatedSeries};
use crate::shape::shapes_of_length;
use crate::tableau::{tableaux_of_shape, Tableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    /// Signed count of tableaux by unrestricted columns.
    Enumerate,
    /// Signed count of permutations by `nwnm`.
    Permutation,
    /// Closed form depending on `n mod 4`.
    Formula,
    /// `s(n) = 2 s(n-1) - 2 s(n-2)` from `s(1) = 1`, `s(2) = 0`.
    Recurrence,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Enumerate,
        Method::Permutation,
        Method::Formula,
        Method::Recurrence,
    ];
}

/// Folds `f` over every tableau of length `n`, one rayon task per shape,
/// combining shard results in shape order.
pub fn fold_tableaux<T, F, C>(n: u32, init: T, f: F, combine: C) -> T
where
    T: Send + Sync + Clone,
    F: Fn(T, &Tableau) -> T + Sync,
    C: Fn(T, T) -> T + Sync,
{
    let parts: Vec<T> = shapes_of_length(n)
        .par_iter()
        .map(|s| tableaux_of_shape(s).iter().fold(init.clone(), &f))
        .collect();
    parts.into_iter().fold(init, combine)
}

pub fn s_of_n(n: u32, method: Method) -> i64 {
    match method {
        Method::Enumerate => fold_tableaux(n, 0i64, |acc, t| acc + t.sign(), |a, b| a + b),
        Method::Permutation => signed_perm_sum(n),
        Method::Formula => s_formula(n),
        Method::Recurrence => s_recurrence(n),
    }
}

fn signed_perm_sum(n: u32) -> i64 {
    if n == 0 {
        return 1;
    }
    (1..=n)
        .into_par_iter()
        .map(|first| {
            perms_with_first(n, first)
                .map(|p| nwnm_sign(&p))
                .sum::<i64>()
        })
        .sum()
}

/// Closed form for `n = 4k + r`; `s(0) = 1`.
pub fn s_formula(n: u32) -> i64 {
    let k = n / 4;
    let sign = |e: u32| if e % 2 == 0 { 1i64 } else { -1 };
    match n % 4 {
        0 | 1 => sign(k) * (1i64 << (2 * k)),
        2 => 0,
        _ => sign(k + 1) * (1i64 << (2 * k + 1)),
    }
}

fn s_recurrence(n: u32) -> i64 {
    match n {
        0 | 1 => 1,
        2 => 0,
        _ => {
            let (mut prev, mut cur) = (1i64, 0i64);
            for _ in 3..=n {
                (prev, cur) = (cur, 2 * cur - 2 * prev);
            }
            cur
        }
    }
}

/// One row of the four-way comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LedgerRow {
    pub n: u32,
    pub s_enum: i64,
    pub s_perm: i64,
    pub s_formula: i64,
    pub s_recur: i64,
}

impl LedgerRow {
    pub fn agrees(&self) -> bool {
        self.s_enum == self.s_perm
            && self.s_perm == self.s_formula
            && self.s_formula == self.s_recur
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignImbalanceLedger {
    pub rows: Vec<LedgerRow>,
}

impl SignImbalanceLedger {
    pub fn compute(ns: impl IntoIterator<Item = u32>) -> SignImbalanceLedger {
        let rows = ns
            .into_iter()
            .map(|n| LedgerRow {
                n,
                s_enum: s_of_n(n, Method::Enumerate),
                s_perm: s_of_n(n, Method::Permutation),
                s_formula: s_of_n(n, Method::Formula),
                s_recur: s_of_n(n, Method::Recurrence),
            })
            .collect();
        SignImbalanceLedger { rows }
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(LedgerRow::agrees)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityCheck<T> {
    pub lhs: T,
    pub rhs: T,
}

impl<T: PartialEq> IdentityCheck<T> {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// `sum over tableaux of x^(urr - 1) y^topone` against `(x + y)_(n-1)`; `n >= 1`.
pub fn bivariate_check(n: u32) -> IdentityCheck<BivarPoly> {
    assert!(n >= 1, "the identity starts at length 1");
    let lhs = fold_tableaux(
        n,
        BivarPoly::default(),
        |mut acc, t| {
            let s = t.row_column_statistics();
            acc.add_term(s.urr() as u32 - 1, s.topone as u32, BigInt::from(1));
            acc
        },
        |a, b| &a + &b,
    );
    IdentityCheck {
        lhs,
        rhs: rising_factorial_xy(n - 1),
    }
}

/// Polynomial in `t` counting tableaux of length `n` by unrestricted columns.
pub fn urc_polynomial(n: u32) -> IntPoly {
    let counts = fold_tableaux(
        n,
        Vec::<i64>::new(),
        |mut acc, t| {
            let u = t.row_column_statistics().urc();
            if acc.len() <= u {
                acc.resize(u + 1, 0);
            }
            acc[u] += 1;
            acc
        },
        |mut a, b| {
            if a.len() < b.len() {
                a.resize(b.len(), 0);
            }
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    );
    IntPoly::from_i64s(&counts)
}

/// `E_t(x) = sum_{n >= 1} n (t)_(n-1) x^n`.
pub fn e_t(cutoff: usize) -> TruncatedSeries {
    let t = IntPoly::var();
    TruncatedSeries::from_fn(cutoff, |n| {
        if n == 0 {
            IntPoly::default()
        } else {
            &IntPoly::constant(n as i64) * &rising_factorial(&t, n as u32 - 1)
        }
    })
}

/// `(1 + E_t(x)) / (1 + (t - 1) x E_t(x))`.
pub fn urc_series_closed_form(cutoff: usize) -> TruncatedSeries {
    let e = e_t(cutoff);
    let one = TruncatedSeries::one(cutoff);
    let numerator = one.add(&e);
    let denominator = one.add(&e.shift().scale(&IntPoly::from_i64s(&[-1, 1])));
    numerator
        .div(&denominator)
        .expect("denominator has constant term 1")
}

/// Enumerated `urc` generating function against the closed form, up to `x^cutoff`.
pub fn urc_series_check(cutoff: usize) -> IdentityCheck<TruncatedSeries> {
    let lhs = TruncatedSeries::from_fn(cutoff, |n| urc_polynomial(n as u32));
    IdentityCheck {
        lhs,
        rhs: urc_series_closed_form(cutoff),
    }
}

/// Evaluates the series coefficients at `t = t0`.
pub fn specialize_t(series: &TruncatedSeries, t0: i64) -> Vec<BigInt> {
    series.specialize_t(t0)
}
