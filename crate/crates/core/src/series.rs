//! Exact integer polynomials and truncated power series with polynomial
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Polynomial in one variable; `coeffs[d]` multiplies the `d`-th power.
/// Canonical form has no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> IntPoly {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> IntPoly {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn constant(c: impl Into<BigInt>) -> IntPoly {
        IntPoly::new(vec![c.into()])
    }

    /// The variable itself.
    pub fn var() -> IntPoly {
        IntPoly::from_i64s(&[0, 1])
    }

    pub fn monomial(degree: usize, c: impl Into<BigInt>) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        IntPoly::new(coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> BigInt {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Constant polynomial equal to 1 or -1.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].abs().is_one()
    }

    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }
}

impl From<i64> for IntPoly {
    fn from(c: i64) -> IntPoly {
        IntPoly::constant(c)
    }
}

impl Add<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|d| self.coeff(d) + rhs.coeff(d)).collect())
    }
}

impl Sub<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|d| self.coeff(d) - rhs.coeff(d)).collect())
    }
}

impl Mul<&IntPoly> for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.coeffs
                .iter()
                .enumerate()
                .rev()
                .map(|(d, c)| (c, vec![("t", d)])),
        )
    }
}

/// Polynomial in `x` and `y`, keyed by `(deg_x, deg_y)`; zero terms are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BivarPoly {
    terms: BTreeMap<(u32, u32), BigInt>,
}

impl BivarPoly {
    pub fn constant(c: impl Into<BigInt>) -> BivarPoly {
        let mut p = BivarPoly::default();
        p.add_term(0, 0, c.into());
        p
    }

    pub fn x() -> BivarPoly {
        let mut p = BivarPoly::default();
        p.add_term(1, 0, BigInt::one());
        p
    }

    pub fn y() -> BivarPoly {
        let mut p = BivarPoly::default();
        p.add_term(0, 1, BigInt::one());
        p
    }

    pub fn add_term(&mut self, dx: u32, dy: u32, c: BigInt) {
        let entry = self.terms.entry((dx, dy)).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn coeff(&self, dx: u32, dy: u32) -> BigInt {
        self.terms.get(&(dx, dy)).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, u32), &BigInt)> {
        self.terms.iter()
    }

    pub fn eval(&self, x: &BigInt, y: &BigInt) -> BigInt {
        self.terms
            .iter()
            .map(|(&(dx, dy), c)| c * x.pow(dx) * y.pow(dy))
            .sum()
    }
}

impl From<i64> for BivarPoly {
    fn from(c: i64) -> BivarPoly {
        BivarPoly::constant(c)
    }
}

impl Add<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn add(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = self.clone();
        for (&(dx, dy), c) in &rhs.terms {
            out.add_term(dx, dy, c.clone());
        }
        out
    }
}

impl Mul<&BivarPoly> for &BivarPoly {
    type Output = BivarPoly;
    fn mul(self, rhs: &BivarPoly) -> BivarPoly {
        let mut out = BivarPoly::default();
        for (&(ax, ay), a) in &self.terms {
            for (&(bx, by), b) in &rhs.terms {
                out.add_term(ax + bx, ay + by, a * b);
            }
        }
        out
    }
}

impl fmt::Display for BivarPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            self.terms
                .iter()
                .rev()
                .map(|(&(dx, dy), c)| (c, vec![("x", dx as usize), ("y", dy as usize)])),
        )
    }
}

fn write_terms<'a>(
    f: &mut fmt::Formatter<'_>,
    terms: impl Iterator<Item = (&'a BigInt, Vec<(&'static str, usize)>)>,
) -> fmt::Result {
    let mut first = true;
    for (c, vars) in terms {
        if c.is_zero() {
            continue;
        }
        let sign = if c.is_negative() { "-" } else { "+" };
        if first {
            if c.is_negative() {
                f.write_str("-")?;
            }
        } else {
            write!(f, " {sign} ")?;
        }
        first = false;
        let mag = c.abs();
        let mono: Vec<String> = vars
            .iter()
            .filter(|(_, d)| *d > 0)
            .map(|(v, d)| {
                if *d == 1 {
                    v.to_string()
                } else {
                    format!("{v}^{d}")
                }
            })
            .collect();
        if mono.is_empty() {
            write!(f, "{mag}")?;
        } else if mag.is_one() {
            f.write_str(&mono.join(""))?;
        } else {
            write!(f, "{mag}{}", mono.join(""))?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

/// `base (base + 1) ... (base + n - 1)`, with the empty product 1.
pub fn rising_factorial<R>(base: &R, n: u32) -> R
where
    R: From<i64>,
    for<'a> &'a R: Add<&'a R, Output = R> + Mul<&'a R, Output = R>,
{
    (0..n).fold(R::from(1), |acc, i| &acc * &(base + &R::from(i as i64)))
}

/// `(x + y)_n` expanded.
pub fn rising_factorial_xy(n: u32) -> BivarPoly {
    rising_factorial(&(&BivarPoly::x() + &BivarPoly::y()), n)
}

/// Power series in `x` modulo `x^(cutoff + 1)`, coefficients polynomials in `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<IntPoly>,
}

impl TruncatedSeries {
    pub fn zero(cutoff: usize) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: vec![IntPoly::default(); cutoff + 1],
        }
    }

    pub fn one(cutoff: usize) -> TruncatedSeries {
        let mut s = TruncatedSeries::zero(cutoff);
        s.coeffs[0] = IntPoly::constant(1);
        s
    }

    /// Coefficients beyond the cutoff are dropped, missing ones are zero.
    pub fn from_coeffs(cutoff: usize, mut coeffs: Vec<IntPoly>) -> TruncatedSeries {
        coeffs.resize(cutoff + 1, IntPoly::default());
        TruncatedSeries { coeffs }
    }

    pub fn from_fn(cutoff: usize, f: impl FnMut(usize) -> IntPoly) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: (0..=cutoff).map(f).collect(),
        }
    }

    pub fn cutoff(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[IntPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, n: usize) -> &IntPoly {
        &self.coeffs[n]
    }

    /// Multiplies by `x`.
    pub fn shift(&self) -> TruncatedSeries {
        let mut coeffs = vec![IntPoly::default()];
        coeffs.extend(self.coeffs[..self.cutoff()].iter().cloned());
        TruncatedSeries { coeffs }
    }

    /// Multiplies every coefficient by `p`.
    pub fn scale(&self, p: &IntPoly) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
        }
    }

    pub fn add(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_cutoff(rhs);
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &TruncatedSeries) -> TruncatedSeries {
        self.check_cutoff(rhs);
        let n = self.cutoff();
        TruncatedSeries::from_fn(n, |m| {
            (0..=m).fold(IntPoly::default(), |acc, i| {
                &acc + &(&self.coeffs[i] * &rhs.coeffs[m - i])
            })
        })
    }

    /// `self / rhs`, solving `rhs * q = self` coefficient by coefficient.
    /// The constant coefficient of `rhs` must be the constant 1 or -1.
    pub fn div(&self, rhs: &TruncatedSeries) -> Result<TruncatedSeries> {
        self.check_cutoff(rhs);
        let lead = &rhs.coeffs[0];
        if !lead.is_unit() {
            return Err(Error::NonUnitDivisor);
        }
        let mut q: Vec<IntPoly> = Vec::with_capacity(self.coeffs.len());
        for m in 0..self.coeffs.len() {
            let mut acc = self.coeffs[m].clone();
            for i in 1..=m {
                acc = &acc - &(&rhs.coeffs[i] * &q[m - i]);
            }
            // dividing by +-1 is multiplying by it
            q.push(&acc * lead);
        }
        Ok(TruncatedSeries { coeffs: q })
    }

    /// Evaluates every coefficient at `t = t0`.
    pub fn specialize_t(&self, t0: i64) -> Vec<BigInt> {
        let at = BigInt::from(t0);
        self.coeffs.iter().map(|c| c.eval(&at)).collect()
    }

    fn check_cutoff(&self, rhs: &TruncatedSeries) {
        assert_eq!(self.cutoff(), rhs.cutoff(), "series with different cutoffs");
    }
}
