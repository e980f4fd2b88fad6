//! Exact Laurent polynomials in one or two variables with integer coefficients.
//!
//! Exponents are stored doubled, so a term `t^(3/2)` is kept as exponent `3`.
//! Every invariant in this crate is a [`LaurentPoly`], and its canonical
//! serialization is the grouping key used by the collision experiments.

mod factor;
mod modp;
mod zassenhaus;
mod zpoly;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use factor::{factor_bivariate, factor_univariate, FactorStatus, FactorVerdict};
pub use zpoly::ZPoly;

/// Doubled exponent vector; the second slot is unused (always 0) for univariate polynomials.
pub type Exp = [i64; 2];

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("variable mismatch: {0} vs {1}")]
    VariableMismatch(Vars, Vars),
    #[error("zero polynomial")]
    Zero,
    #[error("expected {expected} variable(s), found {found}")]
    Arity { expected: usize, found: usize },
    #[error("cannot substitute a non-monomial for a negative or fractional power of {0}")]
    NonInvertibleImage(&'static str),
    #[error("factorization budget exhausted")]
    Budget,
}

/// Ordered list of one or two variable names.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vars {
    names: [&'static str; 2],
    arity: usize,
}

impl Vars {
    pub const fn one(name: &'static str) -> Self {
        Vars { names: [name, ""], arity: 1 }
    }

    pub const fn two(first: &'static str, second: &'static str) -> Self {
        Vars { names: [first, second], arity: 2 }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn names(&self) -> &[&'static str] {
        &self.names[..self.arity]
    }

    pub fn name(&self, i: usize) -> &'static str {
        self.names[i]
    }
}

impl fmt::Display for Vars {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.names().join(","))
    }
}

/// Exact Laurent polynomial. No stored coefficient is zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: Vars,
    terms: BTreeMap<Exp, BigInt>,
}

impl LaurentPoly {
    pub fn zero(vars: Vars) -> Self {
        LaurentPoly { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: Vars) -> Self {
        Self::constant(vars, 1)
    }

    pub fn constant(vars: Vars, c: impl Into<BigInt>) -> Self {
        Self::from_doubled(vars, [([0, 0], c.into())])
    }

    /// `c * x1^e1 * x2^e2` with integer exponents.
    pub fn monomial(vars: Vars, c: impl Into<BigInt>, exps: &[i64]) -> Self {
        let mut e = [0i64; 2];
        for (slot, x) in e.iter_mut().zip(exps) {
            *slot = 2 * x;
        }
        Self::from_doubled(vars, [(e, c.into())])
    }

    /// The `i`-th variable as a polynomial.
    pub fn var(vars: Vars, i: usize) -> Self {
        let mut e = [0i64; 2];
        e[i] = 2;
        Self::from_doubled(vars, [(e, BigInt::one())])
    }

    /// Builds from terms with integer exponents; repeated exponents are summed.
    pub fn from_terms<I, C>(vars: Vars, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, C)>,
        C: Into<BigInt>,
    {
        Self::from_doubled(
            vars,
            terms.into_iter().map(|(e, c)| {
                let mut d = [0i64; 2];
                for (slot, x) in d.iter_mut().zip(&e) {
                    *slot = 2 * x;
                }
                (d, c.into())
            }),
        )
    }

    /// Univariate polynomial from ascending integer coefficients starting at `x^low`.
    pub fn from_coeffs<C: Into<BigInt>>(vars: Vars, low: i64, coeffs: impl IntoIterator<Item = C>) -> Self {
        Self::from_doubled(
            vars,
            coeffs
                .into_iter()
                .enumerate()
                .map(|(i, c)| ([2 * (low + i as i64), 0], c.into())),
        )
    }

    /// Builds from terms whose exponents are already doubled.
    pub fn from_doubled<I: IntoIterator<Item = (Exp, BigInt)>>(vars: Vars, terms: I) -> Self {
        let mut map: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (mut e, c) in terms {
            if vars.arity == 1 {
                e[1] = 0;
            }
            if c.is_zero() {
                continue;
            }
            *map.entry(e).or_insert_with(BigInt::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly { vars, terms: map }
    }

    pub fn vars(&self) -> Vars {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&[0, 0]).is_some_and(|c| c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical (ascending lexicographic) order, exponents doubled.
    pub fn terms(&self) -> impl Iterator<Item = (&Exp, &BigInt)> {
        self.terms.iter()
    }

    /// Coefficient at the given doubled exponent.
    pub fn coeff_doubled(&self, e: Exp) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// Coefficient at integer exponents.
    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        let mut e = [0i64; 2];
        for (slot, x) in e.iter_mut().zip(exps) {
            *slot = 2 * x;
        }
        self.coeff_doubled(e)
    }

    /// `true` for `±c·monomial` with `c` any nonzero integer.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// `true` for units of the Laurent ring: `±monomial`.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    /// `true` if some exponent of variable `i` is a half-odd integer.
    pub fn has_half_exponents(&self, i: usize) -> bool {
        self.terms.keys().any(|e| e[i] % 2 != 0)
    }

    /// Minimal doubled exponent of variable `i` (0 for the zero polynomial).
    pub fn min_doubled(&self, i: usize) -> i64 {
        self.terms.keys().map(|e| e[i]).min().unwrap_or(0)
    }

    pub fn max_doubled(&self, i: usize) -> i64 {
        self.terms.keys().map(|e| e[i]).max().unwrap_or(0)
    }

    fn check_vars(&self, other: &Self) -> Result<(), LaurentError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(LaurentError::VariableMismatch(self.vars, other.vars))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_vars(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            *terms.entry(*e).or_insert_with(BigInt::zero) += c;
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { vars: self.vars, terms })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_vars(other)?;
        let mut terms: BTreeMap<Exp, BigInt> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = [ea[0] + eb[0], ea[1] + eb[1]];
                *terms.entry(e).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Ok(LaurentPoly { vars: self.vars, terms })
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        LaurentPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect(),
        }
    }

    /// Multiplies by the monomial with the given doubled exponent.
    pub fn shift_doubled(&self, by: Exp) -> Self {
        LaurentPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| ([e[0] + by[0], e[1] + by[1]], c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `x1^e1 x2^e2` with integer exponents.
    pub fn shift(&self, exps: &[i64]) -> Self {
        let mut by = [0i64; 2];
        for (slot, x) in by.iter_mut().zip(exps) {
            *slot = 2 * x;
        }
        self.shift_doubled(by)
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a unit `±monomial`.
    pub fn inverse_unit(&self) -> Option<Self> {
        if !self.is_unit() {
            return None;
        }
        let (e, c) = self.terms.iter().next()?;
        Some(Self::from_doubled(self.vars, [([-e[0], -e[1]], c.clone())]))
    }

    /// Multiplies by a unit `±x^k` so the minimal exponent is 0 and the
    /// constant coefficient is positive. Univariate only; zero is returned unchanged.
    pub fn normalize_unit(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let low = self.min_doubled(0);
        let shifted = self.shift_doubled([-low, 0]);
        if shifted.coeff_doubled([0, 0]).is_negative() {
            -shifted
        } else {
            shifted
        }
    }

    /// Renames the variables without touching the terms.
    pub fn with_vars(&self, vars: Vars) -> Result<Self, LaurentError> {
        if vars.arity != self.vars.arity {
            return Err(LaurentError::Arity { expected: self.vars.arity, found: vars.arity });
        }
        Ok(LaurentPoly { vars, terms: self.terms.clone() })
    }

    /// Replaces variable `i` by `images[i]`. Negative or half-integer powers are
    /// allowed only when the image is a monomial (whose exponents must be even
    /// for half powers).
    pub fn substitute(&self, images: &[LaurentPoly]) -> Result<Self, LaurentError> {
        if images.len() != self.vars.arity {
            return Err(LaurentError::Arity { expected: self.vars.arity, found: images.len() });
        }
        let target = images[0].vars;
        for img in images {
            if img.vars != target {
                return Err(LaurentError::VariableMismatch(target, img.vars));
            }
        }
        let mut acc = Self::zero(target);
        let mut pow_cache: Vec<BTreeMap<i64, LaurentPoly>> = vec![BTreeMap::new(); images.len()];
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, img) in images.iter().enumerate() {
                let factor = match pow_cache[i].get(&e[i]) {
                    Some(p) => p.clone(),
                    None => {
                        let p = power_doubled(img, e[i])
                            .ok_or(LaurentError::NonInvertibleImage(self.vars.names[i]))?;
                        pow_cache[i].insert(e[i], p.clone());
                        p
                    }
                };
                term = &term * &factor;
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Exact quotient `self / divisor` in the Laurent ring, if it exists.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if self.vars != divisor.vars || divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(self.clone());
        }
        let arity = self.vars.arity;
        let mut lo = [0i64; 2];
        let mut hi = [0i64; 2];
        for i in 0..arity {
            lo[i] = self.min_doubled(i) - divisor.min_doubled(i);
            hi[i] = self.max_doubled(i) - divisor.max_doubled(i);
            if lo[i] > hi[i] {
                return None;
            }
        }
        let (lead_e, lead_c) = divisor.terms.iter().next_back()?;
        let mut rem = self.clone();
        let mut quot: BTreeMap<Exp, BigInt> = BTreeMap::new();
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            let qe = [re[0] - lead_e[0], re[1] - lead_e[1]];
            if (0..arity).any(|i| qe[i] < lo[i] || qe[i] > hi[i]) {
                return None;
            }
            let (qc, r) = rc.div_rem(lead_c);
            if !r.is_zero() {
                return None;
            }
            let step = Self::from_doubled(self.vars, [(qe, qc.clone())]);
            rem = &rem - &(&step * divisor);
            quot.insert(qe, qc);
        }
        Some(LaurentPoly { vars: self.vars, terms: quot })
    }

    /// Gcd of all coefficients, nonnegative.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Evaluates at `t = -1` style sign substitutions: variable `i` maps to `sign * var_i`.
    pub fn flip_sign(&self, i: usize) -> Self {
        LaurentPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    // odd integer exponent flips sign; half exponents are rejected by callers
                    let k = e[i] / 2;
                    (*e, if k % 2 != 0 { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// Replaces variable `i` by its inverse.
    pub fn invert_var(&self, i: usize) -> Self {
        LaurentPoly {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = *e;
                    e[i] = -e[i];
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Canonical serialization: terms ascending, `c*v1^e1[*v2^e2]` joined by ` + `.
    pub fn serialize(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                out.push_str(" + ");
            }
            out.push_str(&c.to_string());
            for i in 0..self.vars.arity {
                out.push('*');
                out.push_str(self.vars.names[i]);
                out.push('^');
                out.push_str(&format_exp(e[i]));
            }
        }
        out
    }

    /// Human-readable form, e.g. `2 - 5x + 2x^2`.
    pub fn pretty(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let mono: String = (0..self.vars.arity)
                .filter(|&i| e[i] != 0)
                .map(|i| {
                    if e[i] == 2 {
                        self.vars.names[i].to_string()
                    } else {
                        format!("{}^{}", self.vars.names[i], format_exp(e[i]))
                    }
                })
                .collect();
            let mag = c.abs();
            let body = if mono.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                mono
            } else {
                format!("{mag}{mono}")
            };
            match (k, c.is_negative()) {
                (0, true) => out.push_str(&format!("-{body}")),
                (0, false) => out.push_str(&body),
                (_, true) => out.push_str(&format!(" - {body}")),
                (_, false) => out.push_str(&format!(" + {body}")),
            }
        }
        out
    }
}

fn format_exp(doubled: i64) -> String {
    if doubled % 2 == 0 {
        (doubled / 2).to_string()
    } else {
        format!("{doubled}/2")
    }
}

/// `img^(d/2)`.
fn power_doubled(img: &LaurentPoly, d: i64) -> Option<LaurentPoly> {
    if d >= 0 && d % 2 == 0 {
        return Some(img.pow((d / 2) as u32));
    }
    if !img.is_monomial() {
        return None;
    }
    let (e, c) = img.terms.iter().next()?;
    if d % 2 != 0 {
        // half power of a monomial: coefficient must be 1 and exponents even
        if !c.is_one() || e.iter().any(|x| x % 2 != 0) {
            return None;
        }
        return Some(LaurentPoly::from_doubled(img.vars, [([e[0] / 2 * d, e[1] / 2 * d], c.clone())]));
    }
    let k = d / 2;
    if k < 0 && !c.abs().is_one() {
        return None;
    }
    let coeff = num_traits::pow(c.clone(), k.unsigned_abs() as usize);
    Some(LaurentPoly::from_doubled(img.vars, [([e[0] * k, e[1] * k], coeff)]))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.serialize())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.pretty())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars,
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

// Operator impls panic on a variable mismatch; use the `checked_*` methods to recover.
macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("Laurent polynomial variable mismatch")
            }
        }
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

#[cfg(test)]
mod tests {
    use super::*;

    const X: Vars = Vars::one("x");

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(X, low, c.iter().copied())
    }

    #[test]
    fn add_cancels_and_assembles() {
        assert!((p(0, &[1, -1]) + p(1, &[1])).is_one());
        assert_eq!(LaurentPoly::zero(X) + p(0, &[3, 4]), p(0, &[3, 4]));
        assert_eq!(p(0, &[2, -5]) + p(2, &[2]), p(0, &[2, -5, 2]));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p(0, &[2, -1]) * p(0, &[1, -2]), p(0, &[2, -5, 2]));
        assert_eq!(p(0, &[2, -1]) * LaurentPoly::one(X), p(0, &[2, -1]));
        assert!((p(-1, &[1]) * p(1, &[1])).is_one());
    }

    #[test]
    fn mismatch_is_an_error() {
        let a = LaurentPoly::one(X);
        let b = LaurentPoly::one(Vars::one("t"));
        assert!(matches!(a.checked_add(&b), Err(LaurentError::VariableMismatch(..))));
        assert!(a.checked_mul(&b).is_err());
    }

    #[test]
    fn normalize_unit_examples() {
        // x^-2 * (2 - 5x + 2x^2) * (-1)
        let q = -p(-2, &[2, -5, 2]);
        assert_eq!(q.normalize_unit(), p(0, &[2, -5, 2]));
        assert!(LaurentPoly::one(X).normalize_unit().is_one());
        assert!(p(7, &[1]).normalize_unit().is_one());
        assert!(LaurentPoly::zero(X).normalize_unit().is_zero());
    }

    #[test]
    fn serialization_format() {
        assert_eq!(p(0, &[2, -5, 2]).serialize(), "2*x^0 + -5*x^1 + 2*x^2");
        let half = LaurentPoly::from_doubled(Vars::one("t"), [([-3, 0], BigInt::from(-1)), ([1, 0], BigInt::from(1))]);
        assert_eq!(half.serialize(), "-1*t^-3/2 + 1*t^1/2");
        let two = LaurentPoly::from_terms(Vars::two("v", "z"), [(vec![-1, 1], 1), (vec![1, -1], -2)]);
        assert_eq!(two.serialize(), "1*v^-1*z^1 + -2*v^1*z^-1");
        assert_eq!(LaurentPoly::zero(X).serialize(), "0");
        assert_eq!(p(0, &[2, -5, 2]).pretty(), "2 - 5x + 2x^2");
    }

    #[test]
    fn exact_division() {
        let f = p(0, &[2, -5, 2]);
        assert_eq!(f.div_exact(&p(0, &[2, -1])), Some(p(0, &[1, -2])));
        assert_eq!(f.div_exact(&p(0, &[1, 1])), None);
        let vz = Vars::two("v", "z");
        let a = LaurentPoly::from_terms(vz, [(vec![0, 0], 1), (vec![1, 0], 1)]);
        let b = LaurentPoly::from_terms(vz, [(vec![0, 0], 1), (vec![0, 1], 1)]);
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&(&a + &b)), None);
    }

    #[test]
    fn substitution_with_half_powers() {
        let t = Vars::one("t");
        // z -> t^(1/2) - t^(-1/2), then z^2 = t - 2 + t^-1
        let z_img = LaurentPoly::from_doubled(t, [([1, 0], BigInt::one()), ([-1, 0], BigInt::from(-1))]);
        let z2 = LaurentPoly::from_terms(Vars::one("z"), [(vec![2], 1)]);
        assert_eq!(z2.substitute(&[z_img.clone()]).unwrap(), LaurentPoly::from_coeffs(t, -1, [1, -2, 1]));
        let zinv = LaurentPoly::from_terms(Vars::one("z"), [(vec![-1], 1)]);
        assert!(zinv.substitute(&[z_img]).is_err());
        let a = LaurentPoly::from_terms(Vars::one("A"), [(vec![-4], 1)]);
        let img = LaurentPoly::from_doubled(t, [([-1, 0], BigInt::one())]);
        assert_eq!(a.substitute(&[img]).unwrap(), LaurentPoly::monomial(t, 1, &[2]));
    }
}
