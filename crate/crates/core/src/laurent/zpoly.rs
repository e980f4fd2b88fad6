//! Dense univariate polynomials over the integers.

use std::fmt;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial in `Z[x]`, coefficients ascending, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ZPoly(Vec<BigInt>);

impl ZPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ZPoly(coeffs)
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = BigInt::one();
        ZPoly(v)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> BigInt {
        self.0.last().cloned().unwrap_or_default()
    }

    pub fn tc(&self) -> BigInt {
        self.0.first().cloned().unwrap_or_default()
    }

    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        ZPoly(self.0.iter().map(|x| x / &c).collect())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.0.iter().map(|x| x * c).collect())
    }

    pub fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.0.len().max(other.0.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.0.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.0.iter().enumerate() {
            v[i] += c;
        }
        Self::new(v)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        ZPoly(v)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.0
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact quotient over `Z`, or `None` if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        let dd = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let sd = self.degree()?;
        if sd < dd {
            return None;
        }
        // cheap filters first
        if !self.lc().is_multiple_of(&divisor.lc()) {
            return None;
        }
        let dt = divisor.tc();
        if !dt.is_zero() && !self.tc().is_multiple_of(&dt) {
            return None;
        }
        let lc = divisor.lc();
        let mut rem = self.0.clone();
        let mut quot = vec![BigInt::zero(); sd - dd + 1];
        for k in (0..=sd - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lc);
            if !r.is_zero() {
                return None;
            }
            for (i, c) in divisor.0.iter().enumerate() {
                rem[k + i] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::new(quot))
    }

    /// Pseudo-remainder `lc(d)^(deg f - deg d + 1) f mod d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        let dd = d.degree().expect("pseudo_rem by zero");
        let mut r = self.clone();
        let lc = d.lc();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let top = r.lc();
            let t = d.scale(&top).shift(rd - dd);
            r = r.scale(&lc).sub(&t);
        }
        r
    }

    /// Gcd via the primitive remainder sequence; result primitive with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        let (mut a, mut b) = (self.primitive(), other.primitive());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Square-free decomposition `f = c * Π a_i^i` (Yun); returns `(i, a_i)` for nonconstant `a_i`.
    pub fn square_free_decomposition(&self) -> Vec<(usize, ZPoly)> {
        let f = self.primitive();
        let mut out = Vec::new();
        if f.degree().unwrap_or(0) == 0 {
            return out;
        }
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides f");
        let c = df.div_exact(&a0).expect("gcd divides f'");
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((i, a.clone()));
            }
            b = b.div_exact(&a).expect("gcd divides b");
            let c = d.div_exact(&a).expect("gcd divides d");
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn max_norm(&self) -> BigInt {
        self.0.iter().map(|c| c.abs()).max().unwrap_or_default()
    }

    /// `ceil(||f||_2)`.
    pub fn norm2_ceil(&self) -> BigInt {
        let s: BigInt = self.0.iter().map(|c| c * c).sum();
        let r = s.sqrt();
        if &r * &r == s {
            r
        } else {
            r + 1
        }
    }

    /// Coefficients reduced to `[0, p)`.
    pub fn mod_p(&self, p: u64) -> Vec<u64> {
        let pb = BigInt::from(p);
        let mut v: Vec<u64> = self
            .0
            .iter()
            .map(|c| {
                let r = c.mod_floor(&pb);
                let (_, digits) = r.to_u64_digits();
                digits.first().copied().unwrap_or(0)
            })
            .collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }

    /// Coefficients reduced into the symmetric range `(-m/2, m/2]`.
    pub fn symmetric_mod(&self, m: &BigInt) -> Self {
        let half = m / 2;
        Self::new(
            self.0
                .iter()
                .map(|c| {
                    let r = c.mod_floor(m);
                    if r > half {
                        r - m
                    } else {
                        r
                    }
                })
                .collect(),
        )
    }

    pub fn is_negative_lc(&self) -> bool {
        self.lc().sign() == Sign::Minus
    }
}

impl fmt::Debug for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "Z[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn division_and_gcd() {
        let a = ZPoly::from_i64(&[2, -1]);
        let b = ZPoly::from_i64(&[1, -2]);
        let f = a.mul(&b);
        assert_eq!(f, ZPoly::from_i64(&[2, -5, 2]));
        assert_eq!(f.div_exact(&a), Some(b.clone()));
        assert_eq!(f.div_exact(&ZPoly::from_i64(&[1, 1])), None);
        let g = f.mul(&ZPoly::from_i64(&[1, 1])).gcd(&f.mul(&ZPoly::from_i64(&[3, 1])));
        assert_eq!(g, f.primitive());
    }

    #[test]
    fn yun_decomposition() {
        let a = ZPoly::from_i64(&[1, 1]);
        let b = ZPoly::from_i64(&[-2, 0, 1]);
        let f = a.mul(&b).mul(&b).mul(&b).mul(&ZPoly::from_i64(&[5, 0, 0, 1]));
        let dec = f.square_free_decomposition();
        let idx: Vec<usize> = dec.iter().map(|(i, _)| *i).collect();
        assert_eq!(idx, vec![1, 3]);
        assert_eq!(dec[1].1, b);
        assert_eq!(dec[0].1, a.mul(&ZPoly::from_i64(&[5, 0, 0, 1])));
    }
}
