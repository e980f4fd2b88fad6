//! Factorizability verdicts for univariate and bivariate Laurent polynomials.
//!
//! Integer content is never counted as a factor: `2 - 2x` is irreducible with
//! content 2. Units of the Laurent ring (`±monomial`) are never witnesses.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use super::zassenhaus::{factor_primitive, first_good_prime, factor_square_free};
use super::zpoly::ZPoly;
use super::{Exp, LaurentError, LaurentPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FactorStatus {
    Factorizable,
    Irreducible,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorVerdict {
    pub status: FactorStatus,
    /// Two non-unit factors whose product is exactly the input.
    pub witness: Option<(LaurentPoly, LaurentPoly)>,
    /// Integer content of the input, reported separately.
    pub content: BigInt,
    pub note: Option<String>,
}

impl FactorVerdict {
    fn irreducible(content: BigInt, note: Option<String>) -> Self {
        FactorVerdict { status: FactorStatus::Irreducible, witness: None, content, note }
    }

    fn unknown(content: BigInt, note: impl Into<String>) -> Self {
        FactorVerdict { status: FactorStatus::Unknown, witness: None, content, note: Some(note.into()) }
    }

    fn factorizable(input: &LaurentPoly, factor: LaurentPoly, content: BigInt) -> Self {
        let cofactor = input.div_exact(&factor).expect("witness factor divides input");
        FactorVerdict {
            status: FactorStatus::Factorizable,
            witness: Some((factor, cofactor)),
            content,
            note: None,
        }
    }

    pub fn is_factorizable(&self) -> bool {
        self.status == FactorStatus::Factorizable
    }
}

fn content_note(content: &BigInt) -> Option<String> {
    (!content.is_one()).then(|| format!("integer content {content} not counted as a factor"))
}

/// Per-variable scale between the cleared integer exponents and stored doubled exponents:
/// 2 when the variable has only integer exponents, 1 when it has half-integer ones.
fn exponent_scales(p: &LaurentPoly) -> [i64; 2] {
    let mut s = [2, 2];
    for (i, slot) in s.iter_mut().enumerate().take(p.vars().arity()) {
        if p.has_half_exponents(i) {
            *slot = 1;
        }
    }
    s
}

/// Cleared, shifted exponents: every term `(a, b)` has `a, b ≥ 0` and each variable attains 0.
fn cleared_terms(p: &LaurentPoly) -> (BTreeMap<[i64; 2], BigInt>, [i64; 2], [i64; 2]) {
    let scales = exponent_scales(p);
    let arity = p.vars().arity();
    let mut low = [0i64; 2];
    for (i, l) in low.iter_mut().enumerate().take(arity) {
        *l = p.min_doubled(i);
    }
    let terms = p
        .terms()
        .map(|(e, c)| {
            let mut k = [0i64; 2];
            for i in 0..arity {
                k[i] = (e[i] - low[i]) / scales[i];
            }
            (k, c.clone())
        })
        .collect();
    (terms, low, scales)
}

fn uncleared(p: &LaurentPoly, terms: impl IntoIterator<Item = ([i64; 2], BigInt)>, scales: [i64; 2]) -> LaurentPoly {
    LaurentPoly::from_doubled(
        p.vars(),
        terms.into_iter().map(|(k, c)| {
            let e: Exp = [k[0] * scales[0], k[1] * scales[1]];
            (e, c)
        }),
    )
}

/// Factorizability of a univariate Laurent polynomial. Never returns `Unknown`
/// unless the recombination budget is exhausted.
pub fn factor_univariate(p: &LaurentPoly) -> Result<FactorVerdict, LaurentError> {
    if p.vars().arity() != 1 {
        return Err(LaurentError::Arity { expected: 1, found: p.vars().arity() });
    }
    if p.is_zero() {
        return Err(LaurentError::Zero);
    }
    let content = p.content();
    let (terms, _, scales) = cleared_terms(p);
    let deg = terms.keys().map(|k| k[0]).max().unwrap_or(0) as usize;
    if deg == 0 {
        let note = if content.is_one() {
            "unit of the Laurent ring".to_string()
        } else {
            format!("monomial with integer content {content}")
        };
        return Ok(FactorVerdict::irreducible(content, Some(note)));
    }
    let mut coeffs = vec![BigInt::zero(); deg + 1];
    for (k, c) in &terms {
        coeffs[k[0] as usize] = c.clone();
    }
    let f = ZPoly::new(coeffs).primitive();
    let to_laurent = |g: &ZPoly| -> LaurentPoly {
        uncleared(
            p,
            g.coeffs().iter().enumerate().map(|(i, c)| ([i as i64, 0], c.clone())),
            scales,
        )
    };
    if deg == 1 {
        return Ok(FactorVerdict::irreducible(content.clone(), content_note(&content)));
    }
    if first_good_prime(&f).is_none() {
        if let Some((_, part)) = f.square_free_decomposition().into_iter().find(|(m, _)| *m > 1) {
            return Ok(FactorVerdict::factorizable(p, to_laurent(&part), content));
        }
    }
    let factors = match factor_square_free(&f) {
        Ok(fs) => fs,
        Err(LaurentError::Budget) => return Ok(FactorVerdict::unknown(content, "recombination budget exhausted")),
        Err(e) => return Err(e),
    };
    if factors.len() > 1 {
        Ok(FactorVerdict::factorizable(p, to_laurent(&factors[0]), content))
    } else {
        Ok(FactorVerdict::irreducible(content.clone(), content_note(&content)))
    }
}

/// Largest number of irreducible univariate factors whose subsets are searched
/// when lifting a Kronecker image back to two variables.
const KRONECKER_MAX_FACTORS: usize = 16;

const EVALUATION_POINTS: [i64; 8] = [2, -2, 3, -3, 5, -5, 7, 11];

/// Factorizability of a bivariate Laurent polynomial. Returns `Unknown` rather
/// than a verdict it cannot certify.
pub fn factor_bivariate(p: &LaurentPoly) -> Result<FactorVerdict, LaurentError> {
    if p.vars().arity() != 2 {
        return Err(LaurentError::Arity { expected: 2, found: p.vars().arity() });
    }
    if p.is_zero() {
        return Err(LaurentError::Zero);
    }
    let content = p.content();
    let (terms, _, scales) = cleared_terms(p);
    let f: BTreeMap<[i64; 2], BigInt> = terms.into_iter().map(|(k, c)| (k, c / &content)).collect();
    let deg = [0, 1].map(|i| f.keys().map(|k| k[i]).max().unwrap_or(0));
    if deg == [0, 0] {
        let note = if content.is_one() {
            "unit of the Laurent ring".to_string()
        } else {
            format!("monomial with integer content {content}")
        };
        return Ok(FactorVerdict::irreducible(content, Some(note)));
    }
    let back = |h: &BTreeMap<[i64; 2], BigInt>| uncleared(p, h.iter().map(|(k, c)| (*k, c.clone())), scales);

    // one variable only
    for i in 0..2 {
        if deg[1 - i] == 0 {
            let mut coeffs = vec![BigInt::zero(); deg[i] as usize + 1];
            for (k, c) in &f {
                coeffs[k[i] as usize] = c.clone();
            }
            let g = ZPoly::new(coeffs).primitive();
            let fs = match factor_primitive(&g) {
                Ok(fs) => fs,
                Err(LaurentError::Budget) => return Ok(FactorVerdict::unknown(content, "recombination budget exhausted")),
                Err(e) => return Err(e),
            };
            let total: usize = fs.iter().map(|(_, m)| m).sum();
            if total > 1 {
                let h: BTreeMap<[i64; 2], BigInt> = fs[0]
                    .0
                    .coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .map(|(j, c)| {
                        let mut k = [0i64; 2];
                        k[i] = j as i64;
                        (k, c.clone())
                    })
                    .collect();
                return Ok(FactorVerdict::factorizable(p, back(&h), content));
            }
            return Ok(FactorVerdict::irreducible(content.clone(), content_note(&content)));
        }
    }

    // content with respect to each variable
    for i in 0..2 {
        let cont = variable_content(&f, i);
        if cont.degree().unwrap_or(0) > 0 {
            let h: BTreeMap<[i64; 2], BigInt> = cont
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(j, c)| {
                    let mut k = [0i64; 2];
                    k[1 - i] = j as i64;
                    (k, c.clone())
                })
                .collect();
            return Ok(FactorVerdict::factorizable(p, back(&h), content));
        }
    }

    // irreducibility certificate by specialization
    for i in 0..2 {
        for &c in &EVALUATION_POINTS {
            if let Some(true) = specialization_is_irreducible(&f, i, c, deg[i]) {
                return Ok(FactorVerdict::irreducible(content.clone(), content_note(&content)));
            }
        }
    }

    match kronecker_search(&f, deg) {
        KroneckerOutcome::Factor(h) => Ok(FactorVerdict::factorizable(p, back(&h), content)),
        KroneckerOutcome::Exhausted => Ok(FactorVerdict::irreducible(content.clone(), content_note(&content))),
        KroneckerOutcome::GaveUp(why) => Ok(FactorVerdict::unknown(content, why)),
    }
}

/// Coefficients of `f` viewed as a polynomial in variable `i`, each in `Z[other]`.
fn coefficient_polys(f: &BTreeMap<[i64; 2], BigInt>, i: usize) -> BTreeMap<i64, ZPoly> {
    let mut by: BTreeMap<i64, BTreeMap<i64, BigInt>> = BTreeMap::new();
    for (k, c) in f {
        by.entry(k[i]).or_default().insert(k[1 - i], c.clone());
    }
    by.into_iter()
        .map(|(d, m)| {
            let top = *m.keys().max().unwrap_or(&0) as usize;
            let mut v = vec![BigInt::zero(); top + 1];
            for (j, c) in m {
                v[j as usize] = c;
            }
            (d, ZPoly::new(v))
        })
        .collect()
}

/// Gcd in `Z[other]` of the coefficients of `f` as a polynomial in variable `i`.
fn variable_content(f: &BTreeMap<[i64; 2], BigInt>, i: usize) -> ZPoly {
    coefficient_polys(f, i).values().fold(ZPoly::zero(), |g, c| g.gcd(c))
}

/// Substitutes `other = c` and reports whether the result, a polynomial in
/// variable `i` of unchanged degree and nonzero constant term, is irreducible.
fn specialization_is_irreducible(f: &BTreeMap<[i64; 2], BigInt>, i: usize, c: i64, deg: i64) -> Option<bool> {
    let cb = BigInt::from(c);
    let coeffs = coefficient_polys(f, i);
    let mut v = vec![BigInt::zero(); deg as usize + 1];
    for (d, poly) in &coeffs {
        v[*d as usize] = poly.eval(&cb);
    }
    if v[0].is_zero() || v[deg as usize].is_zero() {
        return None;
    }
    let g = ZPoly::new(v).primitive();
    if g.degree() == Some(1) {
        return Some(true);
    }
    first_good_prime(&g)?;
    factor_square_free(&g).ok().map(|fs| fs.len() == 1)
}

enum KroneckerOutcome {
    Factor(BTreeMap<[i64; 2], BigInt>),
    Exhausted,
    GaveUp(String),
}

/// Substitutes `second = first^D` with `D > 2 deg(first)`, factors the image
/// completely and tries every subset product as a bivariate factor.
fn kronecker_search(f: &BTreeMap<[i64; 2], BigInt>, deg: [i64; 2]) -> KroneckerOutcome {
    // keep the lower-degree variable as the base so the image stays small
    let base = if deg[0] <= deg[1] { 0 } else { 1 };
    let other = 1 - base;
    let db = deg[base];
    let d = 2 * db + 1;
    let top = (db + d * deg[other]) as usize;
    let mut coeffs = vec![BigInt::zero(); top + 1];
    for (k, c) in f {
        coeffs[(k[base] + d * k[other]) as usize] = c.clone();
    }
    let image = ZPoly::new(coeffs);
    let low = image.coeffs().iter().position(|c| !c.is_zero()).unwrap_or(0);
    let stripped = ZPoly::new(image.coeffs()[low..].to_vec()).primitive();
    let factors = match factor_primitive(&stripped) {
        Ok(fs) => fs,
        Err(_) => return KroneckerOutcome::GaveUp("univariate factorization of Kronecker image failed".into()),
    };
    let list: Vec<ZPoly> = factors
        .into_iter()
        .flat_map(|(g, m)| std::iter::repeat_n(g, m))
        .collect();
    let r = list.len();
    if r > KRONECKER_MAX_FACTORS {
        return KroneckerOutcome::GaveUp(format!("Kronecker image has {r} factors"));
    }
    let full = f.clone();
    let lex = |m: &BTreeMap<[i64; 2], BigInt>| -> LaurentPoly {
        LaurentPoly::from_terms(
            super::Vars::two("u", "w"),
            m.iter().map(|(k, c)| (vec![k[0], k[1]], c.clone())),
        )
    };
    let target = lex(&full);
    for mask in 1u32..(1u32 << r) - 1 {
        let prod = (0..r)
            .filter(|b| mask & (1 << b) != 0)
            .fold(ZPoly::one(), |acc, b| acc.mul(&list[b]));
        for shift in 0..=low {
            let cand = prod.shift(shift);
            let mut h: BTreeMap<[i64; 2], BigInt> = BTreeMap::new();
            let mut ok = true;
            for (e, c) in cand.coeffs().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let e = e as i64;
                let (a, b) = (e % d, e / d);
                if a > db || b > deg[other] {
                    ok = false;
                    break;
                }
                let mut k = [0i64; 2];
                k[base] = a;
                k[other] = b;
                h.insert(k, c.clone());
            }
            if !ok || h.len() < 2 {
                continue;
            }
            let hp = lex(&h);
            if let Some(q) = target.div_exact(&hp) {
                if !q.is_monomial() {
                    return KroneckerOutcome::Factor(h);
                }
            }
        }
    }
    KroneckerOutcome::Exhausted
}

#[cfg(test)]
mod tests {
    use super::super::Vars;
    use super::*;

    const X: Vars = Vars::one("x");
    const VZ: Vars = Vars::two("v", "z");

    fn p(low: i64, c: &[i64]) -> LaurentPoly {
        LaurentPoly::from_coeffs(X, low, c.iter().copied())
    }

    fn check_witness(input: &LaurentPoly, v: &FactorVerdict) {
        let (a, b) = v.witness.as_ref().expect("witness");
        assert_eq!(&(a * b), input);
        assert!(!a.is_unit() && !b.is_unit());
    }

    #[test]
    fn alexander_pretzel_value_factors() {
        let f = p(0, &[2, -5, 2]);
        let v = factor_univariate(&f).unwrap();
        assert_eq!(v.status, FactorStatus::Factorizable);
        check_witness(&f, &v);
        let (a, b) = v.witness.unwrap();
        let lin = [p(0, &[2, -1]), p(0, &[1, -2]), p(0, &[-2, 1]), p(0, &[-1, 2])];
        assert!(lin.contains(&a.normalize_unit()) || lin.contains(&a));
        assert_eq!(a.len(), 2);
        assert_eq!(b.len(), 2);
    }

    #[test]
    fn univariate_edge_cases() {
        assert_eq!(factor_univariate(&p(0, &[1, 1, 1])).unwrap().status, FactorStatus::Irreducible);
        let unit = factor_univariate(&p(1, &[1])).unwrap();
        assert_eq!(unit.status, FactorStatus::Irreducible);
        assert!(unit.note.unwrap().contains("unit"));
        let c = factor_univariate(&p(0, &[2, -2])).unwrap();
        assert_eq!(c.status, FactorStatus::Irreducible);
        assert_eq!(c.content, BigInt::from(2));
        assert!(matches!(factor_univariate(&LaurentPoly::zero(X)), Err(LaurentError::Zero)));
    }

    #[test]
    fn half_exponents_are_cleared() {
        // t^(-1/2) (1 + t)(1 - t + t^2): factors after s = t^(1/2)
        let t = Vars::one("t");
        let q = LaurentPoly::from_doubled(t, [([-1, 0], BigInt::one()), ([5, 0], BigInt::one())]);
        let v = factor_univariate(&q).unwrap();
        assert_eq!(v.status, FactorStatus::Factorizable);
        check_witness(&q, &v);
    }

    #[test]
    fn repeated_factor() {
        let f = p(0, &[1, 2, 1]);
        let v = factor_univariate(&f).unwrap();
        assert_eq!(v.status, FactorStatus::Factorizable);
        check_witness(&f, &v);
    }

    #[test]
    fn bivariate_examples() {
        let one_v = LaurentPoly::from_terms(VZ, [(vec![0, 0], 1), (vec![1, 0], 1)]);
        let one_z = LaurentPoly::from_terms(VZ, [(vec![0, 0], 1), (vec![0, 1], 1)]);
        let prod = &one_v * &one_z;
        let v = factor_bivariate(&prod).unwrap();
        assert_eq!(v.status, FactorStatus::Factorizable);
        check_witness(&prod, &v);

        let sum = LaurentPoly::from_terms(VZ, [(vec![0, 0], 1), (vec![1, 0], 1), (vec![0, 1], 1)]);
        assert_ne!(factor_bivariate(&sum).unwrap().status, FactorStatus::Factorizable);

        let five = LaurentPoly::constant(VZ, 5);
        let v = factor_bivariate(&five).unwrap();
        assert_eq!(v.status, FactorStatus::Irreducible);
        assert_eq!(v.content, BigInt::from(5));
    }

    #[test]
    fn bivariate_entangled_product_found() {
        // (v + z + v z^2)(1 - v^2 z + z^3) has trivial contents and is found by Kronecker lifting
        let a = LaurentPoly::from_terms(VZ, [(vec![1, 0], 1), (vec![0, 1], 1), (vec![1, 2], 1)]);
        let b = LaurentPoly::from_terms(VZ, [(vec![0, 0], 1), (vec![2, 1], -1), (vec![0, 3], 1)]);
        let prod = (&a * &b).shift(&[-3, 2]);
        let v = factor_bivariate(&prod).unwrap();
        assert_eq!(v.status, FactorStatus::Factorizable);
        check_witness(&prod, &v);
    }
}
