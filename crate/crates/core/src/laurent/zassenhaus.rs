//! Complete factorization in `Z[x]`: modular factorization, quadratic Hensel
//! lifting and subset recombination with exact trial division.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::modp::{Fp, FpPoly};
use super::zpoly::ZPoly;
use super::LaurentError;

/// Upper bound on the number of recombination candidates tried before giving up.
pub const RECOMBINATION_BUDGET: usize = 2_000_000;

const SMALL_PRIMES: [u64; 30] = [
    3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
    109, 113, 127,
];

/// How many admissible primes are tried when choosing the one with the fewest modular factors.
const PRIME_CANDIDATES: usize = 3;

/// Returns the first small prime (in increasing order) that does not divide the
/// leading or trailing coefficient and keeps `f` square-free; `None` if none works.
pub fn first_good_prime(f: &ZPoly) -> Option<u64> {
    good_primes(f).next()
}

fn good_primes(f: &ZPoly) -> impl Iterator<Item = u64> + '_ {
    let lc = f.lc();
    let tc = f.tc();
    SMALL_PRIMES.iter().copied().filter(move |&p| {
        let pb = BigInt::from(p);
        if lc.is_multiple_of(&pb) || (!tc.is_zero() && tc.is_multiple_of(&pb)) {
            return false;
        }
        Fp::new(p).is_square_free(&f.mod_p(p))
    })
}

/// Complete factorization of a primitive polynomial with positive leading coefficient,
/// nonzero constant term and degree ≥ 1. Factors come with multiplicities.
pub fn factor_primitive(f: &ZPoly) -> Result<Vec<(ZPoly, usize)>, LaurentError> {
    if first_good_prime(f).is_some() {
        return Ok(factor_square_free(f)?.into_iter().map(|g| (g, 1)).collect());
    }
    let mut out = Vec::new();
    for (mult, part) in f.square_free_decomposition() {
        for g in factor_square_free(&part)? {
            out.push((g, mult));
        }
    }
    Ok(out)
}

/// Irreducible factors of a primitive square-free `f` with `deg f ≥ 1`.
pub fn factor_square_free(f: &ZPoly) -> Result<Vec<ZPoly>, LaurentError> {
    let n = f.degree().unwrap_or(0);
    if n <= 1 {
        return Ok(vec![f.primitive()]);
    }
    let mut best: Option<(u64, Vec<FpPoly>)> = None;
    let mut feasible: Option<Vec<bool>> = None;
    for p in good_primes(f).take(PRIME_CANDIDATES) {
        let fp = Fp::new(p);
        let facs = fp.berlekamp(&fp.monic(&f.mod_p(p)));
        if facs.len() == 1 {
            return Ok(vec![f.primitive()]);
        }
        let sums = subset_degree_sums(&facs, n);
        feasible = Some(match feasible {
            None => sums,
            Some(prev) => prev.iter().zip(&sums).map(|(a, b)| *a && *b).collect(),
        });
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
    }
    if let Some(feas) = &feasible {
        if (1..n).all(|d| !feas[d]) {
            return Ok(vec![f.primitive()]);
        }
    }
    let (p, facs) = match best {
        Some(b) => b,
        // no admissible prime: f is not square-free, which callers rule out
        None => return Err(LaurentError::Budget),
    };
    let lc = f.lc().abs();
    let bound = BigInt::from(2u32).pow(n as u32) * f.norm2_ceil() * &lc * 2;
    let pb = BigInt::from(p);
    let mut levels = 0u32;
    let mut modulus = pb.clone();
    while modulus <= bound {
        modulus = &modulus * &modulus;
        levels += 1;
    }
    let lifted = multi_lift(f, &facs, p, levels);
    recombine(f, lifted, &modulus)
}

/// `sums[d]` is true if some subset of factor degrees sums to `d`.
fn subset_degree_sums(facs: &[FpPoly], n: usize) -> Vec<bool> {
    let mut sums = vec![false; n + 1];
    sums[0] = true;
    for g in facs {
        let d = g.len() - 1;
        for s in (d..=n).rev() {
            if sums[s - d] {
                sums[s] = true;
            }
        }
    }
    sums
}

fn recombine(f: &ZPoly, mut lifted: Vec<ZPoly>, modulus: &BigInt) -> Result<Vec<ZPoly>, LaurentError> {
    let mut rest = f.primitive();
    let mut found = Vec::new();
    let mut budget = RECOMBINATION_BUDGET;
    let mut size = 1;
    while 2 * size <= lifted.len() {
        let mut hit = None;
        let r = lifted.len();
        let mut idx: Vec<usize> = (0..size).collect();
        'subsets: loop {
            if budget == 0 {
                return Err(LaurentError::Budget);
            }
            budget -= 1;
            let lc = rest.lc();
            let mut cand = ZPoly::new(vec![lc.clone()]);
            for &i in &idx {
                cand = cand.mul(&lifted[i]).symmetric_mod(modulus);
            }
            let cand = cand.primitive();
            if let Some(q) = rest.div_exact(&cand) {
                hit = Some((idx.clone(), cand, q));
                break 'subsets;
            }
            // next combination
            let mut k = size;
            loop {
                if k == 0 {
                    break 'subsets;
                }
                k -= 1;
                if idx[k] < r - size + k {
                    idx[k] += 1;
                    for j in k + 1..size {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
        match hit {
            Some((idx, g, q)) => {
                found.push(g);
                rest = q.primitive();
                for &i in idx.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => size += 1,
        }
    }
    if rest.degree().unwrap_or(0) > 0 {
        found.push(rest);
    }
    Ok(found)
}

fn to_z(v: &[u64]) -> ZPoly {
    ZPoly::new(v.iter().map(|&c| BigInt::from(c)).collect())
}

fn reduce(a: &ZPoly, m: &BigInt) -> ZPoly {
    ZPoly::new(a.coeffs().iter().map(|c| c.mod_floor(m)).collect())
}

/// `(q, r)` with `a = q b + r (mod m)`, `b` monic.
fn divrem_monic(a: &ZPoly, b: &ZPoly, m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.degree().expect("nonzero divisor");
    let mut r: Vec<BigInt> = reduce(a, m).coeffs().to_vec();
    if r.len() <= db {
        return (ZPoly::zero(), ZPoly::new(r));
    }
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let c = r[k + db].mod_floor(m);
        if c.is_zero() {
            continue;
        }
        for (i, y) in b.coeffs().iter().enumerate() {
            r[k + i] = (&r[k + i] - &c * y).mod_floor(m);
        }
        q[k] = c;
    }
    r.truncate(db);
    (ZPoly::new(q), ZPoly::new(r))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.mod_floor(m).extended_gcd(m);
    assert!(e.gcd.is_one(), "not invertible");
    e.x.mod_floor(m)
}

/// Lifts the monic modular factors of `f` (`f ≡ lc(f) Π facs mod p`) to
/// monic factors modulo `p^(2^levels)`.
fn multi_lift(f: &ZPoly, facs: &[FpPoly], p: u64, levels: u32) -> Vec<ZPoly> {
    let mut modulus = BigInt::from(p);
    for _ in 0..levels {
        modulus = &modulus * &modulus;
    }
    lift_rec(f, facs, p, levels, &modulus)
}

fn lift_rec(f: &ZPoly, facs: &[FpPoly], p: u64, levels: u32, modulus: &BigInt) -> Vec<ZPoly> {
    if facs.len() == 1 {
        let inv = mod_inverse(&f.lc(), modulus);
        return vec![reduce(&f.scale(&inv), modulus)];
    }
    let fp = Fp::new(p);
    let mid = facs.len() / 2;
    let (left, right) = facs.split_at(mid);
    let lc_p = f.lc().mod_floor(&BigInt::from(p));
    let lc_p = lc_p.to_u64_digits().1.first().copied().unwrap_or(0);
    let g0 = left.iter().fold(vec![lc_p], |acc, g| fp.mul(&acc, g));
    let h0 = right.iter().fold(vec![1u64], |acc, g| fp.mul(&acc, g));
    let (gcd, s0, t0) = fp.ext_gcd(&g0, &h0);
    debug_assert_eq!(gcd, vec![1]);
    let (mut g, mut h, mut s, mut t) = (to_z(&g0), to_z(&h0), to_z(&s0), to_z(&t0));
    let mut m = BigInt::from(p);
    for _ in 0..levels {
        m = &m * &m;
        let e = reduce(&f.sub(&g.mul(&h)), &m);
        let (q, r) = divrem_monic(&s.mul(&e), &h, &m);
        let g_new = reduce(&g.add(&t.mul(&e)).add(&q.mul(&g)), &m);
        let h_new = reduce(&h.add(&r), &m);
        let b = reduce(&s.mul(&g_new).add(&t.mul(&h_new)).sub(&ZPoly::one()), &m);
        let (c, d) = divrem_monic(&s.mul(&b), &h_new, &m);
        s = reduce(&s.sub(&d), &m);
        t = reduce(&t.sub(&t.mul(&b)).sub(&c.mul(&g_new)), &m);
        g = g_new;
        h = h_new;
    }
    let mut out = lift_rec(&g, left, p, levels, modulus);
    out.extend(lift_rec(&h, right, p, levels, modulus));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prod(fs: &[ZPoly]) -> ZPoly {
        fs.iter().fold(ZPoly::one(), |a, b| a.mul(b))
    }

    #[test]
    fn factors_small_products() {
        let a = ZPoly::from_i64(&[2, -1]);
        let b = ZPoly::from_i64(&[1, -2]);
        let f = a.mul(&b).primitive();
        let fs = factor_square_free(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(prod(&fs).primitive(), f);
    }

    #[test]
    fn swinnerton_dyer_like_irreducible() {
        // x^4 - 10x^2 + 1 splits into many factors modulo every prime
        let f = ZPoly::from_i64(&[1, 0, -10, 0, 1]);
        assert_eq!(factor_square_free(&f).unwrap().len(), 1);
    }

    #[test]
    fn cyclotomic_product() {
        // (x^6 - 1) = (x-1)(x+1)(x^2+x+1)(x^2-x+1)
        let f = ZPoly::from_i64(&[-1, 0, 0, 0, 0, 0, 1]);
        let fs = factor_square_free(&f).unwrap();
        assert_eq!(fs.len(), 4);
        assert_eq!(prod(&fs).primitive(), f);
    }

    #[test]
    fn with_multiplicity() {
        let a = ZPoly::from_i64(&[1, 1, 1]);
        let f = a.mul(&a).mul(&ZPoly::from_i64(&[3, 2]));
        let fs = factor_primitive(&f).unwrap();
        let total: usize = fs.iter().map(|(_, m)| m).sum();
        assert_eq!(total, 3);
    }
}
