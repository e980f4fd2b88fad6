//! Rational (two-bridge) links up to mirror image.

use std::collections::BTreeMap;

use num_integer::Integer;

use super::TangleExpr;

/// One rational link type, identified with its mirror image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalClass {
    pub p: u64,
    pub q: u64,
    /// Positive continued-fraction symbol of `p/q`.
    pub symbol: TangleExpr,
    /// `false` when the link equals its mirror image (`q^2 ≡ -1 mod p`).
    pub chiral: bool,
}

impl RationalClass {
    pub fn crossing_count(&self) -> usize {
        self.symbol.crossing_count()
    }

    /// Components: 1 for odd `p`, 2 for even `p`.
    pub fn components(&self) -> usize {
        if self.p % 2 == 0 {
            2
        } else {
            1
        }
    }
}

/// `p/q` for the symbol `a1 a2 ... ak`, read as `ak + 1/(a(k-1) + ... + 1/a1)`.
pub fn continued_fraction(entries: &[i64]) -> (i64, i64) {
    let (mut num, mut den) = (entries[0], 1i64);
    for &a in &entries[1..] {
        (num, den) = (a * num + den, num);
    }
    let g = num.gcd(&den);
    if den < 0 {
        (-num / g, -den / g)
    } else {
        (num / g, den / g)
    }
}

/// Positive symbol whose continued fraction is `p/q` (`p > q ≥ 1` coprime).
pub fn rational_symbol(p: u64, q: u64) -> TangleExpr {
    // outermost term first
    let mut terms = Vec::new();
    let (mut a, mut b) = (p, q);
    while b != 0 {
        terms.push((a / b) as i64);
        (a, b) = (b, a % b);
    }
    terms.reverse();
    if terms.len() == 1 {
        TangleExpr::Int(terms[0])
    } else {
        TangleExpr::Product(terms.into_iter().map(TangleExpr::Int).collect())
    }
}

fn mod_inverse(q: u64, p: u64) -> u64 {
    let e = (q as i64).extended_gcd(&(p as i64));
    e.x.rem_euclid(p as i64) as u64
}

/// Smallest representative of `{q, q⁻¹, -q, -q⁻¹} mod p` in `[1, p)`.
fn class_key(p: u64, q: u64) -> u64 {
    if p == 1 {
        return 0;
    }
    let qi = mod_inverse(q, p);
    [q % p, qi, (p - q % p) % p, (p - qi) % p].into_iter().filter(|&x| x > 0).min().unwrap_or(1)
}

/// Whether two rational symbols give the same unoriented link (mirror images
/// count as different): equal `p` and `q' ≡ q^±1 mod p`.
pub fn same_rational_link(a: &[i64], b: &[i64]) -> bool {
    let ((pa, qa), (pb, qb)) = (continued_fraction(a), continued_fraction(b));
    if pa.abs() != pb.abs() {
        return false;
    }
    let p = pa.unsigned_abs();
    if p <= 1 {
        return true;
    }
    let (qa, qb) = ((qa * pa.signum()).rem_euclid(p as i64) as u64, (qb * pb.signum()).rem_euclid(p as i64) as u64);
    qb == qa || qb == mod_inverse(qa, p)
}

/// One class per rational link of crossing number `n` (up to mirror image),
/// sorted by `(p, q)`.
pub fn enumerate_rational(n: usize) -> Vec<RationalClass> {
    let mut classes: BTreeMap<(u64, u64), RationalClass> = BTreeMap::new();
    if n < 2 {
        return Vec::new();
    }
    // compositions of n encoded by the cut positions between n unit steps
    for mask in 0u64..(1 << (n - 1)) {
        let mut parts = Vec::new();
        let mut cur = 1i64;
        for i in 0..n - 1 {
            if mask >> i & 1 == 1 {
                parts.push(cur);
                cur = 1;
            } else {
                cur += 1;
            }
        }
        parts.push(cur);
        if *parts.last().expect("nonempty") < 2 {
            continue;
        }
        let (p, q) = continued_fraction(&parts);
        let (p, q) = (p as u64, q as u64);
        let key = class_key(p, q);
        classes.entry((p, key)).or_insert_with(|| RationalClass {
            p,
            q: key,
            symbol: rational_symbol(p, key),
            chiral: (key * key + 1) % p != 0,
        });
    }
    classes.into_values().collect()
}
