//! Oracles shared by the integration tests and the acceptance suite.
#![allow(dead_code)]

use num_bigint::BigInt;
use rand::rngs::StdRng;
use rand::seq::SliceRandom;

use knotpoly::conway::{enumerate_rational, to_diagram, TangleExpr};
use knotpoly::diagram::Diagram;
use knotpoly::laurent::{LaurentPoly, Vars};

pub const T: Vars = Vars::one("t");
pub const X: Vars = Vars::one("x");
pub const A: Vars = Vars::one("A");
pub const Q: Vars = Vars::one("q");

/// Polynomial from `(doubled exponent, coefficient)` pairs.
pub fn half(vars: Vars, terms: &[(i64, i64)]) -> LaurentPoly {
    LaurentPoly::from_doubled(vars, terms.iter().map(|&(e, c)| ([e, 0], BigInt::from(c))))
}

/// Substitutes `(first, second)` for the two variables of `p`, clearing
/// negative powers of the second variable so non-unit images are allowed.
pub fn substitute2(p: &LaurentPoly, first: &LaurentPoly, second: &LaurentPoly) -> LaurentPoly {
    let vars = first.vars();
    let mut total = LaurentPoly::zero(vars);
    let k = (-p.min_doubled(1)).max(0) / 2;
    for (e, c) in p.terms() {
        let (a, b) = (e[0] / 2, e[1] / 2 + k);
        let fa = if a >= 0 {
            first.pow(a as u32)
        } else {
            first.inverse_unit().expect("unit image").pow((-a) as u32)
        };
        let term = &(&fa * &second.pow(b as u32)) * &LaurentPoly::constant(vars, c.clone());
        total = &total + &term;
    }
    total.div_exact(&second.pow(k as u32)).expect("Laurent specialization")
}

/// HOMFLY-PT at `v = t`, `z = t^(1/2) - t^(-1/2)`.
pub fn homfly_to_jones(p: &LaurentPoly) -> LaurentPoly {
    substitute2(p, &LaurentPoly::var(T, 0), &half(T, &[(1, 1), (-1, -1)]))
}

/// HOMFLY-PT at `v = 1`, `z = x^(1/2) - x^(-1/2)`, normalized.
pub fn homfly_to_alexander(p: &LaurentPoly) -> LaurentPoly {
    substitute2(p, &LaurentPoly::one(X), &half(X, &[(1, 1), (-1, -1)])).normalize_unit()
}

/// Kauffman `Λ` at `a = -A^3`, `z = A + A^-1`.
pub fn lambda_to_bracket(l: &LaurentPoly) -> LaurentPoly {
    substitute2(l, &LaurentPoly::monomial(A, -1, &[3]), &half(A, &[(2, 1), (-2, 1)]))
}

/// `(q + q^-1) V` with `t^(1/2) = -q`.
pub fn normalized_jones(v: &LaurentPoly) -> LaurentPoly {
    let mapped = LaurentPoly::from_terms(
        Q,
        v.terms().map(|(e, c)| (vec![e[0]], if e[0] % 2 == 0 { c.clone() } else { -c.clone() })),
    );
    &mapped * &LaurentPoly::from_terms(Q, [(vec![1], 1), (vec![-1], 1)])
}

/// `t -> t^-1`.
pub fn invert(p: &LaurentPoly) -> LaurentPoly {
    LaurentPoly::from_doubled(p.vars(), p.terms().map(|(e, c)| ([-e[0], -e[1]], c.clone())))
}

/// Equality up to a signed monomial.
pub fn equal_up_to_unit(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    if a.is_zero() || b.is_zero() {
        return a.is_zero() && b.is_zero();
    }
    let by = [b.min_doubled(0) - a.min_doubled(0), 0];
    let moved = a.shift_doubled(by);
    moved == *b || -moved == *b
}

/// Tutte polynomial at `(x, y) = (-t, -t^-1)` and `(-t^-1, -t)`.
pub fn tutte_to_jones(p: &LaurentPoly) -> [LaurentPoly; 2] {
    let u = LaurentPoly::monomial(T, -1, &[1]);
    let w = LaurentPoly::monomial(T, -1, &[-1]);
    [substitute2(p, &u, &w), substitute2(p, &w, &u)]
}

/// Every rational symbol with 2 to `max_n` crossings, with mirror images of the chiral ones.
pub fn rational_symbols(max_n: usize) -> Vec<TangleExpr> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for c in enumerate_rational(n) {
            if c.chiral {
                out.push(c.symbol.mirror());
            }
            out.push(c.symbol);
        }
    }
    out
}

pub fn rational_diagrams(max_n: usize) -> Vec<(String, Diagram)> {
    rational_symbols(max_n).into_iter().map(|s| (s.to_string(), to_diagram(&s))).collect()
}

/// A random rational knot or link with at most `max_n` crossings.
pub fn random_rational(rng: &mut StdRng, max_n: usize) -> (String, Diagram) {
    let all = rational_diagrams(max_n);
    all.choose(rng).expect("nonempty census").clone()
}
