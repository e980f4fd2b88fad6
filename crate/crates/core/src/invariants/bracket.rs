//! Kauffman bracket by planar state-map contraction, and the Jones polynomial.

use std::collections::HashMap;

use num_bigint::BigInt;

use crate::diagram::{Arc, Diagram};
use crate::laurent::LaurentPoly;

use super::{BRACKET_VARS, JONES_VARS};

/// Loop value `-A^2 - A^-2`.
fn loop_value() -> LaurentPoly {
    LaurentPoly::from_terms(BRACKET_VARS, [(vec![2], -1), (vec![-2], -1)])
}

/// Pairs of open arcs joined by the smoothings chosen so far, sorted.
type StateKey = Vec<(Arc, Arc)>;

/// Joins the arc ends `x` and `y` at the current crossing. Returns `true` when a loop closes.
fn connect(state: &mut StateKey, x: Arc, y: Arc) -> bool {
    if x == y {
        return true;
    }
    let take = |state: &mut StateKey, a: Arc| -> Option<Arc> {
        let i = state.iter().position(|&(p, q)| p == a || q == a)?;
        let (p, q) = state.remove(i);
        Some(if p == a { q } else { p })
    };
    let ex = take(state, x);
    if ex == Some(y) {
        return true;
    }
    let ey = take(state, y);
    let (a, b) = (ex.unwrap_or(x), ey.unwrap_or(y));
    let pair = (a.min(b), a.max(b));
    let pos = state.partition_point(|p| *p < pair);
    state.insert(pos, pair);
    false
}

/// Crossing order that keeps the open boundary small: greedily take the
/// crossing sharing the most arcs with those already processed.
fn contraction_order(d: &Diagram) -> Vec<usize> {
    let xs = d.crossings();
    let n = xs.len();
    let mut done = vec![false; n];
    let mut touched: HashMap<Arc, u8> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let best = (0..n)
            .filter(|&c| !done[c])
            .max_by_key(|&c| {
                let shared = xs[c].arcs.iter().filter(|a| touched.get(a).is_some_and(|&k| k == 1)).count();
                (shared, std::cmp::Reverse(c))
            })
            .expect("unprocessed crossing");
        done[best] = true;
        order.push(best);
        for a in xs[best].arcs {
            *touched.entry(a).or_default() += 1;
        }
    }
    order
}

/// Kauffman bracket in `A`, normalized so the crossingless unknot is 1.
pub fn bracket(d: &Diagram) -> LaurentPoly {
    let delta = loop_value();
    let xs = d.crossings();
    if xs.is_empty() {
        return delta.pow(d.loops().saturating_sub(1) as u32);
    }
    let a = LaurentPoly::var(BRACKET_VARS, 0);
    let a_inv = LaurentPoly::monomial(BRACKET_VARS, 1, &[-1]);
    let mut states: HashMap<StateKey, LaurentPoly> = HashMap::new();
    states.insert(Vec::new(), LaurentPoly::one(BRACKET_VARS));
    for c in contraction_order(d) {
        let x = xs[c].arcs;
        let mut next: HashMap<StateKey, LaurentPoly> = HashMap::new();
        for (key, w) in &states {
            for (pairs, weight) in [([(0, 1), (2, 3)], &a), ([(0, 3), (1, 2)], &a_inv)] {
                let mut k = key.clone();
                let mut value = w * weight;
                for (i, j) in pairs {
                    if connect(&mut k, x[i], x[j]) {
                        value = &value * &delta;
                    }
                }
                let slot = next.entry(k).or_insert_with(|| LaurentPoly::zero(BRACKET_VARS));
                *slot = &*slot + &value;
            }
        }
        next.retain(|_, v| !v.is_zero());
        states = next;
    }
    let total = states.remove(&Vec::new()).unwrap_or_else(|| LaurentPoly::zero(BRACKET_VARS));
    let total = &total * &delta.pow(d.loops() as u32);
    total.div_exact(&delta).expect("every state has a loop")
}

/// Bracket as the plain sum over all `2^n` states.
pub fn bracket_naive(d: &Diagram) -> LaurentPoly {
    let xs = d.crossings();
    let n = xs.len();
    assert!(n <= 24, "state sum over 2^{n} states");
    let arcs: Vec<Arc> = {
        let mut v: Vec<Arc> = xs.iter().flat_map(|x| x.arcs).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let idx = |a: Arc| arcs.binary_search(&a).expect("known arc");
    let mut counts: HashMap<(i64, usize), i64> = HashMap::new();
    for mask in 0u64..(1u64 << n) {
        let mut parent: Vec<usize> = (0..arcs.len()).collect();
        fn find(p: &mut [usize], mut a: usize) -> usize {
            while p[a] != a {
                p[a] = p[p[a]];
                a = p[a];
            }
            a
        }
        let mut components = arcs.len();
        let mut exp = 0i64;
        for (c, x) in xs.iter().enumerate() {
            let pairs = if mask >> c & 1 == 0 {
                exp += 1;
                [(0, 1), (2, 3)]
            } else {
                exp -= 1;
                [(0, 3), (1, 2)]
            };
            for (i, j) in pairs {
                let (a, b) = (find(&mut parent, idx(x.arcs[i])), find(&mut parent, idx(x.arcs[j])));
                if a != b {
                    parent[a] = b;
                    components -= 1;
                }
            }
        }
        *counts.entry((exp, components + d.loops())).or_default() += 1;
    }
    let delta = loop_value();
    let mut total = LaurentPoly::zero(BRACKET_VARS);
    if n == 0 {
        return delta.pow(d.loops().saturating_sub(1) as u32);
    }
    for ((exp, loops), c) in counts {
        let term = LaurentPoly::monomial(BRACKET_VARS, c, &[exp]);
        total = &total + &(&term * &delta.pow(loops as u32 - 1));
    }
    total
}

/// `(-A^3)^(-w) <D>` rewritten in `t = A^-4`.
pub fn jones_from_bracket(b: &LaurentPoly, writhe: i64) -> LaurentPoly {
    let sign = if writhe % 2 == 0 { 1 } else { -1 };
    let f = &LaurentPoly::monomial(BRACKET_VARS, sign, &[-3 * writhe]) * b;
    LaurentPoly::from_doubled(
        JONES_VARS,
        f.terms().map(|(e, c)| {
            // A^k = t^(-k/4); stored exponents are doubled, so k = e[0] / 2
            let k = e[0] / 2;
            assert!(k % 2 == 0, "odd power of A in a normalized bracket");
            ([-k / 2, 0], BigInt::clone(c))
        }),
    )
}

/// Jones polynomial in `t`; right-handed trefoil gives `t + t^3 - t^4`.
pub fn jones(d: &Diagram) -> LaurentPoly {
    jones_from_bracket(&bracket(d), d.writhe())
}
