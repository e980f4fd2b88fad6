//! Alexander polynomial from the over-arc presentation matrix.

use std::collections::BTreeMap;

use crate::diagram::{Arc, Diagram};
use crate::laurent::LaurentPoly;

use super::ALEXANDER_VARS;

fn find(parent: &mut BTreeMap<Arc, Arc>, a: Arc) -> Arc {
    let p = parent[&a];
    if p == a {
        return a;
    }
    let r = find(parent, p);
    parent.insert(a, r);
    r
}

/// One-variable Alexander polynomial, normalized to lowest exponent 0 and a
/// positive constant term. Split diagrams give 0.
pub fn alexander(d: &Diagram) -> LaurentPoly {
    let v = ALEXANDER_VARS;
    let xs = d.crossings();
    if xs.is_empty() {
        return if d.loops() <= 1 { LaurentPoly::one(v) } else { LaurentPoly::zero(v) };
    }
    if !d.is_connected() {
        return LaurentPoly::zero(v);
    }
    // over-arcs: arcs joined through the crossings they pass over
    let mut parent: BTreeMap<Arc, Arc> = xs.iter().flat_map(|x| x.arcs).map(|a| (a, a)).collect();
    for x in xs {
        let (a, b) = (find(&mut parent, x.arcs[1]), find(&mut parent, x.arcs[3]));
        parent.insert(a, b);
    }
    let mut index: BTreeMap<Arc, usize> = BTreeMap::new();
    let arcs: Vec<Arc> = parent.keys().copied().collect();
    for a in arcs {
        let r = find(&mut parent, a);
        let next = index.len();
        index.entry(r).or_insert(next);
    }
    let n = xs.len();
    if index.len() != n {
        // a component that never passes under can be lifted off: split link
        return LaurentPoly::zero(v);
    }
    let t = LaurentPoly::var(v, 0);
    let one = LaurentPoly::one(v);
    let mut m = vec![vec![LaurentPoly::zero(v); n]; n];
    for (row, x) in xs.iter().enumerate() {
        let k = index[&find(&mut parent, x.arcs[1])];
        let i = index[&find(&mut parent, x.arcs[0])];
        let j = index[&find(&mut parent, x.arcs[2])];
        let (ck, ci, cj) = if x.sign > 0 {
            (&one - &t, t.clone(), -&one)
        } else {
            (&t - &one, one.clone(), -&t)
        };
        m[row][k] = &m[row][k] + &ck;
        m[row][i] = &m[row][i] + &ci;
        m[row][j] = &m[row][j] + &cj;
    }
    m.pop();
    for r in m.iter_mut() {
        r.pop();
    }
    determinant(m).normalize_unit()
}

/// Fraction-free (Bareiss) determinant over the Laurent ring.
pub(crate) fn determinant(mut m: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = m.len();
    if n == 0 {
        return LaurentPoly::one(ALEXANDER_VARS);
    }
    let vars = m[0][0].vars();
    let mut sign = 1;
    let mut prev = LaurentPoly::one(vars);
    for k in 0..n {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return LaurentPoly::zero(vars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            m[i][k] = LaurentPoly::zero(vars);
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign < 0 {
        -det
    } else {
        det
    }
}
