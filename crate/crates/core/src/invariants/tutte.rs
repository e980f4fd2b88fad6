//! Tutte polynomial of a connected multigraph by deletion and contraction.

use std::collections::HashMap;

use thiserror::Error;

use crate::diagram::CheckerboardGraph;
use crate::laurent::LaurentPoly;

use super::TUTTE_VARS;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TutteError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("edge endpoint {0} out of range")]
    BadVertex(usize),
}

type Edges = Vec<(usize, usize)>;

/// Tutte polynomial in `(x, y)`; a loop is `y`, a bridge is `x`.
pub fn tutte(g: &CheckerboardGraph) -> Result<LaurentPoly, TutteError> {
    let n = g.vertices;
    if let Some(&(a, b, _)) = g.edges.iter().find(|e| e.0 >= n || e.1 >= n) {
        return Err(TutteError::BadVertex(a.max(b)));
    }
    let edges: Edges = g.edges.iter().map(|&(a, b, _)| (a, b)).collect();
    if components(n, &edges) > 1 {
        return Err(TutteError::Disconnected);
    }
    let mut memo = HashMap::new();
    Ok(eval(normalize(&edges), &mut memo))
}

fn components(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    let mut count = n;
    for &(a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra] = rb;
            count -= 1;
        }
    }
    count
}

/// Relabels vertices by first appearance and sorts the edge list.
fn normalize(edges: &[(usize, usize)]) -> Edges {
    let mut label: HashMap<usize, usize> = HashMap::new();
    let mut out: Edges = edges
        .iter()
        .map(|&(a, b)| {
            let next = label.len();
            let a = *label.entry(a).or_insert(next);
            let next = label.len();
            let b = *label.entry(b).or_insert(next);
            (a.min(b), a.max(b))
        })
        .collect();
    out.sort_unstable();
    out
}

fn vertex_count(edges: &[(usize, usize)]) -> usize {
    edges.iter().map(|&(a, b)| a.max(b) + 1).max().unwrap_or(1)
}

fn eval(edges: Edges, memo: &mut HashMap<Edges, LaurentPoly>) -> LaurentPoly {
    if let Some(p) = memo.get(&edges) {
        return p.clone();
    }
    let x = LaurentPoly::var(TUTTE_VARS, 0);
    let y = LaurentPoly::var(TUTTE_VARS, 1);
    let mut factor = LaurentPoly::one(TUTTE_VARS);
    let mut rest = edges.clone();
    // strip loops and bridges
    loop {
        if let Some(i) = rest.iter().position(|&(a, b)| a == b) {
            rest.remove(i);
            factor = &factor * &y;
            continue;
        }
        let n = vertex_count(&rest);
        let base = components(n, &rest);
        let bridge = (0..rest.len()).find(|&i| {
            let mut without = rest.clone();
            without.remove(i);
            components(n, &without) > base
        });
        match bridge {
            Some(i) => {
                rest = contract(&rest, i);
                factor = &factor * &x;
            }
            None => break,
        }
    }
    let value = if rest.is_empty() {
        factor
    } else {
        let mut deleted = rest.clone();
        deleted.remove(0);
        let d = eval(normalize(&deleted), memo);
        let c = eval(normalize(&contract(&rest, 0)), memo);
        &factor * &(&d + &c)
    };
    memo.insert(edges, value.clone());
    value
}

fn contract(edges: &[(usize, usize)], i: usize) -> Edges {
    let (keep, gone) = edges[i];
    edges
        .iter()
        .enumerate()
        .filter(|&(j, _)| j != i)
        .map(|(_, &(a, b))| {
            let m = |v: usize| if v == gone { keep } else { v };
            (m(a), m(b))
        })
        .collect()
}
