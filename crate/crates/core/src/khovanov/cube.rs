//! Cube of resolutions and the Khovanov differential, split by quantum grading.

use std::collections::BTreeMap;

use crate::diagram::{Arc, Diagram};

use super::snf::SparseMatrix;
use super::{KhovanovError, MAX_CROSSINGS};

/// The complex in one quantum grading `j`: `dims[r]` generators at
/// homological degree `r - shift`, `maps[r]` from degree `r` to `r + 1`
/// (rows index the target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainComplexSlice {
    pub j: i64,
    pub shift: i64,
    pub dims: Vec<usize>,
    pub maps: Vec<SparseMatrix>,
}

impl ChainComplexSlice {
    /// Checks `d ∘ d = 0`.
    pub fn is_complex(&self) -> bool {
        self.maps.windows(2).all(|w| w[1].mul(&w[0]).is_zero())
    }

    pub fn generator_count(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// Circles of one resolution: circle index of every arc, and the number of
/// circles including crossingless loops (numbered last).
struct Resolution {
    circle_of: Vec<usize>,
    count: usize,
}

fn resolve(xs: &[[usize; 4]], arcs: usize, loops: usize, v: u32) -> Resolution {
    let mut parent: Vec<usize> = (0..arcs).collect();
    fn find(p: &mut [usize], mut a: usize) -> usize {
        while p[a] != a {
            p[a] = p[p[a]];
            a = p[a];
        }
        a
    }
    for (c, x) in xs.iter().enumerate() {
        let pairs = if v >> c & 1 == 0 { [(0, 1), (2, 3)] } else { [(0, 3), (1, 2)] };
        for (i, j) in pairs {
            let (a, b) = (find(&mut parent, x[i]), find(&mut parent, x[j]));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut label = vec![usize::MAX; arcs];
    let mut circle_of = vec![0; arcs];
    let mut count = 0;
    for a in 0..arcs {
        let r = find(&mut parent, a);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        circle_of[a] = label[r];
    }
    Resolution { circle_of, count: count + loops }
}

/// Builds the Khovanov complex, one slice per quantum grading in increasing `j`.
pub fn cube(d: &Diagram) -> Result<Vec<ChainComplexSlice>, KhovanovError> {
    let n = d.crossing_count();
    if n > MAX_CROSSINGS {
        return Err(KhovanovError::TooManyCrossings(n));
    }
    let arc_ids: Vec<Arc> = {
        let mut v: Vec<Arc> = d.crossings().iter().flat_map(|x| x.arcs).collect();
        v.sort_unstable();
        v.dedup();
        v
    };
    let index = |a: Arc| arc_ids.binary_search(&a).expect("arc of the diagram");
    let xs: Vec<[usize; 4]> = d.crossings().iter().map(|x| x.arcs.map(index)).collect();
    let (n_plus, n_minus) = (d.positive_count() as i64, d.negative_count() as i64);
    let res: Vec<Resolution> = (0..1u32 << n).map(|v| resolve(&xs, arc_ids.len(), d.loops(), v)).collect();

    // index of every enhanced state inside its (r, j) block
    let mut block_size: BTreeMap<(usize, i64), usize> = BTreeMap::new();
    let mut position: Vec<Vec<usize>> = Vec::with_capacity(res.len());
    let qdeg = |v: u32, e: u32, k: usize| -> i64 {
        let plus = e.count_ones() as i64;
        plus - (k as i64 - plus) + v.count_ones() as i64 + n_plus - 2 * n_minus
    };
    for (v, r) in res.iter().enumerate() {
        let rr = (v as u32).count_ones() as usize;
        let mut pos = Vec::with_capacity(1 << r.count);
        for e in 0..1u32 << r.count {
            let slot = block_size.entry((rr, qdeg(v as u32, e, r.count))).or_insert(0);
            pos.push(*slot);
            *slot += 1;
        }
        position.push(pos);
    }
    let mut slices: BTreeMap<i64, ChainComplexSlice> = BTreeMap::new();
    for (&(r, j), &size) in &block_size {
        let s = slices.entry(j).or_insert_with(|| ChainComplexSlice {
            j,
            shift: n_minus,
            dims: vec![0; n + 1],
            maps: Vec::new(),
        });
        s.dims[r] = size;
    }
    for s in slices.values_mut() {
        s.maps = (0..n).map(|r| SparseMatrix::zero(s.dims[r + 1], s.dims[r])).collect();
    }

    for v in 0..1u32 << n {
        let from = &res[v as usize];
        let r = v.count_ones() as usize;
        // one arc on every circle, for carrying untouched circles across an edge
        let mut rep = vec![usize::MAX; from.count];
        for (a, &c) in from.circle_of.iter().enumerate() {
            if rep[c] == usize::MAX {
                rep[c] = a;
            }
        }
        let uf_circles = from.count - d.loops();
        for (c, x) in xs.iter().enumerate() {
            if v >> c & 1 == 1 {
                continue;
            }
            let w = v | 1 << c;
            let to = &res[w as usize];
            let sign: i64 = if (v & ((1 << c) - 1)).count_ones() % 2 == 0 { 1 } else { -1 };
            let image = |k: usize| -> usize {
                if k >= uf_circles {
                    k - uf_circles + (to.count - d.loops())
                } else {
                    to.circle_of[rep[k]]
                }
            };
            let (ca, cb) = (from.circle_of[x[0]], from.circle_of[x[2]]);
            for e in 0..1u32 << from.count {
                let mut base = 0u32;
                for k in 0..from.count {
                    if k != ca && k != cb && e >> k & 1 == 1 {
                        base |= 1 << image(k);
                    }
                }
                let mut targets: Vec<u32> = Vec::with_capacity(2);
                if ca != cb {
                    let m = to.circle_of[x[0]];
                    match (e >> ca & 1, e >> cb & 1) {
                        (1, 1) => targets.push(base | 1 << m),
                        (1, 0) | (0, 1) => targets.push(base),
                        _ => {}
                    }
                } else {
                    let (s1, s2) = (to.circle_of[x[0]], to.circle_of[x[1]]);
                    if e >> ca & 1 == 1 {
                        targets.push(base | 1 << s1);
                        targets.push(base | 1 << s2);
                    } else {
                        targets.push(base);
                    }
                }
                if targets.is_empty() {
                    continue;
                }
                let j = qdeg(v, e, from.count);
                let slice = slices.get_mut(&j).expect("grading of an existing state");
                let col = position[v as usize][e as usize];
                for t in targets {
                    debug_assert_eq!(qdeg(w, t, to.count), j, "differential preserves q");
                    let row = position[w as usize][t as usize];
                    slice.maps[r].add(row, col, sign);
                }
            }
        }
    }
    Ok(slices.into_values().collect())
}
