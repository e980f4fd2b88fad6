//! Local moves used by the skein recursions.

use std::collections::BTreeMap;

use super::{Arc, Crossing, Diagram};

/// Identifies arc `from` with arc `to` in every crossing.
fn substitute(xs: &mut [Crossing], from: Arc, to: Arc) {
    for x in xs.iter_mut() {
        for a in x.arcs.iter_mut() {
            if *a == from {
                *a = to;
            }
        }
    }
}

/// Removes crossing `c` and joins its slots in the pairs given, where each pair
/// is `(incoming slot, outgoing slot)` along the new strands.
fn smooth_directed(d: &Diagram, c: usize, pairs: &[(usize, usize)]) -> Diagram {
    let x = d.crossings[c];
    let mut xs: Vec<Crossing> = d.crossings.clone();
    xs.remove(c);
    let mut loops = d.loops;
    // arc entering at slot `i` continues as the arc leaving at slot `o`
    let mut pending: Vec<(Arc, Arc)> = pairs.iter().map(|&(i, o)| (x.arcs[i], x.arcs[o])).collect();
    while let Some((keep, gone)) = pending.pop() {
        if keep == gone {
            loops += 1;
            continue;
        }
        substitute(&mut xs, gone, keep);
        for p in pending.iter_mut() {
            if p.0 == gone {
                p.0 = keep;
            }
            if p.1 == gone {
                p.1 = keep;
            }
        }
    }
    Diagram { crossings: xs, loops }
}

impl Diagram {
    /// Orients unoriented crossings (under-strand in slots 0 and 2, either
    /// direction) by tracing each component from its smallest arc.
    pub fn from_unoriented(xs: &[[Arc; 4]], loops: usize) -> Diagram {
        let mut occ: BTreeMap<Arc, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, x) in xs.iter().enumerate() {
            for (s, &e) in x.iter().enumerate() {
                occ.entry(e).or_default().push((i, s));
            }
        }
        let other = |e: Arc, at: (usize, usize)| -> (usize, usize) {
            let v = &occ[&e];
            if v[0] == at {
                v[1]
            } else {
                v[0]
            }
        };
        let mut head: BTreeMap<Arc, (usize, usize)> = BTreeMap::new();
        for (&e, v) in &occ {
            if head.contains_key(&e) {
                continue;
            }
            let mut cur = e;
            let mut at = v[0];
            loop {
                head.insert(cur, at);
                let out = (at.0, (at.1 + 2) % 4);
                cur = xs[at.0][out.1];
                at = other(cur, out);
                if cur == e {
                    break;
                }
            }
        }
        let crossings = xs
            .iter()
            .enumerate()
            .map(|(i, x)| {
                let keep = head[&x[0]] == (i, 0);
                let arcs = if keep { *x } else { [x[2], x[3], x[0], x[1]] };
                let sign = if head[&arcs[3]] == (i, if keep { 3 } else { 1 }) { 1 } else { -1 };
                Crossing::new(arcs, sign)
            })
            .collect();
        Diagram::from_parts(crossings, loops).relabeled()
    }

    /// Crossing `c` switched, arc labels unchanged.
    pub fn switch_crossing(&self, c: usize) -> Diagram {
        let mut d = self.clone();
        d.crossings[c] = d.crossings[c].switched();
        d
    }

    /// Orientation-respecting smoothing of crossing `c`.
    pub fn smooth_oriented(&self, c: usize) -> Diagram {
        let x = self.crossings[c];
        if x.sign > 0 {
            smooth_directed(self, c, &[(0, 1), (3, 2)])
        } else {
            smooth_directed(self, c, &[(0, 3), (1, 2)])
        }
    }

    /// The two unoriented smoothings of crossing `c`, re-oriented:
    /// `(A, B)` where A joins slots 0-1 and 2-3, B joins 0-3 and 1-2.
    pub fn smooth_unoriented(&self, c: usize) -> (Diagram, Diagram) {
        let a = self.smooth_pairs(c, [(0, 1), (2, 3)]);
        let b = self.smooth_pairs(c, [(0, 3), (1, 2)]);
        (a, b)
    }

    fn smooth_pairs(&self, c: usize, pairs: [(usize, usize); 2]) -> Diagram {
        let x = self.crossings[c];
        let mut xs: Vec<[Arc; 4]> = self.crossings.iter().map(|y| y.arcs).collect();
        xs.remove(c);
        let mut loops = self.loops;
        let mut pending: Vec<(Arc, Arc)> = pairs.iter().map(|&(i, j)| (x.arcs[i], x.arcs[j])).collect();
        while let Some((keep, gone)) = pending.pop() {
            if keep == gone {
                loops += 1;
                continue;
            }
            for y in xs.iter_mut() {
                for a in y.iter_mut() {
                    if *a == gone {
                        *a = keep;
                    }
                }
            }
            for p in pending.iter_mut() {
                if p.0 == gone {
                    p.0 = keep;
                }
                if p.1 == gone {
                    p.1 = keep;
                }
            }
        }
        if xs.is_empty() {
            return Diagram::from_parts(Vec::new(), loops);
        }
        Diagram::from_unoriented(&xs, loops)
    }

    /// Repeatedly removes Reidemeister I curls. Returns the reduced diagram and
    /// the sum of the removed crossing signs.
    pub fn remove_curls(&self) -> (Diagram, i64) {
        let mut d = self.clone();
        let mut writhe = 0;
        'scan: loop {
            for (c, x) in d.crossings.iter().enumerate() {
                for i in 0..4 {
                    if x.arcs[i] != x.arcs[(i + 1) % 4] {
                        continue;
                    }
                    let (j, k) = ((i + 2) % 4, (i + 3) % 4);
                    let entering = |s: usize| s == 0 || s == x.over_in();
                    let pair = if entering(j) { (j, k) } else { (k, j) };
                    writhe += x.sign as i64;
                    d = smooth_directed(&d, c, &[pair]);
                    continue 'scan;
                }
            }
            break;
        }
        (d, writhe)
    }

    /// First crossing met from below when traversing components in order,
    /// each from its smallest arc; `None` for a descending diagram.
    pub fn first_ascending_crossing(&self) -> Option<usize> {
        let ends = self.arc_ends();
        let mut seen = vec![false; self.crossings.len()];
        for comp in self.traced_components() {
            for a in comp {
                let (c, s) = ends[&a].head;
                if !seen[c] {
                    if s == 0 {
                        return Some(c);
                    }
                    seen[c] = true;
                }
            }
        }
        None
    }
}
