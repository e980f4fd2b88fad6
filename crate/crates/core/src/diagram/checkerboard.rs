//! Faces of a diagram and its checkerboard (Tait) graph.

use std::collections::{BTreeMap, VecDeque};

use super::{Arc, Diagram, DiagramError};

/// Face labels for the corners of every crossing. Corner `i` of a crossing
/// lies between slots `i` and `i + 1` (counterclockwise).
#[derive(Debug, Clone)]
pub struct Faces {
    corner: Vec<[usize; 4]>,
    count: usize,
}

impl Faces {
    pub fn trace(d: &Diagram) -> Faces {
        let xs = d.crossings();
        let mut occ: BTreeMap<Arc, Vec<(usize, usize)>> = BTreeMap::new();
        for (i, x) in xs.iter().enumerate() {
            for (s, &a) in x.arcs.iter().enumerate() {
                occ.entry(a).or_default().push((i, s));
            }
        }
        let other_end = |c: usize, s: usize| -> (usize, usize) {
            let v = &occ[&xs[c].arcs[s]];
            if v[0] == (c, s) {
                v[1]
            } else {
                v[0]
            }
        };
        // face of dart (c, s), s = slot the face leaves through
        let mut dart_face = vec![[usize::MAX; 4]; xs.len()];
        let mut count = 0;
        for c in 0..xs.len() {
            for s in 0..4 {
                if dart_face[c][s] != usize::MAX {
                    continue;
                }
                let (mut cc, mut ss) = (c, s);
                while dart_face[cc][ss] == usize::MAX {
                    dart_face[cc][ss] = count;
                    let (nc, ns) = other_end(cc, ss);
                    cc = nc;
                    ss = (ns + 1) % 4;
                }
                count += 1;
            }
        }
        let corner = dart_face.iter().map(|f| [f[1], f[2], f[3], f[0]]).collect();
        Faces { corner, count }
    }

    pub fn count(&self) -> usize {
        self.count
    }

    /// Face containing corner `i` of crossing `c`.
    pub fn corner(&self, c: usize, i: usize) -> usize {
        self.corner[c][i % 4]
    }
}

/// Planar graph whose vertices are the shaded faces, one edge per crossing.
/// Edge sign is `+1` when the shaded corners are A-regions of the crossing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckerboardGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, i8)>,
}

impl CheckerboardGraph {
    /// Shades the faces to the left of each outgoing under-strand. Requires a
    /// connected alternating diagram with at least one crossing.
    pub fn from_diagram(d: &Diagram) -> Result<CheckerboardGraph, DiagramError> {
        if !d.is_alternating() {
            return Err(DiagramError::NotAlternating);
        }
        if !d.is_connected() || d.crossings().is_empty() {
            return Err(DiagramError::Disconnected);
        }
        Ok(Self::with_shading(d, false))
    }

    /// The graph on the unshaded faces.
    pub fn dual_of(d: &Diagram) -> Result<CheckerboardGraph, DiagramError> {
        Self::from_diagram(d)?;
        Ok(Self::with_shading(d, true))
    }

    fn with_shading(d: &Diagram, flip: bool) -> CheckerboardGraph {
        let faces = Faces::trace(d);
        let n = d.crossings().len();
        let mut color = vec![u8::MAX; faces.count()];
        let mut adj = vec![Vec::new(); faces.count()];
        for c in 0..n {
            for i in 0..4 {
                let (f, g) = (faces.corner(c, i), faces.corner(c, i + 1));
                adj[f].push(g);
                adj[g].push(f);
            }
        }
        color[faces.corner(0, 2)] = 0;
        let mut queue = VecDeque::from([faces.corner(0, 2)]);
        while let Some(f) = queue.pop_front() {
            for &g in &adj[f] {
                if color[g] == u8::MAX {
                    color[g] = 1 - color[f];
                    queue.push_back(g);
                }
            }
        }
        let shaded = if flip { 1 } else { 0 };
        let mut index = vec![usize::MAX; faces.count()];
        let mut vertices = 0;
        for f in 0..faces.count() {
            if color[f] == shaded {
                index[f] = vertices;
                vertices += 1;
            }
        }
        let edges = (0..n)
            .map(|c| {
                if color[faces.corner(c, 2)] == shaded {
                    (index[faces.corner(c, 2)], index[faces.corner(c, 0)], -1)
                } else {
                    (index[faces.corner(c, 1)], index[faces.corner(c, 3)], 1)
                }
            })
            .collect();
        CheckerboardGraph { vertices, edges }
    }
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::{hopf, trefoil};
    use super::*;

    #[test]
    fn trefoil_graphs() {
        let t = trefoil();
        let g = t.checkerboard().unwrap();
        let h = CheckerboardGraph::dual_of(&t).unwrap();
        let mut sizes = [g.vertices, h.vertices];
        sizes.sort();
        assert_eq!(sizes, [2, 3]);
        assert_eq!(g.edges.len(), 3);
        assert_eq!(g.vertices + h.vertices, t.faces().count());
    }

    #[test]
    fn hopf_graph() {
        let g = hopf().checkerboard().unwrap();
        assert_eq!(g.vertices + CheckerboardGraph::dual_of(&hopf()).unwrap().vertices, 4);
    }
}
