//! Tangle calculus on unoriented crossings and orientation of the closure.
//!
//! An unoriented crossing lists its four edges counterclockwise with the
//! under-strand in slots 0 and 2. Tangle ends are indexed NW, NE, SW, SE.

use super::TangleExpr;
use crate::diagram::Diagram;

const NW: usize = 0;
const NE: usize = 1;
const SW: usize = 2;
const SE: usize = 3;

/// A four-ended tangle under construction.
#[derive(Debug, Clone)]
pub struct Tangle {
    crossings: Vec<[u32; 4]>,
    ends: [u32; 4],
    loops: usize,
}

#[derive(Default)]
struct Ids(u32);

impl Ids {
    fn fresh(&mut self) -> u32 {
        self.0 += 1;
        self.0
    }
}

/// Identifies edge `b` with edge `a` in `xs` and in every pending id list.
fn merge(xs: &mut [[u32; 4]], loops: &mut usize, pending: &mut [&mut [u32]], a: u32, b: u32) {
    if a == b {
        *loops += 1;
        return;
    }
    for x in xs.iter_mut() {
        for e in x.iter_mut() {
            if *e == b {
                *e = a;
            }
        }
    }
    for list in pending.iter_mut() {
        for e in list.iter_mut() {
            if *e == b {
                *e = a;
            }
        }
    }
}

impl Tangle {
    fn zero(ids: &mut Ids) -> Tangle {
        let (a, b) = (ids.fresh(), ids.fresh());
        Tangle { crossings: Vec::new(), ends: [a, a, b, b], loops: 0 }
    }

    fn unit(ids: &mut Ids, positive: bool) -> Tangle {
        let e = [ids.fresh(), ids.fresh(), ids.fresh(), ids.fresh()];
        // counterclockwise around the crossing: NE, NW, SW, SE
        let x = if positive { [e[NW], e[SW], e[SE], e[NE]] } else { [e[NE], e[NW], e[SW], e[SE]] };
        Tangle { crossings: vec![x], ends: e, loops: 0 }
    }

    fn integer(ids: &mut Ids, n: i64) -> Tangle {
        let mut t = Tangle::zero(ids);
        for _ in 0..n.unsigned_abs() {
            t = t.sum(Tangle::unit(ids, n > 0));
        }
        t
    }

    /// Horizontal sum: NE of `self` meets NW of `other`, SE meets SW.
    fn sum(self, other: Tangle) -> Tangle {
        let mut xs = self.crossings;
        xs.extend(other.crossings);
        let mut loops = self.loops + other.loops;
        let mut ends = [self.ends[NW], other.ends[NE], self.ends[SW], other.ends[SE]];
        let mut second = [self.ends[SE], other.ends[SW]];
        merge(&mut xs, &mut loops, &mut [&mut ends, &mut second], self.ends[NE], other.ends[NW]);
        merge(&mut xs, &mut loops, &mut [&mut ends], second[0], second[1]);
        Tangle { crossings: xs, ends, loops }
    }

    /// Reflection in the NW-SE diagonal; takes a tangle with fraction `t` to `1/t`.
    fn flip(self) -> Tangle {
        let e = self.ends;
        Tangle {
            crossings: self.crossings.into_iter().map(|[a, b, c, d]| [a, d, c, b]).collect(),
            ends: [e[NW], e[SW], e[NE], e[SE]],
            loops: self.loops,
        }
    }

    /// Quarter turn counterclockwise.
    fn rotate(self) -> Tangle {
        let e = self.ends;
        Tangle { crossings: self.crossings, ends: [e[NE], e[SE], e[NW], e[SW]], loops: self.loops }
    }

    fn build(t: &TangleExpr, ids: &mut Ids) -> Tangle {
        match t {
            TangleExpr::Int(n) => Tangle::integer(ids, *n),
            TangleExpr::Product(v) => {
                let mut acc = Tangle::build(&v[0], ids);
                for c in &v[1..] {
                    let next = Tangle::build(c, ids);
                    acc = acc.flip().sum(next);
                }
                acc
            }
            TangleExpr::Ramification { children, plus } => {
                let mut acc = Tangle::build(&children[0], ids).flip();
                for c in &children[1..] {
                    let next = Tangle::build(c, ids).flip();
                    acc = acc.sum(next);
                }
                if *plus != 0 {
                    acc = acc.sum(Tangle::integer(ids, *plus));
                }
                acc
            }
            TangleExpr::Polyhedral(_) => unreachable!("basic polyhedra are closed and only occur at top level"),
        }
    }

    /// Closed-up crossings (NW joined to NE, SW to SE) and crossingless loop count.
    fn numerator(self) -> (Vec<[u32; 4]>, usize) {
        let mut xs = self.crossings;
        let mut loops = self.loops;
        let e = self.ends;
        let mut second = [e[SW], e[SE]];
        merge(&mut xs, &mut loops, &mut [&mut second], e[NW], e[NE]);
        merge(&mut xs, &mut loops, &mut [], second[0], second[1]);
        (xs, loops)
    }
}

/// Octahedron edges. The outer triangle is 0, 1, 2 and the inner triangle
/// 3, 4, 5; outer vertex `i` is not adjacent to inner vertex `i + 3`.
const OCTAHEDRON_EDGES: usize = 12;

/// Counterclockwise edge indices around each vertex, read from a straight-line
/// drawing with vertex 0 on top. Edges: 0-1, 1-2, 2-0, 3-4, 4-5, 5-3, 0-4, 0-5,
/// 1-5, 1-3, 2-3, 2-4.
const OCTAHEDRON_ROTATION: [[usize; 4]; 6] = [
    [0, 7, 6, 2],
    [1, 9, 8, 0],
    [2, 11, 10, 1],
    [9, 10, 3, 5],
    [3, 11, 6, 4],
    [8, 5, 4, 7],
];

/// Slot `k` of the symbol fills vertex `SLOT_VERTEX[k]`.
pub(crate) const SLOT_VERTEX: [usize; 6] = [0, 1, 2, 3, 4, 5];

/// Quarter turns applied to the tangle at each vertex.
pub(crate) const VERTEX_TURNS: [usize; 6] = [1, 1, 1, 1, 0, 0];

/// Vertices whose tangle is reflected in its NW-SE diagonal before turning.
/// The tangle 1 is unchanged by this; tangles of type 0 and infinity swap.
pub(crate) const VERTEX_REFLECT: [bool; 6] = [true, true, true, false, false, false];

/// Substitutes the slot tangles into the octahedron; returns a closed network.
pub(crate) fn polyhedral(
    slots: &[TangleExpr],
    slot_vertex: [usize; 6],
    turns: [usize; 6],
    reflect: [bool; 6],
) -> (Vec<[u32; 4]>, usize) {
    let mut ids = Ids::default();
    let mut xs = Vec::new();
    let mut loops = 0;
    let mut first_end: [Option<u32>; OCTAHEDRON_EDGES] = [None; OCTAHEDRON_EDGES];
    let mut glue: Vec<u32> = Vec::new();
    for (k, slot) in slots.iter().enumerate() {
        let v = slot_vertex[k];
        let mut t = Tangle::build(slot, &mut ids);
        if reflect[v] {
            t = t.flip();
        }
        for _ in 0..turns[v] {
            t = t.rotate();
        }
        // counterclockwise tangle ends: NE, NW, SW, SE
        let order = [t.ends[NE], t.ends[NW], t.ends[SW], t.ends[SE]];
        for (i, &edge) in OCTAHEDRON_ROTATION[v].iter().enumerate() {
            match first_end[edge].take() {
                Some(other) => glue.extend([other, order[i]]),
                None => first_end[edge] = Some(order[i]),
            }
        }
        xs.extend(t.crossings);
        loops += t.loops;
    }
    for i in 0..glue.len() / 2 {
        let (a, b) = (glue[2 * i], glue[2 * i + 1]);
        let (_, rest) = glue.split_at_mut(2 * i + 2);
        merge(&mut xs, &mut loops, &mut [rest], a, b);
    }
    (xs, loops)
}

/// Builds the oriented numerator closure of a symbol. Components are oriented
/// by tracing from their smallest construction edge.
pub fn to_diagram(t: &TangleExpr) -> Diagram {
    let (xs, loops) = match t {
        TangleExpr::Polyhedral(slots) => polyhedral(slots, SLOT_VERTEX, VERTEX_TURNS, VERTEX_REFLECT),
        other => Tangle::build(other, &mut Ids::default()).numerator(),
    };
    Diagram::from_unoriented(&xs, loops)
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn diagram(s: &str) -> Diagram {
        let d = to_diagram(&parse(s).unwrap());
        d.validate().unwrap();
        d
    }

    fn euler(d: &Diagram) -> i64 {
        let n = d.crossing_count() as i64;
        n - 2 * n + d.faces().count() as i64
    }

    #[test]
    fn torus_links() {
        let t = diagram("3");
        assert_eq!((t.crossing_count(), t.component_count()), (3, 1));
        assert_eq!(t.writhe().abs(), 3);
        let h = diagram("2");
        assert_eq!((h.crossing_count(), h.component_count()), (2, 2));
        assert_eq!(diagram("0").component_count(), 2);
        assert_eq!(diagram("1").component_count(), 1);
    }

    #[test]
    fn large_link_component_counts() {
        for (s, n, c) in [
            ("2,2,2,2,2+", 11, 5),
            ("(2,2,2) (2 1,2 1)", 12, 4),
            ("(2 1,2 1) 1 (2,2+)", 12, 2),
            ("6*2 2:.(2,-2) 0", 12, 3),
            ("3,3,-3", 9, 1),
            ("6*", 6, 3),
        ] {
            let d = diagram(s);
            assert_eq!((d.crossing_count(), d.component_count()), (n, c), "{s}");
            assert_eq!(euler(&d), 2, "{s}");
        }
    }

    #[test]
    fn alternating_symbols() {
        for s in ["2 2", "3 1 1 3", "2 1 1 1 1 2", "2,2,2", "(2 1,2 1) 1 (2,2+)", "6*", "6*2.3"] {
            assert!(diagram(s).is_alternating(), "{s}");
        }
        assert!(!diagram("3,3,-3").is_alternating());
    }

    #[test]
    fn mirror_symbol_mirrors_diagram() {
        for s in ["3", "2 2", "3,3,-3", "2,2,2+"] {
            let t = parse(s).unwrap();
            assert_eq!(to_diagram(&t.mirror()).writhe(), -to_diagram(&t).writhe(), "{s}");
        }
    }
}
