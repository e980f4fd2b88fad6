//! Oriented planar diagrams.
//!
//! A crossing lists the four arcs meeting it counterclockwise, starting with
//! the incoming under-strand, so the under-strand runs from slot 0 to slot 2.
//! The sign records the over-strand direction: `+1` when it enters at slot 3
//! and leaves at slot 1, `-1` for the reverse. Arc identifiers are arbitrary
//! but each must occur exactly twice, once entering a crossing and once leaving.

mod canon;
mod checkerboard;
mod ops;
mod pd;

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

pub use canon::canonical_code;
pub use checkerboard::{CheckerboardGraph, Faces};
pub use pd::{parse_pd, parse_pd_lines};

pub type Arc = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Crossing {
    pub arcs: [Arc; 4],
    pub sign: i8,
}

impl Crossing {
    pub fn new(arcs: [Arc; 4], sign: i8) -> Self {
        Crossing { arcs, sign }
    }

    /// Slot where the over-strand enters.
    pub fn over_in(&self) -> usize {
        if self.sign > 0 {
            3
        } else {
            1
        }
    }

    pub fn over_out(&self) -> usize {
        if self.sign > 0 {
            1
        } else {
            3
        }
    }

    /// The same crossing with over and under exchanged.
    pub fn switched(&self) -> Crossing {
        let a = self.arcs;
        if self.sign > 0 {
            Crossing::new([a[3], a[0], a[1], a[2]], -1)
        } else {
            Crossing::new([a[1], a[2], a[3], a[0]], 1)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("dangling arc {0}")]
    DanglingArc(Arc),
    #[error("arc {0} occurs {1} times")]
    ArcOverused(Arc, usize),
    #[error("arc {0} is not entered exactly once and left exactly once")]
    Orientation(Arc),
    #[error("crossing {0} has sign {1}")]
    BadSign(usize, i8),
    #[error("PD syntax: {0}")]
    Syntax(String),
    #[error("diagram is not alternating")]
    NotAlternating,
    #[error("diagram is not connected")]
    Disconnected,
}

/// Oriented link diagram: crossings plus crossingless unknotted components.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    crossings: Vec<Crossing>,
    loops: usize,
}

/// Where an arc starts (tail) and ends (head): `(crossing, slot)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct ArcEnds {
    pub tail: (usize, usize),
    pub head: (usize, usize),
}

impl Diagram {
    /// Builds and validates a diagram. A diagram with no crossings and no loops is the unknot.
    pub fn new(crossings: Vec<Crossing>, loops: usize) -> Result<Self, Vec<DiagramError>> {
        let loops = if crossings.is_empty() && loops == 0 { 1 } else { loops };
        let d = Diagram { crossings, loops };
        d.validate()?;
        Ok(d)
    }

    /// Skips validation; for internal constructions that preserve the invariants.
    pub(crate) fn from_parts(crossings: Vec<Crossing>, loops: usize) -> Self {
        Diagram { crossings, loops }
    }

    pub fn unknot() -> Self {
        Diagram { crossings: Vec::new(), loops: 1 }
    }

    pub fn unlink(components: usize) -> Self {
        Diagram { crossings: Vec::new(), loops: components.max(1) }
    }

    pub fn crossings(&self) -> &[Crossing] {
        &self.crossings
    }

    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Crossingless components.
    pub fn loops(&self) -> usize {
        self.loops
    }

    /// Checks every structural invariant and returns all violations.
    pub fn validate(&self) -> Result<(), Vec<DiagramError>> {
        let mut errors = Vec::new();
        let mut uses: BTreeMap<Arc, (usize, usize)> = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            if c.sign != 1 && c.sign != -1 {
                errors.push(DiagramError::BadSign(i, c.sign));
                continue;
            }
            for (s, &a) in c.arcs.iter().enumerate() {
                let e = uses.entry(a).or_default();
                if s == 0 || s == c.over_in() {
                    e.0 += 1;
                } else {
                    e.1 += 1;
                }
            }
        }
        for (&a, &(heads, tails)) in &uses {
            match heads + tails {
                1 => errors.push(DiagramError::DanglingArc(a)),
                2 => {
                    if heads != 1 {
                        errors.push(DiagramError::Orientation(a));
                    }
                }
                n => errors.push(DiagramError::ArcOverused(a, n)),
            }
        }
        if errors.is_empty() {
            Ok(())
        } else {
            Err(errors)
        }
    }

    pub fn arc_ends(&self) -> BTreeMap<Arc, ArcEnds> {
        let mut ends: BTreeMap<Arc, ArcEnds> = BTreeMap::new();
        for (i, c) in self.crossings.iter().enumerate() {
            ends.entry(c.arcs[0]).or_default().head = (i, 0);
            ends.entry(c.arcs[2]).or_default().tail = (i, 2);
            ends.entry(c.arcs[c.over_in()]).or_default().head = (i, c.over_in());
            ends.entry(c.arcs[c.over_out()]).or_default().tail = (i, c.over_out());
        }
        ends
    }

    /// Arc leaving crossing `c` on the same strand as the arc entering at `slot`.
    pub fn continuation(&self, c: usize, slot: usize) -> Arc {
        self.crossings[c].arcs[(slot + 2) % 4]
    }

    /// Components with crossings, each as its arcs in traversal order.
    /// Components are ordered by their smallest arc and start there.
    pub fn traced_components(&self) -> Vec<Vec<Arc>> {
        let ends = self.arc_ends();
        let mut seen = BTreeSet::new();
        let mut comps = Vec::new();
        for &start in ends.keys() {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = Vec::new();
            let mut a = start;
            loop {
                seen.insert(a);
                comp.push(a);
                let (c, s) = ends[&a].head;
                a = self.continuation(c, s);
                if a == start {
                    break;
                }
            }
            comps.push(comp);
        }
        comps
    }

    pub fn component_count(&self) -> usize {
        self.traced_components().len() + self.loops
    }

    /// Component index of every arc (loops are not included).
    pub fn arc_components(&self) -> BTreeMap<Arc, usize> {
        self.traced_components()
            .iter()
            .enumerate()
            .flat_map(|(i, comp)| comp.iter().map(move |&a| (a, i)))
            .collect()
    }

    pub fn writhe(&self) -> i64 {
        self.crossings.iter().map(|c| c.sign as i64).sum()
    }

    pub fn positive_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign > 0).count()
    }

    pub fn negative_count(&self) -> usize {
        self.crossings.iter().filter(|c| c.sign < 0).count()
    }

    /// Every crossing switched.
    pub fn mirror(&self) -> Diagram {
        Diagram {
            crossings: self.crossings.iter().map(Crossing::switched).collect(),
            loops: self.loops,
        }
    }

    /// Reverses the orientation of the traced component with index `k`
    /// (in [`Diagram::traced_components`] order).
    pub fn reverse_component(&self, k: usize) -> Diagram {
        let comps = self.arc_components();
        let mut crossings = self.crossings.clone();
        for c in crossings.iter_mut() {
            let under = comps.get(&c.arcs[0]) == Some(&k);
            let over = comps.get(&c.arcs[1]) == Some(&k);
            if under {
                let a = c.arcs;
                c.arcs = [a[2], a[3], a[0], a[1]];
                c.sign = -c.sign;
            }
            if over {
                c.sign = -c.sign;
            }
        }
        Diagram { crossings, loops: self.loops }
    }

    /// `true` if every traced component alternates over and under.
    pub fn is_alternating(&self) -> bool {
        let ends = self.arc_ends();
        for comp in self.traced_components() {
            let passes: Vec<bool> = comp.iter().map(|a| ends[a].head.1 != 0).collect();
            for i in 0..passes.len() {
                if passes[i] == passes[(i + 1) % passes.len()] {
                    return false;
                }
            }
        }
        true
    }

    /// Connectivity of the underlying 4-valent graph (loops count as separate pieces).
    pub fn is_connected(&self) -> bool {
        if self.crossings.is_empty() {
            return self.loops <= 1;
        }
        if self.loops > 0 {
            return false;
        }
        let ends = self.arc_ends();
        let n = self.crossings.len();
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(c) = stack.pop() {
            for a in self.crossings[c].arcs {
                let e = ends[&a];
                for (d, _) in [e.tail, e.head] {
                    if !seen[d] {
                        seen[d] = true;
                        stack.push(d);
                    }
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Arcs renumbered 1, 2, ... along each traced component in order; loops unchanged.
    pub fn relabeled(&self) -> Diagram {
        let mut map = BTreeMap::new();
        let mut next = 1;
        for comp in self.traced_components() {
            for a in comp {
                map.insert(a, next);
                next += 1;
            }
        }
        Diagram {
            crossings: self
                .crossings
                .iter()
                .map(|c| Crossing::new(c.arcs.map(|a| map[&a]), c.sign))
                .collect(),
            loops: self.loops,
        }
    }

    fn max_arc(&self) -> Arc {
        self.crossings.iter().flat_map(|c| c.arcs).max().unwrap_or(0)
    }

    /// Connected sum, splicing the incoming under-arc of the first crossing of each operand.
    /// A crossingless operand contributes only its extra loops.
    pub fn connected_sum(&self, other: &Diagram) -> Diagram {
        if self.crossings.is_empty() {
            let mut d = other.clone();
            d.loops += self.loops.saturating_sub(1);
            return d;
        }
        if other.crossings.is_empty() {
            let mut d = self.clone();
            d.loops += other.loops.saturating_sub(1);
            return d;
        }
        let offset = self.max_arc() + 1;
        let mut a = self.crossings.clone();
        let mut b: Vec<Crossing> = other
            .crossings
            .iter()
            .map(|c| Crossing::new(c.arcs.map(|x| x + offset), c.sign))
            .collect();
        let e = a[0].arcs[0];
        let f = b[0].arcs[0];
        a[0].arcs[0] = f;
        b[0].arcs[0] = e;
        a.extend(b);
        Diagram { crossings: a, loops: self.loops + other.loops }
    }

    /// Faces of the underlying planar 4-valent graph.
    pub fn faces(&self) -> Faces {
        Faces::trace(self)
    }

    /// Shaded-face graph of a connected alternating diagram.
    pub fn checkerboard(&self) -> Result<CheckerboardGraph, DiagramError> {
        CheckerboardGraph::from_diagram(self)
    }

    /// PD text, `PD[X[..], ..., Loop[..]]`, arcs renumbered along components.
    pub fn to_pd_string(&self) -> String {
        let d = self.relabeled();
        let mut parts: Vec<String> = d
            .crossings
            .iter()
            .map(|c| format!("X[{},{},{},{}]", c.arcs[0], c.arcs[1], c.arcs[2], c.arcs[3]))
            .collect();
        let base = 2 * d.crossings.len() as Arc;
        for i in 0..d.loops {
            parts.push(format!("Loop[{}]", base + 1 + i as Arc));
        }
        format!("PD[{}]", parts.join(", "))
    }
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    /// Standard 3-crossing trefoil with all crossings positive.
    pub fn trefoil() -> Diagram {
        // X[1,5,2,4], X[3,1,4,6], X[5,3,6,2] with over strands entering at slot 3
        Diagram::new(
            vec![
                Crossing::new([1, 5, 2, 4], 1),
                Crossing::new([3, 1, 4, 6], 1),
                Crossing::new([5, 3, 6, 2], 1),
            ],
            0,
        )
        .unwrap()
    }

    /// Two-crossing Hopf link.
    pub fn hopf() -> Diagram {
        Diagram::new(vec![Crossing::new([4, 1, 3, 2], -1), Crossing::new([2, 3, 1, 4], -1)], 0).unwrap()
    }
}
