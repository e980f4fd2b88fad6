//! Unreduced Khovanov homology over the integers.
//!
//! Gradings: a generator in resolution `v` with `r` one-smoothings and
//! enhancement `e` sits at `i = r - n₋`, `j = #v₊ - #v₋ + r + n₊ - 2n₋`,
//! where the 0-smoothing is the bracket's A-smoothing. The graded Euler
//! characteristic is `(q + q⁻¹) V(t)` with `t^(1/2) = -q`.

mod cube;
mod snf;

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::diagram::Diagram;
use crate::laurent::{LaurentPoly, Vars};

pub use cube::{cube, ChainComplexSlice};
pub use snf::{diagonalize, Diagonal, SparseMatrix};

/// Hard limit on diagram size.
pub const MAX_CROSSINGS: usize = 12;

/// Variables of the Khovanov polynomial: homological `t`, quantum `q`.
pub const KHOVANOV_VARS: Vars = Vars::two("t", "q");

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KhovanovError {
    #[error("{0} crossings exceeds the limit of {MAX_CROSSINGS}")]
    TooManyCrossings(usize),
    #[error("boundary maps do not compose to zero in quantum grading {0}")]
    NotAComplex(i64),
}

/// One nonzero group `Z^rank ⊕ torsion` at bidegree `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KhovanovEntry {
    pub i: i64,
    pub j: i64,
    pub rank: usize,
    /// Orders of the cyclic torsion summands, as prime powers in increasing order.
    pub torsion: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KhovanovTable {
    pub groups: BTreeMap<(i64, i64), (usize, Vec<u64>)>,
}

impl KhovanovTable {
    pub fn rank(&self, i: i64, j: i64) -> usize {
        self.groups.get(&(i, j)).map_or(0, |g| g.0)
    }

    pub fn torsion(&self, i: i64, j: i64) -> &[u64] {
        self.groups.get(&(i, j)).map_or(&[], |g| &g.1)
    }

    pub fn has_torsion(&self) -> bool {
        self.groups.values().any(|g| !g.1.is_empty())
    }

    pub fn entries(&self) -> Vec<KhovanovEntry> {
        self.groups
            .iter()
            .map(|(&(i, j), (rank, torsion))| KhovanovEntry { i, j, rank: *rank, torsion: torsion.clone() })
            .collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.entries()).expect("table serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<KhovanovTable> {
        let entries: Vec<KhovanovEntry> = serde_json::from_str(s)?;
        let groups = entries.into_iter().map(|e| ((e.i, e.j), (e.rank, e.torsion))).collect();
        Ok(KhovanovTable { groups })
    }

    /// Canonical torsion description, e.g. `(2,7):2;(3,9):2,4`; empty without torsion.
    pub fn torsion_key(&self) -> String {
        self.groups
            .iter()
            .filter(|(_, g)| !g.1.is_empty())
            .map(|((i, j), g)| {
                let orders: Vec<String> = g.1.iter().map(u64::to_string).collect();
                format!("({i},{j}):{}", orders.join(","))
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// `Σ (-1)^i q^j rank(i, j)` in the variable `q`.
    pub fn euler_characteristic(&self) -> LaurentPoly {
        let vars = Vars::one("q");
        LaurentPoly::from_terms(
            vars,
            self.groups.iter().map(|(&(i, j), g)| (vec![j], if i % 2 == 0 { g.0 as i64 } else { -(g.0 as i64) })),
        )
    }
}

/// Homology of every slice. Slices are independent and run in parallel.
pub fn homology(slices: &[ChainComplexSlice]) -> Result<KhovanovTable, KhovanovError> {
    let parts: Vec<Result<Vec<((i64, i64), (usize, Vec<u64>))>, KhovanovError>> =
        slices.par_iter().map(slice_homology).collect();
    let mut groups = BTreeMap::new();
    for part in parts {
        groups.extend(part?);
    }
    Ok(KhovanovTable { groups })
}

fn slice_homology(s: &ChainComplexSlice) -> Result<Vec<((i64, i64), (usize, Vec<u64>))>, KhovanovError> {
    if !s.is_complex() {
        return Err(KhovanovError::NotAComplex(s.j));
    }
    let diags: Vec<Diagonal> = s.maps.iter().map(diagonalize).collect();
    let mut out = Vec::new();
    for r in 0..s.dims.len() {
        let outgoing = if r < diags.len() { diags[r].rank } else { 0 };
        let (incoming, torsion) = if r > 0 { (diags[r - 1].rank, diags[r - 1].prime_powers()) } else { (0, Vec::new()) };
        let rank = s.dims[r] - outgoing - incoming;
        if rank > 0 || !torsion.is_empty() {
            out.push(((r as i64 - s.shift, s.j), (rank, torsion)));
        }
    }
    Ok(out)
}

/// Khovanov table of a diagram.
pub fn khovanov(d: &Diagram) -> Result<KhovanovTable, KhovanovError> {
    homology(&cube(d)?)
}

/// `Σ rank(i, j) t^i q^j`; torsion is kept apart in [`KhovanovTable::torsion_key`].
pub fn khovanov_polynomial(t: &KhovanovTable) -> LaurentPoly {
    LaurentPoly::from_terms(
        KHOVANOV_VARS,
        t.groups.iter().filter(|(_, g)| g.0 > 0).map(|(&(i, j), g)| (vec![i, j], BigInt::from(g.0))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::fixtures::{hopf, trefoil};
    use crate::invariants::jones;

    /// `(q + q^-1) V` with `t^(1/2) = -q`.
    fn normalized_jones(d: &Diagram) -> LaurentPoly {
        let q = Vars::one("q");
        let v = jones(d);
        let mapped = LaurentPoly::from_terms(
            q,
            v.terms().map(|(e, c)| {
                // t^(e/2) = (-q)^e
                let c = if e[0] % 2 == 0 { c.clone() } else { -c.clone() };
                (vec![e[0]], c)
            }),
        );
        &mapped * &LaurentPoly::from_terms(q, [(vec![1], 1), (vec![-1], 1)])
    }

    #[test]
    fn unknot() {
        let t = khovanov(&Diagram::unknot()).unwrap();
        assert_eq!(t.entries().len(), 2);
        assert_eq!((t.rank(0, -1), t.rank(0, 1)), (1, 1));
        let want = LaurentPoly::from_terms(KHOVANOV_VARS, [(vec![0, 1], 1), (vec![0, -1], 1)]);
        assert_eq!(khovanov_polynomial(&t), want);
        let slices = cube(&Diagram::unknot()).unwrap();
        assert!(slices.iter().all(|s| s.maps.is_empty()));
    }

    #[test]
    fn trefoil_table() {
        let d = trefoil();
        let slices = cube(&d).unwrap();
        assert!(slices.iter().all(ChainComplexSlice::is_complex));
        let t = homology(&slices).unwrap();
        // right-handed trefoil: q + q^3 + t^2 q^5 + t^3 q^9, Z/2 at (3, 7)
        let want = LaurentPoly::from_terms(
            KHOVANOV_VARS,
            [(vec![0, 1], 1), (vec![0, 3], 1), (vec![2, 5], 1), (vec![3, 9], 1)],
        );
        assert_eq!(khovanov_polynomial(&t), want);
        assert_eq!(t.torsion(3, 7), &[2]);
        assert_eq!(t.torsion_key(), "(3,7):2");
        assert_eq!(t.euler_characteristic(), normalized_jones(&d));
    }

    #[test]
    fn euler_matches_jones() {
        let unlink = Diagram::unlink(2);
        for d in [hopf(), hopf().mirror(), trefoil().mirror(), unlink, trefoil().connected_sum(&hopf())] {
            let slices = cube(&d).unwrap();
            let total: usize = slices.iter().map(ChainComplexSlice::generator_count).sum();
            assert!(total >= 1 << d.crossing_count());
            assert_eq!(homology(&slices).unwrap().euler_characteristic(), normalized_jones(&d));
        }
    }

    #[test]
    fn mirror_negates_degrees() {
        let a = khovanov(&trefoil()).unwrap();
        let b = khovanov(&trefoil().mirror()).unwrap();
        for (&(i, j), g) in &a.groups {
            assert_eq!(b.rank(-i, -j), g.0);
        }
    }

    #[test]
    fn json_round_trip() {
        let t = khovanov(&trefoil()).unwrap();
        let s = t.to_json();
        assert!(s.starts_with("[{\"i\":0,\"j\":1,\"rank\":1,\"torsion\":[]}"));
        assert_eq!(KhovanovTable::from_json(&s).unwrap(), t);
    }

    #[test]
    fn figure_eight_table() {
        let d = crate::diagram::parse_pd("X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]").unwrap();
        let t = khovanov(&d).unwrap();
        let free: Vec<(i64, i64, usize)> =
            t.groups.iter().filter(|(_, g)| g.0 > 0).map(|(&(i, j), g)| (i, j, g.0)).collect();
        assert_eq!(free, vec![(-2, -5, 1), (-1, -1, 1), (0, -1, 1), (0, 1, 1), (1, 1, 1), (2, 5, 1)]);
        assert_eq!(t.torsion_key(), "(-1,-3):2;(2,3):2");
    }

    #[test]
    fn alternating_knots_are_thin() {
        for s in ["5", "3 2", "4 2", "3 1 1 3", "2,3,3"] {
            let d = crate::conway::to_diagram(&crate::conway::parse(s).unwrap());
            assert_eq!(d.component_count(), 1);
            let t = khovanov(&d).unwrap();
            let diagonals: std::collections::BTreeSet<i64> =
                t.groups.iter().filter(|(_, g)| g.0 > 0).map(|(&(i, j), _)| j - 2 * i).collect();
            assert_eq!(diagonals.len(), 2, "{s}");
            assert_eq!(diagonals.last().unwrap() - diagonals.first().unwrap(), 2, "{s}");
            assert!(t.groups.values().all(|g| g.1.iter().all(|&p| p == 2)), "{s}");
        }
    }

    #[test]
    fn guard() {
        let big = crate::conway::to_diagram(&crate::conway::parse("13").unwrap());
        assert_eq!(cube(&big).unwrap_err(), KhovanovError::TooManyCrossings(13));
    }
}
