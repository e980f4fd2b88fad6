//! Polynomial invariants of oriented diagrams.
//!
//! Variables: Alexander `x`; Jones `t` (half-integer powers for even numbers
//! of components); HOMFLY-PT `(v, z)` with `v⁻¹P(L+) − vP(L−) = zP(L0)`;
//! Kauffman `(a, z)` with `F = a^(−writhe) Λ`; Tutte `(x, y)`; bracket `A`.

mod alexander;
mod bracket;
mod homfly;
mod kauffman;
mod tutte;

use std::fmt;
use std::str::FromStr;

use crate::laurent::Vars;

pub use alexander::alexander;
pub use bracket::{bracket, bracket_naive, jones, jones_from_bracket};
pub use homfly::{homfly, homfly_with, SkeinCache};
pub use kauffman::{kauffman_f, kauffman_lambda, kauffman_lambda_with};
pub use tutte::{tutte, TutteError};

pub const ALEXANDER_VARS: Vars = Vars::one("x");
pub const JONES_VARS: Vars = Vars::one("t");
pub const BRACKET_VARS: Vars = Vars::one("A");
pub const HOMFLY_VARS: Vars = Vars::two("v", "z");
pub const KAUFFMAN_VARS: Vars = Vars::two("a", "z");
pub const TUTTE_VARS: Vars = Vars::two("x", "y");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum InvariantKind {
    Alexander,
    Jones,
    Homflypt,
    KauffmanF,
    Tutte,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 5] = [
        InvariantKind::Alexander,
        InvariantKind::Jones,
        InvariantKind::Homflypt,
        InvariantKind::KauffmanF,
        InvariantKind::Tutte,
    ];

    pub fn vars(self) -> Vars {
        match self {
            InvariantKind::Alexander => ALEXANDER_VARS,
            InvariantKind::Jones => JONES_VARS,
            InvariantKind::Homflypt => HOMFLY_VARS,
            InvariantKind::KauffmanF => KAUFFMAN_VARS,
            InvariantKind::Tutte => TUTTE_VARS,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Alexander => "alexander",
            InvariantKind::Jones => "jones",
            InvariantKind::Homflypt => "homfly",
            InvariantKind::KauffmanF => "kauffman",
            InvariantKind::Tutte => "tutte",
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "alexander" => Ok(InvariantKind::Alexander),
            "jones" => Ok(InvariantKind::Jones),
            "homfly" | "homflypt" | "homfly-pt" => Ok(InvariantKind::Homflypt),
            "kauffman" | "kauffman_f" | "kauffmanf" => Ok(InvariantKind::KauffmanF),
            "tutte" => Ok(InvariantKind::Tutte),
            other => Err(format!("unknown invariant {other:?}")),
        }
    }
}

#[cfg(test)]
pub(crate) mod checks {
    //! Specializations linking the invariants; shared by unit and property tests.

    use num_bigint::BigInt;

    use super::*;
    use crate::laurent::LaurentPoly;

    fn half(vars: Vars, terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_doubled(vars, terms.iter().map(|&(e, c)| ([e, 0], BigInt::from(c))))
    }

    /// Substitutes into a two-variable polynomial whose second image need not
    /// be a unit: clears negative powers of the second variable first.
    fn substitute2(p: &LaurentPoly, first: LaurentPoly, second: LaurentPoly) -> LaurentPoly {
        let k = (-p.min_doubled(1)).max(0) / 2;
        let cleared = p.shift(&[0, k]);
        let value = cleared.substitute(&[first, second.clone()]).unwrap();
        value.div_exact(&second.pow(k as u32)).expect("specialization is a Laurent polynomial")
    }

    /// `P(v = t, z = t^(1/2) - t^(-1/2))`.
    pub fn homfly_to_jones(p: &LaurentPoly) -> LaurentPoly {
        let v = half(JONES_VARS, &[(2, 1)]);
        let z = half(JONES_VARS, &[(1, 1), (-1, -1)]);
        substitute2(p, v, z)
    }

    /// `P(v = 1, z = x^(1/2) - x^(-1/2))`, normalized.
    pub fn homfly_to_alexander(p: &LaurentPoly) -> LaurentPoly {
        let v = LaurentPoly::one(ALEXANDER_VARS);
        let z = half(ALEXANDER_VARS, &[(1, 1), (-1, -1)]);
        substitute2(p, v, z).normalize_unit()
    }

    /// `Λ(a = -A^3, z = A + A^-1)`, which is the bracket.
    pub fn lambda_to_bracket(l: &LaurentPoly) -> LaurentPoly {
        let a = LaurentPoly::monomial(BRACKET_VARS, -1, &[3]);
        let z = half(BRACKET_VARS, &[(2, 1), (-2, 1)]);
        substitute2(l, a, z)
    }

    /// `T(-t, -t^-1)` and `T(-t^-1, -t)`.
    pub fn tutte_to_jones(t: &LaurentPoly) -> [LaurentPoly; 2] {
        let u = LaurentPoly::monomial(JONES_VARS, -1, &[1]);
        let w = LaurentPoly::monomial(JONES_VARS, -1, &[-1]);
        [t.substitute(&[u.clone(), w.clone()]).unwrap(), t.substitute(&[w, u]).unwrap()]
    }

    /// Equality up to a signed power of the (possibly halved) variables.
    pub fn equal_up_to_unit(a: &LaurentPoly, b: &LaurentPoly) -> bool {
        if a.is_zero() || b.is_zero() {
            return a.is_zero() && b.is_zero();
        }
        let shift: Vec<i64> = (0..a.vars().arity()).map(|i| b.min_doubled(i) - a.min_doubled(i)).collect();
        let mut by = [0; 2];
        by[..shift.len()].copy_from_slice(&shift);
        let moved = a.shift_doubled(by);
        moved == *b || -moved == *b
    }
}

#[cfg(test)]
mod tests {
    use super::checks::*;
    use super::*;
    use crate::diagram::fixtures::{hopf, trefoil};
    use crate::diagram::{CheckerboardGraph, Crossing, Diagram};
    use crate::laurent::LaurentPoly;

    fn figure_eight() -> Diagram {
        crate::diagram::parse_pd("X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]").unwrap()
    }

    fn samples() -> Vec<Diagram> {
        vec![
            Diagram::unknot(),
            Diagram::unlink(2),
            trefoil(),
            trefoil().mirror(),
            hopf(),
            hopf().mirror(),
            figure_eight(),
            trefoil().connected_sum(&figure_eight()),
            Diagram::new(vec![Crossing::new([1, 1, 2, 2], 1)], 0).unwrap(),
        ]
    }

    #[test]
    fn trefoil_values() {
        let t = trefoil();
        assert_eq!(alexander(&t), LaurentPoly::from_coeffs(ALEXANDER_VARS, 0, [1, -1, 1]));
        assert_eq!(jones(&t), LaurentPoly::from_coeffs(JONES_VARS, 1, [1, 0, 1, -1]));
        assert_eq!(jones(&t.mirror()), jones(&t).invert_var(0));
        let want = LaurentPoly::from_terms(HOMFLY_VARS, [(vec![2, 0], 2), (vec![4, 0], -1), (vec![2, 2], 1)]);
        assert_eq!(homfly(&t), want);
        let tait = CheckerboardGraph::from_diagram(&t).unwrap();
        let tt = tutte(&tait).unwrap();
        let x = LaurentPoly::from_terms(TUTTE_VARS, [(vec![1, 0], 1), (vec![0, 1], 1), (vec![0, 2], 1)]);
        let y = LaurentPoly::from_terms(TUTTE_VARS, [(vec![0, 1], 1), (vec![1, 0], 1), (vec![2, 0], 1)]);
        assert!(tt == x || tt == y, "{}", tt.pretty());
    }

    #[test]
    fn figure_eight_values() {
        let f = figure_eight();
        assert_eq!(alexander(&f), LaurentPoly::from_coeffs(ALEXANDER_VARS, 0, [1, -3, 1]));
        assert_eq!(jones(&f), LaurentPoly::from_coeffs(JONES_VARS, -2, [1, -1, 1, -1, 1]));
        assert_eq!(kauffman_f(&f), kauffman_f(&f.mirror()).invert_var(0));
    }

    #[test]
    fn unknot_and_unlink() {
        for k in [jones(&Diagram::unknot()), homfly(&Diagram::unknot()), kauffman_f(&Diagram::unknot())] {
            assert!(k.is_one());
        }
        assert!(alexander(&Diagram::unlink(2)).is_zero());
        let curl = Diagram::new(vec![Crossing::new([1, 1, 2, 2], 1)], 0).unwrap();
        assert!(jones(&curl).is_one() && homfly(&curl).is_one() && kauffman_f(&curl).is_one());
        assert!(kauffman_lambda(&curl) == LaurentPoly::var(KAUFFMAN_VARS, 0));
    }

    #[test]
    fn bracket_matches_state_sum() {
        for d in samples() {
            assert_eq!(bracket(&d), bracket_naive(&d));
        }
    }

    #[test]
    fn specializations() {
        for d in samples() {
            let p = homfly(&d);
            assert_eq!(homfly_to_jones(&p), jones(&d), "{}", p.pretty());
            assert_eq!(homfly_to_alexander(&p), alexander(&d), "{}", p.pretty());
            assert_eq!(lambda_to_bracket(&kauffman_lambda(&d)), bracket(&d));
        }
    }

    #[test]
    fn tutte_of_alternating() {
        for d in [trefoil(), figure_eight(), hopf()] {
            let g = CheckerboardGraph::from_diagram(&d).unwrap();
            let [a, b] = tutte_to_jones(&tutte(&g).unwrap());
            let v = jones(&d);
            assert!(equal_up_to_unit(&a, &v) || equal_up_to_unit(&b, &v));
        }
        let triangle = CheckerboardGraph { vertices: 3, edges: vec![(0, 1, 1), (1, 2, 1), (2, 0, 1)] };
        let want = LaurentPoly::from_terms(TUTTE_VARS, [(vec![2, 0], 1), (vec![1, 0], 1), (vec![0, 1], 1)]);
        assert_eq!(tutte(&triangle).unwrap(), want);
        let split = CheckerboardGraph { vertices: 3, edges: vec![(0, 1, 1)] };
        assert_eq!(tutte(&split), Err(TutteError::Disconnected));
    }

    #[test]
    fn kinds_round_trip() {
        for k in InvariantKind::ALL {
            assert_eq!(k.name().parse::<InvariantKind>().unwrap(), k);
        }
        assert!("foo".parse::<InvariantKind>().is_err());
    }
}
