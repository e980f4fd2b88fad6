//! Exact knot and link polynomial invariants.
//!
//! Links are entered in Conway notation ([`conway`]), realized as planar
//! diagrams ([`diagram`]), and evaluated by the invariants in [`invariants`]
//! and [`khovanov`]. The [`harness`] module runs collision and
//! factorizability experiments over populations of links.

pub mod laurent;
pub mod diagram;
pub mod conway;
pub mod invariants;
pub mod khovanov;
pub mod harness;
