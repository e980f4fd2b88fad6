//! Conway notation: parsing, printing, tangle construction and rational links.
//!
//! Grammar (whitespace is a product separator):
//!
//! ```text
//! symbol  := "6*" slots | expr
//! slots   := slot (("." | ":") slot)*       ":" stands for ".."; an empty slot is 1
//! expr    := product ("," product)* suffix
//! suffix  := "+"* | "-"*                     only after a ramification
//! product := atom atom*
//! atom    := integer | "(" expr ")"
//! ```

mod family;
mod parse;
mod rational;
mod tangle;

use std::fmt;

use thiserror::Error;

pub use family::{family_members, same_link_type, FamilySpec, Parity};
pub use parse::parse;
pub use rational::{continued_fraction, enumerate_rational, rational_symbol, same_rational_link, RationalClass};
pub use tangle::{to_diagram, Tangle};

/// Number of vertex slots of the built-in basic polyhedron.
pub const POLYHEDRON_SLOTS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TangleExpr {
    Int(i64),
    /// `a b c`: each left operand is flipped and added to the next.
    Product(Vec<TangleExpr>),
    /// `a,b,c+`: sum of the flipped children plus `plus` single crossings
    /// (negative `plus` is written with `-` suffixes).
    Ramification { children: Vec<TangleExpr>, plus: i64 },
    /// `6*a.b.c.d.e.f`, always six slots.
    Polyhedral(Vec<TangleExpr>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConwayError {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown basic polyhedron {0:?}")]
    UnknownPolyhedron(String),
    #[error("selected position {0} out of range ({1} entries)")]
    PositionOutOfRange(usize, usize),
    #[error("entry at position {0} is {1}; only entries with |a| >= 2 can be selected")]
    NotSelectable(usize, i64),
}

impl TangleExpr {
    /// Every integer entry negated.
    pub fn mirror(&self) -> TangleExpr {
        match self {
            TangleExpr::Int(n) => TangleExpr::Int(-n),
            TangleExpr::Product(v) => TangleExpr::Product(v.iter().map(Self::mirror).collect()),
            TangleExpr::Ramification { children, plus } => TangleExpr::Ramification {
                children: children.iter().map(Self::mirror).collect(),
                plus: -plus,
            },
            TangleExpr::Polyhedral(v) => TangleExpr::Polyhedral(v.iter().map(Self::mirror).collect()),
        }
    }

    /// Integer entries in printing order (polyhedral defaults and `+` suffixes excluded).
    pub fn entries(&self) -> Vec<i64> {
        let mut out = Vec::new();
        self.visit_ints(&mut |n| {
            out.push(*n);
        });
        out
    }

    fn visit_ints(&self, f: &mut impl FnMut(&i64)) {
        match self {
            TangleExpr::Int(n) => f(n),
            TangleExpr::Product(v) | TangleExpr::Polyhedral(v) => v.iter().for_each(|c| c.visit_ints(f)),
            TangleExpr::Ramification { children, .. } => children.iter().for_each(|c| c.visit_ints(f)),
        }
    }

    pub(crate) fn map_ints(&self, f: &mut impl FnMut(i64) -> i64) -> TangleExpr {
        match self {
            TangleExpr::Int(n) => TangleExpr::Int(f(*n)),
            TangleExpr::Product(v) => TangleExpr::Product(v.iter().map(|c| c.map_ints(f)).collect()),
            TangleExpr::Ramification { children, plus } => TangleExpr::Ramification {
                children: children.iter().map(|c| c.map_ints(f)).collect(),
                plus: *plus,
            },
            TangleExpr::Polyhedral(v) => TangleExpr::Polyhedral(v.iter().map(|c| c.map_ints(f)).collect()),
        }
    }

    /// Crossings of the diagram this symbol builds.
    pub fn crossing_count(&self) -> usize {
        match self {
            TangleExpr::Int(n) => n.unsigned_abs() as usize,
            TangleExpr::Product(v) | TangleExpr::Polyhedral(v) => v.iter().map(Self::crossing_count).sum(),
            TangleExpr::Ramification { children, plus } => {
                children.iter().map(Self::crossing_count).sum::<usize>() + plus.unsigned_abs() as usize
            }
        }
    }

    pub fn is_polyhedral(&self) -> bool {
        match self {
            TangleExpr::Int(_) => false,
            TangleExpr::Polyhedral(_) => true,
            TangleExpr::Product(v) => v.iter().any(Self::is_polyhedral),
            TangleExpr::Ramification { children, .. } => children.iter().any(Self::is_polyhedral),
        }
    }

    fn fmt_atom(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Int(n) => write!(f, "{n}"),
            _ => write!(f, "({self})"),
        }
    }

    fn fmt_product_operand(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Product(v) => {
                for (i, c) in v.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" ")?;
                    }
                    c.fmt_atom(f)?;
                }
                Ok(())
            }
            other => other.fmt_atom(f),
        }
    }
}

impl fmt::Display for TangleExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TangleExpr::Int(n) => write!(f, "{n}"),
            TangleExpr::Product(_) => self.fmt_product_operand(f),
            TangleExpr::Ramification { children, plus } => {
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    c.fmt_product_operand(f)?;
                }
                let mark = if *plus > 0 { "+" } else { "-" };
                f.write_str(&mark.repeat(plus.unsigned_abs() as usize))
            }
            TangleExpr::Polyhedral(slots) => {
                let keep = slots.iter().rposition(|s| *s != TangleExpr::Int(1)).map_or(0, |i| i + 1);
                let parts: Vec<String> = slots[..keep]
                    .iter()
                    .map(|s| match s {
                        TangleExpr::Int(1) => String::new(),
                        other => other.to_string(),
                    })
                    .collect();
                write!(f, "6*{}", parts.join(".").replace("..", ":"))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mirror_negates_entries() {
        let t = parse("3,3,-3").unwrap();
        assert_eq!(t.mirror().to_string(), "-3,-3,3");
        assert_eq!(t.mirror().mirror(), t);
        assert_eq!(parse("3").unwrap().mirror().to_string(), "-3");
        assert_eq!(parse("2,2,2+").unwrap().mirror().to_string(), "-2,-2,-2-");
    }

    #[test]
    fn entries_and_counts() {
        let t = parse("(2 1,2 1) 1 (2,2+)").unwrap();
        assert_eq!(t.entries(), vec![2, 1, 2, 1, 1, 2, 2]);
        assert_eq!(t.crossing_count(), 12);
        assert_eq!(parse("6*2 2:.(2,-2) 0").unwrap().crossing_count(), 12);
        assert_eq!(parse("2,2,2,2,2+").unwrap().crossing_count(), 11);
    }
}
