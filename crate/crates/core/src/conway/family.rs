//! Families obtained by enlarging selected integer entries of a symbol.

use super::{ConwayError, TangleExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Parity {
    #[default]
    Any,
    /// Only even increments, which keeps the number of components fixed.
    Even,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilySpec {
    pub base: TangleExpr,
    /// Indices into [`TangleExpr::entries`].
    pub selected: Vec<usize>,
}

impl FamilySpec {
    pub fn new(base: TangleExpr, selected: Vec<usize>) -> Self {
        FamilySpec { base, selected }
    }

    /// Selects every entry with absolute value at least 2.
    pub fn all_selectable(base: TangleExpr) -> Self {
        let selected = base.entries().iter().enumerate().filter(|(_, a)| a.abs() >= 2).map(|(i, _)| i).collect();
        FamilySpec { base, selected }
    }

    /// Symbol with entry `selected[i]` moved away from zero by `increments[i]`.
    pub fn apply(&self, increments: &[i64]) -> TangleExpr {
        let mut pos = 0usize;
        self.base.map_ints(&mut |a| {
            let k = self.selected.iter().position(|&s| s == pos).map_or(0, |i| increments[i]);
            pos += 1;
            a.signum() * (a.abs() + k)
        })
    }
}

/// Every member with increments in `{0} ∪ {1..=k_max}` (even values only for
/// [`Parity::Even`]), the first selected position varying fastest.
pub fn family_members(spec: &FamilySpec, k_max: u32, parity: Parity) -> Result<Vec<TangleExpr>, ConwayError> {
    let entries = spec.base.entries();
    for &s in &spec.selected {
        match entries.get(s) {
            None => return Err(ConwayError::PositionOutOfRange(s, entries.len())),
            Some(&a) if a.abs() < 2 => return Err(ConwayError::NotSelectable(s, a)),
            _ => {}
        }
    }
    let steps: Vec<i64> = std::iter::once(0)
        .chain((1..=k_max as i64).filter(|k| parity == Parity::Any || k % 2 == 0))
        .collect();
    let m = spec.selected.len();
    let mut out = Vec::new();
    let mut idx = vec![0usize; m];
    loop {
        let inc: Vec<i64> = idx.iter().map(|&i| steps[i]).collect();
        out.push(spec.apply(&inc));
        let mut j = 0;
        while j < m {
            idx[j] += 1;
            if idx[j] < steps.len() {
                break;
            }
            idx[j] = 0;
            j += 1;
        }
        if j == m {
            break;
        }
    }
    Ok(out)
}

fn int_entries(v: &[TangleExpr]) -> Option<Vec<i64>> {
    v.iter().map(|t| if let TangleExpr::Int(n) = t { Some(*n) } else { None }).collect()
}

/// `true` when both symbols are recognizably the same unoriented link:
/// rational symbols with equivalent fractions, pretzel symbols whose entries
/// agree up to rotation and reversal, or `(a,b) c` symbols (twist regions on
/// the three edges of a theta graph) with the same entries in any order.
/// `false` means not recognized.
pub fn same_link_type(a: &TangleExpr, b: &TangleExpr) -> bool {
    use TangleExpr::*;
    if a == b {
        return true;
    }
    let rational = |t: &TangleExpr| match t {
        Int(n) => Some(vec![*n]),
        Product(v) => int_entries(v),
        _ => None,
    };
    if let (Some(x), Some(y)) = (rational(a), rational(b)) {
        return super::rational::same_rational_link(&x, &y);
    }
    let pretzel = |t: &TangleExpr| match t {
        Ramification { children, plus: 0 } => int_entries(children),
        _ => None,
    };
    if let (Some(x), Some(y)) = (pretzel(a), pretzel(b)) {
        if x.len() != y.len() {
            return false;
        }
        let mut r: Vec<i64> = y.iter().rev().copied().collect();
        let mut y = y;
        for _ in 0..x.len() {
            if x == y || x == r {
                return true;
            }
            y.rotate_left(1);
            r.rotate_left(1);
        }
    }
    let theta = |t: &TangleExpr| match t {
        Product(v) if v.len() == 2 => match (&v[0], &v[1]) {
            (Ramification { children, plus: 0 }, Int(c)) if children.len() == 2 => {
                let mut e = int_entries(children)?;
                e.push(*c);
                e.sort_unstable();
                Some(e)
            }
            _ => None,
        },
        _ => None,
    };
    matches!((theta(a), theta(b)), (Some(x), Some(y)) if x == y)
}

#[cfg(test)]
mod tests {
    use super::super::parse;
    use super::*;

    fn strings(v: &[TangleExpr]) -> Vec<String> {
        v.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn pretzel_family() {
        let spec = FamilySpec::new(parse("3,3,-3").unwrap(), vec![0]);
        let m = family_members(&spec, 4, Parity::Even).unwrap();
        assert_eq!(strings(&m), ["3,3,-3", "5,3,-3", "7,3,-3"]);
    }

    #[test]
    fn small_families() {
        let spec = FamilySpec::new(parse("2 2").unwrap(), vec![]);
        assert_eq!(strings(&family_members(&spec, 3, Parity::Any).unwrap()), ["2 2"]);
        let spec = FamilySpec::new(parse("2 2").unwrap(), vec![0, 1]);
        assert_eq!(strings(&family_members(&spec, 1, Parity::Any).unwrap()), ["2 2", "3 2", "2 3", "3 3"]);
    }

    #[test]
    fn signs_preserved_and_errors() {
        let spec = FamilySpec::new(parse("3,3,-3").unwrap(), vec![2]);
        assert_eq!(strings(&family_members(&spec, 2, Parity::Even).unwrap()), ["3,3,-3", "3,3,-5"]);
        let bad = FamilySpec::new(parse("2 1").unwrap(), vec![5]);
        assert!(matches!(family_members(&bad, 2, Parity::Any), Err(ConwayError::PositionOutOfRange(5, 2))));
        let bad = FamilySpec::new(parse("2 1").unwrap(), vec![1]);
        assert!(matches!(family_members(&bad, 2, Parity::Any), Err(ConwayError::NotSelectable(1, 1))));
        assert_eq!(FamilySpec::all_selectable(parse("2 1 3").unwrap()).selected, vec![0, 2]);
    }

    #[test]
    fn link_types() {
        let same = |a: &str, b: &str| same_link_type(&parse(a).unwrap(), &parse(b).unwrap());
        assert!(same("4 2 2", "2 2 4"));
        assert!(same("3 1 2", "2 1 3"));
        assert!(!same("3 2", "2 3"));
        assert!(!same("3", "-3"));
        assert!(same("5,3,3", "3,5,3"));
        assert!(same("2,3,4", "4,3,2"));
        assert!(!same("2,3,4,5", "2,4,3,5"));
        assert!(!same("3,3,3", "3 3 3"));
        assert!(same("(4,2) 2", "(2,2) 4"));
        assert!(same("(3,5) 7", "(7,3) 5"));
        assert!(!same("(3,5) 7", "3,5,7"));
    }
}
