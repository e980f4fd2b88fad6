//! Family distinctness scans and factorizability scans.

use serde::Serialize;

use crate::conway::{family_members, same_link_type, ConwayError, FamilySpec, Parity};
use crate::laurent::{factor_bivariate, factor_univariate, FactorStatus};

use super::{evaluate, Caches, Entry, HarnessError, Kind};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyKindReport {
    pub kind: Kind,
    /// Canonical values in member order; `None` where evaluation failed.
    pub values: Vec<Option<String>>,
    /// Index pairs of members with equal values that are not known to be the same link.
    pub coincidences: Vec<(usize, usize)>,
    /// Index pairs with equal values whose symbols give the same link type.
    pub same_type: Vec<(usize, usize)>,
    /// All members share one value.
    pub constant: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyReport {
    pub base: String,
    pub selected: Vec<usize>,
    pub k_max: u32,
    pub members: Vec<String>,
    pub alternating: Vec<bool>,
    pub kinds: Vec<FamilyKindReport>,
}

impl FamilyReport {
    /// Equal values inside a family of alternating members.
    pub fn alternating_coincidences(&self) -> Vec<(Kind, usize, usize)> {
        self.kinds
            .iter()
            .flat_map(|k| k.coincidences.iter().map(move |&(a, b)| (k.kind, a, b)))
            .filter(|&(_, a, b)| self.alternating[a] && self.alternating[b])
            .collect()
    }
}

pub fn family_scan(spec: &FamilySpec, k_max: u32, parity: Parity, kinds: &[Kind]) -> Result<FamilyReport, ConwayError> {
    let members = family_members(spec, k_max, parity)?;
    let entries: Vec<Entry> = members.iter().map(Entry::from_symbol).collect();
    let caches = Caches::default();
    let mut reports = Vec::new();
    for &kind in kinds {
        let values: Vec<Option<String>> =
            entries.iter().map(|e| evaluate(&e.diagram, kind, &caches).ok().map(|v| key(&v))).collect();
        let mut coincidences = Vec::new();
        let mut same_type = Vec::new();
        for a in 0..values.len() {
            for b in a + 1..values.len() {
                if values[a].is_some() && values[a] == values[b] {
                    if same_link_type(&members[a], &members[b]) {
                        same_type.push((a, b));
                    } else {
                        coincidences.push((a, b));
                    }
                }
            }
        }
        let constant = values.iter().all(|v| v.is_some() && *v == values[0]);
        reports.push(FamilyKindReport { kind, values, coincidences, same_type, constant });
    }
    Ok(FamilyReport {
        base: spec.base.to_string(),
        selected: spec.selected.clone(),
        k_max,
        members: entries.iter().map(|e| e.source.clone()).collect(),
        alternating: entries.iter().map(|e| e.diagram.is_alternating()).collect(),
        kinds: reports,
    })
}

fn key(v: &super::Value) -> String {
    match &v.torsion {
        Some(t) => format!("{} | {t}", v.poly.serialize()),
        None => v.poly.serialize(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorLine {
    pub source: String,
    pub kind: Kind,
    /// `factorizable`, `irreducible`, `unknown` or `error`.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<(String, String)>,
    pub content: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FactorReport {
    pub kind: Kind,
    pub total: usize,
    pub factorizable: Vec<String>,
    pub irreducible: usize,
    pub unknown: Vec<String>,
    pub errors: Vec<String>,
    pub lines: Vec<FactorLine>,
}

fn factor_line(e: &Entry, kind: Kind, caches: &Caches) -> FactorLine {
    let verdict = evaluate(&e.diagram, kind, caches).and_then(|v| {
        if kind == Kind::Khovanov {
            return Err(HarnessError::NotApplicable("factorization of the Khovanov polynomial".into()));
        }
        let p = v.poly;
        let f = if p.vars().arity() == 1 { factor_univariate(&p) } else { factor_bivariate(&p) };
        f.map_err(|err| HarnessError::NotApplicable(err.to_string()))
    });
    match verdict {
        Ok(v) => FactorLine {
            source: e.source.clone(),
            kind,
            status: match v.status {
                FactorStatus::Factorizable => "factorizable",
                FactorStatus::Irreducible => "irreducible",
                FactorStatus::Unknown => "unknown",
            }
            .to_string(),
            witness: v.witness.map(|(a, b)| (a.pretty(), b.pretty())),
            content: v.content.to_string(),
            note: v.note,
        },
        Err(err) => FactorLine {
            source: e.source.clone(),
            kind,
            status: "error".to_string(),
            witness: None,
            content: String::new(),
            note: Some(err.to_string()),
        },
    }
}

/// Factorizability verdict of one invariant over a population.
pub fn factor_scan(entries: &[Entry], kind: Kind) -> FactorReport {
    use rayon::prelude::*;
    let caches = Caches::default();
    let lines: Vec<FactorLine> = entries.par_iter().map(|e| factor_line(e, kind, &caches)).collect();
    let pick = |s: &str| -> Vec<String> { lines.iter().filter(|l| l.status == s).map(|l| l.source.clone()).collect() };
    FactorReport {
        kind,
        total: lines.len(),
        factorizable: pick("factorizable"),
        irreducible: lines.iter().filter(|l| l.status == "irreducible").count(),
        unknown: pick("unknown"),
        errors: pick("error"),
        lines,
    }
}

#[cfg(test)]
mod tests {
    use super::super::read_population;
    use super::*;
    use crate::conway::parse;

    #[test]
    fn pretzel_family_constant_alexander() {
        let spec = FamilySpec::new(parse("3,3,-3").unwrap(), vec![0]);
        let r = family_scan(&spec, 4, Parity::Even, &[Kind::Alexander, Kind::Jones]).unwrap();
        assert_eq!(r.members, vec!["3,3,-3", "5,3,-3", "7,3,-3"]);
        assert!(r.kinds[0].constant);
        assert_eq!(r.kinds[0].values[0].as_deref(), Some("2*x^0 + -5*x^1 + 2*x^2"));
        assert!(r.kinds[1].coincidences.is_empty());
        assert!(r.alternating.iter().all(|a| !a));
    }

    #[test]
    fn alternating_family_distinct() {
        let spec = FamilySpec::all_selectable(parse("2 2").unwrap());
        let r = family_scan(&spec, 3, Parity::Any, &[Kind::Jones]).unwrap();
        assert_eq!(r.members.len(), 16);
        assert!(r.alternating_coincidences().is_empty());
        let single = family_scan(&spec, 0, Parity::Any, &[Kind::Jones]).unwrap();
        assert_eq!(single.members.len(), 1);
        assert!(single.kinds[0].coincidences.is_empty());
    }

    #[test]
    fn same_type_members_are_set_apart() {
        let spec = FamilySpec::new(parse("2 2 2").unwrap(), vec![0, 2]);
        let r = family_scan(&spec, 2, Parity::Even, &[Kind::Jones]).unwrap();
        let i = r.members.iter().position(|m| m == "4 2 2").unwrap();
        let j = r.members.iter().position(|m| m == "2 2 4").unwrap();
        assert!(r.kinds[0].same_type.contains(&(i.min(j), i.max(j))));
        assert!(r.alternating_coincidences().is_empty());
    }

    #[test]
    fn factor_verdicts() {
        let (entries, _) = read_population("3 1 1 3\n6\n10\n3\n3 # 2 2\n");
        let r = factor_scan(&entries, Kind::Jones);
        assert_eq!(r.factorizable, vec!["3 1 1 3", "6", "10", "3 # 2 2"]);
        assert_eq!(r.irreducible, 1);
        let k = factor_scan(&entries, Kind::Kauffman);
        assert_eq!(k.factorizable, vec!["3 # 2 2"]);
        let kh = factor_scan(&entries[..1], Kind::Khovanov);
        assert_eq!(kh.errors.len(), 1);
    }
}
