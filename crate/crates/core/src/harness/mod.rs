//! Batch computation and the collision, family and factorizability experiments.

mod collide;
mod scan;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::conway::{enumerate_rational, parse, to_diagram, ConwayError, TangleExpr};
use crate::diagram::{parse_pd, CheckerboardGraph, Diagram, DiagramError};
use crate::invariants::{self, InvariantKind, SkeinCache};
use crate::khovanov::{self, KhovanovError};
use crate::laurent::LaurentPoly;

pub use collide::{collide, CollisionReport, CountMode, Group, KindReport, Row};
pub use scan::{factor_scan, family_scan, FactorLine, FactorReport, FamilyKindReport, FamilyReport};

/// Anything the harness can compute for a diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Alexander,
    Jones,
    Homfly,
    Kauffman,
    Tutte,
    Khovanov,
}

impl Kind {
    pub const ALL: [Kind; 6] = [Kind::Alexander, Kind::Jones, Kind::Homfly, Kind::Kauffman, Kind::Tutte, Kind::Khovanov];

    pub fn name(self) -> &'static str {
        match self {
            Kind::Alexander => "alexander",
            Kind::Jones => "jones",
            Kind::Homfly => "homfly",
            Kind::Kauffman => "kauffman",
            Kind::Tutte => "tutte",
            Kind::Khovanov => "khovanov",
        }
    }

    pub fn invariant(self) -> Option<InvariantKind> {
        match self {
            Kind::Alexander => Some(InvariantKind::Alexander),
            Kind::Jones => Some(InvariantKind::Jones),
            Kind::Homfly => Some(InvariantKind::Homflypt),
            Kind::Kauffman => Some(InvariantKind::KauffmanF),
            Kind::Tutte => Some(InvariantKind::Tutte),
            Kind::Khovanov => None,
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Kind {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s.eq_ignore_ascii_case("khovanov") {
            return Ok(Kind::Khovanov);
        }
        let k: InvariantKind = s.parse().map_err(|_| HarnessError::UnknownKind(s.to_string()))?;
        Ok(match k {
            InvariantKind::Alexander => Kind::Alexander,
            InvariantKind::Jones => Kind::Jones,
            InvariantKind::Homflypt => Kind::Homfly,
            InvariantKind::KauffmanF => Kind::Kauffman,
            InvariantKind::Tutte => Kind::Tutte,
        })
    }
}

/// Parses a comma-separated list of kinds.
pub fn parse_kinds(s: &str) -> Result<Vec<Kind>, HarnessError> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).map(str::parse).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HarnessError {
    #[error("unknown invariant {0:?}")]
    UnknownKind(String),
    #[error(transparent)]
    Conway(#[from] ConwayError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
    #[error(transparent)]
    Khovanov(#[from] KhovanovError),
    #[error("PD code: {0}")]
    Pd(String),
    #[error("tutte: {0}")]
    Tutte(String),
    #[error("{0} is not defined for this value")]
    NotApplicable(String),
}

/// One input link: its source text and diagram.
#[derive(Debug, Clone)]
pub struct Entry {
    pub source: String,
    pub diagram: Diagram,
}

impl Entry {
    /// Reads a Conway symbol, a PD code, or `A # B` for a connected sum.
    pub fn parse(text: &str) -> Result<Entry, HarnessError> {
        let text = text.trim();
        let mut diagram: Option<Diagram> = None;
        for part in text.split('#') {
            let part = part.trim();
            let d = if part.starts_with("PD") || part.starts_with("X[") || part.starts_with("Loop[") {
                parse_pd(part).map_err(|errs| HarnessError::Pd(errs.iter().map(|e| e.to_string()).collect::<Vec<_>>().join("; ")))?
            } else {
                to_diagram(&parse(part)?)
            };
            diagram = Some(match diagram {
                None => d,
                Some(acc) => acc.connected_sum(&d),
            });
        }
        Ok(Entry { source: text.to_string(), diagram: diagram.expect("split yields a part") })
    }

    pub fn from_symbol(symbol: &TangleExpr) -> Entry {
        Entry { source: symbol.to_string(), diagram: to_diagram(symbol) }
    }
}

/// A line of input that could not be read.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LineError {
    pub line: usize,
    pub source: String,
    pub error: String,
}

/// Entries of a text file, one per line; blank lines and `#` comments are skipped.
pub fn read_population(text: &str) -> (Vec<Entry>, Vec<LineError>) {
    let mut entries = Vec::new();
    let mut errors = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        match Entry::parse(line) {
            Ok(e) => entries.push(e),
            Err(e) => errors.push(LineError { line: i + 1, source: line.to_string(), error: e.to_string() }),
        }
    }
    (entries, errors)
}

/// Rational links with 2 to `max_n` crossings; chiral ones appear with their mirror image.
pub fn rational_population(max_n: usize) -> Vec<Entry> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for class in enumerate_rational(n) {
            out.push(Entry::from_symbol(&class.symbol));
            if class.chiral {
                out.push(Entry::from_symbol(&class.symbol.mirror()));
            }
        }
    }
    out
}

/// Skein caches shared across a batch, one per recursion.
#[derive(Debug, Default)]
pub struct Caches {
    pub homfly: SkeinCache,
    pub kauffman: SkeinCache,
}

/// A computed value: canonical polynomial string, and the torsion key for Khovanov.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Value {
    pub poly: LaurentPoly,
    pub torsion: Option<String>,
}

pub fn evaluate(d: &Diagram, kind: Kind, caches: &Caches) -> Result<Value, HarnessError> {
    let poly = match kind {
        Kind::Alexander => invariants::alexander(d),
        Kind::Jones => invariants::jones(d),
        Kind::Homfly => invariants::homfly_with(d, &caches.homfly),
        Kind::Kauffman => {
            let w = LaurentPoly::monomial(invariants::KAUFFMAN_VARS, 1, &[-d.writhe(), 0]);
            &w * &invariants::kauffman_lambda_with(d, &caches.kauffman)
        }
        Kind::Tutte => {
            let g = CheckerboardGraph::from_diagram(d)?;
            invariants::tutte(&g).map_err(|e| HarnessError::Tutte(e.to_string()))?
        }
        Kind::Khovanov => {
            let t = khovanov::khovanov(d)?;
            return Ok(Value { poly: khovanov::khovanov_polynomial(&t), torsion: Some(t.torsion_key()) });
        }
    };
    Ok(Value { poly, torsion: None })
}

/// One computed (link, invariant) pair.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InvariantRecord {
    pub source: String,
    pub n: usize,
    pub components: usize,
    pub alternating: bool,
    pub kind: Kind,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub torsion: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub error: Option<String>,
    pub millis: f64,
}

impl InvariantRecord {
    /// Grouping key; Khovanov keys include the torsion description unless `ranks_only`.
    pub fn key(&self, ranks_only: bool) -> Option<String> {
        let v = self.value.as_ref()?;
        match (&self.torsion, ranks_only) {
            (Some(t), false) => Some(format!("{v} | {t}")),
            _ => Some(v.clone()),
        }
    }

    pub fn is_knot(&self) -> bool {
        self.components == 1
    }
}

pub fn record(entry: &Entry, kind: Kind, caches: &Caches) -> InvariantRecord {
    let d = &entry.diagram;
    let start = Instant::now();
    let result = evaluate(d, kind, caches);
    let millis = start.elapsed().as_secs_f64() * 1000.0;
    let (value, torsion, error) = match result {
        Ok(v) => (Some(v.poly.serialize()), v.torsion, None),
        Err(e) => (None, None, Some(e.to_string())),
    };
    InvariantRecord {
        source: entry.source.clone(),
        n: d.crossing_count(),
        components: d.component_count(),
        alternating: d.is_alternating(),
        kind,
        value,
        torsion,
        error,
        millis,
    }
}

/// Records for every entry and kind, ordered by entry then kind. Computed in parallel.
pub fn compute_records(entries: &[Entry], kinds: &[Kind]) -> Vec<InvariantRecord> {
    let caches = Caches::default();
    let jobs: Vec<(&Entry, Kind)> = entries.iter().flat_map(|e| kinds.iter().map(move |&k| (e, k))).collect();
    jobs.par_iter().map(|&(e, k)| record(e, k, &caches)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kinds_parse() {
        assert_eq!(parse_kinds("alexander, jones,khovanov").unwrap(), vec![Kind::Alexander, Kind::Jones, Kind::Khovanov]);
        assert!(parse_kinds("alexander,foo").is_err());
        for k in Kind::ALL {
            assert_eq!(k.name().parse::<Kind>().unwrap(), k);
        }
    }

    #[test]
    fn population_lines() {
        let (entries, errors) = read_population("# comment\n3,3,-3\n\n8*1\n3 # 3\nX[1,5,2,4], X[3,1,4,6], X[5,3,6,2]\n");
        assert_eq!(entries.len(), 3);
        assert_eq!(errors.len(), 1);
        assert_eq!(errors[0].line, 4);
        assert!(errors[0].error.contains("unknown basic polyhedron"), "{}", errors[0].error);
        assert_eq!(entries[1].diagram.crossing_count(), 6);
        let (none, errs) = read_population("");
        assert!(none.is_empty() && errs.is_empty());
    }

    #[test]
    fn records() {
        let (entries, _) = read_population("3,3,-3\n3\n");
        let recs = compute_records(&entries, &[Kind::Alexander, Kind::Tutte]);
        assert_eq!(recs.len(), 4);
        assert_eq!(recs[0].value.as_deref(), Some("2*x^0 + -5*x^1 + 2*x^2"));
        assert!(recs[1].error.is_some(), "tutte of a non-alternating diagram");
        assert_eq!((recs[2].source.as_str(), recs[2].kind), ("3", Kind::Alexander));
        let line = serde_json::to_string(&recs[0]).unwrap();
        let back: InvariantRecord = serde_json::from_str(&line).unwrap();
        assert_eq!(back, recs[0]);
    }

    #[test]
    fn rational_population_counts_mirrors() {
        // 2: hopf (amphichiral); 3: trefoil and mirror; 4: figure-eight, 4/1 link and mirror
        let pop = rational_population(4);
        let names: Vec<&str> = pop.iter().map(|e| e.source.as_str()).collect();
        assert_eq!(names.len(), 6, "{names:?}");
    }
}
