//! Groups of links sharing an invariant value, counted the way the tables do.

use std::collections::BTreeMap;

use serde::Serialize;

use super::{InvariantRecord, Kind};

/// How a group of size `s` contributes to a count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMode {
    /// Every member of a group counts once.
    #[default]
    Members,
    /// A group of size `s` counts `s (s - 1) / 2`.
    Pairs,
}

/// One table row: counts and integer percents of knots, links and both.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct Row {
    pub knots: usize,
    pub knots_pct: u32,
    pub links: usize,
    pub links_pct: u32,
    pub total: usize,
    pub total_pct: u32,
    pub population_knots: usize,
    pub population_links: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Group {
    pub value: String,
    pub members: Vec<String>,
    pub components: Vec<usize>,
    pub crossings: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KindReport {
    /// `khovanov` keys include torsion; `khovanov-ranks` ignores it.
    pub kind: String,
    pub population: usize,
    pub skipped: usize,
    /// Groups over the whole population.
    pub groups: Vec<Group>,
    /// Groups formed among alternating records only.
    pub alternating: Row,
    /// Groups formed among non-alternating records only.
    pub non_alternating: Row,
    /// Sum of the two rows above.
    pub separated: Row,
    /// Groups formed over everything.
    pub combined: Row,
    /// Alexander groups whose members differ in component-count parity.
    pub parity_violations: Vec<usize>,
    /// Kauffman groups whose members differ in crossing number.
    pub crossing_violations: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CollisionReport {
    pub mode: CountMode,
    pub kinds: Vec<KindReport>,
}

impl CollisionReport {
    pub fn kind(&self, name: &str) -> Option<&KindReport> {
        self.kinds.iter().find(|k| k.kind == name)
    }

    /// Summary table: one line per kind and row type, columns Knots, %, Links, %, Total, %.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["invariant", "rows", "knots", "knots_pct", "links", "links_pct", "total", "total_pct"])
            .expect("write to memory");
        for k in &self.kinds {
            for (name, r) in [
                ("alternating", &k.alternating),
                ("non-alternating", &k.non_alternating),
                ("separated", &k.separated),
                ("combined", &k.combined),
            ] {
                let cells = [
                    k.kind.clone(),
                    name.to_string(),
                    r.knots.to_string(),
                    r.knots_pct.to_string(),
                    r.links.to_string(),
                    r.links_pct.to_string(),
                    r.total.to_string(),
                    r.total_pct.to_string(),
                ];
                w.write_record(&cells).expect("write to memory");
            }
        }
        String::from_utf8(w.into_inner().expect("flush to memory")).expect("csv is utf-8")
    }
}

fn percent(count: usize, population: usize) -> u32 {
    if population == 0 {
        return 0;
    }
    ((200 * count + population) / (2 * population)) as u32
}

fn groups_of<'a>(records: &[&'a InvariantRecord], ranks_only: bool) -> Vec<Vec<&'a InvariantRecord>> {
    let mut by_key: BTreeMap<String, Vec<&InvariantRecord>> = BTreeMap::new();
    for r in records {
        if let Some(k) = r.key(ranks_only) {
            by_key.entry(k).or_default().push(r);
        }
    }
    by_key.into_values().filter(|g| g.len() >= 2).collect()
}

fn row(records: &[&InvariantRecord], ranks_only: bool, mode: CountMode) -> Row {
    let (mut knots, mut links) = (0, 0);
    for g in groups_of(records, ranks_only) {
        let k = g.iter().filter(|r| r.is_knot()).count();
        let l = g.len() - k;
        match mode {
            CountMode::Members => {
                knots += k;
                links += l;
            }
            CountMode::Pairs => {
                knots += k * k.saturating_sub(1) / 2;
                links += l * l.saturating_sub(1) / 2;
            }
        }
    }
    let population_knots = records.iter().filter(|r| r.is_knot()).count();
    let population_links = records.len() - population_knots;
    let total = match mode {
        CountMode::Members => knots + links,
        CountMode::Pairs => groups_of(records, ranks_only).iter().map(|g| g.len() * (g.len() - 1) / 2).sum(),
    };
    Row {
        knots,
        knots_pct: percent(knots, population_knots),
        links,
        links_pct: percent(links, population_links),
        total,
        total_pct: percent(total, records.len()),
        population_knots,
        population_links,
    }
}

fn add(a: Row, b: Row) -> Row {
    let knots = a.knots + b.knots;
    let links = a.links + b.links;
    let pk = a.population_knots + b.population_knots;
    let pl = a.population_links + b.population_links;
    Row {
        knots,
        knots_pct: percent(knots, pk),
        links,
        links_pct: percent(links, pl),
        total: a.total + b.total,
        total_pct: percent(a.total + b.total, pk + pl),
        population_knots: pk,
        population_links: pl,
    }
}

fn kind_report(name: &str, kind: Kind, records: &[&InvariantRecord], ranks_only: bool, mode: CountMode) -> KindReport {
    let ok: Vec<&InvariantRecord> = records.iter().copied().filter(|r| r.value.is_some()).collect();
    let alt: Vec<&InvariantRecord> = ok.iter().copied().filter(|r| r.alternating).collect();
    let non: Vec<&InvariantRecord> = ok.iter().copied().filter(|r| !r.alternating).collect();
    let alternating = row(&alt, ranks_only, mode);
    let non_alternating = row(&non, ranks_only, mode);
    let groups: Vec<Group> = groups_of(&ok, ranks_only)
        .into_iter()
        .map(|g| Group {
            value: g[0].key(ranks_only).expect("grouped records have values"),
            members: g.iter().map(|r| r.source.clone()).collect(),
            components: g.iter().map(|r| r.components).collect(),
            crossings: g.iter().map(|r| r.n).collect(),
        })
        .collect();
    let parity_violations = if kind == Kind::Alexander {
        (0..groups.len()).filter(|&i| groups[i].components.iter().any(|c| c % 2 != groups[i].components[0] % 2)).collect()
    } else {
        Vec::new()
    };
    let crossing_violations = if kind == Kind::Kauffman {
        (0..groups.len()).filter(|&i| groups[i].crossings.iter().any(|&c| c != groups[i].crossings[0])).collect()
    } else {
        Vec::new()
    };
    KindReport {
        kind: name.to_string(),
        population: ok.len(),
        skipped: records.len() - ok.len(),
        groups,
        alternating,
        non_alternating,
        separated: add(alternating, non_alternating),
        combined: row(&ok, ranks_only, mode),
        parity_violations,
        crossing_violations,
    }
}

/// Collision statistics per kind, in the order kinds first appear. Records
/// with errors are left out of the population and counted as skipped.
pub fn collide(records: &[InvariantRecord], mode: CountMode) -> CollisionReport {
    let mut kinds: Vec<Kind> = Vec::new();
    for r in records {
        if !kinds.contains(&r.kind) {
            kinds.push(r.kind);
        }
    }
    let mut reports = Vec::new();
    for kind in kinds {
        let mine: Vec<&InvariantRecord> = records.iter().filter(|r| r.kind == kind).collect();
        reports.push(kind_report(kind.name(), kind, &mine, false, mode));
        if kind == Kind::Khovanov {
            reports.push(kind_report("khovanov-ranks", kind, &mine, true, mode));
        }
    }
    CollisionReport { mode, kinds: reports }
}
