//! Relabeling-invariant code for oriented diagrams, used as a memo key.

use std::collections::BTreeMap;

use super::{Arc, Diagram};

/// Code that is equal for two diagrams differing only by arc labels and
/// crossing order (for diagrams whose crossing graph is connected).
pub fn canonical_code(d: &Diagram) -> Vec<u32> {
    let ends = d.arc_ends();
    let mut best: Option<Vec<u32>> = None;
    for &start in ends.keys() {
        let code = code_from(d, &ends, start);
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    best.unwrap_or_else(|| vec![d.loops() as u32])
}

fn code_from(d: &Diagram, ends: &BTreeMap<Arc, super::ArcEnds>, start: Arc) -> Vec<u32> {
    let mut label: BTreeMap<Arc, u32> = BTreeMap::new();
    let mut order: Vec<Arc> = Vec::with_capacity(ends.len());
    let walk = |s: Arc, label: &mut BTreeMap<Arc, u32>, order: &mut Vec<Arc>| {
        let mut a = s;
        loop {
            label.insert(a, order.len() as u32 + 1);
            order.push(a);
            let (c, slot) = ends[&a].head;
            a = d.continuation(c, slot);
            if a == s {
                break;
            }
        }
    };
    walk(start, &mut label, &mut order);
    let mut k = 0;
    while order.len() < ends.len() {
        if k < order.len() {
            let (c, slot) = ends[&order[k]].head;
            let x = &d.crossings()[c];
            let other = if slot == 0 { x.arcs[x.over_in()] } else { x.arcs[0] };
            if !label.contains_key(&other) {
                walk(other, &mut label, &mut order);
            }
            k += 1;
        } else {
            let s = *ends.keys().find(|a| !label.contains_key(a)).expect("unlabeled arc");
            walk(s, &mut label, &mut order);
        }
    }
    let mut xs: Vec<[u32; 5]> = d
        .crossings()
        .iter()
        .map(|x| {
            let a = x.arcs.map(|a| label[&a]);
            [a[0], a[1], a[2], a[3], (x.sign + 1) as u32]
        })
        .collect();
    xs.sort_unstable();
    let mut code = Vec::with_capacity(1 + 5 * xs.len());
    code.push(d.loops() as u32);
    code.extend(xs.into_iter().flatten());
    code
}
