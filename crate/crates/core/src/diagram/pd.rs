//! PD text import. Crossings are `X[a,b,c,d]` with the incoming under-arc
//! first; the over-strand direction is inferred by following orientations
//! along each component.

use std::collections::BTreeMap;

use super::{Arc, Crossing, Diagram, DiagramError};

/// Parses `PD[X[..], ..., Loop[..]]`; the outer `PD[...]` wrapper is optional.
pub fn parse_pd(text: &str) -> Result<Diagram, Vec<DiagramError>> {
    let syntax = |m: String| vec![DiagramError::Syntax(m)];
    let mut body = text.trim();
    if let Some(rest) = body.strip_prefix("PD[") {
        body = rest.strip_suffix(']').ok_or_else(|| syntax("unbalanced PD[".into()))?;
    }
    let mut raw = Vec::new();
    let mut loops = 0;
    let mut rest = body.trim();
    while !rest.is_empty() {
        rest = rest.trim_start_matches(|c: char| c == ',' || c.is_whitespace());
        if rest.is_empty() {
            break;
        }
        let open = rest.find('[').ok_or_else(|| syntax(format!("expected '[' in {rest:?}")))?;
        let close = rest.find(']').ok_or_else(|| syntax(format!("expected ']' in {rest:?}")))?;
        if close < open {
            return Err(syntax(format!("misplaced ']' in {rest:?}")));
        }
        let head = rest[..open].trim();
        let args: Vec<&str> = rest[open + 1..close].split(',').map(str::trim).collect();
        match head {
            "X" => {
                if args.len() != 4 {
                    return Err(syntax(format!("X needs 4 arcs, got {}", args.len())));
                }
                let mut arcs = [0 as Arc; 4];
                for (slot, a) in args.iter().enumerate() {
                    arcs[slot] = a.parse().map_err(|_| syntax(format!("bad arc label {a:?}")))?;
                }
                raw.push(arcs);
            }
            "Loop" => loops += 1,
            other => return Err(syntax(format!("unknown element {other:?}"))),
        }
        rest = &rest[close + 1..];
    }
    let signs = infer_signs(&raw)?;
    let crossings = raw.into_iter().zip(signs).map(|(a, s)| Crossing::new(a, s)).collect();
    Diagram::new(crossings, loops)
}

/// One PD code per non-empty line.
pub fn parse_pd_lines(text: &str) -> Vec<Result<Diagram, Vec<DiagramError>>> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(parse_pd).collect()
}

fn infer_signs(raw: &[[Arc; 4]]) -> Result<Vec<i8>, Vec<DiagramError>> {
    let mut occ: BTreeMap<Arc, Vec<(usize, usize)>> = BTreeMap::new();
    for (i, x) in raw.iter().enumerate() {
        for (s, &a) in x.iter().enumerate() {
            occ.entry(a).or_default().push((i, s));
        }
    }
    let mut errors = Vec::new();
    for (&a, v) in &occ {
        match v.len() {
            1 => errors.push(DiagramError::DanglingArc(a)),
            2 => {}
            n => errors.push(DiagramError::ArcOverused(a, n)),
        }
    }
    if !errors.is_empty() {
        return Err(errors);
    }
    let mut head: BTreeMap<Arc, (usize, usize)> = BTreeMap::new();
    let set_head = |head: &mut BTreeMap<Arc, (usize, usize)>, a: Arc, at: (usize, usize)| {
        head.insert(a, at);
    };
    for (&a, v) in &occ {
        for &(i, s) in v {
            if s == 0 {
                set_head(&mut head, a, (i, s));
            } else if s == 2 {
                let other = if v[0] == (i, s) { v[1] } else { v[0] };
                set_head(&mut head, a, other);
            }
        }
    }
    let mut signs: Vec<Option<i8>> = vec![None; raw.len()];
    loop {
        let mut progress = false;
        let mut pending = false;
        for (i, x) in raw.iter().enumerate() {
            if signs[i].is_some() {
                continue;
            }
            let sign = [(1usize, -1i8), (3, 1)].iter().find_map(|&(slot, enter_sign)| {
                head.get(&x[slot]).map(|&h| if h == (i, slot) { enter_sign } else { -enter_sign })
            });
            match sign {
                Some(s) => {
                    signs[i] = Some(s);
                    let (inn, out) = if s > 0 { (3, 1) } else { (1, 3) };
                    head.insert(x[inn], (i, inn));
                    let a = x[out];
                    let other = occ[&a].iter().copied().find(|&o| o != (i, out)).unwrap_or((i, out));
                    head.insert(a, other);
                    progress = true;
                }
                None => pending = true,
            }
        }
        if !pending {
            break;
        }
        if !progress {
            // a component that only passes over: fall back to label order
            let i = signs.iter().position(Option::is_none).expect("pending crossing");
            let x = raw[i];
            let s = if x[3] + 1 == x[1] || x[3] > x[1] + 1 { 1 } else { -1 };
            signs[i] = Some(s);
            let (inn, out) = if s > 0 { (3, 1) } else { (1, 3) };
            head.insert(x[inn], (i, inn));
            let other = occ[&x[out]].iter().copied().find(|&o| o != (i, out)).unwrap_or((i, out));
            head.insert(x[out], other);
        }
    }
    Ok(signs.into_iter().map(|s| s.unwrap_or(1)).collect())
}

#[cfg(test)]
mod tests {
    use super::super::fixtures::trefoil;
    use super::*;

    #[test]
    fn round_trip() {
        let t = trefoil();
        let text = t.to_pd_string();
        let back = parse_pd(&text).unwrap();
        assert_eq!(back.relabeled(), t.relabeled());
        assert_eq!(back.writhe(), 3);
    }

    #[test]
    fn figure_eight_has_zero_writhe() {
        let d = parse_pd("PD[X[4,2,5,1], X[8,6,1,5], X[6,3,7,4], X[2,7,3,8]]").unwrap();
        assert_eq!(d.writhe(), 0);
        assert_eq!(d.component_count(), 1);
    }

    #[test]
    fn loops_and_errors() {
        let d = parse_pd("PD[Loop[1], Loop[2]]").unwrap();
        assert_eq!(d.component_count(), 2);
        assert_eq!(parse_pd("PD[]").unwrap().component_count(), 1);
        assert!(parse_pd("PD[X[1,2,3]]").is_err());
        let errs = parse_pd("X[1,2,3,4]").unwrap_err();
        assert_eq!(errs.len(), 4);
    }

    #[test]
    fn mirror_round_trip() {
        let m = trefoil().mirror();
        let back = parse_pd(&m.to_pd_string()).unwrap();
        assert_eq!(back.writhe(), -3);
    }
}
