//! HOMFLY-PT polynomial by recursion toward descending diagrams.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::diagram::{canonical_code, Diagram};
use crate::laurent::{LaurentPoly, Vars};

use super::HOMFLY_VARS;

/// Guard on the skein recursion depth.
pub const MAX_DEPTH: usize = 4096;

/// Memo of skein values keyed by canonical diagram codes. Safe to share
/// between threads; values are invariants, so a lost race only repeats work.
#[derive(Debug, Default)]
pub struct SkeinCache {
    map: Mutex<HashMap<Vec<u32>, LaurentPoly>>,
}

impl SkeinCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub(crate) fn get(&self, key: &[u32]) -> Option<LaurentPoly> {
        self.map.lock().expect("cache lock").get(key).cloned()
    }

    pub(crate) fn insert(&self, key: Vec<u32>, value: LaurentPoly) {
        self.map.lock().expect("cache lock").entry(key).or_insert(value);
    }

    pub fn len(&self) -> usize {
        self.map.lock().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

fn mono(vars: Vars, c: i64, e: &[i64]) -> LaurentPoly {
    LaurentPoly::monomial(vars, c, e)
}

/// HOMFLY-PT polynomial in `(v, z)`; unknot = 1.
pub fn homfly(d: &Diagram) -> LaurentPoly {
    homfly_with(d, &SkeinCache::new())
}

pub fn homfly_with(d: &Diagram, cache: &SkeinCache) -> LaurentPoly {
    eval(d, cache, 0)
}

fn eval(d: &Diagram, cache: &SkeinCache, depth: usize) -> LaurentPoly {
    assert!(depth < MAX_DEPTH, "skein recursion depth guard exceeded");
    let v = HOMFLY_VARS;
    let (d, _) = d.remove_curls();
    let key = canonical_code(&d);
    if let Some(p) = cache.get(&key) {
        return p;
    }
    let value = match d.first_ascending_crossing() {
        None => {
            // ((v^-1 - v) / z)^(c - 1)
            let unlink = &mono(v, 1, &[-1, -1]) - &mono(v, 1, &[1, -1]);
            unlink.pow(d.component_count() as u32 - 1)
        }
        Some(c) => {
            let switched = eval(&d.switch_crossing(c), cache, depth + 1);
            let smoothed = eval(&d.smooth_oriented(c), cache, depth + 1);
            if d.crossings()[c].sign > 0 {
                // P(L+) = v^2 P(L-) + v z P(L0)
                &(&mono(v, 1, &[2, 0]) * &switched) + &(&mono(v, 1, &[1, 1]) * &smoothed)
            } else {
                // P(L-) = v^-2 P(L+) - v^-1 z P(L0)
                &(&mono(v, 1, &[-2, 0]) * &switched) - &(&mono(v, 1, &[-1, 1]) * &smoothed)
            }
        }
    };
    cache.insert(key, value.clone());
    value
}
