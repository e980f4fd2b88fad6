//! Kauffman polynomial: the regular isotopy invariant `Λ` and `F = a^(-w) Λ`.

use crate::diagram::{canonical_code, Diagram};
use crate::laurent::LaurentPoly;

use super::homfly::{SkeinCache, MAX_DEPTH};
use super::KAUFFMAN_VARS;

fn mono(c: i64, e: &[i64]) -> LaurentPoly {
    LaurentPoly::monomial(KAUFFMAN_VARS, c, e)
}

/// `Λ(D)` with `Λ(D+) + Λ(D-) = z (Λ(D0) + Λ(D∞))`, positive curl = `a`.
pub fn kauffman_lambda(d: &Diagram) -> LaurentPoly {
    kauffman_lambda_with(d, &SkeinCache::new())
}

pub fn kauffman_lambda_with(d: &Diagram, cache: &SkeinCache) -> LaurentPoly {
    eval(d, cache, 0)
}

/// Ambient isotopy invariant `F = a^(-writhe) Λ`; unknot = 1.
pub fn kauffman_f(d: &Diagram) -> LaurentPoly {
    &mono(1, &[-d.writhe(), 0]) * &kauffman_lambda(d)
}

fn eval(d: &Diagram, cache: &SkeinCache, depth: usize) -> LaurentPoly {
    assert!(depth < MAX_DEPTH, "skein recursion depth guard exceeded");
    let (d, curls) = d.remove_curls();
    let curl_factor = mono(1, &[curls, 0]);
    let key = canonical_code(&d);
    if let Some(p) = cache.get(&key) {
        return &curl_factor * &p;
    }
    let value = match d.first_ascending_crossing() {
        None => {
            // a^w ((a + a^-1) / z - 1)^(c - 1)
            let delta = &(&mono(1, &[1, -1]) + &mono(1, &[-1, -1])) - &mono(1, &[0, 0]);
            &mono(1, &[d.writhe(), 0]) * &delta.pow(d.component_count() as u32 - 1)
        }
        Some(c) => {
            let switched = eval(&d.switch_crossing(c), cache, depth + 1);
            let (a, b) = d.smooth_unoriented(c);
            let smoothed = &eval(&a, cache, depth + 1) + &eval(&b, cache, depth + 1);
            &(&mono(1, &[0, 1]) * &smoothed) - &switched
        }
    };
    cache.insert(key, value.clone());
    &curl_factor * &value
}
