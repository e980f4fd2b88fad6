mod common;

use rand::rngs::StdRng;
use rand::SeedableRng;

use common::*;
use knotpoly::diagram::CheckerboardGraph;
use knotpoly::invariants::{alexander, bracket, bracket_naive, homfly, jones, kauffman_f, kauffman_lambda, tutte};
use knotpoly::khovanov::khovanov;

#[test]
fn homfly_specializes_to_jones_and_alexander() {
    for (name, d) in rational_diagrams(8) {
        let p = homfly(&d);
        assert_eq!(homfly_to_jones(&p), jones(&d), "{name}");
        assert_eq!(homfly_to_alexander(&p), alexander(&d), "{name}");
    }
}

#[test]
fn mirror_inverts_jones_and_kauffman() {
    for (name, d) in rational_diagrams(8) {
        let m = d.mirror();
        assert_eq!(jones(&m), invert(&jones(&d)), "{name}");
        assert_eq!(kauffman_f(&m), kauffman_f(&d).invert_var(0), "{name}");
    }
}

#[test]
fn kauffman_specializes_to_bracket() {
    for (name, d) in rational_diagrams(8) {
        assert_eq!(lambda_to_bracket(&kauffman_lambda(&d)), bracket(&d), "{name}");
    }
}

#[test]
fn khovanov_euler_characteristic_is_jones() {
    for (name, d) in rational_diagrams(8) {
        let table = khovanov(&d).unwrap();
        assert_eq!(table.euler_characteristic(), normalized_jones(&jones(&d)), "{name}");
    }
}

#[test]
fn tutte_gives_jones_for_alternating() {
    for (name, d) in rational_diagrams(8) {
        assert!(d.is_alternating(), "{name}");
        let g = CheckerboardGraph::from_diagram(&d).unwrap();
        let [a, b] = tutte_to_jones(&tutte(&g).unwrap());
        let v = jones(&d);
        assert!(equal_up_to_unit(&a, &v) || equal_up_to_unit(&b, &v), "{name}");
    }
}

#[test]
fn connected_sums_multiply() {
    let mut rng = StdRng::seed_from_u64(7);
    for _ in 0..20 {
        let (na, a) = random_rational(&mut rng, 6);
        let (nb, b) = random_rational(&mut rng, 6);
        let s = a.connected_sum(&b);
        let label = format!("{na} # {nb}");
        assert_eq!(jones(&s), &jones(&a) * &jones(&b), "{label}");
        assert_eq!(homfly(&s), &homfly(&a) * &homfly(&b), "{label}");
        assert_eq!(kauffman_f(&s), &kauffman_f(&a) * &kauffman_f(&b), "{label}");
        assert_eq!(alexander(&s), (&alexander(&a) * &alexander(&b)).normalize_unit(), "{label}");
    }
}

#[test]
fn bracket_matches_state_sum() {
    for (name, d) in rational_diagrams(10) {
        assert_eq!(bracket(&d), bracket_naive(&d), "{name}");
    }
}
