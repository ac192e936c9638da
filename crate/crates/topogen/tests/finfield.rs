mod common;

use std::collections::BTreeMap;
use topogen::finfield::{
    fixed_dim, group_closure, induced_matrix, jordan_type, matrix_from_class, order_formula, standard_generators, Elt,
    GFMatrix, GroupTarget, DEFAULT_CAP,
};
use topogen::invariants::{eigen_profile, Functor};
use topogen::{Error, Family, GroupSpec};

/// Largest eigenspace dimension and fixed space dimension read off a matrix.
fn profile_of(m: &GFMatrix) -> (usize, usize) {
    let jt: BTreeMap<Elt, Vec<usize>> = jordan_type(m).unwrap();
    let d = jt.values().map(Vec::len).max().unwrap_or(0);
    (d, fixed_dim(&m.m))
}

#[test]
fn matrices_realize_catalog_profiles() {
    let mut checked = 0;
    for (fam, n) in [(Family::Sp, 4), (Family::Sp, 6), (Family::SO, 7), (Family::SO, 9), (Family::SO, 10)] {
        for q in [5u32, 7] {
            let g = GroupSpec::new(fam, n, q).unwrap();
            for c in common::catalog(&g) {
                let m = match matrix_from_class(&g, &c, q, None) {
                    Ok(m) => m,
                    Err(Error::Uninstantiable { .. }) => continue,
                    Err(e) => panic!("{g} {c}: {e}"),
                };
                assert!(m.preserves_form(), "{g} {c} over GF({q})");
                let want = eigen_profile(&g, &c).unwrap();
                assert_eq!(profile_of(&m), (want.d, want.e), "{g} {c} over GF({q})");
                if let Some(parts) = c.partition() {
                    assert_eq!(jordan_type(&m).unwrap()[&1], parts, "{g} {c}");
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "only {checked} classes realized");
}

#[test]
fn so6_profiles_match_the_exterior_square() {
    // SO6 classes are written on the 4-dimensional module; ∧² of it is the natural module
    for q in [13u32, 17, 19] {
        let g = GroupSpec::so(6, q).unwrap();
        let mut seen = 0;
        for c in common::catalog(&g) {
            let Ok(m) = matrix_from_class(&g, &c, q, None) else { continue };
            let w = induced_matrix(&m, Functor::Wedge2);
            let want = eigen_profile(&g, &c).unwrap();
            assert_eq!(profile_of(&w), (want.d, want.e), "SO6 {c} over GF({q})");
            seen += 1;
        }
        assert_eq!(seen, common::catalog(&g).len(), "every SO6 shape is realizable over GF({q})");
    }
}

#[test]
fn closure_orders_match_order_polynomials() {
    let cases = [
        (Family::SL, 2, 2),
        (Family::SL, 2, 3),
        (Family::SL, 2, 4),
        (Family::SL, 2, 5),
        (Family::SL, 2, 7),
        (Family::SL, 2, 8),
        (Family::SL, 2, 9),
        (Family::Sp, 4, 2),
    ];
    for (family, n, q) in cases {
        let target = GroupTarget { family, n, q };
        let c = group_closure(&standard_generators(target).unwrap(), DEFAULT_CAP);
        assert!(!c.truncated);
        assert_eq!(c.size as u128, order_formula(family, n, u64::from(q)), "{family:?}{n}({q})");
    }
}

#[test]
fn sl3_orders() {
    assert_eq!(order_formula(Family::SL, 3, 2), 168);
    assert_eq!(order_formula(Family::SL, 3, 3), 5616);
    assert_eq!(order_formula(Family::Sp, 4, 2), 720);
}
