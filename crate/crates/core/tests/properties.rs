use proptest::prelude::*;
use weylcert_core::characters::{conjugacy_classes, invariant_dimensions};
use weylcert_core::invariants::{delta_certificate, invariant_space, is_invariant, pi_k, search_condition1};
use weylcert_core::nilpotent::{jordan_types, levi_decompositions};
use weylcert_core::verify::closed_form_witnesses;
use weylcert_core::{Family, WeylGroup, DEFAULT_GUARD};

fn group(f: Family, l: usize) -> WeylGroup {
    WeylGroup::of_type(f, l, DEFAULT_GUARD).unwrap()
}

#[test]
fn invariant_space_dimensions_match_molien() {
    for (f, l, max_d) in [
        (Family::A, 2, 6),
        (Family::A, 3, 6),
        (Family::B, 2, 8),
        (Family::B, 3, 6),
        (Family::C, 3, 6),
        (Family::D, 4, 6),
    ] {
        let w = group(f, l);
        let molien = invariant_dimensions(&w, &conjugacy_classes(&w), max_d).unwrap();
        for d in 0..=max_d {
            let space = invariant_space(&w, d as u32).unwrap();
            assert_eq!(space.len() as u64, molien[d], "{f}{l} degree {d}");
        }
    }
}

#[test]
fn obstructions_only_where_molien_vanishes() {
    let w = group(Family::D, 4);
    let molien = invariant_dimensions(&w, &conjugacy_classes(&w), 8).unwrap();
    for jt in jordan_types(Family::D, 4).unwrap() {
        for d in levi_decompositions(Family::D, &jt, 4).unwrap() {
            let Some(m) = &d.coexponents else { continue };
            let rep = search_condition1(&w, &d.k, m).unwrap();
            if let weylcert_core::invariants::Condition1Status::DegreeObstruction { degree } = rep.status {
                assert_eq!(molien[degree as usize], 0);
            }
        }
    }
}

#[test]
fn delta_passes_whenever_condition1_does() {
    for f in [Family::A, Family::B, Family::C] {
        for l in 1..=3 {
            let w = group(f, l);
            for jt in jordan_types(f, l).unwrap() {
                for d in levi_decompositions(f, &jt, l).unwrap() {
                    let fs = closed_form_witnesses(f, l, d.s).unwrap();
                    let cert = delta_certificate(&w, &d.k, &fs).unwrap();
                    assert!(cert.passed, "{f}{l} ({jt})");
                }
            }
        }
    }
}

fn subset(mask: u32, l: usize) -> Vec<usize> {
    (1..=l).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pi_k_is_skew_under_w_k(fam in 0usize..4, l in 3usize..=4, mask in 0u32..16, pick in 0usize..1000) {
        let f = [Family::A, Family::B, Family::C, Family::D][fam];
        let w = group(f, l);
        let k = subset(mask, l);
        let p = pi_k(w.root_system(), &k);
        let sub = w.subgroup_generated_by(&k);
        let x = w.element(sub[pick % sub.len()]);
        prop_assert!(x.acts_by(&p, x.sign()));
        prop_assert_eq!(p.degree().unwrap() as usize, w.root_system().positive_roots_in(&k).len());
    }

    #[test]
    fn invariant_basis_is_fixed_by_every_element(fam in 0usize..4, d in 0u32..=5, pick in 0usize..1000) {
        let (f, l) = [(Family::A, 3), (Family::B, 3), (Family::C, 2), (Family::D, 4)][fam];
        let w = group(f, l);
        for p in invariant_space(&w, d).unwrap() {
            prop_assert!(is_invariant(&w, &p));
            if p.nvars() == w.root_system().ambient_dim() {
                prop_assert!(w.element(pick % w.order()).acts_by(&p, 1));
            }
        }
    }

    #[test]
    fn weyl_elements_permute_roots(fam in 0usize..4, pick in 0usize..10_000) {
        let (f, l) = [(Family::A, 4), (Family::B, 4), (Family::C, 3), (Family::D, 5)][fam];
        let w = group(f, l);
        let x = w.element(pick % w.order());
        let rs = w.root_system();
        let mut images: Vec<Vec<i64>> = rs.all_roots().iter().map(|r| x.apply(r)).collect();
        images.sort();
        let mut roots = rs.all_roots();
        roots.sort();
        prop_assert_eq!(images, roots);
    }
}
