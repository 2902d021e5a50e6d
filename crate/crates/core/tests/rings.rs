// SPDX-License-Identifier: Apache-2.0

//! Fusion rings: validation, products, simple currents and the catalog
//! models, each compared with an independent hand construction.

mod common;

use common::{ising, oracle_ring_ok, qz, same_under, sl2_by_hand, strs};
use fuselift::catalog;
use fuselift::exactnum::QZ;
use fuselift::fusion::{
    cyclic_group_ring, ring_isomorphic, ring_validate, simple_currents, tensor_ring,
};
use fuselift::{FusionRing, Ring};
use num_bigint::BigInt;

fn z4_group_ring() -> Ring {
    cyclic_group_ring(4, vec![qz(0, 1), qz(1, 8), qz(1, 2), qz(1, 8)]).unwrap()
}

fn trivial_ring() -> Ring {
    FusionRing::new(
        vec!["1".into()],
        0,
        vec![0],
        vec![QZ::zero()],
        [(0, 0, 0, 1)],
    )
    .unwrap()
}

fn names(r: &Ring, ls: &[usize]) -> Vec<String> {
    ls.iter().map(|&l| r.label(l).to_string()).collect()
}

#[test]
fn ising_passes_every_axiom() {
    let r = ising();
    assert!(ring_validate(&r).is_ok());
    assert!(oracle_ring_ok(&r));
    assert!(ring_validate(&trivial_ring()).is_ok());
}

#[test]
fn injected_eps_cubed_breaks_associativity() {
    let good = ising();
    let mut entries: Vec<_> = good.entries().collect();
    let e = good.index_of("eps").unwrap();
    entries.push((e, e, e, 1));
    let bad = FusionRing::new(
        good.labels().to_vec(),
        0,
        vec![0, 1, 2],
        good.weights().to_vec(),
        entries,
    )
    .unwrap();
    let report = ring_validate(&bad);
    assert!(!oracle_ring_ok(&bad));
    assert!(
        report
            .violations
            .iter()
            .any(|v| v.kind() == "associativity"),
        "{report}"
    );
}

#[test]
fn products() {
    let r = ising();
    let pair = |a, b| r.fuse_named(a, b).unwrap();
    let one = |l: &str| vec![(l.to_string(), 1)];
    assert_eq!(
        pair("sigma", "sigma"),
        [("1".to_string(), 1), ("eps".to_string(), 1)]
    );
    for l in ["1", "sigma", "eps"] {
        assert_eq!(pair("1", l), one(l));
    }
    let s = sl2_by_hand(2);
    assert_eq!(
        s.fuse_named("L1", "L1").unwrap(),
        [("L0".to_string(), 1), ("L2".to_string(), 1)]
    );
    assert!(r.fuse_named("tau", "1").is_err());
}

#[test]
fn simple_current_groups() {
    let r = ising();
    let sc = simple_currents(&r);
    assert_eq!(names(&r, &sc.labels), ["1", "eps"]);
    assert_eq!(sc.group.unwrap().group.invariants(), [2]);

    let s = sl2_by_hand(2);
    let sc = simple_currents(&s);
    assert_eq!(names(&s, &sc.labels), ["L0", "L2"]);
    assert_eq!(s.fuse_named("L2", "L2").unwrap(), [("L0".to_string(), 1)]);

    let z = z4_group_ring();
    let sc = simple_currents(&z);
    assert_eq!(sc.labels.len(), 4);
    assert_eq!(sc.group.unwrap().group.invariants(), [4]);
}

#[test]
fn tensor_products() {
    let z2 = cyclic_group_ring(2, vec![qz(0, 1), qz(1, 2)]).unwrap();
    let p = tensor_ring(&ising(), &z2);
    assert_eq!(p.len(), 6);
    assert!(ring_validate(&p).is_ok());
    let same = tensor_ring(&ising(), &trivial_ring());
    assert!(ring_isomorphic(&same, &ising(), true).is_some());
    // weight of eps ⊗ V[2] with q(2) = 1/2 is integral
    let wv = tensor_ring(&ising(), &z4_group_ring());
    let x = wv.index_of("(eps,g2)").unwrap();
    assert!(wv.weight(x).is_zero());
}

#[test]
fn isomorphism_search() {
    let id = ring_isomorphic(&ising(), &ising(), true).unwrap();
    assert_eq!(id, [0, 1, 2]);
    assert!(ring_isomorphic(&ising(), &z4_group_ring(), false).is_none());
    let shuffled = ising().relabeled(|_, l| format!("x_{l}")).unwrap();
    let iso = ring_isomorphic(&shuffled, &ising(), true).unwrap();
    assert!(same_under(&shuffled, &ising(), &iso));
}

#[test]
fn catalog_sl2_matches_the_hand_rule() {
    for k in 1..=7u64 {
        let cat: Ring = catalog::affine_sl2(k).unwrap();
        let hand = sl2_by_hand(k as i64);
        assert_eq!(cat.labels(), hand.labels());
        let id: Vec<usize> = (0..cat.len()).collect();
        assert!(same_under(&cat, &hand, &id), "level {k}");
        assert!(oracle_ring_ok(&cat));
        assert_eq!(cat.unit(), 0);
        let sc = simple_currents(&cat);
        assert_eq!(sc.labels, [0, k as usize]);
    }
    assert_eq!(
        strs(catalog::affine_sl2::<BigInt>(2).unwrap().weights()),
        ["0", "3/16", "1/2"]
    );
    let k1: Ring = catalog::affine_sl2(1).unwrap();
    let z2 = cyclic_group_ring(2, vec![qz(0, 1), qz(1, 4)]).unwrap();
    assert!(ring_isomorphic(&k1, &z2, true).is_some());
}

#[test]
fn catalog_lattices() {
    let q = |k, m| {
        strs(
            catalog::lattice_rank1::<BigInt>(k, m)
                .unwrap()
                .space
                .q_values(),
        )
    };
    assert_eq!(q(2, 1), ["0", "1/8", "1/2", "1/8"]);
    assert_eq!(q(1, 1), ["0", "1/4"]);
    assert_eq!(q(3, 1), ["0", "1/12", "1/3", "3/4", "1/3", "1/12"]);
}

#[test]
fn catalog_parafermions() {
    let ising_cat: Ring = catalog::parafermion_sl2(2).unwrap();
    let iso = ring_isomorphic(&ising_cat, &ising(), true).expect("K(sl2,2) is Ising");
    assert!(same_under(&ising_cat, &ising(), &iso));
    assert_eq!(catalog::parafermion_sl2::<BigInt>(1).unwrap().len(), 1);
    assert_eq!(catalog::parafermion_sl2::<BigInt>(3).unwrap().len(), 6);
    for k in 1..=5u64 {
        let r: Ring = catalog::parafermion_sl2(k).unwrap();
        assert_eq!(r.len() as u64, k * (k + 1) / 2);
        assert!(oracle_ring_ok(&r));
    }
}
