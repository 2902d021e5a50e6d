// SPDX-License-Identifier: Apache-2.0

//! Sector classification and `U`-fusion on the Ising ⊗ (Z4, r²/8) problem
//! and the parafermion family.

mod common;

use common::{el, k2_problem, k2_with_grade, oracle_ring_ok, same_under, sl2_by_hand, strs};
use fuselift::abgroup::{Character, GroupElement};
use fuselift::extension::{checks, QueryDirection};
use fuselift::fusion::{ring_isomorphic, simple_currents};
use fuselift::{
    catalog, Error, Ext, FusionRing, Problem, Ring, SectorId, SimpleCurrentGrading, Space, Subgroup,
};
use num_bigint::BigInt;

fn ext(p: Problem) -> Ext {
    Ext::new(p).unwrap()
}

fn sid(e: &Ext, i: usize, a: i64) -> SectorId {
    e.canonical(i, &el(e.problem().v().group(), a))
}

fn show(xs: &[(SectorId, u64)]) -> Vec<String> {
    xs.iter().map(|(s, n)| format!("{s}:{n}")).collect()
}

/// Pairs `(x, α)` whose monodromy with every `W^β ⊗ V^β` is `χ(β)`,
/// divided by `|D|` (the `D`-action on pairs is free).
fn oracle_count(p: &Problem, chi: &Character<BigInt>) -> usize {
    let (w, v, d) = (p.w(), p.v(), p.d());
    let mut n = 0;
    for x in 0..w.len() {
        for a in v.group().elements() {
            let ok = d.elements().iter().all(|beta| {
                let j = p.current(beta);
                let y = w.single_output(j, x).unwrap();
                let mono = w.weight(y) - w.weight(j) - w.weight(x).clone();
                mono + v.b(beta, &a) == chi.value(beta)
            });
            n += usize::from(ok);
        }
    }
    assert_eq!(n % d.order(), 0);
    n / d.order()
}

#[test]
fn k2_problem_is_accepted() {
    let p = k2_problem();
    let g = p.v().group().clone();
    assert_eq!(p.dperp(), &common::subgroup(&g, &[2]));
    assert!(k2_with_grade("sigma").is_err());
}

#[test]
fn trivial_problem_is_accepted() {
    let w = common::ising();
    let v = Space::trivial();
    let d = Subgroup::trivial(v.group());
    let grading = SimpleCurrentGrading::new(d.clone(), vec![0]).unwrap();
    let e = ext(Problem::new(w.clone(), v, d, grading).unwrap());
    assert_eq!(e.untwisted().len(), 3);
    let u = e.build_u_ring().unwrap();
    let iso = ring_isomorphic(u, &w, true).unwrap();
    assert!(same_under(u, &w, &iso));
    assert!(e.orbits().orbits().iter().all(|o| o.members.len() == 1));
}

#[test]
fn non_integral_grading_is_rejected() {
    // (Z2, r²/4) graded by 1 ↦ eps: 1/2 + 1/4 is not an integer
    let w = common::ising();
    let v = common::cyclic_space(2);
    let c = v.group().clone();
    let d = common::subgroup(&c, &[1]);
    let eps = w.index_of("eps").unwrap();
    let grading =
        SimpleCurrentGrading::from_pairs(d.clone(), &[(el(&c, 0), 0), (el(&c, 1), eps)]).unwrap();
    let r = Problem::new(w, v, d, grading);
    assert!(matches!(r, Err(Error::NotIntegral(_))), "{r:?}");
}

#[test]
fn k2_orbits() {
    let e = ext(k2_problem());
    let w = e.problem().w();
    let o = e.orbits();
    assert_eq!(o.len(), 2);
    let members: Vec<Vec<&str>> = o
        .orbits()
        .iter()
        .map(|x| x.members.iter().map(|&m| w.label(m)).collect())
        .collect();
    assert_eq!(members, [vec!["1", "eps"], vec!["sigma"]]);
    assert!(o.orbit(0).stabilizer.is_trivial());
    assert_eq!(o.orbit(1).stabilizer.order(), 2);
}

#[test]
fn k3_orbits() {
    let e = ext(catalog::parafermion_problem(3).unwrap());
    assert_eq!(e.problem().w().len(), 6);
    assert_eq!(e.orbits().len(), 2);
    for o in e.orbits().orbits() {
        assert_eq!(o.members.len(), 3);
        assert!(o.stabilizer.is_trivial());
    }
}

#[test]
fn twists_on_the_sigma_orbit() {
    let e = ext(k2_problem());
    let g = e.problem().v().group().clone();
    let two = el(&g, 2);
    // ξ(2) = b_W(eps, sigma) + b_V(2, 1) = 1/2 + 1/2
    assert!(e.xi_character(1, &el(&g, 1)).is_trivial());
    assert!(e.xi_character(0, &el(&g, 0)).is_trivial());
    let chi = e.xi_character(1, &el(&g, 0));
    assert_eq!(chi.value(&two), common::qz(1, 2));
}

#[test]
fn k2_sector_table() {
    let e = ext(k2_problem());
    let t = e.sector_table().unwrap();
    assert_eq!(t.blocks.len(), 2);
    let ids = |b: usize| strs(t.blocks[b].sectors.iter().map(|s| &s.id));
    assert_eq!(ids(0), ["(i0,0)", "(i0,2)", "(i1,1)"]);
    assert_eq!(ids(1), ["(i0,1)", "(i0,3)", "(i1,0)"]);
    let w = e.problem().w();
    let decomp = |s: &fuselift::Sector| -> Vec<String> {
        s.decomposition
            .iter()
            .map(|(x, a)| format!("{}{}", w.label(*x), a))
            .collect()
    };
    assert_eq!(decomp(&t.blocks[0].sectors[0]), ["1[0]", "eps[2]"]);
    assert_eq!(decomp(&t.blocks[0].sectors[2]), ["sigma[1]", "sigma[3]"]);
    assert_eq!(
        strs(t.untwisted().sectors.iter().map(|s| &s.weight)),
        ["0", "1/2", "3/16"]
    );
    // |C|·|Irr(W)|/|D|² = 4·3/4
    for b in &t.blocks {
        assert_eq!(b.sectors.len(), 3);
        assert_eq!(oracle_count(e.problem(), &b.chi), 3);
    }
}

#[test]
fn sector_counts_match_the_monodromy_oracle() {
    let mut problems = vec![k2_problem()];
    for k in 1..=4 {
        problems.push(catalog::parafermion_problem(k).unwrap());
    }
    problems.push(catalog::deform(&k2_problem(), 1).unwrap());
    for p in problems {
        let e = ext(p);
        let t = e.sector_table().unwrap();
        let (c, w, d) = (
            e.problem().v().group().order(),
            e.problem().w().len(),
            e.problem().d().order(),
        );
        assert_eq!(t.blocks.len(), d);
        for b in &t.blocks {
            assert_eq!(b.sectors.len(), c * w / (d * d));
            assert_eq!(b.sectors.len(), oracle_count(e.problem(), &b.chi));
        }
    }
}

#[test]
fn k2_fusion() {
    let e = ext(k2_problem());
    let (u0, u2, s) = (sid(&e, 0, 0), sid(&e, 0, 2), sid(&e, 1, 1));
    assert_eq!(show(&e.fuse_u(&s, &s).unwrap()), ["(i0,0):1", "(i0,2):1"]);
    assert_eq!(show(&e.fuse_u(&u2, &u2).unwrap()), ["(i0,0):1"]);
    for x in e.untwisted() {
        assert_eq!(e.fuse_u(&u0, x).unwrap(), [(x.clone(), 1)]);
        for y in e.untwisted() {
            assert_eq!(e.fuse_u(x, y).unwrap(), e.fuse_u_by_charge(x, y).unwrap());
        }
    }
    let twisted = sid(&e, 1, 0);
    assert!(matches!(e.fuse_u(&twisted, &s), Err(Error::Unsupported(_))));
}

#[test]
fn built_rings_are_level_k_sl2() {
    for k in 1..=5 {
        let e = ext(catalog::parafermion_problem(k).unwrap());
        let u = e.build_u_ring().unwrap();
        assert_eq!(u.len() as i64, k as i64 + 1);
        assert!(oracle_ring_ok(u));
        let hand = sl2_by_hand(k as i64);
        let iso = ring_isomorphic(u, &hand, true).expect("rebuilt ring is sl2 at level k");
        assert!(same_under(u, &hand, &iso));
    }
    let u: Ring = ext(k2_problem()).build_u_ring().unwrap().clone();
    assert_eq!(strs(u.weights()), ["0", "1/2", "3/16"]);
}

#[test]
fn u_simple_currents() {
    let e = ext(k2_problem());
    let sc = e.simple_currents_u().unwrap();
    assert_eq!(strs(&sc.sectors), ["(i0,0)", "(i0,2)"]);
    // |C|·|SC(W)|/|D|²
    assert_eq!(sc.sectors.len(), 4 * 2 / 4);
    let g = e.problem().v().group().clone();
    let u2 = e.u_gamma(&el(&g, 2)).unwrap();
    let s = sid(&e, 1, 1);
    assert_eq!(e.fuse_u(&u2, &s).unwrap(), [(s.clone(), 1)]);
    assert_eq!(sid(&e, 1, 3), s);

    let e3 = ext(catalog::parafermion_problem(3).unwrap());
    let u3 = e3.build_u_ring().unwrap();
    assert_eq!(u3.len(), 4);
    let sc_w = simple_currents(e3.problem().w()).labels.len();
    let expected = e3.problem().v().group().order() * sc_w / 9;
    assert_eq!(e3.simple_currents_u().unwrap().sectors.len(), expected);
    assert_eq!(simple_currents(u3).labels.len(), expected);
}

#[test]
fn fusion_rule_queries() {
    let e = ext(k2_problem());
    let w = e.problem().w();
    let g = e.problem().v().group().clone();
    let (one, sigma) = (w.index_of("1").unwrap(), w.index_of("sigma").unwrap());
    let c = |r| el(&g, r);
    let n = e
        .fusion_rules_query(
            QueryDirection::UFromW,
            [sigma, sigma, one],
            [&c(1), &c(1), &c(0)],
        )
        .unwrap();
    assert_eq!(n, 1);
    let u = e.build_u_ring().unwrap();
    let l1 = e.untwisted_index(&sid(&e, 1, 1)).unwrap();
    let l2 = e.untwisted_index(&sid(&e, 0, 2)).unwrap();
    assert_eq!(u.n(l1, l1, l2), n);
    for x in 0..w.len() {
        let alpha = e
            .problem()
            .v()
            .group()
            .elements()
            .find(|a| e.sector_of(x, a).is_ok())
            .unwrap();
        let q = e
            .fusion_rules_query(QueryDirection::UFromW, [one, x, x], [&c(0), &alpha, &alpha])
            .unwrap();
        assert_eq!(q, 1);
    }

    let e3 = ext(catalog::parafermion_problem(3).unwrap());
    let g3 = e3.problem().v().group().clone();
    let w3 = e3.problem().w();
    let unit = w3.unit();
    let zero = g3.zero();
    let one3 = el(&g3, 1);
    // α3 = α2 - 1 gives γ = 1, outside D
    let pick = |x: usize| g3.elements().find(|a| e3.sector_of(x, a).is_ok()).unwrap();
    let mut asked = 0;
    for x in 0..w3.len() {
        let a: GroupElement = pick(x);
        let a3 = &a - &one3;
        for y in 0..w3.len() {
            if e3.sector_of(y, &a3).is_ok() {
                let n = e3
                    .fusion_rules_query(QueryDirection::UFromW, [unit, x, y], [&zero, &a, &a3])
                    .unwrap();
                assert_eq!(n, 0);
                asked += 1;
            }
        }
    }
    assert!(asked > 0);
}

#[test]
fn k2_orbit_duality() {
    let e = ext(k2_problem());
    let dual = e.orbit_correspondence().unwrap();
    assert_eq!(dual.u_orbits.len(), 2);
    assert_eq!(strs(&dual.u_orbits[0]), ["(i0,0)", "(i0,2)"]);
    assert_eq!(strs(&dual.u_orbits[1]), ["(i1,1)"]);
    assert_eq!(dual.phi, [0, 1]);
    assert_eq!(dual.psi, [0, 1]);
    assert_eq!(dual.u_stabilizers[1], e.orbits().orbit(1).stabilizer);
}

#[test]
fn extension_identities_on_small_problems() {
    for p in [
        k2_problem(),
        catalog::parafermion_problem(3).unwrap(),
        catalog::parafermion_problem(4).unwrap(),
    ] {
        checks::check_all(&ext(p)).unwrap();
    }
}

#[test]
fn sector_names_resolve_canonically() {
    let e = ext(k2_problem());
    let ok = e.resolve(&"(i1,1)".parse().unwrap()).unwrap();
    assert_eq!(ok, sid(&e, 1, 1));
    let err = e
        .resolve(&"(i1,3)".parse().unwrap())
        .unwrap_err()
        .to_string();
    assert!(err.contains("ambiguous") && err.contains("(i1,1)"), "{err}");
    assert!(e.resolve(&"(i7,0)".parse().unwrap()).is_err());
    assert!("sigma".parse::<fuselift::SectorName>().is_err());
}

#[test]
fn a_ring_with_unit_only() {
    let w = FusionRing::new(
        vec!["1".into()],
        0,
        vec![0],
        vec![common::qz(0, 1)],
        [(0, 0, 0, 1)],
    )
    .unwrap();
    let v = Space::trivial();
    let d = Subgroup::trivial(v.group());
    let g = SimpleCurrentGrading::new(d.clone(), vec![0]).unwrap();
    let e = ext(Problem::new(w, v, d, g).unwrap());
    assert_eq!(e.sector_table().unwrap().len(), 1);
}
