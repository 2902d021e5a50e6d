// SPDX-License-Identifier: Apache-2.0

//! Hand-built fixtures and brute-force oracles shared by the integration
//! tests. Nothing here goes through the catalog, so the catalog can be
//! checked against it.

#![allow(dead_code)]

use std::path::PathBuf;

use fuselift::abgroup::{FinAbGroup, GroupElement, Subgroup};
use fuselift::exactnum::QZ;
use fuselift::{FusionRing, Problem, Ring, SimpleCurrentGrading, Space};
use num_bigint::BigInt;

pub fn qz(p: i64, q: i64) -> QZ<BigInt> {
    QZ::from_i64(p, q).unwrap()
}

pub fn strs<T: ToString>(xs: impl IntoIterator<Item = T>) -> Vec<String> {
    xs.into_iter().map(|x| x.to_string()).collect()
}

pub fn models_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../models")
}

pub fn ising() -> Ring {
    FusionRing::from_names(
        &["1", "sigma", "eps"],
        "1",
        &[],
        &[qz(0, 1), qz(1, 16), qz(1, 2)],
        &[
            ("1", "1", "1", 1),
            ("1", "sigma", "sigma", 1),
            ("sigma", "1", "sigma", 1),
            ("1", "eps", "eps", 1),
            ("eps", "1", "eps", 1),
            ("sigma", "sigma", "1", 1),
            ("sigma", "sigma", "eps", 1),
            ("sigma", "eps", "sigma", 1),
            ("eps", "sigma", "sigma", 1),
            ("eps", "eps", "1", 1),
        ],
    )
    .unwrap()
}

/// Level-k `sl2` by the truncated Clebsch–Gordan rule, labels `L0 … Lk`.
pub fn sl2_by_hand(k: i64) -> Ring {
    let labels: Vec<String> = (0..=k).map(|a| format!("L{a}")).collect();
    let weights = (0..=k).map(|a| qz(a * (a + 2), 4 * (k + 2))).collect();
    let mut entries = Vec::new();
    for a in 0..=k {
        for b in 0..=k {
            for c in 0..=k {
                let fits = (a - b).abs() <= c && c <= (a + b).min(2 * k - a - b);
                if fits && (a + b + c) % 2 == 0 {
                    entries.push((a as usize, b as usize, c as usize, 1));
                }
            }
        }
    }
    FusionRing::new(labels, 0, (0..=k as usize).collect(), weights, entries).unwrap()
}

/// `(Z_n, r²/(2n))`.
pub fn cyclic_space(n: u64) -> Space {
    let g = FinAbGroup::cyclic(n).unwrap();
    let q = (0..n as i64).map(|r| qz(r * r, 2 * n as i64)).collect();
    Space::new(g, q).unwrap()
}

pub fn el(g: &FinAbGroup, r: i64) -> GroupElement {
    g.element(&[r]).unwrap()
}

pub fn subgroup(g: &FinAbGroup, gens: &[i64]) -> Subgroup {
    let gens: Vec<GroupElement> = gens.iter().map(|&r| el(g, r)).collect();
    Subgroup::generate(g, &gens).unwrap()
}

/// Ising ⊗ (Z4, r²/8) with `D = {0,2}` and `2 ↦ eps`.
pub fn k2_problem() -> Problem {
    k2_with_grade("eps").unwrap()
}

pub fn k2_with_grade(label: &str) -> fuselift::Result<Problem> {
    let w = ising();
    let v = cyclic_space(4);
    let c = v.group().clone();
    let d = subgroup(&c, &[2]);
    let x = w.index_of(label)?;
    let grading = SimpleCurrentGrading::from_pairs(d.clone(), &[(el(&c, 0), 0), (el(&c, 2), x)])?;
    Problem::new(w, v, d, grading)
}

/// Brute-force ring axioms: unit, commutativity, associativity, duality.
pub fn oracle_ring_ok(r: &Ring) -> bool {
    let n = r.len();
    let u = r.unit();
    for x in 0..n {
        for z in 0..n {
            if r.n(u, x, z) != u64::from(x == z) {
                return false;
            }
        }
        for y in 0..n {
            if r.n(x, y, u) != u64::from(y == r.dual(x)) {
                return false;
            }
            for z in 0..n {
                if r.n(x, y, z) != r.n(y, x, z) {
                    return false;
                }
                for f in 0..n {
                    let lhs: u64 = (0..n).map(|e| r.n(x, y, e) * r.n(e, z, f)).sum();
                    let rhs: u64 = (0..n).map(|e| r.n(y, z, e) * r.n(x, e, f)).sum();
                    if lhs != rhs {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every structure constant and weight agrees under `iso[x] = image of x`.
pub fn same_under(r1: &Ring, r2: &Ring, iso: &[usize]) -> bool {
    let n = r1.len();
    (0..n).all(|x| r1.weight(x) == r2.weight(iso[x]))
        && (0..n)
            .all(|x| (0..n).all(|y| (0..n).all(|z| r1.n(x, y, z) == r2.n(iso[x], iso[y], iso[z]))))
}
