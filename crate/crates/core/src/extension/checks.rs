// SPDX-License-Identifier: Apache-2.0

//! Exhaustive consistency checks for an [`Extension`].
//!
//! Each function returns `Ok(())` or an `Inconsistent` error naming the
//! first witness. They are meant for desk-scale instances.

use std::collections::BTreeSet;

use super::{Extension, SectorId};
use crate::abgroup::{characters, GroupElement};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::fusion::ring_validate;

fn fail<T>(msg: String) -> Result<T> {
    Err(Error::Inconsistent(msg))
}

/// Every twist has `|C|·|Irr(W)|/|D|²` sectors.
pub fn counting<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    ext.sector_table().map(|_| ())
}

/// `C(i, η_α) = α + C(i, 1)` for every orbit and every `α ∈ C`.
pub fn coset_shift<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    let c = ext.problem().v().group();
    let trivial = &ext.characters()[0];
    for i in 0..ext.orbits().len() {
        let base = ext.c_set(i, trivial);
        for alpha in c.elements() {
            let mut shifted: Vec<GroupElement> = base.iter().map(|a| &alpha + a).collect();
            shifted.sort();
            if ext.c_set(i, &ext.eta(&alpha)) != shifted {
                return fail(format!("C(i{i}, η_{alpha}) != {alpha} + C(i{i}, 1)"));
            }
        }
    }
    Ok(())
}

/// The diagonal action `(x, α) ↦ (W^β ⊠ x, α + β)` on `Irr(W) × C` is free.
pub fn free_action<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    let p = ext.problem();
    for beta in p.d().elements().iter().filter(|b| !b.is_zero()) {
        for x in 0..p.w().len() {
            for alpha in p.v().group().elements() {
                if p.act(beta, x) == x && &alpha + beta == alpha {
                    return fail(format!("{beta} fixes ({}, {alpha})", p.w().label(x)));
                }
            }
        }
    }
    Ok(())
}

/// `α ↦ η_α` maps `C` onto the characters of `D` with kernel `D^⊥`.
pub fn eta_epimorphism<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    let p = ext.problem();
    let mut image = BTreeSet::new();
    for alpha in p.v().group().elements() {
        let eta = ext.eta(&alpha);
        if eta.is_trivial() != p.dperp().contains(&alpha) {
            return fail(format!(
                "η_{alpha} trivial = {} disagrees with D^perp membership",
                eta.is_trivial()
            ));
        }
        image.insert(eta);
    }
    let all: BTreeSet<_> = characters::<I>(p.d()).into_iter().collect();
    if image != all {
        return fail(format!(
            "η hits {} of {} characters of D",
            image.len(),
            all.len()
        ));
    }
    Ok(())
}

/// `N_W(W^{i1,β1+δ1}, W^{i2,β2+δ2}, W^{i3,β3+δ3}) =
/// N_W(W^{i1,β1}, W^{i2,β2}, W^{i3,β3-δ1-δ2+δ3})` for all arguments.
pub fn w_shift<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    let w = ext.problem().w();
    let o = ext.orbits();
    let d = ext.problem().d().elements();
    let n = w.len();
    for x1 in 0..n {
        for x2 in 0..n {
            for x3 in 0..n {
                for d1 in d {
                    for d2 in d {
                        let lhs_base = (o.shift(d1, x1), o.shift(d2, x2));
                        for d3 in d {
                            let lhs = w.n(lhs_base.0, lhs_base.1, o.shift(d3, x3));
                            let back = &(d3 - d1) - d2;
                            let rhs = w.n(x1, x2, o.shift(&back, x3));
                            if lhs != rhs {
                                return fail(format!(
                                    "W shift identity fails at ({}, {}, {}) with δ = ({d1}, {d2}, {d3})",
                                    w.label(x1),
                                    w.label(x2),
                                    w.label(x3)
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `N_U((i1,α1+γ1), (i2,α2+γ2), (i3,α3+γ3)) =
/// N_U((i1,α1), (i2,α2), (i3,α3-γ1-γ2+γ3))` on the built ring.
pub fn u_shift<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    let ring = ext.build_u_ring()?;
    let g = ext.problem().dperp().elements();
    let sectors = ext.untwisted();
    let idx = |s: &SectorId, shift: &GroupElement| -> usize {
        ext.untwisted_index(&ext.canonical(s.orbit, &(&s.alpha + shift)))
            .expect("D^perp preserves C(i,1)")
    };
    for s1 in sectors {
        for s2 in sectors {
            for s3 in sectors {
                for g1 in g {
                    for g2 in g {
                        for g3 in g {
                            let lhs = ring.n(idx(s1, g1), idx(s2, g2), idx(s3, g3));
                            let rhs = ring.n(
                                idx(s1, &g1.owner().zero()),
                                idx(s2, &g2.owner().zero()),
                                idx(s3, &(&(g3 - g1) - g2)),
                            );
                            if lhs != rhs {
                                return fail(format!("U shift identity fails at ({s1}, {s2}, {s3}) with γ = ({g1}, {g2}, {g3})"));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The constituent route, the charge route and `ψ` agree for every pair.
pub fn psi_consistency<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    for s1 in ext.untwisted() {
        for s2 in ext.untwisted() {
            ext.fusion_support(s1, s2)?;
            let (a, b) = (ext.fuse_u(s1, s2)?, ext.fuse_u_by_charge(s1, s2)?);
            if a != b {
                return fail(format!(
                    "{s1} x {s2}: constituent route {a:?} != charge route {b:?}"
                ));
            }
        }
    }
    Ok(())
}

/// `U^γ ⊠ U^{i,α} = U^{i,α+γ}` on the built ring.
pub fn current_action<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    let ring = ext.build_u_ring()?;
    for gamma in ext.problem().dperp().elements() {
        let ug = ext
            .untwisted_index(&ext.u_gamma(gamma)?)
            .expect("U^γ is untwisted");
        for (k, s) in ext.untwisted().iter().enumerate() {
            let expected = ext.untwisted_index(&ext.canonical(s.orbit, &(&s.alpha + gamma)));
            if ring.single_output(ug, k) != expected {
                return fail(format!(
                    "U^{gamma} ⊠ {s} is not {}",
                    ext.canonical(s.orbit, &(&s.alpha + gamma))
                ));
            }
        }
    }
    Ok(())
}

/// Two untwisted sectors share a `W`-constituent exactly when they lie in
/// one `D^⊥`-orbit.
pub fn shared_constituents<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    let sectors = ext.untwisted();
    let labels: Vec<BTreeSet<usize>> = sectors
        .iter()
        .map(|s| {
            ext.sector(s.orbit, &s.alpha)
                .decomposition
                .iter()
                .map(|(x, _)| *x)
                .collect()
        })
        .collect();
    let dperp = ext.problem().dperp().elements();
    for (a, s1) in sectors.iter().enumerate() {
        for (b, s2) in sectors.iter().enumerate() {
            let share = !labels[a].is_disjoint(&labels[b]);
            let related = dperp
                .iter()
                .any(|g| ext.canonical(s1.orbit, &(&s1.alpha + g)) == *s2);
            if share != related {
                return fail(format!(
                    "{s1} and {s2}: shared constituents = {share}, same orbit = {related}"
                ));
            }
        }
    }
    Ok(())
}

/// Every constituent `W^{i,β} ⊗ V^{α+β}` of an untwisted sector has the
/// sector's weight mod 1.
pub fn component_weights<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    let (w, v) = (ext.problem().w(), ext.problem().v());
    for s in ext.untwisted() {
        let sector = ext.sector(s.orbit, &s.alpha);
        for (x, a) in &sector.decomposition {
            let h = w.weight(*x) + &v.q(a);
            if h != sector.weight {
                return fail(format!(
                    "{} ⊗ V^{a} in {s} has weight {h}, sector weight {}",
                    w.label(*x),
                    sector.weight
                ));
            }
        }
    }
    Ok(())
}

/// The built ring of `U` satisfies the ring axioms.
pub fn u_ring_axioms<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    ring_validate(ext.build_u_ring()?).into_result()
}

/// Runs every check above plus the orbit duality.
pub fn check_all<I: Scalar>(ext: &Extension<I>) -> Result<()> {
    counting(ext)?;
    coset_shift(ext)?;
    free_action(ext)?;
    eta_epimorphism(ext)?;
    component_weights(ext)?;
    w_shift(ext)?;
    psi_consistency(ext)?;
    u_ring_axioms(ext)?;
    u_shift(ext)?;
    current_action(ext)?;
    shared_constituents(ext)?;
    ext.orbit_correspondence()?;
    Ok(())
}
