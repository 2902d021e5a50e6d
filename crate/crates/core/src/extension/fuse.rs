// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use super::{Extension, SectorId};
use crate::abgroup::GroupElement;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::fusion::FusionRing;

/// Support data for one product `U^{i1,α1} ⊠ U^{i2,α2}`.
///
/// `p` lists the classes `(i3, β3)` with `α1 + α2 - β3 ∈ C(i3, 1)`, `q` the
/// classes `(i3, α3)` with `α3 ∈ C(i3, 1)` and `α1 + α2 - α3 ∈ D`, and
/// `psi[k]` is the position in `q` of the image of `p[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionSupport {
    pub p: Vec<(usize, GroupElement)>,
    pub q: Vec<(usize, GroupElement)>,
    pub psi: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QueryDirection {
    /// `dim I_U` computed from the `W` ring.
    UFromW,
    /// `dim I_W` computed from the `U` ring.
    WFromU,
}

/// Simple currents of `U` and the family `γ ↦ U^γ` over `D^⊥`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UCurrents {
    pub sectors: Vec<SectorId>,
    pub family: Vec<(GroupElement, SectorId)>,
}

impl<I: Scalar> Extension<I> {
    fn require_untwisted(&self, s: &SectorId) -> Result<()> {
        if s.orbit >= self.orbits().len() || !self.problem().v().group().owns(&s.alpha) {
            return Err(Error::Domain(format!(
                "{s} is not a sector of this extension"
            )));
        }
        if !self.is_untwisted(s.orbit, &s.alpha) {
            return Err(Error::Unsupported(format!(
                "{s} is twisted; only untwisted sectors fuse"
            )));
        }
        Ok(())
    }

    /// `U^{i1,α1} ⊠ U^{i2,α2}` from the product `W^{i1,0} ⊠ W^{i2,0}`.
    ///
    /// An output `W^{i3,β3}` with multiplicity `n` contributes `n` copies of
    /// `U^{i3, α1+α2-β3}`.
    pub fn fuse_u(&self, s1: &SectorId, s2: &SectorId) -> Result<Vec<(SectorId, u64)>> {
        self.require_untwisted(s1)?;
        self.require_untwisted(s2)?;
        let o = self.orbits();
        let (r1, r2) = (o.orbit(s1.orbit).rep, o.orbit(s2.orbit).rep);
        let sum = &s1.alpha + &s2.alpha;
        let mut out = BTreeMap::new();
        for &(z, m) in self.problem().w().fuse(r1, r2) {
            let (i3, beta3) = o.coord(z);
            let alpha3 = &sum - beta3;
            if !self.is_untwisted(i3, &alpha3) {
                return Err(Error::Inconsistent(format!(
                    "{s1} x {s2}: constituent {} lands in the twisted class ({i3}, {alpha3})",
                    self.problem().w().label(z)
                )));
            }
            *out.entry(self.canonical(i3, &alpha3)).or_insert(0) += m;
        }
        Ok(out.into_iter().collect())
    }

    /// Same product read off the charge side:
    /// `N_U(s1, s2, (i3, α3)) = N_W(W^{i1,0}, W^{i2,0}, W^{i3, α1+α2-α3})`.
    pub fn fuse_u_by_charge(&self, s1: &SectorId, s2: &SectorId) -> Result<Vec<(SectorId, u64)>> {
        self.require_untwisted(s1)?;
        self.require_untwisted(s2)?;
        let o = self.orbits();
        let (r1, r2) = (o.orbit(s1.orbit).rep, o.orbit(s2.orbit).rep);
        let sum = &s1.alpha + &s2.alpha;
        let d = self.problem().d();
        let mut out = Vec::new();
        for s3 in self.untwisted() {
            let beta3 = &sum - &s3.alpha;
            if !d.contains(&beta3) {
                continue;
            }
            let n = self.problem().w().n(r1, r2, o.label_at(s3.orbit, &beta3));
            if n > 0 {
                out.push((s3.clone(), n));
            }
        }
        Ok(out)
    }

    /// The sets `P` and `Q` and the bijection `ψ(i3, β3) = (i3, α1+α2-β3)`.
    pub fn fusion_support(&self, s1: &SectorId, s2: &SectorId) -> Result<FusionSupport> {
        self.require_untwisted(s1)?;
        self.require_untwisted(s2)?;
        let sum = &s1.alpha + &s2.alpha;
        let d = self.problem().d();
        let c = self.problem().v().group();
        let mut p = Vec::new();
        let mut q = Vec::new();
        for (i3, orb) in self.orbits().orbits().iter().enumerate() {
            let stab = &orb.stabilizer;
            for beta3 in d.elements() {
                if stab.canonical_rep(beta3) == *beta3 && self.is_untwisted(i3, &(&sum - beta3)) {
                    p.push((i3, beta3.clone()));
                }
            }
            for alpha3 in c.elements() {
                if stab.canonical_rep(&alpha3) == alpha3
                    && self.is_untwisted(i3, &alpha3)
                    && d.contains(&(&sum - &alpha3))
                {
                    q.push((i3, alpha3));
                }
            }
        }
        let mut psi = Vec::with_capacity(p.len());
        let mut hit = vec![false; q.len()];
        for (i3, beta3) in &p {
            let image = self.canonical(*i3, &(&sum - beta3));
            let k = q
                .iter()
                .position(|(j, a)| *j == image.orbit && *a == image.alpha)
                .ok_or_else(|| {
                    Error::Inconsistent(format!("ψ({i3}, {beta3}) = {image} lies outside Q"))
                })?;
            // ψ⁻¹(i3, α3) = (i3, α1+α2-α3) must return to the same class.
            let back = self
                .orbits()
                .orbit(*i3)
                .stabilizer
                .canonical_rep(&(&sum - &image.alpha));
            if back != *beta3 || std::mem::replace(&mut hit[k], true) {
                return Err(Error::Inconsistent(format!(
                    "ψ is not injective at ({i3}, {beta3})"
                )));
            }
            psi.push(k);
        }
        if hit.iter().any(|h| !h) {
            return Err(Error::Inconsistent(format!(
                "ψ misses part of Q for {s1} x {s2}"
            )));
        }
        Ok(FusionSupport { p, q, psi })
    }

    fn assemble_u_ring(&self) -> Result<FusionRing<I>> {
        let sectors = self.untwisted();
        let labels: Vec<String> = sectors.iter().map(|s| s.to_string()).collect();
        let weights = sectors
            .iter()
            .map(|s| self.sector(s.orbit, &s.alpha).weight)
            .collect();
        let mut entries = Vec::new();
        for (a, s1) in sectors.iter().enumerate() {
            for (b, s2) in sectors.iter().enumerate() {
                for (s3, m) in self.fuse_u(s1, s2)? {
                    let c = self
                        .untwisted_index(&s3)
                        .expect("fuse_u returns untwisted sectors");
                    entries.push((a, b, c, m));
                }
            }
        }
        let zero = self.problem().v().group().zero();
        let unit = self
            .untwisted_index(&self.canonical(0, &zero))
            .expect("(0, 0) is untwisted");
        FusionRing::with_inferred_duals(labels, unit, weights, entries)
    }

    /// The fusion ring of `U` on untwisted sectors, with weights
    /// `h(W^{i,0}) + q(α)` and duals inferred from `N(X, Y, U) = 1`.
    pub fn build_u_ring(&self) -> Result<&FusionRing<I>> {
        if let Some(r) = self.u_ring.get() {
            return Ok(r);
        }
        let r = self.assemble_u_ring()?;
        Ok(self.u_ring.get_or_init(|| r))
    }

    /// `U^γ = U^{0,γ}` for `γ ∈ D^⊥`.
    pub fn u_gamma(&self, gamma: &GroupElement) -> Result<SectorId> {
        if !self.problem().dperp().contains(gamma) {
            return Err(Error::Domain(format!(
                "{gamma} is not in D^perp = {}",
                self.problem().dperp()
            )));
        }
        Ok(self.canonical(0, gamma))
    }

    /// `SC(U)`, the sectors over orbits of simple currents of `W`, together
    /// with the family `U^γ`.
    pub fn simple_currents_u(&self) -> Result<UCurrents> {
        let w = self.problem().w();
        let sectors = self
            .untwisted()
            .iter()
            .filter(|s| w.is_simple_current(self.orbits().orbit(s.orbit).rep))
            .cloned()
            .collect();
        let family = self
            .problem()
            .dperp()
            .elements()
            .iter()
            .map(|g| Ok((g.clone(), self.u_gamma(g)?)))
            .collect::<Result<_>>()?;
        Ok(UCurrents { sectors, family })
    }

    /// The sector of `U` containing `x ⊗ V^α`, which must be untwisted.
    pub fn sector_of(&self, x: usize, alpha: &GroupElement) -> Result<SectorId> {
        let (i, beta) = self.orbits().coord(x);
        let a = alpha - beta;
        if !self.is_untwisted(i, &a) {
            return Err(Error::Domain(format!(
                "{} ⊗ V^{alpha} does not lie in an untwisted sector",
                self.problem().w().label(x)
            )));
        }
        Ok(self.canonical(i, &a))
    }

    /// Fusion rules for `X^p ⊗ V^{α_p} ⊂ M^p`, `p = 1, 2, 3`, read from the
    /// other side of the correspondence with `γ = α1 + α2 - α3`.
    ///
    /// `UFromW` gives `dim I_U(M3; M1, M2)` as `N_W(X1, X2, W^γ ⊠ X3)` when
    /// `γ ∈ D` and 0 otherwise; `WFromU` gives `dim I_W(X3; X1, X2)` as
    /// `N_U(M1, M2, U^γ ⊠ M3)` when `γ ∈ D^⊥` and 0 otherwise.
    pub fn fusion_rules_query(
        &self,
        direction: QueryDirection,
        xs: [usize; 3],
        charges: [&GroupElement; 3],
    ) -> Result<u64> {
        let ms = [
            self.sector_of(xs[0], charges[0])?,
            self.sector_of(xs[1], charges[1])?,
            self.sector_of(xs[2], charges[2])?,
        ];
        let gamma = &(charges[0] + charges[1]) - charges[2];
        match direction {
            QueryDirection::UFromW => {
                if !self.problem().d().contains(&gamma) {
                    return Ok(0);
                }
                let target = self.orbits().shift(&gamma, xs[2]);
                Ok(self.problem().w().n(xs[0], xs[1], target))
            }
            QueryDirection::WFromU => {
                if !self.problem().dperp().contains(&gamma) {
                    return Ok(0);
                }
                let ring = self.build_u_ring()?;
                let shifted = self.canonical(ms[2].orbit, &(&ms[2].alpha + &gamma));
                let idx = |s: &SectorId| self.untwisted_index(s).expect("untwisted sector");
                Ok(ring.n(idx(&ms[0]), idx(&ms[1]), idx(&shifted)))
            }
        }
    }
}
