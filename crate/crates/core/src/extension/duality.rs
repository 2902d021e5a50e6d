// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;

use super::{Extension, SectorId};
use crate::abgroup::{GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// The bijection between `D^⊥`-orbits on `Irr(U)` and `D`-orbits on `Irr(W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDuality {
    /// `D^⊥`-orbits of untwisted sectors, ordered by smallest member.
    pub u_orbits: Vec<Vec<SectorId>>,
    /// `(D^⊥)_j` for each `U`-orbit, computed on the built ring.
    pub u_stabilizers: Vec<Subgroup>,
    /// `phi[j]` is the `W`-orbit whose labels make up orbit `j`.
    pub phi: Vec<usize>,
    /// `psi[i]` is the `U`-orbit built from the charges solving `ξ_{i,λ} = 1`.
    pub psi: Vec<usize>,
}

impl OrbitDuality {
    /// Checks `Φ∘Ψ = id`, `Ψ∘Φ = id`, the size ratio `|O_U| / |Φ(O_U)| =
    /// |D^⊥| / |D|` and equality of stabilizers.
    pub fn verify<I: Scalar>(&self, ext: &Extension<I>) -> Result<()> {
        let o = ext.orbits();
        for (j, &i) in self.phi.iter().enumerate() {
            if self.psi.get(i) != Some(&j) {
                return Err(Error::Inconsistent(format!(
                    "Ψ(Φ(U-orbit {j})) != U-orbit {j}"
                )));
            }
        }
        for (i, &j) in self.psi.iter().enumerate() {
            if self.phi.get(j) != Some(&i) {
                return Err(Error::Inconsistent(format!(
                    "Φ(Ψ(W-orbit {i})) != W-orbit {i}"
                )));
            }
        }
        let (d, dperp) = (ext.problem().d().order(), ext.problem().dperp().order());
        for (j, members) in self.u_orbits.iter().enumerate() {
            let w_size = o.orbit(self.phi[j]).members.len();
            if members.len() * d != dperp * w_size {
                return Err(Error::Inconsistent(format!(
                    "U-orbit {j} has {} members over a W-orbit of {w_size}; ratio must be {dperp}/{d}",
                    members.len()
                )));
            }
            let di = &o.orbit(self.phi[j]).stabilizer;
            if &self.u_stabilizers[j] != di {
                return Err(Error::Inconsistent(format!(
                    "(D^perp)_{j} = {} but D_{} = {di}",
                    self.u_stabilizers[j], self.phi[j]
                )));
            }
        }
        Ok(())
    }
}

impl<I: Scalar> Extension<I> {
    /// `D^⊥`-orbits of `Irr(U)` under `M ↦ U^γ ⊠ M`, evaluated on the built ring.
    fn dperp_orbits(&self) -> Result<(Vec<Vec<usize>>, Vec<Subgroup>)> {
        let ring = self.build_u_ring()?;
        let dperp = self.problem().dperp();
        let gammas: Vec<(GroupElement, usize)> = dperp
            .elements()
            .iter()
            .map(|g| {
                Ok((
                    g.clone(),
                    self.untwisted_index(&self.u_gamma(g)?)
                        .expect("U^γ is untwisted"),
                ))
            })
            .collect::<Result<_>>()?;
        let n = ring.len();
        let mut seen = vec![false; n];
        let mut orbits = Vec::new();
        let mut stabs = Vec::new();
        for m in 0..n {
            if seen[m] {
                continue;
            }
            let mut members = BTreeSet::new();
            let mut stab = Vec::new();
            for (g, ug) in &gammas {
                let image = ring.single_output(*ug, m).ok_or_else(|| {
                    Error::Inconsistent(format!("U^{g} ⊠ {} is not irreducible", ring.label(m)))
                })?;
                if image == m {
                    stab.push(g.clone());
                }
                members.insert(image);
            }
            for &x in &members {
                seen[x] = true;
            }
            orbits.push(members.into_iter().collect());
            stabs.push(Subgroup::from_elements(dperp.owner(), &stab)?);
        }
        Ok((orbits, stabs))
    }

    /// Computes `Φ` by reading `W`-constituents off decompositions and `Ψ`
    /// by solving `b_W(W^β, W^{i,0}) + b_V(β, λ) = 0` for `λ`, then checks
    /// the result with [`OrbitDuality::verify`].
    pub fn orbit_correspondence(&self) -> Result<OrbitDuality> {
        let (orbits, u_stabilizers) = self.dperp_orbits()?;
        let o = self.orbits();
        let sectors = self.untwisted();
        let mut phi = Vec::with_capacity(orbits.len());
        for members in &orbits {
            let mut found: Option<BTreeSet<usize>> = None;
            for &m in members {
                let s = &sectors[m];
                let labels: BTreeSet<usize> = self
                    .sector(s.orbit, &s.alpha)
                    .decomposition
                    .iter()
                    .map(|(x, _)| *x)
                    .collect();
                match &found {
                    Some(prev) if *prev != labels => {
                        return Err(Error::Inconsistent(format!(
                            "members of one D^perp-orbit have different W-constituents at {s}"
                        )))
                    }
                    Some(_) => {}
                    None => found = Some(labels),
                }
            }
            let labels = found.expect("orbits are nonempty");
            let first = *labels.iter().next().expect("decompositions are nonempty");
            let i = o.orbit_of(first);
            if labels
                .iter()
                .copied()
                .ne(o.orbit(i).members.iter().copied())
            {
                return Err(Error::Inconsistent(format!(
                    "constituents of U-orbit do not form the W-orbit {i}"
                )));
            }
            phi.push(i);
        }

        let c = self.problem().v().group();
        let mut psi = Vec::with_capacity(o.len());
        for i in 0..o.len() {
            // The solutions λ form C(i, 1) = λ + D^⊥.
            let lambda = c
                .elements()
                .find(|a| self.is_untwisted(i, a))
                .ok_or_else(|| {
                    Error::Inconsistent(format!(
                        "no charge λ solves the untwisted condition for orbit {i}"
                    ))
                })?;
            let targets: BTreeSet<usize> = self
                .problem()
                .dperp()
                .elements()
                .iter()
                .map(|g| {
                    let id = self.canonical(i, &(&lambda + g));
                    self.untwisted_index(&id).expect("λ + D^⊥ stays untwisted")
                })
                .collect();
            let j = orbits
                .iter()
                .position(|m| m.iter().copied().eq(targets.iter().copied()))
                .ok_or_else(|| {
                    Error::Inconsistent(format!("Ψ(orbit {i}) is not a single D^perp-orbit"))
                })?;
            psi.push(j);
        }

        let u_orbits = orbits
            .iter()
            .map(|m| m.iter().map(|&k| sectors[k].clone()).collect())
            .collect();
        let duality = OrbitDuality {
            u_orbits,
            u_stabilizers,
            phi,
            psi,
        };
        duality.verify(self)?;
        Ok(duality)
    }
}
