// SPDX-License-Identifier: Apache-2.0

use super::ExtensionProblem;
use crate::abgroup::{GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// One `D`-orbit `O^i` in `Irr(W)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orbit {
    /// Members in label order.
    pub members: Vec<usize>,
    /// `W^{i,0}`.
    pub rep: usize,
    /// `D_i`, the stabilizer of any member.
    pub stabilizer: Subgroup,
}

/// `D`-orbit decomposition of `Irr(W)` with `(i, β)` coordinates.
///
/// Orbit 0 holds the unit and has it as representative. The remaining
/// orbits are ordered by their smallest label, which is also their
/// representative. Every label `x` is `W^β ⊠ W^{i,0}` for a `β` that is
/// unique modulo `D_i`; `coord` keeps the smallest such `β`.
#[derive(Clone, Debug)]
pub struct OrbitData {
    orbits: Vec<Orbit>,
    coord: Vec<(usize, GroupElement)>,
    // action[k][x] = W^{d_k} ⊠ x with d_k the k-th element of D
    action: Vec<Vec<usize>>,
    d: Subgroup,
}

impl OrbitData {
    /// Decomposes `Irr(W)`; fails when some stabilizer leaves `D^⊥`, which
    /// cannot happen for consistent input.
    pub fn compute<I: Scalar>(p: &ExtensionProblem<I>) -> Result<Self> {
        let w = p.w();
        let n = w.len();
        let d = p.d().clone();
        let action: Vec<Vec<usize>> = d
            .elements()
            .iter()
            .map(|beta| (0..n).map(|x| p.act(beta, x)).collect())
            .collect();

        let mut start: Vec<usize> = vec![w.unit()];
        start.extend((0..n).filter(|&x| x != w.unit()));
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits = Vec::new();
        let mut coord = vec![(0, p.v().group().zero()); n];
        for rep in start {
            if orbit_of[rep] != usize::MAX {
                continue;
            }
            let i = orbits.len();
            let stab: Vec<GroupElement> = d
                .elements()
                .iter()
                .zip(&action)
                .filter(|(_, row)| row[rep] == rep)
                .map(|(beta, _)| beta.clone())
                .collect();
            let stabilizer = Subgroup::from_elements(p.v().group(), &stab)?;
            if !stabilizer.is_subset_of(p.dperp()) {
                return Err(Error::Inconsistent(format!(
                    "stabilizer {stabilizer} of {} is not contained in D^perp = {}",
                    w.label(rep),
                    p.dperp()
                )));
            }
            let mut members = Vec::new();
            for (beta, row) in d.elements().iter().zip(&action) {
                let x = row[rep];
                if orbit_of[x] == usize::MAX {
                    orbit_of[x] = i;
                    members.push(x);
                    coord[x] = (i, stabilizer.canonical_rep(beta));
                }
            }
            members.sort_unstable();
            debug_assert_eq!(members.len() * stabilizer.order(), d.order());
            orbits.push(Orbit {
                members,
                rep,
                stabilizer,
            });
        }
        Ok(OrbitData {
            orbits,
            coord,
            action,
            d,
        })
    }

    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn orbit(&self, i: usize) -> &Orbit {
        &self.orbits[i]
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// `(i, β)` with `x = W^{i,β}` and `β` canonical modulo `D_i`.
    pub fn coord(&self, x: usize) -> (usize, &GroupElement) {
        let (i, beta) = &self.coord[x];
        (*i, beta)
    }

    pub fn orbit_of(&self, x: usize) -> usize {
        self.coord[x].0
    }

    /// The label `W^{i,β} = W^β ⊠ W^{i,0}`.
    pub fn label_at(&self, i: usize, beta: &GroupElement) -> usize {
        self.shift(beta, self.orbits[i].rep)
    }

    /// `W^β ⊠ x` from the cached action table.
    pub fn shift(&self, beta: &GroupElement, x: usize) -> usize {
        let k = self
            .d
            .elements()
            .binary_search(beta)
            .expect("shift by an element of D");
        self.action[k][x]
    }
}
