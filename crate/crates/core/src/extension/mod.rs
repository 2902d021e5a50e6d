// SPDX-License-Identifier: Apache-2.0

//! Simple current extensions `U = ⊕_{β∈D} W^β ⊗ V^β`.
//!
//! Given the fusion ring of `W`, the quadratic space `(C, q)` of a pointed
//! `V` (all irreducibles simple currents, graded by `C`), a subgroup `D ≤ C`
//! and a `D`-graded family of simple currents `W^β`, this module
//!
//! * decomposes `Irr(W)` into `D`-orbits,
//! * classifies the untwisted and `χ`-twisted sectors `U^{i,α}` for every
//!   character `χ` of `D`,
//! * computes the fusion ring of `U` from that of `W`, and
//! * exhibits the orbit duality between `D`-orbits on `Irr(W)` and
//!   `D^⊥`-orbits on `Irr(U)`.
//!
//! Sector labels are `(i, α)` with `i` an orbit index and `α ∈ C` taken as
//! the lexicographically smallest representative of `α + D_i`.

pub mod checks;
mod duality;
mod fuse;
mod orbits;
mod sectors;

use std::fmt;
use std::str::FromStr;

pub use duality::OrbitDuality;
pub use fuse::{FusionSupport, QueryDirection, UCurrents};
pub use orbits::{Orbit, OrbitData};
pub use sectors::{CharacterBlock, Extension, Sector, SectorTable};

use crate::abgroup::{GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, QZ};
use crate::fusion::{ring_validate, FusionRing, SimpleCurrentGrading};
use crate::quadspace::QuadraticSpace;

/// Validated input data for a `D`-graded simple current extension.
#[derive(Clone, Debug)]
pub struct ExtensionProblem<I: Scalar> {
    w: FusionRing<I>,
    v: QuadraticSpace<I>,
    d: Subgroup,
    grading: SimpleCurrentGrading,
    dperp: Subgroup,
}

impl<I: Scalar> ExtensionProblem<I> {
    /// Checks the hypotheses the classification relies on.
    ///
    /// The `W` ring must satisfy the ring axioms, the `V` form must be
    /// non-degenerate, `D` must live in `C`, the grading must be a `D`-graded
    /// family of simple currents, and `h(W^β) + q(β)` must vanish mod 1 for
    /// every `β ∈ D`. A value of `1/2` is reported as superalgebra data.
    pub fn new(
        w: FusionRing<I>,
        v: QuadraticSpace<I>,
        d: Subgroup,
        grading: SimpleCurrentGrading,
    ) -> Result<Self> {
        ring_validate(&w).into_result()?;
        if d.owner() != v.group() {
            return Err(Error::Validation(format!(
                "D = {d} is not a subgroup of C = {}",
                v.group()
            )));
        }
        let radical = v.radical();
        if !radical.is_trivial() {
            return Err(Error::Validation(format!(
                "the V-form is degenerate: radical {radical}"
            )));
        }
        if grading.domain() != &d {
            return Err(Error::Validation(format!(
                "grading is indexed by {} but D = {d}",
                grading.domain()
            )));
        }
        grading.validate(&w)?;
        for (beta, label) in grading.pairs() {
            let total = w.weight(label) + &v.q(beta);
            if total.is_zero() {
                continue;
            }
            let what = if total.is_half() {
                "the grade is half-integral, so the sum carries at most a vertex operator superalgebra structure"
            } else {
                "the grade is not integral"
            };
            return Err(Error::NotIntegral(format!(
                "h({}) + q({beta}) = {} + {} = {total}: {what}",
                w.label(label),
                w.weight(label),
                v.q(beta)
            )));
        }
        let dperp = v.perp(&d)?;
        Ok(ExtensionProblem {
            w,
            v,
            d,
            grading,
            dperp,
        })
    }

    pub fn w(&self) -> &FusionRing<I> {
        &self.w
    }

    pub fn v(&self) -> &QuadraticSpace<I> {
        &self.v
    }

    pub fn d(&self) -> &Subgroup {
        &self.d
    }

    pub fn dperp(&self) -> &Subgroup {
        &self.dperp
    }

    pub fn grading(&self) -> &SimpleCurrentGrading {
        &self.grading
    }

    /// The simple current `W^β`.
    pub fn current(&self, beta: &GroupElement) -> usize {
        self.grading.label_of(beta)
    }

    /// `W^β ⊠ x`.
    pub fn act(&self, beta: &GroupElement, x: usize) -> usize {
        self.w
            .single_output(self.current(beta), x)
            .expect("grading labels are simple currents")
    }

    /// `b_W(W^β, x) = h(W^β ⊠ x) - h(W^β) - h(x)`.
    pub fn b_w(&self, beta: &GroupElement, x: usize) -> QZ<I> {
        self.w
            .monodromy_charge(self.current(beta), x)
            .expect("grading labels are simple currents")
    }
}

/// Free-function spelling of [`ExtensionProblem::new`].
pub fn validate_extension<I: Scalar>(
    w: FusionRing<I>,
    v: QuadraticSpace<I>,
    d: Subgroup,
    grading: SimpleCurrentGrading,
) -> Result<ExtensionProblem<I>> {
    ExtensionProblem::new(w, v, d, grading)
}

/// Sector label `(i, α)` with `α` canonical modulo `D_i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorId {
    pub orbit: usize,
    pub alpha: GroupElement,
}

impl fmt::Display for SectorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(i{}", self.orbit)?;
        for c in self.alpha.coords() {
            write!(f, ",{c}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for SectorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A sector name as typed by a user: orbit index and raw coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorName {
    pub orbit: usize,
    pub coords: Vec<i64>,
}

impl FromStr for SectorName {
    type Err = Error;

    /// Accepts `(i1,3)`, `(i1,[1,0])`, `i1,1,0` and `(i0)`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || {
            Error::Parse(format!(
                "sector names look like (i<orbit>,<coords>), got {s:?}"
            ))
        };
        let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
        let mut parts = inner
            .split(',')
            .map(|p| p.trim().trim_matches(|c| c == '[' || c == ']'));
        let head = parts.next().ok_or_else(bad)?;
        let orbit = head
            .strip_prefix('i')
            .ok_or_else(bad)?
            .parse()
            .map_err(|_| bad())?;
        let coords = parts
            .filter(|p| !p.is_empty())
            .map(|p| p.parse::<i64>().map_err(|_| bad()))
            .collect::<Result<Vec<_>>>()?;
        Ok(SectorName { orbit, coords })
    }
}
