// SPDX-License-Identifier: Apache-2.0

//! Recovering the fusion ring of `W` from that of `U`.
//!
//! Given `R(U)`, the space `(C, q)`, the subgroup `D` and the family of
//! simple currents `U^γ` (`γ ∈ D^⊥`), each `D^⊥`-orbit of `Irr(U)` gets a
//! chosen representative `M` together with a charge `λ`, meaning that
//! `M = ⊕_{δ ∈ λ+D} X^δ ⊗ V^δ` as a `W ⊗ V`-module. The labels of `W` are
//! the pairs `(M, δ)` with `δ` taken modulo the stabilizer of `M`, and
//! `N_W(X1, X2, X3) = N_U(M1, M2, U^γ ⊠ M3)` for `γ = δ1 + δ2 - δ3 ∈ D^⊥`.

use std::fmt;

use crate::abgroup::{GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, QZ};
use crate::extension::{Extension, ExtensionProblem};
use crate::fusion::{ring_isomorphic, ring_validate, FusionRing, SimpleCurrentGrading};
use crate::quadspace::QuadraticSpace;

/// One `D^⊥`-orbit of `Irr(U)` with its chosen representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UOrbit {
    pub members: Vec<usize>,
    pub rep: usize,
    /// Charge of the representative, defined modulo `D`.
    pub lambda: GroupElement,
    /// `(D^⊥)_i`.
    pub stabilizer: Subgroup,
}

/// Validated input for the inverse derivation.
#[derive(Clone, Debug)]
pub struct InverseProblem<I: Scalar> {
    u: FusionRing<I>,
    v: QuadraticSpace<I>,
    d: Subgroup,
    dperp: Subgroup,
    grading: SimpleCurrentGrading,
    orbits: Vec<UOrbit>,
    // charge of the unit of W inside the representative of orbit 0
    unit_delta: GroupElement,
}

impl<I: Scalar> InverseProblem<I> {
    /// `grading` is the family `γ ↦ U^γ` on `D^⊥`; `branching` assigns a
    /// charge to at least one member of every `D^⊥`-orbit. The first listed
    /// member (in label order) of each orbit becomes its representative and
    /// any further entries must agree with it: `λ(U^γ ⊠ M) ≡ λ(M) + γ`
    /// modulo `D`.
    pub fn new(
        u: FusionRing<I>,
        v: QuadraticSpace<I>,
        d: Subgroup,
        grading: SimpleCurrentGrading,
        branching: &[(usize, GroupElement)],
    ) -> Result<Self> {
        ring_validate(&u).into_result()?;
        let c = v.group().clone();
        if d.owner() != &c {
            return Err(Error::Validation(format!(
                "D = {d} is not a subgroup of C = {c}"
            )));
        }
        if !v.is_nondegenerate() {
            return Err(Error::Validation(format!(
                "the V-form is degenerate: radical {}",
                v.radical()
            )));
        }
        let dperp = v.perp(&d)?;
        if grading.domain() != &dperp {
            return Err(Error::Validation(format!(
                "U-grading is indexed by {} but D^perp = {dperp}",
                grading.domain()
            )));
        }
        grading.validate(&u)?;

        let act = |g: &GroupElement, m: usize| {
            u.single_output(grading.label_of(g), m)
                .expect("simple current")
        };
        let mut orbit_of = vec![usize::MAX; u.len()];
        let mut raw: Vec<(Vec<usize>, Subgroup)> = Vec::new();
        let mut start = vec![u.unit()];
        start.extend((0..u.len()).filter(|&x| x != u.unit()));
        for m in start {
            if orbit_of[m] != usize::MAX {
                continue;
            }
            let mut members: Vec<usize> = dperp.elements().iter().map(|g| act(g, m)).collect();
            members.sort_unstable();
            members.dedup();
            for &x in &members {
                orbit_of[x] = raw.len();
            }
            let stab: Vec<GroupElement> = dperp
                .elements()
                .iter()
                .filter(|g| act(g, m) == m)
                .cloned()
                .collect();
            raw.push((members, Subgroup::from_elements(&c, &stab)?));
        }

        let mut chosen: Vec<Option<(usize, GroupElement)>> = vec![None; raw.len()];
        let mut sorted: Vec<&(usize, GroupElement)> = branching.iter().collect();
        sorted.sort_by_key(|(m, _)| *m);
        for (m, lambda) in sorted {
            if *m >= u.len() {
                return Err(Error::Domain(format!(
                    "branching label index {m} out of range"
                )));
            }
            if lambda.owner() != &c {
                return Err(Error::Domain(format!(
                    "branching charge {lambda} is not an element of {c}"
                )));
            }
            let i = orbit_of[*m];
            match &chosen[i] {
                None => chosen[i] = Some((*m, lambda.clone())),
                Some((rep, lam)) => {
                    // m = U^γ ⊠ rep for some γ; its charge must be λ + γ mod D.
                    let ok = dperp
                        .elements()
                        .iter()
                        .filter(|g| act(g, *rep) == *m)
                        .any(|g| d.contains(&(&(lambda - lam) - g)));
                    if !ok {
                        return Err(Error::Domain(format!(
                            "branching charges {lam} for {} and {lambda} for {} are not related by D^perp",
                            u.label(*rep),
                            u.label(*m)
                        )));
                    }
                }
            }
        }

        let mut orbits = Vec::with_capacity(raw.len());
        for ((members, stabilizer), pick) in raw.into_iter().zip(chosen) {
            let (rep, lambda) = pick.ok_or_else(|| {
                Error::Domain(format!(
                    "no branching charge for the orbit of {}",
                    u.label(members[0])
                ))
            })?;
            if !stabilizer.is_subset_of(&d) {
                return Err(Error::Domain(format!(
                    "stabilizer {stabilizer} of {} is not inside D = {d}",
                    u.label(rep)
                )));
            }
            orbits.push(UOrbit {
                members,
                rep,
                lambda,
                stabilizer,
            });
        }

        // W sits in U = U^0 with charge 0, so in U^γ = rep_0 it has charge γ.
        let rep0 = orbits[0].rep;
        let gamma0 = dperp
            .elements()
            .iter()
            .find(|g| grading.label_of(g) == rep0)
            .cloned()
            .expect("the unit orbit consists of the U^γ");
        if !d.contains(&(&orbits[0].lambda - &gamma0)) {
            return Err(Error::Domain(format!(
                "branching charge {} of {} is incompatible with the unit (expected {gamma0} mod D)",
                orbits[0].lambda,
                u.label(rep0)
            )));
        }
        let unit_delta = orbits[0].stabilizer.canonical_rep(&gamma0);
        Ok(InverseProblem {
            u,
            v,
            d,
            dperp,
            grading,
            orbits,
            unit_delta,
        })
    }

    pub fn u(&self) -> &FusionRing<I> {
        &self.u
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

    pub fn orbits(&self) -> &[UOrbit] {
        &self.orbits
    }

    /// `(representative, λ)` for each orbit.
    pub fn branching(&self) -> Vec<(usize, GroupElement)> {
        self.orbits
            .iter()
            .map(|o| (o.rep, o.lambda.clone()))
            .collect()
    }

    /// `U^γ ⊠ m`.
    pub fn act(&self, gamma: &GroupElement, m: usize) -> usize {
        self.u
            .single_output(self.grading.label_of(gamma), m)
            .expect("grading labels are simple currents")
    }
}

/// A label `X^{i,δ}` of the derived ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct DerivedLabel {
    pub orbit: usize,
    /// Canonical modulo `(D^⊥)_i`, inside `λ(i) + D`.
    pub delta: GroupElement,
}

impl fmt::Display for DerivedLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(j{}", self.orbit)?;
        for c in self.delta.coords() {
            write!(f, ",{c}")?;
        }
        write!(f, ")")
    }
}

/// The derived ring of `W` with the data needed to extend it again.
#[derive(Clone, Debug)]
pub struct Derivation<I: Scalar> {
    pub ring: FusionRing<I>,
    pub labels: Vec<DerivedLabel>,
    /// `W ⊗ V ⊂ U` read back as a forward problem, graded by `β ↦ X^{0,β}`.
    pub forward: ExtensionProblem<I>,
}

fn branching_error(msg: impl fmt::Display) -> Error {
    Error::Validation(format!("branching data inconsistent: {msg}"))
}

impl<I: Scalar> InverseProblem<I> {
    fn name(&self, l: &DerivedLabel) -> String {
        let rep = self.u.label(self.orbits[l.orbit].rep);
        let coords: Vec<String> = l.delta.coords().iter().map(|c| c.to_string()).collect();
        format!("X[{rep};{}]", coords.join(","))
    }

    fn derived_labels(&self) -> Vec<DerivedLabel> {
        let mut out = Vec::new();
        for (i, o) in self.orbits.iter().enumerate() {
            let mut deltas: Vec<GroupElement> = self
                .d
                .elements()
                .iter()
                .map(|b| o.stabilizer.canonical_rep(&(&o.lambda + b)))
                .collect();
            deltas.sort();
            deltas.dedup();
            out.extend(
                deltas
                    .into_iter()
                    .map(|delta| DerivedLabel { orbit: i, delta }),
            );
        }
        out
    }

    /// Builds `R(W)` and checks it: ring axioms, the label count
    /// `|D|²·|Irr(U)|/|C|`, integrality of the re-extension, that every
    /// `X^{i,δ} ⊗ V^δ` is untwisted, and that `D`-stabilizers in `W` match
    /// `(D^⊥)_i`.
    pub fn derive(&self) -> Result<Derivation<I>> {
        let labels = self.derived_labels();
        let n = labels.len();
        let (dd, cc) = (self.d.order(), self.v.group().order());
        if n * cc != dd * dd * self.u.len() {
            return Err(Error::Inconsistent(format!(
                "{n} derived labels, but |D|²·|Irr(U)|/|C| = {}·{}/{cc}",
                dd * dd,
                self.u.len()
            )));
        }

        let mut weights = Vec::with_capacity(n);
        for l in &labels {
            let o = &self.orbits[l.orbit];
            let h = self.u.weight(o.rep) - &self.v.q(&l.delta);
            for s in o.stabilizer.elements() {
                let other = self.u.weight(o.rep) - &self.v.q(&(&l.delta + s));
                if other != h {
                    return Err(branching_error(format!(
                        "the weight of {} is {h} or {other} depending on the representative of δ mod {}",
                        self.name(l),
                        o.stabilizer
                    )));
                }
            }
            weights.push(h);
        }

        let mut entries = Vec::new();
        for (a, l1) in labels.iter().enumerate() {
            for (b, l2) in labels.iter().enumerate() {
                for (c, l3) in labels.iter().enumerate() {
                    let gamma = &(&l1.delta + &l2.delta) - &l3.delta;
                    if !self.dperp.contains(&gamma) {
                        continue;
                    }
                    let (m1, m2, m3) = (
                        self.orbits[l1.orbit].rep,
                        self.orbits[l2.orbit].rep,
                        self.orbits[l3.orbit].rep,
                    );
                    let m = self.u.n(m1, m2, self.act(&gamma, m3));
                    if m > 0 {
                        entries.push((a, b, c, m));
                    }
                }
            }
        }
        let unit = labels
            .iter()
            .position(|l| l.orbit == 0 && l.delta == self.unit_delta)
            .expect("unit charge lies in λ(0) + D");
        let names = labels.iter().map(|l| self.name(l)).collect();
        let ring = FusionRing::with_inferred_duals(names, unit, weights, entries)
            .map_err(branching_error)?;
        if let Some(v) = ring_validate(&ring).first() {
            return Err(branching_error(v));
        }

        let pairs: Vec<(GroupElement, usize)> = self
            .d
            .elements()
            .iter()
            .map(|beta| {
                let delta = self.orbits[0]
                    .stabilizer
                    .canonical_rep(&(&self.unit_delta + beta));
                let k = labels
                    .iter()
                    .position(|l| l.orbit == 0 && l.delta == delta)
                    .expect("unit orbit label");
                (beta.clone(), k)
            })
            .collect();
        let grading = SimpleCurrentGrading::from_pairs(self.d.clone(), &pairs)?;
        let forward = ExtensionProblem::new(ring.clone(), self.v.clone(), self.d.clone(), grading)
            .map_err(branching_error)?;

        let ext = Extension::new(forward.clone())?;
        for (x, l) in labels.iter().enumerate() {
            ext.sector_of(x, &l.delta).map_err(branching_error)?;
            let stab = &ext.orbits().orbit(ext.orbits().orbit_of(x)).stabilizer;
            if stab != &self.orbits[l.orbit].stabilizer {
                return Err(Error::Inconsistent(format!(
                    "D-stabilizer {stab} of {} differs from (D^perp)-stabilizer {}",
                    self.name(l),
                    self.orbits[l.orbit].stabilizer
                )));
            }
        }
        Ok(Derivation {
            ring,
            labels,
            forward,
        })
    }
}

/// Free-function spelling of [`InverseProblem::derive`], returning the ring.
pub fn derive_commutant_ring<I: Scalar>(ip: &InverseProblem<I>) -> Result<FusionRing<I>> {
    ip.derive().map(|d| d.ring)
}

/// Outcome of deriving `W` and extending it back to `U`.
#[derive(Clone, Debug)]
pub struct RoundTripReport<I: Scalar> {
    pub derived: Option<FusionRing<I>>,
    pub rebuilt: Option<FusionRing<I>>,
    /// `iso[x]` is the label of the original ring matching rebuilt label `x`.
    pub isomorphism: Option<Vec<usize>>,
    pub failure: Option<String>,
}

impl<I: Scalar> RoundTripReport<I> {
    pub fn is_ok(&self) -> bool {
        self.isomorphism.is_some()
    }
}

/// Derives `R(W)`, rebuilds `R(U)` from it and looks for a weight-preserving
/// isomorphism with the original.
pub fn round_trip<I: Scalar>(ip: &InverseProblem<I>) -> RoundTripReport<I> {
    let mut report = RoundTripReport {
        derived: None,
        rebuilt: None,
        isomorphism: None,
        failure: None,
    };
    let derivation = match ip.derive() {
        Ok(d) => d,
        Err(e) => {
            report.failure = Some(format!("derivation failed: {e}"));
            return report;
        }
    };
    report.derived = Some(derivation.ring.clone());
    let rebuilt = Extension::new(derivation.forward).and_then(|ext| ext.build_u_ring().cloned());
    match rebuilt {
        Ok(r) => {
            report.isomorphism = ring_isomorphic(&r, ip.u(), true);
            if report.isomorphism.is_none() {
                report.failure = Some("rebuilt ring is not isomorphic to the original".into());
            }
            report.rebuilt = Some(r);
        }
        Err(e) => report.failure = Some(format!("re-extension failed: {e}")),
    }
    report
}

/// Weight of `X^{i,δ}` as a free function, exposed for checks.
pub fn derived_weight<I: Scalar>(ip: &InverseProblem<I>, l: &DerivedLabel) -> QZ<I> {
    ip.u().weight(ip.orbits()[l.orbit].rep) - &ip.v().q(&l.delta)
}
