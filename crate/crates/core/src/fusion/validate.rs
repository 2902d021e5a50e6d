// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;
use std::fmt;

use super::FusionRing;
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Witnesses kept per violation kind; the count is always exact.
const WITNESS_CAP: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// `N(unit, x, z) != [z = x]`.
    UnitLaw {
        x: String,
        z: String,
        found: u64,
    },
    /// `N(x, y, z) != N(y, x, z)`.
    Commutativity {
        x: String,
        y: String,
        z: String,
        xy: u64,
        yx: u64,
    },
    /// `Σ_e N(x,y,e) N(e,z,f) != Σ_e N(y,z,e) N(x,e,f)`.
    Associativity {
        x: String,
        y: String,
        z: String,
        f: String,
        lhs: u64,
        rhs: u64,
    },
    DualInvolution {
        x: String,
        dual_dual: String,
    },
    /// `N(x, y, unit) != [y = dual(x)]`.
    DualPairing {
        x: String,
        y: String,
        found: u64,
    },
    UnitWeight {
        weight: String,
    },
}

impl Violation {
    pub fn kind(&self) -> &'static str {
        match self {
            Violation::UnitLaw { .. } => "unit law",
            Violation::Commutativity { .. } => "commutativity",
            Violation::Associativity { .. } => "associativity",
            Violation::DualInvolution { .. } => "dual involution",
            Violation::DualPairing { .. } => "dual pairing",
            Violation::UnitWeight { .. } => "unit weight",
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::UnitLaw { x, z, found } => {
                write!(f, "unit law: N(unit, {x}, {z}) = {found}")
            }
            Violation::Commutativity { x, y, z, xy, yx } => {
                write!(f, "commutativity: N({x},{y},{z}) = {xy} but N({y},{x},{z}) = {yx}")
            }
            Violation::Associativity { x, y, z, f: w, lhs, rhs } => write!(
                f,
                "associativity: (({x} x {y}) x {z}) has {lhs} copies of {w}, ({x} x ({y} x {z})) has {rhs}"
            ),
            Violation::DualInvolution { x, dual_dual } => {
                write!(f, "dual involution: dual(dual({x})) = {dual_dual}")
            }
            Violation::DualPairing { x, y, found } => {
                write!(f, "dual pairing: N({x}, {y}, unit) = {found}")
            }
            Violation::UnitWeight { weight } => write!(f, "unit weight: h(unit) = {weight}, expected 0"),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ValidationReport {
    /// Up to a fixed number of witnesses per kind, in discovery order.
    pub violations: Vec<Violation>,
    /// Exact number of violated instances per kind.
    pub counts: BTreeMap<&'static str, usize>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn first(&self) -> Option<&Violation> {
        self.violations.first()
    }

    fn record(&mut self, v: Violation) {
        let c = self.counts.entry(v.kind()).or_insert(0);
        *c += 1;
        if *c <= WITNESS_CAP {
            self.violations.push(v);
        }
    }

    /// `Ok(())` on a clean report, otherwise a validation error naming the
    /// first witness.
    pub fn into_result(self) -> Result<()> {
        match self.first() {
            None => Ok(()),
            Some(v) => Err(Error::Validation(format!(
                "{v} ({} violation kinds)",
                self.counts.len()
            ))),
        }
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return write!(f, "all ring axioms hold");
        }
        for (kind, n) in &self.counts {
            writeln!(f, "{kind}: {n} violation(s)")?;
        }
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Checks every ring axiom by exhaustive enumeration.
pub fn ring_validate<I: Scalar>(ring: &FusionRing<I>) -> ValidationReport {
    let n = ring.len();
    let name = |i: usize| ring.label(i).to_string();
    let mut report = ValidationReport::default();
    let u = ring.unit();

    if !ring.weight(u).is_zero() {
        report.record(Violation::UnitWeight {
            weight: ring.weight(u).to_string(),
        });
    }

    for x in 0..n {
        for z in 0..n {
            let found = ring.n(u, x, z);
            if found != u64::from(x == z) {
                report.record(Violation::UnitLaw {
                    x: name(x),
                    z: name(z),
                    found,
                });
            }
        }
    }

    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                let (xy, yx) = (ring.n(x, y, z), ring.n(y, x, z));
                if xy != yx && x < y {
                    report.record(Violation::Commutativity {
                        x: name(x),
                        y: name(y),
                        z: name(z),
                        xy,
                        yx,
                    });
                }
            }
        }
    }

    for x in 0..n {
        let dd = ring.dual(ring.dual(x));
        if dd != x {
            report.record(Violation::DualInvolution {
                x: name(x),
                dual_dual: name(dd),
            });
        }
        for y in 0..n {
            let found = ring.n(x, y, u);
            if found != u64::from(y == ring.dual(x)) {
                report.record(Violation::DualPairing {
                    x: name(x),
                    y: name(y),
                    found,
                });
            }
        }
    }

    // (x ⊠ y) ⊠ z versus x ⊠ (y ⊠ z), accumulated sparsely per (x, y, z).
    let mut lhs = vec![0u64; n];
    let mut rhs = vec![0u64; n];
    for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                lhs.iter_mut().for_each(|v| *v = 0);
                rhs.iter_mut().for_each(|v| *v = 0);
                for &(e, m) in ring.fuse(x, y) {
                    for &(f, k) in ring.fuse(e, z) {
                        lhs[f] += m * k;
                    }
                }
                for &(e, m) in ring.fuse(y, z) {
                    for &(f, k) in ring.fuse(x, e) {
                        rhs[f] += m * k;
                    }
                }
                for f in 0..n {
                    if lhs[f] != rhs[f] {
                        report.record(Violation::Associativity {
                            x: name(x),
                            y: name(y),
                            z: name(z),
                            f: name(f),
                            lhs: lhs[f],
                            rhs: rhs[f],
                        });
                    }
                }
            }
        }
    }
    report
}

/// `N(a ⊠ x, y, a ⊠ z) = N(x, y, z)` for every simple current `a`.
pub fn check_simple_current_shift<I: Scalar>(ring: &FusionRing<I>) -> Result<()> {
    let n = ring.len();
    for a in (0..n).filter(|&a| ring.is_simple_current(a)) {
        let shift: Vec<usize> = (0..n)
            .map(|x| ring.single_output(a, x).expect("simple current"))
            .collect();
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if ring.n(shift[x], y, shift[z]) != ring.n(x, y, z) {
                        return Err(Error::Inconsistent(format!(
                            "shift by {} breaks N({},{},{})",
                            ring.label(a),
                            ring.label(x),
                            ring.label(y),
                            ring.label(z)
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::super::test_rings::*;
    use super::*;
    use crate::fusion::cyclic_group_ring;

    #[test]
    fn ising_passes() {
        let r = ring_validate(&ising());
        assert!(r.is_ok(), "{r}");
        assert!(ring_validate(&trivial()).is_ok());
        assert!(ring_validate(&z4()).is_ok());
    }

    #[test]
    fn injected_cubic_term_breaks_associativity() {
        let base = ising();
        let mut entries: Vec<_> = base.entries().collect();
        let eps = base.index_of("eps").unwrap();
        entries.push((eps, eps, eps, 1));
        let bad = FusionRing::new(
            base.labels().to_vec(),
            base.unit(),
            (0..3).map(|i| base.dual(i)).collect(),
            base.weights().to_vec(),
            entries,
        )
        .unwrap();
        let report = ring_validate(&bad);
        assert!(!report.is_ok());
        assert!(report.counts.contains_key("associativity"), "{report}");
        assert!(report
            .violations
            .iter()
            .any(|v| matches!(v, Violation::Associativity { .. })));
    }

    #[test]
    fn reports_unit_dual_and_weight_failures() {
        let bad = FusionRing::from_names(
            &["1", "a"],
            "1",
            &[],
            &[qz(1, 3), qz(0, 1)],
            &[("1", "1", "1", 1), ("1", "a", "a", 1), ("a", "1", "a", 1)],
        )
        .unwrap();
        let report = ring_validate(&bad);
        assert!(report.counts.contains_key("unit weight"));
        // a ⊠ a has no unit, so N(a, dual(a), 1) = 0
        assert!(report.counts.contains_key("dual pairing"));
        assert!(report.clone().into_result().is_err());
    }

    #[test]
    fn commutativity_failure_detected() {
        let bad = FusionRing::from_names(
            &["1", "a", "b"],
            "1",
            &[],
            &[qz(0, 1), qz(0, 1), qz(0, 1)],
            &[
                ("1", "1", "1", 1),
                ("1", "a", "a", 1),
                ("a", "1", "a", 1),
                ("1", "b", "b", 1),
                ("b", "1", "b", 1),
                ("a", "a", "1", 1),
                ("b", "b", "1", 1),
                ("a", "b", "b", 1),
                ("b", "a", "a", 1),
            ],
        )
        .unwrap();
        assert!(ring_validate(&bad).counts.contains_key("commutativity"));
    }

    #[test]
    fn simple_current_shift_holds_on_valid_rings() {
        check_simple_current_shift(&ising()).unwrap();
        check_simple_current_shift(&cyclic_group_ring(5, vec![qz(0, 1); 5]).unwrap()).unwrap();
    }
}
