// SPDX-License-Identifier: Apache-2.0

//! Fusion rings: labeled irreducibles with nonnegative integer structure
//! constants `N(a, b, c)`, a unit, a duality and conformal weights mod 1.

mod iso;
mod simple;
mod validate;

use std::collections::HashMap;
use std::fmt;

pub use iso::ring_isomorphic;
pub use simple::{simple_currents, CurrentGroup, SimpleCurrentGrading, SimpleCurrents};
pub use validate::{check_simple_current_shift, ring_validate, ValidationReport, Violation};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar, QZ};

#[derive(Clone, PartialEq, Eq)]
pub struct FusionRing<I: Scalar> {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    unit: usize,
    dual: Vec<usize>,
    weights: Vec<QZ<I>>,
    true_weights: Option<Vec<Rational<I>>>,
    // products[a * n + b] = sorted nonzero (c, N(a, b, c))
    products: Vec<Vec<(usize, u64)>>,
}

/// One structure constant `N(a, b, c) = n`, by label index.
pub type Entry = (usize, usize, usize, u64);

impl<I: Scalar> FusionRing<I> {
    /// Assembles a ring from index-based data.
    ///
    /// Only structural problems are rejected here (duplicate labels, indices
    /// out of range, repeated entries); the ring axioms are the business of
    /// [`ring_validate`].
    pub fn new(
        labels: Vec<String>,
        unit: usize,
        dual: Vec<usize>,
        weights: Vec<QZ<I>>,
        entries: impl IntoIterator<Item = Entry>,
    ) -> Result<Self> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Validation(
                "a fusion ring needs at least one label".into(),
            ));
        }
        let mut index = HashMap::with_capacity(n);
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::Validation(format!("duplicate label {l:?}")));
            }
        }
        if unit >= n {
            return Err(Error::Validation(format!("unit index {unit} out of range")));
        }
        if dual.len() != n || dual.iter().any(|&d| d >= n) {
            return Err(Error::Validation(
                "dual map must send every label to a label".into(),
            ));
        }
        if weights.len() != n {
            return Err(Error::Validation(format!(
                "{} weights given for {} labels",
                weights.len(),
                n
            )));
        }
        let mut products = vec![Vec::new(); n * n];
        for (a, b, c, m) in entries {
            if a >= n || b >= n || c >= n {
                return Err(Error::Validation(format!(
                    "fusion entry ({a},{b},{c}) out of range"
                )));
            }
            if m == 0 {
                continue;
            }
            let row: &mut Vec<(usize, u64)> = &mut products[a * n + b];
            if row.iter().any(|&(x, _)| x == c) {
                return Err(Error::Validation(format!(
                    "repeated fusion entry ({}, {}, {})",
                    labels[a], labels[b], labels[c]
                )));
            }
            row.push((c, m));
        }
        for row in &mut products {
            row.sort_unstable();
        }
        Ok(FusionRing {
            labels,
            index,
            unit,
            dual,
            weights,
            true_weights: None,
            products,
        })
    }

    /// Like [`FusionRing::new`], with each dual found as the unique `y`
    /// satisfying `N(x, y, unit) = 1`.
    pub fn with_inferred_duals(
        labels: Vec<String>,
        unit: usize,
        weights: Vec<QZ<I>>,
        entries: impl IntoIterator<Item = Entry>,
    ) -> Result<Self> {
        let n = labels.len();
        let mut ring = Self::new(labels, unit, vec![0; n], weights, entries)?;
        for x in 0..n {
            let cands: Vec<usize> = (0..n).filter(|&y| ring.n(x, y, unit) == 1).collect();
            match cands.as_slice() {
                [y] => ring.dual[x] = *y,
                _ => {
                    return Err(Error::Inconsistent(format!(
                        "cannot infer dual of {}: candidates {:?}",
                        ring.labels[x],
                        cands
                            .iter()
                            .map(|&c| ring.labels[c].as_str())
                            .collect::<Vec<_>>()
                    )))
                }
            }
        }
        Ok(ring)
    }

    /// Name-based constructor, handy for hand-written rings.
    pub fn from_names(
        labels: &[&str],
        unit: &str,
        dual: &[(&str, &str)],
        weights: &[QZ<I>],
        fusion: &[(&str, &str, &str, u64)],
    ) -> Result<Self> {
        let labels: Vec<String> = labels.iter().map(|s| s.to_string()).collect();
        let pos = |s: &str| {
            labels
                .iter()
                .position(|l| l == s)
                .ok_or_else(|| Error::Domain(format!("unknown label {s:?}")))
        };
        let unit = pos(unit)?;
        let mut duals: Vec<usize> = (0..labels.len()).collect();
        for (a, b) in dual {
            duals[pos(a)?] = pos(b)?;
        }
        let entries = fusion
            .iter()
            .map(|&(a, b, c, m)| Ok((pos(a)?, pos(b)?, pos(c)?, m)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(labels.clone(), unit, duals, weights.to_vec(), entries)
    }

    pub fn with_true_weights(mut self, h: Vec<Rational<I>>) -> Result<Self> {
        if h.len() != self.len() {
            return Err(Error::Validation(
                "one true weight per label required".into(),
            ));
        }
        for (i, hi) in h.iter().enumerate() {
            if QZ::from_rational(hi.clone()) != self.weights[i] {
                return Err(Error::Validation(format!(
                    "true weight {hi} of {} disagrees with weight {} mod 1",
                    self.labels[i], self.weights[i]
                )));
            }
        }
        self.true_weights = Some(h);
        Ok(self)
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::Domain(format!("unknown label {label:?}")))
    }

    pub fn unit(&self) -> usize {
        self.unit
    }

    pub fn dual(&self, i: usize) -> usize {
        self.dual[i]
    }

    pub fn weight(&self, i: usize) -> &QZ<I> {
        &self.weights[i]
    }

    pub fn weights(&self) -> &[QZ<I>] {
        &self.weights
    }

    pub fn true_weights(&self) -> Option<&[Rational<I>]> {
        self.true_weights.as_deref()
    }

    pub fn n(&self, a: usize, b: usize, c: usize) -> u64 {
        let row = &self.products[a * self.len() + b];
        row.binary_search_by_key(&c, |&(x, _)| x)
            .map(|p| row[p].1)
            .unwrap_or(0)
    }

    /// Nonzero `(c, N(a, b, c))` in label order.
    pub fn fuse(&self, a: usize, b: usize) -> &[(usize, u64)] {
        &self.products[a * self.len() + b]
    }

    pub fn fuse_named(&self, a: &str, b: &str) -> Result<Vec<(String, u64)>> {
        let (a, b) = (self.index_of(a)?, self.index_of(b)?);
        Ok(self
            .fuse(a, b)
            .iter()
            .map(|&(c, m)| (self.labels[c].clone(), m))
            .collect())
    }

    /// `Σ_c N(a, b, c)`.
    pub fn product_size(&self, a: usize, b: usize) -> u64 {
        self.fuse(a, b).iter().map(|&(_, m)| m).sum()
    }

    /// All nonzero entries in lexicographic `(a, b, c)` order.
    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        let n = self.len();
        (0..n * n).flat_map(move |ab| {
            self.products[ab]
                .iter()
                .map(move |&(c, m)| (ab / n, ab % n, c, m))
        })
    }

    /// `true` when `a ⊠ y` is irreducible for every `y`.
    pub fn is_simple_current(&self, a: usize) -> bool {
        (0..self.len()).all(|y| self.product_size(a, y) == 1)
    }

    /// The unique output of `a ⊠ x`, if the product is a single label with
    /// multiplicity one.
    pub fn single_output(&self, a: usize, x: usize) -> Option<usize> {
        match self.fuse(a, x) {
            [(c, 1)] => Some(*c),
            _ => None,
        }
    }

    /// `b(a, x) = h(a ⊠ x) - h(a) - h(x)` for a simple current `a`.
    pub fn monodromy_charge(&self, a: usize, x: usize) -> Result<QZ<I>> {
        let c = self.single_output(a, x).ok_or_else(|| {
            Error::Domain(format!(
                "{} ⊠ {} is not irreducible",
                self.labels[a], self.labels[x]
            ))
        })?;
        Ok(&(&self.weights[c] - &self.weights[a]) - &self.weights[x])
    }

    /// Copy with labels renamed by `f`.
    pub fn relabeled(&self, f: impl Fn(usize, &str) -> String) -> Result<Self> {
        let labels = self
            .labels
            .iter()
            .enumerate()
            .map(|(i, l)| f(i, l))
            .collect();
        let mut r = Self::new(
            labels,
            self.unit,
            self.dual.clone(),
            self.weights.clone(),
            self.entries(),
        )?;
        r.true_weights = self.true_weights.clone();
        Ok(r)
    }
}

impl<I: Scalar> fmt::Debug for FusionRing<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "FusionRing {{ unit: {}", self.labels[self.unit])?;
        for (i, l) in self.labels.iter().enumerate() {
            writeln!(
                f,
                "  {l}: h = {}, dual = {}",
                self.weights[i], self.labels[self.dual[i]]
            )?;
        }
        for (a, b, c, m) in self.entries() {
            writeln!(
                f,
                "  {} x {} -> {} : {m}",
                self.labels[a], self.labels[b], self.labels[c]
            )?;
        }
        write!(f, "}}")
    }
}

/// Product ring on label pairs: `N((x1,x2),(y1,y2),(z1,z2)) = N1·N2`.
pub fn tensor_ring<I: Scalar>(r1: &FusionRing<I>, r2: &FusionRing<I>) -> FusionRing<I> {
    let (n1, n2) = (r1.len(), r2.len());
    let idx = |a: usize, b: usize| a * n2 + b;
    let mut labels = Vec::with_capacity(n1 * n2);
    let mut weights = Vec::with_capacity(n1 * n2);
    let mut dual = Vec::with_capacity(n1 * n2);
    for a in 0..n1 {
        for b in 0..n2 {
            labels.push(format!("({},{})", r1.label(a), r2.label(b)));
            weights.push(r1.weight(a) + r2.weight(b));
            dual.push(idx(r1.dual(a), r2.dual(b)));
        }
    }
    let mut entries = Vec::new();
    for (x1, y1, z1, m1) in r1.entries() {
        for (x2, y2, z2, m2) in r2.entries() {
            entries.push((idx(x1, x2), idx(y1, y2), idx(z1, z2), m1 * m2));
        }
    }
    FusionRing::new(labels, idx(r1.unit(), r2.unit()), dual, weights, entries)
        .expect("product of well-formed rings is well-formed")
}

/// Group ring of `Z_n` with prescribed weights; labels `g0 … g(n-1)`.
pub fn cyclic_group_ring<I: Scalar>(n: usize, weights: Vec<QZ<I>>) -> Result<FusionRing<I>> {
    let labels = (0..n).map(|i| format!("g{i}")).collect();
    let dual = (0..n).map(|i| (n - i) % n).collect();
    let entries = (0..n).flat_map(|a| (0..n).map(move |b| (a, b, (a + b) % n, 1)));
    FusionRing::new(labels, 0, dual, weights, entries)
}


#[cfg(test)]
mod tests {
    use super::test_rings::*;
    use super::*;

    #[test]
    fn fuse_lists_nonzero_outputs() {
        let r = ising();
        assert_eq!(
            r.fuse_named("sigma", "sigma").unwrap(),
            vec![("1".to_string(), 1), ("eps".to_string(), 1)]
        );
        for x in r.labels() {
            assert_eq!(r.fuse_named("1", x).unwrap(), vec![(x.clone(), 1)]);
        }
        assert!(matches!(r.fuse_named("tau", "1"), Err(Error::Domain(_))));
    }

    #[test]
    fn constructor_rejects_structural_errors() {
        let w = [qz(0, 1), qz(0, 1)];
        assert!(FusionRing::from_names(&["a", "a"], "a", &[], &w, &[]).is_err());
        assert!(FusionRing::from_names(&["a", "b"], "c", &[], &w, &[]).is_err());
        assert!(FusionRing::from_names(
            &["a", "b"],
            "a",
            &[],
            &w,
            &[("a", "a", "a", 1), ("a", "a", "a", 2)]
        )
        .is_err());
    }

    #[test]
    fn tensor_products() {
        let z2 = cyclic_group_ring(2, vec![qz(0, 1), qz(1, 2)]).unwrap();
        let t = tensor_ring(&ising(), &z2);
        assert_eq!(t.len(), 6);
        assert!(ring_validate(&t).is_ok());
        // weight((eps, g1)) = 1/2 + 1/2 = 0
        let i = t.index_of("(eps,g1)").unwrap();
        assert!(t.weight(i).is_zero());

        let t1 = tensor_ring(&ising(), &trivial());
        assert!(ring_isomorphic(&t1, &ising(), true).is_some());
    }

    #[test]
    fn inferred_duals_match_declared() {
        let r = z4();
        let rebuilt = FusionRing::with_inferred_duals(
            r.labels().to_vec(),
            r.unit(),
            r.weights().to_vec(),
            r.entries(),
        )
        .unwrap();
        for i in 0..r.len() {
            assert_eq!(rebuilt.dual(i), r.dual(i));
        }
    }

    #[test]
    fn monodromy_charge_of_simple_current() {
        let r = ising();
        let eps = r.index_of("eps").unwrap();
        let sigma = r.index_of("sigma").unwrap();
        // h(sigma) - h(eps) - h(sigma) = -1/2 = 1/2
        assert_eq!(r.monodromy_charge(eps, sigma).unwrap(), qz(1, 2));
        assert!(r.monodromy_charge(sigma, sigma).is_err());
    }

    #[test]
    fn true_weights_must_match_classes() {
        let r = z4();
        let ok = vec![
            Rational::from_integer(0.into()),
            Rational::new(9.into(), 8.into()),
            Rational::new(1.into(), 2.into()),
            Rational::new(1.into(), 8.into()),
        ];
        assert!(r.clone().with_true_weights(ok).is_ok());
        let bad = vec![Rational::from_integer(0.into()); 4];
        assert!(r.with_true_weights(bad).is_err());
    }
}
