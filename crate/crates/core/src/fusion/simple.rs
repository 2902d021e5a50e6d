// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeMap;

use super::FusionRing;
use crate::abgroup::{FinAbGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Group structure on a fusion-closed set of simple currents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentGroup {
    pub group: FinAbGroup,
    /// `labels[g.index()]` is the simple current attached to `g`.
    pub labels: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCurrents {
    /// Simple currents in label order.
    pub labels: Vec<usize>,
    /// Present when the set is closed under fusion.
    pub group: Option<CurrentGroup>,
}

/// All simple currents of `ring` and, when they close under fusion, an
/// isomorphism from `Z_{n1} × … × Z_{nr}` (invariant factors) onto them.
pub fn simple_currents<I: Scalar>(ring: &FusionRing<I>) -> SimpleCurrents {
    let labels: Vec<usize> = (0..ring.len())
        .filter(|&a| ring.is_simple_current(a))
        .collect();
    let pos: BTreeMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let m = labels.len();

    let mut table = vec![0usize; m * m];
    for (i, &a) in labels.iter().enumerate() {
        for (j, &b) in labels.iter().enumerate() {
            match ring.single_output(a, b).and_then(|c| pos.get(&c)) {
                Some(&k) => table[i * m + j] = k,
                None => {
                    return SimpleCurrents {
                        labels,
                        group: None,
                    }
                }
            }
        }
    }
    let unit = match pos.get(&ring.unit()) {
        Some(&u) => u,
        None => {
            return SimpleCurrents {
                labels,
                group: None,
            }
        }
    };
    let group = TableGroup { m, unit, table }
        .structure()
        .map(|(group, image)| CurrentGroup {
            group,
            labels: image.into_iter().map(|k| labels[k]).collect(),
        });
    SimpleCurrents { labels, group }
}

/// A finite abelian group given by its Cayley table on `0..m`.
struct TableGroup {
    m: usize,
    unit: usize,
    table: Vec<usize>,
}

impl TableGroup {
    fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.m + b]
    }

    fn power(&self, a: usize, k: u64) -> usize {
        (0..k).fold(self.unit, |acc, _| self.mul(acc, a))
    }

    fn order(&self, a: usize) -> u64 {
        let mut x = a;
        let mut k = 1;
        while x != self.unit {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// Invariant factors `n1 | n2 | … | nr`.
    fn invariant_factors(&self) -> Vec<u64> {
        let orders: Vec<u64> = (0..self.m).map(|a| self.order(a)).collect();
        let mut parts_by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for p in prime_factors(self.m as u64) {
            // d[j-1] = #{ parts >= j } = log_p(|G[p^j]| / |G[p^(j-1)]|)
            let mut d = Vec::new();
            let mut prev = 1u64;
            let mut pj = 1u64;
            loop {
                pj *= p;
                let count = orders.iter().filter(|&&o| pj.is_multiple_of(o)).count() as u64;
                if count == prev {
                    break;
                }
                d.push(log_p(count / prev, p));
                prev = count;
            }
            let max_parts = d.first().copied().unwrap_or(0);
            let parts: Vec<u32> = (1..=max_parts)
                .map(|i| d.iter().filter(|&&dj| dj >= i).count() as u32)
                .collect();
            parts_by_prime.push((p, parts));
        }
        let r = parts_by_prime
            .iter()
            .map(|(_, ps)| ps.len())
            .max()
            .unwrap_or(0);
        let mut factors: Vec<u64> = (0..r)
            .map(|t| {
                parts_by_prime
                    .iter()
                    .map(|(p, ps)| ps.get(t).map_or(1, |&e| p.pow(e)))
                    .product()
            })
            .collect();
        factors.sort_unstable();
        factors
    }

    /// The abstract group and the image of each of its elements.
    fn structure(&self) -> Option<(FinAbGroup, Vec<usize>)> {
        let inv = self.invariant_factors();
        let group = FinAbGroup::from_invariants(&inv).ok()?;
        let mut gens = Vec::with_capacity(inv.len());
        // Largest factors first; backtrack when a choice cannot be extended.
        let order: Vec<usize> = (0..inv.len()).rev().collect();
        let mut span = vec![false; self.m];
        span[self.unit] = true;
        if !self.search(&inv, &order, 0, &mut span, &mut gens) {
            return None;
        }
        gens.reverse();
        let image = group
            .elements()
            .map(|e| {
                e.coords()
                    .iter()
                    .zip(&gens)
                    .fold(self.unit, |acc, (&c, &g)| self.mul(acc, self.power(g, c)))
            })
            .collect();
        Some((group, image))
    }

    fn search(
        &self,
        inv: &[u64],
        order: &[usize],
        depth: usize,
        span: &mut Vec<bool>,
        gens: &mut Vec<usize>,
    ) -> bool {
        if depth == order.len() {
            return span.iter().all(|&s| s);
        }
        let n = inv[order[depth]];
        for g in 0..self.m {
            if self.order(g) != n {
                continue;
            }
            // <g> must meet the current span trivially
            let mut x = g;
            let mut ok = true;
            for _ in 1..n {
                if span[x] {
                    ok = false;
                    break;
                }
                x = self.mul(x, g);
            }
            if !ok {
                continue;
            }
            let old = span.clone();
            let members: Vec<usize> = (0..self.m).filter(|&s| old[s]).collect();
            let mut x = self.unit;
            for _ in 0..n {
                for &s in &members {
                    span[self.mul(s, x)] = true;
                }
                x = self.mul(x, g);
            }
            gens.push(g);
            if self.search(inv, order, depth + 1, span, gens) {
                return true;
            }
            gens.pop();
            *span = old;
        }
        false
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

fn log_p(mut x: u64, p: u64) -> u32 {
    let mut e = 0;
    while x > 1 {
        x /= p;
        e += 1;
    }
    e
}

/// A family `β ↦ A^β` of simple currents indexed by a subgroup, with
/// `A^0 = unit` and `A^β ⊠ A^δ = A^{β+δ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleCurrentGrading {
    domain: Subgroup,
    // aligned with domain.elements()
    assign: Vec<usize>,
}

impl SimpleCurrentGrading {
    /// `assign[k]` labels the `k`-th element of `domain` (lexicographic order).
    pub fn new(domain: Subgroup, assign: Vec<usize>) -> Result<Self> {
        if assign.len() != domain.order() {
            return Err(Error::Domain(format!(
                "grading lists {} labels for a group of order {}",
                assign.len(),
                domain.order()
            )));
        }
        Ok(SimpleCurrentGrading { domain, assign })
    }

    /// Builds from `(element, label)` pairs covering `domain` exactly once.
    pub fn from_pairs(domain: Subgroup, pairs: &[(GroupElement, usize)]) -> Result<Self> {
        let mut assign = vec![None; domain.order()];
        for (g, l) in pairs {
            let k = domain
                .elements()
                .binary_search(g)
                .map_err(|_| Error::Domain(format!("grading element {g} is not in {domain}")))?;
            if assign[k].replace(*l).is_some() {
                return Err(Error::Domain(format!("grading element {g} assigned twice")));
            }
        }
        let assign = assign
            .into_iter()
            .zip(domain.elements())
            .map(|(a, g)| a.ok_or_else(|| Error::Domain(format!("grading misses element {g}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(SimpleCurrentGrading { domain, assign })
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    pub fn label_of(&self, g: &GroupElement) -> usize {
        let k = self
            .domain
            .elements()
            .binary_search(g)
            .expect("element of grading domain");
        self.assign[k]
    }

    /// `(element, label)` in element order.
    pub fn pairs(&self) -> impl Iterator<Item = (&GroupElement, usize)> {
        self.domain
            .elements()
            .iter()
            .zip(self.assign.iter().copied())
    }

    /// Checks unit, simple-current, injectivity and graded-product conditions.
    pub fn validate<I: Scalar>(&self, ring: &FusionRing<I>) -> Result<()> {
        let zero = self.domain.owner().zero();
        if self.label_of(&zero) != ring.unit() {
            return Err(Error::Validation(format!(
                "grading sends 0 to {} instead of the unit",
                ring.label(self.label_of(&zero))
            )));
        }
        let mut seen = BTreeMap::new();
        for (g, l) in self.pairs() {
            if l >= ring.len() {
                return Err(Error::Validation(format!(
                    "grading label index {l} out of range"
                )));
            }
            if !ring.is_simple_current(l) {
                return Err(Error::Validation(format!(
                    "{} (grade {g}) is not a simple current",
                    ring.label(l)
                )));
            }
            if let Some(prev) = seen.insert(l, g.clone()) {
                return Err(Error::Validation(format!(
                    "grades {prev} and {g} share the label {}",
                    ring.label(l)
                )));
            }
        }
        for (g, a) in self.pairs() {
            for (h, b) in self.pairs() {
                let expected = self.label_of(&(g + h));
                if ring.fuse(a, b) != [(expected, 1)] {
                    return Err(Error::Validation(format!(
                        "{} ⊠ {} is not {} (grades {g} + {h})",
                        ring.label(a),
                        ring.label(b),
                        ring.label(expected)
                    )));
                }
            }
        }
        Ok(())
    }
}
