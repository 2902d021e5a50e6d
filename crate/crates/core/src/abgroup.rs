// SPDX-License-Identifier: Apache-2.0

//! Finite abelian groups `Z_{n1} × … × Z_{nr}`, their subgroups, cosets and
//! `Q/Z`-valued characters.
//!
//! Groups are small, so subgroups are stored as explicit element lists.
//! Elements are indexed in mixed radix with the first coordinate most
//! significant; index order is therefore lexicographic order of coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::exactnum::{Scalar, QZ};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FinAbGroup {
    invariants: Arc<[u64]>,
}

impl FinAbGroup {
    /// `Z_{n1} × … × Z_{nr}`; the empty list gives the trivial group.
    pub fn from_invariants(ns: &[u64]) -> Result<Self> {
        if let Some(n) = ns.iter().find(|&&n| n < 2) {
            return Err(Error::Domain(format!(
                "cyclic factor orders must be at least 2, got {n}"
            )));
        }
        Ok(FinAbGroup {
            invariants: ns.into(),
        })
    }

    pub fn trivial() -> Self {
        FinAbGroup {
            invariants: Arc::from(Vec::new()),
        }
    }

    /// `Z_n`; `n = 1` gives the trivial group.
    pub fn cyclic(n: u64) -> Result<Self> {
        match n {
            0 => Err(Error::Domain("Z_0 is not finite".into())),
            1 => Ok(Self::trivial()),
            n => Self::from_invariants(&[n]),
        }
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn rank(&self) -> usize {
        self.invariants.len()
    }

    pub fn order(&self) -> usize {
        self.invariants.iter().product::<u64>() as usize
    }

    pub fn exponent(&self) -> u64 {
        self.invariants.iter().fold(1, |acc, &n| acc.lcm(&n))
    }

    pub fn is_trivial(&self) -> bool {
        self.invariants.is_empty()
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement {
            owner: self.clone(),
            coords: vec![0; self.rank()],
        }
    }

    /// Builds an element, reducing each coordinate modulo its factor.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.rank() {
            return Err(Error::Domain(format!(
                "element {coords:?} has {} coordinates but {} has rank {}",
                coords.len(),
                self,
                self.rank()
            )));
        }
        let coords = coords
            .iter()
            .zip(self.invariants.iter())
            .map(|(&c, &n)| c.rem_euclid(n as i64) as u64)
            .collect();
        Ok(GroupElement {
            owner: self.clone(),
            coords,
        })
    }

    /// Standard generators `e_1, …, e_r`.
    pub fn generators(&self) -> Vec<GroupElement> {
        (0..self.rank())
            .map(|j| {
                let mut coords = vec![0; self.rank()];
                coords[j] = 1;
                GroupElement {
                    owner: self.clone(),
                    coords,
                }
            })
            .collect()
    }

    pub fn index_of(&self, e: &GroupElement) -> usize {
        debug_assert_eq!(&e.owner, self);
        e.coords
            .iter()
            .zip(self.invariants.iter())
            .fold(0usize, |acc, (&c, &n)| acc * n as usize + c as usize)
    }

    pub fn element_at(&self, mut idx: usize) -> GroupElement {
        let mut coords = vec![0u64; self.rank()];
        for (slot, &n) in coords.iter_mut().zip(self.invariants.iter()).rev() {
            *slot = (idx % n as usize) as u64;
            idx /= n as usize;
        }
        GroupElement {
            owner: self.clone(),
            coords,
        }
    }

    /// All elements in lexicographic order.
    pub fn elements(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order()).map(move |i| self.element_at(i))
    }

    pub fn owns(&self, e: &GroupElement) -> bool {
        &e.owner == self
    }

    fn check(&self, e: &GroupElement) -> Result<()> {
        if self.owns(e) {
            Ok(())
        } else {
            Err(Error::Domain(format!(
                "element {e} does not belong to {self}"
            )))
        }
    }
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "Z1");
        }
        let parts: Vec<String> = self.invariants.iter().map(|n| format!("Z{n}")).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    owner: FinAbGroup,
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn owner(&self) -> &FinAbGroup {
        &self.owner
    }

    pub fn coords(&self) -> &[u64] {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }

    pub fn index(&self) -> usize {
        self.owner.index_of(self)
    }

    pub fn try_add(&self, other: &GroupElement) -> Result<GroupElement> {
        self.owner.check(other)?;
        Ok(self.combine(other, |a, b, n| (a + b) % n))
    }

    pub fn try_sub(&self, other: &GroupElement) -> Result<GroupElement> {
        self.owner.check(other)?;
        Ok(self.combine(other, |a, b, n| (a + n - b) % n))
    }

    /// `n · self` for any integer `n`.
    pub fn scale(&self, n: i64) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(self.owner.invariants.iter())
            .map(|(&c, &m)| ((c as i128 * n as i128).rem_euclid(m as i128)) as u64)
            .collect();
        GroupElement {
            owner: self.owner.clone(),
            coords,
        }
    }

    /// Order of the element in its group.
    pub fn order(&self) -> u64 {
        self.coords
            .iter()
            .zip(self.owner.invariants.iter())
            .fold(1, |acc, (&c, &n)| acc.lcm(&(n / c.gcd(&n))))
    }

    /// Coordinates as signed integers, convenient for closed-form evaluation.
    pub fn signed_coords(&self) -> Vec<i64> {
        self.coords.iter().map(|&c| c as i64).collect()
    }

    fn combine(&self, other: &GroupElement, f: impl Fn(u64, u64, u64) -> u64) -> GroupElement {
        let coords = self
            .coords
            .iter()
            .zip(&other.coords)
            .zip(self.owner.invariants.iter())
            .map(|((&a, &b), &n)| f(a, b, n))
            .collect();
        GroupElement {
            owner: self.owner.clone(),
            coords,
        }
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        self.try_add(rhs)
            .expect("adding elements of different groups")
    }
}

impl Add for GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: GroupElement) -> GroupElement {
        &self + &rhs
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        self.try_sub(rhs)
            .expect("subtracting elements of different groups")
    }
}

impl Sub for GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: GroupElement) -> GroupElement {
        &self - &rhs
    }
}

impl Neg for &GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        self.scale(-1)
    }
}

impl Neg for GroupElement {
    type Output = GroupElement;
    fn neg(self) -> GroupElement {
        self.scale(-1)
    }
}

impl PartialOrd for GroupElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for GroupElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coords
            .cmp(&other.coords)
            .then_with(|| self.owner.invariants.cmp(&other.owner.invariants))
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Subgroup {
    owner: FinAbGroup,
    elements: Vec<GroupElement>,
    member: Vec<bool>,
}

impl Subgroup {
    /// The smallest subgroup containing `gens`.
    pub fn generate(group: &FinAbGroup, gens: &[GroupElement]) -> Result<Self> {
        for g in gens {
            group.check(g)?;
        }
        let mut member = vec![false; group.order()];
        member[0] = true;
        let mut elements = vec![group.zero()];
        // Closing under addition of generators suffices in a finite group.
        let mut frontier = 0;
        while frontier < elements.len() {
            let e = elements[frontier].clone();
            frontier += 1;
            for g in gens {
                let s = &e + g;
                let i = s.index();
                if !member[i] {
                    member[i] = true;
                    elements.push(s);
                }
            }
        }
        elements.sort();
        Ok(Subgroup {
            owner: group.clone(),
            elements,
            member,
        })
    }

    /// Accepts an explicit element set after checking it is a subgroup.
    pub fn from_elements(group: &FinAbGroup, elems: &[GroupElement]) -> Result<Self> {
        let h = Self::generate(group, elems)?;
        if h.order() != {
            let mut idx: Vec<usize> = elems.iter().map(|e| e.index()).collect();
            idx.sort_unstable();
            idx.dedup();
            idx.len()
        } {
            return Err(Error::Domain(format!(
                "elements {elems:?} are not closed under addition in {group}"
            )));
        }
        Ok(h)
    }

    pub fn whole(group: &FinAbGroup) -> Self {
        Subgroup {
            owner: group.clone(),
            elements: group.elements().collect(),
            member: vec![true; group.order()],
        }
    }

    pub fn trivial(group: &FinAbGroup) -> Self {
        let mut member = vec![false; group.order()];
        member[0] = true;
        Subgroup {
            owner: group.clone(),
            elements: vec![group.zero()],
            member,
        }
    }

    pub fn owner(&self) -> &FinAbGroup {
        &self.owner
    }

    /// Elements in lexicographic order.
    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn index_in_owner(&self) -> usize {
        self.owner.order() / self.order()
    }

    pub fn contains(&self, e: &GroupElement) -> bool {
        self.owner.owns(e) && self.member[e.index()]
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.owner == other.owner && self.elements.iter().all(|e| other.contains(e))
    }

    /// Lexicographically minimal element of `a + H`.
    pub fn canonical_rep(&self, a: &GroupElement) -> GroupElement {
        self.elements
            .iter()
            .map(|h| a + h)
            .min()
            .expect("subgroup is nonempty")
    }

    /// Whether `a ≡ b` modulo this subgroup.
    pub fn congruent(&self, a: &GroupElement, b: &GroupElement) -> bool {
        self.contains(&(a - b))
    }

    pub fn intersection(&self, other: &Subgroup) -> Result<Subgroup> {
        self.owner.check(&other.owner.zero())?;
        let common: Vec<GroupElement> = self
            .elements
            .iter()
            .filter(|e| other.contains(e))
            .cloned()
            .collect();
        Subgroup::from_elements(&self.owner, &common)
    }

    /// Every subgroup of `group`, each once, ordered by size then elements.
    pub fn all_subgroups(group: &FinAbGroup) -> Vec<Subgroup> {
        let mut found: Vec<Subgroup> = vec![Subgroup::trivial(group)];
        let mut i = 0;
        while i < found.len() {
            let h = found[i].clone();
            i += 1;
            for g in group.elements() {
                if h.contains(&g) {
                    continue;
                }
                let mut gens = h.elements.clone();
                gens.push(g);
                let bigger = Subgroup::generate(group, &gens).expect("same group");
                if !found.contains(&bigger) {
                    found.push(bigger);
                }
            }
        }
        found.sort_by(|a, b| {
            a.order()
                .cmp(&b.order())
                .then_with(|| a.elements.cmp(&b.elements))
        });
        found
    }
}

impl fmt::Display for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub rep: GroupElement,
    pub elements: Vec<GroupElement>,
}

/// Partition of `group` into cosets of `h`, ordered by canonical representative.
pub fn cosets(group: &FinAbGroup, h: &Subgroup) -> Result<Vec<Coset>> {
    if h.owner() != group {
        return Err(Error::Domain(format!("{h} is not a subgroup of {group}")));
    }
    let mut seen = vec![false; group.order()];
    let mut out = Vec::with_capacity(h.index_in_owner());
    // Lexicographic scan: the first unseen element is the coset minimum.
    for a in group.elements() {
        if seen[a.index()] {
            continue;
        }
        let mut elements: Vec<GroupElement> = h.elements().iter().map(|x| &a + x).collect();
        elements.sort();
        for e in &elements {
            seen[e.index()] = true;
        }
        out.push(Coset { rep: a, elements });
    }
    Ok(out)
}

/// `{ a ∈ G | b(a, h) = 0 for all h ∈ H }`.
pub fn orthogonal_complement<I, F>(group: &FinAbGroup, b: F, h: &Subgroup) -> Result<Subgroup>
where
    I: Scalar,
    F: Fn(&GroupElement, &GroupElement) -> QZ<I>,
{
    if h.owner() != group {
        return Err(Error::Domain(format!("{h} is not a subgroup of {group}")));
    }
    let elems: Vec<GroupElement> = group
        .elements()
        .filter(|a| h.elements().iter().all(|x| b(a, x).is_zero()))
        .collect();
    Subgroup::from_elements(group, &elems)
}

/// Additive `Q/Z`-valued character on a subgroup, stored by its exponent.
#[derive(Clone, PartialEq, Eq)]
pub struct Character<I: Scalar> {
    domain: Subgroup,
    values: Vec<QZ<I>>,
}

impl<I: Scalar> Character<I> {
    /// Tabulates `f` on `domain` and checks additivity.
    pub fn from_fn(domain: &Subgroup, f: impl Fn(&GroupElement) -> QZ<I>) -> Result<Self> {
        let values: Vec<QZ<I>> = domain.elements().iter().map(&f).collect();
        let chi = Character {
            domain: domain.clone(),
            values,
        };
        chi.check_additive()?;
        Ok(chi)
    }

    pub fn trivial(domain: &Subgroup) -> Self {
        Character {
            domain: domain.clone(),
            values: vec![QZ::zero(); domain.order()],
        }
    }

    fn check_additive(&self) -> Result<()> {
        for x in self.domain.elements() {
            for y in self.domain.elements() {
                let lhs = self.value(&(x + y));
                let rhs = self.value(x) + self.value(y);
                if lhs != rhs {
                    return Err(Error::Inconsistent(format!(
                        "character is not additive at ({x}, {y}): {lhs} != {rhs}"
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn domain(&self) -> &Subgroup {
        &self.domain
    }

    /// Values aligned with `domain().elements()`.
    pub fn values(&self) -> &[QZ<I>] {
        &self.values
    }

    pub fn value(&self, e: &GroupElement) -> QZ<I> {
        let pos = self
            .domain
            .elements()
            .binary_search(e)
            .unwrap_or_else(|_| panic!("{e} outside character domain {}", self.domain));
        self.values[pos].clone()
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }
}

impl<I: Scalar> PartialOrd for Character<I> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<I: Scalar> Ord for Character<I> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.values.cmp(&other.values)
    }
}

impl<I: Scalar> fmt::Display for Character<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(|v| v.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl<I: Scalar> fmt::Debug for Character<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Character{self}")
    }
}

/// Every character of `h`, sorted; the trivial character comes first.
pub fn characters<I: Scalar>(h: &Subgroup) -> Vec<Character<I>> {
    let owner = h.owner();
    let mut gens: Vec<GroupElement> = Vec::new();
    let mut span = Subgroup::trivial(owner);
    for e in h.elements() {
        if !span.contains(e) {
            gens.push(e.clone());
            span = Subgroup::generate(owner, &gens).expect("generators lie in the owner");
        }
    }
    let orders: Vec<u64> = gens.iter().map(GroupElement::order).collect();
    let total: u64 = orders.iter().product();
    let mut out = Vec::with_capacity(h.order());
    'codes: for code in 0..total {
        let mut rest = code;
        let images: Vec<QZ<I>> = orders
            .iter()
            .map(|&o| {
                let t = rest % o;
                rest /= o;
                QZ::from_i64(t as i64, o as i64).expect("positive order")
            })
            .collect();
        // Propagate along generators; a clash means the images are incompatible.
        let mut val: Vec<Option<QZ<I>>> = vec![None; owner.order()];
        val[owner.zero().index()] = Some(QZ::zero());
        let mut queue = vec![owner.zero()];
        while let Some(x) = queue.pop() {
            let vx = val[x.index()]
                .clone()
                .expect("queued elements are assigned");
            for (g, img) in gens.iter().zip(&images) {
                let y = &x + g;
                let vy = &vx + img;
                match &val[y.index()] {
                    Some(prev) if *prev != vy => continue 'codes,
                    Some(_) => {}
                    None => {
                        val[y.index()] = Some(vy);
                        queue.push(y);
                    }
                }
            }
        }
        if let Ok(chi) = Character::from_fn(h, |e| val[e.index()].clone().expect("span covers h")) {
            out.push(chi);
        }
    }
    out.sort();
    out.dedup();
    debug_assert_eq!(out.len(), h.order());
    out
}
