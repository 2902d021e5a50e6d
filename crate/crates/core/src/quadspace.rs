// SPDX-License-Identifier: Apache-2.0

//! Finite quadratic spaces `(C, q)` with the associated bilinear form
//! `b(x, y) = q(x + y) - q(x) - q(y)`.

use std::fmt;

use crate::abgroup::{orthogonal_complement, FinAbGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, QZ};

#[derive(Clone, PartialEq, Eq)]
pub struct QuadraticSpace<I: Scalar> {
    group: FinAbGroup,
    q: Vec<QZ<I>>,
    // row-major |C| x |C| table of b
    b: Vec<QZ<I>>,
}

impl<I: Scalar> QuadraticSpace<I> {
    /// Validates `q` (indexed by element index) and tabulates `b`.
    ///
    /// Rejects forms with `q(n x) != n² q(x)` for some `n` in
    /// `-1..=exponent` or whose polarization is not bi-additive.
    pub fn new(group: FinAbGroup, q: Vec<QZ<I>>) -> Result<Self> {
        let n = group.order();
        if q.len() != n {
            return Err(Error::Domain(format!(
                "quadratic form has {} values but {} has {} elements",
                q.len(),
                group,
                n
            )));
        }
        let elems: Vec<GroupElement> = group.elements().collect();
        let exp = group.exponent() as i64;
        for x in &elems {
            let qx = &q[x.index()];
            for k in (-1..=exp).filter(|&k| k != 1) {
                let lhs = &q[x.scale(k).index()];
                let rhs = qx.scale(k * k);
                if *lhs != rhs {
                    return Err(Error::NotQuadratic(format!(
                        "q({k}·{x}) = {lhs} but {k}²·q({x}) = {rhs}"
                    )));
                }
            }
        }

        let mut b = Vec::with_capacity(n * n);
        for x in &elems {
            for y in &elems {
                let v = &(&q[(x + y).index()] - &q[x.index()]) - &q[y.index()];
                b.push(v);
            }
        }
        let space = QuadraticSpace { group, q, b };

        // A map f with f(x + e) = f(x) + f(e) for every generator e is additive.
        for e in space.group.generators() {
            for x in &elems {
                for y in &elems {
                    let lhs = space.b(&(x + &e), y);
                    let rhs = space.b(x, y) + space.b(&e, y);
                    if lhs != rhs {
                        return Err(Error::NotQuadratic(format!(
                            "b is not additive: b({x}+{e}, {y}) = {lhs} but b({x},{y}) + b({e},{y}) = {rhs}"
                        )));
                    }
                }
            }
        }
        Ok(space)
    }

    /// Tabulates `f` over the group and validates it.
    pub fn from_fn(group: FinAbGroup, f: impl Fn(&GroupElement) -> QZ<I>) -> Result<Self> {
        let q = group.elements().map(|x| f(&x)).collect();
        Self::new(group, q)
    }

    /// The zero form on the trivial group.
    pub fn trivial() -> Self {
        Self::new(FinAbGroup::trivial(), vec![QZ::zero()]).expect("trivial form is quadratic")
    }

    pub fn group(&self) -> &FinAbGroup {
        &self.group
    }

    pub fn q(&self, x: &GroupElement) -> QZ<I> {
        debug_assert!(self.group.owns(x));
        self.q[x.index()].clone()
    }

    /// Form values in element-index order.
    pub fn q_values(&self) -> &[QZ<I>] {
        &self.q
    }

    pub fn b(&self, x: &GroupElement, y: &GroupElement) -> QZ<I> {
        debug_assert!(self.group.owns(x) && self.group.owns(y));
        self.b[x.index() * self.group.order() + y.index()].clone()
    }

    /// `{ x | b(x, y) = 0 for all y }`.
    pub fn radical(&self) -> Subgroup {
        orthogonal_complement(
            &self.group,
            |x, y| self.b(x, y),
            &Subgroup::whole(&self.group),
        )
        .expect("whole group is a subgroup of itself")
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.radical().is_trivial()
    }

    pub fn is_totally_isotropic(&self, h: &Subgroup) -> Result<bool> {
        self.check_subgroup(h)?;
        Ok(h.elements().iter().all(|x| self.q(x).is_zero()))
    }

    /// Orthogonal complement of `h` with respect to `b`.
    pub fn perp(&self, h: &Subgroup) -> Result<Subgroup> {
        self.check_subgroup(h)?;
        orthogonal_complement(&self.group, |x, y| self.b(x, y), h)
    }

    /// Same form over another integer backing.
    pub fn convert<J: Scalar>(&self) -> QuadraticSpace<J> {
        QuadraticSpace {
            group: self.group.clone(),
            q: self.q.iter().map(QZ::convert).collect(),
            b: self.b.iter().map(QZ::convert).collect(),
        }
    }

    fn check_subgroup(&self, h: &Subgroup) -> Result<()> {
        if h.owner() != &self.group {
            return Err(Error::Domain(format!(
                "{h} is not a subgroup of {}",
                self.group
            )));
        }
        Ok(())
    }
}

impl<I: Scalar> fmt::Debug for QuadraticSpace<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let vals: Vec<String> = self.q.iter().map(|v| v.to_string()).collect();
        write!(f, "QuadraticSpace({}, q=[{}])", self.group, vals.join(", "))
    }
}
