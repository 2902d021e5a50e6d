// SPDX-License-Identifier: Apache-2.0

//! Concrete models: rank-one lattice data, affine `sl2` at level `k`, the
//! parafermion rings obtained from them, and the lattice deformation
//! `m ↦ m + s·k`.
//!
//! The `sl2` fusion rules and weights are standard external input (the
//! truncated Clebsch–Gordan rule), not derived here.

use num_integer::Integer;

use crate::abgroup::{FinAbGroup, GroupElement, Subgroup};
use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar, QZ};
use crate::extension::ExtensionProblem;
use crate::fusion::{FusionRing, SimpleCurrentGrading};
use crate::inverse::InverseProblem;
use crate::quadspace::QuadraticSpace;

/// The discriminant form of `√(2km) Z`: `(Z_{2km}, r²/(4km))`.
#[derive(Clone, Debug)]
pub struct LatticeDatum<I: Scalar> {
    pub k: u64,
    pub m: u64,
    pub space: QuadraticSpace<I>,
}

fn positive(name: &str, x: u64) -> Result<()> {
    if x == 0 {
        return Err(Error::Domain(format!("{name} must be at least 1")));
    }
    Ok(())
}

fn int<I: Scalar>(n: u64) -> I {
    I::from_u64(n).expect("small integer fits the backing")
}

pub fn lattice_rank1<I: Scalar>(k: u64, m: u64) -> Result<LatticeDatum<I>> {
    positive("k", k)?;
    positive("m", m)?;
    let n = 2 * k * m;
    let group = FinAbGroup::cyclic(n)?;
    let space = QuadraticSpace::from_fn(group, |x| {
        let r = x.coords()[0];
        QZ::new(int(r * r), int(2 * n)).expect("positive denominator")
    })?;
    Ok(LatticeDatum { k, m, space })
}

/// `L0 … Lk` with `h(La) = a(a+2)/(4(k+2))` and
/// `N(La, Lb, Lc) = 1` iff `|a-b| ≤ c ≤ min(a+b, 2k-a-b)` and `a+b+c` is even.
pub fn affine_sl2<I: Scalar>(k: u64) -> Result<FusionRing<I>> {
    positive("k", k)?;
    let n = k as usize + 1;
    let labels = (0..n).map(|a| format!("L{a}")).collect();
    let h: Vec<Rational<I>> = (0..k + 1)
        .map(|a| Rational::new(int(a * (a + 2)), int(4 * (k + 2))))
        .collect();
    let weights = h.iter().cloned().map(QZ::from_rational).collect();
    let mut entries = Vec::new();
    for a in 0..=k {
        for b in 0..=k {
            let top = (a + b).min(2 * k - a - b);
            for c in a.abs_diff(b)..=top {
                if (a + b + c).is_even() {
                    entries.push((a as usize, b as usize, c as usize, 1));
                }
            }
        }
    }
    FusionRing::new(labels, 0, (0..n).collect(), weights, entries)?.with_true_weights(h)
}

/// `U = L(k,0)` over `V = (Z_{2k}, r²/(4k))` with `D = ⟨2⟩`, `U^k = Lk` and
/// branching `λ(La) = a`.
pub fn sl2_inverse_problem<I: Scalar>(k: u64) -> Result<InverseProblem<I>> {
    let u = affine_sl2::<I>(k)?;
    let v = lattice_rank1::<I>(k, 1)?.space;
    let c = v.group().clone();
    let el = |r: u64| c.element(&[r as i64]);
    let d = Subgroup::generate(&c, &[el(2)?])?;
    let dperp = v.perp(&d)?;
    let pairs: Vec<(GroupElement, usize)> = dperp
        .elements()
        .iter()
        .map(|g| (g.clone(), if g.is_zero() { 0 } else { k as usize }))
        .collect();
    let grading = SimpleCurrentGrading::from_pairs(dperp, &pairs)?;
    let branching = (0..=k)
        .map(|a| Ok((a as usize, el(a)?)))
        .collect::<Result<Vec<_>>>()?;
    InverseProblem::new(u, v, d, grading, &branching)
}

/// The parafermion ring `K(sl2, k)` with `k(k+1)/2` labels.
pub fn parafermion_sl2<I: Scalar>(k: u64) -> Result<FusionRing<I>> {
    Ok(sl2_inverse_problem::<I>(k)?.derive()?.ring)
}

/// `K(sl2, k) ⊗ (Z_{2k}, r²/(4k))` extended by `D = ⟨2⟩`, whose extension is
/// `L(k, 0)`.
pub fn parafermion_problem<I: Scalar>(k: u64) -> Result<ExtensionProblem<I>> {
    Ok(sl2_inverse_problem::<I>(k)?.derive()?.forward)
}

/// Replaces the datum `(Z_{2km}, r²/(4km))` with `D = ⟨2m⟩ ≅ Z_k` by
/// `(Z_{2k(m+sk)}, r²/(4k(m+sk)))` with `D = ⟨2(m+sk)⟩`, keeping `W` and
/// sending the grade of `j·2m` to `j·2(m+sk)`.
pub fn deform<I: Scalar>(p: &ExtensionProblem<I>, s: i64) -> Result<ExtensionProblem<I>> {
    let c = p.v().group();
    let unsupported = || {
        Error::Domain(format!(
            "deform needs a cyclic rank-one lattice datum with D of index k; got C = {c}, D = {}",
            p.d()
        ))
    };
    if c.rank() != 1 {
        return Err(unsupported());
    }
    let n = c.order() as u64;
    let k = p.d().order() as u64;
    if !n.is_multiple_of(2 * k) {
        return Err(unsupported());
    }
    let m = n / (2 * k);
    let expected = lattice_rank1::<I>(k, m)?;
    let gen = c.element(&[2 * m as i64])?;
    if expected.space.q_values() != p.v().q_values()
        || *p.d() != Subgroup::generate(c, std::slice::from_ref(&gen))?
    {
        return Err(unsupported());
    }
    let m2 = m as i64 + s * k as i64;
    if m2 <= 0 {
        return Err(Error::Domain(format!(
            "m + s·k = {m} + {s}·{k} = {m2} must be positive"
        )));
    }
    let m2 = m2 as u64;
    let v2 = lattice_rank1::<I>(k, m2)?.space;
    let c2 = v2.group().clone();
    let mut pairs = Vec::with_capacity(k as usize);
    let mut gens2 = Vec::new();
    for j in 0..k as i64 {
        let old = gen.scale(j);
        let new = c2.element(&[j * 2 * m2 as i64])?;
        if j == 1 {
            gens2.push(new.clone());
        }
        pairs.push((new, p.current(&old)));
    }
    let d2 = Subgroup::generate(&c2, &gens2)?;
    let grading = SimpleCurrentGrading::from_pairs(d2.clone(), &pairs)?;
    ExtensionProblem::new(p.w().clone(), v2, d2, grading)
}
