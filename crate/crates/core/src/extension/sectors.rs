// SPDX-License-Identifier: Apache-2.0

use std::collections::{BTreeSet, HashMap};
use std::sync::OnceLock;

use super::{ExtensionProblem, OrbitData, SectorId, SectorName};
use crate::abgroup::{characters, Character, GroupElement};
use crate::error::{Error, Result};
use crate::exactnum::{Scalar, QZ};
use crate::fusion::FusionRing;

/// A sector `U^{i,α} = ⊕_{β∈D} W^{i,β} ⊗ V^{α+β}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sector<I: Scalar> {
    pub id: SectorId,
    /// The twist `ξ_{i,α}` as a character of `D`.
    pub chi: Character<I>,
    /// `(W^{i,β}, α + β)` for `β ∈ D` in element order.
    pub decomposition: Vec<(usize, GroupElement)>,
    /// `h(W^{i,0}) + q(α)` mod 1.
    pub weight: QZ<I>,
}

/// Sectors sharing one twist `χ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterBlock<I: Scalar> {
    pub chi: Character<I>,
    pub sectors: Vec<Sector<I>>,
}

/// All sectors, grouped by twist; the untwisted block comes first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SectorTable<I: Scalar> {
    pub blocks: Vec<CharacterBlock<I>>,
}

impl<I: Scalar> SectorTable<I> {
    pub fn untwisted(&self) -> &CharacterBlock<I> {
        &self.blocks[0]
    }

    pub fn len(&self) -> usize {
        self.blocks.iter().map(|b| b.sectors.len()).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// A validated problem together with its orbit data, twist tables and the
/// lazily built fusion ring of `U`.
#[derive(Debug)]
pub struct Extension<I: Scalar> {
    problem: ExtensionProblem<I>,
    orbits: OrbitData,
    chars: Vec<Character<I>>,
    // xi[i][α.index()] = position of ξ_{i,α} in `chars`
    xi: Vec<Vec<usize>>,
    untwisted: Vec<SectorId>,
    index: HashMap<SectorId, usize>,
    pub(super) u_ring: OnceLock<FusionRing<I>>,
}

impl<I: Scalar> Extension<I> {
    pub fn new(problem: ExtensionProblem<I>) -> Result<Self> {
        let orbits = OrbitData::compute(&problem)?;
        let chars = characters::<I>(problem.d());
        let c = problem.v().group().clone();
        let mut xi = Vec::with_capacity(orbits.len());
        for i in 0..orbits.len() {
            let rep = orbits.orbit(i).rep;
            let mut row = Vec::with_capacity(c.order());
            for alpha in c.elements() {
                let chi = Character::from_fn(problem.d(), |beta| {
                    problem.b_w(beta, rep) + problem.v().b(beta, &alpha)
                })?;
                let pos = chars.binary_search(&chi).map_err(|_| {
                    Error::Inconsistent(format!(
                        "ξ for orbit {i} at {alpha} is not a character of D"
                    ))
                })?;
                row.push(pos);
            }
            xi.push(row);
        }
        let mut ext = Extension {
            problem,
            orbits,
            chars,
            xi,
            untwisted: Vec::new(),
            index: HashMap::new(),
            u_ring: OnceLock::new(),
        };
        ext.untwisted = ext.sector_ids(0);
        ext.index = ext
            .untwisted
            .iter()
            .enumerate()
            .map(|(k, s)| (s.clone(), k))
            .collect();
        Ok(ext)
    }

    pub fn problem(&self) -> &ExtensionProblem<I> {
        &self.problem
    }

    pub fn orbits(&self) -> &OrbitData {
        &self.orbits
    }

    /// The characters of `D`, sorted with the trivial one first.
    pub fn characters(&self) -> &[Character<I>] {
        &self.chars
    }

    /// `η_α(β) = b_V(β, α)`.
    pub fn eta(&self, alpha: &GroupElement) -> Character<I> {
        let v = self.problem.v();
        Character::from_fn(self.problem.d(), |beta| v.b(beta, alpha)).expect("b_V is bi-additive")
    }

    /// `ξ_{i,α}(β) = b_W(W^β, W^{i,0}) + b_V(β, α)`.
    pub fn xi_character(&self, i: usize, alpha: &GroupElement) -> &Character<I> {
        &self.chars[self.xi[i][alpha.index()]]
    }

    pub fn is_untwisted(&self, i: usize, alpha: &GroupElement) -> bool {
        self.xi[i][alpha.index()] == 0
    }

    /// `C(i, χ) = { α ∈ C | ξ_{i,α} = χ }`, a coset of `D^⊥`.
    pub fn c_set(&self, i: usize, chi: &Character<I>) -> Vec<GroupElement> {
        let Ok(pos) = self.chars.binary_search(chi) else {
            return Vec::new();
        };
        self.problem
            .v()
            .group()
            .elements()
            .filter(|a| self.xi[i][a.index()] == pos)
            .collect()
    }

    /// The label `(i, α)` with `α` reduced modulo `D_i`.
    pub fn canonical(&self, i: usize, alpha: &GroupElement) -> SectorId {
        SectorId {
            orbit: i,
            alpha: self.orbits.orbit(i).stabilizer.canonical_rep(alpha),
        }
    }

    fn sector_ids(&self, chi_pos: usize) -> Vec<SectorId> {
        let mut ids = BTreeSet::new();
        for i in 0..self.orbits.len() {
            for alpha in self.problem.v().group().elements() {
                if self.xi[i][alpha.index()] == chi_pos {
                    ids.insert(self.canonical(i, &alpha));
                }
            }
        }
        ids.into_iter().collect()
    }

    /// Full description of the sector through `(i, α)`.
    pub fn sector(&self, i: usize, alpha: &GroupElement) -> Sector<I> {
        let id = self.canonical(i, alpha);
        let decomposition = self
            .problem
            .d()
            .elements()
            .iter()
            .map(|beta| (self.orbits.label_at(i, beta), &id.alpha + beta))
            .collect();
        let weight =
            self.problem.w().weight(self.orbits.orbit(i).rep) + &self.problem.v().q(&id.alpha);
        Sector {
            chi: self.xi_character(i, &id.alpha).clone(),
            id,
            decomposition,
            weight,
        }
    }

    /// Expected number of sectors per twist, `|C|·|Irr(W)| / |D|²`.
    pub fn expected_count(&self) -> usize {
        let d = self.problem.d().order();
        self.problem.v().group().order() * self.problem.w().len() / (d * d)
    }

    /// All sectors for every character of `D`, checking that each twist has
    /// the same number of sectors.
    pub fn sector_table(&self) -> Result<SectorTable<I>> {
        let expected = self.expected_count();
        let mut blocks = Vec::with_capacity(self.chars.len());
        for (pos, chi) in self.chars.iter().enumerate() {
            let sectors: Vec<Sector<I>> = self
                .sector_ids(pos)
                .iter()
                .map(|s| self.sector(s.orbit, &s.alpha))
                .collect();
            if sectors.len() != expected {
                return Err(Error::Inconsistent(format!(
                    "{} sectors with twist {chi}, expected {expected}",
                    sectors.len()
                )));
            }
            blocks.push(CharacterBlock {
                chi: chi.clone(),
                sectors,
            });
        }
        Ok(SectorTable { blocks })
    }

    /// Untwisted sectors in label order; these label `Irr(U)`.
    pub fn untwisted(&self) -> &[SectorId] {
        &self.untwisted
    }

    /// Position of an untwisted sector among [`Extension::untwisted`].
    pub fn untwisted_index(&self, s: &SectorId) -> Option<usize> {
        self.index.get(s).copied()
    }

    /// Resolves a user-typed name to an untwisted or twisted sector label.
    ///
    /// Non-canonical coordinates are rejected with the canonical spelling as
    /// a suggestion rather than silently reduced.
    pub fn resolve(&self, name: &SectorName) -> Result<SectorId> {
        let c = self.problem.v().group();
        if name.orbit >= self.orbits.len() {
            return Err(Error::Domain(format!(
                "no orbit i{}; orbits are i0..i{}",
                name.orbit,
                self.orbits.len() - 1
            )));
        }
        if name.coords.len() != c.rank() {
            return Err(Error::Domain(format!(
                "sector coordinates need {} entries for C = {c}",
                c.rank()
            )));
        }
        let alpha = c.element(&name.coords)?;
        let id = self.canonical(name.orbit, &alpha);
        let typed_canonical = name
            .coords
            .iter()
            .zip(id.alpha.coords())
            .all(|(&a, &b)| a >= 0 && a as u64 == b);
        if !typed_canonical {
            return Err(Error::Domain(format!(
                "sector name {} is ambiguous: the canonical name of this sector is {id}",
                display_name(name)
            )));
        }
        Ok(id)
    }
}

fn display_name(n: &SectorName) -> String {
    let mut s = format!("(i{}", n.orbit);
    for c in &n.coords {
        s.push_str(&format!(",{c}"));
    }
    s.push(')');
    s
}
