// SPDX-License-Identifier: Apache-2.0

//! Exact fusion-ring computations for simple current extensions
//! `U = ⊕_{β∈D} W^β ⊗ V^β`.
//!
//! From the fusion ring of `W` and a pointed datum `(C, q)` for `V` the
//! crate classifies every untwisted and twisted sector of `U`, computes
//! `R(U)`, derives `R(W)` back from `R(U)`, and checks the orbit duality
//! between the two sides.
//!
//! Everything is generic over the integer backing ([`exactnum::Scalar`]);
//! the aliases below fix it to `BigInt` (or `i64` where overflow cannot
//! happen at desk scale).
//!
//! ```
//! use fuselift::{catalog, Extension, Ring};
//!
//! let problem = catalog::parafermion_problem(2).unwrap();
//! let ext = Extension::new(problem).unwrap();
//! let u: &Ring = ext.build_u_ring().unwrap();
//! assert_eq!(u.len(), 3);
//! ```

pub mod abgroup;
pub mod catalog;
pub mod error;
pub mod exactnum;
pub mod extension;
pub mod fusion;
pub mod inverse;
pub mod io;
pub mod quadspace;

use num_bigint::BigInt;

pub use abgroup::{Character, FinAbGroup, GroupElement, Subgroup};
pub use error::{Error, Result};
pub use exactnum::Scalar;
pub use extension::{Extension, ExtensionProblem, SectorId, SectorName};
pub use fusion::{FusionRing, SimpleCurrentGrading};
pub use inverse::InverseProblem;
pub use quadspace::QuadraticSpace;

/// `Q/Z` over arbitrary-precision integers.
pub type Qz = exactnum::QZ<BigInt>;
pub type Qz64 = exactnum::QZ<i64>;
pub type Rational = exactnum::Rational<BigInt>;
pub type Ring = FusionRing<BigInt>;
pub type Ring64 = FusionRing<i64>;
pub type Space = QuadraticSpace<BigInt>;
pub type Problem = ExtensionProblem<BigInt>;
pub type Ext = Extension<BigInt>;
pub type Inverse = InverseProblem<BigInt>;
pub type Sector = extension::Sector<BigInt>;
pub type SectorTable = extension::SectorTable<BigInt>;
