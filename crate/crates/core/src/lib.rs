//! Finite commutative rings as explicit operation tables, and the
//! amalgamation `A ⋈^f J` of a ring `A` with a ring `B` along an ideal `J`
//! of `B` with respect to a homomorphism `f: A → B`.
//!
//! Everything is computed by enumeration, so every claim about an instance
//! can be checked exhaustively. Checks return a [`VerificationReport`]
//! carrying the maps and elements that witness the claim.
//!
//! ```
//! use amalgam_core::{amalgamation::amalgam, morphism::RingHom, ring::zmod, subobjects::Ideal};
//!
//! let (z4, z2) = (zmod(4)?, zmod(2)?);
//! let f = RingHom::new(&z4, &z2, vec![0, 1, 0, 1], true)?;
//! let j = Ideal::whole(&z2);
//! let amg = amalgam(&f, &j)?;
//! assert_eq!(amg.ring().order(), 8);
//! # Ok::<(), amalgam_core::Error>(())
//! ```

pub mod amalgamation;
pub mod constructions;
mod error;
mod guard;
pub mod morphism;
pub mod report;
pub mod ring;
pub mod subobjects;

pub use error::{Error, Result};
pub use guard::{size_guard, with_size_guard, DEFAULT_SIZE_GUARD};
pub use morphism::RingHom;
pub use report::{Status, VerificationReport};
pub use ring::{FiniteRng, Ring};
pub use subobjects::{Ideal, Subrng};
