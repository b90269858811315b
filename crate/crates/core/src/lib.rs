//! Exact arithmetic for the integral Bost-Connes algebra.
//!
//! The crate covers the group ring of `Q/Z` over a choice of coefficient
//! ring, the crossed product by the multiplicative semigroup with its
//! normal form, the ν-presentation, and the characteristic-p degeneration
//! (convolution algebra, nilpotent crossed product, triangular model,
//! reduction and Frobenius checks).

pub mod arith;
pub mod bc;
pub mod char_p;
pub mod error;
pub mod group_ring;
pub mod hecke;
pub mod json;
pub mod sample;
mod sparse;

pub use arith::{ExtField, PosRational, QmodZ, Coeff, Ring, SqrtRat};
pub use error::{Error, Result};
pub use bc::{BcElem, BcKey, EElem};
pub use char_p::{CpElem, CpKey, GElem, PAdicFrac, TpElem};
pub use group_ring::{CyclotomicPoly, GroupRingElem};
pub use hecke::HeckeElem;
