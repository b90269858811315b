//! The characteristic-p degeneration: the truncated convolution algebra
//! `T(p)` and its isomorphism `ι` with the `p`-power group ring, the
//! nilpotent crossed product `C_p` with its triangular representation and
//! affine-semigroup labels, reduction of the abelian part, and the
//! Frobenius identity.

mod cp;
mod padic;
mod reduction;
mod semigroup;
mod tp;

pub use cp::{cp_monomial_product, CpElem, CpKey, CpMatrix, XiVector};
pub use padic::PAdicFrac;
pub use reduction::{reduce_mod_p, reduced_rho};
pub use semigroup::{GElem, GWord};
pub use tp::{iota, tau_relations_hold, TpElem};

use crate::error::Result;
use crate::group_ring::GroupRingElem;

/// Compares `(σ_{p^ℓ} ⊗ Frob^ℓ)(f)` with `f^{p^ℓ}`.
pub fn frobenius_identity_check(f: &GroupRingElem, l: u32) -> Result<bool> {
    f.frobenius_identity_holds(l)
}
