//! Exact arithmetic foundations: labels in `Q/Z`, positive rational
//! degrees, integer helpers, and the coefficient rings.

mod ext_field;
pub mod numtheory;
mod qmodz;
mod ring;
mod sqrt;

pub use ext_field::{format_poly, is_irreducible, ExtField};
pub use qmodz::{PosRational, QmodZ};
pub use ring::{parse_rational, Coeff, Ring};
pub use sqrt::SqrtRat;
