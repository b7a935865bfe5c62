//! Exact coefficient arithmetic and sparse bivariate polynomial algebra.
//!
//! Coefficients live in a bounded tower of simple algebraic extensions of
//! the rationals (default depth 2). Everything here is exact: no floating
//! point, no rounding, structural equality throughout.

pub mod factor;
pub mod parse;
pub mod poly;
pub mod tower;
pub mod unipoly;

pub use factor::{adjoin_root, factor_squarefree, factor_with_multiplicity, roots_in_tower};
pub use parse::parse_polynomial;
pub use poly::{Polynomial, TriangularAxis};
pub use tower::{FieldElement, Tower, Q};
pub use unipoly::UniPoly;
