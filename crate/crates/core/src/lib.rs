//! curvesing: exact resolution and classification of isolated plane-curve
//! singularity germs.
//!
//! The engine computes Newton boundaries, canonical regular subdivisions of
//! the dual diagram, and iterated toric modifications until a good embedded
//! resolution is reached. On top of that sit the Milnor number (via the
//! weighted dual graph), local intersection multiplicities, a calculus of
//! singularity-type names of Brieskorn-Pham flavor, and a verification layer
//! for inner singularities of torus curves of type (2,5).
//!
//! See the `examples/` directory for one runnable example per capability and
//! the `curvesing` binary for the command-line surface.

pub mod algebra;
pub mod error;
pub mod fan;
pub mod newton;

pub use error::{Error, Result};
