//! Exact computation with shifted double Schur functions: equivariant
//! Littlewood-Richardson coefficients for Schubert classes of the Sato
//! Grassmannian, by direct expansion, by fixed-point localization and by the
//! hook-function formula for the standard circle action, together with the
//! comultiplication on shifted power sums.

pub mod comult;
pub mod error;
pub mod partitions;
pub mod polyring;
pub mod schur;
pub mod structconst;

pub use error::{Error, ErrorClass, Result};
pub use partitions::{Partition, SkewShape};
pub use polyring::{Monomial, Poly, Var, YSpec};
