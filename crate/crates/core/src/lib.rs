//! Exact construction of preprojective representations of the extended
//! Dynkin quivers D~n and E~6, obtained by transporting modules over
//! canonical algebras through a tilting functor, together with direct
//! matrix formulas for the same families.
//!
//! All arithmetic is exact, over the rationals or a prime field.

pub mod cli;
pub mod closedform;
pub mod error;
pub mod export;
pub mod hom;
pub mod linalg;
pub mod quiver;
pub mod rep;
pub mod series;
pub mod tilt;

pub use error::{Error, Result};
pub use linalg::{ExactMatrix, Field, Scalar};
pub use quiver::{Algebra, CanonicalAlgebra, Quiver};
pub use rep::{Morphism, Representation};
