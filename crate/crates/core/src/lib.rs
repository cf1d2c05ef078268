//! Exact computations with exceptional sequences, silting objects and
//! m-cluster tilting objects over path algebras of acyclic quivers.
//!
//! The algebra is generic over a [`Scalar`] field; the aliases at the crate
//! root fix it to arbitrary-precision rationals.

pub mod cluster;
pub mod derived;
pub mod error;
pub mod exactla;
pub mod excseq;
pub mod homext;
pub mod io;
pub mod placement;
pub mod quiver;
pub mod repcat;
pub mod scalar;
pub mod verify;

pub use error::{Error, Result};
pub use quiver::{Classification, Quiver};
pub use scalar::Scalar;

pub use num_rational::BigRational as Rational;

pub type RatMatrix = exactla::Matrix<Rational>;
pub type RatRepresentation = repcat::Representation<Rational>;
pub type RatMorphism = repcat::Morphism<Rational>;
pub type RatModCat = repcat::ModCat<Rational>;
