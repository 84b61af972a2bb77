//! Exact algebra for lines on cubic threefolds over Q and Q(ω).
//!
//! Everything here is `no_std` with `alloc`: field and polynomial arithmetic,
//! Gröbner bases, Plücker coordinates, the classification of lines into first
//! and second type, and the census of triple lines.

#![no_std]

extern crate alloc;

pub mod census;
pub mod classify;
pub mod error;
pub mod field;
pub mod grassmann;
pub mod ideal;
pub mod linalg;
pub mod poly;
pub mod threefold;

pub use error::{Error, Result};
pub use field::{EisensteinInt, Field, FieldElement};
pub use ideal::{groebner, GroebnerBasis, GroebnerConfig, Ideal};
pub use linalg::Matrix;
pub use poly::{MPoly, Monomial, MonomialOrder, PolyRing, RingRef};
