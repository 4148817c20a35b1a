//! Numerical computation with Belyi functions, dessin d'enfant supports, and
//! rational lemniscates.
//!
//! The library traces the preimage of [-1, 1] under a Belyi function as a
//! bicolored graph, intersects rational lemniscates by resultant elimination,
//! searches for field-generation certificates, and runs an end-to-end harness
//! checking that two dessins with equal supports and a generating function
//! pair are both segments or both circles.

pub mod bivar;
pub mod certify;
pub mod dessin;
pub mod error;
pub mod lemniscate;
pub mod maps;
pub mod poly;
pub mod ratfunc;
pub mod sphere;

pub use error::{Error, Result};
pub use poly::ComplexPoly;
pub use ratfunc::RatFunc;
pub use sphere::SpherePoint;
