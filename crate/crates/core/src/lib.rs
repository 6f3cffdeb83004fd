//! Fixed loci of cyclic group actions on Calogero–Moser spaces of type G(l,1,n):
//! exact arithmetic, combinatorics of cores and quotients, parameter transport,
//! wreath-product characters and cyclic quiver representations.

pub mod affine_weyl;
pub mod arith;
pub mod error;
pub mod fixed_points;
pub mod linalg;
pub mod parameters;
pub mod partitions;
pub mod quiver;
pub mod wreath;

pub use arith::{Cyclotomic, Rational};
pub use error::{Error, Result};
