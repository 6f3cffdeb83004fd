//! Exact scalar arithmetic: arbitrary-precision rationals and cyclotomic fields Q(ζ_m).

mod cyclotomic;
mod rational;

pub use cyclotomic::{cyclotomic_mul, cyclotomic_polynomial, embed, totient, Cyclotomic};
pub use rational::Rational;
