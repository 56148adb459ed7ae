//! Exact scalars: rationals, the field Q(ω), and polynomials over it.

mod poly;
mod rational;
mod scalar;

pub use poly::Polynomial;
pub use rational::Rational;
pub use scalar::Scalar;
