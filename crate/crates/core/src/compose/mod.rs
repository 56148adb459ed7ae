//! Hurwitz and symmetric composition algebras, and Okubo recognition.

mod hurwitz;
mod recognize;
mod symmetric;

pub use hurwitz::{cd_double, cd_tower, conjugation, field_k, mat2, quadratic, split_cayley, unity, SPLIT_LABELS};
pub use recognize::{annihilator_space, complete_okubo_pair, okubo_recognize, AlgebraMorphism};
pub use symmetric::{
    is_automorphism, okubo, okubo_from_quaternion, para_hurwitz, petersson, petersson_split, s1, s2,
    tau_automorphism, TauKind, OKUBO_INDEX, OKUBO_LABELS,
};

/// Canonical split Cayley indices.
pub mod canonical {
    pub use super::hurwitz::{E1, E2, U, V};
}
