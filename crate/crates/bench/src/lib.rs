//! Fixtures shared by the kernel benchmarks.

use forge_core::compose::{cd_tower, okubo, para_hurwitz};
use forge_core::linalg::{Matrix, SparseVec};
use forge_core::{Algebra, Scalar};

pub fn para_cayley() -> Algebra {
    para_hurwitz(&cd_tower(&[Scalar::int(1), Scalar::int(1), Scalar::int(1)]).unwrap()).unwrap()
}

pub fn okubo_11() -> Algebra {
    okubo(&Scalar::one(), &Scalar::one()).unwrap()
}

/// A deterministic `n x n` integer matrix of rank `n - 1`.
pub fn deficient(n: usize) -> Matrix {
    let mut rows: Vec<Vec<Scalar>> =
        (0..n - 1).map(|i| (0..n).map(|j| Scalar::int(((i * 7 + j * 3 + i * j) % 11) as i64 - 5)).collect()).collect();
    let last = (0..n).map(|j| &rows[0][j] + &rows[1][j]).collect();
    rows.push(last);
    Matrix::from_rows(rows)
}

pub fn basis(n: usize) -> Vec<SparseVec> {
    (0..n).map(SparseVec::unit).collect()
}
