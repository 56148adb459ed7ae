use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::Algebra;
use crate::compose::{cd_tower, mat2, okubo, okubo_from_quaternion, petersson_split, s2, split_cayley, TauKind, OKUBO_INDEX};
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::grading::{AbelianGroup, Grading};

/// Gradings of Cayley algebras, by universal group.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CayleyGrading {
    Z2,
    Z2Sq,
    Z2Cube,
    Z3,
    Z4,
    Z3Grading,
    Z5Grading,
    ZSq,
    ZxZ2,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuaternionGrading {
    Z2,
    Z2Sq,
    Z3Grading,
}

/// Gradings of symmetric composition algebras that are not para-Hurwitz.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OkuboGrading {
    Z2,
    Z2Sq,
    Z3,
    Z3Sq,
    Z4,
    Z5Grading,
    Z3Grading,
    ZSq,
    ZxZ2,
    /// The Z3-grading of a two-dimensional algebra spanned by x and x*x.
    Dim2Z3,
}

impl CayleyGrading {
    pub const ALL: [CayleyGrading; 9] = [
        CayleyGrading::Z2,
        CayleyGrading::Z2Sq,
        CayleyGrading::Z2Cube,
        CayleyGrading::Z3,
        CayleyGrading::Z4,
        CayleyGrading::Z3Grading,
        CayleyGrading::Z5Grading,
        CayleyGrading::ZSq,
        CayleyGrading::ZxZ2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CayleyGrading::Z2 => "z2",
            CayleyGrading::Z2Sq => "z2^2",
            CayleyGrading::Z2Cube => "z2^3",
            CayleyGrading::Z3 => "z3",
            CayleyGrading::Z4 => "z4",
            CayleyGrading::Z3Grading => "z-3",
            CayleyGrading::Z5Grading => "z-5",
            CayleyGrading::ZSq => "z^2",
            CayleyGrading::ZxZ2 => "zxz2",
        }
    }
}

impl QuaternionGrading {
    pub const ALL: [QuaternionGrading; 3] = [QuaternionGrading::Z2, QuaternionGrading::Z2Sq, QuaternionGrading::Z3Grading];

    pub fn name(self) -> &'static str {
        match self {
            QuaternionGrading::Z2 => "z2",
            QuaternionGrading::Z2Sq => "z2^2",
            QuaternionGrading::Z3Grading => "z-3",
        }
    }
}

impl OkuboGrading {
    pub const ALL: [OkuboGrading; 10] = [
        OkuboGrading::Z2,
        OkuboGrading::Z2Sq,
        OkuboGrading::Z3,
        OkuboGrading::Z3Sq,
        OkuboGrading::Z4,
        OkuboGrading::Z5Grading,
        OkuboGrading::Z3Grading,
        OkuboGrading::ZSq,
        OkuboGrading::ZxZ2,
        OkuboGrading::Dim2Z3,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OkuboGrading::Z2 => "z2",
            OkuboGrading::Z2Sq => "z2^2",
            OkuboGrading::Z3 => "z3",
            OkuboGrading::Z3Sq => "z3^2",
            OkuboGrading::Z4 => "z4",
            OkuboGrading::Z5Grading => "z-5",
            OkuboGrading::Z3Grading => "z-3",
            OkuboGrading::ZSq => "z^2",
            OkuboGrading::ZxZ2 => "zxz2",
            OkuboGrading::Dim2Z3 => "dim2-z3",
        }
    }
}

macro_rules! from_str_by_name {
    ($t:ty) => {
        impl FromStr for $t {
            type Err = ForgeError;
            fn from_str(s: &str) -> Result<Self> {
                <$t>::ALL
                    .iter()
                    .copied()
                    .find(|k| k.name() == s)
                    .ok_or_else(|| ForgeError::Parse(format!("unknown grading kind '{}'", s)))
            }
        }
    };
}

from_str_by_name!(CayleyGrading);
from_str_by_name!(QuaternionGrading);
from_str_by_name!(OkuboGrading);

/// `count` nonzero parameters, all 1 when none are given.
fn params(p: &[Scalar], count: usize) -> Result<Vec<Scalar>> {
    if p.is_empty() {
        return Ok(vec![Scalar::one(); count]);
    }
    if p.len() != count {
        return Err(ForgeError::BadParams(format!("expected {} parameters, got {}", count, p.len())));
    }
    if p.iter().any(Scalar::is_zero) {
        return Err(ForgeError::BadParams("parameters must be nonzero".into()));
    }
    Ok(p.to_vec())
}

fn graded(a: Algebra, group: AbelianGroup, coords: Vec<Vec<i64>>) -> Result<Grading> {
    Grading::from_coords(Arc::new(a), group, &coords)
}

/// Degrees read off the bits of the basis index of a Cayley–Dickson tower.
fn bits(dim: usize, which: &[usize]) -> Vec<Vec<i64>> {
    (0..dim).map(|i| which.iter().map(|b| ((i >> b) & 1) as i64).collect()).collect()
}

fn z2s(n: usize) -> AbelianGroup {
    AbelianGroup::cyclic_product(&vec![2; n])
}

// split Cayley order: e1, e2, u1, u2, u3, v1, v2, v3
fn split_z3() -> Vec<Vec<i64>> {
    [0, 0, 1, 1, 1, 2, 2, 2].iter().map(|&d| vec![d]).collect()
}

fn split_z4() -> Vec<Vec<i64>> {
    [0, 0, 1, 1, 2, 3, 3, 2].iter().map(|&d| vec![d]).collect()
}

fn split_three_grading() -> Vec<Vec<i64>> {
    [0, 0, 1, -1, 0, -1, 1, 0].iter().map(|&d| vec![d]).collect()
}

fn split_five_grading() -> Vec<Vec<i64>> {
    [0, 0, 1, 1, -2, -1, -1, 2].iter().map(|&d| vec![d]).collect()
}

fn split_z_sq() -> Vec<Vec<i64>> {
    vec![vec![0, 0], vec![0, 0], vec![1, 0], vec![0, 1], vec![-1, -1], vec![-1, 0], vec![0, -1], vec![1, 1]]
}

fn split_z_x_z2() -> Vec<Vec<i64>> {
    vec![vec![0, 0], vec![0, 0], vec![1, 0], vec![-1, 1], vec![0, 1], vec![-1, 0], vec![1, 1], vec![0, 1]]
}

/// A graded Cayley algebra. The 2-elementary kinds live on `CD(k, λ1, λ2, λ3)`
/// (default λ = 1); the rest on the split Cayley algebra.
pub fn cayley_grading(kind: CayleyGrading, p: &[Scalar]) -> Result<Grading> {
    use CayleyGrading::*;
    match kind {
        Z2 | Z2Sq | Z2Cube => {
            let c = cd_tower(&params(p, 3)?)?;
            match kind {
                Z2 => graded(c, z2s(1), bits(8, &[2])),
                Z2Sq => graded(c, z2s(2), bits(8, &[1, 2])),
                _ => graded(c, z2s(3), bits(8, &[0, 1, 2])),
            }
        }
        _ => {
            params(p, 0)?;
            let c = split_cayley();
            match kind {
                Z3 => graded(c, AbelianGroup::cyclic_product(&[3]), split_z3()),
                Z4 => graded(c, AbelianGroup::cyclic_product(&[4]), split_z4()),
                Z3Grading => graded(c, AbelianGroup::free(1), split_three_grading()),
                Z5Grading => graded(c, AbelianGroup::free(1), split_five_grading()),
                ZSq => graded(c, AbelianGroup::free(2), split_z_sq()),
                _ => graded(c, AbelianGroup::new(1, vec![2])?, split_z_x_z2()),
            }
        }
    }
}

/// A graded quaternion algebra: `CD(k, λ1, λ2)` for the 2-elementary kinds, Mat₂(k) otherwise.
pub fn quaternion_grading(kind: QuaternionGrading, p: &[Scalar]) -> Result<Grading> {
    match kind {
        QuaternionGrading::Z2 => graded(cd_tower(&params(p, 2)?)?, z2s(1), bits(4, &[1])),
        QuaternionGrading::Z2Sq => graded(cd_tower(&params(p, 2)?)?, z2s(2), bits(4, &[0, 1])),
        QuaternionGrading::Z3Grading => {
            params(p, 0)?;
            graded(mat2(), AbelianGroup::free(1), vec![vec![0], vec![1], vec![-1], vec![0]])
        }
    }
}

/// A graded symmetric composition algebra.
///
/// Parameters: (β, α) of the quaternion construction for `Z2`/`Z2Sq`; (α, β) of O_{α,β}
/// for `Z3`/`Z3Sq`; ξ for `Dim2Z3`; none for the pseudo-octonion kinds.
pub fn okubo_grading(kind: OkuboGrading, p: &[Scalar]) -> Result<Grading> {
    use OkuboGrading::*;
    match kind {
        Z2 | Z2Sq => {
            let q = params(p, 2)?;
            let s = okubo_from_quaternion(&q[0], &q[1])?;
            if kind == Z2 {
                graded(s, z2s(1), bits(8, &[2]))
            } else {
                graded(s, z2s(2), bits(8, &[1, 2]))
            }
        }
        Z3 | Z3Sq => {
            let q = params(p, 2)?;
            let s = okubo(&q[0], &q[1])?;
            if kind == Z3 {
                let c = OKUBO_INDEX.iter().map(|&(_, j)| vec![j]).collect();
                graded(s, AbelianGroup::cyclic_product(&[3]), c)
            } else {
                let c = OKUBO_INDEX.iter().map(|&(i, j)| vec![i, j]).collect();
                graded(s, AbelianGroup::cyclic_product(&[3, 3]), c)
            }
        }
        Dim2Z3 => {
            let q = params(p, 1)?;
            graded(s2(&q[0])?, AbelianGroup::cyclic_product(&[3]), vec![vec![1], vec![2]])
        }
        Z4 | Z5Grading => {
            params(p, 0)?;
            let s = petersson_split(TauKind::NonStandard);
            if kind == Z4 {
                graded(s, AbelianGroup::cyclic_product(&[4]), split_z4())
            } else {
                graded(s, AbelianGroup::free(1), split_five_grading())
            }
        }
        _ => {
            params(p, 0)?;
            let s = petersson_split(TauKind::Omega);
            match kind {
                Z3Grading => graded(s, AbelianGroup::free(1), split_three_grading()),
                ZSq => graded(s, AbelianGroup::free(2), split_z_sq()),
                _ => graded(s, AbelianGroup::new(1, vec![2])?, split_z_x_z2()),
            }
        }
    }
}
