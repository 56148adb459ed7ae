use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{ForgeError, Result};
use crate::linalg::IntMatrix;

/// Z^free_rank × Z_{m1} × … × Z_{mk}.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbelianGroup {
    pub free_rank: usize,
    pub torsion: Vec<i64>,
}

/// Free coordinates, then residues in `0..m` for each torsion factor.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct GroupElement {
    pub free: Vec<i64>,
    pub torsion: Vec<i64>,
}

impl GroupElement {
    /// All coordinates, free part first.
    pub fn coords(&self) -> Vec<i64> {
        self.free.iter().chain(&self.torsion).copied().collect()
    }

    pub fn is_zero(&self) -> bool {
        self.free.iter().chain(&self.torsion).all(|&x| x == 0)
    }

    /// The pair `(self, other)` in the direct product of their groups.
    pub fn join(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            free: self.free.iter().chain(&other.free).copied().collect(),
            torsion: self.torsion.iter().chain(&other.torsion).copied().collect(),
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c: Vec<String> = self.coords().iter().map(|x| x.to_string()).collect();
        write!(f, "[{}]", c.join(","))
    }
}

impl AbelianGroup {
    pub fn new(free_rank: usize, torsion: Vec<i64>) -> Result<Self> {
        if let Some(m) = torsion.iter().find(|&&m| m < 2) {
            return Err(ForgeError::BadParams(format!("torsion modulus {} must be at least 2", m)));
        }
        Ok(AbelianGroup { free_rank, torsion })
    }

    pub fn trivial() -> Self {
        AbelianGroup { free_rank: 0, torsion: Vec::new() }
    }

    pub fn free(rank: usize) -> Self {
        AbelianGroup { free_rank: rank, torsion: Vec::new() }
    }

    /// Z_{m1} × … (as declared).
    pub fn cyclic_product(moduli: &[i64]) -> Self {
        AbelianGroup::new(0, moduli.to_vec()).expect("moduli at least 2")
    }

    /// Direct product, factors in order; pairs of elements are formed with [`GroupElement::join`].
    pub fn product(&self, other: &AbelianGroup) -> AbelianGroup {
        AbelianGroup {
            free_rank: self.free_rank + other.free_rank,
            torsion: self.torsion.iter().chain(&other.torsion).copied().collect(),
        }
    }

    /// Number of coordinates of an element.
    pub fn arity(&self) -> usize {
        self.free_rank + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arity() == 0
    }

    pub fn zero(&self) -> GroupElement {
        GroupElement { free: vec![0; self.free_rank], torsion: vec![0; self.torsion.len()] }
    }

    /// Element from raw coordinates, reducing torsion residues.
    pub fn element(&self, coords: &[i64]) -> Result<GroupElement> {
        if coords.len() != self.arity() {
            return Err(ForgeError::BadDimensions(format!(
                "group element needs {} coordinates, got {}",
                self.arity(),
                coords.len()
            )));
        }
        let (f, t) = coords.split_at(self.free_rank);
        Ok(GroupElement {
            free: f.to_vec(),
            torsion: t.iter().zip(&self.torsion).map(|(x, m)| x.rem_euclid(*m)).collect(),
        })
    }

    pub fn contains(&self, g: &GroupElement) -> bool {
        g.free.len() == self.free_rank
            && g.torsion.len() == self.torsion.len()
            && g.torsion.iter().zip(&self.torsion).all(|(x, m)| (0..*m).contains(x))
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        GroupElement {
            free: a.free.iter().zip(&b.free).map(|(x, y)| x + y).collect(),
            torsion: a.torsion.iter().zip(&b.torsion).zip(&self.torsion).map(|((x, y), m)| (x + y) % m).collect(),
        }
    }

    pub fn neg(&self, a: &GroupElement) -> GroupElement {
        GroupElement {
            free: a.free.iter().map(|x| -x).collect(),
            torsion: a.torsion.iter().zip(&self.torsion).map(|(x, m)| (m - x) % m).collect(),
        }
    }

    /// Canonical invariants: torsion via Smith form, each dividing the next, 1s dropped.
    pub fn canonical(&self) -> AbelianGroup {
        if self.torsion.is_empty() {
            return self.clone();
        }
        let n = self.torsion.len();
        let mut m = IntMatrix::zero(n, n);
        for (i, t) in self.torsion.iter().enumerate() {
            m.set(i, i, BigInt::from(*t));
        }
        let torsion = m
            .smith()
            .diag
            .into_iter()
            .filter(|d| !d.is_one())
            .map(|d| d.to_i64().expect("small modulus"))
            .collect();
        AbelianGroup { free_rank: self.free_rank, torsion }
    }

    pub fn is_isomorphic(&self, other: &AbelianGroup) -> bool {
        self.canonical() == other.canonical()
    }

    /// Whether the given elements generate the whole group.
    pub fn generated_by(&self, gens: &[GroupElement]) -> bool {
        let n = self.arity();
        if n == 0 {
            return true;
        }
        let mut rows: Vec<Vec<i64>> = gens.iter().map(|g| g.coords()).collect();
        for (i, m) in self.torsion.iter().enumerate() {
            let mut r = vec![0; n];
            r[self.free_rank + i] = *m;
            rows.push(r);
        }
        if rows.is_empty() {
            return false;
        }
        let d = IntMatrix::from_rows(&rows).smith().diag;
        d.len() >= n && d[..n].iter().all(|x| x.abs().is_one())
    }
}

impl fmt::Display for AbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{}", r)),
        }
        // group runs of equal moduli: Z2^3
        let mut i = 0;
        while i < self.torsion.len() {
            let m = self.torsion[i];
            let mut j = i;
            while j < self.torsion.len() && self.torsion[j] == m {
                j += 1;
            }
            parts.push(if j - i == 1 { format!("Z{}", m) } else { format!("Z{}^{}", m, j - i) });
            i = j;
        }
        write!(f, "{}", parts.join(" x "))
    }
}

/// A homomorphism given by the images of the standard generators (free, then torsion).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupHom {
    pub source: AbelianGroup,
    pub target: AbelianGroup,
    pub images: Vec<GroupElement>,
}

impl GroupHom {
    /// Checks that each torsion generator of order m maps to an element killed by m.
    pub fn new(source: AbelianGroup, target: AbelianGroup, images: Vec<Vec<i64>>) -> Result<Self> {
        if images.len() != source.arity() {
            return Err(ForgeError::IllDefinedHom);
        }
        let images = images
            .iter()
            .map(|c| target.element(c).map_err(|_| ForgeError::IllDefinedHom))
            .collect::<Result<Vec<_>>>()?;
        for (k, m) in source.torsion.iter().enumerate() {
            let img = &images[source.free_rank + k];
            let mut acc = target.zero();
            for _ in 0..*m {
                acc = target.add(&acc, img);
            }
            if !acc.is_zero() {
                return Err(ForgeError::IllDefinedHom);
            }
        }
        Ok(GroupHom { source, target, images })
    }

    pub fn identity(g: &AbelianGroup) -> Self {
        let images = (0..g.arity())
            .map(|i| {
                let mut c = vec![0; g.arity()];
                c[i] = 1;
                c
            })
            .collect();
        GroupHom::new(g.clone(), g.clone(), images).expect("identity is well defined")
    }

    pub fn apply(&self, g: &GroupElement) -> GroupElement {
        let mut acc = self.target.zero();
        for (c, img) in g.coords().iter().zip(&self.images) {
            let mut scaled = vec![0; self.target.arity()];
            for (s, x) in scaled.iter_mut().zip(img.coords()) {
                *s = c * x;
            }
            acc = self.target.add(&acc, &self.target.element(&scaled).expect("arity"));
        }
        acc
    }
}
