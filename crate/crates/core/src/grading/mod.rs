mod catalog;
mod group;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::algebra::Algebra;
use crate::error::{ForgeError, Result};
use crate::linalg::IntMatrix;
use crate::report::Report;

pub use catalog::{cayley_grading, okubo_grading, quaternion_grading, CayleyGrading, OkuboGrading, QuaternionGrading};
pub use group::{AbelianGroup, GroupElement, GroupHom};

/// A grading given by a degree for each basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    pub algebra: Arc<Algebra>,
    pub group: AbelianGroup,
    pub degrees: Vec<GroupElement>,
}

impl Grading {
    pub fn new(algebra: Arc<Algebra>, group: AbelianGroup, degrees: Vec<GroupElement>) -> Result<Self> {
        if degrees.len() != algebra.dim() {
            return Err(ForgeError::BadDimensions(format!(
                "{} degrees for an algebra of dimension {}",
                degrees.len(),
                algebra.dim()
            )));
        }
        if let Some(g) = degrees.iter().find(|g| !group.contains(g)) {
            return Err(ForgeError::BadParams(format!("degree {} is not an element of {}", g, group)));
        }
        Ok(Grading { algebra, group, degrees })
    }

    /// Degrees from raw coordinate vectors.
    pub fn from_coords(algebra: Arc<Algebra>, group: AbelianGroup, coords: &[Vec<i64>]) -> Result<Self> {
        let degrees = coords.iter().map(|c| group.element(c)).collect::<Result<Vec<_>>>()?;
        Grading::new(algebra, group, degrees)
    }

    /// Basis indices of each nonzero homogeneous component.
    pub fn components(&self) -> BTreeMap<GroupElement, Vec<usize>> {
        let mut out: BTreeMap<GroupElement, Vec<usize>> = BTreeMap::new();
        for (i, g) in self.degrees.iter().enumerate() {
            out.entry(g.clone()).or_default().push(i);
        }
        out
    }

    pub fn support(&self) -> Vec<GroupElement> {
        self.components().into_keys().collect()
    }

    pub fn component_dim(&self, g: &GroupElement) -> usize {
        self.degrees.iter().filter(|d| *d == g).count()
    }
}

/// Products land in the sum of degrees; the polar form pairs only opposite degrees.
pub fn verify_grading(gr: &Grading) -> Report {
    let a = &gr.algebra;
    let g = &gr.group;
    let mut checked = 0u64;
    for (i, j, p) in a.nonzero_products() {
        let want = g.add(&gr.degrees[i], &gr.degrees[j]);
        checked += 1;
        if let Some((k, _)) = p.iter().find(|(k, _)| gr.degrees[*k] != want) {
            return Report::fail("grading", vec![i, j, k], format!(
                "e{}e{} has a component on e{} of degree {}, expected {}",
                i, j, k, gr.degrees[k], want
            ));
        }
    }
    if let Some(p) = a.polar() {
        for i in 0..a.dim() {
            for j in i..a.dim() {
                if !p[(i, j)].is_zero() && !g.add(&gr.degrees[i], &gr.degrees[j]).is_zero() {
                    return Report::fail("grading", vec![i, j], "polar form pairs degrees not summing to 0");
                }
            }
        }
    }
    Report::pass("grading")
        .with("group", g.to_string())
        .with("components", gr.components().len())
        .with("products", checked)
        .with("generates", g.generated_by(&gr.support()))
}

fn require_verified(gr: &Grading) -> Result<()> {
    if verify_grading(gr).passed {
        Ok(())
    } else {
        Err(ForgeError::Unverified)
    }
}

/// `h_i` = number of components of dimension `i`, up to the largest dimension.
pub fn grading_type(gr: &Grading) -> Result<Vec<usize>> {
    require_verified(gr)?;
    Ok(type_of_dims(gr.components().values().map(|v| v.len())))
}

pub(crate) fn type_of_dims(dims: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut h = Vec::new();
    for d in dims.filter(|&d| d > 0) {
        if h.len() < d {
            h.resize(d, 0);
        }
        h[d - 1] += 1;
    }
    h
}

pub fn format_type(t: &[usize]) -> String {
    format!("({})", t.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

/// The universal group and the regrading through it.
#[derive(Clone, Debug)]
pub struct UniversalGrading {
    pub group: AbelianGroup,
    /// Original support label ↦ its class in the universal group.
    pub map: BTreeMap<GroupElement, GroupElement>,
    pub grading: Grading,
}

/// Free abelian group on the support modulo a + b − c for every nonzero product of components.
pub fn universal_group(gr: &Grading) -> Result<UniversalGrading> {
    require_verified(gr)?;
    let labels = gr.support();
    let index: BTreeMap<&GroupElement, usize> = labels.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let m = labels.len();
    let mut rels: std::collections::BTreeSet<Vec<i64>> = Default::default();
    for (i, j, p) in gr.algebra.nonzero_products() {
        let (a, b) = (index[&gr.degrees[i]], index[&gr.degrees[j]]);
        let c = index[&gr.degrees[p.first().expect("nonzero").0]];
        let mut r = vec![0i64; m];
        r[a] += 1;
        r[b] += 1;
        r[c] -= 1;
        rels.insert(r);
    }
    let rows: Vec<Vec<i64>> = rels.into_iter().collect();
    let (diag, right) = if rows.is_empty() {
        (Vec::new(), IntMatrix::identity(m))
    } else {
        let s = IntMatrix::from_rows(&rows).smith();
        (s.diag, s.right)
    };
    // coordinate k of the cokernel: Z/d_k, or Z past the rank
    let d_at = |k: usize| diag.get(k).cloned().unwrap_or_else(BigInt::zero);
    let mut torsion_cols = Vec::new();
    let mut free_cols = Vec::new();
    for k in 0..m {
        let d = d_at(k);
        if d.is_zero() {
            free_cols.push(k);
        } else if d > BigInt::from(1) {
            torsion_cols.push((k, d.to_i64().expect("small modulus")));
        }
    }
    let group = AbelianGroup::new(free_cols.len(), torsion_cols.iter().map(|t| t.1).collect())?;
    let mut map = BTreeMap::new();
    for (i, l) in labels.iter().enumerate() {
        let mut coords: Vec<i64> = free_cols.iter().map(|&k| right.get(i, k).to_i64().expect("small")).collect();
        coords.extend(torsion_cols.iter().map(|&(k, _)| right.get(i, k).to_i64().expect("small")));
        map.insert(l.clone(), group.element(&coords)?);
    }
    let degrees = gr.degrees.iter().map(|d| map[d].clone()).collect();
    let grading = Grading::new(gr.algebra.clone(), group.clone(), degrees)?;
    Ok(UniversalGrading { group, map, grading })
}

/// Push degrees through a group homomorphism.
pub fn coarsen(gr: &Grading, hom: &GroupHom) -> Result<Grading> {
    if hom.source != gr.group {
        return Err(ForgeError::IllDefinedHom);
    }
    let degrees = gr.degrees.iter().map(|d| hom.apply(d)).collect();
    Grading::new(gr.algebra.clone(), hom.target.clone(), degrees)
}

/// `group free=r torsion=m1,m2` then one `deg i = [..]` line per basis vector.
pub fn write_grading(gr: &Grading) -> String {
    let t: Vec<String> = gr.group.torsion.iter().map(|m| m.to_string()).collect();
    let mut s = format!("group free={} torsion={}\n", gr.group.free_rank, t.join(","));
    for (i, d) in gr.degrees.iter().enumerate() {
        s.push_str(&format!("deg {} = {}\n", i, d));
    }
    s
}

pub fn parse_grading(text: &str, algebra: Arc<Algebra>) -> Result<Grading> {
    let bad = |l: &str| ForgeError::Parse(format!("bad grading line '{}'", l));
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
    let head = lines.next().ok_or_else(|| ForgeError::Parse("empty grading file".into()))?;
    let mut free = None;
    let mut torsion = Vec::new();
    let mut words = head.split_whitespace();
    if words.next() != Some("group") {
        return Err(bad(head));
    }
    for w in words {
        match w.split_once('=') {
            Some(("free", v)) => free = Some(v.parse::<usize>().map_err(|_| bad(head))?),
            Some(("torsion", "")) => {}
            Some(("torsion", v)) => {
                torsion = v.split(',').map(|m| m.trim().parse::<i64>()).collect::<std::result::Result<_, _>>().map_err(|_| bad(head))?
            }
            _ => return Err(bad(head)),
        }
    }
    let group = AbelianGroup::new(free.unwrap_or(0), torsion)?;
    let mut degrees: Vec<Option<GroupElement>> = vec![None; algebra.dim()];
    for l in lines {
        let rest = l.strip_prefix("deg").ok_or_else(|| bad(l))?;
        let (i, v) = rest.split_once('=').ok_or_else(|| bad(l))?;
        let i: usize = i.trim().parse().map_err(|_| bad(l))?;
        let v = v.trim().strip_prefix('[').and_then(|v| v.strip_suffix(']')).ok_or_else(|| bad(l))?;
        let coords: Vec<i64> = if v.trim().is_empty() {
            Vec::new()
        } else {
            v.split(',').map(|x| x.trim().parse::<i64>()).collect::<std::result::Result<_, _>>().map_err(|_| bad(l))?
        };
        let slot = degrees.get_mut(i).ok_or_else(|| ForgeError::Parse(format!("basis index {} out of range", i)))?;
        if slot.is_some() {
            return Err(ForgeError::Parse(format!("basis index {} assigned twice", i)));
        }
        *slot = Some(group.element(&coords)?);
    }
    let degrees = degrees
        .into_iter()
        .enumerate()
        .map(|(i, d)| d.ok_or_else(|| ForgeError::Parse(format!("basis index {} has no degree", i))))
        .collect::<Result<Vec<_>>>()?;
    Grading::new(algebra, group, degrees)
}
