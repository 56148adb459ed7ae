//! Text interchange format for algebras.
//!
//! ```text
//! dim 8 over Q(w)
//! # name: split Cayley
//! 0 0 -> 0:1
//! 2 5 -> 0:-1
//! polar 0 1 1
//! ```
//!
//! Products are listed row-major; `polar i j c` lines (with `i ≤ j`) give the
//! nonzero entries of the symmetric polar form. An algebra has a form iff at
//! least one `polar` line is present. Grading files use
//! [`write_grading`](crate::grading::write_grading).

use std::path::Path;

use crate::algebra::Algebra;
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::linalg::{Matrix, SparseVec};

pub use crate::grading::{parse_grading, write_grading};

pub fn write_algebra(a: &Algebra) -> String {
    let mut s = format!("dim {} over Q(w)\n", a.dim());
    if !a.name().is_empty() {
        s.push_str(&format!("# name: {}\n", a.name()));
    }
    for (i, j, v) in a.nonzero_products() {
        let terms: Vec<String> = v.iter().map(|(k, c)| format!("{}:{}", k, c)).collect();
        s.push_str(&format!("{} {} -> {}\n", i, j, terms.join(",")));
    }
    if let Some(p) = a.polar() {
        for i in 0..a.dim() {
            for j in i..a.dim() {
                if !p[(i, j)].is_zero() {
                    s.push_str(&format!("polar {} {} {}\n", i, j, p[(i, j)]));
                }
            }
        }
    }
    s
}

fn index(tok: &str, dim: usize, line: &str) -> Result<usize> {
    let i: usize = tok.parse().map_err(|_| ForgeError::Parse(format!("bad index '{}' in '{}'", tok, line)))?;
    if i >= dim {
        return Err(ForgeError::Parse(format!("index {} out of range in '{}'", i, line)));
    }
    Ok(i)
}

fn scalar(tok: &str, line: &str) -> Result<Scalar> {
    tok.parse().map_err(|_| ForgeError::Parse(format!("bad coefficient '{}' in '{}'", tok, line)))
}

pub fn parse_algebra(text: &str) -> Result<Algebra> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let head = lines.next().ok_or_else(|| ForgeError::Parse("empty algebra file".into()))?;
    let dim = head
        .strip_prefix("dim ")
        .and_then(|r| r.strip_suffix(" over Q(w)"))
        .and_then(|n| n.trim().parse::<usize>().ok())
        .ok_or_else(|| ForgeError::Parse(format!("bad header '{}'", head)))?;
    let mut a = Algebra::new(dim, "");
    let mut seen = vec![false; dim * dim];
    let mut polar: Option<Matrix> = None;
    for l in lines {
        if let Some(c) = l.strip_prefix('#') {
            if let Some(name) = c.trim().strip_prefix("name:") {
                a.set_name(name.trim());
            }
            continue;
        }
        if let Some(rest) = l.strip_prefix("polar ") {
            let toks: Vec<&str> = rest.split_whitespace().collect();
            let [i, j, c] = toks[..] else {
                return Err(ForgeError::Parse(format!("bad polar line '{}'", l)));
            };
            let (i, j, c) = (index(i, dim, l)?, index(j, dim, l)?, scalar(c, l)?);
            if i > j || c.is_zero() {
                return Err(ForgeError::Parse(format!("polar line '{}' is not canonical", l)));
            }
            let p = polar.get_or_insert_with(|| Matrix::zero(dim, dim));
            p[(i, j)] = c.clone();
            p[(j, i)] = c;
            continue;
        }
        let (lhs, rhs) = l.split_once("->").ok_or_else(|| ForgeError::Parse(format!("bad line '{}'", l)))?;
        let idx: Vec<&str> = lhs.split_whitespace().collect();
        let [i, j] = idx[..] else {
            return Err(ForgeError::Parse(format!("bad product line '{}'", l)));
        };
        let (i, j) = (index(i, dim, l)?, index(j, dim, l)?);
        if std::mem::replace(&mut seen[i * dim + j], true) {
            return Err(ForgeError::Parse(format!("product {} {} given twice", i, j)));
        }
        let mut pairs = Vec::new();
        for term in rhs.trim().split(',') {
            let (k, c) = term.split_once(':').ok_or_else(|| ForgeError::Parse(format!("bad term '{}' in '{}'", term, l)))?;
            pairs.push((index(k.trim(), dim, l)? as u32, scalar(c.trim(), l)?));
        }
        a.set_product(i, j, SparseVec::from_pairs(pairs));
    }
    if let Some(p) = polar {
        a.set_polar(p);
    }
    Ok(a)
}

pub fn read_algebra(path: &Path) -> Result<Algebra> {
    parse_algebra(&std::fs::read_to_string(path)?)
}

pub fn save_algebra(a: &Algebra, path: &Path) -> Result<()> {
    Ok(std::fs::write(path, write_algebra(a))?)
}
