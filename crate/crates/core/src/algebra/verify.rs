use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::Algebra;
use crate::error::Result;
use crate::exact::Scalar;
use crate::linalg::{DenseAcc, SparseVec};
use crate::report::Report;

/// Polar matrix applied to each product: `pp[i·n + j] = P · (e_i e_j)`.
/// The form is symmetric by the time this runs.
fn polar_products(s: &Algebra) -> Vec<SparseVec> {
    let p = s.polar().expect("polar form").to_sparse();
    let mut acc = DenseAcc::new(s.dim());
    (0..s.dim() * s.dim())
        .map(|k| p.apply_with(s.product(k / s.dim(), k % s.dim()), &mut acc))
        .collect()
}

fn form_checks(s: &Algebra) -> Option<Report> {
    let p = s.polar().expect("polar form");
    let n = s.dim();
    for i in 0..n {
        for j in 0..i {
            if p[(i, j)] != p[(j, i)] {
                return Some(Report::fail("form", vec![i, j], "polar form not symmetric"));
            }
        }
    }
    if p.rank() < n {
        return Some(Report::fail("form", vec![], "polar form degenerate").with("rank", p.rank()));
    }
    None
}

/// Linearized `n(xy) = n(x)n(y)` on all basis 4-tuples, plus nondegeneracy.
pub fn verify_composition(s: &Algebra) -> Result<Report> {
    let p = s.polar_or_err()?;
    if let Some(r) = form_checks(s) {
        return Ok(Report { check: "composition".into(), ..r });
    }
    let n = s.dim();
    let pp = polar_products(s);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let lhs = &pp[i * n + j].dot(s.product(k, l)) + &pp[i * n + l].dot(s.product(k, j));
                    let rhs = &p[(i, k)] * &p[(j, l)];
                    if lhs != rhs {
                        return Ok(Report::fail("composition", vec![i, j, k, l], "n(xy) = n(x)n(y) fails"));
                    }
                }
            }
        }
    }
    Ok(Report::pass("composition").with("dim", n))
}

/// Associativity of the form and both linearized forms of `(x*y)*x = n(x)y = x*(y*x)`.
pub fn verify_symmetric(s: &Algebra) -> Result<Report> {
    let p = s.polar_or_err()?;
    if let Some(r) = form_checks(s) {
        return Ok(Report { check: "symmetric".into(), ..r });
    }
    let n = s.dim();
    let pp = polar_products(s);
    // n(e_i*e_j, e_k) = n(e_i, e_j*e_k)
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = pp[i * n + j].get(k);
                let rhs: Scalar = {
                    let mut t = Scalar::zero();
                    for (c, x) in s.product(j, k).iter() {
                        t.add_mul(x, &p[(i, c)]);
                    }
                    t
                };
                if lhs != rhs {
                    return Ok(Report::fail("symmetric", vec![i, j, k], "form not associative"));
                }
            }
        }
    }
    let mut acc = DenseAcc::new(n);
    let one = Scalar::one();
    for i in 0..n {
        for j in 0..n {
            for k in i..n {
                let ei = SparseVec::unit(i);
                let ek = SparseVec::unit(k);
                let c = &p[(i, k)];
                // (e_i*e_j)*e_k + (e_k*e_j)*e_i − n(e_i,e_k) e_j
                let a = s.mul_with(s.product(i, j), &ek, &mut acc);
                let b = s.mul_with(s.product(k, j), &ei, &mut acc);
                acc.add_vec(&a, &one);
                acc.add_vec(&b, &one);
                acc.add(j, &-c);
                if acc.take_is_zero().is_some() {
                    return Ok(Report::fail("symmetric", vec![i, j, k], "(x*y)*x = n(x)y fails"));
                }
                let a = s.mul_with(&ei, s.product(j, k), &mut acc);
                let b = s.mul_with(&ek, s.product(j, i), &mut acc);
                acc.add_vec(&a, &one);
                acc.add_vec(&b, &one);
                acc.add(j, &-c);
                if acc.take_is_zero().is_some() {
                    return Ok(Report::fail("symmetric", vec![i, j, k], "x*(y*x) = n(x)y fails"));
                }
            }
        }
    }
    Ok(Report::pass("symmetric").with("dim", n))
}

/// Which Jacobi triples to scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JacobiPolicy {
    Full,
    /// Every triple meeting an index below `anchor`, plus `samples` random triples.
    Mixed { anchor: usize, samples: usize, seed: u64 },
}

impl JacobiPolicy {
    /// Full scan below dimension 200; above it, the mixed policy anchored at `anchor`.
    pub fn default_for(dim: usize, anchor: usize, seed: u64) -> Self {
        if dim < 200 {
            JacobiPolicy::Full
        } else {
            JacobiPolicy::Mixed { anchor, samples: 1_000_000, seed }
        }
    }
}

fn jacobi_at(l: &Algebra, i: usize, j: usize, k: usize, acc: &mut DenseAcc) -> bool {
    // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
    for (ab, c) in [((i, j), k), ((j, k), i), ((k, i), j)] {
        for (m, x) in l.product(ab.0, ab.1).iter() {
            acc.add_vec(l.product(m, c), x);
        }
    }
    acc.take_is_zero().is_none()
}

/// Alternating bracket and Jacobi identity.
pub fn verify_lie(l: &Algebra, policy: JacobiPolicy) -> Report {
    let n = l.dim();
    for i in 0..n {
        if !l.product(i, i).is_zero() {
            return Report::fail("lie", vec![i, i], "[x,x] != 0");
        }
        for j in i + 1..n {
            if *l.product(i, j) != l.product(j, i).neg() {
                return Report::fail("lie", vec![i, j], "not anticommutative");
            }
        }
    }
    let mut acc = DenseAcc::new(n);
    let mut checked: u64 = 0;
    let (anchor, samples, seed) = match policy {
        JacobiPolicy::Full => (n, 0, 0),
        JacobiPolicy::Mixed { anchor, samples, seed } => (anchor.min(n), samples, seed),
    };
    for i in 0..anchor {
        for j in i + 1..n {
            for k in j + 1..n {
                checked += 1;
                if !jacobi_at(l, i, j, k, &mut acc) {
                    return Report::fail("lie", vec![i, j, k], "Jacobi fails").with("triples", checked);
                }
            }
        }
    }
    let mut first_bad: Option<[usize; 3]> = None;
    if samples > 0 && n >= 3 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..samples {
            let mut t = [rng.random_range(0..n), rng.random_range(0..n), rng.random_range(0..n)];
            t.sort_unstable();
            if t[0] == t[1] || t[1] == t[2] {
                continue;
            }
            checked += 1;
            if !jacobi_at(l, t[0], t[1], t[2], &mut acc) && first_bad.is_none_or(|b| t < b) {
                first_bad = Some(t);
            }
        }
    }
    if let Some(t) = first_bad {
        return Report::fail("lie", t.to_vec(), "Jacobi fails on a sampled triple").with("triples", checked);
    }
    let mode = match policy {
        JacobiPolicy::Full => "full".to_string(),
        JacobiPolicy::Mixed { anchor, samples, seed } => {
            format!("mixed(anchor={}, samples={}, seed={})", anchor, samples, seed)
        }
    };
    Report::pass("lie").with("dim", n).with("triples", checked).with("mode", mode)
}

/// Commutativity and the fully linearized Jordan identity.
pub fn verify_jordan(j: &Algebra) -> Report {
    let n = j.dim();
    for a in 0..n {
        for b in a + 1..n {
            if j.product(a, b) != j.product(b, a) {
                return Report::fail("jordan", vec![a, b], "not commutative");
            }
        }
    }
    let mut acc = DenseAcc::new(n);
    let mut scratch = DenseAcc::new(n);
    let one = Scalar::one();
    let minus = Scalar::int(-1);
    for x1 in 0..n {
        for x2 in x1..n {
            for x3 in x2..n {
                let splits = [(x1, x2, x3), (x1, x3, x2), (x2, x3, x1)];
                for y in 0..n {
                    let ey = SparseVec::unit(y);
                    for &(a, b, c) in &splits {
                        let ab = j.product(a, b);
                        let ec = SparseVec::unit(c);
                        // ((a∘b)∘y)∘c − (a∘b)∘(y∘c)
                        let t = j.mul_with(ab, &ey, &mut scratch);
                        let lhs = j.mul_with(&t, &ec, &mut scratch);
                        let rhs = j.mul_with(ab, j.product(y, c), &mut scratch);
                        acc.add_vec(&lhs, &one);
                        acc.add_vec(&rhs, &minus);
                    }
                    if acc.take_is_zero().is_some() {
                        return Report::fail("jordan", vec![x1, x2, x3, y], "Jordan identity fails");
                    }
                }
            }
        }
    }
    Report::pass("jordan").with("dim", n)
}
