//! Named end-to-end checks, one per reproducible claim.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{verify_composition, verify_jordan, verify_lie, verify_symmetric, Algebra};
use crate::compose::*;
use crate::error::{ForgeError, Result};
use crate::exact::Scalar;
use crate::grading::*;
use crate::io::{parse_algebra, parse_grading, write_algebra, write_grading};
use crate::linalg::SparseVec;
use crate::magic::*;
use crate::report::{Claim, Outcome, Report, ScenarioReport};

/// Seed used for every sampled check unless overridden.
pub const DEFAULT_SEED: u64 = 20_080_915;

#[derive(Clone, Copy, Debug)]
pub struct ScenarioOptions {
    /// Exhaustive scans where the default samples.
    pub full: bool,
    pub seed: u64,
}

impl Default for ScenarioOptions {
    fn default() -> Self {
        ScenarioOptions { full: false, seed: DEFAULT_SEED }
    }
}

type Runner = fn(&mut Claims, &ScenarioOptions) -> Result<()>;

/// `(name, description, runner)` for every built-in scenario.
const CATALOG: &[(&str, &str, Runner)] = &[
    ("table-fidelity", "split Cayley and Okubo multiplication tables against golden data", table_fidelity),
    ("identity-suites", "composition and symmetric composition identities, with negative controls", identity_suites),
    ("okubo-symmetric", "the Okubo family satisfies the symmetric composition identities", okubo_symmetric),
    ("grading-catalog", "catalog gradings verify and have the declared universal group", grading_catalog),
    ("okubo-recognition", "pair completion, recognition and the x*y / y*x dichotomy", okubo_recognition),
    ("triality", "local triality for para-Cayley and O(1,1)", triality),
    ("magic-dimensions", "dimensions and Jacobi identity of the magic-square algebras", magic_dimensions),
    ("jordan-layer", "the Albert algebra, D_i(a) and the isomorphism onto Der A(S)", jordan_layer),
    ("grading-types", "type tuples of the induced gradings", grading_types),
    ("toral-operator", "minimal polynomial and kernel of the toral operator", toral_operator_scenario),
    ("f4-jordan-grading", "Z3^3 Jordan grading of F4", f4_jordan),
    ("e6-jordan-grading", "Z3^3 Jordan grading of E6", e6_jordan),
    ("e8-dempwolff", "Z2^5 Jordan grading of E8 into 31 Cartan subalgebras", e8_dempwolff),
    ("round-trip", "interchange files re-ingest to byte-identical re-emissions", round_trip),
];

/// Names and one-line descriptions of the built-in scenarios.
pub fn scenario_names() -> Vec<(&'static str, &'static str)> {
    CATALOG.iter().map(|(n, d, _)| (*n, *d)).collect()
}

pub fn run_scenario(name: &str, opts: &ScenarioOptions) -> Result<ScenarioReport> {
    let (_, _, run) = CATALOG.iter().find(|(n, _, _)| *n == name).ok_or_else(|| ForgeError::UnknownScenario(name.into()))?;
    let start = Instant::now();
    let mut claims = Claims::default();
    run(&mut claims, opts)?;
    Ok(ScenarioReport {
        scenario: name.to_string(),
        seed: opts.seed,
        full: opts.full,
        claims: claims.0,
        wall_ms: start.elapsed().as_millis(),
    })
}

#[derive(Default)]
struct Claims(Vec<Claim>);

impl Claims {
    /// A claim comparing a computed value with the expected one.
    fn eq(&mut self, id: &str, expected: Value, computed: Value) {
        let ok = expected == computed;
        self.push(id, ok, expected, computed, None, "");
    }

    /// A claim decided by a verifier report.
    fn report(&mut self, id: &str, r: &Report) {
        let computed = if r.values.is_empty() { json!(r.passed) } else { json!(r.values) };
        self.push(id, r.passed, json!(true), computed, r.witness.clone(), &r.note);
    }

    /// A claim that a verifier must reject its input.
    fn rejects(&mut self, id: &str, r: &Report) {
        self.push(id, !r.passed, json!(false), json!(r.passed), None, "negative control");
    }

    fn push(&mut self, id: &str, ok: bool, expected: Value, computed: Value, witness: Option<Vec<usize>>, note: &str) {
        let witness = if ok { witness } else { Some(witness.unwrap_or_default()) };
        self.0.push(Claim {
            id: id.to_string(),
            outcome: if ok { Outcome::Pass } else { Outcome::Fail },
            expected,
            computed,
            witness,
            note: note.to_string(),
        });
    }

    fn note(&mut self, note: &str) {
        if let Some(c) = self.0.last_mut() {
            c.note = note.to_string();
        }
    }
}

fn int(n: i64) -> Scalar {
    Scalar::int(n)
}

pub(crate) fn para_cayley() -> Result<Algebra> {
    let mut a = para_hurwitz(&cd_tower(&[int(1), int(1), int(1)])?)?;
    a.set_name("para-cayley");
    Ok(a)
}

/// Para-Cayley with the Z2³-grading by Cayley–Dickson index bits.
pub(crate) fn graded_para_cayley() -> Result<Grading> {
    let c = cayley_grading(CayleyGrading::Z2Cube, &[])?;
    Grading::new(Arc::new(para_cayley()?), c.group, c.degrees)
}

// ---------------------------------------------------------------- tables

/// Rows e1..v3 by columns e1..v3.
const SPLIT_GOLDEN: [&str; 8] = [
    "e1 0 u1 u2 u3 0 0 0",
    "0 e2 0 0 0 v1 v2 v3",
    "0 u1 0 v3 -v2 -e1 0 0",
    "0 u2 -v3 0 v1 0 -e1 0",
    "0 u3 v2 -v1 0 0 0 -e1",
    "v1 0 -e2 0 0 0 u3 -u2",
    "v2 0 0 -e2 0 -u3 0 u1",
    "v3 0 0 0 -e2 u2 -u1 0",
];

/// Rows and columns in the order x10 x-10 x01 x0-1 x11 x-1-1 x-11 x1-1;
/// coefficients are monomials in a = α and b = β.
const OKUBO_GOLDEN: [&str; 8] = [
    "-a*x-10 0 0 x1-1 0 x0-1 0 a*x-1-1",
    "0 -1/a*x10 x-11 0 x01 0 1/a*x11 0",
    "x11 0 -b*x0-1 0 b*x1-1 0 0 x10",
    "0 x-1-1 0 -1/b*x01 0 1/b*x-11 x-10 0",
    "a*x-11 0 0 x10 -ab*x-1-1 0 b*x0-1 0",
    "0 1/a*x1-1 x-10 0 0 -1/ab*x11 0 1/b*x01",
    "x01 0 b*x-1-1 0 0 1/a*x10 -b/a*x1-1 0",
    "0 x0-1 0 1/b*x11 a*x-10 0 0 -a/b*x-11",
];

fn monomial(m: &str, a: &Scalar, b: &Scalar) -> Result<Scalar> {
    let letters = |s: &str| -> Result<Scalar> {
        let mut x = Scalar::one();
        for ch in s.chars() {
            match ch {
                'a' => x = &x * a,
                'b' => x = &x * b,
                '1' => {}
                _ => return Err(ForgeError::Parse(format!("bad monomial '{}'", m))),
            }
        }
        Ok(x)
    };
    match m.split_once('/') {
        Some((p, q)) => letters(p)?.checked_div(&letters(q)?),
        None => letters(m),
    }
}

/// Expected products from golden rows, as `(row, col) -> coordinates`.
fn golden_table(rows: &[&str; 8], labels: &[&str], a: &Scalar, b: &Scalar) -> Result<Vec<SparseVec>> {
    let mut out = Vec::with_capacity(64);
    for row in rows {
        let entries: Vec<&str> = row.split_whitespace().collect();
        if entries.len() != 8 {
            return Err(ForgeError::Parse(format!("golden row '{}'", row)));
        }
        for e in entries {
            if e == "0" {
                out.push(SparseVec::new());
                continue;
            }
            let (neg, rest) = match e.strip_prefix('-') {
                Some(r) => (true, r),
                None => (false, e),
            };
            let (coef, label) = match rest.split_once('*') {
                Some((c, l)) => (monomial(c, a, b)?, l),
                None => (Scalar::one(), rest),
            };
            let coef = if neg { -&coef } else { coef };
            let k = labels.iter().position(|l| *l == label).ok_or_else(|| ForgeError::Parse(format!("label '{}'", label)))?;
            out.push(SparseVec::single(k, coef));
        }
    }
    Ok(out)
}

/// Number of matching entries and the first mismatch.
fn compare_table(alg: &Algebra, want: &[SparseVec]) -> (usize, Option<Vec<usize>>) {
    let mut ok = 0;
    let mut first = None;
    for i in 0..8 {
        for j in 0..8 {
            if alg.product(i, j) == &want[i * 8 + j] {
                ok += 1;
            } else if first.is_none() {
                first = Some(vec![i, j]);
            }
        }
    }
    (ok, first)
}

fn table_fidelity(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    let want = golden_table(&SPLIT_GOLDEN, &SPLIT_LABELS, &Scalar::one(), &Scalar::one())?;
    let (ok, w) = compare_table(&split_cayley(), &want);
    c.push("split-cayley products", ok == 64, json!(64), json!(ok), w, "");
    for (a, b) in [(int(1), int(1)), (int(2), int(3)), (Scalar::omega(), int(1))] {
        let want = golden_table(&OKUBO_GOLDEN, &OKUBO_LABELS, &a, &b)?;
        let (ok, w) = compare_table(&okubo(&a, &b)?, &want);
        c.push(&format!("okubo({}, {}) products", a, b), ok == 64, json!(64), json!(ok), w, "");
    }
    Ok(())
}

// ---------------------------------------------------------------- identities

fn identity_suites(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    let hurwitz = vec![
        field_k(),
        quadratic(&int(-1))?,
        cd_tower(&[int(1)])?,
        cd_tower(&[int(1), int(1)])?,
        cd_tower(&[int(1), int(1), int(1)])?,
        cd_tower(&[int(-1), int(2), int(-3)])?,
        cd_tower(&[Scalar::omega(), int(1), Scalar::frac(1, 2)])?,
        split_cayley(),
        mat2(),
    ];
    for h in &hurwitz {
        c.report(&format!("composition {}", h.name()), &verify_composition(h)?);
    }
    for h in &hurwitz {
        let p = para_hurwitz(h)?;
        c.report(&format!("symmetric para-hurwitz {}", h.name()), &verify_symmetric(&p)?);
    }
    for k in [TauKind::Standard, TauKind::NonStandard, TauKind::Omega] {
        let p = petersson_split(k);
        c.report(&format!("symmetric {}", p.name()), &verify_symmetric(&p)?);
    }
    okubo_symmetric(c, &ScenarioOptions::default())?;
    for h in hurwitz.iter().filter(|h| h.dim() >= 2) {
        c.rejects(&format!("unital {} is not symmetric", h.name()), &verify_symmetric(h)?);
    }
    Ok(())
}

fn okubo_symmetric(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    for (a, b) in [(int(1), int(1)), (int(2), int(3)), (Scalar::omega(), int(1)), (int(-5), Scalar::frac(2, 7))] {
        let o = okubo(&a, &b)?;
        c.report(&format!("symmetric {}", o.name()), &verify_symmetric(&o)?);
    }
    for (b, a) in [(int(1), int(1)), (int(2), int(-3))] {
        let o = okubo_from_quaternion(&b, &a)?;
        c.report(&format!("symmetric {}", o.name()), &verify_symmetric(&o)?);
    }
    Ok(())
}

// ---------------------------------------------------------------- gradings

fn catalog_claim(c: &mut Claims, id: String, g: &Grading) -> Result<()> {
    let r = verify_grading(g);
    c.report(&format!("{} verifies", id), &r);
    if r.passed {
        let u = universal_group(g)?;
        c.eq(&format!("{} universal group", id), json!(g.group.canonical().to_string()), json!(u.group.canonical().to_string()));
    }
    Ok(())
}

fn grading_catalog(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    for k in CayleyGrading::ALL {
        catalog_claim(c, format!("cayley {}", k.name()), &cayley_grading(k, &[])?)?;
    }
    for k in QuaternionGrading::ALL {
        catalog_claim(c, format!("quaternion {}", k.name()), &quaternion_grading(k, &[])?)?;
    }
    for k in OkuboGrading::ALL {
        catalog_claim(c, format!("okubo {}", k.name()), &okubo_grading(k, &[])?)?;
    }
    Ok(())
}

// ---------------------------------------------------------------- recognition

/// A random isotropic x in O_{1,1} with n(x, x*x) ≠ 0.
fn random_x(o: &Algebra, rng: &mut ChaCha8Rng) -> SparseVec {
    loop {
        let mut v: Vec<Scalar> = (0..8).map(|_| int(rng.random_range(-3..=3))).collect();
        if v[0].is_zero() {
            v[0] = int(1);
        }
        // n(x) = x0 x1 + x2 x3 + x4 x5 + x6 x7 on O_{1,1}
        let rest = &(&(&v[2] * &v[3]) + &(&v[4] * &v[5])) + &(&v[6] * &v[7]);
        v[1] = (-&rest).checked_div(&v[0]).expect("nonzero");
        let x = SparseVec::from_pairs(v.into_iter().enumerate().map(|(i, s)| (i as u32, s)).collect());
        debug_assert!(o.norm_vec(&x).is_zero());
        if !o.polar_vec(&x, &o.mul(&x, &x)).is_zero() {
            return x;
        }
    }
}

fn okubo_recognition(c: &mut Claims, opts: &ScenarioOptions) -> Result<()> {
    let p = petersson_split(TauKind::NonStandard);
    let o11 = okubo(&int(1), &int(1))?;
    let x = p.element(SparseVec::unit(canonical::E1));
    let y = complete_okubo_pair(&p, &x)?;
    let (a, b, iso) = okubo_recognize(&p, &x, &y)?;
    c.eq("nst petersson (alpha, beta)", json!(["1", "1"]), json!([a.to_string(), b.to_string()]));
    let ok = iso.first_failure(&p, &o11).is_none() && iso.is_invertible();
    c.push("nst petersson isomorphism onto O(1,1)", ok, json!(true), json!(ok), None, "");

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut pairs, mut exactly_one, mut recognized, mut tries) = (0usize, 0usize, 0usize, 0usize);
    let mut first_bad = None;
    while pairs < 100 && tries < 1000 {
        tries += 1;
        let x = o11.element(random_x(&o11, &mut rng));
        let y = match complete_okubo_pair(&o11, &x) {
            Ok(y) => y,
            Err(ForgeError::SearchExhausted) => continue,
            Err(e) => return Err(e),
        };
        // alternate the roles so both orders are exercised
        let (u, v) = if pairs % 2 == 0 { (&x, &y) } else { (&y, &x) };
        pairs += 1;
        let uv = o11.mul(u.coords(), v.coords()).is_zero();
        let vu = o11.mul(v.coords(), u.coords()).is_zero();
        if uv != vu {
            exactly_one += 1;
        } else if first_bad.is_none() {
            first_bad = Some(vec![pairs - 1]);
        }
        let (s, t) = if uv { (u, v) } else { (v, u) };
        if let Ok((a, b, iso)) = okubo_recognize(&o11, s, t) {
            if iso.first_failure(&o11, &okubo(&a, &b)?).is_none() && iso.is_invertible() {
                recognized += 1;
            }
        }
    }
    c.eq("sampled valid pairs", json!(100), json!(pairs));
    c.push("exactly one of x*y, y*x vanishes", exactly_one == pairs, json!(pairs), json!(exactly_one), first_bad, "");
    c.eq("sampled pairs recognized", json!(pairs), json!(recognized));
    Ok(())
}

// ---------------------------------------------------------------- magic

fn triality(c: &mut Claims, opts: &ScenarioOptions) -> Result<()> {
    for s in [para_cayley()?, okubo(&int(1), &int(1))?] {
        let tr = tri(&s)?;
        c.eq(&format!("dim tri({})", s.name()), json!(28), json!(tr.dim()));
        let r = verify_triality(&tr, 20, opts.seed)?;
        c.report(&format!("triality {}", s.name()), &r);
    }
    Ok(())
}

fn magic_dimensions(c: &mut Claims, opts: &ScenarioOptions) -> Result<()> {
    let s2_1 = s2(&int(1))?;
    let pc = para_cayley()?;
    let o = okubo(&int(1), &int(1))?;
    let cases = [
        ("g(k, para-cayley)", s1(), pc.clone(), 52),
        ("g(S2, O(1,1))", s2_1.clone(), o, 78),
        ("g(para-cayley, para-cayley)", pc.clone(), pc, 248),
        ("g(k, S2)", s1(), s2_1.clone(), 8),
        ("g(S2, S2)", s2_1.clone(), s2_1, 16),
    ];
    for (id, a, b, want) in cases {
        let g = magic_g(&a, &b)?;
        c.eq(&format!("dim {}", id), json!(want), json!(g.dim()));
        let r = verify_lie(&g.lie, g.jacobi_policy(opts.full, opts.seed));
        c.report(&format!("lie {}", id), &r);
        c.report(&format!("z2^2 grading {}", id), &verify_grading(&g.z2sq));
    }
    Ok(())
}

fn jordan_layer(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    for s in [para_cayley()?, okubo(&int(1), &int(1))?] {
        let j = albert(&s)?;
        c.eq(&format!("dim A({})", s.name()), json!(27), json!(j.jordan.dim()));
        c.report(&format!("jordan A({})", s.name()), &verify_jordan(&j.jordan));
        c.report(&format!("D_i rules A({})", s.name()), &verify_d_rules(&j)?);
        let phi = phi_iso(&s)?;
        c.report(&format!("phi onto Der A({})", s.name()), &phi.report);
        c.eq(&format!("dim Der A({})", s.name()), json!(52), json!(phi.derivations.len()));
    }
    Ok(())
}

fn grading_types(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    let pc = graded_para_cayley()?;
    let o = okubo_grading(OkuboGrading::Z3Sq, &[])?;
    let cases: Vec<(&str, Target, &Grading, Option<&Grading>, Vec<usize>)> = vec![
        ("o(para-cayley) from z2^3", Target::Orthogonal, &pc, None, vec![14, 7]),
        ("o(okubo) from z3^2", Target::Orthogonal, &o, None, vec![24, 2]),
        ("Der(para-cayley) from z2^3", Target::Derivations, &pc, None, vec![0, 7]),
        ("A(para-cayley) z2^5", Target::Albert, &pc, None, vec![24, 0, 1]),
        ("A(okubo) z3^3", Target::Albert, &o, None, vec![27]),
        ("F4 z2^5", Target::F4, &pc, None, vec![24, 0, 0, 7]),
        ("F4 z3^3", Target::F4, &o, None, vec![0, 26]),
        ("E8 z2^8", Target::E8, &pc, Some(&pc), vec![192, 0, 0, 14]),
        ("E8 z3^5", Target::E8, &o, Some(&o), vec![240, 0, 0, 2]),
    ];
    for (id, t, s, sp, want) in cases {
        let g = induced_grading(t, s, sp)?;
        let r = verify_grading(&g);
        c.report(&format!("{} verifies", id), &r);
        c.eq(&format!("{} type", id), json!(format_type(&want)), json!(format_type(&grading_type(&g)?)));
    }
    let tr = tri_graded(&pc)?;
    let zero_dim = tr.graded.as_ref().map_or(0, |(g, d)| d.iter().filter(|x| **x == g.zero()).count());
    c.eq("tri(para-cayley)_0 for z2^3", json!(0), json!(zero_dim));
    Ok(())
}

fn toral_operator_scenario(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    let one = Scalar::one();
    let r = verify_toral_operator(&one, &one, &one, &one, &one)?;
    let get = |k: &str| r.values.get(k).cloned().unwrap_or(Value::Null);
    c.eq("minimal polynomial on the image", json!("X^6 - 1"), get("minpoly_on_image"));
    c.note("(X^3 + 1)(X^3 - 1)");
    c.eq("minimal polynomial", json!("X^7 - X"), get("minpoly"));
    c.note("X(X^3 + 1)(X^3 - 1): the two kernel vectors add the factor X");
    c.eq("squarefree", json!(true), get("squarefree"));
    let same = get("kernel_dim") == get("subalgebra_dim") && r.passed;
    c.push("kernel = subalgebra generated by y*x", same, get("subalgebra_dim"), get("kernel_dim"), r.witness.clone(), "");
    Ok(())
}

fn jordan_claims(c: &mut Claims, id: &str, g: &Grading, kind: JordanKind, comps: usize, dim: usize) -> Result<()> {
    let r = jordan_grading_check(g, kind)?;
    c.report(&format!("{} Jordan grading", id), &r);
    c.eq(&format!("{} components", id), json!(comps), r.values.get("components").cloned().unwrap_or(Value::Null));
    c.eq(&format!("{} component dim", id), json!(dim), r.values.get("component_dim").cloned().unwrap_or(Value::Null));
    let zero = g.components().get(&g.group.zero()).map_or(0, Vec::len);
    c.eq(&format!("{} dim g_0", id), json!(0), json!(zero));
    Ok(())
}

fn f4_jordan(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    let g = induced_grading(Target::F4, &okubo_grading(OkuboGrading::Z3Sq, &[])?, None)?;
    jordan_claims(c, "F4 z3^3", &g, JordanKind::PlusMinus, 26, 2)
}

fn e6_jordan(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    let g = induced_grading(Target::E6, &okubo_grading(OkuboGrading::Z3Sq, &[])?, None)?;
    jordan_claims(c, "E6 z3^3", &g, JordanKind::PlusMinus, 26, 3)
}

fn e8_dempwolff(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    let pc = graded_para_cayley()?;
    let g = induced_grading(Target::Dempwolff, &pc, Some(&pc))?;
    jordan_claims(c, "E8 z2^5", &g, JordanKind::Dempwolff, 31, 8)
}

// ---------------------------------------------------------------- round trip

fn round_trip(c: &mut Claims, _: &ScenarioOptions) -> Result<()> {
    let pc = graded_para_cayley()?;
    let algebras = vec![
        split_cayley(),
        okubo(&int(1), &int(1))?,
        okubo(&int(2), &int(3))?,
        okubo(&Scalar::omega(), &int(1))?,
        okubo_from_quaternion(&Scalar::frac(-1, 2), &Scalar::omega2())?,
        petersson_split(TauKind::Omega),
        para_cayley()?,
        albert(&para_cayley()?)?.jordan.as_ref().clone(),
        magic_g(&s1(), &okubo(&int(1), &int(1))?)?.lie.as_ref().clone(),
        magic_g_graded(&pc, &pc)?.lie.as_ref().clone(),
    ];
    for a in &algebras {
        let text = write_algebra(a);
        let back = parse_algebra(&text)?;
        let same = back == *a && write_algebra(&back) == text;
        c.push(&format!("algebra {}", a.name()), same, json!(true), json!(same), None, "");
    }
    let mut gradings = vec![okubo_grading(OkuboGrading::Z3Sq, &[])?, cayley_grading(CayleyGrading::ZSq, &[])?];
    gradings.push(induced_grading(Target::Dempwolff, &pc, Some(&pc))?);
    for g in &gradings {
        let text = write_grading(g);
        let back = parse_grading(&text, g.algebra.clone())?;
        let same = back.group == g.group && back.degrees == g.degrees && write_grading(&back) == text;
        c.push(&format!("grading {} on {}", g.group, g.algebra.name()), same, json!(true), json!(same), None, "");
    }
    Ok(())
}
