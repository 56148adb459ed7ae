use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use forge_core::algebra::{verify_composition, verify_jordan, verify_lie, verify_symmetric, Algebra, JacobiPolicy};
use forge_core::compose::*;
use forge_core::grading::*;
use forge_core::io::{parse_algebra, parse_grading, write_algebra, write_grading};
use forge_core::magic::*;
use forge_core::scenario::DEFAULT_SEED;
use forge_core::{run_scenario, scenario_names, ForgeError, Report, Scalar, ScenarioOptions};

#[derive(Parser)]
#[command(name = "forge", version, about = "Exact composition algebras, gradings and magic-square Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Exhaustive scans where the default samples.
    #[arg(long, global = true)]
    full: bool,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Emit a machine-readable JSON document instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Build a catalog algebra (or grading) in the interchange format.
    Build(BuildArgs),
    /// Check a grading file against an algebra file.
    Grade(GradeArgs),
    /// Build g(S,S′) and optionally an induced grading, then run checks.
    Magic(MagicArgs),
    /// Run an identity checker on an algebra file.
    Verify(VerifyArgs),
    /// Run a built-in scenario.
    Scenario { name: String },
    /// List scenarios, algebras and gradings.
    List,
}

#[derive(Args)]
struct BuildArgs {
    /// Algebra name, or cayley-grading / quaternion-grading / okubo-grading.
    name: String,
    #[arg(long, allow_hyphen_values = true)]
    alpha: Option<Scalar>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<Scalar>,
    /// Comma-separated Cayley–Dickson parameters.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    lambda: Vec<Scalar>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<Scalar>,
    #[arg(long, allow_hyphen_values = true)]
    xi: Option<Scalar>,
    /// st, nst or omega.
    #[arg(long)]
    tau: Option<TauKind>,
    /// Grading kind for the *-grading names.
    #[arg(long)]
    kind: Option<String>,
    /// Grading parameters for the *-grading names.
    #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
    params: Vec<Scalar>,
    /// For gradings: also write the underlying algebra here.
    #[arg(long)]
    algebra_out: Option<PathBuf>,
}

#[derive(Args)]
struct GradeArgs {
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long)]
    grading: PathBuf,
    /// Verify the grading.
    #[arg(long)]
    check: bool,
    /// Report the type tuple.
    #[arg(long = "type")]
    type_: bool,
    /// Compute the universal grading group.
    #[arg(long)]
    universal: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Identity {
    Composition,
    Symmetric,
    Lie,
    Jordan,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    algebra: PathBuf,
    #[arg(long, value_enum)]
    identity: Identity,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Grade {
    #[value(name = "z2_8")]
    Z2_8,
    #[value(name = "z3_5")]
    Z3_5,
    Dempwolff,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MagicCheck {
    Jacobi,
    Cartan,
    Jordan,
}

#[derive(Args)]
struct MagicArgs {
    /// k, s2[:xi], para-cayley[:l1,l2,l3], okubo[:a,b], okubo-quaternion[:b,a], petersson:st|nst|omega
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    #[arg(long, value_enum)]
    grade: Option<Grade>,
    #[arg(long, value_enum)]
    check: Vec<MagicCheck>,
    /// Also write the Lie algebra in the interchange format.
    #[arg(long)]
    emit: Option<PathBuf>,
}

/// Usage and IO problems exit with 2, failed claims with 1.
enum Failure {
    Usage(String),
}

impl From<ForgeError> for Failure {
    fn from(e: ForgeError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = std::result::Result<(String, bool), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((text, passed)) => {
            let text = if text.ends_with('\n') { text } else { text + "\n" };
            let written = match &cli.out {
                Some(p) => std::fs::write(p, &text),
                None => {
                    print!("{}", text);
                    Ok(())
                }
            };
            if let Err(e) = written {
                eprintln!("forge: {}", e);
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(Failure::Usage(m)) => {
            eprintln!("forge: {}", m);
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Out {
    match &cli.command {
        Command::Build(a) => build(a),
        Command::Grade(a) => grade(cli, a),
        Command::Magic(a) => magic(cli, a),
        Command::Verify(a) => verify(cli, a),
        Command::Scenario { name } => {
            let r = run_scenario(name, &ScenarioOptions { full: cli.full, seed: cli.seed })?;
            let text = if cli.json { serde_json::to_string_pretty(&r).expect("serializable") } else { r.to_string() };
            Ok((text, r.passed()))
        }
        Command::List => Ok((list(cli.json), true)),
    }
}

const ALGEBRAS: &[&str] = &[
    "split-cayley",
    "k",
    "quadratic --mu",
    "mat2",
    "cd --lambda",
    "para-hurwitz --lambda",
    "para-cayley",
    "petersson --tau",
    "okubo --alpha --beta",
    "okubo-quaternion --beta --alpha",
    "s1",
    "s2 --xi",
    "albert-para-cayley",
    "albert-okubo --alpha --beta",
];

fn list(as_json: bool) -> String {
    let gradings = json!({
        "cayley-grading": CayleyGrading::ALL.iter().map(|k| k.name()).collect::<Vec<_>>(),
        "quaternion-grading": QuaternionGrading::ALL.iter().map(|k| k.name()).collect::<Vec<_>>(),
        "okubo-grading": OkuboGrading::ALL.iter().map(|k| k.name()).collect::<Vec<_>>(),
    });
    if as_json {
        let doc = json!({
            "scenarios": scenario_names().iter().map(|(n, d)| json!({"name": n, "description": d})).collect::<Vec<_>>(),
            "algebras": ALGEBRAS,
            "gradings": gradings,
        });
        return serde_json::to_string_pretty(&doc).expect("serializable");
    }
    let mut s = String::from("scenarios:\n");
    for (n, d) in scenario_names() {
        s.push_str(&format!("  {:<20} {}\n", n, d));
    }
    s.push_str("algebras:\n");
    for a in ALGEBRAS {
        s.push_str(&format!("  {}\n", a));
    }
    s.push_str("gradings (forge build <family> --kind <kind>):\n");
    for (fam, kinds) in gradings.as_object().expect("object") {
        let kinds: Vec<&str> = kinds.as_array().expect("array").iter().filter_map(Value::as_str).collect();
        s.push_str(&format!("  {}: {}\n", fam, kinds.join(" ")));
    }
    s
}

fn one_or(x: &Option<Scalar>) -> Scalar {
    x.clone().unwrap_or_else(Scalar::one)
}

fn lambdas(a: &BuildArgs, default: usize) -> Vec<Scalar> {
    if a.lambda.is_empty() {
        vec![Scalar::one(); default]
    } else {
        a.lambda.clone()
    }
}

fn build_algebra(a: &BuildArgs) -> Result<Algebra, Failure> {
    let (alpha, beta) = (one_or(&a.alpha), one_or(&a.beta));
    Ok(match a.name.as_str() {
        "split-cayley" => split_cayley(),
        "k" => field_k(),
        "quadratic" => quadratic(&a.mu.clone().ok_or_else(|| usage("quadratic needs --mu"))?)?,
        "mat2" => mat2(),
        "cd" => cd_tower(&a.lambda)?,
        "para-hurwitz" => para_hurwitz(&cd_tower(&a.lambda)?)?,
        "para-cayley" => para_hurwitz(&cd_tower(&lambdas(a, 3))?)?,
        "petersson" => petersson_split(a.tau.ok_or_else(|| usage("petersson needs --tau st|nst|omega"))?),
        "okubo" => okubo(&alpha, &beta)?,
        "okubo-quaternion" => okubo_from_quaternion(&beta, &alpha)?,
        "s1" => s1(),
        "s2" => s2(&one_or(&a.xi))?,
        "albert-para-cayley" => albert(&para_hurwitz(&cd_tower(&lambdas(a, 3))?)?)?.jordan.as_ref().clone(),
        "albert-okubo" => albert(&okubo(&alpha, &beta)?)?.jordan.as_ref().clone(),
        other => return Err(usage(format!("unknown algebra '{}' (see forge list)", other))),
    })
}

fn build(a: &BuildArgs) -> Out {
    let kind = || a.kind.as_deref().ok_or_else(|| usage(format!("{} needs --kind", a.name)));
    let g = match a.name.as_str() {
        "cayley-grading" => Some(cayley_grading(kind()?.parse()?, &a.params)?),
        "quaternion-grading" => Some(quaternion_grading(kind()?.parse()?, &a.params)?),
        "okubo-grading" => Some(okubo_grading(kind()?.parse()?, &a.params)?),
        _ => None,
    };
    match g {
        Some(g) => {
            if let Some(p) = &a.algebra_out {
                std::fs::write(p, write_algebra(&g.algebra))?;
            }
            Ok((write_grading(&g), true))
        }
        None => Ok((write_algebra(&build_algebra(a)?), true)),
    }
}

fn read_algebra(p: &PathBuf) -> Result<Algebra, Failure> {
    let text = std::fs::read_to_string(p).map_err(|e| usage(format!("{}: {}", p.display(), e)))?;
    Ok(parse_algebra(&text)?)
}

/// Render reports plus extra values as text or JSON.
fn render(cli: &Cli, title: &str, values: Value, reports: &[Report]) -> (String, bool) {
    let passed = reports.iter().all(|r| r.passed);
    let text = if cli.json {
        serde_json::to_string_pretty(&json!({
            "command": title,
            "passed": passed,
            "values": values,
            "reports": reports,
            "seed": cli.seed,
            "full": cli.full,
        }))
        .expect("serializable")
    } else {
        let mut s = format!("{}\n", title);
        if let Some(m) = values.as_object() {
            for (k, v) in m {
                s.push_str(&format!("  {} = {}\n", k, v));
            }
        }
        for r in reports {
            s.push_str(&format!("{}\n", r));
        }
        s.push_str(if passed { "all checks passed" } else { "CHECKS FAILED" });
        s
    };
    (text, passed)
}

fn grade(cli: &Cli, a: &GradeArgs) -> Out {
    let alg = Arc::new(read_algebra(&a.algebra)?);
    let text = std::fs::read_to_string(&a.grading).map_err(|e| usage(format!("{}: {}", a.grading.display(), e)))?;
    let g = parse_grading(&text, alg)?;
    let mut values = serde_json::Map::new();
    values.insert("group".into(), json!(g.group.to_string()));
    let mut reports = Vec::new();
    let run_check = a.check || !(a.type_ || a.universal);
    if run_check {
        reports.push(verify_grading(&g));
    }
    if a.type_ {
        values.insert("type".into(), json!(format_type(&grading_type(&g)?)));
    }
    if a.universal {
        let u = universal_group(&g)?;
        values.insert("universal_group".into(), json!(u.group.canonical().to_string()));
        let same = u.group.canonical() == g.group.canonical();
        values.insert("universal_matches_declared".into(), json!(same));
    }
    Ok(render(cli, "grade", Value::Object(values), &reports))
}

fn verify(cli: &Cli, a: &VerifyArgs) -> Out {
    let alg = read_algebra(&a.algebra)?;
    let r = match a.identity {
        Identity::Composition => verify_composition(&alg)?,
        Identity::Symmetric => verify_symmetric(&alg)?,
        Identity::Jordan => verify_jordan(&alg),
        Identity::Lie => {
            let policy = if cli.full { JacobiPolicy::Full } else { JacobiPolicy::default_for(alg.dim(), 0, cli.seed) };
            verify_lie(&alg, policy)
        }
    };
    Ok(render(cli, "verify", json!({"algebra": alg.name(), "dim": alg.dim()}), &[r]))
}

fn scalars(s: &str) -> Result<Vec<Scalar>, Failure> {
    s.split(',').map(|x| x.trim().parse::<Scalar>().map_err(Failure::from)).collect()
}

/// A symmetric composition algebra from a `name[:params]` spec, with its
/// natural fine grading when it has one (Z2³ for para-Cayley, Z3² for Okubo).
fn spec_algebra(spec: &str) -> Result<(Algebra, Option<Grading>), Failure> {
    let (name, p) = match spec.split_once(':') {
        Some((n, p)) => (n, Some(p)),
        None => (spec, None),
    };
    let ps = p.map(scalars).transpose()?.unwrap_or_default();
    Ok(match name {
        "k" | "s1" => (s1(), None),
        "s2" => (s2(ps.first().unwrap_or(&Scalar::one()))?, None),
        "para-cayley" => {
            let c = cayley_grading(CayleyGrading::Z2Cube, &ps)?;
            let pc = para_hurwitz(&c.algebra)?;
            (pc.clone(), Some(Grading::new(Arc::new(pc), c.group, c.degrees)?))
        }
        "okubo" => {
            let g = okubo_grading(OkuboGrading::Z3Sq, &ps)?;
            (g.algebra.as_ref().clone(), Some(g))
        }
        "okubo-quaternion" => {
            let q = if ps.is_empty() { vec![Scalar::one(); 2] } else { ps };
            if q.len() != 2 {
                return Err(usage("okubo-quaternion takes two parameters"));
            }
            (okubo_from_quaternion(&q[0], &q[1])?, None)
        }
        "petersson" => (petersson_split(p.ok_or_else(|| usage("petersson:st|nst|omega"))?.parse()?), None),
        other => return Err(usage(format!("unknown algebra spec '{}'", other))),
    })
}

fn magic(cli: &Cli, a: &MagicArgs) -> Out {
    let (l, lg) = spec_algebra(&a.left)?;
    let (r, rg) = spec_algebra(&a.right)?;
    let mut values = serde_json::Map::new();
    let mut reports = Vec::new();
    let graded = match a.grade {
        None => None,
        Some(gr) => {
            let (lg, rg) = match (lg, rg) {
                (Some(x), Some(y)) => (x, y),
                _ => return Err(usage("--grade needs para-cayley or okubo on both sides")),
            };
            let two = lg.group.torsion.iter().all(|&m| m == 2);
            let target = match gr {
                Grade::Z2_8 if two => Target::E8,
                Grade::Z3_5 if !two => Target::E8,
                Grade::Dempwolff if two => Target::Dempwolff,
                _ => return Err(usage("z2_8 and dempwolff need para-cayley, z3_5 needs okubo")),
            };
            Some(induced_grading(target, &lg, Some(&rg))?)
        }
    };
    let g = magic_g(&l, &r)?;
    values.insert("algebra".into(), json!(g.lie.name()));
    values.insert("dim".into(), json!(g.dim()));
    values.insert("tri_dims".into(), json!([g.left.dim(), g.right.dim()]));
    reports.push(verify_grading(&g.z2sq));
    if let Some(gr) = &graded {
        values.insert("group".into(), json!(gr.group.to_string()));
        values.insert("type".into(), json!(format_type(&grading_type(gr)?)));
        reports.push(verify_grading(gr));
    }
    for c in &a.check {
        match c {
            MagicCheck::Jacobi => {
                reports.push(verify_lie(&g.lie, g.jacobi_policy(cli.full, cli.seed)));
            }
            MagicCheck::Cartan | MagicCheck::Jordan => {
                let gr = graded.as_ref().ok_or_else(|| usage("--check cartan|jordan needs --grade"))?;
                let kind = if *c == MagicCheck::Cartan { JordanKind::Dempwolff } else { JordanKind::Plain };
                reports.push(jordan_grading_check(gr, kind)?);
            }
        }
    }
    if let Some(p) = &a.emit {
        let lie = graded.as_ref().map_or(g.lie.clone(), |x| x.algebra.clone());
        std::fs::write(p, write_algebra(&lie))?;
        if let Some(gr) = &graded {
            let gp = p.with_extension("grading");
            std::fs::write(&gp, write_grading(gr))?;
            values.insert("grading_file".into(), json!(gp.display().to_string()));
        }
    }
    Ok(render(cli, "magic", Value::Object(values), &reports))
}
