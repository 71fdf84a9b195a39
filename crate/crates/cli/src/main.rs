mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hopfcalc::calculus::{verify_dga, Calculus, CalculusKind};
use hopfcalc::connections::{
    check_connection, coaction_from_connection, coefficient_complex, connection_from_coaction, curvature,
    tensor_connection, Connection,
};
use hopfcalc::exact::SparseVec;
use hopfcalc::homology::{compare_cotor, homology_dims};
use hopfcalc::hopf::{BialgebraMorphism, HopfAlgebra};
use hopfcalc::modules::{check_ayd, check_equivariant, check_yd, stability_check, BimoduleCoalgebra, ModComod};
use hopfcalc::report::{Check, Report};
use serde::Serialize;
use serde_json::{json, Value};

use input::{algebra_from_args, require, resolve_module, Algebra, HopfSpecFile};
use output::{canonical_json, envelope_json, CanonicalReport, HomologyOut, ReportBuilder};

/// Largest degree space a command will materialize.
const MAX_SPACE: usize = 1_000_000;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] hopfcalc::Error),
}

#[derive(Parser)]
#[command(
    name = "hopfcalc",
    version,
    about = "Exact verification of noncommutative differential calculi over finite-dimensional Hopf algebras"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the Hopf algebra axioms.
    VerifyHopf(VerifyHopf),
    /// Check d² = 0, Leibniz, associativity, unit and factorization.
    VerifyDga(VerifyDga),
    /// Check one condition on a module-comodule.
    CheckModule(CheckModule),
    /// Homology of a calculus, or of its coefficient complex.
    Homology(HomologyCmd),
    /// Tensor a YD-flat module with an AYD-flat one.
    Tensor(TensorCmd),
}

#[derive(Args, Serialize, Clone)]
struct AlgebraArgs {
    /// Built-in algebra: group:<Zn|S3|cayley.json>, dualgroup:<…>, sweedler, taft:n:q.
    #[arg(long)]
    builtin: Option<String>,
    /// Hopf algebra file (JSON).
    #[arg(long)]
    hopf: Option<PathBuf>,
    /// Q or Fp, e.g. F7. Ignored for --hopf, which names its own field.
    #[arg(long, default_value = "Q")]
    field: String,
}

impl AlgebraArgs {
    fn resolve(&self) -> Result<Option<Algebra>, CliError> {
        algebra_from_args(self.builtin.as_deref(), self.hopf.as_deref(), &self.field)
    }
}

#[derive(Args, Serialize, Clone)]
struct OutputArgs {
    /// Also write the canonical report (without timing) to this file.
    #[arg(long)]
    #[serde(skip)]
    output: Option<PathBuf>,
    /// Witnesses listed per failing check.
    #[arg(long, default_value_t = 10)]
    max_witnesses: usize,
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CalculusChoice {
    K,
    Khat,
    General,
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum BetaChoice {
    S,
    SInv,
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum CoalgebraChoice {
    Regular,
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum AlphaChoice {
    Id,
}

#[derive(Args, Serialize, Clone)]
struct CalculusArgs {
    #[arg(long, value_enum, default_value = "k")]
    calculus: CalculusChoice,
    /// General calculus: the bimodule coalgebra.
    #[arg(long, value_enum, default_value = "regular")]
    coalgebra: CoalgebraChoice,
    /// General calculus: the algebra map α.
    #[arg(long, value_enum, default_value = "id")]
    alpha: AlphaChoice,
    /// General calculus: the anti-algebra map β.
    #[arg(long, value_enum, default_value = "s")]
    beta: BetaChoice,
    /// General calculus: basis index of the group-like I (default: the unit).
    #[arg(long)]
    grouplike: Option<usize>,
}

impl CalculusArgs {
    fn beta(&self, h: &Arc<HopfAlgebra>) -> Result<BialgebraMorphism, CliError> {
        Ok(match self.beta {
            BetaChoice::S => BialgebraMorphism::antipode(h),
            BetaChoice::SInv => BialgebraMorphism::antipode_inverse(h)?,
        })
    }

    fn coalgebra(&self, h: &Arc<HopfAlgebra>) -> Result<BimoduleCoalgebra, CliError> {
        let CoalgebraChoice::Regular = self.coalgebra;
        match self.grouplike {
            None => Ok(BimoduleCoalgebra::regular(h)),
            Some(i) if i < h.dim() => Ok(BimoduleCoalgebra::regular_with_grouplike(h, SparseVec::basis(h.field(), i))?),
            Some(i) => Err(CliError::Usage(format!("group-like index {i} out of range"))),
        }
    }

    fn kind(&self, h: &Arc<HopfAlgebra>) -> Result<CalculusKind, CliError> {
        Ok(match self.calculus {
            CalculusChoice::K => CalculusKind::K(h.clone()),
            CalculusChoice::Khat => CalculusKind::Khat(h.clone()),
            CalculusChoice::General => {
                let AlphaChoice::Id = self.alpha;
                CalculusKind::General {
                    coalgebra: Arc::new(self.coalgebra(h)?),
                    alpha: BialgebraMorphism::identity(h),
                    beta: self.beta(h)?,
                }
            }
        })
    }
}

fn build(kind: CalculusKind, max_degree: usize) -> Result<Calculus, CliError> {
    let d = kind.algebra().dim();
    let size = (0..=max_degree as u32).try_fold(d, |acc, _| acc.checked_mul(d));
    if max_degree == 0 || size.is_none_or(|s| s > MAX_SPACE * d) {
        return Err(CliError::Usage(format!("max degree must be at least 1 and keep degree spaces below {MAX_SPACE}")));
    }
    Ok(Calculus::build(kind, max_degree)?)
}

#[derive(Args, Serialize)]
struct VerifyHopf {
    #[command(flatten)]
    #[serde(flatten)]
    algebra: AlgebraArgs,
    #[command(flatten)]
    #[serde(flatten)]
    out: OutputArgs,
}

#[derive(Args, Serialize)]
struct VerifyDga {
    #[command(flatten)]
    #[serde(flatten)]
    algebra: AlgebraArgs,
    #[command(flatten)]
    #[serde(flatten)]
    calculus: CalculusArgs,
    #[arg(long, env = "HOPFCALC_MAX_DEGREE", default_value_t = 3)]
    max_degree: usize,
    #[command(flatten)]
    #[serde(flatten)]
    out: OutputArgs,
}

#[derive(Copy, Clone, Debug, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Condition {
    Ayd,
    Yd,
    Stable,
    Equivariant,
    Connection,
    Flat,
}

#[derive(Args, Serialize)]
struct CheckModule {
    #[command(flatten)]
    #[serde(flatten)]
    algebra: AlgebraArgs,
    /// trivial, coadjoint, coadjoint_s, regular, one_dim:i:j, or a module file.
    #[arg(long)]
    module: String,
    #[arg(long, value_enum)]
    condition: Condition,
    /// Calculus for `connection` (k ⇔ ayd, khat ⇔ yd, general ⇔ equivariant).
    /// `--beta` also selects the twist for `equivariant`.
    #[command(flatten)]
    #[serde(flatten)]
    calculus: CalculusArgs,
    #[command(flatten)]
    #[serde(flatten)]
    out: OutputArgs,
}

#[derive(Args, Serialize)]
struct HomologyCmd {
    #[command(flatten)]
    #[serde(flatten)]
    algebra: AlgebraArgs,
    /// Coefficients; without it, the homology of the calculus itself.
    #[arg(long)]
    module: Option<String>,
    #[command(flatten)]
    #[serde(flatten)]
    calculus: CalculusArgs,
    /// The complex is materialized through this degree; homology is
    /// reported in degrees below it.
    #[arg(long, env = "HOPFCALC_MAX_DEGREE", default_value_t = 3)]
    max_degree: usize,
    /// Compare with the independently built cobar complex.
    #[arg(long)]
    compare_cotor: bool,
    #[command(flatten)]
    #[serde(flatten)]
    out: OutputArgs,
}

#[derive(Args, Serialize)]
struct TensorCmd {
    #[command(flatten)]
    #[serde(flatten)]
    algebra: AlgebraArgs,
    /// Flat connection over K̂ (a coassociative YD module).
    #[arg(long)]
    yd: String,
    /// Flat connection over K (a coassociative AYD module).
    #[arg(long)]
    ayd: String,
    #[command(flatten)]
    #[serde(flatten)]
    out: OutputArgs,
}

fn echo(name: &str, args: &impl Serialize) -> Value {
    json!({ "name": name, "args": serde_json::to_value(args).expect("arguments serialize") })
}

fn cmd_verify_hopf(args: &VerifyHopf) -> Result<ReportBuilder, CliError> {
    let mut rb = ReportBuilder::new(echo("verify-hopf", args), args.out.max_witnesses);
    let h = match (&args.algebra.builtin, &args.algebra.hopf) {
        (None, Some(path)) => {
            let text =
                std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            let spec: HopfSpecFile =
                serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
            Arc::new(spec.build()?)
        }
        _ => require(args.algebra.resolve()?)?.hopf,
    };
    rb.report(&h.verify_hopf_axioms());
    Ok(rb)
}

fn cmd_verify_dga(args: &VerifyDga) -> Result<ReportBuilder, CliError> {
    let algebra = require(args.algebra.resolve()?)?;
    let calc = build(args.calculus.kind(&algebra.hopf)?, args.max_degree)?;
    let mut rb = ReportBuilder::new(echo("verify-dga", args), args.out.max_witnesses);
    rb.report(&verify_dga(&calc));
    Ok(rb)
}

fn renamed(mut check: Check, name: &str) -> Check {
    check.name = name.into();
    check
}

/// `(Δ ⊗ id)ρ - (id ⊗ ρ)ρ` per basis vector, and its agreement with `∇̂∇`.
fn flatness_checks(conn: &Connection<'_>) -> Result<Vec<Check>, CliError> {
    let curv = curvature(conn)?;
    let mut flat = Check::new("flat");
    let mut agrees = Check::new("curvature_matches_extension");
    for (x, (f, e)) in curv.formula.iter().zip(&curv.extension).enumerate() {
        flat.record(vec![x], f.clone());
        agrees.record(vec![x], f.sub(e));
    }
    Ok(vec![flat, agrees])
}

fn cmd_check_module(args: &CheckModule) -> Result<ReportBuilder, CliError> {
    let (x, algebra) = resolve_module(&args.module, args.algebra.resolve()?)?;
    let h = &algebra.hopf;
    let mut rb = ReportBuilder::new(echo("check-module", args), args.out.max_witnesses);
    if !matches!(args.condition, Condition::Connection) {
        rb.check(&x.verify_action(h));
    }
    match args.condition {
        Condition::Ayd => rb.check(&check_ayd(h, &x)?),
        Condition::Yd => rb.check(&check_yd(h, &x)?),
        Condition::Stable => rb.check(&stability_check(h, &x)?),
        Condition::Equivariant => {
            let c = args.calculus.coalgebra(h)?;
            let beta = args.calculus.beta(h)?;
            rb.check(&check_equivariant(&x, &c, &BialgebraMorphism::identity(h), &beta)?);
        }
        Condition::Connection => {
            let calc = build(args.calculus.kind(h)?, 1)?;
            rb.report(&check_connection(&connection_from_coaction(&calc, &x)?));
        }
        Condition::Flat => {
            let calc = build(args.calculus.kind(h)?, 2)?;
            for c in flatness_checks(&connection_from_coaction(&calc, &x)?)? {
                rb.check(&c);
            }
        }
    }
    Ok(rb)
}

fn cmd_homology(args: &HomologyCmd) -> Result<ReportBuilder, CliError> {
    let context = args.algebra.resolve()?;
    let (module, algebra) = match &args.module {
        Some(m) => {
            let (x, a) = resolve_module(m, context)?;
            (Some(x), a)
        }
        None => (None, require(context)?),
    };
    let calc = build(args.calculus.kind(&algebra.hopf)?, args.max_degree)?;
    let mut rb = ReportBuilder::new(echo("homology", args), args.out.max_witnesses);
    let cx = match &module {
        None => hopfcalc::homology::calculus_complex(&calc)?,
        Some(x) => {
            let conn = connection_from_coaction(&calc, x)?;
            rb.report(&check_connection(&conn));
            if calc.max_degree() >= 2 {
                for c in flatness_checks(&conn)? {
                    rb.check(&c);
                }
            }
            if !rb.passed() {
                // Coefficients are not a flat connection: no complex.
                return Ok(rb);
            }
            coefficient_complex(&calc, &conn)?
        }
    };
    let table = homology_dims(&cx, calc.max_degree())?;
    let mut out = HomologyOut { calculus: table, cobar: None };
    if args.compare_cotor {
        let cmp = compare_cotor(&calc, module.as_ref())?;
        rb.report(&cmp.report);
        out.cobar = Some(cmp.cobar_side);
    }
    rb.homology = Some(out);
    Ok(rb)
}

fn module_json(x: &ModComod) -> Value {
    let n = x.dim();
    let mut action = Vec::new();
    let mut coaction = Vec::new();
    for h in 0..x.acting_dim() {
        for i in 0..n {
            for (j, c) in x.act_basis(h, i).iter() {
                action.push(json!([h, i, j, c]));
            }
        }
    }
    for i in 0..n {
        for (flat, c) in x.coact_basis(i).iter() {
            coaction.push(json!([i, flat / n, flat % n, c]));
        }
    }
    let mut value = json!({ "dim": n, "action": action, "coaction": coaction });
    if n == 1 {
        let delta: Vec<Value> = (0..x.acting_dim())
            .map(|h| json!(x.act_basis(h, 0).get(0).cloned().unwrap_or_else(|| x.field().zero())))
            .collect();
        let sigma: Vec<Value> = x.coact_basis(0).iter().map(|(k, c)| json!([k, c])).collect();
        value["one_dim"] = json!({ "delta": delta, "sigma": sigma });
    }
    value
}

fn prefixed(report: Report, prefix: &str) -> Vec<Check> {
    report
        .checks
        .into_iter()
        .map(|c| {
            let name = format!("{prefix}_{}", c.name);
            renamed(c, &name)
        })
        .collect()
}

fn cmd_tensor(args: &TensorCmd) -> Result<ReportBuilder, CliError> {
    let context = args.algebra.resolve()?;
    let (a, alg_a) = resolve_module(&args.yd, context.clone())?;
    let (b, alg_b) = resolve_module(&args.ayd, context.or(Some(alg_a.clone())))?;
    if alg_a.hopf.as_ref() != alg_b.hopf.as_ref() {
        return Err(CliError::Usage(format!(
            "modules are over different algebras ({} and {})",
            alg_a.label, alg_b.label
        )));
    }
    let h = &alg_b.hopf;
    let khat = build(CalculusKind::Khat(h.clone()), 2)?;
    let k = build(CalculusKind::K(h.clone()), 2)?;
    let ca = connection_from_coaction(&khat, &a)?;
    let cb = connection_from_coaction(&k, &b)?;
    let mut rb = ReportBuilder::new(echo("tensor", args), args.out.max_witnesses);
    for c in prefixed(check_connection(&ca), "yd_input") {
        rb.check(&c);
    }
    for c in flatness_checks(&ca)? {
        let name = format!("yd_input_{}", c.name);
        rb.check(&renamed(c, &name));
    }
    for c in prefixed(check_connection(&cb), "ayd_input") {
        rb.check(&c);
    }
    for c in flatness_checks(&cb)? {
        let name = format!("ayd_input_{}", c.name);
        rb.check(&renamed(c, &name));
    }
    if !rb.passed() {
        return Ok(rb);
    }
    let t = tensor_connection(&ca, &cb)?;
    for c in prefixed(check_connection(&t), "result") {
        rb.check(&c);
    }
    for c in flatness_checks(&t)? {
        let name = format!("result_{}", c.name);
        rb.check(&renamed(c, &name));
    }
    let module = coaction_from_connection(&t)?;
    rb.check(&renamed(check_ayd(h, &module)?, "result_ayd"));
    rb.result = Some(module_json(&module));
    Ok(rb)
}

fn run(cli: &Cli) -> Result<(ReportBuilder, Option<PathBuf>), CliError> {
    Ok(match &cli.command {
        Command::VerifyHopf(a) => (cmd_verify_hopf(a)?, a.out.output.clone()),
        Command::VerifyDga(a) => (cmd_verify_dga(a)?, a.out.output.clone()),
        Command::CheckModule(a) => (cmd_check_module(a)?, a.out.output.clone()),
        Command::Homology(a) => (cmd_homology(a)?, a.out.output.clone()),
        Command::Tensor(a) => (cmd_tensor(a)?, a.out.output.clone()),
    })
}

fn emit(report: &CanonicalReport, elapsed: std::time::Duration, output: Option<PathBuf>) -> Result<(), CliError> {
    if let Some(path) = output {
        std::fs::write(&path, canonical_json(report) + "\n")
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    }
    let mut stdout = std::io::stdout().lock();
    match writeln!(stdout, "{}", envelope_json(report, elapsed)) {
        Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(CliError::Usage(format!("writing report: {e}"))),
        _ => Ok(()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let outcome = run(&cli).and_then(|(rb, output)| {
        let passed = rb.passed();
        emit(&rb.finish(), start.elapsed(), output)?;
        Ok(passed)
    });
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
