use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use grothlab::algebra::{Polynomial, TruncatedSeries};
use grothlab::insertion::{in_trace, out_trace, AnyTableau, Trace};
use grothlab::partitions::{Partition, StrictPartition};
use grothlab::polynomials::{
    expand_in_pschur, expand_in_schur, expansion_via_maximal, expansion_via_restricted,
    grothendieck_j_algebraic, grothendieck_j_combinatorial, grothendieck_p_algebraic,
    grothendieck_p_combinatorial, pschur, schur, schur_bialternant, specialize_t, BasisExpansion,
    Family, FamilySpec, PolyError,
};
use grothlab::tableaux::{
    enumerate_maximal_mt, enumerate_maximal_smt, enumerate_mt, enumerate_rt, enumerate_smt,
    enumerate_srt, enumerate_sst, enumerate_ssyt, MultisetTableau, ShiftedMultisetTableau,
    SkewFilling, TableauJson,
};
use grothlab_cli::suites::{self, Scale, Suite};

/// Exact computation of weak symmetric Grothendieck polynomials J_mu(x,t)
/// and P-Grothendieck polynomials P_mu(x,t).
///
/// Series are truncated at total t-degree --tcap (default 1) and total
/// x-degree --xcap (default |mu| + tcap * mu_1 * n). Every coefficient up
/// to both caps is exact.
#[derive(Parser, Debug)]
#[command(name = "grothlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a polynomial by its algebraic and combinatorial definitions.
    Compute(ComputeArgs),
    /// Expand in the Schur (family J) or P-Schur (family P) basis.
    Expand(ExpandArgs),
    /// List the tableaux of one kind.
    Enumerate(EnumerateArgs),
    /// Run an exhaustive verification suite.
    Verify(VerifyArgs),
    /// Print a step-by-step out or in chain on one column.
    Trace(TraceArgs),
}

#[derive(Args, Debug)]
struct Target {
    /// schur, pschur, J or P.
    #[arg(value_name = "FAMILY")]
    family_pos: Option<Family>,
    /// Comma-separated parts, e.g. 2,1.
    #[arg(value_name = "MU")]
    mu_pos: Option<String>,
    #[arg(long, conflicts_with = "family_pos")]
    family: Option<Family>,
    #[arg(long, conflicts_with = "mu_pos")]
    mu: Option<String>,
    /// Number of x-variables.
    #[arg(long, default_value_t = 2)]
    n: usize,
    /// Total t-degree cap.
    #[arg(long, default_value_t = 1)]
    tcap: u32,
    /// Total x-degree cap.
    #[arg(long)]
    xcap: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Route {
    Algebraic,
    Combinatorial,
    Both,
}

#[derive(Args, Debug)]
struct ComputeArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value_t = Route::Both)]
    route: Route,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ExpandRoute {
    Algebraic,
    Combinatorial,
    Maximal,
    Restricted,
    All,
}

#[derive(Args, Debug)]
struct ExpandArgs {
    #[command(flatten)]
    target: Target,
    #[arg(long, value_enum, default_value_t = ExpandRoute::Algebraic)]
    route: ExpandRoute,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Kind {
    Mt,
    Ssyt,
    MaximalMt,
    Rt,
    Smt,
    Sst,
    MaximalSmt,
    Srt,
}

#[derive(Args, Debug)]
struct EnumerateArgs {
    #[arg(value_enum)]
    kind: Kind,
    /// Comma-separated parts, e.g. 2,1.
    mu: String,
    /// Largest entry value.
    #[arg(long, default_value_t = 3)]
    n: u32,
    /// Bound on entries beyond one per box (or on cells of a restricted tableau).
    #[arg(long, default_value_t = 1)]
    extra: u32,
    /// Allow primed entries on the diagonal (shifted kinds).
    #[arg(long)]
    signed: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// lemma, psi, phi, maximal, positivity, routes, specialization, signed or all.
    suite: Suite,
    /// Census size; defaults to GROTHLAB_CENSUS_SCALE, else full.
    #[arg(long, value_parser = ["small", "full"])]
    scale: Option<String>,
    /// Also list every failing case.
    #[arg(long)]
    verbose: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Flavor {
    Unshifted,
    Shifted,
}

#[derive(Args, Debug)]
struct TraceArgs {
    /// Tableau file in text format, or its JSON mirror.
    file: PathBuf,
    #[arg(long, value_enum)]
    flavor: Flavor,
    /// Column label to drain (or refill).
    #[arg(long)]
    k: usize,
    /// Number of column labels; defaults to the length of the first row.
    #[arg(long)]
    ell: Option<usize>,
    /// Shifted entries may carry primes on the diagonal.
    #[arg(long)]
    signed: bool,
    /// Run in_b towards this shape instead of out.
    #[arg(long, value_name = "SHAPE")]
    inverse: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Verify(String),
    Internal(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Verify(_) => 2,
            Failure::Internal(_) => 3,
        }
    }
}

impl From<PolyError> for Failure {
    fn from(e: PolyError) -> Self {
        match e {
            PolyError::Algebra(_) | PolyError::SignedFactor(_) => Failure::Internal(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn parse_parts(s: &str) -> Result<Vec<u32>, Failure> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(str::trim)
        .filter(|p| !p.is_empty())
        .map(|p| {
            p.parse()
                .map_err(|_| Failure::Usage(format!("bad part {:?} in {:?}", p, s)))
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, Failure> {
    Partition::new(parse_parts(s)?).map_err(|e| Failure::Usage(e.to_string()))
}

fn parse_strict(s: &str) -> Result<StrictPartition, Failure> {
    StrictPartition::new(parse_parts(s)?).map_err(|e| Failure::Usage(e.to_string()))
}

impl Target {
    fn spec(&self) -> Result<FamilySpec, Failure> {
        let family = self
            .family_pos
            .or(self.family)
            .ok_or_else(|| Failure::Usage("missing family (schur, pschur, J or P)".into()))?;
        let mu = self
            .mu_pos
            .as_deref()
            .or(self.mu.as_deref())
            .ok_or_else(|| Failure::Usage("missing mu".into()))?;
        Ok(FamilySpec::new(
            family,
            parse_partition(mu)?,
            self.n,
            self.tcap,
            self.xcap,
        )?)
    }
}

fn spec_json(spec: &FamilySpec) -> Value {
    json!({
        "family": spec.family.to_string(),
        "mu": spec.mu.parts(),
        "n": spec.n,
        "tcap": spec.t_cap,
        "xcap": spec.x_cap,
    })
}

fn spec_line(spec: &FamilySpec) -> String {
    format!(
        "family {} mu={} n={} tcap={} xcap={}",
        spec.family, spec.mu, spec.n, spec.t_cap, spec.x_cap
    )
}

fn algebraic(spec: &FamilySpec) -> Result<TruncatedSeries, Failure> {
    let series = match spec.family {
        Family::J => grothendieck_j_algebraic(spec)?,
        Family::P => grothendieck_p_algebraic(spec)?,
        Family::Schur => TruncatedSeries::new(schur_bialternant(&spec.mu, spec.n)?, spec.x_cap, 0),
        Family::PSchur => {
            let as_p = FamilySpec::new(Family::P, spec.mu.clone(), spec.n, 0, Some(spec.x_cap))?;
            let f = grothendieck_p_algebraic(&as_p)?;
            let x = specialize_t(&f, &vec![false; as_p.ell()])?;
            TruncatedSeries::new(x, spec.x_cap, 0)
        }
    };
    Ok(series)
}

fn combinatorial(spec: &FamilySpec) -> Result<TruncatedSeries, Failure> {
    let series = match spec.family {
        Family::J => grothendieck_j_combinatorial(spec)?,
        Family::P => grothendieck_p_combinatorial(spec)?,
        Family::Schur => TruncatedSeries::new(schur(&spec.mu, spec.n), spec.x_cap, 0),
        Family::PSchur => TruncatedSeries::new(pschur(&spec.strict_mu()?, spec.n), spec.x_cap, 0),
    };
    Ok(series)
}

fn series_json(s: &TruncatedSeries) -> Value {
    json!({
        "nx": s.nx(),
        "nt": s.nt(),
        "xcap": s.x_cap(),
        "tcap": s.t_cap(),
        "terms": s.poly().to_lines(),
    })
}

fn verdict(agree: bool) -> &'static str {
    if agree {
        "AGREE"
    } else {
        "DISAGREE"
    }
}

fn compute(args: &ComputeArgs) -> Result<String, Failure> {
    let spec = args.target.spec()?;
    let mut routes: Vec<(&str, TruncatedSeries)> = Vec::new();
    if args.route != Route::Combinatorial {
        routes.push(("algebraic", algebraic(&spec)?));
    }
    if args.route != Route::Algebraic {
        routes.push(("combinatorial", combinatorial(&spec)?));
    }
    let agree = (routes.len() == 2).then(|| routes[0].1 == routes[1].1);
    let out = match args.target.format {
        Format::Text => {
            let mut s = spec_line(&spec);
            s.push('\n');
            for (name, series) in &routes {
                let _ = write!(s, "[{}]\n{}", name, series.to_text());
            }
            if let Some(a) = agree {
                let _ = writeln!(s, "verdict {}", verdict(a));
            }
            s
        }
        Format::Json => {
            let mut v = spec_json(&spec);
            let obj = v.as_object_mut().expect("object");
            for (name, series) in &routes {
                obj.insert(name.to_string(), series_json(series));
            }
            if let Some(a) = agree {
                obj.insert("verdict".into(), json!(verdict(a)));
            }
            pretty(&v)
        }
    };
    if agree == Some(false) {
        print!("{}", out);
        return Err(Failure::Verify("the two routes disagree".into()));
    }
    Ok(out)
}

fn expansion_of(spec: &FamilySpec, route: ExpandRoute) -> Result<BasisExpansion, Failure> {
    let expand = |p: &Polynomial| match spec.family {
        Family::J | Family::Schur => expand_in_schur(p),
        Family::P | Family::PSchur => expand_in_pschur(p),
    };
    Ok(match route {
        ExpandRoute::Algebraic | ExpandRoute::All => expand(algebraic(spec)?.poly())?,
        ExpandRoute::Combinatorial => expand(combinatorial(spec)?.poly())?,
        ExpandRoute::Maximal => expansion_via_maximal(spec)?,
        ExpandRoute::Restricted => expansion_via_restricted(spec)?,
    })
}

fn expand(args: &ExpandArgs) -> Result<String, Failure> {
    let spec = args.target.spec()?;
    let e = expansion_of(&spec, args.route)?;
    let agree = if args.route == ExpandRoute::All {
        let mut ok = e == expansion_of(&spec, ExpandRoute::Combinatorial)?;
        if matches!(spec.family, Family::J | Family::P) {
            ok &= e == expansion_of(&spec, ExpandRoute::Maximal)?;
            ok &= e == expansion_of(&spec, ExpandRoute::Restricted)?;
        }
        Some(ok)
    } else {
        None
    };
    let out = match args.target.format {
        Format::Text => {
            let mut s = format!("{} basis={}\n{}", spec_line(&spec), e.basis, e.to_text());
            let _ = writeln!(s, "positive {}", e.is_positive());
            if let Some(a) = agree {
                let _ = writeln!(s, "verdict {}", verdict(a));
            }
            s
        }
        Format::Json => {
            let mut v = spec_json(&spec);
            let obj = v.as_object_mut().expect("object");
            obj.insert("basis".into(), json!(e.basis.to_string()));
            let coefficients: Vec<Value> = e
                .coefficients()
                .iter()
                .map(|(lambda, c)| {
                    json!({
                        "lambda": lambda.parts(),
                        "coefficient": c.to_string(),
                        "terms": c.to_lines(),
                    })
                })
                .collect();
            obj.insert("coefficients".into(), json!(coefficients));
            obj.insert("positive".into(), json!(e.is_positive()));
            if let Some(a) = agree {
                obj.insert("verdict".into(), json!(verdict(a)));
            }
            pretty(&v)
        }
    };
    if agree == Some(false) {
        print!("{}", out);
        return Err(Failure::Verify("the expansion routes disagree".into()));
    }
    Ok(out)
}

fn skew_json(r: &SkewFilling) -> Value {
    json!({ "outer": r.outer().parts(), "inner": r.inner().parts(), "rows": r.rows() })
}

fn enumerate(args: &EnumerateArgs) -> Result<String, Failure> {
    let mut texts: Vec<String> = Vec::new();
    let mut values: Vec<Value> = Vec::new();
    fn push_mt(ts: Vec<MultisetTableau>, texts: &mut Vec<String>, values: &mut Vec<Value>) {
        for t in ts {
            texts.push(t.to_text());
            values.push(serde_json::to_value(TableauJson::from_mt(&t)).expect("serializable"));
        }
    }
    fn push_smt(ts: Vec<ShiftedMultisetTableau>, texts: &mut Vec<String>, values: &mut Vec<Value>) {
        for t in ts {
            texts.push(t.to_text());
            values.push(serde_json::to_value(TableauJson::from_smt(&t)).expect("serializable"));
        }
    }
    fn push_skew(rs: Vec<SkewFilling>, texts: &mut Vec<String>, values: &mut Vec<Value>) {
        for r in rs {
            texts.push(format!("{}\n", r));
            values.push(skew_json(&r));
        }
    }
    match args.kind {
        Kind::Mt => push_mt(
            enumerate_mt(&parse_partition(&args.mu)?, args.n, args.extra),
            &mut texts,
            &mut values,
        ),
        Kind::Ssyt => push_mt(
            enumerate_ssyt(&parse_partition(&args.mu)?, args.n),
            &mut texts,
            &mut values,
        ),
        Kind::MaximalMt => push_mt(
            enumerate_maximal_mt(&parse_partition(&args.mu)?, args.extra),
            &mut texts,
            &mut values,
        ),
        Kind::Rt => push_skew(
            enumerate_rt(&parse_partition(&args.mu)?, args.extra),
            &mut texts,
            &mut values,
        ),
        Kind::Smt => push_smt(
            enumerate_smt(&parse_strict(&args.mu)?, args.n, args.extra, args.signed),
            &mut texts,
            &mut values,
        ),
        Kind::Sst => push_smt(
            enumerate_sst(&parse_strict(&args.mu)?, args.n, args.signed),
            &mut texts,
            &mut values,
        ),
        Kind::MaximalSmt => push_smt(
            enumerate_maximal_smt(&parse_strict(&args.mu)?, args.extra),
            &mut texts,
            &mut values,
        ),
        Kind::Srt => push_skew(
            enumerate_srt(&parse_strict(&args.mu)?, args.extra),
            &mut texts,
            &mut values,
        ),
    }
    Ok(match args.format {
        Format::Text => {
            let mut s = format!("# {} tableaux\n", texts.len());
            for t in &texts {
                s.push('\n');
                s.push_str(t);
            }
            s
        }
        Format::Json => pretty(&json!({ "count": values.len(), "tableaux": values })),
    })
}

fn verify(args: &VerifyArgs) -> Result<String, Failure> {
    let scale = match args.scale.as_deref() {
        Some("small") => Scale::Small,
        Some(_) => Scale::Full,
        None => Scale::from_env(),
    };
    let reports = suites::run(args.suite, scale);
    let mut s = format!("# verify {} scale={}\n", args.suite, scale);
    for r in &reports {
        let _ = writeln!(s, "{}", r.summary());
        if args.verbose || !r.passed() {
            for f in r
                .failures
                .iter()
                .take(if args.verbose { usize::MAX } else { 5 })
            {
                let _ = writeln!(s, "  {}", f.replace('\n', "\n    "));
            }
        }
    }
    if reports.iter().all(|r| r.passed()) {
        Ok(s)
    } else {
        print!("{}", s);
        Err(Failure::Verify("some cases failed".into()))
    }
}

fn read_tableau(args: &TraceArgs) -> Result<(AnyTableau, Option<String>), Failure> {
    let raw = std::fs::read_to_string(&args.file)
        .map_err(|e| Failure::Usage(format!("{}: {}", args.file.display(), e)))?;
    let bad = |e: grothlab::tableaux::TableauError| {
        Failure::Usage(format!("{}: {}", args.file.display(), e))
    };
    let is_json = raw.trim_start().starts_with('{');
    let parsed: Option<TableauJson> = if is_json {
        Some(
            serde_json::from_str(&raw)
                .map_err(|e| Failure::Usage(format!("{}: {}", args.file.display(), e)))?,
        )
    } else {
        None
    };
    Ok(match args.flavor {
        Flavor::Unshifted => {
            let t = match &parsed {
                Some(j) => j.to_mt_unchecked().map_err(bad)?,
                None => MultisetTableau::parse_unchecked(&raw).map_err(bad)?,
            };
            let warning = t.validate().err().map(|e| e.to_string());
            (AnyTableau::Unshifted(t), warning)
        }
        Flavor::Shifted => {
            let signed = args.signed || parsed.as_ref().is_some_and(|j| j.signed);
            let t = match &parsed {
                Some(j) => j.to_smt_unchecked().map_err(bad)?,
                None => ShiftedMultisetTableau::parse_unchecked(&raw, signed).map_err(bad)?,
            };
            let warning = t.validate().err().map(|e| e.to_string());
            (AnyTableau::Shifted(t), warning)
        }
    })
}

fn trace_json(tr: &Trace, rendered: &str) -> Value {
    let steps: Vec<&str> = rendered
        .lines()
        .filter(|l| l.starts_with("step "))
        .collect();
    json!({
        "flavor": if tr.shifted { "shifted" } else { "unshifted" },
        "direction": if tr.inverse { "in" } else { "out" },
        "k": tr.k,
        "ell": tr.ell,
        "states": tr.states,
        "steps": steps,
    })
}

fn trace(args: &TraceArgs) -> Result<String, Failure> {
    let (t, warning) = read_tableau(args)?;
    if let Some(w) = warning {
        eprintln!(
            "warning: input is not a valid tableau ({}); tracing it anyway",
            w
        );
    }
    let ell = args
        .ell
        .unwrap_or_else(|| t.row_lengths().first().copied().unwrap_or(0) as usize);
    let tr = match &args.inverse {
        Some(shape) => in_trace(&t, args.k, ell, &parse_parts(shape)?),
        None => out_trace(&t, args.k, ell),
    }
    .map_err(|e| Failure::Usage(e.to_string()))?;
    let rendered = tr.render();
    Ok(match args.format {
        Format::Text => rendered,
        Format::Json => pretty(&trace_json(&tr, &rendered)),
    })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match &cli.command {
        Command::Compute(a) => compute(a),
        Command::Expand(a) => expand(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Verify(a) => verify(a),
        Command::Trace(a) => trace(a),
    };
    match result {
        Ok(out) => {
            print!("{}", out);
            ExitCode::SUCCESS
        }
        Err(f) => {
            let msg = match &f {
                Failure::Usage(m) => format!("error: {}", m),
                Failure::Verify(m) => format!("verification failed: {}", m),
                Failure::Internal(m) => format!("internal error: {}", m),
            };
            eprintln!("{}", msg);
            ExitCode::from(f.code())
        }
    }
}
