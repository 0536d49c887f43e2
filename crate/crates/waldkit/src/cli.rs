//! Command-line front end.
//!
//! Every verb takes either an ideal file path or an inline family spec
//! (`family cycle 5`), runs one pure pipeline, and prints a report. Exit
//! codes: 0 success, 1 identity violation in `verify`, 2 input/parse error,
//! 3 resource cap exceeded.

use std::ffi::OsString;
use std::fs;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use waldschmidt::decomposition::{minimal_primes_capped, Decomposition, DEFAULT_COVER_CAP};
use waldschmidt::families::{
    bipyramid_ideal, complete_multipartite_ideal, cycle_complement_ideal, cycle_ideal,
    general_linear_ideal, monomial_star_ideal, uniform_matroid_ideal, FamilyInstance,
};
use waldschmidt::powers::{
    alpha_symbolic, check_containment_capped, resurgence_search_capped,
    symbolic_binomial_check_capped, DEFAULT_GENERATOR_CAP,
};
use waldschmidt::waldschmidt::{
    chudnovsky_check_from, fractional_chromatic_number_from, graph_bounds,
    waldschmidt_report_from, ChiStar,
};
use waldschmidt::{ratio, Error, Monomial, SquarefreeIdeal, VariableContext};

use crate::parse::{format_ideal, parse_ideal};
use crate::report::{rat_str, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_CAP: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "waldkit",
    version,
    about = "Exact Waldschmidt constants, symbolic powers, and containments of squarefree monomial ideals"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Input plus the flags shared by every computing verb.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// An ideal file path, or an inline family spec: `family <name> <params...>`
    #[arg(required = true, num_args = 1.., value_name = "INPUT")]
    pub input: Vec<String>,
    /// Emit the machine-readable report instead of the human one
    #[arg(long)]
    pub json: bool,
    /// Override the enumeration and generator-set caps (also: WALDKIT_CAP)
    #[arg(long, value_name = "N")]
    pub cap: Option<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the Waldschmidt constant with primal and dual witnesses
    AlphaHat(InputArgs),
    /// Compute the fractional chromatic number of the hypergraph
    ChiStar(InputArgs),
    /// List the minimal primes (minimal vertex covers)
    Decompose(InputArgs),
    /// Compute alpha(I^(m)), the least degree in a symbolic power
    AlphaSymbolic {
        #[command(flatten)]
        input: InputArgs,
        /// Symbolic power exponent
        #[arg(long)]
        m: u32,
    },
    /// Decide the containment I^(m) in I^r, with a witness on failure
    Containment {
        #[command(flatten)]
        input: InputArgs,
        /// Symbolic side exponent
        #[arg(long)]
        m: u32,
        /// Ordinary side exponent
        #[arg(long)]
        r: u32,
    },
    /// Scan a window of (m, r) pairs for non-containments
    ResurgenceScan {
        #[command(flatten)]
        input: InputArgs,
        /// Window "M,R": scan r = 1..R, m = r..M
        #[arg(long, value_name = "M,R")]
        window: String,
    },
    /// Run an identity suite; exits nonzero on any violation
    Verify {
        #[command(flatten)]
        input: InputArgs,
        /// Which suite to run
        #[arg(long, value_enum)]
        suite: Suite,
        /// Power used by the binomial suite (default 2)
        #[arg(long)]
        m: Option<u32>,
        /// Window used by the alpha-ratio suite (default 6,4)
        #[arg(long, value_name = "M,R")]
        window: Option<String>,
    },
    /// List the built-in families or emit one as an ideal file
    Family {
        #[command(subcommand)]
        action: FamilyAction,
    },
}

#[derive(Debug, Subcommand)]
pub enum FamilyAction {
    /// Show the available families and their parameters
    List,
    /// Print a family instance in the ideal file format
    Emit {
        /// Family spec: `<name> <params...>`, e.g. `cycle 5`
        #[arg(required = true, num_args = 1.., value_name = "SPEC")]
        spec: Vec<String>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    /// alpha-hat = chi*/(chi* - 1), both sides solved separately
    Thm46,
    /// alpha-hat >= (alpha + e - 1)/e
    Chudnovsky,
    /// chi/(chi-1) <= alpha-hat <= omega/(omega-1) for graph ideals
    GraphBounds,
    /// alpha/alpha-hat never exceeds the resurgence lower bound
    AlphaRatio,
    /// binomial expansion of symbolic powers over a disjoint companion
    Binomial,
    /// every suite above, in order
    All,
}

/// Captured output of one invocation.
#[derive(Debug)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, stderr: String::new(), code: EXIT_OK }
    }
}

struct Failure {
    message: String,
    code: i32,
}

impl Failure {
    fn input(message: impl Into<String>) -> Failure {
        Failure { message: message.into(), code: EXIT_INPUT }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match e {
            Error::CoverCapExceeded { .. } | Error::SizeCapExceeded { .. } => EXIT_CAP,
            _ => EXIT_INPUT,
        };
        Failure { message: e.to_string(), code }
    }
}

#[derive(Clone, Copy)]
struct Caps {
    cover: usize,
    generators: usize,
}

fn resolve_caps(flag: Option<usize>) -> Result<Caps, Failure> {
    let from_env = match std::env::var("WALDKIT_CAP") {
        Ok(raw) => Some(raw.parse::<usize>().map_err(|_| {
            Failure::input(format!("WALDKIT_CAP must be a positive integer, got {raw:?}"))
        })?),
        Err(_) => None,
    };
    let cap = flag.or(from_env);
    Ok(Caps {
        cover: cap.unwrap_or(DEFAULT_COVER_CAP),
        generators: cap.unwrap_or(DEFAULT_GENERATOR_CAP),
    })
}

/// Runs the CLI on the given argument list and captures all output.
pub fn execute<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            let rendered = err.render().to_string();
            return if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                Outcome::ok(rendered)
            } else {
                Outcome { stdout: String::new(), stderr: rendered, code: EXIT_INPUT }
            };
        }
    };
    match run(cli) {
        Ok(outcome) => outcome,
        Err(failure) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", failure.message),
            code: failure.code,
        },
    }
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::AlphaHat(input) => pipeline(input, |ctx| {
            let base = &ctx.base;
            ctx.report.push_result(json!({
                "kind": "alpha-hat",
                "alpha_hat": rat_str(&base.alpha_hat),
                "primal_witness": base.primal_witness.iter().map(rat_str).collect::<Vec<_>>(),
                "dual_witness": base.dual_witness.iter().map(rat_str).collect::<Vec<_>>(),
                "lcm_denominator": base.lcm_denominator.to_string(),
            }));
            ctx.report.push_line(format!(
                "primal witness: [{}]",
                base.primal_witness.iter().map(rat_str).collect::<Vec<_>>().join(", ")
            ));
            ctx.report.push_line(format!(
                "dual witness: [{}]",
                base.dual_witness.iter().map(rat_str).collect::<Vec<_>>().join(", ")
            ));
            ctx.report.push_line(format!("lcm of primal denominators: {}", base.lcm_denominator));
            Ok(EXIT_OK)
        }),
        Command::ChiStar(input) => pipeline(input, |ctx| {
            let (status, value) = if !ctx.ideal.has_nontrivial_edge() {
                ("not-applicable", None)
            } else {
                match fractional_chromatic_number_from(ctx.decomposition) {
                    ChiStar::Finite(v) => ("finite", Some(v)),
                    ChiStar::Infinite => ("infinite", None),
                }
            };
            ctx.report.push_result(json!({
                "kind": "chi-star",
                "status": status,
                "chi_star": value.as_ref().map(rat_str),
            }));
            let line = match (status, &value) {
                ("finite", Some(v)) => format!("chi-star status: finite, value {}", rat_str(v)),
                ("infinite", _) => {
                    "chi-star status: infinite (an isolated vertex forms an edge)".to_string()
                }
                _ => "chi-star status: not applicable (no edge of size two or more)".to_string(),
            };
            ctx.report.push_line(line);
            Ok(EXIT_OK)
        }),
        Command::Decompose(input) => pipeline(input, |ctx| {
            ctx.report.push_result(json!({
                "kind": "decomposition",
                "count": ctx.decomposition.num_primes(),
            }));
            for p in ctx.decomposition.primes() {
                ctx.report.push_line(format!("prime: {p}   (height {})", p.height()));
            }
            Ok(EXIT_OK)
        }),
        Command::AlphaSymbolic { input, m } => pipeline(input, move |ctx| {
            if m == 0 {
                return Err(Failure::input("--m must be positive"));
            }
            let value = alpha_symbolic(ctx.decomposition, m);
            let quotient = ratio(i64::from(value), i64::from(m));
            ctx.report.push_result(json!({
                "kind": "alpha-symbolic",
                "m": m,
                "value": value,
                "ratio": rat_str(&quotient),
            }));
            ctx.report.push_line(format!(
                "alpha(I^({m})) = {value}, quotient {}",
                rat_str(&quotient)
            ));
            Ok(EXIT_OK)
        }),
        Command::Containment { input, m, r } => pipeline(input, move |ctx| {
            if m == 0 || r == 0 {
                return Err(Failure::input("--m and --r must be positive"));
            }
            let result = check_containment_capped(
                ctx.decomposition,
                ctx.ideal.ideal(),
                m,
                r,
                ctx.caps.generators,
            )?;
            ctx.report.push_result(json!({
                "kind": "containment",
                "m": m,
                "r": r,
                "contained": result.contained,
                "witness": result.witness.as_ref().map(Monomial::to_string),
                "ratio": rat_str(&result.ratio),
            }));
            match &result.witness {
                None => ctx.report.push_line(format!("I^({m}) in I^{r}: CONTAINED")),
                Some(w) => ctx.report.push_line(format!(
                    "I^({m}) in I^{r}: NOT CONTAINED, witness {w}"
                )),
            }
            Ok(EXIT_OK)
        }),
        Command::ResurgenceScan { input, window } => {
            let parsed = parse_window(&window)?;
            pipeline(input, move |ctx| {
                let est = resurgence_search_capped(
                    ctx.decomposition,
                    ctx.ideal.ideal(),
                    parsed.0,
                    parsed.1,
                    ctx.caps.generators,
                )?;
                let cells: Vec<_> = est
                    .non_containments
                    .iter()
                    .map(|c| {
                        json!({
                            "m": c.m,
                            "r": c.r,
                            "ratio": rat_str(&c.ratio),
                            "witness": c.witness.as_ref().map(Monomial::to_string),
                        })
                    })
                    .collect();
                ctx.report.push_result(json!({
                    "kind": "resurgence-scan",
                    "window": [parsed.0, parsed.1],
                    "lower_bound": rat_str(&est.lower_bound),
                    "alpha_ratio": rat_str(&est.alpha_ratio),
                    "omega_ratio": rat_str(&est.omega_ratio),
                    "non_containments": cells,
                    "skipped": est.skipped,
                }));
                ctx.report.push_line(format!(
                    "resurgence lower bound: {} over window ({}, {})",
                    rat_str(&est.lower_bound),
                    parsed.0,
                    parsed.1
                ));
                ctx.report.push_line(format!(
                    "alpha ratio: {}, omega ratio: {}",
                    rat_str(&est.alpha_ratio),
                    rat_str(&est.omega_ratio)
                ));
                for c in &est.non_containments {
                    let witness = c
                        .witness
                        .as_ref()
                        .map(Monomial::to_string)
                        .unwrap_or_default();
                    ctx.report.push_line(format!(
                        "non-containment: I^({}) outside I^{} (ratio {}), witness {witness}",
                        c.m,
                        c.r,
                        rat_str(&c.ratio)
                    ));
                }
                for (m, r) in &est.skipped {
                    ctx.report.push_line(format!("skipped ({m}, {r}): generator cap"));
                }
                Ok(EXIT_OK)
            })
        }
        Command::Verify { input, suite, m, window } => {
            let window = match window {
                Some(raw) => Some(parse_window(&raw)?),
                None => None,
            };
            pipeline(input, move |ctx| run_verify(ctx, suite, m, window))
        }
        Command::Family { action } => family_command(action),
    }
}

/// Everything a verb handler gets to work with.
struct PipelineContext<'a> {
    ideal: &'a SquarefreeIdeal,
    decomposition: &'a Decomposition,
    base: &'a waldschmidt::WaldschmidtReport,
    caps: Caps,
    report: &'a mut Report,
}

fn pipeline(
    input: InputArgs,
    handler: impl FnOnce(&mut PipelineContext) -> Result<i32, Failure>,
) -> Result<Outcome, Failure> {
    let caps = resolve_caps(input.cap)?;
    let started = Instant::now();
    let (ideal, descriptor) = load_ideal(&input.input)?;
    let decomposition = minimal_primes_capped(&ideal, caps.cover)?;
    let base = waldschmidt_report_from(&decomposition);
    let mut report = Report::new(descriptor, &decomposition, &base);
    let mut ctx = PipelineContext {
        ideal: &ideal,
        decomposition: &decomposition,
        base: &base,
        caps,
        report: &mut report,
    };
    let code = handler(&mut ctx)?;
    report.elapsed = started.elapsed();
    let stdout = if input.json {
        report.to_json()
    } else {
        report.to_human(&base, &decomposition)
    };
    Ok(Outcome { stdout, stderr: String::new(), code })
}

fn load_ideal(tokens: &[String]) -> Result<(SquarefreeIdeal, String), Failure> {
    if tokens[0] == "family" {
        let instance = family_from_spec(&tokens[1..])?;
        Ok((instance.ideal, tokens.join(" ")))
    } else if tokens.len() == 1 {
        let path = &tokens[0];
        let text = fs::read_to_string(path)
            .map_err(|e| Failure::input(format!("cannot read {path}: {e}")))?;
        let ideal = parse_ideal(&text).map_err(|e| Failure::input(format!("{path}: {e}")))?;
        let squarefree = SquarefreeIdeal::from_ideal(ideal)
            .map_err(|_| Failure::input(format!("{path}: input ideal is not squarefree")))?;
        Ok((squarefree, path.clone()))
    } else {
        Err(Failure::input(
            "input must be one file path or `family <name> <params...>`",
        ))
    }
}

fn parse_usize(token: &str, what: &str) -> Result<usize, Failure> {
    token
        .parse()
        .map_err(|_| Failure::input(format!("{what} must be a non-negative integer, got {token:?}")))
}

fn family_from_spec(spec: &[String]) -> Result<FamilyInstance, Failure> {
    let (name, params) = match spec {
        [] => return Err(Failure::input("family spec needs a name; try `family list`")),
        [name, params @ ..] => (name.as_str(), params),
    };
    let wrong_arity = |expected: &str| {
        Failure::input(format!("family {name} takes {expected}; try `family list`"))
    };
    let instance = match name {
        "cycle" => match params {
            [n] => cycle_ideal(parse_usize(n, "n")?),
            _ => return Err(wrong_arity("one parameter <n>")),
        },
        "complement" => match params {
            [n] => cycle_complement_ideal(parse_usize(n, "n")?),
            _ => return Err(wrong_arity("one parameter <n>")),
        },
        "bipyramid" => match params {
            [n] => bipyramid_ideal(parse_usize(n, "n")?),
            _ => return Err(wrong_arity("one parameter <n>")),
        },
        "star" => match params {
            [n] => monomial_star_ideal(parse_usize(n, "n")?),
            _ => return Err(wrong_arity("one parameter <n>")),
        },
        "matroid" => match params {
            [vertices, c] => {
                uniform_matroid_ideal(parse_usize(vertices, "vertices")?, parse_usize(c, "c")?)
            }
            _ => return Err(wrong_arity("two parameters <vertices> <c>")),
        },
        "linear" => match params {
            [s, t, n] => general_linear_ideal(
                parse_usize(s, "s")?,
                parse_usize(t, "t")?,
                parse_usize(n, "n")?,
            ),
            _ => return Err(wrong_arity("three parameters <s> <t> <n>")),
        },
        "multipartite" => match params {
            [parts] => {
                let sizes: Result<Vec<usize>, Failure> = parts
                    .split(',')
                    .map(|p| parse_usize(p.trim(), "part size"))
                    .collect();
                complete_multipartite_ideal(&sizes?)
            }
            _ => return Err(wrong_arity("one parameter <a,b,...>")),
        },
        other => {
            return Err(Failure::input(format!(
                "unknown family {other:?}; try `family list`"
            )))
        }
    };
    instance.map_err(Failure::from)
}

fn parse_window(raw: &str) -> Result<(u32, u32), Failure> {
    let parts: Vec<&str> = raw.split(',').collect();
    if parts.len() != 2 {
        return Err(Failure::input(format!("window must be \"M,R\", got {raw:?}")));
    }
    let m: u32 = parts[0]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("bad window bound {:?}", parts[0])))?;
    let r: u32 = parts[1]
        .trim()
        .parse()
        .map_err(|_| Failure::input(format!("bad window bound {:?}", parts[1])))?;
    if m == 0 || r == 0 {
        return Err(Failure::input("window bounds must be positive"));
    }
    Ok((m, r))
}

enum CheckStatus {
    Pass(String),
    Fail(String),
    Skip(String),
}

fn run_verify(
    ctx: &mut PipelineContext,
    suite: Suite,
    m: Option<u32>,
    window: Option<(u32, u32)>,
) -> Result<i32, Failure> {
    let suites: Vec<Suite> = match suite {
        Suite::All => vec![
            Suite::Thm46,
            Suite::Chudnovsky,
            Suite::GraphBounds,
            Suite::AlphaRatio,
            Suite::Binomial,
        ],
        single => vec![single],
    };
    let mut failed = false;
    for s in suites {
        let (label, status) = match s {
            Suite::Thm46 => ("thm46", verify_chi_star(ctx)),
            Suite::Chudnovsky => ("chudnovsky", verify_chudnovsky(ctx)),
            Suite::GraphBounds => ("graph-bounds", verify_graph_bounds(ctx)),
            Suite::AlphaRatio => ("alpha-ratio", verify_alpha_ratio(ctx, window)?),
            Suite::Binomial => ("binomial", verify_binomial(ctx, m)?),
            Suite::All => unreachable!("flattened above"),
        };
        let (word, detail) = match &status {
            CheckStatus::Pass(d) => ("pass", d.clone()),
            CheckStatus::Fail(d) => ("FAIL", d.clone()),
            CheckStatus::Skip(d) => ("skip", d.clone()),
        };
        ctx.report.push_result(json!({
            "kind": "verify",
            "suite": label,
            "status": word.to_lowercase(),
            "detail": detail,
        }));
        ctx.report.push_line(format!("check {label}: {} ({detail})", word.to_uppercase()));
        if matches!(status, CheckStatus::Fail(_)) {
            failed = true;
        }
    }
    Ok(if failed { EXIT_VIOLATION } else { EXIT_OK })
}

fn verify_chi_star(ctx: &PipelineContext) -> CheckStatus {
    if !ctx.ideal.has_nontrivial_edge() {
        return CheckStatus::Skip("no edge of size two or more".into());
    }
    let alpha_hat = &ctx.base.alpha_hat;
    let chi_star = fractional_chromatic_number_from(ctx.decomposition);
    let (rhs, chi_text) = match &chi_star {
        ChiStar::Finite(q) => (q / (q - ratio(1, 1)), rat_str(q)),
        ChiStar::Infinite => (ratio(1, 1), "infinite".to_string()),
    };
    if alpha_hat == &rhs {
        CheckStatus::Pass(format!(
            "alpha-hat {} = chi*/(chi*-1) with chi* = {chi_text}",
            rat_str(alpha_hat)
        ))
    } else {
        CheckStatus::Fail(format!(
            "alpha-hat {} but chi*/(chi*-1) = {} with chi* = {chi_text}",
            rat_str(alpha_hat),
            rat_str(&rhs)
        ))
    }
}

fn verify_chudnovsky(ctx: &PipelineContext) -> CheckStatus {
    let check = chudnovsky_check_from(ctx.decomposition);
    let tightness = if check.tight { ", tight" } else { "" };
    if check.holds {
        CheckStatus::Pass(format!(
            "alpha-hat {} >= bound {}{tightness}",
            rat_str(&check.alpha_hat),
            rat_str(&check.bound)
        ))
    } else {
        CheckStatus::Fail(format!(
            "alpha-hat {} < bound {}",
            rat_str(&check.alpha_hat),
            rat_str(&check.bound)
        ))
    }
}

fn verify_graph_bounds(ctx: &PipelineContext) -> CheckStatus {
    match graph_bounds(ctx.ideal) {
        Err(Error::NotAGraph) => CheckStatus::Skip("not the edge ideal of a graph".into()),
        Err(e) => CheckStatus::Fail(e.to_string()),
        Ok(b) => {
            let detail = format!(
                "chi = {}, omega = {}: {} <= {} <= {}",
                b.chromatic_number,
                b.clique_number,
                rat_str(&b.lower),
                rat_str(&b.alpha_hat),
                rat_str(&b.upper)
            );
            if b.sandwich_holds && b.refinement_holds {
                CheckStatus::Pass(detail)
            } else {
                CheckStatus::Fail(detail)
            }
        }
    }
}

fn verify_alpha_ratio(
    ctx: &PipelineContext,
    window: Option<(u32, u32)>,
) -> Result<CheckStatus, Failure> {
    let (m_max, r_max) = window.unwrap_or((6, 4));
    let est = resurgence_search_capped(
        ctx.decomposition,
        ctx.ideal.ideal(),
        m_max,
        r_max,
        ctx.caps.generators,
    )?;
    let detail = format!(
        "alpha/alpha-hat = {} <= lower bound {} (window ({m_max}, {r_max}), {} non-containments)",
        rat_str(&est.alpha_ratio),
        rat_str(&est.lower_bound),
        est.non_containments.len()
    );
    Ok(if est.alpha_ratio <= est.lower_bound && est.alpha_ratio >= ratio(1, 1) {
        CheckStatus::Pass(detail)
    } else {
        CheckStatus::Fail(detail)
    })
}

fn verify_binomial(ctx: &PipelineContext, m: Option<u32>) -> Result<CheckStatus, Failure> {
    let m = m.unwrap_or(2);
    if m == 0 {
        return Err(Failure::input("--m must be positive"));
    }
    // rebuild the input on a context extended by two fresh variables and
    // check the expansion against the disjoint companion edge
    let ctx_old = ctx.ideal.context();
    let mut names: Vec<String> = ctx_old.names().to_vec();
    let fresh = fresh_names(ctx_old, 2);
    names.extend(fresh.iter().cloned());
    let extended = VariableContext::new(names).map_err(Failure::from)?;
    let gens: Vec<Monomial> = ctx
        .ideal
        .generators()
        .iter()
        .map(|g| {
            let mut exps = g.exponents().to_vec();
            exps.extend([0, 0]);
            Monomial::new(&extended, exps).expect("padded exponents")
        })
        .collect();
    let lifted = SquarefreeIdeal::new(&extended, gens).map_err(Failure::from)?;
    let companion = SquarefreeIdeal::new(
        &extended,
        vec![Monomial::squarefree(&extended, &[extended.len() - 2, extended.len() - 1])
            .map_err(Failure::from)?],
    )
    .map_err(Failure::from)?;
    let equal = symbolic_binomial_check_capped(&lifted, &companion, m, ctx.caps.generators)?;
    let companion_name = format!("{}*{}", fresh[0], fresh[1]);
    Ok(if equal {
        CheckStatus::Pass(format!(
            "expansion of (I + <{companion_name}>)^({m}) matches term by term"
        ))
    } else {
        CheckStatus::Fail(format!(
            "expansion of (I + <{companion_name}>)^({m}) disagrees"
        ))
    })
}

fn fresh_names(ctx: &std::sync::Arc<VariableContext>, count: usize) -> Vec<String> {
    let mut out = Vec::with_capacity(count);
    let mut k = 1usize;
    while out.len() < count {
        let candidate = format!("z{k}");
        if ctx.index_of(&candidate).is_none() {
            out.push(candidate);
        }
        k += 1;
    }
    out
}

fn family_command(action: FamilyAction) -> Result<Outcome, Failure> {
    match action {
        FamilyAction::List => {
            let mut out = String::new();
            out.push_str("available families:\n");
            out.push_str("  cycle <n>                edge ideal of the n-cycle (n >= 3)\n");
            out.push_str("  multipartite <a,b,...>   complete multipartite graph with those part sizes\n");
            out.push_str("  complement <n>           complement of the odd n-cycle (odd n >= 5)\n");
            out.push_str("  bipyramid <n>            Stanley-Reisner ideal of the n-gon bipyramid (n >= 4)\n");
            out.push_str("  matroid <vertices> <c>   uniform matroid ideal: all squarefree monomials of degree vertices+1-c\n");
            out.push_str("  star <n>                 monomial star on x0..xn (n >= 2)\n");
            out.push_str("  linear <s> <t> <n>       s general (t-1)-dimensional subspaces in projective n-space (s*t <= n+1)\n");
            Ok(Outcome::ok(out))
        }
        FamilyAction::Emit { spec } => {
            let instance = family_from_spec(&spec)?;
            let mut out = format!("# family {}\n# {}\n", spec.join(" "), instance.provenance);
            if let Some(v) = &instance.expected_alpha_hat {
                out.push_str(&format!("# expected alpha-hat: {}\n", rat_str(v)));
            }
            if let Some(v) = &instance.expected_resurgence {
                out.push_str(&format!("# expected resurgence: {}\n", rat_str(v)));
            }
            out.push_str(&format_ideal(instance.ideal.ideal()));
            Ok(Outcome::ok(out))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Outcome {
        execute(args.iter().map(|s| s.to_string()))
    }

    #[test]
    fn alpha_hat_family_cycle() {
        let out = run_args(&["waldkit", "alpha-hat", "family", "cycle", "5"]);
        assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
        assert!(out.stdout.contains("alpha-hat: 5/3"), "{}", out.stdout);
    }

    #[test]
    fn unknown_family_is_an_input_error() {
        let out = run_args(&["waldkit", "alpha-hat", "family", "tesseract", "4"]);
        assert_eq!(out.code, EXIT_INPUT);
        assert!(out.stderr.contains("unknown family"));
    }

    #[test]
    fn verify_failing_window_parse() {
        let out = run_args(&["waldkit", "resurgence-scan", "family", "star", "2", "--window", "6"]);
        assert_eq!(out.code, EXIT_INPUT);
    }

    #[test]
    fn cap_exhaustion_exits_three() {
        let out = run_args(&[
            "waldkit",
            "containment",
            "family",
            "star",
            "3",
            "--m",
            "6",
            "--r",
            "2",
            "--cap",
            "4",
        ]);
        assert_eq!(out.code, EXIT_CAP, "{}", out.stderr);
    }

    #[test]
    fn help_exits_zero() {
        let out = run_args(&["waldkit", "--help"]);
        assert_eq!(out.code, EXIT_OK);
        assert!(out.stdout.contains("waldkit"));
    }
}
