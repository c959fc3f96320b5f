//! `skewcodes`: command-line front end for skew constacyclic codes over
//! `Z_q + uZ_q` and their Gray images.

mod props;

use std::collections::HashSet;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use skewcodes::rcodes::{is_shift_closed, RCode, RCodeSpec};
use skewcodes::search::{reproduce_manifest, table1_twist, TABLE1_MANIFEST};
use skewcodes::skewpoly::DEFAULT_DIVISOR_CAP;
use skewcodes::zqlinalg::DEFAULT_CODEWORD_CAP;
use skewcodes::zqrcodes::{brute_dual_mixed, generator_from_parity, is_mixed_shift_closed, MixedCode};
use skewcodes::{
    exec, Automorphism, Error, Exec, GrayVariant, MixedCodeSpec, MixedWord, RingElem, RingParams, SkewRing, SpanRule,
    Twist, ZqPoly,
};

#[derive(Parser, Debug)]
#[command(name = "skewcodes", version, about = "Skew constacyclic codes over Z_q + uZ_q and their Gray images")]
struct Cli {
    /// Worker threads for enumeration-heavy work (1 = sequential).
    #[arg(long, global = true)]
    threads: Option<usize>,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Cap on any single enumeration (codewords, divisor candidates, dual scans).
    #[arg(long, global = true)]
    max_enum: Option<u128>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the automorphisms θ(a + ub) = (a + kb) + u(db) of R.
    Aut {
        #[arg(long, default_value_t = 4)]
        q: u32,
    },
    /// Right divisors h of x^β - λ, with x^β - λ = g ∗ h.
    Divisors {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        beta: usize,
        /// Degree of h.
        #[arg(long)]
        deg: usize,
    },
    /// Build the code generated by (g_α, g_β) and print its Gray image parameters.
    Build {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        alpha: usize,
        #[arg(long)]
        g_alpha: String,
        #[arg(long)]
        beta: usize,
        /// Parity check polynomial; g_β is recovered from x^β - λ = g ∗ h.
        #[arg(long)]
        h_beta: String,
        #[arg(long, value_enum, default_value_t = MapArg::Double)]
        map: MapArg,
        #[arg(long, default_value = "module")]
        span: SpanArg,
    },
    /// Reproduce the ten-row table of free quaternary codes.
    Table1 {
        /// Manifest file; the embedded one is used when omitted.
        #[arg(long)]
        manifest: Option<PathBuf>,
        #[arg(long, default_value = "module")]
        span: SpanArg,
    },
    /// Brute-force dual of a code over R (or Z_qR with --alpha) and its closure.
    Dual {
        #[command(flatten)]
        ring: RingArgs,
        #[arg(long)]
        beta: usize,
        /// Generator of the R block (must right-divide x^β - λ).
        #[arg(long)]
        g_beta: String,
        #[arg(long, default_value_t = 0)]
        alpha: usize,
        #[arg(long)]
        g_alpha: Option<String>,
    },
    /// Run the randomized invariant suites.
    Props {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random cases per suite.
        #[arg(long, default_value_t = 200)]
        cases: usize,
    },
}

#[derive(Args, Debug)]
struct RingArgs {
    #[arg(long, default_value_t = 4)]
    q: u32,
    /// Automorphism as `k,d`.
    #[arg(long, default_value = "0,1")]
    aut: String,
    /// Constacyclic constant in `l0+l1u` form.
    #[arg(long, default_value = "1")]
    lambda: String,
}

impl RingArgs {
    fn twist(&self) -> Result<Twist, Error> {
        let params = RingParams::from_modulus(self.q)?;
        let (k, d) = self
            .aut
            .split_once(',')
            .ok_or_else(|| Error::Parse {
                pos: 0,
                msg: "--aut expects k,d".into(),
            })?;
        let number = |text: &str, pos: usize| {
            text.trim().parse::<i64>().map_err(|_| Error::Parse {
                pos,
                msg: format!("'{text}' is not an integer"),
            })
        };
        let theta = Automorphism::new(params, number(k, 0)?, number(d, k.len() + 1)?)?;
        Twist::new(SkewRing::new(theta), params.parse_elem(&self.lambda)?)
    }
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MapArg {
    Double,
    Triple,
}

impl From<MapArg> for GrayVariant {
    fn from(m: MapArg) -> Self {
        match m {
            MapArg::Double => GrayVariant::Double,
            MapArg::Triple => GrayVariant::Triple,
        }
    }
}

/// `module`, `parity` (rows below deg h_β) or `shifts:N`.
#[derive(Clone, Copy, Debug)]
enum SpanArg {
    Module,
    Parity,
    Shifts(usize),
}

impl std::str::FromStr for SpanArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "module" => Ok(SpanArg::Module),
            "parity" => Ok(SpanArg::Parity),
            _ => s
                .strip_prefix("shifts:")
                .and_then(|n| n.parse().ok())
                .map(SpanArg::Shifts)
                .ok_or_else(|| format!("expected module, parity or shifts:N, got '{s}'")),
        }
    }
}

impl SpanArg {
    fn rule(self) -> SpanRule {
        match self {
            SpanArg::Module => SpanRule::Module,
            SpanArg::Parity => SpanRule::Parity,
            SpanArg::Shifts(n) => SpanRule::Shifts(n),
        }
    }
}

/// What a subcommand produced: printable text, a JSON value, and whether
/// every check passed.
struct Report {
    text: String,
    json: Value,
    ok: bool,
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::EnumerationCapExceeded { .. } => 3,
        Error::Parse { .. }
        | Error::InvalidRingParams(_)
        | Error::InvalidAutomorphism(_)
        | Error::UnsupportedVariant(_)
        | Error::NonUnitLambda
        | Error::LengthMismatch { .. }
        | Error::ManifestMissing(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.threads {
        exec::configure_threads(n.max(1));
    }
    let strategy = if cli.threads == Some(1) {
        Exec::Sequential
    } else {
        Exec::Parallel
    };
    match run(&cli, strategy) {
        Ok(report) => {
            match cli.format {
                Format::Text => println!("{}", report.text),
                Format::Json => println!("{}", report.json),
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(err) => {
            match cli.format {
                Format::Text => eprintln!("error: {err}"),
                Format::Json => println!("{}", json!({ "error": err.to_string() })),
            }
            ExitCode::from(exit_code(&err))
        }
    }
}

fn run(cli: &Cli, strategy: Exec) -> Result<Report, Error> {
    let cap = |default: u128| cli.max_enum.unwrap_or(default);
    match &cli.command {
        Command::Aut { q } => aut(*q),
        Command::Divisors { ring, beta, deg } => divisors(ring, *beta, *deg, cap(DEFAULT_DIVISOR_CAP), strategy),
        Command::Build {
            ring,
            alpha,
            g_alpha,
            beta,
            h_beta,
            map,
            span,
        } => {
            let twist = ring.twist()?;
            let g_alpha = ZqPoly::parse(g_alpha, twist.params())?;
            let h = twist.ring().parse(h_beta)?;
            let (g_beta, side) = generator_from_parity(&h, *beta, &twist)?;
            let spec = MixedCodeSpec::new(*alpha, *beta, twist, g_alpha, g_beta.clone())?;
            let code = MixedCode::build(&spec, span.rule());
            let image = code.gray_matrix((*map).into())?;
            let code_type = image.code_type();
            let d = image.min_lee_distance(cap(DEFAULT_CODEWORD_CAP), strategy)?;
            let n = image.cols();
            Ok(Report {
                text: format!("[{n},{code_type},{d}]\ng_beta = {}\nfactorisation: {side}", g_beta.pretty()),
                json: json!({
                    "n": n,
                    "k1": code_type.k1(),
                    "k2": code_type.k2(),
                    "type": code_type.to_string(),
                    "d": d,
                    "g_beta": g_beta.to_string(),
                    "side": side.to_string(),
                }),
                ok: true,
            })
        }
        Command::Table1 { manifest, span } => {
            let text = match manifest {
                Some(path) => std::fs::read_to_string(path)
                    .map_err(|e| Error::ManifestMissing(format!("{}: {e}", path.display())))?,
                None => TABLE1_MANIFEST.to_string(),
            };
            let report = reproduce_manifest(&text, &table1_twist(), span.rule(), cap(DEFAULT_CODEWORD_CAP), strategy)?;
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "row": r.row.row,
                        "line": r.row.line,
                        "expected": r.row.target.to_string(),
                        "measured": r.measured.as_ref().map(|m| m.to_string()),
                        "variant": r.variant.map(|v| v.to_string()),
                        "side": r.side.map(|s| s.to_string()),
                        "error": r.error,
                        "pass": r.passed(),
                    })
                })
                .collect();
            Ok(Report {
                text: report.to_string(),
                json: json!({ "rows": rows, "passed": report.passed(), "total": report.rows.len() }),
                ok: report.all_passed(),
            })
        }
        Command::Dual {
            ring,
            beta,
            g_beta,
            alpha,
            g_alpha,
        } => dual(ring, *beta, g_beta, *alpha, g_alpha.as_deref(), cap(1 << 24), strategy),
        Command::Props { seed, cases } => {
            let results = props::run_all(*seed, *cases, strategy);
            let ok = results.iter().all(|r| r.failures == 0);
            let text = results
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join("\n");
            let json = json!({
                "seed": seed,
                "suites": results.iter().map(|r| json!({
                    "name": r.name,
                    "cases": r.cases,
                    "failures": r.failures,
                })).collect::<Vec<_>>(),
            });
            Ok(Report { text, json, ok })
        }
    }
}

fn aut(q: u32) -> Result<Report, Error> {
    let params = RingParams::from_modulus(q)?;
    let all = Automorphism::all(params);
    let text = all
        .iter()
        .map(|t| format!("({},{}) order {}", t.k(), t.d(), t.order()))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "q": q,
        "automorphisms": all.iter().map(|t| json!({"k": t.k(), "d": t.d(), "order": t.order()})).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, ok: true })
}

fn divisors(ring: &RingArgs, beta: usize, deg: usize, cap: u128, strategy: Exec) -> Result<Report, Error> {
    let twist = ring.twist()?;
    let pairs = twist
        .ring()
        .right_divisor_pairs(beta, twist.lambda(), deg, cap, strategy)?;
    let text = pairs
        .iter()
        .map(|(g, h)| format!("h = {}  g = {}", h, g))
        .chain(std::iter::once(format!("{} divisors", pairs.len())))
        .collect::<Vec<_>>()
        .join("\n");
    let json = json!({
        "count": pairs.len(),
        "pairs": pairs.iter().map(|(g, h)| json!({"h": h.to_string(), "g": g.to_string()})).collect::<Vec<_>>(),
    });
    Ok(Report { text, json, ok: true })
}

fn dual(
    ring: &RingArgs,
    beta: usize,
    g_beta: &str,
    alpha: usize,
    g_alpha: Option<&str>,
    cap: u128,
    strategy: Exec,
) -> Result<Report, Error> {
    let twist = ring.twist()?;
    let params = twist.params();
    let g = twist.ring().parse(g_beta)?;
    let inverse = twist.inverse();
    let central = twist.is_central_for(beta);
    if alpha == 0 {
        let code = RCode::build(RCodeSpec::new(beta, twist, g)?, cap)?;
        let dual: HashSet<Vec<RingElem>> = code.brute_dual(cap, strategy)?.into_iter().collect();
        let closed = is_shift_closed(&dual, &inverse);
        return Ok(Report {
            text: format!(
                "|C| = {}, |C^perp| = {}, dual closed under the lambda^-1 shift: {closed}",
                code.len(),
                dual.len()
            ),
            json: json!({"size": code.len(), "dual_size": dual.len(), "dual_closed": closed, "central": central}),
            ok: closed || !central,
        });
    }
    let g_alpha = ZqPoly::parse(g_alpha.unwrap_or("1"), params)?;
    let spec = MixedCodeSpec::new(alpha, beta, twist, g_alpha, g)?;
    let code = MixedCode::build(&spec, SpanRule::Module);
    let dual: HashSet<MixedWord> = brute_dual_mixed(&params, alpha, beta, &code.rows(), cap, strategy)?
        .into_iter()
        .collect();
    let closed = is_mixed_shift_closed(&dual, &inverse);
    // closure of the dual is only guaranteed for separable codes
    let words = code.words(cap)?;
    let left: HashSet<&Vec<u32>> = words.iter().map(|w| &w.zq).collect();
    let right: HashSet<&Vec<RingElem>> = words.iter().map(|w| &w.r).collect();
    let separable = left.len() * right.len() == words.len();
    Ok(Report {
        text: format!(
            "|C| = {}, separable: {separable}, |C^perp| = {}, dual closed under the lambda^-1 mixed shift: {closed}",
            code.size(),
            dual.len()
        ),
        json: json!({
            "size": words.len(),
            "separable": separable,
            "dual_size": dual.len(),
            "dual_closed": closed,
            "central": central,
        }),
        ok: closed || !central || !separable,
    })
}
