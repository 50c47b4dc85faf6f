//! `zigzag`: command-line front end for algebra dumps, braid actions on
//! complexes, Poincaré polynomials, curve intersections, lifting, extension of
//! scalars, Grothendieck group matrices and the verification suites.
//!
//! Exit codes: 0 on success, 1 when a verification fails (a JSON failure
//! report goes to stderr), 2 on usage or input errors.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use zigzag::algebra::{build_type_a, build_type_b};
use zigzag::io::{complex_from_str, AnyComplex};
use zigzag::k0::{check_decat_square, rep_matrix};
use zigzag::verify::{self, SuiteReport, VerifyOptions};
use zigzag::{
    apply_word, extend, intersect, lift, poincare, AlgebraDump, AlgebraType, BraidWord, ComplexJson, Complexification,
    Curve, CurveJson, Field, GradedLaurent, ProjComplex,
};

#[derive(Parser)]
#[command(name = "zigzag", version, about = "Exact computations with zigzag algebras, braid actions and curves")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Side {
    A,
    B,
}

impl From<Side> for AlgebraType {
    fn from(s: Side) -> Self {
        match s {
            Side::A => AlgebraType::A,
            Side::B => AlgebraType::B,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Print the basis and multiplication table of an algebra.
    Dump {
        #[arg(long = "type", value_enum)]
        kind: Side,
        /// Type B rank, or the number of vertices for type A.
        #[arg(long)]
        rank: usize,
    },
    /// Apply a braid word to a complex (default: the sum of all projectives).
    Act {
        #[arg(long, value_enum, default_value_t = Side::B)]
        side: Side,
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        /// Complex to act on, as JSON.
        #[arg(long = "in", conflicts_with = "projective")]
        input: Option<PathBuf>,
        /// Act on a single indecomposable projective instead.
        #[arg(long)]
        projective: Option<usize>,
    },
    /// Minimize a complex by Gaussian elimination.
    Minimize {
        #[arg(long = "in")]
        input: PathBuf,
    },
    /// Poincaré polynomial of the morphism complex between two twisted projectives.
    Poincare {
        #[arg(long, value_enum, default_value_t = Side::B)]
        side: Side,
        #[arg(long)]
        rank: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        source_word: String,
        #[arg(long)]
        source: usize,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        target_word: String,
        #[arg(long)]
        target: usize,
    },
    /// Trigraded intersection number of two twisted basic curves.
    Intersect(IntersectArgs),
    /// Operations on trigraded curves.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Lift a twisted basic curve to the type A disc.
    Lift(CurveArgs),
    /// Extend scalars of a type B complex to the type A algebra.
    Extend {
        #[arg(long)]
        rank: Option<usize>,
        #[arg(long = "in")]
        input: PathBuf,
        /// Write the result here instead of stdout.
        #[arg(long = "out")]
        output: Option<PathBuf>,
    },
    /// Grothendieck group matrices.
    #[command(subcommand)]
    K0(K0Command),
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        #[arg(long, default_value_t = 2)]
        rank: usize,
        #[arg(long, value_enum, default_value_t = Side::B)]
        side: Side,
        /// Random samples for sampled suites.
        #[arg(long, default_value_t = 60)]
        samples: usize,
        #[arg(long, default_value_t = 2024)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum CurveCommand {
    /// Apply a braid word to a basic curve.
    Act(CurveArgs),
    /// Trigraded intersection number of two twisted basic curves.
    Intersect(IntersectArgs),
}

#[derive(Args)]
struct CurveArgs {
    /// Type B rank; defaults to the smallest rank the word and curve fit in.
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    word: String,
    /// Basic curve `bj`.
    #[arg(long)]
    base: String,
}

#[derive(Args)]
struct IntersectArgs {
    #[arg(long)]
    rank: Option<usize>,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    left_word: String,
    #[arg(long)]
    left: String,
    #[arg(long, default_value = "", allow_hyphen_values = true)]
    right_word: String,
    #[arg(long)]
    right: String,
}

#[derive(Subcommand)]
enum K0Command {
    /// Matrix of a generator (negative for its inverse) on the Grothendieck group.
    Matrix {
        #[arg(long, value_enum, default_value_t = Side::B)]
        side: Side,
        #[arg(long)]
        rank: usize,
        #[arg(long, allow_hyphen_values = true)]
        gen: i32,
    },
    /// Check that decategorified extension of scalars intertwines the two actions.
    VerifySquare {
        #[arg(long)]
        rank: usize,
    },
}

/// Failure of a check the user asked for, as opposed to bad input.
struct VerificationFailed(serde_json::Value);

enum Outcome {
    Done(String),
    Failed(String, VerificationFailed),
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Done(out)) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Ok(Outcome::Failed(out, VerificationFailed(report))) => {
            print!("{out}");
            eprintln!("{}", serde_json::to_string_pretty(&report).expect("serializable report"));
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    let out = match &cli.command {
        Command::Dump { kind, rank } => dump(fmt, *kind, *rank)?,
        Command::Act { side, rank, word, input, projective } => {
            act(fmt, *side, *rank, word, input.as_ref(), *projective)?
        }
        Command::Minimize { input } => match read_complex(input)? {
            AnyComplex::A(c) => render_complex(fmt, &c.minimize()),
            AnyComplex::B(c) => render_complex(fmt, &c.minimize()),
        },
        Command::Poincare { side, rank, source_word, source, target_word, target } => {
            let p = match side {
                Side::B => {
                    twisted_poincare(build_type_b(*rank)?, AlgebraType::B, source_word, *source, target_word, *target)?
                }
                Side::A => {
                    twisted_poincare(build_type_a(*rank)?, AlgebraType::A, source_word, *source, target_word, *target)?
                }
            };
            render_polynomial(fmt, &p)
        }
        Command::Intersect(args) | Command::Curve(CurveCommand::Intersect(args)) => curve_intersect(fmt, args)?,
        Command::Curve(CurveCommand::Act(args)) => {
            let c = twisted_curve(args)?;
            match fmt {
                Format::Json => to_json(&CurveJson::from_curve(&c)),
                Format::Text => format!("{c}\n"),
            }
        }
        Command::Lift(args) => {
            let m = lift(&twisted_curve(args)?)?;
            match fmt {
                Format::Json => {
                    let comps: Vec<CurveJson> = m.components().iter().map(CurveJson::from_curve).collect();
                    to_json(&json!({ "rank": m.rank(), "components": comps }))
                }
                Format::Text => m.components().iter().map(|c| format!("{c}\n")).collect(),
            }
        }
        Command::Extend { rank, input, output } => {
            let c = match read_complex(input)? {
                AnyComplex::B(c) => c,
                AnyComplex::A(_) => bail!("extension of scalars needs a type B complex"),
            };
            let n = c.algebra().vertices();
            if let Some(r) = rank {
                if *r != n {
                    bail!("--rank {r} does not match the rank {n} of the input complex");
                }
            }
            let extended = extend(&Complexification::new(n)?, &c)?;
            match output {
                Some(path) => {
                    let text = to_json(&ComplexJson::from(&extended));
                    std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?;
                    String::new()
                }
                None => render_complex(fmt, &extended),
            }
        }
        Command::K0(K0Command::Matrix { side, rank, gen }) => {
            let m = rep_matrix((*side).into(), *rank, *gen)?;
            match fmt {
                Format::Json => {
                    let rows: Vec<Vec<String>> =
                        m.rows.iter().map(|r| r.iter().map(|p| p.to_string()).collect()).collect();
                    to_json(
                        &json!({ "side": AlgebraType::from(*side).label(), "rank": rank, "generator": gen, "rows": rows }),
                    )
                }
                Format::Text => m.to_string(),
            }
        }
        Command::K0(K0Command::VerifySquare { rank }) => {
            let r = check_decat_square(*rank)?;
            let report = json!({
                "rank": r.rank,
                "ok": r.ok(),
                "generators": r.generators.iter().map(|(g, ok)| json!({ "generator": g, "ok": ok })).collect::<Vec<_>>(),
                "tensor_matches_homology": r.tensor_matches_homology,
            });
            let text = match fmt {
                Format::Json => to_json(&report),
                Format::Text => {
                    let mut s = String::new();
                    for (g, ok) in &r.generators {
                        writeln!(s, "generator {g}: {}", if *ok { "ok" } else { "FAILED" })?;
                    }
                    writeln!(
                        s,
                        "tensor matrix equals homology matrix: {}",
                        if r.tensor_matches_homology { "ok" } else { "FAILED" }
                    )?;
                    s
                }
            };
            if !r.ok() {
                return Ok(Outcome::Failed(
                    text,
                    VerificationFailed(json!({ "failed": ["k0-square"], "report": report })),
                ));
            }
            text
        }
        Command::Verify { suite, rank, side, samples, seed } => {
            let opts = VerifyOptions { rank: *rank, side: (*side).into(), samples: *samples, seed: *seed };
            return run_verify(fmt, suite, &opts);
        }
    };
    Ok(Outcome::Done(out))
}

fn run_verify(fmt: Format, suite: &str, opts: &VerifyOptions) -> Result<Outcome> {
    let reports = if suite == "all" {
        verify::run_all(opts)?
    } else {
        if !verify::SUITES.iter().any(|(name, _)| *name == suite) {
            let names: Vec<&str> = verify::SUITES.iter().map(|s| s.0).collect();
            bail!("unknown suite `{suite}`; expected `all` or one of {}", names.join(", "));
        }
        vec![verify::run(suite, opts)?]
    };
    let text = match fmt {
        Format::Json => to_json(&reports),
        Format::Text => reports.iter().map(render_report).collect(),
    };
    let failed: Vec<&SuiteReport> = reports.iter().filter(|r| !r.ok).collect();
    if failed.is_empty() {
        return Ok(Outcome::Done(text));
    }
    let failure = json!({
        "failed": failed.iter().map(|r| json!({
            "suite": r.suite,
            "claim": r.claim,
            "cases": r.failures().collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
    });
    Ok(Outcome::Failed(text, VerificationFailed(failure)))
}

fn render_report(r: &SuiteReport) -> String {
    let mut s = format!("{} ({}): {}\n", r.suite, r.claim, if r.ok { "ok" } else { "FAILED" });
    for c in &r.cases {
        let _ = write!(s, "  {} {}", if c.ok { "ok    " } else { "FAILED" }, c.name);
        if let (false, Some(d)) = (c.ok, &c.detail) {
            let _ = write!(s, ": {d}");
        }
        s.push('\n');
    }
    s
}

fn to_json<T: Serialize + ?Sized>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn dump(fmt: Format, kind: Side, rank: usize) -> Result<String> {
    let d = match kind {
        Side::B => AlgebraDump::from(&*build_type_b(rank)?),
        Side::A => AlgebraDump::from(&*build_type_a(rank)?),
    };
    Ok(match fmt {
        Format::Json => to_json(&d),
        Format::Text => {
            let mut s = format!("type {} rank {}: dimension {}\n", d.kind, d.rank, d.dim);
            for b in &d.basis {
                writeln!(
                    s,
                    "{:>3}  {:<12} {} -> {}  degree {}  parity {}",
                    b.index, b.name, b.source, b.target, b.degree, b.parity
                )?;
            }
            for p in &d.products {
                writeln!(s, "{} * {} = {}", p.left, p.right, p.result)?;
            }
            s
        }
    })
}

fn read_complex(path: &PathBuf) -> Result<AnyComplex> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(complex_from_str(&text)?)
}

fn render_complex<F: Field>(fmt: Format, c: &ProjComplex<F>) -> String {
    let j = ComplexJson::from(c);
    match fmt {
        Format::Json => to_json(&j),
        Format::Text => {
            let mut s = format!("complex over type {} with {} vertices\n", j.algebra.kind, j.algebra.rank);
            for g in &j.generators {
                let _ = writeln!(s, "  [{}] P{} r={} s={} t={}", g.id, g.vertex, g.r, g.s, g.t);
            }
            for e in &j.differential {
                let _ = writeln!(s, "  [{}] -> [{}]: {}", e.from, e.to, e.element);
            }
            s
        }
    }
}

fn render_polynomial(fmt: Format, p: &GradedLaurent) -> String {
    match fmt {
        Format::Json => to_json(&json!({ "polynomial": p.to_string() })),
        Format::Text => format!("{p}\n"),
    }
}

fn act(
    fmt: Format,
    side: Side,
    rank: usize,
    word: &str,
    input: Option<&PathBuf>,
    projective: Option<usize>,
) -> Result<String> {
    fn go<F: Field>(fmt: Format, w: &BraidWord, c: ProjComplex<F>) -> Result<String> {
        Ok(render_complex(fmt, &apply_word(w, &c)?.minimize()))
    }
    let kind: AlgebraType = side.into();
    let w = BraidWord::parse(kind, rank, word)?;
    match (side, input) {
        (_, Some(path)) => match read_complex(path)? {
            AnyComplex::B(c) if side == Side::B && c.algebra().vertices() == rank => go(fmt, &w, c),
            AnyComplex::A(c) if side == Side::A && c.algebra().vertices() == rank => go(fmt, &w, c),
            _ => bail!("the input complex is not over the type {} algebra of rank {rank}", kind.label()),
        },
        (Side::B, None) => {
            let alg = build_type_b(rank)?;
            go(
                fmt,
                &w,
                projective.map_or_else(
                    || Ok(ProjComplex::all_projectives(alg.clone())),
                    |j| alg.check_vertex(j).map(|_| ProjComplex::projective(alg.clone(), j)),
                )?,
            )
        }
        (Side::A, None) => {
            let alg = build_type_a(rank)?;
            go(
                fmt,
                &w,
                projective.map_or_else(
                    || Ok(ProjComplex::all_projectives(alg.clone())),
                    |j| alg.check_vertex(j).map(|_| ProjComplex::projective(alg.clone(), j)),
                )?,
            )
        }
    }
}

fn twisted_poincare<F: Field>(
    alg: std::sync::Arc<zigzag::ZigzagAlgebra<F>>,
    kind: AlgebraType,
    source_word: &str,
    source: usize,
    target_word: &str,
    target: usize,
) -> Result<GradedLaurent> {
    let rank = alg.vertices();
    alg.check_vertex(source)?;
    alg.check_vertex(target)?;
    let c = apply_word(&BraidWord::parse(kind, rank, source_word)?, &ProjComplex::projective(alg.clone(), source))?;
    let d = apply_word(&BraidWord::parse(kind, rank, target_word)?, &ProjComplex::projective(alg, target))?;
    Ok(poincare(&c, &d)?)
}

/// Parses a basic curve name `bj`.
fn basic_index(name: &str) -> Result<usize> {
    name.strip_prefix('b')
        .and_then(|j| j.parse::<usize>().ok())
        .filter(|&j| j >= 1)
        .ok_or_else(|| anyhow!("expected a basic curve `b1`, `b2`, …; got `{name}`"))
}

/// The rank given, or the smallest rank (at least 2) the words and curves fit in.
fn curve_rank(rank: Option<usize>, words: &[&str], curves: &[usize]) -> Result<usize> {
    if let Some(r) = rank {
        return Ok(r);
    }
    let mut n = curves.iter().copied().max().unwrap_or(0).max(2);
    for w in words {
        for t in w.split(|c: char| c.is_whitespace() || c == ',').filter(|t| !t.is_empty()) {
            let l: i32 = t.parse().map_err(|_| anyhow!("invalid braid letter `{t}`"))?;
            n = n.max(l.unsigned_abs() as usize);
        }
    }
    Ok(n)
}

fn twisted_curve(args: &CurveArgs) -> Result<Curve> {
    let j = basic_index(&args.base)?;
    let n = curve_rank(args.rank, &[&args.word], &[j])?;
    let w = BraidWord::parse(AlgebraType::B, n, &args.word)?;
    Ok(Curve::basic(n, j)?.act_word(&w)?)
}

fn curve_intersect(fmt: Format, args: &IntersectArgs) -> Result<String> {
    let (j, k) = (basic_index(&args.left)?, basic_index(&args.right)?);
    let n = curve_rank(args.rank, &[&args.left_word, &args.right_word], &[j, k])?;
    let w0 = BraidWord::parse(AlgebraType::B, n, &args.left_word)?;
    let w1 = BraidWord::parse(AlgebraType::B, n, &args.right_word)?;
    Ok(render_polynomial(fmt, &intersect(n, &w0, j, &w1, k)?))
}
