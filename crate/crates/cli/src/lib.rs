//! Command-line front end for `superalg`: JSON (or CSV) reports on the
//! constructions, and the `verify` runner for the acceptance suites.

pub mod verify;

use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use superalg::brauer::{affine_graded_rank, brauer_algebra, BrauerError, Variant};
use superalg::coeffs::{Fp, Rational, Scalar, SparseVec, Zp};
use superalg::combin::ColoredComposition;
use superalg::qhs::{cyclotomic_close, Qhs, QhsError, DEFAULT_Y_CAP};
use superalg::rootdata::{flatten, word_factorial, RootError, RootSystem};
use superalg::schur::{degree_zero_dims, generated_subalgebra, schur_s, schur_t, SchurError};
use superalg::spinblocks::{block_decomposition, SpinError};
use superalg::superkernel::BiDegree;

/// Version tag carried by every JSON report.
pub const SCHEMA: &str = "superalg.cli/1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "superalg", version, about = "Exact computations with graded superalgebras")]
struct Cli {
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RingKind {
    #[value(name = "Q")]
    Q,
    #[value(name = "Fp")]
    Fp,
    #[value(name = "Zp")]
    Zp,
}

#[derive(Args, Debug, Clone, Copy)]
struct RingArgs {
    /// Coefficient ring.
    #[arg(long, value_enum, default_value_t = RingKind::Q)]
    ring: RingKind,
    /// Prime for Fp and Zp (3, 5, 7, 11 or 13).
    #[arg(long)]
    p: Option<u64>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Brauer tree superalgebras and their affinizations.
    #[command(subcommand)]
    Brauer(BrauerCmd),
    /// Generalized Schur superalgebras S and T.
    #[command(subcommand)]
    Schur(SchurCmd),
    /// Quiver Hecke superalgebras and cyclotomic quotients.
    #[command(subcommand)]
    Qhs(QhsCmd),
    /// Root lattice data: nuclei, RoCK weights, Gelfand–Graev words.
    #[command(subcommand)]
    Rootdata(RootCmd),
    /// Spin blocks of the twisted group algebra.
    #[command(subcommand)]
    Blocks(BlocksCmd),
    /// Run the acceptance suites and print a JSON summary.
    Verify(VerifyArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Std,
    Regraded,
}

#[derive(Subcommand, Debug)]
enum BrauerCmd {
    /// Structure constants of 𝖠_ℓ.
    Table {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_enum, default_value_t = VariantArg::Std)]
        variant: VariantArg,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Graded ranks of H_d(𝖠_ℓ), one row per degree.
    AffineRank {
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        d: usize,
        #[arg(long, default_value_t = 0)]
        min_degree: i64,
        #[arg(long)]
        max_degree: i64,
        /// Bound on the total z-degree; needs 4·cap > degree.
        #[arg(long)]
        cap: u32,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct SchurSize {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    ell: usize,
}

#[derive(Subcommand, Debug)]
enum SchurCmd {
    /// Ranks of S, T, the even part of T and the degree-zero part of T.
    Dims {
        #[command(flatten)]
        size: SchurSize,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Structure constants of T on the η basis.
    Basis {
        #[command(flatten)]
        size: SchurSize,
        #[command(flatten)]
        ring: RingArgs,
    },
    /// Generation of T by T⁰ and the elements 𝚒_{1,1}(x) and 𝚒^𝝀(x).
    CheckGen {
        #[command(flatten)]
        size: SchurSize,
        #[command(flatten)]
        ring: RingArgs,
    },
}

#[derive(Subcommand, Debug)]
enum QhsCmd {
    /// Graded dimensions of R_θ with the normal-form cross-check.
    Dims {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        theta: Vec<usize>,
        #[arg(long, default_value_t = 8)]
        maxdeg: i64,
        #[arg(long, default_value_t = DEFAULT_Y_CAP)]
        ycap: u32,
    },
    /// Degreewise ranks of the cyclotomic quotient H_θ.
    Close {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        theta: Vec<usize>,
        #[arg(long, default_value_t = 24)]
        maxdeg: i64,
        #[arg(long)]
        window: Option<usize>,
        #[command(flatten)]
        ring: RingArgs,
    },
}

#[derive(Subcommand, Debug)]
enum RootCmd {
    /// Nucleus and mass of θ.
    Nucleus {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        theta: Vec<usize>,
    },
    /// RoCK test for θ, or the smallest RoCK weight of a given mass.
    Rock {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_delimiter = ',', conflicts_with = "mass")]
        theta: Option<Vec<usize>>,
        #[arg(long, required_unless_present = "theta")]
        mass: Option<usize>,
        #[arg(long, default_value_t = 12)]
        max_height: usize,
    },
    /// Gelfand–Graev word of a colored composition.
    Ggword {
        #[arg(long)]
        ell: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        lambda: Vec<usize>,
        #[arg(long, value_delimiter = ',', required = true)]
        colors: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum BlocksCmd {
    /// Block decomposition of 𝒯_n over F_p.
    Decompose {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Quick,
    Full,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = SuiteArg::Quick)]
    suite: SuiteArg,
    /// Comma-separated check ids; all checks by default.
    #[arg(long, value_delimiter = ',')]
    only: Option<Vec<usize>>,
}

/// A failed command: exit code and message.
#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

macro_rules! guard_errors {
    ($($ty:ty => |$e:ident| $guard:expr;)*) => {
        $(impl From<$ty> for Failure {
            fn from($e: $ty) -> Self {
                let code = if $guard { EXIT_GUARD } else { EXIT_FAILED };
                Failure { code, message: $e.to_string() }
            }
        })*
    };
}

guard_errors! {
    RootError => |e| matches!(e, RootError::Guard(..));
    BrauerError => |e| matches!(e, BrauerError::CapInsufficient { .. } | BrauerError::CapExceeded { .. });
    SchurError => |e| matches!(e, SchurError::TooLarge { .. });
    QhsError => |e| matches!(e, QhsError::Guard(_) | QhsError::YCap { .. } | QhsError::CapInsufficient { .. } | QhsError::Root(RootError::Guard(..)));
    SpinError => |e| matches!(e, SpinError::Guard(_));
}

enum Report {
    Json(Value),
    /// Header and rows, printed as CSV or as a JSON array of objects.
    Table { meta: Value, header: Vec<&'static str>, rows: Vec<Vec<Value>> },
}

/// Runs the command line `argv` (including the program name), writing the
/// report to `out` and diagnostics to `err`; returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    let (report, code) = match dispatch(&cli.command) {
        Ok(r) => r,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            return f.code;
        }
    };
    let text = match (report, cli.format) {
        (Report::Json(v), Format::Json) => pretty(&v),
        (Report::Table { meta, header, rows }, Format::Json) => {
            let rows: Vec<Value> =
                rows.into_iter().map(|r| Value::Object(header.iter().map(|h| h.to_string()).zip(r).collect())).collect();
            let mut v = meta;
            v["rows"] = Value::Array(rows);
            pretty(&v)
        }
        (Report::Table { header, rows, .. }, Format::Csv) => {
            let mut s = header.join(",") + "\n";
            for r in rows {
                s += &r.iter().map(csv_cell).collect::<Vec<_>>().join(",");
                s.push('\n');
            }
            s
        }
        (Report::Json(_), Format::Csv) => {
            let _ = writeln!(err, "error: this command has no CSV form; use --format json");
            return EXIT_USAGE;
        }
    };
    let _ = write!(out, "{text}");
    code
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn csv_cell(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Dispatches `$body` with the scalar type `$S` chosen by the ring flags.
macro_rules! with_ring {
    ($ring:expr, $S:ident => $body:expr) => {{
        let r: RingArgs = $ring;
        match (r.ring, r.p) {
            (RingKind::Q, None) => {
                type $S = Rational;
                $body
            }
            (RingKind::Q, Some(_)) => Err(Failure::usage("--p is only meaningful with --ring Fp or Zp")),
            (RingKind::Fp, Some(3)) => {
                type $S = Fp<3>;
                $body
            }
            (RingKind::Fp, Some(5)) => {
                type $S = Fp<5>;
                $body
            }
            (RingKind::Fp, Some(7)) => {
                type $S = Fp<7>;
                $body
            }
            (RingKind::Fp, Some(11)) => {
                type $S = Fp<11>;
                $body
            }
            (RingKind::Fp, Some(13)) => {
                type $S = Fp<13>;
                $body
            }
            (RingKind::Zp, Some(3)) => {
                type $S = Zp<3>;
                $body
            }
            (RingKind::Zp, Some(5)) => {
                type $S = Zp<5>;
                $body
            }
            (RingKind::Zp, Some(7)) => {
                type $S = Zp<7>;
                $body
            }
            (RingKind::Zp, Some(11)) => {
                type $S = Zp<11>;
                $body
            }
            (RingKind::Zp, Some(13)) => {
                type $S = Zp<13>;
                $body
            }
            (_, None) => Err(Failure::usage("--ring Fp and --ring Zp need --p")),
            (_, Some(p)) => Err(Failure::usage(format!("--p {p} is not one of 3, 5, 7, 11, 13"))),
        }
    }};
}

fn dispatch(cmd: &Command) -> Result<(Report, i32), Failure> {
    let ok = |v: Value| Ok((Report::Json(v), EXIT_OK));
    match cmd {
        Command::Brauer(BrauerCmd::Table { ell, variant, ring }) => {
            let variant = match variant {
                VariantArg::Std => Variant::Std,
                VariantArg::Regraded => Variant::Regraded,
            };
            with_ring!(*ring, S => {
                let t = brauer_algebra::<S>(*ell, variant)?;
                ok(json!({
                    "schema": SCHEMA,
                    "command": "brauer table",
                    "ell": ell,
                    "variant": format!("{variant:?}").to_lowercase(),
                    "symmetrizing": t.validate_form().passes(),
                    "algebra": t.algebra.to_json(),
                }))
            })
        }
        Command::Brauer(BrauerCmd::AffineRank { ell, d, min_degree, max_degree, cap }) => {
            let mut rows = Vec::new();
            for m in *min_degree..=*max_degree {
                let rep = affine_graded_rank::<Rational>(*ell, *d, m, *cap)?;
                rows.push(vec![json!(m), json!(rep.span_rank), json!(rep.monomials)]);
            }
            let meta = json!({"schema": SCHEMA, "command": "brauer affine-rank", "ell": ell, "d": d, "cap": cap});
            Ok((Report::Table { meta, header: vec!["degree", "rank", "monomials"], rows }, EXIT_OK))
        }
        Command::Schur(sub) => schur(sub),
        Command::Qhs(QhsCmd::Dims { ell, theta, maxdeg, ycap }) => {
            let q = Qhs::<Rational>::new(*ell, theta, *ycap)?;
            let mut rows = Vec::new();
            let mut agree = true;
            for m in -maxdeg..=*maxdeg {
                let g = q.graded_dim(m)?;
                agree &= g.agrees();
                rows.push(vec![json!(m), json!(g.count), json!(g.rank), json!(g.agrees())]);
            }
            let meta = json!({"schema": SCHEMA, "command": "qhs dims", "ell": ell, "theta": theta, "agree": agree});
            Ok((Report::Table { meta, header: vec!["degree", "count", "rank", "agrees"], rows }, if agree { EXIT_OK } else { EXIT_FAILED }))
        }
        Command::Qhs(QhsCmd::Close { ell, theta, maxdeg, window, ring }) => with_ring!(*ring, S => {
            let h = cyclotomic_close::<S>(*ell, theta, *maxdeg, *window)?;
            let roots = RootSystem::new(*ell)?;
            let blocks: Vec<Value> = h.blocks.iter().map(|((a, b), r)| json!({"left": a, "right": b, "rank": r})).collect();
            ok(json!({
                "schema": SCHEMA,
                "command": "qhs close",
                "ring": S::ring().to_string(),
                "ell": ell,
                "theta": theta,
                "in_W": roots.nucleus_mass(theta)?.is_some(),
                "max_degree": h.max_degree,
                "min_degree": h.min_degree,
                "window": h.window,
                "stabilized": h.stabilized,
                "nonzero": h.nonzero,
                "total_rank": h.total_rank(),
                "ranks": h.ranks.iter().filter(|r| r.rank_r > 0).map(|r| json!({
                    "degree": r.degree, "rank_R": r.rank_r, "rank_I": r.rank_ideal, "rank_H": r.rank_h,
                })).collect::<Vec<_>>(),
                "blocks": blocks,
            }))
        }),
        Command::Rootdata(sub) => rootdata(sub),
        Command::Blocks(BlocksCmd::Decompose { n, p }) => {
            let report = match p {
                3 => serde_json::to_value(block_decomposition::<Fp<3>>(*n)?),
                5 => serde_json::to_value(block_decomposition::<Fp<5>>(*n)?),
                7 => serde_json::to_value(block_decomposition::<Fp<7>>(*n)?),
                11 => serde_json::to_value(block_decomposition::<Fp<11>>(*n)?),
                13 => serde_json::to_value(block_decomposition::<Fp<13>>(*n)?),
                _ => return Err(Failure::usage(format!("--p {p} is not one of 3, 5, 7, 11, 13"))),
            }
            .expect("serializable");
            let ok_all = ["complete", "orthogonal", "central", "matches_contents"].iter().all(|k| report[k] == true);
            let v = json!({"schema": SCHEMA, "command": "blocks decompose", "report": report});
            Ok((Report::Json(v), if ok_all { EXIT_OK } else { EXIT_FAILED }))
        }
        Command::Verify(args) => {
            let suite = match args.suite {
                SuiteArg::Quick => verify::Suite::Quick,
                SuiteArg::Full => verify::Suite::Full,
            };
            let only = args.only.clone().unwrap_or_default();
            if let Some(bad) = only.iter().find(|id| !verify::check_ids().contains(id)) {
                return Err(Failure::usage(format!("no check with id {bad}")));
            }
            let results = verify::run_suite(suite, &only);
            let code = if verify::all_passed(&results) { EXIT_OK } else { EXIT_FAILED };
            Ok((Report::Json(verify::summary(suite, &results)), code))
        }
    }
}

fn schur(cmd: &SchurCmd) -> Result<(Report, i32), Failure> {
    let ok = |v: Value| Ok((Report::Json(v), EXIT_OK));
    let head = |name: &str, size: &SchurSize, ring: String| {
        json!({"schema": SCHEMA, "command": name, "n": size.n, "d": size.d, "ell": size.ell, "ring": ring})
    };
    match cmd {
        SchurCmd::Dims { size, ring } => with_ring!(*ring, S => {
            let t = schur_t::<S>(size.n, size.d, size.ell)?;
            let s = schur_s::<S>(size.n, size.d, size.ell)?;
            let even = t.algebra.degrees().iter().filter(|d| d.parity == 0).count();
            let zero = t.algebra.indices_of_degree(BiDegree::ZERO).len();
            let mut v = head("schur dims", size, S::ring().to_string());
            v["rank_S"] = json!(s.rank());
            v["rank_T"] = json!(t.rank());
            v["rank_T0"] = json!(even);
            v["rank_T_deg0"] = json!(zero);
            v["rank_T_deg0_formula"] = json!(degree_zero_dims(size.n, size.d, size.ell) as u64);
            ok(v)
        }),
        SchurCmd::Basis { size, ring } => with_ring!(*ring, S => {
            let t = schur_t::<S>(size.n, size.d, size.ell)?;
            let mut v = head("schur basis", size, S::ring().to_string());
            v["eta_scale"] = json!(t.scale.iter().map(|&x| x as u64).collect::<Vec<_>>());
            v["algebra"] = t.algebra.to_json();
            ok(v)
        }),
        SchurCmd::CheckGen { size, ring } => with_ring!(*ring, S => {
            let t = schur_t::<S>(size.n, size.d, size.ell)?;
            let s = &t.schur;
            let zero: Vec<SparseVec<S>> = t.algebra.indices_of_degree(BiDegree::ZERO).into_iter().map(SparseVec::unit).collect();
            let a_rank = 4 * size.ell - 1;
            let mut rs = zero.clone();
            let mut la = zero.clone();
            for b in 0..a_rank {
                let x = SparseVec::unit(b);
                rs.push(t.from_xi(&s.i_rs(1, 1, &x)?)?);
                if size.n >= 2 && size.d >= 1 {
                    for lambda in superalg::schur::lambda_j(size.n - 1, size.d - 1, size.ell) {
                        la.push(t.from_xi(&s.i_la(&lambda, &x)?)?);
                    }
                }
            }
            let table = |seeds: &[SparseVec<S>]| {
                let rep = generated_subalgebra(&t.algebra, seeds);
                let ranks: Vec<Value> = rep.ranks.iter().map(|(d, (g, f))| json!({"degree": d.deg, "parity": d.parity, "generated": g, "rank_T": f})).collect();
                (rep.equal, ranks)
            };
            let (eq0, r0) = table(&zero);
            let (eq1, r1) = table(&rs);
            let (eq2, r2) = table(&la);
            let mut v = head("schur check-gen", size, S::ring().to_string());
            v["degree_zero"] = json!({"equal": eq0, "ranks": r0});
            v["i_11"] = json!({"equal": eq1, "ranks": r1});
            v["i_la"] = json!({"equal": eq2, "ranks": r2, "applicable": size.d <= size.n});
            ok(v)
        }),
    }
}

fn rootdata(cmd: &RootCmd) -> Result<(Report, i32), Failure> {
    let ok = |v: Value| Ok((Report::Json(v), EXIT_OK));
    match cmd {
        RootCmd::Nucleus { ell, theta } => {
            let roots = RootSystem::new(*ell)?;
            let label = roots.nucleus_mass(theta)?;
            let mut v = json!({"schema": SCHEMA, "command": "rootdata nucleus", "ell": ell, "theta": theta, "in_W": label.is_some()});
            if let Some(l) = label {
                v["rho"] = json!(l.rho);
                v["d"] = json!(l.d);
            }
            ok(v)
        }
        RootCmd::Rock { ell, theta, mass, max_height } => {
            let roots = RootSystem::new(*ell)?;
            let mut v = json!({"schema": SCHEMA, "command": "rootdata rock", "ell": ell});
            if let Some(theta) = theta {
                v["theta"] = json!(theta);
                v["rock"] = json!(roots.is_rock(theta)?);
                let cop: Vec<i64> = (0..roots.rank()).map(|i| roots.copairing(theta, i)).collect();
                v["copairings"] = json!(cop);
            } else if let Some(d) = mass {
                v["mass"] = json!(d);
                v["max_height"] = json!(max_height);
                v["smallest"] = json!(roots.smallest_rock(*d, *max_height));
            }
            ok(v)
        }
        RootCmd::Ggword { ell, lambda, colors } => {
            if lambda.len() != colors.len() {
                return Err(Failure::usage("--lambda and --colors need the same length"));
            }
            let roots = RootSystem::new(*ell)?;
            let cc = ColoredComposition { lambda: lambda.clone(), colors: colors.clone() };
            let word = roots.gg_word(&cc)?;
            let factorial: u128 = lambda.iter().zip(colors).map(|(&m, &j)| roots.gg_factorial(m, j)).product();
            ok(json!({
                "schema": SCHEMA,
                "command": "rootdata ggword",
                "ell": ell,
                "lambda": lambda,
                "colors": colors,
                "word": word.iter().map(|&(i, m)| json!([i, m])).collect::<Vec<_>>(),
                "flat": flatten(&word),
                "weight": roots.wt(&flatten(&word)),
                "factorial": factorial.to_string(),
                "divided_power_factorial": word_factorial(&word).to_string(),
            }))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("superalg").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn exit_codes() {
        assert_eq!(call(&["rootdata", "nucleus", "--ell", "1", "--theta", "2,1", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["blocks", "decompose", "--n", "9", "--p", "3"]).0, EXIT_GUARD);
        assert_eq!(call(&["schur", "dims", "--n", "1", "--d", "1", "--ell", "1", "--ring", "Fp"]).0, EXIT_USAGE);
        assert_eq!(call(&["rootdata", "nucleus", "--ell", "1", "--theta", "2,1", "--format", "csv"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, EXIT_OK);
    }
}
