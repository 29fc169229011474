//! The `roofcalc` command line.
//!
//! [`run`] does all the work and returns the exit status together with what
//! should go to stdout and stderr, so the binary stays a thin shell and tests
//! can drive the CLI in-process.
//!
//! Exit codes: 0 success, 1 `roof verify` without a non-trivial certificate,
//! 2 invalid input, 3 resource cap exceeded.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::bwb::{bwb, CohomologyResult};
use crate::error::Result;
use crate::motive::{class_from_lengths, igr_point_count, LPolynomial};
use crate::reps::weyl_dimension;
use crate::roofs::{catalog, verify_roof, RoofLabel};
use crate::rootsys::{CartanType, RootSystem, Weight};
use crate::serde_big::Big;
use crate::weyl::{length_histogram, CosetCache, ParabolicSubgroup, DEFAULT_CAP};

pub const CAP_ENV: &str = "ROOFCALC_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(
    name = "roofcalc",
    version,
    about = "Exact computations for homogeneous roofs"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Enumeration cap (overrides ROOFCALC_CAP).
    #[arg(long, global = true)]
    cap: Option<usize>,
    /// Directory for cached coset enumerations.
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct Group {
    /// Cartan type: A, C, D, F (or F4), G (or G2).
    ty: CartanType,
    rank: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Dump a root system: Cartan matrix, symmetrizer, rho and positive roots.
    Roots {
        #[command(flatten)]
        group: Group,
    },
    /// Weyl group computations relative to a parabolic subgroup.
    Weyl {
        #[command(subcommand)]
        command: WeylCommand,
    },
    /// Representations of the Levi factor (the whole group by default).
    Rep {
        #[command(subcommand)]
        command: RepCommand,
    },
    /// Borel–Weil–Bott for E_P(weight) on G/P.
    Bwb {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_delimiter = ',', required = true)]
        cross: Vec<usize>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
    /// Classes in the Grothendieck ring.
    Class {
        #[command(subcommand)]
        command: ClassCommand,
    },
    /// Finite-field point counts.
    Count {
        #[command(subcommand)]
        command: CountCommand,
    },
    /// Homogeneous roofs.
    Roof {
        #[command(subcommand)]
        command: RoofCommand,
    },
}

#[derive(Subcommand, Debug)]
enum WeylCommand {
    /// Minimal coset representatives of W / W_P and their lengths.
    Cosets {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_delimiter = ',', required = true)]
        cross: Vec<usize>,
        /// Also list a reduced word for every representative.
        #[arg(long)]
        words: bool,
    },
    /// Orbit of a weight under W_P.
    Orbit {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_delimiter = ',', required = true)]
        cross: Vec<usize>,
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
    },
}

#[derive(Subcommand, Debug)]
enum RepCommand {
    /// Weyl dimension of the irreducible representation with this highest weight.
    Dim {
        #[command(flatten)]
        group: Group,
        #[arg(long, allow_hyphen_values = true)]
        weight: Weight,
        /// Crossed nodes; the representation is then one of the Levi factor.
        #[arg(long, value_delimiter = ',')]
        cross: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum ClassCommand {
    /// Class of G/P as a polynomial in L.
    Quotient {
        #[command(flatten)]
        group: Group,
        #[arg(long, value_delimiter = ',', required = true)]
        cross: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum CountCommand {
    /// Number of F_q-points of the isotropic Grassmannian IGr(d, 2n).
    Igr { d: usize, n: usize, q: u64 },
}

#[derive(Subcommand, Debug)]
enum RoofCommand {
    /// Print the roof catalog.
    List,
    /// Run the full pipeline for one roof.
    Verify {
        /// AxA, A_M, A_G, C, D, F4 or G2.
        family: String,
        #[arg(long = "r")]
        r: Option<usize>,
    },
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, stderr: String) -> Self {
        Outcome {
            code,
            stdout: String::new(),
            stderr,
        }
    }
}

/// Parses `argv` (program name first) and runs it, reading the cap from the
/// process environment.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    run_with_env_cap(argv, std::env::var(CAP_ENV).ok().as_deref())
}

/// Like [`run`] with an explicit value standing in for `ROOFCALC_CAP`.
pub fn run_with_env_cap<I, T>(argv: I, env_cap: Option<&str>) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    Outcome::ok(text)
                }
                _ => Outcome::fail(2, text),
            };
        }
    };
    let cap = match (cli.cap, env_cap) {
        (Some(c), _) => c,
        (None, Some(s)) => match s.trim().parse::<usize>() {
            Ok(c) => c,
            Err(_) => {
                return Outcome::fail(
                    2,
                    format!("error: {CAP_ENV}={s} is not a non-negative integer\n"),
                )
            }
        },
        (None, None) => DEFAULT_CAP,
    };
    let ctx = Ctx {
        format: cli.format,
        cap,
        cache: cli.cache_dir.map(CosetCache::new),
    };
    match dispatch(&ctx, cli.command) {
        Ok(out) => out,
        Err(e) => {
            let code = if e.is_resource_limit() { 3 } else { 2 };
            Outcome::fail(code, format!("error: {e}\n"))
        }
    }
}

struct Ctx {
    format: Format,
    cap: usize,
    cache: Option<CosetCache>,
}

impl Ctx {
    fn emit(&self, text: String, value: Value) -> Outcome {
        match self.format {
            Format::Text => Outcome::ok(text),
            Format::Json => {
                let mut s =
                    serde_json::to_string_pretty(&value).expect("json values always serialize");
                s.push('\n');
                Outcome::ok(s)
            }
        }
    }

    fn coset_lengths(&self, p: &ParabolicSubgroup) -> Result<Vec<u32>> {
        match &self.cache {
            Some(cache) => cache.coset_lengths(p, self.cap),
            None => p.coset_lengths(self.cap),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("engine types always serialize")
}

fn parabolic(group: &Group, cross: &[usize]) -> Result<ParabolicSubgroup> {
    let sys = Arc::new(RootSystem::build(group.ty, group.rank)?);
    ParabolicSubgroup::new(sys, cross)
}

fn dispatch(ctx: &Ctx, cmd: Command) -> Result<Outcome> {
    match cmd {
        Command::Roots { group } => roots(ctx, &group),
        Command::Weyl {
            command:
                WeylCommand::Cosets {
                    group,
                    cross,
                    words,
                },
        } => cosets(ctx, &group, &cross, words),
        Command::Weyl {
            command:
                WeylCommand::Orbit {
                    group,
                    cross,
                    weight,
                },
        } => {
            let p = parabolic(&group, &cross)?;
            let orbit = p.orbit(&weight, ctx.cap)?;
            let mut text = String::new();
            for w in &orbit {
                writeln!(text, "{w}").unwrap();
            }
            let value = json!({
                "group": p.root_system().label(),
                "crossed": p.crossed(),
                "weight": to_json(&weight),
                "size": orbit.len(),
                "orbit": to_json(&orbit),
            });
            Ok(ctx.emit(text, value))
        }
        Command::Rep {
            command:
                RepCommand::Dim {
                    group,
                    weight,
                    cross,
                },
        } => {
            let sys = Arc::new(RootSystem::build(group.ty, group.rank)?);
            let p = if cross.is_empty() {
                ParabolicSubgroup::full(sys)
            } else {
                ParabolicSubgroup::new(sys, &cross)?
            };
            let dim = weyl_dimension(&p, &weight)?;
            let value = json!({
                "group": p.root_system().label(),
                "crossed": p.crossed(),
                "weight": to_json(&weight),
                "dimension": to_json(&Big(dim.clone())),
            });
            Ok(ctx.emit(format!("{dim}\n"), value))
        }
        Command::Bwb {
            group,
            cross,
            weight,
        } => {
            let p = parabolic(&group, &cross)?;
            let res = bwb(&p, &weight)?;
            let text = match &res {
                CohomologyResult::Vanishes => "all cohomology vanishes\n".to_string(),
                CohomologyResult::Single { degree, g_highest_weight, dimension } => format!(
                    "H^{degree} = V({g_highest_weight})^*, dimension {dimension}; all other degrees vanish\n"
                ),
            };
            let value = json!({
                "group": p.root_system().label(),
                "crossed": p.crossed(),
                "weight": to_json(&weight),
                "result": to_json(&res),
            });
            Ok(ctx.emit(text, value))
        }
        Command::Class {
            command: ClassCommand::Quotient { group, cross },
        } => {
            let p = parabolic(&group, &cross)?;
            let class = class_from_lengths(&ctx.coset_lengths(&p)?);
            let value = json!({
                "group": p.root_system().label(),
                "crossed": p.crossed(),
                "dimension": p.quotient_dimension(),
                "coefficients": to_json(&class),
                "coefficient_sum": to_json(&crate::serde_big::BigSigned(class.coefficient_sum())),
                "rendered": class.to_string(),
            });
            Ok(ctx.emit(format!("{class}\n"), value))
        }
        Command::Count {
            command: CountCommand::Igr { d, n, q },
        } => {
            let count = igr_point_count(d, n, q)?;
            let value = json!({ "d": d, "n": n, "q": q, "count": to_json(&Big(count.clone())) });
            Ok(ctx.emit(format!("{count}\n"), value))
        }
        Command::Roof {
            command: RoofCommand::List,
        } => {
            let rows = catalog();
            let mut text = String::new();
            writeln!(
                text,
                "{:<6} {:<10} {:<12} {:<9} {:<10} {:<11} parameter",
                "family", "group", "crossed", "roof rank", "dim F_i", "rank E_i"
            )
            .unwrap();
            for r in &rows {
                writeln!(
                    text,
                    "{:<6} {:<10} {:<12} {:<9} {:<10} {:<11} {}",
                    r.family,
                    r.group,
                    r.crossed,
                    r.roof_rank,
                    r.base_dim,
                    r.bundle_rank,
                    r.parameter
                )
                .unwrap();
            }
            Ok(ctx.emit(text, to_json(&rows)))
        }
        Command::Roof {
            command: RoofCommand::Verify { family, r },
        } => {
            let label: RoofLabel = family.parse()?;
            let report = verify_roof(label, r, ctx.cap)?;
            let mut out = ctx.emit(format!("{report}\n"), to_json(&report));
            if !report.nontrivial {
                out.code = 1;
            }
            Ok(out)
        }
    }
}

fn roots(ctx: &Ctx, group: &Group) -> Result<Outcome> {
    let sys = RootSystem::build(group.ty, group.rank)?;
    let mut text = String::new();
    writeln!(text, "root system {}", sys.label()).unwrap();
    writeln!(
        text,
        "Cartan matrix (row i = alpha_i in fundamental weights):"
    )
    .unwrap();
    for row in sys.cartan() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        writeln!(text, "  {}", cells.join(" ")).unwrap();
    }
    writeln!(text, "symmetrizer: {:?}", sys.symmetrizer()).unwrap();
    writeln!(text, "rho: {}", sys.rho()).unwrap();
    writeln!(text, "Weyl group order: {}", sys.weyl_group_order()).unwrap();
    writeln!(text, "positive roots: {}", sys.positive_roots().len()).unwrap();
    for root in sys.positive_roots() {
        writeln!(
            text,
            "  {:?}  height {}  weight {}",
            root.coeffs,
            root.height(),
            root.weight
        )
        .unwrap();
    }
    let value = json!({
        "group": sys.label(),
        "rank": sys.rank(),
        "cartan": sys.cartan(),
        "symmetrizer": sys.symmetrizer(),
        "rho": to_json(sys.rho()),
        "weyl_group_order": sys.weyl_group_order().to_string(),
        "positive_roots": to_json(&sys.positive_roots()),
    });
    Ok(ctx.emit(text, value))
}

fn cosets(ctx: &Ctx, group: &Group, cross: &[usize], words: bool) -> Result<Outcome> {
    let p = parabolic(group, cross)?;
    let lengths = ctx.coset_lengths(&p)?;
    let histogram = length_histogram(&lengths);
    let poly = LPolynomial::new(histogram.iter().map(|&c| c.into()).collect());
    let mut text = String::new();
    writeln!(text, "|W^P| = {}", lengths.len()).unwrap();
    writeln!(text, "dim G/P = {}", p.quotient_dimension()).unwrap();
    writeln!(
        text,
        "Poincare polynomial: {}",
        poly.to_string().replace('L', "t")
    )
    .unwrap();
    let mut value = json!({
        "group": p.root_system().label(),
        "crossed": p.crossed(),
        "count": lengths.len(),
        "dimension": p.quotient_dimension(),
        "length_histogram": histogram,
    });
    if words {
        let reps = p.minimal_coset_reps(ctx.cap)?;
        let mut listed = Vec::with_capacity(reps.len());
        for (w, len) in &reps {
            writeln!(text, "  {len:>3}  {w}").unwrap();
            listed.push(json!({ "length": len, "word": w.word() }));
        }
        value["representatives"] = Value::Array(listed);
    }
    Ok(ctx.emit(text, value))
}
