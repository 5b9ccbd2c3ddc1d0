mod report;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use halldisk::freealg::{Family, NCPolynomial};
use halldisk::hall::{Assignment, HallAlgebra};
use halldisk::par::Parallelism;
use halldisk::presentation::*;
use halldisk::repq::FiniteField;
use halldisk::surface::{FoliationData, MarkedDisk, SurfaceConfig};
use report::{Report, Suite, SCHEMA};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "halldisk", version, about = "Verify relation families in derived Hall algebras of marked disks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Quantum-group relations between the simple generators z[i,n].
    VerifyQuiver {
        #[arg(long, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[command(flatten)]
        common: Common,
    },
    /// Minimal-disk relations and the cyclic convolution ladder.
    VerifyDisk {
        /// Number of arcs; defaults to the length of --h.
        #[arg(long)]
        m: Option<usize>,
        /// Foliation data, comma separated, summing to m - 2.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        h: Vec<i32>,
        #[command(flatten)]
        common: Common,
    },
    /// Local skein on the standard square and chord skein identities for m = 4, 5.
    VerifySkein {
        #[command(flatten)]
        common: Common,
    },
    /// Product of two expressions in the Hall algebra.
    Multiply {
        lhs: String,
        rhs: String,
        #[arg(long, default_value_t = 2, value_parser = clap::value_parser!(u32).range(2..))]
        m: u32,
        #[arg(long, default_value_t = 2, value_parser = field_size)]
        q: u64,
        /// JSON object sending generators to objects; defaults to z[i,0] -> S_i.
        #[arg(long)]
        assign: Option<PathBuf>,
        #[command(flatten)]
        output: Output,
    },
    /// Naive presentation of a glued surface, verified when it is a disk.
    Presentation {
        config: PathBuf,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Args)]
struct Common {
    /// Field sizes, comma separated.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3], value_parser = field_size)]
    q: Vec<u64>,
    /// Shift window lo..hi.
    #[arg(long, default_value = "-2..3", allow_hyphen_values = true, value_parser = shift_window)]
    shifts: (i32, i32),
    /// Worker threads; 1 runs everything on the calling thread.
    #[arg(long)]
    jobs: Option<usize>,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

fn field_size(s: &str) -> std::result::Result<u64, String> {
    let q: u64 = s.parse().map_err(|_| format!("'{s}' is not an integer"))?;
    FiniteField::new(q).map_err(|e| e.to_string())?;
    Ok(q)
}

fn shift_window(s: &str) -> std::result::Result<(i32, i32), String> {
    let (lo, hi) = s.split_once("..").ok_or_else(|| format!("expected lo..hi, got '{s}'"))?;
    let lo: i32 = lo.trim().parse().map_err(|_| format!("bad lower shift '{lo}'"))?;
    let hi: i32 = hi.trim().parse().map_err(|_| format!("bad upper shift '{hi}'"))?;
    if lo > hi {
        return Err(format!("empty shift window {lo}..{hi}"));
    }
    Ok((lo, hi))
}

impl Common {
    fn parallelism(&self) -> Result<Parallelism> {
        match self.jobs {
            Some(0) => bail!("--jobs must be at least 1"),
            Some(1) => Ok(Parallelism::Sequential),
            Some(_n) => {
                #[cfg(feature = "parallel")]
                rayon::ThreadPoolBuilder::new().num_threads(_n).build_global().context("building worker pool")?;
                Ok(Parallelism::Parallel)
            }
            None => Ok(Parallelism::Parallel),
        }
    }
}

/// Everything that should reach the user: the rendered report and whether a
/// relation failed.
struct Run {
    body: String,
    failed: bool,
}

fn verify(report: &mut Report, rs: &RelationSet, common: &Common, p: Parallelism) -> Result<()> {
    let rep = verify_relation_set(rs, &common.q, p)?;
    report.push_suite(Suite::new(rs, rep));
    Ok(())
}

fn finish(report: Report, format: Format) -> Result<Run> {
    let body = match format {
        Format::Text => report.text(),
        Format::Json => serde_json::to_string_pretty(&report)? + "\n",
    };
    Ok(Run { body, failed: report.failed > 0 })
}

fn verify_quiver(m: u32, common: &Common) -> Result<Run> {
    let p = common.parallelism()?;
    let (lo, hi) = common.shifts;
    let mut report = Report::new("verify-quiver", &common.q, common.shifts);
    verify(&mut report, &quiver_relations(m as usize, lo, hi), common, p)?;
    finish(report, common.output.format)
}

fn verify_disk(m: Option<usize>, h: Vec<i32>, common: &Common) -> Result<Run> {
    if let Some(m) = m {
        if m != h.len() {
            bail!("--h has {} entries but --m is {m}", h.len());
        }
    }
    let disk = MarkedDisk::new(FoliationData::new(h)?, Family::E);
    let p = common.parallelism()?;
    let (lo, hi) = common.shifts;
    let mut report = Report::new("verify-disk", &common.q, common.shifts);
    verify(&mut report, &minimal_disk_relations(&disk, lo, hi), common, p)?;
    for i in 1..=disk.m() as i64 {
        verify(&mut report, &cyclic_family(&disk, i), common, p)?;
    }
    let inv = inverse_check(&disk)?;
    let detail = format!("{} z-generators, {} arc generators", inv.psi_phi.len(), inv.phi_psi.len());
    report.push_check("phi and psi are mutually inverse", inv.holds(), detail);
    finish(report, common.output.format)
}

fn verify_skein(common: &Common) -> Result<Run> {
    let p = common.parallelism()?;
    let (lo, hi) = common.shifts;
    let mut report = Report::new("verify-skein", &common.q, common.shifts);
    let square = MarkedDisk::new(FoliationData::standard_form(), Family::E);
    verify(&mut report, &local_skein_relations(&square, lo..=hi)?, common, p)?;
    for m in [4, 5] {
        verify(&mut report, &interleaved_skein_relations(m, lo..=hi), common, p)?;
        verify(&mut report, &boundary_skein_relations(m, lo..=hi), common, p)?;
    }
    finish(report, common.output.format)
}

fn parse_expr(s: &str) -> Result<NCPolynomial> {
    NCPolynomial::parse(s).with_context(|| format!("cannot parse expression '{s}'"))
}

fn multiply(lhs: &str, rhs: &str, m: u32, q: u64, assign: Option<PathBuf>, output: &Output) -> Result<Run> {
    let (x, y) = (parse_expr(lhs)?, parse_expr(rhs)?);
    let assignment = match assign {
        Some(path) => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            let v: serde_json::Value = serde_json::from_str(&text).context("assignment is not valid JSON")?;
            Assignment::from_json(&v)?
        }
        None => Assignment::standard(m as usize),
    };
    let hall = HallAlgebra::new(m as usize, q)?;
    let product = hall.evaluate(&x.mul(&y), &assignment)?;
    let body = match output.format {
        Format::Text => format!("{product}\n"),
        Format::Json => {
            let v = serde_json::json!({
                "schema": SCHEMA,
                "command": "multiply",
                "m": m,
                "q": q,
                "lhs": x.to_string(),
                "rhs": y.to_string(),
                "product": product,
                "display": product.to_string(),
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
    };
    Ok(Run { body, failed: false })
}

fn presentation(config: PathBuf, common: &Common) -> Result<Run> {
    let text = std::fs::read_to_string(&config).with_context(|| format!("reading {}", config.display()))?;
    let surface = SurfaceConfig::from_json(&text)?.validate()?;
    let (lo, hi) = common.shifts;
    let np = naive_presentation(&surface, lo, hi)?;
    let p = common.parallelism()?;
    let verification = match np.relations.oracle {
        Some(_) => Some(verify_relation_set(&np.relations, &common.q, p)?),
        None => None,
    };
    let failed = verification.as_ref().is_some_and(|v| !v.all_passed());
    let body = match common.output.format {
        Format::Text => {
            let mut s = np.relations.to_string();
            for w in &np.warnings {
                s += &format!("warning: {w}\n");
            }
            match &verification {
                Some(v) => {
                    for f in v.failures() {
                        s += &format!("FAIL  {} at q={}: {}\n", f.label, f.q, report::terms(&f.diff));
                    }
                    s += &format!("verified: {} passed, {} failed\n", v.passed, v.failed);
                }
                None => s += "not verified: the surface is not a disk\n",
            }
            s
        }
        Format::Json => {
            let v = serde_json::json!({
                "schema": SCHEMA,
                "command": "presentation",
                "shifts": [lo, hi],
                "presentation": np.relations.to_json(),
                "warnings": np.warnings,
                "verification": verification,
            });
            serde_json::to_string_pretty(&v)? + "\n"
        }
    };
    Ok(Run { body, failed })
}

fn run(cli: Cli) -> Result<(Run, Option<PathBuf>)> {
    Ok(match cli.command {
        Command::VerifyQuiver { m, common } => (verify_quiver(m, &common)?, common.output.out),
        Command::VerifyDisk { m, h, common } => (verify_disk(m, h, &common)?, common.output.out),
        Command::VerifySkein { common } => (verify_skein(&common)?, common.output.out),
        Command::Multiply { lhs, rhs, m, q, assign, output } => {
            (multiply(&lhs, &rhs, m, q, assign, &output)?, output.out)
        }
        Command::Presentation { config, common } => (presentation(config, &common)?, common.output.out),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((r, out)) => {
            if let Some(path) = out {
                if let Err(e) = std::fs::write(&path, &r.body) {
                    eprintln!("error: writing {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            } else {
                // a closed pipe (`| head`) is not an error worth reporting
                let _ = std::io::stdout().lock().write_all(r.body.as_bytes());
            }
            if r.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
