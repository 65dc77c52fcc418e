//! Command-line surface: table generation, fixture emission, build and
//! extract round trips, and the verification suites.
//!
//! Artifacts (CSV tables, algebra and coordinate JSON) go to `--out` or
//! stdout; check results are printed as one JSON line per report with a
//! human summary on stderr.  Exit codes: 0 all checks pass, 1 a check
//! failed, 2 malformed input (schema, bounds, unparsable flags).  Sweeps
//! honor `RAYON_NUM_THREADS`; every command is deterministic for fixed
//! flags (sampling takes an explicit seed).

use std::fs;
use std::io::{Read as _, Write as _};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use ahatlie::bracket::{sv_add, sv_neg, sv_unit, SparseBracket};
use ahatlie::coordalg::CoordAlgebraData;
use ahatlie::extractor::{
    bc_weight_check, extract_coord, isotypic_split, main_assumptions_check, BcDirection,
};
use ahatlie::fixtures::{fixture, FixtureKind, LiePresentation, ALL_FIXTURES};
use ahatlie::lawcheck::{self, ALL_LAWS};
use ahatlie::liebuilder::{assemble, GradedLie};
use ahatlie::report::{render_summary, CheckReport, FailureWitness};
use ahatlie::{homs, tensor, CoreError};

#[derive(Parser)]
#[command(name = "ahatlie", version, about = "Â_n-graded Lie algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum JacobiMode {
    Full,
    Sampled,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the π-truncated tensor product table for rank n as CSV.
    TensorTable {
        #[arg(long)]
        n: usize,
    },
    /// Verify the Hom-space catalog: equivariance, dimensions, independence.
    HomCheck {
        #[arg(long)]
        n: usize,
    },
    /// Emit a bundled Lie algebra presentation as JSON.
    Fixture {
        /// One of: sp, so-even, so-odd, current-dual.
        #[arg(long)]
        kind: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose a presentation and recover its coordinate data.
    Extract {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Assemble a graded Lie algebra from coordinate data.
    Build {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run structure laws against coordinate data.
    VerifyCoord {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        /// "all" or a comma-separated list of law names.
        #[arg(long, default_value = "all")]
        laws: String,
    },
    /// Sweep the Jacobi identity over basis triples.
    Jacobi {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = JacobiMode::Full)]
        mode: JacobiMode,
        /// Seed for the sampled mode (ignored when full).
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the weight containments between the Â_n and BC gradings.
    BcCheck {
        #[arg(long = "in", value_name = "FILE")]
        input: Option<PathBuf>,
        /// "ahat-to-bc" or "bc-to-ahat".
        #[arg(long)]
        direction: String,
    },
    /// Run the whole pipeline at rank n: table, homs, and every fixture
    /// through extract, laws, rebuild, Jacobi, and the weight checks.
    FullSuite {
        #[arg(long)]
        n: usize,
    },
}

fn exit_class(e: &CoreError) -> ExitCode {
    match e {
        CoreError::Parse(_)
        | CoreError::Schema(_)
        | CoreError::Dim(_)
        | CoreError::Rank(_)
        | CoreError::Json(_) => ExitCode::from(2),
        _ => ExitCode::from(1),
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, CoreError> {
    match path {
        Some(p) => fs::read_to_string(p)
            .map_err(|e| CoreError::Parse(format!("cannot read {}: {e}", p.display()))),
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| CoreError::Parse(format!("cannot read stdin: {e}")))?;
            Ok(buf)
        }
    }
}

/// Write to a temporary sibling and rename, so readers never see a torn
/// file; stdout when no path is given.
fn write_output(path: &Option<PathBuf>, content: &str) -> Result<(), CoreError> {
    match path {
        Some(p) => {
            let tmp = p.with_file_name(format!(
                "{}.tmp{}",
                p.file_name().and_then(|s| s.to_str()).unwrap_or("out"),
                std::process::id()
            ));
            fs::write(&tmp, content)
                .and_then(|()| fs::rename(&tmp, p))
                .map_err(|e| CoreError::Parse(format!("cannot write {}: {e}", p.display())))
        }
        None => {
            print!("{content}");
            std::io::stdout().flush().ok();
            Ok(())
        }
    }
}

/// Print reports as JSON lines on stdout plus a summary on stderr.
fn emit_reports(reports: &[CheckReport]) -> bool {
    let mut out = std::io::stdout().lock();
    for r in reports {
        writeln!(out, "{}", r.to_json_line()).ok();
    }
    drop(out);
    eprint!("{}", render_summary(reports));
    reports.iter().all(|r| r.is_pass())
}

/// Same, but everything on stderr — used by artifact commands whose
/// stdout carries the artifact.
fn emit_side_reports(reports: &[CheckReport]) -> bool {
    let mut err = std::io::stderr().lock();
    for r in reports {
        writeln!(err, "{}", r.to_json_line()).ok();
    }
    drop(err);
    eprint!("{}", render_summary(reports));
    reports.iter().all(|r| r.is_pass())
}

fn status_code(all_pass: bool) -> ExitCode {
    if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn jacobi_report(
    bracket: &SparseBracket,
    dim: usize,
    mode: JacobiMode,
    seed: u64,
) -> CheckReport {
    let residue = |i: usize, j: usize, k: usize| {
        let t1 = bracket.apply(&sv_unit(i), bracket.basis_bracket(j, k));
        let t2 = bracket.apply(bracket.basis_bracket(i, j), &sv_unit(k));
        let t3 = bracket.apply(&sv_unit(j), bracket.basis_bracket(i, k));
        sv_add(&sv_add(&t1, &sv_neg(&t2)), &sv_neg(&t3))
    };
    let witness = |i: usize, j: usize, k: usize| FailureWitness {
        witness: format!("basis triple ({i}, {j}, {k})"),
        lhs: "jacobiator".into(),
        rhs: "0".into(),
    };
    match mode {
        JacobiMode::Full => {
            let mut triples = Vec::new();
            for i in 0..dim {
                for j in i + 1..dim {
                    for k in j + 1..dim {
                        triples.push((i, j, k));
                    }
                }
            }
            let (failures, first) = ahatlie::par::sweep_failures(triples.len(), |idx| {
                let (i, j, k) = triples[idx];
                if residue(i, j, k).is_empty() {
                    None
                } else {
                    Some(witness(i, j, k))
                }
            });
            CheckReport::from_sweep("jacobi_full", triples.len(), failures, first.map(|f| f.1))
        }
        JacobiMode::Sampled => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let samples = 20_000usize;
            let mut failures = 0;
            let mut first = None;
            for _ in 0..samples {
                let mut idx = [0usize; 3];
                loop {
                    for slot in idx.iter_mut() {
                        *slot = rng.gen_range(0..dim);
                    }
                    idx.sort_unstable();
                    if idx[0] < idx[1] && idx[1] < idx[2] {
                        break;
                    }
                }
                if !residue(idx[0], idx[1], idx[2]).is_empty() {
                    failures += 1;
                    if first.is_none() {
                        first = Some(witness(idx[0], idx[1], idx[2]));
                    }
                }
            }
            CheckReport::from_sweep("jacobi_sampled", samples, failures, first)
        }
    }
}

/// The Jacobi command accepts both algebra file kinds.
fn load_bracket(text: &str) -> Result<(SparseBracket, usize), CoreError> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    match value.get("schema").and_then(|s| s.as_str()) {
        Some("liepres/1") => {
            let p = LiePresentation::from_json(text)?;
            Ok((p.bracket().clone(), p.dim()))
        }
        Some("gradedlie/1") => {
            let g = GradedLie::from_json(text)?;
            Ok((g.bracket().clone(), g.dim()))
        }
        other => Err(CoreError::Schema(format!(
            "expected a liepres/1 or gradedlie/1 file, found schema {other:?}"
        ))),
    }
}

/// Prefix report names with the fixture they belong to.
fn tagged(prefix: &str, r: CheckReport) -> CheckReport {
    CheckReport { check: format!("{prefix}:{}", r.check), ..r }
}

fn run() -> Result<ExitCode, CoreError> {
    match Cli::parse().command {
        Command::TensorTable { n } => {
            ahatlie::check_rank(n)?;
            write_output(&None, &tensor::render_table_csv(n))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::HomCheck { n } => {
            ahatlie::check_rank(n)?;
            Ok(status_code(emit_reports(&homs::verify_hom_basis(n))))
        }
        Command::Fixture { kind, n, out } => {
            let kind = FixtureKind::parse(&kind)?;
            let lie = fixture(kind, n)?;
            write_output(&out, &lie.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Extract { input, out } => {
            let lie = LiePresentation::from_json(&read_input(&input)?)?;
            if !emit_side_reports(&lie.validate()) {
                return Ok(ExitCode::from(1));
            }
            let split = isotypic_split(&lie)?;
            let data = extract_coord(&lie, &split)?;
            write_output(&out, &data.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Build { input, out } => {
            let data = CoordAlgebraData::from_json(&read_input(&input)?)?;
            let lie = assemble(&data)?;
            write_output(&out, &lie.to_json())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyCoord { input, laws } => {
            let data = CoordAlgebraData::from_json(&read_input(&input)?)?;
            let mut reports = data.validate();
            if laws.trim() == "all" {
                reports.extend(lawcheck::full_suite(&data));
            } else {
                for name in laws.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                    let law = ALL_LAWS
                        .into_iter()
                        .find(|l| l.name() == name)
                        .ok_or_else(|| CoreError::Parse(format!("unknown law {name:?}")))?;
                    reports.push(lawcheck::check_law(&data, law));
                }
            }
            Ok(status_code(emit_reports(&reports)))
        }
        Command::Jacobi { input, mode, seed } => {
            let (bracket, dim) = load_bracket(&read_input(&input)?)?;
            let report = jacobi_report(&bracket, dim, mode, seed);
            Ok(status_code(emit_reports(&[report])))
        }
        Command::BcCheck { input, direction } => {
            let lie = LiePresentation::from_json(&read_input(&input)?)?;
            let dir = BcDirection::parse(&direction)?;
            Ok(status_code(emit_reports(&[bc_weight_check(&lie, dir)])))
        }
        Command::FullSuite { n } => {
            ahatlie::check_rank(n)?;
            let mut reports = vec![tensor::compare_table(n)];
            reports.extend(homs::verify_hom_basis(n));
            for kind in ALL_FIXTURES {
                let prefix = kind.name();
                let lie = fixture(kind, n)?;
                reports.extend(lie.validate().into_iter().map(|r| tagged(prefix, r)));
                let split = isotypic_split(&lie)?;
                let data = extract_coord(&lie, &split)?;
                reports.extend(data.validate().into_iter().map(|r| tagged(prefix, r)));
                reports
                    .extend(lawcheck::full_suite(&data).into_iter().map(|r| tagged(prefix, r)));
                let rebuilt = assemble(&data)?;
                reports.push(tagged(
                    prefix,
                    jacobi_report(rebuilt.bracket(), rebuilt.dim(), JacobiMode::Full, 0),
                ));
                for dir in [BcDirection::AhatToBC, BcDirection::BCToAhat] {
                    reports.push(tagged(prefix, bc_weight_check(&lie, dir)));
                }
                reports.push(tagged(prefix, main_assumptions_check(&lie, &split)));
            }
            Ok(status_code(emit_reports(&reports)))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            exit_class(&e)
        }
    }
}
