//! Command-line front end: construct two-block codes from spec files, compute
//! parameters and distances, classify, evaluate bounds, and scan instance
//! families.
//!
//! Exit codes: 0 success, 2 input error, 3 budget exceeded with fallback
//! disabled.

mod output;
mod scan;

use clap::{Args, Parser, Subcommand};
use qtwoblock_core::{
    central_intersection_bound, classify, css_distance_exact, css_distance_upper, css_lower_bound,
    gb_dimension, hp_equivalence_check, CodeSpec, CssSide, DistanceResult, Error, FpPoly,
    PrimeField, TwoBlockCode, DEFAULT_BUDGET,
};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "qtwoblock", version, about = "Two-block CSS codes from finite groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SearchFlags {
    /// Cap on vectors examined by exhaustive distance enumeration.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Iterations for the randomized upper bound.
    #[arg(long, default_value_t = 100)]
    iterations: u64,
    /// Seed for all randomized behavior.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Print witness vectors achieving the reported distances.
    #[arg(long)]
    witness: bool,
    /// Fail with exit code 3 instead of falling back to the randomized
    /// upper bound when the budget is exceeded.
    #[arg(long)]
    no_fallback: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Code parameters [[n,k,?]] and block ranks.
    Params {
        spec: PathBuf,
        /// Write a.mat, b.mat, hx.mat, hz.mat into this directory.
        #[arg(long, value_name = "DIR")]
        dump_matrices: Option<PathBuf>,
    },
    /// Exact distances (exhaustive), with randomized fallback past the budget.
    Distance {
        spec: PathBuf,
        #[command(flatten)]
        flags: SearchFlags,
        #[arg(long, value_name = "DIR")]
        dump_matrices: Option<PathBuf>,
    },
    /// Classification label and the evidence for it.
    Classify {
        spec: PathBuf,
        /// Also append a machine-readable CSV row to this file.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
    /// Central-intersection lower bound on the Z distance.
    Bound {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
    /// Compare against the hypergraph product of the restricted blocks.
    Hpcheck {
        spec: PathBuf,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
    },
    /// Cyclic-group shortcut: build from polynomials and report everything.
    Gb {
        #[arg(long)]
        l: usize,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long, default_value_t = 2)]
        p: u64,
        #[command(flatten)]
        flags: SearchFlags,
        #[arg(long, value_name = "DIR")]
        dump_matrices: Option<PathBuf>,
    },
    /// Enumerate instances over listed groups with bounded element weights.
    Scan {
        /// File listing one group spec per line.
        #[arg(long)]
        groups: PathBuf,
        #[arg(long, default_value_t = 2)]
        p: u64,
        /// Weight cap for a (supports of size 2..=wa).
        #[arg(long)]
        wa: usize,
        /// Weight cap for b.
        #[arg(long)]
        wb: usize,
        /// Write CSV here instead of stdout.
        #[arg(long, value_name = "FILE")]
        csv: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 100)]
        iterations: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        no_fallback: bool,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn base_dir(spec_path: &Path) -> PathBuf {
    spec_path
        .parent()
        .filter(|p| !p.as_os_str().is_empty())
        .map(Path::to_path_buf)
        .unwrap_or_else(|| PathBuf::from("."))
}

fn load_code(spec_path: &Path) -> Result<(CodeSpec, TwoBlockCode), Error> {
    let spec = CodeSpec::load(spec_path)?;
    let code = spec.build(&base_dir(spec_path))?;
    Ok((spec, code))
}

fn dump_matrices(code: &TwoBlockCode, dir: &Path) -> Result<(), Error> {
    std::fs::create_dir_all(dir)?;
    std::fs::write(dir.join("a.mat"), code.a().to_text())?;
    std::fs::write(dir.join("b.mat"), code.b().to_text())?;
    std::fs::write(dir.join("hx.mat"), code.h_x().to_text())?;
    std::fs::write(dir.join("hz.mat"), code.h_z().to_text())?;
    Ok(())
}

/// Exhaustive first; randomized fallback unless disabled.
fn side_distance(
    code: &TwoBlockCode,
    side: CssSide,
    flags: &SearchFlags,
) -> Result<DistanceResult, Error> {
    match css_distance_exact(code.css(), side, flags.budget) {
        Ok(r) => Ok(r),
        Err(Error::BudgetExceeded { .. }) if !flags.no_fallback => {
            css_distance_upper(code.css(), side, flags.iterations, flags.seed)
        }
        Err(e) => Err(e),
    }
}

fn append_csv_row(path: &Path, row: &output::CsvRow) -> Result<(), Error> {
    use std::io::Write;
    let fresh = !path.exists();
    let mut file = std::fs::OpenOptions::new().create(true).append(true).open(path)?;
    if fresh {
        writeln!(file, "{}", output::CSV_VERSION_COMMENT)?;
        writeln!(file, "{}", output::CSV_HEADER)?;
    }
    writeln!(file, "{}", row.render())?;
    Ok(())
}

fn csv_row_for(spec: &CodeSpec, code: &TwoBlockCode, label: String, bound: String) -> output::CsvRow {
    let (a, b) = spec.element_labels();
    output::CsvRow {
        group: spec.group_label(),
        p: code.field().p(),
        a,
        b,
        n: code.n(),
        k: code.k(),
        d_z: None,
        d_x: None,
        label,
        bound,
    }
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Params { spec, dump_matrices: dump } => {
            let (_, code) = load_code(&spec)?;
            if let Some(dir) = &dump {
                dump_matrices(&code, dir)?;
            }
            print!("{}", output::params_block(&code));
        }
        Command::Distance { spec, flags, dump_matrices: dump } => {
            let (_, code) = load_code(&spec)?;
            if let Some(dir) = &dump {
                dump_matrices(&code, dir)?;
            }
            let dz = side_distance(&code, CssSide::Z, &flags)?;
            let dx = side_distance(&code, CssSide::X, &flags)?;
            print!("{}", output::distance_block(&code, dz, dx, flags.witness));
        }
        Command::Classify { spec, csv } => {
            let (spec, code) = load_code(&spec)?;
            let c = classify(&code)?;
            print!("{}", output::classify_block(&code, &c));
            if let Some(path) = csv {
                let row = csv_row_for(&spec, &code, c.label.to_string(), String::new());
                append_csv_row(&path, &row)?;
            }
        }
        Command::Bound { spec, budget, csv } => {
            let (spec, code) = load_code(&spec)?;
            let rep = central_intersection_bound(&code, budget)?;
            let kernel_bounds = css_lower_bound(code.css(), budget)?;
            print!("{}", output::bound_block(&code, &rep, &kernel_bounds));
            if let Some(path) = csv {
                let label = classify(&code)?.label.to_string();
                let bound = rep.bound.map(|d| d.to_string()).unwrap_or_default();
                let row = csv_row_for(&spec, &code, label, bound);
                append_csv_row(&path, &row)?;
            }
        }
        Command::Hpcheck { spec, budget, csv } => {
            let (spec, code) = load_code(&spec)?;
            let rep = hp_equivalence_check(&code, budget)?;
            print!("{}", output::hpcheck_block(&code, &rep));
            if let Some(path) = csv {
                let label = classify(&code)?.label.to_string();
                let row = csv_row_for(&spec, &code, label, String::new());
                append_csv_row(&path, &row)?;
            }
        }
        Command::Gb { l, a, b, p, flags, dump_matrices: dump } => {
            let field = PrimeField::new(p)?;
            let pa = FpPoly::parse(field, &a)?;
            let pb = FpPoly::parse(field, &b)?;
            let code = TwoBlockCode::generalized_bicycle(l, &pa, &pb)?;
            if let Some(dir) = &dump {
                dump_matrices(&code, dir)?;
            }
            let dz = side_distance(&code, CssSide::Z, &flags)?;
            let dx = side_distance(&code, CssSide::X, &flags)?;
            let mut out = output::distance_block(&code, dz, dx, flags.witness);
            let gd = gb_dimension(l, &pa, &pb)?;
            out.push_str(&format!("k_from_gcd = {}\n", gd.k));
            out.push_str(&format!("k_degenerate = {}\n", gd.degenerate));
            out.push_str(&format!("k_consistent = {}\n", gd.k == code.k()));
            print!("{out}");
        }
        Command::Scan {
            groups,
            p,
            wa,
            wb,
            csv,
            budget,
            iterations,
            seed,
            no_fallback,
        } => {
            let field = PrimeField::new(p)?;
            let text = std::fs::read_to_string(&groups)?;
            let list = scan::parse_groups_file(&text)?;
            let opts = scan::ScanOptions {
                field,
                weight_a: wa,
                weight_b: wb,
                budget,
                iterations,
                seed,
                no_fallback,
            };
            let rows = scan::run_scan(&list, &opts, &base_dir(&groups))?;
            // record the search region: supports of size 2..=w, identity-
            // anchored over F_2
            let metadata = format!(
                "scan p={p} wa={wa} wb={wb} min_weight=2 anchored={} seed={seed} budget={budget} iterations={iterations}",
                field.is_binary()
            );
            let doc = output::csv_document(&rows, Some(&metadata));
            match csv {
                Some(path) => std::fs::write(path, doc)?,
                None => print!("{doc}"),
            }
        }
    }
    Ok(())
}
