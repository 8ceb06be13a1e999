//! `starcw` — search and verification for ternary constant-weight codes in
//! the starred-word space, and for the binary extended perfect codes they
//! decompose into.
//!
//! Exit codes: 0 on success, 1 when an input fails verification, 2 on
//! parse, IO, or usage errors.

use clap::{Parser, Subcommand, ValueEnum};
use starcw_cli::runner::{self, CodeTask};
use starcw_cli::{formats, sts};
use starcw_core::binary_codes::extended_hamming;
use starcw_core::diameter::{anticode_ball2, is_diameter_perfect, Anticode};
use starcw_core::search::{search8, StageDepth};
use starcw_core::starred_space_size;
use starcw_core::ternary_codes::verify_params;
use starcw_core::words::Parity;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[derive(Parser)]
#[command(
    name = "starcw",
    version,
    about = "Search and verification for ternary constant-weight codes"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Find a (8,5,7;16) ternary code and print its certificates.
    Search8 {
        /// Write the code as a ternary code file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Write the radius-2 ball anticode as a starred-word file.
        #[arg(long)]
        ball_out: Option<PathBuf>,
    },
    /// Survey length-16 extended perfect codes for pair- and quad-stage
    /// companion solutions, one report record per code.
    Pipeline16 {
        /// Binary code file to survey; omitted, the extended Hamming code
        /// of length 16 alone.
        #[arg(long)]
        codes: Option<PathBuf>,
        /// Half-open index range `A..B` restricting which codes to run.
        #[arg(long)]
        range: Option<String>,
        /// How deep to search each code.
        #[arg(long, value_enum, default_value_t = StageArg::S3)]
        stage: StageArg,
        /// Node budget per individual search; omitted, unlimited.
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads; omitted, one per available CPU.
        #[arg(long)]
        jobs: Option<usize>,
        /// Report file; omitted, stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a code file.
    Verify {
        /// What the file claims to be.
        #[arg(long, value_enum)]
        kind: VerifyKind,
        /// The file to verify.
        #[arg(long)]
        file: PathBuf,
        /// Declared minimum distance (required for --kind ternary).
        #[arg(long)]
        min_distance: Option<u32>,
        /// Anticode file (required for --kind diameter-perfect).
        #[arg(long)]
        anticode: Option<PathBuf>,
    },
    /// Check a pair- or quad-stage solution as a Steiner system.
    StsCheck {
        /// Solution file: a binary code file with a single block of the
        /// solution's words.
        #[arg(long)]
        solution: PathBuf,
        /// Starred coordinate of the seed word e^i (zero-based).
        #[arg(long)]
        star: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StageArg {
    /// Stop after the pair stage (weight-2 ground).
    S2,
    /// Extend every pair-stage solution across the quad stage.
    S3,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyKind {
    /// Binary code file of extended perfect codes.
    Binary,
    /// Ternary constant-weight code file.
    Ternary,
    /// Ternary code file plus an anticode file; certify perfection.
    DiameterPerfect,
}

/// A command failure, split by exit code.
enum Failure {
    /// Parse, IO, or usage problem — exit 2.
    Input(String),
    /// The input was well-formed but failed verification — exit 1.
    Verification(String),
}

impl Failure {
    fn input(err: impl std::fmt::Display) -> Failure {
        Failure::Input(err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Search8 { out, ball_out } => cmd_search8(out, ball_out),
        Command::Pipeline16 {
            codes,
            range,
            stage,
            budget,
            jobs,
            out,
        } => cmd_pipeline16(codes, range, stage, budget, jobs, out),
        Command::Verify {
            kind,
            file,
            min_distance,
            anticode,
        } => cmd_verify(kind, &file, min_distance, anticode.as_deref()),
        Command::StsCheck { solution, star } => cmd_sts_check(&solution, star),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(Failure::Input(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|err| Failure::Input(format!("{}: {err}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents)
        .map_err(|err| Failure::Input(format!("{}: {err}", path.display())))
}

fn cmd_search8(out: Option<PathBuf>, ball_out: Option<PathBuf>) -> Result<(), Failure> {
    let start = Instant::now();
    let outcome = search8(None);
    let code = &outcome.ternary;
    // The search already verified its output; re-run every check here so the
    // printed certificate reflects checks done by this command.
    verify_params(code, 8, 5, 7, 16)
        .map_err(|failure| Failure::Verification(format!("parameter check: {failure}")))?;
    let (even, odd) = code
        .decompose()
        .map_err(|err| Failure::Verification(format!("decompose: {err:?}")))?;
    for (part, name) in [(&even, "even"), (&odd, "odd")] {
        part.check_extended_perfect().map_err(|issue| {
            Failure::Verification(format!("{name} part not extended perfect: {issue}"))
        })?;
    }
    let ball = anticode_ball2(8);
    let report = is_diameter_perfect(code, &ball)
        .map_err(|err| Failure::Verification(format!("diameter certificate: {err}")))?;
    if !report.perfect {
        return Err(Failure::Verification(format!(
            "diameter certificate: product {} != space {}",
            report.product, report.space
        )));
    }
    print!("{}", formats::write_ternary_code(code));
    println!("params: (n=8, d=5, w=7; M=16) verified");
    println!("decompose: even and odd parts are (8, 16, 4) extended perfect codes");
    println!(
        "diameter-perfect: |C| * |anticode_ball2(8)| = {} * {} = {} = |X^8| = {}",
        report.code_size,
        report.anticode_size,
        report.product,
        starred_space_size(8)
    );
    println!(
        "search: sym_order={} orbit_reps={} nodes={} seconds={:.3}",
        outcome.sym_order,
        outcome.orbit_reps,
        outcome.nodes,
        start.elapsed().as_secs_f64()
    );
    if let Some(path) = out {
        write_file(&path, &formats::write_ternary_code(code))?;
    }
    if let Some(path) = ball_out {
        write_file(&path, &formats::write_starred_words(8, ball.words()))?;
    }
    Ok(())
}

fn parse_range(range: &str, len: usize) -> Result<(usize, usize), Failure> {
    let invalid = || {
        Failure::Input(format!(
            "--range expects `A..B` with A <= B <= {len}, got `{range}`"
        ))
    };
    let (a, b) = range.split_once("..").ok_or_else(invalid)?;
    let a: usize = a.parse().map_err(|_| invalid())?;
    let b: usize = b.parse().map_err(|_| invalid())?;
    if a > b || b > len {
        return Err(invalid());
    }
    Ok((a, b))
}

fn cmd_pipeline16(
    codes: Option<PathBuf>,
    range: Option<String>,
    stage: StageArg,
    budget: Option<u64>,
    jobs: Option<usize>,
    out: Option<PathBuf>,
) -> Result<(), Failure> {
    let codes = match codes {
        Some(path) => {
            let parsed = formats::read_binary_codes(&read_file(&path)?).map_err(Failure::input)?;
            formats::import_extended_perfect(parsed)
                .map_err(|err| Failure::Verification(err.to_string()))?
        }
        None => vec![extended_hamming(4)],
    };
    let (lo, hi) = match range {
        Some(range) => parse_range(&range, codes.len())?,
        None => (0, codes.len()),
    };
    let tasks: Vec<CodeTask> = codes
        .into_iter()
        .enumerate()
        .take(hi)
        .skip(lo)
        .map(|(code_index, code)| CodeTask { code_index, code })
        .collect();
    let depth = match stage {
        StageArg::S2 => StageDepth::Pairs,
        StageArg::S3 => StageDepth::Quads,
    };
    let jobs = jobs.unwrap_or_else(|| {
        std::thread::available_parallelism()
            .map(usize::from)
            .unwrap_or(1)
    });
    let records = runner::run_pipeline(tasks, depth, budget, jobs);
    let mut lines = String::new();
    for record in &records {
        lines.push_str(&record.to_string());
        lines.push('\n');
    }
    match out {
        Some(path) => write_file(&path, &lines)?,
        None => print!("{lines}"),
    }
    Ok(())
}

fn cmd_verify(
    kind: VerifyKind,
    file: &Path,
    min_distance: Option<u32>,
    anticode: Option<&Path>,
) -> Result<(), Failure> {
    let text = read_file(file)?;
    match kind {
        VerifyKind::Binary => {
            let codes = formats::read_binary_codes(&text).map_err(Failure::input)?;
            let mut failures = 0usize;
            for (index, code) in codes.iter().enumerate() {
                match code.check_extended_perfect() {
                    Ok(parity) => println!(
                        "code {index}: extended perfect, (n={}, M={}, d=4), {} parity",
                        code.n(),
                        code.len(),
                        match parity {
                            Parity::Even => "even",
                            Parity::Odd => "odd",
                        }
                    ),
                    Err(issue) => {
                        println!("code {index}: FAIL: {issue}");
                        failures += 1;
                    }
                }
            }
            if failures > 0 {
                return Err(Failure::Verification(format!(
                    "{failures} of {} codes failed",
                    codes.len()
                )));
            }
            println!("all {} codes verified", codes.len());
            Ok(())
        }
        VerifyKind::Ternary => {
            let d = min_distance.ok_or_else(|| {
                Failure::Input("--min-distance is required for --kind ternary".to_string())
            })?;
            let code = formats::read_ternary_code(&text).map_err(Failure::input)?;
            let (n, m) = (code.n(), code.len());
            match verify_params(&code, n, d, n - 1, m) {
                Ok(()) => {
                    println!("(n={n}, d={d}, w={}; M={m}) ternary code verified", n - 1);
                    Ok(())
                }
                Err(failure) => Err(Failure::Verification(failure.to_string())),
            }
        }
        VerifyKind::DiameterPerfect => {
            let ball_path = anticode.ok_or_else(|| {
                Failure::Input("--anticode is required for --kind diameter-perfect".to_string())
            })?;
            let code = formats::read_ternary_code(&text).map_err(Failure::input)?;
            let (n, words) =
                formats::read_starred_words(&read_file(ball_path)?).map_err(Failure::input)?;
            if words.is_empty() {
                return Err(Failure::Verification("empty anticode".to_string()));
            }
            let anticode = Anticode::new(n, words);
            let report = is_diameter_perfect(&code, &anticode)
                .map_err(|err| Failure::Verification(err.to_string()))?;
            println!(
                "|C| * |A| = {} * {} = {}, |X^{}| = {}, anticode diameter {}",
                report.code_size,
                report.anticode_size,
                report.product,
                code.n(),
                report.space,
                anticode.diameter()
            );
            if report.perfect {
                println!("diameter perfect: pass");
                Ok(())
            } else {
                Err(Failure::Verification(format!(
                    "not diameter perfect: product {} < space {}",
                    report.product, report.space
                )))
            }
        }
    }
}

fn cmd_sts_check(solution: &Path, star: usize) -> Result<(), Failure> {
    let codes = formats::read_binary_codes(&read_file(solution)?).map_err(Failure::input)?;
    let [code] = codes.as_slice() else {
        return Err(Failure::Input(format!(
            "expected exactly one block of solution words, found {}",
            codes.len()
        )));
    };
    if star >= code.n() {
        return Err(Failure::Input(format!(
            "--star {star} out of range for length {}",
            code.n()
        )));
    }
    match sts::check_steiner(code.n(), star, code.words()) {
        Ok(report) => {
            println!("{report}");
            Ok(())
        }
        Err(err) => Err(Failure::Verification(err.to_string())),
    }
}
