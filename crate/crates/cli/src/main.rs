use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use singtt::driver::{run, Command, ExitStatus, OutputFormat, RunConfig};

/// Check, normalize, or infer the declarations in a file.
#[derive(Parser, Debug)]
#[command(name = "singtt", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,

    /// Admit `*` in user input.
    #[arg(long, global = true)]
    allow_star: bool,

    /// Evaluate `box a` as `a` (experimental).
    #[arg(long, global = true)]
    proof_relevant: bool,

    /// Maximum evaluation recursion depth.
    #[arg(long, global = true, value_name = "N", default_value_t = 100_000)]
    depth_limit: usize,

    /// Print one tab-separated record per declaration.
    #[arg(long, global = true)]
    machine: bool,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check every declaration.
    Check { file: PathBuf },
    /// Check, and print normal forms of checked terms.
    Normalize { file: PathBuf },
    /// Check, and print inferred types of neutral terms.
    Infer { file: PathBuf },
}

const STACK_SIZE: usize = 512 * 1024 * 1024;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (command, file) = match cli.command {
        Cmd::Check { file } => (Command::Check, file),
        Cmd::Normalize { file } => (Command::Normalize, file),
        Cmd::Infer { file } => (Command::Infer, file),
    };
    let cfg = RunConfig {
        command,
        allow_star: cli.allow_star,
        proof_relevant: cli.proof_relevant,
        depth_limit: cli.depth_limit,
        output: if cli.machine {
            OutputFormat::Machine
        } else {
            OutputFormat::Human
        },
    };
    let worker = std::thread::Builder::new()
        .stack_size(STACK_SIZE)
        .spawn(move || run(&cfg, &file))
        .expect("spawn worker thread");
    let report = match worker.join() {
        Ok(r) => r,
        Err(_) => return ExitCode::from(2),
    };
    let out = std::io::stdout();
    let mut out = out.lock();
    let stream_ok = match report.status {
        ExitStatus::UsageError => {
            eprint!("{}", report.output);
            true
        }
        _ => out.write_all(report.output.as_bytes()).is_ok(),
    };
    let _ = out.flush();
    if !stream_ok {
        return ExitCode::from(2);
    }
    ExitCode::from(report.status as u8)
}
