use std::io::{BufRead, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use braidthom::eval::{Env, Value};
use braidthom::parser::{parse_element, parse_program};
use braidthom::{svg, CliError};
use braidthom_core::{run_suite, GenConfig, Suite};
use clap::Parser;

/// Exact calculator for braided Thompson groups.
#[derive(Parser)]
#[command(name = "braidthom", version, about)]
enum Cli {
    /// Interactive calculator loop.
    Repl,
    /// Run a script of calculator statements.
    Eval {
        /// Script file; statements separated by `;` or newlines.
        script: PathBuf,
    },
    /// Run a named property suite on seeded random elements.
    Verify {
        /// Suite name, e.g. `group_axioms` or `fig5_conventions`.
        suite: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Render an element literal as an SVG strand diagram.
    Svg {
        /// Element literal, e.g. `[10100 | s1 | 10100]`.
        element: String,
        /// Output file.
        #[arg(short, long)]
        out: PathBuf,
    },
    /// Print the JSON form of an element literal.
    Json {
        /// Element literal.
        element: String,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err((err, src)) => {
            match src {
                Some(src) => eprintln!("error: {}", err.display_in(&src)),
                None => eprintln!("error: {err}"),
            }
            ExitCode::from(err.exit_code() as u8)
        }
    }
}

type RunError = (CliError, Option<String>);

fn run(cli: Cli) -> Result<ExitCode, RunError> {
    match cli {
        Cli::Repl => repl(),
        Cli::Eval { script } => eval_script(&script),
        Cli::Verify {
            suite,
            trials,
            seed,
            json,
        } => verify(&suite, trials, seed, json),
        Cli::Svg { element, out } => {
            let g = parse_element(&element).map_err(|e| (e, Some(element.clone())))?;
            let doc = svg::render(&g);
            std::fs::write(&out, doc)
                .map_err(|e| (CliError::Io(format!("{}: {e}", out.display())), None))?;
            println!("wrote {}", out.display());
            Ok(ExitCode::SUCCESS)
        }
        Cli::Json { element } => {
            let g = parse_element(&element).map_err(|e| (e, Some(element.clone())))?;
            let json =
                serde_json::to_string(&g).map_err(|e| (CliError::Io(e.to_string()), None))?;
            println!("{json}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn verify(suite: &str, trials: usize, seed: u64, json: bool) -> Result<ExitCode, RunError> {
    let suite = Suite::from_str(suite).map_err(|e| (CliError::Domain(e), None))?;
    let cfg = GenConfig {
        seed,
        ..GenConfig::default()
    };
    let report = run_suite(suite, trials, &cfg);
    if json {
        let rendered = serde_json::to_string_pretty(&report)
            .map_err(|e| (CliError::Io(e.to_string()), None))?;
        println!("{rendered}");
    } else {
        println!("{report}");
        for f in &report.failures {
            println!("  trial {}: {}", f.trial, f.message);
            for w in &f.witnesses {
                println!("    {w}");
            }
        }
    }
    Ok(if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn eval_script(script: &PathBuf) -> Result<ExitCode, RunError> {
    let src = std::fs::read_to_string(script)
        .map_err(|e| (CliError::Io(format!("{}: {e}", script.display())), None))?;
    let stmts = parse_program(&src).map_err(|e| (e, Some(src.clone())))?;
    let mut env = Env::new();
    for stmt in &stmts {
        let value = env.eval_stmt(stmt).map_err(|e| (e, Some(src.clone())))?;
        if matches!(value, Value::Quit) {
            break;
        }
        if value.printable() {
            println!("{value}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn repl() -> Result<ExitCode, RunError> {
    let stdin = std::io::stdin();
    let mut env = Env::new();
    let mut line = String::new();
    loop {
        print!("braidthom> ");
        std::io::stdout().flush().ok();
        line.clear();
        if stdin.lock().read_line(&mut line).unwrap_or(0) == 0 {
            return Ok(ExitCode::SUCCESS); // EOF
        }
        env.record_history(&line);
        let stmts = match parse_program(&line) {
            Ok(stmts) => stmts,
            Err(e) => {
                eprintln!("error: {}", e.display_in(&line));
                continue;
            }
        };
        for stmt in &stmts {
            match env.eval_stmt(stmt) {
                Ok(Value::Quit) => return Ok(ExitCode::SUCCESS),
                Ok(value) => {
                    if value.printable() {
                        println!("{value}");
                    }
                }
                Err(e) => {
                    eprintln!("error: {}", e.display_in(&line));
                    break;
                }
            }
        }
    }
}
