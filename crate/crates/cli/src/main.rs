use std::io::Write;
use std::path::Path;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use semidec_cli::human::render;
use semidec_cli::run::configure_threads;
use semidec_cli::{run, Cli};

fn emit(json: Option<&Path>, text: &str) -> anyhow::Result<()> {
    match json {
        Some(path) if path != Path::new("-") => {
            std::fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            Ok(out.flush()?)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json = cli.json.as_deref();
    let to_stdout = json == Some(Path::new("-"));
    let result = configure_threads().and_then(|()| run(&cli));
    let outcome = match &result {
        Ok(report) => {
            let mut r = Ok(());
            if json.is_some() {
                r = serde_json::to_string_pretty(report)
                    .context("cannot serialize the report")
                    .and_then(|s| emit(json, &(s + "\n")));
            }
            if !to_stdout {
                r = r.and_then(|()| emit(None, &render(report)));
            }
            r.map(|()| 0)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let mut r = Ok(());
            if json.is_some() {
                r = serde_json::to_string_pretty(&e.to_report())
                    .context("cannot serialize the error")
                    .and_then(|s| emit(json, &(s + "\n")));
            }
            r.map(|()| e.exit_code())
        }
    };
    match outcome {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
