use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::Parser;
use qsphere::config::{Cli, Command, Format, RunConfig};
use qsphere::suites::{run, spectrum_csv};
use qsphere::{CliError, Report};

fn emit(report: &Report, cfg: &RunConfig) -> Result<(), CliError> {
    let sink: Box<dyn Write> = match &cfg.out {
        Some(path) => Box::new(File::create(path)?),
        None => Box::new(io::stdout().lock()),
    };
    let mut w = BufWriter::new(sink);
    match cfg.format {
        Format::Json => report.write_json(&mut w)?,
        Format::Csv => spectrum_csv(&report.suites[0], &mut w)?,
    }
    w.flush()?;
    Ok(())
}

fn execute(cli: &Cli) -> Result<bool, CliError> {
    let cfg = RunConfig::from_cli(cli)?;
    let report = run(cli.command, &cfg)?;
    emit(&report, &cfg)?;
    if cli.command == Command::VerifyAll {
        for (id, ok, names) in report.criteria() {
            let verdict = if ok { "PASS" } else { "FAIL" };
            eprintln!("criterion {id:>2}: {verdict} ({})", names.join(", "));
        }
    }
    for failure in report.failures() {
        eprintln!("failed: {failure}");
    }
    Ok(report.passed)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("qsphere: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
