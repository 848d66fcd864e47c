mod cli;
mod commands;
mod report;
mod session;

use std::ffi::OsString;
use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

use cli::Cli;
use commands::Failure;
use report::Status;
use session::Session;

fn parse(argv: Vec<OsString>) -> Result<Cli, ExitCode> {
    Cli::try_parse_from(argv).map_err(|e| {
        let _ = e.print();
        match e.kind() {
            ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
            _ => ExitCode::from(2),
        }
    })
}

fn fail(f: &Failure) -> ExitCode {
    eprintln!("error: {f}");
    ExitCode::from(f.exit_code() as u8)
}

fn main() -> ExitCode {
    let argv: Vec<OsString> = std::env::args_os().collect();
    let mut cli = match parse(argv.clone()) {
        Ok(c) => c,
        Err(code) => return code,
    };
    if let Some(path) = cli.session.clone() {
        if cli.command.is_some() {
            eprintln!("error: --session replaces the subcommand; give one or the other");
            return ExitCode::from(2);
        }
        let args = match Session::load(&path).and_then(|s| s.to_args()) {
            Ok(a) => a,
            Err(f) => return fail(&f),
        };
        // keep the global flags of the original invocation
        let mut full: Vec<OsString> = vec![argv[0].clone()];
        full.extend(args.into_iter().map(OsString::from));
        let mut skip = false;
        for a in &argv[1..] {
            if skip {
                skip = false;
                continue;
            }
            let s = a.to_string_lossy();
            if s == "--session" {
                skip = true;
            } else if !s.starts_with("--session=") {
                full.push(a.clone());
            }
        }
        cli = match parse(full) {
            Ok(c) => c,
            Err(code) => return code,
        };
    }
    let Some(command) = cli.command else {
        eprintln!("error: no subcommand given; see --help");
        return ExitCode::from(2);
    };
    if let Some(budget) = cli.budget {
        symlab_core::groebner::set_step_budget(budget);
    }
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(2);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .expect("thread pool is configured once");
    }

    let start = Instant::now();
    let report = match commands::run(&command) {
        Ok(r) => r,
        Err(f) => return fail(&f),
    };
    let elapsed = start.elapsed().as_millis();
    let text = if cli.json {
        let mut s = serde_json::to_string_pretty(&report.to_json(elapsed)).expect("serializable");
        s.push('\n');
        s
    } else {
        report.to_text()
    };
    let mut out = std::io::stdout().lock();
    if out.write_all(text.as_bytes()).and_then(|_| out.flush()).is_err() {
        return ExitCode::from(2);
    }
    match report.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
    }
}
