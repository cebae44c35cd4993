mod args;
mod commands;
mod exit;
mod input;
mod report;

use std::io::Write;
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command, Format};
use commands::{Context, MatesRequest, VerifyRequest};
use input::load_graphs;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(exit::USAGE),
            };
        }
    };
    let format = cli.run.format;
    match run(cli) {
        Ok((report, code)) => {
            let text = match format {
                Format::Json => report.to_json(),
                Format::Table => report.to_table(),
            };
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(exit::CONTRADICTION);
            }
            ExitCode::from(code)
        }
        Err(failure) => {
            for m in failure.messages() {
                eprintln!("qwalk: {m}");
            }
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: Cli) -> commands::Outcome {
    let ctx = Context::new(cli.run)?;
    match cli.command {
        Command::Walk { input } => commands::walk(&ctx, &load_graphs(&input)?),
        Command::Certify {
            theorem,
            k,
            t,
            probe_k,
            input,
        } => commands::certify(&ctx, &load_graphs(&input)?, theorem, k, t, probe_k),
        Command::Verify {
            identity,
            k,
            t,
            tol,
            probe_k,
            input,
        } => commands::verify(
            &ctx,
            &load_graphs(&input)?,
            VerifyRequest {
                identity,
                k,
                t,
                tol,
                probe_k,
            },
        ),
        Command::Mates {
            enumerate,
            cross_validate,
            oracle,
            allow_order_8,
            input,
        } => {
            let req = MatesRequest {
                enumerate,
                cross_validate,
                oracle,
                allow_order_8,
            };
            commands::mates(&ctx, req, || load_graphs(&input))
        }
    }
}
