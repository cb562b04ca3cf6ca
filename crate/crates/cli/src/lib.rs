//! Command-line surface for `rootode`: parses a problem `R(x)`, runs the
//! derivations or numerical checks, and renders a report as JSON, aligned
//! text, or LaTeX.

pub mod args;
pub mod commands;
pub mod demos;
pub mod latex;
pub mod parse;
pub mod report;

pub use args::Cli;
pub use commands::{render, run};
pub use report::{Report, Status};

/// Parses `argv`, runs, prints, and returns the process exit code.
pub fn main_with_args<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    use clap::Parser;
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    let report = run(&cli);
    let (out, err) = render(&cli, &report);
    print!("{out}");
    eprint!("{err}");
    report.exit_code()
}
