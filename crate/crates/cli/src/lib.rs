//! Command-line front end for `horizon-core` sweeps.

mod args;

use std::io::Write;

use horizon_core::sweep::{emit, run_sweep};
use horizon_core::Error;

pub use args::{command, parse_args, UsageError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CONTRACT: i32 = 3;
pub const EXIT_IO: i32 = 4;

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io { .. } => EXIT_IO,
        Error::Config(_) | Error::Argument(_) | Error::Domain(_) => EXIT_USAGE,
        Error::Contract(_) | Error::Dimension { .. } | Error::Shape(_) => EXIT_CONTRACT,
    }
}

/// Runs a full invocation and returns the process exit status. Messages go
/// to `stderr`; the table goes to the `--out` file or standard output.
pub fn run<I, S>(argv: I, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let spec = match parse_args(argv) {
        Ok(spec) => spec,
        Err(e) if e.help => {
            print!("{}", e.message);
            return EXIT_OK;
        }
        Err(e) => {
            let _ = write!(stderr, "{}", e.message);
            if !e.message.ends_with('\n') {
                let _ = writeln!(stderr);
            }
            return EXIT_USAGE;
        }
    };

    let result = run_sweep(&spec).and_then(|table| {
        emit(&table, &spec.output)?;
        Ok(table)
    });
    match result {
        Ok(table) => {
            if let Some(path) = &spec.output.path {
                let _ = writeln!(
                    stderr,
                    "wrote {} rows to {} in {:.2}s",
                    table.rows.len(),
                    path.display(),
                    table.wall_time.as_secs_f64()
                );
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}
