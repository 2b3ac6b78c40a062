//! `qcchar`: command-line access to submodule counts, flag counts, extension
//! groups, quantum cluster characters and the formula checkers, over a small
//! built-in catalog or user-supplied JSON.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input error, 3
//! enumeration cap, 4 incompatible `Λ`.

mod args;
mod cache;
pub mod catalog;
mod commands;
mod context;
mod error;
pub mod suites;

pub use args::{CatalogAction, Cli, Command, Style, Suite};
pub use cache::{CharacterCache, CACHE_ENV, DEFAULT_CACHE_DIR};
pub use commands::{execute, run_job};
pub use context::Context;
pub use error::CliError;

use cache::CharacterCache as CacheKey;
use clap::Parser;
use std::io::Write;

/// Parses `args` (including the program name), runs the command and returns
/// the process exit code. Errors are reported on `err`.
pub fn run<I, T>(args: I, cache: CharacterCache, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { write!(out, "{text}") } else { write!(err, "{text}") };
            return code;
        }
    };
    match execute(&cli, &Context::new(cache), out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "qcchar: {e}");
            e.exit_code()
        }
    }
}
