use cli::{run, CharacterCache};
use std::io::{self, Write};

fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = run(std::env::args_os(), CharacterCache::from_env(), &mut out, &mut io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
