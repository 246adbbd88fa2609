use std::io::{self, Write};

fn main() {
    // BG_THREADS caps the worker pool; results do not depend on it
    if let Ok(v) = std::env::var("BG_THREADS") {
        match v.trim().parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            _ => {
                eprintln!("error: invalid BG_THREADS '{v}' (expected a positive integer)");
                std::process::exit(bgeom_cli::EXIT_USAGE);
            }
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let mut err = io::stderr();
    let code = bgeom_cli::run_cli(std::env::args_os(), &mut out, &mut err);
    let _ = out.flush();
    std::process::exit(code);
}
