use std::io::{self, Write};

fn main() {
    if let Ok(v) = std::env::var("SECANT_CENSUS_THREADS") {
        match v.parse::<usize>() {
            Ok(n) if n > 0 => {
                let _ = rayon::ThreadPoolBuilder::new()
                    .num_threads(n)
                    .build_global();
            }
            _ => {
                eprintln!("error: SECANT_CENSUS_THREADS must be a positive integer, got `{v}`");
                std::process::exit(secant_census::cli::EXIT_USAGE);
            }
        }
    }
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let code = secant_census::cli::run(std::env::args_os(), &mut out, &mut io::stderr());
    let _ = out.flush();
    std::process::exit(code);
}
