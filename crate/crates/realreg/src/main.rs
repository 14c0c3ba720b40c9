use std::io::Write;

fn main() {
    let result = realreg::run(std::env::args_os());
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(result.stdout.as_bytes());
    let _ = stdout.flush();
    std::process::exit(result.exit_code);
}
