use std::io;

fn main() {
    let stdin = io::stdin();
    let mut input = stdin.lock();
    let mut stdout = io::stdout().lock();
    let mut stderr = io::stderr().lock();
    let code = sigma_gray_cli::run(std::env::args_os(), &mut input, &mut stdout, &mut stderr);
    std::process::exit(code);
}
