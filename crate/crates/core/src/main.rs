use std::io::Write;

fn main() {
    let (code, out) = uhsl2::cli::run(std::env::args_os());
    let stream = if code == uhsl2::cli::EXIT_USAGE { "stderr" } else { "stdout" };
    let _ = if stream == "stderr" {
        std::io::stderr().write_all(out.as_bytes())
    } else {
        std::io::stdout().write_all(out.as_bytes())
    };
    std::process::exit(code);
}
