use std::io::Write;

fn main() {
    let (report, format) = logres::cli::run(std::env::args_os());
    let out = report.render(format);
    if report.exit_code == 2 {
        let _ = std::io::stderr().write_all(out.as_bytes());
    } else {
        let _ = std::io::stdout().write_all(out.as_bytes());
    }
    std::process::exit(report.exit_code);
}
