use viete_unity::cli;

fn main() {
    let config = match cli::parse_args(std::env::args_os()) {
        Ok(config) => config,
        Err(err) => err.exit(),
    };
    let (code, output) = cli::run(&config);
    print!("{output}");
    std::process::exit(code);
}
