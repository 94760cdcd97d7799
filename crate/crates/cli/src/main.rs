fn main() {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let code = horizon_cli::run(std::env::args().skip(1), &mut std::io::stderr());
    std::process::exit(code);
}
