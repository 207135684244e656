fn main() -> std::process::ExitCode {
    std::process::ExitCode::from(pgst::cli::main_entry())
}
