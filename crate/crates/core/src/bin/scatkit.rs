fn main() -> std::process::ExitCode {
    scatkit::cli::main()
}
