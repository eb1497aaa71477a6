fn main() {
    // die quietly on closed pipes like other unix filters
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(wronskian_appell::cli::run());
}
