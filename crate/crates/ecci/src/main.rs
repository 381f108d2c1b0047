fn main() {
    // die quietly on a closed pipe, like any other filter
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(ecci::cli::run());
}
