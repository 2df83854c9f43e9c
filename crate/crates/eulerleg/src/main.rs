use std::process::ExitCode;

fn main() -> ExitCode {
    // Die quietly on SIGPIPE so `eulerleg ... | head` behaves like other
    // line-oriented Unix tools instead of panicking mid-write.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    ExitCode::from(eulerleg::cli::run())
}
