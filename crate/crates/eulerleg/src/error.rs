use num_complex::Complex64;

/// Crate-wide error type.
#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// Input outside an operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// An iterative scheme hit its cap before reaching the requested
    /// tolerance. Carries the best value seen and its error estimate.
    #[error("tolerance not reached: best value {best}, estimated error {est:.3e}")]
    ToleranceNotReached { best: Complex64, est: f64 },

    /// A result that must be real kept a too-large imaginary part.
    #[error(
        "consistency error: imaginary residue {imag:.3e} exceeds {tol:.3e} (real part {real})"
    )]
    ImaginaryResidue { real: f64, imag: f64, tol: f64 },

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
