//! Legendre polynomials P_n(t) computed through independent representations,
//! with exact and numeric cross-checks between them.
//!
//! The classical three-term recurrence
//!
//! ```text
//! (n+1) P_{n+1}(t) = (2n+1) t P_n(t) − n P_{n−1}(t),   P_0 = 1, P_1 = t
//! ```
//!
//! is the defining route ([`recurrence`]). Every other module reproduces the
//! same family along a different road and the verification suites hold the
//! roads to each other:
//!
//! * [`trinomial`]: central coefficients of (a + bx + cx²)ⁿ and the Taylor
//!   series of (1 − 2bx + (b²−4ac)x²)^(−1/2), which contains the Legendre
//!   generating function as the unit-discriminant case;
//! * [`recurrence::primitive_solve`]: P_n(t) recovered as the artanh
//!   coefficient of the primitive of xⁿ/√(1 − 2xt + x²);
//! * [`integrals`]: the Laplace mean (1/π)∫₀^π (t + √(t²−1) cosφ)ⁿ dφ, its
//!   reciprocal-power partner with exponent −n−1, the cosine-kernel family
//!   ∫₀^π cos(kφ)/(1 + a² − 2a cosφ)ⁿ dφ with its difference and functional
//!   equations, and the singular integral ∫ xⁿ/√(a² − 2bx + cx²) dx taken
//!   between the roots of the radicand;
//! * [`hypergeom`]: the Gauss series ₂F₁ and the Euler transformation,
//!   which underwrites the exponent symmetry used by the integral family.
//!
//! [`quadrature`] supplies the Gauss-Legendre and Gauss-Chebyshev rules the
//! integral representations are evaluated with, [`verify`] bundles the
//! residual grids, and [`cli`] exposes everything as the `eulerleg` binary.

pub mod cli;
pub mod exact;
pub mod hypergeom;
pub mod integrals;
pub mod quadrature;
pub mod recurrence;
pub mod trinomial;
pub mod verify;

mod error;

pub use error::{Error, Result};
pub use exact::{Polynomial, Rational, RationalPolynomial};
