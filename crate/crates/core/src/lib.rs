//! Exact computation and machine verification for the family of identities
//! connecting central binomial series values at non-positive integers,
//! Lehmer's polynomial pair (p_n, q_n), bivariate Eulerian polynomials, and
//! poly-Bernoulli numbers.
//!
//! The crate is organized around five modules:
//!
//! - [`exact`]: rationals, dense polynomials (one and two variables),
//!   truncated power series, and combinatorial number functions;
//! - [`eulerian`]: permutation statistics and the F_n(x,y) polynomials;
//! - [`lehmer`]: the (p_n, q_n) recursion, exact zeta values at non-positive
//!   integers, and floating-point cross-checks of the arcsin closed forms;
//! - [`polybernoulli`]: poly-Bernoulli numbers by independent routes, the
//!   antidiagonal sums, and the series machinery behind their recursion;
//! - [`verify`]: named suites binding every identity to a pass/fail check
//!   with a machine-readable report.

pub mod error;
pub mod eulerian;
pub mod exact;
pub mod lehmer;
pub mod polybernoulli;
pub mod verify;

pub use error::{Error, Result};
pub use exact::{BiPoly, Poly, Rat, Series};
pub use lehmer::{PQPair, ZetaValue};
pub use verify::CheckResult;
