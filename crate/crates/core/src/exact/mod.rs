//! Exact arithmetic: rationals, dense polynomials in one and two variables,
//! truncated formal power series, and combinatorial number functions.
//!
//! All values are immutable after construction and all operations are pure,
//! so everything here is safe to share across threads.

mod bipoly;
mod combinat;
mod poly;
mod rat;
mod series;

pub use bipoly::BiPoly;
pub use combinat::{binomial, double_factorial_odd, factorial, pochhammer, stirling2};
pub use poly::Poly;
pub use rat::Rat;
pub use series::Series;
