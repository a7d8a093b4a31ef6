//! Lehmer's polynomial pair (p_n, q_n), exact central-binomial zeta values
//! at non-positive integers, the rational sequence a_n = (2/3)^n p_n(1/4),
//! and bridges from both polynomial families to the bivariate Eulerian
//! polynomials.
//!
//! The defining recursion, from the initial values p_{-1} = 0, q_{-1} = 1:
//!
//! ```text
//! p_{k+1} = 2(kx+1) p_k + 2x(1-x) p_k' + q_k
//! q_{k+1} = (2(k+1)x+1) q_k + 2x(1-x) q_k'
//! ```
//!
//! Pairs are memoized in a process-wide table; the recursion is the only
//! generator, closed forms are used for verification only.

mod numeric;
mod ode;

pub use numeric::{
    a_egf_closed, a_egf_truncated, closed_form_rhs, dirichlet_partial_sum, p_egf_closed,
    p_egf_truncated, q_egf_closed, q_egf_truncated, series_partial_sum,
};
pub use ode::{a_ode_residual, q_ode_residual};

use crate::eulerian;
use crate::exact::{binomial, Poly, Rat};
use std::fmt;
use std::sync::Mutex;

/// One entry of the coupled Lehmer recursion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PQPair {
    pub index: i64,
    pub p: Poly,
    pub q: Poly,
}

/// An exact value r + s * pi/sqrt(3).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZetaValue {
    pub rational_part: Rat,
    pub pi_sqrt3_part: Rat,
}

impl ZetaValue {
    /// Double-precision rendering; exactness lives in the rational pair.
    pub fn to_f64(&self) -> f64 {
        self.rational_part.to_f64() + self.pi_sqrt3_part.to_f64() * pi_over_sqrt3()
    }
}

impl fmt::Display for ZetaValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + ({})*pi/sqrt(3)",
            self.rational_part, self.pi_sqrt3_part
        )
    }
}

/// pi/sqrt(3) in double precision (display and numeric checks only).
pub fn pi_over_sqrt3() -> f64 {
    std::f64::consts::PI / 3f64.sqrt()
}

// memo[i] holds the pair for k = i - 1, so memo[0] is (p_{-1}, q_{-1})
static PQ_MEMO: Mutex<Vec<(Poly, Poly)>> = Mutex::new(Vec::new());

/// The pair (p_k, q_k) for k >= -1, from the memoized recursion.
pub fn pq_polys(k: i64) -> PQPair {
    assert!(k >= -1, "pq_polys requires k >= -1");
    let idx = (k + 1) as usize;
    let mut memo = PQ_MEMO.lock().unwrap();
    if memo.is_empty() {
        memo.push((Poly::zero(), Poly::one()));
    }
    while memo.len() <= idx {
        let step = memo.len() as i64 - 2; // recursion index of the last entry
        let next = {
            let (p, q) = memo.last().unwrap();
            let two_x_one_minus_x = Poly::from_i64(&[0, 2, -2]);
            let next_p = &Poly::from_coeffs(vec![Rat::from_int(2), Rat::from_int(2 * step)]) * p
                + &two_x_one_minus_x * &p.derivative()
                + q;
            let next_q = &Poly::from_coeffs(vec![Rat::one(), Rat::from_int(2 * (step + 1))]) * q
                + &two_x_one_minus_x * &q.derivative();
            (next_p, next_q)
        };
        memo.push(next);
    }
    let (p, q) = memo[idx].clone();
    PQPair { index: k, p, q }
}

/// Exact value of the central binomial zeta function at -k:
/// (1/3)(2/3)^k p_k(1/4) + (1/3)(2/3)^{k+1} q_k(1/4) * pi/sqrt(3).
pub fn zeta_cb_neg(k: u64) -> ZetaValue {
    let pair = pq_polys(k as i64);
    let quarter = Rat::new(1, 4);
    let third = Rat::new(1, 3);
    let two_thirds = Rat::new(2, 3);
    ZetaValue {
        rational_part: &third * &two_thirds.pow(k as i64) * pair.p.eval(&quarter),
        pi_sqrt3_part: &third * &two_thirds.pow(k as i64 + 1) * pair.q.eval(&quarter),
    }
}

/// a_n = (2/3)^n p_n(1/4), the rational scaling of p at the zeta point.
pub fn a_seq(n: u64) -> Rat {
    Rat::new(2, 3).pow(n as i64) * pq_polys(n as i64).p.eval(&Rat::new(1, 4))
}

/// p_n from bivariate Eulerian polynomials:
/// p_n(x) = 2^n sum_{k=0}^{n} C(n+1, k) F_{n-k}(x, 1/2) F_k(x, 1/2).
pub fn p_via_eulerian(n: u64) -> Poly {
    let half = Rat::new(1, 2);
    let f: Vec<Poly> = (0..=n)
        .map(|k| eulerian::bivariate_at_y(k as usize, &half))
        .collect();
    let mut total = Poly::zero();
    for k in 0..=n {
        let c = Rat::from_bigint(binomial(n + 1, k as i64));
        total = total + (&f[(n - k) as usize] * &f[k as usize]).scalar_mul(&c);
    }
    total.scalar_mul(&Rat::from_int(2).pow(n as i64))
}

/// q_n from bivariate Eulerian polynomials: q_n(x) = 2^{n+1} F_{n+1}(x, 1/2).
pub fn q_via_eulerian(n: i64) -> Poly {
    assert!(n >= -1, "q_via_eulerian requires n >= -1");
    let scale = Rat::from_int(2).pow(n + 1);
    eulerian::bivariate_at_y((n + 1) as usize, &Rat::new(1, 2)).scalar_mul(&scale)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::double_factorial_odd;

    #[test]
    fn initial_pairs_match_known_polynomials() {
        let init = pq_polys(-1);
        assert_eq!(init.p, Poly::zero());
        assert_eq!(init.q, Poly::one());
        assert_eq!(pq_polys(0).p, Poly::one());
        assert_eq!(pq_polys(0).q, Poly::one());
        assert_eq!(pq_polys(1).p, Poly::from_i64(&[3]));
        assert_eq!(pq_polys(1).q, Poly::from_i64(&[1, 2]));
        assert_eq!(pq_polys(2).p, Poly::from_i64(&[7, 8]));
        assert_eq!(pq_polys(2).q, Poly::from_i64(&[1, 10, 4]));
    }

    #[test]
    fn table_rows_for_q() {
        assert_eq!(pq_polys(3).q, Poly::from_i64(&[1, 36, 60, 8]));
        assert_eq!(pq_polys(4).q, Poly::from_i64(&[1, 116, 516, 296, 16]));
    }

    #[test]
    fn q_degree_equals_index() {
        assert_eq!(pq_polys(-1).q.degree(), Some(0));
        for k in 0..=20i64 {
            assert_eq!(pq_polys(k).q.degree(), Some(k as usize), "deg q_{k}");
        }
    }

    #[test]
    fn zeta_values_at_small_k() {
        let z0 = zeta_cb_neg(0);
        assert_eq!(z0.rational_part, Rat::new(1, 3));
        assert_eq!(z0.pi_sqrt3_part, Rat::new(2, 9));
        let z1 = zeta_cb_neg(1);
        assert_eq!(z1.rational_part, Rat::new(2, 3));
        assert_eq!(z1.pi_sqrt3_part, Rat::new(2, 9));
        let z2 = zeta_cb_neg(2);
        assert_eq!(z2.rational_part, Rat::new(4, 3));
        assert_eq!(z2.pi_sqrt3_part, Rat::new(10, 27));
    }

    #[test]
    fn a_sequence_small_values() {
        assert_eq!(a_seq(0), Rat::one());
        assert_eq!(a_seq(1), Rat::from_int(2));
        assert_eq!(a_seq(2), Rat::from_int(4));
    }

    #[test]
    fn p_convolution_matches_recursion() {
        assert_eq!(p_via_eulerian(0), Poly::one());
        assert_eq!(p_via_eulerian(1), Poly::from_i64(&[3]));
        assert_eq!(p_via_eulerian(2), Poly::from_i64(&[7, 8]));
        for n in 0..=10 {
            assert_eq!(p_via_eulerian(n), pq_polys(n as i64).p, "p_{n}");
        }
    }

    #[test]
    fn q_scaling_matches_recursion() {
        assert_eq!(q_via_eulerian(-1), Poly::one());
        assert_eq!(q_via_eulerian(3), Poly::from_i64(&[1, 36, 60, 8]));
        assert_eq!(q_via_eulerian(4), Poly::from_i64(&[1, 116, 516, 296, 16]));
        for n in -1..=12 {
            assert_eq!(q_via_eulerian(n), pq_polys(n).q, "q_{n}");
        }
    }

    #[test]
    fn q_at_one_is_odd_double_factorial() {
        for n in 0..=15u64 {
            assert_eq!(
                pq_polys(n as i64).q.eval(&Rat::one()),
                Rat::from_bigint(double_factorial_odd(n)),
                "q_{n}(1)"
            );
        }
    }

    #[test]
    fn memo_is_safe_under_concurrent_access() {
        let handles: Vec<_> = (0..8)
            .map(|i| {
                std::thread::spawn(move || {
                    let pair = pq_polys(10 + (i % 3));
                    pair.q.eval(&Rat::one())
                })
            })
            .collect();
        for h in handles {
            let v = h.join().unwrap();
            assert!(!v.is_zero());
        }
    }
}
