//! Exact differential-equation residuals for the two generating functions.
//!
//! These apply the characterizing differential operators to truncated
//! expansions built from the computed coefficients, using only generic
//! polynomial/series arithmetic. A correct implementation yields residuals
//! that vanish identically to the stated order.

use super::{a_seq, pq_polys};
use crate::exact::{Poly, Rat, Series};

/// Residual of ((2xt - 1) d/dt + 2x(1-x) d/dx + 1) applied to
/// Q(x,t) = sum_{n=0}^{order} q_{n-1}(x) t^n/n!.
///
/// Returns the coefficient polynomials of t^0..t^{order-1}; the derivative
/// in t is only known to that order. All entries must be the zero polynomial.
pub fn q_ode_residual(order: usize) -> Vec<Poly> {
    assert!(order >= 1);
    // c[n] = q_{n-1}(x)/n!
    let mut inv_factorial = Rat::one();
    let c: Vec<Poly> = (0..=order)
        .map(|n| {
            if n > 0 {
                inv_factorial = &inv_factorial / &Rat::from_int(n as i64);
            }
            pq_polys(n as i64 - 1).q.scalar_mul(&inv_factorial)
        })
        .collect();

    // dQ/dt coefficients: d[n] = (n+1) c[n+1], valid for n <= order-1
    let d: Vec<Poly> = (0..order)
        .map(|n| c[n + 1].scalar_mul(&Rat::from_int(n as i64 + 1)))
        .collect();

    let two_x = Poly::from_i64(&[0, 2]);
    let two_x_one_minus_x = Poly::from_i64(&[0, 2, -2]);
    (0..order)
        .map(|n| {
            // [t^n](2xt dQ/dt) = 2x * n * c[n]  (the shift puts d[n-1] = n c[n] here)
            let shifted = if n == 0 {
                Poly::zero()
            } else {
                &two_x * &d[n - 1]
            };
            shifted - &d[n] + &two_x_one_minus_x * &c[n].derivative() + &c[n]
        })
        .collect()
}

/// Residual of (4 - e^t) d/dt - 2 applied to A(t) = sum a_n t^{n+1}/(n+1)!,
/// minus the forcing term 3 e^t. Exact series arithmetic; the result has
/// order `order - 1` and must be identically zero.
pub fn a_ode_residual(order: usize) -> Series {
    assert!(order >= 1);
    let exp_t = Series::t(order).exp();
    // A(t) = sum_{n=0}^{order-1} a_n t^{n+1}/(n+1)!
    let mut inv_factorial = Rat::one();
    let a = Series::from_fn(order, |m| {
        if m == 0 {
            return Rat::zero();
        }
        inv_factorial = &inv_factorial / &Rat::from_int(m as i64);
        a_seq(m as u64 - 1) * &inv_factorial
    });
    let four_minus_exp = &Series::constant(order, Rat::from_int(4)) - &exp_t;
    let lhs = &four_minus_exp.truncate(order - 1) * &a.derivative()
        - &a.truncate(order - 1).scalar_mul(&Rat::from_int(2));
    lhs - &exp_t.truncate(order - 1).scalar_mul(&Rat::from_int(3))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_ode_residual_vanishes_to_order_12() {
        for (n, r) in q_ode_residual(12).iter().enumerate() {
            assert!(r.is_zero(), "t^{n} coefficient: {r}");
        }
    }

    #[test]
    fn a_ode_residual_vanishes_to_order_12() {
        let r = a_ode_residual(12);
        assert!(r.is_zero(), "residual {r}");
    }
}
