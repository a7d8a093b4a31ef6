//! Double-precision cross-validation of the arcsin closed forms against
//! truncated series. Exact coefficients come from the memoized recursion;
//! only the final evaluation is floating point.

use super::pq_polys;
use crate::error::{Error, Result};

fn check(cond: bool, constraint: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Domain {
            constraint: constraint.to_string(),
        })
    }
}

/// Partial sum sum_{n=1}^{terms} (2n)^k (2x)^{2n} / C(2n,n).
///
/// The reciprocal central binomial coefficient is carried incrementally so
/// no factorial ever overflows.
pub fn series_partial_sum(k: i64, x: f64, terms: u32) -> Result<f64> {
    check(x.abs() < 1.0, "|x| < 1")?;
    assert!(terms >= 1, "at least one term");
    let ratio = (2.0 * x) * (2.0 * x);
    let mut inv_binom = 0.5; // 1 / C(2,1)
    let mut power = ratio; // (2x)^(2n)
    let mut total = 0.0;
    for n in 1..=terms as u64 {
        if n > 1 {
            // C(2n,n) = C(2n-2,n-1) * 2(2n-1)/n
            inv_binom *= n as f64 / (2.0 * (2 * n - 1) as f64);
            power *= ratio;
        }
        total += ((2 * n) as f64).powi(k as i32) * power * inv_binom;
    }
    Ok(total)
}

/// Right-hand side of the closed-form evaluation:
/// x/(1-x^2)^{k+3/2} * (x sqrt(1-x^2) p_k(x^2) + arcsin(x) q_k(x^2)).
pub fn closed_form_rhs(k: i64, x: f64) -> Result<f64> {
    assert!(k >= -1, "closed_form_rhs requires k >= -1");
    check(x.abs() < 1.0, "|x| < 1")?;
    let pair = pq_polys(k);
    let x2 = x * x;
    let one_minus = 1.0 - x2;
    let prefactor = x / one_minus.powf(k as f64 + 1.5);
    let p_part = x * one_minus.sqrt() * pair.p.eval_f64(x2);
    let q_part = x.asin() * pair.q.eval_f64(x2);
    Ok(prefactor * (p_part + q_part))
}

/// Dirichlet partial sum sum_{n=1}^{terms} n^k / C(2n,n), the defining
/// series of the central binomial zeta function at s = -k.
pub fn dirichlet_partial_sum(k: i64, terms: u32) -> f64 {
    let mut inv_binom = 0.5;
    let mut total = 0.0;
    for n in 1..=terms as u64 {
        if n > 1 {
            inv_binom *= n as f64 / (2.0 * (2 * n - 1) as f64);
        }
        total += (n as f64).powi(k as i32) * inv_binom;
    }
    total
}

/// Closed form of P(x,t) = sum_{n>=1} p_{n-1}(x) t^n/n!:
/// e^{(1-x)t} (arcsin(sqrt(x) e^{(1-x)t}) - arcsin(sqrt(x)))
///   / (sqrt(x) (1 - x e^{2(1-x)t})^{1/2}).
pub fn p_egf_closed(x: f64, t: f64) -> Result<f64> {
    check(0.0 < x && x < 1.0, "0 < x < 1")?;
    let growth = ((1.0 - x) * t).exp();
    let arg = x.sqrt() * growth;
    check(arg <= 1.0, "sqrt(x) e^{(1-x)t} <= 1 (arcsin argument)")?;
    let radicand = 1.0 - x * growth * growth;
    check(radicand > 0.0, "1 - x e^{2(1-x)t} > 0")?;
    Ok(growth * (arg.asin() - x.sqrt().asin()) / (x.sqrt() * radicand.sqrt()))
}

/// Closed form of Q(x,t) = sum_{n>=0} q_{n-1}(x) t^n/n!:
/// ((1-x)/(e^{2t(x-1)} - x))^{1/2}.
pub fn q_egf_closed(x: f64, t: f64) -> Result<f64> {
    check(0.0 < x && x < 1.0, "0 < x < 1")?;
    let denom = (2.0 * t * (x - 1.0)).exp() - x;
    check(
        denom > 0.0 && (1.0 - x) / denom > 0.0,
        "(1-x)/(e^{2t(x-1)} - x) > 0",
    )?;
    Ok(((1.0 - x) / denom).sqrt())
}

/// Closed form of sum_{n>=0} a_n t^{n+1}/(n+1)!:
/// 6 e^{t/2} (arcsin(e^{t/2}/2) - arcsin(1/2)) / (4 - e^t)^{1/2}.
pub fn a_egf_closed(t: f64) -> Result<f64> {
    check(t.exp() < 4.0, "e^t < 4")?;
    let half_growth = (t / 2.0).exp();
    Ok(6.0 * half_growth * ((half_growth / 2.0).asin() - 0.5f64.asin()) / (4.0 - t.exp()).sqrt())
}

/// Truncated EGF sum_{n=1}^{terms} p_{n-1}(x) t^n/n! in double precision.
pub fn p_egf_truncated(x: f64, t: f64, terms: u32) -> f64 {
    let mut total = 0.0;
    let mut t_pow_over_fact = 1.0;
    for n in 1..=terms as i64 {
        t_pow_over_fact *= t / n as f64;
        total += pq_polys(n - 1).p.eval_f64(x) * t_pow_over_fact;
    }
    total
}

/// Truncated EGF sum_{n=0}^{terms} q_{n-1}(x) t^n/n! in double precision.
pub fn q_egf_truncated(x: f64, t: f64, terms: u32) -> f64 {
    let mut total = 1.0; // n = 0 term: q_{-1} = 1
    let mut t_pow_over_fact = 1.0;
    for n in 1..=terms as i64 {
        t_pow_over_fact *= t / n as f64;
        total += pq_polys(n - 1).q.eval_f64(x) * t_pow_over_fact;
    }
    total
}

/// Truncated sum_{n=0}^{terms} a_n t^{n+1}/(n+1)! in double precision.
/// a_n = (2/3)^n p_n(1/4) is evaluated from the exact p coefficients in
/// floating point; every term is positive, so the sum is well-conditioned.
pub fn a_egf_truncated(t: f64, terms: u32) -> f64 {
    let mut total = 0.0;
    let mut t_pow_over_fact = 1.0;
    let mut scale = 1.0; // (2/3)^n
    for n in 0..=terms as i64 {
        if n > 0 {
            scale *= 2.0 / 3.0;
        }
        t_pow_over_fact *= t / (n + 1) as f64;
        total += pq_polys(n).p.eval_f64(0.25) * scale * t_pow_over_fact;
    }
    total
}
