//! Permutation statistics, Eulerian numbers, bivariate Eulerian polynomials
//! F_n(x,y) = sum over S_n of x^exc y^cyc, and s-Eulerian polynomials via
//! inversion sequences.
//!
//! F_n is computed two independent ways: by the Savage-Viswanathan recursion
//! (`bivariate`) and by full enumeration of S_n (`bivariate_brute`). The
//! brute-force routes are guarded: enumerations beyond the configured cap
//! return an error naming the bound.

mod inversion;
mod permutation;

pub use inversion::InversionSequence;
pub use permutation::{Permutation, Permutations};

use crate::error::{Error, Result};
use crate::exact::{BiPoly, Poly, Rat, Series};
use num_bigint::BigInt;
use num_traits::Zero;

/// Default cap on n for brute-force enumeration of S_n.
pub const DEFAULT_PERMUTATION_CAP: usize = 9;

/// Default cap on the number of inversion sequences enumerated.
pub const DEFAULT_STATE_CAP: u64 = 1_000_000;

/// Eulerian number A(n, k): permutations of [n] with exactly k excedances.
/// Zero when k >= n (for n >= 1).
pub fn eulerian_number(n: usize, k: usize) -> BigInt {
    assert!(n >= 1, "eulerian_number requires n >= 1");
    if k >= n {
        return BigInt::zero();
    }
    // A(m, j) = (j+1) A(m-1, j) + (m-j) A(m-1, j-1)
    let mut row = vec![BigInt::from(1)];
    for m in 2..=n {
        let mut next = vec![BigInt::zero(); m];
        for (j, a) in row.iter().enumerate() {
            next[j] += BigInt::from(j as u64 + 1) * a;
            next[j + 1] += BigInt::from((m - j - 1) as u64) * a;
        }
        row = next;
    }
    row[k].clone()
}

/// F_n(x, y) by the recursion F_{m+1} = (x(1-x) d/dx + mx + y) F_m, F_0 = 1.
pub fn bivariate(n: usize) -> BiPoly {
    let x = BiPoly::x();
    let y = BiPoly::y();
    let x_one_minus_x = &x - &(&x * &x);
    let mut f = BiPoly::one();
    for m in 0..n {
        let drift = &x_one_minus_x * &f.partial_x();
        let scaled = (&x.scalar_mul(&Rat::from_int(m as i64)) + &y) * &f;
        f = drift + scaled;
    }
    f
}

/// F_n(x, y) by full enumeration of S_n, with the default guard.
pub fn bivariate_brute(n: usize) -> Result<BiPoly> {
    bivariate_brute_with_cap(n, DEFAULT_PERMUTATION_CAP)
}

/// F_n(x, y) by full enumeration, guarded by `cap`.
pub fn bivariate_brute_with_cap(n: usize, cap: usize) -> Result<BiPoly> {
    if n > cap {
        return Err(Error::EnumerationGuard {
            what: "bivariate Eulerian brute force over S_n",
            requested: n as u64,
            bound: cap as u64,
        });
    }
    if n == 0 {
        return Ok(BiPoly::one());
    }
    // counts[exc][cyc] over all of S_n; exc <= n-1, cyc <= n
    let mut counts = vec![vec![0u64; n + 1]; n];
    for p in Permutations::all(n) {
        counts[p.excedances()][p.cycle_count()] += 1;
    }
    let coeffs = counts
        .into_iter()
        .map(|row| row.into_iter().map(|c| Rat::from_int(c as i64)).collect())
        .collect();
    Ok(BiPoly::from_coeffs(coeffs))
}

/// F_n(x, y0): the bivariate polynomial with y substituted.
pub fn bivariate_at_y(n: usize, y0: &Rat) -> Poly {
    bivariate(n).subst_y(y0)
}

/// s-Eulerian polynomial for the given bound sequence, with the default guard.
pub fn s_eulerian(bounds: &[u64]) -> Result<Poly> {
    s_eulerian_with_cap(bounds, DEFAULT_STATE_CAP)
}

/// s-Eulerian polynomial by full enumeration of the inversion sequences,
/// guarded by `cap` on the number of sequences.
pub fn s_eulerian_with_cap(bounds: &[u64], cap: u64) -> Result<Poly> {
    let mut states: u64 = 1;
    for &s in bounds {
        assert!(s >= 1, "bounds must be positive");
        states = states.saturating_mul(s);
        if states > cap {
            return Err(Error::EnumerationGuard {
                what: "s-Eulerian inversion sequence enumeration",
                requested: states,
                bound: cap,
            });
        }
    }
    let n = bounds.len();
    let mut coeffs = vec![Rat::zero(); n + 1];
    // mixed-radix odometer over 0 <= e_i < s_i
    let mut entries = vec![0u64; n];
    loop {
        let asc = inversion::ascents_of(&entries, bounds);
        coeffs[asc] = &coeffs[asc] + &Rat::one();
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(Poly::from_coeffs(coeffs));
            }
            i -= 1;
            entries[i] += 1;
            if entries[i] < bounds[i] {
                break;
            }
            entries[i] = 0;
        }
    }
}

/// Truncated exponential generating series sum_n F_n(x0, y0) t^n / n!.
pub fn egf_from_polynomials(x0: &Rat, y0: &Rat, order: usize) -> Series {
    let mut inv_factorial = Rat::one();
    Series::from_fn(order, |n| {
        if n > 0 {
            inv_factorial = &inv_factorial / &Rat::from_int(n as i64);
        }
        bivariate(n).eval(x0, y0) * &inv_factorial
    })
}

/// The closed form ((1 - x0)/(e^{t(x0-1)} - x0))^{y0} as a truncated series
/// in t, for rational x0 != 1 and rational exponent y0. The rational power
/// is taken as exp(y0 log(...)), which is well-defined because the base has
/// constant term 1.
pub fn egf_closed_form(x0: &Rat, y0: &Rat, order: usize) -> Series {
    assert!(
        !(x0 - &Rat::one()).is_zero(),
        "closed form requires x0 != 1"
    );
    let exponent = Series::t(order).scalar_mul(&(x0 - &Rat::one()));
    let denom = &exponent.exp() - &Series::constant(order, x0.clone());
    let base = denom.recip().scalar_mul(&(&Rat::one() - x0));
    base.pow_rat(y0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{factorial, pochhammer};

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn eulerian_numbers() {
        assert_eq!(eulerian_number(3, 1), BigInt::from(4));
        for n in 1..=8 {
            assert_eq!(eulerian_number(n, 0), BigInt::from(1), "A({n},0)");
            assert_eq!(eulerian_number(n, n), BigInt::zero());
        }
        // brute-force oracle over S_5
        let brute = Permutations::all(5).filter(|p| p.excedances() == 2).count();
        assert_eq!(brute, 66);
        assert_eq!(eulerian_number(5, 2), BigInt::from(66));
    }

    #[test]
    fn bivariate_small_cases() {
        assert_eq!(bivariate(0), BiPoly::one());
        assert_eq!(bivariate(1), BiPoly::y());
        // F_3 = y^3 + 3xy^2 + x^2 y + xy
        let f3 = bivariate(3);
        assert_eq!(f3.coeff(0, 3), Rat::one());
        assert_eq!(f3.coeff(1, 2), Rat::from_int(3));
        assert_eq!(f3.coeff(2, 1), Rat::one());
        assert_eq!(f3.coeff(1, 1), Rat::one());
        assert_eq!(f3.coeff(0, 0), Rat::zero());
        let expected = BiPoly::monomial(Rat::one(), 0, 3)
            + BiPoly::monomial(Rat::from_int(3), 1, 2)
            + BiPoly::monomial(Rat::one(), 2, 1)
            + BiPoly::monomial(Rat::one(), 1, 1);
        assert_eq!(f3, expected);
    }

    #[test]
    fn brute_force_matches_recursion() {
        assert_eq!(bivariate_brute(0).unwrap(), BiPoly::one());
        // F_2 = y^2 + xy
        let f2 = bivariate_brute(2).unwrap();
        assert_eq!(
            f2,
            BiPoly::monomial(Rat::one(), 0, 2) + BiPoly::monomial(Rat::one(), 1, 1)
        );
        for n in 0..=6 {
            assert_eq!(bivariate_brute(n).unwrap(), bivariate(n), "F_{n}");
        }
    }

    #[test]
    fn brute_force_guard_names_bound() {
        let err = bivariate_brute(10).unwrap_err();
        match err {
            Error::EnumerationGuard {
                requested, bound, ..
            } => {
                assert_eq!((requested, bound), (10, 9));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn substitution_at_special_y() {
        // 2^2 F_2(x, 1/2) = 2x + 1
        assert_eq!(
            bivariate_at_y(2, &rat(1, 2)).scalar_mul(&Rat::from_int(4)),
            Poly::from_i64(&[1, 2])
        );
        // F_n(x, 1) = A_n(x)
        for n in 1..=7 {
            let a_n = bivariate_at_y(n, &Rat::one());
            for k in 0..n {
                assert_eq!(a_n.coeff(k), Rat::from_bigint(eulerian_number(n, k)));
            }
        }
        // F_{n+1}(x, -1) = -(x-1)^n
        for n in 0..=7 {
            let lhs = bivariate_at_y(n + 1, &Rat::from_int(-1));
            let rhs = -&Poly::from_i64(&[-1, 1]).pow(n);
            assert_eq!(lhs, rhs, "n={n}");
        }
    }

    #[test]
    fn row_sums_are_factorials() {
        for n in 0..=10 {
            let total = bivariate_at_y(n, &Rat::one()).eval(&Rat::one());
            assert_eq!(total, Rat::from_bigint(factorial(n as u64)), "n={n}");
        }
    }

    #[test]
    fn at_x_one_rises_to_pochhammer() {
        // F_{n+1}(1, y) = y (y+1) ... (y+n) as a polynomial identity in y
        for n in 0..=10usize {
            let lhs = bivariate(n + 1).subst_x(&Rat::one());
            let mut rhs = Poly::from_i64(&[0, 1]); // y
            for i in 1..=n as i64 {
                rhs = &rhs * &Poly::from_coeffs(vec![Rat::from_int(i), Rat::one()]);
            }
            assert_eq!(lhs, rhs, "n={n}");
            // spot check at a rational point against pochhammer
            let y0 = rat(3, 7);
            assert_eq!(lhs.eval(&y0), pochhammer(&y0, n as u64 + 1));
        }
    }

    #[test]
    fn s_eulerian_classical_and_guards() {
        // s = (1,2,3): the classical Eulerian polynomial A_3 = 1 + 4x + x^2
        assert_eq!(s_eulerian(&[1, 2, 3]).unwrap(), Poly::from_i64(&[1, 4, 1]));
        // s = (1,3): 1 + 2x, which is 2^2 F_2(x, 1/2)
        assert_eq!(s_eulerian(&[1, 3]).unwrap(), Poly::from_i64(&[1, 2]));
        // empty bound sequence: the empty sequence contributes x^0
        assert_eq!(s_eulerian(&[]).unwrap(), Poly::one());
        // guard
        let err = s_eulerian_with_cap(&[100, 100, 100], 1000).unwrap_err();
        assert!(matches!(err, Error::EnumerationGuard { .. }));
    }

    #[test]
    fn egf_matches_closed_form_at_rational_points() {
        // sum_n F_n(x0, y0) t^n/n! = ((1-x0)/(e^{t(x0-1)} - x0))^{y0} to order 10
        let samples = [
            (rat(1, 3), rat(1, 2)),
            (rat(2, 5), rat(2, 3)),
            (rat(1, 4), Rat::from_int(3)),
            (rat(-1, 2), rat(-1, 3)),
        ];
        for (x0, y0) in samples {
            let lhs = egf_from_polynomials(&x0, &y0, 10);
            let rhs = egf_closed_form(&x0, &y0, 10);
            assert_eq!(lhs, rhs, "x0={x0} y0={y0}");
        }
    }

    #[test]
    fn one_over_k_eulerian_relation() {
        // E_n^{(1, k+1, 2k+1, ...)}(x) = k^n F_n(x, 1/k)
        for k in 1..=3u64 {
            for n in 0..=6usize {
                let bounds: Vec<u64> = (0..n as u64).map(|i| i * k + 1).collect();
                let lhs = s_eulerian(&bounds).unwrap();
                let rhs = bivariate_at_y(n, &Rat::new(1, k as i64))
                    .scalar_mul(&Rat::from_int(k as i64).pow(n as i64));
                assert_eq!(lhs, rhs, "k={k} n={n}");
            }
        }
    }
}
