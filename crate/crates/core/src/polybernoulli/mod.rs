//! Poly-Bernoulli numbers by two independent routes, the antidiagonal sums
//! b_n with three independent formulas, the ascending-to-max permutation
//! count, and the series machinery behind the b_n recursion.

mod machinery;

pub use machinery::{f_j, key_equality_check, key_equality_sides, lemma_3f2_residual};

use crate::error::{Error, Result};
use crate::eulerian::Permutations;
use crate::exact::{binomial, factorial, stirling2, Rat, Series};
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::HashMap;
use std::sync::Mutex;

/// Default cap on m for the brute-force ascending-to-max count over S_m.
pub const DEFAULT_PERMUTATION_CAP: usize = 9;

/// B_n^{(k)} from the defining exponential generating function
/// Li_k(1 - e^{-t})/(1 - e^{-t}).
///
/// The polylogarithm quotient is expanded as the finite sum
/// sum_{m=1}^{n+1} (1 - e^{-t})^{m-1} / m^k: since 1 - e^{-t} has zero
/// constant term, terms with m - 1 > n cannot reach t^n, and the division
/// is absorbed by the shifted power rather than performed on series.
pub fn poly_bernoulli_egf(n: u64, k: i64) -> Rat {
    let order = n as usize;
    let u = {
        // 1 - e^{-t}
        let minus_t = Series::t(order).scalar_mul(&Rat::from_int(-1));
        &Series::one(order) - &minus_t.exp()
    };
    let mut total = Series::zero(order);
    let mut u_power = Series::one(order); // u^{m-1}
    for m in 1..=(n + 1) as i64 {
        if m > 1 {
            u_power = &u_power * &u;
        }
        total = &total + &u_power.scalar_mul(&Rat::from_int(m).pow(-k));
    }
    total.coeff(order) * Rat::from_bigint(factorial(n))
}

/// B_n^{(-k)} for k >= 0 by the closed Stirling-number form
/// sum_j (j!)^2 S(n+1, j+1) S(k+1, j+1).
///
/// This is the independent oracle for the EGF route; it only exists for
/// non-positive upper index.
pub fn poly_bernoulli_stirling(n: u64, k: u64) -> Rat {
    let mut total = BigInt::zero();
    for j in 0..=n.min(k) {
        let f = factorial(j);
        total += &f * &f * stirling2(n + 1, j + 1) * stirling2(k + 1, j + 1);
    }
    Rat::from_bigint(total)
}

/// Memoized table of poly-Bernoulli numbers.
///
/// Entries with non-positive upper index come from the Stirling route (they
/// are non-negative integers); positive upper index falls back to the EGF
/// definition. Interior mutability follows the same single-writer-per-entry
/// contract as the Lehmer memo table.
pub struct PolyBernoulliTable {
    cache: Mutex<HashMap<(u64, i64), Rat>>,
}

impl PolyBernoulliTable {
    pub fn new() -> Self {
        PolyBernoulliTable {
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn get(&self, n: u64, k: i64) -> Rat {
        if let Some(v) = self.cache.lock().unwrap().get(&(n, k)) {
            return v.clone();
        }
        let v = if k <= 0 {
            poly_bernoulli_stirling(n, (-k) as u64)
        } else {
            poly_bernoulli_egf(n, k)
        };
        self.cache.lock().unwrap().insert((n, k), v.clone());
        v
    }
}

impl Default for PolyBernoulliTable {
    fn default() -> Self {
        Self::new()
    }
}

/// Antidiagonal sum b_n = sum_{k=0}^{n} B_{n-k}^{(-k)}.
pub fn b_sum(n: u64) -> Rat {
    (0..=n).map(|k| poly_bernoulli_stirling(n - k, k)).sum()
}

/// b_n from the recursion 3 b_{m+1} = 2 b_m + sum_{k<=m} C(m+1,k) b_k + 3,
/// starting from b_0 = 1.
pub fn b_rec(n: u64) -> Rat {
    b_rec_sequence(n).pop().unwrap()
}

/// The recursion-generated prefix b_0..b_n.
pub fn b_rec_sequence(n: u64) -> Vec<Rat> {
    let mut seq = vec![Rat::one()];
    let third = Rat::new(1, 3);
    for m in 0..n {
        let mut rhs = &seq[m as usize] * &Rat::from_int(2) + Rat::from_int(3);
        for k in 0..=m {
            rhs += &(&Rat::from_bigint(binomial(m + 1, k as i64)) * &seq[k as usize]);
        }
        seq.push(rhs * &third);
    }
    seq
}

/// b_n from the explicit alternating Stirling sum
/// (-1)^{n+1}/2 sum_{j=1}^{n+1} (-1)^j j! S(n+1,j) C(2j,j)/3^{j-1}
///   * sum_{i=0}^{j-1} 3^i/((2i+1) C(2i,i)).
pub fn b_explicit(n: u64) -> Rat {
    // inner[j] = sum_{i=0}^{j-1} 3^i / ((2i+1) C(2i,i)), built incrementally
    let mut inner = Rat::zero();
    let mut total = Rat::zero();
    for j in 1..=n + 1 {
        let i = j - 1;
        let denom = Rat::from_bigint(BigInt::from(2 * i + 1) * binomial(2 * i, i as i64));
        inner = &inner + &(Rat::from_int(3).pow(i as i64) / denom);
        let weight =
            Rat::from_bigint(factorial(j) * stirling2(n + 1, j) * binomial(2 * j, j as i64))
                / Rat::from_int(3).pow(j as i64 - 1);
        let signed = if j.is_multiple_of(2) { weight } else { -weight };
        total += &(&signed * &inner);
    }
    let sign = if n.is_multiple_of(2) {
        -Rat::one()
    } else {
        Rat::one()
    };
    total * sign * Rat::new(1, 2)
}

/// Alternating antidiagonal sum sum_{k=0}^{n} (-1)^k B_{n-k}^{(-k)},
/// which vanishes for every positive n.
pub fn alternating_sum(n: u64) -> Rat {
    assert!(n >= 1, "alternating_sum requires n >= 1");
    let mut total = Rat::zero();
    for k in 0..=n {
        let term = poly_bernoulli_stirling(n - k, k);
        if k % 2 == 0 {
            total += &term;
        } else {
            total -= &term;
        }
    }
    total
}

/// Ordinary generating series of (b_n):
/// sum_{j} (j!)^2 x^{2j} / prod_{i=1}^{j+1} (1 - ix)^2, truncated at `order`.
/// Only j <= order/2 contribute.
pub fn bn_ogf_series(order: usize) -> Series {
    let mut total = Series::zero(order);
    for j in 0..=(order / 2) as u64 {
        let mut denom = Series::one(order);
        for i in 1..=j + 1 {
            let linear = Series::from_coeffs(order, vec![Rat::one(), Rat::from_int(-(i as i64))]);
            denom = &denom * &(&linear * &linear);
        }
        let f = factorial(j);
        let numer = Rat::from_bigint(&f * &f);
        total = &total + &denom.recip().scalar_mul(&numer).shift_up(2 * j as usize);
    }
    total
}

/// Count of permutations in S_m with the ascending-to-max property, with
/// the default guard.
pub fn ascending_to_max_count(m: usize) -> Result<BigInt> {
    ascending_to_max_count_with_cap(m, DEFAULT_PERMUTATION_CAP)
}

/// A permutation is ascending-to-max when, drawing an arrow from the
/// position of each value i to the position of i+1, every arrow starting
/// left of the maximum points forward and every arrow starting right of it
/// points backward.
pub fn ascending_to_max_count_with_cap(m: usize, cap: usize) -> Result<BigInt> {
    assert!(m >= 1, "ascending_to_max_count requires m >= 1");
    if m > cap {
        return Err(Error::EnumerationGuard {
            what: "ascending-to-max brute force over S_m",
            requested: m as u64,
            bound: cap as u64,
        });
    }
    let mut count: u64 = 0;
    for p in Permutations::all(m) {
        let inv = p.inverse_positions();
        let max_pos = inv[m - 1];
        let ok = (1..=m.saturating_sub(2)).all(|i| {
            let pos_i = inv[i - 1];
            let pos_next = inv[i];
            if pos_i < max_pos && pos_next < max_pos {
                pos_i < pos_next
            } else if pos_i > max_pos && pos_next > max_pos {
                pos_i > pos_next
            } else {
                true
            }
        });
        if ok {
            count += 1;
        }
    }
    Ok(BigInt::from(count))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eulerian::Permutation;

    #[test]
    fn egf_route_known_rows() {
        for n in 0..=10 {
            assert_eq!(poly_bernoulli_egf(n, 0), Rat::one(), "B_{n}^(0)");
            assert_eq!(
                poly_bernoulli_egf(n, -1),
                Rat::from_int(2).pow(n as i64),
                "B_{n}^(-1)"
            );
        }
        for k in -3..=3 {
            assert_eq!(poly_bernoulli_egf(0, k), Rat::one(), "B_0^({k})");
        }
    }

    #[test]
    fn egf_route_positive_index_is_fractional() {
        // classical values: B_1^{(1)} = 1/2, B_2^{(2)} = 1/12... spot check sign/shape
        assert_eq!(poly_bernoulli_egf(1, 1), Rat::new(1, 2));
        assert_eq!(poly_bernoulli_egf(1, 2), Rat::new(1, 4));
    }

    #[test]
    fn stirling_route_examples() {
        assert_eq!(poly_bernoulli_stirling(5, 0), Rat::one());
        assert_eq!(poly_bernoulli_stirling(1, 1), Rat::from_int(2));
        assert_eq!(poly_bernoulli_stirling(2, 1), Rat::from_int(4));
    }

    #[test]
    fn routes_agree() {
        for n in 0..=10 {
            for k in 0..=10 {
                assert_eq!(
                    poly_bernoulli_egf(n, -(k as i64)),
                    poly_bernoulli_stirling(n, k),
                    "B_{n}^(-{k})"
                );
            }
        }
    }

    #[test]
    fn table_memoizes_and_matches_routes() {
        let table = PolyBernoulliTable::new();
        for n in 0..=6 {
            assert_eq!(table.get(n, 0), Rat::one());
            assert_eq!(table.get(n, -1), Rat::from_int(2).pow(n as i64));
            assert_eq!(table.get(0, n as i64), Rat::one());
        }
        for n in 0..=6u64 {
            for k in -4..=2i64 {
                let v = table.get(n, k);
                if k <= 0 {
                    assert!(v.is_integer() && !v.is_negative(), "B_{n}^({k}) = {v}");
                }
                assert_eq!(table.get(n, k), v);
            }
        }
    }

    #[test]
    fn antidiagonal_small_values() {
        assert_eq!(b_sum(0), Rat::one());
        assert_eq!(b_sum(1), Rat::from_int(2));
        assert_eq!(b_sum(2), Rat::from_int(4));
        assert_eq!(b_sum(3), Rat::from_int(10));
    }

    #[test]
    fn recursion_matches_sum() {
        assert_eq!(b_rec(0), Rat::one());
        assert_eq!(b_rec(1), Rat::from_int(2));
        assert_eq!(b_rec(2), Rat::from_int(4));
        for n in 0..=20 {
            assert_eq!(b_rec(n), b_sum(n), "b_{n}");
            assert!(b_rec(n).is_integer());
        }
    }

    #[test]
    fn explicit_formula_matches_sum() {
        assert_eq!(b_explicit(0), Rat::one());
        assert_eq!(b_explicit(1), Rat::from_int(2));
        for n in 0..=20 {
            assert_eq!(b_explicit(n), b_sum(n), "b_{n}");
        }
    }

    #[test]
    fn alternating_sum_vanishes() {
        for n in [1, 2, 10, 25] {
            assert_eq!(alternating_sum(n), Rat::zero(), "n={n}");
        }
    }

    #[test]
    fn ogf_coefficients_are_b_values() {
        let s = bn_ogf_series(20);
        assert_eq!(s.coeff(0), Rat::one());
        assert_eq!(s.coeff(1), Rat::from_int(2));
        let bs = b_rec_sequence(20);
        for (n, b) in bs.iter().enumerate() {
            assert_eq!(&s.coeff(n), b, "coefficient {n}");
        }
    }

    #[test]
    fn ascending_to_max_small_cases() {
        assert_eq!(ascending_to_max_count(1).unwrap(), BigInt::from(1));
        assert_eq!(ascending_to_max_count(3).unwrap(), BigInt::from(4));
        for n in 0..=6u64 {
            assert_eq!(
                ascending_to_max_count(n as usize + 1).unwrap(),
                b_sum(n).numer().clone(),
                "S_{}",
                n + 1
            );
        }
        assert!(matches!(
            ascending_to_max_count(12),
            Err(Error::EnumerationGuard { .. })
        ));
    }

    #[test]
    fn ascending_to_max_membership_examples() {
        let qualifies = |digits: u64| {
            let p = Permutation::from_digits(digits).unwrap();
            let m = p.len();
            let inv = p.inverse_positions();
            let max_pos = inv[m - 1];
            (1..=m - 2).all(|i| {
                if inv[i - 1] < max_pos && inv[i] < max_pos {
                    inv[i - 1] < inv[i]
                } else if inv[i - 1] > max_pos && inv[i] > max_pos {
                    inv[i - 1] > inv[i]
                } else {
                    true
                }
            })
        };
        assert!(qualifies(47518362));
        assert!(!qualifies(41385762));
        // S_3 membership: 123, 132, 231, 321 qualify; 213 and 312 fail
        assert!(qualifies(123) && qualifies(132) && qualifies(231) && qualifies(321));
        assert!(!qualifies(213) && !qualifies(312));
    }
}
