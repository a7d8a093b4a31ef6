//! The hypergeometric-type terms f_j(x,y) = (j!)^2/((x)_j (y)_j), the
//! four-term contiguous relation among them, and the generating-function
//! equality that together force the b_n recursion.

use crate::error::{Error, Result};
use crate::exact::{factorial, pochhammer, Rat, Series};

/// f_j(x, y) = (j!)^2 / ((x)_j (y)_j). Pole error when either rising
/// factorial vanishes, i.e. when x or y is a non-positive integer above -j.
pub fn f_j(x: &Rat, y: &Rat, j: u64) -> Result<Rat> {
    let px = pochhammer(x, j);
    if px.is_zero() {
        return Err(Error::Pole {
            symbol: x.to_string(),
            j,
        });
    }
    let py = pochhammer(y, j);
    if py.is_zero() {
        return Err(Error::Pole {
            symbol: y.to_string(),
            j,
        });
    }
    let f = Rat::from_bigint(factorial(j));
    Ok(&(&f * &f) / &(&px * &py))
}

/// f_j with the convention f_{-1} = 0, indexed by j+1 so that `shifted(0)`
/// is the -1 case.
fn f_shifted(x: &Rat, y: &Rat, j_plus_one: u64) -> Result<Rat> {
    if j_plus_one == 0 {
        Ok(Rat::zero())
    } else {
        f_j(x, y, j_plus_one - 1)
    }
}

/// Left-hand side minus right-hand side of the four-term relation
///
/// ```text
/// (x-1)(x-2)(f_j(x-2,y) - f_{j-1}(x-2,y)) + (x-1)(2x-5) f_{j-1}(x-1,y)
///   - (x-1)(x-y-1) f_j(x-1,y) - (x-2)^2 f_{j-1}(x,y)
///   = (x-1)(y-1) if j = 0, else 0
/// ```
///
/// A correct implementation returns zero wherever all terms are pole-free.
pub fn lemma_3f2_residual(x: &Rat, y: &Rat, j: u64) -> Result<Rat> {
    let one = Rat::one();
    let two = Rat::from_int(2);
    let x_m1 = x - &one;
    let x_m2 = x - &two;

    let lhs = &(&x_m1 * &x_m2) * &(f_j(&x_m2, y, j)? - f_shifted(&x_m2, y, j)?)
        + &(&x_m1 * &(&(&two * x) - &Rat::from_int(5))) * &f_shifted(&x_m1, y, j)?
        - &(&x_m1 * &(&x_m1 - y)) * &f_j(&x_m1, y, j)?
        - &(&x_m2 * &x_m2) * &f_shifted(x, y, j)?;
    let rhs = if j == 0 {
        &x_m1 * &(y - &one)
    } else {
        Rat::zero()
    };
    Ok(lhs - rhs)
}

/// Both sides of the generating-function equality
///
/// ```text
/// 2(2-x)/(1-x)^2 * sum_j f_j(2-1/x, 2-1/x)
///   = 3/(1-x) + (1-x)/(1-2x)^2 * sum_j f_j(3-1/x, 3-1/x)
/// ```
///
/// as formal power series in x of the given order. Under x -> 1/x the
/// Pochhammer symbols turn into polynomial products: the x^{-j} factors
/// cancel in pairs and the squares absorb all signs, giving
/// f_j(c - 1/x, c - 1/x) = (j!)^2 x^{2j} / prod_{i=c}^{c+j-1} (1 - ix)^2.
pub fn key_equality_sides(order: usize) -> (Series, Series) {
    let sum_from = |c: u64| {
        let mut total = Series::zero(order);
        for j in 0..=(order / 2) as u64 {
            let mut denom = Series::one(order);
            for i in c..c + j {
                let linear =
                    Series::from_coeffs(order, vec![Rat::one(), Rat::from_int(-(i as i64))]);
                denom = &denom * &(&linear * &linear);
            }
            let f = factorial(j);
            let numer = Rat::from_bigint(&f * &f);
            total = &total + &denom.recip().scalar_mul(&numer).shift_up(2 * j as usize);
        }
        total
    };

    let one_minus_x = Series::from_coeffs(order, vec![Rat::one(), Rat::from_int(-1)]);
    let one_minus_2x = Series::from_coeffs(order, vec![Rat::one(), Rat::from_int(-2)]);
    let two_minus_x = Series::from_coeffs(order, vec![Rat::from_int(2), Rat::from_int(-1)]);

    let lhs = &(&two_minus_x.scalar_mul(&Rat::from_int(2))
        * &(&one_minus_x * &one_minus_x).recip())
        * &sum_from(2);
    let rhs = &one_minus_x.recip().scalar_mul(&Rat::from_int(3))
        + &(&(&one_minus_x * &(&one_minus_2x * &one_minus_2x).recip()) * &sum_from(3));
    (lhs, rhs)
}

/// Coefficient-wise equality of the two sides of the key equality.
pub fn key_equality_check(order: usize) -> bool {
    let (lhs, rhs) = key_equality_sides(order);
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn f_values() {
        assert_eq!(f_j(&rat(9, 7), &rat(-3, 5), 0).unwrap(), Rat::one());
        for j in 0..=6 {
            assert_eq!(f_j(&Rat::one(), &Rat::one(), j).unwrap(), Rat::one());
        }
        // f_3(2,2) = 36/(2*3*4)^2 = 1/16
        let v = f_j(&Rat::from_int(2), &Rat::from_int(2), 3).unwrap();
        assert_eq!(v, rat(1, 16));
    }

    #[test]
    fn f_pole_detection() {
        assert!(matches!(
            f_j(&Rat::zero(), &Rat::one(), 1),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            f_j(&Rat::one(), &Rat::from_int(-2), 4),
            Err(Error::Pole { .. })
        ));
        // (x)_j with x = -2 and j <= 2 never touches zero
        assert!(f_j(&Rat::from_int(-2), &Rat::one(), 2).is_ok());
    }

    #[test]
    fn lemma_residual_vanishes_at_sample_points() {
        assert_eq!(
            lemma_3f2_residual(&rat(5, 2), &rat(7, 3), 0).unwrap(),
            Rat::zero()
        );
        assert_eq!(
            lemma_3f2_residual(&rat(5, 2), &rat(7, 3), 3).unwrap(),
            Rat::zero()
        );
        assert_eq!(
            lemma_3f2_residual(&rat(9, 4), &rat(1, 5), 1).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn key_equality_holds() {
        assert!(key_equality_check(1));
        assert!(key_equality_check(10));
        assert!(key_equality_check(25));
    }

    #[test]
    fn key_equality_sides_have_expected_low_coefficients() {
        // both sides start 4 + 6x + ...
        let (lhs, rhs) = key_equality_sides(1);
        assert_eq!(lhs.coeff(0), Rat::from_int(4));
        assert_eq!(lhs.coeff(1), Rat::from_int(6));
        assert_eq!(rhs.coeff(0), Rat::from_int(4));
        assert_eq!(rhs.coeff(1), Rat::from_int(6));
    }
}
