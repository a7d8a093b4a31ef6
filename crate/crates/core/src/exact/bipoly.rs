//! Dense polynomials in two variables x and y over `Rat`.
//!
//! `coeffs[i][j]` is the coefficient of x^i y^j. Rows are trimmed of trailing
//! zeros and the row list is trimmed of trailing empty rows, so equal values
//! have equal representations.

use super::poly::Poly;
use super::rat::Rat;
use std::fmt;
use std::ops::{Add, Mul, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct BiPoly {
    coeffs: Vec<Vec<Rat>>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BiPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        if c.is_zero() {
            BiPoly::zero()
        } else {
            BiPoly {
                coeffs: vec![vec![c]],
            }
        }
    }

    pub fn x() -> Self {
        BiPoly {
            coeffs: vec![vec![], vec![Rat::one()]],
        }
    }

    pub fn y() -> Self {
        BiPoly {
            coeffs: vec![vec![Rat::zero(), Rat::one()]],
        }
    }

    pub fn monomial(c: Rat, x_deg: usize, y_deg: usize) -> Self {
        if c.is_zero() {
            return BiPoly::zero();
        }
        let mut coeffs = vec![Vec::new(); x_deg + 1];
        coeffs[x_deg] = vec![Rat::zero(); y_deg + 1];
        coeffs[x_deg][y_deg] = c;
        BiPoly { coeffs }
    }

    /// From a matrix `m[i][j]` = coefficient of x^i y^j.
    pub fn from_coeffs(coeffs: Vec<Vec<Rat>>) -> Self {
        let mut p = BiPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        for row in &mut self.coeffs {
            while row.last().is_some_and(Rat::is_zero) {
                row.pop();
            }
        }
        while self.coeffs.last().is_some_and(Vec::is_empty) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, x_deg: usize, y_deg: usize) -> Rat {
        self.coeffs
            .get(x_deg)
            .and_then(|row| row.get(y_deg))
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Degree in x, or None for zero.
    pub fn deg_x(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree in y, or None for zero.
    pub fn deg_y(&self) -> Option<usize> {
        self.coeffs
            .iter()
            .filter_map(|row| row.len().checked_sub(1))
            .max()
    }

    pub fn scalar_mul(&self, s: &Rat) -> BiPoly {
        if s.is_zero() {
            return BiPoly::zero();
        }
        BiPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|row| row.iter().map(|c| c * s).collect())
                .collect(),
        }
    }

    /// Formal partial derivative with respect to x.
    pub fn partial_x(&self) -> BiPoly {
        if self.coeffs.len() <= 1 {
            return BiPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, row)| {
                let i = Rat::from_int(i as i64);
                row.iter().map(|c| c * &i).collect()
            })
            .collect();
        BiPoly::from_coeffs(coeffs)
    }

    /// Substitute y := y0, giving a polynomial in x.
    pub fn subst_y(&self, y0: &Rat) -> Poly {
        let coeffs = self
            .coeffs
            .iter()
            .map(|row| Poly::from_coeffs(row.clone()).eval(y0))
            .collect();
        Poly::from_coeffs(coeffs)
    }

    /// Substitute x := x0, giving a polynomial in y.
    pub fn subst_x(&self, x0: &Rat) -> Poly {
        let n_y = self.coeffs.iter().map(Vec::len).max().unwrap_or(0);
        let mut coeffs = vec![Rat::zero(); n_y];
        let mut x_pow = Rat::one();
        for row in &self.coeffs {
            for (j, c) in row.iter().enumerate() {
                coeffs[j] += &(c * &x_pow);
            }
            x_pow = &x_pow * x0;
        }
        Poly::from_coeffs(coeffs)
    }

    pub fn eval(&self, x0: &Rat, y0: &Rat) -> Rat {
        self.subst_y(y0).eval(x0)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let n_x = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n_x)
            .map(|i| {
                let a = self.coeffs.get(i).map(Vec::as_slice).unwrap_or(&[]);
                let b = rhs.coeffs.get(i).map(Vec::as_slice).unwrap_or(&[]);
                let n_y = a.len().max(b.len());
                (0..n_y)
                    .map(|j| {
                        let x = a.get(j).cloned().unwrap_or_else(Rat::zero);
                        let y = b.get(j).cloned().unwrap_or_else(Rat::zero);
                        x + y
                    })
                    .collect()
            })
            .collect();
        BiPoly::from_coeffs(coeffs)
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &rhs.scalar_mul(&-Rat::one())
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        if self.is_zero() || rhs.is_zero() {
            return BiPoly::zero();
        }
        let n_x = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut coeffs: Vec<Vec<Rat>> = vec![Vec::new(); n_x];
        for (i1, row1) in self.coeffs.iter().enumerate() {
            for (i2, row2) in rhs.coeffs.iter().enumerate() {
                if row1.is_empty() || row2.is_empty() {
                    continue;
                }
                let target = &mut coeffs[i1 + i2];
                let need = row1.len() + row2.len() - 1;
                if target.len() < need {
                    target.resize(need, Rat::zero());
                }
                for (j1, a) in row1.iter().enumerate() {
                    if a.is_zero() {
                        continue;
                    }
                    for (j2, b) in row2.iter().enumerate() {
                        target[j1 + j2] += &(a * b);
                    }
                }
            }
        }
        BiPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($Op:ident, $op:ident) => {
        impl $Op<BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $op(self, rhs: BiPoly) -> BiPoly {
                (&self).$op(&rhs)
            }
        }
        impl<'a> $Op<&'a BiPoly> for BiPoly {
            type Output = BiPoly;
            fn $op(self, rhs: &'a BiPoly) -> BiPoly {
                (&self).$op(rhs)
            }
        }
        impl<'a> $Op<BiPoly> for &'a BiPoly {
            type Output = BiPoly;
            fn $op(self, rhs: BiPoly) -> BiPoly {
                self.$op(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for BiPoly {
    /// Monomial sum ordered by descending y-degree, then ascending x-degree,
    /// e.g. `y^3 + 3xy^2 + xy + x^2y`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let max_y = self.deg_y().unwrap_or(0);
        let mut first = true;
        for j in (0..=max_y).rev() {
            for (i, row) in self.coeffs.iter().enumerate() {
                let Some(c) = row.get(j) else { continue };
                if c.is_zero() {
                    continue;
                }
                let mag = c.abs();
                if first {
                    if c.is_negative() {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if c.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                if !mag.is_one() || (i == 0 && j == 0) {
                    write!(f, "{mag}")?;
                }
                match i {
                    0 => {}
                    1 => write!(f, "x")?,
                    _ => write!(f, "x^{i}")?,
                }
                match j {
                    0 => {}
                    1 => write!(f, "y")?,
                    _ => write!(f, "y^{j}")?,
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_and_access() {
        let p = BiPoly::monomial(Rat::from_int(3), 1, 2); // 3xy^2
        assert_eq!(p.coeff(1, 2), Rat::from_int(3));
        assert_eq!(p.coeff(0, 0), Rat::zero());
        assert_eq!(p.deg_x(), Some(1));
        assert_eq!(p.deg_y(), Some(2));
    }

    #[test]
    fn multiplication() {
        // (x + y)^2 = x^2 + 2xy + y^2
        let s = BiPoly::x() + BiPoly::y();
        let sq = &s * &s;
        assert_eq!(sq.coeff(2, 0), Rat::one());
        assert_eq!(sq.coeff(1, 1), Rat::from_int(2));
        assert_eq!(sq.coeff(0, 2), Rat::one());
    }

    #[test]
    fn partial_derivative_in_x() {
        // d/dx (x^2 y) = 2xy
        let p = BiPoly::monomial(Rat::one(), 2, 1);
        assert_eq!(p.partial_x(), BiPoly::monomial(Rat::from_int(2), 1, 1));
    }

    #[test]
    fn substitution_both_ways() {
        // p = x^2 y + 3xy^2
        let p = BiPoly::monomial(Rat::one(), 2, 1) + BiPoly::monomial(Rat::from_int(3), 1, 2);
        // y := 2 gives 2x^2 + 12x
        assert_eq!(p.subst_y(&Rat::from_int(2)), Poly::from_i64(&[0, 12, 2]));
        // x := 1 gives y + 3y^2
        assert_eq!(p.subst_x(&Rat::one()), Poly::from_i64(&[0, 1, 3]));
        assert_eq!(
            p.eval(&Rat::from_int(2), &Rat::from_int(1)),
            Rat::from_int(10)
        );
    }
}
