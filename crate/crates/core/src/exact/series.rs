//! Truncated formal power series over `Rat`.
//!
//! A `Series` of order N carries the coefficients of t^0..t^N and nothing
//! else; every operation is exact modulo t^{N+1}. The order is fixed at
//! construction. Binary operations panic on mismatched orders: callers must
//! call [`Series::truncate`] explicitly, so verification strength is never
//! lost silently.

use super::poly::Poly;
use super::rat::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    order: usize,
    coeffs: Vec<Rat>, // length order + 1
}

impl Series {
    pub fn zero(order: usize) -> Self {
        Series {
            order,
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn constant(order: usize, c: Rat) -> Self {
        let mut s = Series::zero(order);
        s.coeffs[0] = c;
        s
    }

    pub fn one(order: usize) -> Self {
        Series::constant(order, Rat::one())
    }

    /// The series variable t.
    pub fn t(order: usize) -> Self {
        let mut s = Series::zero(order);
        if order >= 1 {
            s.coeffs[1] = Rat::one();
        }
        s
    }

    /// From explicit low-order coefficients; missing high coefficients are zero.
    /// Panics if more than order+1 coefficients are supplied.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<Rat>) -> Self {
        assert!(
            coeffs.len() <= order + 1,
            "series of order {order} given {} coefficients",
            coeffs.len()
        );
        coeffs.resize(order + 1, Rat::zero());
        Series { order, coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Rat) -> Self {
        Series {
            order,
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Truncation of a polynomial.
    pub fn from_poly(order: usize, p: &Poly) -> Self {
        Series::from_fn(order, |n| p.coeff(n))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeff(&self, n: usize) -> Rat {
        assert!(
            n <= self.order,
            "coefficient {n} beyond series order {}",
            self.order
        );
        self.coeffs[n].clone()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    fn assert_same_order(&self, rhs: &Series, op: &str) {
        assert_eq!(
            self.order, rhs.order,
            "series order mismatch in {op}: {} vs {} (truncate explicitly)",
            self.order, rhs.order
        );
    }

    pub fn scalar_mul(&self, s: &Rat) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    /// Lower the order to `new_order`, discarding higher coefficients.
    pub fn truncate(&self, new_order: usize) -> Series {
        assert!(
            new_order <= self.order,
            "cannot extend series of order {} to order {new_order}",
            self.order
        );
        Series {
            order: new_order,
            coeffs: self.coeffs[..=new_order].to_vec(),
        }
    }

    /// Multiply by t^k, shifting coefficients up (order unchanged).
    pub fn shift_up(&self, k: usize) -> Series {
        let kept = self.order + 1 - k.min(self.order + 1);
        let mut coeffs = vec![Rat::zero(); k.min(self.order + 1)];
        coeffs.extend_from_slice(&self.coeffs[..kept]);
        Series {
            order: self.order,
            coeffs,
        }
    }

    /// Multiplicative inverse. Panics if the constant term is zero.
    pub fn recip(&self) -> Series {
        let c0 = &self.coeffs[0];
        assert!(
            !c0.is_zero(),
            "cannot invert series with zero constant term"
        );
        let inv0 = c0.recip();
        let mut coeffs = vec![Rat::zero(); self.order + 1];
        coeffs[0] = inv0.clone();
        for n in 1..=self.order {
            let mut acc = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&self.coeffs[k] * &coeffs[n - k]);
                }
            }
            coeffs[n] = -(&acc * &inv0);
        }
        Series {
            order: self.order,
            coeffs,
        }
    }

    /// Formal derivative d/dt. The result is exact only to order N-1, so the
    /// order drops by one. Panics on order 0.
    pub fn derivative(&self) -> Series {
        assert!(
            self.order >= 1,
            "derivative of an order-0 series is vacuous"
        );
        let coeffs = (1..=self.order)
            .map(|n| &self.coeffs[n] * &Rat::from_int(n as i64))
            .collect();
        Series {
            order: self.order - 1,
            coeffs,
        }
    }

    /// exp of a series with zero constant term.
    pub fn exp(&self) -> Series {
        assert!(self.coeffs[0].is_zero(), "exp requires zero constant term");
        let mut coeffs = vec![Rat::zero(); self.order + 1];
        coeffs[0] = Rat::one();
        // n h_n = sum_{k=1..n} k g_k h_{n-k}, from h' = g' h
        for n in 1..=self.order {
            let mut acc = Rat::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &(&(&self.coeffs[k] * &Rat::from_int(k as i64)) * &coeffs[n - k]);
                }
            }
            coeffs[n] = acc / Rat::from_int(n as i64);
        }
        Series {
            order: self.order,
            coeffs,
        }
    }

    /// log of a series with constant term 1.
    pub fn log(&self) -> Series {
        assert!(self.coeffs[0].is_one(), "log requires constant term 1");
        let mut coeffs = vec![Rat::zero(); self.order + 1];
        // n f_n = sum_{k=1..n} k l_k f_{n-k}, solved for l_n with f_0 = 1
        for n in 1..=self.order {
            let mut acc = Rat::zero();
            for (k, l_k) in coeffs[..n].iter().enumerate().skip(1) {
                if !l_k.is_zero() {
                    acc += &(&(l_k * &Rat::from_int(k as i64)) * &self.coeffs[n - k]);
                }
            }
            coeffs[n] = &self.coeffs[n] - &(acc / Rat::from_int(n as i64));
        }
        Series {
            order: self.order,
            coeffs,
        }
    }

    /// Raise a series with constant term 1 to a rational power, via the
    /// binomial series exp(y log f).
    pub fn pow_rat(&self, y: &Rat) -> Series {
        self.log().scalar_mul(y).exp()
    }

    /// Non-negative integer power by repeated multiplication.
    pub fn pow(&self, exp: usize) -> Series {
        let mut result = Series::one(self.order);
        for _ in 0..exp {
            result = &result * self;
        }
        result
    }

    /// Composition self(g(t)) for g with zero constant term (Horner).
    pub fn compose(&self, g: &Series) -> Series {
        self.assert_same_order(g, "compose");
        assert!(
            g.coeffs[0].is_zero(),
            "composition requires zero constant term in the inner series"
        );
        let mut acc = Series::constant(self.order, self.coeffs[self.order].clone());
        for n in (0..self.order).rev() {
            acc = &acc * g;
            acc.coeffs[0] = self.coeffs[n].clone();
        }
        acc
    }
}

impl Add for &Series {
    type Output = Series;
    fn add(self, rhs: &Series) -> Series {
        self.assert_same_order(rhs, "add");
        Series {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Series {
    type Output = Series;
    fn sub(self, rhs: &Series) -> Series {
        self.assert_same_order(rhs, "sub");
        Series {
            order: self.order,
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series {
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Series {
    type Output = Series;
    fn mul(self, rhs: &Series) -> Series {
        self.assert_same_order(rhs, "mul");
        let mut coeffs = vec![Rat::zero(); self.order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(self.order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += &(a * b);
                }
            }
        }
        Series {
            order: self.order,
            coeffs,
        }
    }
}

macro_rules! forward_owned {
    ($Op:ident, $op:ident) => {
        impl $Op<Series> for Series {
            type Output = Series;
            fn $op(self, rhs: Series) -> Series {
                (&self).$op(&rhs)
            }
        }
        impl<'a> $Op<&'a Series> for Series {
            type Output = Series;
            fn $op(self, rhs: &'a Series) -> Series {
                (&self).$op(rhs)
            }
        }
        impl<'a> $Op<Series> for &'a Series {
            type Output = Series;
            fn $op(self, rhs: Series) -> Series {
                self.$op(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (n, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match n {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{n}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(t^{})", self.order + 1)
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
