//! Basic combinatorial number functions over big integers.

use super::rat::Rat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Binomial coefficient C(n, k); zero when k < 0 or k > n.
pub fn binomial(n: u64, k: i64) -> BigInt {
    if k < 0 || k as u64 > n {
        return BigInt::zero();
    }
    let k = (k as u64).min(n - k as u64);
    let mut c = BigInt::one();
    for i in 1..=k {
        // exact at every step: c holds C(n, i-1) * (n-i+1) before division
        c = c * BigInt::from(n - i + 1) / BigInt::from(i);
    }
    c
}

/// Stirling number of the second kind S(n, k): partitions of an n-set into
/// k nonempty blocks. S(0,0) = 1, S(n,0) = 0 for n > 0.
pub fn stirling2(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    if n == 0 {
        return BigInt::one();
    }
    if k == 0 {
        return BigInt::zero();
    }
    // row DP: S(m, j) = j S(m-1, j) + S(m-1, j-1)
    let width = k as usize;
    let mut row = vec![BigInt::zero(); width + 1];
    row[0] = BigInt::one(); // row for m = 0
    for m in 1..=n {
        let top = width.min(m as usize);
        for j in (1..=top).rev() {
            row[j] = BigInt::from(j) * &row[j] + &row[j - 1];
        }
        row[0] = if m == 0 {
            BigInt::one()
        } else {
            BigInt::zero()
        };
    }
    row[width].clone()
}

/// Rising factorial (x)_j = x (x+1) ... (x+j-1); 1 for j = 0.
pub fn pochhammer(x: &Rat, j: u64) -> Rat {
    let mut acc = Rat::one();
    let mut term = x.clone();
    for _ in 0..j {
        acc = &acc * &term;
        term = &term + &Rat::one();
    }
    acc
}

/// (2n+1)!! = 1 * 3 * 5 * ... * (2n+1).
pub fn double_factorial_odd(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..=n {
        acc *= BigInt::from(2 * i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}
