//! Permutations in one-line notation with the statistics used by the
//! bivariate Eulerian polynomials: excedances and cycle count.

use crate::error::{Error, Result};

/// A permutation of {1, ..., n} in one-line notation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Permutation {
    one_line: Vec<usize>,
}

impl Permutation {
    /// Validates that `one_line` contains each of 1..=n exactly once.
    pub fn from_one_line(one_line: Vec<usize>) -> Result<Self> {
        let n = one_line.len();
        let mut seen = vec![false; n];
        for &v in &one_line {
            if v == 0 || v > n {
                return Err(Error::InvalidPermutation(format!(
                    "value {v} out of range 1..={n}"
                )));
            }
            if seen[v - 1] {
                return Err(Error::InvalidPermutation(format!("value {v} repeated")));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation { one_line })
    }

    /// Convenience constructor from decimal digits, e.g. 231 -> [2,3,1].
    /// Only usable for n <= 9.
    pub fn from_digits(digits: u64) -> Result<Self> {
        let mut v: Vec<usize> = Vec::new();
        let mut d = digits;
        while d > 0 {
            v.push((d % 10) as usize);
            d /= 10;
        }
        v.reverse();
        Permutation::from_one_line(v)
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            one_line: (1..=n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.one_line.len()
    }

    pub fn is_empty(&self) -> bool {
        self.one_line.is_empty()
    }

    pub fn one_line(&self) -> &[usize] {
        &self.one_line
    }

    /// Value at 1-based position i.
    pub fn value_at(&self, i: usize) -> usize {
        self.one_line[i - 1]
    }

    /// 1-based position of value v (the inverse permutation at v).
    pub fn position_of(&self, v: usize) -> usize {
        self.one_line.iter().position(|&w| w == v).unwrap() + 1
    }

    /// Inverse as a lookup table: `inv[v-1]` is the 1-based position of v.
    pub fn inverse_positions(&self) -> Vec<usize> {
        let mut inv = vec![0; self.one_line.len()];
        for (pos, &v) in self.one_line.iter().enumerate() {
            inv[v - 1] = pos + 1;
        }
        inv
    }

    /// Number of excedances: positions i with pi_i > i.
    pub fn excedances(&self) -> usize {
        self.one_line
            .iter()
            .enumerate()
            .filter(|&(i, &v)| v > i + 1)
            .count()
    }

    /// Number of cycles in the disjoint cycle representation.
    pub fn cycle_count(&self) -> usize {
        let n = self.one_line.len();
        let mut visited = vec![false; n];
        let mut cycles = 0;
        for start in 0..n {
            if visited[start] {
                continue;
            }
            cycles += 1;
            let mut i = start;
            while !visited[i] {
                visited[i] = true;
                i = self.one_line[i] - 1;
            }
        }
        cycles
    }
}

/// Iterator over all of S_n in lexicographic order of one-line notation.
pub struct Permutations {
    current: Vec<usize>,
    started: bool,
    done: bool,
}

impl Permutations {
    pub fn all(n: usize) -> Self {
        Permutations {
            current: (1..=n).collect(),
            started: false,
            done: false,
        }
    }

    /// Standard successor step: find the longest descending suffix, swap the
    /// pivot with its ceiling in the suffix, reverse the suffix.
    fn advance(&mut self) -> bool {
        let v = &mut self.current;
        let n = v.len();
        if n < 2 {
            return false;
        }
        let mut i = n - 1;
        while i > 0 && v[i - 1] >= v[i] {
            i -= 1;
        }
        if i == 0 {
            return false;
        }
        let mut j = n - 1;
        while v[j] <= v[i - 1] {
            j -= 1;
        }
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
        } else if !self.advance() {
            self.done = true;
            return None;
        }
        Some(Permutation {
            one_line: self.current.clone(),
        })
    }
}
