//! s-inversion sequences and their ascent statistic.

use crate::error::{Error, Result};

/// An s-inversion sequence: entries e_1..e_n with 0 <= e_i < s_i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct InversionSequence {
    entries: Vec<u64>,
    bounds: Vec<u64>,
}

impl InversionSequence {
    pub fn new(entries: Vec<u64>, bounds: Vec<u64>) -> Result<Self> {
        if entries.len() != bounds.len() {
            return Err(Error::InvalidInversionSequence(format!(
                "{} entries against {} bounds",
                entries.len(),
                bounds.len()
            )));
        }
        for (i, (&e, &s)) in entries.iter().zip(&bounds).enumerate() {
            if s == 0 {
                return Err(Error::InvalidInversionSequence(format!(
                    "bound s_{} must be positive",
                    i + 1
                )));
            }
            if e >= s {
                return Err(Error::InvalidInversionSequence(format!(
                    "entry e_{} = {e} not below bound {s}",
                    i + 1
                )));
            }
        }
        Ok(InversionSequence { entries, bounds })
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn bounds(&self) -> &[u64] {
        &self.bounds
    }

    /// Ascent count: positions 0 <= i < n with e_i/s_i < e_{i+1}/s_{i+1},
    /// under the convention e_0/s_0 = 0. Comparison is by exact
    /// cross-multiplication, never floating division.
    pub fn ascents(&self) -> usize {
        ascents_of(&self.entries, &self.bounds)
    }
}

pub(super) fn ascents_of(entries: &[u64], bounds: &[u64]) -> usize {
    let n = entries.len();
    let mut count = 0;
    for i in 0..n {
        let ascent = if i == 0 {
            // sentinel 0 < e_1/s_1
            entries[0] > 0
        } else {
            // e_i/s_i < e_{i+1}/s_{i+1}  <=>  e_i * s_{i+1} < e_{i+1} * s_i
            (entries[i - 1] as u128) * (bounds[i] as u128)
                < (entries[i] as u128) * (bounds[i - 1] as u128)
        };
        if ascent {
            count += 1;
        }
    }
    count
}
