//! Range-maximum queries over a static array.
//!
//! A sparse table: `O(n log n)` preprocessing, `O(1)` queries. Indices are
//! 1-based, and among equal maxima the leftmost index wins.

use alloc::vec::Vec;

use crate::error::{Error, Result};

#[derive(Debug, Clone)]
pub struct SparseTable<T> {
    values: Vec<T>,
    // levels[k][i] = 0-based argmax of values[i .. i + 2^k]
    levels: Vec<Vec<u32>>,
}

impl<T: Ord + Clone> SparseTable<T> {
    pub fn new(values: Vec<T>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptyArray);
        }
        let mut levels: Vec<Vec<u32>> = Vec::new();
        levels.push((0..n as u32).collect());
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().expect("level 0 exists");
            let row = (0..=n - 2 * width)
                .map(|i| pick(&values, prev[i], prev[i + width]))
                .collect();
            levels.push(row);
            width *= 2;
        }
        Ok(SparseTable { values, levels })
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// The value at 1-based index `i`.
    pub fn value(&self, i: usize) -> &T {
        &self.values[i - 1]
    }

    /// Leftmost index of a maximum of `A[i..=j]`, 1-based.
    pub fn query(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || i > j || j > self.values.len() {
            return Err(Error::InvalidRange { i, j, len: self.values.len() });
        }
        let (lo, hi) = (i - 1, j - 1);
        let k = (usize::BITS - 1 - (hi - lo + 1).leading_zeros()) as usize;
        let row = &self.levels[k];
        let best = pick(&self.values, row[lo], row[hi + 1 - (1 << k)]);
        Ok(best as usize + 1)
    }
}

#[inline]
fn pick<T: Ord>(values: &[T], left: u32, right: u32) -> u32 {
    // `left` never lies to the right of `right`, so ties keep `left`
    if values[right as usize] > values[left as usize] {
        right
    } else {
        left
    }
}
