//! Definitional brute force over small words.
//!
//! Nothing here touches the index structures: every answer is derived from
//! the definitions using only [`Word::is_subsequence`]. The functions are
//! exponential and guarded by a budget on the number of candidate words
//! they examine.

use alloc::collections::BTreeSet;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::word::{Letter, Word};

/// Default cap on candidate words examined by one oracle call.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

pub type WordSet = BTreeSet<Vec<Letter>>;

/// Number of distinct letters in `letters`.
pub fn alphabet_size(letters: &[Letter]) -> usize {
    let mut seen: Vec<Letter> = letters.to_vec();
    seen.sort_unstable();
    seen.dedup();
    seen.len()
}

/// All words of length `len` over `[1:sigma]`, in lexicographic order.
pub fn words_of_length(sigma: usize, len: usize) -> impl Iterator<Item = Vec<Letter>> {
    let mut next = (sigma > 0 || len == 0).then(|| vec![1 as Letter; len]);
    core::iter::from_fn(move || {
        let current = next.take()?;
        let mut succ = current.clone();
        for slot in succ.iter_mut().rev() {
            if (*slot as usize) < sigma {
                *slot += 1;
                next = Some(succ);
                return Some(current);
            }
            *slot = 1;
        }
        Some(current)
    })
}

/// All words of length at most `max_len` over `[1:sigma]`, shortest first.
pub fn words_up_to(sigma: usize, max_len: usize) -> impl Iterator<Item = Vec<Letter>> {
    (0..=max_len).flat_map(move |len| words_of_length(sigma, len))
}

/// Largest `k` such that every word of length `k` over the alphabet of `w`
/// is a subsequence of `w`.
pub fn brute_universality(w: &Word) -> usize {
    let mut k = 0;
    while words_of_length(w.sigma(), k + 1).all(|u| w.is_subsequence(&u).is_some()) {
        k += 1;
    }
    k
}

struct Budget {
    left: u64,
    total: u64,
}

impl Budget {
    fn new(total: u64) -> Self {
        Budget { left: total, total }
    }

    fn spend(&mut self) -> Result<()> {
        if self.left == 0 {
            return Err(Error::BudgetExceeded { budget: self.total });
        }
        self.left -= 1;
        Ok(())
    }
}

/// The set of shortest absent subsequences, found by testing every word of
/// length 1, 2, ... until some length has absent words.
pub fn oracle_sas_set(w: &Word, budget: u64) -> Result<WordSet> {
    let mut budget = Budget::new(budget);
    for len in 1.. {
        let mut found = WordSet::new();
        for u in words_of_length(w.sigma(), len) {
            budget.spend()?;
            if w.is_subsequence(&u).is_none() {
                found.insert(u);
            }
        }
        if !found.is_empty() {
            return Ok(found);
        }
    }
    unreachable!("a word of length n + 1 is always absent")
}

/// `u` is absent from `w` and every single-letter deletion of `u` occurs.
pub fn is_mas_definitional(w: &Word, u: &[Letter]) -> bool {
    if u.is_empty() || w.is_subsequence(u).is_some() {
        return false;
    }
    let mut shorter = Vec::with_capacity(u.len() - 1);
    (0..u.len()).all(|skip| {
        shorter.clear();
        shorter.extend(u.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &a)| a));
        w.is_subsequence(&shorter).is_some()
    })
}

/// The set of minimal absent subsequences of length at most `max_len`.
///
/// Candidates are all words of length at most `max_len` whose proper
/// prefixes occur in `w`; a word with an absent proper prefix has an absent
/// proper subsequence and cannot be minimal. With `max_len = n + 1` the set
/// is complete, since every single deletion of a MAS is a subsequence of
/// `w` and so has length at most `n`.
pub fn oracle_mas_set(w: &Word, max_len: usize, budget: u64) -> Result<WordSet> {
    let mut budget = Budget::new(budget);
    let mut found = WordSet::new();
    let mut stack: Vec<Vec<Letter>> = vec![Vec::new()];
    while let Some(prefix) = stack.pop() {
        if prefix.len() >= max_len {
            continue;
        }
        for a in 1..=w.sigma() as Letter {
            budget.spend()?;
            let mut u = prefix.clone();
            u.push(a);
            if w.is_subsequence(&u).is_some() {
                stack.push(u);
            } else if is_mas_definitional(w, &u) {
                found.insert(u);
            }
        }
    }
    Ok(found)
}

/// Shortest `v` (lexicographically least among those) such that `u·v` is a
/// minimal absent subsequence, by breadth-first search over `v`.
pub fn oracle_mas_extension(w: &Word, u: &[Letter], budget: u64) -> Result<Option<Vec<Letter>>> {
    let mut budget = Budget::new(budget);
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..=w.len() + 1 {
        let mut next_layer = Vec::new();
        for v in &layer {
            budget.spend()?;
            let mut uv = u.to_vec();
            uv.extend_from_slice(v);
            if is_mas_definitional(w, &uv) {
                return Ok(Some(v.clone()));
            }
            // only extensions of occurring words can become minimal
            if w.is_subsequence(&uv).is_some() {
                for a in 1..=w.sigma() as Letter {
                    let mut longer = v.clone();
                    longer.push(a);
                    next_layer.push(longer);
                }
            }
        }
        if next_layer.is_empty() {
            break;
        }
        layer = next_layer;
    }
    Ok(None)
}

fn ascending(sigma: usize) -> core::ops::RangeInclusive<Letter> {
    1..=sigma as Letter
}

/// `A_k`: blocks alternating between `1 2 ... σ` and `σ ... 2 1`, starting
/// with the ascending block, `k` blocks in total.
pub fn gen_a(sigma: usize, k: usize) -> Result<Word> {
    check_family(sigma, k)?;
    let mut letters = Vec::with_capacity(sigma * k);
    for block in 0..k {
        if block % 2 == 0 {
            letters.extend(ascending(sigma));
        } else {
            letters.extend(ascending(sigma).rev());
        }
    }
    Word::new(letters)
}

/// `B_k = (1 2 ... σ)^k`.
pub fn gen_b(sigma: usize, k: usize) -> Result<Word> {
    check_family(sigma, k)?;
    let letters = (0..k).flat_map(|_| ascending(sigma)).collect();
    Word::new(letters)
}

fn check_family(sigma: usize, k: usize) -> Result<()> {
    if sigma < 2 {
        return Err(Error::InvalidParameter("alphabet size must be at least 2"));
    }
    if k < 1 {
        return Err(Error::InvalidParameter("number of blocks must be at least 1"));
    }
    Ok(())
}
