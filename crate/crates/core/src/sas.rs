//! Compact representation of all shortest absent subsequences.
//!
//! Every SAS of a word with `k` arches picks, greedily, exactly one position
//! in each arch and ends with a letter outside the rest. The arrays kept
//! here describe an implicit tree whose root-to-leaf paths are exactly these
//! words:
//!
//! - the children of the root are the positions of `start_sas`;
//! - the children of a position `i` in arch `l < k` are the first
//!   occurrences in arch `l + 1` of the letters at
//!   `sorted_last[l][1..=leq[i]]`;
//! - the children of a position `i` in arch `k` are the letters at
//!   `sorted_last[k][1..=leq[i]]`, which are leaves.
//!
//! The tree is never materialized.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arch::{ArchFactorization, ArchTree, PosArch};
use crate::error::Result;
use crate::word::{Letter, Word};

#[derive(Debug, Clone)]
pub struct SasIndex {
    k: usize,
    sigma: usize,
    letters: Vec<Letter>,
    pos_arch: PosArch,
    dist: Vec<u32>,
    // per-arch slices of the flattened arrays below
    offsets: Vec<usize>,
    sorted_last: Vec<u32>,
    lex: Vec<u32>,
    // indices (1-based within the arch) of `sorted_last`, ordered by letter
    by_letter: Vec<u32>,
    // indexed by position - 1 for positions inside arches; 0 is -inf
    leq: Vec<u32>,
    start_sas: Vec<u32>,
    // letters outside al(rest(w)); these are the SAS when k = 0
    outside_rest: Vec<Letter>,
}

impl SasIndex {
    pub fn new(w: &Word, f: &ArchFactorization, tree: &ArchTree, pos_arch: &PosArch) -> Self {
        let n = w.len();
        let sigma = w.sigma();
        let k = f.iota();

        // dist[i] = depth(i) + 1
        let dist: Vec<u32> = (1..=n)
            .map(|i| tree.depth(i).expect("every position is a node") as u32 + 1)
            .collect();

        // keep[p] marks the positions of the sets L'_l
        let mut keep = vec![false; n + 1];
        for l in 1..=k {
            for a in 1..=sigma as Letter {
                let kept = if l < k {
                    dist[pos_arch.first(l + 1, a) - 1] as usize == k - l + 1
                } else {
                    !f.rest_contains(a)
                };
                if kept {
                    keep[pos_arch.last(l, a)] = true;
                }
            }
        }

        let mut offsets = Vec::with_capacity(k + 1);
        let mut sorted_last = Vec::new();
        let mut lex = Vec::new();
        let mut leq = vec![0u32; f.rest_start() - 1];
        offsets.push(0);
        for l in 1..=k {
            let (start, end) = f.arch_bounds(l);
            let mut t = 0u32;
            let mut best: Option<u32> = None;
            for p in start..=end {
                if keep[p] {
                    t += 1;
                    sorted_last.push(p as u32);
                    if best.is_none_or(|b| w.at(p) < w.at(b as usize)) {
                        best = Some(p as u32);
                    }
                    lex.push(best.expect("set just above"));
                }
                leq[p - 1] = t;
            }
            offsets.push(sorted_last.len());
        }

        let mut by_letter = Vec::with_capacity(sorted_last.len());
        for l in 1..=k {
            for a in 1..=sigma as Letter {
                let p = pos_arch.last(l, a);
                if keep[p] {
                    by_letter.push(leq[p - 1]);
                }
            }
        }

        let start_sas = if k == 0 {
            Vec::new()
        } else {
            (1..=sigma as Letter)
                .map(|a| pos_arch.first(1, a))
                .filter(|&p| dist[p - 1] as usize == k + 1)
                .map(|p| p as u32)
                .collect()
        };
        let outside_rest = (1..=sigma as Letter).filter(|&a| !f.rest_contains(a)).collect();

        SasIndex {
            k,
            sigma,
            letters: w.letters().to_vec(),
            pos_arch: pos_arch.clone(),
            dist,
            offsets,
            sorted_last,
            lex,
            by_letter,
            leq,
            start_sas,
            outside_rest,
        }
    }

    pub fn iota(&self) -> usize {
        self.k
    }

    #[inline]
    fn letter(&self, p: usize) -> Letter {
        self.letters[p - 1]
    }

    /// `dist[i]`: length of the shortest absent subsequence of `w[i..]`
    /// starting with `w[i]`.
    pub fn dist(&self, i: usize) -> usize {
        self.dist[i - 1] as usize
    }

    pub fn dist_array(&self) -> &[u32] {
        &self.dist
    }

    /// `sortedLast[l]`, ascending positions.
    pub fn sorted_last(&self, l: usize) -> &[u32] {
        &self.sorted_last[self.offsets[l - 1]..self.offsets[l]]
    }

    /// `Lex[l]`: `lex(l)[t - 1]` is the position carrying the smallest
    /// letter among `sorted_last(l)[..t]`.
    pub fn lex(&self, l: usize) -> &[u32] {
        &self.lex[self.offsets[l - 1]..self.offsets[l]]
    }

    /// `Leq[l][i]` for the arch containing `i`: the number of entries of
    /// `sorted_last` of that arch that are `<= i`, or `None` for `-inf`.
    /// Positions of the rest have no entry.
    pub fn leq(&self, i: usize) -> Option<usize> {
        match self.leq.get(i.checked_sub(1)?) {
            Some(&t) if t > 0 => Some(t as usize),
            _ => None,
        }
    }

    fn leq_count(&self, i: usize) -> usize {
        self.leq[i - 1] as usize
    }

    /// First positions (in arch 1) of letters that start some SAS, ordered
    /// by letter.
    pub fn start_sas(&self) -> &[u32] {
        &self.start_sas
    }

    /// The member of `start_sas` with the smallest letter.
    pub fn init(&self) -> Option<usize> {
        self.start_sas.first().map(|&p| p as usize)
    }

    /// Tests membership in `sas(w)` in `O(k)` time.
    pub fn is_sas(&self, w: &Word, u: &[Letter]) -> Result<bool> {
        w.check_letters(u)?;
        let k = self.k;
        if u.len() != k + 1 {
            return Ok(false);
        }
        if k == 0 {
            return Ok(self.outside_rest.contains(&u[0]));
        }
        let pa = &self.pos_arch;
        for i in 1..=k {
            if self.dist(pa.first(i, u[i - 1])) != k - i + 2 {
                return Ok(false);
            }
            if i >= 2 && pa.last(i - 1, u[i - 1]) > pa.first(i - 1, u[i - 2]) {
                return Ok(false);
            }
        }
        let last = u[k];
        Ok(self.outside_rest.contains(&last) && pa.last(k, last) <= pa.first(k, u[k - 1]))
    }

    /// The lexicographically smallest SAS, in `O(k)` time.
    pub fn lex_min_sas(&self) -> Vec<Letter> {
        if self.k == 0 {
            return vec![self.outside_rest[0]];
        }
        let init = self.init().expect("a word with arches has an SAS");
        let mut u = Vec::with_capacity(self.k + 1);
        u.push(self.letter(init));
        for l in 1..=self.k {
            let node = self.pos_arch.first(l, u[l - 1]);
            let t = self.leq(node).expect("every tree node has a child");
            u.push(self.letter(self.lex(l)[t - 1] as usize));
        }
        u
    }

    /// Every SAS exactly once, in lexicographic order.
    pub fn iter(&self) -> SasIter<'_> {
        SasIter::new(self)
    }

    /// Feeds at most `limit` SAS to `sink`; returns how many were emitted.
    pub fn enumerate(&self, limit: Option<usize>, mut sink: impl FnMut(&[Letter])) -> usize {
        let mut emitted = 0;
        for u in self.iter().take(limit.unwrap_or(usize::MAX)) {
            sink(&u);
            emitted += 1;
        }
        emitted
    }

    /// `|sas(w)|`, by counting leaves of the implicit tree level by level.
    pub fn count(&self) -> BigUint {
        let k = self.k;
        if k == 0 {
            return BigUint::from(self.outside_rest.len());
        }
        let sigma = self.sigma;
        let pa = &self.pos_arch;
        // leaves below the node first(l, a), for the current level l
        let mut below: Vec<BigUint> = (1..=sigma as Letter)
            .map(|a| BigUint::from(self.leq_count(pa.first(k, a))))
            .collect();
        for l in (1..k).rev() {
            let entries = self.sorted_last(l);
            let mut prefix = Vec::with_capacity(entries.len() + 1);
            prefix.push(BigUint::zero());
            for &p in entries {
                let add = &below[self.letter(p as usize) as usize - 1];
                let next = prefix.last().expect("nonempty") + add;
                prefix.push(next);
            }
            below = (1..=sigma as Letter)
                .map(|a| prefix[self.leq_count(pa.first(l, a))].clone())
                .collect();
        }
        self.start_sas
            .iter()
            .map(|&p| &below[self.letter(p as usize) as usize - 1])
            .sum()
    }

}

/// Any shortest absent subsequence: `m(w)` followed by a letter outside the
/// rest. `O(k + σ)` time.
pub fn get_one_sas(f: &ArchFactorization) -> Vec<Letter> {
    let mut u = f.modus().to_vec();
    u.push(f.letter_outside_rest());
    u
}

/// Definitional SAS test: right length and absent. `O(n)` time. Words with
/// letters outside the alphabet are never SAS.
pub fn is_sas_simple(w: &Word, f: &ArchFactorization, u: &[Letter]) -> bool {
    u.len() == f.iota() + 1 && w.check_letters(u).is_ok() && w.is_subsequence(u).is_none()
}

#[derive(Debug, Clone)]
struct Frame {
    level: usize,
    bound: usize,
    cursor: usize,
}

enum Child {
    Node { letter: Letter, pos: usize },
    Leaf(Letter),
}

/// Depth-first traversal of the implicit SAS tree. A frame is dropped as
/// soon as its last child is taken, so the stack only holds nodes with
/// unexplored children.
#[derive(Debug, Clone)]
pub struct SasIter<'a> {
    index: &'a SasIndex,
    stack: Vec<Frame>,
    prefix: Vec<Letter>,
}

impl<'a> SasIter<'a> {
    fn new(index: &'a SasIndex) -> Self {
        let root = Frame { level: 0, bound: 0, cursor: 0 };
        SasIter { index, stack: vec![root], prefix: Vec::with_capacity(index.k + 1) }
    }

    fn child_count(&self, frame: &Frame) -> usize {
        let idx = self.index;
        match frame.level {
            0 if idx.k == 0 => idx.outside_rest.len(),
            0 => idx.start_sas.len(),
            l => idx.offsets[l] - idx.offsets[l - 1],
        }
    }

    /// The child at `cursor` if it is admissible for `frame`.
    fn child_at(&self, frame: &Frame, cursor: usize) -> Option<Child> {
        let idx = self.index;
        match frame.level {
            0 if idx.k == 0 => Some(Child::Leaf(idx.outside_rest[cursor])),
            0 => {
                let pos = idx.start_sas[cursor] as usize;
                Some(Child::Node { letter: idx.letter(pos), pos })
            }
            l => {
                let t = idx.by_letter[idx.offsets[l - 1] + cursor] as usize;
                if t > frame.bound {
                    return None;
                }
                let letter = idx.letter(idx.sorted_last(l)[t - 1] as usize);
                if l == idx.k {
                    Some(Child::Leaf(letter))
                } else {
                    Some(Child::Node { letter, pos: idx.pos_arch.first(l + 1, letter) })
                }
            }
        }
    }

    fn seek(&self, frame: &Frame, from: usize) -> Option<(usize, Child)> {
        (from..self.child_count(frame)).find_map(|c| self.child_at(frame, c).map(|ch| (c, ch)))
    }
}

impl Iterator for SasIter<'_> {
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        loop {
            let frame = self.stack.last()?.clone();
            let Some((cursor, child)) = self.seek(&frame, frame.cursor) else {
                self.stack.pop();
                continue;
            };
            if self.seek(&frame, cursor + 1).is_some() {
                self.stack.last_mut().expect("frame is on the stack").cursor = cursor + 1;
            } else {
                self.stack.pop();
            }
            self.prefix.truncate(frame.level);
            match child {
                Child::Leaf(a) => {
                    let mut out = Vec::with_capacity(self.prefix.len() + 1);
                    out.extend_from_slice(&self.prefix);
                    out.push(a);
                    return Some(out);
                }
                Child::Node { letter, pos } => {
                    self.prefix.push(letter);
                    let bound = self.index.leq_count(pos);
                    self.stack.push(Frame { level: frame.level + 1, bound, cursor: 0 });
                }
            }
        }
    }
}
