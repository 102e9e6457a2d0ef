//! Arch factorization, `minArch`, and the arch-tree with range SAS queries.
//!
//! An *arch* is a factor containing every letter of the alphabet whose last
//! letter occurs in it exactly once. Greedily cutting `w` into arches leaves
//! a *rest* that misses at least one letter; the number of arches is the
//! universality index `ι(w)`.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::level_ancestor::LevelAncestor;
use crate::pos::Pos;
use crate::word::{Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArchFactorization {
    n: usize,
    arch_ends: Vec<usize>,
    rest_alph: Vec<bool>,
    modus: Vec<Letter>,
}

impl ArchFactorization {
    pub fn new(w: &Word) -> Self {
        let sigma = w.sigma();
        let mut seen = vec![false; sigma + 1];
        let mut missing = sigma;
        let mut arch_ends = Vec::new();
        let mut modus = Vec::new();
        for i in 1..=w.len() {
            let a = w.at(i);
            if !seen[a as usize] {
                seen[a as usize] = true;
                missing -= 1;
            }
            if missing == 0 {
                arch_ends.push(i);
                modus.push(a);
                missing = sigma;
                // arches have length >= σ, so the reset is amortized
                seen.iter_mut().for_each(|s| *s = false);
            }
        }
        ArchFactorization { n: w.len(), arch_ends, rest_alph: seen, modus }
    }

    /// The universality index `ι(w)`.
    pub fn iota(&self) -> usize {
        self.arch_ends.len()
    }

    /// End positions `n_1 < ... < n_k` of the arches.
    pub fn arch_ends(&self) -> &[usize] {
        &self.arch_ends
    }

    /// First and last position of arch `l` (1-based).
    pub fn arch_bounds(&self, l: usize) -> (usize, usize) {
        let start = if l == 1 { 1 } else { self.arch_ends[l - 2] + 1 };
        (start, self.arch_ends[l - 1])
    }

    /// The arch containing position `i`, or `None` for positions of the rest.
    pub fn arch_of(&self, i: usize) -> Option<usize> {
        let l = self.arch_ends.partition_point(|&e| e < i);
        (l < self.arch_ends.len()).then_some(l + 1)
    }

    /// Position of the first letter of the rest; `n + 1` if the rest is empty.
    pub fn rest_start(&self) -> usize {
        self.arch_ends.last().map_or(1, |&e| e + 1)
    }

    pub fn rest_len(&self) -> usize {
        self.n + 1 - self.rest_start()
    }

    pub fn rest_contains(&self, a: Letter) -> bool {
        self.rest_alph.get(a as usize).copied().unwrap_or(false)
    }

    /// `m(w)`: the last letter of each arch.
    pub fn modus(&self) -> &[Letter] {
        &self.modus
    }

    /// Smallest letter that does not occur in the rest.
    pub fn letter_outside_rest(&self) -> Letter {
        (1..self.rest_alph.len())
            .find(|&a| !self.rest_alph[a])
            .expect("the rest never contains the whole alphabet") as Letter
    }
}

pub fn universality(w: &Word) -> usize {
    ArchFactorization::new(w).iota()
}

/// `firstPosArch` and `lastPosArch`: first and last occurrence of each
/// letter inside each arch, as absolute positions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PosArch {
    sigma: usize,
    first: Vec<u32>,
    last: Vec<u32>,
}

impl PosArch {
    pub fn new(w: &Word, f: &ArchFactorization) -> Self {
        let sigma = w.sigma();
        let k = f.iota();
        let mut first = vec![0u32; k * sigma];
        let mut last = vec![0u32; k * sigma];
        for l in 1..=k {
            let (start, end) = f.arch_bounds(l);
            let row = (l - 1) * sigma;
            for i in start..=end {
                let slot = row + w.at(i) as usize - 1;
                if first[slot] == 0 {
                    first[slot] = i as u32;
                }
                last[slot] = i as u32;
            }
        }
        PosArch { sigma, first, last }
    }

    pub fn iota(&self) -> usize {
        self.first.len().checked_div(self.sigma).unwrap_or(0)
    }

    /// Leftmost position of `a` in arch `l`.
    #[inline]
    pub fn first(&self, l: usize, a: Letter) -> usize {
        self.first[(l - 1) * self.sigma + a as usize - 1] as usize
    }

    /// Rightmost position of `a` in arch `l`.
    #[inline]
    pub fn last(&self, l: usize, a: Letter) -> usize {
        self.last[(l - 1) * self.sigma + a as usize - 1] as usize
    }
}

/// `minArch[i]`: end of the shortest factor starting at `i` that contains
/// the whole alphabet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinArch {
    ends: Vec<Pos>,
}

impl MinArch {
    pub fn new(w: &Word) -> Self {
        let n = w.len();
        let sigma = w.sigma();
        let mut ends = vec![Pos::Inf; n];
        let mut count = vec![0usize; sigma + 1];
        let mut present = 0;
        // window is w[lo..=hi]
        let mut hi = 0;
        for lo in 1..=n {
            while present < sigma && hi < n {
                hi += 1;
                let a = w.at(hi) as usize;
                count[a] += 1;
                if count[a] == 1 {
                    present += 1;
                }
            }
            if present < sigma {
                break;
            }
            ends[lo - 1] = Pos::At(hi);
            let a = w.at(lo) as usize;
            count[a] -= 1;
            if count[a] == 0 {
                present -= 1;
            }
        }
        MinArch { ends }
    }

    /// `minArch[i]` for 1-based `i`.
    pub fn get(&self, i: usize) -> Pos {
        self.ends[i - 1]
    }

    pub fn as_slice(&self) -> &[Pos] {
        &self.ends
    }
}

/// The arch-tree on nodes `0..=n+1` rooted at `n + 1`, where the parent of
/// `i < n` is `minArch[i + 1]` (or the root when that is infinite).
///
/// The depth of node `i` is `ι(w[i+1..=n]) + 1`.
#[derive(Debug, Clone)]
pub struct ArchTree {
    n: usize,
    labels: Vec<Letter>,
    la: LevelAncestor,
}

/// Compact answer to a range SAS query: the path from `start_node` up to
/// `end_node` in the arch-tree, plus the label of the parent of `end_node`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SasRange {
    pub start_node: usize,
    pub end_node: usize,
}

impl ArchTree {
    pub fn new(w: &Word, min_arch: &MinArch) -> Self {
        let n = w.len();
        let root = n + 1;
        let mut parent = vec![Some(root); n + 2];
        for (i, p) in parent.iter_mut().enumerate().take(n) {
            *p = Some(min_arch.get(i + 1).at().unwrap_or(root));
        }
        parent[root] = None;

        let mut labels = vec![0; n + 2];
        labels[1..=n].copy_from_slice(w.letters());
        labels[root] = root_label(w);

        let la = LevelAncestor::new(parent).expect("arch-tree parents point strictly upward");
        ArchTree { n, labels, la }
    }

    pub fn root(&self) -> usize {
        self.n + 1
    }

    pub fn node_count(&self) -> usize {
        self.n + 2
    }

    pub fn parent(&self, u: usize) -> Result<Option<usize>> {
        self.la.parent(u)
    }

    /// Label of node `u`; node `0` carries none.
    pub fn label(&self, u: usize) -> Result<Option<Letter>> {
        if u >= self.node_count() {
            return Err(Error::UnknownNode { node: u });
        }
        Ok((u != 0).then(|| self.labels[u]))
    }

    pub fn depth(&self, u: usize) -> Result<usize> {
        self.la.depth(u)
    }

    /// Children of `u` in ascending order. Linear scan; meant for
    /// inspection, not queries.
    pub fn children(&self, u: usize) -> Result<Vec<usize>> {
        self.la.depth(u)?;
        Ok((0..self.node_count())
            .filter(|&v| self.la.parent(v).ok().flatten() == Some(u))
            .collect())
    }

    pub fn level_ancestor(&self, u: usize, d: usize) -> Result<Option<usize>> {
        self.la.query(u, d)
    }

    fn check_range(&self, i: usize, j: usize) -> Result<()> {
        if i == 0 || i > j || j > self.n {
            return Err(Error::InvalidRange { i, j, len: self.n });
        }
        Ok(())
    }

    /// `(x, y, t)` for the factor `w[i..=j]`: the depths of `i - 1` and
    /// `j`, and the ancestor of `i - 1` at depth `y`.
    ///
    /// `x - 1` and `y - 1` are the universality indexes of `w[i..]` and
    /// `w[j+1..]`, so `ι(w[i..=j])` is `x - y` or `x - y - 1`.
    fn range_anchor(&self, i: usize, j: usize) -> Result<(usize, usize, usize)> {
        self.check_range(i, j)?;
        let x = self.la.depth(i - 1)?;
        let y = self.la.depth(j)?;
        let t = self.la.query(i - 1, y)?.expect("depth is non-increasing along the word");
        Ok((x, y, t))
    }

    /// Representation of an SAS of `w[i..=j]`, in `O(log n)` time.
    pub fn sas_range(&self, i: usize, j: usize) -> Result<SasRange> {
        let (_, y, t) = self.range_anchor(i, j)?;
        let end_node = if t > j {
            self.la.query(i - 1, y + 1)?.expect("t lies strictly above i - 1")
        } else {
            t
        };
        Ok(SasRange { start_node: i - 1, end_node })
    }

    /// Spells the SAS represented by `r`: labels on the path from
    /// `r.start_node` (exclusive) up to `r.end_node`, then the label of the
    /// parent of `r.end_node`.
    pub fn decode_sas_range(&self, r: &SasRange) -> Result<Vec<Letter>> {
        let mut out = Vec::new();
        let mut v = r.start_node;
        while v != r.end_node {
            v = self.la.parent(v)?.ok_or(Error::UnknownNode { node: r.end_node })?;
            out.push(self.labels[v]);
        }
        let p = self.la.parent(v)?.ok_or(Error::UnknownNode { node: v })?;
        out.push(self.labels[p]);
        Ok(out)
    }

    /// `ι(w[i..=j])`, measured against the alphabet of the whole word.
    pub fn factor_universality(&self, i: usize, j: usize) -> Result<usize> {
        let (x, y, t) = self.range_anchor(i, j)?;
        Ok(if t <= j { x - y } else { x - y - 1 })
    }
}

/// `w[llo(w)]`, generalized to declared alphabets larger than the set of
/// occurring letters: the letter whose last occurrence is leftmost, with
/// letters that never occur counting as last occurring at position 0.
fn root_label(w: &Word) -> Letter {
    match w.llo() {
        Pos::At(p) => w.at(p),
        _ => {
            let mut seen = vec![false; w.sigma() + 1];
            w.letters().iter().for_each(|&a| seen[a as usize] = true);
            (1..=w.sigma()).find(|&a| !seen[a]).expect("llo is only infinite when a letter is missing")
                as Letter
        }
    }
}
