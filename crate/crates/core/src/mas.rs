//! Minimal absent subsequences: testing, the MAS DAG, and extension of a
//! prefix to a MAS.
//!
//! The DAG has a node `(i, j)` for every `0 <= j < i <= n` plus a source
//! `(0, 0)` and a sink. Reading a word `u` from the source, the node after
//! `u[1..=m]` is `(j_m, j_{m-1})`, where `j_t` ends the greedy embedding of
//! `u[1..=t]`. A letter `a` labels an edge `(i, j) -> (next_pos(a, i+1), i)`
//! when `a` occurs in `w[j+1..=i]` and again after `i`, and a final edge to
//! the sink when it occurs in `w[j+1..=i]` but not after `i`. Source-to-sink
//! paths spell exactly the MAS of `w`, and every node has at most one
//! outgoing edge per letter.
//!
//! Both edge kinds are decided in `O(1)` from two `(n + 1) × σ` tables of
//! next and last occurrences, so the adjacency is never stored. The
//! per-node data (reachability of the sink, shortest and longest
//! completion) takes `O(n²)` space and `O(n²σ)` time to compute.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arch::ArchFactorization;
use crate::error::{Error, Result};
use crate::pos::Pos;
use crate::rmq::SparseTable;
use crate::word::{Letter, OccArrays, Word};

/// Default bound on the word length accepted by [`MasDag::new`].
pub const DEFAULT_DAG_CAP: usize = 2000;

const DEAD: u32 = u32::MAX;

/// `u` is absent from `w` and every single-letter deletion of `u` occurs.
/// `O(n + m)` time, from the greedy prefix and suffix embeddings of `u`.
pub fn is_mas(w: &Word, u: &[Letter]) -> Result<bool> {
    w.check_letters(u)?;
    let (n, m) = (w.len(), u.len());
    if m == 0 {
        return Ok(false);
    }
    // left[t]: end of the shortest prefix of w containing u[1..=t]
    let mut left = vec![usize::MAX; m + 1];
    left[0] = 0;
    let mut p = 1;
    for t in 1..=m {
        while p <= n && w.at(p) != u[t - 1] {
            p += 1;
        }
        if p > n {
            break;
        }
        left[t] = p;
        p += 1;
    }
    if left[m] != usize::MAX {
        return Ok(false);
    }
    // right[t]: start of the shortest suffix of w containing u[t..=m]; 0 if none
    let mut right = vec![0usize; m + 2];
    right[m + 1] = n + 1;
    let mut p = n;
    for t in (1..=m).rev() {
        while p >= 1 && w.at(p) != u[t - 1] {
            p -= 1;
        }
        if p == 0 {
            break;
        }
        right[t] = p;
        p -= 1;
    }
    // deleting u[t] leaves u[1..t] u[t+1..=m]
    Ok((1..=m).all(|t| left[t - 1] != usize::MAX && right[t + 1] != 0 && left[t - 1] < right[t + 1]))
}

/// The lexicographically smallest MAS: `1^(|w|_1 + 1)`.
pub fn lex_min_mas(w: &Word) -> Vec<Letter> {
    vec![1; w.count(1) + 1]
}

/// `next[i][a] = next_pos(a, i + 1)` and `last[i][a] = last_pos(a, i)` for
/// `i in [0:n]`, with `0` for "none".
#[derive(Debug, Clone)]
struct OccTables {
    sigma: usize,
    next: Vec<u32>,
    last: Vec<u32>,
}

impl OccTables {
    fn new(w: &Word) -> Self {
        let (n, sigma) = (w.len(), w.sigma());
        let mut next = vec![0u32; (n + 1) * sigma];
        let mut last = vec![0u32; (n + 1) * sigma];
        for i in (0..n).rev() {
            let (row, below) = (i * sigma, (i + 1) * sigma);
            next.copy_within(below..below + sigma, row);
            next[row + w.at(i + 1) as usize - 1] = (i + 1) as u32;
        }
        for i in 1..=n {
            let (row, above) = (i * sigma, (i - 1) * sigma);
            last.copy_within(above..above + sigma, row);
            last[row + w.at(i) as usize - 1] = i as u32;
        }
        OccTables { sigma, next, last }
    }

    #[inline]
    fn next(&self, i: usize, a: Letter) -> usize {
        self.next[i * self.sigma + a as usize - 1] as usize
    }

    #[inline]
    fn last(&self, i: usize, a: Letter) -> usize {
        self.last[i * self.sigma + a as usize - 1] as usize
    }
}

/// A DAG node: `(i, j)` with `j < i`, or the source `(0, 0)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Node {
    i: usize,
    j: usize,
}

const SOURCE: Node = Node { i: 0, j: 0 };

enum Step {
    Edge(Node),
    Final,
    Missing,
}

#[derive(Debug, Clone)]
pub struct MasDag {
    n: usize,
    sigma: usize,
    tables: OccTables,
    // indexed by node id; DEAD when the sink is unreachable
    shortest: Vec<u32>,
    longest: Vec<u32>,
    source_shortest: u32,
    source_longest: u32,
}

impl MasDag {
    pub fn new(w: &Word) -> Result<Self> {
        Self::with_cap(w, DEFAULT_DAG_CAP)
    }

    /// Builds the DAG, refusing words longer than `cap`.
    pub fn with_cap(w: &Word, cap: usize) -> Result<Self> {
        let n = w.len();
        if n > cap {
            return Err(Error::DagTooLarge { len: n, cap });
        }
        let sigma = w.sigma();
        let node_count = n * (n + 1) / 2;
        let mut dag = MasDag {
            n,
            sigma,
            tables: OccTables::new(w),
            shortest: vec![DEAD; node_count],
            longest: vec![0; node_count],
            source_shortest: DEAD,
            source_longest: 0,
        };
        // edges strictly increase the first coordinate
        for i in (1..=n).rev() {
            for j in 0..i {
                let (s, l) = dag.completions(Node { i, j });
                let id = Self::id(Node { i, j });
                dag.shortest[id] = s;
                dag.longest[id] = l;
            }
        }
        let (s, l) = dag.completions(SOURCE);
        dag.source_shortest = s;
        dag.source_longest = l;
        Ok(dag)
    }

    #[inline]
    fn id(v: Node) -> usize {
        v.i * (v.i - 1) / 2 + v.j
    }

    fn completions(&self, v: Node) -> (u32, u32) {
        let (mut s, mut l) = (DEAD, 0);
        for a in 1..=self.sigma as Letter {
            let (cs, cl) = match self.step(v, a) {
                Step::Final => (1, 1),
                Step::Edge(t) if self.alive(t) => (self.shortest(t) + 1, self.longest(t) + 1),
                _ => continue,
            };
            s = s.min(cs);
            l = l.max(cl);
        }
        (s, l)
    }

    #[inline]
    fn step(&self, v: Node, a: Letter) -> Step {
        let next = self.tables.next(v.i, a);
        let in_window = v.i == 0 || self.tables.last(v.i, a) > v.j;
        match (in_window, next) {
            (false, _) => Step::Missing,
            (true, 0) => Step::Final,
            (true, k) => Step::Edge(Node { i: k, j: v.i }),
        }
    }

    #[inline]
    fn shortest(&self, v: Node) -> u32 {
        if v == SOURCE {
            self.source_shortest
        } else {
            self.shortest[Self::id(v)]
        }
    }

    #[inline]
    fn longest(&self, v: Node) -> u32 {
        if v == SOURCE {
            self.source_longest
        } else {
            self.longest[Self::id(v)]
        }
    }

    #[inline]
    fn alive(&self, v: Node) -> bool {
        self.shortest(v) != DEAD
    }

    pub fn word_len(&self) -> usize {
        self.n
    }

    /// Number of nodes, counting the source and the sink.
    pub fn node_count(&self) -> usize {
        self.shortest.len() + 2
    }

    /// The target `k` of the `a`-edge `(i, j) -> (k, i)`, if any. The source
    /// is `(0, 0)`.
    pub fn edge(&self, i: usize, j: usize, a: Letter) -> Option<usize> {
        self.check_node(i, j).ok()?;
        match self.step(Node { i, j }, a) {
            Step::Edge(t) => Some(t.i),
            _ => None,
        }
    }

    /// Labels of the final edges leaving `(i, j)`, ascending.
    pub fn final_letters(&self, i: usize, j: usize) -> Vec<Letter> {
        if self.check_node(i, j).is_err() {
            return Vec::new();
        }
        (1..=self.sigma as Letter)
            .filter(|&a| matches!(self.step(Node { i, j }, a), Step::Final))
            .collect()
    }

    fn check_node(&self, i: usize, j: usize) -> Result<()> {
        if (i, j) == (0, 0) || (j < i && i <= self.n) {
            Ok(())
        } else {
            Err(Error::UnknownNode { node: i })
        }
    }

    fn check_letters(&self, u: &[Letter]) -> Result<()> {
        match u.iter().find(|&&a| a == 0 || a as usize > self.sigma) {
            Some(&letter) => Err(Error::ForeignLetter { letter, sigma: self.sigma }),
            None => Ok(()),
        }
    }

    /// Membership in `mas(w)` by following `u` from the source, `O(m)`.
    pub fn is_mas(&self, u: &[Letter]) -> Result<bool> {
        self.check_letters(u)?;
        let Some((&last, body)) = u.split_last() else {
            return Ok(false);
        };
        let mut v = SOURCE;
        for &a in body {
            match self.step(v, a) {
                Step::Edge(t) => v = t,
                _ => return Ok(false),
            }
        }
        Ok(matches!(self.step(v, last), Step::Final))
    }

    /// Length of the longest MAS.
    pub fn longest_len(&self) -> usize {
        self.source_longest as usize
    }

    /// Length of the shortest MAS.
    pub fn shortest_len(&self) -> usize {
        self.source_shortest as usize
    }

    /// The lexicographically smallest among the longest MAS.
    pub fn longest_mas(&self) -> Vec<Letter> {
        let mut out = Vec::with_capacity(self.longest_len());
        let mut v = SOURCE;
        loop {
            let want = self.longest(v);
            for a in 1..=self.sigma as Letter {
                match self.step(v, a) {
                    Step::Final if want == 1 => {
                        out.push(a);
                        return out;
                    }
                    Step::Edge(t) if self.alive(t) && self.longest(t) + 1 == want => {
                        out.push(a);
                        v = t;
                        break;
                    }
                    _ => {}
                }
            }
        }
    }

    /// Whether some MAS has exactly `len` letters. Breadth-first over the
    /// nodes reachable in `t` letters, keeping only nodes whose completion
    /// lengths bracket `len - t`.
    pub fn exists_mas_of_length(&self, len: usize) -> bool {
        if len == 0 || len < self.shortest_len() || len > self.longest_len() {
            return false;
        }
        let mut stamp = vec![0u32; self.shortest.len()];
        let mut layer = vec![SOURCE];
        for t in 0..len {
            let remaining = (len - t) as u32;
            let mut next_layer = Vec::new();
            for &v in &layer {
                for a in 1..=self.sigma as Letter {
                    match self.step(v, a) {
                        Step::Final if remaining == 1 => return true,
                        Step::Edge(c)
                            if remaining > 1
                                && self.shortest(c) < remaining
                                && self.longest(c) >= remaining - 1 =>
                        {
                            let id = Self::id(c);
                            if stamp[id] != t as u32 + 1 {
                                stamp[id] = t as u32 + 1;
                                next_layer.push(c);
                            }
                        }
                        _ => {}
                    }
                }
            }
            layer = next_layer;
        }
        false
    }

    /// `|mas(w)|`, counting source-to-sink paths.
    pub fn count(&self) -> BigUint {
        let mut paths = vec![BigUint::zero(); self.shortest.len()];
        for i in (1..=self.n).rev() {
            for j in 0..i {
                let v = Node { i, j };
                if self.alive(v) {
                    paths[Self::id(v)] = self.count_from(v, &paths);
                }
            }
            // only row i reads the nodes (·, i)
            for k in i + 1..=self.n {
                paths[Self::id(Node { i: k, j: i })] = BigUint::zero();
            }
        }
        self.count_from(SOURCE, &paths)
    }

    fn count_from(&self, v: Node, paths: &[BigUint]) -> BigUint {
        let mut total = BigUint::zero();
        for a in 1..=self.sigma as Letter {
            match self.step(v, a) {
                Step::Final => total += 1u32,
                Step::Edge(t) if self.alive(t) => total += &paths[Self::id(t)],
                _ => {}
            }
        }
        total
    }

    /// Every MAS exactly once, in lexicographic order.
    pub fn iter(&self) -> MasIter<'_> {
        MasIter::new(self)
    }

    /// Feeds at most `limit` MAS to `sink`; returns how many were emitted.
    pub fn enumerate(&self, limit: Option<usize>, mut sink: impl FnMut(&[Letter])) -> usize {
        let mut emitted = 0;
        for u in self.iter().take(limit.unwrap_or(usize::MAX)) {
            sink(&u);
            emitted += 1;
        }
        emitted
    }
}

#[derive(Debug, Clone, Copy)]
struct Frame {
    node: Node,
    depth: usize,
    // next letter to try
    cursor: Letter,
}

enum Child {
    Node(Node),
    Leaf,
}

/// Depth-first traversal of the live part of the DAG. Every live node
/// reaches the sink, so consecutive outputs are `O(nσ)` steps apart.
#[derive(Debug, Clone)]
pub struct MasIter<'a> {
    dag: &'a MasDag,
    stack: Vec<Frame>,
    prefix: Vec<Letter>,
}

impl<'a> MasIter<'a> {
    fn new(dag: &'a MasDag) -> Self {
        let stack = if dag.alive(SOURCE) {
            vec![Frame { node: SOURCE, depth: 0, cursor: 1 }]
        } else {
            Vec::new()
        };
        MasIter { dag, stack, prefix: Vec::new() }
    }

    fn seek(&self, v: Node, from: Letter) -> Option<(Letter, Child)> {
        (from..=self.dag.sigma as Letter).find_map(|a| match self.dag.step(v, a) {
            Step::Final => Some((a, Child::Leaf)),
            Step::Edge(t) if self.dag.alive(t) => Some((a, Child::Node(t))),
            _ => None,
        })
    }
}

impl Iterator for MasIter<'_> {
    type Item = Vec<Letter>;

    fn next(&mut self) -> Option<Vec<Letter>> {
        loop {
            let frame = *self.stack.last()?;
            let Some((a, child)) = self.seek(frame.node, frame.cursor) else {
                self.stack.pop();
                continue;
            };
            if self.seek(frame.node, a + 1).is_some() {
                self.stack.last_mut().expect("frame is on the stack").cursor = a + 1;
            } else {
                self.stack.pop();
            }
            self.prefix.truncate(frame.depth);
            self.prefix.push(a);
            match child {
                Child::Leaf => return Some(self.prefix.clone()),
                Child::Node(t) => {
                    self.stack.push(Frame { node: t, depth: frame.depth + 1, cursor: 1 })
                }
            }
        }
    }
}

/// Ends `j0 < j1` of the greedy embeddings of `u[..m-1]` and `u`, for a
/// prefix `u` that extends to some MAS.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MasPrefixState {
    pub j0: usize,
    pub j1: usize,
}

/// Answers extension queries without the DAG: `O(nσ)` tables plus a
/// range-maximum structure over `nextArray`.
#[derive(Debug, Clone)]
pub struct MasExtender {
    letters: Vec<Letter>,
    tables: OccTables,
    next_rmq: SparseTable<Pos>,
    modus: Vec<Letter>,
    outside_rest: Letter,
}

impl MasExtender {
    pub fn new(w: &Word, f: &ArchFactorization, occ: &OccArrays) -> Self {
        MasExtender {
            letters: w.letters().to_vec(),
            tables: OccTables::new(w),
            next_rmq: SparseTable::new(occ.next_array().to_vec()).expect("words are nonempty"),
            modus: f.modus().to_vec(),
            outside_rest: f.letter_outside_rest(),
        }
    }

    fn check_letters(&self, u: &[Letter]) -> Result<()> {
        let sigma = self.tables.sigma;
        match u.iter().find(|&&a| a == 0 || a as usize > sigma) {
            Some(&letter) => Err(Error::ForeignLetter { letter, sigma }),
            None => Ok(()),
        }
    }

    /// Follows the greedy embedding of a nonempty `u`, requiring each
    /// letter after the first to occur between the previous two embedding
    /// ends. `None` when `u` is absent or no MAS starts with `u`.
    pub fn is_mas_prefix(&self, u: &[Letter]) -> Result<Option<MasPrefixState>> {
        self.check_letters(u)?;
        let Some((&first, tail)) = u.split_first() else {
            return Err(Error::InvalidParameter("prefix must be nonempty"));
        };
        let mut j0 = 0;
        let mut j1 = self.tables.next(0, first);
        if j1 == 0 {
            return Ok(None);
        }
        for &a in tail {
            let j2 = self.tables.next(j1, a);
            if j2 == 0 {
                return Ok(None);
            }
            // last occurrence of a before j2
            let j3 = self.tables.last(j2 - 1, a);
            if j3 <= j0 || j3 > j1 {
                return Ok(None);
            }
            (j0, j1) = (j1, j2);
        }
        Ok(Some(MasPrefixState { j0, j1 }))
    }

    /// A shortest `v` such that `u·v` is a MAS, or `None` if there is none.
    /// `O(|u| + |v|)` time.
    pub fn extend(&self, w: &Word, u: &[Letter]) -> Result<Option<Vec<Letter>>> {
        self.check_letters(u)?;
        if u.is_empty() {
            let mut v = self.modus.clone();
            v.push(self.outside_rest);
            return Ok(Some(v));
        }
        if w.is_subsequence(u).is_none() {
            return Ok(is_mas(w, u)?.then(Vec::new));
        }
        let Some(MasPrefixState { mut j0, mut j1 }) = self.is_mas_prefix(u)? else {
            return Ok(None);
        };
        let mut v = Vec::new();
        loop {
            // the letter of w[j0+1..=j1] whose next occurrence after j1 is
            // farthest away, or absent
            let i2 = self.next_rmq.query(j0 + 1, j1).expect("j0 < j1 <= n");
            v.push(self.letters[i2 - 1]);
            match self.next_rmq.value(i2) {
                Pos::At(next) => (j0, j1) = (j1, *next),
                _ => return Ok(Some(v)),
            }
        }
    }
}
