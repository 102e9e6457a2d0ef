//! Words over the dense integer alphabet `[1:σ]` and the elementary scans
//! the index structures are built from.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::pos::Pos;

/// A letter code. Valid codes of a word with alphabet size `σ` are `1..=σ`;
/// `0` is never a valid letter.
pub type Letter = u32;

/// A nonempty word over `[1:σ]`, accessed with 1-based positions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
    sigma: usize,
}

impl Word {
    /// Builds a word whose alphabet is exactly the set of letters occurring
    /// in it: every code lies in `[1:σ]` and every code of `[1:σ]` occurs.
    pub fn new(letters: Vec<Letter>) -> Result<Self> {
        let sigma = letters.iter().copied().max().unwrap_or(0) as usize;
        let word = Self::with_alphabet_size(letters, sigma)?;
        let mut seen = vec![false; sigma + 1];
        for &a in &word.letters {
            seen[a as usize] = true;
        }
        if let Some(a) = (1..=sigma).find(|&a| !seen[a]) {
            return Err(Error::MissingLetter { letter: a as Letter, sigma });
        }
        Ok(word)
    }

    /// Builds a word over the declared alphabet `[1:sigma]`, which may be
    /// larger than the set of letters that occur. Universality is then
    /// measured against the declared alphabet.
    pub fn with_alphabet_size(letters: Vec<Letter>, sigma: usize) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        if letters.len() >= u32::MAX as usize {
            return Err(Error::WordTooLong { len: letters.len(), max: u32::MAX as usize - 1 });
        }
        if let Some(&a) = letters.iter().find(|&&a| a == 0 || a as usize > sigma) {
            return Err(Error::InvalidLetter { letter: a, sigma });
        }
        Ok(Word { letters, sigma })
    }

    /// Encodes user symbols with dense codes assigned in order of first
    /// appearance.
    pub fn normalize<S: Ord + Clone>(raw: &[S]) -> Result<(Word, SymbolMap<S>)> {
        if raw.is_empty() {
            return Err(Error::EmptyWord);
        }
        let map = SymbolMap::by_first_appearance(raw);
        let word = Word::new(map.encode(raw))?;
        Ok((word, map))
    }

    /// Encodes user symbols with codes assigned in ascending symbol order,
    /// so that lexicographic order on codes matches the order of symbols.
    pub fn normalize_sorted<S: Ord + Clone>(raw: &[S]) -> Result<(Word, SymbolMap<S>)> {
        if raw.is_empty() {
            return Err(Error::EmptyWord);
        }
        let map = SymbolMap::sorted(raw);
        let word = Word::new(map.encode(raw))?;
        Ok((word, map))
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// Always false; kept for API symmetry with slices.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The letter at 1-based position `i`.
    #[inline]
    pub fn at(&self, i: usize) -> Letter {
        self.letters[i - 1]
    }

    /// `|w|_a`, the number of occurrences of `a`.
    pub fn count(&self, a: Letter) -> usize {
        self.letters.iter().filter(|&&b| b == a).count()
    }

    pub fn is_letter(&self, a: Letter) -> bool {
        a >= 1 && a as usize <= self.sigma
    }

    /// Fails with [`Error::ForeignLetter`] on the first letter of `u`
    /// outside the alphabet.
    pub fn check_letters(&self, u: &[Letter]) -> Result<()> {
        match u.iter().find(|&&a| !self.is_letter(a)) {
            Some(&letter) => Err(Error::ForeignLetter { letter, sigma: self.sigma }),
            None => Ok(()),
        }
    }

    /// The factor `w[i..=j]` (1-based), over the same declared alphabet.
    pub fn factor(&self, i: usize, j: usize) -> Result<Word> {
        if i == 0 || i > j || j > self.len() {
            return Err(Error::InvalidRange { i, j, len: self.len() });
        }
        Word::with_alphabet_size(self.letters[i - 1..j].to_vec(), self.sigma)
    }

    /// Least `j >= i` with `w[j] = a`; `Inf` if none or `i` is out of range.
    pub fn next_pos(&self, a: Letter, i: usize) -> Pos {
        if i < 1 || i > self.len() {
            return Pos::Inf;
        }
        self.letters[i - 1..]
            .iter()
            .position(|&b| b == a)
            .map_or(Pos::Inf, |off| Pos::At(i + off))
    }

    /// Greatest `j <= i` with `w[j] = a`; `NegInf` if none or `i` is out of
    /// range.
    pub fn last_pos(&self, a: Letter, i: usize) -> Pos {
        if i < 1 || i > self.len() {
            return Pos::NegInf;
        }
        self.letters[..i]
            .iter()
            .rposition(|&b| b == a)
            .map_or(Pos::NegInf, |off| Pos::At(off + 1))
    }

    /// Greedy leftmost embedding of `u`. Returns the end of the shortest
    /// prefix of `w` containing `u` (0 for the empty word), or `None` if `u`
    /// is absent. Letters outside the alphabet are simply never found.
    pub fn is_subsequence(&self, u: &[Letter]) -> Option<usize> {
        let mut end = 0;
        for &a in u {
            end = self.next_pos(a, end + 1).at()?;
        }
        Some(end)
    }

    /// `llo(w)`: the leftmost of the last occurrences of the letters of the
    /// alphabet, or `Inf` when some letter does not occur at all.
    pub fn llo(&self) -> Pos {
        let mut seen = vec![false; self.sigma + 1];
        let mut remaining = self.sigma;
        for i in (1..=self.len()).rev() {
            let a = self.at(i) as usize;
            if !seen[a] {
                seen[a] = true;
                remaining -= 1;
                if remaining == 0 {
                    return Pos::At(i);
                }
            }
        }
        Pos::Inf
    }
}

/// `nextArray` and `prevArray`: for each position, the next and previous
/// occurrence of the same letter.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccArrays {
    next: Vec<Pos>,
    prev: Vec<Pos>,
}

impl OccArrays {
    pub fn build(w: &Word) -> Self {
        let n = w.len();
        let mut next = vec![Pos::Inf; n];
        let mut prev = vec![Pos::NegInf; n];
        let mut last_seen = vec![Pos::Inf; w.sigma() + 1];
        for i in (1..=n).rev() {
            let a = w.at(i) as usize;
            next[i - 1] = last_seen[a];
            last_seen[a] = Pos::At(i);
        }
        let mut last_seen = vec![Pos::NegInf; w.sigma() + 1];
        for i in 1..=n {
            let a = w.at(i) as usize;
            prev[i - 1] = last_seen[a];
            last_seen[a] = Pos::At(i);
        }
        OccArrays { next, prev }
    }

    /// `nextArray[i]` for 1-based `i`.
    pub fn next(&self, i: usize) -> Pos {
        self.next[i - 1]
    }

    pub fn prev(&self, i: usize) -> Pos {
        self.prev[i - 1]
    }

    pub fn next_array(&self) -> &[Pos] {
        &self.next
    }

    pub fn prev_array(&self) -> &[Pos] {
        &self.prev
    }
}

/// Bijection between user symbols and letter codes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolMap<S> {
    symbols: Vec<S>,
    codes: BTreeMap<S, Letter>,
}

impl<S: Ord + Clone> SymbolMap<S> {
    fn by_first_appearance(raw: &[S]) -> Self {
        let mut symbols = Vec::new();
        let mut codes = BTreeMap::new();
        for s in raw {
            if !codes.contains_key(s) {
                symbols.push(s.clone());
                codes.insert(s.clone(), symbols.len() as Letter);
            }
        }
        SymbolMap { symbols, codes }
    }

    fn sorted(raw: &[S]) -> Self {
        let mut symbols: Vec<S> = raw.to_vec();
        symbols.sort();
        symbols.dedup();
        Self::from_ordered(symbols)
    }

    fn from_ordered(symbols: Vec<S>) -> Self {
        let codes = symbols.iter().cloned().zip(1..).collect();
        SymbolMap { symbols, codes }
    }

    /// A map over a declared alphabet, coded in the given order. Fails if
    /// the alphabet is empty or lists a symbol twice.
    pub fn from_alphabet(symbols: Vec<S>) -> Result<Self> {
        if symbols.is_empty() {
            return Err(Error::InvalidParameter("empty alphabet"));
        }
        let map = Self::from_ordered(symbols);
        if map.codes.len() != map.symbols.len() {
            return Err(Error::InvalidParameter("alphabet lists a symbol twice"));
        }
        Ok(map)
    }

    /// Extends the map with symbols of `raw` it does not know yet, coded
    /// after the existing ones in order of first appearance.
    pub fn extend_with(&mut self, raw: &[S]) {
        for s in raw {
            if !self.codes.contains_key(s) {
                self.symbols.push(s.clone());
                self.codes.insert(s.clone(), self.symbols.len() as Letter);
            }
        }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn code(&self, s: &S) -> Option<Letter> {
        self.codes.get(s).copied()
    }

    pub fn symbol(&self, a: Letter) -> Option<&S> {
        (a as usize).checked_sub(1).and_then(|i| self.symbols.get(i))
    }

    /// Encodes symbols; unknown symbols become the invalid code `0`.
    pub fn encode(&self, raw: &[S]) -> Vec<Letter> {
        raw.iter().map(|s| self.code(s).unwrap_or(0)).collect()
    }

    /// Decodes letters; panics on codes outside the map.
    pub fn decode(&self, u: &[Letter]) -> Vec<S> {
        u.iter()
            .map(|&a| self.symbol(a).expect("letter code outside symbol map").clone())
            .collect()
    }
}
