//! Index structures for the absent subsequences of a word.
//!
//! A word `u` is an *absent subsequence* of `w` when it cannot be obtained
//! from `w` by deleting letters. This crate builds, for a word over an integer
//! alphabet `{1, ..., σ}`, the structures needed to answer questions about two
//! families of absent subsequences:
//!
//! - *shortest* absent subsequences (SAS), all of length `ι(w) + 1` where
//!   `ι(w)` is the universality index, represented implicitly by a
//!   [`SasIndex`];
//! - *minimal* absent subsequences (MAS), whose every proper subsequence
//!   occurs in `w`, represented by the [`MasDag`] and queried incrementally
//!   through [`MasExtender`].
//!
//! The arch factorization ([`ArchFactorization`]) and the arch-tree
//! ([`ArchTree`]) underlie both, and the arch-tree also answers SAS queries
//! for arbitrary factors `w[i..=j]`.
//!
//! Positions are 1-based throughout, as are letter codes. Position `0` and
//! `n + 1` are sentinels used by the arch-tree and the MAS DAG.
//!
//! The [`oracle`] module holds definitional brute-force versions of the
//! main set computations; they are slow and meant for verification.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod arch;
pub mod error;
pub mod index;
pub mod level_ancestor;
pub mod mas;
pub mod oracle;
pub mod pos;
pub mod rmq;
pub mod sas;
pub mod word;

pub use arch::{ArchFactorization, ArchTree, MinArch, PosArch, SasRange};
pub use error::{Error, Result};
pub use index::AbsentIndex;
pub use level_ancestor::LevelAncestor;
pub use mas::{is_mas, lex_min_mas, MasDag, MasExtender, MasIter, MasPrefixState, DEFAULT_DAG_CAP};
pub use pos::Pos;
pub use rmq::SparseTable;
pub use sas::{get_one_sas, is_sas_simple, SasIndex, SasIter};
pub use word::{Letter, OccArrays, SymbolMap, Word};
