use crate::word::Letter;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("empty word")]
    EmptyWord,

    #[error("word of length {len} exceeds the supported maximum of {max}")]
    WordTooLong { len: usize, max: usize },

    /// A letter code outside `[1:σ]` in a word being constructed.
    #[error("letter code {letter} is outside the alphabet [1:{sigma}]")]
    InvalidLetter { letter: Letter, sigma: usize },

    /// The dense constructor requires every letter of `[1:σ]` to occur.
    #[error("letter {letter} of the alphabet [1:{sigma}] does not occur in the word")]
    MissingLetter { letter: Letter, sigma: usize },

    /// A query word contains a letter that is not part of the alphabet.
    #[error("foreign letter {letter} in query (alphabet is [1:{sigma}])")]
    ForeignLetter { letter: Letter, sigma: usize },

    #[error("range [{i}:{j}] is invalid for length {len}")]
    InvalidRange { i: usize, j: usize, len: usize },

    #[error("cannot build a range query structure over an empty array")]
    EmptyArray,

    #[error("unknown tree node {node}")]
    UnknownNode { node: usize },

    #[error("parent array does not describe a rooted tree")]
    InvalidTree,

    #[error("word length {len} exceeds the MAS DAG cap of {cap}")]
    DagTooLarge { len: usize, cap: usize },

    #[error("oracle budget exceeded: more than {budget} candidate words")]
    BudgetExceeded { budget: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),
}
