//! Reading words from arguments, files or standard input, and mapping user
//! symbols to letter codes and back.

use std::fmt::Display;
use std::io::{self, Read};
use std::path::PathBuf;

use absent_core::{Letter, SymbolMap, Word};
use clap::Args;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum InputError {
    #[error("invalid integer symbol {0:?}")]
    BadInteger(String),

    #[error("symbol {0} is not in the declared alphabet")]
    NotInAlphabet(String),

    #[error("foreign symbol {0}: not in the alphabet of the word")]
    UnknownSymbol(String),

    #[error("failed to read {what}: {source}")]
    Read {
        what: String,
        #[source]
        source: io::Error,
    },

    #[error(transparent)]
    Core(#[from] absent_core::Error),
}

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// The word; read from --file or standard input when omitted
    pub word: Option<String>,

    /// Every character is a symbol (default)
    #[arg(long, conflicts_with = "ints")]
    pub text: bool,

    /// Symbols are whitespace- or comma-separated non-negative integers
    #[arg(long)]
    pub ints: bool,

    /// Read the word from a file
    #[arg(long, conflicts_with = "word")]
    pub file: Option<PathBuf>,

    /// Declare the alphabet explicitly, possibly larger than the letters of
    /// the word (characters in text mode, integers in --ints mode)
    #[arg(long)]
    pub alphabet: Option<String>,

    /// Code symbols in ascending order instead of order of first appearance
    #[arg(long)]
    pub sort_symbols: bool,
}

/// Translation between user symbols and letter codes.
#[derive(Debug, Clone)]
pub enum Codec {
    Text(SymbolMap<char>),
    Ints(SymbolMap<u64>),
}

impl Codec {
    /// Renders a letter sequence with the user's symbols.
    pub fn render(&self, u: &[Letter]) -> String {
        match self {
            Codec::Text(map) => map.decode(u).into_iter().collect(),
            Codec::Ints(map) => join(map.decode(u)),
        }
    }

    /// Encodes a query string given in the same notation as the word.
    /// Symbols outside the alphabet are an error.
    pub fn encode_query(&self, raw: &str) -> Result<Vec<Letter>, InputError> {
        match self {
            Codec::Text(map) => encode_known(map, raw.chars()),
            Codec::Ints(map) => encode_known(map, parse_ints(raw)?),
        }
    }

    /// Like [`Self::encode_query`], but symbols outside the alphabet become
    /// the invalid code `0`, which no word contains.
    pub fn encode_query_lenient(&self, raw: &str) -> Result<Vec<Letter>, InputError> {
        match self {
            Codec::Text(map) => Ok(map.encode(&raw.chars().collect::<Vec<_>>())),
            Codec::Ints(map) => Ok(map.encode(&parse_ints(raw)?)),
        }
    }
}

fn join<T: Display>(items: Vec<T>) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn encode_known<S: Ord + Clone + Display>(
    map: &SymbolMap<S>,
    raw: impl IntoIterator<Item = S>,
) -> Result<Vec<Letter>, InputError> {
    raw.into_iter()
        .map(|s| map.code(&s).ok_or_else(|| InputError::UnknownSymbol(s.to_string())))
        .collect()
}

fn parse_ints(raw: &str) -> Result<Vec<u64>, InputError> {
    raw.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse().map_err(|_| InputError::BadInteger(t.to_string())))
        .collect()
}

pub struct Input {
    pub word: Word,
    pub codec: Codec,
}

impl InputArgs {
    fn read_raw(&self) -> Result<String, InputError> {
        if let Some(word) = &self.word {
            return Ok(word.clone());
        }
        let mut raw = String::new();
        match &self.file {
            Some(path) => {
                raw = std::fs::read_to_string(path).map_err(|source| InputError::Read {
                    what: path.display().to_string(),
                    source,
                })?;
            }
            None => {
                io::stdin().read_to_string(&mut raw).map_err(|source| InputError::Read {
                    what: "standard input".into(),
                    source,
                })?;
            }
        }
        Ok(raw.trim_end_matches(['\n', '\r']).to_string())
    }

    pub fn load(&self) -> Result<Input, InputError> {
        let raw = self.read_raw()?;
        if self.ints {
            let symbols = parse_ints(&raw)?;
            let alphabet = self.alphabet.as_deref().map(parse_ints).transpose()?;
            let (word, map) = build(symbols, alphabet, self.sort_symbols)?;
            Ok(Input { word, codec: Codec::Ints(map) })
        } else {
            let symbols: Vec<char> = raw.chars().collect();
            let alphabet = self.alphabet.as_ref().map(|a| a.chars().collect());
            let (word, map) = build(symbols, alphabet, self.sort_symbols)?;
            Ok(Input { word, codec: Codec::Text(map) })
        }
    }
}

fn build<S: Ord + Clone + Display>(
    symbols: Vec<S>,
    alphabet: Option<Vec<S>>,
    sorted: bool,
) -> Result<(Word, SymbolMap<S>), InputError> {
    let Some(mut alphabet) = alphabet else {
        let built = if sorted { Word::normalize_sorted(&symbols) } else { Word::normalize(&symbols) };
        return Ok(built?);
    };
    if sorted {
        alphabet.sort();
    }
    let map = SymbolMap::from_alphabet(alphabet)?;
    if let Some(s) = symbols.iter().find(|s| map.code(s).is_none()) {
        return Err(InputError::NotInAlphabet(s.to_string()));
    }
    let sigma = map.len();
    let word = Word::with_alphabet_size(map.encode(&symbols), sigma)?;
    Ok((word, map))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(word: &str) -> InputArgs {
        InputArgs {
            word: Some(word.into()),
            text: false,
            ints: false,
            file: None,
            alphabet: None,
            sort_symbols: false,
        }
    }

    #[test]
    fn text_words_use_first_appearance_codes() {
        let input = args("0011").load().unwrap();
        assert_eq!(input.word.letters(), &[1, 1, 2, 2]);
        assert_eq!(input.codec.render(&[2, 1]), "10");
        assert_eq!(input.codec.encode_query("10").unwrap(), vec![2, 1]);
        assert!(matches!(input.codec.encode_query("12"), Err(InputError::UnknownSymbol(_))));
        assert_eq!(input.codec.encode_query_lenient("12").unwrap(), vec![2, 0]);
    }

    #[test]
    fn integer_words() {
        let mut a = args("7 3, 7 10");
        a.ints = true;
        let input = a.load().unwrap();
        assert_eq!(input.word.letters(), &[1, 2, 1, 3]);
        assert_eq!(input.codec.render(&[3, 1]), "10 7");
        a.sort_symbols = true;
        let input = a.load().unwrap();
        assert_eq!(input.word.letters(), &[2, 1, 2, 3]);
        a.word = Some("1 x".into());
        assert!(matches!(a.load(), Err(InputError::BadInteger(_))));
    }

    #[test]
    fn declared_alphabet() {
        let mut a = args("aa");
        a.alphabet = Some("ab".into());
        let input = a.load().unwrap();
        assert_eq!(input.word.sigma(), 2);
        assert_eq!(input.codec.encode_query("b").unwrap(), vec![2]);
        a.alphabet = Some("b".into());
        assert!(matches!(a.load(), Err(InputError::NotInAlphabet(_))));
        a.alphabet = Some("aa".into());
        assert!(a.load().is_err());
    }

    #[test]
    fn empty_word_is_rejected() {
        assert!(matches!(args("").load(), Err(InputError::Core(absent_core::Error::EmptyWord))));
    }
}
