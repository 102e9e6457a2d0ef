use core::fmt;

/// A position in a word, extended with the two absent markers.
///
/// The derived ordering puts `NegInf` below every concrete position and
/// `Inf` above every concrete position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Pos {
    NegInf,
    At(usize),
    Inf,
}

impl Pos {
    pub fn at(self) -> Option<usize> {
        match self {
            Pos::At(p) => Some(p),
            _ => None,
        }
    }

    pub fn is_absent(self) -> bool {
        !matches!(self, Pos::At(_))
    }
}

impl From<usize> for Pos {
    fn from(p: usize) -> Self {
        Pos::At(p)
    }
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pos::NegInf => f.write_str("-inf"),
            Pos::At(p) => write!(f, "{p}"),
            Pos::Inf => f.write_str("inf"),
        }
    }
}
