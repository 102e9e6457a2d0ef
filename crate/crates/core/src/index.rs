//! All linear-size structures of a word, built together.

use alloc::vec::Vec;

use num_bigint::BigUint;

use crate::arch::{ArchFactorization, ArchTree, MinArch, PosArch, SasRange};
use crate::error::Result;
use crate::mas::{self, MasDag, MasExtender};
use crate::sas::{self, SasIndex};
use crate::word::{Letter, OccArrays, Word};

/// The arch structures, the SAS index and the MAS extension tables of one
/// word. The quadratic MAS DAG is built separately with [`Self::mas_dag`].
#[derive(Debug, Clone)]
pub struct AbsentIndex {
    pub word: Word,
    pub factorization: ArchFactorization,
    pub pos_arch: PosArch,
    pub min_arch: MinArch,
    pub arch_tree: ArchTree,
    pub sas: SasIndex,
    pub occ: OccArrays,
    pub extender: MasExtender,
}

impl AbsentIndex {
    pub fn new(word: Word) -> Self {
        let factorization = ArchFactorization::new(&word);
        let pos_arch = PosArch::new(&word, &factorization);
        let min_arch = MinArch::new(&word);
        let arch_tree = ArchTree::new(&word, &min_arch);
        let sas = SasIndex::new(&word, &factorization, &arch_tree, &pos_arch);
        let occ = OccArrays::build(&word);
        let extender = MasExtender::new(&word, &factorization, &occ);
        AbsentIndex { word, factorization, pos_arch, min_arch, arch_tree, sas, occ, extender }
    }

    pub fn iota(&self) -> usize {
        self.factorization.iota()
    }

    pub fn one_sas(&self) -> Vec<Letter> {
        sas::get_one_sas(&self.factorization)
    }

    pub fn lex_min_sas(&self) -> Vec<Letter> {
        self.sas.lex_min_sas()
    }

    pub fn lex_min_mas(&self) -> Vec<Letter> {
        mas::lex_min_mas(&self.word)
    }

    pub fn is_sas(&self, u: &[Letter]) -> Result<bool> {
        self.sas.is_sas(&self.word, u)
    }

    pub fn is_mas(&self, u: &[Letter]) -> Result<bool> {
        mas::is_mas(&self.word, u)
    }

    pub fn count_sas(&self) -> BigUint {
        self.sas.count()
    }

    pub fn sas_range(&self, i: usize, j: usize) -> Result<SasRange> {
        self.arch_tree.sas_range(i, j)
    }

    /// The decoded SAS of `w[i..=j]` together with `ι(w[i..=j])`.
    pub fn range_sas(&self, i: usize, j: usize) -> Result<(Vec<Letter>, usize)> {
        let r = self.arch_tree.sas_range(i, j)?;
        let word = self.arch_tree.decode_sas_range(&r)?;
        Ok((word, self.arch_tree.factor_universality(i, j)?))
    }

    pub fn mas_extend(&self, u: &[Letter]) -> Result<Option<Vec<Letter>>> {
        self.extender.extend(&self.word, u)
    }

    pub fn mas_dag(&self, cap: usize) -> Result<MasDag> {
        MasDag::with_cap(&self.word, cap)
    }
}
