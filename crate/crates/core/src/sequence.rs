use std::ops::Index;

use crate::error::{parameter, Error, Result};
use crate::word::{Alphabet, Word};

/// Largest number of terms a construction will materialize.
pub const MAX_MATERIALIZED_TERMS: u64 = 1 << 22;

/// `p^n` as a 64-bit count, or a capacity error on overflow.
pub fn word_count(p: u32, n: usize) -> Result<u64> {
    let exp = u32::try_from(n).map_err(|_| Error::Capacity(format!("length {n} too large")))?;
    u64::from(p)
        .checked_pow(exp)
        .ok_or_else(|| Error::Capacity(format!("{p}^{n} does not fit in 64 bits")))
}

/// Like [`word_count`], but also requires the count to be materializable.
pub(crate) fn materializable_count(p: u32, n: usize) -> Result<usize> {
    let count = word_count(p, n)?;
    if count > MAX_MATERIALIZED_TERMS {
        return Err(Error::Capacity(format!(
            "{p}^{n} = {count} terms exceeds the materialization limit of {MAX_MATERIALIZED_TERMS}"
        )));
    }
    Ok(count as usize)
}

/// An indexed list of equal-length words claimed to form a σ_k-Gray cycle.
///
/// Construction only checks the shape (non-empty, uniform length and
/// alphabet); the Gray-cycle conditions are the verifier's job.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraySequence {
    alphabet: Alphabet,
    n: usize,
    k: usize,
    terms: Vec<Word>,
}

impl GraySequence {
    pub fn new(k: usize, terms: Vec<Word>) -> Result<Self> {
        let first = match terms.first() {
            Some(w) => w,
            None => return parameter("a Gray sequence needs at least one term"),
        };
        let (alphabet, n) = (first.alphabet(), first.len());
        if let Some((i, w)) = terms
            .iter()
            .enumerate()
            .find(|(_, w)| w.len() != n || w.alphabet() != alphabet)
        {
            return Err(Error::Dimension(format!(
                "term [{i}] = {w} does not match length {n} over an alphabet of size {}",
                alphabet.size()
            )));
        }
        Ok(GraySequence {
            alphabet,
            n,
            k,
            terms,
        })
    }

    pub(crate) fn from_parts(alphabet: Alphabet, n: usize, k: usize, terms: Vec<Word>) -> Self {
        debug_assert!(!terms.is_empty());
        GraySequence {
            alphabet,
            n,
            k,
            terms,
        }
    }

    pub fn p(&self) -> u32 {
        self.alphabet.size()
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Word] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Word> {
        self.terms
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Word> {
        self.terms.iter()
    }

    /// Terms rendered in the digit text format.
    pub fn to_strings(&self) -> Vec<String> {
        self.terms.iter().map(Word::to_string).collect()
    }
}

impl Index<usize> for GraySequence {
    type Output = Word;

    fn index(&self, i: usize) -> &Word {
        &self.terms[i]
    }
}

impl<'a> IntoIterator for &'a GraySequence {
    type Item = &'a Word;
    type IntoIter = std::slice::Iter<'a, Word>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.iter()
    }
}
