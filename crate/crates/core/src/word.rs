//! Alphabets, fixed-length words and the character permutation θ.
//!
//! Characters are the integers `0..p`. Positions are reported 1-indexed in
//! every error message, even though [`Word`] stores them 0-indexed.

use std::fmt;

use crate::error::{parameter, Error, Result};

/// An ordered alphabet `{0, 1, ..., p-1}` with `2 <= p <= 255`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alphabet(u8);

impl Alphabet {
    pub const BINARY: Alphabet = Alphabet(2);

    pub fn new(size: u32) -> Result<Self> {
        if size < 2 {
            return parameter(format!("alphabet size must be at least 2, got {size}"));
        }
        let size = u8::try_from(size)
            .map_err(|_| Error::Capacity(format!("alphabet size {size} exceeds 255")))?;
        Ok(Alphabet(size))
    }

    pub fn size(self) -> u32 {
        u32::from(self.0)
    }

    pub fn is_binary(self) -> bool {
        self.0 == 2
    }

    pub fn check(self, c: u32) -> Result<u8> {
        if c < self.size() {
            Ok(c as u8)
        } else {
            Err(Error::Domain {
                character: c,
                size: self.size(),
            })
        }
    }
}

/// Ones-count parity of a binary word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Parity {
    #[default]
    Even,
    Odd,
}

impl Parity {
    /// The leading character that selects this class in the even-k construction.
    pub fn as_char(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A word of fixed length over an [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphabet: Alphabet,
    chars: Vec<u8>,
}

impl Word {
    /// Builds a word, checking every character against the alphabet.
    pub fn new(alphabet: Alphabet, chars: Vec<u8>) -> Result<Self> {
        for &c in &chars {
            alphabet.check(u32::from(c))?;
        }
        Ok(Word { alphabet, chars })
    }

    pub(crate) fn from_raw(alphabet: Alphabet, chars: Vec<u8>) -> Self {
        debug_assert!(chars.iter().all(|&c| u32::from(c) < alphabet.size()));
        Word { alphabet, chars }
    }

    pub fn zeros(alphabet: Alphabet, len: usize) -> Self {
        Word {
            alphabet,
            chars: vec![0; len],
        }
    }

    /// Parses the digit text format: one decimal digit per character, no separators.
    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self> {
        if alphabet.size() > 10 {
            return parameter(format!(
                "the digit text format supports alphabets of at most 10 characters, got {}",
                alphabet.size()
            ));
        }
        let mut chars = Vec::with_capacity(text.len());
        for (idx, ch) in text.chars().enumerate() {
            let digit = ch.to_digit(10).ok_or_else(|| Error::Parse {
                position: idx + 1,
                message: format!("{ch:?} is not a decimal digit"),
            })?;
            if digit >= alphabet.size() {
                return Err(Error::Parse {
                    position: idx + 1,
                    message: format!(
                        "character {digit} is out of range for an alphabet of size {}",
                        alphabet.size()
                    ),
                });
            }
            chars.push(digit as u8);
        }
        Ok(Word { alphabet, chars })
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn len(&self) -> usize {
        self.chars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.chars.is_empty()
    }

    pub fn chars(&self) -> &[u8] {
        &self.chars
    }

    /// Character at 1-indexed `position`.
    pub fn at(&self, position: usize) -> Option<u8> {
        position
            .checked_sub(1)
            .and_then(|i| self.chars.get(i).copied())
    }

    /// Number of occurrences of `c`.
    pub fn count(&self, c: u8) -> usize {
        self.chars.iter().filter(|&&x| x == c).count()
    }

    /// `prefix` followed by `self`.
    pub fn prepend(&self, prefix: &[u8]) -> Word {
        let mut chars = Vec::with_capacity(prefix.len() + self.chars.len());
        chars.extend_from_slice(prefix);
        chars.extend_from_slice(&self.chars);
        Word::from_raw(self.alphabet, chars)
    }

    /// Applies θ^e letterwise. θ^0 is the identity and the empty word is fixed.
    pub fn theta(&self, e: i64) -> Word {
        let shift = reduce_exponent(e, self.alphabet);
        let p = self.alphabet.0 as u32;
        let chars = self
            .chars
            .iter()
            .map(|&c| ((u32::from(c) + shift) % p) as u8)
            .collect();
        Word::from_raw(self.alphabet, chars)
    }

    /// Ones-count parity; binary words only.
    pub fn parity(&self) -> Result<Parity> {
        ones_count_parity(self)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &c in &self.chars {
            if c < 10 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})")?;
            }
        }
        Ok(())
    }
}

fn reduce_exponent(e: i64, alphabet: Alphabet) -> u32 {
    e.rem_euclid(i64::from(alphabet.0)) as u32
}

fn same_shape(u: &Word, v: &Word) -> Result<()> {
    if u.alphabet != v.alphabet {
        return Err(Error::Dimension(format!(
            "alphabet sizes differ: {} vs {}",
            u.alphabet.size(),
            v.alphabet.size()
        )));
    }
    if u.len() != v.len() {
        return Err(Error::Dimension(format!(
            "word lengths differ: {} vs {}",
            u.len(),
            v.len()
        )));
    }
    Ok(())
}

fn require_binary(alphabet: Alphabet, what: &str) -> Result<()> {
    if alphabet.is_binary() {
        Ok(())
    } else {
        parameter(format!(
            "{what} requires a binary alphabet, got size {}",
            alphabet.size()
        ))
    }
}

/// Number of positions where `u` and `v` differ.
pub fn hamming_distance(u: &Word, v: &Word) -> Result<usize> {
    same_shape(u, v)?;
    Ok(u.chars.iter().zip(&v.chars).filter(|(a, b)| a != b).count())
}

/// Whether `v` is obtained from `u` by substituting exactly `k` characters.
pub fn sigma_k_related(u: &Word, v: &Word, k: usize) -> Result<bool> {
    same_shape(u, v)?;
    if k == 0 || k > u.len() {
        return parameter(format!("k must lie in [1, {}], got {k}", u.len()));
    }
    Ok(hamming_distance(u, v)? == k)
}

/// θ(c) = (c + 1) mod p.
pub fn theta_char(c: u32, alphabet: Alphabet) -> Result<u32> {
    theta_power_char(c, 1, alphabet)
}

/// θ^e(c) = (c + e) mod p, for any integer exponent.
pub fn theta_power_char(c: u32, e: i64, alphabet: Alphabet) -> Result<u32> {
    alphabet.check(c)?;
    Ok((c + reduce_exponent(e, alphabet)) % alphabet.size())
}

/// θ^e applied to every position of `w`.
pub fn theta_word(w: &Word, e: i64) -> Word {
    w.theta(e)
}

pub fn ones_count_parity(w: &Word) -> Result<Parity> {
    require_binary(w.alphabet, "ones-count parity")?;
    Ok(if w.count(1).is_multiple_of(2) {
        Parity::Even
    } else {
        Parity::Odd
    })
}

/// Componentwise sum in Z/2Z.
pub fn xor_add(u: &Word, v: &Word) -> Result<Word> {
    require_binary(u.alphabet, "xor_add")?;
    same_shape(u, v)?;
    let chars = u.chars.iter().zip(&v.chars).map(|(a, b)| a ^ b).collect();
    Ok(Word::from_raw(u.alphabet, chars))
}
