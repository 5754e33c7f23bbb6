//! Maximum-length σ_k-Gray cycles, one construction per case of the λ formula.
//!
//! | case | parameters                 | λ         | construction            |
//! |------|----------------------------|-----------|-------------------------|
//! | i    | p ≥ 3, n ≥ k               | p^n       | [`build_hnk`]           |
//! | ii   | p = 2, n = k               | 2         | [`build_n_equals_k`]    |
//! | iii  | p = 2, n ≥ k + 1, k odd    | 2^n       | [`build_odd_pair`]      |
//! | iv   | p = 2, n ≥ k + 1, k even   | 2^(n-1)   | [`build_even`]          |
//!
//! Each builder works bottom-up: it materializes the seed sequence and then
//! applies one linear prefixing pass per induction level. [`CycleIndexer`]
//! unrolls the same recursions on the index instead, so a single term can be
//! computed in O(n) without materializing anything.

use std::fmt;

use crate::error::{parameter, Error, Result};
use crate::reflected::{
    binary_reflected_term, gamma_base, gamma_base_source, p_ary_reflected, reflected_term_at,
    rho_base, rho_base_source,
};
use crate::sequence::{materializable_count, word_count, GraySequence};
use crate::word::{Alphabet, Parity, Word};

/// The four mutually exclusive parameter regimes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Case {
    /// p ≥ 3, n ≥ k.
    I,
    /// p = 2, n = k.
    Ii,
    /// p = 2, n ≥ k + 1, k odd.
    Iii,
    /// p = 2, n ≥ k + 1, k even.
    Iv,
}

impl Case {
    pub fn label(self) -> &'static str {
        match self {
            Case::I => "i",
            Case::Ii => "ii",
            Case::Iii => "iii",
            Case::Iv => "iv",
        }
    }
}

impl fmt::Display for Case {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// A [`Case`] plus the parity class, which is only present for case iv.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CaseTag {
    pub case: Case,
    pub parity: Option<Parity>,
}

impl CaseTag {
    /// Overrides the parity class. No effect outside case iv.
    pub fn with_parity(self, parity: Parity) -> Self {
        match self.case {
            Case::Iv => CaseTag {
                parity: Some(parity),
                ..self
            },
            _ => self,
        }
    }
}

fn check_triple(p: u32, n: usize, k: usize) -> Result<()> {
    if p < 2 {
        return parameter(format!("alphabet size p must be at least 2, got {p}"));
    }
    if k < 1 {
        return parameter("substitution parameter k must be at least 1");
    }
    if n < k {
        return parameter(format!(
            "word length n must be at least k, got n={n} < k={k}"
        ));
    }
    Ok(())
}

pub fn classify(p: u32, n: usize, k: usize) -> Result<CaseTag> {
    check_triple(p, n, k)?;
    let tag = if p >= 3 {
        CaseTag {
            case: Case::I,
            parity: None,
        }
    } else if n == k {
        CaseTag {
            case: Case::Ii,
            parity: None,
        }
    } else if !k.is_multiple_of(2) {
        CaseTag {
            case: Case::Iii,
            parity: None,
        }
    } else {
        CaseTag {
            case: Case::Iv,
            parity: Some(Parity::Even),
        }
    };
    Ok(tag)
}

/// Closed-form maximum length of a σ_k-Gray cycle over words of length at most `n`.
pub fn lambda_max(p: u32, n: usize, k: usize) -> Result<u64> {
    match classify(p, n, k)?.case {
        Case::I | Case::Iii => word_count(p, n),
        Case::Ii => Ok(2),
        Case::Iv => word_count(2, n - 1),
    }
}

/// h^{n,k} for p ≥ 3: a σ_k-Gray cycle over all of A^n.
///
/// Starts from h^{n0,1} with n0 = n - k + 1. Each level of length m is the
/// concatenation of p blocks; term `q·p^(m-1) + r` is θ^(q+r)(0) followed by
/// term `r` of the previous level.
pub fn build_hnk(p: u32, n: usize, k: usize) -> Result<GraySequence> {
    check_triple(p, n, k)?;
    if p < 3 {
        return parameter(format!(
            "h^{{n,k}} needs an alphabet of at least 3 characters, got {p}"
        ));
    }
    materializable_count(p, n)?;
    let alphabet = Alphabet::new(p)?;
    let mut current = p_ary_reflected(p, n - k + 1)?.into_terms();
    let p64 = u64::from(p);
    for level in 2..=k {
        let mut next = Vec::with_capacity(current.len() * p as usize);
        for q in 0..p64 {
            for (r, body) in current.iter().enumerate() {
                let prefix = ((q + r as u64) % p64) as u8;
                next.push(body.prepend(&[prefix]));
            }
        }
        debug_assert_eq!(next[0].len(), n - k + level);
        current = next;
    }
    Ok(GraySequence::from_parts(alphabet, n, k, current))
}

/// The coupled pair (γ^{n,k}, ρ^{n,k}) for binary words and odd k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OddPair {
    pub gamma: GraySequence,
    pub rho: GraySequence,
}

/// Which member of an [`OddPair`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum BaseVariant {
    #[default]
    Gamma,
    Rho,
}

// Two-character prefixes of the four blocks, and which sequence each block
// draws its bodies from. θ^r of a prefix is the prefix complemented when r is odd.
const GAMMA_PREFIXES: [[u8; 2]; 4] = [[0, 0], [0, 1], [1, 1], [1, 0]];
const RHO_PREFIXES: [[u8; 2]; 4] = [[1, 0], [1, 1], [0, 1], [0, 0]];
const BLOCK_BODIES: [BaseVariant; 4] = [
    BaseVariant::Gamma,
    BaseVariant::Rho,
    BaseVariant::Gamma,
    BaseVariant::Rho,
];

fn prefixes(variant: BaseVariant) -> &'static [[u8; 2]; 4] {
    match variant {
        BaseVariant::Gamma => &GAMMA_PREFIXES,
        BaseVariant::Rho => &RHO_PREFIXES,
    }
}

fn shifted_prefix(prefix: [u8; 2], r: u64) -> [u8; 2] {
    let flip = (r & 1) as u8;
    [prefix[0] ^ flip, prefix[1] ^ flip]
}

fn check_odd_pair(n: usize, k: usize) -> Result<()> {
    check_triple(2, n, k)?;
    if k.is_multiple_of(2) {
        return parameter(format!("the odd construction needs odd k, got {k}"));
    }
    if n <= k {
        return parameter(format!(
            "the odd construction needs n ≥ k + 1, got n={n}, k={k}"
        ));
    }
    Ok(())
}

fn expand_level(pair: &OddPair, variant: BaseVariant) -> Vec<Word> {
    let block = pair.gamma.len();
    let mut out = Vec::with_capacity(4 * block);
    for (q, &prefix) in prefixes(variant).iter().enumerate() {
        let bodies = match BLOCK_BODIES[q] {
            BaseVariant::Gamma => &pair.gamma,
            BaseVariant::Rho => &pair.rho,
        };
        for (r, body) in bodies.iter().enumerate() {
            out.push(body.prepend(&shifted_prefix(prefix, r as u64)));
        }
    }
    out
}

/// γ^{n,k} and ρ^{n,k} for odd k and n ≥ k + 1; both are σ_k-Gray cycles over {0,1}^n.
pub fn build_odd_pair(n: usize, k: usize) -> Result<OddPair> {
    build_odd_pair_levels(n, k, |_| {})
}

/// Same as [`build_odd_pair`], calling `inspect` on every level from
/// (γ^{n0,1}, ρ^{n0,1}) up to the final pair.
pub fn build_odd_pair_levels(
    n: usize,
    k: usize,
    mut inspect: impl FnMut(&OddPair),
) -> Result<OddPair> {
    check_odd_pair(n, k)?;
    materializable_count(2, n)?;
    let n0 = n - k + 1;
    let mut pair = OddPair {
        gamma: gamma_base(n0)?,
        rho: rho_base(n0)?,
    };
    inspect(&pair);
    let (mut len, mut kk) = (n0, 1);
    while kk < k {
        len += 2;
        kk += 2;
        let gamma = expand_level(&pair, BaseVariant::Gamma);
        let rho = expand_level(&pair, BaseVariant::Rho);
        pair = OddPair {
            gamma: GraySequence::from_parts(Alphabet::BINARY, len, kk, gamma),
            rho: GraySequence::from_parts(Alphabet::BINARY, len, kk, rho),
        };
        inspect(&pair);
    }
    Ok(pair)
}

fn check_even(n: usize, k: usize) -> Result<()> {
    check_triple(2, n, k)?;
    if !k.is_multiple_of(2) {
        return parameter(format!("the even construction needs even k, got {k}"));
    }
    if n <= k {
        return parameter(format!(
            "the even construction needs n ≥ k + 1, got n={n}, k={k}"
        ));
    }
    Ok(())
}

/// σ_k-Gray cycle over the binary words of length `n` in the given parity class (k even).
///
/// Term `i` is θ^i(c) followed by γ^{n-1,k-1}_[i], with c = 0 for the even
/// class and c = 1 for the odd one.
pub fn build_even(n: usize, k: usize, parity: Parity) -> Result<GraySequence> {
    check_even(n, k)?;
    let body = build_odd_pair(n - 1, k - 1)?.gamma;
    let lead = parity.as_char();
    let terms = body
        .iter()
        .enumerate()
        .map(|(i, w)| w.prepend(&[lead ^ (i & 1) as u8]))
        .collect();
    Ok(GraySequence::from_parts(Alphabet::BINARY, n, k, terms))
}

/// The two-term cycle (x, θ(x)) for binary words with n = k = |x|.
pub fn build_n_equals_k(x: &Word) -> Result<GraySequence> {
    if !x.alphabet().is_binary() {
        return parameter(format!(
            "the n = k construction needs a binary alphabet, got size {}",
            x.alphabet().size()
        ));
    }
    if x.is_empty() {
        return parameter("the seed word must be non-empty");
    }
    Ok(GraySequence::from_parts(
        Alphabet::BINARY,
        x.len(),
        x.len(),
        vec![x.clone(), x.theta(1)],
    ))
}

/// The degrees of freedom the constructions leave open.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct CycleOptions {
    /// Case iv parity class.
    pub parity: Parity,
    /// Case iii member of the pair.
    pub base_variant: BaseVariant,
    /// Case ii seed word; 0^n when absent.
    pub seed_word: Option<Word>,
}

impl CycleOptions {
    fn check(&self, tag: CaseTag, n: usize) -> Result<()> {
        if let Some(x) = &self.seed_word {
            if tag.case != Case::Ii {
                return parameter(format!(
                    "a seed word only applies to case ii, not case {}",
                    tag.case
                ));
            }
            if !x.alphabet().is_binary() || x.len() != n {
                return Err(Error::Dimension(format!(
                    "seed word {x} must be a binary word of length {n}"
                )));
            }
        }
        Ok(())
    }

    fn seed(&self, n: usize) -> Word {
        self.seed_word
            .clone()
            .unwrap_or_else(|| Word::zeros(Alphabet::BINARY, n))
    }
}

/// A σ_k-Gray cycle of maximum length for `(p, n, k)`, with the default choices
/// except for the optional case iv parity class.
pub fn max_gray_cycle(p: u32, n: usize, k: usize, parity: Option<Parity>) -> Result<GraySequence> {
    let options = CycleOptions {
        parity: parity.unwrap_or_default(),
        ..CycleOptions::default()
    };
    max_gray_cycle_with(p, n, k, &options)
}

pub fn max_gray_cycle_with(
    p: u32,
    n: usize,
    k: usize,
    options: &CycleOptions,
) -> Result<GraySequence> {
    let tag = classify(p, n, k)?;
    options.check(tag, n)?;
    match tag.case {
        Case::I => build_hnk(p, n, k),
        Case::Ii => build_n_equals_k(&options.seed(n)),
        Case::Iii => {
            let pair = build_odd_pair(n, k)?;
            Ok(match options.base_variant {
                BaseVariant::Gamma => pair.gamma,
                BaseVariant::Rho => pair.rho,
            })
        }
        Case::Iv => build_even(n, k, options.parity),
    }
}

#[derive(Debug, Clone)]
enum Plan {
    Hnk { alphabet: Alphabet },
    Odd { variant: BaseVariant },
    Even { lead: u8 },
    Pair { seed: Word },
}

/// Random access to the terms of [`max_gray_cycle_with`] without materializing them.
///
/// Only the 64-bit count guard applies, so this also reaches instances beyond
/// the materialization limit.
#[derive(Debug, Clone)]
pub struct CycleIndexer {
    n: usize,
    k: usize,
    tag: CaseTag,
    len: u64,
    plan: Plan,
}

impl CycleIndexer {
    pub fn new(p: u32, n: usize, k: usize, options: &CycleOptions) -> Result<Self> {
        let mut tag = classify(p, n, k)?;
        options.check(tag, n)?;
        let plan = match tag.case {
            Case::I => Plan::Hnk {
                alphabet: Alphabet::new(p)?,
            },
            Case::Ii => Plan::Pair {
                seed: options.seed(n),
            },
            Case::Iii => Plan::Odd {
                variant: options.base_variant,
            },
            Case::Iv => {
                tag = tag.with_parity(options.parity);
                Plan::Even {
                    lead: options.parity.as_char(),
                }
            }
        };
        let len = lambda_max(p, n, k)?;
        Ok(CycleIndexer {
            n,
            k,
            tag,
            len,
            plan,
        })
    }

    pub fn case_tag(&self) -> CaseTag {
        self.tag
    }

    pub fn len(&self) -> u64 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn term_at(&self, i: u64) -> Option<Word> {
        if i >= self.len {
            return None;
        }
        let word = match &self.plan {
            Plan::Hnk { alphabet } => hnk_term(*alphabet, self.n, self.k, i),
            Plan::Odd { variant } => odd_term(*variant, self.n, self.k, i),
            Plan::Even { lead } => odd_term(BaseVariant::Gamma, self.n - 1, self.k - 1, i)
                .prepend(&[lead ^ (i & 1) as u8]),
            Plan::Pair { seed } => {
                if i == 0 {
                    seed.clone()
                } else {
                    seed.theta(1)
                }
            }
        };
        Some(word)
    }

    pub fn terms(&self) -> impl Iterator<Item = Word> + '_ {
        (0..self.len).map(move |i| self.term_at(i).expect("index below len"))
    }
}

fn hnk_term(alphabet: Alphabet, n: usize, k: usize, i: u64) -> Word {
    let p = u64::from(alphabet.size());
    let mut chars = Vec::with_capacity(n);
    let (mut len, mut idx) = (n, i);
    for _ in 1..k {
        let block = p.pow((len - 1) as u32);
        let (q, r) = (idx / block, idx % block);
        chars.push(((q + r) % p) as u8);
        idx = r;
        len -= 1;
    }
    chars.extend_from_slice(reflected_term_at(alphabet, len, idx).chars());
    Word::from_raw(alphabet, chars)
}

fn odd_term(variant: BaseVariant, n: usize, k: usize, i: u64) -> Word {
    let mut chars = Vec::with_capacity(n);
    let (mut len, mut kk, mut idx, mut which) = (n, k, i, variant);
    while kk > 1 {
        let shift = len - 2;
        let (q, r) = ((idx >> shift) as usize, idx & ((1u64 << shift) - 1));
        chars.extend_from_slice(&shifted_prefix(prefixes(which)[q], r));
        which = BLOCK_BODIES[q];
        idx = r;
        len -= 2;
        kk -= 2;
    }
    let source = match which {
        BaseVariant::Gamma => gamma_base_source(len, idx),
        BaseVariant::Rho => rho_base_source(len, idx),
    };
    chars.extend_from_slice(binary_reflected_term(len, source).chars());
    Word::from_raw(Alphabet::BINARY, chars)
}
