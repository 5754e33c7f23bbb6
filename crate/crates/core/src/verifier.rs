//! Independent checks of the Gray-cycle conditions and of maximality.
//!
//! * G1: every word of the ground set occurs in the sequence.
//! * G2: consecutive terms are related, including last → first.
//! * G3: terms are pairwise distinct.
//!
//! [`oracle_lambda`] computes the maximum cycle length by exhaustive
//! longest-simple-cycle search on the σ_k graph, for tiny instances only.

use std::collections::{HashMap, HashSet};
use std::fmt;

use crate::constructions::{classify, Case, CycleOptions};
use crate::error::{parameter, Error, Result};
use crate::sequence::{word_count, GraySequence};
use crate::word::{hamming_distance, ones_count_parity, Alphabet, Parity, Word};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Condition {
    G1,
    G2,
    G3,
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Condition::G1 => "G1",
            Condition::G2 => "G2",
            Condition::G3 => "G3",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// G1: term `index` is not in the ground set.
    Unexpected { index: usize },
    /// G1: a ground-set word never occurs.
    Missing { word: Word },
    /// G2: term `index` is not related to term `index - 1` (to the last term when `index` is 0).
    Step { index: usize },
    /// G3: terms `first` and `second` are equal.
    Duplicate { first: usize, second: usize },
}

impl Violation {
    pub fn condition(&self) -> Condition {
        match self {
            Violation::Unexpected { .. } | Violation::Missing { .. } => Condition::G1,
            Violation::Step { .. } => Condition::G2,
            Violation::Duplicate { .. } => Condition::G3,
        }
    }
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Unexpected { index } => {
                write!(f, "G1: term [{index}] is outside the ground set")
            }
            Violation::Missing { word } => write!(f, "G1: ground-set word {word} never occurs"),
            Violation::Step { index } => write!(f, "G2: step into term [{index}] is not related"),
            Violation::Duplicate { first, second } => {
                write!(f, "G3: terms [{first}] and [{second}] are equal")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub g1_pass: bool,
    pub g2_pass: bool,
    pub g3_pass: bool,
    pub ground_set_size: usize,
    /// First violation of each failed condition, in the order G3, G2, G1.
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.g1_pass && self.g2_pass && self.g3_pass
    }

    pub fn first_violation(&self) -> Option<&Violation> {
        self.violations.first()
    }
}

/// Checks G1–G3 for σ_k, where k is the sequence's own parameter.
///
/// Without a ground set, G1 is checked against the sequence's own terms and
/// is therefore vacuous.
pub fn verify_gray_cycle(
    seq: &GraySequence,
    ground_set: Option<&HashSet<Word>>,
) -> VerificationReport {
    verify_terms(seq.terms(), seq.k(), ground_set)
}

/// Like [`verify_gray_cycle`] on a raw list, which may have mixed lengths.
pub fn verify_terms(
    terms: &[Word],
    k: usize,
    ground_set: Option<&HashSet<Word>>,
) -> VerificationReport {
    verify_by(terms, ground_set, |u, v| {
        if u.len() != v.len() || u.alphabet() != v.alphabet() {
            return Err(format!("{u} and {v} have different lengths or alphabets"));
        }
        if k == 0 || k > u.len() {
            return Err(format!("k = {k} is outside [1, {}]", u.len()));
        }
        let d = hamming_distance(u, v).map_err(|e| e.to_string())?;
        if d == k {
            Ok(())
        } else {
            Err(format!("{u} -> {v} at Hamming distance {d}, expected {k}"))
        }
    })
}

/// G1–G3 under an arbitrary relation. `related(u, v)` returns `Err(reason)`
/// when `v` is not an image of `u`.
pub fn verify_by(
    terms: &[Word],
    ground_set: Option<&HashSet<Word>>,
    related: impl Fn(&Word, &Word) -> std::result::Result<(), String>,
) -> VerificationReport {
    let mut violations = Vec::new();
    let mut notes = Vec::new();

    // G3
    let mut seen: HashMap<&Word, usize> = HashMap::with_capacity(terms.len());
    let mut duplicate = None;
    for (j, w) in terms.iter().enumerate() {
        if let Some(&i) = seen.get(w) {
            duplicate.get_or_insert(Violation::Duplicate {
                first: i,
                second: j,
            });
        } else {
            seen.insert(w, j);
        }
    }
    let g3_pass = seen.len() == terms.len();
    violations.extend(duplicate);

    // G2
    let mut g2_pass = !terms.is_empty();
    if terms.is_empty() {
        notes.push("empty sequence".to_string());
    }
    let steps = (1..terms.len()).chain((!terms.is_empty()).then_some(0));
    for j in steps {
        let i = if j == 0 { terms.len() - 1 } else { j - 1 };
        if let Err(reason) = related(&terms[i], &terms[j]) {
            if g2_pass {
                violations.push(Violation::Step { index: j });
                notes.push(format!("step [{i}] -> [{j}]: {reason}"));
            }
            g2_pass = false;
        }
    }

    // G1
    let ground_set_size;
    let mut g1_pass = true;
    match ground_set {
        None => {
            ground_set_size = seen.len();
            notes.push("no ground set given; G1 is vacuous".to_string());
        }
        Some(ground) => {
            ground_set_size = ground.len();
            if let Some(index) = terms.iter().position(|w| !ground.contains(w)) {
                g1_pass = false;
                violations.push(Violation::Unexpected { index });
            } else if let Some(word) = ground.iter().filter(|w| !seen.contains_key(w)).min() {
                g1_pass = false;
                violations.push(Violation::Missing { word: word.clone() });
            }
        }
    }

    VerificationReport {
        g1_pass,
        g2_pass,
        g3_pass,
        ground_set_size,
        violations,
        notes,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ParityClass {
    Even,
    Odd,
    Mixed,
}

impl From<Parity> for ParityClass {
    fn from(p: Parity) -> Self {
        match p {
            Parity::Even => ParityClass::Even,
            Parity::Odd => ParityClass::Odd,
        }
    }
}

/// The common ones-count parity of all terms, or `Mixed`.
pub fn check_parity_class(seq: &GraySequence) -> Result<ParityClass> {
    parity_class_of(seq.terms())
}

pub fn parity_class_of(terms: &[Word]) -> Result<ParityClass> {
    let mut class = None;
    for w in terms {
        let p = ParityClass::from(ones_count_parity(w)?);
        match class {
            None => class = Some(p),
            Some(c) if c != p => return Ok(ParityClass::Mixed),
            _ => {}
        }
    }
    class.ok_or_else(|| Error::Parameter("parity class of an empty sequence".into()))
}

/// Every word of length `n` over `alphabet`, in lexicographic order.
pub fn all_words(alphabet: Alphabet, n: usize) -> Result<Vec<Word>> {
    let count = word_count(alphabet.size(), n)?;
    if count > crate::sequence::MAX_MATERIALIZED_TERMS {
        return Err(Error::Capacity(format!(
            "{count} words exceed the materialization limit"
        )));
    }
    Ok((0..count).map(|i| decode(alphabet, n, i)).collect())
}

/// Binary words of length `n` whose ones count has the given parity.
pub fn parity_class_words(n: usize, parity: Parity) -> Result<Vec<Word>> {
    Ok(all_words(Alphabet::BINARY, n)?
        .into_iter()
        .filter(|w| w.parity().ok() == Some(parity))
        .collect())
}

/// The set a maximum-length cycle for `(p, n, k)` must cover: A^n in cases
/// i and iii, the requested parity class in case iv, {x, θ(x)} in case ii.
pub fn maximal_ground_set(
    p: u32,
    n: usize,
    k: usize,
    options: &CycleOptions,
) -> Result<HashSet<Word>> {
    let words = match classify(p, n, k)?.case {
        Case::I | Case::Iii => all_words(Alphabet::new(p)?, n)?,
        Case::Iv => parity_class_words(n, options.parity)?,
        Case::Ii => {
            let x = options
                .seed_word
                .clone()
                .unwrap_or_else(|| Word::zeros(Alphabet::BINARY, n));
            vec![x.theta(1), x]
        }
    };
    Ok(words.into_iter().collect())
}

fn decode(alphabet: Alphabet, n: usize, mut index: u64) -> Word {
    let p = u64::from(alphabet.size());
    let mut chars = vec![0u8; n];
    for c in chars.iter_mut().rev() {
        *c = (index % p) as u8;
        index /= p;
    }
    Word::new(alphabet, chars).expect("digits are below p")
}

/// Number of σ_k-neighbours of any word: C(n, k)·(p − 1)^k.
pub fn relation_graph_degree(p: u32, n: usize, k: usize) -> Result<u64> {
    classify(p, n, k)?;
    let k_small = k.min(n - k) as u128;
    let mut binom: u128 = 1;
    for i in 0..k_small {
        binom = binom * (n as u128 - i) / (i + 1);
        if binom > u128::from(u64::MAX) {
            return Err(Error::Capacity(format!(
                "C({n}, {k}) does not fit in 64 bits"
            )));
        }
    }
    let exp = u32::try_from(k).map_err(|_| Error::Capacity(format!("k = {k} too large")))?;
    u64::from(p - 1)
        .checked_pow(exp)
        .and_then(|f| (binom as u64).checked_mul(f))
        .ok_or_else(|| {
            Error::Capacity(format!(
                "degree for ({p}, {n}, {k}) does not fit in 64 bits"
            ))
        })
}

/// Default size guard for [`oracle_lambda`]: p^n ≤ 32.
pub const ORACLE_MAX_WORDS: u64 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum OracleOutcome {
    /// The exact maximum, a cycle attaining it, and the maximum found for
    /// each word length `m` in `k..=n`.
    Exact {
        length: usize,
        witness: GraySequence,
        per_length: Vec<(usize, usize)>,
        nodes: u64,
    },
    /// The node budget ran out; `best_so_far` is only a lower bound.
    Inconclusive { best_so_far: usize, nodes: u64 },
}

impl OracleOutcome {
    pub fn length(&self) -> Option<usize> {
        match self {
            OracleOutcome::Exact { length, .. } => Some(*length),
            OracleOutcome::Inconclusive { .. } => None,
        }
    }
}

/// Exact λ for σ_k over words of length at most `n`, by exhaustive search.
///
/// `budget` caps the number of search nodes over the whole run.
pub fn oracle_lambda(p: u32, n: usize, k: usize, budget: u64) -> Result<OracleOutcome> {
    oracle_lambda_guarded(p, n, k, budget, ORACLE_MAX_WORDS)
}

pub fn oracle_lambda_guarded(
    p: u32,
    n: usize,
    k: usize,
    budget: u64,
    max_words: u64,
) -> Result<OracleOutcome> {
    classify(p, n, k)?;
    let count = word_count(p, n)?;
    if count > max_words {
        return Err(Error::Capacity(format!(
            "oracle instance has {count} words, above the guard of {max_words}"
        )));
    }
    let alphabet = Alphabet::new(p)?;
    let mut search = CycleSearch { budget, nodes: 0 };
    let mut per_length = Vec::new();
    let mut overall: Option<(usize, Vec<Word>)> = None;
    for m in k..=n {
        let words = all_words(alphabet, m)?;
        let graph = RelationGraph::new(&words, k);
        let classes = if p == 2 && k.is_multiple_of(2) {
            let (even, odd): (Vec<usize>, Vec<usize>) =
                (0..words.len()).partition(|&v| words[v].parity().ok() == Some(Parity::Even));
            vec![even, odd]
        } else {
            vec![(0..words.len()).collect()]
        };
        let mut best: Vec<usize> = Vec::new();
        for class in &classes {
            match search.longest_cycle(&graph, class, best.len()) {
                Ok(Some(cycle)) => best = cycle,
                Ok(None) => {}
                Err(Exhausted) => {
                    let so_far = overall.as_ref().map_or(0, |(l, _)| *l).max(best.len());
                    return Ok(OracleOutcome::Inconclusive {
                        best_so_far: so_far,
                        nodes: search.nodes,
                    });
                }
            }
        }
        per_length.push((m, best.len()));
        if overall.as_ref().is_none_or(|(l, _)| best.len() > *l) {
            overall = Some((best.len(), best.iter().map(|&v| words[v].clone()).collect()));
        }
    }
    match overall {
        Some((length, terms)) if length > 0 => Ok(OracleOutcome::Exact {
            length,
            witness: GraySequence::new(k, terms)?,
            per_length,
            nodes: search.nodes,
        }),
        _ => parameter(format!("σ_{k} has no edges on words of length {n}")),
    }
}

struct RelationGraph {
    adj: Vec<Vec<usize>>,
    matrix: Vec<Vec<bool>>,
}

impl RelationGraph {
    fn new(words: &[Word], k: usize) -> Self {
        let n = words.len();
        let mut matrix = vec![vec![false; n]; n];
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in 0..n {
                if hamming_distance(&words[u], &words[v]).ok() == Some(k) {
                    matrix[u][v] = true;
                    adj[u].push(v);
                }
            }
        }
        RelationGraph { adj, matrix }
    }
}

struct Exhausted;

struct CycleSearch {
    budget: u64,
    nodes: u64,
}

struct Dfs<'a> {
    graph: &'a RelationGraph,
    in_class: Vec<bool>,
    visited: Vec<bool>,
    path: Vec<usize>,
    best: Vec<usize>,
    floor: usize,
    target: usize,
}

impl CycleSearch {
    /// Longest cycle inside `class` that is longer than `floor`, if any.
    ///
    /// Each cycle is found from its smallest vertex only, and the search stops
    /// as soon as a cycle through the whole class turns up.
    fn longest_cycle(
        &mut self,
        graph: &RelationGraph,
        class: &[usize],
        floor: usize,
    ) -> std::result::Result<Option<Vec<usize>>, Exhausted> {
        let size = graph.adj.len();
        let mut sorted = class.to_vec();
        sorted.sort_unstable();
        let mut in_class = vec![false; size];
        for &v in &sorted {
            in_class[v] = true;
        }
        let mut dfs = Dfs {
            graph,
            in_class,
            visited: vec![false; size],
            path: Vec::with_capacity(sorted.len()),
            best: Vec::new(),
            floor,
            target: sorted.len(),
        };
        for (pos, &start) in sorted.iter().enumerate() {
            let available = sorted.len() - pos;
            if available <= dfs.floor.max(dfs.best.len()) {
                break;
            }
            dfs.visited[start] = true;
            dfs.path.push(start);
            let done = self.extend(&mut dfs, start, available - 1)?;
            dfs.path.pop();
            dfs.visited[start] = false;
            // vertices below the next start are never revisited
            dfs.in_class[start] = false;
            if done {
                break;
            }
        }
        Ok((!dfs.best.is_empty()).then_some(dfs.best))
    }

    fn extend(
        &mut self,
        dfs: &mut Dfs<'_>,
        start: usize,
        remaining: usize,
    ) -> std::result::Result<bool, Exhausted> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Exhausted);
        }
        let last = *dfs.path.last().expect("path starts at the start vertex");
        let len = dfs.path.len();
        if len >= 2 && dfs.graph.matrix[last][start] && len > dfs.floor.max(dfs.best.len()) {
            dfs.best = dfs.path.clone();
            if len == dfs.target {
                return Ok(true);
            }
        }
        if len + remaining <= dfs.floor.max(dfs.best.len()) {
            return Ok(false);
        }
        for i in 0..dfs.graph.adj[last].len() {
            let next = dfs.graph.adj[last][i];
            if next <= start || !dfs.in_class[next] || dfs.visited[next] {
                continue;
            }
            dfs.visited[next] = true;
            dfs.path.push(next);
            let done = self.extend(dfs, start, remaining - 1)?;
            dfs.path.pop();
            dfs.visited[next] = false;
            if done {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
