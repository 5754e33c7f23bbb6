//! The reflected Gray codes used as seeds by every construction.
//!
//! Both codes are produced from a closed formula rather than the greedy
//! "largest position that avoids a repeat" rule: the `i`-th word of the
//! `p`-ary reflected code has character `(a_j - a_{j-1}) mod p` at position
//! `j`, where `a_1 ... a_n` are the base-`p` digits of `i` (most significant
//! first) and `a_0 = 0`. The binary code uses the usual `i ^ (i >> 1)`.

use crate::error::{parameter, Result};
use crate::sequence::{materializable_count, word_count, GraySequence};
use crate::word::{Alphabet, Word};

fn check_length(n: usize) -> Result<()> {
    if n == 0 {
        return parameter("word length n must be at least 1");
    }
    Ok(())
}

/// The `i`-th term of the binary reflected Gray code of length `n`.
pub fn binary_reflected_term(n: usize, i: u64) -> Word {
    let code = i ^ (i >> 1);
    let chars = (0..n).rev().map(|bit| ((code >> bit) & 1) as u8).collect();
    Word::from_raw(Alphabet::BINARY, chars)
}

/// The `i`-th term of the `p`-ary reflected Gray code of length `n`.
pub fn reflected_term_at(alphabet: Alphabet, n: usize, i: u64) -> Word {
    let p = u64::from(alphabet.size());
    let mut digits = vec![0u8; n];
    let mut rest = i;
    for d in digits.iter_mut().rev() {
        *d = (rest % p) as u8;
        rest /= p;
    }
    let mut prev = 0u8;
    let chars = digits
        .into_iter()
        .map(|d| {
            let c = ((u64::from(d) + p - u64::from(prev)) % p) as u8;
            prev = d;
            c
        })
        .collect();
    Word::from_raw(alphabet, chars)
}

/// g^{n,1}: the 2^n-term binary reflected Gray code.
pub fn binary_reflected(n: usize) -> Result<GraySequence> {
    check_length(n)?;
    let len = materializable_count(2, n)?;
    let terms = (0..len as u64)
        .map(|i| binary_reflected_term(n, i))
        .collect();
    Ok(GraySequence::from_parts(Alphabet::BINARY, n, 1, terms))
}

/// h^{n,1}: the p^n-term p-ary reflected Gray code starting at 0^n.
pub fn p_ary_reflected(p: u32, n: usize) -> Result<GraySequence> {
    let alphabet = Alphabet::new(p)?;
    check_length(n)?;
    let len = materializable_count(p, n)?;
    let terms = (0..len as u64)
        .map(|i| reflected_term_at(alphabet, n, i))
        .collect();
    Ok(GraySequence::from_parts(alphabet, n, 1, terms))
}

/// Index into g^{n0,1} of the `i`-th term of the reversal γ^{n0,1}.
pub(crate) fn gamma_base_source(n0: usize, i: u64) -> u64 {
    if i == 0 {
        0
    } else {
        (1u64 << n0) - i
    }
}

/// Index into g^{n0,1} of the `i`-th term of the shift ρ^{n0,1}.
pub(crate) fn rho_base_source(n0: usize, i: u64) -> u64 {
    if i == 0 {
        (1u64 << n0) - 1
    } else {
        i - 1
    }
}

fn reindexed(n0: usize, source: fn(usize, u64) -> u64) -> Result<GraySequence> {
    let g = binary_reflected(n0)?;
    let terms = (0..g.len() as u64)
        .map(|i| g[source(n0, i) as usize].clone())
        .collect();
    Ok(GraySequence::from_parts(Alphabet::BINARY, n0, 1, terms))
}

/// γ^{n0,1}: g^{n0,1} with indices `1..` reversed, so it runs 0^{n0} → ... → 0^{n0-1}1.
pub fn gamma_base(n0: usize) -> Result<GraySequence> {
    check_length(n0)?;
    reindexed(n0, gamma_base_source)
}

/// ρ^{n0,1}: g^{n0,1} shifted by one, so it runs 10^{n0-1} → 0^{n0} → ... → 10^{n0-2}1.
pub fn rho_base(n0: usize) -> Result<GraySequence> {
    check_length(n0)?;
    reindexed(n0, rho_base_source)
}

/// Number of terms of h^{n,1}, checked against the 64-bit guard only.
pub fn reflected_len(p: u32, n: usize) -> Result<u64> {
    check_length(n)?;
    word_count(p, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::word::{hamming_distance, theta_char};
    use std::collections::HashSet;

    fn strings(seq: &GraySequence) -> Vec<String> {
        seq.to_strings()
    }

    /// Reference construction straight from the defining rule: from the
    /// previous word, replace the character `c` at the largest position `j`
    /// by θ(c) such that the result has not been seen yet.
    fn greedy_reflected(p: u32, n: usize) -> Vec<Word> {
        let a = Alphabet::new(p).unwrap();
        let total = (p as usize).pow(n as u32);
        let mut seen = HashSet::new();
        let mut out = vec![Word::zeros(a, n)];
        seen.insert(out[0].clone());
        while out.len() < total {
            let prev = out.last().unwrap();
            let next = (0..n)
                .rev()
                .map(|j| {
                    let mut chars = prev.chars().to_vec();
                    chars[j] = theta_char(u32::from(chars[j]), a).unwrap() as u8;
                    Word::new(a, chars).unwrap()
                })
                .find(|w| !seen.contains(w))
                .expect("greedy rule got stuck");
            seen.insert(next.clone());
            out.push(next);
        }
        out
    }

    #[test]
    fn binary_examples() {
        assert_eq!(
            strings(&binary_reflected(2).unwrap()),
            ["00", "01", "11", "10"]
        );
        assert_eq!(
            strings(&binary_reflected(3).unwrap()),
            ["000", "001", "011", "010", "110", "111", "101", "100"]
        );
        assert_eq!(strings(&binary_reflected(1).unwrap()), ["0", "1"]);
    }

    #[test]
    fn ternary_examples() {
        let h = strings(&p_ary_reflected(3, 3).unwrap());
        assert_eq!(
            h[..9],
            ["000", "001", "002", "012", "010", "011", "021", "022", "020"]
        );
        assert_eq!(
            h[9..18],
            ["120", "121", "122", "102", "100", "101", "111", "112", "110"]
        );
        assert_eq!(
            h[18..],
            ["210", "211", "212", "222", "220", "221", "201", "202", "200"]
        );
        assert_eq!(strings(&p_ary_reflected(3, 1).unwrap()), ["0", "1", "2"]);
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(
            strings(&gamma_base(3).unwrap()),
            ["000", "100", "101", "111", "110", "010", "011", "001"]
        );
        assert_eq!(strings(&gamma_base(1).unwrap()), ["0", "1"]);
        // reversal of g^{2,1} = (00, 01, 11, 10) past index 0
        let g = ["00", "01", "11", "10"];
        let expected: Vec<_> = (0..4).map(|i| g[if i == 0 { 0 } else { 4 - i }]).collect();
        assert_eq!(strings(&gamma_base(2).unwrap()), expected);
        assert_eq!(expected, ["00", "10", "11", "01"]);
    }

    #[test]
    fn rho_examples() {
        assert_eq!(
            strings(&rho_base(3).unwrap()),
            ["100", "000", "001", "011", "010", "110", "111", "101"]
        );
        assert_eq!(strings(&rho_base(1).unwrap()), ["1", "0"]);
        let g = ["00", "01", "11", "10"];
        let expected: Vec<_> = (0..4).map(|i| g[if i == 0 { 3 } else { i - 1 }]).collect();
        assert_eq!(strings(&rho_base(2).unwrap()), expected);
        assert_eq!(expected, ["10", "00", "01", "11"]);
    }

    #[test]
    fn parameter_errors() {
        assert!(matches!(binary_reflected(0), Err(Error::Parameter(_))));
        assert!(matches!(p_ary_reflected(1, 3), Err(Error::Parameter(_))));
        assert!(matches!(p_ary_reflected(3, 0), Err(Error::Parameter(_))));
        assert!(matches!(binary_reflected(40), Err(Error::Capacity(_))));
        assert!(matches!(reflected_len(2, 64), Err(Error::Capacity(_))));
        assert_eq!(reflected_len(2, 63).unwrap(), 1 << 63);
    }

    #[test]
    fn endpoint_identities() {
        for n in 1..=12usize {
            let g = binary_reflected(n).unwrap();
            let last = g.len() - 1;
            assert_eq!(g[0].to_string(), "0".repeat(n));
            assert_eq!(g[1].to_string(), format!("{}1", "0".repeat(n - 1)));
            assert_eq!(g[last].to_string(), format!("1{}", "0".repeat(n - 1)));
            if n >= 2 {
                assert_eq!(g[last - 1].to_string(), format!("1{}1", "0".repeat(n - 2)));
            }
            let (gamma, rho) = (gamma_base(n).unwrap(), rho_base(n).unwrap());
            assert_eq!(gamma[0], g[0]);
            assert_eq!(gamma[last], g[1]);
            assert_eq!(rho[0], g[last]);
            if n >= 2 {
                assert_eq!(rho[last].to_string(), format!("1{}1", "0".repeat(n - 2)));
                assert_eq!(hamming_distance(&gamma[0], &rho[last]).unwrap(), 2);
                assert_eq!(hamming_distance(&rho[0], &gamma[last]).unwrap(), 2);
            }
        }
    }

    #[test]
    fn digit_formula_matches_greedy_rule() {
        for p in 2..=4u32 {
            let mut n = 1;
            while (p as usize).pow(n as u32) <= 4096 {
                let fast = p_ary_reflected(p, n).unwrap().into_terms();
                assert_eq!(fast, greedy_reflected(p, n), "p={p} n={n}");
                n += 1;
            }
        }
    }

    #[test]
    fn binary_agrees_with_p_ary() {
        for n in 1..=12 {
            assert_eq!(binary_reflected(n).unwrap(), p_ary_reflected(2, n).unwrap());
        }
    }

    #[test]
    fn steps_apply_theta_at_one_position() {
        for (p, n) in [(2u32, 6usize), (3, 5), (4, 4), (5, 3)] {
            let h = p_ary_reflected(p, n).unwrap();
            let a = h.alphabet();
            let distinct: HashSet<_> = h.iter().collect();
            assert_eq!(distinct.len(), h.len());
            for i in 0..h.len() {
                let (u, v) = (&h[i], &h[(i + 1) % h.len()]);
                let changed: Vec<_> = (0..n).filter(|&j| u.chars()[j] != v.chars()[j]).collect();
                assert_eq!(changed.len(), 1, "p={p} n={n} step {i}");
                let j = changed[0];
                assert_eq!(
                    u32::from(v.chars()[j]),
                    theta_char(u32::from(u.chars()[j]), a).unwrap()
                );
            }
        }
    }
}
