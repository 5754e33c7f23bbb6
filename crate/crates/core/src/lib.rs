//! Maximum-length Gray cycles for the k-character substitution σ_k.
//!
//! Two words of the same length are σ_k-related when they differ in exactly
//! `k` positions. A σ_k-Gray cycle over a set of words lists every word once
//! so that consecutive words, including the last and the first, are
//! σ_k-related. This crate builds cycles of maximum length for every
//! alphabet size `p ≥ 2` and `n ≥ k ≥ 1`, and checks them.
//!
//! ```
//! use sigma_gray::{max_gray_cycle, verifier::verify_gray_cycle, lambda_max};
//!
//! let cycle = max_gray_cycle(3, 3, 2, None).unwrap();
//! assert_eq!(cycle.len() as u64, lambda_max(3, 3, 2).unwrap());
//! assert_eq!(cycle[1].to_string(), "101");
//! assert!(verify_gray_cycle(&cycle, None).passed());
//! ```

pub mod constructions;
pub mod error;
pub mod reflected;
pub mod sequence;
pub mod verifier;
pub mod word;

pub use constructions::{
    build_even, build_hnk, build_n_equals_k, build_odd_pair, build_odd_pair_levels, classify,
    lambda_max, max_gray_cycle, max_gray_cycle_with, BaseVariant, Case, CaseTag, CycleIndexer,
    CycleOptions, OddPair,
};
pub use error::{Error, Result};
pub use reflected::{binary_reflected, gamma_base, p_ary_reflected, reflected_term_at, rho_base};
pub use sequence::{word_count, GraySequence, MAX_MATERIALIZED_TERMS};
pub use word::{
    hamming_distance, ones_count_parity, sigma_k_related, theta_char, theta_power_char, theta_word,
    xor_add, Alphabet, Parity, Word,
};
