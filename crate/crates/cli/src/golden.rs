//! Reference sequences from the worked examples, embedded at build time.

use std::io::Write;

use sigma_gray::{
    binary_reflected, build_hnk, build_odd_pair, gamma_base, p_ary_reflected, rho_base,
    GraySequence,
};

use crate::{EXIT_FAILURE, EXIT_OK};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Source {
    BinaryReflected { n: usize },
    PAryReflected { p: u32, n: usize },
    Hnk { p: u32, n: usize, k: usize },
    GammaBase { n: usize },
    RhoBase { n: usize },
    OddGamma { n: usize, k: usize },
}

impl Source {
    pub fn generate(self) -> sigma_gray::Result<GraySequence> {
        match self {
            Source::BinaryReflected { n } => binary_reflected(n),
            Source::PAryReflected { p, n } => p_ary_reflected(p, n),
            Source::Hnk { p, n, k } => build_hnk(p, n, k),
            Source::GammaBase { n } => gamma_base(n),
            Source::RhoBase { n } => rho_base(n),
            Source::OddGamma { n, k } => build_odd_pair(n, k).map(|pair| pair.gamma),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Golden {
    pub name: &'static str,
    pub source: Source,
    pub expected: Vec<String>,
}

fn golden(name: &'static str, source: Source, text: &str) -> Golden {
    Golden {
        name,
        source,
        expected: text.lines().map(str::to_string).collect(),
    }
}

pub fn embedded() -> Vec<Golden> {
    vec![
        golden(
            "g^{2,1}",
            Source::BinaryReflected { n: 2 },
            include_str!("../golden/g2_1.txt"),
        ),
        golden(
            "g^{3,1}",
            Source::BinaryReflected { n: 3 },
            include_str!("../golden/g3_1.txt"),
        ),
        golden(
            "h^{3,1} (p=3)",
            Source::PAryReflected { p: 3, n: 3 },
            include_str!("../golden/h3_1_p3.txt"),
        ),
        golden(
            "h^{3,2} (p=3)",
            Source::Hnk { p: 3, n: 3, k: 2 },
            include_str!("../golden/h3_2_p3.txt"),
        ),
        golden(
            "gamma^{3,1}",
            Source::GammaBase { n: 3 },
            include_str!("../golden/gamma3_1.txt"),
        ),
        golden(
            "rho^{3,1}",
            Source::RhoBase { n: 3 },
            include_str!("../golden/rho3_1.txt"),
        ),
        golden(
            "gamma^{5,3}",
            Source::OddGamma { n: 5, k: 3 },
            include_str!("../golden/gamma5_3.txt"),
        ),
    ]
}

/// First index where `got` and `expected` disagree, counting a length difference.
pub fn first_difference(got: &[String], expected: &[String]) -> Option<usize> {
    got.iter()
        .zip(expected)
        .position(|(a, b)| a != b)
        .or_else(|| (got.len() != expected.len()).then(|| got.len().min(expected.len())))
}

/// Regenerates every example and reports one line each. Exit 0 iff all match.
pub fn run_examples(goldens: &[Golden], out: &mut dyn Write) -> i32 {
    let mut all_ok = true;
    for g in goldens {
        let line = match g.source.generate() {
            Ok(seq) => {
                let got = seq.to_strings();
                match first_difference(&got, &g.expected) {
                    None => format!("{}: ok ({} terms)", g.name, got.len()),
                    Some(i) => {
                        all_ok = false;
                        format!(
                            "{}: MISMATCH at index {i}: expected {}, got {}",
                            g.name,
                            g.expected.get(i).map_or("<end>", String::as_str),
                            got.get(i).map_or("<end>", String::as_str),
                        )
                    }
                }
            }
            Err(e) => {
                all_ok = false;
                format!("{}: ERROR {e}", g.name)
            }
        };
        let _ = writeln!(out, "{line}");
    }
    if all_ok {
        EXIT_OK
    } else {
        EXIT_FAILURE
    }
}
