//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

use std::collections::HashSet;
use std::io::Cursor;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use sigma_gray::verifier::{maximal_ground_set, oracle_lambda, verify_gray_cycle, OracleOutcome};
use sigma_gray::{
    binary_reflected, build_even, build_odd_pair_levels, hamming_distance, lambda_max,
    max_gray_cycle_with, p_ary_reflected, theta_char, word_count, Alphabet, Case, CycleOptions,
    Parity, Word,
};
use sigma_gray_cli::golden::{embedded, run_examples};
use sigma_gray_cli::{delta, run};

type Check = Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// (p, n, k) with p ∈ {2, 3, 4}, 1 ≤ k ≤ n, p^n ≤ 4096.
fn grid() -> Vec<(u32, usize, usize)> {
    let mut out = Vec::new();
    for p in 2..=4u32 {
        let mut n = 1;
        while word_count(p, n).unwrap() <= 4096 {
            out.extend((1..=n).map(|k| (p, n, k)));
            n += 1;
        }
    }
    out
}

fn criterion_1_golden_examples() -> Check {
    let mut out = Vec::new();
    let code = run_examples(&embedded(), &mut out);
    ensure(code == 0, || String::from_utf8_lossy(&out).into_owned())
}

fn criterion_2_reflected_identities() -> Check {
    for n in 1..=12usize {
        let g = binary_reflected(n).map_err(|e| e.to_string())?;
        let last = g.len() - 1;
        let zeros = |m: usize| "0".repeat(m);
        let mut expected = vec![
            (0, zeros(n)),
            (1, format!("{}1", zeros(n - 1))),
            (last, format!("1{}", zeros(n - 1))),
        ];
        if n >= 2 {
            expected.push((last - 1, format!("1{}1", zeros(n - 2))));
        }
        for (i, want) in expected {
            let got = g[i].to_string();
            ensure(got == want, || {
                format!("n={n}: g[{i}] = {got}, expected {want}")
            })?;
        }
    }
    Ok(())
}

fn criterion_3_axiom_suite() -> Check {
    for (p, n, k) in grid() {
        let options = CycleOptions::default();
        let seq =
            max_gray_cycle_with(p, n, k, &options).map_err(|e| format!("({p},{n},{k}): {e}"))?;
        let lambda = lambda_max(p, n, k).map_err(|e| e.to_string())?;
        ensure(seq.len() as u64 == lambda, || {
            format!("({p},{n},{k}): length {} != lambda {lambda}", seq.len())
        })?;
        let ground = maximal_ground_set(p, n, k, &options).map_err(|e| e.to_string())?;
        let report = verify_gray_cycle(&seq, Some(&ground));
        ensure(report.passed(), || {
            format!("({p},{n},{k}): {:?}", report.first_violation())
        })?;
    }
    Ok(())
}

fn criterion_4_maximality() -> Check {
    let triples = [
        ((2, 2, 1), 4),
        ((2, 3, 1), 8),
        ((2, 3, 2), 4),
        ((2, 4, 2), 8),
        ((2, 3, 3), 2),
        ((2, 4, 4), 2),
        ((3, 2, 1), 9),
        ((3, 2, 2), 9),
    ];
    for ((p, n, k), frozen) in triples {
        let lambda = lambda_max(p, n, k).map_err(|e| e.to_string())?;
        ensure(lambda == frozen, || {
            format!("({p},{n},{k}): closed form {lambda} != {frozen}")
        })?;
        match oracle_lambda(p, n, k, 50_000_000).map_err(|e| e.to_string())? {
            OracleOutcome::Exact {
                length, witness, ..
            } => {
                ensure(length as u64 == lambda, || {
                    format!("({p},{n},{k}): oracle {length} != {lambda}")
                })?;
                ensure(verify_gray_cycle(&witness, None).passed(), || {
                    format!("({p},{n},{k}): bad witness")
                })?;
            }
            OracleOutcome::Inconclusive { .. } => {
                return Err(format!("({p},{n},{k}): oracle inconclusive"))
            }
        }
    }
    Ok(())
}

fn criterion_5_cross_endpoints() -> Check {
    for n in 2..=12usize {
        for k in (1..n).step_by(2) {
            let mut failure = None;
            build_odd_pair_levels(n, k, |pair| {
                let last = pair.gamma.len() - 1;
                let want = pair.gamma.k() + 1;
                let a = hamming_distance(&pair.gamma[0], &pair.rho[last]).unwrap();
                let b = hamming_distance(&pair.rho[0], &pair.gamma[last]).unwrap();
                if (a != want || b != want) && failure.is_none() {
                    failure = Some(format!(
                        "n={n} k={k} level {}: distances {a}, {b}, expected {want}",
                        pair.gamma.k()
                    ));
                }
            })
            .map_err(|e| e.to_string())?;
            if let Some(f) = failure {
                return Err(f);
            }
        }
    }
    Ok(())
}

fn criterion_6_parity() -> Check {
    for (p, n, k) in grid() {
        if p != 2 || k % 2 == 1 {
            continue;
        }
        let mut cycles = Vec::new();
        if n > k {
            for parity in [Parity::Even, Parity::Odd] {
                let seq = build_even(n, k, parity).map_err(|e| e.to_string())?;
                let outside = seq.iter().position(|w| w.parity().unwrap() != parity);
                ensure(outside.is_none(), || {
                    format!("({n},{k}) {parity}: term {outside:?} outside its class")
                })?;
                cycles.push(seq);
            }
        } else {
            cycles.push(
                max_gray_cycle_with(p, n, k, &CycleOptions::default())
                    .map_err(|e| e.to_string())?,
            );
        }
        if n <= 5 {
            if let OracleOutcome::Exact { witness, .. } =
                oracle_lambda(2, n, k, 50_000_000).map_err(|e| e.to_string())?
            {
                cycles.push(witness);
            }
        }
        for seq in cycles {
            ensure(verify_gray_cycle(&seq, None).passed(), || {
                format!("({n},{k}): cycle does not verify")
            })?;
            for i in 0..seq.len() {
                let (u, v) = (&seq[i], &seq[(i + 1) % seq.len()]);
                ensure(u.parity().unwrap() == v.parity().unwrap(), || {
                    format!("({n},{k}): {u} -> {v} changes parity")
                })?;
            }
        }
    }
    Ok(())
}

/// The reflected code straight from its defining rule: change the largest
/// position j whose character c, replaced by θ(c), gives an unseen word.
fn greedy_reflected(p: u32, n: usize) -> Vec<Word> {
    let a = Alphabet::new(p).unwrap();
    let total = word_count(p, n).unwrap() as usize;
    let mut seen = HashSet::new();
    let mut out = vec![Word::zeros(a, n)];
    seen.insert(out[0].clone());
    while out.len() < total {
        let prev = out.last().unwrap().chars().to_vec();
        let next = (0..n)
            .rev()
            .map(|j| {
                let mut chars = prev.clone();
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

fn criterion_7_reflected_vs_greedy() -> Check {
    for p in 2..=4u32 {
        let mut n = 1;
        while word_count(p, n).unwrap() <= 4096 {
            let fast = p_ary_reflected(p, n)
                .map_err(|e| e.to_string())?
                .into_terms();
            let slow = greedy_reflected(p, n);
            let diff = fast.iter().zip(&slow).position(|(a, b)| a != b);
            ensure(fast.len() == slow.len() && diff.is_none(), || {
                format!("p={p} n={n}: first difference at {diff:?}")
            })?;
            n += 1;
        }
    }
    Ok(())
}

fn cli(args: &[String], stdin: &str) -> (i32, String, String) {
    let mut input = Cursor::new(stdin.as_bytes().to_vec());
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let mut full = vec!["sigma-gray".to_string()];
    full.extend_from_slice(args);
    let code = run(full, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn args(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

fn criterion_8_cli_round_trip() -> Check {
    for (p, n, k) in grid() {
        let (ps, ns, ks) = (p.to_string(), n.to_string(), k.to_string());
        let base = args(&["generate", "-p", &ps, "-n", &ns, "-k", &ks]);
        let (code, plain, err) = cli(&base, "");
        ensure(code == 0, || {
            format!("({p},{n},{k}): generate exited {code}: {err}")
        })?;

        let case = sigma_gray::classify(p, n, k).unwrap().case;
        let ground = match case {
            Case::I | Case::Iii => "full",
            Case::Iv => "parity",
            Case::Ii => "none",
        };
        let (code, report, _) = cli(
            &args(&["verify", "-k", &ks, "-p", &ps, "--ground-set", ground]),
            &plain,
        );
        ensure(code == 0, || {
            format!("({p},{n},{k}): verify exited {code}\n{report}")
        })?;

        let mut with_delta = base.clone();
        with_delta.extend(args(&["--format", "delta"]));
        let (_, delta_text, _) = cli(&with_delta, "");
        let words = delta::decode(&delta_text, Alphabet::new(p).unwrap())?;
        let rebuilt: String = words.iter().map(|w| format!("{w}\n")).collect();
        ensure(rebuilt == plain, || {
            format!("({p},{n},{k}): delta reconstruction differs")
        })?;
        let bad_step = delta_text
            .lines()
            .skip(1)
            .position(|l| l.split_whitespace().count() != k);
        ensure(bad_step.is_none(), || {
            format!("({p},{n},{k}): delta step {bad_step:?} does not list k positions")
        })?;

        for format in ["plain", "json", "delta"] {
            let mut materialized = base.clone();
            materialized.extend(args(&["--format", format]));
            let mut streamed = materialized.clone();
            streamed.push("--stream".into());
            let (a, b) = (cli(&materialized, "").1, cli(&streamed, "").1);
            ensure(a == b, || {
                format!("({p},{n},{k}) {format}: streaming output differs")
            })?;
        }
    }
    Ok(())
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Option<Duration>,
    check: fn() -> Check,
}

fn main() {
    let criteria = [
        Criterion {
            id: 1,
            name: "golden examples reproduced term for term",
            limit: Some(Duration::from_secs(1)),
            check: criterion_1_golden_examples,
        },
        Criterion {
            id: 2,
            name: "binary reflected endpoint identities, n in [1,12]",
            limit: Some(Duration::from_secs(1)),
            check: criterion_2_reflected_identities,
        },
        Criterion {
            id: 3,
            name: "G1-G3 and length = lambda over the grid",
            limit: Some(Duration::from_secs(30)),
            check: criterion_3_axiom_suite,
        },
        Criterion {
            id: 4,
            name: "brute-force oracle equals closed-form lambda",
            limit: Some(Duration::from_secs(60)),
            check: criterion_4_maximality,
        },
        Criterion {
            id: 5,
            name: "gamma/rho cross endpoints at every level",
            limit: None,
            check: criterion_5_cross_endpoints,
        },
        Criterion {
            id: 6,
            name: "even-k parity invariant",
            limit: None,
            check: criterion_6_parity,
        },
        Criterion {
            id: 7,
            name: "digit formula equals greedy reflected rule",
            limit: None,
            check: criterion_7_reflected_vs_greedy,
        },
        Criterion {
            id: 8,
            name: "CLI generate -> verify, delta and stream round trips",
            limit: None,
            check: criterion_8_cli_round_trip,
        },
    ];

    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(c.check)).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.limit) {
            (Ok(()), Some(limit)) if elapsed > limit => {
                Err(format!("took {elapsed:?}, limit {limit:?}"))
            }
            (o, _) => o,
        };
        match outcome {
            Ok(()) => println!(
                "[PASS] criterion {}: {} ({:.3}s)",
                c.id,
                c.name,
                elapsed.as_secs_f64()
            ),
            Err(msg) => {
                failed += 1;
                println!(
                    "[FAIL] criterion {}: {} ({:.3}s): {msg}",
                    c.id,
                    c.name,
                    elapsed.as_secs_f64()
                );
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
