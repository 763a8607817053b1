//! Self-contained verification suites, each pitting a component against an
//! independent brute-force oracle. The command-line `verify` subcommand
//! drives these; the suites are deterministic for a fixed seed.

use rmq2::builder::{SuccinctStack, TiePolicy};
use rmq2::doclist::{Corpus, DocIndex};
use rmq2::parens::{FindOpenIndex, ParenSeq};
use rmq2::pm1rmq::ExcessRmqIndex;
use rmq2::rmq::RmqIndex;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Outcome of one suite.
pub struct SuiteReport {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl SuiteReport {
    fn pass(name: &'static str, detail: String) -> Self {
        SuiteReport {
            name,
            passed: true,
            detail,
        }
    }

    fn fail(name: &'static str, detail: String) -> Self {
        SuiteReport {
            name,
            passed: false,
            detail,
        }
    }
}

/// Runs every suite; `n_max` bounds the exhaustive small-array sweep
/// (capped at 8) and `trials` scales the randomized sweeps.
pub fn run_all(seed: u64, n_max: usize, trials: usize) -> Vec<SuiteReport> {
    vec![
        rmq_vs_argmin(seed, n_max, trials),
        stack_vs_reference(seed ^ 0x5151, trials),
        findopen_vs_matcher(seed ^ 0xA3A3, trials),
        excess_rmq_vs_scan(seed ^ 0xC7C7, trials),
        doclist_vs_substring(seed ^ 0xE1E1, trials),
    ]
}

fn argmin(a: &[i64], i: usize, j: usize, tie: TiePolicy) -> usize {
    let mut best = i;
    for p in i..=j {
        let wins = match tie {
            TiePolicy::Rightmost => a[p - 1] <= a[best - 1],
            TiePolicy::Leftmost => a[p - 1] < a[best - 1],
        };
        if wins {
            best = p;
        }
    }
    best
}

fn rmq_vs_argmin(seed: u64, n_max: usize, trials: usize) -> SuiteReport {
    const NAME: &str = "rmq-vs-argmin";
    let mut checked = 0u64;
    // Exhaustive sweep over {1,2,3}^len.
    for len in 1..=n_max.min(8) {
        let mut a = vec![1i64; len];
        loop {
            for tie in [TiePolicy::Rightmost, TiePolicy::Leftmost] {
                let idx = match RmqIndex::build(&a.as_slice(), len, tie) {
                    Ok(idx) => idx,
                    Err(e) => return SuiteReport::fail(NAME, format!("build {a:?}: {e}")),
                };
                for i in 1..=len {
                    for j in i..=len {
                        let got = idx.query(i, j).unwrap();
                        let want = argmin(&a, i, j, tie);
                        if got != want {
                            return SuiteReport::fail(
                                NAME,
                                format!("{a:?} [{i},{j}] {tie:?}: got {got}, want {want}"),
                            );
                        }
                        checked += 1;
                    }
                }
            }
            let mut k = 0;
            while k < len && a[k] == 3 {
                a[k] = 1;
                k += 1;
            }
            if k == len {
                break;
            }
            a[k] += 1;
        }
    }
    // Randomized arrays with heavy ties.
    let mut rng = StdRng::seed_from_u64(seed);
    for _ in 0..trials {
        let n = rng.gen_range(1..=256);
        let spread = [2i64, 4, 1000][rng.gen_range(0..3)];
        let a: Vec<i64> = (0..n).map(|_| rng.gen_range(0..spread)).collect();
        let tie = if rng.gen_bool(0.5) {
            TiePolicy::Rightmost
        } else {
            TiePolicy::Leftmost
        };
        let idx = RmqIndex::build(&a, n, tie).unwrap();
        for _ in 0..64 {
            let i = rng.gen_range(1..=n);
            let j = rng.gen_range(i..=n);
            let got = idx.query(i, j).unwrap();
            let want = argmin(&a, i, j, tie);
            if got != want {
                return SuiteReport::fail(
                    NAME,
                    format!("random n={n} [{i},{j}] {tie:?}: got {got}, want {want}"),
                );
            }
            checked += 1;
        }
    }
    SuiteReport::pass(NAME, format!("{checked} queries matched"))
}

fn stack_vs_reference(seed: u64, trials: usize) -> SuiteReport {
    const NAME: &str = "stack-vs-reference";
    let mut rng = StdRng::seed_from_u64(seed);
    let mut ops = 0u64;
    for t in 0..trials {
        let s = [4usize, 8, 16, 64][t % 4];
        let cap = rng.gen_range(16..4000);
        let mut st = SuccinctStack::with_block_size(cap, s);
        let mut reference: Vec<usize> = Vec::new();
        let mut next = cap;
        loop {
            let can_push = next >= 1;
            if can_push && (reference.is_empty() || rng.gen_bool(0.55)) {
                st.push(next).unwrap();
                reference.push(next);
                next = next.saturating_sub(rng.gen_range(1..=3));
            } else if let Some(want) = reference.pop() {
                let got = st.pop().unwrap();
                if got != want {
                    return SuiteReport::fail(NAME, format!("pop got {got}, want {want}"));
                }
            } else {
                break;
            }
            if st.top() != reference.last().copied() {
                return SuiteReport::fail(
                    NAME,
                    format!("top {:?} vs reference {:?}", st.top(), reference.last()),
                );
            }
            ops += 1;
        }
    }
    SuiteReport::pass(NAME, format!("{ops} operations matched"))
}

fn gen_balanced(rng: &mut StdRng, pairs: usize) -> ParenSeq {
    let mut bools = Vec::with_capacity(2 * pairs);
    let mut open = 0usize;
    let mut remaining = pairs;
    while remaining > 0 || open > 0 {
        if open == 0 || (remaining > 0 && rng.gen_bool(0.5)) {
            bools.push(true);
            open += 1;
            remaining -= 1;
        } else {
            bools.push(false);
            open -= 1;
        }
    }
    ParenSeq::new(rmq2::bitvec::BitVector::from_bools(&bools)).expect("balanced by construction")
}

fn findopen_vs_matcher(seed: u64, trials: usize) -> SuiteReport {
    const NAME: &str = "findopen-vs-matcher";
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checked = 0u64;
    for _ in 0..trials {
        let pairs = rng.gen_range(1..=600);
        let seq = gen_balanced(&mut rng, pairs);
        let fo = FindOpenIndex::build(&seq);
        // Reference matcher: a plain stack of open positions.
        let mut stack = Vec::new();
        let mut matches = vec![0usize; seq.len() + 1];
        for p in 1..=seq.len() {
            if seq.is_open(p).unwrap() {
                stack.push(p);
            } else {
                matches[p] = stack.pop().unwrap();
            }
        }
        for p in 1..=seq.len() {
            if !seq.is_open(p).unwrap() {
                let got = fo.findopen(&seq, p).unwrap();
                if got != matches[p] {
                    return SuiteReport::fail(
                        NAME,
                        format!("findopen({p}) got {got}, want {}", matches[p]),
                    );
                }
                checked += 1;
            }
        }
    }
    SuiteReport::pass(NAME, format!("{checked} positions matched"))
}

fn excess_rmq_vs_scan(seed: u64, trials: usize) -> SuiteReport {
    const NAME: &str = "excess-rmq-vs-scan";
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checked = 0u64;
    for _ in 0..trials {
        let pairs = rng.gen_range(1..=400);
        let seq = gen_balanced(&mut rng, pairs);
        let idx = ExcessRmqIndex::build(&seq).unwrap();
        let mut excess = vec![0i64; seq.len() + 1];
        for p in 1..=seq.len() {
            excess[p] = excess[p - 1] + if seq.is_open(p).unwrap() { 1 } else { -1 };
        }
        for _ in 0..128 {
            let x = rng.gen_range(1..=seq.len());
            let y = rng.gen_range(x..=seq.len());
            let mut want = x;
            for p in x..=y {
                if excess[p] < excess[want] {
                    want = p;
                }
            }
            let got = idx.excess_rmq(&seq, x, y).unwrap();
            if got != want {
                return SuiteReport::fail(NAME, format!("[{x},{y}] got {got}, want {want}"));
            }
            checked += 1;
        }
    }
    SuiteReport::pass(NAME, format!("{checked} ranges matched"))
}

fn doclist_vs_substring(seed: u64, trials: usize) -> SuiteReport {
    const NAME: &str = "doclist-vs-substring";
    let mut rng = StdRng::seed_from_u64(seed);
    let mut checked = 0u64;
    for _ in 0..trials.div_ceil(10) {
        let k = rng.gen_range(1..=10);
        let docs: Vec<Vec<u8>> = (0..k)
            .map(|_| {
                let len = rng.gen_range(0..60);
                (0..len).map(|_| rng.gen_range(2u8..7)).collect()
            })
            .collect();
        let idx = DocIndex::build(&Corpus::new(docs.clone()).unwrap()).unwrap();
        for _ in 0..40 {
            let len = rng.gen_range(1..=4);
            let pattern: Vec<u8> = (0..len).map(|_| rng.gen_range(2u8..7)).collect();
            let want: Vec<usize> = docs
                .iter()
                .enumerate()
                .filter(|(_, d)| d.windows(pattern.len()).any(|w| w == pattern.as_slice()))
                .map(|(i, _)| i + 1)
                .collect();
            let (got, calls) = idx.list_docs_with_calls(&pattern).unwrap();
            if got != want {
                return SuiteReport::fail(
                    NAME,
                    format!("pattern {pattern:?}: got {got:?}, want {want:?}"),
                );
            }
            if calls > 2 * got.len() + 1 {
                return SuiteReport::fail(
                    NAME,
                    format!("{calls} recursion calls for {} documents", got.len()),
                );
            }
            checked += 1;
        }
    }
    SuiteReport::pass(NAME, format!("{checked} patterns matched"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rmq2::builder::build_dfuds;

    #[test]
    fn all_suites_pass_quickly() {
        for report in run_all(7, 4, 12) {
            assert!(report.passed, "{}: {}", report.name, report.detail);
        }
    }

    #[test]
    fn deterministic_for_fixed_seed() {
        let a = run_all(99, 3, 6);
        let b = run_all(99, 3, 6);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.passed, y.passed);
            assert_eq!(x.detail, y.detail);
        }
    }

    #[test]
    fn sanity_check_dfuds_builder_used_by_suites() {
        let seq = build_dfuds(&[2i64, 1].as_slice(), 2, TiePolicy::Rightmost).unwrap();
        assert_eq!(seq.len(), 6);
    }
}
