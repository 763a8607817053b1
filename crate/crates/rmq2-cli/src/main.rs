//! Command-line surface for the succinct range-minimum library.
//!
//! Exit codes: 0 success, 1 verification failure, 2 input or format error,
//! 3 query contract violation.

mod check;

use clap::{Parser, Subcommand, ValueEnum};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rmq2::alloc_track::{self, TrackingAllocator};
use rmq2::doclist::{Corpus, DocIndex};
use rmq2::{RmqIndex, TiePolicy};
use std::fs;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

#[global_allocator]
static ALLOC: TrackingAllocator = TrackingAllocator;

const EXIT_VERIFY: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_QUERY: u8 = 3;

#[derive(Parser)]
#[command(name = "rmq2", version, about = "Succinct range-minimum indexes")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum TieArg {
    Rightmost,
    Leftmost,
}

impl From<TieArg> for TiePolicy {
    fn from(t: TieArg) -> TiePolicy {
        match t {
            TieArg::Rightmost => TiePolicy::Rightmost,
            TieArg::Leftmost => TiePolicy::Leftmost,
        }
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Build an index from an array file and write the index container.
    Build {
        input: PathBuf,
        output: PathBuf,
        /// Which position wins among equal minima.
        #[arg(long, value_enum, default_value_t = TieArg::Rightmost)]
        tie: TieArg,
        /// Input is binary (count, then values; all little-endian 64-bit)
        /// instead of one decimal per line.
        #[arg(long)]
        binary: bool,
    },
    /// Answer "i j" query lines (stdin by default) against an index.
    Query {
        index: PathBuf,
        /// Read query lines from a file instead of stdin.
        #[arg(long)]
        queries: Option<PathBuf>,
    },
    /// Run the oracle suites.
    Verify {
        /// Exhaustive array-length bound for the small-array sweep.
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Scale of the randomized sweeps.
        #[arg(long, default_value_t = 40)]
        trials: usize,
        #[arg(long, default_value_t = 24121)]
        seed: u64,
    },
    /// Print the per-component size report of an index.
    Stats { index: PathBuf },
    /// Build random arrays at the given sizes (e.g. 1000 or 2^20) and
    /// report build and query measurements.
    Bench {
        #[arg(required = true)]
        sizes: Vec<String>,
        #[arg(long, default_value_t = 100_000)]
        queries: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Document-listing indexes.
    Doclist {
        #[command(subcommand)]
        cmd: DocCmd,
    },
}

#[derive(Subcommand)]
enum DocCmd {
    /// Build a document index from a directory of files (one document
    /// each, ids in sorted filename order) or a corpus container.
    Build {
        input: PathBuf,
        output: PathBuf,
        /// Treat the input as a corpus container file, not a directory.
        #[arg(long)]
        container: bool,
    },
    /// List the documents containing each pattern line (stdin by default).
    Query {
        index: PathBuf,
        #[arg(long)]
        patterns: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Build {
            input,
            output,
            tie,
            binary,
        } => cmd_build(&input, &output, tie.into(), binary),
        Cmd::Query { index, queries } => cmd_query(&index, queries.as_deref()),
        Cmd::Verify {
            n_max,
            trials,
            seed,
        } => cmd_verify(seed, n_max, trials),
        Cmd::Stats { index } => cmd_stats(&index),
        Cmd::Bench {
            sizes,
            queries,
            seed,
        } => cmd_bench(&sizes, queries, seed),
        Cmd::Doclist { cmd } => match cmd {
            DocCmd::Build {
                input,
                output,
                container,
            } => cmd_doclist_build(&input, &output, container),
            DocCmd::Query { index, patterns } => cmd_doclist_query(&index, patterns.as_deref()),
        },
    }
}

fn fail_input(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_INPUT)
}

fn read_array(path: &Path, binary: bool) -> Result<Vec<i64>, String> {
    let bytes = fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let values = if binary {
        if bytes.len() < 8 {
            return Err(format!("{}: binary array truncated", path.display()));
        }
        let count = u64::from_le_bytes(bytes[0..8].try_into().unwrap()) as usize;
        if bytes.len() != 8 + count * 8 {
            return Err(format!(
                "{}: binary array is {} bytes, expected {}",
                path.display(),
                bytes.len(),
                8 + count * 8
            ));
        }
        bytes[8..]
            .chunks_exact(8)
            .map(|c| i64::from_le_bytes(c.try_into().unwrap()))
            .collect()
    } else {
        let text = String::from_utf8(bytes)
            .map_err(|_| format!("{}: not valid UTF-8 text", path.display()))?;
        let mut values = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let v: i64 = line
                .trim()
                .parse()
                .map_err(|_| format!("{}: line {}: not an integer: {line:?}", path.display(), no + 1))?;
            values.push(v);
        }
        values
    };
    if values.is_empty() {
        return Err(format!("{}: array is empty", path.display()));
    }
    Ok(values)
}

fn cmd_build(input: &Path, output: &Path, tie: TiePolicy, binary: bool) -> ExitCode {
    let values = match read_array(input, binary) {
        Ok(v) => v,
        Err(e) => return fail_input(e),
    };
    let n = values.len();
    let live_before = alloc_track::live_bytes();
    alloc_track::reset_peak();
    let t0 = Instant::now();
    let idx = match RmqIndex::build(&values, n, tie) {
        Ok(idx) => idx,
        Err(e) => return fail_input(e),
    };
    let elapsed = t0.elapsed().as_secs_f64();
    let peak_bits = (alloc_track::peak_bytes() - live_before) * 8;
    let final_bits = idx.size_breakdown().total_bits();
    if let Err(e) = fs::write(output, idx.serialize()) {
        return fail_input(format!("{}: {e}", output.display()));
    }
    println!("n={n}");
    println!("build_seconds={elapsed:.6}");
    println!("peak_working_bits={peak_bits}");
    println!("final_bits={final_bits}");
    ExitCode::SUCCESS
}

fn load_index(path: &Path) -> Result<RmqIndex, String> {
    let bytes = fs::read(path).map_err(|e| format!("{}: {e}", path.display()))?;
    RmqIndex::deserialize(&bytes).map_err(|e| format!("{}: {e}", path.display()))
}

fn for_each_line(
    path: Option<&Path>,
    mut f: impl FnMut(&str) -> Result<(), (u8, String)>,
) -> ExitCode {
    let reader: Box<dyn Read> = match path {
        Some(p) => match fs::File::open(p) {
            Ok(file) => Box::new(file),
            Err(e) => return fail_input(format!("{}: {e}", p.display())),
        },
        None => Box::new(std::io::stdin()),
    };
    for (no, line) in BufReader::new(reader).lines().enumerate() {
        let line = match line {
            Ok(l) => l,
            Err(e) => return fail_input(e),
        };
        if let Err((code, msg)) = f(&line) {
            eprintln!("error: line {}: {msg}", no + 1);
            return ExitCode::from(code);
        }
    }
    ExitCode::SUCCESS
}

fn cmd_query(index: &Path, queries: Option<&Path>) -> ExitCode {
    let idx = match load_index(index) {
        Ok(idx) => idx,
        Err(e) => return fail_input(e),
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for_each_line(queries, |line| {
        let mut parts = line.split_whitespace();
        let (i, j) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => {
                let i: usize = a
                    .parse()
                    .map_err(|_| (EXIT_QUERY, format!("bad index: {a:?}")))?;
                let j: usize = b
                    .parse()
                    .map_err(|_| (EXIT_QUERY, format!("bad index: {b:?}")))?;
                (i, j)
            }
            _ => return Err((EXIT_QUERY, format!("expected \"i j\", got {line:?}"))),
        };
        let pos = idx
            .query(i, j)
            .map_err(|e| (EXIT_QUERY, e.to_string()))?;
        writeln!(out, "{pos}").map_err(|e| (EXIT_INPUT, e.to_string()))
    })
}

fn cmd_verify(seed: u64, n_max: usize, trials: usize) -> ExitCode {
    let reports = check::run_all(seed, n_max, trials);
    let mut all = true;
    for r in &reports {
        let status = if r.passed { "PASS" } else { "FAIL" };
        println!("{}: {status} ({})", r.name, r.detail);
        all &= r.passed;
    }
    if all {
        println!("all suites passed");
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VERIFY)
    }
}

fn cmd_stats(index: &Path) -> ExitCode {
    let idx = match load_index(index) {
        Ok(idx) => idx,
        Err(e) => return fail_input(e),
    };
    let sb = idx.size_breakdown();
    let width = sb
        .components()
        .iter()
        .map(|(name, _)| name.len())
        .max()
        .unwrap_or(0);
    println!("{:>width$}  bits", "component", width = width);
    for (name, bits) in sb.components() {
        println!("{name:>width$}  {bits}");
    }
    for (name, bits) in sb.components() {
        println!("{name}={bits}");
    }
    println!("total={}", sb.total_bits());
    println!("aux={}", sb.aux_bits());
    println!("n={}", sb.n);
    println!("bits_per_element={:.4}", sb.bits_per_element());
    ExitCode::SUCCESS
}

fn parse_size(text: &str) -> Result<usize, String> {
    let parse = |t: &str| -> Result<u32, String> {
        t.parse().map_err(|_| format!("bad size: {text:?}"))
    };
    if let Some(exp) = text.strip_prefix("2^") {
        Ok(1usize << parse(exp)?.min(48))
    } else {
        text.parse().map_err(|_| format!("bad size: {text:?}"))
    }
}

fn cmd_bench(sizes: &[String], queries: usize, seed: u64) -> ExitCode {
    println!(
        "{:>12} {:>12} {:>16} {:>14} {:>10} {:>12}",
        "n", "build_s", "peak_work_bits", "total_bits", "bits/elem", "query_ns"
    );
    for (t, size) in sizes.iter().enumerate() {
        let n = match parse_size(size) {
            Ok(n) => n,
            Err(e) => return fail_input(e),
        };
        let mut rng = StdRng::seed_from_u64(seed ^ (t as u64) << 32);
        let values: Vec<i64> = (0..n).map(|_| rng.gen()).collect();
        let live_before = alloc_track::live_bytes();
        alloc_track::reset_peak();
        let t0 = Instant::now();
        let idx = match RmqIndex::build(&values, n, TiePolicy::Rightmost) {
            Ok(idx) => idx,
            Err(e) => return fail_input(e),
        };
        let build_s = t0.elapsed().as_secs_f64();
        let peak_bits = (alloc_track::peak_bytes() - live_before) * 8;
        drop(values);
        let total_bits = idx.size_breakdown().total_bits();
        let pairs: Vec<(usize, usize)> = (0..queries)
            .map(|_| {
                let i = rng.gen_range(1..=n);
                let j = rng.gen_range(i..=n);
                (i, j)
            })
            .collect();
        let t1 = Instant::now();
        let mut sink = 0usize;
        for &(i, j) in &pairs {
            sink ^= idx.query(i, j).expect("in range");
        }
        std::hint::black_box(sink);
        let query_ns = t1.elapsed().as_nanos() as f64 / queries.max(1) as f64;
        let per_elem = total_bits as f64 / n as f64;
        println!(
            "{n:>12} {build_s:>12.4} {peak_bits:>16} {total_bits:>14} {per_elem:>10.4} {query_ns:>12.1}"
        );
        println!(
            "size={n} build_seconds={build_s:.6} peak_working_bits={peak_bits} total_bits={total_bits} bits_per_element={per_elem:.4} mean_query_ns={query_ns:.1}"
        );
    }
    ExitCode::SUCCESS
}

fn read_corpus_dir(dir: &Path) -> Result<Corpus, String> {
    let mut names: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| format!("{}: {e}", dir.display()))?
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file())
        .collect();
    names.sort();
    let mut docs = Vec::with_capacity(names.len());
    for p in &names {
        docs.push(fs::read(p).map_err(|e| format!("{}: {e}", p.display()))?);
    }
    Corpus::new(docs).map_err(|e| format!("{}: {e}", dir.display()))
}

fn cmd_doclist_build(input: &Path, output: &Path, container: bool) -> ExitCode {
    let corpus = if container {
        match fs::read(input) {
            Ok(bytes) => match Corpus::from_container(&bytes) {
                Ok(c) => c,
                Err(e) => return fail_input(format!("{}: {e}", input.display())),
            },
            Err(e) => return fail_input(format!("{}: {e}", input.display())),
        }
    } else {
        match read_corpus_dir(input) {
            Ok(c) => c,
            Err(e) => return fail_input(e),
        }
    };
    let t0 = Instant::now();
    let idx = match DocIndex::build(&corpus) {
        Ok(idx) => idx,
        Err(e) => return fail_input(e),
    };
    let elapsed = t0.elapsed().as_secs_f64();
    if let Err(e) = fs::write(output, idx.serialize()) {
        return fail_input(format!("{}: {e}", output.display()));
    }
    println!("k={}", idx.num_docs());
    println!("n={}", idx.text_len());
    println!("build_seconds={elapsed:.6}");
    ExitCode::SUCCESS
}

fn cmd_doclist_query(index: &Path, patterns: Option<&Path>) -> ExitCode {
    let idx = match fs::read(index) {
        Ok(bytes) => match DocIndex::deserialize(&bytes) {
            Ok(idx) => idx,
            Err(e) => return fail_input(format!("{}: {e}", index.display())),
        },
        Err(e) => return fail_input(format!("{}: {e}", index.display())),
    };
    let stdout = std::io::stdout();
    let mut out = std::io::BufWriter::new(stdout.lock());
    for_each_line(patterns, |line| {
        let docs = idx
            .list_docs(line.as_bytes())
            .map_err(|e| (EXIT_QUERY, e.to_string()))?;
        let rendered: Vec<String> = docs.iter().map(|d| d.to_string()).collect();
        writeln!(out, "{}", rendered.join(" ")).map_err(|e| (EXIT_INPUT, e.to_string()))
    })
}
