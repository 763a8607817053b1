//! Document listing: which documents contain a pattern.
//!
//! A [`Corpus`] of `k` documents is concatenated into one text `T` (one
//! separator byte after each document, a terminator at the end). The
//! [`DocIndex`] holds `T`, its suffix array, a document-boundary bit vector,
//! and an [`RmqIndex`] over the *virtual* array `-N`, where `N[i]` is the
//! rank of the next suffix belonging to the same document as suffix rank
//! `i`. `N` is never materialized: the index builder reads positions right
//! to left, so each `N[i]` is produced on the fly from a `k`-entry
//! last-seen array and discarded.
//!
//! A listing query locates the pattern's suffix-array range and recurses on
//! range-maximum positions of `N` (range minima of `-N`); each document's
//! rightmost in-range occurrence has its next occurrence outside the range,
//! so every recursion step either reports a fresh document or terminates a
//! branch. The `N` values themselves are never consulted — a mark per
//! document replaces the classical threshold test, which is exactly what a
//! non-systematic minimum index supports.

use crate::alloc_track;
use crate::bitvec::{BitVector, RankSelectDirectory};
use crate::builder::TiePolicy;
use crate::error::{Error, Result};
use crate::rmq::RmqIndex;
use std::cell::{Cell, RefCell};
use std::cmp::Ordering;

/// Appended after every document.
pub const SEPARATOR: u8 = 0x01;
/// Appended once at the end of the text.
pub const TERMINATOR: u8 = 0x00;

const MAGIC: [u8; 4] = *b"DOCL";
const VERSION: u16 = 1;

/// A validated set of documents: bytes 2..=255 only.
#[derive(Debug, Clone)]
pub struct Corpus {
    docs: Vec<Vec<u8>>,
}

impl Corpus {
    pub fn new(docs: Vec<Vec<u8>>) -> Result<Self> {
        if docs.is_empty() {
            return Err(Error::EmptyInput);
        }
        for doc in &docs {
            if let Some(&byte) = doc.iter().find(|&&b| b < 2) {
                return Err(Error::InvalidByte { byte });
            }
        }
        Ok(Corpus { docs })
    }

    pub fn num_docs(&self) -> usize {
        self.docs.len()
    }

    pub fn docs(&self) -> &[Vec<u8>] {
        &self.docs
    }

    /// Total text length: document bytes plus `k` separators plus the
    /// terminator.
    pub fn text_len(&self) -> usize {
        self.docs.iter().map(Vec::len).sum::<usize>() + self.docs.len() + 1
    }

    /// The concatenated text `T`.
    pub fn text(&self) -> Vec<u8> {
        let mut t = Vec::with_capacity(self.text_len());
        for doc in &self.docs {
            t.extend_from_slice(doc);
            t.push(SEPARATOR);
        }
        t.push(TERMINATOR);
        t
    }

    /// Length-prefixed binary form: document count, then per document a
    /// length and the raw bytes. All integers little-endian 64-bit.
    pub fn to_container(&self) -> Vec<u8> {
        let mut out = Vec::new();
        out.extend_from_slice(&(self.docs.len() as u64).to_le_bytes());
        for doc in &self.docs {
            out.extend_from_slice(&(doc.len() as u64).to_le_bytes());
            out.extend_from_slice(doc);
        }
        out
    }

    pub fn from_container(bytes: &[u8]) -> Result<Self> {
        let take = |at: usize| -> Result<u64> {
            bytes
                .get(at..at + 8)
                .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
                .ok_or_else(|| Error::Format("corpus container truncated".into()))
        };
        let k = take(0)? as usize;
        let mut docs = Vec::with_capacity(k.min(1 << 20));
        let mut at = 8;
        for _ in 0..k {
            let len = take(at)? as usize;
            at += 8;
            let body = bytes
                .get(at..at + len)
                .ok_or_else(|| Error::Format("corpus container truncated".into()))?;
            docs.push(body.to_vec());
            at += len;
        }
        if at != bytes.len() {
            return Err(Error::Format(format!(
                "corpus container has {} trailing bytes",
                bytes.len() - at
            )));
        }
        Corpus::new(docs)
    }
}

/// Sorted suffix positions of `text` (1-based), by doubling with packed
/// rank pairs. The unique terminator makes all suffixes distinct.
fn build_suffix_array(text: &[u8]) -> Vec<u64> {
    let n = text.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut rank: Vec<u32> = text.iter().map(|&b| b as u32).collect();
    let mut next_rank = vec![0u32; n];
    let mut step = 1usize;
    loop {
        let key = |i: u32| -> u64 {
            let i = i as usize;
            let second = if i + step < n { rank[i + step] + 1 } else { 0 };
            (rank[i] as u64) << 32 | second as u64
        };
        sa.sort_unstable_by_key(|&i| key(i));
        next_rank[sa[0] as usize] = 0;
        for t in 1..n {
            let grew = (key(sa[t]) != key(sa[t - 1])) as u32;
            next_rank[sa[t] as usize] = next_rank[sa[t - 1] as usize] + grew;
        }
        std::mem::swap(&mut rank, &mut next_rank);
        if rank[sa[n - 1] as usize] as usize == n - 1 {
            break;
        }
        step *= 2;
    }
    sa.into_iter().map(|i| i as u64 + 1).collect()
}

/// Produces `-N[i]` for the index builder: interior mutability because the
/// builder only hands out shared references, with the read order asserted
/// strictly decreasing.
struct NextOccAccessor<'a> {
    sa: &'a [u64],
    bounds: &'a BitVector,
    bdir: &'a RankSelectDirectory,
    k: usize,
    n: usize,
    last_seen: RefCell<Vec<u32>>,
    next_read: Cell<usize>,
}

impl crate::aux_rmq::ValueAccessor for NextOccAccessor<'_> {
    fn value(&self, i: usize) -> i64 {
        assert_eq!(
            i,
            self.next_read.get(),
            "streaming contract: reads must arrive in decreasing order"
        );
        self.next_read.set(i - 1);
        let p = self.sa[i - 1] as usize;
        let d = doc_at(self.bounds, self.bdir, self.k, self.n, p);
        let mut seen = self.last_seen.borrow_mut();
        let next = match seen[d] {
            0 => self.n + 1,
            j => j as usize,
        };
        seen[d] = i as u32;
        -(next as i64)
    }
}

fn doc_at(bounds: &BitVector, bdir: &RankSelectDirectory, k: usize, n: usize, p: usize) -> usize {
    if p == n {
        k + 1
    } else {
        bdir.rank(bounds, true, p).expect("position validated")
    }
}

/// Full-text document-listing index.
#[derive(Debug)]
pub struct DocIndex {
    text: Vec<u8>,
    sa: Vec<u64>,
    bounds: BitVector,
    bdir: RankSelectDirectory,
    doc_lens: Vec<u64>,
    rmq: RmqIndex,
}

/// Allocation footprint of the listing-index phase of a build (the minimum
/// index over `-N`), measured with [`alloc_track`]. All zeros unless
/// [`alloc_track::TrackingAllocator`] is installed as the global allocator,
/// and only meaningful when no other thread allocates concurrently.
#[derive(Debug, Clone, Copy)]
pub struct DocBuildStats {
    /// Bits the phase held at its peak beyond what it retained: scratch that
    /// existed only during construction. Stays near `1.25 * text_len` bits
    /// because `N` is streamed, never materialized.
    pub listing_transient_bits: usize,
    /// Bits the phase retained: the minimum index itself.
    pub listing_resident_bits: usize,
}

fn bounds_from_lens(doc_lens: &[u64], n: usize) -> BitVector {
    let mut b = BitVector::zeros(n);
    let mut start = 1u64;
    for &len in doc_lens {
        b.set(start as usize, true);
        start += len + 1;
    }
    b
}

impl DocIndex {
    pub fn build(corpus: &Corpus) -> Result<Self> {
        Self::build_with_stats(corpus).map(|(idx, _)| idx)
    }

    /// Builds the index and reports the listing-phase allocation footprint;
    /// see [`DocBuildStats`] for when the numbers are meaningful.
    pub fn build_with_stats(corpus: &Corpus) -> Result<(Self, DocBuildStats)> {
        let text = corpus.text();
        let n = text.len();
        let k = corpus.num_docs();
        let doc_lens: Vec<u64> = corpus.docs().iter().map(|d| d.len() as u64).collect();
        let sa = build_suffix_array(&text);
        let bounds = bounds_from_lens(&doc_lens, n);
        let bdir = RankSelectDirectory::build(&bounds);
        let acc = NextOccAccessor {
            sa: &sa,
            bounds: &bounds,
            bdir: &bdir,
            k,
            n,
            last_seen: RefCell::new(vec![0u32; k + 2]),
            next_read: Cell::new(n),
        };
        let live0 = alloc_track::live_bytes();
        alloc_track::reset_peak();
        let rmq = RmqIndex::build(&acc, n, TiePolicy::Rightmost)?;
        let peak = alloc_track::peak_bytes();
        let live1 = alloc_track::live_bytes();
        let stats = DocBuildStats {
            listing_transient_bits: peak.saturating_sub(live1) * 8,
            listing_resident_bits: live1.saturating_sub(live0) * 8,
        };
        Ok((
            DocIndex {
                text,
                sa,
                bounds,
                bdir,
                doc_lens,
                rmq,
            },
            stats,
        ))
    }

    pub fn num_docs(&self) -> usize {
        self.doc_lens.len()
    }

    pub fn text_len(&self) -> usize {
        self.text.len()
    }

    /// Document owning text position `p`; separators belong to the document
    /// they follow, the final terminator reports the sentinel `k + 1`.
    pub fn doc_of(&self, p: usize) -> Result<usize> {
        if p == 0 || p > self.text.len() {
            return Err(Error::PositionOutOfRange {
                pos: p,
                len: self.text.len(),
            });
        }
        Ok(doc_at(
            &self.bounds,
            &self.bdir,
            self.num_docs(),
            self.text.len(),
            p,
        ))
    }

    fn validate_pattern(&self, pattern: &[u8]) -> Result<()> {
        if pattern.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&byte) = pattern.iter().find(|&&b| b < 2) {
            return Err(Error::InvalidByte { byte });
        }
        Ok(())
    }

    /// Maximal suffix-array range `[l, r]` (1-based) whose suffixes start
    /// with the pattern, or `None`.
    pub fn suffix_range(&self, pattern: &[u8]) -> Result<Option<(usize, usize)>> {
        self.validate_pattern(pattern)?;
        let cmp = |rank: usize| -> Ordering {
            let suffix = &self.text[self.sa[rank] as usize - 1..];
            let m = pattern.len().min(suffix.len());
            match suffix[..m].cmp(&pattern[..m]) {
                Ordering::Equal if suffix.len() < pattern.len() => Ordering::Less,
                o => o,
            }
        };
        // First rank not below the pattern, and first rank beyond it.
        let search = |above: fn(Ordering) -> bool| -> usize {
            let (mut lo, mut hi) = (0usize, self.sa.len());
            while lo < hi {
                let mid = (lo + hi) / 2;
                if above(cmp(mid)) {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            lo
        };
        let lo = search(|o| o != Ordering::Less);
        let hi = search(|o| o == Ordering::Greater);
        Ok(if lo == hi { None } else { Some((lo + 1, hi)) })
    }

    /// Sorted ids of every document containing the pattern.
    pub fn list_docs(&self, pattern: &[u8]) -> Result<Vec<usize>> {
        self.list_docs_with_calls(pattern).map(|(docs, _)| docs)
    }

    /// Same, also reporting the number of recursion calls (at most
    /// `2 * docs.len() + 1`).
    pub fn list_docs_with_calls(&self, pattern: &[u8]) -> Result<(Vec<usize>, usize)> {
        let mut out = Vec::new();
        let mut calls = 0usize;
        if let Some((l, r)) = self.suffix_range(pattern)? {
            let mut marked = vec![false; self.num_docs() + 2];
            self.list_rec(l, r, &mut marked, &mut out, &mut calls)?;
        }
        out.sort_unstable();
        Ok((out, calls))
    }

    fn list_rec(
        &self,
        l: usize,
        r: usize,
        marked: &mut [bool],
        out: &mut Vec<usize>,
        calls: &mut usize,
    ) -> Result<()> {
        *calls += 1;
        if l > r {
            return Ok(());
        }
        let m = self.rmq.query(l, r)?;
        let d = self.doc_of(self.sa[m - 1] as usize)?;
        if marked[d] {
            return Ok(());
        }
        marked[d] = true;
        out.push(d);
        // Right subrange first. Every document already marked was reported at
        // a position right of the current subrange (or at an ancestor split),
        // so any of its occurrences in here has its next occurrence no further
        // than that report site — an unmarked document's rightmost in-range
        // occurrence always beats it at the maximum. Visiting left first would
        // break that invariant and stop branches early.
        if m < r {
            self.list_rec(m + 1, r, marked, out, calls)?;
        }
        if m > l {
            self.list_rec(l, m - 1, marked, out, calls)?;
        }
        Ok(())
    }

    /// Container bytes: header, embedded minimum-index container, suffix
    /// array, boundary payload, document lengths, text.
    pub fn serialize(&self) -> Vec<u8> {
        let rmq_bytes = self.rmq.serialize();
        let mut out = Vec::new();
        out.extend_from_slice(&MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        out.extend_from_slice(&0u16.to_le_bytes());
        out.extend_from_slice(&(self.num_docs() as u64).to_le_bytes());
        out.extend_from_slice(&(self.text.len() as u64).to_le_bytes());
        out.extend_from_slice(&(rmq_bytes.len() as u64).to_le_bytes());
        out.extend_from_slice(&rmq_bytes);
        for &p in &self.sa {
            out.extend_from_slice(&p.to_le_bytes());
        }
        for w in self.bounds.words() {
            out.extend_from_slice(&w.to_le_bytes());
        }
        for &len in &self.doc_lens {
            out.extend_from_slice(&len.to_le_bytes());
        }
        out.extend_from_slice(&self.text);
        out
    }

    pub fn deserialize(bytes: &[u8]) -> Result<Self> {
        let fail = |msg: String| Error::Format(msg);
        if bytes.len() < 32 {
            return Err(fail(format!(
                "document container truncated: {} bytes",
                bytes.len()
            )));
        }
        if bytes[0..4] != MAGIC {
            return Err(fail(format!("bad magic {:02x?}", &bytes[0..4])));
        }
        let version = u16::from_le_bytes([bytes[4], bytes[5]]);
        if version != VERSION {
            return Err(fail(format!("unsupported version {version}")));
        }
        let flags = u16::from_le_bytes([bytes[6], bytes[7]]);
        if flags != 0 {
            return Err(fail(format!("unknown flag bits {flags:#06x}")));
        }
        let k = u64::from_le_bytes(bytes[8..16].try_into().unwrap()) as usize;
        let n = u64::from_le_bytes(bytes[16..24].try_into().unwrap()) as usize;
        let rmq_len = u64::from_le_bytes(bytes[24..32].try_into().unwrap()) as usize;
        if k == 0 {
            return Err(fail("document count must be at least 1".into()));
        }
        let words = n.div_ceil(64);
        let expect = 32 + rmq_len + n * 8 + words * 8 + k * 8 + n;
        if bytes.len() != expect {
            return Err(fail(format!(
                "document container is {} bytes, expected {expect}",
                bytes.len()
            )));
        }
        let mut at = 32;
        let rmq = RmqIndex::deserialize(&bytes[at..at + rmq_len])?;
        at += rmq_len;
        if rmq.len() != n {
            return Err(fail(format!(
                "embedded index covers {} positions, text has {n}",
                rmq.len()
            )));
        }
        if rmq.tie() != TiePolicy::Rightmost {
            return Err(fail("embedded index must use the rightmost policy".into()));
        }
        let sa: Vec<u64> = bytes[at..at + n * 8]
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        at += n * 8;
        let mut seen = vec![false; n + 1];
        for &p in &sa {
            let p = p as usize;
            if p == 0 || p > n || seen[p] {
                return Err(fail("suffix array is not a permutation".into()));
            }
            seen[p] = true;
        }
        let bound_words: Vec<u64> = bytes[at..at + words * 8]
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        at += words * 8;
        let doc_lens: Vec<u64> = bytes[at..at + k * 8]
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        at += k * 8;
        let text = bytes[at..].to_vec();
        let total: u64 = doc_lens.iter().sum();
        if total as usize + k + 1 != n {
            return Err(fail("document lengths do not add up to the text length".into()));
        }
        let bounds =
            BitVector::from_words(bound_words, n).map_err(|e| fail(format!("boundaries: {e}")))?;
        let rebuilt = bounds_from_lens(&doc_lens, n);
        if rebuilt.words() != bounds.words() {
            return Err(fail("boundary bits disagree with document lengths".into()));
        }
        // Text shape: separators after each document, terminator last.
        let mut pos = 0usize;
        for &len in &doc_lens {
            let body = &text[pos..pos + len as usize];
            if let Some(&byte) = body.iter().find(|&&b| b < 2) {
                return Err(fail(format!("document byte {byte:#04x} out of range")));
            }
            pos += len as usize;
            if text[pos] != SEPARATOR {
                return Err(fail("missing document separator".into()));
            }
            pos += 1;
        }
        if text[pos] != TERMINATOR {
            return Err(fail("missing text terminator".into()));
        }
        let bdir = RankSelectDirectory::build(&bounds);
        Ok(DocIndex {
            text,
            sa,
            bounds,
            bdir,
            doc_lens,
            rmq,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn corpus(docs: &[&[u8]]) -> Corpus {
        Corpus::new(docs.iter().map(|d| d.to_vec()).collect()).unwrap()
    }

    fn brute_list(docs: &[Vec<u8>], pattern: &[u8]) -> Vec<usize> {
        docs.iter()
            .enumerate()
            .filter(|(_, d)| d.windows(pattern.len()).any(|w| w == pattern))
            .map(|(i, _)| i + 1)
            .collect()
    }

    #[test]
    fn corpus_shape() {
        let c = corpus(&[b"ab", b"ba"]);
        assert_eq!(c.num_docs(), 2);
        assert_eq!(c.text_len(), 7);
        assert_eq!(c.text(), b"ab\x01ba\x01\x00");
        assert!(Corpus::new(vec![]).is_err());
        assert!(Corpus::new(vec![vec![b'a', 0x01]]).is_err());
        assert!(Corpus::new(vec![vec![0x00]]).is_err());
    }

    #[test]
    fn corpus_container_round_trip() {
        let c = corpus(&[b"ab", b"", b"xyz"]);
        let bytes = c.to_container();
        let back = Corpus::from_container(&bytes).unwrap();
        assert_eq!(back.docs(), c.docs());
        assert!(Corpus::from_container(&bytes[..bytes.len() - 1]).is_err());
        let mut extra = bytes.clone();
        extra.push(0);
        assert!(Corpus::from_container(&extra).is_err());
    }

    #[test]
    fn suffix_array_matches_naive_sort() {
        let mut rng = StdRng::seed_from_u64(41);
        for _ in 0..30 {
            let n = rng.gen_range(1..400);
            let mut text: Vec<u8> = (0..n).map(|_| rng.gen_range(2..6)).collect();
            text.push(0);
            let sa = build_suffix_array(&text);
            let mut naive: Vec<u64> = (1..=text.len() as u64).collect();
            naive.sort_by(|&a, &b| text[a as usize - 1..].cmp(&text[b as usize - 1..]));
            assert_eq!(sa, naive);
        }
    }

    #[test]
    fn worked_example() {
        let c = corpus(&[b"ab", b"ba"]);
        let idx = DocIndex::build(&c).unwrap();
        assert_eq!(idx.doc_of(1).unwrap(), 1);
        assert_eq!(idx.doc_of(3).unwrap(), 1);
        assert_eq!(idx.doc_of(4).unwrap(), 2);
        assert_eq!(idx.doc_of(7).unwrap(), 3); // terminator sentinel k+1
        assert!(idx.doc_of(0).is_err());
        assert!(idx.doc_of(8).is_err());

        let (l, r) = idx.suffix_range(b"a").unwrap().unwrap();
        assert_eq!(r - l + 1, 2);
        assert_eq!(idx.list_docs(b"a").unwrap(), vec![1, 2]);
        assert_eq!(idx.list_docs(b"ab").unwrap(), vec![1]);
        assert_eq!(idx.list_docs(b"b").unwrap(), vec![1, 2]);
        assert_eq!(idx.list_docs(b"zz").unwrap(), Vec::<usize>::new());
        assert_eq!(idx.suffix_range(b"zz").unwrap(), None);
        assert!(idx.list_docs(b"").is_err());
        assert!(idx.list_docs(&[b'a', 0x01]).is_err());
    }

    #[test]
    fn single_document() {
        let c = corpus(&[b"aaa"]);
        let idx = DocIndex::build(&c).unwrap();
        assert_eq!(idx.list_docs(b"a").unwrap(), vec![1]);
        assert_eq!(idx.list_docs(b"aaa").unwrap(), vec![1]);
        assert_eq!(idx.list_docs(b"aaaa").unwrap(), Vec::<usize>::new());
        assert_eq!(idx.list_docs(b"b").unwrap(), Vec::<usize>::new());
    }

    #[test]
    fn empty_documents_are_allowed() {
        let c = corpus(&[b"", b"ab", b""]);
        let idx = DocIndex::build(&c).unwrap();
        assert_eq!(idx.list_docs(b"ab").unwrap(), vec![2]);
        assert_eq!(idx.doc_of(1).unwrap(), 1); // first separator
    }

    #[test]
    fn matches_brute_force_oracle() {
        let mut rng = StdRng::seed_from_u64(42);
        for _ in 0..40 {
            let k = rng.gen_range(1..=8);
            let docs: Vec<Vec<u8>> = (0..k)
                .map(|_| {
                    let len = rng.gen_range(0..40);
                    (0..len).map(|_| rng.gen_range(2u8..6)).collect()
                })
                .collect();
            let c = Corpus::new(docs.clone()).unwrap();
            let idx = DocIndex::build(&c).unwrap();
            // All short substrings of all documents, plus random patterns.
            let mut patterns: Vec<Vec<u8>> = Vec::new();
            for d in &docs {
                for len in 1..=3.min(d.len()) {
                    for w in d.windows(len) {
                        patterns.push(w.to_vec());
                    }
                }
            }
            for _ in 0..20 {
                let len = rng.gen_range(1..=4);
                patterns.push((0..len).map(|_| rng.gen_range(2u8..6)).collect());
            }
            for p in &patterns {
                let (got, calls) = idx.list_docs_with_calls(p).unwrap();
                assert_eq!(got, brute_list(&docs, p), "pattern {p:?} docs {docs:?}");
                assert!(
                    calls <= 2 * got.len() + 1,
                    "{calls} calls for {} docs",
                    got.len()
                );
            }
        }
    }

    #[test]
    fn round_trip() {
        let c = corpus(&[b"abcab", b"bc", b"cab"]);
        let idx = DocIndex::build(&c).unwrap();
        let bytes = idx.serialize();
        let back = DocIndex::deserialize(&bytes).unwrap();
        for p in [&b"a"[..], b"ab", b"bc", b"cab", b"abc", b"x"] {
            assert_eq!(idx.list_docs(p).unwrap(), back.list_docs(p).unwrap());
        }
        assert_eq!(back.serialize(), bytes);
    }

    #[test]
    fn rejects_corrupted_containers() {
        let c = corpus(&[b"ab", b"ba"]);
        let idx = DocIndex::build(&c).unwrap();
        let good = idx.serialize();
        assert!(DocIndex::deserialize(&good).is_ok());

        let mut bad = good.clone();
        bad[0] = b'Y';
        assert!(DocIndex::deserialize(&bad).is_err());

        let mut bad = good.clone();
        bad[4] = 7;
        assert!(DocIndex::deserialize(&bad).is_err());

        assert!(DocIndex::deserialize(&good[..good.len() - 2]).is_err());

        let mut bad = good.clone();
        let len = bad.len();
        bad[len - 1] = 0x05; // terminator overwritten
        assert!(DocIndex::deserialize(&bad).is_err());

        // Duplicate a suffix-array entry: no longer a permutation.
        let mut bad = good.clone();
        let sa_start = 32 + u64::from_le_bytes(good[24..32].try_into().unwrap()) as usize;
        bad.copy_within(sa_start + 8..sa_start + 16, sa_start);
        assert!(DocIndex::deserialize(&bad).is_err());
    }
}
