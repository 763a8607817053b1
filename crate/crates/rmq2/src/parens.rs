//! Balanced parenthesis sequences with excess arithmetic and `findopen`.
//!
//! A [`ParenSeq`] stores the tree encoding as a bit vector (`(` = 1, `)` = 0)
//! together with its rank/select directory. The excess at position `i` is
//! `rank_( (i) - rank_) (i)`; for a closing parenthesis at `i`, the matching
//! opening parenthesis is `j' + 1` where `j'` is the largest position before
//! `i` whose excess equals the excess at `i` (with excess 0 at position 0).
//!
//! [`FindOpenIndex`] answers `findopen` in bounded time with two-level
//! chunking: within a 512-bit chunk the backward search steps one byte at a
//! time through the pattern bitmaps of [`crate::tables`]; closings whose
//! match lies in an earlier chunk are routed through *pioneers* — the far
//! closings whose predecessor far closing in the same chunk targets a
//! different chunk. Every far closing between two pioneers matches into its
//! pioneer's target chunk, so one stored answer per pioneer anchors the
//! byte-wise search for all of them.

use crate::bitvec::{BitVector, RankSelectDirectory};
use crate::error::{Error, Result};
use crate::tables::{prefix_excess, BYTE_EXCESS_MATCH};

/// Bits per `findopen` chunk.
pub(crate) const CHUNK_BITS: usize = 512;

/// A balanced parenthesis sequence with rank/select support.
#[derive(Debug, Clone)]
pub struct ParenSeq {
    bits: BitVector,
    dir: RankSelectDirectory,
}

impl ParenSeq {
    /// Wraps a bit vector, validating that it encodes a balanced sequence.
    pub fn new(bits: BitVector) -> Result<Self> {
        validate_balanced(&bits)?;
        let dir = RankSelectDirectory::build(&bits);
        Ok(ParenSeq { bits, dir })
    }

    /// Builder entry point for sequences that are balanced by construction.
    pub(crate) fn new_unchecked(bits: BitVector) -> Self {
        debug_assert!(validate_balanced(&bits).is_ok());
        let dir = RankSelectDirectory::build(&bits);
        ParenSeq { bits, dir }
    }

    /// Parses a string of `(` and `)` characters; test and CLI helper.
    pub fn from_paren_str(s: &str) -> Result<Self> {
        let bits: Vec<bool> = s
            .chars()
            .map(|c| match c {
                '(' => Ok(true),
                ')' => Ok(false),
                _ => Err(Error::Format(format!("unexpected character {c:?}"))),
            })
            .collect::<Result<_>>()?;
        ParenSeq::new(BitVector::from_bools(&bits))
    }

    /// Total number of parentheses.
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &BitVector {
        &self.bits
    }

    /// `true` iff position `i` holds `(`.
    pub fn is_open(&self, i: usize) -> Result<bool> {
        self.bits.get(i)
    }

    /// Number of `)` in the whole sequence (one per tree node).
    pub fn num_closes(&self) -> usize {
        self.len() - self.dir.ones()
    }

    /// Excess after `i` parentheses; `excess(0) = 0`.
    pub fn excess(&self, i: usize) -> Result<usize> {
        if i > self.len() {
            return Err(Error::PositionOutOfRange {
                pos: i,
                len: self.len(),
            });
        }
        Ok(self.excess_raw(i))
    }

    #[inline]
    pub(crate) fn excess_raw(&self, i: usize) -> usize {
        2 * self.dir.rank1_raw(&self.bits, i) - i
    }

    /// Number of `)` in `[1, i]`.
    pub fn rank_close(&self, i: usize) -> Result<usize> {
        self.dir.rank(&self.bits, false, i)
    }

    pub fn rank_open(&self, i: usize) -> Result<usize> {
        self.dir.rank(&self.bits, true, i)
    }

    /// Position of the `k`-th `)`.
    pub fn select_close(&self, k: usize) -> Result<usize> {
        self.dir.select(&self.bits, false, k)
    }

    pub fn select_open(&self, k: usize) -> Result<usize> {
        self.dir.select(&self.bits, true, k)
    }

    #[inline]
    pub(crate) fn rank_close_raw(&self, i: usize) -> usize {
        self.dir.rank0_raw(&self.bits, i)
    }

    #[inline]
    pub(crate) fn select_close_raw(&self, k: usize) -> usize {
        self.dir
            .select(&self.bits, false, k)
            .expect("select_close within population")
    }

    /// Directory overhead in bits (payload excluded).
    pub fn dir_bit_size(&self) -> usize {
        self.dir.bit_size()
    }

    /// Largest position `j'` in `[lo, hi]` with excess equal to `target`,
    /// scanned byte-wise through the pattern bitmaps.
    fn scan_back_excess(&self, hi: usize, lo: usize, target: i64) -> Option<usize> {
        debug_assert!(lo <= hi && hi <= self.len());
        if hi == 0 {
            return (target == 0).then_some(0);
        }
        let mut pos = hi;
        let mut e_pos = self.excess_raw(pos) as i64;
        loop {
            let base = (pos - 1) & !7;
            let t_hi = (pos - base) as u32;
            let pattern = self.bits.byte(base / 8);
            let e_base = e_pos - prefix_excess(pattern, t_hi) as i64;
            let d = target - e_base;
            if (-8..=8).contains(&d) {
                let mut bm = BYTE_EXCESS_MATCH[pattern as usize][(d + 8) as usize];
                bm &= (1u16 << (t_hi + 1)) - 1;
                let t_min = lo.saturating_sub(base) as u32;
                bm &= !((1u16 << t_min) - 1);
                if bm != 0 {
                    let t = 15 - bm.leading_zeros() as usize;
                    return Some(base + t);
                }
            }
            if base <= lo {
                return None;
            }
            pos = base;
            e_pos = e_base;
        }
    }
}

fn validate_balanced(bits: &BitVector) -> Result<()> {
    let len = bits.len();
    if len < 2 || len % 2 != 0 {
        return Err(Error::Unbalanced);
    }
    let mut e = 0i64;
    let full_bytes = len / 8;
    for idx in 0..full_bytes {
        let b = bits.byte(idx);
        let (min, _, delta) = crate::tables::BYTE_MIN[b as usize];
        if e + (min as i64) < 0 {
            return Err(Error::Unbalanced);
        }
        e += delta as i64;
    }
    for pos in full_bytes * 8 + 1..=len {
        e += if bits.bit(pos) { 1 } else { -1 };
        if e < 0 {
            return Err(Error::Unbalanced);
        }
    }
    if e != 0 {
        return Err(Error::Unbalanced);
    }
    Ok(())
}

/// Pioneer directory for constant-bounded `findopen`.
#[derive(Debug, Clone, Default)]
pub struct FindOpenIndex {
    /// Positions of the pioneer far closings, globally sorted.
    pioneer_pos: Vec<u32>,
    /// Matching opening position for each pioneer.
    pioneer_match: Vec<u32>,
    /// Index into the pioneer arrays of each chunk's first pioneer.
    chunk_pioneer_start: Vec<u32>,
}

impl FindOpenIndex {
    pub fn build(ps: &ParenSeq) -> Self {
        let len = ps.len();
        let num_chunks = len.div_ceil(CHUNK_BITS);
        let mut pioneer_pos = Vec::new();
        let mut pioneer_match = Vec::new();
        let mut chunk_pioneer_start = Vec::with_capacity(num_chunks + 1);
        // Opens not yet matched within their own chunk; LIFO across chunks.
        let mut far_open: Vec<u32> = Vec::new();
        let mut local: Vec<u32> = Vec::with_capacity(CHUNK_BITS);
        for c in 0..num_chunks {
            chunk_pioneer_start.push(pioneer_pos.len() as u32);
            let chunk_end = ((c + 1) * CHUNK_BITS).min(len);
            let mut prev_target_chunk = usize::MAX;
            for pos in c * CHUNK_BITS + 1..=chunk_end {
                if ps.bits.bit(pos) {
                    local.push(pos as u32);
                } else if local.pop().is_none() {
                    let open = far_open.pop().expect("balanced sequence");
                    let target_chunk = (open as usize - 1) / CHUNK_BITS;
                    if target_chunk != prev_target_chunk {
                        pioneer_pos.push(pos as u32);
                        pioneer_match.push(open);
                        prev_target_chunk = target_chunk;
                    }
                }
            }
            far_open.append(&mut local);
        }
        chunk_pioneer_start.push(pioneer_pos.len() as u32);
        debug_assert!(far_open.is_empty());
        pioneer_pos.shrink_to_fit();
        pioneer_match.shrink_to_fit();
        FindOpenIndex {
            pioneer_pos,
            pioneer_match,
            chunk_pioneer_start,
        }
    }

    /// Position of the `(` matching the `)` at position `i`.
    pub fn findopen(&self, ps: &ParenSeq, i: usize) -> Result<usize> {
        if i == 0 || i > ps.len() {
            return Err(Error::PositionOutOfRange { pos: i, len: ps.len() });
        }
        if ps.bits.bit(i) {
            return Err(Error::NotAClosing { pos: i });
        }
        let target = ps.excess_raw(i) as i64;
        let chunk = (i - 1) / CHUNK_BITS;
        if let Some(j) = ps.scan_back_excess(i - 1, chunk * CHUNK_BITS, target) {
            return Ok(j + 1);
        }
        // Far closing: locate the nearest pioneer at or before i in this
        // chunk; its stored match pins down the target chunk.
        let lo = self.chunk_pioneer_start[chunk] as usize;
        let hi = self.chunk_pioneer_start[chunk + 1] as usize;
        debug_assert!(lo < hi, "far closing without a pioneer");
        let idx = lo + self.pioneer_pos[lo..hi].partition_point(|&p| p as usize <= i) - 1;
        let pioneer_match = self.pioneer_match[idx] as usize;
        if self.pioneer_pos[idx] as usize == i {
            return Ok(pioneer_match);
        }
        let target_chunk = (pioneer_match - 1) / CHUNK_BITS;
        let j = ps
            .scan_back_excess(pioneer_match - 1, target_chunk * CHUNK_BITS, target)
            .expect("match lies in the pioneer's chunk");
        Ok(j + 1)
    }

    /// Index size in bits.
    pub fn bit_size(&self) -> usize {
        (self.pioneer_pos.len() + self.pioneer_match.len() + self.chunk_pioneer_start.len()) * 32
    }

    pub fn num_pioneers(&self) -> usize {
        self.pioneer_pos.len()
    }
}
