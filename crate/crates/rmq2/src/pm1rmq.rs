//! Range-minimum support over the excess sequence of a parenthesis string.
//!
//! The excess sequence `E[1..len]` of a balanced sequence changes by exactly
//! one per step, so a minimum inside a 64-bit block is determined by the
//! block's bit pattern alone. [`ExcessRmqIndex`] stores one 6-bit entry per
//! block — the offset of the block's leftmost minimum — and layers a
//! [`SmallRmq`] over the per-block minima, read back on demand through rank
//! calls instead of a stored value array. Total overhead is well below one
//! bit per parenthesis.

use crate::aux_rmq::{SmallRmq, ValueAccessor};
use crate::error::{Error, Result};
use crate::intvec::FixedIntVec;
use crate::parens::ParenSeq;
use crate::tables::BYTE_MIN;

/// Bits per excess block.
pub const BLOCK: usize = 64;

/// `±1`-structured range minimum index for the excess sequence of one
/// [`ParenSeq`]. Methods must be called with the sequence the index was
/// built from.
#[derive(Debug, Clone)]
pub struct ExcessRmqIndex {
    len: usize,
    num_blocks: usize,
    /// Per block: offset − 1 of the leftmost within-block excess minimum.
    offsets: FixedIntVec,
    small: SmallRmq,
}

/// Lets [`SmallRmq`] read block-minimum excess values straight out of the
/// parenthesis directory: element `b + 1` maps to `E` at block `b`'s stored
/// minimum position.
struct BlockMinAccessor<'a> {
    seq: &'a ParenSeq,
    offsets: &'a FixedIntVec,
}

impl ValueAccessor for BlockMinAccessor<'_> {
    fn value(&self, i: usize) -> i64 {
        let block = i - 1;
        self.seq
            .excess(block * BLOCK + self.offsets.get(block) as usize + 1)
            .expect("stored offset in range") as i64
    }
}

impl ExcessRmqIndex {
    pub fn build(seq: &ParenSeq) -> Result<Self> {
        let len = seq.len();
        if len == 0 {
            return Err(Error::EmptyInput);
        }
        let num_blocks = len.div_ceil(BLOCK);
        let mut offsets = FixedIntVec::zeros(num_blocks, 6);
        for b in 0..num_blocks {
            let start = b * BLOCK;
            let blen = (len - start).min(BLOCK);
            let (off, _) = scan_block_min(seq, start, 1, blen);
            offsets.set(b, (off - 1) as u64);
        }
        let acc = BlockMinAccessor {
            seq,
            offsets: &offsets,
        };
        let small = SmallRmq::build(&acc, num_blocks)?;
        Ok(ExcessRmqIndex {
            len,
            num_blocks,
            offsets,
            small,
        })
    }

    /// Stored 1-based offset of block `b`'s leftmost excess minimum.
    pub fn block_offset(&self, b: usize) -> Result<usize> {
        if b >= self.num_blocks {
            return Err(Error::PositionOutOfRange {
                pos: b,
                len: self.num_blocks,
            });
        }
        Ok(self.offsets.get(b) as usize + 1)
    }

    pub fn num_blocks(&self) -> usize {
        self.num_blocks
    }

    /// Position of the leftmost minimum of `E[x..=y]`.
    pub fn excess_rmq(&self, seq: &ParenSeq, x: usize, y: usize) -> Result<usize> {
        debug_assert_eq!(seq.len(), self.len, "index used with a foreign sequence");
        if x == 0 || x > y || y > self.len {
            return Err(Error::InvalidRange { lo: x, hi: y });
        }
        let bx = (x - 1) / BLOCK;
        let by = (y - 1) / BLOCK;
        let x_rel = x - bx * BLOCK;
        let y_rel = y - by * BLOCK;
        if bx == by {
            let (off, _) = scan_block_min(seq, bx * BLOCK, x_rel, y_rel);
            return Ok(bx * BLOCK + off);
        }
        let head_len = (self.len - bx * BLOCK).min(BLOCK);
        let (h_off, _) = scan_block_min(seq, bx * BLOCK, x_rel, head_len);
        let mut best_pos = bx * BLOCK + h_off;
        let mut best_val = seq.excess(best_pos).expect("in range");
        if bx + 1 <= by - 1 {
            let acc = BlockMinAccessor {
                seq,
                offsets: &self.offsets,
            };
            let elem = self.small.query(&acc, bx + 2, by)?;
            let block = elem - 1;
            let pos = block * BLOCK + self.offsets.get(block) as usize + 1;
            let val = seq.excess(pos).expect("in range");
            if val < best_val {
                best_val = val;
                best_pos = pos;
            }
        }
        let (t_off, _) = scan_block_min(seq, by * BLOCK, 1, y_rel);
        let t_pos = by * BLOCK + t_off;
        let t_val = seq.excess(t_pos).expect("in range");
        if t_val < best_val {
            best_pos = t_pos;
        }
        Ok(best_pos)
    }

    /// Bits held by this index, excluding the shared in-block tables.
    pub fn bit_size(&self) -> usize {
        self.offsets.bit_size() + self.small.bit_size()
    }

    /// Bits of the per-block offset array alone.
    pub fn offsets_bit_size(&self) -> usize {
        self.offsets.bit_size()
    }

    /// Bits of the layered structure over block minima.
    pub fn small_bit_size(&self) -> usize {
        self.small.bit_size()
    }
}

/// Leftmost minimum of the excess deltas at offsets `[i_rel, j_rel]` of the
/// block starting at bit `start` (offsets 1-based, `j_rel` within the
/// sequence). Returns the offset and the minimum excess relative to
/// `E[start + i_rel - 1]`.
fn scan_block_min(seq: &ParenSeq, start: usize, i_rel: usize, j_rel: usize) -> (usize, i32) {
    debug_assert!(1 <= i_rel && i_rel <= j_rel && j_rel <= BLOCK);
    let bits = seq.bits();
    let mut best_off = 0usize;
    let mut best_val = i32::MAX;
    let mut e = 0i32;
    let mut t = i_rel - 1;
    // Leading partial byte.
    while t < j_rel && t % 8 != 0 {
        e += if bits.bit(start + t + 1) { 1 } else { -1 };
        t += 1;
        if e < best_val {
            best_val = e;
            best_off = t;
        }
    }
    // Whole bytes via the precomputed per-byte minima.
    while t + 8 <= j_rel {
        let pattern = bits.byte((start + t) / 8);
        let (min, arg, delta) = BYTE_MIN[pattern as usize];
        if e + (min as i32) < best_val {
            best_val = e + min as i32;
            best_off = t + arg as usize;
        }
        e += delta as i32;
        t += 8;
    }
    // Trailing partial byte.
    while t < j_rel {
        e += if bits.bit(start + t + 1) { 1 } else { -1 };
        t += 1;
        if e < best_val {
            best_val = e;
            best_off = t;
        }
    }
    (best_off, best_val)
}
