//! Construction of the parenthesis sequence from a value array.
//!
//! The array is scanned right to left while a monotone stack of positions
//! tracks, at step `i`, exactly those `j > i` whose parent is not yet known.
//! The stack lives in a bit vector `S'` (bit `v` set iff position `v` is on
//! the stack) plus two small skip tables, so the whole build runs in one
//! machine word per element beyond the output bits:
//!
//! * `M`, per `s`-bit block: the block, relative to its superblock, holding
//!   the next set bit to the right, or 0 when that bit lies beyond the
//!   superblock;
//! * `M'`, per `s²`-bit superblock: the absolute block holding the next set
//!   bit beyond the superblock.
//!
//! Both tables are written only on push, for the pushed position's own block
//! and superblock; the restoration order of a stack guarantees the entries
//! are fresh whenever a pop consults them. A 256-entry byte table finds the
//! lowest set bit within a block.

use crate::aux_rmq::ValueAccessor;
use crate::bitvec::BitVector;
use crate::error::{Error, Result};
use crate::intvec::FixedIntVec;
use crate::parens::ParenSeq;
use crate::tables::LEFTMOST_ONE;

/// Which position a query reports when several hold the minimum value.
///
/// The choice is fixed at construction time: `Rightmost` keeps equal values
/// on the stack (pops strictly greater entries), `Leftmost` pops them too.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TiePolicy {
    Rightmost,
    Leftmost,
}

const NO_SUPER: u32 = u32::MAX;
const DEFAULT_BLOCK: usize = 64;

/// Monotone stack of positions from `[1, cap]`, stored as one bit per
/// possible position. Pushes must be strictly decreasing.
#[derive(Debug)]
pub struct SuccinctStack {
    bits: BitVector,
    /// Block size in bits; superblocks span `s * s` bits.
    s: usize,
    blocks_per_super: usize,
    m: FixedIntVec,
    mprime: Vec<u32>,
    top: Option<usize>,
    len: usize,
}

impl SuccinctStack {
    pub fn new(cap: usize) -> Self {
        Self::with_block_size(cap, DEFAULT_BLOCK)
    }

    /// Same structure with an explicit block size (tests exercise tiny
    /// blocks to force the skip-table paths).
    pub fn with_block_size(cap: usize, s: usize) -> Self {
        assert!(s >= 2 && s <= 64, "block size out of range");
        let num_blocks = cap.div_ceil(s);
        let num_supers = cap.div_ceil(s * s);
        let width = usize::BITS as usize - (s - 1).leading_zeros() as usize;
        SuccinctStack {
            bits: BitVector::zeros(cap),
            s,
            blocks_per_super: s,
            m: FixedIntVec::zeros(num_blocks, width.max(1) as u32),
            mprime: vec![NO_SUPER; num_supers],
            top: None,
            len: 0,
        }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Smallest position currently held.
    pub fn top(&self) -> Option<usize> {
        self.top
    }

    #[inline]
    fn block_of(&self, pos: usize) -> usize {
        (pos - 1) / self.s
    }

    #[inline]
    fn super_of(&self, pos: usize) -> usize {
        (pos - 1) / (self.s * self.s)
    }

    pub fn push(&mut self, i: usize) -> Result<()> {
        if i == 0 || i > self.bits.len() {
            return Err(Error::PositionOutOfRange {
                pos: i,
                len: self.bits.len(),
            });
        }
        match self.top {
            Some(t) if i >= t => return Err(Error::StackOrder { pushed: i, top: t }),
            Some(t) => {
                let (bi, bt) = (self.block_of(i), self.block_of(t));
                if bi != bt {
                    let sup = self.super_of(i);
                    let super_base = sup * self.blocks_per_super;
                    if bt < super_base + self.blocks_per_super {
                        self.m.set(bi, (bt - super_base) as u64);
                    } else {
                        self.m.set(bi, 0);
                        self.mprime[sup] = bt as u32;
                    }
                }
            }
            None => {
                let sup = self.super_of(i);
                self.m.set(self.block_of(i), 0);
                self.mprime[sup] = NO_SUPER;
            }
        }
        self.bits.set(i, true);
        self.top = Some(i);
        self.len += 1;
        Ok(())
    }

    pub fn pop(&mut self) -> Result<usize> {
        let j = self.top.ok_or(Error::StackUnderflow)?;
        self.bits.set(j, false);
        self.len -= 1;
        let block_end = ((self.block_of(j) + 1) * self.s).min(self.bits.len());
        self.top = match self.find_one(j + 1, block_end) {
            Some(next) => Some(next),
            None => {
                let r = self.m.get(self.block_of(j)) as usize;
                let target = if r != 0 {
                    Some(self.super_of(j) * self.blocks_per_super + r)
                } else {
                    match self.mprime[self.super_of(j)] {
                        NO_SUPER => None,
                        b => Some(b as usize),
                    }
                };
                target.map(|b| {
                    let found =
                        self.find_one(b * self.s + 1, ((b + 1) * self.s).min(self.bits.len()));
                    debug_assert!(found.is_some(), "skip table pointed at an empty block");
                    found.expect("skip tables are fresh at pop time")
                })
            }
        };
        Ok(j)
    }

    /// Lowest set position in the inclusive range, through byte probes.
    fn find_one(&self, lo: usize, hi: usize) -> Option<usize> {
        if lo > hi {
            return None;
        }
        let lo_byte = (lo - 1) / 8;
        let hi_byte = (hi - 1) / 8;
        for idx in lo_byte..=hi_byte {
            let mut pat = self.bits.byte(idx);
            let base = idx * 8; // byte covers positions base+1 ..= base+8
            if idx == lo_byte {
                pat &= !0u8 << (lo - 1 - base);
            }
            if idx == hi_byte && hi - base < 8 {
                pat &= (1u8 << (hi - base)) - 1;
            }
            if pat != 0 {
                return Some(base + LEFTMOST_ONE[pat as usize] as usize);
            }
        }
        None
    }

    /// Bits held by the stack, excluding the shared byte table.
    pub fn bit_size(&self) -> usize {
        self.bits.bit_size() + self.m.bit_size() + self.mprime.len() * 32
    }
}

/// Builds the parenthesis encoding of the min-heap ordering of `A[1..=n]`,
/// reading each value exactly once, from index `n` down to 1.
///
/// The output has length `2(n + 1)`: a leading open parenthesis, then one
/// run of opens (one per child) followed by a close for every node in label
/// order, labels 0 (the virtual root holding minus infinity) through `n`.
pub fn build_dfuds<A: ValueAccessor + ?Sized>(acc: &A, n: usize, tie: TiePolicy) -> Result<ParenSeq> {
    if n == 0 {
        return Err(Error::EmptyInput);
    }
    let total = 2 * (n + 1);
    let mut bits = BitVector::zeros(total);
    // Next position to write, moving right to left.
    let mut cursor = total;
    let mut stack = SuccinctStack::new(n);
    // A values mirroring the stack; grows with stack depth only.
    let mut vals: Vec<i64> = Vec::new();
    for i in (1..=n).rev() {
        cursor -= 1; // this node's close, already zero
        let a = acc.value(i);
        while let Some(&t) = vals.last() {
            let pops = match tie {
                TiePolicy::Rightmost => t > a,
                TiePolicy::Leftmost => t >= a,
            };
            if !pops {
                break;
            }
            stack.pop().expect("mirrored stacks agree");
            vals.pop();
            bits.set(cursor, true); // one child edge of node i
            cursor -= 1;
        }
        stack.push(i).expect("scan pushes strictly decreasing");
        vals.push(a);
    }
    cursor -= 1; // the root's close
    while stack.pop().is_ok() {
        vals.pop();
        bits.set(cursor, true);
        cursor -= 1;
    }
    debug_assert_eq!(cursor, 1);
    bits.set(cursor, true); // leading open
    Ok(ParenSeq::new_unchecked(bits))
}
