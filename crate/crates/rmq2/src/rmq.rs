//! The user-facing range-minimum index.
//!
//! [`RmqIndex`] holds the `2(n+1)`-bit parenthesis encoding of the value
//! array's min-heap ordering plus sublinear directories; the array itself is
//! discarded at build time and no query ever consults it. A minimum position
//! is recovered purely from parenthesis arithmetic: two selects to bracket
//! the query range, one excess range minimum, one `findopen`, two ranks.
//!
//! The same structure answers parent and lowest-common-ancestor queries on
//! the underlying tree, and serializes to a minimal canonical container —
//! only the parenthesis bits, `n`, and the tie policy are stored;
//! directories are rebuilt on load.

use crate::aux_rmq::{self, ValueAccessor};
use crate::bitvec::BitVector;
use crate::builder::{build_dfuds, TiePolicy};
use crate::error::{Error, Result};
use crate::parens::{FindOpenIndex, ParenSeq};
use crate::pm1rmq::ExcessRmqIndex;
use crate::tables;

const MAGIC: [u8; 4] = *b"RMQ2";
const VERSION: u16 = 1;
const FLAG_LEFTMOST: u16 = 1;

/// Non-systematic range-minimum index over a value array of length `n`.
#[derive(Debug)]
pub struct RmqIndex {
    seq: ParenSeq,
    fo: FindOpenIndex,
    erm: ExcessRmqIndex,
    n: usize,
    tie: TiePolicy,
}

/// Per-component bit counts of one index.
#[derive(Debug, Clone, Copy)]
pub struct SizeBreakdown {
    pub n: usize,
    /// The parenthesis payload: exactly `2(n + 1)`.
    pub dfuds_bits: usize,
    pub rank_select_bits: usize,
    pub findopen_bits: usize,
    pub excess_block_bits: usize,
    pub small_rmq_bits: usize,
    /// Constant shared lookup tables, counted once per process.
    pub shared_table_bits: usize,
}

impl SizeBreakdown {
    /// All components, in reporting order.
    pub fn components(&self) -> [(&'static str, usize); 6] {
        [
            ("dfuds", self.dfuds_bits),
            ("rank_select", self.rank_select_bits),
            ("findopen", self.findopen_bits),
            ("excess_blocks", self.excess_block_bits),
            ("small_rmq", self.small_rmq_bits),
            ("shared_tables", self.shared_table_bits),
        ]
    }

    pub fn total_bits(&self) -> usize {
        self.components().iter().map(|(_, b)| b).sum()
    }

    /// Everything except the parenthesis payload.
    pub fn aux_bits(&self) -> usize {
        self.total_bits() - self.dfuds_bits
    }

    pub fn bits_per_element(&self) -> f64 {
        self.total_bits() as f64 / self.n as f64
    }
}

impl RmqIndex {
    /// Builds the index over `A[1..=n]`, reading each value exactly once in
    /// decreasing index order.
    pub fn build<A: ValueAccessor + ?Sized>(acc: &A, n: usize, tie: TiePolicy) -> Result<Self> {
        let seq = build_dfuds(acc, n, tie)?;
        Self::assemble(seq, n, tie)
    }

    fn assemble(seq: ParenSeq, n: usize, tie: TiePolicy) -> Result<Self> {
        let fo = FindOpenIndex::build(&seq);
        let erm = ExcessRmqIndex::build(&seq)?;
        Ok(RmqIndex {
            seq,
            fo,
            erm,
            n,
            tie,
        })
    }

    /// Length of the original array.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn tie(&self) -> TiePolicy {
        self.tie
    }

    /// The underlying parenthesis sequence.
    pub fn paren_seq(&self) -> &ParenSeq {
        &self.seq
    }

    /// Position of the minimum of `A[i..=j]`; the rightmost such position
    /// under [`TiePolicy::Rightmost`], the leftmost under
    /// [`TiePolicy::Leftmost`].
    pub fn query(&self, i: usize, j: usize) -> Result<usize> {
        if i == 0 || i > j || j > self.n {
            return Err(Error::InvalidRange { lo: i, hi: j });
        }
        if i == j {
            return Ok(i);
        }
        // `i + 1 <= n + 1` and the sequence has `n + 1` closes, so the
        // unchecked directory calls below stay in range.
        let x = self.seq.select_close_raw(i + 1);
        let y = self.seq.select_close_raw(j);
        let w = self.erm.excess_rmq(&self.seq, x, y)?;
        let open = self.fo.findopen(&self.seq, w)?;
        if self.seq.rank_close_raw(open) == i {
            Ok(i)
        } else {
            Ok(self.seq.rank_close_raw(w))
        }
    }

    /// Preorder label of `v`'s parent; label 0 is the root.
    pub fn parent(&self, v: usize) -> Result<usize> {
        if v == 0 || v > self.n {
            return Err(Error::LabelOutOfRange { label: v, n: self.n });
        }
        let pos = self.seq.select_close_raw(v);
        let open = self.fo.findopen(&self.seq, pos)?;
        Ok(self.seq.rank_close_raw(open))
    }

    /// Lowest common ancestor of labels `i` and `j` (0 through `n`).
    pub fn lca(&self, i: usize, j: usize) -> Result<usize> {
        if i > self.n {
            return Err(Error::LabelOutOfRange { label: i, n: self.n });
        }
        if j > self.n {
            return Err(Error::LabelOutOfRange { label: j, n: self.n });
        }
        if i == j {
            return Ok(i);
        }
        let (i, j) = (i.min(j), i.max(j));
        if i == 0 {
            return Ok(0);
        }
        let x = self.seq.select_close_raw(i + 1);
        let y = self.seq.select_close_raw(j);
        let w = self.erm.excess_rmq(&self.seq, x, y)?;
        let open = self.fo.findopen(&self.seq, w)?;
        if self.seq.rank_close_raw(open) == i {
            Ok(i)
        } else {
            self.parent(self.seq.rank_close_raw(w))
        }
    }

    pub fn size_breakdown(&self) -> SizeBreakdown {
        SizeBreakdown {
            n: self.n,
            dfuds_bits: self.seq.len(),
            rank_select_bits: self.seq.dir_bit_size(),
            findopen_bits: self.fo.bit_size(),
            excess_block_bits: self.erm.offsets_bit_size(),
            small_rmq_bits: self.erm.small_bit_size(),
            shared_table_bits: tables::table_bits() + aux_rmq::shared_table_bits(),
        }
    }

    /// Canonical byte container: magic, version, flags, `n`, parenthesis
    /// bit length, then the payload as little-endian 64-bit words.
    pub fn serialize(&self) -> Vec<u8> {
        let words = self.seq.bits().words();
        let mut out = Vec::with_capacity(24 + words.len() * 8);
        out.extend_from_slice(&MAGIC);
        out.extend_from_slice(&VERSION.to_le_bytes());
        let flags: u16 = match self.tie {
            TiePolicy::Rightmost => 0,
            TiePolicy::Leftmost => FLAG_LEFTMOST,
        };
        out.extend_from_slice(&flags.to_le_bytes());
        out.extend_from_slice(&(self.n as u64).to_le_bytes());
        out.extend_from_slice(&(self.seq.len() as u64).to_le_bytes());
        for w in words {
            out.extend_from_slice(&w.to_le_bytes());
        }
        out
    }

    /// Parses a container produced by [`serialize`](Self::serialize),
    /// validates it, and rebuilds all directories.
    pub fn deserialize(bytes: &[u8]) -> Result<Self> {
        if bytes.len() < 24 {
            return Err(Error::Format(format!(
                "container truncated: {} bytes, header needs 24",
                bytes.len()
            )));
        }
        if bytes[0..4] != MAGIC {
            return Err(Error::Format(format!(
                "bad magic {:02x?}, expected {:02x?}",
                &bytes[0..4],
                MAGIC
            )));
        }
        let version = u16::from_le_bytes([bytes[4], bytes[5]]);
        if version != VERSION {
            return Err(Error::Format(format!(
                "unsupported version {version}, expected {VERSION}"
            )));
        }
        let flags = u16::from_le_bytes([bytes[6], bytes[7]]);
        if flags & !FLAG_LEFTMOST != 0 {
            return Err(Error::Format(format!("unknown flag bits {flags:#06x}")));
        }
        let tie = if flags & FLAG_LEFTMOST != 0 {
            TiePolicy::Leftmost
        } else {
            TiePolicy::Rightmost
        };
        let n = u64::from_le_bytes(bytes[8..16].try_into().unwrap()) as usize;
        let paren_bits = u64::from_le_bytes(bytes[16..24].try_into().unwrap()) as usize;
        if n == 0 {
            return Err(Error::Format("n must be at least 1".into()));
        }
        if paren_bits != 2 * n + 2 {
            return Err(Error::Format(format!(
                "paren bit length {paren_bits} does not equal 2n+2 = {}",
                2 * n + 2
            )));
        }
        let num_words = paren_bits.div_ceil(64);
        let expect = 24 + num_words * 8;
        if bytes.len() != expect {
            return Err(Error::Format(format!(
                "container is {} bytes, expected {expect}",
                bytes.len()
            )));
        }
        let words: Vec<u64> = bytes[24..]
            .chunks_exact(8)
            .map(|c| u64::from_le_bytes(c.try_into().unwrap()))
            .collect();
        let bits = BitVector::from_words(words, paren_bits)
            .map_err(|e| Error::Format(format!("paren payload: {e}")))?;
        let seq = ParenSeq::new(bits).map_err(|e| Error::Format(format!("paren payload: {e}")))?;
        Self::assemble(seq, n, tie)
    }
}
