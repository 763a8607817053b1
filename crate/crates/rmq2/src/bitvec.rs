//! Plain bit vectors with constant-time rank and select.
//!
//! Positions are 1-based throughout: bit `k` of a vector lives at bit offset
//! `(k - 1) % 64` of word `(k - 1) / 64`, and any trailing bits of the last
//! word are kept zero so that equal vectors have equal word images.
//!
//! [`RankSelectDirectory`] adds the classic two-level counting directory:
//! cumulative one-counts per 4096-bit superblock, 16-bit relative counts per
//! 512-bit block, and sampled positions of every 8192th one and zero to
//! narrow select queries before the directory walk. The directory is derived
//! data: it is rebuilt from the payload whenever a container is loaded and is
//! never serialized.

use crate::error::{Error, Result};

const SUPER_BITS: usize = 1 << 12;
const BLOCK_BITS: usize = 512;
const WORDS_PER_BLOCK: usize = BLOCK_BITS / 64;
const BLOCKS_PER_SUPER: usize = SUPER_BITS / BLOCK_BITS;
const SELECT_SAMPLE: usize = 8192;

/// A fixed-length sequence of bits addressed by 1-based position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BitVector {
    words: Vec<u64>,
    len: usize,
}

impl BitVector {
    /// Creates an all-zero vector of `len` bits.
    pub fn zeros(len: usize) -> Self {
        BitVector {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = BitVector::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i + 1, true);
            }
        }
        v
    }

    /// Reconstructs a vector from its word image, rejecting non-zero padding.
    pub fn from_words(words: Vec<u64>, len: usize) -> Result<Self> {
        if words.len() != len.div_ceil(64) {
            return Err(Error::Format(format!(
                "expected {} payload words for {len} bits, got {}",
                len.div_ceil(64),
                words.len()
            )));
        }
        if len % 64 != 0 {
            if let Some(&last) = words.last() {
                if last >> (len % 64) != 0 {
                    return Err(Error::Format(
                        "non-zero padding bits after the payload".into(),
                    ));
                }
            }
        }
        Ok(BitVector { words, len })
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    /// Checked 1-based access.
    pub fn get(&self, pos: usize) -> Result<bool> {
        if pos == 0 || pos > self.len {
            return Err(Error::PositionOutOfRange { pos, len: self.len });
        }
        Ok(self.bit(pos))
    }

    #[inline]
    pub(crate) fn bit(&self, pos: usize) -> bool {
        debug_assert!(pos >= 1 && pos <= self.len);
        self.words[(pos - 1) / 64] >> ((pos - 1) % 64) & 1 == 1
    }

    /// Sets bit `pos`; the builder writes the parenthesis string through this.
    pub fn set(&mut self, pos: usize, value: bool) {
        assert!(pos >= 1 && pos <= self.len, "position {pos} out of range");
        let w = (pos - 1) / 64;
        let m = 1u64 << ((pos - 1) % 64);
        if value {
            self.words[w] |= m;
        } else {
            self.words[w] &= !m;
        }
    }

    /// The byte covering positions `[8 * idx + 1, 8 * idx + 8]`; positions
    /// past the end read as zero.
    #[inline]
    pub(crate) fn byte(&self, idx: usize) -> u8 {
        debug_assert!(idx < self.len.div_ceil(8));
        (self.words[idx / 8] >> (idx % 8 * 8)) as u8
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Logical payload size in bits.
    pub fn bit_size(&self) -> usize {
        self.len
    }
}

/// Two-level rank directory with sampled select anchors.
#[derive(Debug, Clone)]
pub struct RankSelectDirectory {
    /// `super_ranks[s]`: ones strictly before superblock `s`; the final entry
    /// holds the total.
    super_ranks: Vec<u64>,
    /// `block_ranks[b]`: ones before block `b`, relative to its superblock.
    block_ranks: Vec<u16>,
    /// `select1_samples[j]`: position of the `(8192 j + 1)`-th one.
    select1_samples: Vec<u64>,
    select0_samples: Vec<u64>,
    ones: usize,
}

impl RankSelectDirectory {
    pub fn build(bv: &BitVector) -> Self {
        let num_supers = bv.len.div_ceil(SUPER_BITS);
        let num_blocks = bv.len.div_ceil(BLOCK_BITS);
        let mut super_ranks = Vec::with_capacity(num_supers + 1);
        let mut block_ranks = Vec::with_capacity(num_blocks);
        let mut select1_samples = Vec::new();
        let mut select0_samples = Vec::new();

        let mut ones = 0usize;
        let mut super_base = 0usize;
        super_ranks.push(0);
        for b in 0..num_blocks {
            if b % BLOCKS_PER_SUPER == 0 {
                super_base = ones;
                if b > 0 {
                    super_ranks.push(ones as u64);
                }
            }
            block_ranks.push((ones - super_base) as u16);
            let word_lo = b * WORDS_PER_BLOCK;
            let word_hi = ((b + 1) * WORDS_PER_BLOCK).min(bv.words.len());
            for w in word_lo..word_hi {
                let word = bv.words[w];
                let bits_here = 64.min(bv.len - w * 64);
                let pc = word.count_ones() as usize;
                let next_ones = ones + pc;
                let zeros = w * 64 - ones;
                let next_zeros = zeros + bits_here - pc;
                while select1_samples.len() * SELECT_SAMPLE < next_ones {
                    let target = (select1_samples.len() * SELECT_SAMPLE + 1 - ones) as u32;
                    let bit = select_in_word(word, target);
                    select1_samples.push((w * 64 + bit as usize + 1) as u64);
                }
                while select0_samples.len() * SELECT_SAMPLE < next_zeros {
                    let target = (select0_samples.len() * SELECT_SAMPLE + 1 - zeros) as u32;
                    let bit = select_in_word(!word, target);
                    select0_samples.push((w * 64 + bit as usize + 1) as u64);
                }
                ones = next_ones;
            }
        }
        if num_blocks == 0 {
            super_ranks.clear();
        }
        super_ranks.push(ones as u64);
        RankSelectDirectory {
            super_ranks,
            block_ranks,
            select1_samples,
            select0_samples,
            ones,
        }
    }

    pub fn ones(&self) -> usize {
        self.ones
    }

    /// Number of `b` bits in `[1, i]`; `i = 0` is allowed and yields 0.
    pub fn rank(&self, bv: &BitVector, b: bool, i: usize) -> Result<usize> {
        if i > bv.len {
            return Err(Error::PositionOutOfRange { pos: i, len: bv.len });
        }
        let r1 = self.rank1_raw(bv, i);
        Ok(if b { r1 } else { i - r1 })
    }

    /// Position of the `k`-th `b` bit, `k` in `[1, count_b]`.
    pub fn select(&self, bv: &BitVector, b: bool, k: usize) -> Result<usize> {
        let available = if b { self.ones } else { bv.len - self.ones };
        if k == 0 || k > available {
            return Err(Error::CountOutOfRange { count: k, available });
        }
        Ok(if b {
            self.select1_raw(bv, k)
        } else {
            self.select0_raw(bv, k)
        })
    }

    #[inline]
    pub(crate) fn rank1_raw(&self, bv: &BitVector, i: usize) -> usize {
        debug_assert!(i <= bv.len);
        if i == 0 {
            return 0;
        }
        let last = i - 1;
        let word = last / 64;
        let block = last / BLOCK_BITS;
        let sup = last / SUPER_BITS;
        let mut r = self.super_ranks[sup] as usize + self.block_ranks[block] as usize;
        for w in block * WORDS_PER_BLOCK..word {
            r += bv.words[w].count_ones() as usize;
        }
        let keep = last % 64 + 1;
        let mask = if keep == 64 { u64::MAX } else { (1u64 << keep) - 1 };
        r + (bv.words[word] & mask).count_ones() as usize
    }

    #[inline]
    pub(crate) fn rank0_raw(&self, bv: &BitVector, i: usize) -> usize {
        i - self.rank1_raw(bv, i)
    }

    fn select1_raw(&self, bv: &BitVector, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= self.ones);
        let anchor = self.select1_samples[(k - 1) / SELECT_SAMPLE] as usize;
        // Narrow to the superblock holding the k-th one, then walk.
        let mut lo = (anchor - 1) / SUPER_BITS;
        let mut hi = self.super_ranks.len() - 1;
        while lo + 1 < hi {
            let mid = (lo + hi) / 2;
            if (self.super_ranks[mid] as usize) < k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut remaining = k - self.super_ranks[lo] as usize;
        let block_hi = (lo * BLOCKS_PER_SUPER + BLOCKS_PER_SUPER).min(self.block_ranks.len());
        let mut block = lo * BLOCKS_PER_SUPER;
        while block + 1 < block_hi
            && (self.block_ranks[block + 1] as usize) < remaining
        {
            block += 1;
        }
        remaining -= self.block_ranks[block] as usize;
        let word_hi = ((block + 1) * WORDS_PER_BLOCK).min(bv.words.len());
        for w in block * WORDS_PER_BLOCK..word_hi {
            let pc = bv.words[w].count_ones() as usize;
            if pc >= remaining {
                return w * 64 + select_in_word(bv.words[w], remaining as u32) as usize + 1;
            }
            remaining -= pc;
        }
        unreachable!("select1 walked past its block");
    }

    fn select0_raw(&self, bv: &BitVector, k: usize) -> usize {
        debug_assert!(k >= 1 && k <= bv.len - self.ones);
        let anchor = self.select0_samples[(k - 1) / SELECT_SAMPLE] as usize;
        let mut lo = (anchor - 1) / SUPER_BITS;
        let mut hi = self.super_ranks.len() - 1;
        while lo + 1 < hi {
            let mid = (lo + hi) / 2;
            let zeros = mid * SUPER_BITS - self.super_ranks[mid] as usize;
            if zeros < k {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        let mut remaining = k - (lo * SUPER_BITS - self.super_ranks[lo] as usize);
        let block_hi = (lo * BLOCKS_PER_SUPER + BLOCKS_PER_SUPER).min(self.block_ranks.len());
        let mut block = lo * BLOCKS_PER_SUPER;
        while block + 1 < block_hi {
            let zeros = (block + 1 - lo * BLOCKS_PER_SUPER) * BLOCK_BITS
                - self.block_ranks[block + 1] as usize;
            if zeros < remaining {
                block += 1;
            } else {
                break;
            }
        }
        remaining -= (block - lo * BLOCKS_PER_SUPER) * BLOCK_BITS - self.block_ranks[block] as usize;
        let word_hi = ((block + 1) * WORDS_PER_BLOCK).min(bv.words.len());
        for w in block * WORDS_PER_BLOCK..word_hi {
            let bits_here = 64.min(bv.len - w * 64);
            let zc = bits_here - bv.words[w].count_ones() as usize;
            if zc >= remaining {
                return w * 64 + select_in_word(!bv.words[w], remaining as u32) as usize + 1;
            }
            remaining -= zc;
        }
        unreachable!("select0 walked past its block");
    }

    /// Logical directory size in bits.
    pub fn bit_size(&self) -> usize {
        self.super_ranks.len() * 64
            + self.block_ranks.len() * 16
            + (self.select1_samples.len() + self.select0_samples.len()) * 64
    }
}

/// Index (0-based) of the `k`-th set bit of `w`; `k` in `[1, popcount(w)]`.
#[inline]
fn select_in_word(w: u64, k: u32) -> u32 {
    debug_assert!(k >= 1 && k <= w.count_ones());
    let mut remaining = k;
    let mut base = 0;
    let mut cur = w;
    loop {
        let pc = (cur as u8).count_ones();
        if pc >= remaining {
            break;
        }
        remaining -= pc;
        cur >>= 8;
        base += 8;
    }
    let mut byte = cur as u8;
    for _ in 1..remaining {
        byte &= byte - 1;
    }
    base + byte.trailing_zeros()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn naive_rank(bits: &[bool], b: bool, i: usize) -> usize {
        bits[..i].iter().filter(|&&x| x == b).count()
    }

    fn naive_select(bits: &[bool], b: bool, k: usize) -> Option<usize> {
        bits.iter()
            .enumerate()
            .filter(|(_, &x)| x == b)
            .nth(k - 1)
            .map(|(i, _)| i + 1)
    }

    #[test]
    fn word_layout_is_lsb_first() {
        let mut v = BitVector::zeros(130);
        v.set(1, true);
        v.set(64, true);
        v.set(65, true);
        v.set(130, true);
        assert_eq!(v.words()[0], 1 | 1 << 63);
        assert_eq!(v.words()[1], 1);
        assert_eq!(v.words()[2], 2);
        assert!(v.get(64).unwrap());
        assert!(!v.get(2).unwrap());
    }

    #[test]
    fn from_words_rejects_dirty_padding() {
        assert!(BitVector::from_words(vec![0b111], 2).is_err());
        assert!(BitVector::from_words(vec![0b11], 2).is_ok());
        assert!(BitVector::from_words(vec![0, 0], 64).is_err());
        let v = BitVector::from_words(vec![u64::MAX], 64).unwrap();
        assert_eq!(v.count_ones(), 64);
    }

    #[test]
    fn access_errors() {
        let v = BitVector::zeros(8);
        assert_eq!(
            v.get(0),
            Err(Error::PositionOutOfRange { pos: 0, len: 8 })
        );
        assert_eq!(
            v.get(9),
            Err(Error::PositionOutOfRange { pos: 9, len: 8 })
        );
    }

    #[test]
    fn small_example() {
        // "0110": one bits at positions 2 and 3.
        let v = BitVector::from_bools(&[false, true, true, false]);
        let d = RankSelectDirectory::build(&v);
        assert_eq!(d.rank(&v, true, 2).unwrap(), 1);
        assert_eq!(d.rank(&v, true, 4).unwrap(), 2);
        assert_eq!(d.rank(&v, false, 4).unwrap(), 2);
        assert_eq!(d.rank(&v, true, 0).unwrap(), 0);
        assert_eq!(d.select(&v, true, 1).unwrap(), 2);
        assert_eq!(d.select(&v, true, 2).unwrap(), 3);
        assert_eq!(d.select(&v, false, 2).unwrap(), 4);
        assert!(d.rank(&v, true, 5).is_err());
        assert!(d.select(&v, true, 3).is_err());
        assert!(d.select(&v, true, 0).is_err());
    }

    fn check_against_naive(bits: &[bool]) {
        let v = BitVector::from_bools(bits);
        let d = RankSelectDirectory::build(&v);
        assert_eq!(d.ones(), bits.iter().filter(|&&x| x).count());
        for i in 0..=bits.len() {
            assert_eq!(d.rank(&v, true, i).unwrap(), naive_rank(bits, true, i));
            assert_eq!(d.rank(&v, false, i).unwrap(), naive_rank(bits, false, i));
        }
        for b in [true, false] {
            let total = naive_rank(bits, b, bits.len());
            for k in 1..=total {
                assert_eq!(d.select(&v, b, k).unwrap(), naive_select(bits, b, k).unwrap());
            }
            assert!(d.select(&v, b, total + 1).is_err());
        }
    }

    #[test]
    fn rank_select_match_naive_across_boundaries() {
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for len in [1usize, 2, 63, 64, 65, 511, 512, 513, 1023, 4095, 4096, 4097, 9000] {
            let random: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.5)).collect();
            check_against_naive(&random);
            let sparse: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.02)).collect();
            check_against_naive(&sparse);
            check_against_naive(&vec![true; len]);
            check_against_naive(&vec![false; len]);
            let clustered: Vec<bool> = (0..len).map(|i| i < len / 2).collect();
            check_against_naive(&clustered);
        }
    }

    #[test]
    fn select_with_skewed_runs() {
        // Long one-run then zero-run forces the sampled select walk to cross
        // many superblocks.
        let len = 3 * SUPER_BITS + 100;
        let bits: Vec<bool> = (0..len).map(|i| i < len / 2).collect();
        let v = BitVector::from_bools(&bits);
        let d = RankSelectDirectory::build(&v);
        for k in [1, len / 4, len / 2] {
            assert_eq!(d.select(&v, true, k).unwrap(), k);
            assert_eq!(d.select(&v, false, k).unwrap(), len / 2 + k);
        }
    }

    #[test]
    fn directory_overhead_does_not_grow() {
        let mut rng = StdRng::seed_from_u64(1);
        let mut ratios = Vec::new();
        for len in [1usize << 16, 1 << 20] {
            let bits: Vec<bool> = (0..len).map(|_| rng.gen_bool(0.5)).collect();
            let v = BitVector::from_bools(&bits);
            let d = RankSelectDirectory::build(&v);
            ratios.push(d.bit_size() as f64 / len as f64);
        }
        assert!(
            ratios[1] <= ratios[0] + 1e-9,
            "directory ratio grew: {ratios:?}"
        );
        assert!(ratios[0] < 0.1, "directory unexpectedly large: {ratios:?}");
    }

    use proptest::prelude::*;

    proptest! {
        /// rank is a left inverse of select, for either bit value, on any
        /// vector: the k-th b-bit really is the k-th.
        #[test]
        fn prop_rank_inverts_select(bools in proptest::collection::vec(any::<bool>(), 1..500)) {
            let v = BitVector::from_bools(&bools);
            let d = RankSelectDirectory::build(&v);
            for b in [false, true] {
                let total = d.rank(&v, b, v.len()).unwrap();
                for k in 1..=total {
                    let p = d.select(&v, b, k).unwrap();
                    prop_assert_eq!(v.get(p).unwrap(), b);
                    prop_assert_eq!(d.rank(&v, b, p).unwrap(), k);
                    prop_assert_eq!(d.rank(&v, b, p - 1).unwrap(), k - 1);
                }
                prop_assert!(d.select(&v, b, total + 1).is_err());
            }
        }

        /// The two rank counts always partition each prefix.
        #[test]
        fn prop_ranks_partition_prefixes(bools in proptest::collection::vec(any::<bool>(), 1..500)) {
            let v = BitVector::from_bools(&bools);
            let d = RankSelectDirectory::build(&v);
            for i in 0..=v.len() {
                let ones = d.rank(&v, true, i).unwrap();
                let zeros = d.rank(&v, false, i).unwrap();
                prop_assert_eq!(ones + zeros, i);
            }
        }
    }
}
