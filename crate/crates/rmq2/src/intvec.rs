//! Fixed-width packed integer arrays used by the auxiliary directories.

/// An immutable-width array of `len` unsigned integers of `width` bits each,
/// packed least-significant-bit first into 64-bit words.
#[derive(Debug, Clone, Default)]
pub struct FixedIntVec {
    words: Vec<u64>,
    len: usize,
    width: u32,
}

impl FixedIntVec {
    /// Creates a zero-filled array. `width` must be in `[1, 64]`.
    pub fn zeros(len: usize, width: u32) -> Self {
        assert!((1..=64).contains(&width), "width {width} out of range");
        let bits = len.checked_mul(width as usize).expect("size overflow");
        FixedIntVec {
            words: vec![0; bits.div_ceil(64)],
            len,
            width,
        }
    }

    /// Logical size in bits (`len * width`), ignoring the trailing word padding.
    pub fn bit_size(&self) -> usize {
        self.len * self.width as usize
    }

    pub fn get(&self, i: usize) -> u64 {
        debug_assert!(i < self.len, "index {i} out of range {}", self.len);
        let w = self.width as usize;
        let start = i * w;
        let word = start / 64;
        let off = start % 64;
        let mask = if w == 64 { u64::MAX } else { (1u64 << w) - 1 };
        let mut v = self.words[word] >> off;
        if off + w > 64 {
            v |= self.words[word + 1] << (64 - off);
        }
        v & mask
    }

    pub fn set(&mut self, i: usize, value: u64) {
        debug_assert!(i < self.len, "index {i} out of range {}", self.len);
        let w = self.width as usize;
        let mask = if w == 64 { u64::MAX } else { (1u64 << w) - 1 };
        debug_assert!(value <= mask, "value {value} wider than {w} bits");
        let start = i * w;
        let word = start / 64;
        let off = start % 64;
        self.words[word] &= !(mask << off);
        self.words[word] |= (value & mask) << off;
        if off + w > 64 {
            let spill = 64 - off;
            self.words[word + 1] &= !(mask >> spill);
            self.words[word + 1] |= (value & mask) >> spill;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_across_word_boundaries() {
        for width in [1, 3, 6, 11, 12, 16, 31, 33, 64] {
            let len = 257;
            let mut v = FixedIntVec::zeros(len, width);
            let mask = if width == 64 { u64::MAX } else { (1u64 << width) - 1 };
            let vals: Vec<u64> = (0..len)
                .map(|i| (i as u64).wrapping_mul(0x9e37_79b9_7f4a_7c15) & mask)
                .collect();
            for (i, &x) in vals.iter().enumerate() {
                v.set(i, x);
            }
            for (i, &x) in vals.iter().enumerate() {
                assert_eq!(v.get(i), x, "width {width} index {i}");
            }
            // Overwrites must not disturb the neighbours.
            v.set(100, mask);
            v.set(100, 0);
            assert_eq!(v.get(99), vals[99]);
            assert_eq!(v.get(100), 0);
            assert_eq!(v.get(101), vals[101]);
        }
    }

    #[test]
    fn bit_size_is_logical() {
        let v = FixedIntVec::zeros(10, 6);
        assert_eq!(v.bit_size(), 60);
    }
}
