//! Compile-time byte-pattern tables shared by the parenthesis scanners.
//!
//! Bit `k` of a pattern byte is the parenthesis at offset `k + 1` within the
//! byte (least-significant bit first, matching the bit-vector word layout);
//! a set bit is an opening parenthesis. The prefix excess of a pattern after
//! `t` bits is `2 * popcount(low t bits) - t`.

/// `BYTE_EXCESS_MATCH[b][d + 8]` has bit `t` (for `t` in `0..=8`) set iff the
/// prefix excess of pattern `b` after `t` bits equals `d`.
pub static BYTE_EXCESS_MATCH: [[u16; 17]; 256] = build_excess_match();

/// `BYTE_MIN[b] = (min, arg, delta)`: the minimum prefix excess of pattern
/// `b` over `t` in `1..=8`, the leftmost `t` attaining it, and the total
/// excess delta after all 8 bits.
pub static BYTE_MIN: [(i8, u8, i8); 256] = build_byte_min();

/// `LEFTMOST_ONE[b]` is the 1-based offset of the lowest set bit of `b`,
/// or 0 when `b == 0`.
pub static LEFTMOST_ONE: [u8; 256] = build_leftmost_one();

/// Prefix excess of pattern `b` after its low `t` bits.
pub const fn prefix_excess(b: u8, t: u32) -> i32 {
    let kept = if t == 0 { 0 } else { b & ((1u16 << t) - 1) as u8 };
    2 * kept.count_ones() as i32 - t as i32
}

const fn build_excess_match() -> [[u16; 17]; 256] {
    let mut out = [[0u16; 17]; 256];
    let mut b = 0usize;
    while b < 256 {
        let mut t = 0u32;
        while t <= 8 {
            let d = prefix_excess(b as u8, t);
            out[b][(d + 8) as usize] |= 1 << t;
            t += 1;
        }
        b += 1;
    }
    out
}

const fn build_byte_min() -> [(i8, u8, i8); 256] {
    let mut out = [(0i8, 0u8, 0i8); 256];
    let mut b = 0usize;
    while b < 256 {
        let mut best = i32::MAX;
        let mut arg = 0u8;
        let mut t = 1u32;
        while t <= 8 {
            let e = prefix_excess(b as u8, t);
            if e < best {
                best = e;
                arg = t as u8;
            }
            t += 1;
        }
        out[b] = (best as i8, arg, prefix_excess(b as u8, 8) as i8);
        b += 1;
    }
    out
}

const fn build_leftmost_one() -> [u8; 256] {
    let mut out = [0u8; 256];
    let mut b = 1usize;
    while b < 256 {
        out[b] = (b.trailing_zeros() + 1) as u8;
        b += 1;
    }
    out
}

/// Total size of the static pattern tables, for the size breakdowns.
pub fn table_bits() -> usize {
    (std::mem::size_of_val(&BYTE_EXCESS_MATCH)
        + std::mem::size_of_val(&BYTE_MIN)
        + std::mem::size_of_val(&LEFTMOST_ONE))
        * 8
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_prefix_excess(b: u8, t: u32) -> i32 {
        (0..t).map(|k| if b >> k & 1 == 1 { 1 } else { -1 }).sum()
    }

    #[test]
    fn prefix_excess_matches_naive() {
        for b in 0..=255u8 {
            for t in 0..=8 {
                assert_eq!(prefix_excess(b, t), naive_prefix_excess(b, t));
            }
        }
    }

    #[test]
    fn excess_match_bitmaps() {
        for b in 0..=255u8 {
            for d in -8..=8i32 {
                let bm = BYTE_EXCESS_MATCH[b as usize][(d + 8) as usize];
                for t in 0..=8u32 {
                    let hit = naive_prefix_excess(b, t) == d;
                    assert_eq!(bm >> t & 1 == 1, hit, "pattern {b:#010b} d {d} t {t}");
                }
            }
        }
    }

    #[test]
    fn byte_min_is_leftmost() {
        for b in 0..=255u8 {
            let (min, arg, delta) = BYTE_MIN[b as usize];
            let naive_min = (1..=8).map(|t| naive_prefix_excess(b, t)).min().unwrap();
            let naive_arg = (1..=8)
                .find(|&t| naive_prefix_excess(b, t) == naive_min)
                .unwrap();
            assert_eq!(min as i32, naive_min);
            assert_eq!(arg as u32, naive_arg);
            assert_eq!(delta as i32, naive_prefix_excess(b, 8));
        }
    }

    #[test]
    fn leftmost_one_offsets() {
        assert_eq!(LEFTMOST_ONE[0], 0);
        // A pattern written "1111 0000" left to right occupies the low four
        // bits, so its leftmost one is at offset 1.
        assert_eq!(LEFTMOST_ONE[0b0000_1111], 1);
        assert_eq!(LEFTMOST_ONE[0b0001_0000], 5);
        for b in 1..=255u8 {
            let off = LEFTMOST_ONE[b as usize] as u32;
            assert!(off >= 1 && b >> (off - 1) & 1 == 1);
            assert_eq!(b & ((1 << (off - 1)) - 1), 0);
        }
    }
}
