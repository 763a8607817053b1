//! Systematic range-minimum support for small integer sequences.
//!
//! [`SmallRmq`] stores no values. It reads them through a [`ValueAccessor`]
//! and keeps only positional metadata:
//!
//! * every 8-element *mini-block* gets a Cartesian-tree type number in
//!   `[0, 1430)`; one shared table answers all in-block queries per type;
//! * mini-blocks are gathered 16 at a time into *groups* with a packed
//!   sparse table over the group's mini-block minima;
//! * groups are gathered 256 at a time into *superblocks* (4096 mini-blocks)
//!   with a sparse table over group minima, and a final sparse table spans
//!   the superblock minima.
//!
//! A query decomposes into at most two partial mini-blocks plus a handful of
//! table entries, each resolved by one accessor probe; ties always take the
//! leftmost minimum. A flat sparse table over all mini-blocks would cost
//! `Θ(m log m)` bits; the tiered layout keeps the total near 3.4 bits per
//! element with the same constant-bounded query work.

use crate::error::{Error, Result};
use crate::intvec::FixedIntVec;
use std::sync::OnceLock;

/// Read-only access to the values a [`SmallRmq`] was built over. Indices are
/// 1-based; `value(i)` must return the same number for the same `i` for the
/// lifetime of the structure.
pub trait ValueAccessor {
    fn value(&self, i: usize) -> i64;
}

impl ValueAccessor for [i64] {
    fn value(&self, i: usize) -> i64 {
        self[i - 1]
    }
}

impl ValueAccessor for Vec<i64> {
    fn value(&self, i: usize) -> i64 {
        self[i - 1]
    }
}

impl<T: ValueAccessor + ?Sized> ValueAccessor for &T {
    fn value(&self, i: usize) -> i64 {
        (**self).value(i)
    }
}

/// Elements per mini-block.
pub const MINI: usize = 8;
/// Mini-blocks per group.
const GROUP_MINIS: usize = 16;
/// Groups per superblock.
const SUPER_GROUPS: usize = 256;
/// Mini-blocks per superblock.
const SUPER_MINIS: usize = GROUP_MINIS * SUPER_GROUPS;

/// Number of distinct mini-block types: the 8th Catalan number.
pub const NUM_TYPES: usize = 1430;
const PAIRS: usize = 36;

/// Row offsets into the 36-entry triangular `(i, j)` answer layout.
const TRI_OFF: [usize; 9] = [0, 0, 8, 15, 21, 26, 30, 33, 35];

#[inline]
fn tri(i: usize, j: usize) -> usize {
    debug_assert!(1 <= i && i <= j && j <= MINI);
    TRI_OFF[i] + (j - i)
}

/// Completion counts for the ballot ranking: `BALLOT[r][d]` is the number of
/// distinct pop sequences over `r` remaining pushes starting at stack
/// depth `d`.
static BALLOT: [[u32; 10]; 9] = build_ballot();

const fn build_ballot() -> [[u32; 10]; 9] {
    let mut f = [[0u32; 10]; 9];
    let mut d = 0;
    while d < 10 {
        f[0][d] = 1;
        d += 1;
    }
    let mut r = 1;
    while r < 9 {
        let mut d = 0;
        while d < 10 {
            let mut k = 0;
            let mut sum = 0u32;
            while k <= d && d - k + 1 < 10 {
                sum += f[r - 1][d - k + 1];
                k += 1;
            }
            f[r][d] = sum;
            d += 1;
        }
        r += 1;
    }
    f
}

/// Cartesian-tree type of a block of at most 8 values.
///
/// Two equal-length blocks receive the same number exactly when every range
/// query has the same leftmost-minimum position in both; short blocks rank
/// as if padded on the right with plus infinity.
pub fn cartesian_type(values: &[i64]) -> Result<u16> {
    if values.is_empty() {
        return Err(Error::EmptyInput);
    }
    if values.len() > MINI {
        return Err(Error::InvalidRange {
            lo: 1,
            hi: values.len(),
        });
    }
    let mut stack = [0i64; MINI];
    let mut depth = 0usize;
    let mut rank = 0u32;
    for (idx, &v) in values.iter().enumerate() {
        let rem = MINI - idx;
        let mut k = 0;
        while k < depth && stack[depth - 1 - k] > v {
            rank += BALLOT[rem - 1][depth - k + 1];
            k += 1;
        }
        depth -= k;
        stack[depth] = v;
        depth += 1;
    }
    debug_assert!((rank as usize) < NUM_TYPES);
    Ok(rank as u16)
}

/// Shared `(type, i, j) -> leftmost argmin offset` table, built on first use
/// from one representative permutation per type.
fn answer_table() -> &'static [u8] {
    static TABLE: OnceLock<Box<[u8]>> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut table = vec![0u8; NUM_TYPES * PAIRS].into_boxed_slice();
        let mut perm: [i64; MINI] = [0, 1, 2, 3, 4, 5, 6, 7];
        permute(&mut perm, 0, &mut |p| {
            let ty = cartesian_type(p).expect("full block") as usize;
            if table[ty * PAIRS] != 0 {
                return;
            }
            for i in 1..=MINI {
                for j in i..=MINI {
                    let arg = (i..=j).min_by_key(|&t| (p[t - 1], t)).unwrap();
                    table[ty * PAIRS + tri(i, j)] = arg as u8;
                }
            }
        });
        assert!(
            table.chunks(PAIRS).all(|c| c[0] != 0),
            "every type must be realized by a permutation"
        );
        table
    })
}

fn permute(vals: &mut [i64; MINI], k: usize, visit: &mut impl FnMut(&[i64; MINI])) {
    if k == MINI {
        visit(vals);
        return;
    }
    for i in k..MINI {
        vals.swap(k, i);
        permute(vals, k + 1, visit);
        vals.swap(k, i);
    }
}

/// Size of the shared answer table plus ballot counts, in bits.
pub fn shared_table_bits() -> usize {
    NUM_TYPES * PAIRS * 8 + 9 * 10 * 32
}

/// Positional range-minimum structure over `m` externally stored values.
#[derive(Debug, Clone)]
pub struct SmallRmq {
    m: usize,
    num_minis: usize,
    num_groups: usize,
    /// 11-bit type number per mini-block.
    types: FixedIntVec,
    /// Per group: 38 4-bit entries, levels 1..=4 over its mini minima.
    group_tbl: FixedIntVec,
    /// Per group: 9 12-bit entries, levels 0..=8 over group minima within
    /// the superblock (entry = mini index relative to the superblock).
    super_tbl: FixedIntVec,
    /// Per superblock: global mini index of its minimum.
    super_argmin: Vec<u32>,
    /// Per superblock: 16 16-bit entries, levels 1..=16 over superblocks.
    global_tbl: FixedIntVec,
}

/// Group-local level offsets into the 38-entry layout (levels 1..=4).
const GROUP_LEVEL_OFF: [usize; 5] = [0, 0, 15, 28, 37];
const GROUP_TBL_STRIDE: usize = 38;
const SUPER_TBL_STRIDE: usize = 9;
const GLOBAL_LEVELS: usize = 16;

struct Best {
    val: i64,
    pos: usize,
}

impl Best {
    fn new() -> Self {
        Best {
            val: i64::MAX,
            pos: usize::MAX,
        }
    }

    #[inline]
    fn offer<A: ValueAccessor + ?Sized>(&mut self, acc: &A, pos: usize) {
        let v = acc.value(pos);
        if v < self.val || (v == self.val && pos < self.pos) {
            self.val = v;
            self.pos = pos;
        }
    }
}

impl SmallRmq {
    pub fn build<A: ValueAccessor + ?Sized>(acc: &A, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::EmptyInput);
        }
        let num_minis = m.div_ceil(MINI);
        let num_groups = num_minis.div_ceil(GROUP_MINIS);
        let num_supers = num_groups.div_ceil(SUPER_GROUPS);
        assert!(num_supers <= 1 << 16, "sequence too long for this layout");
        answer_table();

        let mut rmq = SmallRmq {
            m,
            num_minis,
            num_groups,

            types: FixedIntVec::zeros(num_minis, 11),
            group_tbl: FixedIntVec::zeros(num_groups * GROUP_TBL_STRIDE, 4),
            super_tbl: FixedIntVec::zeros(num_groups * SUPER_TBL_STRIDE, 12),
            super_argmin: vec![0; num_supers],
            global_tbl: FixedIntVec::zeros(num_supers * GLOBAL_LEVELS, 16),
        };

        let mut vals = [0i64; MINI];
        for mini in 0..num_minis {
            let len = rmq.mini_len(mini);
            for t in 0..len {
                vals[t] = acc.value(mini * MINI + t + 1);
            }
            let ty = cartesian_type(&vals[..len]).expect("non-empty");
            rmq.types.set(mini, ty as u64);
        }

        // Group sparse tables: levels over mini-block minima, skipping the
        // identity level.
        for group in 0..num_groups {
            let base = group * GROUP_MINIS;
            let len = (num_minis - base).min(GROUP_MINIS);
            for level in 1..=4usize {
                let span = 1 << level;
                if span > len {
                    break;
                }
                for st in 0..=len - span {
                    let a = if level == 1 {
                        base + st
                    } else {
                        base + rmq.group_entry(group, level - 1, st)
                    };
                    let b = if level == 1 {
                        base + st + 1
                    } else {
                        base + rmq.group_entry(group, level - 1, st + span / 2)
                    };
                    let win = rmq.min_mini(acc, a, b);
                    rmq.group_tbl.set(
                        group * GROUP_TBL_STRIDE + GROUP_LEVEL_OFF[level] + st,
                        (win - base) as u64,
                    );
                }
            }
        }

        // Superblock sparse tables: level 0 holds each group's argmin mini;
        // higher levels combine groups.
        for sup in 0..num_supers {
            let group_base = sup * SUPER_GROUPS;
            let group_len = (num_groups - group_base).min(SUPER_GROUPS);
            let mini_base = sup * SUPER_MINIS;
            let mut best: Option<usize> = None;
            for g in 0..group_len {
                let group = group_base + g;
                let lo = group * GROUP_MINIS;
                let hi = ((group + 1) * GROUP_MINIS).min(num_minis) - 1;
                let arg = if lo == hi {
                    lo
                } else {
                    let level = (hi - lo + 1).ilog2() as usize;
                    let a = lo + rmq.group_entry(group, level, 0);
                    let b = lo + rmq.group_entry(group, level, hi + 1 - (1 << level) - lo);
                    rmq.min_mini(acc, a, b)
                };
                rmq.super_tbl
                    .set(group * SUPER_TBL_STRIDE, (arg - mini_base) as u64);
                best = Some(match best {
                    None => arg,
                    Some(cur) => rmq.min_mini(acc, cur, arg),
                });
            }
            rmq.super_argmin[sup] = best.expect("non-empty superblock") as u32;
            for level in 1..=8usize {
                let span = 1 << level;
                if span > group_len {
                    break;
                }
                for st in 0..=group_len - span {
                    let a = rmq.super_tbl.get(
                        (group_base + st) * SUPER_TBL_STRIDE + level - 1,
                    ) as usize;
                    let b = rmq.super_tbl.get(
                        (group_base + st + span / 2) * SUPER_TBL_STRIDE + level - 1,
                    ) as usize;
                    let win = rmq.min_mini(acc, mini_base + a, mini_base + b) - mini_base;
                    rmq.super_tbl
                        .set((group_base + st) * SUPER_TBL_STRIDE + level, win as u64);
                }
            }
        }

        // Global sparse table over superblock minima.
        for level in 1..=GLOBAL_LEVELS {
            let span = 1usize << level;
            if span > num_supers {
                break;
            }
            for st in 0..=num_supers - span {
                let a = if level == 1 {
                    st
                } else {
                    rmq.global_tbl.get(st * GLOBAL_LEVELS + level - 2) as usize
                };
                let b = if level == 1 {
                    st + 1
                } else {
                    rmq.global_tbl
                        .get((st + span / 2) * GLOBAL_LEVELS + level - 2)
                        as usize
                };
                let win = if rmq.min_mini(
                    acc,
                    rmq.super_argmin[a] as usize,
                    rmq.super_argmin[b] as usize,
                ) == rmq.super_argmin[a] as usize
                {
                    a
                } else {
                    b
                };
                rmq.global_tbl.set(st * GLOBAL_LEVELS + level - 1, win as u64);
            }
        }
        Ok(rmq)
    }

    pub fn len(&self) -> usize {
        self.m
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Leftmost position of the minimum value in `[i, j]`.
    pub fn query<A: ValueAccessor + ?Sized>(&self, acc: &A, i: usize, j: usize) -> Result<usize> {
        if i == 0 || i > j || j > self.m {
            return Err(Error::InvalidRange { lo: i, hi: j });
        }
        let bi = (i - 1) / MINI;
        let bj = (j - 1) / MINI;
        if bi == bj {
            return Ok(bi * MINI + self.answer(bi, i - bi * MINI, j - bi * MINI));
        }
        let mut best = Best::new();
        best.offer(acc, bi * MINI + self.answer(bi, i - bi * MINI, self.mini_len(bi)));
        best.offer(acc, bj * MINI + self.answer(bj, 1, j - bj * MINI));
        if bi + 1 <= bj - 1 {
            self.mini_span(acc, bi + 1, bj - 1, &mut best);
        }
        Ok(best.pos)
    }

    /// Structure size in bits, excluding the shared type table.
    pub fn bit_size(&self) -> usize {
        self.types.bit_size()
            + self.group_tbl.bit_size()
            + self.super_tbl.bit_size()
            + self.super_argmin.len() * 32
            + self.global_tbl.bit_size()
    }

    #[inline]
    fn mini_len(&self, mini: usize) -> usize {
        (self.m - mini * MINI).min(MINI)
    }

    /// Leftmost argmin offset (1-based) of `[i, j]` within a mini-block.
    #[inline]
    fn answer(&self, mini: usize, i: usize, j: usize) -> usize {
        let ty = self.types.get(mini) as usize;
        answer_table()[ty * PAIRS + tri(i, j)] as usize
    }

    /// Element position of a mini-block's leftmost minimum.
    #[inline]
    fn mini_argmin_elem(&self, mini: usize) -> usize {
        mini * MINI + self.answer(mini, 1, self.mini_len(mini))
    }

    /// The one of two mini-blocks holding the smaller minimum (ties toward
    /// the earlier block).
    fn min_mini<A: ValueAccessor + ?Sized>(&self, acc: &A, a: usize, b: usize) -> usize {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        let va = acc.value(self.mini_argmin_elem(lo));
        let vb = acc.value(self.mini_argmin_elem(hi));
        if va <= vb {
            lo
        } else {
            hi
        }
    }

    #[inline]
    fn group_entry(&self, group: usize, level: usize, st: usize) -> usize {
        self.group_tbl
            .get(group * GROUP_TBL_STRIDE + GROUP_LEVEL_OFF[level] + st) as usize
    }

    /// Covers full mini-blocks `u..=v`.
    fn mini_span<A: ValueAccessor + ?Sized>(&self, acc: &A, u: usize, v: usize, best: &mut Best) {
        let gu = u / GROUP_MINIS;
        let gv = v / GROUP_MINIS;
        if gu == gv {
            self.offer_group_range(acc, gu, u, v, best);
            return;
        }
        let full_lo = if u % GROUP_MINIS == 0 {
            gu
        } else {
            self.offer_group_range(acc, gu, u, (gu + 1) * GROUP_MINIS - 1, best);
            gu + 1
        };
        let gv_end = ((gv + 1) * GROUP_MINIS).min(self.num_minis) - 1;
        let full_hi = if v == gv_end {
            gv
        } else {
            self.offer_group_range(acc, gv, gv * GROUP_MINIS, v, best);
            gv - 1
        };
        if full_lo <= full_hi {
            self.group_span(acc, full_lo, full_hi, best);
        }
    }

    /// Mini-blocks `u..=v` all inside group `g`: at most two table entries.
    fn offer_group_range<A: ValueAccessor + ?Sized>(
        &self,
        acc: &A,
        g: usize,
        u: usize,
        v: usize,
        best: &mut Best,
    ) {
        if u == v {
            best.offer(acc, self.mini_argmin_elem(u));
            return;
        }
        let base = g * GROUP_MINIS;
        let level = (v - u + 1).ilog2() as usize;
        let e1 = base + self.group_entry(g, level, u - base);
        best.offer(acc, self.mini_argmin_elem(e1));
        let st2 = v + 1 - (1 << level);
        if st2 != u {
            let e2 = base + self.group_entry(g, level, st2 - base);
            best.offer(acc, self.mini_argmin_elem(e2));
        }
    }

    /// Covers full groups `gu..=gv`.
    fn group_span<A: ValueAccessor + ?Sized>(&self, acc: &A, gu: usize, gv: usize, best: &mut Best) {
        let su = gu / SUPER_GROUPS;
        let sv = gv / SUPER_GROUPS;
        if su == sv {
            self.offer_super_range(acc, su, gu, gv, best);
            return;
        }
        let full_lo = if gu % SUPER_GROUPS == 0 {
            su
        } else {
            self.offer_super_range(acc, su, gu, (su + 1) * SUPER_GROUPS - 1, best);
            su + 1
        };
        let sv_end = ((sv + 1) * SUPER_GROUPS).min(self.num_groups) - 1;
        let full_hi = if gv == sv_end {
            sv
        } else {
            self.offer_super_range(acc, sv, sv * SUPER_GROUPS, gv, best);
            sv - 1
        };
        if full_lo <= full_hi {
            self.super_span(acc, full_lo, full_hi, best);
        }
    }

    /// Groups `gu..=gv` all inside superblock `s`: at most two table entries.
    fn offer_super_range<A: ValueAccessor + ?Sized>(
        &self,
        acc: &A,
        s: usize,
        gu: usize,
        gv: usize,
        best: &mut Best,
    ) {
        let mini_base = s * SUPER_MINIS;
        if gu == gv {
            let mini = mini_base + self.super_tbl.get(gu * SUPER_TBL_STRIDE) as usize;
            best.offer(acc, self.mini_argmin_elem(mini));
            return;
        }
        let base = s * SUPER_GROUPS;
        let level = (gv - gu + 1).ilog2() as usize;
        let e1 = self.super_tbl.get(gu * SUPER_TBL_STRIDE + level) as usize;
        best.offer(acc, self.mini_argmin_elem(mini_base + e1));
        let st2 = gv + 1 - (1 << level);
        if st2 != gu {
            debug_assert!(st2 >= base);
            let e2 = self.super_tbl.get(st2 * SUPER_TBL_STRIDE + level) as usize;
            best.offer(acc, self.mini_argmin_elem(mini_base + e2));
        }
    }

    /// Covers full superblocks `su..=sv`.
    fn super_span<A: ValueAccessor + ?Sized>(&self, acc: &A, su: usize, sv: usize, best: &mut Best) {
        if su == sv {
            best.offer(acc, self.mini_argmin_elem(self.super_argmin[su] as usize));
            return;
        }
        let level = (sv - su + 1).ilog2() as usize;
        let s1 = self.global_tbl.get(su * GLOBAL_LEVELS + level - 1) as usize;
        best.offer(acc, self.mini_argmin_elem(self.super_argmin[s1] as usize));
        let st2 = sv + 1 - (1 << level);
        if st2 != su {
            let s2 = self.global_tbl.get(st2 * GLOBAL_LEVELS + level - 1) as usize;
            best.offer(acc, self.mini_argmin_elem(self.super_argmin[s2] as usize));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn naive_leftmost(values: &[i64], i: usize, j: usize) -> usize {
        (i..=j).min_by_key(|&t| (values[t - 1], t)).unwrap()
    }

    #[test]
    fn ballot_counts_are_catalan() {
        // Completions from an empty stack with r pushes left = Catalan(r).
        let catalan = [1u32, 1, 2, 5, 14, 42, 132, 429, 1430];
        for (r, &c) in catalan.iter().enumerate() {
            assert_eq!(BALLOT[r][0], c, "r = {r}");
        }
    }

    #[test]
    fn three_element_blocks_have_five_types() {
        let mut seen = std::collections::BTreeSet::new();
        for a in 1..=3i64 {
            for b in 1..=3 {
                for c in 1..=3 {
                    seen.insert(cartesian_type(&[a, b, c]).unwrap());
                }
            }
        }
        assert_eq!(seen.len(), 5);
    }

    #[test]
    fn type_range_and_errors() {
        assert!(cartesian_type(&[]).is_err());
        assert!(cartesian_type(&[1; 9]).is_err());
        let mut rng = StdRng::seed_from_u64(3);
        for _ in 0..2000 {
            let len = rng.gen_range(1..=8);
            let vals: Vec<i64> = (0..len).map(|_| rng.gen_range(-4..=4)).collect();
            assert!((cartesian_type(&vals).unwrap() as usize) < NUM_TYPES);
        }
    }

    #[test]
    fn equal_types_share_all_answers() {
        let mut rng = StdRng::seed_from_u64(4);
        let blocks: Vec<Vec<i64>> = (0..400)
            .map(|_| (0..8).map(|_| rng.gen_range(-3..=3)).collect())
            .collect();
        let mut by_type: std::collections::BTreeMap<u16, &Vec<i64>> =
            std::collections::BTreeMap::new();
        for b in &blocks {
            let ty = cartesian_type(b).unwrap();
            if let Some(rep) = by_type.get(&ty) {
                for i in 1..=8 {
                    for j in i..=8 {
                        assert_eq!(
                            naive_leftmost(rep, i, j),
                            naive_leftmost(b, i, j),
                            "type {ty} blocks {rep:?} vs {b:?}"
                        );
                    }
                }
            } else {
                by_type.insert(ty, b);
            }
        }
    }

    fn check_exhaustive(values: &[i64]) {
        let rmq = SmallRmq::build(&values, values.len()).unwrap();
        for i in 1..=values.len() {
            for j in i..=values.len() {
                assert_eq!(
                    rmq.query(&values, i, j).unwrap(),
                    naive_leftmost(values, i, j),
                    "range [{i}, {j}] over {values:?}"
                );
            }
        }
    }

    #[test]
    fn exhaustive_small_lengths() {
        let mut rng = StdRng::seed_from_u64(5);
        for m in 1..=64 {
            let tie_heavy: Vec<i64> = (0..m).map(|_| rng.gen_range(0..3)).collect();
            check_exhaustive(&tie_heavy);
            let spread: Vec<i64> = (0..m).map(|_| rng.gen_range(-1000..1000)).collect();
            check_exhaustive(&spread);
        }
    }

    #[test]
    fn exhaustive_group_boundaries() {
        let mut rng = StdRng::seed_from_u64(6);
        for m in [65, 127, 128, 129, 255, 256, 257, 500, 512] {
            let vals: Vec<i64> = (0..m).map(|_| rng.gen_range(0..5)).collect();
            check_exhaustive(&vals);
        }
    }

    #[test]
    fn sampled_across_superblocks() {
        // Three superblocks' worth of elements: 8 * 16 * 256 * 3 = 98304.
        let mut rng = StdRng::seed_from_u64(7);
        let m = 3 * MINI * SUPER_MINIS + 777;
        let vals: Vec<i64> = (0..m).map(|_| rng.gen_range(-50..50)).collect();
        let rmq = SmallRmq::build(&vals, m).unwrap();
        // Sparse-table oracle, leftmost ties.
        let levels = m.ilog2() as usize + 1;
        let mut sparse: Vec<Vec<u32>> = vec![(0..m as u32).collect()];
        for l in 1..levels {
            let span = 1usize << l;
            let prev = &sparse[l - 1];
            let mut row = Vec::with_capacity(m + 1 - span);
            for st in 0..=m - span {
                let a = prev[st] as usize;
                let b = prev[st + span / 2] as usize;
                row.push(if (vals[a], a) <= (vals[b], b) { a as u32 } else { b as u32 });
            }
            sparse.push(row);
        }
        let oracle = |i: usize, j: usize| -> usize {
            let l = (j - i + 1).ilog2() as usize;
            let a = sparse[l][i - 1] as usize;
            let b = sparse[l][j - (1 << l)] as usize;
            (if (vals[a], a) <= (vals[b], b) { a } else { b }) + 1
        };
        for _ in 0..30_000 {
            let i = rng.gen_range(1..=m);
            let j = rng.gen_range(i..=m);
            assert_eq!(rmq.query(&vals, i, j).unwrap(), oracle(i, j), "[{i}, {j}]");
        }
        // Ranges pinned to superblock seams.
        for seam in [MINI * SUPER_MINIS, 2 * MINI * SUPER_MINIS] {
            for (i, j) in [(seam - 1, seam + 1), (1, seam), (seam, m), (seam + 1, seam + 2)] {
                assert_eq!(rmq.query(&vals, i, j).unwrap(), oracle(i, j));
            }
        }
    }

    #[test]
    fn query_errors() {
        let vals = vec![1i64, 2, 3];
        let rmq = SmallRmq::build(&vals, 3).unwrap();
        assert!(rmq.query(&vals, 0, 2).is_err());
        assert!(rmq.query(&vals, 2, 1).is_err());
        assert!(rmq.query(&vals, 1, 4).is_err());
        assert!(SmallRmq::build(&vals, 0).is_err());
    }

    #[test]
    fn size_stays_within_budget() {
        let mut rng = StdRng::seed_from_u64(8);
        let mut ratios = Vec::new();
        for m in [1usize << 12, 1 << 16, 1 << 20] {
            let vals: Vec<i64> = (0..m).map(|_| rng.gen_range(-100..100)).collect();
            let rmq = SmallRmq::build(&vals, m).unwrap();
            ratios.push(rmq.bit_size() as f64 / m as f64);
        }
        assert!(
            ratios.windows(2).all(|w| w[1] <= w[0] + 1e-9),
            "ratios grew: {ratios:?}"
        );
        assert!(ratios[1] <= 4.0, "budget exceeded: {ratios:?}");
        assert!(ratios[2] <= 4.0, "budget exceeded: {ratios:?}");
    }
}
