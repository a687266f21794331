//! Bit-packed rows over `F_2`: one `u64` per row, at most 64 columns.

/// Rank of a set of packed rows. The slice is used as scratch space.
#[inline]
pub fn rank_rows(rows: &mut [u64]) -> usize {
    let mut rank = 0;
    for i in 0..rows.len() {
        let pivot_row = rows[i];
        if pivot_row == 0 {
            continue;
        }
        rank += 1;
        let low = pivot_row & pivot_row.wrapping_neg();
        for r in rows[i + 1..].iter_mut() {
            if *r & low != 0 {
                *r ^= pivot_row;
            }
        }
    }
    rank
}

/// Splits a row-major vectorized `n x p` matrix (bit `i*p + j` is entry
/// `(i, j)`) into packed rows and returns its rank. Requires `n <= 8`.
#[inline]
pub fn mask_rank(mask: u64, n: usize, p: usize) -> usize {
    debug_assert!(n <= 8 && n * p <= 64);
    let row_mask = if p == 64 { u64::MAX } else { (1u64 << p) - 1 };
    let mut rows = [0u64; 8];
    for (i, r) in rows.iter_mut().enumerate().take(n) {
        *r = (mask >> (i * p)) & row_mask;
    }
    rank_rows(&mut rows[..n])
}

/// Rank lookup table over all `2^(n p)` vectorized `n x p` binary matrices.
#[derive(Debug, Clone)]
pub struct RankTable {
    n: usize,
    p: usize,
    ranks: Vec<u8>,
}

impl RankTable {
    /// Largest `n * p` for which a table is built.
    pub const MAX_BITS: usize = 20;

    pub fn new(n: usize, p: usize) -> Option<Self> {
        if n * p > Self::MAX_BITS || n > 8 {
            return None;
        }
        let ranks = (0..1u64 << (n * p))
            .map(|m| mask_rank(m, n, p) as u8)
            .collect();
        Some(RankTable { n, p, ranks })
    }

    #[inline]
    pub fn rank(&self, mask: u64) -> usize {
        self.ranks[mask as usize] as usize
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.n, self.p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_of_simple_rows() {
        assert_eq!(rank_rows(&mut []), 0);
        assert_eq!(rank_rows(&mut [0, 0]), 0);
        assert_eq!(rank_rows(&mut [0b01, 0b10]), 2);
        assert_eq!(rank_rows(&mut [0b11, 0b01, 0b10]), 2);
    }

    #[test]
    fn table_matches_direct() {
        let t = RankTable::new(2, 3).unwrap();
        for m in 0..64u64 {
            assert_eq!(t.rank(m), mask_rank(m, 2, 3));
        }
        // GL_2(F_2) has 6 elements.
        let t = RankTable::new(2, 2).unwrap();
        assert_eq!((0..16u64).filter(|&m| t.rank(m) == 2).count(), 6);
    }
}
