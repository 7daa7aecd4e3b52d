//! Dense bit matrices over F2.
//!
//! Rows are packed into `u64` words (at most 64 columns, far above the
//! crate's factor cap), with bit `j` holding column `j`.

/// A row-major bit matrix over F2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    rows: Vec<u64>,
    cols: usize,
}

impl BinaryMatrix {
    pub fn from_rows(rows: Vec<u64>, cols: usize) -> Self {
        assert!(cols <= 64, "at most 64 columns supported");
        let mask = if cols == 64 { !0 } else { (1u64 << cols) - 1 };
        let rows = rows.into_iter().map(|r| r & mask).collect();
        Self { rows, cols }
    }

    pub fn zeros(nrows: usize, cols: usize) -> Self {
        Self::from_rows(vec![0; nrows], cols)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.rows[i] >> j) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        if value {
            self.rows[i] |= 1 << j;
        } else {
            self.rows[i] &= !(1 << j);
        }
    }

    pub fn row_bits(&self, i: usize) -> u64 {
        self.rows[i]
    }

    /// Rank over F2 by Gaussian elimination on a scratch copy.
    pub fn rank(&self) -> usize {
        let mut rows = self.rows.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&i| (rows[i] >> col) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && (*row >> col) & 1 == 1 {
                    *row ^= pivot_row;
                }
            }
            rank += 1;
        }
        rank
    }

    /// Basis of `{c : M c = 0}`, one vector per free column of the reduced
    /// row-echelon form, in increasing free-column order.
    pub fn kernel_basis(&self) -> Vec<u64> {
        let mut rows = self.rows.clone();
        let mut pivots: Vec<usize> = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(pivot) = (rank..rows.len()).find(|&i| (rows[i] >> col) & 1 == 1) else {
                continue;
            };
            rows.swap(rank, pivot);
            let pivot_row = rows[rank];
            for (i, row) in rows.iter_mut().enumerate() {
                if i != rank && (*row >> col) & 1 == 1 {
                    *row ^= pivot_row;
                }
            }
            pivots.push(col);
            rank += 1;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|c| !pivots.contains(c)) {
            let mut v = 1u64 << free;
            for (i, &pc) in pivots.iter().enumerate() {
                if (rows[i] >> free) & 1 == 1 {
                    v |= 1 << pc;
                }
            }
            basis.push(v);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_identity() {
        let m = BinaryMatrix::from_rows(vec![0b0001, 0b0010, 0b0100, 0b1000], 4);
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn rank_zero() {
        assert_eq!(BinaryMatrix::zeros(3, 5).rank(), 0);
    }

    #[test]
    fn rank_dependent_rows() {
        let m = BinaryMatrix::from_rows(vec![0b011, 0b101, 0b110], 3);
        // row3 = row1 xor row2
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_of_full_rank_is_empty() {
        let m = BinaryMatrix::from_rows(vec![0b01, 0b10], 2);
        assert!(m.kernel_basis().is_empty());
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = vec![0b10110, 0b01101, 0b11011, 0b00111];
        let m = BinaryMatrix::from_rows(rows.clone(), 5);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 5 - m.rank());
        for v in basis {
            for r in &rows {
                assert_eq!((r & v).count_ones() % 2, 0);
            }
        }
    }
}
