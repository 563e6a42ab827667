//! Dense matrices over GF(2), rows packed into `u64` words.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Gf2Matrix {
    rows: usize,
    cols: usize,
    stride: usize,
    words: Vec<u64>,
}

impl Gf2Matrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let stride = cols.div_ceil(64).max(1);
        Gf2Matrix {
            rows,
            cols,
            stride,
            words: vec![0; rows * stride],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zero(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a square matrix from column bit-vectors (bit `r` of `columns[c]` is entry `(r, c)`).
    pub fn from_columns(n: usize, columns: &[u128]) -> Self {
        assert!(n <= 128 && columns.len() == n);
        Self::from_fn(n, n, |r, c| columns[c] >> r & 1 == 1)
    }

    pub fn from_rows(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        Self::from_fn(rows.len(), cols, |r, c| rows[r][c] != 0)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        assert!(r < self.rows && c < self.cols);
        self.words[r * self.stride + c / 64] >> (c % 64) & 1 == 1
    }

    pub fn set(&mut self, r: usize, c: usize, bit: bool) {
        assert!(r < self.rows && c < self.cols);
        let w = &mut self.words[r * self.stride + c / 64];
        if bit {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    /// Column `c` as a bit-vector; only for matrices with at most 128 rows.
    pub fn column(&self, c: usize) -> u128 {
        assert!(self.rows <= 128);
        (0..self.rows).fold(0, |acc, r| acc | (self.get(r, c) as u128) << r)
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.words[r * self.stride..(r + 1) * self.stride]
    }

    fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.words[r * self.stride..(r + 1) * self.stride]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let mut out = self.clone();
        for (a, b) in out.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows, "dimension mismatch");
        let mut out = Self::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    let stride = out.stride;
                    let src = &other.words[k * other.stride..(k + 1) * other.stride];
                    let dst = &mut out.words[r * stride..(r + 1) * stride];
                    for (d, s) in dst.iter_mut().zip(src) {
                        *d ^= s;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for c in 0..m.cols {
            let Some(pivot) = (rank..m.rows).find(|&r| m.get(r, c)) else {
                continue;
            };
            if pivot != rank {
                for w in 0..m.stride {
                    m.words.swap(pivot * m.stride + w, rank * m.stride + w);
                }
            }
            let pivot_row = m.row(rank).to_vec();
            for r in 0..m.rows {
                if r != rank && m.get(r, c) {
                    for (d, s) in m.row_mut(r).iter_mut().zip(&pivot_row) {
                        *d ^= s;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows)
    }

    /// `diag(self, other)`.
    pub fn block_diag(&self, other: &Self) -> Self {
        let (r0, c0) = (self.rows, self.cols);
        Self::from_fn(r0 + other.rows, c0 + other.cols, |r, c| {
            if r < r0 && c < c0 {
                self.get(r, c)
            } else if r >= r0 && c >= c0 {
                other.get(r - r0, c - c0)
            } else {
                false
            }
        })
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c) as u8).collect())
            .collect()
    }
}

impl fmt::Debug for Gf2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Gf2Matrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols)
                .map(|c| if self.get(r, c) { '1' } else { '0' })
                .collect();
            writeln!(f, "  {line}")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplication_matches_hand_computation() {
        let a = Gf2Matrix::from_rows(&[&[0, 1], &[1, 1]]);
        let b = Gf2Matrix::from_rows(&[&[1, 1], &[1, 0]]);
        assert_eq!(a.transpose().mul(&b), Gf2Matrix::identity(2));
        assert_eq!(a.pow(3), Gf2Matrix::identity(2));
        assert!(!a.pow(2).is_identity());
    }

    #[test]
    fn rank_and_kernel() {
        let m = Gf2Matrix::from_rows(&[&[1, 1, 0], &[0, 1, 1], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(m.kernel_dim(), 1);
        assert!(!m.is_invertible());
        assert!(Gf2Matrix::identity(130).is_invertible());
    }

    #[test]
    fn wide_matrices_cross_word_boundaries() {
        let n = 150;
        let shift = Gf2Matrix::from_fn(n, n, |r, c| r == (c + 1) % n);
        assert!(shift.pow(n as u64).is_identity());
        assert!(!shift.pow(n as u64 - 1).is_identity());
        assert_eq!(shift.add(&Gf2Matrix::identity(n)).rank(), n - 1);
    }

    #[test]
    fn columns_round_trip() {
        let cols = [0b011u128, 0b100, 0b110];
        let m = Gf2Matrix::from_columns(3, &cols);
        for (c, &col) in cols.iter().enumerate() {
            assert_eq!(m.column(c), col);
        }
        let d = m.block_diag(&Gf2Matrix::identity(2));
        assert_eq!(d.rows(), 5);
        assert!(d.get(4, 4) && !d.get(0, 4));
    }
}
