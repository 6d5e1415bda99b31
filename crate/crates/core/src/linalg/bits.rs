//! Bit-packed GF(2) matrices. Row `i`, column `j` lives in bit `j % 64` of
//! word `j / 64` of row `i`.

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

/// Reduced row echelon form of a [`BitMatrix`].
#[derive(Clone, Debug)]
pub struct BitEchelon {
    pub matrix: BitMatrix,
    pub pivots: Vec<usize>,
}

#[inline]
fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = words_for(cols);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BitMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r * self.words + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        let mask = 1u64 << (c % 64);
        if v {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.words + c / 64] ^= 1u64 << (c % 64);
    }

    #[inline]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.words..(r + 1) * self.words]
    }

    /// `row[dst] ^= words`
    #[inline]
    pub fn xor_into_row(&mut self, dst: usize, words: &[u64]) {
        let row = &mut self.data[dst * self.words..(dst + 1) * self.words];
        for (a, b) in row.iter_mut().zip(words) {
            *a ^= *b;
        }
    }

    fn xor_rows(&mut self, dst: usize, src: usize) {
        debug_assert_ne!(dst, src);
        let w = self.words;
        let (lo, hi) = if dst < src { (dst, src) } else { (src, dst) };
        let (head, tail) = self.data.split_at_mut(hi * w);
        let (a, b) = (&mut head[lo * w..(lo + 1) * w], &mut tail[..w]);
        if dst < src {
            a.iter_mut().zip(b.iter()).for_each(|(x, y)| *x ^= *y);
        } else {
            b.iter_mut().zip(a.iter()).for_each(|(x, y)| *x ^= *y);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for k in 0..self.words {
            self.data.swap(a * self.words + k, b * self.words + k);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn is_symmetric(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    t.set(j, i, true);
                }
            }
        }
        t
    }

    /// In-place reduction to reduced row echelon form; pivots are chosen at the
    /// lowest available row index, scanning columns left to right.
    pub fn into_rref(mut self) -> BitEchelon {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_rows(i, r);
                }
            }
            pivots.push(c);
            r += 1;
        }
        BitEchelon {
            matrix: self,
            pivots,
        }
    }

    /// Rank by forward elimination only.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c)) else {
                continue;
            };
            m.swap_rows(r, p);
            for i in r + 1..m.rows {
                if m.get(i, c) {
                    m.xor_rows(i, r);
                }
            }
            r += 1;
        }
        r
    }

    /// Kernel basis, one vector per free column in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vec<bool>> {
        let ech = self.clone().into_rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &c) in ech.pivots.iter().enumerate() {
                v[c] = Some(row);
            }
            v
        };
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut x = vec![false; self.cols];
            x[free] = true;
            for (row, &pc) in ech.pivots.iter().enumerate() {
                if ech.matrix.get(row, free) {
                    x[pc] = true;
                }
            }
            basis.push(x);
        }
        basis
    }

    /// One solution of `self * x = b` (free variables zero), if consistent.
    pub fn solve(&self, b: &[bool]) -> Option<Vec<bool>> {
        assert_eq!(b.len(), self.rows);
        let mut aug = BitMatrix::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    aug.set(i, j, true);
                }
            }
            aug.set(i, self.cols, b[i]);
        }
        let ech = aug.into_rref();
        if ech.pivots.last() == Some(&self.cols) {
            return None;
        }
        let mut x = vec![false; self.cols];
        for (row, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.matrix.get(row, self.cols);
        }
        Some(x)
    }

    pub fn mul_vec(&self, x: &[bool]) -> Vec<bool> {
        assert_eq!(x.len(), self.cols);
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| x[j] && self.get(i, j)).count() % 2 == 1)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(BitMatrix::zeros(2, 2).rank(), 0);
        let mut swap = BitMatrix::zeros(2, 2);
        swap.set(0, 1, true);
        swap.set(1, 0, true);
        assert_eq!(swap.rank(), 2);
        let mut ones = BitMatrix::zeros(3, 3);
        for i in 0..3 {
            for j in 0..3 {
                ones.set(i, j, true);
            }
        }
        assert_eq!(ones.rank(), 1);
    }

    #[test]
    fn wide_rows_cross_word_boundaries() {
        let mut m = BitMatrix::zeros(3, 130);
        m.set(0, 0, true);
        m.set(0, 129, true);
        m.set(1, 64, true);
        m.set(2, 0, true);
        m.set(2, 64, true);
        m.set(2, 129, true);
        assert_eq!(m.rank(), 2);
        let k = m.kernel_basis();
        assert_eq!(k.len(), 128);
        for v in &k {
            assert!(m.mul_vec(v).iter().all(|&b| !b));
        }
    }

    #[test]
    fn solve_detects_inconsistency() {
        let mut m = BitMatrix::zeros(2, 2);
        m.set(0, 0, true);
        m.set(1, 0, true);
        assert!(m.solve(&[true, false]).is_none());
        assert_eq!(m.solve(&[true, true]).unwrap(), vec![true, false]);
    }
}
