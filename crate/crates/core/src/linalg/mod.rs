//! Dense matrices over any [`FieldSpec`]. GF(2) elimination is routed through
//! the bit-packed [`BitMatrix`]; everything else uses plain Gauss-Jordan on
//! element codes with lowest-row-index pivoting.

mod bits;
mod decompose;
mod descent;
mod text;

pub use bits::{BitEchelon, BitMatrix};
pub use decompose::{symmetric_rank_one_decomposition, RankOneDecomposition};
pub use descent::{rank_descent, DescentConstraints, DescentResult};

use crate::error::{Error, Result};
use crate::gf::FieldSpec;

#[derive(Clone, PartialEq, Eq)]
pub struct FFMatrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl std::fmt::Debug for FFMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.to_text(false))
    }
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon {
    pub matrix: FFMatrix,
    pub pivots: Vec<usize>,
}

impl FFMatrix {
    pub fn zeros(field: &FieldSpec, rows: usize, cols: usize) -> Self {
        FFMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: &FieldSpec, n: usize) -> Self {
        let mut m = FFMatrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(field: &FieldSpec, rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = FFMatrix::zeros(field, rows.len(), cols);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for (j, &v) in row.iter().enumerate() {
                if !field.contains(v) {
                    return Err(Error::InvalidField(format!(
                        "entry code {v} outside {}",
                        field.descriptor()
                    )));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        field: &FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut m = FFMatrix::zeros(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j);
            }
        }
        m
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[u32] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<u32> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> FFMatrix {
        FFMatrix::from_fn(&self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    /// Leading `rows x cols` block.
    pub fn leading_block(&self, rows: usize, cols: usize) -> FFMatrix {
        FFMatrix::from_fn(&self.field, rows, cols, |i, j| self.get(i, j))
    }

    /// Submatrix on the given row and column index lists.
    pub fn select(&self, rows: &[usize], cols: &[usize]) -> FFMatrix {
        FFMatrix::from_fn(&self.field, rows.len(), cols.len(), |i, j| {
            self.get(rows[i], cols[j])
        })
    }

    fn check_field(&self, other: &FFMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                left: self.field.descriptor(),
                right: other.field.descriptor(),
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &FFMatrix) -> Result<FFMatrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let f = &self.field;
        let mut out = FFMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b != 0 {
                        let v = f.add(out.get(i, j), f.mul(a, b));
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &FFMatrix) -> Result<FFMatrix> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Ok(FFMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn sub(&self, other: &FFMatrix) -> Result<FFMatrix> {
        let neg = other.scale(other.field.neg(1));
        self.add(&neg)
    }

    pub fn scale(&self, c: u32) -> FFMatrix {
        let f = &self.field;
        FFMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    pub fn mul_vec(&self, x: &[u32]) -> Result<Vec<u32>> {
        if x.len() != self.cols {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let f = &self.field;
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(x)
                    .fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect())
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.get(i, j) == self.get(j, i)))
    }

    /// Position of the first nonzero entry in row-major order.
    pub fn first_nonzero(&self) -> Option<(usize, usize)> {
        self.data
            .iter()
            .position(|&v| v != 0)
            .map(|k| (k / self.cols, k % self.cols))
    }

    /// Entrywise image under `f`, landing in `field`.
    pub fn map_into(&self, field: &FieldSpec, f: impl Fn(u32) -> u32) -> FFMatrix {
        FFMatrix {
            field: field.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&v| f(v)).collect(),
        }
    }

    /// Bit-packed copy; only meaningful over GF(2).
    pub fn to_bits(&self) -> Result<BitMatrix> {
        if !self.field.is_gf2() {
            return Err(Error::pre(format!(
                "bit packing needs GF(2), got {}",
                self.field.descriptor()
            )));
        }
        let mut b = BitMatrix::zeros(self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) != 0 {
                    b.set(i, j, true);
                }
            }
        }
        Ok(b)
    }

    pub fn from_bits(b: &BitMatrix) -> FFMatrix {
        FFMatrix::from_fn(&FieldSpec::gf2(), b.rows(), b.cols(), |i, j| {
            b.get(i, j) as u32
        })
    }

    pub fn rank(&self) -> usize {
        if self.field.is_gf2() {
            return self.to_bits().expect("gf2").rank();
        }
        self.rref().pivots.len()
    }

    /// Gauss-Jordan reduction with pivot rows normalised to 1.
    pub fn rref(&self) -> Echelon {
        if self.field.is_gf2() {
            let e = self.to_bits().expect("gf2").into_rref();
            return Echelon {
                matrix: FFMatrix::from_bits(&e.matrix),
                pivots: e.pivots,
            };
        }
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| m.get(i, c) != 0) else {
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
            }
            let inv = f.inv(m.get(r, c)).expect("nonzero pivot");
            for j in c..m.cols {
                let v = f.mul(m.get(r, j), inv);
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                let factor = m.get(i, c);
                if i == r || factor == 0 {
                    continue;
                }
                for j in c..m.cols {
                    let v = f.sub(m.get(i, j), f.mul(factor, m.get(r, j)));
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Echelon { matrix: m, pivots }
    }

    /// Basis of the right kernel, one vector per free column in increasing
    /// order, with that free coordinate set to 1.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        if self.field.is_gf2() {
            return self
                .to_bits()
                .expect("gf2")
                .kernel_basis()
                .into_iter()
                .map(|v| v.into_iter().map(u32::from).collect())
                .collect();
        }
        let f = &self.field;
        let ech = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &c in &ech.pivots {
            is_pivot[c] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![0u32; self.cols];
            x[free] = 1;
            for (row, &pc) in ech.pivots.iter().enumerate() {
                x[pc] = f.neg(ech.matrix.get(row, free));
            }
            basis.push(x);
        }
        basis
    }

    /// A solution of `self * x = b` with free variables set to zero.
    pub fn solve(&self, b: &[u32]) -> Result<Option<Vec<u32>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                expected: self.rows,
                found: b.len(),
            });
        }
        if self.field.is_gf2() {
            let bb: Vec<bool> = b.iter().map(|&v| v != 0).collect();
            return Ok(self
                .to_bits()?
                .solve(&bb)
                .map(|x| x.into_iter().map(u32::from).collect()));
        }
        let aug = FFMatrix::from_fn(&self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                b[i]
            }
        });
        let ech = aug.rref();
        if ech.pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![0u32; self.cols];
        for (row, &pc) in ech.pivots.iter().enumerate() {
            x[pc] = ech.matrix.get(row, self.cols);
        }
        Ok(Some(x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn gf(p: u32, e: u32) -> FieldSpec {
        FieldSpec::new(p, e, None).unwrap()
    }

    #[test]
    fn rank_examples() {
        let f = FieldSpec::gf2();
        assert_eq!(FFMatrix::zeros(&f, 2, 2).rank(), 0);
        let perm = FFMatrix::from_rows(&f, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(perm.rank(), 2);
        let ones = FFMatrix::from_fn(&f, 3, 3, |_, _| 1);
        assert_eq!(ones.rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        let f = FieldSpec::gf2();
        assert!(FFMatrix::identity(&f, 2).kernel_basis().is_empty());
        let parity = FFMatrix::from_rows(&f, &[vec![1, 1]]).unwrap();
        assert_eq!(parity.kernel_basis(), vec![vec![1, 1]]);
        let z3 = FFMatrix::zeros(&gf(3, 1), 1, 3);
        assert_eq!(z3.kernel_basis().len(), 3);
    }

    #[test]
    fn solve_over_gf5() {
        let f = gf(5, 1);
        let a = FFMatrix::from_rows(&f, &[vec![2, 1], vec![1, 4]]).unwrap();
        let x = a.solve(&[4, 0]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![4, 0]);
        let sing = FFMatrix::from_rows(&f, &[vec![1, 2], vec![2, 4]]).unwrap();
        assert!(sing.solve(&[1, 0]).unwrap().is_none());
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FFMatrix::identity(&gf(2, 1), 2);
        let b = FFMatrix::identity(&gf(3, 1), 2);
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    fn arb_matrix() -> impl Strategy<Value = FFMatrix> {
        (
            prop_oneof![Just((2u32, 1u32)), Just((2, 2)), Just((3, 1)), Just((2, 3)), Just((5, 1))],
            1usize..7,
            1usize..7,
            any::<u64>(),
        )
            .prop_map(|((p, e), r, c, seed)| {
                let f = gf(p, e);
                let q = f.order() as u64;
                let mut s = seed;
                FFMatrix::from_fn(&f, r, c, |_, _| {
                    s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((s >> 33) % q) as u32
                })
            })
    }

    proptest! {
        #[test]
        fn rank_is_transpose_invariant(m in arb_matrix()) {
            prop_assert_eq!(m.rank(), m.transpose().rank());
            prop_assert!(m.rank() <= m.rows().min(m.cols()));
        }

        #[test]
        fn kernel_vectors_are_independent_solutions(m in arb_matrix()) {
            let k = m.kernel_basis();
            prop_assert_eq!(k.len(), m.cols() - m.rank());
            for v in &k {
                prop_assert!(m.mul_vec(v).unwrap().iter().all(|&x| x == 0));
            }
            if !k.is_empty() {
                let km = FFMatrix::from_rows(m.field(), &k).unwrap();
                prop_assert_eq!(km.rank(), k.len());
            }
        }

        #[test]
        fn gf2_paths_agree_with_generic(m in arb_matrix()) {
            if m.field().is_gf2() {
                // Relabel as GF(4) entries in {0,1}: rank over the extension
                // equals rank over GF(2).
                let f4 = gf(2, 2);
                let lifted = m.map_into(&f4, |v| v);
                prop_assert_eq!(lifted.rank(), m.rank());
            }
        }
    }
}
