use super::{BitMatrix, FFMatrix};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;

/// `A = sum_i u_i u_i^T` over GF(2). Vectors are 0/1 codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankOneDecomposition {
    pub size: usize,
    pub vectors: Vec<Vec<u32>>,
    /// Rank of the source matrix.
    pub source_rank: usize,
}

impl RankOneDecomposition {
    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn outer_sum(&self) -> FFMatrix {
        let n = self.size;
        let mut m = BitMatrix::zeros(n, n);
        for u in &self.vectors {
            for i in (0..n).filter(|&i| u[i] != 0) {
                for j in (0..n).filter(|&j| u[j] != 0) {
                    m.flip(i, j);
                }
            }
        }
        FFMatrix::from_bits(&m)
    }

    /// Coordinatewise sum of the vectors.
    pub fn aggregate(&self) -> Vec<u32> {
        let mut acc = vec![0u32; self.size];
        for u in &self.vectors {
            for (a, &b) in acc.iter_mut().zip(u) {
                *a ^= b;
            }
        }
        acc
    }
}

fn words_to_vec(words: &[u64], n: usize) -> Vec<u32> {
    (0..n).map(|j| ((words[j / 64] >> (j % 64)) & 1) as u32).collect()
}

/// Peels off `a_i a_i^T` when some diagonal entry is set, otherwise the
/// three-term expansion of `a_i a_j^T + a_j a_i^T` at the first off-diagonal
/// one. Ties go to the smallest index.
pub fn symmetric_rank_one_decomposition(a: &FFMatrix) -> Result<RankOneDecomposition> {
    if !a.field().is_gf2() {
        return Err(Error::FieldMismatch {
            left: FieldSpec::gf2().descriptor(),
            right: a.field().descriptor(),
        });
    }
    if !a.is_symmetric() {
        return Err(Error::pre("matrix is not symmetric"));
    }
    let n = a.rows();
    let mut m = a.to_bits()?;
    let source_rank = m.rank();
    let mut vectors = Vec::new();
    loop {
        if let Some(i) = (0..n).find(|&i| m.get(i, i)) {
            let ai = m.row_words(i).to_vec();
            let col: Vec<usize> = (0..n).filter(|&r| m.get(r, i)).collect();
            for r in col {
                m.xor_into_row(r, &ai);
            }
            vectors.push(words_to_vec(&ai, n));
            continue;
        }
        let Some((i, j)) = (0..n).find_map(|i| (0..n).find(|&j| m.get(i, j)).map(|j| (i, j))) else {
            break;
        };
        let ai = m.row_words(i).to_vec();
        let aj = m.row_words(j).to_vec();
        let col_i: Vec<bool> = (0..n).map(|r| m.get(r, i)).collect();
        let col_j: Vec<bool> = (0..n).map(|r| m.get(r, j)).collect();
        for r in 0..n {
            if col_i[r] {
                m.xor_into_row(r, &aj);
            }
            if col_j[r] {
                m.xor_into_row(r, &ai);
            }
        }
        let vi = words_to_vec(&ai, n);
        let vj = words_to_vec(&aj, n);
        let sum = vi.iter().zip(&vj).map(|(x, y)| x ^ y).collect();
        vectors.extend([vi, vj, sum]);
    }
    if vectors.len() > 3 * source_rank / 2 {
        return Err(Error::internal(format!(
            "decomposition used {} terms for rank {source_rank}",
            vectors.len()
        )));
    }
    Ok(RankOneDecomposition {
        size: n,
        vectors,
        source_rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn m(rows: &[Vec<u32>]) -> FFMatrix {
        FFMatrix::from_rows(&FieldSpec::gf2(), rows).unwrap()
    }

    #[test]
    fn examples() {
        let z = symmetric_rank_one_decomposition(&m(&[vec![0, 0], vec![0, 0]])).unwrap();
        assert!(z.is_empty());

        let e = symmetric_rank_one_decomposition(&m(&[vec![1, 0], vec![0, 0]])).unwrap();
        assert_eq!(e.vectors, vec![vec![1, 0]]);

        let swap = m(&[vec![0, 1], vec![1, 0]]);
        let d = symmetric_rank_one_decomposition(&swap).unwrap();
        // columns a_0 = (0,1) and a_1 = (1,0), then their sum
        assert_eq!(d.vectors, vec![vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(d.outer_sum(), swap);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(symmetric_rank_one_decomposition(&m(&[vec![0, 1], vec![0, 0]])).is_err());
        let f3 = FieldSpec::prime(3).unwrap();
        assert!(symmetric_rank_one_decomposition(&FFMatrix::identity(&f3, 2)).is_err());
    }

    #[test]
    fn random_round_trip() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let n = rng.gen_range(1..=40);
            let mut a = FFMatrix::zeros(&FieldSpec::gf2(), n, n);
            for i in 0..n {
                for j in i..n {
                    let v = rng.gen_bool(0.3) as u32;
                    a.set(i, j, v);
                    a.set(j, i, v);
                }
            }
            let d = symmetric_rank_one_decomposition(&a).unwrap();
            assert_eq!(d.outer_sum(), a);
            assert!(d.len() <= 3 * a.rank() / 2);
            assert!(d.outer_sum().rank() <= d.len());
        }
    }
}
