//! Reference arithmetic for the integration tests, written without touching
//! the library's field or elimination code.

#![allow(dead_code)]

use rankgap::{FFMatrix, FieldSpec, Subset};

/// Schoolbook GF(p^e) on base-p digit codes, reducing by the given modulus.
#[derive(Clone, Debug)]
pub struct RefField {
    pub p: u64,
    pub e: usize,
    /// Monic modulus, low-to-high, length e + 1.
    pub modulus: Vec<u64>,
}

impl RefField {
    pub fn of(f: &FieldSpec) -> RefField {
        RefField {
            p: f.characteristic() as u64,
            e: f.degree() as usize,
            modulus: f.modulus().iter().map(|&c| c as u64).collect(),
        }
    }

    pub fn order(&self) -> u64 {
        self.p.pow(self.e as u32)
    }

    fn digits(&self, mut x: u64) -> Vec<u64> {
        (0..self.e)
            .map(|_| {
                let d = x % self.p;
                x /= self.p;
                d
            })
            .collect()
    }

    fn code(&self, digits: &[u64]) -> u64 {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.digits(a), self.digits(b));
        let s: Vec<u64> = x.iter().zip(&y).map(|(u, v)| (u + v) % self.p).collect();
        self.code(&s)
    }

    pub fn neg(&self, a: u64) -> u64 {
        let s: Vec<u64> = self.digits(a).iter().map(|&u| (self.p - u) % self.p).collect();
        self.code(&s)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let (x, y) = (self.digits(a), self.digits(b));
        let mut prod = vec![0u64; 2 * self.e];
        for i in 0..self.e {
            for j in 0..self.e {
                prod[i + j] = (prod[i + j] + x[i] * y[j]) % self.p;
            }
        }
        for k in (self.e..prod.len()).rev() {
            let c = prod[k];
            if c != 0 {
                for i in 0..=self.e {
                    let idx = k - self.e + i;
                    prod[idx] = (prod[idx] + self.p * self.p - c * self.modulus[i] % self.p) % self.p;
                }
            }
        }
        self.code(&prod[..self.e])
    }

    pub fn inv(&self, a: u64) -> u64 {
        (1..self.order())
            .find(|&b| self.mul(a, b) == 1)
            .expect("nonzero element")
    }

    pub fn rank(&self, rows: &[Vec<u64>]) -> usize {
        let mut m: Vec<Vec<u64>> = rows.to_vec();
        let cols = m.first().map_or(0, |r| r.len());
        let mut rank = 0;
        for c in 0..cols {
            let Some(piv) = (rank..m.len()).find(|&r| m[r][c] != 0) else {
                continue;
            };
            m.swap(rank, piv);
            let inv = self.inv(m[rank][c]);
            let prow: Vec<u64> = m[rank].iter().map(|&v| self.mul(v, inv)).collect();
            for r in 0..m.len() {
                if r != rank && m[r][c] != 0 {
                    let f = m[r][c];
                    for k in 0..cols {
                        m[r][k] = self.add(m[r][k], self.neg(self.mul(f, prow[k])));
                    }
                }
            }
            m[rank] = prow;
            rank += 1;
        }
        rank
    }
}

pub fn rank_of(m: &FFMatrix) -> usize {
    let f = RefField::of(m.field());
    let rows: Vec<Vec<u64>> = m
        .to_rows()
        .into_iter()
        .map(|r| r.into_iter().map(u64::from).collect())
        .collect();
    f.rank(&rows)
}

pub fn binom(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `a^S` for a 0/1 point indexed by symbol.
pub fn monomial_at(s: Subset, point_of: impl Fn(usize) -> u32) -> u32 {
    s.elems().all(|i| point_of(i) == 1) as u32
}

/// `sum_j c_j y_{i_j}` for a sparse constraint row.
pub fn row_value(f: &RefField, row: &[(usize, u32)], y: &[u32]) -> u64 {
    row.iter()
        .fold(0, |acc, &(i, c)| f.add(acc, f.mul(c as u64, y[i] as u64)))
}
