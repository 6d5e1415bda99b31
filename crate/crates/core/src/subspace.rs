//! Matrix subspaces stored in equal-union quotient coordinates.
//!
//! A member is a coordinate vector `y` over the union basis (`U_{n,2d}` or
//! `V_{n,2d}`); the matrix it stands for is `H_d(y)[S][T] = y[S ∪ T]` with rows
//! and columns indexed by the level-`d` basis. Homogeneous linear constraints
//! on `y` cut the subspace out.

use std::sync::Arc;

use sha2::{Digest, Sha256};

use crate::boolalg::{MonomialBasis, Subset, Variant};
use crate::error::{Error, Result};
use crate::gf::FieldSpec;
use crate::linalg::FFMatrix;

/// Sparse constraint row: `(coordinate index, coefficient code)`, sorted by
/// index, no zero coefficients.
pub type ConstraintRow = Vec<(usize, u32)>;

#[derive(Clone, Debug)]
pub struct SubspaceSpec {
    field: FieldSpec,
    d: usize,
    coords: Arc<MonomialBasis>,
    constraints: Vec<ConstraintRow>,
}

/// Accumulates `coeff * y[idx]` terms into a canonical sparse row.
pub fn merge_row(field: &FieldSpec, terms: impl IntoIterator<Item = (usize, u32)>) -> ConstraintRow {
    let mut acc: std::collections::BTreeMap<usize, u32> = Default::default();
    for (i, c) in terms {
        let e = acc.entry(i).or_insert(0);
        *e = field.add(*e, c);
    }
    acc.into_iter().filter(|&(_, c)| c != 0).collect()
}

/// `H_e(y)` for coordinates `y` over `coords`; the level-`e` basis is the
/// prefix of `coords` of sets of size at most `e`.
pub fn expand(field: &FieldSpec, coords: &MonomialBasis, y: &[u32], e: usize) -> Result<FFMatrix> {
    if y.len() != coords.len() {
        return Err(Error::DimensionMismatch {
            expected: coords.len(),
            found: y.len(),
        });
    }
    if 2 * e > coords.degree() {
        return Err(Error::pre(format!(
            "level {e} needs unions of size {} but coordinates stop at {}",
            2 * e,
            coords.degree()
        )));
    }
    let n = coords.prefix_len(e);
    let sets = &coords.sets()[..n];
    let mut m = FFMatrix::zeros(field, n, n);
    for i in 0..n {
        for j in i..n {
            let u = sets[i].union(sets[j]);
            let v = y[coords.rank(u).expect("union inside the coordinate basis")];
            m.set(i, j, v);
            m.set(j, i, v);
        }
    }
    Ok(m)
}

impl SubspaceSpec {
    /// `coords` must have degree `2d`.
    pub fn new(
        field: &FieldSpec,
        d: usize,
        coords: Arc<MonomialBasis>,
        constraints: Vec<ConstraintRow>,
    ) -> Result<SubspaceSpec> {
        if coords.degree() != 2 * d {
            return Err(Error::pre(format!(
                "coordinate basis has degree {}, expected {}",
                coords.degree(),
                2 * d
            )));
        }
        for row in &constraints {
            for &(i, c) in row {
                if i >= coords.len() || !field.contains(c) {
                    return Err(Error::pre(format!("constraint entry ({i}, {c}) out of range")));
                }
            }
        }
        Ok(SubspaceSpec {
            field: field.clone(),
            d,
            coords,
            constraints,
        })
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn level(&self) -> usize {
        self.d
    }

    pub fn variant(&self) -> Variant {
        self.coords.variant()
    }

    pub fn n(&self) -> usize {
        self.coords.n()
    }

    pub fn coordinates(&self) -> &Arc<MonomialBasis> {
        &self.coords
    }

    pub fn coordinate_count(&self) -> usize {
        self.coords.len()
    }

    /// Side length `N` of `H_d(y)`.
    pub fn matrix_dimension(&self) -> usize {
        self.coords.prefix_len(self.d)
    }

    pub fn matrix_sets(&self) -> &[Subset] {
        &self.coords.sets()[..self.matrix_dimension()]
    }

    pub fn constraints(&self) -> &[ConstraintRow] {
        &self.constraints
    }

    pub fn constraint_count(&self) -> usize {
        self.constraints.len()
    }

    /// Same constraints read over another field. Only legal when every
    /// coefficient is 0 or 1 and both fields share the characteristic, which
    /// is the case for GF(2)-defined subspaces lifted to GF(2^r).
    pub fn with_field(&self, field: &FieldSpec) -> Result<SubspaceSpec> {
        if field.characteristic() != self.field.characteristic()
            || self.constraints.iter().flatten().any(|&(_, c)| c > 1)
        {
            return Err(Error::pre(format!(
                "constraints over {} cannot be reused over {}",
                self.field.descriptor(),
                field.descriptor()
            )));
        }
        Ok(SubspaceSpec {
            field: field.clone(),
            ..self.clone()
        })
    }

    pub fn constraint_matrix(&self) -> FFMatrix {
        let mut m = FFMatrix::zeros(&self.field, self.constraints.len(), self.coords.len());
        for (r, row) in self.constraints.iter().enumerate() {
            for &(c, v) in row {
                m.set(r, c, v);
            }
        }
        m
    }

    pub fn row_value(&self, row: usize, y: &[u32]) -> u32 {
        let f = &self.field;
        self.constraints[row]
            .iter()
            .fold(0, |acc, &(i, c)| f.add(acc, f.mul(c, y[i])))
    }

    /// Index of the first constraint `y` violates.
    pub fn first_violation(&self, y: &[u32]) -> Result<Option<usize>> {
        if y.len() != self.coords.len() {
            return Err(Error::DimensionMismatch {
                expected: self.coords.len(),
                found: y.len(),
            });
        }
        if let Some(&bad) = y.iter().find(|&&v| !self.field.contains(v)) {
            return Err(Error::InvalidField(format!("coordinate code {bad}")));
        }
        Ok((0..self.constraints.len()).find(|&r| self.row_value(r, y) != 0))
    }

    pub fn contains(&self, y: &[u32]) -> Result<bool> {
        Ok(self.first_violation(y)?.is_none())
    }

    pub fn expand(&self, y: &[u32], e: usize) -> Result<FFMatrix> {
        expand(&self.field, &self.coords, y, e)
    }

    /// Inverse of expansion: reads `y` off an `N x N` matrix after checking
    /// that entries agree whenever their index unions agree.
    pub fn coordinates_of(&self, a: &FFMatrix) -> Result<Vec<u32>> {
        let n = self.matrix_dimension();
        if a.rows() != n || a.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: a.rows(),
            });
        }
        let sets = self.matrix_sets();
        let mut y: Vec<Option<u32>> = vec![None; self.coords.len()];
        for i in 0..n {
            for j in 0..n {
                let r = self
                    .coords
                    .rank(sets[i].union(sets[j]))
                    .expect("union inside the coordinate basis");
                match y[r] {
                    None => y[r] = Some(a.get(i, j)),
                    Some(v) if v != a.get(i, j) => {
                        return Err(Error::pre(format!(
                            "entry ({i},{j}) breaks the equal-union pattern"
                        )))
                    }
                    _ => {}
                }
            }
        }
        y.into_iter()
            .map(|v| v.ok_or_else(|| Error::internal("coordinate not covered by any entry")))
            .collect()
    }

    /// SHA-256 over a canonical text rendering, for report provenance.
    pub fn digest(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.field.descriptor());
        h.update(format!("|{}|{}|{}|", self.variant(), self.n(), self.d));
        for row in &self.constraints {
            for &(i, c) in row {
                h.update(format!("{i}:{c},"));
            }
            h.update(";");
        }
        hex::encode(h.finalize())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn expansion_and_inverse() {
        let f = FieldSpec::gf2();
        let coords = Arc::new(MonomialBasis::covering(2, 2, Variant::V).unwrap());
        let spec = SubspaceSpec::new(&f, 1, coords, vec![]).unwrap();
        let y = vec![0, 0, 0, 1];
        let h = spec.expand(&y, 1).unwrap();
        assert_eq!(
            h,
            FFMatrix::from_rows(&f, &[vec![0, 0, 0], vec![0, 0, 1], vec![0, 1, 0]]).unwrap()
        );
        assert_eq!(h.rank(), 2);
        assert_eq!(spec.coordinates_of(&h).unwrap(), y);
        let mut broken = h.clone();
        broken.set(1, 1, 1);
        assert!(spec.coordinates_of(&broken).is_err());
        assert!(spec.expand(&y, 2).is_err());
    }

    #[test]
    fn merge_cancels() {
        let f = FieldSpec::gf2();
        assert!(merge_row(&f, [(3, 1), (3, 1)]).is_empty());
        let f3 = FieldSpec::prime(3).unwrap();
        assert_eq!(merge_row(&f3, [(2, 1), (0, 2), (2, 1)]), vec![(0, 2), (2, 2)]);
    }
}
