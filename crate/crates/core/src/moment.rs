//! Direct construction: pseudo-moment subspaces with localizing constraints
//! for Boolean quadratic systems over any finite field.

use std::sync::Arc;

use crate::boolalg::{MonomialBasis, Variant};
use crate::error::{Error, Result};
use crate::frontends::QuadSystemSource;
use crate::gf::FieldSpec;
use crate::linalg::FFMatrix;
use crate::subspace::{self, merge_row, SubspaceSpec};

/// Coordinates `y_R` over a union basis of degree `2d`.
#[derive(Clone, Debug)]
pub struct PseudoMomentVector {
    pub field: FieldSpec,
    pub basis: Arc<MonomialBasis>,
    pub values: Vec<u32>,
}

impl PseudoMomentVector {
    pub fn new(field: &FieldSpec, basis: Arc<MonomialBasis>, values: Vec<u32>) -> Result<Self> {
        if values.len() != basis.len() {
            return Err(Error::DimensionMismatch {
                expected: basis.len(),
                found: values.len(),
            });
        }
        if values.iter().any(|&v| !field.contains(v)) {
            return Err(Error::InvalidField("coordinate outside the field".into()));
        }
        Ok(PseudoMomentVector {
            field: field.clone(),
            basis,
            values,
        })
    }

    pub fn zeros(field: &FieldSpec, basis: Arc<MonomialBasis>) -> Self {
        let values = vec![0; basis.len()];
        PseudoMomentVector {
            field: field.clone(),
            basis,
            values,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    /// `H_e(y)`; needs `2e` within the stored degree.
    pub fn expand_matrix(&self, e: usize) -> Result<FFMatrix> {
        subspace::expand(&self.field, &self.basis, &self.values, e)
    }
}

/// `y_R = prod_{i in R} a_i`. `point` is indexed by the basis universe: for
/// the `U` variant it includes `a_0`.
pub fn honest_moment_vector(
    field: &FieldSpec,
    point: &[u32],
    basis: Arc<MonomialBasis>,
) -> Result<PseudoMomentVector> {
    let u = basis.universe();
    if point.len() != u.size() {
        return Err(Error::DimensionMismatch {
            expected: u.size(),
            found: point.len(),
        });
    }
    if let Some(bad) = point.iter().position(|&v| v > 1) {
        return Err(Error::pre(format!("coordinate {bad} of the point is not Boolean")));
    }
    let values = basis
        .sets()
        .iter()
        .map(|s| s.elems().all(|i| point[u.slot(i)] == 1) as u32)
        .collect();
    PseudoMomentVector::new(field, basis, values)
}

/// Localizing subspace at level `d`: coordinates `V_{n,2d}`, one row
/// `sum_U c_{l,U} y_{U ∪ W}` per equation `l` and `W` in `V_{n,2d-2}`
/// (equation-major, `W` in graded order).
pub fn build_moment_subspace_at(src: &QuadSystemSource, d: usize) -> Result<SubspaceSpec> {
    if d == 0 {
        return Err(Error::pre("degree must be at least 1"));
    }
    let coords = Arc::new(MonomialBasis::covering(src.n, 2 * d, Variant::V)?);
    let shifts = coords.prefix_len(2 * d - 2);
    let field = &src.field;
    let mut rows = Vec::with_capacity(src.equations.len() * shifts);
    for f in &src.equations {
        for &w in &coords.sets()[..shifts] {
            rows.push(merge_row(
                field,
                f.terms().map(|(u, c)| {
                    (coords.rank(u.union(w)).expect("union of bounded degree"), c)
                }),
            ));
        }
    }
    SubspaceSpec::new(field, d, coords, rows)
}

/// The default choice `d = k`.
pub fn build_moment_subspace(src: &QuadSystemSource, k: usize) -> Result<SubspaceSpec> {
    if k == 0 {
        return Err(Error::pre("k must be at least 1"));
    }
    build_moment_subspace_at(src, k)
}
