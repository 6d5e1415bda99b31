use super::FFMatrix;
use crate::error::{Error, Result};
use crate::gf::{FieldSpec, LinearFunctional};
use crate::subspace::SubspaceSpec;

/// GF(2)-defined homogeneous constraints a descended matrix must keep.
#[derive(Clone, Copy, Debug)]
pub enum DescentConstraints<'a> {
    /// Each inner list names entries `(row, col)` whose sum must vanish.
    Raw(&'a [Vec<(usize, usize)>]),
    /// Matrices of the form `H_d(y)` with `y` in the subspace.
    Subspace(&'a SubspaceSpec),
}

#[derive(Clone, Debug)]
pub struct DescentResult {
    pub functional: LinearFunctional,
    pub matrix: FFMatrix,
    pub source_rank: usize,
    pub rank: usize,
}

fn check(a: &FFMatrix, constraints: DescentConstraints<'_>) -> Result<()> {
    match constraints {
        DescentConstraints::Raw(rows) => {
            let f = a.field();
            for (idx, row) in rows.iter().enumerate() {
                let mut acc = 0;
                for &(r, c) in row {
                    if r >= a.rows() || c >= a.cols() {
                        return Err(Error::DimensionMismatch {
                            expected: a.rows().max(a.cols()),
                            found: r.max(c) + 1,
                        });
                    }
                    acc = f.add(acc, a.get(r, c));
                }
                if acc != 0 {
                    return Err(Error::ConstraintViolated { index: idx });
                }
            }
            Ok(())
        }
        DescentConstraints::Subspace(spec) => {
            let y = spec.coordinates_of(a)?;
            match spec.first_violation(&y)? {
                Some(index) => Err(Error::ConstraintViolated { index }),
                None => Ok(()),
            }
        }
    }
}

/// Applies `φ` entrywise, where `φ` reads the lowest set coordinate of the
/// first nonzero entry of `a`. The result is nonzero, satisfies the same
/// constraints over GF(2), and has rank at most `r · rank(a)`; each of these
/// is checked.
pub fn rank_descent(a: &FFMatrix, constraints: DescentConstraints<'_>) -> Result<DescentResult> {
    let field = a.field();
    if !field.is_binary() {
        return Err(Error::pre(format!(
            "rank descent needs characteristic 2, got {}",
            field.descriptor()
        )));
    }
    let Some((r0, c0)) = a.first_nonzero() else {
        return Err(Error::pre("rank descent of the zero matrix"));
    };
    check(a, constraints)?;
    let functional = LinearFunctional::for_target(field, a.get(r0, c0))?;
    let gf2 = FieldSpec::gf2();
    let b = a.map_into(&gf2, |v| functional.apply(v));
    if b.is_zero() {
        return Err(Error::internal("descended matrix vanished"));
    }
    check(&b, constraints).map_err(|e| match e {
        Error::ConstraintViolated { index } => {
            Error::internal(format!("descended matrix violates constraint {index}"))
        }
        other => other,
    })?;
    let source_rank = a.rank();
    let rank = b.rank();
    if rank > field.degree() as usize * source_rank {
        return Err(Error::internal(format!(
            "descended rank {rank} exceeds {} * {source_rank}",
            field.degree()
        )));
    }
    Ok(DescentResult {
        functional,
        matrix: b,
        source_rank,
        rank,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_equal_2x2() -> Vec<Vec<(usize, usize)>> {
        vec![
            vec![(0, 0), (0, 1)],
            vec![(0, 0), (1, 0)],
            vec![(0, 0), (1, 1)],
        ]
    }

    #[test]
    fn alpha_times_all_ones() {
        let f4 = FieldSpec::binary(2).unwrap();
        let alpha = 2;
        let a = FFMatrix::from_fn(&f4, 2, 2, |_, _| alpha);
        let rows = all_equal_2x2();
        let out = rank_descent(&a, DescentConstraints::Raw(&rows)).unwrap();
        assert_eq!(out.matrix, FFMatrix::from_fn(&FieldSpec::gf2(), 2, 2, |_, _| 1));
        assert_eq!(out.rank, 1);
        assert_eq!(out.source_rank, 1);
    }

    #[test]
    fn gf2_input_is_unchanged() {
        let f = FieldSpec::gf2();
        let a = FFMatrix::from_rows(&f, &[vec![0, 1], vec![1, 1]]).unwrap();
        let out = rank_descent(&a, DescentConstraints::Raw(&[])).unwrap();
        assert_eq!(out.matrix, a);
    }

    #[test]
    fn zero_one_entries_reinterpret() {
        let f4 = FieldSpec::binary(2).unwrap();
        let a = FFMatrix::from_rows(&f4, &[vec![1, 0], vec![0, 1]]).unwrap();
        let out = rank_descent(&a, DescentConstraints::Raw(&[])).unwrap();
        assert_eq!(out.functional.row(), &[1, 0]);
        assert_eq!(out.matrix, FFMatrix::identity(&FieldSpec::gf2(), 2));
    }

    #[test]
    fn errors() {
        let f4 = FieldSpec::binary(2).unwrap();
        assert!(rank_descent(&FFMatrix::zeros(&f4, 2, 2), DescentConstraints::Raw(&[])).is_err());
        let a = FFMatrix::from_rows(&f4, &[vec![1, 2], vec![1, 1]]).unwrap();
        let rows = all_equal_2x2();
        assert_eq!(
            rank_descent(&a, DescentConstraints::Raw(&rows)).unwrap_err(),
            Error::ConstraintViolated { index: 0 }
        );
    }
}
