//! Rounds a low-rank pseudo-moment vector of a quadratic system to a Boolean
//! solution: level ranks, a flat level, multiplication operators on the
//! column space, and a common eigenvector of those operators.

use serde::Serialize;

use crate::boolalg::{Subset, Variant};
use crate::error::{Error, Result};
use crate::frontends::QuadSystemSource;
use crate::gf::FieldSpec;
use crate::linalg::FFMatrix;
use crate::moment::{build_moment_subspace_at, PseudoMomentVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LevelRankProfile {
    /// `ranks[e] = rank H_e(y)`.
    pub ranks: Vec<usize>,
    /// Pivot column indices of `H_e(y)`, i.e. the first independent columns.
    pub pivots: Vec<Vec<usize>>,
}

pub fn level_ranks(y: &PseudoMomentVector, d: usize) -> Result<LevelRankProfile> {
    let mut ranks = Vec::with_capacity(d + 1);
    let mut pivots = Vec::with_capacity(d + 1);
    for e in 0..=d {
        let ech = y.expand_matrix(e)?.rref();
        ranks.push(ech.pivots.len());
        pivots.push(ech.pivots);
    }
    Ok(LevelRankProfile { ranks, pivots })
}

/// Smallest `e` with `r_e = r_{e+1} > 0`.
pub fn find_flat_level(profile: &LevelRankProfile) -> Option<usize> {
    profile
        .ranks
        .windows(2)
        .position(|w| w[0] == w[1] && w[0] > 0)
}

#[derive(Clone, Debug)]
pub struct MultiplicationOperators {
    pub level: usize,
    /// Coordinate indices of the basis labels `B ∈ I`.
    pub basis: Vec<usize>,
    /// `operators[i-1]` is `T_i` in the basis `{c(B) : B ∈ I}`.
    pub operators: Vec<FFMatrix>,
}

impl MultiplicationOperators {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `T_U = prod_{i in U} T_i`, identity for `U = ∅`.
    pub fn monomial(&self, u: Subset) -> FFMatrix {
        let field = self.operators.first().map(|t| t.field().clone());
        let field = field.unwrap_or_else(FieldSpec::gf2);
        let mut acc = FFMatrix::identity(&field, self.dimension());
        for i in u.elems() {
            acc = acc.mul(&self.operators[i - 1]).expect("square operators");
        }
        acc
    }
}

/// Solves for each `T_i` via `T_i c(B) = c(B ∪ {i})` at level `e + 1`, then
/// checks idempotence, commutativity and `f_l(T) = 0`.
pub fn multiplication_operators(
    y: &PseudoMomentVector,
    e: usize,
    src: &QuadSystemSource,
) -> Result<MultiplicationOperators> {
    let coords = &y.basis;
    if coords.variant() != Variant::V || coords.n() != src.n {
        return Err(Error::pre("moment vector and source disagree on variables"));
    }
    let h_e = y.expand_matrix(e)?;
    let h_next = y.expand_matrix(e + 1)?;
    let ech = h_e.rref();
    let rank_e = ech.pivots.len();
    let rank_next = h_next.rank();
    if rank_e == 0 || rank_e != rank_next {
        return Err(Error::pre(format!(
            "level {e} is not flat (ranks {rank_e} and {rank_next})"
        )));
    }
    let basis = ech.pivots;
    let rows = h_next.rows();
    let all_rows: Vec<usize> = (0..rows).collect();
    let bm = h_next.select(&all_rows, &basis);
    let field = y.field.clone();
    let m = basis.len();
    let mut operators = Vec::with_capacity(src.n);
    for i in 1..=src.n {
        let mut t = FFMatrix::zeros(&field, m, m);
        for (col, &b) in basis.iter().enumerate() {
            let x = coords.unrank(b).union(Subset::single(i));
            let xi = coords.rank(x).expect("label of degree at most e+1");
            let target = h_next.column(xi);
            let c = bm.solve(&target)?.ok_or_else(|| {
                Error::internal(format!("c(B ∪ {{{i}}}) outside the flat column space"))
            })?;
            for (r, v) in c.into_iter().enumerate() {
                t.set(r, col, v);
            }
        }
        operators.push(t);
    }
    let ops = MultiplicationOperators {
        level: e,
        basis,
        operators,
    };
    for (i, t) in ops.operators.iter().enumerate() {
        if t.mul(t)? != *t {
            return Err(Error::internal(format!("T_{} is not idempotent", i + 1)));
        }
        for (j, s) in ops.operators.iter().enumerate().skip(i + 1) {
            if t.mul(s)? != s.mul(t)? {
                return Err(Error::internal(format!("T_{} and T_{} do not commute", i + 1, j + 1)));
            }
        }
    }
    for (l, f) in src.equations.iter().enumerate() {
        let mut acc = FFMatrix::zeros(&field, m, m);
        for (u, c) in f.terms() {
            acc = acc.add(&ops.monomial(u).scale(c))?;
        }
        if !acc.is_zero() {
            return Err(Error::internal(format!("equation {l} does not vanish at T")));
        }
    }
    Ok(ops)
}

/// Basis of the span of `vectors` (reduced echelon rows).
fn span_basis(field: &FieldSpec, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    if vectors.is_empty() {
        return vec![];
    }
    let ech = FFMatrix::from_rows(field, vectors).expect("equal lengths").rref();
    (0..ech.pivots.len()).map(|r| ech.matrix.row(r).to_vec()).collect()
}

/// Splits the space by image and kernel of each `T_i` in turn, keeping the
/// image part when it is nonzero. Returns a vector `v` of the final space and
/// the eigenvalues `a_i` with `T_i v = a_i v`.
pub fn common_eigenvector(ops: &MultiplicationOperators) -> Result<(Vec<u32>, Vec<u32>)> {
    let m = ops.dimension();
    if m == 0 {
        return Err(Error::pre("zero-dimensional column space"));
    }
    let field = ops.operators.first().map_or_else(FieldSpec::gf2, |t| t.field().clone());
    let mut space: Vec<Vec<u32>> = (0..m)
        .map(|i| (0..m).map(|j| (i == j) as u32).collect())
        .collect();
    let mut a = Vec::with_capacity(ops.operators.len());
    for t in &ops.operators {
        let images: Vec<Vec<u32>> = space.iter().map(|v| t.mul_vec(v)).collect::<Result<_>>()?;
        let im = span_basis(&field, &images);
        if !im.is_empty() {
            space = im;
            a.push(1);
            continue;
        }
        let kernel: Vec<Vec<u32>> = space
            .iter()
            .zip(&images)
            .map(|(v, tv)| v.iter().zip(tv).map(|(&x, &y)| field.sub(x, y)).collect())
            .collect();
        space = span_basis(&field, &kernel);
        if space.is_empty() {
            return Err(Error::internal("both summands vanished"));
        }
        a.push(0);
    }
    let v = space[0].clone();
    for (i, t) in ops.operators.iter().enumerate() {
        let tv = t.mul_vec(&v)?;
        let av: Vec<u32> = v.iter().map(|&x| field.mul(a[i], x)).collect();
        if tv != av {
            return Err(Error::internal(format!("v is not an eigenvector of T_{}", i + 1)));
        }
    }
    Ok((v, a))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecodeReport {
    pub profile: Vec<usize>,
    pub flat_level: Option<usize>,
    pub basis_labels: Vec<String>,
    pub operator_dimension: usize,
    pub assignment: Option<Vec<u32>>,
    pub residuals: Vec<String>,
    /// First stage that could not complete, when no assignment was produced.
    pub failed_stage: Option<String>,
}

/// Full pipeline. `y` must lie in the level-`d` localizing subspace of `src`
/// with `0 < rank H_d(y) <= d`.
pub fn decode_assignment(
    y: &PseudoMomentVector,
    src: &QuadSystemSource,
    d: usize,
) -> Result<DecodeReport> {
    if y.field != src.field {
        return Err(Error::FieldMismatch {
            left: y.field.descriptor(),
            right: src.field.descriptor(),
        });
    }
    let l = build_moment_subspace_at(src, d)?;
    if y.basis.variant() != Variant::V || y.basis.n() != src.n || y.basis.degree() != 2 * d {
        return Err(Error::pre("moment vector is not over V_{n,2d}"));
    }
    if let Some(index) = l.first_violation(&y.values)? {
        return Err(Error::ConstraintViolated { index });
    }
    let top = y.expand_matrix(d)?;
    if top.is_zero() {
        return Err(Error::pre("H_d(y) is zero"));
    }
    let top_rank = top.rank();
    if top_rank > d {
        return Err(Error::pre(format!("rank {top_rank} exceeds d = {d}")));
    }
    let profile = level_ranks(y, d)?;
    let mut report = DecodeReport {
        profile: profile.ranks.clone(),
        flat_level: None,
        basis_labels: vec![],
        operator_dimension: 0,
        assignment: None,
        residuals: vec![],
        failed_stage: None,
    };
    let Some(e) = find_flat_level(&profile) else {
        report.failed_stage = Some("flat_level".into());
        return Ok(report);
    };
    report.flat_level = Some(e);
    let ops = multiplication_operators(y, e, src)?;
    report.basis_labels = ops
        .basis
        .iter()
        .map(|&b| y.basis.unrank(b).to_string())
        .collect();
    report.operator_dimension = ops.dimension();
    let (_, a) = common_eigenvector(&ops)?;
    let residuals = src.eval(&a)?;
    if residuals.iter().any(|&r| r != 0) {
        return Err(Error::internal("decoded assignment violates the source"));
    }
    report.residuals = residuals.iter().map(|&r| src.field.format_elem(r)).collect();
    report.assignment = Some(a);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::boolalg::MonomialBasis;
    use crate::frontends::parse_quadeq;
    use crate::moment::honest_moment_vector;
    use std::sync::Arc;

    fn vbasis(n: usize, deg: usize) -> Arc<MonomialBasis> {
        Arc::new(MonomialBasis::covering(n, deg, Variant::V).unwrap())
    }

    #[test]
    fn profile_examples() {
        let f = FieldSpec::gf2();
        let y = honest_moment_vector(&f, &[1, 1], vbasis(2, 2)).unwrap();
        let p = level_ranks(&y, 1).unwrap();
        assert_eq!(p.ranks, vec![1, 1]);
        assert_eq!(find_flat_level(&p), Some(0));

        let z = PseudoMomentVector::zeros(&f, vbasis(2, 2));
        let pz = level_ranks(&z, 1).unwrap();
        assert_eq!(pz.ranks, vec![0, 0]);
        assert_eq!(find_flat_level(&pz), None);

        let w = PseudoMomentVector::new(&f, vbasis(1, 2), vec![0, 1]).unwrap();
        let pw = level_ranks(&w, 1).unwrap();
        assert_eq!(pw.ranks, vec![0, 2]);
        assert_eq!(find_flat_level(&pw), None);
    }

    #[test]
    fn operators_on_honest_vectors() {
        let src = parse_quadeq("GF(2); x1 + x2").unwrap();
        for a in [[0u32, 0], [1, 1], [0, 1]] {
            let y = honest_moment_vector(&src.field, &a, vbasis(2, 2)).unwrap();
            let ops = multiplication_operators(&y, 0, &src);
            if a[0] == a[1] {
                let ops = ops.unwrap();
                assert_eq!(ops.basis, vec![0]);
                for i in 0..2 {
                    assert_eq!(ops.operators[i].to_rows(), vec![vec![a[i]]]);
                }
            } else {
                // (0,1) violates x1 + x2, so f(T) = [1] != 0.
                assert!(matches!(ops, Err(Error::Internal(_))));
            }
        }
    }

    fn ops_from(diags: &[Vec<u32>]) -> MultiplicationOperators {
        let f = FieldSpec::gf2();
        let m = diags[0].len();
        MultiplicationOperators {
            level: 0,
            basis: (0..m).collect(),
            operators: diags
                .iter()
                .map(|d| FFMatrix::from_fn(&f, m, m, |i, j| if i == j { d[i] } else { 0 }))
                .collect(),
        }
    }

    #[test]
    fn eigenvector_examples() {
        let (v, a) = common_eigenvector(&ops_from(&[vec![1, 0], vec![0, 1]])).unwrap();
        assert_eq!((v, a), (vec![1, 0], vec![1, 0]));
        let (_, a) = common_eigenvector(&ops_from(&[vec![1, 1], vec![1, 1], vec![1, 1]])).unwrap();
        assert_eq!(a, vec![1, 1, 1]);
        let (_, a) = common_eigenvector(&ops_from(&[vec![0, 0], vec![0, 0]])).unwrap();
        assert_eq!(a, vec![0, 0]);
    }

    #[test]
    fn decode_examples() {
        let src = parse_quadeq("GF(2); x1 + x2").unwrap();
        for a in [[1u32, 1], [0, 0]] {
            let y = honest_moment_vector(&src.field, &a, vbasis(2, 2)).unwrap();
            let rep = decode_assignment(&y, &src, 1).unwrap();
            assert_eq!(rep.assignment, Some(a.to_vec()));
            assert_eq!(rep.flat_level, Some(0));
        }
    }

    #[test]
    fn decode_rejects_high_rank() {
        let src = parse_quadeq("GF(2); vars: 2; x1*x2").unwrap();
        let b = vbasis(2, 2);
        // y_∅ = 1 plus y_{1} = y_{2} = 1, y_{12} = 0 gives a rank-3 H_1.
        let y = PseudoMomentVector::new(&src.field, b, vec![1, 1, 1, 0]).unwrap();
        assert_eq!(y.expand_matrix(1).unwrap().rank(), 3);
        assert!(matches!(decode_assignment(&y, &src, 1), Err(Error::Precondition(_))));
    }
}
