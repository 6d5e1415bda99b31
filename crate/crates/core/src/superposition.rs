//! 3-CNF to matrix subspace over GF(2) or GF(2^r), going through a
//! constant-free polynomial system `B`, its quadratic closure `Q`, and the
//! quotient-coordinate subspace `L_d(Q)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::boolalg::{binomial, MonomialBasis, SquarefreePoly, Subset, Variant};
use crate::error::{Error, Result};
use crate::frontends::{booleanity_polynomial, clause_polynomial, CnfFormula};
use crate::gf::FieldSpec;
use crate::linalg::symmetric_rank_one_decomposition;
use crate::moment::{honest_moment_vector, PseudoMomentVector};
use crate::oracles::superposition_check;
use crate::subspace::{merge_row, ConstraintRow, SubspaceSpec};

pub const DEFAULT_SOUNDNESS_CONSTANT: f64 = 4.0;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DegreeChoice {
    pub k: u64,
    pub r: u64,
    pub c: f64,
    pub k0: u64,
    pub t: u64,
    pub d: usize,
}

/// Smallest multiple of 4 with `d >= max(8, c log2(t+1))` and
/// `C(d+1, floor((d+1)/2)) > r k`, where `t = floor(3 r k / 2)`.
pub fn choose_degree(k: u64, r: u64, c: f64) -> Result<DegreeChoice> {
    if k == 0 || r == 0 {
        return Err(Error::pre("k and r must be positive"));
    }
    if !(c > 0.0 && c.is_finite()) {
        return Err(Error::pre("soundness constant must be positive"));
    }
    let k0 = r
        .checked_mul(k)
        .ok_or_else(|| Error::pre("r * k overflows"))?;
    let t = k0
        .checked_mul(3)
        .ok_or_else(|| Error::pre("r * k overflows"))?
        / 2;
    let floor = (c * ((t as f64) + 1.0).log2()).max(8.0);
    let mut d = 4 * ((floor / 4.0).ceil() as usize).max(2);
    while binomial(d as u64 + 1, (d as u64 + 1) / 2) <= k0 as u128 {
        d += 4;
    }
    Ok(DegreeChoice { k, r, c, k0, t, d })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Regime {
    Faithful,
    Relaxed,
}

impl Regime {
    pub fn of_degree(d: usize) -> Regime {
        if d >= 8 && d % 4 == 0 {
            Regime::Faithful
        } else {
            Regime::Relaxed
        }
    }
}

/// Constant-free equations over GF(2) in `x_0..x_n`, each of degree at most `d`.
#[derive(Clone, Debug)]
pub struct PolySystemB {
    pub n: usize,
    pub d: usize,
    pub regime: Regime,
    pub equations: Vec<SquarefreePoly>,
}

/// `∅` followed by `U_{n,k}`: every subset of `{0..n}` of size at most `k`.
fn multipliers(n: usize, k: usize) -> Result<Vec<Subset>> {
    let mut out = vec![Subset::EMPTY];
    out.extend_from_slice(MonomialBasis::covering(n, k, Variant::U)?.sets());
    Ok(out)
}

/// Equation count of [`build_system_b`], computed without building.
pub fn system_b_size(n: usize, m: usize, d: usize) -> u128 {
    let s = |k: usize| -> u128 { (0..=k as u64).map(|j| binomial(n as u64 + 1, j)).sum() };
    m as u128 * s(d.saturating_sub(3)) + n as u128 * s(d.saturating_sub(2))
}

/// `x^S p_j` for `|S| <= d-3` and `x^S b_i` for `|S| <= d-2`, clause
/// equations first, multipliers in graded order. Zero products are kept so
/// that equation indices follow the enumeration.
pub fn build_system_b(cnf: &CnfFormula, d: usize, allow_relaxed: bool) -> Result<PolySystemB> {
    if d < 3 {
        return Err(Error::pre(format!("degree {d} is below the minimum of 3")));
    }
    let regime = Regime::of_degree(d);
    if regime == Regime::Relaxed && !allow_relaxed {
        return Err(Error::pre(format!(
            "degree {d} is outside the faithful regime (multiples of 4 from 8 up); pass the relaxed flag"
        )));
    }
    let n = cnf.n;
    let mut equations = Vec::new();
    let sp = multipliers(n, d - 3)?;
    for clause in &cnf.clauses {
        let p = clause_polynomial(clause, n)?;
        equations.extend(sp.iter().map(|&s| p.shift(s)));
    }
    let sb = multipliers(n, d - 2)?;
    for i in 1..=n {
        let b = booleanity_polynomial(i, n)?;
        equations.extend(sb.iter().map(|&s| b.shift(s)));
    }
    for (idx, e) in equations.iter().enumerate() {
        if e.constant_term() != 0 || e.degree().unwrap_or(0) > d {
            return Err(Error::internal(format!("equation {idx} breaks the degree/constant shape")));
        }
    }
    Ok(PolySystemB {
        n,
        d,
        regime,
        equations,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QKind {
    /// Linearization of the `B` equation with this index.
    Linearized(usize),
    /// `y_S y_T = y_{S ∪ T}`.
    Multiplicative,
}

/// `sum_{(S,T)} y_S y_T + sum_R y_R = 0` over GF(2), indices into the
/// variable basis `U_{n,d}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QEquation {
    pub quad: Vec<(usize, usize)>,
    pub lin: Vec<usize>,
    pub kind: QKind,
}

impl QEquation {
    pub fn eval(&self, u: &[u32]) -> u32 {
        let q = self.quad.iter().fold(0, |acc, &(s, t)| acc ^ (u[s] & u[t]));
        self.lin.iter().fold(q, |acc, &r| acc ^ u[r])
    }
}

#[derive(Clone, Debug)]
pub struct QuadSystemQ {
    pub n: usize,
    pub d: usize,
    pub basis: Arc<MonomialBasis>,
    pub equations: Vec<QEquation>,
}

impl QuadSystemQ {
    pub fn variable_count(&self) -> usize {
        self.basis.len()
    }

    pub fn linearized_count(&self) -> usize {
        self.equations
            .iter()
            .filter(|e| matches!(e.kind, QKind::Linearized(_)))
            .count()
    }

    /// `v_d(a)`: the honest assignment `y_S = a^S` for a point `a` over `x_0..x_n`.
    pub fn honest_assignment(&self, point: &[u32]) -> Vec<u32> {
        self.basis
            .sets()
            .iter()
            .map(|s| s.elems().all(|i| point[i] == 1) as u32)
            .collect()
    }
}

/// Replaces each `x^R` by `y_R` and adjoins one `y_S y_T = y_{S ∪ T}` per
/// unordered pair (including `S = T`) with `|S ∪ T| <= d`.
pub fn build_system_q(b: &PolySystemB) -> Result<QuadSystemQ> {
    let basis = Arc::new(MonomialBasis::covering(b.n, b.d, Variant::U)?);
    let mut equations = Vec::new();
    for (idx, e) in b.equations.iter().enumerate() {
        let mut lin = Vec::with_capacity(e.num_terms());
        for (r, c) in e.terms() {
            debug_assert_eq!(c, 1);
            if r.is_empty() {
                return Err(Error::internal(format!("equation {idx} has a constant term")));
            }
            lin.push(basis.rank(r).ok_or_else(|| {
                Error::internal(format!("monomial {r} of equation {idx} exceeds degree {}", b.d))
            })?);
        }
        equations.push(QEquation {
            quad: vec![],
            lin,
            kind: QKind::Linearized(idx),
        });
    }
    let sets = basis.sets();
    for i in 0..sets.len() {
        for j in i..sets.len() {
            let u = sets[i].union(sets[j]);
            if u.len() <= b.d {
                equations.push(QEquation {
                    quad: vec![(i, j)],
                    lin: vec![basis.rank(u).expect("bounded union")],
                    kind: QKind::Multiplicative,
                });
            }
        }
    }
    Ok(QuadSystemQ {
        n: b.n,
        d: b.d,
        basis,
        equations,
    })
}

/// Quotient-coordinate row of a `Q` equation: `A_{S,T} = y_{S ∪ T}` and
/// `A_{R,R} = y_R`.
pub fn quotient_row(q: &QuadSystemQ, coords: &MonomialBasis, eq: &QEquation) -> ConstraintRow {
    let sets = q.basis.sets();
    let gf2 = FieldSpec::gf2();
    let at = |s: Subset| coords.rank(s).expect("set inside the coordinate basis");
    merge_row(
        &gf2,
        eq.quad
            .iter()
            .map(|&(s, t)| (at(sets[s].union(sets[t])), 1))
            .chain(eq.lin.iter().map(|&r| (at(sets[r]), 1))),
    )
}

/// `L_d(Q)` over a characteristic-2 field. Linearized equations become
/// constraint rows in order; multiplicative ones must vanish identically and
/// are dropped.
pub fn build_subspace_l(q: &QuadSystemQ, field: &FieldSpec) -> Result<SubspaceSpec> {
    if !field.is_binary() {
        return Err(Error::pre(format!(
            "L_d(Q) is defined over characteristic 2, got {}",
            field.descriptor()
        )));
    }
    let coords = Arc::new(MonomialBasis::covering(q.n, 2 * q.d, Variant::U)?);
    let mut rows = Vec::with_capacity(q.linearized_count());
    for (idx, eq) in q.equations.iter().enumerate() {
        let row = quotient_row(q, &coords, eq);
        match eq.kind {
            QKind::Linearized(_) => rows.push(row),
            QKind::Multiplicative => {
                if !row.is_empty() {
                    return Err(Error::internal(format!(
                        "multiplicative equation {idx} survives the quotient"
                    )));
                }
            }
        }
    }
    SubspaceSpec::new(field, q.d, coords, rows)
}

/// The full chain for a formula at degree `d`.
pub fn reduce_cnf(
    cnf: &CnfFormula,
    d: usize,
    allow_relaxed: bool,
    field: &FieldSpec,
) -> Result<(PolySystemB, QuadSystemQ, SubspaceSpec)> {
    let b = build_system_b(cnf, d, allow_relaxed)?;
    let q = build_system_q(&b)?;
    let l = build_subspace_l(&q, field)?;
    Ok((b, q, l))
}

/// Honest coordinates for an assignment `z` of the formula, homogenised
/// with `x_0 = 1`.
pub fn honest_coordinates(l: &SubspaceSpec, z: &[bool]) -> Result<PseudoMomentVector> {
    let mut point = vec![1u32];
    point.extend(z.iter().map(|&b| b as u32));
    honest_moment_vector(l.field(), &point, l.coordinates().clone())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Superposition {
    pub assignments: Vec<Vec<u32>>,
    pub aggregate: Vec<u32>,
}

/// Splits `H_d(y)` into symmetric rank-one terms; their vectors satisfy `Q`
/// in superposition, which is checked before returning.
pub fn low_rank_to_superposition(
    y: &[u32],
    l: &SubspaceSpec,
    q: &QuadSystemQ,
) -> Result<Superposition> {
    if !l.field().is_gf2() {
        return Err(Error::pre("superposition extraction works over GF(2)"));
    }
    if l.level() != q.d || l.n() != q.n || l.variant() != Variant::U {
        return Err(Error::pre("subspace and system disagree on n or d"));
    }
    if let Some(index) = l.first_violation(y)? {
        return Err(Error::ConstraintViolated { index });
    }
    let a = l.expand(y, q.d)?;
    let dec = symmetric_rank_one_decomposition(&a)?;
    let check = superposition_check(&dec.vectors, q)?;
    if let Some(eq) = check.first_violated {
        return Err(Error::internal(format!(
            "decomposition fails equation {eq} in superposition"
        )));
    }
    let aggregate = dec.aggregate();
    Ok(Superposition {
        assignments: dec.vectors,
        aggregate,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RankCertificate {
    /// Index of `R` in the coordinate basis.
    pub index: usize,
    pub set: Vec<usize>,
    pub bound: u128,
    /// Whether `ceil(|R|/2) <= d`, the condition for the bound to hold.
    pub applies: bool,
}

/// `R` = first nonzero coordinate in graded order, i.e. a minimum-size set
/// with `y_R != 0`, lexicographically first among those; then
/// `rank H_d(y) >= C(|R|, floor(|R|/2))` whenever `ceil(|R|/2) <= d`.
pub fn rank_certificate(y: &[u32], coords: &MonomialBasis, d: usize) -> Option<RankCertificate> {
    let index = y.iter().position(|&v| v != 0)?;
    let r = coords.unrank(index);
    let s = r.len();
    Some(RankCertificate {
        index,
        set: r.elems().collect(),
        bound: binomial(s as u64, s as u64 / 2),
        applies: s.div_ceil(2) <= d,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frontends::parse_dimacs;

    #[test]
    fn degree_examples() {
        let c = choose_degree(1, 1, 4.0).unwrap();
        assert_eq!((c.t, c.d), (1, 8));
        let c = choose_degree(2, 1, 4.0).unwrap();
        assert_eq!((c.t, c.d), (3, 8));
        let c = choose_degree(100, 1, 4.0).unwrap();
        assert_eq!((c.t, c.d), (150, 32));
        assert!(binomial(33, 16) > 100);
        assert!(choose_degree(0, 1, 4.0).is_err());
    }

    #[test]
    fn degree_choice_is_minimal() {
        for k in 1..200u64 {
            for r in 1..4u64 {
                let c = choose_degree(k, r, 4.0).unwrap();
                let t = 3 * r * k / 2;
                assert_eq!(c.t, t);
                let ok = |d: usize| {
                    d % 4 == 0
                        && d as f64 >= 8f64.max(4.0 * ((t + 1) as f64).log2())
                        && binomial(d as u64 + 1, (d as u64 + 1) / 2) > (r * k) as u128
                };
                assert!(ok(c.d));
                assert!((4..c.d).step_by(4).all(|d| !ok(d)));
            }
        }
    }

    #[test]
    fn system_b_counts() {
        let cnf = parse_dimacs("p cnf 1 1\n1 1 1 0\n").unwrap();
        let b = build_system_b(&cnf, 4, true).unwrap();
        assert_eq!(b.equations.len(), 7);
        assert_eq!(system_b_size(1, 1, 4), 7);
        assert!(b.equations.iter().all(|e| e.constant_term() == 0));
        assert!(build_system_b(&cnf, 2, true).is_err());
        assert!(build_system_b(&cnf, 4, false).is_err());
        assert_eq!(build_system_b(&cnf, 8, false).unwrap().regime, Regime::Faithful);
    }

    #[test]
    fn system_b_vanishes_on_satisfying_points() {
        let cnf = parse_dimacs("p cnf 3 2\n1 -2 3 0\n-1 2 0\n").unwrap();
        let b = build_system_b(&cnf, 5, true).unwrap();
        assert_eq!(b.equations.len() as u128, system_b_size(3, 2, 5));
        for bits in 0..8u32 {
            let z: Vec<bool> = (0..3).map(|i| (bits >> i) & 1 == 1).collect();
            let mut pt = vec![1];
            pt.extend(z.iter().map(|&v| v as u32));
            let all_zero = b.equations.iter().all(|e| e.eval(&pt).unwrap() == 0);
            assert_eq!(all_zero, cnf.satisfied_by(&z));
        }
    }

    #[test]
    fn system_q_small_case() {
        let b = PolySystemB {
            n: 1,
            d: 2,
            regime: Regime::Relaxed,
            equations: vec![],
        };
        let q = build_system_q(&b).unwrap();
        assert_eq!(q.variable_count(), 3);
        let mult: Vec<_> = q
            .equations
            .iter()
            .filter(|e| e.kind == QKind::Multiplicative)
            .collect();
        // Three cross pairs and three diagonal pairs.
        assert_eq!(mult.len(), 6);
    }

    #[test]
    fn honest_assignment_solves_q() {
        let cnf = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n").unwrap();
        let b = build_system_b(&cnf, 4, true).unwrap();
        let q = build_system_q(&b).unwrap();
        for z in [[true, false], [false, true]] {
            let pt = [1, z[0] as u32, z[1] as u32];
            let u = q.honest_assignment(&pt);
            assert!(q.equations.iter().all(|e| e.eval(&u) == 0));
        }
        let bad = q.honest_assignment(&[1, 1, 1]);
        assert!(q.equations.iter().any(|e| e.eval(&bad) != 0));
    }

    #[test]
    fn subspace_dimensions_and_honest_member() {
        let cnf = parse_dimacs("p cnf 2 2\n1 2 0\n-1 -2 0\n").unwrap();
        let (_, q, l) = reduce_cnf(&cnf, 4, true, &FieldSpec::gf2()).unwrap();
        let expect: u128 = (1..=4).map(|j| binomial(3, j)).sum();
        assert_eq!(l.coordinate_count() as u128, expect);
        assert_eq!(l.matrix_dimension(), q.variable_count());
        let y = honest_coordinates(&l, &[true, false]).unwrap();
        assert!(l.contains(&y.values).unwrap());
        assert_eq!(l.expand(&y.values, 4).unwrap().rank(), 1);
        let sup = low_rank_to_superposition(&y.values, &l, &q).unwrap();
        assert_eq!(sup.assignments, vec![q.honest_assignment(&[1, 1, 0])]);
        let zero = vec![0; l.coordinate_count()];
        let sup0 = low_rank_to_superposition(&zero, &l, &q).unwrap();
        assert!(sup0.assignments.is_empty());
        assert!(sup0.aggregate.iter().all(|&v| v == 0));
    }

    #[test]
    fn certificate_examples() {
        let coords = MonomialBasis::covering(2, 2, Variant::V).unwrap();
        let c = rank_certificate(&[0, 0, 0, 1], &coords, 1).unwrap();
        assert_eq!((c.set.clone(), c.bound, c.applies), (vec![1, 2], 2, true));
        let h = rank_certificate(&[1, 0, 1, 0], &coords, 1).unwrap();
        assert_eq!((h.set.len(), h.bound), (0, 1));
        assert!(rank_certificate(&[0, 0, 0, 0], &coords, 1).is_none());
    }
}
