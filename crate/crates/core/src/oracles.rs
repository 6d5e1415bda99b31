//! Brute-force ground truth for small instances.

use serde::Serialize;

use crate::boolalg::{MonomialBasis, SquarefreePoly, Subset, Universe, Variant};
use crate::error::{Error, Result};
use crate::frontends::{CnfFormula, QuadSystemSource};
use crate::gf::FieldSpec;
use crate::linalg::{BitMatrix, FFMatrix};
use crate::subspace::SubspaceSpec;
use crate::superposition::QuadSystemQ;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Membership {
    pub member: bool,
    pub first_violated: Option<usize>,
}

pub fn check_membership(y: &[u32], l: &SubspaceSpec) -> Result<Membership> {
    let first_violated = l.first_violation(y)?;
    Ok(Membership {
        member: first_violated.is_none(),
        first_violated,
    })
}

/// Every member of `L` is `sum_i c_i k_i` over the kernel basis `k_i`; the
/// member with index `x` takes `c_i` = base-`q` digit `i` of `x`.
pub struct KernelEnumerator {
    field: FieldSpec,
    basis: Vec<Vec<u32>>,
    len: usize,
    total: u128,
}

impl KernelEnumerator {
    pub fn new(l: &SubspaceSpec, budget: u128) -> Result<KernelEnumerator> {
        let basis = l.constraint_matrix().kernel_basis();
        let q = l.field().order() as u128;
        let total = (0..basis.len()).try_fold(1u128, |acc, _| acc.checked_mul(q));
        match total {
            Some(t) if t <= budget => Ok(KernelEnumerator {
                field: l.field().clone(),
                len: l.coordinate_count(),
                basis,
                total: t,
            }),
            _ => Err(Error::BudgetExceeded {
                needed: total.unwrap_or(u128::MAX),
                budget,
            }),
        }
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Number of members, zero included.
    pub fn total(&self) -> u128 {
        self.total
    }

    pub fn member(&self, mut index: u128) -> Vec<u32> {
        let f = &self.field;
        let q = f.order() as u128;
        let mut y = vec![0u32; self.len];
        for k in &self.basis {
            let c = (index % q) as u32;
            index /= q;
            if c == 0 {
                continue;
            }
            for (yi, &ki) in y.iter_mut().zip(k) {
                if ki != 0 {
                    *yi = f.add(*yi, f.mul(c, ki));
                }
            }
        }
        y
    }
}

/// Rank of `H_d(y)` with precomputed union indices.
struct LevelRank {
    field: FieldSpec,
    n: usize,
    unions: Vec<usize>,
}

impl LevelRank {
    fn new(l: &SubspaceSpec) -> LevelRank {
        let sets = l.matrix_sets();
        let coords = l.coordinates();
        let n = sets.len();
        let mut unions = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                unions.push(coords.rank(sets[i].union(sets[j])).expect("union in range"));
            }
        }
        LevelRank {
            field: l.field().clone(),
            n,
            unions,
        }
    }

    fn rank(&self, y: &[u32]) -> usize {
        let n = self.n;
        if self.field.is_gf2() {
            let mut b = BitMatrix::zeros(n, n);
            for i in 0..n {
                for j in 0..n {
                    if y[self.unions[i * n + j]] != 0 {
                        b.set(i, j, true);
                    }
                }
            }
            b.rank()
        } else {
            FFMatrix::from_fn(&self.field, n, n, |i, j| y[self.unions[i * n + j]]).rank()
        }
    }
}

/// Splits `1..total` into contiguous chunks, one per worker, and returns the
/// per-chunk results in chunk order.
fn parallel_chunks<T: Send>(
    total: u128,
    workers: usize,
    f: impl Fn(u128, u128) -> T + Sync,
) -> Vec<T> {
    let workers = workers.max(1) as u128;
    let span = total.saturating_sub(1);
    let chunk = span.div_ceil(workers).max(1);
    let ranges: Vec<(u128, u128)> = (0..workers)
        .map(|w| (1 + w * chunk, (1 + (w + 1) * chunk).min(total)))
        .filter(|(a, b)| a < b)
        .collect();
    if ranges.len() <= 1 {
        return ranges.into_iter().map(|(a, b)| f(a, b)).collect();
    }
    std::thread::scope(|s| {
        let handles: Vec<_> = ranges
            .iter()
            .map(|&(a, b)| {
                let f = &f;
                s.spawn(move || f(a, b))
            })
            .collect();
        handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinrankReport {
    pub subspace_hash: String,
    pub kernel_dimension: usize,
    /// Nonzero members inspected.
    pub enumerated: u128,
    /// `None` when the subspace is `{0}`.
    pub minrank: Option<usize>,
    /// Lexicographically smallest coordinate vector among members of minimum
    /// rank.
    pub witness: Option<Vec<u32>>,
}

impl MinrankReport {
    pub fn is_empty_subspace(&self) -> bool {
        self.minrank.is_none()
    }
}

/// Minimum of `rank H_d(y)` over all nonzero members `y`, by exhaustion.
/// Refuses when the member count exceeds `budget`.
pub fn minrank_bruteforce(l: &SubspaceSpec, budget: u128, workers: usize) -> Result<MinrankReport> {
    let en = KernelEnumerator::new(l, budget)?;
    let lr = LevelRank::new(l);
    let best = parallel_chunks(en.total(), workers, |a, b| {
        let mut best: Option<(usize, Vec<u32>)> = None;
        for x in a..b {
            let y = en.member(x);
            let r = lr.rank(&y);
            let better = match &best {
                None => true,
                Some((br, by)) => r < *br || (r == *br && y < *by),
            };
            if better {
                best = Some((r, y));
            }
        }
        best
    })
    .into_iter()
    .flatten()
    .min();
    Ok(MinrankReport {
        subspace_hash: l.digest(),
        kernel_dimension: en.dimension(),
        enumerated: en.total() - 1,
        minrank: best.as_ref().map(|b| b.0),
        witness: best.map(|b| b.1),
    })
}

/// All nonzero members with `rank H_d(y) <= max_rank`, in enumeration order.
pub fn low_rank_members(
    l: &SubspaceSpec,
    max_rank: usize,
    budget: u128,
    workers: usize,
) -> Result<Vec<Vec<u32>>> {
    let en = KernelEnumerator::new(l, budget)?;
    let lr = LevelRank::new(l);
    Ok(parallel_chunks(en.total(), workers, |a, b| {
        (a..b)
            .map(|x| en.member(x))
            .filter(|y| lr.rank(y) <= max_rank)
            .collect::<Vec<_>>()
    })
    .into_iter()
    .flatten()
    .collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperpositionReport {
    pub satisfied: bool,
    pub first_violated: Option<usize>,
}

/// Checks `sum_i g(u_i) = 0` over GF(2) for every equation `g` of `Q`.
pub fn superposition_check(assignments: &[Vec<u32>], q: &QuadSystemQ) -> Result<SuperpositionReport> {
    let n = q.variable_count();
    for u in assignments {
        if u.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: u.len(),
            });
        }
    }
    let first_violated = q
        .equations
        .iter()
        .position(|eq| assignments.iter().fold(0, |acc, u| acc ^ eq.eval(u)) != 0);
    Ok(SuperpositionReport {
        satisfied: first_violated.is_none(),
        first_violated,
    })
}

/// Every monomial of degree at most `deg` in the universe, `1` first.
fn monomials_up_to(universe: Universe, deg: usize) -> Result<Vec<Subset>> {
    Ok(match universe.variant {
        Variant::V => MonomialBasis::covering(universe.n, deg, Variant::V)?.sets().to_vec(),
        Variant::U => {
            let mut v = vec![Subset::EMPTY];
            v.extend_from_slice(MonomialBasis::covering(universe.n, deg, Variant::U)?.sets());
            v
        }
    })
}

fn point_mask(universe: Universe, point: &[u32]) -> u64 {
    universe
        .symbols()
        .filter(|&i| point[universe.slot(i)] == 1)
        .fold(0, |acc, i| acc | (1u64 << i))
}

/// A polynomial of degree at most `rho` over GF(2) equal to 1 at
/// `points[target]` and 0 on the other points. The solution is the
/// reduced-echelon one with every free monomial coefficient set to 0.
pub fn point_isolator(
    universe: Universe,
    points: &[Vec<u32>],
    target: usize,
    rho: usize,
) -> Result<SquarefreePoly> {
    if target >= points.len() {
        return Err(Error::pre("target point is not in the set"));
    }
    if rho < 64 && points.len() as u128 >= 1u128 << rho {
        return Err(Error::pre(format!(
            "{} points need degree above {rho} (|T| < 2^rho required)",
            points.len()
        )));
    }
    let mut masks = Vec::with_capacity(points.len());
    for p in points {
        if p.len() != universe.size() {
            return Err(Error::DimensionMismatch {
                expected: universe.size(),
                found: p.len(),
            });
        }
        if p.iter().any(|&v| v > 1) {
            return Err(Error::pre("points must be Boolean"));
        }
        masks.push(point_mask(universe, p));
    }
    let mut sorted = masks.clone();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::pre("points must be distinct"));
    }
    let monos = monomials_up_to(universe, rho)?;
    let mut m = BitMatrix::zeros(points.len(), monos.len());
    for (i, &pm) in masks.iter().enumerate() {
        for (j, s) in monos.iter().enumerate() {
            if s.bits() & !pm == 0 {
                m.set(i, j, true);
            }
        }
    }
    let rhs: Vec<bool> = (0..points.len()).map(|i| i == target).collect();
    let sol = m
        .solve(&rhs)
        .ok_or_else(|| Error::internal("isolating system is inconsistent"))?;
    let gf2 = FieldSpec::gf2();
    let q = SquarefreePoly::from_terms(
        &gf2,
        universe,
        monos.iter().zip(&sol).filter(|(_, &c)| c).map(|(&s, _)| (s, 1)),
    )?;
    for (i, p) in points.iter().enumerate() {
        if q.eval(p)? != (i == target) as u32 {
            return Err(Error::internal(format!("isolator misbehaves at point {i}")));
        }
    }
    Ok(q)
}

/// `σ` on `1` and on every `x^S`, `S` in `U_{n,d}`; `σ(1) = 1` is implicit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialAssignment {
    pub n: usize,
    pub d: usize,
    /// Values on `U_{n,d}` in graded order.
    pub values: Vec<u32>,
}

impl MonomialAssignment {
    pub fn basis(&self) -> Result<MonomialBasis> {
        MonomialBasis::covering(self.n, self.d, Variant::U)
    }

    /// Evaluations of the monomials at a single point `b` over `x_0..x_n`.
    pub fn of_point(n: usize, d: usize, b: &[u32]) -> Result<MonomialAssignment> {
        let basis = MonomialBasis::covering(n, d, Variant::U)?;
        Ok(MonomialAssignment {
            n,
            d,
            values: basis
                .sets()
                .iter()
                .map(|s| s.elems().all(|i| b[i] == 1) as u32)
                .collect(),
        })
    }
}

/// Points over `x_0..x_n`; entry `i` of a point is `x_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PointSet {
    pub points: Vec<Vec<u32>>,
}

impl PointSet {
    /// `sum_{a in β} a^S` for each set.
    pub fn moments(&self, sets: &[Subset]) -> Vec<u32> {
        sets.iter()
            .map(|s| {
                self.points
                    .iter()
                    .filter(|p| s.elems().all(|i| p[i] == 1))
                    .count() as u32
                    % 2
            })
            .collect()
    }
}

/// Some `β ⊆ GF(2)^{n+1}` with `sum_{a in β} a^S = σ(x^S)` for every
/// monomial, found by solving over all `2^{n+1}` points (not minimal).
pub fn sum_of_points(sigma: &MonomialAssignment, budget: u128) -> Result<PointSet> {
    let basis = sigma.basis()?;
    if sigma.values.len() != basis.len() {
        return Err(Error::DimensionMismatch {
            expected: basis.len(),
            found: sigma.values.len(),
        });
    }
    if sigma.values.iter().any(|&v| v > 1) {
        return Err(Error::pre("monomial assignment values must lie in GF(2)"));
    }
    let npoints = 1u128 << (sigma.n + 1).min(127);
    if npoints > budget {
        return Err(Error::BudgetExceeded {
            needed: npoints,
            budget,
        });
    }
    let npoints = npoints as usize;
    let mut rows = vec![Subset::EMPTY];
    rows.extend_from_slice(basis.sets());
    let mut m = BitMatrix::zeros(rows.len(), npoints);
    for (i, s) in rows.iter().enumerate() {
        for p in 0..npoints {
            if s.bits() & !(p as u64) == 0 {
                m.set(i, p, true);
            }
        }
    }
    let mut rhs = vec![true];
    rhs.extend(sigma.values.iter().map(|&v| v == 1));
    let sol = m
        .solve(&rhs)
        .ok_or_else(|| Error::internal("sum-of-points system is inconsistent"))?;
    let points: Vec<Vec<u32>> = (0..npoints)
        .filter(|&p| sol[p])
        .map(|p| (0..=sigma.n).map(|i| ((p >> i) & 1) as u32).collect())
        .collect();
    let beta = PointSet { points };
    if beta.points.len() % 2 != 1 || beta.moments(basis.sets()) != sigma.values {
        return Err(Error::internal("sum-of-points solution does not reproduce σ"));
    }
    Ok(beta)
}

/// All Boolean solutions of a quadratic system, in counting order over
/// `x_1` (low bit) .. `x_n`.
pub fn boolean_solutions(src: &QuadSystemSource) -> Result<Vec<Vec<u32>>> {
    if src.n > 24 {
        return Err(Error::pre("brute-force solving is limited to 24 variables"));
    }
    let mut out = Vec::new();
    for bits in 0u64..(1 << src.n) {
        let a: Vec<u32> = (0..src.n).map(|i| ((bits >> i) & 1) as u32).collect();
        if src.is_solution(&a)? {
            out.push(a);
        }
    }
    Ok(out)
}

pub fn cnf_solutions(cnf: &CnfFormula) -> Result<Vec<Vec<bool>>> {
    if cnf.n > 24 {
        return Err(Error::pre("brute-force solving is limited to 24 variables"));
    }
    Ok((0u64..(1 << cnf.n))
        .map(|bits| (0..cnf.n).map(|i| (bits >> i) & 1 == 1).collect::<Vec<_>>())
        .filter(|z| cnf.satisfied_by(z))
        .collect())
}
