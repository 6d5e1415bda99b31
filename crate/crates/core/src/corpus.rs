//! Seeded random source instances with known answers.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::boolalg::{MonomialBasis, SquarefreePoly, Subset, Universe, Variant};
use crate::error::{Error, Result};
use crate::frontends::{CnfFormula, QuadSystemSource};
use crate::gf::FieldSpec;
use crate::oracles::boolean_solutions;

fn random_quadratic<R: Rng>(rng: &mut R, field: &FieldSpec, n: usize, density: f64) -> SquarefreePoly {
    let u = Universe::new(Variant::V, n).expect("n >= 1");
    let sets = MonomialBasis::covering(n, 2, Variant::V).expect("n >= 1");
    let mut f = SquarefreePoly::zero(field, u);
    for &s in sets.sets() {
        if rng.gen_bool(density) {
            f.add_term(s, rng.gen_range(1..field.order()));
        }
    }
    f
}

/// `m` random quadratics, each shifted by a constant so that it vanishes at a
/// random Boolean point, which is returned alongside.
pub fn satisfiable_quadeq<R: Rng>(
    rng: &mut R,
    field: &FieldSpec,
    n: usize,
    m: usize,
) -> Result<(QuadSystemSource, Vec<u32>)> {
    let a: Vec<u32> = (0..n).map(|_| rng.gen_range(0..2)).collect();
    let mut eqs = Vec::with_capacity(m);
    for _ in 0..m {
        let mut f = random_quadratic(rng, field, n, 0.5);
        let v = f.eval(&a)?;
        f.add_term(Subset::EMPTY, field.neg(v));
        eqs.push(f);
    }
    Ok((QuadSystemSource::new(field, n, eqs)?, a))
}

/// Random systems drawn until one has no Boolean solution.
pub fn unsatisfiable_quadeq<R: Rng>(
    rng: &mut R,
    field: &FieldSpec,
    n: usize,
    m: usize,
) -> Result<QuadSystemSource> {
    for _ in 0..10_000 {
        let eqs = (0..m).map(|_| random_quadratic(rng, field, n, 0.5)).collect();
        let src = QuadSystemSource::new(field, n, eqs)?;
        if boolean_solutions(&src)?.is_empty() {
            return Ok(src);
        }
    }
    Err(Error::pre(format!(
        "no unsatisfiable system found for n = {n}, m = {m}; raise m"
    )))
}

/// `m` random 3-clauses over distinct variables, each satisfied by a planted
/// assignment, which is returned alongside.
pub fn planted_cnf<R: Rng>(rng: &mut R, n: usize, m: usize) -> Result<(CnfFormula, Vec<bool>)> {
    if n == 0 {
        return Err(Error::pre("need at least one variable"));
    }
    let z: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.5)).collect();
    let vars: Vec<i32> = (1..=n as i32).collect();
    let mut clauses = Vec::with_capacity(m);
    while clauses.len() < m {
        let width = n.min(3);
        let picked: Vec<i32> = vars.choose_multiple(rng, width).copied().collect();
        let mut c = [0i32; 3];
        for k in 0..3 {
            let v = picked[k.min(width - 1)];
            c[k] = if rng.gen_bool(0.5) { v } else { -v };
        }
        let sat = c.iter().any(|&l| z[l.unsigned_abs() as usize - 1] == (l > 0));
        if sat {
            clauses.push(c);
        }
    }
    Ok((CnfFormula::new(n, clauses)?, z))
}
