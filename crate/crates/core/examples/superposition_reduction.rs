//! CNF -> polynomial system -> quadratic system -> subspace over GF(2), with
//! the honest vector of a satisfying assignment checked at the end.

use rankgap::frontends::parse_dimacs;
use rankgap::superposition::{choose_degree, honest_coordinates, reduce_cnf};
use rankgap::FieldSpec;

fn main() -> rankgap::Result<()> {
    let cnf = parse_dimacs("c tiny\np cnf 3 2\n1 -2 3 0\n-1 2 0\n")?;
    let choice = choose_degree(1, 1, 4.0)?;
    println!("derived degree for k = 1, r = 1: d = {}", choice.d);

    // The derived degree is too large to print; use the relaxed d = 4.
    let (b, q, l) = reduce_cnf(&cnf, 4, true, &FieldSpec::gf2())?;
    println!("B: {} equations, regime {:?}", b.equations.len(), b.regime);
    println!(
        "Q: {} variables, {} linearized + {} multiplicative equations",
        q.variable_count(),
        q.linearized_count(),
        q.equations.len() - q.linearized_count()
    );
    println!("L: {} coordinates, {} constraints", l.coordinate_count(), l.constraint_count());

    let z = [true, true, false];
    assert!(cnf.satisfied_by(&z));
    let y = honest_coordinates(&l, &z)?;
    println!(
        "honest vector: member {}, rank {}",
        l.contains(&y.values)?,
        l.expand(&y.values, 4)?.rank()
    );
    Ok(())
}
