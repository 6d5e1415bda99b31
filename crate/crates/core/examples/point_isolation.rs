//! A low-degree indicator for one point of a set, and a set of points whose
//! monomial parities match a given assignment.

use rankgap::oracles::{point_isolator, sum_of_points, MonomialAssignment};
use rankgap::{Universe, Variant};

fn main() -> rankgap::Result<()> {
    let points = vec![
        vec![1, 0, 0, 1],
        vec![1, 1, 0, 0],
        vec![1, 1, 1, 0],
        vec![0, 1, 1, 1],
        vec![1, 0, 1, 1],
    ];
    let u = Universe::new(Variant::U, 3)?;
    for target in 0..points.len() {
        let q = point_isolator(u, &points, target, 3)?;
        println!("isolate {:?}: q = {q}", points[target]);
    }

    let sigma = MonomialAssignment {
        n: 2,
        d: 2,
        values: vec![1, 0, 1, 1, 0, 0],
    };
    let beta = sum_of_points(&sigma, 1 << 10)?;
    println!("sigma = {:?} is the parity sum of {:?}", sigma.values, beta.points);
    Ok(())
}
