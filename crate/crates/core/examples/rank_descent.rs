//! Pushes a GF(8) matrix down to GF(2) without leaving a subspace and with
//! rank growing by at most a factor of 3.

use rankgap::frontends::parse_quadeq;
use rankgap::linalg::{rank_descent, DescentConstraints};
use rankgap::moment::{build_moment_subspace, honest_moment_vector};
use rankgap::FieldSpec;

fn main() -> rankgap::Result<()> {
    let src = parse_quadeq("GF(2); x1 + x2; x2*x3 + x3")?;
    let l = build_moment_subspace(&src, 1)?;
    let big = FieldSpec::binary(3)?;
    let lifted = l.with_field(&big)?;

    // Two solutions of the source, mixed with GF(8) weights.
    let u = honest_moment_vector(&big, &[1, 1, 0], lifted.coordinates().clone())?;
    let v = honest_moment_vector(&big, &[1, 1, 1], lifted.coordinates().clone())?;
    let (s, t) = (big.parse_elem("(0,1,1)")?, big.parse_elem("(1,0,0)")?);
    let y: Vec<u32> = u
        .values
        .iter()
        .zip(&v.values)
        .map(|(&a, &b)| big.add(big.mul(s, a), big.mul(t, b)))
        .collect();
    let a = lifted.expand(&y, 1)?;
    println!("A over {}:\n{}", big.descriptor(), a.to_text(false));

    let out = rank_descent(&a, DescentConstraints::Subspace(&lifted))?;
    println!("phi = {:?}", out.functional.row());
    println!("B over GF(2):\n{}", out.matrix.to_text(false));
    println!("rank {} -> {} (bound {})", out.source_rank, out.rank, 3 * out.source_rank);
    Ok(())
}
