//! Finds the minimum-rank member of a small instance and rounds it back to a
//! Boolean solution.

use rankgap::decoder::decode_assignment;
use rankgap::frontends::parse_quadeq;
use rankgap::moment::build_moment_subspace;
use rankgap::oracles::minrank_bruteforce;
use rankgap::PseudoMomentVector;

fn main() -> rankgap::Result<()> {
    let src = parse_quadeq("GF(5); x1*x2 + 4*x3; x1 + x3 - 1")?;
    let l = build_moment_subspace(&src, 2)?;
    let rep = minrank_bruteforce(&l, 1 << 20, 4)?;
    println!("kernel dim {}, minrank {:?}", rep.kernel_dimension, rep.minrank);
    let Some(w) = rep.witness else {
        println!("no nonzero member");
        return Ok(());
    };
    let y = PseudoMomentVector::new(&src.field, l.coordinates().clone(), w)?;
    let d = decode_assignment(&y, &src, 2)?;
    println!("rank profile {:?}, flat level {:?}", d.profile, d.flat_level);
    println!("basis {:?}", d.basis_labels);
    println!("assignment {:?}, residuals {:?}", d.assignment, d.residuals);
    Ok(())
}
