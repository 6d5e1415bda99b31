//! Lower bound on rank from the smallest nonzero coordinate, compared with
//! the actual rank.

use rankgap::subspace::expand;
use rankgap::superposition::rank_certificate;
use rankgap::{FieldSpec, MonomialBasis, Subset, Variant};

fn main() -> rankgap::Result<()> {
    let f = FieldSpec::gf2();
    let coords = MonomialBasis::covering(4, 4, Variant::V)?;
    for r in [vec![1], vec![1, 2], vec![1, 2, 3], vec![1, 2, 3, 4]] {
        let set = Subset::from_elems(&r);
        let y: Vec<u32> = coords.sets().iter().map(|&s| (s == set) as u32).collect();
        let cert = rank_certificate(&y, &coords, 2).expect("nonzero");
        let rank = expand(&f, &coords, &y, 2)?.rank();
        println!(
            "R = {set:?}: bound {} (applies {}), rank {rank}",
            cert.bound, cert.applies
        );
    }
    Ok(())
}
