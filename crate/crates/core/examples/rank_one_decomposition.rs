//! Splits a symmetric GF(2) matrix into rank-one outer products.

use rankgap::linalg::symmetric_rank_one_decomposition;
use rankgap::{FFMatrix, FieldSpec};

fn main() -> rankgap::Result<()> {
    let a = FFMatrix::from_rows(
        &FieldSpec::gf2(),
        &[
            vec![0, 1, 1, 0],
            vec![1, 0, 1, 0],
            vec![1, 1, 1, 1],
            vec![0, 0, 1, 0],
        ],
    )?;
    let dec = symmetric_rank_one_decomposition(&a)?;
    println!("rank {} -> {} terms", dec.source_rank, dec.len());
    for u in &dec.vectors {
        println!("  u = {u:?}");
    }
    assert_eq!(dec.outer_sum(), a);
    println!("sum of u u^T reproduces A");
    Ok(())
}
