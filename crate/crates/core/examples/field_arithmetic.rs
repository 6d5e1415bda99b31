//! Arithmetic in a few small fields, including the text forms used in files.

use rankgap::FieldSpec;

fn main() -> rankgap::Result<()> {
    for desc in ["GF(2)", "GF(5)", "GF(2^3)", "GF(3^2)"] {
        let f = FieldSpec::parse_descriptor(desc)?;
        println!("{desc:>8} -> {} (order {})", f.descriptor(), f.order());
    }

    let f = FieldSpec::binary(3)?;
    let a = f.parse_elem("(1,0,1)")?;
    let b = f.parse_elem("(0,1,1)")?;
    println!(
        "in {}: {} * {} = {}, inverse of {} is {}",
        f.descriptor(),
        f.format_elem(a),
        f.format_elem(b),
        f.format_elem(f.mul(a, b)),
        f.format_elem(a),
        f.format_elem(f.inv(a)?)
    );

    // Every nonzero element of GF(9) satisfies x^8 = 1.
    let g = FieldSpec::new(3, 2, None)?;
    let ok = (1..g.order()).all(|x| g.pow(x, 8) == 1);
    println!("x^8 = 1 on GF(9)*: {ok}");

    let x = g.element(4)?;
    println!("x = {}, x + x = {}, -x = {}", x, x.add(&x)?, x.neg());
    Ok(())
}
