//! Quadratic system -> localizing subspace, then the exhaustive oracle on a
//! satisfiable and an unsatisfiable source.

use rankgap::frontends::parse_quadeq;
use rankgap::moment::build_moment_subspace;
use rankgap::oracles::{boolean_solutions, minrank_bruteforce};

fn main() -> rankgap::Result<()> {
    for text in [
        "GF(3); x1*x2 - 1; x1 + x2 - 2",
        "GF(2); x1 + x2 + 1; x1*x2 + 1",
    ] {
        let src = parse_quadeq(text)?;
        let l = build_moment_subspace(&src, 1)?;
        let rep = minrank_bruteforce(&l, 1 << 16, 1)?;
        println!("{}", src.to_text().trim_end().replace('\n', " | "));
        println!(
            "  solutions {:?}, coordinates {}, constraints {}, kernel dim {}, minrank {:?}",
            boolean_solutions(&src)?,
            l.coordinate_count(),
            l.constraint_count(),
            rep.kernel_dimension,
            rep.minrank
        );
    }
    Ok(())
}
