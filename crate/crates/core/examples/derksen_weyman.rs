//! Semi-invariants of the Kronecker quivers from a determinantal construction.
//!
//! ```text
//! cargo run --example derksen_weyman
//! ```

use quiverlab::semiinv::{dw_generators, dw_matrix, DwProblem, VSpec};
use quiverlab::{Polynomial, Quiver, Result, SymbolicMatrix};

fn main() -> Result<()> {
    let k1 = Quiver::kronecker(1)?;
    let g = dw_generators(&DwProblem::new(&k1, &[2, 2], &[1, 0], VSpec::Generic)?)?;
    println!("1-Kronecker, beta = (2,2): {}", g.generators[0]);

    let k2 = Quiver::kronecker(2)?.with_arrow_ids(&["a", "b"])?;
    let v = vec![
        SymbolicMatrix::identity(1),
        SymbolicMatrix::diagonal(&[Polynomial::scalar("lambda")]),
    ];
    let p = DwProblem::new(&k2, &[2, 2], &[1, 1], VSpec::Specialized(v))?;
    println!("matrix:\n{}", dw_matrix(&p)?);
    let g = dw_generators(&p)?;
    println!("det = {}", g.determinant);
    for (m, c) in &g.coefficients {
        println!("  [{m}] {c}");
    }
    println!("generators:");
    for f in &g.generators {
        println!("  {f}");
    }
    Ok(())
}
