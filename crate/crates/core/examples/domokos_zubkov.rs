//! Block matrices of pathways and the semi-invariants they produce.
//!
//! ```text
//! cargo run --example domokos_zubkov
//! ```

use quiverlab::quiver::DEFAULT_PATHWAY_CAP;
use quiverlab::semiinv::{dz_example, dz_generators, dz_matrix, DzProblem};
use quiverlab::{Quiver, Result};

fn main() -> Result<()> {
    for name in ["jordan1", "jordan2"] {
        let p = dz_example(name, 2)?;
        println!("{name}: block matrix\n{}", dz_matrix(&p)?);
        let g = dz_generators(&p)?;
        println!("det = {}", g.determinant);
        for f in &g.generators {
            println!("  generator {f}");
        }
    }

    // Blocks built from every pathway of length at most 2 with free scalars.
    let q = Quiver::affine_a(1, None)?;
    let p = DzProblem::auto(&q, &[1, 1], &[0, 1], 2, DEFAULT_PATHWAY_CAP)?;
    let g = dz_generators(&p)?;
    println!("affine A1, beta = (1,1):");
    for f in &g.generators {
        println!("  generator {f}");
    }
    Ok(())
}
