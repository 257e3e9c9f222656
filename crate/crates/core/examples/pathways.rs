//! Quivers, pathways, the Euler form and reflections of dimension vectors.
//!
//! ```text
//! cargo run --example pathways
//! ```

use quiverlab::quiver::DEFAULT_PATHWAY_CAP;
use quiverlab::{DynkinFamily, Quiver, Result};

fn main() -> Result<()> {
    let j2 = Quiver::jordan(2)?;
    for ((t, h), ps) in j2.enumerate_pathways(DEFAULT_PATHWAY_CAP)? {
        let names: Vec<_> = ps.iter().map(|p| j2.path_name(p)).collect();
        println!("{} pathways ({},{}): {}", ps.len(), j2.label(t), j2.label(h), names.join(", "));
    }
    println!("2-Jordan has at most two pathways everywhere: {}", j2.at_most_two_pathways(DEFAULT_PATHWAY_CAP)?);

    for (family, r) in [(DynkinFamily::A, 5), (DynkinFamily::D, 6), (DynkinFamily::E, 8)] {
        let q = Quiver::dynkin(family, r, None)?;
        println!(
            "{family:?}{r}: max pathways between two vertices = {}",
            q.max_pathways(DEFAULT_PATHWAY_CAP)?
        );
    }

    let a3 = Quiver::dynkin(DynkinFamily::A, 3, None)?;
    let beta = [1, 1, 0];
    println!("<b,b> = {} for b = {beta:?} on A3", a3.euler_form(&beta, &beta)?);
    let mut b = beta.to_vec();
    for i in [0, 1, 2, 1] {
        b = a3.sigma(i, &b)?;
        println!("  sigma_{} -> {b:?}", a3.label(i));
    }

    let k = Quiver::kronecker(2)?;
    println!("2-Kronecker: (d,d) = {} for d = (1,1)", k.symmetrized_form(&[1, 1], &[1, 1])?);
    Ok(())
}
