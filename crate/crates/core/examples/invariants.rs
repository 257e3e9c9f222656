//! Unipotent invariance checks and bounded-degree invariant spaces.
//!
//! ```text
//! cargo run --release --example invariants
//! ```

use quiverlab::action::{invariant_space, is_unipotent_invariant, torus_weight, DEFAULT_MONOMIAL_CAP};
use quiverlab::repspace::Filtration;
use quiverlab::semiinv::theorem_harness;
use quiverlab::{poly, DynkinFamily, Quiver, Result};

fn main() -> Result<()> {
    let q = Quiver::jordan(1)?.framed().with_arrow_ids(&["a", "x"])?;
    let filt = Filtration::complete_standard(&q, &[2, 2]);
    for f in ["a11", "a12", "x21", "x11*x22 - x12*x21", "x11"] {
        let p = poly(f);
        let r = is_unipotent_invariant(&p, &q, &[2, 2], Some(&filt))?;
        print!("{f:<20} invariant: {:<5}", r.invariant);
        if let Some((root, image)) = r.witness {
            print!("  moved by E{}{} at vertex {} to {image}", root.i, root.j, root.vertex + 1);
        }
        println!("  weight {:?}", torus_weight(&p, &q, &[2, 2])?);
    }

    for (family, r) in [(DynkinFamily::A, 2), (DynkinFamily::A, 3), (DynkinFamily::D, 4)] {
        let q = Quiver::dynkin(family, r, None)?;
        let h = theorem_harness(&q, &vec![2; r], 2, DEFAULT_MONOMIAL_CAP)?;
        println!("{family:?}{r}: {} invariants of degree <= 2, {} diagonal", h.invariant_dim, h.diagonal_count);
    }

    let j2 = Quiver::jordan(2)?.with_arrow_ids(&["a", "c"])?;
    let filt = Filtration::complete_standard(&j2, &[2]);
    let s = invariant_space(&j2, &[2], Some(&filt), 2, DEFAULT_MONOMIAL_CAP)?;
    println!("2-Jordan: dimension {}", s.dim());
    let w = poly("(a11 - a22)*c12 - (c11 - c22)*a12");
    println!("  contains {w}: {}", s.contains(&w));
    Ok(())
}
