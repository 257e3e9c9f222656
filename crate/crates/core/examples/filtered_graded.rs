//! Associated graded, Rees and Filt for filtered representations.
//!
//! ```text
//! cargo run --example filtered_graded
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverlab::poly::int_matrix;
use quiverlab::reflect::{filt, gr, induced_filtration_plus, random_filtered, rees, FilteredConcreteRep};
use quiverlab::repspace::{ConcreteRep, Filtration};
use quiverlab::{Matrix, Quiver, Result};

fn main() -> Result<()> {
    // Reflecting then grading differs from grading then reflecting.
    let q = Quiver::new(3, &[("a1", 0, 1), ("a2", 2, 1)])?;
    let w = ConcreteRep::new(&q, &[2, 2, 2], vec![int_matrix(&[&[0, 1], &[0, 0]]), Matrix::zeros(2, 2)])?;
    let x = FilteredConcreteRep::new(w, Filtration::new(vec![vec![1, 1, 1], vec![2, 2, 2]])?)?;
    let g = gr(&x)?;
    println!("gr X dims per level: {:?}", g.dims());
    println!("S+ gr X:  {:?}", g.reflect_plus(1)?.dims());
    println!("gr S+ X:  {:?}", gr(&induced_filtration_plus(&x, 1)?)?.dims());

    // Rees then Filt recovers the filtered representation.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let k = Quiver::kronecker(2)?;
    let x = random_filtered(&k, &[2, 3], 3, &mut rng)?;
    let r = rees(&x)?;
    println!("Rees module over a window of {} levels, torsion free: {}", r.window(), r.is_torsion_free());
    println!("filt(rees(X)) == X: {}", filt(&r)? == x);
    Ok(())
}
