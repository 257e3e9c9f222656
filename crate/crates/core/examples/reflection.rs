//! Reflection functors on concrete representations.
//!
//! ```text
//! cargo run --example reflection
//! ```

use quiverlab::poly::int_matrix;
use quiverlab::reflect::{are_isomorphic, reflect_minus, reflect_plus, DEFAULT_TRIALS};
use quiverlab::repspace::ConcreteRep;
use quiverlab::{Quiver, Result};

fn main() -> Result<()> {
    // 1 -> 2 <- 3 with the indecomposable of dimension (1,1,1).
    let q = Quiver::new(3, &[("a1", 0, 1), ("a2", 2, 1)])?;
    let one = || int_matrix(&[&[1]]);
    let w = ConcreteRep::new(&q, &[1, 1, 1], vec![one(), one()])?;
    let s = reflect_plus(&w, 1)?;
    println!("S+ at vertex 2: dims {:?} -> {:?}", w.beta, s.beta);
    for (a, m) in s.quiver.arrows().iter().zip(&s.maps) {
        println!("  {}: {} -> {} is {m}", a.id, a.tail + 1, a.head + 1);
    }
    let back = reflect_minus(&s, 1)?;
    println!("S- S+ W isomorphic to W: {}", are_isomorphic(&back, &w, 0, DEFAULT_TRIALS).is_yes());

    let simple = ConcreteRep::simple(&q, 1)?;
    println!("S+ of the simple at the sink has total dimension {}", reflect_plus(&simple, 1)?.total_dim());

    // Two non-isomorphic representations with the same dimension vector.
    let zero = ConcreteRep::zero(&q, &[1, 1, 1])?;
    println!("W isomorphic to the zero representation: {}", are_isomorphic(&w, &zero, 0, DEFAULT_TRIALS).is_yes());
    Ok(())
}
