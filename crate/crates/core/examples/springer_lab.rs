//! The Borel moment map, spectral projectors and the n = 2 identities.
//!
//! ```text
//! cargo run --release --example springer_lab
//! ```

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use quiverlab::springer::{
    diagonalizer, f_z_form, initial_terms_regular, l_closed_form, l_operator, lab_report, n2_identities, random_rss,
    symbolic_r, MonomialOrder,
};
use quiverlab::Result;

fn main() -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let r = random_rss(3, &mut rng);
    println!("r = {r}");
    for k in 0..3 {
        let l = l_operator(&r, k)?;
        println!("L{} = {l}  trace {}", k + 1, l.trace());
    }
    println!("diagonalizer b = {}", diagonalizer(&r)?);

    let sym = symbolic_r(2);
    println!("symbolic L1 for n = 2: {}", l_closed_form(&sym, 0)?);

    let report = lab_report(4, 20, 0)?;
    for p in &report.properties {
        println!("  {:<34} {}/{}", p.property, p.passed, p.total);
    }

    let order = MonomialOrder::standard(3);
    let fs: Vec<_> = (0..3).map(|k| f_z_form(3, k)).collect();
    let reg = initial_terms_regular(&fs, &order)?;
    let shown: Vec<_> = reg.initial_terms.iter().map(ToString::to_string).collect();
    println!("initial terms {} pairwise coprime: {}", shown.join(", "), reg.regular);

    let n2 = n2_identities();
    for c in &n2.identities {
        println!("  {:<40} {}", c.name, if c.holds { "holds" } else { "fails" });
    }
    println!("singular locus: {}", n2.singular_locus.join(", "));
    Ok(())
}
