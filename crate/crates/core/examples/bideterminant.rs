//! Bitableaux evaluated on products of general matrices.
//!
//! ```text
//! cargo run --example bideterminant
//! ```

use std::collections::BTreeMap;

use quiverlab::action::is_unipotent_invariant;
use quiverlab::poly::general_matrix;
use quiverlab::repspace::{Filtration, GeneralRep};
use quiverlab::semiinv::{bideterminant, is_block_standard, tag_products, Bitableau};
use quiverlab::{Error, Quiver, Result};

fn main() -> Result<()> {
    // Rows are `row indices | column indices @ tag`; a tag lists arrow indices
    // outermost first, so `1,0` is the product A X.
    let t = Bitableau::parse("2|1@0; 2|2@0; 1 2|1 2@1,0; 2|1@1,0").map_err(Error::Invalid)?;
    let x = general_matrix("x", 2, 2, |_, _| true);
    let a = general_matrix("a", 2, 2, |r, c| r <= c);
    let products: BTreeMap<_, _> = [(vec![0], x.clone()), (vec![1, 0], a.try_mul(&x)?)].into();
    println!("value = {}", bideterminant(&t, &products)?);
    println!("block standard: {}", is_block_standard(&t));

    // The same tableau on the framed Jordan quiver, with products read off the space.
    let q = Quiver::jordan(1)?.framed().with_arrow_ids(&["a", "x"])?;
    let filt = Filtration::complete_standard(&q, &[2, 2]);
    let rep = GeneralRep::new(&q, &[2, 2], Some(&filt))?;
    let t = Bitableau::parse("2|1@1; 1 2|1 2@0,1").map_err(Error::Invalid)?;
    let value = bideterminant(&t, &tag_products(&t, &rep)?)?;
    let report = is_unipotent_invariant(&value, &q, &[2, 2], Some(&filt))?;
    println!("framed value = {value}\n  unipotent invariant: {}", report.invariant);
    Ok(())
}
