//! Exact polynomial and matrix arithmetic over the rationals.
//!
//! ```text
//! cargo run --example polynomials
//! ```

use std::collections::{BTreeMap, BTreeSet};

use quiverlab::poly::{determinant, general_matrix};
use quiverlab::{poly, Matrix, Polynomial, Result, Ring, Variable};

fn main() -> Result<()> {
    let f = poly("(x1 + 1/2*x2)^2 - x1*x2");
    println!("f = {f}");
    println!("df/dx2 = {}", f.partial(&Variable::scalar("x2")));

    // Substitution is a ring homomorphism.
    let images: BTreeMap<_, _> = [(Variable::scalar("x2"), poly("x1 - 2"))].into();
    println!("f(x1, x1 - 2) = {}", f.substitute(&images));

    // Coefficients with respect to a subset of variables.
    let g = poly("a11*s^2 + a22*s*t - t^2");
    let st: BTreeSet<_> = [Variable::scalar("s"), Variable::scalar("t")].into();
    for (m, c) in g.coefficients_wrt(&st) {
        println!("  coefficient of {m}: {c}");
    }

    // Symbolic determinants by cofactor expansion.
    let a = general_matrix("a", 3, 3, |r, c| r <= c || c == 0);
    println!("det of a 3x3 with one full column:\n  {}", determinant(&a)?);

    // Rational linear algebra.
    let m = Matrix::from_rows(vec![
        vec![poly::rat(1), poly::rat(2), poly::rat(3)],
        vec![poly::rat(2), poly::rat(4), poly::rat(6)],
    ])?;
    println!("rank {} with nullspace of dimension {}", m.rank(), m.nullspace().len());
    let sq = Matrix::from_rows(vec![vec![poly::ratio(1, 2), poly::rat(1)], vec![poly::rat(0), poly::rat(3)]])?;
    println!("inverse of {sq} is {}", sq.inverse().expect("invertible"));

    let p = Polynomial::one().plus(&poly("y")).times(&poly("y - 1"));
    println!("(1 + y)(y - 1) = {p}");
    Ok(())
}
