//! Self-checks against the worked examples, run by the `verify` subcommand.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::action::{in_span, is_unipotent_invariant};
use crate::error::Result;
use crate::frac::Frac;
use crate::linalg::{Matrix, Ring};
use crate::poly::{determinant, general_matrix, int_matrix, poly, Polynomial, SymbolicMatrix};
use crate::quiver::{DynkinFamily, Quiver, DEFAULT_PATHWAY_CAP};
use crate::reflect::{are_isomorphic, filt, gr, induced_filtration_plus, random_filtered, rees, reflect_minus, reflect_plus, FilteredConcreteRep};
use crate::repspace::{ConcreteRep, Filtration};
use crate::semiinv::{bideterminant, dw_generators, dz_example, dz_generators, framed_affine_invariant_check, theorem_harness, Bitableau, DwProblem, VSpec};
use crate::springer::{f_z_form, invariant_functions, l_closed_form, l_operator, lab_report, moment_b, n2_identities, solve_subdiagonals, symbolic_r, x_var, y_var, MomentPoint, MonomialOrder, pairwise_coprime};

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckResult {
    pub id: usize,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

fn outcome(id: usize, name: &str, r: Result<(bool, String)>) -> CheckResult {
    let (passed, detail) = r.unwrap_or_else(|e| (false, format!("error: {e}")));
    CheckResult {
        id,
        name: name.to_string(),
        passed,
        detail,
    }
}

fn same_up_to_scalar(got: &[Polynomial], want: &[&str]) -> bool {
    let mut g: Vec<String> = got.iter().map(|p| p.monic().to_string()).collect();
    let mut w: Vec<String> = want.iter().map(|s| poly(s).monic().to_string()).collect();
    g.sort();
    w.sort();
    g == w
}

fn derksen_weyman() -> Result<(bool, String)> {
    let k1 = Quiver::kronecker(1)?;
    let g1 = dw_generators(&DwProblem::new(&k1, &[2, 2], &[1, 0], VSpec::Generic)?)?;
    let k2 = Quiver::kronecker(2)?.with_arrow_ids(&["a", "b"])?;
    let v = vec![
        SymbolicMatrix::identity(1),
        SymbolicMatrix::diagonal(&[Polynomial::scalar("lambda")]),
    ];
    let g2 = dw_generators(&DwProblem::new(&k2, &[2, 2], &[1, 1], VSpec::Specialized(v))?)?;
    let ok1 = same_up_to_scalar(&g1.generators, &["a11*a22 - a12*a21"]);
    let ok2 = same_up_to_scalar(
        &g2.generators,
        &["a11*a22 - a12*a21", "a11*b22 - a12*b21 - a21*b12 + a22*b11", "b11*b22 - b12*b21"],
    );
    let show = |g: &[Polynomial]| g.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
    Ok((ok1 && ok2, format!("1-Kronecker: {}; 2-Kronecker: {}", show(&g1.generators), show(&g2.generators))))
}

fn domokos_zubkov() -> Result<(bool, String)> {
    let g1 = dz_generators(&dz_example("jordan1", 2)?)?;
    let want = poly("t^2*u^2 - (a11 + a22)*s*t*u*v + (a11*a22 - a12*a21)*s^2*v^2");
    let g2 = dz_generators(&dz_example("jordan2", 2)?)?;
    let mixed = poly("a11*b22 - a12*b21 + a22*b11 - a21*b12").monic();
    let has_mixed = g2.generators.iter().any(|g| g.monic() == mixed);
    Ok((
        g1.determinant == want && has_mixed,
        format!("det = {}; mixed generator found: {has_mixed}", g1.determinant),
    ))
}

/// Orientation patterns covering both directions of every edge.
fn orientations(edges: usize, rng: &mut impl Rng) -> Vec<Vec<bool>> {
    let mut out = vec![vec![false; edges], vec![true; edges]];
    out.push((0..edges).map(|k| k % 2 == 0).collect());
    out.push((0..edges).map(|k| k % 2 == 1).collect());
    for _ in 0..4 {
        out.push((0..edges).map(|_| rng.gen_bool(0.5)).collect());
    }
    out
}

pub fn ade_types() -> Vec<(DynkinFamily, usize)> {
    let mut t: Vec<_> = (1..=8).map(|r| (DynkinFamily::A, r)).collect();
    t.extend((4..=8).map(|r| (DynkinFamily::D, r)));
    t.extend((6..=8).map(|r| (DynkinFamily::E, r)));
    t
}

fn pathway_census() -> Result<(bool, String)> {
    let j2 = Quiver::jordan(2)?;
    let ways = j2.enumerate_pathways(DEFAULT_PATHWAY_CAP)?;
    let count = ways.get(&(0, 0)).map_or(0, Vec::len);
    let j2_ok = count == 7 && !j2.at_most_two_pathways(DEFAULT_PATHWAY_CAP)?;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mut checked = 0;
    let mut failures = Vec::new();
    for (family, r) in ade_types() {
        let edges = Quiver::dynkin_edges(family, r)?.len();
        for flip in orientations(edges, &mut rng) {
            let q = Quiver::dynkin(family, r, Some(&flip))?;
            checked += 1;
            if !q.at_most_two_pathways(DEFAULT_PATHWAY_CAP)? {
                failures.push(format!("{family:?}{r}"));
            }
        }
    }
    Ok((
        j2_ok && failures.is_empty(),
        format!("2-Jordan: {count} pathways at vertex 1; {checked} ADE quivers checked, failures: {failures:?}"),
    ))
}

fn bounded_degree() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for (family, r) in [(DynkinFamily::A, 2), (DynkinFamily::A, 3), (DynkinFamily::D, 4)] {
        let q = Quiver::dynkin(family, r, None)?;
        let rep = theorem_harness(&q, &vec![2; r], 2, crate::action::DEFAULT_MONOMIAL_CAP)?;
        ok &= rep.holds;
        detail.push(format!("{family:?}{r}: {} vs {}", rep.invariant_dim, rep.diagonal_count));
    }
    let j2 = Quiver::jordan(2)?.with_arrow_ids(&["a", "c"])?;
    let rep = theorem_harness(&j2, &[2], 2, crate::action::DEFAULT_MONOMIAL_CAP)?;
    let witness = poly("(a11 - a22)*c12 - (c11 - c22)*a12");
    let exceeds = rep.invariant_dim > rep.diagonal_count && in_span(&rep.basis, &witness);
    detail.push(format!("2-Jordan: {} vs {}", rep.invariant_dim, rep.diagonal_count));
    Ok((ok && exceeds, detail.join("; ")))
}

fn framed_affine() -> Result<(bool, String)> {
    let q = Quiver::jordan(1)?.framed().with_arrow_ids(&["a", "x"])?;
    let mut ok = true;
    for f in ["a11", "a22", "x21", "x22", "x11*x22 - x12*x21"] {
        ok &= framed_affine_invariant_check(&poly(f), &q, &[2, 2])?.invariant;
    }
    let k3 = Quiver::kronecker(3)?.with_arrow_ids(&["a", "c", "s"])?;
    let cubic = poly("(a11*c22 - a22*c11)*s12 + (s11*a22 - s22*a11)*c12 + (c11*s22 - c22*s11)*a12");
    let filt = Filtration::complete_standard(&k3, &[2, 2]);
    let cubic_ok = is_unipotent_invariant(&cubic, &k3, &[2, 2], Some(&filt))?.invariant;
    let m = SymbolicMatrix::from_rows(
        [["a11", "c11", "s11"], ["a22", "c22", "s22"], ["a12", "c12", "s12"]]
            .iter()
            .map(|row| row.iter().map(|e| poly(e)).collect())
            .collect(),
    )?;
    let det_ok = determinant(&m)? == cubic;
    Ok((ok && cubic_ok && det_ok, format!("framed generators invariant: {ok}; cubic invariant: {cubic_ok}; cubic is the determinant: {det_ok}")))
}

fn bideterminant_value() -> Result<(bool, String)> {
    let x = general_matrix("x", 2, 2, |_, _| true);
    let a = general_matrix("a", 2, 2, |r, c| r <= c);
    let ax = a.try_mul(&x)?;
    let products: BTreeMap<_, _> = [(vec![0], x), (vec![1, 0], ax)].into();
    let t = Bitableau::parse("2|1@0; 2|2@0; 1 2|1 2@1,0; 2|1@1,0").map_err(crate::error::Error::Invalid)?;
    let value = bideterminant(&t, &products)?;
    Ok((value == poly("x21^2*x22*a11*a22^2*(x11*x22 - x12*x21)"), value.to_string()))
}

/// Representations of the `1 -> 2 <- 3` quiver for each positive root.
pub fn a3_indecomposables() -> Result<Vec<ConcreteRep>> {
    let q = Quiver::new(3, &[("a1", 0, 1), ("a2", 2, 1)])?;
    let roots = [[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 0], [0, 1, 1], [1, 1, 1]];
    roots
        .iter()
        .map(|b| {
            let maps = q
                .arrows()
                .iter()
                .map(|a| Matrix::from_fn(b[a.head], b[a.tail], |_, _| crate::poly::rat(1)))
                .collect();
            ConcreteRep::new(&q, b, maps)
        })
        .collect()
}

fn reflections() -> Result<(bool, String)> {
    let mut ok = true;
    let a2 = Quiver::dynkin(DynkinFamily::A, 2, None)?;
    let a3 = Quiver::new(3, &[("a1", 0, 1), ("a2", 2, 1)])?;
    ok &= reflect_plus(&ConcreteRep::simple(&a2, 1)?, 1)?.total_dim() == 0;
    ok &= reflect_plus(&ConcreteRep::simple(&a3, 1)?, 1)?.total_dim() == 0;
    let mut fixtures = vec![ConcreteRep::new(&a2, &[1, 1], vec![int_matrix(&[&[1]])])?];
    fixtures.extend(a3_indecomposables()?.into_iter().filter(|w| w.beta != [0, 1, 0]));
    let mut formula = true;
    let mut round = true;
    for w in &fixtures {
        let q = &w.quiver;
        let i = (0..q.vertex_count())
            .find(|&v| q.is_sink(v) && !q.arrows_into(v).is_empty())
            .expect("fixtures have a sink");
        let s = reflect_plus(w, i)?;
        let expected: usize = w.quiver.arrows_into(i).iter().map(|&a| w.beta[w.quiver.arrow(a).tail]).sum::<usize>() - w.beta[i];
        formula &= s.beta[i] == expected;
        round &= are_isomorphic(&reflect_minus(&s, i)?, w, 0, crate::reflect::DEFAULT_TRIALS).is_yes();
    }
    let w = ConcreteRep::new(&a3, &[2, 2, 2], vec![int_matrix(&[&[0, 1], &[0, 0]]), Matrix::zeros(2, 2)])?;
    let x = FilteredConcreteRep::new(w, Filtration::new(vec![vec![1, 1, 1], vec![2, 2, 2]])?)?;
    let lhs = gr(&x)?.reflect_plus(1)?.dims();
    let rhs = gr(&induced_filtration_plus(&x, 1)?)?.dims();
    let counter = lhs != rhs;
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let quivers = [a3.clone(), Quiver::jordan(1)?, Quiver::kronecker(2)?];
    let mut roundtrips = 0;
    for k in 0..20 {
        let q = &quivers[k % quivers.len()];
        let beta: Vec<usize> = (0..q.vertex_count()).map(|_| rng.gen_range(1..=3)).collect();
        let levels = rng.gen_range(1..=3);
        let x = random_filtered(q, &beta, levels, &mut rng)?;
        roundtrips += usize::from(filt(&rees(&x)?)? == x);
    }
    ok &= formula && round && counter && roundtrips == 20;
    Ok((
        ok,
        format!("dimension formula: {formula}; round trips: {round}; S+ gr X dims {lhs:?} vs gr S+ X dims {rhs:?}; filt(rees) = id on {roundtrips}/20"),
    ))
}

fn springer_properties() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=5 {
        let rep = lab_report(n, 50, n as u64)?;
        let props_ok = rep.properties.iter().all(|p| p.passed == p.total);
        ok &= props_ok;
        detail.push(format!("n={n}: {}", if props_ok { "all properties hold" } else { "failure" }));
    }
    for n in 2..=4 {
        let r = symbolic_r(n);
        for k in 0..n {
            ok &= l_closed_form(&r, k)? == l_operator(&r, k)?;
        }
    }
    Ok((ok, detail.join("; ")))
}

fn subdiagonal_solver() -> Result<(bool, String)> {
    let mut ok = true;
    for n in 2..=4 {
        let p = MomentPoint::symbolic(n);
        let diag: Vec<Frac> = (0..n).map(|k| p.s.get(k, k).clone()).collect();
        let s = solve_subdiagonals(&p.r, &p.i, &p.j, &diag)?;
        let q = MomentPoint::new(p.r.clone(), s, p.i.clone(), p.j.clone())?;
        let mu = moment_b(&q)?;
        let f = invariant_functions(&q)?.f;
        for a in 0..n {
            ok &= (0..a).all(|b| mu.get(a, b).is_zero()) && *mu.get(a, a) == f[a];
        }
        let zeros = vec![Frac::zero(); n];
        for (i, j) in [(&zeros, &p.j), (&p.i, &zeros)] {
            let s = solve_subdiagonals(&p.r, i, j, &diag)?;
            ok &= (0..n).all(|a| (0..a).all(|b| s.get(a, b).is_zero()));
        }
    }
    Ok((ok, "n = 2, 3, 4 solved symbolically".into()))
}

fn initial_terms() -> Result<(bool, String)> {
    let mut ok = true;
    let mut detail = Vec::new();
    for n in 2..=4 {
        let order = MonomialOrder::standard(n);
        let ms = (0..n).map(|k| order.initial_term(&f_z_form(n, k))).collect::<Result<Vec<_>>>()?;
        for (k, m) in ms.iter().enumerate() {
            let want = poly(&format!("{}*{}", x_var(k), y_var(k)));
            ok &= want.leading().map(|(w, _)| w == m).unwrap_or(false);
        }
        ok &= pairwise_coprime(&ms);
        detail.push(ms.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "));
    }
    Ok((ok, detail.join(" | ")))
}

fn n2() -> Result<(bool, String)> {
    let r = n2_identities();
    Ok((r.all_hold(), format!("singular locus: {}", r.singular_locus.join(", "))))
}

/// Runs every check in order.
pub fn run_all() -> Vec<CheckResult> {
    let checks: [(&str, fn() -> Result<(bool, String)>); 11] = [
        ("Derksen-Weyman generators", derksen_weyman),
        ("Domokos-Zubkov determinants", domokos_zubkov),
        ("pathway census", pathway_census),
        ("bounded-degree invariants", bounded_degree),
        ("framed affine invariants", framed_affine),
        ("bideterminant value", bideterminant_value),
        ("reflection functors", reflections),
        ("spectral projector properties", springer_properties),
        ("subdiagonal solver", subdiagonal_solver),
        ("initial terms", initial_terms),
        ("n = 2 identities", n2),
    ];
    checks
        .iter()
        .enumerate()
        .map(|(k, (name, f))| outcome(k + 1, name, f()))
        .collect()
}
