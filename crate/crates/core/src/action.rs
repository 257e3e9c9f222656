//! Actions of products of general linear, parabolic and unipotent groups on
//! representations and on their coordinate rings.
//!
//! A group element acts on a representation by `W(a) -> g_ha W(a) g_ta^-1`
//! and on functions by `(g.f)(W) = f(g^-1 . W)`.

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Ring};
use crate::poly::{lift, lower, rat, Monomial, Polynomial, Rational, SymbolicMatrix, Variable};
use crate::quiver::Quiver;
use crate::repspace::{parabolic_pattern, ConcreteRep, Filtration, GeneralRep};

/// Default bound on the number of monomials in [`invariant_space`].
pub const DEFAULT_MONOMIAL_CAP: usize = 20_000;

/// Per-vertex invertible matrices together with their inverses.
#[derive(Clone, Debug, PartialEq)]
pub struct GroupElement {
    pub mats: Vec<SymbolicMatrix>,
    pub invs: Vec<SymbolicMatrix>,
}

impl GroupElement {
    /// Checks shapes, forces identity at framed vertices, and verifies
    /// `g_v g_v^-1 = I` symbolically.
    pub fn new(q: &Quiver, beta: &[usize], mats: Vec<SymbolicMatrix>, invs: Vec<SymbolicMatrix>) -> Result<Self> {
        let p = q.vertex_count();
        if beta.len() != p || mats.len() != p || invs.len() != p {
            return Err(Error::GroupElement("one matrix and inverse per vertex required".into()));
        }
        for v in 0..p {
            let n = beta[v];
            if q.is_framed(v) {
                if mats[v] != SymbolicMatrix::identity(n) || invs[v] != SymbolicMatrix::identity(n) {
                    return Err(Error::GroupElement(format!("framed vertex {} must carry the identity", q.label(v))));
                }
                continue;
            }
            if mats[v].rows() != n || !mats[v].is_square() || invs[v].rows() != n || !invs[v].is_square() {
                return Err(Error::GroupElement(format!("vertex {} needs {n}x{n} matrices", q.label(v))));
            }
            if mats[v].try_mul(&invs[v])? != SymbolicMatrix::identity(n) {
                return Err(Error::GroupElement(format!("inverse at vertex {} does not check", q.label(v))));
            }
        }
        Ok(GroupElement { mats, invs })
    }

    pub fn identity(q: &Quiver, beta: &[usize]) -> Self {
        let mats: Vec<_> = (0..q.vertex_count()).map(|v| SymbolicMatrix::identity(beta[v])).collect();
        GroupElement {
            invs: mats.clone(),
            mats,
        }
    }

    /// Rational element; inverses are computed exactly.
    pub fn from_rational(q: &Quiver, beta: &[usize], mats: &[Matrix<Rational>]) -> Result<Self> {
        let mut gs = Vec::new();
        let mut invs = Vec::new();
        for (v, m) in mats.iter().enumerate() {
            let inv = m
                .inverse()
                .ok_or_else(|| Error::GroupElement(format!("matrix at vertex {} is singular", q.label(v))))?;
            gs.push(lift(m));
            invs.push(lift(&inv));
        }
        GroupElement::new(q, beta, gs, invs)
    }

    /// The product `self * other` (act by `other` first).
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        let mut mats = Vec::new();
        let mut invs = Vec::new();
        for v in 0..self.mats.len() {
            mats.push(self.mats[v].try_mul(&other.mats[v])?);
            invs.push(other.invs[v].try_mul(&self.invs[v])?);
        }
        Ok(GroupElement { mats, invs })
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            mats: self.invs.clone(),
            invs: self.mats.clone(),
        }
    }
}

/// A root subgroup `I + u E_ij` at one vertex (indices 1-based).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Root {
    pub vertex: usize,
    pub i: usize,
    pub j: usize,
}

fn root_element(q: &Quiver, beta: &[usize], root: Root, param: &str) -> GroupElement {
    let mut g = GroupElement::identity(q, beta);
    let u = Polynomial::scalar(param);
    g.mats[root.vertex].set(root.i - 1, root.j - 1, u.clone());
    g.invs[root.vertex].set(root.i - 1, root.j - 1, -u);
    g
}

/// The elementary unipotent `I + u E_ij` at vertex `v`, with inverse `I - u E_ij`.
/// Requires `i < j` and, if a filtration is given, that `(i, j)` lies in the
/// parabolic at `v`.
pub fn elementary_unipotent(
    q: &Quiver,
    beta: &[usize],
    f: Option<&Filtration>,
    v: usize,
    i: usize,
    j: usize,
    param: &str,
) -> Result<GroupElement> {
    let bad = Error::NotUnipotentRoot { vertex: v, i, j };
    if v >= q.vertex_count() || q.is_framed(v) || i == 0 || i >= j || j > beta[v] {
        return Err(bad);
    }
    if let Some(f) = f {
        if !parabolic_pattern(f, v).allows(i - 1, j - 1) {
            return Err(bad);
        }
    }
    Ok(root_element(q, beta, Root { vertex: v, i, j }, param))
}

/// The root subgroups that generate the group whose invariants are tested:
/// with a filtration, the `(i, j)` with `i < j` inside the parabolic at each
/// vertex; without one, every off-diagonal `(i, j)`, generating `SL_beta`.
pub fn unipotent_roots(q: &Quiver, beta: &[usize], f: Option<&Filtration>) -> Vec<Root> {
    let mut out = Vec::new();
    for v in 0..q.vertex_count() {
        if q.is_framed(v) {
            continue;
        }
        let n = beta[v];
        let pattern = f.map(|f| parabolic_pattern(f, v));
        for i in 1..=n {
            for j in 1..=n {
                let ok = match &pattern {
                    Some(p) => i < j && p.allows(i - 1, j - 1),
                    None => i != j,
                };
                if ok {
                    out.push(Root { vertex: v, i, j });
                }
            }
        }
    }
    out
}

/// `W(a) -> g_ha W(a) g_ta^-1` on a general representation.
pub fn act_on_general(g: &GroupElement, w: &GeneralRep) -> Result<GeneralRep> {
    let mut out = w.clone();
    for (k, a) in w.quiver.arrows().iter().enumerate() {
        out.matrices[k] = g.mats[a.head].try_mul(&w.matrices[k])?.try_mul(&g.invs[a.tail])?;
    }
    Ok(out)
}

/// `W(a) -> g_ha W(a) g_ta^-1` on a rational representation; `g` must be constant.
pub fn act_on_concrete(g: &GroupElement, w: &ConcreteRep) -> Result<ConcreteRep> {
    let mut maps = Vec::new();
    for (k, a) in w.quiver.arrows().iter().enumerate() {
        let gh = lower(&g.mats[a.head]).ok_or_else(|| Error::GroupElement("element is not constant".into()))?;
        let gt = lower(&g.invs[a.tail]).ok_or_else(|| Error::GroupElement("element is not constant".into()))?;
        maps.push(gh.try_mul(&w.maps[k])?.try_mul(&gt)?);
    }
    ConcreteRep::new(&w.quiver, &w.beta, maps)
}

/// `(g.f)(W) = f(g^-1 . W)`: substitutes every entry variable of `space` by
/// the matching entry of `g_ha^-1 W(a) g_ta`.
pub fn act_on_poly(g: &GroupElement, f: &Polynomial, space: &GeneralRep) -> Result<Polynomial> {
    let vars = space.variable_set();
    if let Some(v) = f.variables().into_iter().find(|v| !vars.contains(v)) {
        return Err(Error::ForeignVariable(v.to_string()));
    }
    let moved = act_on_general(&g.inverse(), space)?;
    let mut images = BTreeMap::new();
    for (k, m) in space.matrices.iter().enumerate() {
        for r in 0..m.rows() {
            for c in 0..m.cols() {
                let e = m.get(r, c);
                if let Some((v, _)) = e.terms().next().and_then(|(mono, _)| mono.powers().first()) {
                    images.insert(v.clone(), moved.matrices[k].get(r, c).clone());
                }
            }
        }
    }
    Ok(f.substitute(&images))
}

/// Outcome of [`is_unipotent_invariant`]; on failure carries the first
/// violating root and `g.f - f` with the symbolic parameter `u`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvarianceReport {
    pub invariant: bool,
    pub roots_checked: usize,
    pub witness: Option<(Root, Polynomial)>,
}

/// Invariance of `f` under every root subgroup of [`unipotent_roots`],
/// each with a symbolic parameter `u`.
pub fn is_unipotent_invariant(
    f: &Polynomial,
    q: &Quiver,
    beta: &[usize],
    filt: Option<&Filtration>,
) -> Result<InvarianceReport> {
    let space = GeneralRep::new(q, beta, filt)?;
    let roots = unipotent_roots(q, beta, filt);
    for root in &roots {
        let g = root_element(q, beta, *root, "u");
        let moved = act_on_poly(&g, f, &space)?;
        let diff = &moved - f;
        if !diff.is_zero() {
            return Ok(InvarianceReport {
                invariant: false,
                roots_checked: roots.len(),
                witness: Some((*root, diff)),
            });
        }
    }
    Ok(InvarianceReport {
        invariant: true,
        roots_checked: roots.len(),
        witness: None,
    })
}

/// Weight of a polynomial under the diagonal torus of the non-framed vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum TorusWeight {
    /// `prod_v det(g_v)^{m_v}`: the same weight on every coordinate of a vertex.
    Character(Vec<i64>),
    /// Homogeneous, but not a power of determinants; keyed by `(vertex, index)`.
    PerIndex(BTreeMap<(usize, usize), i64>),
    Heterogeneous,
}

fn monomial_weight(q: &Quiver, m: &Monomial) -> Result<BTreeMap<(usize, usize), i64>> {
    let mut w: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    for (v, e) in m.powers() {
        let Variable::Entry { id, row, col } = v else {
            continue;
        };
        let k = q.arrow_index(id).ok_or_else(|| Error::ForeignVariable(v.to_string()))?;
        let a = q.arrow(k);
        if !q.is_framed(a.head) {
            *w.entry((a.head, *row)).or_insert(0) += *e as i64;
        }
        if !q.is_framed(a.tail) {
            *w.entry((a.tail, *col)).or_insert(0) -= *e as i64;
        }
    }
    w.retain(|_, x| *x != 0);
    Ok(w)
}

/// Entry `(r, c)` of arrow `a` has weight `+1` at `(ha, r)` and `-1` at `(ta, c)`.
pub fn torus_weight(f: &Polynomial, q: &Quiver, beta: &[usize]) -> Result<TorusWeight> {
    let mut weight: Option<BTreeMap<(usize, usize), i64>> = None;
    for (m, _) in f.terms() {
        let w = monomial_weight(q, m)?;
        match &weight {
            None => weight = Some(w),
            Some(prev) if *prev == w => {}
            Some(_) => return Ok(TorusWeight::Heterogeneous),
        }
    }
    let weight = weight.unwrap_or_default();
    let mut chi = vec![0i64; q.vertex_count()];
    for v in 0..q.vertex_count() {
        if q.is_framed(v) || beta[v] == 0 {
            continue;
        }
        let at = |i: usize| weight.get(&(v, i)).copied().unwrap_or(0);
        let m = at(1);
        if (1..=beta[v]).any(|i| at(i) != m) {
            return Ok(TorusWeight::PerIndex(weight));
        }
        chi[v] = m;
    }
    Ok(TorusWeight::Character(chi))
}

/// Unipotent invariance plus the prescribed determinant character.
pub fn is_semi_invariant(
    f: &Polynomial,
    q: &Quiver,
    beta: &[usize],
    filt: Option<&Filtration>,
    chi: &[i64],
) -> Result<bool> {
    Ok(torus_weight(f, q, beta)? == TorusWeight::Character(chi.to_vec())
        && is_unipotent_invariant(f, q, beta, filt)?.invariant)
}

/// The infinitesimal action of `E_ij` at a vertex, as a derivation of the
/// coordinate ring: the variable at `W(a)[r,c]` goes to the entry of
/// `W(a) E [ta = v] - E W(a) [ha = v]`.
pub fn root_derivation(space: &GeneralRep, root: Root) -> Result<BTreeMap<Variable, Polynomial>> {
    let q = &space.quiver;
    let n = space.beta[root.vertex];
    let mut e = SymbolicMatrix::zeros(n, n);
    e.set(root.i - 1, root.j - 1, Polynomial::one());
    let mut out = BTreeMap::new();
    for (k, a) in q.arrows().iter().enumerate() {
        let w = &space.matrices[k];
        let mut d = SymbolicMatrix::zeros(w.rows(), w.cols());
        if a.tail == root.vertex {
            d = d.try_add(&w.try_mul(&e)?)?;
        }
        if a.head == root.vertex {
            d = d.try_sub(&e.try_mul(w)?)?;
        }
        for r in 0..w.rows() {
            for c in 0..w.cols() {
                let entry = w.get(r, c);
                if let Some((mono, _)) = entry.terms().next() {
                    if let Some((v, _)) = mono.powers().first() {
                        let image = d.get(r, c);
                        if !image.is_zero() {
                            out.insert(v.clone(), image.clone());
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Monomials of exactly degree `d` in `vars`.
pub fn monomials_of_degree(vars: &[Variable], d: u32) -> Vec<Monomial> {
    fn go(vars: &[Variable], start: usize, left: u32, acc: &mut Vec<(Variable, u32)>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_powers(acc.iter().cloned()));
            return;
        }
        for k in start..vars.len() {
            acc.push((vars[k].clone(), 1));
            go(vars, k, left - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(vars, 0, d, &mut Vec::new(), &mut out);
    out
}

/// `C(m + d - 1, d)` summed over `d = 0..=max`, saturating.
pub fn monomial_count(m: usize, max: u32) -> usize {
    let mut total: usize = 0;
    let mut c: u128 = 1; // C(m - 1 + d, d)
    for d in 0..=max as u128 {
        if d > 0 {
            c = c * (m as u128 + d - 1) / d;
        }
        total = total.saturating_add(c.min(usize::MAX as u128) as usize);
    }
    total
}

/// A basis of the invariants of degree at most `d`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantSpace {
    pub degree: u32,
    pub basis: Vec<Polynomial>,
    pub monomials_considered: usize,
}

impl InvariantSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Whether `p` lies in the span of the basis.
    pub fn contains(&self, p: &Polynomial) -> bool {
        in_span(&self.basis, p)
    }
}

/// Linear span membership over the rationals.
pub fn in_span(basis: &[Polynomial], p: &Polynomial) -> bool {
    let mut monos: BTreeSet<Monomial> = p.terms().map(|(m, _)| m.clone()).collect();
    for b in basis {
        monos.extend(b.terms().map(|(m, _)| m.clone()));
    }
    let monos: Vec<Monomial> = monos.into_iter().collect();
    let column = |q: &Polynomial| monos.iter().map(|m| q.coefficient(m)).collect::<Vec<_>>();
    let cols: Vec<Vec<Rational>> = basis.iter().map(column).collect();
    let a = Matrix::from_fn(monos.len(), cols.len(), |r, c| cols[c][r].clone());
    let pc = column(p);
    let b = Matrix::from_fn(monos.len(), cols.len() + 1, |r, c| {
        if c < cols.len() {
            cols[c][r].clone()
        } else {
            pc[r].clone()
        }
    });
    a.rank() == b.rank()
}

/// Degree-bounded invariants: the common kernel of all root derivations on
/// polynomials of degree at most `d`, computed degree by degree and torus
/// weight by torus weight.
pub fn invariant_space(
    q: &Quiver,
    beta: &[usize],
    filt: Option<&Filtration>,
    d: u32,
    cap: usize,
) -> Result<InvariantSpace> {
    let space = GeneralRep::new(q, beta, filt)?;
    let vars = space.variables();
    let count = monomial_count(vars.len(), d);
    if count > cap {
        return Err(Error::MonomialCap { count, cap });
    }
    let derivations: Vec<_> = unipotent_roots(q, beta, filt)
        .into_iter()
        .map(|r| root_derivation(&space, r))
        .collect::<Result<_>>()?;
    let mut basis = Vec::new();
    for deg in 0..=d {
        let mut classes: BTreeMap<Vec<((usize, usize), i64)>, Vec<Monomial>> = BTreeMap::new();
        for m in monomials_of_degree(&vars, deg) {
            let w: Vec<_> = monomial_weight(q, &m)?.into_iter().collect();
            classes.entry(w).or_default().push(m);
        }
        for monos in classes.values() {
            basis.extend(kernel_in_class(monos, &derivations));
        }
    }
    Ok(InvariantSpace {
        degree: d,
        basis,
        monomials_considered: count,
    })
}

fn kernel_in_class(monos: &[Monomial], derivations: &[BTreeMap<Variable, Polynomial>]) -> Vec<Polynomial> {
    let mut rows: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    let mut entries: Vec<(usize, usize, Rational)> = Vec::new();
    for (c, m) in monos.iter().enumerate() {
        let p = Polynomial::term(rat(1), m.clone());
        for (k, d) in derivations.iter().enumerate() {
            for (out, coeff) in p.derive(d).terms() {
                let next = rows.len();
                let r = *rows.entry((k, out.clone())).or_insert(next);
                entries.push((r, c, coeff.clone()));
            }
        }
    }
    let mut a = Matrix::<Rational>::zeros(rows.len(), monos.len());
    for (r, c, v) in entries {
        let cur = a.get(r, c).plus(&v);
        a.set(r, c, cur);
    }
    a.nullspace()
        .into_iter()
        .map(|v| Polynomial::from_terms(monos.iter().cloned().zip(v)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int_matrix, poly};
    use crate::quiver::DynkinFamily;

    fn jordan_ac() -> Quiver {
        Quiver::jordan(2).unwrap().with_arrow_ids(&["a", "c"]).unwrap()
    }

    #[test]
    fn conjugation_point_and_function_actions() {
        let q = Quiver::jordan(1).unwrap();
        let f = Filtration::complete_standard(&q, &[2]);
        let w = GeneralRep::new(&q, &[2], Some(&f)).unwrap();
        let g = elementary_unipotent(&q, &[2], Some(&f), 0, 1, 2, "u").unwrap();
        let moved = act_on_general(&g, &w).unwrap();
        assert_eq!(moved.matrices[0].get(0, 1), &poly("a12 + (a22 - a11)*u"));
        assert_eq!(act_on_poly(&g, &poly("a12"), &w).unwrap(), poly("a12 + (a11 - a22)*u"));
        assert_eq!(act_on_poly(&g, &poly("a11"), &w).unwrap(), poly("a11"));
        assert_eq!(act_on_poly(&GroupElement::identity(&q, &[2]), &poly("a12*a11"), &w).unwrap(), poly("a12*a11"));
        assert!(matches!(act_on_poly(&g, &poly("b12"), &w), Err(Error::ForeignVariable(_))));
    }

    #[test]
    fn tail_vertex_unipotent_on_a_path() {
        // u at the tail of a_m adds a_ii u to entry (i, j) and fixes other arrows
        let q = Quiver::dynkin(DynkinFamily::A, 3, None).unwrap().with_arrow_ids(&["a", "b"]).unwrap();
        let beta = [2, 2, 2];
        let f = Filtration::complete_standard(&q, &beta);
        let w = GeneralRep::new(&q, &beta, Some(&f)).unwrap();
        let g = elementary_unipotent(&q, &beta, Some(&f), 1, 1, 2, "u").unwrap();
        assert_eq!(act_on_poly(&g, &poly("b12"), &w).unwrap(), poly("b12 + b11*u"));
        assert_eq!(act_on_poly(&g, &poly("a11"), &w).unwrap(), poly("a11"));
    }

    #[test]
    fn elementary_unipotents() {
        let q = Quiver::jordan(1).unwrap();
        let g = elementary_unipotent(&q, &[2], None, 0, 1, 2, "u").unwrap();
        assert_eq!(g.mats[0], Matrix::from_rows(vec![vec![poly("1"), poly("u")], vec![poly("0"), poly("1")]]).unwrap());
        assert_eq!(g.invs[0].get(0, 1), &poly("-u"));
        let h = elementary_unipotent(&q, &[2], None, 0, 1, 2, "v").unwrap();
        assert_eq!(g.compose(&h).unwrap().mats[0].get(0, 1), &poly("u + v"));
        assert!(elementary_unipotent(&q, &[2], None, 0, 2, 1, "u").is_err());
        let f = Filtration::new(vec![vec![3]]).unwrap();
        let f2 = Filtration::new(vec![vec![1], vec![3]]).unwrap();
        assert!(elementary_unipotent(&q, &[3], Some(&f), 0, 2, 3, "u").is_ok());
        assert!(elementary_unipotent(&q, &[3], Some(&f2), 0, 1, 2, "u").is_ok());
    }

    #[test]
    fn invariance_checks() {
        let q = Quiver::jordan(1).unwrap();
        let f = Filtration::complete_standard(&q, &[2]);
        assert!(is_unipotent_invariant(&poly("a11"), &q, &[2], Some(&f)).unwrap().invariant);
        let rep = is_unipotent_invariant(&poly("a12"), &q, &[2], Some(&f)).unwrap();
        assert!(!rep.invariant);
        let (root, diff) = rep.witness.unwrap();
        assert_eq!(root, Root { vertex: 0, i: 1, j: 2 });
        assert_eq!(diff, poly("(a11 - a22)*u"));
        let q2 = jordan_ac();
        let f2 = Filtration::complete_standard(&q2, &[2]);
        let w = poly("(a11-a22)*c12 - (c11-c22)*a12");
        assert!(is_unipotent_invariant(&w, &q2, &[2], Some(&f2)).unwrap().invariant);
    }

    #[test]
    fn torus_weights() {
        let k = Quiver::kronecker(1).unwrap();
        let det = poly("a11*a22 - a12*a21");
        assert_eq!(torus_weight(&det, &k, &[2, 2]).unwrap(), TorusWeight::Character(vec![-1, 1]));
        let j = Quiver::jordan(1).unwrap();
        assert_eq!(torus_weight(&poly("a11 + a22"), &j, &[2]).unwrap(), TorusWeight::Character(vec![0]));
        let q2 = jordan_ac();
        match torus_weight(&poly("a11*c12"), &q2, &[2]).unwrap() {
            TorusWeight::PerIndex(w) => assert_eq!(w, [((0, 1), 1), ((0, 2), -1)].into()),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(torus_weight(&poly("a11 + a12"), &j, &[2]).unwrap(), TorusWeight::Heterogeneous);
        assert!(is_semi_invariant(&det, &k, &[2, 2], None, &[-1, 1]).unwrap());
    }

    #[test]
    fn left_action_on_concrete_reps() {
        let q = Quiver::kronecker(1).unwrap();
        let w = ConcreteRep::new(&q, &[2, 2], vec![int_matrix(&[&[1, 2], &[3, 4]])]).unwrap();
        let g = GroupElement::from_rational(&q, &[2, 2], &[int_matrix(&[&[1, 1], &[0, 1]]), int_matrix(&[&[2, 0], &[1, 1]])]).unwrap();
        let h = GroupElement::from_rational(&q, &[2, 2], &[int_matrix(&[&[0, 1], &[1, 0]]), int_matrix(&[&[1, 0], &[5, 1]])]).unwrap();
        let lhs = act_on_concrete(&g, &act_on_concrete(&h, &w).unwrap()).unwrap();
        let rhs = act_on_concrete(&g.compose(&h).unwrap(), &w).unwrap();
        assert_eq!(lhs, rhs);
        // (g, h).A = h A g^-1 for the 1-Kronecker quiver
        let a = &w.maps[0];
        let expected = int_matrix(&[&[2, 0], &[1, 1]]).try_mul(a).unwrap().try_mul(&int_matrix(&[&[1, -1], &[0, 1]])).unwrap();
        assert_eq!(act_on_concrete(&g, &w).unwrap().maps[0], expected);
    }

    #[test]
    fn small_invariant_spaces() {
        let a2 = Quiver::dynkin(DynkinFamily::A, 2, None).unwrap();
        let f = Filtration::complete_standard(&a2, &[2, 2]);
        let s = invariant_space(&a2, &[2, 2], Some(&f), 1, DEFAULT_MONOMIAL_CAP).unwrap();
        assert_eq!(s.dim(), 3);
        assert!(s.contains(&poly("a1[1,1] - 2*a1[2,2] + 5")));
        let s0 = invariant_space(&a2, &[2, 2], Some(&f), 0, DEFAULT_MONOMIAL_CAP).unwrap();
        assert_eq!(s0.dim(), 1);
        assert!(matches!(
            invariant_space(&a2, &[2, 2], Some(&f), 30, 100),
            Err(Error::MonomialCap { .. })
        ));
    }

    #[test]
    fn monomial_counting() {
        assert_eq!(monomial_count(3, 2), 1 + 3 + 6);
        assert_eq!(monomials_of_degree(&[Variable::scalar("x"), Variable::scalar("y")], 2).len(), 3);
        assert_eq!(monomial_count(0, 4), 1);
    }
}
