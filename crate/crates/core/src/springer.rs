//! The Borel moment map on pairs `(r, s)` of an upper triangular `r` and a
//! lower triangular `s` together with a vector `i` and a covector `j`, on the
//! locus where `r` has distinct diagonal entries.
//!
//! Indices are 0-based throughout. Symbolic points use entries `r[a,b]`,
//! `s[a,b]` and scalars `x{k}`, `y{k}` with 1-based names, and work in the
//! localization [`Frac`] at the differences of diagonal entries of `r`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::frac::Frac;
use crate::linalg::{Field, Matrix, Ring};
use crate::poly::{poly, Monomial, Polynomial, Rational, Variable};

/// `(r, s, i, j)` with `r` upper triangular, `s` lower triangular, `i` a
/// column and `j` a row.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentPoint<T> {
    pub r: Matrix<T>,
    pub s: Matrix<T>,
    pub i: Vec<T>,
    pub j: Vec<T>,
}

impl<T: Field> MomentPoint<T> {
    pub fn new(r: Matrix<T>, s: Matrix<T>, i: Vec<T>, j: Vec<T>) -> Result<Self> {
        let n = r.rows();
        if !r.is_square() || s.rows() != n || s.cols() != n || i.len() != n || j.len() != n {
            return Err(Error::Shape(format!("moment point components must all have size {n}")));
        }
        for a in 0..n {
            for b in 0..n {
                if a > b && !r.get(a, b).is_zero() {
                    return Err(Error::Shape(format!("r has a nonzero entry below the diagonal at ({}, {})", a + 1, b + 1)));
                }
                if a < b && !s.get(a, b).is_zero() {
                    return Err(Error::Shape(format!("s has a nonzero entry above the diagonal at ({}, {})", a + 1, b + 1)));
                }
            }
        }
        Ok(MomentPoint { r, s, i, j })
    }

    pub fn n(&self) -> usize {
        self.r.rows()
    }

    pub fn is_rss(&self) -> bool {
        is_rss(&self.r)
    }

    fn i_col(&self) -> Matrix<T> {
        Matrix::from_fn(self.n(), 1, |a, _| self.i[a].clone())
    }

    fn j_row(&self) -> Matrix<T> {
        Matrix::from_fn(1, self.n(), |_, b| self.j[b].clone())
    }
}

pub fn r_var(a: usize, b: usize) -> Variable {
    Variable::entry("r", a + 1, b + 1)
}

pub fn s_var(a: usize, b: usize) -> Variable {
    Variable::entry("s", a + 1, b + 1)
}

pub fn x_var(k: usize) -> Variable {
    Variable::scalar(&format!("x{}", k + 1))
}

pub fn y_var(k: usize) -> Variable {
    Variable::scalar(&format!("y{}", k + 1))
}

fn fvar(v: Variable) -> Frac {
    Frac::from_poly(Polynomial::var(v))
}

impl MomentPoint<Frac> {
    /// Every coordinate a distinct variable.
    pub fn symbolic(n: usize) -> Self {
        MomentPoint {
            r: symbolic_r(n),
            s: Matrix::from_fn(n, n, |a, b| if a >= b { fvar(s_var(a, b)) } else { Frac::zero() }),
            i: (0..n).map(|k| fvar(x_var(k))).collect(),
            j: (0..n).map(|k| fvar(y_var(k))).collect(),
        }
    }
}

/// Generic upper triangular `r` over the localization.
pub fn symbolic_r(n: usize) -> Matrix<Frac> {
    Matrix::from_fn(n, n, |a, b| if a <= b { fvar(r_var(a, b)) } else { Frac::zero() })
}

pub fn is_rss<T: Field>(r: &Matrix<T>) -> bool {
    let n = r.rows();
    (0..n).all(|a| (a + 1..n).all(|b| r.get(a, a).minus(r.get(b, b)).inverse().is_some()))
}

fn require_rss<T: Field>(r: &Matrix<T>) -> Result<()> {
    if is_rss(r) {
        Ok(())
    } else {
        Err(Error::NotRegularSemisimple)
    }
}

/// Keeps the entries on and below the diagonal.
pub fn project_lower<T: Ring>(m: &Matrix<T>) -> Matrix<T> {
    Matrix::from_fn(m.rows(), m.cols(), |a, b| if a >= b { m.get(a, b).clone() } else { T::zero() })
}

/// `[r, s] + i j`, projected to the entries on and below the diagonal.
pub fn moment_b<T: Field>(p: &MomentPoint<T>) -> Result<Matrix<T>> {
    let full = p.r.commutator(&p.s)?.try_add(&p.i_col().try_mul(&p.j_row())?)?;
    Ok(project_lower(&full))
}

/// `prod_{k != iota} (r - r_kk)` normalized to trace one.
pub fn l_operator<T: Field>(r: &Matrix<T>, iota: usize) -> Result<Matrix<T>> {
    require_rss(r)?;
    let n = r.rows();
    let mut prod = Matrix::identity(n);
    for k in (0..n).filter(|&k| k != iota) {
        let shifted = r.try_sub(&Matrix::identity(n).scale(r.get(k, k)))?;
        prod = prod.try_mul(&shifted)?;
    }
    let inv = prod.trace().inverse().ok_or(Error::NotRegularSemisimple)?;
    Ok(prod.scale(&inv))
}

/// Sum over strictly increasing chains from `from` to `to` of the products
/// of `r` along consecutive pairs, each divided by `r_{iota iota} - r_xx` for
/// every chain vertex `x` other than `iota`.
fn chain_sum<T: Field>(r: &Matrix<T>, iota: usize, from: usize, to: usize) -> Result<T> {
    let inner: Vec<usize> = (from + 1..to).collect();
    let mut total = T::zero();
    for mask in 0u32..(1 << inner.len()) {
        let mut chain = vec![from];
        chain.extend(inner.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| v));
        chain.push(to);
        let mut term = T::one();
        for w in chain.windows(2) {
            term = term.times(r.get(w[0], w[1]));
        }
        for &x in chain.iter().filter(|&&x| x != iota) {
            let d = r.get(iota, iota).minus(r.get(x, x));
            term = term.divided(&d).ok_or(Error::NotRegularSemisimple)?;
        }
        total = total.plus(&term);
    }
    Ok(total)
}

/// The column `u` and row `w` with `L^iota = u w`, from chain sums.
pub fn l_factors<T: Field>(r: &Matrix<T>, iota: usize) -> Result<(Vec<T>, Vec<T>)> {
    require_rss(r)?;
    let n = r.rows();
    let mut u = vec![T::zero(); n];
    let mut w = vec![T::zero(); n];
    u[iota] = T::one();
    w[iota] = T::one();
    for g in 0..iota {
        u[g] = chain_sum(r, iota, g, iota)?;
    }
    for m in iota + 1..n {
        w[m] = chain_sum(r, iota, iota, m)?;
    }
    Ok((u, w))
}

/// `L^iota` assembled from the chain-sum coordinates.
pub fn l_closed_form<T: Field>(r: &Matrix<T>, iota: usize) -> Result<Matrix<T>> {
    let (u, w) = l_factors(r, iota)?;
    Ok(Matrix::from_fn(r.rows(), r.cols(), |a, b| u[a].times(&w[b])))
}

/// Upper unitriangular `b` with `b r b^-1` diagonal: row `iota` of `b` is
/// row `iota` of `L^iota`.
pub fn diagonalizer<T: Field>(r: &Matrix<T>) -> Result<Matrix<T>> {
    let n = r.rows();
    let ls: Vec<Matrix<T>> = (0..n).map(|k| l_operator(r, k)).collect::<Result<_>>()?;
    Ok(Matrix::from_fn(n, n, |a, b| ls[a].get(a, b).clone()))
}

/// Inverse of [`diagonalizer`]: column `iota` is column `iota` of `L^iota`.
pub fn diagonalizer_inverse<T: Field>(r: &Matrix<T>) -> Result<Matrix<T>> {
    let n = r.rows();
    let us: Vec<Vec<T>> = (0..n).map(|k| l_factors(r, k).map(|f| f.0)).collect::<Result<_>>()?;
    Ok(Matrix::from_fn(n, n, |a, b| us[b][a].clone()))
}

/// Values of the trace functions at a point.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantValues<T> {
    /// `j L^iota i`.
    pub f: Vec<T>,
    /// `tr(L^iota s)`.
    pub g: Vec<T>,
    /// `tr(L^iota r)`.
    pub h: Vec<T>,
    /// `((gamma, nu), 1 / tr((L^nu - L^gamma) r))` for `gamma != nu`.
    pub k: Vec<((usize, usize), T)>,
}

pub fn invariant_functions<T: Field>(p: &MomentPoint<T>) -> Result<InvariantValues<T>> {
    let n = p.n();
    let ls: Vec<Matrix<T>> = (0..n).map(|k| l_operator(&p.r, k)).collect::<Result<_>>()?;
    let (ic, jr) = (p.i_col(), p.j_row());
    let mut out = InvariantValues {
        f: Vec::new(),
        g: Vec::new(),
        h: Vec::new(),
        k: Vec::new(),
    };
    for l in &ls {
        out.f.push(jr.try_mul(l)?.try_mul(&ic)?.get(0, 0).clone());
        out.g.push(l.try_mul(&p.s)?.trace());
        out.h.push(l.try_mul(&p.r)?.trace());
    }
    for g in 0..n {
        for v in 0..n {
            if g != v {
                let t = ls[v].try_sub(&ls[g])?.try_mul(&p.r)?.trace();
                out.k.push(((g, v), t.inverse().ok_or(Error::NotRegularSemisimple)?));
            }
        }
    }
    Ok(out)
}

/// `(b r b^-1, proj(b s b^-1), b i, j b^-1)` for invertible upper triangular `b`.
pub fn act_b<T: Field>(b: &Matrix<T>, p: &MomentPoint<T>) -> Result<MomentPoint<T>> {
    let n = p.n();
    if b.rows() != n || !b.is_square() || (0..n).any(|x| (0..x).any(|y| !b.get(x, y).is_zero())) {
        return Err(Error::GroupElement("expected an upper triangular matrix of matching size".into()));
    }
    let inv = b.inverse().ok_or_else(|| Error::GroupElement("singular".into()))?;
    let r = b.try_mul(&p.r)?.try_mul(&inv)?;
    let s = project_lower(&b.try_mul(&p.s)?.try_mul(&inv)?);
    let i = b.try_mul(&p.i_col())?.col(0);
    let j = p.j_row().try_mul(&inv)?.row(0);
    MomentPoint::new(r, s, i, j)
}

/// Solves the strictly lower entries of the moment equation for `s`, level
/// by level from the corner inwards, given the diagonal of `s`.
pub fn solve_subdiagonals<T: Field>(r: &Matrix<T>, i: &[T], j: &[T], diag: &[T]) -> Result<Matrix<T>> {
    require_rss(r)?;
    let n = r.rows();
    if i.len() != n || j.len() != n || diag.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: i.len().min(j.len()).min(diag.len()) });
    }
    let mut s = Matrix::diagonal(diag);
    for level in (1..n).rev() {
        for g in 0..n - level {
            let a = g + level;
            let mut acc = i[a].times(&j[g]);
            for k in a + 1..n {
                acc = acc.plus(&r.get(a, k).times(s.get(k, g)));
            }
            for k in 0..g {
                acc = acc.minus(&s.get(a, k).times(r.get(k, g)));
            }
            let d = r.get(g, g).minus(r.get(a, a));
            s.set(a, g, acc.divided(&d).ok_or(Error::NotRegularSemisimple)?);
        }
    }
    Ok(s)
}

/// The variable `z` standing for `r_ab / (r_{iota iota} - r_cc)`.
pub fn z_var(iota: usize, c: usize, a: usize, b: usize) -> Variable {
    Variable::scalar(&format!("z{}{}_{}{}", iota + 1, c + 1, a + 1, b + 1))
}

fn z_chain_sum(iota: usize, from: usize, to: usize, upward: bool) -> Polynomial {
    let inner: Vec<usize> = (from + 1..to).collect();
    let mut total = Polynomial::zero();
    for mask in 0u32..(1 << inner.len()) {
        let mut chain = vec![from];
        chain.extend(inner.iter().enumerate().filter(|(k, _)| mask >> k & 1 == 1).map(|(_, &v)| v));
        chain.push(to);
        let mut term = Polynomial::one();
        for w in chain.windows(2) {
            // each step carries the denominator of the vertex that is not iota
            let c = if upward { w[0] } else { w[1] };
            term = &term * &Polynomial::var(z_var(iota, c, w[0], w[1]));
        }
        total = &total + &term;
    }
    total
}

/// `F_iota = j L^iota i` written as a polynomial in `x`, `y` and the `z`
/// variables of [`z_var`].
pub fn f_z_form(n: usize, iota: usize) -> Polynomial {
    let mut f = Polynomial::zero();
    for g in 0..=iota {
        let u = if g == iota { Polynomial::one() } else { z_chain_sum(iota, g, iota, true) };
        for m in iota..n {
            let w = if m == iota { Polynomial::one() } else { z_chain_sum(iota, iota, m, false) };
            let xy = Polynomial::var(y_var(g)) * Polynomial::var(x_var(m));
            f = &f + &(&(&u * &w) * &xy);
        }
    }
    f
}

/// The fractions the `z` variables of an `n`-dimensional problem stand for.
pub fn z_images(n: usize) -> BTreeMap<Variable, Frac> {
    let mut out = BTreeMap::new();
    for iota in 0..n {
        for a in 0..n {
            for b in a + 1..n {
                for c in [a, b] {
                    if c != iota {
                        let val = fvar(r_var(a, b)).times(&Frac::inv_difference(&r_var(iota, iota), &r_var(c, c)));
                        out.insert(z_var(iota, c, a, b), val);
                    }
                }
            }
        }
    }
    out
}

/// Evaluates a polynomial with some variables replaced by fractions.
pub fn to_frac(p: &Polynomial, images: &BTreeMap<Variable, Frac>) -> Frac {
    let mut total = Frac::zero();
    for (m, c) in p.terms() {
        let mut term = Frac::from_poly(Polynomial::constant(c.clone()));
        for (v, e) in m.powers() {
            let base = images.get(v).cloned().unwrap_or_else(|| fvar(v.clone()));
            for _ in 0..*e {
                term = term.times(&base);
            }
        }
        total = total.plus(&term);
    }
    total
}

/// Lexicographic order on a priority list of variables; other variables
/// are treated as coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialOrder {
    pub priority: Vec<Variable>,
}

impl MonomialOrder {
    /// `x_1 > ... > x_n > y_n > ... > y_1`.
    pub fn standard(n: usize) -> Self {
        let mut priority: Vec<Variable> = (0..n).map(x_var).collect();
        priority.extend((0..n).rev().map(y_var));
        MonomialOrder { priority }
    }

    /// The first priority variable whose exponents differ decides.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        for v in &self.priority {
            match a.exponent(v).cmp(&b.exponent(v)) {
                Ordering::Equal => continue,
                other => return other,
            }
        }
        Ordering::Equal
    }

    /// Largest monomial over the priority variables with a nonzero coefficient.
    pub fn initial_term(&self, f: &Polynomial) -> Result<Monomial> {
        let vars: BTreeSet<Variable> = self.priority.iter().cloned().collect();
        f.coefficients_wrt(&vars)
            .into_keys()
            .max_by(|a, b| self.compare(a, b))
            .ok_or(Error::ZeroPolynomial)
    }
}

pub fn pairwise_coprime(ms: &[Monomial]) -> bool {
    ms.iter().enumerate().all(|(k, a)| ms[k + 1..].iter().all(|b| a.is_coprime(b)))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RegularityReport {
    pub initial_terms: Vec<String>,
    pub regular: bool,
}

/// Initial terms of `fs`; pairwise coprime initial monomials certify a
/// regular sequence.
pub fn initial_terms_regular(fs: &[Polynomial], order: &MonomialOrder) -> Result<RegularityReport> {
    let ms: Vec<Monomial> = fs.iter().map(|f| order.initial_term(f)).collect::<Result<_>>()?;
    Ok(RegularityReport {
        initial_terms: ms.iter().map(ToString::to_string).collect(),
        regular: pairwise_coprime(&ms),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IdentityCheck {
    pub name: String,
    pub residual: String,
    pub holds: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct N2Report {
    pub identities: Vec<IdentityCheck>,
    /// The gradient system after eliminating `R1`.
    pub singular_locus: Vec<String>,
    pub singular_locus_holds: bool,
}

impl N2Report {
    pub fn all_hold(&self) -> bool {
        self.singular_locus_holds && self.identities.iter().all(|c| c.holds)
    }
}

/// The `n = 2` relations among the trace functions and the symmetric
/// square relation, by exact expansion.
pub fn n2_identities() -> N2Report {
    let f = poly("(r11 - r22)*s11 + r12*s21");
    let g = poly("(r11 - r22)*s22 - r12*s21");
    let h = poly("r11*s11 + r22*s22 + r12*s21");
    let k = poly("r11*s22 + r22*s11 - r12*s21");
    let s_sum = poly("s11 + s22");
    let check = |name: &str, p: Polynomial| IdentityCheck {
        name: name.to_string(),
        residual: p.to_string(),
        holds: p.is_zero(),
    };
    let mut identities = vec![
        check("f - g - h + k", &(&(&f - &g) - &h) + &k),
        check("g - r11*(s11 + s22) + h", &(&g - &(&poly("r11") * &s_sum)) + &h),
        check("f + g + (r22 - r11)*(s11 + s22)", &(&f + &g) + &(&poly("r22 - r11") * &s_sum)),
    ];
    let sym: BTreeMap<Variable, Polynomial> = [
        ("R1", "r11 + r22"),
        ("S1", "s11 + s22"),
        ("R2", "r11^2 + r22^2"),
        ("S2", "s11^2 + s22^2"),
        ("T", "r11*s11 + r22*s22"),
    ]
    .into_iter()
    .map(|(v, e)| (Variable::scalar(v), poly(e)))
    .collect();
    let syzygy = poly("-2*T^2 + 2*R1*S1*T + 2*R2*S2 - S2*R1^2 - R2*S1^2");
    identities.push(check("symmetric square relation", syzygy.substitute(&sym)));

    let phi = poly("R1*(S1 + S2 + (R2 - R1)*T)");
    let r1 = Variable::scalar("R1");
    let gradient: Vec<Polynomial> = ["R1", "S1", "S2", "R2", "T"]
        .iter()
        .map(|v| phi.partial(&Variable::scalar(v)))
        .collect();
    let forces_r1 = gradient.iter().any(|p| p.monic() == Polynomial::var(r1.clone()));
    let at_zero: BTreeMap<Variable, Polynomial> = [(r1.clone(), Polynomial::zero())].into();
    let mut rest: Vec<Polynomial> = Vec::new();
    for p in &gradient {
        let q = p.substitute(&at_zero);
        if !q.is_zero() && !rest.contains(&q.monic()) {
            rest.push(q.monic());
        }
    }
    let expected = poly("S1 + S2 + R2*T");
    let singular_locus_holds = forces_r1 && rest == vec![expected];
    let mut singular_locus = vec![r1.to_string()];
    singular_locus.extend(rest.iter().map(ToString::to_string));
    N2Report {
        identities,
        singular_locus,
        singular_locus_holds,
    }
}

/// Limit as `t -> 0` under `diag(t^{a_k})`; `None` when some nonzero
/// coordinate has a negative exponent.
pub fn torus_limit(p: &MomentPoint<Rational>, a: &[i64]) -> Result<Option<MomentPoint<Rational>>> {
    let n = p.n();
    if a.len() != n {
        return Err(Error::LengthMismatch { expected: n, got: a.len() });
    }
    let mut ok = true;
    let mut keep = |value: &Rational, exponent: i64| -> Rational {
        if value.is_zero() || exponent > 0 {
            Rational::zero()
        } else {
            if exponent < 0 {
                ok = false;
            }
            value.clone()
        }
    };
    let r = Matrix::from_fn(n, n, |x, y| keep(p.r.get(x, y), a[x] - a[y]));
    let s = Matrix::from_fn(n, n, |x, y| keep(p.s.get(x, y), a[x] - a[y]));
    let i = (0..n).map(|x| keep(&p.i[x], a[x])).collect();
    let j = (0..n).map(|y| keep(&p.j[y], -a[y])).collect();
    if !ok {
        return Ok(None);
    }
    MomentPoint::new(r, s, i, j).map(Some)
}

/// `a_k = 1` where `x_k != 0`, `-1` where `y_k != 0`, else `0`; requires
/// `x_k y_k = 0` for every `k`.
pub fn recipe_exponents(p: &MomentPoint<Rational>) -> Result<Vec<i64>> {
    (0..p.n())
        .map(|k| match (p.i[k].is_zero(), p.j[k].is_zero()) {
            (false, false) => Err(Error::Invalid(format!("x{0} and y{0} are both nonzero", k + 1))),
            (false, true) => Ok(1),
            (true, false) => Ok(-1),
            (true, true) => Ok(0),
        })
        .collect()
}

fn small_rational(rng: &mut impl Rng) -> Rational {
    Rational::new(rng.gen_range(-6i64..=6).into(), rng.gen_range(1i64..=3).into())
}

/// Upper triangular with distinct integer diagonal and small rational entries.
pub fn random_rss(n: usize, rng: &mut impl Rng) -> Matrix<Rational> {
    let mut diag: Vec<i64> = (-9..=9).collect();
    diag.shuffle(rng);
    Matrix::from_fn(n, n, |a, b| match a.cmp(&b) {
        Ordering::Less => small_rational(rng),
        Ordering::Equal => Rational::from_integer(diag[a].into()),
        Ordering::Greater => Rational::zero(),
    })
}

/// Invertible upper triangular matrix.
pub fn random_borel(n: usize, rng: &mut impl Rng) -> Matrix<Rational> {
    Matrix::from_fn(n, n, |a, b| match a.cmp(&b) {
        Ordering::Less => small_rational(rng),
        Ordering::Equal => {
            let v: i64 = *[-3i64, -2, -1, 1, 2, 3].choose(rng).expect("nonempty");
            Rational::from_integer(v.into())
        }
        Ordering::Greater => Rational::zero(),
    })
}

pub fn random_point(n: usize, rng: &mut impl Rng) -> MomentPoint<Rational> {
    let r = random_rss(n, rng);
    let s = Matrix::from_fn(n, n, |a, b| if a >= b { small_rational(rng) } else { Rational::zero() });
    let i = (0..n).map(|_| small_rational(rng)).collect();
    let j = (0..n).map(|_| small_rational(rng)).collect();
    MomentPoint { r, s, i, j }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PropertyRow {
    pub property: String,
    pub passed: usize,
    pub total: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LabReport {
    pub n: usize,
    pub samples: usize,
    pub seed: u64,
    pub properties: Vec<PropertyRow>,
    /// `F`, `G`, `H` at the first sample point.
    pub sample_invariants: Vec<String>,
    /// Strictly lower moment entries after solving, symbolically (`n <= 4`).
    pub solver_residuals: Vec<String>,
    /// `det(L^iota)` at the first sample; these vanish for `n >= 2`.
    pub l_determinants: Vec<String>,
}

impl LabReport {
    pub fn all_pass(&self) -> bool {
        self.properties.iter().all(|p| p.passed == p.total) && self.solver_residuals.iter().all(|r| r == "0")
    }
}

/// Randomized property table for the spectral projectors, the diagonalizer
/// and the trace functions at size `n`.
pub fn lab_report(n: usize, samples: usize, seed: u64) -> Result<LabReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let names = [
        "L idempotent",
        "L mutually orthogonal",
        "sum of L is I",
        "tr L = 1",
        "tr(L r) = r_kk",
        "L r = r L",
        "closed form = product formula",
        "b r b^-1 diagonal",
        "(b s b^-1)_kk = tr(L s)",
        "F G H K invariant under B",
    ];
    let mut passed = vec![0usize; names.len()];
    let mut sample_invariants = Vec::new();
    let mut l_determinants = Vec::new();
    for sample in 0..samples {
        let p = random_point(n, &mut rng);
        let ls: Vec<_> = (0..n).map(|k| l_operator(&p.r, k)).collect::<Result<_>>()?;
        let id = Matrix::<Rational>::identity(n);
        let mut results = vec![true; names.len()];
        let mut sum = Matrix::zeros(n, n);
        for (k, l) in ls.iter().enumerate() {
            results[0] &= l.try_mul(l)? == *l;
            for (m, other) in ls.iter().enumerate() {
                if m != k {
                    results[1] &= l.try_mul(other)?.is_zero();
                }
            }
            sum = sum.try_add(l)?;
            results[3] &= l.trace().is_one();
            results[4] &= l.try_mul(&p.r)?.trace() == *p.r.get(k, k);
            results[5] &= l.try_mul(&p.r)? == p.r.try_mul(l)?;
            results[6] &= l_closed_form(&p.r, k)? == *l;
        }
        results[2] = sum == id;
        let b = diagonalizer(&p.r)?;
        let binv = b.inverse().ok_or(Error::NotInvertible)?;
        let diag = Matrix::diagonal(&(0..n).map(|k| p.r.get(k, k).clone()).collect::<Vec<_>>());
        results[7] = b.try_mul(&p.r)?.try_mul(&binv)? == diag && binv == diagonalizer_inverse(&p.r)?;
        let bsb = b.try_mul(&p.s)?.try_mul(&binv)?;
        results[8] = (0..n).all(|k| ls[k].try_mul(&p.s).map(|m| m.trace() == *bsb.get(k, k)).unwrap_or(false));
        let before = invariant_functions(&p)?;
        let g = random_borel(n, &mut rng);
        results[9] = invariant_functions(&act_b(&g, &p)?)? == before;
        for (c, ok) in passed.iter_mut().zip(&results) {
            *c += usize::from(*ok);
        }
        if sample == 0 {
            for k in 0..n {
                sample_invariants.push(format!(
                    "F{0} = {1}, G{0} = {2}, H{0} = {3}",
                    k + 1,
                    before.f[k],
                    before.g[k],
                    before.h[k]
                ));
                l_determinants.push(format!("det L{} = {}", k + 1, ls[k].det()?));
            }
        }
    }
    let mut solver_residuals = Vec::new();
    if n <= 4 {
        let p = MomentPoint::symbolic(n);
        let diag: Vec<Frac> = (0..n).map(|k| p.s.get(k, k).clone()).collect();
        let s = solve_subdiagonals(&p.r, &p.i, &p.j, &diag)?;
        let q = MomentPoint::new(p.r.clone(), s, p.i.clone(), p.j.clone())?;
        let mu = moment_b(&q)?;
        for a in 0..n {
            for b in 0..a {
                solver_residuals.push(mu.get(a, b).to_string());
            }
        }
    }
    Ok(LabReport {
        n,
        samples,
        seed,
        properties: names
            .iter()
            .zip(passed)
            .map(|(name, passed)| PropertyRow {
                property: name.to_string(),
                passed,
                total: samples,
            })
            .collect(),
        sample_invariants,
        solver_residuals,
        l_determinants,
    })
}
