//! Sparse multivariate polynomials with rational coefficients.
//!
//! Variables are either matrix entries `(id, row, col)` with 1-based indices or
//! named scalars. Variables are ordered by `(kind, id, row, col)` with entries
//! before scalars; monomials use graded lexicographic order on top of that, so
//! the leading term of `a11*a22 - a12*a21` is `a11*a22`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::linalg::{Field, Matrix, Ring};

pub type Rational = BigRational;

/// A matrix whose entries are polynomials.
pub type SymbolicMatrix = Matrix<Polynomial>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Rational matrix from integer rows.
pub fn int_matrix(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect())
        .expect("rectangular integer rows")
}

impl Ring for Rational {
    fn zero() -> Self {
        <Rational as Zero>::zero()
    }
    fn one() -> Self {
        <Rational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Field for Rational {
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variable {
    /// Entry `(row, col)` of the matrix labelled `id`; indices are 1-based.
    Entry { id: Arc<str>, row: usize, col: usize },
    Scalar(Arc<str>),
}

impl Variable {
    pub fn entry(id: &str, row: usize, col: usize) -> Self {
        Variable::Entry {
            id: Arc::from(id),
            row,
            col,
        }
    }

    pub fn scalar(name: &str) -> Self {
        Variable::Scalar(Arc::from(name))
    }

    pub fn is_entry(&self) -> bool {
        matches!(self, Variable::Entry { .. })
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Variable::Entry { id, row, col } => {
                let compact = !id.is_empty()
                    && id.chars().all(char::is_alphabetic)
                    && *row < 10
                    && *col < 10;
                if compact {
                    write!(f, "{id}{row}{col}")
                } else {
                    write!(f, "{id}[{row},{col}]")
                }
            }
            Variable::Scalar(name) => write!(f, "{name}"),
        }
    }
}

/// A product of variables with positive exponents, sorted by variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Variable, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Variable) -> Self {
        Monomial(vec![(v, 1)])
    }

    /// Builds a monomial from arbitrary `(variable, exponent)` pairs.
    pub fn from_powers(powers: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map: BTreeMap<Variable, u32> = BTreeMap::new();
        for (v, e) in powers {
            *map.entry(v).or_insert(0) += e;
        }
        Monomial(map.into_iter().filter(|(_, e)| *e > 0).collect())
    }

    pub fn powers(&self) -> &[(Variable, u32)] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, v: &Variable) -> u32 {
        self.0
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }

    /// Splits into the part over `vars` and the rest.
    pub fn split(&self, vars: &BTreeSet<Variable>) -> (Monomial, Monomial) {
        let (inside, outside): (Vec<_>, Vec<_>) =
            self.0.iter().cloned().partition(|(v, _)| vars.contains(v));
        (Monomial(inside), Monomial(outside))
    }

    /// Divides out one power of `v`, if present.
    pub fn without_one(&self, v: &Variable) -> Option<Monomial> {
        let idx = self.0.iter().position(|(w, _)| w == v)?;
        let mut out = self.0.clone();
        if out[idx].1 == 1 {
            out.remove(idx);
        } else {
            out[idx].1 -= 1;
        }
        Some(Monomial(out))
    }

    pub fn variables(&self) -> impl Iterator<Item = &Variable> {
        self.0.iter().map(|(v, _)| v)
    }

    /// True if no variable occurs in both monomials.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(v, _)| other.exponent(v) == 0)
    }
}

impl Ord for Monomial {
    /// Graded lexicographic: higher degree is larger; among equal degrees the
    /// first differing variable (in variable order) decides, larger exponent
    /// being larger.
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        loop {
            match (a.get(i), b.get(j)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some((va, ea)), Some((vb, eb))) => match va.cmp(vb) {
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Equal => {
                        if ea != eb {
                            return ea.cmp(eb);
                        }
                        i += 1;
                        j += 1;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(rat(1))
    }

    pub fn constant(c: Rational) -> Self {
        Polynomial::term(c, Monomial::one())
    }

    pub fn int(n: i64) -> Self {
        Polynomial::constant(rat(n))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !Zero::is_zero(&c) {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(v: Variable) -> Self {
        Polynomial::term(rat(1), Monomial::var(v))
    }

    pub fn entry(id: &str, row: usize, col: usize) -> Self {
        Polynomial::var(Variable::entry(id, row, col))
    }

    pub fn scalar(name: &str) -> Self {
        Polynomial::var(Variable::scalar(name))
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: Rational) {
        if Zero::is_zero(&c) {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if Zero::is_zero(existing) {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    /// The constant value, if the polynomial has no variables.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(rat(0));
        }
        if self.is_constant() {
            self.terms.get(&Monomial::one()).cloned()
        } else {
            None
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(|| rat(0))
    }

    /// Largest monomial under the graded lexicographic order.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        self.terms
            .keys()
            .flat_map(|m| m.variables().cloned())
            .collect()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if Zero::is_zero(c) {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Polynomial::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => Polynomial::zero(),
        }
    }

    /// Groups `p` as a sum of monomials in `vars` times coefficients free of `vars`.
    pub fn coefficients_wrt(&self, vars: &BTreeSet<Variable>) -> BTreeMap<Monomial, Polynomial> {
        let mut out: BTreeMap<Monomial, Polynomial> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(vars);
            out.entry(inside).or_default().add_term(outside, c.clone());
        }
        out.retain(|_, p| !p.is_zero());
        out
    }

    /// Replaces each mapped variable by its image; unmapped variables stay.
    pub fn substitute(&self, images: &BTreeMap<Variable, Polynomial>) -> Self {
        let mut power_cache: BTreeMap<(Variable, u32), Polynomial> = BTreeMap::new();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut acc = Polynomial::constant(c.clone());
            for (v, e) in m.powers() {
                match images.get(v) {
                    Some(img) => {
                        let pw = power_cache
                            .entry((v.clone(), *e))
                            .or_insert_with(|| img.pow(*e))
                            .clone();
                        acc = &acc * &pw;
                    }
                    None => kept.push((v.clone(), *e)),
                }
            }
            let acc = acc.mul_monomial(&Monomial::from_powers(kept));
            out = &out + &acc;
        }
        out
    }

    pub fn partial(&self, v: &Variable) -> Self {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let e = m.exponent(v);
            if e == 0 {
                continue;
            }
            let reduced = m.without_one(v).expect("exponent is positive");
            out.add_term(reduced, c * rat(e as i64));
        }
        out
    }

    /// The derivation `sum_v (dp/dv) * direction(v)`.
    pub fn derive(&self, direction: &BTreeMap<Variable, Polynomial>) -> Self {
        let mut out = Polynomial::zero();
        for (v, d) in direction {
            if d.is_zero() {
                continue;
            }
            let dp = self.partial(v);
            if !dp.is_zero() {
                out = &out + &(&dp * d);
            }
        }
        out
    }

    pub fn evaluate(&self, point: &BTreeMap<Variable, Rational>) -> Result<Rational> {
        let mut acc = rat(0);
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, e) in m.powers() {
                let val = point
                    .get(v)
                    .ok_or_else(|| Error::UnmappedVariable(v.to_string()))?;
                t *= num_traits::pow(val.clone(), *e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Exact quotient by the binomial `x - y`, if it divides.
    pub fn div_binomial(&self, x: &Variable, y: &Variable) -> Option<Polynomial> {
        let xs: BTreeSet<Variable> = [x.clone()].into();
        let by_x = self.coefficients_wrt(&xs);
        // remainder: p with x replaced by y
        let mut remainder = Polynomial::zero();
        let yp = Polynomial::var(y.clone());
        let xp = Polynomial::var(x.clone());
        let mut quotient = Polynomial::zero();
        for (m, c) in &by_x {
            let k = m.exponent(x);
            remainder = &remainder + &(c * &yp.pow(k));
            // (x^k - y^k)/(x - y) = sum_{i<k} x^i y^(k-1-i)
            for i in 0..k {
                quotient = &quotient + &(c * &(&xp.pow(i) * &yp.pow(k - 1 - i)));
            }
        }
        if remainder.is_zero() {
            Some(quotient)
        } else {
            None
        }
    }

    /// Parses an expression such as `a11*a22 - 3/2*x1^2 + (s + t)*u`.
    ///
    /// An identifier made of letters followed by exactly two digits is a
    /// matrix entry (`a12` is entry (1,2) of `a`); `id[r,c]` is an entry with
    /// explicit indices; anything else is a scalar.
    pub fn parse(text: &str) -> std::result::Result<Polynomial, String> {
        let mut parser = ExprParser {
            chars: text.chars().collect(),
            pos: 0,
        };
        let p = parser.expr()?;
        parser.skip_ws();
        if parser.pos < parser.chars.len() {
            return Err(format!("unexpected '{}' at column {}", parser.chars[parser.pos], parser.pos + 1));
        }
        Ok(p)
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (big, small) = if self.terms.len() >= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = big.clone();
        for (m, c) in &small.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut out = Polynomial::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        out
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Rational> for Polynomial {
    fn from(c: Rational) -> Self {
        Polynomial::constant(c)
    }
}

impl From<Variable> for Polynomial {
    fn from(v: Variable) -> Self {
        Polynomial::var(v)
    }
}

fn fmt_coeff(c: &Rational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_coeff(&abs))?;
            } else if abs == rat(1) {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_coeff(&abs))?;
            }
        }
        Ok(())
    }
}

struct ExprParser {
    chars: Vec<char>,
    pos: usize,
}

impl ExprParser {
    fn skip_ws(&mut self) {
        while self.pos < self.chars.len() && self.chars[self.pos].is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn err<T>(&self, msg: &str) -> std::result::Result<T, String> {
        Err(format!("{msg} at column {}", self.pos + 1))
    }

    fn expr(&mut self) -> std::result::Result<Polynomial, String> {
        let mut acc = self.term()?;
        loop {
            match self.peek() {
                Some('+') => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some('-') => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> std::result::Result<Polynomial, String> {
        let mut acc = self.factor()?;
        while self.peek() == Some('*') {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> std::result::Result<Polynomial, String> {
        if self.peek() == Some('-') {
            self.pos += 1;
            return Ok(-self.factor()?);
        }
        let base = self.base()?;
        if self.peek() == Some('^') {
            self.pos += 1;
            self.skip_ws();
            let digits = self.digits();
            let e: u32 = digits.parse().map_err(|_| format!("bad exponent at column {}", self.pos + 1))?;
            return Ok(base.pow(e));
        }
        Ok(base)
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.pos < self.chars.len() && self.chars[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn base(&mut self) -> std::result::Result<Polynomial, String> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(')') {
                    return self.err("expected ')'");
                }
                self.pos += 1;
                Ok(inner)
            }
            Some(c) if c.is_ascii_digit() => {
                let num: BigInt = self.digits().parse().expect("digits");
                if self.chars.get(self.pos) == Some(&'/') {
                    self.pos += 1;
                    let den = self.digits();
                    let den: BigInt = den.parse().map_err(|_| format!("bad denominator at column {}", self.pos + 1))?;
                    if Zero::is_zero(&den) {
                        return self.err("zero denominator");
                    }
                    return Ok(Polynomial::constant(Rational::new(num, den)));
                }
                Ok(Polynomial::constant(Rational::from_integer(num)))
            }
            Some(c) if c.is_alphabetic() => Ok(Polynomial::var(self.ident()?)),
            Some(c) => self.err(&format!("unexpected '{c}'")),
            None => self.err("unexpected end of input"),
        }
    }

    fn ident(&mut self) -> std::result::Result<Variable, String> {
        let start = self.pos;
        while self.pos < self.chars.len()
            && (self.chars[self.pos].is_alphanumeric() || self.chars[self.pos] == '_')
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        if self.chars.get(self.pos) == Some(&'[') {
            self.pos += 1;
            self.skip_ws();
            let r: usize = self.digits().parse().map_err(|_| format!("bad row index at column {}", self.pos + 1))?;
            if self.peek() != Some(',') {
                return self.err("expected ','");
            }
            self.pos += 1;
            self.skip_ws();
            let c: usize = self.digits().parse().map_err(|_| format!("bad column index at column {}", self.pos + 1))?;
            if self.peek() != Some(']') {
                return self.err("expected ']'");
            }
            self.pos += 1;
            return Ok(Variable::entry(&name, r, c));
        }
        let letters: String = name.chars().take_while(|c| c.is_alphabetic()).collect();
        let rest: Vec<char> = name.chars().skip(letters.chars().count()).collect();
        if !letters.is_empty() && rest.len() == 2 && rest.iter().all(char::is_ascii_digit) {
            let r = rest[0].to_digit(10).expect("digit") as usize;
            let c = rest[1].to_digit(10).expect("digit") as usize;
            return Ok(Variable::entry(&letters, r, c));
        }
        Ok(Variable::scalar(&name))
    }
}

/// Shorthand for [`Polynomial::parse`] that panics on malformed input.
pub fn poly(text: &str) -> Polynomial {
    Polynomial::parse(text).unwrap_or_else(|e| panic!("bad polynomial {text:?}: {e}"))
}

/// Symbolic general matrix with entries `id[r,c]` (1-based) where `allowed`
/// holds and zero elsewhere.
pub fn general_matrix(
    id: &str,
    rows: usize,
    cols: usize,
    allowed: impl Fn(usize, usize) -> bool,
) -> SymbolicMatrix {
    Matrix::from_fn(rows, cols, |r, c| {
        if allowed(r, c) {
            Polynomial::entry(id, r + 1, c + 1)
        } else {
            Polynomial::zero()
        }
    })
}

/// Determinant of a symbolic matrix (cofactor expansion, at most 8x8).
pub fn determinant(m: &SymbolicMatrix) -> Result<Polynomial> {
    m.cofactor_determinant()
}

/// Lifts a rational matrix to constant polynomials.
pub fn lift(m: &Matrix<Rational>) -> SymbolicMatrix {
    m.map(|c| Polynomial::constant(c.clone()))
}

/// Evaluates a symbolic matrix whose entries are all constants.
pub fn lower(m: &SymbolicMatrix) -> Option<Matrix<Rational>> {
    let mut out = Vec::with_capacity(m.rows() * m.cols());
    for e in m.entries() {
        out.push(e.as_constant()?);
    }
    Matrix::new(m.rows(), m.cols(), out).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn additive_inverse_and_sums() {
        assert!((poly("x") + poly("-x")).is_zero());
        assert_eq!(poly("x+y") + poly("x-y"), poly("2*x"));
        assert_eq!(poly("a11*a22 - a12*a21") + poly("a12*a21"), poly("a11*a22"));
    }

    #[test]
    fn products() {
        let p = poly("x^2*y - 3*z + 1/2");
        assert_eq!(&p * &Polynomial::one(), p);
        assert!((&p * &Polynomial::zero()).is_zero());
        assert_eq!(poly("(x-y)*(x+y)"), poly("x^2 - y^2"));
    }

    #[test]
    fn determinants() {
        let m = Matrix::from_rows(vec![
            vec![poly("a"), poly("b")],
            vec![poly("c"), poly("d")],
        ])
        .unwrap();
        assert_eq!(determinant(&m).unwrap(), poly("a*d - b*c"));
        assert_eq!(determinant(&SymbolicMatrix::zeros(0, 0)).unwrap(), Polynomial::one());
        let rect = SymbolicMatrix::zeros(2, 3);
        assert!(matches!(determinant(&rect), Err(Error::NotSquare { .. })));
        let big = SymbolicMatrix::identity(9);
        assert!(matches!(determinant(&big), Err(Error::DeterminantTooLarge(9, 8))));
    }

    #[test]
    fn coefficient_grouping() {
        let x: BTreeSet<Variable> = [Variable::scalar("x")].into();
        let p = poly("x^2*y + x*y");
        let c = p.coefficients_wrt(&x);
        assert_eq!(c.len(), 2);
        for v in c.values() {
            assert_eq!(*v, poly("y"));
        }
        let q = poly("y + z");
        let c = q.coefficients_wrt(&x);
        assert_eq!(c.get(&Monomial::one()), Some(&q));
    }

    #[test]
    fn substitution_and_inverse() {
        let img: BTreeMap<_, _> = [(Variable::entry("a", 1, 2), poly("a12 + a11*u"))].into();
        assert_eq!(poly("a12").substitute(&img), poly("a12 + a11*u"));
        let back: BTreeMap<_, _> = [(Variable::entry("a", 1, 2), poly("a12 - a11*u"))].into();
        let f = poly("a12^2*a22 + a11");
        assert_eq!(f.substitute(&img).substitute(&back), f);
    }

    #[test]
    fn derivations() {
        let d: BTreeMap<_, _> = [(Variable::entry("a", 1, 1), Polynomial::one())].into();
        assert_eq!(poly("a11*a22").derive(&d), poly("a22"));
        assert!(poly("7").derive(&d).is_zero());
        let dir: BTreeMap<_, _> = [
            (Variable::entry("a", 1, 2), poly("a22 - a11")),
            (Variable::entry("c", 1, 2), poly("c22 - c11")),
        ]
        .into();
        let f = poly("(a11-a22)*c12 - (c11-c22)*a12");
        assert!(f.derive(&dir).is_zero());
    }

    #[test]
    fn evaluation() {
        let at: BTreeMap<_, _> = [
            (Variable::scalar("a"), rat(1)),
            (Variable::scalar("b"), rat(0)),
            (Variable::scalar("c"), rat(0)),
            (Variable::scalar("d"), rat(1)),
        ]
        .into();
        assert_eq!(poly("a*d - b*c").evaluate(&at).unwrap(), rat(1));
        assert_eq!(Polynomial::zero().evaluate(&BTreeMap::new()).unwrap(), rat(0));
        let pt: BTreeMap<_, _> = [
            (Variable::scalar("x1"), rat(1)),
            (Variable::scalar("x2"), rat(1)),
            (Variable::scalar("y1"), rat(1)),
        ]
        .into();
        assert_eq!(poly("x1*y1 - 3*x2*y1").evaluate(&pt).unwrap(), rat(-2));
        match poly("q").evaluate(&BTreeMap::new()) {
            Err(Error::UnmappedVariable(name)) => assert_eq!(name, "q"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn rendering_and_parsing_round_trip() {
        let p = poly("a12*a21 - a11*a22 + 3/2*x1^2 - lambda");
        assert_eq!(p.to_string(), "-a11*a22 + a12*a21 + 3/2*x1^2 - lambda");
        assert_eq!(poly(&p.to_string()), p);
        let q = Polynomial::entry("a1", 1, 2) + Polynomial::entry("x", 10, 1);
        assert_eq!(q.to_string(), "a1[1,2] + x[10,1]");
        assert_eq!(poly(&q.to_string()), q);
        assert!(Polynomial::parse("a11 +").is_err());
        assert!(Polynomial::parse("(a11").is_err());
    }

    #[test]
    fn binomial_division() {
        let x = Variable::scalar("x");
        let y = Variable::scalar("y");
        let p = poly("(x - y)*(x^2 + z*y)");
        assert_eq!(p.div_binomial(&x, &y), Some(poly("x^2 + z*y")));
        assert_eq!(poly("x + y").div_binomial(&x, &y), None);
    }

    #[test]
    fn graded_order_leading_term() {
        let p = poly("a12*a21 + a11*a22 + a11");
        assert_eq!(p.leading().unwrap().0, &Monomial::from_powers([
            (Variable::entry("a", 1, 1), 1),
            (Variable::entry("a", 2, 2), 1)
        ]));
    }
}
