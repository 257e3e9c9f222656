//! Polynomials localized at differences of variables.
//!
//! A [`Frac`] is `num / prod (x - y)^e` where every denominator factor is a
//! binomial `x - y` with `x < y`. This is exactly the ring needed for the
//! symbolic spectral projectors of an upper triangular matrix with formally
//! distinct diagonal entries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::linalg::{Field, Ring};
use crate::poly::{rat, Polynomial, Rational, Variable};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Frac {
    num: Polynomial,
    den: BTreeMap<(Variable, Variable), u32>,
}

fn binomial(x: &Variable, y: &Variable) -> Polynomial {
    Polynomial::var(x.clone()) - Polynomial::var(y.clone())
}

impl Frac {
    pub fn from_poly(p: Polynomial) -> Self {
        Frac {
            num: p,
            den: BTreeMap::new(),
        }
    }

    /// `1 / (x - y)`; the variables must differ.
    pub fn inv_difference(x: &Variable, y: &Variable) -> Self {
        assert!(x != y, "difference of a variable with itself");
        let (key, sign) = if x < y {
            ((x.clone(), y.clone()), 1)
        } else {
            ((y.clone(), x.clone()), -1)
        };
        Frac {
            num: Polynomial::int(sign),
            den: [(key, 1)].into(),
        }
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.num
    }

    pub fn denominator(&self) -> Polynomial {
        self.den
            .iter()
            .fold(Polynomial::one(), |acc, ((x, y), e)| &acc * &binomial(x, y).pow(*e))
    }

    pub fn denominator_factors(&self) -> impl Iterator<Item = (&Variable, &Variable, u32)> {
        self.den.iter().map(|((x, y), e)| (x, y, *e))
    }

    /// The polynomial itself when no denominator remains.
    pub fn as_polynomial(&self) -> Option<&Polynomial> {
        if self.den.is_empty() {
            Some(&self.num)
        } else {
            None
        }
    }

    fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let keys: Vec<_> = self.den.keys().cloned().collect();
        for (x, y) in keys {
            while let Some(e) = self.den.get(&(x.clone(), y.clone())).copied() {
                match self.num.div_binomial(&x, &y) {
                    Some(q) => {
                        self.num = q;
                        if e == 1 {
                            self.den.remove(&(x.clone(), y.clone()));
                        } else {
                            self.den.insert((x.clone(), y.clone()), e - 1);
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    fn lifted_to(&self, lcm: &BTreeMap<(Variable, Variable), u32>) -> Polynomial {
        let mut out = self.num.clone();
        for ((x, y), e) in lcm {
            let have = self.den.get(&(x.clone(), y.clone())).copied().unwrap_or(0);
            if *e > have {
                out = &out * &binomial(x, y).pow(e - have);
            }
        }
        out
    }

    fn lcm(&self, other: &Frac) -> BTreeMap<(Variable, Variable), u32> {
        let mut l = self.den.clone();
        for (k, e) in &other.den {
            let slot = l.entry(k.clone()).or_insert(0);
            *slot = (*slot).max(*e);
        }
        l
    }

    /// Writes `p` as a constant times a product of binomials `x - y`, if possible.
    fn factor_binomials(p: &Polynomial) -> Option<(Rational, Vec<(Variable, Variable)>)> {
        let mut rest = p.clone();
        let mut factors = Vec::new();
        'outer: loop {
            if let Some(c) = rest.as_constant() {
                if Ring::is_zero(&c) {
                    return None;
                }
                return Some((c, factors));
            }
            let vars: Vec<Variable> = rest.variables().into_iter().collect();
            for (a, x) in vars.iter().enumerate() {
                for y in &vars[a + 1..] {
                    if let Some(q) = rest.div_binomial(x, y) {
                        rest = q;
                        factors.push((x.clone(), y.clone()));
                        continue 'outer;
                    }
                }
            }
            return None;
        }
    }

    pub fn substitute(&self, images: &BTreeMap<Variable, Polynomial>) -> Result<Frac> {
        let num = Frac::from_poly(self.num.substitute(images));
        let den = Frac::from_poly(self.denominator().substitute(images));
        num.divided(&den).ok_or(Error::NotInvertible)
    }

    pub fn evaluate(&self, point: &BTreeMap<Variable, Rational>) -> Result<Rational> {
        let n = self.num.evaluate(point)?;
        let d = self.denominator().evaluate(point)?;
        if Ring::is_zero(&d) {
            return Err(Error::NotInvertible);
        }
        Ok(n / d)
    }

    pub fn variables(&self) -> BTreeSet<Variable> {
        let mut v = self.num.variables();
        for (x, y) in self.den.keys() {
            v.insert(x.clone());
            v.insert(y.clone());
        }
        v
    }
}

impl From<Polynomial> for Frac {
    fn from(p: Polynomial) -> Self {
        Frac::from_poly(p)
    }
}

impl PartialEq for Frac {
    fn eq(&self, other: &Self) -> bool {
        let l = self.lcm(other);
        self.lifted_to(&l) == other.lifted_to(&l)
    }
}

impl Ring for Frac {
    fn zero() -> Self {
        Frac::from_poly(Polynomial::zero())
    }
    fn one() -> Self {
        Frac::from_poly(Polynomial::one())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        if self.num.is_zero() {
            return other.clone();
        }
        if other.num.is_zero() {
            return self.clone();
        }
        let l = self.lcm(other);
        Frac {
            num: &self.lifted_to(&l) + &other.lifted_to(&l),
            den: l,
        }
        .normalize()
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        if self.num.is_zero() || other.num.is_zero() {
            return Frac::zero();
        }
        let mut den = self.den.clone();
        for (k, e) in &other.den {
            *den.entry(k.clone()).or_insert(0) += e;
        }
        Frac {
            num: &self.num * &other.num,
            den,
        }
        .normalize()
    }
    fn negated(&self) -> Self {
        Frac {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Field for Frac {
    /// Inverts when the numerator is a constant times differences of variables.
    fn inverse(&self) -> Option<Self> {
        let (c, factors) = Frac::factor_binomials(&self.num)?;
        let mut den = BTreeMap::new();
        for f in factors {
            *den.entry(f).or_insert(0) += 1;
        }
        Some(
            Frac {
                num: self.denominator().scale(&(rat(1) / c)),
                den,
            }
            .normalize(),
        )
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let factors: Vec<String> = self
            .den
            .iter()
            .map(|((x, y), e)| {
                if *e == 1 {
                    format!("({x} - {y})")
                } else {
                    format!("({x} - {y})^{e}")
                }
            })
            .collect();
        write!(f, "({}) / {}", self.num, factors.join("*"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::poly;

    fn v(name: &str) -> Variable {
        Variable::scalar(name)
    }

    #[test]
    fn cancellation_and_equality() {
        let a = Frac::inv_difference(&v("x"), &v("y"));
        let b = Frac::from_poly(poly("x - y"));
        assert_eq!(a.times(&b), Frac::one());
        assert_eq!(a.times(&b).as_polynomial(), Some(&Polynomial::one()));
        let c = Frac::inv_difference(&v("y"), &v("x"));
        assert_eq!(a.plus(&c), Frac::zero());
    }

    #[test]
    fn partial_fractions() {
        // 1/(x-y) - 1/(x-z) = (y-z)/((x-y)(x-z))
        let lhs = Frac::inv_difference(&v("x"), &v("y"))
            .minus(&Frac::inv_difference(&v("x"), &v("z")));
        let rhs = Frac::from_poly(poly("y - z"))
            .times(&Frac::inv_difference(&v("x"), &v("y")))
            .times(&Frac::inv_difference(&v("x"), &v("z")));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn inverses() {
        let p = Frac::from_poly(poly("2*(x - y)*(z - x)"));
        let inv = p.inverse().unwrap();
        assert_eq!(inv.times(&p), Frac::one());
        assert!(Frac::from_poly(poly("x + y")).inverse().is_none());
        assert!(Frac::zero().inverse().is_none());
    }
}
