//! Sparse multivariate polynomials with exact coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};

/// Exponent tuple, one entry per variable.
pub type Monomial = Vec<u32>;

/// `Σ c_m · x^m` with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial<S> {
    nvars: usize,
    terms: BTreeMap<Monomial, S>,
}

pub const VARIABLE_NAMES: [&str; 3] = ["x", "y", "z"];

impl<S: Scalar> Polynomial<S> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, S::one())
    }

    pub fn var(nvars: usize, axis: usize) -> Self {
        assert!(axis < nvars, "variable {axis} out of range for {nvars} variables");
        let mut m = vec![0; nvars];
        m[axis] = 1;
        Self::monomial(nvars, m, S::one())
    }

    pub fn monomial(nvars: usize, exps: Monomial, c: S) -> Self {
        assert_eq!(exps.len(), nvars, "monomial arity");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Linear polynomial `Σ c_i x_i`.
    pub fn linear(coeffs: &[S]) -> Self {
        let n = coeffs.len();
        let mut p = Self::zero(n);
        for (i, c) in coeffs.iter().enumerate() {
            let mut m = vec![0; n];
            m[i] = 1;
            p.add_term(m, c.clone());
        }
        p
    }

    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, S)>) -> Self {
        let mut p = Self::zero(nvars);
        for (m, c) in terms {
            assert_eq!(m.len(), nvars, "monomial arity");
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &S)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, exps: &[u32]) -> S {
        self.terms.get(exps).cloned().unwrap_or_else(S::zero)
    }

    pub fn add_term(&mut self, exps: Monomial, c: S) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exps) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += &c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_assign_ref(&mut self, other: &Self) {
        self.check_same(other);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign_ref(&mut self, other: &Self) {
        self.check_same(other);
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(
            self.nvars, other.nvars,
            "polynomials in different numbers of variables"
        );
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            });
        }
        let mut r = self.clone();
        r.add_assign_ref(other);
        Ok(r)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.clone() * c))
                .collect(),
        }
    }

    pub fn mul_ref(&self, other: &Self) -> Self {
        self.mul_truncated(other, u32::MAX)
    }

    /// Product with all monomials of total degree above `max_degree` dropped.
    pub fn mul_truncated(&self, other: &Self, max_degree: u32) -> Self {
        self.check_same(other);
        let mut r = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            let da = degree_of(ma);
            for (mb, cb) in &other.terms {
                if da + degree_of(mb) > max_degree {
                    continue;
                }
                let m: Monomial = ma.iter().zip(mb).map(|(a, b)| a + b).collect();
                r.add_term(m, ca.clone() * cb);
            }
        }
        r
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = acc.mul_ref(self);
        }
        acc
    }

    pub fn derivative(&self, axis: usize) -> Self {
        assert!(axis < self.nvars, "axis out of range");
        let mut r = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m[axis];
            if e == 0 {
                continue;
            }
            let mut dm = m.clone();
            dm[axis] -= 1;
            r.add_term(dm, c.clone() * &S::from_int(i64::from(e)));
        }
        r
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| degree_of(m)).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| degree_of(m)).min()
    }

    pub fn homogeneous_part(&self, d: u32) -> Self {
        self.filter(|m| degree_of(m) == d)
    }

    pub fn truncate(&self, max_degree: u32) -> Self {
        self.filter(|m| degree_of(m) <= max_degree)
    }

    fn filter(&self, keep: impl Fn(&Monomial) -> bool) -> Self {
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| keep(m))
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Polynomial<T> {
        Polynomial::from_terms(
            self.nvars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }

    /// Galois conjugate of every coefficient.
    pub fn conj(&self) -> Self {
        self.map_coeffs(Scalar::conj)
    }

    /// Substitutes variable `perm[i]` for variable `i`, so that
    /// `[1, 2, 0]` turns `p(x, y, z)` into `p(y, z, x)`.
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.nvars);
        Polynomial {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut nm = vec![0; self.nvars];
                    for (i, &p) in perm.iter().enumerate() {
                        nm[p] += m[i];
                    }
                    (nm, c.clone())
                })
                .collect(),
        }
    }

    /// Composition `self(L_1, …, L_n)` where each old variable is replaced by
    /// a polynomial in `new_nvars` variables.
    pub fn compose(&self, images: &[Polynomial<S>]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let new_nvars = images.first().map_or(0, Polynomial::nvars);
        let max_exp: Vec<u32> = (0..self.nvars)
            .map(|i| self.terms.keys().map(|m| m[i]).max().unwrap_or(0))
            .collect();
        let powers: Vec<Vec<Polynomial<S>>> = images
            .iter()
            .zip(&max_exp)
            .map(|(img, &e)| {
                let mut ps = vec![Polynomial::one(new_nvars)];
                for k in 1..=e as usize {
                    let next = ps[k - 1].mul_ref(img);
                    ps.push(next);
                }
                ps
            })
            .collect();
        let mut r = Polynomial::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(new_nvars, c.clone());
            for (i, &e) in m.iter().enumerate() {
                if e > 0 {
                    t = t.mul_ref(&powers[i][e as usize]);
                }
            }
            r.add_assign_ref(&t);
        }
        r
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                m.iter()
                    .zip(x)
                    .fold(c.to_f64(), |acc, (&e, &xi)| acc * xi.powi(e as i32))
            })
            .sum()
    }

    pub fn eval(&self, x: &[S]) -> S {
        self.terms.iter().fold(S::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for (&e, xi) in m.iter().zip(x) {
                for _ in 0..e {
                    t = t * xi;
                }
            }
            acc + t
        })
    }

    /// `Some` when every coefficient is rational.
    pub fn to_rational(&self) -> Result<Polynomial<Rational>> {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                c.to_rational()
                    .map(|q| (m.clone(), q))
                    .ok_or_else(|| Error::IrrationalCoefficient(c.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Polynomial::from_terms(self.nvars, terms))
    }

    /// `{ "[e1,e2,e3]": "coefficient" }`.
    pub fn to_json(&self) -> Value {
        let mut map = Map::new();
        for (m, c) in &self.terms {
            let key = format!(
                "[{}]",
                m.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
            );
            map.insert(key, Value::String(c.to_string()));
        }
        Value::Object(map)
    }
}

pub fn degree_of(m: &[u32]) -> u32 {
    m.iter().sum()
}

pub fn from_rational<S: Scalar>(p: &Polynomial<Rational>) -> Polynomial<S> {
    p.map_coeffs(|q| S::from_rational(q.clone()))
}

impl<S: Scalar> Add for Polynomial<S> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        self.add_assign_ref(&rhs);
        self
    }
}

impl<S: Scalar> Sub for Polynomial<S> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        self.sub_assign_ref(&rhs);
        self
    }
}

impl<S: Scalar> Neg for Polynomial<S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(&-S::one())
    }
}

impl<S: Scalar> Mul for Polynomial<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.mul_ref(&rhs)
    }
}

impl<S: Scalar> Mul for &Polynomial<S> {
    type Output = Polynomial<S>;
    fn mul(self, rhs: Self) -> Polynomial<S> {
        self.mul_ref(rhs)
    }
}

fn var_name(i: usize, nvars: usize) -> String {
    if nvars == 1 {
        "s".to_string()
    } else if nvars <= 3 {
        VARIABLE_NAMES[i].to_string()
    } else {
        format!("x{i}")
    }
}

/// Deterministic text: terms in monomial order, `(c)*x^a*y^b`.
impl<S: Scalar> fmt::Display for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            for (i, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*{}", var_name(i, self.nvars))?,
                    _ => write!(f, "*{}^{}", var_name(i, self.nvars), e)?,
                }
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for Polynomial<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Builds a polynomial from `(coefficient, [exponents])` pairs.
pub fn poly<S: Scalar>(nvars: usize, terms: &[(S, &[u32])]) -> Polynomial<S> {
    Polynomial::from_terms(nvars, terms.iter().map(|(c, m)| (m.to_vec(), c.clone())))
}

impl<S: Scalar> Polynomial<S> {
    pub fn is_one(&self) -> bool {
        *self == Self::one(self.nvars)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, GoldenNumber};

    type P = Polynomial<GoldenNumber>;

    fn g(n: i64) -> GoldenNumber {
        GoldenNumber::integer(n)
    }

    #[test]
    fn arithmetic_cancels() {
        let x = P::var(3, 0);
        let y = P::var(3, 1);
        let p = (x.clone() + y.clone()) * (x.clone() - y.clone());
        let q = x.pow(2) - y.pow(2);
        assert_eq!(p, q);
        assert!((p - q).is_zero());
    }

    #[test]
    fn derivative_of_monomial() {
        let p = poly(3, &[(g(3), &[2, 1, 0]), (g(5), &[0, 0, 4])]);
        assert_eq!(p.derivative(0), poly(3, &[(g(6), &[1, 1, 0])]));
        assert_eq!(p.derivative(2), poly(3, &[(g(20), &[0, 0, 3])]));
    }

    #[test]
    fn composition_with_permutation() {
        let p = poly(3, &[(g(1), &[2, 1, 0]), (GoldenNumber::phi(), &[0, 0, 1])]);
        // p(y, z, x)
        let images = [P::var(3, 1), P::var(3, 2), P::var(3, 0)];
        let composed = p.compose(&images);
        assert_eq!(composed, poly(3, &[(g(1), &[0, 2, 1]), (GoldenNumber::phi(), &[1, 0, 0])]));
        assert_eq!(p.permute(&[1, 2, 0]), composed);
    }

    #[test]
    fn truncation_and_parts() {
        let x = P::var(2, 0);
        let p = (x.clone() + P::one(2)).pow(4);
        assert_eq!(p.truncate(1), x.scale(&g(4)) + P::one(2));
        assert_eq!(p.homogeneous_part(2), x.pow(2).scale(&g(6)));
        assert_eq!(p.degree(), Some(4));
        assert_eq!(p.min_degree(), Some(0));
        assert_eq!(P::zero(2).degree(), None);
    }

    #[test]
    fn rational_conversion() {
        let p = poly(1, &[(GoldenNumber::rational(rat(1, 3)), &[2])]);
        assert_eq!(p.to_rational().unwrap().coefficient(&[2]), rat(1, 3));
        let q = poly(1, &[(GoldenNumber::sqrt5(), &[1])]);
        assert!(matches!(q.to_rational(), Err(Error::IrrationalCoefficient(_))));
    }

    #[test]
    fn text_and_json_are_deterministic() {
        let p = poly(3, &[(g(2), &[1, 0, 0]), (g(-1), &[0, 2, 1])]);
        assert_eq!(p.to_string(), "(-1)*y^2*z + (2)*x");
        assert_eq!(p.to_json().to_string(), r#"{"[0,2,1]":"-1","[1,0,0]":"2"}"#);
    }
}
