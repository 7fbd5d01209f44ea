//! Canonical sums `Σ P_k · t_k(ℓ_k)` with `t ∈ {1, sin, cos}`.
//!
//! Keys are canonical: a trig argument always has a positive leading
//! coefficient (sin absorbs the flip as a sign, cos ignores it), `sin 0` is
//! dropped and `cos 0` becomes the constant character. Distinct keys are
//! linearly independent over polynomials, so an expression is zero exactly when
//! its map is empty.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::One;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::trigexpr::linear_form::LinearForm;
use crate::trigexpr::polynomial::{Monomial, Polynomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum TrigKind {
    One,
    Sin,
    Cos,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TrigKey<S> {
    One,
    Sin(LinearForm<S>),
    Cos(LinearForm<S>),
}

impl<S: Scalar> TrigKey<S> {
    pub fn kind(&self) -> TrigKind {
        match self {
            TrigKey::One => TrigKind::One,
            TrigKey::Sin(_) => TrigKind::Sin,
            TrigKey::Cos(_) => TrigKind::Cos,
        }
    }

    pub fn arg(&self) -> Option<&LinearForm<S>> {
        match self {
            TrigKey::One => None,
            TrigKey::Sin(l) | TrigKey::Cos(l) => Some(l),
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TrigExpr<S> {
    nvars: usize,
    terms: BTreeMap<TrigKey<S>, Polynomial<S>>,
}

impl<S: Scalar> TrigExpr<S> {
    pub fn zero(nvars: usize) -> Self {
        TrigExpr {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: Polynomial<S>) -> Self {
        let mut e = Self::zero(p.nvars());
        e.add_term(TrigKind::One, None, p);
        e
    }

    pub fn constant(nvars: usize, c: S) -> Self {
        Self::from_poly(Polynomial::constant(nvars, c))
    }

    pub fn sin(arg: LinearForm<S>) -> Self {
        Self::term(TrigKind::Sin, Polynomial::one(arg.nvars()), arg)
    }

    pub fn cos(arg: LinearForm<S>) -> Self {
        Self::term(TrigKind::Cos, Polynomial::one(arg.nvars()), arg)
    }

    /// `poly · kind(arg)`, canonicalized.
    pub fn term(kind: TrigKind, poly: Polynomial<S>, arg: LinearForm<S>) -> Self {
        let mut e = Self::zero(poly.nvars());
        e.add_term(kind, Some(arg), poly);
        e
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

    pub fn terms(&self) -> impl Iterator<Item = (&TrigKey<S>, &Polynomial<S>)> {
        self.terms.iter()
    }

    pub fn polynomial_of(&self, key: &TrigKey<S>) -> Option<&Polynomial<S>> {
        self.terms.get(key)
    }

    /// The pure polynomial part if there are no trigonometric characters.
    pub fn as_polynomial(&self) -> Option<Polynomial<S>> {
        match self.terms.len() {
            0 => Some(Polynomial::zero(self.nvars)),
            1 => self.terms.get(&TrigKey::One).cloned(),
            _ => None,
        }
    }

    /// Every stored scalar, addressed by character and monomial. The expression
    /// is zero iff this iterator is empty.
    pub fn coefficients(&self) -> impl Iterator<Item = ((&TrigKey<S>, &Monomial), &S)> {
        self.terms
            .iter()
            .flat_map(|(k, p)| p.terms().map(move |(m, c)| ((k, m), c)))
    }

    pub fn add_term(&mut self, kind: TrigKind, arg: Option<LinearForm<S>>, poly: Polynomial<S>) {
        assert_eq!(poly.nvars(), self.nvars, "term arity");
        if poly.is_zero() {
            return;
        }
        let (key, poly) = match (kind, arg) {
            (TrigKind::One, _) => (TrigKey::One, poly),
            (_, None) => panic!("trigonometric term without an argument"),
            (kind, Some(arg)) => {
                assert_eq!(arg.nvars(), self.nvars, "argument arity");
                if arg.is_zero() {
                    match kind {
                        TrigKind::Sin => return,
                        _ => (TrigKey::One, poly),
                    }
                } else {
                    let (arg, flipped) = arg.canonical();
                    match kind {
                        TrigKind::Sin if flipped => (TrigKey::Sin(arg), -poly),
                        TrigKind::Sin => (TrigKey::Sin(arg), poly),
                        _ => (TrigKey::Cos(arg), poly),
                    }
                }
            }
        };
        self.add_keyed(key, poly);
    }

    fn add_keyed(&mut self, key: TrigKey<S>, poly: Polynomial<S>) {
        if poly.is_zero() {
            return;
        }
        match self.terms.entry(key) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(poly);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&poly);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.nvars,
                found: other.nvars,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let mut r = self.clone();
        for (k, p) in &other.terms {
            r.add_keyed(k.clone(), p.clone());
        }
        Ok(r)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg_ref())
    }

    pub fn neg_ref(&self) -> Self {
        self.scale(&-S::one())
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        TrigExpr {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(k, p)| (k.clone(), p.scale(c)))
                .collect(),
        }
    }

    pub fn mul_poly(&self, q: &Polynomial<S>) -> Self {
        let mut r = Self::zero(self.nvars);
        for (k, p) in &self.terms {
            r.add_keyed(k.clone(), p.mul_ref(q));
        }
        r
    }

    /// Product via the product-to-sum identities.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        let half = S::from_rational(Rational::new(1.into(), 2.into()));
        let mut r = Self::zero(self.nvars);
        for (ka, pa) in &self.terms {
            for (kb, pb) in &other.terms {
                let p = pa.mul_ref(pb);
                match (ka, kb) {
                    (TrigKey::One, _) => r.add_keyed(kb.clone(), p),
                    (_, TrigKey::One) => r.add_keyed(ka.clone(), p),
                    (TrigKey::Sin(u), TrigKey::Sin(v)) => {
                        let hp = p.scale(&half);
                        // sin u sin v = ½cos(u−v) − ½cos(u+v)
                        r.add_term(TrigKind::Cos, Some(u.sub(v)), hp.clone());
                        r.add_term(TrigKind::Cos, Some(u.add(v)), -hp);
                    }
                    (TrigKey::Cos(u), TrigKey::Cos(v)) => {
                        let hp = p.scale(&half);
                        // cos u cos v = ½cos(u−v) + ½cos(u+v)
                        r.add_term(TrigKind::Cos, Some(u.sub(v)), hp.clone());
                        r.add_term(TrigKind::Cos, Some(u.add(v)), hp);
                    }
                    (TrigKey::Sin(u), TrigKey::Cos(v)) | (TrigKey::Cos(v), TrigKey::Sin(u)) => {
                        let hp = p.scale(&half);
                        // sin u cos v = ½sin(u+v) + ½sin(u−v)
                        r.add_term(TrigKind::Sin, Some(u.add(v)), hp.clone());
                        r.add_term(TrigKind::Sin, Some(u.sub(v)), hp);
                    }
                }
            }
        }
        Ok(r)
    }

    pub fn partial_derivative(&self, axis: usize) -> Self {
        assert!(axis < self.nvars, "axis {axis} out of range");
        let mut r = Self::zero(self.nvars);
        for (k, p) in &self.terms {
            r.add_keyed(k.clone(), p.derivative(axis));
            match k {
                TrigKey::One => {}
                TrigKey::Sin(l) => {
                    r.add_keyed(TrigKey::Cos(l.clone()), p.scale(l.coeff(axis)));
                }
                TrigKey::Cos(l) => {
                    r.add_keyed(TrigKey::Sin(l.clone()), p.scale(&-l.coeff(axis).clone()));
                }
            }
        }
        r
    }

    /// Scalar Laplacian `Σ ∂²/∂x_i²`.
    pub fn laplacian(&self) -> Self {
        let mut r = Self::zero(self.nvars);
        for axis in 0..self.nvars {
            let d2 = self.partial_derivative(axis).partial_derivative(axis);
            r = r + d2;
        }
        r
    }

    /// `∇²e + e`; zero iff `e` solves the Helmholtz equation `∇²e = −e`.
    pub fn helmholtz_residual(&self) -> Self {
        self.laplacian() + self.clone()
    }

    /// Taylor polynomial at the origin containing all monomials of total
    /// degree at most `degree`.
    pub fn taylor(&self, degree: u32) -> Polynomial<S> {
        let mut out = Polynomial::zero(self.nvars);
        for (k, p) in &self.terms {
            let Some(min_deg) = p.min_degree() else {
                continue;
            };
            if min_deg > degree {
                continue;
            }
            let p = p.truncate(degree);
            let budget = degree - min_deg;
            let series = match k {
                TrigKey::One => Polynomial::one(self.nvars),
                TrigKey::Sin(l) => trig_series(l, budget, true),
                TrigKey::Cos(l) => trig_series(l, budget, false),
            };
            out.add_assign_ref(&p.mul_truncated(&series, degree));
        }
        out
    }

    /// Substitutes `x_old = A·x_new`, where row `i` of `images` expresses old
    /// variable `i` in the new variables.
    pub fn substitute(&self, images: &[Vec<S>]) -> Self {
        assert_eq!(images.len(), self.nvars, "one image per variable");
        let new_n = images.first().map_or(0, Vec::len);
        let poly_images: Vec<Polynomial<S>> =
            images.iter().map(|row| Polynomial::linear(row)).collect();
        let mut r = Self::zero(new_n);
        for (k, p) in &self.terms {
            let np = p.compose(&poly_images);
            match k {
                TrigKey::One => r.add_term(TrigKind::One, None, np),
                TrigKey::Sin(l) => r.add_term(TrigKind::Sin, Some(l.pull_back(images)), np),
                TrigKey::Cos(l) => r.add_term(TrigKind::Cos, Some(l.pull_back(images)), np),
            }
        }
        r
    }

    /// Reorders variables as in [`Polynomial::permute`].
    pub fn permute(&self, perm: &[usize]) -> Self {
        let n = self.nvars;
        let images: Vec<Vec<S>> = (0..n)
            .map(|old| {
                (0..n)
                    .map(|new| if perm[old] == new { S::one() } else { S::zero() })
                    .collect()
            })
            .collect();
        self.substitute(&images)
    }

    /// Galois conjugate of every coefficient, in polynomials and arguments.
    pub fn conj(&self) -> Self {
        let mut r = Self::zero(self.nvars);
        for (k, p) in &self.terms {
            let p = p.conj();
            match k {
                TrigKey::One => r.add_term(TrigKind::One, None, p),
                TrigKey::Sin(l) => r.add_term(TrigKind::Sin, Some(l.conj()), p),
                TrigKey::Cos(l) => r.add_term(TrigKind::Cos, Some(l.conj()), p),
            }
        }
        r
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(k, p)| {
                let pv = p.eval_f64(x);
                match k {
                    TrigKey::One => pv,
                    TrigKey::Sin(l) => pv * l.eval_f64(x).sin(),
                    TrigKey::Cos(l) => pv * l.eval_f64(x).cos(),
                }
            })
            .sum()
    }

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms
                .iter()
                .map(|(k, p)| {
                    json!({
                        "kind": k.kind(),
                        "arg": k.arg().map(|l| l.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>()),
                        "polynomial": p.to_json(),
                    })
                })
                .collect(),
        )
    }
}

/// Truncated series of `sin ℓ` (`odd = true`) or `cos ℓ` up to `budget`.
fn trig_series<S: Scalar>(l: &LinearForm<S>, budget: u32, odd: bool) -> Polynomial<S> {
    let lp = l.to_polynomial();
    let n = l.nvars();
    let mut out = Polynomial::zero(n);
    let mut power = Polynomial::one(n);
    let mut factorial = Rational::one();
    for k in 0..=budget {
        if k > 0 {
            power = power.mul_ref(&lp);
            factorial *= Rational::from_integer(k.into());
        }
        let wanted = (k % 2 == 1) == odd;
        if !wanted {
            continue;
        }
        let j = if odd { (k - 1) / 2 } else { k / 2 };
        let mut c = factorial.recip();
        if j % 2 == 1 {
            c = -c;
        }
        out.add_assign_ref(&power.scale(&S::from_rational(c)));
    }
    out
}

impl<S: Scalar> Add for TrigExpr<S> {
    type Output = Self;
    /// Panics on mismatched dimensions.
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("adding expressions of different dimension")
    }
}

impl<S: Scalar> Sub for TrigExpr<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs)
            .expect("subtracting expressions of different dimension")
    }
}

impl<S: Scalar> Neg for TrigExpr<S> {
    type Output = Self;
    fn neg(self) -> Self {
        self.neg_ref()
    }
}

impl<S: Scalar> Mul for &TrigExpr<S> {
    type Output = TrigExpr<S>;
    fn mul(self, rhs: Self) -> TrigExpr<S> {
        self.checked_mul(rhs)
            .expect("multiplying expressions of different dimension")
    }
}

impl<S: Scalar> Mul for TrigExpr<S> {
    type Output = TrigExpr<S>;
    fn mul(self, rhs: Self) -> TrigExpr<S> {
        &self * &rhs
    }
}

/// Deterministic serialization: keys in canonical order, one term per key.
impl<S: Scalar> fmt::Display for TrigExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, p)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match k {
                TrigKey::One => write!(f, "[{p}]")?,
                TrigKey::Sin(l) => write!(f, "[{p}]*sin({l})")?,
                TrigKey::Cos(l) => write!(f, "[{p}]*cos({l})")?,
            }
        }
        Ok(())
    }
}

impl<S: Scalar> fmt::Debug for TrigExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
