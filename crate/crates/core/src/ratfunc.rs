//! Rational-function vector fields on `R^3`: quotient-rule calculus, exact
//! equality by cross-multiplication, and averaging over finite matrix groups.
//!
//! No gcd reduction is attempted. Denominators grow under differentiation and
//! every comparison is done by clearing them, which is enough for identity
//! checking.

use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::{Rational, Scalar};
use crate::linalg::{Mat, MatrixGroup};
use crate::trigexpr::{poly, Polynomial};

/// `numerator / denominator` with a denominator that is not identically zero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction<S = Rational> {
    numerator: Polynomial<S>,
    denominator: Polynomial<S>,
}

impl<S: Scalar> RationalFunction<S> {
    pub fn new(numerator: Polynomial<S>, denominator: Polynomial<S>) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if numerator.nvars() != denominator.nvars() {
            return Err(Error::DimensionMismatch {
                expected: denominator.nvars(),
                found: numerator.nvars(),
            });
        }
        Ok(RationalFunction {
            numerator,
            denominator,
        })
    }

    pub fn from_polynomial(p: Polynomial<S>) -> Self {
        let n = p.nvars();
        RationalFunction {
            numerator: p,
            denominator: Polynomial::one(n),
        }
    }

    pub fn zero(nvars: usize) -> Self {
        Self::from_polynomial(Polynomial::zero(nvars))
    }

    pub fn numerator(&self) -> &Polynomial<S> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial<S> {
        &self.denominator
    }

    pub fn nvars(&self) -> usize {
        self.numerator.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.nvars() == other.nvars() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: other.nvars(),
            })
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        if self.denominator == other.denominator {
            return Ok(RationalFunction {
                numerator: self.numerator.clone() + other.numerator.clone(),
                denominator: self.denominator.clone(),
            });
        }
        Ok(RationalFunction {
            numerator: &self.numerator * &other.denominator
                + &other.numerator * &self.denominator,
            denominator: &self.denominator * &other.denominator,
        })
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            numerator: -self.numerator.clone(),
            denominator: self.denominator.clone(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(RationalFunction {
            numerator: &self.numerator * &other.numerator,
            denominator: &self.denominator * &other.denominator,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        RationalFunction {
            numerator: self.numerator.scale(c),
            denominator: self.denominator.clone(),
        }
    }

    /// Quotient rule, `(n'd − nd') / d²`.
    pub fn derivative(&self, axis: usize) -> Self {
        let n = &self.numerator;
        let d = &self.denominator;
        RationalFunction {
            numerator: &n.derivative(axis) * d - n * &d.derivative(axis),
            denominator: d * d,
        }
    }

    /// `self(L(x))` where row `i` of `images` gives old variable `i` as a
    /// linear form in the new variables.
    pub fn substitute_linear(&self, images: &[Vec<S>]) -> Self {
        let polys: Vec<Polynomial<S>> = images.iter().map(|r| Polynomial::linear(r)).collect();
        RationalFunction {
            numerator: self.numerator.compose(&polys),
            denominator: self.denominator.compose(&polys),
        }
    }

    /// Exact equality of the represented functions.
    pub fn equals(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> RationalFunction<T> {
        RationalFunction {
            numerator: self.numerator.map_coeffs(&f),
            denominator: self.denominator.map_coeffs(&f),
        }
    }

    pub fn to_rational(&self) -> Result<RationalFunction<Rational>> {
        Ok(RationalFunction {
            numerator: self.numerator.to_rational()?,
            denominator: self.denominator.to_rational()?,
        })
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.numerator.eval_f64(x) / self.denominator.eval_f64(x)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "numerator": self.numerator.to_json(),
            "denominator": self.denominator.to_json(),
        })
    }
}

impl<S: Scalar> fmt::Display for RationalFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "({}) / ({})", self.numerator, self.denominator)
        }
    }
}

impl<S: Scalar> fmt::Debug for RationalFunction<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Three rational-function components on `R^3`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalVectorField<S = Rational> {
    components: [RationalFunction<S>; 3],
}

impl<S: Scalar> RationalVectorField<S> {
    pub fn new(components: [RationalFunction<S>; 3]) -> Result<Self> {
        if let Some(bad) = components.iter().find(|c| c.nvars() != 3) {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: bad.nvars(),
            });
        }
        Ok(RationalVectorField { components })
    }

    /// Components sharing one denominator.
    pub fn over_common(numerators: [Polynomial<S>; 3], denominator: &Polynomial<S>) -> Result<Self> {
        let [a, b, c] = numerators;
        Self::new([
            RationalFunction::new(a, denominator.clone())?,
            RationalFunction::new(b, denominator.clone())?,
            RationalFunction::new(c, denominator.clone())?,
        ])
    }

    pub fn zero() -> Self {
        RationalVectorField {
            components: std::array::from_fn(|_| RationalFunction::zero(3)),
        }
    }

    pub fn components(&self) -> &[RationalFunction<S>; 3] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &RationalFunction<S> {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(RationalFunction::is_zero)
    }

    fn try_map(&self, f: impl Fn(usize, &RationalFunction<S>) -> Result<RationalFunction<S>>) -> Result<Self> {
        let [a, b, c] = &self.components;
        Ok(RationalVectorField {
            components: [f(0, a)?, f(1, b)?, f(2, c)?],
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.try_map(|i, c| c.add(&other.components[i]))
    }

    pub fn scale(&self, c: &S) -> Self {
        RationalVectorField {
            components: std::array::from_fn(|i| self.components[i].scale(c)),
        }
    }

    /// Pointwise product with a scalar rational function.
    pub fn mul_scalar(&self, f: &RationalFunction<S>) -> Result<Self> {
        self.try_map(|_, c| c.mul(f))
    }

    pub fn curl(&self) -> Result<Self> {
        let d = |i: usize, axis: usize| self.components[i].derivative(axis);
        Self::new([
            d(2, 1).sub(&d(1, 2))?,
            d(0, 2).sub(&d(2, 0))?,
            d(1, 0).sub(&d(0, 1))?,
        ])
    }

    pub fn divergence(&self) -> Result<RationalFunction<S>> {
        self.components[0]
            .derivative(0)
            .add(&self.components[1].derivative(1))?
            .add(&self.components[2].derivative(2))
    }

    pub fn cross(&self, other: &Self) -> Result<Self> {
        let (a, b) = (&self.components, &other.components);
        let term = |i: usize, j: usize| -> Result<RationalFunction<S>> {
            a[i].mul(&b[j])?.sub(&a[j].mul(&b[i])?)
        };
        Self::new([term(1, 2)?, term(2, 0)?, term(0, 1)?])
    }

    /// `g⁻¹ ∘ v ∘ g`.
    pub fn conjugate(&self, g: &Mat<S, 3>) -> Result<Self> {
        let g_inv = g.inverse()?;
        let images: Vec<Vec<S>> = g.rows().iter().map(|r| r.to_vec()).collect();
        let pulled: Vec<RationalFunction<S>> = self
            .components
            .iter()
            .map(|c| c.substitute_linear(&images))
            .collect();
        let row = |i: usize| -> Result<RationalFunction<S>> {
            let mut acc = RationalFunction::zero(3);
            for (j, c) in pulled.iter().enumerate() {
                let coef = g_inv.get(i, j);
                if !coef.is_zero() {
                    acc = acc.add(&c.scale(coef))?;
                }
            }
            Ok(acc)
        };
        Self::new([row(0)?, row(1)?, row(2)?])
    }

    pub fn equals(&self, other: &Self) -> bool {
        self.components
            .iter()
            .zip(&other.components)
            .all(|(a, b)| a.equals(b))
    }

    pub fn map_coeffs<T: Scalar>(&self, f: impl Fn(&S) -> T) -> RationalVectorField<T> {
        RationalVectorField {
            components: std::array::from_fn(|i| self.components[i].map_coeffs(&f)),
        }
    }

    pub fn to_rational(&self) -> Result<RationalVectorField<Rational>> {
        let [a, b, c] = &self.components;
        Ok(RationalVectorField {
            components: [a.to_rational()?, b.to_rational()?, c.to_rational()?],
        })
    }

    pub fn eval_f64(&self, x: &[f64]) -> [f64; 3] {
        std::array::from_fn(|i| self.components[i].eval_f64(x))
    }

    pub fn to_json(&self) -> Value {
        json!(self.components.iter().map(RationalFunction::to_json).collect::<Vec<_>>())
    }
}

impl<S: Scalar> fmt::Display for RationalVectorField<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.components;
        write!(f, "({a}, {b}, {c})")
    }
}

impl<S: Scalar> fmt::Debug for RationalVectorField<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Cross-multiplied equality of rational fields.
pub fn rf_equal(a: &RationalVectorField, b: &RationalVectorField) -> bool {
    a.equals(b)
}

pub fn rf_curl(v: &RationalVectorField) -> Result<RationalVectorField> {
    v.curl()
}

/// `scale · Σ_g g⁻¹∘v∘g`, computed over the scalar field of the group and
/// brought back to rational coefficients. A result that is not rational is
/// reported as an error.
pub fn rf_group_average<S: Scalar>(
    v: &RationalVectorField,
    group: &MatrixGroup<S, 3>,
    scale: &Rational,
) -> Result<RationalVectorField> {
    let lifted: RationalVectorField<S> = v.map_coeffs(|q| S::from_rational(q.clone()));
    let mut acc = RationalVectorField::<S>::zero();
    for g in group.elements() {
        acc = acc.add(&lifted.conjugate(g)?)?;
    }
    acc.scale(&S::from_rational(scale.clone())).to_rational()
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// `1 + x² + y² + z²`.
pub fn one_plus_r2() -> Polynomial<Rational> {
    poly(
        3,
        &[
            (int(1), &[0, 0, 0]),
            (int(1), &[2, 0, 0]),
            (int(1), &[0, 2, 0]),
            (int(1), &[0, 0, 2]),
        ],
    )
}

/// `4 / (1 + x² + y² + z²)`, the proportionality factor between the fields
/// below and their curls.
pub fn curl_multiplier() -> RationalFunction {
    RationalFunction {
        numerator: Polynomial::constant(3, int(4)),
        denominator: one_plus_r2(),
    }
}

/// The field obtained from the standard Sasakian structure on the 3-sphere by
/// stereographic projection, whose curl is `|B|·B`.
pub fn sasakian_field() -> RationalVectorField {
    let den = one_plus_r2().pow(2);
    let bx = poly(3, &[(int(8), &[1, 0, 1]), (int(-8), &[0, 1, 0])]);
    let by = poly(3, &[(int(8), &[1, 0, 0]), (int(8), &[0, 1, 1])]);
    let bz = poly(
        3,
        &[
            (int(4), &[0, 0, 0]),
            (int(4), &[0, 0, 2]),
            (int(-4), &[2, 0, 0]),
            (int(-4), &[0, 2, 0]),
        ],
    );
    RationalVectorField::over_common([bx, by, bz], &den).expect("three variables")
}

/// Numerator of `U = (2xy + 2xz − 2y + 2z + 1 + x² − y² − z²)/(1 + r²)²`.
pub fn u_numerator() -> Polynomial<Rational> {
    poly(
        3,
        &[
            (int(2), &[1, 1, 0]),
            (int(2), &[1, 0, 1]),
            (int(-2), &[0, 1, 0]),
            (int(2), &[0, 0, 1]),
            (int(1), &[0, 0, 0]),
            (int(1), &[2, 0, 0]),
            (int(-1), &[0, 2, 0]),
            (int(-1), &[0, 0, 2]),
        ],
    )
}

/// `(U(x,y,z), U(y,z,x), U(z,x,y))`.
pub fn averaged_field() -> RationalVectorField {
    let u = u_numerator();
    RationalVectorField::over_common(
        [u.clone(), u.permute(&[1, 2, 0]), u.permute(&[2, 0, 1])],
        &one_plus_r2().pow(2),
    )
    .expect("three variables")
}

/// `Σ n_i² = k·(1 + r²)²` for the numerators `n_i` over the common
/// denominator `(1 + r²)²`, i.e. `|v| = √k/(1 + r²)`. Returns `k` if the
/// identity holds for some rational `k`.
pub fn squared_norm_constant(v: &RationalVectorField) -> Option<Rational> {
    let den = one_plus_r2().pow(2);
    if v.components().iter().any(|c| c.denominator() != &den) {
        return None;
    }
    let sum = v
        .components()
        .iter()
        .fold(Polynomial::zero(3), |acc, c| acc + c.numerator() * c.numerator());
    let k = sum.coefficient(&[0, 0, 0]);
    (sum == den.scale(&k) && !k.is_zero()).then_some(k)
}

/// The rational data as a field over another scalar ring.
pub fn lift<S: Scalar>(v: &RationalVectorField) -> RationalVectorField<S> {
    v.map_coeffs(|q| S::from_rational(q.clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, GoldenNumber};
    use crate::linalg::{generate_group, icosahedral_generators, klein_group};

    #[test]
    fn constant_field_has_zero_curl() {
        let c = |n: i64| RationalFunction::from_polynomial(Polynomial::constant(3, int(n)));
        let v = RationalVectorField::new([c(1), c(-2), c(7)]).unwrap();
        assert!(rf_curl(&v).unwrap().is_zero());
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::<Rational>::new(Polynomial::one(3), Polynomial::zero(3)),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn cross_multiplied_equality_ignores_common_factors() {
        let b = sasakian_field();
        let two = Polynomial::constant(3, int(2));
        let doubled = RationalVectorField::new(std::array::from_fn(|i| {
            let c = b.component(i);
            RationalFunction::new(c.numerator() * &two, c.denominator() * &two).unwrap()
        }))
        .unwrap();
        assert!(rf_equal(&b, &doubled));
        assert!(!rf_equal(&b, &b.scale(&rat(1, 2))));
    }

    #[test]
    fn sasakian_field_is_beltrami() {
        let b = sasakian_field();
        let curl = rf_curl(&b).unwrap();
        assert!(rf_equal(&curl, &b.mul_scalar(&curl_multiplier()).unwrap()));
        assert!(b.cross(&curl).unwrap().is_zero());
        assert_eq!(squared_norm_constant(&b), Some(int(16)));
    }

    #[test]
    fn klein_average_vanishes() {
        let avg = rf_group_average(&sasakian_field(), &klein_group::<Rational>(), &int(1)).unwrap();
        assert!(avg.is_zero());
    }

    #[test]
    fn cyclic_average_gives_f() {
        let [_, beta, _] = icosahedral_generators();
        let cyclic = generate_group(&[beta], 3).unwrap();
        assert_eq!(cyclic.order(), 3);
        let avg = rf_group_average(&sasakian_field(), &cyclic, &rat(1, 4)).unwrap();
        let f = averaged_field();
        assert!(rf_equal(&avg, &f));
        let curl = rf_curl(&f).unwrap();
        assert!(rf_equal(&curl, &f.mul_scalar(&curl_multiplier()).unwrap()));
        assert_eq!(squared_norm_constant(&f), Some(int(3)));
    }

    #[test]
    fn trivial_group_average_is_identity() {
        let trivial = generate_group::<Rational, 3>(&[], 1).unwrap();
        let b = sasakian_field();
        assert!(rf_equal(&rf_group_average(&b, &trivial, &int(1)).unwrap(), &b));
    }

    #[test]
    fn irrational_average_is_reported() {
        let [_, _, gamma] = icosahedral_generators();
        let g = generate_group(&[gamma], 10).unwrap();
        assert!(matches!(
            rf_group_average(&sasakian_field(), &g, &int(1)),
            Err(Error::IrrationalCoefficient(_))
        ));
    }

    #[test]
    fn golden_lift_round_trips() {
        let b = sasakian_field();
        let lifted: RationalVectorField<GoldenNumber> = lift(&b);
        assert!(rf_equal(&lifted.to_rational().unwrap(), &b));
    }

    #[test]
    fn numeric_evaluation_matches_formula() {
        let b = sasakian_field();
        let (x, y, z) = (0.3, -1.2, 0.7);
        let d = (1.0 + x * x + y * y + z * z) * (1.0_f64 + x * x + y * y + z * z);
        let v = b.eval_f64(&[x, y, z]);
        assert!((v[0] - 8.0 * (x * z - y) / d).abs() < 1e-14);
        let norm = v.iter().map(|c| c * c).sum::<f64>().sqrt();
        assert!((norm - 4.0 / (1.0 + x * x + y * y + z * z)).abs() < 1e-14);
    }
}
