//! Double-precision evaluation of exact expressions.
//!
//! Coefficients are converted once, at compile time, through
//! [`Scalar::to_f64`], which rounds `r + s·√D` from a correctly rounded square
//! root. Evaluation afterwards touches only `f64`.

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::trigexpr::{TrigExpr, TrigKey, VectorFieldExpr};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Wave {
    One,
    Sin,
    Cos,
}

#[derive(Debug, Clone, PartialEq)]
struct Term {
    wave: Wave,
    arg: Vec<f64>,
    monomials: Vec<(f64, Vec<i32>)>,
}

/// A scalar expression compiled for fast evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct CompiledExpr {
    nvars: usize,
    terms: Vec<Term>,
}

impl CompiledExpr {
    pub fn new<S: Scalar>(e: &TrigExpr<S>) -> Self {
        let terms = e
            .terms()
            .map(|(key, p)| {
                let (wave, arg) = match key {
                    TrigKey::One => (Wave::One, Vec::new()),
                    TrigKey::Sin(l) => (Wave::Sin, l.coeffs().iter().map(Scalar::to_f64).collect()),
                    TrigKey::Cos(l) => (Wave::Cos, l.coeffs().iter().map(Scalar::to_f64).collect()),
                };
                let monomials = p
                    .terms()
                    .map(|(m, c)| (c.to_f64(), m.iter().map(|&k| k as i32).collect()))
                    .collect();
                Term { wave, arg, monomials }
            })
            .collect();
        CompiledExpr {
            nvars: e.nvars(),
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// Evaluates without validating `x`.
    pub fn eval_unchecked(&self, x: &[f64]) -> f64 {
        let mut total = 0.0;
        for t in &self.terms {
            let p: f64 = t
                .monomials
                .iter()
                .map(|(c, m)| c * m.iter().zip(x).map(|(&k, xi)| xi.powi(k)).product::<f64>())
                .sum();
            total += match t.wave {
                Wave::One => p,
                Wave::Sin => p * dot(&t.arg, x).sin(),
                Wave::Cos => p * dot(&t.arg, x).cos(),
            };
        }
        total
    }

    pub fn eval(&self, x: &[f64]) -> Result<f64> {
        check_point(self.nvars, x)?;
        Ok(self.eval_unchecked(x))
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| p * q).sum()
}

fn check_point(n: usize, x: &[f64]) -> Result<()> {
    if x.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: x.len(),
        });
    }
    if let Some(bad) = x.iter().find(|v| !v.is_finite()) {
        return Err(Error::NonFinite(format!("coordinate {bad}")));
    }
    Ok(())
}

/// A vector field compiled for fast evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct CompiledField {
    components: Vec<CompiledExpr>,
}

impl CompiledField {
    pub fn new<S: Scalar>(v: &VectorFieldExpr<S>) -> Self {
        CompiledField {
            components: v.components().iter().map(CompiledExpr::new).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn eval_into(&self, x: &[f64], out: &mut [f64]) {
        for (o, c) in out.iter_mut().zip(&self.components) {
            *o = c.eval_unchecked(x);
        }
    }

    pub fn eval(&self, x: &[f64]) -> Result<Vec<f64>> {
        check_point(self.dim(), x)?;
        Ok(self.components.iter().map(|c| c.eval_unchecked(x)).collect())
    }

    /// Curl by central differences with spacing `h`.
    pub fn finite_difference_curl(&self, x: &[f64], h: f64) -> Result<[f64; 3]> {
        if self.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: self.dim(),
            });
        }
        check_point(3, x)?;
        let d = |comp: usize, axis: usize| {
            let mut p = x.to_vec();
            p[axis] = x[axis] + h;
            let plus = self.components[comp].eval_unchecked(&p);
            p[axis] = x[axis] - h;
            let minus = self.components[comp].eval_unchecked(&p);
            (plus - minus) / (2.0 * h)
        };
        Ok([d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)])
    }
}

/// One-shot evaluation of an exact field at a point.
pub fn eval_field<S: Scalar>(v: &VectorFieldExpr<S>, x: &[f64]) -> Result<Vec<f64>> {
    CompiledField::new(v).eval(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, GoldenNumber};
    use crate::trigexpr::{LinearForm, Polynomial};

    #[test]
    fn matches_direct_evaluation() {
        let g = |n, d| GoldenNumber::rational(rat(n, d));
        let l = LinearForm::new(vec![GoldenNumber::phi(), g(1, 2), g(-1, 3)]);
        let p = Polynomial::var(3, 0).mul_ref(&Polynomial::var(3, 2)).scale(&GoldenNumber::sqrt5());
        let e = TrigExpr::sin(l.clone()).mul_poly(&p) + TrigExpr::cos(l).scale(&g(3, 4));
        let x = [0.3, -1.2, 2.5];
        let direct = e.eval_f64(&x);
        let compiled = CompiledExpr::new(&e).eval(&x).unwrap();
        assert!((direct - compiled).abs() < 1e-14);
    }

    #[test]
    fn rejects_bad_points() {
        let v = VectorFieldExpr::<GoldenNumber>::zero(3);
        assert!(matches!(eval_field(&v, &[0.0, f64::NAN, 0.0]), Err(Error::NonFinite(_))));
        assert!(matches!(
            eval_field(&v, &[0.0, 1.0]),
            Err(Error::DimensionMismatch { expected: 3, found: 2 })
        ));
    }
}
