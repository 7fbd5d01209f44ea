//! Vector fields whose components are [`TrigExpr`]s, with the differential
//! operators and symmetry actions used throughout the constructions.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;
use crate::linalg::Mat;
use crate::trigexpr::expr::TrigExpr;
use crate::trigexpr::polynomial::Polynomial;

/// `(f_1, …, f_n)` on `R^n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VectorFieldExpr<S> {
    components: Vec<TrigExpr<S>>,
}

impl<S: Scalar> VectorFieldExpr<S> {
    pub fn new(components: Vec<TrigExpr<S>>) -> Result<Self> {
        let n = components.len();
        if let Some(bad) = components.iter().find(|c| c.nvars() != n) {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: bad.nvars(),
            });
        }
        Ok(VectorFieldExpr { components })
    }

    pub fn zero(n: usize) -> Self {
        VectorFieldExpr {
            components: vec![TrigExpr::zero(n); n],
        }
    }

    pub fn from_polynomials(components: Vec<Polynomial<S>>) -> Result<Self> {
        Self::new(components.into_iter().map(TrigExpr::from_poly).collect())
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[TrigExpr<S>] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &TrigExpr<S> {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(TrigExpr::is_zero)
    }

    fn zip_with(
        &self,
        other: &Self,
        f: impl Fn(&TrigExpr<S>, &TrigExpr<S>) -> Result<TrigExpr<S>>,
    ) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| f(a, b))
            .collect::<Result<_>>()?;
        Ok(VectorFieldExpr { components })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, TrigExpr::checked_add)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, TrigExpr::checked_sub)
    }

    pub fn scale(&self, c: &S) -> Self {
        self.map(|e| e.scale(c))
    }

    pub fn map(&self, f: impl Fn(&TrigExpr<S>) -> TrigExpr<S>) -> Self {
        VectorFieldExpr {
            components: self.components.iter().map(f).collect(),
        }
    }

    pub fn curl(&self) -> Result<Self> {
        if self.dim() != 3 {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: self.dim(),
            });
        }
        let d = |i: usize, axis: usize| self.components[i].partial_derivative(axis);
        Ok(VectorFieldExpr {
            components: vec![d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)],
        })
    }

    pub fn divergence(&self) -> TrigExpr<S> {
        self.components
            .iter()
            .enumerate()
            .fold(TrigExpr::zero(self.dim()), |acc, (i, c)| {
                acc + c.partial_derivative(i)
            })
    }

    /// Componentwise Laplacian.
    pub fn vector_laplacian(&self) -> Self {
        self.map(TrigExpr::laplacian)
    }

    pub fn gradient(e: &TrigExpr<S>) -> Self {
        VectorFieldExpr {
            components: (0..e.nvars()).map(|i| e.partial_derivative(i)).collect(),
        }
    }

    /// `X(f) = Σ X_i ∂f/∂x_i`.
    pub fn directional_derivative(&self, f: &TrigExpr<S>) -> Result<TrigExpr<S>> {
        if f.nvars() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: f.nvars(),
            });
        }
        let mut acc = TrigExpr::zero(self.dim());
        for (i, xi) in self.components.iter().enumerate() {
            acc = acc.checked_add(&xi.checked_mul(&f.partial_derivative(i))?)?;
        }
        Ok(acc)
    }

    /// `[X, Y]_i = X(Y_i) − Y(X_i)`.
    pub fn lie_bracket(&self, other: &Self) -> Result<Self> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            });
        }
        let components = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(f, g)| {
                self.directional_derivative(g)?
                    .checked_sub(&other.directional_derivative(f)?)
            })
            .collect::<Result<_>>()?;
        Ok(VectorFieldExpr { components })
    }

    /// `g⁻¹ ∘ v ∘ g`.
    pub fn conjugate<const N: usize>(&self, g: &Mat<S, N>) -> Result<Self> {
        if N != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: N,
            });
        }
        let g_inv = g.inverse()?;
        let images: Vec<Vec<S>> = g.rows().iter().map(|r| r.to_vec()).collect();
        let pulled: Vec<TrigExpr<S>> = self
            .components
            .iter()
            .map(|c| c.substitute(&images))
            .collect();
        let components = (0..N)
            .map(|i| {
                pulled
                    .iter()
                    .enumerate()
                    .fold(TrigExpr::zero(N), |acc, (j, c)| {
                        acc + c.scale(g_inv.get(i, j))
                    })
            })
            .collect();
        Ok(VectorFieldExpr { components })
    }

    /// `v(s·d)`, one single-variable expression per component.
    pub fn restrict_to_line(&self, direction: &[S]) -> Result<Vec<TrigExpr<S>>> {
        if direction.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: direction.len(),
            });
        }
        if direction.iter().all(|x| x.is_zero()) {
            return Err(Error::ZeroVector);
        }
        let images: Vec<Vec<S>> = direction.iter().map(|d| vec![d.clone()]).collect();
        Ok(self
            .components
            .iter()
            .map(|c| c.substitute(&images))
            .collect())
    }

    /// Truncated Taylor polynomials of each component.
    pub fn taylor(&self, degree: u32) -> Vec<Polynomial<S>> {
        self.components.iter().map(|c| c.taylor(degree)).collect()
    }

    /// Polynomial components, if every component is a pure polynomial.
    pub fn as_polynomials(&self) -> Option<Vec<Polynomial<S>>> {
        self.components.iter().map(TrigExpr::as_polynomial).collect()
    }

    pub fn conj(&self) -> Self {
        self.map(TrigExpr::conj)
    }

    pub fn eval_f64(&self, x: &[f64]) -> Vec<f64> {
        self.components.iter().map(|c| c.eval_f64(x)).collect()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "dimension": self.dim(),
            "components": self.components.iter().map(TrigExpr::to_json).collect::<Vec<_>>(),
        })
    }
}

/// `Σ (∂w/∂x_i)·v_i == 0` exactly.
pub fn is_first_integral<S: Scalar>(w: &Polynomial<S>, v: &VectorFieldExpr<S>) -> Result<bool> {
    Ok(v.directional_derivative(&TrigExpr::from_poly(w.clone()))?
        .is_zero())
}

/// `∇×(∇×v) − ∇(∇·v) + ∇²v`, identically zero for every smooth field.
pub fn vector_identity_residual<S: Scalar>(v: &VectorFieldExpr<S>) -> Result<VectorFieldExpr<S>> {
    let curl_curl = v.curl()?.curl()?;
    let grad_div = VectorFieldExpr::gradient(&v.divergence());
    curl_curl.sub(&grad_div)?.add(&v.vector_laplacian())
}

/// Transposes the two variables other than `fixed_axis` and applies the
/// Galois conjugation to every coefficient.
pub fn tau_swap<S: Scalar>(e: &TrigExpr<S>, fixed_axis: usize) -> Result<TrigExpr<S>> {
    if e.nvars() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: e.nvars(),
        });
    }
    if fixed_axis >= 3 {
        return Err(Error::InvalidArgument(format!("axis {fixed_axis} out of range")));
    }
    let mut perm = [0, 1, 2];
    let others: Vec<usize> = (0..3).filter(|&i| i != fixed_axis).collect();
    perm.swap(others[0], others[1]);
    Ok(e.permute(&perm).conj())
}

impl<S: Scalar> fmt::Display for VectorFieldExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<S: Scalar> fmt::Debug for VectorFieldExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
