use std::fmt;

use num_traits::Zero;

use crate::exactnum::{Scalar, Sign};
use crate::trigexpr::polynomial::Polynomial;

/// Homogeneous linear form `b·x`, stored as its coefficient vector `b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LinearForm<S> {
    coeffs: Vec<S>,
}

impl<S: Scalar> LinearForm<S> {
    pub fn new(coeffs: Vec<S>) -> Self {
        LinearForm { coeffs }
    }

    pub fn axis(nvars: usize, axis: usize) -> Self {
        let coeffs = (0..nvars)
            .map(|i| if i == axis { S::one() } else { S::zero() })
            .collect();
        LinearForm { coeffs }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    pub fn coeff(&self, axis: usize) -> &S {
        &self.coeffs[axis]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn neg(&self) -> Self {
        LinearForm::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars(), other.nvars(), "linear forms of different arity");
        LinearForm::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.clone() + b)
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &S) -> Self {
        LinearForm::new(self.coeffs.iter().map(|a| a.clone() * c).collect())
    }

    /// `⟨b, b'⟩`.
    pub fn dot(&self, other: &Self) -> S {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b)
    }

    pub fn norm_squared(&self) -> S {
        self.dot(self)
    }

    pub fn is_canonical(&self) -> bool {
        self.leading_sign() == Sign::Positive
    }

    fn leading_sign(&self) -> Sign {
        self.coeffs
            .iter()
            .find(|c| !c.is_zero())
            .map_or(Sign::Zero, Scalar::sign)
    }

    /// Returns the form with positive leading coefficient and whether the
    /// sign was flipped to get there.
    pub fn canonical(self) -> (Self, bool) {
        if self.leading_sign() == Sign::Negative {
            (self.neg(), true)
        } else {
            (self, false)
        }
    }

    pub fn to_polynomial(&self) -> Polynomial<S> {
        Polynomial::linear(&self.coeffs)
    }

    /// `b·(A·x')`: the form pulled back along a linear change of variables
    /// whose `i`-th row gives old variable `i` in terms of the new ones.
    pub fn pull_back(&self, images: &[Vec<S>]) -> Self {
        assert_eq!(images.len(), self.nvars(), "one image per variable");
        let new_n = images.first().map_or(0, Vec::len);
        let coeffs = (0..new_n)
            .map(|j| {
                self.coeffs
                    .iter()
                    .zip(images)
                    .fold(S::zero(), |acc, (b, row)| acc + b.clone() * &row[j])
            })
            .collect();
        LinearForm::new(coeffs)
    }

    pub fn conj(&self) -> Self {
        LinearForm::new(self.coeffs.iter().map(Scalar::conj).collect())
    }

    pub fn eval_f64(&self, x: &[f64]) -> f64 {
        self.coeffs.iter().zip(x).map(|(c, xi)| c.to_f64() * xi).sum()
    }
}

impl<S: Scalar> fmt::Display for LinearForm<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}
