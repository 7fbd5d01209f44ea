//! Symbolic algebra of trigonometric polynomials in two or three variables.

mod expr;
mod field;
mod linear_form;
mod polynomial;

pub use expr::{TrigExpr, TrigKey, TrigKind};
pub use field::{is_first_integral, tau_swap, vector_identity_residual, VectorFieldExpr};
pub use linear_form::LinearForm;
pub use polynomial::{degree_of, from_rational, poly, Monomial, Polynomial, VARIABLE_NAMES};

use crate::error::{Error, Result};
use crate::exactnum::Scalar;

/// Default upper bound on Taylor degrees requested through the front-ends.
pub const DEFAULT_TAYLOR_CAP: u32 = 12;

/// Taylor expansion guarded by a degree cap.
pub fn taylor_capped<S: Scalar>(e: &TrigExpr<S>, degree: u32, cap: u32) -> Result<Polynomial<S>> {
    if degree > cap {
        return Err(Error::TaylorCapExceeded { degree, cap });
    }
    Ok(e.taylor(degree))
}

/// Shorthand for a linear form from coefficients.
pub fn form<S: Scalar>(coeffs: &[S]) -> LinearForm<S> {
    LinearForm::new(coeffs.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{rat, GoldenNumber, Rational};
    use crate::linalg::{icosahedral_generators, Mat3G};
    use num_traits::{One, Zero};
    use proptest::prelude::*;

    type G = GoldenNumber;
    type E = TrigExpr<G>;

    fn g(n: i64) -> G {
        G::integer(n)
    }

    fn q(n: i64, d: i64) -> G {
        G::rational(rat(n, d))
    }

    fn axis(i: usize) -> LinearForm<G> {
        LinearForm::axis(3, i)
    }

    fn ell_x0() -> LinearForm<G> {
        form(&[q(1, 2), G::phi() * &q(1, 2), G::phi_inv() * &q(1, 2)])
    }

    fn var(i: usize) -> Polynomial<G> {
        Polynomial::var(3, i)
    }

    #[test]
    fn sin_is_odd_and_cos_is_even() {
        let s = E::sin(axis(0)) + E::sin(axis(0).neg());
        assert!(s.is_zero());
        let c = E::cos(ell_x0().neg()) - E::cos(ell_x0());
        assert!(c.is_zero());
        assert!(E::sin(form(&[g(0), g(0), g(0)])).is_zero());
        assert_eq!(E::cos(form(&[g(0), g(0), g(0)])), E::constant(3, g(1)));
    }

    #[test]
    fn products_use_product_to_sum() {
        let x = axis(0);
        let prod = &E::sin(x.clone()) * &E::cos(x.clone());
        assert_eq!(prod, E::sin(x.scale(&g(2))).scale(&q(1, 2)));
        let e = E::sin(ell_x0()).mul_poly(&var(1));
        assert_eq!(&E::constant(3, g(1)) * &e, e);
        let pyth = &E::sin(ell_x0()) * &E::sin(ell_x0()) + &E::cos(ell_x0()) * &E::cos(ell_x0());
        assert_eq!(pyth, E::constant(3, g(1)));
    }

    #[test]
    fn partial_derivatives() {
        let e = E::sin(axis(1)).mul_poly(&var(0));
        assert_eq!(e.partial_derivative(0), E::sin(axis(1)));
        assert_eq!(
            E::sin(ell_x0()).partial_derivative(0),
            E::cos(ell_x0()).scale(&q(1, 2))
        );
        let mixed = &E::sin(ell_x0()) * &E::cos(axis(2)).mul_poly(&var(1));
        assert_eq!(
            mixed.partial_derivative(1).partial_derivative(0),
            mixed.partial_derivative(0).partial_derivative(1)
        );
    }

    #[test]
    fn curl_of_gradient_vanishes() {
        let f = E::from_poly(var(0).pow(2) * var(1) * var(2));
        let grad = VectorFieldExpr::gradient(&f);
        assert!(grad.curl().unwrap().is_zero());
        let two_d = VectorFieldExpr::<G>::zero(2);
        assert!(matches!(two_d.curl(), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn abc_field_is_its_own_curl() {
        let one = E::constant(3, g(1));
        let (a, b, c) = (one.clone(), one.clone(), one);
        let s = |i| E::sin(axis(i));
        let co = |i| E::cos(axis(i));
        let field = VectorFieldExpr::new(vec![
            &a * &s(2) + &c * &co(1),
            &b * &s(0) + &a * &co(2),
            &c * &s(1) + &b * &co(0),
        ])
        .unwrap();
        assert_eq!(field.curl().unwrap(), field);
    }

    #[test]
    fn divergence_of_shear() {
        let v = VectorFieldExpr::new(vec![E::sin(axis(2)), E::zero(3), E::zero(3)]).unwrap();
        assert!(v.divergence().is_zero());
    }

    #[test]
    fn taylor_of_sine() {
        let t = E::sin(axis(0)).taylor(4);
        assert_eq!(t, var(0) - var(0).pow(3).scale(&q(1, 6)));
        assert_eq!(E::cos(axis(0)).taylor(0), Polynomial::one(3));
    }

    #[test]
    fn taylor_cap() {
        let e = E::sin(axis(0));
        assert!(taylor_capped(&e, 12, DEFAULT_TAYLOR_CAP).is_ok());
        assert_eq!(
            taylor_capped(&e, 13, DEFAULT_TAYLOR_CAP),
            Err(Error::TaylorCapExceeded { degree: 13, cap: 12 })
        );
    }

    #[test]
    fn conjugation_by_identity() {
        let v = VectorFieldExpr::new(vec![
            E::sin(ell_x0()).mul_poly(&var(2)),
            E::cos(axis(1)),
            E::from_poly(var(0)),
        ])
        .unwrap();
        assert_eq!(v.conjugate(&Mat3G::identity()).unwrap(), v);
        let singular = Mat3G::diag([g(1), g(1), g(0)]);
        assert_eq!(v.conjugate(&singular), Err(Error::NotInvertible));
    }

    #[test]
    fn tau_swap_of_rational_symmetric_expression() {
        let e = E::cos(form(&[g(1), g(2), g(2)])).mul_poly(&(var(1) * var(2)));
        assert_eq!(tau_swap(&e, 0).unwrap(), e);
        let e2 = E::sin(form(&[g(0), G::sqrt5(), g(1)]));
        assert_eq!(tau_swap(&e2, 0).unwrap(), E::sin(form(&[g(0), g(1), -G::sqrt5()])));
    }

    #[test]
    fn lie_bracket_basics() {
        let v = VectorFieldExpr::new(vec![
            E::sin(axis(1)).mul_poly(&var(0)),
            E::cos(ell_x0()),
            E::from_poly(var(2).pow(2)),
        ])
        .unwrap();
        assert!(v.lie_bracket(&v).unwrap().is_zero());
        let c1 = VectorFieldExpr::from_polynomials(vec![Polynomial::constant(3, g(1)); 3]).unwrap();
        let c2 = VectorFieldExpr::from_polynomials(vec![
            Polynomial::constant(3, g(2)),
            Polynomial::constant(3, G::phi()),
            Polynomial::zero(3),
        ])
        .unwrap();
        assert!(c1.lie_bracket(&c2).unwrap().is_zero());
        // [∂x, x∂y] = ∂y
        let dx = VectorFieldExpr::from_polynomials(vec![
            Polynomial::one(3),
            Polynomial::zero(3),
            Polynomial::zero(3),
        ])
        .unwrap();
        let xdy = VectorFieldExpr::from_polynomials(vec![Polynomial::zero(3), var(0), Polynomial::zero(3)])
            .unwrap();
        let dy = VectorFieldExpr::from_polynomials(vec![Polynomial::zero(3), Polynomial::one(3), Polynomial::zero(3)])
            .unwrap();
        assert_eq!(dx.lie_bracket(&xdy).unwrap(), dy);
    }

    #[test]
    fn restriction_of_zero_field() {
        let v = VectorFieldExpr::<G>::zero(3);
        let r = v.restrict_to_line(&[g(1), g(2), g(3)]).unwrap();
        assert!(r.iter().all(|c| c.is_zero() && c.nvars() == 1));
        assert_eq!(v.restrict_to_line(&[g(0), g(0), g(0)]), Err(Error::ZeroVector));
    }

    #[test]
    fn helmholtz_plane_wave_examples() {
        // (a·x) sin(b·x) with a ⟂ b, |b| = 1
        let b = form(&[q(3, 5), q(4, 5), g(0)]);
        let a = form(&[q(-4, 5), q(3, 5), g(7)]);
        let e = E::term(TrigKind::Sin, a.to_polynomial(), b.clone());
        assert!(e.helmholtz_residual().is_zero());
        let e = E::term(TrigKind::Cos, a.to_polynomial(), b);
        assert!(e.helmholtz_residual().is_zero());
        let xsinx = E::sin(axis(0)).mul_poly(&var(0));
        assert!(!xsinx.helmholtz_residual().is_zero());
        assert!(!E::sin(axis(0).scale(&g(2))).helmholtz_residual().is_zero());
    }

    #[test]
    fn first_integrals_of_rotation() {
        // rotation about z: (−y, x, 0) preserves x²+y² but not x
        let v = VectorFieldExpr::from_polynomials(vec![-var(1), var(0), Polynomial::zero(3)]).unwrap();
        assert!(is_first_integral(&(var(0).pow(2) + var(1).pow(2)), &v).unwrap());
        assert!(!is_first_integral(&var(0), &v).unwrap());
    }

    #[test]
    fn deterministic_text() {
        let e = E::sin(axis(0)).mul_poly(&var(1).scale(&g(2))) + E::constant(3, q(1, 2));
        assert_eq!(e.to_string(), "[(1/2)] + [(2)*y]*sin((1)*x)");
    }

    // ---- property tests ----

    fn small_golden() -> impl Strategy<Value = G> {
        (-4i64..=4, 1i64..=3, -2i64..=2, 1i64..=2)
            .prop_map(|(a, b, c, d)| G::new(rat(a, b), rat(c, d)))
    }

    fn small_form() -> impl Strategy<Value = LinearForm<G>> {
        prop::collection::vec(small_golden(), 3).prop_map(LinearForm::new)
    }

    fn small_poly() -> impl Strategy<Value = Polynomial<G>> {
        prop::collection::vec((small_golden(), 0u32..=2, 0u32..=2, 0u32..=1), 0..=3).prop_map(
            |ts| Polynomial::from_terms(3, ts.into_iter().map(|(c, a, b, d)| (vec![a, b, d], c))),
        )
    }

    fn small_expr() -> impl Strategy<Value = E> {
        prop::collection::vec((0u8..3, small_poly(), small_form()), 0..=3).prop_map(|ts| {
            ts.into_iter().fold(E::zero(3), |acc, (k, p, l)| {
                let kind = [TrigKind::One, TrigKind::Sin, TrigKind::Cos][k as usize];
                let mut e = E::zero(3);
                e.add_term(kind, Some(l), p);
                acc + e
            })
        })
    }

    fn small_field() -> impl Strategy<Value = VectorFieldExpr<G>> {
        prop::collection::vec(small_expr(), 3).prop_map(|c| VectorFieldExpr::new(c).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(10_000))]

        #[test]
        fn canonical_form_soundness(e1 in small_expr(), e2 in small_expr()) {
            prop_assert!((e1.clone() - e1.clone()).is_zero());
            prop_assert_eq!((e1.clone() + e2.clone()) - e2, e1);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn product_is_commutative(e1 in small_expr(), e2 in small_expr()) {
            prop_assert_eq!(&e1 * &e2, &e2 * &e1);
        }

        #[test]
        fn double_curl_identity(v in small_field()) {
            prop_assert!(vector_identity_residual(&v).unwrap().is_zero());
        }

        #[test]
        fn conjugation_is_a_group_action(v in small_field(), i in 0usize..3, j in 0usize..3) {
            let gens = icosahedral_generators();
            let (a, b) = (&gens[i], &gens[j]);
            let lhs = v.conjugate(a).unwrap().conjugate(b).unwrap();
            let rhs = v.conjugate(&a.mul(b)).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn taylor_matches_numeric_value(e in small_expr()) {
            let x = [0.01, -0.02, 0.015];
            let exact = e.eval_f64(&x);
            let series = e.taylor(10).eval_f64(&x);
            prop_assert!((exact - series).abs() < 1e-9 * (1.0 + exact.abs()));
        }
    }

    #[test]
    fn rational_scalars_share_the_engine() {
        let e = TrigExpr::<Rational>::sin(LinearForm::axis(2, 0));
        let d = e.partial_derivative(0).partial_derivative(0);
        assert_eq!(d + e, TrigExpr::zero(2));
        assert!(Rational::one() > Rational::zero());
    }
}
