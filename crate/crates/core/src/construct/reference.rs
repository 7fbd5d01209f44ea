//! Closed forms entered term by term from their displayed product formulas.
//! They are built independently of the ansatz so that the catalog can
//! cross-check the two constructions against each other.

use num_traits::Zero;

use crate::exactnum::{rat, GoldenNumber, Rational, Scalar, Sqrt3Number};
use crate::trigexpr::{poly, LinearForm, Polynomial, TrigExpr, VectorFieldExpr};

type G = GoldenNumber;

/// `r + s√5`.
fn q5(r: i64, s: i64) -> G {
    G::new(Rational::from_integer(r.into()), Rational::from_integer(s.into()))
}

#[derive(Clone, Copy)]
enum F {
    S,
    C,
}

/// The three argument triples that occur in the product formulas:
/// `(x/2, φy/2, z/(2φ))`, `(x/(2φ), y/2, φz/2)` and `(φx/2, y/(2φ), z/2)`.
#[derive(Clone, Copy)]
enum Triple {
    A,
    B,
    C,
}

fn scales(t: Triple) -> [G; 3] {
    let half = G::rational(rat(1, 2));
    let p = G::phi() * &half;
    let q = G::phi_inv() * &half;
    match t {
        Triple::A => [half.clone(), p, q],
        Triple::B => [q, half.clone(), p],
        Triple::C => [p, q, half],
    }
}

fn single(kind: F, axis: usize, c: G) -> TrigExpr<G> {
    let mut coeffs = vec![G::zero(); 3];
    coeffs[axis] = c;
    let l = LinearForm::new(coeffs);
    match kind {
        F::S => TrigExpr::sin(l),
        F::C => TrigExpr::cos(l),
    }
}

/// `coef · var · f₁(s₁x) f₂(s₂y) f₃(s₃z)`.
fn product(coef: G, var: usize, kinds: [F; 3], t: Triple) -> TrigExpr<G> {
    let s = scales(t);
    let mut e = TrigExpr::from_poly(Polynomial::var(3, var).scale(&coef));
    for (axis, kind) in kinds.into_iter().enumerate() {
        e = &e * &single(kind, axis, s[axis].clone());
    }
    e
}

fn var_trig(coef: G, var: usize, kind: F, axis: usize) -> TrigExpr<G> {
    TrigExpr::from_poly(Polynomial::var(3, var).scale(&coef)) * single(kind, axis, G::integer(1))
}

use F::{C, S};
use Triple::{A as TA, B as TB, C as TC};

/// First component of the even part of the first eigenfield.
pub fn v_x() -> TrigExpr<G> {
    let phi = G::phi();
    let pinv = G::phi_inv();
    let two = G::integer(2);
    [
        product(two.clone(), 0, [S, S, S], TA),
        product(-(phi.clone() * &two), 0, [S, S, S], TB),
        product(pinv.clone() * &two, 0, [S, S, S], TC),
        var_trig(G::integer(1), 1, S, 2),
        product(two.clone(), 1, [C, C, S], TA),
        product(-two.clone(), 1, [C, C, S], TB),
        var_trig(G::integer(1), 2, S, 1),
        product(-two.clone(), 2, [C, S, C], TA),
        product(two, 2, [C, S, C], TC),
    ]
    .into_iter()
    .fold(TrigExpr::zero(3), |acc, e| acc + e)
}

/// First component of the odd part (the curl of the even part) of the first
/// eigenfield.
pub fn w_x() -> TrigExpr<G> {
    let phi = G::phi();
    let pinv = G::phi_inv();
    let phi2 = phi.clone() * &phi;
    let pinv2 = pinv.clone() * &pinv;
    let r5 = G::sqrt5();
    [
        var_trig(G::integer(1), 0, C, 1),
        var_trig(G::integer(-1), 0, C, 2),
        product(-r5.clone(), 0, [C, C, C], TA),
        product(phi, 0, [C, C, C], TB),
        product(pinv, 0, [C, C, C], TC),
        product(-pinv2.clone(), 1, [S, S, C], TA),
        product(-phi2.clone(), 1, [S, S, C], TB),
        product(r5.clone(), 1, [S, S, C], TC),
        product(-phi2, 2, [S, C, S], TA),
        product(-pinv2, 2, [S, C, S], TC),
        product(r5, 2, [S, C, S], TB),
    ]
    .into_iter()
    .fold(TrigExpr::zero(3), |acc, e| acc + e)
}

/// First component of the even part of the second eigenfield.
pub fn v0_x() -> TrigExpr<G> {
    let phi = G::phi();
    let pinv = G::phi_inv();
    let two = G::integer(2);
    let r5 = G::sqrt5();
    [
        product(two.clone(), 0, [S, S, S], TA),
        product(-(phi.clone() * &two), 0, [S, S, S], TB),
        product(pinv.clone() * &two, 0, [S, S, S], TC),
        var_trig(phi.clone() * &two, 1, S, 2),
        product(q5(7, -1), 1, [C, C, S], TA),
        product(phi.clone() * &phi * &two, 1, [C, C, S], TB),
        product(r5.clone() * &two, 1, [C, C, S], TC),
        var_trig(-(pinv.clone() * &two), 2, S, 1),
        product(-q5(7, 1), 2, [C, S, C], TA),
        product(-(pinv.clone() * &pinv * &two), 2, [C, S, C], TC),
        product(-(r5 * &two), 2, [C, S, C], TB),
    ]
    .into_iter()
    .fold(TrigExpr::zero(3), |acc, e| acc + e)
}

/// The first component `ϖ` of the degree-6 head `M`.
pub fn varpi() -> Polynomial<G> {
    poly(
        3,
        &[
            (q5(5, -1), &[0, 1, 5]),
            (q5(5, 1), &[0, 5, 1]),
            (q5(-20, 0), &[0, 3, 3]),
            (q5(10, 10), &[2, 1, 3]),
            (q5(10, -10), &[2, 3, 1]),
            (q5(-10, 0), &[4, 1, 1]),
        ],
    )
}

/// The first component `λ` of the degree-5 head `N`.
pub fn lambda() -> Polynomial<G> {
    poly(
        3,
        &[
            (q5(35, -5), &[1, 4, 0]),
            (q5(-35, -5), &[1, 0, 4]),
            (q5(0, 60), &[1, 2, 2]),
            (q5(-70, -10), &[3, 2, 0]),
            (q5(70, -10), &[3, 0, 2]),
            (q5(0, 2), &[5, 0, 0]),
        ],
    )
}

/// The first component `ϖ₀` of the degree-10 head `P`.
pub fn varpi0() -> Polynomial<G> {
    poly(
        3,
        &[
            (q5(-18, 0), &[8, 1, 1]),
            (q5(84, 84), &[6, 3, 1]),
            (q5(84, -84), &[6, 1, 3]),
            (q5(-126, -126), &[4, 5, 1]),
            (q5(-126, 126), &[4, 1, 5]),
            (q5(36, 108), &[2, 7, 1]),
            (q5(36, -108), &[2, 1, 7]),
            (q5(0, -504), &[2, 5, 3]),
            (q5(0, 504), &[2, 3, 5]),
            (q5(9, -5), &[0, 9, 1]),
            (q5(9, 5), &[0, 1, 9]),
            (q5(-120, 24), &[0, 7, 3]),
            (q5(-120, -24), &[0, 3, 7]),
            (q5(252, 0), &[0, 5, 5]),
        ],
    )
}

/// `(p, p(y,z,x), p(z,x,y))`.
pub fn cyclic_polynomials<T: Scalar>(p: &Polynomial<T>) -> Vec<Polynomial<T>> {
    vec![p.clone(), p.permute(&[1, 2, 0]), p.permute(&[2, 0, 1])]
}

/// Common denominator of the degree-6 head and of the degree-5 head of the
/// first eigenfield.
pub const FIRST_HEAD_DENOMINATOR: i64 = 768;

/// Common denominator of the Taylor heads of the second eigenfield.
pub const SECOND_HEAD_DENOMINATOR: i64 = 23_224_320;

/// The planar field with six-fold dihedral symmetry.
pub fn dihedral_field() -> VectorFieldExpr<Sqrt3Number> {
    type T = Sqrt3Number;
    let half = T::rational(rat(1, 2));
    let r3 = T::root();
    let r3h = r3.clone() * &half;
    let axis = |i: usize, c: T| {
        let mut k = vec![T::zero(), T::zero()];
        k[i] = c;
        LinearForm::new(k)
    };
    let comp = |u: usize| {
        let v = 1 - u;
        let minus_cos_v = -TrigExpr::cos(axis(v, T::integer(1)));
        let sines = TrigExpr::sin(axis(u, half.clone())) * TrigExpr::sin(axis(v, r3h.clone()));
        let cosines = TrigExpr::cos(axis(u, r3h.clone())) * TrigExpr::cos(axis(v, half.clone()));
        minus_cos_v + sines.scale(&r3) + cosines
    };
    VectorFieldExpr::new(vec![comp(0), comp(1)]).expect("two components in two variables")
}

/// The generators of the dihedral symmetry group of [`dihedral_field`].
pub fn dihedral_generators() -> [crate::linalg::Mat<Sqrt3Number, 2>; 2] {
    type T = Sqrt3Number;
    let half = T::rational(rat(1, 2));
    let r3h = T::root() * &half;
    [
        crate::linalg::Mat::from_rows([[T::zero(), T::integer(1)], [T::integer(1), T::zero()]]),
        crate::linalg::Mat::from_rows([[-half.clone(), -r3h.clone()], [r3h, -half]]),
    ]
}

/// The degree-2 Taylor head of [`dihedral_field`]:
/// `(3/8)(2xy − x² + y², 2xy + x² − y²)`.
pub fn dihedral_head() -> Vec<Polynomial<Sqrt3Number>> {
    type T = Sqrt3Number;
    let c = |n: i64| T::rational(rat(3 * n, 8));
    vec![
        poly(2, &[(c(2), &[1, 1]), (c(-1), &[2, 0]), (c(1), &[0, 2])]),
        poly(2, &[(c(2), &[1, 1]), (c(1), &[2, 0]), (c(-1), &[0, 2])]),
    ]
}

/// `(A sin z + C cos y, B sin x + A cos z, C sin y + B cos x)`.
pub fn abc_field<T: Scalar>(a: &T, b: &T, c: &T) -> VectorFieldExpr<T> {
    let s = |i: usize| TrigExpr::sin(LinearForm::axis(3, i));
    let k = |i: usize| TrigExpr::cos(LinearForm::axis(3, i));
    VectorFieldExpr::new(vec![
        s(2).scale(a) + k(1).scale(c),
        s(0).scale(b) + k(2).scale(a),
        s(1).scale(c) + k(0).scale(b),
    ])
    .expect("three components in three variables")
}

/// `Υ(s) = −s√5 (1 − φ cos s + φ⁻¹ cos φs)` as a one-variable expression.
pub fn upsilon_expr() -> TrigExpr<G> {
    let s = Polynomial::var(1, 0);
    let bracket = TrigExpr::constant(1, G::integer(1))
        - TrigExpr::cos(LinearForm::new(vec![G::integer(1)])).scale(&G::phi())
        + TrigExpr::cos(LinearForm::new(vec![G::phi()])).scale(&G::phi_inv());
    bracket.mul_poly(&s.scale(&-G::sqrt5()))
}
