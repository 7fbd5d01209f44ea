//! The eleven-parameter trigonometric ansatz for one component of a field
//! with Klein-four symmetry, and its cyclic completion to a vector field.

use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::construct::forms::{ell, Axis};
use crate::error::{Error, Result};
use crate::exactnum::{rat, GoldenNumber};
use crate::trigexpr::{LinearForm, Polynomial, TrigExpr, TrigKind, VectorFieldExpr};

type G = GoldenNumber;

pub const PARAM_NAMES: [char; 11] = ['a', 'b', 'c', 'd', 'e', 'f', 'g', 'h', 'i', 'j', 'k'];

/// Values of the constants `a, …, k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AnsatzParams(pub [G; 11]);

impl AnsatzParams {
    pub fn zero() -> Self {
        AnsatzParams(std::array::from_fn(|_| G::zero()))
    }

    pub fn unit(i: usize) -> Self {
        let mut p = Self::zero();
        p.0[i] = G::integer(1);
        p
    }

    pub fn from_slice(v: &[G]) -> Result<Self> {
        let arr: [G; 11] = v.to_vec().try_into().map_err(|_| Error::DimensionMismatch {
            expected: 11,
            found: v.len(),
        })?;
        Ok(AnsatzParams(arr))
    }

    /// Coefficients producing the even part of the first eigenfield, with
    /// Taylor head of degree 6.
    pub fn first_field() -> Self {
        let half = G::rational(rat(1, 2));
        let phi = G::phi();
        let phi_inv = G::phi_inv();
        AnsatzParams([
            G::integer(1),
            G::integer(1),
            G::zero(),
            G::zero(),
            G::zero(),
            phi_inv.clone() * &half,
            -(phi.clone() * &half),
            phi * &half,
            half.clone(),
            -half.clone(),
            phi_inv * &half,
        ])
    }

    /// Coefficients producing the even part of the second eigenfield, with
    /// Taylor head of degree 10.
    pub fn second_field() -> Self {
        let phi = G::phi();
        let phi_inv = G::phi_inv();
        AnsatzParams([
            -(phi_inv.clone() * G::integer(2)),
            phi.clone() * G::integer(2),
            G::zero(),
            G::zero(),
            G::zero(),
            -(phi_inv.clone() * &phi_inv),
            -(phi.clone() * &phi),
            G::integer(-1),
            phi,
            phi_inv,
            G::integer(1),
        ])
    }

    pub fn get(&self, name: char) -> Option<&G> {
        PARAM_NAMES.iter().position(|&c| c == name).map(|i| &self.0[i])
    }

    pub fn scale(&self, c: &G) -> Self {
        AnsatzParams(std::array::from_fn(|i| self.0[i].clone() * c))
    }

    pub fn as_slice(&self) -> &[G] {
        &self.0
    }

    pub fn to_json(&self) -> Value {
        let map: serde_json::Map<String, Value> = PARAM_NAMES
            .iter()
            .zip(&self.0)
            .map(|(n, v)| (n.to_string(), json!(v.to_string())))
            .collect();
        Value::Object(map)
    }
}

impl fmt::Display for AnsatzParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}={}", PARAM_NAMES[i], v)?;
        }
        write!(f, ")")
    }
}

/// The four reflections in the Klein group, applied to the arguments of the
/// linear coefficient forms, with the sign of each summand.
const REFLECTIONS: [([i64; 3], i64); 4] = [
    ([1, 1, 1], 1),
    ([-1, -1, 1], 1),
    ([-1, 1, -1], 1),
    ([1, -1, -1], -1),
];

/// Signs of the cosine terms in each family.
const COS_SIGNS: [i64; 4] = [1, -1, -1, 1];

/// The order in which `ℓ_{w,0..3}` are paired with the reflections above.
fn family_order(w: Axis) -> [usize; 4] {
    match w {
        Axis::X => [0, 3, 2, 1],
        Axis::Y => [0, 2, 1, 3],
        Axis::Z => [0, 1, 3, 2],
    }
}

fn reflect(l: &LinearForm<G>, r: [i64; 3]) -> LinearForm<G> {
    LinearForm::new(
        l.coeffs()
            .iter()
            .zip(r)
            .map(|(c, s)| c.clone() * G::integer(s))
            .collect(),
    )
}

/// The linear coefficient form attached to family `w`: `K`, `L` or `M`.
fn coefficient_form(p: &AnsatzParams, w: Axis) -> LinearForm<G> {
    let [_, _, _, _, _, f, g, h, i, j, k] = &p.0;
    let (c1, l1, c2, l2) = match w {
        Axis::X => (f, ell(Axis::Z, 2), g, ell(Axis::Y, 1)),
        Axis::Y => (h, ell(Axis::X, 2), i, ell(Axis::Z, 1)),
        Axis::Z => (j, ell(Axis::Y, 2), k, ell(Axis::X, 1)),
    };
    l1.scale(c1).add(&l2.scale(c2))
}

/// The scalar function `𝔊(x, y, z)` for the given constants.
pub fn build_ansatz(p: &AnsatzParams) -> TrigExpr<G> {
    let [a, b, c, d, e, ..] = &p.0;
    let mut out = TrigExpr::zero(3);
    let z = Polynomial::var(3, 2).scale(a);
    out.add_term(TrigKind::Sin, Some(LinearForm::axis(3, 1)), z);
    let y = Polynomial::var(3, 1).scale(b);
    out.add_term(TrigKind::Sin, Some(LinearForm::axis(3, 2)), y);
    for (w, amplitude) in Axis::ALL.into_iter().zip([c, d, e]) {
        let order = family_order(w);
        let lin = coefficient_form(p, w);
        for (slot, &idx) in order.iter().enumerate() {
            let arg = ell(w, idx);
            if !amplitude.is_zero() {
                let coeff = amplitude.clone() * G::integer(COS_SIGNS[slot]);
                out.add_term(TrigKind::Cos, Some(arg.clone()), Polynomial::constant(3, coeff));
            }
            let (r, sign) = REFLECTIONS[slot];
            let poly = reflect(&lin, r).to_polynomial().scale(&G::integer(sign));
            out.add_term(TrigKind::Sin, Some(arg), poly);
        }
    }
    out
}

/// `𝔊` for each unit parameter vector; `build_ansatz` is linear, so any
/// ansatz is the corresponding combination of these.
pub fn ansatz_basis() -> Vec<TrigExpr<G>> {
    (0..11).map(|i| build_ansatz(&AnsatzParams::unit(i))).collect()
}

/// `(g(x,y,z), g(y,z,x), g(z,x,y))`.
pub fn cyclic_field(g: &TrigExpr<G>) -> Result<VectorFieldExpr<G>> {
    if g.nvars() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: g.nvars(),
        });
    }
    VectorFieldExpr::new(vec![g.clone(), g.permute(&[1, 2, 0]), g.permute(&[2, 0, 1])])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{icosahedral_generators, klein_group, Mat};

    fn lin(c: [i64; 3]) -> Polynomial<G> {
        Polynomial::linear(&c.map(G::integer))
    }

    #[test]
    fn zero_parameters_give_zero() {
        assert!(build_ansatz(&AnsatzParams::zero()).is_zero());
    }

    #[test]
    fn basis_is_linear() {
        let p = AnsatzParams::first_field();
        let basis = ansatz_basis();
        let combo = basis
            .iter()
            .zip(p.as_slice())
            .fold(TrigExpr::zero(3), |acc, (e, c)| acc + e.scale(c));
        assert_eq!(combo, build_ansatz(&p));
    }

    #[test]
    fn klein_invariance_by_construction() {
        for i in 0..11 {
            let v = cyclic_field(&ansatz_basis()[i]).unwrap();
            for g in klein_group::<G>().elements() {
                assert_eq!(v.conjugate(g).unwrap(), v, "parameter {}", PARAM_NAMES[i]);
            }
        }
    }

    #[test]
    fn tetrahedral_invariance_by_construction() {
        let [alpha, beta, _] = icosahedral_generators();
        let v = cyclic_field(&build_ansatz(&AnsatzParams::second_field())).unwrap();
        assert_eq!(v.conjugate(&alpha).unwrap(), v);
        assert_eq!(v.conjugate(&beta).unwrap(), v);
    }

    #[test]
    fn every_summand_solves_helmholtz() {
        for e in ansatz_basis() {
            assert!(e.helmholtz_residual().is_zero());
        }
    }

    #[test]
    fn doubled_first_field_matches_expanded_sum() {
        let p = AnsatzParams::first_field().scale(&G::integer(2));
        let s = |w: Axis, a: usize, poly: Polynomial<G>| {
            TrigExpr::term(TrigKind::Sin, poly, ell(w, a))
        };
        let phi = G::phi();
        let pi = G::phi_inv();
        let lf = |cx: G, cy: G, cz: G| Polynomial::linear(&[cx, cy, cz]);
        let o = G::integer(1);
        let n = G::integer(-1);
        let zr = G::zero();
        let expected = TrigExpr::term(TrigKind::Sin, lin([0, 0, 2]), LinearForm::axis(3, 1))
            + TrigExpr::term(TrigKind::Sin, lin([0, 2, 0]), LinearForm::axis(3, 2))
            + s(Axis::X, 0, lin([-1, 1, -1]))
            + s(Axis::X, 3, lin([1, -1, -1]))
            + s(Axis::X, 2, lin([1, 1, 1]))
            - s(Axis::X, 1, lin([-1, -1, 1]))
            + s(Axis::Y, 0, lf(phi.clone(), n.clone(), zr.clone()))
            + s(Axis::Y, 2, lf(-phi.clone(), o.clone(), zr.clone()))
            + s(Axis::Y, 1, lf(-phi.clone(), n.clone(), zr.clone()))
            - s(Axis::Y, 3, lf(phi.clone(), o.clone(), zr.clone()))
            + s(Axis::Z, 0, lf(-pi.clone(), zr.clone(), o.clone()))
            + s(Axis::Z, 1, lf(pi.clone(), zr.clone(), o.clone()))
            + s(Axis::Z, 3, lf(pi.clone(), zr.clone(), n.clone()))
            - s(Axis::Z, 2, lf(-pi.clone(), zr.clone(), n.clone()));
        assert_eq!(build_ansatz(&p), expected);
    }

    #[test]
    fn cyclic_field_of_sine() {
        let g = TrigExpr::sin(LinearForm::axis(3, 2));
        let v = cyclic_field(&g).unwrap();
        let expected = VectorFieldExpr::new(vec![
            TrigExpr::sin(LinearForm::axis(3, 2)),
            TrigExpr::sin(LinearForm::axis(3, 0)),
            TrigExpr::sin(LinearForm::axis(3, 1)),
        ])
        .unwrap();
        assert_eq!(v, expected);
        assert!(cyclic_field(&TrigExpr::<G>::zero(2)).is_err());
    }

    #[test]
    fn cyclic_field_commutes_with_beta() {
        let [_, beta, _]: [Mat<G, 3>; 3] = icosahedral_generators();
        let g = build_ansatz(&AnsatzParams::unit(5));
        let v = cyclic_field(&g).unwrap();
        assert_eq!(v.conjugate(&beta).unwrap(), v);
    }
}
