//! The fifteen unit covectors used as trigonometric arguments: the three
//! coordinate axes and twelve forms `ℓ_{w,a}` built from `φ`.

use std::fmt;

use crate::exactnum::{rat, GoldenNumber};
use crate::trigexpr::LinearForm;

type G = GoldenNumber;

/// Which coordinate carries the coefficient `1/2` in `ℓ_{w,a}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(["x", "y", "z"][self.index()])
    }
}

/// Coefficients of `ℓ_{x,a}`: `(±1/2, ±φ/2, ±1/(2φ))` with the sign flipped
/// on coordinate `a − 1` for `a ∈ {1, 2, 3}`.
fn base_coefficients(a: usize) -> [G; 3] {
    assert!(a < 4, "form index {a} out of range");
    let half = G::rational(rat(1, 2));
    let mut c = [
        half.clone(),
        G::phi() * &half,
        G::phi_inv() * &half,
    ];
    if a > 0 {
        c[a - 1] = -c[a - 1].clone();
    }
    c
}

/// Coefficient vector `j_{w,a}`. The `y` and `z` families are cyclic
/// relabellings of the `x` family: `ℓ_{y,a}(x,y,z) = ℓ_{x,a}(y,z,x)` and
/// `ℓ_{z,a}(x,y,z) = ℓ_{x,a}(z,x,y)`.
pub fn j_vector(w: Axis, a: usize) -> [G; 3] {
    let [c0, c1, c2] = base_coefficients(a);
    match w {
        Axis::X => [c0, c1, c2],
        Axis::Y => [c2, c0, c1],
        Axis::Z => [c1, c2, c0],
    }
}

pub fn ell(w: Axis, a: usize) -> LinearForm<G> {
    LinearForm::new(j_vector(w, a).to_vec())
}

pub fn axis_form(w: Axis) -> LinearForm<G> {
    LinearForm::axis(3, w.index())
}

/// A named entry of the form table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedForm {
    pub name: String,
    pub form: LinearForm<G>,
}

/// The twelve `ℓ_{w,a}` in the order `(x,0) … (z,3)`, then `x`, `y`, `z`.
pub fn linear_forms() -> Vec<NamedForm> {
    let mut out = Vec::with_capacity(15);
    for w in Axis::ALL {
        for a in 0..4 {
            out.push(NamedForm {
                name: format!("l_{w},{a}"),
                form: ell(w, a),
            });
        }
    }
    for w in Axis::ALL {
        out.push(NamedForm {
            name: w.to_string(),
            form: axis_form(w),
        });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::Scalar;
    use num_traits::{One, Zero};

    #[test]
    fn first_form_matches_table() {
        let half = G::rational(rat(1, 2));
        assert_eq!(
            ell(Axis::X, 0).coeffs(),
            &[half.clone(), G::phi() * &half, G::phi_inv() * &half]
        );
    }

    #[test]
    fn cyclic_images_are_consistent() {
        let half = G::rational(rat(1, 2));
        assert_eq!(
            j_vector(Axis::Y, 2),
            [G::phi_inv() * &half, half.clone(), -(G::phi() * &half)]
        );
    }

    #[test]
    fn all_forms_are_unit() {
        for f in linear_forms() {
            assert!(f.form.norm_squared().is_one(), "{}", f.name);
        }
    }

    #[test]
    fn orthogonal_partners() {
        let l = ell(Axis::X, 0);
        assert!(l.dot(&ell(Axis::Z, 2)).is_zero());
        assert!(l.dot(&ell(Axis::Y, 1)).is_zero());
        let frame = [ell(Axis::X, 2), ell(Axis::Z, 1), ell(Axis::Y, 0)];
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(frame[i].dot(&frame[j]).is_one(), i == j);
                assert_eq!(frame[i].dot(&frame[j]).is_zero(), i != j);
            }
        }
    }

    #[test]
    fn no_two_forms_are_parallel() {
        let forms = linear_forms();
        for (i, a) in forms.iter().enumerate() {
            for b in &forms[i + 1..] {
                let d = a.form.dot(&b.form).abs();
                assert!(!d.is_one(), "{} ∥ {}", a.name, b.name);
            }
        }
    }
}
