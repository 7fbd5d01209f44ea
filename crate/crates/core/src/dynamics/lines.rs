//! The 62 symmetry rays of the icosahedral group and the zeros of a
//! symmetric field along them.
//!
//! A field invariant under a rotation group is, on the axis of any rotation,
//! parallel to that axis. Along the ray `s·d` it therefore reads `C(s)·d` for
//! a scalar `C`, and its zeros on the ray are the zeros of `C`.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::dynamics::compiled::CompiledExpr;
use crate::dynamics::roots::{scan_roots, Root, ROOT_TOLERANCE};
use crate::error::{Error, Result};
use crate::exactnum::{GoldenNumber, Scalar};
use crate::linalg::{canonical_ray, icosahedral_group, Vec3G};
use crate::trigexpr::{TrigExpr, VectorFieldExpr};

type G = GoldenNumber;

/// Orbit classes of symmetry rays, named after the dodecahedron: 12 face
/// centres, 20 vertices and 30 edge midpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LineClass {
    F,
    V,
    E,
}

impl LineClass {
    pub const ALL: [LineClass; 3] = [LineClass::F, LineClass::V, LineClass::E];

    pub fn representative(self) -> Vec3G {
        let g = G::integer;
        match self {
            LineClass::F => [G::phi(), g(1), g(0)],
            LineClass::V => [g(1), g(1), g(1)],
            LineClass::E => [g(1), g(0), g(0)],
        }
    }

    pub fn orbit_size(self) -> usize {
        match self {
            LineClass::F => 12,
            LineClass::V => 20,
            LineClass::E => 30,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            LineClass::F => "F",
            LineClass::V => "V",
            LineClass::E => "E",
        }
    }
}

impl fmt::Display for LineClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LineClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "F" | "f" => Ok(LineClass::F),
            "V" | "v" => Ok(LineClass::V),
            "E" | "e" => Ok(LineClass::E),
            _ => Err(Error::Parse {
                what: "line class (F, V or E)",
                input: s.to_string(),
            }),
        }
    }
}

/// The images `g·d` of the class representative, one per distinct ray, in
/// the order of their canonical rays. Every image has the length of the
/// representative, so one parametrisation serves the whole orbit.
pub fn symmetry_rays(class: LineClass) -> Result<Vec<Vec3G>> {
    let rep = class.representative();
    let mut seen = std::collections::BTreeMap::new();
    for g in icosahedral_group().elements() {
        let image = g.apply(&rep);
        seen.entry(canonical_ray(&image)?).or_insert(image);
    }
    Ok(seen.into_values().collect())
}

/// All 62 rays with their classes.
pub fn all_symmetry_rays() -> Result<Vec<(LineClass, Vec3G)>> {
    let mut out = Vec::new();
    for class in LineClass::ALL {
        out.extend(symmetry_rays(class)?.into_iter().map(|d| (class, d)));
    }
    Ok(out)
}

/// `C` with `v(s·d) = C(s)·d`, computed exactly. Fails if the restricted
/// field is not collinear with `d`.
pub fn line_coefficient(v: &VectorFieldExpr<G>, direction: &Vec3G) -> Result<TrigExpr<G>> {
    let restricted = v.restrict_to_line(direction)?;
    let k = direction
        .iter()
        .position(|x| !x.is_zero())
        .ok_or(Error::ZeroVector)?;
    let inv = direction[k].checked_inv().ok_or(Error::ZeroVector)?;
    let c = restricted[k].scale(&inv);
    for (r, d) in restricted.iter().zip(direction) {
        if *r != c.scale(d) {
            return Err(Error::Verification {
                entry: "line restriction".into(),
                predicate: format!("field collinear with {}", direction_label(direction)),
            });
        }
    }
    Ok(c)
}

fn direction_label(d: &Vec3G) -> String {
    format!("({}, {}, {})", d[0], d[1], d[2])
}

#[derive(Debug, Clone, PartialEq)]
pub struct LineZeroReport {
    pub class: LineClass,
    pub direction: Vec3G,
    /// Positive roots of `C`, ascending.
    pub roots: Vec<f64>,
    pub brackets: Vec<(f64, f64)>,
}

impl LineZeroReport {
    pub fn to_json(&self) -> Value {
        json!({
            "class": self.class.name(),
            "direction": self.direction.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            "direction_f64": self.direction.iter().map(Scalar::to_f64).collect::<Vec<_>>(),
            "roots": self.roots,
            "brackets": self.brackets.iter().map(|(a, b)| [a, b]).collect::<Vec<_>>(),
        })
    }
}

/// Positive zeros in `(0, s_max]` of the line coefficient of `v` along the
/// class representative.
pub fn representative_roots(
    v: &VectorFieldExpr<G>,
    class: LineClass,
    s_max: f64,
    scan_step: f64,
) -> Result<Vec<Root>> {
    let c = CompiledExpr::new(&line_coefficient(v, &class.representative())?);
    let roots = scan_roots(|s| c.eval_unchecked(&[s]), 0.0, s_max, scan_step, ROOT_TOLERANCE)?;
    Ok(roots.into_iter().filter(|r| r.value > 0.0).collect())
}

/// One report per ray of `class`. Only the representative is solved; the
/// symmetry `v(g·x) = g·v(x)` carries its roots to the other rays.
pub fn line_zero_map(
    v: &VectorFieldExpr<G>,
    class: LineClass,
    s_max: f64,
    scan_step: f64,
) -> Result<Vec<LineZeroReport>> {
    let roots = representative_roots(v, class, s_max, scan_step)?;
    Ok(symmetry_rays(class)?
        .into_iter()
        .map(|direction| LineZeroReport {
            class,
            direction,
            roots: roots.iter().map(|r| r.value).collect(),
            brackets: roots.iter().map(|r| r.bracket).collect(),
        })
        .collect())
}

/// Reports for all 62 rays.
pub fn full_line_zero_map(v: &VectorFieldExpr<G>, s_max: f64, scan_step: f64) -> Result<Vec<LineZeroReport>> {
    let mut out = Vec::new();
    for class in LineClass::ALL {
        out.extend(line_zero_map(v, class, s_max, scan_step)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dot;

    #[test]
    fn ray_counts() {
        for class in LineClass::ALL {
            let rays = symmetry_rays(class).unwrap();
            assert_eq!(rays.len(), class.orbit_size());
            let len = dot(&class.representative(), &class.representative());
            assert!(rays.iter().all(|d| dot(d, d) == len));
        }
        assert_eq!(all_symmetry_rays().unwrap().len(), 62);
    }

    #[test]
    fn class_names_round_trip() {
        for class in LineClass::ALL {
            assert_eq!(class.name().parse::<LineClass>().unwrap(), class);
        }
        assert!("X".parse::<LineClass>().is_err());
    }
}
