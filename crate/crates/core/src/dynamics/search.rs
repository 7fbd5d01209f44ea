//! Grid-seeded Newton search for zeros of a three-dimensional field, with
//! each zero classified by whether it lies on a symmetry ray.

use serde_json::{json, Value};

use crate::dynamics::compiled::CompiledField;
use crate::dynamics::lines::{all_symmetry_rays, LineClass};
use crate::error::{Error, Result};
use crate::exactnum::Scalar;

const NEWTON_ITERATIONS: usize = 60;
const JACOBIAN_STEP: f64 = 1e-6;
const ACCEPT_RESIDUAL: f64 = 1e-10;
const MERGE_DISTANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ZeroKind {
    Origin,
    OnRay(LineClass),
    /// Not on any of the 62 rays.
    Other,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroCandidate {
    pub point: [f64; 3],
    pub residual: f64,
    pub kind: ZeroKind,
}

impl ZeroCandidate {
    pub fn to_json(&self) -> Value {
        let kind = match self.kind {
            ZeroKind::Origin => "origin".to_string(),
            ZeroKind::OnRay(c) => format!("ray {c}"),
            ZeroKind::Other => "off the symmetry rays".to_string(),
        };
        json!({ "point": self.point, "residual": self.residual, "kind": kind })
    }
}

fn norm(v: &[f64]) -> f64 {
    v.iter().map(|x| x * x).sum::<f64>().sqrt()
}

fn solve3(a: [[f64; 3]; 3], b: [f64; 3]) -> Option<[f64; 3]> {
    let det = |m: [[f64; 3]; 3]| {
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    };
    let d = det(a);
    if d.abs() < 1e-300 || !d.is_finite() {
        return None;
    }
    let mut out = [0.0; 3];
    for (k, o) in out.iter_mut().enumerate() {
        let mut m = a;
        for i in 0..3 {
            m[i][k] = b[i];
        }
        *o = det(m) / d;
    }
    Some(out)
}

fn newton(f: &CompiledField, start: [f64; 3]) -> Option<([f64; 3], f64)> {
    let mut x = start;
    let mut fx = [0.0; 3];
    for _ in 0..NEWTON_ITERATIONS {
        f.eval_into(&x, &mut fx);
        let r = norm(&fx);
        if !r.is_finite() {
            return None;
        }
        if r < ACCEPT_RESIDUAL {
            return Some((x, r));
        }
        let mut jac = [[0.0; 3]; 3];
        for j in 0..3 {
            let mut p = x;
            p[j] += JACOBIAN_STEP;
            let mut plus = [0.0; 3];
            f.eval_into(&p, &mut plus);
            p[j] = x[j] - JACOBIAN_STEP;
            let mut minus = [0.0; 3];
            f.eval_into(&p, &mut minus);
            for i in 0..3 {
                jac[i][j] = (plus[i] - minus[i]) / (2.0 * JACOBIAN_STEP);
            }
        }
        let dx = solve3(jac, fx)?;
        for i in 0..3 {
            x[i] -= dx[i];
        }
    }
    f.eval_into(&x, &mut fx);
    let r = norm(&fx);
    (r < ACCEPT_RESIDUAL).then_some((x, r))
}

fn classify(p: &[f64; 3], rays: &[(LineClass, [f64; 3])]) -> ZeroKind {
    let r = norm(p);
    if r < MERGE_DISTANCE {
        return ZeroKind::Origin;
    }
    for (class, d) in rays {
        let dn = norm(d);
        let along = (p[0] * d[0] + p[1] * d[1] + p[2] * d[2]) / dn;
        let off = (r * r - along * along).max(0.0).sqrt();
        if along > 0.0 && off < MERGE_DISTANCE * r.max(1.0) {
            return ZeroKind::OnRay(*class);
        }
    }
    ZeroKind::Other
}

/// Runs Newton's method from every point of a `grid³` lattice covering
/// `[−half_width, half_width]³` and returns the distinct zeros found,
/// sorted by distance from the origin.
pub fn search_zeros(f: &CompiledField, half_width: f64, grid: usize) -> Result<Vec<ZeroCandidate>> {
    if f.dim() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            found: f.dim(),
        });
    }
    if !(half_width > 0.0 && half_width.is_finite()) || grid < 2 {
        return Err(Error::InvalidArgument(
            "search needs a positive half-width and at least two grid points per axis".into(),
        ));
    }
    let rays: Vec<(LineClass, [f64; 3])> = all_symmetry_rays()?
        .into_iter()
        .map(|(c, d)| (c, [d[0].to_f64(), d[1].to_f64(), d[2].to_f64()]))
        .collect();
    let coord = |i: usize| -half_width + 2.0 * half_width * i as f64 / (grid - 1) as f64;
    let mut found: Vec<ZeroCandidate> = Vec::new();
    for i in 0..grid {
        for j in 0..grid {
            for k in 0..grid {
                let Some((p, residual)) = newton(f, [coord(i), coord(j), coord(k)]) else {
                    continue;
                };
                if p.iter().any(|c| c.abs() > 2.0 * half_width) {
                    continue;
                }
                let dup = found.iter().any(|z| {
                    norm(&[z.point[0] - p[0], z.point[1] - p[1], z.point[2] - p[2]]) < MERGE_DISTANCE
                });
                if !dup {
                    found.push(ZeroCandidate {
                        point: p,
                        residual,
                        kind: classify(&p, &rays),
                    });
                }
            }
        }
    }
    found.sort_by(|a, b| norm(&a.point).total_cmp(&norm(&b.point)));
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn three_by_three_solve() {
        let x = solve3([[2.0, 0.0, 1.0], [0.0, 3.0, 0.0], [1.0, 0.0, 1.0]], [3.0, 3.0, 2.0]).unwrap();
        assert!((x[0] - 1.0).abs() < 1e-12 && (x[1] - 1.0).abs() < 1e-12 && (x[2] - 1.0).abs() < 1e-12);
        assert!(solve3([[1.0, 1.0, 0.0], [1.0, 1.0, 0.0], [0.0, 0.0, 1.0]], [1.0, 1.0, 1.0]).is_none());
    }

    #[test]
    fn classification() {
        let rays = vec![(LineClass::E, [1.0, 0.0, 0.0])];
        assert_eq!(classify(&[0.0, 0.0, 0.0], &rays), ZeroKind::Origin);
        assert_eq!(classify(&[2.0, 0.0, 0.0], &rays), ZeroKind::OnRay(LineClass::E));
        assert_eq!(classify(&[-2.0, 0.0, 0.0], &rays), ZeroKind::Other);
        assert_eq!(classify(&[2.0, 0.5, 0.0], &rays), ZeroKind::Other);
    }
}
