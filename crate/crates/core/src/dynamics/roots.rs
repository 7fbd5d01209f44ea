//! Sign-change scans with bisection, the function `Υ`, and the limsup probe.

use crate::error::{Error, Result};

/// Width below which a bisection bracket is accepted. Zero means bisecting
/// until the bracket cannot be split in double precision, which is well
/// inside the `1e-10` accuracy the root reports promise.
pub const ROOT_TOLERANCE: f64 = 0.0;
pub const DEFAULT_SCAN_STEP: f64 = 1e-2;

/// Golden ratio as a double, from the correctly rounded `√5`.
pub fn phi() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// `1 − φ cos s + φ⁻¹ cos φs`.
pub fn upsilon_factor(s: f64) -> f64 {
    let p = phi();
    1.0 - p * s.cos() + (p * s).cos() / p
}

/// `Υ(s) = −s√5 (1 − φ cos s + φ⁻¹ cos φs)`.
pub fn upsilon(s: f64) -> f64 {
    -s * 5f64.sqrt() * upsilon_factor(s)
}

/// A root together with the bracket it was refined from. A grid point where
/// the function is exactly zero has a degenerate bracket `(s, s)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Root {
    pub value: f64,
    pub bracket: (f64, f64),
}

/// Scans `[s_min, s_max]` at `scan_step`, then bisects every sign change
/// until its bracket is narrower than `tolerance`. Tangential zeros that do
/// not change sign are not found.
pub fn scan_roots(
    f: impl Fn(f64) -> f64,
    s_min: f64,
    s_max: f64,
    scan_step: f64,
    tolerance: f64,
) -> Result<Vec<Root>> {
    if !(s_min.is_finite() && s_max.is_finite() && s_min < s_max) {
        return Err(Error::InvalidArgument(format!(
            "scan range must satisfy s_min < s_max, got [{s_min}, {s_max}]"
        )));
    }
    if !(scan_step > 0.0 && scan_step.is_finite()) {
        return Err(Error::InvalidArgument(format!("scan step must be positive, got {scan_step}")));
    }
    let n = ((s_max - s_min) / scan_step).ceil() as usize;
    let grid: Vec<f64> = (0..=n)
        .map(|i| if i == n { s_max } else { s_min + i as f64 * scan_step })
        .collect();
    let values: Vec<f64> = grid.iter().map(|&s| f(s)).collect();
    let mut roots = Vec::new();
    for i in 0..grid.len() {
        if values[i] == 0.0 {
            roots.push(Root {
                value: grid[i],
                bracket: (grid[i], grid[i]),
            });
            continue;
        }
        if i + 1 < grid.len() && values[i + 1] != 0.0 && (values[i] < 0.0) != (values[i + 1] < 0.0) {
            roots.push(bisect(&f, grid[i], grid[i + 1], values[i], tolerance));
        }
    }
    Ok(roots)
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, f_lo: f64, tolerance: f64) -> Root {
    let bracket = (lo, hi);
    let lo_negative = f_lo < 0.0;
    while hi - lo > tolerance {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let v = f(mid);
        if v == 0.0 {
            return Root { value: mid, bracket };
        }
        if (v < 0.0) == lo_negative {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Root {
        value: 0.5 * (lo + hi),
        bracket,
    }
}

/// Positive roots of `Υ` in `[s_min, s_max]`. The factor `s` contributes the
/// root at the origin whenever the range contains it.
pub fn upsilon_roots(s_min: f64, s_max: f64, scan_step: f64) -> Result<Vec<Root>> {
    scan_roots(upsilon, s_min, s_max, scan_step, ROOT_TOLERANCE)
}

/// `2√5 φ⁻¹`, the limit superior of `Υ(s)/s`.
pub fn limsup_target() -> f64 {
    2.0 * 5f64.sqrt() / phi()
}

/// `−2√5 φ`, the limit inferior of `Υ(s)/s`.
pub fn liminf_target() -> f64 {
    -2.0 * 5f64.sqrt() * phi()
}

/// Fibonacci numbers with `F_0 = 0`, `F_1 = 1`, exact in `u128` up to `F_186`.
pub fn fibonacci(n: u32) -> Result<u128> {
    let (mut a, mut b) = (0u128, 1u128);
    for _ in 0..n {
        let next = a
            .checked_add(b)
            .ok_or_else(|| Error::InvalidArgument(format!("F_{n} overflows u128")))?;
        a = b;
        b = next;
    }
    Ok(a)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LimsupSample {
    pub n: u32,
    pub s: f64,
    pub ratio: f64,
}

/// Samples `Υ(s)/s` at `s = π F_{3n}`. Since `F_{3n}` is even, `cos s = 1`,
/// while `φ F_{3n}` is close to the odd number `F_{3n+1}`, so `cos φs` is
/// close to `−1`.
pub fn limsup_probe(ns: &[u32]) -> Result<Vec<LimsupSample>> {
    ns.iter()
        .map(|&n| {
            if n == 0 {
                return Err(Error::InvalidArgument("Fibonacci index must be positive".into()));
            }
            let s = std::f64::consts::PI * fibonacci(3 * n)? as f64;
            Ok(LimsupSample {
                n,
                s,
                ratio: upsilon(s) / s,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn first_positive_root() {
        let roots = upsilon_roots(0.5, 10.0, DEFAULT_SCAN_STEP).unwrap();
        assert!((roots[0].value - 5.1625967944).abs() < 1e-9, "{roots:?}");
        assert!(upsilon(roots[0].value).abs() < 1e-8);
    }

    #[test]
    fn origin_is_a_root() {
        assert_eq!(upsilon(0.0), 0.0);
        let roots = upsilon_roots(0.0, 1.0, 0.1).unwrap();
        assert_eq!(roots[0].value, 0.0);
        assert_eq!(roots[0].bracket, (0.0, 0.0));
    }

    #[test]
    fn scan_finds_simple_roots() {
        let roots = scan_roots(f64::sin, 0.5, 10.0, 0.1, 1e-12).unwrap();
        let values: Vec<_> = roots.iter().map(|r| r.value).collect();
        assert_eq!(values.len(), 3);
        for (k, v) in values.iter().enumerate() {
            assert!((v - (k + 1) as f64 * std::f64::consts::PI).abs() < 1e-11);
        }
        assert!(scan_roots(f64::sin, 1.0, 0.0, 0.1, 1e-12).is_err());
        assert!(scan_roots(f64::sin, 0.0, 1.0, 0.0, 1e-12).is_err());
    }

    #[test]
    fn fibonacci_values() {
        assert_eq!(fibonacci(0).unwrap(), 0);
        assert_eq!(fibonacci(9).unwrap(), 34);
        assert_eq!(fibonacci(24).unwrap(), 46368);
        assert!(fibonacci(200).is_err());
    }

    #[test]
    fn limsup_from_below() {
        let target = limsup_target();
        assert!((target - 2.763932).abs() < 1e-6);
        let samples = limsup_probe(&(1..=8).collect::<Vec<_>>()).unwrap();
        for s in &samples {
            assert!(s.ratio <= target + 1e-6, "{s:?}");
        }
        assert!((samples[2].ratio - target).abs() < (samples[1].ratio - target).abs());
        assert!((samples[7].ratio - target).abs() < 0.05);
    }
}
