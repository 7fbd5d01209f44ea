//! Fixed-step classical Runge-Kutta integration of `x' = v(x)`.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::dynamics::compiled::CompiledField;
use crate::error::{Error, Result};

pub const DEFAULT_STEP: f64 = 1e-3;
pub const INTEGRATOR: &str = "rk4";

#[derive(Debug, Clone, PartialEq)]
pub struct OrbitRecord {
    pub initial: Vec<f64>,
    pub step: f64,
    /// `(t, x(t))`, starting with `(0, initial)`.
    pub samples: Vec<(f64, Vec<f64>)>,
    pub integrator: &'static str,
    /// Set when the solution left the finite doubles and the record was cut.
    pub overflow: bool,
}

impl OrbitRecord {
    pub fn endpoint(&self) -> &[f64] {
        &self.samples.last().expect("records hold the initial sample").1
    }

    pub fn final_time(&self) -> f64 {
        self.samples.last().expect("records hold the initial sample").0
    }

    /// Header `t,x,y,z` (or `t,x1,...` beyond three dimensions) and one row
    /// per sample, using the shortest representation that round-trips.
    pub fn to_csv(&self) -> String {
        let n = self.initial.len();
        let names: Vec<String> = if n <= 3 {
            ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect()
        } else {
            (1..=n).map(|i| format!("x{i}")).collect()
        };
        let mut out = format!("t,{}\n", names.join(","));
        for (t, x) in &self.samples {
            write!(out, "{t:?}").expect("writing to a String");
            for v in x {
                write!(out, ",{v:?}").expect("writing to a String");
            }
            out.push('\n');
        }
        out
    }

    pub fn to_json(&self) -> Value {
        json!({
            "initial": self.initial,
            "step": self.step,
            "integrator": self.integrator,
            "overflow": self.overflow,
            "samples": self.samples.iter().map(|(t, x)| json!({"t": t, "x": x})).collect::<Vec<_>>(),
        })
    }
}

/// One classical RK4 step of length `h`.
pub fn rk4_step(f: &CompiledField, x: &[f64], h: f64) -> Vec<f64> {
    let n = x.len();
    let mut k1 = vec![0.0; n];
    let mut k2 = vec![0.0; n];
    let mut k3 = vec![0.0; n];
    let mut k4 = vec![0.0; n];
    let mut tmp = vec![0.0; n];
    f.eval_into(x, &mut k1);
    for i in 0..n {
        tmp[i] = x[i] + 0.5 * h * k1[i];
    }
    f.eval_into(&tmp, &mut k2);
    for i in 0..n {
        tmp[i] = x[i] + 0.5 * h * k2[i];
    }
    f.eval_into(&tmp, &mut k3);
    for i in 0..n {
        tmp[i] = x[i] + h * k3[i];
    }
    f.eval_into(&tmp, &mut k4);
    (0..n)
        .map(|i| x[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]))
        .collect()
}

/// Number of steps needed to reach `t_end` with steps of at most `h`. A ratio
/// within rounding of an integer is taken as that integer, so `t_end = 1`,
/// `h = 1e-3` gives exactly 1000 steps.
pub fn step_count(t_end: f64, h: f64) -> usize {
    let ratio = t_end / h;
    let nearest = ratio.round();
    if (ratio - nearest).abs() <= 1e-9 * nearest.max(1.0) {
        nearest.max(1.0) as usize
    } else {
        ratio.ceil() as usize
    }
}

/// Integrates from `x0` up to `t_end` with step `h`, shortening the final
/// step so the last sample sits exactly at `t_end`.
pub fn rk4_orbit(f: &CompiledField, x0: &[f64], t_end: f64, h: f64) -> Result<OrbitRecord> {
    if !(h > 0.0 && h.is_finite()) {
        return Err(Error::InvalidArgument(format!("step must be positive, got {h}")));
    }
    if !(t_end > 0.0 && t_end.is_finite()) {
        return Err(Error::InvalidArgument(format!("end time must be positive, got {t_end}")));
    }
    f.eval(x0)?;
    let steps = step_count(t_end, h);
    let mut samples = Vec::with_capacity(steps + 1);
    samples.push((0.0, x0.to_vec()));
    let mut x = x0.to_vec();
    let mut overflow = false;
    for i in 1..=steps {
        let t_prev = (i - 1) as f64 * h;
        let t = if i == steps { t_end } else { i as f64 * h };
        let next = rk4_step(f, &x, t - t_prev);
        if next.iter().any(|v| !v.is_finite()) {
            overflow = true;
            break;
        }
        samples.push((t, next.clone()));
        x = next;
    }
    Ok(OrbitRecord {
        initial: x0.to_vec(),
        step: h,
        samples,
        integrator: INTEGRATOR,
        overflow,
    })
}

/// Endpoint-error ratio `e(h) / e(h/2)` against a reference endpoint, and the
/// order `log2` of that ratio.
#[derive(Debug, Clone, PartialEq)]
pub struct ConvergenceEstimate {
    pub coarse_step: f64,
    pub coarse_error: f64,
    pub fine_error: f64,
    pub ratio: f64,
    pub order: f64,
}

pub fn convergence_order(
    f: &CompiledField,
    x0: &[f64],
    t_end: f64,
    h: f64,
    reference_step: f64,
) -> Result<ConvergenceEstimate> {
    let reference = rk4_orbit(f, x0, t_end, reference_step)?;
    let err = |step: f64| -> Result<f64> {
        let r = rk4_orbit(f, x0, t_end, step)?;
        if r.overflow || reference.overflow {
            return Err(Error::NonFinite("orbit overflowed".into()));
        }
        Ok(max_distance(r.endpoint(), reference.endpoint()))
    };
    let coarse_error = err(h)?;
    let fine_error = err(h / 2.0)?;
    let ratio = coarse_error / fine_error;
    Ok(ConvergenceEstimate {
        coarse_step: h,
        coarse_error,
        fine_error,
        ratio,
        order: ratio.log2(),
    })
}

pub fn max_distance(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max)
}
