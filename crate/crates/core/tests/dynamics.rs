use beltrami::construct::catalog;
use beltrami::dynamics::orbit::max_distance;
use beltrami::dynamics::*;
use beltrami::exactnum::{GoldenNumber, Scalar};
use beltrami::linalg::icosahedral_group;
use beltrami::trigexpr::VectorFieldExpr;
use beltrami::verify::random;
use rand::Rng;

fn field(name: &str) -> VectorFieldExpr<GoldenNumber> {
    catalog().unwrap().golden(name).unwrap().clone()
}

fn phi() -> f64 {
    GoldenNumber::phi().to_f64()
}

fn first_root() -> f64 {
    upsilon_roots(0.5, 10.0, DEFAULT_SCAN_STEP).unwrap()[0].value
}

#[test]
fn origin_is_a_zero() {
    assert_eq!(eval_field(&field("I"), &[0.0, 0.0, 0.0]).unwrap(), vec![0.0; 3]);
}

#[test]
fn zero_on_the_face_ray() {
    let s0 = 5.1625967944;
    let v = eval_field(&field("I"), &[phi() * s0, s0, 0.0]).unwrap();
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    assert!(norm < 1e-8, "{v:?}");
}

#[test]
fn agrees_with_taylor_polynomial_near_origin() {
    let i = field("I");
    let x = [0.1, 0.1, 0.1];
    let numeric = eval_field(&i, &x).unwrap();
    for (k, p) in i.taylor(11).iter().enumerate() {
        assert!((p.eval_f64(&x) - numeric[k]).abs() < 1e-12);
    }
}

#[test]
fn symmetry_transport() {
    let f = CompiledField::new(&field("I"));
    let group = icosahedral_group();
    let mut rng = random::rng(11);
    for _ in 0..40 {
        let g = &group.elements()[rng.gen_range(0..group.order())];
        let gf: Vec<Vec<f64>> = (0..3)
            .map(|i| (0..3).map(|j| g.get(i, j).to_f64()).collect())
            .collect();
        let p: Vec<f64> = (0..3).map(|_| rng.gen_range(-3.0..3.0)).collect();
        let gp: Vec<f64> = (0..3).map(|i| (0..3).map(|j| gf[i][j] * p[j]).sum()).collect();
        let v = f.eval(&gp).unwrap();
        // g is orthogonal, so g⁻¹ = gᵀ.
        let back: Vec<f64> = (0..3).map(|i| (0..3).map(|j| gf[j][i] * v[j]).sum()).collect();
        assert!(max_distance(&back, &f.eval(&p).unwrap()) < 1e-10);
    }
}

#[test]
fn field_is_collinear_on_symmetry_rays() {
    let f = CompiledField::new(&field("I"));
    for class in LineClass::ALL {
        let d: Vec<f64> = class.representative().iter().map(Scalar::to_f64).collect();
        for k in 1..=20 {
            let s = 0.37 * k as f64;
            let p: Vec<f64> = d.iter().map(|x| s * x).collect();
            let v = f.eval(&p).unwrap();
            let cross = [
                v[1] * p[2] - v[2] * p[1],
                v[2] * p[0] - v[0] * p[2],
                v[0] * p[1] - v[1] * p[0],
            ];
            assert!(cross.iter().all(|c| c.abs() < 1e-8), "{class} s = {s}: {cross:?}");
        }
    }
}

#[test]
fn line_zero_reports() {
    let i = field("I");
    let reports = full_line_zero_map(&i, 20.0, DEFAULT_SCAN_STEP).unwrap();
    assert_eq!(reports.len(), 62);
    let face: Vec<_> = reports.iter().filter(|r| r.class == LineClass::F).collect();
    assert_eq!(face.len(), 12);
    assert!((face[0].roots[0] - 5.1625967944).abs() < 1e-9);
    for r in &reports {
        assert!(r.roots.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(r.roots.len(), r.brackets.len());
    }
}

#[test]
fn face_coefficient_is_upsilon() {
    let c = line_coefficient(&field("I"), &LineClass::F.representative()).unwrap();
    let e = CompiledExpr::new(&c);
    for k in 0..30 {
        let s = 0.41 * k as f64;
        assert!((e.eval(&[s]).unwrap() - upsilon(s)).abs() < 1e-9);
    }
}

#[test]
fn edge_restriction_is_axial() {
    let r = field("I")
        .restrict_to_line(&LineClass::E.representative())
        .unwrap();
    assert!(r[1].is_zero() && r[2].is_zero());
}

#[test]
fn head_vanishes_on_symmetry_rays() {
    let m = field("M");
    for class in LineClass::ALL {
        let r = m.restrict_to_line(&class.representative()).unwrap();
        assert!(r.iter().all(|c| c.is_zero()), "{class}");
    }
}

#[test]
fn second_positive_root() {
    let roots = upsilon_roots(0.5, 20.0, DEFAULT_SCAN_STEP).unwrap();
    let fine = upsilon_roots(0.5, 20.0, 1e-4).unwrap();
    assert!(roots.len() >= 2);
    assert_eq!(roots.len(), fine.len());
    assert!((roots[1].value - fine[1].value).abs() < 1e-10);
    // Golden value from a 1e-4 scan with bisection.
    assert!((roots[1].value - 7.009533219981).abs() < 1e-9);
    assert!(roots[1].value > roots[0].value);
    assert!(upsilon(roots[1].value).abs() < 1e-8);
}

#[test]
fn orbit_endpoint_matches_fine_reference() {
    let f = CompiledField::new(&field("I"));
    let h = 2e-4;
    let coarse = rk4_orbit(&f, &[5.0, 6.0, 7.0], 1.0, h).unwrap();
    let fine = rk4_orbit(&f, &[5.0, 6.0, 7.0], 1.0, h / 100.0).unwrap();
    assert!(max_distance(coarse.endpoint(), fine.endpoint()) < 1e-6);
    // Richardson consistency: the h/2 run sits about 16 times closer.
    let half = rk4_orbit(&f, &[5.0, 6.0, 7.0], 1.0, h / 2.0).unwrap();
    let e1 = max_distance(coarse.endpoint(), fine.endpoint());
    let e2 = max_distance(half.endpoint(), fine.endpoint());
    assert!(e1 / e2 > 12.0 && e1 / e2 < 20.0, "{}", e1 / e2);
}

#[test]
fn default_orbit_has_1001_samples() {
    let f = CompiledField::new(&field("I"));
    let r = rk4_orbit(&f, &[5.0, 6.0, 7.0], 1.0, DEFAULT_STEP).unwrap();
    assert_eq!(r.samples.len(), 1001);
    assert_eq!(r.samples[0], (0.0, vec![5.0, 6.0, 7.0]));
    assert!(r.samples.windows(2).all(|w| w[0].0 < w[1].0));
    assert!(!r.overflow);
}

#[test]
fn orbit_from_line_zero_is_stationary() {
    let f = CompiledField::new(&field("I"));
    let s0 = first_root();
    let x0 = [phi() * s0, s0, 0.0];
    let r = rk4_orbit(&f, &x0, 1.0, DEFAULT_STEP).unwrap();
    for (_, x) in &r.samples {
        assert!(max_distance(x, &x0) < 1e-8);
    }
}

#[test]
fn convergence_order_near_four() {
    let f = CompiledField::new(&field("I"));
    let est = convergence_order(&f, &[5.0, 6.0, 7.0], 1.0, 1e-3, 1e-5).unwrap();
    assert!(est.ratio > 12.0 && est.ratio < 20.0, "{est:?}");
}

#[test]
fn limsup_probe_approaches_target() {
    let samples = limsup_probe(&(1..=8).collect::<Vec<_>>()).unwrap();
    let t = limsup_target();
    assert!((samples[7].ratio - t).abs() < 0.05);
    assert!(samples.iter().all(|s| s.ratio <= t + 1e-6));
}

#[test]
fn zero_search_finds_known_zeros() {
    let f = CompiledField::new(&field("I"));
    let zeros = search_zeros(&f, 6.0, 5).unwrap();
    assert!(zeros.iter().any(|z| z.kind == ZeroKind::Origin));
    assert!(zeros.iter().all(|z| z.residual < 1e-10));
}
