//! Seeded generators for property checks.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::exactnum::{rat, GoldenNumber, Rational};
use crate::trigexpr::{LinearForm, Polynomial, TrigExpr, VectorFieldExpr};

type G = GoldenNumber;

/// Seed used by every randomized check in the registry.
pub const DEFAULT_SEED: u64 = 0x1C05_A8ED_2024;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n/d` with `|n| ≤ 9`, `1 ≤ d ≤ 5`.
pub fn small_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=5))
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let q = small_rational(rng);
        if q != rat(0, 1) {
            return q;
        }
    }
}

pub fn small_golden(rng: &mut impl Rng) -> G {
    G::new(small_rational(rng), small_rational(rng))
}

/// Sum of up to three random terms `p(x)·{1, sin, cos}(ℓ·x)` with polynomial
/// degree at most two.
pub fn random_trig_expr(rng: &mut impl Rng, nvars: usize) -> TrigExpr<G> {
    let mut e = TrigExpr::zero(nvars);
    for _ in 0..rng.gen_range(1..=3) {
        let mut p = Polynomial::zero(nvars);
        for _ in 0..rng.gen_range(1..=3) {
            let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=1)).collect();
            p.add_term(exps, small_golden(rng));
        }
        let arg = LinearForm::new((0..nvars).map(|_| small_golden(rng)).collect());
        let wave = match rng.gen_range(0..3) {
            0 => TrigExpr::constant(nvars, G::integer(1)),
            1 => TrigExpr::sin(arg),
            _ => TrigExpr::cos(arg),
        };
        e = e + wave.mul_poly(&p);
    }
    e
}

pub fn random_trig_field(rng: &mut impl Rng) -> VectorFieldExpr<G> {
    VectorFieldExpr::new((0..3).map(|_| random_trig_expr(rng, 3)).collect())
        .expect("three components in three variables")
}

/// A rational point of the unit sphere, the inverse stereographic image of
/// a random rational point of the plane.
pub fn rational_unit_vector(rng: &mut impl Rng) -> [Rational; 3] {
    let p = small_rational(rng);
    let q = small_rational(rng);
    let s = p.clone() * &p + q.clone() * &q;
    let den = s.clone() + rat(1, 1);
    [
        rat(2, 1) * p / &den,
        rat(2, 1) * q / &den,
        (s - rat(1, 1)) / den,
    ]
}

/// A nonzero vector with small rational entries.
pub fn nonzero_rational_vector(rng: &mut impl Rng) -> [Rational; 3] {
    loop {
        let v = [small_rational(rng), small_rational(rng), small_rational(rng)];
        if v.iter().any(|x| *x != rat(0, 1)) {
            return v;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::dot;

    #[test]
    fn unit_vectors_have_unit_length() {
        let mut r = rng(1);
        for _ in 0..50 {
            let b = rational_unit_vector(&mut r);
            assert_eq!(dot(&b, &b), rat(1, 1));
        }
    }

    #[test]
    fn same_seed_same_stream() {
        let a = random_trig_field(&mut rng(7));
        let b = random_trig_field(&mut rng(7));
        assert_eq!(a, b);
    }
}
