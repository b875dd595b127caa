#![allow(dead_code)]

use num_rational::BigRational;
use quadorder_core::{exact_rational, ExactRoot, Quadratic, RootSelector};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Integer-coefficient quadratic with two real roots, built from a scaled
/// product `k·(t − p/m)(t − q/m)` with occasional shared or repeated roots.
pub fn int_quadratic<R: Rng>(rng: &mut R, span: i64) -> Quadratic<f64> {
    loop {
        let a = rng.gen_range(-span..=span);
        let b = rng.gen_range(-span..=span);
        let c = rng.gen_range(-span..=span);
        if a == 0 || b * b - 4 * a * c < 0 {
            continue;
        }
        return Quadratic::new(a as f64, b as f64, c as f64);
    }
}

/// Quadratic with roots near `center`, from a random pair of perturbed roots
/// and a random leading coefficient, rounded to double.
pub fn near_quadratic<R: Rng>(rng: &mut R, center: f64, spread: f64) -> Quadratic<f64> {
    let r1 = center + spread * rng.gen_range(-1.0..1.0);
    let r2 = center + spread * rng.gen_range(-1.0..1.0);
    let a: f64 = rng.gen_range(0.25..4.0) * if rng.gen::<bool>() { 1.0 } else { -1.0 };
    Quadratic::new(a, -a * (r1 + r2), a * r1 * r2)
}

/// Pair generator mixing small-integer pairs with crowded pairs whose roots
/// interleave at tiny separations.
pub fn random_pair<R: Rng>(rng: &mut R) -> (Quadratic<f64>, Quadratic<f64>) {
    loop {
        let pair = match rng.gen_range(0..3) {
            0 => (int_quadratic(rng, 12), int_quadratic(rng, 12)),
            1 => {
                let c = rng.gen_range(-1.0..1.0);
                let s = 2f64.powi(-rng.gen_range(4..40));
                (near_quadratic(rng, c, s), near_quadratic(rng, c, s))
            }
            _ => {
                let q = int_quadratic(rng, 40);
                let e = 2f64.powi(-rng.gen_range(10..30));
                let shifted = Quadratic::new(*q.a(), *q.b() + e, *q.c());
                (q, shifted)
            }
        };
        let real = |q: &Quadratic<f64>| ExactRoot::from_quadratic(q, RootSelector::Lo).is_ok();
        if real(&pair.0) && real(&pair.1) {
            return pair;
        }
    }
}

pub fn exact(q: &Quadratic<f64>) -> Quadratic<BigRational> {
    q.map(|&x| exact_rational(x))
}
