//! Seeded random generators for tests, verifiers and benchmarks.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::evolution::EvolutionMatrix;
use crate::exact::{Matrix, Rational};
use crate::structure::CubicTensor;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `n / d` with `|n| <= bound` and `1 <= d <= bound`.
pub fn rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    let n = rng.gen_range(-bound..=bound);
    let d = rng.gen_range(1..=bound.max(1));
    Rational::new(n, d)
}

pub fn nonzero_rational<R: Rng>(rng: &mut R, bound: i64) -> Rational {
    loop {
        let r = rational(rng, bound);
        if !r.is_zero() {
            return r;
        }
    }
}

pub fn point<R: Rng>(rng: &mut R, n: usize, bound: i64) -> Vec<Rational> {
    (0..n).map(|_| rational(rng, bound)).collect()
}

/// Each structure constant is nonzero with probability `density`.
pub fn tensor<R: Rng>(rng: &mut R, n: usize, density: f64) -> CubicTensor {
    let mut t = CubicTensor::zero(n);
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if rng.gen_bool(density) {
                    t.set(i, j, k, nonzero_rational(rng, 5));
                }
            }
        }
    }
    t
}

/// `g_ij,k = -g_ji,k` and `g_ii,k = 0`.
pub fn anticommutative_tensor<R: Rng>(rng: &mut R, n: usize, density: f64) -> CubicTensor {
    let mut t = CubicTensor::zero(n);
    for i in 0..n {
        for j in i + 1..n {
            for k in 0..n {
                if rng.gen_bool(density) {
                    let g = nonzero_rational(rng, 5);
                    t.set(j, i, k, -&g);
                    t.set(i, j, k, g);
                }
            }
        }
    }
    t
}

pub fn evolution<R: Rng>(rng: &mut R, n: usize, density: f64) -> EvolutionMatrix {
    let m = Matrix::from_fn(n, n, |_, _| {
        if rng.gen_bool(density) {
            nonzero_rational(rng, 5)
        } else {
            Rational::zero()
        }
    });
    EvolutionMatrix::new(m).expect("square")
}

pub fn strictly_upper<R: Rng>(rng: &mut R, n: usize, density: f64) -> EvolutionMatrix {
    let m = Matrix::from_fn(n, n, |i, k| {
        if k > i && rng.gen_bool(density) {
            nonzero_rational(rng, 5)
        } else {
            Rational::zero()
        }
    });
    EvolutionMatrix::new(m).expect("square")
}

/// A random invertible matrix, retrying until the determinant is nonzero.
pub fn invertible<R: Rng>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| rational(rng, 4));
        if m.rank() == n {
            return m;
        }
    }
}
