//! Seeded workloads shared by the criterion benches.

use evokit_core::evolution::EvolutionMatrix;
use evokit_core::exact::{Matrix, Rational};
use evokit_core::sample;
use evokit_core::CubicTensor;

pub fn dense_matrix(seed: u64, rows: usize, cols: usize) -> Matrix {
    let mut rng = sample::rng(seed);
    Matrix::from_fn(rows, cols, |_, _| sample::rational(&mut rng, 9))
}

pub fn tensor(seed: u64, n: usize) -> CubicTensor {
    sample::tensor(&mut sample::rng(seed), n, 0.5)
}

pub fn evolution(seed: u64, n: usize) -> EvolutionMatrix {
    sample::evolution(&mut sample::rng(seed), n, 0.6)
}

/// `m` with its basis permuted by `sigma` and rescaled, so a monomial
/// isomorphism is guaranteed to exist.
pub fn monomial_image(m: &EvolutionMatrix, sigma: &[usize], scales: &[Rational]) -> EvolutionMatrix {
    let n = m.dim();
    let mut p = Matrix::zeros(n, n);
    for i in 0..n {
        p[(sigma[i], i)] = scales[i].recip();
    }
    let t = evokit_core::apply_basis_change(&m.to_tensor(), &p).expect("invertible");
    EvolutionMatrix::from_tensor(&t).expect("monomial change keeps evolution type")
}
