//! Evolution algebras: algebras with a natural basis `e_1..e_n` in which
//! `e_i e_j = 0` for `i != j` and `e_i e_i = sum_k m[i][k] e_k`.

mod monomial;

pub use monomial::{
    monomial_isomorphism_search, EvenPowerEquation, MonomialSearch, PermutationRefutation,
    Refutation,
};

use std::fmt;

use serde::Serialize;

use crate::algebra::{ChainKind, ChainVerdict, FDAlgebra, Identity};
use crate::digraph::Digraph;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};
use crate::structure::CubicTensor;

/// Natural-basis matrix of an evolution algebra; row `i` holds the
/// coefficients of `e_i^2`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct EvolutionMatrix {
    m: Matrix,
}

impl EvolutionMatrix {
    pub fn new(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimMismatch {
                expected: m.rows(),
                found: m.cols(),
            });
        }
        Ok(EvolutionMatrix { m })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        EvolutionMatrix::new(Matrix::from_ints(rows)).expect("square integer matrix")
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::DimMismatch {
                expected: n,
                found: rows.iter().map(Vec::len).find(|&l| l != n).unwrap_or(n),
            });
        }
        if n == 0 {
            return EvolutionMatrix::new(Matrix::zeros(0, 0));
        }
        EvolutionMatrix::new(Matrix::from_rows(rows))
    }

    pub fn zero(n: usize) -> Self {
        EvolutionMatrix { m: Matrix::zeros(n, n) }
    }

    /// Reads the natural-basis matrix off a tensor, failing if some
    /// `e_i e_j` with `i != j` is nonzero.
    pub fn from_tensor(t: &CubicTensor) -> Result<Self> {
        let alg = FDAlgebra::from(t.clone());
        if !alg.check_identity(Identity::EvolutionNaturalBasis) {
            return Err(Error::NotEvolution);
        }
        let n = t.dim();
        EvolutionMatrix::new(Matrix::from_fn(n, n, |i, k| t.get(i, i, k).clone()))
    }

    pub fn dim(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.m
    }

    pub fn get(&self, i: usize, k: usize) -> &Rational {
        &self.m[(i, k)]
    }

    pub fn to_tensor(&self) -> CubicTensor {
        let n = self.dim();
        let mut t = CubicTensor::zero(n);
        for i in 0..n {
            for k in 0..n {
                t.set(i, i, k, self.m[(i, k)].clone());
            }
        }
        t
    }

    pub fn to_algebra(&self) -> FDAlgebra {
        FDAlgebra::from(self.to_tensor())
    }

    /// `e_i^2` involves `e_k` exactly when `i -> k` is an edge.
    fn digraph(&self) -> Digraph {
        Digraph::from_fn(self.dim(), |i, k| !self.m[(i, k)].is_zero())
    }

    /// Decides whether a simultaneous permutation of rows and columns makes
    /// the matrix strictly upper triangular, i.e. whether the support
    /// digraph is acyclic.
    pub fn triangularizable(&self) -> TriangularizabilityReport {
        match self.digraph().topological_order() {
            Ok(order) => TriangularizabilityReport {
                triangularizable: true,
                permutation: Some(order),
                cycle_witness: None,
            },
            Err(cycle) => TriangularizabilityReport {
                triangularizable: false,
                permutation: None,
                cycle_witness: Some(cycle),
            },
        }
    }

    /// Right nilpotency computed from the chain `E^<k+1> = E^<k> E`.
    pub fn right_nilpotency(&self) -> RightNilpotency {
        match self.to_algebra().power_chain(ChainKind::Right).verdict {
            ChainVerdict::ReachesZero(k) => RightNilpotency::Nilpotent(k),
            ChainVerdict::Stabilizes(_) => RightNilpotency::NotNilpotent,
        }
    }

    pub fn direct_sum(&self, other: &EvolutionMatrix) -> EvolutionMatrix {
        let (n, m) = (self.dim(), other.dim());
        let block = Matrix::from_fn(n + m, n + m, |i, k| match (i < n, k < n) {
            (true, true) => self.m[(i, k)].clone(),
            (false, false) => other.m[(i - n, k - n)].clone(),
            _ => Rational::zero(),
        });
        EvolutionMatrix { m: block }
    }

    /// `dim E^2`, the rank of the matrix since `E^2` is spanned by the rows.
    pub fn dim_square(&self) -> usize {
        self.m.rank()
    }

    /// `out[r][c] = m[order[r]][order[c]]`.
    pub fn permuted(&self, order: &[usize]) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |r, c| self.m[(order[r], order[c])].clone())
    }

    pub fn scale(&self, c: &Rational) -> EvolutionMatrix {
        EvolutionMatrix { m: self.m.scale(c) }
    }
}

impl fmt::Debug for EvolutionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EvolutionMatrix({:?})", self.m)
    }
}

impl fmt::Display for EvolutionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.m, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TriangularizabilityReport {
    pub triangularizable: bool,
    /// New position `r` holds old basis index `permutation[r]`.
    pub permutation: Option<Vec<usize>>,
    /// Basis indices `i_1 -> i_2 -> ... -> i_1` of a support cycle.
    pub cycle_witness: Option<Vec<usize>>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RightNilpotency {
    Nilpotent(usize),
    NotNilpotent,
}

impl RightNilpotency {
    pub fn is_nilpotent(self) -> bool {
        matches!(self, RightNilpotency::Nilpotent(_))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn is_strictly_upper(m: &Matrix) -> bool {
        (0..m.rows()).all(|i| (0..=i).all(|k| m[(i, k)].is_zero()))
    }

    #[test]
    fn to_tensor_examples() {
        assert!(EvolutionMatrix::zero(3).to_tensor().is_zero());
        let e4 = EvolutionMatrix::from_ints(&[&[0, 1], &[0, 0]]).to_tensor();
        assert_eq!(e4.nnz(), 1);
        assert_eq!(e4.get(0, 0, 1), &Rational::from(1));
        let t = EvolutionMatrix::from_ints(&[&[1, 2], &[3, 4]]).to_tensor();
        assert_eq!(t.nnz(), 4);
        assert_eq!(t.get(1, 1, 0), &Rational::from(3));
        assert_eq!(t.get(0, 1, 0), &Rational::zero());
        assert!(FDAlgebra::from(t).check_identity(Identity::EvolutionNaturalBasis));
    }

    #[test]
    fn from_tensor_rejects_off_diagonal_products() {
        let mut t = CubicTensor::zero(2);
        t.set(0, 1, 0, Rational::one());
        assert_eq!(EvolutionMatrix::from_tensor(&t), Err(Error::NotEvolution));
    }

    #[test]
    fn triangularizable_examples() {
        let up = EvolutionMatrix::from_ints(&[&[0, 1, 5], &[0, 0, 2], &[0, 0, 0]]);
        let rep = up.triangularizable();
        assert!(rep.triangularizable);
        assert_eq!(rep.permutation, Some(vec![0, 1, 2]));

        let lower = EvolutionMatrix::from_ints(&[&[0, 0, 0], &[3, 0, 0], &[1, 4, 0]]);
        let rep = lower.triangularizable();
        assert!(is_strictly_upper(&lower.permuted(rep.permutation.as_ref().unwrap())));

        let x2 = q(7, 3);
        let single = EvolutionMatrix::from_rows(vec![
            vec![Rational::zero(), Rational::from(2) * &x2],
            vec![Rational::zero(), Rational::zero()],
        ])
        .unwrap();
        assert!(single.triangularizable().triangularizable);

        let cyc = EvolutionMatrix::from_ints(&[&[0, 2], &[3, 0]]);
        let rep = cyc.triangularizable();
        assert!(!rep.triangularizable);
        assert_eq!(rep.cycle_witness, Some(vec![0, 1]));

        let with_diag = EvolutionMatrix::from_ints(&[&[1, 2], &[3, 0]]);
        let rep = with_diag.triangularizable();
        assert!(!rep.triangularizable);
        let cycle = rep.cycle_witness.unwrap();
        for w in cycle.windows(2) {
            assert!(!with_diag.get(w[0], w[1]).is_zero());
        }
        assert!(!with_diag.get(*cycle.last().unwrap(), cycle[0]).is_zero());
    }

    #[test]
    fn right_nilpotency_examples() {
        assert_eq!(
            EvolutionMatrix::from_ints(&[&[0, 1], &[0, 0]]).right_nilpotency(),
            RightNilpotency::Nilpotent(3)
        );
        assert_eq!(EvolutionMatrix::zero(2).right_nilpotency(), RightNilpotency::Nilpotent(2));
        assert_eq!(
            EvolutionMatrix::from_ints(&[&[1, 2], &[3, 4]]).right_nilpotency(),
            RightNilpotency::NotNilpotent
        );
    }

    #[test]
    fn direct_sum_examples() {
        let s = EvolutionMatrix::from_ints(&[&[1]]).direct_sum(&EvolutionMatrix::from_ints(&[&[2]]));
        assert_eq!(s, EvolutionMatrix::from_ints(&[&[1, 0], &[0, 2]]));
        assert_eq!(EvolutionMatrix::zero(1).direct_sum(&EvolutionMatrix::zero(2)), EvolutionMatrix::zero(3));
        let nil = EvolutionMatrix::from_ints(&[&[0, 1], &[0, 0]]);
        let nil3 = EvolutionMatrix::from_ints(&[&[0, 1, 1], &[0, 0, 1], &[0, 0, 0]]);
        assert!(nil.direct_sum(&nil3).right_nilpotency().is_nilpotent());
    }

    #[test]
    fn dim_square_examples() {
        assert_eq!(EvolutionMatrix::from_ints(&[&[0, 1], &[0, 0]]).dim_square(), 1);
        let e6 = EvolutionMatrix::from_rows(vec![
            vec![Rational::one(), q(2, 1)],
            vec![q(1, 3), Rational::one()],
        ])
        .unwrap();
        assert_eq!(e6.dim_square(), 2);
        assert_eq!(EvolutionMatrix::zero(2).dim_square(), 0);
    }
}
