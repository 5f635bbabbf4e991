use serde::Serialize;

use super::{rref, Matrix, Rational};
use crate::error::{check_dim, Result};

/// Linear subspace of `Q^n` stored by its reduced row-echelon basis.
///
/// The basis is canonical, so two subspaces are equal exactly when their
/// stored bases are equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace::span(ambient, (0..ambient).map(|i| unit(ambient, i)))
            .expect("unit vectors have the ambient length")
    }

    /// Span of `vectors`, each of length `ambient`.
    pub fn span<I>(ambient: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = Vec<Rational>>,
    {
        let rows: Vec<Vec<Rational>> = vectors
            .into_iter()
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        for v in &rows {
            check_dim(ambient, v.len())?;
        }
        if rows.is_empty() {
            return Ok(Subspace::zero(ambient));
        }
        let r = rref(&Matrix::from_rows(rows));
        let basis = (0..r.rank).map(|i| r.reduced.row(i).to_vec()).collect();
        Ok(Subspace { ambient, basis })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Vec<Rational>] {
        &self.basis
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        if v.len() != self.ambient {
            return false;
        }
        if v.iter().all(Rational::is_zero) {
            return true;
        }
        let extended = Subspace::span(
            self.ambient,
            self.basis.iter().cloned().chain(std::iter::once(v.to_vec())),
        )
        .expect("lengths checked");
        extended.dim() == self.dim()
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient == other.ambient && self.basis.iter().all(|v| other.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        check_dim(self.ambient, other.ambient)?;
        Subspace::span(
            self.ambient,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
