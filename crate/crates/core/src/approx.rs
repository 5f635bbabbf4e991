//! Evolution-algebra approximations of an arbitrary algebra: the quadratic
//! evolution operator, its Jacobian, the form matrix `beta(x)` and the
//! inverse problem of finding a point whose approximation is a given
//! evolution algebra.

use serde::Serialize;

use crate::digraph::Digraph;
use crate::error::{check_dim, Error, Result};
use crate::evolution::EvolutionMatrix;
use crate::exact::{invert, solve_linear, Matrix, Rational, SolutionSet};
use crate::structure::{CubicTensor, LinearFormMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// `beta_pk = sum_i (g_pi,k + g_ip,k) x_i`
    Standard,
    /// `beta_pk = sum_i (g_ki,p + g_ik,p) x_i`
    Transposed,
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Standard => "standard",
            Variant::Transposed => "transposed",
        }
    }
}

/// `F(x)_k = sum_ij g_ij,k x_i x_j`.
pub fn evolution_operator(t: &CubicTensor, x: &[Rational]) -> Result<Vec<Rational>> {
    check_dim(t.dim(), x.len())?;
    let mut out = vec![Rational::zero(); t.dim()];
    for ((i, j, k), g) in t.entries() {
        out[k] += &(g * &x[i] * &x[j]);
    }
    Ok(out)
}

pub fn beta_symbolic(t: &CubicTensor, variant: Variant) -> LinearFormMatrix {
    let mut m = LinearFormMatrix::zero(t.dim());
    for ((a, b, c), g) in t.entries() {
        // Each constant g_ab,c feeds two forms, once per factor position.
        let targets = match variant {
            Variant::Standard => [(a, c, b), (b, c, a)],
            Variant::Transposed => [(c, a, b), (c, b, a)],
        };
        for (p, k, i) in targets {
            m.get_mut(p, k).coeffs[i] += g;
        }
    }
    m
}

/// The approximation `E_x`: row `p` holds the coefficients of `e_p^2`.
pub fn approximate_at(t: &CubicTensor, x: &[Rational], variant: Variant) -> Result<EvolutionMatrix> {
    EvolutionMatrix::new(beta_symbolic(t, variant).specialize(x)?)
}

/// Derivative of `F` at `x`, laid out so that
/// `F(x + h) - F(x) - F(h) = J h`; hence `J[k][p] = beta_pk(x)`.
pub fn jacobian(t: &CubicTensor, x: &[Rational]) -> Result<Matrix> {
    Ok(beta_symbolic(t, Variant::Standard).specialize(x)?.transpose())
}

/// `true` when the support digraph of the forms is acyclic, so every
/// specialization is right nilpotent.
pub fn symbolic_right_nilpotent(m: &LinearFormMatrix) -> bool {
    Digraph::from_fn(m.dim(), |p, k| !m.get(p, k).is_zero()).is_acyclic()
}

/// Homothety `(1/(2c)) I` carrying the Standard approximation of `m` at
/// `(c, ..., c)`, which is `2c m`, back onto `m`.
pub fn equal_point_self_iso(m: &EvolutionMatrix, c: &Rational) -> Result<Matrix> {
    if c.is_zero() {
        return Err(Error::ZeroPoint);
    }
    let scale = (Rational::from(2) * c).recip();
    Ok(Matrix::identity(m.dim()).scale(&scale))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum ExistenceVerdict {
    Solution(Vec<Rational>),
    NoNonzeroSolution,
    NoSolution,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockRank {
    pub rank: usize,
    pub augmented_rank: usize,
}

/// Everything the solver computed for `beta(x) = target`, split into the
/// per-row blocks `Gamma_p x = a_p`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExistenceReport {
    /// Blocks `p` with `Gamma_p` invertible.
    pub invertible_set: Vec<usize>,
    /// `gamma_p[p][k][i] = g_pi,k + g_ip,k`.
    pub gamma_p: Vec<Matrix>,
    pub inverses: Vec<Option<Matrix>>,
    /// `a_p`, row `p` of the target.
    pub targets: Vec<Vec<Rational>>,
    /// `Gamma_p^-1 a_p` for the invertible blocks.
    pub candidates: Vec<Option<Vec<Rational>>>,
    pub block_ranks: Vec<BlockRank>,
    /// All candidates from invertible blocks coincide.
    pub blocks_agree: bool,
    /// Every singular block has `rank Gamma_p = rank (Gamma_p | a_p)`.
    pub ranks_consistent: bool,
    /// Solution set of all `n^2` equations at once.
    pub stacked_solution: SolutionSet,
    pub verdict: ExistenceVerdict,
    /// The two block conditions together predict a different answer than
    /// the stacked system.
    pub conditions_disagree: bool,
}

pub fn existence_solve(t: &CubicTensor, target: &EvolutionMatrix) -> Result<ExistenceReport> {
    let n = t.dim();
    check_dim(n, target.dim())?;
    let forms = beta_symbolic(t, Variant::Standard);
    let gamma_p: Vec<Matrix> = (0..n)
        .map(|p| Matrix::from_fn(n, n, |k, i| forms.get(p, k).coeffs[i].clone()))
        .collect();
    let targets: Vec<Vec<Rational>> = (0..n).map(|p| target.matrix().row(p).to_vec()).collect();

    let inverses: Vec<Option<Matrix>> = gamma_p.iter().map(|g| invert(g).ok()).collect();
    let invertible_set: Vec<usize> = (0..n).filter(|&p| inverses[p].is_some()).collect();
    let candidates: Vec<Option<Vec<Rational>>> = inverses
        .iter()
        .zip(&targets)
        .map(|(inv, a)| inv.as_ref().map(|inv| inv.mul_vec(a)).transpose())
        .collect::<Result<_>>()?;
    let block_ranks: Vec<BlockRank> = gamma_p
        .iter()
        .zip(&targets)
        .map(|(g, a)| {
            Ok(BlockRank {
                rank: g.rank(),
                augmented_rank: g.augment_column(a)?.rank(),
            })
        })
        .collect::<Result<_>>()?;

    let mut present = candidates.iter().flatten();
    let blocks_agree = match present.next() {
        Some(first) => present.all(|c| c == first),
        None => true,
    };
    let ranks_consistent = (0..n)
        .filter(|p| inverses[*p].is_none())
        .all(|p| block_ranks[p].rank == block_ranks[p].augmented_rank);

    let stacked = Matrix::from_fn(n * n, n, |r, i| gamma_p[r / n][(r % n, i)].clone());
    let rhs: Vec<Rational> = targets.iter().flatten().cloned().collect();
    let stacked_solution = solve_linear(&stacked, &rhs)?;
    let verdict = if !stacked_solution.is_consistent() {
        ExistenceVerdict::NoSolution
    } else {
        match stacked_solution.nonzero_member() {
            Some(x) => ExistenceVerdict::Solution(x),
            None => ExistenceVerdict::NoNonzeroSolution,
        }
    };
    let conditions_disagree =
        (blocks_agree && ranks_consistent) != matches!(verdict, ExistenceVerdict::Solution(_));

    Ok(ExistenceReport {
        invertible_set,
        gamma_p,
        inverses,
        targets,
        candidates,
        block_ranks,
        blocks_agree,
        ranks_consistent,
        stacked_solution,
        verdict,
        conditions_disagree,
    })
}
