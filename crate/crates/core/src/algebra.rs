//! Semantics of a general finite-dimensional algebra given by its
//! structure constants: products, identity checks, the three power series
//! and isomorphism witnesses.

use serde::Serialize;

use crate::error::{check_dim, Result};
use crate::exact::{nullspace, unit, Matrix, Rational, Subspace};
use crate::structure::{apply_basis_change, CubicTensor};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FDAlgebra {
    pub tensor: CubicTensor,
}

impl From<CubicTensor> for FDAlgebra {
    fn from(tensor: CubicTensor) -> Self {
        FDAlgebra { tensor }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Identity {
    Commutative,
    Anticommutative,
    Associative,
    Flexible,
    Leibniz,
    EvolutionNaturalBasis,
}

impl Identity {
    pub const ALL: [Identity; 6] = [
        Identity::Commutative,
        Identity::Anticommutative,
        Identity::Associative,
        Identity::Flexible,
        Identity::Leibniz,
        Identity::EvolutionNaturalBasis,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::Commutative => "commutative",
            Identity::Anticommutative => "anticommutative",
            Identity::Associative => "associative",
            Identity::Flexible => "flexible",
            Identity::Leibniz => "leibniz",
            Identity::EvolutionNaturalBasis => "evolution-natural-basis",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChainKind {
    /// `A^k = sum_{i<k} A^i A^{k-i}`
    Full,
    /// `A^<k+1> = A^<k> A`
    Right,
    /// `A^[k+1] = A^[k] A^[k]`
    Plenary,
}

impl ChainKind {
    pub const ALL: [ChainKind; 3] = [ChainKind::Full, ChainKind::Right, ChainKind::Plenary];

    pub fn name(self) -> &'static str {
        match self {
            ChainKind::Full => "full",
            ChainKind::Right => "right",
            ChainKind::Plenary => "plenary",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum ChainVerdict {
    /// The smallest `k` with a zero `k`-th term.
    ReachesZero(usize),
    /// The chain becomes constant at a nonzero subspace of this dimension.
    Stabilizes(usize),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PowerChain {
    pub kind: ChainKind,
    /// Terms `k = 1, 2, ...` up to the terminal one (the zero subspace, or
    /// the first term of the constant tail).
    pub subspaces: Vec<Subspace>,
    pub verdict: ChainVerdict,
}

impl PowerChain {
    pub fn dims(&self) -> Vec<usize> {
        self.subspaces.iter().map(Subspace::dim).collect()
    }
}

impl FDAlgebra {
    pub fn dim(&self) -> usize {
        self.tensor.dim()
    }

    /// Bilinear product: `(uv)_k = sum_{ij} gamma_{ij,k} u_i v_j`.
    pub fn multiply(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        let n = self.dim();
        check_dim(n, u.len())?;
        check_dim(n, v.len())?;
        let mut out = vec![Rational::zero(); n];
        for ((i, j, k), g) in self.tensor.entries() {
            if u[i].is_zero() || v[j].is_zero() {
                continue;
            }
            out[k] += g * &u[i] * &v[j];
        }
        Ok(out)
    }

    fn basis_product(&self, i: usize, j: usize) -> Vec<Rational> {
        self.tensor.product(i, j)
    }

    fn mul(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        self.multiply(u, v).expect("operands have the algebra dimension")
    }

    /// Checks `which` on all basis pairs or triples; multilinearity makes
    /// this a complete test.
    pub fn check_identity(&self, which: Identity) -> bool {
        let n = self.dim();
        let t = &self.tensor;
        let triples =
            || (0..n).flat_map(move |i| (0..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))));
        match which {
            Identity::Commutative => t
                .entries()
                .all(|((i, j, k), g)| t.get(j, i, k) == g),
            Identity::Anticommutative => t
                .entries()
                .all(|((i, j, k), g)| *t.get(j, i, k) == -g),
            Identity::EvolutionNaturalBasis => t.entries().all(|((i, j, _), _)| i == j),
            Identity::Associative => triples().all(|(i, j, k)| {
                let e = |a| unit(n, a);
                let lhs = self.mul(&self.basis_product(i, j), &e(k));
                let rhs = self.mul(&e(i), &self.basis_product(j, k));
                lhs == rhs
            }),
            // Linearised (xy)x = x(yx): (xy)z + (zy)x = x(yz) + z(yx).
            Identity::Flexible => triples().all(|(i, j, k)| {
                let e = |a| unit(n, a);
                let lhs: Vec<Rational> = add(
                    &self.mul(&self.basis_product(i, j), &e(k)),
                    &self.mul(&self.basis_product(k, j), &e(i)),
                );
                let rhs: Vec<Rational> = add(
                    &self.mul(&e(i), &self.basis_product(j, k)),
                    &self.mul(&e(k), &self.basis_product(j, i)),
                );
                lhs == rhs
            }),
            // [x,[y,z]] = [[x,y],z] - [[x,z],y]
            Identity::Leibniz => triples().all(|(i, j, k)| {
                let e = |a| unit(n, a);
                let lhs = self.mul(&e(i), &self.basis_product(j, k));
                let rhs = sub(
                    &self.mul(&self.basis_product(i, j), &e(k)),
                    &self.mul(&self.basis_product(i, k), &e(j)),
                );
                lhs == rhs
            }),
        }
    }

    /// `span { b c : b in basis(u), c in basis(v) }`.
    pub fn subspace_product(&self, u: &Subspace, v: &Subspace) -> Result<Subspace> {
        let n = self.dim();
        check_dim(n, u.ambient())?;
        check_dim(n, v.ambient())?;
        let products = u
            .basis()
            .iter()
            .flat_map(|b| v.basis().iter().map(move |c| (b, c)))
            .map(|(b, c)| self.mul(b, c));
        Subspace::span(n, products)
    }

    fn product_of(&self, u: &Subspace, v: &Subspace) -> Subspace {
        self.subspace_product(u, v).expect("same ambient space")
    }

    pub fn power_chain(&self, kind: ChainKind) -> PowerChain {
        match kind {
            ChainKind::Right => self.recursive_chain(kind, |alg, prev, whole| alg.product_of(prev, whole)),
            ChainKind::Plenary => self.recursive_chain(kind, |alg, prev, _| alg.product_of(prev, prev)),
            ChainKind::Full => self.full_chain(),
        }
    }

    /// Chains of the form `S_{k+1} = step(S_k)`, which are monotone, so the
    /// first repeat means the chain is constant from then on.
    fn recursive_chain(
        &self,
        kind: ChainKind,
        step: impl Fn(&FDAlgebra, &Subspace, &Subspace) -> Subspace,
    ) -> PowerChain {
        let whole = Subspace::full(self.dim());
        let mut subspaces = vec![whole.clone()];
        loop {
            let last = subspaces.last().expect("chain is nonempty");
            if last.is_zero() {
                let k = subspaces.len();
                return PowerChain {
                    kind,
                    subspaces,
                    verdict: ChainVerdict::ReachesZero(k),
                };
            }
            let next = step(self, last, &whole);
            if next == *last {
                let d = next.dim();
                return PowerChain {
                    kind,
                    subspaces,
                    verdict: ChainVerdict::Stabilizes(d),
                };
            }
            subspaces.push(next);
        }
    }

    /// `A^k = sum_{i=1}^{k-1} A^i A^{k-i}`, restricted to `i <= k/2` for
    /// commutative algebras.
    ///
    /// Once `A^m = A^{m+1} = ... = A^{2m}` every later term equals `A^m`, so
    /// that window is the stopping rule for a nonzero tail.
    fn full_chain(&self) -> PowerChain {
        let n = self.dim();
        let commutative = self.check_identity(Identity::Commutative);
        // terms[k-1] = A^k
        let mut terms = vec![Subspace::full(n)];
        let mut run_start = 1usize;
        loop {
            let k = terms.len();
            if terms[k - 1].is_zero() {
                return PowerChain {
                    kind: ChainKind::Full,
                    subspaces: terms,
                    verdict: ChainVerdict::ReachesZero(k),
                };
            }
            if k >= 2 * run_start && k > run_start {
                let d = terms[k - 1].dim();
                terms.truncate(run_start);
                return PowerChain {
                    kind: ChainKind::Full,
                    subspaces: terms,
                    verdict: ChainVerdict::Stabilizes(d),
                };
            }
            let next_k = k + 1;
            let upper = if commutative { next_k / 2 } else { next_k - 1 };
            let mut acc = Subspace::zero(n);
            for i in 1..=upper {
                let prod = self.product_of(&terms[i - 1], &terms[next_k - i - 1]);
                acc = acc.sum(&prod).expect("same ambient space");
            }
            if acc != terms[k - 1] {
                run_start = next_k;
            }
            terms.push(acc);
        }
    }

    /// `L^1 = L`, `L^{k+1} = [L^k, L]`; the same recurrence as the right
    /// chain.
    pub fn lower_central_series(&self) -> PowerChain {
        self.power_chain(ChainKind::Right)
    }

    /// `{x : x A = 0}`
    pub fn left_annihilator(&self) -> Subspace {
        self.annihilator(true)
    }

    /// `{x : A x = 0}`
    pub fn right_annihilator(&self) -> Subspace {
        self.annihilator(false)
    }

    fn annihilator(&self, left: bool) -> Subspace {
        let n = self.dim();
        // Rows are indexed by (other basis index j, output k); columns by x_i.
        let m = Matrix::from_fn(n * n, n, |row, i| {
            let (j, k) = (row / n, row % n);
            if left {
                self.tensor.get(i, j, k).clone()
            } else {
                self.tensor.get(j, i, k).clone()
            }
        });
        Subspace::span(n, nullspace(&m)).expect("nullspace vectors have length n")
    }

    /// Isomorphism invariants used to tell catalog entries apart.
    pub fn fingerprint(&self) -> Fingerprint {
        Fingerprint {
            dim: self.dim(),
            right_chain: self.power_chain(ChainKind::Right).dims(),
            full_chain: self.power_chain(ChainKind::Full).dims(),
            dim_square: self.product_of(&Subspace::full(self.dim()), &Subspace::full(self.dim())).dim(),
            left_annihilator: self.left_annihilator().dim(),
            right_annihilator: self.right_annihilator().dim(),
            commutative: self.check_identity(Identity::Commutative),
            anticommutative: self.check_identity(Identity::Anticommutative),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Fingerprint {
    pub dim: usize,
    pub right_chain: Vec<usize>,
    pub full_chain: Vec<usize>,
    pub dim_square: usize,
    pub left_annihilator: usize,
    pub right_annihilator: usize,
    pub commutative: bool,
    pub anticommutative: bool,
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// True iff rewriting `a` in the basis given by the rows of `p` yields
/// exactly the structure constants of `b`.
pub fn verify_isomorphism_witness(a: &FDAlgebra, b: &FDAlgebra, p: &Matrix) -> Result<bool> {
    check_dim(a.dim(), b.dim())?;
    Ok(apply_basis_change(&a.tensor, p)? == b.tensor)
}
