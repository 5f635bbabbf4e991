//! Search for isomorphisms `phi(e_i) = t_i f_sigma(i)` between evolution
//! algebras given by natural-basis matrices.
//!
//! For a fixed permutation `sigma` put `c[i][k] = b[sigma i][sigma k]`.
//! Then `phi` is a homomorphism iff `t_i^2 c[i][k] = a[i][k] t_k` for all
//! `i, k`, so the supports of `a` and `c` must agree and every edge
//! `i -> k` of the support digraph fixes `t_k = rho[i][k] t_i^2` with
//! `rho = c / a`. Along a spanning tree of each connected component every
//! scale becomes `t_v = c_v s^(2^l_v)` for one free scale `s`; the
//! remaining edges turn into binomials `s^m = r`. Square roots met on the
//! way are branched over both signs, so a refutation on every branch is a
//! refutation over the reals.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use super::EvolutionMatrix;
use crate::algebra::verify_isomorphism_witness;
use crate::error::{Error, Result};
use crate::exact::{Matrix, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum MonomialSearch {
    /// `matrix` satisfies `verify_isomorphism_witness(a, b, matrix)`;
    /// `phi(e_i) = scales[i] f_permutation[i]`.
    Witness {
        permutation: Vec<usize>,
        scales: Vec<Rational>,
        matrix: Matrix,
    },
    /// Some permutation could not be decided over the reals, and none
    /// admits rational scales.
    NoneOverRationals,
    /// Every permutation is impossible even with real scales.
    NoneOverReals { refutations: Vec<PermutationRefutation> },
}

impl MonomialSearch {
    pub fn witness(&self) -> Option<&Matrix> {
        match self {
            MonomialSearch::Witness { matrix, .. } => Some(matrix),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationRefutation {
    pub permutation: Vec<usize>,
    pub reason: Refutation,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Refutation {
    /// `a[row][col]` and `c[row][col]` are not both zero or both nonzero.
    SupportMismatch { row: usize, col: usize },
    /// An even power of a real scale would have to be negative.
    EvenPower(EvenPowerEquation),
    /// The relation coming from `a[row][col]` contradicts the others.
    Inconsistent { row: usize, col: usize },
}

/// `t_lhs^lhs_power = coeff * t_rhs^rhs_power` (or `= coeff` when `rhs`
/// is absent), with both powers even and `coeff < 0`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenPowerEquation {
    pub lhs: usize,
    pub lhs_power: u32,
    pub coeff: Rational,
    pub rhs: Option<(usize, u32)>,
}

impl fmt::Display for EvenPowerEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "t{}^{} = {}", self.lhs + 1, self.lhs_power, self.coeff)?;
        if let Some((v, p)) = self.rhs {
            write!(f, "*t{}^{}", v + 1, p)?;
        }
        Ok(())
    }
}

impl fmt::Display for Refutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Refutation::SupportMismatch { row, col } => {
                write!(f, "support differs at ({}, {})", row + 1, col + 1)
            }
            Refutation::EvenPower(eq) => write!(f, "{eq} has no real solution"),
            Refutation::Inconsistent { row, col } => {
                write!(f, "relation from ({}, {}) is inconsistent", row + 1, col + 1)
            }
        }
    }
}

enum Outcome {
    Solved(Vec<(usize, Rational)>),
    Refuted(Refutation),
    Undecided,
}

/// Tries every permutation in lexicographic order and returns the first
/// monomial isomorphism found.
pub fn monomial_isomorphism_search(a: &EvolutionMatrix, b: &EvolutionMatrix) -> Result<MonomialSearch> {
    let n = a.dim();
    if b.dim() != n {
        return Err(Error::DimMismatch {
            expected: n,
            found: b.dim(),
        });
    }
    let (alg_a, alg_b) = (a.to_algebra(), b.to_algebra());
    let mut refutations = Vec::new();
    let mut undecided = false;
    for sigma in (0..n).permutations(n) {
        match solve_permutation(a.matrix(), b.matrix(), &sigma) {
            Outcome::Solved(assign) => {
                let mut scales = vec![Rational::one(); n];
                for (v, t) in assign {
                    scales[v] = t;
                }
                let mut p = Matrix::zeros(n, n);
                for i in 0..n {
                    p[(sigma[i], i)] = scales[i].recip();
                }
                if verify_isomorphism_witness(&alg_a, &alg_b, &p)? {
                    return Ok(MonomialSearch::Witness {
                        permutation: sigma,
                        scales,
                        matrix: p,
                    });
                }
                debug_assert!(false, "propagated scales failed verification");
                undecided = true;
            }
            Outcome::Refuted(reason) => refutations.push(PermutationRefutation {
                permutation: sigma,
                reason,
            }),
            Outcome::Undecided => undecided = true,
        }
    }
    Ok(if undecided {
        MonomialSearch::NoneOverRationals
    } else {
        MonomialSearch::NoneOverReals { refutations }
    })
}

struct Problem {
    n: usize,
    /// `rho[i][k] = c[i][k] / a[i][k]` on the support, `None` elsewhere.
    rho: Vec<Vec<Option<Rational>>>,
}

impl Problem {
    fn edge(&self, i: usize, k: usize) -> Option<&Rational> {
        self.rho[i][k].as_ref()
    }

    fn linked(&self, i: usize, k: usize) -> bool {
        i != k && (self.rho[i][k].is_some() || self.rho[k][i].is_some())
    }
}

fn solve_permutation(a: &Matrix, b: &Matrix, sigma: &[usize]) -> Outcome {
    let n = a.rows();
    let mut rho = vec![vec![None; n]; n];
    for i in 0..n {
        for k in 0..n {
            let (x, c) = (&a[(i, k)], &b[(sigma[i], sigma[k])]);
            match (x.is_zero(), c.is_zero()) {
                (true, true) => {}
                (false, false) => rho[i][k] = Some(c / x),
                _ => return Outcome::Refuted(Refutation::SupportMismatch { row: i, col: k }),
            }
        }
    }
    let prob = Problem { n, rho };

    // Two edges into the same target: rho_ik t_i^2 = rho_jk t_j^2.
    for k in 0..n {
        let sources: Vec<usize> = (0..n).filter(|&i| prob.edge(i, k).is_some()).collect();
        for (x, &i) in sources.iter().enumerate() {
            for &j in &sources[x + 1..] {
                let ratio = prob.edge(j, k).unwrap() / prob.edge(i, k).unwrap();
                if ratio.is_negative() {
                    return Outcome::Refuted(Refutation::EvenPower(EvenPowerEquation {
                        lhs: i,
                        lhs_power: 2,
                        coeff: ratio,
                        rhs: Some((j, 2)),
                    }));
                }
            }
        }
    }

    let mut seen = vec![false; n];
    let mut assign = Vec::new();
    let mut undecided = false;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let comp = component(&prob, start, &mut seen);
        match solve_component(&prob, &comp) {
            Outcome::Solved(vals) => assign.extend(vals),
            Outcome::Refuted(r) => return Outcome::Refuted(r),
            Outcome::Undecided => undecided = true,
        }
    }
    if undecided {
        Outcome::Undecided
    } else {
        Outcome::Solved(assign)
    }
}

fn component(prob: &Problem, start: usize, seen: &mut [bool]) -> Vec<usize> {
    let mut out = vec![start];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        for w in 0..prob.n {
            if !seen[w] && prob.linked(u, w) {
                seen[w] = true;
                out.push(w);
                queue.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}

#[derive(Clone, Copy)]
enum Link {
    /// Edge `parent -> v`: `t_v = rho t_parent^2`.
    Forward { parent: usize },
    /// Edge `v -> parent`: `t_parent = rho t_v^2`.
    Backward { parent: usize },
}

struct Tree {
    root: usize,
    /// Non-root nodes in traversal order.
    order: Vec<(usize, Link)>,
    /// `t_v = c_v s^exp[v]`.
    exp: Vec<u32>,
    /// Support edges of the component not used by the tree.
    extra: Vec<(usize, usize)>,
}

fn spanning_tree(prob: &Problem, comp: &[usize]) -> Tree {
    let n = prob.n;
    let mut level = vec![0i64; n];
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut tree_adj = vec![Vec::new(); n];
    let mut seen = vec![false; n];
    seen[comp[0]] = true;
    let mut queue = VecDeque::from([comp[0]]);
    while let Some(u) = queue.pop_front() {
        for &w in comp {
            if seen[w] || !prob.linked(u, w) {
                continue;
            }
            seen[w] = true;
            if prob.edge(u, w).is_some() {
                level[w] = level[u] + 1;
                used.insert((u, w));
            } else {
                level[w] = level[u] - 1;
                used.insert((w, u));
            }
            tree_adj[u].push(w);
            tree_adj[w].push(u);
            queue.push_back(w);
        }
    }

    // Reroot at the lowest level so that every exponent is a power of two.
    let root = *comp.iter().min_by_key(|&&v| (level[v], v)).unwrap();
    let base = level[root];
    let mut exp = vec![0u32; n];
    for &v in comp {
        exp[v] = 1u32 << (level[v] - base);
    }
    for adj in &mut tree_adj {
        adj.sort_unstable();
    }
    let mut order = Vec::new();
    let mut seen = vec![false; n];
    seen[root] = true;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        for &w in &tree_adj[u] {
            if seen[w] {
                continue;
            }
            seen[w] = true;
            let link = if used.contains(&(u, w)) {
                Link::Forward { parent: u }
            } else {
                Link::Backward { parent: u }
            };
            order.push((w, link));
            queue.push_back(w);
        }
    }

    let extra = comp
        .iter()
        .flat_map(|&i| comp.iter().map(move |&k| (i, k)))
        .filter(|&(i, k)| prob.edge(i, k).is_some() && !used.contains(&(i, k)))
        .collect();
    Tree {
        root,
        order,
        exp,
        extra,
    }
}

fn solve_component(prob: &Problem, comp: &[usize]) -> Outcome {
    let tree = spanning_tree(prob, comp);
    let mut coeff = vec![Rational::zero(); prob.n];
    coeff[tree.root] = Rational::one();
    branch(prob, comp, &tree, 0, &mut coeff)
}

fn branch(prob: &Problem, comp: &[usize], tree: &Tree, step: usize, coeff: &mut Vec<Rational>) -> Outcome {
    let Some(&(v, link)) = tree.order.get(step) else {
        return close(prob, comp, tree, coeff);
    };
    match link {
        Link::Forward { parent } => {
            let rho = prob.edge(parent, v).unwrap();
            coeff[v] = rho * &coeff[parent] * &coeff[parent];
            branch(prob, comp, tree, step + 1, coeff)
        }
        Link::Backward { parent } => {
            let rho = prob.edge(v, parent).unwrap();
            let square = &coeff[parent] / rho;
            if square.is_negative() {
                return Outcome::Refuted(Refutation::EvenPower(EvenPowerEquation {
                    lhs: v,
                    lhs_power: 2,
                    coeff: square,
                    rhs: Some((tree.root, tree.exp[parent])),
                }));
            }
            let Some(root) = square.sqrt_exact() else {
                return Outcome::Undecided;
            };
            let mut first_refutation = None;
            let mut undecided = false;
            for c in [root.clone(), -root] {
                coeff[v] = c;
                match branch(prob, comp, tree, step + 1, coeff) {
                    Outcome::Solved(vals) => return Outcome::Solved(vals),
                    Outcome::Refuted(r) => {
                        first_refutation.get_or_insert(r);
                    }
                    Outcome::Undecided => undecided = true,
                }
            }
            match first_refutation {
                Some(r) if !undecided => Outcome::Refuted(r),
                _ => Outcome::Undecided,
            }
        }
    }
}

/// All tree scales are fixed up to `s`; impose the remaining edges.
fn close(prob: &Problem, comp: &[usize], tree: &Tree, coeff: &[Rational]) -> Outcome {
    // s^m = r, tagged with the edge it came from.
    let mut binomials: Vec<(u32, Rational, (usize, usize))> = Vec::new();
    for &(i, k) in &tree.extra {
        let rhs = prob.edge(i, k).unwrap() * &coeff[i] * &coeff[i];
        let (lhs_exp, rhs_exp) = (tree.exp[k], 2 * tree.exp[i]);
        if lhs_exp == rhs_exp {
            if coeff[k] != rhs {
                return Outcome::Refuted(Refutation::Inconsistent { row: i, col: k });
            }
        } else if lhs_exp > rhs_exp {
            binomials.push((lhs_exp - rhs_exp, &rhs / &coeff[k], (i, k)));
        } else {
            binomials.push((rhs_exp - lhs_exp, &coeff[k] / &rhs, (i, k)));
        }
    }
    for (m, r, _) in &binomials {
        if m % 2 == 0 && r.is_negative() {
            return Outcome::Refuted(Refutation::EvenPower(EvenPowerEquation {
                lhs: tree.root,
                lhs_power: *m,
                coeff: r.clone(),
                rhs: None,
            }));
        }
    }

    let s = if binomials.is_empty() {
        Rational::one()
    } else {
        // A binomial whose real roots are all rational pins down the real
        // candidates for s; without one the reals stay undecided.
        let Some(candidates) = binomials.iter().find_map(|(m, r, _)| {
            let root = r.exact_root(*m)?;
            Some(if m % 2 == 0 {
                vec![root.clone(), -root]
            } else {
                vec![root]
            })
        }) else {
            return Outcome::Undecided;
        };
        let mut failing = None;
        let found = candidates.into_iter().find(|s| {
            failing = binomials.iter().find(|(m, r, _)| s.pow(*m) != *r).map(|b| b.2);
            failing.is_none()
        });
        match found {
            Some(s) => s,
            None => {
                let (row, col) = failing.unwrap();
                return Outcome::Refuted(Refutation::Inconsistent { row, col });
            }
        }
    };
    Outcome::Solved(
        comp.iter()
            .map(|&v| (v, &coeff[v] * &s.pow(tree.exp[v])))
            .collect(),
    )
}
