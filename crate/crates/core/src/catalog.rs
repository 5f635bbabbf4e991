//! Named algebras (low-dimensional nilpotent Leibniz algebras, the real
//! two-dimensional evolution algebras, worked examples) and verifiers that
//! recompute their stated properties with explicit witnesses.

use std::fmt;

use serde::Serialize;

use crate::algebra::{verify_isomorphism_witness, FDAlgebra, Identity};
use crate::approx::{
    approximate_at, beta_symbolic, existence_solve, symbolic_right_nilpotent, ExistenceVerdict,
    Variant,
};
use crate::error::{Error, Result};
use crate::evolution::{monomial_isomorphism_search, EvolutionMatrix, MonomialSearch, Refutation};
use crate::exact::{format_vector, q, Matrix, Rational};
use crate::sample;
use crate::structure::{CubicTensor, LinearFormMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum EntryKind {
    Leibniz,
    Evolution,
    Example,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<Rational>,
    pub kind: EntryKind,
    pub tensor: CubicTensor,
    pub provenance: &'static str,
}

impl CatalogEntry {
    pub fn algebra(&self) -> FDAlgebra {
        FDAlgebra::from(self.tensor.clone())
    }

    pub fn evolution_matrix(&self) -> Option<EvolutionMatrix> {
        EvolutionMatrix::from_tensor(&self.tensor).ok()
    }
}

/// Name, parameter names, kind and provenance of every entry.
pub const ENTRIES: &[(&str, &[&str], EntryKind, &str)] = &[
    ("mu1", &[], EntryKind::Leibniz, "nilpotent Leibniz, dimension 2"),
    ("lambda1", &[], EntryKind::Leibniz, "nilpotent Leibniz, dimension 3"),
    ("lambda2", &[], EntryKind::Leibniz, "nilpotent Leibniz, dimension 3"),
    ("lambda3", &[], EntryKind::Leibniz, "nilpotent Leibniz, dimension 3"),
    ("lambda4", &["alpha"], EntryKind::Leibniz, "nilpotent Leibniz, dimension 3"),
    ("lambda5", &[], EntryKind::Leibniz, "nilpotent Leibniz, dimension 3"),
    ("lambda6", &[], EntryKind::Leibniz, "nilpotent Leibniz, dimension 3"),
    ("E1", &[], EntryKind::Evolution, "real evolution, dimension 2"),
    ("E2", &[], EntryKind::Evolution, "real evolution, dimension 2"),
    ("E3", &[], EntryKind::Evolution, "real evolution, dimension 2"),
    ("E4", &[], EntryKind::Evolution, "real evolution, dimension 2"),
    ("E5", &[], EntryKind::Evolution, "real evolution, dimension 2"),
    ("E6", &["a2", "a3"], EntryKind::Evolution, "real evolution, dimension 2"),
    ("E7", &["a4"], EntryKind::Evolution, "real evolution, dimension 2"),
    ("ex2_3", &[], EntryKind::Example, "existence example without solution"),
    ("ex2_4", &[], EntryKind::Example, "existence example with rank defect"),
    ("ex2_5", &[], EntryKind::Example, "existence example with solution"),
    ("ex2_8", &["a", "b", "c"], EntryKind::Example, "nilpotent approximation of a non-nilpotent algebra"),
    ("ex2_12", &["a", "d"], EntryKind::Example, "isomorphic algebras with non-isomorphic approximations"),
    ("ex2_12_base", &[], EntryKind::Example, "isomorphic algebras with non-isomorphic approximations"),
];

pub fn param_names(name: &str) -> Result<&'static [&'static str]> {
    ENTRIES
        .iter()
        .find(|e| e.0 == name)
        .map(|e| e.1)
        .ok_or_else(|| Error::UnknownName(name.to_string()))
}

fn products(dim: usize, list: &[(usize, usize, usize, Rational)]) -> CubicTensor {
    let mut t = CubicTensor::zero(dim);
    for (i, j, k, v) in list {
        t.set(*i, *j, *k, v.clone());
    }
    t
}

fn one() -> Rational {
    Rational::one()
}

fn leibniz(name: &str, alpha: Option<&Rational>) -> CubicTensor {
    match name {
        "mu1" => products(2, &[(0, 0, 1, one())]),
        "lambda1" => CubicTensor::zero(3),
        "lambda2" => products(3, &[(0, 0, 2, one())]),
        "lambda3" => products(3, &[(0, 1, 2, one()), (1, 0, 2, -one())]),
        "lambda4" => products(
            3,
            &[(0, 0, 2, one()), (1, 1, 2, alpha.cloned().unwrap_or_default()), (0, 1, 2, one())],
        ),
        "lambda5" => products(3, &[(1, 0, 2, one()), (0, 1, 2, one())]),
        "lambda6" => products(3, &[(0, 0, 1, one()), (1, 0, 2, one())]),
        _ => unreachable!("not a Leibniz entry"),
    }
}

fn matrix_of(rows: [[Rational; 2]; 2]) -> EvolutionMatrix {
    EvolutionMatrix::from_rows(rows.into_iter().map(Vec::from).collect()).expect("2x2")
}

fn example_block(second: [[i64; 2]; 2]) -> CubicTensor {
    let mut list = vec![
        (0, 0, 0, q(1, 1)),
        (0, 0, 1, q(2, 1)),
        (0, 1, 1, q(1, 1)),
    ];
    for (j, row) in second.iter().enumerate() {
        for (k, v) in row.iter().enumerate() {
            list.push((1, j, k, q(*v, 1)));
        }
    }
    products(2, &list)
}

/// The evolution algebra `E'` with matrix `[[a, 3a^2/(16d)], [8d^2/a, d]]`.
pub fn ex2_12_matrix(a: &Rational, d: &Rational) -> Result<EvolutionMatrix> {
    if a.is_zero() || d.is_zero() {
        return Err(Error::BadParams("ex2_12 needs a*d != 0".into()));
    }
    let b = Rational::from(3) * a * a / (Rational::from(16) * d);
    let c = Rational::from(8) * d * d / a;
    Ok(matrix_of([[a.clone(), b], [c, d.clone()]]))
}

pub fn ex2_12_base() -> EvolutionMatrix {
    EvolutionMatrix::from_ints(&[&[1, 2], &[3, 4]])
}

/// Looks up an entry; `params` follow the order of [`param_names`].
pub fn get(name: &str, params: &[Rational]) -> Result<CatalogEntry> {
    let &(_, names, kind, provenance) = ENTRIES
        .iter()
        .find(|e| e.0 == name)
        .ok_or_else(|| Error::UnknownName(name.to_string()))?;
    if params.len() != names.len() {
        return Err(Error::BadParams(format!(
            "{name} takes {} parameter(s), got {}",
            names.len(),
            params.len()
        )));
    }
    let p = |i: usize| params[i].clone();
    let tensor = match name {
        "mu1" | "lambda1" | "lambda2" | "lambda3" | "lambda5" | "lambda6" => leibniz(name, None),
        "lambda4" => leibniz(name, Some(&params[0])),
        "E1" => EvolutionMatrix::from_ints(&[&[1, 0], &[0, 0]]).to_tensor(),
        "E2" => EvolutionMatrix::from_ints(&[&[1, 0], &[1, 0]]).to_tensor(),
        "E3" => EvolutionMatrix::from_ints(&[&[1, 1], &[-1, -1]]).to_tensor(),
        "E4" => EvolutionMatrix::from_ints(&[&[0, 1], &[0, 0]]).to_tensor(),
        "E5" => EvolutionMatrix::from_ints(&[&[0, 1], &[0, -1]]).to_tensor(),
        "E6" => {
            if (one() - &params[0] * &params[1]).is_zero() {
                return Err(Error::BadParams("E6 needs 1 - a2*a3 != 0".into()));
            }
            matrix_of([[one(), p(0)], [p(1), one()]]).to_tensor()
        }
        "E7" => matrix_of([[Rational::zero(), one()], [one(), p(0)]]).to_tensor(),
        "ex2_3" => example_block([[0, 2], [1, 1]]),
        "ex2_4" => example_block([[0, -1], [1, 1]]),
        "ex2_5" => example_block([[-1, 0], [1, 2]]),
        "ex2_8" => matrix_of([[p(0), p(1)], [p(2), Rational::zero()]]).to_tensor(),
        "ex2_12" => ex2_12_matrix(&params[0], &params[1])?.to_tensor(),
        "ex2_12_base" => ex2_12_base().to_tensor(),
        _ => unreachable!("listed in ENTRIES"),
    };
    Ok(CatalogEntry {
        name: name.to_string(),
        params: params.to_vec(),
        kind,
        tensor,
        provenance,
    })
}

/// Target evolution matrix paired with an existence example.
pub fn existence_target(name: &str) -> Option<EvolutionMatrix> {
    match name {
        "ex2_3" | "ex2_4" => Some(EvolutionMatrix::from_ints(&[&[1, 1], &[-1, -1]])),
        "ex2_5" => Some(EvolutionMatrix::from_ints(&[&[1, 5], &[1, 5]])),
        _ => None,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyCase {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: &'static str,
    pub cases: Vec<VerifyCase>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.cases.push(VerifyCase {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.cases.iter().map(|c| c.name.len()).max().unwrap_or(0);
        for c in &self.cases {
            let mark = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{mark}  {}  {:<width$}  {}", self.suite, c.name, c.detail)?;
        }
        Ok(())
    }
}

/// Single-line rendering `[a, b]; [c, d]`.
pub fn forms_inline(m: &LinearFormMatrix) -> String {
    m.to_string().lines().collect::<Vec<_>>().join("; ")
}

const ALPHAS: [(i64, i64); 5] = [(0, 1), (1, 1), (-1, 1), (1, 4), (5, 1)];

/// Transposed approximations of the nilpotent Leibniz algebras are right
/// nilpotent, both from the form pattern and at random points.
pub fn verify_leibniz_approximation_nilpotency() -> VerifyReport {
    let mut report = VerifyReport {
        suite: "leibniz",
        cases: Vec::new(),
    };
    let mut entries: Vec<(String, CubicTensor)> = ["mu1", "lambda1", "lambda2", "lambda3"]
        .iter()
        .map(|n| (n.to_string(), leibniz(n, None)))
        .collect();
    for (n, d) in ALPHAS {
        let alpha = q(n, d);
        entries.push((format!("lambda4(alpha={alpha})"), leibniz("lambda4", Some(&alpha))));
    }
    entries.push(("lambda5".into(), leibniz("lambda5", None)));
    entries.push(("lambda6".into(), leibniz("lambda6", None)));

    let mut rng = sample::rng(0x1eb);
    for (name, t) in entries {
        let is_leibniz = FDAlgebra::from(t.clone()).check_identity(Identity::Leibniz);
        let forms = beta_symbolic(&t, Variant::Transposed);
        let symbolic = symbolic_right_nilpotent(&forms);
        let mut pointwise = true;
        for _ in 0..20 {
            let x = sample::point(&mut rng, t.dim(), 6);
            let e = approximate_at(&t, &x, Variant::Transposed).expect("dims agree");
            pointwise &= e.right_nilpotency().is_nilpotent();
        }
        report.push(name, is_leibniz && symbolic && pointwise, forms_inline(&forms));
    }
    report
}

struct CanonicalCase {
    name: String,
    tensor: CubicTensor,
    /// Padded with zeros up to the dimension; the forms never involve `x3`.
    point: Vec<Rational>,
    /// `None` asks the monomial search for the witness.
    witness: Option<Matrix>,
    canonical: EvolutionMatrix,
}

fn rows3(r: [[Rational; 3]; 3]) -> Matrix {
    Matrix::from_rows(r.into_iter().map(Vec::from).collect())
}

fn z() -> Rational {
    Rational::zero()
}

fn canonical_cases() -> Vec<CanonicalCase> {
    let two = Rational::from(2);
    let e4 = EvolutionMatrix::from_ints(&[&[0, 1], &[0, 0]]);
    let single = EvolutionMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 0], &[0, 0, 0]]);
    let split = EvolutionMatrix::from_ints(&[&[0, 1, 1], &[0, 0, 0], &[0, 0, 0]]);
    let mut cases = Vec::new();

    for x in [[q(1, 1), z()], [q(-3, 1), q(2, 5)]] {
        let s = (&two * &x[0]).recip();
        cases.push(CanonicalCase {
            name: format!("mu1 x={}", format_vector(&x)),
            tensor: leibniz("mu1", None),
            point: x.to_vec(),
            witness: Some(Matrix::from_rows(vec![vec![z(), s.clone()], vec![s, z()]])),
            canonical: e4.clone(),
        });
    }

    for x in [[q(1, 1), z(), z()], [q(2, 1), q(-1, 1), q(3, 1)]] {
        let s = (&two * &x[0]).recip();
        cases.push(CanonicalCase {
            name: format!("lambda2 x={}", format_vector(&x)),
            tensor: leibniz("lambda2", None),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), s.clone()], [s, z(), z()], [z(), one(), z()]])),
            canonical: single.clone(),
        });
    }

    for (an, ad) in [(0, 1), (2, 1), (-1, 1), (5, 1)] {
        let alpha = q(an, ad);
        let x = [q(1, 1), q(1, 1)];
        let u = &two * &x[0] + &x[1];
        let v = &x[0] + &two * &alpha * &x[1];
        cases.push(CanonicalCase {
            name: format!("lambda4(alpha={alpha}) generic x={}", format_vector(&x)),
            tensor: leibniz("lambda4", Some(&alpha)),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), one()], [z(), v, z()], [u, z(), z()]])),
            canonical: split.clone(),
        });
    }
    for (an, ad) in [(0, 1), (1, 2), (-1, 1), (5, 1)] {
        let alpha = q(an, ad);
        // 2x1 + x2 = 0.
        let x = [q(1, 1), q(-2, 1)];
        let v = (&x[0] + &two * &alpha * &x[1]).recip();
        cases.push(CanonicalCase {
            name: format!("lambda4(alpha={alpha}) x={}", format_vector(&x)),
            tensor: leibniz("lambda4", Some(&alpha)),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), v.clone()], [z(), v, z()], [one(), z(), z()]])),
            canonical: single.clone(),
        });
        // x1 + 2 alpha x2 = 0.
        let x = [-(&two * &alpha), q(1, 1)];
        let u = (&two * &x[0] + &x[1]).recip();
        cases.push(CanonicalCase {
            name: format!("lambda4(alpha={alpha}) x={}", format_vector(&x)),
            tensor: leibniz("lambda4", Some(&alpha)),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), u.clone()], [u, z(), z()], [z(), one(), z()]])),
            canonical: single.clone(),
        });
    }

    for x in [[q(1, 1), q(1, 1)], [q(-2, 1), q(1, 3)]] {
        let (a, b) = (&two * &x[0], &two * &x[1]);
        cases.push(CanonicalCase {
            name: format!("lambda5 x={}", format_vector(&x)),
            tensor: leibniz("lambda5", None),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), one()], [z(), a, z()], [b, z(), z()]])),
            canonical: split.clone(),
        });
    }
    {
        let x = [z(), q(3, 1)];
        let s = (&two * &x[1]).recip();
        cases.push(CanonicalCase {
            name: format!("lambda5 x={}", format_vector(&x)),
            tensor: leibniz("lambda5", None),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), s.clone()], [s, z(), z()], [z(), one(), z()]])),
            canonical: single.clone(),
        });
        let x = [q(-1, 2), z()];
        let s = (&two * &x[0]).recip();
        cases.push(CanonicalCase {
            name: format!("lambda5 x={}", format_vector(&x)),
            tensor: leibniz("lambda5", None),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), s.clone()], [z(), s, z()], [one(), z(), z()]])),
            canonical: single.clone(),
        });
    }

    // lambda6: the scale needs sqrt(|2 x1 x2|), so the points make it rational.
    let points = [
        [q(1, 1), q(1, 2)],
        [q(2, 1), q(1, 1)],
        [q(1, 2), q(1, 1)],
        [q(1, 1), q(2, 1)],
        [q(1, 1), q(-1, 2)],
        [q(2, 1), q(-1, 1)],
    ];
    for x in points {
        let prod = &two * &x[0] * &x[1];
        let positive = prod.is_positive();
        let root = prod.abs().sqrt_exact().expect("point chosen to make the root rational");
        let a = &x[1] / (&x[0] * &root);
        let b = &x[1] * &x[1] / (&two * x[0].pow(3));
        let c = &x[1] / (&two * &x[0] * &x[0]);
        let canonical = if positive {
            EvolutionMatrix::from_ints(&[&[0, 1, 1], &[0, 0, 0], &[0, 1, 0]])
        } else {
            EvolutionMatrix::from_ints(&[&[0, -1, -1], &[0, 0, 0], &[0, 1, 0]])
        };
        cases.push(CanonicalCase {
            name: format!("lambda6 x={}", format_vector(&x)),
            tensor: leibniz("lambda6", None),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), a], [b, z(), z()], [z(), c, z()]])),
            canonical,
        });
    }
    {
        let x = [z(), q(-2, 3)];
        let s = x[1].recip();
        cases.push(CanonicalCase {
            name: format!("lambda6 x={}", format_vector(&x)),
            tensor: leibniz("lambda6", None),
            point: x.to_vec(),
            witness: Some(rows3([[z(), z(), s.clone()], [s, z(), z()], [z(), one(), z()]])),
            canonical: single.clone(),
        });
    }
    for x in [[q(1, 1), z()], [q(3, 1), z()], [q(-1, 2), z()]] {
        cases.push(CanonicalCase {
            name: format!("lambda6 x={} (searched)", format_vector(&x)),
            tensor: leibniz("lambda6", None),
            point: x.to_vec(),
            witness: None,
            canonical: EvolutionMatrix::from_ints(&[&[0, 1, 0], &[0, 0, 1], &[0, 0, 0]]),
        });
    }
    cases
}

/// Maps each Transposed approximation onto its canonical form with an
/// explicit change of basis, and cross-checks with the monomial search.
pub fn verify_canonical_forms() -> VerifyReport {
    let mut report = VerifyReport {
        suite: "canonical",
        cases: Vec::new(),
    };
    for case in canonical_cases() {
        let mut point = case.point.clone();
        point.resize(case.tensor.dim(), Rational::zero());
        let approx = approximate_at(&case.tensor, &point, Variant::Transposed).expect("dims agree");
        let search = monomial_isomorphism_search(&approx, &case.canonical).expect("dims agree");
        let (witness, searched) = match (&case.witness, search.witness()) {
            (Some(p), found) => (Some(p.clone()), found.is_some()),
            (None, found) => (found.cloned(), found.is_some()),
        };
        let ok = witness
            .as_ref()
            .map(|p| {
                verify_isomorphism_witness(&approx.to_algebra(), &case.canonical.to_algebra(), p)
                    .unwrap_or(false)
            })
            .unwrap_or(false);
        let detail = match &witness {
            Some(p) => format!("witness rows {}", inline_rows(p)),
            None => "no witness".to_string(),
        };
        report.push(case.name, ok && searched, detail);
    }
    report
}

pub fn inline_rows(m: &Matrix) -> String {
    let rows: Vec<String> = m.to_rows().iter().map(|r| format_vector(r)).collect();
    rows.join(" ")
}

/// The monomial-search outcome for the two approximations of the
/// isomorphic pair at `a`, `d` and points `x`, `y`.
pub fn ex2_12_approximation_search(
    a: &Rational,
    d: &Rational,
    x: &[Rational],
    y: &[Rational],
) -> Result<MonomialSearch> {
    let ex = approximate_at(&ex2_12_base().to_tensor(), x, Variant::Transposed)?;
    let ey = approximate_at(&ex2_12_matrix(a, d)?.to_tensor(), y, Variant::Transposed)?;
    monomial_isomorphism_search(&ex, &ey)
}

fn describe_refutations(res: &MonomialSearch) -> String {
    match res {
        MonomialSearch::NoneOverReals { refutations } => refutations
            .iter()
            .map(|r| {
                let perm: Vec<String> = r.permutation.iter().map(|i| (i + 1).to_string()).collect();
                format!("[{}] {}", perm.join(" "), r.reason)
            })
            .collect::<Vec<_>>()
            .join("; "),
        MonomialSearch::NoneOverRationals => "undecided over the reals".into(),
        MonomialSearch::Witness { matrix, .. } => format!("witness {}", inline_rows(matrix)),
    }
}

fn has_sign_obstruction(res: &MonomialSearch) -> bool {
    matches!(res, MonomialSearch::NoneOverReals { refutations }
        if refutations.iter().any(|r| matches!(r.reason, Refutation::EvenPower(_))))
}

/// The worked examples around existence, nilpotency and isomorphism.
pub fn verify_section2_fixtures() -> VerifyReport {
    let mut report = VerifyReport {
        suite: "section2",
        cases: Vec::new(),
    };

    for name in ["ex2_3", "ex2_4", "ex2_5"] {
        let t = get(name, &[]).expect("catalog entry").tensor;
        let target = existence_target(name).expect("existence example");
        let rep = existence_solve(&t, &target).expect("dims agree");
        let (ok, detail) = match name {
            "ex2_3" => (
                rep.verdict == ExistenceVerdict::NoSolution
                    && !rep.blocks_agree
                    && rep.gamma_p[0] == Matrix::from_ints(&[&[2, 0], &[4, 3]])
                    && rep.gamma_p[1] == Matrix::from_ints(&[&[0, 2], &[3, 2]]),
                "no solution, block candidates disagree".to_string(),
            ),
            "ex2_4" => (
                rep.verdict == ExistenceVerdict::NoSolution
                    && !rep.ranks_consistent
                    && rep.block_ranks[0].rank == 1
                    && rep.block_ranks[0].augmented_rank == 2,
                "no solution, rank 1 < augmented rank 2 in block 1".to_string(),
            ),
            _ => {
                let x = vec![one(), one()];
                let inv = Matrix::from_rows(vec![vec![q(1, 6), q(1, 6)], vec![q(-2, 3), q(1, 3)]]);
                (
                    rep.verdict == ExistenceVerdict::Solution(x.clone())
                        && rep.inverses[0].as_ref() == Some(&inv)
                        && approximate_at(&t, &x, Variant::Standard).ok() == Some(target.clone()),
                    format!("solution x = {}", format_vector(&x)),
                )
            }
        };
        report.push(name, ok, detail);
    }

    {
        let (a, b, c) = (q(1, 1), q(2, 1), q(3, 1));
        let e = matrix_of([[a, b], [c, z()]]);
        let x = [z(), q(1, 1)];
        let ex = approximate_at(&e.to_tensor(), &x, Variant::Standard).expect("dims agree");
        let ok = !e.right_nilpotency().is_nilpotent() && ex.right_nilpotency().is_nilpotent();
        report.push(
            "ex2_8",
            ok,
            format!("E not right nilpotent, E_x at x = {} right nilpotent", format_vector(&x)),
        );
    }

    {
        let swap = Matrix::from_ints(&[&[0, 1], &[1, 0]]);
        let target = ex2_12_matrix(&q(4, 1), &q(1, 1)).expect("ad != 0");
        let ok = verify_isomorphism_witness(&ex2_12_base().to_algebra(), &target.to_algebra(), &swap)
            .unwrap_or(false);
        report.push("ex2_12 a=4 d=1", ok, "swap witness [[0,1],[1,0]]");
    }

    for (a, d) in [(q(1, 1), q(-1, 1)), (q(2, 1), q(3, 1)), (q(-1, 2), q(5, 1))] {
        let target = ex2_12_matrix(&a, &d).expect("ad != 0");
        let res = monomial_isomorphism_search(&ex2_12_base(), &target).expect("dims agree");
        report.push(
            format!("ex2_12 base iso a={a} d={d}"),
            res.witness().is_some(),
            describe_refutations(&res),
        );
    }

    {
        let ones = [one(), one()];
        let res = ex2_12_approximation_search(&q(1, 1), &q(-1, 1), &ones, &ones).expect("dims agree");
        report.push(
            "ex2_12 approximations a=1 d=-1",
            has_sign_obstruction(&res),
            describe_refutations(&res),
        );
    }

    {
        // The matrices as displayed for E_x and E'_y at x = y = (1, 1).
        let ex = EvolutionMatrix::from_ints(&[&[1, 3], &[2, 4]]);
        let ey = matrix_of([[q(1, 1), q(8, 1)], [q(-3, 16), q(-1, 1)]]);
        let res = monomial_isomorphism_search(&ex, &ey).expect("dims agree");
        report.push(
            "ex2_12 displayed matrices a=1 d=-1",
            has_sign_obstruction(&res),
            describe_refutations(&res),
        );
    }

    report
}
