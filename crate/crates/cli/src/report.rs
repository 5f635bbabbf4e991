//! Text and JSON renderings of library results. Text output uses 1-based
//! basis indices; JSON mirrors the library types, whose indices are 0-based.

use std::fmt::Write as _;

use serde::Serialize;

use evokit_core::algebra::{ChainKind, ChainVerdict, FDAlgebra, Identity};
use evokit_core::approx::{
    approximate_at, beta_symbolic, existence_solve, symbolic_right_nilpotent, ExistenceReport,
    ExistenceVerdict, Variant,
};
use evokit_core::catalog::{self, CatalogEntry, EntryKind, VerifyReport};
use evokit_core::evolution::{
    monomial_isomorphism_search, EvolutionMatrix, MonomialSearch, RightNilpotency, TriangularizabilityReport,
};
use evokit_core::exact::{format_vector, Matrix, Rational};
use evokit_core::format::{algebra_to_json, AlgebraFile};
use evokit_core::structure::LinearFormMatrix;
use evokit_core::{sup_distance, verify_isomorphism_witness};

use crate::Outcome;

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn inline(m: &Matrix) -> String {
    let rows: Vec<String> = m
        .to_rows()
        .iter()
        .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
        .collect();
    format!("[{}]", rows.join(", "))
}

fn basis_list(idx: &[usize], sep: &str) -> String {
    idx.iter().map(|i| format!("e{}", i + 1)).collect::<Vec<_>>().join(sep)
}

fn forms_grid(m: &LinearFormMatrix) -> Vec<Vec<String>> {
    (0..m.dim())
        .map(|p| (0..m.dim()).map(|k| m.get(p, k).to_string()).collect())
        .collect()
}

fn variant(transposed: bool) -> Variant {
    if transposed {
        Variant::Transposed
    } else {
        Variant::Standard
    }
}

fn kind_name(file: &AlgebraFile) -> &'static str {
    match file {
        AlgebraFile::General(_) => "general",
        AlgebraFile::Evolution(_) => "evolution",
    }
}

#[derive(Serialize)]
struct ChainSummary {
    kind: ChainKind,
    dims: Vec<usize>,
    verdict: ChainVerdict,
}

#[derive(Serialize)]
struct EvolutionSummary {
    matrix: Matrix,
    dim_square: usize,
    triangularizability: TriangularizabilityReport,
    right_nilpotency: RightNilpotency,
}

#[derive(Serialize)]
struct InfoReport {
    dim: usize,
    kind: &'static str,
    products: Vec<String>,
    identities: Vec<(Identity, bool)>,
    chains: Vec<ChainSummary>,
    dim_square: usize,
    left_annihilator_dim: usize,
    right_annihilator_dim: usize,
    evolution: Option<EvolutionSummary>,
}

fn describe_verdict(v: ChainVerdict) -> String {
    match v {
        ChainVerdict::ReachesZero(k) => format!("reaches zero at k = {k}"),
        ChainVerdict::Stabilizes(d) => format!("stabilizes at dimension {d}"),
    }
}

fn describe_nilpotency(r: RightNilpotency) -> String {
    match r {
        RightNilpotency::Nilpotent(k) => format!("RIGHT NILPOTENT (index {k})"),
        RightNilpotency::NotNilpotent => "NOT RIGHT NILPOTENT".to_string(),
    }
}

fn describe_triangularizability(rep: &TriangularizabilityReport) -> String {
    match (&rep.permutation, &rep.cycle_witness) {
        (Some(order), _) => format!("triangularizing order: {}", basis_list(order, " ")),
        (_, Some(cycle)) => format!("support cycle: {} -> e{}", basis_list(cycle, " -> "), cycle[0] + 1),
        _ => String::new(),
    }
}

pub fn info(file: &AlgebraFile, as_json: bool) -> Outcome {
    let alg = FDAlgebra::from(file.tensor());
    let fp = alg.fingerprint();
    let evolution = file.evolution().ok().map(|m| EvolutionSummary {
        dim_square: m.dim_square(),
        triangularizability: m.triangularizable(),
        right_nilpotency: m.right_nilpotency(),
        matrix: m.matrix().clone(),
    });
    let rep = InfoReport {
        dim: alg.dim(),
        kind: kind_name(file),
        products: alg.tensor.to_string().lines().map(str::to_string).collect(),
        identities: Identity::ALL.iter().map(|&i| (i, alg.check_identity(i))).collect(),
        chains: ChainKind::ALL
            .iter()
            .map(|&kind| {
                let c = alg.power_chain(kind);
                ChainSummary {
                    kind,
                    dims: c.dims(),
                    verdict: c.verdict,
                }
            })
            .collect(),
        dim_square: fp.dim_square,
        left_annihilator_dim: fp.left_annihilator,
        right_annihilator_dim: fp.right_annihilator,
        evolution,
    };
    if as_json {
        return Ok(json(&rep));
    }
    let mut out = String::new();
    writeln!(out, "dim: {}", rep.dim).unwrap();
    writeln!(out, "kind: {}", rep.kind).unwrap();
    writeln!(out, "products:").unwrap();
    for p in &rep.products {
        writeln!(out, "  {p}").unwrap();
    }
    writeln!(out, "identities:").unwrap();
    for (i, holds) in &rep.identities {
        writeln!(out, "  {:<24} {}", i.name(), yes(*holds)).unwrap();
    }
    writeln!(out, "chains:").unwrap();
    for c in &rep.chains {
        writeln!(out, "  {:<8} dims {:?}, {}", c.kind.name(), c.dims, describe_verdict(c.verdict)).unwrap();
    }
    writeln!(out, "dim of square: {}", rep.dim_square).unwrap();
    writeln!(out, "left annihilator dim: {}", rep.left_annihilator_dim).unwrap();
    writeln!(out, "right annihilator dim: {}", rep.right_annihilator_dim).unwrap();
    if let Some(ev) = &rep.evolution {
        writeln!(out, "evolution matrix: {}", inline(&ev.matrix)).unwrap();
        writeln!(out, "dim E^2: {}", ev.dim_square).unwrap();
        writeln!(out, "{}", describe_nilpotency(ev.right_nilpotency)).unwrap();
        writeln!(out, "{}", describe_triangularizability(&ev.triangularizability)).unwrap();
    }
    Ok(out)
}

#[derive(Serialize)]
struct ApproxReport {
    variant: Variant,
    point: Option<Vec<Rational>>,
    matrix: Option<Matrix>,
    forms: Option<Vec<Vec<String>>>,
}

pub fn approx(
    file: &AlgebraFile,
    point: Option<&[Rational]>,
    transposed: bool,
    symbolic: bool,
    as_json: bool,
) -> Outcome {
    let t = file.tensor();
    let v = variant(transposed);
    let matrix = point
        .map(|x| approximate_at(&t, x, v).map(|e| e.matrix().clone()))
        .transpose()?;
    let forms = symbolic.then(|| beta_symbolic(&t, v));
    if as_json {
        return Ok(json(&ApproxReport {
            variant: v,
            point: point.map(<[Rational]>::to_vec),
            matrix,
            forms: forms.as_ref().map(forms_grid),
        }));
    }
    let mut out = format!("variant: {}\n", v.name());
    if let (Some(x), Some(m)) = (point, &matrix) {
        writeln!(out, "point: {}", format_vector(x)).unwrap();
        out.push_str(&m.to_string());
    }
    if let Some(f) = &forms {
        writeln!(out, "forms:").unwrap();
        out.push_str(&f.to_string());
    }
    Ok(out)
}

fn describe_existence(rep: &ExistenceReport) -> String {
    let mut out = String::new();
    match &rep.verdict {
        ExistenceVerdict::Solution(x) => writeln!(out, "SOLUTION x = {}", format_vector(x)),
        ExistenceVerdict::NoNonzeroSolution => writeln!(out, "NO NONZERO SOLUTION"),
        ExistenceVerdict::NoSolution => writeln!(out, "NO SOLUTION"),
    }
    .unwrap();
    let invertible = if rep.invertible_set.is_empty() {
        "none".to_string()
    } else {
        rep.invertible_set.iter().map(|p| (p + 1).to_string()).collect::<Vec<_>>().join(", ")
    };
    writeln!(out, "invertible blocks: {invertible}").unwrap();
    writeln!(out, "invertible-block candidates agree: {}", yes(rep.blocks_agree)).unwrap();
    writeln!(out, "singular-block ranks consistent: {}", yes(rep.ranks_consistent)).unwrap();
    for (p, g) in rep.gamma_p.iter().enumerate() {
        let ranks = &rep.block_ranks[p];
        write!(
            out,
            "block {}: Gamma = {}, a = {}, rank {}, augmented rank {}",
            p + 1,
            inline(g),
            format_vector(&rep.targets[p]),
            ranks.rank,
            ranks.augmented_rank
        )
        .unwrap();
        if let Some(c) = &rep.candidates[p] {
            write!(out, ", Gamma^-1 a = {}", format_vector(c)).unwrap();
        }
        out.push('\n');
    }
    if rep.conditions_disagree {
        writeln!(out, "warning: the block conditions disagree with the stacked system").unwrap();
    }
    out
}

pub fn exists(algebra: &AlgebraFile, target: &EvolutionMatrix, as_json: bool) -> Outcome {
    let rep = existence_solve(&algebra.tensor(), target)?;
    Ok(if as_json { json(&rep) } else { describe_existence(&rep) })
}

#[derive(Serialize)]
struct SymbolicNilpotency {
    variant: Variant,
    right_nilpotent_for_all_x: bool,
    forms: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct PointwiseNilpotency {
    right_nilpotency: RightNilpotency,
    triangularizability: TriangularizabilityReport,
}

pub fn nilpotent(file: &AlgebraFile, symbolic: bool, transposed: bool, as_json: bool) -> Outcome {
    if symbolic {
        let v = variant(transposed);
        let forms = beta_symbolic(&file.tensor(), v);
        let all = symbolic_right_nilpotent(&forms);
        if as_json {
            return Ok(json(&SymbolicNilpotency {
                variant: v,
                right_nilpotent_for_all_x: all,
                forms: forms_grid(&forms),
            }));
        }
        let mut out = if all {
            "RIGHT NILPOTENT for all x\n".to_string()
        } else {
            "NOT DECIDED: the form pattern has a cycle, so the answer depends on x\n".to_string()
        };
        writeln!(out, "variant: {}", v.name()).unwrap();
        out.push_str(&forms.to_string());
        return Ok(out);
    }
    let m = file.evolution()?;
    let rep = PointwiseNilpotency {
        right_nilpotency: m.right_nilpotency(),
        triangularizability: m.triangularizable(),
    };
    if as_json {
        return Ok(json(&rep));
    }
    Ok(format!(
        "{}\n{}\n",
        describe_nilpotency(rep.right_nilpotency),
        describe_triangularizability(&rep.triangularizability)
    ))
}

#[derive(Serialize)]
struct WitnessCheck {
    witness: Matrix,
    verified: bool,
}

pub fn iso_witness(a: &AlgebraFile, b: &AlgebraFile, p: &Matrix, as_json: bool) -> Outcome {
    let ok = verify_isomorphism_witness(&FDAlgebra::from(a.tensor()), &FDAlgebra::from(b.tensor()), p)?;
    if as_json {
        return Ok(json(&WitnessCheck {
            witness: p.clone(),
            verified: ok,
        }));
    }
    Ok(if ok {
        "WITNESS VERIFIED\n".to_string()
    } else {
        "NOT A WITNESS\n".to_string()
    })
}

pub fn iso_monomial(a: &EvolutionMatrix, b: &EvolutionMatrix, as_json: bool) -> Outcome {
    let res = monomial_isomorphism_search(a, b)?;
    if as_json {
        return Ok(json(&res));
    }
    let mut out = String::new();
    match &res {
        MonomialSearch::Witness {
            permutation,
            scales,
            matrix,
        } => {
            writeln!(out, "MONOMIAL ISOMORPHISM").unwrap();
            for (i, (s, t)) in permutation.iter().zip(scales).enumerate() {
                writeln!(out, "  e{} -> {t}*f{}", i + 1, s + 1).unwrap();
            }
            writeln!(out, "witness: {}", inline(matrix)).unwrap();
        }
        MonomialSearch::NoneOverRationals => {
            writeln!(out, "NO MONOMIAL ISOMORPHISM over Q (real scales not excluded)").unwrap();
        }
        MonomialSearch::NoneOverReals { refutations } => {
            writeln!(out, "NO MONOMIAL ISOMORPHISM over R").unwrap();
            for r in refutations {
                writeln!(out, "  sigma = [{}]: {}", basis_list(&r.permutation, " "), r.reason).unwrap();
            }
        }
    }
    Ok(out)
}

pub fn distance(a: &AlgebraFile, b: &AlgebraFile, as_json: bool) -> Outcome {
    let d = sup_distance(&a.tensor(), &b.tensor())?;
    Ok(if as_json { json(&d) } else { format!("{d}\n") })
}

#[derive(Serialize)]
struct ListedEntry {
    name: &'static str,
    params: &'static [&'static str],
    kind: EntryKind,
    provenance: &'static str,
}

pub fn catalog_list(as_json: bool) -> Outcome {
    let entries: Vec<ListedEntry> = catalog::ENTRIES
        .iter()
        .map(|&(name, params, kind, provenance)| ListedEntry {
            name,
            params,
            kind,
            provenance,
        })
        .collect();
    if as_json {
        return Ok(json(&entries));
    }
    let mut out = String::new();
    for e in &entries {
        let params = if e.params.is_empty() {
            String::new()
        } else {
            e.params.join(",")
        };
        writeln!(out, "{:<12} {:<8} {}", e.name, params, e.provenance).unwrap();
    }
    Ok(out)
}

/// Exports the entry (or its existence target) in the algebra file format.
pub fn catalog_entry(entry: &CatalogEntry, target: bool) -> Outcome {
    if target {
        let m = catalog::existence_target(&entry.name).ok_or_else(|| {
            crate::Failure::Domain(format!("{} has no existence target", entry.name))
        })?;
        return Ok(format!("{}\n", algebra_to_json(&AlgebraFile::Evolution(m))));
    }
    let file = match (entry.kind, entry.evolution_matrix()) {
        (EntryKind::Leibniz, _) | (_, None) => AlgebraFile::General(entry.tensor.clone()),
        (_, Some(m)) => AlgebraFile::Evolution(m),
    };
    Ok(format!("{}\n", algebra_to_json(&file)))
}

pub fn verify(reports: &[VerifyReport], as_json: bool) -> String {
    if as_json {
        return json(&reports);
    }
    let mut out = String::new();
    for r in reports {
        out.push_str(&r.to_string());
    }
    let total: usize = reports.iter().map(|r| r.cases.len()).sum();
    let failed: usize = reports.iter().map(|r| r.cases.iter().filter(|c| !c.passed).count()).sum();
    if failed == 0 {
        writeln!(out, "ALL PASS ({total} cases)").unwrap();
    } else {
        writeln!(out, "{failed} of {total} cases FAILED").unwrap();
    }
    out
}
