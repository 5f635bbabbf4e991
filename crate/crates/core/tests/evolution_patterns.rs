use evokit_core::algebra::{ChainKind, ChainVerdict};
use evokit_core::evolution::EvolutionMatrix;
use evokit_core::exact::{Matrix, Rational};
use evokit_core::sample;
use rand::seq::SliceRandom;

fn all_zero_one_3x3() -> impl Iterator<Item = EvolutionMatrix> {
    (0u32..512).map(|bits| {
        EvolutionMatrix::new(Matrix::from_fn(3, 3, |i, k| Rational::from(((bits >> (3 * i + k)) & 1) as i64)))
            .unwrap()
    })
}

fn check(m: &EvolutionMatrix) {
    let report = m.triangularizable();
    let right = m.right_nilpotency().is_nilpotent();
    let full = matches!(
        m.to_algebra().power_chain(ChainKind::Full).verdict,
        ChainVerdict::ReachesZero(_)
    );
    assert_eq!(report.triangularizable, right, "{m:?}");
    assert_eq!(right, full, "{m:?}");
    match (&report.permutation, &report.cycle_witness) {
        (Some(order), None) => {
            let p = m.permuted(order);
            for r in 0..p.rows() {
                for c in 0..=r {
                    assert!(p[(r, c)].is_zero(), "{m:?} permuted by {order:?}");
                }
            }
        }
        (None, Some(cycle)) => {
            let next = cycle.iter().skip(1).chain(cycle.first());
            for (&a, &b) in cycle.iter().zip(next) {
                assert!(!m.get(a, b).is_zero(), "{m:?} cycle {cycle:?}");
            }
        }
        _ => panic!("inconsistent report {report:?}"),
    }
}

#[test]
fn zero_one_patterns() {
    let mut nilpotent = 0;
    for m in all_zero_one_3x3() {
        check(&m);
        nilpotent += m.triangularizable().triangularizable as usize;
    }
    // Acyclic digraphs on three labelled nodes.
    assert_eq!(nilpotent, 25);
}

#[test]
fn random_rational_matrices() {
    let mut rng = sample::rng(4);
    for idx in 0..200 {
        let n = 4 + idx % 2;
        let m = if idx % 2 == 0 {
            // Conjugated strictly upper triangular matrices hit the nilpotent side.
            let up = sample::strictly_upper(&mut rng, n, 0.7);
            let mut order: Vec<usize> = (0..n).collect();
            order.shuffle(&mut rng);
            EvolutionMatrix::new(up.permuted(&order)).unwrap()
        } else {
            sample::evolution(&mut rng, n, 0.3)
        };
        check(&m);
    }
}
