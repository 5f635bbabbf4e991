use proptest::collection::vec;
use proptest::prelude::*;

use evokit_core::algebra::{verify_isomorphism_witness, ChainKind, FDAlgebra, PowerChain};
use evokit_core::approx::{
    approximate_at, beta_symbolic, equal_point_self_iso, evolution_operator, existence_solve, jacobian,
    symbolic_right_nilpotent, ExistenceVerdict, Variant,
};
use evokit_core::evolution::{monomial_isomorphism_search, EvolutionMatrix, MonomialSearch};
use evokit_core::exact::{invert, nullspace, q, rref, solve_linear, Matrix, Rational, Subspace};
use evokit_core::format::{algebra_to_json, parse_algebra, AlgebraFile};
use evokit_core::structure::{apply_basis_change, sup_distance, CubicTensor};

fn rat() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=6).prop_map(|(n, d)| q(n, d))
}

fn nonzero_rat() -> impl Strategy<Value = Rational> {
    rat().prop_filter("nonzero", |r| !r.is_zero())
}

fn sparse_rat() -> impl Strategy<Value = Rational> {
    prop_oneof![2 => Just(Rational::zero()), 1 => rat()]
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    vec(rat(), rows * cols).prop_map(move |v| Matrix::from_fn(rows, cols, |i, j| v[i * cols + j].clone()))
}

fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    matrix(n, n).prop_filter("invertible", move |m| m.rank() == n)
}

fn tensor_of(n: usize) -> impl Strategy<Value = CubicTensor> {
    vec(sparse_rat(), n * n * n).prop_map(move |v| {
        let mut t = CubicTensor::zero(n);
        for (idx, g) in v.into_iter().enumerate() {
            t.set(idx / (n * n), (idx / n) % n, idx % n, g);
        }
        t
    })
}

fn tensor(max_n: usize) -> impl Strategy<Value = CubicTensor> {
    (1..=max_n).prop_flat_map(tensor_of)
}

fn tensor_with_points(max_n: usize) -> impl Strategy<Value = (CubicTensor, Vec<Rational>, Vec<Rational>)> {
    (1..=max_n).prop_flat_map(|n| (tensor_of(n), vec(rat(), n), vec(rat(), n)))
}

fn anticommutative(max_n: usize) -> impl Strategy<Value = CubicTensor> {
    (1..=max_n).prop_flat_map(|n| {
        vec(sparse_rat(), n * n * n).prop_map(move |v| {
            let mut t = CubicTensor::zero(n);
            for i in 0..n {
                for j in i + 1..n {
                    for k in 0..n {
                        let g = v[(i * n + j) * n + k].clone();
                        t.set(j, i, k, -&g);
                        t.set(i, j, k, g);
                    }
                }
            }
            t
        })
    })
}

fn evolution_of(n: usize) -> impl Strategy<Value = EvolutionMatrix> {
    vec(sparse_rat(), n * n)
        .prop_map(move |v| EvolutionMatrix::new(Matrix::from_fn(n, n, |i, k| v[i * n + k].clone())).unwrap())
}

fn strictly_upper(max_n: usize) -> impl Strategy<Value = EvolutionMatrix> {
    (2..=max_n).prop_flat_map(|n| {
        evolution_of(n).prop_map(move |m| {
            EvolutionMatrix::new(Matrix::from_fn(n, n, |i, k| {
                if k > i {
                    m.get(i, k).clone()
                } else {
                    Rational::zero()
                }
            }))
            .unwrap()
        })
    })
}

fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

/// The `k`-th term (1-based), extending the recorded prefix by its constant tail.
fn term(chain: &PowerChain, k: usize) -> &Subspace {
    &chain.subspaces[k.min(chain.subspaces.len()) - 1]
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn rational_string_round_trip(r in rat()) {
        let s = r.to_string();
        prop_assert_eq!(s.parse::<Rational>().unwrap(), r);
    }

    #[test]
    fn inverse_times_matrix_is_identity(m in (1usize..=6).prop_flat_map(|n| matrix(n, n))) {
        if let Ok(inv) = invert(&m) {
            prop_assert_eq!(&inv * &m, Matrix::identity(m.rows()));
        } else {
            prop_assert!(m.rank() < m.rows());
        }
    }

    #[test]
    fn solutions_satisfy_system(
        (a, b) in (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| (matrix(r, c), vec(rat(), r)))
    ) {
        let set = solve_linear(&a, &b).unwrap();
        for v in nullspace(&a) {
            prop_assert!(a.mul_vec(&v).unwrap().iter().all(Rational::is_zero));
        }
        if let Some(x) = &set.particular {
            prop_assert_eq!(a.mul_vec(x).unwrap(), b.clone());
            for v in &set.nullspace_basis {
                prop_assert_eq!(a.mul_vec(&add(x, v)).unwrap(), b.clone());
            }
        } else {
            prop_assert!(!set.is_consistent());
        }
    }

    #[test]
    fn rref_is_idempotent(m in (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| matrix(r, c))) {
        let once = rref(&m);
        let twice = rref(&once.reduced);
        prop_assert_eq!(&twice.reduced, &once.reduced);
        prop_assert_eq!(twice.rank, once.rank);
    }

    /// Grid search over small integer points agrees with the exact status
    /// whenever the right-hand side comes from a grid point.
    #[test]
    fn solution_set_matches_grid_search(
        a in matrix(2, 2),
        x0 in vec(-2i64..=2, 2),
        b_free in vec(rat(), 2),
        from_grid in any::<bool>(),
    ) {
        let b = if from_grid {
            a.mul_vec(&[Rational::from(x0[0]), Rational::from(x0[1])]).unwrap()
        } else {
            b_free
        };
        let set = solve_linear(&a, &b).unwrap();
        let grid_hit = (-2i64..=2).any(|u| (-2i64..=2).any(|v| {
            a.mul_vec(&[Rational::from(u), Rational::from(v)]).unwrap() == b
        }));
        if grid_hit || from_grid {
            prop_assert!(set.is_consistent());
        }
        if from_grid {
            prop_assert!(grid_hit);
        }
    }

    #[test]
    fn basis_change_composes(
        (t, p, r) in (1usize..=3).prop_flat_map(|n| (tensor_of(n), invertible(n), invertible(n)))
    ) {
        let step = apply_basis_change(&apply_basis_change(&t, &p).unwrap(), &r).unwrap();
        prop_assert_eq!(step, apply_basis_change(&t, &(&r * &p)).unwrap());
        let back = apply_basis_change(&apply_basis_change(&t, &p).unwrap(), &invert(&p).unwrap()).unwrap();
        prop_assert_eq!(back, t);
    }

    #[test]
    fn sup_distance_is_a_metric(
        (a, b, c) in (1usize..=3).prop_flat_map(|n| (tensor_of(n), tensor_of(n), tensor_of(n)))
    ) {
        let ab = sup_distance(&a, &b).unwrap();
        prop_assert_eq!(ab.is_zero(), a == b);
        prop_assert_eq!(&ab, &sup_distance(&b, &a).unwrap());
        prop_assert!(sup_distance(&a, &c).unwrap() <= &ab + &sup_distance(&b, &c).unwrap());
    }

    #[test]
    fn chain_inclusions(t in tensor(4)) {
        let alg = FDAlgebra::from(t);
        let right = alg.power_chain(ChainKind::Right);
        let full = alg.power_chain(ChainKind::Full);
        let plenary = alg.power_chain(ChainKind::Plenary);
        for k in 1..=6 {
            prop_assert!(term(&right, k).is_subspace_of(term(&full, k)), "right {} vs full", k);
        }
        for k in 1..=3u32 {
            let p = term(&plenary, k as usize + 1);
            prop_assert!(p.is_subspace_of(term(&full, 2usize.pow(k))), "plenary {} vs full", k + 1);
        }
        for chain in [&right, &full, &plenary] {
            prop_assert!(chain.dims().windows(2).all(|w| w[1] <= w[0]));
        }
    }

    #[test]
    fn witnesses_transport_chain_verdicts(
        (t, p) in (1usize..=3).prop_flat_map(|n| (tensor_of(n), invertible(n)))
    ) {
        let a = FDAlgebra::from(t.clone());
        let b = FDAlgebra::from(apply_basis_change(&t, &p).unwrap());
        prop_assert!(verify_isomorphism_witness(&a, &b, &p).unwrap());
        for kind in ChainKind::ALL {
            prop_assert_eq!(a.power_chain(kind).verdict, b.power_chain(kind).verdict);
        }
    }

    #[test]
    fn monomial_images_are_found(
        (m, sigma, scales) in (1usize..=4).prop_flat_map(|n| (evolution_of(n), permutation(n), vec(nonzero_rat(), n)))
    ) {
        let n = m.dim();
        let mut p = Matrix::zeros(n, n);
        for i in 0..n {
            p[(sigma[i], i)] = scales[i].recip();
        }
        let image = EvolutionMatrix::from_tensor(&apply_basis_change(&m.to_tensor(), &p).unwrap()).unwrap();
        let res = monomial_isomorphism_search(&m, &image).unwrap();
        let MonomialSearch::Witness { matrix, .. } = &res else {
            return Err(TestCaseError::fail(format!("no witness: {res:?}")));
        };
        prop_assert!(verify_isomorphism_witness(&m.to_algebra(), &image.to_algebra(), matrix).unwrap());
        prop_assert_eq!(m.dim_square(), image.dim_square());
    }

    #[test]
    fn any_witness_verifies((a, b) in (1usize..=3).prop_flat_map(|n| (evolution_of(n), evolution_of(n)))) {
        if let MonomialSearch::Witness { matrix, .. } = monomial_isomorphism_search(&a, &b).unwrap() {
            prop_assert!(verify_isomorphism_witness(&a.to_algebra(), &b.to_algebra(), &matrix).unwrap());
            prop_assert_eq!(a.dim_square(), b.dim_square());
        }
    }

    #[test]
    fn approximation_is_linear_in_the_point(((t, x, _), c) in (tensor_with_points(4), rat())) {
        let cx: Vec<Rational> = x.iter().map(|v| &c * v).collect();
        for variant in [Variant::Standard, Variant::Transposed] {
            let lhs = approximate_at(&t, &cx, variant).unwrap();
            let rhs = approximate_at(&t, &x, variant).unwrap().scale(&c);
            prop_assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn jacobian_matches_standard_forms((t, x, _) in tensor_with_points(4)) {
        let forms = beta_symbolic(&t, Variant::Standard).specialize(&x).unwrap();
        prop_assert_eq!(forms.transpose(), jacobian(&t, &x).unwrap());
    }

    #[test]
    fn linearization_identity((t, x, h) in tensor_with_points(4)) {
        let f = |v: &[Rational]| evolution_operator(&t, v).unwrap();
        let lhs = sub(&sub(&f(&add(&x, &h)), &f(&x)), &f(&h));
        prop_assert_eq!(lhs, jacobian(&t, &x).unwrap().mul_vec(&h).unwrap());
    }

    #[test]
    fn transposed_is_index_swap_of_standard(t in tensor(4)) {
        let s = beta_symbolic(&t, Variant::Standard);
        let tr = beta_symbolic(&t, Variant::Transposed);
        for p in 0..t.dim() {
            for k in 0..t.dim() {
                prop_assert_eq!(tr.get(p, k), s.get(k, p));
            }
        }
    }

    #[test]
    fn anticommutative_approximations_vanish(t in anticommutative(4)) {
        prop_assert!(beta_symbolic(&t, Variant::Standard).is_zero());
        prop_assert!(beta_symbolic(&t, Variant::Transposed).is_zero());
    }

    #[test]
    fn existence_recovers_generating_point((t, x, _) in tensor_with_points(3)) {
        prop_assume!(x.iter().any(|v| !v.is_zero()));
        let target = approximate_at(&t, &x, Variant::Standard).unwrap();
        let rep = existence_solve(&t, &target).unwrap();
        // x itself solves the system, so some nonzero solution must come back.
        let ExistenceVerdict::Solution(y) = &rep.verdict else {
            return Err(TestCaseError::fail(format!("unexpected {:?}", rep.verdict)));
        };
        prop_assert_eq!(approximate_at(&t, y, Variant::Standard).unwrap(), target);
    }

    #[test]
    fn existence_solutions_verify(
        (t, target) in (1usize..=3).prop_flat_map(|n| (tensor_of(n), evolution_of(n)))
    ) {
        let rep = existence_solve(&t, &target).unwrap();
        if let ExistenceVerdict::Solution(x) = &rep.verdict {
            prop_assert!(x.iter().any(|v| !v.is_zero()));
            prop_assert_eq!(approximate_at(&t, x, Variant::Standard).unwrap(), target);
        }
        prop_assert_eq!(rep.stacked_solution.is_consistent(), rep.verdict != ExistenceVerdict::NoSolution);
    }

    #[test]
    fn nilpotency_transfers_to_approximations((m, pts) in strictly_upper(5).prop_flat_map(|m| {
        let n = m.dim();
        (Just(m), vec(vec(rat(), n), 5))
    })) {
        let t = m.to_tensor();
        prop_assert!(symbolic_right_nilpotent(&beta_symbolic(&t, Variant::Standard)));
        for x in pts {
            prop_assert!(approximate_at(&t, &x, Variant::Standard).unwrap().right_nilpotency().is_nilpotent());
        }
    }

    #[test]
    fn homothety_witness_verifies(m in (1usize..=4).prop_flat_map(evolution_of), c in nonzero_rat()) {
        let p = equal_point_self_iso(&m, &c).unwrap();
        let x = vec![c; m.dim()];
        let approx = approximate_at(&m.to_tensor(), &x, Variant::Standard).unwrap();
        prop_assert!(verify_isomorphism_witness(&approx.to_algebra(), &m.to_algebra(), &p).unwrap());
    }

    #[test]
    fn algebra_file_round_trip(t in tensor(3)) {
        let file = AlgebraFile::General(t);
        prop_assert_eq!(parse_algebra(&algebra_to_json(&file)).unwrap(), file);
    }
}
