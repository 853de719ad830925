//! Worked examples over the four small algebras in the corpus.

mod common;

use common::*;
use taumatch_core::cover::{is_projective, minimal_projective_presentation, projective_cover_map, ProjectiveSum};
use taumatch_core::endo::{end_info, is_isomorphic};
use taumatch_core::rep::{radical_submodule, top, Violation};
use taumatch_core::tau::PairFailure;
use taumatch_core::*;

fn verified(p: &SupportPair) -> VerifiedPair {
    let v = verify_support_pair(p);
    assert!(v.status.is_support_tau_tilting(), "{:?}", v.status);
    v.verified.unwrap()
}

fn one_based(sets: &[Vec<usize>]) -> Vec<Vec<usize>> {
    sets.iter().map(|s| s.iter().map(|j| j + 1).collect()).collect()
}

fn perm(s: &str, n: usize) -> Permutation {
    Permutation::from_cycles(s, n).unwrap()
}

fn iso(m: &Representation, n: &Representation) -> bool {
    is_isomorphic(m, n).unwrap()
}

#[test]
fn loop_violating_nilpotency_is_rejected() {
    let a = loop_source_alg();
    let maps = vec![Matrix::from_i64(1, 1, &[1]), Matrix::zeros(0, 1)];
    let err = Representation::new(&a, vec![1, 0], maps).unwrap_err();
    assert!(matches!(err.0.as_slice(), [Violation::Relation { index: 0, .. }]));
}

#[test]
fn direct_sum_dims() {
    let a = fork_alg();
    let s = sum(&[&simple(&a, 1), &injective(&a, 1)]);
    assert_eq!(s.dims(), &[1, 2, 0]);
}

#[test]
fn hom_from_simple_into_injective() {
    let a = fork_alg();
    assert!(hom_dim(&simple(&a, 1), &injective(&a, 1)) >= 1);
}

#[test]
fn endomorphisms_of_jordan_block() {
    let a = loop_source_alg();
    let e = end_info(&m11(&a));
    assert_eq!((e.dimension, e.radical_dimension, e.local), (2, 1, Locality::Yes));
}

#[test]
fn indecomposability_verdicts() {
    let a = loop_sink_alg();
    assert_eq!(is_indecomposable(&projective(&a, 0)), Ok(Locality::Yes));
    let s1 = simple(&a, 0);
    assert_eq!(is_indecomposable(&sum(&[&s1, &s1])), Ok(Locality::No));
    for e in examples() {
        for m in e.left.t.iter().chain(&e.left.p).chain(&e.right.t).chain(&e.right.p) {
            assert_eq!(is_indecomposable(m), Ok(Locality::Yes), "example {}", e.name);
        }
    }
}

#[test]
fn common_summand_of_first_example() {
    let e = fork();
    assert!(iso(&e.left.t[0], &e.right.p[0]));
    let a = fork_alg();
    assert!(!iso(&simple(&a, 0), &simple(&a, 1)));
}

#[test]
fn radical_and_top() {
    let a = loop_sink_alg();
    let (rad, _) = radical_submodule(&projective(&a, 0));
    assert!(iso(&rad, &simple(&a, 1)));
    for alg in algebras() {
        for i in 0..alg.vertex_count() {
            let mut ind = vec![0; alg.vertex_count()];
            ind[i] = 1;
            assert_eq!(top(&projective(&alg, i)), ind);
        }
        assert!(radical_submodule(&simple(&alg, 0)).0.is_zero());
    }
}

#[test]
fn projective_covers() {
    let a = loop_sink_alg();
    let c = projective_cover_map(&simple(&a, 0));
    assert_eq!(c.generators, ProjectiveSum::new(vec![0]));
    assert!(iso(&c.kernel, &simple(&a, 1)));
    assert!(c.kernel_in_radical());
    assert!(projective_cover_map(&projective(&a, 1)).kernel.is_zero());

    let b = fork_alg();
    let c = projective_cover_map(&injective(&b, 2));
    assert_eq!(c.generators, ProjectiveSum::new(vec![0]));
    assert!(iso(&c.kernel, &simple(&b, 1)));
}

#[test]
fn minimal_presentations() {
    let a = loop_sink_alg();
    let p = minimal_projective_presentation(&simple(&a, 0));
    assert_eq!((p.p1.vertices.clone(), p.p0.vertices.clone()), (vec![1], vec![0]));
    assert!(minimal_projective_presentation(&projective(&a, 0)).p1.is_empty());

    let b = fork_alg();
    let p = minimal_projective_presentation(&injective(&b, 2));
    assert_eq!((p.p1.vertices.clone(), p.p0.vertices.clone()), (vec![1], vec![0]));
}

#[test]
fn translates() {
    let a = loop_source_alg();
    let t = tau(&m11(&a)).translate;
    assert_eq!(t.dims(), &[0, 1]);
    assert!(iso(&t, &simple(&a, 1)));
    assert!(iso(&tau_minus(&simple(&a, 1)).unwrap(), &m11(&a)));

    let a = loop_sink_alg();
    let t = tau(&simple(&a, 0)).translate;
    assert_eq!(t.dims(), &[0, 2]);
    assert!(iso(&t, &projective(&a, 1)));
    assert!(iso(&tau_minus(&projective(&a, 1)).unwrap(), &simple(&a, 0)));

    let a = fork_alg();
    assert!(iso(&tau(&injective(&a, 2)).translate, &simple(&a, 1)));

    for alg in algebras() {
        for i in 0..alg.vertex_count() {
            assert!(tau(&projective(&alg, i)).translate.is_zero());
            assert!(tau_minus(&injective(&alg, i)).unwrap().is_zero());
        }
    }
}

#[test]
fn rigidity_of_sums() {
    let a = fork_alg();
    let (s1, s2, i2) = (simple(&a, 0), simple(&a, 1), injective(&a, 1));
    assert!(is_tau_rigid(&sum(&[&i2, &s2])).is_rigid());
    assert!(!is_tau_rigid(&sum(&[&s2, &s1])).is_rigid());
    assert!(is_tau_rigid(&projective(&a, 0)).is_rigid());
}

#[test]
fn rigid_pairs() {
    let a = fork_alg();
    assert!(is_tau_rigid_pair(&injective(&a, 1), &simple(&a, 1)).unwrap().is_some());
    assert!(is_tau_rigid_pair(&injective(&a, 1), &Representation::zero(&a))
        .unwrap()
        .is_none());
    assert!(is_tau_rigid_pair(&simple(&a, 1), &simple(&a, 0)).is_err());

    let b = loop_sink_alg();
    assert!(is_tau_rigid_pair(&projective(&b, 0), &projective(&b, 1))
        .unwrap()
        .is_some());
}

#[test]
fn pair_verification() {
    let e = fork();
    assert!(verify_support_pair(&e.left).status.is_support_tau_tilting());
    let e = loop_sink();
    assert!(verify_support_pair(&e.left).status.is_support_tau_tilting());

    let a = fork_alg();
    let s1 = simple(&a, 0);
    let v = verify_support_pair(&pair(&a, &[&s1, &s1], &[]));
    assert!(matches!(v.status, PairStatus::Failed(PairFailure::NotBasic { .. })));
    assert_eq!(v.passed, vec![PairCheck::Validates, PairCheck::Indecomposable]);

    let v = verify_support_pair(&pair(&a, &[&s1], &[]));
    assert!(matches!(
        v.status,
        PairStatus::TauRigidPairOnly {
            summands: 1,
            simples: 3
        }
    ));

    let v = verify_support_pair(&pair(&a, &[], &[&s1]));
    assert!(matches!(
        v.status,
        PairStatus::Failed(PairFailure::NotProjective { .. })
    ));

    let v = verify_support_pair(&pair(&a, &[&sum(&[&s1, &simple(&a, 1)])], &[]));
    assert!(matches!(
        v.status,
        PairStatus::Failed(PairFailure::NotIndecomposable { .. })
    ));
}

#[test]
fn first_example_edges() {
    let e = fork();
    let (l, r) = (verified(&e.left), verified(&e.right));
    let x = classify_edge(&l, &r, 1, 2).unwrap();
    assert_eq!(x.flags()[..3], [false, false, true]);
    assert!(classify_edge(&l, &r, 0, 2).unwrap().holds(Condition::A));
    assert!(!classify_edge(&l, &r, 2, 2).unwrap().any());
}

#[test]
fn first_example_sets_and_matchings() {
    let e = fork();
    let (l, r) = (verified(&e.left), verified(&e.right));
    let f = compute_f_sets(&l, &r).unwrap();
    assert_eq!(one_based(&f.sets), vec![vec![1, 2, 3], vec![3], vec![1, 2]]);
    let g = restricted_sets(&f, &[Condition::C]);
    assert_eq!(one_based(&g), vec![vec![1, 2, 3], vec![], vec![1, 2]]);
    assert!(!hall_check(&g).is_satisfied());
    assert!(hall_check(&f.sets).is_satisfied());
    assert_eq!(restricted_sets(&f, &[]), f.sets);

    let all = all_matchings(&f.sets, 100, 10).unwrap();
    assert_eq!(all.permutations, vec![perm("(2 3)", 3), perm("(1 2 3)", 3)]);
    assert!(all.permutations.iter().all(|s| s.apply(0) != 2));
    let s = find_matching(&f).unwrap();
    assert!(all.permutations.contains(&s));
}

#[test]
fn swapped_example_restricted_union() {
    let e = fork_swapped();
    let f = compute_f_sets(&verified(&e.left), &verified(&e.right)).unwrap();
    let h = one_based(&restricted_sets(&f, &[Condition::D]));
    assert!(h.iter().all(|s| !s.contains(&2)));
    assert!(h[0].contains(&3) && h[1].contains(&1) && h[2].contains(&1));
    let HallCheck::Violated(rows) = hall_check(&restricted_sets(&f, &[Condition::D])) else {
        panic!("H sets admit a matching")
    };
    assert!(!rows.is_empty());
}

#[test]
fn two_cycle_example() {
    let e = two_cycle();
    let (l, r) = (verified(&e.left), verified(&e.right));
    assert!(classify_edge(&l, &r, 1, 0).unwrap().holds(Condition::D));
    assert!(classify_edge(&l, &r, 0, 1).unwrap().holds(Condition::C));
    let f = compute_f_sets(&l, &r).unwrap();
    assert_eq!(find_matching(&f).unwrap(), perm("(1 2)", 2));
}

#[test]
fn loop_example() {
    let e = loop_source();
    let f = compute_f_sets(&verified(&e.left), &verified(&e.right)).unwrap();
    assert_eq!(one_based(&f.sets), vec![vec![1, 2], vec![1, 2]]);
    let all = all_matchings(&f.sets, 100, 10).unwrap();
    assert!(all.permutations.contains(&Permutation::identity(2)));
}

#[test]
fn loop_at_sink_example() {
    let e = loop_sink();
    let f = compute_f_sets(&verified(&e.left), &verified(&e.right)).unwrap();
    assert_eq!(one_based(&f.sets)[0], vec![2]);
    let all = all_matchings(&f.sets, 100, 10).unwrap();
    assert_eq!(all.permutations, vec![perm("(1 2)", 2)]);
    assert_eq!(find_matching(&f).unwrap(), perm("(1 2)", 2));
}

#[test]
fn self_pairing_is_identity() {
    for e in examples() {
        let l = verified(&e.left);
        let f = compute_f_sets(&l, &l).unwrap();
        for i in 0..f.n() {
            assert!(f.label(i, i).holds(Condition::A));
        }
        assert!(find_matching(&f).unwrap().is_identity(), "example {}", e.name);
    }
}

#[test]
fn report_end_to_end() {
    let e = fork();
    let opts = ReportOptions {
        enumerate_all: true,
        drop: vec![Condition::C],
        ..Default::default()
    };
    let r = build_report(&e.left, &e.right, &opts).unwrap();
    assert_eq!(r.all.unwrap().permutations.len(), 2);
    assert!(r.matching.is_selection_of(&r.f.sets));
    assert!(!r.restricted.unwrap().hall.is_satisfied());
    for (i, c) in r.chosen.iter().enumerate() {
        assert_eq!(Some(*c), r.f.label(i, r.matching.apply(i)).primary());
    }

    let a = fork_alg();
    let s1 = simple(&a, 0);
    let bad = pair(&a, &[&s1], &[]);
    assert!(matches!(
        build_report(&bad, &e.right, &opts),
        Err(BijectionError::NotSupportTauTilting { .. })
    ));
}

#[test]
fn projectivity_of_corpus() {
    for a in algebras() {
        for i in 0..a.vertex_count() {
            assert!(is_projective(&projective(&a, i)));
        }
    }
    assert!(!is_projective(&simple(&loop_sink_alg(), 0)));
}
