//! Properties checked over every module and pair in the corpus.

mod common;

use common::*;
use taumatch_core::cover::projective_cover_map;
use taumatch_core::endo::{is_isomorphic, Indecomposable};
use taumatch_core::tau::is_tau_rigid_pair;
use taumatch_core::*;

fn verified_corpus() -> Vec<(Alg, Vec<VerifiedPair>)> {
    pair_corpus()
        .into_iter()
        .map(|(a, ps)| {
            let v = ps
                .iter()
                .map(|p| {
                    let v = verify_support_pair(p);
                    assert!(v.status.is_support_tau_tilting(), "{:?}", v.status);
                    v.verified.unwrap()
                })
                .collect();
            (a, v)
        })
        .collect()
}

fn certify(m: &Representation) -> Indecomposable {
    Indecomposable::certify(m.clone()).unwrap()
}

#[test]
fn corpus_has_enough_pairs() {
    let total: usize = pair_corpus().iter().map(|(_, p)| p.len()).sum();
    assert!(total >= 6);
}

#[test]
fn hom_from_projectives_and_into_injectives_count_dimensions() {
    for a in algebras() {
        for m in module_corpus(&a) {
            for i in 0..a.vertex_count() {
                assert_eq!(hom_dim(&projective(&a, i), &m), m.dims()[i]);
                assert_eq!(hom_dim(&m, &injective(&a, i)), m.dims()[i]);
            }
        }
    }
}

#[test]
fn hom_is_additive() {
    for a in algebras() {
        let ms = module_corpus(&a);
        for x in &ms {
            for y in &ms {
                let xy = sum(&[x, y]);
                for l in ms.iter().take(6) {
                    assert_eq!(hom_dim(&xy, l), hom_dim(x, l) + hom_dim(y, l));
                    assert_eq!(hom_dim(l, &xy), hom_dim(l, x) + hom_dim(l, y));
                }
            }
        }
    }
}

#[test]
fn hom_bases_are_homomorphisms() {
    for a in algebras() {
        let ms = module_corpus(&a);
        for x in &ms {
            for y in &ms {
                for f in hom_basis(x, y).basis {
                    assert!(f.is_homomorphism(x, y));
                }
            }
        }
    }
}

#[test]
fn isomorphism_is_reflexive_symmetric_and_invariant() {
    for a in algebras() {
        let ind = indecomposables(&a);
        let ms = module_corpus(&a);
        for x in &ind {
            assert!(is_isomorphic(x, x).unwrap());
            for y in &ind {
                let xy = is_isomorphic(x, y).unwrap();
                assert_eq!(xy, is_isomorphic(y, x).unwrap());
                if xy {
                    assert_eq!(x.dims(), y.dims());
                    for l in &ms {
                        assert_eq!(hom_dim(x, l), hom_dim(y, l));
                    }
                }
            }
        }
    }
}

#[test]
fn cover_kernels_lie_in_radical() {
    for a in algebras() {
        for m in module_corpus(&a) {
            if !m.is_zero() {
                assert!(projective_cover_map(&m).kernel_in_radical());
            }
        }
    }
}

#[test]
fn tau_vanishes_exactly_on_projectives() {
    for a in algebras() {
        let ps: Vec<Indecomposable> = (0..a.vertex_count()).map(|i| certify(&projective(&a, i))).collect();
        for m in indecomposables(&a) {
            let is_proj = ps.iter().any(|p| p.is_isomorphic(&certify(&m)));
            let t = tau(&m).translate;
            assert_eq!(t.is_zero(), is_proj);
            t.validate().unwrap();
        }
    }
}

#[test]
fn inverse_translate_undoes_translate() {
    for a in algebras() {
        for m in indecomposables(&a) {
            let t = tau(&m).translate;
            if t.is_zero() {
                continue;
            }
            let tc = certify(&t);
            let back = tau_minus(tc.representation()).unwrap();
            assert!(certify(&back).is_isomorphic(&certify(&m)));
        }
    }
}

/// Every basic τ-rigid pair built from corpus indecomposables has at most n summands.
#[test]
fn summand_bound() {
    for a in algebras() {
        let n = a.vertex_count();
        let ind = indecomposables(&a);
        let projs: Vec<Representation> = (0..n).map(|i| projective(&a, i)).collect();
        let k = ind.len();
        for mask in 1u32..(1 << k) {
            let t: Vec<Representation> = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| ind[b].clone()).collect();
            for pmask in 0u32..(1 << n) {
                let p: Vec<Representation> = (0..n)
                    .filter(|b| pmask >> b & 1 == 1)
                    .map(|b| projs[b].clone())
                    .collect();
                if t.len() + p.len() <= n {
                    continue;
                }
                let v = verify_support_pair(&SupportPair::new(&a, t.clone(), p));
                assert!(
                    !v.status.is_tau_rigid_pair(),
                    "accepted a pair with more than {n} summands"
                );
            }
        }
    }
}

/// Adding a corpus indecomposable to a support τ-tilting pair without breaking
/// τ-rigidity forces it into add T.
#[test]
fn completion_is_maximal() {
    for (a, pairs) in verified_corpus() {
        let ind = indecomposables(&a);
        for pair in &pairs {
            for x in &ind {
                let tx = pair.t_sum().oplus(x).unwrap();
                let rigid_pair = is_tau_rigid_pair(&tx, pair.p_sum()).unwrap().is_none();
                if !rigid_pair {
                    continue;
                }
                let xc = certify(x);
                let in_add_t = (0..pair.t_len()).any(|i| pair.summand(i).is_isomorphic(&xc));
                assert!(in_add_t, "X with (T ⊕ X, P) τ-rigid is not in add T");
            }
        }
    }
}

/// Same, specialized to pairs with `P = 0`, where only τ-rigidity of `T ⊕ X` matters.
#[test]
fn completion_is_maximal_for_tilting_modules() {
    for (a, pairs) in verified_corpus() {
        let ind = indecomposables(&a);
        for pair in pairs.iter().filter(|p| p.projective_vertices().is_empty()) {
            for x in &ind {
                let tx = pair.t_sum().oplus(x).unwrap();
                if !is_tau_rigid(&tx).is_rigid() {
                    continue;
                }
                let xc = certify(x);
                assert!((0..pair.len()).any(|i| pair.summand(i).is_isomorphic(&xc)));
            }
        }
    }
}

#[test]
fn matchings_exist_between_all_pairs() {
    for (_, pairs) in verified_corpus() {
        for l in &pairs {
            for r in &pairs {
                let f = compute_f_sets(l, r).unwrap();
                assert!(f.sets.iter().all(|s| !s.is_empty()));
                let s = find_matching(&f).unwrap();
                for i in 0..f.n() {
                    assert!(f.label(i, s.apply(i)).any());
                }
                let all = all_matchings(&f.sets, 10_000, 10).unwrap();
                assert!(!all.truncated);
                assert!(all.permutations.contains(&s));
                assert!(all.permutations.iter().all(|p| p.is_selection_of(&f.sets)));
                let mut sorted = all.permutations.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted, all.permutations);
            }
        }
    }
}

#[test]
fn candidate_sets_are_transpose_symmetric() {
    for (_, pairs) in verified_corpus() {
        for l in &pairs {
            for r in &pairs {
                let f = compute_f_sets(l, r).unwrap();
                let g = compute_f_sets(r, l).unwrap();
                for i in 0..f.n() {
                    for j in 0..f.n() {
                        assert_eq!(f.contains(i, j), g.contains(j, i));
                    }
                }
            }
        }
    }
}

#[test]
fn projective_conditions_involve_projective_summands() {
    for (_, pairs) in verified_corpus() {
        for l in &pairs {
            for r in &pairs {
                let f = compute_f_sets(l, r).unwrap();
                for i in 0..f.n() {
                    for j in 0..f.n() {
                        let e = f.label(i, j);
                        if e.holds(Condition::C) {
                            assert!(r.in_p(j));
                        }
                        if e.holds(Condition::D) {
                            assert!(l.in_p(i));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn pairs_over_different_algebras_are_refused() {
    let c = verified_corpus();
    let (l, r) = (&c[0].1[0], &c[1].1[0]);
    assert!(matches!(compute_f_sets(l, r), Err(BijectionError::AlgebraMismatch)));
}
