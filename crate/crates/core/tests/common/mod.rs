#![allow(dead_code)]

use std::sync::Arc;

use taumatch_core::{
    injective, projective, simple, BoundQuiverAlgebra, Matrix, Quiver, Relation, Representation, SupportPair,
};

pub type Alg = Arc<BoundQuiverAlgebra>;

fn build(n: usize, arrows: &[(&str, usize, usize)], rels: &[&[&str]]) -> Alg {
    let q = Quiver::from_triples(n, arrows).unwrap();
    let rels = rels
        .iter()
        .map(|path| Relation::from_names(&q, &[(taumatch_core::scalar(1), path)]).unwrap())
        .collect();
    BoundQuiverAlgebra::build(q, rels).unwrap()
}

/// 1 -> 2, 1 -> 3, no relations.
pub fn fork_alg() -> Alg {
    build(3, &[("a", 0, 1), ("c", 0, 2)], &[])
}

/// 1 ⇄ 2 with both length-two paths zero.
pub fn two_cycle_alg() -> Alg {
    build(2, &[("a", 0, 1), ("b", 1, 0)], &[&["a", "b"], &["b", "a"]])
}

/// Loop a at 1, b: 1 -> 2, with a² = 0 and ba = 0.
pub fn loop_source_alg() -> Alg {
    build(2, &[("a", 0, 0), ("b", 0, 1)], &[&["a", "a"], &["a", "b"]])
}

/// a: 1 -> 2, loop b at 2, with ba = 0 and b² = 0.
pub fn loop_sink_alg() -> Alg {
    build(2, &[("a", 0, 1), ("b", 1, 1)], &[&["a", "b"], &["b", "b"]])
}

pub fn rep(alg: &Alg, dims: &[usize], maps: &[&[i64]]) -> Representation {
    let q = alg.quiver();
    let maps = q
        .arrows()
        .iter()
        .zip(maps)
        .map(|(a, e)| Matrix::from_i64(dims[a.target], dims[a.source], e))
        .collect();
    Representation::new(alg, dims.to_vec(), maps).unwrap()
}

/// The module 1/1 over the loop algebra: the loop is a nilpotent Jordan block.
pub fn m11(alg: &Alg) -> Representation {
    rep(alg, &[2, 0], &[&[0, 0, 1, 0], &[]])
}

pub fn sum(ms: &[&Representation]) -> Representation {
    taumatch_core::direct_sum(ms[0].algebra(), ms).unwrap()
}

pub struct Example {
    pub name: &'static str,
    pub alg: Alg,
    pub left: SupportPair,
    pub right: SupportPair,
}

pub fn pair(alg: &Alg, t: &[&Representation], p: &[&Representation]) -> SupportPair {
    SupportPair::new(
        alg,
        t.iter().map(|&m| m.clone()).collect(),
        p.iter().map(|&m| m.clone()).collect(),
    )
}

pub fn fork() -> Example {
    let a = fork_alg();
    let (s1, s2, s3) = (simple(&a, 0), simple(&a, 1), simple(&a, 2));
    let (i2, i3) = (injective(&a, 1), injective(&a, 2));
    Example {
        name: "fork",
        left: pair(&a, &[&s2, &i2], &[&s3]),
        right: pair(&a, &[&i3, &s1], &[&s2]),
        alg: a,
    }
}

pub fn fork_swapped() -> Example {
    let e = fork();
    Example {
        name: "fork swapped",
        alg: e.alg,
        left: e.right,
        right: e.left,
    }
}

pub fn two_cycle() -> Example {
    let a = two_cycle_alg();
    let (s1, s2) = (simple(&a, 0), simple(&a, 1));
    let (p1, p2) = (projective(&a, 0), projective(&a, 1));
    Example {
        name: "two-cycle",
        left: pair(&a, &[&s1], &[&p2]),
        right: pair(&a, &[&s2], &[&p1]),
        alg: a,
    }
}

pub fn loop_source() -> Example {
    let a = loop_source_alg();
    let s2 = simple(&a, 1);
    let p1 = projective(&a, 0);
    Example {
        name: "loop at source",
        left: pair(&a, &[&m11(&a)], &[&s2]),
        right: pair(&a, &[&s2], &[&p1]),
        alg: a,
    }
}

pub fn loop_sink() -> Example {
    let a = loop_sink_alg();
    let (p1, p2) = (projective(&a, 0), projective(&a, 1));
    let s1 = simple(&a, 0);
    Example {
        name: "loop at sink",
        left: pair(&a, &[&p1, &p2], &[]),
        right: pair(&a, &[&s1], &[&p2]),
        alg: a,
    }
}

pub fn examples() -> Vec<Example> {
    vec![fork(), fork_swapped(), two_cycle(), loop_source(), loop_sink()]
}

fn all_projectives(a: &Alg) -> Vec<Representation> {
    (0..a.vertex_count()).map(|i| projective(a, i)).collect()
}

/// Support τ-tilting pairs grouped by algebra.
pub fn pair_corpus() -> Vec<(Alg, Vec<SupportPair>)> {
    let mut out = Vec::new();
    let e = fork();
    let a = e.alg.clone();
    let ps = all_projectives(&a);
    let pr: Vec<&Representation> = ps.iter().collect();
    let (s1, i2, i3) = (simple(&a, 0), injective(&a, 1), injective(&a, 2));
    out.push((
        a.clone(),
        vec![
            e.left,
            e.right,
            pair(&a, &pr, &[]),
            pair(&a, &[], &pr),
            pair(&a, &[&s1, &i2, &i3], &[]),
        ],
    ));
    for e in [two_cycle(), loop_source(), loop_sink()] {
        let a = e.alg.clone();
        let ps = all_projectives(&a);
        let pr: Vec<&Representation> = ps.iter().collect();
        out.push((a.clone(), vec![e.left, e.right, pair(&a, &pr, &[]), pair(&a, &[], &pr)]));
    }
    out
}

/// Indecomposable modules used by the property suites, per algebra.
pub fn indecomposables(a: &Alg) -> Vec<Representation> {
    let n = a.vertex_count();
    let mut out: Vec<Representation> = Vec::new();
    for i in 0..n {
        out.push(simple(a, i));
        out.push(projective(a, i));
        out.push(injective(a, i));
    }
    if **a == *loop_source_alg() {
        out.push(m11(a));
        out.push(rep(a, &[1, 1], &[&[0], &[1]]));
    }
    let mut unique: Vec<Representation> = Vec::new();
    for m in out {
        if !unique.contains(&m) {
            unique.push(m);
        }
    }
    unique
}

/// Indecomposables plus a few decomposable sums and the zero module.
pub fn module_corpus(a: &Alg) -> Vec<Representation> {
    let ind = indecomposables(a);
    let mut out = ind.clone();
    out.push(sum(&[&ind[0], &ind[1]]));
    out.push(sum(&[&ind[0], &ind[0]]));
    out.push(Representation::zero(a));
    out
}

pub fn algebras() -> Vec<Alg> {
    vec![fork_alg(), two_cycle_alg(), loop_source_alg(), loop_sink_alg()]
}
