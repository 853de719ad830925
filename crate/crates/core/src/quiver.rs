//! Quivers, admissible relations and the bound quiver algebra `KQ/I`.
//!
//! Paths are stored as arrow-index sequences in application order: the
//! first arrow applied comes first. A relation written `ba` as a composition
//! (first `a`, then `b`) is therefore the path `[a, b]`.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use crate::linalg::{Matrix, Scalar};
use crate::rep::Representation;

pub const DEFAULT_MAX_PATH_LENGTH: usize = 64;

/// Hard ceiling on the number of paths enumerated while looking for the
/// vanishing degree. Quivers with several independent cycles and no killing
/// relations hit this long before the length cutoff.
const MAX_ENUMERATED_PATHS: usize = 200_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("quiver must have at least one vertex")]
    NoVertices,
    #[error("arrow `{name}` has an endpoint outside 1..={vertex_count}")]
    ArrowOutOfRange { name: String, vertex_count: usize },
    #[error("duplicate arrow name `{0}`")]
    DuplicateArrow(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("malformed relation {index}: {reason}")]
    MalformedRelation { index: usize, reason: &'static str },
    #[error("not finite dimensional: paths of length {max_path_length} do not all vanish")]
    NotFiniteDimensional { max_path_length: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// A finite quiver. Vertices are `0..vertex_count`; loops and parallel arrows are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertex_count: usize,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertex_count: usize, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        if vertex_count == 0 {
            return Err(AlgebraError::NoVertices);
        }
        for (k, a) in arrows.iter().enumerate() {
            if a.source >= vertex_count || a.target >= vertex_count {
                return Err(AlgebraError::ArrowOutOfRange {
                    name: a.name.clone(),
                    vertex_count,
                });
            }
            if arrows[..k].iter().any(|b| b.name == a.name) {
                return Err(AlgebraError::DuplicateArrow(a.name.clone()));
            }
        }
        Ok(Quiver { vertex_count, arrows })
    }

    /// Shorthand for tests and examples: `(name, source, target)` with 0-based vertices.
    pub fn from_triples(vertex_count: usize, arrows: &[(&str, usize, usize)]) -> Result<Self, AlgebraError> {
        Self::new(
            vertex_count,
            arrows
                .iter()
                .map(|&(name, source, target)| Arrow {
                    name: name.into(),
                    source,
                    target,
                })
                .collect(),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, index: usize) -> &Arrow {
        &self.arrows[index]
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    /// The quiver with every arrow reversed; names are kept.
    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertex_count: self.vertex_count,
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }
}

/// A linear combination of parallel paths, each of length at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub terms: Vec<(Scalar, Vec<usize>)>,
}

impl Relation {
    pub fn new(terms: Vec<(Scalar, Vec<usize>)>) -> Self {
        Relation { terms }
    }

    /// A single path set to zero.
    pub fn monomial(path: Vec<usize>) -> Self {
        Relation {
            terms: vec![(Scalar::one(), path)],
        }
    }

    /// Builds a relation from arrow names, each path in application order.
    pub fn from_names(quiver: &Quiver, terms: &[(Scalar, &[&str])]) -> Result<Self, AlgebraError> {
        let terms = terms
            .iter()
            .map(|(c, path)| {
                let idx = path
                    .iter()
                    .map(|n| {
                        quiver
                            .arrow_index(n)
                            .ok_or_else(|| AlgebraError::UnknownArrow((*n).into()))
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((c.clone(), idx))
            })
            .collect::<Result<Vec<_>, AlgebraError>>()?;
        Ok(Relation { terms })
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.iter().rev().copied().collect()))
                .collect(),
        }
    }
}

/// Path residues between one ordered pair of vertices.
#[derive(Debug, Clone, Default)]
struct Block {
    /// Basis paths, shortest first.
    basis: Vec<Vec<usize>>,
    /// Coordinates in `basis` of every path of length at most the nilpotency degree.
    normal_forms: BTreeMap<Vec<usize>, Vec<Scalar>>,
}

/// The finite-dimensional algebra `KQ/I` with an explicit path basis.
#[derive(Debug, Clone)]
pub struct BoundQuiverAlgebra {
    quiver: Quiver,
    relations: Vec<Relation>,
    max_path_length: usize,
    nilpotency_degree: usize,
    /// Indexed `[source][target]`.
    blocks: Vec<Vec<Block>>,
}

impl PartialEq for BoundQuiverAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.quiver == other.quiver && self.relations == other.relations
    }
}

impl Eq for BoundQuiverAlgebra {}

impl BoundQuiverAlgebra {
    pub fn build(quiver: Quiver, relations: Vec<Relation>) -> Result<Arc<Self>, AlgebraError> {
        Self::build_with_cutoff(quiver, relations, DEFAULT_MAX_PATH_LENGTH)
    }

    /// Finds the smallest `N` such that every path of length `N` lies in
    /// `I + R^(N+1)`, working in `KQ / R^(N+1)` for `N = 1, 2, ...`. For an
    /// admissible ideal this `N` is the nilpotency degree and the quotient by
    /// the truncated ideal is the algebra itself.
    pub fn build_with_cutoff(
        quiver: Quiver,
        relations: Vec<Relation>,
        max_path_length: usize,
    ) -> Result<Arc<Self>, AlgebraError> {
        let relations = relations
            .into_iter()
            .enumerate()
            .map(|(k, r)| normalize_relation(&quiver, k, r))
            .collect::<Result<Vec<_>, _>>()?;

        for degree in 1..=max_path_length {
            let paths =
                enumerate_paths(&quiver, degree).ok_or(AlgebraError::NotFiniteDimensional { max_path_length })?;
            if let Some(blocks) = reduce_degree(&quiver, &relations, &paths, degree) {
                return Ok(Arc::new(BoundQuiverAlgebra {
                    quiver,
                    relations,
                    max_path_length,
                    nilpotency_degree: degree,
                    blocks,
                }));
            }
        }
        Err(AlgebraError::NotFiniteDimensional { max_path_length })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count
    }

    pub fn max_path_length(&self) -> usize {
        self.max_path_length
    }

    /// Smallest `N` with every path of length `N` zero in the algebra.
    pub fn nilpotency_degree(&self) -> usize {
        self.nilpotency_degree
    }

    pub fn dim(&self) -> usize {
        self.blocks.iter().flatten().map(|b| b.basis.len()).sum()
    }

    /// Basis paths from `source` to `target`.
    pub fn basis(&self, source: usize, target: usize) -> &[Vec<usize>] {
        &self.blocks[source][target].basis
    }

    /// Endpoint of a path starting at `source`.
    pub fn path_target(&self, source: usize, path: &[usize]) -> usize {
        path.last().map_or(source, |&a| self.quiver.arrows[a].target)
    }

    /// Coordinates of a path in the basis of its `(source, target)` block.
    ///
    /// Panics if the path is not composable from `source`.
    pub fn normal_form(&self, source: usize, path: &[usize]) -> Vec<Scalar> {
        let target = self.path_target(source, path);
        let block = &self.blocks[source][target];
        if path.len() >= self.nilpotency_degree && !path.is_empty() {
            return vec![Scalar::zero(); block.basis.len()];
        }
        match block.normal_forms.get(path) {
            Some(v) => v.clone(),
            None => panic!("path {path:?} is not composable from vertex {source}"),
        }
    }

    /// The opposite algebra: arrows and relation paths reversed.
    pub fn opposite(&self) -> Result<Arc<Self>, AlgebraError> {
        Self::build_with_cutoff(
            self.quiver.opposite(),
            self.relations.iter().map(Relation::reversed).collect(),
            self.max_path_length,
        )
    }
}

fn normalize_relation(quiver: &Quiver, index: usize, rel: Relation) -> Result<Relation, AlgebraError> {
    let bad = |reason| AlgebraError::MalformedRelation { index, reason };
    let mut merged: BTreeMap<Vec<usize>, Scalar> = BTreeMap::new();
    let mut endpoints = None;
    for (c, path) in rel.terms {
        if path.len() < 2 {
            return Err(bad("every path must have length at least 2"));
        }
        if path.iter().any(|&a| a >= quiver.arrows.len()) {
            return Err(bad("arrow index out of range"));
        }
        if path
            .windows(2)
            .any(|w| quiver.arrows[w[0]].target != quiver.arrows[w[1]].source)
        {
            return Err(bad("path is not composable"));
        }
        let ends = (
            quiver.arrows[path[0]].source,
            quiver.arrows[*path.last().unwrap()].target,
        );
        match endpoints {
            None => endpoints = Some(ends),
            Some(e) if e != ends => return Err(bad("terms do not share source and target")),
            Some(_) => {}
        }
        *merged.entry(path).or_insert_with(Scalar::zero) += c;
    }
    let terms: Vec<_> = merged
        .into_iter()
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| (c, p))
        .collect();
    if terms.is_empty() {
        return Err(bad("no nonzero terms"));
    }
    Ok(Relation { terms })
}

/// All paths of length `<= max_len`, grouped by `(source, target)`, or
/// `None` if there are too many.
fn enumerate_paths(quiver: &Quiver, max_len: usize) -> Option<Vec<Vec<Vec<Vec<usize>>>>> {
    let n = quiver.vertex_count;
    let mut out = vec![vec![Vec::new(); n]; n];
    let mut frontier: Vec<(usize, Vec<usize>, usize)> = (0..n).map(|v| (v, Vec::new(), v)).collect();
    let mut total = 0usize;
    for len in 0..=max_len {
        for (s, p, t) in &frontier {
            out[*s][*t].push(p.clone());
        }
        total += frontier.len();
        if total > MAX_ENUMERATED_PATHS {
            return None;
        }
        if len == max_len {
            break;
        }
        let mut next = Vec::new();
        for (s, p, t) in &frontier {
            for (k, a) in quiver.arrows.iter().enumerate() {
                if a.source == *t {
                    let mut q = p.clone();
                    q.push(k);
                    next.push((*s, q, a.target));
                }
            }
        }
        frontier = next;
    }
    Some(out)
}

/// Computes `KQ/(I + R^(degree+1))` block by block; returns the blocks when
/// every path of length `degree` lies in the ideal.
fn reduce_degree(
    quiver: &Quiver,
    relations: &[Relation],
    paths: &[Vec<Vec<Vec<usize>>>],
    degree: usize,
) -> Option<Vec<Vec<Block>>> {
    let n = quiver.vertex_count;
    // Longest first, so that pivots (leading terms) are long paths and short
    // paths, including all trivial paths and arrows, stay in the basis.
    let columns: Vec<Vec<Vec<Vec<usize>>>> = paths
        .iter()
        .map(|row| {
            row.iter()
                .map(|ps| {
                    let mut ps = ps.clone();
                    ps.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
                    ps
                })
                .collect()
        })
        .collect();
    let col_index: Vec<Vec<BTreeMap<&[usize], usize>>> = columns
        .iter()
        .map(|row| {
            row.iter()
                .map(|ps| ps.iter().enumerate().map(|(k, p)| (p.as_slice(), k)).collect())
                .collect()
        })
        .collect();

    // Spanning set of the ideal image: u * r * v truncated at `degree`.
    let mut generators: Vec<Vec<Vec<Vec<Scalar>>>> = vec![vec![Vec::new(); n]; n];
    for rel in relations {
        let min_len = rel.terms.iter().map(|(_, p)| p.len()).min().unwrap_or(0);
        if min_len > degree {
            continue;
        }
        let first = &rel.terms[0].1;
        let rs = quiver.arrows[first[0]].source;
        let rt = quiver.arrows[*first.last().unwrap()].target;
        let slack = degree - min_len;
        for s in 0..n {
            for u in paths[s][rs].iter().filter(|u| u.len() <= slack) {
                for t in 0..n {
                    for v in paths[rt][t].iter().filter(|v| u.len() + v.len() <= slack) {
                        let mut row = vec![Scalar::zero(); columns[s][t].len()];
                        for (c, p) in &rel.terms {
                            if u.len() + p.len() + v.len() > degree {
                                continue;
                            }
                            let mut w = u.clone();
                            w.extend_from_slice(p);
                            w.extend_from_slice(v);
                            row[col_index[s][t][w.as_slice()]] += c;
                        }
                        if row.iter().any(|x| !x.is_zero()) {
                            generators[s][t].push(row);
                        }
                    }
                }
            }
        }
    }

    let mut blocks = vec![vec![Block::default(); n]; n];
    for s in 0..n {
        for t in 0..n {
            let cols = &columns[s][t];
            let gens = core::mem::take(&mut generators[s][t]);
            let rref = Matrix::from_rows(gens, cols.len()).rref();
            let pivot_row: BTreeMap<usize, usize> = rref.pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
            let mut free: Vec<usize> = (0..cols.len()).filter(|c| !pivot_row.contains_key(c)).collect();
            // Basis shortest first.
            free.sort_by(|&a, &b| cols[a].len().cmp(&cols[b].len()).then_with(|| cols[a].cmp(&cols[b])));
            let free_pos: BTreeMap<usize, usize> = free.iter().enumerate().map(|(k, &c)| (c, k)).collect();

            let mut normal_forms = BTreeMap::new();
            for (c, path) in cols.iter().enumerate() {
                let mut coords = vec![Scalar::zero(); free.len()];
                if let Some(&k) = free_pos.get(&c) {
                    coords[k] = Scalar::one();
                } else {
                    let r = pivot_row[&c];
                    for (&f, &k) in &free_pos {
                        coords[k] = -rref.matrix[(r, f)].clone();
                    }
                }
                if path.len() == degree && coords.iter().any(|x| !x.is_zero()) {
                    return None;
                }
                normal_forms.insert(path.clone(), coords);
            }
            let basis = free.iter().map(|&c| cols[c].clone()).collect();
            blocks[s][t] = Block { basis, normal_forms };
        }
    }
    Some(blocks)
}

/// Shorthand names for the distinguished modules, as used in workspace files (`P1`, `I2`, `S3`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ModuleKind {
    Projective,
    Injective,
    Simple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexLabeledModuleName {
    pub kind: ModuleKind,
    /// 0-based.
    pub vertex: usize,
}

impl VertexLabeledModuleName {
    /// Parses `P<i>`, `I<i>` or `S<i>` with a 1-based vertex in range.
    pub fn parse(s: &str, vertex_count: usize) -> Option<Self> {
        let mut chars = s.chars();
        let kind = match chars.next()? {
            'P' => ModuleKind::Projective,
            'I' => ModuleKind::Injective,
            'S' => ModuleKind::Simple,
            _ => return None,
        };
        let digits = chars.as_str();
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return None;
        }
        let v: usize = digits.parse().ok()?;
        (1..=vertex_count)
            .contains(&v)
            .then_some(VertexLabeledModuleName { kind, vertex: v - 1 })
    }

    pub fn build(&self, alg: &Arc<BoundQuiverAlgebra>) -> Representation {
        match self.kind {
            ModuleKind::Projective => projective(alg, self.vertex),
            ModuleKind::Injective => injective(alg, self.vertex),
            ModuleKind::Simple => simple(alg, self.vertex),
        }
    }
}

impl core::fmt::Display for VertexLabeledModuleName {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        let c = match self.kind {
            ModuleKind::Projective => 'P',
            ModuleKind::Injective => 'I',
            ModuleKind::Simple => 'S',
        };
        write!(f, "{c}{}", self.vertex + 1)
    }
}

/// `A e_i`: basis at `v` is the basis paths `i -> v`, arrows act by appending.
pub fn projective(alg: &Arc<BoundQuiverAlgebra>, i: usize) -> Representation {
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| alg.basis(i, v).len()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let cols: Vec<Vec<Scalar>> = alg
                .basis(i, a.source)
                .iter()
                .map(|p| {
                    let mut q = p.clone();
                    q.push(k);
                    alg.normal_form(i, &q)
                })
                .collect();
            Matrix::from_columns(&cols, dims[a.target])
        })
        .collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

/// `D(e_i A)`: basis at `v` is dual to the basis paths `v -> i`; an arrow
/// `a: v -> w` sends a functional `f` to `q |-> f(a q)`.
pub fn injective(alg: &Arc<BoundQuiverAlgebra>, i: usize) -> Representation {
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| alg.basis(v, i).len()).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let rows: Vec<Vec<Scalar>> = alg
                .basis(a.target, i)
                .iter()
                .map(|q| {
                    let mut p = vec![k];
                    p.extend_from_slice(q);
                    alg.normal_form(a.source, &p)
                })
                .collect();
            Matrix::from_rows(rows, dims[a.source])
        })
        .collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

pub fn simple(alg: &Arc<BoundQuiverAlgebra>, i: usize) -> Representation {
    let n = alg.vertex_count();
    let dims: Vec<usize> = (0..n).map(|v| usize::from(v == i)).collect();
    let maps = alg
        .quiver()
        .arrows()
        .iter()
        .map(|a| Matrix::zeros(dims[a.target], dims[a.source]))
        .collect();
    Representation::from_parts(alg.clone(), dims, maps)
}

/// Transposes every arrow matrix of `m`, producing a representation over
/// `target_alg`, which must be the opposite of `m`'s algebra.
pub fn dual_rep(target_alg: &Arc<BoundQuiverAlgebra>, m: &Representation) -> Representation {
    debug_assert_eq!(target_alg.quiver(), &m.algebra().quiver().opposite());
    Representation::from_parts(
        target_alg.clone(),
        m.dims().to_vec(),
        m.maps().iter().map(Matrix::transpose).collect(),
    )
}
