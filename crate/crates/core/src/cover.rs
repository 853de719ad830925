//! Sums of standard projectives, maps between them, projective covers and
//! minimal projective presentations, and the Nakayama functor on them.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use crate::linalg::{Matrix, Scalar};
use crate::quiver::{injective, projective, BoundQuiverAlgebra};
use crate::rep::{direct_sum, kernel, radical_submodule, Morphism, Representation};

/// `P(v_1) ⊕ ... ⊕ P(v_k)`, listed by vertex.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct ProjectiveSum {
    pub vertices: Vec<usize>,
}

impl ProjectiveSum {
    pub fn new(vertices: Vec<usize>) -> Self {
        ProjectiveSum { vertices }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn projective_representation(&self, alg: &Arc<BoundQuiverAlgebra>) -> Representation {
        let parts: Vec<_> = self.vertices.iter().map(|&v| projective(alg, v)).collect();
        direct_sum(alg, &parts.iter().collect::<Vec<_>>()).expect("same algebra")
    }

    /// `ν` of the sum: `I(v_1) ⊕ ... ⊕ I(v_k)`.
    pub fn injective_representation(&self, alg: &Arc<BoundQuiverAlgebra>) -> Representation {
        let parts: Vec<_> = self.vertices.iter().map(|&v| injective(alg, v)).collect();
        direct_sum(alg, &parts.iter().collect::<Vec<_>>()).expect("same algebra")
    }

    /// Start of each summand's block in the basis of `P_w`, plus the total.
    fn projective_offsets(&self, alg: &BoundQuiverAlgebra, w: usize) -> Vec<usize> {
        offsets(self.vertices.iter().map(|&v| alg.basis(v, w).len()))
    }

    /// Same for the injective sum at vertex `w`.
    fn injective_offsets(&self, alg: &BoundQuiverAlgebra, w: usize) -> Vec<usize> {
        offsets(self.vertices.iter().map(|&v| alg.basis(w, v).len()))
    }
}

fn offsets(sizes: impl Iterator<Item = usize>) -> Vec<usize> {
    let mut out = vec![0];
    for s in sizes {
        out.push(out.last().unwrap() + s);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("not presented as a sum of standard projectives")]
pub struct NotStandardProjective;

/// A homomorphism `⊕ P(i_k) -> ⊕ P(j_l)`. A map `P(i) -> P(j)` is determined
/// by the image of `e_i`, an element of the span of paths `j -> i`;
/// `blocks[l][k]` holds those coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectiveMap {
    pub source: ProjectiveSum,
    pub target: ProjectiveSum,
    pub blocks: Vec<Vec<Vec<Scalar>>>,
}

impl ProjectiveMap {
    /// Reads generator images off a morphism between the standard representations.
    pub fn from_morphism(
        alg: &Arc<BoundQuiverAlgebra>,
        source: &ProjectiveSum,
        target: &ProjectiveSum,
        f: &Morphism,
    ) -> Result<Self, NotStandardProjective> {
        let n = alg.vertex_count();
        if f.components().len() != n {
            return Err(NotStandardProjective);
        }
        for w in 0..n {
            let rows = *target.projective_offsets(alg, w).last().unwrap();
            let cols = *source.projective_offsets(alg, w).last().unwrap();
            if f.component(w).shape() != (rows, cols) {
                return Err(NotStandardProjective);
            }
        }
        let blocks = target
            .vertices
            .iter()
            .enumerate()
            .map(|(l, &j)| {
                source
                    .vertices
                    .iter()
                    .enumerate()
                    .map(|(k, &i)| {
                        // e_i is the first basis path of block (i, i)
                        let col = source.projective_offsets(alg, i)[k];
                        let row0 = target.projective_offsets(alg, i)[l];
                        (0..alg.basis(j, i).len())
                            .map(|r| f.component(i)[(row0 + r, col)].clone())
                            .collect()
                    })
                    .collect()
            })
            .collect();
        let map = ProjectiveMap {
            source: source.clone(),
            target: target.clone(),
            blocks,
        };
        if &map.to_morphism(alg) != f {
            return Err(NotStandardProjective);
        }
        Ok(map)
    }

    pub fn zero(source: ProjectiveSum, target: ProjectiveSum, alg: &BoundQuiverAlgebra) -> Self {
        let blocks = target
            .vertices
            .iter()
            .map(|&j| {
                source
                    .vertices
                    .iter()
                    .map(|&i| vec![Scalar::zero(); alg.basis(j, i).len()])
                    .collect()
            })
            .collect();
        ProjectiveMap { source, target, blocks }
    }

    /// The morphism between the standard representations: a path `p` out of
    /// `i_k` goes to `Σ_l x_lk · p`.
    pub fn to_morphism(&self, alg: &Arc<BoundQuiverAlgebra>) -> Morphism {
        let n = alg.vertex_count();
        let components = (0..n)
            .map(|w| {
                let rows = self.target.projective_offsets(alg, w);
                let cols = self.source.projective_offsets(alg, w);
                let mut m = Matrix::zeros(*rows.last().unwrap(), *cols.last().unwrap());
                for (k, &i) in self.source.vertices.iter().enumerate() {
                    for (pi, p) in alg.basis(i, w).iter().enumerate() {
                        for (l, &j) in self.target.vertices.iter().enumerate() {
                            let x = &self.blocks[l][k];
                            for (r, path) in alg.basis(j, i).iter().enumerate() {
                                if x[r].is_zero() {
                                    continue;
                                }
                                let mut q = path.clone();
                                q.extend_from_slice(p);
                                for (t, c) in alg.normal_form(j, &q).into_iter().enumerate() {
                                    if !c.is_zero() {
                                        m[(rows[l] + t, cols[k] + pi)] += &x[r] * c;
                                    }
                                }
                            }
                        }
                    }
                }
                m
            })
            .collect();
        Morphism::new(components)
    }
}

/// `ν f: ν(source) -> ν(target)` for a map between sums of standard projectives.
#[derive(Debug, Clone)]
pub struct NakayamaImage {
    pub source: Representation,
    pub target: Representation,
    pub map: Morphism,
}

/// Applies `ν = D Hom_A(-, A)` to a map of projectives. On `P(i) -> P(j)`
/// given by `x`, the image `I(i) -> I(j)` sends a functional `f` to `q |-> f(q x)`.
pub fn nakayama(alg: &Arc<BoundQuiverAlgebra>, f: &ProjectiveMap) -> NakayamaImage {
    let n = alg.vertex_count();
    let components = (0..n)
        .map(|v| {
            let rows = f.target.injective_offsets(alg, v);
            let cols = f.source.injective_offsets(alg, v);
            let mut m = Matrix::zeros(*rows.last().unwrap(), *cols.last().unwrap());
            for (l, &j) in f.target.vertices.iter().enumerate() {
                for (qi, q) in alg.basis(v, j).iter().enumerate() {
                    for (k, &i) in f.source.vertices.iter().enumerate() {
                        let x = &f.blocks[l][k];
                        for (r, path) in alg.basis(j, i).iter().enumerate() {
                            if x[r].is_zero() {
                                continue;
                            }
                            let mut qx = q.clone();
                            qx.extend_from_slice(path);
                            for (p, c) in alg.normal_form(v, &qx).into_iter().enumerate() {
                                if !c.is_zero() {
                                    m[(rows[l] + qi, cols[k] + p)] += &x[r] * c;
                                }
                            }
                        }
                    }
                }
            }
            m
        })
        .collect();
    NakayamaImage {
        source: f.source.injective_representation(alg),
        target: f.target.injective_representation(alg),
        map: Morphism::new(components),
    }
}

/// A projective cover `P0 -> M` with its kernel.
#[derive(Debug, Clone)]
pub struct ProjectiveCover {
    pub generators: ProjectiveSum,
    /// The chosen top vector in `M_v` for each generator.
    pub top_vectors: Vec<Vec<Scalar>>,
    pub cover: Representation,
    pub map: Morphism,
    pub kernel: Representation,
    pub kernel_inclusion: Morphism,
}

impl ProjectiveCover {
    /// Minimality: the kernel sits inside `rad P0`.
    pub fn kernel_in_radical(&self) -> bool {
        let (_, rad_inc) = radical_submodule(&self.cover);
        self.kernel_inclusion
            .components()
            .iter()
            .zip(rad_inc.components())
            .all(|(k, r)| r.solve(k).is_ok())
    }
}

/// Generators are chosen vertex by vertex: standard basis vectors of `M_v`
/// are taken in order whenever they are independent of `rad M` and the
/// vectors already chosen.
pub fn projective_cover_map(m: &Representation) -> ProjectiveCover {
    let alg = m.algebra();
    let (_, rad_inc) = radical_submodule(m);
    let mut vertices = Vec::new();
    let mut top_vectors = Vec::new();
    for v in 0..alg.vertex_count() {
        let d = m.dims()[v];
        let mut span = rad_inc.component(v).clone();
        let mut rank = span.cols();
        for e in 0..d {
            let mut unit = vec![Scalar::zero(); d];
            unit[e] = Scalar::from_integer(1.into());
            let candidate = span.hstack(&Matrix::column(unit.clone()));
            let r = candidate.rank();
            if r > rank {
                span = candidate;
                rank = r;
                vertices.push(v);
                top_vectors.push(unit);
            }
        }
    }
    let generators = ProjectiveSum::new(vertices);
    let cover = generators.projective_representation(alg);
    let components = (0..alg.vertex_count())
        .map(|w| {
            let cols: Vec<Vec<Scalar>> = generators
                .vertices
                .iter()
                .zip(&top_vectors)
                .flat_map(|(&v, top)| alg.basis(v, w).iter().map(move |p| m.path_matrix(v, p).mul_vec(top)))
                .collect();
            Matrix::from_columns(&cols, m.dims()[w])
        })
        .collect();
    let map = Morphism::new(components);
    debug_assert!(map.is_homomorphism(&cover, m));
    let (kernel_rep, kernel_inclusion) = kernel(&cover, &map);
    ProjectiveCover {
        generators,
        top_vectors,
        cover,
        map,
        kernel: kernel_rep,
        kernel_inclusion,
    }
}

/// `P1 -> P0 -> M -> 0` with both maps minimal.
#[derive(Debug, Clone)]
pub struct MinimalPresentation {
    pub p0: ProjectiveSum,
    pub p1: ProjectiveSum,
    pub map: ProjectiveMap,
    pub cover: ProjectiveCover,
}

pub fn minimal_projective_presentation(m: &Representation) -> MinimalPresentation {
    let alg = m.algebra();
    let cover = projective_cover_map(m);
    let syzygy_cover = projective_cover_map(&cover.kernel);
    let composite = cover.kernel_inclusion.after(&syzygy_cover.map);
    let p0 = cover.generators.clone();
    let p1 = syzygy_cover.generators.clone();
    let map = ProjectiveMap::from_morphism(alg, &p1, &p0, &composite)
        .expect("composite of cover maps is a map of standard projectives");
    MinimalPresentation { p0, p1, map, cover }
}

/// `M` is projective iff its projective cover is injective, i.e. has zero kernel.
pub fn is_projective(m: &Representation) -> bool {
    projective_cover_map(m).kernel.is_zero()
}
