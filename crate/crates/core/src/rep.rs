//! Representations of a bound quiver and the morphisms between them.

use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::linalg::{Matrix, Scalar};
use crate::quiver::BoundQuiverAlgebra;

/// Why a family of dimensions and matrices is not a representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    VertexCount {
        expected: usize,
        found: usize,
    },
    ArrowCount {
        expected: usize,
        found: usize,
    },
    Shape {
        arrow: usize,
        expected: (usize, usize),
        found: (usize, usize),
    },
    /// The relation with this index evaluates to a nonzero matrix.
    Relation {
        index: usize,
        evaluation: Matrix,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::VertexCount { expected, found } => {
                write!(f, "expected {expected} vertex dimensions, found {found}")
            }
            Violation::ArrowCount { expected, found } => {
                write!(f, "expected {expected} arrow matrices, found {found}")
            }
            Violation::Shape { arrow, expected, found } => write!(
                f,
                "arrow {arrow}: expected a {}x{} matrix, found {}x{}",
                expected.0, expected.1, found.0, found.1
            ),
            Violation::Relation { index, .. } => write!(f, "relation {index} does not vanish"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("invalid representation: {} violation(s)", .0.len())]
pub struct InvalidRepresentation(pub Vec<Violation>);

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("representations live over different algebras")]
pub struct AlgebraMismatch;

/// Checks matrix shapes and then the relations, stopping at the first
/// relation that fails.
pub fn validate(alg: &BoundQuiverAlgebra, dims: &[usize], maps: &[Matrix]) -> Result<(), Vec<Violation>> {
    let quiver = alg.quiver();
    let mut out = Vec::new();
    if dims.len() != quiver.vertex_count() {
        out.push(Violation::VertexCount {
            expected: quiver.vertex_count(),
            found: dims.len(),
        });
    }
    if maps.len() != quiver.arrows().len() {
        out.push(Violation::ArrowCount {
            expected: quiver.arrows().len(),
            found: maps.len(),
        });
    }
    if !out.is_empty() {
        return Err(out);
    }
    for (k, (a, m)) in quiver.arrows().iter().zip(maps).enumerate() {
        let expected = (dims[a.target], dims[a.source]);
        if m.shape() != expected {
            out.push(Violation::Shape {
                arrow: k,
                expected,
                found: m.shape(),
            });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }
    for (index, rel) in alg.relations().iter().enumerate() {
        let source = quiver.arrow(rel.terms[0].1[0]).source;
        let target = alg.path_target(source, &rel.terms[0].1);
        let mut sum = Matrix::zeros(dims[target], dims[source]);
        for (c, path) in &rel.terms {
            sum = sum.add(&eval_path(maps, dims, source, path).scale(c));
        }
        if !sum.is_zero() {
            return Err(vec![Violation::Relation { index, evaluation: sum }]);
        }
    }
    Ok(())
}

fn eval_path(maps: &[Matrix], dims: &[usize], source: usize, path: &[usize]) -> Matrix {
    let mut acc = Matrix::identity(dims[source]);
    for &a in path {
        acc = maps[a].mul(&acc);
    }
    acc
}

pub(crate) fn same_algebra(a: &Arc<BoundQuiverAlgebra>, b: &Arc<BoundQuiverAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// A finite-dimensional representation satisfying every relation of its algebra.
#[derive(Clone)]
pub struct Representation {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(
        algebra: &Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        maps: Vec<Matrix>,
    ) -> Result<Self, InvalidRepresentation> {
        validate(algebra, &dims, &maps).map_err(InvalidRepresentation)?;
        Ok(Representation {
            algebra: algebra.clone(),
            dims,
            maps,
        })
    }

    /// Skips validation in release builds; callers pass data that already satisfies the relations.
    pub(crate) fn from_parts(algebra: Arc<BoundQuiverAlgebra>, dims: Vec<usize>, maps: Vec<Matrix>) -> Self {
        debug_assert_eq!(validate(&algebra, &dims, &maps), Ok(()));
        Representation { algebra, dims, maps }
    }

    pub fn zero(algebra: &Arc<BoundQuiverAlgebra>) -> Self {
        let dims = vec![0; algebra.vertex_count()];
        let maps = algebra.quiver().arrows().iter().map(|_| Matrix::zeros(0, 0)).collect();
        Representation {
            algebra: algebra.clone(),
            dims,
            maps,
        }
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &Matrix {
        &self.maps[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    pub fn validate(&self) -> Result<(), Vec<Violation>> {
        validate(&self.algebra, &self.dims, &self.maps)
    }

    /// The linear map `M_source -> M_target` of a path starting at `source`.
    pub fn path_matrix(&self, source: usize, path: &[usize]) -> Matrix {
        eval_path(&self.maps, &self.dims, source, path)
    }

    pub fn oplus(&self, other: &Representation) -> Result<Representation, AlgebraMismatch> {
        direct_sum(&self.algebra, &[self, other])
    }
}

impl PartialEq for Representation {
    /// Literal equality of the data, not isomorphism.
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Representation")
            .field("dims", &self.dims)
            .field("maps", &self.maps)
            .finish()
    }
}

/// Block-diagonal sum; the empty list gives the zero representation.
pub fn direct_sum(
    algebra: &Arc<BoundQuiverAlgebra>,
    parts: &[&Representation],
) -> Result<Representation, AlgebraMismatch> {
    if parts.iter().any(|p| !same_algebra(algebra, &p.algebra)) {
        return Err(AlgebraMismatch);
    }
    let n = algebra.vertex_count();
    let dims = (0..n).map(|v| parts.iter().map(|p| p.dims[v]).sum()).collect();
    let maps = (0..algebra.quiver().arrows().len())
        .map(|a| Matrix::block_diag(&parts.iter().map(|p| &p.maps[a]).collect::<Vec<_>>()))
        .collect();
    Ok(Representation::from_parts(algebra.clone(), dims, maps))
}

/// A module homomorphism, given by one matrix per vertex.
#[derive(Clone, PartialEq, Eq)]
pub struct Morphism {
    components: Vec<Matrix>,
}

impl Morphism {
    pub fn new(components: Vec<Matrix>) -> Self {
        Morphism { components }
    }

    pub fn zero(source: &Representation, target: &Representation) -> Self {
        Morphism {
            components: source
                .dims
                .iter()
                .zip(&target.dims)
                .map(|(&s, &t)| Matrix::zeros(t, s))
                .collect(),
        }
    }

    pub fn identity(rep: &Representation) -> Self {
        Morphism {
            components: rep.dims.iter().map(|&d| Matrix::identity(d)).collect(),
        }
    }

    pub fn components(&self) -> &[Matrix] {
        &self.components
    }

    pub fn component(&self, vertex: usize) -> &Matrix {
        &self.components[vertex]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &Morphism) -> Morphism {
        Morphism {
            components: self
                .components
                .iter()
                .zip(&first.components)
                .map(|(g, f)| g.mul(f))
                .collect(),
        }
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism {
            components: self
                .components
                .iter()
                .zip(&other.components)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism {
            components: self.components.iter().map(|m| m.scale(c)).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Matrix::is_zero)
    }

    pub fn is_isomorphism(&self) -> bool {
        self.components.iter().all(Matrix::is_invertible)
    }

    /// Checks the commutation `φ_t M_a = N_a φ_s` for every arrow.
    pub fn is_homomorphism(&self, source: &Representation, target: &Representation) -> bool {
        source.algebra.quiver().arrows().iter().enumerate().all(|(k, a)| {
            let phi_s = &self.components[a.source];
            let phi_t = &self.components[a.target];
            phi_s.shape() == (target.dims[a.source], source.dims[a.source])
                && phi_t.shape() == (target.dims[a.target], source.dims[a.target])
                && phi_t.mul(&source.maps[k]) == target.maps[k].mul(phi_s)
        })
    }

    pub fn trace(&self) -> Scalar {
        self.components.iter().fold(Scalar::zero(), |acc, m| acc + m.trace())
    }
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_tuple("Morphism").field(&self.components).finish()
    }
}

/// A basis of `Hom_A(M, N)`.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub basis: Vec<Morphism>,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }
}

/// Solves the commutation system `φ_t M_a - N_a φ_s = 0` over all arrows.
///
/// Panics if the two representations live over different algebras.
pub fn hom_basis(m: &Representation, n: &Representation) -> HomSpace {
    assert!(same_algebra(&m.algebra, &n.algebra), "hom between different algebras");
    let nv = m.dims.len();
    let mut offsets = Vec::with_capacity(nv + 1);
    offsets.push(0);
    for v in 0..nv {
        offsets.push(offsets[v] + m.dims[v] * n.dims[v]);
    }
    let unknowns = offsets[nv];
    // φ_v[p][q] lives at offsets[v] + p * m.dims[v] + q
    let var = |v: usize, p: usize, q: usize| offsets[v] + p * m.dims[v] + q;

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (k, a) in m.algebra.quiver().arrows().iter().enumerate() {
        let (s, t) = (a.source, a.target);
        let ma = &m.maps[k];
        let na = &n.maps[k];
        for p in 0..n.dims[t] {
            for q in 0..m.dims[s] {
                let mut row = vec![Scalar::zero(); unknowns];
                for r in 0..m.dims[t] {
                    let c = &ma[(r, q)];
                    if !c.is_zero() {
                        row[var(t, p, r)] += c;
                    }
                }
                for r in 0..n.dims[s] {
                    let c = &na[(p, r)];
                    if !c.is_zero() {
                        row[var(s, r, q)] -= c;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = Matrix::from_rows(rows, unknowns).kernel_basis();
    let basis = (0..kernel.cols())
        .map(|j| {
            let components = (0..nv)
                .map(|v| {
                    let mut phi = Matrix::zeros(n.dims[v], m.dims[v]);
                    for p in 0..n.dims[v] {
                        for q in 0..m.dims[v] {
                            phi[(p, q)] = kernel[(var(v, p, q), j)].clone();
                        }
                    }
                    phi
                })
                .collect();
            Morphism { components }
        })
        .collect();
    HomSpace { basis }
}

pub fn hom_dim(m: &Representation, n: &Representation) -> usize {
    hom_basis(m, n).dim()
}

/// Restricts `rep` to the subspaces spanned by the columns of `bases`, which
/// must be independent and closed under every arrow. Returns the subrepresentation
/// and its inclusion.
pub(crate) fn sub_representation(rep: &Representation, bases: Vec<Matrix>) -> (Representation, Morphism) {
    let dims: Vec<usize> = bases.iter().map(Matrix::cols).collect();
    let maps = rep
        .algebra
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(k, a)| {
            let image = rep.maps[k].mul(&bases[a.source]);
            bases[a.target]
                .solve(&image)
                .expect("subspace is not closed under an arrow")
        })
        .collect();
    (
        Representation::from_parts(rep.algebra.clone(), dims, maps),
        Morphism { components: bases },
    )
}

/// Kernel of a morphism out of `source`, with its inclusion.
pub fn kernel(source: &Representation, f: &Morphism) -> (Representation, Morphism) {
    let bases = f.components.iter().map(Matrix::kernel_basis).collect();
    sub_representation(source, bases)
}

/// `rad M`: at each vertex, the sum of the images of the arrows ending there.
pub fn radical_submodule(m: &Representation) -> (Representation, Morphism) {
    let n = m.dims.len();
    let mut spans: Vec<Matrix> = m.dims.iter().map(|&d| Matrix::zeros(d, 0)).collect();
    for (k, a) in m.algebra.quiver().arrows().iter().enumerate() {
        spans[a.target] = spans[a.target].hstack(&m.maps[k]);
    }
    let bases = (0..n).map(|v| spans[v].column_space()).collect();
    sub_representation(m, bases)
}

/// Multiplicity of each simple in the top `M / rad M`.
pub fn top(m: &Representation) -> Vec<usize> {
    let (rad, _) = radical_submodule(m);
    m.dims.iter().zip(rad.dims()).map(|(d, r)| d - r).collect()
}
