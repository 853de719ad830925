//! Endomorphism rings: Jacobson radical, locality, and the isomorphism test
//! for modules with local endomorphism ring.

use alloc::vec::Vec;
use core::ops::Deref;

use num_traits::Zero;

use crate::linalg::{Matrix, Scalar};
use crate::poly;
use crate::rep::{hom_basis, Morphism, Representation};

/// Three-valued verdict for locality of `End(M)`, hence indecomposability of `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Locality {
    Yes,
    No,
    Undetermined,
}

#[derive(Debug, Clone)]
pub struct EndAlgebraInfo {
    pub dimension: usize,
    pub radical_dimension: usize,
    pub local: Locality,
    /// A nontrivial idempotent when `local` is `No` and the module is nonzero.
    pub idempotent: Option<Morphism>,
}

/// Computes `End(M)` and its radical.
///
/// The radical is `{x : tr(xy) = 0 for all y in End(M)}` with the trace taken
/// on the total space of `M`. End(M) acts faithfully there and we are in
/// characteristic zero, so this is exactly the Jacobson radical.
pub fn end_info(m: &Representation) -> EndAlgebraInfo {
    let basis = hom_basis(m, m).basis;
    let k = basis.len();
    if k == 0 {
        return EndAlgebraInfo {
            dimension: 0,
            radical_dimension: 0,
            local: Locality::No,
            idempotent: None,
        };
    }
    let mut gram = Matrix::zeros(k, k);
    for i in 0..k {
        for j in i..k {
            let t = basis[i].after(&basis[j]).trace();
            gram[(i, j)] = t.clone();
            gram[(j, i)] = t;
        }
    }
    let radical_dimension = k - gram.rank();
    if k - radical_dimension == 1 {
        return EndAlgebraInfo {
            dimension: k,
            radical_dimension,
            local: Locality::Yes,
            idempotent: None,
        };
    }
    let idempotent = find_idempotent(m, &basis);
    EndAlgebraInfo {
        dimension: k,
        radical_dimension,
        local: if idempotent.is_some() {
            Locality::No
        } else {
            Locality::Undetermined
        },
        idempotent,
    }
}

/// Looks for an element `x` with a rational eigenvalue `λ` such that
/// `x - λ` is neither nilpotent nor invertible; the Fitting decomposition of
/// `x - λ` then gives a nontrivial idempotent. Tries basis elements and
/// pairwise sums.
fn find_idempotent(m: &Representation, basis: &[Morphism]) -> Option<Morphism> {
    let k = basis.len();
    let singles = basis.iter().cloned();
    let pairs = (0..k)
        .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
        .map(|(i, j)| basis[i].add(&basis[j]));
    for x in singles.chain(pairs) {
        let mut eigenvalues: Vec<Scalar> = Vec::new();
        for c in x.components().iter().filter(|c| c.rows() > 0) {
            let Some(roots) = poly::rational_roots(&poly::char_poly(c)) else {
                continue;
            };
            for r in roots {
                if !eigenvalues.contains(&r) {
                    eigenvalues.push(r);
                }
            }
        }
        for lambda in eigenvalues {
            if let Some(e) = fitting_projection(m, &x, &lambda) {
                return Some(e);
            }
        }
    }
    None
}

/// Projection onto the generalized `λ`-eigenspace of `x` along the rest, if
/// both parts are nonzero.
fn fitting_projection(m: &Representation, x: &Morphism, lambda: &Scalar) -> Option<Morphism> {
    let total = m.total_dim() as u32;
    let mut kernel_dim = 0;
    let mut parts = Vec::new();
    for (v, c) in x.components().iter().enumerate() {
        let d = m.dims()[v];
        let shifted = c.sub(&Matrix::identity(d).scale(lambda)).pow(total);
        let ker = shifted.kernel_basis();
        let img = shifted.column_space();
        kernel_dim += ker.cols();
        parts.push((ker, img));
    }
    if kernel_dim == 0 || kernel_dim == m.total_dim() {
        return None;
    }
    let components = parts
        .into_iter()
        .map(|(ker, img)| {
            let d = ker.rows();
            let change = ker.hstack(&img);
            let mut diag = Matrix::zeros(d, d);
            for i in 0..ker.cols() {
                diag[(i, i)] = Scalar::from_integer(1.into());
            }
            let inv = change.inverse().expect("Fitting decomposition is a direct sum");
            change.mul(&diag).mul(&inv)
        })
        .collect();
    let e = Morphism::new(components);
    debug_assert!(e.after(&e) == e && e.is_homomorphism(m, m));
    Some(e)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("zero module")]
pub struct ZeroModule;

/// Indecomposability verdict via locality of the endomorphism ring.
pub fn is_indecomposable(m: &Representation) -> Result<Locality, ZeroModule> {
    if m.is_zero() {
        return Err(ZeroModule);
    }
    Ok(end_info(m).local)
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum CertifyError {
    #[error("zero module")]
    ZeroModule,
    #[error("module is decomposable")]
    Decomposable(Morphism),
    #[error("indecomposability undetermined over the rationals")]
    Undetermined,
}

/// A representation whose endomorphism ring has been certified local.
#[derive(Debug, Clone, PartialEq)]
pub struct Indecomposable {
    rep: Representation,
    end_dim: usize,
}

/// An isomorphism `forward: M -> N` together with `back: N -> M` such that
/// `back ∘ forward` is invertible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoCertificate {
    pub forward: Morphism,
    pub back: Morphism,
}

impl Indecomposable {
    pub fn certify(rep: Representation) -> Result<Self, CertifyError> {
        if rep.is_zero() {
            return Err(CertifyError::ZeroModule);
        }
        let info = end_info(&rep);
        match info.local {
            Locality::Yes => Ok(Indecomposable {
                rep,
                end_dim: info.dimension,
            }),
            Locality::No => Err(CertifyError::Decomposable(info.idempotent.expect("nonzero module"))),
            Locality::Undetermined => Err(CertifyError::Undetermined),
        }
    }

    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn into_inner(self) -> Representation {
        self.rep
    }

    pub fn end_dimension(&self) -> usize {
        self.end_dim
    }

    /// Since `End(M)` is local, `M ≅ N` iff some composite `ψ ∘ φ` of basis
    /// morphisms `φ: M -> N`, `ψ: N -> M` lies outside the radical, i.e. is
    /// invertible. Equal dimension vectors then make `φ` an isomorphism.
    pub fn isomorphism_to(&self, other: &Indecomposable) -> Option<IsoCertificate> {
        if self.rep.dims() != other.rep.dims() {
            return None;
        }
        let there = hom_basis(&self.rep, &other.rep).basis;
        if there.is_empty() {
            return None;
        }
        let back = hom_basis(&other.rep, &self.rep).basis;
        for phi in &there {
            for psi in &back {
                if psi.after(phi).is_isomorphism() {
                    return Some(IsoCertificate {
                        forward: phi.clone(),
                        back: psi.clone(),
                    });
                }
            }
        }
        None
    }

    pub fn is_isomorphic(&self, other: &Indecomposable) -> bool {
        self.isomorphism_to(other).is_some()
    }
}

impl Deref for Indecomposable {
    type Target = Representation;

    fn deref(&self) -> &Representation {
        &self.rep
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("inputs not certified indecomposable")]
pub struct NotCertified;

/// Isomorphism test for two modules that must both certify as indecomposable.
pub fn is_isomorphic(m: &Representation, n: &Representation) -> Result<bool, NotCertified> {
    let m = Indecomposable::certify(m.clone()).map_err(|_| NotCertified)?;
    let n = Indecomposable::certify(n.clone()).map_err(|_| NotCertified)?;
    Ok(m.is_isomorphic(&n))
}

/// Trace-form membership test for the radical of `End(M)`.
pub fn radical_contains(m: &Representation, x: &Morphism) -> bool {
    hom_basis(m, m).basis.iter().all(|y| x.after(y).trace().is_zero())
}
