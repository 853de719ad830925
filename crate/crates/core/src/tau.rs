//! The Auslander-Reiten translate and the τ-rigidity predicates built on it.
//!
//! `τM` is computed as the kernel of `ν P1 -> ν P0`, where `P1 -> P0 -> M -> 0`
//! is a minimal projective presentation and `ν` is the Nakayama functor.
//! `τ⁻` goes through the opposite algebra: `τ⁻M = D τ_{A^op} D M`.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

use crate::cover::{is_projective, minimal_projective_presentation, nakayama, MinimalPresentation};
use crate::endo::{CertifyError, Indecomposable, Locality};
use crate::quiver::{dual_rep, projective, AlgebraError, BoundQuiverAlgebra};
use crate::rep::{direct_sum, hom_basis, kernel, same_algebra, Morphism, Representation};

#[derive(Debug, Clone)]
pub struct TauResult {
    pub translate: Representation,
    /// `τM -> ν P1`.
    pub inclusion: Morphism,
    pub nu_p1: Representation,
    pub nu_p0: Representation,
    pub connecting: Morphism,
    pub presentation: MinimalPresentation,
}

pub fn tau(m: &Representation) -> TauResult {
    let alg = m.algebra();
    let presentation = minimal_projective_presentation(m);
    let nu = nakayama(alg, &presentation.map);
    let (translate, inclusion) = kernel(&nu.source, &nu.map);
    TauResult {
        translate,
        inclusion,
        nu_p1: nu.source,
        nu_p0: nu.target,
        connecting: nu.map,
        presentation,
    }
}

/// `D τ_{A^op} D M`.
pub fn tau_minus(m: &Representation) -> Result<Representation, AlgebraError> {
    let alg = m.algebra();
    let op = alg.opposite()?;
    let dm = dual_rep(&op, m);
    let t = tau(&dm).translate;
    Ok(dual_rep(alg, &t))
}

/// Outcome of a τ-rigidity test. A failing test carries a nonzero morphism `M -> τM`.
#[derive(Debug, Clone)]
pub struct Rigidity {
    pub witness: Option<Morphism>,
}

impl Rigidity {
    pub fn is_rigid(&self) -> bool {
        self.witness.is_none()
    }
}

/// `Hom(M, τM) = 0`.
pub fn is_tau_rigid(m: &Representation) -> Rigidity {
    let t = tau(m).translate;
    Rigidity {
        witness: hom_basis(m, &t).basis.into_iter().next(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairObstruction {
    /// Nonzero `T -> τT`.
    HomToTau(Morphism),
    /// Nonzero `P -> T`.
    HomFromProjective(Morphism),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("second argument not projective")]
pub struct NotProjective;

/// `(T, P)` is a τ-rigid pair when `T` is τ-rigid and `Hom(P, T) = 0`.
/// Returns the first obstruction found, or `None` for a τ-rigid pair.
pub fn is_tau_rigid_pair(t: &Representation, p: &Representation) -> Result<Option<PairObstruction>, NotProjective> {
    assert!(same_algebra(t.algebra(), p.algebra()), "pair over different algebras");
    if !is_projective(p) {
        return Err(NotProjective);
    }
    if let Some(w) = is_tau_rigid(t).witness {
        return Ok(Some(PairObstruction::HomToTau(w)));
    }
    Ok(hom_basis(p, t)
        .basis
        .into_iter()
        .next()
        .map(PairObstruction::HomFromProjective))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    T,
    P,
}

/// A summand of a pair: which side and its position within that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SummandRef {
    pub side: Side,
    pub index: usize,
}

impl fmt::Display for SummandRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::T => "T",
            Side::P => "P",
        };
        write!(f, "{s}[{}]", self.index + 1)
    }
}

/// A candidate pair `(T, P)` given by lists of summands.
#[derive(Debug, Clone)]
pub struct SupportPair {
    pub algebra: Arc<BoundQuiverAlgebra>,
    pub t: Vec<Representation>,
    pub p: Vec<Representation>,
}

impl SupportPair {
    pub fn new(algebra: &Arc<BoundQuiverAlgebra>, t: Vec<Representation>, p: Vec<Representation>) -> Self {
        SupportPair {
            algebra: algebra.clone(),
            t,
            p,
        }
    }

    /// Summands in declaration order, `T` first.
    pub fn summands(&self) -> impl Iterator<Item = (SummandRef, &Representation)> {
        let t = self
            .t
            .iter()
            .enumerate()
            .map(|(index, r)| (SummandRef { side: Side::T, index }, r));
        let p = self
            .p
            .iter()
            .enumerate()
            .map(|(index, r)| (SummandRef { side: Side::P, index }, r));
        t.chain(p)
    }

    pub fn len(&self) -> usize {
        self.t.len() + self.p.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

/// The checks of [`verify_support_pair`], in the order they run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PairCheck {
    Validates,
    Indecomposable,
    Basic,
    Projective,
    TauRigidPair,
    SummandCount,
}

impl PairCheck {
    pub const ALL: [PairCheck; 6] = [
        PairCheck::Validates,
        PairCheck::Indecomposable,
        PairCheck::Basic,
        PairCheck::Projective,
        PairCheck::TauRigidPair,
        PairCheck::SummandCount,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PairCheck::Validates => "validates",
            PairCheck::Indecomposable => "indecomposable",
            PairCheck::Basic => "basic",
            PairCheck::Projective => "projective",
            PairCheck::TauRigidPair => "tau-rigid pair",
            PairCheck::SummandCount => "summand count",
        }
    }
}

#[derive(Debug, Clone)]
pub enum PairFailure {
    WrongAlgebra {
        summand: SummandRef,
    },
    InvalidSummand {
        summand: SummandRef,
    },
    NotIndecomposable {
        summand: SummandRef,
        verdict: Option<Locality>,
    },
    NotBasic {
        first: SummandRef,
        second: SummandRef,
    },
    NotProjective {
        summand: SummandRef,
    },
    NotTauRigidPair(PairObstruction),
}

impl PairFailure {
    pub fn check(&self) -> PairCheck {
        match self {
            PairFailure::WrongAlgebra { .. } | PairFailure::InvalidSummand { .. } => PairCheck::Validates,
            PairFailure::NotIndecomposable { .. } => PairCheck::Indecomposable,
            PairFailure::NotBasic { .. } => PairCheck::Basic,
            PairFailure::NotProjective { .. } => PairCheck::Projective,
            PairFailure::NotTauRigidPair(_) => PairCheck::TauRigidPair,
        }
    }
}

impl fmt::Display for PairFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairFailure::WrongAlgebra { summand } => write!(f, "{summand} lives over a different algebra"),
            PairFailure::InvalidSummand { summand } => write!(f, "{summand} does not satisfy the relations"),
            PairFailure::NotIndecomposable { summand, verdict } => match verdict {
                None => write!(f, "{summand} is the zero module"),
                Some(Locality::Undetermined) => write!(f, "indecomposability of {summand} undetermined"),
                Some(_) => write!(f, "{summand} is decomposable"),
            },
            PairFailure::NotBasic { first, second } => write!(f, "not basic: {first} ≅ {second}"),
            PairFailure::NotProjective { summand } => write!(f, "{summand} is not projective"),
            PairFailure::NotTauRigidPair(PairObstruction::HomToTau(_)) => {
                write!(f, "not a tau-rigid pair: Hom(T, τT) ≠ 0")
            }
            PairFailure::NotTauRigidPair(PairObstruction::HomFromProjective(_)) => {
                write!(f, "not a tau-rigid pair: Hom(P, T) ≠ 0")
            }
        }
    }
}

#[derive(Debug, Clone)]
pub enum PairStatus {
    SupportTauTilting,
    /// Every check but the count passed.
    TauRigidPairOnly {
        summands: usize,
        simples: usize,
    },
    Failed(PairFailure),
}

impl PairStatus {
    pub fn is_support_tau_tilting(&self) -> bool {
        matches!(self, PairStatus::SupportTauTilting)
    }

    /// Whether the pair is at least a basic τ-rigid pair.
    pub fn is_tau_rigid_pair(&self) -> bool {
        !matches!(self, PairStatus::Failed(_))
    }
}

/// A pair whose summands are certified indecomposable, pairwise
/// non-isomorphic, with projective `P`-summands, forming a τ-rigid pair.
#[derive(Debug, Clone)]
pub struct VerifiedPair {
    algebra: Arc<BoundQuiverAlgebra>,
    summands: Vec<Indecomposable>,
    t_len: usize,
    /// Vertex `i` with `P-summand ≅ P(i)`, one per `P`-summand.
    projective_vertices: Vec<usize>,
    t_sum: Representation,
    p_sum: Representation,
    support_tau_tilting: bool,
}

impl VerifiedPair {
    /// Whether `T ⊕ P` has exactly as many summands as there are simples.
    pub fn is_support_tau_tilting(&self) -> bool {
        self.support_tau_tilting
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    /// Number of summands of `T ⊕ P`.
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.summands.is_empty()
    }

    /// The `i`-th summand of `T ⊕ P`, `T`-summands first (0-based).
    pub fn summand(&self, i: usize) -> &Indecomposable {
        &self.summands[i]
    }

    pub fn summands(&self) -> &[Indecomposable] {
        &self.summands
    }

    pub fn t_len(&self) -> usize {
        self.t_len
    }

    pub fn in_p(&self, i: usize) -> bool {
        i >= self.t_len
    }

    pub fn summand_ref(&self, i: usize) -> SummandRef {
        if self.in_p(i) {
            SummandRef {
                side: Side::P,
                index: i - self.t_len,
            }
        } else {
            SummandRef {
                side: Side::T,
                index: i,
            }
        }
    }

    pub fn projective_vertices(&self) -> &[usize] {
        &self.projective_vertices
    }

    pub fn t_sum(&self) -> &Representation {
        &self.t_sum
    }

    pub fn p_sum(&self) -> &Representation {
        &self.p_sum
    }
}

#[derive(Debug, Clone)]
pub struct PairVerification {
    pub status: PairStatus,
    /// Checks that passed, in order.
    pub passed: Vec<PairCheck>,
    /// Present when every check up to and including the τ-rigid pair check passed.
    pub verified: Option<VerifiedPair>,
}

impl PairVerification {
    fn fail(passed: Vec<PairCheck>, failure: PairFailure) -> Self {
        PairVerification {
            status: PairStatus::Failed(failure),
            passed,
            verified: None,
        }
    }

    /// The verified pair, only if it is support τ-tilting.
    pub fn support_tau_tilting(self) -> Option<VerifiedPair> {
        if self.status.is_support_tau_tilting() {
            self.verified
        } else {
            None
        }
    }
}

/// Runs the checks of [`PairCheck`] in order and reports the first failure.
pub fn verify_support_pair(pair: &SupportPair) -> PairVerification {
    let alg = &pair.algebra;
    let mut passed = Vec::new();

    for (r, m) in pair.summands() {
        if !same_algebra(alg, m.algebra()) {
            return PairVerification::fail(passed, PairFailure::WrongAlgebra { summand: r });
        }
        if m.validate().is_err() {
            return PairVerification::fail(passed, PairFailure::InvalidSummand { summand: r });
        }
    }
    passed.push(PairCheck::Validates);

    let mut certified = Vec::with_capacity(pair.len());
    let mut refs = Vec::with_capacity(pair.len());
    for (r, m) in pair.summands() {
        match Indecomposable::certify(m.clone()) {
            Ok(c) => {
                certified.push(c);
                refs.push(r);
            }
            Err(e) => {
                let verdict = match e {
                    CertifyError::ZeroModule => None,
                    CertifyError::Decomposable(_) => Some(Locality::No),
                    CertifyError::Undetermined => Some(Locality::Undetermined),
                };
                return PairVerification::fail(passed, PairFailure::NotIndecomposable { summand: r, verdict });
            }
        }
    }
    passed.push(PairCheck::Indecomposable);

    for i in 0..certified.len() {
        for j in i + 1..certified.len() {
            if certified[i].is_isomorphic(&certified[j]) {
                return PairVerification::fail(
                    passed,
                    PairFailure::NotBasic {
                        first: refs[i],
                        second: refs[j],
                    },
                );
            }
        }
    }
    passed.push(PairCheck::Basic);

    let t_len = pair.t.len();
    let standard: Vec<Indecomposable> = (0..alg.vertex_count())
        .map(|v| Indecomposable::certify(projective(alg, v)).expect("indecomposable projectives are local"))
        .collect();
    let mut projective_vertices = Vec::new();
    for (k, m) in certified[t_len..].iter().enumerate() {
        match standard.iter().position(|p| p.is_isomorphic(m)) {
            Some(v) => projective_vertices.push(v),
            None => {
                return PairVerification::fail(
                    passed,
                    PairFailure::NotProjective {
                        summand: refs[t_len + k],
                    },
                )
            }
        }
    }
    passed.push(PairCheck::Projective);

    let t_sum = direct_sum(alg, &pair.t.iter().collect::<Vec<_>>()).expect("checked algebra");
    let p_sum = direct_sum(alg, &pair.p.iter().collect::<Vec<_>>()).expect("checked algebra");
    match is_tau_rigid_pair(&t_sum, &p_sum) {
        Ok(None) => {}
        Ok(Some(obstruction)) => return PairVerification::fail(passed, PairFailure::NotTauRigidPair(obstruction)),
        Err(NotProjective) => unreachable!("P-summands were certified projective"),
    }
    passed.push(PairCheck::TauRigidPair);

    let n = alg.vertex_count();
    let verified = VerifiedPair {
        algebra: alg.clone(),
        summands: certified,
        t_len,
        projective_vertices,
        t_sum,
        p_sum,
        support_tau_tilting: pair.len() == n,
    };
    let status = if pair.len() == n {
        passed.push(PairCheck::SummandCount);
        PairStatus::SupportTauTilting
    } else {
        PairStatus::TauRigidPairOnly {
            summands: pair.len(),
            simples: n,
        }
    };
    PairVerification {
        status,
        passed,
        verified: Some(verified),
    }
}
