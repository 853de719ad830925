//! Summand bijections between two basic support τ-tilting pairs.
//!
//! For pairs with summands `X_1..X_n` and `Y_1..Y_n` (T-summands first), the
//! candidate set `F(i)` collects every `j` for which one of the following holds:
//!
//! * (a) `X_i ≅ Y_j`;
//! * (b) `X_i ⊕ Y_j` is not τ-rigid;
//! * (c) `Y_j` is a `P'`-summand and `(X_i, Y_j)` is not a τ-rigid pair;
//! * (d) `X_i` is a `P`-summand and `(Y_j, X_i)` is not a τ-rigid pair.
//!
//! The sets satisfy Hall's condition, so a permutation `s` with `s(i) ∈ F(i)`
//! exists. Everything here is 0-based; reports print 1-based indices.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::endo::IsoCertificate;
use crate::rep::{same_algebra, Morphism};
use crate::tau::{
    is_tau_rigid, is_tau_rigid_pair, verify_support_pair, PairObstruction, PairStatus, SupportPair, VerifiedPair,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Condition {
    A,
    B,
    C,
    D,
}

impl Condition {
    pub const ALL: [Condition; 4] = [Condition::A, Condition::B, Condition::C, Condition::D];

    pub fn letter(self) -> char {
        match self {
            Condition::A => 'a',
            Condition::B => 'b',
            Condition::C => 'c',
            Condition::D => 'd',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        Condition::ALL.into_iter().find(|k| k.letter() == c)
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.letter())
    }
}

/// The four conditions on one edge `(i, j)`, each with its witness when it holds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EdgeLabel {
    /// (a): an isomorphism `X_i -> Y_j`.
    pub isomorphism: Option<IsoCertificate>,
    /// (b): a nonzero morphism `X_i ⊕ Y_j -> τ(X_i ⊕ Y_j)`.
    pub sum_not_rigid: Option<Morphism>,
    /// (c): why `(X_i, Y_j)` is not a τ-rigid pair.
    pub pair_into_right: Option<PairObstruction>,
    /// (d): why `(Y_j, X_i)` is not a τ-rigid pair.
    pub pair_into_left: Option<PairObstruction>,
}

impl EdgeLabel {
    pub fn holds(&self, c: Condition) -> bool {
        match c {
            Condition::A => self.isomorphism.is_some(),
            Condition::B => self.sum_not_rigid.is_some(),
            Condition::C => self.pair_into_right.is_some(),
            Condition::D => self.pair_into_left.is_some(),
        }
    }

    pub fn flags(&self) -> [bool; 4] {
        Condition::ALL.map(|c| self.holds(c))
    }

    pub fn any(&self) -> bool {
        self.flags().iter().any(|&f| f)
    }

    pub fn conditions(&self) -> Vec<Condition> {
        Condition::ALL.into_iter().filter(|&c| self.holds(c)).collect()
    }

    /// The reported condition for a matched edge: (a) > (b) > (c) > (d).
    pub fn primary(&self) -> Option<Condition> {
        Condition::ALL.into_iter().find(|&c| self.holds(c))
    }

    /// Preference class used when choosing a matching: isomorphisms first,
    /// then edges certified through a projective summand, then the rest.
    fn matching_class(&self) -> u8 {
        if self.holds(Condition::A) {
            0
        } else if self.holds(Condition::C) || self.holds(Condition::D) {
            1
        } else {
            2
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PairSide {
    Left,
    Right,
}

impl fmt::Display for PairSide {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PairSide::Left => "left",
            PairSide::Right => "right",
        })
    }
}

#[derive(Debug, Clone, thiserror::Error)]
pub enum BijectionError {
    #[error("the two pairs live over different algebras")]
    AlgebraMismatch,
    #[error("{side} pair is not support τ-tilting")]
    NotSupportTauTilting { side: PairSide, status: PairStatus },
    #[error("summand index out of range")]
    IndexOutOfRange,
    #[error("no perfect matching; deficient rows {deficient:?}")]
    NoPerfectMatching { deficient: Vec<usize> },
    #[error("n = {n} exceeds the enumeration bound {max}")]
    TooLarge { n: usize, max: usize },
}

fn check_pairs(left: &VerifiedPair, right: &VerifiedPair) -> Result<(), BijectionError> {
    if !same_algebra(left.algebra(), right.algebra()) {
        return Err(BijectionError::AlgebraMismatch);
    }
    for (side, pair) in [(PairSide::Left, left), (PairSide::Right, right)] {
        if !pair.is_support_tau_tilting() {
            return Err(BijectionError::NotSupportTauTilting {
                side,
                status: PairStatus::TauRigidPairOnly {
                    summands: pair.len(),
                    simples: pair.algebra().vertex_count(),
                },
            });
        }
    }
    Ok(())
}

/// Evaluates conditions (a)-(d) on the edge `(i, j)`.
pub fn classify_edge(
    left: &VerifiedPair,
    right: &VerifiedPair,
    i: usize,
    j: usize,
) -> Result<EdgeLabel, BijectionError> {
    check_pairs(left, right)?;
    if i >= left.len() || j >= right.len() {
        return Err(BijectionError::IndexOutOfRange);
    }
    let x = left.summand(i);
    let y = right.summand(j);
    let sum = x.oplus(y).expect("same algebra");
    Ok(EdgeLabel {
        isomorphism: x.isomorphism_to(y),
        sum_not_rigid: is_tau_rigid(&sum).witness,
        pair_into_right: if right.in_p(j) {
            is_tau_rigid_pair(x, y).expect("P'-summands are certified projective")
        } else {
            None
        },
        pair_into_left: if left.in_p(i) {
            is_tau_rigid_pair(y, x).expect("P-summands are certified projective")
        } else {
            None
        },
    })
}

/// The candidate sets `F(i)` with a label on every edge of the `n × n` grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FSets {
    pub sets: Vec<Vec<usize>>,
    /// `labels[i][j]` for all `i, j`.
    pub labels: Vec<Vec<EdgeLabel>>,
}

impl FSets {
    pub fn n(&self) -> usize {
        self.sets.len()
    }

    pub fn label(&self, i: usize, j: usize) -> &EdgeLabel {
        &self.labels[i][j]
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.sets[i].binary_search(&j).is_ok()
    }
}

pub fn compute_f_sets(left: &VerifiedPair, right: &VerifiedPair) -> Result<FSets, BijectionError> {
    check_pairs(left, right)?;
    let n = left.len();
    let labels = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| classify_edge(left, right, i, j))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FSets {
        sets: sets_from(&labels, &Condition::ALL),
        labels,
    })
}

fn sets_from(labels: &[Vec<EdgeLabel>], keep: &[Condition]) -> Vec<Vec<usize>> {
    labels
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, l)| keep.iter().any(|&c| l.holds(c)))
                .map(|(j, _)| j)
                .collect()
        })
        .collect()
}

/// Membership recomputed with the listed conditions ignored: dropping (c)
/// gives the sets `G(i)`, dropping (d) the sets `H(i)`.
pub fn restricted_sets(f: &FSets, drop: &[Condition]) -> Vec<Vec<usize>> {
    let keep: Vec<Condition> = Condition::ALL.into_iter().filter(|c| !drop.contains(c)).collect();
    sets_from(&f.labels, &keep)
}

/// A permutation of `0..n`, stored as its list of images.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// `None` unless `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<usize>) -> Option<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || core::mem::replace(&mut seen[i], true) {
                return None;
            }
        }
        Some(Permutation(images))
    }

    /// Parses 1-based cycle notation such as `(1 2 3)(4 5)`, `(123)` or `id`.
    pub fn from_cycles(s: &str, n: usize) -> Option<Self> {
        let s = s.trim();
        let mut images: Vec<usize> = (0..n).collect();
        if s == "id" || s == "()" {
            return Some(Permutation(images));
        }
        let mut rest = s;
        while !rest.is_empty() {
            let body = rest.strip_prefix('(')?;
            let close = body.find(')')?;
            let inner = &body[..close];
            rest = body[close + 1..].trim_start();
            let elems: Vec<usize> = if inner.contains(' ') || inner.contains(',') {
                inner
                    .split([' ', ','])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().ok())
                    .collect::<Option<_>>()?
            } else {
                inner
                    .chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize))
                    .collect::<Option<_>>()?
            };
            if elems.iter().any(|&e| e == 0 || e > n) {
                return None;
            }
            for k in 0..elems.len() {
                images[elems[k] - 1] = elems[(k + 1) % elems.len()] - 1;
            }
        }
        Permutation::from_images(images)
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Nontrivial cycles, each starting at its smallest element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.0.len()];
        let mut out = Vec::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                cycle.push(k);
                k = self.0[k];
            }
            out.push(cycle);
        }
        out
    }

    /// Satisfies `s(i) ∈ sets[i]` for every `i`.
    pub fn is_selection_of(&self, sets: &[Vec<usize>]) -> bool {
        self.0.len() == sets.len() && self.0.iter().zip(sets).all(|(j, s)| s.contains(j))
    }
}

impl fmt::Display for Permutation {
    /// 1-based cycle notation, `id` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("id");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|k| alloc::format!("{}", k + 1)).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}

/// Outcome of the Hall condition check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HallCheck {
    /// A perfect matching, certifying `|∪_{k∈S} F(k)| ≥ |S|` for every `S`.
    Satisfied(Permutation),
    /// Rows `S` whose union of sets has exactly `|S| - 1` elements.
    Violated(Vec<usize>),
}

impl HallCheck {
    pub fn is_satisfied(&self) -> bool {
        matches!(self, HallCheck::Satisfied(_))
    }
}

/// Maximum matching by augmenting paths. If some row cannot be matched,
/// the rows reached by the failed alternating search form a deficient set.
pub fn hall_check(sets: &[Vec<usize>]) -> HallCheck {
    let n = sets.len();
    let mut row_of: Vec<Option<usize>> = vec![None; n];
    for u in 0..n {
        let mut visited = vec![false; n];
        if !augment(sets, u, &mut visited, &mut row_of) {
            let mut rows: BTreeSet<usize> = BTreeSet::new();
            rows.insert(u);
            for (j, seen) in visited.iter().enumerate() {
                if *seen {
                    rows.insert(row_of[j].expect("visited columns are matched after a failed search"));
                }
            }
            return HallCheck::Violated(rows.into_iter().collect());
        }
    }
    let mut images = vec![0; n];
    for (j, r) in row_of.iter().enumerate() {
        images[r.expect("perfect matching")] = j;
    }
    HallCheck::Satisfied(Permutation(images))
}

fn augment(sets: &[Vec<usize>], u: usize, visited: &mut [bool], row_of: &mut [Option<usize>]) -> bool {
    for &j in &sets[u] {
        if j >= visited.len() || visited[j] {
            continue;
        }
        visited[j] = true;
        if row_of[j].is_none_or(|r| augment(sets, r, visited, row_of)) {
            row_of[j] = Some(u);
            return true;
        }
    }
    false
}

/// Minimum-cost perfect assignment on a square matrix (Hungarian method).
/// Returns the cost and the column assigned to each row.
fn min_cost_assignment(cost: &[Vec<i64>]) -> (i64, Vec<usize>) {
    let n = cost.len();
    if n == 0 {
        return (0, Vec::new());
    }
    const INF: i64 = i64::MAX / 4;
    let mut u = vec![0i64; n + 1];
    let mut v = vec![0i64; n + 1];
    let mut p = vec![0usize; n + 1];
    let mut way = vec![0usize; n + 1];
    for i in 1..=n {
        p[0] = i;
        let mut j0 = 0;
        let mut minv = vec![INF; n + 1];
        let mut used = vec![false; n + 1];
        loop {
            used[j0] = true;
            let i0 = p[j0];
            let mut delta = INF;
            let mut j1 = 0;
            for j in 1..=n {
                if !used[j] {
                    let cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
                    if cur < minv[j] {
                        minv[j] = cur;
                        way[j] = j0;
                    }
                    if minv[j] < delta {
                        delta = minv[j];
                        j1 = j;
                    }
                }
            }
            for j in 0..=n {
                if used[j] {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
            if p[j0] == 0 {
                break;
            }
        }
        loop {
            let j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
            if j0 == 0 {
                break;
            }
        }
    }
    let mut assignment = vec![0; n];
    for j in 1..=n {
        assignment[p[j] - 1] = j - 1;
    }
    let total = assignment.iter().enumerate().map(|(i, &j)| cost[i][j]).sum();
    (total, assignment)
}

/// Chooses a permutation with `s(i) ∈ sets[i]`, deterministically.
///
/// `class(i, j)` ranks edges, lower is preferred. First the number of class-0
/// edges is maximized over all perfect matchings. Then rows are fixed in
/// order: each row takes the first candidate, ordered by `(class, j)`, that
/// still extends to a perfect matching with that many class-0 edges.
pub fn match_with_preferences(
    sets: &[Vec<usize>],
    class: impl Fn(usize, usize) -> u8,
) -> Result<Permutation, BijectionError> {
    let n = sets.len();
    if let HallCheck::Violated(deficient) = hall_check(sets) {
        return Err(BijectionError::NoPerfectMatching { deficient });
    }
    let big = n as i64 + 1;
    let cost = |i: usize, j: usize| -> i64 {
        if !sets[i].contains(&j) {
            big
        } else if class(i, j) == 0 {
            0
        } else {
            1
        }
    };
    let sub_cost = |rows: &[usize], cols: &[usize]| -> i64 {
        let m: Vec<Vec<i64>> = rows
            .iter()
            .map(|&i| cols.iter().map(|&j| cost(i, j)).collect())
            .collect();
        min_cost_assignment(&m).0
    };
    let all: Vec<usize> = (0..n).collect();
    let optimum = sub_cost(&all, &all);
    debug_assert!(optimum < big);

    let mut images = vec![0; n];
    let mut free: Vec<usize> = all.clone();
    let mut spent = 0;
    for i in 0..n {
        let mut candidates: Vec<usize> = sets[i].iter().copied().filter(|j| free.contains(j)).collect();
        candidates.sort_by_key(|&j| (class(i, j), j));
        candidates.dedup();
        let rest_rows: Vec<usize> = (i + 1..n).collect();
        let chosen = candidates
            .into_iter()
            .find(|&j| {
                let cols: Vec<usize> = free.iter().copied().filter(|&c| c != j).collect();
                let rest = sub_cost(&rest_rows, &cols);
                rest < big && spent + cost(i, j) + rest == optimum
            })
            .expect("a perfect matching with optimal cost extends row by row");
        spent += cost(i, chosen);
        images[i] = chosen;
        free.retain(|&c| c != chosen);
    }
    Ok(Permutation(images))
}

/// A matching for the candidate sets: isomorphism edges first where a perfect
/// matching allows, then (c)/(d) edges, then (b) edges, ties broken by the
/// smallest column.
pub fn find_matching(f: &FSets) -> Result<Permutation, BijectionError> {
    match_with_preferences(&f.sets, |i, j| f.labels[i][j].matching_class())
}

/// Lexicographically smallest permutation with `s(i) ∈ sets[i]`.
pub fn find_matching_in(sets: &[Vec<usize>]) -> Result<Permutation, BijectionError> {
    match_with_preferences(sets, |_, _| 0)
}

pub const DEFAULT_MAX_ENUMERATION_SIZE: usize = 10;
pub const DEFAULT_ENUMERATION_LIMIT: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Enumeration {
    /// In lexicographic order of their image lists.
    pub permutations: Vec<Permutation>,
    pub truncated: bool,
}

/// Every permutation with `s(i) ∈ sets[i]`, up to `limit` of them.
pub fn all_matchings(sets: &[Vec<usize>], limit: usize, max_size: usize) -> Result<Enumeration, BijectionError> {
    let n = sets.len();
    if n > max_size {
        return Err(BijectionError::TooLarge { n, max: max_size });
    }
    let mut sorted: Vec<Vec<usize>> = sets.to_vec();
    for s in &mut sorted {
        s.sort_unstable();
        s.dedup();
    }
    let mut out = Enumeration {
        permutations: Vec::new(),
        truncated: false,
    };
    let mut current = Vec::with_capacity(n);
    let mut used = vec![false; n];
    backtrack(&sorted, limit, &mut current, &mut used, &mut out);
    Ok(out)
}

fn backtrack(sets: &[Vec<usize>], limit: usize, current: &mut Vec<usize>, used: &mut [bool], out: &mut Enumeration) {
    if out.truncated {
        return;
    }
    let i = current.len();
    if i == sets.len() {
        if out.permutations.len() == limit {
            out.truncated = true;
        } else {
            out.permutations.push(Permutation(current.clone()));
        }
        return;
    }
    for &j in &sets[i] {
        if j < used.len() && !used[j] {
            used[j] = true;
            current.push(j);
            backtrack(sets, limit, current, used, out);
            current.pop();
            used[j] = false;
        }
    }
}

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub enumerate_all: bool,
    pub limit: usize,
    pub max_enumeration_size: usize,
    /// Conditions to drop for the restricted-set analysis; empty for none.
    pub drop: Vec<Condition>,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            enumerate_all: false,
            limit: DEFAULT_ENUMERATION_LIMIT,
            max_enumeration_size: DEFAULT_MAX_ENUMERATION_SIZE,
            drop: Vec::new(),
        }
    }
}

/// Candidate sets with some conditions ignored, and whether they still admit a matching.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictedAnalysis {
    pub dropped: Vec<Condition>,
    pub sets: Vec<Vec<usize>>,
    pub hall: HallCheck,
}

#[derive(Debug, Clone)]
pub struct BijectionReport {
    pub left: VerifiedPair,
    pub right: VerifiedPair,
    pub f: FSets,
    pub matching: Permutation,
    /// Reported condition for each matched edge `(i, s(i))`.
    pub chosen: Vec<Condition>,
    pub all: Option<Enumeration>,
    pub hall: HallCheck,
    pub restricted: Option<RestrictedAnalysis>,
}

/// Verifies both pairs, computes the candidate sets, and picks a matching.
pub fn build_report(
    left: &SupportPair,
    right: &SupportPair,
    options: &ReportOptions,
) -> Result<BijectionReport, BijectionError> {
    let verify = |side, pair: &SupportPair| {
        let v = verify_support_pair(pair);
        if v.status.is_support_tau_tilting() {
            Ok(v.verified.expect("verified pair present"))
        } else {
            Err(BijectionError::NotSupportTauTilting { side, status: v.status })
        }
    };
    let left = verify(PairSide::Left, left)?;
    let right = verify(PairSide::Right, right)?;
    let f = compute_f_sets(&left, &right)?;
    let hall = hall_check(&f.sets);
    let matching = find_matching(&f)?;
    let chosen = (0..f.n())
        .map(|i| f.label(i, matching.apply(i)).primary().expect("matched edges lie in F"))
        .collect();
    let all = if options.enumerate_all {
        Some(all_matchings(&f.sets, options.limit, options.max_enumeration_size)?)
    } else {
        None
    };
    let restricted = (!options.drop.is_empty()).then(|| {
        let sets = restricted_sets(&f, &options.drop);
        RestrictedAnalysis {
            dropped: options.drop.clone(),
            hall: hall_check(&sets),
            sets,
        }
    });
    Ok(BijectionReport {
        left,
        right,
        f,
        matching,
        chosen,
        all,
        hall,
        restricted,
    })
}
