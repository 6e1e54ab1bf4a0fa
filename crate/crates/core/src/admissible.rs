//! Admissible words: words whose letters can be applied one after another as
//! reflections at sinks of an acyclic orientation.
//!
//! All words follow the crate convention: written `x_l ... x_1`, rightmost
//! letter applied first (see [`crate::tracemon`]).
//!
//! An admissible word is determined by its multiplicity vector, and the
//! divisibility order on admissible words is pointwise comparison of those
//! vectors. Meets and joins are therefore computed on vectors and turned back
//! into words by [`realize_vector`].

use std::collections::{HashMap, HashSet};
use std::fmt;

use thiserror::Error;

use crate::coxgraph::{Adjacency, GraphError, Orientation, Vertex, VertexSet};
use crate::tracemon::{self, TraceError, TraceWord};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AdmissibleError {
    #[error(
        "word {word} is not admissible: letter {position} (in application order) is not a sink"
    )]
    NotAdmissible { word: String, position: usize },
    #[error("vertex set {0:?} is not a filter of the orientation")]
    NotAFilter(VertexSet),
    #[error("principal words need size r >= 1")]
    ZeroSize,
    #[error("admissible words are taken over different orientations")]
    DifferentBase,
    #[error("no admissible word realizes multiplicity vector {0:?}")]
    RealizationFailed(Vec<u32>),
    #[error("could not decompose {0} into principal words")]
    DecompositionFailed(String),
    #[error("principal word W({size}, {apex}) could not be constructed")]
    ConstructionFailed { size: usize, apex: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Trace(#[from] TraceError),
}

/// Applies the letters of `word` as successive sink reflections. On failure
/// returns the 0-based position (in application order) of the first letter
/// that is not a sink.
fn sink_walk(word: &TraceWord, base: &Orientation) -> Result<Orientation, usize> {
    let mut o = base.clone();
    for (i, v) in word.applied().enumerate() {
        if v >= o.rank() || !o.is_sink(v) {
            return Err(i);
        }
        o.reflect_in_place(v);
    }
    Ok(o)
}

/// Sequential sink test on the stored representative.
pub fn is_admissible(word: &TraceWord, base: &Orientation) -> bool {
    sink_walk(word, base).is_ok()
}

/// An admissible word over a fixed base orientation, together with the
/// orientation it produces.
#[derive(Clone)]
pub struct AdmissibleWord {
    word: TraceWord,
    base: Orientation,
    end: Orientation,
    mult: Vec<u32>,
}

impl AdmissibleWord {
    pub fn new(word: TraceWord, base: &Orientation) -> Result<Self, AdmissibleError> {
        word.check_rank(base.rank())?;
        match sink_walk(&word, base) {
            Ok(end) => Ok(AdmissibleWord {
                mult: word.multiplicity(base.rank()),
                word,
                base: base.clone(),
                end,
            }),
            Err(position) => Err(AdmissibleError::NotAdmissible {
                word: word.to_string(),
                position,
            }),
        }
    }

    pub fn empty(base: &Orientation) -> Self {
        AdmissibleWord {
            word: TraceWord::empty(),
            base: base.clone(),
            end: base.clone(),
            mult: vec![0; base.rank()],
        }
    }

    pub fn word(&self) -> &TraceWord {
        &self.word
    }

    pub fn into_word(self) -> TraceWord {
        self.word
    }

    pub fn base(&self) -> &Orientation {
        &self.base
    }

    /// The orientation `X · Λ` reached after applying the word.
    pub fn end(&self) -> &Orientation {
        &self.end
    }

    pub fn multiplicity(&self) -> &[u32] {
        &self.mult
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        self.word.support()
    }

    /// Extends the word on the left by `v`, if `v` is a sink of the end orientation.
    pub fn then(&self, v: Vertex) -> Option<Self> {
        if !self.end.is_sink(v) {
            return None;
        }
        let mut next = self.clone();
        next.word = TraceWord::letter(v).concat(&self.word);
        next.end.reflect_in_place(v);
        next.mult[v] += 1;
        Some(next)
    }

    fn same_base(&self, other: &Self) -> Result<(), AdmissibleError> {
        if self.base == other.base {
            Ok(())
        } else {
            Err(AdmissibleError::DifferentBase)
        }
    }

    /// `self ⪯ other`, decided by comparing multiplicities.
    pub fn leq(&self, other: &Self) -> Result<bool, AdmissibleError> {
        self.same_base(other)?;
        Ok(vector_leq(&self.mult, &other.mult))
    }

    pub fn meet(&self, other: &Self) -> Result<Self, AdmissibleError> {
        self.same_base(other)?;
        let m: Vec<u32> = self
            .mult
            .iter()
            .zip(&other.mult)
            .map(|(a, b)| *a.min(b))
            .collect();
        realize_vector(&m, &self.base).ok_or(AdmissibleError::RealizationFailed(m))
    }

    pub fn join(&self, other: &Self) -> Result<Self, AdmissibleError> {
        self.same_base(other)?;
        let m: Vec<u32> = self
            .mult
            .iter()
            .zip(&other.mult)
            .map(|(a, b)| *a.max(b))
            .collect();
        realize_vector(&m, &self.base).ok_or(AdmissibleError::RealizationFailed(m))
    }

    /// Splits `self = V (self ∧ other)` and `other = W (self ∧ other)`.
    pub fn factor(&self, other: &Self) -> Result<Factorization, AdmissibleError> {
        let meet = self.meet(other)?;
        let left = tracemon::quotient(&self.base, &self.word, &meet.word)?;
        let right = tracemon::quotient(&self.base, &other.word, &meet.word)?;
        Ok(Factorization { meet, left, right })
    }
}

/// Trace equality over the same base.
impl PartialEq for AdmissibleWord {
    fn eq(&self, other: &Self) -> bool {
        self.base == other.base && tracemon::equal(&self.base, &self.word, &other.word)
    }
}

impl fmt::Debug for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "AdmissibleWord({})", self.word)
    }
}

impl fmt::Display for AdmissibleWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.word.fmt(f)
    }
}

fn vector_leq(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// `X ⪯ Y` for admissible words over the same base.
pub fn admissible_leq(x: &AdmissibleWord, y: &AdmissibleWord) -> Result<bool, AdmissibleError> {
    x.leq(y)
}

/// The two cofactors of a pair of admissible words over their meet.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub meet: AdmissibleWord,
    /// `V` with `X = V (X ∧ Y)`.
    pub left: TraceWord,
    /// `W` with `Y = W (X ∧ Y)`.
    pub right: TraceWord,
}

pub fn lattice_factor(
    x: &AdmissibleWord,
    y: &AdmissibleWord,
) -> Result<Factorization, AdmissibleError> {
    x.factor(y)
}

/// The complete word `K`: every vertex once, sinks applied first, ties
/// broken by smallest index. `K · Λ = Λ`.
pub fn complete_word(base: &Orientation) -> Result<AdmissibleWord, AdmissibleError> {
    let order = base.to_order()?;
    let word = TraceWord::from_applied(order.as_slice().iter().copied());
    AdmissibleWord::new(word, base)
}

/// The unique multiplicity-free admissible word with support `theta`.
pub fn mf_word_of_filter(
    theta: VertexSet,
    base: &Orientation,
) -> Result<TraceWord, AdmissibleError> {
    if !base.is_filter(theta) {
        return Err(AdmissibleError::NotAFilter(theta));
    }
    let mut placed = VertexSet::EMPTY;
    let mut applied = Vec::with_capacity(theta.len());
    while placed != theta {
        let v = theta
            .difference(placed)
            .iter()
            .find(|&v| base.successors(v).is_subset(placed))
            .ok_or(GraphError::CyclicOrientation)?;
        placed.insert(v);
        applied.push(v);
    }
    Ok(TraceWord::from_applied(applied))
}

/// Smallest filter containing `theta` and every vertex adjacent to it.
pub fn hull(theta: VertexSet, base: &Orientation) -> Result<VertexSet, AdmissibleError> {
    if !base.is_filter(theta) {
        return Err(AdmissibleError::NotAFilter(theta));
    }
    let nbrs = theta
        .iter()
        .fold(VertexSet::EMPTY, |acc, v| acc.union(base.neighbors(v)));
    Ok(base.upward_closure(theta.union(nbrs)))
}

/// The principal word `W_{r,x}` with its canonical form `X_r ... X_1`.
#[derive(Clone, Debug)]
pub struct PrincipalWord {
    word: AdmissibleWord,
    size: usize,
    apex: Vertex,
    blocks: Vec<TraceWord>,
}

impl PrincipalWord {
    pub fn word(&self) -> &AdmissibleWord {
        &self.word
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn apex(&self) -> Vertex {
        self.apex
    }

    /// Canonical blocks in written order `X_r, ..., X_1` (`X_1` applied first).
    pub fn canonical_form(&self) -> &[TraceWord] {
        &self.blocks
    }
}

/// Builds `W_{r,x}`: supports `S_r = ⟨x⟩`, `S_j = H(S_{j+1})`, and `X_j` the
/// multiplicity-free word on `S_j` over the orientation reached after
/// `X_{j-1} ... X_1`.
pub fn principal_word(
    r: usize,
    x: Vertex,
    base: &Orientation,
) -> Result<PrincipalWord, AdmissibleError> {
    if r == 0 {
        return Err(AdmissibleError::ZeroSize);
    }
    if x >= base.rank() {
        return Err(GraphError::VertexOutOfRange {
            v: x,
            n: base.rank(),
        }
        .into());
    }
    let failed = || AdmissibleError::ConstructionFailed { size: r, apex: x };

    // supports[j-1] = S_j
    let mut supports = vec![VertexSet::EMPTY; r];
    supports[r - 1] = base.principal_filter(x);
    for j in (0..r - 1).rev() {
        supports[j] = hull(supports[j + 1], base)?;
    }

    let mut current = base.clone();
    let mut applied = Vec::new();
    let mut blocks = Vec::with_capacity(r);
    for &s in &supports {
        let block = mf_word_of_filter(s, &current).map_err(|_| failed())?;
        for v in block.applied() {
            current.reflect_in_place(v);
            applied.push(v);
        }
        blocks.push(block);
    }
    blocks.reverse();
    let word = AdmissibleWord::new(TraceWord::from_applied(applied), base).map_err(|_| failed())?;
    Ok(PrincipalWord {
        word,
        size: r,
        apex: x,
        blocks,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Principality {
    /// The empty word, principal of size 0.
    Empty,
    Principal {
        size: usize,
        apex: Vertex,
    },
    NotPrincipal,
}

/// Recognizes `W_{r,x}` by rebuilding each candidate and comparing traces.
pub fn is_principal(x: &AdmissibleWord) -> Principality {
    if x.is_empty() {
        return Principality::Empty;
    }
    for y in x.support().iter() {
        let r = x.multiplicity()[y] as usize;
        if let Ok(p) = principal_word(r, y, x.base()) {
            if p.word == *x {
                return Principality::Principal { size: r, apex: y };
            }
        }
    }
    Principality::NotPrincipal
}

/// Reconstructs the admissible word with multiplicity vector `m`, by
/// depth-first search over sink choices with backtracking.
pub fn realize_vector(m: &[u32], base: &Orientation) -> Option<AdmissibleWord> {
    struct Search<'a> {
        target: &'a [u32],
        applied: Vec<u32>,
        path: Vec<Vertex>,
        dead: HashSet<Vec<u32>>,
    }

    impl Search<'_> {
        fn run(&mut self, o: &mut Orientation) -> bool {
            if self.applied == self.target {
                return true;
            }
            if self.dead.contains(&self.applied) {
                return false;
            }
            for v in 0..o.rank() {
                if self.applied[v] < self.target[v] && o.is_sink(v) {
                    o.reflect_in_place(v);
                    self.applied[v] += 1;
                    self.path.push(v);
                    if self.run(o) {
                        return true;
                    }
                    self.path.pop();
                    self.applied[v] -= 1;
                    o.reflect_in_place(v);
                }
            }
            self.dead.insert(self.applied.clone());
            false
        }
    }

    if m.len() != base.rank() {
        return None;
    }
    let mut search = Search {
        target: m,
        applied: vec![0; m.len()],
        path: Vec::new(),
        dead: HashSet::new(),
    };
    let mut o = base.clone();
    if search.run(&mut o) {
        AdmissibleWord::new(TraceWord::from_applied(search.path), base).ok()
    } else {
        None
    }
}

pub fn meet(x: &AdmissibleWord, y: &AdmissibleWord) -> Result<AdmissibleWord, AdmissibleError> {
    x.meet(y)
}

pub fn join(x: &AdmissibleWord, y: &AdmissibleWord) -> Result<AdmissibleWord, AdmissibleError> {
    x.join(y)
}

/// Every principal word `W_{r,y}` dividing `x`, sorted by `(apex, size)`.
pub fn principal_divisors(x: &AdmissibleWord) -> Result<Vec<PrincipalWord>, AdmissibleError> {
    let mut out = Vec::new();
    for y in x.support().iter() {
        for r in 1..=x.multiplicity()[y] as usize {
            let p = principal_word(r, y, x.base())?;
            if vector_leq(p.word.multiplicity(), x.multiplicity()) {
                out.push(p);
            }
        }
    }
    Ok(out)
}

/// Above this many candidate subsets the exhaustive minimality proof is skipped.
const MINIMALITY_BUDGET: u64 = 500_000;

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| {
        acc.saturating_mul((n - i) as u64) / (i as u64 + 1)
    })
}

/// Calls `f` on every `k`-subset of `0..n` (as index slices) until it returns true.
fn any_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + n - k) else {
            return false;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn join_vector<'a>(n: usize, parts: impl Iterator<Item = &'a PrincipalWord>) -> Vec<u32> {
    let mut m = vec![0; n];
    for p in parts {
        for (a, b) in m.iter_mut().zip(p.word.multiplicity()) {
            *a = (*a).max(*b);
        }
    }
    m
}

/// The independent set of principal words whose join is `x`.
///
/// Candidates are the maximal principal divisors of `x`. The result is
/// checked to join to `x`, and (within a fixed budget) no smaller family of
/// principal divisors joins to `x`. If either check fails, the smallest
/// family is found by exhaustive search.
pub fn independent_decomposition(
    x: &AdmissibleWord,
) -> Result<Vec<PrincipalWord>, AdmissibleError> {
    if x.is_empty() {
        return Ok(Vec::new());
    }
    let n = x.base().rank();
    let divisors = principal_divisors(x)?;

    let mut best: HashMap<Vertex, &PrincipalWord> = HashMap::new();
    for p in &divisors {
        best.insert(p.apex, p);
    }
    let candidates: Vec<&PrincipalWord> = best.into_values().collect();
    let mut maximal: Vec<PrincipalWord> = candidates
        .iter()
        .filter(|p| {
            !candidates.iter().any(|q| {
                q.word.multiplicity() != p.word.multiplicity()
                    && vector_leq(p.word.multiplicity(), q.word.multiplicity())
            })
        })
        .map(|p| (*p).clone())
        .collect();
    maximal.sort_by_key(|p| (p.apex, p.size));

    let joins_to_x =
        |parts: &[&PrincipalWord]| join_vector(n, parts.iter().copied()) == x.multiplicity();
    let maximal_refs: Vec<&PrincipalWord> = maximal.iter().collect();
    if joins_to_x(&maximal_refs) {
        let m = maximal.len();
        let budget: u64 = (1..m).map(|k| binomial(divisors.len(), k)).sum();
        let smaller_exists = budget <= MINIMALITY_BUDGET
            && (1..m).any(|k| {
                any_combination(divisors.len(), k, |idx| {
                    let parts: Vec<&PrincipalWord> = idx.iter().map(|&i| &divisors[i]).collect();
                    joins_to_x(&parts)
                })
            });
        if !smaller_exists {
            return Ok(maximal);
        }
    }

    // fallback: smallest family of principal divisors joining to x
    for k in 1..=divisors.len() {
        let mut found = None;
        any_combination(divisors.len(), k, |idx| {
            let parts: Vec<&PrincipalWord> = idx.iter().map(|&i| &divisors[i]).collect();
            if joins_to_x(&parts) {
                found = Some(idx.to_vec());
                true
            } else {
                false
            }
        });
        if let Some(idx) = found {
            return Ok(idx.into_iter().map(|i| divisors[i].clone()).collect());
        }
    }
    Err(AdmissibleError::DecompositionFailed(x.to_string()))
}

/// All admissible words whose multiplicity vector satisfies `keep`, grown
/// level by level from the empty word. `keep` must be closed downward along
/// the growth (if a word is kept, so are its admissible prefixes).
fn enumerate_where(
    base: &Orientation,
    max_len: usize,
    keep: impl Fn(&[u32]) -> bool,
) -> Vec<AdmissibleWord> {
    let mut all = vec![AdmissibleWord::empty(base)];
    let mut level = all.clone();
    for _ in 0..max_len {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for w in &level {
            for v in w.end.sinks().iter() {
                let mut m = w.mult.clone();
                m[v] += 1;
                if keep(&m) && seen.insert(m) {
                    next.push(w.then(v).expect("sink"));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        next.sort_by(|a, b| a.mult.cmp(&b.mult));
        all.extend(next.iter().cloned());
        level = next;
    }
    all
}

/// Every admissible word of length at most `max_len`, ordered by length and
/// then multiplicity vector.
pub fn enumerate(base: &Orientation, max_len: usize) -> Vec<AdmissibleWord> {
    enumerate_where(base, max_len, |_| true)
}

/// Every admissible word whose multiplicities are bounded by `cap`.
pub fn enumerate_capped(base: &Orientation, cap: &[u32]) -> Vec<AdmissibleWord> {
    let max_len = cap.iter().sum::<u32>() as usize;
    enumerate_where(base, max_len, |m| vector_leq(m, cap))
}

/// Every admissible word `Y ⪯ x`.
pub fn enumerate_below(x: &AdmissibleWord) -> Vec<AdmissibleWord> {
    enumerate_capped(x.base(), x.multiplicity())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgraph::{preset, CoxeterGraph, VertexOrder};

    fn graph(name: &str, p: &[&str]) -> CoxeterGraph {
        CoxeterGraph::new(preset(name, p).unwrap())
    }

    fn w(s: &[usize]) -> TraceWord {
        TraceWord::from_written(s.iter().map(|x| x - 1).collect())
    }

    fn vs(s: &[usize]) -> VertexSet {
        s.iter().map(|x| x - 1).collect()
    }

    /// A2 with arrow v2 -> v1.
    fn a2() -> Orientation {
        Orientation::from_order(&graph("A", &["2"]), &VertexOrder::identity(2))
    }

    /// A3 with arrows v1 -> v2 <- v3.
    fn a3_sink_middle() -> Orientation {
        Orientation::from_arrows(&graph("A", &["3"]), &[(0, 1), (2, 1)]).unwrap()
    }

    fn adm(word: &[usize], base: &Orientation) -> AdmissibleWord {
        AdmissibleWord::new(w(word), base).unwrap()
    }

    #[test]
    fn admissibility_examples() {
        let o = a2();
        assert!(is_admissible(&w(&[1]), &o));
        assert!(!is_admissible(&w(&[2]), &o));
        assert!(is_admissible(&TraceWord::empty(), &o));
        assert!(is_admissible(&w(&[1, 2, 1]), &o));
        assert!(matches!(
            AdmissibleWord::new(w(&[2]), &o),
            Err(AdmissibleError::NotAdmissible { position: 0, .. })
        ));
    }

    #[test]
    fn complete_word_examples() {
        let o = a2();
        let k = complete_word(&o).unwrap();
        assert_eq!(k.word().written(), &[1, 0]);
        assert_eq!(k.end(), &o);

        let o = a3_sink_middle();
        let k = complete_word(&o).unwrap();
        assert!(tracemon::equal(&o, k.word(), &w(&[1, 3, 2])));
        for t in 0..4 {
            let kt = AdmissibleWord::new(k.word().pow(t), &o).unwrap();
            assert_eq!(kt.end(), &o);
        }
    }

    #[test]
    fn filter_words_and_hulls() {
        let o = a2();
        assert!(mf_word_of_filter(VertexSet::EMPTY, &o).unwrap().is_empty());
        assert_eq!(mf_word_of_filter(vs(&[1]), &o).unwrap().written(), &[0]);
        assert_eq!(
            mf_word_of_filter(vs(&[2]), &o).unwrap_err(),
            AdmissibleError::NotAFilter(vs(&[2]))
        );
        assert_eq!(hull(VertexSet::EMPTY, &o).unwrap(), VertexSet::EMPTY);
        assert_eq!(hull(vs(&[1, 2]), &o).unwrap(), vs(&[1, 2]));
        assert_eq!(hull(vs(&[1]), &o).unwrap(), vs(&[1, 2]));
        assert!(hull(vs(&[2]), &o).is_err());

        // chain v3 -> v2 -> v1 (v3 <= v2 <= v1)
        let o3 = Orientation::from_order(&graph("A", &["3"]), &VertexOrder::identity(3));
        assert_eq!(hull(vs(&[1]), &o3).unwrap(), vs(&[1, 2]));
    }

    #[test]
    fn principal_word_examples() {
        let o = a2();
        let p = principal_word(1, 1, &o).unwrap();
        assert!(tracemon::equal(&o, p.word().word(), &w(&[2, 1])));
        let p = principal_word(2, 0, &o).unwrap();
        assert!(tracemon::equal(&o, p.word().word(), &w(&[1, 2, 1])));
        assert_eq!(p.canonical_form().len(), 2);
        assert_eq!(p.canonical_form()[0].written(), &[0]);
        assert_eq!(
            principal_word(0, 0, &o).unwrap_err(),
            AdmissibleError::ZeroSize
        );
    }

    #[test]
    fn principal_words_below_powers_of_complete_word() {
        for name in [("A", "3"), ("D", "4"), ("affine-A", "2"), ("B", "3")] {
            let g = graph(name.0, &[name.1]);
            for o in Orientation::all_acyclic(&g) {
                let k = complete_word(&o).unwrap();
                for r in 1..=3 {
                    let kr = AdmissibleWord::new(k.word().pow(r), &o).unwrap();
                    for x in 0..g.rank() {
                        let p = principal_word(r, x, &o).unwrap();
                        assert!(p.word().leq(&kr).unwrap());
                        assert!(tracemon::divides(&o, p.word().word(), kr.word()));
                        assert_eq!(p.word().multiplicity()[x] as usize, r);
                        // leftmost letter is the apex
                        assert_eq!(p.word().word().written()[0], x);
                        assert!(g.is_connected_on(p.word().support()));
                        assert_eq!(p.canonical_form()[0].support(), o.principal_filter(x));
                        for j in 0..r - 1 {
                            let upper = p.canonical_form()[j].support();
                            let lower = p.canonical_form()[j + 1].support();
                            assert_eq!(hull(upper, &o).unwrap(), lower);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn principality_examples() {
        let o = a2();
        assert_eq!(
            is_principal(&adm(&[1, 2, 1], &o)),
            Principality::Principal { size: 2, apex: 0 }
        );
        let o3 = a3_sink_middle();
        let k = adm(&[2], &o3).then(0).unwrap().then(2).unwrap();
        assert_eq!(is_principal(&k), Principality::NotPrincipal);
        assert_eq!(
            is_principal(&adm(&[3, 2], &o3)),
            Principality::Principal { size: 1, apex: 2 }
        );
        let both_sinks = Orientation::from_arrows(&graph("A", &["3"]), &[(1, 0), (1, 2)]).unwrap();
        assert_eq!(
            is_principal(&adm(&[3, 1], &both_sinks)),
            Principality::NotPrincipal
        );
        assert_eq!(
            is_principal(&AdmissibleWord::empty(&o)),
            Principality::Empty
        );
    }

    #[test]
    fn order_and_lattice_examples() {
        let o = a2();
        let one = AdmissibleWord::empty(&o);
        let v1 = adm(&[1], &o);
        let v2v1 = adm(&[2, 1], &o);
        let v1v2v1 = adm(&[1, 2, 1], &o);
        assert!(v1.leq(&v1).unwrap());
        assert!(v1.leq(&v2v1).unwrap());
        assert!(v2v1.leq(&v1v2v1).unwrap());
        assert!(!v1v2v1.leq(&v2v1).unwrap());
        assert_eq!(v1.meet(&v2v1).unwrap(), v1);
        assert_eq!(v1.join(&v2v1).unwrap(), v2v1);
        assert_eq!(v2v1.meet(&v2v1).unwrap(), v2v1);
        assert_eq!(v2v1.join(&one).unwrap(), v2v1);

        let f = v1.factor(&v2v1).unwrap();
        assert!(f.left.is_empty());
        assert!(tracemon::equal(&o, &f.right, &w(&[2])));

        // A3 with v2 a source and v1, v3 sinks
        let o3 = Orientation::from_arrows(&graph("A", &["3"]), &[(1, 0), (1, 2)]).unwrap();
        let x = adm(&[1], &o3);
        let y = adm(&[3], &o3);
        assert!(x.meet(&y).unwrap().is_empty());
        assert_eq!(x.join(&y).unwrap(), adm(&[3, 1], &o3));
        let f = x.factor(&y).unwrap();
        assert!(tracemon::equal(&o3, &f.left, &w(&[1])));
        assert!(tracemon::equal(&o3, &f.right, &w(&[3])));
    }

    #[test]
    fn different_bases_rejected() {
        let g = graph("A", &["2"]);
        let o1 = Orientation::from_order(&g, &VertexOrder::identity(2));
        let o2 = o1.opposite();
        let x = AdmissibleWord::empty(&o1);
        let y = AdmissibleWord::empty(&o2);
        assert_eq!(x.leq(&y).unwrap_err(), AdmissibleError::DifferentBase);
        assert_eq!(x.meet(&y).unwrap_err(), AdmissibleError::DifferentBase);
        assert!(x.factor(&y).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let o = a2();
        let k = complete_word(&o).unwrap();
        let d = independent_decomposition(&k).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].size(), d[0].apex()), (1, 1));

        let o3 = Orientation::from_arrows(&graph("A", &["3"]), &[(1, 0), (1, 2)]).unwrap();
        let d = independent_decomposition(&adm(&[3, 1], &o3)).unwrap();
        let keys: Vec<_> = d.iter().map(|p| (p.size(), p.apex())).collect();
        assert_eq!(keys, vec![(1, 0), (1, 2)]);

        let p = principal_word(3, 1, &o3).unwrap();
        let d = independent_decomposition(p.word()).unwrap();
        assert_eq!(d.len(), 1);
        assert_eq!((d[0].size(), d[0].apex()), (3, 1));
        assert!(independent_decomposition(&AdmissibleWord::empty(&o3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn enumeration_counts() {
        let o = a2();
        let words = enumerate(&o, 3);
        // 1, v1, v2v1, v1v2v1
        assert_eq!(words.len(), 4);
        let capped = enumerate_capped(&o, &[1, 1]);
        assert_eq!(capped.len(), 3);
        let below = enumerate_below(&adm(&[1, 2, 1], &o));
        assert_eq!(below.len(), 4);
    }

    #[test]
    fn realization_round_trip() {
        let g = graph("affine-A", &["2"]);
        for o in Orientation::all_acyclic(&g) {
            for x in enumerate(&o, 6) {
                let r = realize_vector(x.multiplicity(), &o).unwrap();
                assert_eq!(r, x);
            }
        }
        assert!(realize_vector(&[0, 1], &a2()).is_none());
    }
}
