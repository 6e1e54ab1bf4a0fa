//! The graph monoid of a Coxeter graph: words modulo commutation of letters
//! that are not joined by an edge.
//!
//! **Word convention.** A [`TraceWord`] is stored exactly as written,
//! `x_l ... x_1`, left to right. The rightmost letter `x_1` is applied
//! first. So the literal `"1 2 1"` stands for `v1 v2 v1`, and `"2 1"` applies
//! `v1` and then `v2`.

use std::fmt;

use thiserror::Error;

use crate::coxgraph::{Adjacency, Vertex, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("{divisor} is not a right divisor of {word}")]
    NotADivisor { word: String, divisor: String },
    #[error("letter {letter} is out of range for rank {n}")]
    LetterOutOfRange { letter: usize, n: usize },
}

/// An element of the graph monoid, represented by one of its words.
///
/// Stored as written (`x_l ... x_1`); the last stored letter is applied first.
/// Deliberately not `PartialEq`: equality in the monoid depends on the graph,
/// use [`equal`].
#[derive(Clone, Default)]
pub struct TraceWord {
    letters: Vec<Vertex>,
}

impl TraceWord {
    /// The empty word `1`.
    pub fn empty() -> Self {
        TraceWord {
            letters: Vec::new(),
        }
    }

    /// From letters as written, `x_l ... x_1` (last element applied first).
    pub fn from_written(letters: Vec<Vertex>) -> Self {
        TraceWord { letters }
    }

    /// From letters in application order, `x_1, x_2, ..., x_l`.
    pub fn from_applied<I: IntoIterator<Item = Vertex>>(applied: I) -> Self {
        let mut letters: Vec<Vertex> = applied.into_iter().collect();
        letters.reverse();
        TraceWord { letters }
    }

    pub fn letter(v: Vertex) -> Self {
        TraceWord { letters: vec![v] }
    }

    /// Letters as written, leftmost (applied last) first.
    pub fn written(&self) -> &[Vertex] {
        &self.letters
    }

    /// Letters in application order: `x_1` first.
    pub fn applied(&self) -> impl DoubleEndedIterator<Item = Vertex> + ExactSizeIterator + '_ {
        self.letters.iter().rev().copied()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        self.letters.iter().copied().collect()
    }

    /// Multiplicity vector `m_X(v)` over `n` vertices.
    pub fn multiplicity(&self, n: usize) -> Vec<u32> {
        let mut m = vec![0; n];
        for &v in &self.letters {
            m[v] += 1;
        }
        m
    }

    pub fn is_multiplicity_free(&self) -> bool {
        self.support().len() == self.len()
    }

    /// `X^T = x_1 ... x_l`.
    pub fn transpose(&self) -> Self {
        TraceWord::from_applied(self.letters.iter().copied())
    }

    /// The product `self * other`: `other` is applied first.
    pub fn concat(&self, other: &TraceWord) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        TraceWord { letters }
    }

    pub fn pow(&self, t: usize) -> Self {
        TraceWord {
            letters: self.letters.repeat(t),
        }
    }

    pub fn check_rank(&self, n: usize) -> Result<(), TraceError> {
        match self.letters.iter().find(|&&v| v >= n) {
            Some(&letter) => Err(TraceError::LetterOutOfRange { letter, n }),
            None => Ok(()),
        }
    }
}

/// Written with 1-based vertex indices separated by spaces, leftmost letter
/// first; the empty word prints as `()`.
impl fmt::Display for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("()");
        }
        for (i, v) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}", v + 1)?;
        }
        Ok(())
    }
}

impl fmt::Debug for TraceWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TraceWord({self})")
    }
}

/// Foata normal form: blocks of pairwise commuting letters, first-applied
/// block first. Every letter of block `k + 1` is equal or adjacent to some
/// letter of block `k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct FoataForm {
    blocks: Vec<VertexSet>,
}

impl FoataForm {
    pub fn blocks(&self) -> &[VertexSet] {
        &self.blocks
    }

    /// Canonical representative word: blocks written last-applied first,
    /// each block's letters in increasing index order.
    pub fn to_word(&self) -> TraceWord {
        TraceWord::from_written(self.blocks.iter().rev().flat_map(|b| b.iter()).collect())
    }
}

/// Foata normal form of `word`: a letter lands one block above the highest
/// block holding a letter it does not commute with.
pub fn normal_form<A: Adjacency + ?Sized>(adj: &A, word: &TraceWord) -> FoataForm {
    let n = adj.vertex_count();
    // top[v] = 1 + index of the highest block containing v (0 if none yet)
    let mut top = vec![0usize; n];
    let mut blocks: Vec<VertexSet> = Vec::new();
    for v in word.applied() {
        let level = adj
            .neighbors(v)
            .with(v)
            .iter()
            .map(|u| top[u])
            .max()
            .unwrap_or(0);
        if level == blocks.len() {
            blocks.push(VertexSet::EMPTY);
        }
        blocks[level].insert(v);
        top[v] = level + 1;
    }
    FoataForm { blocks }
}

/// Trace equality.
pub fn equal<A: Adjacency + ?Sized>(adj: &A, x: &TraceWord, y: &TraceWord) -> bool {
    x.len() == y.len() && normal_form(adj, x) == normal_form(adj, y)
}

/// Strips `divisor` from the right of `word`, returning the remaining letters
/// in application order, or `None` when `divisor` is not a right divisor.
fn strip_right<A: Adjacency + ?Sized>(
    adj: &A,
    word: &TraceWord,
    divisor: &TraceWord,
) -> Option<Vec<Vertex>> {
    let mut rest: Vec<Vertex> = word.applied().collect();
    for y in divisor.applied() {
        let i = rest.iter().position(|&v| v == y)?;
        let blockers = adj.neighbors(y);
        if rest[..i].iter().any(|&v| blockers.contains(v)) {
            return None;
        }
        rest.remove(i);
    }
    Some(rest)
}

/// `divisor ⪯ word`, i.e. `word = U * divisor` for some `U`.
pub fn divides<A: Adjacency + ?Sized>(adj: &A, divisor: &TraceWord, word: &TraceWord) -> bool {
    divisor.len() <= word.len() && strip_right(adj, word, divisor).is_some()
}

/// The unique `U` with `word = U * divisor`.
pub fn quotient<A: Adjacency + ?Sized>(
    adj: &A,
    word: &TraceWord,
    divisor: &TraceWord,
) -> Result<TraceWord, TraceError> {
    strip_right(adj, word, divisor)
        .map(TraceWord::from_applied)
        .ok_or_else(|| TraceError::NotADivisor {
            word: word.to_string(),
            divisor: divisor.to_string(),
        })
}
