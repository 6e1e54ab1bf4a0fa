//! Coxeter matrices, Coxeter graphs, acyclic orientations and the vertex poset.
//!
//! Vertices are 0-based indices internally; vertex `i` corresponds to the
//! generator `s_{i+1}`. At most 64 vertices are supported, which lets vertex
//! sets live in a single machine word.

mod catalog;

pub use catalog::{preset, Preset};

use std::fmt;

use thiserror::Error;

/// A vertex of the Coxeter graph (0-based).
pub type Vertex = usize;

/// Largest supported rank.
pub const MAX_RANK: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("Coxeter matrix is empty")]
    Empty,
    #[error("Coxeter matrix is not square (row {row} has {len} entries, expected {n})")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("rank {n} exceeds the supported maximum of {MAX_RANK}")]
    TooLarge { n: usize },
    #[error("Coxeter matrix is asymmetric at ({i}, {j})")]
    Asymmetric { i: usize, j: usize },
    #[error("diagonal entry ({i}, {i}) must be 1")]
    BadDiagonal { i: usize },
    #[error("off-diagonal entry ({i}, {j}) must be at least 2")]
    OffDiagonalBelow2 { i: usize, j: usize },
    #[error("Coxeter graph is disconnected (reducible system)")]
    Disconnected,
    #[error("vertex order is not a permutation of 1..={n}")]
    NotAPermutation { n: usize },
    #[error("orientation contains an oriented cycle")]
    CyclicOrientation,
    #[error("arrow {from} -> {to} is not an edge of the Coxeter graph")]
    NotAnEdge { from: usize, to: usize },
    #[error("edge {a} - {b} is oriented more than once")]
    DuplicateEdge { a: usize, b: usize },
    #[error("edge {a} - {b} has no orientation")]
    MissingEdge { a: usize, b: usize },
    #[error("vertex {v} is out of range for rank {n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
    #[error("bad preset parameters: {0}")]
    BadParams(String),
}

/// An entry `m(s, s')` of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Finite(u32),
    Infinity,
}

impl Label {
    /// Whether the entry produces an edge of the Coxeter graph (`m > 2`).
    pub fn is_edge(self) -> bool {
        match self {
            Label::Finite(m) => m > 2,
            Label::Infinity => true,
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinity => f.write_str("inf"),
        }
    }
}

/// A finite set of vertices, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// The set `{0, 1, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 & (1u64 << v) != 0
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | (1u64 << v))
    }

    pub fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_disjoint(self, other: VertexSet) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest vertex of the set.
    pub fn first(self) -> Option<Vertex> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as Vertex)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as Vertex;
                bits &= bits - 1;
                Some(v)
            }
        })
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|v| v + 1)).finish()
    }
}

/// Anything that knows which vertices are joined by an edge of the Coxeter
/// graph. Two letters of the graph monoid commute exactly when they are
/// distinct and not adjacent.
pub trait Adjacency {
    fn vertex_count(&self) -> usize;
    fn neighbors(&self, v: Vertex) -> VertexSet;

    fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.neighbors(a).contains(b)
    }
}

/// A validated Coxeter matrix of an irreducible Coxeter system.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<Label>,
}

impl CoxeterMatrix {
    /// Validates a square table of labels.
    pub fn new(rows: Vec<Vec<Label>>) -> Result<Self, GraphError> {
        let n = rows.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if n > MAX_RANK {
            return Err(GraphError::TooLarge { n });
        }
        for (row, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(GraphError::NotSquare {
                    row,
                    len: r.len(),
                    n,
                });
            }
        }
        for i in 0..n {
            if rows[i][i] != Label::Finite(1) {
                return Err(GraphError::BadDiagonal { i });
            }
            for j in 0..n {
                if rows[i][j] != rows[j][i] {
                    return Err(GraphError::Asymmetric { i, j });
                }
                if i != j {
                    if let Label::Finite(m) = rows[i][j] {
                        if m < 2 {
                            return Err(GraphError::OffDiagonalBelow2 { i, j });
                        }
                    }
                }
            }
        }
        let m = CoxeterMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        };
        if !m.is_connected() {
            return Err(GraphError::Disconnected);
        }
        Ok(m)
    }

    /// Builds a matrix of rank `n` from its edges; unspecified pairs get `m = 2`.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex, Label)]) -> Result<Self, GraphError> {
        let mut rows = vec![vec![Label::Finite(2); n]; n];
        for (i, row) in rows.iter_mut().enumerate() {
            row[i] = Label::Finite(1);
        }
        for &(a, b, m) in edges {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { v: a.max(b), n });
            }
            rows[a][b] = m;
            rows[b][a] = m;
        }
        Self::new(rows)
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: Vertex, j: Vertex) -> Label {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<Label>> {
        self.entries.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(0);
        let mut stack = vec![0];
        while let Some(v) = stack.pop() {
            for w in 0..self.n {
                if !seen.contains(w) && self.get(v, w).is_edge() {
                    seen.insert(w);
                    stack.push(w);
                }
            }
        }
        seen.len() == self.n
    }
}

/// The Coxeter graph: an edge joins `i` and `j` exactly when `m(i, j) > 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    matrix: CoxeterMatrix,
    adj: Vec<VertexSet>,
}

impl CoxeterGraph {
    pub fn new(matrix: CoxeterMatrix) -> Self {
        let n = matrix.rank();
        let adj = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| i != j && matrix.get(i, j).is_edge())
                    .collect()
            })
            .collect();
        CoxeterGraph { matrix, adj }
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.rank())
    }

    /// Edges `(i, j, label)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex, Label)> + '_ {
        (0..self.rank()).flat_map(move |i| {
            self.adj[i]
                .iter()
                .filter(move |&j| j > i)
                .map(move |j| (i, j, self.matrix.get(i, j)))
        })
    }

    /// Whether the full subgraph on `set` is connected. The empty set counts as connected.
    pub fn is_connected_on(&self, set: VertexSet) -> bool {
        let Some(start) = set.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for w in self.adj[v].intersection(set).difference(seen).iter() {
                seen.insert(w);
                stack.push(w);
            }
        }
        seen == set
    }
}

/// Validates a raw table and returns its Coxeter graph.
pub fn validate_matrix(rows: Vec<Vec<Label>>) -> Result<CoxeterGraph, GraphError> {
    CoxeterMatrix::new(rows).map(CoxeterGraph::new)
}

impl Adjacency for CoxeterGraph {
    fn vertex_count(&self) -> usize {
        self.rank()
    }

    fn neighbors(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }
}

/// A permutation `(s_1, ..., s_n)` of the generators, defining `c = s_n ... s_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexOrder(Vec<Vertex>);

impl VertexOrder {
    pub fn new(order: Vec<Vertex>) -> Result<Self, GraphError> {
        let n = order.len();
        let set: VertexSet = order.iter().copied().filter(|&v| v < n).collect();
        if n > MAX_RANK || set.len() != n {
            return Err(GraphError::NotAPermutation { n });
        }
        Ok(VertexOrder(order))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder((0..n).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The order of `c^{-1} = s_1 ... s_n`.
    pub fn reversed(&self) -> Self {
        VertexOrder(self.0.iter().rev().copied().collect())
    }

    /// `position[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// An acyclic orientation of a Coxeter graph.
///
/// `out[v]` holds the heads of arrows leaving `v` and `inc[v]` the tails of
/// arrows entering `v`. Reflection at a vertex does not re-check acyclicity;
/// [`Orientation::is_acyclic`] is available for callers that need it.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Orientation {
    out: Vec<VertexSet>,
    inc: Vec<VertexSet>,
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.arrows().map(|(a, b)| format!("{}->{}", a + 1, b + 1)))
            .finish()
    }
}

impl Orientation {
    /// Builds an orientation from a list of arrows `(tail, head)`, one per edge.
    pub fn from_arrows(g: &CoxeterGraph, arrows: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let n = g.rank();
        let mut out = vec![VertexSet::EMPTY; n];
        let mut inc = vec![VertexSet::EMPTY; n];
        for &(a, b) in arrows {
            if a >= n || b >= n {
                return Err(GraphError::VertexOutOfRange { v: a.max(b), n });
            }
            if !g.adjacent(a, b) {
                return Err(GraphError::NotAnEdge { from: a, to: b });
            }
            if out[a].contains(b) || out[b].contains(a) {
                return Err(GraphError::DuplicateEdge { a, b });
            }
            out[a].insert(b);
            inc[b].insert(a);
        }
        for (a, b, _) in g.edges() {
            if !out[a].contains(b) && !out[b].contains(a) {
                return Err(GraphError::MissingEdge { a, b });
            }
        }
        let o = Orientation { out, inc };
        if !o.is_acyclic() {
            return Err(GraphError::CyclicOrientation);
        }
        Ok(o)
    }

    /// The `c`-orientation: every edge points from the later vertex of the
    /// order to the earlier one.
    pub fn from_order(g: &CoxeterGraph, order: &VertexOrder) -> Self {
        let n = g.rank();
        assert_eq!(order.len(), n, "vertex order has the wrong rank");
        let pos = order.positions();
        let mut out = vec![VertexSet::EMPTY; n];
        let mut inc = vec![VertexSet::EMPTY; n];
        for (a, b, _) in g.edges() {
            let (tail, head) = if pos[a] > pos[b] { (a, b) } else { (b, a) };
            out[tail].insert(head);
            inc[head].insert(tail);
        }
        Orientation { out, inc }
    }

    /// Recovers the vertex order of the Coxeter element whose orientation this
    /// is: sinks come first, ties broken by smallest index.
    pub fn to_order(&self) -> Result<VertexOrder, GraphError> {
        let n = self.rank();
        let mut placed = VertexSet::EMPTY;
        let mut order = Vec::with_capacity(n);
        while order.len() < n {
            let next =
                (0..n).find(|&v| !placed.contains(v) && self.out[v].difference(placed).is_empty());
            match next {
                Some(v) => {
                    placed.insert(v);
                    order.push(v);
                }
                None => return Err(GraphError::CyclicOrientation),
            }
        }
        Ok(VertexOrder(order))
    }

    pub fn rank(&self) -> usize {
        self.out.len()
    }

    pub fn successors(&self, v: Vertex) -> VertexSet {
        self.out[v]
    }

    pub fn predecessors(&self, v: Vertex) -> VertexSet {
        self.inc[v]
    }

    pub fn has_arrow(&self, from: Vertex, to: Vertex) -> bool {
        self.out[from].contains(to)
    }

    /// All arrows `(tail, head)`, sorted by tail then head.
    pub fn arrows(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.rank()).flat_map(move |a| self.out[a].iter().map(move |b| (a, b)))
    }

    /// Reverses every arrow incident to `x`.
    pub fn reflect(&self, x: Vertex) -> Self {
        let mut o = self.clone();
        o.reflect_in_place(x);
        o
    }

    pub fn reflect_in_place(&mut self, x: Vertex) {
        let nbrs = self.out[x].union(self.inc[x]);
        std::mem::swap(&mut self.out[x], &mut self.inc[x]);
        for y in nbrs.iter() {
            if self.out[y].contains(x) {
                self.out[y].remove(x);
                self.inc[y].insert(x);
            } else {
                self.inc[y].remove(x);
                self.out[y].insert(x);
            }
        }
    }

    pub fn is_sink(&self, v: Vertex) -> bool {
        self.out[v].is_empty()
    }

    pub fn is_source(&self, v: Vertex) -> bool {
        self.inc[v].is_empty()
    }

    pub fn sinks(&self) -> VertexSet {
        (0..self.rank()).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> VertexSet {
        (0..self.rank()).filter(|&v| self.is_source(v)).collect()
    }

    pub fn opposite(&self) -> Self {
        Orientation {
            out: self.inc.clone(),
            inc: self.out.clone(),
        }
    }

    pub fn is_acyclic(&self) -> bool {
        // Kahn: repeatedly strip sinks.
        let n = self.rank();
        let mut removed = VertexSet::EMPTY;
        loop {
            let sinks: VertexSet = (0..n)
                .filter(|&v| !removed.contains(v) && self.out[v].difference(removed).is_empty())
                .collect();
            if sinks.is_empty() {
                return removed.len() == n;
            }
            removed = removed.union(sinks);
        }
    }

    /// The principal filter `{y : x <= y}`: everything reachable from `x`.
    pub fn principal_filter(&self, x: Vertex) -> VertexSet {
        self.upward_closure(VertexSet::singleton(x))
    }

    /// The principal ideal `{y : y <= x}`.
    pub fn principal_ideal(&self, x: Vertex) -> VertexSet {
        self.opposite().principal_filter(x)
    }

    /// Smallest filter containing `set`.
    pub fn upward_closure(&self, set: VertexSet) -> VertexSet {
        let mut closed = set;
        let mut stack: Vec<Vertex> = set.iter().collect();
        while let Some(v) = stack.pop() {
            for w in self.out[v].difference(closed).iter() {
                closed.insert(w);
                stack.push(w);
            }
        }
        closed
    }

    /// `x <= y` in the vertex poset: there is a path from `x` to `y`.
    pub fn leq(&self, x: Vertex, y: Vertex) -> bool {
        self.principal_filter(x).contains(y)
    }

    pub fn is_filter(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.out[v].is_subset(set))
    }

    /// Every path of the quiver, trivial paths included, as vertex sequences.
    pub fn all_paths(&self) -> Vec<Vec<Vertex>> {
        let mut paths = Vec::new();
        let mut stack: Vec<Vec<Vertex>> = (0..self.rank()).map(|v| vec![v]).collect();
        while let Some(p) = stack.pop() {
            let last = *p.last().expect("paths are nonempty");
            for w in self.out[last].iter() {
                let mut q = p.clone();
                q.push(w);
                stack.push(q);
            }
            paths.push(p);
        }
        paths.sort();
        paths
    }

    /// Every acyclic orientation of `g`, in a fixed order.
    pub fn all_acyclic(g: &CoxeterGraph) -> Vec<Orientation> {
        let edges: Vec<(Vertex, Vertex)> = g.edges().map(|(a, b, _)| (a, b)).collect();
        assert!(edges.len() < 32, "too many edges to enumerate orientations");
        (0u32..(1u32 << edges.len()))
            .filter_map(|mask| {
                let arrows: Vec<_> = edges
                    .iter()
                    .enumerate()
                    .map(|(k, &(a, b))| if mask & (1 << k) != 0 { (b, a) } else { (a, b) })
                    .collect();
                Orientation::from_arrows(g, &arrows).ok()
            })
            .collect()
    }
}

impl Adjacency for Orientation {
    fn vertex_count(&self) -> usize {
        self.rank()
    }

    fn neighbors(&self, v: Vertex) -> VertexSet {
        self.out[v].union(self.inc[v])
    }
}
