//! The geometric representation on `V = span{α_s}` with the form
//! `B(α_s, α_t) = -2 cos(π / m(s, t))`.
//!
//! Scalars are `f64`. Signs and equalities use the single tolerance [`EPS`].

use std::collections::HashSet;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};
use thiserror::Error;

use crate::coxgraph::{
    CoxeterGraph, CoxeterMatrix, Label, Orientation, Vertex, VertexOrder, VertexSet,
};
use crate::tracemon::TraceWord;

/// Tolerance for sign tests and approximate equality.
pub const EPS: f64 = 1e-8;

/// Grid used to hash root coordinates.
const GRID: f64 = 1e6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RootError {
    #[error("invalid path {0:?}: consecutive vertices must be joined by arrows")]
    InvalidPath(Vec<usize>),
    #[error("vector has dimension {got}, expected {expected}")]
    DimensionMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sign {
    Positive,
    Negative,
    Zero,
    Mixed,
}

/// A vector of `V` in the simple-root basis.
#[derive(Clone, PartialEq)]
pub struct RootVec(DVector<f64>);

impl RootVec {
    pub fn new(coords: Vec<f64>) -> Self {
        RootVec(DVector::from_vec(coords))
    }

    pub fn zeros(n: usize) -> Self {
        RootVec(DVector::zeros(n))
    }

    /// The simple root `α_s`.
    pub fn simple(n: usize, s: Vertex) -> Self {
        let mut v = DVector::zeros(n);
        v[s] = 1.0;
        RootVec(v)
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        self.0.as_slice()
    }

    pub fn coord(&self, s: Vertex) -> f64 {
        self.0[s]
    }

    pub fn as_vector(&self) -> &DVector<f64> {
        &self.0
    }

    pub fn sign(&self) -> Sign {
        sign(self)
    }

    pub fn is_positive(&self) -> bool {
        self.sign() == Sign::Positive
    }

    pub fn is_negative(&self) -> bool {
        self.sign() == Sign::Negative
    }

    /// Vertices with a nonzero coordinate.
    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| c.abs() > EPS)
            .map(|(i, _)| i)
            .collect()
    }

    /// Sum of coordinates.
    pub fn height(&self) -> f64 {
        self.0.sum()
    }

    pub fn approx_eq(&self, other: &RootVec) -> bool {
        self.dim() == other.dim()
            && self
                .0
                .iter()
                .zip(other.0.iter())
                .all(|(a, b)| (a - b).abs() <= EPS)
    }

    /// Coordinates rounded to a fixed grid, for hashing.
    pub fn grid_key(&self) -> Vec<i64> {
        self.0.iter().map(|c| (c * GRID).round() as i64).collect()
    }

    /// Coordinates rounded to integers, if every coordinate is within `EPS` of one.
    pub fn to_integers(&self) -> Option<Vec<i64>> {
        self.0
            .iter()
            .map(|c| ((c - c.round()).abs() <= EPS).then(|| c.round() as i64))
            .collect()
    }
}

impl Neg for RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec(-self.0)
    }
}

impl Neg for &RootVec {
    type Output = RootVec;
    fn neg(self) -> RootVec {
        RootVec(-&self.0)
    }
}

impl Add for &RootVec {
    type Output = RootVec;
    fn add(self, rhs: &RootVec) -> RootVec {
        RootVec(&self.0 + &rhs.0)
    }
}

impl Sub for &RootVec {
    type Output = RootVec;
    fn sub(self, rhs: &RootVec) -> RootVec {
        RootVec(&self.0 - &rhs.0)
    }
}

impl Mul<f64> for &RootVec {
    type Output = RootVec;
    fn mul(self, k: f64) -> RootVec {
        RootVec(&self.0 * k)
    }
}

/// Formats a coordinate as an integer when it is one (within `EPS`), and as
/// a trimmed decimal otherwise.
pub fn format_coord(x: f64) -> String {
    if (x - x.round()).abs() <= EPS {
        let r = x.round();
        if r == 0.0 {
            "0".to_owned()
        } else {
            format!("{r:.0}")
        }
    } else {
        let s = format!("{x:.9}");
        s.trim_end_matches('0').to_owned()
    }
}

/// Coordinates separated by spaces.
impl fmt::Display for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|&c| format_coord(c)).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for RootVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RootVec[{self}]")
    }
}

/// Classifies the coordinate signs of `v` with tolerance `EPS`.
pub fn sign(v: &RootVec) -> Sign {
    let min = v.0.iter().copied().fold(f64::INFINITY, f64::min);
    let max = v.0.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max.abs() <= EPS && min.abs() <= EPS {
        Sign::Zero
    } else if min >= -EPS {
        Sign::Positive
    } else if max <= EPS {
        Sign::Negative
    } else {
        Sign::Mixed
    }
}

/// `B(α_s, α_t)` for all pairs.
#[derive(Debug, Clone, PartialEq)]
pub struct FormMatrix(DMatrix<f64>);

impl FormMatrix {
    pub fn new(matrix: &CoxeterMatrix) -> Self {
        let n = matrix.rank();
        FormMatrix(DMatrix::from_fn(n, n, |i, j| match matrix.get(i, j) {
            Label::Finite(1) => 2.0,
            Label::Finite(2) => 0.0,
            Label::Finite(3) => -1.0,
            Label::Finite(m) => -2.0 * (std::f64::consts::PI / m as f64).cos(),
            Label::Infinity => -2.0,
        }))
    }

    pub fn get(&self, s: Vertex, t: Vertex) -> f64 {
        self.0[(s, t)]
    }

    pub fn as_matrix(&self) -> &DMatrix<f64> {
        &self.0
    }

    /// `B(α_s, λ)`.
    pub fn pair_simple(&self, s: Vertex, v: &RootVec) -> f64 {
        self.0
            .row(s)
            .iter()
            .zip(v.0.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// `B(λ, μ)`.
    pub fn pair(&self, u: &RootVec, v: &RootVec) -> f64 {
        u.0.dot(&(&self.0 * &v.0))
    }
}

/// An element of the group acting on `V`, kept together with its inverse.
#[derive(Clone, PartialEq)]
pub struct GroupElement {
    matrix: DMatrix<f64>,
    inverse: DMatrix<f64>,
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupElement{}", self.matrix)
    }
}

impl GroupElement {
    pub fn identity(n: usize) -> Self {
        GroupElement {
            matrix: DMatrix::identity(n, n),
            inverse: DMatrix::identity(n, n),
        }
    }

    pub fn rank(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn inverse(&self) -> GroupElement {
        GroupElement {
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// `self * other`: `other` acts first.
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            matrix: &self.matrix * &other.matrix,
            inverse: &other.inverse * &self.inverse,
        }
    }

    pub fn apply(&self, v: &RootVec) -> RootVec {
        RootVec(&self.matrix * &v.0)
    }

    /// `w(α_s)`.
    pub fn image_of_simple(&self, s: Vertex) -> RootVec {
        RootVec(self.matrix.column(s).into_owned())
    }

    pub fn approx_eq(&self, other: &GroupElement) -> bool {
        self.matrix.shape() == other.matrix.shape()
            && self
                .matrix
                .iter()
                .zip(other.matrix.iter())
                .all(|(a, b)| (a - b).abs() <= EPS)
    }

    pub fn is_identity(&self) -> bool {
        self.approx_eq(&GroupElement::identity(self.rank()))
    }

    /// `‖Mᵀ B M − B‖∞`.
    pub fn form_defect(&self, form: &FormMatrix) -> f64 {
        let d = self.matrix.transpose() * &form.0 * &self.matrix - &form.0;
        d.iter().fold(0.0, |acc, x| acc.max(x.abs()))
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        self.compose(rhs)
    }
}

/// A Coxeter graph with its bilinear form.
#[derive(Debug, Clone)]
pub struct RootSystem {
    graph: CoxeterGraph,
    form: FormMatrix,
}

impl RootSystem {
    pub fn new(graph: CoxeterGraph) -> Self {
        let form = FormMatrix::new(graph.matrix());
        RootSystem { graph, form }
    }

    pub fn from_matrix(matrix: CoxeterMatrix) -> Self {
        Self::new(CoxeterGraph::new(matrix))
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn form(&self) -> &FormMatrix {
        &self.form
    }

    pub fn rank(&self) -> usize {
        self.graph.rank()
    }

    pub fn simple_root(&self, s: Vertex) -> RootVec {
        RootVec::simple(self.rank(), s)
    }

    pub fn check_dim(&self, v: &RootVec) -> Result<(), RootError> {
        if v.dim() == self.rank() {
            Ok(())
        } else {
            Err(RootError::DimensionMismatch {
                expected: self.rank(),
                got: v.dim(),
            })
        }
    }

    /// `s λ = λ − B(α_s, λ) α_s`.
    pub fn reflect(&self, s: Vertex, v: &RootVec) -> RootVec {
        let b = self.form.pair_simple(s, v);
        let mut out = v.clone();
        out.0[s] -= b;
        out
    }

    /// `ρ(X) λ`: letters applied right to left.
    pub fn apply_word(&self, word: &TraceWord, v: &RootVec) -> RootVec {
        word.applied()
            .fold(v.clone(), |acc, s| self.reflect(s, &acc))
    }

    /// The matrix of the simple reflection `s`: `I − e_s B[s, :]`.
    pub fn reflection(&self, s: Vertex) -> GroupElement {
        let n = self.rank();
        let mut m = DMatrix::identity(n, n);
        for t in 0..n {
            m[(s, t)] -= self.form.get(s, t);
        }
        GroupElement {
            matrix: m.clone(),
            inverse: m,
        }
    }

    /// `ρ(X)` as a matrix.
    pub fn element_of_word(&self, word: &TraceWord) -> GroupElement {
        word.applied()
            .fold(GroupElement::identity(self.rank()), |acc, s| {
                self.reflection(s).compose(&acc)
            })
    }

    /// `c = s_n ... s_1` for the order `(s_1, ..., s_n)`.
    pub fn coxeter_element(&self, order: &VertexOrder) -> GroupElement {
        self.element_of_word(&TraceWord::from_applied(order.as_slice().iter().copied()))
    }

    /// `B(p)` for a path given by its vertices `v_0 → v_1 → ... → v_t`:
    /// 1 for a trivial path, otherwise the product of `−B(α_head, α_tail)`
    /// over its arrows.
    pub fn path_weight(&self, path: &[Vertex], quiver: &Orientation) -> Result<f64, RootError> {
        let valid = !path.is_empty()
            && path.iter().all(|&v| v < self.rank())
            && path.windows(2).all(|w| quiver.has_arrow(w[0], w[1]));
        if !valid {
            return Err(RootError::InvalidPath(path.to_vec()));
        }
        Ok(path
            .windows(2)
            .map(|w| -self.form.get(w[1], w[0]))
            .product())
    }

    /// For each `y`, the sum of `B(p)` over all paths `p: x → y` (zero when
    /// `x ≰ y`), computed by dynamic programming along a topological order.
    pub fn path_weight_sums(&self, x: Vertex, quiver: &Orientation) -> RootVec {
        let n = self.rank();
        let order = quiver.to_order().expect("quiver must be acyclic");
        let mut acc = vec![0.0; n];
        acc[x] = 1.0;
        // sources first: every tail is processed before its heads
        for &v in order.as_slice().iter().rev() {
            if acc[v] == 0.0 {
                continue;
            }
            for w in quiver.successors(v).iter() {
                acc[w] += acc[v] * -self.form.get(w, v);
            }
        }
        RootVec::new(acc)
    }

    /// Positive roots reachable from the simple roots by at most `depth`
    /// simple reflections through positive roots. Sorted by height, then
    /// coordinates.
    pub fn enumerate_roots(&self, depth: usize) -> Vec<RootVec> {
        let n = self.rank();
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut all: Vec<RootVec> = (0..n).map(|s| self.simple_root(s)).collect();
        for r in &all {
            seen.insert(r.grid_key());
        }
        let mut frontier = all.clone();
        for _ in 0..depth {
            let mut next = Vec::new();
            for r in &frontier {
                for s in 0..n {
                    let b = self.reflect(s, r);
                    if b.sign() == Sign::Positive && seen.insert(b.grid_key()) {
                        next.push(b);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            all.extend(next.iter().cloned());
            frontier = next;
        }
        all.sort_by(|a, b| {
            a.height().total_cmp(&b.height()).then_with(|| {
                b.coords()
                    .partial_cmp(a.coords())
                    .expect("finite coordinates")
            })
        });
        all
    }

    /// Whether the full subgraph on `Supp α` is connected.
    pub fn root_support_connected(&self, v: &RootVec) -> bool {
        self.graph.is_connected_on(v.support())
    }
}
