//! Recognition of finite irreducible Coxeter groups from their graphs.

use std::fmt;

use crate::coxgraph::{CoxeterMatrix, Label, Vertex};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoxeterType {
    /// A finite type with its usual name (`A3`, `B4`, `H3`, `I2(7)`, ...).
    Finite(String),
    Infinite,
}

impl CoxeterType {
    pub fn is_finite(&self) -> bool {
        matches!(self, CoxeterType::Finite(_))
    }
}

impl fmt::Display for CoxeterType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterType::Finite(name) => write!(f, "finite ({name})"),
            CoxeterType::Infinite => f.write_str("infinite"),
        }
    }
}

/// Table-driven classification of an irreducible Coxeter matrix.
pub fn finite_type_oracle(matrix: &CoxeterMatrix) -> CoxeterType {
    let n = matrix.rank();
    let finite = |s: String| CoxeterType::Finite(s);
    if n == 1 {
        return finite("A1".into());
    }
    let mut edges: Vec<(Vertex, Vertex, u32)> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            match matrix.get(i, j) {
                Label::Infinity => return CoxeterType::Infinite,
                Label::Finite(m) if m > 2 => edges.push((i, j, m)),
                Label::Finite(_) => {}
            }
        }
    }
    if n == 2 {
        let m = edges[0].2;
        return finite(match m {
            3 => "A2".into(),
            4 => "B2".into(),
            _ => format!("I2({m})"),
        });
    }
    // connected with n - 1 edges: a tree
    if edges.len() != n - 1 {
        return CoxeterType::Infinite;
    }
    let mut degree = vec![0usize; n];
    for &(a, b, _) in &edges {
        degree[a] += 1;
        degree[b] += 1;
    }
    let heavy: Vec<&(Vertex, Vertex, u32)> = edges.iter().filter(|e| e.2 > 3).collect();
    let branch: Vec<Vertex> = (0..n).filter(|&v| degree[v] >= 3).collect();

    if branch.is_empty() {
        let path = path_order(n, &edges);
        let labels: Vec<u32> = path
            .windows(2)
            .map(|w| {
                edges
                    .iter()
                    .find(|e| (e.0 == w[0] && e.1 == w[1]) || (e.0 == w[1] && e.1 == w[0]))
                    .unwrap()
                    .2
            })
            .collect();
        return match heavy.len() {
            0 => finite(format!("A{n}")),
            1 => {
                let pos = labels.iter().position(|&m| m > 3).unwrap();
                let at_end = pos == 0 || pos == labels.len() - 1;
                match labels[pos] {
                    4 if at_end => finite(format!("B{n}")),
                    4 if n == 4 => finite("F4".into()),
                    5 if at_end && (n == 3 || n == 4) => finite(format!("H{n}")),
                    _ => CoxeterType::Infinite,
                }
            }
            _ => CoxeterType::Infinite,
        };
    }

    if branch.len() > 1 || degree[branch[0]] > 3 || !heavy.is_empty() {
        return CoxeterType::Infinite;
    }
    let centre = branch[0];
    let mut arms: Vec<usize> = edges
        .iter()
        .filter_map(|&(a, b, _)| match (a == centre, b == centre) {
            (true, _) => Some(b),
            (_, true) => Some(a),
            _ => None,
        })
        .map(|start| arm_length(centre, start, &edges))
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => finite(format!("D{n}")),
        [1, 2, 2] => finite("E6".into()),
        [1, 2, 3] => finite("E7".into()),
        [1, 2, 4] => finite("E8".into()),
        _ => CoxeterType::Infinite,
    }
}

fn neighbours(v: Vertex, edges: &[(Vertex, Vertex, u32)]) -> impl Iterator<Item = Vertex> + '_ {
    edges.iter().filter_map(move |&(a, b, _)| {
        if a == v {
            Some(b)
        } else if b == v {
            Some(a)
        } else {
            None
        }
    })
}

/// Vertices of a path graph in order, from an endpoint.
fn path_order(n: usize, edges: &[(Vertex, Vertex, u32)]) -> Vec<Vertex> {
    let start = (0..n)
        .find(|&v| neighbours(v, edges).count() == 1)
        .expect("path has an endpoint");
    let mut out = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(next) = neighbours(cur, edges).find(|&u| u != prev) {
        out.push(next);
        prev = cur;
        cur = next;
    }
    out
}

/// Number of vertices on the arm leaving `centre` through `start`.
fn arm_length(centre: Vertex, start: Vertex, edges: &[(Vertex, Vertex, u32)]) -> usize {
    let mut len = 1;
    let mut prev = centre;
    let mut cur = start;
    while let Some(next) = neighbours(cur, edges).find(|&u| u != prev) {
        len += 1;
        prev = cur;
        cur = next;
    }
    len
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgraph::{preset, Preset};

    fn classify(name: &str, p: &[&str]) -> CoxeterType {
        finite_type_oracle(&preset(name, p).unwrap())
    }

    #[test]
    fn finite_families() {
        assert_eq!(classify("H", &["3"]), CoxeterType::Finite("H3".into()));
        assert_eq!(classify("A", &["1"]), CoxeterType::Finite("A1".into()));
        assert_eq!(classify("A", &["7"]), CoxeterType::Finite("A7".into()));
        assert_eq!(classify("B", &["5"]), CoxeterType::Finite("B5".into()));
        assert_eq!(classify("D", &["6"]), CoxeterType::Finite("D6".into()));
        assert_eq!(classify("E8", &[]), CoxeterType::Finite("E8".into()));
        assert_eq!(classify("F4", &[]), CoxeterType::Finite("F4".into()));
        assert_eq!(classify("H4", &[]), CoxeterType::Finite("H4".into()));
        assert_eq!(classify("I2", &["7"]), CoxeterType::Finite("I2(7)".into()));
    }

    #[test]
    fn infinite_shapes() {
        assert_eq!(classify("I2", &["inf"]), CoxeterType::Infinite);
        assert_eq!(classify("affine-A", &["2"]), CoxeterType::Infinite);
        assert_eq!(classify("affine-C2", &[]), CoxeterType::Infinite);
        // affine D4: star with four arms
        let star = CoxeterMatrix::from_edges(
            5,
            &[
                (0, 1, Label::Finite(3)),
                (0, 2, Label::Finite(3)),
                (0, 3, Label::Finite(3)),
                (0, 4, Label::Finite(3)),
            ],
        )
        .unwrap();
        assert_eq!(finite_type_oracle(&star), CoxeterType::Infinite);
        // E6 with a long arm becomes affine E6-like / hyperbolic
        let t = CoxeterMatrix::from_edges(
            7,
            &[
                (0, 1, Label::Finite(3)),
                (1, 2, Label::Finite(3)),
                (2, 3, Label::Finite(3)),
                (3, 4, Label::Finite(3)),
                (2, 5, Label::Finite(3)),
                (5, 6, Label::Finite(3)),
            ],
        )
        .unwrap();
        assert_eq!(finite_type_oracle(&t), CoxeterType::Infinite);
        // H5 and a path with 5 in the middle
        let h5 = CoxeterMatrix::from_edges(
            5,
            &[
                (0, 1, Label::Finite(5)),
                (1, 2, Label::Finite(3)),
                (2, 3, Label::Finite(3)),
                (3, 4, Label::Finite(3)),
            ],
        )
        .unwrap();
        assert_eq!(finite_type_oracle(&h5), CoxeterType::Infinite);
        let mid5 =
            CoxeterMatrix::from_edges(3, &[(0, 1, Label::Finite(3)), (1, 2, Label::Finite(5))])
                .unwrap();
        assert_eq!(finite_type_oracle(&mid5), CoxeterType::Finite("H3".into()));
        let f5 = CoxeterMatrix::from_edges(
            5,
            &[
                (0, 1, Label::Finite(3)),
                (1, 2, Label::Finite(4)),
                (2, 3, Label::Finite(3)),
                (3, 4, Label::Finite(3)),
            ],
        )
        .unwrap();
        assert_eq!(finite_type_oracle(&f5), CoxeterType::Infinite);
    }

    #[test]
    fn catalog_classification() {
        for p in Preset::catalog() {
            let expected = !matches!(
                p,
                Preset::AffineA(_) | Preset::AffineC2 | Preset::InfiniteDihedral
            );
            assert_eq!(
                finite_type_oracle(&p.matrix().unwrap()).is_finite(),
                expected,
                "{}",
                p.name()
            );
        }
    }
}
