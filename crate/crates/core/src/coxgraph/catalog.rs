//! Standard irreducible Coxeter matrices.

use super::{CoxeterMatrix, GraphError, Label, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Preset {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(Label),
    /// Affine `A_n`: a cycle on `n + 1` vertices (`n >= 2`), or the infinite
    /// dihedral group for `n = 1`.
    AffineA(usize),
    /// Affine `C_2`: a path with labels `4, 4`.
    AffineC2,
    InfiniteDihedral,
}

fn path(n: usize, labels: impl Fn(usize) -> Label) -> Vec<(Vertex, Vertex, Label)> {
    (0..n.saturating_sub(1))
        .map(|i| (i, i + 1, labels(i)))
        .collect()
}

const THREE: Label = Label::Finite(3);

impl Preset {
    pub fn matrix(self) -> Result<CoxeterMatrix, GraphError> {
        let bad = |msg: &str| Err(GraphError::BadParams(msg.to_owned()));
        let (n, edges) = match self {
            Preset::A(n) if n >= 1 => (n, path(n, |_| THREE)),
            Preset::A(_) => return bad("A_n needs n >= 1"),
            Preset::B(n) if n >= 2 => (
                n,
                path(n, |i| if i == n - 2 { Label::Finite(4) } else { THREE }),
            ),
            Preset::B(_) => return bad("B_n needs n >= 2"),
            Preset::D(n) if n >= 4 => {
                let mut e = path(n - 1, |_| THREE);
                e.push((n - 3, n - 1, THREE));
                (n, e)
            }
            Preset::D(_) => return bad("D_n needs n >= 4"),
            Preset::E(n) if (6..=8).contains(&n) => {
                let mut e = path(n - 1, |_| THREE);
                e.push((2, n - 1, THREE));
                (n, e)
            }
            Preset::E(_) => return bad("E_n needs 6 <= n <= 8"),
            Preset::F4 => (
                4,
                path(4, |i| if i == 1 { Label::Finite(4) } else { THREE }),
            ),
            Preset::H(n) if n == 3 || n == 4 => (
                n,
                path(n, |i| if i == 0 { Label::Finite(5) } else { THREE }),
            ),
            Preset::H(_) => return bad("H_n needs n in {3, 4}"),
            Preset::I2(Label::Finite(m)) if m >= 3 => (2, vec![(0, 1, Label::Finite(m))]),
            Preset::I2(Label::Finite(_)) => return bad("I2(m) needs m >= 3"),
            Preset::I2(Label::Infinity) | Preset::InfiniteDihedral | Preset::AffineA(1) => {
                (2, vec![(0, 1, Label::Infinity)])
            }
            Preset::AffineA(n) if n >= 2 => {
                let mut e = path(n + 1, |_| THREE);
                e.push((0, n, THREE));
                (n + 1, e)
            }
            Preset::AffineA(_) => return bad("affine A_n needs n >= 1"),
            Preset::AffineC2 => (3, path(3, |_| Label::Finite(4))),
        };
        CoxeterMatrix::from_edges(n, &edges)
    }

    /// A small catalog of systems covering every family, used by tests and examples.
    pub fn catalog() -> Vec<Preset> {
        vec![
            Preset::A(1),
            Preset::A(2),
            Preset::A(3),
            Preset::A(4),
            Preset::A(5),
            Preset::A(6),
            Preset::B(2),
            Preset::B(3),
            Preset::B(4),
            Preset::D(4),
            Preset::D(5),
            Preset::E(6),
            Preset::F4,
            Preset::H(3),
            Preset::H(4),
            Preset::I2(Label::Finite(5)),
            Preset::I2(Label::Finite(7)),
            Preset::AffineA(2),
            Preset::AffineA(3),
            Preset::AffineC2,
            Preset::InfiniteDihedral,
        ]
    }

    pub fn name(self) -> String {
        match self {
            Preset::A(n) => format!("A{n}"),
            Preset::B(n) => format!("B{n}"),
            Preset::D(n) => format!("D{n}"),
            Preset::E(n) => format!("E{n}"),
            Preset::F4 => "F4".into(),
            Preset::H(n) => format!("H{n}"),
            Preset::I2(m) => format!("I2({m})"),
            Preset::AffineA(n) => format!("affine-A{n}"),
            Preset::AffineC2 => "affine-C2".into(),
            Preset::InfiniteDihedral => "infinite-dihedral".into(),
        }
    }
}

fn parse_rank(params: &[&str], name: &str) -> Result<usize, GraphError> {
    match params {
        [p] => p
            .parse()
            .map_err(|_| GraphError::BadParams(format!("{name}: `{p}` is not a rank"))),
        _ => Err(GraphError::BadParams(format!(
            "{name} takes exactly one parameter"
        ))),
    }
}

fn no_params(params: &[&str], name: &str) -> Result<(), GraphError> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(GraphError::BadParams(format!("{name} takes no parameters")))
    }
}

/// Parses a preset by name. Accepted names (case-insensitive): `A n`, `B n`,
/// `C n` (same matrix as `B n`), `D n`, `E n` / `E6` / `E7` / `E8`, `F4`,
/// `H n` / `H3` / `H4`, `I2 m` (with `m` an integer or `inf`), `affine-A n`,
/// `affine-C2`, `infinite-dihedral`.
pub fn preset(name: &str, params: &[&str]) -> Result<CoxeterMatrix, GraphError> {
    let lower = name.to_ascii_lowercase();
    let p = match lower.as_str() {
        "a" => Preset::A(parse_rank(params, name)?),
        "b" | "c" => Preset::B(parse_rank(params, name)?),
        "d" => Preset::D(parse_rank(params, name)?),
        "e" => Preset::E(parse_rank(params, name)?),
        "e6" | "e7" | "e8" => {
            no_params(params, name)?;
            Preset::E(lower[1..].parse().expect("digit"))
        }
        "f4" => {
            no_params(params, name)?;
            Preset::F4
        }
        "f" if params == ["4"] => Preset::F4,
        "h" => Preset::H(parse_rank(params, name)?),
        "h3" | "h4" => {
            no_params(params, name)?;
            Preset::H(lower[1..].parse().expect("digit"))
        }
        "i2" => match params {
            ["inf"] | ["∞"] => Preset::I2(Label::Infinity),
            [m] => Preset::I2(Label::Finite(m.parse().map_err(|_| {
                GraphError::BadParams(format!("I2: `{m}` is not a label"))
            })?)),
            _ => {
                return Err(GraphError::BadParams(
                    "I2 takes exactly one parameter".into(),
                ))
            }
        },
        "affine-a" | "affinea" | "~a" => Preset::AffineA(parse_rank(params, name)?),
        "affine-c2" | "affinec2" | "~c2" => {
            no_params(params, name)?;
            Preset::AffineC2
        }
        "infinite-dihedral" | "inf-dihedral" => {
            no_params(params, name)?;
            Preset::InfiniteDihedral
        }
        _ => return Err(GraphError::UnknownPreset(name.to_owned())),
    };
    p.matrix()
}
