//! The plain-text system file.
//!
//! ```text
//! # comments start with '#'
//! n 3
//! m 1 2 3
//! m 2 3 inf
//! order 1 2 3
//! ```
//!
//! Vertices are 1-based. Pairs without an `m` line commute (`m = 2`). The
//! `order` line lists `s_1 ... s_n` of `c = s_n ... s_1`.

use std::fmt::Write as _;

use thiserror::Error;

use crate::coxgraph::{CoxeterMatrix, GraphError, Label, VertexOrder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: {message}")]
    Line { line: usize, message: String },
    #[error("{0}")]
    File(String),
}

fn at(line: usize, message: impl Into<String>) -> ParseError {
    ParseError::Line {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone)]
pub struct SystemFile {
    pub matrix: CoxeterMatrix,
    pub order: Option<VertexOrder>,
}

fn parse_vertex(tok: &str, n: usize, line: usize) -> Result<usize, ParseError> {
    match tok.parse::<usize>() {
        Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
        _ => Err(at(line, format!("`{tok}` is not a vertex in 1..={n}"))),
    }
}

pub fn parse_system(text: &str) -> Result<SystemFile, ParseError> {
    let mut n: Option<usize> = None;
    let mut edges: Vec<(usize, usize, Label)> = Vec::new();
    let mut order: Option<VertexOrder> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens[0] {
            "n" => {
                if n.is_some() {
                    return Err(at(line, "duplicate `n` line"));
                }
                let [_, v] = tokens.as_slice() else {
                    return Err(at(line, "expected `n <rank>`"));
                };
                match v.parse::<usize>() {
                    Ok(k) if k >= 1 => n = Some(k),
                    _ => return Err(at(line, format!("`{v}` is not a positive rank"))),
                }
            }
            "m" => {
                let n = n.ok_or_else(|| at(line, "`m` before `n`"))?;
                let [_, i, j, v] = tokens.as_slice() else {
                    return Err(at(line, "expected `m <i> <j> <value|inf>`"));
                };
                let (i, j) = (parse_vertex(i, n, line)?, parse_vertex(j, n, line)?);
                if i == j {
                    return Err(at(line, "diagonal entries are fixed at 1"));
                }
                let label = match *v {
                    "inf" => Label::Infinity,
                    other => match other.parse::<u32>() {
                        Ok(m) if m >= 3 => Label::Finite(m),
                        _ => {
                            return Err(at(
                                line,
                                format!("`{other}` is not an integer >= 3 or `inf`"),
                            ))
                        }
                    },
                };
                if edges
                    .iter()
                    .any(|&(a, b, _)| (a, b) == (i, j) || (a, b) == (j, i))
                {
                    return Err(at(
                        line,
                        format!("duplicate entry for pair {} {}", i + 1, j + 1),
                    ));
                }
                edges.push((i, j, label));
            }
            "order" => {
                let n = n.ok_or_else(|| at(line, "`order` before `n`"))?;
                if order.is_some() {
                    return Err(at(line, "duplicate `order` line"));
                }
                if tokens.len() != n + 1 {
                    return Err(at(line, format!("`order` needs {n} vertices")));
                }
                let perm = tokens[1..]
                    .iter()
                    .map(|t| parse_vertex(t, n, line))
                    .collect::<Result<Vec<_>, _>>()?;
                order = Some(VertexOrder::new(perm).map_err(|e| at(line, e.to_string()))?);
            }
            other => return Err(at(line, format!("unknown directive `{other}`"))),
        }
    }

    let n = n.ok_or_else(|| ParseError::File("missing `n` line".into()))?;
    let matrix = CoxeterMatrix::from_edges(n, &edges)
        .map_err(|e: GraphError| ParseError::File(e.to_string()))?;
    Ok(SystemFile { matrix, order })
}

/// Writes `matrix` (and `order`, defaulting to `1 ... n`) in system-file syntax.
pub fn render_system(matrix: &CoxeterMatrix, order: Option<&VertexOrder>) -> String {
    let n = matrix.rank();
    let mut out = format!("n {n}\n");
    for i in 0..n {
        for j in i + 1..n {
            let label = matrix.get(i, j);
            if label.is_edge() {
                writeln!(out, "m {} {} {label}", i + 1, j + 1).unwrap();
            }
        }
    }
    let order = order.cloned().unwrap_or_else(|| VertexOrder::identity(n));
    let list: Vec<String> = order
        .as_slice()
        .iter()
        .map(|v| (v + 1).to_string())
        .collect();
    writeln!(out, "order {}", list.join(" ")).unwrap();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxgraph::Preset;

    #[test]
    fn parses_and_round_trips() {
        let text = "# infinite dihedral\nn 2\nm 1 2 inf   # the only edge\n\norder 2 1\n";
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.matrix.get(0, 1), Label::Infinity);
        assert_eq!(sys.order.as_ref().unwrap().as_slice(), &[1, 0]);
        let again = parse_system(&render_system(&sys.matrix, sys.order.as_ref())).unwrap();
        assert_eq!(again.matrix, sys.matrix);

        for p in Preset::catalog() {
            let m = p.matrix().unwrap();
            assert_eq!(parse_system(&render_system(&m, None)).unwrap().matrix, m);
        }
    }

    #[test]
    fn order_is_optional() {
        assert!(parse_system("n 1\n").unwrap().order.is_none());
    }

    #[test]
    fn errors_carry_line_numbers() {
        let cases = [
            ("n 2\nm 1 3 3\n", 2),
            ("n 2\nm 1 2 2\n", 2),
            ("m 1 2 3\n", 1),
            ("n 2\nm 1 2 3\norder 1 1\n", 3),
            ("n 2\nm 1 2 3\norder 1\n", 3),
            ("n 2\nfoo\n", 2),
            ("n 2\nm 1 2 3\nm 2 1 4\n", 3),
            ("n x\n", 1),
        ];
        for (text, line) in cases {
            match parse_system(text) {
                Err(ParseError::Line { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(matches!(
            parse_system("n 3\nm 1 2 3\n"),
            Err(ParseError::File(_))
        ));
        assert!(matches!(
            parse_system("# nothing\n"),
            Err(ParseError::File(_))
        ));
    }
}
