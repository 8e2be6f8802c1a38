//! DIMACS edge format: `c` comment lines, one `p edge n m` header, `e u v` lines
//! with 1-based vertices.

use std::collections::HashSet;
use std::fmt::Write;

use log::warn;

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DimacsWarning {
    /// An `e` line repeated an edge already seen; it was ignored.
    DuplicateEdge { line: usize, u: usize, v: usize },
    /// The header's edge count disagrees with the number of distinct edges.
    EdgeCountMismatch { declared: usize, found: usize },
}

impl std::fmt::Display for DimacsWarning {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            DimacsWarning::DuplicateEdge { line, u, v } => {
                write!(f, "line {line}: duplicate edge {u} {v} ignored")
            }
            DimacsWarning::EdgeCountMismatch { declared, found } => {
                write!(f, "header declares {declared} edges, found {found} distinct")
            }
        }
    }
}

/// Parses DIMACS edge text, logging any warnings.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let (g, warnings) = parse_dimacs_with_warnings(text)?;
    for w in &warnings {
        warn!("{w}");
    }
    Ok(g)
}

pub fn parse_dimacs_with_warnings(text: &str) -> Result<(Graph, Vec<DimacsWarning>)> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    let mut warnings = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let err = |msg: String| Error::Parse { line, msg };
        let mut tok = raw.split_whitespace();
        match tok.next() {
            None | Some("c") => {}
            Some("p") => {
                if header.is_some() {
                    return Err(err("second `p` line".into()));
                }
                let format = tok.next();
                if !matches!(format, Some("edge") | Some("col")) {
                    return Err(err(format!("expected `p edge n m`, got `{}`", raw.trim())));
                }
                let n = parse_count(tok.next(), "vertex count").map_err(&err)?;
                let m = parse_count(tok.next(), "edge count").map_err(&err)?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens after `p edge n m`".into()));
                }
                header = Some((n, m));
            }
            Some("e") => {
                let Some((n, _)) = header else {
                    return Err(err("edge line before `p` header".into()));
                };
                let u = parse_count(tok.next(), "endpoint").map_err(&err)?;
                let v = parse_count(tok.next(), "endpoint").map_err(&err)?;
                if tok.next().is_some() {
                    return Err(err("trailing tokens after `e u v`".into()));
                }
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(format!("vertex {w} out of range 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(format!("self-loop at vertex {u}")));
                }
                let key = (u.min(v), u.max(v));
                if seen.insert(key) {
                    edges.push((u - 1, v - 1));
                } else {
                    warnings.push(DimacsWarning::DuplicateEdge { line, u, v });
                }
            }
            Some(other) => return Err(err(format!("unknown line type `{other}`"))),
        }
    }

    let (n, declared) = header.ok_or(Error::Parse { line: 0, msg: "missing `p edge n m` header".into() })?;
    if declared != edges.len() {
        warnings.push(DimacsWarning::EdgeCountMismatch { declared, found: edges.len() });
    }
    let g = Graph::from_edges(n, edges)?;
    Ok((g, warnings))
}

fn parse_count(tok: Option<&str>, what: &str) -> std::result::Result<usize, String> {
    let tok = tok.ok_or_else(|| format!("missing {what}"))?;
    tok.parse().map_err(|_| format!("invalid {what} `{tok}`"))
}

/// Writes `p edge n m` followed by one `e u v` line per edge (`u < v`, 1-based),
/// sorted lexicographically, LF-terminated.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::with_capacity(16 + 12 * g.m());
    writeln!(out, "p edge {} {}", g.n(), g.m()).unwrap();
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gnp_random;
    use proptest::prelude::*;

    #[test]
    fn parses_examples() {
        let g = parse_dimacs("p edge 2 1\ne 1 2").unwrap();
        assert_eq!(g, Graph::complete(2));
        let g = parse_dimacs("c a triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n").unwrap();
        assert_eq!(g, Graph::complete(3));
    }

    #[test]
    fn duplicate_edges_collapse_with_warning() {
        let (g, w) = parse_dimacs_with_warnings("p edge 3 2\ne 1 2\ne 1 2").unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(
            w,
            vec![
                DimacsWarning::DuplicateEdge { line: 3, u: 1, v: 2 },
                DimacsWarning::EdgeCountMismatch { declared: 2, found: 1 },
            ]
        );
        // reversed orientation is also a duplicate
        let (g, w) = parse_dimacs_with_warnings("p edge 3 2\ne 1 2\ne 2 1").unwrap();
        assert_eq!(g.m(), 1);
        assert_eq!(w.len(), 2);
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("p edge x 1\n", 1),
            ("p graph 3 1\n", 1),
            ("p edge 3 1\ne 1 4\n", 2),
            ("p edge 3 1\ne 0 1\n", 2),
            ("c x\np edge 3 1\n\ne 2 2\n", 4),
            ("e 1 2\np edge 2 1\n", 1),
            ("p edge 2 1\nq 1 2\n", 2),
            ("p edge 2 1\np edge 2 1\n", 2),
        ];
        for (text, line) in cases {
            match parse_dimacs(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: expected parse error, got {other:?}"),
            }
        }
        assert!(matches!(parse_dimacs("c only\n"), Err(Error::Parse { line: 0, .. })));
    }

    #[test]
    fn writes_examples() {
        assert_eq!(write_dimacs(&Graph::complete(3)), "p edge 3 3\ne 1 2\ne 1 3\ne 2 3\n");
        assert_eq!(write_dimacs(&Graph::empty(1)), "p edge 1 0\n");
    }

    #[test]
    fn gnp_round_trip() {
        let g = gnp_random(10, 0.3, 5);
        assert_eq!(parse_dimacs(&write_dimacs(&g)).unwrap(), g);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..40, p in 0.0f64..=1.0, seed in any::<u64>()) {
            let g = gnp_random(n, p, seed);
            let (h, warnings) = parse_dimacs_with_warnings(&write_dimacs(&g)).unwrap();
            prop_assert!(warnings.is_empty());
            prop_assert_eq!(h, g);
        }
    }
}
