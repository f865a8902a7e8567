//! Plain edge-list text: a header line `n m`, then `m` lines `u v`.

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("header announces {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn numbers(line: &str, lineno: usize) -> Result<(usize, usize), EdgeListError> {
    let mut it = line.split_whitespace();
    let mut next = || -> Result<usize, EdgeListError> {
        let tok =
            it.next().ok_or_else(|| EdgeListError::Syntax { line: lineno, msg: "expected two integers".into() })?;
        tok.parse().map_err(|_| EdgeListError::Syntax { line: lineno, msg: format!("not a vertex id: {tok:?}") })
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(EdgeListError::Syntax { line: lineno, msg: "trailing tokens".into() });
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (hline, header) = lines.next().ok_or(EdgeListError::Syntax { line: 1, msg: "missing header".into() })?;
    let (n, m) = numbers(header, hline + 1)?;
    let mut edges = Vec::with_capacity(m);
    for (i, l) in lines {
        edges.push(numbers(l, i + 1)?);
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount { expected: m, found: edges.len() });
    }
    Ok(Graph::from_edge_list(n, &edges)?)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_errors() {
        let c5 = Graph::cycle(5);
        let text = emit_edge_list(&c5);
        assert_eq!(text, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), c5);
        assert_eq!(parse_edge_list("1 0\n").unwrap(), Graph::empty(1));
        assert!(matches!(parse_edge_list("2 2\n0 1\n"), Err(EdgeListError::EdgeCount { .. })));
        assert!(matches!(parse_edge_list("2 1\n0 x\n"), Err(EdgeListError::Syntax { line: 2, .. })));
        assert!(matches!(parse_edge_list("2 1\n0 0\n"), Err(EdgeListError::Graph(GraphError::Loop(0)))));
    }
}
