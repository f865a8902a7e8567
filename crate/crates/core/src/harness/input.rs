//! Reading graphs from text: graph6 lines or a single edge list.

use std::io::Read;
use std::path::Path;

use thiserror::Error;

use crate::graph::{parse_edge_list, parse_graph6_with, EdgeListError, Graph, Graph6Error};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {source}")]
    Graph6 { line: usize, source: Graph6Error },
    #[error(transparent)]
    EdgeList(#[from] EdgeListError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

/// One graph6 line, numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Line<'a> {
    pub number: usize,
    pub text: &'a str,
}

/// True when the first nonblank line is `n m`, which no graph6 line can be.
pub fn looks_like_edge_list(text: &str) -> bool {
    let Some(first) = text.lines().find(|l| !l.trim().is_empty()) else { return false };
    let parts: Vec<&str> = first.split_whitespace().collect();
    parts.len() == 2 && parts.iter().all(|p| p.parse::<usize>().is_ok())
}

/// Nonblank lines of a graph6 file.
pub fn graph6_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| Line { number: i + 1, text: l.trim_end_matches('\r') })
}

/// Parses one graph6 line. In lenient mode nonzero padding is accepted and
/// logged.
pub fn parse_line(line: &Line<'_>, strict: bool) -> Result<Graph, InputError> {
    let parsed =
        parse_graph6_with(line.text, strict).map_err(|source| InputError::Graph6 { line: line.number, source })?;
    if let Some(offset) = parsed.padding_warning {
        log::warn!("line {}: nonzero padding bits at byte {offset}", line.number);
    }
    Ok(parsed.graph)
}

/// Every graph in `text`, stopping at the first malformed line.
pub fn parse_graphs(text: &str, strict: bool) -> Result<Vec<Graph>, InputError> {
    if looks_like_edge_list(text) {
        return Ok(vec![parse_edge_list(text)?]);
    }
    graph6_lines(text).map(|l| parse_line(&l, strict)).collect()
}

pub fn read_source(path: &Path) -> Result<String, InputError> {
    let io = |source| InputError::Io { path: path.display().to_string(), source };
    if path == Path::new("-") {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(io)?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).map_err(io)
    }
}

/// A command-line graph argument: `-` for standard input, an existing file,
/// or else a literal graph6 string.
pub fn graphs_from_arg(arg: &str, strict: bool) -> Result<Vec<Graph>, InputError> {
    let path = Path::new(arg);
    if arg == "-" || path.is_file() {
        parse_graphs(&read_source(path)?, strict)
    } else {
        parse_graphs(arg, strict)
    }
}
