//! SNAP edge-list text format.
//!
//! Lines starting with `#` are comments. Every other non-blank line holds
//! exactly two integer labels separated by tabs or spaces. Both orientations
//! of an edge may appear; normalization happens in [`Graph::from_edge_list`].

use std::fs;
use std::io::Write;
use std::path::Path;

use crate::error::{Error, Result};
use crate::graph::{Graph, Label};

/// Parses SNAP text into raw pairs, verbatim and in file order.
pub fn parse_snap(text: &str) -> Result<Vec<(Label, Label)>> {
    let mut pairs = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected 2 tokens, found {}", tokens.len()),
            });
        }
        let label = |tok: &str| {
            tok.parse::<Label>().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("not a non-negative integer label: {tok:?}"),
            })
        };
        pairs.push((label(tokens[0])?, label(tokens[1])?));
    }
    Ok(pairs)
}

pub fn read_snap_file(path: impl AsRef<Path>) -> Result<Vec<(Label, Label)>> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_snap(&text)
}

/// Reads and normalizes a SNAP file in one step.
pub fn load_graph(path: impl AsRef<Path>) -> Result<Graph> {
    Ok(Graph::from_edge_list(read_snap_file(path)?))
}

/// Writes `g` as a SNAP edge list, one `u\tv` line per edge in label space.
///
/// Isolated vertices cannot be expressed in this format and are lost.
pub fn write_snap<W: Write>(g: &Graph, mut out: W) -> std::io::Result<()> {
    writeln!(
        out,
        "# Nodes: {} Edges: {}",
        g.vertex_count(),
        g.edge_count()
    )?;
    for (a, b) in g.to_edge_list() {
        writeln!(out, "{a}\t{b}")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn skips_comments_keeps_duplicates() {
        assert_eq!(
            parse_snap("# hi\n3\t5\n5\t3\n").unwrap(),
            vec![(3, 5), (5, 3)]
        );
    }

    #[test]
    fn space_separated() {
        assert_eq!(parse_snap("1 2\n").unwrap(), vec![(1, 2)]);
        assert_eq!(parse_snap("  7 \t 8  \r\n\n").unwrap(), vec![(7, 8)]);
    }

    #[test]
    fn arity_error_names_line() {
        let err = parse_snap("1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
        let err = parse_snap("# c\n1 2\n4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }), "{err}");
    }

    #[test]
    fn non_integer_rejected() {
        let err = parse_snap("1 2\nx 4\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_snap("-1 4\n").is_err());
    }

    #[test]
    fn write_then_read() {
        let g = Graph::from_edge_list([(10, 20), (20, 30), (30, 10), (30, 40)]);
        let mut buf = Vec::new();
        write_snap(&g, &mut buf).unwrap();
        let back = Graph::from_edge_list(parse_snap(std::str::from_utf8(&buf).unwrap()).unwrap());
        assert_eq!(back, g);
    }
}
