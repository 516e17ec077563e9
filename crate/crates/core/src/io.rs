//! graph6, edge-list and DOT text formats.
//!
//! Only the short graph6 form is supported (order at most 62). A record is one
//! byte `n + 63` followed by the upper-triangle adjacency bits in column-major
//! order (`(0,1), (0,2), (1,2), (0,3), …`), six bits per byte, most
//! significant first, zero-padded, each six-bit group offset by 63.

use std::fmt::Write as _;
use std::io::BufRead;

use thiserror::Error;

use crate::graph::{pair_count, Graph, GraphError};

/// Largest order representable in short-form graph6.
pub const GRAPH6_MAX_ORDER: usize = 62;

/// Optional header that may precede the first record of a graph6 stream.
pub const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte} at position {position} is outside the printable range 63..=126")]
    ByteOutOfRange { position: usize, byte: u8 },
    #[error("long-form graph6 (order above {GRAPH6_MAX_ORDER}) is not supported")]
    LongFormUnsupported,
    #[error("truncated graph6 payload: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("{extra} trailing bytes after graph6 payload")]
    TrailingBytes { extra: usize },
    #[error("non-zero padding bits in the final graph6 byte")]
    NonZeroPadding,
    #[error("order {order} cannot be written as short-form graph6")]
    OrderTooLarge { order: usize },
    #[error("line {line}: {reason}")]
    EdgeList { line: usize, reason: String },
    #[error("line {line}: {source}")]
    EdgeListGraph {
        line: usize,
        #[source]
        source: GraphError,
    },
}

/// A graph6 parse failure inside a multi-record stream.
#[derive(Debug, Error)]
pub enum StreamError {
    #[error("line {line}: {source}")]
    Record {
        line: usize,
        #[source]
        source: FormatError,
    },
    #[error("read error: {0}")]
    Io(#[from] std::io::Error),
}

impl StreamError {
    pub fn line(&self) -> Option<usize> {
        match self {
            StreamError::Record { line, .. } => Some(*line),
            StreamError::Io(_) => None,
        }
    }
}

fn payload_len(order: usize) -> usize {
    pair_count(order).div_ceil(6)
}

/// Decodes one short-form graph6 record (no surrounding whitespace).
pub fn parse_graph6(record: &str) -> Result<Graph, FormatError> {
    let bytes = record.as_bytes();
    let (&first, payload) = bytes.split_first().ok_or(FormatError::Empty)?;
    if let Some((position, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(FormatError::ByteOutOfRange { position, byte });
    }
    if first == 126 {
        return Err(FormatError::LongFormUnsupported);
    }
    let order = (first - 63) as usize;
    let expected = payload_len(order);
    if payload.len() < expected {
        return Err(FormatError::Truncated {
            expected,
            found: payload.len(),
        });
    }
    if payload.len() > expected {
        return Err(FormatError::TrailingBytes {
            extra: payload.len() - expected,
        });
    }

    let bit_at = |idx: usize| (payload[idx / 6] - 63) >> (5 - idx % 6) & 1 == 1;
    let pairs = pair_count(order);
    if (pairs..expected * 6).any(bit_at) {
        return Err(FormatError::NonZeroPadding);
    }
    let edges = Graph::pairs(order)
        .enumerate()
        .filter(|&(idx, _)| bit_at(idx))
        .map(|(_, e)| e);
    Ok(Graph::from_edges(order, edges).expect("decoded pairs are in range"))
}

/// Encodes `g` as a short-form graph6 record.
pub fn write_graph6(g: &Graph) -> Result<String, FormatError> {
    let order = g.order();
    if order > GRAPH6_MAX_ORDER {
        return Err(FormatError::OrderTooLarge { order });
    }
    let mut payload = vec![0u8; payload_len(order)];
    for (idx, (u, v)) in Graph::pairs(order).enumerate() {
        if g.has_edge(u, v) {
            payload[idx / 6] |= 1 << (5 - idx % 6);
        }
    }
    let mut out = String::with_capacity(1 + payload.len());
    out.push((order as u8 + 63) as char);
    out.extend(payload.into_iter().map(|b| (b + 63) as char));
    Ok(out)
}

/// Line-by-line graph6 reader. Blank lines are skipped and a leading
/// `>>graph6<<` header on the first line is consumed.
pub struct Graph6Reader<R> {
    reader: R,
    line: usize,
    buf: String,
}

impl<R: BufRead> Graph6Reader<R> {
    pub fn new(reader: R) -> Self {
        Graph6Reader {
            reader,
            line: 0,
            buf: String::new(),
        }
    }
}

impl<R: BufRead> Iterator for Graph6Reader<R> {
    /// The 1-based line number and the decoded graph.
    type Item = Result<(usize, Graph), StreamError>;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            self.buf.clear();
            match self.reader.read_line(&mut self.buf) {
                Ok(0) => return None,
                Ok(_) => {}
                Err(e) => return Some(Err(e.into())),
            }
            self.line += 1;
            let mut text = self.buf.trim_end_matches(['\n', '\r']);
            if self.line == 1 {
                text = text.strip_prefix(GRAPH6_HEADER).unwrap_or(text);
            }
            if text.is_empty() {
                continue;
            }
            let line = self.line;
            return Some(
                parse_graph6(text)
                    .map(|g| (line, g))
                    .map_err(|source| StreamError::Record { line, source }),
            );
        }
    }
}

/// Parses `n <count>` followed by one `u v` pair per line (0-based). Blank
/// lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(FormatError::EdgeList {
        line: 1,
        reason: "missing 'n <count>' header".into(),
    })?;
    let order = match header.split_whitespace().collect::<Vec<_>>().as_slice() {
        ["n", count] => count.parse::<usize>().ok(),
        _ => None,
    }
    .ok_or_else(|| FormatError::EdgeList {
        line: header_line,
        reason: format!("expected 'n <count>', found '{header}'"),
    })?;
    Graph::empty(order).map_err(|source| FormatError::EdgeListGraph {
        line: header_line,
        source,
    })?;

    let mut edges = Vec::new();
    for (line, text) in lines {
        let pair = match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
            _ => None,
        }
        .ok_or_else(|| FormatError::EdgeList {
            line,
            reason: format!("expected 'u v', found '{text}'"),
        })?;
        Graph::from_edges(order, [pair])
            .map_err(|source| FormatError::EdgeListGraph { line, source })?;
        edges.push(pair);
    }
    Ok(Graph::from_edges(order, edges).expect("edges validated per line"))
}

/// Writes the edge-list form read by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.order());
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Undirected DOT document with vertices declared in index order and each
/// edge once. Missing labels fall back to the vertex index.
pub fn export_dot(g: &Graph, labels: Option<&[String]>) -> String {
    let mut out = String::from("graph G {\n");
    for v in 0..g.order() {
        let label = labels
            .and_then(|l| l.get(v))
            .map(|s| dot_escape(s))
            .unwrap_or_else(|| v.to_string());
        let _ = writeln!(out, "  {v} [label=\"{label}\"];");
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{build, FamilySpec};

    fn c5() -> Graph {
        Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap()
    }

    #[test]
    fn graph6_golden_records() {
        let k3 = Graph::complete(3).unwrap();
        assert_eq!(parse_graph6("Bw").unwrap(), k3);
        assert_eq!(write_graph6(&k3).unwrap(), "Bw");
        assert_eq!(parse_graph6("D??").unwrap(), Graph::empty(5).unwrap());
        assert_eq!(parse_graph6("Dhc").unwrap(), c5());
        assert_eq!(write_graph6(&c5()).unwrap(), "Dhc");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()).unwrap(), "@");
        assert_eq!(write_graph6(&Graph::empty(0).unwrap()).unwrap(), "?");
        assert_eq!(parse_graph6("?").unwrap(), Graph::empty(0).unwrap());
    }

    #[test]
    fn graph6_matches_known_external_record() {
        // Edges a-c, a-e, b-d, d-e on five vertices encode to "DQc".
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(write_graph6(&g).unwrap(), "DQc");
    }

    #[test]
    fn graph6_errors() {
        assert_eq!(parse_graph6(""), Err(FormatError::Empty));
        assert_eq!(
            parse_graph6("B "),
            Err(FormatError::ByteOutOfRange {
                position: 1,
                byte: b' '
            })
        );
        assert_eq!(
            parse_graph6("Bw\n"),
            Err(FormatError::ByteOutOfRange {
                position: 2,
                byte: b'\n'
            })
        );
        assert_eq!(parse_graph6("~?@A"), Err(FormatError::LongFormUnsupported));
        assert_eq!(
            parse_graph6("D?"),
            Err(FormatError::Truncated {
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph6("Bw?"),
            Err(FormatError::TrailingBytes { extra: 1 })
        );
        assert_eq!(parse_graph6("Bx"), Err(FormatError::NonZeroPadding));
        let big = Graph::empty(63).unwrap();
        assert_eq!(
            write_graph6(&big),
            Err(FormatError::OrderTooLarge { order: 63 })
        );
    }

    #[test]
    fn writer_length() {
        for n in 0..=62 {
            let g = Graph::complete(n).unwrap();
            let s = write_graph6(&g).unwrap();
            assert_eq!(s.len(), 1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
            assert_eq!(parse_graph6(&s).unwrap(), g);
        }
    }

    #[test]
    fn stream_reader_handles_header_and_blank_lines() {
        let text = ">>graph6<<Bw\n\nD??\r\nDhc\n";
        let graphs: Vec<_> = Graph6Reader::new(text.as_bytes())
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(graphs.len(), 3);
        assert_eq!(graphs[0], (1, Graph::complete(3).unwrap()));
        assert_eq!(graphs[2], (4, c5()));

        let text = ">>graph6<<\nBw\n";
        let graphs: Vec<_> = Graph6Reader::new(text.as_bytes())
            .collect::<Result<_, _>>()
            .unwrap();
        assert_eq!(graphs, vec![(2, Graph::complete(3).unwrap())]);
    }

    #[test]
    fn stream_reader_reports_line_numbers() {
        let text = "Bw\nD??\nD!?\n";
        let err = Graph6Reader::new(text.as_bytes())
            .collect::<Result<Vec<_>, _>>()
            .unwrap_err();
        assert_eq!(err.line(), Some(3));
        // The header is only honoured at the start of the stream.
        let text = "Bw\n>>graph6<<Bw\n";
        let err = Graph6Reader::new(text.as_bytes())
            .collect::<Result<Vec<_>, _>>()
            .unwrap_err();
        assert_eq!(err.line(), Some(2));
    }

    #[test]
    fn edge_list_examples() {
        assert_eq!(
            parse_edge_list("n 3\n0 1\n1 2\n0 2").unwrap(),
            Graph::complete(3).unwrap()
        );
        assert_eq!(parse_edge_list("n 4").unwrap(), Graph::empty(4).unwrap());
        assert_eq!(
            parse_edge_list("n 2\n0 0"),
            Err(FormatError::EdgeListGraph {
                line: 2,
                source: GraphError::Loop { vertex: 0 }
            })
        );
        assert_eq!(
            parse_edge_list("n 2\n0 2"),
            Err(FormatError::EdgeListGraph {
                line: 2,
                source: GraphError::VertexOutOfRange {
                    vertex: 2,
                    order: 2
                }
            })
        );
        assert!(matches!(
            parse_edge_list("n 3\n0 1 2"),
            Err(FormatError::EdgeList { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3\n0 1"),
            Err(FormatError::EdgeList { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list(""),
            Err(FormatError::EdgeList { .. })
        ));
        assert!(matches!(
            parse_edge_list("n 65"),
            Err(FormatError::EdgeListGraph { line: 1, .. })
        ));
        assert_eq!(
            parse_edge_list("# comment\nn 2\n\n1 0\n").unwrap(),
            Graph::complete(2).unwrap()
        );
    }

    #[test]
    fn edge_list_round_trip() {
        let g = c5();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn dot_examples() {
        let dot = export_dot(&Graph::complete(2).unwrap(), None);
        assert_eq!(dot.matches(" -- ").count(), 1);
        assert!(dot.starts_with("graph G {\n"));

        let dot = export_dot(&Graph::empty(3).unwrap(), None);
        assert_eq!(dot.matches("[label=").count(), 3);
        assert_eq!(dot.matches(" -- ").count(), 0);

        let spec = FamilySpec::HGraph(6);
        let labels = spec.vertex_labels();
        let dot = export_dot(&build(&spec).unwrap(), Some(&labels));
        assert_eq!(dot.matches(" -- ").count(), 6 * 3 + 15);
        assert!(dot.contains("  6 [label=\"y0\"];"));

        let dot = export_dot(&Graph::empty(1).unwrap(), Some(&["a\"b".to_string()]));
        assert!(dot.contains(r#"[label="a\"b"]"#));
    }
}
