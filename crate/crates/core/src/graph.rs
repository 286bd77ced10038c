//! Undirected simple graphs and the whitespace edge-list format.
//!
//! The text format is one `u w` pair per line, `#` starting a comment line.
//! A graph whose node set is larger than the set of labels appearing in
//! edges (isolated nodes) is written with a leading `n=<count>` line, and
//! the parser accepts that line as the first non-comment line.

use std::collections::HashMap;
use std::fs;
use std::io::{self, BufRead, Write};
use std::path::Path;

use crate::error::{Error, Result};

pub type NodeId = usize;

/// Undirected, unweighted, simple graph on nodes `0..node_count`.
///
/// Edges are stored once as `(u, w)` with `u < w`, sorted. Adjacency lists
/// are sorted as well. Immutable after construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    node_count: usize,
    edges: Vec<(NodeId, NodeId)>,
    adjacency: Vec<Vec<NodeId>>,
}

impl Graph {
    pub fn empty(node_count: usize) -> Self {
        Self {
            node_count,
            edges: Vec::new(),
            adjacency: vec![Vec::new(); node_count],
        }
    }

    /// Builds a simple graph, dropping self-loops and duplicate pairs.
    ///
    /// Panics if an endpoint is `>= node_count`.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut canon: Vec<(NodeId, NodeId)> = edges
            .into_iter()
            .filter(|&(u, w)| u != w)
            .map(|(u, w)| {
                assert!(
                    u < node_count && w < node_count,
                    "edge ({u}, {w}) out of range for {node_count} nodes"
                );
                if u < w {
                    (u, w)
                } else {
                    (w, u)
                }
            })
            .collect();
        canon.sort_unstable();
        canon.dedup();

        let mut adjacency = vec![Vec::new(); node_count];
        for &(u, w) in &canon {
            adjacency[u].push(w);
            adjacency[w].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Self {
            node_count,
            edges: canon,
            adjacency,
        }
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Canonical `(min, max)` pairs in ascending order.
    pub fn edges(&self) -> &[(NodeId, NodeId)] {
        &self.edges
    }

    pub fn neighbors(&self, u: NodeId) -> &[NodeId] {
        &self.adjacency[u]
    }

    pub fn degree(&self, u: NodeId) -> usize {
        self.adjacency[u].len()
    }

    pub fn has_edge(&self, u: NodeId, w: NodeId) -> bool {
        u < self.node_count && self.adjacency[u].binary_search(&w).is_ok()
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        self.adjacency.iter().map(Vec::len).collect()
    }
}

/// Maps dense node ids back to the labels used in the input file.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LabelMap {
    labels: Vec<String>,
    index: HashMap<String, NodeId>,
}

impl LabelMap {
    /// Labels `"0"`, `"1"`, ... for generated graphs.
    pub fn identity(node_count: usize) -> Self {
        let mut map = Self::default();
        for i in 0..node_count {
            map.insert(i.to_string());
        }
        map
    }

    fn insert(&mut self, label: String) -> NodeId {
        if let Some(&id) = self.index.get(&label) {
            return id;
        }
        let id = self.labels.len();
        self.index.insert(label.clone(), id);
        self.labels.push(label);
        id
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, id: NodeId) -> &str {
        &self.labels[id]
    }

    pub fn id(&self, label: &str) -> Option<NodeId> {
        self.index.get(label).copied()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

fn parse_header(line: &str) -> Option<&str> {
    line.strip_prefix("n=")
}

/// Parses an edge list from any buffered reader. See [`parse_edge_list`].
pub fn read_edge_list<R: BufRead>(reader: R) -> Result<(Graph, LabelMap)> {
    let mut labels = LabelMap::default();
    let mut pairs = Vec::new();
    let mut declared: Option<(usize, usize)> = None;
    let mut seen_content = false;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line.map_err(|e| match e.kind() {
            io::ErrorKind::InvalidData => Error::Parse {
                line: line_no,
                message: "input is not valid UTF-8".into(),
            },
            _ => Error::Io(e),
        })?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        let first = tokens.next().unwrap_or_default();
        let second = tokens.next();
        let extra = tokens.next();

        if !seen_content && second.is_none() {
            if let Some(count) = parse_header(first) {
                let count = count.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid node count header `{trimmed}`"),
                })?;
                declared = Some((count, line_no));
                seen_content = true;
                continue;
            }
        }
        seen_content = true;

        let (Some(second), None) = (second, extra) else {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected two node labels, got `{trimmed}`"),
            });
        };
        if second.starts_with('#') {
            return Err(Error::Parse {
                line: line_no,
                message: format!("node label `{second}` may not start with '#'"),
            });
        }
        let u = labels.insert(first.to_owned());
        let w = labels.insert(second.to_owned());
        pairs.push((u, w));
    }

    let mut node_count = labels.len();
    if let Some((count, line)) = declared {
        if count < node_count {
            return Err(Error::Parse {
                line,
                message: format!("header declares {count} nodes but {node_count} labels appear"),
            });
        }
        node_count = count;
        let mut next = 0usize;
        while labels.len() < count {
            let candidate = format!("__isolated_{next}");
            next += 1;
            if labels.id(&candidate).is_none() {
                labels.insert(candidate);
            }
        }
    }
    Ok((Graph::from_edges(node_count, pairs), labels))
}

/// Parses SNAP-style edge-list text.
///
/// Labels are re-indexed densely in order of first appearance. Directed
/// input is symmetrized; self-loops and duplicate edges are dropped.
pub fn parse_edge_list(text: &str) -> Result<(Graph, LabelMap)> {
    read_edge_list(text.as_bytes())
}

pub fn load_edge_list(path: &Path) -> Result<(Graph, LabelMap)> {
    let file = fs::File::open(path)?;
    read_edge_list(io::BufReader::new(file))
}

/// Writes edges in canonical order using `labels`. A `n=<count>` header is
/// emitted only when some node would otherwise be lost (degree zero).
pub fn write_edge_list_to<W: Write>(g: &Graph, labels: &LabelMap, mut out: W) -> io::Result<()> {
    assert_eq!(labels.len(), g.node_count(), "label map does not cover the graph");
    if (0..g.node_count()).any(|u| g.degree(u) == 0) {
        writeln!(out, "n={}", g.node_count())?;
    }
    for &(u, w) in g.edges() {
        let (a, b) = (labels.label(u), labels.label(w));
        // A line beginning with '#' would read back as a comment.
        if a.starts_with('#') {
            writeln!(out, "{b} {a}")?;
        } else {
            writeln!(out, "{a} {b}")?;
        }
    }
    Ok(())
}

pub fn write_edge_list(g: &Graph, labels: &LabelMap) -> String {
    let mut buf = Vec::new();
    write_edge_list_to(g, labels, &mut buf).expect("writing to a Vec cannot fail");
    String::from_utf8(buf).expect("labels are UTF-8")
}

/// Re-expresses `other` (parsed with its own label map) in the id space of
/// `reference`. Fails unless both describe the same node set.
pub fn align_to(
    reference: &LabelMap,
    other: &Graph,
    other_labels: &LabelMap,
) -> Result<Graph> {
    if other.node_count() != reference.len() {
        return Err(Error::NodeSetMismatch(format!(
            "{} nodes versus {}",
            other.node_count(),
            reference.len()
        )));
    }
    let mut remap = vec![usize::MAX; other.node_count()];
    for (id, label) in other_labels.labels().iter().enumerate() {
        if let Some(target) = reference.id(label) {
            remap[id] = target;
        } else if other.degree(id) > 0 {
            return Err(Error::NodeSetMismatch(format!("unknown node label `{label}`")));
        }
    }
    Ok(Graph::from_edges(
        reference.len(),
        other.edges().iter().map(|&(u, w)| (remap[u], remap[w])),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle() {
        let (g, labels) = parse_edge_list("0 1\n1 2\n2 0\n").unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.degree_sequence(), vec![2, 2, 2]);
        assert_eq!(labels.label(2), "2");
    }

    #[test]
    fn duplicates_and_loops_are_dropped() {
        let (g, labels) = parse_edge_list("a b\nb a\na a\n").unwrap();
        assert_eq!(g.node_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(labels.id("a"), Some(0));
        assert_eq!(labels.id("b"), Some(1));
    }

    #[test]
    fn first_appearance_order() {
        let (g, labels) = parse_edge_list("# comment\n\n10 7\n7 3\n").unwrap();
        assert_eq!(labels.labels(), &["10", "7", "3"]);
        assert_eq!(g.edges(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn star_degrees() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]);
        assert_eq!(g.degree_sequence(), vec![3, 1, 1, 1]);
    }

    #[test]
    fn malformed_line_reports_number() {
        let err = parse_edge_list("0 1\n2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("0 1\n1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
        let err = parse_edge_list("0 #1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }), "{err}");
    }

    #[test]
    fn header_preserves_isolated_nodes() {
        let (g, labels) = parse_edge_list("n=5\na b\n").unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(labels.len(), 5);
        assert_eq!(g.edge_count(), 1);

        let err = parse_edge_list("n=1\na b\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse_edge_list("n=x\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn header_only_allowed_first() {
        let err = parse_edge_list("a b\nn=5\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }

    #[test]
    fn write_triangle_and_empty() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
        let text = write_edge_list(&g, &LabelMap::identity(3));
        assert_eq!(text.lines().count(), 3);
        assert_eq!(write_edge_list(&Graph::empty(0), &LabelMap::identity(0)), "");
    }

    #[test]
    fn isolated_nodes_round_trip() {
        let g = Graph::from_edges(4, [(0, 2)]);
        let text = write_edge_list(&g, &LabelMap::identity(4));
        assert!(text.starts_with("n=4\n"));
        let (back, labels) = parse_edge_list(&text).unwrap();
        assert_eq!(back.node_count(), 4);
        let aligned = align_to(&LabelMap::identity(4), &back, &labels).unwrap();
        assert_eq!(aligned, g);
    }

    #[test]
    fn align_rejects_foreign_labels() {
        let (g, labels) = parse_edge_list("a b\n").unwrap();
        let (other, other_labels) = parse_edge_list("a c\n").unwrap();
        assert!(align_to(&labels, &other, &other_labels).is_err());
        let (bigger, bigger_labels) = parse_edge_list("a b\nb c\n").unwrap();
        assert!(align_to(&labels, &bigger, &bigger_labels).is_err());
        assert_eq!(align_to(&labels, &g, &labels).unwrap(), g);
    }

    #[test]
    fn invalid_utf8_is_a_parse_error() {
        let err = read_edge_list(&b"a b\n\xff\xfe c\n"[..]).unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }), "{err}");
    }
}
