//! The non-centralizer graph as an explicit complete multipartite graph.
//!
//! Two elements are adjacent when their centralizers differ, so the graph is
//! determined by its parts (the equal-centralizer classes). Only the parts are
//! stored; edges are generated on demand.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::analysis::beta_partition;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup};

/// Largest order accepted by [`oracle_graph`].
pub const ORACLE_ORDER_CAP: usize = 256;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonCentralizerGraph {
    labels: Vec<String>,
    elements: Vec<Element>,
    parts: Vec<Vec<usize>>,
    part_of: Vec<usize>,
    induced: bool,
}

impl NonCentralizerGraph {
    pub fn vertex_count(&self) -> usize {
        self.elements.len()
    }

    /// Element label of each vertex.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Group element behind each vertex.
    pub fn elements(&self) -> &[Element] {
        &self.elements
    }

    /// Parts as vertex-index lists.
    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn is_induced(&self) -> bool {
        self.induced
    }

    pub fn degree(&self, v: usize) -> usize {
        self.vertex_count() - self.parts[self.part_of[v]].len()
    }

    /// Degrees in ascending order, from part sizes.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn is_regular(&self) -> bool {
        self.degree_sequence().windows(2).all(|w| w[0] == w[1])
    }

    pub fn edge_count(&self) -> usize {
        let n = self.vertex_count();
        let squares: usize = self.parts.iter().map(|p| p.len() * p.len()).sum();
        (n * n - squares) / 2
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.part_of[u] != self.part_of[v]
    }

    /// Edges `(u, v)` with `u < v` in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.vertex_count();
        (0..n).flat_map(move |u| (u + 1..n).filter(move |&v| self.adjacent(u, v)).map(move |v| (u, v)))
    }
}

/// Builds the full graph, or the graph induced on the non-central elements.
pub fn build_graph(g: &FiniteGroup, induced: bool) -> NonCentralizerGraph {
    let p = beta_partition(g);
    let first = usize::from(induced);
    let elements: Vec<Element> = g.elements().filter(|&x| !induced || p.class_of(x) != 0).collect();
    let mut vertex = vec![usize::MAX; g.order()];
    for (v, &x) in elements.iter().enumerate() {
        vertex[x] = v;
    }
    let parts: Vec<Vec<usize>> = p.classes()[first..]
        .iter()
        .map(|c| c.iter().map(|&x| vertex[x]).collect())
        .collect();
    let mut part_of = vec![0; elements.len()];
    for (k, part) in parts.iter().enumerate() {
        for &v in part {
            part_of[v] = k;
        }
    }
    NonCentralizerGraph {
        labels: elements.iter().map(|&x| g.label(x).to_string()).collect(),
        elements,
        parts,
        part_of,
        induced,
    }
}

/// Edge set computed directly from centralizer comparisons, in the same
/// vertex numbering as [`build_graph`].
pub fn oracle_graph(g: &FiniteGroup, induced: bool) -> Result<BTreeSet<(usize, usize)>> {
    if g.order() > ORACLE_ORDER_CAP {
        return Err(Error::TooLarge(g.order()));
    }
    let cents: Vec<_> = g.elements().map(|x| g.centralizer_mask(x)).collect();
    let full = cents[0].clone();
    let vertices: Vec<Element> = g
        .elements()
        .filter(|&x| !induced || cents[x] != full)
        .collect();
    let mut edges = BTreeSet::new();
    for (u, &x) in vertices.iter().enumerate() {
        for (v, &y) in vertices.iter().enumerate().skip(u + 1) {
            if cents[x] != cents[y] {
                edges.insert((u, v));
            }
        }
    }
    Ok(edges)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GraphFormat {
    Dot,
    EdgeList,
    PartsJson,
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<GraphFormat> {
        match s {
            "dot" => Ok(GraphFormat::Dot),
            "edge-list" => Ok(GraphFormat::EdgeList),
            "parts-json" => Ok(GraphFormat::PartsJson),
            _ => Err(Error::UnknownFormat(s.to_string())),
        }
    }
}

pub fn export(graph: &NonCentralizerGraph, format: GraphFormat) -> String {
    match format {
        GraphFormat::Dot => to_dot(graph),
        GraphFormat::EdgeList => graph.edges().map(|(u, v)| format!("{u} {v}\n")).collect(),
        GraphFormat::PartsJson => {
            let parts = serde_json::to_string(graph.parts()).expect("integer lists serialize");
            format!("{{\"parts\": {parts}, \"induced\": {}}}\n", graph.induced)
        }
    }
}

/// Parses the format name and exports.
pub fn export_as(graph: &NonCentralizerGraph, format: &str) -> Result<String> {
    Ok(export(graph, format.parse()?))
}

fn to_dot(graph: &NonCentralizerGraph) -> String {
    let mut out = String::from("graph noncentralizer {\n");
    for (k, part) in graph.parts.iter().enumerate() {
        let _ = writeln!(out, "  subgraph cluster_{k} {{");
        let _ = writeln!(out, "    label=\"part {k}\";");
        for &v in part {
            let label = graph.labels[v].replace('\\', "\\\\").replace('"', "\\\"");
            let _ = writeln!(out, "    {v} [label=\"{label}\"];");
        }
        out.push_str("  }\n");
    }
    for (u, v) in graph.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn abelian_graph_is_edgeless() {
        let g = build_graph(&families::cyclic(4).unwrap(), false);
        assert_eq!(g.vertex_count(), 4);
        assert_eq!(g.edge_count(), 0);
        assert_eq!(export(&g, GraphFormat::EdgeList), "");
        assert!(build_graph(&families::cyclic(4).unwrap(), true).parts().is_empty());
    }

    #[test]
    fn d8_graphs() {
        let d8 = families::dihedral(4).unwrap();
        let full = build_graph(&d8, false);
        assert_eq!(full.degree_sequence(), vec![6; 8]);
        assert_eq!(full.edge_count(), 24);
        let induced = build_graph(&d8, true);
        assert_eq!(induced.degree_sequence(), vec![4; 6]);
        assert_eq!(induced.parts().len(), 3);
        let json = export(&full, GraphFormat::PartsJson);
        assert_eq!(json, "{\"parts\": [[0,2],[1,3],[4,6],[5,7]], \"induced\": false}\n");
        let dot = export(&full, GraphFormat::Dot);
        assert_eq!(dot.matches("subgraph cluster_").count(), 4);
        assert_eq!(dot.matches(" -- ").count(), 24);
    }

    #[test]
    fn s3_degrees_and_oracle() {
        let s3 = families::dihedral(3).unwrap();
        let g = build_graph(&s3, false);
        assert_eq!(g.degree_sequence(), vec![4, 4, 5, 5, 5, 5]);
        let oracle = oracle_graph(&s3, false).unwrap();
        assert_eq!(oracle.len(), 14);
        assert_eq!(oracle, g.edges().collect());
    }

    #[test]
    fn unknown_format() {
        let g = build_graph(&families::cyclic(2).unwrap(), false);
        assert!(matches!(export_as(&g, "png"), Err(Error::UnknownFormat(_))));
    }
}
