//! JSON document format for graphs and hypergraphs.
//!
//! Graphs: `{"parts": [n_a, n_b, n_c], "edges_ab": [[i, j], ...],
//! "edges_ac": [...], "edges_bc": [...]}` with 0-based per-part indices.
//! Hypergraphs: `{"n": n, "edges": [[a, b, c], ...]}`. Generated instances
//! may carry a `provenance` key describing their construction.

use crate::constructions::ConstructionSpec;
use crate::graph::{GraphError, PairTag, TripartiteGraph, TripartiteHypergraph};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum DecodeError {
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Serialize, Deserialize)]
struct GraphDocument {
    parts: [usize; 3],
    edges_ab: Vec<(usize, usize)>,
    edges_ac: Vec<(usize, usize)>,
    edges_bc: Vec<(usize, usize)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<ConstructionSpec>,
}

#[derive(Serialize, Deserialize)]
struct HypergraphDocument {
    n: usize,
    edges: Vec<[usize; 3]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    provenance: Option<ConstructionSpec>,
}

/// Either document kind, with provenance when present.
pub enum Document {
    Graph(TripartiteGraph, Option<ConstructionSpec>),
    Hypergraph(TripartiteHypergraph, Option<ConstructionSpec>),
}

fn graph_document(g: &TripartiteGraph, provenance: Option<&ConstructionSpec>) -> GraphDocument {
    GraphDocument {
        parts: g.part_sizes(),
        edges_ab: g.edge_list(PairTag::Ab),
        edges_ac: g.edge_list(PairTag::Ac),
        edges_bc: g.edge_list(PairTag::Bc),
        provenance: provenance.cloned(),
    }
}

pub fn encode(g: &TripartiteGraph) -> String {
    serde_json::to_string(&graph_document(g, None)).expect("graph document serializes")
}

pub fn encode_with_provenance(g: &TripartiteGraph, spec: &ConstructionSpec) -> String {
    serde_json::to_string(&graph_document(g, Some(spec))).expect("graph document serializes")
}

pub fn decode(text: &str) -> Result<TripartiteGraph, DecodeError> {
    let doc: GraphDocument = serde_json::from_str(text)?;
    Ok(TripartiteGraph::build(doc.parts, &doc.edges_ab, &doc.edges_ac, &doc.edges_bc)?)
}

pub fn encode_hypergraph(h: &TripartiteHypergraph) -> String {
    let doc = HypergraphDocument { n: h.n(), edges: h.edges().to_vec(), provenance: None };
    serde_json::to_string(&doc).expect("hypergraph document serializes")
}

pub fn encode_hypergraph_with_provenance(h: &TripartiteHypergraph, spec: &ConstructionSpec) -> String {
    let doc = HypergraphDocument { n: h.n(), edges: h.edges().to_vec(), provenance: Some(spec.clone()) };
    serde_json::to_string(&doc).expect("hypergraph document serializes")
}

pub fn decode_hypergraph(text: &str) -> Result<TripartiteHypergraph, DecodeError> {
    let doc: HypergraphDocument = serde_json::from_str(text)?;
    Ok(TripartiteHypergraph::build(doc.n, &doc.edges)?)
}

/// Decodes either document kind; graphs are distinguished by the `parts` key.
pub fn decode_document(text: &str) -> Result<Document, DecodeError> {
    let probe: serde_json::Value = serde_json::from_str(text)?;
    if probe.get("parts").is_some() {
        let doc: GraphDocument = serde_json::from_value(probe)?;
        let g = TripartiteGraph::build(doc.parts, &doc.edges_ab, &doc.edges_ac, &doc.edges_bc)?;
        Ok(Document::Graph(g, doc.provenance))
    } else {
        let doc: HypergraphDocument = serde_json::from_value(probe)?;
        let h = TripartiteHypergraph::build(doc.n, &doc.edges)?;
        Ok(Document::Hypergraph(h, doc.provenance))
    }
}
