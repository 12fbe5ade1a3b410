//! The JSON graph document and DOT export.

use std::fmt::Write as _;
use std::path::Path;

use ecclab::Graph;
use serde::{Deserialize, Serialize};

use crate::CliError;

/// `{"num_vertices": n, "edges": [[u, v], ...], "name": ..., "labels": [...]}`, 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphDocument {
    pub num_vertices: usize,
    pub edges: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn from_graph(g: &Graph, name: Option<String>) -> Self {
        GraphDocument {
            num_vertices: g.num_vertices(),
            edges: g.edges().iter().map(|&(u, v)| [u, v]).collect(),
            name,
            labels: None,
        }
    }

    pub fn to_graph(&self) -> Result<Graph, CliError> {
        if let Some(labels) = &self.labels {
            if labels.len() != self.num_vertices {
                return Err(CliError::Input(format!(
                    "{} labels for {} vertices",
                    labels.len(),
                    self.num_vertices
                )));
            }
        }
        Ok(Graph::new(self.num_vertices, self.edges.iter().map(|e| (e[0], e[1])))?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| CliError::Input(format!("bad graph document: {e}")))?;
        doc.to_graph()?;
        Ok(doc)
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
        Self::from_json(&text)
    }

    /// Undirected DOT; vertex ids double as labels unless `labels` is set.
    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        match &self.name {
            Some(name) => writeln!(out, "graph {} {{", quote(name)).unwrap(),
            None => out.push_str("graph {\n"),
        }
        for v in 0..self.num_vertices {
            let label = self.labels.as_ref().map_or_else(|| v.to_string(), |l| l[v].clone());
            writeln!(out, "  {v} [label={}];", quote(&label)).unwrap();
        }
        for [u, v] in &self.edges {
            writeln!(out, "  {u} -- {v};").unwrap();
        }
        out.push_str("}\n");
        out
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}
