//! Reading, writing and generating graph collections.

mod dot;
mod edgelist;
mod generate;
mod graph6;
mod random;

use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

pub use dot::{write_dot, Highlight};
pub use edgelist::{parse_edge_list, write_edge_list};
pub use generate::{generate_all, generate_up_to, EXHAUSTIVE_ORDER_BOUND};
pub use graph6::{parse_graph6, write_graph6, GRAPH6_MAX_ORDER};
pub use random::generate_random;

/// Text formats for graph files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    /// One graph6 string per line.
    G6,
    /// A single graph as an edge list.
    Edges,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum CorpusMode {
    /// Every isomorphism class on `1..=n_max` vertices.
    Exhaustive {
        n_max: usize,
    },
    Random {
        n: usize,
        p: f64,
        count: usize,
        seed: u64,
    },
    File {
        path: PathBuf,
        format: Format,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorpusSpec {
    #[serde(flatten)]
    pub mode: CorpusMode,
    pub connected_only: bool,
}

impl CorpusSpec {
    pub fn exhaustive(n_max: usize) -> CorpusSpec {
        CorpusSpec {
            mode: CorpusMode::Exhaustive { n_max },
            connected_only: false,
        }
    }

    pub fn random(n: usize, p: f64, count: usize, seed: u64) -> CorpusSpec {
        CorpusSpec {
            mode: CorpusMode::Random { n, p, count, seed },
            connected_only: false,
        }
    }

    pub fn file(path: impl Into<PathBuf>, format: Format) -> CorpusSpec {
        CorpusSpec {
            mode: CorpusMode::File {
                path: path.into(),
                format,
            },
            connected_only: false,
        }
    }

    pub fn connected(mut self) -> CorpusSpec {
        self.connected_only = true;
        self
    }

    /// Materialises the corpus.
    pub fn graphs(&self) -> Result<Vec<Graph>> {
        let mut graphs = match &self.mode {
            CorpusMode::Exhaustive { n_max } => generate_up_to(*n_max, false)?,
            CorpusMode::Random { n, p, count, seed } => generate_random(*n, *p, *count, *seed)?,
            CorpusMode::File { path, format } => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
                parse_text(&text, *format)?
            }
        };
        if self.connected_only {
            graphs.retain(Graph::is_connected);
        }
        Ok(graphs)
    }
}

/// Parses file contents: any number of graph6 lines (blank lines skipped),
/// or a single edge list.
pub fn parse_text(text: &str, format: Format) -> Result<Vec<Graph>> {
    match format {
        Format::G6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                parse_graph6(l.trim()).map_err(|e| Error::Syntax {
                    line: i + 1,
                    message: e.to_string(),
                })
            })
            .collect(),
        Format::Edges => Ok(vec![parse_edge_list(text)?]),
    }
}
