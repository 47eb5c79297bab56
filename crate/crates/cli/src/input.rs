use std::io::Read;
use std::path::PathBuf;

use clap::Args;
use irregmix::graph::{parse_family, parse_graph6, parse_graph_text};
use irregmix::{Error, Graph, Result};

#[derive(Args, Debug, Clone)]
pub struct InputArgs {
    /// Graph file (graph6 or edge list); `-` or nothing reads stdin.
    pub input: Option<PathBuf>,

    /// Generator spec, e.g. `petersen` or `join:cocktail_party:3,complete:2`.
    #[arg(long = "gen", value_name = "SPEC", conflicts_with_all = ["input", "edges"])]
    pub generator: Option<String>,

    /// Inline edge list `u-v,u-v,...`.
    #[arg(long, value_name = "EDGES", conflicts_with = "input")]
    pub edges: Option<String>,
}

/// The graphs named on the command line: one, or one per stdin line for a graph6 batch.
pub enum Source {
    Single(Result<Graph>),
    Batch(Vec<Result<Graph>>),
}

impl InputArgs {
    pub fn load(&self) -> Source {
        if let Some(spec) = &self.generator {
            return Source::Single(parse_family(spec).and_then(|f| f.build()));
        }
        if let Some(edges) = &self.edges {
            return Source::Single(parse_inline_edges(edges));
        }
        match self.input.as_deref() {
            Some(p) if p.as_os_str() != "-" => Source::Single(read_graph_file(p)),
            _ => {
                let mut text = String::new();
                if let Err(e) = std::io::stdin().read_to_string(&mut text) {
                    return Source::Single(Err(Error::Input(format!("cannot read stdin: {e}"))));
                }
                from_stdin(&text)
            }
        }
    }
}

pub fn read_graph_file(path: &std::path::Path) -> Result<Graph> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    parse_graph_text(&text)
}

fn from_stdin(text: &str) -> Source {
    let lines: Vec<&str> = text.lines().map(str::trim).filter(|l| !l.is_empty()).collect();
    let edge_list = lines.first().is_some_and(|l| l.contains(char::is_whitespace) || l.starts_with('#'));
    if edge_list || lines.len() <= 1 {
        return Source::Single(parse_graph_text(text));
    }
    Source::Batch(lines.into_iter().map(parse_graph6).collect())
}

fn parse_inline_edges(text: &str) -> Result<Graph> {
    let mut edges = Vec::new();
    for (i, item) in text.split(',').map(str::trim).filter(|s| !s.is_empty()).enumerate() {
        let (u, v) = item
            .split_once('-')
            .ok_or_else(|| Error::Input(format!("edge {} ({item:?}) is not of the form u-v", i + 1)))?;
        let idx = |s: &str| s.trim().parse::<usize>().map_err(|_| Error::Input(format!("bad vertex index {s:?}")));
        edges.push((idx(u)?, idx(v)?));
    }
    let n = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    Graph::from_edge_list(n, &edges)
}
