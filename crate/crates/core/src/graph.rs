//! Graph ingestion, normalization and the connected-component partition.
//!
//! The engine proper assumes a connected simple graph whose vertices are
//! numbered by DFS order. This module gets an arbitrary edge list into that
//! shape: parse, drop loops and parallels, sort adjacency, and split into
//! connected components so each one can be preprocessed independently.

use crate::error::{Error, Result};

/// Edge list exactly as read from a graph file. May contain self-loops and
/// parallel edges; vertex ids are 1-based.
#[derive(Debug, Clone)]
pub struct RawGraph {
    pub n: u32,
    pub edges: Vec<(u32, u32)>,
}

/// Simple undirected graph in CSR form. Vertices are `1..=n`; every
/// adjacency list is strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: u32,
    m: u64,
    off: Vec<u32>,
    targets: Vec<u32>,
}

impl Graph {
    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of undirected edges after normalization.
    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.targets[self.off[v as usize] as usize..self.off[v as usize + 1] as usize]
    }

    pub fn degree(&self, v: u32) -> u32 {
        self.off[v as usize + 1] - self.off[v as usize]
    }

    pub fn vertices(&self) -> impl Iterator<Item = u32> {
        1..=self.n
    }

    /// Undirected edges as (smaller, larger) pairs.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.vertices().flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&w| u < w)
                .map(move |w| (u, w))
        })
    }

    /// Builds a graph from directed pairs; sorts and dedups internally.
    pub(crate) fn from_directed_pairs(n: u32, mut pairs: Vec<(u32, u32)>) -> Graph {
        pairs.sort_unstable();
        pairs.dedup();
        let mut off = vec![0u32; n as usize + 2];
        for &(u, _) in &pairs {
            off[u as usize + 1] += 1;
        }
        for v in 1..off.len() {
            off[v] += off[v - 1];
        }
        let targets = pairs.iter().map(|&(_, w)| w).collect();
        Graph {
            n,
            m: pairs.len() as u64 / 2,
            off,
            targets,
        }
    }
}

/// Parses the text graph format: a `"n m"` header followed by `m` lines
/// `"u v"`. Lines starting with `#` and blank lines are ignored.
pub fn load_graph(text: &str) -> Result<RawGraph> {
    let mut header: Option<(u32, u64)> = None;
    let mut edges = Vec::new();
    let mut last_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_ascii_whitespace();
        let a = it.next();
        let b = it.next();
        if it.next().is_some() {
            return Err(Error::parse(lineno, "expected exactly two fields"));
        }
        let (Some(a), Some(b)) = (a, b) else {
            return Err(Error::parse(lineno, "expected exactly two fields"));
        };
        match header {
            None => {
                let n: u32 = a
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad vertex count '{a}'")))?;
                let m: u64 = b
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad edge count '{b}'")))?;
                if n == 0 {
                    return Err(Error::parse(lineno, "empty graph (n = 0) is not accepted"));
                }
                header = Some((n, m));
                edges.reserve(m.min(1 << 24) as usize);
            }
            Some((n, m)) => {
                if edges.len() as u64 == m {
                    return Err(Error::parse(
                        lineno,
                        format!("more than the declared {m} edges"),
                    ));
                }
                let u: u32 = a
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad vertex id '{a}'")))?;
                let v: u32 = b
                    .parse()
                    .map_err(|_| Error::parse(lineno, format!("bad vertex id '{b}'")))?;
                for id in [u, v] {
                    if id < 1 || id > n {
                        return Err(Error::parse(
                            lineno,
                            format!("vertex id {id} out of range [1, {n}]"),
                        ));
                    }
                }
                edges.push((u, v));
            }
        }
    }
    let Some((n, m)) = header else {
        return Err(Error::parse(last_line.max(1), "missing 'n m' header"));
    };
    if (edges.len() as u64) < m {
        return Err(Error::parse(
            last_line.max(1),
            format!("expected {m} edges, found {}", edges.len()),
        ));
    }
    Ok(RawGraph { n, edges })
}

/// Drops self-loops and parallel edges and produces sorted adjacency lists.
/// Neither affects connectivity, so they are removed silently.
pub fn normalize(raw: &RawGraph) -> Graph {
    let mut pairs = Vec::with_capacity(raw.edges.len() * 2);
    for &(u, v) in &raw.edges {
        if u != v {
            pairs.push((u, v));
            pairs.push((v, u));
        }
    }
    Graph::from_directed_pairs(raw.n, pairs)
}

/// Applies a vertex renumbering (`order[old] = new`, both 1-based) and
/// re-sorts the adjacency lists under the new numbering.
pub fn renumber(g: &Graph, order: &[u32]) -> Graph {
    let mut pairs = Vec::with_capacity(g.targets.len());
    for u in g.vertices() {
        for &w in g.neighbors(u) {
            pairs.push((order[u as usize], order[w as usize]));
        }
    }
    Graph::from_directed_pairs(g.n, pairs)
}

/// Partition of a normalized graph into connected components, with the
/// induced subgraph of each component and bidirectional id maps.
#[derive(Debug, Clone)]
pub struct ComponentPartition {
    /// Per-vertex component label, `comp_of[v]` for `v in 1..=n`.
    comp_of: Vec<u32>,
    /// Per-vertex local id inside its component (1-based).
    local_of: Vec<u32>,
    /// Per component: member vertices ascending; `members[c][local - 1]`
    /// recovers the original id.
    members: Vec<Vec<u32>>,
    components: Vec<Graph>,
}

impl ComponentPartition {
    pub fn comp_count(&self) -> usize {
        self.components.len()
    }

    pub fn comp_of(&self, v: u32) -> u32 {
        self.comp_of[v as usize]
    }

    pub fn local_of(&self, v: u32) -> u32 {
        self.local_of[v as usize]
    }

    pub fn global_of(&self, comp: u32, local: u32) -> u32 {
        self.members[comp as usize][local as usize - 1]
    }

    pub fn component(&self, comp: u32) -> &Graph {
        &self.components[comp as usize]
    }

    pub fn components(&self) -> &[Graph] {
        &self.components
    }

    pub fn members(&self, comp: u32) -> &[u32] {
        &self.members[comp as usize]
    }
}

/// Labels connected components by BFS and builds each induced subgraph.
/// Local ids are assigned ascending by original id, so local vertex 1 is
/// the smallest original id of its component.
pub fn split_components(g: &Graph) -> ComponentPartition {
    let n = g.n() as usize;
    const UNSEEN: u32 = u32::MAX;
    let mut comp_of = vec![UNSEEN; n + 1];
    let mut members: Vec<Vec<u32>> = Vec::new();
    let mut queue = Vec::new();
    for s in g.vertices() {
        if comp_of[s as usize] != UNSEEN {
            continue;
        }
        let c = members.len() as u32;
        comp_of[s as usize] = c;
        queue.clear();
        queue.push(s);
        let mut verts = vec![s];
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            for &w in g.neighbors(u) {
                if comp_of[w as usize] == UNSEEN {
                    comp_of[w as usize] = c;
                    queue.push(w);
                    verts.push(w);
                }
            }
        }
        verts.sort_unstable();
        members.push(verts);
    }

    let mut local_of = vec![0u32; n + 1];
    for verts in &members {
        for (i, &v) in verts.iter().enumerate() {
            local_of[v as usize] = i as u32 + 1;
        }
    }

    let components = members
        .iter()
        .map(|verts| {
            let mut pairs = Vec::new();
            for &v in verts {
                for &w in g.neighbors(v) {
                    pairs.push((local_of[v as usize], local_of[w as usize]));
                }
            }
            Graph::from_directed_pairs(verts.len() as u32, pairs)
        })
        .collect();

    ComponentPartition {
        comp_of,
        local_of,
        members,
        components,
    }
}
