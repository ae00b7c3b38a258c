//! Undirected simple graphs with contiguous 0-based vertex indices, the
//! edge-list text format, and the structural predicates everything else
//! is built on.

use std::collections::VecDeque;

use crate::error::{Error, Result};

/// Undirected simple graph. Adjacency lists are kept sorted so that every
/// traversal in the crate is deterministic; values are immutable after
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Build a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u == v {
                return Err(Error::Validation(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Validation(format!(
                    "edge ({u}, {v}) out of range for order {n}"
                )));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|l| l.len()).sum::<usize>() / 2
    }

    /// All edges as `(u, v)` with `u < v`, lexicographically sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::Validation(format!("({u}, {v}) is not an edge")));
        }
        let kept: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .filter(|&e| e != (u.min(v), u.max(v)))
            .collect();
        Graph::from_edges(self.n(), &kept)
    }
}

/// Path on `n >= 1` vertices with edges `{i, i+1}`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Validation("path_graph requires n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Star on `n >= 1` vertices with center 0.
pub fn star_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Validation("star_graph requires n >= 1".into()));
    }
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (0, i)).collect();
    Graph::from_edges(n, &edges)
}

/// Complete graph on `n >= 1` vertices.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Validation("complete_graph requires n >= 1".into()));
    }
    let mut edges = Vec::with_capacity(n * (n - 1) / 2);
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges)
}

/// Cycle on `n >= 3` vertices.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Validation("cycle_graph requires n >= 3".into()));
    }
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::from_edges(n, &edges)
}

/// Parse the line-oriented edge-list format: an optional first content line
/// `n <count>` declares the order (allowing isolated vertices), every other
/// content line is `u v`; `#` starts a comment and blank lines are ignored.
/// Without a header the order is inferred as max index + 1.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut declared: Option<usize> = None;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut max_index: Option<usize> = None;
    let mut first_content = true;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if first_content && tokens[0] == "n" {
            first_content = false;
            if tokens.len() != 2 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("malformed header, expected \"n <count>\", got {line:?}"),
                });
            }
            declared = Some(tokens[1].parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex count {:?}", tokens[1]),
            })?);
            continue;
        }
        first_content = false;
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected \"u v\", got {line:?}"),
            });
        }
        let endpoint = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid vertex index {s:?}"),
            })
        };
        let u = endpoint(tokens[0])?;
        let v = endpoint(tokens[1])?;
        if u == v {
            return Err(Error::Validation(format!(
                "self-loop {u}-{v} at line {line_no}"
            )));
        }
        max_index = Some(max_index.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }

    let n = declared.unwrap_or_else(|| max_index.map_or(0, |m| m + 1));
    Graph::from_edges(n, &edges)
}

/// Serialize in the edge-list format with an explicit order header, so the
/// output round-trips even when the graph has isolated vertices.
pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        s.push_str(&format!("{u} {v}\n"));
    }
    s
}

/// Decode one line of graph6, the 6-bit packed format emitted by common
/// graph generators. Supports orders below 2^18.
pub fn parse_graph6(line: &str) -> Result<Graph> {
    let s = line.trim();
    let s = s.strip_prefix(">>graph6<<").unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse {
            line: 1,
            message: "empty graph6 line".into(),
        });
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(Error::Parse {
                line: 1,
                message: format!("byte 0x{b:02x} outside the graph6 alphabet"),
            });
        }
    }
    let vals: Vec<u64> = bytes.iter().map(|&b| (b - 63) as u64).collect();
    let (n, pos) = if vals[0] < 63 {
        (vals[0] as usize, 1)
    } else if vals.len() >= 4 && vals[1] < 63 {
        (((vals[1] << 12) | (vals[2] << 6) | vals[3]) as usize, 4)
    } else {
        return Err(Error::Validation(
            "graph6 order is too large for this tool".into(),
        ));
    };
    let nbits = n * (n - 1) / 2;
    let expected = pos + nbits.div_ceil(6);
    if vals.len() != expected {
        return Err(Error::Parse {
            line: 1,
            message: format!(
                "graph6 line has {} groups, expected {expected} for order {n}",
                vals.len()
            ),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    // Upper triangle in column order: (0,1), (0,2), (1,2), (0,3), ...
    for j in 1..n {
        for i in 0..j {
            if (vals[pos + bit / 6] >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

/// True iff the graph has a single connected component. Vacuously true for
/// n <= 1.
pub fn is_connected(g: &Graph) -> bool {
    let n = g.n();
    if n <= 1 {
        return true;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                count += 1;
                queue.push_back(w);
            }
        }
    }
    count == n
}

/// Connected components as sorted vertex lists, ordered by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut seen = vec![false; n];
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut block = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    block.push(w);
                    queue.push_back(w);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    blocks
}

/// Connected and `e(G) = n - 1`.
pub fn is_tree(g: &Graph) -> bool {
    g.n() >= 1 && is_connected(g) && g.edge_count() + 1 == g.n()
}

/// Articulation points of a connected graph, sorted ascending, found by an
/// iterative low-link traversal.
pub fn cut_vertices(g: &Graph) -> Result<Vec<usize>> {
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n <= 2 {
        return Ok(Vec::new());
    }
    const UNSET: usize = usize::MAX;
    let mut disc = vec![UNSET; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0usize;
    let mut root_children = 0usize;
    // frames: (vertex, dfs parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::with_capacity(n);
    disc[0] = timer;
    low[0] = timer;
    timer += 1;
    stack.push((0, UNSET, 0));
    while let Some(&(v, parent, idx)) = stack.last() {
        if idx < g.degree(v) {
            stack.last_mut().unwrap().2 += 1;
            let w = g.neighbors(v)[idx];
            if w == parent {
                continue;
            }
            if disc[w] == UNSET {
                if v == 0 {
                    root_children += 1;
                }
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                stack.push((w, v, 0));
            } else {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if parent != UNSET {
                low[parent] = low[parent].min(low[v]);
                if parent != 0 && low[v] >= disc[parent] {
                    is_cut[parent] = true;
                }
            }
        }
    }
    if root_children >= 2 {
        is_cut[0] = true;
    }
    Ok((0..n).filter(|&v| is_cut[v]).collect())
}

/// Connected, of order at least three, and without cut vertices.
pub fn is_two_connected(g: &Graph) -> bool {
    g.n() >= 3 && is_connected(g) && matches!(cut_vertices(g), Ok(c) if c.is_empty())
}

/// The components that survive deleting a single vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexPartition {
    /// Disjoint sorted vertex lists, ordered by smallest member; their union
    /// is the whole vertex set minus the deleted vertex.
    pub blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    pub fn max_block_len(&self) -> usize {
        self.blocks.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn total_vertices(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }
}

/// Connected components of the induced subgraph on `V \ {v}`.
pub fn delete_vertex_components(g: &Graph, v: usize) -> Result<VertexPartition> {
    let n = g.n();
    if v >= n {
        return Err(Error::Validation(format!(
            "vertex {v} out of range for order {n}"
        )));
    }
    let mut seen = vec![false; n];
    seen[v] = true;
    let mut blocks = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut block = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &w in g.neighbors(x) {
                if !seen[w] {
                    seen[w] = true;
                    block.push(w);
                    queue.push_back(w);
                }
            }
        }
        block.sort_unstable();
        blocks.push(block);
    }
    Ok(VertexPartition { blocks })
}

/// Deterministic breadth-first spanning tree rooted at vertex 0. On a tree
/// this returns the input unchanged.
pub fn spanning_tree(g: &Graph) -> Result<Graph> {
    if g.n() == 0 {
        return Err(Error::Validation(
            "spanning_tree requires a non-empty graph".into(),
        ));
    }
    if !is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                edges.push((v, w));
                queue.push_back(w);
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Subgraph induced by a strictly increasing vertex list; vertex `i` of the
/// result corresponds to `vertices[i]`.
pub fn induced_subgraph(g: &Graph, vertices: &[usize]) -> Result<Graph> {
    if vertices.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Validation(
            "induced_subgraph needs a strictly increasing vertex list".into(),
        ));
    }
    if let Some(&last) = vertices.last() {
        if last >= g.n() {
            return Err(Error::Validation(format!(
                "vertex {last} out of range for order {}",
                g.n()
            )));
        }
    }
    let mut edges = Vec::new();
    for (i, &u) in vertices.iter().enumerate() {
        for &w in g.neighbors(u) {
            if w > u {
                if let Ok(j) = vertices.binary_search(&w) {
                    edges.push((i, j));
                }
            }
        }
    }
    Graph::from_edges(vertices.len(), &edges)
}
