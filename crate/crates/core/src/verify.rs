//! Certificate checking: does a given vertex or edge coloring make a graph
//! conflict-free (vertex-)connected?
//!
//! On trees the unique path between a pair is the only candidate, which
//! keeps the check at O(n^2) per graph. On general graphs the definition
//! quantifies existentially over all simple paths, so the checker runs a
//! backtracking enumeration per pair and refuses orders above a hard cap.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};

/// Largest order accepted for exhaustive simple-path search on graphs that
/// are not trees; path counts explode beyond this.
pub const DEFAULT_PATH_SEARCH_CAP: usize = 16;

/// Total vertex coloring in surjective normal form: colors are `1..=k` and
/// every color occurs at least once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexColoring {
    colors: Vec<usize>,
    k: usize,
}

impl VertexColoring {
    /// Accepts a coloring already in normal form.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::Validation(
                "coloring must cover at least one vertex".into(),
            ));
        }
        if colors.contains(&0) {
            return Err(Error::Validation("colors are 1-based".into()));
        }
        let k = *colors.iter().max().unwrap();
        let mut seen = vec![false; k + 1];
        for &c in &colors {
            seen[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !seen[c]) {
            return Err(Error::Validation(format!(
                "color {missing} unused; coloring is not in normal form"
            )));
        }
        Ok(VertexColoring { colors, k })
    }

    /// Compacts arbitrary positive colors into normal form. The relabeling
    /// is order-preserving, which never changes conflict-freeness.
    pub fn normalized(raw: Vec<usize>) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::Validation(
                "coloring must cover at least one vertex".into(),
            ));
        }
        if raw.contains(&0) {
            return Err(Error::Validation("colors are 1-based".into()));
        }
        let mut distinct = raw.clone();
        distinct.sort_unstable();
        distinct.dedup();
        let colors = raw
            .iter()
            .map(|c| distinct.binary_search(c).unwrap() + 1)
            .collect();
        Ok(VertexColoring {
            colors,
            k: distinct.len(),
        })
    }

    /// Number of distinct colors.
    pub fn color_count(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// One `vertex<TAB>color` line per vertex.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for (v, c) in self.colors.iter().enumerate() {
            s.push_str(&format!("{v}\t{c}\n"));
        }
        s
    }

    /// Parse `vertex<TAB>color` lines covering exactly 0..n for some n.
    /// Colors are compacted into normal form.
    pub fn parse_tsv(text: &str) -> Result<Self> {
        let entries = parse_labeled_lines(text, "vertex")?;
        let n = entries.keys().max().map_or(0, |&m| m + 1);
        let mut raw = vec![0usize; n];
        for (v, c) in entries {
            raw[v] = c;
        }
        if let Some(missing) = raw.iter().position(|&c| c == 0) {
            return Err(Error::Validation(format!("vertex {missing} has no color")));
        }
        Self::normalized(raw)
    }
}

fn parse_labeled_lines(text: &str, what: &str) -> Result<BTreeMap<usize, usize>> {
    let mut entries = BTreeMap::new();
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
        if tokens.len() != 2 {
            return Err(Error::Parse {
                line: line_no,
                message: format!("expected \"{what}<TAB>color\", got {line:?}"),
            });
        }
        let parse = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("invalid number {s:?}"),
            })
        };
        let key = parse(tokens[0])?;
        let color = parse(tokens[1])?;
        if color == 0 {
            return Err(Error::Validation(format!(
                "color must be positive at line {line_no}"
            )));
        }
        if entries.insert(key, color).is_some() {
            return Err(Error::Validation(format!(
                "{what} {key} colored twice (line {line_no})"
            )));
        }
    }
    Ok(entries)
}

/// Total edge coloring in surjective normal form, keyed by `(u, v)` with
/// `u < v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeColoring {
    colors: BTreeMap<(usize, usize), usize>,
    k: usize,
}

impl EdgeColoring {
    /// Accepts a map already keyed by ordered pairs and in normal form. An
    /// empty map is the (zero-color) coloring of an edgeless graph.
    pub fn new(colors: BTreeMap<(usize, usize), usize>) -> Result<Self> {
        for (&(u, v), &c) in &colors {
            if u >= v {
                return Err(Error::Validation(format!(
                    "edge key ({u}, {v}) must satisfy u < v"
                )));
            }
            if c == 0 {
                return Err(Error::Validation("colors are 1-based".into()));
            }
        }
        let k = colors.values().copied().max().unwrap_or(0);
        let mut seen = vec![false; k + 1];
        for &c in colors.values() {
            seen[c] = true;
        }
        if let Some(missing) = (1..=k).find(|&c| !seen[c]) {
            return Err(Error::Validation(format!(
                "color {missing} unused; coloring is not in normal form"
            )));
        }
        Ok(EdgeColoring { colors, k })
    }

    /// Builds a coloring from pairs with arbitrary positive colors; keys are
    /// reordered and colors compacted monotonically.
    pub fn normalized(pairs: Vec<((usize, usize), usize)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        let mut distinct: Vec<usize> = pairs.iter().map(|&(_, c)| c).collect();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.first() == Some(&0) {
            return Err(Error::Validation("colors are 1-based".into()));
        }
        for ((u, v), c) in pairs {
            if u == v {
                return Err(Error::Validation(format!("self-loop edge key {u}-{v}")));
            }
            let key = (u.min(v), u.max(v));
            let rank = distinct.binary_search(&c).unwrap() + 1;
            if map.insert(key, rank).is_some() {
                return Err(Error::Validation(format!(
                    "edge ({}, {}) colored twice",
                    key.0, key.1
                )));
            }
        }
        Ok(EdgeColoring {
            colors: map,
            k: distinct.len(),
        })
    }

    /// Colors aligned with `g.edges()` order.
    pub fn from_color_vec(g: &Graph, colors: &[usize]) -> Result<Self> {
        let edges = g.edges();
        if edges.len() != colors.len() {
            return Err(Error::Validation(format!(
                "{} colors for {} edges",
                colors.len(),
                edges.len()
            )));
        }
        Self::normalized(edges.into_iter().zip(colors.iter().copied()).collect())
    }

    pub fn color_count(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.colors.get(&(u.min(v), u.max(v))).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(usize, usize), &usize)> {
        self.colors.iter()
    }

    /// One `u v<TAB>color` line per edge, sorted.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for (&(u, v), &c) in &self.colors {
            s.push_str(&format!("{u} {v}\t{c}\n"));
        }
        s
    }

    /// Parse `u v<TAB>color` lines.
    pub fn parse_tsv(text: &str) -> Result<Self> {
        let mut pairs = Vec::new();
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
            if tokens.len() != 3 {
                return Err(Error::Parse {
                    line: line_no,
                    message: format!("expected \"u v<TAB>color\", got {line:?}"),
                });
            }
            let parse = |s: &str| -> Result<usize> {
                s.parse().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("invalid number {s:?}"),
                })
            };
            let u = parse(tokens[0])?;
            let v = parse(tokens[1])?;
            let c = parse(tokens[2])?;
            if c == 0 {
                return Err(Error::Validation(format!(
                    "color must be positive at line {line_no}"
                )));
            }
            pairs.push(((u, v), c));
        }
        Self::normalized(pairs)
    }
}

/// True iff some color occurs exactly once among the path's vertex colors.
pub fn path_is_conflict_free_vertex(coloring: &VertexColoring, path: &[usize]) -> Result<bool> {
    if path.is_empty() {
        return Err(Error::Validation("empty path".into()));
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for &v in path {
        if v >= coloring.len() {
            return Err(Error::Validation(format!(
                "vertex {v} outside the coloring domain"
            )));
        }
        *counts.entry(coloring.color(v)).or_insert(0) += 1;
    }
    Ok(counts.values().any(|&m| m == 1))
}

/// True iff some color occurs exactly once among the path's edge colors.
pub fn path_is_conflict_free_edge(coloring: &EdgeColoring, path: &[usize]) -> Result<bool> {
    if path.len() < 2 {
        return Err(Error::Validation(
            "edge path needs at least two vertices".into(),
        ));
    }
    let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
    for pair in path.windows(2) {
        let c = coloring.color_of(pair[0], pair[1]).ok_or_else(|| {
            Error::Validation(format!(
                "({}, {}) is not an edge of the colored graph",
                pair[0], pair[1]
            ))
        })?;
        *counts.entry(c).or_insert(0) += 1;
    }
    Ok(counts.values().any(|&m| m == 1))
}

fn check_vertex_domain(g: &Graph, coloring: &VertexColoring) -> Result<()> {
    if coloring.len() != g.n() {
        return Err(Error::Validation(format!(
            "coloring covers {} vertices but the graph has {}",
            coloring.len(),
            g.n()
        )));
    }
    Ok(())
}

fn check_edge_domain(g: &Graph, coloring: &EdgeColoring) -> Result<()> {
    if coloring.len() != g.edge_count() {
        return Err(Error::Validation(format!(
            "coloring covers {} edges but the graph has {}",
            coloring.len(),
            g.edge_count()
        )));
    }
    for (u, v) in g.edges() {
        if coloring.color_of(u, v).is_none() {
            return Err(Error::Validation(format!("edge ({u}, {v}) has no color")));
        }
    }
    Ok(())
}

/// Every vertex pair is joined by a conflict-free path (vertex variant).
pub fn is_cf_vertex_connected(g: &Graph, coloring: &VertexColoring) -> Result<bool> {
    Ok(first_failing_pair_vertex(g, coloring)?.is_none())
}

/// Same check with an explicit cap on the non-tree path search.
pub fn is_cf_vertex_connected_with_cap(
    g: &Graph,
    coloring: &VertexColoring,
    cap: usize,
) -> Result<bool> {
    Ok(first_failing_pair_vertex_capped(g, coloring, cap)?.is_none())
}

/// Lexicographically least pair with no conflict-free path, if any.
pub fn first_failing_pair_vertex(
    g: &Graph,
    coloring: &VertexColoring,
) -> Result<Option<(usize, usize)>> {
    first_failing_pair_vertex_capped(g, coloring, DEFAULT_PATH_SEARCH_CAP)
}

fn first_failing_pair_vertex_capped(
    g: &Graph,
    coloring: &VertexColoring,
    cap: usize,
) -> Result<Option<(usize, usize)>> {
    check_vertex_domain(g, coloring)?;
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.n() <= 1 {
        return Ok(None);
    }
    if graph::is_tree(g) {
        Ok(tree_failing_pair_vertex(g, coloring))
    } else if g.n() > cap {
        Err(Error::CapExceeded {
            what: "path-search vertices",
            limit: cap,
            actual: g.n(),
        })
    } else {
        Ok(general_failing_pair_vertex(g, coloring))
    }
}

/// Every vertex pair is joined by a conflict-free path (edge variant).
pub fn is_cf_edge_connected(g: &Graph, coloring: &EdgeColoring) -> Result<bool> {
    Ok(first_failing_pair_edge(g, coloring)?.is_none())
}

pub fn is_cf_edge_connected_with_cap(
    g: &Graph,
    coloring: &EdgeColoring,
    cap: usize,
) -> Result<bool> {
    Ok(first_failing_pair_edge_capped(g, coloring, cap)?.is_none())
}

/// Lexicographically least pair with no conflict-free path, if any.
pub fn first_failing_pair_edge(
    g: &Graph,
    coloring: &EdgeColoring,
) -> Result<Option<(usize, usize)>> {
    first_failing_pair_edge_capped(g, coloring, DEFAULT_PATH_SEARCH_CAP)
}

fn first_failing_pair_edge_capped(
    g: &Graph,
    coloring: &EdgeColoring,
    cap: usize,
) -> Result<Option<(usize, usize)>> {
    check_edge_domain(g, coloring)?;
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    if g.n() <= 1 {
        return Ok(None);
    }
    if graph::is_tree(g) {
        Ok(tree_failing_pair_edge(g, coloring))
    } else if g.n() > cap {
        Err(Error::CapExceeded {
            what: "path-search vertices",
            limit: cap,
            actual: g.n(),
        })
    } else {
        Ok(general_failing_pair_edge(g, coloring))
    }
}

/// Whether one specific pair is joined by a conflict-free path (vertex
/// variant). Symmetric in `u` and `v`.
pub fn has_cf_vertex_path(
    g: &Graph,
    coloring: &VertexColoring,
    u: usize,
    v: usize,
) -> Result<bool> {
    check_vertex_domain(g, coloring)?;
    if u >= g.n() || v >= g.n() {
        return Err(Error::Validation("pair out of range".into()));
    }
    if u == v {
        return Ok(true);
    }
    if graph::is_tree(g) {
        let path = tree_path(g, u, v);
        path_is_conflict_free_vertex(coloring, &path)
    } else {
        if g.n() > DEFAULT_PATH_SEARCH_CAP {
            return Err(Error::CapExceeded {
                what: "path-search vertices",
                limit: DEFAULT_PATH_SEARCH_CAP,
                actual: g.n(),
            });
        }
        let mut ctx = PathSearch::new(g.n(), coloring.color_count());
        Ok(ctx.cf_vertex_path_exists(g, coloring.colors(), u, v))
    }
}

/// Edge-variant analogue of [`has_cf_vertex_path`].
pub fn has_cf_edge_path(g: &Graph, coloring: &EdgeColoring, u: usize, v: usize) -> Result<bool> {
    check_edge_domain(g, coloring)?;
    if u >= g.n() || v >= g.n() {
        return Err(Error::Validation("pair out of range".into()));
    }
    if u == v {
        return Ok(true);
    }
    if graph::is_tree(g) {
        let path = tree_path(g, u, v);
        path_is_conflict_free_edge(coloring, &path)
    } else {
        if g.n() > DEFAULT_PATH_SEARCH_CAP {
            return Err(Error::CapExceeded {
                what: "path-search vertices",
                limit: DEFAULT_PATH_SEARCH_CAP,
                actual: g.n(),
            });
        }
        let mut ctx = PathSearch::new(g.n(), coloring.color_count());
        Ok(ctx.cf_edge_path_exists(g, coloring, u, v))
    }
}

/// Unique path between two vertices of a tree (inclusive endpoints).
pub fn tree_path(t: &Graph, u: usize, v: usize) -> Vec<usize> {
    let n = t.n();
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[u] = true;
    let mut queue = std::collections::VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == v {
            break;
        }
        for &w in t.neighbors(x) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = x;
                queue.push_back(w);
            }
        }
    }
    let mut path = vec![v];
    let mut cur = v;
    while cur != u {
        cur = parent[cur];
        path.push(cur);
    }
    path.reverse();
    path
}

// -- tree route: one DFS per source, counts maintained along the current path

struct PathCounts {
    counts: Vec<u32>,
    // number of colors that occur exactly once on the current path
    singles: usize,
}

impl PathCounts {
    fn new(k: usize) -> Self {
        PathCounts {
            counts: vec![0; k + 1],
            singles: 0,
        }
    }

    fn push(&mut self, color: usize) {
        self.counts[color] += 1;
        match self.counts[color] {
            1 => self.singles += 1,
            2 => self.singles -= 1,
            _ => {}
        }
    }

    fn pop(&mut self, color: usize) {
        self.counts[color] -= 1;
        match self.counts[color] {
            0 => self.singles -= 1,
            1 => self.singles += 1,
            _ => {}
        }
    }
}

fn tree_failing_pair_vertex(g: &Graph, coloring: &VertexColoring) -> Option<(usize, usize)> {
    let n = g.n();
    let mut pc = PathCounts::new(coloring.color_count());
    for u in 0..n {
        let mut worst: Option<usize> = None;
        tree_dfs_vertex(g, coloring.colors(), u, usize::MAX, u, &mut pc, &mut worst);
        if let Some(v) = worst {
            return Some((u, v));
        }
    }
    None
}

fn tree_dfs_vertex(
    g: &Graph,
    colors: &[usize],
    v: usize,
    parent: usize,
    origin: usize,
    pc: &mut PathCounts,
    worst: &mut Option<usize>,
) {
    pc.push(colors[v]);
    if v > origin && pc.singles == 0 && worst.is_none_or(|b| v < b) {
        *worst = Some(v);
    }
    for &w in g.neighbors(v) {
        if w != parent {
            tree_dfs_vertex(g, colors, w, v, origin, pc, worst);
        }
    }
    pc.pop(colors[v]);
}

fn tree_failing_pair_edge(g: &Graph, coloring: &EdgeColoring) -> Option<(usize, usize)> {
    let n = g.n();
    let mut pc = PathCounts::new(coloring.color_count());
    for u in 0..n {
        let mut worst: Option<usize> = None;
        tree_dfs_edge(g, coloring, u, usize::MAX, u, &mut pc, &mut worst);
        if let Some(v) = worst {
            return Some((u, v));
        }
    }
    None
}

fn tree_dfs_edge(
    g: &Graph,
    coloring: &EdgeColoring,
    v: usize,
    parent: usize,
    origin: usize,
    pc: &mut PathCounts,
    worst: &mut Option<usize>,
) {
    if v > origin && pc.singles == 0 && worst.is_none_or(|b| v < b) {
        *worst = Some(v);
    }
    for &w in g.neighbors(v) {
        if w != parent {
            let c = coloring.color_of(v, w).expect("edge colored");
            pc.push(c);
            tree_dfs_edge(g, coloring, w, v, origin, pc, worst);
            pc.pop(c);
        }
    }
}

// -- general route: backtracking enumeration of simple paths per pair

struct PathSearch {
    visited: Vec<bool>,
    pc: PathCounts,
}

impl PathSearch {
    fn new(n: usize, k: usize) -> Self {
        PathSearch {
            visited: vec![false; n],
            pc: PathCounts::new(k),
        }
    }

    fn cf_vertex_path_exists(&mut self, g: &Graph, colors: &[usize], s: usize, t: usize) -> bool {
        self.visited[s] = true;
        self.pc.push(colors[s]);
        let found = if s == t {
            self.pc.singles > 0
        } else {
            g.neighbors(s)
                .iter()
                .any(|&w| !self.visited[w] && self.cf_vertex_path_exists(g, colors, w, t))
        };
        self.pc.pop(colors[s]);
        self.visited[s] = false;
        found
    }

    fn cf_edge_path_exists(
        &mut self,
        g: &Graph,
        coloring: &EdgeColoring,
        s: usize,
        t: usize,
    ) -> bool {
        if s == t {
            return self.pc.singles > 0;
        }
        self.visited[s] = true;
        let mut found = false;
        for &w in g.neighbors(s) {
            if self.visited[w] {
                continue;
            }
            let c = coloring.color_of(s, w).expect("edge colored");
            self.pc.push(c);
            if self.cf_edge_path_exists(g, coloring, w, t) {
                found = true;
            }
            self.pc.pop(c);
            if found {
                break;
            }
        }
        self.visited[s] = false;
        found
    }
}

fn general_failing_pair_vertex(g: &Graph, coloring: &VertexColoring) -> Option<(usize, usize)> {
    let n = g.n();
    let mut ctx = PathSearch::new(n, coloring.color_count());
    for u in 0..n {
        for v in (u + 1)..n {
            if !ctx.cf_vertex_path_exists(g, coloring.colors(), u, v) {
                return Some((u, v));
            }
        }
    }
    None
}

fn general_failing_pair_edge(g: &Graph, coloring: &EdgeColoring) -> Option<(usize, usize)> {
    let n = g.n();
    let mut ctx = PathSearch::new(n, coloring.color_count());
    for u in 0..n {
        for v in (u + 1)..n {
            // a single edge is trivially conflict-free
            if g.has_edge(u, v) {
                continue;
            }
            if !ctx.cf_edge_path_exists(g, coloring, u, v) {
                return Some((u, v));
            }
        }
    }
    None
}
