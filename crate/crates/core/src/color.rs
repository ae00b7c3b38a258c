//! Constructive conflict-free vertex colorings.
//!
//! Deleting a vertex that minimizes the maximum residual component order
//! leaves components of order at most floor(n/2). Giving that vertex the
//! top color and recursing independently into the components yields a
//! conflict-free coloring of any tree with at most `ceil(log2(n+1))`
//! colors, which is tight on paths. A spanning tree lifts the construction
//! to arbitrary connected graphs.

use crate::ceil_log2;
use crate::error::{Error, Result};
use crate::graph::{self, Graph, VertexPartition};
use crate::verify::VertexColoring;

/// A vertex minimizing the maximum component order after its deletion,
/// together with those components.
#[derive(Debug, Clone)]
pub struct SplitterResult {
    pub vertex: usize,
    /// Maximum component order of the graph minus `vertex`; at most
    /// floor(n/2), and at most (n-1)/2 when n is odd.
    pub moc: usize,
    pub components: VertexPartition,
}

fn require_tree(t: &Graph) -> Result<()> {
    if !graph::is_tree(t) {
        return Err(Error::Validation("expected a tree".into()));
    }
    Ok(())
}

/// Maximum order among the components of `t - v`. Deleting a leaf gives
/// n - 1.
pub fn moc(t: &Graph, v: usize) -> Result<usize> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(Error::Validation(
            "moc needs a tree on at least two vertices".into(),
        ));
    }
    Ok(graph::delete_vertex_components(t, v)?.max_block_len())
}

/// `moc(t - v)` for every vertex at once: one subtree-size sweep from a
/// fixed root instead of n component extractions.
pub fn moc_all(t: &Graph) -> Result<Vec<usize>> {
    require_tree(t)?;
    let n = t.n();
    if n == 0 {
        return Err(Error::Validation("empty tree".into()));
    }
    if n == 1 {
        return Ok(vec![0]);
    }
    // BFS order from 0; reverse sweep accumulates subtree sizes
    let mut parent = vec![usize::MAX; n];
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in t.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                queue.push_back(w);
            }
        }
    }
    let mut size = vec![1usize; n];
    let mut child_max = vec![0usize; n];
    for &v in order.iter().rev() {
        let p = parent[v];
        if p != usize::MAX {
            size[p] += size[v];
            child_max[p] = child_max[p].max(size[v]);
        }
    }
    Ok((0..n).map(|v| child_max[v].max(n - size[v])).collect())
}

/// The vertex minimizing `moc(t - v)`, smallest index on ties.
pub fn find_splitter(t: &Graph) -> Result<SplitterResult> {
    require_tree(t)?;
    if t.n() < 2 {
        return Err(Error::Validation(
            "splitter needs a tree on at least two vertices".into(),
        ));
    }
    let all = moc_all(t)?;
    // min_by_key keeps the first minimum, i.e. the smallest vertex index
    let (vertex, &best) = all.iter().enumerate().min_by_key(|&(_, m)| *m).unwrap();
    debug_assert!(best <= t.n() / 2);
    Ok(SplitterResult {
        vertex,
        moc: best,
        components: graph::delete_vertex_components(t, vertex)?,
    })
}

/// Conflict-free vertex coloring of a tree with at most `ceil(log2(n+1))`
/// distinct colors: the splitter takes the top color of the current range
/// and each residual component is colored recursively below it.
pub fn color_tree(t: &Graph) -> Result<VertexColoring> {
    require_tree(t)?;
    if t.n() == 0 {
        return Err(Error::Validation("empty tree".into()));
    }
    let mut assigned = vec![0usize; t.n()];
    let identity: Vec<usize> = (0..t.n()).collect();
    color_component(t, &identity, &mut assigned)?;
    VertexColoring::normalized(assigned)
}

fn color_component(sub: &Graph, to_original: &[usize], out: &mut [usize]) -> Result<()> {
    let n = sub.n();
    if n == 1 {
        out[to_original[0]] = 1;
        return Ok(());
    }
    let top = ceil_log2(n + 1);
    let split = find_splitter(sub)?;
    out[to_original[split.vertex]] = top;
    for block in &split.components.blocks {
        let child = graph::induced_subgraph(sub, block)?;
        let child_map: Vec<usize> = block.iter().map(|&i| to_original[i]).collect();
        color_component(&child, &child_map, out)?;
    }
    Ok(())
}

/// Conflict-free vertex coloring of any connected graph: color a
/// deterministic spanning tree; every conflict-free tree path is still a
/// path of the host graph.
pub fn color_graph(g: &Graph) -> Result<VertexColoring> {
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    color_tree(&graph::spanning_tree(g)?)
}
