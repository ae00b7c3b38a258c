//! Exact minimum-color searches. Values are certified by ascending
//! exhaustion: every candidate count below the reported one is fully
//! enumerated (up to color-class relabeling) and fails, and the returned
//! witness passes the corresponding verifier.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{self, Graph};
use crate::verify::{self, EdgeColoring, VertexColoring};

/// Caps for the exhaustive searches; cost grows like k^n times path
/// enumeration, so pushing these is a deliberate act.
#[derive(Debug, Clone, Copy)]
pub struct SolverCaps {
    pub max_vertices: usize,
    pub max_edges: usize,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps {
            max_vertices: 10,
            max_edges: 10,
        }
    }
}

/// Outcome of an exact search.
#[derive(Debug, Clone)]
pub struct ExactResult<W> {
    /// Minimal number of colors (or labels).
    pub value: usize,
    /// Lexicographically least witness achieving `value`.
    pub witness: W,
    /// Candidate evaluations: complete assignments checked plus partial
    /// assignments rejected by tree pruning, over the entire search.
    pub explored: u64,
}

/// Vertex labeling where every path between two equal labels contains a
/// strictly larger label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ranking {
    labels: Vec<usize>,
}

impl Ranking {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        if labels.is_empty() {
            return Err(Error::Validation("ranking must cover a vertex".into()));
        }
        if labels.contains(&0) {
            return Err(Error::Validation("labels are 1-based".into()));
        }
        Ok(Ranking { labels })
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    pub fn max_label(&self) -> usize {
        *self.labels.iter().max().unwrap()
    }

    /// One `vertex<TAB>label` line per vertex.
    pub fn to_tsv(&self) -> String {
        let mut s = String::new();
        for (v, l) in self.labels.iter().enumerate() {
            s.push_str(&format!("{v}\t{l}\n"));
        }
        s
    }
}

/// Valid iff for every pair of equal-label vertices, every path between
/// them contains a larger label. On trees only the unique path exists; on
/// other graphs all simple paths are enumerated (cap applies).
pub fn is_valid_ranking(g: &Graph, r: &Ranking) -> Result<bool> {
    if r.labels().len() != g.n() {
        return Err(Error::Validation(format!(
            "ranking covers {} vertices but the graph has {}",
            r.labels().len(),
            g.n()
        )));
    }
    let n = g.n();
    if n <= 1 {
        return Ok(true);
    }
    if graph::is_tree(g) {
        for u in 0..n {
            for v in (u + 1)..n {
                if r.label(u) != r.label(v) {
                    continue;
                }
                let path = verify::tree_path(g, u, v);
                if !path.iter().any(|&x| r.label(x) > r.label(u)) {
                    return Ok(false);
                }
            }
        }
        return Ok(true);
    }
    if n > verify::DEFAULT_PATH_SEARCH_CAP {
        return Err(Error::CapExceeded {
            what: "path-search vertices",
            limit: verify::DEFAULT_PATH_SEARCH_CAP,
            actual: n,
        });
    }
    for u in 0..n {
        for v in (u + 1)..n {
            if r.label(u) == r.label(v)
                && !all_paths_have_larger_label(g, r.labels(), u, v, r.label(u))
            {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Every simple path from `s` to `t` must visit a label above `limit`.
fn all_paths_have_larger_label(
    g: &Graph,
    labels: &[usize],
    s: usize,
    t: usize,
    limit: usize,
) -> bool {
    fn rec(
        g: &Graph,
        labels: &[usize],
        v: usize,
        t: usize,
        limit: usize,
        seen_larger: usize,
        visited: &mut Vec<bool>,
    ) -> bool {
        let larger = seen_larger + usize::from(labels[v] > limit);
        if v == t {
            return larger > 0;
        }
        visited[v] = true;
        let ok = g
            .neighbors(v)
            .iter()
            .all(|&w| visited[w] || rec(g, labels, w, t, limit, larger, visited));
        visited[v] = false;
        ok
    }
    let mut visited = vec![false; g.n()];
    rec(g, labels, s, t, limit, 0, &mut visited)
}

// -- tree pair tables -------------------------------------------------------
//
// On a tree the unique path of a pair is fully determined, so a partial
// assignment in index order decides the pair as soon as its largest slot is
// filled. Grouping pairs by that slot lets the searches prune dead branches
// the moment they go wrong.

struct TreePair {
    u: usize,
    v: usize,
    path_vertices: Vec<usize>,
    path_edges: Vec<usize>,
}

struct PairTable {
    pairs_at: Vec<Vec<TreePair>>,
}

fn pair_table(
    t: &Graph,
    edge_index: &BTreeMap<(usize, usize), usize>,
    by_edges: bool,
) -> PairTable {
    let n = t.n();
    let slots = if by_edges { edge_index.len() } else { n };
    let mut pairs_at: Vec<Vec<TreePair>> = (0..slots).map(|_| Vec::new()).collect();
    for u in 0..n {
        for v in (u + 1)..n {
            let path_vertices = verify::tree_path(t, u, v);
            let path_edges: Vec<usize> = path_vertices
                .windows(2)
                .map(|w| edge_index[&(w[0].min(w[1]), w[0].max(w[1]))])
                .collect();
            if by_edges {
                // single-edge paths are conflict-free for free
                if path_edges.len() < 2 {
                    continue;
                }
                let slot = *path_edges.iter().max().unwrap();
                pairs_at[slot].push(TreePair {
                    u,
                    v,
                    path_vertices,
                    path_edges,
                });
            } else {
                let slot = *path_vertices.iter().max().unwrap();
                pairs_at[slot].push(TreePair {
                    u,
                    v,
                    path_vertices,
                    path_edges,
                });
            }
        }
    }
    PairTable { pairs_at }
}

fn edge_index_map(g: &Graph) -> BTreeMap<(usize, usize), usize> {
    g.edges()
        .into_iter()
        .enumerate()
        .map(|(i, e)| (e, i))
        .collect()
}

fn some_color_is_singleton(slots: &[usize], colors: &[usize]) -> bool {
    slots.iter().any(|&x| {
        let c = colors[x];
        slots.iter().filter(|&&y| colors[y] == c).count() == 1
    })
}

// -- conflict-free vertex connection number ----------------------------------

/// Smallest k admitting a surjective k-vertex-coloring that passes the
/// conflict-free vertex connectivity check.
pub fn exact_vcfc(g: &Graph, caps: SolverCaps) -> Result<ExactResult<VertexColoring>> {
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n > caps.max_vertices {
        return Err(Error::CapExceeded {
            what: "vertices",
            limit: caps.max_vertices,
            actual: n,
        });
    }
    if n == 1 {
        // single vertex: one color, vacuously conflict-free
        return Ok(ExactResult {
            value: 1,
            witness: VertexColoring::new(vec![1])?,
            explored: 1,
        });
    }
    let table = if graph::is_tree(g) {
        Some(pair_table(g, &edge_index_map(g), false))
    } else {
        None
    };
    let mut explored = 0u64;
    // one color can never work on two or more vertices: any path repeats it
    for k in 2..=n {
        let mut colors = vec![0usize; n];
        if let Some(w) = vertex_search(g, k, &mut colors, 0, 0, table.as_ref(), &mut explored)? {
            return Ok(ExactResult {
                value: k,
                witness: w,
                explored,
            });
        }
    }
    unreachable!("an all-distinct coloring is always conflict-free")
}

/// Search at exactly `k` colors (surjective, canonical first-use order).
pub fn find_cf_vertex_coloring(g: &Graph, k: usize) -> Result<Option<VertexColoring>> {
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok((k == 1).then(|| VertexColoring::new(vec![1]).unwrap()));
    }
    if k == 0 || k > n {
        return Ok(None);
    }
    let table = if graph::is_tree(g) {
        Some(pair_table(g, &edge_index_map(g), false))
    } else {
        None
    };
    let mut explored = 0u64;
    let mut colors = vec![0usize; n];
    vertex_search(g, k, &mut colors, 0, 0, table.as_ref(), &mut explored)
}

fn vertex_search(
    g: &Graph,
    k: usize,
    colors: &mut Vec<usize>,
    t: usize,
    used: usize,
    table: Option<&PairTable>,
    explored: &mut u64,
) -> Result<Option<VertexColoring>> {
    let n = g.n();
    if t == n {
        if used != k {
            return Ok(None);
        }
        *explored += 1;
        let cand = VertexColoring::new(colors.clone())?;
        if table.is_some() {
            // every pair was checked when its path completed
            return Ok(Some(cand));
        }
        if verify::is_cf_vertex_connected(g, &cand)? {
            return Ok(Some(cand));
        }
        return Ok(None);
    }
    let limit = (used + 1).min(k);
    for c in 1..=limit {
        colors[t] = c;
        let now_used = used.max(c);
        // surjectivity must stay reachable
        if now_used + (n - 1 - t) < k {
            continue;
        }
        if let Some(tbl) = table {
            if !tbl.pairs_at[t]
                .iter()
                .all(|p| some_color_is_singleton(&p.path_vertices, colors))
            {
                *explored += 1;
                continue;
            }
        }
        if let Some(w) = vertex_search(g, k, colors, t + 1, now_used, table, explored)? {
            return Ok(Some(w));
        }
    }
    colors[t] = 0;
    Ok(None)
}

// -- conflict-free connection number (edge variant) ---------------------------

/// Smallest k admitting a surjective k-edge-coloring that passes the
/// conflict-free connectivity check. The trivial graph gets 0 by
/// convention (no edges, nothing to color).
pub fn exact_cfc(g: &Graph, caps: SolverCaps) -> Result<ExactResult<EdgeColoring>> {
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let m = g.edge_count();
    if m > caps.max_edges {
        return Err(Error::CapExceeded {
            what: "edges",
            limit: caps.max_edges,
            actual: m,
        });
    }
    if g.n() <= 1 {
        return Ok(ExactResult {
            value: 0,
            witness: EdgeColoring::new(BTreeMap::new())?,
            explored: 1,
        });
    }
    let edge_index = edge_index_map(g);
    let table = if graph::is_tree(g) {
        Some(pair_table(g, &edge_index, true))
    } else {
        None
    };
    let mut explored = 0u64;
    for k in 1..=m {
        let mut colors = vec![0usize; m];
        if let Some(w) = edge_search(g, k, &mut colors, 0, 0, table.as_ref(), &mut explored)? {
            return Ok(ExactResult {
                value: k,
                witness: w,
                explored,
            });
        }
    }
    unreachable!("an all-distinct edge coloring is always conflict-free")
}

/// Search at exactly `k` edge colors.
pub fn find_cf_edge_coloring(g: &Graph, k: usize) -> Result<Option<EdgeColoring>> {
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let m = g.edge_count();
    if g.n() <= 1 {
        return Ok((k == 0).then(|| EdgeColoring::new(BTreeMap::new()).unwrap()));
    }
    if k == 0 || k > m {
        return Ok(None);
    }
    let edge_index = edge_index_map(g);
    let table = if graph::is_tree(g) {
        Some(pair_table(g, &edge_index, true))
    } else {
        None
    };
    let mut explored = 0u64;
    let mut colors = vec![0usize; m];
    edge_search(g, k, &mut colors, 0, 0, table.as_ref(), &mut explored)
}

fn edge_search(
    g: &Graph,
    k: usize,
    colors: &mut Vec<usize>,
    t: usize,
    used: usize,
    table: Option<&PairTable>,
    explored: &mut u64,
) -> Result<Option<EdgeColoring>> {
    let m = colors.len();
    if t == m {
        if used != k {
            return Ok(None);
        }
        *explored += 1;
        let cand = EdgeColoring::from_color_vec(g, colors)?;
        if table.is_some() {
            return Ok(Some(cand));
        }
        if verify::is_cf_edge_connected(g, &cand)? {
            return Ok(Some(cand));
        }
        return Ok(None);
    }
    let limit = (used + 1).min(k);
    for c in 1..=limit {
        colors[t] = c;
        let now_used = used.max(c);
        if now_used + (m - 1 - t) < k {
            continue;
        }
        if let Some(tbl) = table {
            if !tbl.pairs_at[t]
                .iter()
                .all(|p| some_color_is_singleton(&p.path_edges, colors))
            {
                *explored += 1;
                continue;
            }
        }
        if let Some(w) = edge_search(g, k, colors, t + 1, now_used, table, explored)? {
            return Ok(Some(w));
        }
    }
    colors[t] = 0;
    Ok(None)
}

// -- minimum vertex ranking ---------------------------------------------------

/// Smallest k for which a valid k-ranking exists. Labels are ordered, so
/// unlike the coloring searches every labeling must be enumerated.
pub fn exact_ranking(g: &Graph, caps: SolverCaps) -> Result<ExactResult<Ranking>> {
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n > caps.max_vertices {
        return Err(Error::CapExceeded {
            what: "vertices",
            limit: caps.max_vertices,
            actual: n,
        });
    }
    if n == 1 {
        return Ok(ExactResult {
            value: 1,
            witness: Ranking::new(vec![1])?,
            explored: 1,
        });
    }
    let table = if graph::is_tree(g) {
        Some(pair_table(g, &edge_index_map(g), false))
    } else {
        None
    };
    let mut explored = 0u64;
    for k in 1..=n {
        let mut labels = vec![0usize; n];
        if let Some(w) = ranking_search(g, k, &mut labels, 0, table.as_ref(), &mut explored)? {
            return Ok(ExactResult {
                value: k,
                witness: w,
                explored,
            });
        }
    }
    unreachable!("all-distinct labels always form a valid ranking")
}

/// Search for any valid ranking with labels in 1..=k.
pub fn find_ranking(g: &Graph, k: usize) -> Result<Option<Ranking>> {
    if !graph::is_connected(g) {
        return Err(Error::Disconnected);
    }
    let n = g.n();
    if n == 1 {
        return Ok((k >= 1).then(|| Ranking::new(vec![1]).unwrap()));
    }
    if k == 0 {
        return Ok(None);
    }
    let table = if graph::is_tree(g) {
        Some(pair_table(g, &edge_index_map(g), false))
    } else {
        None
    };
    let mut explored = 0u64;
    let mut labels = vec![0usize; n];
    ranking_search(g, k, &mut labels, 0, table.as_ref(), &mut explored)
}

fn ranking_search(
    g: &Graph,
    k: usize,
    labels: &mut Vec<usize>,
    t: usize,
    table: Option<&PairTable>,
    explored: &mut u64,
) -> Result<Option<Ranking>> {
    let n = g.n();
    if t == n {
        *explored += 1;
        let cand = Ranking::new(labels.clone())?;
        if table.is_some() {
            return Ok(Some(cand));
        }
        if is_valid_ranking(g, &cand)? {
            return Ok(Some(cand));
        }
        return Ok(None);
    }
    for l in 1..=k {
        labels[t] = l;
        if let Some(tbl) = table {
            let ok = tbl.pairs_at[t].iter().all(|p| {
                labels[p.u] != labels[p.v]
                    || p.path_vertices.iter().any(|&x| labels[x] > labels[p.u])
            });
            if !ok {
                *explored += 1;
                continue;
            }
        }
        if let Some(w) = ranking_search(g, k, labels, t + 1, table, explored)? {
            return Ok(Some(w));
        }
    }
    labels[t] = 0;
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_graph, cycle_graph, path_graph, star_graph};
    use crate::verify::{is_cf_edge_connected, is_cf_vertex_connected};

    fn caps() -> SolverCaps {
        SolverCaps::default()
    }

    #[test]
    fn vcfc_of_named_families() {
        assert_eq!(
            exact_vcfc(&path_graph(7).unwrap(), caps()).unwrap().value,
            3
        );
        assert_eq!(
            exact_vcfc(&cycle_graph(6).unwrap(), caps()).unwrap().value,
            2
        );
        assert_eq!(
            exact_vcfc(&star_graph(8).unwrap(), caps()).unwrap().value,
            2
        );
        assert_eq!(exact_vcfc(&Graph::empty(1), caps()).unwrap().value, 1);
        assert_eq!(
            exact_vcfc(&path_graph(2).unwrap(), caps()).unwrap().value,
            2
        );
    }

    #[test]
    fn cfc_of_named_families() {
        assert_eq!(
            exact_cfc(&complete_graph(5).unwrap(), caps())
                .unwrap()
                .value,
            1
        );
        assert_eq!(exact_cfc(&star_graph(6).unwrap(), caps()).unwrap().value, 5);
        assert_eq!(exact_cfc(&path_graph(8).unwrap(), caps()).unwrap().value, 3);
        assert_eq!(exact_cfc(&Graph::empty(1), caps()).unwrap().value, 0);
    }

    #[test]
    fn witnesses_pass_their_verifiers() {
        for g in [
            path_graph(6).unwrap(),
            star_graph(5).unwrap(),
            cycle_graph(5).unwrap(),
            complete_graph(4).unwrap(),
        ] {
            let r = exact_vcfc(&g, caps()).unwrap();
            assert_eq!(r.witness.color_count(), r.value);
            assert!(is_cf_vertex_connected(&g, &r.witness).unwrap());

            let r = exact_cfc(&g, caps()).unwrap();
            assert_eq!(r.witness.color_count(), r.value);
            assert!(is_cf_edge_connected(&g, &r.witness).unwrap());
        }
    }

    #[test]
    fn one_fewer_color_is_exhausted_empty() {
        for g in [
            path_graph(7).unwrap(),
            star_graph(6).unwrap(),
            cycle_graph(5).unwrap(),
        ] {
            let v = exact_vcfc(&g, caps()).unwrap().value;
            assert!(find_cf_vertex_coloring(&g, v - 1).unwrap().is_none());
            assert!(find_cf_vertex_coloring(&g, v).unwrap().is_some());

            let c = exact_cfc(&g, caps()).unwrap().value;
            assert!(find_cf_edge_coloring(&g, c - 1).unwrap().is_none());
            assert!(find_cf_edge_coloring(&g, c).unwrap().is_some());
        }
    }

    #[test]
    fn ranking_validity_examples() {
        let p3 = path_graph(3).unwrap();
        assert!(is_valid_ranking(&p3, &Ranking::new(vec![1, 2, 1]).unwrap()).unwrap());
        assert!(!is_valid_ranking(&p3, &Ranking::new(vec![1, 1, 2]).unwrap()).unwrap());
        let p7 = path_graph(7).unwrap();
        assert!(is_valid_ranking(&p7, &Ranking::new(vec![1, 2, 1, 3, 1, 2, 1]).unwrap()).unwrap());
        // on a cycle the second path around can dodge the larger label
        let c4 = cycle_graph(4).unwrap();
        assert!(!is_valid_ranking(&c4, &Ranking::new(vec![1, 2, 1, 1]).unwrap()).unwrap());
        assert!(is_valid_ranking(&c4, &Ranking::new(vec![1, 2, 1, 3]).unwrap()).unwrap());
    }

    #[test]
    fn exact_ranking_values() {
        assert_eq!(
            exact_ranking(&path_graph(3).unwrap(), caps())
                .unwrap()
                .value,
            2
        );
        assert_eq!(
            exact_ranking(&path_graph(7).unwrap(), caps())
                .unwrap()
                .value,
            3
        );
        assert_eq!(
            exact_ranking(&star_graph(5).unwrap(), caps())
                .unwrap()
                .value,
            2
        );
    }

    #[test]
    fn ranking_witness_is_valid_and_minimal() {
        for g in [
            path_graph(6).unwrap(),
            star_graph(7).unwrap(),
            cycle_graph(5).unwrap(),
        ] {
            let r = exact_ranking(&g, caps()).unwrap();
            assert!(is_valid_ranking(&g, &r.witness).unwrap());
            assert_eq!(r.witness.max_label(), r.value);
            assert!(find_ranking(&g, r.value - 1).unwrap().is_none());
        }
    }

    #[test]
    fn caps_are_enforced_with_names() {
        let big = path_graph(11).unwrap();
        match exact_vcfc(&big, caps()) {
            Err(Error::CapExceeded {
                what,
                limit,
                actual,
            }) => {
                assert_eq!(what, "vertices");
                assert_eq!((limit, actual), (10, 11));
            }
            other => panic!("expected cap error, got {other:?}"),
        }
        match exact_cfc(&complete_graph(6).unwrap(), caps()) {
            Err(Error::CapExceeded { what, .. }) => assert_eq!(what, "edges"),
            other => panic!("expected cap error, got {other:?}"),
        }
        assert!(matches!(
            exact_ranking(&big, caps()),
            Err(Error::CapExceeded { what: "vertices", .. })
        ));
        let raised = SolverCaps {
            max_vertices: 12,
            max_edges: 12,
        };
        assert_eq!(exact_vcfc(&big, raised).unwrap().value, 4);
    }

    #[test]
    fn disconnected_inputs_are_rejected() {
        let split = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(matches!(
            exact_vcfc(&split, caps()),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            exact_cfc(&split, caps()),
            Err(Error::Disconnected)
        ));
        assert!(matches!(
            exact_ranking(&split, caps()),
            Err(Error::Disconnected)
        ));
    }

    #[test]
    fn search_is_deterministic() {
        let g = cycle_graph(6).unwrap();
        let a = exact_vcfc(&g, caps()).unwrap();
        let b = exact_vcfc(&g, caps()).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.explored, b.explored);
    }
}
