//! Catalogs of non-isomorphic trees and connected graphs at small orders,
//! and sweep harnesses that test structural claims against the exact
//! solver over a whole catalog at once.
//!
//! Tree classes are deduplicated by a centroid-rooted canonical string
//! (lexicographically least over the at most two centroids); connected
//! graphs by the minimal adjacency-matrix code over all vertex
//! permutations. Catalogs store the canonical representative rebuilt from
//! its key, so runs are reproducible byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::ceil_log2;
use crate::color;
use crate::error::{Error, Result};
use crate::exact::{self, SolverCaps};
use crate::graph::{self, Graph};
use crate::verify;

/// Largest order for the tree catalog.
pub const MAX_TREE_ORDER: usize = 10;
/// Largest order for the connected-graph catalog (7! permutations per
/// canonicalization).
pub const MAX_GRAPH_ORDER: usize = 7;

/// One isomorphism class: its canonical key and a canonical representative.
#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub key: String,
    pub graph: Graph,
}

/// One representative per isomorphism class at a fixed order, sorted by
/// canonical key.
#[derive(Debug, Clone)]
pub struct IsoClassCatalog {
    pub order: usize,
    pub entries: Vec<CatalogEntry>,
}

impl IsoClassCatalog {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn members(&self) -> impl Iterator<Item = &Graph> {
        self.entries.iter().map(|e| &e.graph)
    }

    pub fn keys(&self) -> impl Iterator<Item = &str> {
        self.entries.iter().map(|e| e.key.as_str())
    }
}

// -- tree canonicalization ----------------------------------------------------

/// Canonical form of a free tree: root at each centroid (a vertex
/// minimizing the maximum residual component order; there are at most two)
/// and take the lexicographically least nested-parenthesis string.
pub fn tree_canonical_key(t: &Graph) -> Result<String> {
    if !graph::is_tree(t) {
        return Err(Error::Validation("expected a tree".into()));
    }
    if t.n() == 0 {
        return Err(Error::Validation("empty tree".into()));
    }
    if t.n() == 1 {
        return Ok("()".to_string());
    }
    let moc = color::moc_all(t)?;
    let best = *moc.iter().min().unwrap();
    (0..t.n())
        .filter(|&v| moc[v] == best)
        .map(|c| rooted_subtree_key(t, c, usize::MAX))
        .min()
        .ok_or_else(|| Error::Validation("tree has no centroid".into()))
}

fn rooted_subtree_key(t: &Graph, v: usize, parent: usize) -> String {
    let mut child_keys: Vec<String> = t
        .neighbors(v)
        .iter()
        .filter(|&&w| w != parent)
        .map(|&w| rooted_subtree_key(t, w, v))
        .collect();
    child_keys.sort();
    let mut s = String::with_capacity(2 + child_keys.iter().map(String::len).sum::<usize>());
    s.push('(');
    for k in &child_keys {
        s.push_str(k);
    }
    s.push(')');
    s
}

/// Rebuild the canonical representative from a nested-parenthesis key;
/// vertices are numbered in preorder.
pub fn tree_from_canonical_key(key: &str) -> Result<Graph> {
    let bytes = key.as_bytes();
    let mut edges = Vec::new();
    let mut next_index = 0usize;
    let mut pos = 0usize;

    fn parse_node(
        bytes: &[u8],
        pos: &mut usize,
        parent: Option<usize>,
        next_index: &mut usize,
        edges: &mut Vec<(usize, usize)>,
    ) -> Result<()> {
        if bytes.get(*pos) != Some(&b'(') {
            return Err(Error::Validation(format!("bad tree key at byte {}", *pos)));
        }
        *pos += 1;
        let me = *next_index;
        *next_index += 1;
        if let Some(p) = parent {
            edges.push((p, me));
        }
        while bytes.get(*pos) == Some(&b'(') {
            parse_node(bytes, pos, Some(me), next_index, edges)?;
        }
        if bytes.get(*pos) != Some(&b')') {
            return Err(Error::Validation(format!("bad tree key at byte {}", *pos)));
        }
        *pos += 1;
        Ok(())
    }

    parse_node(bytes, &mut pos, None, &mut next_index, &mut edges)?;
    if pos != bytes.len() {
        return Err(Error::Validation("trailing characters in tree key".into()));
    }
    Graph::from_edges(next_index, &edges)
}

// -- graph canonicalization ---------------------------------------------------

fn for_each_permutation(n: usize, f: &mut impl FnMut(&[usize])) {
    fn rec(arr: &mut Vec<usize>, k: usize, f: &mut impl FnMut(&[usize])) {
        if k == arr.len() {
            f(arr);
            return;
        }
        for i in k..arr.len() {
            arr.swap(k, i);
            rec(arr, k + 1, f);
            arr.swap(k, i);
        }
    }
    let mut arr: Vec<usize> = (0..n).collect();
    rec(&mut arr, 0, f);
}

fn adjacency_rows(g: &Graph) -> Vec<u32> {
    let mut rows = vec![0u32; g.n()];
    for (u, v) in g.edges() {
        rows[u] |= 1 << v;
        rows[v] |= 1 << u;
    }
    rows
}

fn code_under_perm(rows: &[u32], perm: &[usize]) -> u64 {
    let n = rows.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in (i + 1)..n {
            code = (code << 1) | ((rows[perm[i]] >> perm[j]) as u64 & 1);
        }
    }
    code
}

fn canonical_code(rows: &[u32]) -> u64 {
    let mut best = u64::MAX;
    for_each_permutation(rows.len(), &mut |perm| {
        let c = code_under_perm(rows, perm);
        if c < best {
            best = c;
        }
    });
    best
}

fn rows_from_code(n: usize, code: u64) -> Vec<u32> {
    let mut rows = vec![0u32; n];
    let mut bit = n * (n - 1) / 2;
    for i in 0..n {
        for j in (i + 1)..n {
            bit -= 1;
            if (code >> bit) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
        }
    }
    rows
}

fn graph_from_rows(rows: &[u32]) -> Graph {
    let n = rows.len();
    let mut edges = Vec::new();
    for (i, &row) in rows.iter().enumerate() {
        for j in (i + 1)..n {
            if (row >> j) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("rows encode a simple graph")
}

fn key_of_code(n: usize, code: u64) -> String {
    let bits = n * (n - 1) / 2;
    if bits == 0 {
        return format!("{n}:");
    }
    format!("{n}:{code:0width$b}", width = bits)
}

/// Minimal adjacency-matrix code over all vertex permutations, rendered as
/// `n:<upper-triangle bits>`.
pub fn graph_canonical_key(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > 8 {
        return Err(Error::CapExceeded {
            what: "canonicalization vertices",
            limit: 8,
            actual: n,
        });
    }
    Ok(key_of_code(n, canonical_code(&adjacency_rows(g))))
}

/// Rebuild the canonical representative from a `n:<bits>` key.
pub fn graph_from_canonical_key(key: &str) -> Result<Graph> {
    let (n_str, bits) = key
        .split_once(':')
        .ok_or_else(|| Error::Validation(format!("bad graph key {key:?}")))?;
    let n: usize = n_str
        .parse()
        .map_err(|_| Error::Validation(format!("bad graph key order {n_str:?}")))?;
    if bits.len() != n * (n - 1) / 2 {
        return Err(Error::Validation(format!(
            "graph key has {} bits, expected {}",
            bits.len(),
            n * (n - 1) / 2
        )));
    }
    let mut code = 0u64;
    for ch in bits.chars() {
        code = (code << 1)
            | match ch {
                '0' => 0,
                '1' => 1,
                _ => return Err(Error::Validation(format!("bad bit {ch:?} in graph key"))),
            };
    }
    Ok(graph_from_rows(&rows_from_code(n, code)))
}

// -- catalogs -------------------------------------------------------------------

/// One representative per isomorphism class of free trees of order `n`,
/// grown by attaching a leaf to every vertex of every class one order
/// below and deduplicating canonically.
pub fn all_trees(n: usize) -> Result<IsoClassCatalog> {
    if n == 0 {
        return Err(Error::Validation("tree order must be positive".into()));
    }
    if n > MAX_TREE_ORDER {
        return Err(Error::CapExceeded {
            what: "tree catalog vertices",
            limit: MAX_TREE_ORDER,
            actual: n,
        });
    }
    let mut keys: BTreeSet<String> = BTreeSet::from(["()".to_string()]);
    for m in 1..n {
        let mut next = BTreeSet::new();
        for key in &keys {
            let t = tree_from_canonical_key(key)?;
            for v in 0..m {
                let mut edges = t.edges();
                edges.push((v, m));
                let grown = Graph::from_edges(m + 1, &edges)?;
                next.insert(tree_canonical_key(&grown)?);
            }
        }
        keys = next;
    }
    let entries = keys
        .into_iter()
        .map(|key| {
            let graph = tree_from_canonical_key(&key)?;
            Ok(CatalogEntry { key, graph })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(IsoClassCatalog { order: n, entries })
}

/// One representative per isomorphism class of connected simple graphs of
/// order `n`. Classes of all graphs (connected or not) are grown one
/// vertex at a time over every neighborhood subset, then filtered.
pub fn all_connected_graphs(n: usize) -> Result<IsoClassCatalog> {
    if n == 0 {
        return Err(Error::Validation("graph order must be positive".into()));
    }
    if n > MAX_GRAPH_ORDER {
        return Err(Error::CapExceeded {
            what: "graph catalog vertices",
            limit: MAX_GRAPH_ORDER,
            actual: n,
        });
    }
    let mut codes: BTreeSet<u64> = BTreeSet::from([0u64]);
    for m in 1..n {
        let mut next = BTreeSet::new();
        for &code in &codes {
            let rows = rows_from_code(m, code);
            for mask in 0..(1u32 << m) {
                let mut grown = rows.clone();
                for (i, row) in grown.iter_mut().enumerate() {
                    *row |= ((mask >> i) & 1) << m;
                }
                grown.push(mask);
                next.insert(canonical_code(&grown));
            }
        }
        codes = next;
    }
    let entries = codes
        .into_iter()
        .filter_map(|code| {
            let graph = graph_from_rows(&rows_from_code(n, code));
            graph::is_connected(&graph).then(|| CatalogEntry {
                key: key_of_code(n, code),
                graph,
            })
        })
        .collect();
    Ok(IsoClassCatalog { order: n, entries })
}

// -- sweep reports ---------------------------------------------------------------

/// Whether an extremal entry attains the minimum or maximum of the scanned
/// invariant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalKind {
    Min,
    Max,
}

#[derive(Debug, Clone)]
pub struct ReportRow {
    pub key: String,
    pub order: usize,
    pub values: Vec<String>,
    pub bound: String,
    pub pass: bool,
}

#[derive(Debug, Clone)]
pub struct Violation {
    pub key: String,
    pub graph: Graph,
    pub observed: String,
    pub bound: String,
}

#[derive(Debug, Clone)]
pub struct Extremal {
    pub kind: ExtremalKind,
    pub key: String,
    pub value: usize,
}

/// Aggregate result of one exhaustive sweep at a fixed order.
#[derive(Debug, Clone)]
pub struct SearchReport {
    pub claim: &'static str,
    pub order: usize,
    pub columns: Vec<&'static str>,
    pub rows: Vec<ReportRow>,
    pub violations: Vec<Violation>,
    pub extremal: Vec<Extremal>,
}

impl SearchReport {
    pub fn checked(&self) -> usize {
        self.rows.len()
    }

    /// The machine-diffable report: a header, one row per class, a summary
    /// footer, then extremal notes and serialized violation witnesses as
    /// `#` comment lines.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("key\tn");
        for c in &self.columns {
            out.push('\t');
            out.push_str(c);
        }
        out.push_str("\tbound\tpass\n");
        for row in &self.rows {
            let _ = write!(out, "{}\t{}", row.key, row.order);
            for v in &row.values {
                let _ = write!(out, "\t{v}");
            }
            let _ = writeln!(
                out,
                "\t{}\t{}",
                row.bound,
                if row.pass { "pass" } else { "fail" }
            );
        }
        let _ = writeln!(
            out,
            "checked={} violations={}",
            self.checked(),
            self.violations.len()
        );
        for e in &self.extremal {
            let kind = match e.kind {
                ExtremalKind::Min => "min",
                ExtremalKind::Max => "max",
            };
            let _ = writeln!(out, "# extremal {kind}={} {}", e.value, e.key);
        }
        for v in &self.violations {
            let _ = writeln!(
                out,
                "# violation {} observed={} bound={}",
                v.key, v.observed, v.bound
            );
            for line in graph::to_edge_list(&v.graph).lines() {
                let _ = writeln!(out, "# {line}");
            }
        }
        out
    }
}

fn extremal_entries(values: &[(String, usize)]) -> Vec<Extremal> {
    let mut out = Vec::new();
    if let Some(&min) = values.iter().map(|(_, v)| v).min() {
        let max = *values.iter().map(|(_, v)| v).max().unwrap();
        for &(ref key, value) in values {
            if value == min {
                out.push(Extremal {
                    kind: ExtremalKind::Min,
                    key: key.clone(),
                    value,
                });
            }
        }
        if max != min {
            for &(ref key, value) in values {
                if value == max {
                    out.push(Extremal {
                        kind: ExtremalKind::Max,
                        key: key.clone(),
                        value,
                    });
                }
            }
        }
    }
    out
}

/// Over every connected class of order `n` (3..=6): the exact vertex
/// number equals 2 exactly when the graph is 2-connected or has exactly
/// one cut vertex. Violations would indicate an implementation bug.
pub fn check_vcfc_two_characterization(n: usize) -> Result<SearchReport> {
    if n < 3 {
        return Err(Error::Validation(
            "the characterization needs order at least three".into(),
        ));
    }
    if n > 6 {
        return Err(Error::CapExceeded {
            what: "vertices",
            limit: 6,
            actual: n,
        });
    }
    let caps = SolverCaps {
        max_vertices: n,
        max_edges: n * (n - 1) / 2,
    };
    let catalog = all_connected_graphs(n)?;
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut scanned = Vec::new();
    for entry in &catalog.entries {
        let g = &entry.graph;
        let vcfc = exact::exact_vcfc(g, caps)?.value;
        let two_connected = graph::is_two_connected(g);
        let cuts = graph::cut_vertices(g)?.len();
        let structural = two_connected || cuts == 1;
        let pass = (vcfc == 2) == structural;
        if !pass {
            violations.push(Violation {
                key: entry.key.clone(),
                graph: g.clone(),
                observed: format!("vcfc={vcfc} two_connected={two_connected} cut_vertices={cuts}"),
                bound: "vcfc=2 iff 2-connected or one cut vertex".into(),
            });
        }
        scanned.push((entry.key.clone(), vcfc));
        rows.push(ReportRow {
            key: entry.key.clone(),
            order: n,
            values: vec![
                vcfc.to_string(),
                two_connected.to_string(),
                cuts.to_string(),
            ],
            bound: "2".into(),
            pass,
        });
    }
    Ok(SearchReport {
        claim: "thm11",
        order: n,
        columns: vec!["vcfc", "two_connected", "cut_vertices"],
        rows,
        violations,
        extremal: extremal_entries(&scanned),
    })
}

/// Over every tree class of order `n` (2..=9): the constructive coloring
/// stays within `ceil(log2(n+1))` colors and verifies; for n <= 8 the
/// exact value is checked against the same bound.
pub fn check_tree_coloring_bound(n: usize) -> Result<SearchReport> {
    if n < 2 {
        return Err(Error::Validation("order must be at least two".into()));
    }
    if n > 9 {
        return Err(Error::CapExceeded {
            what: "vertices",
            limit: 9,
            actual: n,
        });
    }
    let bound = ceil_log2(n + 1);
    let exact_mode = n <= 8;
    let caps = SolverCaps {
        max_vertices: n,
        max_edges: n,
    };
    let catalog = all_trees(n)?;
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut scanned = Vec::new();
    for entry in &catalog.entries {
        let t = &entry.graph;
        let coloring = color::color_tree(t)?;
        let colors = coloring.color_count();
        let verified = verify::is_cf_vertex_connected(t, &coloring)?;
        let exact_value = if exact_mode {
            Some(exact::exact_vcfc(t, caps)?.value)
        } else {
            None
        };
        let pass = colors <= bound && verified && exact_value.is_none_or(|v| v <= bound);
        if !pass {
            violations.push(Violation {
                key: entry.key.clone(),
                graph: t.clone(),
                observed: format!(
                    "colors={colors} verified={verified} vcfc={}",
                    exact_value.map_or("-".to_string(), |v| v.to_string())
                ),
                bound: bound.to_string(),
            });
        }
        scanned.push((entry.key.clone(), exact_value.unwrap_or(colors)));
        rows.push(ReportRow {
            key: entry.key.clone(),
            order: n,
            values: vec![
                colors.to_string(),
                verified.to_string(),
                exact_value.map_or("-".to_string(), |v| v.to_string()),
            ],
            bound: bound.to_string(),
            pass,
        });
    }
    Ok(SearchReport {
        claim: "conj14",
        order: n,
        columns: vec!["colors", "verified", "vcfc"],
        rows,
        violations,
        extremal: extremal_entries(&scanned),
    })
}

/// Over every tree class of order `n` (2..=10): is the exact edge number
/// at least `ceil(log2 n)`? This claim is open, so a violation is a
/// finding to surface, not a crash; the report lists the trees attaining
/// the extremal values.
pub fn check_cfc_lower_bound(n: usize) -> Result<SearchReport> {
    if n < 2 {
        return Err(Error::Validation("order must be at least two".into()));
    }
    if n > 10 {
        return Err(Error::CapExceeded {
            what: "vertices",
            limit: 10,
            actual: n,
        });
    }
    let bound = ceil_log2(n);
    let caps = SolverCaps {
        max_vertices: n,
        max_edges: n - 1,
    };
    let catalog = all_trees(n)?;
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    let mut scanned = Vec::new();
    for entry in &catalog.entries {
        let t = &entry.graph;
        let cfc = exact::exact_cfc(t, caps)?.value;
        let pass = cfc >= bound;
        if !pass {
            violations.push(Violation {
                key: entry.key.clone(),
                graph: t.clone(),
                observed: format!("cfc={cfc}"),
                bound: bound.to_string(),
            });
        }
        scanned.push((entry.key.clone(), cfc));
        rows.push(ReportRow {
            key: entry.key.clone(),
            order: n,
            values: vec![cfc.to_string()],
            bound: bound.to_string(),
            pass,
        });
    }
    Ok(SearchReport {
        claim: "conj31",
        order: n,
        columns: vec!["cfc"],
        rows,
        violations,
        extremal: extremal_entries(&scanned),
    })
}

/// Over every connected class of order `n` (2..=6) and every single-edge
/// deletion that stays connected: neither exact number may decrease.
/// `samples` limits the deletions tried per class (in canonical edge
/// order); `None` tries them all.
pub fn check_deletion_monotonicity(n: usize, samples: Option<usize>) -> Result<SearchReport> {
    if n < 2 {
        return Err(Error::Validation("order must be at least two".into()));
    }
    if n > 6 {
        return Err(Error::CapExceeded {
            what: "vertices",
            limit: 6,
            actual: n,
        });
    }
    let caps = SolverCaps {
        max_vertices: n,
        max_edges: n * (n - 1) / 2,
    };
    let catalog = all_connected_graphs(n)?;
    let mut rows = Vec::new();
    let mut violations = Vec::new();
    for entry in &catalog.entries {
        let g = &entry.graph;
        let vcfc = exact::exact_vcfc(g, caps)?.value;
        let cfc = exact::exact_cfc(g, caps)?.value;
        let mut deletions = 0usize;
        let mut min_vcfc_after = usize::MAX;
        let mut min_cfc_after = usize::MAX;
        let mut pass = true;
        for (u, v) in g.edges() {
            if samples.is_some_and(|s| deletions >= s) {
                break;
            }
            let h = g.without_edge(u, v)?;
            if !graph::is_connected(&h) {
                continue;
            }
            deletions += 1;
            let hv = exact::exact_vcfc(&h, caps)?.value;
            let hc = exact::exact_cfc(&h, caps)?.value;
            min_vcfc_after = min_vcfc_after.min(hv);
            min_cfc_after = min_cfc_after.min(hc);
            if hv < vcfc || hc < cfc {
                pass = false;
                violations.push(Violation {
                    key: entry.key.clone(),
                    graph: h.clone(),
                    observed: format!(
                        "after deleting ({u}, {v}): vcfc {vcfc}->{hv}, cfc {cfc}->{hc}"
                    ),
                    bound: "spanning subgraphs never decrease either number".into(),
                });
            }
        }
        let fmt_min = |m: usize| {
            if m == usize::MAX {
                "-".to_string()
            } else {
                m.to_string()
            }
        };
        rows.push(ReportRow {
            key: entry.key.clone(),
            order: n,
            values: vec![
                vcfc.to_string(),
                cfc.to_string(),
                deletions.to_string(),
                fmt_min(min_vcfc_after),
                fmt_min(min_cfc_after),
            ],
            bound: format!("vcfc>={vcfc} cfc>={cfc}"),
            pass,
        });
    }
    Ok(SearchReport {
        claim: "mono",
        order: n,
        columns: vec!["vcfc", "cfc", "deletions", "min_vcfc_del", "min_cfc_del"],
        rows,
        violations,
        extremal: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{path_graph, star_graph};

    #[test]
    fn tree_keys_distinguish_small_shapes() {
        let p4 = tree_canonical_key(&path_graph(4).unwrap()).unwrap();
        let s4 = tree_canonical_key(&star_graph(4).unwrap()).unwrap();
        assert_ne!(p4, s4);
        // a relabeled path still maps to the same class
        let relabeled = Graph::from_edges(4, &[(2, 0), (0, 3), (3, 1)]).unwrap();
        assert_eq!(tree_canonical_key(&relabeled).unwrap(), p4);
    }

    #[test]
    fn tree_key_round_trips() {
        for n in 1..=8 {
            for entry in all_trees(n).unwrap().entries {
                assert_eq!(tree_canonical_key(&entry.graph).unwrap(), entry.key);
            }
        }
    }

    #[test]
    fn small_tree_censuses() {
        assert_eq!(all_trees(1).unwrap().len(), 1);
        assert_eq!(all_trees(4).unwrap().len(), 2);
        assert_eq!(all_trees(7).unwrap().len(), 11);
        assert!(all_trees(0).is_err());
        assert!(all_trees(11).is_err());
    }

    #[test]
    fn catalog_members_are_trees_or_connected() {
        for entry in all_trees(7).unwrap().entries {
            assert!(graph::is_tree(&entry.graph));
        }
        for entry in all_connected_graphs(5).unwrap().entries {
            assert!(graph::is_connected(&entry.graph));
        }
    }

    #[test]
    fn small_graph_censuses() {
        assert_eq!(all_connected_graphs(3).unwrap().len(), 2);
        assert_eq!(all_connected_graphs(4).unwrap().len(), 6);
        assert_eq!(all_connected_graphs(5).unwrap().len(), 21);
        assert!(all_connected_graphs(8).is_err());
    }

    #[test]
    fn graph_key_round_trips() {
        for entry in all_connected_graphs(5).unwrap().entries {
            assert_eq!(graph_canonical_key(&entry.graph).unwrap(), entry.key);
            assert_eq!(graph_from_canonical_key(&entry.key).unwrap(), entry.graph);
        }
    }

    #[test]
    fn graph_key_is_isomorphism_invariant() {
        let a = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let b = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(
            graph_canonical_key(&a).unwrap(),
            graph_canonical_key(&b).unwrap()
        );
    }

    #[test]
    fn characterization_sweep_is_clean_at_small_orders() {
        for n in 3..=4 {
            let report = check_vcfc_two_characterization(n).unwrap();
            assert_eq!(report.violations.len(), 0);
            assert_eq!(report.checked(), if n == 3 { 2 } else { 6 });
        }
        assert!(check_vcfc_two_characterization(2).is_err());
        assert!(check_vcfc_two_characterization(7).is_err());
    }

    #[test]
    fn coloring_bound_sweep_is_clean() {
        let report = check_tree_coloring_bound(7).unwrap();
        assert_eq!(report.checked(), 11);
        assert_eq!(report.violations.len(), 0);
    }

    #[test]
    fn cfc_bound_sweep_reports_extremes() {
        let report = check_cfc_lower_bound(4).unwrap();
        assert_eq!(report.checked(), 2);
        assert_eq!(report.violations.len(), 0);
        // the path attains the minimum 2, the star the maximum 3
        let min: Vec<_> = report
            .extremal
            .iter()
            .filter(|e| e.kind == ExtremalKind::Min)
            .collect();
        assert_eq!(min.len(), 1);
        assert_eq!(min[0].value, 2);
        let max: Vec<_> = report
            .extremal
            .iter()
            .filter(|e| e.kind == ExtremalKind::Max)
            .collect();
        assert_eq!(max[0].value, 3);
    }

    #[test]
    fn monotonicity_sweep_is_clean_at_order_four() {
        let report = check_deletion_monotonicity(4, None).unwrap();
        assert_eq!(report.checked(), 6);
        assert_eq!(report.violations.len(), 0);
        // sampling caps the deletions per class
        let sampled = check_deletion_monotonicity(4, Some(1)).unwrap();
        for row in &sampled.rows {
            assert!(row.values[2].parse::<usize>().unwrap() <= 1);
        }
    }

    #[test]
    fn reports_are_deterministic_and_well_formed() {
        let a = check_cfc_lower_bound(5).unwrap().to_tsv();
        let b = check_cfc_lower_bound(5).unwrap().to_tsv();
        assert_eq!(a, b);
        let mut lines = a.lines();
        assert_eq!(lines.next().unwrap(), "key\tn\tcfc\tbound\tpass");
        assert!(a.contains("checked=3 violations=0"));
    }
}
