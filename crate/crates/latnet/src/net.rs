//! Network data model and construction: edge-list parsing/serialization,
//! seeded Erdős–Rényi generation, degree-preserving rewiring and the
//! undirected projection.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, HashSet};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum NetError {
    #[error("line {line}: expected two whitespace-separated tokens, got {found}")]
    Malformed { line: usize, found: usize },
    #[error("line {line}: self-loop {node:?} not allowed in a simple network")]
    SelfLoop { line: usize, node: String },
    #[error("line {line}: duplicate arc {from:?} -> {to:?} in a simple network")]
    DuplicateArc {
        line: usize,
        from: String,
        to: String,
    },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

/// Seed for every randomized operation. Identical seed + identical inputs
/// give bit-identical outputs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngSeed(pub u64);

impl RngSeed {
    /// A generator reproducibly determined by this seed.
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }

    /// Derive an independent child seed from a pair of indices (e.g. a grid
    /// cell). Stable splitting rule: two rounds of splitmix64 over the
    /// mixed-in words.
    pub fn child(self, a: u64, b: u64) -> RngSeed {
        let mut x = self.0 ^ splitmix64(a.wrapping_add(0x9e3779b97f4a7c15));
        x = splitmix64(x).wrapping_add(splitmix64(b ^ 0xd1b54a32d192ed03));
        RngSeed(splitmix64(x))
    }
}

fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// A finite directed multigraph with stable arc identities.
///
/// Nodes carry string names (dataset ids) but are addressed by dense index;
/// an arc is a `(source, target)` index pair and its id is its position in
/// `arcs`. Read-only operations never renumber arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DirectedNetwork {
    nodes: Vec<String>,
    arcs: Vec<(usize, usize)>,
    simple: bool,
}

impl DirectedNetwork {
    /// Build from explicit parts. Validates index bounds; when
    /// `require_simple` is set, self-loops and duplicate arcs are errors.
    /// Either way, the stored simplicity flag reflects the actual arcs.
    pub fn new(
        nodes: Vec<String>,
        arcs: Vec<(usize, usize)>,
        require_simple: bool,
    ) -> Result<Self, NetError> {
        let n = nodes.len();
        let mut names = HashSet::new();
        for name in &nodes {
            if !names.insert(name) {
                return Err(NetError::InvalidArgument(format!(
                    "duplicate node name {name:?}"
                )));
            }
        }
        let mut seen = HashSet::new();
        let mut simple = true;
        for (i, &(s, t)) in arcs.iter().enumerate() {
            if s >= n || t >= n {
                return Err(NetError::InvalidArgument(format!(
                    "arc {i} references a node index out of range"
                )));
            }
            if s == t {
                if require_simple {
                    return Err(NetError::SelfLoop {
                        line: i + 1,
                        node: nodes[s].clone(),
                    });
                }
                simple = false;
            }
            if !seen.insert((s, t)) {
                if require_simple {
                    return Err(NetError::DuplicateArc {
                        line: i + 1,
                        from: nodes[s].clone(),
                        to: nodes[t].clone(),
                    });
                }
                simple = false;
            }
        }
        Ok(DirectedNetwork {
            nodes,
            arcs,
            simple,
        })
    }

    /// Convenience constructor from arcs over node names.
    pub fn from_named_arcs(arcs: &[(&str, &str)], simple: bool) -> Result<Self, NetError> {
        let mut nodes: Vec<String> = Vec::new();
        let mut index: HashMap<String, usize> = HashMap::new();
        let mut out = Vec::with_capacity(arcs.len());
        for &(s, t) in arcs {
            let si = *index.entry(s.to_string()).or_insert_with(|| {
                nodes.push(s.to_string());
                nodes.len() - 1
            });
            let ti = *index.entry(t.to_string()).or_insert_with(|| {
                nodes.push(t.to_string());
                nodes.len() - 1
            });
            out.push((si, ti));
        }
        DirectedNetwork::new(nodes, out, simple)
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn node_name(&self, i: usize) -> &str {
        &self.nodes[i]
    }

    pub fn node_names(&self) -> &[String] {
        &self.nodes
    }

    pub fn node_index(&self, name: &str) -> Option<usize> {
        self.nodes.iter().position(|n| n == name)
    }

    /// Arcs as `(source, target)` index pairs; the arc id is the slice index.
    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn source(&self, arc: usize) -> usize {
        self.arcs[arc].0
    }

    pub fn target(&self, arc: usize) -> usize {
        self.arcs[arc].1
    }

    pub fn is_simple(&self) -> bool {
        self.simple
    }

    /// Out-neighbour arc lists indexed by node: `out[v]` = arcs with source v.
    pub fn arcs_by_source(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.nodes.len()];
        for (id, &(s, _)) in self.arcs.iter().enumerate() {
            out[s].push(id);
        }
        out
    }

    /// Arcs with target v, indexed by node.
    pub fn arcs_by_target(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.nodes.len()];
        for (id, &(_, t)) in self.arcs.iter().enumerate() {
            inc[t].push(id);
        }
        inc
    }

    pub fn out_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes.len()];
        for &(s, _) in &self.arcs {
            d[s] += 1;
        }
        d
    }

    pub fn in_degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes.len()];
        for &(_, t) in &self.arcs {
            d[t] += 1;
        }
        d
    }

    /// Serialize in the edge-list format: one `source target` line per arc,
    /// in arc-id order. `parse_edge_list` reads this back exactly.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for &(s, t) in &self.arcs {
            out.push_str(&self.nodes[s]);
            out.push(' ');
            out.push_str(&self.nodes[t]);
            out.push('\n');
        }
        out
    }

    /// Remove the named nodes and every incident arc (dataset preprocessing
    /// hook). Unknown names are ignored. Remaining arcs keep their relative
    /// order but are re-indexed.
    pub fn exclude_nodes(&self, names: &[String]) -> DirectedNetwork {
        let drop: HashSet<&str> = names.iter().map(|s| s.as_str()).collect();
        let mut keep_index = vec![usize::MAX; self.nodes.len()];
        let mut nodes = Vec::new();
        for (i, name) in self.nodes.iter().enumerate() {
            if !drop.contains(name.as_str()) {
                keep_index[i] = nodes.len();
                nodes.push(name.clone());
            }
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(s, t)| keep_index[s] != usize::MAX && keep_index[t] != usize::MAX)
            .map(|&(s, t)| (keep_index[s], keep_index[t]))
            .collect();
        DirectedNetwork {
            nodes,
            arcs,
            simple: self.simple,
        }
    }
}

/// Parse whitespace-separated `source target` lines. `#` starts a comment
/// line; blank lines are skipped. Node ids are arbitrary strings, mapped to
/// dense indices in order of first appearance.
pub fn parse_edge_list(text: &str, require_simple: bool) -> Result<DirectedNetwork, NetError> {
    let mut nodes: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut arcs: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = lineno + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(NetError::Malformed {
                line,
                found: tokens.len(),
            });
        }
        let mut idx = |tok: &str| -> usize {
            if let Some(&i) = index.get(tok) {
                i
            } else {
                let i = nodes.len();
                nodes.push(tok.to_string());
                index.insert(tok.to_string(), i);
                i
            }
        };
        let s = idx(tokens[0]);
        let t = idx(tokens[1]);
        if require_simple {
            if s == t {
                return Err(NetError::SelfLoop {
                    line,
                    node: tokens[0].to_string(),
                });
            }
            if !seen.insert((s, t)) {
                return Err(NetError::DuplicateArc {
                    line,
                    from: tokens[0].to_string(),
                    to: tokens[1].to_string(),
                });
            }
        }
        arcs.push((s, t));
    }
    DirectedNetwork::new(nodes, arcs, require_simple)
}

/// Seeded Erdős–Rényi digraph: each of the n(n−1) ordered non-diagonal node
/// pairs becomes an arc independently with probability `p`. Nodes are named
/// "0".."n-1".
pub fn random_er(n: usize, p: f64, seed: RngSeed) -> Result<DirectedNetwork, NetError> {
    if n < 1 {
        return Err(NetError::InvalidArgument("n must be >= 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(NetError::InvalidArgument("p must lie in [0, 1]".into()));
    }
    let mut rng = seed.rng();
    let nodes: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut arcs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen::<f64>() < p {
                arcs.push((i, j));
            }
        }
    }
    Ok(DirectedNetwork {
        nodes,
        arcs,
        simple: true,
    })
}

/// Result of [`rewire_preserving_degrees`]. `exhausted` is set when the
/// retry budget ran out before reaching the requested number of swaps; the
/// network then carries only the swaps accepted so far (possibly none).
#[derive(Debug, Clone)]
pub struct Rewired {
    pub network: DirectedNetwork,
    pub accepted_swaps: usize,
    pub exhausted: bool,
}

/// Number of accepted swaps that counts as "randomized" when no explicit
/// count is given: a standard mixing heuristic of 10·|A|.
pub fn default_rewire_swaps(g: &DirectedNetwork) -> usize {
    10 * g.arc_count()
}

/// Degree-preserving randomization: repeatedly pick two distinct arcs
/// a→b, c→d and swap their targets to a→d, c→b. Proposals that would
/// create a self-loop or a duplicate arc are rejected and re-drawn, up to
/// 100·|A| rejections per requested swap. In- and out-degree multisets are
/// preserved exactly.
pub fn rewire_preserving_degrees(
    g: &DirectedNetwork,
    swaps: usize,
    seed: RngSeed,
) -> Result<Rewired, NetError> {
    if !g.is_simple() {
        return Err(NetError::InvalidArgument(
            "rewiring requires a simple network".into(),
        ));
    }
    let mut arcs = g.arcs().to_vec();
    let m = arcs.len();
    if m < 2 {
        return Ok(Rewired {
            network: g.clone(),
            accepted_swaps: 0,
            exhausted: swaps > 0,
        });
    }
    let mut present: HashSet<(usize, usize)> = arcs.iter().copied().collect();
    let mut rng = seed.rng();
    let budget_per_swap = 100 * m;
    let mut accepted = 0usize;
    'outer: while accepted < swaps {
        let mut rejected = 0usize;
        loop {
            let i = rng.gen_range(0..m);
            let j = rng.gen_range(0..m);
            let (a, b) = arcs[i];
            let (c, d) = arcs[j];
            let ok = i != j
                && a != d
                && c != b
                && b != d
                && !present.contains(&(a, d))
                && !present.contains(&(c, b));
            if ok {
                present.remove(&(a, b));
                present.remove(&(c, d));
                present.insert((a, d));
                present.insert((c, b));
                arcs[i] = (a, d);
                arcs[j] = (c, b);
                accepted += 1;
                break;
            }
            rejected += 1;
            if rejected >= budget_per_swap {
                break 'outer;
            }
        }
    }
    Ok(Rewired {
        network: DirectedNetwork {
            nodes: g.node_names().to_vec(),
            arcs,
            simple: true,
        },
        accepted_swaps: accepted,
        exhausted: accepted < swaps,
    })
}

/// Simple undirected graph: unordered node pairs, no self-pairs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct UndirectedNetwork {
    nodes: Vec<String>,
    edges: Vec<(usize, usize)>,
}

impl UndirectedNetwork {
    pub fn new(nodes: Vec<String>, mut edges: Vec<(usize, usize)>) -> Result<Self, NetError> {
        let n = nodes.len();
        for e in edges.iter_mut() {
            if e.0 >= n || e.1 >= n {
                return Err(NetError::InvalidArgument(
                    "edge references a node index out of range".into(),
                ));
            }
            if e.0 == e.1 {
                return Err(NetError::InvalidArgument("self-pair edge".into()));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(UndirectedNetwork { nodes, edges })
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn node_names(&self) -> &[String] {
        &self.nodes
    }

    /// Edges as `(u, v)` with u < v, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.nodes.len()];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.nodes.len()];
        for &(u, v) in &self.edges {
            d[u] += 1;
            d[v] += 1;
        }
        d
    }
}

/// Forget arc direction: edge {u,v} iff u→v or v→u is an arc and u ≠ v.
/// Antiparallel pairs collapse; self-loops are dropped.
pub fn undirected_projection(g: &DirectedNetwork) -> UndirectedNetwork {
    let edges = g
        .arcs()
        .iter()
        .filter(|&&(s, t)| s != t)
        .map(|&(s, t)| if s < t { (s, t) } else { (t, s) })
        .collect();
    UndirectedNetwork::new(g.node_names().to_vec(), edges).expect("projection is always valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_basic() {
        let g = parse_edge_list("0 1\n1 2", true).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.arc_count(), 2);
        assert_eq!(g.arcs(), &[(0, 1), (1, 2)]);
    }

    #[test]
    fn parse_comments_and_blanks() {
        let g = parse_edge_list("# header\n\na b\n  # another\nb c\n", true).unwrap();
        assert_eq!(g.node_count(), 3);
        assert_eq!(g.arc_count(), 2);
        assert_eq!(g.node_name(0), "a");
    }

    #[test]
    fn parse_malformed_line_number() {
        let err = parse_edge_list("0 1\n0 1 2", false).unwrap_err();
        match err {
            NetError::Malformed { line, found } => {
                assert_eq!(line, 2);
                assert_eq!(found, 3);
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn parse_self_loop_rejected_when_simple() {
        let err = parse_edge_list("0 0", true).unwrap_err();
        assert!(matches!(err, NetError::SelfLoop { line: 1, .. }));
        // Allowed as a multigraph.
        let g = parse_edge_list("0 0", false).unwrap();
        assert_eq!(g.arc_count(), 1);
    }

    #[test]
    fn parse_duplicate_rejected_when_simple() {
        let err = parse_edge_list("0 1\n0 1", true).unwrap_err();
        assert!(matches!(err, NetError::DuplicateArc { line: 2, .. }));
    }

    #[test]
    fn roundtrip_serialization() {
        let g = random_er(20, 0.2, RngSeed(7)).unwrap();
        let back = parse_edge_list(&g.to_edge_list(), true).unwrap();
        assert_eq!(back.arc_count(), g.arc_count());
        // Node naming may reorder indices; compare arcs by name.
        let named = |net: &DirectedNetwork| -> Vec<(String, String)> {
            let mut v: Vec<_> = net
                .arcs()
                .iter()
                .map(|&(s, t)| (net.node_name(s).to_string(), net.node_name(t).to_string()))
                .collect();
            v.sort();
            v
        };
        assert_eq!(named(&g), named(&back));
    }

    #[test]
    fn er_extremes() {
        let empty = random_er(5, 0.0, RngSeed(1)).unwrap();
        assert_eq!(empty.arc_count(), 0);
        let full = random_er(5, 1.0, RngSeed(1)).unwrap();
        assert_eq!(full.arc_count(), 5 * 4);
        assert!(full.is_simple());
    }

    #[test]
    fn er_reproducible_and_mean_arc_count() {
        let a = random_er(50, 0.1, RngSeed(99)).unwrap();
        let b = random_er(50, 0.1, RngSeed(99)).unwrap();
        assert_eq!(a, b);

        // Mean arc count over 1000 draws should sit within 3 standard errors
        // of n(n-1)p = 245.
        let n = 50;
        let p = 0.1;
        let draws = 1000;
        let total: usize = (0..draws)
            .map(|i| random_er(n, p, RngSeed(1000 + i as u64)).unwrap().arc_count())
            .sum();
        let mean = total as f64 / draws as f64;
        let pairs = (n * (n - 1)) as f64;
        let se = (pairs * p * (1.0 - p) / draws as f64).sqrt();
        assert!(
            (mean - pairs * p).abs() < 3.0 * se,
            "mean {mean} too far from {}",
            pairs * p
        );
    }

    #[test]
    fn rewire_two_arcs_only_legal_swap() {
        let g = DirectedNetwork::from_named_arcs(&[("a", "b"), ("c", "d")], true).unwrap();
        let r = rewire_preserving_degrees(&g, 1, RngSeed(3)).unwrap();
        assert_eq!(r.accepted_swaps, 1);
        assert!(!r.exhausted);
        let arcs: HashSet<(usize, usize)> = r.network.arcs().iter().copied().collect();
        let ad = (g.node_index("a").unwrap(), g.node_index("d").unwrap());
        let cb = (g.node_index("c").unwrap(), g.node_index("b").unwrap());
        assert_eq!(arcs, HashSet::from([ad, cb]));
    }

    #[test]
    fn rewire_zero_swaps_identity() {
        let g = random_er(10, 0.3, RngSeed(5)).unwrap();
        let r = rewire_preserving_degrees(&g, 0, RngSeed(5)).unwrap();
        assert_eq!(r.network, g);
    }

    #[test]
    fn rewire_preserves_degree_multisets() {
        let g = random_er(50, 0.1, RngSeed(11)).unwrap();
        let r = rewire_preserving_degrees(&g, 1000, RngSeed(12)).unwrap();
        assert_eq!(r.network.out_degrees(), g.out_degrees());
        assert_eq!(r.network.in_degrees(), g.in_degrees());
        assert!(r.network.is_simple());
        // Sanity: the rewiring actually moved arcs.
        assert_ne!(r.network.arcs(), g.arcs());
    }

    #[test]
    fn rewire_impossible_sets_flag() {
        // A single arc (or a 2-cycle) admits no legal swap.
        let g = DirectedNetwork::from_named_arcs(&[("a", "b"), ("b", "a")], true).unwrap();
        let r = rewire_preserving_degrees(&g, 5, RngSeed(0)).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.network, g);
    }

    #[test]
    fn projection_collapses_antiparallel() {
        let g = DirectedNetwork::from_named_arcs(&[("a", "b"), ("b", "a")], true).unwrap();
        let u = undirected_projection(&g);
        assert_eq!(u.edge_count(), 1);
    }

    #[test]
    fn projection_drops_self_loops() {
        let g = DirectedNetwork::from_named_arcs(&[("a", "a"), ("a", "b")], false).unwrap();
        let u = undirected_projection(&g);
        assert_eq!(u.edge_count(), 1);
    }

    #[test]
    fn exclude_nodes_removes_incident_arcs() {
        let g =
            DirectedNetwork::from_named_arcs(&[("a", "b"), ("b", "c"), ("c", "a")], true).unwrap();
        let h = g.exclude_nodes(&["b".to_string()]);
        assert_eq!(h.node_count(), 2);
        assert_eq!(h.arc_count(), 1);
        assert_eq!(h.node_name(h.source(0)), "c");
        assert_eq!(h.node_name(h.target(0)), "a");
    }

    #[test]
    fn child_seeds_differ() {
        let s = RngSeed(42);
        assert_ne!(s.child(0, 0), s.child(0, 1));
        assert_ne!(s.child(0, 0), s.child(1, 0));
        assert_eq!(s.child(3, 4), s.child(3, 4));
    }
}
