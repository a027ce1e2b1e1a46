//! Geometry on the arc set: the line-graph transform R, its left adjoint L,
//! directed and lateral geodesic metrics between arcs, betweenness
//! centralities (DBC/LBC) and efficiencies.
//!
//! Two distinct arcs are *directed-adjacent* when they compose head-to-tail
//! and *lateral-adjacent* when they share a source or share a target.
//! Shortest paths in the lateral adjacency graph realize alternating arc
//! sequences (same-type adjacency is transitive), so plain BFS gives the
//! lateral geodesic distance.

use crate::dsu::Dsu;
use crate::net::DirectedNetwork;
use crate::par;
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum ArcPathError {
    #[error("efficiency needs at least 2 arcs, got {0}")]
    TooFewArcs(usize),
}

pub const INF: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MetricKind {
    Directed,
    Lateral,
}

/// Geodesic structure on the arc set of a network: pairwise distances and
/// exact geodesic counts, plus the adjacency lists they were computed from.
pub struct ArcMetricSpace {
    kind: MetricKind,
    n: usize,
    adjacency: Vec<Vec<usize>>,
    dist: Vec<u32>,
    counts: Vec<BigUint>,
}

impl ArcMetricSpace {
    pub fn kind(&self) -> MetricKind {
        self.kind
    }

    pub fn arc_count(&self) -> usize {
        self.n
    }

    /// Geodesic distance, `None` when unreachable.
    pub fn distance(&self, f: usize, g: usize) -> Option<u32> {
        let d = self.dist[f * self.n + g];
        (d != INF).then_some(d)
    }

    /// Number of geodesics from f to g (0 when unreachable, 1 on the diagonal).
    pub fn count(&self, f: usize, g: usize) -> &BigUint {
        &self.counts[f * self.n + g]
    }

    pub fn adjacency(&self) -> &[Vec<usize>] {
        &self.adjacency
    }

    /// Σ over ordered pairs (g,h), g ≠ h, finite distance, of (dist+1):
    /// the centrality normalizer.
    pub fn pair_normalizer(&self) -> u64 {
        let mut total = 0u64;
        for f in 0..self.n {
            for g in 0..self.n {
                if f != g {
                    let d = self.dist[f * self.n + g];
                    if d != INF {
                        total += d as u64 + 1;
                    }
                }
            }
        }
        total
    }

    /// Distance table as CSV (`from,to,distance` with empty distance for
    /// unreachable pairs); debugging aid.
    pub fn distances_to_csv(&self) -> String {
        let mut out = String::from("from,to,distance,geodesics\n");
        for f in 0..self.n {
            for g in 0..self.n {
                let d = self.dist[f * self.n + g];
                if d == INF {
                    out.push_str(&format!("{f},{g},,0\n"));
                } else {
                    out.push_str(&format!("{f},{g},{d},{}\n", self.counts[f * self.n + g]));
                }
            }
        }
        out
    }
}

/// Line graph R(G): one node per arc of g, one arc per composable pair
/// (f,g) with target(f) = source(g).
pub fn r_transform(g: &DirectedNetwork) -> DirectedNetwork {
    let nodes: Vec<String> = (0..g.arc_count()).map(|i| i.to_string()).collect();
    let by_source = g.arcs_by_source();
    let mut arcs = Vec::new();
    for f in 0..g.arc_count() {
        for &h in &by_source[g.target(f)] {
            arcs.push((f, h));
        }
    }
    DirectedNetwork::new(nodes, arcs, false).expect("line graph construction is valid")
}

/// The transform L: arcs of the result are the nodes of g; nodes of the
/// result are classes of N×{0,1} under the relation generated by
/// (x,1) ~ (y,0) for each arc x→y. The result-arc for node x runs
/// [(x,0)] → [(x,1)].
pub fn l_transform(g: &DirectedNetwork) -> DirectedNetwork {
    let n = g.node_count();
    let mut dsu = Dsu::new(2 * n);
    for &(x, y) in g.arcs() {
        // slot 2x+1 is (x,1); slot 2y is (y,0)
        dsu.union(2 * x + 1, 2 * y);
    }
    let (class, n_classes) = dsu.classes();
    let nodes: Vec<String> = (0..n_classes).map(|i| format!("c{i}")).collect();
    let arcs: Vec<(usize, usize)> = (0..n).map(|x| (class[2 * x], class[2 * x + 1])).collect();
    DirectedNetwork::new(nodes, arcs, false).expect("quotient construction is valid")
}

/// Directed arc adjacency: f → h iff target(f) = source(h), f ≠ h.
pub fn directed_arc_adjacency(g: &DirectedNetwork) -> Vec<Vec<usize>> {
    let by_source = g.arcs_by_source();
    (0..g.arc_count())
        .map(|f| {
            by_source[g.target(f)]
                .iter()
                .copied()
                .filter(|&h| h != f)
                .collect()
        })
        .collect()
}

/// Lateral arc adjacency: f — h iff they share a source or share a target,
/// f ≠ h. Symmetric; parallel arcs are adjacent once.
pub fn lateral_arc_adjacency(g: &DirectedNetwork) -> Vec<Vec<usize>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); g.arc_count()];
    for group in g.arcs_by_source().iter().chain(g.arcs_by_target().iter()) {
        for (i, &f) in group.iter().enumerate() {
            for &h in &group[i + 1..] {
                if f != h {
                    adj[f].push(h);
                    adj[h].push(f);
                }
            }
        }
    }
    for row in &mut adj {
        row.sort_unstable();
        row.dedup();
    }
    adj
}

fn bfs_with_counts(adj: &[Vec<usize>], s: usize) -> (Vec<u32>, Vec<BigUint>) {
    let n = adj.len();
    let mut dist = vec![INF; n];
    let mut count = vec![BigUint::zero(); n];
    dist[s] = 0;
    count[s] = BigUint::from(1u32);
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == INF {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                let add = count[v].clone();
                count[w] += add;
            }
        }
    }
    (dist, count)
}

fn metric_from_adjacency(kind: MetricKind, adjacency: Vec<Vec<usize>>) -> ArcMetricSpace {
    let n = adjacency.len();
    let rows = par::map_range(n, |s| bfs_with_counts(&adjacency, s));
    let mut dist = Vec::with_capacity(n * n);
    let mut counts = Vec::with_capacity(n * n);
    for (d, c) in rows {
        dist.extend(d);
        counts.extend(c);
    }
    ArcMetricSpace {
        kind,
        n,
        adjacency,
        dist,
        counts,
    }
}

/// Geodesic distances/counts in the lateral adjacency graph.
pub fn lateral_metric(g: &DirectedNetwork) -> ArcMetricSpace {
    metric_from_adjacency(MetricKind::Lateral, lateral_arc_adjacency(g))
}

/// Geodesic distances/counts in the line graph (directed arc paths).
pub fn directed_metric(g: &DirectedNetwork) -> ArcMetricSpace {
    metric_from_adjacency(MetricKind::Directed, directed_arc_adjacency(g))
}

fn bfs_distances(adj: &[Vec<usize>], s: usize) -> Vec<u32> {
    let n = adj.len();
    let mut dist = vec![INF; n];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == INF {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn mean_reciprocal_distance(adj: &[Vec<usize>]) -> Result<f64, ArcPathError> {
    let n = adj.len();
    if n < 2 {
        return Err(ArcPathError::TooFewArcs(n));
    }
    // Sequential on purpose: callers (the evolution loop) already
    // parallelize across runs, and a single sweep is tiny.
    let mut total = 0.0;
    for s in 0..n {
        for (t, &d) in bfs_distances(adj, s).iter().enumerate() {
            if t != s && d != INF {
                total += 1.0 / d as f64;
            }
        }
    }
    Ok(total / (n * (n - 1)) as f64)
}

/// Eff_D without building the full metric tables.
pub fn directed_efficiency(g: &DirectedNetwork) -> Result<f64, ArcPathError> {
    mean_reciprocal_distance(&directed_arc_adjacency(g))
}

/// Eff_L without building the full metric tables.
pub fn lateral_efficiency(g: &DirectedNetwork) -> Result<f64, ArcPathError> {
    mean_reciprocal_distance(&lateral_arc_adjacency(g))
}

/// Mean reciprocal geodesic distance over ordered distinct arc pairs,
/// with 1/∞ = 0.
pub fn efficiency(metric: &ArcMetricSpace) -> Result<f64, ArcPathError> {
    let n = metric.n;
    if n < 2 {
        return Err(ArcPathError::TooFewArcs(n));
    }
    let mut total = 0.0;
    for f in 0..n {
        for g in 0..n {
            if f != g {
                let d = metric.dist[f * n + g];
                if d != INF {
                    total += 1.0 / d as f64;
                }
            }
        }
    }
    Ok(total / (n * (n - 1)) as f64)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralityKind {
    Lbc,
    Dbc,
}

/// Per-arc betweenness values. `exact` holds the rational values before
/// conversion to f64; they sum to exactly 1 whenever `normalizer > 0`.
pub struct CentralityReport {
    pub kind: CentralityKind,
    pub values: Vec<f64>,
    pub exact: Vec<BigRational>,
    pub normalizer: u64,
    /// Set when no ordered pair has finite positive distance; all values 0.
    pub zero_normalizer: bool,
}

impl CentralityReport {
    /// CSV rows `arc_id,source,target,value` (node names from `g`).
    pub fn to_csv(&self, g: &DirectedNetwork) -> String {
        let mut out = String::from("arc_id,source,target,value\n");
        for (id, &(s, t)) in g.arcs().iter().enumerate() {
            out.push_str(&format!(
                "{id},{},{},{}\n",
                g.node_name(s),
                g.node_name(t),
                self.values[id]
            ));
        }
        out
    }
}

/// One Brandes sweep from source `s`: endpoint-inclusive geodesic
/// through-counts Σ_{t} σ_sv·σ_vt/σ_st for every v, as exact rationals.
fn brandes_sweep(adj: &[Vec<usize>], s: usize) -> Vec<BigRational> {
    let n = adj.len();
    let mut dist = vec![INF; n];
    let mut sigma = vec![BigUint::zero(); n];
    let mut preds: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    dist[s] = 0;
    sigma[s] = BigUint::from(1u32);
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &adj[v] {
            if dist[w] == INF {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
            if dist[w] == dist[v] + 1 {
                let add = sigma[v].clone();
                sigma[w] += add;
                preds[w].push(v);
            }
        }
    }
    // Standard dependency accumulation (interior vertices only), then add
    // the endpoint contributions: each ordered pair (s,t) also passes
    // through s and through t.
    let zero = BigRational::zero();
    let one = BigRational::from_integer(1.into());
    let mut delta = vec![zero.clone(); n];
    let mut contrib = vec![zero; n];
    let mut reachable = 0u64;
    for &w in order.iter().rev() {
        if w != s {
            reachable += 1;
            let coeff = (&one + &delta[w])
                / BigRational::from_integer(num_bigint::BigInt::from(sigma[w].clone()));
            for &v in &preds[w] {
                let inc =
                    &coeff * BigRational::from_integer(num_bigint::BigInt::from(sigma[v].clone()));
                delta[v] += inc;
            }
            contrib[w] = delta[w].clone() + &one; // interior + endpoint as t
        }
    }
    contrib[s] = BigRational::from_integer(reachable.into());
    contrib
}

fn betweenness_impl(metric: &ArcMetricSpace, parallel: bool) -> CentralityReport {
    let n = metric.n;
    let kind = match metric.kind {
        MetricKind::Lateral => CentralityKind::Lbc,
        MetricKind::Directed => CentralityKind::Dbc,
    };
    let normalizer = metric.pair_normalizer();
    if normalizer == 0 {
        return CentralityReport {
            kind,
            values: vec![0.0; n],
            exact: vec![BigRational::zero(); n],
            normalizer,
            zero_normalizer: true,
        };
    }
    let adj = &metric.adjacency;
    let sweeps = if parallel {
        par::map_range(n, |s| brandes_sweep(adj, s))
    } else {
        par::map_range_seq(n, |s| brandes_sweep(adj, s))
    };
    let mut through = vec![BigRational::zero(); n];
    for sweep in sweeps {
        for (v, x) in sweep.into_iter().enumerate() {
            through[v] += x;
        }
    }
    let norm = BigRational::from_integer(normalizer.into());
    let exact: Vec<BigRational> = through.into_iter().map(|x| x / &norm).collect();
    let values = exact
        .iter()
        .map(|x| x.to_f64().expect("centrality fits in f64"))
        .collect();
    CentralityReport {
        kind,
        values,
        exact,
        normalizer,
        zero_normalizer: false,
    }
}

/// Betweenness centrality of every arc of the metric space: the normalized
/// endpoint-inclusive fraction of geodesics through each arc. With the
/// lateral metric this is LBC, with the directed metric DBC. Values sum
/// to 1 exactly whenever some ordered pair is at finite positive distance.
pub fn betweenness(metric: &ArcMetricSpace) -> CentralityReport {
    betweenness_impl(metric, true)
}

/// Sequential variant of [`betweenness`]; same results. Exposed as the
/// baseline for the benchmark suite.
pub fn betweenness_seq(metric: &ArcMetricSpace) -> CentralityReport {
    betweenness_impl(metric, false)
}

/// Connected components of the lateral adjacency graph, as a partition of
/// arc ids. Blocks and their members are sorted ascending.
pub fn lateral_components(g: &DirectedNetwork) -> Vec<Vec<usize>> {
    let adj = lateral_arc_adjacency(g);
    let mut dsu = Dsu::new(g.arc_count());
    for (f, row) in adj.iter().enumerate() {
        for &h in row {
            dsu.union(f, h);
        }
    }
    let (class, n_classes) = dsu.classes();
    let mut blocks = vec![Vec::new(); n_classes];
    for (arc, &c) in class.iter().enumerate() {
        blocks[c].push(arc);
    }
    blocks.sort_by_key(|b| b[0]);
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::net::{random_er, DirectedNetwork, RngSeed};

    fn net(arcs: &[(&str, &str)]) -> DirectedNetwork {
        DirectedNetwork::from_named_arcs(arcs, false).unwrap()
    }

    fn ratio(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn r_transform_single_arc() {
        let r = r_transform(&net(&[("x", "y")]));
        assert_eq!(r.node_count(), 1);
        assert_eq!(r.arc_count(), 0);
    }

    #[test]
    fn r_transform_path() {
        let r = r_transform(&net(&[("a", "b"), ("b", "c")]));
        assert_eq!(r.node_count(), 2);
        assert_eq!(r.arc_count(), 1);
        assert_eq!(r.arcs(), &[(0, 1)]);
    }

    #[test]
    fn r_transform_triangle_is_triangle() {
        let r = r_transform(&net(&[("a", "b"), ("b", "c"), ("c", "a")]));
        assert_eq!(r.node_count(), 3);
        assert_eq!(r.arc_count(), 3);
        // Each arc composes with exactly one successor.
        let mut out = r.out_degrees();
        out.sort_unstable();
        assert_eq!(out, vec![1, 1, 1]);
    }

    #[test]
    fn double_r_counts_length_3_paths() {
        // Arcs of R(R(g)) correspond to directed paths of 3 arcs in g.
        let g = random_er(8, 0.3, RngSeed(21)).unwrap();
        let rr = r_transform(&r_transform(&g));
        let mut paths3 = 0usize;
        let by_source = g.arcs_by_source();
        for f in 0..g.arc_count() {
            for &h in &by_source[g.target(f)] {
                paths3 += by_source[g.target(h)].len();
            }
        }
        assert_eq!(rr.arc_count(), paths3);
    }

    #[test]
    fn l_transform_single_arc_is_two_arc_path() {
        let l = l_transform(&net(&[("x", "y")]));
        assert_eq!(l.node_count(), 3);
        assert_eq!(l.arc_count(), 2);
        // Arc for x ends where arc for y begins.
        assert_eq!(l.target(0), l.source(1));
    }

    #[test]
    fn l_transform_isolated_node() {
        let g = DirectedNetwork::new(vec!["x".into()], vec![], true).unwrap();
        let l = l_transform(&g);
        assert_eq!(l.node_count(), 2);
        assert_eq!(l.arc_count(), 1);
    }

    #[test]
    fn l_transform_shared_target_merges_classes() {
        let g = net(&[("a", "c"), ("b", "c")]);
        let l = l_transform(&g);
        assert_eq!(l.node_count(), 4);
        assert_eq!(l.arc_count(), 3);
        // Result-arc i corresponds to node i of g.
        let a = l.arcs()[g.node_index("a").unwrap()];
        let b = l.arcs()[g.node_index("b").unwrap()];
        let c = l.arcs()[g.node_index("c").unwrap()];
        assert_eq!(a.1, b.1, "arcs a and b share their target class");
        assert_eq!(a.1, c.0, "which is the source class of c");
    }

    #[test]
    fn lateral_fork_distance_one() {
        let m = lateral_metric(&net(&[("a", "b"), ("a", "c")]));
        assert_eq!(m.distance(0, 1), Some(1));
        assert_eq!(m.count(0, 1), &BigUint::from(1u32));
    }

    #[test]
    fn lateral_path_disconnected() {
        // Head-to-tail is not lateral adjacency.
        let m = lateral_metric(&net(&[("a", "b"), ("b", "c")]));
        assert_eq!(m.distance(0, 1), None);
    }

    #[test]
    fn lateral_n_graph() {
        // f: a→c, g: b→c, h: b→d. f—g share target, g—h share source.
        let m = lateral_metric(&net(&[("a", "c"), ("b", "c"), ("b", "d")]));
        assert_eq!(m.distance(0, 2), Some(2));
        assert_eq!(m.count(0, 2), &BigUint::from(1u32));
        assert_eq!(m.distance(2, 0), Some(2));
    }

    #[test]
    fn directed_path_distances() {
        let m = directed_metric(&net(&[("a", "b"), ("b", "c"), ("c", "d")]));
        assert_eq!(m.distance(0, 2), Some(2));
        assert_eq!(m.count(0, 2), &BigUint::from(1u32));
        assert_eq!(m.distance(2, 0), None);
    }

    #[test]
    fn directed_fork_disconnected() {
        let m = directed_metric(&net(&[("a", "b"), ("a", "c")]));
        assert_eq!(m.distance(0, 1), None);
        assert_eq!(m.distance(1, 0), None);
    }

    #[test]
    fn directed_parallel_routes() {
        // a→b→d and a→c→d.
        let g = net(&[("a", "b"), ("b", "d"), ("a", "c"), ("c", "d")]);
        let m = directed_metric(&g);
        assert_eq!(m.distance(0, 1), Some(1));
        assert_eq!(m.distance(0, 3), None, "first arcs of different routes");
    }

    #[test]
    fn lbc_n_graph_frozen_values() {
        let g = net(&[("a", "c"), ("b", "c"), ("b", "d")]);
        let report = betweenness(&lateral_metric(&g));
        assert_eq!(report.kind, CentralityKind::Lbc);
        assert_eq!(report.normalizer, 14);
        assert_eq!(report.exact, vec![ratio(2, 7), ratio(3, 7), ratio(2, 7)]);
    }

    #[test]
    fn dbc_path_frozen_values() {
        let g = net(&[("a", "b"), ("b", "c"), ("c", "d")]);
        let report = betweenness(&directed_metric(&g));
        assert_eq!(report.kind, CentralityKind::Dbc);
        assert_eq!(report.normalizer, 7);
        assert_eq!(report.exact, vec![ratio(2, 7), ratio(3, 7), ratio(2, 7)]);
    }

    #[test]
    fn betweenness_zero_normalizer_flag() {
        // Two arcs with no adjacency of either kind.
        let g = net(&[("a", "b"), ("c", "d")]);
        let report = betweenness(&directed_metric(&g));
        assert!(report.zero_normalizer);
        assert!(report.values.iter().all(|&v| v == 0.0));
    }

    #[test]
    fn betweenness_sums_to_one_on_random_networks() {
        use num_traits::One;
        for seed in 0..10 {
            let g = random_er(12, 0.2, RngSeed(seed)).unwrap();
            for metric in [lateral_metric(&g), directed_metric(&g)] {
                let report = betweenness(&metric);
                if !report.zero_normalizer {
                    let total: BigRational = report.exact.iter().cloned().sum();
                    assert!(total.is_one(), "seed {seed}: sum {total}");
                }
            }
        }
    }

    #[test]
    fn betweenness_seq_matches_parallel() {
        let g = random_er(15, 0.15, RngSeed(77)).unwrap();
        let m = lateral_metric(&g);
        assert_eq!(betweenness(&m).exact, betweenness_seq(&m).exact);
    }

    #[test]
    fn lateral_distances_symmetric() {
        let g = random_er(12, 0.25, RngSeed(5)).unwrap();
        let m = lateral_metric(&g);
        for f in 0..m.arc_count() {
            for h in 0..m.arc_count() {
                assert_eq!(m.distance(f, h), m.distance(h, f));
            }
        }
    }

    #[test]
    fn directed_triangle_inequality() {
        let g = random_er(12, 0.25, RngSeed(6)).unwrap();
        let m = directed_metric(&g);
        let n = m.arc_count();
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if let (Some(ab), Some(bc)) = (m.distance(a, b), m.distance(b, c)) {
                        let ac = m.distance(a, c).expect("reachable via b");
                        assert!(ac <= ab + bc);
                    }
                }
            }
        }
    }

    #[test]
    fn efficiency_examples() {
        let path = net(&[("a", "b"), ("b", "c"), ("c", "d")]);
        let eff_d = efficiency(&directed_metric(&path)).unwrap();
        assert!((eff_d - 5.0 / 12.0).abs() < 1e-12);
        let eff_l = efficiency(&lateral_metric(&path)).unwrap();
        assert_eq!(eff_l, 0.0);

        // Star of 4 arcs out of one node: complete lateral adjacency.
        let star = net(&[("o", "a"), ("o", "b"), ("o", "c"), ("o", "d")]);
        let eff = efficiency(&lateral_metric(&star)).unwrap();
        assert_eq!(eff, 1.0);
    }

    #[test]
    fn efficiency_fast_paths_match_metric() {
        let g = random_er(10, 0.3, RngSeed(9)).unwrap();
        let d1 = efficiency(&directed_metric(&g)).unwrap();
        let d2 = directed_efficiency(&g).unwrap();
        assert_eq!(d1, d2);
        let l1 = efficiency(&lateral_metric(&g)).unwrap();
        let l2 = lateral_efficiency(&g).unwrap();
        assert_eq!(l1, l2);
    }

    #[test]
    fn efficiency_too_few_arcs() {
        let g = net(&[("a", "b")]);
        assert!(efficiency(&directed_metric(&g)).is_err());
    }

    #[test]
    fn components_diamond_chain_n1() {
        // x0: s→u, x1: u→t, y0: s→v, y1: v→t.
        let g = net(&[("s", "u"), ("u", "t"), ("s", "v"), ("v", "t")]);
        let comps = lateral_components(&g);
        assert_eq!(comps, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn components_diamond_chain_n2() {
        // x0..x2 and y0..y2 along two length-3 routes s→·→·→t.
        let g = net(&[
            ("s", "u1"),
            ("u1", "u2"),
            ("u2", "t"),
            ("s", "v1"),
            ("v1", "v2"),
            ("v2", "t"),
        ]);
        let comps = lateral_components(&g);
        assert_eq!(comps, vec![vec![0, 3], vec![1], vec![2, 5], vec![4]]);
    }
}
