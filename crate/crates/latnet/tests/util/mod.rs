//! Independent oracles for the acceptance suite: brute-force geodesic
//! path enumeration, weak connectivity, an inverse-cdf truncated-zeta
//! sampler, and small random-network generators. Deliberately written
//! without reusing the library's algorithms.

use latnet::net::{DirectedNetwork, RngSeed};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

/// Exhaustive betweenness on an unweighted graph given by adjacency lists:
/// for every ordered pair (s, t) with a finite positive-or-zero distance,
/// enumerate *all* shortest paths explicitly and credit every vertex on
/// each path (endpoints included) with 1/σ_st. Returns the normalized
/// rational scores and the normalizer Σ (d_st + 1).
pub fn brute_force_betweenness(adj: &[Vec<usize>]) -> (Vec<BigRational>, u64) {
    let n = adj.len();
    let mut raw = vec![BigRational::zero(); n];
    let mut normalizer = 0u64;
    for s in 0..n {
        let dist = bfs(adj, s);
        for t in 0..n {
            if t == s || dist[t] == usize::MAX {
                continue;
            }
            normalizer += dist[t] as u64 + 1;
            let mut paths: Vec<Vec<usize>> = Vec::new();
            let mut current = vec![s];
            enumerate_shortest(adj, &dist, t, &mut current, &mut paths);
            let sigma = BigInt::from(paths.len());
            let mut through = vec![0u64; n];
            for p in &paths {
                for &v in p {
                    through[v] += 1;
                }
            }
            for v in 0..n {
                if through[v] > 0 {
                    raw[v] += BigRational::new(BigInt::from(through[v]), sigma.clone());
                }
            }
        }
    }
    if normalizer > 0 {
        let norm = BigRational::from(BigInt::from(normalizer));
        for r in &mut raw {
            *r /= norm.clone();
        }
    }
    (raw, normalizer)
}

fn bfs(adj: &[Vec<usize>], s: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; adj.len()];
    dist[s] = 0;
    let mut queue = std::collections::VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

fn enumerate_shortest(
    adj: &[Vec<usize>],
    dist: &[usize],
    t: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    let v = *current.last().unwrap();
    if v == t {
        out.push(current.clone());
        return;
    }
    for &w in &adj[v] {
        if dist[w] == dist[v] + 1 && dist[w] <= dist[t] {
            current.push(w);
            enumerate_shortest(adj, dist, t, current, out);
            current.pop();
        }
    }
}

/// Weak connectivity classes of the arcs: two arcs are equivalent when an
/// undirected node path links them. Blocks sorted by smallest arc id.
pub fn weak_arc_components(g: &DirectedNetwork) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for &(s, t) in g.arcs() {
        let (a, b) = (find(&mut parent, s), find(&mut parent, t));
        if a != b {
            parent[a] = b;
        }
    }
    let mut blocks: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (id, &(s, _)) in g.arcs().iter().enumerate() {
        let root = find(&mut parent, s);
        blocks.entry(root).or_default().push(id);
    }
    let mut out: Vec<Vec<usize>> = blocks.into_values().collect();
    out.sort_by_key(|b| b[0]);
    out
}

/// Inverse-cdf sampler for the truncated zeta distribution
/// P(k) ∝ k^{−α} on k_min..=k_max: tabulate the cdf once, then binary
/// search a uniform draw per sample.
pub fn zeta_samples(alpha: f64, k_min: u64, k_max: u64, count: usize, seed: RngSeed) -> Vec<u64> {
    let ks: Vec<u64> = (k_min..=k_max).collect();
    let weights: Vec<f64> = ks.iter().map(|&k| (k as f64).powf(-alpha)).collect();
    let total: f64 = weights.iter().sum();
    let mut cdf = Vec::with_capacity(ks.len());
    let mut acc = 0.0;
    for w in &weights {
        acc += w / total;
        cdf.push(acc);
    }
    let mut rng = seed.rng();
    (0..count)
        .map(|_| {
            let u: f64 = rng.gen();
            let idx = cdf.partition_point(|&c| c < u).min(ks.len() - 1);
            ks[idx]
        })
        .collect()
}

/// A random network on up to `max_nodes` nodes that may contain self-loops
/// and parallel arcs.
pub fn random_multigraph(max_nodes: usize, max_arcs: usize, seed: RngSeed) -> DirectedNetwork {
    let mut rng = seed.rng();
    let n = rng.gen_range(1..=max_nodes);
    let m = rng.gen_range(0..=max_arcs);
    let nodes: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let arcs: Vec<(usize, usize)> = (0..m)
        .map(|_| (rng.gen_range(0..n), rng.gen_range(0..n)))
        .collect();
    DirectedNetwork::new(nodes, arcs, false).expect("indices are in range")
}

/// Checks that the finer partition refines the coarser one: equality of
/// fine blocks implies equality of coarse blocks.
pub fn refines(fine: &[Vec<usize>], coarse: &[Vec<usize>]) -> bool {
    let size: usize = fine.iter().map(|b| b.len()).sum();
    let mut coarse_of = vec![usize::MAX; size];
    for (i, block) in coarse.iter().enumerate() {
        for &x in block {
            coarse_of[x] = i;
        }
    }
    fine.iter()
        .all(|block| block.iter().all(|&x| coarse_of[x] == coarse_of[block[0]]))
}

/// Exact-one check for normalized rational scores.
pub fn sums_to_one(exact: &[BigRational]) -> bool {
    exact.iter().sum::<BigRational>() == BigRational::one()
}
