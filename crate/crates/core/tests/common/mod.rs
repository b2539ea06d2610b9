//! Brute-force oracles, kept independent of the library's algorithms.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashSet};

use dynchroma_core::Graph;

/// Reach set by enumerating every simple path of length <= t out of `v`.
pub fn brute_reach(g: &Graph, rank: &[usize], v: usize, t: usize) -> BTreeSet<usize> {
    fn walk(
        g: &Graph,
        rank: &[usize],
        v: usize,
        at: usize,
        left: usize,
        on_path: &mut Vec<bool>,
        out: &mut BTreeSet<usize>,
    ) {
        if left == 0 {
            return;
        }
        for &y in g.neighbors(at) {
            if on_path[y] {
                continue;
            }
            if rank[y] < rank[v] {
                out.insert(y);
            } else if rank[y] > rank[v] {
                on_path[y] = true;
                walk(g, rank, v, y, left - 1, on_path, out);
                on_path[y] = false;
            }
        }
    }
    let mut out = BTreeSet::from([v]);
    let mut on_path = vec![false; g.vertex_count()];
    on_path[v] = true;
    walk(g, rank, v, v, t, &mut on_path, &mut out);
    out
}

pub fn ranks_of(sequence: &[usize]) -> Vec<usize> {
    let mut rank = vec![0; sequence.len()];
    for (i, &v) in sequence.iter().enumerate() {
        rank[v] = i;
    }
    rank
}

pub fn brute_width(g: &Graph, sequence: &[usize], t: usize) -> usize {
    let rank = ranks_of(sequence);
    (0..g.vertex_count())
        .map(|v| brute_reach(g, &rank, v, t).len())
        .max()
        .unwrap_or(0)
}

/// Heap's algorithm over all orders; small n only.
pub fn brute_col(g: &Graph, t: usize) -> usize {
    let n = g.vertex_count();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = brute_width(g, &perm, t);
    let mut c = vec![0; n];
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            best = best.min(brute_width(g, &perm, t));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    best
}

/// Set-based r-dynamic check.
pub fn naive_is_r_dynamic(g: &Graph, colors: &[usize], r: usize) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.iter().any(|&(u, v)| colors[u] == colors[v]) {
        return false;
    }
    (0..g.vertex_count()).all(|v| {
        let seen: HashSet<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
        seen.len() >= r.min(g.degree(v))
    })
}

/// Smallest d admitting an r-dynamic d-coloring, by enumerating all d^n
/// assignments.
pub fn brute_chi_r(g: &Graph, r: usize) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    for d in 1.. {
        let mut colors = vec![1; n];
        loop {
            if naive_is_r_dynamic(g, &colors, r) {
                return d;
            }
            let mut i = 0;
            while i < n && colors[i] == d {
                colors[i] = 1;
                i += 1;
            }
            if i == n {
                break;
            }
            colors[i] += 1;
        }
    }
    unreachable!()
}

/// All vertex pairs at distance 1 or 2, by breadth-first distances.
pub fn distance_two_pairs(g: &Graph) -> BTreeSet<(usize, usize)> {
    let n = g.vertex_count();
    let mut pairs = BTreeSet::new();
    for s in 0..n {
        let mut dist = vec![usize::MAX; n];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        for (u, &d) in dist.iter().enumerate().skip(s + 1) {
            if d <= 2 {
                pairs.insert((s, u));
            }
        }
    }
    pairs
}
