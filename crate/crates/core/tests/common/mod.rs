#![allow(dead_code)]

pub mod closure;

use std::collections::HashSet;

use rand::Rng;
use z3real::Multigraph;

/// Naive Z3-connectivity: enumerate all 2^|E| assignments of {1, 2} to the
/// edges as stored and collect the boundaries.
pub fn naive_z3_connected(g: &Multigraph) -> bool {
    let n = g.n();
    let m = g.edge_count();
    let mut seen: HashSet<Vec<u8>> = HashSet::new();
    for mask in 0u32..(1u32 << m) {
        let mut b = vec![0u8; n];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let val = if mask >> i & 1 == 1 { 2 } else { 1 };
            b[u] = (b[u] + val) % 3;
            b[v] = (b[v] + 3 - val) % 3;
        }
        seen.insert(b);
    }
    seen.len() == 3usize.pow(n.saturating_sub(1) as u32)
}

/// Naive modular 3-orientation search over all 2^|E| orientations.
pub fn naive_mod3_orientation(g: &Multigraph) -> bool {
    let n = g.n();
    let m = g.edge_count();
    (0u32..(1u32 << m)).any(|mask| {
        let mut net = vec![0i64; n];
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let (a, b) = if mask >> i & 1 == 1 { (u, v) } else { (v, u) };
            net[a] += 1;
            net[b] -= 1;
        }
        net.iter().all(|x| x.rem_euclid(3) == 0)
    })
}

/// Random loopless multigraph.
pub fn random_multigraph(rng: &mut impl Rng, n: usize, m: usize) -> Multigraph {
    let mut edges = Vec::with_capacity(m);
    if n >= 2 {
        while edges.len() < m {
            let u = rng.gen_range(0..n);
            let v = rng.gen_range(0..n);
            if u != v {
                edges.push((u.min(v), u.max(v)));
            }
        }
    }
    Multigraph::new(n, edges).unwrap()
}

/// Adjacency-matrix minimum over all vertex orders; only for tiny graphs.
pub fn brute_canonical(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let m = g.multiplicity_matrix();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<Vec<usize>>> = None;
    loop {
        let mat: Vec<Vec<usize>> = (0..n)
            .map(|i| (0..n).map(|j| m[perm[i]][perm[j]]).collect())
            .collect();
        if best.as_ref().is_none_or(|b| mat < *b) {
            best = Some(mat);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap_or_default()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
