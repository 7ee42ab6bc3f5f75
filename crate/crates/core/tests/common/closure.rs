//! One random instance per closure rule. Each function draws a graph whose
//! premise holds and returns an error describing any counterexample.

use rand::Rng;
use z3real::builder::{base_graph, wheel, BaseGraphId};
use z3real::verifier::is_z3_connected;
use z3real::Multigraph;

use super::random_multigraph;

fn z3(g: &Multigraph) -> bool {
    is_z3_connected(g).expect("within the oracle cap")
}

/// Random Z3-connected multigraph on `n` vertices, found by rejection.
pub fn random_connected(rng: &mut impl Rng, n: usize) -> Multigraph {
    loop {
        let m = rng.gen_range(n..=2 * n + 2);
        let g = random_multigraph(rng, n, m);
        if z3(&g) {
            return g;
        }
    }
}

/// If the lift `G_[uv,uw]` is Z3-connected then so is `G`.
pub fn lifting(rng: &mut impl Rng) -> Result<(), String> {
    loop {
        let n = rng.gen_range(3..=6);
        let m = rng.gen_range(n..=2 * n + 3);
        let g = random_multigraph(rng, n, m);
        let u = rng.gen_range(0..n);
        let nb: Vec<usize> = g
            .edges()
            .iter()
            .filter_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        if nb.len() < 4 {
            continue;
        }
        let v = nb[rng.gen_range(0..nb.len())];
        let w = nb[rng.gen_range(0..nb.len())];
        let Ok(lifted) = g.lift(u, v, w) else {
            continue;
        };
        if !z3(&lifted) {
            continue;
        }
        return if z3(&g) {
            Ok(())
        } else {
            Err(format!("lift at {u} of\n{}", g.to_edge_list()))
        };
    }
}

/// With `H` a Z3-connected subgraph, `G` is Z3-connected iff `G/H` is.
pub fn contraction(rng: &mut impl Rng) -> Result<(), String> {
    let h = match rng.gen_range(0..4) {
        0 => Multigraph::new(2, vec![(0, 1), (0, 1)]).unwrap(),
        1 => wheel(4).unwrap(),
        2 => base_graph(BaseGraphId::K5minus),
        _ => base_graph(BaseGraphId::Fig1a),
    };
    let extra = rng.gen_range(1..=4);
    let n = h.n() + extra;
    let mut g = h.clone();
    for _ in 0..extra {
        g.add_vertex();
    }
    for _ in 0..rng.gen_range(extra..=3 * extra + 2) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(h.n()..n);
        if a != b {
            g.add_edge(a, b).unwrap();
        }
    }
    let set: Vec<usize> = (0..h.n()).collect();
    let (q, _) = g.contract(&set).unwrap();
    if z3(&g) == z3(&q) {
        Ok(())
    } else {
        Err(format!("contracting 0..{} in\n{}", h.n(), g.to_edge_list()))
    }
}

/// Adding edges keeps a Z3-connected graph Z3-connected.
pub fn spanning_supergraph(rng: &mut impl Rng) -> Result<(), String> {
    let n = rng.gen_range(2..=6);
    let mut g = random_connected(rng, n);
    for _ in 0..rng.gen_range(1..=3) {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b {
            g.add_edge(a, b).unwrap();
        }
    }
    if z3(&g) {
        Ok(())
    } else {
        Err(format!("supergraph\n{}", g.to_edge_list()))
    }
}

/// A new vertex with at least two edges into a Z3-connected graph keeps it
/// Z3-connected.
pub fn vertex_absorption(rng: &mut impl Rng) -> Result<(), String> {
    let n = rng.gen_range(1..=6);
    let mut g = random_connected(rng, n);
    let x = g.add_vertex();
    for _ in 0..rng.gen_range(2..=4) {
        let v = rng.gen_range(0..n);
        g.add_edge(x, v).unwrap();
    }
    if z3(&g) {
        Ok(())
    } else {
        Err(format!("absorbing vertex {x}\n{}", g.to_edge_list()))
    }
}
