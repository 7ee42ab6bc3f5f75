//! The exact oracle on a few small graphs, plus an explicit flow for one
//! prescribed boundary.

use z3real::builder::wheel;
use z3real::verifier::{boundary, is_3_flowable, is_z3_connected, solve_boundary, ZeroSumFunction};
use z3real::Multigraph;

fn main() {
    let graphs = [
        ("K4", Multigraph::complete(4)),
        ("W4", wheel(4).unwrap()),
        ("W5", wheel(5).unwrap()),
        ("K5", Multigraph::complete(5)),
        ("K3,3", Multigraph::complete_bipartite(3, 3)),
        ("C6", Multigraph::cycle(6)),
    ];
    println!(
        "{:6} {:>12} {:>14}",
        "graph", "z3_connected", "three_flowable"
    );
    for (name, g) in &graphs {
        println!(
            "{name:6} {:>12} {:>14}",
            is_z3_connected(g).unwrap(),
            is_3_flowable(g).unwrap()
        );
    }

    // W4 hub gets 1, one rim vertex gets 2: total zero in Z3.
    let w4 = wheel(4).unwrap();
    let b = ZeroSumFunction::new(vec![1, 2, 0, 0, 0]).unwrap();
    let f = solve_boundary(&w4, &b)
        .unwrap()
        .expect("W4 is Z3-connected");
    println!("edges  {:?}", w4.edges());
    println!("values {:?}", f.values());
    println!("boundary {:?}", boundary(&w4, &f).unwrap().values());
}
