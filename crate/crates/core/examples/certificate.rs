//! Certificates are checkable without the oracle: search one, print it,
//! read it back and replay it, then watch replay reject a damaged copy.

use z3real::reducer::{replay, Certificate, Reducer};
use z3real::{realize, DegreeSequence};

fn main() {
    let seq: DegreeSequence = "(9,4,3^9)".parse().unwrap();
    let g = realize(&seq).unwrap().realization().unwrap().graph.clone();

    let reducer = Reducer {
        rim_cap: g.n(),
        ..Reducer::default()
    };
    let cert = reducer
        .certify(&g)
        .certificate()
        .cloned()
        .expect("constructions certify");
    let text = cert.to_string();
    println!("certificate for {seq} on {} vertices:\n{text}", g.n());

    let parsed: Certificate = text.parse().unwrap();
    println!("replay: {:?}", replay(&g, &parsed));

    let mut damaged = g.clone();
    let (u, v) = damaged.edges()[0];
    damaged.remove_edge_between(u, v).unwrap();
    match replay(&damaged, &parsed) {
        Ok(()) => println!("damaged graph still replays"),
        Err(e) => println!("damaged graph: {e}"),
    }
}
