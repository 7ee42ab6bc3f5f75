//! Render a realization as Graphviz DOT:
//!
//!     cargo run --example dot -- "(6,4^7,3^4)" | dot -Tsvg > g.svg

use z3real::{realize, DegreeSequence};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(6,4^7,3^4)".into());
    let seq: DegreeSequence = text.parse().expect("a degree sequence");
    let result = realize(&seq).expect("construction succeeds");
    let r = result.realization().expect("a covered sequence");
    print!("{}", r.graph.to_dot("realization"));
}
