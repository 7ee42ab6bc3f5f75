//! Build a Z3-connected realization and show how it was obtained.
//!
//!     cargo run --example realize -- "(7,4^5,3^5)"

use z3real::builder::Proof;
use z3real::{realize, DegreeSequence, RealizationResult};

fn main() {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(8,6,3^8)".into());
    let seq: DegreeSequence = text.parse().expect("a degree sequence such as (4,3^4)");
    match realize(&seq).expect("construction succeeds on covered input") {
        RealizationResult::Realized(r) => {
            for line in &r.trace {
                println!("trace: {line}");
            }
            match &r.proof {
                Proof::Certificate(c) => println!("proof: certificate with {} steps", c.len()),
                other => println!("proof: {}", other.tag()),
            }
            print!("{}", r.graph.to_edge_list());
        }
        RealizationResult::Exception(c) => println!("{seq}: exception {}", c.tag()),
        RealizationResult::NotGraphic => println!("{seq}: not graphic"),
        RealizationResult::Unsupported(why) => println!("{seq}: {why}"),
    }
}
