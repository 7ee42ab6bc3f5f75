//! One instance of each construction family, checked by the oracle.

use z3real::builder::{realize_family, Family};
use z3real::verifier::is_z3_connected;
use z3real::DegreeSequence;

fn main() {
    let cases = [
        ("(9,4,3^9)", Family::L31I),
        ("(4^8,3^4)", Family::L31II),
        ("(5,4^6,3^5)", Family::L31III),
        ("(10,8,3^10)", Family::L41),
        ("(9,5,3^10)", Family::T14),
        ("(8,4^7,3^4)", Family::L51),
        ("(9,4^7,3^5)", Family::T15),
        ("(5,4^2,3^3)", Family::T12),
    ];
    for (text, family) in cases {
        let seq: DegreeSequence = text.parse().unwrap();
        let c = realize_family(&seq, family).unwrap();
        println!(
            "{family:6} {text:13} n={:2} simple={} z3_connected={}",
            c.graph.n(),
            c.graph.is_simple(),
            is_z3_connected(&c.graph).unwrap()
        );
        println!("       {}", c.trace.last().unwrap());
    }
}
