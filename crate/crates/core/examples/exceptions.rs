//! Exception sequences are graphic but no realization is Z3-connected.
//! Lists every isomorphism class with the oracle's verdict.

use z3real::enumerate::{all_realizations, verify_exception};
use z3real::verifier::is_z3_connected;
use z3real::DegreeSequence;

fn main() {
    for text in ["(3^4)", "(3^6)", "(4,3^6)", "(5,3^5)", "(5^2,3^4)"] {
        let seq: DegreeSequence = text.parse().unwrap();
        let classes: Vec<_> = all_realizations(&seq, None, true).unwrap().collect();
        let connected = classes
            .iter()
            .filter(|g| is_z3_connected(g).unwrap())
            .count();
        println!(
            "{text:10} classes={:3} z3_connected={connected} confirmed={}",
            classes.len(),
            verify_exception(&seq).unwrap()
        );
    }
}
