//! Classify degree sequences given on the command line, or a fixed sample.
//!
//!     cargo run --example classify -- "(5,3^5)" "(7,4,3^7)"

use z3real::{classify, parse_sequence, Classification};

fn main() {
    let mut args: Vec<String> = std::env::args().skip(1).collect();
    if args.is_empty() {
        args = [
            "(4,3^4)",
            "(3^6)",
            "(5^2,3^4)",
            "(6,4^7,3^4)",
            "(4^2,3^6)",
            "(4^2,2^3)",
            "(5,1)",
        ]
        .map(String::from)
        .to_vec();
    }
    for a in args {
        let seq = match parse_sequence(&a) {
            Ok(s) => s,
            Err(e) => {
                println!("{a:>14}  malformed: {e}");
                continue;
            }
        };
        let class = classify(&seq);
        let note = match class {
            Classification::Covered(route) => format!("route {}", route.name()),
            Classification::NotGraphic => "no simple realization".into(),
            Classification::OutOfCoverage => "outside the constructed families".into(),
            _ => "graphic, never Z3-connected".into(),
        };
        println!("{:>14}  {:<20} {note}", seq.to_string(), class.tag());
    }
}
