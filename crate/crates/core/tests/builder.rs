use z3real::builder::catalog::CERTIFIED_BASES;
use z3real::builder::catalog::FIGURES;
use z3real::builder::{base_graph, realize_family, realize_with, Family, Proof, RealizeOptions};
use z3real::enumerate::all_realizations;
use z3real::reducer::replay;
use z3real::seqcore::residual;
use z3real::sweep::sequences;
use z3real::verifier::is_z3_connected;
use z3real::{classify, realize, Classification, DegreeSequence, Multigraph, RealizationResult};

fn seq(s: &str) -> DegreeSequence {
    s.parse().unwrap()
}

fn realized(s: &str) -> z3real::builder::Realization {
    match realize(&seq(s)).unwrap() {
        RealizationResult::Realized(r) => r,
        other => panic!("{s}: {other:?}"),
    }
}

fn check(g: &Multigraph, s: &DegreeSequence) {
    assert!(g.is_simple(), "{s}");
    assert_eq!(g.degree_sequence().as_ref(), Some(s));
    if g.n() <= 14 {
        assert!(is_z3_connected(g).unwrap(), "{s}: oracle rejects");
    }
}

/// Joining a new vertex to the decremented positions of any Z3-connected
/// realization of the residual gives a Z3-connected realization of the
/// original sequence.
#[test]
fn residual_reattachment() {
    let mut checked = 0;
    for n in 5..=8 {
        for s in sequences(n, 3, n - 1) {
            let Ok(r) = residual(&s) else { continue };
            for h in all_realizations(&r.sequence, None, true).unwrap() {
                if !is_z3_connected(&h).unwrap() {
                    continue;
                }
                let mut g = h.clone();
                let mut order: Vec<usize> = (0..h.n()).collect();
                order.sort_by_key(|&v| std::cmp::Reverse(h.degree(v)));
                let x = g.add_vertex();
                for &p in &r.decremented {
                    g.add_edge(x, order[p]).unwrap();
                }
                check(&g, &s);
                checked += 1;
            }
        }
    }
    assert!(checked > 100, "only {checked} instances");
}

#[test]
fn deterministic() {
    for s in [
        "(4,3^4)",
        "(7,4,3^7)",
        "(6,4^6,3^4)",
        "(9,5,3^10)",
        "(5,4^6,3^5)",
    ] {
        assert_eq!(realize(&seq(s)).unwrap(), realize(&seq(s)).unwrap(), "{s}");
    }
}

#[test]
fn family_constructions() {
    let cases = [
        ("(9,4,3^9)", Family::L31I),
        ("(10,4,3^10)", Family::L31I),
        ("(11,4,3^11)", Family::L31I),
        ("(12,4,3^12)", Family::L31I),
        ("(4^7,3^4)", Family::L31II),
        ("(4^8,3^4)", Family::L31II),
        ("(4^10,3^4)", Family::L31II),
        ("(5,4^5,3^5)", Family::L31III),
        ("(5,4^6,3^5)", Family::L31III),
        ("(5,4^8,3^5)", Family::L31III),
        ("(10,8,3^10)", Family::L41),
        ("(9,8,3^9)", Family::L41),
        ("(11,8,3^11)", Family::L41),
        ("(9,7,3^10)", Family::T14),
        ("(10,7,3^11)", Family::T14),
        ("(8,5,3^9)", Family::T14),
        ("(9,5,3^10)", Family::T14),
        ("(8,4^2,3^8)", Family::T14),
        ("(9,4^2,3^9)", Family::T14),
        ("(6,4^5,3^4)", Family::L51),
        ("(8,4^7,3^4)", Family::L51),
        ("(6,4^6,3^4)", Family::L51),
        ("(8,4^8,3^4)", Family::L51),
        ("(8,4^9,3^4)", Family::L51),
        ("(10,4^9,3^4)", Family::L51),
        ("(7,4^5,3^5)", Family::T15),
        ("(9,4^7,3^5)", Family::T15),
    ];
    for (s, family) in cases {
        let q = seq(s);
        let c = realize_family(&q, family).unwrap_or_else(|e| panic!("{s}: {e}"));
        check(&c.graph, &q);
        assert!(
            c.trace.iter().any(|l| l.starts_with(family.name())),
            "{s}: {:?}",
            c.trace
        );
    }
}

#[test]
fn family_rejects_wrong_shape() {
    assert!(realize_family(&seq("(4,3^4)"), Family::L41).is_err());
    assert!(realize_family(&seq("3^6"), Family::L31I).is_err());
}

#[test]
fn large_constructions_certify() {
    for s in [
        "(15,4,3^15)",
        "(13,10,3^13)",
        "(10,4^12,3^4)",
        "(5,4^14,3^5)",
        "(13,4^9,3^5)",
    ] {
        let r = realized(s);
        assert!(r.graph.is_simple());
        assert_eq!(r.graph.degree_sequence(), Some(seq(s)));
        let Proof::Certificate(cert) = &r.proof else {
            panic!("{s}: proof {}", r.proof.tag());
        };
        assert!(replay(&r.graph, cert).is_ok(), "{s}");
    }
}

#[test]
fn catalog_labels_and_claims() {
    for id in FIGURES.iter().chain(CERTIFIED_BASES.iter()) {
        let g = base_graph(*id);
        assert!(g.is_simple(), "{id:?}");
        assert_eq!(g.degree_sequence(), Some(id.label()), "{id:?}");
        if g.n() <= 14 {
            assert_eq!(is_z3_connected(&g).unwrap(), id.claims_z3(), "{id:?}");
        }
    }
}

#[test]
fn worked_examples() {
    for s in ["(7,4,3^7)", "(7,4^5,3^5)", "(6,4,3^6)", "(5^2,3^6)"] {
        let r = realized(s);
        check(&r.graph, &seq(s));
    }
}

#[test]
fn non_realizable_outcomes() {
    assert_eq!(
        realize(&seq("(5,1)")).unwrap(),
        RealizationResult::NotGraphic
    );
    for s in ["3^4", "(5,3^5)", "(5^2,3^4)", "3^6", "(4,3^6)"] {
        assert!(
            matches!(realize(&seq(s)).unwrap(), RealizationResult::Exception(_)),
            "{s}"
        );
    }
    let out = seq("(4^2,2^3)");
    assert_eq!(classify(&out), Classification::OutOfCoverage);
    assert!(matches!(
        realize(&out).unwrap(),
        RealizationResult::Unsupported(_)
    ));
}

#[test]
fn out_of_coverage_search() {
    let opts = RealizeOptions {
        search_out_of_coverage: true,
        ..RealizeOptions::default()
    };
    let r = realize_with(&seq("(4^3,3^2,2)"), &opts).unwrap();
    let g = &r.realization().expect("found").graph;
    check(g, &seq("(4^3,3^2,2)"));
}
