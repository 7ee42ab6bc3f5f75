mod common;

use common::random_multigraph;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use z3real::builder::{base_graph, wheel, BaseGraphId, Proof};
use z3real::reducer::{find_embedding, replay, Certificate, CertifyOutcome, Reducer, Step};
use z3real::verifier::is_z3_connected;
use z3real::{realize, Multigraph, RealizationResult};

fn wide() -> Reducer {
    Reducer {
        rim_cap: 12,
        ..Reducer::default()
    }
}

fn has_edge(g: &Multigraph, a: usize, b: usize) -> bool {
    g.edges()
        .iter()
        .any(|&(x, y)| (x, y) == (a.min(b), a.max(b)))
}

/// Existence of an adjacency-preserving injection, by trying every one.
fn brute_embeds(p: &Multigraph, h: &Multigraph) -> bool {
    fn rec(i: usize, p: &Multigraph, h: &Multigraph, map: &mut Vec<usize>) -> bool {
        if i == p.n() {
            return true;
        }
        for v in 0..h.n() {
            if map.contains(&v) {
                continue;
            }
            let ok = (0..i).all(|j| !has_edge(p, i, j) || has_edge(h, v, map[j]));
            if ok {
                map.push(v);
                if rec(i + 1, p, h, map) {
                    return true;
                }
                map.pop();
            }
        }
        false
    }
    rec(0, p, h, &mut Vec::new())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn proved_implies_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(0..=2 * n + 4);
        let g = random_multigraph(&mut rng, n, m);
        if let CertifyOutcome::Proved(c) = wide().certify(&g) {
            prop_assert!(replay(&g, &c).is_ok());
            prop_assert!(is_z3_connected(&g).unwrap(), "{}\n{}", g.to_edge_list(), c);
            let back: Certificate = c.to_string().parse().unwrap();
            prop_assert_eq!(back, c);
        }
    }

    /// No certificate, whatever graph it came from, replays on a graph the
    /// oracle rejects.
    #[test]
    fn replay_rejects_foreign_certificates(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=7);
        let (source, cert) = loop {
            let m = rng.gen_range(n..=3 * n);
            let g = random_multigraph(&mut rng, n, m);
            if let CertifyOutcome::Proved(c) = wide().certify(&g) {
                break (g, c);
            }
        };
        let target = loop {
            let m = rng.gen_range(0..=2 * n);
            let g = random_multigraph(&mut rng, n, m);
            if !is_z3_connected(&g).unwrap() {
                break g;
            }
        };
        prop_assert!(replay(&source, &cert).is_ok());
        prop_assert!(replay(&target, &cert).is_err());
    }

    #[test]
    fn embedding_search_matches_brute_force(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pn = rng.gen_range(1..=4);
        let hn = rng.gen_range(pn..=6);
        let pm = rng.gen_range(0..=pn * (pn - 1) / 2);
        let hm = rng.gen_range(0..=hn * (hn - 1) / 2 + 2);
        let p = random_multigraph(&mut rng, pn, pm);
        let h = random_multigraph(&mut rng, hn, hm);
        let found = find_embedding(&p, &h);
        prop_assert_eq!(found.is_some(), brute_embeds(&p, &h));
        if let Some(map) = found {
            for &(a, b) in p.edges() {
                prop_assert!(has_edge(&h, map[a], map[b]));
            }
        }
    }
}

#[test]
fn tampered_certificates_fail() {
    let seq = "(6,4,3^6)".parse().unwrap();
    let RealizationResult::Realized(r) = realize(&seq).unwrap() else {
        panic!("realizable");
    };
    let Proof::Certificate(cert) = r.proof else {
        panic!("expected a certificate");
    };
    assert!(replay(&r.graph, &cert).is_ok());

    let mut truncated = cert.clone();
    truncated.steps.pop();
    assert!(replay(&r.graph, &truncated).is_err());

    let mut trailing = cert.clone();
    trailing.steps.push(Step::Done);
    assert!(replay(&r.graph, &trailing).is_err());

    let mut thin = r.graph.clone();
    let (u, v) = thin.edges()[0];
    thin.remove_edge_between(u, v).unwrap();
    assert!(replay(&thin, &cert).is_err() || is_z3_connected(&thin).unwrap());
}

#[test]
fn catalog_graphs_certify() {
    for id in [
        BaseGraphId::Fig1a,
        BaseGraphId::Fig1b,
        BaseGraphId::Fig1c,
        BaseGraphId::Fig1d,
        BaseGraphId::Fig2a,
        BaseGraphId::Fig2b,
        BaseGraphId::Fig2c,
        BaseGraphId::K5,
        BaseGraphId::K5minus,
        BaseGraphId::K44,
    ] {
        let g = base_graph(id);
        let c = wide().certify(&g);
        let cert = c
            .certificate()
            .unwrap_or_else(|| panic!("{id:?} uncertified"));
        assert!(replay(&g, cert).is_ok(), "{id:?}");
    }
    for k in [4, 6, 8, 10] {
        let g = wheel(k).unwrap();
        assert!(wide().certify(&g).certificate().is_some(), "W{k}");
    }
    for k in [3, 5, 7] {
        let g = wheel(k).unwrap();
        assert!(!is_z3_connected(&g).unwrap());
        assert_eq!(wide().certify(&g), CertifyOutcome::Unknown, "W{k}");
    }
}
