//! Fixed small graphs the constructions start from.
//!
//! Figure graphs are stored with vertex `v_i` at index `i - 1`.

use std::fmt;

use crate::error::GraphError;
use crate::graph::Multigraph;
use crate::seqcore::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BaseGraphId {
    /// `(4^2, 3^4)`
    Fig1a,
    /// `(5, 4, 3^5)`
    Fig1b,
    /// `(6, 4, 3^6)`
    Fig1c,
    /// `(5^2, 3^6)`
    Fig1d,
    /// `(4^3, 3^4)`
    Fig2a,
    /// `(5, 4^2, 3^5)`
    Fig2b,
    /// `(4^4, 3^4)`
    Fig2c,
    /// Even wheel with the given rim length.
    WheelEven(usize),
    /// `K4` minus one edge; its two 2-vertices are 0 and 2.
    K4minus,
    K5,
    /// `K5` minus one edge.
    K5minus,
    /// `K_{4,4}`.
    K44,
}

pub const FIGURES: [BaseGraphId; 7] = [
    BaseGraphId::Fig1a,
    BaseGraphId::Fig1b,
    BaseGraphId::Fig1c,
    BaseGraphId::Fig1d,
    BaseGraphId::Fig2a,
    BaseGraphId::Fig2b,
    BaseGraphId::Fig2c,
];

/// Bases that certificates may contract: all carry a Z3-connectivity claim
/// and have at most nine vertices.
pub const CERTIFIED_BASES: [BaseGraphId; 10] = [
    BaseGraphId::K5,
    BaseGraphId::K5minus,
    BaseGraphId::K44,
    BaseGraphId::Fig1a,
    BaseGraphId::Fig1b,
    BaseGraphId::Fig2a,
    BaseGraphId::Fig1c,
    BaseGraphId::Fig1d,
    BaseGraphId::Fig2b,
    BaseGraphId::Fig2c,
];

const FIG1A: &[(usize, usize)] = &[
    (1, 6),
    (5, 2),
    (3, 4),
    (1, 3),
    (6, 4),
    (1, 2),
    (1, 5),
    (5, 3),
    (2, 4),
    (6, 2),
];
const FIG1B: &[(usize, usize)] = &[
    (2, 6),
    (6, 5),
    (1, 4),
    (3, 4),
    (2, 3),
    (5, 4),
    (2, 7),
    (2, 1),
    (1, 3),
    (1, 5),
    (1, 7),
    (7, 6),
];
const FIG1C: &[(usize, usize)] = &[
    (5, 2),
    (1, 3),
    (4, 3),
    (5, 4),
    (2, 3),
    (5, 1),
    (1, 4),
    (1, 7),
    (1, 8),
    (6, 7),
    (8, 7),
    (6, 2),
    (8, 2),
    (1, 6),
];
const FIG1D: &[(usize, usize)] = &[
    (5, 2),
    (1, 3),
    (4, 3),
    (5, 4),
    (2, 3),
    (5, 1),
    (1, 4),
    (1, 8),
    (6, 7),
    (8, 7),
    (6, 2),
    (8, 2),
    (1, 6),
    (7, 2),
];
const FIG2A: &[(usize, usize)] = &[
    (2, 3),
    (4, 5),
    (2, 4),
    (3, 5),
    (2, 7),
    (2, 6),
    (3, 7),
    (1, 4),
    (1, 5),
    (1, 7),
    (1, 6),
    (6, 3),
];
const FIG2B: &[(usize, usize)] = &[
    (2, 4),
    (4, 5),
    (5, 6),
    (1, 8),
    (7, 8),
    (2, 7),
    (6, 8),
    (2, 3),
    (2, 1),
    (1, 7),
    (1, 6),
    (1, 3),
    (3, 5),
    (3, 4),
];
const FIG2C: &[(usize, usize)] = &[
    (3, 4),
    (5, 6),
    (3, 7),
    (7, 5),
    (4, 8),
    (8, 6),
    (1, 3),
    (1, 4),
    (1, 5),
    (1, 6),
    (2, 3),
    (2, 4),
    (2, 7),
    (2, 8),
];

fn from_one_based(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::new(n, edges.iter().map(|&(u, v)| (u - 1, v - 1)).collect())
        .expect("catalog edge lists are valid")
}

/// `W_k`: center 0, rim `1..=k` in cycle order.
pub fn wheel(k: usize) -> Result<Multigraph, GraphError> {
    if k < 3 {
        return Err(GraphError::WheelTooSmall(k));
    }
    let mut edges = Vec::with_capacity(2 * k);
    for i in 1..=k {
        edges.push((0, i));
    }
    for i in 1..=k {
        edges.push((i, i % k + 1));
    }
    Multigraph::new(k + 1, edges)
}

pub fn base_graph(id: BaseGraphId) -> Multigraph {
    match id {
        BaseGraphId::Fig1a => from_one_based(6, FIG1A),
        BaseGraphId::Fig1b => from_one_based(7, FIG1B),
        BaseGraphId::Fig1c => from_one_based(8, FIG1C),
        BaseGraphId::Fig1d => from_one_based(8, FIG1D),
        BaseGraphId::Fig2a => from_one_based(7, FIG2A),
        BaseGraphId::Fig2b => from_one_based(8, FIG2B),
        BaseGraphId::Fig2c => from_one_based(8, FIG2C),
        BaseGraphId::WheelEven(k) => wheel(k).expect("even wheel rim is at least 4"),
        BaseGraphId::K4minus => {
            Multigraph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (1, 3)]).expect("valid")
        }
        BaseGraphId::K5 => Multigraph::complete(5),
        BaseGraphId::K5minus => {
            let mut g = Multigraph::complete(5);
            g.remove_edge_between(3, 4).expect("edge present");
            g
        }
        BaseGraphId::K44 => Multigraph::complete_bipartite(4, 4),
    }
}

impl BaseGraphId {
    /// Degree sequence the entry is labeled with.
    pub fn label(self) -> DegreeSequence {
        let parts: &[(usize, usize)] = match self {
            BaseGraphId::Fig1a => &[(4, 2), (3, 4)],
            BaseGraphId::Fig1b => &[(5, 1), (4, 1), (3, 5)],
            BaseGraphId::Fig1c => &[(6, 1), (4, 1), (3, 6)],
            BaseGraphId::Fig1d => &[(5, 2), (3, 6)],
            BaseGraphId::Fig2a => &[(4, 3), (3, 4)],
            BaseGraphId::Fig2b => &[(5, 1), (4, 2), (3, 5)],
            BaseGraphId::Fig2c => &[(4, 4), (3, 4)],
            BaseGraphId::WheelEven(k) => return DegreeSequence::from_parts(&[(k, 1), (3, k)]),
            BaseGraphId::K4minus => &[(3, 2), (2, 2)],
            BaseGraphId::K5 => &[(4, 5)],
            BaseGraphId::K5minus => &[(4, 3), (3, 2)],
            BaseGraphId::K44 => &[(4, 8)],
        };
        DegreeSequence::from_parts(parts)
    }

    /// Whether the entry is claimed to be Z3-connected.
    pub fn claims_z3(self) -> bool {
        match self {
            BaseGraphId::K4minus => false,
            BaseGraphId::WheelEven(k) => k % 2 == 0 && k >= 4,
            _ => true,
        }
    }

    pub fn name(self) -> String {
        match self {
            BaseGraphId::WheelEven(k) => format!("W{k}"),
            BaseGraphId::K4minus => "K4-".into(),
            BaseGraphId::K5minus => "K5-".into(),
            other => format!("{other:?}"),
        }
    }

    pub fn parse(name: &str) -> Option<Self> {
        let id = match name {
            "Fig1a" => BaseGraphId::Fig1a,
            "Fig1b" => BaseGraphId::Fig1b,
            "Fig1c" => BaseGraphId::Fig1c,
            "Fig1d" => BaseGraphId::Fig1d,
            "Fig2a" => BaseGraphId::Fig2a,
            "Fig2b" => BaseGraphId::Fig2b,
            "Fig2c" => BaseGraphId::Fig2c,
            "K4-" => BaseGraphId::K4minus,
            "K5" => BaseGraphId::K5,
            "K5-" => BaseGraphId::K5minus,
            "K44" => BaseGraphId::K44,
            _ => {
                let k = name.strip_prefix('W')?.parse::<usize>().ok()?;
                if k < 4 || k % 2 == 1 {
                    return None;
                }
                BaseGraphId::WheelEven(k)
            }
        };
        Some(id)
    }
}

impl fmt::Display for BaseGraphId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn labels_match_edge_lists() {
        let mut ids: Vec<BaseGraphId> = FIGURES.to_vec();
        ids.extend([
            BaseGraphId::WheelEven(4),
            BaseGraphId::WheelEven(6),
            BaseGraphId::K4minus,
            BaseGraphId::K5,
            BaseGraphId::K5minus,
            BaseGraphId::K44,
        ]);
        for id in ids {
            let g = base_graph(id);
            assert!(g.is_simple(), "{id}");
            assert_eq!(g.degree_sequence().unwrap(), id.label(), "{id}");
            assert_eq!(BaseGraphId::parse(&id.name()), Some(id));
        }
    }

    #[test]
    fn wheel_examples() {
        let w4 = wheel(4).unwrap();
        assert_eq!((w4.n(), w4.edge_count()), (5, 8));
        assert_eq!(
            wheel(3).unwrap().normalized(),
            Multigraph::complete(4).normalized()
        );
        assert_eq!(wheel(6).unwrap().degree_list(), vec![6, 3, 3, 3, 3, 3, 3]);
        assert_eq!(wheel(2), Err(GraphError::WheelTooSmall(2)));
    }

    #[test]
    fn k4_minus_has_nonadjacent_two_vertices() {
        let g = base_graph(BaseGraphId::K4minus);
        assert_eq!(g.degree(0), 2);
        assert_eq!(g.degree(2), 2);
        assert_eq!(g.multiplicity(0, 2), 0);
    }
}
