//! Replayable Z3-connectivity certificates.
//!
//! A certificate is a list of reduction steps applied to a working graph.
//! Each contraction removes a subgraph that is Z3-connected on its own, which
//! preserves Z3-connectivity in both directions; a lift replaces the graph
//! by one whose Z3-connectivity implies that of the current graph. Reaching
//! `K1`, or a triangularly connected graph that qualifies on its own, proves
//! the start graph Z3-connected. Failing to find a certificate proves
//! nothing.

use std::fmt;
use std::str::FromStr;

use crate::builder::catalog::{base_graph, BaseGraphId, CERTIFIED_BASES};
use crate::graph::{Multigraph, WheelEmbedding, DEFAULT_RIM_CAP};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TriangularWitness {
    /// Minimum degree at least 4.
    MinDegree4,
    /// A pair of parallel edges.
    TwoCycle(usize, usize),
    /// An even wheel.
    Wheel(WheelEmbedding),
    /// A Z3-connected catalog graph; `embedding[i]` hosts base vertex `i`.
    Base(BaseGraphId, Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step {
    /// Contract two vertices joined by at least two edges.
    ContractTwoCycle(usize, usize),
    /// Contract an even wheel.
    ContractEvenWheel(WheelEmbedding),
    /// Contract an embedded Z3-connected catalog graph.
    ContractKnownBase(BaseGraphId, Vec<usize>),
    /// Merge `vertex` into the contracted block `into` it has at least two
    /// edges to.
    AbsorbVertex { vertex: usize, into: usize },
    /// Terminal: the working graph is triangularly connected and the
    /// witness holds.
    TriangularRule(TriangularWitness),
    /// Replace the working graph by `G_[uv,uw]`; requires `d(u) >= 4`.
    LiftStep { u: usize, v: usize, w: usize },
    /// Terminal: the working graph is `K1`.
    Done,
}

impl Step {
    /// The closure rule the step relies on.
    pub fn rule(&self) -> &'static str {
        match self {
            Step::ContractTwoCycle(..) => "2-cycle contraction",
            Step::ContractEvenWheel(_) => "even wheel contraction",
            Step::ContractKnownBase(..) => "catalog contraction",
            Step::AbsorbVertex { .. } => "vertex absorption",
            Step::TriangularRule(_) => "triangular connectivity",
            Step::LiftStep { .. } => "lifting",
            Step::Done => "K1",
        }
    }

    fn is_terminal(&self) -> bool {
        matches!(self, Step::TriangularRule(_) | Step::Done)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, items: &[usize]) -> fmt::Result {
    for x in items {
        write!(f, " {x}")?;
    }
    Ok(())
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Step::ContractTwoCycle(u, v) => write!(f, "two-cycle {u} {v}"),
            Step::ContractEvenWheel(w) => {
                write!(f, "wheel {}", w.center)?;
                write_list(f, &w.rim)
            }
            Step::ContractKnownBase(id, emb) => {
                write!(f, "base {id}")?;
                write_list(f, emb)
            }
            Step::AbsorbVertex { vertex, into } => write!(f, "absorb {vertex} {into}"),
            Step::TriangularRule(w) => match w {
                TriangularWitness::MinDegree4 => write!(f, "triangular min-degree-4"),
                TriangularWitness::TwoCycle(u, v) => write!(f, "triangular two-cycle {u} {v}"),
                TriangularWitness::Wheel(w) => {
                    write!(f, "triangular wheel {}", w.center)?;
                    write_list(f, &w.rim)
                }
                TriangularWitness::Base(id, emb) => {
                    write!(f, "triangular base {id}")?;
                    write_list(f, emb)
                }
            },
            Step::LiftStep { u, v, w } => write!(f, "lift {u} {v} {w}"),
            Step::Done => write!(f, "done"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseStepError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseStepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "certificate line {}: {}", self.line, self.message)
    }
}

impl std::error::Error for ParseStepError {}

fn parse_step(line: &str) -> Result<Step, String> {
    let words: Vec<&str> = line.split_whitespace().collect();
    let nums = |ws: &[&str]| -> Result<Vec<usize>, String> {
        ws.iter()
            .map(|w| {
                w.parse::<usize>()
                    .map_err(|e| format!("bad vertex '{w}': {e}"))
            })
            .collect()
    };
    let exact = |ws: &[&str], k: usize| -> Result<Vec<usize>, String> {
        let v = nums(ws)?;
        if v.len() == k {
            Ok(v)
        } else {
            Err(format!("expected {k} vertices, got {}", v.len()))
        }
    };
    let wheel = |ws: &[&str]| -> Result<WheelEmbedding, String> {
        let v = nums(ws)?;
        if v.len() < 2 {
            return Err("wheel needs a center and a rim".into());
        }
        Ok(WheelEmbedding {
            center: v[0],
            rim: v[1..].to_vec(),
        })
    };
    let base = |ws: &[&str]| -> Result<(BaseGraphId, Vec<usize>), String> {
        let (name, rest) = ws.split_first().ok_or("missing base id")?;
        let id = BaseGraphId::parse(name).ok_or_else(|| format!("unknown base '{name}'"))?;
        Ok((id, nums(rest)?))
    };
    match words.split_first() {
        Some((&"two-cycle", rest)) => {
            let v = exact(rest, 2)?;
            Ok(Step::ContractTwoCycle(v[0], v[1]))
        }
        Some((&"wheel", rest)) => Ok(Step::ContractEvenWheel(wheel(rest)?)),
        Some((&"base", rest)) => {
            let (id, emb) = base(rest)?;
            Ok(Step::ContractKnownBase(id, emb))
        }
        Some((&"absorb", rest)) => {
            let v = exact(rest, 2)?;
            Ok(Step::AbsorbVertex {
                vertex: v[0],
                into: v[1],
            })
        }
        Some((&"lift", rest)) => {
            let v = exact(rest, 3)?;
            Ok(Step::LiftStep {
                u: v[0],
                v: v[1],
                w: v[2],
            })
        }
        Some((&"done", [])) => Ok(Step::Done),
        Some((&"triangular", rest)) => {
            let witness = match rest.split_first() {
                Some((&"min-degree-4", [])) => TriangularWitness::MinDegree4,
                Some((&"two-cycle", r)) => {
                    let v = exact(r, 2)?;
                    TriangularWitness::TwoCycle(v[0], v[1])
                }
                Some((&"wheel", r)) => TriangularWitness::Wheel(wheel(r)?),
                Some((&"base", r)) => {
                    let (id, emb) = base(r)?;
                    TriangularWitness::Base(id, emb)
                }
                _ => return Err("unknown triangular witness".into()),
            };
            Ok(Step::TriangularRule(witness))
        }
        _ => Err(format!("unknown step '{line}'")),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Certificate {
    pub steps: Vec<Step>,
}

impl Certificate {
    pub fn new(steps: Vec<Step>) -> Self {
        Certificate { steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// One step per line.
impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            writeln!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Certificate {
    type Err = ParseStepError;

    /// Blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut steps = Vec::new();
        for (i, raw) in s.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            steps.push(parse_step(line).map_err(|message| ParseStepError {
                line: i + 1,
                message,
            })?);
        }
        Ok(Certificate { steps })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertifyOutcome {
    Proved(Certificate),
    Unknown,
}

impl CertifyOutcome {
    pub fn certificate(&self) -> Option<&Certificate> {
        match self {
            CertifyOutcome::Proved(c) => Some(c),
            CertifyOutcome::Unknown => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReplayFailure {
    pub step: usize,
    pub reason: String,
}

impl fmt::Display for ReplayFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "step {}: {}", self.step, self.reason)
    }
}

impl std::error::Error for ReplayFailure {}

/// Working graph plus which vertices are images of earlier contractions.
struct State {
    g: Multigraph,
    block: Vec<bool>,
}

impl State {
    fn new(g: &Multigraph) -> Self {
        State {
            block: vec![false; g.n()],
            g: g.clone(),
        }
    }

    fn contract(&mut self, set: &[usize]) {
        let (h, map) = self.g.contract(set).expect("validated contraction set");
        let mut block = vec![false; h.n()];
        for (old, &new) in map.iter().enumerate() {
            block[new] |= self.block[old];
        }
        block[map[set[0]]] = true;
        self.g = h;
        self.block = block;
    }

    /// Checks the precondition of `step` and applies it. Terminal steps
    /// leave the state unchanged.
    fn apply(&mut self, step: &Step) -> Result<(), String> {
        let g = &self.g;
        let in_range = |v: usize| -> Result<(), String> {
            if v < g.n() {
                Ok(())
            } else {
                Err(format!("vertex {v} out of range ({} vertices)", g.n()))
            }
        };
        match step {
            Step::ContractTwoCycle(u, v) | Step::AbsorbVertex { vertex: u, into: v } => {
                in_range(*u)?;
                in_range(*v)?;
                check_two_cycle(g, *u, *v)?;
                self.contract(&[*u, *v]);
            }
            Step::ContractEvenWheel(w) => {
                check_wheel(g, w)?;
                self.contract(&w.vertices());
            }
            Step::ContractKnownBase(id, emb) => {
                check_base(g, *id, emb)?;
                self.contract(emb);
            }
            Step::LiftStep { u, v, w } => {
                for x in [*u, *v, *w] {
                    in_range(x)?;
                }
                if g.degree(*u) < 4 {
                    return Err(format!(
                        "lift at {u} needs degree >= 4, has {}",
                        g.degree(*u)
                    ));
                }
                self.g = g.lift(*u, *v, *w).map_err(|e| e.to_string())?;
            }
            Step::TriangularRule(witness) => {
                if !g.is_triangularly_connected() {
                    return Err("graph is not triangularly connected".into());
                }
                match witness {
                    TriangularWitness::MinDegree4 => {
                        if g.min_degree() < 4 {
                            return Err(format!("minimum degree is {}", g.min_degree()));
                        }
                    }
                    TriangularWitness::TwoCycle(u, v) => {
                        in_range(*u)?;
                        in_range(*v)?;
                        check_two_cycle(g, *u, *v)?;
                    }
                    TriangularWitness::Wheel(w) => check_wheel(g, w)?,
                    TriangularWitness::Base(id, emb) => check_base(g, *id, emb)?,
                }
            }
            Step::Done => {
                if g.n() != 1 {
                    return Err(format!("working graph has {} vertices, not 1", g.n()));
                }
            }
        }
        Ok(())
    }
}

fn check_two_cycle(g: &Multigraph, u: usize, v: usize) -> Result<(), String> {
    if u == v {
        return Err("two-cycle endpoints coincide".into());
    }
    let m = g.multiplicity(u, v);
    if m < 2 {
        return Err(format!("{u} and {v} are joined by {m} edge(s)"));
    }
    Ok(())
}

fn distinct_in_range(g: &Multigraph, vs: &[usize]) -> Result<(), String> {
    let mut seen = vec![false; g.n()];
    for &v in vs {
        if v >= g.n() {
            return Err(format!("vertex {v} out of range ({} vertices)", g.n()));
        }
        if seen[v] {
            return Err(format!("vertex {v} repeated"));
        }
        seen[v] = true;
    }
    Ok(())
}

fn check_wheel(g: &Multigraph, w: &WheelEmbedding) -> Result<(), String> {
    let k = w.rim.len();
    if k < 4 || k % 2 == 1 {
        return Err(format!("rim length {k} is not even and at least 4"));
    }
    distinct_in_range(g, &w.vertices())?;
    for i in 0..k {
        let (a, b) = (w.rim[i], w.rim[(i + 1) % k]);
        if g.multiplicity(a, b) == 0 {
            return Err(format!("rim edge {a}-{b} missing"));
        }
        if g.multiplicity(w.center, a) == 0 {
            return Err(format!("spoke {}-{a} missing", w.center));
        }
    }
    Ok(())
}

fn check_base(g: &Multigraph, id: BaseGraphId, emb: &[usize]) -> Result<(), String> {
    if !id.claims_z3() {
        return Err(format!("{id} is not Z3-connected"));
    }
    let base = base_graph(id);
    if emb.len() != base.n() {
        return Err(format!(
            "{id} has {} vertices, embedding lists {}",
            base.n(),
            emb.len()
        ));
    }
    distinct_in_range(g, emb)?;
    for &(a, b) in base.edges() {
        if g.multiplicity(emb[a], emb[b]) == 0 {
            return Err(format!("edge {}-{} of {id} missing", emb[a], emb[b]));
        }
    }
    Ok(())
}

/// Re-executes `cert` on `g`. Succeeds iff every step's precondition holds
/// and the last step is a terminal reached with nothing after it.
pub fn replay(g: &Multigraph, cert: &Certificate) -> Result<(), ReplayFailure> {
    let mut state = State::new(g);
    for (i, step) in cert.steps.iter().enumerate() {
        state
            .apply(step)
            .map_err(|reason| ReplayFailure { step: i, reason })?;
        if step.is_terminal() {
            if i + 1 != cert.steps.len() {
                return Err(ReplayFailure {
                    step: i + 1,
                    reason: "steps after a terminal step".into(),
                });
            }
            return Ok(());
        }
    }
    Err(ReplayFailure {
        step: cert.steps.len(),
        reason: "certificate ends without a terminal step".into(),
    })
}

/// Greedy certificate search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Reducer {
    pub rim_cap: usize,
    /// Catalog embedding search is skipped on graphs larger than this.
    pub base_search_cap: usize,
}

impl Default for Reducer {
    fn default() -> Self {
        Reducer {
            rim_cap: DEFAULT_RIM_CAP,
            base_search_cap: 64,
        }
    }
}

impl Reducer {
    pub fn certify(&self, g: &Multigraph) -> CertifyOutcome {
        self.certify_from(g, &[])
    }

    /// Applies `prefix` (typically lifts known from a construction), then
    /// continues the greedy search. Unknown if the prefix does not apply.
    pub fn certify_from(&self, g: &Multigraph, prefix: &[Step]) -> CertifyOutcome {
        if g.n() == 0 {
            return CertifyOutcome::Unknown;
        }
        let mut state = State::new(g);
        let mut steps = Vec::new();
        for step in prefix {
            if step.is_terminal() || state.apply(step).is_err() {
                return CertifyOutcome::Unknown;
            }
            steps.push(step.clone());
        }
        loop {
            if state.g.n() == 1 {
                steps.push(Step::Done);
                return CertifyOutcome::Proved(Certificate { steps });
            }
            let g = &state.g;
            if g.min_degree() >= 4 && g.is_triangularly_connected() {
                steps.push(Step::TriangularRule(TriangularWitness::MinDegree4));
                return CertifyOutcome::Proved(Certificate { steps });
            }
            match self.next_step(&state) {
                Some(step) => {
                    state.apply(&step).expect("search only emits valid steps");
                    steps.push(step);
                }
                None => return CertifyOutcome::Unknown,
            }
        }
    }

    /// Checked after the minimum-degree triangular terminal. Rule order: 2-cycles between original vertices, even wheels, catalog
    /// graphs, then absorption into contracted blocks.
    fn next_step(&self, state: &State) -> Option<Step> {
        let g = &state.g;
        let pairs = parallel_pairs(g);
        if let Some(&(u, v)) = pairs
            .iter()
            .find(|&&(u, v)| !state.block[u] && !state.block[v])
        {
            return Some(Step::ContractTwoCycle(u, v));
        }
        if let Some(w) = g.find_even_wheel(self.rim_cap) {
            return Some(Step::ContractEvenWheel(w));
        }
        if g.n() <= self.base_search_cap {
            for id in CERTIFIED_BASES {
                if let Some(emb) = find_embedding(&base_graph(id), g) {
                    return Some(Step::ContractKnownBase(id, emb));
                }
            }
        }
        if let Some(&(u, v)) = pairs.first() {
            return Some(match (state.block[u], state.block[v]) {
                (true, false) => Step::AbsorbVertex { vertex: v, into: u },
                (false, true) => Step::AbsorbVertex { vertex: u, into: v },
                _ => Step::ContractTwoCycle(u, v),
            });
        }
        None
    }
}

pub fn certify(g: &Multigraph) -> CertifyOutcome {
    Reducer::default().certify(g)
}

/// Vertex pairs `u < v` joined by at least two edges, sorted.
fn parallel_pairs(g: &Multigraph) -> Vec<(usize, usize)> {
    let m = g.multiplicity_matrix();
    let mut out = Vec::new();
    for (u, row) in m.iter().enumerate() {
        for (v, &k) in row.iter().enumerate().skip(u + 1) {
            if k >= 2 {
                out.push((u, v));
            }
        }
    }
    out
}

/// First injective map of `pattern` into `host` preserving adjacency
/// (not necessarily induced), with degree pruning.
pub fn find_embedding(pattern: &Multigraph, host: &Multigraph) -> Option<Vec<usize>> {
    let p_adj = pattern.adjacency_lists();
    let h_adj = host.adjacency_lists();
    if pattern.n() > host.n() {
        return None;
    }
    // Pattern vertices in BFS order from a max-degree vertex so each new
    // vertex has mapped neighbors to check against.
    let mut order = Vec::with_capacity(pattern.n());
    let mut placed = vec![false; pattern.n()];
    while order.len() < pattern.n() {
        let start = (0..pattern.n())
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (p_adj[v].len(), std::cmp::Reverse(v)))
            .expect("unplaced vertex");
        placed[start] = true;
        let mut head = order.len();
        order.push(start);
        while head < order.len() {
            let v = order[head];
            head += 1;
            let mut next: Vec<usize> = p_adj[v].iter().copied().filter(|&w| !placed[w]).collect();
            next.sort_by_key(|&w| (std::cmp::Reverse(p_adj[w].len()), w));
            for w in next {
                placed[w] = true;
                order.push(w);
            }
        }
    }
    let mut host_adj = vec![vec![false; host.n()]; host.n()];
    for (u, list) in h_adj.iter().enumerate() {
        for &v in list {
            host_adj[u][v] = true;
        }
    }
    let mut map = vec![usize::MAX; pattern.n()];
    let mut used = vec![false; host.n()];
    if embed(0, &order, &p_adj, &h_adj, &host_adj, &mut map, &mut used) {
        Some(map)
    } else {
        None
    }
}

fn embed(
    depth: usize,
    order: &[usize],
    p_adj: &[Vec<usize>],
    h_adj: &[Vec<usize>],
    host_adj: &[Vec<bool>],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let pv = order[depth];
    for hv in 0..h_adj.len() {
        if used[hv] || h_adj[hv].len() < p_adj[pv].len() {
            continue;
        }
        let ok = p_adj[pv]
            .iter()
            .all(|&pw| map[pw] == usize::MAX || host_adj[hv][map[pw]]);
        if !ok {
            continue;
        }
        map[pv] = hv;
        used[hv] = true;
        if embed(depth + 1, order, p_adj, h_adj, host_adj, map, used) {
            return true;
        }
        map[pv] = usize::MAX;
        used[hv] = false;
    }
    false
}
