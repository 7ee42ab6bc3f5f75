//! Constructive realizations, dispatched by classification.
//!
//! Every construction is checked to be simple with exactly the requested
//! degree sequence before it is returned, at every level of recursion.

pub mod catalog;

use std::fmt;

pub use catalog::{base_graph, wheel, BaseGraphId};

use crate::enumerate::all_realizations;
use crate::error::BuildError;
use crate::graph::Multigraph;
use crate::reducer::{Certificate, CertifyOutcome, Reducer, Step};
use crate::seqcore::{classify, residual, Classification, DegreeSequence, Route};
use crate::verifier::{Oracle, DEFAULT_ORACLE_CAP};

/// Construction families, finer than [`Route`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// `(n-2, 4, 3^{n-2})`
    L31I,
    /// `(4^{n-4}, 3^4)`
    L31II,
    /// `(5, 4^{n-6}, 3^5)`
    L31III,
    /// `d_1 = n - 2`
    L41,
    /// `d_1 = n - 3`
    T14,
    /// `d_1 <= n - 4`, `d_{n-4} >= 4`
    L51,
    /// `d_1 <= n - 4`, `d_{n-5} >= 4`
    T15,
    /// `d_1 = n - 1`, by search.
    T12,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::L31I,
        Family::L31II,
        Family::L31III,
        Family::L41,
        Family::T14,
        Family::L51,
        Family::T15,
        Family::T12,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::L31I => "L31I",
            Family::L31II => "L31II",
            Family::L31III => "L31III",
            Family::L41 => "L41",
            Family::T14 => "T14",
            Family::L51 => "L51",
            Family::T15 => "T15",
            Family::T12 => "T12",
        }
    }

    pub fn parse(name: &str) -> Option<Family> {
        Family::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn for_route(route: Route) -> Family {
        match route {
            Route::T12 => Family::T12,
            Route::L41 => Family::L41,
            Route::T14 => Family::T14,
            Route::T15 => Family::T15,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RealizeOptions {
    /// Oracle fallback when no certificate is found, up to this many vertices.
    pub oracle_cap: usize,
    /// Try the certificate search before the oracle.
    pub certify: bool,
    /// Search for a realization of out-of-coverage sequences.
    pub search_out_of_coverage: bool,
    pub search_cap: usize,
    pub search_limit: u64,
}

impl Default for RealizeOptions {
    fn default() -> Self {
        RealizeOptions {
            oracle_cap: DEFAULT_ORACLE_CAP,
            certify: true,
            search_out_of_coverage: false,
            search_cap: 12,
            search_limit: 1_000_000,
        }
    }
}

/// A validated construction with its trace. `lifts` are lift steps that turn
/// the graph back into the one the construction started from, in replay order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Construction {
    pub graph: Multigraph,
    pub trace: Vec<String>,
    pub lifts: Vec<Step>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Proof {
    Certificate(Certificate),
    Oracle,
    /// Too large for the oracle and no certificate was found; only the
    /// construction itself vouches for the result.
    Construction,
}

impl Proof {
    pub fn tag(&self) -> &'static str {
        match self {
            Proof::Certificate(_) => "certificate",
            Proof::Oracle => "oracle",
            Proof::Construction => "construction",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub graph: Multigraph,
    pub proof: Proof,
    pub trace: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizationResult {
    Realized(Realization),
    Exception(Classification),
    NotGraphic,
    Unsupported(String),
}

impl RealizationResult {
    pub fn realization(&self) -> Option<&Realization> {
        match self {
            RealizationResult::Realized(r) => Some(r),
            _ => None,
        }
    }
}

pub fn realize(seq: &DegreeSequence) -> Result<RealizationResult, BuildError> {
    realize_with(seq, &RealizeOptions::default())
}

pub fn realize_with(
    seq: &DegreeSequence,
    opts: &RealizeOptions,
) -> Result<RealizationResult, BuildError> {
    let class = classify(seq);
    let built = match class {
        Classification::NotGraphic => return Ok(RealizationResult::NotGraphic),
        Classification::Covered(route) => build(seq, Family::for_route(route), opts),
        Classification::OutOfCoverage if opts.search_out_of_coverage => {
            search(seq, opts).map(|mut c| {
                c.trace
                    .insert(0, format!("{seq}: out of coverage, search fallback"));
                c
            })
        }
        Classification::OutOfCoverage => {
            return Ok(RealizationResult::Unsupported(format!(
                "{seq} is outside the covered families"
            )))
        }
        _ => return Ok(RealizationResult::Exception(class)),
    };
    let built = match built {
        Ok(c) => c,
        Err(e @ (BuildError::SearchCap { .. } | BuildError::SearchExhausted { .. })) => {
            return Ok(RealizationResult::Unsupported(e.to_string()))
        }
        Err(e) => return Err(e),
    };
    let proof = prove(seq, &built, opts)?;
    Ok(RealizationResult::Realized(Realization {
        graph: built.graph,
        proof,
        trace: built.trace,
    }))
}

fn prove(
    seq: &DegreeSequence,
    c: &Construction,
    opts: &RealizeOptions,
) -> Result<Proof, BuildError> {
    if opts.certify {
        // Constructions use wheels larger than the default rim cap.
        let wide = Reducer {
            rim_cap: c.graph.n(),
            ..Reducer::default()
        };
        for reducer in [Reducer::default(), wide] {
            if let CertifyOutcome::Proved(cert) = reducer.certify_from(&c.graph, &c.lifts) {
                return Ok(Proof::Certificate(cert));
            }
        }
    }
    if c.graph.n() <= opts.oracle_cap {
        return if Oracle::with_cap(opts.oracle_cap).is_z3_connected(&c.graph)? {
            Ok(Proof::Oracle)
        } else {
            Err(BuildError::NotZ3Connected(seq.to_string()))
        };
    }
    Ok(Proof::Construction)
}

/// Runs one family's construction on a sequence satisfying its hypothesis.
pub fn realize_family(seq: &DegreeSequence, family: Family) -> Result<Construction, BuildError> {
    build(seq, family, &RealizeOptions::default())
}

fn build(
    seq: &DegreeSequence,
    family: Family,
    opts: &RealizeOptions,
) -> Result<Construction, BuildError> {
    let b = Builder { seq, family, opts };
    if seq.min_degree() < 3 {
        return Err(b.mismatch("minimum degree below 3"));
    }
    let c = match family {
        Family::L31I => b.l31i(),
        Family::L31II => b.l31ii(),
        Family::L31III => b.l31iii(),
        Family::L41 => b.l41(),
        Family::T14 => b.t14(),
        Family::L51 => b.l51(),
        Family::T15 => b.t15(),
        Family::T12 => b.t12(),
    }?;
    validate(seq, &c.graph)?;
    Ok(c)
}

fn validate(seq: &DegreeSequence, g: &Multigraph) -> Result<(), BuildError> {
    if !g.is_simple() {
        return Err(BuildError::NotSimple(seq.to_string()));
    }
    match g.degree_sequence() {
        Some(got) if got == *seq => Ok(()),
        got => Err(BuildError::DegreeMismatch {
            sequence: seq.to_string(),
            got: got.map_or_else(|| format!("{:?}", g.degree_list()), |d| d.to_string()),
        }),
    }
}

/// Dispatches a sub-sequence met during recursion.
fn construct(seq: &DegreeSequence, opts: &RealizeOptions) -> Result<Construction, BuildError> {
    match classify(seq) {
        Classification::Covered(route) => build(seq, Family::for_route(route), opts),
        other => Err(BuildError::Hypothesis {
            family: "dispatch",
            sequence: seq.to_string(),
            reason: format!("classified {}", other.tag()),
        }),
    }
}

/// First labeled realization passing the certificate search or the oracle.
fn search(seq: &DegreeSequence, opts: &RealizeOptions) -> Result<Construction, BuildError> {
    let n = seq.len();
    if n > opts.search_cap {
        return Err(BuildError::SearchCap {
            sequence: seq.to_string(),
            n,
            cap: opts.search_cap,
        });
    }
    let oracle = Oracle::with_cap(opts.oracle_cap);
    let mut tried = 0u64;
    for g in all_realizations(seq, Some(opts.search_limit), false)? {
        tried += 1;
        let how = if matches!(Reducer::default().certify(&g), CertifyOutcome::Proved(_)) {
            "certificate"
        } else if n <= oracle.cap && oracle.is_z3_connected(&g)? {
            "oracle"
        } else {
            continue;
        };
        return Ok(Construction {
            graph: g,
            trace: vec![format!(
                "{seq}: search, realization #{tried} passes by {how}"
            )],
            lifts: Vec::new(),
        });
    }
    Err(BuildError::SearchExhausted {
        sequence: seq.to_string(),
        tried,
    })
}

fn seq_of(parts: &[(usize, usize)]) -> DegreeSequence {
    DegreeSequence::from_parts(parts)
}

/// Lowest-index vertices of degree `d`.
fn vertices_of_degree(g: &Multigraph, d: usize) -> Vec<usize> {
    (0..g.n()).filter(|&v| g.degree(v) == d).collect()
}

fn add_vertices(g: &mut Multigraph, k: usize) -> Vec<usize> {
    (0..k).map(|_| g.add_vertex()).collect()
}

fn join(g: &mut Multigraph, u: usize, vs: &[usize]) -> Result<(), BuildError> {
    for &v in vs {
        g.add_edge(u, v)?;
    }
    Ok(())
}

/// Pairs consecutive entries.
fn match_consecutive(g: &mut Multigraph, vs: &[usize]) -> Result<(), BuildError> {
    for pair in vs.chunks(2) {
        g.add_edge(pair[0], pair[1])?;
    }
    Ok(())
}

struct Builder<'a> {
    seq: &'a DegreeSequence,
    family: Family,
    opts: &'a RealizeOptions,
}

impl Builder<'_> {
    fn n(&self) -> usize {
        self.seq.len()
    }

    fn d(&self, i: usize) -> usize {
        self.seq.d(i)
    }

    fn mismatch(&self, reason: impl Into<String>) -> BuildError {
        BuildError::Hypothesis {
            family: self.family.name(),
            sequence: self.seq.to_string(),
            reason: reason.into(),
        }
    }

    fn done(&self, graph: Multigraph, line: String) -> Result<Construction, BuildError> {
        Ok(Construction {
            graph,
            trace: vec![format!("{} {}: {line}", self.family, self.seq)],
            lifts: Vec::new(),
        })
    }

    fn base(&self, id: BaseGraphId) -> Result<Construction, BuildError> {
        self.done(base_graph(id), format!("base graph {id}"))
    }

    fn sub(&self, seq: &DegreeSequence, family: Family) -> Result<Construction, BuildError> {
        build(seq, family, self.opts)
    }

    /// Realizes the residual sequence and attaches a new vertex to the
    /// vertices holding its decremented entries.
    fn via_residual(&self, why: &str) -> Result<Construction, BuildError> {
        let r = residual(self.seq)?;
        let mut c = construct(&r.sequence, self.opts)?;
        let g = &mut c.graph;
        let mut order: Vec<usize> = (0..g.n()).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
        let targets: Vec<usize> = r.decremented.iter().map(|&p| order[p]).collect();
        let v = g.add_vertex();
        join(g, v, &targets)?;
        c.trace.push(format!(
            "{} {}: {why}; residual {}, new vertex {v} joined to {targets:?}",
            self.family, self.seq, r.sequence
        ));
        Ok(c)
    }

    fn t12(&self) -> Result<Construction, BuildError> {
        if self.d(1) != self.n() - 1 {
            return Err(self.mismatch("d_1 != n - 1"));
        }
        search(self.seq, self.opts)
    }

    fn l31i(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        if n < 6 || *self.seq != seq_of(&[(n - 2, 1), (4, 1), (3, n - 2)]) {
            return Err(self.mismatch("expected (n-2, 4, 3^{n-2}) with n >= 6"));
        }
        match n {
            6 => return self.base(BaseGraphId::Fig1a),
            7 => return self.base(BaseGraphId::Fig1b),
            8 => return self.base(BaseGraphId::Fig1c),
            _ => {}
        }
        if n % 2 == 1 {
            let mut g = wheel(n - 5)?;
            let u = add_vertices(&mut g, 4);
            let k4m = base_graph(BaseGraphId::K4minus);
            for &(a, b) in k4m.edges() {
                g.add_edge(u[a], u[b])?;
            }
            // u[0] and u[2] are the 2-vertices of K4-.
            join(&mut g, 0, &[u[0], u[1], u[2]])?;
            self.done(
                g,
                format!(
                    "W_{} center 0 + K4- on {u:?}, joined to the center at {:?}",
                    n - 5,
                    &u[..3]
                ),
            )
        } else {
            let mut g = base_graph(BaseGraphId::Fig1a);
            let k = n - 6;
            let rim = add_vertices(&mut g, k);
            join(&mut g, 0, &rim)?;
            for i in 0..k {
                g.add_edge(rim[i], rim[(i + 1) % k])?;
            }
            self.done(
                g,
                format!("Fig1a with W_{k} glued at vertex 0, rim {rim:?}"),
            )
        }
    }

    fn l31ii(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        if n < 5 || *self.seq != seq_of(&[(4, n - 4), (3, 4)]) {
            return Err(self.mismatch("expected (4^{n-4}, 3^4) with n >= 5"));
        }
        match n {
            5 => return self.base(BaseGraphId::WheelEven(4)),
            6 => return self.base(BaseGraphId::Fig1a),
            7 => return self.base(BaseGraphId::Fig2a),
            8 => return self.base(BaseGraphId::Fig2c),
            9 => {
                let mut g = wheel(4)?;
                let v = add_vertices(&mut g, 4);
                // K4- on v1..v4 missing v2v4.
                for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)] {
                    g.add_edge(v[a], v[b])?;
                }
                for (a, b) in [(1, v[1]), (2, v[3]), (3, v[0])] {
                    g.add_edge(a, b)?;
                }
                return self.done(g, format!("W_4 + K4- on {v:?} with u1v2, u2v4, u3v1"));
            }
            _ => {}
        }
        let (mut c, a, b) = self.halves()?;
        let ga = vertices_of_degree(&a, 3);
        let gb: Vec<usize> = vertices_of_degree(&b, 3)
            .iter()
            .map(|&v| v + a.n())
            .collect();
        for i in 0..2 {
            c.graph.add_edge(ga[i], gb[i])?;
        }
        let line = format!(
            "{} {}: halves joined by {}-{} and {}-{}",
            self.family, self.seq, ga[0], gb[0], ga[1], gb[1]
        );
        c.trace.push(line);
        Ok(c)
    }

    /// Two `L31II` graphs on `floor(n/2)` and `ceil(n/2)` vertices, side by
    /// side. Returns the union and both parts.
    fn halves(&self) -> Result<(Construction, Multigraph, Multigraph), BuildError> {
        let n = self.n();
        let (k1, k2) = (n / 2, n - n / 2);
        let a = self.sub(&seq_of(&[(4, k1 - 4), (3, 4)]), Family::L31II)?;
        let b = self.sub(&seq_of(&[(4, k2 - 4), (3, 4)]), Family::L31II)?;
        let mut trace = a.trace.clone();
        trace.extend(b.trace.iter().cloned());
        trace.push(format!(
            "{} {}: second half shifted by {}",
            self.family, self.seq, k1
        ));
        let c = Construction {
            graph: a.graph.disjoint_union(&b.graph),
            trace,
            lifts: Vec::new(),
        };
        Ok((c, a.graph, b.graph))
    }

    fn l31iii(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        if n < 7 || *self.seq != seq_of(&[(5, 1), (4, n - 6), (3, 5)]) {
            return Err(self.mismatch("expected (5, 4^{n-6}, 3^5) with n >= 7"));
        }
        match n {
            7 => return self.base(BaseGraphId::Fig1b),
            8 => return self.base(BaseGraphId::Fig2b),
            9 => {
                let mut g = wheel(4)?;
                let v = add_vertices(&mut g, 4);
                for (a, b) in [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)] {
                    g.add_edge(v[a], v[b])?;
                }
                for (a, b) in [(0, v[1]), (1, v[0]), (2, v[3])] {
                    g.add_edge(a, b)?;
                }
                return self.done(g, format!("W_4 + K4- on {v:?} with u0v2, u1v1, u2v4"));
            }
            _ => {}
        }
        let (mut c, a, b) = self.halves()?;
        let u1 = vertices_of_degree(&a, 4)[0];
        let u2 = vertices_of_degree(&a, 3)[0];
        let vb: Vec<usize> = vertices_of_degree(&b, 3)
            .iter()
            .map(|&v| v + a.n())
            .collect();
        c.graph.add_edge(u1, vb[0])?;
        c.graph.add_edge(u2, vb[1])?;
        let line = format!(
            "{} {}: halves joined by {u1}-{} and {u2}-{}",
            self.family, self.seq, vb[0], vb[1]
        );
        c.trace.push(line);
        Ok(c)
    }

    fn l41(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        if n < 6 || self.d(1) != n - 2 {
            return Err(self.mismatch("d_1 != n - 2"));
        }
        if self.d(3) >= 4 {
            return self.via_residual("d_3 >= 4");
        }
        let d2 = self.d(2);
        if d2 == 4 {
            return self.sub(self.seq, Family::L31I);
        }
        if d2 < 6 || d2 % 2 == 1 {
            return Err(self.mismatch("d_2 must be even and at least 4"));
        }
        if n.is_multiple_of(2) {
            let k = n - d2 + 2;
            let mut g = wheel(k)?;
            let s = add_vertices(&mut g, d2 - 4);
            join(&mut g, 0, &s)?;
            join(&mut g, 1, &s)?;
            let x = g.add_vertex();
            join(&mut g, x, &[1, s[0], s[1]])?;
            match_consecutive(&mut g, &s[2..])?;
            self.done(
                g,
                format!(
                    "W_{k} center 0, v2 = 1, S = {s:?}, x = {x} on 1, {}, {}",
                    s[0], s[1]
                ),
            )
        } else {
            let k = n - d2 + 1;
            let mut g = wheel(k)?;
            let s = add_vertices(&mut g, d2 - 3);
            join(&mut g, 0, &s)?;
            join(&mut g, 1, &s)?;
            let x = g.add_vertex();
            join(&mut g, x, &s[..3])?;
            match_consecutive(&mut g, &s[3..])?;
            self.done(
                g,
                format!(
                    "W_{k} center 0, v2 = 1, S = {s:?}, x = {x} on {:?}",
                    &s[..3]
                ),
            )
        }
    }

    fn t14(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        if n < 7 || self.d(1) != n - 3 {
            return Err(self.mismatch("d_1 != n - 3"));
        }
        let (d2, d3) = (self.d(2), self.d(3));
        if d3 >= 5 {
            return self.via_residual("d_3 >= 5");
        }
        if d3 == 4 {
            if d2 >= 5 {
                return self.via_residual("d_3 = 4, d_2 >= 5");
            }
            if self.seq.degrees()[1..].iter().filter(|&&d| d == 4).count() >= 4 {
                return self.via_residual("d_2 = d_3 = 4 with at least four 4s after d_1");
            }
            if *self.seq != seq_of(&[(n - 3, 1), (4, 2), (3, n - 3)]) {
                return Err(self.mismatch("expected (n-3, 4^2, 3^{n-3})"));
            }
            return match n {
                7 => self.base(BaseGraphId::Fig2a),
                8 => self.base(BaseGraphId::Fig2b),
                _ if n % 2 == 1 => self.two_x_odd(n - 5, [1, 2]),
                _ => self.two_x_even(n - 6, [1, 2]),
            };
        }
        if d2 == 3 || d2 % 2 == 0 {
            return Err(self.mismatch("d_3 = 3 needs odd d_2 >= 5"));
        }
        if d2 == 5 {
            return match n {
                8 => self.base(BaseGraphId::Fig1d),
                _ if n % 2 == 1 => self.two_x_odd(n - 5, [1, 1]),
                _ => self.two_x_even(n - 6, [1, 1]),
            };
        }
        if n.is_multiple_of(2) {
            let k = n - d2 + 1;
            let mut g = wheel(k)?;
            let s = add_vertices(&mut g, d2 - 4);
            join(&mut g, 0, &s)?;
            // s[0] is the vertex left out of S_1; s[1], s[2] are s_1, s_2.
            join(&mut g, 1, &s[1..])?;
            match_consecutive(&mut g, &s[3..])?;
            let x = add_vertices(&mut g, 2);
            for i in 0..2 {
                join(&mut g, x[i], &[1, s[i + 1], s[0]])?;
            }
            self.done(
                g,
                format!("W_{k} center 0, v2 = 1, S = {s:?}, s = {}, x = {x:?}", s[0]),
            )
        } else {
            let k = n - d2;
            let mut g = wheel(k)?;
            let s = add_vertices(&mut g, d2 - 3);
            join(&mut g, 0, &s)?;
            // s[0], s[1] play s_3, s_4.
            join(&mut g, 1, &s[2..])?;
            let x = add_vertices(&mut g, 2);
            for &xi in &x {
                join(&mut g, xi, &[1, s[0], s[1]])?;
            }
            match_consecutive(&mut g, &s[2..])?;
            self.done(
                g,
                format!(
                    "W_{k} center 0, v2 = 1, S = {s:?}, x = {x:?} on 1, {}, {}",
                    s[0], s[1]
                ),
            )
        }
    }

    /// `W_k` plus `S = {s1, s2}` joined to the center and `x_i` adjacent to
    /// `hubs[i]` and both of `S`.
    fn two_x_odd(&self, k: usize, hubs: [usize; 2]) -> Result<Construction, BuildError> {
        let mut g = wheel(k)?;
        let s = add_vertices(&mut g, 2);
        join(&mut g, 0, &s)?;
        let x = add_vertices(&mut g, 2);
        for i in 0..2 {
            join(&mut g, x[i], &[hubs[i], s[0], s[1]])?;
        }
        self.done(
            g,
            format!("W_{k} center 0, S = {s:?}, x = {x:?} on rim {hubs:?}"),
        )
    }

    /// `W_k` plus `S = {s1, s2, s3}` joined to the center, `hubs[0] ~ s1`,
    /// `x1 ~ hubs[1], s2, s3` and `x2 ~ S`.
    fn two_x_even(&self, k: usize, hubs: [usize; 2]) -> Result<Construction, BuildError> {
        let mut g = wheel(k)?;
        let s = add_vertices(&mut g, 3);
        join(&mut g, 0, &s)?;
        g.add_edge(hubs[0], s[0])?;
        let x = add_vertices(&mut g, 2);
        join(&mut g, x[0], &[hubs[1], s[1], s[2]])?;
        join(&mut g, x[1], &s)?;
        self.done(
            g,
            format!("W_{k} center 0, S = {s:?}, x = {x:?}, rim {hubs:?}"),
        )
    }

    fn t15(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        if n < 8 || self.d(1) > n - 4 || self.d(n - 5) < 4 {
            return Err(self.mismatch("expected d_1 <= n - 4 and d_{n-5} >= 4"));
        }
        if self.d(n - 3) >= 4 {
            return self.via_residual("d_{n-3} >= 4");
        }
        if self.d(n - 4) >= 4 {
            return self.sub(self.seq, Family::L51);
        }
        if self.d(3) >= 5 || self.d(2) >= 5 {
            return self.via_residual("d_2 >= 5");
        }
        let d1 = self.d(1);
        if d1 == 5 {
            return self.sub(self.seq, Family::L31III);
        }
        if d1 < 7 || d1.is_multiple_of(2) || *self.seq != seq_of(&[(d1, 1), (4, n - 6), (3, 5)]) {
            return Err(self.mismatch("expected (d_1, 4^{n-6}, 3^5) with odd d_1"));
        }
        self.inverse_lifts()
    }

    /// Raises the 5-vertex of an `L31III` graph to degree `d_1` by
    /// replacing edges `xy` far from it with `ux`, `uy`.
    fn inverse_lifts(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        let d1 = self.d(1);
        let mut c = self.sub(&seq_of(&[(5, 1), (4, n - 6), (3, 5)]), Family::L31III)?;
        let g = &mut c.graph;
        let u = vertices_of_degree(g, 5)[0];
        let needed = (d1 - 5) / 2;
        let mut steps = Vec::new();
        for done in 0..needed {
            let mut near = vec![false; g.n()];
            near[u] = true;
            for w in g.neighbors(u) {
                near[w] = true;
            }
            let Some(&(x, y)) = g.edges().iter().find(|&&(x, y)| !near[x] && !near[y]) else {
                return Err(BuildError::LiftEdges {
                    needed,
                    available: done,
                });
            };
            g.remove_edge_between(x, y)?;
            g.add_edge(u, x)?;
            g.add_edge(u, y)?;
            steps.push((x, y));
        }
        c.trace.push(format!(
            "{} {}: inverse lifts at {u} replacing edges {steps:?}",
            self.family, self.seq
        ));
        c.lifts = steps
            .iter()
            .rev()
            .map(|&(v, w)| Step::LiftStep { u, v, w })
            .collect();
        Ok(c)
    }

    fn l51(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        if n < 5 || self.d(n - 4) < 4 || self.d(1) > n.saturating_sub(4).max(4) {
            return Err(self.mismatch("expected d_{n-4} >= 4 and d_1 <= n - 4"));
        }
        if self.d(n - 3) >= 4 {
            return self.via_residual("d_{n-3} >= 4");
        }
        if self.d(n - 4) >= 5 {
            return self.via_residual("d_{n-4} >= 5");
        }
        let d1 = self.d(1);
        if d1 == 4 {
            return self.sub(self.seq, Family::L31II);
        }
        if self.d(2) >= 5 {
            return self.via_residual("d_2 >= 5");
        }
        if d1 % 2 == 1 || *self.seq != seq_of(&[(d1, 1), (4, n - 5), (3, 4)]) {
            return Err(self.mismatch("expected (d_1, 4^{n-5}, 3^4) with even d_1"));
        }
        if d1 == n - 4 {
            self.path_gadget_three()
        } else if d1 == n - 5 {
            self.path_gadget_four()
        } else {
            self.squared_cycle_gadget()
        }
    }

    /// `d_1 = n - 4`: `W_{n-4}` with a path `x1 x2 x3` hung on five rim
    /// vertices; the remaining rim is matched symmetrically.
    fn path_gadget_three(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        let mut g = wheel(n - 4)?;
        // Rim vertex v_j sits at index j - 1.
        let v = |j: usize| j - 1;
        let x = add_vertices(&mut g, 3);
        g.add_edge(x[0], x[1])?;
        g.add_edge(x[1], x[2])?;
        for (xi, j) in [(0, 2), (0, 3), (1, 4), (2, 5), (2, 6)] {
            g.add_edge(x[xi], v(j))?;
        }
        let mut pairs = Vec::new();
        for j in 7..=n / 2 + 1 {
            g.add_edge(v(j), v(n - j + 4))?;
            pairs.push((v(j), v(n - j + 4)));
        }
        self.done(
            g,
            format!(
                "W_{} center 0, path {x:?} on rim 1..5, rim matching {pairs:?}",
                n - 4
            ),
        )
    }

    /// `d_1 = n - 5`: `W_{n-5}` with a path `x1..x4` hung on six rim
    /// vertices; the remaining rim arc is matched by nested pairs whose two
    /// innermost pairs are crossed, so no pair is rim-adjacent.
    fn path_gadget_four(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        let k = n - 5;
        let mut g = wheel(k)?;
        let v = |j: usize| j - 1;
        let m = n - 11;
        let mut hooks: Vec<usize> = (2..=7).map(v).collect();
        let mut arc: Vec<usize> = (8..=n - 4).map(v).collect();
        if m == 2 {
            std::mem::swap(&mut hooks[5], &mut arc[0]);
        }
        let x = add_vertices(&mut g, 4);
        for i in 0..3 {
            g.add_edge(x[i], x[i + 1])?;
        }
        for (xi, h) in [(0, 0), (0, 1), (1, 2), (2, 3), (3, 4), (3, 5)] {
            g.add_edge(x[xi], hooks[h])?;
        }
        let mut pairs: Vec<(usize, usize)> = (0..m / 2).map(|i| (arc[i], arc[m - 1 - i])).collect();
        if m >= 4 {
            let h = m / 2;
            pairs[h - 2] = (arc[h - 2], arc[h]);
            pairs[h - 1] = (arc[h - 1], arc[h + 1]);
        }
        for &(a, b) in &pairs {
            g.add_edge(a, b)?;
        }
        self.done(
            g,
            format!("W_{k} center 0, path {x:?} on rim {hooks:?}, rim matching {pairs:?}"),
        )
    }

    /// `d_1 <= n - 6`: `W_{d_1}` and the squared cycle `H` on `n - d_1 - 1`
    /// vertices minus `u_2 u_m`, joined by `v_1 u_m`, `v_2 u_2`.
    fn squared_cycle_gadget(&self) -> Result<Construction, BuildError> {
        let n = self.n();
        let d1 = self.d(1);
        let m = n - d1 - 1;
        let mut g = wheel(d1)?;
        let base = g.n();
        add_vertices(&mut g, m);
        let u = |i: usize| base + (i - 1) % m;
        for i in 1..=m {
            g.add_edge(u(i), u(i + 1))?;
            if i != m {
                g.add_edge(u(i), u(i + 2))?;
            }
        }
        g.add_edge(1, u(m))?;
        g.add_edge(2, u(2))?;
        let mut pairs = Vec::new();
        for j in 3..d1 / 2 {
            g.add_edge(j, d1 - j + 3)?;
            pairs.push((j, d1 - j + 3));
        }
        self.done(
            g,
            format!(
                "W_{d1} center 0 + H' on {}..{} (squared {m}-cycle minus u2u{m}), bridges 1-{} and 2-{}, rim matching {pairs:?}",
                base,
                base + m - 1,
                u(m),
                u(2)
            ),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verifier::is_z3_connected;

    fn seq(s: &str) -> DegreeSequence {
        s.parse().unwrap()
    }

    fn realized(s: &str) -> Realization {
        match realize(&seq(s)).unwrap() {
            RealizationResult::Realized(r) => r,
            other => panic!("{s}: {other:?}"),
        }
    }

    #[test]
    fn wheel_for_four_three_four() {
        let r = realized("(4,3^4)");
        assert_eq!(r.graph.degree_list(), vec![4, 3, 3, 3, 3]);
        assert!(r.graph.find_even_wheel(4).is_some());
    }

    #[test]
    fn exceptions_pass_through() {
        assert!(matches!(
            realize(&seq("3^6")).unwrap(),
            RealizationResult::Exception(Classification::ExceptionN3 { n: 6 })
        ));
        assert_eq!(
            realize(&seq("(4,1)")).unwrap(),
            RealizationResult::NotGraphic
        );
        assert!(matches!(
            realize(&seq("(4^2,3^6)")).unwrap(),
            RealizationResult::Unsupported(_)
        ));
    }

    #[test]
    fn fig1a_for_four_squared() {
        let r = realized("(4^2,3^4)");
        assert_eq!(r.graph, base_graph(BaseGraphId::Fig1a));
    }

    #[test]
    fn l31i_nine() {
        let c = realize_family(&seq("(7,4,3^7)"), Family::L31I).unwrap();
        assert_eq!(c.graph.degree_sequence().unwrap(), seq("(7,4,3^7)"));
        assert!(is_z3_connected(&c.graph).unwrap());
    }

    #[test]
    fn hypothesis_checked() {
        assert!(matches!(
            realize_family(&seq("(5,3^5)"), Family::L31II),
            Err(BuildError::Hypothesis { .. })
        ));
    }

    #[test]
    fn inverse_lift_case() {
        let c = realize_family(&seq("(7,4^5,3^5)"), Family::T15).unwrap();
        assert_eq!(c.lifts.len(), 1);
        assert!(is_z3_connected(&c.graph).unwrap());
    }

    #[test]
    fn deterministic() {
        let a = realized("(6,4^5,3^4)");
        let b = realized("(6,4^5,3^4)");
        assert_eq!(a.graph.edges(), b.graph.edges());
        assert_eq!(a.trace, b.trace);
    }
}
