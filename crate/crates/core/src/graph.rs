//! Loop-free multigraphs with a reference orientation, and the structural
//! operations used by the constructions and certificates.
//!
//! Edges are identified by index. Parallel edges are distinct entries of the
//! edge list, and each entry `(tail, head)` fixes the reference direction.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::error::GraphError;
use crate::seqcore::DegreeSequence;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// Per-edge choice: `true` keeps the reference direction, `false` reverses it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub forward: Vec<bool>,
}

impl Orientation {
    /// `out - in` at every vertex under this orientation.
    pub fn net_outdegree(&self, g: &Multigraph) -> Vec<i64> {
        let mut net = vec![0i64; g.n()];
        for (&(t, h), &fw) in g.edges().iter().zip(&self.forward) {
            let (t, h) = if fw { (t, h) } else { (h, t) };
            net[t] += 1;
            net[h] -= 1;
        }
        net
    }
}

/// An even wheel located inside a graph: `center` joined to every vertex of
/// the cycle `rim` (listed in cycle order).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WheelEmbedding {
    pub center: usize,
    pub rim: Vec<usize>,
}

impl WheelEmbedding {
    pub fn vertices(&self) -> Vec<usize> {
        let mut v = vec![self.center];
        v.extend(&self.rim);
        v
    }
}

pub const DEFAULT_RIM_CAP: usize = 8;

impl Multigraph {
    /// Builds a multigraph on vertices `0..n`. Parallel edges are allowed,
    /// loops are not.
    pub fn new(n: usize, edges: Vec<(usize, usize)>) -> Result<Self, GraphError> {
        for &(u, v) in &edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::OutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
        }
        Ok(Multigraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        Multigraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Multigraph { n, edges }
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut edges = Vec::new();
        for u in 0..a {
            for v in 0..b {
                edges.push((u, a + v));
            }
        }
        Multigraph { n: a + b, edges }
    }

    /// Cycle `0-1-...-(n-1)-0`. For `n = 2` this is a pair of parallel edges.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 2, "cycle needs at least two vertices");
        let edges = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Multigraph { n, edges }
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|i| (i - 1, i)).collect();
        Multigraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn add_vertex(&mut self) -> usize {
        self.n += 1;
        self.n - 1
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(GraphError::Loop(u));
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    /// Removes one copy of the edge `uv` (the lowest-indexed one, either
    /// direction) and returns its former index.
    pub fn remove_edge_between(&mut self, u: usize, v: usize) -> Result<usize, GraphError> {
        let idx = self
            .edge_index_between(u, v)
            .ok_or(GraphError::MissingEdge(u, v))?;
        self.edges.remove(idx);
        Ok(idx)
    }

    pub fn edge_index_between(&self, u: usize, v: usize) -> Option<usize> {
        self.edges
            .iter()
            .position(|&(a, b)| (a == u && b == v) || (a == v && b == u))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    /// Degrees sorted nonincreasing; zero entries are kept.
    pub fn degree_list(&self) -> Vec<usize> {
        let mut d = self.degrees();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// The degree sequence, or `None` when some vertex is isolated.
    pub fn degree_sequence(&self) -> Option<DegreeSequence> {
        DegreeSequence::new(self.degrees()).ok()
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.edges
            .iter()
            .filter(|&&(a, b)| (a == u && b == v) || (a == v && b == u))
            .count()
    }

    /// `n x n` matrix of edge multiplicities.
    pub fn multiplicity_matrix(&self) -> Vec<Vec<usize>> {
        let mut m = vec![vec![0; self.n]; self.n];
        for &(u, v) in &self.edges {
            m[u][v] += 1;
            m[v][u] += 1;
        }
        m
    }

    /// Distinct neighbors, sorted.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let set: BTreeSet<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        set.into_iter().collect()
    }

    pub fn adjacency_lists(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        adj
    }

    pub fn is_simple(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|&(u, v)| seen.insert((u.min(v), u.max(v))))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let adj = self.adjacency_lists();
        let mut seen = vec![false; self.n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Merges `set` into one vertex, deleting edges inside it.
    ///
    /// The merged vertex takes the position of the smallest member; the
    /// remaining vertices keep their relative order. Returns the contracted
    /// graph and the map old vertex -> new vertex.
    pub fn contract(&self, set: &[usize]) -> Result<(Multigraph, Vec<usize>), GraphError> {
        if set.is_empty() {
            return Err(GraphError::EmptySet);
        }
        let mut inside = vec![false; self.n];
        for &v in set {
            if v >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            inside[v] = true;
        }
        let rep = *set.iter().min().expect("nonempty");
        let mut map = vec![0; self.n];
        let mut next = 0;
        for v in 0..self.n {
            if inside[v] && v != rep {
                continue;
            }
            map[v] = next;
            next += 1;
        }
        for v in 0..self.n {
            if inside[v] {
                map[v] = map[rep];
            }
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| !(inside[u] && inside[v]))
            .map(|&(u, v)| (map[u], map[v]))
            .collect();
        Ok((Multigraph { n: next, edges }, map))
    }

    /// `G[X]`, relabeled so that new vertex `i` is the `i`-th smallest member
    /// of `set`. Returns the subgraph and the sorted member list.
    pub fn induced_subgraph(&self, set: &[usize]) -> Result<(Multigraph, Vec<usize>), GraphError> {
        let mut members: Vec<usize> = set.to_vec();
        members.sort_unstable();
        members.dedup();
        let mut map = vec![usize::MAX; self.n];
        for (i, &v) in members.iter().enumerate() {
            if v >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: v,
                    n: self.n,
                });
            }
            map[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| map[u] != usize::MAX && map[v] != usize::MAX)
            .map(|&(u, v)| (map[u], map[v]))
            .collect();
        Ok((
            Multigraph {
                n: members.len(),
                edges,
            },
            members,
        ))
    }

    /// `G_[uv,uw]`: removes one copy each of `uv` and `uw` and appends `vw`.
    pub fn lift(&self, u: usize, v: usize, w: usize) -> Result<Multigraph, GraphError> {
        for x in [u, v, w] {
            if x >= self.n {
                return Err(GraphError::OutOfRange {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        if v == w {
            return Err(GraphError::SameEndpoints(v));
        }
        if u == v || u == w {
            return Err(GraphError::Loop(u));
        }
        let mut g = self.clone();
        g.remove_edge_between(u, v)?;
        g.remove_edge_between(u, w)?;
        g.edges.push((v, w));
        Ok(g)
    }

    /// `G_(v,v1)`: deletes the 3-vertex `v` and joins its two neighbors other
    /// than `v1`. Vertices above `v` shift down by one.
    pub fn split_three_vertex(&self, v: usize, v1: usize) -> Result<Multigraph, GraphError> {
        if v >= self.n {
            return Err(GraphError::OutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        let mut nbrs: Vec<usize> = self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        if nbrs.len() != 3 {
            return Err(GraphError::NotThreeVertex {
                vertex: v,
                degree: nbrs.len(),
            });
        }
        let pos = nbrs
            .iter()
            .position(|&x| x == v1)
            .ok_or(GraphError::NotNeighbor {
                vertex: v,
                neighbor: v1,
            })?;
        nbrs.remove(pos);
        let (a, b) = (nbrs[0], nbrs[1]);
        if a == b {
            return Err(GraphError::Loop(a));
        }
        let shift = |x: usize| if x > v { x - 1 } else { x };
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .filter(|&&(x, y)| x != v && y != v)
            .map(|&(x, y)| (shift(x), shift(y)))
            .collect();
        edges.push((shift(a), shift(b)));
        Ok(Multigraph {
            n: self.n - 1,
            edges,
        })
    }

    /// Some even wheel with rim length in `4..=rim_cap`, searching hubs in
    /// increasing order and shorter rims first.
    pub fn find_even_wheel(&self, rim_cap: usize) -> Option<WheelEmbedding> {
        let adj = self.adjacency_lists();
        let mut len = 4;
        while len <= rim_cap {
            for center in 0..self.n {
                let nbrs = &adj[center];
                if nbrs.len() < len {
                    continue;
                }
                if let Some(rim) = cycle_in_subset(&adj, nbrs, len) {
                    return Some(WheelEmbedding { center, rim });
                }
            }
            len += 2;
        }
        None
    }

    /// Every edge lies on a cycle of length at most 3, and those short
    /// cycles link all edges through shared edges.
    pub fn is_triangularly_connected(&self) -> bool {
        let m = self.edges.len();
        if m == 0 {
            return false;
        }
        let mut uf = UnionFind::new(m);
        let mut covered = vec![false; m];
        let mut between = vec![vec![Vec::new(); self.n]; self.n];
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            between[u][v].push(i);
            between[v][u].push(i);
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                let group = &between[u][v];
                if group.len() >= 2 {
                    for &e in group {
                        covered[e] = true;
                        uf.union(group[0], e);
                    }
                }
            }
        }
        for u in 0..self.n {
            for v in u + 1..self.n {
                if between[u][v].is_empty() {
                    continue;
                }
                for w in v + 1..self.n {
                    if between[u][w].is_empty() || between[v][w].is_empty() {
                        continue;
                    }
                    let first = between[u][v][0];
                    for group in [&between[u][v], &between[u][w], &between[v][w]] {
                        for &e in group {
                            covered[e] = true;
                            uf.union(first, e);
                        }
                    }
                }
            }
        }
        if covered.iter().any(|c| !c) {
            return false;
        }
        let root = uf.find(0);
        (1..m).all(|e| uf.find(e) == root)
    }

    /// Vertex-disjoint union; `other`'s vertices are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Multigraph {
        let shift = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        Multigraph {
            n: self.n + other.n,
            edges,
        }
    }

    /// Applies a vertex permutation: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Multigraph {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| (perm[u], perm[v]))
            .collect();
        Multigraph { n: self.n, edges }
    }

    /// Same graph with every edge written `(min, max)` and the list sorted.
    pub fn normalized(&self) -> Multigraph {
        let mut edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(u, v)| (u.min(v), u.max(v)))
            .collect();
        edges.sort_unstable();
        Multigraph { n: self.n, edges }
    }

    /// `n m` header followed by one `tail head` line per edge.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.edges.len());
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Multigraph, GraphError> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let parse_pair = |line: usize, l: &str, what: &str| -> Result<(usize, usize), GraphError> {
            let mut it = l.split_whitespace();
            let a = it.next();
            let b = it.next();
            match (a, b, it.next()) {
                (Some(a), Some(b), None) => {
                    let a = a.parse::<usize>().map_err(|e| GraphError::Parse {
                        line,
                        message: format!("{what}: {e}"),
                    })?;
                    let b = b.parse::<usize>().map_err(|e| GraphError::Parse {
                        line,
                        message: format!("{what}: {e}"),
                    })?;
                    Ok((a, b))
                }
                _ => Err(GraphError::Parse {
                    line,
                    message: format!("expected two integers ({what})"),
                }),
            }
        };
        let (line, header) = lines.next().ok_or(GraphError::Parse {
            line: 1,
            message: "missing 'n m' header".into(),
        })?;
        let (n, m) = parse_pair(line, header, "header")?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let (u, v) = parse_pair(line, l, "edge")?;
            if u >= n || v >= n {
                return Err(GraphError::Parse {
                    line,
                    message: format!("endpoint out of range for {n} vertices"),
                });
            }
            if u == v {
                return Err(GraphError::Parse {
                    line,
                    message: format!("loop at vertex {u}"),
                });
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(GraphError::Parse {
                line: 1,
                message: format!("header declares {m} edges, found {}", edges.len()),
            });
        }
        Ok(Multigraph { n, edges })
    }

    /// Undirected DOT with vertices labeled `0..n`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            let _ = writeln!(out, "  {v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }
}

/// A cycle of exactly `len` vertices inside `subset` (simple adjacency),
/// returned in cycle order starting from its smallest vertex.
fn cycle_in_subset(adj: &[Vec<usize>], subset: &[usize], len: usize) -> Option<Vec<usize>> {
    let n = adj.len();
    let mut allowed = vec![false; n];
    for &v in subset {
        allowed[v] = true;
    }
    let mut path = Vec::with_capacity(len);
    let mut used = vec![false; n];
    // Start at the smallest vertex of the cycle; all others must be larger.
    for &start in subset {
        path.clear();
        path.push(start);
        used[start] = true;
        let found = extend_cycle(adj, &allowed, &mut used, &mut path, start, len);
        used[start] = false;
        if found {
            return Some(path);
        }
    }
    None
}

fn extend_cycle(
    adj: &[Vec<usize>],
    allowed: &[bool],
    used: &mut [bool],
    path: &mut Vec<usize>,
    start: usize,
    len: usize,
) -> bool {
    let last = *path.last().expect("nonempty path");
    if path.len() == len {
        return adj[last].binary_search(&start).is_ok();
    }
    for &w in &adj[last] {
        if !allowed[w] || used[w] || w < start {
            continue;
        }
        used[w] = true;
        path.push(w);
        if extend_cycle(adj, allowed, used, path, start, len) {
            used[w] = false;
            return true;
        }
        path.pop();
        used[w] = false;
    }
    false
}

pub(crate) struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    pub(crate) fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub(crate) fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
