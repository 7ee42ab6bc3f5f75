//! Realizations of a degree sequence: one by the Havel–Hakimi procedure,
//! or all of them by backtracking, optionally up to isomorphism.

use std::collections::HashSet;

use crate::error::EnumerateError;
use crate::graph::Multigraph;
use crate::seqcore::{classify, erdos_gallai, DegreeSequence};
use crate::verifier::Oracle;

/// Largest sequence length `all_realizations` accepts.
pub const ENUMERATION_CAP: usize = 12;

/// One simple realization: repeatedly join the vertex with the smallest
/// remaining degree to the vertices with the largest remaining degrees.
/// Vertex `i` realizes `d_{i+1}`.
pub fn hakimi_realize(seq: &DegreeSequence) -> Result<Multigraph, EnumerateError> {
    let n = seq.len();
    let mut remaining: Vec<(usize, usize)> = seq.degrees().iter().copied().zip(0..n).collect();
    let mut edges = Vec::new();
    loop {
        remaining.retain(|e| e.0 > 0);
        remaining.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let Some((d, v)) = remaining.pop() else {
            break;
        };
        if d > remaining.len() {
            return Err(EnumerateError::NotGraphic);
        }
        for e in remaining.iter_mut().take(d) {
            edges.push((e.1.min(v), e.1.max(v)));
            e.0 -= 1;
        }
    }
    edges.sort_unstable();
    Ok(Multigraph::new(n, edges).expect("vertices in range"))
}

struct Frame {
    vertex: usize,
    need: usize,
    candidates: Vec<usize>,
    /// Indices into `candidates` currently applied.
    chosen: Option<Vec<usize>>,
}

/// Lazily generated realizations. Vertex `i` always realizes `d_{i+1}`.
pub struct RealizationStream {
    n: usize,
    residual: Vec<usize>,
    edges: Vec<(usize, usize)>,
    stack: Vec<Frame>,
    limit: Option<u64>,
    emitted: u64,
    generated: u64,
    seen: Option<HashSet<CanonicalForm>>,
}

impl RealizationStream {
    /// Labeled realizations produced so far, including ones dropped as
    /// isomorphic duplicates.
    pub fn generated(&self) -> u64 {
        self.generated
    }

    pub fn emitted(&self) -> u64 {
        self.emitted
    }

    fn frame(&self, vertex: usize) -> Frame {
        Frame {
            vertex,
            need: self.residual[vertex],
            candidates: ((vertex + 1)..self.n)
                .filter(|&j| self.residual[j] > 0)
                .collect(),
            chosen: None,
        }
    }

    fn next_labeled(&mut self) -> Option<Multigraph> {
        while let Some(top) = self.stack.last_mut() {
            let i = top.vertex;
            if let Some(prev) = &top.chosen {
                for &c in prev {
                    self.residual[top.candidates[c]] += 1;
                    self.edges.pop();
                }
                self.residual[i] = top.need;
            }
            let next = match &top.chosen {
                None => first_combination(top.need, top.candidates.len()),
                Some(prev) => next_combination(prev, top.candidates.len()),
            };
            let Some(comb) = next else {
                self.stack.pop();
                continue;
            };
            for &c in &comb {
                let j = top.candidates[c];
                self.residual[j] -= 1;
                self.edges.push((i, j));
            }
            self.residual[i] = 0;
            top.chosen = Some(comb);
            if !erdos_gallai(&self.residual[i + 1..]) {
                continue;
            }
            if i + 1 == self.n {
                self.generated += 1;
                let mut edges = self.edges.clone();
                edges.sort_unstable();
                return Some(Multigraph::new(self.n, edges).expect("vertices in range"));
            }
            let frame = self.frame(i + 1);
            self.stack.push(frame);
        }
        None
    }
}

impl Iterator for RealizationStream {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        if self.limit.is_some_and(|l| self.emitted >= l) {
            return None;
        }
        loop {
            let g = self.next_labeled()?;
            if let Some(seen) = &mut self.seen {
                if !seen.insert(canonical_form(&g)) {
                    continue;
                }
            }
            self.emitted += 1;
            return Some(g);
        }
    }
}

fn first_combination(k: usize, m: usize) -> Option<Vec<usize>> {
    (k <= m).then(|| (0..k).collect())
}

fn next_combination(prev: &[usize], m: usize) -> Option<Vec<usize>> {
    let k = prev.len();
    let mut c = prev.to_vec();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < m - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return Some(c);
        }
    }
    None
}

/// Every labeled simple realization of `seq` (or one per isomorphism class
/// with `dedup`), at most `limit` of them. A non-graphic sequence yields an
/// empty stream.
pub fn all_realizations(
    seq: &DegreeSequence,
    limit: Option<u64>,
    dedup: bool,
) -> Result<RealizationStream, EnumerateError> {
    let n = seq.len();
    if n > ENUMERATION_CAP {
        return Err(EnumerateError::CapExceeded {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut stream = RealizationStream {
        n,
        residual: seq.degrees().to_vec(),
        edges: Vec::new(),
        stack: Vec::new(),
        limit,
        emitted: 0,
        generated: 0,
        seen: dedup.then(HashSet::new),
    };
    if erdos_gallai(seq.degrees()) {
        let frame = stream.frame(0);
        stream.stack.push(frame);
    }
    Ok(stream)
}

/// Isomorphism-invariant encoding of a simple graph: the rows of the
/// adjacency matrix under a canonical vertex order, preceded by `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm(Vec<u32>);

/// Canonical form by color refinement with individualization, keeping the
/// lexicographically smallest matrix over all leaves of the search tree.
/// Multiplicities are ignored; at most 32 vertices.
pub fn canonical_form(g: &Multigraph) -> CanonicalForm {
    let n = g.n();
    assert!(n <= 32, "canonical form supports at most 32 vertices");
    let adj = g.adjacency_lists();
    let colors = refine(&adj, vec![0; n]);
    let mut best: Option<Vec<u32>> = None;
    search(&adj, colors, &mut best);
    let mut out = vec![n as u32];
    out.extend(best.unwrap_or_default());
    CanonicalForm(out)
}

/// Refines a coloring until stable. Colors are renumbered `0..k` by sorted
/// signature, which keeps the result invariant under relabeling.
fn refine(adj: &[Vec<usize>], mut colors: Vec<usize>) -> Vec<usize> {
    let n = adj.len();
    let mut cells = count_cells(&colors);
    loop {
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = adj[v].iter().map(|&w| colors[w]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
        sorted.sort();
        sorted.dedup();
        colors = sigs
            .iter()
            .map(|s| sorted.binary_search(&s).expect("signature present"))
            .collect();
        let now = sorted.len();
        if now == cells {
            return colors;
        }
        cells = now;
    }
}

fn count_cells(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn search(adj: &[Vec<usize>], colors: Vec<usize>, best: &mut Option<Vec<u32>>) {
    let n = adj.len();
    let mut sizes = vec![0usize; n];
    for &c in &colors {
        sizes[c] += 1;
    }
    let Some(target) = (0..n).find(|&c| sizes[c] > 1) else {
        let mut pos = vec![0usize; n];
        for (v, &c) in colors.iter().enumerate() {
            pos[c] = v;
        }
        let rows: Vec<u32> = pos
            .iter()
            .map(|&v| adj[v].iter().fold(0u32, |acc, &w| acc | 1 << colors[w]))
            .collect();
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    };
    for v in 0..n {
        if colors[v] != target {
            continue;
        }
        let split: Vec<usize> = (0..n)
            .map(|w| 2 * colors[w] + usize::from(colors[w] == target && w != v))
            .collect();
        search(adj, refine(adj, split), best);
    }
}

/// True iff every realization of the exception sequence `seq` fails to be
/// Z3-connected, checked over isomorphism classes.
pub fn verify_exception(seq: &DegreeSequence) -> Result<bool, EnumerateError> {
    verify_exception_with(seq, &Oracle::default())
}

pub fn verify_exception_with(
    seq: &DegreeSequence,
    oracle: &Oracle,
) -> Result<bool, EnumerateError> {
    if !classify(seq).is_exception() {
        return Err(EnumerateError::NotException(seq.to_string()));
    }
    if seq.len() > oracle.cap {
        return Err(EnumerateError::CapExceeded {
            n: seq.len(),
            cap: oracle.cap,
        });
    }
    for g in all_realizations(seq, None, true)? {
        if oracle.is_z3_connected(&g)? {
            return Ok(false);
        }
    }
    Ok(true)
}
