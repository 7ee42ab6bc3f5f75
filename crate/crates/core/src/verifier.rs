//! Exact decision procedures for Z3-connectivity and 3-flowability.
//!
//! Everything runs on one dynamic program over `Z3^n`: starting from the
//! zero boundary, each edge `(u, v)` maps the reachable set `S` to
//! `{ s + a(χ_u - χ_v) : s ∈ S, a ∈ {1, 2} }`. After all edges, `S` is the
//! set of boundaries of nowhere-zero `Z3` assignments. Boundaries always sum
//! to zero, so the last coordinate is implied and states live in
//! `Z3^{n-1}`, stored as a bitset of `3^{n-1}` bits.

use crate::error::VerifyError;
use crate::graph::{Multigraph, Orientation};

pub const DEFAULT_ORACLE_CAP: usize = 14;

/// A vertex labeling by `Z3` summing to zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ZeroSumFunction {
    values: Vec<u8>,
}

impl ZeroSumFunction {
    /// Values are reduced mod 3 before the zero-sum check.
    pub fn new(values: Vec<u8>) -> Result<Self, VerifyError> {
        let values: Vec<u8> = values.into_iter().map(|x| x % 3).collect();
        if values.iter().map(|&x| x as usize).sum::<usize>() % 3 != 0 {
            return Err(VerifyError::NotZeroSum);
        }
        Ok(ZeroSumFunction { values })
    }

    pub fn zero(n: usize) -> Self {
        ZeroSumFunction { values: vec![0; n] }
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }

    pub fn negated(&self) -> Self {
        ZeroSumFunction {
            values: self.values.iter().map(|&x| (3 - x) % 3).collect(),
        }
    }
}

/// Edge values in `{1, 2}` relative to the reference orientation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowAssignment {
    values: Vec<u8>,
}

impl FlowAssignment {
    /// Returns `None` if some value is not 1 or 2.
    pub fn new(values: Vec<u8>) -> Option<Self> {
        values
            .iter()
            .all(|&x| x == 1 || x == 2)
            .then_some(FlowAssignment { values })
    }

    pub fn values(&self) -> &[u8] {
        &self.values
    }
}

/// `∂f(v) = Σ_{out} f(e) - Σ_{in} f(e)` in `Z3`, reference orientation.
pub fn boundary(g: &Multigraph, f: &FlowAssignment) -> Result<ZeroSumFunction, VerifyError> {
    if f.values.len() != g.edge_count() {
        return Err(VerifyError::SizeMismatch {
            got: f.values.len(),
            expected: g.edge_count(),
        });
    }
    let mut b = vec![0u8; g.n()];
    for (&(t, h), &a) in g.edges().iter().zip(&f.values) {
        b[t] = (b[t] + a) % 3;
        b[h] = (b[h] + 3 - a) % 3;
    }
    Ok(ZeroSumFunction { values: b })
}

/// Set of boundaries reachable by nowhere-zero assignments.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundaryReachSet {
    n: usize,
    bits: Bits,
}

impl BoundaryReachSet {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.bits.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Size of the zero-sum subgroup, `3^{n-1}`.
    pub fn capacity(&self) -> usize {
        self.bits.len
    }

    pub fn is_full(&self) -> bool {
        self.len() == self.capacity()
    }

    pub fn contains(&self, b: &ZeroSumFunction) -> bool {
        b.values.len() == self.n && self.bits.get(encode(&b.values))
    }

    /// Members in increasing state order.
    pub fn members(&self) -> Vec<ZeroSumFunction> {
        (0..self.bits.len)
            .filter(|&s| self.bits.get(s))
            .map(|s| ZeroSumFunction {
                values: decode(s, self.n),
            })
            .collect()
    }
}

/// Oracle configuration. The cap bounds the vertex count; exceeding it is an
/// error, never an approximation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Oracle {
    pub cap: usize,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle {
            cap: DEFAULT_ORACLE_CAP,
        }
    }
}

impl Oracle {
    pub fn with_cap(cap: usize) -> Self {
        Oracle { cap }
    }

    fn check(&self, g: &Multigraph) -> Result<(), VerifyError> {
        if g.n() > self.cap {
            return Err(VerifyError::CapExceeded {
                n: g.n(),
                cap: self.cap,
            });
        }
        Ok(())
    }

    pub fn reach_set(&self, g: &Multigraph) -> Result<BoundaryReachSet, VerifyError> {
        self.check(g)?;
        let n = g.n();
        let mut dp = Dp::new(n);
        let mut cur = Bits::new(dp.states);
        if n > 0 {
            cur.set(0);
        }
        for &(u, v) in g.edges() {
            cur = dp.step(&cur, u, v);
        }
        Ok(BoundaryReachSet { n, bits: cur })
    }

    pub fn is_z3_connected(&self, g: &Multigraph) -> Result<bool, VerifyError> {
        self.check(g)?;
        let n = g.n();
        if n == 0 || !g.is_connected() {
            return Ok(false);
        }
        if n == 1 {
            return Ok(true);
        }
        let mut dp = Dp::new(n);
        let mut cur = Bits::new(dp.states);
        cur.set(0);
        for &(u, v) in g.edges() {
            cur = dp.step(&cur, u, v);
            // A full set stays full under any further edge.
            if cur.count() == dp.states {
                return Ok(true);
            }
        }
        Ok(false)
    }

    pub fn solve_boundary(
        &self,
        g: &Multigraph,
        b: &ZeroSumFunction,
    ) -> Result<Option<FlowAssignment>, VerifyError> {
        self.check(g)?;
        if b.values.len() != g.n() {
            return Err(VerifyError::SizeMismatch {
                got: b.values.len(),
                expected: g.n(),
            });
        }
        if b.values.iter().map(|&x| x as usize).sum::<usize>() % 3 != 0 {
            return Err(VerifyError::NotZeroSum);
        }
        let n = g.n();
        if n == 0 {
            return Ok(Some(FlowAssignment { values: Vec::new() }));
        }
        let mut dp = Dp::new(n);
        let mut layers = Vec::with_capacity(g.edge_count() + 1);
        let mut first = Bits::new(dp.states);
        first.set(0);
        layers.push(first);
        for &(u, v) in g.edges() {
            let next = dp.step(layers.last().expect("nonempty"), u, v);
            layers.push(next);
        }
        let mut target = encode(&b.values);
        if !layers[g.edge_count()].get(target) {
            return Ok(None);
        }
        let mut values = vec![0u8; g.edge_count()];
        for (i, &(u, v)) in g.edges().iter().enumerate().rev() {
            let prev = &layers[i];
            let mut chosen = None;
            for a in [1u8, 2] {
                // Undo +a at u and -a at v.
                let s = dp.add(target, u, 3 - a);
                let s = dp.add(s, v, a);
                if prev.get(s) {
                    chosen = Some((a, s));
                    break;
                }
            }
            let (a, s) = chosen.expect("reachable state has a predecessor");
            values[i] = a;
            target = s;
        }
        debug_assert_eq!(target, 0);
        Ok(Some(FlowAssignment { values }))
    }

    /// An orientation with `out - in ≡ 0 (mod 3)` everywhere, read off a
    /// nowhere-zero flow: value 1 keeps the reference direction and value 2
    /// (that is, -1) reverses it.
    pub fn has_modular_3_orientation(
        &self,
        g: &Multigraph,
    ) -> Result<Option<Orientation>, VerifyError> {
        let flow = self.solve_boundary(g, &ZeroSumFunction::zero(g.n()))?;
        Ok(flow.map(|f| Orientation {
            forward: f.values.iter().map(|&a| a == 1).collect(),
        }))
    }

    pub fn is_3_flowable(&self, g: &Multigraph) -> Result<bool, VerifyError> {
        Ok(self
            .solve_boundary(g, &ZeroSumFunction::zero(g.n()))?
            .is_some())
    }
}

pub fn is_z3_connected(g: &Multigraph) -> Result<bool, VerifyError> {
    Oracle::default().is_z3_connected(g)
}

pub fn solve_boundary(
    g: &Multigraph,
    b: &ZeroSumFunction,
) -> Result<Option<FlowAssignment>, VerifyError> {
    Oracle::default().solve_boundary(g, b)
}

pub fn has_modular_3_orientation(g: &Multigraph) -> Result<Option<Orientation>, VerifyError> {
    Oracle::default().has_modular_3_orientation(g)
}

pub fn is_3_flowable(g: &Multigraph) -> Result<bool, VerifyError> {
    Oracle::default().is_3_flowable(g)
}

pub fn reach_set(g: &Multigraph) -> Result<BoundaryReachSet, VerifyError> {
    Oracle::default().reach_set(g)
}

/// State index of the first `n - 1` coordinates, base 3, coordinate 0 least
/// significant.
fn encode(values: &[u8]) -> usize {
    let k = values.len().saturating_sub(1);
    values[..k]
        .iter()
        .rev()
        .fold(0usize, |acc, &x| acc * 3 + x as usize)
}

fn decode(mut s: usize, n: usize) -> Vec<u8> {
    let mut values = vec![0u8; n];
    let mut sum = 0u8;
    for v in values.iter_mut().take(n.saturating_sub(1)) {
        *v = (s % 3) as u8;
        sum = (sum + *v) % 3;
        s /= 3;
    }
    if n > 0 {
        values[n - 1] = (3 - sum) % 3;
    }
    values
}

struct Dp {
    pow3: Vec<usize>,
    /// Index of the implied coordinate.
    last: usize,
    states: usize,
}

impl Dp {
    fn new(n: usize) -> Self {
        let k = n.saturating_sub(1);
        let pow3: Vec<usize> = (0..=k).map(|i| 3usize.pow(i as u32)).collect();
        Dp {
            states: pow3[k],
            pow3,
            last: k,
        }
    }

    /// Adds `a` to coordinate `v` of state `s`.
    #[inline]
    fn add(&self, s: usize, v: usize, a: u8) -> usize {
        if v == self.last {
            return s;
        }
        let p = self.pow3[v];
        let d = (s / p) % 3;
        let nd = (d + a as usize) % 3;
        s + nd * p - d * p
    }

    fn step(&mut self, cur: &Bits, u: usize, v: usize) -> Bits {
        let mut next = Bits::new(self.states);
        for s in cur.iter_ones() {
            // a = 1: +1 at u, -1 at v; a = 2: +2 at u, -2 at v.
            let s1 = self.add(self.add(s, u, 1), v, 2);
            let s2 = self.add(self.add(s, u, 2), v, 1);
            next.set(s1);
            next.set(s2);
        }
        next
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Bits {
    words: Vec<u64>,
    len: usize,
}

impl Bits {
    fn new(len: usize) -> Self {
        Bits {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    #[inline]
    fn set(&mut self, i: usize) {
        self.words[i >> 6] |= 1u64 << (i & 63);
    }

    #[inline]
    fn get(&self, i: usize) -> bool {
        i < self.len && self.words[i >> 6] & (1u64 << (i & 63)) != 0
    }

    fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }
}
