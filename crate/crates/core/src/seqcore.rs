//! Degree sequences: parsing, graphicality, residual sequences and
//! classification into exception families and construction routes.

use std::fmt;
use std::str::FromStr;

use crate::error::SequenceError;

/// A nonincreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeSequence {
    degrees: Vec<usize>,
}

impl DegreeSequence {
    /// Builds a sequence from arbitrary-order entries, sorting them
    /// nonincreasing. Entries must be positive and at least one is required.
    pub fn new(mut degrees: Vec<usize>) -> Result<Self, SequenceError> {
        if degrees.is_empty() {
            return Err(SequenceError::Empty);
        }
        if degrees.contains(&0) {
            return Err(SequenceError::ZeroDegree);
        }
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        Ok(DegreeSequence { degrees })
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }

    /// `d_i` with 1-based indexing, as the sequence is usually written.
    pub fn d(&self, i: usize) -> usize {
        self.degrees[i - 1]
    }

    pub fn max_degree(&self) -> usize {
        self.degrees[0]
    }

    pub fn min_degree(&self) -> usize {
        self.degrees[self.degrees.len() - 1]
    }

    pub fn sum(&self) -> usize {
        self.degrees.iter().sum()
    }

    pub fn count(&self, value: usize) -> usize {
        self.degrees.iter().filter(|&&d| d == value).count()
    }

    /// `(head, base^rest)` style constructor used throughout the builder.
    pub(crate) fn from_parts(parts: &[(usize, usize)]) -> Self {
        let mut degrees = Vec::new();
        for &(value, times) in parts {
            degrees.extend(std::iter::repeat_n(value, times));
        }
        DegreeSequence::new(degrees).expect("internal sequence must be valid")
    }
}

impl fmt::Display for DegreeSequence {
    /// Exponent notation: `(6,5,4^4,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        let mut first = true;
        let mut i = 0;
        while i < self.degrees.len() {
            let value = self.degrees[i];
            let mut j = i;
            while j < self.degrees.len() && self.degrees[j] == value {
                j += 1;
            }
            if !first {
                f.write_str(",")?;
            }
            first = false;
            if j - i == 1 {
                write!(f, "{value}")?;
            } else {
                write!(f, "{value}^{}", j - i)?;
            }
            i = j;
        }
        f.write_str(")")
    }
}

impl FromStr for DegreeSequence {
    type Err = SequenceError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_sequence(s)
    }
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn syntax(&self, expected: &'static str) -> SequenceError {
        SequenceError::Syntax {
            position: self.pos,
            expected,
        }
    }

    /// Returns the integer and the position it started at. A leading `-` is
    /// reported as a negative entry rather than a generic syntax error.
    fn int(&mut self) -> Result<(usize, usize), SequenceError> {
        self.skip_ws();
        let start = self.pos;
        if self.bytes.get(self.pos) == Some(&b'-') {
            return Err(SequenceError::Negative { position: start });
        }
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.syntax("integer"));
        }
        let text = std::str::from_utf8(&self.bytes[start..self.pos]).expect("ascii digits");
        let value = text
            .parse::<usize>()
            .map_err(|_| SequenceError::Overflow { position: start })?;
        Ok((value, start))
    }
}

/// Parses `['('] term (',' term)* [')']` with `term := INT ['^' INT]`.
///
/// Whitespace is ignored and the result is sorted nonincreasing, so the
/// input order does not matter.
pub fn parse_sequence(text: &str) -> Result<DegreeSequence, SequenceError> {
    let mut p = Parser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    if p.peek().is_none() {
        return Err(SequenceError::Empty);
    }
    let open = p.eat(b'(');
    if open && p.peek() == Some(b')') {
        return Err(SequenceError::Empty);
    }
    let mut degrees = Vec::new();
    loop {
        let (value, at) = p.int()?;
        if value == 0 {
            return Err(SequenceError::ZeroDegreeAt { position: at });
        }
        let mut times = 1;
        if p.eat(b'^') {
            let (exp, at) = p.int()?;
            if exp == 0 {
                return Err(SequenceError::ZeroExponent { position: at });
            }
            times = exp;
        }
        degrees.extend(std::iter::repeat_n(value, times));
        if !p.eat(b',') {
            break;
        }
    }
    if open && !p.eat(b')') {
        return Err(p.syntax("')'"));
    }
    if p.peek().is_some() {
        return Err(p.syntax(if open {
            "end of input"
        } else {
            "',' or end of input"
        }));
    }
    DegreeSequence::new(degrees)
}

/// Erdős–Gallai feasibility for an arbitrary (possibly unsorted, possibly
/// zero-containing) list of nonnegative degrees.
pub fn erdos_gallai(degrees: &[usize]) -> bool {
    let mut d: Vec<usize> = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    let n = d.len();
    if d.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut lhs = 0usize;
    for k in 1..=n {
        lhs += d[k - 1];
        let rhs = k * (k - 1) + d[k..].iter().map(|&x| x.min(k)).sum::<usize>();
        if lhs > rhs {
            return false;
        }
    }
    true
}

/// Result of deleting the last entry of a sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub sequence: DegreeSequence,
    /// Positions (0-based, in `sequence`) holding the decremented entries.
    pub decremented: Vec<usize>,
    /// `origin[p]` is the position in the parent sequence of new position `p`.
    pub origin: Vec<usize>,
}

/// Deletes `d_n` and decrements the `d_n` largest entries (earliest
/// positions on ties), re-sorting the result.
///
/// A residual containing a zero entry is not a [`DegreeSequence`] and is
/// reported as [`SequenceError::ResidualZero`].
pub fn residual(seq: &DegreeSequence) -> Result<Residual, SequenceError> {
    let n = seq.len();
    if n < 2 {
        return Err(SequenceError::ResidualTooShort);
    }
    let last = seq.min_degree();
    if last > n - 1 {
        return Err(SequenceError::ResidualTooLarge { last, n });
    }
    // (value, parent position, decremented)
    let mut entries: Vec<(usize, usize, bool)> = (0..n - 1)
        .map(|i| {
            let dec = i < last;
            (seq.degrees[i] - usize::from(dec), i, dec)
        })
        .collect();
    if entries.iter().any(|e| e.0 == 0) {
        return Err(SequenceError::ResidualZero);
    }
    // Stable sort keeps parent order among equal values.
    entries.sort_by_key(|e| std::cmp::Reverse(e.0));
    let decremented = entries
        .iter()
        .enumerate()
        .filter(|(_, e)| e.2)
        .map(|(p, _)| p)
        .collect();
    let origin = entries.iter().map(|e| e.1).collect();
    let sequence = DegreeSequence {
        degrees: entries.iter().map(|e| e.0).collect(),
    };
    Ok(Residual {
        sequence,
        decremented,
        origin,
    })
}

/// True iff some simple graph has this degree sequence, decided by
/// running the residual recursion down to the empty sequence.
pub fn is_graphic(seq: &DegreeSequence) -> bool {
    is_graphic_slice(seq.degrees())
}

fn is_graphic_slice(degrees: &[usize]) -> bool {
    if degrees.iter().sum::<usize>() % 2 == 1 {
        return false;
    }
    let mut d: Vec<usize> = degrees.iter().copied().filter(|&x| x > 0).collect();
    loop {
        d.sort_unstable_by(|a, b| b.cmp(a));
        while d.last() == Some(&0) {
            d.pop();
        }
        let Some(&last) = d.last() else {
            return true;
        };
        let n = d.len();
        if d[0] >= n {
            return false;
        }
        d.pop();
        for x in d.iter_mut().take(last) {
            *x -= 1;
        }
    }
}

/// The construction route that covers a sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    /// `d_1 = n - 1`.
    T12,
    /// `d_1 = n - 2`.
    L41,
    /// `d_1 = n - 3`.
    T14,
    /// `d_1 <= n - 4` and `d_{n-5} >= 4`.
    T15,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Route::T12 => "T12",
            Route::L41 => "L41",
            Route::T14 => "T14",
            Route::T15 => "T15",
        }
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Classification {
    NotGraphic,
    /// `(n-3, 3^{n-1})`.
    ExceptionN3 {
        n: usize,
    },
    /// `(k, 3^k)` with `k` odd.
    ExceptionOddK {
        k: usize,
    },
    /// `(k^2, 3^{k-1})` with `k` odd.
    ExceptionOddKSquare {
        k: usize,
    },
    Covered(Route),
    OutOfCoverage,
}

impl Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::NotGraphic => "NotGraphic",
            Classification::ExceptionN3 { .. } => "ExceptionN3",
            Classification::ExceptionOddK { .. } => "ExceptionOddK",
            Classification::ExceptionOddKSquare { .. } => "ExceptionOddKSquare",
            Classification::Covered(_) => "Covered",
            Classification::OutOfCoverage => "OutOfCoverage",
        }
    }

    pub fn route(&self) -> Option<Route> {
        match self {
            Classification::Covered(r) => Some(*r),
            _ => None,
        }
    }

    pub fn is_exception(&self) -> bool {
        matches!(
            self,
            Classification::ExceptionN3 { .. }
                | Classification::ExceptionOddK { .. }
                | Classification::ExceptionOddKSquare { .. }
        )
    }
}

/// Classifies with precedence NotGraphic > exceptions > Covered > OutOfCoverage.
pub fn classify(seq: &DegreeSequence) -> Classification {
    if !is_graphic(seq) {
        return Classification::NotGraphic;
    }
    let n = seq.len();
    let d = seq.degrees();
    if let Some(exc) = exception_of(d, n) {
        return exc;
    }
    if seq.min_degree() < 3 {
        return Classification::OutOfCoverage;
    }
    let d1 = seq.max_degree();
    if d1 + 1 == n {
        Classification::Covered(Route::T12)
    } else if d1 + 2 == n {
        Classification::Covered(Route::L41)
    } else if d1 + 3 == n {
        Classification::Covered(Route::T14)
    } else if n >= 6 && seq.d(n - 5) >= 4 {
        Classification::Covered(Route::T15)
    } else {
        Classification::OutOfCoverage
    }
}

fn exception_of(d: &[usize], n: usize) -> Option<Classification> {
    if n < 2 {
        return None;
    }
    // (n-3, 3^{n-1}); for n = 6 this is (3^6).
    if n >= 6 && d[0] == n - 3 && d[1..].iter().all(|&x| x == 3) {
        return Some(Classification::ExceptionN3 { n });
    }
    // (k, 3^k), k odd: n = k + 1.
    let k = n - 1;
    if k % 2 == 1 && d[0] == k && d[1..].iter().all(|&x| x == 3) {
        return Some(Classification::ExceptionOddK { k });
    }
    // (k^2, 3^{k-1}), k odd: n = k + 1.
    if k % 2 == 1 && k >= 3 && d[0] == k && d[1] == k && d[2..].iter().all(|&x| x == 3) {
        // k = 3 gives (3^4), already reported as ExceptionOddK.
        return Some(Classification::ExceptionOddKSquare { k });
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seq(s: &str) -> DegreeSequence {
        parse_sequence(s).unwrap()
    }

    #[test]
    fn parses_exponent_notation() {
        assert_eq!(seq("(6, 5, 4^4, 3)").degrees(), &[6, 5, 4, 4, 4, 4, 3]);
        assert_eq!(seq("3^4").degrees(), &[3, 3, 3, 3]);
        assert_eq!(seq(" 3 , 5,4 ").degrees(), &[5, 4, 3]);
        assert_eq!(seq("(3^2, 7, 3)").degrees(), &[7, 3, 3, 3]);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            parse_sequence("(4^0)"),
            Err(SequenceError::ZeroExponent { .. })
        ));
        assert!(matches!(
            parse_sequence("(0, 3)"),
            Err(SequenceError::ZeroDegreeAt { position: 1 })
        ));
        assert!(matches!(
            parse_sequence("(3, -2)"),
            Err(SequenceError::Negative { .. })
        ));
        assert!(matches!(parse_sequence(""), Err(SequenceError::Empty)));
        assert!(matches!(parse_sequence("()"), Err(SequenceError::Empty)));
        assert!(matches!(
            parse_sequence("(3,3"),
            Err(SequenceError::Syntax { position: 4, .. })
        ));
        assert!(matches!(
            parse_sequence("3,,3"),
            Err(SequenceError::Syntax { position: 2, .. })
        ));
        assert!(matches!(
            parse_sequence("3 3"),
            Err(SequenceError::Syntax { .. })
        ));
    }

    #[test]
    fn renders_canonically() {
        assert_eq!(seq("3, 4, 4, 6, 4, 4, 5").to_string(), "(6,5,4^4,3)");
        assert_eq!(seq("5").to_string(), "(5)");
        assert_eq!(seq("3^6").to_string(), "(3^6)");
    }

    #[test]
    fn graphicality_examples() {
        assert!(!is_graphic(&seq("3^5")));
        assert!(is_graphic(&seq("3^4")));
        assert!(is_graphic(&seq("(6,5,4^4,3)")));
        assert!(!is_graphic(&seq("(4,1)")));
        assert!(!is_graphic(&seq("(3,3,1,1)")));
    }

    #[test]
    fn residual_examples() {
        let r = residual(&seq("(6,5,4^4,3)")).unwrap();
        assert_eq!(r.sequence.degrees(), &[5, 4, 4, 4, 4, 3]);
        let r = residual(&seq("3^4")).unwrap();
        assert_eq!(r.sequence.degrees(), &[2, 2, 2]);
        assert_eq!(r.decremented, vec![0, 1, 2]);
        let r = residual(&seq("(5,4^4,3)")).unwrap();
        assert_eq!(r.sequence.degrees(), &[4, 4, 4, 3, 3]);
        // 5->4, 4->3, 4->3 decremented; the untouched 4s move ahead of the 3s.
        assert_eq!(r.origin, vec![0, 3, 4, 1, 2]);
        assert_eq!(r.decremented, vec![0, 3, 4]);
    }

    #[test]
    fn residual_errors() {
        assert!(matches!(
            residual(&seq("(3)")),
            Err(SequenceError::ResidualTooShort)
        ));
        assert!(matches!(
            residual(&seq("(3,3)")),
            Err(SequenceError::ResidualTooLarge { .. })
        ));
    }

    #[test]
    fn classification_examples() {
        assert_eq!(
            classify(&seq("3^4")),
            Classification::ExceptionOddK { k: 3 }
        );
        assert_eq!(
            classify(&seq("(4,3^6)")),
            Classification::ExceptionN3 { n: 7 }
        );
        assert_eq!(
            classify(&seq("(4,3^4)")),
            Classification::Covered(Route::T12)
        );
        assert_eq!(classify(&seq("3^6")), Classification::ExceptionN3 { n: 6 });
        assert_eq!(
            classify(&seq("(5,3^5)")),
            Classification::ExceptionOddK { k: 5 }
        );
        assert_eq!(
            classify(&seq("(5^2,3^4)")),
            Classification::ExceptionOddKSquare { k: 5 }
        );
        assert_eq!(classify(&seq("3^5")), Classification::NotGraphic);
        assert_eq!(classify(&seq("2^3")), Classification::OutOfCoverage);
        assert_eq!(
            classify(&seq("(4^2,3^4)")),
            Classification::Covered(Route::L41)
        );
        assert_eq!(
            classify(&seq("(5,5,3^6)")),
            Classification::Covered(Route::T14)
        );
        assert_eq!(
            classify(&seq("(6,4^5,3^4)")),
            Classification::Covered(Route::T15)
        );
        // d_1 <= n-4 but d_{n-5} = 3.
        assert_eq!(classify(&seq("(4^2,3^6)")), Classification::OutOfCoverage);
        // (k, 3^k) with k even is not an exception.
        assert_eq!(classify(&seq("(4^5)")), Classification::Covered(Route::T12));
    }
}
