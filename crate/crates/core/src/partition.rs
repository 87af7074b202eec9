//! Partitions, compositions, and exhaustive enumeration of both.

use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::limits::Limits;

/// A partition of `n`: pile sizes in nonincreasing order, all positive.
///
/// The empty partition is the unique partition of 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

/// Sorts `raw` nonincreasingly and drops zero entries.
pub fn normalize(raw: &[u32]) -> Partition {
    let mut parts: Vec<u32> = raw.iter().copied().filter(|&p| p > 0).collect();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    Partition { parts }
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from parts that are already canonical.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("partition parts must be positive"));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::invalid("partition parts must be nonincreasing"));
        }
        Ok(Partition { parts })
    }

    /// Caller guarantees the parts are positive and nonincreasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: u32) -> Self {
        Partition {
            parts: (1..=k).rev().collect(),
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.parts
    }

    /// Total number of cards.
    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of piles.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Size of the largest pile, 0 for the empty partition.
    pub fn largest(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Transposes the Young diagram: part `i` of the result counts the
    /// parts of `self` that are at least `i`.
    pub fn conjugate(&self) -> Partition {
        let width = self.largest();
        let parts = (1..=width)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Sum of `i + j` over the boxes `(i, j)` of the Young diagram, with
    /// pile index `i` and card index `j` both counted from 1.
    pub fn potential_energy(&self) -> u64 {
        let mut energy = 0u64;
        for (row, &len) in self.parts.iter().enumerate() {
            let i = row as u64 + 1;
            for j in 1..=len as u64 {
                energy += i + j;
            }
        }
        energy
    }

    /// Whether the box `(i, j)` (both 1-based) lies in the diagram.
    pub fn contains_cell(&self, i: usize, j: u32) -> bool {
        i >= 1 && self.parts.get(i - 1).is_some_and(|&p| p >= j)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated nonnegative integers and normalizes them, so
    /// `"3,5,2"` yields `(5,3,2)`.
    fn from_str(s: &str) -> Result<Self> {
        Ok(normalize(&parse_parts(s)?))
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Partition", 2)?;
        st.serialize_field("parts", &self.parts)?;
        st.serialize_field("n", &self.n())?;
        st.end()
    }
}

#[derive(Deserialize)]
struct PartsRepr {
    parts: Vec<u32>,
    n: Option<u32>,
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PartsRepr::deserialize(deserializer)?;
        let p = Partition::new(repr.parts).map_err(serde::de::Error::custom)?;
        if let Some(n) = repr.n {
            if n != p.n() {
                return Err(serde::de::Error::custom(format!(
                    "declared n = {n} but parts sum to {}",
                    p.n()
                )));
            }
        }
        Ok(p)
    }
}

/// Which family of ordered states a [`Composition`] belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CompositionKind {
    /// All parts positive (Carolina).
    Strict,
    /// First and last parts positive, interior zeros allowed (Montreal).
    Montreal,
    /// Fixed length, zeros allowed anywhere (seats around a table).
    Circular,
}

/// An ordered sequence of pile sizes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
    kind: CompositionKind,
}

impl Composition {
    pub fn strict(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::invalid("strict composition parts must be positive"));
        }
        Ok(Composition {
            parts,
            kind: CompositionKind::Strict,
        })
    }

    /// A Montreal position. The endpoints must be positive; use
    /// [`Composition::montreal_canonical`] to strip boundary zeros instead.
    pub fn montreal(parts: Vec<u32>) -> Result<Self> {
        if parts.first() == Some(&0) || parts.last() == Some(&0) {
            return Err(Error::invalid(
                "montreal composition endpoints must be positive",
            ));
        }
        Ok(Composition {
            parts,
            kind: CompositionKind::Montreal,
        })
    }

    /// Strips leading and trailing zeros, keeping interior ones.
    pub fn montreal_canonical(mut parts: Vec<u32>) -> Self {
        let end = parts.iter().rposition(|&p| p > 0).map_or(0, |i| i + 1);
        parts.truncate(end);
        let start = parts.iter().position(|&p| p > 0).unwrap_or(parts.len());
        parts.drain(..start);
        Composition {
            parts,
            kind: CompositionKind::Montreal,
        }
    }

    pub fn circular(parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::invalid(
                "circular composition needs at least one seat",
            ));
        }
        Ok(Composition {
            parts,
            kind: CompositionKind::Circular,
        })
    }

    pub(crate) fn from_raw(parts: Vec<u32>, kind: CompositionKind) -> Self {
        Composition { parts, kind }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn kind(&self) -> CompositionKind {
        self.kind
    }

    pub fn n(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The multiset of nonzero parts as a partition.
    pub fn to_partition(&self) -> Partition {
        normalize(&self.parts)
    }

    /// Parses the comma-separated text form for the given kind.
    pub fn parse(s: &str, kind: CompositionKind) -> Result<Self> {
        let parts = parse_parts(s)?;
        match kind {
            CompositionKind::Strict => Composition::strict(parts),
            CompositionKind::Montreal => Composition::montreal(parts),
            CompositionKind::Circular => Composition::circular(parts),
        }
        .map_err(|e| match e {
            Error::Invalid(msg) => Error::Parse(format!("{s:?}: {msg}")),
            other => other,
        })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.parts)
    }
}

impl Serialize for Composition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Composition", 2)?;
        st.serialize_field("parts", &self.parts)?;
        st.serialize_field("n", &self.n())?;
        st.end()
    }
}

pub(crate) fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Parses `"4,3,3"`-style text. Whitespace around entries is ignored and
/// the empty string parses as no parts.
pub fn parse_parts(s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            if tok.starts_with('-') {
                return Err(Error::parse(format!("negative entry {tok:?}")));
            }
            tok.parse::<u32>()
                .map_err(|_| Error::parse(format!("malformed entry {tok:?}")))
        })
        .collect()
}

/// `n = (k-1)k/2 + r` with `0 < r <= k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct TriangularDecomposition {
    pub k: u32,
    pub r: u32,
}

impl TriangularDecomposition {
    pub fn is_triangular(&self) -> bool {
        self.r == self.k
    }
}

pub fn triangular(k: u32) -> u64 {
    k as u64 * (k as u64 + 1) / 2
}

/// The unique `(k, r)` with `n = (k-1)k/2 + r` and `0 < r <= k`.
pub fn triangular_decompose(n: u64) -> Result<TriangularDecomposition> {
    if n == 0 {
        return Err(Error::invalid("triangular decomposition needs n >= 1"));
    }
    // floor estimate, then walk to the bracket (k-1)k/2 < n <= k(k+1)/2
    let mut k = (((8.0 * n as f64 + 1.0).sqrt() - 1.0) / 2.0)
        .floor()
        .max(1.0) as u32;
    while triangular(k) < n {
        k += 1;
    }
    while k > 1 && triangular(k - 1) >= n {
        k -= 1;
    }
    let r = (n - triangular(k - 1)) as u32;
    Ok(TriangularDecomposition { k, r })
}

/// Streams the partitions of `n` in reverse-lexicographic order, starting
/// at `(n)` and ending at `(1,...,1)`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Partitions {
    pub fn new(n: u32) -> Self {
        let first = if n == 0 { Vec::new() } else { vec![n] };
        Partitions {
            current: Some(first),
        }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        // successor: decrement the rightmost part > 1, refill greedily
        if let Some(i) = cur.iter().rposition(|&p| p > 1) {
            let mut next = cur[..i].to_vec();
            let x = cur[i] - 1;
            let mut rem = 1 + (cur.len() - i - 1) as u32 + x;
            while rem >= x {
                next.push(x);
                rem -= x;
            }
            if rem > 0 {
                next.push(rem);
            }
            self.current = Some(next);
        }
        Some(Partition::from_sorted(cur))
    }
}

/// Every partition of `n`, in reverse-lexicographic order.
pub fn enumerate_partitions(n: u32, limits: &Limits) -> Result<Vec<Partition>> {
    if n > limits.max_partition_n {
        return Err(Error::BoundExceeded {
            what: "partition enumeration size",
            requested: n as u64,
            limit: limits.max_partition_n as u64,
        });
    }
    Ok(Partitions::new(n).collect())
}

/// Every strict composition of `n` (2^(n-1) of them for `n >= 1`), in
/// reverse-lexicographic order.
pub fn enumerate_compositions(n: u32, limits: &Limits) -> Result<Vec<Composition>> {
    if n > limits.max_composition_n {
        return Err(Error::BoundExceeded {
            what: "composition enumeration size",
            requested: n as u64,
            limit: limits.max_composition_n as u64,
        });
    }
    let mut out = Vec::with_capacity(if n == 0 { 1 } else { 1 << (n - 1) });
    let mut prefix = Vec::new();
    compositions_into(n, &mut prefix, &mut out);
    Ok(out)
}

fn compositions_into(rem: u32, prefix: &mut Vec<u32>, out: &mut Vec<Composition>) {
    if rem == 0 {
        out.push(Composition::from_raw(
            prefix.clone(),
            CompositionKind::Strict,
        ));
        return;
    }
    for first in (1..=rem).rev() {
        prefix.push(first);
        compositions_into(rem - first, prefix, out);
        prefix.pop();
    }
}

/// All length-`len` sequences of nonnegative integers summing to `n`,
/// in reverse-lexicographic order.
pub fn weak_compositions(n: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if len == 0 {
        if n == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut prefix = Vec::with_capacity(len);
    weak_into(n, len, &mut prefix, &mut out);
    out
}

fn weak_into(rem: u32, len: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() + 1 == len {
        prefix.push(rem);
        out.push(prefix.clone());
        prefix.pop();
        return;
    }
    for first in (0..=rem).rev() {
        prefix.push(first);
        weak_into(rem - first, len, prefix, out);
        prefix.pop();
    }
}

/// Montreal positions of `n` with at most `max_len` entries: positive
/// endpoints, nonnegative interior.
pub fn enumerate_montreal(n: u32, max_len: usize) -> Vec<Composition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Composition::from_raw(Vec::new(), CompositionKind::Montreal));
        return out;
    }
    if max_len >= 1 {
        out.push(Composition::from_raw(vec![n], CompositionKind::Montreal));
    }
    for len in 2..=max_len {
        for first in (1..=n).rev() {
            for last in 1..=n - first {
                for mut middle in weak_compositions(n - first - last, len - 2) {
                    middle.insert(0, first);
                    middle.push(last);
                    out.push(Composition::from_raw(middle, CompositionKind::Montreal));
                }
            }
        }
    }
    out
}
