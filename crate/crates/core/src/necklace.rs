//! Closed-form counting of Bulgarian cycles via binary necklaces, and the
//! map from minimal-energy states to their necklaces.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{triangular, triangular_decompose, Partition};

/// Largest `n` accepted by [`partition_count`]; p(200) still fits in a u64.
pub const PARTITION_COUNT_MAX: u32 = 200;

/// Euler's totient: the number of integers in `1..=d` coprime to `d`.
pub fn euler_phi(d: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::invalid("euler_phi is undefined at 0"));
    }
    let mut rem = d;
    let mut phi = d;
    let mut q = 2;
    while q * q <= rem {
        if rem.is_multiple_of(q) {
            while rem.is_multiple_of(q) {
                rem /= q;
            }
            phi -= phi / q;
        }
        q += 1;
    }
    if rem > 1 {
        phi -= phi / rem;
    }
    Ok(phi)
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Exact `C(n, k)`, or `None` on u64 overflow.
pub fn binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) at every step
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    u64::try_from(acc).ok()
}

/// Number of components of the Bulgarian solitaire graph on partitions of
/// `n`: binary necklaces of length `k` with `r` black beads, where
/// `n = (k-1)k/2 + r`, counted up to rotation.
pub fn necklace_count(n: u64) -> Result<u64> {
    let tri = triangular_decompose(n)?;
    let (k, r) = (tri.k as u64, tri.r as u64);
    let g = gcd(r, k);
    let mut sum: u128 = 0;
    for d in (1..=g).filter(|d| g.is_multiple_of(*d)) {
        let ways = binomial(k / d, r / d)
            .ok_or_else(|| Error::invalid(format!("binomial overflow for n = {n}")))?;
        sum += euler_phi(d)? as u128 * ways as u128;
    }
    assert_eq!(sum % k as u128, 0, "necklace sum not divisible by k = {k}");
    Ok((sum / k as u128) as u64)
}

/// p(n) by Euler's pentagonal-number recurrence.
pub fn partition_count(n: u32) -> Result<u64> {
    if n > PARTITION_COUNT_MAX {
        return Err(Error::BoundExceeded {
            what: "partition count argument",
            requested: n as u64,
            limit: PARTITION_COUNT_MAX as u64,
        });
    }
    let n = n as usize;
    let mut p = vec![0i128; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut total = 0i128;
        for j in 1.. {
            let g1 = j * (3 * j - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if j % 2 == 1 { 1 } else { -1 };
            total += sign * p[m - g1];
            let g2 = j * (3 * j + 1) / 2;
            if g2 <= m {
                total += sign * p[m - g2];
            }
        }
        p[m] = total;
    }
    Ok(p[n] as u64)
}

/// A cyclic binary string. Two necklaces compare equal when one is a
/// rotation of the other; [`Necklace::beads`] gives the raw reading.
#[derive(Debug, Clone)]
pub struct Necklace {
    beads: Vec<bool>,
}

impl Necklace {
    /// `true` is a black bead.
    pub fn new(beads: Vec<bool>) -> Self {
        Necklace { beads }
    }

    pub fn beads(&self) -> &[bool] {
        &self.beads
    }

    pub fn k(&self) -> usize {
        self.beads.len()
    }

    /// Number of black beads.
    pub fn r(&self) -> usize {
        self.beads.iter().filter(|&&b| b).count()
    }

    /// Moves every bead `shift` places forward: bead `i` ends up at
    /// `i + shift (mod k)`.
    pub fn rotated(&self, shift: usize) -> Necklace {
        let k = self.beads.len();
        if k == 0 {
            return self.clone();
        }
        let mut beads = vec![false; k];
        for (i, &b) in self.beads.iter().enumerate() {
            beads[(i + shift) % k] = b;
        }
        Necklace { beads }
    }

    /// The rotation that reads smallest with black ordered before white.
    pub fn canonical(&self) -> Vec<bool> {
        let k = self.beads.len();
        (0..k.max(1))
            .map(|s| {
                (0..k)
                    .map(|i| self.beads[(i + s) % k])
                    .collect::<Vec<bool>>()
            })
            // black first: compare on the negated beads
            .min_by(|a, b| {
                let na = a.iter().map(|&x| !x);
                let nb = b.iter().map(|&x| !x);
                na.cmp(nb)
            })
            .unwrap_or_default()
    }

    /// Smallest positive shift that maps the bead string onto itself.
    pub fn period(&self) -> usize {
        let k = self.beads.len();
        (1..=k)
            .find(|&s| {
                k.is_multiple_of(s) && (0..k).all(|i| self.beads[i] == self.beads[(i + s) % k])
            })
            .unwrap_or(k)
    }

    /// The raw bead string as `B`/`W` characters, without canonicalizing.
    pub fn raw_string(&self) -> String {
        self.beads
            .iter()
            .map(|&b| if b { 'B' } else { 'W' })
            .collect()
    }
}

impl PartialEq for Necklace {
    fn eq(&self, other: &Self) -> bool {
        self.beads.len() == other.beads.len() && self.canonical() == other.canonical()
    }
}

impl Eq for Necklace {}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.canonical() {
            f.write_str(if b { "B" } else { "W" })?;
        }
        Ok(())
    }
}

impl Serialize for Necklace {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Whether every level below `k` of the cradle is full and level `k + 1`
/// is empty, where `(k, r)` decomposes `n`. Level `t` holds the cells
/// `(i, j)` with `i + j - 1 = t`.
pub fn is_minimal_energy(lambda: &Partition) -> bool {
    let n = lambda.n() as u64;
    if n == 0 {
        return true;
    }
    let k = triangular_decompose(n).expect("n >= 1").k as usize;
    let level_full = |t: usize| (1..=t).all(|i| lambda.contains_cell(i, (t + 1 - i) as u32));
    let level_empty = |t: usize| (1..=t).all(|i| !lambda.contains_cell(i, (t + 1 - i) as u32));
    (1..k).all(level_full) && level_empty(k + 1)
}

/// Reads level `k` of a minimal-energy state: bead `i` (from 1) is black
/// when the cell `(i, k + 1 - i)` is in the diagram.
pub fn necklace_of_state(lambda: &Partition) -> Result<Necklace> {
    if lambda.is_empty() {
        return Err(Error::invalid("the empty partition has no necklace"));
    }
    if !is_minimal_energy(lambda) {
        return Err(Error::invalid(format!(
            "{lambda} is not a minimal-energy state"
        )));
    }
    let tri = triangular_decompose(lambda.n() as u64)?;
    let k = tri.k as usize;
    let beads: Vec<bool> = (1..=k)
        .map(|i| lambda.contains_cell(i, (k + 1 - i) as u32))
        .collect();
    debug_assert_eq!(
        beads.iter().filter(|&&b| b).count() as u64,
        lambda.n() as u64 - triangular(tri.k - 1)
    );
    Ok(Necklace { beads })
}

/// Inverse of [`necklace_of_state`]: the staircase of `k - 1` plus one
/// box on level `k` for each black bead.
pub fn state_of_necklace(beads: &[bool]) -> Partition {
    let k = beads.len();
    let parts: Vec<u32> = (1..=k)
        .map(|i| (k - i) as u32 + u32::from(beads[i - 1]))
        .collect();
    crate::partition::normalize(&parts)
}
