//! Deterministic variants packaged as dynamical systems: a step map plus
//! the finite state space of a given card count.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::hash::Hash;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::operators::{
    austrian_step, bulgarian_step, carolina_step, dual_step, janetzko_step, montreal_step,
    multiplayer_step, servedio_yeh_step, AustrianState, MultiplayerState, PointerState,
};
use crate::partition::{
    enumerate_compositions, enumerate_montreal, enumerate_partitions, weak_compositions,
    Composition, CompositionKind, Partition, Partitions,
};

/// A deterministic map on a finite set of states of `n` cards.
pub trait System: Sync {
    type State: Clone + Eq + Hash + Ord + Send + Sync + fmt::Display + Serialize;

    /// Identifier used in reports, e.g. `"bulgarian"`.
    fn name(&self) -> String;

    fn step(&self, state: &Self::State) -> Self::State;

    /// Every state of `n` cards, in a deterministic order.
    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<Self::State>>;

    /// Orbit length guard for states of `n` cards.
    fn default_step_bound(&self, n: u32) -> usize {
        partition_step_bound(n)
    }
}

/// `4n^2`, never below 1.
pub fn partition_step_bound(n: u32) -> usize {
    (4 * (n as usize).pow(2)).max(1)
}

fn partitions_checked(n: u32, limits: &Limits) -> Result<Vec<Partition>> {
    limits.check_states(
        "partition state space",
        crate::necklace::partition_count(n)?,
    )?;
    enumerate_partitions(n, limits)
}

fn binomial(n: u64, k: u64) -> u64 {
    crate::necklace::binomial(n, k).unwrap_or(u64::MAX)
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Bulgarian;

impl System for Bulgarian {
    type State = Partition;

    fn name(&self) -> String {
        "bulgarian".into()
    }

    fn step(&self, state: &Partition) -> Partition {
        bulgarian_step(state)
    }

    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<Partition>> {
        partitions_checked(n, limits)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Dual;

impl System for Dual {
    type State = Partition;

    fn name(&self) -> String {
        "dual".into()
    }

    fn step(&self, state: &Partition) -> Partition {
        // the empty partition is the only input dual_step rejects
        dual_step(state).unwrap_or_default()
    }

    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<Partition>> {
        partitions_checked(n, limits)
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct Carolina;

impl System for Carolina {
    type State = Composition;

    fn name(&self) -> String {
        "carolina".into()
    }

    fn step(&self, state: &Composition) -> Composition {
        carolina_step(state)
    }

    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<Composition>> {
        let count = if n == 0 { 1 } else { 1u64 << (n - 1).min(63) };
        limits.check_states("composition state space", count)?;
        enumerate_compositions(n, limits)
    }

    fn default_step_bound(&self, n: u32) -> usize {
        let count = 1usize << n.saturating_sub(1).min(30);
        count.saturating_add(1).max(partition_step_bound(n))
    }
}

/// The Montreal positions of `n` cards are unbounded in length (interior
/// zero gaps can be arbitrarily long), so the state space used here is
/// the union of the orbits of all positions with at most `n` entries.
/// That set is closed under the step map.
#[derive(Debug, Clone, Copy, Default)]
pub struct Montreal;

impl System for Montreal {
    type State = Composition;

    fn name(&self) -> String {
        "montreal".into()
    }

    fn step(&self, state: &Composition) -> Composition {
        montreal_step(state)
    }

    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<Composition>> {
        let base = n.max(1) as u64;
        // sum over len <= n of C(n + len - 3, len - 2) = C(2n - 2, n - 1) + 1
        let approx = binomial(2 * base - 2, base - 1).saturating_add(1);
        limits.check_states("montreal base positions", approx)?;
        let mut seen: BTreeSet<Composition> = BTreeSet::new();
        for start in enumerate_montreal(n, n as usize) {
            let mut cur = start;
            while seen.insert(cur.clone()) {
                limits.check_states("montreal orbit closure", seen.len() as u64)?;
                cur = montreal_step(&cur);
            }
        }
        Ok(seen.into_iter().collect())
    }

    fn default_step_bound(&self, n: u32) -> usize {
        // no state count to bound by: positions of n cards are unbounded
        partition_step_bound(n).max(1 << 20)
    }
}

/// Austrian solitaire with machine life `L`.
#[derive(Debug, Clone, Copy)]
pub struct Austrian {
    life: u32,
}

impl Austrian {
    pub fn new(life: u32) -> Result<Self> {
        if life < 1 {
            return Err(Error::invalid("machine life L must be at least 1"));
        }
        Ok(Austrian { life })
    }

    pub fn life(&self) -> u32 {
        self.life
    }
}

impl System for Austrian {
    type State = AustrianState;

    fn name(&self) -> String {
        format!("austrian(L={})", self.life)
    }

    fn step(&self, state: &AustrianState) -> AustrianState {
        austrian_step(state).expect("life validated at construction")
    }

    /// Piles bounded by `L` with the bank below `L`.
    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<AustrianState>> {
        limits.check_states("austrian state space", crate::necklace::partition_count(n)?)?;
        let mut out = Vec::new();
        for bank in 0..self.life.min(n + 1) {
            for piles in Partitions::new(n - bank) {
                if piles.largest() <= self.life {
                    out.push(AustrianState {
                        piles,
                        bank,
                        life: self.life,
                    });
                }
            }
        }
        Ok(out)
    }
}

/// Bulgarian solitaire played simultaneously by `players` people.
#[derive(Debug, Clone, Copy)]
pub struct Multiplayer {
    players: usize,
}

impl Multiplayer {
    pub fn new(players: usize) -> Result<Self> {
        if players < 1 {
            return Err(Error::invalid("multiplayer game needs at least one player"));
        }
        Ok(Multiplayer { players })
    }
}

impl System for Multiplayer {
    type State = MultiplayerState;

    fn name(&self) -> String {
        format!("multiplayer(s={})", self.players)
    }

    fn step(&self, state: &MultiplayerState) -> MultiplayerState {
        multiplayer_step(state)
    }

    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<MultiplayerState>> {
        let counts: Vec<u64> = (0..=n)
            .map(crate::necklace::partition_count)
            .collect::<Result<_>>()?;
        let mut total = 0u64;
        for split in weak_compositions(n, self.players) {
            let combos = split
                .iter()
                .fold(1u64, |acc, &m| acc.saturating_mul(counts[m as usize]));
            total = total.saturating_add(combos);
        }
        limits.check_states("multiplayer state space", total)?;

        let mut out = Vec::with_capacity(total as usize);
        for split in weak_compositions(n, self.players) {
            let per_player: Vec<Vec<Partition>> = split
                .iter()
                .map(|&m| Partitions::new(m).collect())
                .collect();
            let mut chosen = Vec::with_capacity(self.players);
            push_products(&per_player, &mut chosen, &mut out);
        }
        Ok(out)
    }

    fn default_step_bound(&self, n: u32) -> usize {
        partition_step_bound(n) * self.players
    }
}

fn push_products(
    choices: &[Vec<Partition>],
    chosen: &mut Vec<Partition>,
    out: &mut Vec<MultiplayerState>,
) {
    let Some((first, rest)) = choices.split_first() else {
        out.push(MultiplayerState {
            players: chosen.clone(),
        });
        return;
    };
    for p in first {
        chosen.push(p.clone());
        push_products(rest, chosen, out);
        chosen.pop();
    }
}

/// Servedio–Yeh dealing game with a fixed number of seats.
#[derive(Debug, Clone, Copy)]
pub struct ServedioYeh {
    seats: usize,
}

impl ServedioYeh {
    pub fn new(seats: usize) -> Result<Self> {
        if seats < 1 {
            return Err(Error::invalid("dealing game needs at least one seat"));
        }
        Ok(ServedioYeh { seats })
    }
}

impl System for ServedioYeh {
    type State = Composition;

    fn name(&self) -> String {
        format!("servedio-yeh(c={})", self.seats)
    }

    fn step(&self, state: &Composition) -> Composition {
        servedio_yeh_step(state)
    }

    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<Composition>> {
        let count = binomial(n as u64 + self.seats as u64 - 1, self.seats as u64 - 1);
        limits.check_states("circular composition state space", count)?;
        Ok(weak_compositions(n, self.seats)
            .into_iter()
            .map(|p| Composition::from_raw(p, CompositionKind::Circular))
            .collect())
    }

    fn default_step_bound(&self, n: u32) -> usize {
        let count = binomial(n as u64 + self.seats as u64 - 1, self.seats as u64 - 1);
        (count.min(1 << 30) as usize + 1).max(partition_step_bound(n))
    }
}

/// Janetzko's pointer game with a fixed number of seats.
#[derive(Debug, Clone, Copy)]
pub struct Janetzko {
    seats: usize,
}

impl Janetzko {
    pub fn new(seats: usize) -> Result<Self> {
        if seats < 1 {
            return Err(Error::invalid("pointer game needs at least one seat"));
        }
        Ok(Janetzko { seats })
    }
}

impl System for Janetzko {
    type State = PointerState;

    fn name(&self) -> String {
        format!("janetzko(c={})", self.seats)
    }

    fn step(&self, state: &PointerState) -> PointerState {
        janetzko_step(state)
    }

    fn states(&self, n: u32, limits: &Limits) -> Result<Vec<PointerState>> {
        let count = binomial(n as u64 + self.seats as u64 - 1, self.seats as u64 - 1)
            .saturating_mul(self.seats as u64);
        limits.check_states("pointer game state space", count)?;
        let mut out = Vec::with_capacity(count as usize);
        for piles in weak_compositions(n, self.seats) {
            for pointer in 1..=self.seats {
                out.push(PointerState {
                    piles: piles.clone(),
                    pointer,
                });
            }
        }
        Ok(out)
    }

    fn default_step_bound(&self, n: u32) -> usize {
        let count = binomial(n as u64 + self.seats as u64 - 1, self.seats as u64 - 1)
            .saturating_mul(self.seats as u64);
        (count.min(1 << 30) as usize + 1).max(partition_step_bound(n))
    }
}

/// Number of distinct elements, used by tests that check bijectivity.
pub fn distinct_count<T: Eq + Hash>(items: impl IntoIterator<Item = T>) -> usize {
    items.into_iter().collect::<HashSet<_>>().len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn state_space_sizes() {
        let lim = Limits::default();
        assert_eq!(Bulgarian.states(7, &lim).unwrap().len(), 15);
        assert_eq!(Carolina.states(5, &lim).unwrap().len(), 16);
        assert_eq!(
            ServedioYeh::new(3).unwrap().states(3, &lim).unwrap().len(),
            10
        );
        assert_eq!(Janetzko::new(3).unwrap().states(3, &lim).unwrap().len(), 30);
        // two players, 2 cards: (2|.) (11|.) (1|1) (.|2) (.|11)
        assert_eq!(
            Multiplayer::new(2).unwrap().states(2, &lim).unwrap().len(),
            5
        );
        // L = 2, n = 3: bank 0 -> (2,1),(1,1,1); bank 1 -> (2),(1,1)
        assert_eq!(Austrian::new(2).unwrap().states(3, &lim).unwrap().len(), 4);
    }

    #[test]
    fn state_spaces_are_closed() {
        let lim = Limits::default();
        fn closed<S: System>(sys: &S, n: u32, lim: &Limits) {
            let states = sys.states(n, lim).unwrap();
            let set: HashSet<_> = states.iter().cloned().collect();
            assert_eq!(set.len(), states.len(), "{} duplicates", sys.name());
            for s in &states {
                assert!(
                    set.contains(&sys.step(s)),
                    "{} not closed at {s}",
                    sys.name()
                );
            }
        }
        closed(&Bulgarian, 9, &lim);
        closed(&Dual, 9, &lim);
        closed(&Carolina, 8, &lim);
        closed(&Montreal, 6, &lim);
        closed(&Austrian::new(3).unwrap(), 9, &lim);
        closed(&Multiplayer::new(3).unwrap(), 5, &lim);
        closed(&ServedioYeh::new(4).unwrap(), 6, &lim);
        closed(&Janetzko::new(4).unwrap(), 6, &lim);
    }

    #[test]
    fn limits_are_enforced() {
        let lim = Limits {
            max_states: 10,
            ..Limits::default()
        };
        assert!(matches!(
            Bulgarian.states(7, &lim),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(Bulgarian.states(5, &lim).is_ok());
    }
}
