//! One move of every solitaire variant, as pure functions.
//!
//! The two random variants are split in half: the caller samples which
//! piles (Popov) or how many cards per pile (EJS) are taken, and the
//! functions here apply that realized choice deterministically.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{normalize, Composition, CompositionKind, Partition};

/// Inserts `value` into a nonincreasing vector, keeping it sorted.
fn insert_sorted(parts: &mut Vec<u32>, value: u32) {
    if value == 0 {
        return;
    }
    let at = parts.partition_point(|&p| p > value);
    parts.insert(at, value);
}

/// Removes one card from every pile and forms a new pile from them.
pub fn bulgarian_step(lambda: &Partition) -> Partition {
    let c = lambda.len() as u32;
    let mut parts: Vec<u32> = lambda
        .parts()
        .iter()
        .map(|&p| p - 1)
        .filter(|&p| p > 0)
        .collect();
    insert_sorted(&mut parts, c);
    Partition::from_sorted(parts)
}

/// Carolina move: the new pile goes in front, exhausted piles vanish and
/// the survivors keep their order.
pub fn carolina_step(alpha: &Composition) -> Composition {
    debug_assert_eq!(alpha.kind(), CompositionKind::Strict);
    let c = alpha.len() as u32;
    let mut parts = Vec::with_capacity(alpha.len() + 1);
    if c > 0 {
        parts.push(c);
    }
    parts.extend(alpha.parts().iter().map(|&p| p - 1).filter(|&p| p > 0));
    Composition::from_raw(parts, CompositionKind::Strict)
}

/// Montreal move on a position with positive endpoints.
///
/// Each maximal run of positive parts `β` becomes `(β_1-1, ..., β_c-1, c)`
/// and each zero gap following it loses one zero. Zeros produced at the
/// front of a later block stay in place; the result is returned with its
/// boundary zeros stripped.
pub fn montreal_step(alpha: &Composition) -> Composition {
    let parts = alpha.parts();
    let mut out = Vec::with_capacity(parts.len() + 1);
    let mut i = 0;
    while i < parts.len() {
        let start = i;
        while i < parts.len() && parts[i] > 0 {
            i += 1;
        }
        let block = &parts[start..i];
        out.extend(block.iter().map(|&p| p - 1));
        out.push(block.len() as u32);
        let gap_start = i;
        while i < parts.len() && parts[i] == 0 {
            i += 1;
        }
        let gap = i - gap_start;
        if gap > 0 {
            out.extend(std::iter::repeat_n(0, gap - 1));
        }
    }
    Composition::montreal_canonical(out)
}

/// Dual move: the largest pile is dealt one card at a time onto the
/// remaining piles from largest to smallest; surplus cards start new
/// piles of size 1.
pub fn dual_step(lambda: &Partition) -> Result<Partition> {
    let (&m, rest) = lambda
        .parts()
        .split_first()
        .ok_or_else(|| Error::invalid("dual step needs a nonempty partition"))?;
    let mut parts = rest.to_vec();
    let fed = (m as usize).min(parts.len());
    for p in &mut parts[..fed] {
        *p += 1;
    }
    let surplus = m as usize - fed;
    parts.extend(std::iter::repeat_n(1, surplus));
    Ok(normalize(&parts))
}

/// Machines (piles of remaining lifetime, each at most `L`) plus a bank.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct AustrianState {
    pub piles: Partition,
    pub bank: u32,
    #[serde(rename = "L")]
    pub life: u32,
}

impl AustrianState {
    pub fn new(piles: Partition, bank: u32, life: u32) -> Result<Self> {
        if life < 1 {
            return Err(Error::invalid("machine life L must be at least 1"));
        }
        if piles.largest() > life {
            return Err(Error::invalid(format!(
                "pile of size {} exceeds machine life {life}",
                piles.largest()
            )));
        }
        Ok(AustrianState { piles, bank, life })
    }

    pub fn n(&self) -> u32 {
        self.piles.n() + self.bank
    }
}

impl fmt::Display for AustrianState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.piles, self.bank)
    }
}

/// Every machine ages one year into the bank, then new machines of life
/// `L` are bought while the bank can afford them.
pub fn austrian_step(state: &AustrianState) -> Result<AustrianState> {
    let life = state.life;
    if life < 1 {
        return Err(Error::invalid("machine life L must be at least 1"));
    }
    let mut bank = state.bank + state.piles.len() as u32;
    let mut parts: Vec<u32> = state
        .piles
        .parts()
        .iter()
        .map(|&p| p - 1)
        .filter(|&p| p > 0)
        .collect();
    let bought = bank / life;
    bank %= life;
    // every surviving pile is < L, so new machines go in front
    let mut next = vec![life; bought as usize];
    next.append(&mut parts);
    Ok(AustrianState {
        piles: Partition::from_sorted(next),
        bank,
        life,
    })
}

/// Several players around a table, each holding a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MultiplayerState {
    pub players: Vec<Partition>,
}

impl MultiplayerState {
    pub fn new(players: Vec<Partition>) -> Result<Self> {
        if players.is_empty() {
            return Err(Error::invalid("multiplayer game needs at least one player"));
        }
        Ok(MultiplayerState { players })
    }

    pub fn n(&self) -> u32 {
        self.players.iter().map(Partition::n).sum()
    }
}

impl fmt::Display for MultiplayerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.players.iter().enumerate() {
            if i > 0 {
                f.write_str(";")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// All players move at once; player `i` receives a pile whose size is the
/// pile count of player `i - 1` (player 1 receives from the last player).
pub fn multiplayer_step(state: &MultiplayerState) -> MultiplayerState {
    let s = state.players.len();
    let players = (0..s)
        .map(|i| {
            let left = &state.players[(i + s - 1) % s];
            let mut parts: Vec<u32> = state.players[i]
                .parts()
                .iter()
                .map(|&p| p - 1)
                .filter(|&p| p > 0)
                .collect();
            insert_sorted(&mut parts, left.len() as u32);
            Partition::from_sorted(parts)
        })
        .collect();
    MultiplayerState { players }
}

/// Every seat deals its whole hand clockwise, one card to itself and one
/// to each following seat, wrapping as often as needed.
pub fn servedio_yeh_step(alpha: &Composition) -> Composition {
    let c = alpha.len();
    let mut out = vec![0u32; c];
    if c == 0 {
        return Composition::from_raw(out, CompositionKind::Circular);
    }
    let mut full_rounds = 0u32;
    for (i, &a) in alpha.parts().iter().enumerate() {
        full_rounds += a / c as u32;
        for offset in 0..(a as usize % c) {
            out[(i + offset) % c] += 1;
        }
    }
    for v in &mut out {
        *v += full_rounds;
    }
    Composition::from_raw(out, CompositionKind::Circular)
}

/// Seats around a table and a pointer at one of them (1-based).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PointerState {
    pub piles: Vec<u32>,
    pub pointer: usize,
}

impl PointerState {
    pub fn new(piles: Vec<u32>, pointer: usize) -> Result<Self> {
        if piles.is_empty() {
            return Err(Error::invalid("pointer game needs at least one seat"));
        }
        if pointer < 1 || pointer > piles.len() {
            return Err(Error::invalid(format!(
                "pointer {pointer} outside seats 1..={}",
                piles.len()
            )));
        }
        Ok(PointerState { piles, pointer })
    }

    pub fn n(&self) -> u32 {
        self.piles.iter().sum()
    }
}

impl fmt::Display for PointerState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        crate::partition::write_parts(f, &self.piles)?;
        write!(f, "@{}", self.pointer)
    }
}

/// The pointed seat deals its pile one card per seat to the right; the
/// pointer follows the last card. An empty pointed pile moves no cards
/// and the pointer advances one seat.
pub fn janetzko_step(state: &PointerState) -> PointerState {
    let c = state.piles.len();
    let mut piles = state.piles.clone();
    let from = state.pointer - 1;
    let m = piles[from] as usize;
    if m == 0 {
        return PointerState {
            piles,
            pointer: (from + 1) % c + 1,
        };
    }
    piles[from] = 0;
    let full_rounds = (m / c) as u32;
    for v in &mut piles {
        *v += full_rounds;
    }
    for offset in 1..=(m % c) {
        piles[(from + offset) % c] += 1;
    }
    PointerState {
        piles,
        pointer: (from + m) % c + 1,
    }
}

/// Popov move for a realized selection: one card is taken from each pile
/// whose (0-based) index is in `mask`, and the taken cards form a new pile.
pub fn popov_masked_step(lambda: &Partition, mask: &[usize]) -> Result<Partition> {
    let mut picks = vec![0u32; lambda.len()];
    for &i in mask {
        match picks.get_mut(i) {
            Some(0) => picks[i] = 1,
            Some(_) => return Err(Error::invalid(format!("pile index {i} selected twice"))),
            None => {
                return Err(Error::invalid(format!(
                    "pile index {i} out of range for {} piles",
                    lambda.len()
                )))
            }
        }
    }
    ejs_masked_step(lambda, &picks)
}

/// EJS move for realized per-pile removal counts: `picks[i]` cards leave
/// pile `i` and all removed cards form one new pile.
pub fn ejs_masked_step(lambda: &Partition, picks: &[u32]) -> Result<Partition> {
    if picks.len() != lambda.len() {
        return Err(Error::invalid(format!(
            "{} pick counts for {} piles",
            picks.len(),
            lambda.len()
        )));
    }
    let mut parts = Vec::with_capacity(lambda.len() + 1);
    let mut taken = 0u32;
    for (i, (&pile, &k)) in lambda.parts().iter().zip(picks).enumerate() {
        if k > pile {
            return Err(Error::invalid(format!(
                "cannot pick {k} cards from pile {i} of size {pile}"
            )));
        }
        taken += k;
        parts.push(pile - k);
    }
    parts.push(taken);
    Ok(normalize(&parts))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn strict(parts: &[u32]) -> Composition {
        Composition::strict(parts.to_vec()).unwrap()
    }

    fn montreal(parts: &[u32]) -> Composition {
        Composition::montreal(parts.to_vec()).unwrap()
    }

    fn circ(parts: &[u32]) -> Composition {
        Composition::circular(parts.to_vec()).unwrap()
    }

    #[test]
    fn bulgarian_examples() {
        assert_eq!(bulgarian_step(&p(&[4, 3, 3])), p(&[3, 3, 2, 2]));
        assert_eq!(bulgarian_step(&p(&[6, 3, 1])), p(&[5, 3, 2]));
        assert_eq!(bulgarian_step(&p(&[4, 3, 2, 1])), p(&[4, 3, 2, 1]));
        assert_eq!(bulgarian_step(&Partition::empty()), Partition::empty());
    }

    #[test]
    fn carolina_examples() {
        assert_eq!(carolina_step(&strict(&[4, 3, 3])), strict(&[3, 3, 2, 2]));
        assert_eq!(carolina_step(&strict(&[1, 2])), strict(&[2, 1]));
        assert_eq!(carolina_step(&strict(&[4, 3, 2, 1])), strict(&[4, 3, 2, 1]));
    }

    #[test]
    fn montreal_examples() {
        assert_eq!(montreal_step(&montreal(&[1, 0, 2])), montreal(&[1, 1, 1]));
        assert_eq!(
            montreal_step(&montreal(&[1, 2, 0, 1, 0, 2])),
            montreal(&[1, 2, 0, 1, 1, 1])
        );
        assert_eq!(
            montreal_step(&montreal(&[3, 2, 2])),
            montreal(&[2, 1, 1, 3])
        );
    }

    #[test]
    fn montreal_worked_chain() {
        let chain: [&[u32]; 6] = [
            &[3, 2, 2],
            &[2, 1, 1, 3],
            &[1, 0, 0, 2, 4],
            &[1, 0, 1, 3, 2],
            &[1, 0, 2, 1, 3],
            &[1, 1, 0, 2, 3],
        ];
        for w in chain.windows(2) {
            assert_eq!(montreal_step(&montreal(w[0])), montreal(w[1]));
        }
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            dual_step(&p(&[4, 4, 3, 2, 2, 1, 1])).unwrap(),
            p(&[5, 4, 3, 3, 1, 1])
        );
        assert_eq!(
            dual_step(&p(&[6, 6, 3, 2, 1])).unwrap(),
            p(&[7, 4, 3, 2, 1, 1])
        );
        assert_eq!(dual_step(&p(&[1])).unwrap(), p(&[1]));
        assert!(dual_step(&Partition::empty()).is_err());
    }

    #[test]
    fn dual_tie_choice_does_not_matter() {
        // removing any copy of the maximal part gives the same multiset
        let lambda = p(&[3, 3, 3, 1]);
        let by_index = |skip: usize| {
            let mut rest: Vec<u32> = lambda
                .parts()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != skip)
                .map(|(_, &v)| v)
                .collect();
            rest.sort_unstable_by(|a, b| b.cmp(a));
            let m = 3usize;
            let fed = m.min(rest.len());
            for v in &mut rest[..fed] {
                *v += 1;
            }
            rest.extend(std::iter::repeat_n(1, m - fed));
            normalize(&rest)
        };
        let expect = dual_step(&lambda).unwrap();
        for skip in 0..3 {
            assert_eq!(by_index(skip), expect);
        }
    }

    #[test]
    fn austrian_examples() {
        let s = AustrianState::new(p(&[3, 2]), 0, 3).unwrap();
        let s1 = austrian_step(&s).unwrap();
        assert_eq!((s1.piles.clone(), s1.bank), (p(&[2, 1]), 2));
        let s2 = austrian_step(&s1).unwrap();
        assert_eq!((s2.piles, s2.bank), (p(&[3, 1]), 1));
        let t = austrian_step(&AustrianState::new(p(&[3]), 0, 3).unwrap()).unwrap();
        assert_eq!((t.piles, t.bank), (p(&[2]), 1));
    }

    #[test]
    fn austrian_rejects_bad_life() {
        assert!(AustrianState::new(p(&[3]), 0, 0).is_err());
        assert!(AustrianState::new(p(&[4]), 0, 3).is_err());
        let bad = AustrianState {
            piles: Partition::empty(),
            bank: 1,
            life: 0,
        };
        assert!(austrian_step(&bad).is_err());
    }

    #[test]
    fn austrian_json_form() {
        let s = AustrianState::new(p(&[2, 1]), 2, 3).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"piles":{"parts":[2,1],"n":3},"bank":2,"L":3}"#);
    }

    #[test]
    fn multiplayer_examples() {
        let one = MultiplayerState::new(vec![p(&[4, 3, 3])]).unwrap();
        assert_eq!(multiplayer_step(&one).players, vec![p(&[3, 3, 2, 2])]);
        let two = MultiplayerState::new(vec![p(&[2, 1]), p(&[2, 1])]).unwrap();
        assert_eq!(multiplayer_step(&two), two);
        let uneven = MultiplayerState::new(vec![p(&[3]), p(&[1, 1])]).unwrap();
        assert_eq!(multiplayer_step(&uneven).players, vec![p(&[2, 2]), p(&[1])]);
        assert!(MultiplayerState::new(vec![]).is_err());
    }

    #[test]
    fn servedio_yeh_examples() {
        assert_eq!(servedio_yeh_step(&circ(&[1, 1, 1])), circ(&[1, 1, 1]));
        assert_eq!(servedio_yeh_step(&circ(&[2, 1])), circ(&[1, 2]));
        assert_eq!(servedio_yeh_step(&circ(&[3, 0, 0])), circ(&[1, 1, 1]));
        // wrapping hand: 5 cards over 2 seats
        assert_eq!(servedio_yeh_step(&circ(&[5, 0])), circ(&[3, 2]));
    }

    #[test]
    fn janetzko_examples() {
        let s = PointerState::new(vec![2, 1, 0], 1).unwrap();
        assert_eq!(
            janetzko_step(&s),
            PointerState::new(vec![0, 2, 1], 3).unwrap()
        );
        let s = PointerState::new(vec![1, 1], 1).unwrap();
        assert_eq!(janetzko_step(&s), PointerState::new(vec![0, 2], 2).unwrap());
        let s = PointerState::new(vec![0, 3, 0], 1).unwrap();
        assert_eq!(
            janetzko_step(&s),
            PointerState::new(vec![0, 3, 0], 2).unwrap()
        );
        // 4 cards from seat 2 of 3: seats 3, 1, 2, 3; pointer lands on 3
        let s = PointerState::new(vec![0, 4, 0], 2).unwrap();
        assert_eq!(
            janetzko_step(&s),
            PointerState::new(vec![1, 1, 2], 3).unwrap()
        );
        assert!(PointerState::new(vec![1], 2).is_err());
        assert!(PointerState::new(vec![1], 0).is_err());
    }

    #[test]
    fn pointer_json_form() {
        let s = PointerState::new(vec![2, 1, 0], 1).unwrap();
        assert_eq!(
            serde_json::to_string(&s).unwrap(),
            r#"{"piles":[2,1,0],"pointer":1}"#
        );
    }

    #[test]
    fn popov_examples() {
        let l = p(&[4, 3, 3]);
        assert_eq!(popov_masked_step(&l, &[0, 1, 2]).unwrap(), p(&[3, 3, 2, 2]));
        assert_eq!(popov_masked_step(&l, &[0, 2]).unwrap(), p(&[3, 3, 2, 2]));
        assert_eq!(popov_masked_step(&l, &[]).unwrap(), l);
        assert!(popov_masked_step(&l, &[3]).is_err());
        assert!(popov_masked_step(&l, &[1, 1]).is_err());
    }

    #[test]
    fn ejs_examples() {
        let l = p(&[4, 3, 3]);
        assert_eq!(ejs_masked_step(&l, &[4, 3, 3]).unwrap(), p(&[10]));
        assert_eq!(ejs_masked_step(&l, &[2, 0, 3]).unwrap(), p(&[5, 3, 2]));
        assert_eq!(ejs_masked_step(&l, &[0, 0, 0]).unwrap(), l);
        assert!(ejs_masked_step(&l, &[5, 0, 0]).is_err());
        assert!(ejs_masked_step(&l, &[1, 0]).is_err());
    }
}
