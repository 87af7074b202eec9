//! Text forms of every state type.
//!
//! Partitions and compositions are comma-separated (`4,3,3`, Montreal
//! positions may hold interior zeros). The composite states add one
//! separator each:
//!
//! * pointer game: `piles@pointer`, e.g. `2,1,0@1`
//! * Austrian: `piles|bank`, with the machine life given separately
//! * multiplayer: players separated by `;`, e.g. `3;1,1`

use bsol_core::operators::{AustrianState, MultiplayerState, PointerState};
use bsol_core::partition::parse_parts;
use bsol_core::{Composition, CompositionKind, Error, Partition, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StateKind {
    Partition,
    Strict,
    Montreal,
    Circular,
    Pointer,
    Austrian { life: u32 },
    Multiplayer,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum State {
    Partition(Partition),
    Composition(Composition),
    Pointer(PointerState),
    Austrian(AustrianState),
    Multiplayer(MultiplayerState),
}

fn parse_err(text: &str, e: Error) -> Error {
    match e {
        Error::Invalid(msg) => Error::Parse(format!("{text:?}: {msg}")),
        other => other,
    }
}

/// Parses `text` as a state of the given kind. Partitions are normalized;
/// compositions keep their order.
pub fn parse_state(text: &str, kind: StateKind) -> Result<State> {
    match kind {
        StateKind::Partition => Ok(State::Partition(text.parse()?)),
        StateKind::Strict => {
            Composition::parse(text, CompositionKind::Strict).map(State::Composition)
        }
        StateKind::Montreal => {
            Composition::parse(text, CompositionKind::Montreal).map(State::Composition)
        }
        StateKind::Circular => {
            Composition::parse(text, CompositionKind::Circular).map(State::Composition)
        }
        StateKind::Pointer => {
            let (piles, pointer) = text
                .rsplit_once('@')
                .ok_or_else(|| Error::Parse(format!("{text:?}: expected piles@pointer")))?;
            let pointer = pointer
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{text:?}: malformed pointer")))?;
            PointerState::new(parse_parts(piles)?, pointer)
                .map(State::Pointer)
                .map_err(|e| parse_err(text, e))
        }
        StateKind::Austrian { life } => {
            let (piles, bank) = text.rsplit_once('|').unwrap_or((text, "0"));
            let bank = bank
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{text:?}: malformed bank")))?;
            AustrianState::new(piles.parse()?, bank, life)
                .map(State::Austrian)
                .map_err(|e| parse_err(text, e))
        }
        StateKind::Multiplayer => {
            let players = text
                .split(';')
                .map(str::parse)
                .collect::<Result<Vec<Partition>>>()?;
            MultiplayerState::new(players)
                .map(State::Multiplayer)
                .map_err(|e| parse_err(text, e))
        }
    }
}

/// Inverse of [`parse_state`].
pub fn format_state(state: &State) -> String {
    match state {
        State::Partition(p) => p.to_string(),
        State::Composition(c) => c.to_string(),
        State::Pointer(p) => p.to_string(),
        State::Austrian(a) => a.to_string(),
        State::Multiplayer(m) => m.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let s = parse_state("4,3,3", StateKind::Partition).unwrap();
        assert_eq!(format_state(&s), "4,3,3");
        let s = parse_state("3,5,2", StateKind::Partition).unwrap();
        assert_eq!(format_state(&s), "5,3,2");
        let s = parse_state("1,0,2", StateKind::Montreal).unwrap();
        assert_eq!(format_state(&s), "1,0,2");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_state("4,x", StateKind::Partition),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_state("-1,2", StateKind::Partition),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_state("0,1,2", StateKind::Montreal),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_state("1,2,0", StateKind::Montreal),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_state("2,1,0", StateKind::Pointer),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_state("2,1,0@4", StateKind::Pointer),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_state("4,1|0", StateKind::Austrian { life: 3 }),
            Err(Error::Parse(_))
        ));
    }

    #[test]
    fn composite_forms() {
        let s = parse_state("2,1,0@1", StateKind::Pointer).unwrap();
        assert_eq!(
            s,
            State::Pointer(PointerState::new(vec![2, 1, 0], 1).unwrap())
        );
        let s = parse_state("3;1,1", StateKind::Multiplayer).unwrap();
        assert_eq!(format_state(&s), "3;1,1");
        let s = parse_state("3;", StateKind::Multiplayer).unwrap();
        assert_eq!(format_state(&s), "3;");
        let s = parse_state("3,2", StateKind::Austrian { life: 3 }).unwrap();
        assert_eq!(format_state(&s), "3,2|0");
    }
}
