//! Bulgarian solitaire and its variants as discrete dynamical systems on
//! integer partitions and compositions.
//!
//! Each variant's move is a pure function in [`operators`]. [`system`] wraps
//! the deterministic ones with their finite state spaces so that
//! [`dynamics`] can compute orbits, cycles, components, and
//! Garden-of-Eden states exhaustively. [`necklace`] holds the closed-form
//! component count, and [`stochastic`] runs seeded random variants.
//!
//! Per-state loops run on rayon when the `parallel` feature is enabled
//! (the default); see [`par::Exec`].

pub mod dynamics;
pub mod error;
pub mod export;
pub mod limits;
pub mod necklace;
pub mod operators;
pub mod par;
pub mod partition;
pub mod stochastic;
pub mod system;

pub use error::{Error, Result};
pub use limits::Limits;
pub use par::Exec;
pub use partition::{normalize, Composition, CompositionKind, Partition, TriangularDecomposition};
