pub mod corpus;
pub mod deform;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod group;
#[allow(dead_code)] // shared verbatim with build.rs
mod group_search;
pub mod iso;
pub mod pairmap;
pub mod search;
pub mod semigroup;
pub mod semilattice;
pub mod skew;
pub mod square;
pub mod star;
pub mod structure;
pub mod table;
pub mod witness;
pub mod ybe;

/// A carrier element: a dense index in `[0, n)`.
pub type Elem = usize;
