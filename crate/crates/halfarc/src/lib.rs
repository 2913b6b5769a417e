//! Permutation-group machinery for building and certifying half-arc-transitive
//! group actions on tetravalent coset graphs.
//!
//! The crate is organized around a small number of exact kernels:
//!
//! * [`perm`] — permutations of `{0, …, n-1}` with a fixed apply-left-then-right
//!   composition convention, plus the text formats used by files and the CLI;
//! * [`group`] — permutation groups backed by a base and strong generating set
//!   (Schreier–Sims), giving exact orders, membership and stabilizers;
//! * [`fp`] — finitely presented groups, Todd–Coxeter coset enumeration and the
//!   right regular representation;
//! * [`coset`] — double cosets, the coset graph `Cos(X, Y, S)` and the
//!   half-arc-transitivity certificate for a group action;
//! * [`concentric`] — the concentric-tuple conditions for 2-groups and a
//!   backtracking tuple search;
//! * [`quotient`] — normal quotient graphs and cover-multiplicity checks;
//! * [`suite`] — the worked constructions (the `D8`-in-`A10` action, the
//!   `H7 x C2` action, the `D8 x C2^(m-3)` family, and the `H7 x C2^(m-7)`
//!   experiment) wired to the certifiers;
//! * [`presets`] — named small 2-groups shipped as presentation data files.
//!
//! All arithmetic on group orders is exact (`num-bigint`); nothing in this
//! crate is approximate.

pub mod concentric;
pub mod coset;
pub mod error;
pub mod fp;
pub mod group;
pub mod perm;
pub mod presets;
pub mod quotient;
pub mod suite;

pub use error::{Error, Result};
pub use group::{BigCount, PermGroup};
pub use perm::{Parity, Permutation};
