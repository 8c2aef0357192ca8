//! Exact computation with finite permutation groups, aimed at the LCM set
//! `LCM(G)` (elements `x` with `o(hy) | lcm(o(h), o(y))` for every `h ∈ ⟨x⟩`
//! and `y ∈ G`), the subgroup `LC(G)` it generates, the LC-series, and the
//! CP2 property `o(xy) ≤ max(o(x), o(y))`.
//!
//! Everything is exhaustive: groups are fully enumerated under an order cap
//! ([`Caps`]), and every structural query is answered by brute force over
//! the element list.

pub mod arith;
pub mod caps;
pub mod constructors;
pub mod cp2;
pub mod error;
pub mod genfile;
pub mod group;
pub mod lc_series;
pub mod lcm;
pub mod nlcm;
pub mod perm;
pub mod spec;
pub mod structure;
pub mod subgroup;

pub use caps::Caps;
pub use error::{GroupError, Result};
pub use group::{enumerate_group, Elem, FiniteGroup};
pub use perm::{compose, element_order, Permutation};
pub use spec::GroupSpec;
pub use subgroup::{Restriction, Subgroup};
