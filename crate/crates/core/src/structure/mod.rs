//! Structural invariants: quotients, series, Sylow and Fitting subgroups,
//! `Ω`/`℧`, regularity, Frobenius kernels and subgroup lattices.

mod frobenius;
mod lattice;
mod omega;
mod quotient;
mod series;
mod sylow;

pub use frobenius::{find_complement, frobenius_complement, is_frobenius_with_kernel};
pub use lattice::{all_subgroups, maximal_in_lattice, maximal_subgroups, normal_subgroups};
pub use omega::{
    first_regularity_failure, is_regular_p_group, mho, mho_of, omega, omega_of_set, Omega,
};
pub use quotient::{quotient, Epimorphism};
pub use series::{
    derived_series, is_nilpotent, is_solvable, is_supersolvable, nilpotency_class,
    prime_order_normal_subgroups, upper_central_series, CentralSeries,
};
pub use sylow::{fitting_subgroup, is_p_element, p_core, sylow_subgroup};

use crate::group::FiniteGroup;
use crate::subgroup::Subgroup;

/// Normality of a subgroup already known to belong to `g`.
pub fn is_normal_in(g: &FiniteGroup, h: &Subgroup) -> bool {
    g.normalized_by(h, g.generator_elems())
}

/// `exp(H)` for a subgroup.
pub fn subgroup_exponent(g: &FiniteGroup, h: &Subgroup) -> u64 {
    h.members()
        .iter()
        .fold(1, |acc, &x| num_integer::lcm(acc, g.order_of(x)))
}
