//! Type-A Weyl group combinatorics.

mod flag;
mod order;
mod perm;

pub use flag::{parse_steps, FlagType};
pub use order::{
    boundary_closed_forms, boundary_p_elements, bruhat_leq, check_suffix_closure, coset_rep, gamma,
    is_min_coset_rep, longest_elements, p_bruhat_leq, w0_wp, BoundaryElements,
};
pub use perm::Permutation;
