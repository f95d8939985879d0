//! Linear algebra over `R[X_1, …, X_N]` reduced to constant systems over `R`
//! by unrolling: a polynomial solution of degree `<= β` is a coefficient
//! vector in the kernel of a constant matrix.

mod basis;
mod member;
mod module;
mod span;
mod unroll;

pub use basis::{syzygies, syzygies_at, syzygies_matrix, syzygies_matrix_recursive, Completeness, SyzygyBasis};
pub use member::{
    binomial_generators, member, member_at, member_homogeneous, one_member_binomial, rad_member_constants,
    radical_member_field, recheck_non_membership, solve_at, solve_poly, unit_member, verify_member,
    verify_solution, MembershipVerdict, NonMembership, Verdict,
};
pub use module::{colon, intersect, GeneratedModule};
pub use span::{module_contains, same_module, TruncatedModule};
pub use unroll::{coordinates, reroll, unroll, PolyMatrix};

#[cfg(test)]
mod tests;
