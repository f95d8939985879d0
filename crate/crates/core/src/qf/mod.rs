//! Quantifier-free L_gcd / L_rad terms and formulas, and families of
//! syzygy generators that are uniform in integer parameters.

mod family;
mod formula;
mod term;
mod text;

pub use family::{
    build_param_kernel_matrix, build_param_kernel_row, build_param_syzygies, instantiate, verify_family, Branch,
    FamilyReport, ParamFamily, ParamMatrix, PolyTerm,
};
pub use formula::{eval_formula, Formula};
pub use term::{eval_term, Evaluator, Node, TermArena, TermId};
pub use text::{default_param_names, family_to_json, family_to_text, Printer};

/// `t` rebuilt with domain-independent simplifications.
pub fn simplify(arena: &mut TermArena, t: TermId) -> TermId {
    arena.simplify(t)
}
