use num_traits::{Signed, Zero};

use crate::domain::Domain;
use crate::error::Result;

use super::term::{Evaluator, TermArena, TermId};

/// A quantifier-free formula over term equalities and the `rad` predicate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    True,
    False,
    Eq0(TermId),
    /// `rad(a, b)`: `b` divides some power of `a`.
    Rad(TermId, TermId),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
}

impl Formula {
    /// `t = 0`, decided on the spot when `t` is the literal `0` or `±1`.
    pub fn eq0(arena: &TermArena, t: TermId) -> Formula {
        match arena.literal(t) {
            Some(c) if c.is_zero() => Formula::True,
            Some(c) if c.abs() == 1.into() => Formula::False,
            _ => Formula::Eq0(t),
        }
    }

    pub fn rad(a: TermId, b: TermId) -> Formula {
        Formula::Rad(a, b)
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Formula {
        match f {
            Formula::True => Formula::False,
            Formula::False => Formula::True,
            Formula::Not(inner) => *inner,
            other => Formula::Not(Box::new(other)),
        }
    }

    pub fn and(parts: impl IntoIterator<Item = Formula>) -> Formula {
        let mut kept = Vec::new();
        for p in parts {
            match p {
                Formula::True => {}
                Formula::False => return Formula::False,
                Formula::And(inner) => kept.extend(inner),
                other => kept.push(other),
            }
        }
        kept.dedup();
        match kept.len() {
            0 => Formula::True,
            1 => kept.pop().expect("one part"),
            _ => Formula::And(kept),
        }
    }

    pub fn or(parts: impl IntoIterator<Item = Formula>) -> Formula {
        let mut kept = Vec::new();
        for p in parts {
            match p {
                Formula::False => {}
                Formula::True => return Formula::True,
                Formula::Or(inner) => kept.extend(inner),
                other => kept.push(other),
            }
        }
        kept.dedup();
        match kept.len() {
            0 => Formula::False,
            1 => kept.pop().expect("one part"),
            _ => Formula::Or(kept),
        }
    }

    /// Syntactically unsatisfiable.
    pub fn is_false(&self) -> bool {
        *self == Formula::False
    }

    pub fn atoms(&self) -> usize {
        match self {
            Formula::True | Formula::False => 0,
            Formula::Eq0(_) | Formula::Rad(..) => 1,
            Formula::Not(f) => f.atoms(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().map(Formula::atoms).sum(),
        }
    }

    /// Term ids occurring in the formula.
    pub fn terms(&self, out: &mut Vec<TermId>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Eq0(t) => out.push(*t),
            Formula::Rad(a, b) => out.extend([*a, *b]),
            Formula::Not(f) => f.terms(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.terms(out)),
        }
    }

    pub fn eval<D: Domain>(&self, ev: &mut Evaluator<'_, D>) -> bool {
        match self {
            Formula::True => true,
            Formula::False => false,
            Formula::Eq0(t) => {
                let v = ev.term(*t);
                ev.ring().is_zero(&v)
            }
            Formula::Rad(a, b) => {
                let (x, y) = (ev.term(*a), ev.term(*b));
                ev.ring().rad(&x, &y)
            }
            Formula::Not(f) => !f.eval(ev),
            Formula::And(fs) => fs.iter().all(|f| f.eval(ev)),
            Formula::Or(fs) => fs.iter().any(|f| f.eval(ev)),
        }
    }
}

/// Truth of `phi` at the parameter tuple `point`.
pub fn eval_formula<D: Domain>(arena: &TermArena, phi: &Formula, ring: &D, point: &[D::Elem]) -> Result<bool> {
    let mut ev = Evaluator::new(arena, ring, point)?;
    Ok(phi.eval(&mut ev))
}
