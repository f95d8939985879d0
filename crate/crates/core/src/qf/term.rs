use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::domain::{Domain, Integers};
use crate::error::{Error, Result};
use crate::poly::MultiPoly;

/// Index of a node in a [`TermArena`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TermId(pub(crate) u32);

impl TermId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One node of an L_gcd term. Constants are integers, read in any domain
/// through `Z → R`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Node {
    Const(BigInt),
    Param(usize),
    Add(TermId, TermId),
    Sub(TermId, TermId),
    Mul(TermId, TermId),
    Colon(TermId, TermId),
}

impl Node {
    pub fn children(&self) -> Option<(TermId, TermId)> {
        match *self {
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Colon(a, b) => Some((a, b)),
            Node::Const(_) | Node::Param(_) => None,
        }
    }
}

/// Hash-consed term storage: equal subterms share one id.
#[derive(Clone, Debug)]
pub struct TermArena {
    nparams: usize,
    nodes: Vec<Node>,
    index: HashMap<Node, TermId>,
}

impl TermArena {
    pub fn new(nparams: usize) -> Self {
        TermArena { nparams, nodes: Vec::new(), index: HashMap::new() }
    }

    pub fn nparams(&self) -> usize {
        self.nparams
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, t: TermId) -> &Node {
        &self.nodes[t.index()]
    }

    /// Stores `node` as given, without simplification.
    pub fn intern(&mut self, node: Node) -> TermId {
        if let Some((a, b)) = node.children() {
            assert!(a.index() < self.nodes.len() && b.index() < self.nodes.len(), "dangling term id");
        }
        if let Node::Param(i) = node {
            assert!(i < self.nparams, "parameter index out of range");
        }
        if let Some(&id) = self.index.get(&node) {
            return id;
        }
        let id = TermId(self.nodes.len() as u32);
        self.nodes.push(node.clone());
        self.index.insert(node, id);
        id
    }

    pub fn constant(&mut self, c: impl Into<BigInt>) -> TermId {
        self.intern(Node::Const(c.into()))
    }

    pub fn zero(&mut self) -> TermId {
        self.constant(0)
    }

    pub fn one(&mut self) -> TermId {
        self.constant(1)
    }

    pub fn param(&mut self, i: usize) -> TermId {
        self.intern(Node::Param(i))
    }

    pub fn literal(&self, t: TermId) -> Option<&BigInt> {
        match self.node(t) {
            Node::Const(c) => Some(c),
            _ => None,
        }
    }

    pub fn is_literal(&self, t: TermId, v: i64) -> bool {
        self.literal(t).is_some_and(|c| *c == BigInt::from(v))
    }

    pub fn add(&mut self, a: TermId, b: TermId) -> TermId {
        self.simplify_node(Node::Add(a, b))
    }

    pub fn sub(&mut self, a: TermId, b: TermId) -> TermId {
        self.simplify_node(Node::Sub(a, b))
    }

    pub fn mul(&mut self, a: TermId, b: TermId) -> TermId {
        self.simplify_node(Node::Mul(a, b))
    }

    pub fn colon(&mut self, a: TermId, b: TermId) -> TermId {
        self.simplify_node(Node::Colon(a, b))
    }

    pub fn neg(&mut self, a: TermId) -> TermId {
        let z = self.zero();
        self.sub(z, a)
    }

    /// Sum of the terms, `0` when empty.
    pub fn sum(&mut self, terms: impl IntoIterator<Item = TermId>) -> TermId {
        let mut acc = self.zero();
        for t in terms {
            acc = self.add(acc, t);
        }
        acc
    }

    /// Rules valid in every domain: literal arithmetic, `0` and `1`
    /// identities, `t - t = 0`, `(t:±1) = t`, `(0:0) = 1` and `(±1:0) = ±1`.
    fn simplify_node(&mut self, node: Node) -> TermId {
        let lit = |arena: &Self, t: TermId| arena.literal(t).cloned();
        match node {
            Node::Add(a, b) => match (lit(self, a), lit(self, b)) {
                (Some(x), Some(y)) => self.constant(x + y),
                (Some(x), _) if x.is_zero() => b,
                (_, Some(y)) if y.is_zero() => a,
                _ => self.intern(Node::Add(a, b)),
            },
            Node::Sub(a, b) => match (lit(self, a), lit(self, b)) {
                (Some(x), Some(y)) => self.constant(x - y),
                (_, Some(y)) if y.is_zero() => a,
                _ if a == b => self.zero(),
                _ => self.intern(Node::Sub(a, b)),
            },
            Node::Mul(a, b) => match (lit(self, a), lit(self, b)) {
                (Some(x), Some(y)) => self.constant(x * y),
                (Some(x), _) | (_, Some(x)) if x.is_zero() => self.zero(),
                (Some(x), _) if x.is_one() => b,
                (_, Some(y)) if y.is_one() => a,
                _ => self.intern(Node::Mul(a, b)),
            },
            Node::Colon(a, b) => match (lit(self, a), lit(self, b)) {
                (_, Some(y)) if y.abs().is_one() => a,
                (Some(x), Some(y)) if x.is_zero() && y.is_zero() => self.one(),
                (Some(x), Some(y)) if x.abs().is_one() && y.is_zero() => a,
                _ => self.intern(Node::Colon(a, b)),
            },
            other => self.intern(other),
        }
    }

    /// Rebuilds `t` bottom-up through the simplifying constructors.
    pub fn simplify(&mut self, t: TermId) -> TermId {
        let mut memo: HashMap<TermId, TermId> = HashMap::new();
        self.simplify_memo(t, &mut memo)
    }

    fn simplify_memo(&mut self, t: TermId, memo: &mut HashMap<TermId, TermId>) -> TermId {
        if let Some(&s) = memo.get(&t) {
            return s;
        }
        let node = self.node(t).clone();
        let s = match node {
            Node::Add(a, b) | Node::Sub(a, b) | Node::Mul(a, b) | Node::Colon(a, b) => {
                let (a, b) = (self.simplify_memo(a, memo), self.simplify_memo(b, memo));
                let rebuilt = match node {
                    Node::Add(..) => Node::Add(a, b),
                    Node::Sub(..) => Node::Sub(a, b),
                    Node::Mul(..) => Node::Mul(a, b),
                    _ => Node::Colon(a, b),
                };
                self.simplify_node(rebuilt)
            }
            _ => t,
        };
        memo.insert(t, s);
        s
    }

    /// The polynomial `p` in the parameters, as a sum of products.
    pub fn from_poly(&mut self, p: &MultiPoly<Integers>) -> TermId {
        assert_eq!(p.nvars(), self.nparams, "polynomial must be in the parameters");
        let mut acc = self.zero();
        for (m, c) in p.terms() {
            let mut term = self.constant(c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let x = self.param(i);
                for _ in 0..e {
                    term = self.mul(term, x);
                }
            }
            acc = self.add(acc, term);
        }
        acc
    }

    /// Distinct nodes reachable from `roots`, in arena order.
    pub fn reachable(&self, roots: impl IntoIterator<Item = TermId>) -> Vec<TermId> {
        let mut seen = vec![false; self.nodes.len()];
        let mut stack: Vec<TermId> = roots.into_iter().collect();
        while let Some(t) = stack.pop() {
            if std::mem::replace(&mut seen[t.index()], true) {
                continue;
            }
            if let Some((a, b)) = self.node(t).children() {
                stack.push(a);
                stack.push(b);
            }
        }
        (0..self.nodes.len()).filter(|&i| seen[i]).map(|i| TermId(i as u32)).collect()
    }
}

/// Evaluates terms at a parameter tuple, caching shared subterms.
pub struct Evaluator<'a, D: Domain> {
    arena: &'a TermArena,
    ring: &'a D,
    point: &'a [D::Elem],
    cache: Vec<Option<D::Elem>>,
}

impl<'a, D: Domain> Evaluator<'a, D> {
    pub fn new(arena: &'a TermArena, ring: &'a D, point: &'a [D::Elem]) -> Result<Self> {
        if point.len() != arena.nparams() {
            return Err(Error::Arity { expected: arena.nparams(), got: point.len() });
        }
        Ok(Evaluator { arena, ring, point, cache: vec![None; arena.len()] })
    }

    pub fn ring(&self) -> &D {
        self.ring
    }

    pub fn term(&mut self, t: TermId) -> D::Elem {
        // iterative post-order so deep sums do not overflow the stack
        let mut stack = vec![(t, false)];
        while let Some((u, expanded)) = stack.pop() {
            if self.cache[u.index()].is_some() {
                continue;
            }
            let node = self.arena.node(u);
            match node.children() {
                Some((a, b)) if !expanded => {
                    stack.push((u, true));
                    stack.push((a, false));
                    stack.push((b, false));
                }
                _ => {
                    let r = self.ring;
                    let get = |cache: &[Option<D::Elem>], x: TermId| cache[x.index()].clone().expect("child evaluated");
                    let v = match node {
                        Node::Const(c) => r.from_int(c),
                        Node::Param(i) => self.point[*i].clone(),
                        Node::Add(a, b) => r.add(&get(&self.cache, *a), &get(&self.cache, *b)),
                        Node::Sub(a, b) => r.sub(&get(&self.cache, *a), &get(&self.cache, *b)),
                        Node::Mul(a, b) => r.mul(&get(&self.cache, *a), &get(&self.cache, *b)),
                        Node::Colon(a, b) => r.colon(&get(&self.cache, *a), &get(&self.cache, *b)),
                    };
                    self.cache[u.index()] = Some(v);
                }
            }
        }
        self.cache[t.index()].clone().expect("evaluated")
    }
}

/// Value of `t` at the parameter tuple `point`.
pub fn eval_term<D: Domain>(arena: &TermArena, t: TermId, ring: &D, point: &[D::Elem]) -> Result<D::Elem> {
    Ok(Evaluator::new(arena, ring, point)?.term(t))
}
