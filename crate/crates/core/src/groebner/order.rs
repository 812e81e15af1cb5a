use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use crate::poly::{Monomial, VarId};

/// Monomial order kinds.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum OrderKind {
    DegRevLex,
    Lex,
    /// Compare the weight `Σ w(v)·exp(v)` first, break ties by degrevlex.
    /// Missing weights count as zero.
    Weighted(BTreeMap<VarId, u32>),
}

/// A monomial order together with an optional variable precedence.
///
/// Variables listed in `precedence` are the largest, in the listed order; all
/// others follow in `VarId` order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: OrderKind,
    precedence: Vec<VarId>,
}

impl Default for MonomialOrder {
    fn default() -> Self {
        MonomialOrder::degrevlex()
    }
}

impl MonomialOrder {
    pub fn degrevlex() -> Self {
        MonomialOrder {
            kind: OrderKind::DegRevLex,
            precedence: Vec::new(),
        }
    }

    pub fn lex() -> Self {
        MonomialOrder {
            kind: OrderKind::Lex,
            precedence: Vec::new(),
        }
    }

    pub fn weighted(weights: BTreeMap<VarId, u32>) -> Self {
        MonomialOrder {
            kind: OrderKind::Weighted(weights),
            precedence: Vec::new(),
        }
    }

    pub fn with_precedence(mut self, vars: Vec<VarId>) -> Self {
        self.precedence = vars;
        self
    }

    pub fn kind(&self) -> &OrderKind {
        &self.kind
    }

    pub fn precedence(&self) -> &[VarId] {
        &self.precedence
    }

    /// Same precedence, different kind.
    pub(crate) fn with_kind(&self, kind: OrderKind) -> Self {
        MonomialOrder {
            kind,
            precedence: self.precedence.clone(),
        }
    }

    pub(crate) fn weight_of(&self, v: &VarId) -> u64 {
        match &self.kind {
            OrderKind::Weighted(w) => w.get(v).copied().unwrap_or(0) as u64,
            _ => 0,
        }
    }

    /// Sorts variables from largest to smallest.
    pub(crate) fn sort_vars(&self, vars: &BTreeSet<VarId>) -> Vec<VarId> {
        let mut out: Vec<VarId> = self
            .precedence
            .iter()
            .filter(|v| vars.contains(v))
            .cloned()
            .collect();
        out.extend(
            vars.iter()
                .filter(|v| !self.precedence.contains(v))
                .cloned(),
        );
        out
    }

    /// Compares sparse monomials under this order.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let vars: BTreeSet<VarId> = a.vars().chain(b.vars()).cloned().collect();
        let layout = Layout::new(self.clone(), &vars);
        layout.cmp(&layout.dense(a), &layout.dense(b))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            OrderKind::DegRevLex => write!(f, "degrevlex"),
            OrderKind::Lex => write!(f, "lex"),
            OrderKind::Weighted(w) => {
                write!(f, "weighted(")?;
                for (k, (v, x)) in w.iter().enumerate() {
                    if k > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{v}:{x}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// Dense exponent vector with cached total degree and weight.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub(crate) struct DMono {
    pub(crate) e: Box<[u32]>,
    pub(crate) deg: u32,
    pub(crate) w: u64,
}

impl DMono {
    pub(crate) fn divides(&self, other: &DMono) -> bool {
        self.deg <= other.deg && self.e.iter().zip(other.e.iter()).all(|(a, b)| a <= b)
    }

    pub(crate) fn mul(&self, other: &DMono) -> DMono {
        DMono {
            e: self
                .e
                .iter()
                .zip(other.e.iter())
                .map(|(a, b)| a + b)
                .collect(),
            deg: self.deg + other.deg,
            w: self.w + other.w,
        }
    }

    /// `self / other`; caller guarantees divisibility.
    pub(crate) fn div(&self, other: &DMono) -> DMono {
        DMono {
            e: self
                .e
                .iter()
                .zip(other.e.iter())
                .map(|(a, b)| a - b)
                .collect(),
            deg: self.deg - other.deg,
            w: self.w - other.w,
        }
    }

    pub(crate) fn lcm(&self, other: &DMono, layout: &Layout) -> DMono {
        let e: Box<[u32]> = self
            .e
            .iter()
            .zip(other.e.iter())
            .map(|(a, b)| *a.max(b))
            .collect();
        layout.make(e)
    }

    pub(crate) fn coprime(&self, other: &DMono) -> bool {
        self.e
            .iter()
            .zip(other.e.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// A concrete variable list with an order: the context for dense arithmetic.
#[derive(Clone, Debug)]
pub(crate) struct Layout {
    pub(crate) vars: Vec<VarId>,
    index: HashMap<VarId, usize>,
    weights: Vec<u64>,
    lex: bool,
}

impl Layout {
    pub(crate) fn new(order: MonomialOrder, vars: &BTreeSet<VarId>) -> Self {
        let vars = order.sort_vars(vars);
        let index = vars
            .iter()
            .enumerate()
            .map(|(i, v)| (v.clone(), i))
            .collect();
        let weights = vars.iter().map(|v| order.weight_of(v)).collect();
        let lex = matches!(order.kind, OrderKind::Lex);
        Layout {
            vars,
            index,
            weights,
            lex,
        }
    }

    pub(crate) fn contains(&self, v: &VarId) -> bool {
        self.index.contains_key(v)
    }

    pub(crate) fn make(&self, e: Box<[u32]>) -> DMono {
        let deg = e.iter().sum();
        let w = e
            .iter()
            .zip(&self.weights)
            .map(|(a, b)| *a as u64 * b)
            .sum();
        DMono { e, deg, w }
    }

    pub(crate) fn one(&self) -> DMono {
        self.make(vec![0; self.vars.len()].into_boxed_slice())
    }

    pub(crate) fn dense(&self, m: &Monomial) -> DMono {
        let mut e = vec![0u32; self.vars.len()];
        for (v, x) in m.factors() {
            e[self.index[v]] = *x;
        }
        self.make(e.into_boxed_slice())
    }

    pub(crate) fn sparse(&self, m: &DMono) -> Monomial {
        Monomial::from_pairs(self.vars.iter().cloned().zip(m.e.iter().copied()))
    }

    pub(crate) fn cmp(&self, a: &DMono, b: &DMono) -> Ordering {
        if self.lex {
            for (x, y) in a.e.iter().zip(b.e.iter()) {
                if x != y {
                    return x.cmp(y);
                }
            }
            return Ordering::Equal;
        }
        a.w.cmp(&b.w).then(a.deg.cmp(&b.deg)).then_with(|| {
            for (x, y) in a.e.iter().zip(b.e.iter()).rev() {
                if x != y {
                    return y.cmp(x);
                }
            }
            Ordering::Equal
        })
    }
}
