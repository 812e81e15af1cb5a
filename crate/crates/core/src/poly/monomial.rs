use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

use super::VarId;

/// A power product of variables, stored sparsely and sorted by [`VarId`].
///
/// `Ord` is degree reverse lexicographic with
/// smaller `VarId`s acting as larger variables. It is the canonical order used
/// for storage and printing of [`super::Polynomial`].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: SmallVec<[(VarId, u32); 4]>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: VarId) -> Self {
        Self::power(v, 1)
    }

    pub fn power(v: VarId, exp: u32) -> Self {
        let mut factors = SmallVec::new();
        if exp > 0 {
            factors.push((v, exp));
        }
        Monomial { factors }
    }

    /// Builds a monomial from arbitrary `(var, exp)` pairs; repeated variables
    /// are merged and zero exponents dropped.
    pub fn from_pairs<I: IntoIterator<Item = (VarId, u32)>>(pairs: I) -> Self {
        let mut v: Vec<(VarId, u32)> = pairs.into_iter().filter(|(_, e)| *e > 0).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut factors: SmallVec<[(VarId, u32); 4]> = SmallVec::new();
        for (var, e) in v {
            match factors.last_mut() {
                Some(last) if last.0 == var => last.1 += e,
                _ => factors.push((var, e)),
            }
        }
        Monomial { factors }
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.factors.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, v: &VarId) -> u32 {
        self.factors
            .binary_search_by(|(w, _)| w.cmp(v))
            .map(|i| self.factors[i].1)
            .unwrap_or(0)
    }

    /// `(var, exp)` pairs in increasing `VarId` order.
    pub fn factors(&self) -> &[(VarId, u32)] {
        &self.factors
    }

    pub fn vars(&self) -> impl Iterator<Item = &VarId> {
        self.factors.iter().map(|(v, _)| v)
    }

    /// Largest jet level among the variables, `None` for the unit monomial.
    pub fn max_level(&self) -> Option<u32> {
        self.factors.iter().map(|(v, _)| v.level()).max()
    }

    /// Sum over factors of `level * exp`: the weight raised by `T`.
    pub fn jet_weight(&self) -> u32 {
        self.factors.iter().map(|(v, e)| v.level() * e).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut factors = SmallVec::with_capacity(self.factors.len() + other.factors.len());
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    factors.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    factors.push(b[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    factors.push((a[i].0.clone(), a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        factors.extend(a[i..].iter().cloned());
        factors.extend(b[j..].iter().cloned());
        Monomial { factors }
    }

    /// Lowers the exponent of `v` by one; `None` if `v` does not occur.
    pub fn without_one(&self, v: &VarId) -> Option<Monomial> {
        let idx = self.factors.binary_search_by(|(w, _)| w.cmp(v)).ok()?;
        let mut factors = self.factors.clone();
        if factors[idx].1 == 1 {
            factors.remove(idx);
        } else {
            factors[idx].1 -= 1;
        }
        Some(Monomial { factors })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.factors.iter().all(|(v, e)| other.exponent(v) >= *e)
    }

    /// Applies `f` to every variable; the result is re-sorted and merged.
    pub fn map_vars<F: Fn(&VarId) -> VarId>(&self, f: F) -> Monomial {
        Monomial::from_pairs(self.factors.iter().map(|(v, e)| (f(v), *e)))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let d = self.degree().cmp(&other.degree());
        if d != Ordering::Equal {
            return d;
        }
        // reverse lexicographic tie-break: look at the largest VarId (the
        // smallest variable) where the exponents differ; more of it is smaller
        let (a, b) = (&self.factors, &other.factors);
        let (mut i, mut j) = (a.len(), b.len());
        loop {
            match (i.checked_sub(1), j.checked_sub(1)) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Less,
                (None, Some(_)) => return Ordering::Greater,
                (Some(x), Some(y)) => match a[x].0.cmp(&b[y].0) {
                    Ordering::Greater => return Ordering::Less,
                    Ordering::Less => return Ordering::Greater,
                    Ordering::Equal => {
                        if a[x].1 != b[y].1 {
                            return b[y].1.cmp(&a[x].1);
                        }
                        i = x;
                        j = y;
                    }
                },
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (v, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(pairs: &[(&str, u32)]) -> Monomial {
        Monomial::from_pairs(pairs.iter().map(|(n, e)| (VarId::base(n), *e)))
    }

    #[test]
    fn degrevlex_basics() {
        // x > y > z by name
        assert!(m(&[("x", 1)]) > m(&[("y", 1)]));
        assert!(m(&[("y", 1)]) > m(&[("z", 1)]));
        assert!(m(&[("z", 2)]) > m(&[("x", 1)]));
        // x*z vs y^2: same degree, z occurs in x*z so it is smaller
        assert!(m(&[("y", 2)]) > m(&[("x", 1), ("z", 1)]));
        assert!(m(&[("x", 1), ("y", 1)]) > m(&[("x", 1), ("z", 1)]));
        assert_eq!(m(&[]).cmp(&m(&[])), Ordering::Equal);
    }

    #[test]
    fn multiplicative() {
        let a = m(&[("x", 1), ("z", 1)]);
        let b = m(&[("y", 2)]);
        let c = m(&[("y", 1), ("w", 3)]);
        assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
    }

    #[test]
    fn jet_vars_print() {
        let v = VarId::new("x1", 2);
        assert_eq!(Monomial::power(v, 3).to_string(), "x1_(-3)^3");
    }
}
