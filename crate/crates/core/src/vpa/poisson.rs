use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::poly::{Polynomial, VarId};

/// A Poisson bracket on `k[x^1..x^N]` given by the matrix `{x^i, x^j}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoissonStructure {
    vars: Vec<VarId>,
    matrix: Vec<Vec<Polynomial>>,
}

impl PoissonStructure {
    /// Checks shape, antisymmetry and that entries only use `vars`.
    pub fn new(vars: Vec<VarId>, matrix: Vec<Vec<Polynomial>>) -> Result<Self> {
        let ps = Self::new_unchecked(vars, matrix)?;
        let n = ps.vars.len();
        for i in 0..n {
            for j in 0..n {
                if ps.matrix[i][j] != -&ps.matrix[j][i] {
                    return Err(Error::InvalidInput(format!(
                        "bracket matrix is not antisymmetric at ({}, {})",
                        ps.vars[i], ps.vars[j]
                    )));
                }
            }
        }
        Ok(ps)
    }

    /// Only checks shape and variables. Used to build deliberately broken
    /// structures for harness tests.
    pub fn new_unchecked(vars: Vec<VarId>, matrix: Vec<Vec<Polynomial>>) -> Result<Self> {
        let n = vars.len();
        if matrix.len() != n || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidInput(format!(
                "bracket matrix must be {n}x{n}"
            )));
        }
        if let Some(v) = vars.iter().find(|v| !v.is_base()) {
            return Err(Error::InvalidInput(format!(
                "bracket variable {v} is not a base variable"
            )));
        }
        for row in &matrix {
            for e in row {
                if let Some(v) = e.vars().into_iter().find(|v| !vars.contains(v)) {
                    return Err(Error::InvalidInput(format!(
                        "bracket entry {e} uses unknown variable {v}"
                    )));
                }
            }
        }
        Ok(PoissonStructure { vars, matrix })
    }

    /// The zero bracket.
    pub fn trivial(vars: Vec<VarId>) -> Self {
        let n = vars.len();
        PoissonStructure {
            vars,
            matrix: vec![vec![Polynomial::zero(); n]; n],
        }
    }

    /// Lie–Poisson structure from `{x^i, x^j} = Σ_k c[i][j][k] x^k`.
    pub fn lie_poisson(
        vars: Vec<VarId>,
        brackets: &BTreeMap<(usize, usize), Polynomial>,
    ) -> Result<Self> {
        let n = vars.len();
        let mut m = vec![vec![Polynomial::zero(); n]; n];
        for (&(i, j), v) in brackets {
            m[i][j] = v.clone();
            m[j][i] = -v;
        }
        Self::new(vars, m)
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn matrix(&self) -> &[Vec<Polynomial>] {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.vars.len()
    }

    pub fn index_of(&self, v: &VarId) -> Option<usize> {
        self.vars.iter().position(|w| w == v)
    }

    /// `{x^i, x^j}`.
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.matrix[i][j]
    }

    pub fn is_trivial(&self) -> bool {
        self.matrix.iter().flatten().all(Polynomial::is_zero)
    }

    /// `{F, G} = Σ ∂F/∂x^a · ∂G/∂x^b · {x^a, x^b}` for base polynomials.
    pub fn bracket(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let df: Vec<Polynomial> = self.vars.iter().map(|v| f.partial_derivative(v)).collect();
        let dg: Vec<Polynomial> = self.vars.iter().map(|v| g.partial_derivative(v)).collect();
        let mut out = Polynomial::zero();
        for (a, fa) in df.iter().enumerate() {
            if fa.is_zero() {
                continue;
            }
            for (b, gb) in dg.iter().enumerate() {
                if gb.is_zero() || self.matrix[a][b].is_zero() {
                    continue;
                }
                out += &(&(fa * gb) * &self.matrix[a][b]);
            }
        }
        out
    }
}
