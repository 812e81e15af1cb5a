use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::poly::{parse_polynomial, parse_var, Polynomial, VarId};
use crate::vpa::{jacobi_check, PoissonStructure};

/// `Spec R` for `R = k[x^1..x^N]/(f_1..f_r)`, optionally Poisson and graded.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPresentation {
    vars: Vec<VarId>,
    relations: Vec<Polynomial>,
    poisson: Option<PoissonStructure>,
    weights: Option<BTreeMap<VarId, u32>>,
}

impl RingPresentation {
    /// Validates that relations, bracket and weights only mention `vars`.
    /// The Jacobi identity is checked separately by [`Self::validate_poisson`].
    pub fn new(
        vars: Vec<VarId>,
        relations: Vec<Polynomial>,
        poisson: Option<PoissonStructure>,
        weights: Option<BTreeMap<VarId, u32>>,
    ) -> Result<Self> {
        for (k, v) in vars.iter().enumerate() {
            if !v.is_base() {
                return Err(Error::InvalidInput(format!(
                    "variable {v} must be a base variable"
                )));
            }
            if vars[..k].contains(v) {
                return Err(Error::InvalidInput(format!("duplicate variable {v}")));
            }
        }
        for f in &relations {
            if let Some(v) = f.vars().into_iter().find(|v| !vars.contains(v)) {
                return Err(Error::InvalidInput(format!(
                    "relation {f} uses unknown variable {v}"
                )));
            }
        }
        if let Some(ps) = &poisson {
            if ps.vars() != vars.as_slice() {
                return Err(Error::InvalidInput(
                    "bracket variables differ from ring variables".into(),
                ));
            }
        }
        if let Some(w) = &weights {
            if let Some(v) = w.keys().find(|v| !vars.contains(v)) {
                return Err(Error::InvalidInput(format!(
                    "weight given for unknown variable {v}"
                )));
            }
            if let Some(v) = vars.iter().find(|v| !w.contains_key(v)) {
                return Err(Error::InvalidInput(format!("no weight for variable {v}")));
            }
        }
        let relations = relations.into_iter().filter(|f| !f.is_zero()).collect();
        Ok(RingPresentation {
            vars,
            relations,
            poisson,
            weights,
        })
    }

    /// Polynomial ring with no relations.
    pub fn free(vars: Vec<VarId>, poisson: Option<PoissonStructure>) -> Result<Self> {
        Self::new(vars, Vec::new(), poisson, None)
    }

    pub fn vars(&self) -> &[VarId] {
        &self.vars
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn poisson(&self) -> Option<&PoissonStructure> {
        self.poisson.as_ref()
    }

    pub fn weights(&self) -> Option<&BTreeMap<VarId, u32>> {
        self.weights.as_ref()
    }

    pub fn relation_ideal(&self) -> Ideal {
        Ideal::from_generators(self.relations.clone())
    }

    pub fn with_relations(&self, relations: Vec<Polynomial>) -> Result<Self> {
        Self::new(
            self.vars.clone(),
            relations,
            self.poisson.clone(),
            self.weights.clone(),
        )
    }

    pub fn with_weights(&self, weights: Option<BTreeMap<VarId, u32>>) -> Result<Self> {
        Self::new(
            self.vars.clone(),
            self.relations.clone(),
            self.poisson.clone(),
            weights,
        )
    }

    /// Runs the Jacobi check when a bracket is present.
    pub fn validate_poisson(&self) -> Result<()> {
        match &self.poisson {
            Some(ps) if !jacobi_check(ps, self)? => Err(Error::InvalidInput(
                "bracket fails the Jacobi identity or does not preserve the relations".into(),
            )),
            _ => Ok(()),
        }
    }
}

/// On-disk form of a ring presentation.
///
/// `invariants` is an optional extension listing invariant polynomials
/// `p_1..p_l`, used by the fiber and center-isomorphism commands.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct RingJson {
    pub vars: Vec<String>,
    #[serde(default)]
    pub relations: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub poisson: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<String, u32>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub invariants: Vec<String>,
}

/// A parsed ring file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingDocument {
    pub presentation: RingPresentation,
    pub invariants: Vec<Polynomial>,
}

fn parse_field(field: &str, src: &str) -> Result<Polynomial> {
    parse_polynomial(src)
        .map_err(|e| Error::InvalidInput(format!("{field}: cannot parse '{src}': {e}")))
}

impl RingDocument {
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RingJson = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("ring JSON: {e}")))?;
        Self::from_raw(&raw)
    }

    pub fn from_raw(raw: &RingJson) -> Result<Self> {
        let vars = raw
            .vars
            .iter()
            .map(|s| {
                parse_var(s)
                    .map_err(|e| Error::InvalidInput(format!("vars: bad variable '{s}': {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        let relations = raw
            .relations
            .iter()
            .enumerate()
            .map(|(k, s)| parse_field(&format!("relations[{k}]"), s))
            .collect::<Result<Vec<_>>>()?;
        let poisson = match &raw.poisson {
            None => None,
            Some(rows) => {
                let mut m = Vec::with_capacity(rows.len());
                for (i, row) in rows.iter().enumerate() {
                    let parsed = row
                        .iter()
                        .enumerate()
                        .map(|(j, s)| parse_field(&format!("poisson[{i}][{j}]"), s))
                        .collect::<Result<Vec<_>>>()?;
                    m.push(parsed);
                }
                Some(
                    PoissonStructure::new(vars.clone(), m)
                        .map_err(|e| Error::InvalidInput(format!("poisson: {e}")))?,
                )
            }
        };
        let weights = match &raw.weights {
            None => None,
            Some(w) => Some(
                w.iter()
                    .map(|(k, x)| {
                        parse_var(k).map(|v| (v, *x)).map_err(|e| {
                            Error::InvalidInput(format!("weights: bad variable '{k}': {e}"))
                        })
                    })
                    .collect::<Result<BTreeMap<_, _>>>()?,
            ),
        };
        let invariants = raw
            .invariants
            .iter()
            .enumerate()
            .map(|(k, s)| parse_field(&format!("invariants[{k}]"), s))
            .collect::<Result<Vec<_>>>()?;
        let presentation = RingPresentation::new(vars, relations, poisson, weights)?;
        Ok(RingDocument {
            presentation,
            invariants,
        })
    }

    pub fn to_raw(&self) -> RingJson {
        let pr = &self.presentation;
        RingJson {
            vars: pr.vars().iter().map(ToString::to_string).collect(),
            relations: pr.relations().iter().map(ToString::to_string).collect(),
            poisson: pr.poisson().map(|ps| {
                ps.matrix()
                    .iter()
                    .map(|row| row.iter().map(ToString::to_string).collect())
                    .collect()
            }),
            weights: pr
                .weights()
                .map(|w| w.iter().map(|(v, x)| (v.to_string(), *x)).collect()),
            invariants: self.invariants.iter().map(ToString::to_string).collect(),
        }
    }
}
