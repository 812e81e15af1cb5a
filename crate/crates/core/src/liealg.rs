//! Lie algebra testbed: Lie–Poisson structures with invariant generators,
//! nilpotent cones, fiber ideals of the jet adjoint quotient, and the regular
//! slice of sl₂.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groebner::{Budget, Ideal};
use crate::jet::{negative_mode_unbounded, JetRing, RingDocument, RingPresentation};
use crate::linalg::rank;
use crate::poly::{parse_rational, Monomial, Polynomial, Rational, VarId};
use crate::vpa::{graded_dims, jacobi_check, vp_center_upto, Grading, PoissonStructure};

/// A Lie algebra `𝔤` seen through the Lie–Poisson structure on `ℂ[𝔤]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebraData {
    structure: PoissonStructure,
    invariants: Vec<Polynomial>,
    sl2_triple: Option<[Polynomial; 3]>,
    slodowy_weights: Option<BTreeMap<VarId, u32>>,
}

impl LieAlgebraData {
    /// Checks that the bracket is linear and satisfies Jacobi, that every
    /// invariant is a Casimir, and that the triple and weights only use the
    /// basis.
    pub fn new(
        structure: PoissonStructure,
        invariants: Vec<Polynomial>,
        sl2_triple: Option<[Polynomial; 3]>,
        slodowy_weights: Option<BTreeMap<VarId, u32>>,
    ) -> Result<Self> {
        let basis = structure.vars();
        if let Some(c) = structure
            .matrix()
            .iter()
            .flatten()
            .find(|c| c.degree().is_some_and(|d| d > 1))
        {
            return Err(Error::InvalidInput(format!(
                "bracket entry {c} is not linear"
            )));
        }
        let ring = RingPresentation::free(basis.to_vec(), Some(structure.clone()))?;
        if !jacobi_check(&structure, &ring)? {
            return Err(Error::InvalidInput(
                "bracket fails the Jacobi identity".into(),
            ));
        }
        let known = |p: &Polynomial| p.vars().iter().all(|v| basis.contains(v));
        for p in &invariants {
            if !known(p) {
                return Err(Error::InvalidInput(format!(
                    "invariant {p} uses a variable outside the basis"
                )));
            }
            if let Some(x) = basis.iter().find(|x| {
                !structure
                    .bracket(&Polynomial::var((*x).clone()), p)
                    .is_zero()
            }) {
                return Err(Error::InvalidInput(format!(
                    "invariant {p} is not a Casimir: {{{x}, {p}}} != 0"
                )));
            }
        }
        if let Some(t) = &sl2_triple {
            if t.iter()
                .any(|p| !known(p) || p.degree().is_some_and(|d| d > 1))
            {
                return Err(Error::InvalidInput(
                    "sl2 triple must be linear in the basis".into(),
                ));
            }
        }
        if let Some(w) = &slodowy_weights {
            RingPresentation::new(basis.to_vec(), Vec::new(), None, Some(w.clone()))?;
        }
        Ok(LieAlgebraData {
            structure,
            invariants,
            sl2_triple,
            slodowy_weights,
        })
    }

    /// Reads the bracket, the invariants and the weights of a ring file.
    /// Relations in the file are ignored: the result describes all of `𝔤`.
    pub fn from_document(doc: &RingDocument) -> Result<Self> {
        let pres = &doc.presentation;
        let structure = pres
            .poisson()
            .cloned()
            .ok_or_else(|| Error::InvalidInput("ring file has no poisson bracket".into()))?;
        Self::new(
            structure,
            doc.invariants.clone(),
            None,
            pres.weights().cloned(),
        )
    }

    pub fn basis(&self) -> &[VarId] {
        self.structure.vars()
    }

    pub fn structure(&self) -> &PoissonStructure {
        &self.structure
    }

    pub fn invariants(&self) -> &[Polynomial] {
        &self.invariants
    }

    pub fn sl2_triple(&self) -> Option<&[Polynomial; 3]> {
        self.sl2_triple.as_ref()
    }

    pub fn slodowy_weights(&self) -> Option<&BTreeMap<VarId, u32>> {
        self.slodowy_weights.as_ref()
    }

    /// `ℂ[𝔤]` with its bracket and Slodowy weights.
    pub fn presentation(&self) -> RingPresentation {
        RingPresentation::new(
            self.basis().to_vec(),
            Vec::new(),
            Some(self.structure.clone()),
            self.slodowy_weights.clone(),
        )
        .expect("validated in LieAlgebraData::new")
    }
}

/// `sl₂` with basis `(e, h, f)`, Casimir `Ω = ef + h²/4` and the Slodowy
/// weights of the regular nilpotent `f`.
pub fn make_sl2() -> LieAlgebraData {
    let basis = ["e", "h", "f"].map(VarId::base).to_vec();
    let [e, h, f] = [0, 1, 2].map(|i| Polynomial::var(basis[i].clone()));
    let brackets = BTreeMap::from([
        ((0, 1), e.scale(&Rational::from_integer((-2).into()))),
        ((0, 2), h.clone()),
        ((1, 2), f.scale(&Rational::from_integer((-2).into()))),
    ]);
    let structure = PoissonStructure::lie_poisson(basis.clone(), &brackets)
        .expect("sl2 bracket is antisymmetric");
    let omega = &(&e * &f) + &h.pow(2).scale(&Rational::new(1.into(), 4.into()));
    let weights = BTreeMap::from([
        (basis[0].clone(), 4),
        (basis[1].clone(), 2),
        (basis[2].clone(), 0),
    ]);
    LieAlgebraData::new(structure, vec![omega], Some([e, h, f]), Some(weights))
        .expect("sl2 data is valid")
}

/// `⟨p_1, …, p_ℓ⟩`.
pub fn nilpotent_cone(l: &LieAlgebraData) -> Ideal {
    Ideal::from_generators(l.invariants.clone())
}

/// A point `ξ` of `J_n(𝔤//G)` by its coordinates `ξ_i^(j)`; absent entries
/// are zero. Indices `i` start at 1.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FiberSpec {
    pub n: u32,
    pub xi: BTreeMap<(usize, u32), Rational>,
}

impl FiberSpec {
    pub fn zero(n: u32) -> Self {
        FiberSpec {
            n,
            xi: BTreeMap::new(),
        }
    }

    /// Parses `i,j=v,i,j=v,…`; `;` may also separate entries.
    pub fn parse(n: u32, text: &str) -> Result<Self> {
        let tokens: Vec<&str> = text
            .split([',', ';'])
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .collect();
        let mut xi = BTreeMap::new();
        for pair in tokens.chunks(2) {
            let entry = pair.join(",");
            let bad =
                || Error::InvalidInput(format!("xi entry '{entry}' is not of the form i,j=value"));
            let [i, rest] = pair else { return Err(bad()) };
            let (j, val) = rest.split_once('=').ok_or_else(bad)?;
            let i: usize = i.parse().map_err(|_| bad())?;
            let j: u32 = j.trim().parse().map_err(|_| bad())?;
            let v = parse_rational(val.trim()).map_err(|_| bad())?;
            if xi.insert((i, j), v).is_some() {
                return Err(Error::InvalidInput(format!("xi entry {i},{j} given twice")));
            }
        }
        Ok(FiberSpec { n, xi })
    }

    pub fn value(&self, i: usize, j: u32) -> Rational {
        self.xi.get(&(i, j)).cloned().unwrap_or_default()
    }

    fn check(&self, ell: usize) -> Result<()> {
        match self
            .xi
            .keys()
            .find(|&&(i, j)| i == 0 || i > ell || j > self.n)
        {
            Some((i, j)) => Err(Error::InvalidInput(format!(
                "xi index ({i},{j}) outside 1..={ell} x 0..={}",
                self.n
            ))),
            None => Ok(()),
        }
    }
}

/// `𝓘_{n,ξ} = ⟨T^j p_i − ξ_i^(j)⟩` in `J_n R` for the given invariants,
/// together with the jet relations of `R`.
pub fn fiber_ideal_of(jr: &JetRing, invariants: &[Polynomial], spec: &FiberSpec) -> Result<Ideal> {
    if spec.n != jr.level() {
        return Err(Error::InvalidInput(format!(
            "fiber level {} differs from ring level {}",
            spec.n,
            jr.level()
        )));
    }
    spec.check(invariants.len())?;
    let mut gens = Vec::new();
    for (i, p) in invariants.iter().enumerate() {
        let mut t = p.clone();
        for j in 0..=spec.n {
            if j > 0 {
                t = jr.derivation_t(&t);
            }
            gens.push(&t - &Polynomial::constant(spec.value(i + 1, j)));
        }
    }
    gens.extend(jr.relations().iter().cloned());
    Ok(Ideal::from_generators(gens).with_budget(jr.budget().clone()))
}

/// [`fiber_ideal_of`] with the invariants of `l`.
pub fn fiber_ideal(l: &LieAlgebraData, jr: &JetRing, spec: &FiberSpec) -> Result<Ideal> {
    fiber_ideal_of(jr, &l.invariants, spec)
}

/// A transversal slice `𝒮 ⊂ 𝔤` with its coordinate ring and the restriction
/// homomorphism `ℂ[𝔤] → ℂ[𝒮]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slice {
    presentation: RingPresentation,
    restriction: BTreeMap<VarId, Polynomial>,
}

impl Slice {
    pub fn new(
        presentation: RingPresentation,
        restriction: BTreeMap<VarId, Polynomial>,
    ) -> Result<Self> {
        for (x, img) in &restriction {
            if !x.is_base() {
                return Err(Error::InvalidInput(format!(
                    "restriction of {x}: only base variables are restricted"
                )));
            }
            if let Some(v) = img
                .vars()
                .into_iter()
                .find(|v| !presentation.vars().contains(v))
            {
                return Err(Error::InvalidInput(format!(
                    "restriction of {x} uses {v}, not a slice variable"
                )));
            }
        }
        Ok(Slice {
            presentation,
            restriction,
        })
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn restriction(&self) -> &BTreeMap<VarId, Polynomial> {
        &self.restriction
    }

    /// Image of a base or jet polynomial under the restriction, extended to
    /// jets by `x_(-j-1) ↦ T^j ρ(x) / j!`.
    pub fn restrict(&self, p: &Polynomial) -> Polynomial {
        let level = p.max_level().unwrap_or(0);
        let mut map = BTreeMap::new();
        for (x, img) in &self.restriction {
            for j in 0..=level {
                map.insert(x.at_level(j), negative_mode_unbounded(img, j));
            }
        }
        p.substitute(&map)
    }
}

/// The slice `f + ℂe` through the regular nilpotent `f` of `sl₂`, with
/// coordinate `s`, zero bracket and Slodowy weight 4 on `s`. The
/// restriction is `e ↦ s, h ↦ 0, f ↦ 1`.
pub fn regular_slice_sl2() -> Slice {
    let s = VarId::base("s");
    let pres = RingPresentation::new(
        vec![s.clone()],
        Vec::new(),
        Some(PoissonStructure::trivial(vec![s.clone()])),
        Some(BTreeMap::from([(s.clone(), 4)])),
    )
    .expect("slice presentation is valid");
    let restriction = BTreeMap::from([
        (VarId::base("e"), Polynomial::var(s)),
        (VarId::base("h"), Polynomial::zero()),
        (VarId::base("f"), Polynomial::one()),
    ]);
    Slice::new(pres, restriction).expect("slice restriction is valid")
}

/// Outcome of [`center_isomorphism_check`]. Dimensions are indexed by
/// Slodowy weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CenterIsoReport {
    pub level: u32,
    pub degree_bound: u64,
    /// False when the bracket of `𝔤` is zero, where every element is central
    /// and the comparison says nothing.
    pub applicable: bool,
    /// Center of `J_n ℂ[𝒮]` in slice degree `≤ d`.
    pub slice_center: BTreeMap<u64, usize>,
    /// Monomials of at most `d` factors in the restricted `T^j p_i`.
    pub restricted_invariants: BTreeMap<u64, usize>,
    /// Center of `J_n ℂ[𝔤]` in degree `≤ d · max deg p_i`.
    pub lie_center: BTreeMap<u64, usize>,
    /// Restricted invariant monomials lie in the slice center.
    pub invariants_central: bool,
    /// Restriction is injective on the computed center of `J_n ℂ[𝔤]`.
    pub restriction_injective: bool,
    /// All three graded dimensions agree.
    pub equal: bool,
}

fn slodowy_degree(weights: &BTreeMap<VarId, u32>) -> impl Fn(&Monomial) -> u64 + '_ {
    move |m: &Monomial| {
        m.factors()
            .iter()
            .map(|(v, e)| u64::from(weights[&v.at_level(0)] + v.level()) * u64::from(*e))
            .sum()
    }
}

fn row(keys: &BTreeSet<Monomial>, p: &Polynomial) -> Vec<Rational> {
    keys.iter().map(|m| p.coeff(m)).collect()
}

fn span_rank(ps: &[Polynomial]) -> usize {
    let keys: BTreeSet<Monomial> = ps
        .iter()
        .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
        .collect();
    rank(&ps.iter().map(|p| row(&keys, p)).collect::<Vec<_>>())
}

/// Products of at most `d` factors from `gens`, the empty product included.
fn products_upto(gens: &[Polynomial], d: u64) -> Vec<Polynomial> {
    fn go(gens: &[Polynomial], left: u64, cur: Polynomial, out: &mut Vec<Polynomial>) {
        let Some((g, rest)) = gens.split_first() else {
            out.push(cur);
            return;
        };
        let mut p = cur;
        for used in 0..=left {
            go(rest, left - used, p.clone(), out);
            p = &p * g;
        }
    }
    let mut out = Vec::new();
    go(gens, d, Polynomial::one(), &mut out);
    out
}

/// Truncated comparison of `ℂ[J_n 𝔤]^{J_n G}`, the restricted invariants and
/// the vertex Poisson center of `J_n ℂ[𝒮]`, as spaces graded by Slodowy
/// weight.
pub fn center_isomorphism_check(
    l: &LieAlgebraData,
    slice: &Slice,
    n: u32,
    d: u64,
) -> Result<CenterIsoReport> {
    center_isomorphism_check_with_budget(l, slice, n, d, &Budget::default())
}

/// [`center_isomorphism_check`] with an explicit Gröbner budget.
pub fn center_isomorphism_check_with_budget(
    l: &LieAlgebraData,
    slice: &Slice,
    n: u32,
    d: u64,
    budget: &Budget,
) -> Result<CenterIsoReport> {
    let mut report = CenterIsoReport {
        level: n,
        degree_bound: d,
        applicable: !l.structure.is_trivial(),
        slice_center: BTreeMap::new(),
        restricted_invariants: BTreeMap::new(),
        lie_center: BTreeMap::new(),
        invariants_central: false,
        restriction_injective: false,
        equal: false,
    };
    if !report.applicable {
        return Ok(report);
    }
    let lie_w = l
        .slodowy_weights()
        .ok_or(Error::MissingWeight(l.basis()[0].clone()))?;
    let spres = slice.presentation();
    let slice_w = spres
        .weights()
        .ok_or_else(|| Error::MissingWeight(spres.vars()[0].clone()))?;
    let sps = spres
        .poisson()
        .cloned()
        .unwrap_or_else(|| PoissonStructure::trivial(spres.vars().to_vec()));
    if let Some(x) = l
        .basis()
        .iter()
        .find(|x| !slice.restriction().contains_key(x))
    {
        return Err(Error::InvalidInput(format!(
            "slice restriction does not cover {x}"
        )));
    }

    let sjr = JetRing::new(spres, n).with_budget(budget.clone());
    let center = vp_center_upto(&sjr, &sps, &[], d, &Grading::Total)?;

    let lie = l.presentation();
    let ljr = JetRing::new(&lie, n).with_budget(budget.clone());
    let mut jets = Vec::new();
    for p in &l.invariants {
        let mut t = p.clone();
        for j in 0..=n {
            if j > 0 {
                t = ljr.derivation_t(&t);
            }
            jets.push(t.clone());
        }
    }
    let restricted: Vec<Polynomial> = jets.iter().map(|t| slice.restrict(t)).collect();
    let invariant_monomials: Vec<Polynomial> = products_upto(&restricted, d)
        .into_iter()
        .map(|p| sjr.normal_form(&p))
        .collect::<Result<_>>()?;

    let top = l
        .invariants
        .iter()
        .filter_map(Polynomial::degree)
        .max()
        .unwrap_or(0);
    let lie_center = vp_center_upto(
        &ljr,
        l.structure(),
        &[],
        d * u64::from(top),
        &Grading::Total,
    )?;
    let lie_restricted: Vec<Polynomial> = lie_center.iter().map(|z| slice.restrict(z)).collect();

    let slice_deg = slodowy_degree(slice_w);
    let lie_deg = slodowy_degree(lie_w);
    let invariants_basis: Vec<Polynomial> = {
        let keys: BTreeSet<Monomial> = invariant_monomials
            .iter()
            .flat_map(|p| p.terms().map(|(m, _)| m.clone()))
            .collect();
        let rows: Vec<Vec<Rational>> = invariant_monomials.iter().map(|p| row(&keys, p)).collect();
        crate::linalg::rref(rows)
            .0
            .into_iter()
            .map(|r| {
                Polynomial::from_terms(keys.iter().cloned().zip(r).filter(|(_, c)| !c.is_zero()))
            })
            .collect()
    };
    let graded = |basis: &[Polynomial], deg: &dyn Fn(&Monomial) -> u64| graded_dims(basis, deg);
    let slice_dims = graded(&center, &slice_deg);
    let inv_dims = graded(&invariants_basis, &slice_deg);
    let lie_dims = graded(&lie_center, &lie_deg);

    let mut with = center.clone();
    with.extend(invariant_monomials.iter().cloned());
    report.invariants_central = span_rank(&with) == span_rank(&center);
    report.restriction_injective = span_rank(&lie_restricted) == lie_center.len();
    report.equal = slice_dims.is_some()
        && slice_dims == inv_dims
        && slice_dims == lie_dims
        && report.invariants_central
        && report.restriction_injective;
    report.slice_center = slice_dims.unwrap_or_default();
    report.restricted_invariants = inv_dims.unwrap_or_default();
    report.lie_center = lie_dims.unwrap_or_default();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::ideal_equal;
    use crate::poly::{p, rat};
    use crate::vpa::is_chiral_ideal;

    fn free_jet(l: &LieAlgebraData, n: u32) -> JetRing {
        JetRing::new(&l.presentation(), n)
    }

    #[test]
    fn sl2_data() {
        let l = make_sl2();
        assert!(jacobi_check(l.structure(), &l.presentation()).unwrap());
        let omega = &l.invariants()[0];
        assert_eq!(*omega, p("e*f + h^2/4"));
        for x in l.basis() {
            assert!(l
                .structure()
                .bracket(&Polynomial::var(x.clone()), omega)
                .is_zero());
        }
        assert_eq!(l.structure().bracket(&p("h"), &p("e")), p("2*e"));
        assert_eq!(l.structure().bracket(&p("h"), &p("f")), p("-2*f"));
        assert_eq!(l.structure().bracket(&p("e"), &p("f")), p("h"));
        let w = free_jet(&l, 1).jet_weights().unwrap();
        assert_eq!(w[&VarId::new("e", 1)], 5);
    }

    #[test]
    fn rejects_non_casimir_invariant() {
        let l = make_sl2();
        let err =
            LieAlgebraData::new(l.structure().clone(), vec![p("e*f")], None, None).unwrap_err();
        assert!(matches!(err, Error::InvalidInput(m) if m.contains("Casimir")));
    }

    #[test]
    fn nilpotent_cone_is_chiral() {
        let l = make_sl2();
        let cone = nilpotent_cone(&l);
        assert!(ideal_equal(&cone, &Ideal::from_generators(vec![p("4*e*f + h^2")])).unwrap());
        let jr = free_jet(&l, 1);
        let gens = jr.jet_ideal(cone.generators()).generators().to_vec();
        assert!(is_chiral_ideal(&jr, l.structure(), &gens)
            .unwrap()
            .is_chiral());
        assert!(cone.contains(&Polynomial::zero()).unwrap());
        assert_eq!(
            p("e*f + h^2/4").evaluate(&BTreeMap::from([
                (VarId::base("e"), rat(0, 1)),
                (VarId::base("h"), rat(0, 1)),
                (VarId::base("f"), rat(0, 1)),
            ])),
            Ok(rat(0, 1))
        );
    }

    #[test]
    fn fiber_examples() {
        let l = make_sl2();
        let jr = free_jet(&l, 1);
        let spec = FiberSpec::parse(1, "1,0=3").unwrap();
        let ideal = fiber_ideal(&l, &jr, &spec).unwrap();
        let omega = p("e*f + h^2/4");
        let expect = Ideal::from_generators(vec![&omega - &p("3"), jr.derivation_t(&omega)]);
        assert!(ideal_equal(&ideal, &expect).unwrap());
        for n in 0..=2 {
            let jr = free_jet(&l, n);
            let zero = fiber_ideal(&l, &jr, &FiberSpec::zero(n)).unwrap();
            assert!(ideal_equal(&zero, &jr.jet_ideal(nilpotent_cone(&l).generators())).unwrap());
        }
    }

    #[test]
    fn fiber_spec_validation() {
        let l = make_sl2();
        let jr = free_jet(&l, 1);
        assert!(FiberSpec::parse(1, "1,0=3,1").is_err());
        assert!(FiberSpec::parse(1, "1=3").is_err());
        assert!(FiberSpec::parse(1, "1,0=3,1,0=2").is_err());
        assert_eq!(FiberSpec::parse(1, "1,0=3,1,1=1/2").unwrap().xi.len(), 2);
        assert!(fiber_ideal(&l, &jr, &FiberSpec::parse(1, "2,0=1").unwrap()).is_err());
        assert!(fiber_ideal(&l, &jr, &FiberSpec::parse(1, "1,2=1").unwrap()).is_err());
        assert!(fiber_ideal(&l, &jr, &FiberSpec::zero(0)).is_err());
        assert_eq!(
            FiberSpec::parse(1, "1,0=1/2;1,1=-3").unwrap().value(1, 1),
            rat(-3, 1)
        );
    }

    #[test]
    fn gr_of_fiber_is_zero_fiber() {
        let l = make_sl2();
        let xis = [
            "1,0=1",
            "1,0=-2;1,1=1/3",
            "1,1=5",
            "1,0=7/2;1,1=-1",
            "1,0=-1/5",
        ];
        for n in 0..=1 {
            let jr = free_jet(&l, n);
            let standard: BTreeMap<VarId, u32> = jr.vars().iter().map(|v| (v.clone(), 1)).collect();
            let slodowy = jr.jet_weights().unwrap();
            let zero = fiber_ideal(&l, &jr, &FiberSpec::zero(n)).unwrap();
            for xi in xis {
                let spec = FiberSpec::parse(n, xi);
                let Ok(spec) = spec.and_then(|s| s.check(1).map(|_| s)) else {
                    continue;
                };
                let ideal = fiber_ideal(&l, &jr, &spec).unwrap();
                for w in [&standard, &slodowy] {
                    assert!(
                        ideal_equal(&ideal.initial_ideal(w).unwrap(), &zero).unwrap(),
                        "{xi} at {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn fibers_are_chiral() {
        let l = make_sl2();
        let jr = free_jet(&l, 1);
        for xi in ["1,0=1", "1,0=-2;1,1=1/3", "1,1=5"] {
            let ideal = fiber_ideal(&l, &jr, &FiberSpec::parse(1, xi).unwrap()).unwrap();
            assert!(is_chiral_ideal(&jr, l.structure(), ideal.generators())
                .unwrap()
                .is_chiral());
        }
    }

    #[test]
    fn kostant_slice() {
        let l = make_sl2();
        let slice = regular_slice_sl2();
        let psi = slice.restrict(&l.invariants()[0]);
        assert_eq!(psi, p("s"));
        let restricted = Ideal::from_generators(
            nilpotent_cone(&l)
                .generators()
                .iter()
                .map(|g| slice.restrict(g))
                .collect(),
        );
        assert!(ideal_equal(&restricted, &Ideal::from_generators(vec![p("s")])).unwrap());
        // jets: e_(-2) -> s_(-2), f_(-2) -> 0
        assert_eq!(slice.restrict(&p("e_(-2)*f + f_(-2)")), p("s_(-2)"));
        let jr = free_jet(&l, 2);
        let t2 = jr.derivation_t(&jr.derivation_t(&l.invariants()[0]));
        assert_eq!(slice.restrict(&t2), p("2*s_(-3)"));
    }

    #[test]
    fn slice_fiber_initial_ideal() {
        let slice = regular_slice_sl2();
        let jr = JetRing::new(slice.presentation(), 0);
        let spec = FiberSpec::parse(0, "1,0=3").unwrap();
        let ideal = fiber_ideal_of(&jr, &[p("s")], &spec).unwrap();
        let zero = fiber_ideal_of(&jr, &[p("s")], &FiberSpec::zero(0)).unwrap();
        let w = jr.jet_weights().unwrap();
        assert!(ideal_equal(&ideal.initial_ideal(&w).unwrap(), &zero).unwrap());
    }

    #[test]
    fn slice_center_is_everything() {
        let slice = regular_slice_sl2();
        let jr = JetRing::new(slice.presentation(), 1);
        let c = vp_center_upto(
            &jr,
            slice.presentation().poisson().unwrap(),
            &[],
            2,
            &Grading::Total,
        )
        .unwrap();
        assert_eq!(c.len(), 6);
    }

    #[test]
    fn center_isomorphism() {
        let l = make_sl2();
        let slice = regular_slice_sl2();
        for (n, d) in [(0, 3), (1, 2)] {
            let r = center_isomorphism_check(&l, &slice, n, d).unwrap();
            assert!(r.applicable && r.equal, "{r:?}");
        }
        let r = center_isomorphism_check(&l, &slice, 0, 2).unwrap();
        assert_eq!(r.slice_center, BTreeMap::from([(0, 1), (4, 1), (8, 1)]));
    }

    #[test]
    fn trivial_bracket_is_inapplicable() {
        let basis = ["e", "h", "f"].map(VarId::base).to_vec();
        let l = LieAlgebraData::new(PoissonStructure::trivial(basis), vec![p("e")], None, None)
            .unwrap();
        let r = center_isomorphism_check(&l, &regular_slice_sl2(), 1, 2).unwrap();
        assert!(!r.applicable && !r.equal);
    }

    #[test]
    fn products() {
        assert_eq!(products_upto(&[p("x"), p("y")], 2).len(), 6);
        assert_eq!(products_upto(&[], 3), vec![p("1")]);
    }
}
