//! Rank matrices `𝓜_n` of jet schemes, pointwise ranks and rank strata.

use crate::error::{Error, Result};
use crate::groebner::{minors, Ideal};
use crate::jet::{JetPoint, JetRing};
use crate::linalg;
use crate::poly::{factorial, Polynomial, Rational};
use crate::vpa::{apply_mode, bracket_on_jet_vars, ChiralOperator, PoissonStructure};

/// `𝓜_n = (g^i_(p) (T^q g^j))`, rows indexed by `(p, i)` and columns by
/// `(q, j)`, block-major: row `p·r + i`, column `q·r + j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankMatrix {
    level: u32,
    generators: Vec<Polynomial>,
    entries: Vec<Vec<Polynomial>>,
}

/// First block of a [`RankMatrix`] that breaks the triangular block form.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BlockViolation {
    pub p: u32,
    pub q: u32,
}

impl RankMatrix {
    /// Wraps precomputed entries; only the shape is checked.
    pub fn from_entries(
        level: u32,
        generators: Vec<Polynomial>,
        entries: Vec<Vec<Polynomial>>,
    ) -> Result<Self> {
        let size = (level as usize + 1) * generators.len();
        if entries.len() != size || entries.iter().any(|r| r.len() != size) {
            return Err(Error::InvalidInput(format!(
                "rank matrix must be {size}x{size}"
            )));
        }
        Ok(RankMatrix {
            level,
            generators,
            entries,
        })
    }

    pub fn level(&self) -> u32 {
        self.level
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn size(&self) -> usize {
        self.entries.len()
    }

    /// Block `(p, q)` as an `r × r` matrix.
    pub fn block(&self, p: u32, q: u32) -> Vec<Vec<Polynomial>> {
        let r = self.generators.len();
        let (p, q) = (p as usize, q as usize);
        (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| self.entries[p * r + i][q * r + j].clone())
                    .collect()
            })
            .collect()
    }

    /// Rank of the matrix evaluated at `x`.
    pub fn rank_at(&self, x: &JetPoint) -> Result<usize> {
        if x.level() != self.level {
            return Err(Error::InvalidInput(format!(
                "point of level {} given for a level {} matrix",
                x.level(),
                self.level
            )));
        }
        let rows = self
            .entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| x.evaluate(e))
                    .collect::<Result<Vec<Rational>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(linalg::rank(&rows))
    }

    /// `rk x = rank 𝓜_n(x) / (n + 1)`.
    ///
    /// Over points where `𝓜₀` drops rank, the off-diagonal blocks can raise
    /// the rank of `𝓜_n(x)` above `(n + 1)·rank 𝓜₀(π(x))`; when the result is
    /// not a multiple of `n + 1` this fails with
    /// [`Error::DivisibilityViolation`].
    pub fn rk_at(&self, x: &JetPoint) -> Result<usize> {
        let rank = self.rank_at(x)?;
        let n1 = self.level as usize + 1;
        if rank % n1 != 0 {
            return Err(Error::DivisibilityViolation {
                rank,
                level: self.level,
            });
        }
        Ok(rank / n1)
    }

    /// Checks the block form: zero below the diagonal, `p!·𝓜₀` on it and
    /// `q!/(q-p)!·T^(q-p) 𝓜₀` above, with `𝓜₀` read off block `(0, 0)`.
    pub fn verify_block_structure(&self, jr: &JetRing) -> std::result::Result<(), BlockViolation> {
        let m0 = self.block(0, 0);
        for p in 0..=self.level {
            for q in 0..=self.level {
                let block = self.block(p, q);
                let ok = if p > q {
                    block.iter().flatten().all(Polynomial::is_zero)
                } else {
                    let c = factorial(q) / factorial(q - p);
                    block.iter().zip(&m0).all(|(row, row0)| {
                        row.iter().zip(row0).all(|(e, e0)| {
                            let mut t = e0.clone();
                            for _ in 0..q - p {
                                t = jr.derivation_t(&t);
                            }
                            *e == t.scale(&c)
                        })
                    })
                };
                if !ok {
                    return Err(BlockViolation { p, q });
                }
            }
        }
        Ok(())
    }
}

/// `𝓜_n` for the presentation's variables as generators, entries taken from
/// [`bracket_on_jet_vars`].
pub fn build_rank_matrix(jr: &JetRing, ps: &PoissonStructure) -> Result<RankMatrix> {
    let r = ps.dim();
    let n = jr.level();
    let size = (n as usize + 1) * r;
    let mut entries = vec![vec![Polynomial::zero(); size]; size];
    for p in 0..=n {
        for q in 0..=n {
            for i in 0..r {
                for j in 0..r {
                    entries[p as usize * r + i][q as usize * r + j] =
                        bracket_on_jet_vars(ps, jr, i, p, j, q)?;
                }
            }
        }
    }
    let generators = ps.vars().iter().cloned().map(Polynomial::var).collect();
    RankMatrix::from_entries(n, generators, entries)
}

/// `𝓜_n` for arbitrary base generators of the ring, entries computed with
/// [`apply_mode`] and reduced modulo the jet relations.
pub fn build_rank_matrix_for(
    jr: &JetRing,
    ps: &PoissonStructure,
    generators: &[Polynomial],
) -> Result<RankMatrix> {
    let r = generators.len();
    let n = jr.level();
    let size = (n as usize + 1) * r;
    let mut entries = vec![vec![Polynomial::zero(); size]; size];
    for q in 0..=n {
        let targets: Vec<Polynomial> = generators
            .iter()
            .map(|g| jr.negative_mode(g, q).scale(&factorial(q)))
            .collect();
        for p in 0..=n {
            for (i, g) in generators.iter().enumerate() {
                let op = ChiralOperator::new(g.clone(), p, n);
                for (j, t) in targets.iter().enumerate() {
                    let e = apply_mode(ps, &op, t)?;
                    entries[p as usize * r + i][q as usize * r + j] = jr.normal_form(&e)?;
                }
            }
        }
    }
    RankMatrix::from_entries(n, generators.to_vec(), entries)
}

pub fn rank_at(m: &RankMatrix, x: &JetPoint) -> Result<usize> {
    m.rank_at(x)
}

pub fn verify_block_structure(
    m: &RankMatrix,
    jr: &JetRing,
) -> std::result::Result<(), BlockViolation> {
    m.verify_block_structure(jr)
}

/// The rank stratum `{rank 𝓜₀ ≤ j}` and its preimage in the jet scheme.
#[derive(Clone, Debug)]
pub struct Stratum {
    pub j: usize,
    /// Minors of size `j + 1` of `𝓜₀` together with the base relations.
    pub base_ideal: Ideal,
    /// The same generators in `J_n R`, together with the jet relations.
    pub jet_ideal: Ideal,
}

pub fn stratum(jr: &JetRing, ps: &PoissonStructure, j: usize) -> Stratum {
    let mut gens = minors(ps.matrix(), j + 1);
    gens.extend(jr.base().relations().iter().cloned());
    let base_ideal = Ideal::from_generators(gens.clone()).with_budget(jr.budget().clone());
    gens.extend(jr.relations().iter().cloned());
    Stratum {
        j,
        base_ideal,
        jet_ideal: Ideal::from_generators(gens).with_budget(jr.budget().clone()),
    }
}

/// `{x^i, g} ∈ I` for every variable and generator.
pub fn is_poisson_ideal(ps: &PoissonStructure, ideal: &Ideal) -> Result<bool> {
    for g in ideal.generators() {
        for x in ps.vars() {
            if !ideal.contains(&ps.bracket(&Polynomial::var(x.clone()), g))? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use std::collections::BTreeMap;

    use proptest::prelude::*;

    use super::*;
    use crate::jet::{iota_point, truncate_point, RingPresentation};
    use crate::poly::{p, rat, VarId};
    use crate::vpa::is_chiral_ideal;
    use crate::vpa::tests::sl2;

    fn free(ps: &PoissonStructure, level: u32) -> JetRing {
        JetRing::new(
            &RingPresentation::free(ps.vars().to_vec(), Some(ps.clone())).unwrap(),
            level,
        )
    }

    fn plane() -> PoissonStructure {
        let vars = vec![VarId::base("p"), VarId::base("q")];
        PoissonStructure::new(vars, vec![vec![p("0"), p("1")], vec![p("-1"), p("0")]]).unwrap()
    }

    fn base_point(e: i64, h: i64, f: i64) -> BTreeMap<VarId, Rational> {
        BTreeMap::from([
            (VarId::base("e"), rat(e, 1)),
            (VarId::base("h"), rat(h, 1)),
            (VarId::base("f"), rat(f, 1)),
        ])
    }

    #[test]
    fn level_zero_matrix_is_the_bracket() {
        let ps = sl2();
        let m = build_rank_matrix(&free(&ps, 0), &ps).unwrap();
        assert_eq!(m.entries(), ps.matrix());
        let triv = PoissonStructure::trivial(ps.vars().to_vec());
        let m = build_rank_matrix(&free(&triv, 1), &triv).unwrap();
        assert!(m.entries().iter().flatten().all(Polynomial::is_zero));
    }

    #[test]
    fn ranks_at_points() {
        let ps = sl2();
        let j0 = free(&ps, 0);
        let m0 = build_rank_matrix(&j0, &ps).unwrap();
        assert_eq!(
            m0.rank_at(&iota_point(&j0, &base_point(0, 0, 0)).unwrap())
                .unwrap(),
            0
        );
        assert_eq!(
            m0.rank_at(&iota_point(&j0, &base_point(1, 0, 0)).unwrap())
                .unwrap(),
            2
        );
        let j1 = free(&ps, 1);
        let m1 = build_rank_matrix(&j1, &ps).unwrap();
        let x = iota_point(&j1, &base_point(1, 0, 0)).unwrap();
        assert_eq!(m1.rank_at(&x).unwrap(), 4);
        assert_eq!(m1.rk_at(&x).unwrap(), 2);
        assert!(m0.rank_at(&x).is_err());
    }

    #[test]
    fn block_structure_holds() {
        let ps = sl2();
        for n in 0..=2 {
            let jr = free(&ps, n);
            assert_eq!(
                build_rank_matrix(&jr, &ps)
                    .unwrap()
                    .verify_block_structure(&jr),
                Ok(())
            );
        }
        let pl = plane();
        let jr = free(&pl, 3);
        assert_eq!(
            build_rank_matrix(&jr, &pl)
                .unwrap()
                .verify_block_structure(&jr),
            Ok(())
        );
    }

    #[test]
    fn corrupted_entries_are_caught() {
        let ps = sl2();
        let jr = free(&ps, 2);
        let m = build_rank_matrix(&jr, &ps).unwrap();
        let mut entries = m.entries().to_vec();
        // drop the factor 2! on the (2, 2) block
        entries[6][8] = ps.entry(0, 2).clone();
        let bad = RankMatrix::from_entries(2, m.generators().to_vec(), entries).unwrap();
        assert_eq!(
            bad.verify_block_structure(&jr),
            Err(BlockViolation { p: 2, q: 2 })
        );
        let mut entries = m.entries().to_vec();
        entries[4][0] = p("e");
        let bad = RankMatrix::from_entries(2, m.generators().to_vec(), entries).unwrap();
        assert_eq!(
            bad.verify_block_structure(&jr),
            Err(BlockViolation { p: 1, q: 0 })
        );
    }

    #[test]
    fn odd_rank_is_a_divisibility_violation() {
        let ps = sl2();
        let jr = free(&ps, 1);
        let m = build_rank_matrix(&jr, &ps).unwrap();
        let mut entries = vec![vec![Polynomial::zero(); 6]; 6];
        entries[0][0] = p("1");
        let bad = RankMatrix::from_entries(1, m.generators().to_vec(), entries).unwrap();
        let x = iota_point(&jr, &base_point(0, 0, 0)).unwrap();
        assert!(matches!(
            bad.rk_at(&x),
            Err(Error::DivisibilityViolation { rank: 1, level: 1 })
        ));
    }

    #[test]
    fn two_routes_agree() {
        let ps = sl2();
        let jr = free(&ps, 2);
        let gens: Vec<Polynomial> = ps.vars().iter().cloned().map(Polynomial::var).collect();
        assert_eq!(
            build_rank_matrix_for(&jr, &ps, &gens).unwrap(),
            build_rank_matrix(&jr, &ps).unwrap()
        );
    }

    #[test]
    fn other_generators_give_same_ranks() {
        let ps = sl2();
        let jr = free(&ps, 1);
        let std = build_rank_matrix(&jr, &ps).unwrap();
        let alt = build_rank_matrix_for(&jr, &ps, &[p("e"), p("e + h"), p("f - e")]).unwrap();
        for (e, h, f) in [(1, 0, 0), (0, 0, 0), (2, -1, 3), (0, 2, 0)] {
            let x = iota_point(&jr, &base_point(e, h, f)).unwrap();
            assert_eq!(std.rank_at(&x).unwrap(), alt.rank_at(&x).unwrap());
        }
    }

    #[test]
    fn strata() {
        let ps = sl2();
        let jr = free(&ps, 1);
        let s0 = stratum(&jr, &ps, 0);
        for x in ["e", "h", "f"] {
            assert!(s0.base_ideal.radical_contains(&p(x)).unwrap());
        }
        assert!(stratum(&jr, &ps, 2).base_ideal.generators().is_empty());
        let pl = plane();
        assert!(stratum(&free(&pl, 0), &pl, 1).base_ideal.is_unit().unwrap());
        for j in 0..3 {
            let s = stratum(&jr, &ps, j);
            assert!(is_poisson_ideal(&ps, &s.base_ideal).unwrap());
            assert!(is_chiral_ideal(&jr, &ps, s.jet_ideal.generators())
                .unwrap()
                .is_chiral());
        }
        // chain: each (j+2)-minor vanishes on the j-th stratum
        for j in 0..2 {
            let lower = stratum(&jr, &ps, j);
            for g in minors(ps.matrix(), j + 2) {
                assert!(lower.base_ideal.radical_contains(&g).unwrap());
            }
        }
    }

    fn cone_point(a: [i64; 3], b: [i64; 3]) -> BTreeMap<VarId, Vec<Rational>> {
        // e = a(t)^2, h = 2 a(t) b(t), f = -b(t)^2, truncated at t^2
        let mul = |x: [i64; 3], y: [i64; 3]| -> Vec<Rational> {
            (0..3)
                .map(|k| rat((0..=k).map(|i| x[i] * y[k - i]).sum(), 1))
                .collect()
        };
        let e = mul(a, a);
        let h: Vec<Rational> = mul(a, b).into_iter().map(|c| c * rat(2, 1)).collect();
        let f: Vec<Rational> = mul(b, b).into_iter().map(|c| -c).collect();
        BTreeMap::from([
            (VarId::base("e"), e),
            (VarId::base("h"), h),
            (VarId::base("f"), f),
        ])
    }

    #[test]
    fn rank_identity_fails_over_the_singular_locus() {
        // e(t) = t^2, h = f = 0 lies on the cone over the origin
        let ps = sl2();
        let cone = RingPresentation::new(
            ps.vars().to_vec(),
            vec![p("e*f + h^2/4")],
            Some(ps.clone()),
            None,
        )
        .unwrap();
        let jr = JetRing::new(&cone, 2);
        let x = JetPoint::from_series(&jr, &cone_point([0, 1, 0], [0, 0, 0])).unwrap();
        let m = build_rank_matrix(&jr, &ps).unwrap();
        assert_eq!(m.rank_at(&x).unwrap(), 2);
        assert!(matches!(
            m.rk_at(&x),
            Err(Error::DivisibilityViolation { rank: 2, level: 2 })
        ));
    }

    proptest! {
        #[test]
        fn rank_is_multiple_of_base_rank(a in prop::array::uniform3(-2i64..=2), b in prop::array::uniform3(-2i64..=2),
                                         n in 0u32..3) {
            let ps = sl2();
            let cone = RingPresentation::new(ps.vars().to_vec(), vec![p("e*f + h^2/4")], Some(ps.clone()), None).unwrap();
            let jr = JetRing::new(&cone, n);
            let j0 = JetRing::new(&cone, 0);
            let x = JetPoint::from_series(&jr, &cone_point(a, b)).unwrap();
            let mn = build_rank_matrix(&jr, &ps).unwrap();
            let m0 = build_rank_matrix(&j0, &ps).unwrap();
            let base = m0.rank_at(&truncate_point(&x, 0).unwrap()).unwrap();
            let rank = mn.rank_at(&x).unwrap();
            // block triangular with diagonal blocks p!·𝓜₀
            prop_assert!(rank >= (n as usize + 1) * base);
            if a[0] != 0 || b[0] != 0 {
                prop_assert_eq!(rank, (n as usize + 1) * base);
            }
        }

        #[test]
        fn generic_free_points(c in prop::collection::vec(-4i64..=4, 9), n in 0u32..3) {
            let ps = sl2();
            let jr = free(&ps, n);
            prop_assume!(c[0] != 0 || c[1] != 0 || c[2] != 0);
            let coords = jr.vars().iter().cloned().zip(c.iter().map(|&v| rat(v, 1))).collect();
            let x = JetPoint::new(&jr, coords).unwrap();
            let m = build_rank_matrix(&jr, &ps).unwrap();
            prop_assert_eq!(m.rk_at(&x).unwrap(), 2);
        }
    }
}
