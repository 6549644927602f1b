//! Gluing cotorsion pairs and (co)tilting modules along a recollement.

use crate::approx::{
    special_precover_universe, special_preenvelope_tilting, special_preenvelope_universe,
    ApproxSequence,
};
use crate::error::{Error, Result};
use crate::homology::{global_dimension, id, pd, pushout, ShortExact, DEFAULT_DIM_CAP};
use crate::modcat::{decompose_grouped, direct_sum, QModule, Universe};
use crate::recollement::Recollement;
use crate::tilting::{
    cotorsion_pair_from_cotilting, cotorsion_pair_from_tilting, verify_cotilting, verify_tilting,
    CotorsionPairData, ExtTable, PairKind, Verdict,
};

/// Universes of indecomposables over the three algebras of a recollement.
#[derive(Clone, Debug)]
pub struct Universes {
    pub a: Universe,
    pub total: Universe,
    pub c: Universe,
}

impl Universes {
    /// Universes for the opposite recollement: sides swap.
    pub fn dualize(&self) -> Universes {
        Universes {
            a: self.c.dualize(),
            total: self.total.dualize(),
            c: self.a.dualize(),
        }
    }
}

/// The glued pair `(U₂, V₂)` on the total universe.
#[derive(Clone, Debug)]
pub struct GluedPair {
    pub pair_a: CotorsionPairData,
    pub pair_c: CotorsionPairData,
    /// `V₂ = {B : i^!B ∈ V₁, j^*B ∈ V₃}`, `U₂ = ⊥₁V₂`.
    pub pair: CotorsionPairData,
    /// `Ũ₂ = {B : i^*B ∈ U₁, j^*B ∈ U₃}`.
    pub u2_tilde: Vec<usize>,
}

impl GluedPair {
    pub fn universe(&self) -> &Universe {
        &self.pair.universe
    }

    pub fn u2(&self) -> &[usize] {
        &self.pair.u_members
    }

    pub fn v2(&self) -> &[usize] {
        &self.pair.v_members
    }

    /// `U₂ ∩ V₂`.
    pub fn t2(&self) -> Vec<usize> {
        self.pair.core()
    }
}

fn in_class(universe: &Universe, members: &[usize], m: &QModule) -> Result<bool> {
    Ok(universe
        .multiplicities(m)?
        .iter()
        .enumerate()
        .all(|(k, &mult)| mult == 0 || members.contains(&k)))
}

fn require_exactness(r: &Recollement) -> Result<()> {
    let e = r.exactness();
    if !e.i_shriek() {
        return Err(Error::ExactnessMissing("i^! is not exact".into()));
    }
    if !e.j_lower_shriek() {
        return Err(Error::ExactnessMissing("j_! is not exact".into()));
    }
    Ok(())
}

/// Glue cotorsion pairs on the two sides into one on the total universe.
pub fn glued_classes(
    r: &Recollement,
    pair_a: &CotorsionPairData,
    pair_c: &CotorsionPairData,
    universe: &Universe,
) -> Result<GluedPair> {
    require_exactness(r)?;
    let (ua, uc) = (&pair_a.universe, &pair_c.universe);
    let mut v2 = Vec::new();
    let mut u2_tilde = Vec::new();
    for (k, b) in universe.members().iter().enumerate() {
        let jb = r.j_upper_star(b)?;
        if in_class(ua, &pair_a.v_members, &r.i_shriek(b)?)?
            && in_class(uc, &pair_c.v_members, &jb)?
        {
            v2.push(k);
        }
        if in_class(ua, &pair_a.u_members, &r.i_upper_star(b)?)?
            && in_class(uc, &pair_c.u_members, &jb)?
        {
            u2_tilde.push(k);
        }
    }
    let pair = CotorsionPairData::from_v(universe.clone(), v2, PairKind::Plain)?;
    if let Some(&bad) = pair.u_members.iter().find(|k| !u2_tilde.contains(k)) {
        return Err(Error::UniverseInconsistent(format!(
            "{} lies in ⊥₁V₂ but not in Ũ₂",
            universe.name(bad)
        )));
    }
    let issues = pair.check()?;
    if !issues.is_empty() {
        return Err(Error::UniverseInconsistent(issues.join("; ")));
    }
    Ok(GluedPair {
        pair_a: pair_a.clone(),
        pair_c: pair_c.clone(),
        pair,
        u2_tilde,
    })
}

/// Evidence that a glued pair is a hereditary cotorsion pair on its universe.
#[derive(Clone, Debug)]
pub struct GluedCertificate {
    pub ext1_vanishes: bool,
    pub ext2_vanishes: bool,
    /// Expected when both input pairs are hereditary.
    pub hereditary_expected: bool,
    /// Per universe member: `0 -> K -> U -> B -> 0` and `0 -> B -> V -> C -> 0`.
    pub approximations: Vec<(ApproxSequence, ApproxSequence)>,
    pub approximations_recheck: bool,
}

impl GluedCertificate {
    pub fn ok(&self) -> bool {
        self.ext1_vanishes
            && (!self.hereditary_expected || self.ext2_vanishes)
            && self.approximations_recheck
    }
}

/// Exhaustive checks of a glued pair: Ext¹ and Ext² vanishing between the
/// classes, and both approximation sequences for every universe member.
pub fn check_glued_pair(g: &GluedPair) -> Result<GluedCertificate> {
    let u = g.universe();
    let t1 = ExtTable::new(u, 1)?;
    let t2 = ExtTable::new(u, 2)?;
    let us = g.pair.u_modules();
    let vs = g.pair.v_modules();
    let mut approximations = Vec::new();
    let mut all = true;
    for b in u.members() {
        let pc = special_precover_universe(b, &us, &vs)?;
        let pe = special_preenvelope_universe(b, &us, &vs)?;
        all &= pc.recheck()? && pe.recheck()?;
        approximations.push((pc, pe));
    }
    Ok(GluedCertificate {
        ext1_vanishes: t1.vanishes(g.u2(), g.v2()),
        ext2_vanishes: t2.vanishes(g.u2(), g.v2()),
        hereditary_expected: g.pair_a.hereditary && g.pair_c.hereditary,
        approximations,
        approximations_recheck: all,
    })
}

/// The module `K_{T''}` with its two defining sequences.
#[derive(Clone, Debug)]
pub struct KConstruction {
    pub t_dd: QModule,
    /// `0 -> i^!j_!T'' -> V₁ -> U₁ -> 0`.
    pub preenvelope: ApproxSequence,
    /// `0 -> j_!T'' -> K -> i_*U₁ -> 0`.
    pub column: ShortExact,
    /// `0 -> i_*V₁ -> K -> j_*T'' -> 0`.
    pub row: ShortExact,
}

impl KConstruction {
    pub fn module(&self) -> &QModule {
        self.column.middle()
    }
}

/// Push `j_!T''` out along `i_*` of a special `V₁`-preenvelope of
/// `i^!j_!T''`, where `T₁` is n₁-tilting over the A-side.
pub fn k_construction(
    r: &Recollement,
    t_dd: &QModule,
    t1: &QModule,
    n1: usize,
) -> Result<KConstruction> {
    let jt = r.j_lower_shriek(t_dd)?;
    let theta = r.counit_i(&jt)?;
    let x = r.i_shriek(&jt)?;
    let preenvelope = special_preenvelope_tilting(&x, t1, n1)?;
    let iota = r.i_star_map(&preenvelope.sequence.left)?;
    let theta = theta.retarget(iota.source(), &jt)?;
    let (_, from_v, from_j) = pushout(&iota, &theta)?;
    let (_, to_u) = from_j.cokernel();
    let (_, to_j) = from_v.cokernel();
    Ok(KConstruction {
        t_dd: t_dd.clone(),
        preenvelope,
        column: ShortExact {
            left: from_j,
            right: to_u,
        },
        row: ShortExact {
            left: from_v,
            right: to_j,
        },
    })
}

/// Dimension bounds checked on a glued result.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub what: String,
    /// `None` when the dimension exceeds the search cap.
    pub value: Option<usize>,
    pub bound: usize,
}

impl Bound {
    pub fn holds(&self) -> bool {
        self.value.is_some_and(|v| v <= self.bound)
    }
}

/// A glued tilting or cotilting module and its certificates.
#[derive(Clone, Debug)]
pub struct GlueOutcome {
    pub t2: QModule,
    pub n2: usize,
    pub verdict: Verdict,
    pub glued: GluedPair,
    /// Multiplicities of `T₂` over the total universe.
    pub multiplicities: Vec<usize>,
    /// `add(T₂) = U₂ ∩ V₂` on the universe.
    pub matches_core: bool,
    pub k_constructions: Vec<KConstruction>,
    pub bounds: Vec<Bound>,
    /// `T₂ ≅ i_*T₁ ⊕ j_!T₃` up to add, checked only when `i^*` is exact.
    pub split_check: Option<bool>,
}

impl GlueOutcome {
    pub fn support(&self) -> Vec<usize> {
        (0..self.multiplicities.len())
            .filter(|&k| self.multiplicities[k] > 0)
            .collect()
    }

    pub fn summand_names(&self) -> Vec<String> {
        let u = self.glued.universe();
        self.support()
            .iter()
            .map(|&k| u.name(k).to_string())
            .collect()
    }

    pub fn describe(&self) -> String {
        self.glued.universe().describe(&self.multiplicities)
    }
}

fn not_tilting(v: Verdict, what: &str) -> Result<()> {
    match v {
        Verdict::Accepted(_) => Ok(()),
        Verdict::Refuted(r) => Err(Error::NotTilting(format!("{what}: {r}"))),
    }
}

fn pieces(m: &QModule) -> Result<Vec<QModule>> {
    Ok(decompose_grouped(m)?.into_iter().map(|(s, _)| s).collect())
}

fn same_add(universe: &Universe, x: &QModule, y: &QModule) -> Result<bool> {
    Ok(universe.support(x)? == universe.support(y)?)
}

/// `T₂ = i_*T₁ ⊕ ⨁ K_{T''}` over the indecomposable summands `T''` of `T₃`.
pub fn glue_tilting(
    r: &Recollement,
    t1: &QModule,
    n1: usize,
    t3: &QModule,
    n3: usize,
    universes: &Universes,
) -> Result<GlueOutcome> {
    require_exactness(r)?;
    not_tilting(verify_tilting(t1, n1)?, "T₁")?;
    not_tilting(verify_tilting(t3, n3)?, "T₃")?;
    let pair_a = cotorsion_pair_from_tilting(t1, n1, &universes.a)?;
    let pair_c = cotorsion_pair_from_tilting(t3, n3, &universes.c)?;
    let glued = glued_classes(r, &pair_a, &pair_c, &universes.total)?;
    let u = &universes.total;

    let mut k_constructions = Vec::new();
    let mut parts = vec![r.i_star(t1)?];
    let core = glued.t2();
    for t_dd in pieces(t3)? {
        let kc = k_construction(r, &t_dd, t1, n1)?;
        if !in_class(u, &core, kc.module())? {
            return Err(Error::PreconditionFailed(format!(
                "K for the summand {} of T₃ is {} and not in U₂ ∩ V₂",
                t_dd.dim_vector_string(),
                u.describe(&u.multiplicities(kc.module())?)
            )));
        }
        parts.push(kc.module().clone());
        k_constructions.push(kc);
    }
    let t2 = direct_sum(r.total(), &parts)?;
    let n2 = pd(&t2, DEFAULT_DIM_CAP)
        .ok_or_else(|| Error::PreconditionFailed("pd T₂ exceeds the cap".into()))?;
    let verdict = verify_tilting(&t2, n2)?;
    let multiplicities = u.multiplicities(&t2)?;
    let matches_core = u.support(&t2)? == core;

    let mut bounds = vec![Bound {
        what: "pd T₂".into(),
        value: Some(n2),
        bound: n1.max(n3),
    }];
    if global_dimension(r.a_algebra(), DEFAULT_DIM_CAP).is_some() {
        let value = glued
            .u2()
            .iter()
            .map(|&k| pd(u.member(k), DEFAULT_DIM_CAP))
            .try_fold(0, |acc, d| d.map(|d| acc.max(d)));
        bounds.push(Bound {
            what: "pd U₂".into(),
            value,
            bound: (n1 + 1).max(n3),
        });
    }
    let split_check = if r.exactness().i_upper_star() {
        let other = direct_sum(r.total(), &[r.i_star(t1)?, r.j_lower_shriek(t3)?])?;
        Some(same_add(u, &t2, &other)?)
    } else {
        None
    };
    Ok(GlueOutcome {
        t2,
        n2,
        verdict,
        glued,
        multiplicities,
        matches_core,
        k_constructions,
        bounds,
        split_check,
    })
}

/// `T₂ = ⨁(U₂ ∩ V₂)` for the glued pair of two cotilting pairs.
pub fn glue_cotilting(
    r: &Recollement,
    t1: &QModule,
    n1: usize,
    t3: &QModule,
    n3: usize,
    universes: &Universes,
) -> Result<GlueOutcome> {
    require_exactness(r)?;
    let check = |v: Verdict, what: &str| match v {
        Verdict::Accepted(_) => Ok(()),
        Verdict::Refuted(e) => Err(Error::NotTilting(format!("{what} is not cotilting: {e}"))),
    };
    check(verify_cotilting(t1, n1)?, "T₁")?;
    check(verify_cotilting(t3, n3)?, "T₃")?;
    let pair_a = cotorsion_pair_from_cotilting(t1, n1, &universes.a)?;
    let pair_c = cotorsion_pair_from_cotilting(t3, n3, &universes.c)?;
    let glued = glued_classes(r, &pair_a, &pair_c, &universes.total)?;
    let u = &universes.total;
    let core = glued.t2();
    if core.is_empty() {
        return Err(Error::UniverseInconsistent("U₂ ∩ V₂ is empty".into()));
    }
    let parts: Vec<QModule> = core.iter().map(|&k| u.member(k).clone()).collect();
    let t2 = direct_sum(r.total(), &parts)?;
    let n2 = id(&t2, DEFAULT_DIM_CAP)
        .ok_or_else(|| Error::PreconditionFailed("id T₂ exceeds the cap".into()))?;
    let verdict = verify_cotilting(&t2, n2)?;
    let multiplicities = u.multiplicities(&t2)?;
    let value = glued
        .v2()
        .iter()
        .map(|&k| id(u.member(k), DEFAULT_DIM_CAP))
        .try_fold(0, |acc, d| d.map(|d| acc.max(d)));
    let bounds = vec![
        Bound {
            what: "id T₂".into(),
            value: Some(n2),
            bound: (n1 + 1).max(n3),
        },
        Bound {
            what: "id V₂".into(),
            value,
            bound: (n1 + 1).max(n3),
        },
    ];
    Ok(GlueOutcome {
        t2,
        n2,
        verdict,
        glued,
        multiplicities,
        matches_core: true,
        k_constructions: Vec::new(),
        bounds,
        split_check: None,
    })
}

/// The recollement of the opposite algebra, with the sides exchanged.
pub fn opposite_recollement(r: &Recollement) -> Result<Recollement> {
    Recollement::with_algebras(
        &r.total().opposite(),
        r.c_vertices(),
        &r.c_algebra().opposite(),
        &r.a_algebra().opposite(),
    )
}

/// Cotilting gluing through duality: glue the tilting modules `DT₃` (now on
/// the A-side) and `DT₁` over the opposite recollement and dualize back.
/// Returns the resulting multiplicities over the original total universe.
pub fn glue_cotilting_via_duality(
    r: &Recollement,
    t1: &QModule,
    n1: usize,
    t3: &QModule,
    n3: usize,
    universes: &Universes,
) -> Result<(QModule, Vec<usize>)> {
    let rop = opposite_recollement(r)?;
    let out = glue_tilting(
        &rop,
        &t3.dualize(),
        n3,
        &t1.dualize(),
        n1,
        &universes.dualize(),
    )?;
    let back = out.t2.dualize();
    let mult = universes.total.multiplicities(&back)?;
    Ok((back, mult))
}

/// Compare two modules as multisets of universe members, ignoring
/// multiplicities; returns the names missing from and extra in `actual`.
pub fn diff_support(
    universe: &Universe,
    expected: &[&str],
    actual: &QModule,
) -> Result<(Vec<String>, Vec<String>)> {
    let support = universe.support(actual)?;
    let got: Vec<&str> = support.iter().map(|&k| universe.name(k)).collect();
    let missing = expected
        .iter()
        .filter(|n| !got.contains(n))
        .map(|s| s.to_string())
        .collect();
    let extra = got
        .iter()
        .filter(|n| !expected.contains(n))
        .map(|s| s.to_string())
        .collect();
    Ok((missing, extra))
}
