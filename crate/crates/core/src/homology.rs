//! Minimal projective resolutions, syzygies and cosyzygies, Ext groups with
//! cocycle representatives, pushouts and pullbacks.
//!
//! `Ext^i(M, N)` is computed as `Hom(Ω^i M, N)` modulo the restrictions of
//! maps `P_{i-1} -> N`, where `Ω^i M ⊆ P_{i-1}` comes from the minimal
//! projective resolution. Injective coresolutions are obtained by dualizing
//! projective resolutions over the opposite algebra.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::algebra::BoundQuiverAlgebra;
use crate::error::Result;
use crate::linalg::FpMatrix;
use crate::modcat::{
    direct_sum_with_maps, hcat, hom_basis, projective, projective_map, simple, vcat, HomSpace,
    QModule, QMorphism,
};

pub const DEFAULT_DIM_CAP: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ResolutionKind {
    Projective,
    Injective,
}

/// A minimal resolution, truncated at a requested length.
///
/// Projective kind: `covers[i]: P_i ↠ Ω^i M` and `inclusions[i]: Ω^{i+1} M ↪ P_i`.
/// Injective kind: `covers[i]: Σ^i M ↪ I^i` and `inclusions[i]: I^i ↠ Σ^{i+1} M`.
#[derive(Clone, Debug)]
pub struct Resolution {
    pub kind: ResolutionKind,
    pub target: QModule,
    pub terms: Vec<QModule>,
    /// Vertex of each indecomposable summand of each term.
    pub vertices: Vec<Vec<usize>>,
    pub covers: Vec<QMorphism>,
    pub syzygies: Vec<QModule>,
    pub inclusions: Vec<QMorphism>,
    pub minimal: bool,
}

impl Resolution {
    /// Number of computed terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Whether the last syzygy is zero, so the resolution is complete.
    pub fn is_complete(&self) -> bool {
        self.syzygies.last().is_none_or(QModule::is_zero)
    }

    /// `Ω^i M` (resp. `Σ^i M`), if computed.
    pub fn syzygy(&self, i: usize) -> Option<&QModule> {
        self.syzygies.get(i)
    }

    /// Differential `d_i: P_i -> P_{i-1}` for `i ≥ 1` (resp. `I^{i-1} -> I^i`).
    pub fn differential(&self, i: usize) -> QMorphism {
        match self.kind {
            ResolutionKind::Projective => self.inclusions[i - 1].compose(&self.covers[i]),
            ResolutionKind::Injective => self.covers[i].compose(&self.inclusions[i - 1]),
        }
    }

    /// Consecutive composites vanish and each position is exact by rank.
    pub fn check_exact(&self) -> bool {
        for i in 0..self.len() {
            let c = &self.covers[i];
            let inc = &self.inclusions[i];
            let ok = match self.kind {
                ResolutionKind::Projective => {
                    c.is_surjective()
                        && inc.is_injective()
                        && c.compose(inc).is_zero()
                        && c.rank() + inc.rank() == self.terms[i].total_dim()
                }
                ResolutionKind::Injective => {
                    c.is_injective()
                        && inc.is_surjective()
                        && inc.compose(c).is_zero()
                        && c.rank() + inc.rank() == self.terms[i].total_dim()
                }
            };
            if !ok {
                return false;
            }
        }
        true
    }

    pub fn dualize(&self) -> Resolution {
        Resolution {
            kind: match self.kind {
                ResolutionKind::Projective => ResolutionKind::Injective,
                ResolutionKind::Injective => ResolutionKind::Projective,
            },
            target: self.target.dualize(),
            terms: self.terms.iter().map(QModule::dualize).collect(),
            vertices: self.vertices.clone(),
            covers: self.covers.iter().map(QMorphism::dualize).collect(),
            syzygies: self.syzygies.iter().map(QModule::dualize).collect(),
            inclusions: self.inclusions.iter().map(QMorphism::dualize).collect(),
            minimal: self.minimal,
        }
    }
}

/// Projective cover `P(top M) ↠ M`, with the vertex of each summand of `P`.
pub fn projective_cover(m: &QModule) -> (QModule, QMorphism, Vec<usize>) {
    let a = m.algebra();
    let mut parts = Vec::new();
    let mut gens: Vec<(usize, Vec<u64>)> = Vec::new();
    for v in 0..a.vertex_count() {
        let rad = m.radical_at(v);
        let (_, sec) = FpMatrix::quotient_maps(&rad);
        for col in sec.columns() {
            gens.push((v, col));
        }
    }
    let pv: Vec<QModule> = (0..a.vertex_count())
        .map(|v| projective(a, v).expect("vertex in range"))
        .collect();
    for (v, _) in &gens {
        parts.push(pv[*v].clone());
    }
    let ds = direct_sum_with_maps(a, &parts).expect("same algebra");
    let comps: Vec<QMorphism> = gens
        .iter()
        .zip(&ds.projections)
        .map(|((v, g), pr)| projective_map(&pv[*v], *v, m, g).compose(pr))
        .collect();
    let mut pi = QMorphism::zero(&ds.module, m);
    for c in &comps {
        pi = pi.add(c);
    }
    let vertices = gens.iter().map(|(v, _)| *v).collect();
    (ds.module, pi, vertices)
}

/// Injective envelope `M ↪ I(soc M)`, with the vertex of each summand.
pub fn injective_envelope(m: &QModule) -> (QModule, QMorphism, Vec<usize>) {
    let (p, pi, vs) = projective_cover(&m.dualize());
    (p.dualize(), pi.dualize(), vs)
}

fn compute_projective(m: &QModule, depth: usize) -> Resolution {
    let mut res = Resolution {
        kind: ResolutionKind::Projective,
        target: m.clone(),
        terms: Vec::new(),
        vertices: Vec::new(),
        covers: Vec::new(),
        syzygies: vec![m.clone()],
        inclusions: Vec::new(),
        minimal: true,
    };
    for _ in 0..depth {
        let cur = res.syzygies.last().expect("nonempty").clone();
        if cur.is_zero() {
            break;
        }
        let (p, pi, vs) = projective_cover(&cur);
        let (k, inc) = pi.kernel();
        res.terms.push(p);
        res.vertices.push(vs);
        res.covers.push(pi);
        res.syzygies.push(k);
        res.inclusions.push(inc);
    }
    res
}

type Cache = RwLock<HashMap<QModule, Arc<Resolution>>>;

fn cache() -> &'static Cache {
    static CACHE: OnceLock<Cache> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Minimal projective resolution with at least `depth` terms, or fewer if
/// it terminates. Results are cached per module; fills are idempotent.
pub fn projective_resolution(m: &QModule, depth: usize) -> Arc<Resolution> {
    if let Some(r) = cache().read().expect("cache lock").get(m) {
        if r.len() >= depth || r.is_complete() {
            return r.clone();
        }
    }
    let r = Arc::new(compute_projective(m, depth));
    let mut w = cache().write().expect("cache lock");
    match w.get(m) {
        Some(old) if old.len() >= r.len() => old.clone(),
        _ => {
            w.insert(m.clone(), r.clone());
            r
        }
    }
}

/// Minimal injective coresolution, via the opposite algebra.
pub fn injective_coresolution(m: &QModule, depth: usize) -> Resolution {
    projective_resolution(&m.dualize(), depth).dualize()
}

/// `Ω^i M`.
pub fn syzygy(m: &QModule, i: usize) -> QModule {
    let r = projective_resolution(m, i);
    r.syzygies
        .get(i)
        .cloned()
        .unwrap_or_else(|| QModule::zero(m.algebra()))
}

/// `Σ^i M = D Ω^i D M`.
pub fn cosyzygy(m: &QModule, i: usize) -> QModule {
    syzygy(&m.dualize(), i).dualize()
}

/// Projective dimension, or `None` when it exceeds `cap`.
pub fn pd(m: &QModule, cap: usize) -> Option<usize> {
    if m.is_zero() {
        return Some(0);
    }
    let r = projective_resolution(m, cap + 1);
    // terms P_0..P_k with Ω^{k+1} = 0 gives pd = k
    (r.is_complete() && r.len() <= cap + 1).then(|| r.len() - 1)
}

pub fn id(m: &QModule, cap: usize) -> Option<usize> {
    pd(&m.dualize(), cap)
}

pub fn global_dimension(a: &Arc<BoundQuiverAlgebra>, cap: usize) -> Option<usize> {
    let mut best = 0;
    for v in 0..a.vertex_count() {
        best = best.max(pd(&simple(a, v).expect("vertex"), cap)?);
    }
    Some(best)
}

/// `Ext^i(M, N)` with a normalized basis of cocycles `Ω^i M -> N`.
#[derive(Clone, Debug)]
pub struct ExtGroup {
    pub degree: usize,
    pub source: QModule,
    pub target: QModule,
    /// `Ω^i M ↪ P_{i-1}`.
    pub syzygy_inclusion: QMorphism,
    pub cocycles: Vec<QMorphism>,
    cocycle_space: HomSpace,
    /// Projects `Hom(Ω^i M, N)`-coordinates onto the class coordinates.
    class_map: FpMatrix,
}

impl ExtGroup {
    pub fn dim(&self) -> usize {
        self.cocycles.len()
    }

    pub fn is_zero(&self) -> bool {
        self.cocycles.is_empty()
    }

    /// Coordinates of the class of a cocycle `Ω^i M -> N`.
    pub fn class_of(&self, c: &QMorphism) -> Vec<u64> {
        self.class_map.apply(&self.cocycle_space.coordinates(c))
    }

    pub fn syzygy(&self) -> &QModule {
        self.syzygy_inclusion.source()
    }
}

pub fn ext(m: &QModule, n: &QModule, i: usize) -> Result<ExtGroup> {
    assert!(i >= 1, "Ext degree starts at 1");
    m.same_algebra(n)?;
    let r = projective_resolution(m, i);
    let f = m.field();
    let (omega_inc, p_prev) = if r.len() >= i {
        (r.inclusions[i - 1].clone(), r.terms[i - 1].clone())
    } else {
        let z = QModule::zero(m.algebra());
        (QMorphism::zero(&z, &z), z)
    };
    let omega = omega_inc.source().clone();
    let h = hom_basis(&omega, n)?;
    let b = hom_basis(&p_prev, n)?;
    let restricted: Vec<Vec<u64>> = b
        .basis()
        .iter()
        .map(|g| h.coordinates(&g.compose(&omega_inc)))
        .collect();
    let rmat = FpMatrix::from_columns(f, h.dim(), &restricted);
    let (q, sec) = FpMatrix::quotient_maps(&rmat);
    let cocycles = sec.columns().iter().map(|c| h.combine(c)).collect();
    Ok(ExtGroup {
        degree: i,
        source: m.clone(),
        target: n.clone(),
        syzygy_inclusion: omega_inc,
        cocycles,
        cocycle_space: h,
        class_map: q,
    })
}

pub fn ext_dim(m: &QModule, n: &QModule, i: usize) -> Result<usize> {
    Ok(ext(m, n, i)?.dim())
}

/// `dim Ext^i(M, N)` as `Hom(M, Σ^i N)` modulo maps through `I^{i-1}`.
pub fn ext_dim_via_cosyzygy(m: &QModule, n: &QModule, i: usize) -> Result<usize> {
    assert!(i >= 1, "Ext degree starts at 1");
    m.same_algebra(n)?;
    let r = injective_coresolution(n, i);
    if r.len() < i {
        return Ok(0);
    }
    let proj = r.inclusions[i - 1].rebase_onto(n.algebra())?;
    let h = hom_basis(m, proj.target())?;
    let b = hom_basis(m, proj.source())?;
    let images: Vec<Vec<u64>> = b
        .basis()
        .iter()
        .map(|g| h.coordinates(&proj.compose(g)))
        .collect();
    let rank = FpMatrix::from_columns(m.field(), h.dim(), &images).rank();
    Ok(h.dim() - rank)
}

/// A short exact sequence `0 -> A -> E -> U -> 0`.
#[derive(Clone, Debug)]
pub struct ShortExact {
    pub left: QMorphism,
    pub right: QMorphism,
}

impl ShortExact {
    pub fn left_term(&self) -> &QModule {
        self.left.source()
    }

    pub fn middle(&self) -> &QModule {
        self.left.target()
    }

    pub fn right_term(&self) -> &QModule {
        self.right.target()
    }

    pub fn is_exact(&self) -> bool {
        self.left.is_injective()
            && self.right.is_surjective()
            && self.right.compose(&self.left).is_zero()
            && self.middle().total_dim()
                == self.left_term().total_dim() + self.right_term().total_dim()
    }
}

/// Pushout of `f: A -> B` and `g: A -> C`: the cokernel of `(f, -g)`.
pub fn pushout(f: &QMorphism, g: &QMorphism) -> Result<(QModule, QMorphism, QMorphism)> {
    let a = f.source().algebra();
    let ds = direct_sum_with_maps(a, &[f.target().clone(), g.target().clone()])?;
    let fg = vcat(
        f.source(),
        &ds.module,
        &[f.clone(), g.scale(f.source().field().neg(1))],
    );
    let (d, pr) = fg.cokernel();
    let to_b = pr.compose(&ds.inclusions[0]);
    let to_c = pr.compose(&ds.inclusions[1]);
    Ok((d, to_b, to_c))
}

/// Pullback of `f: B -> D` and `g: C -> D`: the kernel of `(f, -g)`.
pub fn pullback(f: &QMorphism, g: &QMorphism) -> Result<(QModule, QMorphism, QMorphism)> {
    let a = f.source().algebra();
    let ds = direct_sum_with_maps(a, &[f.source().clone(), g.source().clone()])?;
    let fg = hcat(
        &ds.module,
        f.target(),
        &[f.clone(), g.scale(f.source().field().neg(1))],
    );
    let (p, inc) = fg.kernel();
    Ok((
        p.clone(),
        ds.projections[0].compose(&inc),
        ds.projections[1].compose(&inc),
    ))
}

/// The extension `0 -> A -> E -> U -> 0` represented by the cocycle
/// `c: Ω U -> A`, as the pushout of `Ω U ↪ P_0` along `c`.
pub fn realize_extension(u: &QModule, c: &QMorphism) -> Result<ShortExact> {
    let r = projective_resolution(u, 1);
    let a = c.target().clone();
    if r.is_empty() {
        let ds = direct_sum_with_maps(u.algebra(), &[a.clone(), u.clone()])?;
        return Ok(ShortExact {
            left: ds.inclusions[0].clone(),
            right: ds.projections[1].clone(),
        });
    }
    let inc = &r.inclusions[0];
    let c = c.retarget(inc.source(), &a)?;
    let (e, from_p, from_a) = pushout(inc, &c)?;
    // E -> U induced by (π_0, 0) on P_0 ⊕ A
    let cover = &r.covers[0];
    let ds = direct_sum_with_maps(u.algebra(), &[inc.target().clone(), a.clone()])?;
    let on_sum = hcat(&ds.module, u, &[cover.clone(), QMorphism::zero(&a, u)]);
    let sum_to_e = hcat(&ds.module, &e, &[from_p, from_a.clone()]);
    let right = descend(&sum_to_e, &on_sum)?;
    Ok(ShortExact {
        left: from_a,
        right,
    })
}

/// Given a surjection `q: S ↠ E` and `h: S -> X` vanishing on `ker q`, the
/// induced map `E -> X`.
pub fn descend(q: &QMorphism, h: &QMorphism) -> Result<QMorphism> {
    let f = q.source().field();
    let blocks = (0..q.blocks().len())
        .map(|v| {
            let qt = q.block(v).transpose();
            let ht = h.block(v).transpose();
            Ok(qt.solve_matrix(&ht)?.transpose())
        })
        .collect::<Result<Vec<_>>>()?;
    let _ = f;
    QMorphism::new(q.target().clone(), h.target().clone(), blocks)
}

impl QMorphism {
    /// Same blocks with source and target regarded over `algebra`.
    pub fn rebase_onto(&self, algebra: &Arc<BoundQuiverAlgebra>) -> Result<QMorphism> {
        let s = self.source().rebase(algebra)?;
        let t = self.target().rebase(algebra)?;
        self.retarget(&s, &t)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Path, Quiver, RelationSum, DEFAULT_LENGTH_CAP};
    use crate::linalg::FieldPrime;
    use crate::modcat::{injective, is_isomorphic};

    fn lambda_dprime() -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::from_names(&["3", "4", "5"], &[("α", "3", "4"), ("β", "4", "5")]).unwrap();
        let p = Path::from_arrows(&q, vec![0, 1]).unwrap();
        let r = RelationSum::new(&q, vec![(1, p)]).unwrap();
        BoundQuiverAlgebra::build("L2", FieldPrime::default(), q, vec![r], DEFAULT_LENGTH_CAP)
            .unwrap()
    }

    fn a2() -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::from_names(&["1", "2"], &[("δ", "1", "2")]).unwrap();
        BoundQuiverAlgebra::build("A2", FieldPrime::default(), q, vec![], DEFAULT_LENGTH_CAP)
            .unwrap()
    }

    #[test]
    fn syzygies_of_s3() {
        let a = lambda_dprime();
        let s3 = simple(&a, 0).unwrap();
        assert!(is_isomorphic(&syzygy(&s3, 1), &simple(&a, 1).unwrap())
            .unwrap()
            .is_some());
        assert!(is_isomorphic(&syzygy(&s3, 2), &simple(&a, 2).unwrap())
            .unwrap()
            .is_some());
        assert!(syzygy(&projective(&a, 0).unwrap(), 1).is_zero());
    }

    #[test]
    fn dimensions() {
        let a = lambda_dprime();
        assert_eq!(pd(&simple(&a, 0).unwrap(), 8), Some(2));
        assert_eq!(global_dimension(&a, 8), Some(2));
        assert_eq!(global_dimension(&a2(), 8), Some(1));
        assert_eq!(pd(&projective(&a, 1).unwrap(), 8), Some(0));
        assert_eq!(id(&injective(&a, 1).unwrap(), 8), Some(0));
    }

    #[test]
    fn ext_over_lambda_dprime() {
        let a = lambda_dprime();
        let s: Vec<QModule> = (0..3).map(|v| simple(&a, v).unwrap()).collect();
        assert_eq!(ext_dim(&s[0], &s[1], 1).unwrap(), 1);
        assert_eq!(ext_dim(&s[0], &s[2], 2).unwrap(), 1);
        assert_eq!(ext_dim(&s[0], &s[2], 1).unwrap(), 0);
        assert_eq!(ext_dim_via_cosyzygy(&s[0], &s[1], 1).unwrap(), 1);
        assert_eq!(ext_dim_via_cosyzygy(&s[0], &s[2], 2).unwrap(), 1);
    }

    #[test]
    fn realize_nonsplit_extensions() {
        let a = lambda_dprime();
        let s3 = simple(&a, 0).unwrap();
        let s4 = simple(&a, 1).unwrap();
        let e = ext(&s3, &s4, 1).unwrap();
        let ses = realize_extension(&s3, &e.cocycles[0]).unwrap();
        assert!(ses.is_exact());
        assert!(is_isomorphic(ses.middle(), &projective(&a, 0).unwrap())
            .unwrap()
            .is_some());

        let b = a2();
        let s1 = simple(&b, 0).unwrap();
        let s2 = simple(&b, 1).unwrap();
        let e = ext(&s1, &s2, 1).unwrap();
        let ses = realize_extension(&s1, &e.cocycles[0]).unwrap();
        assert!(is_isomorphic(ses.middle(), &projective(&b, 0).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn zero_cocycle_splits() {
        let b = a2();
        let s1 = simple(&b, 0).unwrap();
        let s2 = simple(&b, 1).unwrap();
        let e = ext(&s1, &s2, 1).unwrap();
        let zero = QMorphism::zero(e.syzygy(), &s2);
        let ses = realize_extension(&s1, &zero).unwrap();
        assert!(ses.is_exact());
        let split = crate::modcat::direct_sum(&b, &[s2, s1]).unwrap();
        assert!(is_isomorphic(ses.middle(), &split).unwrap().is_some());
    }

    #[test]
    fn pushout_of_identities() {
        let b = a2();
        let p1 = projective(&b, 0).unwrap();
        let id = QMorphism::identity(&p1);
        let (d, _, _) = pushout(&id, &id).unwrap();
        assert!(is_isomorphic(&d, &p1).unwrap().is_some());
    }

    #[test]
    fn resolutions_are_exact() {
        let a = lambda_dprime();
        for v in 0..3 {
            let s = simple(&a, v).unwrap();
            assert!(projective_resolution(&s, 4).check_exact());
            assert!(injective_coresolution(&s, 4).check_exact());
        }
    }
}
