//! Approximation sequences: universal extensions, special preenvelopes for
//! the pair generated by a tilting module, precovers and preenvelopes
//! relative to a finite universe, and membership in `T^∨` / `T^∧`.

use crate::error::{Error, Result};
use crate::homology::{descend, ext, ext_dim, projective_resolution, pushout, syzygy, ShortExact};
use crate::linalg::FpMatrix;
use crate::modcat::{
    decompose_grouped, diag, direct_sum_with_maps, hcat, hom_basis, is_isomorphic, QModule,
    QMorphism,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ApproxKind {
    /// `0 -> A -> V -> U -> 0`.
    Preenvelope,
    /// `0 -> V -> U -> A -> 0`.
    Precover,
}

/// A recorded vanishing `Ext^degree(source, target) = 0`.
#[derive(Clone, Debug)]
pub struct ExtCheck {
    pub source: QModule,
    pub target: QModule,
    pub degree: usize,
}

impl ExtCheck {
    pub fn holds(&self) -> Result<bool> {
        Ok(ext_dim(&self.source, &self.target, self.degree)? == 0)
    }
}

#[derive(Clone, Debug)]
pub struct ApproxSequence {
    pub kind: ApproxKind,
    pub sequence: ShortExact,
    pub certificates: Vec<ExtCheck>,
}

impl ApproxSequence {
    /// The term in the right-hand class `V` of the pair.
    pub fn v_term(&self) -> &QModule {
        match self.kind {
            ApproxKind::Preenvelope => self.sequence.middle(),
            ApproxKind::Precover => self.sequence.left_term(),
        }
    }

    /// The term in the left-hand class `U` of the pair.
    pub fn u_term(&self) -> &QModule {
        match self.kind {
            ApproxKind::Preenvelope => self.sequence.right_term(),
            ApproxKind::Precover => self.sequence.middle(),
        }
    }

    /// Re-run exactness and every recorded Ext check.
    pub fn recheck(&self) -> Result<bool> {
        if !self.sequence.is_exact() {
            return Ok(false);
        }
        for c in &self.certificates {
            if !c.holds()? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn dualize(&self) -> ApproxSequence {
        ApproxSequence {
            kind: match self.kind {
                ApproxKind::Preenvelope => ApproxKind::Precover,
                ApproxKind::Precover => ApproxKind::Preenvelope,
            },
            sequence: ShortExact {
                left: self.sequence.right.dualize(),
                right: self.sequence.left.dualize(),
            },
            certificates: self
                .certificates
                .iter()
                .map(|c| ExtCheck {
                    source: c.target.dualize(),
                    target: c.source.dualize(),
                    degree: c.degree,
                })
                .collect(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct UniversalExtension {
    /// `dim Ext^1(E, A)`.
    pub k: usize,
    /// `0 -> A -> A' -> E^k -> 0`.
    pub sequence: ShortExact,
}

/// The extension of `A` by `E^k` whose class is the tuple of a basis of
/// `Ext^1(E, A)`.
pub fn universal_extension(a: &QModule, e: &QModule) -> Result<UniversalExtension> {
    a.same_algebra(e)?;
    let g = ext(e, a, 1)?;
    let k = g.dim();
    let alg = a.algebra();
    if k == 0 {
        let z = QModule::zero(alg);
        return Ok(UniversalExtension {
            k,
            sequence: ShortExact {
                left: QMorphism::identity(a),
                right: QMorphism::zero(a, &z),
            },
        });
    }
    let r = projective_resolution(e, 1);
    let inc = &g.syzygy_inclusion;
    let cover = &r.covers[0];
    let omega_k = direct_sum_with_maps(alg, &vec![inc.source().clone(); k])?;
    let p_k = direct_sum_with_maps(alg, &vec![inc.target().clone(); k])?;
    let e_k = direct_sum_with_maps(alg, &vec![e.clone(); k])?;
    let inc_k = diag(&omega_k.module, &p_k.module, &vec![inc.clone(); k]);
    let cover_k = diag(&p_k.module, &e_k.module, &vec![cover.clone(); k]);
    let cocycles: Vec<QMorphism> = g
        .cocycles
        .iter()
        .map(|c| c.retarget(inc.source(), a))
        .collect::<Result<_>>()?;
    let c = hcat(&omega_k.module, a, &cocycles);
    let (a2, from_p, from_a) = pushout(&inc_k, &c)?;
    let sum = direct_sum_with_maps(alg, &[p_k.module.clone(), a.clone()])?;
    let to_a2 = hcat(&sum.module, &a2, &[from_p, from_a.clone()]);
    let to_e = hcat(
        &sum.module,
        &e_k.module,
        &[cover_k, QMorphism::zero(a, &e_k.module)],
    );
    let right = descend(&to_a2, &to_e)?;
    Ok(UniversalExtension {
        k,
        sequence: ShortExact {
            left: from_a,
            right,
        },
    })
}

/// Upper bound on extension rounds in [`special_preenvelope_tilting`].
pub const PREENVELOPE_ROUNDS: usize = 32;

/// `0 -> A -> V -> U -> 0` with `Ext^i(T, V) = 0` for `1 ≤ i ≤ n` and `U`
/// an iterated extension of syzygies `Ω^j T`, `0 ≤ j < n`.
///
/// Each round kills the highest nonvanishing `Ext^j(T, -) = Ext^1(Ω^{j-1} T, -)`
/// by a universal extension. A single round can leave `Ext^j` nonzero when
/// `Ext^1(Ω^{j-1} T, Ω^{j-1} T) ≠ 0`, so rounds repeat until the checks pass.
pub fn special_preenvelope_tilting(a: &QModule, t: &QModule, n: usize) -> Result<ApproxSequence> {
    a.same_algebra(t)?;
    let syz: Vec<QModule> = (0..n).map(|j| syzygy(t, j)).collect();
    let mut left = QMorphism::identity(a);
    for _ in 0..PREENVELOPE_ROUNDS {
        let v = left.target().clone();
        let mut worst = None;
        for j in (1..=n).rev() {
            if ext_dim(t, &v, j)? != 0 {
                worst = Some(j);
                break;
            }
        }
        let Some(j) = worst else {
            let (_, right) = left.cokernel();
            let certificates = (1..=n)
                .map(|i| ExtCheck {
                    source: t.clone(),
                    target: v.clone(),
                    degree: i,
                })
                .collect();
            return Ok(ApproxSequence {
                kind: ApproxKind::Preenvelope,
                sequence: ShortExact { left, right },
                certificates,
            });
        };
        let ue = universal_extension(&v, &syz[j - 1])?;
        left = ue.sequence.left.compose(&left);
    }
    Err(Error::PreconditionFailed(format!(
        "no T^⊥-preenvelope after {PREENVELOPE_ROUNDS} rounds; is T tilting with n = {n}?"
    )))
}

/// A right `add(pieces)`-approximation `U_0 -> X`, made minimal by greedy
/// summand dropping in `pieces` order.
#[derive(Clone, Debug)]
pub struct Approximation {
    pub map: QMorphism,
    /// Index into `pieces` of each summand of the source, in order.
    pub summands: Vec<usize>,
}

pub fn right_approximation(x: &QModule, pieces: &[QModule]) -> Result<Approximation> {
    let f = x.field();
    let homs: Vec<_> = pieces
        .iter()
        .map(|u| hom_basis(u, x))
        .collect::<Result<_>>()?;
    // candidate summands: (piece, map piece -> X)
    let cands: Vec<(usize, QMorphism)> = homs
        .iter()
        .enumerate()
        .flat_map(|(i, h)| h.basis().iter().map(move |g| (i, g.clone())))
        .collect();
    // for every test piece u and candidate c: the images h_c ∘ g in Hom(u, X)
    let test: Vec<Vec<Vec<Vec<u64>>>> = pieces
        .iter()
        .enumerate()
        .map(|(ui, u)| {
            cands
                .iter()
                .map(|(pi, hc)| {
                    Ok(hom_basis(u, &pieces[*pi])?
                        .basis()
                        .iter()
                        .map(|g| homs[ui].coordinates(&hc.compose(g)))
                        .collect())
                })
                .collect::<Result<_>>()
        })
        .collect::<Result<_>>()?;
    let spans = |keep: &[bool]| {
        test.iter().enumerate().all(|(ui, per_cand)| {
            let cols: Vec<Vec<u64>> = per_cand
                .iter()
                .zip(keep)
                .filter(|(_, &k)| k)
                .flat_map(|(c, _)| c.iter().cloned())
                .collect();
            FpMatrix::from_columns(f, homs[ui].dim(), &cols).rank() == homs[ui].dim()
        })
    };
    let mut keep = vec![true; cands.len()];
    for i in 0..cands.len() {
        keep[i] = false;
        if !spans(&keep) {
            keep[i] = true;
        }
    }
    let kept: Vec<&(usize, QMorphism)> = cands
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(c, _)| c)
        .collect();
    let parts: Vec<QModule> = kept.iter().map(|(i, _)| pieces[*i].clone()).collect();
    let ds = direct_sum_with_maps(x.algebra(), &parts)?;
    let maps: Vec<QMorphism> = kept.iter().map(|(_, g)| g.clone()).collect();
    Ok(Approximation {
        map: hcat(&ds.module, x, &maps),
        summands: kept.iter().map(|(i, _)| *i).collect(),
    })
}

/// A left `add(pieces)`-approximation `X -> V^0`, dual to [`right_approximation`].
pub fn left_approximation(x: &QModule, pieces: &[QModule]) -> Result<Approximation> {
    let dual: Vec<QModule> = pieces.iter().map(QModule::dualize).collect();
    let r = right_approximation(&x.dualize(), &dual)?;
    Ok(Approximation {
        map: r.map.dualize(),
        summands: r.summands,
    })
}

fn in_add(m: &QModule, list: &[QModule]) -> Result<bool> {
    for (s, _) in decompose_grouped(m)? {
        let mut found = false;
        for v in list {
            if is_isomorphic(&s, v)?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `0 -> K -> U_0 -> X -> 0` with `U_0 -> X` a minimal right
/// `add(u_list)`-approximation and `K` certified by `Ext^1(u_list, K) = 0`.
pub fn special_precover_universe(
    x: &QModule,
    u_list: &[QModule],
    v_list: &[QModule],
) -> Result<ApproxSequence> {
    let approx = right_approximation(x, u_list)?;
    if !approx.map.is_surjective() {
        return Err(Error::NotSurjective(format!(
            "add(U) does not cover X of dimension vector {}",
            x.dim_vector_string()
        )));
    }
    let (k, inc) = approx.map.kernel();
    let mut certificates = Vec::new();
    for u in u_list {
        if ext_dim(u, &k, 1)? != 0 {
            return Err(Error::KernelNotInV(format!(
                "Ext^1 from a member of dimension vector {} into the kernel {} is nonzero",
                u.dim_vector_string(),
                k.dim_vector_string()
            )));
        }
        certificates.push(ExtCheck {
            source: u.clone(),
            target: k.clone(),
            degree: 1,
        });
    }
    if !in_add(&k, v_list)? {
        return Err(Error::KernelNotInV(format!(
            "kernel {} has a summand outside the V-list",
            k.dim_vector_string()
        )));
    }
    Ok(ApproxSequence {
        kind: ApproxKind::Precover,
        sequence: ShortExact {
            left: inc,
            right: approx.map,
        },
        certificates,
    })
}

/// `0 -> X -> V^0 -> C -> 0` with `X -> V^0` a minimal left
/// `add(v_list)`-approximation and `Ext^1(C, v_list) = 0`.
pub fn special_preenvelope_universe(
    x: &QModule,
    u_list: &[QModule],
    v_list: &[QModule],
) -> Result<ApproxSequence> {
    let du: Vec<QModule> = u_list.iter().map(QModule::dualize).collect();
    let dv: Vec<QModule> = v_list.iter().map(QModule::dualize).collect();
    match special_precover_universe(&x.dualize(), &dv, &du) {
        Ok(s) => Ok(s.dualize()),
        Err(Error::NotSurjective(_)) => Err(Error::NotInjective(format!(
            "add(V) does not receive X of dimension vector {} injectively",
            x.dim_vector_string()
        ))),
        Err(Error::KernelNotInV(m)) => Err(Error::CokernelNotInU(m)),
        Err(e) => Err(e),
    }
}

/// A finite coresolution `0 -> X -> T^0 -> ... -> T^k -> 0` (or a
/// resolution, for [`in_t_hat`]) by minimal `add(T)`-approximations.
#[derive(Clone, Debug)]
pub struct TWitness {
    /// `X -> T^0`, `C^1 -> T^1`, ... (resp. `T_0 -> X`, `T_1 -> K_1`, ...).
    pub steps: Vec<QMorphism>,
}

impl TWitness {
    pub fn length(&self) -> usize {
        self.steps.len().saturating_sub(1)
    }
}

/// Whether `X ∈ T^∨_n`: `X` has an `add(T)`-coresolution of length at most
/// `n`, built from minimal left approximations.
pub fn in_t_wedge(x: &QModule, t: &QModule, n: usize) -> Result<Option<TWitness>> {
    x.same_algebra(t)?;
    let pieces: Vec<QModule> = decompose_grouped(t)?.into_iter().map(|(m, _)| m).collect();
    let mut cur = x.clone();
    let mut steps = Vec::new();
    for _ in 0..=n {
        if cur.is_zero() {
            return Ok(Some(TWitness { steps }));
        }
        let a = left_approximation(&cur, &pieces)?;
        if !a.map.is_injective() {
            return Ok(None);
        }
        let (c, _) = a.map.cokernel();
        steps.push(a.map);
        cur = c;
    }
    Ok(cur.is_zero().then_some(TWitness { steps }))
}

/// Whether `X ∈ T^∧_n`: `X` has an `add(T)`-resolution of length at most
/// `n`, built from minimal right approximations.
pub fn in_t_hat(x: &QModule, t: &QModule, n: usize) -> Result<Option<TWitness>> {
    x.same_algebra(t)?;
    let pieces: Vec<QModule> = decompose_grouped(t)?.into_iter().map(|(m, _)| m).collect();
    let mut cur = x.clone();
    let mut steps = Vec::new();
    for _ in 0..=n {
        if cur.is_zero() {
            return Ok(Some(TWitness { steps }));
        }
        let a = right_approximation(&cur, &pieces)?;
        if !a.map.is_surjective() {
            return Ok(None);
        }
        let (k, _) = a.map.kernel();
        steps.push(a.map);
        cur = k;
    }
    Ok(cur.is_zero().then_some(TWitness { steps }))
}
