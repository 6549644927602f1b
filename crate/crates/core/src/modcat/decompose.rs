//! Krull–Schmidt decomposition through the endomorphism algebra.
//!
//! `rad End(M)` is the kernel of the trace form `(x, y) ↦ tr(xy)`, which
//! is valid when `p > dim M`. `M` is indecomposable iff `End(M)/rad` is a
//! division ring, i.e. a finite field: either it is one-dimensional, or it
//! is commutative and the Frobenius `x ↦ x^p` fixes only the prime field.
//! Otherwise a splitting endomorphism `z` (not invertible, not nilpotent)
//! gives the Fitting decomposition `M = ker z^n ⊕ im z^n`.

use std::sync::atomic::{AtomicU64, Ordering};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::hom::{hom_basis, indecomposable_iso, HomSpace};
use super::{QModule, QMorphism};
use crate::error::{Error, Result};
use crate::linalg::{poly_eval, FieldPrime, FpMatrix};

pub const DEFAULT_SEED: u64 = 0xC0FFEE;
const RANDOM_TRIALS: usize = 64;

/// An indecomposable summand with its split inclusion and projection.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: QModule,
    pub inclusion: QMorphism,
    pub projection: QMorphism,
}

enum Locality {
    Local,
    Split(QMorphism),
    SearchNeeded,
}

fn endo_pow(x: &QMorphism, e: u64) -> QMorphism {
    let blocks = x.blocks().iter().map(|b| b.pow(e)).collect();
    QMorphism::new_unchecked(x.source().clone(), x.target().clone(), blocks)
}

fn minus_scalar(x: &QMorphism, lambda: u64) -> QMorphism {
    x.sub(&QMorphism::identity(x.source()).scale(lambda))
}

fn roots(f: FieldPrime, poly: &[u64]) -> Vec<u64> {
    (0..f.p()).filter(|&x| poly_eval(f, poly, x) == 0).collect()
}

/// `z = x - λ` with `z` neither invertible nor nilpotent, if one exists.
fn splitting_shift(x: &QMorphism) -> Option<QMorphism> {
    let f = x.source().field();
    let n = x.source().total_dim() as u64;
    let cp = x.total_matrix().charpoly();
    for lambda in roots(f, &cp) {
        let z = minus_scalar(x, lambda);
        if !endo_pow(&z, n).is_zero() {
            return Some(z);
        }
    }
    None
}

fn in_radical(trace_form: &FpMatrix, coords: &[u64]) -> bool {
    trace_form.apply(coords).iter().all(|&c| c == 0)
}

fn locality(m: &QModule, end: &HomSpace) -> Result<Locality> {
    let f = m.field();
    let d = end.dim();
    if d <= 1 {
        return Ok(Locality::Local);
    }
    let mats: Vec<FpMatrix> = end.basis().iter().map(QMorphism::total_matrix).collect();
    let tf = FpMatrix::from_fn(f, d, d, |i, j| (&mats[i] * &mats[j]).trace());
    let rad = tf.kernel_matrix();
    if d - rad.cols() == 1 {
        return Ok(Locality::Local);
    }
    let b = end.basis();
    for i in 0..d {
        for j in i + 1..d {
            let comm = b[i].compose(&b[j]).sub(&b[j].compose(&b[i]));
            if !in_radical(&tf, &end.coordinates(&comm)) {
                // finite division rings are commutative
                return Ok(Locality::SearchNeeded);
            }
        }
    }
    // commutative semisimple quotient: count Frobenius fixed points
    let (q, sec) = FpMatrix::quotient_maps(&rad);
    let s = q.rows();
    let lifts: Vec<QMorphism> = (0..s).map(|k| end.combine(&sec.column(k))).collect();
    let cols: Vec<Vec<u64>> = lifts
        .iter()
        .map(|y| q.apply(&end.coordinates(&endo_pow(y, f.p()).sub(y))))
        .collect();
    let frob = FpMatrix::from_columns(f, s, &cols);
    let fixed = frob.kernel_matrix();
    if fixed.cols() <= 1 {
        return Ok(Locality::Local);
    }
    let one = q.apply(&end.coordinates(&QMorphism::identity(m)));
    let one = FpMatrix::from_columns(f, s, &[one]);
    for w in fixed.columns() {
        let wm = FpMatrix::from_columns(f, s, std::slice::from_ref(&w));
        if one.spans(&wm) {
            continue;
        }
        let y = end.combine(&sec.apply(&w));
        if let Some(z) = splitting_shift(&y) {
            return Ok(Locality::Split(z));
        }
    }
    Ok(Locality::SearchNeeded)
}

fn search_split(m: &QModule, end: &HomSpace, seed: u64) -> Option<QMorphism> {
    for b in end.basis() {
        if let Some(z) = splitting_shift(b) {
            return Some(z);
        }
    }
    let f = m.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..RANDOM_TRIALS {
        let c: Vec<u64> = (0..end.dim()).map(|_| rng.gen_range(0..f.p())).collect();
        if let Some(z) = splitting_shift(&end.combine(&c)) {
            return Some(z);
        }
    }
    None
}

/// Fitting decomposition along `z`: `(ker z^n, im z^n)` with inclusions and
/// projections.
fn fitting(m: &QModule, z: &QMorphism) -> [Summand; 2] {
    let w = endo_pow(z, m.total_dim() as u64);
    let (k, ik) = w.kernel();
    let (i, ii) = w.image();
    let f = m.field();
    let mut pk = Vec::new();
    let mut pi = Vec::new();
    for v in 0..m.dims().len() {
        let basis = ik.block(v).hstack(ii.block(v));
        let inv = basis.inverse().expect("Fitting decomposition is direct");
        let kv = k.dim_at(v);
        pk.push(inv.submatrix(0..kv, 0..m.dim_at(v)));
        pi.push(inv.submatrix(kv..m.dim_at(v), 0..m.dim_at(v)));
        debug_assert_eq!(inv.field(), f);
    }
    [
        Summand {
            projection: QMorphism::new_unchecked(m.clone(), k.clone(), pk),
            module: k,
            inclusion: ik,
        },
        Summand {
            projection: QMorphism::new_unchecked(m.clone(), i.clone(), pi),
            module: i,
            inclusion: ii,
        },
    ]
}

pub fn decompose_seeded(m: &QModule, seed: u64) -> Result<Vec<Summand>> {
    let n = m.total_dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    let p = m.field().p();
    if p <= n as u64 {
        return Err(Error::FieldTooSmall { p, dim: n });
    }
    let end = hom_basis(m, m)?;
    let z = match locality(m, &end)? {
        Locality::Local => {
            return Ok(vec![Summand {
                module: m.clone(),
                inclusion: QMorphism::identity(m),
                projection: QMorphism::identity(m),
            }])
        }
        Locality::Split(z) => z,
        Locality::SearchNeeded => {
            search_split(m, &end, seed).ok_or(Error::DecompositionFailed(n))?
        }
    };
    let mut out = Vec::new();
    for part in fitting(m, &z) {
        for s in decompose_seeded(&part.module, seed)? {
            out.push(Summand {
                module: s.module,
                inclusion: part.inclusion.compose(&s.inclusion),
                projection: s.projection.compose(&part.projection),
            });
        }
    }
    Ok(out)
}

static SEED: AtomicU64 = AtomicU64::new(DEFAULT_SEED);

/// Set the seed used by [`decompose`] for the rare randomized split search.
pub fn set_seed(seed: u64) {
    SEED.store(seed, Ordering::Relaxed);
}

pub fn seed() -> u64 {
    SEED.load(Ordering::Relaxed)
}

pub fn decompose(m: &QModule) -> Result<Vec<Summand>> {
    decompose_seeded(m, seed())
}

pub fn is_indecomposable(m: &QModule) -> Result<bool> {
    if m.is_zero() {
        return Ok(false);
    }
    let p = m.field().p();
    if p <= m.total_dim() as u64 {
        return Err(Error::FieldTooSmall {
            p,
            dim: m.total_dim(),
        });
    }
    let end = hom_basis(m, m)?;
    Ok(matches!(locality(m, &end)?, Locality::Local))
}

/// Summands grouped into isomorphism classes with multiplicities, in order
/// of first appearance.
pub fn decompose_grouped(m: &QModule) -> Result<Vec<(QModule, usize)>> {
    let mut groups: Vec<(QModule, usize)> = Vec::new();
    for s in decompose(m)? {
        let mut hit = false;
        for (g, c) in groups.iter_mut() {
            if indecomposable_iso(g, &s.module)?.is_some() {
                *c += 1;
                hit = true;
                break;
            }
        }
        if !hit {
            groups.push((s.module, 1));
        }
    }
    Ok(groups)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BoundQuiverAlgebra, Path, Quiver, RelationSum, DEFAULT_LENGTH_CAP};
    use crate::modcat::{direct_sum, projective, simple};
    use std::sync::Arc;

    fn lambda_dprime(p: u64) -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::from_names(&["3", "4", "5"], &[("α", "3", "4"), ("β", "4", "5")]).unwrap();
        let path = Path::from_arrows(&q, vec![0, 1]).unwrap();
        let r = RelationSum::new(&q, vec![(1, path)]).unwrap();
        BoundQuiverAlgebra::build(
            "L2",
            FieldPrime::new(p).unwrap(),
            q,
            vec![r],
            DEFAULT_LENGTH_CAP,
        )
        .unwrap()
    }

    #[test]
    fn simple_squared_groups() {
        let a = lambda_dprime(101);
        let s = simple(&a, 0).unwrap();
        let m = direct_sum(&a, &[s.clone(), s.clone()]).unwrap();
        let g = decompose_grouped(&m).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].1, 2);
    }

    #[test]
    fn projective_plus_simple_splits() {
        let a = lambda_dprime(101);
        let m = direct_sum(&a, &[projective(&a, 0).unwrap(), simple(&a, 2).unwrap()]).unwrap();
        let mut dims: Vec<Vec<usize>> = decompose(&m)
            .unwrap()
            .iter()
            .map(|s| s.module.dims().to_vec())
            .collect();
        dims.sort();
        assert_eq!(dims, vec![vec![0, 0, 1], vec![1, 1, 0]]);
    }

    #[test]
    fn summands_reassemble() {
        let a = lambda_dprime(101);
        let parts = [
            projective(&a, 0).unwrap(),
            projective(&a, 1).unwrap(),
            simple(&a, 1).unwrap(),
        ];
        let m = direct_sum(&a, &parts).unwrap();
        let ss = decompose(&m).unwrap();
        let mut id = QMorphism::zero(&m, &m);
        for s in &ss {
            assert!(s.projection.compose(&s.inclusion).is_iso());
            id = id.add(&s.inclusion.compose(&s.projection));
        }
        assert_eq!(id, QMorphism::identity(&m));
    }

    #[test]
    fn small_field_rejected() {
        let a = lambda_dprime(2);
        let s = simple(&a, 0).unwrap();
        let m = direct_sum(&a, &[s.clone(), s.clone(), s]).unwrap();
        assert!(matches!(
            decompose(&m),
            Err(Error::FieldTooSmall { p: 2, dim: 3 })
        ));
    }
}
