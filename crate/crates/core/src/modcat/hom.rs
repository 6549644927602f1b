//! Hom spaces as solution spaces of the commuting-square equations, and
//! isomorphism testing.

use super::decompose::decompose;
use super::{QModule, QMorphism};
use crate::error::Result;
use crate::linalg::FpMatrix;

/// A basis of `Hom(M, N)`. Basis element `k` has coordinate 1 at unknown
/// `free[k]` and 0 at the other free unknowns, so coordinates of any
/// morphism are read off directly.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: QModule,
    target: QModule,
    basis: Vec<QMorphism>,
    free: Vec<usize>,
}

impl HomSpace {
    pub fn source(&self) -> &QModule {
        &self.source
    }

    pub fn target(&self) -> &QModule {
        &self.target
    }

    pub fn basis(&self) -> &[QMorphism] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a morphism lying in this space.
    pub fn coordinates(&self, f: &QMorphism) -> Vec<u64> {
        let flat = f.flatten();
        self.free.iter().map(|&i| flat[i]).collect()
    }

    pub fn combine(&self, coeffs: &[u64]) -> QMorphism {
        let mut acc = QMorphism::zero(&self.source, &self.target);
        for (b, &c) in self.basis.iter().zip(coeffs) {
            if c != 0 {
                acc = acc.add(&b.scale(c));
            }
        }
        acc
    }
}

pub fn hom_basis(m: &QModule, n: &QModule) -> Result<HomSpace> {
    m.same_algebra(n)?;
    let f = m.field();
    let a = m.algebra();
    let nv = a.vertex_count();
    // unknown F_v[i][j] at offs[v] + i * dim M_v + j
    let mut offs = vec![0; nv + 1];
    for v in 0..nv {
        offs[v + 1] = offs[v] + n.dim_at(v) * m.dim_at(v);
    }
    let unknowns = offs[nv];
    let mut rows: Vec<Vec<u64>> = Vec::new();
    for (ai, ar) in a.quiver().arrows().iter().enumerate() {
        let (s, t) = (ar.source, ar.target);
        let na = n.map(ai);
        let ma = m.map(ai);
        // (N_a F_s - F_t M_a)[i][j] = 0 for i < dim N_t, j < dim M_s
        for i in 0..n.dim_at(t) {
            for j in 0..m.dim_at(s) {
                let mut row = vec![0; unknowns];
                for k in 0..n.dim_at(s) {
                    let c = na.get(i, k);
                    if c != 0 {
                        let u = offs[s] + k * m.dim_at(s) + j;
                        row[u] = f.add(row[u], c);
                    }
                }
                for k in 0..m.dim_at(t) {
                    let c = ma.get(k, j);
                    if c != 0 {
                        let u = offs[t] + i * m.dim_at(t) + k;
                        row[u] = f.sub(row[u], c);
                    }
                }
                if row.iter().any(|&x| x != 0) {
                    rows.push(row);
                }
            }
        }
    }
    let mut sys = FpMatrix::zeros(f, rows.len(), unknowns);
    for (r, row) in rows.iter().enumerate() {
        for (c, &x) in row.iter().enumerate() {
            if x != 0 {
                sys.set(r, c, x);
            }
        }
    }
    let kernel = sys.kernel_basis();
    let free = sys.free_columns();
    let basis = kernel
        .iter()
        .map(|k| {
            let blocks = (0..nv)
                .map(|v| {
                    FpMatrix::from_fn(f, n.dim_at(v), m.dim_at(v), |i, j| {
                        k[offs[v] + i * m.dim_at(v) + j]
                    })
                })
                .collect();
            QMorphism::new_unchecked(m.clone(), n.clone(), blocks)
        })
        .collect();
    Ok(HomSpace {
        source: m.clone(),
        target: n.clone(),
        basis,
        free,
    })
}

pub fn hom_dim(m: &QModule, n: &QModule) -> Result<usize> {
    Ok(hom_basis(m, n)?.dim())
}

/// Isomorphism test for indecomposable modules: for local `End(M)`, some
/// product `h ∘ f` of basis maps is invertible iff `M ≅ N`.
pub(crate) fn indecomposable_iso(m: &QModule, n: &QModule) -> Result<Option<QMorphism>> {
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m == n {
        return Ok(Some(QMorphism::identity(m)));
    }
    let mn = hom_basis(m, n)?;
    if mn.dim() == 0 {
        return Ok(None);
    }
    for f in mn.basis() {
        if f.is_iso() {
            return Ok(Some(f.clone()));
        }
    }
    let nm = hom_basis(n, m)?;
    for f in mn.basis() {
        for h in nm.basis() {
            if h.compose(f).is_iso() {
                return Ok(Some(f.clone()));
            }
        }
    }
    Ok(None)
}

/// Decide `M ≅ N`, returning an explicit isomorphism.
pub fn is_isomorphic(m: &QModule, n: &QModule) -> Result<Option<QMorphism>> {
    m.same_algebra(n)?;
    if m.dims() != n.dims() {
        return Ok(None);
    }
    if m == n {
        return Ok(Some(QMorphism::identity(m)));
    }
    let dm = decompose(m)?;
    let dn = decompose(n)?;
    if dm.len() != dn.len() {
        return Ok(None);
    }
    let mut used = vec![false; dn.len()];
    let mut total = QMorphism::zero(m, n);
    for sm in &dm {
        let mut found = false;
        for (j, sn) in dn.iter().enumerate() {
            if used[j] {
                continue;
            }
            if let Some(phi) = indecomposable_iso(&sm.module, &sn.module)? {
                used[j] = true;
                total = total.add(&sn.inclusion.compose(&phi).compose(&sm.projection));
                found = true;
                break;
            }
        }
        if !found {
            return Ok(None);
        }
    }
    debug_assert!(total.is_iso());
    Ok(Some(total))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{BoundQuiverAlgebra, Quiver, DEFAULT_LENGTH_CAP};
    use crate::linalg::FieldPrime;
    use crate::modcat::{direct_sum, projective, simple};
    use std::sync::Arc;

    fn a2() -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::from_names(&["1", "2"], &[("δ", "1", "2")]).unwrap();
        BoundQuiverAlgebra::build("A2", FieldPrime::default(), q, vec![], DEFAULT_LENGTH_CAP)
            .unwrap()
    }

    #[test]
    fn hom_dims_over_a2() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let s1 = simple(&a, 0).unwrap();
        assert_eq!(hom_dim(&p1, &s1).unwrap(), 1);
        assert_eq!(hom_dim(&s1, &p1).unwrap(), 0);
    }

    #[test]
    fn coordinates_round_trip() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let m = direct_sum(&a, &[p1.clone(), p1.clone()]).unwrap();
        let hs = hom_basis(&m, &m).unwrap();
        let c: Vec<u64> = (0..hs.dim() as u64).map(|i| i * 7 + 3).collect();
        assert_eq!(hs.coordinates(&hs.combine(&c)), c);
    }

    #[test]
    fn sums_distinguished() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let s1 = simple(&a, 0).unwrap();
        let s2 = simple(&a, 1).unwrap();
        let x = direct_sum(&a, &[p1.clone(), s1.clone()]).unwrap();
        let y = direct_sum(&a, &[p1, s2.clone()]).unwrap();
        assert!(is_isomorphic(&x, &y).unwrap().is_none());
        assert!(is_isomorphic(&s1, &s2).unwrap().is_none());
    }
}
