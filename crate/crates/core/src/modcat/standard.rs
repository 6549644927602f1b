//! Simple, indecomposable projective and indecomposable injective modules.

use std::sync::Arc;

use super::{QModule, QMorphism};
use crate::algebra::{AlgebraError, BoundQuiverAlgebra, Path};
use crate::error::Result;
use crate::linalg::FpMatrix;

fn check_vertex(a: &BoundQuiverAlgebra, v: usize) -> Result<()> {
    if v >= a.vertex_count() {
        return Err(AlgebraError::UnknownVertex(v.to_string()).into());
    }
    Ok(())
}

pub fn simple(a: &Arc<BoundQuiverAlgebra>, v: usize) -> Result<QModule> {
    check_vertex(a, v)?;
    let f = a.field();
    let mut dims = vec![0; a.vertex_count()];
    dims[v] = 1;
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .map(|ar| FpMatrix::zeros(f, dims[ar.target], dims[ar.source]))
        .collect();
    Ok(QModule::new_unchecked(a.clone(), dims, maps))
}

/// `P(v) = Λ e_v`: at vertex `t`, the residue paths `v -> t`.
pub fn projective(a: &Arc<BoundQuiverAlgebra>, v: usize) -> Result<QModule> {
    check_vertex(a, v)?;
    let f = a.field();
    let nv = a.vertex_count();
    let dims: Vec<usize> = (0..nv).map(|t| a.paths_between(v, t).len()).collect();
    let maps = a
        .quiver()
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, ar)| {
            let from = a.paths_between(v, ar.source);
            let to = a.paths_between(v, ar.target);
            let arrow = Path {
                source: ar.source,
                target: ar.target,
                arrows: vec![ai],
            };
            let mut m = FpMatrix::zeros(f, to.len(), from.len());
            for (j, &b) in from.iter().enumerate() {
                let p = arrow.compose(&a.basis()[b]).expect("composable");
                for (k, c) in a.reduce_path(&p) {
                    let i = to
                        .iter()
                        .position(|&x| x == k)
                        .expect("path lands at target");
                    m.set(i, j, c);
                }
            }
            m
        })
        .collect();
    Ok(QModule::new_unchecked(a.clone(), dims, maps))
}

/// `I(v) = D P_{A^op}(v)`.
pub fn injective(a: &Arc<BoundQuiverAlgebra>, v: usize) -> Result<QModule> {
    check_vertex(a, v)?;
    Ok(projective(&a.opposite(), v)?.dualize())
}

/// The map `P(v) -> M` sending `e_v` to the vector `m ∈ M_v`.
pub fn projective_map(pv: &QModule, v: usize, target: &QModule, m: &[u64]) -> QMorphism {
    let a = target.algebra();
    let f = a.field();
    let blocks = (0..a.vertex_count())
        .map(|t| {
            let paths = a.paths_between(v, t);
            let cols: Vec<Vec<u64>> = paths
                .iter()
                .map(|&b| target.basis_action(b).apply(m))
                .collect();
            FpMatrix::from_columns(f, target.dim_at(t), &cols)
        })
        .collect();
    QMorphism::new_unchecked(pv.clone(), target.clone(), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quiver, RelationSum, DEFAULT_LENGTH_CAP};
    use crate::linalg::FieldPrime;
    use crate::modcat::is_isomorphic;

    fn lambda_dprime() -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::from_names(&["3", "4", "5"], &[("α", "3", "4"), ("β", "4", "5")]).unwrap();
        let p = Path::from_arrows(&q, vec![0, 1]).unwrap();
        let r = RelationSum::new(&q, vec![(1, p)]).unwrap();
        BoundQuiverAlgebra::build("L2", FieldPrime::default(), q, vec![r], DEFAULT_LENGTH_CAP)
            .unwrap()
    }

    #[test]
    fn relation_truncates_projective() {
        let a = lambda_dprime();
        assert_eq!(projective(&a, 0).unwrap().dims(), &[1, 1, 0]);
        assert_eq!(projective(&a, 1).unwrap().dims(), &[0, 1, 1]);
    }

    #[test]
    fn injective_at_middle_is_interval() {
        let a = lambda_dprime();
        let i4 = injective(&a, 1).unwrap();
        assert_eq!(i4.dims(), &[1, 1, 0]);
        assert!(is_isomorphic(&i4, &projective(&a, 0).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn unknown_vertex_rejected() {
        assert!(simple(&lambda_dprime(), 7).is_err());
    }
}
