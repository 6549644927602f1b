//! Finite-dimensional left modules as quiver representations.
//!
//! A [`QModule`] stores one dimension per vertex and one matrix per arrow,
//! of shape `dim(target) × dim(source)`. Morphisms are vertex-wise blocks.
//! Kernels, cokernels and images are computed vertex by vertex.

mod decompose;
mod hom;
mod standard;
mod universe;

use std::fmt;
use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::error::{Error, Result};
use crate::linalg::{FieldPrime, FpMatrix};

pub use decompose::{
    decompose, decompose_grouped, decompose_seeded, is_indecomposable, seed, set_seed, Summand,
    DEFAULT_SEED,
};
pub use hom::{hom_basis, hom_dim, is_isomorphic, HomSpace};
pub use standard::{injective, projective, projective_map, simple};
pub use universe::{Universe, UniverseIssue};

#[derive(Clone)]
pub struct QModule {
    algebra: Arc<BoundQuiverAlgebra>,
    dims: Vec<usize>,
    maps: Vec<FpMatrix>,
}

impl PartialEq for QModule {
    fn eq(&self, other: &Self) -> bool {
        self.algebra.same_as(&other.algebra) && self.dims == other.dims && self.maps == other.maps
    }
}

impl Eq for QModule {}

impl std::hash::Hash for QModule {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.algebra.fingerprint().hash(state);
        self.dims.hash(state);
        self.maps.hash(state);
    }
}

impl QModule {
    /// Build a representation, checking matrix shapes and relations.
    pub fn new(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        maps: Vec<FpMatrix>,
    ) -> Result<Self> {
        let q = algebra.quiver();
        if dims.len() != q.vertex_count() {
            return Err(Error::InvalidModule(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                q.vertex_count()
            )));
        }
        if maps.len() != q.arrows().len() {
            return Err(Error::InvalidModule(format!(
                "{} maps for {} arrows",
                maps.len(),
                q.arrows().len()
            )));
        }
        for (a, m) in q.arrows().iter().zip(&maps) {
            if m.shape() != (dims[a.target], dims[a.source]) {
                return Err(Error::InvalidModule(format!(
                    "map `{}` has shape {:?}, expected {:?}",
                    a.name,
                    m.shape(),
                    (dims[a.target], dims[a.source])
                )));
            }
            if m.field() != algebra.field() {
                return Err(Error::InvalidModule(format!(
                    "map `{}` over wrong field",
                    a.name
                )));
            }
        }
        let m = QModule {
            algebra,
            dims,
            maps,
        };
        m.check_relations()?;
        Ok(m)
    }

    pub(crate) fn new_unchecked(
        algebra: Arc<BoundQuiverAlgebra>,
        dims: Vec<usize>,
        maps: Vec<FpMatrix>,
    ) -> Self {
        let m = QModule {
            algebra,
            dims,
            maps,
        };
        debug_assert!(m.check_relations().is_ok());
        m
    }

    pub fn zero(algebra: &Arc<BoundQuiverAlgebra>) -> Self {
        let f = algebra.field();
        let maps = algebra
            .quiver()
            .arrows()
            .iter()
            .map(|_| FpMatrix::zeros(f, 0, 0))
            .collect();
        QModule {
            algebra: algebra.clone(),
            dims: vec![0; algebra.vertex_count()],
            maps,
        }
    }

    fn check_relations(&self) -> Result<()> {
        let f = self.field();
        for r in self.algebra.relations() {
            let mut acc = FpMatrix::zeros(f, self.dims[r.target()], self.dims[r.source()]);
            for (c, p) in &r.terms {
                acc = &acc + &self.path_matrix(p).scale(*c);
            }
            if !acc.is_zero() {
                let word = r.terms[0].1.word(self.algebra.quiver());
                return Err(Error::InvalidModule(format!(
                    "relation through `{word}` fails"
                )));
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldPrime {
        self.algebra.field()
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim_at(&self, v: usize) -> usize {
        self.dims[v]
    }

    pub fn maps(&self) -> &[FpMatrix] {
        &self.maps
    }

    pub fn map(&self, arrow: usize) -> &FpMatrix {
        &self.maps[arrow]
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }

    /// Offset of vertex `v` in the flattened total space.
    pub fn offset(&self, v: usize) -> usize {
        self.dims[..v].iter().sum()
    }

    /// Action of a path, `dim(target) × dim(source)`.
    pub fn path_matrix(&self, p: &Path) -> FpMatrix {
        let mut m = FpMatrix::identity(self.field(), self.dims[p.source]);
        for &a in &p.arrows {
            m = &self.maps[a] * &m;
        }
        m
    }

    /// Action of the residue basis element `b`.
    pub fn basis_action(&self, b: usize) -> FpMatrix {
        self.path_matrix(&self.algebra.basis()[b])
    }

    pub fn same_algebra(&self, other: &QModule) -> Result<()> {
        if self.algebra.same_as(&other.algebra) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(
                self.algebra.name().to_string(),
                other.algebra.name().to_string(),
            ))
        }
    }

    /// The same representation regarded over an equal algebra object.
    pub fn rebase(&self, algebra: &Arc<BoundQuiverAlgebra>) -> Result<Self> {
        if !self.algebra.same_as(algebra) {
            return Err(Error::AlgebraMismatch(
                self.algebra.name().to_string(),
                algebra.name().to_string(),
            ));
        }
        Ok(QModule {
            algebra: algebra.clone(),
            dims: self.dims.clone(),
            maps: self.maps.clone(),
        })
    }

    /// `D = Hom_k(-, k)`: a module over the opposite algebra with transposed maps.
    pub fn dualize(&self) -> QModule {
        QModule {
            algebra: self.algebra.opposite(),
            dims: self.dims.clone(),
            maps: self.maps.iter().map(FpMatrix::transpose).collect(),
        }
    }

    /// `rad M`: at each vertex the sum of images of incoming arrows.
    pub fn radical_at(&self, v: usize) -> FpMatrix {
        let f = self.field();
        let mut span = FpMatrix::zeros(f, self.dims[v], 0);
        for (ai, a) in self.algebra.quiver().arrows().iter().enumerate() {
            if a.target == v {
                span = span.hstack(&self.maps[ai]);
            }
        }
        span.image_matrix()
    }

    /// Dimension vector of `top M = M / rad M`.
    pub fn top_dims(&self) -> Vec<usize> {
        (0..self.dims.len())
            .map(|v| self.dims[v] - self.radical_at(v).cols())
            .collect()
    }

    /// Socle dimension vector: common kernel of all outgoing arrows.
    pub fn socle_dims(&self) -> Vec<usize> {
        self.dualize().top_dims()
    }

    pub fn dim_vector_string(&self) -> String {
        let parts: Vec<String> = self.dims.iter().map(|d| d.to_string()).collect();
        format!("({})", parts.join(","))
    }
}

impl fmt::Debug for QModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QModule[{} {}",
            self.algebra.name(),
            self.dim_vector_string()
        )?;
        for (a, m) in self.algebra.quiver().arrows().iter().zip(&self.maps) {
            if !m.is_zero() {
                write!(f, " {}={}", a.name, m)?;
            }
        }
        write!(f, "]")
    }
}

/// Direct sum with canonical inclusions and projections.
pub struct DirectSum {
    pub module: QModule,
    pub inclusions: Vec<QMorphism>,
    pub projections: Vec<QMorphism>,
}

pub fn direct_sum_with_maps(
    algebra: &Arc<BoundQuiverAlgebra>,
    parts: &[QModule],
) -> Result<DirectSum> {
    for p in parts {
        if !p.algebra.same_as(algebra) {
            return Err(Error::AlgebraMismatch(
                algebra.name().to_string(),
                p.algebra.name().to_string(),
            ));
        }
    }
    let f = algebra.field();
    let nv = algebra.vertex_count();
    let dims: Vec<usize> = (0..nv)
        .map(|v| parts.iter().map(|p| p.dims[v]).sum())
        .collect();
    let maps = (0..algebra.quiver().arrows().len())
        .map(|a| {
            let blocks: Vec<FpMatrix> = parts.iter().map(|p| p.maps[a].clone()).collect();
            FpMatrix::block_diag(f, &blocks)
        })
        .collect();
    let module = QModule {
        algebra: algebra.clone(),
        dims,
        maps,
    };
    let mut inclusions = Vec::new();
    let mut projections = Vec::new();
    let mut offs = vec![0usize; nv];
    for p in parts {
        let mut inc = Vec::new();
        let mut proj = Vec::new();
        for (v, off) in offs.iter_mut().enumerate() {
            let mut i = FpMatrix::zeros(f, module.dims[v], p.dims[v]);
            let mut q = FpMatrix::zeros(f, p.dims[v], module.dims[v]);
            for k in 0..p.dims[v] {
                i.set(*off + k, k, 1);
                q.set(k, *off + k, 1);
            }
            inc.push(i);
            proj.push(q);
            *off += p.dims[v];
        }
        inclusions.push(QMorphism::new_unchecked(p.clone(), module.clone(), inc));
        projections.push(QMorphism::new_unchecked(module.clone(), p.clone(), proj));
    }
    Ok(DirectSum {
        module,
        inclusions,
        projections,
    })
}

pub fn direct_sum(algebra: &Arc<BoundQuiverAlgebra>, parts: &[QModule]) -> Result<QModule> {
    Ok(direct_sum_with_maps(algebra, parts)?.module)
}

/// `M^k`.
pub fn power(m: &QModule, k: usize) -> QModule {
    let parts = vec![m.clone(); k];
    direct_sum(m.algebra(), &parts).expect("same algebra")
}

#[derive(Clone, PartialEq, Eq)]
pub struct QMorphism {
    source: QModule,
    target: QModule,
    blocks: Vec<FpMatrix>,
}

impl QMorphism {
    pub fn new(source: QModule, target: QModule, blocks: Vec<FpMatrix>) -> Result<Self> {
        source.same_algebra(&target)?;
        if blocks.len() != source.dims.len() {
            return Err(Error::NotMorphism("wrong number of blocks".into()));
        }
        for (v, b) in blocks.iter().enumerate() {
            if b.shape() != (target.dims[v], source.dims[v]) {
                return Err(Error::NotMorphism(format!("block {v} has wrong shape")));
            }
        }
        let f = QMorphism {
            source,
            target,
            blocks,
        };
        if let Some(a) = f.failing_square() {
            return Err(Error::NotMorphism(format!(
                "square at arrow `{a}` does not commute"
            )));
        }
        Ok(f)
    }

    pub(crate) fn new_unchecked(source: QModule, target: QModule, blocks: Vec<FpMatrix>) -> Self {
        let f = QMorphism {
            source,
            target,
            blocks,
        };
        debug_assert!(f.failing_square().is_none(), "non-commuting square");
        f
    }

    fn failing_square(&self) -> Option<String> {
        for (ai, a) in self.source.algebra.quiver().arrows().iter().enumerate() {
            let lhs = &self.target.maps[ai] * &self.blocks[a.source];
            let rhs = &self.blocks[a.target] * &self.source.maps[ai];
            if lhs != rhs {
                return Some(a.name.clone());
            }
        }
        None
    }

    pub fn zero(source: &QModule, target: &QModule) -> Self {
        let f = source.field();
        let blocks = (0..source.dims.len())
            .map(|v| FpMatrix::zeros(f, target.dims[v], source.dims[v]))
            .collect();
        QMorphism::new_unchecked(source.clone(), target.clone(), blocks)
    }

    pub fn identity(m: &QModule) -> Self {
        let f = m.field();
        let blocks = m.dims.iter().map(|&d| FpMatrix::identity(f, d)).collect();
        QMorphism::new_unchecked(m.clone(), m.clone(), blocks)
    }

    pub fn source(&self) -> &QModule {
        &self.source
    }

    pub fn target(&self) -> &QModule {
        &self.target
    }

    pub fn blocks(&self) -> &[FpMatrix] {
        &self.blocks
    }

    pub fn block(&self, v: usize) -> &FpMatrix {
        &self.blocks[v]
    }

    /// `self ∘ g`: first `g`, then `self`.
    pub fn compose(&self, g: &QMorphism) -> QMorphism {
        assert_eq!(
            g.target.dims, self.source.dims,
            "composition of incompatible maps"
        );
        let blocks = self
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| a * b)
            .collect();
        QMorphism::new_unchecked(g.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, g: &QMorphism) -> QMorphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| a + b)
            .collect();
        QMorphism::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn sub(&self, g: &QMorphism) -> QMorphism {
        let blocks = self
            .blocks
            .iter()
            .zip(&g.blocks)
            .map(|(a, b)| a - b)
            .collect();
        QMorphism::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: u64) -> QMorphism {
        let blocks = self.blocks.iter().map(|b| b.scale(c)).collect();
        QMorphism::new_unchecked(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.iter().all(FpMatrix::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.blocks.iter().map(FpMatrix::rank).sum()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source.total_dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.target.total_dim()
    }

    pub fn is_iso(&self) -> bool {
        self.is_injective() && self.is_surjective()
    }

    pub fn inverse(&self) -> Option<QMorphism> {
        let blocks = self
            .blocks
            .iter()
            .map(|b| b.inverse())
            .collect::<Option<Vec<_>>>()?;
        Some(QMorphism::new_unchecked(
            self.target.clone(),
            self.source.clone(),
            blocks,
        ))
    }

    /// Block-diagonal matrix on the flattened spaces.
    pub fn total_matrix(&self) -> FpMatrix {
        FpMatrix::block_diag(self.source.field(), &self.blocks)
    }

    /// Entries flattened vertex by vertex, row-major within each block.
    pub fn flatten(&self) -> Vec<u64> {
        self.blocks
            .iter()
            .flat_map(|b| b.as_slice().iter().copied())
            .collect()
    }

    /// Same blocks, reinterpreted between (equal-shaped) modules.
    pub fn retarget(&self, source: &QModule, target: &QModule) -> Result<QMorphism> {
        QMorphism::new(source.clone(), target.clone(), self.blocks.clone())
    }

    /// `D f : D target → D source`.
    pub fn dualize(&self) -> QMorphism {
        QMorphism::new_unchecked(
            self.target.dualize(),
            self.source.dualize(),
            self.blocks.iter().map(FpMatrix::transpose).collect(),
        )
    }

    /// Kernel with its inclusion into the source.
    pub fn kernel(&self) -> (QModule, QMorphism) {
        let incl: Vec<FpMatrix> = self.blocks.iter().map(FpMatrix::kernel_matrix).collect();
        sub_representation(&self.source, incl)
    }

    /// Image with its inclusion into the target.
    pub fn image(&self) -> (QModule, QMorphism) {
        let incl: Vec<FpMatrix> = self.blocks.iter().map(FpMatrix::image_matrix).collect();
        sub_representation(&self.target, incl)
    }

    /// Cokernel with the projection from the target.
    pub fn cokernel(&self) -> (QModule, QMorphism) {
        let incl: Vec<FpMatrix> = self.blocks.iter().map(FpMatrix::image_matrix).collect();
        quotient_representation(&self.target, &incl)
    }

    /// Solve `self ∘ x = g` for `x`, if a lift exists.
    pub fn lift_through(&self, g: &QMorphism) -> Option<QMorphism> {
        let hs = hom_basis(g.source(), self.source()).ok()?;
        let images: Vec<Vec<u64>> = hs
            .basis()
            .iter()
            .map(|b| self.compose(b).flatten())
            .collect();
        let f = self.source.field();
        let rows = g.flatten().len();
        let a = FpMatrix::from_columns(f, rows, &images);
        let c = a.solve(&g.flatten()).ok()?;
        Some(hs.combine(&c))
    }
}

impl fmt::Debug for QMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "QMorphism[{:?} -> {:?}:",
            self.source.dims, self.target.dims
        )?;
        for b in &self.blocks {
            write!(f, " {b}")?;
        }
        write!(f, "]")
    }
}

/// The subrepresentation spanned at each vertex by the columns of `incl[v]`
/// (assumed invariant and of full column rank).
pub(crate) fn sub_representation(m: &QModule, incl: Vec<FpMatrix>) -> (QModule, QMorphism) {
    let f = m.field();
    let q = m.algebra.quiver();
    let dims: Vec<usize> = incl.iter().map(FpMatrix::cols).collect();
    let lefts: Vec<FpMatrix> = incl
        .iter()
        .map(|i| i.left_inverse().expect("full column rank"))
        .collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| {
            if dims[a.source] == 0 || dims[a.target] == 0 {
                return FpMatrix::zeros(f, dims[a.target], dims[a.source]);
            }
            &(&lefts[a.target] * &m.maps[ai]) * &incl[a.source]
        })
        .collect();
    let sub = QModule::new_unchecked(m.algebra.clone(), dims, maps);
    let inc = QMorphism::new_unchecked(sub.clone(), m.clone(), incl);
    (sub, inc)
}

/// Quotient of `m` by the invariant subspaces spanned by `sub[v]`.
pub(crate) fn quotient_representation(m: &QModule, sub: &[FpMatrix]) -> (QModule, QMorphism) {
    let q = m.algebra.quiver();
    let qs: Vec<(FpMatrix, FpMatrix)> = sub.iter().map(FpMatrix::quotient_maps).collect();
    let dims: Vec<usize> = qs.iter().map(|(q, _)| q.rows()).collect();
    let maps = q
        .arrows()
        .iter()
        .enumerate()
        .map(|(ai, a)| &(&qs[a.target].0 * &m.maps[ai]) * &qs[a.source].1)
        .collect();
    let quot = QModule::new_unchecked(m.algebra.clone(), dims, maps);
    let proj = QMorphism::new_unchecked(
        m.clone(),
        quot.clone(),
        qs.into_iter().map(|(q, _)| q).collect(),
    );
    (quot, proj)
}

/// The morphism `⊕ sources → target` whose components are `parts`.
pub fn hcat(source: &QModule, target: &QModule, parts: &[QMorphism]) -> QMorphism {
    let f = target.field();
    let blocks = (0..target.dims.len())
        .map(|v| {
            parts
                .iter()
                .fold(FpMatrix::zeros(f, target.dims[v], 0), |acc, p| {
                    acc.hstack(&p.blocks[v])
                })
        })
        .collect();
    QMorphism::new_unchecked(source.clone(), target.clone(), blocks)
}

/// The morphism `source → ⊕ targets` whose components are `parts`.
pub fn vcat(source: &QModule, target: &QModule, parts: &[QMorphism]) -> QMorphism {
    let f = source.field();
    let blocks = (0..source.dims.len())
        .map(|v| {
            parts
                .iter()
                .fold(FpMatrix::zeros(f, 0, source.dims[v]), |acc, p| {
                    acc.vstack(&p.blocks[v])
                })
        })
        .collect();
    QMorphism::new_unchecked(source.clone(), target.clone(), blocks)
}

/// Block-diagonal `⊕ f_i : ⊕ A_i → ⊕ B_i`.
pub fn diag(source: &QModule, target: &QModule, parts: &[QMorphism]) -> QMorphism {
    let f = source.field();
    let blocks = (0..source.dims.len())
        .map(|v| {
            let bs: Vec<FpMatrix> = parts.iter().map(|p| p.blocks[v].clone()).collect();
            FpMatrix::block_diag(f, &bs)
        })
        .collect();
    QMorphism::new_unchecked(source.clone(), target.clone(), blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Quiver, DEFAULT_LENGTH_CAP};

    fn a2() -> Arc<BoundQuiverAlgebra> {
        let q = Quiver::from_names(&["1", "2"], &[("δ", "1", "2")]).unwrap();
        BoundQuiverAlgebra::build("A2", FieldPrime::default(), q, vec![], DEFAULT_LENGTH_CAP)
            .unwrap()
    }

    #[test]
    fn kernel_of_identity_is_zero() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let (k, _) = QMorphism::identity(&p1).kernel();
        assert!(k.is_zero());
    }

    #[test]
    fn cokernel_of_inclusion_is_simple() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let p2 = projective(&a, 1).unwrap();
        let f = hom_basis(&p2, &p1).unwrap().basis()[0].clone();
        let (c, pr) = f.cokernel();
        assert_eq!(c.dims(), &[1, 0]);
        assert!(pr.compose(&f).is_zero());
        assert!(is_isomorphic(&c, &simple(&a, 0).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn shape_mismatch_rejected() {
        let a = a2();
        let f = a.field();
        let bad = QModule::new(a, vec![1, 1], vec![FpMatrix::zeros(f, 2, 1)]);
        assert!(matches!(bad, Err(Error::InvalidModule(_))));
    }

    #[test]
    fn dualize_twice_is_identity() {
        let a = a2();
        let p1 = projective(&a, 0).unwrap();
        let dd = p1.dualize().dualize();
        assert_eq!(dd, p1);
        assert!(Arc::ptr_eq(dd.algebra(), &a));
    }
}
