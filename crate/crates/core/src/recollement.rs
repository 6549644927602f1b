//! The recollement of module categories attached to a triangular split of
//! the vertices: `A` is the set of vertices that receive the connecting
//! arrows and `C` the rest, with no path from `A` to `C`.
//!
//! A `Λ`-module is a triple `(X | Y)_f` with `X = M|_A`, `Y = M|_C` and
//! `f: N ⊗ Y -> X` given by the connecting arrows, `N = e_A Λ e_C`.

use std::sync::Arc;

use crate::algebra::{BoundQuiverAlgebra, Path};
use crate::error::{Error, Result};
use crate::homology::{injective_envelope, projective_cover};
use crate::linalg::FpMatrix;
use crate::modcat::{simple, QModule, QMorphism, Universe};

/// Dimensions of the first derived functors on simples. A right exact
/// functor is exact iff its `L_1` vanishes on every simple; dually for
/// left exact functors and `R^1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exactness {
    /// `dim L_1 i^*(S_v)` for every vertex of `Λ`.
    pub l1_i_upper_star: Vec<usize>,
    /// `dim R^1 i^!(S_v)` for every vertex of `Λ`.
    pub r1_i_shriek: Vec<usize>,
    /// `dim L_1 j_!(S_v)` for every vertex of `C`.
    pub l1_j_lower_shriek: Vec<usize>,
    /// `dim R^1 j_*(S_v)` for every vertex of `C`.
    pub r1_j_star: Vec<usize>,
}

impl Exactness {
    pub fn i_upper_star(&self) -> bool {
        self.l1_i_upper_star.iter().all(|&d| d == 0)
    }

    pub fn i_shriek(&self) -> bool {
        self.r1_i_shriek.iter().all(|&d| d == 0)
    }

    pub fn j_lower_shriek(&self) -> bool {
        self.l1_j_lower_shriek.iter().all(|&d| d == 0)
    }

    pub fn j_star(&self) -> bool {
        self.r1_j_star.iter().all(|&d| d == 0)
    }
}

/// Generators of `(N ⊗ Y)_t`: pairs (source vertex `s ∈ C`, basis path `s -> t`).
#[derive(Clone, Debug)]
struct TensorSlot {
    gens: Vec<(usize, usize)>,
}

#[derive(Clone, Debug)]
pub struct Recollement {
    total: Arc<BoundQuiverAlgebra>,
    a_vertices: Vec<usize>,
    c_vertices: Vec<usize>,
    a_algebra: Arc<BoundQuiverAlgebra>,
    c_algebra: Arc<BoundQuiverAlgebra>,
    /// Local arrow index -> arrow of `Λ`.
    a_arrows: Vec<usize>,
    c_arrows: Vec<usize>,
    /// Arrows from `C` to `A`.
    connecting: Vec<usize>,
    slots: Vec<TensorSlot>,
    exactness: Option<Exactness>,
}

/// Result of `j_!`: the module together with the quotient data of each
/// tensor slot, used for functoriality and the counit.
struct TensorData {
    module: QModule,
    /// Per a-vertex: `(q, s)` from the generator space onto `(N ⊗ Y)_t`.
    quot: Vec<(FpMatrix, FpMatrix)>,
}

impl Recollement {
    pub fn build(total: &Arc<BoundQuiverAlgebra>, a_vertices: &[usize]) -> Result<Self> {
        let name = total.name();
        let a = total.restrict(format!("{name}_A"), &Self::sorted(total, a_vertices)?)?;
        let cv = Self::complement(total, a_vertices);
        let c = total.restrict(format!("{name}_C"), &cv)?;
        Self::assemble(total, a_vertices, a, c)
    }

    /// As [`Self::build`], using the given algebras for the two sides. They
    /// must coincide with the restrictions of `total`.
    pub fn with_algebras(
        total: &Arc<BoundQuiverAlgebra>,
        a_vertices: &[usize],
        a_algebra: &Arc<BoundQuiverAlgebra>,
        c_algebra: &Arc<BoundQuiverAlgebra>,
    ) -> Result<Self> {
        let r = Self::build(total, a_vertices)?;
        for (mine, given) in [(&r.a_algebra, a_algebra), (&r.c_algebra, c_algebra)] {
            if !mine.same_as(given) {
                return Err(Error::AlgebraMismatch(
                    mine.name().to_string(),
                    given.name().to_string(),
                ));
            }
        }
        Self::assemble(total, a_vertices, a_algebra.clone(), c_algebra.clone())
    }

    fn sorted(total: &BoundQuiverAlgebra, vs: &[usize]) -> Result<Vec<usize>> {
        let mut v = vs.to_vec();
        v.sort_unstable();
        v.dedup();
        if let Some(&bad) = v.iter().find(|&&x| x >= total.vertex_count()) {
            return Err(Error::UnknownName(bad.to_string()));
        }
        Ok(v)
    }

    fn complement(total: &BoundQuiverAlgebra, a: &[usize]) -> Vec<usize> {
        (0..total.vertex_count())
            .filter(|v| !a.contains(v))
            .collect()
    }

    fn assemble(
        total: &Arc<BoundQuiverAlgebra>,
        a_vertices: &[usize],
        a_algebra: Arc<BoundQuiverAlgebra>,
        c_algebra: Arc<BoundQuiverAlgebra>,
    ) -> Result<Self> {
        let a_vertices = Self::sorted(total, a_vertices)?;
        let c_vertices = Self::complement(total, &a_vertices);
        for &s in &a_vertices {
            for &t in &c_vertices {
                if let Some(&b) = total.paths_between(s, t).first() {
                    return Err(Error::NotTriangular(format!(
                        "path `{}` runs from the A-side to the C-side",
                        total.basis()[b].word(total.quiver())
                    )));
                }
            }
        }
        let q = total.quiver();
        let mut a_arrows = Vec::new();
        let mut c_arrows = Vec::new();
        let mut connecting = Vec::new();
        for (i, ar) in q.arrows().iter().enumerate() {
            let sa = a_vertices.contains(&ar.source);
            let ta = a_vertices.contains(&ar.target);
            match (sa, ta) {
                (true, true) => a_arrows.push(i),
                (false, false) => c_arrows.push(i),
                (false, true) => connecting.push(i),
                (true, false) => unreachable!("checked triangularity"),
            }
        }
        let slots = a_vertices
            .iter()
            .map(|&t| TensorSlot {
                gens: c_vertices
                    .iter()
                    .flat_map(|&s| total.paths_between(s, t).iter().map(move |&b| (s, b)))
                    .collect(),
            })
            .collect();
        let mut r = Recollement {
            total: total.clone(),
            a_vertices,
            c_vertices,
            a_algebra,
            c_algebra,
            a_arrows,
            c_arrows,
            connecting,
            slots,
            exactness: None,
        };
        r.exactness = Some(r.compute_exactness()?);
        Ok(r)
    }

    pub fn total(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.total
    }

    pub fn a_algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.a_algebra
    }

    pub fn c_algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.c_algebra
    }

    pub fn a_vertices(&self) -> &[usize] {
        &self.a_vertices
    }

    pub fn c_vertices(&self) -> &[usize] {
        &self.c_vertices
    }

    pub fn connecting_arrows(&self) -> &[usize] {
        &self.connecting
    }

    pub fn exactness(&self) -> &Exactness {
        self.exactness.as_ref().expect("computed at build time")
    }

    fn local_a(&self, v: usize) -> Option<usize> {
        self.a_vertices.iter().position(|&x| x == v)
    }

    fn local_c(&self, v: usize) -> Option<usize> {
        self.c_vertices.iter().position(|&x| x == v)
    }

    fn check_over(&self, m: &QModule, a: &Arc<BoundQuiverAlgebra>) -> Result<()> {
        if m.algebra().same_as(a) {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch(
                m.algebra().name().to_string(),
                a.name().to_string(),
            ))
        }
    }

    /// Extend a module over one side by zero.
    fn extend(&self, m: &QModule, vertices: &[usize], arrows: &[usize]) -> QModule {
        let f = self.total.field();
        let q = self.total.quiver();
        let mut dims = vec![0; self.total.vertex_count()];
        for (k, &v) in vertices.iter().enumerate() {
            dims[v] = m.dim_at(k);
        }
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, ar)| match arrows.iter().position(|&x| x == i) {
                Some(k) => m.map(k).clone(),
                None => FpMatrix::zeros(f, dims[ar.target], dims[ar.source]),
            })
            .collect();
        QModule::new_unchecked(self.total.clone(), dims, maps)
    }

    fn extend_morphism(
        &self,
        g: &QMorphism,
        src: QModule,
        tgt: QModule,
        vertices: &[usize],
    ) -> QMorphism {
        let f = self.total.field();
        let blocks = (0..self.total.vertex_count())
            .map(|v| match vertices.iter().position(|&x| x == v) {
                Some(k) => g.block(k).clone(),
                None => FpMatrix::zeros(f, tgt.dim_at(v), src.dim_at(v)),
            })
            .collect();
        QMorphism::new_unchecked(src, tgt, blocks)
    }

    fn restrict_module(
        &self,
        m: &QModule,
        vertices: &[usize],
        arrows: &[usize],
        alg: &Arc<BoundQuiverAlgebra>,
    ) -> QModule {
        let dims = vertices.iter().map(|&v| m.dim_at(v)).collect();
        let maps = arrows.iter().map(|&a| m.map(a).clone()).collect();
        QModule::new_unchecked(alg.clone(), dims, maps)
    }

    fn restrict_morphism(
        &self,
        g: &QMorphism,
        src: QModule,
        tgt: QModule,
        vertices: &[usize],
    ) -> QMorphism {
        let blocks = vertices.iter().map(|&v| g.block(v).clone()).collect();
        QMorphism::new_unchecked(src, tgt, blocks)
    }

    /// `i_*(X) = (X | 0)`.
    pub fn i_star(&self, x: &QModule) -> Result<QModule> {
        self.check_over(x, &self.a_algebra)?;
        Ok(self.extend(x, &self.a_vertices, &self.a_arrows))
    }

    pub fn i_star_map(&self, g: &QMorphism) -> Result<QMorphism> {
        let s = self.i_star(g.source())?;
        let t = self.i_star(g.target())?;
        Ok(self.extend_morphism(g, s, t, &self.a_vertices))
    }

    /// `j_*(Y) = (0 | Y)`.
    pub fn j_star(&self, y: &QModule) -> Result<QModule> {
        self.check_over(y, &self.c_algebra)?;
        Ok(self.extend(y, &self.c_vertices, &self.c_arrows))
    }

    pub fn j_star_map(&self, g: &QMorphism) -> Result<QMorphism> {
        let s = self.j_star(g.source())?;
        let t = self.j_star(g.target())?;
        Ok(self.extend_morphism(g, s, t, &self.c_vertices))
    }

    /// `i^!(X | Y)_f = X`.
    pub fn i_shriek(&self, m: &QModule) -> Result<QModule> {
        self.check_over(m, &self.total)?;
        Ok(self.restrict_module(m, &self.a_vertices, &self.a_arrows, &self.a_algebra))
    }

    pub fn i_shriek_map(&self, g: &QMorphism) -> Result<QMorphism> {
        let s = self.i_shriek(g.source())?;
        let t = self.i_shriek(g.target())?;
        Ok(self.restrict_morphism(g, s, t, &self.a_vertices))
    }

    /// `j^*(X | Y)_f = Y`.
    pub fn j_upper_star(&self, m: &QModule) -> Result<QModule> {
        self.check_over(m, &self.total)?;
        Ok(self.restrict_module(m, &self.c_vertices, &self.c_arrows, &self.c_algebra))
    }

    pub fn j_upper_star_map(&self, g: &QMorphism) -> Result<QMorphism> {
        let s = self.j_upper_star(g.source())?;
        let t = self.j_upper_star(g.target())?;
        Ok(self.restrict_morphism(g, s, t, &self.c_vertices))
    }

    /// The image of `f: N ⊗ Y -> X` at each a-vertex (columns), in `M_t`.
    fn connecting_image(&self, m: &QModule) -> Vec<FpMatrix> {
        let f = self.total.field();
        self.a_vertices
            .iter()
            .map(|&t| {
                let mut span = FpMatrix::zeros(f, m.dim_at(t), 0);
                for &s in &self.c_vertices {
                    for &b in self.total.paths_between(s, t) {
                        span = span.hstack(&m.basis_action(b));
                    }
                }
                span.image_matrix()
            })
            .collect()
    }

    /// `i^*(X | Y)_f = Coker f`, with the quotient map `X -> Coker f`.
    fn i_upper_star_data(&self, m: &QModule) -> Result<(QModule, QMorphism)> {
        let x = self.i_shriek(m)?;
        let im = self.connecting_image(m);
        Ok(crate::modcat::quotient_representation(&x, &im))
    }

    pub fn i_upper_star(&self, m: &QModule) -> Result<QModule> {
        Ok(self.i_upper_star_data(m)?.0)
    }

    pub fn i_upper_star_map(&self, g: &QMorphism) -> Result<QMorphism> {
        let (s, _) = self.i_upper_star_data(g.source())?;
        let (t, pt) = self.i_upper_star_data(g.target())?;
        let im = self.connecting_image(g.source());
        let blocks = self
            .a_vertices
            .iter()
            .enumerate()
            .map(|(k, &v)| {
                let (_, sec) = FpMatrix::quotient_maps(&im[k]);
                &(pt.block(k) * g.block(v)) * &sec
            })
            .collect();
        QMorphism::new(s, t, blocks)
    }

    fn tensor(&self, y: &QModule) -> Result<TensorData> {
        self.check_over(y, &self.c_algebra)?;
        let total = &self.total;
        let f = total.field();
        let q = total.quiver();
        let ydim = |s: usize| y.dim_at(self.local_c(s).expect("c-vertex"));
        // offsets of each generator block inside the generator space at t
        let offsets: Vec<Vec<usize>> = self
            .slots
            .iter()
            .map(|slot| {
                let mut o = Vec::with_capacity(slot.gens.len() + 1);
                let mut acc = 0;
                for &(s, _) in &slot.gens {
                    o.push(acc);
                    acc += ydim(s);
                }
                o.push(acc);
                o
            })
            .collect();
        let gen_index =
            |k: usize, s: usize, b: usize| self.slots[k].gens.iter().position(|&g| g == (s, b));
        // relations (p q) ⊗ y - p ⊗ (q y) for C-arrows q: s' -> s
        let mut quot = Vec::new();
        for (k, slot) in self.slots.iter().enumerate() {
            let n = *offsets[k].last().unwrap();
            let mut cols: Vec<Vec<u64>> = Vec::new();
            for (gi, &(s, p)) in slot.gens.iter().enumerate() {
                for (lq, &qa) in self.c_arrows.iter().enumerate() {
                    let ar = &q.arrows()[qa];
                    if ar.target != s {
                        continue;
                    }
                    let s2 = ar.source;
                    let qpath = Path {
                        source: ar.source,
                        target: ar.target,
                        arrows: vec![qa],
                    };
                    let pq = total.basis()[p].compose(&qpath).expect("composable");
                    let pq = total.reduce_path(&pq);
                    let ymap = y.map(lq);
                    for j in 0..ydim(s2) {
                        let mut v = vec![0; n];
                        for &(b, c) in &pq {
                            let g = gen_index(k, s2, b).expect("path from C to A");
                            let o = offsets[k][g] + j;
                            v[o] = f.add(v[o], c);
                        }
                        for i in 0..ydim(s) {
                            let o = offsets[k][gi] + i;
                            v[o] = f.sub(v[o], ymap.get(i, j));
                        }
                        cols.push(v);
                    }
                }
            }
            quot.push(FpMatrix::quotient_maps(&FpMatrix::from_columns(
                f, n, &cols,
            )));
        }
        let mut dims = vec![0; total.vertex_count()];
        for (k, &t) in self.a_vertices.iter().enumerate() {
            dims[t] = quot[k].0.rows();
        }
        for (k, &s) in self.c_vertices.iter().enumerate() {
            dims[s] = y.dim_at(k);
        }
        let maps = q
            .arrows()
            .iter()
            .enumerate()
            .map(|(ai, ar)| {
                if let Some(lc) = self.c_arrows.iter().position(|&x| x == ai) {
                    return y.map(lc).clone();
                }
                let kt = self.local_a(ar.target).expect("target on the A-side");
                let arrow = Path {
                    source: ar.source,
                    target: ar.target,
                    arrows: vec![ai],
                };
                let nt = *offsets[kt].last().unwrap();
                if let Some(ks) = self.local_a(ar.source) {
                    // a-arrow: (s, p) ⊗ y ↦ (a p) ⊗ y
                    let ns = *offsets[ks].last().unwrap();
                    let mut l = FpMatrix::zeros(f, nt, ns);
                    for (gi, &(s, p)) in self.slots[ks].gens.iter().enumerate() {
                        let ap = arrow.compose(&total.basis()[p]).expect("composable");
                        for (b, c) in total.reduce_path(&ap) {
                            let g = gen_index(kt, s, b).expect("path from C to A");
                            for i in 0..ydim(s) {
                                l.set(offsets[kt][g] + i, offsets[ks][gi] + i, c);
                            }
                        }
                    }
                    &(&quot[kt].0 * &l) * &quot[ks].1
                } else {
                    // connecting arrow: y ↦ c ⊗ y
                    let s = ar.source;
                    let mut l = FpMatrix::zeros(f, nt, ydim(s));
                    for (b, c) in total.reduce_path(&arrow) {
                        let g = gen_index(kt, s, b).expect("arrow from C to A");
                        for i in 0..ydim(s) {
                            l.set(offsets[kt][g] + i, i, c);
                        }
                    }
                    &quot[kt].0 * &l
                }
            })
            .collect();
        let module = QModule::new_unchecked(total.clone(), dims, maps);
        Ok(TensorData { module, quot })
    }

    /// Generator-space matrix at a-slot `k` induced by a linear map on `Y`.
    fn generator_map(&self, k: usize, g: &QMorphism) -> FpMatrix {
        let blocks: Vec<FpMatrix> = self.slots[k]
            .gens
            .iter()
            .map(|&(s, _)| g.block(self.local_c(s).expect("c-vertex")).clone())
            .collect();
        FpMatrix::block_diag(self.total.field(), &blocks)
    }

    /// `j_!(Y) = (N ⊗ Y | Y)_1`.
    pub fn j_lower_shriek(&self, y: &QModule) -> Result<QModule> {
        Ok(self.tensor(y)?.module)
    }

    pub fn j_lower_shriek_map(&self, g: &QMorphism) -> Result<QMorphism> {
        let s = self.tensor(g.source())?;
        let t = self.tensor(g.target())?;
        let blocks = (0..self.total.vertex_count())
            .map(|v| {
                if let Some(k) = self.local_a(v) {
                    let l = self.generator_map(k, g);
                    &(&t.quot[k].0 * &l) * &s.quot[k].1
                } else {
                    g.block(self.local_c(v).unwrap()).clone()
                }
            })
            .collect();
        QMorphism::new(s.module, t.module, blocks)
    }

    /// Counit `j_! j^* M -> M`.
    pub fn counit_j(&self, m: &QModule) -> Result<QMorphism> {
        let y = self.j_upper_star(m)?;
        let td = self.tensor(&y)?;
        let f = self.total.field();
        let blocks = (0..self.total.vertex_count())
            .map(|v| {
                if let Some(k) = self.local_a(v) {
                    let mut e = FpMatrix::zeros(f, m.dim_at(v), 0);
                    for &(_, p) in &self.slots[k].gens {
                        e = e.hstack(&m.basis_action(p));
                    }
                    &e * &td.quot[k].1
                } else {
                    FpMatrix::identity(f, m.dim_at(v))
                }
            })
            .collect();
        QMorphism::new(td.module, m.clone(), blocks)
    }

    /// Unit `M -> i_* i^* M`.
    pub fn unit_i(&self, m: &QModule) -> Result<QMorphism> {
        let (x, proj) = self.i_upper_star_data(m)?;
        let target = self.i_star(&x)?;
        let f = self.total.field();
        let blocks = (0..self.total.vertex_count())
            .map(|v| match self.local_a(v) {
                Some(k) => proj.block(k).clone(),
                None => FpMatrix::zeros(f, 0, m.dim_at(v)),
            })
            .collect();
        QMorphism::new(m.clone(), target, blocks)
    }

    /// Counit `i_* i^! M -> M`: inclusion of the A-block.
    pub fn counit_i(&self, m: &QModule) -> Result<QMorphism> {
        let src = self.i_star(&self.i_shriek(m)?)?;
        let f = self.total.field();
        let blocks = (0..self.total.vertex_count())
            .map(|v| match self.local_a(v) {
                Some(_) => FpMatrix::identity(f, m.dim_at(v)),
                None => FpMatrix::zeros(f, m.dim_at(v), 0),
            })
            .collect();
        QMorphism::new(src, m.clone(), blocks)
    }

    /// Unit `M -> j_* j^* M`: projection onto the C-block.
    pub fn unit_j(&self, m: &QModule) -> Result<QMorphism> {
        let tgt = self.j_star(&self.j_upper_star(m)?)?;
        let f = self.total.field();
        let blocks = (0..self.total.vertex_count())
            .map(|v| match self.local_c(v) {
                Some(_) => FpMatrix::identity(f, m.dim_at(v)),
                None => FpMatrix::zeros(f, 0, m.dim_at(v)),
            })
            .collect();
        QMorphism::new(m.clone(), tgt, blocks)
    }

    /// `0 -> i_* i^! M -> M -> j_* j^* M -> 0`.
    pub fn canonical_sequence_upper(&self, m: &QModule) -> Result<CanonicalSequence> {
        let left = self.counit_i(m)?;
        let right = self.unit_j(m)?;
        let certified = CanonicalSequence::certify(&left, &right);
        Ok(CanonicalSequence {
            left,
            right,
            certified,
        })
    }

    /// `j_! j^* M -> M -> i_* i^* M -> 0`; left exactness is certified
    /// only when it actually holds.
    pub fn canonical_sequence_lower(&self, m: &QModule) -> Result<CanonicalSequence> {
        let left = self.counit_j(m)?;
        let right = self.unit_i(m)?;
        let certified = CanonicalSequence::certify(&left, &right);
        Ok(CanonicalSequence {
            left,
            right,
            certified,
        })
    }

    fn compute_exactness(&self) -> Result<Exactness> {
        let total = &self.total;
        let mut l1_i = Vec::new();
        let mut r1_i = Vec::new();
        for v in 0..total.vertex_count() {
            let s = simple(total, v)?;
            // L_1 F(S) = ker F(Ω S -> P_0) for right exact F
            let (_, cover, _) = projective_cover(&s);
            let (_, inc) = cover.kernel();
            let fi = self.i_upper_star_map(&inc)?;
            l1_i.push(fi.source().total_dim() - fi.rank());
            // R^1 F(S) = coker F(I_0 -> Σ S) for left exact F
            let (_, env, _) = injective_envelope(&s);
            let (_, proj) = env.cokernel();
            let fp = self.i_shriek_map(&proj)?;
            r1_i.push(fp.target().total_dim() - fp.rank());
        }
        let c = &self.c_algebra;
        let mut l1_j = Vec::new();
        let mut r1_j = Vec::new();
        for v in 0..c.vertex_count() {
            let s = simple(c, v)?;
            let (_, cover, _) = projective_cover(&s);
            let (_, inc) = cover.kernel();
            let fi = self.j_lower_shriek_map(&inc)?;
            l1_j.push(fi.source().total_dim() - fi.rank());
            let (_, env, _) = injective_envelope(&s);
            let (_, proj) = env.cokernel();
            let fp = self.j_star_map(&proj.rebase_onto(c)?)?;
            r1_j.push(fp.target().total_dim() - fp.rank());
        }
        Ok(Exactness {
            l1_i_upper_star: l1_i,
            r1_i_shriek: r1_i,
            l1_j_lower_shriek: l1_j,
            r1_j_star: r1_j,
        })
    }
}

/// A sequence `L -> M -> R` with the exactness positions that hold.
#[derive(Clone, Debug)]
pub struct CanonicalSequence {
    pub left: QMorphism,
    pub right: QMorphism,
    pub certified: SequenceExactness,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SequenceExactness {
    pub left_injective: bool,
    pub middle_exact: bool,
    pub right_surjective: bool,
}

impl CanonicalSequence {
    fn certify(left: &QMorphism, right: &QMorphism) -> SequenceExactness {
        let composite_zero = right.compose(left).is_zero();
        let (_, ker) = right.kernel();
        let middle_exact = composite_zero && left.rank() == ker.source().total_dim();
        SequenceExactness {
            left_injective: left.is_injective(),
            middle_exact,
            right_surjective: right.is_surjective(),
        }
    }

    pub fn is_short_exact(&self) -> bool {
        self.certified.left_injective
            && self.certified.middle_exact
            && self.certified.right_surjective
    }
}

/// One named identity check of the recollement on bundled modules.
#[derive(Clone, Debug)]
pub struct AuditLine {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
}

impl AuditLine {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

fn line(name: &'static str) -> AuditLine {
    AuditLine {
        name,
        checked: 0,
        failures: Vec::new(),
    }
}

impl AuditLine {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(what());
        }
    }
}

fn iso(x: &QModule, y: &QModule) -> Result<bool> {
    Ok(crate::modcat::is_isomorphic(x, y)?.is_some())
}

/// The functor identities, adjunction dimension formulas, Ext transfer and
/// canonical sequences, checked over universes for the three algebras.
pub fn audit(
    r: &Recollement,
    ua: &Universe,
    ut: &Universe,
    uc: &Universe,
) -> Result<Vec<AuditLine>> {
    use crate::homology::{ext_dim, id, pd};
    use crate::modcat::{hom_dim, injective, projective};
    let mut out = Vec::new();

    let mut l = line("i^*i_* ≅ Id");
    let mut l2 = line("i^!i_* ≅ Id");
    for (k, x) in ua.members().iter().enumerate() {
        let ix = r.i_star(x)?;
        l.record(iso(&r.i_upper_star(&ix)?, x)?, || ua.name(k).to_string());
        l2.record(iso(&r.i_shriek(&ix)?, x)?, || ua.name(k).to_string());
    }
    out.extend([l, l2]);

    let mut l = line("j^*j_! ≅ Id");
    let mut l2 = line("j^*j_* ≅ Id");
    let mut l3 = line("i^*j_! = 0");
    let mut l4 = line("i^!j_* = 0");
    for (k, y) in uc.members().iter().enumerate() {
        let jy = r.j_lower_shriek(y)?;
        let jsy = r.j_star(y)?;
        l.record(iso(&r.j_upper_star(&jy)?, y)?, || uc.name(k).to_string());
        l2.record(iso(&r.j_upper_star(&jsy)?, y)?, || uc.name(k).to_string());
        l3.record(r.i_upper_star(&jy)?.is_zero(), || uc.name(k).to_string());
        l4.record(r.i_shriek(&jsy)?.is_zero(), || uc.name(k).to_string());
    }
    out.extend([l, l2, l3, l4]);

    let total = r.total();
    let mut l = line("i^* preserves projectives");
    let mut l2 = line("i^! preserves injectives");
    for v in 0..total.vertex_count() {
        l.record(
            pd(&r.i_upper_star(&projective(total, v)?)?, 0) == Some(0),
            || format!("P({v})"),
        );
        l2.record(
            id(&r.i_shriek(&injective(total, v)?)?, 0) == Some(0),
            || format!("I({v})"),
        );
    }
    out.extend([l, l2]);
    let c = r.c_algebra();
    let mut l = line("j_! preserves projectives");
    let mut l2 = line("j_* preserves injectives");
    for v in 0..c.vertex_count() {
        l.record(
            pd(&r.j_lower_shriek(&projective(c, v)?)?, 0) == Some(0),
            || format!("P({v})"),
        );
        l2.record(id(&r.j_star(&injective(c, v)?)?, 0) == Some(0), || {
            format!("I({v})")
        });
    }
    out.extend([l, l2]);

    let mut adj = [
        line("Hom(i^*M, X) = Hom(M, i_*X)"),
        line("Hom(i_*X, M) = Hom(X, i^!M)"),
        line("Hom(j_!Y, M) = Hom(Y, j^*M)"),
        line("Hom(j^*M, Y) = Hom(M, j_*Y)"),
    ];
    let mut e7 = line("Ext¹(i_*X, M) = Ext¹(X, i^!M)");
    let mut e7p = line("Ext¹(j_!Y, M) = Ext¹(Y, j^*M)");
    let ex = r.exactness().clone();
    for (mk, m) in ut.members().iter().enumerate() {
        let ism = r.i_upper_star(m)?;
        let ishm = r.i_shriek(m)?;
        let jm = r.j_upper_star(m)?;
        for (xk, x) in ua.members().iter().enumerate() {
            let ix = r.i_star(x)?;
            let who = || format!("{} / {}", ut.name(mk), ua.name(xk));
            adj[0].record(hom_dim(&ism, x)? == hom_dim(m, &ix)?, who);
            adj[1].record(hom_dim(&ix, m)? == hom_dim(x, &ishm)?, who);
            if ex.i_shriek() {
                e7.record(ext_dim(&ix, m, 1)? == ext_dim(x, &ishm, 1)?, who);
            }
        }
        for (yk, y) in uc.members().iter().enumerate() {
            let jy = r.j_lower_shriek(y)?;
            let jsy = r.j_star(y)?;
            let who = || format!("{} / {}", ut.name(mk), uc.name(yk));
            adj[2].record(hom_dim(&jy, m)? == hom_dim(y, &jm)?, who);
            adj[3].record(hom_dim(&jm, y)? == hom_dim(m, &jsy)?, who);
            if ex.j_lower_shriek() {
                e7p.record(ext_dim(&jy, m, 1)? == ext_dim(y, &jm, 1)?, who);
            }
        }
    }
    out.extend(adj);
    out.extend([e7, e7p]);

    let mut up = line("0 → i_*i^!M → M → j_*j^*M → 0 exact");
    let mut low = line("j_!j^*M → M → i_*i^*M → 0 exact where certified");
    for (k, m) in ut.members().iter().enumerate() {
        let s = r.canonical_sequence_upper(m)?;
        up.record(!ex.i_shriek() || s.is_short_exact(), || {
            ut.name(k).to_string()
        });
        let s = r.canonical_sequence_lower(m)?;
        let ok = s.certified.middle_exact
            && s.certified.right_surjective
            && (!ex.i_upper_star() || s.certified.left_injective);
        low.record(ok, || ut.name(k).to_string());
    }
    out.extend([up, low]);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bundled::ExampleData;
    use crate::modcat::{is_isomorphic, projective};

    fn rec() -> (ExampleData, Recollement) {
        let d = ExampleData::load(None).unwrap();
        let r = Recollement::with_algebras(&d.lambda, &[0, 1], &d.lambda_prime, &d.lambda_dprime)
            .unwrap();
        (d, r)
    }

    #[test]
    fn restrictions_match_bundled_algebras() {
        let d = ExampleData::load(None).unwrap();
        let r = Recollement::build(&d.lambda, &[0, 1]).unwrap();
        assert!(r.a_algebra().same_as(&d.lambda_prime));
        assert!(r.c_algebra().same_as(&d.lambda_dprime));
    }

    #[test]
    fn wrong_side_is_not_triangular() {
        let d = ExampleData::load(None).unwrap();
        assert!(matches!(
            Recollement::build(&d.lambda, &[2, 3, 4]),
            Err(Error::NotTriangular(_))
        ));
    }

    #[test]
    fn j_lower_shriek_of_projectives() {
        let (d, r) = rec();
        for v in 0..3 {
            let p = projective(&d.lambda_dprime, v).unwrap();
            let jp = r.j_lower_shriek(&p).unwrap();
            let big = projective(&d.lambda, v + 2).unwrap();
            assert!(is_isomorphic(&jp, &big).unwrap().is_some());
        }
    }

    #[test]
    fn exactness_of_the_example() {
        let (_, r) = rec();
        let e = r.exactness();
        assert!(e.i_shriek());
        assert!(e.j_lower_shriek());
        assert!(e.j_star());
        assert!(!e.i_upper_star());
        assert_eq!(e.l1_i_upper_star, vec![0, 0, 1, 1, 0]);
    }
}
