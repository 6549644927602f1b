//! Quivers, paths and finite-dimensional bound quiver algebras `kQ/I`.
//!
//! Paths compose right to left: the path written `βα` runs `α` first and
//! then `β`. Internally a [`Path`] stores its arrows in traversal order, so
//! `βα` is stored as `[α, β]`.
//!
//! The ideal `I` is computed degree by degree. For relations whose terms all
//! have length `ℓ`, `I ∩ kQ_ℓ` is spanned by the relations of length `ℓ`
//! together with `arrow · I_{ℓ-1}` and `I_{ℓ-1} · arrow`. The residue basis
//! in each degree is the set of non-pivot paths of the reduced ideal rows,
//! and every path has a normal form in that basis.

use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::{Arc, OnceLock, Weak};

use thiserror::Error;

use crate::linalg::{FieldPrime, FpMatrix};

pub const DEFAULT_LENGTH_CAP: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("malformed quiver: {0}")]
    MalformedQuiver(String),
    #[error("malformed relation: {0}")]
    MalformedRelation(String),
    #[error("algebra is not finite dimensional: paths of length {0} survive")]
    NotFiniteDimensional(usize),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<Arrow>) -> Result<Self, AlgebraError> {
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                return Err(AlgebraError::MalformedQuiver(format!(
                    "duplicate vertex `{v}`"
                )));
            }
        }
        for (i, a) in arrows.iter().enumerate() {
            if arrows[..i].iter().any(|b| b.name == a.name) {
                return Err(AlgebraError::MalformedQuiver(format!(
                    "duplicate arrow `{}`",
                    a.name
                )));
            }
            if a.source >= vertices.len() || a.target >= vertices.len() {
                return Err(AlgebraError::MalformedQuiver(format!(
                    "arrow `{}` has an undeclared endpoint",
                    a.name
                )));
            }
        }
        Ok(Quiver { vertices, arrows })
    }

    /// Convenience constructor from names: `arrows` are `(name, source, target)`.
    pub fn from_names(
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
    ) -> Result<Self, AlgebraError> {
        let vs: Vec<String> = vertices.iter().map(|s| s.to_string()).collect();
        let find = |n: &str| {
            vs.iter()
                .position(|v| v == n)
                .ok_or_else(|| AlgebraError::UnknownVertex(n.to_string()))
        };
        let mut arr = Vec::new();
        for &(name, s, t) in arrows {
            arr.push(Arrow {
                name: name.to_string(),
                source: find(s)?,
                target: find(t)?,
            });
        }
        Quiver::new(vs, arr)
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn opposite(&self) -> Quiver {
        Quiver {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| Arrow {
                    name: a.name.clone(),
                    source: a.target,
                    target: a.source,
                })
                .collect(),
        }
    }

    /// Split a juxtaposed, right-to-left path word such as `βα` into arrow
    /// indices in traversal order. Arrow names are matched greedily, longest
    /// first.
    pub fn parse_path_word(&self, word: &str) -> Result<Vec<usize>, AlgebraError> {
        let mut names: Vec<(usize, &str)> = self
            .arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (i, a.name.as_str()))
            .collect();
        names.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
        let mut rest = word;
        let mut written = Vec::new();
        while !rest.is_empty() {
            let (i, n) = names
                .iter()
                .find(|(_, n)| rest.starts_with(n))
                .ok_or_else(|| AlgebraError::UnknownArrow(rest.to_string()))?;
            written.push(*i);
            rest = &rest[n.len()..];
        }
        written.reverse();
        Ok(written)
    }
}

/// A path in the quiver. `arrows` are in traversal order; an empty list is
/// the trivial path `e_source`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Self {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    /// Number of arrows; see [`Path::is_trivial`] for length zero.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.arrows.is_empty()
    }

    /// Build a path from arrows in traversal order, checking composability.
    pub fn from_arrows(quiver: &Quiver, arrows: Vec<usize>) -> Result<Self, AlgebraError> {
        let first = arrows
            .first()
            .ok_or_else(|| AlgebraError::MalformedRelation("empty path".into()))?;
        let source = quiver.arrows[*first].source;
        let mut at = source;
        for &a in &arrows {
            if quiver.arrows[a].source != at {
                return Err(AlgebraError::MalformedRelation(format!(
                    "arrows do not compose at `{}`",
                    quiver.arrows[a].name
                )));
            }
            at = quiver.arrows[a].target;
        }
        Ok(Path {
            source,
            target: at,
            arrows,
        })
    }

    /// Right-to-left word, e.g. `βα`, or `e_3` for a trivial path.
    pub fn word(&self, quiver: &Quiver) -> String {
        if self.arrows.is_empty() {
            return format!("e_{}", quiver.vertices[self.source]);
        }
        self.arrows
            .iter()
            .rev()
            .map(|&a| quiver.arrows[a].name.as_str())
            .collect()
    }

    /// `self · other`: `other` first, then `self`. `None` if not composable.
    pub fn compose(&self, other: &Path) -> Option<Path> {
        if other.target != self.source {
            return None;
        }
        let mut arrows = other.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            source: other.source,
            target: self.target,
            arrows,
        })
    }

    pub fn reversed(&self) -> Path {
        let mut arrows = self.arrows.clone();
        arrows.reverse();
        Path {
            source: self.target,
            target: self.source,
            arrows,
        }
    }
}

/// A linear combination of parallel paths of equal length `≥ 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationSum {
    pub terms: Vec<(u64, Path)>,
}

impl RelationSum {
    pub fn new(quiver: &Quiver, terms: Vec<(u64, Path)>) -> Result<Self, AlgebraError> {
        let Some((_, first)) = terms.first() else {
            return Err(AlgebraError::MalformedRelation("empty relation".into()));
        };
        for (_, p) in &terms {
            if p.len() < 2 {
                return Err(AlgebraError::MalformedRelation(format!(
                    "path `{}` has length < 2",
                    p.word(quiver)
                )));
            }
            if p.source != first.source || p.target != first.target {
                return Err(AlgebraError::MalformedRelation(
                    "relation terms are not parallel".into(),
                ));
            }
            if p.len() != first.len() {
                return Err(AlgebraError::MalformedRelation(
                    "relation terms must have equal length".into(),
                ));
            }
        }
        Ok(RelationSum { terms })
    }

    /// Length of the paths in the relation; all terms share it.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms[0].1.len()
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn reversed(&self) -> RelationSum {
        RelationSum {
            terms: self.terms.iter().map(|(c, p)| (*c, p.reversed())).collect(),
        }
    }
}

/// The ideal in one path-length degree.
#[derive(Clone, Debug)]
struct Degree {
    paths: Vec<Path>,
    index: HashMap<Vec<usize>, usize>,
    /// Reduced rows spanning `I ∩ kQ_ℓ`, in path coordinates.
    ideal: FpMatrix,
    pivots: Vec<usize>,
    /// For each path: `Some(row)` if it is a pivot path, `None` if it is a basis path.
    pivot_row: Vec<Option<usize>>,
    /// For each path that is a basis path: its index in the algebra basis.
    basis_index: Vec<Option<usize>>,
}

/// A finite-dimensional algebra `kQ/I` with an explicit residue-path basis.
pub struct BoundQuiverAlgebra {
    name: String,
    field: FieldPrime,
    quiver: Quiver,
    relations: Vec<RelationSum>,
    degrees: Vec<Degree>,
    basis: Vec<Path>,
    /// `between[s][t]` lists basis indices of paths `s -> t`.
    between: Vec<Vec<Vec<usize>>>,
    fingerprint: u64,
    opposite: OnceLock<Arc<BoundQuiverAlgebra>>,
    opposite_of: Weak<BoundQuiverAlgebra>,
}

impl fmt::Debug for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("BoundQuiverAlgebra")
            .field("name", &self.name)
            .field("field", &self.field)
            .field("vertices", &self.quiver.vertices)
            .field("dim", &self.basis.len())
            .finish()
    }
}

/// Sparse linear combination of basis elements.
pub type Element = Vec<(usize, u64)>;

impl BoundQuiverAlgebra {
    /// Build `kQ/I` where `I` is generated by `relations`.
    pub fn build(
        name: impl Into<String>,
        field: FieldPrime,
        quiver: Quiver,
        relations: Vec<RelationSum>,
        length_cap: usize,
    ) -> Result<Arc<Self>, AlgebraError> {
        Self::build_inner(
            name.into(),
            field,
            quiver,
            relations,
            length_cap,
            Weak::new(),
        )
    }

    fn build_inner(
        name: String,
        field: FieldPrime,
        quiver: Quiver,
        relations: Vec<RelationSum>,
        length_cap: usize,
        opposite_of: Weak<BoundQuiverAlgebra>,
    ) -> Result<Arc<Self>, AlgebraError> {
        for r in &relations {
            for (_, p) in &r.terms {
                Path::from_arrows(&quiver, p.arrows.clone())?;
            }
        }
        let relations: Vec<RelationSum> = relations
            .into_iter()
            .map(|r| RelationSum {
                terms: r
                    .terms
                    .into_iter()
                    .map(|(c, p)| (c % field.p(), p))
                    .collect(),
            })
            .collect();
        let nv = quiver.vertex_count();

        let mut degrees: Vec<Degree> = Vec::new();
        let mut basis: Vec<Path> = Vec::new();
        let mut current: Vec<Path> = (0..nv).map(Path::trivial).collect();
        let mut len = 0;
        loop {
            if current.is_empty() {
                break;
            }
            let index: HashMap<Vec<usize>, usize> = current
                .iter()
                .enumerate()
                .map(|(i, p)| (Self::path_key(p), i))
                .collect();
            let n = current.len();
            let mut rows: Vec<Vec<u64>> = Vec::new();
            if len >= 2 {
                for r in relations.iter().filter(|r| r.len() == len) {
                    let mut row = vec![0; n];
                    for (c, p) in &r.terms {
                        let i = index[&Self::path_key(p)];
                        row[i] = field.add(row[i], *c);
                    }
                    rows.push(row);
                }
                let prev = &degrees[len - 1];
                for r in 0..prev.ideal.rows() {
                    let prow = prev.ideal.row(r);
                    for (ai, a) in quiver.arrows.iter().enumerate() {
                        let mut left = vec![0; n];
                        let mut right = vec![0; n];
                        let (mut any_l, mut any_r) = (false, false);
                        for (pi, &c) in prow.iter().enumerate() {
                            if c == 0 {
                                continue;
                            }
                            let p = &prev.paths[pi];
                            if p.target == a.source {
                                let mut k = p.arrows.clone();
                                k.push(ai);
                                left[index[&k]] = c;
                                any_l = true;
                            }
                            if p.source == a.target {
                                let mut k = vec![ai];
                                k.extend_from_slice(&p.arrows);
                                right[index[&k]] = c;
                                any_r = true;
                            }
                        }
                        if any_l {
                            rows.push(left);
                        }
                        if any_r {
                            rows.push(right);
                        }
                    }
                }
            }
            let spanning = if rows.is_empty() {
                FpMatrix::zeros(field, 0, n)
            } else {
                let flat: Vec<Vec<i64>> = rows
                    .iter()
                    .map(|r| r.iter().map(|&x| x as i64).collect())
                    .collect();
                FpMatrix::from_rows(field, &flat).expect("rectangular")
            };
            let rr = spanning.rref();
            let rank = rr.rank();
            let ideal = rr.reduced.submatrix(0..rank, 0..n);
            let mut pivot_row = vec![None; n];
            for (r, &c) in rr.pivots.iter().enumerate() {
                pivot_row[c] = Some(r);
            }
            let mut basis_index = vec![None; n];
            for i in 0..n {
                if pivot_row[i].is_none() {
                    basis_index[i] = Some(basis.len());
                    basis.push(current[i].clone());
                }
            }
            let survivors = n - rank;
            degrees.push(Degree {
                paths: current.clone(),
                index,
                ideal,
                pivots: rr.pivots,
                pivot_row,
                basis_index,
            });
            if survivors == 0 {
                break;
            }
            if len >= length_cap {
                return Err(AlgebraError::NotFiniteDimensional(len));
            }
            // extend every path of this degree by one arrow
            let mut next = Vec::new();
            for p in &current {
                for (ai, a) in quiver.arrows.iter().enumerate() {
                    if a.source == p.target {
                        let mut arrows = p.arrows.clone();
                        arrows.push(ai);
                        next.push(Path {
                            source: p.source,
                            target: a.target,
                            arrows,
                        });
                    }
                }
            }
            next.sort();
            current = next;
            len += 1;
        }

        let mut between = vec![vec![Vec::new(); nv]; nv];
        for (i, p) in basis.iter().enumerate() {
            between[p.source][p.target].push(i);
        }

        let mut hasher = DefaultHasher::new();
        field.hash(&mut hasher);
        quiver.hash(&mut hasher);
        for d in &degrees {
            d.paths.hash(&mut hasher);
            d.ideal.as_slice().hash(&mut hasher);
        }
        let fingerprint = hasher.finish();

        Ok(Arc::new(BoundQuiverAlgebra {
            name,
            field,
            quiver,
            relations,
            degrees,
            basis,
            between,
            fingerprint,
            opposite: OnceLock::new(),
            opposite_of,
        }))
    }

    fn path_key(p: &Path) -> Vec<usize> {
        if p.arrows.is_empty() {
            vec![usize::MAX, p.source]
        } else {
            p.arrows.clone()
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Same algebra under a different display name.
    pub fn renamed(&self, name: impl Into<String>) -> Arc<Self> {
        Arc::new(BoundQuiverAlgebra {
            name: name.into(),
            field: self.field,
            quiver: self.quiver.clone(),
            relations: self.relations.clone(),
            degrees: self.degrees.clone(),
            basis: self.basis.clone(),
            between: self.between.clone(),
            fingerprint: self.fingerprint,
            opposite: OnceLock::new(),
            opposite_of: Weak::new(),
        })
    }

    pub fn field(&self) -> FieldPrime {
        self.field
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> &[RelationSum] {
        &self.relations
    }

    pub fn vertex_count(&self) -> usize {
        self.quiver.vertex_count()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Path] {
        &self.basis
    }

    /// Basis indices of residue paths `source -> target`.
    pub fn paths_between(&self, source: usize, target: usize) -> &[usize] {
        &self.between[source][target]
    }

    /// Longest surviving path length.
    pub fn loewy_bound(&self) -> usize {
        self.basis.iter().map(Path::len).max().unwrap_or(0)
    }

    /// Hash of field, quiver and ideal; two algebras with equal fingerprints
    /// are treated as the same algebra.
    pub fn fingerprint(&self) -> u64 {
        self.fingerprint
    }

    pub fn same_as(&self, other: &BoundQuiverAlgebra) -> bool {
        std::ptr::eq(self, other) || self.fingerprint == other.fingerprint
    }

    /// Normal form of an arbitrary path in the residue basis.
    pub fn reduce_path(&self, p: &Path) -> Element {
        let Some(d) = self.degrees.get(p.len()) else {
            return Vec::new();
        };
        let Some(&i) = d.index.get(&Self::path_key(p)) else {
            return Vec::new();
        };
        if let Some(b) = d.basis_index[i] {
            return vec![(b, 1)];
        }
        let r = d.pivot_row[i].expect("pivot path");
        let f = self.field;
        (0..d.paths.len())
            .filter_map(|j| {
                let c = d.ideal.get(r, j);
                if j == i || c == 0 {
                    return None;
                }
                debug_assert!(!d.pivots.contains(&j));
                Some((d.basis_index[j].expect("non-pivot"), f.neg(c)))
            })
            .collect()
    }

    /// Product `x · y` of two basis elements (`y` first, then `x`).
    pub fn mul_basis(&self, x: usize, y: usize) -> Element {
        match self.basis[x].compose(&self.basis[y]) {
            Some(p) => self.reduce_path(&p),
            None => Vec::new(),
        }
    }

    /// Product of sparse elements.
    pub fn mul(&self, x: &Element, y: &Element) -> Element {
        let f = self.field;
        let mut acc: Vec<u64> = vec![0; self.dim()];
        for &(i, a) in x {
            for &(j, b) in y {
                for (k, c) in self.mul_basis(i, j) {
                    acc[k] = f.add(acc[k], f.mul(f.mul(a, b), c));
                }
            }
        }
        acc.into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    /// Structure constants: `table[x][y]` is the normal form of `x · y`.
    pub fn mult_table(&self) -> Vec<Vec<Element>> {
        (0..self.dim())
            .map(|x| (0..self.dim()).map(|y| self.mul_basis(x, y)).collect())
            .collect()
    }

    pub fn basis_index_of_path(&self, p: &Path) -> Option<usize> {
        let d = self.degrees.get(p.len())?;
        let &i = d.index.get(&Self::path_key(p))?;
        d.basis_index[i]
    }

    pub fn trivial_path(&self, v: usize) -> usize {
        self.basis_index_of_path(&Path::trivial(v))
            .expect("trivial paths are basis elements")
    }

    /// The opposite algebra: arrows reversed, relation paths reversed. The
    /// result is cached, and the opposite of the opposite is `self`.
    pub fn opposite(self: &Arc<Self>) -> Arc<Self> {
        if let Some(orig) = self.opposite_of.upgrade() {
            return orig;
        }
        self.opposite
            .get_or_init(|| {
                let rels = self.relations.iter().map(RelationSum::reversed).collect();
                let name = match self.name.strip_suffix("^op") {
                    Some(base) => base.to_string(),
                    None => format!("{}^op", self.name),
                };
                Self::build_inner(
                    name,
                    self.field,
                    self.quiver.opposite(),
                    rels,
                    self.loewy_bound() + 2,
                    Arc::downgrade(self),
                )
                .expect("opposite of a finite-dimensional algebra")
            })
            .clone()
    }

    /// Full subquiver on `vertices` with the induced ideal `I ∩ kQ_V`.
    /// Only meaningful when no path between two chosen vertices leaves the
    /// chosen set, which callers check.
    pub fn restrict(
        &self,
        name: impl Into<String>,
        vertices: &[usize],
    ) -> Result<Arc<Self>, AlgebraError> {
        let local = |v: usize| vertices.iter().position(|&w| w == v);
        let vnames = vertices
            .iter()
            .map(|&v| self.quiver.vertices[v].clone())
            .collect();
        let mut arrow_map = HashMap::new();
        let mut arrows = Vec::new();
        for (ai, a) in self.quiver.arrows.iter().enumerate() {
            if let (Some(s), Some(t)) = (local(a.source), local(a.target)) {
                arrow_map.insert(ai, arrows.len());
                arrows.push(Arrow {
                    name: a.name.clone(),
                    source: s,
                    target: t,
                });
            }
        }
        let quiver = Quiver::new(vnames, arrows)?;
        let f = self.field;
        // minimal generators: ideal rows inside the subquiver not already
        // produced by lower-degree rows times arrows
        let mut relations = Vec::new();
        let mut generated: Option<FpMatrix> = None;
        for (len, d) in self.degrees.iter().enumerate() {
            let inside: Vec<usize> = (0..d.paths.len())
                .filter(|&i| d.paths[i].arrows.iter().all(|a| arrow_map.contains_key(a)))
                .filter(|&i| local(d.paths[i].source).is_some())
                .collect();
            let rows: Vec<usize> = (0..d.ideal.rows())
                .filter(|&r| {
                    (0..d.paths.len()).all(|j| d.ideal.get(r, j) == 0 || inside.contains(&j))
                })
                .collect();
            let produced = generated.take();
            let mut span = produced
                .clone()
                .unwrap_or_else(|| FpMatrix::zeros(f, 0, d.paths.len()));
            for &r in &rows {
                let row = d.ideal.select_rows(&[r]);
                if span.rows() > 0 && span.transpose().spans(&row.transpose()) {
                    continue;
                }
                span = span.vstack(&row);
                let terms = (0..d.paths.len())
                    .filter(|&j| d.ideal.get(r, j) != 0)
                    .map(|j| {
                        let p = &d.paths[j];
                        let arrows: Vec<usize> = p.arrows.iter().map(|a| arrow_map[a]).collect();
                        let lp = Path {
                            source: local(p.source).unwrap(),
                            target: local(p.target).unwrap(),
                            arrows,
                        };
                        (d.ideal.get(r, j), lp)
                    })
                    .collect();
                relations.push(RelationSum::new(&quiver, terms)?);
            }
            // products of this degree's ideal rows (inside the subquiver) with arrows
            if let Some(next) = self.degrees.get(len + 1) {
                let mut prod_rows: Vec<Vec<u64>> = Vec::new();
                for &r in &rows {
                    for (ai, a) in self.quiver.arrows.iter().enumerate() {
                        if !arrow_map.contains_key(&ai) {
                            continue;
                        }
                        let mut left = vec![0; next.paths.len()];
                        let mut right = vec![0; next.paths.len()];
                        let (mut any_l, mut any_r) = (false, false);
                        for j in 0..d.paths.len() {
                            let c = d.ideal.get(r, j);
                            if c == 0 {
                                continue;
                            }
                            let p = &d.paths[j];
                            if p.target == a.source {
                                let mut k = p.arrows.clone();
                                k.push(ai);
                                left[next.index[&k]] = c;
                                any_l = true;
                            }
                            if p.source == a.target {
                                let mut k = vec![ai];
                                k.extend_from_slice(&p.arrows);
                                right[next.index[&k]] = c;
                                any_r = true;
                            }
                        }
                        if any_l {
                            prod_rows.push(left);
                        }
                        if any_r {
                            prod_rows.push(right);
                        }
                    }
                }
                let mut m = FpMatrix::zeros(f, prod_rows.len(), next.paths.len());
                for (i, row) in prod_rows.iter().enumerate() {
                    for (j, &c) in row.iter().enumerate() {
                        m.set(i, j, c);
                    }
                }
                generated = Some(m);
            }
        }
        Self::build(name, f, quiver, relations, self.loewy_bound() + 2)
    }
}

impl fmt::Display for BoundQuiverAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} over {}: {} vertices, {} arrows, {} relations, dim {}",
            self.name,
            self.field,
            self.vertex_count(),
            self.quiver.arrows.len(),
            self.relations.len(),
            self.dim()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f() -> FieldPrime {
        FieldPrime::new(101).unwrap()
    }

    fn rel(q: &Quiver, terms: &[(i64, &str)]) -> RelationSum {
        let terms = terms
            .iter()
            .map(|&(c, w)| {
                let arrows = q.parse_path_word(w).unwrap();
                (f().reduce(c), Path::from_arrows(q, arrows).unwrap())
            })
            .collect();
        RelationSum::new(q, terms).unwrap()
    }

    #[test]
    fn a2_has_dimension_three() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let a = BoundQuiverAlgebra::build("A2", f(), q, vec![], DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(a.dim(), 3);
        let words: Vec<String> = a.basis().iter().map(|p| p.word(a.quiver())).collect();
        assert_eq!(words, vec!["e_1", "e_2", "a"]);
    }

    #[test]
    fn relation_truncates_path() {
        let q = Quiver::from_names(&["3", "4", "5"], &[("α", "3", "4"), ("β", "4", "5")]).unwrap();
        let r = rel(&q, &[(1, "βα")]);
        let a = BoundQuiverAlgebra::build("L2", f(), q, vec![r], DEFAULT_LENGTH_CAP).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.loewy_bound(), 1);
    }

    #[test]
    fn commutativity_relation_identifies_paths() {
        let q = Quiver::from_names(
            &["1", "2", "3", "4", "5"],
            &[
                ("α", "3", "4"),
                ("β", "4", "5"),
                ("γ", "4", "2"),
                ("δ", "1", "2"),
                ("ε", "3", "1"),
            ],
        )
        .unwrap();
        let rels = vec![rel(&q, &[(1, "γα"), (-1, "δε")]), rel(&q, &[(1, "βα")])];
        let a = BoundQuiverAlgebra::build("L", f(), q, rels, DEFAULT_LENGTH_CAP).unwrap();
        // 5 trivial + 5 arrows + one class 3 -> 2
        assert_eq!(a.dim(), 11);
        assert_eq!(a.paths_between(2, 1).len(), 1);
        assert!(a.paths_between(2, 4).is_empty());
    }

    #[test]
    fn oriented_cycle_without_relations_is_infinite() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2"), ("b", "2", "1")]).unwrap();
        let err = BoundQuiverAlgebra::build("C", f(), q, vec![], 6).unwrap_err();
        assert_eq!(err, AlgebraError::NotFiniteDimensional(6));
    }

    #[test]
    fn short_relation_rejected() {
        let q = Quiver::from_names(&["1", "2"], &[("a", "1", "2")]).unwrap();
        let p = Path::from_arrows(&q, vec![0]).unwrap();
        assert!(matches!(
            RelationSum::new(&q, vec![(1, p)]),
            Err(AlgebraError::MalformedRelation(_))
        ));
    }

    #[test]
    fn non_composable_word_rejected() {
        let q = Quiver::from_names(&["3", "4", "5"], &[("α", "3", "4"), ("β", "4", "5")]).unwrap();
        let arrows = q.parse_path_word("αβ").unwrap();
        assert!(Path::from_arrows(&q, arrows).is_err());
    }

    #[test]
    fn opposite_reverses_and_round_trips() {
        let q = Quiver::from_names(&["3", "4", "5"], &[("α", "3", "4"), ("β", "4", "5")]).unwrap();
        let r = rel(&q, &[(1, "βα")]);
        let a = BoundQuiverAlgebra::build("L2", f(), q, vec![r], DEFAULT_LENGTH_CAP).unwrap();
        let op = a.opposite();
        assert_eq!(op.quiver().arrows()[0].source, 1);
        assert_eq!(op.quiver().arrows()[0].target, 0);
        assert_eq!(op.relations()[0].terms[0].1.word(op.quiver()), "αβ");
        assert_eq!(op.dim(), a.dim());
        assert!(Arc::ptr_eq(&op.opposite(), &a));
    }
}
