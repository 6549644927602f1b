//! A finite list of pairwise non-isomorphic indecomposables, against which
//! subcategories are computed.

use std::fmt;
use std::sync::Arc;

use super::decompose::{decompose, is_indecomposable};
use super::hom::indecomposable_iso;
use super::{injective, projective, QModule};
use crate::algebra::BoundQuiverAlgebra;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniverseIssue {
    Decomposable(String),
    Isomorphic(String, String),
    /// An indecomposable projective or injective has no match.
    MissingStandard(String),
}

impl fmt::Display for UniverseIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniverseIssue::Decomposable(n) => write!(f, "member {n} is decomposable"),
            UniverseIssue::Isomorphic(a, b) => write!(f, "members {a} and {b} are isomorphic"),
            UniverseIssue::MissingStandard(n) => write!(f, "no member is isomorphic to {n}"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Universe {
    algebra: Arc<BoundQuiverAlgebra>,
    names: Vec<String>,
    members: Vec<QModule>,
}

impl Universe {
    pub fn new(algebra: Arc<BoundQuiverAlgebra>, members: Vec<(String, QModule)>) -> Result<Self> {
        let mut names = Vec::new();
        let mut mods = Vec::new();
        for (n, m) in members {
            if !m.algebra().same_as(&algebra) {
                return Err(Error::AlgebraMismatch(
                    algebra.name().to_string(),
                    m.algebra().name().to_string(),
                ));
            }
            names.push(n);
            mods.push(m.rebase(&algebra)?);
        }
        Ok(Universe {
            algebra,
            names,
            members: mods,
        })
    }

    pub fn algebra(&self) -> &Arc<BoundQuiverAlgebra> {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn member(&self, i: usize) -> &QModule {
        &self.members[i]
    }

    pub fn members(&self) -> &[QModule] {
        &self.members
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Index of the member isomorphic to the indecomposable `x`.
    pub fn identify(&self, x: &QModule) -> Result<Option<usize>> {
        let x = x.rebase(&self.algebra)?;
        for (i, m) in self.members.iter().enumerate() {
            if indecomposable_iso(m, &x)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    }

    /// Multiplicity of each member in `x`, in universe order. Fails when a
    /// summand of `x` is not in the universe.
    pub fn multiplicities(&self, x: &QModule) -> Result<Vec<usize>> {
        let x = x.rebase(&self.algebra)?;
        let mut mult = vec![0; self.len()];
        for s in decompose(&x)? {
            match self.identify(&s.module)? {
                Some(i) => mult[i] += 1,
                None => {
                    return Err(Error::UniverseInconsistent(format!(
                        "summand with dimension vector {} is not a member",
                        s.module.dim_vector_string()
                    )))
                }
            }
        }
        Ok(mult)
    }

    /// Indices of the members occurring as summands of `x`.
    pub fn support(&self, x: &QModule) -> Result<Vec<usize>> {
        Ok(self
            .multiplicities(x)?
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, _)| i)
            .collect())
    }

    /// Display of a multiset, e.g. `{(P(1)|0), 2×(S(1)|0)}`.
    pub fn describe(&self, mult: &[usize]) -> String {
        let parts: Vec<String> = mult
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(i, &c)| {
                if c == 1 {
                    self.names[i].clone()
                } else {
                    format!("{c}×{}", self.names[i])
                }
            })
            .collect();
        format!("{{{}}}", parts.join(", "))
    }

    pub fn projective_indices(&self) -> Result<Vec<usize>> {
        (0..self.algebra.vertex_count())
            .map(|v| {
                self.identify(&projective(&self.algebra, v)?)?
                    .ok_or_else(|| {
                        Error::UniverseInconsistent(format!(
                            "P({}) missing",
                            self.algebra.quiver().vertices()[v]
                        ))
                    })
            })
            .collect()
    }

    pub fn injective_indices(&self) -> Result<Vec<usize>> {
        (0..self.algebra.vertex_count())
            .map(|v| {
                self.identify(&injective(&self.algebra, v)?)?
                    .ok_or_else(|| {
                        Error::UniverseInconsistent(format!(
                            "I({}) missing",
                            self.algebra.quiver().vertices()[v]
                        ))
                    })
            })
            .collect()
    }

    /// Every member indecomposable, members pairwise non-isomorphic, and all
    /// indecomposable projectives and injectives present.
    pub fn verify(&self) -> Result<Vec<UniverseIssue>> {
        let mut issues = Vec::new();
        for (i, m) in self.members.iter().enumerate() {
            if !is_indecomposable(m)? {
                issues.push(UniverseIssue::Decomposable(self.names[i].clone()));
            }
        }
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                if indecomposable_iso(&self.members[i], &self.members[j])?.is_some() {
                    issues.push(UniverseIssue::Isomorphic(
                        self.names[i].clone(),
                        self.names[j].clone(),
                    ));
                }
            }
        }
        let vs = self.algebra.quiver().vertices();
        for (v, name) in vs.iter().enumerate() {
            if self.identify(&projective(&self.algebra, v)?)?.is_none() {
                issues.push(UniverseIssue::MissingStandard(format!("P({name})")));
            }
            if self.identify(&injective(&self.algebra, v)?)?.is_none() {
                issues.push(UniverseIssue::MissingStandard(format!("I({name})")));
            }
        }
        Ok(issues)
    }

    /// The member-wise dual universe over the opposite algebra.
    pub fn dualize(&self) -> Universe {
        Universe {
            algebra: self.algebra.opposite(),
            names: self.names.iter().map(|n| format!("D{n}")).collect(),
            members: self.members.iter().map(QModule::dualize).collect(),
        }
    }
}
