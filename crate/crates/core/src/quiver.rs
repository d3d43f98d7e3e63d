//! Quivers, paths and relations.
//!
//! Paths are stored in traversal order: the path written `b.a` (first `a`,
//! then `b`) is the arrow sequence `[a, b]`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// `arrows` are `(name, source vertex name, target vertex name)`.
    pub fn new<V, A>(vertices: V, arrows: A) -> Result<Quiver>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        A: IntoIterator<Item = (String, String, String)>,
    {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::input(format!("duplicate vertex `{v}`")));
            }
        }
        let mut q = Quiver {
            vertices,
            arrows: Vec::new(),
        };
        let mut names = BTreeSet::new();
        for (name, s, t) in arrows {
            if !names.insert(name.clone()) {
                return Err(Error::input(format!("duplicate arrow `{name}`")));
            }
            let source = q.vertex_index(&s)?;
            let target = q.vertex_index(&t)?;
            q.arrows.push(Arrow {
                name,
                source,
                target,
            });
        }
        Ok(q)
    }

    /// Convenience constructor for string literals.
    pub fn from_names(vertices: &[&str], arrows: &[(&str, &str, &str)]) -> Result<Quiver> {
        Quiver::new(
            vertices.iter().map(|v| v.to_string()),
            arrows
                .iter()
                .map(|(a, s, t)| (a.to_string(), s.to_string(), t.to_string())),
        )
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, i: usize) -> &Arrow {
        &self.arrows[i]
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_index(&self, name: &str) -> Result<usize> {
        self.vertices
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::input(format!("unknown vertex `{name}`")))
    }

    pub fn arrow_index(&self, name: &str) -> Result<usize> {
        self.arrows
            .iter()
            .position(|a| a.name == name)
            .ok_or_else(|| Error::input(format!("unknown arrow `{name}`")))
    }

    /// Same vertices, every arrow reversed (arrow names kept).
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

    /// Checks that the arrow sequence is composable and returns its endpoints.
    pub fn path(&self, source: usize, arrows: Vec<usize>) -> Result<Path> {
        let mut at = source;
        for &a in &arrows {
            let arrow = self
                .arrows
                .get(a)
                .ok_or_else(|| Error::input(format!("arrow index {a} out of range")))?;
            if arrow.source != at {
                return Err(Error::input(format!(
                    "arrow `{}` does not start where the path is",
                    arrow.name
                )));
            }
            at = arrow.target;
        }
        Ok(Path {
            source,
            target: at,
            arrows,
        })
    }

    /// Parses `b.a` (first `a`, then `b`).
    pub fn parse_path(&self, token: &str) -> Result<Path> {
        let mut arrows = Vec::new();
        for name in token.split('.').rev() {
            arrows.push(self.arrow_index(name)?);
        }
        let first = *arrows
            .first()
            .ok_or_else(|| Error::input(format!("empty path `{token}`")))?;
        self.path(self.arrows[first].source, arrows)
    }

    /// Renders a path as `b.a`, or `e<v>` for a trivial path.
    pub fn path_name(&self, path: &Path) -> String {
        if path.arrows.is_empty() {
            return format!("e{}", self.vertices[path.source]);
        }
        let names: Vec<&str> = path
            .arrows
            .iter()
            .rev()
            .map(|&a| self.arrows[a].name.as_str())
            .collect();
        names.join(".")
    }
}

/// A path of the quiver; `arrows` in traversal order, empty for the
/// trivial path at `source`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    pub source: usize,
    pub target: usize,
    pub arrows: Vec<usize>,
}

impl Path {
    pub fn trivial(v: usize) -> Path {
        Path {
            source: v,
            target: v,
            arrows: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` after `first`: traverse `first`, then `self`.
    pub fn after(&self, first: &Path) -> Option<Path> {
        if first.target != self.source {
            return None;
        }
        let mut arrows = first.arrows.clone();
        arrows.extend_from_slice(&self.arrows);
        Some(Path {
            source: first.source,
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

/// A linear combination of parallel paths of length at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    terms: Vec<(Scalar, Path)>,
}

impl Relation {
    pub fn new(field: Field, terms: Vec<(Scalar, Path)>) -> Result<Relation> {
        let (_, first) = terms
            .first()
            .ok_or_else(|| Error::input("relation without terms"))?;
        let (s, t) = (first.source, first.target);
        for (c, p) in &terms {
            if c.field() != field {
                return Err(Error::FieldMismatch(field, c.field()));
            }
            if p.len() < 2 {
                return Err(Error::input("relation paths must have length at least 2"));
            }
            if p.source != s || p.target != t {
                return Err(Error::input("relation paths must be parallel"));
            }
        }
        Ok(Relation { terms })
    }

    pub fn terms(&self) -> &[(Scalar, Path)] {
        &self.terms
    }

    pub fn source(&self) -> usize {
        self.terms[0].1.source
    }

    pub fn target(&self) -> usize {
        self.terms[0].1.target
    }

    pub fn reversed(&self) -> Relation {
        Relation {
            terms: self
                .terms
                .iter()
                .map(|(c, p)| (c.clone(), p.reversed()))
                .collect(),
        }
    }
}
