//! Finite acyclic quivers.
//!
//! Acyclicity is enforced at construction so the path algebra is
//! finite-dimensional, every simple representation is one-dimensional, and
//! composition length equals total dimension.

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    /// Vertex indices in a fixed topological order (sources first).
    topo: Vec<usize>,
}

/// A path is a composable arrow sequence; the empty sequence is the trivial
/// path at `start`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Path {
    pub start: usize,
    pub end: usize,
    pub arrows: Vec<usize>,
}

impl Quiver {
    pub fn new<S: Into<String>>(vertices: Vec<S>, arrows: Vec<(S, S, S)>) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        if vertices.is_empty() {
            return Err(Error::Precondition(
                "quiver needs at least one vertex".into(),
            ));
        }
        let mut seen = std::collections::HashSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(Error::Precondition(format!("duplicate vertex label {v}")));
            }
        }
        let index = |label: &str| -> Result<usize> {
            vertices
                .iter()
                .position(|v| v == label)
                .ok_or_else(|| Error::Precondition(format!("unknown vertex {label}")))
        };
        let mut named = std::collections::HashSet::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (name, from, to) in arrows {
            let name: String = name.into();
            if !named.insert(name.clone()) {
                return Err(Error::Precondition(format!("duplicate arrow name {name}")));
            }
            built.push(Arrow {
                name,
                source: index(&from.into())?,
                target: index(&to.into())?,
            });
        }
        let topo = topological_order(vertices.len(), &built)?;
        Ok(Quiver {
            vertices,
            arrows: built,
            topo,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_label(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_labels(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_index(&self, name: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.name == name)
    }

    pub fn arrows_from(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.source == v)
    }

    pub fn arrows_into(&self, v: usize) -> impl Iterator<Item = (usize, &Arrow)> {
        self.arrows
            .iter()
            .enumerate()
            .filter(move |(_, a)| a.target == v)
    }

    pub fn topo_order(&self) -> &[usize] {
        &self.topo
    }

    /// Vertices with no incoming arrows.
    pub fn sources(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.arrows_into(v).next().is_none())
            .collect()
    }

    /// Vertices with no outgoing arrows.
    pub fn sinks(&self) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.arrows_from(v).next().is_none())
            .collect()
    }

    /// All paths starting at `v`, trivial path included, in a fixed order.
    pub fn paths_from(&self, v: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }];
        while let Some(path) = stack.pop() {
            out.push(path.clone());
            // extend by arrows leaving the current end, reversed so the
            // lowest arrow index is explored (and emitted) first
            let mut extensions: Vec<Path> = self
                .arrows_from(path.end)
                .map(|(i, a)| {
                    let mut arrows = path.arrows.clone();
                    arrows.push(i);
                    Path {
                        start: v,
                        end: a.target,
                        arrows,
                    }
                })
                .collect();
            extensions.reverse();
            stack.extend(extensions);
        }
        out
    }

    /// All paths ending at `v`, trivial path included.
    pub fn paths_into(&self, v: usize) -> Vec<Path> {
        let mut out = Vec::new();
        let mut stack = vec![Path {
            start: v,
            end: v,
            arrows: Vec::new(),
        }];
        while let Some(path) = stack.pop() {
            out.push(path.clone());
            let mut extensions: Vec<Path> = self
                .arrows_into(path.start)
                .map(|(i, a)| {
                    let mut arrows = vec![i];
                    arrows.extend(path.arrows.iter().copied());
                    Path {
                        start: a.source,
                        end: v,
                        arrows,
                    }
                })
                .collect();
            extensions.reverse();
            stack.extend(extensions);
        }
        out
    }
}

fn topological_order(n: usize, arrows: &[Arrow]) -> Result<Vec<usize>> {
    let mut indegree = vec![0usize; n];
    for a in arrows {
        indegree[a.target] += 1;
    }
    let mut queue: Vec<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
    queue.sort();
    let mut order = Vec::with_capacity(n);
    let mut i = 0;
    while i < queue.len() {
        let v = queue[i];
        i += 1;
        order.push(v);
        let mut released: Vec<usize> = Vec::new();
        for a in arrows.iter().filter(|a| a.source == v) {
            indegree[a.target] -= 1;
            if indegree[a.target] == 0 {
                released.push(a.target);
            }
        }
        released.sort();
        released.dedup();
        queue.extend(released);
    }
    if order.len() != n {
        return Err(Error::CyclicQuiver);
    }
    Ok(order)
}
