//! The graph `Γ_V` on the top-dimensional irreducible components of a
//! projective variety: two components are adjacent when they meet in
//! codimension one. Its number of connected components is `λ_{r+1,r+1}`.

use serde::{Deserialize, Serialize};

use crate::dsl::{dimension, VarietyExpr};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Component {
    pub name: String,
    pub dim: u32,
}

/// `dim(V_a ∩ V_b)`, with `-1` for an empty intersection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Intersection {
    pub a: usize,
    pub b: usize,
    pub dim: i64,
}

/// Irreducible components and the dimensions of their pairwise
/// intersections. Pairs without a record do not meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentGraph {
    components: Vec<Component>,
    intersections: Vec<Intersection>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    components: Vec<Component>,
    #[serde(default)]
    intersections: Vec<NamedIntersection>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct NamedIntersection {
    a: String,
    b: String,
    dim: i64,
}

impl ComponentGraph {
    pub fn new(
        components: Vec<Component>,
        intersections: Vec<(usize, usize, i64)>,
    ) -> Result<Self> {
        let n = components.len();
        let mut seen = std::collections::HashSet::new();
        let mut records = Vec::with_capacity(intersections.len());
        for (a, b, dim) in intersections {
            if a >= n || b >= n {
                return Err(Error::Graph(format!(
                    "intersection ({a}, {b}) refers to a missing component"
                )));
            }
            if a == b {
                return Err(Error::Graph(format!(
                    "component `{}` intersected with itself",
                    components[a].name
                )));
            }
            let bound = components[a].dim.min(components[b].dim);
            if dim < -1 || dim > i64::from(bound) {
                return Err(Error::Graph(format!(
                    "intersection of `{}` and `{}` has dimension {dim}, outside -1..={bound}",
                    components[a].name, components[b].name
                )));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::Graph(format!(
                    "intersection of `{}` and `{}` recorded twice",
                    components[a].name, components[b].name
                )));
            }
            records.push(Intersection { a, b, dim });
        }
        Ok(ComponentGraph {
            components,
            intersections: records,
        })
    }

    /// Reads `{"components": [{"name", "dim"}], "intersections": [{"a", "b", "dim"}]}`,
    /// where `a` and `b` are component names.
    pub fn from_json(text: &str) -> Result<Self> {
        let file: GraphFile =
            serde_json::from_str(text).map_err(|e| Error::Graph(format!("malformed JSON: {e}")))?;
        let mut index = std::collections::HashMap::new();
        for (i, c) in file.components.iter().enumerate() {
            if index.insert(c.name.as_str(), i).is_some() {
                return Err(Error::Graph(format!(
                    "duplicate component name `{}`",
                    c.name
                )));
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| Error::Graph(format!("unknown component `{name}`")))
        };
        let intersections = file
            .intersections
            .iter()
            .map(|x| Ok((lookup(&x.a)?, lookup(&x.b)?, x.dim)))
            .collect::<Result<Vec<_>>>()?;
        Self::new(file.components, intersections)
    }

    /// One component per connected piece of a valid expression. Every
    /// constructor is connected and nonsingular, hence irreducible, and
    /// distinct pieces do not meet.
    pub fn from_variety(expr: &VarietyExpr) -> Self {
        let components = expr
            .connected_pieces()
            .iter()
            .map(|e| Component {
                name: e.to_string(),
                dim: dimension(e) as u32,
            })
            .collect();
        ComponentGraph {
            components,
            intersections: Vec::new(),
        }
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn intersections(&self) -> &[Intersection] {
        &self.intersections
    }
}

/// `Γ_V`: vertices are the components of maximal dimension `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GammaGraph {
    pub top_dim: u32,
    /// Indices into [`ComponentGraph::components`].
    pub vertices: Vec<usize>,
    /// Pairs of positions in `vertices`.
    pub edges: Vec<(usize, usize)>,
}

pub fn gamma_graph(g: &ComponentGraph) -> Result<GammaGraph> {
    let top_dim = g
        .components
        .iter()
        .map(|c| c.dim)
        .max()
        .ok_or_else(|| Error::Graph("no components".into()))?;
    let mut position = vec![None; g.components.len()];
    let mut vertices = Vec::new();
    for (i, c) in g.components.iter().enumerate() {
        if c.dim == top_dim {
            position[i] = Some(vertices.len());
            vertices.push(i);
        }
    }
    // Empty intersections (-1) never give an edge, even when r = 0.
    let wanted = i64::from(top_dim) - 1;
    let edges = g
        .intersections
        .iter()
        .filter(|x| x.dim >= 0 && x.dim == wanted)
        .filter_map(|x| Some((position[x.a]?, position[x.b]?)))
        .collect();
    Ok(GammaGraph {
        top_dim,
        vertices,
        edges,
    })
}

struct UnionFind {
    parent: Vec<usize>,
    rank: Vec<u8>,
    sets: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            rank: vec![0; n],
            sets: n,
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return;
        }
        match self.rank[a].cmp(&self.rank[b]) {
            std::cmp::Ordering::Less => self.parent[a] = b,
            std::cmp::Ordering::Greater => self.parent[b] = a,
            std::cmp::Ordering::Equal => {
                self.parent[b] = a;
                self.rank[a] += 1;
            }
        }
        self.sets -= 1;
    }
}

pub fn count_components(g: &GammaGraph) -> usize {
    let mut uf = UnionFind::new(g.vertices.len());
    for &(a, b) in &g.edges {
        uf.union(a, b);
    }
    uf.sets
}
