use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Edge {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

/// Vertices, edges with endpoints, an identity loop per vertex, a set of
/// valid triangles and a set of marked (ε-)edges.
///
/// A triangle `[d0, d1, d2]` has `d2: u → v`, `d0: v → w` and `d1: u → w`.
#[derive(Clone, Debug)]
pub struct Complex {
    name: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    identity: Vec<usize>,
    is_identity: Vec<bool>,
    triangles: Vec<[usize; 3]>,
    triangle_index: HashMap<[usize; 3], usize>,
    /// Bitset over edge triples for small complexes.
    dense: Vec<u64>,
    marked: Vec<bool>,
    between: HashMap<(usize, usize), Vec<usize>>,
    outgoing: Vec<Vec<usize>>,
    incoming: Vec<Vec<usize>>,
}

const DENSE_LIMIT: usize = 64;

fn dense_index(n: usize, triangles: &[[usize; 3]]) -> Vec<u64> {
    if n > DENSE_LIMIT {
        return Vec::new();
    }
    let mut bits = vec![0u64; (n * n * n).div_ceil(64)];
    for &[d0, d1, d2] in triangles {
        let i = (d0 * n + d1) * n + d2;
        bits[i / 64] |= 1 << (i % 64);
    }
    bits
}

impl PartialEq for Complex {
    fn eq(&self, other: &Self) -> bool {
        self.vertices == other.vertices
            && self.edges == other.edges
            && self.identity == other.identity
            && self.triangles == other.triangles
            && self.marked == other.marked
    }
}

impl Complex {
    /// Check the invariants and index the complex. Triangles are sorted;
    /// duplicates are dropped.
    pub fn new(
        name: impl Into<String>,
        vertices: Vec<String>,
        edges: Vec<Edge>,
        identity: Vec<usize>,
        mut triangles: Vec<[usize; 3]>,
        marked: Vec<bool>,
    ) -> Result<Self> {
        let nv = vertices.len();
        let ne = edges.len();
        if identity.len() != nv {
            return Err(Error::input("identities", "every vertex needs exactly one identity edge"));
        }
        if marked.len() != ne {
            return Err(Error::input("marked", "marking has the wrong length"));
        }
        for (i, e) in edges.iter().enumerate() {
            if e.source >= nv || e.target >= nv {
                return Err(Error::input(format!("edges[{i}]"), "endpoint is not a vertex"));
            }
        }
        let mut is_identity = vec![false; ne];
        for (v, &e) in identity.iter().enumerate() {
            if e >= ne || edges[e].source != v || edges[e].target != v {
                return Err(Error::input(format!("identities[{v}]"), "identity edge must be a loop at its vertex"));
            }
            if is_identity[e] {
                return Err(Error::input(format!("identities[{v}]"), "edge is the identity of two vertices"));
            }
            is_identity[e] = true;
        }
        triangles.sort_unstable();
        triangles.dedup();
        for (i, &[d0, d1, d2]) in triangles.iter().enumerate() {
            if d0 >= ne || d1 >= ne || d2 >= ne {
                return Err(Error::input(format!("triangles[{i}]"), "face is not an edge"));
            }
            let (a, b, c) = (&edges[d0], &edges[d1], &edges[d2]);
            if c.target != a.source || b.source != c.source || b.target != a.target {
                return Err(Error::input(
                    format!("triangles[{i}]"),
                    format!("faces ({}, {}, {}) have incompatible endpoints", a.name, b.name, c.name),
                ));
            }
        }
        let triangle_index: HashMap<[usize; 3], usize> = triangles.iter().enumerate().map(|(i, &t)| (t, i)).collect();
        for (i, e) in edges.iter().enumerate() {
            for t in [[i, i, identity[e.source]], [identity[e.target], i, i]] {
                if !triangle_index.contains_key(&t) {
                    return Err(Error::input(
                        format!("triangles"),
                        format!("degenerate triangle on edge `{}` is missing", e.name),
                    ));
                }
            }
        }
        let mut between: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        let mut outgoing = vec![Vec::new(); nv];
        let mut incoming = vec![Vec::new(); nv];
        for (i, e) in edges.iter().enumerate() {
            between.entry((e.source, e.target)).or_default().push(i);
            outgoing[e.source].push(i);
            incoming[e.target].push(i);
        }
        let dense = dense_index(ne, &triangles);
        Ok(Complex {
            name: name.into(),
            vertices,
            edges,
            identity,
            is_identity,
            triangles,
            dense,
            triangle_index,
            marked,
            between,
            outgoing,
            incoming,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    pub fn marked_count(&self) -> usize {
        self.marked.iter().filter(|&&m| m).count()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> &Edge {
        &self.edges[e]
    }

    pub fn source(&self, e: usize) -> usize {
        self.edges[e].source
    }

    pub fn target(&self, e: usize) -> usize {
        self.edges[e].target
    }

    pub fn identity(&self, v: usize) -> usize {
        self.identity[v]
    }

    pub fn identities(&self) -> &[usize] {
        &self.identity
    }

    pub fn is_identity(&self, e: usize) -> bool {
        self.is_identity[e]
    }

    pub fn triangles(&self) -> &[[usize; 3]] {
        &self.triangles
    }

    pub fn has_triangle(&self, d0: usize, d1: usize, d2: usize) -> bool {
        if self.dense.is_empty() {
            self.triangle_index.contains_key(&[d0, d1, d2])
        } else {
            let n = self.edges.len();
            let i = (d0 * n + d1) * n + d2;
            self.dense[i / 64] >> (i % 64) & 1 == 1
        }
    }

    pub fn triangle_position(&self, t: [usize; 3]) -> Option<usize> {
        self.triangle_index.get(&t).copied()
    }

    pub fn is_marked(&self, e: usize) -> bool {
        self.marked[e]
    }

    pub fn marked(&self) -> &[bool] {
        &self.marked
    }

    /// Edges u → v in declaration order.
    pub fn edges_between(&self, u: usize, v: usize) -> &[usize] {
        self.between.get(&(u, v)).map_or(&[], Vec::as_slice)
    }

    pub fn outgoing(&self, u: usize) -> &[usize] {
        &self.outgoing[u]
    }

    pub fn incoming(&self, v: usize) -> &[usize] {
        &self.incoming[v]
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn edge_index(&self, name: &str) -> Option<usize> {
        self.edges.iter().position(|e| e.name == name)
    }

    /// A triangle is degenerate when it is one of the two degeneracies of
    /// an edge.
    pub fn is_degenerate(&self, [d0, d1, d2]: [usize; 3]) -> bool {
        (self.is_identity[d2] && d0 == d1) || (self.is_identity[d0] && d1 == d2)
    }

    /// Categorical product: pairs of vertices, edges and triangles; an edge
    /// pair is marked iff both coordinates are marked.
    pub fn product(a: &Complex, b: &Complex) -> Complex {
        let (vb, eb) = (b.vertex_count(), b.edge_count());
        let vertices = a
            .vertices
            .iter()
            .flat_map(|x| b.vertices.iter().map(move |y| format!("({x},{y})")))
            .collect();
        let edges = a
            .edges
            .iter()
            .flat_map(|e| {
                b.edges.iter().map(move |f| Edge {
                    name: format!("({},{})", e.name, f.name),
                    source: e.source * vb + f.source,
                    target: e.target * vb + f.target,
                })
            })
            .collect();
        let identity = (0..a.vertex_count() * vb).map(|v| a.identity[v / vb] * eb + b.identity[v % vb]).collect();
        let mut triangles = Vec::with_capacity(a.triangle_count() * b.triangle_count());
        for s in &a.triangles {
            for t in &b.triangles {
                triangles.push([s[0] * eb + t[0], s[1] * eb + t[1], s[2] * eb + t[2]]);
            }
        }
        let marked = (0..a.edge_count() * eb).map(|e| a.marked[e / eb] && b.marked[e % eb]).collect();
        Complex::new(format!("{} × {}", a.name, b.name), vertices, edges, identity, triangles, marked)
            .expect("products of complexes are complexes")
    }

    /// Same complex with a different marking.
    pub fn with_marking(&self, marked: Vec<bool>) -> Complex {
        assert_eq!(marked.len(), self.edge_count());
        let mut c = self.clone();
        c.marked = marked;
        c
    }
}

/// Incremental construction; degenerate triangles are added on `build`.
#[derive(Clone, Debug, Default)]
pub struct ComplexBuilder {
    name: String,
    vertices: Vec<String>,
    edges: Vec<Edge>,
    identity: Vec<usize>,
    triangles: Vec<[usize; 3]>,
    marked: Vec<bool>,
}

impl ComplexBuilder {
    pub fn new(name: impl Into<String>) -> Self {
        ComplexBuilder { name: name.into(), ..Default::default() }
    }

    /// Add a vertex together with its identity edge.
    pub fn vertex(&mut self, name: impl Into<String>, identity_name: impl Into<String>) -> usize {
        let v = self.vertices.len();
        self.vertices.push(name.into());
        let e = self.edge(identity_name, v, v);
        self.identity.push(e);
        v
    }

    pub fn edge(&mut self, name: impl Into<String>, source: usize, target: usize) -> usize {
        self.edges.push(Edge { name: name.into(), source, target });
        self.marked.push(false);
        self.edges.len() - 1
    }

    pub fn triangle(&mut self, d0: usize, d1: usize, d2: usize) {
        self.triangles.push([d0, d1, d2]);
    }

    pub fn mark(&mut self, e: usize) {
        self.marked[e] = true;
    }

    pub fn identity_of(&self, v: usize) -> usize {
        self.identity[v]
    }

    pub fn build(mut self) -> Result<Complex> {
        for (i, e) in self.edges.iter().enumerate() {
            self.triangles.push([i, i, self.identity[e.source]]);
            self.triangles.push([self.identity[e.target], i, i]);
        }
        Complex::new(self.name, self.vertices, self.edges, self.identity, self.triangles, self.marked)
    }
}

/// A morphism of complexes given by its vertex and edge components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialMap {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl SimplicialMap {
    /// Check endpoints, identities, triangles and marking.
    pub fn is_morphism(&self, src: &Complex, tgt: &Complex) -> bool {
        self.vertices.len() == src.vertex_count()
            && self.edges.len() == src.edge_count()
            && self.vertices.iter().all(|&v| v < tgt.vertex_count())
            && self.edges.iter().all(|&e| e < tgt.edge_count())
            && src.edges().iter().zip(&self.edges).all(|(e, &f)| {
                tgt.source(f) == self.vertices[e.source] && tgt.target(f) == self.vertices[e.target]
            })
            && (0..src.vertex_count()).all(|v| self.edges[src.identity(v)] == tgt.identity(self.vertices[v]))
            && src.triangles().iter().all(|t| tgt.has_triangle(self.edges[t[0]], self.edges[t[1]], self.edges[t[2]]))
            && (0..src.edge_count()).all(|e| !src.is_marked(e) || tgt.is_marked(self.edges[e]))
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SimplicialMap) -> SimplicialMap {
        SimplicialMap {
            vertices: self.vertices.iter().map(|&v| other.vertices[v]).collect(),
            edges: self.edges.iter().map(|&e| other.edges[e]).collect(),
        }
    }

    pub fn identity(c: &Complex) -> SimplicialMap {
        SimplicialMap { vertices: (0..c.vertex_count()).collect(), edges: (0..c.edge_count()).collect() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn loop_complex(marked: bool) -> Complex {
        let mut b = ComplexBuilder::new("loop");
        let v = b.vertex("v", "id");
        let a = b.edge("a", v, v);
        if marked {
            b.mark(a);
        }
        b.build().unwrap()
    }

    #[test]
    fn builder_adds_degeneracies() {
        let c = loop_complex(false);
        assert!(c.has_triangle(1, 1, 0));
        assert!(c.has_triangle(0, 1, 1));
        assert!(c.has_triangle(0, 0, 0));
        assert_eq!(c.triangle_count(), 3);
    }

    #[test]
    fn missing_degeneracy_is_rejected() {
        let c = loop_complex(false);
        let err = Complex::new(
            "x",
            c.vertices().to_vec(),
            c.edges().to_vec(),
            c.identities().to_vec(),
            vec![[0, 0, 0]],
            vec![false, false],
        );
        assert!(err.is_err());
    }

    #[test]
    fn product_marks_only_doubly_marked_edges() {
        let a = loop_complex(true);
        let p = Complex::product(&a, &a);
        assert_eq!(p.marked_count(), 1);
        assert_eq!(p.edge_count(), 4);
        assert_eq!(p.triangle_count(), 9);
    }
}
