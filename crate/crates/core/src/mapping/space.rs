//! Mapping complexes [X, Y] truncated at dimension 2.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::simplicial::{hom_maps, sigma, simplex, Complex, Edge, SimplicialMap};

/// [X, Y]: vertices are maps X → Y with the marking of X ignored, edges
/// maps Δ¹ × X → Y, triangles maps Δ² × X → Y. An edge is marked when it
/// is also a map Σ¹ × X → Y.
#[derive(Clone, Debug)]
pub struct MappingComplex {
    pub complex: Complex,
    pub domain: Complex,
    pub codomain: Complex,
    /// Maps Δ⁰ × X → Y, indexed like X.
    pub vertex_maps: Vec<SimplicialMap>,
    /// Maps Δ¹ × X → Y in the product indexing of [`Complex::product`].
    pub edge_maps: Vec<SimplicialMap>,
    /// Maps Δ² × X → Y, aligned with `complex.triangles()`.
    pub triangle_maps: Vec<SimplicialMap>,
    vertex_index: HashMap<Vec<usize>, usize>,
    edge_index: HashMap<Vec<usize>, usize>,
}

/// Counts of vertices, edges, marked edges and triangles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub vertices: usize,
    pub edges: usize,
    pub marked: usize,
    pub triangles: usize,
}

impl Counts {
    pub fn of(c: &Complex) -> Self {
        Counts {
            vertices: c.vertex_count(),
            edges: c.edge_count(),
            marked: c.marked_count(),
            triangles: c.triangle_count(),
        }
    }
}

/// Δᵐ × X with no marked edges.
fn cylinder(m: usize, x: &Complex) -> Complex {
    Complex::product(&simplex(m), x)
}

/// The map Δᵐ → Δⁿ given on vertices.
pub(crate) fn simplex_map(m: usize, n: usize, vertices: &[usize]) -> SimplicialMap {
    let (s, t) = (simplex(m), simplex(n));
    let edges = s
        .edges()
        .iter()
        .map(|e| t.edges_between(vertices[e.source], vertices[e.target])[0])
        .collect();
    SimplicialMap { vertices: vertices.to_vec(), edges }
}

/// M ∘ (φ × X) for M: W × X → Y and φ: Z → W.
pub(crate) fn precompose_first(m: &SimplicialMap, phi: &SimplicialMap, x: &Complex) -> SimplicialMap {
    let (vx, ex) = (x.vertex_count(), x.edge_count());
    SimplicialMap {
        vertices: phi.vertices.iter().flat_map(|&w| (0..vx).map(move |v| m.vertices[w * vx + v])).collect(),
        edges: phi.edges.iter().flat_map(|&w| (0..ex).map(move |e| m.edges[w * ex + e])).collect(),
    }
}

/// M ∘ (Z × ψ) for M: Z × X → Y and ψ: X' → X.
pub(crate) fn precompose_second(m: &SimplicialMap, z: &Complex, psi: &SimplicialMap, x: &Complex) -> SimplicialMap {
    let (vx, ex) = (x.vertex_count(), x.edge_count());
    SimplicialMap {
        vertices: (0..z.vertex_count())
            .flat_map(|w| psi.vertices.iter().map(move |&v| m.vertices[w * vx + v]))
            .collect(),
        edges: (0..z.edge_count()).flat_map(|w| psi.edges.iter().map(move |&e| m.edges[w * ex + e])).collect(),
    }
}

fn describe_vertex(x: &Complex, y: &Complex, m: &SimplicialMap) -> String {
    let parts: Vec<String> = (0..x.edge_count())
        .filter(|&e| !x.is_identity(e))
        .map(|e| format!("{}↦{}", x.edge(e).name, y.edge(m.edges[e]).name))
        .collect();
    if x.vertex_count() > 1 {
        let vs: Vec<String> =
            (0..x.vertex_count()).map(|v| format!("{}↦{}", x.vertex(v), y.vertex(m.vertices[v]))).collect();
        format!("{{{}; {}}}", vs.join(","), parts.join(","))
    } else {
        format!("{{{}}}", parts.join(","))
    }
}

pub fn mapping_complex(x: &Complex, y: &Complex) -> Result<MappingComplex> {
    let unmarked = x.with_marking(vec![false; x.edge_count()]);
    let vertex_maps = hom_maps(&unmarked, y);
    let edge_maps = hom_maps(&cylinder(1, x), y);
    let triangle_maps = hom_maps(&cylinder(2, x), y);
    let vertex_index: HashMap<Vec<usize>, usize> =
        vertex_maps.iter().enumerate().map(|(i, m)| (key(m), i)).collect();
    let edge_index: HashMap<Vec<usize>, usize> = edge_maps.iter().enumerate().map(|(i, m)| (key(m), i)).collect();
    let lookup_v = |m: &SimplicialMap| {
        vertex_index.get(&key(m)).copied().ok_or_else(|| Error::Contract("restriction is not a vertex".into()))
    };
    let lookup_e = |m: &SimplicialMap| {
        edge_index.get(&key(m)).copied().ok_or_else(|| Error::Contract("restriction is not an edge".into()))
    };
    let point = |i: usize| simplex_map(0, 1, &[i]);
    let mut edges = Vec::with_capacity(edge_maps.len());
    for (i, m) in edge_maps.iter().enumerate() {
        edges.push(Edge {
            name: format!("e{i}"),
            source: lookup_v(&precompose_first(m, &point(0), x))?,
            target: lookup_v(&precompose_first(m, &point(1), x))?,
        });
    }
    let degeneracy = simplex_map(1, 0, &[0, 0]);
    let identity = vertex_maps
        .iter()
        .map(|m| lookup_e(&precompose_first(m, &degeneracy, x)))
        .collect::<Result<Vec<usize>>>()?;
    let faces = [simplex_map(1, 2, &[1, 2]), simplex_map(1, 2, &[0, 2]), simplex_map(1, 2, &[0, 1])];
    let mut triangles = Vec::with_capacity(triangle_maps.len());
    let mut by_faces = HashMap::new();
    for (i, m) in triangle_maps.iter().enumerate() {
        let mut t = [0; 3];
        for (k, phi) in faces.iter().enumerate() {
            t[k] = lookup_e(&precompose_first(m, phi, x))?;
        }
        if by_faces.insert(t, i).is_some() {
            return Err(Error::Contract("two triangles of the mapping complex share their faces".into()));
        }
        triangles.push(t);
    }
    let marked_shape = Complex::product(&sigma(1), x);
    let marked = edge_maps.iter().map(|m| m.is_morphism(&marked_shape, y)).collect();
    let vertices = vertex_maps.iter().map(|m| describe_vertex(x, y, m)).collect();
    let complex = Complex::new(format!("[{}, {}]", x.name(), y.name()), vertices, edges, identity, triangles, marked)?;
    let triangle_maps = complex.triangles().iter().map(|t| triangle_maps[by_faces[t]].clone()).collect();
    Ok(MappingComplex {
        complex,
        domain: x.clone(),
        codomain: y.clone(),
        vertex_maps,
        edge_maps,
        triangle_maps,
        vertex_index,
        edge_index,
    })
}

fn key(m: &SimplicialMap) -> Vec<usize> {
    m.vertices.iter().chain(&m.edges).copied().collect()
}

impl MappingComplex {
    pub fn vertex_of(&self, m: &SimplicialMap) -> Option<usize> {
        self.vertex_index.get(&key(m)).copied()
    }

    pub fn edge_of(&self, m: &SimplicialMap) -> Option<usize> {
        self.edge_index.get(&key(m)).copied()
    }

    pub fn counts(&self) -> Counts {
        Counts::of(&self.complex)
    }

    /// Vertices that are maps Σ⁰ × X → Y, i.e. preserve the marking of X.
    pub fn marking_preserving_vertices(&self) -> Vec<usize> {
        let shape = Complex::product(&sigma(0), &self.domain);
        (0..self.vertex_maps.len()).filter(|&v| self.vertex_maps[v].is_morphism(&shape, &self.codomain)).collect()
    }

    /// Number of maps Δⁿ × X → Y for n ≤ 2, for the cardinality check.
    pub fn level_sizes(&self) -> [usize; 3] {
        [self.vertex_maps.len(), self.edge_maps.len(), self.triangle_maps.len()]
    }
}

/// The map [X, Y] → [X', Y] given by precomposition with ψ: X' → X.
pub fn restriction(src: &MappingComplex, tgt: &MappingComplex, psi: &SimplicialMap) -> Result<SimplicialMap> {
    let x = &src.domain;
    let missing = || Error::Contract("restriction leaves the target mapping complex".into());
    let vertices = src
        .vertex_maps
        .iter()
        .map(|m| tgt.vertex_of(&precompose_second(m, &simplex(0), psi, x)).ok_or_else(missing))
        .collect::<Result<Vec<usize>>>()?;
    let d1 = simplex(1);
    let edges = src
        .edge_maps
        .iter()
        .map(|m| tgt.edge_of(&precompose_second(m, &d1, psi, x)).ok_or_else(missing))
        .collect::<Result<Vec<usize>>>()?;
    let r = SimplicialMap { vertices, edges };
    if !r.is_morphism(&src.complex, &tgt.complex) {
        return Err(Error::Contract("restriction is not a map of complexes".into()));
    }
    Ok(r)
}

/// Pointwise composition [Y, Z] × [X, Y] → [X, Z] on vertices and edges,
/// with the product indexing of [`Complex::product`] on the source.
pub fn compose(g: &MappingComplex, f: &MappingComplex, out: &MappingComplex) -> Result<SimplicialMap> {
    let y = &f.codomain;
    let (vy, ey) = (y.vertex_count(), y.edge_count());
    let missing = || Error::Contract("composite is not in the mapping complex".into());
    let mut vertices = Vec::new();
    for gm in &g.vertex_maps {
        for fm in &f.vertex_maps {
            vertices.push(out.vertex_of(&fm.then(gm)).ok_or_else(missing)?);
        }
    }
    let d1 = simplex(1);
    let mut edges = Vec::new();
    for gm in &g.edge_maps {
        for fm in &f.edge_maps {
            let ex = f.domain.edge_count();
            let vx = f.domain.vertex_count();
            let composite = SimplicialMap {
                vertices: (0..d1.vertex_count() * vx)
                    .map(|i| gm.vertices[(i / vx) * vy + fm.vertices[i]])
                    .collect(),
                edges: (0..d1.edge_count() * ex).map(|i| gm.edges[(i / ex) * ey + fm.edges[i]]).collect(),
            };
            edges.push(out.edge_of(&composite).ok_or_else(missing)?);
        }
    }
    Ok(SimplicialMap { vertices, edges })
}
