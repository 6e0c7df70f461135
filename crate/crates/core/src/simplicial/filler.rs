//! Backtracking filler: depth-first over the missing edges, always branching
//! on the edge with the fewest remaining candidates, with triangle-based
//! forward checking.

use serde::Serialize;

use super::complex::{Complex, SimplicialMap};
use super::lifting::partial_on_codomain;
use super::shapes::ShapeInclusion;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FillerTrace {
    /// Search nodes visited.
    pub nodes: usize,
    /// Nodes where some edge ran out of candidates.
    pub dead_ends: usize,
    /// The first such edge, with the assignment depth it happened at.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_dead_end: Option<String>,
}

struct Filler<'a> {
    c: &'a Complex,
    x: &'a Complex,
    /// Triangles of c containing each edge.
    incident: Vec<Vec<[usize; 3]>>,
    vmap: Vec<Option<usize>>,
    emap: Vec<Option<usize>>,
    trace: FillerTrace,
}

impl Filler<'_> {
    fn domain(&self, e: usize) -> Vec<usize> {
        let (c, x) = (self.c, self.x);
        let (s, t) = (c.source(e), c.target(e));
        let pool: Vec<usize> = match (self.vmap[s], self.vmap[t]) {
            (Some(a), Some(b)) => x.edges_between(a, b).to_vec(),
            (Some(a), None) => x.outgoing(a).to_vec(),
            (None, Some(b)) => x.incoming(b).to_vec(),
            (None, None) => (0..x.edge_count()).collect(),
        };
        pool.into_iter()
            .filter(|&f| {
                (s != t || x.source(f) == x.target(f))
                    && (!c.is_identity(e) || x.is_identity(f))
                    && (!c.is_marked(e) || x.is_marked(f))
                    && self.incident[e].iter().all(|tri| {
                        let img = tri.map(|g| if g == e { Some(f) } else { self.emap[g] });
                        match img {
                            [Some(a), Some(b), Some(d)] => x.has_triangle(a, b, d),
                            _ => true,
                        }
                    })
            })
            .collect()
    }

    fn solve(&mut self, depth: usize) -> Option<SimplicialMap> {
        self.trace.nodes += 1;
        let mut best: Option<(usize, Vec<usize>)> = None;
        for e in 0..self.c.edge_count() {
            if self.emap[e].is_some() {
                continue;
            }
            let d = self.domain(e);
            if d.is_empty() {
                self.trace.dead_ends += 1;
                if self.trace.first_dead_end.is_none() {
                    self.trace.first_dead_end =
                        Some(format!("edge `{}` has no candidate at depth {depth}", self.c.edge(e).name));
                }
                return None;
            }
            if best.as_ref().is_none_or(|(_, b)| d.len() < b.len()) {
                best = Some((e, d));
            }
        }
        let Some((e, candidates)) = best else {
            return Some(SimplicialMap {
                vertices: self.vmap.iter().map(|v| v.expect("vertex reached by its identity edge")).collect(),
                edges: self.emap.iter().map(|f| f.expect("all edges assigned")).collect(),
            });
        };
        let (s, t) = (self.c.source(e), self.c.target(e));
        for f in candidates {
            let set_s = self.vmap[s].is_none();
            if set_s {
                self.vmap[s] = Some(self.x.source(f));
            }
            let set_t = self.vmap[t].is_none();
            if set_t {
                self.vmap[t] = Some(self.x.target(f));
            }
            self.emap[e] = Some(f);
            if let Some(found) = self.solve(depth + 1) {
                return Some(found);
            }
            self.emap[e] = None;
            if set_t {
                self.vmap[t] = None;
            }
            if set_s {
                self.vmap[s] = None;
            }
        }
        None
    }
}

/// Extend `boundary` (a map on the domain of `f`) along `f`, or report why
/// the search was exhausted.
pub fn generic_filler(f: &ShapeInclusion, x: &Complex, boundary: &SimplicialMap) -> Result<SimplicialMap, FillerTrace> {
    let c = f.codomain();
    let (_, incl) = f.domain();
    let (vmap, emap) = partial_on_codomain(f, &incl, boundary);
    let mut incident = vec![Vec::new(); c.edge_count()];
    for t in c.triangles() {
        for &e in t {
            if !incident[e].contains(t) {
                incident[e].push(*t);
            }
        }
    }
    let mut filler = Filler { c, x, incident, vmap, emap, trace: FillerTrace::default() };
    // triangles lying entirely in the boundary's image but outside the domain
    let closed = c.triangles().iter().all(|t| match t.map(|e| filler.emap[e]) {
        [Some(a), Some(b), Some(d)] => x.has_triangle(a, b, d),
        _ => true,
    });
    if !closed {
        filler.trace.nodes = 1;
        filler.trace.dead_ends = 1;
        filler.trace.first_dead_end = Some("a triangle spanned by the boundary is not valid".into());
        return Err(filler.trace);
    }
    filler.solve(0).ok_or(filler.trace)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{hom_maps, make_shape, simplex};

    #[test]
    fn empty_addition_returns_the_boundary() {
        let f = make_shape("sigma1-mark").unwrap();
        let x = crate::simplicial::sigma(1);
        let (dom, _) = f.domain();
        for b in hom_maps(&dom, &x) {
            match generic_filler(&f, &x, &b) {
                Ok(ext) => assert_eq!(ext, b),
                Err(_) => {
                    // the only boundary that cannot extend sends 01 to an unmarked edge
                    assert!(!x.is_marked(b.edges[dom.edge_index("01").unwrap()]));
                }
            }
        }
    }

    #[test]
    fn inner_horn_in_a_simplex_fills() {
        let f = make_shape("horn2_1").unwrap();
        let x = simplex(2);
        let (dom, _) = f.domain();
        for b in hom_maps(&dom, &x) {
            assert!(generic_filler(&f, &x, &b).is_ok());
        }
    }
}
