//! Exhaustive morphism enumeration. Edges are the search variables; a
//! vertex is fixed by the first edge touching it (every vertex has its
//! identity edge).

use std::ops::ControlFlow;

use super::complex::{Complex, SimplicialMap};

/// Extra restrictions on candidate images.
#[derive(Default)]
pub struct Constraint<'a> {
    /// `vertex(v, w)`: may source vertex v go to target vertex w.
    pub vertex: Option<&'a dyn Fn(usize, usize) -> bool>,
    /// `edge(e, f)`: may source edge e go to target edge f.
    pub edge: Option<&'a dyn Fn(usize, usize) -> bool>,
    /// Require injectivity on vertices and edges.
    pub injective: bool,
}

struct Search<'a> {
    src: &'a Complex,
    tgt: &'a Complex,
    constraint: &'a Constraint<'a>,
    plan: &'a Plan,
    vmap: Vec<Option<usize>>,
    emap: Vec<Option<usize>>,
    used_v: Vec<bool>,
    used_e: Vec<bool>,
}

impl Search<'_> {
    fn triangle_ok(&self, t: &[usize; 3]) -> bool {
        let m = |e: usize| self.emap[e].expect("assigned");
        self.tgt.has_triangle(m(t[0]), m(t[1]), m(t[2]))
    }

    fn vertex_ok(&self, v: usize, w: usize) -> bool {
        match self.vmap[v] {
            Some(x) => x == w,
            None => {
                !(self.constraint.injective && self.used_v[w]) && self.constraint.vertex.is_none_or(|f| f(v, w))
            }
        }
    }

    fn candidates(&self, e: usize) -> Vec<usize> {
        let (s, t) = (self.src.source(e), self.src.target(e));
        let base: Vec<usize> = if self.src.is_identity(e) {
            match self.vmap[s] {
                Some(w) => vec![self.tgt.identity(w)],
                None => self.tgt.identities().to_vec(),
            }
        } else {
            match (self.vmap[s], self.vmap[t]) {
                (Some(a), Some(b)) => self.tgt.edges_between(a, b).to_vec(),
                (Some(a), None) => self.tgt.outgoing(a).to_vec(),
                (None, Some(b)) => self.tgt.incoming(b).to_vec(),
                (None, None) => (0..self.tgt.edge_count()).collect(),
            }
        };
        base.into_iter()
            .filter(|&f| {
                let (fs, ft) = (self.tgt.source(f), self.tgt.target(f));
                (s != t || fs == ft)
                    && self.vertex_ok(s, fs)
                    && self.vertex_ok(t, ft)
                    && (!self.src.is_marked(e) || self.tgt.is_marked(f))
                    && !(self.constraint.injective && self.used_e[f])
                    && self.constraint.edge.is_none_or(|c| c(e, f))
            })
            .collect()
    }

    fn run(&mut self, step: usize, visit: &mut dyn FnMut(&SimplicialMap) -> ControlFlow<()>) -> ControlFlow<()> {
        if step == self.plan.order.len() {
            let map = SimplicialMap {
                vertices: self.vmap.iter().map(|v| v.expect("every vertex has an identity edge")).collect(),
                edges: self.emap.iter().map(|e| e.expect("assigned")).collect(),
            };
            return visit(&map);
        }
        let e = self.plan.order[step];
        let (s, t) = (self.src.source(e), self.src.target(e));
        for f in self.candidates(e) {
            let set_s = self.vmap[s].is_none();
            if set_s {
                self.vmap[s] = Some(self.tgt.source(f));
                self.used_v[self.tgt.source(f)] = true;
            }
            let set_t = self.vmap[t].is_none();
            if set_t {
                self.vmap[t] = Some(self.tgt.target(f));
                self.used_v[self.tgt.target(f)] = true;
            }
            self.emap[e] = Some(f);
            self.used_e[f] = true;
            let ok = self.plan.checks[step].iter().all(|tri| self.triangle_ok(tri));
            if ok {
                self.run(step + 1, visit)?;
            }
            self.used_e[f] = false;
            self.emap[e] = None;
            if set_t {
                self.used_v[self.tgt.target(f)] = false;
                self.vmap[t] = None;
            }
            if set_s {
                self.used_v[self.tgt.source(f)] = false;
                self.vmap[s] = None;
            }
        }
        ControlFlow::Continue(())
    }
}

/// A search order for extending maps that are fixed on a given set of
/// vertices and edges; reusable across many partial maps with the same
/// support.
#[derive(Clone, Debug)]
pub struct Plan {
    order: Vec<usize>,
    /// Triangles (as source triangles) completed at each step of `order`.
    checks: Vec<Vec<[usize; 3]>>,
    /// Triangles among fixed edges that still need a check.
    initial: Vec<[usize; 3]>,
}

impl Plan {
    /// `trusted(t)` marks triangles among fixed edges that are known to
    /// hold for every partial map the plan will see.
    pub fn new(src: &Complex, fixed_vertices: &[bool], fixed_edges: &[bool], trusted: &dyn Fn(&[usize; 3]) -> bool) -> Plan {
        // greedy static order: complete as many triangles as early as
        // possible, then prefer edges whose endpoints are already reached
        let mut reached = fixed_vertices.to_vec();
        for e in (0..src.edge_count()).filter(|&e| fixed_edges[e]) {
            reached[src.source(e)] = true;
            reached[src.target(e)] = true;
        }
        let mut assigned = fixed_edges.to_vec();
        let mut on_edge: Vec<Vec<usize>> = vec![Vec::new(); src.edge_count()];
        for (i, t) in src.triangles().iter().enumerate() {
            for &e in t {
                if !on_edge[e].contains(&i) {
                    on_edge[e].push(i);
                }
            }
        }
        let mut pending: Vec<usize> = (0..src.edge_count()).filter(|&e| !fixed_edges[e]).collect();
        let mut order = Vec::with_capacity(pending.len());
        while !pending.is_empty() {
            let score = |e: usize| {
                let mut completed = 0;
                let mut touched = 0;
                for &i in &on_edge[e] {
                    let others = src.triangles()[i].iter().filter(|&&g| g != e && !assigned[g]).count();
                    if others == 0 {
                        completed += 1;
                    } else if others == 1 {
                        touched += 1;
                    }
                }
                let ends = usize::from(reached[src.source(e)]) + usize::from(reached[src.target(e)]);
                (completed, ends, touched)
            };
            let best =
                (0..pending.len()).max_by_key(|&i| (score(pending[i]), std::cmp::Reverse(pending[i]))).unwrap();
            let e = pending.remove(best);
            reached[src.source(e)] = true;
            reached[src.target(e)] = true;
            assigned[e] = true;
            order.push(e);
        }
        let mut step_of = vec![None; src.edge_count()];
        for (k, &e) in order.iter().enumerate() {
            step_of[e] = Some(k);
        }
        let mut checks = vec![Vec::new(); order.len()];
        let mut initial = Vec::new();
        for t in src.triangles() {
            match t.iter().filter_map(|&e| step_of[e]).max() {
                Some(k) => checks[k].push(*t),
                None if !trusted(t) => initial.push(*t),
                None => {}
            }
        }
        Plan { order, checks, initial }
    }

    /// Enumerate the extensions of a partial map whose support is the one
    /// the plan was built for.
    pub fn run(
        &self,
        src: &Complex,
        tgt: &Complex,
        fixed_vertices: &[Option<usize>],
        fixed_edges: &[Option<usize>],
        constraint: &Constraint,
        visit: &mut dyn FnMut(&SimplicialMap) -> ControlFlow<()>,
    ) {
        let mut vmap = fixed_vertices.to_vec();
        let emap = fixed_edges.to_vec();
        for (e, f) in emap.iter().enumerate() {
            let Some(f) = *f else { continue };
            for (v, w) in [(src.source(e), tgt.source(f)), (src.target(e), tgt.target(f))] {
                match vmap[v] {
                    Some(x) if x != w => return,
                    _ => vmap[v] = Some(w),
                }
            }
        }
        let mut used_v = vec![false; tgt.vertex_count()];
        let mut used_e = vec![false; tgt.edge_count()];
        if constraint.injective {
            for &w in vmap.iter().flatten() {
                if std::mem::replace(&mut used_v[w], true) {
                    return;
                }
            }
            for &f in emap.iter().flatten() {
                if std::mem::replace(&mut used_e[f], true) {
                    return;
                }
            }
        }
        let mut search = Search { src, tgt, constraint, plan: self, vmap, emap, used_v, used_e };
        if !self.initial.iter().all(|t| search.triangle_ok(t)) {
            return;
        }
        let _ = search.run(0, visit);
    }
}

/// Enumerate every morphism `src → tgt` agreeing with the fixed vertex and
/// edge images, in a deterministic order. `visit` may stop the search.
/// Fixed images are trusted to be mutually consistent only as far as
/// endpoints; triangles among fixed edges are checked.
pub fn extensions(
    src: &Complex,
    tgt: &Complex,
    fixed_vertices: &[Option<usize>],
    fixed_edges: &[Option<usize>],
    constraint: &Constraint,
    visit: &mut dyn FnMut(&SimplicialMap) -> ControlFlow<()>,
) {
    let fv: Vec<bool> = fixed_vertices.iter().map(Option::is_some).collect();
    let fe: Vec<bool> = fixed_edges.iter().map(Option::is_some).collect();
    Plan::new(src, &fv, &fe, &|_| false).run(src, tgt, fixed_vertices, fixed_edges, constraint, visit);
}

/// All morphisms `src → tgt`.
pub fn hom_maps(src: &Complex, tgt: &Complex) -> Vec<SimplicialMap> {
    let mut out = Vec::new();
    extensions(
        src,
        tgt,
        &vec![None; src.vertex_count()],
        &vec![None; src.edge_count()],
        &Constraint::default(),
        &mut |m| {
            out.push(m.clone());
            ControlFlow::Continue(())
        },
    );
    out
}

/// An isomorphism `a → b`, trying `hint` first.
pub fn complex_isomorphism(a: &Complex, b: &Complex, hint: Option<&SimplicialMap>) -> Option<SimplicialMap> {
    if a.vertex_count() != b.vertex_count()
        || a.edge_count() != b.edge_count()
        || a.triangle_count() != b.triangle_count()
        || a.marked_count() != b.marked_count()
    {
        return None;
    }
    if let Some(h) = hint {
        let bijective = |m: &[usize], n: usize| {
            let mut seen = vec![false; n];
            m.iter().all(|&x| x < n && !std::mem::replace(&mut seen[x], true))
        };
        if h.is_morphism(a, b) && bijective(&h.vertices, b.vertex_count()) && bijective(&h.edges, b.edge_count()) {
            return Some(h.clone());
        }
    }
    let mut found = None;
    let constraint = Constraint { injective: true, ..Default::default() };
    extensions(
        a,
        b,
        &vec![None; a.vertex_count()],
        &vec![None; a.edge_count()],
        &constraint,
        &mut |m| {
            found = Some(m.clone());
            ControlFlow::Break(())
        },
    );
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{sigma, simplex};

    #[test]
    fn maps_between_simplices_are_monotone_functions() {
        // monotone maps [1] → [2]: C(4, 2) = 6
        assert_eq!(hom_maps(&simplex(1), &simplex(2)).len(), 6);
        // monotone maps [2] → [2]: C(5, 3) = 10
        assert_eq!(hom_maps(&simplex(2), &simplex(2)).len(), 10);
    }

    #[test]
    fn marked_edges_must_go_to_marked_edges() {
        assert_eq!(hom_maps(&sigma(1), &simplex(1)).len(), 0);
        assert_eq!(hom_maps(&simplex(1), &sigma(1)).len(), 3);
    }

    #[test]
    fn top_simplices_of_a_product_follow_the_lattice_path_count() {
        for m in 0..=2usize {
            for n in 0..=2usize {
                let p = crate::simplicial::Complex::product(&simplex(m), &simplex(n));
                let top = hom_maps(&simplex(m + n), &p)
                    .into_iter()
                    .filter(|f| {
                        let mut v = f.vertices.clone();
                        v.sort();
                        v.dedup();
                        v.len() == m + n + 1
                    })
                    .count();
                let binom = (1..=m).fold(1, |acc, i| acc * (n + i) / i);
                assert_eq!(top, binom, "Δ{m} × Δ{n}");
            }
        }
    }

    #[test]
    fn simplex_is_isomorphic_to_itself_only_trivially() {
        let d = simplex(2);
        let iso = complex_isomorphism(&d, &d, None).unwrap();
        assert_eq!(iso, SimplicialMap::identity(&d));
    }
}
