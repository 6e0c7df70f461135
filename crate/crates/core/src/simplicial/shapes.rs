//! Standard shape inclusions: cells, horns, ε-horns, boundaries, the
//! braiding cylinder, the associativity shapes and box products.

use crate::error::{Error, Result};

use super::complex::{Complex, ComplexBuilder, SimplicialMap};

/// A subcomplex of `codomain` given by membership flags. Triangles are
/// indexed like `codomain.triangles()`. `marked` is the domain's own
/// marking, a subset of the codomain marking on domain edges.
#[derive(Clone, Debug)]
pub struct ShapeInclusion {
    name: String,
    codomain: Complex,
    vertices: Vec<bool>,
    edges: Vec<bool>,
    triangles: Vec<bool>,
    marked: Vec<bool>,
}

impl ShapeInclusion {
    pub fn new(
        name: impl Into<String>,
        codomain: Complex,
        vertices: Vec<bool>,
        edges: Vec<bool>,
        triangles: Vec<bool>,
        marked: Vec<bool>,
    ) -> Result<Self> {
        let c = &codomain;
        let bad = |what: &str| Err(Error::Contract(format!("not a subcomplex: {what}")));
        if vertices.len() != c.vertex_count() || edges.len() != c.edge_count() || marked.len() != c.edge_count() {
            return bad("membership flags have the wrong length");
        }
        if triangles.len() != c.triangle_count() {
            return bad("triangle flags have the wrong length");
        }
        for (i, e) in c.edges().iter().enumerate() {
            if edges[i] && !(vertices[e.source] && vertices[e.target]) {
                return bad("edge without its endpoints");
            }
            if marked[i] && !(edges[i] && c.is_marked(i)) {
                return bad("domain marking outside the codomain marking");
            }
        }
        for v in 0..c.vertex_count() {
            if vertices[v] && !edges[c.identity(v)] {
                return bad("vertex without its identity edge");
            }
        }
        for (i, t) in c.triangles().iter().enumerate() {
            if triangles[i] && !t.iter().all(|&e| edges[e]) {
                return bad("triangle without its faces");
            }
            if c.is_degenerate(*t) && t.iter().all(|&e| edges[e]) && !triangles[i] {
                return bad("missing degenerate triangle");
            }
        }
        Ok(ShapeInclusion { name: name.into(), codomain, vertices, edges, triangles, marked })
    }

    /// The subcomplex generated by a set of vertex sets (faces), with the
    /// codomain marking restricted to it.
    pub fn generated(name: impl Into<String>, codomain: Complex, faces: &[Vec<usize>]) -> Self {
        let inside = |vs: &[usize]| faces.iter().any(|f| vs.iter().all(|v| f.contains(v)));
        let c = &codomain;
        let vertices: Vec<bool> = (0..c.vertex_count()).map(|v| inside(&[v])).collect();
        let edges: Vec<bool> = c.edges().iter().map(|e| inside(&[e.source, e.target])).collect();
        let triangles = c
            .triangles()
            .iter()
            .map(|t| inside(&[c.source(t[2]), c.target(t[2]), c.target(t[0])]))
            .collect();
        let marked = (0..c.edge_count()).map(|e| edges[e] && c.is_marked(e)).collect();
        ShapeInclusion::new(name, codomain, vertices, edges, triangles, marked).expect("generated subcomplex")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn codomain(&self) -> &Complex {
        &self.codomain
    }

    pub fn has_vertex(&self, v: usize) -> bool {
        self.vertices[v]
    }

    pub fn has_edge(&self, e: usize) -> bool {
        self.edges[e]
    }

    pub fn has_triangle(&self, t: usize) -> bool {
        self.triangles[t]
    }

    pub fn domain_marked(&self, e: usize) -> bool {
        self.marked[e]
    }

    /// Codomain edges outside the domain.
    pub fn new_edges(&self) -> Vec<usize> {
        (0..self.edges.len()).filter(|&e| !self.edges[e]).collect()
    }

    /// Codomain triangles outside the domain.
    pub fn new_triangles(&self) -> Vec<usize> {
        (0..self.triangles.len()).filter(|&t| !self.triangles[t]).collect()
    }

    /// The domain as a complex, with its inclusion into the codomain.
    pub fn domain(&self) -> (Complex, SimplicialMap) {
        let c = &self.codomain;
        let vs: Vec<usize> = (0..c.vertex_count()).filter(|&v| self.vertices[v]).collect();
        let es: Vec<usize> = (0..c.edge_count()).filter(|&e| self.edges[e]).collect();
        let vpos = |v: usize| vs.binary_search(&v).expect("endpoint in domain");
        let epos = |e: usize| es.binary_search(&e).expect("face in domain");
        let edges = es
            .iter()
            .map(|&e| {
                let mut edge = c.edge(e).clone();
                edge.source = vpos(edge.source);
                edge.target = vpos(edge.target);
                edge
            })
            .collect();
        let identity = vs.iter().map(|&v| epos(c.identity(v))).collect();
        let triangles = c
            .triangles()
            .iter()
            .enumerate()
            .filter(|(i, _)| self.triangles[*i])
            .map(|(_, t)| [epos(t[0]), epos(t[1]), epos(t[2])])
            .collect();
        let marked = es.iter().map(|&e| self.marked[e]).collect();
        let domain = Complex::new(
            format!("dom {}", self.name),
            vs.iter().map(|&v| c.vertex(v).to_string()).collect(),
            edges,
            identity,
            triangles,
            marked,
        )
        .expect("domain of a shape inclusion is a complex");
        (domain, SimplicialMap { vertices: vs, edges: es })
    }
}

fn edge_name(i: usize, j: usize, n: usize) -> String {
    if n < 10 {
        format!("{i}{j}")
    } else {
        format!("{i},{j}")
    }
}

/// Δⁿ: vertices 0..=n, an edge ij for i ≤ j and a triangle for i ≤ j ≤ k.
pub fn simplex(n: usize) -> Complex {
    let mut b = ComplexBuilder::new(format!("Δ{n}"));
    let mut idx = vec![vec![usize::MAX; n + 1]; n + 1];
    for i in 0..=n {
        b.vertex(i.to_string(), edge_name(i, i, n));
        idx[i][i] = b.identity_of(i);
    }
    for i in 0..=n {
        for j in i + 1..=n {
            idx[i][j] = b.edge(edge_name(i, j, n), i, j);
        }
    }
    for i in 0..=n {
        for j in i..=n {
            for k in j..=n {
                b.triangle(idx[j][k], idx[i][k], idx[i][j]);
            }
        }
    }
    b.build().expect("simplex")
}

/// Σⁿ: Δⁿ with the edge 0n marked (the identity of 0 when n = 0).
pub fn sigma(n: usize) -> Complex {
    let d = simplex(n);
    let e = d.edges_between(0, n)[0];
    let mut marked = vec![false; d.edge_count()];
    marked[e] = true;
    d.with_marking(marked).renamed(format!("Σ{n}"))
}

fn all_but(n: usize, omit: &[usize]) -> Vec<usize> {
    (0..=n).filter(|v| !omit.contains(v)).collect()
}

/// Faces ∂_jΔⁿ for the listed j.
fn faces_omitting(n: usize, js: impl IntoIterator<Item = usize>) -> Vec<Vec<usize>> {
    js.into_iter().map(|j| all_but(n, &[j])).collect()
}

fn braiding(left: bool) -> ShapeInclusion {
    let mut b = ComplexBuilder::new("braiding cylinder");
    let v0 = b.vertex("0", "00");
    let v1 = b.vertex("1", "11");
    let e_b = b.edge("b", v0, v1);
    let a1 = b.edge("a1", v0, v0);
    let a2 = b.edge("a2", v1, v1);
    let d = b.edge("d", v0, v1);
    b.triangle(e_b, d, a1); // d = b ⊕ a1
    b.triangle(a2, d, e_b); // d = a2 ⊕ b
    let c = b.build().expect("cylinder");
    let (missing_edge, missing_triangle) = if left { (a2, [a2, d, e_b]) } else { (a1, [e_b, d, a1]) };
    let vertices = vec![true; 2];
    let edges: Vec<bool> = (0..c.edge_count()).map(|e| e != missing_edge).collect();
    let triangles = c
        .triangles()
        .iter()
        .map(|t| *t != missing_triangle && t.iter().all(|&e| edges[e]))
        .collect();
    let marked = vec![false; c.edge_count()];
    let name = if left { "braiding-left" } else { "braiding-right" };
    ShapeInclusion::new(name, c, vertices, edges, triangles, marked).expect("braiding shape")
}

/// f □ g: the inclusion of A₁ × X₀ ∪ A₀ × X₁ into A₁ × X₁.
pub fn box_inclusion(f: &ShapeInclusion, g: &ShapeInclusion) -> ShapeInclusion {
    let (a, x) = (f.codomain(), g.codomain());
    let codomain = Complex::product(a, x);
    let (vx, ex) = (x.vertex_count(), x.edge_count());
    let vertices = (0..codomain.vertex_count()).map(|v| f.has_vertex(v / vx) || g.has_vertex(v % vx)).collect();
    let edges: Vec<bool> = (0..codomain.edge_count()).map(|e| f.has_edge(e / ex) || g.has_edge(e % ex)).collect();
    let triangles = codomain
        .triangles()
        .iter()
        .map(|t| {
            let ta = [t[0] / ex, t[1] / ex, t[2] / ex];
            let tx = [t[0] % ex, t[1] % ex, t[2] % ex];
            let ia = a.triangle_position(ta).expect("product triangle");
            let ix = x.triangle_position(tx).expect("product triangle");
            f.has_triangle(ia) || g.has_triangle(ix)
        })
        .collect();
    let marked = (0..codomain.edge_count())
        .map(|e| {
            let (ea, exx) = (e / ex, e % ex);
            (a.is_marked(ea) && g.domain_marked(exx)) || (f.domain_marked(ea) && x.is_marked(exx))
        })
        .collect();
    let name = format!("box({},{})", f.name(), g.name());
    ShapeInclusion::new(name, codomain, vertices, edges, triangles, marked).expect("box product")
}

fn normalize(name: &str) -> String {
    let mut out = String::new();
    for ch in name.chars() {
        let sup = "⁰¹²³⁴⁵⁶⁷⁸⁹".chars().position(|c| c == ch);
        let sub = "₀₁₂₃₄₅₆₇₈₉".chars().position(|c| c == ch);
        match (sup, sub) {
            (Some(d), _) => out.push(char::from(b'0' + d as u8)),
            (_, Some(d)) => {
                if !out.ends_with('_') {
                    out.push('_');
                }
                out.push(char::from(b'0' + d as u8));
            }
            _ if ch == '^' || ch.is_whitespace() => {}
            _ => out.push(ch),
        }
    }
    out
}

fn split_top_level(s: &str) -> Option<(&str, &str)> {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => return Some((&s[..i], &s[i + 1..])),
            _ => {}
        }
    }
    None
}

const MAX_DIM: usize = 3;

fn dim(s: &str, full: &str) -> Result<usize> {
    let n: usize = s.parse().map_err(|_| Error::UnknownShape(full.to_string()))?;
    if n > MAX_DIM {
        return Err(Error::UnknownShape(format!("{full} (dimension above {MAX_DIM})")));
    }
    Ok(n)
}

fn strip_any<'a>(s: &'a str, prefixes: &[&str]) -> Option<&'a str> {
    prefixes.iter().find_map(|p| s.strip_prefix(p))
}

/// Resolve a shape name. Accepted (Unicode or ASCII, dimension ≤ 3):
/// `delta{n}`/`Δ{n}`, `sigma{n}`/`Σ{n}`, `boundary{n}`/`∂Δ{n}`,
/// `horn{n}_{i}`/`Λ{n}_{i}`, `ehorn{n}_0`, `ehorn{n}_{n}`/`Λε{n}_{i}`,
/// `braiding-left`, `braiding-right`, `assoc-02`, `assoc-13`,
/// `sigma1-mark`/`Σ1-mark`, `faces({n};{v..},{v..},..)` for a union of faces
/// of Δⁿ such as `faces(2;02,1)`, and `box({f},{g})`.
pub fn make_shape(name: &str) -> Result<ShapeInclusion> {
    let s = normalize(name);
    let unknown = || Error::UnknownShape(name.to_string());
    if let Some(inner) = s.strip_prefix("box(").and_then(|r| r.strip_suffix(')')) {
        let (f, g) = split_top_level(inner).ok_or_else(unknown)?;
        return Ok(box_inclusion(&make_shape(f)?, &make_shape(g)?));
    }
    if let Some(inner) = s.strip_prefix("faces(").and_then(|r| r.strip_suffix(')')) {
        let (n, list) = inner.split_once(';').ok_or_else(unknown)?;
        let n = dim(n, name)?;
        let faces = list
            .split(',')
            .map(|f| {
                f.chars()
                    .map(|c| c.to_digit(10).map(|d| d as usize).filter(|&d| d <= n).ok_or_else(unknown))
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        return Ok(ShapeInclusion::generated(name, simplex(n), &faces));
    }
    match s.as_str() {
        "braiding-left" => return Ok(braiding(true)),
        "braiding-right" => return Ok(braiding(false)),
        "assoc-02" => return Ok(ShapeInclusion::generated(name, simplex(3), &faces_omitting(3, [0, 2]))),
        "assoc-13" => return Ok(ShapeInclusion::generated(name, simplex(3), &faces_omitting(3, [1, 3]))),
        "sigma1-mark" | "Σ1-mark" => {
            let c = sigma(1);
            let (nv, ne, nt) = (c.vertex_count(), c.edge_count(), c.triangle_count());
            return ShapeInclusion::new(name, c, vec![true; nv], vec![true; ne], vec![true; nt], vec![false; ne]);
        }
        _ => {}
    }
    if let Some(rest) = strip_any(&s, &["ehorn", "Λε"]) {
        let (n, i) = rest.split_once('_').ok_or_else(unknown)?;
        let (n, i) = (dim(n, name)?, i.parse::<usize>().map_err(|_| unknown())?);
        if n == 0 || (i != 0 && i != n) {
            return Err(unknown());
        }
        return Ok(ShapeInclusion::generated(name, sigma(n), &faces_omitting(n, (0..=n).filter(|&j| j != i))));
    }
    if let Some(rest) = strip_any(&s, &["horn", "Λ"]) {
        let (n, i) = rest.split_once('_').ok_or_else(unknown)?;
        let (n, i) = (dim(n, name)?, i.parse::<usize>().map_err(|_| unknown())?);
        if n == 0 || i > n {
            return Err(unknown());
        }
        return Ok(ShapeInclusion::generated(name, simplex(n), &faces_omitting(n, (0..=n).filter(|&j| j != i))));
    }
    if let Some(n) = strip_any(&s, &["boundary", "∂Δ"]) {
        let n = dim(n, name)?;
        let faces = if n == 0 { Vec::new() } else { faces_omitting(n, 0..=n) };
        return Ok(ShapeInclusion::generated(name, simplex(n), &faces));
    }
    if let Some(n) = strip_any(&s, &["delta", "Δ"]) {
        return Ok(ShapeInclusion::generated(name, simplex(dim(n, name)?), &[]));
    }
    if let Some(n) = strip_any(&s, &["sigma", "Σ"]) {
        return Ok(ShapeInclusion::generated(name, sigma(dim(n, name)?), &[]));
    }
    Err(unknown())
}
