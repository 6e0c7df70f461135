//! The nerve of an ε-monoid, its inverse on recognised complexes, and the
//! lifting-property recogniser.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{is_epsilon_morphism, validate, Carrier, RelFa, Ternary};
use crate::error::{Error, Result};
use crate::report::{AxiomVerdict, Status, ValidationReport};
use crate::simplicial::{check_lifting, make_shape, Complex, Edge, LiftMode, SimplicialMap};

/// A complex together with the algebra data it was built from.
#[derive(Clone, Debug)]
pub struct NerveComplex {
    pub complex: Complex,
    /// Algebra element of each edge.
    pub edge_element: Vec<usize>,
    /// Unit element of each vertex.
    pub vertex_unit: Vec<usize>,
    edge_index: HashMap<(usize, usize, usize), usize>,
}

impl NerveComplex {
    /// The edge (u, a, v) given by units u, v and element a.
    pub fn edge(&self, source_unit: usize, element: usize, target_unit: usize) -> Option<usize> {
        self.edge_index.get(&(source_unit, element, target_unit)).copied()
    }

    /// The edges carrying element `a`.
    pub fn edges_of(&self, a: usize) -> Vec<usize> {
        (0..self.edge_element.len()).filter(|&e| self.edge_element[e] == a).collect()
    }
}

/// Vertices are the units u with μ(u, u) ∋ u; edges are the triples
/// (u, a, v) with μ(a, u) ∋ a and μ(v, a) ∋ a; the triangle
/// ((v, b, w), (u, c, w), (u, a, v)) is valid iff μ(b, a) ∋ c; an edge is
/// marked iff its element is in ε.
pub fn nerve(a: &RelFa) -> NerveComplex {
    let n = a.len();
    let mu = a.mu();
    let vertex_unit: Vec<usize> = (0..n).filter(|&u| a.is_unit(u) && mu.contains(u, u, u)).collect();
    let vertex_of: HashMap<usize, usize> = vertex_unit.iter().enumerate().map(|(i, &u)| (u, i)).collect();
    let mut triples = Vec::new();
    for x in 0..n {
        for &u in &vertex_unit {
            if !mu.contains(x, u, x) {
                continue;
            }
            for &v in &vertex_unit {
                if mu.contains(v, x, x) {
                    triples.push((u, x, v));
                }
            }
        }
    }
    let mut per_element = vec![0usize; n];
    for &(_, x, _) in &triples {
        per_element[x] += 1;
    }
    let edges: Vec<Edge> = triples
        .iter()
        .map(|&(u, x, v)| Edge {
            name: if per_element[x] == 1 {
                a.element(x).to_string()
            } else {
                format!("{}[{},{}]", a.element(x), a.element(u), a.element(v))
            },
            source: vertex_of[&u],
            target: vertex_of[&v],
        })
        .collect();
    let edge_index: HashMap<(usize, usize, usize), usize> = triples.iter().enumerate().map(|(i, &t)| (t, i)).collect();
    let identity: Vec<usize> = vertex_unit.iter().map(|&u| edge_index[&(u, u, u)]).collect();
    let mut by_element: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, &(_, x, _)) in triples.iter().enumerate() {
        by_element[x].push(i);
    }
    let mut triangles = Vec::new();
    for (d2, &(u, x, v)) in triples.iter().enumerate() {
        for (d0, &(v2, y, w)) in triples.iter().enumerate() {
            if v2 != v {
                continue;
            }
            for &c in mu.get(y, x) {
                for &d1 in &by_element[c] {
                    let (u1, _, w1) = triples[d1];
                    if u1 == u && w1 == w {
                        triangles.push([d0, d1, d2]);
                    }
                }
            }
        }
    }
    let marked = triples.iter().map(|&(_, x, _)| a.is_counit(x)).collect();
    let vertices = vertex_unit.iter().map(|&u| a.element(u).to_string()).collect();
    let complex = Complex::new(format!("N({})", a.name()), vertices, edges, identity, triangles, marked)
        .expect("the nerve of a structure with idempotent units is a complex");
    let edge_element = triples.iter().map(|&(_, x, _)| x).collect();
    NerveComplex { complex, edge_element, vertex_unit, edge_index }
}

/// The map of nerves induced by a morphism of ε-monoids.
pub fn nerve_map(src: &RelFa, tgt: &RelFa, f: &[usize]) -> Result<SimplicialMap> {
    if !is_epsilon_morphism(src, tgt, f) {
        return Err(Error::Precondition("not a morphism of ε-monoids".into()));
    }
    let (ns, nt) = (nerve(src), nerve(tgt));
    let vertices = ns
        .vertex_unit
        .iter()
        .map(|&u| nt.vertex_unit.iter().position(|&w| w == f[u]).expect("units map to units"))
        .collect();
    let edges = (0..ns.complex.edge_count())
        .map(|e| {
            let x = ns.edge_element[e];
            let u = ns.vertex_unit[ns.complex.source(e)];
            let v = ns.vertex_unit[ns.complex.target(e)];
            nt.edge(f[u], f[x], f[v]).expect("morphisms preserve sources and targets")
        })
        .collect();
    Ok(SimplicialMap { vertices, edges })
}

/// Required unique-lifting shapes.
pub const EPSILON_HORNS: [&str; 6] = ["ehorn1_0", "ehorn1_1", "ehorn2_0", "ehorn2_2", "ehorn3_0", "ehorn3_3"];

fn lifting_verdict(label: &str, shape: &str, x: &Complex, mode: LiftMode) -> AxiomVerdict {
    let f = make_shape(shape).expect("built-in shape");
    let r = check_lifting(&f, x, mode);
    let mut v = if r.pass { AxiomVerdict::pass(label) } else { AxiomVerdict::fail(label, Vec::new()) };
    v.counterexample = None;
    v.detail = Some(format!(
        "{} boundary maps: {} without, {} with a unique, {} with several extensions",
        r.problems, r.no_extension, r.unique_extension, r.multiple_extensions
    ));
    v.certificate = r.counterexample;
    v
}

/// Check the lifting characterisation of nerves of Frobenius algebras:
/// unique lifts against the ε-horns of dimension ≤ 3 and against ∂Δ³, and
/// lifts against the associativity shape ∂₀Δ³ ∪ ∂₂Δ³. Higher dimensions hold
/// by construction. Fillers of Λ³_i and of the other associativity shape are
/// reported under `derived`.
pub fn recognize_nerve(x: &Complex) -> ValidationReport {
    let mut axioms: Vec<AxiomVerdict> = EPSILON_HORNS
        .iter()
        .map(|s| lifting_verdict(&format!("unique {s}"), s, x, LiftMode::Unique))
        .collect();
    axioms.push(AxiomVerdict::automatic(
        "unique ehorn{n}_0, ehorn{n}_n for n ≥ 4",
        "simplices above dimension 2 are edge labellings with valid triangles",
    ));
    axioms.push(lifting_verdict("unique boundary3", "boundary3", x, LiftMode::Unique));
    axioms.push(AxiomVerdict::automatic(
        "unique boundary{n} for n ≥ 4",
        "simplices above dimension 2 are edge labellings with valid triangles",
    ));
    axioms.push(lifting_verdict("assoc-02", "assoc-02", x, LiftMode::Exists));
    let mut report = ValidationReport::new("nerve", x.name(), axioms);
    report.derived = ["horn3_0", "horn3_1", "horn3_2", "horn3_3", "assoc-13"]
        .iter()
        .map(|s| lifting_verdict(s, s, x, LiftMode::Exists))
        .collect();
    report
}

/// Read a recognised complex back as an algebra: elements are edges,
/// μ(d0, d2) ∋ d1 for each valid triangle, η the identities, ε the marked
/// edges, and δ derived from μ and ε.
pub fn nerve_to_algebra(x: &Complex) -> Result<RelFa> {
    let report = recognize_nerve(x);
    if !report.pass {
        let failing = report.axioms.iter().find(|v| v.status == Status::Fail).expect("a failing item");
        let cert = failing
            .certificate
            .as_ref()
            .map(|c| serde_json::to_string(c).unwrap_or_default())
            .unwrap_or_default();
        return Err(Error::Contract(format!("{} is not a nerve: {} fails {cert}", x.name(), failing.name)));
    }
    let n = x.edge_count();
    let carrier = Carrier::new(x.edges().iter().map(|e| e.name.clone()).collect())?;
    let mu = Ternary::from_triples(n, x.triangles().iter().map(|&[d0, d1, d2]| (d0, d2, d1)));
    let eta = (0..n).map(|e| x.is_identity(e)).collect();
    let epsilon = x.marked().to_vec();
    let name = x.name().strip_prefix("N(").and_then(|s| s.strip_suffix(')')).unwrap_or(x.name());
    Ok(RelFa::with_derived_delta(name, carrier, mu, eta, epsilon))
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossValidation {
    pub agree: bool,
    pub algebraic: ValidationReport,
    pub simplicial: ValidationReport,
}

/// Compare the axiom check with the lifting characterisation.
pub fn cross_validate(a: &RelFa) -> CrossValidation {
    let algebraic = validate::validate_frobenius(a);
    let simplicial = recognize_nerve(&nerve(a).complex);
    CrossValidation { agree: algebraic.pass == simplicial.pass, algebraic, simplicial }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{boolean, chain, group_algebra, trivial, GroupTable};

    #[test]
    fn nerve_of_chain_two() {
        let n = nerve(&chain(2).to_relfa());
        let c = &n.complex;
        assert_eq!((c.vertex_count(), c.edge_count(), c.triangle_count()), (1, 3, 6));
        assert_eq!(c.marked_count(), 1);
        assert!(c.is_marked(c.edge_index("2").unwrap()));
    }

    #[test]
    fn nerve_of_z2_and_boolean_two() {
        let z2 = nerve(&group_algebra(&GroupTable::cyclic(2))).complex;
        assert_eq!((z2.vertex_count(), z2.edge_count(), z2.triangle_count()), (1, 2, 4));
        let b2 = nerve(&boolean(2).to_relfa()).complex;
        assert_eq!((b2.vertex_count(), b2.edge_count(), b2.triangle_count()), (1, 4, 9));
    }

    #[test]
    fn recogniser_accepts_small_nerves() {
        for a in [chain(1).to_relfa(), boolean(2).to_relfa(), group_algebra(&GroupTable::cyclic(2)), trivial().to_relfa()] {
            let r = recognize_nerve(&nerve(&a).complex);
            assert!(r.pass, "{}: {:?}", a.name(), r.first_failure());
        }
    }

    #[test]
    fn loop_without_marking_fails_the_first_epsilon_horn() {
        let mut b = crate::simplicial::ComplexBuilder::new("loop");
        let v = b.vertex("v", "id");
        b.edge("a", v, v);
        let x = b.build().unwrap();
        let r = recognize_nerve(&x);
        assert_eq!(r.first_failure(), Some("unique ehorn1_0"));
        assert!(nerve_to_algebra(&x).is_err());
    }
}
