//! Mapping complexes between nerves, the hom object of two effect algebras,
//! the evaluation fibration and enriched composition.

mod morphisms;
mod space;

use serde::Serialize;

pub use morphisms::{conjugate, pm_morphisms, PmMorphism};
pub use space::{compose, mapping_complex, restriction, Counts, MappingComplex};

use crate::algebra::catalog::chain;
use crate::algebra::{Carrier, EffectAlgebra, PseudoEffectAlgebra, RelFa, Ternary};
use crate::error::Result;
use crate::nerve::{nerve, nerve_map};
use crate::report::{AxiomVerdict, ValidationReport};
use crate::simplicial::{
    check_relative_lifting, complex_isomorphism, make_shape, simplex, Complex, LiftMode, SimplicialMap,
};

/// One summand [0, h(1)′] of the hom object.
#[derive(Clone, Debug)]
pub struct Component {
    pub morphism: PmMorphism,
    pub interval: EffectAlgebra,
    /// Element of F for each element of the interval.
    pub elements: Vec<usize>,
    /// Index of the first element of this component in the hom object.
    pub offset: usize,
}

#[derive(Clone, Debug)]
pub struct HomObject {
    pub algebra: RelFa,
    pub components: Vec<Component>,
}

/// The disjoint union over h: E → F of the intervals [0, h(1)′], each with
/// its own unit and counit.
pub fn hom_object_ea(e: &EffectAlgebra, f: &EffectAlgebra) -> Result<HomObject> {
    let mut components = Vec::new();
    let mut names = Vec::new();
    let (mut mu, mut delta) = (Vec::new(), Vec::new());
    let (mut eta, mut epsilon) = (Vec::new(), Vec::new());
    for (k, h) in pm_morphisms(e, f).into_iter().enumerate() {
        let interval = f.interval(f.supplement(h.apply(e.one())))?;
        let rel = interval.to_relfa();
        let offset = names.len();
        names.extend((0..interval.len()).map(|i| format!("h{k}:{}", interval.element(i))));
        mu.extend(rel.mu().iter().map(|(a, b, c)| (a + offset, b + offset, c + offset)));
        delta.extend(rel.delta().iter().map(|(a, b, c)| (a + offset, b + offset, c + offset)));
        eta.extend_from_slice(rel.eta());
        epsilon.extend_from_slice(rel.epsilon());
        let elements = (0..interval.len())
            .map(|i| f.carrier().lookup(interval.element(i)).expect("interval names come from F"))
            .collect();
        components.push(Component { morphism: h, interval, elements, offset });
    }
    let n = names.len();
    let algebra = RelFa::new(
        format!("[{}, {}]", e.name(), f.name()),
        Carrier::new(names)?,
        Ternary::from_triples(n, mu),
        Ternary::from_triples(n, delta),
        eta,
        epsilon,
    );
    Ok(HomObject { algebra, components })
}

#[derive(Clone, Debug, Serialize)]
pub struct MappingTheoremCheck {
    pub holds: bool,
    /// The labelling by morphisms and interval elements was already an
    /// isomorphism.
    pub labelling_was_isomorphism: bool,
    pub hom_object: Counts,
    pub mapping_complex: Counts,
    pub components: Vec<String>,
}

/// The labelling of the nerve of the hom object by maps: the vertex of
/// component h is h, and the loop x over h is the map Δ¹ × N(E) → N(F)
/// that is h on both ends and x ⊕ h on the diagonal.
fn labelling(e: &EffectAlgebra, f: &EffectAlgebra, g: &HomObject, mc: &MappingComplex) -> Option<SimplicialMap> {
    let d1 = simplex(1);
    let ex = e.len();
    let mut vertices = Vec::new();
    let mut edges = vec![usize::MAX; g.algebra.len()];
    for c in &g.components {
        let h = &c.morphism.map;
        let v = mc.vertex_of(&SimplicialMap { vertices: vec![0], edges: h.clone() })?;
        vertices.push(v);
        for (i, &x) in c.elements.iter().enumerate() {
            let mut m = SimplicialMap { vertices: vec![0, 0], edges: vec![0; d1.edge_count() * ex] };
            for s in 0..d1.edge_count() {
                let diagonal = !d1.is_identity(s);
                for a in 0..ex {
                    m.edges[s * ex + a] = if diagonal { f.sum(x, h[a])? } else { h[a] };
                }
            }
            edges[c.offset + i] = mc.edge_of(&m)?;
        }
    }
    Some(SimplicialMap { vertices, edges })
}

/// N(hom object) ≅ [N(E), N(F)], trying the labelling first and falling
/// back to a search.
pub fn verify_mapping_theorem(e: &EffectAlgebra, f: &EffectAlgebra) -> Result<MappingTheoremCheck> {
    let g = hom_object_ea(e, f)?;
    let ng = nerve(&g.algebra).complex;
    let mc = mapping_complex(&nerve(&e.to_relfa()).complex, &nerve(&f.to_relfa()).complex)?;
    let hint = labelling(e, f, &g, &mc);
    let iso = complex_isomorphism(&ng, &mc.complex, hint.as_ref());
    let labelling_was_isomorphism = matches!((&hint, &iso), (Some(h), Some(i)) if h == i);
    let components = g
        .components
        .iter()
        .map(|c| format!("{} ↦ [0, {}]", c.morphism.describe(e, f), f.element(c.elements[c.interval.one()])))
        .collect();
    Ok(MappingTheoremCheck {
        holds: iso.is_some(),
        labelling_was_isomorphism,
        hom_object: Counts::of(&ng),
        mapping_complex: mc.counts(),
        components,
    })
}

/// Shapes checked for the evaluation fibration, all with unique lifts.
pub const FIBRATION_SHAPES: [&str; 12] = [
    "horn1_0", "horn1_1", "horn2_0", "horn2_1", "horn2_2", "horn3_0", "horn3_1", "horn3_2", "horn3_3", "boundary2",
    "boundary3", "sigma1-mark",
];

/// The restriction p: [N(E), N(F)] → [N(2), N(F)] along the unique map
/// from the two-element algebra.
pub fn evaluation_fibration(
    e: &PseudoEffectAlgebra,
    f: &PseudoEffectAlgebra,
) -> Result<(MappingComplex, MappingComplex, SimplicialMap)> {
    let two = chain(1);
    let ny = nerve(&f.to_relfa()).complex;
    let ex = nerve(&e.to_relfa()).complex;
    let base = nerve(&two.to_relfa()).complex;
    let mut iota = vec![0; two.len()];
    iota[two.zero()] = e.zero();
    iota[two.one()] = e.one();
    let psi = nerve_map(&two.to_relfa(), &e.to_relfa(), &iota)?;
    let total = mapping_complex(&ex, &ny)?;
    let bottom = mapping_complex(&base, &ny)?;
    let p = restriction(&total, &bottom, &psi)?;
    Ok((total, bottom, p))
}

/// Unique relative lifts of p against every shape in [`FIBRATION_SHAPES`].
pub fn eval_fibration_check(e: &PseudoEffectAlgebra, f: &PseudoEffectAlgebra) -> Result<ValidationReport> {
    let (total, bottom, p) = evaluation_fibration(e, f)?;
    let axioms = FIBRATION_SHAPES
        .iter()
        .map(|s| {
            let shape = make_shape(s).expect("built-in shape");
            let r = check_relative_lifting(&shape, &total.complex, &bottom.complex, &p, LiftMode::Unique);
            let mut v = if r.pass { AxiomVerdict::pass(format!("unique {s}")) } else { AxiomVerdict::fail(format!("unique {s}"), Vec::new()) };
            v.counterexample = None;
            v.detail = Some(format!(
                "{} squares: {} without, {} with a unique, {} with several lifts",
                r.problems, r.no_extension, r.unique_extension, r.multiple_extensions
            ));
            v.certificate = r.counterexample;
            v
        })
        .collect();
    let mut report = ValidationReport::new("evaluation-fibration", format!("[{}, {}]", e.name(), f.name()), axioms);
    report.notes.push(format!(
        "total {} vertices / {} edges, base {} vertices / {} edges",
        total.complex.vertex_count(),
        total.complex.edge_count(),
        bottom.complex.vertex_count(),
        bottom.complex.edge_count()
    ));
    Ok(report)
}

/// Composition [N(F), N(G)] × [N(E), N(F)] → [N(E), N(G)].
#[derive(Clone, Debug)]
pub struct EnrichedComposition {
    pub left: MappingComplex,
    pub right: MappingComplex,
    pub product: Complex,
    pub out: MappingComplex,
    pub map: SimplicialMap,
}

impl EnrichedComposition {
    pub fn is_morphism(&self) -> bool {
        self.map.is_morphism(&self.product, &self.out.complex)
    }

    /// Composite of vertex g of the left factor after vertex f of the right.
    pub fn compose_vertices(&self, g: usize, f: usize) -> usize {
        self.map.vertices[g * self.right.complex.vertex_count() + f]
    }
}

pub fn enriched_compose(
    e: &PseudoEffectAlgebra,
    f: &PseudoEffectAlgebra,
    g: &PseudoEffectAlgebra,
) -> Result<EnrichedComposition> {
    let (ne, nf, ng) =
        (nerve(&e.to_relfa()).complex, nerve(&f.to_relfa()).complex, nerve(&g.to_relfa()).complex);
    let left = mapping_complex(&nf, &ng)?;
    let right = mapping_complex(&ne, &nf)?;
    let out = mapping_complex(&ne, &ng)?;
    let map = compose(&left, &right, &out)?;
    let product = Complex::product(&left.complex, &right.complex);
    Ok(EnrichedComposition { left, right, product, out, map })
}

/// The vertex of [N(E), N(F)] given by a morphism of partial monoids.
pub fn vertex_of_morphism(mc: &MappingComplex, h: &PmMorphism) -> Option<usize> {
    mc.vertex_of(&SimplicialMap { vertices: vec![0], edges: h.map.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::boolean;

    #[test]
    fn hom_object_components() {
        let g = hom_object_ea(&chain(1), &chain(1)).unwrap();
        let sizes: Vec<usize> = g.components.iter().map(|c| c.interval.len()).collect();
        assert_eq!(sizes, [2, 1]);
        let g = hom_object_ea(&boolean(2), &chain(1)).unwrap();
        let mut sizes: Vec<usize> = g.components.iter().map(|c| c.interval.len()).collect();
        sizes.sort();
        assert_eq!(sizes, [1, 1, 2]);
    }

    #[test]
    fn mapping_theorem_for_chain_one() {
        let r = verify_mapping_theorem(&chain(1), &chain(1)).unwrap();
        assert!(r.holds);
        assert!(r.labelling_was_isomorphism);
        assert_eq!(r.hom_object, Counts { vertices: 2, edges: 3, marked: 2, triangles: 4 });
    }
}
