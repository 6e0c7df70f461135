use fa_core::algebra::catalog::{boolean, chain};
use fa_core::algebra::enumerate::{enumerate_small, EnumKind, Enumerated};
use fa_core::algebra::{EffectAlgebra, PartialAlgebra, PseudoEffectAlgebra};
use fa_core::mapping::{
    conjugate, enriched_compose, eval_fibration_check, mapping_complex, pm_morphisms, vertex_of_morphism,
    verify_mapping_theorem, Counts, PmMorphism,
};
use fa_core::nerve::{nerve, nerve_to_algebra, recognize_nerve};
use fa_core::ortho::classify;

fn non_commutative_pea() -> PseudoEffectAlgebra {
    enumerate_small(5, EnumKind::PseudoEffectAlgebra)
        .unwrap()
        .into_iter()
        .find_map(|x| match x {
            Enumerated::Pseudo(p) if !p.is_commutative() => Some(p),
            _ => None,
        })
        .expect("a non-commutative pseudo effect algebra of size 5")
}

/// Every map of carriers, filtered.
fn brute_force_morphisms(e: &PartialAlgebra, f: &PartialAlgebra) -> Vec<PmMorphism> {
    let (n, m) = (e.len(), f.len());
    let mut out = Vec::new();
    for code in 0..m.pow(n as u32) {
        let map = (0..n).map(|i| (code / m.pow(i as u32)) % m).collect();
        let h = PmMorphism { map };
        if h.is_morphism(e, f) {
            out.push(h);
        }
    }
    out.sort();
    out
}

fn small() -> Vec<EffectAlgebra> {
    vec![chain(1), chain(2), chain(3), boolean(2)]
}

#[test]
fn morphisms_match_brute_force() {
    let pea = non_commutative_pea();
    let mut tables: Vec<PartialAlgebra> = small().iter().map(|e| e.table().clone()).collect();
    tables.push(pea.table().clone());
    for e in &tables {
        for f in &tables {
            if f.len().pow(e.len() as u32) > 200_000 {
                continue;
            }
            assert_eq!(pm_morphisms(e, f), brute_force_morphisms(e, f), "{} → {}", e.name(), f.name());
        }
    }
}

#[test]
fn conjugates_satisfy_the_defining_equation() {
    let f_alg = non_commutative_pea();
    let mut nontrivial = 0;
    for e in [chain(1), chain(2), boolean(2)] {
        for h in pm_morphisms(&e, &f_alg) {
            let top = h.apply(e.one());
            for b in (0..f_alg.len()).filter(|&b| f_alg.is_defined(b, top)) {
                let g = conjugate(&e, &f_alg, &h, b).unwrap();
                assert!(g.is_morphism(&e, &f_alg));
                for a in 0..e.len() {
                    assert_eq!(f_alg.sum(b, h.apply(a)), f_alg.sum(g.apply(a), b));
                }
                nontrivial += usize::from(g != h);
            }
            let outside = (0..f_alg.len()).find(|&b| !f_alg.is_defined(b, top));
            if let Some(b) = outside {
                assert!(conjugate(&e, &f_alg, &h, b).is_err());
            }
        }
    }
    assert!(nontrivial > 0, "every conjugate is trivial");
}

/// Vertices, edges and triangles of [N(E), N(F)] counted from F alone:
/// a morphism h contributes the elements of [0, h(1)′] as loops and the
/// defined sums inside that interval as triangles.
#[test]
fn mapping_complex_cardinalities() {
    for e in small() {
        for f in small() {
            if e.len() * f.len() > 16 {
                continue;
            }
            let hs = pm_morphisms(&e, &f);
            let mut edges = 0;
            let mut triangles = 0;
            for h in &hs {
                let top = f.supplement(h.apply(e.one()));
                let below: Vec<usize> = (0..f.len()).filter(|&x| f.leq(x, top)).collect();
                edges += below.len();
                for &x in &below {
                    for &y in &below {
                        triangles += usize::from(f.sum(x, y).is_some_and(|s| f.leq(s, top)));
                    }
                }
            }
            let mc = mapping_complex(&nerve(&e.to_relfa()).complex, &nerve(&f.to_relfa()).complex).unwrap();
            let c = mc.counts();
            assert_eq!((c.vertices, c.edges, c.triangles), (hs.len(), edges, triangles), "{} {}", e.name(), f.name());
            let preserving = hs.iter().filter(|h| h.preserves_one(&e, &f)).count();
            assert_eq!(mc.marking_preserving_vertices().len(), preserving);
        }
    }
}

#[test]
fn mapping_theorem_on_small_pairs() {
    for e in [chain(1), chain(2), boolean(2)] {
        for f in [chain(1), chain(2), boolean(2)] {
            let r = verify_mapping_theorem(&e, &f).unwrap();
            assert!(r.holds, "{} {}", e.name(), f.name());
            assert_eq!(r.hom_object, r.mapping_complex);
        }
    }
    let r = verify_mapping_theorem(&chain(1), &chain(1)).unwrap();
    assert_eq!(r.mapping_complex, Counts { vertices: 2, edges: 3, marked: 2, triangles: 4 });
}

#[test]
fn mapping_complexes_into_a_pseudo_effect_algebra_are_nerves() {
    let f = non_commutative_pea();
    for e in [chain(1).into_pseudo(), f.clone()] {
        if e.len() * f.len() > 25 {
            continue;
        }
        let mc = mapping_complex(&nerve(&e.to_relfa()).complex, &nerve(&f.to_relfa()).complex).unwrap();
        assert!(recognize_nerve(&mc.complex).pass, "[{}, {}]", e.name(), f.name());
        let flags = classify(&nerve_to_algebra(&mc.complex).unwrap());
        assert!(flags.cancellative.holds);
    }
}

#[test]
fn evaluation_is_a_fibration() {
    let pea = non_commutative_pea();
    let pairs = [(chain(1).into_pseudo(), chain(2).into_pseudo()), (chain(1).into_pseudo(), pea)];
    for (e, f) in pairs {
        let r = eval_fibration_check(&e, &f).unwrap();
        assert!(r.pass, "{}: {:?}", r.subject, r.first_failure());
    }
}

#[test]
fn enriched_composition_is_associative_and_unital() {
    let (e, f, g, h) = (chain(1).into_pseudo(), chain(2).into_pseudo(), chain(1).into_pseudo(), boolean(2).into_pseudo());
    let efg = enriched_compose(&e, &f, &g).unwrap();
    let fgh = enriched_compose(&f, &g, &h).unwrap();
    let egh = enriched_compose(&e, &g, &h).unwrap();
    let efh = enriched_compose(&e, &f, &h).unwrap();
    for c in [&efg, &fgh, &egh, &efh] {
        assert!(c.is_morphism());
    }
    for x in pm_morphisms(&e, &f) {
        let vx = vertex_of_morphism(&efg.right, &x).unwrap();
        for y in pm_morphisms(&f, &g) {
            let vy = vertex_of_morphism(&efg.left, &y).unwrap();
            let yx = efg.compose_vertices(vy, vx);
            assert_eq!(Some(yx), vertex_of_morphism(&efg.out, &x.then(&y)));
            for z in pm_morphisms(&g, &h) {
                let vz = vertex_of_morphism(&fgh.left, &z).unwrap();
                let left = egh.compose_vertices(vz, yx);
                let right = efh.compose_vertices(fgh.compose_vertices(vz, vy), vx);
                assert_eq!(left, right);
            }
        }
    }
    let ff = enriched_compose(&e, &f, &f).unwrap();
    let id = PmMorphism { map: (0..f.len()).collect() };
    let vid = vertex_of_morphism(&ff.left, &id).unwrap();
    for x in 0..ff.right.complex.vertex_count() {
        assert_eq!(ff.compose_vertices(vid, x), x);
    }
}
