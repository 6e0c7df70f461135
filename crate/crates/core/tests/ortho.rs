use fa_core::algebra::catalog::{self, chain, group_algebra, GroupTable, NAMES};
use fa_core::algebra::enumerate::{enumerate_small, EnumKind, Enumerated};
use fa_core::algebra::validate::is_effect_algebra;
use fa_core::algebra::{EffectAlgebra, RelFa};
use fa_core::ortho::{
    as_effect_algebra, boxslash, boxslash_order_oracle, boxslash_relation, braiding_brute_force, braiding_lifting,
    classify, inverse_analysis,
};

fn catalog_effect_algebras() -> Vec<EffectAlgebra> {
    NAMES.iter().filter_map(|n| catalog::lookup(n).unwrap().effect_algebra().cloned()).collect()
}

fn enumerated_effect_algebras(max: usize) -> Vec<EffectAlgebra> {
    (1..=max)
        .flat_map(|n| enumerate_small(n, EnumKind::EffectAlgebra).unwrap())
        .map(|x| match x {
            Enumerated::Effect(e) => e,
            _ => panic!("effect algebras expected"),
        })
        .collect()
}

fn frobenius_algebras(max: usize) -> Vec<RelFa> {
    let mut v: Vec<RelFa> = NAMES.iter().map(|n| catalog::lookup(n).unwrap().relfa()).collect();
    for n in 1..=max {
        v.extend(enumerate_small(n, EnumKind::Frobenius).unwrap().iter().map(Enumerated::relfa));
    }
    v
}

#[test]
fn boxslash_matches_order_oracle() {
    for e in catalog_effect_algebras().into_iter().chain(enumerated_effect_algebras(5)) {
        let (a, b) = (boxslash_relation(&e.to_relfa()), boxslash_order_oracle(&e));
        assert_eq!(a.first_difference(&b), None, "{}", e.name());
    }
}

#[test]
fn classification_flags_match_order_oracle() {
    for e in catalog_effect_algebras().into_iter().chain(enumerated_effect_algebras(5)) {
        let c = classify(&e.to_relfa());
        assert!(c.effect_algebra, "{}", e.name());
        assert!(c.oracle_agrees(), "{}", e.name());
        // order-theoretic conditions evaluated here, independently of the crate
        let n = e.len();
        let oa = (0..n).all(|a| !e.is_defined(a, a) || a == e.zero());
        let omp = (0..n).all(|a| (0..n).all(|b| e.sum(a, b).is_none_or(|s| e.join(a, b) == Some(s))));
        assert_eq!(c.orthoalgebra.unwrap().holds, oa, "{}", e.name());
        assert_eq!(c.orthomodular_poset.unwrap().holds, omp, "{}", e.name());
    }
}

#[test]
fn pasted_orthoalgebra_is_not_orthomodular() {
    let e = catalog::lookup("wright-triangle").unwrap();
    let c = classify(&e.relfa());
    assert!(c.orthoalgebra.as_ref().unwrap().holds);
    assert!(!c.orthomodular_poset.as_ref().unwrap().holds);
    assert!(c.oracle_agrees());
}

#[test]
fn effect_algebra_flag_matches_validation() {
    for r in frobenius_algebras(4) {
        let c = classify(&r);
        let validated = as_effect_algebra(&r).is_ok_and(|e| is_effect_algebra(&e));
        assert_eq!(c.effect_algebra, validated, "{}", r.name());
    }
}

#[test]
fn orthomodular_means_orthogonality_is_boxslash() {
    for e in catalog_effect_algebras() {
        let r = e.to_relfa();
        let c = classify(&r);
        let n = e.len();
        let same = (0..n).all(|a| (0..n).all(|b| e.is_defined(b, a) == boxslash(&r, a, b)));
        assert_eq!(c.orthomodular_poset.unwrap().holds, same, "{}", e.name());
    }
}

#[test]
fn inverse_conditions() {
    for r in frobenius_algebras(4) {
        for a in 0..r.len() {
            let x = inverse_analysis(&r, a);
            assert!(x.first_three_agree(), "{} at {}: {x:?}", r.name(), x.element);
            if x.cancellative {
                assert!(x.all_agree, "{} at {}: {x:?}", r.name(), x.element);
            }
        }
    }
}

#[test]
fn inverse_examples() {
    let e = chain(2).to_relfa();
    let zero = inverse_analysis(&e, 0);
    assert_eq!(zero.right_inverse.as_deref(), Some("0"));
    assert!(zero.all_agree && zero.f_boxslash_a && zero.epsilon_boxslash_a);
    for a in 1..3 {
        let x = inverse_analysis(&e, a);
        assert!(x.right_inverse.is_none());
        assert!(!x.f_boxslash_a && !x.epsilon_boxslash_a);
    }
    let z3 = group_algebra(&GroupTable::cyclic(3));
    for a in 0..3 {
        let x = inverse_analysis(&z3, a);
        let expected = z3.element((3 - a) % 3).to_string();
        assert_eq!(x.right_inverse, Some(expected));
        assert!(x.all_agree);
    }
}

#[test]
fn braiding_brute_force_agrees_with_lifting() {
    let mut algebras = frobenius_algebras(4);
    algebras.extend(enumerate_small(5, EnumKind::PseudoEffectAlgebra).unwrap().iter().map(Enumerated::relfa));
    for r in algebras {
        let (l, rt) = braiding_brute_force(&r);
        assert_eq!((l.holds, rt.holds), braiding_lifting(&r), "{}", r.name());
    }
}

#[test]
fn commutative_catalog_algebras_are_braided() {
    for name in NAMES {
        let r = catalog::lookup(name).unwrap().relfa();
        if classify(&r).commutative.holds {
            assert_eq!(braiding_lifting(&r), (true, true), "{name}");
        }
    }
}

#[test]
fn counit_singletons_iff_unique_unit_and_epsilon_boxslash_eta() {
    for r in frobenius_algebras(4) {
        let c = classify(&r);
        assert_eq!(
            c.epsilon_boxslash_is_eta.holds && c.eta_singleton.holds,
            c.counit_boxslash_singletons.holds,
            "{}",
            r.name()
        );
    }
}
