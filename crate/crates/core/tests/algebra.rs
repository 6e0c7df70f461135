use fa_core::algebra::catalog::{self, boolean, chain, NAMES};
use fa_core::algebra::enumerate::{enumerate_small, EnumKind, Enumerated};
use fa_core::algebra::iso::relfa_isomorphism;
use fa_core::algebra::validate::{holds, is_effect_algebra, validate_effect_algebra};
use fa_core::algebra::{validate, Carrier, Kind, PartialAlgebra, RelFa, Structure};
use fa_core::Status;

fn indices(c: &Carrier, names: &[String]) -> Vec<usize> {
    names.iter().map(|n| c.lookup(n).expect("counterexample names resolve")).collect()
}

/// Every reported counterexample really violates its axiom.
fn check_counterexamples(kind: Kind, s: &Structure, carrier: &Carrier) {
    let report = validate(kind, s).unwrap();
    for v in report.axioms.iter().filter(|v| v.status == Status::Fail) {
        let Some(cx) = &v.counterexample else { continue };
        let t = indices(carrier, cx);
        assert_eq!(holds(kind, s, &v.name, &t), Some(false), "{} {}: {:?}", s.name(), v.name, cx);
    }
    for v in report.axioms.iter().filter(|v| v.status == Status::Pass) {
        assert!(v.counterexample.is_none());
    }
}

#[test]
fn counterexamples_resubstitute_for_candidates() {
    for n in 1..=3 {
        for x in enumerate_small(n, EnumKind::FrobeniusCandidates).unwrap() {
            let r = x.relfa();
            let s = Structure::Rel(r.clone());
            check_counterexamples(Kind::RelMonoid, &s, r.carrier());
            check_counterexamples(Kind::Frobenius, &s, r.carrier());
        }
    }
}

#[test]
fn counterexamples_resubstitute_for_tables() {
    let pea = enumerate_small(5, EnumKind::PseudoEffectAlgebra).unwrap();
    for x in pea {
        let Enumerated::Pseudo(p) = x else { panic!("pseudo effect algebras expected") };
        let t: PartialAlgebra = (*p).clone();
        let s = Structure::Table(t.clone());
        check_counterexamples(Kind::EffectAlgebra, &s, t.carrier());
        check_counterexamples(Kind::PseudoEffectAlgebra, &s, t.carrier());
    }
    // a table with a broken supplement
    let names = |v: &[&str]| v.iter().map(|s| s.to_string()).collect::<Vec<_>>();
    let sums: Vec<[String; 3]> = [["0", "0", "0"], ["0", "a", "a"], ["a", "0", "a"], ["0", "1", "1"], ["1", "0", "1"]]
        .iter()
        .map(|t| t.map(String::from))
        .collect();
    let t = PartialAlgebra::from_names("broken", names(&["0", "a", "1"]), "0", "1", &sums).unwrap();
    assert!(!is_effect_algebra(&t));
    check_counterexamples(Kind::EffectAlgebra, &Structure::Table(t.clone()), t.carrier());
}

#[test]
fn catalog_entries_validate() {
    for name in NAMES {
        let item = catalog::lookup(name).unwrap();
        let r = item.relfa();
        assert!(validate(Kind::Frobenius, &Structure::Rel(r.clone())).unwrap().pass, "{name}");
        if let Some(e) = item.effect_algebra() {
            assert!(validate_effect_algebra(e).pass, "{name}");
            assert!(validate(Kind::PseudoEffectAlgebra, &Structure::Table(e.table().clone())).unwrap().pass);
        }
    }
}

#[test]
fn boolean_sums_count_disjoint_pairs() {
    // a ⊕ b is defined exactly for disjoint subsets: 3^k ordered pairs
    for k in 1..=3u32 {
        assert_eq!(boolean(k).sum_names().len(), 3usize.pow(k));
    }
    // in chain(n), i ⊕ j is defined iff i + j ≤ n
    for n in 1..=5u32 {
        let pairs = (0..=n).flat_map(|i| (0..=n).map(move |j| i + j)).filter(|&s| s <= n).count();
        assert_eq!(chain(n).sum_names().len(), pairs);
    }
}

/// All commutative tables on {0, x1, .., x(n-2), 1} with 0 as unit,
/// filtered by the effect algebra axioms and reduced up to isomorphism.
fn brute_force_effect_algebras(n: usize) -> Vec<RelFa> {
    let nonzero: Vec<usize> = (1..n).collect();
    let cells: Vec<(usize, usize)> =
        nonzero.iter().flat_map(|&a| nonzero.iter().filter(move |&&b| b >= a).map(move |&b| (a, b))).collect();
    let names: Vec<String> = (0..n).map(|i| format!("e{i}")).collect();
    let mut found: Vec<RelFa> = Vec::new();
    let total = (n + 1).pow(cells.len() as u32);
    for code in 0..total {
        let mut sum = vec![None; n * n];
        for b in 0..n {
            sum[b] = Some(b);
            sum[b * n] = Some(b);
        }
        let mut c = code;
        for &(a, b) in &cells {
            let v = c % (n + 1);
            c /= n + 1;
            let v = (v < n).then_some(v);
            sum[a * n + b] = v;
            sum[b * n + a] = v;
        }
        let t = PartialAlgebra::new("t", Carrier::new(names.clone()).unwrap(), 0, n - 1, sum);
        if !is_effect_algebra(&t) {
            continue;
        }
        let r = t.graph_relfa();
        if !found.iter().any(|f| relfa_isomorphism(f, &r).is_some()) {
            found.push(r);
        }
    }
    found
}

#[test]
fn enumerated_effect_algebras_match_brute_force() {
    for n in 1..=4 {
        let oracle = brute_force_effect_algebras(n);
        let got = enumerate_small(n, EnumKind::EffectAlgebra).unwrap();
        assert_eq!(got.len(), oracle.len(), "size {n}");
        for x in &got {
            let r = x.relfa();
            assert!(oracle.iter().any(|o| relfa_isomorphism(o, &r).is_some()));
        }
    }
}

#[test]
fn enumeration_has_no_isomorphic_duplicates() {
    for kind in [EnumKind::EffectAlgebra, EnumKind::PseudoEffectAlgebra, EnumKind::Frobenius] {
        for n in 1..=4 {
            let xs: Vec<RelFa> = enumerate_small(n, kind).unwrap().iter().map(Enumerated::relfa).collect();
            for i in 0..xs.len() {
                for j in i + 1..xs.len() {
                    assert!(relfa_isomorphism(&xs[i], &xs[j]).is_none(), "{kind} {n}: {i} ≅ {j}");
                }
            }
        }
    }
}

#[test]
fn enumeration_bound_is_enforced() {
    assert!(enumerate_small(6, EnumKind::EffectAlgebra).is_err());
    assert!(enumerate_small(0, EnumKind::EffectAlgebra).is_err());
}

#[test]
fn a_non_commutative_pseudo_effect_algebra_exists_at_five() {
    let found = enumerate_small(5, EnumKind::PseudoEffectAlgebra).unwrap();
    let nc: Vec<_> = found
        .iter()
        .filter_map(|x| match x {
            Enumerated::Pseudo(p) if !p.is_commutative() => Some(p),
            _ => None,
        })
        .collect();
    assert!(!nc.is_empty());
    for p in nc {
        let t: PartialAlgebra = (**p).clone();
        let report = validate_effect_algebra(&t);
        assert_eq!(report.first_failure(), Some("commutativity"));
    }
}
