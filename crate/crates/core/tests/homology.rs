use fa_core::algebra::catalog::{self, boolean, chain, group_algebra, GroupTable, NAMES};
use fa_core::algebra::enumerate::{enumerate_small, EnumKind, Enumerated};
use fa_core::homology::{
    chain_matrices, full_chain_matrices, h1, h1_full, h1_universal_group, smith_normal_form,
    universal_group_direct, IntMatrix,
};
use fa_core::nerve::nerve;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use proptest::prelude::*;

fn is_diagonal(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m.get(i, j).is_zero()))
}

proptest! {
    #[test]
    fn snf_invariants(rows in 1usize..6, cols in 1usize..6, entries in proptest::collection::vec(-12i64..12, 36)) {
        let data: Vec<Vec<i64>> = (0..rows).map(|i| entries[i * 6..i * 6 + cols].to_vec()).collect();
        let m = IntMatrix::from_rows(&data);
        let s = smith_normal_form(&m);
        prop_assert_eq!(s.u.mul(&m).mul(&s.v), s.d.clone());
        prop_assert!(is_diagonal(&s.d));
        prop_assert_eq!(s.v.mul(&s.v_inv), IntMatrix::identity(cols));
        let f = s.invariant_factors();
        for w in f.windows(2) {
            prop_assert!(w[1].is_multiple_of(&w[0]));
        }
        prop_assert!(f.iter().all(|d| *d > BigInt::zero()));
        // the rank read off the diagonal is the rank over Q
        prop_assert_eq!(s.rank(), f.len());
        prop_assert_eq!(rational_rank(&data), f.len());
    }
}

/// Rank over Q by fraction-free elimination with i128.
fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][c] != 0) else { continue };
        m.swap(rank, p);
        for r in rank + 1..m.len() {
            let (a, b) = (m[rank][c], m[r][c]);
            for k in 0..cols {
                m[r][k] = m[r][k] * a - m[rank][k] * b;
            }
            let g = m[r].iter().fold(0i128, |g, &x| g.gcd(&x));
            if g > 1 {
                m[r].iter_mut().for_each(|x| *x /= g);
            }
        }
        rank += 1;
    }
    rank
}

#[test]
fn boundary_squares_to_zero() {
    for name in NAMES {
        let x = nerve(&catalog::lookup(name).unwrap().relfa()).complex;
        for c in [chain_matrices(&x), full_chain_matrices(&x)] {
            assert!(c.d1.mul(&c.d2).is_zero(), "{name}");
        }
    }
}

#[test]
fn normalized_and_full_chains_agree() {
    for name in NAMES {
        let x = nerve(&catalog::lookup(name).unwrap().relfa()).complex;
        assert!(h1(&x).same_group(&h1_full(&x)), "{name}: {} vs {}", h1(&x), h1_full(&x));
    }
}

#[test]
fn direct_presentation_matches_nerve() {
    for name in NAMES {
        if let Some(e) = catalog::lookup(name).unwrap().effect_algebra() {
            let (a, b) = (h1_universal_group(e), universal_group_direct(e));
            assert!(a.same_group(&b), "{name}: {a} vs {b}");
        }
    }
    for n in 1..=5 {
        for x in enumerate_small(n, EnumKind::EffectAlgebra).unwrap() {
            let Enumerated::Effect(e) = x else { panic!("effect algebras expected") };
            assert!(h1_universal_group(&e).same_group(&universal_group_direct(&e)), "{}", e.name());
        }
    }
}

#[test]
fn chains_and_booleans() {
    for n in 1..=5 {
        assert_eq!(h1_universal_group(&chain(n)).to_string(), "Z");
    }
    for k in 1..=3 {
        let g = h1_universal_group(&boolean(k));
        assert_eq!(g.rank, k as usize);
        assert!(g.torsion.is_empty());
    }
}

#[test]
fn cyclic_groups_give_torsion() {
    for n in 2..=5 {
        let x = nerve(&group_algebra(&GroupTable::cyclic(n))).complex;
        assert_eq!(h1(&x).to_string(), format!("Z/{n}"));
    }
    // abelianization of S3 is Z/2
    let s3 = nerve(&group_algebra(&GroupTable::symmetric3())).complex;
    assert_eq!(h1(&s3).to_string(), "Z/2");
}

#[test]
fn horizontal_sums_glue_chains() {
    // two copies of chain(2) share 0 and 1; the generators of the copies
    // are identified through [1] = 2[a] = 2[a']
    let e = catalog::lookup("chain(2)+chain(2)").unwrap();
    let g = h1_universal_group(e.effect_algebra().unwrap());
    assert_eq!(g.rank, 1);
    assert_eq!(g.torsion.len(), 1);
    assert_eq!(g.torsion[0], BigInt::from(2));
}
