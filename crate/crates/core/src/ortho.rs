//! The internal lifting relation ⊡ of a Frobenius algebra, right-inverse
//! analysis, and recognition of effect algebras, orthoalgebras and
//! orthomodular posets among relational Frobenius algebras.
//!
//! Throughout, a ⊥ b means μ(b, a) ≠ ∅ (b can follow a).

use serde::Serialize;

use crate::algebra::{EffectAlgebra, PartialAlgebra, RelFa};
use crate::error::{Error, Result};
use crate::nerve::nerve;
use crate::simplicial::{check_lifting, make_shape, LiftMode};

/// Boolean matrix over ordered pairs of carrier elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoxslashRelation {
    pub elements: Vec<String>,
    /// Row-major: entry a * n + b.
    pub matrix: Vec<bool>,
}

impl BoxslashRelation {
    fn from_fn(elements: Vec<String>, f: impl Fn(usize, usize) -> bool) -> Self {
        let n = elements.len();
        let matrix = (0..n * n).map(|i| f(i / n, i % n)).collect();
        BoxslashRelation { elements, matrix }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, a: usize, b: usize) -> bool {
        self.matrix[a * self.len() + b]
    }

    /// Pairs in the relation, lexicographically.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.len();
        (0..n * n).filter(|&i| self.matrix[i]).map(|i| (i / n, i % n)).collect()
    }

    /// First pair where the two relations disagree.
    pub fn first_difference(&self, other: &BoxslashRelation) -> Option<(usize, usize)> {
        let n = self.len();
        (0..n * n).find(|&i| self.matrix[i] != other.matrix[i]).map(|i| (i / n, i % n))
    }
}

/// a ⊡ b: whenever μ(q, a) ∋ d and μ(b, p) ∋ d there is l with μ(l, a) ∋ p
/// and μ(b, l) ∋ q.
pub fn boxslash(f: &RelFa, a: usize, b: usize) -> bool {
    let mu = f.mu();
    let n = f.len();
    for q in 0..n {
        for &d in mu.get(q, a) {
            for p in 0..n {
                if !mu.contains(b, p, d) {
                    continue;
                }
                if !(0..n).any(|l| mu.contains(l, a, p) && mu.contains(b, l, q)) {
                    return false;
                }
            }
        }
    }
    true
}

/// ⊡ by exhaustive search over p, q, d, l.
pub fn boxslash_relation(f: &RelFa) -> BoxslashRelation {
    BoxslashRelation::from_fn(f.carrier().names().to_vec(), |a, b| boxslash(f, a, b))
}

/// a ⊥ b and a ⊕ b = a ∨ b, read off the sum table and the derived order.
pub fn boxslash_order_oracle(e: &EffectAlgebra) -> BoxslashRelation {
    BoxslashRelation::from_fn(e.carrier().names().to_vec(), |a, b| match e.sum(a, b) {
        Some(s) => e.join(a, b) == Some(s),
        None => false,
    })
}

/// a ⊥ b, i.e. μ(b, a) ≠ ∅.
pub fn perp(f: &RelFa, a: usize, b: usize) -> bool {
    f.mu().is_defined(b, a)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InverseAnalysis {
    pub element: String,
    /// Some c with μ(a, c) meeting η.
    pub right_inverse: Option<String>,
    /// Every b starting at the target of a can follow a.
    pub perp_all_at_target: bool,
    /// Some counit can follow a.
    pub epsilon_perp: bool,
    #[serde(rename = "F_boxslash_a")]
    pub f_boxslash_a: bool,
    pub epsilon_boxslash_a: bool,
    pub cancellative: bool,
    /// Whether all five conditions agree; only asserted for cancellative
    /// algebras, where it is expected to hold.
    pub all_agree: bool,
}

impl InverseAnalysis {
    /// The three conditions that are equivalent in every Frobenius algebra.
    pub fn first_three_agree(&self) -> bool {
        let i = self.right_inverse.is_some();
        i == self.perp_all_at_target && i == self.epsilon_perp
    }
}

pub fn inverse_analysis(f: &RelFa, a: usize) -> InverseAnalysis {
    let n = f.len();
    let right_inverse = (0..n).find(|&c| f.mu().get(a, c).iter().any(|&r| f.is_unit(r)));
    let ta = f.target(a);
    let perp_all_at_target = (0..n).filter(|&b| f.source(b) == ta && ta.is_some()).all(|b| perp(f, a, b));
    let epsilon_perp = f.counits().into_iter().any(|e| perp(f, a, e));
    let f_boxslash_a = (0..n).all(|b| boxslash(f, b, a));
    let epsilon_boxslash_a = f.counits().into_iter().all(|e| boxslash(f, e, a));
    let flags = [right_inverse.is_some(), perp_all_at_target, epsilon_perp, f_boxslash_a, epsilon_boxslash_a];
    InverseAnalysis {
        element: f.element(a).to_string(),
        right_inverse: right_inverse.map(|c| f.element(c).to_string()),
        perp_all_at_target,
        epsilon_perp,
        f_boxslash_a,
        epsilon_boxslash_a,
        cancellative: cancellation_failure(f).is_none(),
        all_agree: flags.iter().all(|&x| x == flags[0]),
    }
}

/// A flag with an optional witness of failure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Flag {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<String>>,
}

impl Flag {
    fn from_witness(f: &RelFa, w: Option<Vec<usize>>) -> Self {
        Flag { holds: w.is_none(), witness: w.map(|t| f.carrier().label(&t)) }
    }
}

/// Order-theoretic values of the orthoalgebra and orthomodular conditions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderOracle {
    /// a ⊥ a implies a = 0.
    pub orthoalgebra: Flag,
    /// a ⊥ b implies a ⊕ b = a ∨ b.
    pub orthomodular_poset: Flag,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationFlags {
    pub subject: String,
    pub commutative: Flag,
    pub cancellative: Flag,
    pub epsilon_boxslash_is_eta: Flag,
    pub eta_singleton: Flag,
    pub effect_algebra: bool,
    /// Every e ∈ ε has e^⊡ a singleton.
    pub counit_boxslash_singletons: Flag,
    /// Only computed for effect algebras.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthoalgebra: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orthomodular_poset: Option<Flag>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order_oracle: Option<OrderOracle>,
    pub braided: Flag,
    pub coherence: Option<Flag>,
}

impl ClassificationFlags {
    /// Orthoalgebra and orthomodular flags coincide with the order oracle.
    pub fn oracle_agrees(&self) -> bool {
        match (&self.orthoalgebra, &self.orthomodular_poset, &self.order_oracle) {
            (Some(oa), Some(omp), Some(o)) => {
                oa.holds == o.orthoalgebra.holds && omp.holds == o.orthomodular_poset.holds
            }
            (None, None, None) => true,
            _ => false,
        }
    }
}

fn first_pair(n: usize, mut bad: impl FnMut(usize, usize) -> bool) -> Option<Vec<usize>> {
    (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).find(|&(a, b)| bad(a, b)).map(|(a, b)| vec![a, b])
}

fn commutativity_failure(f: &RelFa) -> Option<Vec<usize>> {
    first_pair(f.len(), |a, b| f.mu().get(a, b) != f.mu().get(b, a))
}

/// (x, y, y', c) with μ(x, y) ∋ c and μ(x, y') ∋ c, or with μ(y, x) ∋ c
/// and μ(y', x) ∋ c.
fn cancellation_failure(f: &RelFa) -> Option<Vec<usize>> {
    let n = f.len();
    let mu = f.mu();
    for x in 0..n {
        for y in 0..n {
            for y2 in y + 1..n {
                let right = mu.get(x, y).iter().find(|&&c| mu.contains(x, y2, c));
                let left = mu.get(y, x).iter().find(|&&c| mu.contains(y2, x, c));
                if let Some(&c) = right.or(left) {
                    return Some(vec![x, y, y2, c]);
                }
            }
        }
    }
    None
}

/// The set {a : e ⊡ a for every e ∈ ε}.
fn epsilon_boxslash(f: &RelFa, rel: &BoxslashRelation) -> Vec<bool> {
    let counits = f.counits();
    (0..f.len()).map(|a| counits.iter().all(|&e| rel.get(e, a))).collect()
}

/// The sum table of an algebra that passes the characterisation.
pub fn as_effect_algebra(f: &RelFa) -> Result<EffectAlgebra> {
    let units = f.units();
    let counits = f.counits();
    if units.len() != 1 || counits.len() != 1 || !f.mu().is_functional() {
        return Err(Error::Precondition(format!(
            "{} needs a single unit, a single counit and a single-valued μ",
            f.name()
        )));
    }
    let n = f.len();
    let mut sum = vec![None; n * n];
    for (a, b, c) in f.mu().iter() {
        sum[a * n + b] = Some(c);
    }
    EffectAlgebra::new(PartialAlgebra::new(f.name(), f.carrier().clone(), units[0], counits[0], sum))
}

/// Brute-force braiding on μ: every μ(b, a1) ∋ d with a1 a loop has some
/// loop a2 with μ(a2, b) ∋ d (left), and every μ(a2, b) ∋ d with a2 a loop
/// has some loop a1 with μ(b, a1) ∋ d (right). In a pseudo effect algebra
/// every element is a loop.
pub fn braiding_brute_force(f: &RelFa) -> (Flag, Flag) {
    let n = f.len();
    let mu = f.mu();
    let is_loop = |a: usize| f.source(a).is_some() && f.source(a) == f.target(a);
    let mut left = None;
    let mut right = None;
    for b in 0..n {
        for a in (0..n).filter(|&a| is_loop(a)) {
            for &d in mu.get(b, a) {
                if left.is_none() && !(0..n).any(|a2| is_loop(a2) && mu.contains(a2, b, d)) {
                    left = Some(vec![b, a, d]);
                }
            }
            for &d in mu.get(a, b) {
                if right.is_none() && !(0..n).any(|a1| is_loop(a1) && mu.contains(b, a1, d)) {
                    right = Some(vec![b, a, d]);
                }
            }
        }
    }
    (Flag::from_witness(f, left), Flag::from_witness(f, right))
}

/// Braiding as the lifting property of the nerve against both halves of
/// the braiding cylinder.
pub fn braiding_lifting(f: &RelFa) -> (bool, bool) {
    let x = nerve(f).complex;
    let run = |s: &str| check_lifting(&make_shape(s).expect("built-in shape"), &x, LiftMode::Exists).pass;
    (run("braiding-left"), run("braiding-right"))
}

/// Pairwise orthogonal triples have a defined total sum, in both
/// associations.
pub fn coherence_check(e: &EffectAlgebra) -> Flag {
    let n = e.len();
    let total = |a: usize, b: usize, c: usize| {
        let left = e.sum(a, b).and_then(|ab| e.sum(ab, c));
        let right = e.sum(b, c).and_then(|bc| e.sum(a, bc));
        left.is_some() && right.is_some()
    };
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                let pairwise = e.is_defined(a, b) && e.is_defined(b, c) && e.is_defined(a, c);
                if pairwise && !total(a, b, c) {
                    return Flag { holds: false, witness: Some(e.carrier().label(&[a, b, c])) };
                }
            }
        }
    }
    Flag { holds: true, witness: None }
}

fn order_oracle(e: &EffectAlgebra) -> OrderOracle {
    let n = e.len();
    let oa = (0..n).find(|&a| a != e.zero() && e.is_defined(a, a)).map(|a| vec![a]);
    let omp = first_pair(n, |a, b| e.sum(a, b).is_some_and(|s| e.join(a, b) != Some(s)));
    OrderOracle {
        orthoalgebra: Flag { holds: oa.is_none(), witness: oa.map(|t| e.carrier().label(&t)) },
        orthomodular_poset: Flag { holds: omp.is_none(), witness: omp.map(|t| e.carrier().label(&t)) },
    }
}

/// Run every classifier on `f`. The orthoalgebra and orthomodular flags use
/// ⊡ directly and are compared with the order-theoretic conditions on the
/// recovered sum table.
pub fn classify(f: &RelFa) -> ClassificationFlags {
    let n = f.len();
    let rel = boxslash_relation(f);
    let eb = epsilon_boxslash(f, &rel);
    let commutative = Flag::from_witness(f, commutativity_failure(f));
    let cancellative = Flag::from_witness(f, cancellation_failure(f));
    let epsilon_boxslash_is_eta =
        Flag::from_witness(f, (0..n).find(|&a| eb[a] != f.is_unit(a)).map(|a| vec![a]));
    let units = f.units();
    let eta_singleton = Flag {
        holds: units.len() == 1,
        witness: (units.len() != 1).then(|| f.carrier().label(&units)),
    };
    let singleton_failure = f
        .counits()
        .into_iter()
        .find(|&e| (0..n).filter(|&a| rel.get(e, a)).count() != 1)
        .map(|e| vec![e]);
    let counit_boxslash_singletons = Flag::from_witness(f, singleton_failure);
    let effect_algebra =
        commutative.holds && cancellative.holds && epsilon_boxslash_is_eta.holds && eta_singleton.holds;

    let (mut orthoalgebra, mut orthomodular_poset, mut oracle, mut coherence) = (None, None, None, None);
    if effect_algebra {
        match rotation_table(f) {
            Ok(alpha) => {
                let oa = (0..n).find(|&a| !rel.get(a, alpha[a])).map(|a| vec![a]);
                orthoalgebra = Some(Flag::from_witness(f, oa));
                let omp = first_pair(n, |a, b| perp(f, a, b) != rel.get(a, b));
                orthomodular_poset = Some(Flag::from_witness(f, omp));
            }
            Err(_) => {
                orthoalgebra = Some(Flag { holds: false, witness: None });
                orthomodular_poset = Some(Flag { holds: false, witness: None });
            }
        }
        if let Ok(e) = as_effect_algebra(f) {
            oracle = Some(order_oracle(&e));
            coherence = Some(coherence_check(&e));
        }
    }
    let (left, right) = braiding_lifting(f);
    let braided = Flag {
        holds: left && right,
        witness: (!(left && right)).then(|| {
            [("braiding-left", left), ("braiding-right", right)]
                .iter()
                .filter(|(_, ok)| !ok)
                .map(|(s, _)| s.to_string())
                .collect()
        }),
    };
    ClassificationFlags {
        subject: f.name().to_string(),
        commutative,
        cancellative,
        epsilon_boxslash_is_eta,
        eta_singleton,
        effect_algebra,
        counit_boxslash_singletons,
        orthoalgebra,
        orthomodular_poset,
        order_oracle: oracle,
        braided,
        coherence,
    }
}

fn unique<I: Iterator<Item = usize>>(mut it: I) -> Option<usize> {
    let first = it.next()?;
    it.next().is_none().then_some(first)
}

/// The unique l with μ(a, l) ∋ e, where e is the counit ending where a
/// ends: a′ in an effect algebra, a∼ in a pseudo effect algebra.
pub fn rotate_edge(f: &RelFa, a: usize) -> Result<usize> {
    let n = f.len();
    let t = f.target(a);
    let e = unique(f.counits().into_iter().filter(|&e| f.target(e) == t && t.is_some()))
        .ok_or_else(|| Error::Contract(format!("no unique counit ending at the target of {}", f.element(a))))?;
    unique((0..n).filter(|&l| f.mu().contains(a, l, e)))
        .ok_or_else(|| Error::Contract(format!("no unique rotation of {}", f.element(a))))
}

/// The unique m with μ(m, a) ∋ e, where e is the counit starting where a
/// starts: a⁻ in a pseudo effect algebra.
pub fn rotate_edge_inverse(f: &RelFa, a: usize) -> Result<usize> {
    let n = f.len();
    let s = f.source(a);
    let e = unique(f.counits().into_iter().filter(|&e| f.source(e) == s && s.is_some()))
        .ok_or_else(|| Error::Contract(format!("no unique counit starting at the source of {}", f.element(a))))?;
    unique((0..n).filter(|&m| f.mu().contains(m, a, e)))
        .ok_or_else(|| Error::Contract(format!("no unique inverse rotation of {}", f.element(a))))
}

fn rotation_table(f: &RelFa) -> Result<Vec<usize>> {
    (0..f.len()).map(|a| rotate_edge(f, a)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{boolean, chain, group_algebra, GroupTable};

    #[test]
    fn chain_two_one_one() {
        let f = chain(2).to_relfa();
        assert!(!boxslash(&f, 1, 1));
        assert!(boxslash(&f, 0, 1));
    }

    #[test]
    fn group_boxslash_is_total() {
        let f = group_algebra(&GroupTable::cyclic(2));
        assert!(boxslash_relation(&f).matrix.iter().all(|&x| x));
        let c = classify(&f);
        assert!(!c.effect_algebra);
        assert!(!c.epsilon_boxslash_is_eta.holds);
    }

    #[test]
    fn rotations_of_chain() {
        let f = chain(3).to_relfa();
        for a in 0..4 {
            assert_eq!(rotate_edge(&f, a).unwrap(), 3 - a);
            assert_eq!(rotate_edge_inverse(&f, a).unwrap(), 3 - a);
        }
    }

    #[test]
    fn boolean_flags() {
        let c = classify(&boolean(2).to_relfa());
        assert!(c.effect_algebra);
        assert!(c.orthoalgebra.as_ref().unwrap().holds);
        assert!(c.orthomodular_poset.as_ref().unwrap().holds);
        assert!(c.braided.holds);
        assert!(c.oracle_agrees());
    }
}
