//! Morphisms of partial monoids and their conjugates.

use serde::Serialize;

use crate::algebra::{PartialAlgebra, PseudoEffectAlgebra};
use crate::error::{Error, Result};

/// A map of carriers preserving 0 and every defined sum; 1 need not be
/// preserved.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct PmMorphism {
    pub map: Vec<usize>,
}

impl PmMorphism {
    pub fn apply(&self, a: usize) -> usize {
        self.map[a]
    }

    pub fn is_morphism(&self, e: &PartialAlgebra, f: &PartialAlgebra) -> bool {
        self.map.len() == e.len()
            && self.map[e.zero()] == f.zero()
            && e.sums().all(|(a, b, c)| f.sum(self.map[a], self.map[b]) == Some(self.map[c]))
    }

    pub fn preserves_one(&self, e: &PartialAlgebra, f: &PartialAlgebra) -> bool {
        self.map[e.one()] == f.one()
    }

    pub fn then(&self, g: &PmMorphism) -> PmMorphism {
        PmMorphism { map: self.map.iter().map(|&x| g.map[x]).collect() }
    }

    /// `a↦x` pairs by name.
    pub fn describe(&self, e: &PartialAlgebra, f: &PartialAlgebra) -> String {
        let parts: Vec<String> =
            (0..e.len()).map(|a| format!("{}↦{}", e.element(a), f.element(self.map[a]))).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Elements that are not a sum of two nonzero elements, then the rest.
fn assignment_order(e: &PartialAlgebra) -> Vec<usize> {
    let zero = e.zero();
    let composite: Vec<bool> =
        (0..e.len()).map(|c| e.sums().any(|(a, b, s)| s == c && a != zero && b != zero)).collect();
    let mut order: Vec<usize> = (0..e.len()).filter(|&a| a != zero && !composite[a]).collect();
    order.extend((0..e.len()).filter(|&a| a != zero && composite[a]));
    order
}

/// Close a partial assignment under the sums of `e`; false on conflict.
fn propagate(e: &PartialAlgebra, f: &PartialAlgebra, h: &mut [Option<usize>]) -> bool {
    loop {
        let mut changed = false;
        for (a, b, c) in e.sums() {
            let (Some(x), Some(y)) = (h[a], h[b]) else { continue };
            let Some(s) = f.sum(x, y) else { return false };
            match h[c] {
                Some(z) if z != s => return false,
                Some(_) => {}
                None => {
                    h[c] = Some(s);
                    changed = true;
                }
            }
        }
        if !changed {
            return true;
        }
    }
}

fn search(
    e: &PartialAlgebra,
    f: &PartialAlgebra,
    order: &[usize],
    h: &mut Vec<Option<usize>>,
    out: &mut Vec<PmMorphism>,
) {
    let Some(&a) = order.iter().find(|&&a| h[a].is_none()) else {
        out.push(PmMorphism { map: h.iter().map(|x| x.expect("complete")).collect() });
        return;
    };
    for x in 0..f.len() {
        let mut next = h.clone();
        next[a] = Some(x);
        if propagate(e, f, &mut next) {
            search(e, f, order, &mut next, out);
        }
    }
}

/// Every partial monoid morphism E → F, sorted by image vector.
pub fn pm_morphisms(e: &PartialAlgebra, f: &PartialAlgebra) -> Vec<PmMorphism> {
    let mut h = vec![None; e.len()];
    h[e.zero()] = Some(f.zero());
    let mut out = Vec::new();
    if propagate(e, f, &mut h) {
        search(e, f, &assignment_order(e), &mut h, &mut out);
    }
    out.sort();
    out.dedup();
    out
}

/// The morphism g with b ⊕ f(a) = g(a) ⊕ b for every a, for b ∈ [0, f(1)⁻].
pub fn conjugate(e: &PartialAlgebra, f_alg: &PseudoEffectAlgebra, f: &PmMorphism, b: usize) -> Result<PmMorphism> {
    let top = f.apply(e.one());
    if !f_alg.is_defined(b, top) {
        return Err(Error::Precondition(format!(
            "{} is not below {}⁻",
            f_alg.element(b),
            f_alg.element(top)
        )));
    }
    let map = (0..e.len())
        .map(|a| {
            let target = f_alg.sum(b, f.apply(a)).expect("b ⊕ f(a) is below b ⊕ f(1)");
            f_alg
                .left_difference(b, target)
                .ok_or_else(|| Error::Contract(format!("no conjugate of {} by {}", e.element(a), f_alg.element(b))))
        })
        .collect::<Result<Vec<usize>>>()?;
    let g = PmMorphism { map };
    if !g.is_morphism(e, f_alg) {
        return Err(Error::Contract("conjugate is not a morphism of partial monoids".into()));
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::catalog::{boolean, chain};

    #[test]
    fn counts() {
        assert_eq!(pm_morphisms(&chain(1), &chain(1)).len(), 2);
        assert_eq!(pm_morphisms(&boolean(2), &chain(1)).len(), 3);
    }

    #[test]
    fn conjugation_by_zero_is_trivial() {
        let (e, f) = (chain(2), chain(3));
        for h in pm_morphisms(&e, &f) {
            assert_eq!(conjugate(&e, &f, &h, f.zero()).unwrap(), h);
        }
    }
}
