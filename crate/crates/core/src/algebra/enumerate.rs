//! Exhaustive enumeration of small structures, one per isomorphism class.
//!
//! Generation is orderly: every labelled structure in a restricted normal
//! form is produced, and it is kept only when its code is lexicographically
//! least among all relabellings. Tables fix 0 at index 0 and 1 at the last
//! index; relational monoids list their units first.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

use super::validate::{is_effect_algebra, is_frobenius, is_pseudo_effect_algebra};
use super::{Carrier, EffectAlgebra, PartialAlgebra, PseudoEffectAlgebra, RelFa, Ternary};

pub const DEFAULT_BOUND: usize = 5;

/// Above this size relational monoids are generated with single-valued μ only.
pub const MULTIVALUED_LIMIT: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnumKind {
    EffectAlgebra,
    PseudoEffectAlgebra,
    /// Frobenius algebras with δ derived from μ and ε.
    Frobenius,
    /// Every relational monoid paired with every ε ⊆ A, whether or not the
    /// result is Frobenius.
    FrobeniusCandidates,
}

impl FromStr for EnumKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "effect-algebra" => Ok(EnumKind::EffectAlgebra),
            "pseudo-effect-algebra" => Ok(EnumKind::PseudoEffectAlgebra),
            "frobenius" => Ok(EnumKind::Frobenius),
            "frobenius-candidates" => Ok(EnumKind::FrobeniusCandidates),
            _ => Err(Error::input("kind", format!("unknown enumeration kind `{s}`"))),
        }
    }
}

impl fmt::Display for EnumKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnumKind::EffectAlgebra => "effect-algebra",
            EnumKind::PseudoEffectAlgebra => "pseudo-effect-algebra",
            EnumKind::Frobenius => "frobenius",
            EnumKind::FrobeniusCandidates => "frobenius-candidates",
        })
    }
}

#[derive(Clone, Debug)]
pub enum Enumerated {
    Effect(EffectAlgebra),
    Pseudo(PseudoEffectAlgebra),
    Rel(RelFa),
}

impl Enumerated {
    pub fn relfa(&self) -> RelFa {
        match self {
            Enumerated::Effect(e) => e.to_relfa(),
            Enumerated::Pseudo(p) => p.to_relfa(),
            Enumerated::Rel(r) => r.clone(),
        }
    }
}

pub fn enumerate_small(n: usize, kind: EnumKind) -> Result<Vec<Enumerated>> {
    enumerate_bounded(n, kind, DEFAULT_BOUND)
}

pub fn enumerate_bounded(n: usize, kind: EnumKind, bound: usize) -> Result<Vec<Enumerated>> {
    if n == 0 {
        return Err(Error::Precondition("size must be at least 1".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded(format!("size {n} exceeds the bound {bound}")));
    }
    Ok(match kind {
        EnumKind::EffectAlgebra => tables(n, true)
            .into_iter()
            .map(|t| Enumerated::Effect(EffectAlgebra::new(t).expect("checked")))
            .collect(),
        EnumKind::PseudoEffectAlgebra => tables(n, false)
            .into_iter()
            .map(|t| Enumerated::Pseudo(PseudoEffectAlgebra::new(t).expect("checked")))
            .collect(),
        EnumKind::Frobenius => epsilon_monoids(n, true).into_iter().map(Enumerated::Rel).collect(),
        EnumKind::FrobeniusCandidates => epsilon_monoids(n, false).into_iter().map(Enumerated::Rel).collect(),
    })
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.is_empty() {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn table_names(n: usize) -> Vec<String> {
    if n == 1 {
        return vec!["0".into()];
    }
    let mut names = vec!["0".to_string()];
    names.extend((0..n - 2).map(|i| char::from(b'a' + i as u8).to_string()));
    names.push("1".into());
    names
}

fn table_code(sum: &[Option<usize>]) -> Vec<u8> {
    sum.iter().map(|c| c.map_or(0, |c| c as u8 + 1)).collect()
}

/// Tables on n elements with 0 = index 0 and 1 = index n - 1 that pass the
/// (pseudo) effect algebra axioms and are canonical.
fn tables(n: usize, commutative: bool) -> Vec<PartialAlgebra> {
    let kind = if commutative { "ea" } else { "pea" };
    if n == 1 {
        let t = PartialAlgebra::new(format!("{kind}({n})#0"), Carrier::new(table_names(1)).unwrap(), 0, 0, vec![Some(0)]);
        return vec![t];
    }
    let one = n - 1;
    let middle: Vec<usize> = (1..one).collect();
    let mut base = vec![None; n * n];
    for x in 0..n {
        base[x] = Some(x);
        base[x * n] = Some(x);
    }
    let cells: Vec<(usize, usize)> = middle
        .iter()
        .flat_map(|&i| middle.iter().map(move |&j| (i, j)))
        .filter(|&(i, j)| !commutative || i <= j)
        .collect();
    let perms: Vec<Vec<usize>> = permutations(&middle)
        .into_iter()
        .map(|m| {
            let mut p = vec![0];
            p.extend(m);
            p.push(one);
            p
        })
        .collect();
    let mut out = Vec::new();
    let mut sum = base;
    fill(&cells, 0, n, commutative, &mut sum, &mut |sum| {
        let t = PartialAlgebra::new("", Carrier::numbered(n), 0, one, sum.to_vec());
        let ok = if commutative { is_effect_algebra(&t) } else { is_pseudo_effect_algebra(&t) };
        if !ok {
            return;
        }
        let code = table_code(sum);
        let canonical = perms.iter().all(|p| table_code(t.permuted(p).raw_table()) >= code);
        if canonical {
            let name = format!("{kind}({n})#{}", out.len());
            out.push(PartialAlgebra::new(name, Carrier::new(table_names(n)).unwrap(), 0, one, sum.to_vec()));
        }
    });
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    n: usize,
    commutative: bool,
    sum: &mut Vec<Option<usize>>,
    leaf: &mut dyn FnMut(&[Option<usize>]),
) {
    if k == cells.len() {
        leaf(sum);
        return;
    }
    let (i, j) = cells[k];
    let options = std::iter::once(None).chain((1..n).filter(|&c| c != i && c != j).map(Some));
    for v in options {
        sum[i * n + j] = v;
        if commutative {
            sum[j * n + i] = v;
        }
        fill(cells, k + 1, n, commutative, sum, leaf);
    }
    sum[i * n + j] = None;
    if commutative {
        sum[j * n + i] = None;
    }
}

/// Orderly code of an ε-monoid: units (as 0) first, then ε, then μ cells as
/// bit masks.
fn monoid_code(eta: &[bool], epsilon: &[bool], mu: &Ternary) -> Vec<u32> {
    let n = eta.len();
    let mut code: Vec<u32> = eta.iter().map(|&u| u32::from(!u)).collect();
    code.extend(epsilon.iter().map(|&e| u32::from(e)));
    for a in 0..n {
        for b in 0..n {
            code.push(mu.get(a, b).iter().fold(0, |m, &c| m | (1 << c)));
        }
    }
    code
}

struct MonoidSearch {
    n: usize,
    multivalued: bool,
    cells: Vec<(usize, usize, Vec<u32>)>,
    mu: Vec<u32>,
    assigned: Vec<bool>,
}

impl MonoidSearch {
    fn get(&self, a: usize, b: usize) -> u32 {
        self.mu[a * self.n + b]
    }

    /// Associativity on (a, b, c) for every d, when all cells it reads are set.
    fn associative_where_known(&self, a: usize, b: usize, c: usize) -> bool {
        let n = self.n;
        let known = |x: usize, y: usize| self.assigned[x * n + y];
        if !known(a, b) || !known(b, c) {
            return true;
        }
        let ab = self.get(a, b);
        let bc = self.get(b, c);
        if (0..n).any(|x| ab >> x & 1 == 1 && !known(x, c)) || (0..n).any(|y| bc >> y & 1 == 1 && !known(a, y)) {
            return true;
        }
        let lhs = (0..n).filter(|&x| ab >> x & 1 == 1).fold(0, |m, x| m | self.get(x, c));
        let rhs = (0..n).filter(|&y| bc >> y & 1 == 1).fold(0, |m, y| m | self.get(a, y));
        lhs == rhs
    }

    fn run(&mut self, k: usize, leaf: &mut dyn FnMut(&[u32])) {
        if k == self.cells.len() {
            leaf(&self.mu);
            return;
        }
        let (a, b) = (self.cells[k].0, self.cells[k].1);
        let n = self.n;
        for i in 0..self.cells[k].2.len() {
            self.mu[a * n + b] = self.cells[k].2[i];
            self.assigned[a * n + b] = true;
            let ok = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| self.associative_where_known(x, y, z))));
            if ok {
                self.run(k + 1, leaf);
            }
        }
        self.mu[a * n + b] = 0;
        self.assigned[a * n + b] = false;
    }
}

/// Relational monoids on n elements with units 0..k listed first, each paired
/// with every ε. With `frobenius_only` only Frobenius algebras are kept.
fn epsilon_monoids(n: usize, frobenius_only: bool) -> Vec<RelFa> {
    let perms = permutations(&(0..n).collect::<Vec<_>>());
    let multivalued = n <= MULTIVALUED_LIMIT;
    let mut out = Vec::new();
    for k in 1..=n {
        let others: Vec<usize> = (k..n).collect();
        // endpoints (source, target) for each non-unit
        let mut ends = vec![(0usize, 0usize); n];
        for u in 0..k {
            ends[u] = (u, u);
        }
        let choices = k * k;
        let total = choices.pow(others.len() as u32);
        for code in 0..total {
            let mut c = code;
            for &x in &others {
                ends[x] = ((c % choices) / k, (c % choices) % k);
                c /= choices;
            }
            let mut search = MonoidSearch {
                n,
                multivalued,
                cells: Vec::new(),
                mu: vec![0; n * n],
                assigned: vec![false; n * n],
            };
            for a in 0..n {
                for b in 0..n {
                    let (sa, ta) = ends[a];
                    let (sb, tb) = ends[b];
                    let forced = if a < k && b < k {
                        Some(if a == b { 1 << a } else { 0 })
                    } else if a < k {
                        Some(if a == tb { 1 << b } else { 0 })
                    } else if b < k {
                        Some(if b == sa { 1 << a } else { 0 })
                    } else if sa != tb {
                        Some(0)
                    } else {
                        None
                    };
                    match forced {
                        Some(m) => {
                            search.mu[a * n + b] = m;
                            search.assigned[a * n + b] = true;
                        }
                        None => {
                            let fits: Vec<usize> = (0..n).filter(|&c| ends[c].0 == sb && ends[c].1 == ta).collect();
                            let options = if search.multivalued {
                                (0..1u32 << fits.len())
                                    .map(|m| fits.iter().enumerate().filter(|(i, _)| m >> i & 1 == 1).fold(0, |acc, (_, &c)| acc | 1 << c))
                                    .collect()
                            } else {
                                std::iter::once(0).chain(fits.iter().map(|&c| 1 << c)).collect()
                            };
                            search.cells.push((a, b, options));
                        }
                    }
                }
            }
            // cells fixed by units still have to be checked against each other
            let ok = (0..n).all(|x| (0..n).all(|y| (0..n).all(|z| search.associative_where_known(x, y, z))));
            if !ok {
                continue;
            }
            let eta: Vec<bool> = (0..n).map(|x| x < k).collect();
            search.run(0, &mut |mu_bits| {
                let mu = Ternary::from_triples(
                    n,
                    (0..n * n).flat_map(|ab| (0..n).filter(move |&c| mu_bits[ab] >> c & 1 == 1).map(move |c| (ab / n, ab % n, c))),
                );
                for eps_bits in 0u32..1 << n {
                    let epsilon: Vec<bool> = (0..n).map(|x| eps_bits >> x & 1 == 1).collect();
                    let own = monoid_code(&eta, &epsilon, &mu);
                    let canonical = perms.iter().all(|p| {
                        let mut pe = vec![false; n];
                        let mut pf = vec![false; n];
                        for x in 0..n {
                            pe[p[x]] = eta[x];
                            pf[p[x]] = epsilon[x];
                        }
                        monoid_code(&pe, &pf, &mu.permuted(p)) >= own
                    });
                    if !canonical {
                        continue;
                    }
                    let kind = if frobenius_only { "fa" } else { "candidate" };
                    let a = RelFa::with_derived_delta(
                        format!("{kind}({n})#{}", out.len()),
                        Carrier::numbered(n),
                        mu.clone(),
                        eta.clone(),
                        epsilon,
                    );
                    if !frobenius_only || is_frobenius(&a) {
                        out.push(a);
                    }
                }
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(n: usize, kind: EnumKind) -> usize {
        enumerate_small(n, kind).unwrap().len()
    }

    #[test]
    fn size_one_is_the_trivial_algebra() {
        assert_eq!(count(1, EnumKind::EffectAlgebra), 1);
        assert_eq!(count(1, EnumKind::Frobenius), 1);
    }

    #[test]
    fn size_two_effect_algebra_is_unique() {
        assert_eq!(count(2, EnumKind::EffectAlgebra), 1);
    }

    #[test]
    fn bound_is_enforced() {
        assert!(matches!(enumerate_bounded(6, EnumKind::EffectAlgebra, 5), Err(Error::BoundExceeded(_))));
    }
}
