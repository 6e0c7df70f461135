use std::ops::Deref;

use serde::Serialize;

use crate::error::{Error, Result};

use super::validate::{validate_effect_algebra, validate_pseudo_effect_algebra};
use super::{Carrier, RelFa, Ternary};

/// Comultiplication used by [`PseudoEffectAlgebra::to_relfa`].
pub const DELTA_CONVENTION: &str =
    "δ(z) ∋ (x, y) iff z∼ = y∼ ⊕ x∼, where a∼ is the right supplement (a ⊕ a∼ = 1); for effect algebras z′ = x′ ⊕ y′";

/// A partial binary operation on a finite carrier with designated 0 and 1.
/// No axioms are assumed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialAlgebra {
    name: String,
    carrier: Carrier,
    zero: usize,
    one: usize,
    sum: Vec<Option<usize>>,
}

impl PartialAlgebra {
    pub fn new(name: impl Into<String>, carrier: Carrier, zero: usize, one: usize, sum: Vec<Option<usize>>) -> Self {
        let n = carrier.len();
        assert!(zero < n && one < n && sum.len() == n * n);
        assert!(sum.iter().flatten().all(|&c| c < n));
        PartialAlgebra { name: name.into(), carrier, zero, one, sum }
    }

    /// Resolve a table given as `(a, b, a ⊕ b)` name triples.
    pub fn from_names(
        name: impl Into<String>,
        elements: Vec<String>,
        zero: &str,
        one: &str,
        sums: &[[String; 3]],
    ) -> Result<Self> {
        let carrier = Carrier::new(elements)?;
        let n = carrier.len();
        let zero = carrier.resolve(zero, || "zero".into())?;
        let one = carrier.resolve(one, || "one".into())?;
        let mut sum = vec![None; n * n];
        for (i, [a, b, c]) in sums.iter().enumerate() {
            let at = |j: usize| move || format!("sum[{i}][{j}]");
            let (a, b, c) = (carrier.resolve(a, at(0))?, carrier.resolve(b, at(1))?, carrier.resolve(c, at(2))?);
            match sum[a * n + b] {
                Some(prev) if prev != c => {
                    return Err(Error::input(
                        format!("sum[{i}]"),
                        format!(
                            "multi-valued sum: {} ⊕ {} is both {} and {}",
                            carrier.name(a),
                            carrier.name(b),
                            carrier.name(prev),
                            carrier.name(c)
                        ),
                    ))
                }
                _ => sum[a * n + b] = Some(c),
            }
        }
        Ok(PartialAlgebra::new(name, carrier, zero, one, sum))
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn carrier(&self) -> &Carrier {
        &self.carrier
    }

    pub fn len(&self) -> usize {
        self.carrier.len()
    }

    pub fn is_empty(&self) -> bool {
        self.carrier.is_empty()
    }

    pub fn element(&self, i: usize) -> &str {
        self.carrier.name(i)
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn sum(&self, a: usize, b: usize) -> Option<usize> {
        self.sum[a * self.len() + b]
    }

    pub fn is_defined(&self, a: usize, b: usize) -> bool {
        self.sum(a, b).is_some()
    }

    /// Defined sums `(a, b, a ⊕ b)` in lexicographic order.
    pub fn sums(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.len();
        self.sum.iter().enumerate().filter_map(move |(ab, c)| c.map(|c| (ab / n, ab % n, c)))
    }

    pub fn sum_names(&self) -> Vec<[String; 3]> {
        self.sums()
            .map(|(a, b, c)| [self.element(a).to_string(), self.element(b).to_string(), self.element(c).to_string()])
            .collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.len();
        (0..n).all(|a| (0..n).all(|b| self.sum(a, b) == self.sum(b, a)))
    }

    /// Graph of ⊕ as a relational structure with η = {0}, ε = {1} and the
    /// derived comultiplication. Used for validating tables as Frobenius
    /// algebras; no axioms are checked here.
    pub fn graph_relfa(&self) -> RelFa {
        let n = self.len();
        let mu = Ternary::from_triples(n, self.sums());
        let mut eta = vec![false; n];
        let mut epsilon = vec![false; n];
        eta[self.zero] = true;
        epsilon[self.one] = true;
        RelFa::with_derived_delta(self.name.clone(), self.carrier.clone(), mu, eta, epsilon)
    }

    /// Relabel element `i` as `p[i]`.
    pub fn permuted(&self, p: &[usize]) -> PartialAlgebra {
        let n = self.len();
        let mut names = vec![String::new(); n];
        let mut sum = vec![None; n * n];
        for i in 0..n {
            names[p[i]] = self.element(i).to_string();
        }
        for (a, b, c) in self.sums() {
            sum[p[a] * n + p[b]] = Some(p[c]);
        }
        PartialAlgebra::new(
            self.name.clone(),
            Carrier::new(names).expect("permutation keeps names distinct"),
            p[self.zero],
            p[self.one],
            sum,
        )
    }

    pub(crate) fn raw_table(&self) -> &[Option<usize>] {
        &self.sum
    }
}

/// The derived order a ≤ b iff a ⊕ x = b for some x.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Order {
    n: usize,
    leq: Vec<bool>,
}

impl Order {
    fn of(t: &PartialAlgebra) -> Self {
        let n = t.len();
        let mut leq = vec![false; n * n];
        for (a, _, c) in t.sums() {
            leq[a * n + c] = true;
        }
        Order { n, leq }
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    /// Least upper bound of `a` and `b`, if it exists.
    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        let ub: Vec<usize> = (0..self.n).filter(|&u| self.leq(a, u) && self.leq(b, u)).collect();
        ub.iter().copied().find(|&u| ub.iter().all(|&v| self.leq(u, v)))
    }

    /// Greatest lower bound of `a` and `b`, if it exists.
    pub fn meet(&self, a: usize, b: usize) -> Option<usize> {
        let lb: Vec<usize> = (0..self.n).filter(|&l| self.leq(l, a) && self.leq(l, b)).collect();
        lb.iter().copied().find(|&l| lb.iter().all(|&v| self.leq(v, l)))
    }

    /// Pairs `(a, b)` with a ≤ b.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n * n).filter(move |&i| self.leq[i]).map(move |i| (i / n, i % n))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Supplements {
    /// a′ of an effect algebra.
    Ortho(usize),
    /// (a⁻, a∼) with a⁻ ⊕ a = 1 = a ⊕ a∼.
    Pair { left: usize, right: usize },
}

/// A table that passed the pseudo effect algebra axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoEffectAlgebra {
    table: PartialAlgebra,
    left: Vec<usize>,
    right: Vec<usize>,
    commutative: bool,
    order: Order,
}

impl PseudoEffectAlgebra {
    pub fn new(table: PartialAlgebra) -> Result<Self> {
        let report = validate_pseudo_effect_algebra(&table);
        if !report.pass {
            return Err(Error::invalid(report));
        }
        Ok(Self::assume_valid(table))
    }

    pub(crate) fn assume_valid(table: PartialAlgebra) -> Self {
        let n = table.len();
        let one = table.one();
        let left = (0..n)
            .map(|a| (0..n).find(|&x| table.sum(x, a) == Some(one)).expect("left supplement"))
            .collect();
        let right = (0..n)
            .map(|a| (0..n).find(|&y| table.sum(a, y) == Some(one)).expect("right supplement"))
            .collect();
        let commutative = table.is_commutative();
        let order = Order::of(&table);
        PseudoEffectAlgebra { table, left, right, commutative, order }
    }

    pub fn table(&self) -> &PartialAlgebra {
        &self.table
    }

    pub fn into_table(self) -> PartialAlgebra {
        self.table
    }

    pub fn is_commutative(&self) -> bool {
        self.commutative
    }

    /// a⁻ with a⁻ ⊕ a = 1.
    pub fn left_supplement(&self, a: usize) -> usize {
        self.left[a]
    }

    /// a∼ with a ⊕ a∼ = 1.
    pub fn right_supplement(&self, a: usize) -> usize {
        self.right[a]
    }

    pub fn supplements(&self, a: usize) -> Supplements {
        if self.commutative {
            Supplements::Ortho(self.right[a])
        } else {
            Supplements::Pair { left: self.left[a], right: self.right[a] }
        }
    }

    pub fn order(&self) -> &Order {
        &self.order
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.order.leq(a, b)
    }

    pub fn join(&self, a: usize, b: usize) -> Option<usize> {
        self.order.join(a, b)
    }

    /// The l with a ⊕ l = b.
    pub fn right_difference(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.len()).find(|&l| self.sum(a, l) == Some(b))
    }

    /// The l with l ⊕ a = b.
    pub fn left_difference(&self, a: usize, b: usize) -> Option<usize> {
        (0..self.len()).find(|&l| self.sum(l, a) == Some(b))
    }

    /// The Frobenius algebra with μ the graph of ⊕, η = {0}, ε = {1} and δ
    /// as in [`DELTA_CONVENTION`].
    pub fn to_relfa(&self) -> RelFa {
        let n = self.len();
        let mu = Ternary::from_triples(n, self.sums());
        let mut delta = Ternary::empty(n);
        for (ya, xa, za) in self.sums() {
            // za = ya ⊕ xa with ya = y∼, xa = x∼, za = z∼
            let inv = |s: usize| self.left[s];
            delta.insert(inv(za), inv(xa), inv(ya));
        }
        let mut eta = vec![false; n];
        let mut epsilon = vec![false; n];
        eta[self.zero()] = true;
        epsilon[self.one()] = true;
        RelFa::new(self.name(), self.carrier().clone(), mu, delta, eta, epsilon)
    }

    /// The interval [0, c] with the restricted sum.
    pub fn interval(&self, c: usize) -> Result<PseudoEffectAlgebra> {
        let keep: Vec<usize> = (0..self.len()).filter(|&x| self.leq(x, c)).collect();
        let pos = |x: usize| keep.iter().position(|&y| y == x);
        let m = keep.len();
        let mut sum = vec![None; m * m];
        for (i, &a) in keep.iter().enumerate() {
            for (j, &b) in keep.iter().enumerate() {
                sum[i * m + j] = self.sum(a, b).and_then(pos);
            }
        }
        let names = keep.iter().map(|&x| self.element(x).to_string()).collect();
        let table = PartialAlgebra::new(
            format!("[{}, {}] in {}", self.element(self.zero()), self.element(c), self.name()),
            Carrier::new(names)?,
            pos(self.zero()).expect("0 ≤ c"),
            pos(c).expect("c ≤ c"),
            sum,
        );
        PseudoEffectAlgebra::new(table)
    }
}

impl Deref for PseudoEffectAlgebra {
    type Target = PartialAlgebra;

    fn deref(&self) -> &PartialAlgebra {
        &self.table
    }
}

/// A table that passed the effect algebra axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EffectAlgebra(PseudoEffectAlgebra);

impl EffectAlgebra {
    pub fn new(table: PartialAlgebra) -> Result<Self> {
        let report = validate_effect_algebra(&table);
        if !report.pass {
            return Err(Error::invalid(report));
        }
        Ok(EffectAlgebra(PseudoEffectAlgebra::assume_valid(table)))
    }

    /// a′ with a ⊕ a′ = 1.
    pub fn supplement(&self, a: usize) -> usize {
        self.0.right_supplement(a)
    }

    pub fn as_pseudo(&self) -> &PseudoEffectAlgebra {
        &self.0
    }

    pub fn into_pseudo(self) -> PseudoEffectAlgebra {
        self.0
    }

    pub fn interval(&self, c: usize) -> Result<EffectAlgebra> {
        EffectAlgebra::new(self.0.interval(c)?.into_table())
    }

    pub fn renamed(self, name: impl Into<String>) -> Self {
        EffectAlgebra(PseudoEffectAlgebra::assume_valid(self.0.into_table().renamed(name)))
    }
}

impl Deref for EffectAlgebra {
    type Target = PseudoEffectAlgebra;

    fn deref(&self) -> &PseudoEffectAlgebra {
        &self.0
    }
}

impl TryFrom<PseudoEffectAlgebra> for EffectAlgebra {
    type Error = Error;

    fn try_from(p: PseudoEffectAlgebra) -> Result<Self> {
        EffectAlgebra::new(p.into_table())
    }
}
