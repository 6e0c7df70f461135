//! Axiom checks. Every axiom is a predicate over a tuple of carrier
//! elements; the reported counterexample is the first failing tuple in
//! lexicographic order, so re-substituting it (see [`holds`]) falsifies it.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::report::{AxiomVerdict, ValidationReport};

use super::{Carrier, PartialAlgebra, RelFa, Ternary};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    RelMonoid,
    Frobenius,
    EffectAlgebra,
    PseudoEffectAlgebra,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::RelMonoid => "rel-monoid",
            Kind::Frobenius => "frobenius",
            Kind::EffectAlgebra => "effect-algebra",
            Kind::PseudoEffectAlgebra => "pseudo-effect-algebra",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "rel-monoid" => Ok(Kind::RelMonoid),
            "frobenius" => Ok(Kind::Frobenius),
            "effect-algebra" => Ok(Kind::EffectAlgebra),
            "pseudo-effect-algebra" => Ok(Kind::PseudoEffectAlgebra),
            _ => Err(Error::input("kind", format!("unknown validation kind `{s}`"))),
        }
    }
}

/// Anything [`validate`] accepts.
#[derive(Clone, Debug)]
pub enum Structure {
    Table(PartialAlgebra),
    Rel(RelFa),
}

impl Structure {
    pub fn name(&self) -> &str {
        match self {
            Structure::Table(t) => t.name(),
            Structure::Rel(r) => r.name(),
        }
    }
}

pub fn validate(kind: Kind, s: &Structure) -> Result<ValidationReport> {
    Ok(match (kind, s) {
        (Kind::EffectAlgebra, Structure::Table(t)) => validate_effect_algebra(t),
        (Kind::PseudoEffectAlgebra, Structure::Table(t)) => validate_pseudo_effect_algebra(t),
        (Kind::EffectAlgebra, Structure::Rel(r)) => validate_effect_algebra(&table_of(r)?),
        (Kind::PseudoEffectAlgebra, Structure::Rel(r)) => validate_pseudo_effect_algebra(&table_of(r)?),
        (Kind::RelMonoid, Structure::Rel(r)) => validate_rel_monoid(r),
        (Kind::Frobenius, Structure::Rel(r)) => validate_frobenius(r),
        (Kind::RelMonoid, Structure::Table(t)) => validate_rel_monoid(&t.graph_relfa()),
        (Kind::Frobenius, Structure::Table(t)) => validate_frobenius(&t.graph_relfa()),
    })
}

/// Read a relational structure as a sum table: μ must be single-valued and
/// η, ε singletons.
fn table_of(r: &RelFa) -> Result<PartialAlgebra> {
    if let Some((a, b, _)) = r.mu().iter().find(|&(a, b, _)| r.mu().get(a, b).len() > 1) {
        return Err(Error::input(
            "mu",
            format!("multi-valued product of {} and {}", r.element(a), r.element(b)),
        ));
    }
    let single = |field: &str, s: Vec<usize>| match s.as_slice() {
        [x] => Ok(*x),
        _ => Err(Error::input(field, "a table kind needs exactly one element here")),
    };
    let zero = single("eta", r.units())?;
    let one = single("epsilon", r.counits())?;
    let n = r.len();
    let mut sum = vec![None; n * n];
    for (a, b, c) in r.mu().iter() {
        sum[a * n + b] = Some(c);
    }
    Ok(PartialAlgebra::new(r.name(), r.carrier().clone(), zero, one, sum))
}

struct Axiom<S> {
    name: &'static str,
    arity: usize,
    holds: fn(&S, &[usize]) -> bool,
}

fn first_failure<S>(ax: &Axiom<S>, s: &S, n: usize) -> Option<Vec<usize>> {
    let mut tuple = vec![0; ax.arity];
    if ax.arity > 0 && n == 0 {
        return None;
    }
    loop {
        if !(ax.holds)(s, &tuple) {
            return Some(tuple);
        }
        let mut i = ax.arity;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            tuple[i] += 1;
            if tuple[i] < n {
                break;
            }
            tuple[i] = 0;
        }
    }
}

fn verdicts<S>(axioms: &[Axiom<S>], s: &S, carrier: &Carrier) -> Vec<AxiomVerdict> {
    axioms
        .iter()
        .map(|ax| match first_failure(ax, s, carrier.len()) {
            None => AxiomVerdict::pass(ax.name),
            Some(t) => AxiomVerdict::fail(ax.name, carrier.label(&t)),
        })
        .collect()
}

fn all_hold<S>(axioms: &[Axiom<S>], s: &S, n: usize) -> bool {
    axioms.iter().all(|ax| first_failure(ax, s, n).is_none())
}

// Monoid laws for an arbitrary (multiplication, unit) pair; reused for the
// comonoid laws via δ⁻¹.

fn unit_existence(mul: &Ternary, unit: &[bool], a: usize) -> bool {
    let n = unit.len();
    (0..n).any(|s| unit[s] && mul.contains(a, s, a)) && (0..n).any(|t| unit[t] && mul.contains(t, a, a))
}

fn unit_determinism(mul: &Ternary, unit: &[bool], r: usize, a: usize, b: usize) -> bool {
    !unit[r] || !(mul.contains(r, a, b) || mul.contains(a, r, b)) || a == b
}

fn associative(mul: &Ternary, a: usize, b: usize, c: usize, d: usize) -> bool {
    let lhs = mul.get(a, b).iter().any(|&x| mul.contains(x, c, d));
    let rhs = mul.get(b, c).iter().any(|&y| mul.contains(a, y, d));
    lhs == rhs
}

struct Rel<'a> {
    a: &'a RelFa,
    delta_inv: Ternary,
}

impl<'a> Rel<'a> {
    fn new(a: &'a RelFa) -> Self {
        let delta_inv = Ternary::from_triples(a.len(), a.delta().iter().map(|(z, x, y)| (x, y, z)));
        Rel { a, delta_inv }
    }
}

fn monoid_axioms<'a>() -> [Axiom<Rel<'a>>; 3] {
    [
    Axiom { name: "unit-existence", arity: 1, holds: |s, t| unit_existence(s.a.mu(), s.a.eta(), t[0]) },
    Axiom {
        name: "unit-determinism",
        arity: 3,
        holds: |s, t| unit_determinism(s.a.mu(), s.a.eta(), t[0], t[1], t[2]),
    },
    Axiom { name: "associativity", arity: 4, holds: |s, t| associative(s.a.mu(), t[0], t[1], t[2], t[3]) },
    ]
}

fn comonoid_axioms<'a>() -> [Axiom<Rel<'a>>; 4] {
    [
    Axiom {
        name: "counit-existence",
        arity: 1,
        holds: |s, t| unit_existence(&s.delta_inv, s.a.epsilon(), t[0]),
    },
    Axiom {
        name: "counit-determinism",
        arity: 3,
        holds: |s, t| unit_determinism(&s.delta_inv, s.a.epsilon(), t[0], t[1], t[2]),
    },
    Axiom { name: "coassociativity", arity: 4, holds: |s, t| associative(&s.delta_inv, t[0], t[1], t[2], t[3]) },
    Axiom { name: "frobenius", arity: 4, holds: |s, t| frobenius(s.a, t[0], t[1], t[2], t[3]) },
    ]
}

/// ∃x: μ(a, x) ∋ c ∧ δ(b) ∋ (x, d)  ⟺  ∃y: δ(a) ∋ (c, y) ∧ μ(y, b) ∋ d.
fn frobenius(f: &RelFa, a: usize, b: usize, c: usize, d: usize) -> bool {
    let lhs = (0..f.len()).any(|x| f.mu().contains(a, x, c) && f.delta().contains(b, x, d));
    let rhs = f.delta().get(a, c).iter().any(|&y| f.mu().contains(y, b, d));
    lhs == rhs
}

pub fn validate_rel_monoid(a: &RelFa) -> ValidationReport {
    let s = Rel::new(a);
    ValidationReport::new(Kind::RelMonoid.as_str(), a.name(), verdicts(&monoid_axioms(), &s, a.carrier()))
}

pub fn validate_frobenius(a: &RelFa) -> ValidationReport {
    let s = Rel::new(a);
    let mut v = verdicts(&monoid_axioms(), &s, a.carrier());
    v.extend(verdicts(&comonoid_axioms(), &s, a.carrier()));
    ValidationReport::new(Kind::Frobenius.as_str(), a.name(), v)
}

pub fn is_rel_monoid(a: &RelFa) -> bool {
    all_hold(&monoid_axioms(), &Rel::new(a), a.len())
}

pub fn is_frobenius(a: &RelFa) -> bool {
    let s = Rel::new(a);
    all_hold(&monoid_axioms(), &s, a.len()) && all_hold(&comonoid_axioms(), &s, a.len())
}

fn exactly_one(n: usize, p: impl Fn(usize) -> bool) -> bool {
    (0..n).filter(|&x| p(x)).take(2).count() == 1
}

fn partial_associative(t: &PartialAlgebra, a: usize, b: usize, c: usize) -> bool {
    let lhs = t.sum(a, b).and_then(|x| t.sum(x, c));
    let rhs = t.sum(b, c).and_then(|y| t.sum(a, y));
    lhs == rhs
}

const EA_AXIOMS: [Axiom<PartialAlgebra>; 5] = [
    Axiom { name: "commutativity", arity: 2, holds: |s, t| s.sum(t[0], t[1]) == s.sum(t[1], t[0]) },
    Axiom { name: "associativity", arity: 3, holds: |s, t| partial_associative(s, t[0], t[1], t[2]) },
    Axiom {
        name: "zero-unit",
        arity: 1,
        holds: |s, t| s.sum(s.zero(), t[0]) == Some(t[0]) && s.sum(t[0], s.zero()) == Some(t[0]),
    },
    Axiom {
        name: "orthosupplement",
        arity: 1,
        holds: |s, t| exactly_one(s.len(), |b| s.sum(t[0], b) == Some(s.one())),
    },
    Axiom { name: "zero-one-law", arity: 1, holds: |s, t| !s.is_defined(t[0], s.one()) || t[0] == s.zero() },
];

const PEA_AXIOMS: [Axiom<PartialAlgebra>; 5] = [
    Axiom { name: "associativity", arity: 3, holds: |s, t| partial_associative(s, t[0], t[1], t[2]) },
    Axiom {
        name: "zero-unit",
        arity: 1,
        holds: |s, t| s.sum(s.zero(), t[0]) == Some(t[0]) && s.sum(t[0], s.zero()) == Some(t[0]),
    },
    Axiom { name: "braiding", arity: 2, holds: |s, t| braided(s, t[0], t[1]) },
    Axiom {
        name: "supplements",
        arity: 1,
        holds: |s, t| {
            exactly_one(s.len(), |x| s.sum(x, t[0]) == Some(s.one()))
                && exactly_one(s.len(), |y| s.sum(t[0], y) == Some(s.one()))
        },
    },
    Axiom {
        name: "zero-one-law",
        arity: 1,
        holds: |s, t| !(s.is_defined(t[0], s.one()) || s.is_defined(s.one(), t[0])) || t[0] == s.zero(),
    },
];

/// If a ⊕ b is defined there are a₁, b₁ with b₁ ⊕ a = a ⊕ b = b ⊕ a₁.
fn braided(s: &PartialAlgebra, a: usize, b: usize) -> bool {
    match s.sum(a, b) {
        None => true,
        Some(c) => {
            (0..s.len()).any(|b1| s.sum(b1, a) == Some(c)) && (0..s.len()).any(|a1| s.sum(b, a1) == Some(c))
        }
    }
}

const DERIVED_AXIOMS: [Axiom<PartialAlgebra>; 3] = [
    Axiom {
        name: "cancellativity",
        arity: 3,
        holds: |s, t| {
            let (a, b, c) = (t[0], t[1], t[2]);
            let left = s.sum(a, b).is_none() || s.sum(a, b) != s.sum(a, c) || b == c;
            let right = s.sum(b, a).is_none() || s.sum(b, a) != s.sum(c, a) || b == c;
            left && right
        },
    },
    Axiom {
        name: "positivity",
        arity: 2,
        holds: |s, t| s.sum(t[0], t[1]) != Some(s.zero()) || (t[0] == s.zero() && t[1] == s.zero()),
    },
    Axiom {
        name: "orthogonals-form-interval",
        arity: 1,
        holds: |s, t| {
            // {b : b ⊕ a defined} = [0, a⁻]
            let n = s.len();
            let Some(minus) = (0..n).find(|&x| s.sum(x, t[0]) == Some(s.one())) else {
                return false;
            };
            (0..n).all(|b| s.is_defined(b, t[0]) == (0..n).any(|x| s.sum(b, x) == Some(minus)))
        },
    },
];

pub fn validate_effect_algebra(t: &PartialAlgebra) -> ValidationReport {
    let mut report = ValidationReport::new(Kind::EffectAlgebra.as_str(), t.name(), verdicts(&EA_AXIOMS, t, t.carrier()));
    if report.pass {
        report.derived = verdicts(&DERIVED_AXIOMS[..2], t, t.carrier());
    }
    report
}

pub fn validate_pseudo_effect_algebra(t: &PartialAlgebra) -> ValidationReport {
    let mut report =
        ValidationReport::new(Kind::PseudoEffectAlgebra.as_str(), t.name(), verdicts(&PEA_AXIOMS, t, t.carrier()));
    if report.pass {
        report.derived = verdicts(&DERIVED_AXIOMS, t, t.carrier());
    }
    report
}

pub fn is_effect_algebra(t: &PartialAlgebra) -> bool {
    all_hold(&EA_AXIOMS, t, t.len())
}

pub fn is_pseudo_effect_algebra(t: &PartialAlgebra) -> bool {
    all_hold(&PEA_AXIOMS, t, t.len())
}

/// Evaluate a single named axiom (or derived property) at `tuple`.
/// `None` when the name is unknown for `kind` or the arity is wrong.
pub fn holds(kind: Kind, s: &Structure, axiom: &str, tuple: &[usize]) -> Option<bool> {
    fn eval<S>(axioms: &[Axiom<S>], s: &S, axiom: &str, tuple: &[usize]) -> Option<bool> {
        let ax = axioms.iter().find(|a| a.name == axiom)?;
        (ax.arity == tuple.len()).then(|| (ax.holds)(s, tuple))
    }
    match kind {
        Kind::RelMonoid | Kind::Frobenius => {
            let owned = match s {
                Structure::Rel(r) => r.clone(),
                Structure::Table(t) => t.graph_relfa(),
            };
            let r = &owned;
            let ctx = Rel::new(r);
            eval(&monoid_axioms(), &ctx, axiom, tuple).or_else(|| match kind {
                Kind::Frobenius => eval(&comonoid_axioms(), &ctx, axiom, tuple),
                _ => None,
            })
        }
        Kind::EffectAlgebra | Kind::PseudoEffectAlgebra => {
            let owned;
            let t = match s {
                Structure::Table(t) => t,
                Structure::Rel(r) => {
                    owned = table_of(r).ok()?;
                    &owned
                }
            };
            let primary: &[Axiom<PartialAlgebra>] = if kind == Kind::EffectAlgebra { &EA_AXIOMS } else { &PEA_AXIOMS };
            eval(primary, t, axiom, tuple).or_else(|| eval(&DERIVED_AXIOMS, t, axiom, tuple))
        }
    }
}
