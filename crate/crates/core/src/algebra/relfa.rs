use crate::error::Result;

use super::{Carrier, Ternary};

/// A finite structure `(A, μ, η, δ, ε)` in the category of sets and
/// relations. Nothing beyond well-formedness is assumed; see
/// [`validate`](super::validate) for the axioms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelFa {
    name: String,
    carrier: Carrier,
    mu: Ternary,
    delta: Ternary,
    eta: Vec<bool>,
    epsilon: Vec<bool>,
}

impl RelFa {
    pub fn new(
        name: impl Into<String>,
        carrier: Carrier,
        mu: Ternary,
        delta: Ternary,
        eta: Vec<bool>,
        epsilon: Vec<bool>,
    ) -> Self {
        let n = carrier.len();
        assert!(mu.size() == n && delta.size() == n && eta.len() == n && epsilon.len() == n);
        RelFa { name: name.into(), carrier, mu, delta, eta, epsilon }
    }

    /// Build an ε-monoid and complete it with the comultiplication
    /// determined by μ and ε (see [`RelFa::derive_delta`]).
    pub fn with_derived_delta(
        name: impl Into<String>,
        carrier: Carrier,
        mu: Ternary,
        eta: Vec<bool>,
        epsilon: Vec<bool>,
    ) -> Self {
        let delta = Self::derive_delta(&mu, &epsilon);
        RelFa::new(name, carrier, mu, delta, eta, epsilon)
    }

    /// Resolve a structure given by element names.
    pub fn from_names(
        name: impl Into<String>,
        elements: Vec<String>,
        mu: &[[String; 3]],
        delta: Option<&[[String; 3]]>,
        eta: &[String],
        epsilon: &[String],
    ) -> Result<Self> {
        let carrier = Carrier::new(elements)?;
        let n = carrier.len();
        let resolve_triples = |field: &str, triples: &[[String; 3]]| -> Result<Ternary> {
            let mut t = Ternary::empty(n);
            for (i, [a, b, c]) in triples.iter().enumerate() {
                let at = |j: usize| move || format!("{field}[{i}][{j}]");
                let a = carrier.resolve(a, at(0))?;
                let b = carrier.resolve(b, at(1))?;
                let c = carrier.resolve(c, at(2))?;
                t.insert(a, b, c);
            }
            Ok(t)
        };
        let resolve_subset = |field: &str, names: &[String]| -> Result<Vec<bool>> {
            let mut s = vec![false; n];
            for (i, x) in names.iter().enumerate() {
                s[carrier.resolve(x, || format!("{field}[{i}]"))?] = true;
            }
            Ok(s)
        };
        let mu = resolve_triples("mu", mu)?;
        let eta = resolve_subset("eta", eta)?;
        let epsilon = resolve_subset("epsilon", epsilon)?;
        let delta = match delta {
            Some(d) => resolve_triples("delta", d)?,
            None => Self::derive_delta(&mu, &epsilon),
        };
        Ok(RelFa::new(name, carrier, mu, delta, eta, epsilon))
    }

    /// δ(c) ∋ (a, b) iff there are y and e ∈ ε with μ(b, y) ∋ e and
    /// μ(c, y) ∋ a. For an effect algebra this is c′ = a′ ⊕ b′; for a group
    /// it is the inverse graph of μ.
    pub fn derive_delta(mu: &Ternary, epsilon: &[bool]) -> Ternary {
        let n = mu.size();
        let mut delta = Ternary::empty(n);
        for b in 0..n {
            for y in 0..n {
                if !mu.get(b, y).iter().any(|&e| epsilon[e]) {
                    continue;
                }
                for c in 0..n {
                    for &a in mu.get(c, y) {
                        delta.insert(c, a, b);
                    }
                }
            }
        }
        delta
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

    pub fn mu(&self) -> &Ternary {
        &self.mu
    }

    pub fn delta(&self) -> &Ternary {
        &self.delta
    }

    pub fn eta(&self) -> &[bool] {
        &self.eta
    }

    pub fn epsilon(&self) -> &[bool] {
        &self.epsilon
    }

    pub fn is_unit(&self, a: usize) -> bool {
        self.eta[a]
    }

    pub fn is_counit(&self, a: usize) -> bool {
        self.epsilon[a]
    }

    pub fn units(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.eta[a]).collect()
    }

    pub fn counits(&self) -> Vec<usize> {
        (0..self.len()).filter(|&a| self.epsilon[a]).collect()
    }

    /// The unit s with μ(a, s) ∋ a, if any (unique in a relational monoid).
    pub fn source(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&s| self.eta[s] && self.mu.contains(a, s, a))
    }

    /// The unit t with μ(t, a) ∋ a, if any.
    pub fn target(&self, a: usize) -> Option<usize> {
        (0..self.len()).find(|&t| self.eta[t] && self.mu.contains(t, a, a))
    }

    /// Relabel element `i` as `p[i]`; names travel with their elements.
    pub fn permuted(&self, p: &[usize]) -> RelFa {
        let n = self.len();
        let mut names = vec![String::new(); n];
        let mut eta = vec![false; n];
        let mut epsilon = vec![false; n];
        for i in 0..n {
            names[p[i]] = self.carrier.name(i).to_string();
            eta[p[i]] = self.eta[i];
            epsilon[p[i]] = self.epsilon[i];
        }
        RelFa::new(
            self.name.clone(),
            Carrier::new(names).expect("permutation keeps names distinct"),
            self.mu.permuted(p),
            self.delta.permuted(p),
            eta,
            epsilon,
        )
    }

    /// Same structure with δ replaced by its derived value.
    pub fn rederive_delta(&self) -> RelFa {
        RelFa::with_derived_delta(
            self.name.clone(),
            self.carrier.clone(),
            self.mu.clone(),
            self.eta.clone(),
            self.epsilon.clone(),
        )
    }

    pub fn mu_names(&self) -> Vec<[String; 3]> {
        self.mu.iter().map(|(a, b, c)| self.triple_names(a, b, c)).collect()
    }

    pub fn delta_names(&self) -> Vec<[String; 3]> {
        self.delta.iter().map(|(a, b, c)| self.triple_names(a, b, c)).collect()
    }

    fn triple_names(&self, a: usize, b: usize, c: usize) -> [String; 3] {
        [self.element(a).to_string(), self.element(b).to_string(), self.element(c).to_string()]
    }
}

/// `map` is a morphism of relational monoids: units go to units and
/// μ-triples to μ-triples.
pub fn is_monoid_morphism(src: &RelFa, tgt: &RelFa, map: &[usize]) -> bool {
    map.len() == src.len()
        && map.iter().all(|&x| x < tgt.len())
        && src.units().iter().all(|&u| tgt.is_unit(map[u]))
        && src.mu().iter().all(|(a, b, c)| tgt.mu().contains(map[a], map[b], map[c]))
}

/// A monoid morphism that also sends ε into ε.
pub fn is_epsilon_morphism(src: &RelFa, tgt: &RelFa, map: &[usize]) -> bool {
    is_monoid_morphism(src, tgt, map) && src.counits().iter().all(|&e| tgt.is_counit(map[e]))
}
