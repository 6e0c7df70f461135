//! Named example structures.

use crate::error::{Error, Result};
use crate::format;

use super::{Carrier, EffectAlgebra, PartialAlgebra, PseudoEffectAlgebra, RelFa, Ternary};

const WRIGHT_TRIANGLE: &str = include_str!("../../fixtures/wright_triangle.json");

/// The interval [0, u] in Z^k with coordinatewise sum, listed in
/// lexicographic order (0 first, u last).
fn box_interval(name: String, u: &[u32], label: impl Fn(&[u32]) -> String) -> EffectAlgebra {
    let mut points: Vec<Vec<u32>> = vec![vec![]];
    for &bound in u {
        points = points
            .into_iter()
            .flat_map(|p| (0..=bound).map(move |x| [p.as_slice(), &[x]].concat()))
            .collect();
    }
    let n = points.len();
    let index = |p: &[u32]| points.iter().position(|q| q.as_slice() == p);
    let mut sum = vec![None; n * n];
    for (i, p) in points.iter().enumerate() {
        for (j, q) in points.iter().enumerate() {
            let s: Vec<u32> = p.iter().zip(q).map(|(a, b)| a + b).collect();
            sum[i * n + j] = index(&s);
        }
    }
    let carrier = Carrier::new(points.iter().map(|p| label(p)).collect()).expect("distinct points");
    EffectAlgebra::new(PartialAlgebra::new(name, carrier, 0, n - 1, sum)).expect("intervals of Z^k are effect algebras")
}

/// The one-element algebra with 0 = 1.
pub fn trivial() -> EffectAlgebra {
    box_interval("trivial".into(), &[], |_| "0".into())
}

/// [0, n] in Z; elements `"0"`..`"n"`.
pub fn chain(n: u32) -> EffectAlgebra {
    box_interval(format!("chain({n})"), &[n], |p| p[0].to_string())
}

/// The Boolean algebra with k atoms; elements are bit strings.
pub fn boolean(k: u32) -> EffectAlgebra {
    box_interval(format!("boolean({k})"), &vec![1; k as usize], |p| p.iter().map(u32::to_string).collect())
}

/// [0, u] in Z^k; elements are tuples such as `"(1,0)"`.
pub fn zk_interval(u: &[u32]) -> EffectAlgebra {
    let tuple = |p: &[u32]| format!("({})", p.iter().map(u32::to_string).collect::<Vec<_>>().join(","));
    box_interval(format!("zk{}", tuple(u)), u, tuple)
}

/// Identify the 0s and the 1s of `a` and `b`. The remaining element names
/// must be disjoint.
pub fn horizontal_sum(a: &EffectAlgebra, b: &EffectAlgebra) -> Result<EffectAlgebra> {
    let middle = |e: &EffectAlgebra| -> Vec<usize> { (0..e.len()).filter(|&x| x != e.zero() && x != e.one()).collect() };
    let (ma, mb) = (middle(a), middle(b));
    let mut names = vec![a.element(a.zero()).to_string()];
    names.extend(ma.iter().map(|&x| a.element(x).to_string()));
    names.extend(mb.iter().map(|&x| b.element(x).to_string()));
    names.push(a.element(a.one()).to_string());
    let carrier = Carrier::new(names)
        .map_err(|_| Error::Precondition("horizontal sum needs disjoint element names".into()))?;
    let n = carrier.len();
    let one = n - 1;
    let embed = |e: &EffectAlgebra, mid: &[usize], offset: usize, x: usize| -> usize {
        if x == e.zero() {
            0
        } else if x == e.one() {
            one
        } else {
            offset + mid.iter().position(|&m| m == x).expect("middle element")
        }
    };
    let mut sum = vec![None; n * n];
    for (e, mid, offset) in [(a, &ma, 1), (b, &mb, 1 + ma.len())] {
        for (x, y, z) in e.sums() {
            let (x, y, z) = (embed(e, mid, offset, x), embed(e, mid, offset, y), embed(e, mid, offset, z));
            sum[x * n + y] = Some(z);
        }
    }
    EffectAlgebra::new(PartialAlgebra::new(format!("{} ⊞ {}", a.name(), b.name()), carrier, 0, one, sum))
}

/// Coordinatewise sum on pairs `"(a,b)"`.
pub fn direct_product(a: &PseudoEffectAlgebra, b: &PseudoEffectAlgebra) -> PseudoEffectAlgebra {
    let (na, nb) = (a.len(), b.len());
    let n = na * nb;
    let names = (0..n).map(|i| format!("({},{})", a.element(i / nb), b.element(i % nb))).collect();
    let mut sum = vec![None; n * n];
    for i in 0..n {
        for j in 0..n {
            if let (Some(x), Some(y)) = (a.sum(i / nb, j / nb), b.sum(i % nb, j % nb)) {
                sum[i * n + j] = Some(x * nb + y);
            }
        }
    }
    let table = PartialAlgebra::new(
        format!("{} × {}", a.name(), b.name()),
        Carrier::new(names).expect("pairs are distinct"),
        a.zero() * nb + b.zero(),
        a.one() * nb + b.one(),
        sum,
    );
    PseudoEffectAlgebra::new(table).expect("products of pseudo effect algebras are pseudo effect algebras")
}

pub fn direct_product_ea(a: &EffectAlgebra, b: &EffectAlgebra) -> EffectAlgebra {
    EffectAlgebra::try_from(direct_product(a, b)).expect("products of effect algebras are effect algebras")
}

/// Rename elements by appending `suffix`, except 0 and 1.
pub fn with_suffix(e: &EffectAlgebra, suffix: &str) -> EffectAlgebra {
    let names = (0..e.len())
        .map(|x| {
            let base = e.element(x);
            if x == e.zero() || x == e.one() {
                base.to_string()
            } else {
                format!("{base}{suffix}")
            }
        })
        .collect();
    let n = e.len();
    let sum = (0..n * n).map(|ab| e.sum(ab / n, ab % n)).collect();
    let table = PartialAlgebra::new(e.name(), Carrier::new(names).expect("suffix keeps names distinct"), e.zero(), e.one(), sum);
    EffectAlgebra::new(table).expect("renaming preserves axioms")
}

/// A finite group given by its multiplication table.
#[derive(Clone, Debug)]
pub struct GroupTable {
    name: String,
    names: Vec<String>,
    mul: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    pub fn new(name: impl Into<String>, names: Vec<String>, mul: Vec<usize>) -> Result<Self> {
        let n = names.len();
        if mul.len() != n * n || mul.iter().any(|&x| x >= n) {
            return Err(Error::Precondition("group table has the wrong shape".into()));
        }
        let m = |a: usize, b: usize| mul[a * n + b];
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| m(e, a) == a && m(a, e) == a))
            .ok_or_else(|| Error::Precondition("group table has no identity".into()))?;
        let associative = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| m(m(a, b), c) == m(a, m(b, c)))));
        let inverses = (0..n).all(|a| (0..n).any(|b| m(a, b) == identity && m(b, a) == identity));
        if !associative || !inverses {
            return Err(Error::Precondition("group table is not a group".into()));
        }
        Ok(GroupTable { name: name.into(), names, mul, identity })
    }

    /// Z/n with elements `"0"`..`"n-1"`.
    pub fn cyclic(n: usize) -> Self {
        let mul = (0..n * n).map(|ab| (ab / n + ab % n) % n).collect();
        GroupTable::new(format!("Z/{n}"), (0..n).map(|i| i.to_string()).collect(), mul).expect("cyclic group")
    }

    /// The symmetric group on three letters; elements in one-line notation,
    /// product (pq)(i) = p(q(i)).
    pub fn symmetric3() -> Self {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let names = perms.iter().map(|p| p.iter().map(|i| (i + 1).to_string()).collect()).collect();
        let mul = (0..36)
            .map(|ab| {
                let (p, q) = (perms[ab / 6], perms[ab % 6]);
                let pq = [p[q[0]], p[q[1]], p[q[2]]];
                perms.iter().position(|r| *r == pq).expect("closed")
            })
            .collect();
        GroupTable::new("S3", names, mul).expect("symmetric group")
    }
}

/// μ is the multiplication graph, η = ε = {identity} and δ inverts μ.
pub fn group_algebra(g: &GroupTable) -> RelFa {
    let n = g.names.len();
    let triples: Vec<(usize, usize, usize)> = (0..n * n).map(|ab| (ab / n, ab % n, g.mul[ab])).collect();
    let mu = Ternary::from_triples(n, triples.iter().copied());
    let delta = Ternary::from_triples(n, triples.iter().map(|&(a, b, c)| (c, a, b)));
    let mut units = vec![false; n];
    units[g.identity] = true;
    RelFa::new(
        g.name.clone(),
        Carrier::new(g.names.clone()).expect("distinct group elements"),
        mu,
        delta,
        units.clone(),
        units,
    )
}

/// The three-block orthoalgebra: six atoms arranged in the blocks
/// {a,b,c}, {c,d,e}, {e,f,a}.
pub fn wright_triangle() -> EffectAlgebra {
    match format::parse(WRIGHT_TRIANGLE, "wright_triangle.json").expect("bundled fixture parses") {
        format::Parsed::EffectAlgebra(t) => EffectAlgebra::new(t).expect("fixture is an effect algebra"),
        _ => unreachable!("fixture is an effect algebra"),
    }
}

/// A catalog structure.
#[derive(Clone, Debug)]
pub enum Item {
    Effect(EffectAlgebra),
    Pseudo(PseudoEffectAlgebra),
    Rel(RelFa),
}

impl Item {
    pub fn name(&self) -> &str {
        match self {
            Item::Effect(e) => e.name(),
            Item::Pseudo(p) => p.name(),
            Item::Rel(r) => r.name(),
        }
    }

    /// The structure as a relational Frobenius algebra.
    pub fn relfa(&self) -> RelFa {
        match self {
            Item::Effect(e) => e.to_relfa(),
            Item::Pseudo(p) => p.to_relfa(),
            Item::Rel(r) => r.clone(),
        }
    }

    pub fn effect_algebra(&self) -> Option<&EffectAlgebra> {
        match self {
            Item::Effect(e) => Some(e),
            _ => None,
        }
    }
}

/// Names accepted by [`lookup`] and listed by the CLI.
pub const NAMES: &[&str] = &[
    "trivial",
    "chain(1)",
    "chain(2)",
    "chain(3)",
    "chain(4)",
    "chain(5)",
    "boolean(1)",
    "boolean(2)",
    "boolean(3)",
    "zk(2,1)",
    "zk(2,2)",
    "zk(3,1)",
    "chain(2)+chain(2)",
    "boolean(2)+boolean(2)",
    "chain(1)xchain(2)",
    "wright-triangle",
    "Z/2",
    "Z/3",
    "Z/4",
    "Z/5",
    "S3",
];

fn parse_args(s: &str, prefix: &str) -> Option<Vec<u32>> {
    let inner = s.strip_prefix(prefix)?.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|x| x.trim().parse().ok()).collect()
}

/// Resolve a catalog name. Besides [`NAMES`], any `chain(n)`, `boolean(k)`,
/// `zk(u1,...,uk)` and `Z/n` is accepted.
pub fn lookup(name: &str) -> Result<Item> {
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    let item = match name {
        "trivial" => Item::Effect(trivial()),
        "chain(2)+chain(2)" => Item::Effect(horizontal_sum(&chain(2), &with_suffix(&chain(2), "'"))?.renamed(name)),
        "boolean(2)+boolean(2)" => {
            Item::Effect(horizontal_sum(&boolean(2), &with_suffix(&boolean(2), "'"))?.renamed(name))
        }
        "chain(1)xchain(2)" => Item::Effect(direct_product_ea(&chain(1), &chain(2)).renamed(name)),
        "wright-triangle" => Item::Effect(wright_triangle()),
        "S3" => Item::Rel(group_algebra(&GroupTable::symmetric3())),
        _ => {
            if let Some(n) = name.strip_prefix("Z/") {
                let n: usize = n.parse().map_err(|_| unknown())?;
                if n == 0 {
                    return Err(unknown());
                }
                Item::Rel(group_algebra(&GroupTable::cyclic(n)))
            } else if let Some(args) = parse_args(name, "chain") {
                match args.as_slice() {
                    [n] if *n > 0 => Item::Effect(chain(*n)),
                    _ => return Err(unknown()),
                }
            } else if let Some(args) = parse_args(name, "boolean") {
                match args.as_slice() {
                    [k] if *k > 0 && *k <= 6 => Item::Effect(boolean(*k)),
                    _ => return Err(unknown()),
                }
            } else if let Some(args) = parse_args(name, "zk") {
                if args.is_empty() || args.len() > 4 || args.iter().any(|&x| x == 0) {
                    return Err(unknown());
                }
                Item::Effect(zk_interval(&args).renamed(name))
            } else {
                return Err(unknown());
            }
        }
    };
    Ok(item)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_one_has_three_sums() {
        assert_eq!(chain(1).sum_names().len(), 3);
    }

    #[test]
    fn boolean_two_has_nine_sums() {
        // 0 with each of the four elements on either side (7 pairs) plus 01 ⊕ 10 both ways
        assert_eq!(boolean(2).sums().count(), 9);
    }

    #[test]
    fn horizontal_sum_rejects_name_clashes() {
        assert!(horizontal_sum(&chain(2), &chain(2)).is_err());
    }

    #[test]
    fn every_listed_name_resolves() {
        for name in NAMES {
            assert_eq!(lookup(name).unwrap().name(), *name, "{name}");
        }
    }

    #[test]
    fn wright_triangle_has_fourteen_elements() {
        assert_eq!(wright_triangle().len(), 14);
    }

    #[test]
    fn symmetric_group_is_not_commutative() {
        let s3 = group_algebra(&GroupTable::symmetric3());
        assert!((0..6).any(|a| (0..6).any(|b| s3.mu().get(a, b) != s3.mu().get(b, a))));
    }
}
