use std::collections::HashMap;

use crate::error::{Error, Result};

/// Named, ordered carrier set. Elements are addressed by index everywhere
/// else in the crate; names are only used at the boundaries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Carrier {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl Carrier {
    pub fn new(names: Vec<String>) -> Result<Self> {
        let mut index = HashMap::with_capacity(names.len());
        for (i, name) in names.iter().enumerate() {
            if index.insert(name.clone(), i).is_some() {
                return Err(Error::input(format!("elements[{i}]"), format!("duplicate element `{name}`")));
            }
        }
        Ok(Carrier { names, index })
    }

    /// Carrier named `0..n`.
    pub fn numbered(n: usize) -> Self {
        Carrier::new((0..n).map(|i| i.to_string()).collect()).expect("distinct names")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn lookup(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    /// Resolve `name`, reporting `location` when it is not in the carrier.
    pub fn resolve(&self, name: &str, location: impl FnOnce() -> String) -> Result<usize> {
        self.lookup(name)
            .ok_or_else(|| Error::input(location(), format!("`{name}` is not an element of the carrier")))
    }

    pub fn label(&self, tuple: &[usize]) -> Vec<String> {
        tuple.iter().map(|&i| self.names[i].clone()).collect()
    }
}

/// A ternary relation on `0..n`, stored as sorted result lists per pair.
///
/// For μ the triple `(x, y, z)` reads "μ sends (x, y) to z"; for δ the triple
/// `(z, x, y)` reads "δ sends z to (x, y)".
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ternary {
    n: usize,
    cells: Vec<Vec<usize>>,
}

impl Ternary {
    pub fn empty(n: usize) -> Self {
        Ternary { n, cells: vec![Vec::new(); n * n] }
    }

    pub fn from_triples(n: usize, triples: impl IntoIterator<Item = (usize, usize, usize)>) -> Self {
        let mut t = Ternary::empty(n);
        for (a, b, c) in triples {
            t.insert(a, b, c);
        }
        t
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, a: usize, b: usize, c: usize) {
        let cell = &mut self.cells[a * self.n + b];
        if let Err(pos) = cell.binary_search(&c) {
            cell.insert(pos, c);
        }
    }

    pub fn contains(&self, a: usize, b: usize, c: usize) -> bool {
        self.cells[a * self.n + b].binary_search(&c).is_ok()
    }

    pub fn get(&self, a: usize, b: usize) -> &[usize] {
        &self.cells[a * self.n + b]
    }

    pub fn is_defined(&self, a: usize, b: usize) -> bool {
        !self.cells[a * self.n + b].is_empty()
    }

    pub fn len(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Triples in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        let n = self.n;
        self.cells
            .iter()
            .enumerate()
            .flat_map(move |(ab, cs)| cs.iter().map(move |&c| (ab / n, ab % n, c)))
    }

    /// Image under a relabelling `p` of `0..n`.
    pub fn permuted(&self, p: &[usize]) -> Ternary {
        Ternary::from_triples(self.n, self.iter().map(|(a, b, c)| (p[a], p[b], p[c])))
    }

    /// At most one result per pair.
    pub fn is_functional(&self) -> bool {
        self.cells.iter().all(|c| c.len() <= 1)
    }
}
