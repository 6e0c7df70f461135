//! Loading structures from files or the built-in catalog.

use std::fs;

use fa_core::algebra::catalog::{self, Item};
use fa_core::algebra::{EffectAlgebra, PartialAlgebra, PseudoEffectAlgebra, RelFa};
use fa_core::format::{self, Parsed, StructureFile};
use fa_core::nerve::{nerve, nerve_to_algebra};
use fa_core::ortho::as_effect_algebra;
use fa_core::simplicial::Complex;
use fa_core::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum SeedOrder {
    /// Elements in the order they are declared.
    Declared,
    /// Elements relabelled in lexicographic order of their identifiers.
    Sorted,
}

#[derive(Clone, Debug)]
pub enum Loaded {
    Effect(PartialAlgebra),
    Pseudo(PartialAlgebra),
    Rel(RelFa),
    Complex(Complex),
}

#[derive(Clone, Debug)]
pub struct Input {
    pub loaded: Loaded,
    /// The bytes the digest is computed over: file contents, or the exported
    /// document for catalog entries.
    pub bytes: Vec<u8>,
}

fn sorting_permutation(names: &[String]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..names.len()).collect();
    order.sort_by(|&a, &b| names[a].cmp(&names[b]));
    let mut p = vec![0; names.len()];
    for (rank, &i) in order.iter().enumerate() {
        p[i] = rank;
    }
    p
}

impl Loaded {
    fn from_item(item: Item) -> Loaded {
        match item {
            Item::Effect(e) => Loaded::Effect(e.into_pseudo().into_table()),
            Item::Pseudo(p) => Loaded::Pseudo(p.into_table()),
            Item::Rel(r) => Loaded::Rel(r),
        }
    }

    fn from_parsed(p: Parsed) -> Loaded {
        match p {
            Parsed::EffectAlgebra(t) => Loaded::Effect(t),
            Parsed::PseudoEffectAlgebra(t) => Loaded::Pseudo(t),
            Parsed::Rel(r) => Loaded::Rel(r),
            Parsed::Complex(c) => Loaded::Complex(c),
        }
    }

    fn sorted(self) -> Loaded {
        match self {
            Loaded::Effect(t) => Loaded::Effect(t.permuted(&sorting_permutation(t.carrier().names()))),
            Loaded::Pseudo(t) => Loaded::Pseudo(t.permuted(&sorting_permutation(t.carrier().names()))),
            Loaded::Rel(r) => Loaded::Rel(r.permuted(&sorting_permutation(r.carrier().names()))),
            Loaded::Complex(c) => Loaded::Complex(c),
        }
    }

    pub fn name(&self) -> &str {
        match self {
            Loaded::Effect(t) | Loaded::Pseudo(t) => t.name(),
            Loaded::Rel(r) => r.name(),
            Loaded::Complex(c) => c.name(),
        }
    }

    pub fn structure_file(&self) -> StructureFile {
        match self {
            Loaded::Effect(t) => StructureFile::from_table("effect_algebra", t),
            Loaded::Pseudo(t) => StructureFile::from_table("pseudo_effect_algebra", t),
            Loaded::Rel(r) => StructureFile::from_relfa(r),
            Loaded::Complex(c) => StructureFile::from_complex(c),
        }
    }

    /// The relational algebra of a validated table, or the graph of an
    /// unvalidated one.
    pub fn relfa(&self) -> Result<RelFa> {
        match self {
            Loaded::Effect(t) => Ok(EffectAlgebra::new(t.clone())
                .map(|e| e.to_relfa())
                .unwrap_or_else(|_| t.graph_relfa())),
            Loaded::Pseudo(t) => Ok(PseudoEffectAlgebra::new(t.clone())
                .map(|p| p.to_relfa())
                .unwrap_or_else(|_| t.graph_relfa())),
            Loaded::Rel(r) => Ok(r.clone()),
            Loaded::Complex(c) => nerve_to_algebra(c),
        }
    }

    pub fn complex(&self) -> Result<Complex> {
        match self {
            Loaded::Complex(c) => Ok(c.clone()),
            _ => Ok(nerve(&self.relfa()?).complex),
        }
    }

    pub fn effect_algebra(&self) -> Result<EffectAlgebra> {
        match self {
            Loaded::Effect(t) | Loaded::Pseudo(t) => EffectAlgebra::new(t.clone()),
            _ => as_effect_algebra(&self.relfa()?),
        }
    }

    pub fn pseudo_effect_algebra(&self) -> Result<PseudoEffectAlgebra> {
        match self {
            Loaded::Effect(t) | Loaded::Pseudo(t) => PseudoEffectAlgebra::new(t.clone()),
            _ => Ok(self.effect_algebra()?.into_pseudo()),
        }
    }
}

/// `catalog:NAME` or a path to a structure file.
pub fn load(arg: &str, order: SeedOrder) -> Result<Input> {
    let (loaded, bytes) = match arg.strip_prefix("catalog:") {
        Some(name) => {
            let loaded = Loaded::from_item(catalog::lookup(name)?);
            let bytes = (format::to_json(&loaded.structure_file()) + "\n").into_bytes();
            (loaded, bytes)
        }
        None => {
            let bytes = fs::read(arg).map_err(|e| Error::input(arg, e.to_string()))?;
            let text = std::str::from_utf8(&bytes).map_err(|e| Error::input(arg, format!("not UTF-8: {e}")))?;
            let parsed = format::parse(text, arg).map_err(|e| match e {
                Error::Input { location, message } if !location.starts_with(arg) => {
                    Error::input(format!("{arg}: {location}"), message)
                }
                other => other,
            })?;
            (Loaded::from_parsed(parsed), bytes)
        }
    };
    let loaded = match order {
        SeedOrder::Declared => loaded,
        SeedOrder::Sorted => loaded.sorted(),
    };
    Ok(Input { loaded, bytes })
}
