//! JSON exchange format for tables, relational structures and complexes.

use serde::{Deserialize, Serialize};

use crate::algebra::{PartialAlgebra, RelFa};
use crate::error::{Error, Result};
use crate::simplicial::{Complex, Edge};

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeSpec {
    pub name: String,
    pub source: String,
    pub target: String,
}

/// One structure per file. Which fields apply depends on `kind`:
/// `effect_algebra` and `pseudo_effect_algebra` use elements/zero/one/sum,
/// `relfa` uses elements/mu/delta/eta/epsilon (δ is derived when absent),
/// `complex` uses vertices/edges/identities/triangles/marked.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elements: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zero: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub one: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sum: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mu: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub edges: Option<Vec<EdgeSpec>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub identities: Option<Vec<[String; 2]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub triangles: Option<Vec<[String; 3]>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub marked: Option<Vec<String>>,
}

/// A parsed file. Tables are not validated here.
#[derive(Clone, Debug)]
pub enum Parsed {
    EffectAlgebra(PartialAlgebra),
    PseudoEffectAlgebra(PartialAlgebra),
    Rel(RelFa),
    Complex(Complex),
}

fn required<T: Clone>(field: &Option<T>, name: &str, kind: &str) -> Result<T> {
    field.clone().ok_or_else(|| Error::input(name, format!("required for kind `{kind}`")))
}

fn forbid<T>(field: &Option<T>, name: &str, kind: &str) -> Result<()> {
    match field {
        Some(_) => Err(Error::input(name, format!("does not apply to kind `{kind}`"))),
        None => Ok(()),
    }
}

impl StructureFile {
    pub fn into_parsed(self) -> Result<Parsed> {
        let kind = self.kind.as_str();
        let name = self.name.clone().unwrap_or_else(|| "unnamed".into());
        let algebra_fields = |s: &Self| -> Result<()> {
            forbid(&s.vertices, "vertices", kind)?;
            forbid(&s.edges, "edges", kind)?;
            forbid(&s.identities, "identities", kind)?;
            forbid(&s.triangles, "triangles", kind)?;
            forbid(&s.marked, "marked", kind)
        };
        match kind {
            "effect_algebra" | "pseudo_effect_algebra" => {
                algebra_fields(&self)?;
                for (f, n) in [(&self.mu, "mu"), (&self.delta, "delta")] {
                    forbid(f, n, kind)?;
                }
                forbid(&self.eta, "eta", kind)?;
                forbid(&self.epsilon, "epsilon", kind)?;
                let t = PartialAlgebra::from_names(
                    name,
                    required(&self.elements, "elements", kind)?,
                    &required(&self.zero, "zero", kind)?,
                    &required(&self.one, "one", kind)?,
                    &required(&self.sum, "sum", kind)?,
                )?;
                Ok(if kind == "effect_algebra" { Parsed::EffectAlgebra(t) } else { Parsed::PseudoEffectAlgebra(t) })
            }
            "relfa" => {
                algebra_fields(&self)?;
                forbid(&self.sum, "sum", kind)?;
                forbid(&self.zero, "zero", kind)?;
                forbid(&self.one, "one", kind)?;
                let r = RelFa::from_names(
                    name,
                    required(&self.elements, "elements", kind)?,
                    &required(&self.mu, "mu", kind)?,
                    self.delta.as_deref(),
                    &required(&self.eta, "eta", kind)?,
                    &required(&self.epsilon, "epsilon", kind)?,
                )?;
                Ok(Parsed::Rel(r))
            }
            "complex" => {
                for (f, n) in [(&self.elements, "elements"), (&self.eta, "eta"), (&self.epsilon, "epsilon")] {
                    forbid(f, n, kind)?;
                }
                for (f, n) in [(&self.sum, "sum"), (&self.mu, "mu"), (&self.delta, "delta")] {
                    forbid(f, n, kind)?;
                }
                forbid(&self.zero, "zero", kind)?;
                forbid(&self.one, "one", kind)?;
                Ok(Parsed::Complex(self.complex(name)?))
            }
            other => Err(Error::input(
                "kind",
                format!("unknown kind `{other}` (expected effect_algebra, pseudo_effect_algebra, relfa or complex)"),
            )),
        }
    }

    fn complex(&self, name: String) -> Result<Complex> {
        let kind = "complex";
        let vertices = required(&self.vertices, "vertices", kind)?;
        let specs = required(&self.edges, "edges", kind)?;
        let find_vertex = |v: &str, loc: String| {
            vertices
                .iter()
                .position(|x| x == v)
                .ok_or_else(|| Error::input(loc, format!("`{v}` is not a vertex")))
        };
        let mut edges = Vec::with_capacity(specs.len());
        for (i, e) in specs.iter().enumerate() {
            if specs[..i].iter().any(|f| f.name == e.name) {
                return Err(Error::input(format!("edges[{i}].name"), format!("duplicate edge `{}`", e.name)));
            }
            edges.push(Edge {
                name: e.name.clone(),
                source: find_vertex(&e.source, format!("edges[{i}].source"))?,
                target: find_vertex(&e.target, format!("edges[{i}].target"))?,
            });
        }
        let find_edge = |x: &str, loc: String| {
            edges
                .iter()
                .position(|e| e.name == x)
                .ok_or_else(|| Error::input(loc, format!("`{x}` is not an edge")))
        };
        let mut identity = vec![None; vertices.len()];
        for (i, [v, e]) in required(&self.identities, "identities", kind)?.iter().enumerate() {
            let v = find_vertex(v, format!("identities[{i}][0]"))?;
            let e = find_edge(e, format!("identities[{i}][1]"))?;
            if identity[v].replace(e).is_some() {
                return Err(Error::input(format!("identities[{i}]"), "vertex has two identity edges"));
            }
        }
        let identity = identity
            .into_iter()
            .enumerate()
            .map(|(v, e)| e.ok_or_else(|| Error::input("identities", format!("vertex `{}` has no identity edge", vertices[v]))))
            .collect::<Result<Vec<_>>>()?;
        let mut triangles = Vec::new();
        for (i, t) in required(&self.triangles, "triangles", kind)?.iter().enumerate() {
            let mut tri = [0; 3];
            for j in 0..3 {
                tri[j] = find_edge(&t[j], format!("triangles[{i}][{j}]"))?;
            }
            triangles.push(tri);
        }
        let mut marked = vec![false; edges.len()];
        for (i, m) in self.marked.clone().unwrap_or_default().iter().enumerate() {
            marked[find_edge(m, format!("marked[{i}]"))?] = true;
        }
        Complex::new(name, vertices, edges, identity, triangles, marked)
    }

    pub fn from_table(kind: &str, t: &PartialAlgebra) -> Self {
        StructureFile {
            kind: kind.to_string(),
            name: Some(t.name().to_string()),
            elements: Some(t.carrier().names().to_vec()),
            zero: Some(t.element(t.zero()).to_string()),
            one: Some(t.element(t.one()).to_string()),
            sum: Some(t.sum_names()),
            ..Default::default()
        }
    }

    pub fn from_relfa(r: &RelFa) -> Self {
        let subset = |s: &[bool]| (0..r.len()).filter(|&i| s[i]).map(|i| r.element(i).to_string()).collect();
        StructureFile {
            kind: "relfa".into(),
            name: Some(r.name().to_string()),
            elements: Some(r.carrier().names().to_vec()),
            mu: Some(r.mu_names()),
            delta: Some(r.delta_names()),
            eta: Some(subset(r.eta())),
            epsilon: Some(subset(r.epsilon())),
            ..Default::default()
        }
    }

    pub fn from_complex(c: &Complex) -> Self {
        let ename = |e: usize| c.edge(e).name.clone();
        StructureFile {
            kind: "complex".into(),
            name: Some(c.name().to_string()),
            vertices: Some(c.vertices().to_vec()),
            edges: Some(
                c.edges()
                    .iter()
                    .map(|e| EdgeSpec {
                        name: e.name.clone(),
                        source: c.vertex(e.source).to_string(),
                        target: c.vertex(e.target).to_string(),
                    })
                    .collect(),
            ),
            identities: Some(
                (0..c.vertex_count()).map(|v| [c.vertex(v).to_string(), ename(c.identity(v))]).collect(),
            ),
            triangles: Some(c.triangles().iter().map(|t| t.map(ename)).collect()),
            marked: Some((0..c.edge_count()).filter(|&e| c.is_marked(e)).map(ename).collect()),
            ..Default::default()
        }
    }
}

/// Parse a document; `source` is used in syntax error locations.
pub fn parse(text: &str, source: &str) -> Result<Parsed> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| {
        let msg = e.to_string();
        let msg = msg.split(" at line ").next().unwrap_or(&msg).to_string();
        Error::input(format!("{source}:{}:{}", e.line(), e.column()), msg)
    })?;
    file.into_parsed()
}

pub fn to_json(file: &StructureFile) -> String {
    serde_json::to_string_pretty(file).expect("structure files serialize")
}
