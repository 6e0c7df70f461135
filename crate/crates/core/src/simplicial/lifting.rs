//! Lifting problems against shape inclusions, absolute (against a complex)
//! and relative (against a morphism of complexes).

use std::ops::ControlFlow;

use serde::Serialize;

use super::complex::{Complex, SimplicialMap};
use super::hom::{extensions, Constraint, Plan};
use super::shapes::ShapeInclusion;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LiftMode {
    Exists,
    Unique,
}

/// A map written out by names, vertex images first.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NamedMap {
    pub vertices: Vec<[String; 2]>,
    pub edges: Vec<[String; 2]>,
}

impl NamedMap {
    pub fn new(src: &Complex, tgt: &Complex, m: &SimplicialMap) -> Self {
        NamedMap {
            vertices: m
                .vertices
                .iter()
                .enumerate()
                .map(|(v, &w)| [src.vertex(v).to_string(), tgt.vertex(w).to_string()])
                .collect(),
            edges: m
                .edges
                .iter()
                .enumerate()
                .map(|(e, &f)| [src.edge(e).name.clone(), tgt.edge(f).name.clone()])
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    NoExtension,
    UniqueExtension { witness: NamedMap },
    MultipleExtensions { first: NamedMap, second: NamedMap },
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::NoExtension => "no-extension",
            Verdict::UniqueExtension { .. } => "unique-extension",
            Verdict::MultipleExtensions { .. } => "multiple-extensions",
        }
    }
}

/// The outcome of one lifting problem.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiftingCertificate {
    pub shape: String,
    pub target: String,
    /// The map on the domain of the inclusion.
    pub boundary: NamedMap,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bottom: Option<NamedMap>,
    #[serde(flatten)]
    pub verdict: Verdict,
    /// Index form: the boundary map on the domain, then up to two
    /// extensions on the codomain.
    #[serde(skip)]
    pub raw_boundary: SimplicialMap,
    #[serde(skip)]
    pub raw_extensions: Vec<SimplicialMap>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiftingReport {
    pub shape: String,
    pub target: String,
    pub mode: LiftMode,
    pub pass: bool,
    /// Number of boundary maps (squares in the relative case).
    pub problems: usize,
    pub no_extension: usize,
    pub unique_extension: usize,
    pub multiple_extensions: usize,
    /// First failing problem in enumeration order.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<LiftingCertificate>,
}

pub type RelativeLiftingReport = LiftingReport;

impl LiftingReport {
    fn new(f: &ShapeInclusion, target: &str, mode: LiftMode) -> Self {
        LiftingReport {
            shape: f.name().to_string(),
            target: target.to_string(),
            mode,
            pass: true,
            problems: 0,
            no_extension: 0,
            unique_extension: 0,
            multiple_extensions: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, verdict_count: usize, certificate: impl FnOnce() -> LiftingCertificate) {
        self.problems += 1;
        match verdict_count {
            0 => self.no_extension += 1,
            1 => self.unique_extension += 1,
            _ => self.multiple_extensions += 1,
        }
        let failed = verdict_count == 0 || (self.mode == LiftMode::Unique && verdict_count > 1);
        if failed {
            self.pass = false;
            if self.counterexample.is_none() {
                self.counterexample = Some(certificate());
            }
        }
    }
}

/// Push a map on the domain of `f` to a partial map on its codomain.
pub(crate) fn partial_on_codomain(
    f: &ShapeInclusion,
    incl: &SimplicialMap,
    m: &SimplicialMap,
) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
    let c = f.codomain();
    let mut vs = vec![None; c.vertex_count()];
    let mut es = vec![None; c.edge_count()];
    for (i, &v) in incl.vertices.iter().enumerate() {
        vs[v] = Some(m.vertices[i]);
    }
    for (i, &e) in incl.edges.iter().enumerate() {
        es[e] = Some(m.edges[i]);
    }
    (vs, es)
}

/// Stream every map `src → tgt` without collecting them.
fn for_each_map(src: &Complex, tgt: &Complex, f: &mut dyn FnMut(&SimplicialMap)) {
    let (nv, ne) = (src.vertex_count(), src.edge_count());
    extensions(src, tgt, &vec![None; nv], &vec![None; ne], &Constraint::default(), &mut |m| {
        f(m);
        ControlFlow::Continue(())
    });
}

/// Search plan for extending maps on the domain of `f`; triangles of the
/// domain hold for every map on it.
fn plan_for(f: &ShapeInclusion) -> Plan {
    let c = f.codomain();
    let fv: Vec<bool> = (0..c.vertex_count()).map(|v| f.has_vertex(v)).collect();
    let fe: Vec<bool> = (0..c.edge_count()).map(|e| f.has_edge(e)).collect();
    Plan::new(c, &fv, &fe, &|t| c.triangle_position(*t).is_some_and(|i| f.has_triangle(i)))
}

/// Up to `limit` extensions of a partial map, in enumeration order.
fn first_extensions(
    plan: &Plan,
    src: &Complex,
    tgt: &Complex,
    vs: &[Option<usize>],
    es: &[Option<usize>],
    constraint: &Constraint,
    limit: usize,
) -> Vec<SimplicialMap> {
    let mut out = Vec::new();
    plan.run(src, tgt, vs, es, constraint, &mut |m| {
        out.push(m.clone());
        if out.len() >= limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

fn verdict(c: &Complex, x: &Complex, found: &[SimplicialMap]) -> Verdict {
    match found {
        [] => Verdict::NoExtension,
        [w] => Verdict::UniqueExtension { witness: NamedMap::new(c, x, w) },
        [a, b, ..] => Verdict::MultipleExtensions { first: NamedMap::new(c, x, a), second: NamedMap::new(c, x, b) },
    }
}

/// Does every map from the domain of `f` into `x` extend along `f`
/// (uniquely, in `Unique` mode)?
pub fn check_lifting(f: &ShapeInclusion, x: &Complex, mode: LiftMode) -> LiftingReport {
    let (dom, incl) = f.domain();
    let c = f.codomain();
    let mut report = LiftingReport::new(f, x.name(), mode);
    let plan = plan_for(f);
    for_each_map(&dom, x, &mut |boundary| {
        let (vs, es) = partial_on_codomain(f, &incl, &boundary);
        let found = first_extensions(&plan, c, x, &vs, &es, &Constraint::default(), 2);
        report.record(found.len(), || LiftingCertificate {
            shape: f.name().to_string(),
            target: x.name().to_string(),
            boundary: NamedMap::new(&dom, x, &boundary),
            bottom: None,
            verdict: verdict(c, x, &found),
            raw_boundary: boundary.clone(),
            raw_extensions: found.clone(),
        });
    });
    report
}

/// Does `p: m → n` have the right lifting property against `f`: for every
/// square (top: dom f → m, bottom: cod f → n, p ∘ top = bottom ∘ f) is there
/// a (unique) diagonal l: cod f → m with l ∘ f = top and p ∘ l = bottom?
pub fn check_relative_lifting(
    f: &ShapeInclusion,
    m: &Complex,
    n: &Complex,
    p: &SimplicialMap,
    mode: LiftMode,
) -> RelativeLiftingReport {
    let (dom, incl) = f.domain();
    let c = f.codomain();
    let mut report = LiftingReport::new(f, &format!("{} → {}", m.name(), n.name()), mode);
    let plan = plan_for(f);
    for_each_map(&dom, m, &mut |top| {
        let pushed = top.then(p);
        let (bv, be) = partial_on_codomain(f, &incl, &pushed);
        let mut bottoms = Vec::new();
        plan.run(c, n, &bv, &be, &Constraint::default(), &mut |b| {
            bottoms.push(b.clone());
            ControlFlow::Continue(())
        });
        let (tv, te) = partial_on_codomain(f, &incl, &top);
        for bottom in bottoms {
            let over_v = |v: usize, w: usize| p.vertices[w] == bottom.vertices[v];
            let over_e = |e: usize, g: usize| p.edges[g] == bottom.edges[e];
            let constraint = Constraint { vertex: Some(&over_v), edge: Some(&over_e), injective: false };
            let found = first_extensions(&plan, c, m, &tv, &te, &constraint, 2);
            report.record(found.len(), || LiftingCertificate {
                shape: f.name().to_string(),
                target: format!("{} → {}", m.name(), n.name()),
                boundary: NamedMap::new(&dom, m, &top),
                bottom: Some(NamedMap::new(c, n, &bottom)),
                verdict: verdict(c, m, &found),
                raw_boundary: top.clone(),
                raw_extensions: found.clone(),
            });
        }
    });
    report
}
