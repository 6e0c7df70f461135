//! One function per subcommand. Each returns the structured results, any
//! certificates and the human-readable rendering.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;
use std::str::FromStr;

use fa_core::algebra::catalog::{self, NAMES};
use fa_core::algebra::enumerate::{enumerate_small, EnumKind, Enumerated};
use fa_core::algebra::iso::relfa_isomorphism;
use fa_core::algebra::{validate, EffectAlgebra, Kind, PartialAlgebra, RelFa, Structure};
use fa_core::format::{self, StructureFile};
use fa_core::homology::{h1, h1_universal_group, universal_group_direct};
use fa_core::mapping::{
    eval_fibration_check, hom_object_ea, mapping_complex, verify_mapping_theorem, Counts, PmMorphism,
};
use fa_core::nerve::{nerve, nerve_to_algebra, recognize_nerve};
use fa_core::ortho::{classify as classify_flags, Flag};
use fa_core::simplicial::{check_lifting, make_shape, LiftMode};
use fa_core::{Error, Result, Status, ValidationReport};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{Input, Loaded};

pub struct Outcome {
    pub pass: bool,
    pub results: Value,
    pub certificates: Vec<Value>,
    pub text: String,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn mark(b: bool) -> &'static str {
    if b {
        "✓"
    } else {
        "✗"
    }
}

fn write_file(path: &str, contents: &str) -> Result<()> {
    fs::write(path, contents).map_err(|e| Error::input(path, e.to_string()))
}

fn report_text(r: &ValidationReport) -> String {
    let mut s = format!("{} {}: {}\n", r.kind, r.subject, if r.pass { "pass" } else { "fail" });
    for v in r.axioms.iter() {
        let sym = match v.status {
            Status::Pass => "✓",
            Status::Fail => "✗",
            Status::Automatic => "·",
        };
        let _ = write!(s, "  {sym} {}", v.name);
        if let Some(c) = &v.counterexample {
            if !c.is_empty() {
                let _ = write!(s, " ({})", c.join(", "));
            }
        }
        if let Some(d) = &v.detail {
            let _ = write!(s, ": {d}");
        }
        s.push('\n');
    }
    for v in &r.derived {
        let _ = writeln!(s, "  {} {} (derived)", mark(v.passed()), v.name);
    }
    s
}

fn report_certificates(r: &ValidationReport) -> Vec<Value> {
    r.axioms
        .iter()
        .filter(|v| !v.passed())
        .map(|v| json!({ "axiom": v.name, "counterexample": v.counterexample, "certificate": v.certificate }))
        .collect()
}

fn from_report(r: ValidationReport) -> Outcome {
    Outcome { pass: r.pass, certificates: report_certificates(&r), text: report_text(&r), results: to_value(&r) }
}

pub fn validate_cmd(input: &Input, kind: Option<&str>) -> Result<Outcome> {
    let l = &input.loaded;
    let kind = kind.unwrap_or(match l {
        Loaded::Effect(_) => "effect-algebra",
        Loaded::Pseudo(_) => "pseudo-effect-algebra",
        Loaded::Rel(_) => "frobenius",
        Loaded::Complex(_) => "nerve",
    });
    if kind == "nerve" {
        return Ok(from_report(recognize_nerve(&l.complex()?)));
    }
    let kind = Kind::from_str(kind)?;
    let structure = match l {
        Loaded::Effect(t) | Loaded::Pseudo(t) => Structure::Table(t.clone()),
        Loaded::Rel(r) => Structure::Rel(r.clone()),
        Loaded::Complex(c) => Structure::Rel(nerve_to_algebra(c)?),
    };
    Ok(from_report(validate(kind, &structure)?))
}

fn witness_text(flag: &Flag, vars: &[&str]) -> String {
    match &flag.witness {
        None => String::new(),
        Some(w) if w.len() == vars.len() => {
            let parts: Vec<String> = vars.iter().zip(w).map(|(v, x)| format!("{v}={x}")).collect();
            format!(" (witness {})", parts.join(", "))
        }
        Some(w) => format!(" (witness {})", w.join(", ")),
    }
}

pub fn classify(input: &Input) -> Result<Outcome> {
    let f = input.loaded.relfa()?;
    let flags = classify_flags(&f);
    let mut text = format!("{}\n", flags.subject);
    let mut line = |name: &str, flag: &Flag, vars: &[&str]| {
        let _ = writeln!(text, "  {name} {}{}", mark(flag.holds), witness_text(flag, vars));
    };
    line("commutative", &flags.commutative, &["a", "b"]);
    line("cancellative", &flags.cancellative, &["x", "y", "y'", "c"]);
    line("epsilon_boxslash_is_eta", &flags.epsilon_boxslash_is_eta, &["a"]);
    line("eta_singleton", &flags.eta_singleton, &[]);
    line("counit_boxslash_singletons", &flags.counit_boxslash_singletons, &["e"]);
    line("effect_algebra", &Flag { holds: flags.effect_algebra, witness: None }, &[]);
    if let Some(oa) = &flags.orthoalgebra {
        line("orthoalgebra", oa, &["a"]);
    }
    if let Some(omp) = &flags.orthomodular_poset {
        line("orthomodular_poset", omp, &["a", "b"]);
    }
    line("braided", &flags.braided, &[]);
    if let Some(c) = &flags.coherence {
        line("coherence", c, &["a", "b", "c"]);
    }
    let agrees = flags.oracle_agrees();
    if !agrees {
        text.push_str("  order oracle disagrees with the ⊡ classification\n");
    }
    let certificates = if agrees { Vec::new() } else { vec![json!({ "order_oracle": flags.order_oracle })] };
    Ok(Outcome { pass: agrees, results: to_value(&flags), certificates, text })
}

fn counts_text(c: &Counts) -> String {
    format!("{} vertices, {} edges, {} marked, {} triangles", c.vertices, c.edges, c.marked, c.triangles)
}

pub fn nerve_cmd(input: &Input, out: Option<&str>) -> Result<Outcome> {
    let c = input.loaded.complex()?;
    let counts = Counts::of(&c);
    let file = StructureFile::from_complex(&c);
    let doc = format::to_json(&file);
    let mut results = json!({ "name": c.name(), "counts": counts });
    let text = match out {
        Some(path) => {
            write_file(path, &(doc + "\n"))?;
            results["written"] = json!(path);
            format!("{}: {}\nwritten to {path}\n", c.name(), counts_text(&counts))
        }
        None => {
            results["structure"] = to_value(&file);
            format!("{doc}\n")
        }
    };
    Ok(Outcome { pass: true, results, certificates: Vec::new(), text })
}

pub fn homology(input: &Input) -> Result<Outcome> {
    match input.loaded.effect_algebra() {
        Ok(e) => {
            let nerve_group = h1_universal_group(&e);
            let direct = universal_group_direct(&e);
            let pass = nerve_group.same_group(&direct);
            let mut text = format!("universal group: {nerve_group}\n");
            if !pass {
                let _ = writeln!(text, "direct presentation gives {direct}");
            }
            let results = json!({
                "subject": e.name(),
                "universal_group": nerve_group.to_string(),
                "h1": nerve_group,
                "direct": direct,
                "agree": pass,
            });
            let certificates = if pass { Vec::new() } else { vec![json!({ "direct": direct.to_string() })] };
            Ok(Outcome { pass, results, certificates, text })
        }
        Err(_) => {
            let c = input.loaded.complex()?;
            let g = h1(&c);
            let results = json!({ "subject": c.name(), "h1_group": g.to_string(), "h1": g });
            Ok(Outcome { pass: true, results, certificates: Vec::new(), text: format!("H1: {g}\n") })
        }
    }
}

/// A readable name for an interval: trivial, chain(n), or a catalog
/// algebra it is isomorphic to.
fn interval_label(i: &EffectAlgebra) -> String {
    let n = i.len();
    if n == 1 {
        return "trivial".into();
    }
    let total = (0..n).all(|a| (0..n).all(|b| i.leq(a, b) || i.leq(b, a)));
    if total {
        return format!("chain({})", n - 1);
    }
    let r = i.to_relfa();
    NAMES
        .iter()
        .filter_map(|name| catalog::lookup(name).ok())
        .filter_map(|item| item.effect_algebra().cloned())
        .find(|c| c.len() == n && relfa_isomorphism(&c.to_relfa(), &r).is_some())
        .map(|c| c.name().to_string())
        .unwrap_or_else(|| i.name().to_string())
}

fn morphism_label(h: &PmMorphism, e: &PartialAlgebra, f: &PartialAlgebra) -> String {
    if h.map.iter().all(|&x| x == f.zero()) {
        "zero".into()
    } else if e.carrier() == f.carrier() && e.sums().eq(f.sums()) && h.map.iter().enumerate().all(|(i, &x)| i == x) {
        "identity".into()
    } else {
        h.describe(e, f)
    }
}

pub fn hom(e_in: &Input, f_in: &Input) -> Result<Outcome> {
    if let (Ok(e), Ok(f)) = (e_in.loaded.effect_algebra(), f_in.loaded.effect_algebra()) {
        let g = hom_object_ea(&e, &f)?;
        let check = verify_mapping_theorem(&e, &f)?;
        let mut summary = serde_json::Map::new();
        let mut components = Vec::new();
        let mut text = format!("[{}, {}]: {} components\n", e.name(), f.name(), g.components.len());
        for c in &g.components {
            let label = morphism_label(&c.morphism, &e, &f);
            let interval = interval_label(&c.interval);
            let top = f.element(c.elements[c.interval.one()]).to_string();
            let _ = writeln!(text, "  {label} ↦ [0, {top}] ≅ {interval}");
            summary.insert(label.clone(), json!(interval));
            components.push(json!({
                "morphism": c.morphism.describe(&e, &f),
                "label": label,
                "interval_top": top,
                "interval": interval,
                "size": c.interval.len(),
            }));
        }
        let _ = writeln!(
            text,
            "mapping theorem: {}{}",
            if check.holds { "holds" } else { "fails" },
            if check.labelling_was_isomorphism { " (labelling is an isomorphism)" } else { "" }
        );
        let _ = writeln!(text, "hom object nerve: {}", counts_text(&check.hom_object));
        let _ = writeln!(text, "mapping complex:  {}", counts_text(&check.mapping_complex));
        let results = json!({
            "summary": summary,
            "components": components,
            "mapping_theorem": check,
        });
        let certificates = if check.holds { Vec::new() } else { vec![json!({ "mapping_theorem": check })] };
        return Ok(Outcome { pass: check.holds, results, certificates, text });
    }
    let (e, f) = (e_in.loaded.pseudo_effect_algebra()?, f_in.loaded.pseudo_effect_algebra()?);
    let mc = mapping_complex(&nerve(&e.to_relfa()).complex, &nerve(&f.to_relfa()).complex)?;
    let report = recognize_nerve(&mc.complex);
    let counts = mc.counts();
    let mut results = json!({ "counts": counts, "recognized": report.pass });
    let mut text = format!("[{}, {}]: {}\nnerve of an algebra: {}\n", e.name(), f.name(), counts_text(&counts), mark(report.pass));
    if report.pass {
        let flags = classify_flags(&nerve_to_algebra(&mc.complex)?);
        results["cancellative"] = json!(flags.cancellative.holds);
        let _ = writeln!(text, "cancellative: {}", mark(flags.cancellative.holds));
    }
    let certificates = report_certificates(&report);
    Ok(Outcome { pass: report.pass, results, certificates, text })
}

pub fn kan(e_in: &Input, f_in: &Input) -> Result<Outcome> {
    let (e, f) = (e_in.loaded.pseudo_effect_algebra()?, f_in.loaded.pseudo_effect_algebra()?);
    Ok(from_report(eval_fibration_check(&e, &f)?))
}

pub fn lift(shape: &str, input: &Input, unique: bool) -> Result<Outcome> {
    let f = make_shape(shape)?;
    let x = input.loaded.complex()?;
    let mode = if unique { LiftMode::Unique } else { LiftMode::Exists };
    let r = check_lifting(&f, &x, mode);
    let text = format!(
        "{} against {} ({}): {}\n  {} problems: {} without, {} with a unique, {} with several lifts\n",
        r.shape,
        r.target,
        if unique { "unique" } else { "exists" },
        if r.pass { "pass" } else { "fail" },
        r.problems,
        r.no_extension,
        r.unique_extension,
        r.multiple_extensions
    );
    let certificates = r.counterexample.iter().map(to_value).collect();
    Ok(Outcome { pass: r.pass, results: to_value(&r), certificates, text })
}

fn file_stem(name: &str) -> String {
    let mut s: String = name.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '-' }).collect();
    while s.contains("--") {
        s = s.replace("--", "-");
    }
    s.trim_matches('-').to_string()
}

fn enumerated_file(x: &Enumerated) -> StructureFile {
    match x {
        Enumerated::Effect(e) => StructureFile::from_table("effect_algebra", e),
        Enumerated::Pseudo(p) => StructureFile::from_table("pseudo_effect_algebra", p),
        Enumerated::Rel(r) => StructureFile::from_relfa(r),
    }
}

fn enumerated_name(x: &Enumerated) -> String {
    match x {
        Enumerated::Effect(e) => e.name().to_string(),
        Enumerated::Pseudo(p) => p.name().to_string(),
        Enumerated::Rel(r) => r.name().to_string(),
    }
}

pub fn enumerate(size: usize, kind: &str, emit: Option<&str>) -> Result<Outcome> {
    let kind = EnumKind::from_str(kind)?;
    let found = enumerate_small(size, kind)?;
    let names: Vec<String> = found.iter().map(enumerated_name).collect();
    let mut text = format!("{} {kind} structures of size {size}\n", found.len());
    for n in &names {
        let _ = writeln!(text, "  {n}");
    }
    let mut results = json!({ "kind": kind.to_string(), "size": size, "count": found.len(), "names": names });
    if let Some(dir) = emit {
        fs::create_dir_all(dir).map_err(|e| Error::input(dir, e.to_string()))?;
        let mut written = Vec::new();
        for x in &found {
            let path = Path::new(dir).join(format!("{}.json", file_stem(&enumerated_name(x))));
            let path = path.to_string_lossy().into_owned();
            write_file(&path, &(format::to_json(&enumerated_file(x)) + "\n"))?;
            written.push(path);
        }
        let _ = writeln!(text, "wrote {} files to {dir}", written.len());
        results["written"] = json!(written);
    }
    Ok(Outcome { pass: true, results, certificates: Vec::new(), text })
}

fn kind_of(item: &catalog::Item) -> &'static str {
    match item {
        catalog::Item::Effect(_) => "effect_algebra",
        catalog::Item::Pseudo(_) => "pseudo_effect_algebra",
        catalog::Item::Rel(_) => "relfa",
    }
}

pub fn catalog_list() -> Result<Outcome> {
    let mut entries = Vec::new();
    let mut text = String::new();
    for name in NAMES {
        let item = catalog::lookup(name)?;
        let size = item.relfa().len();
        let _ = writeln!(text, "{name:<24} {:<16} {size}", kind_of(&item));
        entries.push(json!({ "name": name, "kind": kind_of(&item), "size": size }));
    }
    Ok(Outcome { pass: true, results: json!({ "entries": entries }), certificates: Vec::new(), text })
}

fn table_text(t: &PartialAlgebra) -> String {
    let w = (0..t.len()).map(|i| t.element(i).chars().count()).max().unwrap_or(1).max(1);
    let mut s = format!("{:>w$} │", "⊕");
    for b in 0..t.len() {
        let _ = write!(s, " {:>w$}", t.element(b));
    }
    s.push('\n');
    for a in 0..t.len() {
        let _ = write!(s, "{:>w$} │", t.element(a));
        for b in 0..t.len() {
            let _ = write!(s, " {:>w$}", t.sum(a, b).map_or("·", |c| t.element(c)));
        }
        s.push('\n');
    }
    s
}

fn rel_text(r: &RelFa) -> String {
    let subset = |s: &[bool]| {
        let v: Vec<&str> = (0..r.len()).filter(|&i| s[i]).map(|i| r.element(i)).collect();
        v.join(", ")
    };
    let mut s = format!("η = {{{}}}, ε = {{{}}}\nμ:\n", subset(r.eta()), subset(r.epsilon()));
    for [a, b, c] in r.mu_names() {
        let _ = writeln!(s, "  μ({a}, {b}) ∋ {c}");
    }
    s
}

pub fn catalog_show(input: &Input) -> Result<Outcome> {
    let l = &input.loaded;
    let file = l.structure_file();
    let body = match l {
        Loaded::Effect(t) | Loaded::Pseudo(t) => table_text(t),
        Loaded::Rel(r) => rel_text(r),
        Loaded::Complex(c) => format!("{}\n", counts_text(&Counts::of(c))),
    };
    let text = format!("{}: {}, {} elements\n{body}", l.name(), file.kind, l.relfa()?.len());
    Ok(Outcome { pass: true, results: json!({ "structure": file }), certificates: Vec::new(), text })
}

pub fn catalog_export(input: &Input, out: Option<&str>) -> Result<Outcome> {
    let file = input.loaded.structure_file();
    let doc = format::to_json(&file);
    match out {
        Some(path) => {
            write_file(path, &(doc + "\n"))?;
            let text = format!("wrote {} to {path}\n", input.loaded.name());
            Ok(Outcome { pass: true, results: json!({ "written": path }), certificates: Vec::new(), text })
        }
        None => Ok(Outcome { pass: true, results: json!({ "structure": file }), certificates: Vec::new(), text: doc + "\n" }),
    }
}
