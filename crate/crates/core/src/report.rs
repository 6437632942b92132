//! Rendering of reports as JSON, LaTeX or plain text.
//!
//! JSON goes through `serde_json::Value`, whose maps are ordered, so keys
//! come out sorted and output is byte-stable.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{CatalogClass, DeltaRow};
use crate::conic_bundle::{discriminants, schedule_from, BlowUpSchedule, DiscriminantReport};
use crate::error::{Error, Result};
use crate::invariants::{is_lebrun, SequenceInvariants, SEMI_FREE_NOTICE};
use crate::minitwistor::{ConformalInvariant, MinitwistorModel, Sign};
use crate::rational::format_rational;
use crate::sequence::MarkedSequence;
use crate::tables::{FamilyRow, FibonacciRow};
use crate::toric_fan::{fan_from_sequence, self_intersections, HalfFan};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Json,
    Latex,
    Text,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            "text" => Ok(Format::Text),
            other => Err(Error::InvalidArgument(format!(
                "unknown format '{other}' (expected json, latex or text)"
            ))),
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let v = serde_json::to_value(value)?;
    Ok(serde_json::to_string_pretty(&v)? + "\n")
}

fn seq_list<T: ToString>(v: &[T]) -> String {
    let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

fn or_none(v: &[usize]) -> String {
    if v.is_empty() {
        "none".into()
    } else {
        v.iter().map(usize::to_string).collect::<Vec<_>>().join(", ")
    }
}

/// Everything known about one marked sequence.
#[derive(Debug, Clone)]
pub struct AnalyzeReport {
    pub inv: SequenceInvariants,
    pub fan: HalfFan,
    pub self_intersections: Vec<i64>,
    pub is_lebrun: bool,
    pub model: MinitwistorModel,
    pub joyce: DiscriminantReport,
    pub deformed: Option<DiscriminantReport>,
    pub schedule: BlowUpSchedule,
}

impl AnalyzeReport {
    pub fn build(seq: &MarkedSequence, lambdas: Option<&ConformalInvariant>, c: Sign) -> Result<Self> {
        let inv = SequenceInvariants::compute(seq)?;
        let fan = fan_from_sequence(seq)?;
        let si = self_intersections(&fan)?;
        let default = ConformalInvariant::default_for(seq.n());
        let model = MinitwistorModel::build(&inv.l, lambdas.unwrap_or(&default), c)?;
        let (joyce, deformed) = discriminants(&inv)?;
        let schedule = schedule_from(&inv)?;
        Ok(AnalyzeReport {
            is_lebrun: is_lebrun(&fan)?,
            self_intersections: si.values,
            fan,
            model,
            joyce,
            deformed,
            schedule,
            inv,
        })
    }

    pub fn to_value(&self) -> Result<Value> {
        let mut v = serde_json::to_value(&self.inv)?;
        let obj = v.as_object_mut().expect("invariants serialize as an object");
        obj.insert(
            "input".into(),
            json!({
                "seq": self.inv.seq,
                "lambda": self.model.lambdas,
                "c": self.model.c_sign,
            }),
        );
        obj.insert("y".into(), json!(self.inv.y.display_sum()));
        obj.insert("restriction".into(), serde_json::to_value(&self.inv.restriction)?);
        obj.insert("regular".into(), json!(self.inv.regularity.regular));
        obj.insert("semi_free".into(), json!(self.inv.regularity.semi_free));
        if self.inv.regularity.semi_free {
            obj.insert("notice".into(), json!(SEMI_FREE_NOTICE));
        }
        obj.insert("fan".into(), serde_json::to_value(&self.fan)?);
        obj.insert("self_intersections".into(), json!(self.self_intersections));
        obj.insert("is_lebrun".into(), json!(self.is_lebrun));
        obj.insert("minitwistor".into(), serde_json::to_value(&self.model)?);
        obj.insert("discriminant_joyce".into(), serde_json::to_value(&self.joyce)?);
        obj.insert("discriminant_deformed".into(), serde_json::to_value(&self.deformed)?);
        obj.insert("blow_up_schedule".into(), serde_json::to_value(&self.schedule)?);
        Ok(v)
    }

    pub fn render(&self, format: Format) -> Result<String> {
        match format {
            Format::Json => to_json(&self.to_value()?),
            Format::Text => Ok(self.to_text()),
            Format::Latex => Ok(self.to_latex()),
        }
    }

    fn to_text(&self) -> String {
        let inv = &self.inv;
        let mut out = String::new();
        let _ = writeln!(out, "sequence: {}", inv.seq);
        let _ = writeln!(out, "n: {}", inv.seq.n());
        let _ = writeln!(out, "m: {}", inv.m());
        let steps: Vec<String> = inv.trace.steps.iter().map(|(i, j)| format!("({i},{j})")).collect();
        let _ = writeln!(out, "trace: {}", steps.join(" "));
        let _ = writeln!(out, "Y: {}", inv.y.display_sum());
        let _ = writeln!(out, "l+: {}", seq_list(&inv.y.plus));
        let _ = writeln!(out, "l-: {}", seq_list(&inv.y.minus));
        let _ = writeln!(out, "l: {}", seq_list(&inv.l.l));
        out.push_str(&regularity_text(inv));
        let rays: Vec<String> = self.fan.rays().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "fan: {}", rays.join(" "));
        let _ = writeln!(out, "self-intersections: {}", seq_list(&self.self_intersections));
        let _ = writeln!(out, "lebrun: {}", yes_no(self.is_lebrun));
        out.push_str(&model_text(&self.model));
        out.push_str(&discriminant_text("Joyce discriminant", &self.joyce));
        if let Some(d) = &self.deformed {
            out.push_str(&discriminant_text("deformed discriminant", d));
        }
        out.push_str(&schedule_text(&self.schedule));
        out
    }

    fn to_latex(&self) -> String {
        let mut out = format!("\\[ {} \\]\n", self.model.equation_latex);
        let _ = writeln!(
            out,
            "% sequence {}, m = {}, surface of degree {} in CP^{}",
            self.inv.seq,
            self.model.m,
            self.model.surface_degree,
            self.model.ambient_dim
        );
        out.push_str(&discriminant_latex(&self.joyce, self.deformed.as_ref()));
        out
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn regularity_text(inv: &SequenceInvariants) -> String {
    let reg = &inv.regularity;
    match (reg.r, reg.s, reg.slack, reg.deformable) {
        (Some(r), Some(s), Some(slack), Some(d)) => {
            format!("r: {r}\ns: {s}\nslack: {slack}\ndeformable: {}\n", yes_no(d))
        }
        _ => format!("{SEMI_FREE_NOTICE}\n"),
    }
}

fn model_text(model: &MinitwistorModel) -> String {
    let mut out = String::new();
    let lam: Vec<String> = model.lambdas.values().iter().map(ToString::to_string).collect();
    let _ = writeln!(out, "lambda: {}", lam.join(", "));
    let _ = writeln!(out, "c: {:+}", model.c_sign.as_i32());
    let _ = writeln!(out, "equation: {}", model.equation_text);
    let second = format!("u{}", model.n + 2);
    let _ = writeln!(out, "rhs: {}", model.rhs.to_text(&second));
    let _ = writeln!(
        out,
        "ambient: CP^{}, degree {}, dim V_m = {}, dim W_m = {}",
        model.ambient_dim, model.surface_degree, model.dim_vm, model.dim_wm
    );
    if model.singularities.is_empty() {
        out.push_str("singularities: none\n");
    } else {
        out.push_str("singularities:\n");
        for s in &model.singularities {
            let _ = writeln!(out, "  {s}");
        }
    }
    let fibers = |v: &[crate::minitwistor::FiberPoint]| {
        if v.is_empty() {
            "none".to_string()
        } else {
            v.iter()
                .map(|p| format!("lambda_{} = {}", p.index, p.lambda))
                .collect::<Vec<_>>()
                .join(", ")
        }
    };
    let _ = writeln!(out, "reducible fibers: {}", fibers(&model.reducible_fibers));
    let _ = writeln!(out, "irreducible marked fibers: {}", fibers(&model.irreducible_marked_fibers));
    match model.moduli_dim {
        Some(d) => {
            let _ = writeln!(out, "moduli dimension: {d}");
        }
        None => out.push_str("moduli dimension: undefined (m = 1)\n"),
    }
    let _ = writeln!(out, "fixed lines: {}", or_none(&model.fixed_lines));
    out
}

fn discriminant_text(title: &str, d: &DiscriminantReport) -> String {
    let chains: Vec<String> = d
        .reducible_fiber_chains
        .iter()
        .map(|c| format!("{} (length {})", c.index, c.length))
        .collect();
    let mut out = format!("{title}:\n  sections: {}\n", d.sections.join(", "));
    let _ = writeln!(
        out,
        "  reducible fibers: {}",
        if chains.is_empty() { "none".into() } else { chains.join(", ") }
    );
    let _ = writeln!(out, "  irreducible fibers: {}", or_none(&d.irreducible_fibers));
    if d.deformed {
        let _ = writeln!(
            out,
            "  hyperplane sections: {} (from {})",
            d.hyperplane_sections,
            or_none(&d.moved_to_hyperplane_sections)
        );
    }
    let _ = writeln!(out, "  possibly non-reduced: {}", yes_no(d.possibly_non_reduced));
    let _ = writeln!(out, "  residual member: {}", d.residual_member);
    out
}

fn discriminant_latex(joyce: &DiscriminantReport, deformed: Option<&DiscriminantReport>) -> String {
    let mut out = String::from("\\begin{tabular}{lll}\n\\hline\ncomponent & Joyce & deformed \\\\\n\\hline\n");
    let chains = |d: &DiscriminantReport| {
        let v: Vec<String> = d
            .reducible_fiber_chains
            .iter()
            .map(|c| format!("${}\\,({})$", c.index, c.length))
            .collect();
        if v.is_empty() {
            "--".into()
        } else {
            v.join(", ")
        }
    };
    let list = |v: &[usize]| {
        if v.is_empty() {
            "--".to_string()
        } else {
            format!("${}$", v.iter().map(usize::to_string).collect::<Vec<_>>().join(", "))
        }
    };
    let na = "n/a".to_string();
    let _ = writeln!(
        out,
        "sections & $\\Gamma, \\bar\\Gamma$ & {} \\\\",
        deformed.map_or(na.clone(), |_| "$\\Gamma, \\bar\\Gamma$".into())
    );
    let _ = writeln!(
        out,
        "reducible fibres & {} & {} \\\\",
        chains(joyce),
        deformed.map_or(na.clone(), chains)
    );
    let _ = writeln!(
        out,
        "irreducible fibres & {} & {} \\\\",
        list(&joyce.irreducible_fibers),
        deformed.map_or(na.clone(), |d| list(&d.irreducible_fibers))
    );
    let _ = writeln!(
        out,
        "hyperplane sections & $0$ & {} \\\\",
        deformed.map_or(na, |d| format!("${}$", d.hyperplane_sections))
    );
    out.push_str("\\hline\n\\end{tabular}\n");
    out
}

fn schedule_text(s: &BlowUpSchedule) -> String {
    let mut out = format!(
        "blow-up schedule: M = {}, {} stage(s), normal bundle O({},{}) with l = {}\n",
        s.max_l,
        s.stages.len(),
        s.normal_bundle.0,
        s.normal_bundle.1,
        s.l
    );
    for st in &s.stages {
        let suffix = if st.stage >= 3 { " (and conjugates)" } else { "" };
        let _ = writeln!(out, "  stage {}: {}{suffix}", st.stage, st.centers.join(", "));
    }
    out
}

/// The `equation` subcommand.
pub fn render_equation(model: &MinitwistorModel, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&json!({
            "n": model.n,
            "m": model.m,
            "lambda": model.lambdas,
            "c": model.c_sign,
            "rhs": model.rhs,
            "q": model.q,
            "equation_latex": model.equation_latex,
            "equation_text": model.equation_text,
        })),
        Format::Latex => Ok(format!("\\[ {} \\]\n", model.equation_latex)),
        Format::Text => {
            let second = format!("u{}", model.n + 2);
            Ok(format!(
                "{}\nrhs: {}\n",
                model.equation_text,
                model.rhs.to_text(&second)
            ))
        }
    }
}

/// The `deform-check` subcommand.
pub fn render_deform_check(inv: &SequenceInvariants, format: Format) -> Result<String> {
    let reg = &inv.regularity;
    let (_, deformed) = discriminants(inv)?;
    match format {
        Format::Json => {
            let mut v = json!({
                "n": inv.seq.n(),
                "k": inv.seq,
                "r": reg.r,
                "s": reg.s,
                "slack": reg.slack,
                "deformable": reg.deformable,
                "semi_free": reg.semi_free,
                "discriminant_deformed": deformed,
            });
            if reg.semi_free {
                v["notice"] = json!(SEMI_FREE_NOTICE);
            }
            to_json(&v)
        }
        Format::Text => {
            let mut out = format!("sequence: {}\n", inv.seq);
            out.push_str(&regularity_text(inv));
            if let Some(d) = &deformed {
                out.push_str(&discriminant_text("deformed discriminant", d));
            }
            Ok(out)
        }
        Format::Latex => {
            let joyce = discriminants(inv)?.0;
            Ok(discriminant_latex(&joyce, deformed.as_ref()))
        }
    }
}

/// The `schedule` subcommand.
pub fn render_schedule(s: &BlowUpSchedule, format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(s),
        Format::Text => Ok(schedule_text(s)),
        Format::Latex => {
            let mut out = String::from("\\begin{tabular}{ll}\n\\hline\nstage & centres \\\\\n\\hline\n");
            for st in &s.stages {
                let centers: Vec<String> = st
                    .centers
                    .iter()
                    .map(|c| format!("${}$", latex_center(c)))
                    .collect();
                let _ = writeln!(out, "{} & {} \\\\", st.stage, centers.join(", "));
            }
            out.push_str("\\hline\n\\end{tabular}\n");
            Ok(out)
        }
    }
}

/// `Cbar_12 ∩ S_3^-` becomes `\\bar{C}_{12} \\cap S_{3}^-`.
fn latex_center(name: &str) -> String {
    let name = name
        .replace("Cbar_", "\\bar{C}_")
        .replace("Ebar_", "\\bar{E}_")
        .replace('∩', "\\cap");
    let mut out = String::new();
    let mut chars = name.chars().peekable();
    while let Some(ch) = chars.next() {
        out.push(ch);
        if ch == '_' {
            let mut digits = String::new();
            while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
                digits.push(*d);
                chars.next();
            }
            out.push_str(&format!("{{{digits}}}"));
        }
    }
    out
}

/// The `catalog` subcommand.
pub fn render_catalog(
    n: usize,
    mode: &str,
    relation: &str,
    classes: &[CatalogClass],
    format: Format,
) -> Result<String> {
    match format {
        Format::Json => to_json(&json!({
            "n": n,
            "mode": mode,
            "relation": relation,
            "count": classes.len(),
            "classes": classes,
        })),
        Format::Text | Format::Latex => {
            let mut out = format!("n = {n}, {} {mode} classes ({relation})\n", classes.len());
            for c in classes {
                let slack = c.slack.map_or("-".to_string(), |s| s.to_string());
                let _ = writeln!(
                    out,
                    "{}  key {}  m {}  l {}  slack {}  members {}",
                    c.canonical,
                    c.u1_key,
                    c.m,
                    seq_list(&c.l),
                    slack,
                    c.members.len()
                );
            }
            Ok(out)
        }
    }
}

pub fn render_delta(rows: &[DeltaRow], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&json!({ "table": "delta", "rows": rows, "golden": "match" })),
        Format::Text | Format::Latex => {
            let mut out = String::from("n  delta  marked  delta/n^2\n");
            for r in rows {
                let ratio = r.ratio.as_ref().map_or("-".into(), format_rational);
                let _ = writeln!(out, "{}  {}  {}  {}", r.n, r.delta, r.marked_classes, ratio);
            }
            out.push_str("golden: match\n");
            Ok(out)
        }
    }
}

pub fn render_fibonacci(rows: &[FibonacciRow], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&json!({ "table": "fibonacci", "rows": rows, "golden": "match" })),
        Format::Text | Format::Latex => {
            let mut out = String::from("n  sequence  l  m\n");
            for r in rows {
                let _ = writeln!(out, "{}  {}  {}  {}", r.n, r.sequence, seq_list(&r.l), r.m);
            }
            out.push_str("golden: match\n");
            Ok(out)
        }
    }
}

pub fn render_family(name: &str, n: usize, rows: &[FamilyRow], format: Format) -> Result<String> {
    match format {
        Format::Json => to_json(&json!({ "table": name, "n": n, "rows": rows, "golden": "match" })),
        Format::Text | Format::Latex => {
            let mut out = format!("{name} family, n = {n}: {} sequences\n", rows.len());
            for r in rows {
                let slack = r.slack.map_or("semi-free".to_string(), |s| s.to_string());
                let _ = writeln!(
                    out,
                    "{}  m {}  l {}  slack {}  deformable {}  real singularities {}",
                    r.sequence,
                    r.m,
                    seq_list(&r.l),
                    slack,
                    r.deformable.map_or("-", yes_no),
                    yes_no(r.real_singularities)
                );
            }
            out.push_str("golden: match\n");
            Ok(out)
        }
    }
}
