//! Text, JSON and CSV output.

use std::fmt::Write;

use serde::Serialize;
use vample::criteria::{RuleFiring, CATALOG, RULE_COUNT};
use vample::{
    classify_ample, classify_globally_generated, classify_normally_generated, classify_very_ample,
    divisor_degree, embedding_profile, Bundle, Divisor, Error, Outcome, Rational, RuleId, Strength,
    Verdict,
};

pub fn json<T: Serialize + ?Sized>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain data serializes");
    out.push('\n');
    out
}

fn firing_detail(f: &RuleFiring) -> String {
    if f.outcome == Outcome::Inapplicable && f.checks.is_empty() {
        return format!("guard: {}", f.condition);
    }
    let checks: Vec<String> = f.checks.iter().map(|c| c.to_string()).collect();
    if f.outcome == Outcome::Inapplicable {
        format!("guard fails: {}", checks.join("; "))
    } else {
        checks.join("; ")
    }
}

fn verdict_summary(v: &Verdict) -> String {
    match (v.strength, v.binding_rule) {
        (Some(s), Some(rule)) => format!("{} ({s}, {rule})", v.status_label()),
        (None, Some(rule)) => format!("{} ({rule})", v.status_label()),
        _ => v.status_label().to_owned(),
    }
}

pub fn verdict_text(e: &Bundle, div: Divisor, v: &Verdict) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "bundle         {e}  (rank {}, degree {})",
        e.rank(),
        e.degree()
    );
    let _ = writeln!(out, "divisor        a = {}, b = {}", div.a, div.b);
    let _ = writeln!(out, "b + a*mu^-(E)  {}", v.slope_invariant);
    let _ = writeln!(out, "very ample     {}", verdict_summary(v));
    if let Some(f) = v.binding_firing() {
        let spec = f.rule_id.spec();
        let _ = writeln!(
            out,
            "binding        {} in frame {}: {}",
            f.rule_id,
            f.frame,
            firing_detail(f)
        );
        let _ = writeln!(out, "               {}", spec.citation);
        let _ = writeln!(out, "               anchor: {}", spec.anchor);
    }
    if let Some(w) = v.unknown_window {
        let reason = match w.reason {
            vample::criteria::WindowReason::OpenRange => "open range of the known criteria",
            vample::criteria::WindowReason::NoGuardApplies => "no specific criterion applies",
        };
        let _ = writeln!(out, "open window    b + a*mu^-(E) in {w}  ({reason})");
    }
    let _ = writeln!(out);
    let _ = writeln!(
        out,
        "{:<14} {:>5}  {:<10}  {:<12}  condition",
        "rule", "frame", "strength", "outcome"
    );
    for f in &v.firings {
        let _ = writeln!(
            out,
            "{:<14} {:>5}  {:<10}  {:<12}  {}",
            f.rule_id.as_str(),
            f.frame,
            f.strength.to_string(),
            f.outcome.to_string(),
            firing_detail(f)
        );
    }
    out
}

/// One `table` cell.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub a: i64,
    pub b: i64,
    pub status: &'static str,
    pub strength: Option<Strength>,
    pub binding_rule: Option<RuleId>,
    pub slope_invariant: Rational,
}

impl Row {
    pub fn new(div: Divisor, v: &Verdict) -> Self {
        Row {
            a: div.a,
            b: div.b,
            status: v.status_label(),
            strength: v.strength,
            binding_rule: v.binding_rule,
            slope_invariant: v.slope_invariant,
        }
    }
}

fn or_blank<T: ToString>(x: Option<T>) -> String {
    x.map(|x| x.to_string()).unwrap_or_default()
}

pub fn table_csv(rows: &[Row]) -> String {
    let mut out = String::from("a,b,status,strength,binding_rule,slope_invariant\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{},{}",
            r.a,
            r.b,
            r.status,
            or_blank(r.strength),
            or_blank(r.binding_rule),
            r.slope_invariant
        );
    }
    out
}

pub fn table_text(rows: &[Row]) -> String {
    let mut out = format!(
        "{:>4} {:>4}  {:<13} {:<10} {:<14} {}\n",
        "a", "b", "status", "strength", "binding_rule", "b + a*mu^-(E)"
    );
    for r in rows {
        let _ = writeln!(
            out,
            "{:>4} {:>4}  {:<13} {:<10} {:<14} {}",
            r.a,
            r.b,
            r.status,
            or_blank(r.strength),
            or_blank(r.binding_rule),
            r.slope_invariant
        );
    }
    out
}

pub fn rules_text() -> String {
    let mut out = format!("{RULE_COUNT} rules\n");
    for spec in &CATALOG {
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "{}  [{}, {}]",
            spec.name,
            spec.property.label(),
            spec.strength
        );
        let _ = writeln!(out, "  guard      {}", spec.guard);
        let _ = writeln!(out, "  condition  {}", spec.condition);
        let _ = writeln!(out, "  citation   {}", spec.citation);
        let _ = writeln!(out, "  anchor     {}", spec.anchor);
    }
    out
}

#[derive(Debug, Serialize)]
pub struct Stage {
    pub slope: Rational,
    pub rank: i64,
    pub degree: i64,
    pub summands: String,
}

/// Everything `invariants` reports.
#[derive(Debug, Serialize)]
pub struct Invariants {
    pub bundle: String,
    pub rank: i64,
    pub degree: i64,
    pub slope: Rational,
    pub mu_minus: Rational,
    pub mu_plus: Rational,
    pub hn_stages: Vec<Stage>,
    pub bundle_ample: bool,
    pub a: i64,
    pub b: i64,
    pub divisor_degree: i64,
    pub h0: Option<i64>,
    pub ambient_dim: Option<i64>,
    /// Why `h0` is missing.
    pub h0_note: Option<String>,
    pub ample: bool,
    pub globally_generated: Option<Verdict>,
    pub normally_generated: Option<Verdict>,
    pub very_ample: Verdict,
}

fn positive_a(result: Result<Verdict, Error>) -> Result<Option<Verdict>, Error> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(Error::NonPositiveA(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

impl Invariants {
    pub fn compute(e: &Bundle, div: Divisor) -> Result<Self, Error> {
        let ample = classify_ample(e, div)?;
        let (h0, ambient_dim, h0_note) = match embedding_profile(e, div.a, div.b) {
            Ok(p) => (Some(p.h0), Some(p.ambient_dim), None),
            Err(err @ (Error::H0Undefined(_) | Error::NonPositiveA(_))) => {
                (None, None, Some(err.to_string()))
            }
            Err(err) => return Err(err),
        };
        Ok(Invariants {
            bundle: e.to_string(),
            rank: e.rank(),
            degree: e.degree(),
            slope: e.slope(),
            mu_minus: e.mu_minus(),
            mu_plus: e.mu_plus(),
            hn_stages: e
                .hn_filtration()
                .into_iter()
                .map(|s| Stage {
                    slope: s.slope,
                    rank: s.rank(),
                    degree: s.degree(),
                    summands: Bundle::new(s.atoms.iter().copied())
                        .expect("stages are non-empty")
                        .to_string(),
                })
                .collect(),
            bundle_ample: e.is_ample(),
            a: div.a,
            b: div.b,
            divisor_degree: divisor_degree(e, div.a, div.b)?,
            h0,
            ambient_dim,
            h0_note,
            ample,
            globally_generated: positive_a(classify_globally_generated(e, div))?,
            normally_generated: positive_a(classify_normally_generated(e, div))?,
            very_ample: classify_very_ample(e, div)?,
        })
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let _ = writeln!(out, "bundle              {}", self.bundle);
        let _ = writeln!(out, "rank, degree        {}, {}", self.rank, self.degree);
        let _ = writeln!(out, "slope               {}", self.slope);
        let _ = writeln!(
            out,
            "mu^-, mu^+          {}, {}",
            self.mu_minus, self.mu_plus
        );
        for (i, s) in self.hn_stages.iter().enumerate() {
            let label = if i == 0 { "HN stages" } else { "" };
            let _ = writeln!(out, "{label:<19} {}  (slope {})", s.summands, s.slope);
        }
        let _ = writeln!(out, "E ample             {}", yes_no(self.bundle_ample));
        let _ = writeln!(out, "divisor             a = {}, b = {}", self.a, self.b);
        let _ = writeln!(
            out,
            "degree D^{}          {}",
            self.rank, self.divisor_degree
        );
        match (self.h0, self.ambient_dim) {
            (Some(h0), Some(n)) => {
                let _ = writeln!(out, "h0(D)               {h0}");
                let _ = writeln!(out, "ambient             P^{n}");
            }
            _ => {
                let note = self.h0_note.as_deref().unwrap_or("undefined");
                let _ = writeln!(out, "h0(D)               undefined: {note}");
            }
        }
        let _ = writeln!(
            out,
            "ample               {}",
            if self.ample { "Yes" } else { "No" }
        );
        let optional = |v: &Option<Verdict>| {
            v.as_ref()
                .map_or("undefined (a must be positive)".to_owned(), verdict_summary)
        };
        let _ = writeln!(
            out,
            "globally generated  {}",
            optional(&self.globally_generated)
        );
        let _ = writeln!(
            out,
            "normally generated  {}",
            optional(&self.normally_generated)
        );
        let _ = writeln!(
            out,
            "very ample          {}",
            verdict_summary(&self.very_ample)
        );
        out
    }
}
