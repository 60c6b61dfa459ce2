//! Verdicts with rule provenance, and their stable JSON form.

use std::borrow::Cow;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::catalog::RuleId;
use crate::rational::Rational;

/// Which positivity property a verdict is about.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    VeryAmple,
    GloballyGenerated,
    NormallyGenerated,
}

impl Property {
    pub fn label(&self) -> &'static str {
        match self {
            Property::VeryAmple => "very ample",
            Property::GloballyGenerated => "globally generated",
            Property::NormallyGenerated => "normally generated",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Yes,
    No,
    Unknown,
}

impl Status {
    /// `VeryAmple` / `NotVeryAmple` / `Unknown` for very ampleness, plain
    /// `Yes` / `No` / `Unknown` otherwise.
    pub fn label(&self, property: Property) -> &'static str {
        match (property, self) {
            (_, Status::Unknown) => "Unknown",
            (Property::VeryAmple, Status::Yes) => "VeryAmple",
            (Property::VeryAmple, Status::No) => "NotVeryAmple",
            (_, Status::Yes) => "Yes",
            (_, Status::No) => "No",
        }
    }

    fn from_label(property: Property, label: &str) -> Option<Status> {
        [Status::Yes, Status::No, Status::Unknown]
            .into_iter()
            .find(|s| s.label(property) == label)
    }
}

/// How much a rule can conclude.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Strength {
    Iff,
    Sufficient,
    Necessary,
}

impl fmt::Display for Strength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strength::Iff => "iff",
            Strength::Sufficient => "sufficient",
            Strength::Necessary => "necessary",
        })
    }
}

/// What one rule concluded in one frame.
///
/// `Inconclusive` means the guard held and the condition was evaluated but
/// the rule cannot conclude anything: a failed sufficient condition or a
/// satisfied necessary one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Outcome {
    Yes,
    No,
    Inconclusive,
    Inapplicable,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Yes => "yes",
            Outcome::No => "no",
            Outcome::Inconclusive => "inconclusive",
            Outcome::Inapplicable => "inapplicable",
        })
    }
}

/// One evaluated inequality `lhs > threshold` (strict) or `lhs >= threshold`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub expr: Cow<'static, str>,
    pub lhs: Rational,
    pub threshold: Rational,
    pub strict: bool,
    pub holds: bool,
}

impl Check {
    pub fn new(
        expr: impl Into<Cow<'static, str>>,
        lhs: Rational,
        threshold: Rational,
        strict: bool,
    ) -> Self {
        Check {
            expr: expr.into(),
            lhs,
            threshold,
            strict,
            holds: lhs.exceeds(threshold, strict),
        }
    }

    pub fn gt(expr: &'static str, lhs: Rational, threshold: Rational) -> Self {
        Check::new(expr, lhs, threshold, true)
    }

    pub fn ge(expr: &'static str, lhs: Rational, threshold: Rational) -> Self {
        Check::new(expr, lhs, threshold, false)
    }

    pub fn relation(&self) -> &'static str {
        match (self.strict, self.holds) {
            (true, true) => ">",
            (true, false) => "<=",
            (false, true) => ">=",
            (false, false) => "<",
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} = {} {} {}",
            self.expr,
            self.lhs,
            self.relation(),
            self.threshold
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RuleFiring {
    pub rule_id: RuleId,
    pub citation: Cow<'static, str>,
    pub strength: Strength,
    /// The decisive inequality (first failing check, else the first check),
    /// or the guard that did not apply.
    pub condition: Cow<'static, str>,
    pub lhs: Option<Rational>,
    pub threshold: Option<Rational>,
    pub strict: Option<bool>,
    pub outcome: Outcome,
    /// Twist `l` of the frame `(E ⊗ L, b - a·l)`, `deg L = l`, relative to the input.
    pub frame: i64,
    pub checks: Vec<Check>,
}

impl RuleFiring {
    pub fn is_affirmative(&self) -> bool {
        self.outcome == Outcome::Yes
    }

    pub fn is_negative(&self) -> bool {
        self.outcome == Outcome::No
    }
}

/// Why a verdict stayed `Unknown`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum WindowReason {
    /// `b + a·μ⁻` lies in the range `(0, 2]` that the known criteria leave open.
    OpenRange,
    /// Outside that range, but no rule's guard applied.
    NoGuardApplies,
}

/// The interval of `b + a·μ⁻` in which the case is open: `(lower, upper]`
/// when `upper_inclusive`, `(lower, upper)` otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnknownWindow {
    pub lower: Rational,
    pub upper: Rational,
    pub upper_inclusive: bool,
    pub reason: WindowReason,
}

impl UnknownWindow {
    pub fn contains(&self, x: Rational) -> bool {
        x > self.lower && (x < self.upper || (self.upper_inclusive && x == self.upper))
    }
}

impl fmt::Display for UnknownWindow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let close = if self.upper_inclusive { ']' } else { ')' };
        write!(f, "({}, {}{}", self.lower, self.upper, close)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "VerdictRecord", try_from = "VerdictRecord")]
pub struct Verdict {
    pub property: Property,
    pub status: Status,
    /// Set exactly when `status == Yes`.
    pub strength: Option<Strength>,
    pub binding_rule: Option<RuleId>,
    /// `b + a·μ⁻(E)`, the same in every frame.
    pub slope_invariant: Rational,
    pub firings: Vec<RuleFiring>,
    pub unknown_window: Option<UnknownWindow>,
}

impl Verdict {
    pub fn status_label(&self) -> &'static str {
        self.status.label(self.property)
    }

    pub fn binding_firing(&self) -> Option<&RuleFiring> {
        let id = self.binding_rule?;
        let wanted = match self.status {
            Status::Yes => Outcome::Yes,
            Status::No => Outcome::No,
            Status::Unknown => return None,
        };
        self.firings
            .iter()
            .filter(|f| f.rule_id == id && f.outcome == wanted)
            .min_by_key(|f| (f.frame.abs(), f.frame))
    }
}

#[derive(Serialize, Deserialize)]
struct VerdictRecord {
    property: Property,
    status: String,
    strength: Option<Strength>,
    binding_rule: Option<RuleId>,
    slope_invariant: Rational,
    firings: Vec<RuleFiring>,
    unknown_window: Option<UnknownWindow>,
}

impl From<Verdict> for VerdictRecord {
    fn from(v: Verdict) -> Self {
        VerdictRecord {
            property: v.property,
            status: v.status.label(v.property).to_owned(),
            strength: v.strength,
            binding_rule: v.binding_rule,
            slope_invariant: v.slope_invariant,
            firings: v.firings,
            unknown_window: v.unknown_window,
        }
    }
}

impl TryFrom<VerdictRecord> for Verdict {
    type Error = String;

    fn try_from(r: VerdictRecord) -> Result<Self, String> {
        let status = Status::from_label(r.property, &r.status)
            .ok_or_else(|| format!("unknown status {:?} for {}", r.status, r.property.label()))?;
        Ok(Verdict {
            property: r.property,
            status,
            strength: r.strength,
            binding_rule: r.binding_rule,
            slope_invariant: r.slope_invariant,
            firings: r.firings,
            unknown_window: r.unknown_window,
        })
    }
}
