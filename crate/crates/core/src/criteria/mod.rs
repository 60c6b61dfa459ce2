//! Guarded rules for positivity of `D ≡ aT + bf` on `P(E)`, evaluated in
//! every twist frame and merged into a verdict.

pub mod catalog;
mod rules;
pub mod verdict;

use std::borrow::Cow;

use serde::{Deserialize, Serialize};

use crate::bundle::Bundle;
use crate::error::{Error, Result};
use crate::rational::Rational;
pub use catalog::{RuleId, RuleSpec, CATALOG, RULE_COUNT, VERY_AMPLE_RULES};
use rules::{FrameView, SLOPE_EXPR};
pub use verdict::{
    Check, Outcome, Property, RuleFiring, Status, Strength, UnknownWindow, Verdict, WindowReason,
};

/// `D ≡ aT + bf`, with `B` known only through its degree `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Divisor {
    pub a: i64,
    pub b: i64,
}

impl Divisor {
    pub fn new(a: i64, b: i64) -> Self {
        Divisor { a, b }
    }

    /// The same divisor seen on `P(E ⊗ L)`, `deg L = l`.
    pub fn twist(&self, l: i64) -> Self {
        Divisor::new(self.a, self.b - self.a * l)
    }
}

/// A twist of the input: `(E ⊗ L, b - a·l)` with `deg L = shift`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    pub shift: i64,
    pub bundle: Bundle,
    pub b: i64,
}

fn require_rank(e: &Bundle) -> Result<()> {
    if e.rank() < 2 {
        return Err(Error::RankTooSmall {
            rank: e.rank(),
            min: 2,
        });
    }
    Ok(())
}

/// Twists `l` with `0 <= d + r·l <= 2r - 1`, ascending. There are always two.
pub fn canonical_frames(e: &Bundle, div: Divisor) -> Vec<Frame> {
    let (r, d) = (e.rank(), e.degree());
    let first = (-d).div_euclid(r) + i64::from((-d).rem_euclid(r) != 0);
    (first..)
        .take_while(|l| d + r * l < 2 * r)
        .map(|l| Frame {
            shift: l,
            bundle: e.twist(l),
            b: div.twist(l).b,
        })
        .collect()
}

/// Miyaoka: `D` is ample iff `a > 0` and `b + a·μ⁻(E) > 0`.
pub fn classify_ample(e: &Bundle, div: Divisor) -> Result<bool> {
    require_rank(e)?;
    Ok(div.a > 0 && (e.mu_minus() * div.a + div.b).is_positive())
}

fn require_positive_a(div: Divisor) -> Result<()> {
    if div.a <= 0 {
        return Err(Error::NonPositiveA(div.a));
    }
    Ok(())
}

fn single_check_firing(rule: RuleId, strength: Option<Strength>, check: Check) -> RuleFiring {
    let outcome = match (strength, check.holds) {
        (None, _) => Outcome::Inapplicable,
        (Some(Strength::Sufficient), false) => Outcome::Inconclusive,
        (Some(_), true) => Outcome::Yes,
        (Some(_), false) => Outcome::No,
    };
    let spec = rule.spec();
    RuleFiring {
        rule_id: rule,
        citation: Cow::Borrowed(spec.citation),
        strength: strength.unwrap_or(Strength::Sufficient),
        condition: if strength.is_some() {
            check.expr.clone()
        } else {
            Cow::Borrowed(spec.guard)
        },
        lhs: strength.map(|_| check.lhs),
        threshold: strength.map(|_| check.threshold),
        strict: strength.map(|_| check.strict),
        outcome,
        frame: 0,
        checks: if strength.is_some() {
            vec![check]
        } else {
            Vec::new()
        },
    }
}

fn simple_verdict(property: Property, x: Rational, firings: Vec<RuleFiring>) -> Verdict {
    let binding = firings
        .iter()
        .find(|f| f.outcome != Outcome::Inapplicable && f.outcome != Outcome::Inconclusive);
    let status = match binding.map(|f| f.outcome) {
        Some(Outcome::Yes) => Status::Yes,
        Some(Outcome::No) => Status::No,
        _ => Status::Unknown,
    };
    Verdict {
        property,
        status,
        strength: binding.filter(|f| f.is_affirmative()).map(|f| f.strength),
        binding_rule: binding.map(|f| f.rule_id),
        slope_invariant: x,
        firings,
        unknown_window: None,
    }
}

/// `a = 1`: iff `b + μ⁻ > 1`. `a >= 2`: `b + a·μ⁻ > 1` is only sufficient.
pub fn classify_globally_generated(e: &Bundle, div: Divisor) -> Result<Verdict> {
    require_positive_a(div)?;
    let x = e.mu_minus() * div.a + div.b;
    let a1 = Check::gt("b + mu^-(E)", x, Rational::ONE);
    let a2 = Check::gt(SLOPE_EXPR, x, Rational::ONE);
    let firings = vec![
        single_check_firing(RuleId::GgA1, (div.a == 1).then_some(Strength::Iff), a1),
        single_check_firing(
            RuleId::GgA2,
            (div.a >= 2).then_some(Strength::Sufficient),
            a2,
        ),
    ];
    Ok(simple_verdict(Property::GloballyGenerated, x, firings))
}

/// Butler with `g = 1`: `b + a·μ⁻ > 2` suffices.
pub fn classify_normally_generated(e: &Bundle, div: Divisor) -> Result<Verdict> {
    require_positive_a(div)?;
    let x = e.mu_minus() * div.a + div.b;
    let check = Check::gt(SLOPE_EXPR, x, Rational::integer(2));
    let firings = vec![single_check_firing(
        RuleId::NgButler,
        Some(Strength::Sufficient),
        check,
    )];
    Ok(simple_verdict(Property::NormallyGenerated, x, firings))
}

/// Every very-ampleness rule in every canonical frame, ordered by rule id and
/// then by frame.
pub fn applicable_rules(e: &Bundle, div: Divisor) -> Result<Vec<RuleFiring>> {
    require_rank(e)?;
    let frames = canonical_frames(e, div);
    let views: Vec<_> = frames.iter().map(|f| FrameView::new(f, div.a)).collect();
    let quot = quotient_firing(e, div)?;
    let mut firings = Vec::with_capacity(VERY_AMPLE_RULES.len() * frames.len());
    for rule in VERY_AMPLE_RULES {
        for view in &views {
            let firing = if rule == RuleId::QuotNec {
                RuleFiring {
                    frame: view.shift,
                    ..quot.clone()
                }
            } else {
                rules::to_firing(rule, view.shift, rules::evaluate(rule, view))
            };
            firings.push(firing);
        }
    }
    Ok(firings)
}

/// The binding refutation of very ampleness on `P(E)`, ignoring the
/// restriction rule. Only iff and necessary rules can refute, and no firing
/// records are built. A contradiction inside `P(E)` is not looked for here;
/// it surfaces when `E` itself is classified.
fn refutation(e: &Bundle, div: Divisor) -> Option<RuleId> {
    let frames = canonical_frames(e, div);
    let views: Vec<_> = frames.iter().map(|f| FrameView::new(f, div.a)).collect();
    let mut refuting: Option<(Strength, RuleId, i64, i64)> = None;
    let candidates = VERY_AMPLE_RULES
        .into_iter()
        .filter(|&r| r != RuleId::QuotNec && rules::nominal_strength(r) != Strength::Sufficient);
    for rule in candidates {
        for view in &views {
            if let rules::Eval::Decided(strength, checks) = rules::evaluate(rule, view) {
                if strength != Strength::Sufficient && checks.iter().any(|c| !c.holds) {
                    let key = (strength, rule, view.shift.abs(), view.shift);
                    refuting = Some(refuting.map_or(key, |k| k.min(key)));
                }
            }
        }
    }
    refuting.map(|k| k.1)
}

/// `R-QUOT-NEC`: very ampleness restricts to every sub-scroll `P(Q)`, `Q` a
/// proper partial sum of summands. Rank-1 `Q` needs degree `b + a·deg Q >= 3`;
/// higher-rank `Q` must not be refuted by the other rules. The sub-sums of
/// `Q` are sub-sums of `E`, so one flat pass covers the recursion.
fn quotient_firing(e: &Bundle, div: Divisor) -> Result<RuleFiring> {
    let spec = RuleId::QuotNec.spec();
    let mut firing = RuleFiring {
        rule_id: RuleId::QuotNec,
        citation: Cow::Borrowed(spec.citation),
        strength: Strength::Necessary,
        condition: Cow::Borrowed(spec.guard),
        lhs: None,
        threshold: None,
        strict: None,
        outcome: Outcome::Inapplicable,
        frame: 0,
        checks: Vec::new(),
    };
    if e.is_indecomposable() || div.a < 1 {
        return Ok(firing);
    }
    let mut checks = Vec::new();
    for q in e.proper_sub_sums() {
        if q.rank() == 1 {
            let lhs = Rational::integer(div.b + div.a * q.degree());
            let expr = format!("b + a*deg(1:{})", q.degree());
            checks.push(Check::new(expr, lhs, Rational::integer(3), false));
        } else if let Some(rule) = refutation(&q, div) {
            // recorded as a failed check on b + a·μ⁻(Q) against itself
            let x = q.mu_minus() * div.a + div.b;
            let expr = format!("restriction to P({q}) refuted by {rule}");
            checks.push(Check::new(expr, x, x, true));
        }
    }
    let decisive = checks.iter().find(|c| !c.holds).or(checks.first());
    firing.condition = decisive.map_or(Cow::Borrowed(spec.condition), |c| c.expr.clone());
    firing.lhs = decisive.map(|c| c.lhs);
    firing.threshold = decisive.map(|c| c.threshold);
    firing.strict = decisive.map(|c| c.strict);
    firing.outcome = if checks.iter().all(|c| c.holds) {
        Outcome::Inconclusive
    } else {
        Outcome::No
    };
    firing.checks = checks;
    Ok(firing)
}

fn binding_key(f: &RuleFiring) -> (Strength, RuleId, i64, i64) {
    (f.strength, f.rule_id, f.frame.abs(), f.frame)
}

fn describe(f: &RuleFiring) -> String {
    format!("{} (frame {}, {})", f.rule_id, f.frame, f.condition)
}

fn combine(
    property: Property,
    e: &Bundle,
    div: Divisor,
    firings: Vec<RuleFiring>,
) -> Result<Verdict> {
    let x = e.mu_minus() * div.a + div.b;
    let yes = firings
        .iter()
        .filter(|f| f.is_affirmative())
        .min_by_key(|f| binding_key(f));
    let no = firings
        .iter()
        .filter(|f| f.is_negative())
        .min_by_key(|f| binding_key(f));
    let (status, binding) = match (yes, no) {
        (Some(y), Some(n)) => {
            return Err(Error::Contradiction {
                affirm: describe(y),
                refute: describe(n),
            })
        }
        (Some(y), None) => (Status::Yes, Some(y)),
        (None, Some(n)) => (Status::No, Some(n)),
        (None, None) => (Status::Unknown, None),
    };
    let unknown_window = (status == Status::Unknown).then(|| unknown_window(&firings));
    Ok(Verdict {
        property,
        status,
        strength: binding.filter(|f| f.is_affirmative()).map(|f| f.strength),
        binding_rule: binding.map(|f| f.rule_id),
        slope_invariant: x,
        firings,
        unknown_window,
    })
}

/// Starts from `(0, 2]`, left open by Miyaoka and Butler, and tightens the
/// upper end with every failed sufficient bound on `b + a·μ⁻`.
fn unknown_window(firings: &[RuleFiring]) -> UnknownWindow {
    let mut window = UnknownWindow {
        lower: Rational::ZERO,
        upper: Rational::integer(2),
        upper_inclusive: true,
        reason: WindowReason::NoGuardApplies,
    };
    for f in firings {
        if f.outcome == Outcome::Inapplicable {
            continue;
        }
        if (RuleId::D0ModR..=RuleId::RD1).contains(&f.rule_id) {
            window.reason = WindowReason::OpenRange;
        }
        for c in f.checks.iter().filter(|c| !c.holds && c.expr == SLOPE_EXPR) {
            let inclusive = c.strict;
            if c.threshold < window.upper || (c.threshold == window.upper && !inclusive) {
                window.upper = c.threshold;
                window.upper_inclusive = inclusive;
            }
        }
    }
    window
}

/// Very ampleness of `D` on `P(E)`.
///
/// # Errors
///
/// `RankTooSmall` below rank 2, and `Contradiction` if rules disagree.
pub fn classify_very_ample(e: &Bundle, div: Divisor) -> Result<Verdict> {
    let firings = applicable_rules(e, div)?;
    combine(Property::VeryAmple, e, div, firings)
}
