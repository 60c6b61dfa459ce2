//! Evaluation of each catalog rule in one twist frame.

use std::borrow::Cow;

use super::catalog::RuleId;
use super::verdict::{Check, Outcome, RuleFiring, Strength};
use super::Frame;
use crate::bundle::Bundle;
use crate::rational::Rational;

/// Left-hand side of every slope-form condition.
pub(crate) const SLOPE_EXPR: &str = "b + a*mu^-(E)";

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

fn int(n: i64) -> Rational {
    Rational::integer(n)
}

/// Everything a rule may look at, in one frame.
pub(crate) struct FrameView<'a> {
    pub shift: i64,
    pub bundle: &'a Bundle,
    pub a: i64,
    pub b: i64,
    pub r: i64,
    pub d: i64,
    pub mu_minus: Rational,
    /// `b + a·μ⁻`, frame-invariant.
    pub x: Rational,
    pub indecomposable: bool,
    pub ample: bool,
}

impl<'a> FrameView<'a> {
    pub fn new(frame: &'a Frame, a: i64) -> Self {
        let mu_minus = frame.bundle.mu_minus();
        FrameView {
            shift: frame.shift,
            bundle: &frame.bundle,
            a,
            b: frame.b,
            r: frame.bundle.rank(),
            d: frame.bundle.degree(),
            mu_minus,
            x: mu_minus * a + frame.b,
            indecomposable: frame.bundle.is_indecomposable(),
            ample: frame.bundle.is_ample(),
        }
    }

    /// `b + a·p/q`.
    fn b_plus_a(&self, num: i64, den: i64) -> Rational {
        q(self.a * num, den) + self.b
    }
}

pub(crate) enum Eval {
    /// A structural guard failed.
    Inapplicable,
    /// An inequality guard failed.
    GuardFailed(Check),
    Decided(Strength, Vec<Check>),
}

use Eval::{Decided, GuardFailed, Inapplicable};

/// Evaluates one very-ampleness rule other than `R-QUOT-NEC`.
pub(crate) fn evaluate(rule: RuleId, v: &FrameView) -> Eval {
    let (a, b, r, d, x) = (v.a, v.b, v.r, v.d, v.x);
    if !matches!(rule, RuleId::Fiber | RuleId::Miyaoka) && a < 1 {
        return Inapplicable;
    }
    let line = |expr, lhs| Check::ge(expr, lhs, int(3));

    match rule {
        RuleId::Fiber => Decided(Strength::Necessary, vec![Check::ge("a", int(a), int(1))]),

        RuleId::Miyaoka => Decided(
            Strength::Necessary,
            vec![
                Check::gt("a", int(a), int(0)),
                Check::gt(SLOPE_EXPR, x, int(0)),
            ],
        ),

        RuleId::Butler => Decided(Strength::Sufficient, vec![Check::gt(SLOPE_EXPR, x, int(2))]),

        RuleId::SplitPush => {
            if !v.bundle.is_split() {
                return Inapplicable;
            }
            // atoms are sorted, so the first has the least degree; the
            // smallest summand of S^a(⊕ O(d_i)) is O(a·min d_i)
            let min = a * v.bundle.atoms()[0].degree();
            Decided(
                Strength::Sufficient,
                vec![line("min deg S^a(E) (x) B", int(min + b))],
            )
        }

        RuleId::Mu3 => Decided(Strength::Sufficient, vec![line(SLOPE_EXPR, x)]),

        RuleId::D0ModR => {
            if !v.indecomposable || d % r != 0 {
                return Inapplicable;
            }
            Decided(Strength::Iff, vec![line("b + a*mu(E)", x)])
        }

        RuleId::A1Indec => {
            if a != 1 || !v.indecomposable {
                return Inapplicable;
            }
            let threshold = if d % r == 0 { 3 } else { 2 };
            Decided(
                Strength::Iff,
                vec![Check::ge("b + mu(E)", x, int(threshold))],
            )
        }

        RuleId::A1Dec => {
            if a != 1 || v.indecomposable {
                return Inapplicable;
            }
            let checks = v
                .bundle
                .atoms()
                .iter()
                .map(|e| {
                    let threshold = if e.degree() % e.rank() == 0 { 3 } else { 2 };
                    Check::ge("b + d_j/r_j", e.slope() + b, int(threshold))
                })
                .collect();
            Decided(Strength::Iff, checks)
        }

        RuleId::Rk2Indec => {
            if a < 2 || r != 2 || !v.indecomposable {
                return Inapplicable;
            }
            let check = if d.rem_euclid(2) == 0 {
                Check::ge(SLOPE_EXPR, x, int(3))
            } else {
                Check::gt(SLOPE_EXPR, x, int(1))
            };
            Decided(Strength::Iff, vec![check])
        }

        RuleId::Rk2Dec => {
            if a < 2 || r != 2 || v.indecomposable {
                return Inapplicable;
            }
            Decided(Strength::Iff, vec![line(SLOPE_EXPR, x)])
        }

        RuleId::Rk3Indec => {
            if a < 2 || r != 3 || !v.indecomposable {
                return Inapplicable;
            }
            match d.rem_euclid(3) {
                0 => Decided(Strength::Iff, vec![line(SLOPE_EXPR, x)]),
                1 => Decided(Strength::Sufficient, vec![Check::gt(SLOPE_EXPR, x, int(1))]),
                _ => Decided(
                    Strength::Sufficient,
                    vec![Check::gt(SLOPE_EXPR, x, q(4, 3))],
                ),
            }
        }

        RuleId::Rk3Dec => {
            if a < 2 || r != 3 || v.indecomposable {
                return Inapplicable;
            }
            let strength = if is_rank3_exception(v.bundle) {
                Strength::Sufficient
            } else {
                Strength::Iff
            };
            Decided(strength, vec![line(SLOPE_EXPR, x)])
        }

        RuleId::Rk3DecNec => {
            if a < 2 || r != 3 || v.indecomposable {
                return Inapplicable;
            }
            let atoms = v.bundle.atoms();
            let checks = if v.bundle.is_split() {
                let w = atoms.iter().map(|l| l.degree()).min().expect("non-empty");
                vec![line("b + a*min deg", int(b + a * w))]
            } else {
                // one line bundle H and one indecomposable rank-2 G
                let h = atoms
                    .iter()
                    .find(|e| e.rank() == 1)
                    .expect("1 + 2 split")
                    .degree();
                let g = atoms
                    .iter()
                    .find(|e| e.rank() == 2)
                    .expect("1 + 2 split")
                    .degree();
                let half = v.b_plus_a(g, 2);
                let plane = if g.rem_euclid(2) == 0 {
                    Check::ge("b + a*deg G/2", half, int(3))
                } else {
                    Check::gt("b + a*deg G/2", half, int(1))
                };
                vec![line("b + a*deg H", int(b + a * h)), plane]
            };
            Decided(Strength::Necessary, checks)
        }

        RuleId::R4D3 => {
            if a < 2 || r != 4 || d != 3 {
                return Inapplicable;
            }
            if v.indecomposable {
                let guard = Check::gt("b + 3a/4", v.b_plus_a(3, 4), q(3, 4));
                if !guard.holds {
                    return GuardFailed(guard);
                }
                Decided(Strength::Iff, vec![line("b + a", int(b + a))])
            } else {
                if !v.ample {
                    return Inapplicable;
                }
                let guard = Check::gt("b + a/3", v.b_plus_a(1, 3), q(1, 3));
                if !guard.holds {
                    return GuardFailed(guard);
                }
                Decided(
                    Strength::Sufficient,
                    vec![Check::gt("b + a/2", v.b_plus_a(1, 2), int(2))],
                )
            }
        }

        RuleId::D3AnyR => {
            if a < 2 || d != 3 || r < 4 || !v.ample {
                return Inapplicable;
            }
            let guard = Check::gt(SLOPE_EXPR, x, q(3, 5));
            if !guard.holds {
                return GuardFailed(guard);
            }
            Decided(
                Strength::Sufficient,
                vec![
                    Check::gt("b + a/2", v.b_plus_a(1, 2), int(2)),
                    Check::gt("b + a/3", v.b_plus_a(1, 3), q(1, 3)),
                ],
            )
        }

        RuleId::D2Indec => {
            if a < 2 || d != 2 || r < 4 || !v.indecomposable {
                return Inapplicable;
            }
            let mut checks = vec![Check::gt("b + a/2", v.b_plus_a(1, 2), int(2))];
            if r >= 5 {
                checks.push(Check::gt("b + a/3", v.b_plus_a(1, 3), q(1, 3)));
                checks.push(Check::gt("b + 2a/r", v.b_plus_a(2, r), q(r + 1, r)));
            }
            Decided(Strength::Sufficient, checks)
        }

        RuleId::D2Dec => {
            if a < 2 || d != 2 || r < 4 || v.indecomposable || !v.ample {
                return Inapplicable;
            }
            let checks = if r == 4 {
                vec![
                    Check::gt("b + a/2", v.b_plus_a(1, 2), int(2)),
                    Check::gt(SLOPE_EXPR, x, q(3, 2)),
                ]
            } else {
                vec![
                    Check::gt(SLOPE_EXPR, x, q(r + 2, r)),
                    Check::gt("b + a/3", v.b_plus_a(1, 3), q(1, 3)),
                    Check::gt("b + a/2", v.b_plus_a(1, 2), int(2)),
                ]
            };
            Decided(Strength::Sufficient, checks)
        }

        RuleId::D1Indec => {
            if a < 2 || d != 1 || r < 4 || !v.indecomposable {
                return Inapplicable;
            }
            let guard = Check::gt("b + a/r", v.b_plus_a(1, r), int(1));
            if !guard.holds {
                return GuardFailed(guard);
            }
            let half = Check::gt("b + a/2", v.b_plus_a(1, 2), int(2));
            let checks = match r {
                4 => vec![half],
                5 => vec![Check::gt("b + a/3", v.b_plus_a(1, 3), q(3, 2)), half],
                _ => vec![
                    Check::gt("b + a/(r-2)", v.b_plus_a(1, r - 2), q(r + 1, r - 1)),
                    half,
                ],
            };
            Decided(Strength::Sufficient, checks)
        }

        RuleId::DGe4 => {
            if a < 2 || r < 4 || !(4..r).contains(&d) || !v.ample {
                return Inapplicable;
            }
            Decided(
                Strength::Sufficient,
                vec![
                    Check::gt("b + a/(d-1)", v.b_plus_a(1, d - 1), int(2)),
                    Check::gt("b + (a-1)*mu^-(E)", v.mu_minus * (a - 1) + b, int(0)),
                ],
            )
        }

        RuleId::RD1 => {
            if a < 2 || d < 4 || r != d + 1 || !v.indecomposable {
                return Inapplicable;
            }
            Decided(
                Strength::Sufficient,
                vec![
                    Check::gt("b + (a-1)*d/(d+1)", q((a - 1) * d, d + 1) + b, int(0)),
                    Check::gt("b + a", int(b + a), int(2)),
                ],
            )
        }

        RuleId::QuotNec | RuleId::GgA1 | RuleId::GgA2 | RuleId::NgButler => {
            unreachable!("{rule} is not evaluated per frame")
        }
    }
}

/// `E = E1 ⊕ E2`, `rk E1 = 1`, `rk E2 = 2`, `deg E2` odd, `deg E1 > deg E2 / 2`.
pub(crate) fn is_rank3_exception(e: &Bundle) -> bool {
    match e.atoms() {
        [x, y] => {
            let (line, plane) = if x.rank() == 1 { (x, y) } else { (y, x) };
            line.rank() == 1
                && plane.rank() == 2
                && plane.degree().rem_euclid(2) == 1
                && 2 * line.degree() > plane.degree()
        }
        _ => false,
    }
}

/// Turns an evaluation into a firing record.
pub(crate) fn to_firing(rule: RuleId, frame: i64, eval: Eval) -> RuleFiring {
    let spec = rule.spec();
    let base = |strength, condition: Cow<'static, str>, outcome, checks: Vec<Check>| {
        let decisive = checks.iter().find(|c| !c.holds).or(checks.first());
        RuleFiring {
            rule_id: rule,
            citation: Cow::Borrowed(spec.citation),
            strength,
            condition: decisive.map_or(condition, |c| c.expr.clone()),
            lhs: decisive.map(|c| c.lhs),
            threshold: decisive.map(|c| c.threshold),
            strict: decisive.map(|c| c.strict),
            outcome,
            frame,
            checks,
        }
    };
    let nominal = nominal_strength(rule);
    match eval {
        Inapplicable => base(
            nominal,
            Cow::Borrowed(spec.guard),
            Outcome::Inapplicable,
            Vec::new(),
        ),
        GuardFailed(guard) => base(
            nominal,
            Cow::Borrowed(spec.guard),
            Outcome::Inapplicable,
            vec![guard],
        ),
        Decided(strength, checks) => {
            let holds = checks.iter().all(|c| c.holds);
            let outcome = match (strength, holds) {
                (Strength::Iff, true) | (Strength::Sufficient, true) => Outcome::Yes,
                (Strength::Iff, false) | (Strength::Necessary, false) => Outcome::No,
                _ => Outcome::Inconclusive,
            };
            base(strength, Cow::Borrowed(spec.condition), outcome, checks)
        }
    }
}

/// Strength reported for firings whose guard did not apply.
pub(crate) fn nominal_strength(rule: RuleId) -> Strength {
    match rule.spec().strength {
        "necessary" => Strength::Necessary,
        "sufficient" => Strength::Sufficient,
        _ => Strength::Iff,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exception_shape() {
        let e = |p: &[(i64, i64)]| Bundle::from_pairs(p).unwrap();
        assert!(is_rank3_exception(&e(&[(1, 2), (2, 3)])));
        // deg E1 = deg E2 / 2 is impossible for odd deg E2; deg E1 below it
        assert!(!is_rank3_exception(&e(&[(1, 1), (2, 3)])));
        // deg E2 even
        assert!(!is_rank3_exception(&e(&[(1, 5), (2, 2)])));
        assert!(!is_rank3_exception(&e(&[(1, 5), (1, 1), (1, 0)])));
        assert!(is_rank3_exception(&e(&[(1, 0), (2, -1)])));
    }
}
