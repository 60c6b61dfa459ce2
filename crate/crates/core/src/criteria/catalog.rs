//! The rule table, as data.
//!
//! Each row states its guard and its condition with the exact strictness
//! (`>` vs `>=`) that the evaluator in `rules.rs` implements, plus the formula
//! anchor it was transcribed from. `vample rules` prints this table verbatim so
//! the transcription can be audited line by line.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::verdict::Property;

/// Rule identifiers. Declaration order is the canonical rule order used for
/// sorting firings and breaking ties.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum RuleId {
    #[serde(rename = "R-FIBER")]
    Fiber,
    #[serde(rename = "R-MIYAOKA")]
    Miyaoka,
    #[serde(rename = "R-BUTLER")]
    Butler,
    #[serde(rename = "R-SPLITPUSH")]
    SplitPush,
    #[serde(rename = "R-MU3")]
    Mu3,
    #[serde(rename = "R-D0MODR")]
    D0ModR,
    #[serde(rename = "R-A1-INDEC")]
    A1Indec,
    #[serde(rename = "R-A1-DEC")]
    A1Dec,
    #[serde(rename = "R-RK2-INDEC")]
    Rk2Indec,
    #[serde(rename = "R-RK2-DEC")]
    Rk2Dec,
    #[serde(rename = "R-RK3-INDEC")]
    Rk3Indec,
    #[serde(rename = "R-RK3-DEC")]
    Rk3Dec,
    #[serde(rename = "R-RK3-DEC-NEC")]
    Rk3DecNec,
    #[serde(rename = "R-R4D3")]
    R4D3,
    #[serde(rename = "R-D3ANYR")]
    D3AnyR,
    #[serde(rename = "R-D2-INDEC")]
    D2Indec,
    #[serde(rename = "R-D2-DEC")]
    D2Dec,
    #[serde(rename = "R-D1-INDEC")]
    D1Indec,
    #[serde(rename = "R-DGE4")]
    DGe4,
    #[serde(rename = "R-RD1")]
    RD1,
    #[serde(rename = "R-QUOT-NEC")]
    QuotNec,
    #[serde(rename = "R-GG-A1")]
    GgA1,
    #[serde(rename = "R-GG-A2")]
    GgA2,
    #[serde(rename = "R-NG-BUTLER")]
    NgButler,
}

/// One row of the catalog.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RuleSpec {
    pub id: RuleId,
    pub name: &'static str,
    pub property: Property,
    pub guard: &'static str,
    pub condition: &'static str,
    pub strength: &'static str,
    pub citation: &'static str,
    pub anchor: &'static str,
}

/// Number of rows in [`CATALOG`].
pub const RULE_COUNT: usize = 24;

/// Rules deciding very ampleness, in canonical order.
pub const VERY_AMPLE_RULES: [RuleId; 21] = [
    RuleId::Fiber,
    RuleId::Miyaoka,
    RuleId::Butler,
    RuleId::SplitPush,
    RuleId::Mu3,
    RuleId::D0ModR,
    RuleId::A1Indec,
    RuleId::A1Dec,
    RuleId::Rk2Indec,
    RuleId::Rk2Dec,
    RuleId::Rk3Indec,
    RuleId::Rk3Dec,
    RuleId::Rk3DecNec,
    RuleId::R4D3,
    RuleId::D3AnyR,
    RuleId::D2Indec,
    RuleId::D2Dec,
    RuleId::D1Indec,
    RuleId::DGe4,
    RuleId::RD1,
    RuleId::QuotNec,
];

use Property::{GloballyGenerated as GG, NormallyGenerated as NG, VeryAmple as VA};

pub static CATALOG: [RuleSpec; RULE_COUNT] = [
    RuleSpec {
        id: RuleId::Fiber,
        name: "R-FIBER",
        property: VA,
        guard: "always",
        condition: "a >= 1 (D restricts to O(a) on every fiber P^{r-1})",
        strength: "necessary",
        citation: "restriction to a fiber",
        anchor: "$D \\equiv aT+bf$",
    },
    RuleSpec {
        id: RuleId::Miyaoka,
        name: "R-MIYAOKA",
        property: VA,
        guard: "always",
        condition: "a > 0 and b + a*mu^-(E) > 0",
        strength: "necessary",
        citation: "Miyaoka's ampleness criterion (very ample implies ample)",
        anchor: "$D$ is ample if and only if $a>0$ and $b+a \\mu^-(E) >0$",
    },
    RuleSpec {
        id: RuleId::Butler,
        name: "R-BUTLER",
        property: VA,
        guard: "a >= 1",
        condition: "b + a*mu^-(E) > 2",
        strength: "sufficient",
        citation: "Butler's normal generation theorem with Miyaoka's criterion, g = 1",
        anchor: "$b+a\\mu^-(E) > 2g$",
    },
    RuleSpec {
        id: RuleId::SplitPush,
        name: "R-SPLITPUSH",
        property: VA,
        guard: "a >= 1; every summand of E is a line bundle",
        condition: "every degree of S^a(E) (x) B >= 3",
        strength: "sufficient",
        citation: "very ample pushforward criterion, split bundles",
        anchor: "then $D$ is very ample on $\\Bbb{P}(E)$",
    },
    RuleSpec {
        id: RuleId::Mu3,
        name: "R-MU3",
        property: VA,
        guard: "a >= 1",
        condition: "b + a*mu^-(E) >= 3",
        strength: "sufficient",
        citation: "very ample pushforward criterion, slope form",
        anchor: "i.e. if $\\mu(A_q)\\geq 3 $",
    },
    RuleSpec {
        id: RuleId::D0ModR,
        name: "R-D0MODR",
        property: VA,
        guard: "a >= 1; E indecomposable; d = 0 (mod r)",
        condition: "b + a*mu(E) >= 3",
        strength: "iff",
        citation: "indecomposable bundles of degree divisible by the rank",
        anchor: "if and only if $b+a\\mu^-(E) = b+a\\mu(E)  \\ge 3$",
    },
    RuleSpec {
        id: RuleId::A1Indec,
        name: "R-A1-INDEC",
        property: VA,
        guard: "a = 1; E indecomposable",
        condition: "b + mu(E) >= 3 if d = 0 (mod r); b + mu(E) >= 2 otherwise",
        strength: "iff",
        citation: "a = 1, indecomposable E (Gushel's classification, any twist)",
        anchor: "$b + \\mu(E) \\geq 2$ otherwise",
    },
    RuleSpec {
        id: RuleId::A1Dec,
        name: "R-A1-DEC",
        property: VA,
        guard: "a = 1; E decomposable",
        condition: "for every summand E_j: b + d_j/r_j >= 3 if d_j = 0 (mod r_j), >= 2 otherwise",
        strength: "iff",
        citation: "a = 1, decomposable E, summand by summand",
        anchor: "$ b+ \\frac{d_j}{r_j} \\geq 3$ for $j=1...t$",
    },
    RuleSpec {
        id: RuleId::Rk2Indec,
        name: "R-RK2-INDEC",
        property: VA,
        guard: "a >= 2; r = 2; E indecomposable",
        condition: "d even: b + a*mu^-(E) >= 3; d odd: b + a*mu^-(E) > 1",
        strength: "iff",
        citation: "rank 2 indecomposable (Biancofiore-Livorni, any twist)",
        anchor: "$b + a\\mu^{-}(E) > 1$  if $d=1$ (mod $2$)",
    },
    RuleSpec {
        id: RuleId::Rk2Dec,
        name: "R-RK2-DEC",
        property: VA,
        guard: "a >= 2; r = 2; E decomposable",
        condition: "b + a*mu^-(E) >= 3",
        strength: "iff",
        citation: "rank 2 decomposable",
        anchor: "if and only if $b + a\\mu^{-}(E) \\geq 3$",
    },
    RuleSpec {
        id: RuleId::Rk3Indec,
        name: "R-RK3-INDEC",
        property: VA,
        guard: "a >= 2; r = 3; E indecomposable",
        condition: "d = 0 (mod 3): b + a*mu^-(E) >= 3 [iff]; d = 1 (mod 3): b + a*mu^-(E) > 1 [sufficient]; d = 2 (mod 3): b + a*mu^-(E) > 4/3 [sufficient]",
        strength: "iff / sufficient",
        citation: "rank 3 indecomposable",
        anchor: "very ample if $b+a\\mu^-(E) >\\frac{4}{3}$",
    },
    RuleSpec {
        id: RuleId::Rk3Dec,
        name: "R-RK3-DEC",
        property: VA,
        guard: "a >= 2; r = 3; E decomposable",
        condition: "b + a*mu^-(E) >= 3 [iff, except when E = E1 + E2 with rk E1 = 1, rk E2 = 2, deg E2 odd, deg E1 > deg E2 / 2, where it is sufficient]",
        strength: "iff / sufficient",
        citation: "rank 3 decomposable",
        anchor: "the condition is only sufficient",
    },
    RuleSpec {
        id: RuleId::Rk3DecNec,
        name: "R-RK3-DEC-NEC",
        property: VA,
        guard: "a >= 2; r = 3; E decomposable",
        condition: "three line bundles: b + a*min(deg) >= 3; E = H + G (rk H = 1, rk G = 2): b + a*deg H >= 3, and b + a*deg G/2 >= 3 if deg G even, > 1 if deg G odd",
        strength: "necessary",
        citation: "rank 3 decomposable, sub-scroll and section-curve restrictions",
        anchor: "$b+a \\frac {g}{2} > 1$ if $g$ is odd",
    },
    RuleSpec {
        id: RuleId::R4D3,
        name: "R-R4D3",
        property: VA,
        guard: "a >= 2; frame with r = 4, d = 3; indecomposable with b + 3a/4 > 3/4, or decomposable ample with b + a/3 > 1/3",
        condition: "indecomposable: b + a >= 3 [iff]; decomposable: b + a/2 > 2 [sufficient]",
        strength: "iff / sufficient",
        citation: "rank 4, degree 3",
        anchor: "if and only if $b+a \\geq 3$",
    },
    RuleSpec {
        id: RuleId::D3AnyR,
        name: "R-D3ANYR",
        property: VA,
        guard: "a >= 2; frame with d = 3, r >= 4; E ample; b + a*mu^-(E) > 3/5",
        condition: "b + a/2 > 2 and b + a/3 > 1/3",
        strength: "sufficient",
        citation: "degree 3, rank >= 4, ample",
        anchor: "if $b+\\frac{a}{2} >2$ and $b+\\frac{a}{3} > \\frac{1}{3}$",
    },
    RuleSpec {
        id: RuleId::D2Indec,
        name: "R-D2-INDEC",
        property: VA,
        guard: "a >= 2; frame with d = 2, r >= 4; E indecomposable",
        condition: "r = 4: b + a/2 > 2; r >= 5: b + a/2 > 2 and b + a/3 > 1/3 and b + 2a/r > 1 + 1/r",
        strength: "sufficient",
        citation: "degree 2, rank >= 4, indecomposable",
        anchor: "$b+a\\frac{2}{r} > 1+ \\frac{1}{r}$",
    },
    RuleSpec {
        id: RuleId::D2Dec,
        name: "R-D2-DEC",
        property: VA,
        guard: "a >= 2; frame with d = 2, r >= 4; E decomposable and ample",
        condition: "r = 4: b + a/2 > 2 and b + a*mu^-(E) > 3/2; r >= 5: b + a*mu^-(E) > 1 + 2/r and b + a/3 > 1/3 and b + a/2 > 2",
        strength: "sufficient",
        citation: "degree 2, rank >= 4, decomposable and ample",
        anchor: "$b+a\\mu^-(E) > 1+\\frac{2}{r} $",
    },
    RuleSpec {
        id: RuleId::D1Indec,
        name: "R-D1-INDEC",
        property: VA,
        guard: "a >= 2; frame with d = 1, r >= 4; E indecomposable; b + a/r > 1",
        condition: "r = 4: b + a/2 > 2; r = 5: b + a/3 > 3/2 and b + a/2 > 2; r >= 6: b + a/(r-2) > 1 + 2/(r-1) and b + a/2 > 2",
        strength: "sufficient",
        citation: "degree 1, rank >= 4, indecomposable",
        anchor: "$b+\\frac{a}{r-2} > 1+ \\frac{2}{r - 1}$",
    },
    RuleSpec {
        id: RuleId::DGe4,
        name: "R-DGE4",
        property: VA,
        guard: "a >= 2; frame with 4 <= d < r, r >= 4; E ample",
        condition: "b + a/(d-1) > 2 and b + (a-1)*mu^-(E) > 0",
        strength: "sufficient",
        citation: "ample bundles with 4 <= degree < rank",
        anchor: "$b+ \\frac{a}{d-1} > 2$ and $b + (a-1) \\mu^-(E) > 0$",
    },
    RuleSpec {
        id: RuleId::RD1,
        name: "R-RD1",
        property: VA,
        guard: "a >= 2; frame with r = d + 1, d >= 4; E indecomposable",
        condition: "b + (a-1)*d/(d+1) > 0 and b + a > 2",
        strength: "sufficient",
        citation: "indecomposable, rank = degree + 1",
        anchor: "$b+(a-1)\\frac{d}{d+1} >0$ and  $b+ a > 2$",
    },
    RuleSpec {
        id: RuleId::QuotNec,
        name: "R-QUOT-NEC",
        property: VA,
        guard: "a >= 1; E decomposable",
        condition: "for every proper sub-sum Q of the summands, D restricted to P(Q) is not refuted (rank-1 Q: b + a*deg Q >= 3)",
        strength: "necessary",
        citation: "restriction to the sub-scrolls P(Q) of direct-summand quotients",
        anchor: "If $D$ is very ample, $D_{|Y}$ is very ample too",
    },
    RuleSpec {
        id: RuleId::GgA1,
        name: "R-GG-A1",
        property: GG,
        guard: "a = 1",
        condition: "b + mu^-(E) > 1",
        strength: "iff",
        citation: "global generation, a = 1",
        anchor: "if and only if  $b+ \\mu^-(E) > 1$",
    },
    RuleSpec {
        id: RuleId::GgA2,
        name: "R-GG-A2",
        property: GG,
        guard: "a >= 2",
        condition: "b + a*mu^-(E) > 1",
        strength: "sufficient",
        citation: "global generation, a >= 2 (not necessary: 2T on E(2,1) is globally generated)",
        anchor: "globally generated  if  $b+a\\mu^-(E) > 1$",
    },
    RuleSpec {
        id: RuleId::NgButler,
        name: "R-NG-BUTLER",
        property: NG,
        guard: "a >= 1",
        condition: "b + a*mu^-(E) > 2",
        strength: "sufficient",
        citation: "Butler's normal generation theorem, g = 1",
        anchor: "$a\\mu^-(E) +b >2g$",
    },
];

impl RuleId {
    pub fn spec(&self) -> &'static RuleSpec {
        &CATALOG[*self as usize]
    }

    pub fn as_str(&self) -> &'static str {
        self.spec().name
    }

    pub fn citation(&self) -> &'static str {
        self.spec().citation
    }
}

impl fmt::Display for RuleId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for RuleId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        CATALOG
            .iter()
            .find(|r| r.name == s)
            .map(|r| r.id)
            .ok_or_else(|| format!("no rule named {s:?}"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_is_indexed_by_id() {
        for (i, row) in CATALOG.iter().enumerate() {
            assert_eq!(row.id as usize, i, "{} out of place", row.name);
            assert_eq!(row.name.parse::<RuleId>().unwrap(), row.id);
            let json = serde_json::to_string(&row.id).unwrap();
            assert_eq!(json, format!("\"{}\"", row.name));
        }
    }

    #[test]
    fn very_ample_rules_are_the_very_ample_rows() {
        let rows: Vec<RuleId> = CATALOG
            .iter()
            .filter(|r| r.property == Property::VeryAmple)
            .map(|r| r.id)
            .collect();
        assert_eq!(rows, VERY_AMPLE_RULES.to_vec());
    }
}
