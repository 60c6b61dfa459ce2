//! Vector bundles on an elliptic curve, kept at the numerical level.
//!
//! A bundle is a multiset of indecomposable atoms, each recorded only by its
//! rank and degree. On an elliptic curve every indecomposable bundle is
//! semistable, so the minimal and maximal slopes of a direct sum are the
//! minimum and maximum of the atom slopes, and the Harder–Narasimhan
//! filtration groups atoms of equal slope.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, ParseError, Result};
use crate::rational::Rational;

/// An indecomposable bundle `E(r, d)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct IndecBundle {
    rank: i64,
    degree: i64,
}

impl IndecBundle {
    pub fn new(rank: i64, degree: i64) -> Result<Self> {
        if rank < 1 {
            return Err(Error::ZeroRank(rank));
        }
        Ok(IndecBundle { rank, degree })
    }

    pub(crate) const fn new_unchecked(rank: i64, degree: i64) -> Self {
        IndecBundle { rank, degree }
    }

    pub fn rank(&self) -> i64 {
        self.rank
    }

    pub fn degree(&self) -> i64 {
        self.degree
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.degree, self.rank)
    }

    /// `E ⊗ L` with `deg L = l`.
    pub fn twist(&self, l: i64) -> Self {
        IndecBundle::new_unchecked(self.rank, self.degree + self.rank * l)
    }

    pub fn dual(&self) -> Self {
        IndecBundle::new_unchecked(self.rank, -self.degree)
    }

    /// The unique twist with degree in `[0, rank - 1]`, and the shift used.
    pub fn normalize(&self) -> (IndecBundle, i64) {
        let l = -self.degree.div_euclid(self.rank);
        (self.twist(l), l)
    }

    pub fn is_line_bundle(&self) -> bool {
        self.rank == 1
    }
}

impl fmt::Display for IndecBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.rank, self.degree)
    }
}

impl fmt::Debug for IndecBundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "E({},{})", self.rank, self.degree)
    }
}

/// A direct sum of indecomposable atoms. Atoms are stored sorted, so equality
/// is multiset equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<IndecBundle>", into = "Vec<IndecBundle>")]
pub struct Bundle {
    atoms: Vec<IndecBundle>,
}

/// One graded piece of the Harder–Narasimhan filtration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HNStage {
    pub slope: Rational,
    pub atoms: Vec<IndecBundle>,
}

impl HNStage {
    pub fn rank(&self) -> i64 {
        self.atoms.iter().map(IndecBundle::rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.atoms.iter().map(IndecBundle::degree).sum()
    }
}

impl Bundle {
    pub fn new(atoms: impl IntoIterator<Item = IndecBundle>) -> Result<Self> {
        let mut atoms: Vec<_> = atoms.into_iter().collect();
        if atoms.is_empty() {
            return Err(Error::EmptyBundle);
        }
        atoms.sort_unstable();
        Ok(Bundle { atoms })
    }

    /// Convenience constructor from `(rank, degree)` pairs.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        Bundle::new(
            pairs
                .iter()
                .map(|&(r, d)| IndecBundle::new(r, d))
                .collect::<Result<Vec<_>>>()?,
        )
    }

    pub fn indecomposable(atom: IndecBundle) -> Self {
        Bundle { atoms: vec![atom] }
    }

    pub fn atoms(&self) -> &[IndecBundle] {
        &self.atoms
    }

    pub fn rank(&self) -> i64 {
        self.atoms.iter().map(IndecBundle::rank).sum()
    }

    pub fn degree(&self) -> i64 {
        self.atoms.iter().map(IndecBundle::degree).sum()
    }

    pub fn is_indecomposable(&self) -> bool {
        self.atoms.len() == 1
    }

    pub fn is_split(&self) -> bool {
        self.atoms.iter().all(IndecBundle::is_line_bundle)
    }

    pub fn slope(&self) -> Rational {
        Rational::new(self.degree(), self.rank())
    }

    pub fn mu_minus(&self) -> Rational {
        self.atoms
            .iter()
            .map(IndecBundle::slope)
            .min()
            .expect("bundles are non-empty")
    }

    pub fn mu_plus(&self) -> Rational {
        self.atoms
            .iter()
            .map(IndecBundle::slope)
            .max()
            .expect("bundles are non-empty")
    }

    /// Stages ordered by strictly decreasing slope.
    pub fn hn_filtration(&self) -> Vec<HNStage> {
        let mut by_slope: Vec<(Rational, IndecBundle)> =
            self.atoms.iter().map(|a| (a.slope(), *a)).collect();
        by_slope.sort_by(|x, y| y.0.cmp(&x.0).then(x.1.cmp(&y.1)));

        let mut stages: Vec<HNStage> = Vec::new();
        for (slope, atom) in by_slope {
            match stages.last_mut() {
                Some(stage) if stage.slope == slope => stage.atoms.push(atom),
                _ => stages.push(HNStage {
                    slope,
                    atoms: vec![atom],
                }),
            }
        }
        stages
    }

    pub fn is_semistable(&self) -> bool {
        self.mu_minus() == self.mu_plus()
    }

    /// Every indecomposable summand has positive degree.
    pub fn is_ample(&self) -> bool {
        self.atoms.iter().all(|a| a.degree > 0)
    }

    pub fn twist(&self, l: i64) -> Self {
        Bundle {
            atoms: self.atoms.iter().map(|a| a.twist(l)).collect(),
        }
    }

    pub fn dual(&self) -> Self {
        Bundle::new(self.atoms.iter().map(IndecBundle::dual)).expect("non-empty")
    }

    /// Distinct proper non-empty sub-multisets of the summands, i.e. the
    /// direct-summand quotients `E -> Q` other than `E` itself.
    pub fn proper_sub_sums(&self) -> Vec<Bundle> {
        // group equal atoms; atoms are sorted so equal ones are adjacent
        let mut groups: Vec<(IndecBundle, usize)> = Vec::new();
        for &atom in &self.atoms {
            match groups.last_mut() {
                Some((a, n)) if *a == atom => *n += 1,
                _ => groups.push((atom, 1)),
            }
        }

        let mut out = Vec::new();
        let mut counts = vec![0usize; groups.len()];
        loop {
            // odometer increment
            let mut i = 0;
            while i < groups.len() && counts[i] == groups[i].1 {
                counts[i] = 0;
                i += 1;
            }
            if i == groups.len() {
                break;
            }
            counts[i] += 1;

            let total: usize = counts.iter().sum();
            if total == self.atoms.len() {
                continue;
            }
            let atoms = groups
                .iter()
                .zip(&counts)
                .flat_map(|(&(atom, _), &k)| std::iter::repeat_n(atom, k))
                .collect();
            out.push(Bundle { atoms });
        }
        out
    }
}

/// Every direct sum of indecomposables of total rank `rank` whose summand
/// degrees lie in `[-bound, bound]`, each multiset once, in a fixed order.
pub fn all_bundles(rank: i64, bound: i64) -> Vec<Bundle> {
    let atoms: Vec<IndecBundle> = (1..=rank)
        .flat_map(|r| (-bound..=bound).map(move |d| IndecBundle::new_unchecked(r, d)))
        .collect();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend_sums(&atoms, 0, rank, &mut stack, &mut out);
    out
}

fn extend_sums(
    atoms: &[IndecBundle],
    start: usize,
    remaining: i64,
    stack: &mut Vec<IndecBundle>,
    out: &mut Vec<Bundle>,
) {
    if remaining == 0 {
        let mut atoms = stack.clone();
        atoms.sort_unstable();
        out.push(Bundle { atoms });
        return;
    }
    for (i, atom) in atoms.iter().enumerate().skip(start) {
        if atom.rank <= remaining {
            stack.push(*atom);
            extend_sums(atoms, i, remaining - atom.rank, stack, out);
            stack.pop();
        }
    }
}

impl fmt::Display for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{a}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Bundle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, a) in self.atoms.iter().enumerate() {
            if i > 0 {
                f.write_str("⊕")?;
            }
            write!(f, "{a:?}")?;
        }
        Ok(())
    }
}

impl FromStr for Bundle {
    type Err = ParseError;

    /// Parses `r:d(,r:d)*`, e.g. `1:2, 2:3`.
    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        let mut atoms = Vec::new();
        for piece in s.split(',') {
            let piece = piece.trim();
            let (r, d) = piece.split_once(':').ok_or_else(|| {
                ParseError::new(s, format!("summand {piece:?} is not of the form r:d"))
            })?;
            let rank: i64 = r
                .parse()
                .map_err(|_| ParseError::new(s, format!("bad rank {r:?}")))?;
            let degree: i64 = d
                .parse()
                .map_err(|_| ParseError::new(s, format!("bad degree {d:?}")))?;
            if rank < 1 {
                return Err(ParseError::new(
                    s,
                    format!("rank must be positive, got {rank}"),
                ));
            }
            atoms.push(IndecBundle::new_unchecked(rank, degree));
        }
        Ok(Bundle::new(atoms).expect("split yields at least one piece"))
    }
}

impl TryFrom<Vec<IndecBundle>> for Bundle {
    type Error = Error;

    fn try_from(atoms: Vec<IndecBundle>) -> Result<Self> {
        for a in &atoms {
            IndecBundle::new(a.rank, a.degree)?;
        }
        Bundle::new(atoms)
    }
}

impl From<Bundle> for Vec<IndecBundle> {
    fn from(b: Bundle) -> Self {
        b.atoms
    }
}
