//! Permutations of `[n]` in one-line and cycle form, their scalar and
//! set-valued statistics, and exhaustive statistic distributions.
//!
//! Positional statistics read the word with a phantom `0` in front: ascents,
//! jumps, and left successions at position `i` compare `sigma_i` against
//! `sigma_(i-1)` with `sigma_0 = 0`, so `sigma_1 = 1` counts as a left
//! succession and `sigma_1 >= 2` as a jump.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use crate::poly::{coeff, LaurentPolynomial, Monomial, Var};
use crate::Error;

/// Exhaustive operations refuse `n` beyond this bound.
pub const ENUMERATION_LIMIT: usize = 9;

pub(crate) fn guard(n: usize) -> Result<(), Error> {
    if n > ENUMERATION_LIMIT {
        Err(Error::SizeTooLarge {
            n,
            limit: ENUMERATION_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// A permutation of `[n]` stored in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    word: Vec<usize>,
}

/// Scalar permutation statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Stat {
    /// `sigma_i > i`.
    Exc,
    /// `sigma_i < i`.
    Drop,
    /// `sigma_i = i`.
    Fix,
    /// `sigma_i < sigma_(i+1)` for `0 <= i <= n-1`, reading `sigma_0 = 0`.
    Asc,
    /// `sigma_i > sigma_(i+1)` for `1 <= i <= n-1`.
    Des,
    /// Interior successions: `sigma_i + 1 = sigma_(i+1)` for `1 <= i <= n-1`.
    Suc,
    /// Left successions: `sigma_(i-1) + 1 = sigma_i` for `1 <= i <= n`.
    Lsuc,
    /// Jumps: `sigma_i >= sigma_(i-1) + 2` for `1 <= i <= n`.
    Jump,
    /// Big ascents: jumps at positions `2 <= i <= n`.
    Basc,
}

impl Stat {
    pub const ALL: [Stat; 9] = [
        Stat::Exc,
        Stat::Drop,
        Stat::Fix,
        Stat::Asc,
        Stat::Des,
        Stat::Suc,
        Stat::Lsuc,
        Stat::Jump,
        Stat::Basc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Stat::Exc => "exc",
            Stat::Drop => "drop",
            Stat::Fix => "fix",
            Stat::Asc => "asc",
            Stat::Des => "des",
            Stat::Suc => "suc",
            Stat::Lsuc => "lsuc",
            Stat::Jump => "jump",
            Stat::Basc => "basc",
        }
    }

    pub fn from_name(name: &str) -> Result<Stat, Error> {
        Stat::ALL
            .into_iter()
            .find(|s| s.name() == name)
            .ok_or_else(|| Error::UnknownStatistic(name.to_string()))
    }
}

/// Set-valued permutation statistics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SetStat {
    /// Positions of interior successions.
    SucPositions,
    /// Values starting interior successions.
    SucValues,
    /// Fixed points among `1..=n-1`.
    InteriorFixed,
    /// All fixed points.
    Fixed,
    /// Left-succession values `sigma_i` with `sigma_(i-1) + 1 = sigma_i`.
    LsucValues,
    /// Jump values `sigma_i` with `sigma_i >= sigma_(i-1) + 2`.
    JumpValues,
    /// Excedance values `sigma_i` with `sigma_i > i`.
    ExcValues,
}

impl Permutation {
    pub fn from_word(word: Vec<usize>) -> Result<Permutation, Error> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in &word {
            if v < 1 || v > n || seen[v] {
                return Err(Error::MalformedPermutation(format!(
                    "{:?} is not a rearrangement of 1..={n}",
                    word
                )));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<usize>) -> Permutation {
        debug_assert!(Permutation::from_word(word.clone()).is_ok());
        Permutation { word }
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            word: (1..=n).collect(),
        }
    }

    /// Parses one-line notation: whitespace-separated values.
    pub fn parse(src: &str) -> Result<Permutation, Error> {
        let word = src
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::MalformedPermutation(format!("bad value `{tok}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::from_word(word)
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[usize] {
        &self.word
    }

    /// `sigma_i` for `1 <= i <= n`.
    pub fn at(&self, i: usize) -> usize {
        self.word[i - 1]
    }

    /// `sigma_(i-1)` with the phantom `sigma_0 = 0`, for `1 <= i <= n + 1`.
    pub fn before(&self, i: usize) -> usize {
        if i == 1 {
            0
        } else {
            self.word[i - 2]
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v - 1] = i + 1;
        }
        Permutation { word }
    }

    pub fn stat(&self, stat: Stat) -> usize {
        let n = self.n();
        match stat {
            Stat::Exc => (1..=n).filter(|&i| self.at(i) > i).count(),
            Stat::Drop => (1..=n).filter(|&i| self.at(i) < i).count(),
            Stat::Fix => (1..=n).filter(|&i| self.at(i) == i).count(),
            Stat::Asc => (1..=n).filter(|&i| self.before(i) < self.at(i)).count(),
            Stat::Des => (1..n).filter(|&i| self.at(i) > self.at(i + 1)).count(),
            Stat::Suc => (1..n).filter(|&i| self.at(i) + 1 == self.at(i + 1)).count(),
            Stat::Lsuc => (1..=n)
                .filter(|&i| self.before(i) + 1 == self.at(i))
                .count(),
            Stat::Jump => (1..=n)
                .filter(|&i| self.at(i) >= self.before(i) + 2)
                .count(),
            Stat::Basc => (2..=n)
                .filter(|&i| self.at(i) >= self.before(i) + 2)
                .count(),
        }
    }

    pub fn set_stat(&self, stat: SetStat) -> BTreeSet<usize> {
        let n = self.n();
        match stat {
            SetStat::SucPositions => (1..n)
                .filter(|&i| self.at(i) + 1 == self.at(i + 1))
                .collect(),
            SetStat::SucValues => (1..n)
                .filter(|&i| self.at(i) + 1 == self.at(i + 1))
                .map(|i| self.at(i))
                .collect(),
            SetStat::InteriorFixed => (1..n).filter(|&i| self.at(i) == i).collect(),
            SetStat::Fixed => (1..=n).filter(|&i| self.at(i) == i).collect(),
            SetStat::LsucValues => (1..=n)
                .filter(|&i| self.before(i) + 1 == self.at(i))
                .map(|i| self.at(i))
                .collect(),
            SetStat::JumpValues => (1..=n)
                .filter(|&i| self.at(i) >= self.before(i) + 2)
                .map(|i| self.at(i))
                .collect(),
            SetStat::ExcValues => (1..=n)
                .filter(|&i| self.at(i) > i)
                .map(|i| self.at(i))
                .collect(),
        }
    }

    pub fn to_cycles(&self) -> CycleForm {
        let n = self.n();
        let mut seen = vec![false; n + 1];
        let mut cycles = Vec::new();
        for start in 1..=n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut next = self.at(start);
            while next != start {
                seen[next] = true;
                cycle.push(next);
                next = self.at(next);
            }
            cycles.push(cycle);
        }
        CycleForm { n, cycles }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.word.iter().join(" "))
    }
}

/// A disjoint cycle decomposition of a permutation of `[n]`.  Each cycle is
/// rotated to start at its minimum and cycles are sorted by those minima.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CycleForm {
    n: usize,
    cycles: Vec<Vec<usize>>,
}

impl CycleForm {
    /// Validates that `cycles` partition `[n]` (where `n` is the total count
    /// of elements) and canonicalizes the rotation and cycle order.
    pub fn new(cycles: Vec<Vec<usize>>) -> Result<CycleForm, Error> {
        let n: usize = cycles.iter().map(|c| c.len()).sum();
        let mut seen = vec![false; n + 1];
        for cycle in &cycles {
            if cycle.is_empty() {
                return Err(Error::MalformedCycles("empty cycle".into()));
            }
            for &v in cycle {
                if v < 1 || v > n || seen[v] {
                    return Err(Error::MalformedCycles(format!(
                        "elements must cover 1..={n} exactly once, got {v} twice or out of range"
                    )));
                }
                seen[v] = true;
            }
        }
        let mut canonical: Vec<Vec<usize>> = cycles
            .into_iter()
            .map(|cycle| {
                let min_pos = cycle
                    .iter()
                    .position_min()
                    .expect("cycles are nonempty here");
                let mut rotated = cycle;
                rotated.rotate_left(min_pos);
                rotated
            })
            .collect();
        canonical.sort_by_key(|cycle| cycle[0]);
        Ok(CycleForm {
            n,
            cycles: canonical,
        })
    }

    /// Parses `(1 8 4 9 6)(2)(3 5)(7)`.
    pub fn parse(src: &str) -> Result<CycleForm, Error> {
        let src = src.trim();
        let mut cycles = Vec::new();
        let mut rest = src;
        while !rest.is_empty() {
            let Some(stripped) = rest.strip_prefix('(') else {
                return Err(Error::MalformedCycles(format!("expected `(` at `{rest}`")));
            };
            let Some(close) = stripped.find(')') else {
                return Err(Error::MalformedCycles("unclosed cycle".into()));
            };
            let inner = &stripped[..close];
            let cycle = inner
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::MalformedCycles(format!("bad value `{tok}`")))
                })
                .collect::<Result<Vec<_>, _>>()?;
            cycles.push(cycle);
            rest = stripped[close + 1..].trim_start();
        }
        CycleForm::new(cycles)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn to_permutation(&self) -> Permutation {
        let mut word = vec![0; self.n];
        for cycle in &self.cycles {
            for (i, &v) in cycle.iter().enumerate() {
                word[v - 1] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation { word }
    }
}

impl fmt::Display for CycleForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in &self.cycles {
            write!(f, "({})", cycle.iter().join(" "))?;
        }
        Ok(())
    }
}

/// All permutations of `[n]` in lexicographic order of their words.
pub fn all_permutations(n: usize) -> Result<impl Iterator<Item = Permutation>, Error> {
    guard(n)?;
    Ok((1..=n)
        .permutations(n)
        .map(Permutation::from_word_unchecked))
}

/// The permutation of `[n]` with the given lexicographic rank (0-based).
pub fn nth_permutation(n: usize, mut rank: usize) -> Permutation {
    let mut factorial = 1usize;
    for k in 1..=n {
        factorial *= k;
    }
    rank %= factorial.max(1);
    let mut pool: Vec<usize> = (1..=n).collect();
    let mut word = Vec::with_capacity(n);
    for k in (1..=n).rev() {
        factorial /= k;
        word.push(pool.remove(rank / factorial));
        rank %= factorial;
    }
    Permutation { word }
}

/// The joint distribution polynomial of the requested statistics over `S_n`:
/// each permutation contributes the product of `var^stat`.  Statistics mapped
/// to a shared variable add their exponents.
pub fn distribution(n: usize, spec: &[(Stat, Var)]) -> Result<LaurentPolynomial, Error> {
    guard(n)?;
    let mut counts: std::collections::BTreeMap<Monomial, u64> = Default::default();
    for p in all_permutations(n)? {
        let m = Monomial::from_pairs(spec.iter().map(|&(stat, var)| (var, p.stat(stat) as i64)));
        *counts.entry(m).or_insert(0) += 1;
    }
    Ok(LaurentPolynomial::from_terms(
        counts.into_iter().map(|(m, k)| (coeff(k as i64), m)),
    ))
}

/// The classes a permutation can be filtered by: a set-valued statistic that
/// must equal the prescribed set exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClassKind {
    SucPositions,
    SucValues,
    InteriorFixed,
    Fixed,
    LsucValues,
}

impl ClassKind {
    pub fn set_stat(self) -> SetStat {
        match self {
            ClassKind::SucPositions => SetStat::SucPositions,
            ClassKind::SucValues => SetStat::SucValues,
            ClassKind::InteriorFixed => SetStat::InteriorFixed,
            ClassKind::Fixed => SetStat::Fixed,
            ClassKind::LsucValues => SetStat::LsucValues,
        }
    }
}

/// All permutations of `[n]` whose `kind` statistic equals `target`, in
/// lexicographic order.
pub fn filter_class(
    n: usize,
    kind: ClassKind,
    target: &BTreeSet<usize>,
) -> Result<Vec<Permutation>, Error> {
    let stat = kind.set_stat();
    Ok(all_permutations(n)?
        .filter(|p| &p.set_stat(stat) == target)
        .collect())
}

/// Counts `(derangements, successionless)` over `S_n`: permutations with no
/// fixed point, and permutations with no interior succession.
pub fn derangement_counts(n: usize) -> Result<(u64, u64), Error> {
    let mut fixed_free = 0;
    let mut succession_free = 0;
    for p in all_permutations(n)? {
        if p.stat(Stat::Fix) == 0 {
            fixed_free += 1;
        }
        if p.stat(Stat::Suc) == 0 {
            succession_free += 1;
        }
    }
    Ok((fixed_free, succession_free))
}
