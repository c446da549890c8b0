//! Named, machine-checkable statements tying the grammar calculus, the
//! distributions, the truncated series, and the bijection together.
//!
//! Every check recomputes both sides of its statement from scratch —
//! derivatives on one side, brute-force sweeps over `S_n` or independent
//! constructions on the other — so a pass is a genuine cross-validation, not
//! a tautology.  Checks are grouped into suites (`grammar`, `series`,
//! `identities`, `bijection`) and each reports its verified range.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Mutex;

use num::integer::binomial;
use num::BigInt;
use num::BigRational;

use crate::bijection::{correspondence_table, phi_trace, render_table, sweep};
use crate::grammar::{eulerian, Grammar};
use crate::perms::{
    all_permutations, derangement_counts, distribution, Permutation, SetStat, Stat,
};
use crate::poly::{LaurentPolynomial, Var};
use crate::series::{product, TruncatedEgf};
use crate::Error;

/// Default size bound for the command-line verifier.
pub const DEFAULT_MAX_N: usize = 7;
/// Largest size the command-line verifier accepts without an override.
pub const STANDARD_MAX_N: usize = 8;
/// Absolute ceiling (exhaustive sweeps over `S_9`).
pub const EXTENDED_MAX_N: usize = 9;

/// The outcome of one named check.
#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub range: String,
    pub passed: bool,
    pub detail: String,
}

/// Results of a suite run, ordered by check name.
#[derive(Debug, Clone)]
pub struct VerificationReport {
    pub max_n: usize,
    pub checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failed_count(&self) -> usize {
        self.checks.iter().filter(|c| !c.passed).count()
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for check in &self.checks {
            let status = if check.passed { "pass" } else { "FAIL" };
            if check.detail.contains('\n') {
                out.push_str(&format!("[{status}] {}  ({})\n", check.name, check.range));
                for line in check.detail.lines() {
                    if line.is_empty() {
                        out.push('\n');
                    } else {
                        out.push_str(&format!("    {line}\n"));
                    }
                }
            } else {
                out.push_str(&format!(
                    "[{status}] {}  ({}): {}\n",
                    check.name, check.range, check.detail
                ));
            }
        }
        let total = self.checks.len();
        let failed = self.failed_count();
        out.push_str(&format!(
            "summary: {total} checks, {} passed, {failed} failed (max size {})\n",
            total - failed,
            self.max_n
        ));
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "max_size": self.max_n,
            "total": self.checks.len(),
            "failed": self.failed_count(),
            "all_passed": self.all_passed(),
            "checks": self.checks.iter().map(|c| serde_json::json!({
                "name": c.name,
                "range": c.range,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        })
    }
}

/// A named group of checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Grammar,
    Series,
    Identities,
    Bijection,
}

impl Suite {
    pub fn from_name(name: &str) -> Result<Suite, Error> {
        match name {
            "all" => Ok(Suite::All),
            "grammar" => Ok(Suite::Grammar),
            "series" => Ok(Suite::Series),
            "identities" => Ok(Suite::Identities),
            "bijection" => Ok(Suite::Bijection),
            other => Err(Error::UnknownSuite(other.to_string())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Grammar => "grammar",
            Suite::Series => "series",
            Suite::Identities => "identities",
            Suite::Bijection => "bijection",
        }
    }

    fn includes(self, check_name: &str) -> bool {
        match self {
            Suite::All => true,
            _ => check_name.starts_with(self.name()),
        }
    }
}

fn finish(name: &str, range: String, violations: Vec<String>, ok_detail: String) -> CheckResult {
    const SHOWN: usize = 4;
    if violations.is_empty() {
        return CheckResult {
            name: name.to_string(),
            range,
            passed: true,
            detail: ok_detail,
        };
    }
    let mut detail = violations
        .iter()
        .take(SHOWN)
        .cloned()
        .collect::<Vec<_>>()
        .join("; ");
    if violations.len() > SHOWN {
        detail.push_str(&format!(" ... and {} more", violations.len() - SHOWN));
    }
    CheckResult {
        name: name.to_string(),
        range,
        passed: false,
        detail,
    }
}

fn dist(n: usize, spec: &[(Stat, Var)]) -> LaurentPolynomial {
    distribution(n, spec).expect("check ranges stay within the enumeration limit")
}

fn exc_poly(n: usize) -> LaurentPolynomial {
    dist(
        n,
        &[
            (Stat::Exc, Var::X),
            (Stat::Drop, Var::Y),
            (Stat::Fix, Var::Z),
        ],
    )
}

fn jump_poly(n: usize) -> LaurentPolynomial {
    dist(
        n,
        &[
            (Stat::Jump, Var::X),
            (Stat::Des, Var::Y),
            (Stat::Lsuc, Var::Z),
        ],
    )
}

fn suc_poly(n: usize) -> LaurentPolynomial {
    dist(
        n,
        &[
            (Stat::Jump, Var::X),
            (Stat::Des, Var::Y),
            (Stat::Suc, Var::Z),
        ],
    )
}

fn asc_suc_poly(n: usize) -> LaurentPolynomial {
    dist(n, &[(Stat::Asc, Var::X), (Stat::Suc, Var::Z)])
}

fn jump_lsuc_poly(n: usize) -> LaurentPolynomial {
    dist(n, &[(Stat::Jump, Var::X), (Stat::Lsuc, Var::Z)])
}

/// The grammar derivative of `a` equals `a` times the joint
/// excedance-drop-fixed-point distribution.
pub fn check_excedance_distribution(max_n: usize) -> CheckResult {
    let top = max_n.min(STANDARD_MAX_N);
    let g = Grammar::dumont();
    let a = LaurentPolynomial::variable(Var::A);
    let mut violations = Vec::new();
    for n in 0..=top {
        if g.derive_n(&a, n) != &a * &exc_poly(n) {
            violations.push(format!("size {n}"));
        }
    }
    finish(
        "grammar/excedance-distribution",
        format!("n <= {top}"),
        violations,
        "repeated derivatives of a enumerate permutations by excedances, drops, and fixed points"
            .to_string(),
    )
}

/// The same derivative also equals `a` times the jump-descent-left-succession
/// distribution.
pub fn check_left_succession_distribution(max_n: usize) -> CheckResult {
    let top = max_n.min(STANDARD_MAX_N);
    let g = Grammar::dumont();
    let a = LaurentPolynomial::variable(Var::A);
    let mut violations = Vec::new();
    for n in 0..=top {
        if g.derive_n(&a, n) != &a * &jump_poly(n) {
            violations.push(format!("size {n}"));
        }
    }
    finish(
        "grammar/left-succession-distribution",
        format!("n <= {top}"),
        violations,
        "the same derivatives enumerate by jumps, descents, and left successions".to_string(),
    )
}

/// Derivatives of `a*b` under the five-variable grammar, with `a` and `b` set
/// to 1, give the jump-descent-succession distribution.
pub fn check_succession_distribution(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, STANDARD_MAX_N);
    let g = Grammar::dumont_b();
    let ab = LaurentPolynomial::parse("a*b").expect("literal");
    let ones = BTreeMap::from([
        (Var::A, LaurentPolynomial::one()),
        (Var::B, LaurentPolynomial::one()),
    ]);
    let mut violations = Vec::new();
    for n in 1..=top {
        let specialized = g
            .derive_n(&ab, n - 1)
            .substitute(&ones)
            .expect("1 is a valid binding");
        if specialized != suc_poly(n) {
            violations.push(format!("size {n}"));
        }
    }
    finish(
        "grammar/succession-distribution",
        format!("1 <= n <= {top}"),
        violations,
        "derivatives of a*b specialize to the jump-descent-succession distribution".to_string(),
    )
}

/// Excedance-type and jump-type distributions coincide size by size.
pub fn check_equidistribution(max_n: usize) -> CheckResult {
    let top = max_n.min(STANDARD_MAX_N);
    let mut violations = Vec::new();
    for n in 0..=top {
        if exc_poly(n) != jump_poly(n) {
            violations.push(format!("size {n}"));
        }
    }
    finish(
        "identities/equidistribution",
        format!("n <= {top}"),
        violations,
        "(exc, drop, fix) and (jump, des, lsuc) have the same joint distribution".to_string(),
    )
}

/// Ascents split as jumps plus left successions.  The cruder split
/// `asc = 1 + jump + suc` fails as a statement about every permutation; the
/// detail records its first counterexample.
pub fn check_ascent_split(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, STANDARD_MAX_N);
    let mut violations = Vec::new();
    let mut literal_failures: usize = 0;
    let mut first_counterexample: Option<String> = None;
    for n in 1..=top {
        for p in all_permutations(n).expect("guarded size") {
            let (asc, jump, lsuc, suc) = (
                p.stat(Stat::Asc),
                p.stat(Stat::Jump),
                p.stat(Stat::Lsuc),
                p.stat(Stat::Suc),
            );
            if asc != jump + lsuc {
                violations.push(format!("{p}: asc {asc} != jump {jump} + lsuc {lsuc}"));
            }
            if asc != 1 + jump + suc {
                literal_failures += 1;
                first_counterexample.get_or_insert_with(|| p.to_string());
            }
        }
    }
    let note = match first_counterexample {
        Some(w) => format!(
            "asc = jump + lsuc holds everywhere; the pointwise variant asc = 1 + jump + suc fails \
             {literal_failures} times (first at `{w}`) and is correct only where the word starts with 1"
        ),
        None => "asc = jump + lsuc holds everywhere".to_string(),
    };
    finish(
        "identities/ascent-split",
        format!("1 <= n <= {top}"),
        violations,
        note,
    )
}

/// The ascent-succession distribution decomposes through the
/// jump-left-succession distribution with `z` replaced by `x*z`.
pub fn check_pnstar(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, STANDARD_MAX_N);
    let sub = BTreeMap::from([(Var::Z, LaurentPolynomial::parse("x*z").expect("literal"))]);
    let correction = LaurentPolynomial::parse("x - x*z").expect("literal");
    let mut violations = Vec::new();
    for n in 1..=top {
        let lhs = asc_suc_poly(n);
        let head = jump_lsuc_poly(n).substitute(&sub).expect("plain binding");
        let tail = jump_lsuc_poly(n - 1)
            .substitute(&sub)
            .expect("plain binding");
        if lhs != &head + &(&correction * &tail) {
            violations.push(format!("size {n}"));
        }
    }
    finish(
        "identities/pnstar",
        format!("1 <= n <= {top}"),
        violations,
        "the ascent-succession polynomial is the jump-left-succession polynomial at z -> x*z \
         plus an x*(1 - z) correction"
            .to_string(),
    )
}

/// Succession polynomials convolve with Eulerian polynomials to give the next
/// left-succession polynomial.
pub fn check_con_r_l(max_n: usize) -> CheckResult {
    let top = max_n.min(STANDARD_MAX_N - 1);
    let mut violations = Vec::new();
    for n in 0..=top {
        let lhs = suc_poly(n + 1);
        let mut rhs = jump_poly(n);
        for k in 1..=n {
            let c = BigRational::from_integer(binomial(BigInt::from(n), BigInt::from(k)));
            rhs = &rhs + &(&eulerian(k) * &jump_poly(n - k)).scale(&c);
        }
        if lhs != rhs {
            violations.push(format!("size {}", n + 1));
        }
    }
    finish(
        "identities/con-r-l",
        format!("n <= {top} (sizes up to {})", top + 1),
        violations,
        "each succession polynomial is the binomial convolution of Eulerian polynomials with \
         left-succession polynomials"
            .to_string(),
    )
}

/// Counts of succession-free permutations follow from derangement counts.
pub fn check_qd(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, EXTENDED_MAX_N);
    let counts: Vec<(u64, u64)> = (0..=top)
        .map(|n| derangement_counts(n).expect("guarded size"))
        .collect();
    let mut violations = Vec::new();
    for n in 1..=top {
        let (fix_free, _) = counts[n];
        let (prev_fix_free, _) = counts[n - 1];
        let (_, suc_free) = counts[n];
        if suc_free != fix_free + prev_fix_free {
            violations.push(format!(
                "size {n}: {suc_free} succession-free vs {fix_free} + {prev_fix_free} derangements"
            ));
        }
    }
    let qs: Vec<String> = (1..=top).map(|n| counts[n].1.to_string()).collect();
    finish(
        "identities/qd",
        format!("1 <= n <= {top}"),
        violations,
        format!(
            "succession-free counts ({}) equal consecutive derangement sums",
            qs.join(", ")
        ),
    )
}

/// Inversion swaps succession positions with succession values and preserves
/// interior fixed points and fixed points.
pub fn check_mmi(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, DEFAULT_MAX_N);
    let mut violations = Vec::new();
    for n in 1..=top {
        for p in all_permutations(n).expect("guarded size") {
            let q = p.inverse();
            if q.set_stat(SetStat::SucValues) != p.set_stat(SetStat::SucPositions) {
                violations.push(format!("{p}: succession values of the inverse"));
            }
            if q.set_stat(SetStat::InteriorFixed) != p.set_stat(SetStat::InteriorFixed) {
                violations.push(format!("{p}: interior fixed points of the inverse"));
            }
            if q.set_stat(SetStat::Fixed) != p.set_stat(SetStat::Fixed) {
                violations.push(format!("{p}: fixed points of the inverse"));
            }
        }
    }
    finish(
        "identities/mmi",
        format!("1 <= n <= {top}"),
        violations,
        "inversion exchanges succession positions and values while fixing both fixed-point sets"
            .to_string(),
    )
}

/// For every prescribed set, the counts of words with that succession
/// position set, succession value set, and interior fixed point set agree.
pub fn check_succession_classes(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, DEFAULT_MAX_N);
    let mut violations = Vec::new();
    let mut classes = 0usize;
    for n in 1..=top {
        let mut by_positions: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let mut by_values: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        let mut by_interior: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
        for p in all_permutations(n).expect("guarded size") {
            *by_positions
                .entry(p.set_stat(SetStat::SucPositions))
                .or_default() += 1;
            *by_values.entry(p.set_stat(SetStat::SucValues)).or_default() += 1;
            *by_interior
                .entry(p.set_stat(SetStat::InteriorFixed))
                .or_default() += 1;
        }
        let ground: Vec<usize> = (1..n).collect();
        for mask in 0u64..(1 << ground.len()) {
            let class: BTreeSet<usize> = ground
                .iter()
                .enumerate()
                .filter(|&(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            classes += 1;
            let a = by_positions.get(&class).copied().unwrap_or(0);
            let b = by_values.get(&class).copied().unwrap_or(0);
            let c = by_interior.get(&class).copied().unwrap_or(0);
            if a != b || b != c {
                violations.push(format!("size {n}, class {class:?}: {a} / {b} / {c}"));
            }
        }
    }
    finish(
        "identities/succession-classes",
        format!("1 <= n <= {top}"),
        violations,
        format!(
            "succession positions, succession values, and interior fixed points cut S_n into \
             matching classes ({classes} classes compared)"
        ),
    )
}

/// The forward map composed with the inverse map is the identity, and the
/// image of `S_n` is all of `S_n`.
pub fn check_round_trip(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, DEFAULT_MAX_N);
    let mut violations = Vec::new();
    let mut total = 0usize;
    for n in 1..=top {
        let census = sweep(n).expect("guarded size");
        total += census.permutations;
        violations.extend(
            census
                .round_trip_failures
                .iter()
                .map(|w| format!("size {n}: {w}")),
        );
        if census.distinct_images != census.permutations {
            violations.push(format!(
                "size {n}: only {} distinct images of {} words",
                census.distinct_images, census.permutations
            ));
        }
    }
    finish(
        "bijection/round-trip",
        format!("1 <= n <= {top}"),
        violations,
        format!("the inverse map undoes the forward map on all {total} words"),
    )
}

/// The forward map sends left succession values to fixed points, jump values
/// to excedance values, and (jump, des) to (exc, drop).
pub fn check_statistic_transport(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, DEFAULT_MAX_N);
    let mut violations = Vec::new();
    let mut total = 0usize;
    for n in 1..=top {
        let census = sweep(n).expect("guarded size");
        total += census.permutations;
        violations.extend(
            census
                .transport_failures
                .iter()
                .map(|w| format!("size {n}: {w}")),
        );
    }
    finish(
        "bijection/statistic-transport",
        format!("1 <= n <= {top}"),
        violations,
        format!(
            "left succession values become fixed points and jump values become excedance values \
             on all {total} words"
        ),
    )
}

/// Words with left succession set `I` map onto permutations with fixed point
/// set `I`, class by class.
pub fn check_class_bijectivity(max_n: usize) -> CheckResult {
    let top = max_n.clamp(1, DEFAULT_MAX_N);
    let mut violations = Vec::new();
    let mut classes = 0usize;
    for n in 1..=top {
        let census = sweep(n).expect("guarded size");
        classes += census.classes;
        violations.extend(
            census
                .class_mismatches
                .iter()
                .map(|w| format!("size {n}: {w}")),
        );
    }
    finish(
        "bijection/class-bijectivity",
        format!("1 <= n <= {top}"),
        violations,
        format!("every left succession class matches its fixed point class ({classes} classes)"),
    )
}

fn expected_table_n3() -> Vec<(Vec<usize>, &'static str, &'static str, usize, usize)> {
    vec![
        (vec![], "2 1 3", "(1 2 3)", 2, 1),
        (vec![], "3 2 1", "(1 3 2)", 1, 2),
        (vec![1], "1 3 2", "(1)(2 3)", 1, 1),
        (vec![2], "3 1 2", "(1 3)(2)", 1, 1),
        (vec![3], "2 3 1", "(1 2)(3)", 1, 1),
        (vec![1, 2, 3], "1 2 3", "(1)(2)(3)", 0, 0),
    ]
}

/// The complete size-3 correspondence, row for row.
pub fn check_correspondence_table() -> CheckResult {
    let rows = correspondence_table(3).expect("size 3 is enumerable");
    let mut violations = Vec::new();
    let expected = expected_table_n3();
    if rows.len() != expected.len() {
        violations.push(format!("{} rows instead of {}", rows.len(), expected.len()));
    }
    for (row, (class, word, image, jump, des)) in rows.iter().zip(&expected) {
        let got_class: Vec<usize> = row.class.iter().copied().collect();
        if &got_class != class
            || row.word.to_string() != *word
            || row.image.to_string() != *image
            || row.jump != *jump
            || row.des != *des
            || row.exc != *jump
            || row.drops != *des
        {
            violations.push(format!("row for `{}` deviates", row.word));
        }
    }
    finish(
        "bijection/correspondence-table",
        "n = 3".to_string(),
        violations,
        render_table(&rows).trim_end().to_string(),
    )
}

/// A six-step forward trace, with every intermediate word and tree pinned.
pub fn check_worked_example() -> CheckResult {
    let word = Permutation::parse("1 6 3 2 4 5").expect("literal");
    let (image, trace) = phi_trace(&word);
    let mut violations = Vec::new();
    if image.to_string() != "1 6 4 2 5 3" {
        violations.push(format!("image is {image}"));
    }
    if image.to_cycles().to_string() != "(1)(2 6 3 4)(5)" {
        violations.push(format!("image cycles are {}", image.to_cycles()));
    }
    if word.set_stat(SetStat::LsucValues) != image.set_stat(SetStat::Fixed) {
        violations.push("left succession values do not become fixed points".to_string());
    }
    if word.set_stat(SetStat::JumpValues) != image.set_stat(SetStat::ExcValues) {
        violations.push("jump values do not become excedance values".to_string());
    }
    let expected = [
        "size 1: 0 z 1 a  |  (1 z a)",
        "size 2: into slot 2 (a): 0 z 1 z 2 a  |  (1 z (2 z a))",
        "size 3: into slot 2 (z): 0 z 1 x 3 a 2 y  |  (1 z (2 (3 x y) a))",
        "size 4: into slot 4 (y): 0 z 1 x 3 y 2 x 4 a  |  (1 z (2 (3 x (4 x y)) a))",
        "size 5: into slot 5 (a): 0 z 1 x 3 y 2 x 4 z 5 a  |  (1 z (2 (3 x (4 x y)) (5 z a)))",
        "size 6: into slot 2 (x): 0 z 1 x 6 a 3 y 2 x 4 z 5 y  |  (1 z (2 (3 (6 x y) (4 x y)) (5 z a)))",
    ];
    let got: Vec<String> = trace.iter().map(|r| r.to_string()).collect();
    if got != expected {
        violations.push("trace deviates from the pinned rows".to_string());
    }
    let detail = got.join("\n") + "\nimage: 1 6 4 2 5 3 = (1)(2 6 3 4)(5)";
    finish(
        "bijection/worked-example",
        "n = 6".to_string(),
        violations,
        detail,
    )
}

/// Identifiers of the built-in truncated series identities.
pub const EGF_IDENTITY_IDS: [&str; 7] =
    ["gat", "fsg-2", "fxz", "gpstar", "gpn", "genab", "eulerian"];

/// One order of an identity report: the subject coefficient and whether the
/// cross-multiplied sides agree at this order.
#[derive(Debug, Clone)]
pub struct EgfRow {
    pub n: usize,
    pub coefficient: LaurentPolynomial,
    pub matches: bool,
}

/// A truncated series identity, cross-multiplied and compared order by order.
#[derive(Debug, Clone)]
pub struct EgfIdentityReport {
    pub id: String,
    pub order: usize,
    pub statement: String,
    pub coefficient_label: String,
    pub rows: Vec<EgfRow>,
}

impl EgfIdentityReport {
    pub fn all_match(&self) -> bool {
        self.rows.iter().all(|r| r.matches)
    }

    pub fn render_text(&self) -> String {
        let mut out = format!("identity {}: {}\n", self.id, self.statement);
        out.push_str(&format!("coefficients shown: {}\n", self.coefficient_label));
        for row in &self.rows {
            let flag = if row.matches { "ok" } else { "MISMATCH" };
            out.push_str(&format!("n={}: {}  [{flag}]\n", row.n, row.coefficient));
        }
        let bad = self.rows.iter().filter(|r| !r.matches).count();
        if bad == 0 {
            out.push_str(&format!(
                "all {} orders agree after cross-multiplying\n",
                self.rows.len()
            ));
        } else {
            out.push_str(&format!(
                "{bad} of {} orders disagree after cross-multiplying\n",
                self.rows.len()
            ));
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "id": self.id,
            "order": self.order,
            "statement": self.statement,
            "coefficient_label": self.coefficient_label,
            "all_match": self.all_match(),
            "rows": self.rows.iter().map(|r| serde_json::json!({
                "n": r.n,
                "coefficient": r.coefficient.to_json(),
                "display": r.coefficient.to_string(),
                "matches": r.matches,
            })).collect::<Vec<_>>(),
        })
    }
}

fn poly(src: &str) -> LaurentPolynomial {
    LaurentPolynomial::parse(src).expect("literal polynomial")
}

/// Builds and cross-multiplies one named identity at the given truncation
/// order.  Both sides are kept as products of exponential-type series — no
/// series division is ever performed.
pub fn egf_identity(id: &str, order: usize) -> Result<EgfIdentityReport, Error> {
    let x = poly("x");
    let y = poly("y");
    let z = poly("z");
    let one = LaurentPolynomial::one();
    // y*exp(x*t) - x*exp(y*t)
    let wronskian = TruncatedEgf::exp(&x, order)
        .scale(&y)
        .sub(&TruncatedEgf::exp(&y, order).scale(&x))?;
    // exp(x*t) - x*exp(t)
    let pencil = TruncatedEgf::exp(&x, order).sub(&TruncatedEgf::exp(&one, order).scale(&x))?;
    // 1 - y*x^-1*exp((x - y)*t)
    let deficit = TruncatedEgf::constant(one.clone(), order)
        .sub(&TruncatedEgf::exp(&poly("x - y"), order).scale(&poly("y*x^-1")))?;

    let (statement, coefficient_label, display, lhs, rhs): (
        &str,
        &str,
        TruncatedEgf,
        Vec<TruncatedEgf>,
        Vec<TruncatedEgf>,
    ) = match id {
        "gat" => {
            let gen = TruncatedEgf::from_grammar(&Grammar::dumont(), &poly("a"), order);
            (
                "gen(a) * (y*exp(x*t) - x*exp(y*t)) = a*(y - x)*exp(z*t)",
                "D^n(a), the n-th derivative of a",
                gen.clone(),
                vec![gen, wronskian],
                vec![TruncatedEgf::exp(&z, order).scale(&poly("a*y - a*x"))],
            )
        }
        "fsg-2" => {
            let coeffs: Vec<LaurentPolynomial> = (0..=order).map(exc_poly).collect();
            let series = TruncatedEgf::from_coeffs(coeffs);
            (
                "egf(x^exc * y^drop * z^fix) * (y*exp(x*t) - x*exp(y*t)) = (y - x)*exp(z*t)",
                "sum of x^exc * y^drop * z^fix over S_n",
                series.clone(),
                vec![series, wronskian],
                vec![TruncatedEgf::exp(&z, order).scale(&poly("y - x"))],
            )
        }
        "fxz" => {
            let coeffs: Vec<LaurentPolynomial> = (0..=order)
                .map(|n| dist(n, &[(Stat::Exc, Var::X), (Stat::Fix, Var::Z)]))
                .collect();
            let series = TruncatedEgf::from_coeffs(coeffs);
            (
                "egf(x^exc * z^fix) * (exp(x*t) - x*exp(t)) = (1 - x)*exp(z*t)",
                "sum of x^exc * z^fix over S_n",
                series.clone(),
                vec![series, pencil],
                vec![TruncatedEgf::exp(&z, order).scale(&poly("1 - x"))],
            )
        }
        "gpstar" => {
            let coeffs: Vec<LaurentPolynomial> = (0..=order).map(jump_lsuc_poly).collect();
            let series = TruncatedEgf::from_coeffs(coeffs);
            (
                "egf(x^jump * z^lsuc) * (exp(x*t) - x*exp(t)) = (1 - x)*exp(z*t)",
                "sum of x^jump * z^lsuc over S_n",
                series.clone(),
                vec![series, pencil],
                vec![TruncatedEgf::exp(&z, order).scale(&poly("1 - x"))],
            )
        }
        "gpn" => {
            let coeffs: Vec<LaurentPolynomial> = (0..=order)
                .map(|n| {
                    distribution(n + 1, &[(Stat::Asc, Var::X), (Stat::Suc, Var::Z)])
                        .map_err(|e| e.clone())
                })
                .collect::<Result<_, _>>()?;
            let series = TruncatedEgf::from_coeffs(coeffs);
            (
                "egf(x^asc * z^suc over S_(n+1)) * (exp(x*t) - x*exp(t))^2 = \
                 x*(1 - x)^2*exp((x*z + 1)*t)",
                "sum of x^asc * z^suc over S_(n+1)",
                series.clone(),
                vec![series, pencil.clone(), pencil],
                vec![TruncatedEgf::exp(&poly("x*z + 1"), order).scale(&poly("x*(1 - x)^2"))],
            )
        }
        "genab" => {
            let gen = TruncatedEgf::from_grammar(&Grammar::dumont_b(), &poly("a*b"), order);
            let rhs_tail =
                TruncatedEgf::constant(poly("x - y"), order).add(&deficit.scale(&poly("b - x")))?;
            (
                "gen(a*b) * (y*exp(x*t) - x*exp(y*t)) * (1 - y*x^-1*exp((x - y)*t)) = \
                 a*(y - x)*exp(z*t) * (x - y + (b - x)*(1 - y*x^-1*exp((x - y)*t)))",
                "derivatives of a*b under the five-variable grammar",
                gen.clone(),
                vec![gen, wronskian, deficit],
                vec![
                    TruncatedEgf::exp(&z, order).scale(&poly("a*y - a*x")),
                    rhs_tail,
                ],
            )
        }
        "eulerian" => {
            let gen = TruncatedEgf::from_grammar(&Grammar::eulerian_rules(), &x, order);
            (
                "gen(x) * (1 - y*x^-1*exp((x - y)*t)) = x - y",
                "A_n, the n-th derivative of x under x -> x*y, y -> x*y",
                gen.clone(),
                vec![gen, deficit],
                vec![TruncatedEgf::constant(poly("x - y"), order)],
            )
        }
        other => return Err(Error::UnknownIdentity(other.to_string())),
    };

    let lhs_product = product(&lhs)?;
    let rhs_product = product(&rhs)?;
    let rows = (0..=order)
        .map(|n| EgfRow {
            n,
            coefficient: display.coeff(n).clone(),
            matches: lhs_product.coeff(n) == rhs_product.coeff(n),
        })
        .collect();
    Ok(EgfIdentityReport {
        id: id.to_string(),
        order,
        statement: statement.to_string(),
        coefficient_label: coefficient_label.to_string(),
        rows,
    })
}

/// Runs one named series identity as a check.
pub fn check_series_identity(id: &'static str, max_n: usize) -> CheckResult {
    let order = max_n.min(STANDARD_MAX_N);
    match egf_identity(id, order) {
        Ok(report) => {
            let mismatches: Vec<String> = report
                .rows
                .iter()
                .filter(|r| !r.matches)
                .map(|r| format!("order {}", r.n))
                .collect();
            finish(
                &format!("series/{id}"),
                format!("order <= {order}"),
                mismatches,
                format!("{} (cross-multiplied)", report.statement),
            )
        }
        Err(e) => CheckResult {
            name: format!("series/{id}"),
            range: format!("order <= {order}"),
            passed: false,
            detail: format!("could not build the identity: {e}"),
        },
    }
}

type Job = Box<dyn FnOnce() -> CheckResult + Send>;

fn catalog(suite: Suite, max_n: usize) -> Vec<Job> {
    let mut jobs: Vec<(&'static str, Job)> = vec![
        (
            "grammar/excedance-distribution",
            Box::new(move || check_excedance_distribution(max_n)),
        ),
        (
            "grammar/left-succession-distribution",
            Box::new(move || check_left_succession_distribution(max_n)),
        ),
        (
            "grammar/succession-distribution",
            Box::new(move || check_succession_distribution(max_n)),
        ),
        (
            "identities/equidistribution",
            Box::new(move || check_equidistribution(max_n)),
        ),
        (
            "identities/ascent-split",
            Box::new(move || check_ascent_split(max_n)),
        ),
        ("identities/pnstar", Box::new(move || check_pnstar(max_n))),
        ("identities/con-r-l", Box::new(move || check_con_r_l(max_n))),
        ("identities/qd", Box::new(move || check_qd(max_n))),
        ("identities/mmi", Box::new(move || check_mmi(max_n))),
        (
            "identities/succession-classes",
            Box::new(move || check_succession_classes(max_n)),
        ),
        (
            "bijection/round-trip",
            Box::new(move || check_round_trip(max_n)),
        ),
        (
            "bijection/statistic-transport",
            Box::new(move || check_statistic_transport(max_n)),
        ),
        (
            "bijection/class-bijectivity",
            Box::new(move || check_class_bijectivity(max_n)),
        ),
    ];
    for id in EGF_IDENTITY_IDS {
        jobs.push((
            // Leaked once per process at most; the set of names is static.
            Box::leak(format!("series/{id}").into_boxed_str()),
            Box::new(move || check_series_identity(id, max_n)),
        ));
    }
    if max_n >= 3 {
        jobs.push((
            "bijection/correspondence-table",
            Box::new(check_correspondence_table),
        ));
    }
    if max_n >= 6 {
        jobs.push(("bijection/worked-example", Box::new(check_worked_example)));
    }
    jobs.into_iter()
        .filter(|(name, _)| suite.includes(name))
        .map(|(_, job)| job)
        .collect()
}

fn run_jobs(jobs: Vec<Job>, workers: usize) -> Vec<CheckResult> {
    if workers <= 1 {
        return jobs.into_iter().map(|job| job()).collect();
    }
    let queue: Mutex<Vec<Job>> = Mutex::new(jobs);
    let results: Mutex<Vec<CheckResult>> = Mutex::new(Vec::new());
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let job = queue.lock().expect("queue lock").pop();
                let Some(job) = job else { break };
                let result = job();
                results.lock().expect("results lock").push(result);
            });
        }
    });
    results.into_inner().expect("threads joined")
}

/// Runs a suite with the given size ceiling, on `workers` threads, and
/// returns the results sorted by check name.
pub fn run_suite(suite: Suite, max_n: usize, workers: usize) -> VerificationReport {
    let mut checks = run_jobs(catalog(suite, max_n), workers.max(1));
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    VerificationReport { max_n, checks }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_suite_passes() {
        let report = run_suite(Suite::All, 6, 1);
        for check in &report.checks {
            assert!(check.passed, "{}: {}", check.name, check.detail);
        }
        assert!(report.all_passed());
        assert_eq!(report.checks.len(), 22);
    }

    #[test]
    fn suites_filter_by_prefix() {
        let report = run_suite(Suite::Bijection, 3, 1);
        assert_eq!(report.checks.len(), 4);
        assert!(report
            .checks
            .iter()
            .all(|c| c.name.starts_with("bijection/")));
        let names: Vec<&str> = report.checks.iter().map(|c| c.name.as_str()).collect();
        assert_eq!(
            names,
            [
                "bijection/class-bijectivity",
                "bijection/correspondence-table",
                "bijection/round-trip",
                "bijection/statistic-transport",
            ]
        );
    }

    #[test]
    fn workers_do_not_change_the_report() {
        let solo = run_suite(Suite::Identities, 4, 1);
        let pooled = run_suite(Suite::Identities, 4, 4);
        let flat = |r: &VerificationReport| {
            r.checks
                .iter()
                .map(|c| (c.name.clone(), c.range.clone(), c.passed, c.detail.clone()))
                .collect::<Vec<_>>()
        };
        assert_eq!(flat(&solo), flat(&pooled));
    }

    #[test]
    fn identity_reports_match_at_small_orders() {
        for id in EGF_IDENTITY_IDS {
            let report = egf_identity(id, 4).unwrap();
            assert!(report.all_match(), "{id}");
            assert_eq!(report.rows.len(), 5, "{id}");
        }
        assert!(matches!(
            egf_identity("nope", 3),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn eulerian_identity_coefficients_are_the_classical_polynomials() {
        let report = egf_identity("eulerian", 3).unwrap();
        let shown: Vec<String> = report
            .rows
            .iter()
            .map(|r| r.coefficient.to_string())
            .collect();
        assert_eq!(
            shown,
            ["x", "x*y", "x*y^2 + x^2*y", "x*y^3 + 4*x^2*y^2 + x^3*y"]
        );
    }

    #[test]
    fn ascent_split_reports_the_crude_variant() {
        let check = check_ascent_split(4);
        assert!(check.passed);
        assert!(check.detail.contains("`2 1`"), "{}", check.detail);
    }

    #[test]
    fn correspondence_check_carries_the_table() {
        let check = check_correspondence_table();
        assert!(check.passed, "{}", check.detail);
        assert!(check.detail.contains("{1, 2, 3}  1 2 3  (1)(2)(3)"));
    }

    #[test]
    fn worked_example_passes() {
        let check = check_worked_example();
        assert!(check.passed, "{}", check.detail);
    }

    #[test]
    fn report_text_shape() {
        let report = run_suite(Suite::Grammar, 3, 1);
        let text = report.render_text();
        assert!(text.contains("[pass] grammar/excedance-distribution"));
        assert!(text.ends_with("(max size 3)\n"));
        assert!(report.to_json()["all_passed"].as_bool().unwrap());
    }

    #[test]
    fn suite_names_round_trip() {
        for suite in [
            Suite::All,
            Suite::Grammar,
            Suite::Series,
            Suite::Identities,
            Suite::Bijection,
        ] {
            assert_eq!(Suite::from_name(suite.name()).unwrap(), suite);
        }
        assert!(matches!(
            Suite::from_name("everything"),
            Err(Error::UnknownSuite(_))
        ));
    }
}
