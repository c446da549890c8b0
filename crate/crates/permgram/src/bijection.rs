//! The slot-to-leaf correspondence and the bijection it induces between
//! permutations with a prescribed left succession set and permutations with
//! the same set of fixed points.
//!
//! A word of size `n` has `n + 1` labeled slots and its companion tree has
//! `n + 1` labeled leaves with the same label multiset.  Pairing each slot
//! with a leaf of the same label — by the vertex rules below — lets one
//! insertion history drive both structures: inserting `n + 1` into a slot
//! grows the paired leaf, and both sides change their labels the same way.
//! Replaying a word's insertion history on the base tree therefore yields a
//! tree whose decoded cycle form has fixed points exactly at the word's left
//! succession values, excedance values at its jump values, and descent count
//! preserved as drops.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;

use crate::labeling::{extract_history, insert_at, label_slots, labeled_text, SlotLabel, Variant};
use crate::perms::{all_permutations, CycleForm, Permutation, SetStat, Stat};
use crate::trees::{encode, LabeledTree, Leaf, LeafPos};
use crate::Error;

/// A bijection between the `n + 1` slots of a word and the `n + 1` leaves of
/// a tree, matching labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoherencePairing {
    slots: Vec<LeafPos>,
}

impl CoherencePairing {
    /// The leaf paired with `slot` (1-based).
    ///
    /// Panics when `slot` is outside `1..=n + 1`.
    pub fn leaf_for_slot(&self, slot: usize) -> LeafPos {
        self.slots[slot - 1]
    }

    /// The slot paired with the leaf in `pos`, if any.
    pub fn slot_for_leaf(&self, pos: LeafPos) -> Option<usize> {
        self.slots.iter().position(|&q| q == pos).map(|i| i + 1)
    }

    pub fn slot_count(&self) -> usize {
        self.slots.len()
    }
}

/// Pairs the slots of `p` with the leaves of `t`:
///
/// * an `x`-slot `i` with the `x`-leaf under vertex `p(i)`,
/// * a `z`-slot `i` with the `z`-leaf under vertex `p(i)`,
/// * a `y`-slot `i` with the `y`-leaf under vertex `p(i - 1) + 1`,
/// * the `a`-slot with the `a`-leaf.
///
/// Fails with [`Error::Incoherent`] when the word and tree weights differ or
/// some slot finds no leaf at its prescribed vertex.
pub fn pair(p: &Permutation, t: &LabeledTree) -> Result<CoherencePairing, Error> {
    let n = p.n();
    if n == 0 {
        return Err(Error::Incoherent("the empty word has no slots".into()));
    }
    if t.n() != n {
        return Err(Error::Incoherent(format!(
            "word of size {n} against tree of size {}",
            t.n()
        )));
    }
    let labeling = label_slots(p, Variant::L);
    let word_weight = labeling.weight_monomial();
    let tree_weight = t.weight_monomial();
    if word_weight != tree_weight {
        return Err(Error::Incoherent(format!(
            "the word weighs {word_weight} but the tree weighs {tree_weight}"
        )));
    }
    let mut slots = Vec::with_capacity(n + 1);
    for (i, &label) in labeling.labels().iter().enumerate() {
        let slot = i + 1;
        let pos = match label {
            SlotLabel::X => t.leaf_of_vertex(p.at(slot), Leaf::X),
            SlotLabel::Z => t.leaf_of_vertex(p.at(slot), Leaf::Z),
            SlotLabel::Y => t.leaf_of_vertex(p.before(slot) + 1, Leaf::Y),
            SlotLabel::A => Some(t.a_leaf()),
            SlotLabel::B => {
                return Err(Error::Incoherent(
                    "pairing is defined for the plain labeling only".into(),
                ))
            }
        };
        let Some(pos) = pos else {
            return Err(Error::Incoherent(format!(
                "slot {slot} is an {label}-slot but its vertex has no {label}-leaf"
            )));
        };
        slots.push(pos);
    }
    let distinct: HashSet<LeafPos> = slots.iter().copied().collect();
    if distinct.len() != slots.len() {
        return Err(Error::Incoherent("two slots claim the same leaf".into()));
    }
    Ok(CoherencePairing { slots })
}

/// One step of a forward map trace: the word and companion tree after an
/// insertion, plus the slot used and its label in the previous word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceRow {
    pub size: usize,
    pub inserted: Option<(usize, SlotLabel)>,
    pub word: String,
    pub tree: String,
}

impl fmt::Display for TraceRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.inserted {
            None => write!(f, "size {}: {}  |  {}", self.size, self.word, self.tree),
            Some((slot, label)) => write!(
                f,
                "size {}: into slot {slot} ({label}): {}  |  {}",
                self.size, self.word, self.tree
            ),
        }
    }
}

fn replay(p: &Permutation, want_rows: bool) -> (LabeledTree, Vec<TraceRow>) {
    assert!(p.n() >= 1, "replay needs a nonempty word");
    let history = extract_history(p);
    let mut word = Permutation::identity(1);
    let mut tree = LabeledTree::base();
    let mut rows = Vec::new();
    if want_rows {
        rows.push(TraceRow {
            size: 1,
            inserted: None,
            word: labeled_text(&word, Variant::L),
            tree: tree.serialize(),
        });
    }
    for &(slot, label) in &history {
        let pairing = pair(&word, &tree).expect("replay keeps the word and tree coherent");
        let leaf = pairing.leaf_for_slot(slot);
        tree = tree.grow(leaf).expect("the pairing addresses a live leaf");
        word = insert_at(&word, slot).expect("history slots stay in range");
        if want_rows {
            rows.push(TraceRow {
                size: word.n(),
                inserted: Some((slot, label)),
                word: labeled_text(&word, Variant::L),
                tree: tree.serialize(),
            });
        }
    }
    debug_assert_eq!(&word, p);
    (tree, rows)
}

/// The tree grown by replaying the insertion history of `p` from the base
/// tree, pairing slots with leaves at every step.
pub fn companion_tree(p: &Permutation) -> LabeledTree {
    replay(p, false).0
}

/// The forward map: the permutation whose cycle form the companion tree of
/// `p` encodes.  Its fixed point set equals the left succession value set of
/// `p`, its excedance values are the jump values of `p`, and its drops count
/// the descents of `p`.
pub fn phi(p: &Permutation) -> Permutation {
    if p.n() == 0 {
        return p.clone();
    }
    companion_tree(p)
        .decode()
        .expect("grown trees decode")
        .to_permutation()
}

/// [`phi`] along with the intermediate words and trees of the replay.
pub fn phi_trace(p: &Permutation) -> (Permutation, Vec<TraceRow>) {
    if p.n() == 0 {
        return (p.clone(), Vec::new());
    }
    let (tree, rows) = replay(p, true);
    (
        tree.decode().expect("grown trees decode").to_permutation(),
        rows,
    )
}

/// The inverse map: peels the top value off the cycle form, recurses, and
/// re-inserts at the slot paired with the peeled vertex's position.
pub fn phi_inverse(p: &Permutation) -> Permutation {
    let n = p.n();
    if n <= 1 {
        return p.clone();
    }
    let cycles = p.to_cycles();
    let tree = encode(&cycles).expect("nonempty cycle form");
    let top_slot = tree
        .vertex_parent(n)
        .expect("the top vertex of a size >= 2 tree is not the root");
    let reduced_cycles: Vec<Vec<usize>> = cycles
        .cycles()
        .iter()
        .filter_map(|cycle| {
            let kept: Vec<usize> = cycle.iter().copied().filter(|&v| v != n).collect();
            (!kept.is_empty()).then_some(kept)
        })
        .collect();
    let reduced = CycleForm::new(reduced_cycles)
        .expect("dropping the top value leaves a partition")
        .to_permutation();
    let word = phi_inverse(&reduced);
    let reduced_tree = encode(&reduced.to_cycles()).expect("nonempty cycle form");
    let pairing = pair(&word, &reduced_tree).expect("inverse images stay coherent");
    let slot = pairing
        .slot_for_leaf(top_slot)
        .expect("removing the top vertex leaves a paired leaf in its slot");
    insert_at(&word, slot).expect("paired slots stay in range")
}

/// Exhaustive audit of the map over all of `S_n`: round trips, statistic
/// transport, and class-by-class bijectivity.
#[derive(Debug, Clone)]
pub struct BijectionCensus {
    pub n: usize,
    pub permutations: usize,
    pub distinct_images: usize,
    pub classes: usize,
    pub round_trip_failures: Vec<String>,
    pub transport_failures: Vec<String>,
    pub class_mismatches: Vec<String>,
}

impl BijectionCensus {
    pub fn all_passed(&self) -> bool {
        self.round_trip_failures.is_empty()
            && self.transport_failures.is_empty()
            && self.class_mismatches.is_empty()
            && self.distinct_images == self.permutations
    }
}

/// Runs the full audit over `S_n`.
pub fn sweep(n: usize) -> Result<BijectionCensus, Error> {
    let mut census = BijectionCensus {
        n,
        permutations: 0,
        distinct_images: 0,
        classes: 0,
        round_trip_failures: Vec::new(),
        transport_failures: Vec::new(),
        class_mismatches: Vec::new(),
    };
    let mut images = HashSet::new();
    let mut lsuc_classes: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    let mut fixed_classes: BTreeMap<BTreeSet<usize>, usize> = BTreeMap::new();
    for p in all_permutations(n)? {
        census.permutations += 1;
        let image = phi(&p);
        if p.set_stat(SetStat::LsucValues) != image.set_stat(SetStat::Fixed) {
            census.transport_failures.push(format!(
                "{p}: left succession values do not become fixed points"
            ));
        }
        if p.set_stat(SetStat::JumpValues) != image.set_stat(SetStat::ExcValues) {
            census
                .transport_failures
                .push(format!("{p}: jump values do not become excedance values"));
        }
        if p.stat(Stat::Jump) != image.stat(Stat::Exc)
            || p.stat(Stat::Des) != image.stat(Stat::Drop)
        {
            census
                .transport_failures
                .push(format!("{p}: (jump, des) does not become (exc, drop)"));
        }
        if phi_inverse(&image) != p {
            census.round_trip_failures.push(format!("{p}"));
        }
        images.insert(image.word().to_vec());
        *lsuc_classes
            .entry(p.set_stat(SetStat::LsucValues))
            .or_default() += 1;
        *fixed_classes
            .entry(image.set_stat(SetStat::Fixed))
            .or_default() += 1;
    }
    census.distinct_images = images.len();
    census.classes = lsuc_classes.len();
    let keys: BTreeSet<&BTreeSet<usize>> =
        lsuc_classes.keys().chain(fixed_classes.keys()).collect();
    for key in keys {
        let from = lsuc_classes.get(key).copied().unwrap_or(0);
        let to = fixed_classes.get(key).copied().unwrap_or(0);
        if from != to {
            census
                .class_mismatches
                .push(format!("class {key:?}: {from} words against {to} images"));
        }
    }
    Ok(census)
}

/// One row of the small correspondence table: a word, its image, and the
/// transported statistics, grouped by left succession set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub class: BTreeSet<usize>,
    pub word: Permutation,
    pub image: CycleForm,
    pub jump: usize,
    pub des: usize,
    pub exc: usize,
    pub drops: usize,
}

/// The full correspondence table for `S_n`, rows grouped by left succession
/// set (smaller sets first), words in lexicographic order within a class.
pub fn correspondence_table(n: usize) -> Result<Vec<TableRow>, Error> {
    let mut grouped: BTreeMap<(usize, Vec<usize>), Vec<TableRow>> = BTreeMap::new();
    for p in all_permutations(n)? {
        let class = p.set_stat(SetStat::LsucValues);
        let image = phi(&p);
        let row = TableRow {
            class: class.clone(),
            jump: p.stat(Stat::Jump),
            des: p.stat(Stat::Des),
            exc: image.stat(Stat::Exc),
            drops: image.stat(Stat::Drop),
            image: image.to_cycles(),
            word: p,
        };
        grouped
            .entry((class.len(), class.into_iter().collect()))
            .or_default()
            .push(row);
    }
    Ok(grouped.into_values().flatten().collect())
}

fn class_text(class: &BTreeSet<usize>) -> String {
    let inner = class
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(", ");
    format!("{{{inner}}}")
}

/// Renders a correspondence table as aligned text columns.
pub fn render_table(rows: &[TableRow]) -> String {
    let mut cells: Vec<[String; 3]> =
        vec![["class".to_string(), "word".to_string(), "image".to_string()]];
    for row in rows {
        cells.push([
            class_text(&row.class),
            row.word.to_string(),
            row.image.to_string(),
        ]);
    }
    let width = |col: usize| cells.iter().map(|r| r[col].len()).max().unwrap_or(0);
    let (w0, w1, w2) = (width(0), width(1), width(2));
    let mut out = String::new();
    for (i, row) in cells.iter().enumerate() {
        out.push_str(&format!(
            "{:<w0$}  {:<w1$}  {:<w2$}",
            row[0], row[1], row[2]
        ));
        if i == 0 {
            out.push_str("  (jump, des) -> (exc, drop)");
        } else {
            let data = &rows[i - 1];
            out.push_str(&format!(
                "  ({}, {}) -> ({}, {})",
                data.jump, data.des, data.exc, data.drops
            ));
        }
        out = out.trim_end().to_string();
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::Side;

    fn perm(src: &str) -> Permutation {
        Permutation::parse(src).expect(src)
    }

    #[test]
    fn pairing_on_the_base_word() {
        let p = perm("1");
        let t = LabeledTree::base();
        let pairing = pair(&p, &t).unwrap();
        assert_eq!(pairing.slot_count(), 2);
        assert_eq!(pairing.leaf_for_slot(1), LeafPos::new(1, Side::Left));
        assert_eq!(pairing.leaf_for_slot(2), LeafPos::new(1, Side::Right));
        assert_eq!(pairing.slot_for_leaf(LeafPos::new(1, Side::Left)), Some(1));
        assert_eq!(pairing.slot_for_leaf(LeafPos::new(2, Side::Left)), None);
    }

    #[test]
    fn pairing_rejects_weight_mismatches() {
        let two_cycle = encode(&CycleForm::parse("(1 2)").unwrap()).unwrap();
        let err = pair(&perm("1 2"), &two_cycle).unwrap_err();
        assert!(matches!(err, Error::Incoherent(_)), "{err}");
        let err = pair(&perm("1"), &two_cycle).unwrap_err();
        assert!(matches!(err, Error::Incoherent(_)), "{err}");
    }

    #[test]
    fn pairing_is_bijective_on_matching_pairs() {
        for n in 1..=6 {
            for p in all_permutations(n).unwrap() {
                let t = companion_tree(&p);
                let pairing = pair(&p, &t).unwrap();
                let mut leaves: Vec<LeafPos> =
                    (1..=n + 1).map(|s| pairing.leaf_for_slot(s)).collect();
                leaves.sort();
                leaves.dedup();
                assert_eq!(leaves.len(), n + 1, "{p}");
            }
        }
    }

    #[test]
    fn forward_map_on_the_running_example() {
        let image = phi(&perm("1 6 3 2 4 5"));
        assert_eq!(image, perm("1 6 4 2 5 3"));
        assert_eq!(image.to_cycles().to_string(), "(1)(2 6 3 4)(5)");
        assert_eq!(phi_inverse(&image), perm("1 6 3 2 4 5"));
    }

    type ExpectedTraceRow = (
        usize,
        Option<(usize, SlotLabel)>,
        &'static str,
        &'static str,
    );

    #[test]
    fn trace_of_the_running_example() {
        let (image, rows) = phi_trace(&perm("1 6 3 2 4 5"));
        assert_eq!(image, perm("1 6 4 2 5 3"));
        let expected: Vec<ExpectedTraceRow> = vec![
            (1, None, "0 z 1 a", "(1 z a)"),
            (2, Some((2, SlotLabel::A)), "0 z 1 z 2 a", "(1 z (2 z a))"),
            (
                3,
                Some((2, SlotLabel::Z)),
                "0 z 1 x 3 a 2 y",
                "(1 z (2 (3 x y) a))",
            ),
            (
                4,
                Some((4, SlotLabel::Y)),
                "0 z 1 x 3 y 2 x 4 a",
                "(1 z (2 (3 x (4 x y)) a))",
            ),
            (
                5,
                Some((5, SlotLabel::A)),
                "0 z 1 x 3 y 2 x 4 z 5 a",
                "(1 z (2 (3 x (4 x y)) (5 z a)))",
            ),
            (
                6,
                Some((2, SlotLabel::X)),
                "0 z 1 x 6 a 3 y 2 x 4 z 5 y",
                "(1 z (2 (3 (6 x y) (4 x y)) (5 z a)))",
            ),
        ];
        assert_eq!(rows.len(), expected.len());
        for (row, (size, inserted, word, tree)) in rows.iter().zip(expected) {
            assert_eq!(row.size, size);
            assert_eq!(row.inserted, inserted);
            assert_eq!(row.word, word);
            assert_eq!(row.tree, tree);
        }
    }

    #[test]
    fn small_sizes_by_hand() {
        assert_eq!(phi(&perm("1")), perm("1"));
        assert_eq!(phi(&perm("1 2")), perm("1 2"));
        assert_eq!(phi(&perm("2 1")), perm("2 1"));
        assert_eq!(phi_inverse(&perm("2 1")), perm("2 1"));
    }

    type FlatTableRow = (Vec<usize>, String, String, usize, usize, usize, usize);

    #[test]
    fn full_table_for_size_three() {
        let rows = correspondence_table(3).unwrap();
        let got: Vec<FlatTableRow> = rows
            .iter()
            .map(|r| {
                (
                    r.class.iter().copied().collect(),
                    r.word.to_string(),
                    r.image.to_string(),
                    r.jump,
                    r.des,
                    r.exc,
                    r.drops,
                )
            })
            .collect();
        let expected = vec![
            (
                vec![],
                "2 1 3".to_string(),
                "(1 2 3)".to_string(),
                2,
                1,
                2,
                1,
            ),
            (
                vec![],
                "3 2 1".to_string(),
                "(1 3 2)".to_string(),
                1,
                2,
                1,
                2,
            ),
            (
                vec![1],
                "1 3 2".to_string(),
                "(1)(2 3)".to_string(),
                1,
                1,
                1,
                1,
            ),
            (
                vec![2],
                "3 1 2".to_string(),
                "(1 3)(2)".to_string(),
                1,
                1,
                1,
                1,
            ),
            (
                vec![3],
                "2 3 1".to_string(),
                "(1 2)(3)".to_string(),
                1,
                1,
                1,
                1,
            ),
            (
                vec![1, 2, 3],
                "1 2 3".to_string(),
                "(1)(2)(3)".to_string(),
                0,
                0,
                0,
                0,
            ),
        ];
        assert_eq!(got, expected);
    }

    #[test]
    fn rendered_table_lines_up() {
        let rows = correspondence_table(3).unwrap();
        let text = render_table(&rows);
        let expected = "\
class      word   image      (jump, des) -> (exc, drop)
{}         2 1 3  (1 2 3)    (2, 1) -> (2, 1)
{}         3 2 1  (1 3 2)    (1, 2) -> (1, 2)
{1}        1 3 2  (1)(2 3)   (1, 1) -> (1, 1)
{2}        3 1 2  (1 3)(2)   (1, 1) -> (1, 1)
{3}        2 3 1  (1 2)(3)   (1, 1) -> (1, 1)
{1, 2, 3}  1 2 3  (1)(2)(3)  (0, 0) -> (0, 0)
";
        assert_eq!(text, expected);
    }

    #[test]
    fn round_trips_exhaustively() {
        for n in 0..=6 {
            for p in all_permutations(n).unwrap() {
                assert_eq!(phi_inverse(&phi(&p)), p, "{p}");
            }
        }
    }

    #[test]
    fn census_is_clean_for_small_sizes() {
        for n in 1..=5 {
            let census = sweep(n).unwrap();
            assert!(census.all_passed(), "{:?}", census);
            assert_eq!(census.permutations, (1..=n).product::<usize>());
        }
    }
}
