//! Grammatical slot labelings of permutations.
//!
//! A permutation of `[n]` has `n + 1` slots: slot `i` sits between
//! `sigma_(i-1)` and `sigma_i` (with the phantom `sigma_0 = 0`), and slot
//! `n + 1` sits after `sigma_n`.  Each slot carries one variable, chosen so
//! that inserting `n + 1` into a slot rewrites that slot's label exactly as a
//! grammar rule: the product of all labels is the permutation's weight
//! monomial, and summing weights over `S_n` reproduces the grammar's `n`-th
//! derivative.

use std::fmt;

use crate::perms::Permutation;
use crate::poly::{coeff, LaurentPolynomial, Monomial, Var};
use crate::Error;

/// The variable attached to one slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SlotLabel {
    A,
    B,
    X,
    Y,
    Z,
}

impl SlotLabel {
    pub fn var(self) -> Var {
        match self {
            SlotLabel::A => Var::A,
            SlotLabel::B => Var::B,
            SlotLabel::X => Var::X,
            SlotLabel::Y => Var::Y,
            SlotLabel::Z => Var::Z,
        }
    }

    pub fn name(self) -> &'static str {
        self.var().name()
    }
}

impl fmt::Display for SlotLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which letter marks a left succession in slot 1.
///
/// Variant `L` labels every left succession `z`, so the `z`-count is the
/// left-succession statistic.  Variant `R` labels slot 1 with `b` instead
/// when `sigma_1 = 1`, so the `z`-count drops to the interior-succession
/// statistic and `b` marks words starting with 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    L,
    R,
}

/// The labels of all `n + 1` slots of one permutation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotLabeling {
    labels: Vec<SlotLabel>,
}

impl SlotLabeling {
    /// All labels, slot 1 first.
    pub fn labels(&self) -> &[SlotLabel] {
        &self.labels
    }

    /// The label of `slot` (1-based).
    pub fn label(&self, slot: usize) -> SlotLabel {
        self.labels[slot - 1]
    }

    pub fn slot_count(&self) -> usize {
        self.labels.len()
    }

    /// The product of all slot labels.
    pub fn weight_monomial(&self) -> Monomial {
        Monomial::from_pairs(self.labels.iter().map(|l| (l.var(), 1)))
    }

    pub fn weight(&self) -> LaurentPolynomial {
        LaurentPolynomial::term(coeff(1), self.weight_monomial())
    }
}

/// Labels every slot of `p` (which must be nonempty).
///
/// Slot `i <= n` looks at the pair `(sigma_(i-1), sigma_i)`:
/// `x` for a jump, `z` for a left succession (variant `R`: `b` when `i = 1`),
/// `a` right after the maximum, `y` for any other descent.  Slot `n + 1` is
/// `a` when the word ends in its maximum, else `y`.
pub fn label_slots(p: &Permutation, variant: Variant) -> SlotLabeling {
    let n = p.n();
    assert!(n >= 1, "labelings need at least one element");
    let mut labels = Vec::with_capacity(n + 1);
    for i in 1..=n {
        let prev = p.before(i);
        let here = p.at(i);
        let label = if here >= prev + 2 {
            SlotLabel::X
        } else if here == prev + 1 {
            if i == 1 && variant == Variant::R {
                SlotLabel::B
            } else {
                SlotLabel::Z
            }
        } else if prev == n {
            SlotLabel::A
        } else {
            SlotLabel::Y
        };
        labels.push(label);
    }
    labels.push(if p.at(n) == n {
        SlotLabel::A
    } else {
        SlotLabel::Y
    });
    SlotLabeling { labels }
}

/// Renders the interleaved display form `0 x 2 x 6 y 3 ... a 7 y`: the word
/// with each slot's label written in its slot.
pub fn labeled_text(p: &Permutation, variant: Variant) -> String {
    let labeling = label_slots(p, variant);
    let mut out = String::from("0");
    for i in 1..=p.n() {
        out.push_str(&format!(" {} {}", labeling.label(i), p.at(i)));
    }
    out.push_str(&format!(" {}", labeling.label(p.n() + 1)));
    out
}

/// Inserts `n + 1` into the given slot, shifting later values right.
pub fn insert_at(p: &Permutation, slot: usize) -> Result<Permutation, Error> {
    let n = p.n();
    if slot < 1 || slot > n + 1 {
        return Err(Error::SlotOutOfRange { slot, max: n + 1 });
    }
    let mut word = p.word().to_vec();
    word.insert(slot - 1, n + 1);
    Ok(Permutation::from_word_unchecked(word))
}

/// Undoes insertions down to the singleton: entry `k - 2` of the result says
/// which slot of the restriction to `[k - 1]` the value `k` occupied, along
/// with that slot's variant-`L` label.  Replaying the slots through
/// [`insert_at`] from the word `1` rebuilds `p`.
pub fn extract_history(p: &Permutation) -> Vec<(usize, SlotLabel)> {
    let mut word = p.word().to_vec();
    let mut history = Vec::new();
    for k in (2..=p.n()).rev() {
        let pos = word.iter().position(|&v| v == k).expect("k is in the word") + 1;
        word.remove(pos - 1);
        let reduced = Permutation::from_word_unchecked(word.clone());
        let label = label_slots(&reduced, Variant::L).label(pos);
        history.push((pos, label));
    }
    history.reverse();
    history
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perms::{all_permutations, Stat};
    use std::collections::BTreeMap;

    fn perm(src: &str) -> Permutation {
        Permutation::parse(src).expect(src)
    }

    fn labels(src: &str, variant: Variant) -> String {
        label_slots(&perm(src), variant)
            .labels()
            .iter()
            .map(|l| l.name())
            .collect::<Vec<_>>()
            .join("")
    }

    #[test]
    fn labels_of_the_nine_letter_example() {
        assert_eq!(labels("2 6 3 4 1 5 8 9 7", Variant::L), "xxyzyxxzay");
        assert_eq!(
            labeled_text(&perm("2 6 3 4 1 5 8 9 7"), Variant::L),
            "0 x 2 x 6 y 3 z 4 y 1 x 5 x 8 z 9 a 7 y"
        );
    }

    #[test]
    fn labels_of_the_singleton() {
        assert_eq!(labels("1", Variant::L), "za");
        assert_eq!(labels("1", Variant::R), "ba");
        assert_eq!(labeled_text(&perm("1"), Variant::R), "0 b 1 a");
    }

    #[test]
    fn variant_r_only_relabels_an_initial_one() {
        assert_eq!(labels("1 2", Variant::R), "bza");
        assert_eq!(labels("2 1", Variant::R), "xay");
        for n in 1..=6 {
            for p in all_permutations(n).unwrap() {
                let l = label_slots(&p, Variant::L);
                let r = label_slots(&p, Variant::R);
                if p.at(1) == 1 {
                    assert_eq!(l.label(1), SlotLabel::Z);
                    assert_eq!(r.label(1), SlotLabel::B);
                    assert_eq!(l.labels()[1..], r.labels()[1..]);
                } else {
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn label_counts_are_the_statistics() {
        for n in 1..=7 {
            for p in all_permutations(n).unwrap() {
                let l = label_slots(&p, Variant::L);
                let count = |target| l.labels().iter().filter(|&&x| x == target).count();
                assert_eq!(count(SlotLabel::X), p.stat(Stat::Jump), "{p}");
                assert_eq!(count(SlotLabel::Y), p.stat(Stat::Des), "{p}");
                assert_eq!(count(SlotLabel::Z), p.stat(Stat::Lsuc), "{p}");
                assert_eq!(count(SlotLabel::A), 1, "{p}");
                assert_eq!(count(SlotLabel::B), 0, "{p}");

                let r = label_slots(&p, Variant::R);
                let count_r = |target| r.labels().iter().filter(|&&x| x == target).count();
                assert_eq!(count_r(SlotLabel::Z), p.stat(Stat::Suc), "{p}");
                assert_eq!(count_r(SlotLabel::B), usize::from(p.at(1) == 1), "{p}");
            }
        }
    }

    #[test]
    fn big_ascents_are_the_interior_x_labels() {
        for p in all_permutations(6).unwrap() {
            let l = label_slots(&p, Variant::L);
            let interior_x = (2..=6).filter(|&i| l.label(i) == SlotLabel::X).count();
            assert_eq!(interior_x, p.stat(Stat::Basc), "{p}");
        }
    }

    #[test]
    fn weights_sum_to_the_derivative() {
        let g = crate::grammar::Grammar::dumont();
        let gb = crate::grammar::Grammar::dumont_b();
        let a = LaurentPolynomial::parse("a").unwrap();
        let ab = LaurentPolynomial::parse("a*b").unwrap();
        for n in 1..=6 {
            let mut sum_l = LaurentPolynomial::zero();
            let mut sum_r = LaurentPolynomial::zero();
            for p in all_permutations(n).unwrap() {
                sum_l = &sum_l + &label_slots(&p, Variant::L).weight();
                sum_r = &sum_r + &label_slots(&p, Variant::R).weight();
            }
            assert_eq!(sum_l, g.derive_n(&a, n), "variant L at n = {n}");
            assert_eq!(sum_r, gb.derive_n(&ab, n - 1), "variant R at n = {n}");
        }
    }

    #[test]
    fn insertion_rewrites_one_label_like_a_grammar_rule() {
        // Multiset transition: an a-slot becomes {z, a}; any other slot
        // becomes {x, y} while the old a survives elsewhere (as y or a).
        for n in 1..=6 {
            for p in all_permutations(n).unwrap() {
                let old = label_slots(&p, Variant::L);
                for slot in 1..=n + 1 {
                    let grown = insert_at(&p, slot).unwrap();
                    let new = label_slots(&grown, Variant::L);
                    let mut expected: BTreeMap<SlotLabel, i64> = BTreeMap::new();
                    for &l in old.labels() {
                        *expected.entry(l).or_insert(0) += 1;
                    }
                    *expected.entry(old.label(slot)).or_insert(0) -= 1;
                    match old.label(slot) {
                        SlotLabel::A => {
                            *expected.entry(SlotLabel::Z).or_insert(0) += 1;
                            *expected.entry(SlotLabel::A).or_insert(0) += 1;
                        }
                        _ => {
                            *expected.entry(SlotLabel::X).or_insert(0) += 1;
                            *expected.entry(SlotLabel::Y).or_insert(0) += 1;
                        }
                    }
                    expected.retain(|_, count| *count != 0);
                    let mut actual: BTreeMap<SlotLabel, i64> = BTreeMap::new();
                    for &l in new.labels() {
                        *actual.entry(l).or_insert(0) += 1;
                    }
                    assert_eq!(actual, expected, "{p} at slot {slot}");
                }
            }
        }
    }

    #[test]
    fn insert_at_splices_and_guards_range() {
        let p = perm("1");
        assert_eq!(insert_at(&p, 2).unwrap(), perm("1 2"));
        assert_eq!(insert_at(&perm("1 2"), 1).unwrap(), perm("3 1 2"));
        assert_eq!(labels("3 1 2", Variant::L), "xazy");
        assert_eq!(
            insert_at(&p, 0),
            Err(Error::SlotOutOfRange { slot: 0, max: 2 })
        );
        assert_eq!(
            insert_at(&p, 3),
            Err(Error::SlotOutOfRange { slot: 3, max: 2 })
        );
    }

    #[test]
    fn history_replay_rebuilds_the_permutation() {
        assert_eq!(extract_history(&perm("1 2")), vec![(2, SlotLabel::A)]);
        for n in 1..=7 {
            for p in all_permutations(n).unwrap() {
                let history = extract_history(&p);
                let mut rebuilt = Permutation::identity(1);
                for &(slot, label) in &history {
                    assert_eq!(label_slots(&rebuilt, Variant::L).label(slot), label, "{p}");
                    rebuilt = insert_at(&rebuilt, slot).unwrap();
                }
                assert_eq!(rebuilt, p);
            }
        }
    }

    #[test]
    fn history_of_the_worked_example() {
        let history = extract_history(&perm("1 6 3 2 4 5"));
        assert_eq!(
            history,
            vec![
                (2, SlotLabel::A),
                (2, SlotLabel::Z),
                (4, SlotLabel::Y),
                (5, SlotLabel::A),
                (2, SlotLabel::X),
            ]
        );
    }
}
