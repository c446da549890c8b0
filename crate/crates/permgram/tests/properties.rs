//! Randomized structural properties of the polynomial ring, the formal
//! derivative, slot labelings, tree growth, and truncated series.

use std::collections::BTreeMap;

use proptest::prelude::*;

use permgram::grammar::Grammar;
use permgram::labeling::{extract_history, insert_at, label_slots, SlotLabel, Variant};
use permgram::perms::{Permutation, Stat};
use permgram::poly::{coeff, LaurentPolynomial, Monomial, Var};
use permgram::series::TruncatedEgf;
use permgram::trees::{encode, LabeledTree};

fn arb_var() -> impl Strategy<Value = Var> {
    prop::sample::select(Var::ALL.to_vec())
}

/// A monomial over up to three variables with exponents in `min_exp..=3`.
fn arb_monomial(min_exp: i64) -> impl Strategy<Value = Monomial> {
    prop::collection::vec((arb_var(), min_exp..=3i64), 0..=3).prop_map(Monomial::from_pairs)
}

/// A polynomial with up to four terms and small integer coefficients.
fn arb_poly(min_exp: i64) -> impl Strategy<Value = LaurentPolynomial> {
    prop::collection::vec((-9i64..=9, arb_monomial(min_exp)), 0..=4).prop_map(|terms| {
        LaurentPolynomial::from_terms(terms.into_iter().map(|(c, m)| (coeff(c), m)))
    })
}

fn arb_perm(max_n: usize) -> impl Strategy<Value = Permutation> {
    (1..=max_n)
        .prop_flat_map(|n| Just((1..=n).collect::<Vec<usize>>()).prop_shuffle())
        .prop_map(|word| Permutation::from_word(word).unwrap())
}

/// A substitution image for every variable, with nonnegative exponents so any
/// polynomial without negative exponents can absorb it.
fn arb_substitution() -> impl Strategy<Value = BTreeMap<Var, LaurentPolynomial>> {
    prop::collection::vec(arb_poly(0), 5).prop_map(|images| {
        Var::ALL
            .iter()
            .copied()
            .zip(images)
            .collect::<BTreeMap<_, _>>()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn addition_commutes(p in arb_poly(-3), q in arb_poly(-3)) {
        prop_assert_eq!(&p + &q, &q + &p);
    }

    #[test]
    fn multiplication_commutes(p in arb_poly(-3), q in arb_poly(-3)) {
        prop_assert_eq!(&p * &q, &q * &p);
    }

    #[test]
    fn multiplication_associates(p in arb_poly(-2), q in arb_poly(-2), r in arb_poly(-2)) {
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
    }

    #[test]
    fn multiplication_distributes(p in arb_poly(-3), q in arb_poly(-3), r in arb_poly(-3)) {
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
    }

    #[test]
    fn negation_cancels(p in arb_poly(-3)) {
        prop_assert!((&p + &(-p.clone())).is_zero());
    }

    #[test]
    fn multiplicative_identity(p in arb_poly(-3)) {
        prop_assert_eq!(&p * &LaurentPolynomial::one(), p.clone());
        prop_assert!((&p * &LaurentPolynomial::zero()).is_zero());
    }

    #[test]
    fn display_then_parse_round_trips(p in arb_poly(-3)) {
        let text = p.to_string();
        prop_assert_eq!(LaurentPolynomial::parse(&text).unwrap(), p);
    }

    #[test]
    fn substitution_is_a_ring_homomorphism(
        p in arb_poly(0),
        q in arb_poly(0),
        images in arb_substitution(),
    ) {
        let sub = |f: &LaurentPolynomial| f.substitute(&images).unwrap();
        prop_assert_eq!(sub(&(&p + &q)), &sub(&p) + &sub(&q));
        prop_assert_eq!(sub(&(&p * &q)), &sub(&p) * &sub(&q));
    }

    #[test]
    fn derivative_is_linear(p in arb_poly(-3), q in arb_poly(-3)) {
        let g = Grammar::dumont();
        prop_assert_eq!(g.derive(&(&p + &q)), &g.derive(&p) + &g.derive(&q));
    }

    #[test]
    fn derivative_satisfies_leibniz(p in arb_poly(-2), q in arb_poly(-2)) {
        let g = Grammar::dumont();
        let lhs = g.derive(&(&p * &q));
        let rhs = &(&g.derive(&p) * &q) + &(&p * &g.derive(&q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn grammar_constants_factor_out(p in arb_poly(-2)) {
        let g = Grammar::dumont();
        let c = LaurentPolynomial::parse("z - y").unwrap();
        prop_assert!(g.is_constant(&c));
        prop_assert_eq!(g.derive(&(&c * &p)), &c * &g.derive(&p));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_display_round_trips(p in arb_perm(8)) {
        prop_assert_eq!(Permutation::parse(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn inverse_is_an_involution(p in arb_perm(8)) {
        prop_assert_eq!(p.inverse().inverse(), p.clone());
        prop_assert_eq!(p.to_cycles().to_permutation(), p);
    }

    #[test]
    fn statistics_partition_positions(p in arb_perm(8)) {
        let n = p.n();
        prop_assert_eq!(p.stat(Stat::Exc) + p.stat(Stat::Drop) + p.stat(Stat::Fix), n);
        prop_assert_eq!(p.stat(Stat::Asc), p.stat(Stat::Jump) + p.stat(Stat::Lsuc));
        let starts_with_one = usize::from(p.at(1) == 1);
        prop_assert_eq!(p.stat(Stat::Lsuc), p.stat(Stat::Suc) + starts_with_one);
    }

    #[test]
    fn labeling_weight_encodes_statistics(p in arb_perm(8)) {
        let expected = Monomial::from_pairs([
            (Var::A, 1),
            (Var::X, p.stat(Stat::Jump) as i64),
            (Var::Y, p.stat(Stat::Des) as i64),
            (Var::Z, p.stat(Stat::Lsuc) as i64),
        ]);
        prop_assert_eq!(label_slots(&p, Variant::L).weight_monomial(), expected);

        let starts_with_one = p.at(1) == 1;
        let variant = Monomial::from_pairs([
            (Var::A, 1),
            (Var::B, i64::from(starts_with_one)),
            (Var::X, p.stat(Stat::Jump) as i64),
            (Var::Y, p.stat(Stat::Des) as i64),
            (Var::Z, p.stat(Stat::Suc) as i64),
        ]);
        prop_assert_eq!(label_slots(&p, Variant::R).weight_monomial(), variant);
    }

    #[test]
    fn insertion_rewrites_weight_like_a_rule(p in arb_perm(7), raw_slot in 1usize..=8) {
        let slot = 1 + (raw_slot - 1) % (p.n() + 1);
        let label = label_slots(&p, Variant::L).label(slot);
        let grown = insert_at(&p, slot).unwrap();
        let rule = Grammar::dumont().rule(label.var()).unwrap().clone();
        let (_, rule_monomial) = rule.as_single_term().map(|(c, m)| (c.clone(), m.clone())).unwrap();
        let expected = label_slots(&p, Variant::L)
            .weight_monomial()
            .with(label.var(), -1)
            .mul(&rule_monomial);
        prop_assert_eq!(label_slots(&grown, Variant::L).weight_monomial(), expected);
    }

    #[test]
    fn insertion_history_rebuilds_the_word(p in arb_perm(8)) {
        let history = extract_history(&p);
        prop_assert_eq!(history.len(), p.n() - 1);
        let mut word = Permutation::parse("1").unwrap();
        for &(slot, label) in &history {
            prop_assert_eq!(label_slots(&word, Variant::L).label(slot), label);
            prop_assert_ne!(label, SlotLabel::B);
            word = insert_at(&word, slot).unwrap();
        }
        prop_assert_eq!(word, p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn random_growth_sequences_build_valid_trees(picks in prop::collection::vec(0usize..64, 0..=6)) {
        let mut tree = LabeledTree::base();
        for pick in picks {
            let leaves = tree.leaves();
            let (pos, _) = leaves[pick % leaves.len()];
            tree = tree.grow(pos).unwrap();
        }
        prop_assert!(tree.validate().is_ok());

        let cycles = tree.decode().unwrap();
        prop_assert_eq!(encode(&cycles).unwrap(), tree.clone());
        prop_assert_eq!(LabeledTree::parse(&tree.serialize()).unwrap(), tree.clone());

        let p = cycles.to_permutation();
        let expected = Monomial::from_pairs([
            (Var::A, 1),
            (Var::X, p.stat(Stat::Exc) as i64),
            (Var::Y, (p.n() - p.stat(Stat::Exc) - p.stat(Stat::Fix)) as i64),
            (Var::Z, p.stat(Stat::Fix) as i64),
        ]);
        prop_assert_eq!(tree.weight_monomial(), expected);
    }

    #[test]
    fn series_multiplication_commutes_and_associates(
        p in arb_poly(0),
        q in arb_poly(0),
        r in arb_poly(0),
    ) {
        let order = 5;
        let f = TruncatedEgf::exp(&LaurentPolynomial::variable(Var::X), order).scale(&p);
        let g = TruncatedEgf::exp(&LaurentPolynomial::variable(Var::Y), order).scale(&q);
        let h = TruncatedEgf::exp(&LaurentPolynomial::variable(Var::Z), order).scale(&r);
        prop_assert_eq!(f.mul(&g).unwrap(), g.mul(&f).unwrap());
        prop_assert_eq!(
            f.mul(&g).unwrap().mul(&h).unwrap(),
            f.mul(&g.mul(&h).unwrap()).unwrap()
        );
    }

    #[test]
    fn derivative_series_is_multiplicative(p in arb_poly(0), q in arb_poly(0)) {
        let g = Grammar::dumont();
        let order = 5;
        let lhs = TruncatedEgf::from_grammar(&g, &(&p * &q), order);
        let rhs = TruncatedEgf::from_grammar(&g, &p, order)
            .mul(&TruncatedEgf::from_grammar(&g, &q, order))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}
