//! Labeling the insertion slots of a word.
//!
//! A word of size n has n + 1 slots (between consecutive letters of the
//! padded word, plus one at the end).  Each slot gets a letter:
//!   x  a jump (the next letter exceeds this one by at least two),
//!   z  a succession (the next letter is exactly one more),
//!   a  the slot after the letter n,
//!   y  everything else.
//! Inserting n + 1 into a slot turns its letter into the two letters a
//! grammar rule prescribes, which is why slot weights sum to derivatives.
//!
//! Run with: cargo run --example slot_labelings

use permgram::grammar::Grammar;
use permgram::labeling::{extract_history, insert_at, label_slots, labeled_text, Variant};
use permgram::perms::{all_permutations, Permutation};
use permgram::poly::LaurentPolynomial;

fn main() {
    let p = Permutation::parse("2 6 3 4 1 5 8 9 7").unwrap();
    println!("word with slot letters interleaved:");
    println!("  {}", labeled_text(&p, Variant::L));
    let labeling = label_slots(&p, Variant::L);
    println!("  weight: {}", labeling.weight());

    // The variant labeling marks a size-1 left succession with b instead of z,
    // so that z counts interior successions only.
    let q = Permutation::parse("1 2 4 3").unwrap();
    println!("\nplain vs variant labels of {q}:");
    println!("  {}", labeled_text(&q, Variant::L));
    println!("  {}", labeled_text(&q, Variant::R));

    // Inserting the next value realizes a grammar step on the labels.
    println!("\ninserting 4 into every slot of 3 1 2:");
    let base = Permutation::parse("3 1 2").unwrap();
    for slot in 1..=4 {
        let grown = insert_at(&base, slot).unwrap();
        println!("  slot {slot}: {}", labeled_text(&grown, Variant::L));
    }

    // Summing slot weights over S_n recovers the n-th derivative of a.
    let g = Grammar::dumont();
    let a = LaurentPolynomial::variable(permgram::poly::Var::A);
    for n in 1..=5 {
        let mut sum = LaurentPolynomial::zero();
        for w in all_permutations(n).unwrap() {
            sum = &sum + &label_slots(&w, Variant::L).weight();
        }
        println!(
            "  sum of slot weights over S_{n} equals D^{n}(a): {}",
            sum == g.derive_n(&a, n)
        );
    }

    // Every word is rebuilt by its insertion history.
    let history = extract_history(&p);
    println!("\ninsertion history of {p}:");
    let mut w = Permutation::identity(1);
    for &(slot, label) in &history {
        println!("  insert {} into slot {slot} (label {label})", w.n() + 1);
        w = insert_at(&w, slot).unwrap();
    }
    println!("  rebuilt: {w}");
}
