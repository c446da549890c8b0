//! The slot-to-leaf bijection between succession sets and fixed-point sets.
//!
//! Pairing a word's labeled slots with a tree's labeled leaves lets every
//! insertion step be replayed as a tree-growth step.  Replaying a
//! permutation's full insertion history from the base tree produces a
//! companion tree whose decoded permutation has its statistics transported:
//! left-succession values become fixed points and jump values become
//! excedance values.
//!
//! Run with: cargo run --example succession_bijection

use permgram::bijection::{
    correspondence_table, pair, phi, phi_inverse, phi_trace, render_table, sweep,
};
use permgram::perms::{Permutation, SetStat};
use permgram::trees::LabeledTree;

fn main() {
    // Pair the slots of a word with the leaves of an equal-weight tree.
    let p = Permutation::parse("3 1 2").unwrap();
    let t = LabeledTree::parse("(1 (3 x y) (2 z a))").unwrap();
    let pairing = pair(&p, &t).unwrap();
    println!("pairing slots of `{p}` with leaves of {}:", t.serialize());
    for slot in 1..=pairing.slot_count() {
        println!("  slot {slot} -> leaf at {}", pairing.leaf_for_slot(slot));
    }

    // The forward map, step by step.
    let p = Permutation::parse("1 6 3 2 4 5").unwrap();
    let (image, rows) = phi_trace(&p);
    println!("\nreplaying the insertion history of {p}:");
    for row in &rows {
        println!("  {row}");
    }
    println!("image: {image} = {}", image.to_cycles());
    println!(
        "  left-succession values {:?} -> fixed points {:?}",
        p.set_stat(SetStat::LsucValues),
        image.set_stat(SetStat::Fixed)
    );
    println!(
        "  jump values {:?} -> excedance values {:?}",
        p.set_stat(SetStat::JumpValues),
        image.set_stat(SetStat::ExcValues)
    );

    // The inverse map peels the largest vertex off the companion tree.
    let back = phi_inverse(&image);
    println!("inverse of {image}: {back} (round-trips: {})", back == p);

    // Every size-3 permutation, grouped by its left-succession set.
    println!("\ncorrespondence for n = 3:");
    println!("{}", render_table(&correspondence_table(3).unwrap()));

    // Exhaustive audit over small sizes.
    for n in 1..=6 {
        let census = sweep(n).unwrap();
        println!(
            "n = {n}: {} permutations, {} distinct images, {} succession classes, clean: {}",
            census.permutations,
            census.distinct_images,
            census.classes,
            census.all_passed()
        );
    }

    // A quick spot check of the forward map on its own.
    let q = Permutation::parse("2 1 3").unwrap();
    println!("\nphi({q}) = {}", phi(&q));
}
