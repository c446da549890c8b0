//! Complete increasing binary trees with labeled leaves.
//!
//! The cycle form of a permutation encodes as a tree: cycle minima lie on the
//! right spine, singleton cycles hang a z-leaf, longer cycles hang the
//! min-rooted tree of their cycle word (missing children become x- and
//! y-leaves), and a single a-leaf closes the spine.  Growing a leaf into the
//! next vertex is the tree-side mirror of inserting into a labeled slot.
//!
//! Run with: cargo run --example increasing_trees

use permgram::perms::{CycleForm, SetStat};
use permgram::trees::{all_trees, encode, LabeledTree, LeafPos, Side};

fn main() {
    let cycles = CycleForm::parse("(1 8 4 9 6)(2)(3 5)(7)").unwrap();
    let tree = encode(&cycles).unwrap();
    println!("cycles {cycles} encode as:");
    println!("  {}", tree.serialize());
    println!("  weight: {}", tree.weight());
    println!("  right spine (cycle minima): {:?}", tree.spine());
    println!("  vertices with an x-leaf: {:?}", tree.x_leaf_vertices());
    println!("  vertices with a z-leaf: {:?}", tree.z_leaf_vertices());

    // x-leaves sit at excedance values, z-leaves at fixed points.
    let p = cycles.to_permutation();
    println!(
        "  excedance values of {p}: {:?}",
        p.set_stat(SetStat::ExcValues)
    );
    println!("  fixed points: {:?}", p.set_stat(SetStat::Fixed));

    // Decoding inverts encoding.
    println!("  decodes back to: {}", tree.decode().unwrap());

    // Growth from the one-vertex tree.
    println!("\ngrowing the base tree:");
    let base = LabeledTree::base();
    println!("  base: {}", base.serialize());
    let right = base.grow(LeafPos::new(1, Side::Right)).unwrap();
    println!(
        "  grow the a-leaf:  {} (new singleton cycle)",
        right.serialize()
    );
    let left = base.grow(LeafPos::new(1, Side::Left)).unwrap();
    println!(
        "  grow the z-leaf:  {} (vertex joins the cycle)",
        left.serialize()
    );

    // Every tree arises from exactly one growth sequence.
    for n in 1..=5 {
        let count = all_trees(n).unwrap().len();
        println!("trees on [{n}]: {count}");
    }

    // Trees round-trip through their text form.
    let text = "(1 (4 (8 x y) (6 (9 x y) y)) (2 z (3 (5 x y) (7 z a))))";
    let parsed = LabeledTree::parse(text).unwrap();
    println!(
        "\nparsed {} vertices from text; round-trips: {}",
        parsed.n(),
        parsed.serialize() == text
    );
}
