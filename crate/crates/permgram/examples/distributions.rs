//! Joint distribution polynomials of permutation statistics.
//!
//! Statistics are read on the padded word 0, s(1), ..., s(n): excedances,
//! drops, fixed points, ascents, descents, successions (interior), left
//! successions (slot 1 counts), and jumps (rises by at least two).
//!
//! Run with: cargo run --example distributions

use permgram::perms::{derangement_counts, distribution, Permutation, Stat};
use permgram::poly::Var;

fn main() {
    // The excedance-type and jump-type triples have the same distribution.
    println!("excedance-drop-fixed-point vs jump-descent-left-succession:");
    for n in 0..=5 {
        let exc = distribution(
            n,
            &[
                (Stat::Exc, Var::X),
                (Stat::Drop, Var::Y),
                (Stat::Fix, Var::Z),
            ],
        )
        .unwrap();
        let jump = distribution(
            n,
            &[
                (Stat::Jump, Var::X),
                (Stat::Des, Var::Y),
                (Stat::Lsuc, Var::Z),
            ],
        )
        .unwrap();
        println!("  n={n}: {exc}   (equal: {})", exc == jump);
    }

    // Interior successions give a different, closely related family.
    println!("\njump-descent-succession polynomials:");
    for n in 1..=4 {
        let r = distribution(
            n,
            &[
                (Stat::Jump, Var::X),
                (Stat::Des, Var::Y),
                (Stat::Suc, Var::Z),
            ],
        )
        .unwrap();
        println!("  n={n}: {r}");
    }

    // Two statistics can share one variable; exponents add.
    let shared = distribution(3, &[(Stat::Asc, Var::X), (Stat::Des, Var::X)]).unwrap();
    println!("\nascents and descents sharing x over S_3: {shared}");

    // Statistics of a single permutation.
    let p = Permutation::parse("2 6 3 4 1 5 8 9 7").unwrap();
    println!("\nword {p}:");
    for stat in [Stat::Jump, Stat::Des, Stat::Lsuc, Stat::Suc, Stat::Asc] {
        println!("  {} = {}", stat.name(), p.stat(stat));
    }

    // Permutations avoiding fixed points vs avoiding successions.
    println!("\nfixed-point-free vs succession-free counts:");
    for n in 1..=7 {
        let (fix_free, suc_free) = derangement_counts(n).unwrap();
        println!("  n={n}: {fix_free} vs {suc_free}");
    }
}
