//! Run the full verification catalog and print the report.
//!
//! Every check recomputes a claimed identity from scratch — grammar-derived
//! polynomials against brute-force counts, truncated exponential generating
//! functions against cross-multiplied factorizations, and the succession
//! bijection against an exhaustive audit — and reports pass/fail per check.
//!
//! Run with: cargo run --example verify_all

use permgram::verify::{run_suite, Suite};

fn main() {
    let max_n = 6;
    let report = run_suite(Suite::All, max_n, 1);
    println!("{}", report.render_text());
    std::process::exit(if report.all_passed() { 0 } else { 1 });
}
