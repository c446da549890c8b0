//! Formal derivatives of words under substitution grammars.
//!
//! A grammar maps variables to polynomials; its derivative D acts on any
//! Laurent polynomial by the product rule.  Repeated derivatives of the
//! letter `a` under the built-in four-rule grammar enumerate permutations:
//! the coefficient of x^i y^j z^k in D^n(a)/a counts permutations of size n
//! with i excedances, j drops, and k fixed points.
//!
//! Run with: cargo run --example grammar_calculus

use permgram::grammar::{strip_monomial, Grammar};
use permgram::poly::{LaurentPolynomial, Monomial, Var};

fn main() {
    let g = Grammar::dumont();
    let a = LaurentPolynomial::variable(Var::A);

    println!("rules:");
    for (v, rule) in g.rules() {
        println!("  {v} -> {rule}");
    }

    println!("\nderivatives of a:");
    for n in 0..=4 {
        let derived = g.derive_n(&a, n);
        // Every term is divisible by a; strip it to read the distribution.
        let table = strip_monomial(&derived, &Monomial::var(Var::A));
        println!("  n={n}: {table}");
    }

    // The derivative is a derivation: D(p*q) = D(p)*q + p*D(q).
    let p = LaurentPolynomial::parse("x*y + z").unwrap();
    let q = LaurentPolynomial::parse("a*z^2").unwrap();
    let product_rule = &g.derive(&(&p * &q));
    let expanded = &(&g.derive(&p) * &q) + &(&p * &g.derive(&q));
    println!(
        "\nLeibniz rule on (x*y + z)*(a*z^2): {}",
        product_rule == &expanded
    );

    // z - y and x - y derive to zero, so they act like constants.
    for c in ["z - y", "x - y"] {
        let poly = LaurentPolynomial::parse(c).unwrap();
        println!(
            "D({c}) = {} (constant: {})",
            g.derive(&poly),
            g.is_constant(&poly)
        );
    }

    // Negative exponents are fine: D treats x^-1 by the power rule.
    let inverse = LaurentPolynomial::parse("a*x^-1").unwrap();
    println!("D(a*x^-1) = {}", g.derive(&inverse));

    // Grammars can also be supplied as text.
    let custom = Grammar::parse("x -> x*y\ny -> x*y\n").unwrap();
    let x = LaurentPolynomial::variable(Var::X);
    println!("\ntwo-rule grammar derivatives of x (Eulerian polynomials):");
    for n in 0..=4 {
        println!("  n={n}: {}", custom.derive_n(&x, n));
    }
}
