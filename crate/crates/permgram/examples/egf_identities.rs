//! Truncated exponential generating functions and cross-multiplied identities.
//!
//! A series is a vector of polynomial coefficients of t^n/n!; products use
//! binomial convolution.  Division is never needed: every identity with a
//! denominator is checked by multiplying it across.
//!
//! Run with: cargo run --example egf_identities

use permgram::grammar::Grammar;
use permgram::poly::LaurentPolynomial;
use permgram::series::{check_identity_crossmul, TruncatedEgf};
use permgram::verify::{egf_identity, EGF_IDENTITY_IDS};

fn main() {
    let order = 6;

    // exp(c*t) truncates to coefficients c^n.
    let z = LaurentPolynomial::parse("z").unwrap();
    let exp_z = TruncatedEgf::exp(&z, 4);
    println!("exp(z*t) to order 4:");
    for (n, c) in exp_z.coeffs().iter().enumerate() {
        println!("  t^{n}/{n}!: {c}");
    }

    // exp turns sums into products: exp(x*t) * exp(y*t) = exp((x + y)*t).
    let x = LaurentPolynomial::parse("x").unwrap();
    let y = LaurentPolynomial::parse("y").unwrap();
    let ok = check_identity_crossmul(
        &[TruncatedEgf::exp(&x, order), TruncatedEgf::exp(&y, order)],
        &[TruncatedEgf::exp(&(&x + &y), order)],
    )
    .unwrap();
    println!("\nexp(x*t)*exp(y*t) = exp((x+y)*t) to order {order}: {ok}");

    // Derivative generating series multiply over independent seeds:
    // gen(x) * gen(a*x^-1) = gen(a).
    let g = Grammar::dumont();
    let gen =
        |src: &str| TruncatedEgf::from_grammar(&g, &LaurentPolynomial::parse(src).unwrap(), order);
    let ok = check_identity_crossmul(&[gen("x"), gen("a*x^-1")], &[gen("a")]).unwrap();
    println!("gen(x)*gen(a*x^-1) = gen(a) to order {order}: {ok}");

    // The named identities, each cross-multiplied coefficient by coefficient.
    println!("\nbuilt-in identities at order {order}:");
    for id in EGF_IDENTITY_IDS {
        let report = egf_identity(id, order).unwrap();
        println!("  {id}: {} ({})", report.all_match(), report.statement);
    }

    // One of them in full.
    let report = egf_identity("fxz", 5).unwrap();
    println!("\n{}", report.render_text());
}
