//! Truncated exponential generating functions with Laurent-polynomial
//! coefficients.
//!
//! A series holds the coefficients of `t^0/0!, ..., t^N/N!`; multiplication is
//! the binomial convolution.  There is deliberately no division: closed forms
//! with denominators are checked in cross-multiplied polynomial form via
//! [`check_identity_crossmul`].

use num::bigint::BigInt;
use num::integer::binomial;

use crate::grammar::Grammar;
use crate::poly::{Coeff, LaurentPolynomial};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedEgf {
    coeffs: Vec<LaurentPolynomial>,
}

impl TruncatedEgf {
    /// Wraps explicit coefficients `p_0, ..., p_N` of `t^n/n!`.
    pub fn from_coeffs(coeffs: Vec<LaurentPolynomial>) -> TruncatedEgf {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the order-0 coefficient"
        );
        TruncatedEgf { coeffs }
    }

    /// The constant series `p + 0*t + ...`.
    pub fn constant(p: LaurentPolynomial, order: usize) -> TruncatedEgf {
        let mut coeffs = vec![LaurentPolynomial::zero(); order + 1];
        coeffs[0] = p;
        TruncatedEgf { coeffs }
    }

    /// `exp(c*t)` truncated: coefficient `n` is `c^n`.
    pub fn exp(c: &LaurentPolynomial, order: usize) -> TruncatedEgf {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = LaurentPolynomial::one();
        for n in 0..=order {
            if n > 0 {
                power = &power * c;
            }
            coeffs.push(power.clone());
        }
        TruncatedEgf { coeffs }
    }

    /// The generating series of a word under a grammar: coefficient `n` is
    /// `D^n(seed)`.
    pub fn from_grammar(g: &Grammar, seed: &LaurentPolynomial, order: usize) -> TruncatedEgf {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut current = seed.clone();
        for n in 0..=order {
            if n > 0 {
                current = g.derive(&current);
            }
            coeffs.push(current.clone());
        }
        TruncatedEgf { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> &LaurentPolynomial {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPolynomial] {
        &self.coeffs
    }

    fn check_order(&self, other: &TruncatedEgf) -> Result<(), Error> {
        if self.order() != other.order() {
            Err(Error::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Binomial convolution: coefficient `n` of the product is
    /// `sum_k C(n, k) p_k q_(n-k)`.
    pub fn mul(&self, other: &TruncatedEgf) -> Result<TruncatedEgf, Error> {
        self.check_order(other)?;
        let order = self.order();
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut sum = LaurentPolynomial::zero();
            for k in 0..=n {
                let c = Coeff::from_integer(binomial(BigInt::from(n), BigInt::from(k)));
                sum = &sum + &(&self.coeffs[k] * &other.coeffs[n - k]).scale(&c);
            }
            coeffs.push(sum);
        }
        Ok(TruncatedEgf { coeffs })
    }

    pub fn add(&self, other: &TruncatedEgf) -> Result<TruncatedEgf, Error> {
        self.check_order(other)?;
        Ok(TruncatedEgf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(p, q)| p + q)
                .collect(),
        })
    }

    pub fn sub(&self, other: &TruncatedEgf) -> Result<TruncatedEgf, Error> {
        self.check_order(other)?;
        Ok(TruncatedEgf {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(p, q)| p - q)
                .collect(),
        })
    }

    /// Multiplies every coefficient by a fixed polynomial.
    pub fn scale(&self, p: &LaurentPolynomial) -> TruncatedEgf {
        TruncatedEgf {
            coeffs: self.coeffs.iter().map(|q| q * p).collect(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|p| p.to_json()).collect())
    }
}

/// Multiplies out each side and compares coefficients.  Both sides must be
/// nonempty products of series of one shared order.
pub fn check_identity_crossmul(lhs: &[TruncatedEgf], rhs: &[TruncatedEgf]) -> Result<bool, Error> {
    Ok(product(lhs)? == product(rhs)?)
}

/// Folds a nonempty list of factors into their product.
pub fn product(factors: &[TruncatedEgf]) -> Result<TruncatedEgf, Error> {
    let (first, rest) = factors
        .split_first()
        .expect("a product needs at least one factor");
    let mut out = first.clone();
    for factor in rest {
        out = out.mul(factor)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Var;

    fn p(src: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(src).expect(src)
    }

    #[test]
    fn exp_stacks_powers() {
        let e = TruncatedEgf::exp(&p("z - y"), 2);
        assert_eq!(e.coeffs(), &[p("1"), p("z - y"), p("z - y").pow(2)]);
        let e1 = TruncatedEgf::exp(&p("x*z + 1"), 2);
        assert_eq!(e1.coeff(2), &p("x^2*z^2 + 2*x*z + 1"));
    }

    #[test]
    fn exp_of_zero_is_the_multiplicative_identity() {
        let one = TruncatedEgf::exp(&LaurentPolynomial::zero(), 5);
        let g =
            TruncatedEgf::from_grammar(&Grammar::dumont(), &LaurentPolynomial::variable(Var::A), 5);
        assert_eq!(g.mul(&one).unwrap(), g);
    }

    #[test]
    fn product_of_exponentials_adds_arguments() {
        let ex = TruncatedEgf::exp(&p("x"), 6);
        let ey = TruncatedEgf::exp(&p("y"), 6);
        assert_eq!(ex.mul(&ey).unwrap(), TruncatedEgf::exp(&p("x + y"), 6));
    }

    #[test]
    fn grammar_series_starts_with_the_seed() {
        let g = Grammar::dumont();
        let series = TruncatedEgf::from_grammar(&g, &p("a"), 2);
        assert_eq!(series.coeffs(), &[p("a"), p("a*z"), p("a*x*y + a*z^2")]);
        let constant = TruncatedEgf::from_grammar(&g, &p("1"), 4);
        assert_eq!(constant, TruncatedEgf::constant(p("1"), 4));
    }

    #[test]
    fn grammar_series_is_multiplicative() {
        // The Leibniz rule in EGF form: gen(uv) = gen(u) * gen(v).
        let g = Grammar::dumont();
        let gx = TruncatedEgf::from_grammar(&g, &p("x"), 6);
        let gax_inv = TruncatedEgf::from_grammar(&g, &p("a*x^-1"), 6);
        let ga = TruncatedEgf::from_grammar(&g, &p("a"), 6);
        assert_eq!(gx.mul(&gax_inv).unwrap(), ga);
    }

    #[test]
    fn order_mismatch_is_reported() {
        let e1 = TruncatedEgf::exp(&p("x"), 3);
        let e2 = TruncatedEgf::exp(&p("x"), 4);
        assert_eq!(e1.mul(&e2), Err(Error::OrderMismatch { left: 3, right: 4 }));
        assert!(e1.add(&e2).is_err());
    }

    #[test]
    fn crossmul_check_compares_products() {
        let ex = TruncatedEgf::exp(&p("x"), 5);
        let ey = TruncatedEgf::exp(&p("y"), 5);
        let exy = TruncatedEgf::exp(&p("x + y"), 5);
        assert!(check_identity_crossmul(&[ex.clone(), ey.clone()], &[exy]).unwrap());
        assert!(!check_identity_crossmul(std::slice::from_ref(&ex), &[ey]).unwrap());
    }
}
