//! Context-free grammars as substitution rules, and the formal derivative
//! they induce.
//!
//! A grammar assigns to some variables a replacement polynomial.  Its formal
//! derivative `D` is the linear operator with `D(v) = rule(v)` (zero for
//! unruled variables) extended by the Leibniz rule, so on a Laurent monomial
//! `D(v^e) = e * v^(e-1) * D(v)` for every integer `e`.

use std::collections::BTreeMap;

use crate::poly::{coeff, LaurentPolynomial, Monomial, Var};
use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grammar {
    rules: BTreeMap<Var, LaurentPolynomial>,
}

impl Grammar {
    pub fn new<I: IntoIterator<Item = (Var, LaurentPolynomial)>>(rules: I) -> Grammar {
        Grammar {
            rules: rules.into_iter().collect(),
        }
    }

    /// Dumont's grammar `a -> az, x -> xy, y -> xy, z -> xy`.  Iterating its
    /// derivative on `a` enumerates permutations by excedances, drops, and
    /// fixed points.
    pub fn dumont() -> Grammar {
        let xy = LaurentPolynomial::parse("x*y").unwrap();
        Grammar::new([
            (Var::A, LaurentPolynomial::parse("a*z").unwrap()),
            (Var::X, xy.clone()),
            (Var::Y, xy.clone()),
            (Var::Z, xy),
        ])
    }

    /// The `b`-marked variant `a -> az, b -> xy, x -> xy, y -> xy, z -> xy`.
    /// Iterating its derivative on `ab` enumerates permutations by jumps,
    /// descents, and interior successions, with `b` marking the words that
    /// start with 1.
    pub fn dumont_b() -> Grammar {
        let xy = LaurentPolynomial::parse("x*y").unwrap();
        Grammar::new([
            (Var::A, LaurentPolynomial::parse("a*z").unwrap()),
            (Var::B, xy.clone()),
            (Var::X, xy.clone()),
            (Var::Y, xy.clone()),
            (Var::Z, xy),
        ])
    }

    /// The two-rule grammar `x -> xy, y -> xy` generating the bivariate
    /// Eulerian polynomials from the seed `x`.
    pub fn eulerian_rules() -> Grammar {
        let xy = LaurentPolynomial::parse("x*y").unwrap();
        Grammar::new([(Var::X, xy.clone()), (Var::Y, xy)])
    }

    /// Looks up a built-in grammar by its CLI name.
    pub fn by_name(name: &str) -> Result<Grammar, Error> {
        match name {
            "dumont" => Ok(Grammar::dumont()),
            "dumont-b" => Ok(Grammar::dumont_b()),
            _ => Err(Error::UnknownGrammar(name.to_string())),
        }
    }

    /// Parses the `var -> polynomial` line format.  Blank lines and lines
    /// starting with `#` are skipped.
    pub fn parse(text: &str) -> Result<Grammar, Error> {
        let mut rules = BTreeMap::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (lhs, rhs) = line.split_once("->").ok_or_else(|| {
                Error::Parse(format!("line {}: expected `var -> polynomial`", lineno + 1))
            })?;
            let var = Var::from_name(lhs.trim()).ok_or_else(|| {
                Error::Parse(format!(
                    "line {}: `{}` is not a variable",
                    lineno + 1,
                    lhs.trim()
                ))
            })?;
            if rules.contains_key(&var) {
                return Err(Error::Parse(format!(
                    "line {}: duplicate rule for `{var}`",
                    lineno + 1
                )));
            }
            rules.insert(var, LaurentPolynomial::parse(rhs)?);
        }
        Ok(Grammar { rules })
    }

    pub fn rule(&self, v: Var) -> Option<&LaurentPolynomial> {
        self.rules.get(&v)
    }

    pub fn rules(&self) -> impl Iterator<Item = (Var, &LaurentPolynomial)> {
        self.rules.iter().map(|(&v, p)| (v, p))
    }

    /// One application of the formal derivative.
    pub fn derive(&self, p: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (m, c) in p.terms() {
            for (v, e) in m.vars() {
                let Some(rule) = self.rules.get(&v) else {
                    continue;
                };
                let lowered = LaurentPolynomial::term(c * coeff(e), m.clone().with(v, -1));
                out = &out + &(&lowered * rule);
            }
        }
        out
    }

    /// The `n`-fold derivative `D^n(p)`.
    pub fn derive_n(&self, p: &LaurentPolynomial, n: usize) -> LaurentPolynomial {
        let mut out = p.clone();
        for _ in 0..n {
            out = self.derive(&out);
        }
        out
    }

    /// Whether `D(p) = 0`, i.e. `p` is a constant of the grammar.
    pub fn is_constant(&self, p: &LaurentPolynomial) -> bool {
        self.derive(p).is_zero()
    }
}

/// The bivariate Eulerian polynomial `A_n(x, y)`: the `n`-fold derivative of
/// `x` under the two-rule grammar, with `A_0 = x`.
pub fn eulerian(n: usize) -> LaurentPolynomial {
    Grammar::eulerian_rules().derive_n(&LaurentPolynomial::variable(Var::X), n)
}

/// Strips the seed monomial `m` off every term of `p`, so `p = m * result`.
/// Handy for reading `D^n(a) = a * F_n` distributions off a derivative.
pub fn strip_monomial(p: &LaurentPolynomial, m: &Monomial) -> LaurentPolynomial {
    let inverse = m.pow(-1);
    LaurentPolynomial::from_terms(p.terms().map(|(mm, c)| (c.clone(), mm.mul(&inverse))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(src: &str) -> LaurentPolynomial {
        LaurentPolynomial::parse(src).expect(src)
    }

    #[test]
    fn derive_applies_a_single_rule() {
        assert_eq!(Grammar::dumont().derive(&p("a")), p("a*z"));
    }

    #[test]
    fn derive_is_leibniz_on_products() {
        assert_eq!(Grammar::dumont_b().derive(&p("a*b")), p("a*b*z + a*x*y"));
    }

    #[test]
    fn derive_annihilates_constants() {
        let g = Grammar::dumont();
        assert!(g.is_constant(&p("z - y")));
        assert!(g.is_constant(&p("x - y")));
        assert!(!g.is_constant(&p("a")));
        assert_eq!(g.derive(&LaurentPolynomial::integer(5)), p("0"));
    }

    #[test]
    fn derive_n_iterates_from_the_seed() {
        let g = Grammar::dumont();
        assert_eq!(g.derive_n(&p("a"), 0), p("a"));
        assert_eq!(g.derive_n(&p("a"), 1), p("a*z"));
        assert_eq!(g.derive_n(&p("a"), 2), p("a*x*y + a*z^2"));
        assert_eq!(
            g.derive_n(&p("a"), 3),
            p("3*a*x*y*z + a*x*y^2 + a*x^2*y + a*z^3")
        );
    }

    #[test]
    fn derive_handles_negative_exponents() {
        // D(a*x^-1) = a*x^-1*(z - y), and z - y is constant, so the iterates
        // stack up powers of the difference.
        let g = Grammar::dumont();
        let seed = p("a*x^-1");
        assert_eq!(g.derive(&seed), &seed * &p("z - y"));
        assert_eq!(g.derive_n(&seed, 3), &seed * &p("z - y").pow(3));
    }

    #[test]
    fn eulerian_polynomials_start_as_expected() {
        assert_eq!(eulerian(0), p("x"));
        assert_eq!(eulerian(1), p("x*y"));
        assert_eq!(eulerian(2), p("x*y^2 + x^2*y"));
    }

    #[test]
    fn by_name_knows_the_builtins() {
        assert_eq!(Grammar::by_name("dumont").unwrap(), Grammar::dumont());
        assert_eq!(Grammar::by_name("dumont-b").unwrap(), Grammar::dumont_b());
        assert_eq!(
            Grammar::by_name("nope"),
            Err(Error::UnknownGrammar("nope".into()))
        );
    }

    #[test]
    fn parse_reads_rule_lines() {
        let g = Grammar::parse("# comment\na -> a*z\n\nx -> x*y\ny -> x*y\nz -> x*y\n").unwrap();
        assert_eq!(g, Grammar::dumont());
        assert!(Grammar::parse("a -> a*z\na -> x").is_err());
        assert!(Grammar::parse("q -> x").is_err());
        assert!(Grammar::parse("a = x").is_err());
    }

    #[test]
    fn strip_monomial_removes_the_seed() {
        let g = Grammar::dumont();
        let d3 = g.derive_n(&p("a"), 3);
        assert_eq!(
            strip_monomial(&d3, &Monomial::var(Var::A)),
            p("3*x*y*z + x*y^2 + x^2*y + z^3")
        );
    }
}
