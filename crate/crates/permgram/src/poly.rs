//! Sparse Laurent polynomials over the fixed variable universe `a, b, x, y, z`
//! with exact rational coefficients.
//!
//! Exponents may be negative.  Every polynomial is kept canonical: zero
//! coefficients are never stored, and terms iterate in a fixed total order
//! (variable by variable in name order, comparing exponents), so text and JSON
//! renderings are byte-stable.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

use crate::Error;

/// Exact coefficient type shared by the whole crate.
pub type Coeff = BigRational;

/// Turns a machine integer into a [`Coeff`].
pub fn coeff(n: i64) -> Coeff {
    Coeff::from_integer(BigInt::from(n))
}

/// The five admissible variables, in name order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    A,
    B,
    X,
    Y,
    Z,
}

impl Var {
    pub const ALL: [Var; 5] = [Var::A, Var::B, Var::X, Var::Y, Var::Z];

    pub fn name(self) -> &'static str {
        match self {
            Var::A => "a",
            Var::B => "b",
            Var::X => "x",
            Var::Y => "y",
            Var::Z => "z",
        }
    }

    pub fn from_name(name: &str) -> Option<Var> {
        match name {
            "a" => Some(Var::A),
            "b" => Some(Var::B),
            "x" => Some(Var::X),
            "y" => Some(Var::Y),
            "z" => Some(Var::Z),
            _ => None,
        }
    }

    fn index(self) -> usize {
        match self {
            Var::A => 0,
            Var::B => 1,
            Var::X => 2,
            Var::Y => 3,
            Var::Z => 4,
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A power product `a^i b^j x^k y^l z^m` with integer (possibly negative)
/// exponents.  The unit monomial has all exponents zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exponents: [i64; 5],
}

impl Monomial {
    pub fn unit() -> Monomial {
        Monomial::default()
    }

    pub fn var(v: Var) -> Monomial {
        Monomial::unit().with(v, 1)
    }

    pub fn from_pairs<I: IntoIterator<Item = (Var, i64)>>(pairs: I) -> Monomial {
        let mut m = Monomial::unit();
        for (v, e) in pairs {
            m.exponents[v.index()] += e;
        }
        m
    }

    pub fn with(mut self, v: Var, e: i64) -> Monomial {
        self.exponents[v.index()] += e;
        self
    }

    pub fn exponent(&self, v: Var) -> i64 {
        self.exponents[v.index()]
    }

    pub fn is_unit(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> i64 {
        self.exponents.iter().sum()
    }

    /// Variables with nonzero exponent, in name order.
    pub fn vars(&self) -> impl Iterator<Item = (Var, i64)> + '_ {
        Var::ALL.iter().filter_map(|&v| match self.exponent(v) {
            0 => None,
            e => Some((v, e)),
        })
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = self.clone();
        for i in 0..5 {
            out.exponents[i] += other.exponents[i];
        }
        out
    }

    /// `self^k` for any integer `k`; monomials are always invertible.
    pub fn pow(&self, k: i64) -> Monomial {
        let mut out = self.clone();
        for e in &mut out.exponents {
            *e *= k;
        }
        out
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.exponents.cmp(&other.exponents)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            return f.write_str("1");
        }
        let mut first = true;
        for (v, e) in self.vars() {
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{v}")?;
            } else {
                write!(f, "{v}^{e}")?;
            }
        }
        Ok(())
    }
}

/// A Laurent polynomial: a finite `Coeff`-combination of [`Monomial`]s.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LaurentPolynomial {
    terms: BTreeMap<Monomial, Coeff>,
}

impl LaurentPolynomial {
    pub fn zero() -> LaurentPolynomial {
        LaurentPolynomial::default()
    }

    pub fn one() -> LaurentPolynomial {
        LaurentPolynomial::constant(coeff(1))
    }

    pub fn constant(c: Coeff) -> LaurentPolynomial {
        LaurentPolynomial::term(c, Monomial::unit())
    }

    pub fn integer(n: i64) -> LaurentPolynomial {
        LaurentPolynomial::constant(coeff(n))
    }

    pub fn variable(v: Var) -> LaurentPolynomial {
        LaurentPolynomial::term(coeff(1), Monomial::var(v))
    }

    pub fn monomial(m: Monomial) -> LaurentPolynomial {
        LaurentPolynomial::term(coeff(1), m)
    }

    pub fn term(c: Coeff, m: Monomial) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        p.accumulate(m, c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Coeff, Monomial)>>(terms: I) -> LaurentPolynomial {
        let mut p = LaurentPolynomial::zero();
        for (c, m) in terms {
            p.accumulate(m, c);
        }
        p
    }

    fn accumulate(&mut self, m: Monomial, c: Coeff) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::unit())
                .is_some_and(|c| c.is_one())
    }

    /// The single `(coefficient, monomial)` pair if this polynomial has
    /// exactly one term.
    pub fn as_single_term(&self) -> Option<(&Coeff, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Terms in the canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    /// The coefficient of `m`, zero when absent.
    pub fn coefficient_of(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn scale(&self, c: &Coeff) -> LaurentPolynomial {
        if c.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::one();
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Simultaneously replaces each bound variable by its binding.  Unbound
    /// variables are left alone.  A variable occurring with a negative
    /// exponent must be bound to a single-term monomial (which is invertible);
    /// anything else is [`Error::NonInvertibleSubstitution`].
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Var, LaurentPolynomial>,
    ) -> Result<LaurentPolynomial, Error> {
        for (v, binding) in bindings {
            let needs_inverse = self.terms.keys().any(|m| m.exponent(*v) < 0);
            if needs_inverse && binding.as_single_term().is_none() {
                return Err(Error::NonInvertibleSubstitution { var: *v });
            }
        }
        let mut out = LaurentPolynomial::zero();
        for (m, c) in &self.terms {
            let mut image = LaurentPolynomial::term(c.clone(), Monomial::unit());
            for (v, e) in m.vars() {
                let factor = match bindings.get(&v) {
                    None => LaurentPolynomial::monomial(Monomial::var(v).pow(e)),
                    Some(binding) => {
                        if e >= 0 {
                            binding.pow(e as u32)
                        } else {
                            let (bc, bm) = binding
                                .as_single_term()
                                .expect("checked above: negative powers need a monomial binding");
                            LaurentPolynomial::term(bc.pow(e as i32), bm.pow(e))
                        }
                    }
                };
                image = &image * &factor;
            }
            out = &out + &image;
        }
        Ok(out)
    }

    /// Renders the canonical JSON form: an array of terms, each carrying the
    /// coefficient as a `num/den` string pair and the nonzero exponents.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let exponents: serde_json::Map<String, serde_json::Value> = m
                    .vars()
                    .map(|(v, e)| (v.name().to_string(), serde_json::json!(e)))
                    .collect();
                serde_json::json!({
                    "coeff_num": c.numer().to_string(),
                    "coeff_den": c.denom().to_string(),
                    "exponents": exponents,
                })
            })
            .collect();
        serde_json::Value::Array(terms)
    }

    /// Parses the textual form produced by `Display`: sums of `*`-separated
    /// factors, each a rational constant, a variable with an optional integer
    /// exponent, or a parenthesized subexpression.
    pub fn parse(src: &str) -> Result<LaurentPolynomial, Error> {
        parse::parse(src)
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else if negative {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let c = c.abs();
            if m.is_unit() {
                write!(f, "{}", rational_text(&c))?;
            } else if c.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", rational_text(&c))?;
            }
        }
        Ok(())
    }
}

fn rational_text(c: &Coeff) -> String {
    if c.denom().is_one() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(m.clone(), c.clone());
        }
        out
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.accumulate(m.clone(), -c.clone());
        }
        out
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.accumulate(m1.mul(m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&LaurentPolynomial> for LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
                (&self).$method(rhs)
            }
        }
        impl $trait<LaurentPolynomial> for &LaurentPolynomial {
            type Output = LaurentPolynomial;
            fn $method(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;
    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

mod parse {
    use super::*;

    #[derive(Debug, Clone, PartialEq, Eq)]
    enum Token {
        Number(BigInt, BigInt),
        Variable(Var),
        Plus,
        Minus,
        Star,
        Caret,
        Open,
        Close,
    }

    fn lex(src: &str) -> Result<Vec<Token>, Error> {
        let mut tokens = Vec::new();
        let mut chars = src.chars().peekable();
        while let Some(&ch) = chars.peek() {
            match ch {
                c if c.is_whitespace() => {
                    chars.next();
                }
                '+' => {
                    chars.next();
                    tokens.push(Token::Plus);
                }
                '-' => {
                    chars.next();
                    tokens.push(Token::Minus);
                }
                '*' => {
                    chars.next();
                    tokens.push(Token::Star);
                }
                '^' => {
                    chars.next();
                    tokens.push(Token::Caret);
                }
                '(' => {
                    chars.next();
                    tokens.push(Token::Open);
                }
                ')' => {
                    chars.next();
                    tokens.push(Token::Close);
                }
                c if c.is_ascii_digit() => {
                    let numer = lex_digits(&mut chars);
                    let denom = if chars.peek() == Some(&'/') {
                        chars.next();
                        if !chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                            return Err(Error::Parse("expected digits after `/`".into()));
                        }
                        let d = lex_digits(&mut chars);
                        if d.is_zero() {
                            return Err(Error::Parse("zero denominator".into()));
                        }
                        d
                    } else {
                        BigInt::one()
                    };
                    tokens.push(Token::Number(numer, denom));
                }
                c if c.is_ascii_alphabetic() => {
                    chars.next();
                    match Var::from_name(&c.to_string()) {
                        Some(v) => tokens.push(Token::Variable(v)),
                        None => {
                            return Err(Error::Parse(format!(
                                "unknown variable `{c}` (expected a, b, x, y, or z)"
                            )))
                        }
                    }
                }
                c => return Err(Error::Parse(format!("unexpected character `{c}`"))),
            }
        }
        Ok(tokens)
    }

    fn lex_digits(chars: &mut std::iter::Peekable<std::str::Chars<'_>>) -> BigInt {
        let mut digits = String::new();
        while let Some(&c) = chars.peek() {
            if c.is_ascii_digit() {
                digits.push(c);
                chars.next();
            } else {
                break;
            }
        }
        digits.parse().expect("digit string")
    }

    struct Parser {
        tokens: Vec<Token>,
        pos: usize,
    }

    pub fn parse(src: &str) -> Result<LaurentPolynomial, Error> {
        let mut parser = Parser {
            tokens: lex(src)?,
            pos: 0,
        };
        let p = parser.expr()?;
        match parser.peek() {
            None => Ok(p),
            Some(t) => Err(Error::Parse(format!("unexpected trailing token {t:?}"))),
        }
    }

    impl Parser {
        fn peek(&self) -> Option<&Token> {
            self.tokens.get(self.pos)
        }

        fn bump(&mut self) -> Option<Token> {
            let t = self.tokens.get(self.pos).cloned();
            if t.is_some() {
                self.pos += 1;
            }
            t
        }

        fn expr(&mut self) -> Result<LaurentPolynomial, Error> {
            let mut negate = false;
            match self.peek() {
                Some(Token::Plus) => {
                    self.bump();
                }
                Some(Token::Minus) => {
                    self.bump();
                    negate = true;
                }
                _ => {}
            }
            let mut sum = self.term()?;
            if negate {
                sum = -sum;
            }
            loop {
                match self.peek() {
                    Some(Token::Plus) => {
                        self.bump();
                        sum = &sum + &self.term()?;
                    }
                    Some(Token::Minus) => {
                        self.bump();
                        sum = &sum - &self.term()?;
                    }
                    _ => return Ok(sum),
                }
            }
        }

        fn term(&mut self) -> Result<LaurentPolynomial, Error> {
            let mut product = self.factor()?;
            while self.peek() == Some(&Token::Star) {
                self.bump();
                product = &product * &self.factor()?;
            }
            Ok(product)
        }

        fn factor(&mut self) -> Result<LaurentPolynomial, Error> {
            let base = match self.bump() {
                Some(Token::Number(n, d)) => LaurentPolynomial::constant(Coeff::new(n, d)),
                Some(Token::Variable(v)) => LaurentPolynomial::variable(v),
                Some(Token::Open) => {
                    let inner = self.expr()?;
                    match self.bump() {
                        Some(Token::Close) => inner,
                        other => {
                            return Err(Error::Parse(format!("expected `)`, found {other:?}")))
                        }
                    }
                }
                other => return Err(Error::Parse(format!("expected a factor, found {other:?}"))),
            };
            if self.peek() != Some(&Token::Caret) {
                return Ok(base);
            }
            self.bump();
            let exponent = self.exponent()?;
            if exponent >= 0 {
                return Ok(base.pow(exponent as u32));
            }
            match base.as_single_term() {
                Some((c, m)) => Ok(LaurentPolynomial::term(
                    c.pow(exponent as i32),
                    m.pow(exponent),
                )),
                None => Err(Error::Parse(format!(
                    "negative power of a non-monomial: ({base})^{exponent}"
                ))),
            }
        }

        fn exponent(&mut self) -> Result<i64, Error> {
            let negate = if self.peek() == Some(&Token::Minus) {
                self.bump();
                true
            } else {
                false
            };
            match self.bump() {
                Some(Token::Number(n, d)) if d.is_one() => {
                    let n: i64 = n
                        .try_into()
                        .map_err(|_| Error::Parse("exponent out of range".into()))?;
                    Ok(if negate { -n } else { n })
                }
                other => Err(Error::Parse(format!(
                    "expected an integer exponent, found {other:?}"
                ))),
            }
        }
    }
}
