//! Expression parser for algebra elements, wavefunctions and coefficients.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := factor ('*' factor)*
//! factor := ['-'] (literal | symbol ['^' int] | '(' expr ')')
//! ```
//!
//! Literals are `123`, `3/2` or `i`. Juxtaposition is not multiplication.
//! Negative powers are only accepted on `E`, `a` and `beta`.

use std::sync::Arc;

use qgalilei_core::{
    AlgebraError, GaussRational, NCPolynomial, Presentation, Scalar, Symbol, Var, VarSet, WaveFunction,
};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("unbound symbol '{name}' at byte {offset} (context: {context})")]
    Unbound { name: String, offset: usize, context: String },
    #[error("negative power on '{name}' at byte {offset}: only E, a and beta may be inverted")]
    NegativePower { name: String, offset: usize },
    #[error("at byte {offset}: {source}")]
    Algebra { offset: usize, source: AlgebraError },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::Unbound { offset, .. }
            | ParseError::NegativePower { offset, .. }
            | ParseError::Algebra { offset, .. } => *offset,
        }
    }
}

fn syntax(offset: usize, message: impl Into<String>) -> ParseError {
    ParseError::Syntax { offset, message: message.into() }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(String),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

fn describe(t: &Tok) -> String {
    match t {
        Tok::Int(s) | Tok::Ident(s) => format!("'{}'", s),
        Tok::Plus => "'+'".into(),
        Tok::Minus => "'-'".into(),
        Tok::Star => "'*'".into(),
        Tok::Slash => "'/'".into(),
        Tok::Caret => "'^'".into(),
        Tok::LParen => "'('".into(),
        Tok::RParen => "')'".into(),
        Tok::End => "end of input".into(),
    }
}

fn lex(text: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let tok = match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
                continue;
            }
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' => {
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                out.push((Tok::Int(text[start..i].to_string()), start));
                continue;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                out.push((Tok::Ident(text[start..i].to_string()), start));
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(syntax(start, format!("unexpected character '{}'", ch)));
            }
        };
        out.push((tok, start));
        i += 1;
    }
    out.push((Tok::End, text.len()));
    Ok(out)
}

/// Parsed expression, not yet bound to a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Ast {
    Literal(GaussRational),
    Symbol { name: String, power: i32, offset: usize },
    Neg(Box<Ast>),
    Add(Box<Ast>, Box<Ast>),
    Sub(Box<Ast>, Box<Ast>),
    Mul(Box<Ast>, Box<Ast>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].0
    }

    fn offset(&self) -> usize {
        self.toks[self.pos].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.pos].clone();
        if self.pos + 1 < self.toks.len() {
            self.pos += 1;
        }
        t
    }

    fn expr(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Tok::Plus => {
                    self.bump();
                    lhs = Ast::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Tok::Minus => {
                    self.bump();
                    lhs = Ast::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Ast, ParseError> {
        let mut lhs = self.factor()?;
        while *self.peek() == Tok::Star {
            self.bump();
            lhs = Ast::Mul(Box::new(lhs), Box::new(self.factor()?));
        }
        Ok(lhs)
    }

    fn factor(&mut self) -> Result<Ast, ParseError> {
        if *self.peek() == Tok::Minus {
            self.bump();
            return Ok(Ast::Neg(Box::new(self.atom()?)));
        }
        self.atom()
    }

    fn atom(&mut self) -> Result<Ast, ParseError> {
        let (tok, offset) = self.bump();
        match tok {
            Tok::Int(num) => {
                let den = if *self.peek() == Tok::Slash {
                    self.bump();
                    match self.bump() {
                        (Tok::Int(d), _) => Some(d),
                        (t, o) => return Err(syntax(o, format!("expected denominator, found {}", describe(&t)))),
                    }
                } else {
                    None
                };
                GaussRational::from_decimal(&num, den.as_deref())
                    .map(Ast::Literal)
                    .ok_or_else(|| syntax(offset, "zero denominator"))
            }
            Tok::Ident(name) if name == "i" => Ok(Ast::Literal(GaussRational::i())),
            Tok::Ident(name) => {
                let power = if *self.peek() == Tok::Caret {
                    self.bump();
                    self.exponent()?
                } else {
                    1
                };
                Ok(Ast::Symbol { name, power, offset })
            }
            Tok::LParen => {
                let inner = self.expr()?;
                match self.bump() {
                    (Tok::RParen, _) => Ok(inner),
                    (t, o) => Err(syntax(o, format!("expected ')', found {}", describe(&t)))),
                }
            }
            t => Err(syntax(offset, format!("expected a literal, symbol or '(', found {}", describe(&t)))),
        }
    }

    fn exponent(&mut self) -> Result<i32, ParseError> {
        let negative = if *self.peek() == Tok::Minus {
            self.bump();
            true
        } else {
            false
        };
        match self.bump() {
            (Tok::Int(d), o) => {
                let v: i32 = d.parse().map_err(|_| syntax(o, "exponent out of range"))?;
                Ok(if negative { -v } else { v })
            }
            (t, o) => Err(syntax(o, format!("expected integer exponent, found {}", describe(&t)))),
        }
    }
}

/// Parses `text` into an unbound [`Ast`].
pub fn parse(text: &str) -> Result<Ast, ParseError> {
    let mut p = Parser { toks: lex(text)?, pos: 0 };
    let ast = p.expr()?;
    match p.peek() {
        Tok::End => Ok(ast),
        t => Err(syntax(p.offset(), format!("unexpected {}; products need an explicit '*'", describe(t)))),
    }
}

/// Something an [`Ast`] can be evaluated into.
pub trait Context {
    type Value: Clone;

    fn describe(&self) -> String;
    fn scalar(&self, c: Scalar) -> Self::Value;
    /// `None` if the name is not bound here.
    fn symbol(&self, name: &str, power: i32) -> Option<Result<Self::Value, AlgebraError>>;
    fn add(&self, x: Self::Value, y: Self::Value) -> Self::Value;
    fn neg(&self, x: Self::Value) -> Self::Value;
    fn mul(&self, x: Self::Value, y: Self::Value) -> Result<Self::Value, AlgebraError>;
}

fn scalar_symbol(name: &str, power: i32) -> Option<Scalar> {
    Symbol::from_name(name).map(|s| Scalar::power(s, power))
}

/// Evaluates an [`Ast`] in a context.
pub fn bind<C: Context>(ctx: &C, ast: &Ast) -> Result<C::Value, ParseError> {
    match ast {
        Ast::Literal(c) => Ok(ctx.scalar(Scalar::constant(c.clone()))),
        Ast::Symbol { name, power, offset } => {
            if *power < 0 && !matches!(name.as_str(), "E" | "a" | "beta") {
                return Err(ParseError::NegativePower { name: name.clone(), offset: *offset });
            }
            match ctx.symbol(name, *power) {
                Some(r) => r.map_err(|source| ParseError::Algebra { offset: *offset, source }),
                None => Err(ParseError::Unbound { name: name.clone(), offset: *offset, context: ctx.describe() }),
            }
        }
        Ast::Neg(x) => Ok(ctx.neg(bind(ctx, x)?)),
        Ast::Add(x, y) => Ok(ctx.add(bind(ctx, x)?, bind(ctx, y)?)),
        Ast::Sub(x, y) => {
            let y = ctx.neg(bind(ctx, y)?);
            Ok(ctx.add(bind(ctx, x)?, y))
        }
        Ast::Mul(x, y) => {
            let (l, r) = (bind(ctx, x)?, bind(ctx, y)?);
            ctx.mul(l, r).map_err(|source| ParseError::Algebra { offset: first_offset(y), source })
        }
    }
}

fn first_offset(ast: &Ast) -> usize {
    match ast {
        Ast::Symbol { offset, .. } => *offset,
        Ast::Neg(x) | Ast::Add(x, _) | Ast::Sub(x, _) | Ast::Mul(x, _) => first_offset(x),
        Ast::Literal(_) => 0,
    }
}

/// Coefficients only: literals, `i`, `a`, `alpha`, `beta`.
pub struct ScalarContext;

impl Context for ScalarContext {
    type Value = Scalar;

    fn describe(&self) -> String {
        "coefficient".into()
    }
    fn scalar(&self, c: Scalar) -> Scalar {
        c
    }
    fn symbol(&self, name: &str, power: i32) -> Option<Result<Scalar, AlgebraError>> {
        scalar_symbol(name, power).map(Ok)
    }
    fn add(&self, x: Scalar, y: Scalar) -> Scalar {
        &x + &y
    }
    fn neg(&self, x: Scalar) -> Scalar {
        -x
    }
    fn mul(&self, x: Scalar, y: Scalar) -> Result<Scalar, AlgebraError> {
        Ok(&x * &y)
    }
}

/// Elements of a presented algebra; products are normal-ordered.
pub struct AlgebraContext<'p>(pub &'p Arc<Presentation>);

impl Context for AlgebraContext<'_> {
    type Value = NCPolynomial;

    fn describe(&self) -> String {
        self.0.name().to_string()
    }
    fn scalar(&self, c: Scalar) -> NCPolynomial {
        NCPolynomial::constant(self.0, c)
    }
    fn symbol(&self, name: &str, power: i32) -> Option<Result<NCPolynomial, AlgebraError>> {
        if self.0.index_of(name).is_some() {
            return Some(NCPolynomial::generator(self.0, name, power));
        }
        scalar_symbol(name, power).map(|s| Ok(NCPolynomial::constant(self.0, s)))
    }
    fn add(&self, x: NCPolynomial, y: NCPolynomial) -> NCPolynomial {
        x.checked_add(&y).expect("same presentation")
    }
    fn neg(&self, x: NCPolynomial) -> NCPolynomial {
        x.scale(&-Scalar::one())
    }
    fn mul(&self, x: NCPolynomial, y: NCPolynomial) -> Result<NCPolynomial, AlgebraError> {
        x.multiply(&y)
    }
}

/// Commutative polynomials in a set of the variables `v, mu, x, t`.
pub struct WaveContext(pub VarSet);

impl Context for WaveContext {
    type Value = WaveFunction;

    fn describe(&self) -> String {
        format!("wavefunction in {}", self.0)
    }
    fn scalar(&self, c: Scalar) -> WaveFunction {
        WaveFunction::constant(self.0, c)
    }
    fn symbol(&self, name: &str, power: i32) -> Option<Result<WaveFunction, AlgebraError>> {
        if let Some(v) = Var::from_name(name).filter(|v| self.0.contains(*v)) {
            let w = WaveFunction::from_powers(self.0, &[(v, power as u32)], Scalar::one()).expect("variable in set");
            return Some(Ok(w));
        }
        scalar_symbol(name, power).map(|s| Ok(WaveFunction::constant(self.0, s)))
    }
    fn add(&self, x: WaveFunction, y: WaveFunction) -> WaveFunction {
        &x + &y
    }
    fn neg(&self, x: WaveFunction) -> WaveFunction {
        -&x
    }
    fn mul(&self, x: WaveFunction, y: WaveFunction) -> Result<WaveFunction, AlgebraError> {
        Ok(&x * &y)
    }
}

pub fn parse_scalar(text: &str) -> Result<Scalar, ParseError> {
    bind(&ScalarContext, &parse(text)?)
}

pub fn parse_element(text: &str, p: &Arc<Presentation>) -> Result<NCPolynomial, ParseError> {
    bind(&AlgebraContext(p), &parse(text)?)
}

pub fn parse_wavefunction(text: &str, vars: VarSet) -> Result<WaveFunction, ParseError> {
    bind(&WaveContext(vars), &parse(text)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qgalilei_core::{preset, Preset};

    #[test]
    fn relation_cancels() {
        let p = preset(Preset::UqKmph);
        assert!(parse_element("P*K - K*P + M", &p).unwrap().is_zero());
        assert_eq!(parse_element("E^-1*P*E", &p).unwrap().to_string(), "P");
    }

    #[test]
    fn wavefunction_terms() {
        let w = parse_wavefunction("x^2*t - a^2*t", VarSet::XT).unwrap();
        assert_eq!(w.len(), 2);
        assert_eq!(w.to_string(), "x^2*t - a^2*t");
    }

    #[test]
    fn negative_powers() {
        let p = preset(Preset::UqKmph);
        assert_eq!(
            parse_element("K^-1", &p),
            Err(ParseError::NegativePower { name: "K".into(), offset: 0 })
        );
        assert!(parse_element("a^-2*beta^-1*E^-2", &p).is_ok());
        assert!(matches!(parse_scalar("alpha^-1"), Err(ParseError::NegativePower { offset: 0, .. })));
    }

    #[test]
    fn offsets() {
        let p = preset(Preset::UqKmph);
        assert_eq!(parse_element("K P", &p).unwrap_err().offset(), 2);
        assert_eq!(parse_element("K + (P", &p).unwrap_err().offset(), 6);
        assert_eq!(parse_element("K + x", &p).unwrap_err().offset(), 4);
        assert_eq!(parse_element("K # P", &p).unwrap_err().offset(), 2);
        assert_eq!(parse_element("2/0", &p).unwrap_err().offset(), 0);
        assert_eq!(parse_element("K^", &p).unwrap_err().offset(), 2);
        assert!(matches!(parse_wavefunction("v*x", VarSet::XT), Err(ParseError::Unbound { offset: 0, .. })));
    }

    #[test]
    fn literals() {
        assert_eq!(parse_scalar("(3/2 - 1/2*i)*beta").unwrap().to_string(), "(3/2 - 1/2*i)*beta");
        assert_eq!(parse_scalar("-i*i").unwrap(), Scalar::one());
        assert_eq!(parse_scalar("2*-3").unwrap(), Scalar::int(-6));
    }
}
