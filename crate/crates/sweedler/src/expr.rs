//! Expression language shared by the CLI and the text renderers.
//!
//! Grammar (whitespace-insensitive):
//!
//! ```text
//! expr     := ['-'] pair (('+'|'-') pair)*
//! pair     := term ('#' term)?          -- only at top level, never nested
//! term     := factor ('*'? factor)*     -- juxtaposition is product
//! factor   := atom ('^' nat)?
//! atom     := rational | 'i' | 'x' | 'y' | 't' | 'g'
//!           | 'd' '(' ['-'] int ')' | '(' expr ')'
//! rational := int ('/' int)?
//! ```
//!
//! Products are noncommutative and order-preserving, so quantum-plane words
//! read naturally: `y*x` and `x*y` are different expressions. A smash pair
//! `a # h` may appear only at the top level (possibly summed); inside
//! parentheses, products, or powers it is a parse error. Canonical
//! renderings of every element type in this crate re-parse to the same
//! element.

use std::fmt;

use num::{BigInt, Zero};

use crate::error::{Error, Result};
use crate::hopf::{Delta, H4};
use crate::lincomb::{LinComb, Label};
use crate::module_algebra::{Dual, Monomial};
use crate::qplane::{Gen, QPlaneElement, Word};
use crate::scalar::{Rational, Scalar};

const MAX_EXPONENT: u32 = 1_000_000;

/// Source range of a node, in byte offsets.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Span {
    pub start: usize,
    pub end: usize,
}

/// One of the four single-letter generators.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenName {
    X,
    Y,
    T,
    G,
}

impl fmt::Display for GenName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            GenName::X => 'x',
            GenName::Y => 'y',
            GenName::T => 't',
            GenName::G => 'g',
        };
        write!(f, "{c}")
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Expr {
    pub kind: ExprKind,
    pub span: Span,
}

#[derive(Clone, PartialEq, Debug)]
pub enum ExprKind {
    Rational(Rational),
    Imag,
    Gen(GenName),
    Delta(i64),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    /// `a # h`, only at the top level.
    Smash(Box<Expr>, Box<Expr>),
}

#[derive(Clone, PartialEq, Debug)]
enum Tok {
    Int(BigInt),
    Name(char),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    Hash,
    LParen,
    RParen,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Int(n) => write!(f, "integer `{n}`"),
            Tok::Name(c) => write!(f, "`{c}`"),
            Tok::Plus => write!(f, "`+`"),
            Tok::Minus => write!(f, "`-`"),
            Tok::Star => write!(f, "`*`"),
            Tok::Slash => write!(f, "`/`"),
            Tok::Caret => write!(f, "`^`"),
            Tok::Hash => write!(f, "`#`"),
            Tok::LParen => write!(f, "`(`"),
            Tok::RParen => write!(f, "`)`"),
            Tok::Eof => write!(f, "end of input"),
        }
    }
}

struct Lexer<'a> {
    src: &'a str,
    tokens: Vec<(Tok, usize)>,
}

fn lex(src: &str) -> Result<Vec<(Tok, usize)>> {
    let bytes = src.as_bytes();
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let b = bytes[i];
        match b {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'0'..=b'9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let n: BigInt = src[start..i].parse().expect("digits");
                tokens.push((Tok::Int(n), start));
            }
            b'+' => {
                tokens.push((Tok::Plus, i));
                i += 1;
            }
            b'-' => {
                tokens.push((Tok::Minus, i));
                i += 1;
            }
            b'*' => {
                tokens.push((Tok::Star, i));
                i += 1;
            }
            b'/' => {
                tokens.push((Tok::Slash, i));
                i += 1;
            }
            b'^' => {
                tokens.push((Tok::Caret, i));
                i += 1;
            }
            b'#' => {
                tokens.push((Tok::Hash, i));
                i += 1;
            }
            b'(' => {
                tokens.push((Tok::LParen, i));
                i += 1;
            }
            b')' => {
                tokens.push((Tok::RParen, i));
                i += 1;
            }
            b'x' | b'y' | b't' | b'g' | b'i' | b'd' => {
                tokens.push((Tok::Name(b as char), i));
                i += 1;
            }
            _ => {
                return Err(Error::Parse {
                    pos: i,
                    expected: "a token (number, generator, operator, or parenthesis)".into(),
                    found: format!("`{}`", &src[i..i + 1]),
                });
            }
        }
    }
    tokens.push((Tok::Eof, src.len()));
    Ok(tokens)
}

struct Parser<'a> {
    lexer: Lexer<'a>,
    index: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &Tok {
        &self.lexer.tokens[self.index].0
    }

    fn pos(&self) -> usize {
        self.lexer.tokens[self.index].1
    }

    fn bump(&mut self) -> Tok {
        let t = self.lexer.tokens[self.index].0.clone();
        if self.index + 1 < self.lexer.tokens.len() {
            self.index += 1;
        }
        t
    }

    fn error(&self, expected: &str) -> Error {
        Error::Parse {
            pos: self.pos(),
            expected: expected.into(),
            found: self.peek().to_string(),
        }
    }

    fn expect(&mut self, tok: Tok, expected: &str) -> Result<()> {
        if self.peek() == &tok {
            self.bump();
            Ok(())
        } else {
            Err(self.error(expected))
        }
    }

    fn parse_toplevel(&mut self) -> Result<Expr> {
        let e = self.parse_expr(true)?;
        self.expect(Tok::Eof, "`+`, `-`, `*`, `^`, `#`, or end of input")?;
        Ok(e)
    }

    fn parse_pair(&mut self, allow_smash: bool) -> Result<Expr> {
        let left = self.parse_term()?;
        if self.peek() == &Tok::Hash {
            if !allow_smash {
                return Err(self.error(
                    "no `#` here (a smash pair may appear only at the top level)",
                ));
            }
            self.bump();
            let right = self.parse_term()?;
            let span = Span {
                start: left.span.start,
                end: right.span.end,
            };
            return Ok(Expr {
                kind: ExprKind::Smash(Box::new(left), Box::new(right)),
                span,
            });
        }
        Ok(left)
    }

    fn parse_expr(&mut self, allow_smash: bool) -> Result<Expr> {
        let mut lhs = if self.peek() == &Tok::Minus {
            let start = self.pos();
            self.bump();
            let t = self.parse_pair(allow_smash)?;
            let span = Span {
                start,
                end: t.span.end,
            };
            Expr {
                kind: ExprKind::Neg(Box::new(t)),
                span,
            }
        } else {
            self.parse_pair(allow_smash)?
        };
        loop {
            let op = match self.peek() {
                Tok::Plus => ExprKind::Add as fn(_, _) -> _,
                Tok::Minus => ExprKind::Sub as fn(_, _) -> _,
                _ => break,
            };
            self.bump();
            let rhs = self.parse_pair(allow_smash)?;
            let span = Span {
                start: lhs.span.start,
                end: rhs.span.end,
            };
            lhs = Expr {
                kind: op(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek(), Tok::Int(_) | Tok::Name(_) | Tok::LParen)
    }

    fn parse_term(&mut self) -> Result<Expr> {
        let mut lhs = self.parse_factor()?;
        loop {
            if self.peek() == &Tok::Star {
                self.bump();
                if !self.starts_factor() {
                    return Err(self.error("a factor after `*`"));
                }
            } else if !self.starts_factor() {
                break;
            }
            let rhs = self.parse_factor()?;
            let span = Span {
                start: lhs.span.start,
                end: rhs.span.end,
            };
            lhs = Expr {
                kind: ExprKind::Mul(Box::new(lhs), Box::new(rhs)),
                span,
            };
        }
        Ok(lhs)
    }

    fn parse_factor(&mut self) -> Result<Expr> {
        let atom = self.parse_atom()?;
        if self.peek() == &Tok::Caret {
            self.bump();
            let pos = self.pos();
            match self.bump() {
                Tok::Int(n) => {
                    if n > BigInt::from(MAX_EXPONENT) {
                        return Err(Error::Parse {
                            pos,
                            expected: format!("an exponent at most {MAX_EXPONENT}"),
                            found: format!("`{n}`"),
                        });
                    }
                    let exp = u32::try_from(&n).expect("bounded above");
                    let span = Span {
                        start: atom.span.start,
                        end: pos,
                    };
                    return Ok(Expr {
                        kind: ExprKind::Pow(Box::new(atom), exp),
                        span,
                    });
                }
                other => {
                    return Err(Error::Parse {
                        pos,
                        expected: "a nonnegative integer exponent".into(),
                        found: other.to_string(),
                    })
                }
            }
        }
        Ok(atom)
    }

    fn parse_atom(&mut self) -> Result<Expr> {
        let start = self.pos();
        match self.peek().clone() {
            Tok::Int(n) => {
                self.bump();
                // Rational literal `p/q`.
                if self.peek() == &Tok::Slash {
                    self.bump();
                    let pos = self.pos();
                    match self.bump() {
                        Tok::Int(d) => {
                            if d.is_zero() {
                                return Err(Error::Parse {
                                    pos,
                                    expected: "a nonzero denominator".into(),
                                    found: "`0`".into(),
                                });
                            }
                            return Ok(Expr {
                                kind: ExprKind::Rational(Rational::new(n, d)),
                                span: Span { start, end: pos },
                            });
                        }
                        other => {
                            return Err(Error::Parse {
                                pos,
                                expected: "a denominator after `/`".into(),
                                found: other.to_string(),
                            })
                        }
                    }
                }
                Ok(Expr {
                    kind: ExprKind::Rational(Rational::from_integer(n)),
                    span: Span { start, end: start },
                })
            }
            Tok::Name('i') => {
                self.bump();
                Ok(Expr {
                    kind: ExprKind::Imag,
                    span: Span { start, end: start },
                })
            }
            Tok::Name('x') => self.gen_atom(GenName::X),
            Tok::Name('y') => self.gen_atom(GenName::Y),
            Tok::Name('t') => self.gen_atom(GenName::T),
            Tok::Name('g') => self.gen_atom(GenName::G),
            Tok::Name('d') => {
                self.bump();
                self.expect(Tok::LParen, "`(` after `d`")?;
                let neg = if self.peek() == &Tok::Minus {
                    self.bump();
                    true
                } else {
                    false
                };
                let pos = self.pos();
                let k = match self.bump() {
                    Tok::Int(n) => i64::try_from(&n).map_err(|_| Error::Parse {
                        pos,
                        expected: "an index that fits in 64 bits".into(),
                        found: format!("`{n}`"),
                    })?,
                    other => {
                        return Err(Error::Parse {
                            pos,
                            expected: "an integer index".into(),
                            found: other.to_string(),
                        })
                    }
                };
                let end = self.pos();
                self.expect(Tok::RParen, "`)` closing `d(`")?;
                Ok(Expr {
                    kind: ExprKind::Delta(if neg { -k } else { k }),
                    span: Span { start, end },
                })
            }
            Tok::LParen => {
                self.bump();
                let inner = self.parse_expr(false)?;
                let end = self.pos();
                self.expect(Tok::RParen, "`)`")?;
                Ok(Expr {
                    kind: inner.kind,
                    span: Span { start, end },
                })
            }
            _ => Err(self.error(
                "an atom: a rational, `i`, `x`, `y`, `t`, `g`, `d(k)`, or `(`",
            )),
        }
    }

    fn gen_atom(&mut self, g: GenName) -> Result<Expr> {
        let start = self.pos();
        self.bump();
        Ok(Expr {
            kind: ExprKind::Gen(g),
            span: Span { start, end: start },
        })
    }
}

/// Parse a full expression, with `#` allowed once at the top level.
pub fn parse(src: &str) -> Result<Expr> {
    let tokens = lex(src)?;
    let mut parser = Parser {
        lexer: Lexer { src, tokens },
        index: 0,
    };
    let _ = parser.lexer.src;
    parser.parse_toplevel()
}

/// Interpret an expression inside a fixed algebra: scalars act on the unit,
/// `+`/`-`/`^` are generic, products go through `mul`, and generator atoms
/// are resolved by `atom` (returning `None` for a generator that does not
/// live in this algebra).
pub fn eval_in<L: Label>(
    e: &Expr,
    one: &LinComb<L>,
    mul: &impl Fn(&LinComb<L>, &LinComb<L>) -> Result<LinComb<L>>,
    atom: &impl Fn(&ExprKind) -> Option<LinComb<L>>,
) -> Result<LinComb<L>> {
    let scalar_term = |s: Scalar| one.scaled(&s);
    match &e.kind {
        ExprKind::Rational(r) => Ok(scalar_term(Scalar::from_rational(r.clone()))),
        ExprKind::Imag => Ok(scalar_term(Scalar::i())),
        ExprKind::Neg(inner) => Ok(eval_in(inner, one, mul, atom)?.scaled(&Scalar::from_int(-1))),
        ExprKind::Add(a, b) => {
            Ok(&eval_in(a, one, mul, atom)? + &eval_in(b, one, mul, atom)?)
        }
        ExprKind::Sub(a, b) => {
            Ok(&eval_in(a, one, mul, atom)? - &eval_in(b, one, mul, atom)?)
        }
        ExprKind::Mul(a, b) => mul(&eval_in(a, one, mul, atom)?, &eval_in(b, one, mul, atom)?),
        ExprKind::Pow(base, exp) => {
            let b = eval_in(base, one, mul, atom)?;
            let mut acc = one.clone();
            for _ in 0..*exp {
                acc = mul(&acc, &b)?;
            }
            Ok(acc)
        }
        ExprKind::Smash(..) => Err(Error::Parse {
            pos: e.span.start,
            expected: "an expression without `#` in this position".into(),
            found: "`#`".into(),
        }),
        other => atom(other).ok_or_else(|| Error::Parse {
            pos: e.span.start,
            expected: "a generator valid in this algebra".into(),
            found: describe_atom(other),
        }),
    }
}

fn describe_atom(k: &ExprKind) -> String {
    match k {
        ExprKind::Gen(g) => format!("`{g}`"),
        ExprKind::Delta(k) => format!("`d({k})`"),
        _ => "expression".into(),
    }
}

/// Evaluate a pure scalar expression.
pub fn eval_scalar(e: &Expr) -> Result<Scalar> {
    match &e.kind {
        ExprKind::Rational(r) => Ok(Scalar::from_rational(r.clone())),
        ExprKind::Imag => Ok(Scalar::i()),
        ExprKind::Neg(inner) => Ok(-&eval_scalar(inner)?),
        ExprKind::Add(a, b) => Ok(&eval_scalar(a)? + &eval_scalar(b)?),
        ExprKind::Sub(a, b) => Ok(&eval_scalar(a)? - &eval_scalar(b)?),
        ExprKind::Mul(a, b) => Ok(&eval_scalar(a)? * &eval_scalar(b)?),
        ExprKind::Pow(base, exp) => eval_scalar(base)?.pow(i64::from(*exp)),
        other => Err(Error::Parse {
            pos: e.span.start,
            expected: "a scalar expression".into(),
            found: describe_atom(other),
        }),
    }
}

/// Evaluate in ℂ[x]: the only generator is `x`.
pub fn eval_poly(e: &Expr) -> Result<LinComb<Monomial>> {
    let algebra = crate::module_algebra::polynomial_algebra();
    eval_in(
        e,
        &LinComb::basis(Monomial(0)),
        &|u, v| algebra.mul(u, v),
        &|k| match k {
            ExprKind::Gen(GenName::X) => Some(LinComb::basis(Monomial(1))),
            _ => None,
        },
    )
}

/// Evaluate in a (semi)group algebra: generators `d(k)`.
pub fn eval_group(e: &Expr) -> Result<LinComb<Delta>> {
    let algebra = crate::hopf::group_z();
    eval_in(
        e,
        &LinComb::basis(Delta(0)),
        &|u, v| algebra.algebra.mul(u, v),
        &|k| match k {
            ExprKind::Delta(k) => Some(LinComb::basis(Delta(*k))),
            _ => None,
        },
    )
}

/// Evaluate in Sweedler's H₄: generators `g` and `x`.
pub fn eval_h4(e: &Expr) -> Result<LinComb<H4>> {
    let algebra = crate::hopf::sweedler_h4();
    eval_in(
        e,
        &LinComb::basis(H4::One),
        &|u, v| algebra.algebra.mul(u, v),
        &|k| match k {
            ExprKind::Gen(GenName::G) => Some(LinComb::basis(H4::G)),
            ExprKind::Gen(GenName::X) => Some(LinComb::basis(H4::X)),
            _ => None,
        },
    )
}

/// Evaluate in the dual numbers: generator `t`.
pub fn eval_dual(e: &Expr) -> Result<LinComb<Dual>> {
    let algebra = crate::module_algebra::dual_number_algebra();
    eval_in(
        e,
        &LinComb::basis(Dual::One),
        &|u, v| algebra.mul(u, v),
        &|k| match k {
            ExprKind::Gen(GenName::T) => Some(LinComb::basis(Dual::T)),
            _ => None,
        },
    )
}

/// Evaluate as a combination of free words in x, y (products concatenate).
pub fn eval_word(e: &Expr) -> Result<LinComb<Word>> {
    eval_in(
        e,
        &LinComb::basis(Word::one()),
        &|u, v| {
            crate::lincomb::bilinear_extend(|a: &Word, b: &Word| Ok(LinComb::basis(a.concat(b))), u, v)
        },
        &|k| match k {
            ExprKind::Gen(GenName::X) => Some(LinComb::basis(Word(vec![Gen::X]))),
            ExprKind::Gen(GenName::Y) => Some(LinComb::basis(Word(vec![Gen::Y]))),
            _ => None,
        },
    )
}

fn contains_smash(e: &Expr) -> bool {
    match &e.kind {
        ExprKind::Smash(..) => true,
        ExprKind::Neg(a) | ExprKind::Pow(a, _) => contains_smash(a),
        ExprKind::Add(a, b) | ExprKind::Sub(a, b) | ExprKind::Mul(a, b) => {
            contains_smash(a) || contains_smash(b)
        }
        _ => false,
    }
}

/// Evaluate a (sum of) smash pairs `a # h`: the two sides are interpreted by
/// the given evaluators, and an expression with no `#` at all is read as an
/// element of A embedded along `a ↦ a ⊗ 1`.
pub fn eval_smash<A: Label, H: Label>(
    e: &Expr,
    unit_h: &LinComb<H>,
    eval_a: &impl Fn(&Expr) -> Result<LinComb<A>>,
    eval_h: &impl Fn(&Expr) -> Result<LinComb<H>>,
) -> Result<crate::smash::SmashElement<A, H>> {
    use crate::smash::SmashElement;
    if !contains_smash(e) {
        return Ok(SmashElement::tensor(&eval_a(e)?, unit_h));
    }
    match &e.kind {
        ExprKind::Smash(a, h) => Ok(SmashElement::tensor(&eval_a(a)?, &eval_h(h)?)),
        ExprKind::Neg(inner) => Ok(eval_smash(inner, unit_h, eval_a, eval_h)?
            .scaled(&Scalar::from_int(-1))),
        ExprKind::Add(a, b) => Ok(eval_smash(a, unit_h, eval_a, eval_h)?
            .add(&eval_smash(b, unit_h, eval_a, eval_h)?)),
        ExprKind::Sub(a, b) => Ok(eval_smash(a, unit_h, eval_a, eval_h)?.combine(
            &eval_smash(b, unit_h, eval_a, eval_h)?,
            &Scalar::from_int(-1),
        )),
        _ => Err(Error::Parse {
            pos: e.span.start,
            expected: "smash pairs combined only with `+`, `-`, or a leading `-`".into(),
            found: "`#` under another operator".into(),
        }),
    }
}

/// Evaluate in ℂ_q[x,y]: products use the quantum-plane rule.
pub fn eval_qplane(e: &Expr, q: &Scalar) -> Result<QPlaneElement> {
    if q.is_zero() {
        return Err(Error::Parameter("q must be nonzero".into()));
    }
    let one = QPlaneElement::one(q);
    fn go(e: &Expr, one: &QPlaneElement, q: &Scalar) -> Result<QPlaneElement> {
        match &e.kind {
            ExprKind::Rational(r) => Ok(one.scaled(&Scalar::from_rational(r.clone()))),
            ExprKind::Imag => Ok(one.scaled(&Scalar::i())),
            ExprKind::Gen(GenName::X) => Ok(QPlaneElement::monomial(q, 1, 0)),
            ExprKind::Gen(GenName::Y) => Ok(QPlaneElement::monomial(q, 0, 1)),
            ExprKind::Neg(inner) => Ok(go(inner, one, q)?.scaled(&Scalar::from_int(-1))),
            ExprKind::Add(a, b) => go(a, one, q)?.add(&go(b, one, q)?),
            ExprKind::Sub(a, b) => {
                go(a, one, q)?.add(&go(b, one, q)?.scaled(&Scalar::from_int(-1)))
            }
            ExprKind::Mul(a, b) => go(a, one, q)?.mul(&go(b, one, q)?),
            ExprKind::Pow(base, exp) => go(base, one, q)?.pow(*exp),
            other => Err(Error::Parse {
                pos: e.span.start,
                expected: "a quantum-plane expression in x, y".into(),
                found: describe_atom(other),
            }),
        }
    }
    go(e, &one, q)
}
