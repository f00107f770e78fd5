//! Text syntax for elements of `Diff_h(n, N)`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := atom ('^' nat)?
//! atom   := h[i] | Z[i] | Z[i,a] | d[i] | d[i,a] | c[k] | nat | '(' expr ')'
//! ```
//!
//! Division is only by nonzero elements of `Ū(h)` and multiplies on the right.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::coeff::RatFunc;
use crate::error::{Error, Result};
use crate::ring::{central_c, Element, GenKind, RingCtx};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    Weight(usize),
    Gen { kind: GenKind, site: usize, copy: usize },
    Central(usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    Ident(char),
    Op(char),
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>> {
    let mut out = Vec::new();
    let chars: Vec<(usize, char)> = text.char_indices().collect();
    let mut k = 0;
    while k < chars.len() {
        let (pos, ch) = chars[k];
        if ch.is_whitespace() {
            k += 1;
        } else if ch.is_ascii_digit() {
            let start = k;
            while k < chars.len() && chars[k].1.is_ascii_digit() {
                k += 1;
            }
            let s: String = chars[start..k].iter().map(|c| c.1).collect();
            out.push((pos, Tok::Num(s.parse().expect("digits"))));
        } else if matches!(ch, 'h' | 'Z' | 'd' | 'c') {
            out.push((pos, Tok::Ident(ch)));
            k += 1;
        } else if "+-*/^()[],".contains(ch) {
            out.push((pos, Tok::Op(ch)));
            k += 1;
        } else {
            return Err(Error::Parse {
                pos,
                msg: format!("unexpected character `{ch}`"),
            });
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
    ctx: &'a RingCtx,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.0)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos(),
            msg: msg.into(),
        })
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: char) -> Result<()> {
        if self.eat(op) {
            Ok(())
        } else {
            self.err(format!("expected `{op}`"))
        }
    }

    fn nat(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Num(v)) => {
                let v = v.clone();
                self.at += 1;
                Ok(v)
            }
            _ => self.err("expected a number"),
        }
    }

    fn small(&mut self) -> Result<usize> {
        let v = self.nat()?;
        usize::try_from(v).or_else(|_| self.err("number too large"))
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut e = self.term()?;
        loop {
            if self.eat('+') {
                e = Expr::Add(Box::new(e), Box::new(self.term()?));
            } else if self.eat('-') {
                e = Expr::Sub(Box::new(e), Box::new(self.term()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut e = self.unary()?;
        loop {
            if self.eat('*') {
                e = Expr::Mul(Box::new(e), Box::new(self.unary()?));
            } else if self.eat('/') {
                e = Expr::Div(Box::new(e), Box::new(self.unary()?));
            } else {
                return Ok(e);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            Ok(Expr::Neg(Box::new(self.unary()?)))
        } else {
            self.factor()
        }
    }

    fn factor(&mut self) -> Result<Expr> {
        let a = self.atom()?;
        if self.eat('^') {
            let e = self.nat()?;
            let e = u32::try_from(e).or_else(|_| self.err("exponent too large"))?;
            return Ok(Expr::Pow(Box::new(a), e));
        }
        Ok(a)
    }

    fn bracketed(&mut self, what: &'static str, hi: usize) -> Result<usize> {
        self.expect('[')?;
        let pos = self.pos();
        let i = self.small()?;
        if i < 1 || i > hi {
            return Err(index_error(what, i, hi, pos));
        }
        Ok(i)
    }

    fn atom(&mut self) -> Result<Expr> {
        let n = self.ctx.n();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.at += 1;
                Ok(Expr::Num(v))
            }
            Some(Tok::Op('(')) => {
                self.at += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Ident(c)) => {
                self.at += 1;
                match c {
                    'h' => {
                        let i = self.bracketed("h index", n)?;
                        self.expect(']')?;
                        Ok(Expr::Weight(i))
                    }
                    'c' => {
                        let k = self.bracketed("c index", n)?;
                        self.expect(']')?;
                        Ok(Expr::Central(k))
                    }
                    _ => {
                        let kind = if c == 'Z' { GenKind::Z } else { GenKind::D };
                        let site = self.bracketed("site", n)?;
                        let copy = if self.eat(',') {
                            let pos = self.pos();
                            let a = self.small()?;
                            if a < 1 || a > self.ctx.copies() {
                                return Err(index_error("copy", a, self.ctx.copies(), pos));
                            }
                            a
                        } else {
                            1
                        };
                        self.expect(']')?;
                        Ok(Expr::Gen { kind, site, copy })
                    }
                }
            }
            Some(_) => self.err("expected a generator, number or `(`"),
            None => self.err("unexpected end of input"),
        }
    }
}

fn index_error(what: &str, index: usize, hi: usize, pos: usize) -> Error {
    Error::Parse {
        pos,
        msg: format!("index out of range: {what} {index} not in 1..={hi}"),
    }
}

/// Parses `text` against the generators of `ctx`.
pub fn parse(text: &str, ctx: RingCtx) -> Result<Expr> {
    let toks = tokenize(text)?;
    let mut p = Parser {
        toks,
        at: 0,
        end: text.len(),
        ctx: &ctx,
    };
    let e = p.expr()?;
    if p.at < p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

impl Expr {
    pub fn eval(&self, ctx: RingCtx) -> Result<Element> {
        Ok(match self {
            Expr::Num(v) => Element::scalar(ctx, RatFunc::constant(BigRational::from_integer(v.clone()))),
            Expr::Weight(i) => Element::h(ctx, *i)?,
            Expr::Gen { kind, site, copy } => Element::gen(ctx, ctx.gen(*kind, *site, *copy)?),
            Expr::Central(k) => central_c(ctx, *k)?,
            Expr::Neg(a) => -&a.eval(ctx)?,
            Expr::Add(a, b) => a.eval(ctx)?.try_add(&b.eval(ctx)?)?,
            Expr::Sub(a, b) => a.eval(ctx)?.try_sub(&b.eval(ctx)?)?,
            Expr::Mul(a, b) => a.eval(ctx)?.product(&b.eval(ctx)?)?,
            Expr::Div(a, b) => {
                let d = b.eval(ctx)?;
                let s = d.as_scalar().ok_or_else(|| {
                    Error::Evaluation(format!("can only divide by elements of U(h), got {d}"))
                })?;
                a.eval(ctx)?.scale_right(&s.inv()?)
            }
            Expr::Pow(a, e) => a.eval(ctx)?.pow(*e),
        })
    }
}

/// Parses and evaluates to a normal form.
pub fn parse_element(text: &str, ctx: RingCtx) -> Result<Element> {
    parse(text, ctx)?.eval(ctx)
}
