//! Infix parser for rational functions and differential forms.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (('*' | '/') unary)*
//! unary  := '-' unary | factor
//! factor := base ('^' uint)?
//! base   := integer | identifier | '(' expr ')' | 'd' '(' ident (',' ident)* ')'
//! ```
//!
//! `d(x,y)` is `dx ^ dy`; products of forms are wedge products.

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::forms::DiffForm;
use crate::poly::{MPoly, RatFunc, Q};
use crate::vars::Vars;

/// A parsed value: a function or a form of some degree.
#[derive(Clone, Debug, PartialEq)]
pub enum Parsed {
    Function(RatFunc),
    Form(DiffForm),
}

impl Parsed {
    /// Functions are promoted to 0-forms.
    pub fn into_form(self, nforms: usize) -> DiffForm {
        match self {
            Parsed::Function(f) => DiffForm::function(f, nforms),
            Parsed::Form(w) => w,
        }
    }

    pub fn degree(&self) -> usize {
        match self {
            Parsed::Function(_) => 0,
            Parsed::Form(w) => w.degree(),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let (mut line, mut col) = (1, 1);
    let chars: Vec<char> = src.chars().collect();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let (l0, c0) = (line, col);
        if c == '\n' {
            line += 1;
            col = 1;
            i += 1;
            continue;
        }
        if c.is_whitespace() {
            col += 1;
            i += 1;
            continue;
        }
        if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Int(s.parse().unwrap()), line: l0, column: c0 });
            continue;
        }
        if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            col += i - start;
            out.push(Token { tok: Tok::Ident(s), line: l0, column: c0 });
            continue;
        }
        if "+-*/^(),".contains(c) {
            out.push(Token { tok: Tok::Sym(c), line: l0, column: c0 });
            col += 1;
            i += 1;
            continue;
        }
        return Err(Error::Parse { line: l0, column: c0, expected: vec!["number".into(), "identifier".into(), "operator".into()] });
    }
    out.push(Token { tok: Tok::End, line, column: col });
    Ok(out)
}

struct Parser<'a> {
    toks: Vec<Token>,
    pos: usize,
    vars: &'a Vars,
}

impl Parser<'_> {
    fn peek(&self) -> &Tok {
        &self.toks[self.pos].tok
    }

    fn fail<T>(&self, expected: &[&str]) -> Result<T> {
        let t = &self.toks[self.pos];
        Err(Error::Parse { line: t.line, column: t.column, expected: expected.iter().map(|s| s.to_string()).collect() })
    }

    fn fail_at<T>(&self, pos: usize, expected: &[&str]) -> Result<T> {
        let t = &self.toks[pos];
        Err(Error::Parse { line: t.line, column: t.column, expected: expected.iter().map(|s| s.to_string()).collect() })
    }

    fn eat(&mut self, c: char) -> bool {
        if *self.peek() == Tok::Sym(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn n(&self) -> usize {
        self.vars.nvars()
    }

    fn m(&self) -> usize {
        self.vars.nforms()
    }

    fn expr(&mut self) -> Result<Parsed> {
        let mut acc = self.term()?;
        loop {
            let start = self.pos;
            let neg = if self.eat('+') {
                false
            } else if self.eat('-') {
                true
            } else {
                return Ok(acc);
            };
            let rhs = self.term()?;
            acc = match self.add(acc, rhs, neg) {
                Some(v) => v,
                None => return self.fail_at(start, &["terms of equal degree"]),
            };
        }
    }

    fn add(&self, a: Parsed, b: Parsed, neg: bool) -> Option<Parsed> {
        match (a, b) {
            (Parsed::Function(f), Parsed::Function(g)) => Some(Parsed::Function(if neg { &f - &g } else { &f + &g })),
            (a, b) => {
                let (wa, wb) = (a.into_form(self.m()), b.into_form(self.m()));
                if wa.degree() != wb.degree() {
                    // a zero summand of another degree is harmless
                    if wa.is_zero() {
                        return Some(Parsed::Form(if neg { -&wb } else { wb }));
                    }
                    if wb.is_zero() {
                        return Some(Parsed::Form(wa));
                    }
                    return None;
                }
                Some(Parsed::Form(if neg { &wa - &wb } else { &wa + &wb }))
            }
        }
    }

    fn term(&mut self) -> Result<Parsed> {
        let mut acc = self.unary()?;
        loop {
            let start = self.pos;
            if self.eat('*') {
                let rhs = self.unary()?;
                acc = match (acc, rhs) {
                    (Parsed::Function(f), Parsed::Function(g)) => Parsed::Function(&f * &g),
                    (Parsed::Function(f), Parsed::Form(w)) | (Parsed::Form(w), Parsed::Function(f)) => Parsed::Form(w.scale(&f)),
                    (Parsed::Form(a), Parsed::Form(b)) => Parsed::Form(a.wedge(&b)),
                };
            } else if self.eat('/') {
                let rhs = self.unary()?;
                let Parsed::Function(g) = rhs else { return self.fail_at(start + 1, &["function divisor"]) };
                let inv = match g.inv() {
                    Ok(i) => i,
                    Err(_) => return self.fail_at(start + 1, &["nonzero divisor"]),
                };
                acc = match acc {
                    Parsed::Function(f) => Parsed::Function(&f * &inv),
                    Parsed::Form(w) => Parsed::Form(w.scale(&inv)),
                };
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<Parsed> {
        if self.eat('-') {
            return Ok(match self.unary()? {
                Parsed::Function(f) => Parsed::Function(-&f),
                Parsed::Form(w) => Parsed::Form(-&w),
            });
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Parsed> {
        let base = self.base()?;
        if self.eat('^') {
            let Tok::Int(e) = self.peek().clone() else { return self.fail(&["exponent"]) };
            let e: u32 = match e.try_into() {
                Ok(e) => e,
                Err(_) => return self.fail(&["small exponent"]),
            };
            let at = self.pos;
            self.pos += 1;
            return match base {
                Parsed::Function(f) => Ok(Parsed::Function(f.pow(e as i32))),
                Parsed::Form(w) if e == 1 => Ok(Parsed::Form(w)),
                Parsed::Form(_) => self.fail_at(at, &["exponent 1 on a form"]),
            };
        }
        Ok(base)
    }

    fn base(&mut self) -> Result<Parsed> {
        match self.peek().clone() {
            Tok::Int(k) => {
                self.pos += 1;
                Ok(Parsed::Function(RatFunc::constant(Q::from_integer(k), self.n())))
            }
            Tok::Sym('(') => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return self.fail(&["')'"]);
                }
                Ok(e)
            }
            Tok::Ident(name) if name == "d" && self.toks[self.pos + 1].tok == Tok::Sym('(') && self.vars.index_of("d").is_none() => {
                self.pos += 2;
                let mut idx = Vec::new();
                loop {
                    let Tok::Ident(v) = self.peek().clone() else { return self.fail(&["form variable"]) };
                    match self.vars.index_of(&v) {
                        Some(i) if i < self.m() => idx.push(i),
                        _ => return self.fail(&["form variable"]),
                    }
                    self.pos += 1;
                    if self.eat(',') {
                        continue;
                    }
                    if self.eat(')') {
                        break;
                    }
                    return self.fail(&["','", "')'"]);
                }
                let mut sorted = idx.clone();
                sorted.sort_unstable();
                sorted.dedup();
                if sorted.len() < idx.len() {
                    return Ok(Parsed::Form(DiffForm::zero(idx.len(), self.m(), self.n())));
                }
                Ok(Parsed::Form(DiffForm::term(RatFunc::one(self.n()), &idx, self.m())))
            }
            Tok::Ident(name) => match self.vars.index_of(&name) {
                Some(i) => {
                    self.pos += 1;
                    Ok(Parsed::Function(RatFunc::from_poly(MPoly::var(i, self.n()))))
                }
                _ => self.fail(&["variable"]),
            },
            _ => self.fail(&["number", "variable", "'('", "d(...)"]),
        }
    }
}

/// Parses `src` over the variables `vars`.
pub fn parse_expression(src: &str, vars: &Vars) -> Result<Parsed> {
    let toks = tokenize(src)?;
    let mut p = Parser { toks, pos: 0, vars };
    let v = p.expr()?;
    if *p.peek() != Tok::End {
        return p.fail(&["operator", "end of input"]);
    }
    Ok(v)
}

/// Parses a function (a 0-form is accepted as its coefficient).
pub fn parse_function(src: &str, vars: &Vars) -> Result<RatFunc> {
    match parse_expression(src, vars)? {
        Parsed::Function(f) => Ok(f),
        Parsed::Form(w) if w.degree() == 0 => Ok(w.coeff(&[])),
        Parsed::Form(_) => Err(Error::Parse { line: 1, column: 1, expected: vec!["function".into()] }),
    }
}

/// Parses a form; a bare function is read as a 0-form.
pub fn parse_form(src: &str, vars: &Vars) -> Result<DiffForm> {
    Ok(parse_expression(src, vars)?.into_form(vars.nforms()))
}
