//! Arithmetic expression trees for catalog coefficients.
//!
//! Trees are built from eight node kinds (`const`, `param`, `qpow`, `add`,
//! `mul`, `div`, `pochq`, `poch`) plus `pow` for integer powers of a
//! sub-expression. A small infix reader turns formula text such as
//! `(1-q^(i-N))*(1-alpha*q^(i+1))/(1-alpha*beta*q^(2*i+1))` into a tree.

use alloc::boxed::Box;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalar::{self, Scalar};

/// Named leaves. Parameters come from the bound parameter set; the index
/// variables from the grid point being evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    Alpha,
    Beta,
    Gamma,
    Delta,
    Q,
    Z,
    N,
    I,
    X,
    /// `i^e`, `i^p`, `x^e`, `x^p`, `N^e`, `N^p` of the parity split `n = 2n^e + n^p`.
    IE,
    IP,
    XE,
    XP,
    NE,
    NP,
    /// Orthogonality weight of the bound parameter set at `x = N`.
    WeightAtN,
}

impl Var {
    pub const ALL: [Var; 16] = [
        Var::Alpha,
        Var::Beta,
        Var::Gamma,
        Var::Delta,
        Var::Q,
        Var::Z,
        Var::N,
        Var::I,
        Var::X,
        Var::IE,
        Var::IP,
        Var::XE,
        Var::XP,
        Var::NE,
        Var::NP,
        Var::WeightAtN,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Var::Alpha => "alpha",
            Var::Beta => "beta",
            Var::Gamma => "gamma",
            Var::Delta => "delta",
            Var::Q => "q",
            Var::Z => "z",
            Var::N => "N",
            Var::I => "i",
            Var::X => "x",
            Var::IE => "i_e",
            Var::IP => "i_p",
            Var::XE => "x_e",
            Var::XP => "x_p",
            Var::NE => "N_e",
            Var::NP => "N_p",
            Var::WeightAtN => "w_N",
        }
    }

    pub fn from_name(s: &str) -> Option<Var> {
        Var::ALL.iter().copied().find(|v| v.name() == s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    Const(Scalar),
    Param(Var),
    /// `q` raised to an integer-valued expression.
    QPow(Box<Expr>),
    Add(Vec<Expr>),
    Mul(Vec<Expr>),
    Div(Box<Expr>, Box<Expr>),
    /// `(a;q)_k` with integer-valued `k >= 0`.
    PochQ(Box<Expr>, Box<Expr>),
    /// `(a)_k` with integer-valued `k >= 0`.
    Poch(Box<Expr>, Box<Expr>),
    /// `a^k` with integer-valued `k`.
    Pow(Box<Expr>, Box<Expr>),
    /// Reference to a sibling formula, resolved before evaluation.
    Ref(String),
}

/// Values available to an expression during evaluation.
pub trait Env {
    fn var(&self, v: Var) -> Result<Scalar>;
}

impl Expr {
    pub fn int(n: i64) -> Expr {
        Expr::Const(scalar::int(n))
    }

    pub fn param(v: Var) -> Expr {
        Expr::Param(v)
    }

    pub fn eval(&self, env: &dyn Env) -> Result<Scalar> {
        match self {
            Expr::Const(c) => Ok(c.clone()),
            Expr::Param(v) => env.var(*v),
            Expr::QPow(e) => {
                let k = integer(e, env)?;
                scalar::powi(&env.var(Var::Q)?, k)
            }
            Expr::Add(xs) => {
                let mut acc = Scalar::zero();
                for x in xs {
                    acc += x.eval(env)?;
                }
                Ok(acc)
            }
            Expr::Mul(xs) => {
                let mut acc = Scalar::one();
                for x in xs {
                    acc *= x.eval(env)?;
                }
                Ok(acc)
            }
            Expr::Div(a, b) => {
                let d = b.eval(env)?;
                if d.is_zero() {
                    return Err(Error::DivisionByZero(b.to_string()));
                }
                Ok(a.eval(env)? / d)
            }
            Expr::PochQ(a, k) => {
                let k = nonneg(k, env)?;
                Ok(scalar::q_pochhammer(&a.eval(env)?, &env.var(Var::Q)?, k))
            }
            Expr::Poch(a, k) => {
                let k = nonneg(k, env)?;
                Ok(scalar::pochhammer(&a.eval(env)?, k))
            }
            Expr::Pow(a, k) => {
                let k = integer(k, env)?;
                let base = a.eval(env)?;
                scalar::powi(&base, k).map_err(|_| Error::DivisionByZero(self.to_string()))
            }
            Expr::Ref(name) => Err(Error::Expr(format!("unresolved reference @{name}"))),
        }
    }

    /// Replaces every occurrence of `v` by `by`.
    pub fn substitute(&self, v: Var, by: &Expr) -> Expr {
        self.map_leaves(&mut |e| match e {
            Expr::Param(w) if *w == v => Some(by.clone()),
            _ => None,
        })
    }

    /// Replaces `@name` references using `lookup`.
    pub fn resolve(&self, lookup: &dyn Fn(&str) -> Option<Expr>) -> Result<Expr> {
        let mut missing = None;
        let out = self.map_leaves(&mut |e| match e {
            Expr::Ref(name) => {
                let r = lookup(name);
                if r.is_none() {
                    missing = Some(name.clone());
                }
                r
            }
            _ => None,
        });
        match missing {
            Some(name) => Err(Error::Expr(format!("unknown reference @{name}"))),
            None => Ok(out),
        }
    }

    pub fn has_refs(&self) -> bool {
        let mut found = false;
        self.visit(&mut |e| found |= matches!(e, Expr::Ref(_)));
        found
    }

    pub fn mentions(&self, v: Var) -> bool {
        let mut found = false;
        self.visit(&mut |e| found |= *e == Expr::Param(v));
        found
    }

    fn visit(&self, f: &mut dyn FnMut(&Expr)) {
        f(self);
        match self {
            Expr::Const(_) | Expr::Param(_) | Expr::Ref(_) => {}
            Expr::QPow(a) => a.visit(f),
            Expr::Add(xs) | Expr::Mul(xs) => xs.iter().for_each(|x| x.visit(f)),
            Expr::Div(a, b) | Expr::PochQ(a, b) | Expr::Poch(a, b) | Expr::Pow(a, b) => {
                a.visit(f);
                b.visit(f);
            }
        }
    }

    fn map_leaves(&self, f: &mut dyn FnMut(&Expr) -> Option<Expr>) -> Expr {
        if let Some(e) = f(self) {
            return e;
        }
        let bx = |e: &Expr, f: &mut dyn FnMut(&Expr) -> Option<Expr>| Box::new(e.map_leaves(f));
        match self {
            Expr::Const(_) | Expr::Param(_) | Expr::Ref(_) => self.clone(),
            Expr::QPow(a) => Expr::QPow(bx(a, f)),
            Expr::Add(xs) => Expr::Add(xs.iter().map(|x| x.map_leaves(f)).collect()),
            Expr::Mul(xs) => Expr::Mul(xs.iter().map(|x| x.map_leaves(f)).collect()),
            Expr::Div(a, b) => Expr::Div(bx(a, f), bx(b, f)),
            Expr::PochQ(a, b) => Expr::PochQ(bx(a, f), bx(b, f)),
            Expr::Poch(a, b) => Expr::Poch(bx(a, f), bx(b, f)),
            Expr::Pow(a, b) => Expr::Pow(bx(a, f), bx(b, f)),
        }
    }
}

fn integer(e: &Expr, env: &dyn Env) -> Result<i64> {
    let v = e.eval(env)?;
    scalar::to_i64(&v).ok_or_else(|| Error::Expr(format!("exponent {e} = {v} is not an integer")))
}

fn nonneg(e: &Expr, env: &dyn Env) -> Result<usize> {
    let k = integer(e, env)?;
    usize::try_from(k).map_err(|_| Error::Expr(format!("negative Pochhammer length {e}")))
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_expr(self, f, 0)
    }
}

// Precedence levels: 0 sum, 1 product, 2 power/atom.
fn write_expr(e: &Expr, f: &mut fmt::Formatter<'_>, ctx: u8) -> fmt::Result {
    let paren = |f: &mut fmt::Formatter<'_>, need: bool, open: bool| {
        if need {
            f.write_str(if open { "(" } else { ")" })
        } else {
            Ok(())
        }
    };
    match e {
        Expr::Const(c) => {
            let need = ctx > 0 && (c < &Scalar::zero() || !c.is_integer());
            paren(f, need, true)?;
            write!(f, "{c}")?;
            paren(f, need, false)
        }
        Expr::Param(v) => f.write_str(v.name()),
        Expr::Ref(n) => write!(f, "@{n}"),
        Expr::QPow(k) => {
            f.write_str("q^")?;
            write_expr(k, f, 3)
        }
        Expr::Pow(a, k) => {
            write_expr(a, f, 3)?;
            f.write_str("^")?;
            write_expr(k, f, 3)
        }
        Expr::Add(xs) => {
            paren(f, ctx > 0, true)?;
            if xs.is_empty() {
                f.write_str("0")?;
            }
            for (n, x) in xs.iter().enumerate() {
                if n > 0 {
                    f.write_str(" + ")?;
                }
                write_expr(x, f, 1)?;
            }
            paren(f, ctx > 0, false)
        }
        Expr::Mul(xs) => {
            paren(f, ctx > 1, true)?;
            if xs.is_empty() {
                f.write_str("1")?;
            }
            for (n, x) in xs.iter().enumerate() {
                if n > 0 {
                    f.write_str("*")?;
                }
                write_expr(x, f, 2)?;
            }
            paren(f, ctx > 1, false)
        }
        Expr::Div(a, b) => {
            paren(f, ctx > 1, true)?;
            write_expr(a, f, 2)?;
            f.write_str("/")?;
            write_expr(b, f, 3)?;
            paren(f, ctx > 1, false)
        }
        Expr::PochQ(a, k) => {
            f.write_str("pochq(")?;
            write_expr(a, f, 0)?;
            f.write_str(", ")?;
            write_expr(k, f, 0)?;
            f.write_str(")")
        }
        Expr::Poch(a, k) => {
            f.write_str("poch(")?;
            write_expr(a, f, 0)?;
            f.write_str(", ")?;
            write_expr(k, f, 0)?;
            f.write_str(")")
        }
    }
}

/// Parses infix formula text.
///
/// Grammar: `+ - * /`, `^` (right associative; `q^e` becomes a `qpow` node),
/// unary minus, parentheses, integer literals, parameter names, `@name`
/// references and the calls `poch(a, k)`, `pochq(a, k)`.
pub fn parse(src: &str) -> Result<Expr> {
    let mut p = Parser { s: src.as_bytes(), pos: 0, src };
    let e = p.sum()?;
    p.ws();
    if p.pos != p.s.len() {
        return Err(p.err("trailing input"));
    }
    Ok(e)
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
    src: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, what: &str) -> Error {
        Error::Expr(format!("{what} at byte {} in `{}`", self.pos, self.src))
    }

    fn ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn sum(&mut self) -> Result<Expr> {
        let mut terms = Vec::from([self.product()?]);
        loop {
            if self.eat(b'+') {
                terms.push(self.product()?);
            } else if self.eat(b'-') {
                terms.push(negate(self.product()?));
            } else {
                break;
            }
        }
        Ok(if terms.len() == 1 { terms.pop().unwrap() } else { Expr::Add(terms) })
    }

    fn product(&mut self) -> Result<Expr> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                let rhs = self.unary()?;
                acc = match acc {
                    Expr::Mul(mut xs) => {
                        xs.push(rhs);
                        Expr::Mul(xs)
                    }
                    other => Expr::Mul(Vec::from([other, rhs])),
                };
            } else if self.eat(b'/') {
                let rhs = self.unary()?;
                acc = Expr::Div(Box::new(acc), Box::new(rhs));
            } else {
                break;
            }
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat(b'-') {
            return Ok(negate(self.unary()?));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if !self.eat(b'^') {
            return Ok(base);
        }
        let exp = self.unary()?;
        Ok(match base {
            Expr::Param(Var::Q) => Expr::QPow(Box::new(exp)),
            b => Expr::Pow(Box::new(b), Box::new(exp)),
        })
    }

    fn atom(&mut self) -> Result<Expr> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.sum()?;
                if !self.eat(b')') {
                    return Err(self.err("expected `)`"));
                }
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let text = &self.src[start..self.pos];
                Ok(Expr::Const(scalar::parse(text)?))
            }
            Some(b'@') => {
                self.pos += 1;
                let name = self.ident();
                if name.is_empty() {
                    return Err(self.err("empty reference"));
                }
                Ok(Expr::Ref(name.to_string()))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let name = self.ident();
                if name == "poch" || name == "pochq" {
                    if !self.eat(b'(') {
                        return Err(self.err("expected `(`"));
                    }
                    let a = self.sum()?;
                    if !self.eat(b',') {
                        return Err(self.err("expected `,`"));
                    }
                    let k = self.sum()?;
                    if !self.eat(b')') {
                        return Err(self.err("expected `)`"));
                    }
                    let (a, k) = (Box::new(a), Box::new(k));
                    return Ok(if name == "poch" { Expr::Poch(a, k) } else { Expr::PochQ(a, k) });
                }
                Var::from_name(name)
                    .map(Expr::Param)
                    .ok_or_else(|| self.err(&format!("unknown name `{name}`")))
            }
            _ => Err(self.err("expected operand")),
        }
    }

    fn ident(&mut self) -> &'a str {
        let start = self.pos;
        while self.pos < self.s.len() && (self.s[self.pos].is_ascii_alphanumeric() || self.s[self.pos] == b'_') {
            self.pos += 1;
        }
        let src: &'a str = self.src;
        &src[start..self.pos]
    }
}

fn negate(e: Expr) -> Expr {
    match e {
        Expr::Const(c) => Expr::Const(-c),
        Expr::Mul(mut xs) => {
            xs.insert(0, Expr::int(-1));
            Expr::Mul(xs)
        }
        other => Expr::Mul(Vec::from([Expr::int(-1), other])),
    }
}

/// Environment backed by a fixed list of bindings; handy for tests and for
/// evaluating shift maps that only reference parameters.
pub struct Bindings(pub Vec<(Var, Scalar)>);

impl Env for Bindings {
    fn var(&self, v: Var) -> Result<Scalar> {
        self.0
            .iter()
            .find(|(w, _)| *w == v)
            .map(|(_, s)| s.clone())
            .ok_or_else(|| Error::MissingParameter(v.name().to_string()))
    }
}
