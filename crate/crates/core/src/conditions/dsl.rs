//! A small language for the printed condition lists.
//!
//! Variables are `x y z` (in Z) and `u v w` (in V) followed by a level digit or `i`.
//! Infix maps: `.` (the multiplications and actions of Z, resolved by operand types),
//! `->j` ⇀, `<-j` ↼, `|>j` ⊳, `<|j` ⊲, `*j`; functions `omj(a, b)`, `phi`, `sig`, `d`,
//! `rN`, `sN`. A `'` after a symbol selects the second datum (`<-'2`, `om'i`, `sig'`).
//! A function may be applied by juxtaposition (`r0 d(u1)`). Infix maps do not chain
//! without parentheses. `;` separates equations of a multi-part condition.

use std::fmt;

use crate::exact_linear::{add_into, neg, BilMap, Field, LinMap, Scalar, Vector};
use crate::unified_product::{MapKind, LEVELS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Kind {
    Z,
    V,
    /// V of the second datum.
    W,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Space {
    pub kind: Kind,
    pub level: u8,
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let k = match self.kind {
            Kind::Z => "Z",
            Kind::V => "V",
            Kind::W => "V'",
        };
        write!(f, "{k}{}", self.level)
    }
}

const fn sp(kind: Kind, level: u8) -> Space {
    Space { kind, level }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DslError {
    pub pos: usize,
    pub msg: String,
}

impl fmt::Display for DslError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at {}: {}", self.pos, self.msg)
    }
}

fn err<T>(pos: usize, msg: impl Into<String>) -> Result<T, DslError> {
    Err(DslError { pos, msg: msg.into() })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sym {
    Dot,
    Map(MapKind),
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Zero,
    Ident(String),
    Op { sym: Sym, prime: bool, idx: Option<char> },
    LParen,
    RParen,
    Comma,
    Plus,
    Minus,
    Eq,
    Semi,
}

fn lex(src: &str) -> Result<Vec<(usize, Tok)>, DslError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    let idx_at = |i: usize| -> Option<char> {
        b.get(i).map(|&c| c as char).filter(|c| matches!(c, '0'..='3' | 'i'))
    };
    while i < b.len() {
        let c = b[i] as char;
        let start = i;
        let op2 = |s: &str| src[i..].starts_with(s);
        let sym = if op2("->") {
            Some((Sym::Map(MapKind::HarpoonR), 2))
        } else if op2("<-") {
            Some((Sym::Map(MapKind::HarpoonL), 2))
        } else if op2("|>") {
            Some((Sym::Map(MapKind::TriR), 2))
        } else if op2("<|") {
            Some((Sym::Map(MapKind::TriL), 2))
        } else if c == '*' {
            Some((Sym::Map(MapKind::Star), 1))
        } else if c == '.' {
            Some((Sym::Dot, 1))
        } else {
            None
        };
        if let Some((sym, len)) = sym {
            i += len;
            let prime = b.get(i) == Some(&b'\'');
            if prime {
                i += 1;
            }
            let idx = if sym == Sym::Dot {
                None
            } else {
                let Some(ix) = idx_at(i) else {
                    return err(i, "operator needs an index 0-3 or i");
                };
                i += 1;
                Some(ix)
            };
            out.push((start, Tok::Op { sym, prime, idx }));
            continue;
        }
        match c {
            ' ' | '\t' | '\n' => i += 1,
            '(' => {
                out.push((start, Tok::LParen));
                i += 1
            }
            ')' => {
                out.push((start, Tok::RParen));
                i += 1
            }
            ',' => {
                out.push((start, Tok::Comma));
                i += 1
            }
            '+' => {
                out.push((start, Tok::Plus));
                i += 1
            }
            '-' => {
                out.push((start, Tok::Minus));
                i += 1
            }
            '=' => {
                out.push((start, Tok::Eq));
                i += 1
            }
            ';' => {
                out.push((start, Tok::Semi));
                i += 1
            }
            '0' if !b.get(i + 1).is_some_and(|c| c.is_ascii_alphanumeric()) => {
                out.push((start, Tok::Zero));
                i += 1
            }
            'a'..='z' => {
                while i < b.len() && (b[i].is_ascii_alphanumeric() || b[i] == b'\'') {
                    i += 1;
                }
                out.push((start, Tok::Ident(src[start..i].to_string())));
            }
            _ => return err(i, format!("unexpected character `{c}`")),
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Func {
    Phi,
    Sig { prime: bool },
    D { prime: bool },
    R(char),
    S(char),
}

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Zero,
    Var(String),
    Sum(Vec<(bool, Ast)>),
    Op { sym: Sym, prime: bool, idx: Option<char>, l: Box<Ast>, r: Box<Ast> },
    App { f: Func, arg: Box<Ast> },
}

enum Ident {
    Var(String),
    Func(Func),
    Omega { prime: bool, idx: char },
}

fn classify_ident(s: &str, pos: usize) -> Result<Ident, DslError> {
    let lvl = |c: char| matches!(c, '0' | '1' | 'i');
    let chars: Vec<char> = s.chars().collect();
    Ok(match s {
        "phi" => Ident::Func(Func::Phi),
        "sig" => Ident::Func(Func::Sig { prime: false }),
        "sig'" => Ident::Func(Func::Sig { prime: true }),
        "d" => Ident::Func(Func::D { prime: false }),
        "d'" => Ident::Func(Func::D { prime: true }),
        _ if chars.len() == 2 && "xyzuvw".contains(chars[0]) && lvl(chars[1]) => Ident::Var(s.to_string()),
        _ if chars.len() == 2 && chars[0] == 'r' && lvl(chars[1]) => Ident::Func(Func::R(chars[1])),
        _ if chars.len() == 2 && chars[0] == 's' && lvl(chars[1]) => Ident::Func(Func::S(chars[1])),
        _ if s.starts_with("om") => {
            let rest: Vec<char> = s[2..].chars().collect();
            match rest.as_slice() {
                [c] if matches!(c, '0'..='3' | 'i') => Ident::Omega { prime: false, idx: *c },
                ['\'', c] if matches!(c, '0'..='3' | 'i') => Ident::Omega { prime: true, idx: *c },
                _ => return err(pos, format!("malformed ω symbol `{s}`")),
            }
        }
        _ => return err(pos, format!("unknown identifier `{s}`")),
    })
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.at).map(|t| &t.1)
    }
    fn pos(&self) -> usize {
        self.toks.get(self.at).map(|t| t.0).unwrap_or(self.end)
    }
    fn expect(&mut self, t: Tok, what: &str) -> Result<(), DslError> {
        if self.peek() == Some(&t) {
            self.at += 1;
            Ok(())
        } else {
            err(self.pos(), format!("expected {what}"))
        }
    }

    fn sum(&mut self) -> Result<Ast, DslError> {
        let mut terms = Vec::new();
        let mut negate = match self.peek() {
            Some(Tok::Minus) => {
                self.at += 1;
                true
            }
            Some(Tok::Plus) => {
                self.at += 1;
                false
            }
            _ => false,
        };
        loop {
            terms.push((negate, self.term()?));
            match self.peek() {
                Some(Tok::Plus) => negate = false,
                Some(Tok::Minus) => negate = true,
                _ => break,
            }
            self.at += 1;
        }
        Ok(if terms.len() == 1 && !terms[0].0 { terms.pop().unwrap().1 } else { Ast::Sum(terms) })
    }

    fn term(&mut self) -> Result<Ast, DslError> {
        let l = self.factor()?;
        if let Some(Tok::Op { sym, prime, idx }) = self.peek().cloned() {
            self.at += 1;
            let r = self.factor()?;
            if matches!(self.peek(), Some(Tok::Op { .. })) {
                return err(self.pos(), "chained infix maps need parentheses");
            }
            return Ok(Ast::Op { sym, prime, idx, l: Box::new(l), r: Box::new(r) });
        }
        Ok(l)
    }

    fn factor(&mut self) -> Result<Ast, DslError> {
        let pos = self.pos();
        let Some(t) = self.peek().cloned() else {
            return err(pos, "unexpected end of condition");
        };
        self.at += 1;
        match t {
            Tok::LParen => {
                let e = self.sum()?;
                self.expect(Tok::RParen, "`)`")?;
                Ok(e)
            }
            Tok::Zero => Ok(Ast::Zero),
            Tok::Ident(s) => match classify_ident(&s, pos)? {
                Ident::Var(v) => Ok(Ast::Var(v)),
                Ident::Func(f) => Ok(Ast::App { f, arg: Box::new(self.factor()?) }),
                Ident::Omega { prime, idx } => {
                    self.expect(Tok::LParen, "`(` after ω")?;
                    let a = self.sum()?;
                    self.expect(Tok::Comma, "`,` between ω arguments")?;
                    let b = self.sum()?;
                    self.expect(Tok::RParen, "`)` closing ω")?;
                    Ok(Ast::Op {
                        sym: Sym::Map(MapKind::Omega),
                        prime,
                        idx: Some(idx),
                        l: Box::new(a),
                        r: Box::new(b),
                    })
                }
            },
            other => err(pos, format!("unexpected token {other:?}")),
        }
    }
}

/// Parses a possibly multi-part condition into (lhs, rhs) pairs.
pub fn parse(src: &str) -> Result<Vec<(Ast, Ast)>, DslError> {
    let toks = lex(src)?;
    let mut p = Parser { toks, at: 0, end: src.len() };
    let mut eqs = Vec::new();
    loop {
        let l = p.sum()?;
        p.expect(Tok::Eq, "`=`")?;
        let r = p.sum()?;
        eqs.push((l, r));
        match p.peek() {
            None => break,
            Some(Tok::Semi) => p.at += 1,
            Some(_) => return err(p.pos(), "unexpected trailing input"),
        }
    }
    Ok(eqs)
}

impl Ast {
    pub fn is_generic(&self) -> bool {
        match self {
            Ast::Zero => false,
            Ast::Var(v) => v.ends_with('i'),
            Ast::Sum(ts) => ts.iter().any(|(_, t)| t.is_generic()),
            Ast::Op { idx, l, r, .. } => *idx == Some('i') || l.is_generic() || r.is_generic(),
            Ast::App { f, arg } => matches!(f, Func::R('i') | Func::S('i')) || arg.is_generic(),
        }
    }

    /// Replaces the generic level `i` by `level`.
    pub fn instantiate(&self, level: char) -> Ast {
        let fix = |c: char| if c == 'i' { level } else { c };
        match self {
            Ast::Zero => Ast::Zero,
            Ast::Var(v) => {
                let mut s: Vec<char> = v.chars().collect();
                let last = s.len() - 1;
                s[last] = fix(s[last]);
                Ast::Var(s.into_iter().collect())
            }
            Ast::Sum(ts) => Ast::Sum(ts.iter().map(|(n, t)| (*n, t.instantiate(level))).collect()),
            Ast::Op { sym, prime, idx, l, r } => Ast::Op {
                sym: *sym,
                prime: *prime,
                idx: idx.map(fix),
                l: Box::new(l.instantiate(level)),
                r: Box::new(r.instantiate(level)),
            },
            Ast::App { f, arg } => Ast::App {
                f: match f {
                    Func::R(c) => Func::R(fix(*c)),
                    Func::S(c) => Func::S(fix(*c)),
                    other => *other,
                },
                arg: Box::new(arg.instantiate(level)),
            },
        }
    }
}

/// A bilinear map available to conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BilRef {
    ZMult(u8),
    ZLeft,
    ZRight,
    Datum { kind: MapKind, j: u8, second: bool },
}

/// A linear map available to conditions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LinRef {
    Phi,
    Sigma { second: bool },
    D { second: bool },
    R(u8),
    S(u8),
}

/// The structures a compiled condition is evaluated against.
pub trait Env: Sync {
    fn field(&self) -> Field;
    fn dim(&self, s: Space) -> usize;
    fn bil(&self, b: BilRef) -> &BilMap;
    fn lin(&self, l: LinRef) -> &LinMap;
}

#[derive(Clone, Debug, PartialEq)]
pub enum Node {
    Zero,
    Var(usize),
    Sum(Vec<(bool, Node)>),
    Bil(BilRef, Box<Node>, Box<Node>),
    Lin(LinRef, Box<Node>),
}

/// One typed equation lhs = rhs in `space`, with variables in order of first use.
#[derive(Clone, Debug, PartialEq)]
pub struct Equation {
    pub vars: Vec<(String, Space)>,
    pub lhs: Node,
    pub rhs: Node,
    pub space: Space,
}

struct Typer {
    vars: Vec<(String, Space)>,
    two_data: bool,
}

fn level_of(c: char) -> Result<u8, String> {
    match c {
        '0' => Ok(0),
        '1' => Ok(1),
        '2' => Ok(2),
        '3' => Ok(3),
        _ => Err(format!("uninstantiated index `{c}`")),
    }
}

impl Typer {
    fn var(&mut self, name: &str) -> Result<(Node, Option<Space>), String> {
        let mut cs = name.chars();
        let k = cs.next().unwrap();
        let level = level_of(cs.next().unwrap())?;
        if level > 1 {
            return Err(format!("variable `{name}` has no level {level}"));
        }
        let kind = if "xyz".contains(k) { Kind::Z } else { Kind::V };
        let s = sp(kind, level);
        let i = match self.vars.iter().position(|(n, _)| n == name) {
            Some(i) => i,
            None => {
                self.vars.push((name.to_string(), s));
                self.vars.len() - 1
            }
        };
        Ok((Node::Var(i), Some(s)))
    }

    fn check_second(&self, second: bool) -> Result<(), String> {
        if second && !self.two_data {
            Err("primed symbol outside a two-datum condition".into())
        } else {
            Ok(())
        }
    }

    fn compile(&mut self, a: &Ast) -> Result<(Node, Option<Space>), String> {
        match a {
            Ast::Zero => Ok((Node::Zero, None)),
            Ast::Var(v) => self.var(v),
            Ast::Sum(ts) => {
                let mut space = None;
                let mut nodes = Vec::new();
                for (n, t) in ts {
                    let (node, s) = self.compile(t)?;
                    match (space, s) {
                        (Some(a), Some(b)) if a != b => {
                            return Err(format!("cannot add {a} and {b}"));
                        }
                        (None, Some(b)) => space = Some(b),
                        _ => {}
                    }
                    nodes.push((*n, node));
                }
                Ok((Node::Sum(nodes), space))
            }
            Ast::App { f, arg } => {
                let (node, s) = self.compile(arg)?;
                let s = s.ok_or("function applied to 0")?;
                let (lref, from, to) = match *f {
                    Func::Phi => (LinRef::Phi, sp(Kind::Z, 1), sp(Kind::Z, 0)),
                    Func::Sig { prime } => {
                        self.check_second(prime)?;
                        let k = if prime { Kind::W } else { Kind::V };
                        (LinRef::Sigma { second: prime }, sp(k, 1), sp(Kind::Z, 0))
                    }
                    Func::D { prime } => {
                        self.check_second(prime)?;
                        let k = if prime { Kind::W } else { Kind::V };
                        (LinRef::D { second: prime }, sp(k, 1), sp(k, 0))
                    }
                    Func::R(c) => {
                        self.check_second(true)?;
                        let l = level_of(c)?;
                        (LinRef::R(l), sp(Kind::V, l), sp(Kind::Z, l))
                    }
                    Func::S(c) => {
                        self.check_second(true)?;
                        let l = level_of(c)?;
                        (LinRef::S(l), sp(Kind::V, l), sp(Kind::W, l))
                    }
                };
                if s != from {
                    return Err(format!("{f:?} expects {from}, got {s}"));
                }
                Ok((Node::Lin(lref, Box::new(node)), Some(to)))
            }
            Ast::Op { sym, prime, idx, l, r } => {
                let (ln, ls) = self.compile(l)?;
                let (rn, rs) = self.compile(r)?;
                let (ls, rs) = match (ls, rs) {
                    (Some(a), Some(b)) => (a, b),
                    _ => return Err("infix map applied to 0".into()),
                };
                let (bref, out) = match sym {
                    Sym::Dot => {
                        let z = |l| sp(Kind::Z, l);
                        let r = if ls == z(0) && rs == z(0) {
                            (BilRef::ZMult(0), z(0))
                        } else if ls == z(1) && rs == z(1) {
                            (BilRef::ZMult(1), z(1))
                        } else if ls == z(0) && rs == z(1) {
                            (BilRef::ZLeft, z(1))
                        } else if ls == z(1) && rs == z(0) {
                            (BilRef::ZRight, z(1))
                        } else {
                            return Err(format!("`.` is not defined on {ls} × {rs}"));
                        };
                        r
                    }
                    Sym::Map(kind) => {
                        self.check_second(*prime)?;
                        let j = level_of(idx.unwrap())?;
                        let (la, lb, lo) = LEVELS[j as usize];
                        let (a, b, c) = kind.shape();
                        let vk = if *prime { Kind::W } else { Kind::V };
                        let mk = |is_v: bool, lvl: usize| sp(if is_v { vk } else { Kind::Z }, lvl as u8);
                        let (ea, eb, ec) = (mk(a, la), mk(b, lb), mk(c, lo));
                        if (ls, rs) != (ea, eb) {
                            return Err(format!(
                                "{}{j} expects {ea} × {eb}, got {ls} × {rs}",
                                kind.symbol()
                            ));
                        }
                        (BilRef::Datum { kind: *kind, j, second: *prime }, ec)
                    }
                };
                Ok((Node::Bil(bref, Box::new(ln), Box::new(rn)), Some(out)))
            }
        }
    }
}

/// Typechecks one equation.
pub fn compile_equation(lhs: &Ast, rhs: &Ast, two_data: bool) -> Result<Equation, String> {
    let mut t = Typer { vars: Vec::new(), two_data };
    let (l, ls) = t.compile(lhs)?;
    let (r, rs) = t.compile(rhs)?;
    let space = match (ls, rs) {
        (Some(a), Some(b)) if a != b => return Err(format!("sides live in {a} and {b}")),
        (Some(a), _) | (None, Some(a)) => a,
        (None, None) => return Err("both sides are 0".into()),
    };
    Ok(Equation { vars: t.vars, lhs: l, rhs: r, space })
}

impl Node {
    /// `None` stands for the zero vector of whatever space the node lives in.
    pub fn eval<E: Env + ?Sized>(&self, env: &E, vals: &[Vector]) -> Option<Vector> {
        match self {
            Node::Zero => None,
            Node::Var(i) => Some(vals[*i].clone()),
            Node::Sum(ts) => {
                let mut acc: Option<Vector> = None;
                for (n, t) in ts {
                    if let Some(v) = t.eval(env, vals) {
                        let v = if *n { neg(&v) } else { v };
                        match &mut acc {
                            Some(a) => add_into(a, &v),
                            None => acc = Some(v),
                        }
                    }
                }
                acc
            }
            Node::Bil(b, l, r) => {
                let m = env.bil(*b);
                match (l.eval(env, vals), r.eval(env, vals)) {
                    (Some(a), Some(c)) => Some(m.eval_vec(&a, &c)),
                    _ => None,
                }
            }
            Node::Lin(f, a) => a.eval(env, vals).map(|v| env.lin(*f).mul_vec(&v)),
        }
    }
}

impl Equation {
    pub fn dims<E: Env + ?Sized>(&self, env: &E) -> Vec<usize> {
        self.vars.iter().map(|(_, s)| env.dim(*s)).collect()
    }

    /// Both sides at the given variable values, with zeros filled in.
    pub fn sides<E: Env + ?Sized>(&self, env: &E, vals: &[Vector]) -> (Vector, Vector) {
        let n = env.dim(self.space);
        let z = || vec![env.field().zero(); n];
        (self.lhs.eval(env, vals).unwrap_or_else(z), self.rhs.eval(env, vals).unwrap_or_else(z))
    }

    /// lhs − rhs.
    pub fn residual<E: Env + ?Sized>(&self, env: &E, vals: &[Vector]) -> Vector {
        let (l, r) = self.sides(env, vals);
        l.iter().zip(&r).map(|(a, b)| a - b).collect::<Vec<Scalar>>()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_printed_forms() {
        for s in [
            "(x0 <-2 u1) . x1+( x0 |>2 u1) ->1 x1=x0 . (u1 ->1 x1+x1 <-1 u1)+x0 <-2 (u1 <|1 x1+x1 |>1 u1)",
            "phi om2(u0, u1) + sig(u0 *2 u1)=u0 ->0 sig(u1) + om0(u0, d(u1))",
            "x0 <-2 u1+r1(x0 |>2 u1)-x0 .' r1(u1)-x0 <-'2 s1(u1)=0",
        ] {
            let eqs = parse(s).unwrap();
            assert_eq!(eqs.len(), 1);
        }
    }

    #[test]
    fn rejects_noise() {
        assert!(parse(r"u0 <|0 \b0g( om0(v0, w0)\b0g)=0").is_err());
        assert!(parse("d(u1 *3 u0))= d(u1) *0 u0").is_err());
        assert!(parse("x0 . y0 . z0 = 0").is_err());
    }

    #[test]
    fn typechecks() {
        let eq = |s: &str, two| {
            let p = parse(s).unwrap();
            compile_equation(&p[0].0, &p[0].1, two)
        };
        assert!(eq("phi(x0) = x0", false).is_err());
        assert!(eq("x1 <-2 u1 = 0", false).is_err());
        let e = eq("(x0 . x1) <-1 u1=x0 . (x1 <-1 u1+u1 ->1 x1)", false).unwrap();
        assert_eq!(e.space, sp(Kind::Z, 1));
        assert_eq!(e.vars.len(), 3);
        assert!(eq("sig'(x1) = sig(u1)", true).is_err());
        assert!(eq("sig'(s1(u1)) = sig(u1)", true).is_ok());
        assert!(eq("sig'(s1(u1)) = sig(u1)", false).is_err());
    }

    #[test]
    fn generic_instantiation() {
        let p = parse("(xi <-i vi) . yi = xi . (vi ->i yi)").unwrap();
        assert!(p[0].0.is_generic());
        let l = p[0].0.instantiate('1');
        assert!(!l.is_generic());
        assert_eq!(
            l,
            Ast::Op {
                sym: Sym::Dot,
                prime: false,
                idx: None,
                l: Box::new(Ast::Op {
                    sym: Sym::Map(MapKind::HarpoonL),
                    prime: false,
                    idx: Some('1'),
                    l: Box::new(Ast::Var("x1".into())),
                    r: Box::new(Ast::Var("v1".into())),
                }),
                r: Box::new(Ast::Var("y1".into())),
            }
        );
    }
}
