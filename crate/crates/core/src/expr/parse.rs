//! Recursive-descent parser.
//!
//! ```text
//! expr    := term (('+' | '-') term)*
//! term    := unary (('*' | '/') unary)*
//! unary   := '-' unary | power
//! power   := primary ('^' exponent)?
//! exponent:= ['+' | '-'] INT ('^' exponent)?
//! primary := NUMBER | 's' | FUNC '(' expr ')' | '(' expr ')'
//! ```
//!
//! Unary minus binds looser than `^`, so `-s^2` is `-(s^2)`.

use super::{Expr, ExprError, Func};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(f64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
    text: String,
}

fn tokenize(text: &str) -> Result<Vec<Token>, ExprError> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let tok = match c {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'/' => Tok::Slash,
            b'^' => Tok::Caret,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'0'..=b'9' | b'.' => {
                while i < bytes.len() && (bytes[i].is_ascii_digit() || bytes[i] == b'.') {
                    i += 1;
                }
                if i < bytes.len() && (bytes[i] == b'e' || bytes[i] == b'E') {
                    let mut j = i + 1;
                    if j < bytes.len() && (bytes[j] == b'+' || bytes[j] == b'-') {
                        j += 1;
                    }
                    if j < bytes.len() && bytes[j].is_ascii_digit() {
                        while j < bytes.len() && bytes[j].is_ascii_digit() {
                            j += 1;
                        }
                        i = j;
                    }
                }
                let lit = &text[start..i];
                let v: f64 = lit.parse().map_err(|_| ExprError::Parse {
                    position: start,
                    message: format!("malformed number '{lit}'"),
                })?;
                if !v.is_finite() {
                    return Err(ExprError::Parse {
                        position: start,
                        message: format!("number '{lit}' is not finite"),
                    });
                }
                out.push(Token {
                    tok: Tok::Num(v),
                    pos: start,
                    text: lit.to_string(),
                });
                continue;
            }
            c if c.is_ascii_alphabetic() => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let id = &text[start..i];
                out.push(Token {
                    tok: Tok::Ident(id.to_string()),
                    pos: start,
                    text: id.to_string(),
                });
                continue;
            }
            _ => {
                let ch = text[start..].chars().next().unwrap_or('?');
                return Err(ExprError::Parse {
                    position: start,
                    message: format!("unexpected character '{ch}'"),
                });
            }
        };
        i += 1;
        out.push(Token {
            tok,
            pos: start,
            text: text[start..i].to_string(),
        });
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Token>,
    idx: usize,
    end: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.idx).map(|t| &t.tok)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.idx).map_or(self.end, |t| t.pos)
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.idx).cloned();
        self.idx += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> ExprError {
        ExprError::Parse {
            position: self.pos(),
            message: message.into(),
        }
    }

    fn unexpected(&self) -> ExprError {
        match self.toks.get(self.idx) {
            Some(t) => self.error(format!("unexpected '{}'", t.text)),
            None => self.error("unexpected end of input"),
        }
    }

    fn expr(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.bump();
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.bump();
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ExprError> {
        let mut lhs = self.unary()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.bump();
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
                }
                Some(Tok::Slash) => {
                    self.bump();
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.unary()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn unary(&mut self) -> Result<Expr, ExprError> {
        if self.peek() == Some(&Tok::Minus) {
            self.bump();
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.power()
    }

    fn power(&mut self) -> Result<Expr, ExprError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let n = self.exponent()?;
            return Ok(Expr::Pow(Box::new(base), n));
        }
        Ok(base)
    }

    fn exponent(&mut self) -> Result<i32, ExprError> {
        let pos = self.pos();
        let mut sign = 1;
        match self.peek() {
            Some(Tok::Minus) => {
                sign = -1;
                self.bump();
            }
            Some(Tok::Plus) => {
                self.bump();
            }
            _ => {}
        }
        let tok = match self.peek() {
            Some(Tok::Num(_)) => self.bump().expect("peeked"),
            Some(Tok::Ident(_)) | Some(Tok::LParen) => {
                return Err(ExprError::NonIntegerExponent { position: pos })
            }
            _ => return Err(self.unexpected()),
        };
        let n: i32 = tok
            .text
            .parse()
            .map_err(|_| ExprError::NonIntegerExponent { position: tok.pos })?;
        let mut n = sign * n;
        if self.peek() == Some(&Tok::Caret) {
            self.bump();
            let rhs = self.exponent()?;
            n = u32::try_from(rhs)
                .ok()
                .and_then(|r| n.checked_pow(r))
                .ok_or(ExprError::NonIntegerExponent { position: pos })?;
        }
        Ok(n)
    }

    fn primary(&mut self) -> Result<Expr, ExprError> {
        let pos = self.pos();
        match self.peek().cloned() {
            Some(Tok::Num(v)) => {
                self.bump();
                Ok(Expr::Num(v))
            }
            Some(Tok::Ident(name)) => {
                self.bump();
                if name == "s" {
                    return Ok(Expr::Var);
                }
                let func = Func::from_name(&name)
                    .ok_or(ExprError::UnknownFunction { name, position: pos })?;
                if self.peek() != Some(&Tok::LParen) {
                    return Err(self.error(format!("expected '(' after {}", func.name())));
                }
                self.bump();
                let arg = self.expr()?;
                self.expect_rparen()?;
                Ok(Expr::Func(func, Box::new(arg)))
            }
            Some(Tok::LParen) => {
                self.bump();
                let inner = self.expr()?;
                self.expect_rparen()?;
                Ok(inner)
            }
            _ => Err(self.unexpected()),
        }
    }

    fn expect_rparen(&mut self) -> Result<(), ExprError> {
        if self.peek() == Some(&Tok::RParen) {
            self.bump();
            Ok(())
        } else {
            Err(self.error("expected ')'"))
        }
    }
}

/// Parses an expression in the variable `s`.
pub fn parse(text: &str) -> Result<Expr, ExprError> {
    let toks = tokenize(text)?;
    if toks.is_empty() {
        return Err(ExprError::Parse {
            position: 0,
            message: "empty expression".into(),
        });
    }
    let mut p = Parser {
        toks,
        idx: 0,
        end: text.len(),
    };
    let e = p.expr()?;
    if p.idx < p.toks.len() {
        return Err(p.unexpected());
    }
    Ok(e)
}
