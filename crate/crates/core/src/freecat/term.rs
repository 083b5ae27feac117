//! Syntax of cells of a free category: generators, identities and binary
//! composites with an explicit index.

use std::fmt;

use crate::{Error, Result};

/// A composition expression over the generators of a polygraph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Gen(String),
    Id(Box<Term>),
    Comp(usize, Box<Term>, Box<Term>),
}

impl Term {
    pub fn gen(name: &str) -> Term {
        Term::Gen(name.to_string())
    }

    pub fn id(t: Term) -> Term {
        Term::Id(Box::new(t))
    }

    pub fn comp(i: usize, l: Term, r: Term) -> Term {
        Term::Comp(i, Box::new(l), Box::new(r))
    }

    fn fmt_prec(&self, f: &mut fmt::Formatter<'_>, prec: usize) -> fmt::Result {
        match self {
            Term::Gen(g) => write!(f, "{g}"),
            Term::Id(t) => {
                write!(f, "id(")?;
                t.fmt_prec(f, 0)?;
                write!(f, ")")
            }
            Term::Comp(i, l, r) => {
                // `*j` binds tighter than `*i` for j > i, and composition is
                // left-associative, so the right operand is printed at one
                // level higher.
                let parens = *i < prec;
                if parens {
                    write!(f, "(")?;
                }
                l.fmt_prec(f, *i)?;
                write!(f, " *{i} ")?;
                r.fmt_prec(f, i + 1)?;
                if parens {
                    write!(f, ")")?;
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_prec(f, 0)
    }
}

/// Tokens of the term and polygraph-file syntax. Identifiers are arbitrary
/// non-empty words over characters other than whitespace and the reserved
/// `* : ( ) ,`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Token {
    Ident(String),
    Star(usize),
    LParen,
    RParen,
    Colon,
    Comma,
    Arrow,
}

#[derive(Debug, Clone)]
pub struct Spanned {
    pub token: Token,
    pub line: usize,
    pub col: usize,
}

fn is_reserved(c: char) -> bool {
    matches!(c, '*' | ':' | '(' | ')' | ',')
}

/// Tokenizes one line of input. `line` is the 1-based line number reported in
/// errors.
pub fn tokenize(input: &str, line: usize) -> Result<Vec<Spanned>> {
    let mut out = Vec::new();
    let chars: Vec<char> = input.chars().collect();
    let mut pos = 0;
    while pos < chars.len() {
        let col = pos + 1;
        let c = chars[pos];
        if c.is_whitespace() {
            pos += 1;
            continue;
        }
        match c {
            '(' => {
                out.push(Spanned { token: Token::LParen, line, col });
                pos += 1;
            }
            ')' => {
                out.push(Spanned { token: Token::RParen, line, col });
                pos += 1;
            }
            ':' => {
                out.push(Spanned { token: Token::Colon, line, col });
                pos += 1;
            }
            ',' => {
                out.push(Spanned { token: Token::Comma, line, col });
                pos += 1;
            }
            '*' => {
                let mut end = pos + 1;
                while end < chars.len() && chars[end].is_ascii_digit() {
                    end += 1;
                }
                if end == pos + 1 {
                    return Err(Error::Parse {
                        line,
                        col,
                        msg: "`*` must be followed by a composition index".into(),
                    });
                }
                let digits: String = chars[pos + 1..end].iter().collect();
                let i = digits.parse().map_err(|_| Error::Parse {
                    line,
                    col,
                    msg: format!("invalid composition index `{digits}`"),
                })?;
                out.push(Spanned { token: Token::Star(i), line, col });
                pos = end;
            }
            _ => {
                let mut end = pos;
                while end < chars.len() && !chars[end].is_whitespace() && !is_reserved(chars[end]) {
                    end += 1;
                }
                let word: String = chars[pos..end].iter().collect();
                // `->` separates boundaries in polygraph files; it would
                // otherwise lex as an identifier.
                if let Some(idx) = word.find("->") {
                    if idx > 0 {
                        out.push(Spanned {
                            token: Token::Ident(word[..idx].to_string()),
                            line,
                            col,
                        });
                    }
                    out.push(Spanned { token: Token::Arrow, line, col: col + idx });
                    let rest = &word[idx + 2..];
                    if !rest.is_empty() {
                        out.push(Spanned {
                            token: Token::Ident(rest.to_string()),
                            line,
                            col: col + idx + 2,
                        });
                    }
                } else {
                    out.push(Spanned { token: Token::Ident(word), line, col });
                }
                pos = end;
            }
        }
    }
    Ok(out)
}

/// A cursor over a token stream, shared by the term and polygraph parsers.
pub struct Cursor<'a> {
    tokens: &'a [Spanned],
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    pub fn new(tokens: &'a [Spanned], line: usize) -> Self {
        Cursor { tokens, pos: 0, line }
    }

    pub fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos).map(|s| &s.token)
    }

    pub fn next(&mut self) -> Option<&Spanned> {
        let t = self.tokens.get(self.pos);
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    pub fn at_end(&self) -> bool {
        self.pos >= self.tokens.len()
    }

    pub fn error(&self, msg: impl Into<String>) -> Error {
        let col = self
            .tokens
            .get(self.pos)
            .map(|s| s.col)
            .unwrap_or_else(|| self.tokens.last().map(|s| s.col + 1).unwrap_or(1));
        Error::Parse { line: self.line, col, msg: msg.into() }
    }

    pub fn expect_end(&self) -> Result<()> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }

    /// Parses a term starting at the cursor.
    pub fn term(&mut self) -> Result<Term> {
        self.term_bp(0)
    }

    fn term_bp(&mut self, min_bp: usize) -> Result<Term> {
        let mut lhs = self.atom()?;
        while let Some(Token::Star(i)) = self.peek() {
            let i = *i;
            if i < min_bp {
                break;
            }
            self.next();
            let rhs = self.term_bp(i + 1)?;
            lhs = Term::comp(i, lhs, rhs);
        }
        Ok(lhs)
    }

    fn atom(&mut self) -> Result<Term> {
        match self.peek() {
            Some(Token::LParen) => {
                self.next();
                let t = self.term_bp(0)?;
                match self.peek() {
                    Some(Token::RParen) => {
                        self.next();
                        Ok(t)
                    }
                    _ => Err(self.error("expected `)`")),
                }
            }
            Some(Token::Ident(name)) if name == "id" => {
                self.next();
                match self.peek() {
                    Some(Token::LParen) => {
                        self.next();
                        let t = self.term_bp(0)?;
                        match self.peek() {
                            Some(Token::RParen) => {
                                self.next();
                                Ok(Term::id(t))
                            }
                            _ => Err(self.error("expected `)` after id argument")),
                        }
                    }
                    _ => Err(self.error("expected `(` after `id`")),
                }
            }
            Some(Token::Ident(name)) => {
                let t = Term::gen(name);
                self.next();
                Ok(t)
            }
            _ => Err(self.error("expected a term")),
        }
    }
}

/// Parses a complete term from one line of text.
pub fn parse_term(input: &str) -> Result<Term> {
    parse_term_at(input, 1)
}

/// Parses a complete term, reporting errors at the given line number.
pub fn parse_term_at(input: &str, line: usize) -> Result<Term> {
    let tokens = tokenize(input, line)?;
    if tokens.is_empty() {
        return Err(Error::Parse { line, col: 1, msg: "empty term".into() });
    }
    let mut cur = Cursor::new(&tokens, line);
    let t = cur.term()?;
    cur.expect_end()?;
    Ok(t)
}
