//! Lexer and recursive-descent parser for the calculator language.
//!
//! Element literals follow the grammar
//!
//! ```text
//! element := "[" tree "|" braid twists? "|" tree "]"
//! tree    := bitstring          (preorder, 1 = caret, 0 = leaf)
//! braid   := "e" | letter+
//! letter  := "s" digits ("^" int)?
//! twists  := "(" int ("," int)* ")"
//! ```
//!
//! with the left (range) tree first and omitted twists meaning all zeros.
//! Statements are separated by `;` or newlines; `#` starts a comment.

use std::str::FromStr;

use braidthom_core::{BraidWord, Element, NamedElement, RibbonBraid, SubgroupTag, Suite, Tree};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    LBracket,
    RBracket,
    LParen,
    RParen,
    Pipe,
    Comma,
    Equals,
    Separator,
    Caret,
    Atom(String),
}

#[derive(Debug, Clone)]
struct Spanned {
    tok: Token,
    pos: usize,
}

fn syntax(pos: usize, msg: impl Into<String>) -> CliError {
    CliError::Syntax {
        pos,
        msg: msg.into(),
    }
}

fn lex(src: &str) -> Vec<Spanned> {
    let mut out = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        let tok = match c {
            '#' => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
                continue;
            }
            '\n' | ';' => Some(Token::Separator),
            ' ' | '\t' | '\r' => None,
            '[' => Some(Token::LBracket),
            ']' => Some(Token::RBracket),
            '(' => Some(Token::LParen),
            ')' => Some(Token::RParen),
            '|' => Some(Token::Pipe),
            ',' => Some(Token::Comma),
            '=' => Some(Token::Equals),
            '^' => Some(Token::Caret),
            _ => {
                let start = i;
                while i < bytes.len() && !b"[]()|,=;^# \t\r\n".contains(&bytes[i]) {
                    i += 1;
                }
                out.push(Spanned {
                    tok: Token::Atom(src[start..i].to_string()),
                    pos: start,
                });
                continue;
            }
        };
        if let Some(tok) = tok {
            out.push(Spanned { tok, pos: i });
        }
        i += 1;
    }
    out
}

/// Expressions of the calculator language.
#[derive(Debug, Clone)]
pub enum Expr {
    Literal(Element),
    Var(String),
    Named(NamedElement),
    Inv(Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Reduce(Box<Expr>),
    Expand(usize, Box<Expr>),
    Eq(Box<Expr>, Box<Expr>),
    Member(SubgroupTag, Box<Expr>),
    Chi1(Box<Expr>),
    Chi0(Box<Expr>),
    Project(Box<Expr>),
    Hnn(Box<Expr>),
    LeftPart(Box<Expr>),
}

/// Statements: bindings, bare expressions, and session commands.
#[derive(Debug, Clone)]
pub enum Stmt {
    Let(String, Expr),
    Expr(Expr),
    Svg(String, Expr),
    Verify {
        suite: Suite,
        trials: Option<usize>,
        seed: Option<u64>,
    },
    Save(String),
    Load(String),
    Quit,
}

const KEYWORDS: &[&str] = &[
    "named", "inv", "mul", "eq", "reduce", "member", "chi1", "chi0", "project", "hnn", "leftpart",
    "expand", "svg", "verify", "save", "load", "quit", "exit",
];

struct Parser {
    tokens: Vec<Spanned>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(src: &str) -> Parser {
        Parser {
            tokens: lex(src),
            at: 0,
            end: src.len(),
        }
    }

    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at).map(|s| &s.tok)
    }

    fn pos(&self) -> usize {
        self.tokens.get(self.at).map_or(self.end, |s| s.pos)
    }

    fn bump(&mut self) -> Option<Spanned> {
        let s = self.tokens.get(self.at).cloned();
        if s.is_some() {
            self.at += 1;
        }
        s
    }

    fn expect(&mut self, tok: Token, what: &str) -> Result<(), CliError> {
        match self.peek() {
            Some(t) if *t == tok => {
                self.at += 1;
                Ok(())
            }
            _ => Err(syntax(self.pos(), format!("expected {what}"))),
        }
    }

    fn atom(&mut self, what: &str) -> Result<(String, usize), CliError> {
        let pos = self.pos();
        match self.bump() {
            Some(Spanned {
                tok: Token::Atom(a),
                pos,
            }) => Ok((a, pos)),
            _ => Err(syntax(pos, format!("expected {what}"))),
        }
    }

    fn int(&mut self, what: &str) -> Result<i64, CliError> {
        let (a, pos) = self.atom(what)?;
        a.parse::<i64>()
            .map_err(|_| syntax(pos, format!("expected {what}, found `{a}`")))
    }

    fn skip_separators(&mut self) {
        while matches!(self.peek(), Some(Token::Separator)) {
            self.at += 1;
        }
    }

    /// `[ tree | braid twists? | tree ]`, cursor on `[`.
    fn element(&mut self) -> Result<Element, CliError> {
        self.expect(Token::LBracket, "`[`")?;
        let (left_s, left_pos) = self.atom("a tree bitstring")?;
        let left = Tree::parse(&left_s).map_err(|e| syntax(left_pos, e.to_string()))?;
        self.expect(Token::Pipe, "`|`")?;
        let n = left.leaf_count();
        let mut pairs: Vec<(usize, i64)> = Vec::new();
        let mut saw_e = false;
        loop {
            match self.peek() {
                Some(Token::Atom(a)) if a == "e" && pairs.is_empty() && !saw_e => {
                    saw_e = true;
                    self.at += 1;
                }
                Some(Token::Atom(a)) if a.starts_with('s') => {
                    let (a, pos) = self.atom("a braid letter")?;
                    let index = a[1..]
                        .parse::<usize>()
                        .map_err(|_| syntax(pos, format!("bad braid letter `{a}`")))?;
                    let exp = if matches!(self.peek(), Some(Token::Caret)) {
                        self.at += 1;
                        self.int("an exponent")?
                    } else {
                        1
                    };
                    pairs.push((index, exp));
                }
                _ => break,
            }
        }
        if pairs.is_empty() && !saw_e {
            return Err(syntax(self.pos(), "expected a braid word (`e` or letters)"));
        }
        let twists = if matches!(self.peek(), Some(Token::LParen)) {
            self.at += 1;
            let mut t = vec![self.int("a twist integer")?];
            while matches!(self.peek(), Some(Token::Comma)) {
                self.at += 1;
                t.push(self.int("a twist integer")?);
            }
            self.expect(Token::RParen, "`)`")?;
            t
        } else {
            vec![0; n]
        };
        self.expect(Token::Pipe, "`|`")?;
        let (right_s, right_pos) = self.atom("a tree bitstring")?;
        let right = Tree::parse(&right_s).map_err(|e| syntax(right_pos, e.to_string()))?;
        self.expect(Token::RBracket, "`]`")?;
        let braid = BraidWord::from_pairs(n.max(1), &pairs).map_err(CliError::Domain)?;
        let rb = RibbonBraid::new(braid, twists).map_err(CliError::Domain)?;
        Element::new(left, rb, right).map_err(CliError::Domain)
    }

    fn expr(&mut self) -> Result<Expr, CliError> {
        let pos = self.pos();
        match self.peek() {
            Some(Token::LBracket) => Ok(Expr::Literal(self.element()?)),
            Some(Token::LParen) => {
                self.at += 1;
                let inner = self.expr()?;
                self.expect(Token::RParen, "`)`")?;
                Ok(inner)
            }
            Some(Token::Atom(_)) => {
                let (word, pos) = self.atom("an expression")?;
                match word.as_str() {
                    "named" => {
                        let (tag, tpos) = self.atom("a named element tag")?;
                        let tag = NamedElement::from_str(&tag)
                            .map_err(|e| syntax(tpos, e.to_string()))?;
                        Ok(Expr::Named(tag))
                    }
                    "inv" => Ok(Expr::Inv(Box::new(self.expr()?))),
                    "mul" => {
                        let a = self.expr()?;
                        let b = self.expr()?;
                        Ok(Expr::Mul(Box::new(a), Box::new(b)))
                    }
                    "reduce" => Ok(Expr::Reduce(Box::new(self.expr()?))),
                    "expand" => {
                        let k = self.int("a leaf index")?;
                        if k < 1 {
                            return Err(syntax(pos, "leaf index must be at least 1"));
                        }
                        Ok(Expr::Expand(k as usize, Box::new(self.expr()?)))
                    }
                    "eq" => {
                        let a = self.expr()?;
                        let b = self.expr()?;
                        Ok(Expr::Eq(Box::new(a), Box::new(b)))
                    }
                    "member" => {
                        let (tag, tpos) = self.atom("a subgroup tag")?;
                        let tag =
                            SubgroupTag::from_str(&tag).map_err(|e| syntax(tpos, e.to_string()))?;
                        Ok(Expr::Member(tag, Box::new(self.expr()?)))
                    }
                    "chi1" => Ok(Expr::Chi1(Box::new(self.expr()?))),
                    "chi0" => Ok(Expr::Chi0(Box::new(self.expr()?))),
                    "project" => Ok(Expr::Project(Box::new(self.expr()?))),
                    "hnn" => Ok(Expr::Hnn(Box::new(self.expr()?))),
                    "leftpart" => Ok(Expr::LeftPart(Box::new(self.expr()?))),
                    _ if KEYWORDS.contains(&word.as_str()) => {
                        Err(syntax(pos, format!("`{word}` is not valid here")))
                    }
                    _ => Ok(Expr::Var(word)),
                }
            }
            _ => Err(syntax(pos, "expected an expression")),
        }
    }

    fn stmt(&mut self) -> Result<Stmt, CliError> {
        if let Some(Token::Atom(word)) = self.peek() {
            let word = word.clone();
            match word.as_str() {
                "save" | "load" => {
                    self.at += 1;
                    let (path, _) = self.atom("a file path")?;
                    return Ok(if word == "save" {
                        Stmt::Save(path)
                    } else {
                        Stmt::Load(path)
                    });
                }
                "quit" | "exit" => {
                    self.at += 1;
                    return Ok(Stmt::Quit);
                }
                "svg" => {
                    self.at += 1;
                    let (path, _) = self.atom("an output path")?;
                    let expr = self.expr()?;
                    return Ok(Stmt::Svg(path, expr));
                }
                "verify" => {
                    self.at += 1;
                    let (name, npos) = self.atom("a suite name")?;
                    let suite = Suite::from_str(&name).map_err(|e| syntax(npos, e.to_string()))?;
                    let mut trials = None;
                    let mut seed = None;
                    if let Some(Token::Atom(a)) = self.peek() {
                        if a.parse::<usize>().is_ok() {
                            trials = Some(self.int("a trial count")? as usize);
                            if let Some(Token::Atom(a)) = self.peek() {
                                if a.parse::<u64>().is_ok() {
                                    seed = Some(self.int("a seed")? as u64);
                                }
                            }
                        }
                    }
                    return Ok(Stmt::Verify {
                        suite,
                        trials,
                        seed,
                    });
                }
                _ => {
                    if !KEYWORDS.contains(&word.as_str())
                        && matches!(
                            self.tokens.get(self.at + 1).map(|s| &s.tok),
                            Some(Token::Equals)
                        )
                    {
                        self.at += 2;
                        let expr = self.expr()?;
                        return Ok(Stmt::Let(word, expr));
                    }
                }
            }
        }
        Ok(Stmt::Expr(self.expr()?))
    }

    fn program(&mut self) -> Result<Vec<Stmt>, CliError> {
        let mut stmts = Vec::new();
        self.skip_separators();
        while self.peek().is_some() {
            stmts.push(self.stmt()?);
            match self.peek() {
                None => break,
                Some(Token::Separator) => self.skip_separators(),
                _ => return Err(syntax(self.pos(), "expected `;` or end of line")),
            }
        }
        Ok(stmts)
    }
}

/// Parse a full program (statements separated by `;` or newlines).
pub fn parse_program(src: &str) -> Result<Vec<Stmt>, CliError> {
    Parser::new(src).program()
}

/// Parse a standalone element literal; the whole input must be the literal.
pub fn parse_element(src: &str) -> Result<Element, CliError> {
    let mut p = Parser::new(src);
    let e = p.element()?;
    p.skip_separators();
    if p.peek().is_some() {
        return Err(syntax(p.pos(), "trailing input after element literal"));
    }
    Ok(e)
}

/// Line and column (1-based) of a byte offset, for error reporting.
pub fn line_col(src: &str, pos: usize) -> (usize, usize) {
    let clamped = pos.min(src.len());
    let mut line = 1;
    let mut col = 1;
    for (i, c) in src.char_indices() {
        if i >= clamped {
            break;
        }
        if c == '\n' {
            line += 1;
            col = 1;
        } else {
            col += 1;
        }
    }
    (line, col)
}
