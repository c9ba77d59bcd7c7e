//! Reader and writer for the PGSolver text format.
//!
//! ```text
//! parity <max-id>;
//! <id> <priority> <owner> <succ>(,<succ>)* ["name"];
//! ```
//!
//! Owner `0` is Even, `1` is Odd. `--` starts a comment running to the end of
//! the line. Vertex ids are remapped to `0..n` in declaration order and the
//! priorities are normalized into `1..=d`.

use std::collections::HashMap;
use std::fmt::Write as _;

use thiserror::Error;

use super::{GameError, GameGraph, Player};

/// Parse failure with a 1-based source position.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Nat(u64),
    Word(String),
    Str,
    Comma,
    Semi,
}

#[derive(Debug, Clone)]
struct Spanned {
    token: Token,
    line: usize,
    column: usize,
}

struct Lexer<'a> {
    bytes: &'a [u8],
    pos: usize,
    line: usize,
    column: usize,
}

impl<'a> Lexer<'a> {
    fn new(bytes: &'a [u8]) -> Self {
        Lexer {
            bytes,
            pos: 0,
            line: 1,
            column: 1,
        }
    }

    fn bump(&mut self) -> Option<u8> {
        let b = *self.bytes.get(self.pos)?;
        self.pos += 1;
        if b == b'\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(b)
    }

    fn peek(&self, ahead: usize) -> Option<u8> {
        self.bytes.get(self.pos + ahead).copied()
    }

    fn error(&self, line: usize, column: usize, message: impl Into<String>) -> ParseError {
        ParseError {
            line,
            column,
            message: message.into(),
        }
    }

    fn tokens(mut self) -> Result<Vec<Spanned>, ParseError> {
        let mut out = Vec::new();
        while let Some(b) = self.peek(0) {
            let (line, column) = (self.line, self.column);
            let token = match b {
                b if b.is_ascii_whitespace() => {
                    self.bump();
                    continue;
                }
                b'-' if self.peek(1) == Some(b'-') => {
                    while let Some(c) = self.bump() {
                        if c == b'\n' {
                            break;
                        }
                    }
                    continue;
                }
                b'0'..=b'9' => {
                    let mut value: u64 = 0;
                    while let Some(d @ b'0'..=b'9') = self.peek(0) {
                        value = value
                            .checked_mul(10)
                            .and_then(|v| v.checked_add(u64::from(d - b'0')))
                            .ok_or_else(|| self.error(line, column, "number too large"))?;
                        self.bump();
                    }
                    Token::Nat(value)
                }
                b'a'..=b'z' | b'A'..=b'Z' | b'_' => {
                    let start = self.pos;
                    while matches!(self.peek(0), Some(c) if c.is_ascii_alphanumeric() || c == b'_')
                    {
                        self.bump();
                    }
                    Token::Word(String::from_utf8_lossy(&self.bytes[start..self.pos]).into_owned())
                }
                b'"' => {
                    self.bump();
                    loop {
                        match self.bump() {
                            Some(b'"') => break,
                            Some(b'\\') => {
                                self.bump();
                            }
                            Some(_) => {}
                            None => return Err(self.error(line, column, "unterminated string")),
                        }
                    }
                    Token::Str
                }
                b',' => {
                    self.bump();
                    Token::Comma
                }
                b';' => {
                    self.bump();
                    Token::Semi
                }
                other => {
                    return Err(self.error(
                        line,
                        column,
                        format!("unexpected character {:?}", other as char),
                    ))
                }
            };
            out.push(Spanned {
                token,
                line,
                column,
            });
        }
        Ok(out)
    }
}

struct Parser {
    tokens: Vec<Spanned>,
    pos: usize,
    eof: (usize, usize),
}

impl Parser {
    fn peek(&self) -> Option<&Spanned> {
        self.tokens.get(self.pos)
    }

    fn next(&mut self) -> Option<Spanned> {
        let t = self.tokens.get(self.pos).cloned();
        self.pos += 1;
        t
    }

    fn here(&self) -> (usize, usize) {
        self.peek().map_or(self.eof, |t| (t.line, t.column))
    }

    fn fail<T>(&self, message: impl Into<String>) -> Result<T, ParseError> {
        let (line, column) = self.here();
        Err(ParseError {
            line,
            column,
            message: message.into(),
        })
    }

    fn nat(&mut self, what: &str) -> Result<(u64, usize, usize), ParseError> {
        match self.peek() {
            Some(Spanned {
                token: Token::Nat(v),
                line,
                column,
            }) => {
                let r = (*v, *line, *column);
                self.pos += 1;
                Ok(r)
            }
            Some(t) => {
                let found = describe(&t.token);
                self.fail(format!("expected {what}, found {found}"))
            }
            None => self.fail(format!("expected {what}, found end of input")),
        }
    }

    fn semi(&mut self) -> Result<(), ParseError> {
        match self.peek().map(|t| &t.token) {
            Some(Token::Semi) => {
                self.pos += 1;
                Ok(())
            }
            Some(t) => {
                let found = describe(t);
                self.fail(format!("expected ';', found {found}"))
            }
            None => self.fail("expected ';', found end of input"),
        }
    }
}

fn describe(t: &Token) -> String {
    match t {
        Token::Nat(v) => format!("number {v}"),
        Token::Word(w) => format!("'{w}'"),
        Token::Str => "string".into(),
        Token::Comma => "','".into(),
        Token::Semi => "';'".into(),
    }
}

struct Record {
    id: u64,
    priority: u64,
    owner: Player,
    successors: Vec<(u64, usize, usize)>,
}

/// Parses a PGSolver description into a normalized [`GameGraph`].
pub fn parse_pgsolver(text: &[u8]) -> Result<GameGraph, ParseError> {
    let tokens = Lexer::new(text).tokens()?;
    let eof = tokens.last().map_or((1, 1), |t| (t.line, t.column + 1));
    let mut p = Parser {
        tokens,
        pos: 0,
        eof,
    };

    // Headers: `parity <n>;` and the occasional `start <v>;`.
    while let Some(Spanned {
        token: Token::Word(w),
        ..
    }) = p.peek()
    {
        match w.as_str() {
            "parity" | "start" => {
                p.next();
                p.nat("a number")?;
                p.semi()?;
            }
            other => {
                let other = other.to_owned();
                return p.fail(format!("unknown header '{other}'"));
            }
        }
    }

    let mut records: Vec<Record> = Vec::new();
    let mut index: HashMap<u64, usize> = HashMap::new();
    while p.peek().is_some() {
        let (id, line, column) = p.nat("vertex id")?;
        if index.insert(id, records.len()).is_some() {
            return Err(ParseError {
                line,
                column,
                message: format!("duplicate vertex id {id}"),
            });
        }
        let (priority, ..) = p.nat("priority")?;
        let (owner_code, ol, oc) = p.nat("owner")?;
        let owner = match owner_code {
            0 => Player::Even,
            1 => Player::Odd,
            other => {
                return Err(ParseError {
                    line: ol,
                    column: oc,
                    message: format!("owner must be 0 or 1, found {other}"),
                })
            }
        };
        let mut successors = Vec::new();
        if let Some(Spanned {
            token: Token::Nat(_),
            ..
        }) = p.peek()
        {
            successors.push(p.nat("successor")?);
            while let Some(Spanned {
                token: Token::Comma,
                ..
            }) = p.peek()
            {
                p.next();
                successors.push(p.nat("successor")?);
            }
        }
        if successors.is_empty() {
            return Err(ParseError {
                line,
                column,
                message: format!("vertex {id} has no successors"),
            });
        }
        if let Some(Spanned {
            token: Token::Str, ..
        }) = p.peek()
        {
            p.next();
        }
        p.semi()?;
        records.push(Record {
            id,
            priority,
            owner,
            successors,
        });
    }

    if records.is_empty() {
        return p.fail("no vertices declared");
    }

    let mut owners = Vec::with_capacity(records.len());
    let mut raw = Vec::with_capacity(records.len());
    let mut succ = Vec::with_capacity(records.len());
    for r in &records {
        let priority = u32::try_from(r.priority).map_err(|_| ParseError {
            line: 0,
            column: 0,
            message: format!("priority of vertex {} too large", r.id),
        })?;
        let mut targets = Vec::with_capacity(r.successors.len());
        for &(s, line, column) in &r.successors {
            let Some(&t) = index.get(&s) else {
                return Err(ParseError {
                    line,
                    column,
                    message: format!("vertex {} has undeclared successor {s}", r.id),
                });
            };
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        owners.push(r.owner);
        raw.push(priority);
        succ.push(targets);
    }
    GameGraph::from_raw(owners, &raw, succ).map_err(|e: GameError| ParseError {
        line: 0,
        column: 0,
        message: e.to_string(),
    })
}

/// Writes `g` with a `parity` header, vertices in id order and no names.
pub fn serialize_pgsolver(g: &GameGraph) -> Vec<u8> {
    let mut out = String::new();
    let _ = writeln!(out, "parity {};", g.vertex_count() - 1);
    for v in g.vertices() {
        let succ: Vec<String> = g.successors(v).iter().map(usize::to_string).collect();
        let _ = writeln!(
            out,
            "{v} {} {} {};",
            g.priority(v),
            g.owner(v).code(),
            succ.join(",")
        );
    }
    out.into_bytes()
}
