use std::fmt;

use crate::ast::Pos;
use crate::error::DslError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Tok {
    Ident(String),
    Number(u64),
    Str(String),
    LParen,
    RParen,
    Comma,
    Semi,
    Eq,
    Arrow,
    Eof,
}

impl fmt::Display for Tok {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tok::Ident(s) => write!(f, "`{s}`"),
            Tok::Number(n) => write!(f, "`{n}`"),
            Tok::Str(s) => write!(f, "{s:?}"),
            Tok::LParen => f.write_str("`(`"),
            Tok::RParen => f.write_str("`)`"),
            Tok::Comma => f.write_str("`,`"),
            Tok::Semi => f.write_str("`;`"),
            Tok::Eq => f.write_str("`=`"),
            Tok::Arrow => f.write_str("`->`"),
            Tok::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub pos: Pos,
}

pub fn lex(src: &str) -> Result<Vec<Token>, DslError> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    let (mut line, mut col) = (1, 1);
    macro_rules! bump {
        () => {{
            let c = chars.next();
            if c == Some('\n') {
                line += 1;
                col = 1;
            } else if c.is_some() {
                col += 1;
            }
            c
        }};
    }
    while let Some(&c) = chars.peek() {
        let pos = Pos { line, col };
        let syntax = |found: String, expected: &[&str]| DslError::Syntax {
            pos,
            found,
            expected: expected.iter().map(|s| s.to_string()).collect(),
        };
        let tok = match c {
            _ if c.is_whitespace() => {
                bump!();
                continue;
            }
            '#' => {
                while chars.peek().is_some_and(|&c| c != '\n') {
                    bump!();
                }
                continue;
            }
            '(' | ')' | ',' | ';' | '=' => {
                bump!();
                match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    ',' => Tok::Comma,
                    ';' => Tok::Semi,
                    _ => Tok::Eq,
                }
            }
            '-' => {
                bump!();
                if chars.peek() != Some(&'>') {
                    return Err(syntax("`-`".into(), &["`->`"]));
                }
                bump!();
                Tok::Arrow
            }
            '"' => {
                bump!();
                let mut s = String::new();
                loop {
                    match bump!() {
                        None => return Err(syntax("end of input".into(), &["`\"`"])),
                        Some('"') => break,
                        Some('\\') => match bump!() {
                            Some(e @ ('"' | '\\')) => s.push(e),
                            other => {
                                return Err(syntax(format!("{other:?}"), &["`\\\"`", "`\\\\`"]));
                            }
                        },
                        Some(ch) => s.push(ch),
                    }
                }
                Tok::Str(s)
            }
            _ if c.is_ascii_digit() => {
                let mut s = String::new();
                while chars.peek().is_some_and(|c| c.is_ascii_digit()) {
                    s.push(bump!().unwrap());
                }
                Tok::Number(s.parse().map_err(|_| syntax(format!("`{s}`"), &["a smaller number"]))?)
            }
            _ if c.is_alphabetic() || c == '_' => {
                let mut s = String::new();
                while chars.peek().is_some_and(|&c| c.is_alphanumeric() || c == '_' || c == '\'') {
                    s.push(bump!().unwrap());
                }
                Tok::Ident(s)
            }
            _ => return Err(syntax(format!("`{c}`"), &["a statement"])),
        };
        out.push(Token { tok, pos });
    }
    out.push(Token {
        tok: Tok::Eof,
        pos: Pos { line, col },
    });
    Ok(out)
}
