//! Syntax tree of the DSL.

use std::fmt;

/// The object kind introduced by a definition keyword.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Kind {
    Ring,
    Ideal,
    Hom,
    Module,
    Amalgam,
    Pullback,
    Subring,
}

impl Kind {
    pub const ALL: [Kind; 7] = [
        Kind::Ring,
        Kind::Ideal,
        Kind::Hom,
        Kind::Module,
        Kind::Amalgam,
        Kind::Pullback,
        Kind::Subring,
    ];

    pub fn keyword(self) -> &'static str {
        match self {
            Kind::Ring => "ring",
            Kind::Ideal => "ideal",
            Kind::Hom => "hom",
            Kind::Module => "module",
            Kind::Amalgam => "amalgam",
            Kind::Pullback => "pullback",
            Kind::Subring => "subring",
        }
    }

    pub fn from_keyword(word: &str) -> Option<Kind> {
        Kind::ALL.into_iter().find(|k| k.keyword() == word)
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// `func(g1; g2; ...)` where each group is a comma-separated list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Call {
    pub func: String,
    pub groups: Vec<Vec<Expr>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    /// A defined name, or an element label when an element is expected.
    Name(String),
    Number(u64),
    /// A quoted element label.
    Label(String),
    /// `R -> S`, only as the first argument of `map`.
    Arrow(Box<Expr>, Box<Expr>),
    Call(Call),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Statement {
    Define { kind: Kind, name: String, expr: Expr },
    Check(Call),
}

/// 1-based source position.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Pos {
    pub line: usize,
    pub col: usize,
}

impl fmt::Display for Pos {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.line, self.col)
    }
}

/// A parsed script: statements in source order with their start positions.
/// Equality ignores positions.
#[derive(Clone, Debug, Default)]
pub struct Script {
    pub statements: Vec<Statement>,
    pub positions: Vec<Pos>,
}

impl PartialEq for Script {
    fn eq(&self, other: &Script) -> bool {
        self.statements == other.statements
    }
}

impl Eq for Script {}

impl Script {
    pub fn push(&mut self, statement: Statement) {
        self.statements.push(statement);
        self.positions.push(Pos::default());
    }

    pub fn checks(&self) -> impl Iterator<Item = &Call> {
        self.statements.iter().filter_map(|s| match s {
            Statement::Check(c) => Some(c),
            Statement::Define { .. } => None,
        })
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }
}

pub fn call(func: &str, groups: Vec<Vec<Expr>>) -> Expr {
    Expr::Call(Call {
        func: func.to_string(),
        groups,
    })
}

pub fn name(n: &str) -> Expr {
    Expr::Name(n.to_string())
}
