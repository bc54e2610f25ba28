//! Recursive-descent parser. Names are resolved and argument types checked
//! while parsing, so a returned [`Script`] is well formed.

use std::collections::HashMap;

use crate::ast::{Call, Expr, Kind, Pos, Script, Statement};
use crate::error::DslError;
use crate::lexer::{lex, Tok, Token};
use crate::sig::{self, Param, Signature, Ty};

/// Untyped expression with positions, before name resolution.
struct Node {
    pos: Pos,
    kind: NodeKind,
}

enum NodeKind {
    Name(String),
    Number(u64),
    Str(String),
    Arrow(Box<Node>, Box<Node>),
    Call(String, Vec<Vec<Node>>),
}

impl NodeKind {
    fn describe(&self) -> String {
        match self {
            NodeKind::Name(n) => format!("`{n}`"),
            NodeKind::Number(_) => "integer".into(),
            NodeKind::Str(_) => "element".into(),
            NodeKind::Arrow(..) => "R -> S".into(),
            NodeKind::Call(f, _) => format!("`{f}(...)`"),
        }
    }
}

pub fn parse(src: &str) -> Result<Script, DslError> {
    let mut p = Parser {
        toks: lex(src)?,
        at: 0,
        env: HashMap::new(),
    };
    let mut script = Script::default();
    while p.peek() != &Tok::Eof {
        let pos = p.pos();
        let statement = p.statement()?;
        script.statements.push(statement);
        script.positions.push(pos);
    }
    Ok(script)
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
    env: HashMap<String, Kind>,
}

const STATEMENT_START: [&str; 8] = ["ring", "ideal", "hom", "module", "amalgam", "pullback", "subring", "check"];

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.at].tok
    }

    fn pos(&self) -> Pos {
        self.toks[self.at].pos
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if t.tok != Tok::Eof {
            self.at += 1;
        }
        t
    }

    fn unexpected(&self, expected: &[&str]) -> DslError {
        DslError::Syntax {
            pos: self.pos(),
            found: self.peek().to_string(),
            expected: expected.iter().map(|s| s.to_string()).collect(),
        }
    }

    fn expect(&mut self, tok: Tok) -> Result<(), DslError> {
        if *self.peek() == tok {
            self.next();
            Ok(())
        } else {
            Err(self.unexpected(&[&tok.to_string()]))
        }
    }

    fn ident(&mut self) -> Result<(String, Pos), DslError> {
        match self.peek().clone() {
            Tok::Ident(s) => {
                let pos = self.pos();
                self.next();
                Ok((s, pos))
            }
            _ => Err(self.unexpected(&["a name"])),
        }
    }

    fn statement(&mut self) -> Result<Statement, DslError> {
        let word = match self.peek() {
            Tok::Ident(w) if STATEMENT_START.contains(&w.as_str()) => w.clone(),
            _ => {
                let expected: Vec<String> = STATEMENT_START.iter().map(|s| format!("`{s}`")).collect();
                let expected: Vec<&str> = expected.iter().map(String::as_str).collect();
                return Err(self.unexpected(&expected));
            }
        };
        self.next();
        if word == "check" {
            let (name, pos) = self.ident()?;
            self.expect(Tok::LParen)?;
            let groups = self.groups()?;
            self.expect(Tok::Semi)?;
            let sig = sig::check(&name).ok_or(DslError::UnknownName { pos, name: name.clone() })?;
            let groups = self.args(sig, groups, pos)?;
            return Ok(Statement::Check(Call { func: name, groups }));
        }
        let kind = Kind::from_keyword(&word).expect("listed keyword");
        let (name, pos) = self.ident()?;
        if self.env.contains_key(&name) {
            return Err(DslError::Redefinition { pos, name });
        }
        self.expect(Tok::Eq)?;
        let node = self.item()?;
        self.expect(Tok::Semi)?;
        let expr = self.typed(node, Ty::Obj(kind))?;
        self.env.insert(name.clone(), kind);
        Ok(Statement::Define { kind, name, expr })
    }

    fn item(&mut self) -> Result<Node, DslError> {
        let left = self.atom()?;
        if *self.peek() == Tok::Arrow {
            self.next();
            let right = self.atom()?;
            return Ok(Node {
                pos: left.pos,
                kind: NodeKind::Arrow(Box::new(left), Box::new(right)),
            });
        }
        Ok(left)
    }

    fn atom(&mut self) -> Result<Node, DslError> {
        let pos = self.pos();
        let kind = match self.peek().clone() {
            Tok::Ident(s) => {
                self.next();
                if *self.peek() == Tok::LParen {
                    self.next();
                    NodeKind::Call(s, self.groups()?)
                } else {
                    NodeKind::Name(s)
                }
            }
            Tok::Number(n) => {
                self.next();
                NodeKind::Number(n)
            }
            Tok::Str(s) => {
                self.next();
                NodeKind::Str(s)
            }
            _ => return Err(self.unexpected(&["a name", "a number", "a quoted label"])),
        };
        Ok(Node { pos, kind })
    }

    /// Argument groups after `(`, through the closing `)`.
    fn groups(&mut self) -> Result<Vec<Vec<Node>>, DslError> {
        let mut groups = Vec::new();
        loop {
            let mut group = Vec::new();
            if !matches!(self.peek(), Tok::RParen | Tok::Semi) {
                group.push(self.item()?);
                while *self.peek() == Tok::Comma {
                    self.next();
                    group.push(self.item()?);
                }
            }
            groups.push(group);
            match self.peek() {
                Tok::Semi => {
                    self.next();
                }
                Tok::RParen => {
                    self.next();
                    return Ok(groups);
                }
                _ => return Err(self.unexpected(&["`,`", "`;`", "`)`"])),
            }
        }
    }

    fn typed(&self, node: Node, want: Ty) -> Result<Expr, DslError> {
        let mismatch = |found: String| DslError::TypeMismatch {
            pos: node.pos,
            expected: want.to_string(),
            found,
        };
        match (want, node.kind) {
            (Ty::Elem, NodeKind::Name(n)) => Ok(Expr::Name(n)),
            (Ty::Elem | Ty::Int, NodeKind::Number(n)) => Ok(Expr::Number(n)),
            (Ty::Elem, NodeKind::Str(s)) => Ok(Expr::Label(s)),
            (Ty::Arrow, NodeKind::Arrow(l, r)) => {
                let ring = Ty::Obj(Kind::Ring);
                Ok(Expr::Arrow(Box::new(self.typed(*l, ring)?), Box::new(self.typed(*r, ring)?)))
            }
            (Ty::Obj(_), NodeKind::Name(n)) => {
                let kind = *self.env.get(&n).ok_or(DslError::UnknownName {
                    pos: node.pos,
                    name: n.clone(),
                })?;
                if Ty::Obj(kind).fits(want) {
                    Ok(Expr::Name(n))
                } else {
                    Err(mismatch(format!("{kind} `{n}`")))
                }
            }
            (Ty::Obj(_), NodeKind::Call(func, groups)) => {
                let sig = sig::function(&func).ok_or(DslError::UnknownName {
                    pos: node.pos,
                    name: func.clone(),
                })?;
                let result = Ty::Obj(sig.result.expect("functions have results"));
                if !result.fits(want) {
                    return Err(mismatch(format!("{result} from `{func}`")));
                }
                let groups = self.args(sig, groups, node.pos)?;
                Ok(Expr::Call(Call { func, groups }))
            }
            (_, other) => Err(mismatch(other.describe())),
        }
    }

    fn args(&self, sig: &Signature, groups: Vec<Vec<Node>>, pos: Pos) -> Result<Vec<Vec<Expr>>, DslError> {
        let arity = |found: String| DslError::TypeMismatch {
            pos,
            expected: sig.usage(),
            found,
        };
        if groups.len() != sig.groups.len() {
            return Err(arity(format!("{} argument group(s)", groups.len())));
        }
        let mut out = Vec::with_capacity(groups.len());
        for (params, items) in sig.groups.iter().zip(groups) {
            let given = items.len();
            let mut items = items.into_iter().peekable();
            let mut typed = Vec::with_capacity(given);
            for param in params.iter() {
                match *param {
                    Param::One(t) => {
                        let item = items.next().ok_or_else(|| arity("too few arguments".into()))?;
                        typed.push(self.typed(item, t)?);
                    }
                    Param::Opt(t) => {
                        if let Some(item) = items.next() {
                            typed.push(self.typed(item, t)?);
                        }
                    }
                    Param::Rest(t) => {
                        for item in items.by_ref() {
                            typed.push(self.typed(item, t)?);
                        }
                    }
                }
            }
            if items.peek().is_some() {
                return Err(arity("too many arguments".into()));
            }
            out.push(typed);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spec_examples() {
        let s = parse("ring A = zmod(6); ideal I = gen(A; 2); check reduced_criterion(dup(A, I));").unwrap();
        assert_eq!(s.statements.len(), 3);
        match parse("ring A = zmod(6) ring B").unwrap_err() {
            DslError::Syntax { pos, expected, .. } => {
                assert_eq!(pos, Pos { line: 1, col: 18 });
                assert_eq!(expected, vec!["`;`"]);
            }
            e => panic!("{e}"),
        }
        let e = parse("ring B = zmod(2);\nideal J = whole(B);\ncheck pull_identity(amalg(f, J));").unwrap_err();
        assert_eq!(
            e,
            DslError::UnknownName {
                pos: Pos { line: 3, col: 27 },
                name: "f".into()
            }
        );
    }

    #[test]
    fn type_errors() {
        let e = parse("ring A = zmod(4); ideal I = gen(A; 2); check amalg_thing(I);").unwrap_err();
        assert!(matches!(e, DslError::UnknownName { .. }));
        let e = parse("ring A = zmod(4); ideal I = gen(A; 2); check pull_identity(amalg(I, I));").unwrap_err();
        assert!(matches!(e, DslError::TypeMismatch { ref expected, .. } if expected == "hom"), "{e}");
        let e = parse("ring A = zmod(4); ring A = zmod(2);").unwrap_err();
        assert!(matches!(e, DslError::Redefinition { .. }));
        let e = parse("ideal I = zmod(4);").unwrap_err();
        assert!(matches!(e, DslError::TypeMismatch { .. }));
        let e = parse("ring A = zmod(4, 5);").unwrap_err();
        assert!(matches!(e, DslError::TypeMismatch { ref found, .. } if found == "too many arguments"));
    }

    #[test]
    fn labels_and_comments() {
        let src = "# comment\nring T = trunc_poly(zmod(2), 1, 1); # tail\nideal M = gen(T; X, \"1+X\");\nhom h = map(T -> T; 0, X, 1, \"1+X\");";
        let s = parse(src).unwrap();
        assert_eq!(s.positions[1], Pos { line: 3, col: 1 });
        match &s.statements[1] {
            Statement::Define { expr: Expr::Call(c), .. } => {
                assert_eq!(c.groups[1], vec![Expr::Name("X".into()), Expr::Label("1+X".into())]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn coercions() {
        parse("ring A = zmod(4); ideal I = gen(A; 2); amalgam D = dup(A, I); ideal K = gen(D; \"(0,2)\");")
            .unwrap();
        parse("ring A = zmod(4); subring S = all(A); ring B = S;").unwrap();
        assert!(parse("ring A = zmod(4); subring S = A;").is_err());
    }
}
