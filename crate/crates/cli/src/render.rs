//! Canonical pretty-printer: one statement per line, `, ` between
//! arguments and `; ` between groups.

use crate::ast::{Call, Expr, Script, Statement};

pub fn render_script(script: &Script) -> String {
    let mut out = String::new();
    for s in &script.statements {
        out.push_str(&render_statement(s));
        out.push('\n');
    }
    out
}

pub fn render_statement(s: &Statement) -> String {
    match s {
        Statement::Define { kind, name, expr } => format!("{kind} {name} = {};", render_expr(expr)),
        Statement::Check(call) => format!("check {};", render_call(call)),
    }
}

pub fn render_call(call: &Call) -> String {
    let mut out = format!("{}(", call.func);
    for (i, group) in call.groups.iter().enumerate() {
        if i > 0 {
            out.push(';');
            if !group.is_empty() {
                out.push(' ');
            }
        }
        let items: Vec<String> = group.iter().map(render_expr).collect();
        out.push_str(&items.join(", "));
    }
    out.push(')');
    out
}

pub fn render_expr(e: &Expr) -> String {
    match e {
        Expr::Name(n) => n.clone(),
        Expr::Number(n) => n.to_string(),
        Expr::Label(s) => quote(s),
        Expr::Arrow(l, r) => format!("{} -> {}", render_expr(l), render_expr(r)),
        Expr::Call(c) => render_call(c),
    }
}

fn quote(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        if c == '"' || c == '\\' {
            out.push('\\');
        }
        out.push(c);
    }
    out.push('"');
    out
}

/// An element label as it should appear in a script: bare when it lexes
/// as a number or a name, quoted otherwise.
pub fn label_expr(label: &str) -> Expr {
    let bare_number = !label.is_empty()
        && label.chars().all(|c| c.is_ascii_digit())
        && (label == "0" || !label.starts_with('0'))
        && label.parse::<u64>().is_ok();
    if bare_number {
        return Expr::Number(label.parse().unwrap());
    }
    let mut chars = label.chars();
    let bare_name = chars.next().is_some_and(|c| c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_' || c == '\'');
    if bare_name {
        Expr::Name(label.to_string())
    } else {
        Expr::Label(label.to_string())
    }
}
