//! The `.gentle` text format.
//!
//! ```text
//! # comment
//! vertex 1 2 3
//! arrow a 1 2
//! arrow b 2 3
//! rel a b
//! ```
//!
//! Identifiers match `[A-Za-z0-9_']+` and must be declared before use.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::presentation::{validate_gentle, GentlePresentation, PresentationError, RawPresentation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: {}", self.line, self.message)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("{}", render(.0))]
    Syntax(Vec<Diagnostic>),
    #[error(transparent)]
    Invalid(PresentationError),
}

impl ParseError {
    /// 2 for unreadable input, 1 for a well-formed presentation that is not gentle.
    pub fn exit_code(&self) -> i32 {
        match self {
            ParseError::Invalid(PresentationError::NotGentle(_)) => 1,
            _ => 2,
        }
    }
}

fn render(d: &[Diagnostic]) -> String {
    d.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n")
}

fn is_id(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'')
}

/// Reads the text format into a raw presentation, checking declarations.
pub fn parse_raw(text: &str) -> Result<RawPresentation, Vec<Diagnostic>> {
    let mut raw = RawPresentation::new();
    let mut diags = Vec::new();
    let mut vertices: HashMap<String, usize> = HashMap::new();
    // arrow name -> (source, target, line)
    let mut arrows: HashMap<String, (String, String, usize)> = HashMap::new();
    let mut relations: HashMap<(String, String), usize> = HashMap::new();

    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        let content = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = content.split_whitespace().collect();
        let Some((&directive, args)) = tokens.split_first() else {
            continue;
        };
        let mut err = |message: String| {
            diags.push(Diagnostic {
                line: line_no,
                message,
            })
        };
        if let Some(bad) = args.iter().find(|t| !is_id(t)) {
            err(format!("`{bad}` is not a valid identifier"));
            continue;
        }
        match directive {
            "vertex" => {
                if args.is_empty() {
                    err("`vertex` needs at least one identifier".into());
                }
                for &v in args {
                    if let Some(prev) = vertices.get(v) {
                        err(format!("vertex `{v}` already declared on line {prev}"));
                    } else {
                        vertices.insert(v.to_string(), line_no);
                        raw = raw.vertex(v);
                    }
                }
            }
            "arrow" => {
                let [name, s, t] = args else {
                    err("expected `arrow <id> <source> <target>`".into());
                    continue;
                };
                if let Some((_, _, prev)) = arrows.get(*name) {
                    err(format!("arrow `{name}` already declared on line {prev}"));
                    continue;
                }
                let missing: Vec<&&str> = [s, t].into_iter().filter(|v| !vertices.contains_key(**v)).collect();
                if !missing.is_empty() {
                    for v in missing {
                        err(format!("arrow `{name}` uses undeclared vertex `{v}`"));
                    }
                    continue;
                }
                arrows.insert(name.to_string(), (s.to_string(), t.to_string(), line_no));
                raw = raw.arrow(*name, *s, *t);
            }
            "rel" => {
                let [x, y] = args else {
                    err("expected `rel <arrow> <arrow>`".into());
                    continue;
                };
                let (Some(ax), Some(ay)) = (arrows.get(*x), arrows.get(*y)) else {
                    for z in [x, y] {
                        if !arrows.contains_key(*z) {
                            err(format!("relation uses undeclared arrow `{z}`"));
                        }
                    }
                    continue;
                };
                if ax.1 != ay.0 {
                    err(format!(
                        "relation `{x} {y}` does not compose: `{x}` ends at `{}` but `{y}` starts at `{}`",
                        ax.1, ay.0
                    ));
                    continue;
                }
                let key = (x.to_string(), y.to_string());
                if let Some(prev) = relations.get(&key) {
                    err(format!("relation `{x} {y}` already declared on line {prev}"));
                    continue;
                }
                relations.insert(key, line_no);
                raw = raw.relation(*x, *y);
            }
            other => err(format!("unknown directive `{other}`")),
        }
    }
    if vertices.is_empty() && diags.is_empty() {
        diags.push(Diagnostic {
            line: text.lines().count().max(1),
            message: "no vertices declared".into(),
        });
    }
    if diags.is_empty() {
        Ok(raw)
    } else {
        Err(diags)
    }
}

pub fn parse(text: &str) -> Result<GentlePresentation, ParseError> {
    let raw = parse_raw(text).map_err(ParseError::Syntax)?;
    validate_gentle(&raw).map_err(ParseError::Invalid)
}

pub fn serialize_raw(raw: &RawPresentation) -> String {
    let mut out = String::new();
    out.push_str("vertex");
    for v in &raw.vertices {
        out.push(' ');
        out.push_str(v);
    }
    out.push('\n');
    for x in &raw.arrows {
        out.push_str(&format!("arrow {} {} {}\n", x.name, x.source, x.target));
    }
    for (x, y) in &raw.relations {
        out.push_str(&format!("rel {x} {y}\n"));
    }
    out
}

pub fn serialize(a: &GentlePresentation) -> String {
    serialize_raw(&a.to_raw())
}
