//! Line-oriented text formats.
//!
//! ```text
//! # the knot 2_1
//! p 2
//! eps -1 -1 +1 +1
//! crossing 1 -
//! crossing 2 -
//! component B1 X1u X2o B4 B2 X1o X2u B3
//! ```
//!
//! Diagrams in the 3-sphere use the same grammar without `p`, `eps` and
//! `B` events.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write;

use thiserror::Error;

use super::{Crossing, DiagramError, Event, ProjectiveDiagram, S3Diagram, Sign};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid diagram: {0}")]
    Invalid(#[from] DiagramError),
}

struct Parsed {
    p: Option<(u32, usize)>,
    eps: Option<Vec<i8>>,
    crossings: Vec<Crossing>,
    components: Vec<Vec<Event>>,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, column, message: message.into() }
}

fn parse_event(tok: &str, line: usize, column: usize) -> Result<Event, FormatError> {
    let bad = || syntax(line, column, format!("bad event `{tok}`"));
    if let Some(rest) = tok.strip_prefix('B') {
        return rest.parse::<u32>().map(Event::Boundary).map_err(|_| bad());
    }
    let rest = tok.strip_prefix('X').ok_or_else(bad)?;
    let (num, kind) = rest.split_at(rest.len().saturating_sub(1));
    let id = num.parse::<u32>().map_err(|_| bad())?;
    match kind {
        "o" => Ok(Event::Over(id)),
        "u" => Ok(Event::Under(id)),
        _ => Err(bad()),
    }
}

fn parse_lines(text: &str, projective: bool) -> Result<Parsed, FormatError> {
    let mut out = Parsed { p: None, eps: None, crossings: Vec::new(), components: Vec::new() };
    for (ln, raw) in text.lines().enumerate() {
        let line = ln + 1;
        let content = raw.split('#').next().unwrap();
        // tokens with 1-based columns
        let mut toks: Vec<(usize, &str)> = Vec::new();
        let mut start = None;
        for (i, ch) in content.char_indices() {
            if ch.is_whitespace() {
                if let Some(s) = start.take() {
                    toks.push((s + 1, &content[s..i]));
                }
            } else if start.is_none() {
                start = Some(i);
            }
        }
        if let Some(s) = start {
            toks.push((s + 1, &content[s..]));
        }
        let Some(&(col, key)) = toks.first() else { continue };
        let args = &toks[1..];
        match key {
            "p" if projective => {
                if out.p.is_some() {
                    return Err(syntax(line, col, "duplicate `p` line"));
                }
                let [(c, v)] = args else { return Err(syntax(line, col, "expected `p <int>`")) };
                let p = v.parse::<u32>().map_err(|_| syntax(line, *c, "expected a nonnegative integer"))?;
                out.p = Some((p, line));
            }
            "eps" if projective => {
                if out.eps.is_some() {
                    return Err(syntax(line, col, "duplicate `eps` line"));
                }
                let mut eps = Vec::new();
                for &(c, v) in args {
                    eps.push(match v {
                        "+1" | "1" => 1,
                        "-1" => -1,
                        _ => return Err(syntax(line, c, format!("expected +1 or -1, found `{v}`"))),
                    });
                }
                out.eps = Some(eps);
            }
            "crossing" => {
                let [(c1, id), (c2, s)] = args else {
                    return Err(syntax(line, col, "expected `crossing <id> <+|->`"));
                };
                let id = id.parse::<u32>().map_err(|_| syntax(line, *c1, "expected a crossing id"))?;
                let sign = match *s {
                    "+" => Sign::Positive,
                    "-" => Sign::Negative,
                    _ => return Err(syntax(line, *c2, "expected `+` or `-`")),
                };
                out.crossings.push(Crossing { id, sign });
            }
            "component" => {
                let evs = args.iter().map(|&(c, t)| parse_event(t, line, c)).collect::<Result<Vec<_>, _>>()?;
                if !projective {
                    if let Some(&(c, _)) = args.iter().find(|(_, t)| t.starts_with('B')) {
                        return Err(syntax(line, c, "boundary events are not allowed here"));
                    }
                }
                out.components.push(evs);
            }
            _ => return Err(syntax(line, col, format!("unknown keyword `{key}`"))),
        }
    }
    Ok(out)
}

pub fn parse_pld(text: &str) -> Result<ProjectiveDiagram, FormatError> {
    let d = parse_lines(text, true)?;
    let (p, _) = d.p.ok_or_else(|| syntax(1, 1, "missing `p` line"))?;
    let eps = match d.eps {
        Some(e) => e,
        None if p == 0 => Vec::new(),
        None => return Err(syntax(1, 1, "missing `eps` line")),
    };
    Ok(ProjectiveDiagram::new(p, eps, d.crossings, d.components)?)
}

pub fn parse_s3d(text: &str) -> Result<S3Diagram, FormatError> {
    let d = parse_lines(text, false)?;
    Ok(S3Diagram::new(d.crossings, d.components)?)
}

fn event_str(e: &Event) -> String {
    match e {
        Event::Over(id) => format!("X{id}o"),
        Event::Under(id) => format!("X{id}u"),
        Event::Boundary(j) => format!("B{j}"),
    }
}

fn write_body(out: &mut String, crossings: &[Crossing], components: &[Vec<Event>]) {
    for c in crossings {
        let s = if c.sign == Sign::Positive { "+" } else { "-" };
        let _ = writeln!(out, "crossing {} {}", c.id, s);
    }
    for comp in components {
        out.push_str("component");
        for e in comp {
            out.push(' ');
            out.push_str(&event_str(e));
        }
        out.push('\n');
    }
}

pub fn to_pld(d: &ProjectiveDiagram) -> String {
    let mut out = format!("p {}\neps", d.p());
    for e in d.epsilons() {
        out.push_str(if *e > 0 { " +1" } else { " -1" });
    }
    out.push('\n');
    write_body(&mut out, d.crossings(), d.components());
    out
}

pub fn to_s3d(d: &S3Diagram) -> String {
    let mut out = String::new();
    write_body(&mut out, d.crossings(), d.components());
    out
}

impl core::fmt::Display for ProjectiveDiagram {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&to_pld(self))
    }
}

impl core::fmt::Display for S3Diagram {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(&to_s3d(self))
    }
}

impl core::str::FromStr for ProjectiveDiagram {
    type Err = FormatError;
    fn from_str(s: &str) -> Result<Self, FormatError> {
        parse_pld(s)
    }
}

impl core::str::FromStr for S3Diagram {
    type Err = FormatError;
    fn from_str(s: &str) -> Result<Self, FormatError> {
        parse_s3d(s)
    }
}
