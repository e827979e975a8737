//! The `ribbon v1` text format.
//!
//! ```text
//! ribbon v1
//! # two vertices joined by edge c
//! vertex a+ b- a+ c+
//! vertex b+ c-
//! vertex            # an isolated vertex
//! ```

use super::presentation::{ArrowPresentation, Sign};
use crate::error::{Error, Result};
use crate::subset::is_valid_label;

pub const HEADER: &str = "ribbon v1";

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub(crate) fn parse_token(tok: &str, line: usize) -> Result<(String, Sign)> {
    let err = |msg: String| Error::Parse { line, msg };
    let (label, sign) = match tok.chars().last() {
        Some('+') => (&tok[..tok.len() - 1], Sign::Forward),
        Some('-') => (&tok[..tok.len() - 1], Sign::Backward),
        _ => return Err(err(format!("malformed token `{tok}`: missing sign"))),
    };
    if !is_valid_label(label) {
        return Err(err(format!("malformed token `{tok}`: bad label")));
    }
    Ok((label.to_string(), sign))
}

pub(crate) fn parse_tokens(s: &str, line: usize) -> Result<Vec<(String, Sign)>> {
    s.split_whitespace().map(|t| parse_token(t, line)).collect()
}

/// Parses a presentation file.
pub fn parse(text: &str) -> Result<ArrowPresentation> {
    let mut header_seen = false;
    let mut curves: Vec<Vec<(String, Sign)>> = Vec::new();
    // (label, line of each occurrence)
    let mut seen: Vec<(String, Vec<usize>)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = strip_comment(raw).trim();
        if line.is_empty() {
            continue;
        }
        let err = |msg: String| Error::Parse { line: lineno, msg };
        if line.split_whitespace().collect::<Vec<_>>() == ["ribbon", "v1"] {
            if header_seen {
                return Err(err("duplicate header".into()));
            }
            header_seen = true;
            continue;
        }
        if !header_seen {
            return Err(err(format!("expected header `{HEADER}`")));
        }
        let mut words = line.split_whitespace();
        match words.next() {
            Some("vertex") => {}
            Some(w) => return Err(err(format!("expected `vertex`, found `{w}`"))),
            None => unreachable!(),
        }
        let mut curve = Vec::new();
        for tok in words {
            let (label, sign) = parse_token(tok, lineno)?;
            match seen.iter_mut().find(|(l, _)| *l == label) {
                Some((_, lines)) => {
                    lines.push(lineno);
                    if lines.len() == 3 {
                        return Err(err(format!("label `{label}` occurs more than twice")));
                    }
                }
                None => seen.push((label.clone(), vec![lineno])),
            }
            curve.push((label, sign));
        }
        curves.push(curve);
    }
    if !header_seen {
        return Err(Error::Parse {
            line: 1,
            msg: format!("missing header `{HEADER}`"),
        });
    }
    if let Some((label, lines)) = seen.iter().find(|(_, lines)| lines.len() == 1) {
        return Err(Error::Parse {
            line: lines[0],
            msg: format!("label `{label}` occurs only once"),
        });
    }
    ArrowPresentation::from_labelled(&curves)
}

/// Inline form used on the command line and in reports: curves separated by
/// `/`, each optionally prefixed with `vertex`.
pub fn parse_inline(s: &str) -> Result<ArrowPresentation> {
    let s = s.trim();
    if s == "(empty)" {
        return Ok(ArrowPresentation::empty());
    }
    let mut text = format!("{HEADER}\n");
    for part in s.split('/') {
        let part = part.trim();
        let body = part.strip_prefix("vertex").unwrap_or(part);
        text.push_str("vertex ");
        text.push_str(body.trim());
        text.push('\n');
    }
    parse(&text)
}

/// Deterministic serialisation; `parse(&serialize(ap)) == ap`.
pub fn serialize(ap: &ArrowPresentation) -> String {
    let mut out = String::from(HEADER);
    out.push('\n');
    for c in ap.curves() {
        out.push_str(&ap.curve_text(c));
        out.push('\n');
    }
    out
}
