//! Line-oriented lattice text format.
//!
//! ```text
//! # the path lattice
//! elem 0
//! elem 1
//! elem 2
//! cover 0 1
//! cover 1 2
//! ```
//!
//! `#` starts a comment, blank lines are ignored, `elem <label>` declares the
//! next element and `cover <child> <parent>` declares a cover pair by label.
//! Labels are single whitespace-free tokens and may not contain commas, since
//! families are written as comma-separated label lists.

use std::collections::HashMap;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::lattice::Lattice;

pub fn parse_lattice(text: &str) -> Result<Lattice> {
    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let mut covers = Vec::new();

    let err = |line: usize, message: String| Error::Parse { line, message };

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["elem", label] => {
                validate_label(label).map_err(|m| err(line_no, m))?;
                if index.contains_key(*label) {
                    return Err(err(line_no, format!("duplicate element `{label}`")));
                }
                index.insert(label.to_string(), names.len());
                names.push(label.to_string());
            }
            ["cover", child, parent] => {
                let lookup = |label: &str| {
                    index
                        .get(label)
                        .copied()
                        .ok_or_else(|| err(line_no, format!("unknown element `{label}`")))
                };
                covers.push((lookup(child)?, lookup(parent)?, line_no));
            }
            ["elem", ..] => {
                return Err(err(line_no, "expected `elem <label>`".into()));
            }
            ["cover", ..] => {
                return Err(err(line_no, "expected `cover <child> <parent>`".into()));
            }
            [other, ..] => {
                return Err(err(line_no, format!("unknown directive `{other}`")));
            }
            [] => unreachable!(),
        }
    }

    let pairs: Vec<(usize, usize)> = covers.iter().map(|&(c, p, _)| (c, p)).collect();
    Lattice::from_covers(names, &pairs).map_err(|e| {
        // Cite the first cover line that mentions the offending element.
        let culprit = match &e {
            Error::NotAPoset(x) | Error::NotMeetSemilattice(x, _) => Some(*x),
            _ => None,
        };
        let line = culprit
            .and_then(|x| covers.iter().find(|&&(c, p, _)| c == x || p == x))
            .map(|&(_, _, l)| l)
            .unwrap_or(0);
        Error::Parse {
            line,
            message: e.to_string(),
        }
    })
}

pub fn validate_label(label: &str) -> std::result::Result<(), String> {
    if label.is_empty() {
        Err("empty label".into())
    } else if label.contains(',') {
        Err(format!("label `{label}` contains a comma"))
    } else if label.contains('#') || label.chars().any(char::is_whitespace) {
        Err(format!("label `{label}` contains `#` or whitespace"))
    } else {
        Ok(())
    }
}

/// Renders a lattice in the text format. Parsing the output yields a lattice
/// with identical labels, indices and covers.
pub fn to_text(lattice: &Lattice) -> String {
    let mut out = String::new();
    for name in lattice.names() {
        let _ = writeln!(out, "elem {name}");
    }
    for &(c, p) in lattice.covers() {
        let _ = writeln!(out, "cover {} {}", lattice.name(c), lattice.name(p));
    }
    out
}
