//! The `hexlist` element file format.
//!
//! ```text
//! hexlist 1
//! # comment
//! hex cube
//! 0 0 0
//! 1 0 0
//! 1 1 0
//! 0 1 0
//! 0 0 1
//! 1 0 1
//! 1 1 1
//! 0 1 1
//! ```
//!
//! One `hex <id>` line per element followed by exactly 8 node lines in the
//! reference corner order. `#` starts a comment anywhere on a line and blank
//! lines are ignored. Element ids are unique within a file.

use std::collections::HashSet;
use std::io::Write;
use std::path::Path;

use thiserror::Error;

use crate::geometry::{HexNodes, Point3};

#[derive(Debug, Error)]
pub enum ParseError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("{path}:{line}: {message}")]
    Syntax { path: String, line: usize, message: String },
}

impl ParseError {
    pub fn line(&self) -> Option<usize> {
        match self {
            ParseError::Io { .. } => None,
            ParseError::Syntax { line, .. } => Some(*line),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Element {
    pub id: String,
    pub nodes: HexNodes,
    /// Line of the `hex` header.
    pub line: usize,
}

pub const HEADER: &str = "hexlist 1";

pub fn parse_hexlist(path: impl AsRef<Path>) -> Result<Vec<Element>, ParseError> {
    let path = path.as_ref();
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| ParseError::Io {
        path: name.clone(),
        source,
    })?;
    parse_hexlist_str(&text, &name)
}

struct Pending {
    id: String,
    line: usize,
    nodes: Vec<Point3>,
}

/// Parses file contents; `source` names the input in diagnostics.
pub fn parse_hexlist_str(text: &str, source: &str) -> Result<Vec<Element>, ParseError> {
    let err = |line: usize, message: String| ParseError::Syntax {
        path: source.to_string(),
        line,
        message,
    };

    let mut seen_header = false;
    let mut ids = HashSet::new();
    let mut out = Vec::new();
    let mut pending: Option<Pending> = None;

    let finish = |p: Pending, at: usize| -> Result<Element, ParseError> {
        if p.nodes.len() != 8 {
            return Err(err(
                at,
                format!("element '{}' has {} node lines, expected 8", p.id, p.nodes.len()),
            ));
        }
        let nodes: [Point3; 8] = p.nodes.try_into().expect("length checked");
        let nodes = HexNodes::new(nodes).map_err(|e| err(p.line, format!("element '{}': {e}", p.id)))?;
        Ok(Element {
            id: p.id,
            nodes,
            line: p.line,
        })
    };

    let mut last_line = 0;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if !seen_header {
            if content.split_whitespace().collect::<Vec<_>>() != ["hexlist", "1"] {
                return Err(err(lineno, format!("expected header '{HEADER}', found '{content}'")));
            }
            seen_header = true;
            continue;
        }
        let mut tokens = content.split_whitespace();
        let first = tokens.next().expect("non-empty line");
        if first == "hex" {
            let id = match (tokens.next(), tokens.next()) {
                (Some(id), None) => id.to_string(),
                _ => return Err(err(lineno, "expected 'hex <id>'".to_string())),
            };
            if let Some(p) = pending.take() {
                out.push(finish(p, lineno)?);
            }
            if !ids.insert(id.clone()) {
                return Err(err(lineno, format!("duplicate element id '{id}'")));
            }
            pending = Some(Pending {
                id,
                line: lineno,
                nodes: Vec::with_capacity(8),
            });
            continue;
        }

        let Some(p) = pending.as_mut() else {
            return Err(err(lineno, format!("node line before any 'hex' line: '{content}'")));
        };
        let coords: Vec<&str> = content.split_whitespace().collect();
        if coords.len() != 3 {
            return Err(err(
                lineno,
                format!("element '{}': expected 'x y z', found '{content}'", p.id),
            ));
        }
        let mut xyz = [0.0; 3];
        for (v, tok) in xyz.iter_mut().zip(&coords) {
            *v = tok
                .parse::<f64>()
                .map_err(|_| err(lineno, format!("element '{}': invalid number '{tok}'", p.id)))?;
        }
        if xyz.iter().any(|v| !v.is_finite()) {
            return Err(err(lineno, format!("element '{}': non-finite coordinate", p.id)));
        }
        if p.nodes.len() == 8 {
            return Err(err(lineno, format!("element '{}' has more than 8 node lines", p.id)));
        }
        p.nodes.push(Point3::new(xyz[0], xyz[1], xyz[2]));
    }

    if !seen_header {
        return Err(err(last_line.max(1), format!("missing header '{HEADER}'")));
    }
    if let Some(p) = pending.take() {
        out.push(finish(p, last_line + 1)?);
    }
    Ok(out)
}

/// Writes elements in `hexlist` format, round-trip exact.
pub fn write_hexlist<'a, W: Write>(
    w: &mut W,
    elements: impl IntoIterator<Item = (&'a str, &'a HexNodes)>,
) -> std::io::Result<()> {
    writeln!(w, "{HEADER}")?;
    for (id, h) in elements {
        writeln!(w, "hex {id}")?;
        for p in h.nodes() {
            writeln!(w, "{:?} {:?} {:?}", p.x, p.y, p.z)?;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    const CUBE_NODES: &str = "0 0 0\n1 0 0\n1 1 0\n0 1 0\n0 0 1\n1 0 1\n1 1 1\n0 1 1\n";

    fn two_elements() -> String {
        format!("hexlist 1\nhex a\n{CUBE_NODES}hex b\n{CUBE_NODES}")
    }

    #[test]
    fn parses_in_file_order() {
        let els = parse_hexlist_str(&two_elements(), "t").unwrap();
        assert_eq!(els.len(), 2);
        assert_eq!(els[0].id, "a");
        assert_eq!(els[1].id, "b");
        assert_eq!(els[1].line, 11);
        assert_eq!(els[0].nodes, HexNodes::unit_cube());
    }

    #[test]
    fn comments_and_blank_lines() {
        let noisy = format!(
            "# leading comment\n\nhexlist 1 # header\nhex a   # first\n\n{}\n# between\nhex b\n{CUBE_NODES}\n",
            CUBE_NODES.replace('\n', "\n\n# x\n")
        );
        let clean = parse_hexlist_str(&two_elements(), "t").unwrap();
        let parsed = parse_hexlist_str(&noisy, "t").unwrap();
        assert_eq!(
            parsed.iter().map(|e| (&e.id, e.nodes)).collect::<Vec<_>>(),
            clean.iter().map(|e| (&e.id, e.nodes)).collect::<Vec<_>>()
        );
    }

    #[test]
    fn header_only() {
        assert!(parse_hexlist_str("hexlist 1\n", "t").unwrap().is_empty());
    }

    #[test]
    fn missing_node_line_names_element() {
        let text = "hexlist 1\nhex short\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n0 0 1\n1 0 1\n1 1 1\nhex next\n";
        let e = parse_hexlist_str(text, "f.hexlist").unwrap_err();
        let msg = e.to_string();
        assert!(msg.contains("'short'"), "{msg}");
        assert!(msg.starts_with("f.hexlist:10:"), "{msg}");

        let at_eof = "hexlist 1\nhex last\n0 0 0\n";
        let msg = parse_hexlist_str(at_eof, "g").unwrap_err().to_string();
        assert!(msg.contains("'last'") && msg.contains("1 node lines"), "{msg}");
    }

    #[test]
    fn rejects_malformed_input() {
        let cases = [
            ("hex a\n", 1, "header"),
            ("hexlist 2\n", 1, "header"),
            ("hexlist 1\n0 0 0\n", 2, "before any"),
            ("hexlist 1\nhex\n", 2, "hex <id>"),
            ("hexlist 1\nhex a\n0 0\n", 3, "x y z"),
            ("hexlist 1\nhex a\n0 zero 0\n", 3, "invalid number"),
            ("hexlist 1\nhex a\n0 nan 0\n", 3, "non-finite"),
            ("hexlist 1\nhex a\n0 0 inf\n", 3, "non-finite"),
        ];
        for (text, line, needle) in cases {
            let e = parse_hexlist_str(text, "t").unwrap_err();
            assert_eq!(e.line(), Some(line), "{text:?}: {e}");
            assert!(e.to_string().contains(needle), "{text:?}: {e}");
        }
        let nine = format!("hexlist 1\nhex a\n{CUBE_NODES}0 0 0\n");
        assert!(parse_hexlist_str(&nine, "t")
            .unwrap_err()
            .to_string()
            .contains("more than 8"));
    }

    #[test]
    fn duplicate_ids() {
        let text = format!("hexlist 1\nhex a\n{CUBE_NODES}hex a\n{CUBE_NODES}");
        let e = parse_hexlist_str(&text, "t").unwrap_err();
        assert_eq!(e.line(), Some(11));
        assert!(e.to_string().contains("duplicate"));
    }

    #[test]
    fn missing_file() {
        let e = parse_hexlist("/nonexistent/file.hexlist").unwrap_err();
        assert!(matches!(e, ParseError::Io { .. }));
    }

    #[test]
    fn write_then_parse() {
        let h = crate::counterexamples::invalid_good_corner_quality();
        let mut buf = Vec::new();
        write_hexlist(&mut buf, [("q", &h)]).unwrap();
        let back = parse_hexlist_str(std::str::from_utf8(&buf).unwrap(), "t").unwrap();
        assert_eq!(back[0].nodes, h);
    }
}
