//! The structured spec-document format: a flat key = value text with
//! sections `[params]` (catalog form) or `[h]`, `[x]`, `[g]` (raw coefficient
//! forms). Rational literals are "p/q"; Gaussian literals "p/q+r/s i" (a
//! "*i" spelling is also accepted). Decimal literals are rejected, so no
//! inexactness can sneak in.

use std::fmt::Write as _;

use askey_core::classify::{SeqSpecQ, SeqSpecQ1};
use askey_core::Scalar;

/// A parsed spec document: either a named catalog family with parameters,
/// or raw coefficients in one of the two shapes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpecDocument {
    Family {
        name: String,
        params: Vec<(String, Scalar)>,
        depth: Option<usize>,
    },
    RawQ1 {
        a: [Scalar; 3],
        b: [Scalar; 3],
        d: [Scalar; 4],
        depth: Option<usize>,
    },
    RawQ {
        q: Scalar,
        a: [Scalar; 3],
        b: [Scalar; 3],
        d: [Scalar; 5],
        depth: Option<usize>,
    },
}

/// Parse failure with its line number and the offending field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DocError {
    pub line: usize,
    pub field: String,
    pub message: String,
}

impl std::fmt::Display for DocError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "line {}, field {:?}: {}",
            self.line, self.field, self.message
        )
    }
}

/// Greek parameter names are accepted as aliases of their ascii spellings.
pub fn normalize_param_name(raw: &str) -> String {
    match raw {
        "\u{3b1}" => "alpha".into(),
        "\u{3b2}" => "beta".into(),
        "\u{3b3}" => "gamma".into(),
        "\u{3b4}" => "delta".into(),
        "\u{3bb}" => "lambda".into(),
        other => other.to_string(),
    }
}

struct RawDoc {
    /// (line, section, key, value)
    entries: Vec<(usize, String, String, String)>,
}

fn scan(text: &str) -> Result<RawDoc, DocError> {
    let mut entries = Vec::new();
    let mut section = String::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(name) = line.strip_prefix('[') {
            let Some(name) = name.strip_suffix(']') else {
                return Err(DocError {
                    line: line_no,
                    field: line.to_string(),
                    message: "unterminated section header".into(),
                });
            };
            section = name.trim().to_string();
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(DocError {
                line: line_no,
                field: line.to_string(),
                message: "expected key = value".into(),
            });
        };
        entries.push((
            line_no,
            section.clone(),
            normalize_param_name(key.trim()),
            value.trim().to_string(),
        ));
    }
    Ok(RawDoc { entries })
}

fn parse_scalar(line: usize, field: &str, value: &str) -> Result<Scalar, DocError> {
    value.parse::<Scalar>().map_err(|e| DocError {
        line,
        field: field.to_string(),
        message: e.to_string(),
    })
}

fn coefficient_array<const N: usize>(
    doc: &RawDoc,
    section: &str,
    keys: [&str; N],
) -> Result<[Scalar; N], DocError> {
    let mut out: [Scalar; N] = std::array::from_fn(|_| Scalar::zero());
    for (line, sec, key, value) in &doc.entries {
        if sec != section {
            continue;
        }
        let Some(pos) = keys.iter().position(|k| k == key) else {
            return Err(DocError {
                line: *line,
                field: key.clone(),
                message: format!("unknown coefficient in [{section}]"),
            });
        };
        out[pos] = parse_scalar(*line, key, value)?;
    }
    Ok(out)
}

impl SpecDocument {
    pub fn parse(text: &str) -> Result<SpecDocument, DocError> {
        let doc = scan(text)?;
        let mut family = None;
        let mut variant = None;
        let mut depth = None;
        let mut q = None;
        for (line, section, key, value) in &doc.entries {
            if !section.is_empty() {
                continue;
            }
            match key.as_str() {
                "family" => family = Some(value.clone()),
                "variant" => variant = Some(value.clone()),
                "K" => {
                    depth = Some(value.parse::<usize>().map_err(|_| DocError {
                        line: *line,
                        field: "K".into(),
                        message: format!("expected a nonnegative integer, got {value:?}"),
                    })?);
                }
                "q" => q = Some(parse_scalar(*line, "q", value)?),
                other => {
                    return Err(DocError {
                        line: *line,
                        field: other.to_string(),
                        message: "unknown top-level field".into(),
                    });
                }
            }
        }
        match (family, variant.as_deref()) {
            (Some(name), None) | (Some(name), Some("family")) => {
                let mut params = Vec::new();
                for (line, section, key, value) in &doc.entries {
                    if section == "params" {
                        params.push((key.clone(), parse_scalar(*line, key, value)?));
                    } else if !section.is_empty() && section != "params" {
                        return Err(DocError {
                            line: *line,
                            field: format!("[{section}]"),
                            message: "family documents only carry a [params] section".into(),
                        });
                    }
                }
                Ok(SpecDocument::Family {
                    name,
                    params,
                    depth,
                })
            }
            (None, Some("q1")) | (None, None) => {
                let a = coefficient_array(&doc, "h", ["a0", "a1", "a2"])?;
                let b = coefficient_array(&doc, "x", ["b0", "b1", "b2"])?;
                let d = coefficient_array(&doc, "g", ["d1", "d2", "d3", "d4"])?;
                Ok(SpecDocument::RawQ1 { a, b, d, depth })
            }
            (None, Some("q")) => {
                let a = coefficient_array(&doc, "h", ["a-1", "a0", "a1"])?;
                let b = coefficient_array(&doc, "x", ["b-1", "b0", "b1"])?;
                let d = coefficient_array(&doc, "g", ["d-2", "d-1", "d0", "d1", "d2"])?;
                let q = q.ok_or(DocError {
                    line: 0,
                    field: "q".into(),
                    message: "variant = q requires a top-level q value".into(),
                })?;
                Ok(SpecDocument::RawQ { q, a, b, d, depth })
            }
            (Some(_), Some(v)) => Err(DocError {
                line: 0,
                field: "variant".into(),
                message: format!("variant {v:?} conflicts with a family declaration"),
            }),
            (None, Some(v)) => Err(DocError {
                line: 0,
                field: "variant".into(),
                message: format!("unknown variant {v:?} (expected q1, q or family)"),
            }),
        }
    }

    /// Canonical serialization; documents emit the space spelling of
    /// Gaussian literals. Exercised by the round-trip tests.
    #[allow(dead_code)]
    pub fn serialize(&self) -> String {
        fn lit(s: &Scalar) -> String {
            s.to_string().replace("*i", " i")
        }
        let mut out = String::new();
        match self {
            SpecDocument::Family {
                name,
                params,
                depth,
            } => {
                writeln!(out, "family = {name}").unwrap();
                if let Some(k) = depth {
                    writeln!(out, "K = {k}").unwrap();
                }
                writeln!(out, "[params]").unwrap();
                for (key, value) in params {
                    writeln!(out, "{key} = {}", lit(value)).unwrap();
                }
            }
            SpecDocument::RawQ1 { a, b, d, depth } => {
                writeln!(out, "variant = q1").unwrap();
                if let Some(k) = depth {
                    writeln!(out, "K = {k}").unwrap();
                }
                writeln!(out, "[h]").unwrap();
                for (key, value) in ["a0", "a1", "a2"].iter().zip(a) {
                    writeln!(out, "{key} = {}", lit(value)).unwrap();
                }
                writeln!(out, "[x]").unwrap();
                for (key, value) in ["b0", "b1", "b2"].iter().zip(b) {
                    writeln!(out, "{key} = {}", lit(value)).unwrap();
                }
                writeln!(out, "[g]").unwrap();
                for (key, value) in ["d1", "d2", "d3", "d4"].iter().zip(d) {
                    writeln!(out, "{key} = {}", lit(value)).unwrap();
                }
            }
            SpecDocument::RawQ { q, a, b, d, depth } => {
                writeln!(out, "variant = q").unwrap();
                writeln!(out, "q = {}", lit(q)).unwrap();
                if let Some(k) = depth {
                    writeln!(out, "K = {k}").unwrap();
                }
                writeln!(out, "[h]").unwrap();
                for (key, value) in ["a-1", "a0", "a1"].iter().zip(a) {
                    writeln!(out, "{key} = {}", lit(value)).unwrap();
                }
                writeln!(out, "[x]").unwrap();
                for (key, value) in ["b-1", "b0", "b1"].iter().zip(b) {
                    writeln!(out, "{key} = {}", lit(value)).unwrap();
                }
                writeln!(out, "[g]").unwrap();
                for (key, value) in ["d-2", "d-1", "d0", "d1", "d2"].iter().zip(d) {
                    writeln!(out, "{key} = {}", lit(value)).unwrap();
                }
            }
        }
        out
    }

    pub fn depth(&self) -> Option<usize> {
        match self {
            SpecDocument::Family { depth, .. }
            | SpecDocument::RawQ1 { depth, .. }
            | SpecDocument::RawQ { depth, .. } => *depth,
        }
    }

    /// Builds the q = 1 coefficient spec for raw q1 documents.
    pub fn to_q1_spec(&self) -> Option<Result<SeqSpecQ1, askey_core::Error>> {
        match self {
            SpecDocument::RawQ1 { a, b, d, .. } => {
                Some(SeqSpecQ1::new(a.clone(), b.clone(), d.clone()))
            }
            _ => None,
        }
    }

    pub fn to_q_spec(&self) -> Option<Result<SeqSpecQ, askey_core::Error>> {
        match self {
            SpecDocument::RawQ { q, a, b, d, .. } => {
                Some(SeqSpecQ::new(q.clone(), a.clone(), b.clone(), d.clone()))
            }
            _ => None,
        }
    }
}
