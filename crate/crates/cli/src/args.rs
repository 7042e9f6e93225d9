//! Minimal flag parser: verbs, positional arguments, `--key value` /
//! `--key=value` pairs and bare boolean switches.

use std::collections::BTreeMap;

#[derive(Debug, Default)]
pub struct Args {
    pub verb: Option<String>,
    pub positional: Vec<String>,
    flags: BTreeMap<String, String>,
    switches: Vec<String>,
}

pub const KNOWN_VALUE_FLAGS: &[&str] = &[
    "family", "params", "spec", "nmax", "K", "format", "perturb", "n",
];

impl Args {
    pub fn parse(raw: impl Iterator<Item = String>) -> Result<Args, String> {
        let mut args = Args::default();
        let mut iter = raw.peekable();
        while let Some(tok) = iter.next() {
            if let Some(name) = tok.strip_prefix("--") {
                if name.is_empty() {
                    return Err("empty flag name".into());
                }
                if let Some((key, value)) = name.split_once('=') {
                    args.flags.insert(key.to_string(), value.to_string());
                    continue;
                }
                // A known value flag, or any flag followed by a non-flag
                // token, consumes the next token as its value.
                let takes_value = KNOWN_VALUE_FLAGS.contains(&name)
                    || iter.peek().is_some_and(|next| !next.starts_with("--"));
                if takes_value {
                    match iter.next() {
                        Some(value) => {
                            args.flags.insert(name.to_string(), value);
                        }
                        None => return Err(format!("flag --{name} expects a value")),
                    }
                } else {
                    args.switches.push(name.to_string());
                }
            } else if args.verb.is_none() {
                args.verb = Some(tok);
            } else {
                args.positional.push(tok);
            }
        }
        Ok(args)
    }

    pub fn value(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }

    pub fn switch(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }

    /// Flags that are not in the reserved list, for per-parameter options
    /// like `--a 1`.
    pub fn extra_flags(&self) -> impl Iterator<Item = (&str, &str)> {
        self.flags
            .iter()
            .filter(|(k, _)| !KNOWN_VALUE_FLAGS.contains(&k.as_str()))
            .map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn usize_value(&self, name: &str) -> Result<Option<usize>, String> {
        match self.value(name) {
            None => Ok(None),
            Some(v) => v
                .parse::<usize>()
                .map(Some)
                .map_err(|_| format!("flag --{name} expects a nonnegative integer, got {v:?}")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(tokens: &[&str]) -> Args {
        Args::parse(tokens.iter().map(|s| s.to_string())).unwrap()
    }

    #[test]
    fn verbs_flags_and_switches() {
        let a = parse(&[
            "verify",
            "--family",
            "wilson",
            "--params",
            "a=1,b=2",
            "--all-catalog",
            "--nmax=5",
        ]);
        assert_eq!(a.verb.as_deref(), Some("verify"));
        assert_eq!(a.value("family"), Some("wilson"));
        assert_eq!(a.value("params"), Some("a=1,b=2"));
        assert_eq!(a.usize_value("nmax").unwrap(), Some(5));
        assert!(a.switch("all-catalog"));
    }

    #[test]
    fn per_parameter_flags() {
        let a = parse(&["limit", "asc1-to-charlier", "--a", "1", "--K", "8"]);
        assert_eq!(a.positional, vec!["asc1-to-charlier"]);
        let extras: Vec<_> = a.extra_flags().collect();
        assert_eq!(extras, vec![("a", "1")]);
        assert_eq!(a.usize_value("K").unwrap(), Some(8));
    }

    #[test]
    fn missing_value_is_an_error() {
        assert!(Args::parse(["graph", "--format"].iter().map(|s| s.to_string())).is_err());
    }
}
