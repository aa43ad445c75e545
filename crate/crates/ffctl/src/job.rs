//! Job files: one `key = value` pair per line, `#` starts a comment.
//!
//! ```text
//! p = 2
//! vars = x, y
//! a = [x*y]
//! command = chain
//! u = x*y
//! cap = 3
//! ```

use std::collections::HashMap;
use std::fmt;

use clap::ValueEnum;
use ffpure::{Error as EngineError, Ideal, Limits, MonomialOrder, Polynomial, PrimeChar, Ring};
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, ValueEnum)]
pub enum Command {
    Gb,
    Colon,
    Intersect,
    Bracket,
    Fedder,
    Ugens,
    Chain,
    Certify,
    Verify,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Gb => "gb",
            Command::Colon => "colon",
            Command::Intersect => "intersect",
            Command::Bracket => "bracket",
            Command::Fedder => "fedder",
            Command::Ugens => "ugens",
            Command::Chain => "chain",
            Command::Certify => "certify",
            Command::Verify => "verify",
        }
    }
}

impl fmt::Display for Command {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Output {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderName {
    Lex,
    Grevlex,
}

impl From<OrderName> for MonomialOrder {
    fn from(o: OrderName) -> Self {
        match o {
            OrderName::Lex => MonomialOrder::Lex,
            OrderName::Grevlex => MonomialOrder::Grevlex,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpecError {
    #[error("line {line}, column {col}: {msg}")]
    At { line: usize, col: usize, msg: String },
    #[error("missing key `{0}`")]
    Missing(&'static str),
    #[error("{0}")]
    Invalid(String),
}

/// Values given on the command line; they win over the file.
#[derive(Debug, Clone, Default)]
pub struct Overrides {
    pub command: Option<Command>,
    pub order: Option<OrderName>,
    pub cap: Option<u32>,
    pub samples: Option<usize>,
    pub max_pairs: Option<usize>,
    pub output: Option<Output>,
}

pub const DEFAULT_SAMPLES: usize = 10;

/// A validated job with every polynomial parsed in its ring.
#[derive(Debug, Clone)]
pub struct JobSpec {
    pub ring: Ring,
    pub a: Ideal,
    pub command: Command,
    pub u: Option<Polynomial>,
    pub c: Option<Polynomial>,
    /// Second ideal for `colon` and `intersect`.
    pub b: Option<Ideal>,
    /// Bracket exponent: `bracket` computes `a^[p^e]`.
    pub e: u32,
    pub cap: Option<u32>,
    pub samples: usize,
    pub output: Output,
}

const KEYS: &[&str] = &[
    "p", "vars", "a", "u", "c", "b", "e", "cap", "samples", "order", "command", "output",
];

/// A value together with where it starts in the file.
#[derive(Debug, Clone)]
struct Located {
    text: String,
    line: usize,
    col: usize,
}

impl Located {
    fn err(&self, offset: usize, msg: impl Into<String>) -> SpecError {
        SpecError::At {
            line: self.line,
            col: self.col + offset,
            msg: msg.into(),
        }
    }

    fn engine_err(&self, offset: usize, e: EngineError) -> SpecError {
        match e {
            EngineError::Parse { pos, msg } => self.err(offset + pos, msg),
            EngineError::NotPrime(_) => self.err(offset, "p must be prime"),
            other => self.err(offset, other.to_string()),
        }
    }

    fn number<T: std::str::FromStr>(&self, what: &str) -> Result<T, SpecError> {
        self.text
            .parse()
            .map_err(|_| self.err(0, format!("{what} must be a non-negative integer")))
    }

    /// Splits a list, with or without surrounding brackets, into items and
    /// their offsets inside the value.
    fn items(&self, brackets: bool) -> Result<Vec<(usize, &str)>, SpecError> {
        let t = self.text.as_str();
        let (inner, base) = if let Some(rest) = t.strip_prefix('[') {
            let inner = rest
                .strip_suffix(']')
                .ok_or_else(|| self.err(t.len(), "expected `]`"))?;
            (inner, 1)
        } else if brackets {
            return Err(self.err(0, "expected a list `[g1, g2, ...]`"));
        } else {
            (t, 0)
        };
        if inner.trim().is_empty() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        let mut start = 0;
        for piece in inner.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            let item = piece.trim();
            if item.is_empty() {
                return Err(self.err(base + start + lead, "empty list item"));
            }
            out.push((base + start + lead, item));
            start += piece.len() + 1;
        }
        Ok(out)
    }

    fn polynomial(&self, ring: &Ring) -> Result<Polynomial, SpecError> {
        ring.parse(&self.text).map_err(|e| self.engine_err(0, e))
    }

    fn ideal(&self, ring: &Ring) -> Result<Ideal, SpecError> {
        let gens = self
            .items(true)?
            .into_iter()
            .map(|(off, g)| ring.parse(g).map_err(|e| self.engine_err(off, e)))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens).map_err(|e| self.engine_err(0, e))
    }
}

fn split_lines(text: &str) -> Result<HashMap<&'static str, Located>, SpecError> {
    let mut out: HashMap<&'static str, Located> = HashMap::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let body = raw.split('#').next().unwrap_or("");
        if body.trim().is_empty() {
            continue;
        }
        let eq = body.find('=').ok_or_else(|| SpecError::At {
            line,
            col: body.len() - body.trim_start().len() + 1,
            msg: "expected `key = value`".into(),
        })?;
        let key_part = &body[..eq];
        let key_col = key_part.len() - key_part.trim_start().len() + 1;
        let key = key_part.trim();
        let known = KEYS.iter().find(|k| **k == key).ok_or_else(|| SpecError::At {
            line,
            col: key_col,
            msg: format!("unknown key `{key}`"),
        })?;
        let value_part = &body[eq + 1..];
        let lead = value_part.len() - value_part.trim_start().len();
        let located = Located {
            text: value_part.trim().to_string(),
            line,
            col: eq + 2 + lead,
        };
        if out.insert(known, located).is_some() {
            return Err(SpecError::At {
                line,
                col: key_col,
                msg: format!("duplicate key `{key}`"),
            });
        }
    }
    Ok(out)
}

fn choice<T: ValueEnum>(v: &Located, what: &str) -> Result<T, SpecError> {
    T::from_str(&v.text, false).map_err(|_| v.err(0, format!("unknown {what} `{}`", v.text)))
}

impl JobSpec {
    pub fn parse(text: &str) -> Result<JobSpec, SpecError> {
        Self::parse_with(text, &Overrides::default())
    }

    /// Parses a job file, letting `over` replace the matching keys.
    pub fn parse_with(text: &str, over: &Overrides) -> Result<JobSpec, SpecError> {
        let kv = split_lines(text)?;
        let get = |k: &'static str| kv.get(k).ok_or(SpecError::Missing(k));

        let command = match over.command {
            Some(c) => c,
            None => choice(get("command")?, "command")?,
        };
        let order = match over.order {
            Some(o) => o,
            None => kv
                .get("order")
                .map(|v| choice(v, "order"))
                .transpose()?
                .unwrap_or(OrderName::Grevlex),
        };
        let output = match over.output {
            Some(o) => o,
            None => kv
                .get("output")
                .map(|v| choice(v, "output"))
                .transpose()?
                .unwrap_or_default(),
        };

        let pv = get("p")?;
        let p = PrimeChar::new(pv.number("p")?).map_err(|e| pv.engine_err(0, e))?;
        let vv = get("vars")?;
        let names: Vec<&str> = vv.items(false)?.into_iter().map(|(_, v)| v).collect();
        if names.is_empty() {
            return Err(vv.err(0, "vars must list at least one variable"));
        }
        let mut ring = Ring::new(p, &names, order.into()).map_err(|e| vv.engine_err(0, e))?;
        if let Some(max_pairs) = over.max_pairs {
            ring = ring.with_limits(Limits {
                max_pairs,
                ..*ring.limits()
            });
        }

        let a = get("a")?.ideal(&ring)?;
        let u = kv.get("u").map(|v| v.polynomial(&ring)).transpose()?;
        let c = kv.get("c").map(|v| v.polynomial(&ring)).transpose()?;
        let b = kv.get("b").map(|v| v.ideal(&ring)).transpose()?;
        let e = kv.get("e").map(|v| v.number("e")).transpose()?.unwrap_or(1);
        let cap = match over.cap {
            Some(c) => Some(c),
            None => kv.get("cap").map(|v| v.number("cap")).transpose()?,
        };
        let samples = match over.samples {
            Some(s) => s,
            None => kv
                .get("samples")
                .map(|v| v.number("samples"))
                .transpose()?
                .unwrap_or(DEFAULT_SAMPLES),
        };

        let spec = JobSpec {
            ring,
            a,
            command,
            u,
            c,
            b,
            e,
            cap,
            samples,
            output,
        };
        spec.check_arguments()?;
        Ok(spec)
    }

    fn check_arguments(&self) -> Result<(), SpecError> {
        let need = |ok: bool, what: &str| {
            if ok {
                Ok(())
            } else {
                Err(SpecError::Invalid(format!("{} requires {what}", self.command)))
            }
        };
        match self.command {
            Command::Chain => {
                need(self.u.is_some(), "u")?;
                need(self.cap.is_some(), "cap")
            }
            Command::Certify => need(self.c.is_some(), "c"),
            Command::Colon | Command::Intersect => need(self.b.is_some(), "b"),
            _ => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn minimal_file() {
        let spec = JobSpec::parse("p = 2\nvars = x, y\na = [x*y]\ncommand = fedder\n").unwrap();
        assert_eq!(spec.command, Command::Fedder);
        assert_eq!(spec.ring.vars(), ["x", "y"]);
        assert_eq!(spec.a.generators().len(), 1);
        assert_eq!(spec.samples, DEFAULT_SAMPLES);
        assert_eq!(spec.output, Output::Text);
    }

    #[test]
    fn comments_brackets_and_overrides() {
        let text = "# node\np=3\nvars=[x,y]\na=[x*y - 1, x^2] # trailing\ncommand=gb\norder=lex\n";
        let over = Overrides {
            order: Some(OrderName::Grevlex),
            command: Some(Command::Fedder),
            ..Overrides::default()
        };
        let spec = JobSpec::parse_with(text, &over).unwrap();
        assert_eq!(spec.command, Command::Fedder);
        assert_eq!(*spec.ring.order(), MonomialOrder::Grevlex);
        assert_eq!(spec.a.generators().len(), 2);
    }

    #[test]
    fn guards() {
        let base = "p = 2\nvars = x, y\na = [x*y]\n";
        let err = JobSpec::parse(&format!("{base}command = chain\ncap = 3\n")).unwrap_err();
        assert_eq!(err.to_string(), "chain requires u");
        let err = JobSpec::parse(&format!("{base}command = certify\n")).unwrap_err();
        assert_eq!(err.to_string(), "certify requires c");

        let err = JobSpec::parse("p = 4\nvars = x\na = [x]\ncommand = gb\n").unwrap_err();
        assert_eq!(
            err,
            SpecError::At {
                line: 1,
                col: 5,
                msg: "p must be prime".into()
            }
        );
    }

    #[test]
    fn positions() {
        let err = JobSpec::parse("p = 2\nvars = x, y\na = [x*y, x*z]\ncommand = gb\n").unwrap_err();
        match err {
            SpecError::At { line, col, msg } => {
                assert_eq!(line, 3);
                assert_eq!(col, 11);
                assert!(msg.contains('z'), "{msg}");
            }
            other => panic!("{other:?}"),
        }
        let err = JobSpec::parse("p = 2\nvars = x\na = [x^]\ncommand = gb\n").unwrap_err();
        assert!(matches!(err, SpecError::At { line: 3, .. }), "{err}");
        let err = JobSpec::parse("p = 2\nvarz = x\n").unwrap_err();
        assert_eq!(
            err,
            SpecError::At {
                line: 2,
                col: 1,
                msg: "unknown key `varz`".into()
            }
        );
        let err = JobSpec::parse("p = 2\nvars = x, @t0\na = [x]\ncommand = gb\n").unwrap_err();
        assert!(matches!(err, SpecError::At { line: 2, .. }), "{err}");
        assert_eq!(
            JobSpec::parse("vars = x\na = [x]\ncommand = gb\n").unwrap_err(),
            SpecError::Missing("p")
        );
    }
}
