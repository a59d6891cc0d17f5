//! Line-oriented text form of the example catalogue.
//!
//! ```text
//! hnlab-catalogue v1
//! # id | n | m | factors | gcd tuple | label | components | provenance | preconditions
//! caseab1c1_i | 2 | 3,4,5 | 0.0.0.2-1.1.0.0@6,8,10,7#scaled:2:y | 6,8,10,7 | (b.1) | 2:1 | derived | -
//! ```
//!
//! A factor is either `pow:K` (the pure power `W^K`) or
//! `PLUS(-|+)MINUS@WEIGHTS#RULE`, where `PLUS` and `MINUS` are exponent
//! vectors over `(X, Y, Z, W)` joined by dots, `WEIGHTS` is the weight vector,
//! and `RULE` is `scaled:S:V` or `match:V` with `V` one of `x`, `y`, `z`.
//! Factors are separated by `;`, components `SIGMA:LENGTH` by spaces, and
//! preconditions by `;` (`-` when there are none). Blank lines and lines
//! starting with `#` are ignored.

use super::{CatalogueError, ExampleSpec, Factor, Provenance, WeightRule};
use crate::binomial::{Binomial, Joiner, WeightAssignment};
use crate::cases::{CaseRecord, Component};

pub const HEADER: &str = "hnlab-catalogue v1";

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}

fn var_letter(var: usize) -> char {
    ['x', 'y', 'z'][var]
}

fn encode_rule(rule: &WeightRule) -> String {
    match *rule {
        WeightRule::Scaled { scale, tail } => format!("scaled:{scale}:{}", var_letter(tail)),
        WeightRule::Matching { var } => format!("match:{}", var_letter(var)),
    }
}

fn encode_factor(f: &Factor) -> String {
    match f {
        Factor::WPower { exponent } => format!("pow:{exponent}"),
        Factor::Binomial {
            binomial,
            rule,
            weights,
        } => {
            let sign = match binomial.joiner {
                Joiner::Minus => '-',
                Joiner::Plus => '+',
            };
            format!(
                "{}{sign}{}@{}#{}",
                join(&binomial.plus, "."),
                join(&binomial.minus, "."),
                join(&weights.0, ","),
                encode_rule(rule)
            )
        }
    }
}

pub fn encode_spec(spec: &ExampleSpec) -> String {
    let factors: Vec<String> = spec.factors.iter().map(encode_factor).collect();
    let components: Vec<String> = spec
        .predicted
        .components
        .iter()
        .map(|c| format!("{}:{}", c.sigma, c.length))
        .collect();
    let provenance = match spec.provenance {
        Provenance::Derived => "derived",
        Provenance::Asserted => "asserted",
    };
    let preconditions = if spec.preconditions.is_empty() {
        "-".to_string()
    } else {
        spec.preconditions.join("; ")
    };
    [
        spec.id.clone(),
        spec.n.to_string(),
        join(&spec.m, ","),
        factors.join(";"),
        join(&spec.gcd_tuple, ","),
        spec.predicted.label.clone(),
        components.join(" "),
        provenance.to_string(),
        preconditions,
    ]
    .join(" | ")
}

/// The whole catalogue file for `specs`.
pub fn render(specs: &[ExampleSpec]) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    out.push_str(
        "# id | n | m | factors | gcd tuple | label | components | provenance | preconditions\n",
    );
    for spec in specs {
        out.push_str(&encode_spec(spec));
        out.push('\n');
    }
    out
}

struct LineParser {
    line: usize,
}

impl LineParser {
    fn err(&self, message: impl Into<String>) -> CatalogueError {
        CatalogueError::Parse {
            line: self.line,
            message: message.into(),
        }
    }

    fn int(&self, s: &str) -> Result<u64, CatalogueError> {
        s.trim()
            .parse()
            .map_err(|_| self.err(format!("not a non-negative integer: {s:?}")))
    }

    fn ints(&self, s: &str, sep: char) -> Result<Vec<u64>, CatalogueError> {
        s.split(sep).map(|x| self.int(x)).collect()
    }

    fn var(&self, s: &str) -> Result<usize, CatalogueError> {
        match s {
            "x" => Ok(0),
            "y" => Ok(1),
            "z" => Ok(2),
            _ => Err(self.err(format!("unknown variable {s:?}"))),
        }
    }

    fn rule(&self, s: &str) -> Result<WeightRule, CatalogueError> {
        let parts: Vec<&str> = s.split(':').collect();
        match parts.as_slice() {
            ["scaled", scale, tail] => Ok(WeightRule::Scaled {
                scale: self.int(scale)?,
                tail: self.var(tail)?,
            }),
            ["match", var] => Ok(WeightRule::Matching {
                var: self.var(var)?,
            }),
            _ => Err(self.err(format!("bad weight rule {s:?}"))),
        }
    }

    fn factor(&self, s: &str) -> Result<Factor, CatalogueError> {
        let s = s.trim();
        if let Some(k) = s.strip_prefix("pow:") {
            return Ok(Factor::WPower {
                exponent: self.int(k)?,
            });
        }
        let (binomial, rest) = s
            .split_once('@')
            .ok_or_else(|| self.err("factor without '@'"))?;
        let (weights, rule) = rest
            .split_once('#')
            .ok_or_else(|| self.err("factor without '#'"))?;
        let (plus, minus, joiner) = if let Some((p, q)) = binomial.split_once('-') {
            (p, q, Joiner::Minus)
        } else if let Some((p, q)) = binomial.split_once('+') {
            (p, q, Joiner::Plus)
        } else {
            return Err(self.err(format!("binomial without sign: {binomial:?}")));
        };
        let plus = self.ints(plus, '.')?;
        let minus = self.ints(minus, '.')?;
        if plus.len() != 4 || minus.len() != 4 || plus == minus {
            return Err(self.err(format!("bad exponent vectors in {binomial:?}")));
        }
        let weights =
            WeightAssignment::new(self.ints(weights, ',')?).map_err(|e| self.err(e.to_string()))?;
        Ok(Factor::Binomial {
            binomial: Binomial {
                plus,
                minus,
                joiner,
            },
            rule: self.rule(rule)?,
            weights,
        })
    }

    fn spec(&self, text: &str) -> Result<ExampleSpec, CatalogueError> {
        let fields: Vec<&str> = text.split('|').map(str::trim).collect();
        let [id, n, m, factors, gcd, label, components, provenance, preconditions] =
            fields.as_slice()
        else {
            return Err(self.err(format!("expected 9 fields, found {}", fields.len())));
        };
        let n = self.int(n)?;
        let m: [u64; 3] = self
            .ints(m, ',')?
            .try_into()
            .map_err(|_| self.err("m must have three entries"))?;
        let factors = factors
            .split(';')
            .map(|f| self.factor(f))
            .collect::<Result<Vec<_>, _>>()?;
        let components = components
            .split_whitespace()
            .map(|c| {
                let (s, l) = c
                    .split_once(':')
                    .ok_or_else(|| self.err("component without ':'"))?;
                Ok(Component::new(self.int(s)?, self.int(l)?))
            })
            .collect::<Result<Vec<_>, CatalogueError>>()?;
        let mut predicted = CaseRecord::new(n, components);
        predicted.label = label.to_string();
        let provenance = match *provenance {
            "derived" => Provenance::Derived,
            "asserted" => Provenance::Asserted,
            other => return Err(self.err(format!("unknown provenance {other:?}"))),
        };
        let preconditions = if *preconditions == "-" {
            Vec::new()
        } else {
            preconditions
                .split(';')
                .map(|p| p.trim().to_string())
                .collect()
        };
        Ok(ExampleSpec {
            id: id.to_string(),
            n,
            m,
            factors,
            gcd_tuple: self.ints(gcd, ',')?,
            predicted,
            provenance,
            preconditions,
        })
    }
}

/// Parses a catalogue file.
pub fn parse(text: &str) -> Result<Vec<ExampleSpec>, CatalogueError> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, first)) if first.trim() == HEADER => {}
        _ => {
            return Err(CatalogueError::Parse {
                line: 1,
                message: format!("missing header {HEADER:?}"),
            })
        }
    }
    lines
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| LineParser { line: i + 1 }.spec(l))
        .collect()
}

/// The catalogue shipped with the crate.
pub const SHIPPED: &str = include_str!("../../data/catalogue.v1.txt");
