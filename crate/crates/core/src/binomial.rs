//! Binomials over a fixed, positionally indexed variable list and the
//! weight test deciding whether they lie in the kernel of a monomial map.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WeightError {
    #[error("weight vector has {weights} entries but the binomial has {vars} variables")]
    DimensionMismatch { weights: usize, vars: usize },
    #[error("weights must be positive")]
    NonPositiveWeight,
}

/// Sign joining the two monomials.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Joiner {
    Minus,
    Plus,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Binomial {
    pub plus: Vec<u64>,
    pub minus: Vec<u64>,
    pub joiner: Joiner,
}

impl Binomial {
    /// `x^plus - x^minus`.
    pub fn difference(plus: Vec<u64>, minus: Vec<u64>) -> Self {
        assert_eq!(
            plus.len(),
            minus.len(),
            "monomials over different variable lists"
        );
        assert_ne!(plus, minus, "binomial with identical monomials");
        Self {
            plus,
            minus,
            joiner: Joiner::Minus,
        }
    }

    /// `x^plus + x^minus`.
    pub fn sum(plus: Vec<u64>, minus: Vec<u64>) -> Self {
        Self {
            joiner: Joiner::Plus,
            ..Self::difference(plus, minus)
        }
    }

    pub fn num_vars(&self) -> usize {
        self.plus.len()
    }

    /// Pads both monomials with zero exponents up to `vars` variables.
    pub fn extended(&self, vars: usize) -> Self {
        let mut out = self.clone();
        out.plus.resize(vars.max(self.num_vars()), 0);
        out.minus.resize(vars.max(self.num_vars()), 0);
        out
    }

    /// Weighted degrees of the two monomials.
    pub fn weighted_degrees(&self, w: &WeightAssignment) -> Result<(u64, u64), WeightError> {
        if w.0.len() != self.num_vars() {
            return Err(WeightError::DimensionMismatch {
                weights: w.0.len(),
                vars: self.num_vars(),
            });
        }
        let dot = |e: &[u64]| e.iter().zip(&w.0).map(|(a, b)| a * b).sum();
        Ok((dot(&self.plus), dot(&self.minus)))
    }

    pub fn fmt_with(&self, names: &[&str]) -> String {
        let mono = |e: &[u64]| {
            let parts: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k > 0)
                .map(|(k, v)| {
                    if *k == 1 {
                        v.to_string()
                    } else {
                        format!("{v}^{k}")
                    }
                })
                .collect();
            if parts.is_empty() {
                "1".to_string()
            } else {
                parts.join("*")
            }
        };
        let sign = match self.joiner {
            Joiner::Minus => "-",
            Joiner::Plus => "+",
        };
        format!("{}{sign}{}", mono(&self.plus), mono(&self.minus))
    }
}

impl fmt::Display for Binomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: &[&str] = if self.num_vars() <= 3 {
            &["x", "y", "z"]
        } else {
            &["X", "Y", "Z", "W"]
        };
        write!(f, "{}", self.fmt_with(names))
    }
}

/// Positive weights, one per variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct WeightAssignment(pub Vec<u64>);

impl WeightAssignment {
    pub fn new(weights: Vec<u64>) -> Result<Self, WeightError> {
        if weights.contains(&0) {
            return Err(WeightError::NonPositiveWeight);
        }
        Ok(Self(weights))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// A binomial lies in the kernel of `X_i -> t^{w_i}` iff both monomials
/// have the same weighted degree.
pub fn binomial_weight_vanishes(w: &WeightAssignment, b: &Binomial) -> Result<bool, WeightError> {
    let (p, m) = b.weighted_degrees(w)?;
    Ok(p == m)
}
