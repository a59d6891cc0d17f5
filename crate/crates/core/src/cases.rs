//! Shapes of a minimal primary decomposition: multisets of
//! `(sigma, length)` pairs whose weighted sum is the ring multiplicity `e`.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

/// Largest `e` the enumerator accepts.
pub const MAX_E: u64 = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CaseError {
    #[error("multiplicity e must lie in [1, {MAX_E}], got {0}")]
    OutOfRange(u64),
    #[error("components sum to {sum}, expected e = {e}")]
    InconsistentRecord { sum: u64, e: u64 },
    #[error("m1 must be at least 3, got {0}")]
    BadM1(u64),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Component {
    pub sigma: u64,
    pub length: u64,
}

impl Component {
    pub const fn new(sigma: u64, length: u64) -> Self {
        Self { sigma, length }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CaseRecord {
    pub e: u64,
    /// Sorted in decreasing `(sigma, length)` order.
    pub components: Vec<Component>,
    pub label: String,
}

impl CaseRecord {
    /// Builds a record with canonical component order and the standard label.
    pub fn new(e: u64, mut components: Vec<Component>) -> Self {
        components.sort_unstable_by(|x, y| y.cmp(x));
        let sum: u64 = components.iter().map(|c| c.sigma * c.length).sum();
        let label = if sum == e {
            lettered_label(&components).unwrap_or_default().to_string()
        } else {
            String::new()
        };
        Self {
            e,
            components,
            label,
        }
    }

    pub fn weighted_sum(&self) -> u64 {
        self.components.iter().map(|c| c.sigma * c.length).sum()
    }
}

impl fmt::Display for CaseRecord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.label)?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "({},{})", c.sigma, c.length)?;
        }
        write!(f, "}}")
    }
}

/// The lettered cases for `e <= 3`.
const LETTERED: [(&str, &[(u64, u64)]); 9] = [
    ("(a)", &[(1, 1)]),
    ("(b.1)", &[(2, 1)]),
    ("(b.2)", &[(1, 2)]),
    ("(b.3)", &[(1, 1), (1, 1)]),
    ("(c.1)", &[(3, 1)]),
    ("(c.2)", &[(1, 3)]),
    ("(c.3)", &[(1, 2), (1, 1)]),
    ("(c.4)", &[(2, 1), (1, 1)]),
    ("(c.5)", &[(1, 1), (1, 1), (1, 1)]),
];

/// Letter label of a canonically ordered component list, if it has one.
pub fn lettered_label(components: &[Component]) -> Option<&'static str> {
    LETTERED.iter().find_map(|(label, shape)| {
        let same = shape.len() == components.len()
            && shape
                .iter()
                .zip(components)
                .all(|(&(s, l), c)| c.sigma == s && c.length == l);
        same.then_some(*label)
    })
}

/// Partitions of `n` into parts `<= max_part`, parts non-increasing.
fn partitions(n: u64, max_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for part in (1..=n.min(max_part)).rev() {
        prefix.push(part);
        partitions(n - part, part, prefix, out);
        prefix.pop();
    }
}

/// Multisets of components whose products `sigma * length` are exactly `parts`.
fn factor_choices(parts: &[u64], out: &mut Vec<Vec<Component>>) {
    let mut acc: Vec<Vec<Component>> = vec![Vec::new()];
    for &p in parts {
        let divisors: Vec<u64> = (1..=p).filter(|d| p % d == 0).collect();
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                divisors.iter().map(move |&sigma| {
                    let mut next = prefix.clone();
                    next.push(Component::new(sigma, p / sigma));
                    next
                })
            })
            .collect();
    }
    for mut choice in acc {
        choice.sort_unstable_by(|x, y| y.cmp(x));
        if !out.contains(&choice) {
            out.push(choice);
        }
    }
}

/// Every decomposition shape with `sum(sigma * length) = e`.
///
/// Records for `e <= 3` carry the lettered labels `(a)` through `(c.5)` and
/// are returned in label order; larger `e` gets `(e=N, #k)` labels.
pub fn enumerate_cases(e: u64) -> Result<Vec<CaseRecord>, CaseError> {
    if !(1..=MAX_E).contains(&e) {
        return Err(CaseError::OutOfRange(e));
    }
    let mut parts = Vec::new();
    partitions(e, e, &mut Vec::new(), &mut parts);
    let mut shapes = Vec::new();
    for p in &parts {
        factor_choices(p, &mut shapes);
    }
    shapes.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| y.cmp(x)));

    let mut records: Vec<CaseRecord> = shapes
        .into_iter()
        .enumerate()
        .map(|(k, components)| {
            let mut r = CaseRecord::new(e, components);
            if e > 3 {
                r.label = format!("(e={e}, #{})", k + 1);
            }
            r
        })
        .collect();
    if e <= 3 {
        records.sort_by(|x, y| x.label.cmp(&y.label));
    }
    Ok(records)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub e: u64,
    pub m1: u64,
    /// `e(R/p) = m1 * sigma` per component.
    pub component_multiplicities: Vec<u64>,
    /// `sum e(R/p) * length`, which must equal `m1 * e`.
    pub total: u64,
    pub expected_total: u64,
    pub n_components: usize,
}

/// Checks `sum(sigma * length) = e` and computes the per-component
/// multiplicities `m1 * sigma`, whose length-weighted sum is `m1 * e`.
pub fn check_consistency(r: &CaseRecord, m1: u64) -> Result<ConsistencyReport, CaseError> {
    if m1 < 3 {
        return Err(CaseError::BadM1(m1));
    }
    let sum = r.weighted_sum();
    if sum != r.e || r.components.len() as u64 > r.e {
        return Err(CaseError::InconsistentRecord { sum, e: r.e });
    }
    let component_multiplicities: Vec<u64> = r.components.iter().map(|c| m1 * c.sigma).collect();
    let total = component_multiplicities
        .iter()
        .zip(&r.components)
        .map(|(em, c)| em * c.length)
        .sum();
    Ok(ConsistencyReport {
        e: r.e,
        m1,
        component_multiplicities,
        total,
        expected_total: m1 * r.e,
        n_components: r.components.len(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn shape(r: &CaseRecord) -> Vec<(u64, u64)> {
        r.components.iter().map(|c| (c.sigma, c.length)).collect()
    }

    #[test]
    fn small_e() {
        let one = enumerate_cases(1).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(
            (one[0].label.as_str(), shape(&one[0])),
            ("(a)", vec![(1, 1)])
        );

        let two = enumerate_cases(2).unwrap();
        let got: Vec<_> = two.iter().map(|r| (r.label.clone(), shape(r))).collect();
        assert_eq!(
            got,
            vec![
                ("(b.1)".to_string(), vec![(2, 1)]),
                ("(b.2)".to_string(), vec![(1, 2)]),
                ("(b.3)".to_string(), vec![(1, 1), (1, 1)]),
            ]
        );

        let three = enumerate_cases(3).unwrap();
        let labels: Vec<&str> = three.iter().map(|r| r.label.as_str()).collect();
        assert_eq!(labels, ["(c.1)", "(c.2)", "(c.3)", "(c.4)", "(c.5)"]);
        assert_eq!(shape(&three[2]), vec![(1, 2), (1, 1)]);
        assert_eq!(shape(&three[3]), vec![(2, 1), (1, 1)]);
    }

    #[test]
    fn extrapolated_labels() {
        let four = enumerate_cases(4).unwrap();
        assert!(four.iter().all(|r| r.label.starts_with("(e=4, #")));
        assert!(four.iter().all(|r| r.weighted_sum() == 4));
        assert_eq!(enumerate_cases(0), Err(CaseError::OutOfRange(0)));
        assert_eq!(enumerate_cases(7), Err(CaseError::OutOfRange(7)));
    }

    #[test]
    fn consistency() {
        let r = CaseRecord::new(1, vec![Component::new(1, 1)]);
        let c = check_consistency(&r, 3).unwrap();
        assert_eq!((c.component_multiplicities.clone(), c.total), (vec![3], 3));

        let r = CaseRecord::new(2, vec![Component::new(2, 1)]);
        assert_eq!(
            check_consistency(&r, 3).unwrap().component_multiplicities,
            vec![6]
        );

        let r = CaseRecord::new(3, vec![Component::new(1, 1); 3]);
        let c = check_consistency(&r, 4).unwrap();
        assert_eq!(c.component_multiplicities, vec![4, 4, 4]);
        assert_eq!((c.total, c.expected_total), (12, 12));

        let bad = CaseRecord::new(3, vec![Component::new(2, 1)]);
        assert_eq!(
            check_consistency(&bad, 3),
            Err(CaseError::InconsistentRecord { sum: 2, e: 3 })
        );
        assert_eq!(check_consistency(&r, 2), Err(CaseError::BadM1(2)));
    }

    #[test]
    fn display() {
        let r = CaseRecord::new(3, vec![Component::new(1, 1), Component::new(1, 2)]);
        assert_eq!(r.to_string(), "(c.3) {(1,2), (1,1)}");
    }
}
