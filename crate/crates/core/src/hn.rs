//! Herzog-Northcott data: the 2x3 exponent matrix, its three 2x2 minors,
//! the multiplier triple `m` and the value semigroup `<m1, m2, m3>`.

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

use crate::binomial::{Binomial, WeightAssignment};
use crate::cases::{enumerate_cases, CaseError};
use crate::cover::{symmetric_cover, CoverQuery};
use crate::semigroup::NumericalSemigroup;

/// Largest exponent accepted; keeps every `m_i` below 10^6.
pub const MAX_EXPONENT: u64 = 500;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HnError {
    #[error("exponents must lie in [1, {MAX_EXPONENT}], got {0:?}")]
    InvalidExponent(Vec<u64>),
    #[error("expected 3 <= m1 < m2 < m3 with gcd 1, got {0:?}")]
    InvalidTriple([u64; 3]),
    #[error("exponent recovery is only available for m1 in {{3, 4}}, got m1 = {0}")]
    NotImplementedRange(u64),
    #[error("ring multiplicity e must be 1, 2 or 3, got {0}")]
    BadMultiplicity(u64),
    #[error(transparent)]
    Cases(#[from] CaseError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ExponentPair {
    pub a: [u64; 3],
    pub b: [u64; 3],
}

impl ExponentPair {
    pub fn new(a: [u64; 3], b: [u64; 3]) -> Result<Self, HnError> {
        if a.iter().chain(&b).any(|&v| v == 0 || v > MAX_EXPONENT) {
            return Err(HnError::InvalidExponent(
                a.iter().chain(&b).copied().collect(),
            ));
        }
        Ok(Self { a, b })
    }

    pub fn c(&self) -> [u64; 3] {
        [
            self.a[0] + self.b[0],
            self.a[1] + self.b[1],
            self.a[2] + self.b[2],
        ]
    }

    /// `m` from the 2x2 determinants `c_j c_k - a_j b_k`.
    pub fn multipliers(&self) -> [u64; 3] {
        let [a1, a2, a3] = self.a;
        let [b1, b2, b3] = self.b;
        let [c1, c2, c3] = self.c();
        [c2 * c3 - a2 * b3, c1 * c3 - a3 * b1, c1 * c2 - a1 * b2]
    }

    /// `m` from the expanded sums of products; always equal to [`Self::multipliers`].
    pub fn multipliers_expanded(&self) -> [u64; 3] {
        let [a1, a2, a3] = self.a;
        let [b1, b2, b3] = self.b;
        [
            a2 * a3 + a3 * b2 + b2 * b3,
            a1 * a3 + a1 * b3 + b1 * b3,
            a1 * a2 + a2 * b1 + b1 * b2,
        ]
    }

    /// Relabelling that exchanges `m1` and `m2`.
    pub fn swap_first(&self) -> Self {
        let [a1, a2, a3] = self.a;
        let [b1, b2, b3] = self.b;
        Self {
            a: [b2, b1, b3],
            b: [a2, a1, a3],
        }
    }

    /// Relabelling that exchanges `m2` and `m3`.
    pub fn swap_last(&self) -> Self {
        let [a1, a2, a3] = self.a;
        let [b1, b2, b3] = self.b;
        Self {
            a: [b1, b3, b2],
            b: [a1, a3, a2],
        }
    }

    /// Applies the two relabellings until `m1 <= m2 <= m3`.
    pub fn normalize(&self) -> Self {
        let mut e = *self;
        loop {
            let [m1, m2, m3] = e.multipliers();
            if m1 > m2 {
                e = e.swap_first();
            } else if m2 > m3 {
                e = e.swap_last();
            } else {
                return e;
            }
        }
    }

    /// `v1 = x^c1 - y^b2 z^a3`, `v2 = y^c2 - x^a1 z^b3`, `D = z^c3 - x^b1 y^a2`.
    pub fn minors(&self) -> [Binomial; 3] {
        let [a1, a2, a3] = self.a;
        let [b1, b2, b3] = self.b;
        let [c1, c2, c3] = self.c();
        [
            Binomial::difference(vec![c1, 0, 0], vec![0, b2, a3]),
            Binomial::difference(vec![0, c2, 0], vec![a1, 0, b3]),
            Binomial::difference(vec![0, 0, c3], vec![b1, a2, 0]),
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HnIdeal {
    pub exponents: ExponentPair,
    /// `v1, v2, D` over `(x, y, z)`.
    pub generators: [Binomial; 3],
    pub m: [u64; 3],
    pub gcd: u64,
    /// `<m1, m2, m3>`, present only when `gcd == 1`.
    pub value_semigroup: Option<NumericalSemigroup>,
}

pub fn build(e: &ExponentPair) -> HnIdeal {
    let m = e.multipliers();
    debug_assert_eq!(m, e.multipliers_expanded());
    debug_assert!(m.iter().all(|&mi| mi >= 3));
    let gcd = m[0].gcd(&m[1]).gcd(&m[2]);
    let value_semigroup = (gcd == 1).then(|| NumericalSemigroup::new(&m).expect("gcd checked"));
    HnIdeal {
        exponents: *e,
        generators: e.minors(),
        m,
        gcd,
        value_semigroup,
    }
}

impl HnIdeal {
    pub fn weights(&self) -> WeightAssignment {
        WeightAssignment(self.m.to_vec())
    }
}

/// Every generator is homogeneous for the weights `m`.
pub fn vanishing_check(h: &HnIdeal) -> bool {
    let w = h.weights();
    h.generators
        .iter()
        .all(|g| g.weighted_degrees(&w).is_ok_and(|(p, q)| p == q))
}

fn exact_div(num: i64, den: i64) -> Option<u64> {
    (num > 0 && num % den == 0).then(|| (num / den) as u64)
}

/// Recovers every exponent pair with the given sorted multiplier triple,
/// for `m1 = 3` and `m1 = 4`.
pub fn solve_exponents(m: [u64; 3]) -> Result<Vec<ExponentPair>, HnError> {
    let [m1, m2, m3] = m;
    if !(3 <= m1 && m1 < m2 && m2 < m3) || m1.gcd(&m2).gcd(&m3) != 1 {
        return Err(HnError::InvalidTriple(m));
    }
    let (p2, p3) = (m2 as i64, m3 as i64);
    let mut candidates = Vec::new();
    match m1 {
        3 => {
            // a2 = a3 = b2 = b3 = 1
            if let (Some(a1), Some(b1)) = (exact_div(2 * p2 - p3, 3), exact_div(2 * p3 - p2, 3)) {
                candidates.push(([a1, 1, 1], [b1, 1, 1]));
            }
        }
        4 => {
            // a2 = 2, a3 = b2 = b3 = 1
            if let (Some(a1), Some(b1)) = (exact_div(3 * p2 - p3, 4), exact_div(p3 - p2, 2)) {
                candidates.push(([a1, 2, 1], [b1, 1, 1]));
            }
            // b3 = 2, a2 = a3 = b2 = 1; a1 = (m2 - m3)/2 < 0 whenever m2 < m3
            if let (Some(a1), Some(b1)) = (exact_div(p2 - p3, 2), exact_div(3 * p3 - p2, 4)) {
                candidates.push(([a1, 1, 1], [b1, 1, 2]));
            }
        }
        _ => return Err(HnError::NotImplementedRange(m1)),
    }
    Ok(candidates
        .into_iter()
        .filter_map(|(a, b)| ExponentPair::new(a, b).ok())
        .filter(|e| e.multipliers() == m)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Outcome {
    /// `I` is prime.
    Prime,
    /// Either `I` is prime or some minimal prime over `I` is not a complete intersection.
    PrimeOrNonCI,
    HypothesisNotSatisfied,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TheoremVerdict {
    pub hypothesis_ok: bool,
    pub multiplicity_e: u64,
    pub outcome: Outcome,
    pub possible_cases: Vec<String>,
    /// Why the hypothesis fails, when it does.
    pub failure: Option<String>,
}

/// What the main theorem licenses for `h` over a ring of multiplicity `e`.
/// The hypothesis is: `gcd(m) = 1`, embedding dimension 3, and no symmetric
/// semigroup of multiplicity `mult(S(I))` contains `S(I)`.
pub fn theorem_verdict(h: &HnIdeal, e: u64) -> Result<TheoremVerdict, HnError> {
    if !(1..=3).contains(&e) {
        return Err(HnError::BadMultiplicity(e));
    }
    let possible_cases = enumerate_cases(e)?.into_iter().map(|r| r.label).collect();
    let failure = match &h.value_semigroup {
        None => Some(format!("gcd(m) = {}", h.gcd)),
        Some(s) if s.embedding_dimension() != 3 => Some(format!(
            "S(I) = {s} has embedding dimension {}",
            s.embedding_dimension()
        )),
        Some(s) => {
            let verdict = symmetric_cover(&CoverQuery::new(s.clone()))
                .expect("query at the base multiplicity");
            verdict
                .witness
                .map(|w| format!("S(I) = {s} is contained in the symmetric semigroup {w}"))
        }
    };
    let hypothesis_ok = failure.is_none();
    let outcome = match (hypothesis_ok, e) {
        (false, _) => Outcome::HypothesisNotSatisfied,
        (true, 1) => Outcome::Prime,
        (true, _) => Outcome::PrimeOrNonCI,
    };
    Ok(TheoremVerdict {
        hypothesis_ok,
        multiplicity_e: e,
        outcome,
        possible_cases,
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pair(a: [u64; 3], b: [u64; 3]) -> ExponentPair {
        ExponentPair::new(a, b).unwrap()
    }

    #[test]
    fn builds_the_four_exceptional_ideals() {
        let h = build(&pair([1, 1, 1], [2, 1, 1]));
        let shown: Vec<String> = h.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x^3-y*z", "y^2-x*z", "z^2-x^2*y"]);
        assert_eq!(h.m, [3, 4, 5]);
        assert_eq!(
            h.value_semigroup.as_ref().unwrap().minimal_gens(),
            &[3, 4, 5]
        );

        let h = build(&pair([1, 1, 1], [3, 1, 1]));
        let shown: Vec<String> = h.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x^4-y*z", "y^2-x*z", "z^2-x^3*y"]);
        assert_eq!(h.m, [3, 5, 7]);

        let h = build(&pair([2, 2, 1], [1, 1, 1]));
        let shown: Vec<String> = h.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x^3-y*z", "y^3-x^2*z", "z^2-x*y^2"]);
        assert_eq!(h.m, [4, 5, 7]);

        let h = build(&pair([3, 2, 1], [1, 1, 1]));
        let shown: Vec<String> = h.generators.iter().map(|g| g.to_string()).collect();
        assert_eq!(shown, ["x^4-y*z", "y^3-x^3*z", "z^2-x*y^2"]);
        assert_eq!(h.m, [4, 7, 9]);
    }

    #[test]
    fn gcd_not_one_has_no_semigroup() {
        // a = b = (1,1,1): m = (3,3,3)
        let h = build(&pair([1, 1, 1], [1, 1, 1]));
        assert_eq!(h.m, [3, 3, 3]);
        assert_eq!(h.gcd, 3);
        assert!(h.value_semigroup.is_none());
        assert!(vanishing_check(&h));
    }

    #[test]
    fn vanishing() {
        let h = build(&pair([1, 1, 1], [2, 1, 1]));
        assert_eq!(
            h.generators[0].weighted_degrees(&h.weights()).unwrap(),
            (9, 9)
        );
        assert!(vanishing_check(&h));
        let h4 = build(&pair([3, 2, 1], [1, 1, 1]));
        assert_eq!(
            h4.generators[2].weighted_degrees(&h4.weights()).unwrap(),
            (18, 18)
        );

        let mut bad = h.clone();
        bad.generators[0] = Binomial::difference(vec![3, 0, 0], vec![0, 2, 1]);
        assert!(!vanishing_check(&bad));
    }

    #[test]
    fn normalization() {
        let i1 = pair([1, 1, 1], [2, 1, 1]);
        assert_eq!(i1.normalize(), i1);
        let swapped = i1.swap_first();
        assert_eq!(swapped.multipliers(), [4, 3, 5]);
        assert_eq!(swapped.normalize().multipliers(), [3, 4, 5]);
        let swapped = i1.swap_last();
        assert_eq!(swapped.multipliers(), [3, 5, 4]);
        assert_eq!(swapped.normalize().multipliers(), [3, 4, 5]);

        let e = pair([1, 1, 2], [2, 1, 1]);
        let m = e.normalize().multipliers();
        assert!(m[0] <= m[1] && m[1] <= m[2], "{m:?}");
        let mut sorted = e.multipliers();
        sorted.sort_unstable();
        assert_eq!(m, sorted);
    }

    #[test]
    fn solver() {
        assert_eq!(
            solve_exponents([3, 4, 5]).unwrap(),
            vec![pair([1, 1, 1], [2, 1, 1])]
        );
        assert_eq!(
            solve_exponents([3, 5, 7]).unwrap(),
            vec![pair([1, 1, 1], [3, 1, 1])]
        );
        assert_eq!(
            solve_exponents([4, 5, 7]).unwrap(),
            vec![pair([2, 2, 1], [1, 1, 1])]
        );
        assert_eq!(
            solve_exponents([4, 7, 9]).unwrap(),
            vec![pair([3, 2, 1], [1, 1, 1])]
        );
        assert_eq!(solve_exponents([3, 4, 7]).unwrap(), vec![]);
        assert_eq!(
            solve_exponents([5, 6, 7]),
            Err(HnError::NotImplementedRange(5))
        );
        assert_eq!(
            solve_exponents([4, 4, 7]),
            Err(HnError::InvalidTriple([4, 4, 7]))
        );
        assert_eq!(
            solve_exponents([3, 6, 9]),
            Err(HnError::InvalidTriple([3, 6, 9]))
        );
    }

    #[test]
    fn verdicts() {
        let i1 = build(&pair([1, 1, 1], [2, 1, 1]));
        let v = theorem_verdict(&i1, 1).unwrap();
        assert!(v.hypothesis_ok);
        assert_eq!(v.outcome, Outcome::Prime);
        assert_eq!(v.possible_cases, ["(a)"]);

        let v = theorem_verdict(&i1, 3).unwrap();
        assert_eq!(v.outcome, Outcome::PrimeOrNonCI);
        assert_eq!(v.possible_cases.len(), 5);

        // m = (3,7,8) comes from a = (2,1,1), b = (3,1,1) and lies in <3,4>
        let h = build(&pair([2, 1, 1], [3, 1, 1]));
        assert_eq!(h.m, [3, 7, 8]);
        let v = theorem_verdict(&h, 2).unwrap();
        assert!(!v.hypothesis_ok);
        assert_eq!(v.outcome, Outcome::HypothesisNotSatisfied);

        assert_eq!(theorem_verdict(&i1, 4), Err(HnError::BadMultiplicity(4)));
        assert_eq!(theorem_verdict(&i1, 0), Err(HnError::BadMultiplicity(0)));
    }

    #[test]
    fn exponent_bounds() {
        assert!(ExponentPair::new([0, 1, 1], [1, 1, 1]).is_err());
        assert!(ExponentPair::new([1, 1, 1], [1, 1, MAX_EXPONENT + 1]).is_err());
    }
}
