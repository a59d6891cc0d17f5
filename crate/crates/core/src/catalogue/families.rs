//! The built-in example families.

use super::{predicted, ExampleFamily, ExampleSpec, Factor, Provenance, WeightRule};
use crate::binomial::Binomial;
use crate::cover::DELTA;

const X: usize = 0;
const Y: usize = 1;
const Z: usize = 2;

/// Exponent vector over `(X, Y, Z, W)`.
fn mono(x: u64, y: u64, z: u64, w: u64) -> Vec<u64> {
    vec![x, y, z, w]
}

/// `W - X` or `W - Y`.
fn w_minus(var: usize) -> Binomial {
    let mut minus = mono(0, 0, 0, 0);
    minus[var] = 1;
    Binomial::difference(mono(0, 0, 0, 1), minus)
}

fn scaled_gcd_tuple(rule: WeightRule, m: [u64; 3]) -> Vec<u64> {
    rule.evaluate(m).0
}

fn all_delta(ns: &[u64]) -> Vec<(u64, [u64; 3])> {
    ns.iter()
        .flat_map(|&n| DELTA.iter().map(move |&m| (n, m)))
        .collect()
}

/// `f = W^n - X^(n-1) Y`: `I` prime, cases (a), (b.1), (c.1).
struct PrimeViaY;

impl ExampleFamily for PrimeViaY {
    fn id(&self) -> &'static str {
        "caseab1c1_i"
    }

    fn summary(&self) -> &'static str {
        "f = W^n - X^(n-1) Y; I prime; cases (a), (b.1), (c.1)"
    }

    fn admissible(&self) -> Vec<(u64, [u64; 3])> {
        let mut out = Vec::new();
        for n in [1, 2] {
            for m in [[3, 4, 5], [4, 5, 7], [4, 7, 9]] {
                out.push((n, m));
            }
        }
        for m in [[3, 4, 5], [3, 5, 7], [4, 5, 7]] {
            out.push((3, m));
        }
        out
    }

    fn build(&self, n: u64, m: [u64; 3]) -> ExampleSpec {
        let rule = WeightRule::Scaled { scale: n, tail: Y };
        let f = Binomial::difference(mono(0, 0, 0, n), mono(n - 1, 1, 0, 0));
        ExampleSpec {
            id: self.id().into(),
            n,
            m,
            factors: vec![Factor::binomial(f, rule, m)],
            gcd_tuple: scaled_gcd_tuple(rule, m),
            predicted: predicted(n, &[(n, 1)]),
            provenance: Provenance::Derived,
            preconditions: Vec::new(),
        }
    }
}

/// `f = W^3 - X^2 Z`: `I` prime, case (c.1).
struct PrimeViaZ;

impl ExampleFamily for PrimeViaZ {
    fn id(&self) -> &'static str {
        "caseab1c1_ii"
    }

    fn summary(&self) -> &'static str {
        "f = W^n - X^(n-1) Z with n = 3; I prime; case (c.1)"
    }

    fn admissible(&self) -> Vec<(u64, [u64; 3])> {
        vec![(3, [3, 4, 5]), (3, [3, 5, 7]), (3, [4, 7, 9])]
    }

    fn build(&self, n: u64, m: [u64; 3]) -> ExampleSpec {
        let rule = WeightRule::Scaled { scale: n, tail: Z };
        let f = Binomial::difference(mono(0, 0, 0, n), mono(n - 1, 0, 1, 0));
        ExampleSpec {
            id: self.id().into(),
            n,
            m,
            factors: vec![Factor::binomial(f, rule, m)],
            gcd_tuple: scaled_gcd_tuple(rule, m),
            predicted: predicted(n, &[(n, 1)]),
            provenance: Provenance::Derived,
            preconditions: Vec::new(),
        }
    }
}

/// `f = W^n`: one primary component of length `n`.
struct PurePower;

impl ExampleFamily for PurePower {
    fn id(&self) -> &'static str {
        "caseb2c2"
    }

    fn summary(&self) -> &'static str {
        "f = W^n; I primary with (sigma, l) = (1, n); cases (b.2), (c.2)"
    }

    fn admissible(&self) -> Vec<(u64, [u64; 3])> {
        all_delta(&[1, 2, 3])
    }

    fn build(&self, n: u64, m: [u64; 3]) -> ExampleSpec {
        ExampleSpec {
            id: self.id().into(),
            n,
            m,
            factors: vec![Factor::WPower { exponent: n }],
            gcd_tuple: m.to_vec(),
            predicted: predicted(n, &[(1, n)]),
            provenance: Provenance::Derived,
            preconditions: Vec::new(),
        }
    }
}

/// `f = W^(n-1) (W - X)`: a primary component and a prime.
struct PowerTimesLinear;

impl ExampleFamily for PowerTimesLinear {
    fn id(&self) -> &'static str {
        "caseb3c3"
    }

    fn summary(&self) -> &'static str {
        "f = W^(n-1) (W - X); components (1, n-1) and (1, 1); cases (b.3), (c.3)"
    }

    fn admissible(&self) -> Vec<(u64, [u64; 3])> {
        all_delta(&[2, 3])
    }

    fn build(&self, n: u64, m: [u64; 3]) -> ExampleSpec {
        let rule = WeightRule::Matching { var: X };
        ExampleSpec {
            id: self.id().into(),
            n,
            m,
            factors: vec![
                Factor::WPower { exponent: n - 1 },
                Factor::binomial(w_minus(X), rule, m),
            ],
            gcd_tuple: m.to_vec(),
            predicted: predicted(n, &[(1, n - 1), (1, 1)]),
            provenance: Provenance::Derived,
            preconditions: Vec::new(),
        }
    }
}

/// `f = (W^2 - X Y)(W - X)`: two primes, one with `sigma = 2`.
struct TwoPrimes;

impl ExampleFamily for TwoPrimes {
    fn id(&self) -> &'static str {
        "casec4"
    }

    fn summary(&self) -> &'static str {
        "f = (W^(n-1) - X^(n-2) Y)(W - X) with n = 3; components (2, 1) and (1, 1); case (c.4)"
    }

    fn admissible(&self) -> Vec<(u64, [u64; 3])> {
        vec![(3, [3, 4, 5]), (3, [4, 5, 7]), (3, [4, 7, 9])]
    }

    fn build(&self, n: u64, m: [u64; 3]) -> ExampleSpec {
        let scaled = WeightRule::Scaled {
            scale: n - 1,
            tail: Y,
        };
        let first = Binomial::difference(mono(0, 0, 0, n - 1), mono(n - 2, 1, 0, 0));
        ExampleSpec {
            id: self.id().into(),
            n,
            m,
            factors: vec![
                Factor::binomial(first, scaled, m),
                Factor::binomial(w_minus(X), WeightRule::Matching { var: X }, m),
            ],
            gcd_tuple: scaled_gcd_tuple(scaled, m),
            predicted: predicted(n, &[(n - 1, 1), (1, 1)]),
            provenance: Provenance::Asserted,
            preconditions: Vec::new(),
        }
    }
}

/// `f = W^(n-2) (W - X)(W - Y)`: three components.
struct ThreeComponents;

impl ExampleFamily for ThreeComponents {
    fn id(&self) -> &'static str {
        "casec5"
    }

    fn summary(&self) -> &'static str {
        "f = W^(n-2) (W - X)(W - Y) with n = 3; three components (1, 1); case (c.5)"
    }

    fn admissible(&self) -> Vec<(u64, [u64; 3])> {
        all_delta(&[3])
    }

    fn build(&self, n: u64, m: [u64; 3]) -> ExampleSpec {
        ExampleSpec {
            id: self.id().into(),
            n,
            m,
            factors: vec![
                Factor::WPower { exponent: n - 2 },
                Factor::binomial(w_minus(X), WeightRule::Matching { var: X }, m),
                Factor::binomial(w_minus(Y), WeightRule::Matching { var: Y }, m),
            ],
            gcd_tuple: m.to_vec(),
            predicted: predicted(n, &[(1, n - 2), (1, 1), (1, 1)]),
            provenance: Provenance::Asserted,
            preconditions: Vec::new(),
        }
    }
}

/// `f = W^2 + X Z` with `m = (3, 5,7)`: prime with `sigma = 2`.
struct SumOfSquares;

impl ExampleFamily for SumOfSquares {
    fn id(&self) -> &'static str {
        "case357"
    }

    fn summary(&self) -> &'static str {
        "f = W^2 + X Z with m = (3,5,7); I prime; case (b.1)"
    }

    fn admissible(&self) -> Vec<(u64, [u64; 3])> {
        vec![(2, [3, 5, 7])]
    }

    fn build(&self, n: u64, m: [u64; 3]) -> ExampleSpec {
        let rule = WeightRule::Matching { var: Y };
        let f = Binomial::sum(mono(0, 0, 0, 2), mono(1, 0, 1, 0));
        ExampleSpec {
            id: self.id().into(),
            n,
            m,
            factors: vec![Factor::binomial(f, rule, m)],
            gcd_tuple: rule.evaluate(m).0,
            predicted: predicted(n, &[(2, 1)]),
            provenance: Provenance::Derived,
            preconditions: vec![
                "char(k) != 2".into(),
                "k contains no square root of -1".into(),
            ],
        }
    }
}

/// Irreducible `f`, so `R` is a domain; the splitting of `I` depends on `k`.
struct DomainModel {
    id: &'static str,
    summary: &'static str,
    n: u64,
    m: [u64; 3],
    shape: &'static [(u64, u64)],
    provenance: Provenance,
    preconditions: &'static [&'static str],
}

impl ExampleFamily for DomainModel {
    fn id(&self) -> &'static str {
        self.id
    }

    fn summary(&self) -> &'static str {
        self.summary
    }

    fn admissible(&self) -> Vec<(u64, [u64; 3])> {
        vec![(self.n, self.m)]
    }

    fn build(&self, n: u64, m: [u64; 3]) -> ExampleSpec {
        // f = W^n - X^(n-1) Z, homogeneous when W has the weight of y
        let rule = WeightRule::Matching { var: Y };
        let f = Binomial::difference(mono(0, 0, 0, n), mono(n - 1, 0, 1, 0));
        ExampleSpec {
            id: self.id.into(),
            n,
            m,
            factors: vec![Factor::binomial(f, rule, m)],
            gcd_tuple: rule.evaluate(m).0,
            predicted: predicted(n, self.shape),
            provenance: self.provenance,
            preconditions: self.preconditions.iter().map(|s| s.to_string()).collect(),
        }
    }
}

pub fn builtin_families() -> Vec<Box<dyn ExampleFamily>> {
    vec![
        Box::new(PrimeViaY),
        Box::new(PrimeViaZ),
        Box::new(PurePower),
        Box::new(PowerTimesLinear),
        Box::new(TwoPrimes),
        Box::new(ThreeComponents),
        Box::new(SumOfSquares),
        Box::new(DomainModel {
            id: "domain_b3c3",
            summary: "f = W^2 - X Z with m = (3,4,5); R a domain; I = (J + (w-y)) cap (J + (w+y)); case (b.3)",
            n: 2,
            m: [3, 4, 5],
            shape: &[(1, 1), (1, 1)],
            provenance: Provenance::Derived,
            preconditions: &["char(k) != 2"],
        }),
        Box::new(DomainModel {
            id: "domain_c4",
            summary: "f = W^3 - X^2 Z with m = (4,5,7); R a domain; I = (J + (w-y)) cap (J + (w^2+yw+y^2)); case (c.4)",
            n: 3,
            m: [4, 5, 7],
            shape: &[(2, 1), (1, 1)],
            provenance: Provenance::Asserted,
            preconditions: &["k separable", "k contains no cube root of unity other than 1"],
        }),
        Box::new(DomainModel {
            id: "domain_c5",
            summary: "f = W^3 - X^2 Z with m = (4,5,7); R a domain; I splits along the three cube roots of unity; case (c.5)",
            n: 3,
            m: [4, 5, 7],
            shape: &[(1, 1), (1, 1), (1, 1)],
            provenance: Provenance::Derived,
            preconditions: &["k contains a cube root of unity other than 1"],
        }),
    ]
}
