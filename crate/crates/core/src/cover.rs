//! Oversemigroups of a fixed multiplicity and the symmetric-cover decision.
//!
//! Every numerical semigroup `U` containing `S` with `mult(U) = mult(S)` is
//! `S` together with some gaps of `S` lying in `(mult(S), F(S)]`. The search
//! decides those gaps in increasing order. A gap that is a sum of two elements
//! already in `U` is forced in; every other gap branches, inclusion first.
//! Each leaf of that tree is a distinct closed set, so there is no dead end.

use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::semigroup::NumericalSemigroup;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoverError {
    #[error("requested multiplicity {requested} differs from the base multiplicity {actual}")]
    UnsupportedMultiplicity { requested: u64, actual: u64 },
    #[error("witness families need m1 >= 5, got {0}")]
    FamilyRange(u64),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
}

/// The triples not contained in any symmetric semigroup of the same multiplicity.
pub const DELTA: [[u64; 3]; 4] = [[3, 4, 5], [3, 5, 7], [4, 5, 7], [4, 7, 9]];

#[derive(Debug, Clone)]
pub struct CoverQuery {
    pub base: NumericalSemigroup,
    pub target_mult: u64,
}

impl CoverQuery {
    /// Query at the base's own multiplicity.
    pub fn new(base: NumericalSemigroup) -> Self {
        let target_mult = base.multiplicity();
        Self { base, target_mult }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverVerdict {
    pub covered: bool,
    pub witness: Option<NumericalSemigroup>,
    /// Oversemigroups examined before the search stopped. Subtrees without a
    /// symmetric member are skipped unvisited.
    pub search_count: u64,
}

/// Depth-first walk over the oversemigroups of `base` sharing its multiplicity.
struct GapWalk {
    mult: u64,
    frobenius: u64,
    /// membership for `0..=frobenius`; everything above is in
    member: Vec<bool>,
    /// nonzero members `<= frobenius`, increasing
    elements: Vec<u64>,
    candidates: Vec<u64>,
    /// Skip subtrees that cannot contain a symmetric leaf.
    symmetric_only: bool,
}

impl GapWalk {
    fn new(base: &NumericalSemigroup) -> Self {
        let mult = base.multiplicity();
        let frobenius = base.frobenius().max(0) as u64;
        let member: Vec<bool> = (0..=frobenius).map(|x| base.contains(x)).collect();
        let elements = (1..=frobenius).filter(|&x| member[x as usize]).collect();
        let candidates = (mult + 1..=frobenius)
            .filter(|&x| !member[x as usize])
            .collect();
        Self {
            mult,
            frobenius,
            member,
            elements,
            candidates,
            symmetric_only: false,
        }
    }

    /// Whether some completion of the current node can be symmetric.
    ///
    /// Everything below `next` is decided; the undecided gaps are the
    /// candidates from `next` on. A symmetric leaf with Frobenius number `f`
    /// has `f` odd, excludes `f`, and splits every pair `{y, f - y}` with one
    /// side in and one side out, so each `f` is tested against the decided part.
    fn symmetric_completion_possible(&self, next: u64) -> bool {
        let frob = self.frobenius;
        // 0: undecided, 1: in, 2: out
        let state = |y: u64| -> u8 {
            if y > frob || self.member[y as usize] {
                1
            } else if y < next {
                2
            } else {
                0
            }
        };
        let largest_out = (1..next.min(frob + 1))
            .rev()
            .find(|&y| state(y) == 2)
            .unwrap_or(0);
        (largest_out.max(1)..=frob).any(|f| {
            f % 2 == 1
                && state(f) != 1
                && (f == largest_out || f >= next)
                && (1..=f / 2).all(|y| {
                    let (p, q) = (state(y), state(f - y));
                    p == 0 || q == 0 || p != q
                })
        })
    }

    fn is_sum_of_members(&self, x: u64) -> bool {
        self.elements
            .iter()
            .take_while(|&&u| 2 * u <= x)
            .any(|&u| self.member[(x - u) as usize])
    }

    fn walk<F>(&mut self, idx: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&GapWalk) -> ControlFlow<()>,
    {
        let Some(&x) = self.candidates.get(idx) else {
            return visit(self);
        };
        if self.symmetric_only && !self.symmetric_completion_possible(x) {
            return ControlFlow::Continue(());
        }
        let forced = self.is_sum_of_members(x);

        // include x; `elements` stays sorted because every member added so far is < x
        self.member[x as usize] = true;
        let pos = self.elements.partition_point(|&u| u < x);
        self.elements.insert(pos, x);
        let flow = self.walk(idx + 1, visit);
        self.elements.remove(pos);
        self.member[x as usize] = false;
        flow?;

        if forced {
            return ControlFlow::Continue(());
        }
        self.walk(idx + 1, visit)
    }

    /// Frobenius number and genus of the current leaf.
    fn leaf_frobenius_and_genus(&self) -> (i64, u64) {
        let frob = (1..=self.frobenius)
            .rev()
            .find(|&x| !self.member[x as usize])
            .map_or(-1, |x| x as i64);
        let genus = (1..=self.frobenius)
            .filter(|&x| !self.member[x as usize])
            .count() as u64;
        (frob, genus)
    }

    fn leaf_is_symmetric(&self) -> bool {
        let (f, g) = self.leaf_frobenius_and_genus();
        f < 0 || (f % 2 == 1 && 2 * g == f as u64 + 1)
    }

    fn leaf_semigroup(&self) -> NumericalSemigroup {
        if self.frobenius == 0 && self.mult == 1 {
            return NumericalSemigroup::naturals();
        }
        let top = self.frobenius + self.mult;
        let gens: Vec<u64> = (self.mult..=top)
            .filter(|&x| x > self.frobenius || self.member[x as usize])
            .collect();
        NumericalSemigroup::new(&gens).expect("leaf contains a full residue system")
    }
}

fn check_multiplicity(base: &NumericalSemigroup, m: u64) -> Result<(), CoverError> {
    if m != base.multiplicity() {
        return Err(CoverError::UnsupportedMultiplicity {
            requested: m,
            actual: base.multiplicity(),
        });
    }
    Ok(())
}

/// All numerical semigroups containing `base` with multiplicity `m`, in search order.
/// The base itself is always present.
pub fn oversemigroups_with_multiplicity(
    base: &NumericalSemigroup,
    m: u64,
) -> Result<Vec<NumericalSemigroup>, CoverError> {
    check_multiplicity(base, m)?;
    let mut walk = GapWalk::new(base);
    let mut found = Vec::new();
    let _ = walk.walk(0, &mut |leaf| {
        found.push(leaf.leaf_semigroup());
        ControlFlow::Continue(())
    });
    Ok(found)
}

/// Decides whether some symmetric semigroup of multiplicity `q.target_mult`
/// contains `q.base`.
///
/// The search stops at the first symmetric leaf. With inclusion tried first,
/// the witness is the cover that contains the smallest gap on which any two
/// symmetric covers differ.
pub fn symmetric_cover(q: &CoverQuery) -> Result<CoverVerdict, CoverError> {
    check_multiplicity(&q.base, q.target_mult)?;
    let mut walk = GapWalk::new(&q.base);
    walk.symmetric_only = true;
    let mut search_count = 0u64;
    let mut witness = None;
    let _ = walk.walk(0, &mut |leaf| {
        search_count += 1;
        if leaf.leaf_is_symmetric() {
            witness = Some(leaf.leaf_semigroup());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    Ok(CoverVerdict {
        covered: witness.is_some(),
        witness,
        search_count,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaReport {
    pub bound: u64,
    /// Embedding-dimension-3 triples examined.
    pub examined: usize,
    pub flagged: Vec<[u64; 3]>,
    pub expected: Vec<[u64; 3]>,
}

impl DeltaReport {
    pub fn matches(&self) -> bool {
        self.flagged == self.expected
    }
}

/// Triples `3 <= m1 < m2 < m3 <= bound` with gcd 1 and embedding dimension 3.
pub fn embedding_dimension_three_triples(bound: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for m1 in 3..=bound {
        for m2 in m1 + 1..=bound {
            if m2 % m1 == 0 {
                continue;
            }
            for m3 in m2 + 1..=bound {
                let Ok(s) = NumericalSemigroup::new(&[m1, m2, m3]) else {
                    continue;
                };
                if s.embedding_dimension() == 3 {
                    out.push([m1, m2, m3]);
                }
            }
        }
    }
    out
}

fn is_uncovered(triple: &[u64; 3]) -> bool {
    let base = NumericalSemigroup::new(triple).expect("filtered triples have gcd 1");
    let verdict = symmetric_cover(&CoverQuery::new(base)).expect("query uses base multiplicity");
    !verdict.covered
}

/// Flags every embedding-dimension-3 triple up to `bound` that has no
/// symmetric cover of the same multiplicity. `jobs > 1` spreads the triples
/// over a thread pool; the flagged list is sorted either way.
pub fn verify_delta(bound: u64, jobs: usize) -> DeltaReport {
    let triples = embedding_dimension_three_triples(bound);
    let mut flagged: Vec<[u64; 3]> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build()
            .expect("thread pool");
        pool.install(|| {
            triples
                .par_iter()
                .filter(|t| is_uncovered(t))
                .copied()
                .collect()
        })
    } else {
        triples
            .iter()
            .filter(|t| is_uncovered(t))
            .copied()
            .collect()
    };
    flagged.sort_unstable();
    let expected = DELTA.iter().filter(|t| t[2] <= bound).copied().collect();
    DeltaReport {
        bound,
        examined: triples.len(),
        flagged,
        expected,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessFamily {
    pub name: &'static str,
    pub generators: Vec<u64>,
    pub expected_frobenius: u64,
}

/// The four symmetric families covering every triple of multiplicity
/// `m1 >= 5` outside the exceptional list, each checked before returning.
pub fn witness_families(m1: u64) -> Result<Vec<(WitnessFamily, NumericalSemigroup)>, CoverError> {
    if m1 < 5 {
        return Err(CoverError::FamilyRange(m1));
    }
    let families = [
        WitnessFamily {
            name: "consecutive",
            generators: (m1..=2 * m1 - 2).collect(),
            expected_frobenius: 2 * m1 - 1,
        },
        WitnessFamily {
            name: "skip-one",
            generators: std::iter::once(m1).chain(m1 + 2..=2 * m1 - 1).collect(),
            expected_frobenius: 2 * m1 + 1,
        },
        WitnessFamily {
            name: "wide",
            generators: [m1, 2 * m1 - 1]
                .into_iter()
                .chain(2 * m1 + 1..=3 * m1 - 4)
                .chain(std::iter::once(3 * m1 - 2))
                .collect(),
            expected_frobenius: 4 * m1 - 3,
        },
        WitnessFamily {
            name: "skip-three",
            generators: [m1, m1 + 1]
                .into_iter()
                .chain(m1 + 4..=2 * m1 - 1)
                .collect(),
            expected_frobenius: 2 * m1 + 3,
        },
    ];
    families
        .into_iter()
        .map(|family| {
            let s = NumericalSemigroup::new(&family.generators)
                .map_err(|e| CoverError::InvariantViolation(format!("{}: {e}", family.name)))?;
            if s.multiplicity() != m1 {
                return Err(CoverError::InvariantViolation(format!(
                    "{} has multiplicity {}",
                    family.name,
                    s.multiplicity()
                )));
            }
            if s.frobenius() != family.expected_frobenius as i64 || !s.is_symmetric() {
                return Err(CoverError::InvariantViolation(format!(
                    "{} = {s}: F = {}, symmetric = {}",
                    family.name,
                    s.frobenius(),
                    s.is_symmetric()
                )));
            }
            Ok((family, s))
        })
        .collect()
}
