//! Numerical semigroups given by generators.
//!
//! A [`NumericalSemigroup`] stores its minimal generating system together
//! with the Apéry set with respect to the multiplicity. Every other invariant
//! (membership, Frobenius number, gaps, pseudo-Frobenius numbers) is derived
//! from those two lists.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("empty generator list")]
    EmptyInput,
    #[error("generator 0 is not allowed; generators must be positive")]
    ZeroGenerator,
    #[error("generators have gcd {0}, so the complement in N is infinite")]
    NonCofinite(u64),
    #[error("{0} is not an element of the semigroup")]
    NotMember(u64),
}

/// A nonempty list of positive integers with gcd 1, not yet reduced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet(Vec<u64>);

impl GeneratorSet {
    pub fn new(mut gens: Vec<u64>) -> Result<Self, SemigroupError> {
        if gens.is_empty() {
            return Err(SemigroupError::EmptyInput);
        }
        if gens.contains(&0) {
            return Err(SemigroupError::ZeroGenerator);
        }
        gens.sort_unstable();
        gens.dedup();
        let g = gens.iter().fold(0u64, |acc, &x| acc.gcd(&x));
        if g != 1 {
            return Err(SemigroupError::NonCofinite(g));
        }
        Ok(Self(gens))
    }

    pub fn as_slice(&self) -> &[u64] {
        &self.0
    }
}

/// Least element of each residue class modulo `modulus` reachable as a sum of
/// `gens`, by round-robin relaxation over the cyclic residue graph.
///
/// `table` must already hold the exact values for some subset of generators;
/// each generator in `gens` is folded in with two passes around each of its
/// residue cycles. Unreached classes hold `u64::MAX`.
fn relax_residues(table: &mut [u64], gens: &[u64]) {
    let modulus = table.len() as u64;
    for &g in gens {
        let step = g % modulus;
        if step == 0 {
            continue;
        }
        let cycles = step.gcd(&modulus);
        let cycle_len = modulus / cycles;
        for start in 0..cycles {
            // begin at the minimum of the cycle so that one lap is enough
            let mut best = start;
            let mut r = start;
            for _ in 0..cycle_len {
                if table[r as usize] < table[best as usize] {
                    best = r;
                }
                r = (r + step) % modulus;
            }
            if table[best as usize] == u64::MAX {
                continue;
            }
            let mut r = best;
            for _ in 0..cycle_len {
                let next = (r + step) % modulus;
                let candidate = table[r as usize] + g;
                if candidate < table[next as usize] {
                    table[next as usize] = candidate;
                }
                r = next;
            }
        }
    }
}

/// A numerical semigroup in canonical form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumericalSemigroup {
    minimal_gens: Vec<u64>,
    apery: Vec<u64>,
}

/// Frobenius number, gaps, genus and the count of elements below the Frobenius number.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GapProfile {
    /// `-1` encodes the semigroup `N`.
    pub frobenius: i64,
    pub gaps: Vec<u64>,
    pub genus: u64,
    pub n_below: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraitReport {
    pub multiplicity: u64,
    pub embedding_dimension: usize,
    pub symmetric: bool,
    pub irreducible: bool,
    pub pseudo_frobenius: Vec<u64>,
    #[serde(rename = "type")]
    pub semigroup_type: usize,
    pub almost_symmetric: bool,
}

impl NumericalSemigroup {
    /// Reduces `gens` to the minimal generating system and caches the Apéry
    /// set with respect to the multiplicity.
    pub fn from_generators(gens: &GeneratorSet) -> Self {
        let gens = gens.as_slice();
        let mult = gens[0];
        let mut apery = vec![u64::MAX; mult as usize];
        apery[0] = 0;
        let mut minimal_gens = vec![mult];
        // a generator is redundant iff it lies in the semigroup spanned by the
        // smaller ones, and the table is exact for those after each step
        for &g in &gens[1..] {
            if apery[(g % mult) as usize] <= g {
                continue;
            }
            minimal_gens.push(g);
            relax_residues(&mut apery, &[g]);
        }
        debug_assert!(apery.iter().all(|&w| w != u64::MAX));
        Self {
            minimal_gens,
            apery,
        }
    }

    /// Convenience constructor from a raw list.
    pub fn new(gens: &[u64]) -> Result<Self, SemigroupError> {
        Ok(Self::from_generators(&GeneratorSet::new(gens.to_vec())?))
    }

    /// The semigroup `N = <1>`.
    pub fn naturals() -> Self {
        Self {
            minimal_gens: vec![1],
            apery: vec![0],
        }
    }

    pub fn minimal_gens(&self) -> &[u64] {
        &self.minimal_gens
    }

    /// Apéry set with respect to the multiplicity, indexed by residue.
    pub fn apery(&self) -> &[u64] {
        &self.apery
    }

    pub fn multiplicity(&self) -> u64 {
        self.minimal_gens[0]
    }

    pub fn embedding_dimension(&self) -> usize {
        self.minimal_gens.len()
    }

    pub fn is_naturals(&self) -> bool {
        self.multiplicity() == 1
    }

    pub fn contains(&self, n: u64) -> bool {
        let m = self.multiplicity();
        n >= self.apery[(n % m) as usize]
    }

    /// Apéry set with respect to an arbitrary element `n` of the semigroup.
    pub fn apery_set(&self, n: u64) -> Result<Vec<u64>, SemigroupError> {
        if n == 0 || !self.contains(n) {
            return Err(SemigroupError::NotMember(n));
        }
        if n == self.multiplicity() {
            return Ok(self.apery.clone());
        }
        let mut table = vec![u64::MAX; n as usize];
        table[0] = 0;
        relax_residues(&mut table, &self.minimal_gens);
        Ok(table)
    }

    pub fn frobenius(&self) -> i64 {
        let max = *self.apery.iter().max().expect("apery set is never empty");
        max as i64 - self.multiplicity() as i64
    }

    /// Genus from the Apéry set: `sum(apery)/m - (m-1)/2`, without listing gaps.
    pub fn genus(&self) -> u64 {
        let m = self.multiplicity() as u128;
        let sum: u128 = self.apery.iter().map(|&w| w as u128).sum();
        // sum of (w - r)/m over residues r, each term is the gap count in class r
        ((sum - m * (m - 1) / 2) / m) as u64
    }

    pub fn gaps(&self) -> Vec<u64> {
        let f = self.frobenius();
        if f < 0 {
            return Vec::new();
        }
        (1..=f as u64).filter(|&x| !self.contains(x)).collect()
    }

    pub fn profile(&self) -> GapProfile {
        let frobenius = self.frobenius();
        let gaps = self.gaps();
        let genus = gaps.len() as u64;
        let n_below = if frobenius < 0 {
            0
        } else {
            frobenius as u64 + 1 - genus
        };
        GapProfile {
            frobenius,
            gaps,
            genus,
            n_below,
        }
    }

    /// `g = (F+1)/2`; `N` counts as symmetric.
    pub fn is_symmetric(&self) -> bool {
        let f = self.frobenius();
        if f < 0 {
            return true;
        }
        f % 2 == 1 && 2 * self.genus() == f as u64 + 1
    }

    /// `g = ceil((F+1)/2)`; `N` counts as irreducible.
    pub fn is_irreducible(&self) -> bool {
        let f = self.frobenius();
        if f < 0 {
            return true;
        }
        self.genus() == (f as u64 + 2) / 2
    }

    /// Gaps `x` with `x + g` in the semigroup for every minimal generator `g`.
    pub fn pseudo_frobenius(&self) -> Vec<u64> {
        self.gaps()
            .into_iter()
            .filter(|&x| self.minimal_gens.iter().all(|&g| self.contains(x + g)))
            .collect()
    }

    pub fn traits(&self) -> TraitReport {
        let pseudo_frobenius = self.pseudo_frobenius();
        let semigroup_type = pseudo_frobenius.len();
        let almost_symmetric = 2 * self.genus() as i64 == self.frobenius() + semigroup_type as i64;
        TraitReport {
            multiplicity: self.multiplicity(),
            embedding_dimension: self.embedding_dimension(),
            symmetric: self.is_symmetric(),
            irreducible: self.is_irreducible(),
            pseudo_frobenius,
            semigroup_type,
            almost_symmetric,
        }
    }

    /// Every minimal generator of `other` lies in `self`.
    pub fn contains_semigroup(&self, other: &NumericalSemigroup) -> bool {
        other.minimal_gens.iter().all(|&g| self.contains(g))
    }
}

impl fmt::Debug for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NumericalSemigroup{self}")
    }
}

impl fmt::Display for NumericalSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.minimal_gens.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl PartialOrd for NumericalSemigroup {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for NumericalSemigroup {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.minimal_gens.cmp(&other.minimal_gens)
    }
}
