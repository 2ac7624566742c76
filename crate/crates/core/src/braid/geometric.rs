use std::fmt;

use serde::{Deserialize, Serialize};

/// Errors from braid arithmetic.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum BraidError {
    #[error("crossing index {index} out of range for {strands} strands")]
    CrossingOutOfRange { index: usize, strands: usize },
    #[error("strand index {index} out of range for {strands} strands")]
    StrandOutOfRange { index: usize, strands: usize },
    #[error("operation requires a pure braid (identity strand permutation)")]
    NotPure,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("generator A[{i},{j}] does not fit in {strands} strands")]
    GeneratorOutOfRange { i: u32, j: u32, strands: usize },
    #[error("cable multiplicities must be positive")]
    ZeroMultiplicity,
    #[error("full twist needs at least 2 strands")]
    TooFewStrands,
    #[error("braid parse error: {0}")]
    Parse(String),
}

/// A braid as a sequence of signed elementary crossings with strand
/// bookkeeping. Crossing `+c` is the positive crossing of the strands at
/// positions c and c+1 (1-based); `-c` is its inverse.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct GeometricBraid {
    strands: usize,
    crossings: Vec<i32>,
    permutation: Vec<usize>,
}

impl GeometricBraid {
    pub fn identity(strands: usize) -> GeometricBraid {
        GeometricBraid {
            strands,
            crossings: Vec::new(),
            permutation: (1..=strands).collect(),
        }
    }

    pub fn from_crossings(strands: usize, crossings: Vec<i32>) -> Result<GeometricBraid, BraidError> {
        for &c in &crossings {
            let idx = c.unsigned_abs() as usize;
            if c == 0 || idx + 1 > strands {
                return Err(BraidError::CrossingOutOfRange { index: idx, strands });
            }
        }
        let permutation = permutation_of(strands, &crossings);
        Ok(GeometricBraid { strands, crossings, permutation })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn crossings(&self) -> &[i32] {
        &self.crossings
    }

    /// Position each strand ends at: `permutation()[k-1]` is where the
    /// strand starting at position k finishes.
    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    pub fn is_pure(&self) -> bool {
        self.permutation.iter().enumerate().all(|(i, &p)| p == i + 1)
    }

    pub fn mul(&self, other: &GeometricBraid) -> Result<GeometricBraid, BraidError> {
        if self.strands != other.strands {
            return Err(BraidError::StrandMismatch(self.strands, other.strands));
        }
        let mut crossings = self.crossings.clone();
        crossings.extend_from_slice(&other.crossings);
        GeometricBraid::from_crossings(self.strands, crossings)
    }

    pub fn inverse(&self) -> GeometricBraid {
        let crossings: Vec<i32> = self.crossings.iter().rev().map(|c| -c).collect();
        GeometricBraid::from_crossings(self.strands, crossings).expect("inverse of valid braid")
    }

    pub fn pow(&self, exp: i64) -> GeometricBraid {
        let base = if exp >= 0 { self.clone() } else { self.inverse() };
        let mut out = GeometricBraid::identity(self.strands);
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base).expect("same strand count");
        }
        out
    }

    /// Deletes the k-th strand (1-based), dropping every crossing it is
    /// involved in and reindexing the rest. Defined here only for pure
    /// braids so that the reindexing contract is unambiguous.
    pub fn remove_strand(&self, k: usize) -> Result<GeometricBraid, BraidError> {
        if k == 0 || k > self.strands {
            return Err(BraidError::StrandOutOfRange { index: k, strands: self.strands });
        }
        if !self.is_pure() {
            return Err(BraidError::NotPure);
        }
        let mut pos = k; // current position of the tracked strand
        let mut out: Vec<i32> = Vec::with_capacity(self.crossings.len());
        for &c in &self.crossings {
            let idx = c.unsigned_abs() as usize;
            if idx == pos {
                pos = idx + 1;
            } else if idx + 1 == pos {
                pos = idx;
            } else {
                let shifted = if idx > pos { idx - 1 } else { idx };
                out.push(if c > 0 { shifted as i32 } else { -(shifted as i32) });
            }
        }
        debug_assert_eq!(pos, k);
        GeometricBraid::from_crossings(self.strands - 1, out)
    }

    /// Replaces the k-th strand by two parallel strands, the new one
    /// inserted immediately to its right, with no crossings between the
    /// pair. Every crossing involving the strand becomes the block of two
    /// crossings that transports the pair.
    pub fn double_strand(&self, k: usize) -> Result<GeometricBraid, BraidError> {
        if k == 0 || k > self.strands {
            return Err(BraidError::StrandOutOfRange { index: k, strands: self.strands });
        }
        let mut pos = k; // position of the tracked strand in the original braid
        let mut out: Vec<i32> = Vec::with_capacity(2 * self.crossings.len());
        for &c in &self.crossings {
            let idx = c.unsigned_abs() as usize;
            let sign: i32 = if c > 0 { 1 } else { -1 };
            let p = pos as i32; // pair occupies (p, p+1) in the doubled braid
            if idx == pos {
                // Pair crosses the single strand to its right.
                out.push(sign * (p + 1));
                out.push(sign * p);
                pos = idx + 1;
            } else if idx + 1 == pos {
                // Single strand to the left crosses the pair.
                out.push(sign * (p - 1));
                out.push(sign * p);
                pos = idx;
            } else {
                let shifted = if idx > pos { idx + 1 } else { idx };
                out.push(sign * shifted as i32);
            }
        }
        GeometricBraid::from_crossings(self.strands + 1, out)
    }

    /// Iterated strand doubling: strand s is replaced by `multiplicities[s-1]`
    /// parallel strands. All multiplicities 1 is the identity operation.
    pub fn cable(&self, multiplicities: &[usize]) -> Result<GeometricBraid, BraidError> {
        if multiplicities.len() != self.strands {
            return Err(BraidError::StrandMismatch(multiplicities.len(), self.strands));
        }
        if multiplicities.iter().any(|&m| m == 0) {
            return Err(BraidError::ZeroMultiplicity);
        }
        if !self.is_pure() {
            return Err(BraidError::NotPure);
        }
        let mut braid = self.clone();
        for s in (1..=self.strands).rev() {
            for _ in 1..multiplicities[s - 1] {
                braid = braid.double_strand(s)?;
            }
        }
        Ok(braid)
    }

    /// Parses the crossing syntax `s1 s2^-1 s1`.
    pub fn parse(strands: usize, input: &str) -> Result<GeometricBraid, BraidError> {
        let mut crossings = Vec::new();
        for tok in input.split_whitespace() {
            let rest = tok
                .strip_prefix('s')
                .ok_or_else(|| BraidError::Parse(format!("expected sN token, got {tok}")))?;
            let (num, exp) = match rest.split_once('^') {
                Some((n, e)) => {
                    let exp: i64 = e
                        .parse()
                        .map_err(|_| BraidError::Parse(format!("bad exponent in {tok}")))?;
                    (n, exp)
                }
                None => (rest, 1),
            };
            let idx: usize = num
                .parse()
                .map_err(|_| BraidError::Parse(format!("bad crossing index in {tok}")))?;
            if idx == 0 || idx >= strands {
                return Err(BraidError::CrossingOutOfRange { index: idx, strands });
            }
            let sign: i32 = if exp >= 0 { 1 } else { -1 };
            for _ in 0..exp.unsigned_abs() {
                crossings.push(sign * idx as i32);
            }
        }
        GeometricBraid::from_crossings(strands, crossings)
    }
}

impl fmt::Display for GeometricBraid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.crossings.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.crossings.len() {
            let c = self.crossings[i];
            let mut run = 1usize;
            while i + run < self.crossings.len() && self.crossings[i + run] == c {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp = if c > 0 { run as i64 } else { -(run as i64) };
            if exp == 1 {
                write!(f, "s{}", c.unsigned_abs())?;
            } else {
                write!(f, "s{}^{}", c.unsigned_abs(), exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

fn permutation_of(strands: usize, crossings: &[i32]) -> Vec<usize> {
    // occupants[p] = which starting strand currently sits at position p+1
    let mut occupants: Vec<usize> = (1..=strands).collect();
    for &c in crossings {
        let idx = c.unsigned_abs() as usize;
        occupants.swap(idx - 1, idx);
    }
    // permutation[k-1] = final position of strand k
    let mut perm = vec![0usize; strands];
    for (p, &strand) in occupants.iter().enumerate() {
        perm[strand - 1] = p + 1;
    }
    perm
}
