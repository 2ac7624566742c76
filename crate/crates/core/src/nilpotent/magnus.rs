use std::collections::BTreeMap;
use std::fmt;

use crate::words::{LetterId, Word};

/// A truncated noncommutative integer polynomial: the image of a group
/// element under x -> 1 + X, with monomials capped at a fixed degree and
/// coefficients optionally reduced mod p.
///
/// Group elements always have constant term 1; the series of a product is
/// the truncated product of the series.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MagnusSeries {
    pub cap: usize,
    pub modulus: u32,
    /// monomial (sequence of variable ids) -> nonzero coefficient
    terms: BTreeMap<Vec<u32>, i128>,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum MagnusError {
    #[error("degree cap must be at least 1")]
    ZeroCap,
    #[error("letter {0} is not in the expansion alphabet")]
    UnknownLetter(String),
}

impl MagnusSeries {
    pub fn one(cap: usize, modulus: u32) -> MagnusSeries {
        let mut terms = BTreeMap::new();
        terms.insert(Vec::new(), 1);
        MagnusSeries { cap, modulus, terms }
    }

    fn normalize_coeff(&self, c: i128) -> i128 {
        if self.modulus == 0 {
            c
        } else {
            c.rem_euclid(self.modulus as i128)
        }
    }

    fn insert(&mut self, key: Vec<u32>, c: i128) {
        let c = self.normalize_coeff(c);
        if c != 0 {
            self.terms.insert(key, c);
        }
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, i128> {
        &self.terms
    }

    pub fn coefficient(&self, monomial: &[u32]) -> i128 {
        self.terms.get(monomial).copied().unwrap_or(0)
    }

    /// The series 1 + X_v.
    pub fn generator(v: u32, cap: usize, modulus: u32) -> MagnusSeries {
        let mut s = MagnusSeries::one(cap, modulus);
        if cap >= 1 {
            s.insert(vec![v], 1);
        }
        s
    }

    /// The series 1 - X_v + X_v^2 - ..., the truncated inverse of 1 + X_v.
    pub fn generator_inverse(v: u32, cap: usize, modulus: u32) -> MagnusSeries {
        let mut s = MagnusSeries::one(cap, modulus);
        let mut sign = -1i128;
        let mut key = Vec::new();
        for _ in 1..=cap {
            key.push(v);
            s.insert(key.clone(), sign);
            sign = -sign;
        }
        s
    }

    pub fn mul(&self, other: &MagnusSeries) -> MagnusSeries {
        assert_eq!(self.cap, other.cap, "caps must agree");
        assert_eq!(self.modulus, other.modulus, "moduli must agree");
        let mut out: BTreeMap<Vec<u32>, i128> = BTreeMap::new();
        for (ka, ca) in &self.terms {
            for (kb, cb) in &other.terms {
                if ka.len() + kb.len() > self.cap {
                    continue;
                }
                let mut key = ka.clone();
                key.extend_from_slice(kb);
                *out.entry(key).or_insert(0) += ca * cb;
            }
        }
        let mut s = MagnusSeries { cap: self.cap, modulus: self.modulus, terms: BTreeMap::new() };
        for (k, c) in out {
            s.insert(k, c);
        }
        s
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.coefficient(&[]) == 1
    }

    /// Lowest degree >= 1 with a nonzero homogeneous part.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.terms.keys().filter(|k| !k.is_empty()).map(|k| k.len()).min()
    }
}

impl fmt::Display for MagnusSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // Degree-major order reads better than the map's key order.
        let mut entries: Vec<(&Vec<u32>, &i128)> = self.terms.iter().collect();
        entries.sort_by_key(|(k, _)| (k.len(), (*k).clone()));
        let mut first = true;
        for (k, c) in entries {
            let mono: String = k
                .iter()
                .map(|&v| {
                    if v < 26 {
                        char::from(b'A' + v as u8).to_string()
                    } else {
                        format!("X{v}")
                    }
                })
                .collect();
            if first {
                if k.is_empty() {
                    write!(f, "{c}")?;
                } else if *c == 1 {
                    write!(f, "{mono}")?;
                } else if *c == -1 {
                    write!(f, "-{mono}")?;
                } else {
                    write!(f, "{c}{mono}")?;
                }
                first = false;
            } else if *c < 0 {
                if *c == -1 && !k.is_empty() {
                    write!(f, " - {mono}")?;
                } else {
                    write!(f, " - {}{mono}", -c)?;
                }
            } else if *c == 1 && !k.is_empty() {
                write!(f, " + {mono}")?;
            } else {
                write!(f, " + {c}{mono}")?;
            }
        }
        Ok(())
    }
}

/// Expands a word over the given alphabet: letter i maps to 1 + X_i, its
/// inverse to the alternating series, and the whole word to the truncated
/// product.
pub fn magnus_expand(
    w: &Word,
    alphabet: &[LetterId],
    cap: usize,
    modulus: u32,
) -> Result<MagnusSeries, MagnusError> {
    if cap == 0 {
        return Err(MagnusError::ZeroCap);
    }
    let index_of = |id: &LetterId| -> Result<u32, MagnusError> {
        alphabet
            .iter()
            .position(|a| a == id)
            .map(|p| p as u32)
            .ok_or_else(|| MagnusError::UnknownLetter(id.to_string()))
    };
    let mut acc = MagnusSeries::one(cap, modulus);
    for l in w.letters() {
        let v = index_of(&l.id)?;
        let factor = if l.sign == 1 {
            MagnusSeries::generator(v, cap, modulus)
        } else {
            MagnusSeries::generator_inverse(v, cap, modulus)
        };
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// Lower-central-series weight detected by the expansion: the smallest c
/// with a nonzero degree-c part, or None when every part below the cap
/// vanishes (the word then lies in gamma_{cap+1}).
pub fn lcs_weight(
    w: &Word,
    alphabet: &[LetterId],
    cap: usize,
) -> Result<Option<usize>, MagnusError> {
    let s = magnus_expand(w, alphabet, cap, 0)?;
    Ok(s.lowest_degree())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(i: u32) -> LetterId {
        LetterId::t(i)
    }

    fn tw(i: u32) -> Word {
        Word::generator(t(i))
    }

    fn alphabet(n: u32) -> Vec<LetterId> {
        (0..n).map(t).collect()
    }

    #[test]
    fn identity_expands_to_one() {
        let s = magnus_expand(&Word::identity(), &alphabet(2), 3, 0).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn inverse_series_cancels() {
        let w = tw(0).mul(&tw(0).inverse());
        assert!(w.is_identity());
        // also through explicit series multiplication at cap 5
        let g = MagnusSeries::generator(0, 5, 0);
        let gi = MagnusSeries::generator_inverse(0, 5, 0);
        assert!(g.mul(&gi).is_one());
        assert!(gi.mul(&g).is_one());
    }

    #[test]
    fn commutator_expansion_at_cap_two() {
        // Hand oracle: (1-X+X^2)(1-Y+Y^2)(1+X)(1+Y) truncated at degree 2
        // equals 1 + XY - YX.
        let w = Word::commutator(&tw(0), &tw(1));
        let s = magnus_expand(&w, &alphabet(2), 2, 0).unwrap();
        assert_eq!(s.coefficient(&[]), 1);
        assert_eq!(s.coefficient(&[0, 1]), 1);
        assert_eq!(s.coefficient(&[1, 0]), -1);
        assert_eq!(s.terms().len(), 3);
        assert_eq!(s.to_string(), "1 + AB - BA");
    }

    #[test]
    fn zero_cap_is_rejected() {
        assert_eq!(
            magnus_expand(&tw(0), &alphabet(1), 0, 0).unwrap_err(),
            MagnusError::ZeroCap
        );
    }

    #[test]
    fn weight_of_generators_and_identity() {
        assert_eq!(lcs_weight(&tw(0), &alphabet(2), 3).unwrap(), Some(1));
        assert_eq!(lcs_weight(&Word::identity(), &alphabet(2), 3).unwrap(), None);
    }

    #[test]
    fn left_normed_commutators_have_full_weight() {
        // The leading term of a basic commutator on distinct letters is
        // nonzero in the degree equal to its weight.
        for w in 2..=5usize {
            let args: Vec<Word> = (0..w as u32).map(tw).collect();
            let c = Word::left_normed(&args).unwrap();
            assert_eq!(
                lcs_weight(&c, &alphabet(w as u32), w).unwrap(),
                Some(w),
                "weight {w}"
            );
        }
    }

    #[test]
    fn modular_reduction_matches_integer_reduction() {
        let w = Word::commutator(&tw(0), &tw(1)).pow(3);
        let s3 = magnus_expand(&w, &alphabet(2), 2, 3).unwrap();
        // [x,y]^3 = 1 + 3(XY - YX) + ... which dies mod 3 in degree 2
        assert_eq!(s3.coefficient(&[0, 1]), 0);
        assert_eq!(s3.coefficient(&[1, 0]), 0);
    }
}
