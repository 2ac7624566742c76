use std::fmt;

use serde::{Deserialize, Serialize};

/// Generator families for the structured alphabet.
///
/// Braid generators come in up to three copies (`A`, `A'`, `A''`) for the
/// self free products. `X` covers both the cabled braids `x_i` and the
/// free simplicial group generators `x_{i,j}`, with an optional copy tag
/// selecting a factor of a free product over an index set. `Sigma` letters
/// carry a full monotone coordinate tuple and represent sphere cells.
/// `T` is a plain free-group basis (used by the strand action and the
/// series expansion).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum Family {
    A,
    APrime,
    ADoublePrime,
    X,
    Z,
    Sigma,
    T,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::APrime => "A'",
            Family::ADoublePrime => "A''",
            Family::X => "x",
            Family::Z => "z",
            Family::Sigma => "sigma",
            Family::T => "t",
        }
    }

    /// Braid copy index 0/1/2 for the A-families.
    pub fn braid_copy(self) -> Option<usize> {
        match self {
            Family::A => Some(0),
            Family::APrime => Some(1),
            Family::ADoublePrime => Some(2),
            _ => None,
        }
    }

    pub fn from_braid_copy(copy: usize) -> Family {
        match copy {
            0 => Family::A,
            1 => Family::APrime,
            2 => Family::ADoublePrime,
            _ => panic!("braid copy out of range: {copy}"),
        }
    }
}

/// A single generator symbol: family, index tuple, optional copy tag.
///
/// Two letters are equal exactly when all three components agree.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct LetterId {
    pub family: Family,
    pub indices: Vec<u32>,
    pub copy_tag: Option<u32>,
}

impl LetterId {
    pub fn new(family: Family, indices: Vec<u32>, copy_tag: Option<u32>) -> LetterId {
        let id = LetterId { family, indices, copy_tag };
        id.validate();
        id
    }

    /// Braid generator A_{i,j} (1 <= i < j), in the given product copy.
    pub fn braid(copy: usize, i: u32, j: u32) -> LetterId {
        LetterId::new(Family::from_braid_copy(copy), vec![i, j], None)
    }

    /// Single-index x_i letter (basis of the circle group in each dimension).
    pub fn x(i: u32) -> LetterId {
        LetterId::new(Family::X, vec![i], None)
    }

    /// Pair-indexed x_{i,j} letter, optionally tagged with a product copy.
    pub fn x_pair(i: u32, j: u32, copy_tag: Option<u32>) -> LetterId {
        LetterId::new(Family::X, vec![i, j], copy_tag)
    }

    pub fn z(i: u32) -> LetterId {
        LetterId::new(Family::Z, vec![i], None)
    }

    /// Sphere-cell letter: a monotone coordinate tuple.
    pub fn cell(seq: Vec<u32>, copy_tag: Option<u32>) -> LetterId {
        LetterId::new(Family::Sigma, seq, copy_tag)
    }

    /// Free-group basis letter t_i.
    pub fn t(i: u32) -> LetterId {
        LetterId::new(Family::T, vec![i], None)
    }

    fn validate(&self) {
        match self.family {
            Family::A | Family::APrime | Family::ADoublePrime => {
                assert!(
                    self.indices.len() == 2 && self.indices[0] < self.indices[1] && self.indices[0] >= 1,
                    "braid letter requires indices 1 <= i < j, got {:?}",
                    self.indices
                );
            }
            Family::X => {
                assert!(
                    self.indices.len() == 1 || (self.indices.len() == 2 && self.indices[0] < self.indices[1]),
                    "x letter requires one index or i < j, got {:?}",
                    self.indices
                );
            }
            Family::Z | Family::T => {
                assert!(self.indices.len() == 1, "{} letter requires one index", self.family.name());
            }
            Family::Sigma => {
                assert!(
                    self.indices.windows(2).all(|w| w[0] <= w[1]),
                    "cell letter requires a monotone tuple, got {:?}",
                    self.indices
                );
            }
        }
    }

    /// Index pair {i, j} for letters that carry one (used by Index bookkeeping).
    pub fn index_pair(&self) -> Option<(u32, u32)> {
        if self.indices.len() == 2 {
            Some((self.indices[0], self.indices[1]))
        } else {
            None
        }
    }
}

impl fmt::Display for LetterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family.name())?;
        write!(f, "[")?;
        for (pos, ix) in self.indices.iter().enumerate() {
            if pos > 0 {
                write!(f, ",")?;
            }
            write!(f, "{ix}")?;
        }
        write!(f, "]")?;
        if let Some(tag) = self.copy_tag {
            write!(f, "(a{tag})")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn letter_equality_is_structural() {
        assert_eq!(LetterId::braid(0, 1, 2), LetterId::braid(0, 1, 2));
        assert_ne!(LetterId::braid(0, 1, 2), LetterId::braid(1, 1, 2));
        assert_ne!(LetterId::x_pair(1, 2, None), LetterId::x_pair(1, 2, Some(0)));
    }

    #[test]
    #[should_panic]
    fn braid_letter_rejects_bad_indices() {
        LetterId::braid(0, 2, 2);
    }

    #[test]
    fn display_matches_canonical_syntax() {
        assert_eq!(LetterId::braid(0, 1, 2).to_string(), "A[1,2]");
        assert_eq!(LetterId::braid(1, 1, 3).to_string(), "A'[1,3]");
        assert_eq!(LetterId::x_pair(2, 3, Some(0)).to_string(), "x[2,3](a0)");
        assert_eq!(LetterId::cell(vec![0, 1, 1], None).to_string(), "sigma[0,1,1]");
    }
}
