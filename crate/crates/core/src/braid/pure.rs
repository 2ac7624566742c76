use serde::{Deserialize, Serialize};

use crate::words::{Family, LetterId, Word};

use super::artin::is_identity_braid;
use super::geometric::{BraidError, GeometricBraid};

/// A pure braid given as a word over the standard generators A_{i,j}
/// (optionally primed copies in product contexts) together with its
/// strand count.
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct PureBraidWord {
    pub strands: usize,
    pub word: Word,
}

impl PureBraidWord {
    pub fn new(strands: usize, word: Word) -> Result<PureBraidWord, BraidError> {
        for l in word.letters() {
            match l.id.family.braid_copy() {
                Some(_) => {
                    let (i, j) = l.id.index_pair().expect("braid letters carry a pair");
                    if j as usize > strands {
                        return Err(BraidError::GeneratorOutOfRange { i, j, strands });
                    }
                }
                None => {
                    return Err(BraidError::Parse(format!(
                        "letter {} is not a braid generator",
                        l.id
                    )))
                }
            }
        }
        Ok(PureBraidWord { strands, word })
    }

    pub fn identity(strands: usize) -> PureBraidWord {
        PureBraidWord { strands, word: Word::identity() }
    }

    /// Converts to crossings, ignoring which product copy the letters
    /// belong to (all copies embed the same way).
    pub fn to_geometric(&self) -> GeometricBraid {
        let mut braid = GeometricBraid::identity(self.strands);
        for l in self.word.letters() {
            let (i, j) = l.id.index_pair().expect("validated on construction");
            let gen = embed_generator(i, j, self.strands).expect("validated on construction");
            let factor = if l.sign == 1 { gen } else { gen.inverse() };
            braid = braid.mul(&factor).expect("same strand count");
        }
        braid
    }
}

/// The generator A_{i,j} as crossings in an n-strand braid:
/// (s_{j-1} ... s_{i+1}) s_i^2 (s_{j-1} ... s_{i+1})^{-1}.
pub fn embed_generator(i: u32, j: u32, strands: usize) -> Result<GeometricBraid, BraidError> {
    if !(1 <= i && i < j && j as usize <= strands) {
        return Err(BraidError::GeneratorOutOfRange { i, j, strands });
    }
    let mut crossings: Vec<i32> = Vec::new();
    for c in ((i + 1)..j).rev() {
        crossings.push(c as i32);
    }
    crossings.push(i as i32);
    crossings.push(i as i32);
    for c in (i + 1)..j {
        crossings.push(-(c as i32));
    }
    GeometricBraid::from_crossings(strands, crossings)
}

/// The face table (strand removal on generators): removing strand t+1
/// from A_{i,j} in P_{n+1} lands in P_n.
///
/// Cases: shift both indices down when the removed strand lies below i,
/// kill the generator when it is one of the two braiding strands, shift
/// only j when it lies strictly between, and fix the generator when it
/// lies above j.
pub fn face_formula(t: u32, i: u32, j: u32, family: Family) -> Word {
    debug_assert!(i < j);
    let copy = family.braid_copy().expect("braid family");
    let a = |i: u32, j: u32| Word::generator(LetterId::braid(copy, i, j));
    let s = t + 1;
    if s < i {
        a(i - 1, j - 1)
    } else if s == i || s == j {
        Word::identity()
    } else if s < j {
        a(i, j - 1)
    } else {
        a(i, j)
    }
}

/// The degeneracy table (strand doubling on generators): doubling strand
/// t+1 sends A_{i,j} in P_{n+1} into P_{n+2}.
pub fn degeneracy_formula(t: u32, i: u32, j: u32, family: Family) -> Word {
    debug_assert!(i < j);
    let copy = family.braid_copy().expect("braid family");
    let a = |i: u32, j: u32| Word::generator(LetterId::braid(copy, i, j));
    let s = t + 1;
    if s < i {
        a(i + 1, j + 1)
    } else if s == i {
        a(i, j + 1).mul(&a(i + 1, j + 1))
    } else if s < j {
        a(i, j + 1)
    } else if s == j {
        a(i, j).mul(&a(i, j + 1))
    } else {
        a(i, j)
    }
}

/// The full twist, the generator of the center of the pure braid group:
/// (s_1 s_2 ... s_{n-1})^n.
pub fn full_twist(n: usize) -> Result<GeometricBraid, BraidError> {
    if n < 2 {
        return Err(BraidError::TooFewStrands);
    }
    let round: Vec<i32> = (1..n as i32).collect();
    let mut crossings = Vec::with_capacity((n - 1) * n);
    for _ in 0..n {
        crossings.extend_from_slice(&round);
    }
    GeometricBraid::from_crossings(n, crossings)
}

/// A pure braid is Brunnian when removing any single strand trivialises it.
pub fn is_brunnian(b: &GeometricBraid) -> Result<bool, BraidError> {
    if !b.is_pure() {
        return Err(BraidError::NotPure);
    }
    for k in 1..=b.strands() {
        if !is_identity_braid(&b.remove_strand(k)?) {
            return Ok(false);
        }
    }
    Ok(true)
}
