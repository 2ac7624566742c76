use std::fmt;

use serde::{Deserialize, Serialize};

use super::letter::LetterId;

/// A signed letter occurrence inside a word.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct SignedLetter {
    pub id: LetterId,
    pub sign: i8,
}

impl SignedLetter {
    pub fn new(id: LetterId, sign: i8) -> SignedLetter {
        assert!(sign == 1 || sign == -1, "sign must be +1 or -1");
        SignedLetter { id, sign }
    }

    pub fn inverse(&self) -> SignedLetter {
        SignedLetter { id: self.id.clone(), sign: -self.sign }
    }
}

/// A freely reduced word over signed letters. The empty word is the identity.
///
/// Words are reduced on construction and every operation returns a reduced
/// word, so equality of group elements is structural equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default, Serialize, Deserialize)]
pub struct Word {
    letters: Vec<SignedLetter>,
}

impl Word {
    pub fn identity() -> Word {
        Word { letters: Vec::new() }
    }

    /// Builds a word from a raw letter sequence, cancelling adjacent
    /// inverse pairs.
    pub fn from_letters<I: IntoIterator<Item = SignedLetter>>(letters: I) -> Word {
        let mut stack: Vec<SignedLetter> = Vec::new();
        for l in letters {
            match stack.last() {
                Some(top) if top.id == l.id && top.sign == -l.sign => {
                    stack.pop();
                }
                _ => stack.push(l),
            }
        }
        Word { letters: stack }
    }

    pub fn generator(id: LetterId) -> Word {
        Word { letters: vec![SignedLetter::new(id, 1)] }
    }

    pub fn generator_inv(id: LetterId) -> Word {
        Word { letters: vec![SignedLetter::new(id, -1)] }
    }

    pub fn letters(&self) -> &[SignedLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut stack = self.letters.clone();
        for l in &other.letters {
            match stack.last() {
                Some(top) if top.id == l.id && top.sign == -l.sign => {
                    stack.pop();
                }
                _ => stack.push(l.clone()),
            }
        }
        Word { letters: stack }
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(SignedLetter::inverse).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Word {
        if exp == 0 || self.is_empty() {
            return Word::identity();
        }
        let base = if exp > 0 { self.clone() } else { self.inverse() };
        let mut out = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.mul(&base);
        }
        out
    }

    /// Conjugate a^g = g^{-1} a g.
    pub fn conjugate(&self, g: &Word) -> Word {
        g.inverse().mul(self).mul(g)
    }

    /// Commutator [a, b] = a^{-1} b^{-1} a b.
    pub fn commutator(a: &Word, b: &Word) -> Word {
        a.inverse().mul(&b.inverse()).mul(a).mul(b)
    }

    /// Left-normed iterated commutator [[..[g1, g2], ..], gt].
    /// A single argument returns that argument.
    pub fn left_normed(args: &[Word]) -> Result<Word, WordError> {
        let mut it = args.iter();
        let first = it.next().ok_or(WordError::EmptyCommutatorInput)?;
        let mut acc = first.clone();
        for g in it {
            acc = Word::commutator(&acc, g);
        }
        Ok(acc)
    }

    /// Exponent sum of a given letter.
    pub fn exponent_sum(&self, id: &LetterId) -> i64 {
        self.letters
            .iter()
            .filter(|l| &l.id == id)
            .map(|l| l.sign as i64)
            .sum()
    }

    /// Distinct letters of the word, in first-occurrence order.
    pub fn support(&self) -> Vec<LetterId> {
        let mut seen = Vec::new();
        for l in &self.letters {
            if !seen.contains(&l.id) {
                seen.push(l.id.clone());
            }
        }
        seen
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "1");
        }
        // Maximal runs of the same signed letter collapse to a power.
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let l = &self.letters[i];
            let mut run = 1usize;
            while i + run < self.letters.len() && self.letters[i + run] == *l {
                run += 1;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            let exp = l.sign as i64 * run as i64;
            if exp == 1 {
                write!(f, "{}", l.id)?;
            } else {
                write!(f, "{}^{}", l.id, exp)?;
            }
            i += run;
        }
        Ok(())
    }
}

/// Errors from the word calculus.
#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("iterated commutator needs at least one argument")]
    EmptyCommutatorInput,
    #[error("bracket arity mismatch: shape has {leaves} leaves, got {args} arguments")]
    BracketArity { leaves: usize, args: usize },
    #[error("letter {0} not in the map's domain (strict mode)")]
    UnknownLetter(String),
    #[error("unsupported closure shape: {0}")]
    UnsupportedClosure(String),
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Word {
        Word::generator(LetterId::x(i))
    }

    #[test]
    fn raw_sequence_cancels() {
        let w = Word::from_letters(vec![
            SignedLetter::new(LetterId::x(1), 1),
            SignedLetter::new(LetterId::x(1), -1),
        ]);
        assert!(w.is_identity());
    }

    #[test]
    fn conjugate_by_identity() {
        let a = x(1).mul(&x(2));
        assert_eq!(a.conjugate(&Word::identity()), a);
    }

    #[test]
    fn power_cancels_with_inverse_power() {
        let a = x(1).mul(&x(2).inverse()).mul(&x(1));
        // Oracle: repeated multiplication.
        let mut by_mul = Word::identity();
        for _ in 0..3 {
            by_mul = by_mul.mul(&a);
        }
        assert_eq!(a.pow(3), by_mul);
        assert!(a.pow(3).mul(&a.pow(-3)).is_identity());
    }

    #[test]
    fn commutator_of_equal_words_dies() {
        let a = x(1).mul(&x(2));
        assert!(Word::commutator(&a, &a).is_identity());
        assert!(Word::commutator(&a, &Word::identity()).is_identity());
    }

    #[test]
    fn commutator_of_generators_has_length_four() {
        let c = Word::commutator(&x(1), &x(2));
        assert_eq!(c.len(), 4);
        let expected = x(1)
            .inverse()
            .mul(&x(2).inverse())
            .mul(&x(1))
            .mul(&x(2));
        assert_eq!(c, expected);
    }

    #[test]
    fn left_normed_conventions() {
        let a = x(1);
        let b = x(2);
        let c = x(3);
        assert_eq!(Word::left_normed(&[a.clone()]).unwrap(), a);
        assert_eq!(
            Word::left_normed(&[a.clone(), b.clone()]).unwrap(),
            Word::commutator(&a, &b)
        );
        assert_eq!(
            Word::left_normed(&[a.clone(), b.clone(), c.clone()]).unwrap(),
            Word::commutator(&Word::commutator(&a, &b), &c)
        );
        assert!(Word::left_normed(&[]).is_err());
    }

    #[test]
    fn display_collapses_runs() {
        let w = x(1).pow(3).mul(&x(2).inverse());
        assert_eq!(w.to_string(), "x[1]^3 x[2]^-1");
        assert_eq!(Word::identity().to_string(), "1");
    }
}
