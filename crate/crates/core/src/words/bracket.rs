use super::word::{Word, WordError};

/// A bracket arrangement: a binary tree whose leaves take the arguments.
/// The single-leaf tree is the identity arrangement.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum BracketShape {
    Leaf,
    Node(Box<BracketShape>, Box<BracketShape>),
}

impl BracketShape {
    pub fn leaves(&self) -> usize {
        match self {
            BracketShape::Leaf => 1,
            BracketShape::Node(l, r) => l.leaves() + r.leaves(),
        }
    }

    /// Left comb of the given weight: [[..[1,2],..],t].
    pub fn left_comb(weight: usize) -> BracketShape {
        assert!(weight >= 1);
        let mut shape = BracketShape::Leaf;
        for _ in 1..weight {
            shape = BracketShape::Node(Box::new(shape), Box::new(BracketShape::Leaf));
        }
        shape
    }

    /// Right comb of the given weight: [1,[2,[..,t]]].
    pub fn right_comb(weight: usize) -> BracketShape {
        assert!(weight >= 1);
        let mut shape = BracketShape::Leaf;
        for _ in 1..weight {
            shape = BracketShape::Node(Box::new(BracketShape::Leaf), Box::new(shape));
        }
        shape
    }

    /// All bracket arrangements of the given weight.
    pub fn enumerate(weight: usize) -> Vec<BracketShape> {
        assert!(weight >= 1);
        if weight == 1 {
            return vec![BracketShape::Leaf];
        }
        let mut out = Vec::new();
        for k in 1..weight {
            for l in BracketShape::enumerate(k) {
                for r in BracketShape::enumerate(weight - k) {
                    out.push(BracketShape::Node(Box::new(l.clone()), Box::new(r.clone())));
                }
            }
        }
        out
    }

    /// Evaluates the arrangement on the arguments.
    pub fn eval(&self, args: &[Word]) -> Result<Word, WordError> {
        if self.leaves() != args.len() {
            return Err(WordError::BracketArity { leaves: self.leaves(), args: args.len() });
        }
        Ok(self.eval_unchecked(args))
    }

    fn eval_unchecked(&self, args: &[Word]) -> Word {
        match self {
            BracketShape::Leaf => args[0].clone(),
            BracketShape::Node(l, r) => {
                let nl = l.leaves();
                let lw = l.eval_unchecked(&args[..nl]);
                let rw = r.eval_unchecked(&args[nl..]);
                Word::commutator(&lw, &rw)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::letter::LetterId;

    fn x(i: u32) -> Word {
        Word::generator(LetterId::x(i))
    }

    #[test]
    fn weight_one_is_identity_arrangement() {
        let w = x(1).mul(&x(2));
        assert_eq!(BracketShape::Leaf.eval(&[w.clone()]).unwrap(), w);
    }

    #[test]
    fn weight_three_combs() {
        let (a, b, c) = (x(1), x(2), x(3));
        let left = BracketShape::left_comb(3).eval(&[a.clone(), b.clone(), c.clone()]).unwrap();
        assert_eq!(left, Word::commutator(&Word::commutator(&a, &b), &c));
        let right = BracketShape::right_comb(3).eval(&[a.clone(), b.clone(), c.clone()]).unwrap();
        assert_eq!(right, Word::commutator(&a, &Word::commutator(&b, &c)));
    }

    #[test]
    fn arity_mismatch_is_rejected() {
        let err = BracketShape::left_comb(3).eval(&[x(1)]).unwrap_err();
        assert!(matches!(err, WordError::BracketArity { leaves: 3, args: 1 }));
    }

    #[test]
    fn enumerate_counts_catalan() {
        assert_eq!(BracketShape::enumerate(1).len(), 1);
        assert_eq!(BracketShape::enumerate(2).len(), 1);
        assert_eq!(BracketShape::enumerate(3).len(), 2);
        assert_eq!(BracketShape::enumerate(4).len(), 5);
    }
}
