use std::collections::BTreeMap;

use super::letter::LetterId;
use super::word::{SignedLetter, Word, WordError};

/// A homomorphism specified on generators.
///
/// Each positive letter maps to a word; the inverse letter maps to the
/// inverse word, which extends the table uniquely to a homomorphism. In
/// strict mode letters absent from the table are rejected; otherwise they
/// map to themselves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupMap {
    images: BTreeMap<LetterId, Word>,
    strict: bool,
}

impl GroupMap {
    pub fn new(strict: bool) -> GroupMap {
        GroupMap { images: BTreeMap::new(), strict }
    }

    pub fn identity() -> GroupMap {
        GroupMap { images: BTreeMap::new(), strict: false }
    }

    pub fn from_images<I: IntoIterator<Item = (LetterId, Word)>>(images: I, strict: bool) -> GroupMap {
        GroupMap { images: images.into_iter().collect(), strict }
    }

    pub fn insert(&mut self, id: LetterId, image: Word) {
        self.images.insert(id, image);
    }

    pub fn image_of(&self, id: &LetterId) -> Option<&Word> {
        self.images.get(id)
    }

    pub fn images(&self) -> &BTreeMap<LetterId, Word> {
        &self.images
    }

    pub fn apply(&self, w: &Word) -> Result<Word, WordError> {
        let mut out = Word::identity();
        for l in w.letters() {
            let image = match self.images.get(&l.id) {
                Some(img) => {
                    if l.sign == 1 {
                        img.clone()
                    } else {
                        img.inverse()
                    }
                }
                None if self.strict => return Err(WordError::UnknownLetter(l.id.to_string())),
                None => Word::from_letters([l.clone()]),
            };
            out = out.mul(&image);
        }
        Ok(out)
    }

    /// Composition g after f: (g ∘ f)(w) = g(f(w)), with f's table pushed
    /// through g. Only meaningful when g covers f's image letters.
    pub fn compose_after(&self, f: &GroupMap) -> Result<GroupMap, WordError> {
        let mut images = BTreeMap::new();
        for (id, img) in &f.images {
            images.insert(id.clone(), self.apply(img)?);
        }
        Ok(GroupMap { images, strict: self.strict && f.strict })
    }
}

/// Convenience: a word from one signed letter.
pub fn letter_word(id: LetterId, sign: i8) -> Word {
    Word::from_letters([SignedLetter::new(id, sign)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_word_maps_to_empty() {
        let f = GroupMap::new(true);
        assert!(f.apply(&Word::identity()).unwrap().is_identity());
    }

    #[test]
    fn identity_table_fixes_words() {
        let w = Word::generator(LetterId::x(1)).mul(&Word::generator_inv(LetterId::x(2)));
        assert_eq!(GroupMap::identity().apply(&w).unwrap(), w);
    }

    #[test]
    fn strict_mode_rejects_unknown_letters() {
        let f = GroupMap::new(true);
        let w = Word::generator(LetterId::x(1));
        assert!(matches!(f.apply(&w), Err(WordError::UnknownLetter(_))));
    }

    #[test]
    fn inverse_letter_maps_to_inverse_word() {
        let mut f = GroupMap::new(true);
        let img = Word::generator(LetterId::x(1)).mul(&Word::generator(LetterId::x(2)));
        f.insert(LetterId::x(3), img.clone());
        assert_eq!(f.apply(&Word::generator_inv(LetterId::x(3))).unwrap(), img.inverse());
    }
}
