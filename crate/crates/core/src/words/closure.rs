use std::collections::BTreeSet;

use super::letter::LetterId;
use super::map::GroupMap;
use super::word::{Word, WordError};

/// Decides membership of `w` in the normal closure generated by
/// `closure_generators` inside the free group on `basis`.
///
/// Only closures whose quotient is again free are decided: each generator
/// must be a single basis letter (the quotient deletes it) or the full
/// product of the basis letters in order (the quotient substitutes the
/// last surviving letter). Anything else is refused.
pub fn in_normal_closure_free_quotient(
    w: &Word,
    closure_generators: &[Word],
    basis: &[LetterId],
) -> Result<bool, WordError> {
    let quotient = free_quotient_map(closure_generators, basis)?;
    Ok(quotient.apply(w)?.is_identity())
}

/// The quotient homomorphism onto the free group left after killing the
/// closure generators. Shared with the test oracles.
pub fn free_quotient_map(
    closure_generators: &[Word],
    basis: &[LetterId],
) -> Result<GroupMap, WordError> {
    let basis_set: BTreeSet<&LetterId> = basis.iter().collect();
    let full_product = Word::from_letters(
        basis
            .iter()
            .map(|id| super::word::SignedLetter::new(id.clone(), 1)),
    );

    let mut killed: BTreeSet<LetterId> = BTreeSet::new();
    let mut has_product = false;
    for gen in closure_generators {
        if gen.len() == 1 {
            let l = &gen.letters()[0];
            if basis_set.contains(&l.id) {
                killed.insert(l.id.clone());
                continue;
            }
            return Err(WordError::UnsupportedClosure(format!(
                "generator {gen} is not a basis letter"
            )));
        }
        if gen == &full_product || gen == &full_product.inverse() {
            has_product = true;
            continue;
        }
        return Err(WordError::UnsupportedClosure(format!(
            "generator {gen} is neither a basis letter nor the full basis product"
        )));
    }

    let mut map = GroupMap::new(false);
    for id in &killed {
        map.insert(id.clone(), Word::identity());
    }
    if has_product {
        let survivors: Vec<&LetterId> = basis.iter().filter(|id| !killed.contains(id)).collect();
        if let Some((last, front)) = survivors.split_last() {
            let prefix = Word::from_letters(
                front
                    .iter()
                    .map(|id| super::word::SignedLetter::new((*id).clone(), 1)),
            );
            map.insert((*last).clone(), prefix.inverse());
        }
        // With every letter killed the product relation already holds.
    }
    Ok(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn basis2() -> Vec<LetterId> {
        vec![LetterId::x(1), LetterId::x(2)]
    }

    fn x(i: u32) -> Word {
        Word::generator(LetterId::x(i))
    }

    #[test]
    fn commutator_with_killed_generator_dies() {
        let w = Word::commutator(&x(1), &x(2));
        assert!(in_normal_closure_free_quotient(&w, &[x(1)], &basis2()).unwrap());
    }

    #[test]
    fn survivor_is_detected() {
        assert!(!in_normal_closure_free_quotient(&x(1), &[x(2)], &basis2()).unwrap());
    }

    #[test]
    fn product_closure_uses_substitution() {
        // Killing x1 x2 makes x2 = x1^{-1}; [x1, x2] becomes [x1, x1^{-1}] = 1.
        let w = Word::commutator(&x(1), &x(2));
        let prod = x(1).mul(&x(2));
        assert!(in_normal_closure_free_quotient(&w, &[prod], &basis2()).unwrap());
        // x1 itself survives as a generator of the quotient.
        let prod = x(1).mul(&x(2));
        assert!(!in_normal_closure_free_quotient(&x(1), &[prod], &basis2()).unwrap());
    }

    #[test]
    fn general_closures_are_refused() {
        let odd = x(1).mul(&x(2)).mul(&x(1));
        let err = in_normal_closure_free_quotient(&x(1), &[odd], &basis2()).unwrap_err();
        assert!(matches!(err, WordError::UnsupportedClosure(_)));
    }
}
