use crate::words::{GroupMap, LetterId, Word};

use super::geometric::{BraidError, GeometricBraid};

/// Words over the free basis t_1..t_n are stored as signed strand indices;
/// `+i` is t_i and `-i` its inverse. Everything stays freely reduced.
pub type StrandWord = Vec<i32>;

fn push_reduced(out: &mut StrandWord, letter: i32) {
    if out.last() == Some(&-letter) {
        out.pop();
    } else {
        out.push(letter);
    }
}

fn extend_reduced(out: &mut StrandWord, letters: &[i32]) {
    for &l in letters {
        push_reduced(out, l);
    }
}

/// Applies one signed crossing to a reduced strand word.
///
/// The positive crossing at position c acts by t_c -> t_c t_{c+1} t_c^{-1}
/// and t_{c+1} -> t_c; the negative crossing is the inverse substitution.
fn apply_crossing(w: &StrandWord, crossing: i32) -> StrandWord {
    let c = crossing.unsigned_abs() as i32;
    let mut out: StrandWord = Vec::with_capacity(w.len() * 2);
    for &l in w {
        let a = l.abs();
        if crossing > 0 {
            if a == c {
                if l > 0 {
                    extend_reduced(&mut out, &[c, c + 1, -c]);
                } else {
                    extend_reduced(&mut out, &[c, -(c + 1), -c]);
                }
            } else if a == c + 1 {
                push_reduced(&mut out, if l > 0 { c } else { -c });
            } else {
                push_reduced(&mut out, l);
            }
        } else if a == c {
            push_reduced(&mut out, if l > 0 { c + 1 } else { -(c + 1) });
        } else if a == c + 1 {
            if l > 0 {
                extend_reduced(&mut out, &[-(c + 1), c, c + 1]);
            } else {
                extend_reduced(&mut out, &[-(c + 1), -c, c + 1]);
            }
        } else {
            push_reduced(&mut out, l);
        }
    }
    out
}

/// Image of the basis letter t_s under the action of the whole braid,
/// applying the crossings in braid order.
pub fn strand_image(braid: &GeometricBraid, s: usize) -> StrandWord {
    let mut w: StrandWord = vec![s as i32];
    for &c in braid.crossings() {
        w = apply_crossing(&w, c);
    }
    w
}

/// Image of an arbitrary strand word under the braid action.
pub fn strand_image_of_word(braid: &GeometricBraid, w: &StrandWord) -> StrandWord {
    let mut cur = w.clone();
    for &c in braid.crossings() {
        cur = apply_crossing(&cur, c);
    }
    cur
}

/// All basis images at once.
pub fn strand_images(braid: &GeometricBraid) -> Vec<StrandWord> {
    (1..=braid.strands()).map(|s| strand_image(braid, s)).collect()
}

/// Substitutes precomputed basis images into a strand word.
pub fn substitute(images: &[StrandWord], w: &StrandWord) -> StrandWord {
    let mut out: StrandWord = Vec::with_capacity(w.len() * 4);
    for &l in w {
        let img = &images[(l.abs() - 1) as usize];
        if l > 0 {
            extend_reduced(&mut out, img);
        } else {
            for &m in img.iter().rev() {
                push_reduced(&mut out, -m);
            }
        }
    }
    out
}

/// Exact equality of braids through the free-group action: two braids on
/// the same number of strands are equal exactly when their actions agree
/// on every basis letter. Faithfulness of this action is classical and is
/// the one background fact the oracle relies on.
pub fn braid_equal(u: &GeometricBraid, v: &GeometricBraid) -> Result<bool, BraidError> {
    if u.strands() != v.strands() {
        return Err(BraidError::StrandMismatch(u.strands(), v.strands()));
    }
    if u.permutation() != v.permutation() {
        return Ok(false);
    }
    for s in 1..=u.strands() {
        if strand_image(u, s) != strand_image(v, s) {
            return Ok(false);
        }
    }
    Ok(true)
}

pub fn is_identity_braid(u: &GeometricBraid) -> bool {
    if !u.is_pure() {
        return false;
    }
    (1..=u.strands()).all(|s| strand_image(u, s) == vec![s as i32])
}

/// The action as a homomorphism table on the free group basis t_1..t_n.
pub fn artin_automorphism(braid: &GeometricBraid) -> GroupMap {
    let mut map = GroupMap::new(true);
    for s in 1..=braid.strands() {
        map.insert(LetterId::t(s as u32), strand_word_to_word(&strand_image(braid, s)));
    }
    map
}

pub fn strand_word_to_word(w: &StrandWord) -> Word {
    Word::from_letters(w.iter().map(|&l| {
        crate::words::SignedLetter::new(LetterId::t(l.unsigned_abs()), if l > 0 { 1 } else { -1 })
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_braid_acts_trivially() {
        let b = GeometricBraid::identity(3);
        for s in 1..=3 {
            assert_eq!(strand_image(&b, s), vec![s as i32]);
        }
    }

    #[test]
    fn crossing_action_and_inverse_cancel() {
        let b = GeometricBraid::from_crossings(2, vec![1, -1]).unwrap();
        assert!(is_identity_braid(&b));
    }

    #[test]
    fn squared_crossing_conjugates() {
        // Composing the elementary action with itself by hand:
        // t1 -> t1 t2 t1^{-1} -> (t1 t2 t1^{-1}) t1 (t1 t2 t1^{-1})^{-1}
        //     = t1 t2 t1 t2^{-1} t1^{-1}.
        let b = GeometricBraid::from_crossings(2, vec![1, 1]).unwrap();
        assert_eq!(strand_image(&b, 1), vec![1, 2, 1, -2, -1]);
        assert_eq!(strand_image(&b, 2), vec![1, 2, -1]);
    }

    #[test]
    fn braid_relation_holds() {
        let u = GeometricBraid::from_crossings(3, vec![1, 2, 1]).unwrap();
        let v = GeometricBraid::from_crossings(3, vec![2, 1, 2]).unwrap();
        assert!(braid_equal(&u, &v).unwrap());
        let w = GeometricBraid::from_crossings(3, vec![1, 1]).unwrap();
        assert!(!braid_equal(&w, &GeometricBraid::identity(3)).unwrap());
    }

    #[test]
    fn far_crossings_commute() {
        let u = GeometricBraid::from_crossings(4, vec![1, 3]).unwrap();
        let v = GeometricBraid::from_crossings(4, vec![3, 1]).unwrap();
        assert!(braid_equal(&u, &v).unwrap());
    }

    #[test]
    fn strand_mismatch_is_an_error() {
        let u = GeometricBraid::identity(2);
        let v = GeometricBraid::identity(3);
        assert!(braid_equal(&u, &v).is_err());
    }
}
