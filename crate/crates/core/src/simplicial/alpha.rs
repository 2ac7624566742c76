use crate::braid::{BraidError, GeometricBraid, PureBraidWord};
use crate::words::{GroupMap, LetterId, Word};

use super::cell::{sphere_cells, SphereCell};
use super::spec::SimplicialGroupSpec;

/// An element of the free simplicial group on a sphere, carried as a word
/// in the basis of its dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MilnorElement {
    /// Sphere dimension the group is built on.
    pub k: u32,
    /// Simplicial dimension the word lives in.
    pub dim: usize,
    pub word: Word,
}

#[derive(thiserror::Error, Debug, Clone, PartialEq, Eq)]
pub enum SimplicialError {
    #[error("no closed bracket formula below weight three; supply the element explicitly for k = 3")]
    NeedsExplicitAlpha,
    #[error("parameter out of range: {0}")]
    Parameter(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
}

fn x(i: u32) -> Word {
    Word::generator(LetterId::x(i))
}

/// The Brunnian seed element in dimension k-2 for k >= 4:
/// [[x_1^{-1}, x_1 x_2^{-1}], x_2 x_3^{-1}, ..., x_{k-3} x_{k-2}^{-1}, x_{k-2}]
/// taken left-normed.
pub fn brunnian_seed(k: u32) -> Result<MilnorElement, SimplicialError> {
    if k < 3 {
        return Err(SimplicialError::Parameter(format!("k must be at least 3, got {k}")));
    }
    if k == 3 {
        return Err(SimplicialError::NeedsExplicitAlpha);
    }
    let mut entries = vec![x(1).inverse()];
    for i in 1..=(k - 3) {
        entries.push(x(i).mul(&x(i + 1).inverse()));
    }
    entries.push(x(k - 2));
    let word = Word::left_normed(&entries).expect("nonempty");
    Ok(MilnorElement { k: 1, dim: (k - 2) as usize, word })
}

/// The k = 3 stand-in: a power of the single basis letter in dimension 1.
pub fn circle_power(m: i64) -> MilnorElement {
    MilnorElement { k: 1, dim: 1, word: x(1).pow(m) }
}

/// The quasi-Brunnian chain in dimension k-1 for k >= 3:
/// [[x_1 x_2^{-1}, x_2 x_3^{-1}], ..., x_{k-2} x_{k-1}^{-1}, x_{k-1}]
/// left-normed. Its zeroth face is the Brunnian seed one dimension down.
pub fn quasi_brunnian_chain(k: u32) -> Result<MilnorElement, SimplicialError> {
    if k < 3 {
        return Err(SimplicialError::Parameter(format!("k must be at least 3, got {k}")));
    }
    let mut entries = Vec::new();
    for i in 1..=(k - 2) {
        entries.push(x(i).mul(&x(i + 1).inverse()));
    }
    entries.push(x(k - 1));
    let word = Word::left_normed(&entries).expect("nonempty");
    Ok(MilnorElement { k: 1, dim: (k - 1) as usize, word })
}

/// Images of the circle basis x_1..x_n inside P_{n+1}, computed by pushing
/// the basepoint generator through the degeneracy tables.
pub fn theta_basis(n: usize) -> Vec<PureBraidWord> {
    assert!(n >= 1);
    if n == 1 {
        let w = Word::generator(LetterId::braid(0, 1, 2));
        return vec![PureBraidWord::new(2, w).expect("valid")];
    }
    let prev = theta_basis(n - 1);
    let ap = SimplicialGroupSpec::PureBraid;
    let mut out = Vec::with_capacity(n);
    // x_1 in dimension n is s_{n-1} of x_1 below; x_a is s_0 of x_{a-1}.
    let last = ap.degeneracy_map(n - 1, n - 1);
    out.push(PureBraidWord::new(n + 1, last.apply(&prev[0].word).unwrap()).expect("valid"));
    let s0 = ap.degeneracy_map(n - 1, 0);
    for a in 2..=n {
        out.push(PureBraidWord::new(n + 1, s0.apply(&prev[a - 2].word).unwrap()).expect("valid"));
    }
    out
}

/// The circle-to-braid homomorphism in one dimension, as a table.
pub fn theta_map(n: usize) -> GroupMap {
    let basis = theta_basis(n);
    let mut map = GroupMap::new(true);
    for (a, img) in basis.iter().enumerate() {
        map.insert(LetterId::x(a as u32 + 1), img.word.clone());
    }
    map
}

/// Pushes a circle element to a pure braid word on dim+1 strands.
pub fn theta_word(el: &MilnorElement) -> Result<PureBraidWord, SimplicialError> {
    assert_eq!(el.k, 1, "theta acts on circle elements");
    let map = theta_map(el.dim);
    let word = map.apply(&el.word).map_err(|e| SimplicialError::Parameter(e.to_string()))?;
    Ok(PureBraidWord::new(el.dim + 1, word)?)
}

/// The degeneracy path of a sphere cell: the sequence of degeneracy
/// indices that builds it from the top cell, outermost last.
fn degeneracy_path(seq: &[u32]) -> Vec<usize> {
    let mut path = Vec::new();
    let mut cur = seq.to_vec();
    while let Some(p) = cur.windows(2).position(|w| w[0] == w[1]) {
        cur.remove(p + 1);
        path.push(p);
    }
    path.reverse();
    path
}

/// Images of the basis of the sphere group in dimension n under the map
/// that represents `alpha`: each cell goes to the corresponding iterated
/// degeneracy of alpha's braid image. Returns the cells alongside.
pub fn cabled_images(
    alpha: &MilnorElement,
    n: usize,
) -> Result<Vec<(SphereCell, PureBraidWord)>, SimplicialError> {
    let m = alpha.dim; // alpha represents the top cell of S^m
    let base = theta_word(alpha)?;
    let ap = SimplicialGroupSpec::PureBraid;
    let mut out = Vec::new();
    for cell in sphere_cells(m as u32, n) {
        let seq = cell.seq().expect("non-basepoint").to_vec();
        let path = degeneracy_path(&seq);
        let mut word = base.word.clone();
        let mut dim = m;
        for &t in path.iter().rev() {
            word = ap.degeneracy_map(dim, t).apply(&word).unwrap();
            dim += 1;
        }
        debug_assert_eq!(dim, n);
        out.push((cell, PureBraidWord::new(n + 1, word).expect("valid")));
    }
    Ok(out)
}

/// The same images computed geometrically: cable the braid of alpha by the
/// coordinate multiplicities of each cell. Independent route for tests.
pub fn cabled_images_geometric(
    alpha: &MilnorElement,
    n: usize,
) -> Result<Vec<(SphereCell, GeometricBraid)>, SimplicialError> {
    let m = alpha.dim;
    let base = theta_word(alpha)?.to_geometric();
    let mut out = Vec::new();
    for cell in sphere_cells(m as u32, n) {
        let mult = cell.multiplicities(m as u32).expect("non-basepoint");
        out.push((cell, base.cable(&mult)?));
    }
    Ok(out)
}

/// The q-th power endomorphism on the generators of a spec's dimension.
pub fn power_map(spec: &SimplicialGroupSpec, n: usize, q: i64) -> GroupMap {
    let mut map = GroupMap::new(true);
    for id in spec.alphabet(n) {
        map.insert(id.clone(), Word::generator(id).pow(q));
    }
    map
}

/// The difference of the two top cells in the doubled truncated simplex;
/// every face of it dies, the zeroth because both copies share it.
pub fn doubled_top_cycle(k: u32) -> Word {
    let seq: Vec<u32> = (0..k).collect();
    Word::generator(LetterId::cell(seq.clone(), Some(0)))
        .mul(&Word::generator_inv(LetterId::cell(seq, Some(1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::{braid_equal, is_brunnian};
    use crate::simplicial::moore::{moore_membership, MooreClass};
    use crate::simplicial::spec::EqualityOracle;

    #[test]
    fn seed_for_k4_matches_the_closed_form() {
        let a = brunnian_seed(4).unwrap();
        let expected = Word::left_normed(&[
            x(1).inverse(),
            x(1).mul(&x(2).inverse()),
            x(2),
        ])
        .unwrap();
        assert_eq!(a.word, expected);
        assert_eq!(a.dim, 2);
        assert!(brunnian_seed(3).is_err());
    }

    #[test]
    fn seed_faces_die_in_the_circle_group() {
        let spec = SimplicialGroupSpec::Circle;
        for k in [4u32, 5] {
            let a = brunnian_seed(k).unwrap();
            assert!(!a.word.is_identity());
            assert_eq!(
                moore_membership(&spec, &a.word, a.dim, EqualityOracle::Reduced),
                MooreClass::Cycle,
                "k={k}"
            );
        }
    }

    #[test]
    fn quasi_brunnian_chain_boundary_is_the_seed() {
        let spec = SimplicialGroupSpec::Circle;
        for k in [4u32, 5] {
            let t = quasi_brunnian_chain(k).unwrap();
            assert_eq!(
                moore_membership(&spec, &t.word, t.dim, EqualityOracle::Reduced),
                MooreClass::Chain,
                "k={k}"
            );
            let d0 = spec.face_map(t.dim, 0).apply(&t.word).unwrap();
            assert_eq!(d0, brunnian_seed(k).unwrap().word, "k={k}");
        }
        // k = 3 degenerates: the boundary dies, so it is a cycle, not a chain.
        let t = quasi_brunnian_chain(3).unwrap();
        let d0 = SimplicialGroupSpec::Circle.face_map(t.dim, 0).apply(&t.word).unwrap();
        assert!(d0.is_identity());
    }

    #[test]
    fn theta_basis_small_cases() {
        let b1 = theta_basis(1);
        assert_eq!(b1[0].word.to_string(), "A[1,2]");
        let b2 = theta_basis(2);
        let strings: Vec<String> = b2.iter().map(|w| w.word.to_string()).collect();
        // As a set: the two cablings of the basepoint generator.
        assert!(strings.contains(&"A[1,2] A[1,3]".to_string()));
        assert!(strings.contains(&"A[1,3] A[2,3]".to_string()));
    }

    #[test]
    fn theta_images_are_cables() {
        // Each basis image equals the geometric cable with the matching
        // multiplicities.
        for n in 1..=4usize {
            let basis = theta_basis(n);
            let a12 = crate::braid::embed_generator(1, 2, 2).unwrap();
            for (a, pb) in basis.iter().enumerate() {
                let mult = [a + 1, n - a];
                let cable = a12.cable(&mult).unwrap();
                assert!(
                    braid_equal(&pb.to_geometric(), &cable).unwrap(),
                    "n={n} a={}",
                    a + 1
                );
            }
        }
    }

    #[test]
    fn seed_braids_are_brunnian() {
        for k in [4u32, 5] {
            let a = brunnian_seed(k).unwrap();
            let braid = theta_word(&a).unwrap().to_geometric();
            assert!(is_brunnian(&braid).unwrap(), "k={k}");
            assert!(!crate::braid::is_identity_braid(&braid), "k={k}");
        }
    }

    #[test]
    fn cabled_image_counts() {
        let a4 = brunnian_seed(4).unwrap();
        // In dimension 4 the images index the cells of S^2: C(4,2) = 6.
        let ys = cabled_images(&a4, 4).unwrap();
        assert_eq!(ys.len(), 6);
    }

    #[test]
    fn doubled_top_cycle_kills_every_face() {
        for k in [3u32, 4] {
            let spec = SimplicialGroupSpec::DoubledTruncatedSimplex { k };
            let z = doubled_top_cycle(k);
            assert_eq!(
                moore_membership(&spec, &z, k as usize - 1, EqualityOracle::Reduced),
                MooreClass::Cycle,
                "k={k}"
            );
        }
    }

    #[test]
    fn power_map_commutes_with_faces() {
        let spec = SimplicialGroupSpec::Sphere { k: 2 };
        for n in 2..=4usize {
            let f2 = power_map(&spec, n, 2);
            for t in 0..=n {
                let d = spec.face_map(n, t);
                for id in spec.alphabet(n) {
                    let g = Word::generator(id);
                    let a = d.apply(&f2.apply(&g).unwrap()).unwrap();
                    let lower_pow = power_map(&spec, n - 1, 2);
                    let b = lower_pow.apply(&d.apply(&g).unwrap()).unwrap();
                    assert_eq!(a, b);
                }
            }
        }
    }
}
