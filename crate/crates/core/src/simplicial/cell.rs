use serde::{Deserialize, Serialize};

/// A cell of the simplicial k-sphere in a given dimension: the basepoint,
/// or a monotone coordinate tuple that is surjective onto {0..k}.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub enum SphereCell {
    Basepoint,
    Cell(Vec<u32>),
}

impl SphereCell {
    /// Classifies a monotone tuple, collapsing to the basepoint when some
    /// value of {0..k} is missing.
    pub fn from_seq(k: u32, seq: Vec<u32>) -> SphereCell {
        debug_assert!(seq.windows(2).all(|w| w[0] <= w[1]), "cell data must be monotone");
        debug_assert!(seq.iter().all(|&v| v <= k));
        if surjective_onto(&seq, k) {
            SphereCell::Cell(seq)
        } else {
            SphereCell::Basepoint
        }
    }

    pub fn top(k: u32) -> SphereCell {
        SphereCell::Cell((0..=k).collect())
    }

    pub fn seq(&self) -> Option<&[u32]> {
        match self {
            SphereCell::Basepoint => None,
            SphereCell::Cell(s) => Some(s),
        }
    }

    /// Removes the (t+1)-st coordinate.
    pub fn face(&self, k: u32, t: usize) -> SphereCell {
        match self {
            SphereCell::Basepoint => SphereCell::Basepoint,
            SphereCell::Cell(s) => {
                assert!(t < s.len(), "face index out of range");
                let mut out = s.clone();
                out.remove(t);
                SphereCell::from_seq(k, out)
            }
        }
    }

    /// Doubles the (t+1)-st coordinate.
    pub fn degeneracy(&self, k: u32, t: usize) -> SphereCell {
        match self {
            SphereCell::Basepoint => SphereCell::Basepoint,
            SphereCell::Cell(s) => {
                assert!(t < s.len(), "degeneracy index out of range");
                let mut out = s.clone();
                out.insert(t, s[t]);
                SphereCell::from_seq(k, out)
            }
        }
    }

    /// How many times each value 0..k occurs; the composition that drives
    /// cabling.
    pub fn multiplicities(&self, k: u32) -> Option<Vec<usize>> {
        let seq = self.seq()?;
        let mut counts = vec![0usize; k as usize + 1];
        for &v in seq {
            counts[v as usize] += 1;
        }
        Some(counts)
    }
}

fn surjective_onto(seq: &[u32], k: u32) -> bool {
    let mut seen = vec![false; k as usize + 1];
    for &v in seq {
        seen[v as usize] = true;
    }
    seen.into_iter().all(|b| b)
}

/// The non-basepoint cells of the k-sphere in dimension n: all monotone
/// surjections, exactly C(n, k) of them for n >= k, sorted.
pub fn sphere_cells(k: u32, n: usize) -> Vec<SphereCell> {
    assert!(k >= 1);
    let mut out = Vec::new();
    let mut seq = Vec::with_capacity(n + 1);
    enumerate_monotone(k, n + 1, 0, &mut seq, &mut out);
    out.sort();
    out
}

fn enumerate_monotone(k: u32, len: usize, min: u32, seq: &mut Vec<u32>, out: &mut Vec<SphereCell>) {
    if seq.len() == len {
        if surjective_onto(seq, k) {
            out.push(SphereCell::Cell(seq.clone()));
        }
        return;
    }
    // Monotone tail: remaining values must still be able to reach k.
    for v in min..=k {
        seq.push(v);
        enumerate_monotone(k, len, v, seq, out);
        seq.pop();
    }
}

/// Cells of the quotient simplex obtained from the (k-1)-simplex by
/// collapsing every face except the zeroth: a monotone tuple over
/// {0..k-1} survives exactly when its values cover {1..k-1}.
pub fn truncated_simplex_cells(k: u32, n: usize) -> Vec<Vec<u32>> {
    assert!(k >= 2);
    let top = k - 1;
    let mut raw = Vec::new();
    let mut seq = Vec::with_capacity(n + 1);
    enumerate_monotone_all(top, n + 1, 0, &mut seq, &mut raw);
    raw.into_iter().filter(|s| covers_tail(s, top)).collect()
}

fn enumerate_monotone_all(top: u32, len: usize, min: u32, seq: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if seq.len() == len {
        out.push(seq.clone());
        return;
    }
    for v in min..=top {
        seq.push(v);
        enumerate_monotone_all(top, len, v, seq, out);
        seq.pop();
    }
}

/// True when the tuple's values include every value 1..=top.
pub fn covers_tail(seq: &[u32], top: u32) -> bool {
    let mut seen = vec![false; top as usize + 1];
    for &v in seq {
        seen[v as usize] = true;
    }
    (1..=top as usize).all(|v| seen[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn binomial(n: usize, k: usize) -> usize {
        if k > n {
            return 0;
        }
        let mut num = 1usize;
        let mut den = 1usize;
        for i in 0..k {
            num *= n - i;
            den *= i + 1;
        }
        num / den
    }

    #[test]
    fn cell_counts_are_binomial() {
        for k in 1..=4u32 {
            for n in 0..=10usize {
                assert_eq!(
                    sphere_cells(k, n).len(),
                    binomial(n, k as usize),
                    "k={k} n={n}"
                );
            }
        }
    }

    #[test]
    fn top_cell_of_s2_in_dimension_two() {
        let cells = sphere_cells(2, 2);
        assert_eq!(cells, vec![SphereCell::Cell(vec![0, 1, 2])]);
        assert_eq!(sphere_cells(2, 3).len(), 3);
    }

    #[test]
    fn faces_of_top_cell_collapse() {
        let top = SphereCell::top(2);
        for t in 0..3 {
            assert_eq!(top.face(2, t), SphereCell::Basepoint);
        }
    }

    #[test]
    fn degeneracy_and_face_examples() {
        let c = SphereCell::from_seq(1, vec![0, 1]);
        assert_eq!(c.degeneracy(1, 0), SphereCell::Cell(vec![0, 0, 1]));
        let d = SphereCell::from_seq(1, vec![0, 0, 1]);
        assert_eq!(d.face(1, 1), SphereCell::Cell(vec![0, 1]));
    }

    #[test]
    fn truncated_simplex_keeps_interior_and_zeroth_face() {
        // k = 3: tuples over {0,1,2} covering {1,2}.
        let cells = truncated_simplex_cells(3, 2);
        assert!(cells.contains(&vec![0, 1, 2]));
        assert!(cells.contains(&vec![1, 1, 2]));
        assert!(!cells.contains(&vec![0, 1, 1]));
        assert!(!cells.contains(&vec![0, 0, 2]));
    }
}
