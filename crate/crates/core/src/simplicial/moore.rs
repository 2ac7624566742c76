use serde::Serialize;

use crate::words::Word;

use super::spec::{EqualityOracle, SimplicialGroupSpec};

/// Where a word sits relative to the Moore complex in its dimension.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub enum MooreClass {
    /// All faces die, including the zeroth.
    Cycle,
    /// Faces d_1..d_n die but d_0 does not.
    Chain,
    Neither,
}

/// Classifies `w` in dimension n of the spec: a Moore chain kills the last
/// n faces, a Moore cycle additionally kills d_0.
pub fn moore_membership(
    spec: &SimplicialGroupSpec,
    w: &Word,
    n: usize,
    oracle: EqualityOracle,
) -> MooreClass {
    for t in 1..=n {
        let img = spec.face_map(n, t).apply(w).expect("word over the spec alphabet");
        if !oracle.is_trivial(n - 1, &img) {
            return MooreClass::Neither;
        }
    }
    let d0 = spec.face_map(n, 0).apply(w).expect("word over the spec alphabet");
    if n >= 1 && oracle.is_trivial(n - 1, &d0) {
        MooreClass::Cycle
    } else if n == 0 {
        // In dimension zero every element is a cycle by convention.
        MooreClass::Cycle
    } else {
        MooreClass::Chain
    }
}
