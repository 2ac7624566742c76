//! Pure braid arithmetic: crossings with strand bookkeeping, the free-group
//! action used as the exact equality oracle, the strand removal/doubling
//! tables on generators, cabling, Brunnian tests, and the full twist.

mod artin;
mod geometric;
mod pure;

pub use artin::{
    artin_automorphism, braid_equal, is_identity_braid, strand_image, strand_image_of_word,
    strand_images, strand_word_to_word, substitute, StrandWord,
};
pub use geometric::{BraidError, GeometricBraid};
pub use pure::{
    degeneracy_formula, embed_generator, face_formula, full_twist, is_brunnian, PureBraidWord,
};
