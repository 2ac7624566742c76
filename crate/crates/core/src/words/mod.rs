//! Exact free-group word calculus over a structured alphabet: reduction,
//! commutators, bracket arrangements, homomorphism application, and
//! normal-closure membership for the closures whose quotients stay free.

mod bracket;
mod closure;
mod letter;
mod map;
mod parse;
mod word;

pub use bracket::BracketShape;
pub use closure::{free_quotient_map, in_normal_closure_free_quotient};
pub use letter::{Family, LetterId};
pub use map::{letter_word, GroupMap};
pub use parse::{emit_word, parse_word};
pub use word::{SignedLetter, Word, WordError};
