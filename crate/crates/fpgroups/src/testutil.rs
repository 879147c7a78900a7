//! Small constructors shared by the unit tests.

use crate::words::{Letter, Presentation, Word};

/// Builds a word over `rank` generators from `(generator, sign)` pairs.
pub fn word(rank: usize, spec: &[(usize, i8)]) -> Word {
    let letters = spec
        .iter()
        .map(|&(g, s)| {
            if s >= 0 {
                Letter::positive(g)
            } else {
                Letter::negative(g)
            }
        })
        .collect();
    Word::from_letters(rank, letters).unwrap()
}

/// Builds a presentation from generator names and relators given as
/// `(generator, sign)` pairs.
pub fn pres(names: &[&str], relators: &[&[(usize, i8)]]) -> Presentation {
    let rank = names.len();
    let words = relators.iter().map(|r| word(rank, r)).collect();
    Presentation::new(names.iter().map(|s| s.to_string()).collect(), words).unwrap()
}
