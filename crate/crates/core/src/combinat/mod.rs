//! Words, permutations, compositions and the colored structures that label
//! modules.
//!
//! Conventions:
//! * permutations are written in one-line notation and are 1-indexed;
//! * composition is `(σ∘τ)(i) = σ(τ(i))`;
//! * `s_i∘σ` exchanges the *values* `i` and `i+1` of `σ` (left weak order);
//! * a colored permutation `(σ, c)` has inverse `(σ⁻¹, c∘σ⁻¹)`;
//! * in a ribbon of shape `I`, cell `i+1` sits directly below cell `i` when
//!   `i` is a descent of `I`, and to its right otherwise.

mod colored_composition;
mod composition;
mod permutation;
mod ribbon;
mod shuffle;
mod word;

pub use colored_composition::ColoredComposition;
pub use composition::Composition;
pub use permutation::{PermTable, Permutation};
pub use ribbon::{count_cycloribbons, enumerate_anticycloribbons, enumerate_cycloribbons, ColoredRibbon};
pub use shuffle::{colored_convolution, colored_shifted_shuffle, convolution, shifted_shuffle, shuffle};
pub use word::{evaluation, rstd, shifted_concat, standardize, std, ColorWord, ColoredPermutation, Word};

/// Joins small positive integers as digits, falling back to commas when
/// some entry has more than one digit.
pub(crate) fn join_letters<T: std::fmt::Display + Copy + Into<u64>>(letters: &[T]) -> String {
    if letters.iter().all(|&x| x.into() < 10) {
        letters.iter().map(|x| x.to_string()).collect()
    } else {
        letters.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub(crate) fn parse_letters(s: &str) -> crate::Result<Vec<u64>> {
    let s = s.trim();
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| crate::Error::Parse(s.to_string()));
    if s.contains(',') {
        s.split(',').map(parse).collect()
    } else {
        s.chars().map(|ch| parse(&ch.to_string())).collect()
    }
}
