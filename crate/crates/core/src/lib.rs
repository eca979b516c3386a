//! Richardson tableaux and the combinatorics around them.
//!
//! Standard Young tableaux are stored as lattice words. On top of that the
//! crate provides evacuation with slide paths, several equivalent tests for
//! the Richardson property, prime factorization and the two-letter deletion
//! bijection, exact and q-enumeration, a small symmetric group toolkit
//! (Bruhat order, Lehmer codes, parabolic cosets), the Springer fiber side
//! (reading permutations, totally nonnegative cells, Deodhar smoothness,
//! K-components) and Guemes tableaux for hook shapes.

pub mod enumeration;
pub mod error;
pub mod evacuation;
pub mod guemes;
pub mod oracle;
pub mod partition;
pub mod qpoly;
pub mod richardson;
pub mod rs;
pub mod selftest;
pub mod springer;
pub mod symgroup;
pub mod tableau;

pub use error::{Error, Result};
pub use evacuation::{evacuate, EvacuationTrace, SlidePath};
pub use partition::Partition;
pub use qpoly::QPolynomial;
pub use symgroup::Permutation;
pub use tableau::StandardTableau;

/// Parses a word in either digit-string ("12113123") or comma ("1,2,1,1") form.
pub fn parse_word(text: &str) -> Result<Vec<usize>> {
    let text = text.trim();
    if text.is_empty() || text == "()" || text == "-" {
        return Ok(Vec::new());
    }
    if text.contains(',') {
        text.split(',')
            .map(|s| {
                s.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad letter {s:?}")))
            })
            .collect()
    } else {
        text.chars()
            .map(|c| {
                c.to_digit(10)
                    .map(|d| d as usize)
                    .ok_or_else(|| Error::Parse(format!("bad letter {c:?}")))
            })
            .collect()
    }
}

/// Formats a word as a digit string when every letter is a single digit,
/// otherwise as a comma-separated list.
pub fn format_word(word: &[usize]) -> String {
    if word.iter().all(|&x| x <= 9) {
        word.iter().map(|x| x.to_string()).collect()
    } else {
        word.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn word_formats_round_trip() {
        assert_eq!(parse_word("12113123").unwrap(), vec![1, 2, 1, 1, 3, 1, 2, 3]);
        assert_eq!(parse_word("1,2,10").unwrap(), vec![1, 2, 10]);
        assert_eq!(parse_word("").unwrap(), Vec::<usize>::new());
        assert!(parse_word("12a").is_err());
        assert_eq!(format_word(&[1, 2, 10]), "1,2,10");
        assert_eq!(format_word(&[1, 2, 1]), "121");
    }
}
