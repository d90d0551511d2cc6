//! Vowel-count syllable heuristic.
//!
//! In Portuguese the number of syllables of a word equals its number of
//! vowels once the semivowels of diphthongs and triphthongs are discarded.
//! The heuristic counts every vowel, then subtracts one for each diphthong
//! preceded by a consonant and one for each triphthong.

use crate::scan::{fold_case, is_letter};

/// The sixteen vowel codepoints (lowercase).
pub const VOWELS: [char; 16] = [
    'a', 'ã', 'â', 'á', 'à', 'e', 'é', 'ê', 'i', 'í', 'o', 'ô', 'õ', 'ó', 'u', 'ú',
];

/// The nineteen two-vowel clusters treated as diphthongs.
pub const DIPHTHONGS: [[char; 2]; 19] = [
    ['ã', 'e'],
    ['a', 'i'],
    ['ã', 'o'],
    ['a', 'u'],
    ['e', 'i'],
    ['e', 'u'],
    ['é', 'u'],
    ['i', 'a'],
    ['i', 'e'],
    ['i', 'o'],
    ['i', 'u'],
    ['õ', 'e'],
    ['o', 'i'],
    ['ó', 'i'],
    ['o', 'u'],
    ['u', 'a'],
    ['u', 'e'],
    ['u', 'ê'],
    ['u', 'i'],
];

/// The six three-vowel clusters treated as triphthongs.
pub const TRIPHTHONGS: [[char; 3]; 6] = [
    ['u', 'a', 'i'],
    ['u', 'e', 'i'],
    ['u', 'ã', 'o'],
    ['u', 'õ', 'e'],
    ['i', 'u', 'i'],
    ['u', 'o', 'u'],
];

/// Case-insensitive vowel test.
pub fn is_vowel(c: char) -> bool {
    VOWELS.contains(&fold_case(c))
}

/// A letter that is not in the vowel table (so `ç`, `y` and `ü` are consonants).
pub fn is_consonant(c: char) -> bool {
    is_letter(c) && !is_vowel(c)
}

/// Case-insensitive diphthong test.
pub fn is_diphthong(first: char, second: char) -> bool {
    DIPHTHONGS.contains(&[fold_case(first), fold_case(second)])
}

/// Case-insensitive triphthong test.
pub fn is_triphthong(first: char, second: char, third: char) -> bool {
    TRIPHTHONGS.contains(&[fold_case(first), fold_case(second), fold_case(third)])
}

/// Net syllable count of a codepoint sequence.
///
/// A diphthong at `[k-1, k]` only subtracts when `k-2` exists and holds a
/// consonant, so a diphthong at the very start of the sequence never does.
pub fn count_syllables_in(chars: &[char]) -> usize {
    let vowels = chars.iter().filter(|&&c| is_vowel(c)).count();
    let mut semivowels = 0usize;
    for k in 2..chars.len() {
        if is_diphthong(chars[k - 1], chars[k]) && is_consonant(chars[k - 2]) {
            semivowels += 1;
        }
        if is_triphthong(chars[k - 2], chars[k - 1], chars[k]) {
            semivowels += 1;
        }
    }
    vowels.saturating_sub(semivowels)
}
