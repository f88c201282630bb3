//! Alphabets, words, lexicographic and cyclic comparison.
//!
//! Letters are the integers `1..=l`; a larger value is a lexicographically
//! greater letter. Character maps such as `"abc"` only exist at the text
//! boundary (see [`WordFormat`]).

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Letter = u32;

/// An ordered alphabet `1..=size`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Alphabet {
    size: u32,
}

impl Alphabet {
    pub fn new(size: u32) -> Result<Self> {
        if size == 0 {
            return Err(Error::EmptyAlphabet);
        }
        Ok(Self { size })
    }

    pub fn size(self) -> u32 {
        self.size
    }

    pub fn contains(self, letter: Letter) -> bool {
        (1..=self.size).contains(&letter)
    }

    /// Smallest alphabet containing every letter of `letters` (at least one letter).
    pub fn spanning(letters: &[Letter]) -> Self {
        Self {
            size: letters.iter().copied().max().unwrap_or(1).max(1),
        }
    }
}

/// A finite word over an [`Alphabet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Word {
    alphabet: Alphabet,
    letters: Vec<Letter>,
}

impl Word {
    pub fn new(alphabet: Alphabet, letters: Vec<Letter>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&a| !alphabet.contains(a)) {
            return Err(Error::LetterOutOfRange {
                letter: bad,
                size: alphabet.size(),
            });
        }
        Ok(Self { alphabet, letters })
    }

    pub fn empty(alphabet: Alphabet) -> Self {
        Self {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Builds a word over the smallest alphabet containing its letters.
    pub fn from_letters(letters: Vec<Letter>) -> Result<Self> {
        let alphabet = Alphabet::spanning(&letters);
        Self::new(alphabet, letters)
    }

    /// Parses Latin text (`a` = 1, `b` = 2, ...) over the given alphabet.
    pub fn latin(alphabet: Alphabet, text: &str) -> Result<Self> {
        WordFormat::latin().parse(text, alphabet)
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.letters
    }

    /// The factor `self[start..end]` as a word over the same alphabet.
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: self.letters[start..end].to_vec(),
        }
    }

    /// Same letters over a (possibly larger) alphabet.
    pub fn with_alphabet(&self, alphabet: Alphabet) -> Result<Word> {
        Word::new(alphabet, self.letters.clone())
    }

    pub fn pow(&self, exponent: usize) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: self.letters.repeat(exponent),
        }
    }

    pub fn concat(&self, other: &Word) -> Result<Word> {
        check_same_alphabet(self, other)?;
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Word {
            alphabet: self.alphabet,
            letters,
        })
    }

    pub fn rotation(&self, shift: usize) -> Word {
        Word {
            alphabet: self.alphabet,
            letters: rotate(&self.letters, shift),
        }
    }
}

impl Deref for Word {
    type Target = [Letter];

    fn deref(&self) -> &[Letter] {
        &self.letters
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&WordFormat::for_alphabet(self.alphabet).render(&self.letters))
    }
}

/// Text representation of words: a character per letter, or
/// whitespace-separated integers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum WordFormat {
    Chars(Vec<char>),
    Integers,
}

const LATIN: &str = "abcdefghijklmnopqrstuvwxyz";

impl WordFormat {
    pub fn latin() -> Self {
        WordFormat::Chars(LATIN.chars().collect())
    }

    pub fn chars(map: &str) -> Result<Self> {
        let chars: Vec<char> = map.chars().collect();
        if chars.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (i, c) in chars.iter().enumerate() {
            if chars[..i].contains(c) || c.is_whitespace() {
                return Err(Error::Parse(format!("invalid character map {map:?}")));
            }
        }
        Ok(WordFormat::Chars(chars))
    }

    /// Latin letters when they suffice, integers otherwise.
    pub fn for_alphabet(alphabet: Alphabet) -> Self {
        if alphabet.size() as usize <= LATIN.len() {
            Self::latin()
        } else {
            WordFormat::Integers
        }
    }

    pub fn parse(&self, text: &str, alphabet: Alphabet) -> Result<Word> {
        let letters = self.parse_letters(text)?;
        Word::new(alphabet, letters)
    }

    pub fn parse_letters(&self, text: &str) -> Result<Vec<Letter>> {
        match self {
            WordFormat::Chars(map) => text
                .trim()
                .chars()
                .map(|c| {
                    map.iter()
                        .position(|&m| m == c)
                        .map(|i| i as Letter + 1)
                        .ok_or_else(|| Error::Parse(format!("unknown letter {c:?}")))
                })
                .collect(),
            WordFormat::Integers => text
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<Letter>()
                        .map_err(|_| Error::Parse(format!("not a letter value: {tok:?}")))
                })
                .collect(),
        }
    }

    pub fn render(&self, letters: &[Letter]) -> String {
        match self {
            WordFormat::Chars(map) => letters
                .iter()
                .map(|&a| match map.get(a as usize - 1) {
                    Some(c) => c.to_string(),
                    None => format!("<{a}>"),
                })
                .collect(),
            WordFormat::Integers => letters
                .iter()
                .map(|a| a.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }
}

/// Outcome of comparing two words. Positions are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CompareResult {
    Less(usize),
    Greater(usize),
    Equal,
    /// One word is a proper prefix of the other.
    Incomparable,
}

impl CompareResult {
    /// `true` for `Less` and `Greater`. Equal words count as incomparable:
    /// each is a beginning of the other.
    pub fn is_comparable(self) -> bool {
        matches!(self, CompareResult::Less(_) | CompareResult::Greater(_))
    }

    pub fn is_less(self) -> bool {
        matches!(self, CompareResult::Less(_))
    }

    pub fn is_greater(self) -> bool {
        matches!(self, CompareResult::Greater(_))
    }

    pub fn position(self) -> Option<usize> {
        match self {
            CompareResult::Less(p) | CompareResult::Greater(p) => Some(p),
            _ => None,
        }
    }
}

pub fn compare_letters(u: &[Letter], v: &[Letter]) -> CompareResult {
    match u.iter().zip(v).position(|(a, b)| a != b) {
        Some(i) if u[i] < v[i] => CompareResult::Less(i + 1),
        Some(i) => CompareResult::Greater(i + 1),
        None if u.len() == v.len() => CompareResult::Equal,
        None => CompareResult::Incomparable,
    }
}

fn check_same_alphabet(u: &Word, v: &Word) -> Result<()> {
    if u.alphabet != v.alphabet {
        return Err(Error::AlphabetMismatch {
            left: u.alphabet.size(),
            right: v.alphabet.size(),
        });
    }
    Ok(())
}

pub fn lex_compare(u: &Word, v: &Word) -> Result<CompareResult> {
    check_same_alphabet(u, v)?;
    Ok(compare_letters(u, v))
}

/// Length of the shortest period of `w` that divides `|w|`.
pub fn primitive_period(w: &[Letter]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    // KMP failure function: the longest proper border gives the smallest period.
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && w[i] != w[k] {
            k = fail[k - 1];
        }
        if w[i] == w[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let p = n - fail[n - 1];
    if n.is_multiple_of(p) {
        p
    } else {
        n
    }
}

pub fn is_primitive(w: &[Letter]) -> bool {
    !w.is_empty() && primitive_period(w) == w.len()
}

/// Returns `(root, exponent)` with `root^exponent = w` and `root` primitive.
pub fn primitive_root(w: &Word) -> Result<(Word, usize)> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let p = primitive_period(w);
    Ok((w.factor(0, p), w.len() / p))
}

pub fn rotate(w: &[Letter], shift: usize) -> Vec<Letter> {
    if w.is_empty() {
        return Vec::new();
    }
    let s = shift % w.len();
    let mut out = Vec::with_capacity(w.len());
    out.extend_from_slice(&w[s..]);
    out.extend_from_slice(&w[..s]);
    out
}

pub fn cyclic_shifts(w: &Word) -> Result<Vec<Word>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok((0..w.len()).map(|s| w.rotation(s)).collect())
}

/// Start index of the lexicographically least rotation.
pub fn least_rotation(w: &[Letter]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = w[(i + k) % n];
        let b = w[(j + k) % n];
        if a == b {
            k += 1;
            continue;
        }
        if a > b {
            i += k + 1;
        } else {
            j += k + 1;
        }
        if i == j {
            j += 1;
        }
        k = 0;
    }
    i.min(j)
}

/// The lexicographically least rotation, used as the canonical name of a word-cycle.
pub fn canonical_rotation(w: &[Letter]) -> Vec<Letter> {
    rotate(w, least_rotation(w))
}

/// Every rotation of `u` is comparable with every rotation of `v`.
pub fn strongly_comparable(u: &Word, v: &Word) -> Result<bool> {
    check_same_alphabet(u, v)?;
    if u.is_empty() || v.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(strongly_comparable_letters(u, v))
}

pub fn strongly_comparable_letters(u: &[Letter], v: &[Letter]) -> bool {
    (0..u.len()).all(|a| {
        let ru = rotate(u, a);
        (0..v.len()).all(|b| compare_letters(&ru, &rotate(v, b)).is_comparable())
    })
}

/// Conjugacy of two primitive words.
pub fn same_cycle_class(u: &Word, v: &Word) -> Result<bool> {
    check_same_alphabet(u, v)?;
    for w in [u, v] {
        if !is_primitive(w) {
            return Err(Error::NotPrimitive(w.to_string()));
        }
    }
    Ok(u.len() == v.len() && canonical_rotation(u) == canonical_rotation(v))
}

/// All words of length `len` over `1..=l`, in lexicographic order.
pub fn all_words(l: u32, len: usize) -> impl Iterator<Item = Vec<Letter>> {
    let total = (l as u128).checked_pow(len as u32).unwrap_or(u128::MAX);
    let mut current = if l == 0 && len > 0 {
        None
    } else {
        Some(vec![1; len])
    };
    let mut emitted = 0u128;
    std::iter::from_fn(move || {
        let out = current.clone()?;
        emitted += 1;
        if emitted >= total {
            current = None;
        } else if let Some(cur) = current.as_mut() {
            let mut i = len;
            while i > 0 {
                i -= 1;
                if cur[i] < l {
                    cur[i] += 1;
                    break;
                }
                cur[i] = 1;
            }
        }
        Some(out)
    })
}

/// Canonical representatives of all primitive word-cycles of length `t` over `1..=l`.
pub fn primitive_necklaces(l: u32, t: usize) -> Vec<Vec<Letter>> {
    all_words(l, t)
        .filter(|w| is_primitive(w) && least_rotation(w) == 0)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ab(text: &str) -> Word {
        Word::latin(Alphabet::new(3).unwrap(), text).unwrap()
    }

    #[test]
    fn lex_compare_examples() {
        assert_eq!(
            lex_compare(&ab("ab"), &ab("aa")).unwrap(),
            CompareResult::Greater(2)
        );
        assert_eq!(lex_compare(&ab("ab"), &ab("ab")).unwrap(), CompareResult::Equal);
        assert_eq!(
            lex_compare(&ab("ab"), &ab("aba")).unwrap(),
            CompareResult::Incomparable
        );
        assert_eq!(lex_compare(&ab("a"), &ab("b")).unwrap(), CompareResult::Less(1));
    }

    #[test]
    fn lex_compare_rejects_mixed_alphabets() {
        let u = Word::latin(Alphabet::new(2).unwrap(), "ab").unwrap();
        let v = Word::latin(Alphabet::new(3).unwrap(), "ab").unwrap();
        assert!(matches!(lex_compare(&u, &v), Err(Error::AlphabetMismatch { .. })));
    }

    #[test]
    fn primitive_root_examples() {
        let (r, e) = primitive_root(&ab("abab")).unwrap();
        assert_eq!((r.to_string().as_str(), e), ("ab", 2));
        let (r, e) = primitive_root(&ab("aba")).unwrap();
        assert_eq!((r.to_string().as_str(), e), ("aba", 1));
        let (r, e) = primitive_root(&ab("aaa")).unwrap();
        assert_eq!((r.to_string().as_str(), e), ("a", 3));
        assert_eq!(primitive_root(&ab("")), Err(Error::EmptyWord));
    }

    #[test]
    fn cyclic_shift_examples() {
        let names = |w: &str| -> Vec<String> {
            cyclic_shifts(&ab(w))
                .unwrap()
                .iter()
                .map(|s| s.to_string())
                .collect()
        };
        assert_eq!(names("ab"), ["ab", "ba"]);
        assert_eq!(names("aab"), ["aab", "aba", "baa"]);
        assert_eq!(names("a"), ["a"]);
        assert_eq!(cyclic_shifts(&ab("")), Err(Error::EmptyWord));
    }

    #[test]
    fn strong_comparability_examples() {
        assert!(!strongly_comparable(&ab("ab"), &ab("ba")).unwrap());
        assert!(strongly_comparable(&ab("aab"), &ab("abb")).unwrap());
        assert!(!strongly_comparable(&ab("a"), &ab("a")).unwrap());
        assert_eq!(strongly_comparable(&ab(""), &ab("a")), Err(Error::EmptyWord));
    }

    #[test]
    fn cycle_class_examples() {
        assert!(same_cycle_class(&ab("ab"), &ab("ba")).unwrap());
        assert!(!same_cycle_class(&ab("aab"), &ab("abb")).unwrap());
        assert!(same_cycle_class(&ab("abc"), &ab("bca")).unwrap());
        assert!(matches!(
            same_cycle_class(&ab("abab"), &ab("ab")),
            Err(Error::NotPrimitive(_))
        ));
    }

    #[test]
    fn least_rotation_matches_brute_force() {
        for len in 1..=7 {
            for w in all_words(3, len) {
                let best = (0..len).map(|s| rotate(&w, s)).min().unwrap();
                assert_eq!(canonical_rotation(&w), best, "{w:?}");
            }
        }
    }

    #[test]
    fn integer_format_round_trips() {
        let alphabet = Alphabet::new(40).unwrap();
        let w = WordFormat::Integers.parse("3 17 40 1", alphabet).unwrap();
        assert_eq!(w.letters(), &[3, 17, 40, 1]);
        assert_eq!(w.to_string(), "3 17 40 1");
        assert!(WordFormat::Integers.parse("3 41", alphabet).is_err());
    }

    #[test]
    fn custom_character_map() {
        let fmt = WordFormat::chars("xyz").unwrap();
        let w = fmt.parse("zyx", Alphabet::new(3).unwrap()).unwrap();
        assert_eq!(w.letters(), &[3, 2, 1]);
        assert_eq!(fmt.render(&w), "zyx");
        assert!(WordFormat::chars("xx").is_err());
    }

    #[test]
    fn necklace_counts() {
        // Necklace counts of primitive words: l=2 gives 2,1,2,3,6 for t=1..5.
        let counts: Vec<usize> = (1..=5).map(|t| primitive_necklaces(2, t).len()).collect();
        assert_eq!(counts, [2, 1, 2, 3, 6]);
        assert_eq!(primitive_necklaces(3, 2).len(), 3);
    }
}
