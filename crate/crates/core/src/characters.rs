//! Formal characters: integer combinations of residue words.

pub mod appendix;

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::cartan::{entry, CartanType, ContentVector, Residue};
use crate::error::{Error, Result};

/// A word `i_1 i_2 … i_n` over the index set.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ResidueWord(pub Vec<Residue>);

impl ResidueWord {
    pub fn new(letters: Vec<Residue>) -> Self {
        ResidueWord(letters)
    }

    pub fn letters(&self) -> &[Residue] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn content(&self) -> ContentVector {
        self.0.iter().map(|&i| (i, 1)).collect()
    }

    /// Length of the run of `i` at the end of the word.
    pub fn trailing(&self, i: Residue) -> usize {
        self.0.iter().rev().take_while(|&&x| x == i).count()
    }

    /// Length of the run of `i` at the start of the word.
    pub fn leading(&self, i: Residue) -> usize {
        self.0.iter().take_while(|&&x| x == i).count()
    }

    fn repeat(i: Residue, n: usize) -> Self {
        ResidueWord(vec![i; n])
    }

    fn concat(parts: &[&[Residue]]) -> Self {
        ResidueWord(parts.concat())
    }
}

impl From<Vec<Residue>> for ResidueWord {
    fn from(v: Vec<Residue>) -> Self {
        ResidueWord(v)
    }
}

impl fmt::Display for ResidueWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&i| i < 10) {
            for i in &self.0 {
                write!(f, "{i}")?;
            }
            Ok(())
        } else {
            let letters: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
            write!(f, "({})", letters.join(","))
        }
    }
}

impl Serialize for ResidueWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

/// `Σ c_w [w]` over words of a fixed length; zero coefficients are dropped.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    degree: usize,
    terms: BTreeMap<ResidueWord, i64>,
}

impl Character {
    pub fn zero(degree: usize) -> Self {
        Character {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn word(word: ResidueWord, coefficient: i64) -> Self {
        let mut c = Character::zero(word.len());
        c.add_term(word, coefficient)
            .expect("length matches by construction");
        c
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, word: &ResidueWord) -> i64 {
        self.terms.get(word).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ResidueWord, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn words(&self) -> impl Iterator<Item = &ResidueWord> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Sum of all coefficients.
    pub fn mass(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn add_term(&mut self, word: ResidueWord, coefficient: i64) -> Result<()> {
        if word.len() != self.degree {
            return Err(Error::Unsupported(format!(
                "word {word} has length {}, character has degree {}",
                word.len(),
                self.degree
            )));
        }
        let slot = self.terms.entry(word).or_insert(0);
        *slot = slot
            .checked_add(coefficient)
            .ok_or_else(|| Error::Overflow("character coefficient".into()))?;
        self.terms.retain(|_, c| *c != 0);
        Ok(())
    }

    pub fn add(&self, other: &Character) -> Result<Character> {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c)?;
        }
        Ok(out)
    }

    pub fn scale(&self, k: i64) -> Result<Character> {
        let mut out = Character::zero(self.degree);
        for (w, c) in self.terms() {
            let c = c
                .checked_mul(k)
                .ok_or_else(|| Error::Overflow("character coefficient".into()))?;
            out.add_term(w.clone(), c)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (n, (w, c)) in self.terms().enumerate() {
            if n > 0 {
                f.write_str(" + ")?;
            }
            match c {
                1 => write!(f, "{w}")?,
                _ => write!(f, "{c}.{w}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Character {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeMap;
        let mut map = s.serialize_map(Some(self.terms.len()))?;
        for (w, c) in &self.terms {
            map.serialize_entry(&w.to_string(), c)?;
        }
        map.end()
    }
}

fn factorial(n: usize) -> Result<i64> {
    (1..=n as i64).try_fold(1i64, |acc, k| {
        acc.checked_mul(k)
            .ok_or_else(|| Error::Overflow(format!("{n}!")))
    })
}

/// `n! [i^n]`, the character of the irreducible module `L(i^n)`.
pub fn kato_character(i: Residue, n: usize) -> Result<Character> {
    Ok(Character::word(ResidueWord::repeat(i, n), factorial(n)?))
}

/// Character of `L(i^a j i^b)` for neighbouring `i`, `j`.
///
/// With `m = −⟨h_i, α_j⟩`: for `a + b ≤ m` it is `a! b! [i^a j i^b]`; for
/// `a + b = m + 1` and `b ≥ 1` it is
/// `a! b! [i^a j i^b] + (a+1)! (b−1)! [i^{a+1} j i^{b−1}]`. Other `(a, b)`
/// have no closed form here.
pub fn wedge_character(
    i: Residue,
    j: Residue,
    a: usize,
    b: usize,
    ct: CartanType,
) -> Result<Character> {
    ct.check(i)?;
    ct.check(j)?;
    if i.abs_diff(j) != 1 {
        return Err(Error::Unsupported(format!(
            "residues {i} and {j} are not neighbours"
        )));
    }
    let m = (-entry(i, j, ct)) as usize;
    let term = |a: usize, b: usize| -> Result<Character> {
        let coefficient = factorial(a)?
            .checked_mul(factorial(b)?)
            .ok_or_else(|| Error::Overflow("wedge coefficient".into()))?;
        let w = ResidueWord::concat(&[&vec![i; a], &[j], &vec![i; b]]);
        Ok(Character::word(w, coefficient))
    };
    if a + b <= m {
        term(a, b)
    } else if a + b == m + 1 && b >= 1 {
        term(a, b)?.add(&term(a + 1, b - 1)?)
    } else {
        Err(Error::UnsupportedRange { a, b, bound: m })
    }
}

fn shuffle_words(
    u: &[Residue],
    v: &[Residue],
    prefix: &mut Vec<Residue>,
    out: &mut BTreeMap<ResidueWord, i64>,
) {
    if u.is_empty() || v.is_empty() {
        let mut w = prefix.clone();
        w.extend_from_slice(u);
        w.extend_from_slice(v);
        *out.entry(ResidueWord(w)).or_insert(0) += 1;
        return;
    }
    prefix.push(u[0]);
    shuffle_words(&u[1..], v, prefix, out);
    prefix.pop();
    prefix.push(v[0]);
    shuffle_words(u, &v[1..], prefix, out);
    prefix.pop();
}

/// Bilinear shuffle product of characters.
pub fn shuffle(c1: &Character, c2: &Character) -> Result<Character> {
    let mut out = Character::zero(c1.degree + c2.degree);
    for (u, cu) in c1.terms() {
        for (v, cv) in c2.terms() {
            let mut words = BTreeMap::new();
            shuffle_words(u.letters(), v.letters(), &mut Vec::new(), &mut words);
            let base = cu
                .checked_mul(cv)
                .ok_or_else(|| Error::Overflow("shuffle coefficient".into()))?;
            for (w, k) in words {
                let c = base
                    .checked_mul(k)
                    .ok_or_else(|| Error::Overflow("shuffle coefficient".into()))?;
                out.add_term(w, c)?;
            }
        }
    }
    Ok(out)
}

/// `ε_i`: the longest run of `i` ending a word of the character.
pub fn eps_from_character(c: &Character, i: Residue) -> Result<usize> {
    c.words()
        .map(|w| w.trailing(i))
        .max()
        .ok_or(Error::ZeroCharacter)
}

/// `ε_i^*`: the longest run of `i` starting a word of the character.
pub fn eps_star_from_character(c: &Character, i: Residue) -> Result<usize> {
    c.words()
        .map(|w| w.leading(i))
        .max()
        .ok_or(Error::ZeroCharacter)
}

/// Whether the module factors through the cyclotomic quotient for `Λ₀`:
/// `ε_0^* ≤ 1` and `ε_i^* = 0` for `i ≠ 0`.
pub fn survives_lambda0(c: &Character) -> Result<bool> {
    if c.is_zero() {
        return Err(Error::ZeroCharacter);
    }
    Ok(c.words().all(|w| match w.letters() {
        [] => true,
        [0] => true,
        [0, second, ..] => *second != 0,
        _ => false,
    }))
}
