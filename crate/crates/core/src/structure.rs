//! Structure-constant sequences of rank-one graded submodules of the graded
//! quotient ring, up to graded isomorphism.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::params::GwaParams;
use crate::poly::{RootMultiset, RootToken};

/// The structure constant at one index `i`: `1`, `σ^i(z)`, `σ^i(z+m)` or `σ^i(f)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    One,
    Z,
    Zm,
    F,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::One, Letter::Z, Letter::Zm, Letter::F];

    pub fn from_parts(z: bool, zm: bool) -> Letter {
        match (z, zm) {
            (false, false) => Letter::One,
            (true, false) => Letter::Z,
            (false, true) => Letter::Zm,
            (true, true) => Letter::F,
        }
    }

    /// Whether the letter contains the factor `σ^i(z)`.
    pub fn has_z(self) -> bool {
        matches!(self, Letter::Z | Letter::F)
    }

    /// Whether the letter contains the factor `σ^i(z+m)`.
    pub fn has_zm(self) -> bool {
        matches!(self, Letter::Zm | Letter::F)
    }

    pub fn with_z(self, on: bool) -> Letter {
        Letter::from_parts(on, self.has_zm())
    }

    pub fn with_zm(self, on: bool) -> Letter {
        Letter::from_parts(self.has_z(), on)
    }

    /// `z+m = z` when `m = 0`, so the multiple case spells `Zm` as `Z`.
    pub fn normalized(self, params: GwaParams) -> Letter {
        match (self, params) {
            (Letter::Zm, GwaParams::Multiple) => Letter::Z,
            (l, _) => l,
        }
    }

    pub fn polynomial(self, i: i64, params: GwaParams) -> RootMultiset {
        let mut tokens = Vec::with_capacity(2);
        if self.has_z() {
            tokens.push(RootToken::Int(i));
        }
        if self.has_zm() {
            tokens.push(RootToken::Shift(i));
        }
        RootMultiset::from_tokens(params, tokens)
    }

    /// The letter at index `i` whose polynomial is `poly`, if any.
    pub fn from_polynomial(poly: &RootMultiset, i: i64) -> Option<Letter> {
        let params = poly.params();
        Letter::ALL
            .into_iter()
            .map(|l| l.normalized(params))
            .find(|l| &l.polynomial(i, params) == poly)
    }

    pub fn parse(text: &str) -> Option<Letter> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        match compact.as_str() {
            "1" => Some(Letter::One),
            "z" => Some(Letter::Z),
            "z+m" => Some(Letter::Zm),
            "f" => Some(Letter::F),
            _ => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::One => "1",
            Letter::Z => "z",
            Letter::Zm => "z+m",
            Letter::F => "f",
        })
    }
}

/// Finite letter data with declared tails, before validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawSequence {
    pub entries: BTreeMap<i64, Letter>,
    /// Letter assumed at every index below the entries.
    pub below: Letter,
    /// Letter assumed at every index above the entries.
    pub above: Letter,
    /// Rewrite `Zm` as `Z` in the multiple case instead of rejecting it.
    pub normalize: bool,
}

impl RawSequence {
    pub fn new(entries: BTreeMap<i64, Letter>) -> Self {
        RawSequence { entries, below: Letter::F, above: Letter::One, normalize: true }
    }
}

/// A rank-one graded module given by its structure constants `c_i`.
///
/// Letters are stored for `lo <= i < hi`; every `c_i` with `i >= hi` is `1`
/// and every `c_i` with `i < lo` is `σ^i(f)`. The window is trimmed so that
/// structural equality coincides with graded isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StructureSequence {
    params: GwaParams,
    lo: i64,
    letters: Vec<Letter>,
}

impl StructureSequence {
    pub fn from_window(params: GwaParams, lo: i64, letters: Vec<Letter>) -> Self {
        let mut letters: Vec<Letter> = letters.into_iter().map(|l| l.normalized(params)).collect();
        while letters.last() == Some(&Letter::One) {
            letters.pop();
        }
        let lead = letters.iter().take_while(|l| **l == Letter::F).count();
        letters.drain(..lead);
        StructureSequence { params, lo: lo + lead as i64, letters }
    }

    /// Builds a sequence from `(index, letter)` overrides on top of `self`.
    pub fn with_letters(&self, changes: &[(i64, Letter)]) -> Self {
        let lo = changes.iter().map(|c| c.0).chain([self.lo]).min().unwrap_or(self.lo);
        let hi = changes.iter().map(|c| c.0 + 1).chain([self.hi()]).max().unwrap_or(self.hi());
        let mut letters: Vec<Letter> = (lo..hi).map(|i| self.letter(i)).collect();
        for (i, l) in changes {
            letters[(i - lo) as usize] = *l;
        }
        StructureSequence::from_window(self.params, lo, letters)
    }

    pub fn validate(params: GwaParams, raw: &RawSequence) -> Result<Self> {
        if raw.below != Letter::F {
            return Err(Error::TailViolation(format!(
                "letters below the window must be f, got {}",
                raw.below
            )));
        }
        if raw.above != Letter::One {
            return Err(Error::TailViolation(format!(
                "letters above the window must be 1, got {}",
                raw.above
            )));
        }
        if params == GwaParams::Multiple && !raw.normalize {
            if let Some((i, _)) = raw.entries.iter().find(|(_, l)| **l == Letter::Zm) {
                return Err(Error::AlphabetViolation(format!(
                    "z+m at index {i} is not a letter when m = 0"
                )));
            }
        }
        let (Some(lo), Some(hi)) = (raw.entries.keys().next(), raw.entries.keys().next_back())
        else {
            return Ok(StructureSequence::free_module(params, 0));
        };
        // gaps inside the declared range are ambiguous between the two tails
        if let Some(i) = (*lo..=*hi).find(|i| !raw.entries.contains_key(i)) {
            return Err(Error::TailViolation(format!("index {i} inside the window has no letter")));
        }
        let letters = raw.entries.values().copied().collect();
        Ok(StructureSequence::from_window(params, *lo, letters))
    }

    /// `A<n>`: `f` below `n`, `1` from `n` on.
    pub fn free_module(params: GwaParams, n: i64) -> Self {
        StructureSequence { params, lo: n, letters: Vec::new() }
    }

    pub fn shift(&self, n: i64) -> Self {
        StructureSequence { params: self.params, lo: self.lo + n, letters: self.letters.clone() }
    }

    pub fn params(&self) -> GwaParams {
        self.params
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.letters.len() as i64
    }

    pub fn window(&self) -> &[Letter] {
        &self.letters
    }

    pub fn letter(&self, i: i64) -> Letter {
        if i < self.lo {
            Letter::F
        } else if i >= self.hi() {
            Letter::One
        } else {
            self.letters[(i - self.lo) as usize]
        }
    }

    pub fn letter_polynomial(&self, i: i64) -> RootMultiset {
        self.letter(i).polynomial(i, self.params)
    }

    /// Explicit letters on the window; a free module reports its first `1`
    /// so that the map still pins down the position.
    pub fn letters_map(&self) -> BTreeMap<i64, Letter> {
        (self.lo..self.hi().max(self.lo + 1)).map(|i| (i, self.letter(i))).collect()
    }

    pub fn iso_equal(&self, other: &Self) -> Result<bool> {
        self.params.check_same(&other.params)?;
        Ok(self == other)
    }

    pub fn is_free(&self) -> bool {
        self.letters.is_empty()
    }

    /// Text form `window = lo..hi ; letters = ...`.
    pub fn describe(&self) -> String {
        let letters: Vec<String> = self.letters.iter().map(Letter::to_string).collect();
        format!("window = {}..{} ; letters = {}", self.lo, self.hi(), letters.join(", "))
    }
}

impl fmt::Display for StructureSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}
