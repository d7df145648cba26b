//! Monic polynomials that split into the linear factors `z+i` and `z+m+i`,
//! stored as multisets of root tokens.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::params::GwaParams;

/// A single linear factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootToken {
    /// `z + i`, that is `σ^i(z)`.
    Int(i64),
    /// `z + m + i`, that is `σ^i(z+m)`.
    Shift(i64),
}

impl RootToken {
    pub fn index(self) -> i64 {
        match self {
            RootToken::Int(i) | RootToken::Shift(i) => i,
        }
    }

    pub fn shifted(self, k: i64) -> RootToken {
        match self {
            RootToken::Int(i) => RootToken::Int(i + k),
            RootToken::Shift(i) => RootToken::Shift(i + k),
        }
    }

    /// Rewrites `z+m+i` as `z+(m+i)` whenever `m` is an integer, so that each
    /// linear polynomial has exactly one spelling.
    pub fn canonical(self, params: GwaParams) -> RootToken {
        match (self, params.integer_gap()) {
            (RootToken::Shift(i), Some(k)) => RootToken::Int(i + k),
            (t, _) => t,
        }
    }
}

impl fmt::Display for RootToken {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RootToken::Int(i) => write!(f, "(z{i:+})"),
            RootToken::Shift(i) => write!(f, "(z+m{i:+})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootMultiset {
    params: GwaParams,
    tokens: BTreeMap<RootToken, u32>,
}

impl RootMultiset {
    pub fn one(params: GwaParams) -> Self {
        RootMultiset { params, tokens: BTreeMap::new() }
    }

    pub fn from_tokens<I: IntoIterator<Item = RootToken>>(params: GwaParams, tokens: I) -> Self {
        let mut out = RootMultiset::one(params);
        for t in tokens {
            out.push(t, 1);
        }
        out
    }

    pub fn token(params: GwaParams, t: RootToken) -> Self {
        RootMultiset::from_tokens(params, [t])
    }

    fn push(&mut self, t: RootToken, mult: u32) {
        if mult > 0 {
            *self.tokens.entry(t.canonical(self.params)).or_insert(0) += mult;
        }
    }

    pub fn params(&self) -> GwaParams {
        self.params
    }

    pub fn degree(&self) -> u32 {
        self.tokens.values().sum()
    }

    pub fn is_one(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn multiplicity(&self, t: RootToken) -> u32 {
        self.tokens.get(&t.canonical(self.params)).copied().unwrap_or(0)
    }

    /// Canonical tokens with their multiplicities, in ascending order.
    pub fn tokens(&self) -> impl Iterator<Item = (RootToken, u32)> + '_ {
        self.tokens.iter().map(|(t, k)| (*t, *k))
    }

    fn zip_with(&self, other: &Self, op: impl Fn(u32, u32) -> u32) -> Result<Self> {
        self.params.check_same(&other.params)?;
        let mut out = RootMultiset::one(self.params);
        for t in self.tokens.keys().chain(other.tokens.keys()) {
            if out.tokens.contains_key(t) {
                continue;
            }
            let k = op(self.multiplicity(*t), other.multiplicity(*t));
            if k > 0 {
                out.tokens.insert(*t, k);
            }
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn gcd(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u32::min)
    }

    pub fn lcm(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u32::max)
    }

    pub fn sigma_shift(&self, k: i64) -> Self {
        RootMultiset {
            params: self.params,
            tokens: self.tokens.iter().map(|(t, n)| (t.shifted(k), *n)).collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        self.params.check_same(&other.params)?;
        Ok(self.tokens.iter().all(|(t, k)| other.multiplicity(*t) >= *k))
    }

    /// `self / other`, failing when the quotient is not a polynomial.
    pub fn exact_div(&self, other: &Self) -> Result<Self> {
        if !other.divides(self)? {
            return Err(Error::Unrepresentable(format!("{self} / {other}")));
        }
        self.zip_with(other, |a, b| a - b)
    }

    /// `self / gcd(self, other)`: the part of `self` not already in `other`.
    pub fn saturating_div(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, u32::saturating_sub)
    }

    /// The multiset with one copy of `t` removed, if present.
    pub fn without_one(&self, t: RootToken) -> Option<Self> {
        let t = t.canonical(self.params);
        let mut out = self.clone();
        match out.tokens.get_mut(&t) {
            None => return None,
            Some(1) => {
                out.tokens.remove(&t);
            }
            Some(k) => *k -= 1,
        }
        Some(out)
    }

    pub fn parse(params: GwaParams, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut out = RootMultiset::one(params);
        if compact == "1" {
            return Ok(out);
        }
        let bad = |why: &str| Error::Parse(format!("bad polynomial `{text}`: {why}"));
        let mut rest = compact.as_str();
        if rest.is_empty() {
            return Err(bad("empty"));
        }
        while !rest.is_empty() {
            rest = rest.strip_prefix('*').unwrap_or(rest);
            let body_end = rest.find(')').ok_or_else(|| bad("unclosed factor"))?;
            let body = rest
                .strip_prefix("(z")
                .map(|_| &rest[2..body_end])
                .ok_or_else(|| bad("factor must start with `(z`"))?;
            rest = &rest[body_end + 1..];
            let (shift, offset) = match body.strip_prefix("+m") {
                Some(o) => (true, o),
                None => (false, body),
            };
            let index = if offset.is_empty() {
                0
            } else {
                offset.parse::<i64>().map_err(|_| bad("bad integer offset"))?
            };
            let mut mult = 1u32;
            if let Some(after) = rest.strip_prefix('^') {
                let digits = after.chars().take_while(|c| c.is_ascii_digit()).count();
                mult = after[..digits].parse().map_err(|_| bad("bad exponent"))?;
                rest = &after[digits..];
            }
            let token = if shift { RootToken::Shift(index) } else { RootToken::Int(index) };
            out.push(token, mult);
        }
        Ok(out)
    }
}

impl fmt::Display for RootMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tokens.is_empty() {
            return write!(f, "1");
        }
        for (t, k) in &self.tokens {
            write!(f, "{t}")?;
            if *k > 1 {
                write!(f, "^{k}")?;
            }
        }
        Ok(())
    }
}
