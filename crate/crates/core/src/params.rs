//! Root parameter of `f = z(z+m)` and the coordinate line of simple fibers.
//!
//! The case split (multiple / congruent / half-integer / generic) fixes which
//! simples exist, how structure-constant letters factor, and which Picard
//! offsets are admissible. `m` is never stored as a float: congruent roots
//! carry an integer, half-integer roots an exact rational, and the generic
//! case keeps `m` as a formal symbol.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GwaParams {
    /// `m = 0`, so `f = z^2`.
    Multiple,
    /// `m` a positive integer.
    Congruent(i64),
    /// `m` in `Z + 1/2`.
    HalfInteger(Rational64),
    /// `m` a formal symbol outside `Z` and `Z + 1/2`.
    Generic,
}

/// Which half of the coordinate line a lattice point lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Points of `Z`.
    Int,
    /// Points of `Z + m` (non-congruent cases only).
    M,
}

/// A point of `Z` or `Z + m`, addressed by family and integer index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub family: Family,
    pub index: i64,
}

impl LatticePoint {
    pub fn int(index: i64) -> Self {
        LatticePoint { family: Family::Int, index }
    }

    pub fn m(index: i64) -> Self {
        LatticePoint { family: Family::M, index }
    }
}

impl GwaParams {
    pub fn multiple() -> Self {
        GwaParams::Multiple
    }

    pub fn congruent(k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::InvalidParameter(format!(
                "congruent gap must be a positive integer, got {k}"
            )));
        }
        Ok(GwaParams::Congruent(k))
    }

    pub fn half_integer(q: Rational64) -> Result<Self> {
        if !(q - Rational64::new(1, 2)).is_integer() {
            return Err(Error::InvalidParameter(format!("{q} is not in Z + 1/2")));
        }
        Ok(GwaParams::HalfInteger(q))
    }

    pub fn generic() -> Self {
        GwaParams::Generic
    }

    /// Classifies a rational root gap. Non-integer rationals other than
    /// half-integers fall into the generic case.
    pub fn from_rational(q: Rational64) -> Result<Self> {
        if q.is_integer() {
            let k = q.to_integer();
            match k.cmp(&0) {
                Ordering::Equal => Ok(GwaParams::Multiple),
                Ordering::Greater => Ok(GwaParams::Congruent(k)),
                Ordering::Less => Err(Error::InvalidParameter(format!(
                    "m = {k} makes {} the largest integer root; normalize so that 0 is",
                    -k
                ))),
            }
        } else if (q - Rational64::new(1, 2)).is_integer() {
            Ok(GwaParams::HalfInteger(q))
        } else {
            Ok(GwaParams::Generic)
        }
    }

    pub fn is_noncongruent(&self) -> bool {
        matches!(self, GwaParams::HalfInteger(_) | GwaParams::Generic)
    }

    /// The integer gap `m` in the multiple (0) and congruent cases.
    pub fn integer_gap(&self) -> Option<i64> {
        match self {
            GwaParams::Multiple => Some(0),
            GwaParams::Congruent(k) => Some(*k),
            _ => None,
        }
    }

    /// Numeric value of `m`, when it has one.
    pub fn m_value(&self) -> Option<Rational64> {
        match self {
            GwaParams::Multiple => Some(Rational64::zero()),
            GwaParams::Congruent(k) => Some(Rational64::from_integer(*k)),
            GwaParams::HalfInteger(q) => Some(*q),
            GwaParams::Generic => None,
        }
    }

    /// `k` with `m = k + 1/2` in the half-integer case.
    pub fn half_floor(&self) -> Option<i64> {
        match self {
            GwaParams::HalfInteger(q) => Some((*q - Rational64::new(1, 2)).to_integer()),
            _ => None,
        }
    }

    pub fn case_name(&self) -> &'static str {
        match self {
            GwaParams::Multiple => "multiple",
            GwaParams::Congruent(_) => "congruent",
            GwaParams::HalfInteger(_) => "half-integer",
            GwaParams::Generic => "generic",
        }
    }

    pub fn check_same(&self, other: &GwaParams) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ParamMismatch(*self, *other))
        }
    }

    pub fn coordinate(&self, point: LatticePoint) -> Coordinate {
        match point.family {
            Family::Int => Coordinate::int(point.index),
            Family::M => Coordinate::new(*self, Rational64::from_integer(point.index), 1),
        }
    }

    /// The lattice point at `x`, if `x` lies on `Z` or `Z + m`.
    pub fn lattice_point(&self, x: &Coordinate) -> Option<LatticePoint> {
        match self {
            GwaParams::Multiple | GwaParams::Congruent(_) => {
                (x.m_coeff == 0 && x.rational.is_integer())
                    .then(|| LatticePoint::int(x.rational.to_integer()))
            }
            GwaParams::Generic => {
                if !x.rational.is_integer() {
                    return None;
                }
                let index = x.rational.to_integer();
                match x.m_coeff {
                    0 => Some(LatticePoint::int(index)),
                    1 => Some(LatticePoint::m(index)),
                    _ => None,
                }
            }
            GwaParams::HalfInteger(q) => {
                if x.rational.is_integer() {
                    Some(LatticePoint::int(x.rational.to_integer()))
                } else if (x.rational - q).is_integer() {
                    Some(LatticePoint::m((x.rational - q).to_integer()))
                } else {
                    None
                }
            }
        }
    }

    pub fn is_lattice(&self, x: &Coordinate) -> bool {
        self.lattice_point(x).is_some()
    }

    /// Whether `x -> sign * x + offset` maps the lattice `Z ∪ (Z+m)` onto itself.
    pub fn admissible_offset(&self, sign: Sign, offset: &Coordinate) -> bool {
        match self {
            GwaParams::Multiple | GwaParams::Congruent(_) => {
                offset.m_coeff == 0 && offset.rational.is_integer()
            }
            GwaParams::Generic => {
                let want = match sign {
                    Sign::Plus => 0,
                    Sign::Minus => 1,
                };
                offset.m_coeff == want && offset.rational.is_integer()
            }
            GwaParams::HalfInteger(_) => (offset.rational * 2).is_integer(),
        }
    }
}

impl fmt::Display for GwaParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GwaParams::Multiple => write!(f, "m = 0"),
            GwaParams::Congruent(k) => write!(f, "m = {k}"),
            GwaParams::HalfInteger(q) => write!(f, "m = {}/{}", q.numer(), q.denom()),
            GwaParams::Generic => write!(f, "m = generic"),
        }
    }
}

/// `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// A point `rational + m_coeff * m` of the coordinate line.
///
/// Whenever `m` has a numeric value the `m` part is folded into `rational`,
/// so structural equality is equality of points.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coordinate {
    m_coeff: i64,
    rational: Rational64,
}

impl Coordinate {
    pub fn int(n: i64) -> Self {
        Coordinate { m_coeff: 0, rational: Rational64::from_integer(n) }
    }

    pub fn new(params: GwaParams, rational: Rational64, m_coeff: i64) -> Self {
        match params.m_value() {
            Some(m) => Coordinate { m_coeff: 0, rational: rational + m * m_coeff },
            None => Coordinate { m_coeff, rational },
        }
    }

    pub fn rational(&self) -> Rational64 {
        self.rational
    }

    pub fn m_coeff(&self) -> i64 {
        self.m_coeff
    }

    pub fn is_integer(&self) -> bool {
        self.m_coeff == 0 && self.rational.is_integer()
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then(|| self.rational.to_integer())
    }

    /// `m - 1`, the offset of the grading reversal.
    pub fn omega_offset(params: GwaParams) -> Self {
        Coordinate::new(params, Rational64::from_integer(-1), 1)
    }

    pub fn scale(self, sign: Sign) -> Self {
        match sign {
            Sign::Plus => self,
            Sign::Minus => -self,
        }
    }

    pub fn parse(params: GwaParams, text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty coordinate".into()));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        for (i, ch) in compact.char_indices() {
            if i > 0 && (ch == '+' || ch == '-') && !compact[..i].ends_with('/') {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);

        let mut rational = Rational64::zero();
        let mut m_coeff = 0i64;
        for term in terms {
            let bad = || Error::Parse(format!("bad coordinate term `{term}` in `{text}`"));
            if let Some(coeff) = term.strip_suffix('m') {
                let coeff = coeff.strip_suffix('*').unwrap_or(coeff);
                let k = match coeff {
                    "" | "+" => 1,
                    "-" => -1,
                    other => other.parse::<i64>().map_err(|_| bad())?,
                };
                m_coeff += k;
            } else {
                let body = term.strip_prefix('+').unwrap_or(term);
                let value = match body.split_once('/') {
                    Some((n, d)) => {
                        let n: i64 = n.parse().map_err(|_| bad())?;
                        let d: i64 = d.parse().map_err(|_| bad())?;
                        if d == 0 {
                            return Err(bad());
                        }
                        Rational64::new(n, d)
                    }
                    None => Rational64::from_integer(body.parse().map_err(|_| bad())?),
                };
                rational += value;
            }
        }
        Ok(Coordinate::new(params, rational, m_coeff))
    }
}

impl Add for Coordinate {
    type Output = Coordinate;

    fn add(self, rhs: Coordinate) -> Coordinate {
        Coordinate { m_coeff: self.m_coeff + rhs.m_coeff, rational: self.rational + rhs.rational }
    }
}

impl Sub for Coordinate {
    type Output = Coordinate;

    fn sub(self, rhs: Coordinate) -> Coordinate {
        self + (-rhs)
    }
}

impl Neg for Coordinate {
    type Output = Coordinate;

    fn neg(self) -> Coordinate {
        Coordinate { m_coeff: -self.m_coeff, rational: -self.rational }
    }
}

fn fmt_rational(q: Rational64) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Coordinate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m_part = match self.m_coeff {
            0 => None,
            1 => Some("m".to_string()),
            -1 => Some("-m".to_string()),
            k => Some(format!("{k}m")),
        };
        match m_part {
            None => write!(f, "{}", fmt_rational(self.rational)),
            Some(mp) if self.rational.is_zero() => write!(f, "{mp}"),
            Some(mp) => {
                let mp = if self.m_coeff < 0 {
                    format!("- {}", &mp[1..])
                } else {
                    format!("+ {mp}")
                };
                write!(f, "{} {}", fmt_rational(self.rational), mp)
            }
        }
    }
}
