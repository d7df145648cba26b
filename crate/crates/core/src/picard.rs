//! The Picard group of the graded module category: elements in normal form
//! `ι_J ∘ (x ↦ a·x + c)`, their actions on simples and on rank-one
//! projectives, orbit invariants and generation reports.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::params::{Coordinate, Family, GwaParams, LatticePoint, Sign};
use crate::projectives::{from_factors, is_projective, simple_factors, surjects_onto, FactorAssignment};
use crate::simples::{Label, SimpleModule};
use crate::structure::{Letter, StructureSequence};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    Shift(i64),
    Omega,
    Iota(BTreeSet<Coordinate>),
    HalfShift,
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Shift(k) => write!(f, "S^{k}"),
            Generator::Omega => write!(f, "w"),
            Generator::HalfShift => write!(f, "H"),
            Generator::Iota(j) => {
                let points: Vec<String> = j.iter().map(Coordinate::to_string).collect();
                write!(f, "i{{{}}}", points.join(","))
            }
        }
    }
}

/// `ι_J ∘ d` where `d` moves coordinates by `x ↦ sign·x + offset` and `ι_J`
/// exchanges the `X` and `Y` simples at each point of `J`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PicardElement {
    params: GwaParams,
    sign: Sign,
    offset: Coordinate,
    flips: BTreeSet<Coordinate>,
}

impl PicardElement {
    pub fn identity(params: GwaParams) -> Self {
        PicardElement { params, sign: Sign::Plus, offset: Coordinate::int(0), flips: BTreeSet::new() }
    }

    pub fn new(
        params: GwaParams,
        sign: Sign,
        offset: Coordinate,
        flips: BTreeSet<Coordinate>,
    ) -> Result<Self> {
        if !params.admissible_offset(sign, &offset) {
            return Err(Error::InvalidGenerator(format!(
                "offset {offset} with sign {} does not preserve the lattice when {params}",
                sign.value()
            )));
        }
        if let Some(x) = flips.iter().find(|x| !params.is_lattice(x)) {
            return Err(Error::InvalidGenerator(format!(
                "flip point {x} is off the lattice when {params}"
            )));
        }
        Ok(PicardElement { params, sign, offset, flips })
    }

    pub fn generator(params: GwaParams, token: &Generator) -> Result<Self> {
        match token {
            Generator::Shift(k) => {
                PicardElement::new(params, Sign::Plus, Coordinate::int(*k), BTreeSet::new())
            }
            Generator::Omega => PicardElement::new(
                params,
                Sign::Minus,
                Coordinate::omega_offset(params),
                BTreeSet::new(),
            ),
            Generator::Iota(j) => PicardElement::new(params, Sign::Plus, Coordinate::int(0), j.clone()),
            Generator::HalfShift => {
                if !matches!(params, GwaParams::HalfInteger(_)) {
                    return Err(Error::InvalidGenerator(format!(
                        "the half shift needs m in Z + 1/2, not {params}"
                    )));
                }
                let half = Coordinate::new(params, Rational64::new(1, 2), 0);
                PicardElement::new(params, Sign::Plus, half, BTreeSet::new())
            }
        }
    }

    pub fn params(&self) -> GwaParams {
        self.params
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn offset(&self) -> Coordinate {
        self.offset
    }

    pub fn flips(&self) -> &BTreeSet<Coordinate> {
        &self.flips
    }

    pub fn is_identity(&self) -> bool {
        *self == PicardElement::identity(self.params)
    }

    pub fn is_numerically_trivial(&self) -> bool {
        self.sign == Sign::Plus && self.offset == Coordinate::int(0)
    }

    /// The coordinate map `x ↦ sign·x + offset`.
    pub fn map_coordinate(&self, x: Coordinate) -> Coordinate {
        x.scale(self.sign) + self.offset
    }

    pub fn preimage_coordinate(&self, y: Coordinate) -> Coordinate {
        (y - self.offset).scale(self.sign)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &PicardElement) -> Result<PicardElement> {
        if self.params != other.params {
            return Err(Error::CaseMismatch(format!(
                "cannot compose elements for {} and {}",
                self.params, other.params
            )));
        }
        let mut flips = self.flips.clone();
        for x in &other.flips {
            let y = self.map_coordinate(*x);
            if !flips.remove(&y) {
                flips.insert(y);
            }
        }
        Ok(PicardElement {
            params: self.params,
            sign: self.sign.times(other.sign),
            offset: other.offset.scale(self.sign) + self.offset,
            flips,
        })
    }

    pub fn inverse(&self) -> PicardElement {
        let offset = (-self.offset).scale(self.sign);
        PicardElement {
            params: self.params,
            sign: self.sign,
            offset,
            flips: self.flips.iter().map(|y| self.preimage_coordinate(*y)).collect(),
        }
    }

    pub fn power(&self, k: i64) -> PicardElement {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = PicardElement::identity(self.params);
        for _ in 0..k.unsigned_abs() {
            out = out.compose(&base).expect("same parameters");
        }
        out
    }

    pub fn act_on_simple(&self, s: &SimpleModule) -> Result<SimpleModule> {
        s.check(self.params)?;
        let y = self.map_coordinate(s.coordinate(self.params));
        let Some(label) = s.label() else {
            return Ok(SimpleModule::M(y));
        };
        let mut label = if self.sign == Sign::Minus { label.swapped() } else { label };
        if self.flips.contains(&y) {
            label = label.swapped();
        }
        SimpleModule::at(self.params, label, y)
    }

    /// `(k, half)` with the translation part equal to `S^k` followed by an
    /// optional half shift, after removing `ω` when the sign is negative.
    fn translation_part(&self) -> (i64, bool) {
        let t = match self.sign {
            Sign::Plus => self.offset,
            Sign::Minus => self.offset - Coordinate::omega_offset(self.params),
        };
        debug_assert_eq!(t.m_coeff(), 0);
        let r = t.rational();
        let k = r.floor().to_integer();
        (k, r - Rational64::from_integer(k) != Rational64::from_integer(0))
    }

    /// The normal-form word `ι_J * S^k * H * w`, with trivial parts left out.
    pub fn normal_form(&self) -> Vec<Generator> {
        let (k, half) = self.translation_part();
        let mut word = Vec::new();
        if !self.flips.is_empty() {
            word.push(Generator::Iota(self.flips.clone()));
        }
        if k != 0 {
            word.push(Generator::Shift(k));
        }
        if half {
            word.push(Generator::HalfShift);
        }
        if self.sign == Sign::Minus {
            word.push(Generator::Omega);
        }
        word
    }

    pub fn act_on_projective(&self, p: &StructureSequence) -> Result<StructureSequence> {
        self.params.check_same(&p.params())?;
        if !is_projective(p) {
            return Err(Error::NotProjective);
        }
        let mut out = p.clone();
        for token in self.normal_form().iter().rev() {
            out = match token {
                Generator::Shift(k) => out.shift(*k),
                Generator::Omega => omega_on_projective(&out)?,
                Generator::HalfShift => half_shift_on_projective(&out),
                Generator::Iota(j) => {
                    j.iter().try_fold(out, |acc, x| iota_on_projective(&acc, *x))?
                }
            };
        }
        Ok(out)
    }

    /// Moves a whole factor assignment by the simple action.
    pub fn act_on_factors(&self, fa: &FactorAssignment) -> Result<FactorAssignment> {
        let params = self.params;
        let (lo, hi) = fa.span();
        let mut indices: Vec<i64> = Vec::new();
        for family in [Family::Int, Family::M] {
            if family == Family::M && fa.m_window().is_none() {
                continue;
            }
            for j in [lo - 1, hi] {
                let y = self.map_coordinate(params.coordinate(LatticePoint { family, index: j }));
                indices.push(params.lattice_point(&y).expect("lattice preserved").index);
            }
        }
        for y in &self.flips {
            indices.push(params.lattice_point(y).expect("flip points on the lattice").index);
        }
        let new_lo = indices.iter().min().copied().unwrap_or(0) - 1;
        let new_hi = indices.iter().max().copied().unwrap_or(0) + 2;
        FactorAssignment::from_fn(params, new_lo, new_hi, |point| {
            let x = self.preimage_coordinate(params.coordinate(point));
            let source = fa.simple(params.lattice_point(&x).expect("lattice preserved"));
            self.act_on_simple(&source)
                .expect("valid simple")
                .label()
                .expect("lattice simples stay on the lattice")
        })
    }

    pub fn parse(
        params: GwaParams,
        text: &str,
        lookup: &dyn Fn(&str) -> Option<PicardElement>,
    ) -> std::result::Result<PicardElement, ExprError> {
        ExprParser { params, text, pos: 0, lookup }.expression()
    }
}

impl fmt::Display for PicardElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for token in self.normal_form() {
            match token {
                Generator::Iota(j) if self.params.is_noncongruent() => {
                    let mut by_family: BTreeMap<Family, Vec<String>> = BTreeMap::new();
                    for x in &j {
                        let point = self.params.lattice_point(x).expect("flip points on the lattice");
                        by_family.entry(point.family).or_default().push(point.index.to_string());
                    }
                    for (family, idx) in by_family {
                        let name = if family == Family::Int { "i0" } else { "im" };
                        parts.push(format!("{name}{{{}}}", idx.join(",")));
                    }
                }
                other => parts.push(other.to_string()),
            }
        }
        if parts.is_empty() {
            write!(f, "identity")
        } else {
            write!(f, "{}", parts.join(" * "))
        }
    }
}

/// Folds a generator word through composition; the leftmost token acts last.
pub fn classify(params: GwaParams, word: &[Generator]) -> Result<PicardElement> {
    word.iter().try_fold(PicardElement::identity(params), |acc, token| {
        acc.compose(&PicardElement::generator(params, token)?)
    })
}

fn omega_on_projective(p: &StructureSequence) -> Result<StructureSequence> {
    let omega = PicardElement::generator(p.params(), &Generator::Omega)?;
    from_factors(&omega.act_on_factors(&simple_factors(p)?)?)
}

fn half_shift_on_projective(p: &StructureSequence) -> StructureSequence {
    let k = p.params().half_floor().expect("half shift needs a half-integer m");
    let lo = (p.lo() + k + 1).min(p.lo() - k) - 1;
    let hi = (p.hi() + k + 1).max(p.hi() - k) + 1;
    let letters = (lo..hi)
        .map(|n| Letter::from_parts(p.letter(n - k - 1).has_zm(), p.letter(n + k).has_z()))
        .collect();
    StructureSequence::from_window(p.params(), lo, letters)
}

fn iota_on_projective(p: &StructureSequence, x: Coordinate) -> Result<StructureSequence> {
    let params = p.params();
    let point = params
        .lattice_point(&x)
        .ok_or_else(|| Error::InvalidGenerator(format!("flip point {x} is off the lattice")))?;
    let j = point.index;
    let c = |i| p.letter(i);
    let changes = match (params, point.family) {
        (GwaParams::Multiple, _) => match c(j) {
            Letter::One => vec![(j, Letter::F)],
            Letter::F => vec![(j, Letter::One)],
            _ => return Err(Error::NotProjective),
        },
        (GwaParams::Congruent(m), _) => {
            if surjects_onto(p, &SimpleModule::X(j))? {
                vec![(j - m, c(j - m).with_zm(true)), (j, c(j).with_z(true))]
            } else if surjects_onto(p, &SimpleModule::Y(j))? {
                vec![(j - m, c(j - m).with_zm(false)), (j, c(j).with_z(false))]
            } else {
                vec![]
            }
        }
        (_, Family::Int) => vec![(j, c(j).with_z(!c(j).has_z()))],
        (_, Family::M) => vec![(j, c(j).with_zm(!c(j).has_zm()))],
    };
    Ok(p.with_letters(&changes))
}

/// Indices `n` with `F_n(P) = Z<n>`; empty unless `m` is a positive integer.
pub fn orbit_invariant(p: &StructureSequence) -> Result<BTreeSet<i64>> {
    let fa = simple_factors(p)?;
    let (lo, hi) = fa.span();
    Ok((lo..hi).filter(|n| fa.label(LatticePoint::int(*n)) == Label::Zfin).collect())
}

/// An involution `ι_J` with `ι_J(P) = Q`, when one exists.
pub fn iota_solver(p: &StructureSequence, q: &StructureSequence) -> Result<Option<PicardElement>> {
    let params = p.params();
    params.check_same(&q.params())?;
    let fp = simple_factors(p)?;
    let fq = simple_factors(q)?;
    let lo = fp.span().0.min(fq.span().0);
    let hi = fp.span().1.max(fq.span().1);
    let mut flips = BTreeSet::new();
    for point in points_in(params, lo, hi) {
        let (a, b) = (fp.label(point), fq.label(point));
        if a == b {
            continue;
        }
        if a == Label::Zfin || b == Label::Zfin {
            return Ok(None);
        }
        flips.insert(params.coordinate(point));
    }
    Ok(Some(PicardElement::new(params, Sign::Plus, Coordinate::int(0), flips)?))
}

fn points_in(params: GwaParams, lo: i64, hi: i64) -> Vec<LatticePoint> {
    let mut out: Vec<LatticePoint> = (lo..hi).map(LatticePoint::int).collect();
    if params.is_noncongruent() {
        out.extend((lo..hi).map(LatticePoint::m));
    }
    out
}

/// Which Picard images of the base modules are allowed when testing coverage.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Closure {
    None,
    Iotas,
    Shifts,
    Both,
}

impl Closure {
    pub fn parse(text: &str) -> Option<Closure> {
        match text {
            "none" => Some(Closure::None),
            "iotas" => Some(Closure::Iotas),
            "shifts" => Some(Closure::Shifts),
            "both" => Some(Closure::Both),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Below,
    Above,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailVerdict {
    pub side: Side,
    pub family: Family,
    pub label: Label,
    pub covered: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverageReport {
    pub closure: Closure,
    pub window: (i64, i64),
    pub entries: Vec<(SimpleModule, bool)>,
    pub tails: Vec<TailVerdict>,
    /// An uncovered simple, if any: `Z` types first, then closest to the origin.
    pub witness: Option<SimpleModule>,
}

impl CoverageReport {
    pub fn generates(&self) -> bool {
        self.witness.is_none()
    }

    pub fn verdict(&self) -> String {
        match &self.witness {
            None => "GENERATES".to_string(),
            Some(s) => format!("NOT GENERATING: uncovered {s}"),
        }
    }
}

impl fmt::Display for CoverageReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.verdict())?;
        for (s, covered) in &self.entries {
            writeln!(f, "{s}: {}", if *covered { "covered" } else { "uncovered" })?;
        }
        for t in &self.tails {
            let side = if t.side == Side::Below { "-inf" } else { "+inf" };
            let family = if t.family == Family::Int { "" } else { " (m family)" };
            let state = if t.covered { "covered" } else { "uncovered" };
            writeln!(f, "{:?} at {side}{family}: {state}", t.label)?;
        }
        Ok(())
    }
}

/// Which simples are quotients of some module in the closure of `base`.
/// Beyond the factor windows of the base every family shows its tail labels,
/// so the verdict is exact.
pub fn coverage_report(
    base: &[StructureSequence],
    closure: Closure,
    window: (i64, i64),
) -> Result<CoverageReport> {
    let first = base.first().ok_or(Error::EmptyBase)?;
    let params = first.params();
    let mut fas = Vec::with_capacity(base.len());
    for p in base {
        params.check_same(&p.params())?;
        fas.push(simple_factors(p)?);
    }
    let any_z = fas.iter().any(|fa| {
        fa.points().into_iter().any(|pt| fa.label(pt) == Label::Zfin)
    });
    let covered = |point: LatticePoint, label: Label| -> bool {
        match (closure, label) {
            (Closure::None, _) => fas.iter().any(|fa| fa.label(point) == label),
            (Closure::Iotas, Label::Zfin) => fas.iter().any(|fa| fa.label(point) == Label::Zfin),
            (Closure::Iotas, _) => fas.iter().any(|fa| fa.label(point) != Label::Zfin),
            (Closure::Shifts | Closure::Both, Label::Zfin) => any_z,
            (Closure::Shifts | Closure::Both, _) => true,
        }
    };
    let labels: &[Label] = match params {
        GwaParams::Congruent(_) => &[Label::X, Label::Y, Label::Zfin],
        _ => &[Label::X, Label::Y],
    };
    let families: &[Family] =
        if params.is_noncongruent() { &[Family::Int, Family::M] } else { &[Family::Int] };

    let span_lo = fas.iter().map(|fa| fa.span().0).min().expect("nonempty base");
    let span_hi = fas.iter().map(|fa| fa.span().1).max().expect("nonempty base");

    let simple_at = |point: LatticePoint, label: Label| {
        SimpleModule::at(params, label, params.coordinate(point)).expect("lattice simple")
    };

    let mut entries = Vec::new();
    for j in window.0..window.1 {
        for family in families {
            for label in labels {
                let point = LatticePoint { family: *family, index: j };
                entries.push((simple_at(point, *label), covered(point, *label)));
            }
        }
    }

    let mut tails = Vec::new();
    for (side, j) in [(Side::Below, span_lo - 1), (Side::Above, span_hi)] {
        for family in families {
            for label in labels {
                let point = LatticePoint { family: *family, index: j };
                tails.push(TailVerdict { side, family: *family, label: *label, covered: covered(point, *label) });
            }
        }
    }

    let bound = [window.0, window.1, span_lo - 1, span_hi].iter().map(|x| x.abs()).max().unwrap_or(0) + 1;
    let mut candidates = Vec::new();
    for j in -bound..=bound {
        for family in families {
            for label in labels {
                candidates.push((*label != Label::Zfin, j.abs(), j, *family, *label));
            }
        }
    }
    candidates.sort();
    let witness = candidates.into_iter().find_map(|(_, _, j, family, label)| {
        let point = LatticePoint { family, index: j };
        (!covered(point, label)).then(|| simple_at(point, label))
    });

    Ok(CoverageReport { closure, window, entries, tails, witness })
}

/// A syntax error at a byte offset, or a domain error from a well-formed
/// expression.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExprError {
    Syntax { offset: usize, message: String },
    Domain(Error),
}

impl From<Error> for ExprError {
    fn from(e: Error) -> Self {
        ExprError::Domain(e)
    }
}

impl fmt::Display for ExprError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExprError::Syntax { offset, message } => write!(f, "at offset {offset}: {message}"),
            ExprError::Domain(e) => write!(f, "{e}"),
        }
    }
}

struct ExprParser<'a> {
    params: GwaParams,
    text: &'a str,
    pos: usize,
    lookup: &'a dyn Fn(&str) -> Option<PicardElement>,
}

type ExprResult<T> = std::result::Result<T, ExprError>;

impl ExprParser<'_> {
    fn error<T>(&self, message: impl Into<String>) -> ExprResult<T> {
        Err(ExprError::Syntax { offset: self.pos, message: message.into() })
    }

    fn skip_ws(&mut self) {
        while self.rest().starts_with(char::is_whitespace) {
            self.pos += self.rest().chars().next().map_or(0, char::len_utf8);
        }
    }

    fn rest(&self) -> &str {
        &self.text[self.pos..]
    }

    fn eat(&mut self, token: char) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len_utf8();
            true
        } else {
            false
        }
    }

    fn ident(&mut self) -> Option<&str> {
        self.skip_ws();
        let rest = self.rest();
        if !rest.starts_with(|c: char| c.is_ascii_alphabetic() || c == '_') {
            return None;
        }
        let len = rest.find(|c: char| !(c.is_ascii_alphanumeric() || c == '_')).unwrap_or(rest.len());
        let start = self.pos;
        self.pos += len;
        Some(&self.text[start..start + len])
    }

    fn integer(&mut self) -> ExprResult<i64> {
        self.skip_ws();
        let rest = self.rest();
        let sign_len = usize::from(rest.starts_with('-') || rest.starts_with('+'));
        let digits = rest[sign_len..].chars().take_while(char::is_ascii_digit).count();
        if digits == 0 {
            return self.error("expected an integer");
        }
        let value = rest[..sign_len + digits].parse().or_else(|_| self.error("integer out of range"))?;
        self.pos += sign_len + digits;
        Ok(value)
    }

    fn exponent(&mut self) -> ExprResult<i64> {
        if self.eat('^') {
            self.integer()
        } else {
            Ok(1)
        }
    }

    fn expression(mut self) -> ExprResult<PicardElement> {
        let mut acc = self.factor()?;
        while self.eat('*') {
            let next = self.factor()?;
            acc = acc.compose(&next)?;
        }
        self.skip_ws();
        if !self.rest().is_empty() {
            return self.error(format!("unexpected `{}`", self.rest()));
        }
        Ok(acc)
    }

    fn flip_set(&mut self, family: Option<Family>) -> ExprResult<BTreeSet<Coordinate>> {
        if !self.eat('{') {
            return self.error("expected `{`");
        }
        let close = match self.rest().find('}') {
            Some(i) => self.pos + i,
            None => return self.error("unclosed `{`"),
        };
        let body = &self.text[self.pos..close];
        let mut out = BTreeSet::new();
        let mut offset = self.pos;
        for item in body.split(',') {
            let start = offset;
            offset += item.len() + 1;
            if item.trim().is_empty() {
                if body.trim().is_empty() {
                    break;
                }
                self.pos = start;
                return self.error("empty flip point");
            }
            let point = match family {
                None => Coordinate::parse(self.params, item),
                Some(fam) => item
                    .trim()
                    .parse::<i64>()
                    .map(|index| self.params.coordinate(LatticePoint { family: fam, index }))
                    .map_err(|_| Error::Parse(format!("`{}` is not an integer", item.trim()))),
            };
            match point {
                Ok(x) => {
                    out.insert(x);
                }
                Err(e) => {
                    self.pos = start;
                    return self.error(e.to_string());
                }
            }
        }
        self.pos = close + 1;
        Ok(out)
    }

    fn factor(&mut self) -> ExprResult<PicardElement> {
        let start = self.pos;
        let Some(name) = self.ident().map(str::to_string) else {
            self.skip_ws();
            return self.error("expected a Picard generator or element name");
        };
        let params = self.params;
        let element = match name.as_str() {
            "identity" => PicardElement::identity(params),
            "S" => PicardElement::generator(params, &Generator::Shift(self.exponent()?))?,
            "w" => PicardElement::generator(params, &Generator::Omega)?.power(self.exponent()?),
            "H" => PicardElement::generator(params, &Generator::HalfShift)?.power(self.exponent()?),
            "i" | "i0" | "im" => {
                let family = match name.as_str() {
                    "i" => None,
                    _ if !params.is_noncongruent() => {
                        self.pos = start;
                        return self.error(format!("`{name}` needs a non-congruent m; use `i`"));
                    }
                    "i0" => Some(Family::Int),
                    _ => Some(Family::M),
                };
                let flips = self.flip_set(family)?;
                PicardElement::generator(params, &Generator::Iota(flips))?
            }
            other => match (self.lookup)(other) {
                Some(g) => g.power(self.exponent()?),
                None => {
                    self.pos = start;
                    self.skip_ws();
                    return self.error(format!("unknown element `{other}`"));
                }
            },
        };
        Ok(element)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::structure::RawSequence;
    use SimpleModule::*;

    const M0: GwaParams = GwaParams::Multiple;
    const C2: GwaParams = GwaParams::Congruent(2);
    const G: GwaParams = GwaParams::Generic;

    fn h(num: i64) -> GwaParams {
        GwaParams::HalfInteger(Rational64::new(num, 2))
    }

    fn iota(params: GwaParams, points: &[i64]) -> PicardElement {
        let j = points.iter().map(|x| Coordinate::int(*x)).collect();
        PicardElement::generator(params, &Generator::Iota(j)).unwrap()
    }

    fn gen(params: GwaParams, token: Generator) -> PicardElement {
        PicardElement::generator(params, &token).unwrap()
    }

    fn expr(params: GwaParams, text: &str) -> PicardElement {
        PicardElement::parse(params, text, &|_| None).unwrap()
    }

    #[test]
    fn generators() {
        let s1 = gen(C2, Generator::Shift(1));
        assert_eq!((s1.sign(), s1.offset()), (Sign::Plus, Coordinate::int(1)));
        let w = gen(M0, Generator::Omega);
        assert_eq!((w.sign(), w.offset()), (Sign::Minus, Coordinate::int(-1)));
        let half = gen(h(1), Generator::HalfShift);
        assert_eq!(half.offset().rational(), Rational64::new(1, 2));
        assert!(PicardElement::generator(C2, &Generator::HalfShift).is_err());
        let off = [Coordinate::parse(G, "1/2").unwrap()].into();
        assert!(PicardElement::generator(G, &Generator::Iota(off)).is_err());
    }

    #[test]
    fn relations() {
        let i0 = iota(C2, &[0]);
        assert!(i0.compose(&i0).unwrap().is_identity());
        let s = gen(C2, Generator::Shift(3));
        assert_eq!(s.compose(&iota(C2, &[1])).unwrap(), iota(C2, &[4]).compose(&s).unwrap());
        let w = gen(M0, Generator::Omega);
        assert_eq!(w.compose(&iota(M0, &[0])).unwrap().compose(&w).unwrap(), iota(M0, &[-1]));
        let word = [Generator::Shift(2), Generator::Omega, Generator::Shift(2)];
        assert_eq!(classify(M0, &word).unwrap(), gen(M0, Generator::Omega));
        let iotas = [0, 1, 0].map(|x| Generator::Iota([Coordinate::int(x)].into()));
        assert_eq!(classify(C2, &iotas).unwrap(), iota(C2, &[1]));
        assert!(classify(C2, &[]).unwrap().is_identity());
        let half = gen(h(3), Generator::HalfShift);
        assert_eq!(half.compose(&half).unwrap(), gen(h(3), Generator::Shift(1)));
    }

    #[test]
    fn simple_actions() {
        let i0 = iota(C2, &[0]);
        assert_eq!(i0.act_on_simple(&X(0)).unwrap(), Y(0));
        assert_eq!(i0.act_on_simple(&Zfin(0)).unwrap(), Zfin(0));
        let im = expr(G, "im{0}");
        assert_eq!(im.act_on_simple(&Xm(0)).unwrap(), Ym(0));
        assert_eq!(im.act_on_simple(&X0(0)).unwrap(), X0(0));
        let half = gen(h(1), Generator::HalfShift);
        assert_eq!(half.act_on_simple(&X0(5)).unwrap(), Xm(5));
        let w = gen(C2, Generator::Omega);
        assert_eq!(w.act_on_simple(&Zfin(0)).unwrap(), Zfin(1));
    }

    #[test]
    fn projective_actions() {
        let a = StructureSequence::free_module(M0, 0);
        let ia = iota(M0, &[0]).act_on_projective(&a).unwrap();
        assert_eq!(ia.letter(0), Letter::F);
        assert_eq!(crate::projectives::simple_factor(&ia, 0, Family::Int).unwrap(), Y(0));
        let a2 = StructureSequence::free_module(C2, 0);
        assert_eq!(iota(C2, &[0]).act_on_projective(&a2).unwrap(), a2);
        let x = iota(C2, &[3]).act_on_projective(&a2).unwrap();
        assert_eq!(iota(C2, &[3]).act_on_projective(&x).unwrap(), a2);
        let non = StructureSequence::validate(M0, &RawSequence::new([(0, Letter::Z)].into())).unwrap();
        assert!(matches!(iota(M0, &[0]).act_on_projective(&non), Err(Error::NotProjective)));
    }

    #[test]
    fn orbits() {
        let a = StructureSequence::free_module(C2, 0);
        assert_eq!(orbit_invariant(&a).unwrap(), [0, 1].into());
        assert_eq!(orbit_invariant(&iota(C2, &[0, 5]).act_on_projective(&a).unwrap()).unwrap(), [0, 1].into());
        assert!(orbit_invariant(&StructureSequence::free_module(M0, 3)).unwrap().is_empty());
        let p = StructureSequence::free_module(M0, 0);
        let q = StructureSequence::free_module(M0, 3);
        let j = iota_solver(&p, &q).unwrap().unwrap();
        assert_eq!(j.act_on_projective(&p).unwrap(), q);
    }

    #[test]
    fn coverage() {
        for m in 1..=3 {
            let params = GwaParams::Congruent(m);
            let a = StructureSequence::free_module(params, 0);
            let r = coverage_report(&[a], Closure::Iotas, (-5, 5)).unwrap();
            assert_eq!(r.verdict(), "NOT GENERATING: uncovered Z<-1>");
        }
        for params in [M0, G, h(1)] {
            let a = StructureSequence::free_module(params, 0);
            assert!(coverage_report(std::slice::from_ref(&a), Closure::Iotas, (-5, 5)).unwrap().generates());
        }
        let a = StructureSequence::free_module(C2, 0);
        assert!(coverage_report(&[a], Closure::Shifts, (-5, 5)).unwrap().generates());
        assert!(matches!(coverage_report(&[], Closure::Both, (0, 1)), Err(Error::EmptyBase)));
    }

    #[test]
    fn expressions() {
        assert_eq!(expr(C2, "i{0} * i{0}").to_string(), "identity");
        let g = expr(C2, "S^3 * w * i{0,2}");
        assert_eq!(g.to_string(), "i{2,4} * S^3 * w");
        assert_eq!(expr(C2, &g.to_string()), g);
        let half = expr(h(-1), "H * i0{2} * im{-1}");
        assert_eq!(expr(h(-1), &half.to_string()), half);
        assert_eq!(expr(h(1), "H^2"), expr(h(1), "S"));
        assert!(matches!(
            PicardElement::parse(C2, "S^ * w", &|_| None),
            Err(ExprError::Syntax { offset: 3, .. })
        ));
        assert!(matches!(PicardElement::parse(C2, "H", &|_| None), Err(ExprError::Domain(_))));
        let named = PicardElement::parse(C2, "g * g", &|n| (n == "g").then(|| iota(C2, &[4])));
        assert!(named.unwrap().is_identity());
    }
}
