//! Oracles that recompute library answers from first principles. None of
//! them call the routine they check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use gwa_core::params::{Coordinate, Family, GwaParams, LatticePoint, Sign};
use gwa_core::picard::{Generator, PicardElement};
use gwa_core::poly::{RootMultiset, RootToken};
use gwa_core::simples::{Label, SimpleModule};
use gwa_core::structure::{Letter, StructureSequence};
use num_rational::Rational64;

pub fn labels(params: GwaParams) -> &'static [Label] {
    match params {
        GwaParams::Congruent(_) => &[Label::X, Label::Y, Label::Zfin],
        _ => &[Label::X, Label::Y],
    }
}

pub fn families(params: GwaParams) -> &'static [Family] {
    if params.is_noncongruent() {
        &[Family::Int, Family::M]
    } else {
        &[Family::Int]
    }
}

pub fn lattice_points(params: GwaParams, lo: i64, hi: i64) -> Vec<LatticePoint> {
    let mut out = Vec::new();
    for index in lo..hi {
        for family in families(params) {
            out.push(LatticePoint { family: *family, index });
        }
    }
    out
}

/// Every lattice simple over `lo..hi`.
pub fn lattice_simples(params: GwaParams, lo: i64, hi: i64) -> Vec<SimpleModule> {
    let mut out = Vec::new();
    for point in lattice_points(params, lo, hi) {
        for label in labels(params) {
            out.push(make_simple(params, point, *label));
        }
    }
    out
}

pub fn make_simple(params: GwaParams, point: LatticePoint, label: Label) -> SimpleModule {
    use SimpleModule::*;
    let n = point.index;
    match (params.is_noncongruent(), point.family, label) {
        (false, Family::Int, Label::X) => X(n),
        (false, Family::Int, Label::Y) => Y(n),
        (false, Family::Int, Label::Zfin) => Zfin(n),
        (true, Family::Int, Label::X) => X0(n),
        (true, Family::Int, Label::Y) => Y0(n),
        (true, Family::M, Label::X) => Xm(n),
        (true, Family::M, Label::Y) => Ym(n),
        other => panic!("no simple {other:?}"),
    }
}

/// Off-lattice probes `M(λ)`.
pub fn probe_simples(params: GwaParams) -> Vec<SimpleModule> {
    let mut out: Vec<SimpleModule> = [(1, 7), (2, 7), (-5, 11)]
        .iter()
        .map(|(a, b)| SimpleModule::M(Coordinate::new(params, Rational64::new(*a, *b), 0)))
        .collect();
    if params == GwaParams::Generic {
        out.push(SimpleModule::M(Coordinate::new(params, Rational64::new(3, 5), 1)));
    }
    out
}

/// `m - 1/2` as an integer.
fn half_k(params: GwaParams) -> i64 {
    match params {
        GwaParams::HalfInteger(q) => (q - Rational64::new(1, 2)).to_integer(),
        _ => panic!("no half shift when {params}"),
    }
}

fn swap(label: Label) -> Label {
    match label {
        Label::X => Label::Y,
        Label::Y => Label::X,
        Label::Zfin => Label::Zfin,
    }
}

fn parts(s: &SimpleModule) -> Option<(LatticePoint, Label)> {
    use SimpleModule::*;
    Some(match *s {
        X(n) | X0(n) => (LatticePoint::int(n), Label::X),
        Y(n) | Y0(n) => (LatticePoint::int(n), Label::Y),
        Zfin(n) => (LatticePoint::int(n), Label::Zfin),
        Xm(n) => (LatticePoint::m(n), Label::X),
        Ym(n) => (LatticePoint::m(n), Label::Y),
        M(_) => return None,
    })
}

/// The effect of one generator on one simple, from the generator's
/// definition alone.
pub fn generator_on_simple(params: GwaParams, g: &Generator, s: &SimpleModule) -> SimpleModule {
    let m = params.m_value();
    match (g, parts(s)) {
        (Generator::Shift(k), Some((p, l))) => make_simple(params, LatticePoint { index: p.index + k, ..p }, l),
        (Generator::Shift(k), None) => shift_m(s, Coordinate::int(*k)),
        (Generator::Omega, Some((p, l))) => {
            // x = n or n + m goes to m - 1 - x.
            let image = match (params, p.family) {
                (GwaParams::Multiple, _) => LatticePoint::int(-1 - p.index),
                (GwaParams::Congruent(m), _) => LatticePoint::int(m - 1 - p.index),
                (_, Family::Int) => LatticePoint::m(-1 - p.index),
                (_, Family::M) => LatticePoint::int(-1 - p.index),
            };
            make_simple(params, image, swap(l))
        }
        (Generator::Omega, None) => {
            let SimpleModule::M(l) = s else { unreachable!() };
            let mm = match m {
                Some(v) => Coordinate::new(params, v, 0),
                None => Coordinate::new(params, Rational64::from_integer(0), 1),
            };
            SimpleModule::M(mm - Coordinate::int(1) - *l)
        }
        (Generator::Iota(j), Some((p, l))) => {
            let hit = j.iter().any(|x| coordinate_of(params, p) == *x);
            make_simple(params, p, if hit { swap(l) } else { l })
        }
        (Generator::Iota(_), None) => *s,
        (Generator::HalfShift, Some((p, l))) => {
            let k = half_k(params);
            let image = match p.family {
                // n + 1/2 = (n - k) + m
                Family::Int => LatticePoint::m(p.index - k),
                // n + m + 1/2 = n + k + 1
                Family::M => LatticePoint::int(p.index + k + 1),
            };
            make_simple(params, image, l)
        }
        (Generator::HalfShift, None) => {
            shift_m(s, Coordinate::new(params, Rational64::new(1, 2), 0))
        }
    }
}

fn shift_m(s: &SimpleModule, by: Coordinate) -> SimpleModule {
    match s {
        SimpleModule::M(l) => SimpleModule::M(*l + by),
        _ => unreachable!(),
    }
}

/// The coordinate `n` or `n + m` of a lattice point.
pub fn coordinate_of(params: GwaParams, p: LatticePoint) -> Coordinate {
    match p.family {
        Family::Int => Coordinate::int(p.index),
        Family::M => match params.m_value() {
            Some(m) => Coordinate::new(params, m + Rational64::from_integer(p.index), 0),
            None => Coordinate::new(params, Rational64::from_integer(p.index), 1),
        },
    }
}

/// A word acts with its rightmost token first.
pub fn word_on_simple(params: GwaParams, word: &[Generator], s: &SimpleModule) -> SimpleModule {
    word.iter().rev().fold(*s, |acc, g| generator_on_simple(params, g, &acc))
}

fn m_coordinate(s: SimpleModule) -> Coordinate {
    match s {
        SimpleModule::M(l) => l,
        other => panic!("{other} is not an off-lattice probe"),
    }
}

/// `(a, c, J)` read off the action of `word` on simples: `a` and `c` from
/// two off-lattice probes, `J` from where lattice labels disagree with the
/// affine part.
pub fn classify_by_action(params: GwaParams, word: &[Generator], radius: i64) -> PicardElement {
    let probes = probe_simples(params);
    let (x0, x1) = (m_coordinate(probes[0]), m_coordinate(probes[1]));
    let y0 = m_coordinate(word_on_simple(params, word, &probes[0]));
    let y1 = m_coordinate(word_on_simple(params, word, &probes[1]));
    let sign = if y1 - y0 == x1 - x0 {
        Sign::Plus
    } else {
        assert_eq!(y1 - y0, x0 - x1, "probe images are not affine");
        Sign::Minus
    };
    let offset = y0 - x0.scale(sign);
    let mut flips = BTreeSet::new();
    for point in lattice_points(params, -radius, radius) {
        let s = make_simple(params, point, Label::X);
        let image = word_on_simple(params, word, &s);
        let (q, label) = parts(&image).expect("lattice simples stay on the lattice");
        let expected = if sign == Sign::Minus { Label::Y } else { Label::X };
        if label != expected {
            flips.insert(coordinate_of(params, q));
        }
    }
    PicardElement::new(params, sign, offset, flips).expect("affine part preserves the lattice")
}

/// The factor of a projective at a lattice point, read off the letters.
pub fn factor_from_letters(p: &StructureSequence, point: LatticePoint) -> Label {
    let params = p.params();
    let n = point.index;
    let c = |i| p.letter(i);
    match (params, point.family) {
        (GwaParams::Multiple, _) => match c(n) {
            Letter::One => Label::X,
            Letter::F => Label::Y,
            other => panic!("letter {other} at {n} is not projective"),
        },
        (GwaParams::Congruent(m), _) => {
            if !c(n - m).has_zm() {
                Label::X
            } else if c(n).has_z() {
                Label::Y
            } else {
                Label::Zfin
            }
        }
        (_, Family::Int) => if c(n).has_z() { Label::Y } else { Label::X },
        (_, Family::M) => if c(n).has_zm() { Label::Y } else { Label::X },
    }
}

/// Letter-level projectivity: no `z` letter when `m = 0`; in the congruent
/// case no `n` with `c_{n-m}` in `{1, z}` and `c_n` in `{z, f}`.
pub fn projective_by_clauses(p: &StructureSequence) -> bool {
    let (lo, hi) = (p.lo(), p.hi());
    match p.params() {
        GwaParams::Multiple => (lo..hi).all(|i| p.letter(i) != Letter::Z),
        GwaParams::Congruent(m) => (lo - m - 1..hi + m + 1).all(|n| {
            let first = matches!(p.letter(n - m), Letter::One | Letter::Z);
            let second = matches!(p.letter(n), Letter::Z | Letter::F);
            !(first && second)
        }),
        _ => true,
    }
}

fn letter_tokens(params: GwaParams, letter: Letter, i: i64) -> RootMultiset {
    let mut tokens = Vec::new();
    if letter.has_z() {
        tokens.push(RootToken::Int(i));
    }
    if letter.has_zm() {
        tokens.push(match params.integer_gap() {
            Some(m) => RootToken::Int(i + m),
            None => RootToken::Shift(i),
        });
    }
    RootMultiset::from_tokens(params, tokens)
}

/// `a_i = ∏_{j >= i} c_j` built from letters.
pub fn cumulative(p: &StructureSequence, i: i64) -> RootMultiset {
    let params = p.params();
    (i..p.hi().max(i)).fold(RootMultiset::one(params), |acc, j| {
        acc.multiply(&letter_tokens(params, p.letter(j), j)).unwrap()
    })
}

fn full_f(params: GwaParams, i: i64) -> RootMultiset {
    letter_tokens(params, Letter::F, i)
}

/// `a_i` for `i` in `lo..=hi`, built in one downward pass.
pub fn cumulatives(p: &StructureSequence, lo: i64, hi: i64) -> BTreeMap<i64, RootMultiset> {
    let params = p.params();
    let top = hi.max(p.hi());
    let mut acc = RootMultiset::one(params);
    let mut out = BTreeMap::new();
    for i in (lo..=top).rev() {
        if i < top {
            acc = acc.multiply(&letter_tokens(params, p.letter(i), i)).unwrap();
        }
        if i <= hi {
            out.insert(i, acc.clone());
        }
    }
    out
}

/// A `Z<n>` extension witness, built by multiplying the generators by
/// `(z+n)` outside the strip `(n-m, n]` and checking that every quotient of
/// consecutive generators is still a divisor of `σ^i(f)`.
pub fn extension_witness(p: &StructureSequence, n: i64) -> bool {
    let params = p.params();
    let GwaParams::Congruent(m) = params else { panic!("congruent case only") };
    let factor = RootMultiset::from_tokens(params, [RootToken::Int(n)]);
    let lo = p.lo().min(n - m) - 2;
    let hi = p.hi().max(n) + 2;
    let a = cumulatives(p, lo, hi);
    let b = |i: i64| {
        if n - m < i && i <= n {
            a[&i].clone()
        } else {
            a[&i].multiply(&factor).unwrap()
        }
    };
    (lo..hi).all(|i| {
        let (bi, bnext) = (b(i), b(i + 1));
        if !bnext.divides(&bi).unwrap() {
            return false;
        }
        let d = bi.exact_div(&bnext).unwrap();
        d.divides(&full_f(params, i)).unwrap()
    })
}

pub fn has_extension_witness(p: &StructureSequence) -> bool {
    let GwaParams::Congruent(m) = p.params() else { return false };
    (p.lo() - m - 2..p.hi() + m + 2).any(|n| extension_witness(p, n))
}

/// Smallest `θ` with `q_i | θ p_i` for every `i`, token by token.
pub fn theta_tokenwise(p: &StructureSequence, q: &StructureSequence) -> RootMultiset {
    let params = p.params();
    let lo = p.lo().min(q.lo()) - 1;
    let hi = p.hi().max(q.hi());
    let (ps, qs) = (cumulatives(p, lo, hi), cumulatives(q, lo, hi));
    let seen: BTreeSet<RootToken> = qs.values().flat_map(|qi| qi.tokens().map(|(t, _)| t)).collect();
    let mut tokens = Vec::new();
    for t in seen {
        let need = (lo..=hi)
            .map(|i| qs[&i].multiplicity(t).saturating_sub(ps[&i].multiplicity(t)))
            .max()
            .unwrap_or(0);
        tokens.extend(std::iter::repeat_n(t, need as usize));
    }
    RootMultiset::from_tokens(params, tokens)
}

/// The generators of `p` and `q` on their joint window plus a margin, for
/// testing candidate embeddings `q_i | θ p_i`.
pub struct EmbeddingTest {
    ps: BTreeMap<i64, RootMultiset>,
    qs: BTreeMap<i64, RootMultiset>,
}

impl EmbeddingTest {
    pub fn new(p: &StructureSequence, q: &StructureSequence) -> Self {
        let lo = p.lo().min(q.lo()) - 3;
        let hi = p.hi().max(q.hi()) + 3;
        EmbeddingTest { ps: cumulatives(p, lo, hi), qs: cumulatives(q, lo, hi) }
    }

    pub fn embeds(&self, theta: &RootMultiset) -> bool {
        self.ps.iter().zip(self.qs.values()).all(|((_, pi), qi)| {
            qi.divides(&theta.multiply(pi).unwrap()).unwrap()
        })
    }
}

/// Graded Ext table by hand: pairs with a degree-zero extension before
/// shifting.
pub fn ext_oracle(params: GwaParams, s: &SimpleModule, t: &SimpleModule) -> Option<i64> {
    use SimpleModule::*;
    if let (M(a), M(b)) = (s, t) {
        return (*b - *a).as_integer();
    }
    let base = match params {
        GwaParams::Multiple => matches!((s, t), (X(_) | Y(_), X(_) | Y(_))),
        GwaParams::Congruent(_) => matches!(
            (s, t),
            (X(_), Zfin(_)) | (Zfin(_), X(_)) | (Y(_), Zfin(_)) | (Zfin(_), Y(_))
        ),
        _ => matches!((s, t), (X0(_), Y0(_)) | (Y0(_), X0(_)) | (Xm(_), Ym(_)) | (Ym(_), Xm(_))),
    };
    let (a, b) = (parts(s)?.0.index, parts(t)?.0.index);
    base.then_some(b - a)
}
