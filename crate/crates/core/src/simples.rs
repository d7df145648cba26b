//! Graded simple modules: inventory per case, supports, Hilbert functions,
//! the degree-zero Ext table and the grading reversal.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::Rational64;

use crate::error::{Error, Result};
use crate::params::{Coordinate, Family, GwaParams, LatticePoint};

/// A graded simple module, named by its family and shift.
///
/// `X`, `Y` occur when `m` is an integer, `Zfin` only when `m > 0`, and the
/// four `X0`, `Y0`, `Xm`, `Ym` in the non-congruent cases. `M(λ)` is the
/// simple supported at `-λ` for `λ` off the lattice `Z ∪ (Z+m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SimpleModule {
    X(i64),
    Y(i64),
    Zfin(i64),
    X0(i64),
    Y0(i64),
    Xm(i64),
    Ym(i64),
    M(Coordinate),
}

/// Position-free type of a lattice simple, used to move simples around.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    X,
    Y,
    Zfin,
}

impl Label {
    pub fn swapped(self) -> Label {
        match self {
            Label::X => Label::Y,
            Label::Y => Label::X,
            Label::Zfin => Label::Zfin,
        }
    }
}

impl SimpleModule {
    pub fn check(&self, params: GwaParams) -> Result<()> {
        use SimpleModule::*;
        let ok = match self {
            X(_) | Y(_) => !params.is_noncongruent(),
            Zfin(_) => matches!(params, GwaParams::Congruent(_)),
            X0(_) | Y0(_) | Xm(_) | Ym(_) => params.is_noncongruent(),
            M(l) => !params.is_lattice(l) && (params == GwaParams::Generic || l.m_coeff() == 0),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidSimple { simple: self.to_string(), params })
        }
    }

    /// The shift index `n` for lattice simples.
    pub fn shift_index(&self) -> Option<i64> {
        use SimpleModule::*;
        match self {
            X(n) | Y(n) | Zfin(n) | X0(n) | Y0(n) | Xm(n) | Ym(n) => Some(*n),
            M(_) => None,
        }
    }

    pub fn label(&self) -> Option<Label> {
        use SimpleModule::*;
        match self {
            X(_) | X0(_) | Xm(_) => Some(Label::X),
            Y(_) | Y0(_) | Ym(_) => Some(Label::Y),
            Zfin(_) => Some(Label::Zfin),
            M(_) => None,
        }
    }

    pub fn lattice_point(&self) -> Option<LatticePoint> {
        use SimpleModule::*;
        match self {
            X(n) | Y(n) | Zfin(n) | X0(n) | Y0(n) => Some(LatticePoint::int(*n)),
            Xm(n) | Ym(n) => Some(LatticePoint::m(*n)),
            M(_) => None,
        }
    }

    /// The simple of type `label` sitting at coordinate `x`.
    pub fn at(params: GwaParams, label: Label, x: Coordinate) -> Result<SimpleModule> {
        let point = params.lattice_point(&x).ok_or_else(|| Error::InvalidSimple {
            simple: format!("{label:?} at {x}"),
            params,
        })?;
        let s = match (point.family, label, params.is_noncongruent()) {
            (Family::Int, Label::X, false) => SimpleModule::X(point.index),
            (Family::Int, Label::Y, false) => SimpleModule::Y(point.index),
            (Family::Int, Label::Zfin, _) => SimpleModule::Zfin(point.index),
            (Family::Int, Label::X, true) => SimpleModule::X0(point.index),
            (Family::Int, Label::Y, true) => SimpleModule::Y0(point.index),
            (Family::M, Label::X, _) => SimpleModule::Xm(point.index),
            (Family::M, Label::Y, _) => SimpleModule::Ym(point.index),
            (Family::M, Label::Zfin, _) => SimpleModule::Zfin(point.index),
        };
        s.check(params)?;
        Ok(s)
    }

    pub fn coordinate(&self, params: GwaParams) -> Coordinate {
        match (self.lattice_point(), self) {
            (Some(p), _) => params.coordinate(p),
            (None, SimpleModule::M(l)) => *l,
            (None, _) => unreachable!("only M lies off the lattice"),
        }
    }

    /// The point of the line where the simple is supported as a `k[z]`-module.
    pub fn support_point(&self, params: GwaParams) -> Coordinate {
        -self.coordinate(params)
    }

    /// `dim_k S_n`, either 0 or 1.
    pub fn component_dim(&self, params: GwaParams, n: i64) -> u32 {
        use SimpleModule::*;
        let gap = params.integer_gap().unwrap_or(0);
        let nonzero = match *self {
            X(k) => n <= k - gap,
            X0(k) | Xm(k) => n <= k,
            Y(k) | Y0(k) | Ym(k) => n > k,
            Zfin(k) => k - gap < n && n <= k,
            M(_) => true,
        };
        u32::from(nonzero)
    }

    /// `S<k>`, with `(S<k>)_j = S_{j-k}`.
    pub fn shift(&self, k: i64) -> SimpleModule {
        use SimpleModule::*;
        match *self {
            X(n) => X(n + k),
            Y(n) => Y(n + k),
            Zfin(n) => Zfin(n + k),
            X0(n) => X0(n + k),
            Y0(n) => Y0(n + k),
            Xm(n) => Xm(n + k),
            Ym(n) => Ym(n + k),
            M(l) => M(l + Coordinate::int(k)),
        }
    }

    /// Image under the grading reversal: coordinates go to `m - 1 - x` and
    /// the `X` and `Y` families trade places.
    pub fn omega(&self, params: GwaParams) -> SimpleModule {
        let x = Coordinate::omega_offset(params) - self.coordinate(params);
        match self.label() {
            None => SimpleModule::M(x),
            Some(label) => SimpleModule::at(params, label.swapped(), x)
                .expect("the reversal preserves the lattice"),
        }
    }

    pub fn parse(params: GwaParams, text: &str) -> Result<SimpleModule> {
        let t = text.trim();
        let bad = || Error::Parse(format!("bad simple module `{text}`"));
        let s = if let Some(inner) = t.strip_prefix("M(").and_then(|r| r.strip_suffix(')')) {
            SimpleModule::M(Coordinate::parse(params, inner)?)
        } else {
            let open = t.find('<').ok_or_else(bad)?;
            let inner = t[open + 1..].strip_suffix('>').ok_or_else(bad)?;
            let n: i64 = inner.trim().parse().map_err(|_| bad())?;
            match &t[..open] {
                "X" => SimpleModule::X(n),
                "Y" => SimpleModule::Y(n),
                "Z" => SimpleModule::Zfin(n),
                "X0" => SimpleModule::X0(n),
                "Y0" => SimpleModule::Y0(n),
                "Xm" => SimpleModule::Xm(n),
                "Ym" => SimpleModule::Ym(n),
                _ => return Err(bad()),
            }
        };
        s.check(params)?;
        Ok(s)
    }
}

impl fmt::Display for SimpleModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use SimpleModule::*;
        match self {
            X(n) => write!(f, "X<{n}>"),
            Y(n) => write!(f, "Y<{n}>"),
            Zfin(n) => write!(f, "Z<{n}>"),
            X0(n) => write!(f, "X0<{n}>"),
            Y0(n) => write!(f, "Y0<{n}>"),
            Xm(n) => write!(f, "Xm<{n}>"),
            Ym(n) => write!(f, "Ym<{n}>"),
            M(l) => write!(f, "M({l})"),
        }
    }
}

/// The simples supported at the lattice point `point`.
pub fn fiber(params: GwaParams, point: LatticePoint) -> Vec<SimpleModule> {
    let labels: &[Label] = match params {
        GwaParams::Congruent(_) => &[Label::X, Label::Y, Label::Zfin],
        _ => &[Label::X, Label::Y],
    };
    labels
        .iter()
        .filter_map(|l| SimpleModule::at(params, *l, params.coordinate(point)).ok())
        .collect()
}

fn base_ext(params: GwaParams, s: &SimpleModule, t: &SimpleModule) -> bool {
    use SimpleModule::*;
    match params {
        GwaParams::Multiple => matches!((s, t), (X(_) | Y(_), X(_) | Y(_))),
        GwaParams::Congruent(_) => matches!(
            (s, t),
            (X(_), Zfin(_)) | (Zfin(_), X(_)) | (Y(_), Zfin(_)) | (Zfin(_), Y(_))
        ),
        _ => matches!(
            (s, t),
            (X0(_), Y0(_)) | (Y0(_), X0(_)) | (Xm(_), Ym(_)) | (Ym(_), Xm(_))
        ),
    }
}

/// Graded dimension of `Ext^1(S, T)` as a map from degree to dimension.
pub fn ext1(params: GwaParams, s: &SimpleModule, t: &SimpleModule) -> Result<BTreeMap<i64, u32>> {
    s.check(params)?;
    t.check(params)?;
    let degree = match (s, t) {
        (SimpleModule::M(l), SimpleModule::M(u)) => (*u - *l).as_integer(),
        (SimpleModule::M(_), _) | (_, SimpleModule::M(_)) => None,
        _ if base_ext(params, s, t) => Some(t.shift_index().unwrap() - s.shift_index().unwrap()),
        _ => None,
    };
    Ok(degree.into_iter().map(|d| (d, 1)).collect())
}

/// A sample `M(λ)` with `λ` off the lattice, for tests and rendering.
pub fn generic_m(params: GwaParams, num: i64, den: i64) -> SimpleModule {
    SimpleModule::M(Coordinate::new(params, Rational64::new(num, den), 0))
}
