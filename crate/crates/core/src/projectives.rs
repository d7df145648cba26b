//! Rank-one graded projectives: the surjection criteria, simple factors,
//! reconstruction from factors, maximal embeddings and kernels.

use std::fmt;

use crate::error::{Error, Result};
use crate::params::{Coordinate, Family, GwaParams, LatticePoint};
use crate::poly::{RootMultiset, RootToken};
use crate::simples::{Label, SimpleModule};
use crate::structure::{Letter, StructureSequence};

/// Labels on one family of lattice points: `Y` below `lo`, `X` from `hi` on.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LabelWindow {
    lo: i64,
    labels: Vec<Label>,
}

impl LabelWindow {
    pub fn new(lo: i64, mut labels: Vec<Label>) -> Self {
        while labels.last() == Some(&Label::X) {
            labels.pop();
        }
        let lead = labels.iter().take_while(|l| **l == Label::Y).count();
        labels.drain(..lead);
        LabelWindow { lo: lo + lead as i64, labels }
    }

    /// All-tail labelling switching from `Y` to `X` at `n`.
    pub fn split_at(n: i64) -> Self {
        LabelWindow { lo: n, labels: Vec::new() }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.labels.len() as i64
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn get(&self, j: i64) -> Label {
        if j < self.lo {
            Label::Y
        } else if j >= self.hi() {
            Label::X
        } else {
            self.labels[(j - self.lo) as usize]
        }
    }
}

/// A choice of simple factor at every lattice point, as a candidate list of
/// factors of a rank-one projective. The `m` family is present exactly in the
/// non-congruent cases.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FactorAssignment {
    params: GwaParams,
    int: LabelWindow,
    m: Option<LabelWindow>,
}

impl FactorAssignment {
    pub fn new(params: GwaParams, int: LabelWindow, m: Option<LabelWindow>) -> Result<Self> {
        if m.is_some() != params.is_noncongruent() {
            return Err(Error::InconsistentAssignment(format!(
                "the m family is {} when {params}",
                if params.is_noncongruent() { "required" } else { "absent" }
            )));
        }
        let has_z = int.labels.iter().chain(m.iter().flat_map(|w| w.labels.iter()));
        if !matches!(params, GwaParams::Congruent(_)) && has_z.into_iter().any(|l| *l == Label::Zfin)
        {
            return Err(Error::InconsistentAssignment(format!("Z labels need m > 0 integral, not {params}")));
        }
        Ok(FactorAssignment { params, int, m })
    }

    /// Builds an assignment from labels on `lo..hi` in both families, with
    /// tails outside.
    pub fn from_fn(
        params: GwaParams,
        lo: i64,
        hi: i64,
        label: impl Fn(LatticePoint) -> Label,
    ) -> Result<Self> {
        let int = LabelWindow::new(lo, (lo..hi).map(|j| label(LatticePoint::int(j))).collect());
        let m = params
            .is_noncongruent()
            .then(|| LabelWindow::new(lo, (lo..hi).map(|j| label(LatticePoint::m(j))).collect()));
        FactorAssignment::new(params, int, m)
    }

    pub fn params(&self) -> GwaParams {
        self.params
    }

    pub fn int_window(&self) -> &LabelWindow {
        &self.int
    }

    pub fn m_window(&self) -> Option<&LabelWindow> {
        self.m.as_ref()
    }

    pub fn label(&self, point: LatticePoint) -> Label {
        match (point.family, &self.m) {
            (Family::Int, _) => self.int.get(point.index),
            (Family::M, Some(w)) => w.get(point.index),
            (Family::M, None) => panic!("no m family when {}", self.params),
        }
    }

    pub fn simple(&self, point: LatticePoint) -> SimpleModule {
        SimpleModule::at(self.params, self.label(point), self.params.coordinate(point))
            .expect("assignment labels are valid for their case")
    }

    /// Index range outside of which every family shows only tail labels.
    pub fn span(&self) -> (i64, i64) {
        let mut lo = self.int.lo;
        let mut hi = self.int.hi();
        if let Some(w) = &self.m {
            lo = lo.min(w.lo);
            hi = hi.max(w.hi());
        }
        (lo, hi)
    }

    /// Every lattice point inside `span`.
    pub fn points(&self) -> Vec<LatticePoint> {
        let (lo, hi) = self.span();
        let mut out: Vec<LatticePoint> = (lo..hi).map(LatticePoint::int).collect();
        if self.m.is_some() {
            out.extend((lo..hi).map(LatticePoint::m));
        }
        out
    }
}

impl fmt::Display for FactorAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut families = vec![(Family::Int, &self.int)];
        if let Some(w) = &self.m {
            families.push((Family::M, w));
        }
        for (family, w) in families {
            let point = |j| LatticePoint { family, index: j };
            if self.m.is_some() {
                let name = if family == Family::Int { "0" } else { "m" };
                writeln!(f, "family {name}:")?;
            }
            let kind = |j| {
                let s = self.simple(point(j)).to_string();
                s[..s.find('<').unwrap_or(s.len())].to_string()
            };
            writeln!(f, "  j < {}: {}<j>", w.lo, kind(w.lo - 1))?;
            for j in w.lo..w.hi() {
                writeln!(f, "  j = {j}: {}", self.simple(point(j)))?;
            }
            writeln!(f, "  j >= {}: {}<j>", w.hi(), kind(w.hi()))?;
        }
        Ok(())
    }
}

/// Whether `p` has the simple `s` as a quotient.
pub fn surjects_onto(p: &StructureSequence, s: &SimpleModule) -> Result<bool> {
    use Letter::*;
    use SimpleModule::*;
    let params = p.params();
    s.check(params)?;
    let gap = params.integer_gap().unwrap_or(0);
    let c = |i: i64| p.letter(i);
    let result = match (params, *s) {
        (_, M(_)) => true,
        (GwaParams::Multiple, X(n)) => matches!(c(n), One | Z),
        (GwaParams::Multiple, Y(n)) => matches!(c(n), Z | F),
        (GwaParams::Congruent(_), X(n)) => matches!(c(n - gap), One | Z),
        (GwaParams::Congruent(_), Y(n)) => matches!(c(n), Z | F),
        (GwaParams::Congruent(_), Zfin(n)) => {
            matches!(c(n - gap), Zm | F) && matches!(c(n), One | Zm)
        }
        (_, X0(n)) => matches!(c(n), One | Zm),
        (_, Xm(n)) => matches!(c(n), One | Z),
        (_, Y0(n)) => matches!(c(n), Z | F),
        (_, Ym(n)) => matches!(c(n), Zm | F),
        _ => unreachable!("checked against the case above"),
    };
    Ok(result)
}

pub fn is_projective(p: &StructureSequence) -> bool {
    use Letter::*;
    match p.params() {
        GwaParams::Congruent(m) => (p.lo()..p.hi() + m).all(|n| {
            !(matches!(p.letter(n - m), One | Z) && matches!(p.letter(n), Z | F))
        }),
        GwaParams::Multiple => p.window().iter().all(|l| *l != Z),
        _ => true,
    }
}

fn require_projective(p: &StructureSequence) -> Result<()> {
    if is_projective(p) {
        Ok(())
    } else {
        Err(Error::NotProjective)
    }
}

/// The unique simple quotient of the projective `p` at the lattice point
/// `(family, j)`.
pub fn simple_factor(p: &StructureSequence, j: i64, family: Family) -> Result<SimpleModule> {
    require_projective(p)?;
    let params = p.params();
    if family == Family::M && !params.is_noncongruent() {
        return Err(Error::CaseMismatch(format!("no m family of simples when {params}")));
    }
    let point = LatticePoint { family, index: j };
    let mut found = None;
    for s in crate::simples::fiber(params, point) {
        if surjects_onto(p, &s)? {
            assert!(found.is_none(), "projective {p} has two simple factors at {j}");
            found = Some(s);
        }
    }
    Ok(found.expect("a projective has a simple factor at every lattice point"))
}

pub fn simple_factors(p: &StructureSequence) -> Result<FactorAssignment> {
    require_projective(p)?;
    let params = p.params();
    let gap = params.integer_gap().unwrap_or(0);
    let (lo, hi) = (p.lo(), p.hi() + gap);
    FactorAssignment::from_fn(params, lo, hi, |point| {
        simple_factor(p, point.index, point.family)
            .expect("projectivity checked above")
            .label()
            .expect("lattice simples carry a label")
    })
}

/// The rank-one projective with the given simple factors.
pub fn from_factors(fa: &FactorAssignment) -> Result<StructureSequence> {
    let params = fa.params();
    let gap = params.integer_gap().unwrap_or(0);
    let (lo, hi) = fa.span();
    let (lo, hi) = (lo - gap - 1, hi + 1);
    let int = |j| fa.label(LatticePoint::int(j));
    let mut letters = Vec::with_capacity((hi - lo) as usize);
    for j in lo..hi {
        let letter = match params {
            GwaParams::Multiple => match int(j) {
                Label::X => Letter::One,
                Label::Y => Letter::F,
                Label::Zfin => {
                    return Err(Error::InconsistentAssignment(format!("Z<{j}> when m = 0")))
                }
            },
            GwaParams::Congruent(m) => Letter::from_parts(int(j) == Label::Y, int(j + m) != Label::X),
            _ => Letter::from_parts(int(j) == Label::Y, fa.label(LatticePoint::m(j)) == Label::Y),
        };
        letters.push(letter);
    }
    Ok(StructureSequence::from_window(params, lo, letters))
}

/// `p_i = ∏_{j >= i} c_j` for `i` in `lo..=hi`.
pub fn components(p: &StructureSequence, lo: i64, hi: i64) -> Vec<RootMultiset> {
    let params = p.params();
    let top = hi.max(p.hi());
    let mut acc = RootMultiset::one(params);
    let mut out = Vec::with_capacity((hi - lo + 1).max(0) as usize);
    for i in (lo..=top).rev() {
        if i < top {
            acc = acc.multiply(&p.letter_polynomial(i)).expect("same parameters");
        }
        if i <= hi {
            out.push(acc.clone());
        }
    }
    out.reverse();
    out
}

pub fn canonical_component(p: &StructureSequence, i: i64) -> RootMultiset {
    components(p, i, i).pop().expect("one index requested")
}

/// The canonical representation on `lo - 1 ..= hi`; below it each step
/// multiplies by `σ^i(f)`, above it every component is `1`.
pub fn canonical_rep(p: &StructureSequence) -> std::collections::BTreeMap<i64, RootMultiset> {
    let lo = p.lo() - 1;
    (lo..).zip(components(p, lo, p.hi())).collect()
}

/// The generator `θ` of `Hom(P, Q)`: the least monic polynomial with
/// `q_i | θ p_i` for every `i`.
pub fn maximal_embedding(p: &StructureSequence, q: &StructureSequence) -> Result<RootMultiset> {
    p.params().check_same(&q.params())?;
    let lo = p.lo().min(q.lo());
    let hi = p.hi().max(q.hi());
    let ps = components(p, lo, hi);
    let qs = components(q, lo, hi);
    let mut theta = RootMultiset::one(p.params());
    for (pi, qi) in ps.iter().zip(&qs) {
        theta = theta.lcm(&qi.saturating_div(pi)?)?;
    }
    if !matches!(p.params(), GwaParams::Congruent(_)) {
        let single = qs[0].saturating_div(&ps[0])?;
        assert_eq!(single, theta, "single-index embedding formula disagrees for {p} -> {q}");
    }
    Ok(theta)
}

/// Degree-wise dimensions of a graded module that are constant outside a
/// finite window.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    lo: i64,
    dims: Vec<u32>,
    below: u32,
    above: u32,
}

impl HilbertSeries {
    pub fn new(lo: i64, mut dims: Vec<u32>, below: u32, above: u32) -> Self {
        while dims.last() == Some(&above) {
            dims.pop();
        }
        let lead = dims.iter().take_while(|d| **d == below).count();
        dims.drain(..lead);
        HilbertSeries { lo: lo + lead as i64, dims, below, above }
    }

    pub fn from_fn(lo: i64, hi: i64, f: impl Fn(i64) -> u32) -> Self {
        HilbertSeries::new(lo, (lo..hi).map(&f).collect(), f(lo - 1), f(hi))
    }

    pub fn at(&self, i: i64) -> u32 {
        if i < self.lo {
            self.below
        } else if i >= self.lo + self.dims.len() as i64 {
            self.above
        } else {
            self.dims[(i - self.lo) as usize]
        }
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    pub fn hi(&self) -> i64 {
        self.lo + self.dims.len() as i64
    }

    pub fn below(&self) -> u32 {
        self.below
    }

    pub fn above(&self) -> u32 {
        self.above
    }

    pub fn is_zero(&self) -> bool {
        self.below == 0 && self.above == 0 && self.dims.iter().all(|d| *d == 0)
    }

    fn add_constant(&self, k: u32) -> HilbertSeries {
        HilbertSeries::new(
            self.lo,
            self.dims.iter().map(|d| d + k).collect(),
            self.below + k,
            self.above + k,
        )
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "degrees < {}: {}", self.lo, self.below)?;
        for (i, d) in (self.lo..).zip(&self.dims) {
            writeln!(f, "degree {i}: {d}")?;
        }
        writeln!(f, "degrees >= {}: {}", self.hi(), self.above)
    }
}

/// Hilbert function of `Q / φP` for the map given by multiplication by `phi`.
pub fn embedding_cokernel(
    p: &StructureSequence,
    q: &StructureSequence,
    phi: &RootMultiset,
) -> Result<HilbertSeries> {
    p.params().check_same(&q.params())?;
    let lo = p.lo().min(q.lo()) - 1;
    let hi = p.hi().max(q.hi());
    let ps = components(p, lo, hi);
    let qs = components(q, lo, hi);
    let mut dims = Vec::with_capacity(ps.len());
    for ((i, pi), qi) in (lo..).zip(&ps).zip(&qs) {
        let image = phi.multiply(pi)?;
        if !qi.divides(&image)? {
            return Err(Error::NotAHomomorphism(format!(
                "{phi} does not map {p} into {q} in degree {i}"
            )));
        }
        dims.push(image.degree() - qi.degree());
    }
    let below = dims[0];
    let above = *dims.last().expect("nonempty range");
    Ok(HilbertSeries::new(lo, dims, below, above))
}

/// Hilbert function of the cokernel of the maximal embedding `P -> Q`.
pub fn cokernel_hilbert(p: &StructureSequence, q: &StructureSequence) -> Result<HilbertSeries> {
    embedding_cokernel(p, q, &maximal_embedding(p, q)?)
}

/// Kernel of the surjection `P -> S`. For `M(λ)` the kernel is `(z+λ)P`,
/// isomorphic to `P` with the extra factor recorded in `twist`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub module: StructureSequence,
    pub twist: Option<Coordinate>,
}

impl Kernel {
    /// Hilbert function of `P / kernel` for the inclusion into `p`.
    pub fn quotient_hilbert(&self, p: &StructureSequence) -> Result<HilbertSeries> {
        let base = cokernel_hilbert(&self.module, p)?;
        Ok(match self.twist {
            Some(_) => base.add_constant(1),
            None => base,
        })
    }
}

pub fn kernel_of_surjection(p: &StructureSequence, s: &SimpleModule) -> Result<Kernel> {
    let params = p.params();
    if !surjects_onto(p, s)? {
        return Err(Error::NoSurjection(s.to_string()));
    }
    let n = match s {
        SimpleModule::M(l) => return Ok(Kernel { module: p.clone(), twist: Some(*l) }),
        other => other.shift_index().expect("lattice simple"),
    };
    let token = match s {
        SimpleModule::Xm(_) | SimpleModule::Ym(_) => RootToken::Shift(n),
        _ => RootToken::Int(n),
    };
    let factor = RootMultiset::token(params, token);
    let gap = params.integer_gap().unwrap_or(0);
    let lo = p.lo().min(n - gap) - 2;
    let hi = p.hi().max(n) + 2;
    let a = components(p, lo, hi + 1);
    let b: Vec<RootMultiset> = (lo..)
        .zip(&a)
        .map(|(i, ai)| {
            if s.component_dim(params, i) == 1 {
                ai.multiply(&factor)
            } else {
                Ok(ai.clone())
            }
        })
        .collect::<Result<_>>()?;
    let mut letters = Vec::with_capacity(b.len());
    for (i, pair) in (lo..).zip(b.windows(2)) {
        let d = pair[0].exact_div(&pair[1])?;
        let letter = Letter::from_polynomial(&d, i)
            .ok_or_else(|| Error::Unrepresentable(format!("kernel constant {d} at index {i}")))?;
        letters.push(letter);
    }
    Ok(Kernel { module: StructureSequence::from_window(params, lo, letters), twist: None })
}
