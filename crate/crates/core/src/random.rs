//! Random instances for property checks.

use std::collections::BTreeSet;

use num_rational::Rational64;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::params::{Coordinate, Family, GwaParams, LatticePoint};
use crate::picard::Generator;
use crate::projectives::{from_factors, FactorAssignment, LabelWindow};
use crate::simples::{Label, SimpleModule};
use crate::structure::{Letter, StructureSequence};

/// One representative of every case: `m = 0`, `m = 1, 2, 3`,
/// `m = 1/2, -1/2, 3/2` and generic `m`.
pub fn standard_cases() -> Vec<GwaParams> {
    vec![
        GwaParams::Multiple,
        GwaParams::Congruent(1),
        GwaParams::Congruent(2),
        GwaParams::Congruent(3),
        GwaParams::HalfInteger(Rational64::new(1, 2)),
        GwaParams::HalfInteger(Rational64::new(-1, 2)),
        GwaParams::HalfInteger(Rational64::new(3, 2)),
        GwaParams::Generic,
    ]
}

fn labels_for(params: GwaParams) -> &'static [Label] {
    match params {
        GwaParams::Congruent(_) => &[Label::X, Label::Y, Label::Zfin],
        _ => &[Label::X, Label::Y],
    }
}

fn label_window<R: Rng>(rng: &mut R, params: GwaParams, max_width: usize) -> LabelWindow {
    let width = rng.gen_range(0..=max_width);
    let lo = rng.gen_range(-10..=10);
    let labels = (0..width).map(|_| *labels_for(params).choose(rng).expect("nonempty")).collect();
    LabelWindow::new(lo, labels)
}

pub fn random_assignment<R: Rng>(rng: &mut R, params: GwaParams, max_width: usize) -> FactorAssignment {
    let int = label_window(rng, params, max_width);
    let m = params.is_noncongruent().then(|| label_window(rng, params, max_width));
    FactorAssignment::new(params, int, m).expect("labels drawn from the case inventory")
}

pub fn random_projective<R: Rng>(rng: &mut R, params: GwaParams, max_width: usize) -> StructureSequence {
    from_factors(&random_assignment(rng, params, max_width)).expect("every assignment is realizable")
}

/// Any letters at all, projective or not.
pub fn random_sequence<R: Rng>(rng: &mut R, params: GwaParams, max_width: usize) -> StructureSequence {
    let width = rng.gen_range(0..=max_width);
    let lo = rng.gen_range(-10..=10);
    let letters = (0..width).map(|_| *Letter::ALL.choose(rng).expect("nonempty")).collect();
    StructureSequence::from_window(params, lo, letters)
}

pub fn random_lattice_point<R: Rng>(rng: &mut R, params: GwaParams, radius: i64) -> LatticePoint {
    let index = rng.gen_range(-radius..=radius);
    if params.is_noncongruent() && rng.gen_bool(0.5) {
        LatticePoint { family: Family::M, index }
    } else {
        LatticePoint { family: Family::Int, index }
    }
}

pub fn random_flip_set<R: Rng>(rng: &mut R, params: GwaParams, radius: i64) -> BTreeSet<Coordinate> {
    let size = rng.gen_range(0..=3);
    (0..size).map(|_| params.coordinate(random_lattice_point(rng, params, radius))).collect()
}

/// A lattice simple, or occasionally some `M(λ)`.
pub fn random_simple<R: Rng>(rng: &mut R, params: GwaParams, radius: i64) -> SimpleModule {
    if rng.gen_bool(0.1) {
        let r = Rational64::new(rng.gen_range(-4 * radius..=4 * radius), 3)
            + Rational64::new(1, 7);
        let k = if params == GwaParams::Generic { rng.gen_range(-1..=2) } else { 0 };
        return SimpleModule::M(Coordinate::new(params, r, k));
    }
    let point = random_lattice_point(rng, params, radius);
    let label = *labels_for(params).choose(rng).expect("nonempty");
    SimpleModule::at(params, label, params.coordinate(point)).expect("valid lattice simple")
}

pub fn random_generator<R: Rng>(rng: &mut R, params: GwaParams) -> Generator {
    let half = matches!(params, GwaParams::HalfInteger(_));
    match rng.gen_range(0..if half { 4 } else { 3 }) {
        0 => Generator::Shift(rng.gen_range(-4..=4)),
        1 => Generator::Omega,
        2 => Generator::Iota(random_flip_set(rng, params, 8)),
        _ => Generator::HalfShift,
    }
}

pub fn random_word<R: Rng>(rng: &mut R, params: GwaParams, max_len: usize) -> Vec<Generator> {
    let len = rng.gen_range(0..=max_len);
    (0..len).map(|_| random_generator(rng, params)).collect()
}
