//! Seeded randomized consistency checks, runnable from the command line.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::Result;
use crate::params::GwaParams;
use crate::picard::{classify, Generator, PicardElement};
use crate::projectives::{
    from_factors, is_projective, kernel_of_surjection, maximal_embedding, simple_factors,
    surjects_onto,
};
use crate::random::{
    random_assignment, random_projective, random_simple, random_word, standard_cases,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub params: GwaParams,
    pub failures: usize,
    pub samples: usize,
    pub first_failure: Option<String>,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

type Probe = fn(&mut StdRng, GwaParams) -> Result<Option<String>>;

fn involution(rng: &mut StdRng, params: GwaParams) -> Result<Option<String>> {
    let p = random_projective(rng, params, 20);
    let j = params.coordinate(crate::random::random_lattice_point(rng, params, 25));
    let iota = PicardElement::generator(params, &Generator::Iota([j].into()))?;
    let back = iota.act_on_projective(&iota.act_on_projective(&p)?)?;
    Ok((back != p).then(|| format!("i{{{j}}} twice moves {p}")))
}

fn factor_round_trip(rng: &mut StdRng, params: GwaParams) -> Result<Option<String>> {
    let fa = random_assignment(rng, params, 20);
    let p = from_factors(&fa)?;
    if !is_projective(&p) {
        return Ok(Some(format!("{p} is not projective")));
    }
    let back = simple_factors(&p)?;
    if back != fa {
        return Ok(Some(format!("factors of {p} differ from the assignment")));
    }
    Ok((from_factors(&back)? != p).then(|| format!("{p} does not rebuild")))
}

fn group_laws(rng: &mut StdRng, params: GwaParams) -> Result<Option<String>> {
    let g = classify(params, &random_word(rng, params, 12))?;
    let h = classify(params, &random_word(rng, params, 12))?;
    let k = classify(params, &random_word(rng, params, 12))?;
    if g.compose(&h)?.compose(&k)? != g.compose(&h.compose(&k)?)? {
        return Ok(Some(format!("associativity fails for {g}, {h}, {k}")));
    }
    Ok((!g.compose(&g.inverse())?.is_identity()).then(|| format!("{g} has a bad inverse")))
}

fn action_compatibility(rng: &mut StdRng, params: GwaParams) -> Result<Option<String>> {
    let g = classify(params, &random_word(rng, params, 6))?;
    let p = random_projective(rng, params, 12);
    let direct = simple_factors(&g.act_on_projective(&p)?)?;
    let via_factors = g.act_on_factors(&simple_factors(&p)?)?;
    Ok((direct != via_factors).then(|| format!("{g} on {p}")))
}

fn embeddings(rng: &mut StdRng, params: GwaParams) -> Result<Option<String>> {
    let p = random_projective(rng, params, 12);
    let theta = maximal_embedding(&p, &p)?;
    Ok((!theta.is_one()).then(|| format!("theta of {p} into itself is {theta}")))
}

fn kernels(rng: &mut StdRng, params: GwaParams) -> Result<Option<String>> {
    let p = random_projective(rng, params, 12);
    let s = random_simple(rng, params, 15);
    if !surjects_onto(&p, &s)? {
        return Ok(None);
    }
    let k = kernel_of_surjection(&p, &s)?;
    let h = k.quotient_hilbert(&p)?;
    let lo = h.lo().min(p.lo()) - 3;
    let hi = h.hi().max(p.hi()) + 3;
    let bad = (lo..hi).find(|n| h.at(*n) != s.component_dim(params, *n));
    Ok(bad.map(|n| format!("quotient of {p} by kernel onto {s} has wrong degree {n}")))
}

fn omega_involution(rng: &mut StdRng, params: GwaParams) -> Result<Option<String>> {
    let s = random_simple(rng, params, 30);
    Ok((s.omega(params).omega(params) != s).then(|| format!("omega twice moves {s}")))
}

fn exactly_one_factor(rng: &mut StdRng, params: GwaParams) -> Result<Option<String>> {
    let p = random_projective(rng, params, 12);
    let point = crate::random::random_lattice_point(rng, params, 20);
    let count = crate::simples::fiber(params, point)
        .iter()
        .map(|s| surjects_onto(&p, s))
        .collect::<Result<Vec<bool>>>()?
        .into_iter()
        .filter(|b| *b)
        .count();
    Ok((count != 1).then(|| format!("{p} has {count} factors at {point:?}")))
}

const PROBES: [(&str, Probe); 8] = [
    ("involutions square to the identity", involution),
    ("factors and constants determine each other", factor_round_trip),
    ("composition is associative with inverses", group_laws),
    ("actions on projectives move factors", action_compatibility),
    ("theta of a module into itself is 1", embeddings),
    ("kernel quotients match simple dimensions", kernels),
    ("omega is an involution on simples", omega_involution),
    ("one simple factor per lattice point", exactly_one_factor),
];

/// Runs every probe `samples` times in every standard case.
pub fn run(seed: u64, samples: usize) -> Vec<Check> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out = Vec::new();
    for params in standard_cases() {
        for (name, probe) in PROBES {
            let mut check = Check { name, params, failures: 0, samples, first_failure: None };
            for _ in 0..samples {
                let sub_seed = rng.gen();
                let verdict = probe(&mut StdRng::seed_from_u64(sub_seed), params)
                    .unwrap_or_else(|e| Some(format!("error: {e}")));
                if let Some(msg) = verdict {
                    check.failures += 1;
                    check.first_failure.get_or_insert(format!("{msg} (seed {sub_seed})"));
                }
            }
            out.push(check);
        }
    }
    out
}
