//! Seeded identity campaigns.

use std::time::Instant;

use drazin_core::calculus::{
    cline, derived_from_complement, derived_from_difference, difference_from_products, difference_via_corner, fgh,
    fgh_commutation, fgh_swap_relations, invertible_case, jacobson, product_identities, projector_criteria,
    sigma_census, sum_via_difference, CalculusError, IdempotentPair, Involution,
};
use drazin_core::generators::{special_pair, trial_seed, GenError, GenSpec, PairKind};
use drazin_core::{Domain, Matrix, MatrixRing, PrimeFieldElem, Rational, Scalar};
use rand::Rng;
use rayon::prelude::*;

use crate::report::{Campaign, Rows, Skipped, TrialFailure, VerifyReport};
use crate::theorem::TheoremId;
use crate::CliError;

pub const DEFAULT_DOMAINS: [Domain; 5] = [
    Domain::PrimeField(2),
    Domain::PrimeField(3),
    Domain::PrimeField(7),
    Domain::PrimeField(13),
    Domain::Rationals,
];
pub const DEFAULT_DIMS: [usize; 5] = [1, 2, 3, 4, 5];
pub const DEFAULT_TRIALS: u64 = 500;
pub const MAX_DIM: usize = 8;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyPlan {
    pub theorems: Vec<TheoremId>,
    pub domains: Vec<Domain>,
    pub dims: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
}

impl VerifyPlan {
    /// Rejects combinations that cannot run at all.
    pub fn validate(&self) -> Result<(), CliError> {
        if let Some(d) = self.domains.iter().find(|d| !d.is_field()) {
            return Err(CliError::Usage(format!("verify requires a field domain (Q or GF:<p>), got {d}")));
        }
        if let Some(&n) = self.dims.iter().find(|&&n| n == 0 || n > MAX_DIM) {
            return Err(CliError::Usage(format!("dimension {n} outside 1..={MAX_DIM}")));
        }
        if let [t] = self.theorems.as_slice() {
            if t.requires_rationals() && self.domains.iter().all(|d| *d != Domain::Rationals) {
                return Err(CliError::Usage(format!("{t} requires rationals")));
            }
        }
        Ok(())
    }
}

pub fn run_campaign(plan: &VerifyPlan) -> Result<Campaign, CliError> {
    plan.validate()?;
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    for &domain in &plan.domains {
        for &t in &plan.theorems {
            if t.requires_rationals() && domain != Domain::Rationals {
                skipped.push(Skipped {
                    theorem: t.to_string(),
                    domain: domain.to_string(),
                    reason: "requires rationals".into(),
                });
                continue;
            }
            for &n in &plan.dims {
                entries.push(run_entry(t, domain, n, plan.trials, plan.seed));
            }
        }
    }
    let pass = entries.iter().all(|e| e.pass);
    Ok(Campaign { pass, entries, skipped })
}

/// One theorem over one `M_n(domain)`.
pub fn run_entry(theorem: TheoremId, domain: Domain, n: usize, trials: u64, seed: u64) -> VerifyReport {
    let start = Instant::now();
    let failures = match domain {
        Domain::Rationals => failures::<Rational>(theorem, domain, n, trials, seed),
        _ => failures::<PrimeFieldElem>(theorem, domain, n, trials, seed),
    };
    VerifyReport {
        theorem: theorem.to_string(),
        domain: domain.to_string(),
        dimension: n,
        trials,
        pass: failures.is_empty(),
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn failures<T: Scalar>(theorem: TheoremId, domain: Domain, n: usize, trials: u64, seed: u64) -> Vec<TrialFailure> {
    let ring = MatrixRing::<T>::new(domain, n).expect("validated field domain");
    (0..trials).into_par_iter().filter_map(|i| run_trial(theorem, &ring, seed, i).err()).collect()
}

pub fn rows<T: Scalar>(m: &Matrix<T>) -> Rows {
    m.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

/// Generator spec of trial `i`: seed `mix(seed, i)` and a rank derived
/// from it.
pub fn trial_spec(domain: Domain, n: usize, seed: u64, i: u64) -> GenSpec {
    let ts = trial_seed(seed, i);
    GenSpec::new(domain, n, (ts % (n as u64 + 1)) as usize, ts).expect("rank within dimension")
}

/// Pair kind used by `theorem` on trial `i`.
pub fn pair_kind(theorem: TheoremId, i: u64) -> PairKind {
    match theorem {
        TheoremId::T3_7 if i % 2 == 0 => PairKind::Commuting,
        TheoremId::T3_7 => PairKind::Unrestricted,
        TheoremId::T3_9 => match i % 4 {
            0 => PairKind::AnnihilatingProjectors,
            2 => PairKind::CommutingProjectors,
            _ => PairKind::UnrestrictedProjectors,
        },
        TheoremId::T3_10 => PairKind::NilpotentCondition,
        TheoremId::C3_12 => PairKind::DifferenceInvertible,
        _ => [PairKind::Unrestricted, PairKind::NilpotentCondition, PairKind::Commuting][(i % 3) as usize],
    }
}

/// Arbitrary elements for the two-element lemmas; odd trials zero out
/// about half the entries so that singular elements are common.
pub fn random_elements<T: Scalar>(spec: &GenSpec, i: u64) -> (Matrix<T>, Matrix<T>) {
    let mut rng = spec.rng();
    let (d, n) = (spec.domain, spec.n);
    let sparse = i % 2 == 1;
    let mut draw = || {
        let entries = (0..n * n)
            .map(|_| {
                if sparse && rng.gen_bool(0.5) {
                    T::zero_in(&d)
                } else {
                    T::sample_in(&mut rng, &d, spec.bound)
                }
            })
            .collect();
        Matrix::new(d, n, n, entries).expect("n*n entries")
    };
    let a = draw();
    let b = draw();
    (a, b)
}

/// Inputs of trial `i`: an idempotent pair, or arbitrary `(a, b)` for the
/// two-element lemmas.
pub fn trial_inputs<T: Scalar>(theorem: TheoremId, spec: &GenSpec, i: u64) -> Result<(Matrix<T>, Matrix<T>), GenError> {
    match theorem {
        TheoremId::L2_3 | TheoremId::L2_4 => Ok(random_elements(spec, i)),
        _ => special_pair(pair_kind(theorem, i), spec),
    }
}

fn run_trial<T: Scalar>(theorem: TheoremId, ring: &MatrixRing<T>, seed: u64, i: u64) -> Result<(), TrialFailure> {
    let spec = trial_spec(ring.domain(), ring.dim(), seed, i);
    let fail = |p: Rows, q: Rows, equation: String| TrialFailure { seed: spec.seed, trial_index: i, p, q, equation };
    let (p, q) = trial_inputs::<T>(theorem, &spec, i).map_err(|e| fail(vec![], vec![], format!("generator: {e}")))?;
    check(theorem, ring, &p, &q).map_err(|e| {
        let equation = e.equation().map_or_else(|| format!("{theorem}: {e}"), str::to_string);
        fail(rows(&p), rows(&q), equation)
    })
}

/// Runs every check belonging to `theorem` on one input.
pub fn check<T: Scalar>(theorem: TheoremId, ring: &MatrixRing<T>, p: &Matrix<T>, q: &Matrix<T>) -> Result<(), CalculusError> {
    match theorem {
        TheoremId::L2_3 => {
            cline(ring, p, q)?;
            cline(ring, q, p).map(drop)
        }
        TheoremId::L2_4 => {
            jacobson(ring, p, q)?;
            jacobson(ring, q, p).map(drop)
        }
        _ => check_pair(theorem, &IdempotentPair::new(ring, p.clone(), q.clone())?),
    }
}

/// Pair-based checks, valid in any ring context with an involution.
pub fn check_pair<R: Involution>(theorem: TheoremId, pair: &IdempotentPair<'_, R>) -> Result<(), CalculusError> {
    match theorem {
        TheoremId::L2_1 | TheoremId::L2_2 => sigma_census(pair).map(drop),
        TheoremId::L2_3 => cline(pair.ring(), pair.p().value(), pair.q().value()).map(drop),
        TheoremId::L2_4 => jacobson(pair.ring(), pair.p().value(), pair.q().value()).map(drop),
        TheoremId::T3_2 => fgh(pair).map(drop),
        TheoremId::C3_3 => fgh_swap_relations(pair),
        TheoremId::T3_4 => fgh_commutation(pair),
        TheoremId::T3_5 => derived_from_difference(pair).map(drop),
        TheoremId::T3_6 => derived_from_complement(pair).map(drop),
        TheoremId::T3_7 => product_identities(pair).map(drop),
        TheoremId::T3_8 => difference_from_products(pair).map(drop),
        TheoremId::T3_9 => projector_criteria(pair).map(drop),
        TheoremId::T3_10 => sum_via_difference(pair).map(drop),
        TheoremId::T3_11 => difference_via_corner(pair).map(drop),
        TheoremId::C3_12 => invertible_case(pair).map(drop),
    }
}
