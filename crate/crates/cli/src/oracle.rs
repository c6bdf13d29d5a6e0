//! Exhaustive comparison of the engines with brute-force search, plus a
//! sweep over every idempotent pair.

use std::time::Instant;

use drazin_core::calculus::{sum_precondition, CalculusError, IdempotentPair, Involution};
use drazin_core::drazin::brute_force_drazin;
use drazin_core::{Domain, DrazinError, MatrixRing, ModularScalarRing, PrimeFieldElem};

use crate::report::{OracleReport, PairFailure, TheoremTally};
use crate::theorem::TheoremId;
use crate::verify::check_pair;
use crate::CliError;

pub const ORACLE_CAP: u128 = 100_000;

/// Theorems re-checked on every idempotent pair. The projector criteria
/// are absent: no enumerable context here is star-reducing with 6 a unit
/// and nontrivial projectors.
pub const SWEEP: [TheoremId; 14] = [
    TheoremId::L2_1,
    TheoremId::L2_2,
    TheoremId::L2_3,
    TheoremId::L2_4,
    TheoremId::T3_2,
    TheoremId::C3_3,
    TheoremId::T3_4,
    TheoremId::T3_5,
    TheoremId::T3_6,
    TheoremId::T3_7,
    TheoremId::T3_8,
    TheoremId::T3_10,
    TheoremId::T3_11,
    TheoremId::C3_12,
];

pub fn run_oracle(domain: Domain, n: usize) -> Result<OracleReport, CliError> {
    match domain {
        Domain::PrimeField(_) => {
            let ring = MatrixRing::<PrimeFieldElem>::new(domain, n).map_err(|e| CliError::Usage(e.to_string()))?;
            oracle(&ring, domain, n)
        }
        Domain::Modular(m) if n == 1 => {
            let ring = ModularScalarRing::new(m).map_err(|e| CliError::Usage(e.to_string()))?;
            oracle(&ring, domain, n)
        }
        _ => Err(CliError::Usage(format!(
            "oracle needs an enumerable ring: GF:<p> with any dimension or Zn:<n> with dimension 1, got {domain} dimension {n}"
        ))),
    }
}

fn oracle<R: Involution>(ring: &R, domain: Domain, n: usize) -> Result<OracleReport, CliError> {
    let start = Instant::now();
    let size = ring.size().unwrap_or(u128::MAX);
    if size > ORACLE_CAP {
        return Err(DrazinError::ContextTooLarge { size, cap: ORACLE_CAP }.into());
    }
    let elements: Vec<R::Elem> = (0..size).map(|i| ring.element(i)).collect();

    let mut mismatches = Vec::new();
    for a in &elements {
        let engine = ring.drazin(a);
        let oracle = brute_force_drazin(ring, a, ORACLE_CAP);
        if engine != oracle {
            mismatches.push(format!("{}: engine {:?}, oracle {:?}", ring.render(a), engine.map(|r| ring.render(&r.d)), oracle.map(|r| ring.render(&r.d))));
        }
    }

    let idempotents: Vec<&R::Elem> = elements.iter().filter(|e| ring.is_idempotent(e)).collect();
    let mut tallies: Vec<TheoremTally> =
        SWEEP.iter().map(|t| TheoremTally { theorem: t.to_string(), checked: 0, failed: 0 }).collect();
    let mut failures = Vec::new();
    let mut sum_pairs = 0;
    for p in &idempotents {
        for q in &idempotents {
            let pair = IdempotentPair::new(ring, (*p).clone(), (*q).clone()).map_err(|e| CliError::Internal(e.to_string()))?;
            let fail = |equation: String| PairFailure { p: ring.render(p), q: ring.render(q), equation };
            let sum_ok = match sum_precondition(&pair) {
                Ok(b) => b,
                Err(e) => {
                    failures.push(fail(format!("T3.10 precondition: {e}")));
                    continue;
                }
            };
            sum_pairs += u64::from(sum_ok);
            for (t, tally) in SWEEP.iter().zip(tallies.iter_mut()) {
                let outcome = check_pair(*t, &pair);
                let applicable = match (t, &outcome) {
                    (TheoremId::T3_10, _) => sum_ok,
                    (TheoremId::C3_12, Err(CalculusError::PreconditionViolated { .. })) => false,
                    _ => true,
                };
                if !applicable {
                    // the filter must reject exactly these pairs
                    if !matches!(outcome, Err(CalculusError::PreconditionViolated { .. })) {
                        tally.failed += 1;
                        failures.push(fail(format!("{t}: precondition filter admitted the pair")));
                    }
                    continue;
                }
                tally.checked += 1;
                if let Err(e) = outcome {
                    tally.failed += 1;
                    failures.push(fail(e.equation().map_or_else(|| format!("{t}: {e}"), str::to_string)));
                }
            }
        }
    }

    let pass = mismatches.is_empty() && failures.is_empty();
    Ok(OracleReport {
        domain: domain.to_string(),
        dimension: n,
        elements_compared: elements.len() as u64,
        mismatches,
        idempotents: idempotents.len() as u64,
        idempotent_pairs: (idempotents.len() * idempotents.len()) as u64,
        sum_precondition_pairs: sum_pairs,
        tallies,
        failures,
        pass,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}
