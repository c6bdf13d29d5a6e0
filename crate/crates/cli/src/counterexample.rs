//! The two counterexamples showing that the sum formula needs its
//! nilpotency hypothesis, checked against fixed expected values.

use drazin_core::calculus::{sum_precondition, sum_via_difference, CalculusError, IdempotentPair};
use drazin_core::drazin::{brute_force_drazin, integer_drazin};
use drazin_core::{Domain, DrazinError, Integer, Matrix, MatrixRing, PrimeFieldElem, RingContext};

use crate::report::{CaseReport, Check, CounterexampleReport, NamedValue, Rows};
use crate::verify::rows;
use crate::CliError;

const GF7: Domain = Domain::PrimeField(7);

fn gf7(rows: &[[i64; 2]; 2]) -> Matrix<PrimeFieldElem> {
    Matrix::from_ints(GF7, rows)
}

fn scalar(v: &Integer) -> Rows {
    vec![vec![v.to_string()]]
}

struct Case {
    values: Vec<NamedValue>,
    checks: Vec<Check>,
}

impl Case {
    fn new() -> Self {
        Case { values: Vec::new(), checks: Vec::new() }
    }

    fn value(&mut self, name: &str, value: Rows) {
        self.values.push(NamedValue { name: name.into(), value });
    }

    fn check(&mut self, claim: &str, expected: impl ToString, observed: impl ToString) {
        let (expected, observed) = (expected.to_string(), observed.to_string());
        let matches = expected == observed;
        self.checks.push(Check { claim: claim.into(), expected, observed, matches });
    }

    fn finish(self, case: &str, domain: Domain) -> CaseReport {
        let pass = self.checks.iter().all(|c| c.matches);
        CaseReport { case: case.into(), domain: domain.to_string(), values: self.values, checks: self.checks, pass }
    }
}

/// `M_2(Z_7)`, `p = I`, `q = diag(1,0)`: both `p+q` and `p-q` are Drazin
/// invertible but `(p+q)(p-q)^pi = diag(2,0)` is not nilpotent.
fn matrix_case() -> Result<CaseReport, CliError> {
    let ring = MatrixRing::<PrimeFieldElem>::new(GF7, 2)?;
    let p = gf7(&[[1, 0], [0, 1]]);
    let q = gf7(&[[1, 0], [0, 0]]);
    let sum = &p + &q;
    let diff = &p - &q;
    let mut c = Case::new();
    c.value("p", rows(&p));
    c.value("q", rows(&q));
    c.value("p+q", rows(&sum));
    c.value("p-q", rows(&diff));
    c.check("p+q", gf7(&[[2, 0], [0, 1]]).to_text(), sum.to_text());
    c.check("p-q", gf7(&[[0, 0], [0, 1]]).to_text(), diff.to_text());

    let sum_d = ring.drazin(&sum)?;
    let diff_d = ring.drazin(&diff)?;
    c.value("(p+q)^D", rows(&sum_d.d));
    c.value("(p-q)^D", rows(&diff_d.d));
    c.value("(p-q)^pi", rows(&diff_d.pi));
    c.check("(p+q)^D", gf7(&[[4, 0], [0, 1]]).to_text(), sum_d.d.to_text());
    c.check("(p-q)^D", gf7(&[[0, 0], [0, 1]]).to_text(), diff_d.d.to_text());
    c.check("(p-q)^pi", gf7(&[[1, 0], [0, 0]]).to_text(), diff_d.pi.to_text());
    c.check("(p+q)^D agrees with brute force", true, brute_force_drazin(&ring, &sum, 10_000)? == sum_d);
    c.check("(p-q)^D agrees with brute force", true, brute_force_drazin(&ring, &diff, 10_000)? == diff_d);

    let w = &sum * &diff_d.pi;
    c.value("(p+q)(p-q)^pi", rows(&w));
    c.check("(p+q)(p-q)^pi", gf7(&[[2, 0], [0, 0]]).to_text(), w.to_text());
    let mut power = w.clone();
    let mut all_nonzero = true;
    for m in 1..=6 {
        all_nonzero &= !power.is_zero();
        if m == 6 {
            c.value("((p+q)(p-q)^pi)^6", rows(&power));
            c.check("((p+q)(p-q)^pi)^6", gf7(&[[1, 0], [0, 0]]).to_text(), power.to_text());
        }
        power = &power * &w;
    }
    c.check("((p+q)(p-q)^pi)^m nonzero for m = 1..6", true, all_nonzero);

    let pair = IdempotentPair::new(&ring, p, q)?;
    c.check("(p+q)(p-q)^pi nilpotent", false, sum_precondition(&pair)?);
    let refused = matches!(sum_via_difference(&pair), Err(CalculusError::PreconditionViolated { .. }));
    c.check("sum formula refuses the pair", true, refused);
    Ok(c.finish("Z7-matrix", GF7))
}

/// `Z`, `p = q = 1`: `p-q = 0` is Drazin invertible, `p+q = 2` is not.
fn integer_case() -> Result<CaseReport, CliError> {
    let one = Integer::from(1);
    let (diff, sum) = (&one - &one, &one + &one);
    let mut c = Case::new();
    c.value("p", scalar(&one));
    c.value("q", scalar(&one));
    c.value("p-q", scalar(&diff));
    c.value("p+q", scalar(&sum));

    let diff_d = integer_drazin(&diff)?;
    c.value("(p-q)^D", scalar(&diff_d.d));
    c.check("(p-q)^D", 0, &diff_d.d);
    c.check("ind(p-q)", 1, diff_d.index);
    let sum_verdict = match integer_drazin(&sum) {
        Ok(r) => format!("Drazin invertible with inverse {}", r.d),
        Err(DrazinError::NotDrazinInvertible) => "NotDrazinInvertible".into(),
        Err(e) => return Err(e.into()),
    };
    c.check("p+q", "NotDrazinInvertible", sum_verdict);
    Ok(c.finish("Z-scalar", Domain::Integers))
}

pub fn run_counterexamples() -> Result<CounterexampleReport, CliError> {
    let cases = vec![matrix_case()?, integer_case()?];
    let pass = cases.iter().all(|c| c.pass);
    Ok(CounterexampleReport { cases, pass })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_cases_match() {
        let r = run_counterexamples().unwrap();
        for case in &r.cases {
            for c in &case.checks {
                assert!(c.matches, "{}: {c:?}", case.case);
            }
        }
        assert!(r.pass);
    }
}
