//! Closed-form Drazin inverses built from a pair of idempotents.
//!
//! Each operation evaluates its formulas with ring arithmetic, then checks
//! every result twice: once against the Drazin axioms for its target
//! element and once against the context's engine. A disagreement is
//! reported as [`CalculusError::IdentityViolated`] or
//! [`CalculusError::AxiomsViolated`] naming the equation; nothing is
//! repaired.
//!
//! Equation ids (`"T3.5(3)"`, `"L2.4"`, ...) match the theorem ids accepted
//! by the command-line `verify` command.

mod fgh;
mod lemmas;
mod projectors;
mod theorems;

use thiserror::Error;

use crate::drazin::{is_drazin_pair, DrazinError, DrazinResult};
use crate::ring::{Elt, RingContext};

pub use fgh::{fgh, fgh_commutation, fgh_swap_relations, IdempotentTriple};
pub use lemmas::{cline, jacobson, sigma_census, ClineResult, JacobsonResult, SigmaFamily, SigmaMember};
pub use projectors::{projector_criteria, Biconditional, Involution, ProjectorVerdicts};
pub use theorems::{
    corner_residual, derived_from_complement, derived_from_difference, difference_from_products,
    difference_via_corner, invertible_case, product_identities, sum_precondition, sum_via_difference,
    ComplementDerived, CornerResult, DifferenceDerived, InvertibleCase, ProductIdentities, SumViaDifference,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CalculusError {
    #[error("input is not idempotent: {0}")]
    NonIdempotentInput(&'static str),
    #[error("{0} is not Drazin invertible")]
    NotDrazinInvertible(String),
    #[error("precondition {condition} fails; witness {witness}")]
    PreconditionViolated { condition: &'static str, witness: String },
    #[error("identity {equation} fails: {detail}")]
    IdentityViolated { equation: &'static str, detail: String },
    #[error("result of {equation} fails the Drazin axioms for its target")]
    AxiomsViolated { equation: &'static str },
    #[error("input is not a projector: {0}")]
    NotAProjector(&'static str),
    #[error("involution is not *-reducing on {0}")]
    NotStarReducing(String),
    #[error("6 is not invertible in {0}")]
    SixNotInvertible(String),
    #[error(transparent)]
    Drazin(#[from] DrazinError),
}

impl CalculusError {
    /// Equation id for violations, if this error is one.
    pub fn equation(&self) -> Option<&'static str> {
        match self {
            CalculusError::IdentityViolated { equation, .. } | CalculusError::AxiomsViolated { equation } => {
                Some(equation)
            }
            _ => None,
        }
    }
}

/// Two idempotents of the same ring.
pub struct IdempotentPair<'r, R: RingContext> {
    ring: &'r R,
    p: R::Elem,
    q: R::Elem,
}

impl<'r, R: RingContext> Clone for IdempotentPair<'r, R> {
    fn clone(&self) -> Self {
        IdempotentPair { ring: self.ring, p: self.p.clone(), q: self.q.clone() }
    }
}

impl<'r, R: RingContext> std::fmt::Debug for IdempotentPair<'r, R> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdempotentPair")
            .field("p", &self.ring.render(&self.p))
            .field("q", &self.ring.render(&self.q))
            .finish()
    }
}

impl<'r, R: RingContext> IdempotentPair<'r, R> {
    pub fn new(ring: &'r R, p: R::Elem, q: R::Elem) -> Result<Self, CalculusError> {
        if !ring.contains(&p) || !ring.contains(&q) {
            return Err(DrazinError::DimensionMismatch.into());
        }
        if !ring.is_idempotent(&p) {
            return Err(CalculusError::NonIdempotentInput("p"));
        }
        if !ring.is_idempotent(&q) {
            return Err(CalculusError::NonIdempotentInput("q"));
        }
        Ok(IdempotentPair { ring, p, q })
    }

    pub fn ring(&self) -> &'r R {
        self.ring
    }

    pub fn p(&self) -> Elt<'r, R> {
        self.ring.el(self.p.clone())
    }

    pub fn q(&self) -> Elt<'r, R> {
        self.ring.el(self.q.clone())
    }

    pub fn one(&self) -> Elt<'r, R> {
        self.ring.el(self.ring.one())
    }

    /// The pair `(q, p)`.
    pub fn swapped(&self) -> Self {
        IdempotentPair { ring: self.ring, p: self.q.clone(), q: self.p.clone() }
    }

    pub fn render(&self) -> (String, String) {
        (self.ring.render(&self.p), self.ring.render(&self.q))
    }
}

/// Engine Drazin inverse of `x`, with non-invertibility named after `what`.
pub(crate) fn drazin_of<R: RingContext>(x: &Elt<'_, R>, what: &str) -> Result<DrazinResult<R::Elem>, CalculusError> {
    x.drazin().map_err(|e| match e {
        DrazinError::NotDrazinInvertible => CalculusError::NotDrazinInvertible(format!("{what} = {}", x.render())),
        other => other.into(),
    })
}

pub(crate) fn dinv<'r, R: RingContext>(x: &Elt<'r, R>, what: &str) -> Result<Elt<'r, R>, CalculusError> {
    Ok(x.wrap(drazin_of(x, what)?.d))
}

/// `lhs == rhs`, or a violation of `equation`.
pub(crate) fn expect_eq<R: RingContext>(
    equation: &'static str,
    lhs: &Elt<'_, R>,
    rhs: &Elt<'_, R>,
) -> Result<(), CalculusError> {
    if lhs == rhs {
        Ok(())
    } else {
        Err(CalculusError::IdentityViolated {
            equation,
            detail: format!("{} != {}", lhs.render(), rhs.render()),
        })
    }
}

/// Checks that `candidate` is the Drazin inverse of `target`: first by the
/// axioms, then by equality with the engine.
pub(crate) fn certify<R: RingContext>(
    equation: &'static str,
    target: &Elt<'_, R>,
    candidate: &Elt<'_, R>,
) -> Result<(), CalculusError> {
    let ring = target.ring();
    if !is_drazin_pair(ring, target.value(), candidate.value(), ring.nilpotency_bound())? {
        return Err(CalculusError::AxiomsViolated { equation });
    }
    let engine = dinv(target, equation)?;
    expect_eq(equation, candidate, &engine)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::IdempotentPair;
    use crate::matrix::Matrix;
    use crate::ring::MatrixRing;
    use crate::scalar::{Domain, PrimeFieldElem, Rational};

    pub fn q_ring(n: usize) -> MatrixRing<Rational> {
        MatrixRing::new(Domain::Rationals, n).unwrap()
    }

    pub fn qm(rows: &[&[i64]]) -> Matrix<Rational> {
        Matrix::from_ints(Domain::Rationals, rows)
    }

    pub fn gf_ring(p: u64, n: usize) -> MatrixRing<PrimeFieldElem> {
        MatrixRing::new(Domain::PrimeField(p), n).unwrap()
    }

    pub fn gm(p: u64, rows: &[&[i64]]) -> Matrix<PrimeFieldElem> {
        Matrix::from_ints(Domain::PrimeField(p), rows)
    }

    /// p = [[1,0],[1,0]], q = [[0,0],[0,1]] over Q; p - q squares to I.
    pub fn pair_a(ring: &MatrixRing<Rational>) -> IdempotentPair<'_, MatrixRing<Rational>> {
        IdempotentPair::new(ring, qm(&[&[1, 0], &[1, 0]]), qm(&[&[0, 0], &[0, 1]])).unwrap()
    }
}
