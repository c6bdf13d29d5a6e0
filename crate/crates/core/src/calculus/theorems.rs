use crate::ring::{Elt, RingContext};

use super::{certify, dinv, drazin_of, expect_eq, CalculusError, IdempotentPair};

/// Drazin inverses of five elements built from `p - q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DifferenceDerived<E> {
    pub one_minus_pqp: E,
    pub p_minus_pqp: E,
    pub p_minus_pq: E,
    pub p_minus_qp: E,
    pub one_minus_pq: E,
}

/// With `D = (p-q)^D`, `pi = (p-q)^pi` and `k = ind(p-q)`:
///
/// ```text
/// (1 - pqp)^D = D^2 p + 1 - p
/// (p - pqp)^D = D^2 p = p D^2
/// (p - pq)^D  = p D^3
/// (p - qp)^D  = D^3 p
/// (1 - pq)^D  = 1 - p + D^2 [p + pq(1-p)] + [sum_{i<k} pi (p-q)^{2i}] pq(p-1)
/// ```
///
/// The sum is empty when `k = 0`.
pub fn derived_from_difference<R: RingContext>(
    pair: &IdempotentPair<'_, R>,
) -> Result<DifferenceDerived<R::Elem>, CalculusError> {
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let diff = &p - &q;
    let dr = drazin_of(&diff, "p-q")?;
    let d = diff.wrap(dr.d);
    let pi = diff.wrap(dr.pi);
    let d2 = &d * &d;
    let d3 = &d2 * &d;
    let pq = &p * &q;
    let qp = &q * &p;
    let pqp = &pq * &p;

    let one_minus_pqp = &(&d2 * &p) + &(&one - &p);
    certify("T3.5(1)", &(&one - &pqp), &one_minus_pqp)?;

    let p_minus_pqp = &d2 * &p;
    expect_eq("T3.5(2)", &p_minus_pqp, &(&p * &d2))?;
    certify("T3.5(2)", &(&p - &pqp), &p_minus_pqp)?;

    let p_minus_pq = &p * &d3;
    certify("T3.5(3)", &(&p - &pq), &p_minus_pq)?;

    let p_minus_qp = &d3 * &p;
    certify("T3.5(4)", &(&p - &qp), &p_minus_qp)?;

    let diff2 = &diff * &diff;
    let mut tail = one.zero();
    let mut power = one.clone();
    for _ in 0..dr.index {
        tail = &tail + &(&pi * &power);
        power = &power * &diff2;
    }
    let one_minus_pq = (&one - &p)
        + &d2 * (&p + &(&pq * (&one - &p)))
        + &tail * &(&pq * (&p - &one));
    certify("T3.5(5)", &(&one - &pq), &one_minus_pq)?;

    Ok(DifferenceDerived {
        one_minus_pqp: one_minus_pqp.into_value(),
        p_minus_pqp: p_minus_pqp.into_value(),
        p_minus_pq: p_minus_pq.into_value(),
        p_minus_qp: p_minus_qp.into_value(),
        one_minus_pq: one_minus_pq.into_value(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComplementDerived<E> {
    pub pqp: E,
    pub pq: E,
}

/// With `E = (1-p-q)^D`: `(pqp)^D = E^2 p = p E^2` and `(pq)^D = E^4 pq`.
pub fn derived_from_complement<R: RingContext>(
    pair: &IdempotentPair<'_, R>,
) -> Result<ComplementDerived<R::Elem>, CalculusError> {
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let e = dinv(&(&(&one - &p) - &q), "1-p-q")?;
    let e2 = &e * &e;
    let pq = &p * &q;

    let pqp_d = &e2 * &p;
    expect_eq("T3.6(1)", &pqp_d, &(&p * &e2))?;
    certify("T3.6(1)", &(&pq * &p), &pqp_d)?;

    let pq_d = &(&e2 * &e2) * &pq;
    certify("T3.6(2)", &pq, &pq_d)?;

    Ok(ComplementDerived { pqp: pqp_d.into_value(), pq: pq_d.into_value() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductIdentities<E> {
    pub pq_d: E,
    /// `(pq)^D = qp`
    pub drazin_is_qp: bool,
    /// `pq = qp`
    pub commute: bool,
}

/// `(pq)^D = (pqp)^D - p((1-q)(1-p))^D`, `(pq)^D pq = (pqp)^D pq`, and
/// the biconditional `(pq)^D = qp <=> pq = qp`.
pub fn product_identities<R: RingContext>(
    pair: &IdempotentPair<'_, R>,
) -> Result<ProductIdentities<R::Elem>, CalculusError> {
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let pq = &p * &q;
    let qp = &q * &p;
    let pqp_d = dinv(&(&pq * &p), "pqp")?;
    let corner_d = dinv(&((&one - &q) * (&one - &p)), "(1-q)(1-p)")?;

    let pq_d = &pqp_d - &(&p * &corner_d);
    certify("T3.7(2)", &pq, &pq_d)?;

    expect_eq("T3.7(3)", &(&pq_d * &pq), &(&pqp_d * &pq))?;

    // Only `pq = qp => (pq)^D = qp` holds in general: with qp = 0 and pq
    // nonzero nilpotent both (pq)^D and qp vanish.
    let drazin_is_qp = pq_d == qp;
    let commute = pq == qp;
    if drazin_is_qp != commute {
        return Err(CalculusError::IdentityViolated {
            equation: "T3.7(1)",
            detail: format!("(pq)^D = qp is {drazin_is_qp} but pq = qp is {commute}"),
        });
    }

    Ok(ProductIdentities { pq_d: pq_d.into_value(), drazin_is_qp, commute })
}

/// `(p-q)^D = (1-pq)^D (p-pq) + (p+q-pq)^D (pq-q)`.
pub fn difference_from_products<R: RingContext>(pair: &IdempotentPair<'_, R>) -> Result<R::Elem, CalculusError> {
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let pq = &p * &q;
    let a = dinv(&(&one - &pq), "1-pq")?;
    let b = dinv(&(&(&p + &q) - &pq), "p+q-pq")?;
    let diff_d = &a * &(&p - &pq) + &b * &(&pq - &q);
    certify("T3.8", &(&p - &q), &diff_d)?;
    Ok(diff_d.into_value())
}

/// `(p+q)(p-q)^pi`, which must be nilpotent for the sum formulas.
fn sum_witness<'r, R: RingContext>(pair: &IdempotentPair<'r, R>) -> Result<Elt<'r, R>, CalculusError> {
    let (p, q) = (pair.p(), pair.q());
    let diff = &p - &q;
    let pi = diff.wrap(drazin_of(&diff, "p-q")?.pi);
    Ok(&(&p + &q) * &pi)
}

/// Whether `(p+q)(p-q)^pi` is nilpotent.
pub fn sum_precondition<R: RingContext>(pair: &IdempotentPair<'_, R>) -> Result<bool, CalculusError> {
    Ok(sum_witness(pair)?.is_nilpotent())
}

fn require_sum_precondition<R: RingContext>(pair: &IdempotentPair<'_, R>) -> Result<(), CalculusError> {
    let w = sum_witness(pair)?;
    if w.is_nilpotent() {
        Ok(())
    } else {
        Err(CalculusError::PreconditionViolated { condition: "(p+q)(p-q)^pi nilpotent", witness: w.render() })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SumViaDifference<E> {
    pub sum_d: E,
    pub difference_d: E,
}

/// When `(p+q)(p-q)^pi` is nilpotent:
///
/// ```text
/// (p+q)^D  = (p-q)^D (p+q) (p-q)^D
/// (p-q)^D  = (p+q)^D (p-q) (p+q)^D
/// (p-q)^pi = (p+q)^pi
/// (p-q)^D  = F + G - H
/// (p+q)^D  = (2G - H)(F + G - H)
/// ```
pub fn sum_via_difference<R: RingContext>(
    pair: &IdempotentPair<'_, R>,
) -> Result<SumViaDifference<R::Elem>, CalculusError> {
    require_sum_precondition(pair)?;
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let diff = &p - &q;
    let sum = &p + &q;
    let dr = drazin_of(&diff, "p-q")?;
    let d = diff.wrap(dr.d);
    let pi = diff.wrap(dr.pi);

    let sum_d = &(&d * &sum) * &d;
    certify("T3.10(1)", &sum, &sum_d)?;
    expect_eq("T3.10(2)", &d, &(&(&sum_d * &diff) * &sum_d))?;
    expect_eq("T3.10(3)", &pi, &(&one - &(&sum * &sum_d)))?;

    let f = &p * &d;
    let g = &d * &p;
    let h = &d * &diff;
    let fgh = &(&f + &g) - &h;
    expect_eq("T3.10(4)", &d, &fgh)?;
    let two_g = &g.int(2) * &g;
    expect_eq("T3.10(5)", &sum_d, &((&two_g - &h) * &fgh))?;

    Ok(SumViaDifference { sum_d: sum_d.into_value(), difference_d: d.into_value() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CornerResult<E> {
    pub difference_d: E,
    /// `p((p+q)^D - (p-q)^D)(p-q)^2`, present when the sum precondition holds.
    pub residual: Option<E>,
}

/// `(p-q)^D = (p-q)^2 ((p-qp)^D - (q-qp)^D)`, plus the residual of
/// [`corner_residual`] when its precondition holds.
pub fn difference_via_corner<R: RingContext>(
    pair: &IdempotentPair<'_, R>,
) -> Result<CornerResult<R::Elem>, CalculusError> {
    let (p, q) = (pair.p(), pair.q());
    let diff = &p - &q;
    let qp = &q * &p;
    let a = dinv(&(&p - &qp), "p-qp")?;
    let b = dinv(&(&q - &qp), "q-qp")?;
    let difference_d = &(&diff * &diff) * &(&a - &b);
    certify("T3.11(1)", &diff, &difference_d)?;

    let residual = match corner_residual(pair) {
        Ok(r) => Some(r),
        Err(CalculusError::PreconditionViolated { .. }) => None,
        Err(e) => return Err(e),
    };
    Ok(CornerResult { difference_d: difference_d.into_value(), residual })
}

/// `p((p+q)^D - (p-q)^D)(p-q)^2 = 0`.
///
/// Requires `(p+q)(p-q)^pi` nilpotent: the derivation goes through the
/// sum formula `(p+q)^D = (p-q)^D (p+q) (p-q)^D`, which needs nilpotency
/// rather than mere Drazin invertibility of that product.
pub fn corner_residual<R: RingContext>(pair: &IdempotentPair<'_, R>) -> Result<R::Elem, CalculusError> {
    require_sum_precondition(pair)?;
    let (p, q) = (pair.p(), pair.q());
    let diff = &p - &q;
    let sum_d = dinv(&(&p + &q), "p+q")?;
    let d = dinv(&diff, "p-q")?;
    let residual = &(&p * &(&sum_d - &d)) * &(&diff * &diff);
    if !residual.is_zero() {
        return Err(CalculusError::IdentityViolated {
            equation: "T3.11(2)",
            detail: format!("residual {}", residual.render()),
        });
    }
    Ok(residual.into_value())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InvertibleCase<E> {
    pub sum_inverse: E,
    pub difference_inverse: E,
}

/// When `p - q` is invertible, with `F = p(p-q)^-1` and `G = (p-q)^-1 p`:
///
/// ```text
/// (p+q)^-1 = (p-q)^-1 (p+q) (p-q)^-1
/// (p-q)^-1 = (p+q)^-1 (p-q) (p+q)^-1
/// (p-q)^-1 = F + G - 1
/// (p+q)^-1 = (2G - 1)(F + G - 1)
/// ```
pub fn invertible_case<R: RingContext>(
    pair: &IdempotentPair<'_, R>,
) -> Result<InvertibleCase<R::Elem>, CalculusError> {
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let diff = &p - &q;
    let sum = &p + &q;
    let dr = drazin_of(&diff, "p-q")?;
    if dr.index != 0 {
        return Err(CalculusError::PreconditionViolated { condition: "p-q invertible", witness: diff.render() });
    }
    let d = diff.wrap(dr.d);

    let sum_inv = &(&d * &sum) * &d;
    expect_eq("C3.12(1)", &(&sum * &sum_inv), &one)?;
    expect_eq("C3.12(1)", &(&sum_inv * &sum), &one)?;
    certify("C3.12(1)", &sum, &sum_inv)?;
    expect_eq("C3.12(2)", &d, &(&(&sum_inv * &diff) * &sum_inv))?;

    let f = &p * &d;
    let g = &d * &p;
    let fg1 = &(&f + &g) - &one;
    expect_eq("C3.12(3)", &d, &fg1)?;
    let two_g = &g.int(2) * &g;
    expect_eq("C3.12(4)", &sum_inv, &((&two_g - &one) * &fg1))?;

    Ok(InvertibleCase { sum_inverse: sum_inv.into_value(), difference_inverse: d.into_value() })
}
