use crate::drazin::DrazinError;
use crate::ring::{Elt, RingContext};

use super::{certify, dinv, drazin_of, expect_eq, CalculusError, IdempotentPair};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaMember<E> {
    pub label: &'static str,
    pub value: E,
    pub invertible: bool,
}

/// Drazin verdicts for the nine-element family and for the triple
/// `pq`, `1-p-q`, `(1-p)(1-q)`. Each list is all-true or all-false.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SigmaFamily<E> {
    pub members: Vec<SigmaMember<E>>,
    pub triple: Vec<SigmaMember<E>>,
}

impl<E> SigmaFamily<E> {
    pub fn all_invertible(&self) -> bool {
        self.members.iter().all(|m| m.invertible)
    }

    pub fn triple_invertible(&self) -> bool {
        self.triple.iter().all(|m| m.invertible)
    }
}

fn verdict<R: RingContext>(label: &'static str, x: Elt<'_, R>) -> Result<SigmaMember<R::Elem>, CalculusError> {
    let invertible = match x.drazin() {
        Ok(_) => true,
        Err(DrazinError::NotDrazinInvertible) => false,
        Err(e) => return Err(e.into()),
    };
    Ok(SigmaMember { label, value: x.into_value(), invertible })
}

fn all_or_none<E>(equation: &'static str, list: &[SigmaMember<E>]) -> Result<(), CalculusError> {
    let yes: Vec<&str> = list.iter().filter(|m| m.invertible).map(|m| m.label).collect();
    if yes.is_empty() || yes.len() == list.len() {
        return Ok(());
    }
    let no: Vec<&str> = list.iter().filter(|m| !m.invertible).map(|m| m.label).collect();
    Err(CalculusError::IdentityViolated {
        equation,
        detail: format!("invertible: {}; not invertible: {}", yes.join(", "), no.join(", ")),
    })
}

pub fn sigma_census<R: RingContext>(pair: &IdempotentPair<'_, R>) -> Result<SigmaFamily<R::Elem>, CalculusError> {
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let pq = &p * &q;
    let qp = &q * &p;
    let members = vec![
        verdict("p-q", &p - &q)?,
        verdict("1-pq", &one - &pq)?,
        verdict("p-pq", &p - &pq)?,
        verdict("p-qp", &p - &qp)?,
        verdict("p-pqp", &p - &(&pq * &p))?,
        verdict("1-qp", &one - &qp)?,
        verdict("q-pq", &q - &pq)?,
        verdict("q-qp", &q - &qp)?,
        verdict("p+q-pq", &(&p + &q) - &pq)?,
    ];
    let triple = vec![
        verdict("pq", pq.clone())?,
        verdict("1-p-q", &(&one - &p) - &q)?,
        verdict("(1-p)(1-q)", (&one - &p) * (&one - &q))?,
    ];
    all_or_none("L2.1", &members)?;
    all_or_none("L2.2", &triple)?;
    Ok(SigmaFamily { members, triple })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClineResult<E> {
    /// `(ba)^D`
    pub d: E,
    /// `ab = ba`; then `(ab)^D = b^D a^D = a^D b^D` was checked as well.
    pub commute: bool,
}

/// `(ba)^D = b((ab)^D)^2 a`.
pub fn cline<R: RingContext>(ring: &R, a: &R::Elem, b: &R::Elem) -> Result<ClineResult<R::Elem>, CalculusError> {
    let (a, b) = (ring.el(a.clone()), ring.el(b.clone()));
    let ab = &a * &b;
    let ba = &b * &a;
    let ab_d = dinv(&ab, "ab")?;
    let d = &(&b * &(&ab_d * &ab_d)) * &a;
    certify("L2.3", &ba, &d)?;

    let commute = ab == ba;
    if commute {
        let a_d = dinv(&a, "a")?;
        let b_d = dinv(&b, "b")?;
        expect_eq("L2.3", &ab_d, &(&b_d * &a_d))?;
        expect_eq("L2.3", &ab_d, &(&a_d * &b_d))?;
    }
    Ok(ClineResult { d: d.into_value(), commute })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobsonResult<E> {
    /// `(1-ba)^D`
    pub d: E,
    /// `ind(1-ab)`, equal to `ind(1-ba)`.
    pub k: usize,
    /// `sum_{i<k} (1-ab)^i`
    pub r_sum: E,
}

/// `(1-ba)^D = 1 + b((1-ab)^D - (1-ab)^pi r)a` with `r = sum_{i<k}(1-ab)^i`.
pub fn jacobson<R: RingContext>(ring: &R, a: &R::Elem, b: &R::Elem) -> Result<JacobsonResult<R::Elem>, CalculusError> {
    let (a, b) = (ring.el(a.clone()), ring.el(b.clone()));
    let one = a.one();
    let x = &one - &(&a * &b);
    let y = &one - &(&b * &a);
    let xr = drazin_of(&x, "1-ab")?;
    let k = xr.index;
    let (x_d, x_pi) = (x.wrap(xr.d), x.wrap(xr.pi));

    let mut r = one.zero();
    let mut power = one.clone();
    for _ in 0..k {
        r = &r + &power;
        power = &power * &x;
    }
    let d = &one + &(&(&b * &(&x_d - &(&x_pi * &r))) * &a);
    certify("L2.4", &y, &d)?;

    let k_ba = drazin_of(&y, "1-ba")?.index;
    if k_ba != k {
        return Err(CalculusError::IdentityViolated {
            equation: "L2.4",
            detail: format!("ind(1-ab) = {k} but ind(1-ba) = {k_ba}"),
        });
    }
    Ok(JacobsonResult { d: d.into_value(), k, r_sum: r.into_value() })
}
