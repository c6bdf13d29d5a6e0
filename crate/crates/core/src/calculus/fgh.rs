use crate::ring::RingContext;

use super::{dinv, expect_eq, CalculusError, IdempotentPair};

/// `F = p(p-q)^D`, `G = (p-q)^D p`, `H = (p-q)^D (p-q)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentTriple<E> {
    pub f: E,
    pub g: E,
    pub h: E,
}

/// Computes `F`, `G`, `H` and checks that they are idempotent and equal
/// to their alternate forms `(p-q)^D (1-q)`, `(1-q)(p-q)^D` and
/// `(p-q)(p-q)^D`.
pub fn fgh<R: RingContext>(pair: &IdempotentPair<'_, R>) -> Result<IdempotentTriple<R::Elem>, CalculusError> {
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let diff = &p - &q;
    let dd = dinv(&diff, "p-q")?;
    let f = &p * &dd;
    let g = &dd * &p;
    let h = &dd * &diff;

    expect_eq("T3.2", &(&f * &f), &f)?;
    expect_eq("T3.2", &(&g * &g), &g)?;
    expect_eq("T3.2", &(&h * &h), &h)?;
    expect_eq("T3.2(1)", &f, &(&dd * (&one - &q)))?;
    expect_eq("T3.2(2)", &g, &((&one - &q) * &dd))?;
    expect_eq("T3.2", &h, &(&diff * &dd))?;

    Ok(IdempotentTriple { f: f.into_value(), g: g.into_value(), h: h.into_value() })
}

/// `q(p-q)^D = (p-q)^D(1-p)`, `(p-q)^D q = (1-p)(p-q)^D`, `qH = Hq` and
/// `G(1-q) = (1-q)F`.
pub fn fgh_swap_relations<R: RingContext>(pair: &IdempotentPair<'_, R>) -> Result<(), CalculusError> {
    let t = fgh(pair)?;
    let (p, q, one) = (pair.p(), pair.q(), pair.one());
    let dd = dinv(&(&p - &q), "p-q")?;
    let (f, g, h) = (p.wrap(t.f), p.wrap(t.g), p.wrap(t.h));

    expect_eq("C3.3(1)", &(&q * &dd), &(&dd * (&one - &p)))?;
    expect_eq("C3.3(2)", &(&dd * &q), &((&one - &p) * &dd))?;
    expect_eq("C3.3(3)", &(&q * &h), &(&h * &q))?;
    expect_eq("C3.3(4)", &(&g * (&one - &q)), &((&one - &q) * &f))
}

/// `Fp = pG = pH = Hp` and `qHq = qH = Hq = HqH`.
pub fn fgh_commutation<R: RingContext>(pair: &IdempotentPair<'_, R>) -> Result<(), CalculusError> {
    let t = fgh(pair)?;
    let (p, q) = (pair.p(), pair.q());
    let (f, g, h) = (p.wrap(t.f), p.wrap(t.g), p.wrap(t.h));

    let fp = &f * &p;
    expect_eq("T3.4(1)", &fp, &(&p * &g))?;
    expect_eq("T3.4(1)", &fp, &(&p * &h))?;
    expect_eq("T3.4(1)", &fp, &(&h * &p))?;

    let qh = &q * &h;
    expect_eq("T3.4(2)", &(&qh * &q), &qh)?;
    expect_eq("T3.4(2)", &qh, &(&h * &q))?;
    expect_eq("T3.4(2)", &qh, &(&(&h * &q) * &h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::tests::{pair_a, q_ring, qm};

    #[test]
    fn equal_idempotents_give_zero_triple() {
        let ring = q_ring(2);
        let p = qm(&[&[1, 0], &[1, 0]]);
        let pair = IdempotentPair::new(&ring, p.clone(), p).unwrap();
        let t = fgh(&pair).unwrap();
        assert!(t.f.is_zero() && t.g.is_zero() && t.h.is_zero());
    }

    #[test]
    fn commuting_diagonal_pair() {
        let ring = q_ring(3);
        let pair = IdempotentPair::new(&ring, qm(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 0]]), qm(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]])).unwrap();
        let t = fgh(&pair).unwrap();
        let e = qm(&[&[0, 0, 0], &[0, 1, 0], &[0, 0, 0]]);
        assert_eq!(t, IdempotentTriple { f: e.clone(), g: e.clone(), h: e });
        fgh_swap_relations(&pair).unwrap();
        fgh_commutation(&pair).unwrap();
    }

    #[test]
    fn pair_a_triple() {
        let ring = q_ring(2);
        let pair = pair_a(&ring);
        let t = fgh(&pair).unwrap();
        assert_eq!(t.f, qm(&[&[1, 0], &[1, 0]]));
        assert_eq!(t.g, qm(&[&[1, 0], &[0, 0]]));
        assert!(t.h.is_identity());
        fgh_swap_relations(&pair).unwrap();
        fgh_commutation(&pair).unwrap();
    }

    #[test]
    fn rejects_non_idempotent() {
        let ring = q_ring(2);
        let err = IdempotentPair::new(&ring, qm(&[&[2, 0], &[0, 0]]), qm(&[&[1, 0], &[0, 0]])).unwrap_err();
        assert_eq!(err, CalculusError::NonIdempotentInput("p"));
    }
}
