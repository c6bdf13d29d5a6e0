use crate::ring::{IntegerRing, MatrixRing, ModularScalarRing, RingContext};
use crate::scalar::{Domain, Scalar};

use super::{drazin_of, CalculusError, IdempotentPair};

/// A ring with an involution `x -> x*`.
pub trait Involution: RingContext {
    fn star(&self, a: &Self::Elem) -> Self::Elem;

    /// `a* a = 0` implies `a = 0`.
    fn is_star_reducing(&self) -> bool;
}

/// Transpose. Star-reducing only over the rationals: over a prime field a
/// nonzero isotropic vector `v` gives `(v v^T)^T (v v^T) = 0`.
impl<T: Scalar> Involution for MatrixRing<T> {
    fn star(&self, a: &Self::Elem) -> Self::Elem {
        a.transpose()
    }

    fn is_star_reducing(&self) -> bool {
        self.domain() == Domain::Rationals
    }
}

/// The identity involution; `a^2 = 0` forces `a = 0` in `Z`.
impl Involution for IntegerRing {
    fn star(&self, a: &Self::Elem) -> Self::Elem {
        a.clone()
    }

    fn is_star_reducing(&self) -> bool {
        true
    }
}

/// The identity involution on `Z_n`; `a^2 = 0` forces `a = 0` exactly
/// when `n` is squarefree.
impl Involution for ModularScalarRing {
    fn star(&self, a: &Self::Elem) -> Self::Elem {
        *a
    }

    fn is_star_reducing(&self) -> bool {
        let n = self.modulus();
        (2..).take_while(|d| d * d <= n).all(|d| n % (d * d) != 0)
    }
}

/// Truth values of the two sides of a biconditional.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Biconditional {
    pub lhs: bool,
    pub rhs: bool,
}

impl Biconditional {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectorVerdicts {
    /// `(p-q)^D = p-q` against `pq = qp`.
    pub difference: Biconditional,
    /// `(p+q)^D = p+q` against `pq = qp = 0`.
    pub sum: Biconditional,
}

fn check(equation: &'static str, b: Biconditional) -> Result<Biconditional, CalculusError> {
    if b.holds() {
        Ok(b)
    } else {
        Err(CalculusError::IdentityViolated {
            equation,
            detail: format!("left side is {} but right side is {}", b.lhs, b.rhs),
        })
    }
}

/// Both projector criteria for a pair of self-adjoint idempotents in a
/// star-reducing ring where 6 is a unit.
pub fn projector_criteria<R: Involution>(pair: &IdempotentPair<'_, R>) -> Result<ProjectorVerdicts, CalculusError> {
    let ring = pair.ring();
    if !ring.is_star_reducing() {
        return Err(CalculusError::NotStarReducing(ring.describe()));
    }
    let (p, q) = (pair.p(), pair.q());
    if ring.star(p.value()) != *p.value() {
        return Err(CalculusError::NotAProjector("p"));
    }
    if ring.star(q.value()) != *q.value() {
        return Err(CalculusError::NotAProjector("q"));
    }
    let six = p.int(6);
    if !matches!(six.drazin(), Ok(r) if r.index == 0) {
        return Err(CalculusError::SixNotInvertible(ring.describe()));
    }

    let pq = &p * &q;
    let qp = &q * &p;
    let diff = &p - &q;
    let sum = &p + &q;
    let diff_d = diff.wrap(drazin_of(&diff, "p-q")?.d);
    let difference = check("T3.9(1)", Biconditional { lhs: diff_d == diff, rhs: pq == qp })?;

    let sum_fixed = match drazin_of(&sum, "p+q") {
        Ok(r) => r.d == *sum.value(),
        Err(CalculusError::NotDrazinInvertible(_)) => false,
        Err(e) => return Err(e),
    };
    let sum = check("T3.9(2)", Biconditional { lhs: sum_fixed, rhs: pq.is_zero() && qp.is_zero() })?;
    Ok(ProjectorVerdicts { difference, sum })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::tests::{gf_ring, gm, q_ring, qm};
    use crate::matrix::Matrix;
    use crate::scalar::Rational;

    fn half_projector() -> Matrix<Rational> {
        let h = Rational::new(1.into(), 2.into());
        Matrix::from_rows(Domain::Rationals, vec![vec![h.clone(), h.clone()], vec![h.clone(), h]]).unwrap()
    }

    #[test]
    fn orthogonal_coordinate_projectors() {
        let ring = q_ring(2);
        let pair = IdempotentPair::new(&ring, qm(&[&[1, 0], &[0, 0]]), qm(&[&[0, 0], &[0, 1]])).unwrap();
        let v = projector_criteria(&pair).unwrap();
        assert_eq!(v.sum, Biconditional { lhs: true, rhs: true });
        assert_eq!(v.difference, Biconditional { lhs: true, rhs: true });
    }

    #[test]
    fn oblique_pair_is_false_on_both_sides() {
        let ring = q_ring(2);
        let pair = IdempotentPair::new(&ring, qm(&[&[1, 0], &[0, 0]]), half_projector()).unwrap();
        let v = projector_criteria(&pair).unwrap();
        assert_eq!(v.difference, Biconditional { lhs: false, rhs: false });
        assert_eq!(v.sum, Biconditional { lhs: false, rhs: false });
    }

    #[test]
    fn equal_projectors() {
        let ring = q_ring(2);
        let p = qm(&[&[1, 0], &[0, 0]]);
        let v = projector_criteria(&IdempotentPair::new(&ring, p.clone(), p).unwrap()).unwrap();
        assert_eq!(v.difference, Biconditional { lhs: true, rhs: true });
        assert_eq!(v.sum, Biconditional { lhs: false, rhs: false });
    }

    #[test]
    fn scalar_projectors_in_z35() {
        // 6 is a unit mod 35; idempotents are 0, 1, 15, 21
        let z = ModularScalarRing::new(35).unwrap();
        let pair = IdempotentPair::new(&z, z.elem(15), z.elem(21)).unwrap();
        let v = projector_criteria(&pair).unwrap();
        assert_eq!(v.sum, Biconditional { lhs: true, rhs: true });
        assert_eq!(v.difference, Biconditional { lhs: true, rhs: true });
    }

    #[test]
    fn rejections() {
        let ring = q_ring(2);
        let pair = IdempotentPair::new(&ring, qm(&[&[1, 0], &[1, 0]]), qm(&[&[0, 0], &[0, 1]])).unwrap();
        assert_eq!(projector_criteria(&pair), Err(CalculusError::NotAProjector("p")));

        let gf2 = gf_ring(2, 2);
        let pair = IdempotentPair::new(&gf2, gm(2, &[&[1, 0], &[0, 0]]), gm(2, &[&[0, 0], &[0, 1]])).unwrap();
        assert!(matches!(projector_criteria(&pair), Err(CalculusError::NotStarReducing(_))));

        let z = IntegerRing;
        let pair = IdempotentPair::new(&z, 1.into(), 0.into()).unwrap();
        assert!(matches!(projector_criteria(&pair), Err(CalculusError::SixNotInvertible(_))));

        let z12 = ModularScalarRing::new(12).unwrap();
        assert!(!z12.is_star_reducing());
        let z10 = ModularScalarRing::new(10).unwrap();
        assert!(z10.is_star_reducing());
        let pair = IdempotentPair::new(&z10, z10.elem(5), z10.elem(6)).unwrap();
        assert!(matches!(projector_criteria(&pair), Err(CalculusError::SixNotInvertible(_))));
    }
}
