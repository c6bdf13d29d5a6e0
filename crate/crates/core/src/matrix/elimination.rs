//! Gauss-Jordan elimination over exact fields.
//!
//! Pivoting takes the first nonzero entry in column order, so every result
//! here is a deterministic function of the input.

use crate::scalar::Scalar;

use super::{Matrix, MatrixError};

/// Reduced row-echelon form of `input` together with the invertible
/// `transform` satisfying `transform * input = reduced`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RrefResult<T: Scalar> {
    pub reduced: Matrix<T>,
    pub rank: usize,
    pub pivots: Vec<usize>,
    pub transform: Matrix<T>,
}

impl<T: Scalar> Matrix<T> {
    fn require_field(&self) -> Result<(), MatrixError> {
        if self.domain.is_field() {
            Ok(())
        } else {
            Err(MatrixError::UnsupportedDomain(self.domain))
        }
    }

    pub fn rref_rank(&self) -> Result<RrefResult<T>, MatrixError> {
        self.require_field()?;
        let d = self.domain;
        let (n, m) = self.shape();
        let mut r = self.clone();
        let mut t = Matrix::identity(d, n);
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m {
            if row == n {
                break;
            }
            let Some(p) = (row..n).find(|&i| !r.get(i, col).is_zero()) else {
                continue;
            };
            if p != row {
                swap_rows(&mut r, p, row);
                swap_rows(&mut t, p, row);
            }
            let inv = r.get(row, col).inverse_in(&d)?;
            scale_row(&mut r, row, &inv);
            scale_row(&mut t, row, &inv);
            for i in 0..n {
                if i == row || r.get(i, col).is_zero() {
                    continue;
                }
                let f = r.get(i, col).clone();
                axpy_row(&mut r, i, row, &f);
                axpy_row(&mut t, i, row, &f);
            }
            pivots.push(col);
            row += 1;
        }
        Ok(RrefResult { reduced: r, rank: pivots.len(), pivots, transform: t })
    }

    pub fn rank(&self) -> Result<usize, MatrixError> {
        Ok(self.rref_rank()?.rank)
    }

    /// Some `X` with `self * X = b`, free variables set to zero; `None` when
    /// the system is inconsistent.
    pub fn solve_right(&self, b: &Matrix<T>) -> Result<Option<Matrix<T>>, MatrixError> {
        self.require_field()?;
        if self.rows != b.rows {
            return Err(MatrixError::DimensionMismatch { op: "solve", lhs: self.shape(), rhs: b.shape() });
        }
        let rr = self.rref_rank()?;
        let tb = rr.transform.mat_mul(b)?;
        if (rr.rank..tb.rows).any(|i| tb.row(i).iter().any(|x| !x.is_zero())) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.domain, self.cols, b.cols);
        for (i, &pc) in rr.pivots.iter().enumerate() {
            for j in 0..b.cols {
                x.set(pc, j, tb.get(i, j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Matrix<T>, MatrixError> {
        self.require_field()?;
        if !self.is_square() {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let rr = self.rref_rank()?;
        if rr.rank < self.rows {
            return Err(MatrixError::Singular);
        }
        Ok(rr.transform)
    }

    /// Pivot columns of `self`, in index order.
    pub fn column_space_basis(&self) -> Result<Matrix<T>, MatrixError> {
        let rr = self.rref_rank()?;
        Ok(self.select_columns(&rr.pivots))
    }

    /// One basis vector per free column `f`: `e_f` minus the pivot-row
    /// entries of column `f` placed at the pivot positions.
    pub fn null_space_basis(&self) -> Result<Matrix<T>, MatrixError> {
        let rr = self.rref_rank()?;
        let d = self.domain;
        let free: Vec<usize> = (0..self.cols).filter(|c| !rr.pivots.contains(c)).collect();
        let mut basis = Matrix::zeros(d, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            basis.set(f, k, T::one_in(&d));
            for (i, &pc) in rr.pivots.iter().enumerate() {
                basis.set(pc, k, -rr.reduced.get(i, f).clone());
            }
        }
        Ok(basis)
    }
}

fn swap_rows<T: Scalar>(m: &mut Matrix<T>, a: usize, b: usize) {
    let c = m.cols;
    for j in 0..c {
        m.entries.swap(a * c + j, b * c + j);
    }
}

fn scale_row<T: Scalar>(m: &mut Matrix<T>, i: usize, f: &T) {
    let c = m.cols;
    for x in &mut m.entries[i * c..(i + 1) * c] {
        *x = x.clone() * f;
    }
}

/// `row[dst] -= f * row[src]`
fn axpy_row<T: Scalar>(m: &mut Matrix<T>, dst: usize, src: usize, f: &T) {
    let c = m.cols;
    for j in 0..c {
        let s = &m.entries[src * c + j];
        if s.is_zero() {
            continue;
        }
        let delta = f.clone() * s;
        let x = &mut m.entries[dst * c + j];
        *x = x.clone() - &delta;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Domain, ModularInt, PrimeFieldElem, Rational};
    use proptest::prelude::*;

    type Q = Matrix<Rational>;
    type G = Matrix<PrimeFieldElem>;
    const QD: Domain = Domain::Rationals;

    #[test]
    fn rank_examples() {
        assert_eq!(Q::identity(QD, 4).rank().unwrap(), 4);
        assert_eq!(G::from_ints(Domain::PrimeField(2), &[[1, 1], [1, 1]]).rank().unwrap(), 1);
        assert_eq!(Q::zeros(QD, 3, 3).rank().unwrap(), 0);
        let zn = Matrix::<ModularInt>::from_ints(Domain::Modular(6), &[[1, 0], [0, 1]]);
        assert_eq!(zn.rank(), Err(MatrixError::UnsupportedDomain(Domain::Modular(6))));
    }

    #[test]
    fn solve_examples() {
        let b = Q::from_ints(QD, &[[3, 1], [-2, 5]]);
        assert_eq!(Q::identity(QD, 2).solve_right(&b).unwrap(), Some(b));
        let z = Q::zeros(QD, 2, 2);
        assert_eq!(z.solve_right(&z).unwrap(), Some(z.clone()));
        let a = Q::from_ints(QD, &[[1, 0], [0, 0]]);
        assert_eq!(a.solve_right(&Q::from_ints(QD, &[[0], [1]])).unwrap(), None);
        assert!(matches!(a.solve_right(&Q::zeros(QD, 3, 1)), Err(MatrixError::DimensionMismatch { .. })));
    }

    #[test]
    fn inverse_examples() {
        let gf7 = Domain::PrimeField(7);
        assert_eq!(G::from_ints(gf7, &[[2, 0], [0, 1]]).inverse().unwrap(), G::from_ints(gf7, &[[4, 0], [0, 1]]));
        assert_eq!(
            Q::from_ints(QD, &[[1, 0], [1, 1]]).inverse().unwrap(),
            Q::from_ints(QD, &[[1, 0], [-1, 1]])
        );
        assert_eq!(Q::from_ints(QD, &[[0, 1], [0, 0]]).inverse(), Err(MatrixError::Singular));
    }

    #[test]
    fn basis_examples() {
        let i3 = Q::identity(QD, 3);
        assert_eq!(i3.column_space_basis().unwrap(), i3);
        assert_eq!(i3.null_space_basis().unwrap().shape(), (3, 0));
        let z = Q::zeros(QD, 3, 3);
        assert_eq!(z.column_space_basis().unwrap().shape(), (3, 0));
        assert_eq!(z.null_space_basis().unwrap(), i3);
        let d = Q::from_ints(QD, &[[1, 0], [0, 0]]);
        assert_eq!(d.column_space_basis().unwrap(), Q::from_ints(QD, &[[1], [0]]));
        assert_eq!(d.null_space_basis().unwrap(), Q::from_ints(QD, &[[0], [1]]));
    }

    fn gf_matrix(p: u64, r: usize, c: usize) -> impl Strategy<Value = G> {
        prop::collection::vec(0..p as i64, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(<[i64]>::to_vec).collect();
            G::from_ints(Domain::PrimeField(p), &rows)
        })
    }

    fn q_matrix(r: usize, c: usize) -> impl Strategy<Value = Q> {
        prop::collection::vec(-3i64..=3, r * c).prop_map(move |v| {
            let rows: Vec<Vec<i64>> = v.chunks(c).map(<[i64]>::to_vec).collect();
            Q::from_ints(QD, &rows)
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in gf_matrix(3, 4, 5)) {
            let rr = a.rref_rank().unwrap();
            prop_assert_eq!(rr.rank + a.null_space_basis().unwrap().cols(), a.cols());
            prop_assert_eq!(rr.transform.mat_mul(&a).unwrap(), rr.reduced);
            prop_assert!((&a * &a.null_space_basis().unwrap()).is_zero());
        }

        #[test]
        fn rational_transform_record(a in q_matrix(4, 3)) {
            let rr = a.rref_rank().unwrap();
            prop_assert_eq!(&rr.transform * &a, rr.reduced);
            prop_assert_eq!(rr.rank, rr.pivots.len());
        }

        #[test]
        fn solutions_satisfy_system(a in q_matrix(3, 4), b in q_matrix(3, 2)) {
            if let Some(x) = a.solve_right(&b).unwrap() {
                prop_assert_eq!(&a * &x, b);
            } else {
                prop_assert!(a.rank().unwrap() < 3);
            }
        }

        #[test]
        fn inverse_is_two_sided(a in gf_matrix(7, 4, 4)) {
            match a.inverse() {
                Ok(inv) => {
                    prop_assert!((&a * &inv).is_identity());
                    prop_assert!((&inv * &a).is_identity());
                }
                Err(e) => {
                    prop_assert_eq!(e, MatrixError::Singular);
                    prop_assert!(a.rank().unwrap() < 4);
                }
            }
        }
    }
}
