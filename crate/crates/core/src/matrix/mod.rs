//! Dense exact matrices.

mod elimination;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::{Domain, Scalar, ScalarError};

pub use elimination::RrefResult;
pub use text::{parse_header, RawMatrix, MAX_FILE_DIMENSION};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("dimension mismatch: {op} of {lhs:?} and {rhs:?}")]
    DimensionMismatch { op: &'static str, lhs: (usize, usize), rhs: (usize, usize) },
    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(Domain, Domain),
    #[error("matrix is {0}x{1}, not square")]
    NotSquare(usize, usize),
    #[error("operation requires a field, got {0}")]
    UnsupportedDomain(Domain),
    #[error("matrix is singular")]
    Singular,
    #[error("entry count {got} does not match {rows}x{cols}")]
    Shape { rows: usize, cols: usize, got: usize },
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

/// Row-major matrix of exact scalars tagged with the domain they live in.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    entries: Vec<T>,
    domain: Domain,
}

impl<T: Scalar> Matrix<T> {
    pub fn new(domain: Domain, rows: usize, cols: usize, entries: Vec<T>) -> Result<Self, MatrixError> {
        if !T::supports(&domain) {
            return Err(ScalarError::WrongDomain(domain).into());
        }
        if entries.len() != rows * cols {
            return Err(MatrixError::Shape { rows, cols, got: entries.len() });
        }
        Ok(Matrix { rows, cols, entries, domain })
    }

    pub fn from_rows(domain: Domain, rows: Vec<Vec<T>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|row| row.len() != c) {
            return Err(MatrixError::Shape { rows: r, cols: c, got: bad.len() });
        }
        Self::new(domain, r, c, rows.into_iter().flatten().collect())
    }

    /// Convenience constructor from small integer literals.
    pub fn from_ints<R: AsRef<[i64]>>(domain: Domain, rows: &[R]) -> Self {
        let data = rows
            .iter()
            .map(|row| row.as_ref().iter().map(|&v| T::from_i64_in(v, &domain)).collect())
            .collect();
        Self::from_rows(domain, data).expect("well-formed integer rows")
    }

    pub fn zeros(domain: Domain, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![T::zero_in(&domain); rows * cols], domain }
    }

    pub fn identity(domain: Domain, n: usize) -> Self {
        Self::scalar(domain, n, T::one_in(&domain))
    }

    /// `value * I_n`.
    pub fn scalar(domain: Domain, n: usize, value: T) -> Self {
        let mut m = Self::zeros(domain, n, n);
        for i in 0..n {
            m.entries[i * n + i] = value.clone();
        }
        m
    }

    pub fn diag(domain: Domain, values: Vec<T>) -> Self {
        let n = values.len();
        let mut m = Self::zeros(domain, n, n);
        for (i, v) in values.into_iter().enumerate() {
            m.entries[i * n + i] = v;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j { e.is_one() } else { e.is_zero() }
                })
            })
    }

    fn same_domain(&self, other: &Self) -> Result<(), MatrixError> {
        if self.domain == other.domain {
            Ok(())
        } else {
            Err(MatrixError::DomainMismatch(self.domain, other.domain))
        }
    }

    fn zip_with(&self, other: &Self, op: &'static str, f: impl Fn(T, &T) -> T) -> Result<Self, MatrixError> {
        self.same_domain(other)?;
        if self.shape() != other.shape() {
            return Err(MatrixError::DimensionMismatch { op, lhs: self.shape(), rhs: other.shape() });
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| f(a.clone(), b)).collect();
        Ok(Matrix { entries, ..*self })
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip_with(other, "add", |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.zip_with(other, "sub", |a, b| a - b)
    }

    /// Exact product.
    pub fn mat_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_domain(other)?;
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch { op: "mul", lhs: self.shape(), rhs: other.shape() });
        }
        let (n, m, p) = (self.rows, self.cols, other.cols);
        let zero = T::zero_in(&self.domain);
        let mut out = Vec::with_capacity(n * p);
        for i in 0..n {
            let row = self.row(i);
            for j in 0..p {
                let mut acc = zero.clone();
                for (k, a) in row.iter().enumerate().take(m) {
                    if a.is_zero() {
                        continue;
                    }
                    let b = &other.entries[k * p + j];
                    if !b.is_zero() {
                        acc = acc + &(a.clone() * b);
                    }
                }
                out.push(acc);
            }
        }
        Ok(Matrix { rows: n, cols: p, entries: out, domain: self.domain })
    }

    /// `self^e` by repeated squaring, with `self^0 = I`.
    pub fn pow(&self, mut e: u64) -> Result<Self, MatrixError> {
        if !self.is_square() {
            return Err(MatrixError::NotSquare(self.rows, self.cols));
        }
        let mut acc = Self::identity(self.domain, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &T) -> Self {
        let entries = self.entries.iter().map(|a| a.clone() * c).collect();
        Matrix { entries, ..*self }
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        Matrix { rows: self.cols, cols: self.rows, entries, domain: self.domain }
    }

    /// Columns `idx` of `self`, in the given order.
    pub fn select_columns(&self, idx: &[usize]) -> Self {
        let mut entries = Vec::with_capacity(self.rows * idx.len());
        for i in 0..self.rows {
            entries.extend(idx.iter().map(|&j| self.get(i, j).clone()));
        }
        Matrix { rows: self.rows, cols: idx.len(), entries, domain: self.domain }
    }

    /// `[self other]`.
    pub fn hstack(&self, other: &Self) -> Result<Self, MatrixError> {
        self.same_domain(other)?;
        if self.rows != other.rows {
            return Err(MatrixError::DimensionMismatch { op: "hstack", lhs: self.shape(), rhs: other.shape() });
        }
        let mut entries = Vec::with_capacity(self.entries.len() + other.entries.len());
        for i in 0..self.rows {
            entries.extend_from_slice(self.row(i));
            entries.extend_from_slice(other.row(i));
        }
        Ok(Matrix { rows: self.rows, cols: self.cols + other.cols, entries, domain: self.domain })
    }

    /// Contiguous block `rows r0..r1`, `cols c0..c1`.
    pub fn block(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Self {
        let mut entries = Vec::with_capacity((r1 - r0) * (c1 - c0));
        for i in r0..r1 {
            entries.extend_from_slice(&self.row(i)[c0..c1]);
        }
        Matrix { rows: r1 - r0, cols: c1 - c0, entries, domain: self.domain }
    }

    /// `diag(a, b)` as a block matrix.
    pub fn block_diag(a: &Self, b: &Self) -> Self {
        let (n, m) = (a.rows + b.rows, a.cols + b.cols);
        let mut out = Self::zeros(a.domain, n, m);
        for i in 0..a.rows {
            for j in 0..a.cols {
                out.set(i, j, a.get(i, j).clone());
            }
        }
        for i in 0..b.rows {
            for j in 0..b.cols {
                out.set(a.rows + i, a.cols + j, b.get(i, j).clone());
            }
        }
        out
    }

    /// True iff `self^m = 0` for some `m <= bound`.
    pub fn is_nilpotent_within(&self, bound: usize) -> bool {
        nilpotency_index(self, bound).is_some()
    }

    /// Matrix text format, terminated by a newline.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n{} {}\n", self.domain.file_tag(), self.rows, self.cols);
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(ToString::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the matrix text format; the domain tag must be one `T` supports.
    pub fn from_text(text: &str) -> Result<Self, MatrixError> {
        RawMatrix::parse(text)?.into_matrix()
    }
}

/// Smallest `m` in `1..=bound` with `a^m = 0`.
pub fn nilpotency_index<T: Scalar>(a: &Matrix<T>, bound: usize) -> Option<usize> {
    let mut acc = a.clone();
    for m in 1..=bound {
        if acc.is_zero() {
            return Some(m);
        }
        if m < bound {
            acc = &acc * a;
        }
    }
    None
}

impl<T: Scalar> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.domain)?;
        f.debug_list().entries(self.to_rows().iter().map(|r| {
            r.iter().map(ToString::to_string).collect::<Vec<_>>()
        })).finish()
    }
}

impl<T: Scalar> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

// Operator forms panic on shape or domain mismatch; the `checked_*` and
// `mat_mul` methods report it instead.
impl<'a, T: Scalar> Add for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: Self) -> Matrix<T> {
        self.checked_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a, T: Scalar> Sub for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: Self) -> Matrix<T> {
        self.checked_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a, T: Scalar> Mul for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn mul(self, rhs: Self) -> Matrix<T> {
        self.mat_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<'a, T: Scalar> Neg for &'a Matrix<T> {
    type Output = Matrix<T>;
    fn neg(self) -> Matrix<T> {
        let entries = self.entries.iter().map(|a| -a.clone()).collect();
        Matrix { entries, ..*self }
    }
}
