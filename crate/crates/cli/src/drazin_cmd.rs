//! `drazin <file>`: Drazin inverse, index and spectral idempotent of one
//! matrix in the text format.

use drazin_core::drazin::{drazin, integer_drazin};
use drazin_core::matrix::RawMatrix;
use drazin_core::{
    Domain, DrazinError, DrazinResult, Integer, Matrix, ModularInt, ModularScalarRing, PrimeFieldElem, Rational,
    RingContext, Scalar,
};

use crate::CliError;

/// Printed result, or `None` when the element has no Drazin inverse.
pub fn run_drazin(text: &str) -> Result<Option<String>, CliError> {
    let raw = RawMatrix::parse(text).map_err(|e| CliError::Input(e.to_string()))?;
    if raw.rows != raw.cols {
        return Err(CliError::Input(format!("matrix is {}x{}, not square", raw.rows, raw.cols)));
    }
    let domain = raw.domain;
    let result = match domain {
        Domain::Rationals => field::<Rational>(raw),
        Domain::PrimeField(_) => field::<PrimeFieldElem>(raw),
        Domain::Modular(n) => {
            let a = scalar_entry::<ModularInt>(raw, "Zn")?;
            let ring = ModularScalarRing::new(n)?;
            ring.drazin(&a).map(|r| print_scalar(domain, r))
        }
        Domain::Integers => {
            let a = scalar_entry::<Integer>(raw, "Z")?;
            integer_drazin(&a).map(|r| print_scalar(domain, r))
        }
    };
    match result {
        Ok(s) => Ok(Some(s)),
        Err(DrazinError::NotDrazinInvertible) => Ok(None),
        Err(DrazinError::Matrix(e)) => Err(CliError::Input(e.to_string())),
        Err(e) => Err(e.into()),
    }
}

fn field<T: Scalar>(raw: RawMatrix) -> Result<String, DrazinError> {
    let a: Matrix<T> = raw.into_matrix()?;
    let r = drazin(&a)?;
    Ok(format_result(&r.d, r.index, &r.pi))
}

fn scalar_entry<T: Scalar>(raw: RawMatrix, tag: &str) -> Result<T, CliError> {
    if raw.rows != 1 {
        return Err(CliError::Input(format!("{tag} inputs must be 1x1 scalars, got {}x{}", raw.rows, raw.cols)));
    }
    let m: Matrix<T> = raw.into_matrix().map_err(|e| CliError::Input(e.to_string()))?;
    Ok(m.get(0, 0).clone())
}

fn print_scalar<T: Scalar>(domain: Domain, r: DrazinResult<T>) -> String {
    let one = |v: T| Matrix::new(domain, 1, 1, vec![v]).expect("1x1");
    format_result(&one(r.d), r.index, &one(r.pi))
}

fn format_result<T: Scalar>(d: &Matrix<T>, index: usize, pi: &Matrix<T>) -> String {
    format!("{}# index {index}\n{}", d.to_text(), pi.to_text())
}
