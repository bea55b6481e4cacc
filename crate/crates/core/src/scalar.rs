//! Exact rational scalars.
//!
//! Every quantity in the algebraic core is an element of ℚ backed by
//! arbitrary-precision integers, so no comparison in this crate needs a
//! tolerance.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// An exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseScalarError {
    #[error("empty rational literal")]
    Empty,
    #[error("malformed rational literal {0:?} (expected \"p\" or \"p/q\")")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

fn parse_integer(s: &str, whole: &str) -> Result<BigInt, ParseScalarError> {
    let digits = s.strip_prefix('-').unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseScalarError::Malformed(whole.to_string()));
    }
    s.parse::<BigInt>()
        .map_err(|_| ParseScalarError::Malformed(whole.to_string()))
}

/// Parses `"p"` or `"p/q"` with an optional leading minus sign on `p`.
/// Decimal points, exponents, whitespace and signs on the denominator are
/// rejected so that every accepted literal denotes exactly one rational.
pub fn parse_scalar(s: &str) -> Result<Scalar, ParseScalarError> {
    if s.is_empty() {
        return Err(ParseScalarError::Empty);
    }
    match s.split_once('/') {
        None => Ok(Scalar::from_integer(parse_integer(s, s)?)),
        Some((num, den)) => {
            if den.starts_with('-') {
                return Err(ParseScalarError::Malformed(s.to_string()));
            }
            let num = parse_integer(num, s)?;
            let den = parse_integer(den, s)?;
            if den.is_zero() {
                return Err(ParseScalarError::ZeroDenominator(s.to_string()));
            }
            Ok(Scalar::new(num, den))
        }
    }
}

/// Canonical text form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_scalar(x: &Scalar) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Lossy conversion used only by the floating-point conformality check.
pub fn to_f64(x: &Scalar) -> f64 {
    use num_traits::ToPrimitive;
    x.to_f64().unwrap_or(f64::NAN)
}

pub fn dot(x: &[Scalar], y: &[Scalar]) -> Scalar {
    x.iter().zip(y).fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
}

pub fn is_zero_vector(v: &[Scalar]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn unit_vector(n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); n];
    v[i] = Scalar::one();
    v
}

pub fn vector_from_ints(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| int(x)).collect()
}

pub(crate) fn axpy(acc: &mut [Scalar], a: &Scalar, x: &[Scalar]) {
    if a.is_zero() {
        return;
    }
    for (t, xi) in acc.iter_mut().zip(x) {
        if !xi.is_zero() {
            *t += a * xi;
        }
    }
}
