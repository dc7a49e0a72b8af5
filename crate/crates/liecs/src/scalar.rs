//! Exact scalars: rationals and Gaussian rationals.
//!
//! Every quantity in this crate is a [`Rat`] or a [`GRat`]; there is no
//! floating-point path anywhere. Rationals are kept reduced with a positive
//! denominator by `num_rational`, so equality is structural equality.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Reduced rational number with positive denominator.
pub type Rat = BigRational;

/// Element of the field Q(i), with rational real and imaginary parts.
pub type GRat = Complex<Rat>;

/// Shorthand for a rational from an integer pair. Panics on zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

/// Shorthand for an integer rational.
pub fn rint(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Gaussian rational from rational real and imaginary parts.
pub fn gauss(re: Rat, im: Rat) -> GRat {
    Complex::new(re, im)
}

/// Embeds a rational into Q(i).
pub fn gauss_re(re: Rat) -> GRat {
    Complex::new(re, Rat::zero())
}

/// The imaginary unit of Q(i).
pub fn gauss_i() -> GRat {
    Complex::new(Rat::zero(), Rat::one())
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid rational literal {0:?}: expected [sign]digits[/digits]")]
    Malformed(String),
    #[error("zero denominator in {0:?}")]
    ZeroDenominator(String),
}

/// Parses the textual scalar format: optional sign, decimal digits, and an
/// optional `/` followed by positive decimal digits. Examples: `-3/2`, `0`, `7`.
pub fn parse_rational(s: &str) -> Result<Rat, ParseRationalError> {
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (sign, rest) = match s.as_bytes()[0] {
        b'+' => (1, &s[1..]),
        b'-' => (-1, &s[1..]),
        _ => (1, s),
    };
    let (num_str, den_str) = match rest.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (rest, None),
    };
    let all_digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !all_digits(num_str) || !den_str.is_none_or(all_digits) {
        return Err(ParseRationalError::Malformed(s.to_string()));
    }
    let numer: BigInt = num_str.parse().expect("digits parse as BigInt");
    let denom: BigInt = match den_str {
        Some(d) => d.parse().expect("digits parse as BigInt"),
        None => BigInt::one(),
    };
    if denom.is_zero() {
        return Err(ParseRationalError::ZeroDenominator(s.to_string()));
    }
    Ok(Rat::new(BigInt::from(sign) * numer, denom))
}

/// Renders a rational in the same textual format accepted by [`parse_rational`].
pub fn format_rational(r: &Rat) -> String {
    r.to_string()
}

/// Exact square root of a non-negative rational, if it exists in Q.
pub fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    let num = r.numer();
    let den = r.denom();
    let sn = num.sqrt();
    let sd = den.sqrt();
    if &(&sn * &sn) == num && &(&sd * &sd) == den {
        Some(Rat::new(sn, sd))
    } else {
        None
    }
}

/// Sign of a rational as -1, 0 or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_positive() {
        1
    } else if r.is_negative() {
        -1
    } else {
        0
    }
}
