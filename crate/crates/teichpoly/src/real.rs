//! Precision plumbing shared by the numeric layers: digit/bit conversion,
//! exact decimal parsing, and directed-rounding helpers used where an
//! enclosure must stay rigorous.

use crate::error::{Error, Result};
use rug::float::Round;
use rug::ops::{DivAssignRound, DivRounding};
use rug::{Float, Integer, Rational};

/// Guard digits added on top of the requested precision for internal work.
pub const GUARD_DIGITS: u32 = 15;

/// Binary precision needed to carry `digits` decimal digits, with headroom.
pub fn bits(digits: u32) -> u32 {
    // log2(10) < 3.3220
    (digits as f64 * 3.3219280948873626).ceil() as u32 + 32
}

pub fn float_from_rational(q: &Rational, prec_bits: u32) -> Float {
    Float::with_val(prec_bits, q)
}

/// ln of a positive rational, rounded towards -infinity.
pub fn ln_down(q: &Rational, prec_bits: u32) -> Float {
    let (mut f, _) = Float::with_val_round(prec_bits, q, Round::Down);
    f.ln_round(Round::Down);
    f
}

/// ln of a positive rational, rounded towards +infinity.
pub fn ln_up(q: &Rational, prec_bits: u32) -> Float {
    let (mut f, _) = Float::with_val_round(prec_bits, q, Round::Up);
    f.ln_round(Round::Up);
    f
}

pub fn div_down(a: &Float, b: &Float, prec_bits: u32) -> Float {
    let mut r = Float::with_val(prec_bits, a);
    r.div_assign_round(b, Round::Down);
    r
}

pub fn div_up(a: &Float, b: &Float, prec_bits: u32) -> Float {
    let mut r = Float::with_val(prec_bits, a);
    r.div_assign_round(b, Round::Up);
    r
}

/// Exact rational value of a decimal literal like `-12.034e-5` or `1/3`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let fail = || Error::Parse {
        line: 0,
        column: 0,
        message: format!("invalid rational literal: {s:?}"),
    };
    if s.is_empty() {
        return Err(fail());
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: Integer = num.trim().parse().map_err(|_| fail())?;
        let d: Integer = den.trim().parse().map_err(|_| fail())?;
        if d == 0 {
            return Err(fail());
        }
        return Ok(Rational::from((n, d)));
    }
    let (mantissa, exp10) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().map_err(|_| fail())?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    let digits: String = format!("{int_part}{frac_part}");
    if digits.is_empty() || digits == "-" || digits == "+" {
        return Err(fail());
    }
    let n: Integer = digits.parse().map_err(|_| fail())?;
    let shift = exp10 - frac_part.len() as i64;
    let mut q = Rational::from(n);
    let pow = Integer::from(Integer::u_pow_u(10, shift.unsigned_abs() as u32));
    if shift >= 0 {
        q *= pow;
    } else {
        q /= pow;
    }
    Ok(q)
}

/// Decimal string of a rational with `digits` places after the point,
/// rounded down (towards -infinity) or up. Outward rounding of an interval
/// uses down on the lower endpoint and up on the upper.
pub fn decimal_of_rational(q: &Rational, digits: u32, round_up: bool) -> String {
    let scale = Integer::from(Integer::u_pow_u(10, digits));
    let scaled = Rational::from(q * &scale);
    let n: Integer = if round_up {
        // ceil(a/b) = -floor(-a/b)
        -Integer::from(-scaled.numer()).div_floor(scaled.denom().clone())
    } else {
        scaled.numer().clone().div_floor(scaled.denom().clone())
    };
    let neg = n < 0;
    let mut digits_str = Integer::from(n.abs_ref()).to_string();
    let d = digits as usize;
    if digits_str.len() <= d {
        digits_str = format!("{}{}", "0".repeat(d + 1 - digits_str.len()), digits_str);
    }
    let split = digits_str.len() - d;
    let (int_part, frac_part) = digits_str.split_at(split);
    let sign = if neg { "-" } else { "" };
    if d == 0 {
        format!("{sign}{int_part}")
    } else {
        format!("{sign}{int_part}.{frac_part}")
    }
}

/// Fixed-point decimal rendering of a float for reports.
pub fn decimal_of_float(f: &Float, digits: usize) -> String {
    format!("{f:.digits$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_plain_decimals() {
        assert_eq!(parse_rational("0.25").unwrap(), Rational::from((1, 4)));
        assert_eq!(parse_rational("-3").unwrap(), Rational::from(-3));
        assert_eq!(parse_rational("12.5e-1").unwrap(), Rational::from((5, 4)));
        assert_eq!(parse_rational("2/6").unwrap(), Rational::from((1, 3)));
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
    }

    #[test]
    fn decimal_rendering_rounds_outward() {
        let q = Rational::from((1, 3));
        assert_eq!(decimal_of_rational(&q, 4, false), "0.3333");
        assert_eq!(decimal_of_rational(&q, 4, true), "0.3334");
        let neg = Rational::from((-1, 3));
        assert_eq!(decimal_of_rational(&neg, 4, false), "-0.3334");
        assert_eq!(decimal_of_rational(&neg, 4, true), "-0.3333");
        assert_eq!(decimal_of_rational(&Rational::from(7), 0, false), "7");
    }

    #[test]
    fn directed_logs_straddle_the_true_value() {
        let q = parse_rational("2.718281828459045235360287").unwrap();
        let lo = ln_down(&q, 64);
        let hi = ln_up(&q, 64);
        assert!(lo < hi);
        assert!(lo < 1.0 && hi > 0.9999999);
    }
}
