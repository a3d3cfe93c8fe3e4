//! Exact rational multiples of π and the `a·pi/b` literal syntax.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{GeomError, Result};

/// The real number `num/den · π`, kept in lowest terms with `den > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PiRational {
    pub num: i64,
    pub den: i64,
}

impl PiRational {
    pub fn new(num: i64, den: i64) -> Result<Self> {
        if den == 0 {
            return Err(GeomError::domain("zero denominator"));
        }
        let g = num.gcd(&den).max(1);
        let s = if den < 0 { -1 } else { 1 };
        Ok(PiRational {
            num: s * num / g,
            den: s * den / g,
        })
    }

    pub fn value(self) -> f64 {
        self.num as f64 * PI / self.den as f64
    }
}

impl fmt::Display for PiRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.num, self.den) {
            (0, _) => write!(f, "0"),
            (1, 1) => write!(f, "pi"),
            (-1, 1) => write!(f, "-pi"),
            (n, 1) => write!(f, "{n}pi"),
            (1, d) => write!(f, "pi/{d}"),
            (-1, d) => write!(f, "-pi/{d}"),
            (n, d) => write!(f, "{n}pi/{d}"),
        }
    }
}

/// A parsed numeric literal: either an exact multiple of π or a plain real.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PiExpr {
    Rational(PiRational),
    Real(f64),
}

impl PiExpr {
    pub fn value(self) -> f64 {
        match self {
            PiExpr::Rational(r) => r.value(),
            PiExpr::Real(x) => x,
        }
    }

    pub fn as_rational(self) -> Option<PiRational> {
        match self {
            PiExpr::Rational(r) => Some(r),
            PiExpr::Real(_) => None,
        }
    }
}

/// Exact decimal (e.g. `9.5`, `-2`, `.25`) as a reduced fraction.
fn parse_decimal(s: &str) -> Option<(i64, i64)> {
    let (neg, body) = match s.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    if body.is_empty() {
        return None;
    }
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit())
        || (int_part.is_empty() && frac_part.is_empty())
        || frac_part.len() > 12
    {
        return None;
    }
    let den = 10i64.checked_pow(frac_part.len() as u32)?;
    let digits = format!("{int_part}{frac_part}");
    let num: i64 = if digits.is_empty() { 0 } else { digits.parse().ok()? };
    let g = num.gcd(&den).max(1);
    Some((if neg { -num / g } else { num / g }, den / g))
}

impl FromStr for PiExpr {
    type Err = GeomError;

    fn from_str(raw: &str) -> Result<Self> {
        let s: String = raw.chars().filter(|c| !c.is_whitespace()).collect();
        let lower = s.to_ascii_lowercase();
        let bad = || GeomError::Domain(format!("cannot parse number `{raw}`"));
        if let Some(pos) = lower.find("pi") {
            let coef = lower[..pos].trim_end_matches('*');
            let rest = &lower[pos + 2..];
            let (cn, cd) = match coef {
                "" | "+" => (1, 1),
                "-" => (-1, 1),
                c => parse_decimal(c).ok_or_else(bad)?,
            };
            let den: i64 = match rest {
                "" => 1,
                r => r
                    .strip_prefix('/')
                    .and_then(|d| d.parse().ok())
                    .filter(|d: &i64| *d != 0)
                    .ok_or_else(bad)?,
            };
            let d = cd.checked_mul(den).ok_or_else(bad)?;
            return Ok(PiExpr::Rational(PiRational::new(cn, d)?));
        }
        let x: f64 = lower.parse().map_err(|_| bad())?;
        if !x.is_finite() {
            return Err(bad());
        }
        Ok(PiExpr::Real(x))
    }
}

/// Parse a literal such as `2pi/3`, `pi`, `9.5pi` or `1.25` to radians.
pub fn parse_real(s: &str) -> Result<f64> {
    s.parse::<PiExpr>().map(PiExpr::value)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> (i64, i64) {
        let r = s.parse::<PiExpr>().unwrap().as_rational().unwrap();
        (r.num, r.den)
    }

    #[test]
    fn rational_forms() {
        assert_eq!(rat("2pi/3"), (2, 3));
        assert_eq!(rat("pi"), (1, 1));
        assert_eq!(rat("pi/6"), (1, 6));
        assert_eq!(rat("2*pi/3"), (2, 3));
        assert_eq!(rat("9.5pi"), (19, 2));
        assert_eq!(rat("-pi/2"), (-1, 2));
        assert_eq!(rat("4pi/6"), (2, 3));
        assert_eq!(rat("2PI / 7.5".replace(".5", "").as_str()), (2, 7));
    }

    #[test]
    fn plain_reals_and_errors() {
        assert_eq!(parse_real("1.25").unwrap(), 1.25);
        assert!(parse_real("pi/0").is_err());
        assert!(parse_real("xpi").is_err());
        assert!(parse_real("2pi/").is_err());
        assert!(parse_real("inf").is_err());
    }

    #[test]
    fn display_round_trip() {
        for s in ["pi", "2pi/3", "-pi/7", "19pi/2"] {
            let r: PiExpr = s.parse().unwrap();
            assert_eq!(r.as_rational().map(|x| x.to_string()).unwrap(), s);
        }
    }
}
