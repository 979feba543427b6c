use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use zdg_core::{MatrixKind, Rational, RingParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MatrixArg {
    Adjacency,
    Laplacian,
    Signless,
    AAlpha,
    DistanceLaplacian,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Closed,
    Dense,
    Both,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Closed => "closed",
            Method::Dense => "dense",
            Method::Both => "both",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
    Edgelist,
    Dot,
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.to_possible_value().expect("no skipped variants").get_name())
    }
}

/// `alpha` as typed: either an exact `num/den` or a decimal literal.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphaArg {
    pub value: Rational,
    pub from_decimal: bool,
}

impl FromStr for AlphaArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || format!("invalid alpha {s:?}: expected num/den or a decimal such as 0.25");
        if let Some((num, den)) = s.split_once('/') {
            let num: BigInt = num.trim().parse().map_err(|_| bad())?;
            let den: BigInt = den.trim().parse().map_err(|_| bad())?;
            if den.is_zero() {
                return Err(format!("invalid alpha {s:?}: zero denominator"));
            }
            return Ok(Self {
                value: Rational::new(num, den),
                from_decimal: false,
            });
        }
        let (negative, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s),
        };
        let (int, frac) = body.split_once('.').unwrap_or((body, ""));
        let digits_ok = |d: &str| d.bytes().all(|b| b.is_ascii_digit());
        if (int.is_empty() && frac.is_empty()) || !digits_ok(int) || !digits_ok(frac) {
            return Err(bad());
        }
        let numer: BigInt = format!("{int}{frac}").parse().map_err(|_| bad())?;
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        let value = Rational::new(if negative { -numer } else { numer }, denom);
        Ok(Self {
            value,
            from_decimal: body.contains('.'),
        })
    }
}

/// Validated settings shared by every subcommand.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub params: RingParams,
    pub alpha: Option<Rational>,
    pub matrix: MatrixArg,
    pub method: Method,
    pub tol: f64,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub dense_budget: usize,
}

impl RunConfig {
    pub fn matrix_kind(&self) -> MatrixKind {
        match self.matrix {
            MatrixArg::Adjacency => MatrixKind::Adjacency,
            MatrixArg::Laplacian => MatrixKind::Laplacian,
            MatrixArg::Signless => MatrixKind::Signless,
            MatrixArg::AAlpha => MatrixKind::AAlpha(self.alpha.clone().unwrap_or_else(half)),
            MatrixArg::DistanceLaplacian => MatrixKind::DistanceLaplacian,
        }
    }
}

pub fn half() -> Rational {
    Rational::new(BigInt::one(), BigInt::from(2))
}

pub fn check_tolerance(tol: f64) -> Result<f64, String> {
    if tol.is_finite() && tol > 0.0 {
        Ok(tol)
    } else {
        Err(format!("tolerance must be positive (got {tol})"))
    }
}

pub fn check_alpha(alpha: &Rational) -> Result<(), String> {
    if alpha < &Rational::zero() || alpha > &Rational::one() {
        Err(format!("alpha must lie in [0, 1] (got {alpha})"))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn parses_fractions_and_decimals() {
        let a: AlphaArg = "1/2".parse().unwrap();
        assert_eq!(a.value, r(1, 2));
        assert!(!a.from_decimal);
        let b: AlphaArg = "0.25".parse().unwrap();
        assert_eq!(b.value, r(1, 4));
        assert!(b.from_decimal);
        assert_eq!("1".parse::<AlphaArg>().unwrap().value, r(1, 1));
        assert_eq!(".75".parse::<AlphaArg>().unwrap().value, r(3, 4));
        assert_eq!("-0.5".parse::<AlphaArg>().unwrap().value, r(-1, 2));
        assert_eq!(" 6/8 ".parse::<AlphaArg>().unwrap().value, r(3, 4));
    }

    #[test]
    fn rejects_garbage() {
        for s in ["", ".", "1/0", "a/2", "0.2.5", "1e-3", "half"] {
            assert!(s.parse::<AlphaArg>().is_err(), "{s}");
        }
    }

    #[test]
    fn range_checks() {
        assert!(check_alpha(&r(0, 1)).is_ok());
        assert!(check_alpha(&r(1, 1)).is_ok());
        assert!(check_alpha(&r(5, 4)).is_err());
        assert!(check_tolerance(0.0).is_err());
        assert!(check_tolerance(f64::NAN).is_err());
        assert!(check_tolerance(1e-8).is_ok());
    }
}
