use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::error::Error;

/// Positive-denominator rational in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Rational {
    num: i64,
    den: i64,
}

fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Rational {
    pub fn new(num: i64, den: i64) -> Result<Self, Error> {
        if den == 0 {
            return Err(Error::UnsupportedParameter("zero denominator".into()));
        }
        let g = gcd(num, den).max(1);
        let sign = if den < 0 { -1 } else { 1 };
        Ok(Rational {
            num: sign * num / g,
            den: sign * den / g,
        })
    }

    pub fn integer(v: i64) -> Self {
        Rational { num: v, den: 1 }
    }

    pub fn num(self) -> i64 {
        self.num
    }

    pub fn den(self) -> i64 {
        self.den
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// True for `0 < self <= 2`.
    pub fn in_half_open_0_2(self) -> bool {
        self.num > 0 && self.num <= 2 * self.den
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Rational {
    type Err = Error;

    /// Parses `num/den` or a bare integer.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = || Error::UnsupportedParameter(format!("expected NUM/DEN, got {s:?}"));
        let (n, d) = match s.trim().split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s.trim(), "1"),
        };
        let num = n.parse().map_err(|_| bad())?;
        let den = d.parse().map_err(|_| bad())?;
        Rational::new(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_reduce() {
        let r: Rational = "4/6".parse().unwrap();
        assert_eq!((r.num(), r.den()), (2, 3));
        let r: Rational = "2".parse().unwrap();
        assert_eq!(r, Rational::integer(2));
        let r: Rational = "3/-4".parse().unwrap();
        assert_eq!((r.num(), r.den()), (-3, 4));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
        assert!("0.5".parse::<Rational>().is_err());
        assert_eq!(Rational::new(8, 5).unwrap().to_string(), "8/5");
    }

    #[test]
    fn range_check() {
        assert!(Rational::integer(2).in_half_open_0_2());
        assert!(!Rational::integer(0).in_half_open_0_2());
        assert!(!Rational::new(5, 2).unwrap().in_half_open_0_2());
    }
}
