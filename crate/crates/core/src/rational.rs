//! Exact rational scalars and certified comparisons against the two
//! irrational constants that appear in the edge bounds (e and sqrt 22).

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::cmp::Ordering;

/// Exact rational scalar used for every coordinate and every predicate.
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational p/q. Panics on q = 0.
pub fn ratq(p: i64, q: i64) -> Rational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Binomial coefficient C(n, 2) as a rational.
pub fn choose2(n: i64) -> Rational {
    rat(n * (n - 1) / 2)
}

/// Enclosure [lo, hi] of e with hi - lo = 1/(n! * n), from the Taylor tail
/// bound e - sum_{k<=n} 1/k! < 1/(n! * n).
fn e_enclosure(n: u32) -> (Rational, Rational) {
    let mut sum = Rational::zero();
    let mut fact = BigInt::one();
    for k in 0..=n {
        if k > 0 {
            fact *= BigInt::from(k);
        }
        sum += BigRational::new(BigInt::one(), fact.clone());
    }
    let tail = BigRational::new(BigInt::one(), fact * BigInt::from(n));
    (sum.clone(), sum + tail)
}

/// Exact comparison of a rational against e. Terminates because e is
/// irrational, so some enclosure eventually separates the two.
pub fn cmp_with_e(r: &Rational) -> Ordering {
    let mut n = 8;
    loop {
        let (lo, hi) = e_enclosure(n);
        if *r < lo {
            return Ordering::Less;
        }
        if *r > hi {
            return Ordering::Greater;
        }
        n += 8;
    }
}

/// Exact comparison of a rational against sqrt(22).
pub fn cmp_with_sqrt22(r: &Rational) -> Ordering {
    if r.is_negative() {
        return Ordering::Less;
    }
    (r * r).cmp(&rat(22))
}

/// floor(6 e k) as an i64, certified by widening the enclosure of e until the
/// floor is unambiguous.
pub fn floor_6ek(k: i64) -> i64 {
    let mut n = 8;
    loop {
        let (lo, hi) = e_enclosure(n);
        let flo = (rat(6 * k) * lo).floor();
        let fhi = (rat(6 * k) * hi).floor();
        if flo == fhi {
            return flo
                .to_integer()
                .try_into()
                .expect("6ek fits in i64 for supported k");
        }
        n += 8;
    }
}

/// Renders a rational as `p/q`, omitting `/q` when the denominator is 1.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p` or `p/q` with optional sign. Returns None on malformed input
/// or zero denominator.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num.parse().ok()?;
    let d: BigInt = den.parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(BigRational::new(n, d))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn e_comparisons() {
        assert_eq!(cmp_with_e(&ratq(27, 10)), Ordering::Less);
        assert_eq!(cmp_with_e(&ratq(272, 100)), Ordering::Greater);
        // 2.718281828 < e < 2.718281829
        assert_eq!(cmp_with_e(&ratq(2_718_281_828, 1_000_000_000)), Ordering::Less);
        assert_eq!(cmp_with_e(&ratq(2_718_281_829, 1_000_000_000)), Ordering::Greater);
    }

    #[test]
    fn sqrt22_comparisons() {
        assert_eq!(cmp_with_sqrt22(&ratq(469, 100)), Ordering::Less);
        assert_eq!(cmp_with_sqrt22(&ratq(47, 10)), Ordering::Greater);
        assert_eq!(cmp_with_sqrt22(&rat(-3)), Ordering::Less);
    }

    #[test]
    fn floor_6ek_values() {
        // 6e = 16.3096...
        assert_eq!(floor_6ek(1), 16);
        assert_eq!(floor_6ek(3), 48);
        assert_eq!(floor_6ek(10), 163);
    }

    #[test]
    fn parse_format_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7", "0"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert!(parse_rational("1/0").is_none());
        assert!(parse_rational("x").is_none());
        assert_eq!(format_rational(&parse_rational("4/2").unwrap()), "2");
    }
}
