//! Exact-arithmetic toolkit for the algebra of virtual polytopes: convex
//! chains under the Minkowski product, polynomial measures, winding-number
//! chains of Gauss-type maps, nerve complexes of affine-subspace unions,
//! and a BKK root-counting harness.
//!
//! All geometric computation runs over arbitrary-precision rationals; the
//! only numeric components are the smooth-support demonstrator and the
//! complex root finder backing the BKK harness.

pub mod error;
pub mod num;

pub mod vector;
pub mod linalg;
pub mod polytope;
pub mod fan;
pub mod poly;
pub mod refine;
pub mod chain;
pub mod measures;
pub mod arrangement;
pub mod winding;
pub mod affine;
pub mod simplicial;
pub mod nerve;
pub mod roots;
pub mod bkk;
pub mod json;
pub mod svg;
pub mod suite;

pub use error::{Error, Result};

/// Arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Arbitrary-precision rational, the exact scalar of the toolkit.
pub type Rat = num_rational::BigRational;

/// Parses a rational from `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let parse_int = |t: &str| -> Result<Int> {
        t.parse::<Int>()
            .map_err(|_| Error::Parse(format!("bad integer `{t}`")))
    };
    match s.split_once('/') {
        Some((p, q)) => {
            let den = parse_int(q)?;
            if num_traits::Zero::is_zero(&den) {
                return Err(Error::Parse("zero denominator".into()));
            }
            Ok(Rat::new(parse_int(p)?, den))
        }
        None => Ok(Rat::from_integer(parse_int(s)?)),
    }
}

/// Formats a rational as `"p/q"`, or `"p"` when the denominator is one.
pub fn format_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rat_round_trip() {
        for s in ["3", "-7", "1/2", "-22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("4/6").unwrap(), parse_rat("2/3").unwrap());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
