//! JSON formats for polynomials, matrices and partitions.
//!
//! Polynomial: `{"n": 3, "terms": [{"subset": [1, 2], "coeff": 1.5}]}` where a
//! coefficient is a number, a decimal string or a rational string `"p/q"`.
//! Matrix: `{"n": 2, "rows": [[2, 1], [1, 2]]}`. Partition: `{"blocks": [[1, 2], [3]]}`.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::poly::{MultiAffinePoly, SubsetMask};
use crate::spectral::DerivationMatrix;
use crate::symmat::{Partition, SymMatrix};
use crate::BigRational;

/// Conversion between coefficients and JSON values.
pub trait CoeffCodec: Sized {
    fn decode(v: &Value) -> Result<Self>;
    fn encode(&self) -> Value;
}

impl CoeffCodec for f64 {
    fn decode(v: &Value) -> Result<Self> {
        match v {
            Value::Number(x) => x.as_f64().ok_or_else(|| Error::Parse(format!("bad number {x}"))),
            Value::String(s) => {
                let x = match s.split_once('/') {
                    Some(_) => parse_rational(s)?.to_f64_lossy(),
                    None => s.trim().parse::<f64>().map_err(|e| Error::Parse(format!("'{s}': {e}")))?,
                };
                if x.is_finite() {
                    Ok(x)
                } else {
                    Err(Error::Parse(format!("non-finite coefficient '{s}'")))
                }
            }
            other => Err(Error::Parse(format!("expected a number, got {other}"))),
        }
    }

    fn encode(&self) -> Value {
        serde_json::Number::from_f64(*self).map_or(Value::Null, Value::Number)
    }
}

impl CoeffCodec for BigRational {
    fn decode(v: &Value) -> Result<Self> {
        match v {
            Value::Number(x) => parse_rational(&x.to_string()),
            Value::String(s) => parse_rational(s),
            other => Err(Error::Parse(format!("expected a number, got {other}"))),
        }
    }

    fn encode(&self) -> Value {
        Value::String(format!("{}/{}", self.numer(), self.denom()))
    }
}

trait LossyF64 {
    fn to_f64_lossy(&self) -> f64;
}

impl LossyF64 for BigRational {
    fn to_f64_lossy(&self) -> f64 {
        crate::scalar::Scalar::to_f64(self)
    }
}

/// Parses `"p/q"`, an integer, or a plain decimal such as `"-0.125"` or
/// `"1.5e-3"`, exactly.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational: '{s}'"));
    if let Some((p, q)) = s.split_once('/') {
        let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
        let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
        if q.is_zero() {
            return Err(Error::Parse(format!("zero denominator in '{s}'")));
        }
        return Ok(BigRational::new(p, q));
    }
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().map_err(|_| bad())?),
        None => (s, 0),
    };
    let (int_part, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if frac.chars().any(|c| !c.is_ascii_digit()) || int_part.is_empty() && frac.is_empty() {
        return Err(bad());
    }
    let digits = format!("{int_part}{frac}");
    let digits = if digits == "-" || digits == "+" { format!("{digits}0") } else { digits };
    let numer = BigInt::from_str(&digits).map_err(|_| bad())?;
    let shift = exp - frac.len() as i32;
    let ten = BigInt::from(10);
    let scale = num_traits::pow(ten, shift.unsigned_abs() as usize);
    Ok(if shift >= 0 {
        BigRational::from_integer(numer * scale)
    } else {
        BigRational::new(numer, scale)
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct TermJson {
    subset: Vec<usize>,
    coeff: Value,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PolyJson {
    n: usize,
    terms: Vec<TermJson>,
}

pub fn poly_from_value<T: CoeffCodec + crate::scalar::Scalar>(v: &Value) -> Result<MultiAffinePoly<T>> {
    let pj: PolyJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let terms = pj
        .terms
        .iter()
        .map(|t| Ok((SubsetMask::from_indices(pj.n, &t.subset)?, T::decode(&t.coeff)?)))
        .collect::<Result<Vec<_>>>()?;
    MultiAffinePoly::new(pj.n, terms)
}

pub fn poly_from_json<T: CoeffCodec + crate::scalar::Scalar>(s: &str) -> Result<MultiAffinePoly<T>> {
    poly_from_value(&serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?)
}

pub fn poly_to_value<T: CoeffCodec + crate::scalar::Scalar>(p: &MultiAffinePoly<T>) -> Value {
    let pj = PolyJson {
        n: p.n(),
        terms: p
            .terms()
            .map(|(s, c)| TermJson {
                subset: s.indices(),
                coeff: c.encode(),
            })
            .collect(),
    };
    serde_json::to_value(pj).expect("plain data serializes")
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    rows: Vec<Vec<Value>>,
}

pub fn matrix_from_value<T: CoeffCodec + crate::scalar::Scalar>(v: &Value) -> Result<SymMatrix<T>> {
    let mj: MatrixJson = serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    if mj.rows.len() != mj.n {
        return Err(Error::DimensionMismatch {
            expected: mj.n,
            got: mj.rows.len(),
        });
    }
    let rows = mj
        .rows
        .iter()
        .map(|r| r.iter().map(T::decode).collect::<Result<Vec<T>>>())
        .collect::<Result<Vec<_>>>()?;
    SymMatrix::new(rows)
}

pub fn matrix_from_json<T: CoeffCodec + crate::scalar::Scalar>(s: &str) -> Result<SymMatrix<T>> {
    matrix_from_value(&serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?)
}

pub fn matrix_to_value<T: CoeffCodec + crate::scalar::Scalar>(a: &SymMatrix<T>) -> Value {
    let rows: Vec<Vec<Value>> = a.rows().iter().map(|r| r.iter().map(|x| x.encode()).collect()).collect();
    serde_json::json!({ "n": a.n(), "rows": rows })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct PartitionJson {
    blocks: Vec<Vec<usize>>,
}

pub fn partition_from_json(s: &str) -> Result<Partition> {
    let pj: PartitionJson = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
    let n = pj.blocks.iter().map(|b| b.len()).sum();
    Partition::new(n, pj.blocks)
}

pub fn partition_to_value(p: &Partition) -> Value {
    serde_json::json!({ "blocks": p.blocks() })
}

/// Matrix JSON plus the subset labels of the wedge basis.
pub fn derivation_to_value<T: CoeffCodec + crate::scalar::Scalar>(d: &DerivationMatrix<T>) -> Value {
    let mut v = matrix_to_value(&d.entries);
    v["basis"] = serde_json::to_value(&d.basis).expect("subset lists serialize");
    v["k"] = d.k.into();
    v["d"] = d.d.into();
    v["n_vars"] = d.n.into();
    v
}

/// `p/q` with `q = 1` written as a plain integer.
pub fn rational_string(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else if r.is_negative() {
        format!("-{}/{}", r.numer().abs(), r.denom())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/4").unwrap(), ratio(3, 4));
        assert_eq!(parse_rational("-0.125").unwrap(), ratio(-1, 8));
        assert_eq!(parse_rational("1.5e-3").unwrap(), ratio(3, 2000));
        assert_eq!(parse_rational("2E2").unwrap(), ratio(200, 1));
        assert_eq!(parse_rational("7").unwrap(), ratio(7, 1));
        for bad in ["", "1/0", "a", "1.2.3", "."] {
            assert!(parse_rational(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn poly_round_trip() {
        let src = r#"{"n": 3, "terms": [{"subset": [1, 2], "coeff": 1}, {"subset": [3, 2], "coeff": "0.5"}, {"subset": [], "coeff": "1/4"}]}"#;
        let p: MultiAffinePoly<f64> = poly_from_json(src).unwrap();
        assert_eq!(p.num_terms(), 3);
        assert_eq!(p.coeff(&SubsetMask::from_indices(3, &[2, 3]).unwrap()), 0.5);
        let back: MultiAffinePoly<f64> = poly_from_value(&poly_to_value(&p)).unwrap();
        assert_eq!(back, p);
        let q: MultiAffinePoly<BigRational> = poly_from_json(src).unwrap();
        assert_eq!(q.coeff(&SubsetMask::empty(3).unwrap()), ratio(1, 4));
        let back: MultiAffinePoly<BigRational> = poly_from_value(&poly_to_value(&q)).unwrap();
        assert_eq!(back, q);
    }

    #[test]
    fn malformed_inputs_are_errors() {
        assert!(poly_from_json::<f64>("{").is_err());
        assert!(poly_from_json::<f64>(r#"{"n": 2, "terms": [{"subset": [3], "coeff": 1}]}"#).is_err());
        assert!(poly_from_json::<f64>(r#"{"n": 2, "terms": [{"subset": [1], "coeff": true}]}"#).is_err());
        assert!(matrix_from_json::<f64>(r#"{"n": 2, "rows": [[1, 2], [3, 1]]}"#).is_err());
        assert!(matrix_from_json::<f64>(r#"{"n": 3, "rows": [[1, 2], [2, 1]]}"#).is_err());
        assert!(partition_from_json(r#"{"blocks": [[1, 2], [2]]}"#).is_err());
    }

    #[test]
    fn matrix_and_partition_round_trip() {
        let a: SymMatrix<f64> = matrix_from_json(r#"{"n": 2, "rows": [[2, 1], [1, 2]]}"#).unwrap();
        assert_eq!(matrix_from_value::<f64>(&matrix_to_value(&a)).unwrap(), a);
        let p = partition_from_json(r#"{"blocks": [[3], [1, 2]]}"#).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 2], vec![3]]);
        assert_eq!(partition_to_value(&p)["blocks"][1][0], 3);
    }

    #[test]
    fn rational_strings() {
        assert_eq!(rational_string(&ratio(-3, 6)), "-1/2");
        assert_eq!(rational_string(&ratio(8, 2)), "4");
    }
}
