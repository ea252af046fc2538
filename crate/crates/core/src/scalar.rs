//! Scalar abstraction shared by the algebraic layer.
//!
//! Polynomials and matrices are generic over [`Scalar`], which covers the
//! binary floats and exact rationals. Routines that need transcendental
//! functions or an ordering-aware convergence test (eigenvalues, root
//! finding) additionally require [`Real`].

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{Float, Num, Signed, ToPrimitive, Zero};

pub trait Scalar: Num + Clone + PartialOrd + Debug + Display + Send + Sync + 'static {
    /// Absolute value.
    fn magnitude(&self) -> Self;

    /// Whether `self` should be pruned as zero relative to `scale`, the
    /// largest magnitude among its peers. Exact types only prune exact zeros.
    fn negligible(&self, scale: &Self) -> bool;

    /// Equality up to a relative tolerance; exact types ignore `rel`.
    fn near(&self, other: &Self, rel: f64, scale: &Self) -> bool;

    fn from_f64(x: f64) -> Self;

    fn to_f64(&self) -> f64;

    fn from_i64(x: i64) -> Self;

    fn is_exact() -> bool;
}

pub trait Real: Scalar + Float {}

impl<T: Scalar + Float> Real for T {}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn magnitude(&self) -> Self {
                self.abs()
            }
            fn negligible(&self, scale: &Self) -> bool {
                *self == 0.0 || self.abs() < (1e-14 as $t) * scale.abs()
            }
            fn near(&self, other: &Self, rel: f64, scale: &Self) -> bool {
                ((*self - *other).abs() as f64) <= rel * (1.0 + scale.abs() as f64)
            }
            fn from_f64(x: f64) -> Self {
                x as $t
            }
            fn to_f64(&self) -> f64 {
                *self as f64
            }
            fn from_i64(x: i64) -> Self {
                x as $t
            }
            fn is_exact() -> bool {
                false
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

impl Scalar for BigRational {
    fn magnitude(&self) -> Self {
        self.abs()
    }
    fn negligible(&self, _scale: &Self) -> bool {
        self.is_zero()
    }
    fn near(&self, other: &Self, _rel: f64, _scale: &Self) -> bool {
        self == other
    }
    fn from_f64(x: f64) -> Self {
        BigRational::from_float(x).expect("finite float")
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
    fn from_i64(x: i64) -> Self {
        BigRational::from_integer(BigInt::from(x))
    }
    fn is_exact() -> bool {
        true
    }
}

impl Scalar for Rational64 {
    fn magnitude(&self) -> Self {
        self.abs()
    }
    fn negligible(&self, _scale: &Self) -> bool {
        self.is_zero()
    }
    fn near(&self, other: &Self, _rel: f64, _scale: &Self) -> bool {
        self == other
    }
    fn from_f64(x: f64) -> Self {
        Rational64::approximate_float(x).expect("representable float")
    }
    fn to_f64(&self) -> f64 {
        *self.numer() as f64 / *self.denom() as f64
    }
    fn from_i64(x: i64) -> Self {
        Rational64::from_integer(x)
    }
    fn is_exact() -> bool {
        true
    }
}

/// `num / den` as a scalar.
pub fn ratio<T: Scalar>(num: i64, den: i64) -> T {
    T::from_i64(num) / T::from_i64(den)
}

pub(crate) fn max_magnitude<'a, T: Scalar>(values: impl IntoIterator<Item = &'a T>) -> T {
    values.into_iter().fold(T::zero(), |m, v| {
        let a = v.magnitude();
        if a > m {
            a
        } else {
            m
        }
    })
}

pub(crate) fn sign_of<T: Scalar>(x: &T) -> i32 {
    if x.is_zero() {
        0
    } else if *x > T::zero() {
        1
    } else {
        -1
    }
}
