//! Scalar abstractions.
//!
//! Matrix construction only needs field arithmetic and ordering, so it is
//! written against [`Scalar`] and also runs over exact rationals. Everything
//! that needs square roots, transcendental functions or floating-point
//! tolerances is written against [`Real`].

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Float, FloatConst, FromPrimitive, Num, NumAssign, ToPrimitive};

/// Ordered field element: enough to build the spectral matrices exactly.
pub trait Scalar: Clone + PartialOrd + Debug + Num + Neg<Output = Self> + Send + Sync {
    fn from_int(n: i64) -> Self;

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_int(num) / Self::from_int(den)
    }

    fn from_count(n: usize) -> Self {
        Self::from_int(n as i64)
    }

    fn is_positive(&self) -> bool {
        *self > Self::zero()
    }
}

/// Floating-point scalar (`f32` or `f64`).
pub trait Real: Scalar + Float + FloatConst + FromPrimitive + ToPrimitive + NumAssign + Copy + Display + LowerExp + Sum + 'static {
    /// Lossy conversion of an `f64` constant.
    fn c(x: f64) -> Self {
        <Self as FromPrimitive>::from_f64(x).expect("f64 constant representable")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

macro_rules! impl_float {
    ($f:ty) => {
        impl Scalar for $f {
            fn from_int(n: i64) -> Self {
                n as $f
            }
        }
        impl Real for $f {}
    };
}

impl_float!(f32);
impl_float!(f64);

impl Scalar for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

/// Error-free sum: returns `(s, e)` with `s + e == a + b` exactly.
#[inline]
pub(crate) fn two_sum<T: Real>(a: T, b: T) -> (T, T) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

/// Error-free product via fused multiply-add.
#[inline]
pub(crate) fn two_prod<T: Real>(a: T, b: T) -> (T, T) {
    let p = a * b;
    let e = a.mul_add(b, -p);
    (p, e)
}
