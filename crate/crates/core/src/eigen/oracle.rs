//! Characteristic polynomial of a tridiagonal matrix by the three-term
//! determinant recurrence. Independent of the Sturm/bisection path.

use crate::matrix::Tridiagonal;
use crate::scalar::Real;

/// `det(M − νI) = mantissa · 2^exponent`, with `scale · 2^exponent` the size
/// of the two terms combined in the last step of the recurrence.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CharPolyValue<T> {
    pub mantissa: T,
    pub exponent: i64,
    pub scale: T,
}

impl<T: Real> CharPolyValue<T> {
    /// The plain value; overflows to ±∞ when the exponent is huge, but keeps the sign.
    pub fn value(&self) -> T {
        self.mantissa * T::c(2.0).powi(self.exponent.clamp(-2000, 2000) as i32)
    }

    pub fn signum(&self) -> i8 {
        if self.mantissa > T::zero() {
            1
        } else if self.mantissa < T::zero() {
            -1
        } else {
            0
        }
    }

    /// `|det| / scale`, the value relative to the running scale.
    pub fn relative(&self) -> T {
        if self.scale > T::zero() {
            self.mantissa.abs() / self.scale
        } else {
            self.mantissa.abs()
        }
    }
}

pub fn char_poly_scaled<T: Real>(m: &Tridiagonal<T>, nu: T) -> CharPolyValue<T> {
    let n = m.order();
    // A quarter of the exponent range: products of two rescaled values stay finite.
    let big = T::c(2.0).powf((T::max_value().log2() / T::c(4.0)).floor());
    let small = T::one() / big;
    let (mut f_prev, mut f) = (T::one(), m.diag[0] - nu);
    let mut scale = m.diag[0].abs() + nu.abs();
    let mut exponent: i64 = 0;
    for r in 1..n {
        let cross = m.sub[r - 1] * m.sup[r - 1];
        let d = m.diag[r] - nu;
        let next = d * f - cross * f_prev;
        scale = (d * f).abs() + (cross * f_prev).abs();
        f_prev = f;
        f = next;
        let mag = f.abs().max(f_prev.abs());
        if mag > big || (mag < small && mag > T::zero()) {
            let e = mag.log2().floor();
            let factor = T::c(2.0).powf(-e);
            f = f * factor;
            f_prev = f_prev * factor;
            scale = scale * factor;
            exponent += e.to_i64().unwrap_or(0);
        }
    }
    CharPolyValue { mantissa: f, exponent, scale }
}

/// `det(M − νI)` as a plain number.
pub fn char_poly_oracle<T: Real>(m: &Tridiagonal<T>, nu: T) -> T {
    char_poly_scaled(m, nu).value()
}

/// True if `det(M − νI)` changes sign across `[nu − delta, nu + delta]`.
pub fn sign_change_around<T: Real>(m: &Tridiagonal<T>, nu: T, delta: T) -> bool {
    let a = char_poly_scaled(m, nu - delta).signum();
    let b = char_poly_scaled(m, nu + delta).signum();
    a != 0 && b != 0 && a != b
}
