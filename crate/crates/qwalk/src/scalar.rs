//! Scalar abstraction: all dense kernels are generic over the real field,
//! with `f64` as the working precision everywhere in the CLI.

use nalgebra::{Complex, RealField};
use num_traits::FromPrimitive;

pub trait Scalar: RealField + FromPrimitive + Copy {
    fn eps() -> Self;
    fn to_f64(self) -> f64;
    /// Lift an `f64` constant (tolerances, matrix entries) into the field.
    fn lift(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }
}

impl Scalar for f32 {
    fn eps() -> Self {
        f32::EPSILON
    }
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    fn eps() -> Self {
        f64::EPSILON
    }
    fn to_f64(self) -> f64 {
        self
    }
}

/// Complex constant from `f64` parts.
pub fn c<T: Scalar>(re: f64, im: f64) -> Complex<T> {
    Complex::new(T::lift(re), T::lift(im))
}

/// A tolerance that is at least a few hundred ulps, so that the `f64`-pinned
/// defaults stay meaningful when instantiated at lower precision.
pub fn scaled_tol<T: Scalar>(base: f64) -> T {
    let b = T::lift(base);
    let floor = T::eps() * T::lift(512.0);
    if floor > b {
        floor
    } else {
        b
    }
}
