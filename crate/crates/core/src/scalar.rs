//! Exact scalars: rationals and Gaussian rationals.

use num_bigint::BigInt;
use num_complex::Complex;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Gaussian rational `re + i·im` with exact rational parts.
pub type Gauss = Complex<BigRational>;

pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn g_int(n: i64) -> Gauss {
    Complex::new(rat(n), Rat::zero())
}

pub fn g_real(r: Rat) -> Gauss {
    Complex::new(r, Rat::zero())
}

pub fn g_i() -> Gauss {
    Complex::new(Rat::zero(), Rat::one())
}

pub fn g_zero() -> Gauss {
    Complex::new(Rat::zero(), Rat::zero())
}

pub fn g_one() -> Gauss {
    Complex::new(Rat::one(), Rat::zero())
}

pub fn is_real(z: &Gauss) -> bool {
    z.im.is_zero()
}

/// Sign of a real rational: -1, 0 or 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

pub fn g_to_c64(z: &Gauss) -> Complex<f64> {
    Complex::new(to_f64(&z.re), to_f64(&z.im))
}

/// Compact human-readable rendering (`3`, `-1/2`, `2i`, `1-i`).
pub fn g_display(z: &Gauss) -> String {
    let re = !z.re.is_zero();
    let im = !z.im.is_zero();
    match (re, im) {
        (false, false) => "0".to_string(),
        (true, false) => z.re.to_string(),
        (false, true) => format!("{}i", z.im),
        (true, true) => {
            if z.im.is_negative() {
                format!("{}-{}i", z.re, -z.im.clone())
            } else {
                format!("{}+{}i", z.re, z.im)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic_is_exact() {
        let a = Complex::new(ratio(1, 3), ratio(-2, 5));
        let b = Complex::new(ratio(3, 7), rat(1));
        let q = &a / &b;
        assert_eq!(q * b, a);
        assert_eq!(g_i() * g_i(), g_int(-1));
    }

    #[test]
    fn display_forms() {
        assert_eq!(g_display(&g_zero()), "0");
        assert_eq!(g_display(&g_int(-3)), "-3");
        assert_eq!(g_display(&(g_i() * g_int(2))), "2i");
        assert_eq!(g_display(&(g_one() - g_i())), "1-1i");
    }
}
