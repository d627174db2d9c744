//! Coefficient scalars: exact Gaussian rationals and floating complex numbers.
//!
//! All symbolic arithmetic in this crate runs over [`GaussianRational`], the
//! field Q(i). Numeric evaluation runs over [`Complex64`]. The [`Scalar`]
//! trait lets the polynomial and series code be generic over the two.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// A field scalar usable as a polynomial/series coefficient.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Sub<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
    + 'static
{
    /// True when arithmetic in this scalar is exact (no rounding).
    const EXACT: bool;

    fn from_int(n: i64) -> Self;
    fn from_ratio(num: i64, den: i64) -> Self;
    fn to_complex(&self) -> Complex64;
    /// An upper bound for the modulus (exact `|re|+|im|` in the exact case).
    fn abs_upper(&self) -> f64;
    /// Multiplicative inverse. Panics on zero.
    fn inv(&self) -> Self;
}

/// An element of Q(i): exact rational real and imaginary parts.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussianRational {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        GaussianRational {
            re: BigRational::from_integer(BigInt::from(re)),
            im: BigRational::from_integer(BigInt::from(im)),
        }
    }

    pub fn i() -> Self {
        GaussianRational::from_ints(0, 1)
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    /// Exact upper bound `|re| + |im|` for the modulus.
    pub fn abs_upper_exact(&self) -> BigRational {
        self.re.abs() + self.im.abs()
    }

    /// Floating modulus `sqrt(re^2 + im^2)`.
    pub fn abs_f64(&self) -> f64 {
        self.to_complex().norm()
    }

    /// Squared modulus, exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Add for GaussianRational {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl Sub for GaussianRational {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl Neg for GaussianRational {
    type Output = Self;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl Mul for GaussianRational {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let re = &self.re * &rhs.re - &self.im * &rhs.im;
        let im = &self.re * &rhs.im + &self.im * &rhs.re;
        GaussianRational { re, im }
    }
}

impl Div for GaussianRational {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let d = rhs.norm_sqr();
        assert!(!d.is_zero(), "division by zero in Q(i)");
        let num = self * rhs.conj();
        GaussianRational {
            re: num.re / &d,
            im: num.im / &d,
        }
    }
}

impl Zero for GaussianRational {
    fn zero() -> Self {
        GaussianRational::default()
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for GaussianRational {
    fn one() -> Self {
        GaussianRational::from_ints(1, 0)
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Canonical coefficient form: `a/b`, `c/d*i` or `a/b+c/d*i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", fmt_rational(&self.re));
        }
        if self.re.is_zero() {
            if self.im.is_one() {
                return write!(f, "i");
            }
            if self.im == -BigRational::one() {
                return write!(f, "-i");
            }
            return write!(f, "{}*i", fmt_rational(&self.im));
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        let im_abs = self.im.abs();
        if im_abs.is_one() {
            write!(f, "{}{}i", fmt_rational(&self.re), sign)
        } else {
            write!(f, "{}{}{}*i", fmt_rational(&self.re), sign, fmt_rational(&im_abs))
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl Scalar for GaussianRational {
    const EXACT: bool = true;

    fn from_int(n: i64) -> Self {
        GaussianRational::from_ints(n, 0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    fn to_complex(&self) -> Complex64 {
        Complex64::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }

    fn abs_upper(&self) -> f64 {
        self.abs_upper_exact().to_f64().unwrap_or(f64::INFINITY)
    }

    fn inv(&self) -> Self {
        GaussianRational::one() / self.clone()
    }
}

impl Scalar for Complex64 {
    const EXACT: bool = false;

    fn from_int(n: i64) -> Self {
        Complex64::new(n as f64, 0.0)
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Complex64::new(num as f64 / den as f64, 0.0)
    }

    fn to_complex(&self) -> Complex64 {
        *self
    }

    fn abs_upper(&self) -> f64 {
        self.re.abs() + self.im.abs()
    }

    fn inv(&self) -> Self {
        1.0 / self
    }
}

/// A point coordinate or initial value: exact when available, floating otherwise.
#[derive(Clone, PartialEq, Debug)]
pub enum Value {
    Exact(GaussianRational),
    Approx(Complex64),
}

impl Value {
    pub fn zero() -> Self {
        Value::Exact(GaussianRational::zero())
    }

    pub fn from_f64(x: f64) -> Self {
        Value::Approx(Complex64::new(x, 0.0))
    }

    pub fn to_complex(&self) -> Complex64 {
        match self {
            Value::Exact(q) => q.to_complex(),
            Value::Approx(c) => *c,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Value::Exact(_))
    }

    pub fn as_exact(&self) -> Option<&GaussianRational> {
        match self {
            Value::Exact(q) => Some(q),
            Value::Approx(_) => None,
        }
    }
}

impl From<GaussianRational> for Value {
    fn from(q: GaussianRational) -> Self {
        Value::Exact(q)
    }
}

impl From<Complex64> for Value {
    fn from(c: Complex64) -> Self {
        Value::Approx(c)
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Exact(q) => write!(f, "{}", q),
            Value::Approx(c) => write!(f, "{}+{}*i~", c.re, c.im),
        }
    }
}

/// A positive real constant of the form `(rat * pi^p)^(1/root)`.
///
/// Radii of disc fibers and extension parameters stay in this form so that
/// repeated delta-extensions compose exactly on the rational part.
#[derive(Clone, PartialEq, Debug)]
pub struct ConstVal {
    pub rat: BigRational,
    pub pi_pow: i8,
    pub root: u32,
}

impl ConstVal {
    pub fn rational(r: BigRational) -> Self {
        ConstVal {
            rat: r,
            pi_pow: 0,
            root: 1,
        }
    }

    pub fn from_int(n: i64) -> Self {
        ConstVal::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn pi() -> Self {
        ConstVal {
            rat: BigRational::one(),
            pi_pow: 1,
            root: 1,
        }
    }

    pub fn value(&self) -> f64 {
        let base = self.rat.to_f64().unwrap_or(f64::NAN)
            * std::f64::consts::PI.powi(self.pi_pow as i32);
        if self.root == 1 {
            base
        } else {
            base.powf(1.0 / self.root as f64)
        }
    }

    /// Multiply by an exact positive rational, staying exact.
    pub fn times_rational(&self, q: &BigRational) -> Self {
        let mut k = q.clone();
        // (x)^(1/root) * q = (x * q^root)^(1/root)
        if self.root > 1 {
            k = num_traits::pow::pow(q.clone(), self.root as usize);
        }
        ConstVal {
            rat: &self.rat * k,
            pi_pow: self.pi_pow,
            root: self.root,
        }
    }

    /// Take an exact nu-th root, simplifying perfect powers of the rational part.
    pub fn nth_root(&self, nu: u32) -> Self {
        assert!(nu >= 1);
        if nu == 1 {
            return self.clone();
        }
        let root = self.root * nu;
        if self.pi_pow == 0 {
            if let Some(r) = exact_nth_root(&self.rat, root) {
                return ConstVal::rational(r);
            }
        }
        ConstVal {
            rat: self.rat.clone(),
            pi_pow: self.pi_pow,
            root,
        }
    }

    pub fn is_rational(&self) -> bool {
        self.pi_pow == 0 && self.root == 1
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        if self.is_rational() {
            Some(&self.rat)
        } else {
            None
        }
    }
}

fn exact_nth_root(q: &BigRational, n: u32) -> Option<BigRational> {
    use num_integer::Roots;
    if q.is_negative() {
        return None;
    }
    let num = q.numer().nth_root(n);
    let den = q.denom().nth_root(n);
    let cand = BigRational::new(num, den);
    if &num_traits::pow::pow(cand.clone(), n as usize) == q {
        Some(cand)
    } else {
        None
    }
}

impl fmt::Display for ConstVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let base = if self.pi_pow == 0 {
            fmt_rational(&self.rat)
        } else if self.pi_pow == 1 {
            if self.rat.is_one() {
                "pi".to_string()
            } else {
                format!("{}*pi", fmt_rational(&self.rat))
            }
        } else {
            format!("{}*pi^{}", fmt_rational(&self.rat), self.pi_pow)
        };
        if self.root == 1 {
            write!(f, "{}", base)
        } else {
            write!(f, "({})^(1/{})", base, self.root)
        }
    }
}

/// Parse a decimal or fraction literal into an exact rational.
///
/// Accepts `3`, `-1/2`, `0.25`, `1e-3`.
pub fn rational_from_decimal(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    let (mant, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (s, 0),
    };
    let (int_part, frac_part) = match mant.split_once('.') {
        Some((i, fr)) => (i, fr),
        None => (mant, ""),
    };
    let neg = int_part.starts_with('-');
    let digits: String = format!(
        "{}{}",
        int_part.trim_start_matches(['-', '+']),
        frac_part
    );
    if digits.is_empty() || !digits.chars().all(|c| c.is_ascii_digit()) {
        return None;
    }
    let mut num: BigInt = digits.parse().ok()?;
    if neg {
        num = -num;
    }
    let shift = exp - frac_part.len() as i64;
    let ten = BigInt::from(10);
    let mut r = BigRational::from_integer(num);
    if shift >= 0 {
        r *= BigRational::from_integer(num_traits::pow::pow(ten, shift as usize));
    } else {
        r /= BigRational::from_integer(num_traits::pow::pow(ten, (-shift) as usize));
    }
    Some(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gaussian_arithmetic_is_exact() {
        let a = GaussianRational::from_ints(1, 1);
        let b = GaussianRational::from_ints(1, -1);
        let p = a.clone() * b.clone();
        assert_eq!(p, GaussianRational::from_ints(2, 0));
        let q = a.clone() / b;
        assert_eq!(q, GaussianRational::i());
        assert_eq!(a.abs_upper_exact(), BigRational::from_integer(BigInt::from(2)));
    }

    #[test]
    fn coefficient_display_forms() {
        assert_eq!(GaussianRational::from_ints(3, 0).to_string(), "3");
        assert_eq!(GaussianRational::from_ratio(-1, 2).to_string(), "-1/2");
        let half_i = GaussianRational::new(BigRational::zero(), BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert_eq!(half_i.to_string(), "1/2*i");
        assert_eq!(GaussianRational::from_ints(1, 2).to_string(), "1+2*i");
    }

    #[test]
    fn const_val_roots_and_scaling() {
        let four = ConstVal::from_int(4);
        let two = four.nth_root(2);
        assert!(two.is_rational());
        assert_eq!(two.value(), 2.0);
        let sqrt2 = ConstVal::from_int(2).nth_root(2);
        assert!(!sqrt2.is_rational());
        assert!((sqrt2.value() - 2f64.sqrt()).abs() < 1e-15);
        // scaling a root-form constant stays exact
        let scaled = sqrt2.times_rational(&BigRational::new(BigInt::from(1), BigInt::from(2)));
        assert!((scaled.value() - 2f64.sqrt() / 2.0).abs() < 1e-15);
    }

    #[test]
    fn decimal_parsing() {
        assert_eq!(
            rational_from_decimal("0.25").unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(4))
        );
        assert_eq!(
            rational_from_decimal("1e-3").unwrap(),
            BigRational::new(BigInt::from(1), BigInt::from(1000))
        );
        assert_eq!(
            rational_from_decimal("-3/4").unwrap(),
            BigRational::new(BigInt::from(-3), BigInt::from(4))
        );
    }
}
