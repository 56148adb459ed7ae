use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::error::ForgeError;
use crate::exact::Rational;

/// Element `a + bω` of Q(ω), where ω² = −1 − ω.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    pub a: Rational,
    pub b: Rational,
}

impl Scalar {
    pub fn new(a: Rational, b: Rational) -> Self {
        Scalar { a, b }
    }

    pub fn zero() -> Self {
        Scalar { a: Rational::zero(), b: Rational::zero() }
    }

    pub fn one() -> Self {
        Scalar::int(1)
    }

    pub fn int(n: i64) -> Self {
        Scalar { a: Rational::from_int(n), b: Rational::zero() }
    }

    pub fn frac(n: i64, d: i64) -> Self {
        Scalar { a: Rational::new(n, d), b: Rational::zero() }
    }

    pub fn rational(r: Rational) -> Self {
        Scalar { a: r, b: Rational::zero() }
    }

    pub fn omega() -> Self {
        Scalar { a: Rational::zero(), b: Rational::one() }
    }

    /// ω² = −1 − ω
    pub fn omega2() -> Self {
        Scalar { a: Rational::from_int(-1), b: Rational::from_int(-1) }
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Scalar::one(),
            1 => Scalar::omega(),
            _ => Scalar::omega2(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate ω ↦ ω²: a + bω ↦ (a − b) − bω.
    pub fn conj(&self) -> Self {
        Scalar { a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm a² − ab + b² into Q.
    pub fn norm(&self) -> Rational {
        &(&self.a * &self.a) - &(&self.a * &self.b) + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self, ForgeError> {
        if self.is_zero() {
            return Err(ForgeError::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Scalar::rational(self.a.inv()?));
        }
        let nr = self.norm().inv()?;
        let c = self.conj();
        Ok(Scalar { a: &c.a * &nr, b: &c.b * &nr })
    }

    pub fn checked_div(&self, o: &Scalar) -> Result<Self, ForgeError> {
        Ok(self * &o.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// In-place `self += c * x`.
    pub fn add_mul(&mut self, c: &Scalar, x: &Scalar) {
        if c.is_zero() || x.is_zero() {
            return;
        }
        let p = c * x;
        *self += &p;
    }

    fn mul_ref(&self, o: &Scalar) -> Scalar {
        if self.b.is_zero() {
            if o.b.is_zero() {
                return Scalar::rational(&self.a * &o.a);
            }
            return Scalar { a: &self.a * &o.a, b: &self.a * &o.b };
        }
        if o.b.is_zero() {
            return Scalar { a: &self.a * &o.a, b: &self.b * &o.a };
        }
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        let ac = &self.a * &o.a;
        let bd = &self.b * &o.b;
        let ad = &self.a * &o.b;
        let bc = &self.b * &o.a;
        Scalar { a: &ac - &bd, b: &(&ad + &bc) - &bd }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(r: Rational) -> Self {
        Scalar::rational(r)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -&self.a, b: -&self.b }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $body:expr) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                $body(self, o)
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                $body(&self, &o)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, o: &Scalar) -> Scalar {
                $body(&self, o)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, o: Scalar) -> Scalar {
                $body(self, &o)
            }
        }
    };
}

forward_binop!(Add, add, |x: &Scalar, y: &Scalar| Scalar { a: &x.a + &y.a, b: &x.b + &y.b });
forward_binop!(Sub, sub, |x: &Scalar, y: &Scalar| Scalar { a: &x.a - &y.a, b: &x.b - &y.b });
forward_binop!(Mul, mul, |x: &Scalar, y: &Scalar| x.mul_ref(y));
forward_binop!(Div, div, |x: &Scalar, y: &Scalar| x
    .checked_div(y)
    .expect("division by zero scalar"));

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        self.a = &self.a + &o.a;
        if !(self.b.is_zero() && o.b.is_zero()) {
            self.b = &self.b + &o.b;
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, o: &Scalar) {
        if o.is_zero() {
            return;
        }
        self.a = &self.a - &o.a;
        if !(self.b.is_zero() && o.b.is_zero()) {
            self.b = &self.b - &o.b;
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}*w", self.b);
        }
        if self.b.signum() < 0 {
            write!(f, "{}-{}*w", self.a, self.b.abs())
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Scalar {
    type Err = ForgeError;

    /// Accepts "a", "b*w", "a+b*w", "a-b*w" and a bare "w" / "-w".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let Some(head) = s.strip_suffix('w') else {
            return Ok(Scalar::rational(s.parse()?));
        };
        let head = head.strip_suffix('*').unwrap_or(head);
        // split at the last sign that is not leading
        let cut = head
            .char_indices()
            .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
            .map(|(i, _)| i)
            .last();
        let (a, b) = match cut {
            Some(i) => (&head[..i], &head[i..]),
            None => ("", head),
        };
        let a = if a.is_empty() { Rational::zero() } else { a.parse()? };
        let b = match b {
            "" | "+" => Rational::one(),
            "-" => Rational::from_int(-1),
            t => t.trim_start_matches('+').parse()?,
        };
        Ok(Scalar { a, b })
    }
}
