//! Elements of the cyclotomic field Q(w), w a primitive cube root of unity.
//!
//! An element is stored as `a + b*w` with rational `a`, `b`; products are
//! reduced with `w^2 = -1 - w`.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::Rational;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Cyclotomic {
    a: Rational,
    b: Rational,
}

impl Cyclotomic {
    pub fn new(a: Rational, b: Rational) -> Self {
        Cyclotomic { a, b }
    }

    pub fn from_int(n: i64) -> Self {
        Cyclotomic::new(Rational::from_integer(BigInt::from(n)), Rational::zero())
    }

    /// The rational `num/den`. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        Cyclotomic::new(
            Rational::new(BigInt::from(num), BigInt::from(den)),
            Rational::zero(),
        )
    }

    pub fn from_rational(a: Rational) -> Self {
        Cyclotomic::new(a, Rational::zero())
    }

    pub fn omega() -> Self {
        Cyclotomic::new(Rational::zero(), Rational::one())
    }

    /// `w^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Cyclotomic::one(),
            1 => Cyclotomic::omega(),
            _ => Cyclotomic::new(-Rational::one(), -Rational::one()),
        }
    }

    /// Rational part `a` of `a + b*w`.
    pub fn a(&self) -> &Rational {
        &self.a
    }

    /// Coefficient `b` of `w` in `a + b*w`.
    pub fn b(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Field norm `a^2 - ab + b^2`; zero only for the zero element.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    /// Galois conjugate `a + b*w^2 = (a - b) - b*w`.
    pub fn conj(&self) -> Self {
        Cyclotomic::new(&self.a - &self.b, -&self.b)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(Cyclotomic::new(c.a / &n, c.b / &n))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic::new(&self.a * r, &self.b * r)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Cyclotomic::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Cyclotomic::new(Rational::one(), Rational::zero())
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        Cyclotomic::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        // (a + bw)(c + dw) = ac - bd + (ad + bc - bd) w
        let bd = &self.b * &rhs.b;
        let a = &self.a * &rhs.a - &bd;
        let b = &self.a * &rhs.b + &self.b * &rhs.a - bd;
        Cyclotomic::new(a, b)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::new(-&self.a, -&self.b)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic::new(-self.a, -self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { (&self).$m(&rhs) }
        }
        impl<'a> $tr<&'a Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic { (&self).$m(rhs) }
        }
        impl<'a> $tr<Cyclotomic> for &'a Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic { self.$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&Cyclotomic> for Cyclotomic {
    fn mul_assign(&mut self, rhs: &Cyclotomic) {
        *self = &*self * rhs;
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |acc, x| acc + x)
    }
}

/// Canonical text form `a+b*w` (or `a-b*w`), each coefficient written as
/// `p` or `p/q` in lowest terms. Both parts are always present so the form is
/// stable byte for byte.
impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_negative() {
            write!(f, "{}-{}*w", self.a, -&self.b)
        } else {
            write!(f, "{}+{}*w", self.a, self.b)
        }
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Accepts sums of terms such as `1/2`, `w`, `-3*w`, `2*w-2`, `w^2`, `1+0*w`.
/// `ω` may be used in place of `w`.
impl FromStr for Cyclotomic {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let chars: Vec<char> = s
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| if c == 'ω' { 'w' } else { c })
            .collect();
        if chars.is_empty() {
            return Err(Error::Parse("empty cyclotomic literal".into()));
        }
        let bad = || Error::Parse(format!("invalid cyclotomic literal {s:?}"));

        let mut pos = 0;
        let mut total = Cyclotomic::zero();
        let mut first = true;
        while pos < chars.len() {
            let mut negative = false;
            match chars[pos] {
                '+' => pos += 1,
                '-' => {
                    negative = true;
                    pos += 1;
                }
                _ if first => {}
                _ => return Err(bad()),
            }
            first = false;

            let coeff = if pos < chars.len() && chars[pos].is_ascii_digit() {
                let num = read_int(&chars, &mut pos).ok_or_else(bad)?;
                let mut r = Rational::from_integer(num);
                if pos < chars.len() && chars[pos] == '/' {
                    pos += 1;
                    let den = read_int(&chars, &mut pos).ok_or_else(bad)?;
                    if den.is_zero() {
                        return Err(Error::DivisionByZero);
                    }
                    r /= Rational::from_integer(den);
                }
                if pos < chars.len() && chars[pos] == '*' {
                    pos += 1;
                    if pos >= chars.len() || chars[pos] != 'w' {
                        return Err(bad());
                    }
                    Some(r)
                } else {
                    total += &Cyclotomic::from_rational(if negative { -r } else { r });
                    continue;
                }
            } else {
                None
            };

            if pos >= chars.len() || chars[pos] != 'w' {
                return Err(bad());
            }
            pos += 1;
            let mut exp = 1i64;
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let e = read_int(&chars, &mut pos).ok_or_else(bad)?;
                exp = i64::try_from(e % BigInt::from(3)).map_err(|_| bad())?;
            }
            let mut term = Cyclotomic::omega_pow(exp);
            if let Some(r) = coeff {
                term = term.scale(&r);
            }
            if negative {
                term = -term;
            }
            total += &term;
        }
        Ok(total)
    }
}

fn read_int(chars: &[char], pos: &mut usize) -> Option<BigInt> {
    let start = *pos;
    while *pos < chars.len() && chars[*pos].is_ascii_digit() {
        *pos += 1;
    }
    if *pos == start {
        return None;
    }
    chars[start..*pos].iter().collect::<String>().parse().ok()
}

impl Serialize for Cyclotomic {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Cyclotomic {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(s: &str) -> Cyclotomic {
        s.parse().unwrap()
    }

    #[test]
    fn omega_cubed_is_one() {
        let w = Cyclotomic::omega();
        assert_eq!(&(&w * &w) * &w, Cyclotomic::one());
        assert_eq!(w.pow(3), Cyclotomic::one());
        assert_eq!(Cyclotomic::one() + &w + w.pow(2), Cyclotomic::zero());
    }

    #[test]
    fn one_plus_omega_cubed() {
        // 1 + w = -w^2, so (1 + w)^3 = -w^6 = -1
        let x = Cyclotomic::one() + Cyclotomic::omega();
        assert_eq!(x, -Cyclotomic::omega_pow(2));
        assert_eq!(x.pow(3), Cyclotomic::from_int(-1));
    }

    #[test]
    fn inverse_of_omega() {
        let inv = Cyclotomic::omega().inv().unwrap();
        assert_eq!(inv, Cyclotomic::omega_pow(2));
        assert_eq!(inv.a(), &Rational::from_integer((-1).into()));
        assert_eq!(inv.b(), &Rational::from_integer((-1).into()));
    }

    #[test]
    fn zero_has_no_inverse() {
        assert_eq!(Cyclotomic::zero().inv(), Err(Error::DivisionByZero));
        assert!(Cyclotomic::one().checked_div(&Cyclotomic::zero()).is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(c("2*w-2").to_string(), "-2+2*w");
        assert_eq!(c("w^2").to_string(), "-1-1*w");
        assert_eq!(c("-w"), -Cyclotomic::omega());
        assert_eq!(c("1/2"), Cyclotomic::from_ratio(1, 2));
        assert_eq!(c("-3/6+1/4*w").to_string(), "-1/2+1/4*w");
        assert_eq!(c("ω"), Cyclotomic::omega());
        assert_eq!(c("0"), Cyclotomic::zero());
        for bad in ["", "w*2", "1//2", "x", "1+", "2w", "1/0"] {
            assert!(bad.parse::<Cyclotomic>().is_err(), "{bad:?} parsed");
        }
    }

    #[test]
    fn serde_uses_the_string_form() {
        let z = c("1/3-2*w");
        let js = serde_json::to_string(&z).unwrap();
        assert_eq!(js, "\"1/3-2*w\"");
        let back: Cyclotomic = serde_json::from_str(&js).unwrap();
        assert_eq!(back, z);
    }

    fn arb_rational() -> impl Strategy<Value = Rational> {
        (-50i64..50, 1i64..20).prop_map(|(n, d)| Rational::new(n.into(), d.into()))
    }

    fn arb_cyc() -> impl Strategy<Value = Cyclotomic> {
        (arb_rational(), arb_rational()).prop_map(|(a, b)| Cyclotomic::new(a, b))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn field_axioms(x in arb_cyc(), y in arb_cyc(), z in arb_cyc()) {
            prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
            prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&x + &y, &y + &x);
            prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
            prop_assert_eq!(&x - &x, Cyclotomic::zero());
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), Cyclotomic::one());
                prop_assert!(!x.norm().is_zero());
            }
        }

        #[test]
        fn display_parse_roundtrip(x in arb_cyc()) {
            prop_assert_eq!(x.to_string().parse::<Cyclotomic>().unwrap(), x);
        }
    }
}
