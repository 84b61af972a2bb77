//! Exact arithmetic over Q and Q(ω), with ω² + ω + 1 = 0, plus the
//! Eisenstein integers Z[ω] used for rational-root search.

use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use num_rational::BigRational;

/// Coefficient field selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Field {
    /// The rationals; elements must have zero ω-part.
    Rational,
    /// The cyclotomic field Q(ω).
    #[default]
    Eisenstein,
}

impl Field {
    pub fn contains(self, x: &FieldElement) -> bool {
        match self {
            Field::Rational => x.is_rational(),
            Field::Eisenstein => true,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Field::Rational => "Q",
            Field::Eisenstein => "Q(w)",
        }
    }
}

/// An element `a + b·ω` of Q(ω). Always stored in reduced form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FieldElement {
    a: BigRational,
    b: BigRational,
}

impl FieldElement {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        FieldElement { a, b }
    }

    pub fn rational(a: BigRational) -> Self {
        FieldElement { a, b: BigRational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::rational(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Self::rational(BigRational::from_integer(n))
    }

    pub fn from_ratio(n: i64, d: i64) -> Self {
        Self::rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    /// The primitive cube root of unity ω.
    pub fn omega() -> Self {
        FieldElement { a: BigRational::zero(), b: BigRational::one() }
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

    /// Rational part `a` of `a + bω`.
    pub fn re(&self) -> &BigRational {
        &self.a
    }

    /// ω-coefficient `b` of `a + bω`.
    pub fn omega_part(&self) -> &BigRational {
        &self.b
    }

    /// Galois conjugate: ω ↦ ω̄ = −1 − ω.
    pub fn conj(&self) -> Self {
        FieldElement { a: &self.a - &self.b, b: -&self.b }
    }

    /// Field norm a² − ab + b².
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.b.is_zero() {
            return Ok(Self::rational(self.a.recip()));
        }
        let n = self.norm();
        let c = self.conj();
        Ok(FieldElement { a: c.a / &n, b: c.b / &n })
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        FieldElement { a: &self.a * q, b: &self.b * q }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Least common multiple of the denominators of both components.
    pub fn denominator_lcm(&self) -> BigInt {
        self.a.denom().lcm(self.b.denom())
    }

    /// Returns the element as an Eisenstein integer when both components are integral.
    pub fn to_eisenstein(&self) -> Option<EisensteinInt> {
        if self.a.is_integer() && self.b.is_integer() {
            Some(EisensteinInt::new(self.a.to_integer(), self.b.to_integer()))
        } else {
            None
        }
    }
}

impl Default for FieldElement {
    fn default() -> Self {
        Self::zero()
    }
}

impl Ord for FieldElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a
            .numer()
            .cmp(other.a.numer())
            .then_with(|| self.a.denom().cmp(other.a.denom()))
            .then_with(|| self.b.numer().cmp(other.b.numer()))
            .then_with(|| self.b.denom().cmp(other.b.denom()))
    }
}

impl PartialOrd for FieldElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for FieldElement {
    fn from(n: i64) -> Self {
        Self::from_int(n)
    }
}

impl From<BigRational> for FieldElement {
    fn from(q: BigRational) -> Self {
        Self::rational(q)
    }
}

impl<'a> Add<&'a FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &'a FieldElement) -> FieldElement {
        FieldElement { a: &self.a + &rhs.a, b: &self.b + &rhs.b }
    }
}

impl<'a> Sub<&'a FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &'a FieldElement) -> FieldElement {
        FieldElement { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }
}

impl<'a> Mul<&'a FieldElement> for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &'a FieldElement) -> FieldElement {
        if self.b.is_zero() && rhs.b.is_zero() {
            return FieldElement::rational(&self.a * &rhs.a);
        }
        if self.b.is_zero() {
            return rhs.scale(&self.a);
        }
        if rhs.b.is_zero() {
            return self.scale(&rhs.a);
        }
        // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
        let bd = &self.b * &rhs.b;
        FieldElement {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bd,
        }
    }
}

impl Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { a: -&self.a, b: -&self.b }
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        FieldElement { a: -self.a, b: -self.b }
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr<FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a FieldElement> for FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: &'a FieldElement) -> FieldElement {
                (&self).$m(rhs)
            }
        }
        impl $tr<FieldElement> for &FieldElement {
            type Output = FieldElement;
            fn $m(self, rhs: FieldElement) -> FieldElement {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl AddAssign<&FieldElement> for FieldElement {
    fn add_assign(&mut self, rhs: &FieldElement) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
}

impl SubAssign<&FieldElement> for FieldElement {
    fn sub_assign(&mut self, rhs: &FieldElement) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

impl MulAssign<&FieldElement> for FieldElement {
    fn mul_assign(&mut self, rhs: &FieldElement) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn omega_term(b: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            if b.is_one() {
                f.write_str("w")
            } else {
                write!(f, "{}*w", b)
            }
        }
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            if self.b.is_negative() {
                f.write_str("-")?;
            }
            return omega_term(&self.b.abs(), f);
        }
        write!(f, "{}", self.a)?;
        f.write_str(if self.b.is_negative() { " - " } else { " + " })?;
        omega_term(&self.b.abs(), f)
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self)
    }
}

impl FromStr for FieldElement {
    type Err = Error;

    /// Accepts `a`, `a/b`, `a+b*w`, `a/b - c/d*w` and any constant expression in
    /// the polynomial grammar.
    fn from_str(s: &str) -> Result<Self> {
        crate::poly::parse::parse_constant(s)
    }
}

/// Norms above this bound are rejected by divisor enumeration.
pub const MAX_TRIAL_NORM: u64 = 1 << 50;

/// An Eisenstein integer `a + b·ω` in Z[ω].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct EisensteinInt {
    pub a: BigInt,
    pub b: BigInt,
}

impl EisensteinInt {
    pub fn new(a: BigInt, b: BigInt) -> Self {
        EisensteinInt { a, b }
    }

    pub fn from_i64(a: i64, b: i64) -> Self {
        EisensteinInt { a: BigInt::from(a), b: BigInt::from(b) }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn norm(&self) -> BigInt {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    /// The six units ±1, ±ω, ±(1+ω).
    pub fn units() -> [EisensteinInt; 6] {
        [
            Self::from_i64(1, 0),
            Self::from_i64(-1, 0),
            Self::from_i64(0, 1),
            Self::from_i64(0, -1),
            Self::from_i64(1, 1),
            Self::from_i64(-1, -1),
        ]
    }

    pub fn conj(&self) -> Self {
        EisensteinInt { a: &self.a - &self.b, b: -&self.b }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let bd = &self.b * &rhs.b;
        EisensteinInt {
            a: &self.a * &rhs.a - &bd,
            b: &self.a * &rhs.b + &self.b * &rhs.a - bd,
        }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        EisensteinInt { a: &self.a - &rhs.a, b: &self.b - &rhs.b }
    }

    /// Multiplication by the unit 1 + ω, a rotation by 60 degrees.
    fn rotate(&self) -> Self {
        EisensteinInt { a: &self.a - &self.b, b: self.a.clone() }
    }

    /// Representative of the associate class with `a > b >= 0`.
    pub fn canonical_associate(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut x = self.clone();
        for _ in 0..6 {
            if !x.b.is_negative() && x.a > x.b {
                return x;
            }
            x = x.rotate();
        }
        unreachable!("every nonzero Eisenstein integer has an associate in the sector a > b >= 0")
    }

    pub fn is_associate(&self, other: &Self) -> bool {
        self.canonical_associate() == other.canonical_associate()
    }

    /// Euclidean division: returns `(q, r)` with `self = q·d + r` and `norm(r) < norm(d)`.
    pub fn div_rem(&self, d: &Self) -> Result<(Self, Self)> {
        let n = d.norm();
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let num = self.mul(&d.conj());
        let two = BigInt::from(2);
        let round = |x: &BigInt| -> BigInt { (x * &two + &n).div_floor(&(&n * &two)) };
        let q = EisensteinInt { a: round(&num.a), b: round(&num.b) };
        let r = self.sub(&q.mul(d));
        Ok((q, r))
    }

    pub fn divides(&self, e: &Self) -> bool {
        match e.div_rem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    pub fn to_field(&self) -> FieldElement {
        FieldElement::new(
            BigRational::from_integer(self.a.clone()),
            BigRational::from_integer(self.b.clone()),
        )
    }

    /// One representative per associate class of the divisors of `self`, found by
    /// trial division with the Eisenstein primes lying over the rational primes of
    /// `norm(self)`. Output is sorted by norm, then by components.
    pub fn divisors(&self) -> Result<Vec<EisensteinInt>> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let norm = self.norm();
        let n = match norm.to_u64() {
            Some(n) if n <= MAX_TRIAL_NORM => n,
            _ => return Err(Error::NormTooLarge { norm: norm.to_string() }),
        };
        let mut divisors = vec![EisensteinInt::from_i64(1, 0)];
        for (p, _) in factor_u64(n) {
            for pi in primes_above(p) {
                let mut multiplicity = 0u32;
                let mut rest = self.clone();
                loop {
                    let (q, r) = rest.div_rem(&pi)?;
                    if !r.is_zero() {
                        break;
                    }
                    multiplicity += 1;
                    rest = q;
                }
                if multiplicity == 0 {
                    continue;
                }
                let mut extended = Vec::with_capacity(divisors.len() * (multiplicity as usize + 1));
                for d in &divisors {
                    let mut power = d.clone();
                    extended.push(power.clone());
                    for _ in 0..multiplicity {
                        power = power.mul(&pi);
                        extended.push(power.clone());
                    }
                }
                divisors = extended;
            }
        }
        let mut out: Vec<EisensteinInt> =
            divisors.iter().map(|d| d.canonical_associate()).collect();
        out.sort_by(|x, y| {
            x.norm()
                .cmp(&y.norm())
                .then_with(|| x.a.cmp(&y.a))
                .then_with(|| x.b.cmp(&y.b))
        });
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_field())
    }
}

/// Free-standing form of [`EisensteinInt::norm`].
pub fn eis_norm(e: &EisensteinInt) -> BigInt {
    e.norm()
}

/// Free-standing form of [`EisensteinInt::divisors`].
pub fn eis_divisors(e: &EisensteinInt) -> Result<Vec<EisensteinInt>> {
    e.divisors()
}

fn factor_u64(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        if n % p == 0 {
            let mut k = 0;
            while n % p == 0 {
                n /= p;
                k += 1;
            }
            out.push((p, k));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Pairwise non-associate Eisenstein primes dividing the rational prime `p`.
fn primes_above(p: u64) -> Vec<EisensteinInt> {
    match p % 3 {
        0 => vec![EisensteinInt::from_i64(1, -1)],
        2 => vec![EisensteinInt::new(BigInt::from(p), BigInt::zero())],
        _ => {
            // p splits as π·π̄ with norm(π) = p; solve a² − ab + b² = p.
            let mut b: u64 = 1;
            loop {
                let disc = 4 * p as u128 - 3 * (b as u128) * (b as u128);
                let s = isqrt_u128(disc);
                if s * s == disc && (b as u128 + s) % 2 == 0 {
                    let a = ((b as u128 + s) / 2) as u64;
                    let pi = EisensteinInt::new(BigInt::from(a), BigInt::from(b));
                    let pi_bar = pi.conj();
                    return vec![pi, pi_bar];
                }
                b += 1;
                debug_assert!(3 * (b as u128) * (b as u128) <= 4 * p as u128);
            }
        }
    }
}

fn isqrt_u128(n: u128) -> u128 {
    num_integer::Roots::sqrt(&n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fe(a: i64, b: i64) -> FieldElement {
        FieldElement::new(
            BigRational::from_integer(BigInt::from(a)),
            BigRational::from_integer(BigInt::from(b)),
        )
    }

    #[test]
    fn norm_examples() {
        assert_eq!(eis_norm(&EisensteinInt::from_i64(1, 0)), BigInt::from(1));
        assert_eq!(eis_norm(&EisensteinInt::from_i64(0, 1)), BigInt::from(1));
        assert_eq!(eis_norm(&EisensteinInt::from_i64(1, -1)), BigInt::from(3));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(fe(1, 0).inv().unwrap(), fe(1, 0));
        // ω⁻¹ = ω² = −1 − ω
        assert_eq!(fe(0, 1).inv().unwrap(), fe(-1, -1));
        // (1 + ω)⁻¹ = −ω
        assert_eq!(fe(1, 1).inv().unwrap(), fe(0, -1));
        assert_eq!(FieldElement::zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn omega_relations() {
        let w = FieldElement::omega();
        assert!(w.pow(3).is_one());
        assert!((FieldElement::one() + &w + w.pow(2)).is_zero());
    }

    #[test]
    fn divisor_examples() {
        let one = EisensteinInt::from_i64(1, 0);
        assert_eq!(one.divisors().unwrap(), vec![one.clone()]);

        let two = EisensteinInt::from_i64(2, 0);
        assert_eq!(two.divisors().unwrap(), vec![one.clone(), two.clone()]);

        let three = EisensteinInt::from_i64(3, 0);
        let ds = three.divisors().unwrap();
        assert_eq!(ds.len(), 3);
        assert!(ds[0].is_associate(&one));
        assert!(ds[1].is_associate(&EisensteinInt::from_i64(1, -1)));
        assert!(ds[2].is_associate(&three));

        assert!(EisensteinInt::from_i64(0, 0).divisors().is_err());
    }

    #[test]
    fn split_prime_divisors() {
        // 7 = (3 + ω)(2 − ω) up to units, norm 49
        let seven = EisensteinInt::from_i64(7, 0);
        let ds = seven.divisors().unwrap();
        assert_eq!(ds.len(), 4);
        for d in &ds {
            assert!(d.divides(&seven));
        }
    }

    #[test]
    fn canonical_associate_is_in_sector() {
        for a in -4..=4 {
            for b in -4..=4 {
                let e = EisensteinInt::from_i64(a, b);
                if e.is_zero() {
                    continue;
                }
                let c = e.canonical_associate();
                assert!(c.a > c.b && c.b >= BigInt::zero());
                assert_eq!(c.norm(), e.norm());
            }
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(fe(3, 0).to_string(), "3");
        assert_eq!(fe(0, 1).to_string(), "w");
        assert_eq!(fe(0, -1).to_string(), "-w");
        assert_eq!(fe(1, 1).to_string(), "1 + w");
        assert_eq!(fe(2, -3).to_string(), "2 - 3*w");
        assert_eq!(FieldElement::from_ratio(-1, 2).to_string(), "-1/2");
    }

    #[test]
    fn canonical_order_is_lexicographic_on_components() {
        let mut v = vec![fe(1, 0), fe(0, 1), fe(-1, 5), FieldElement::from_ratio(1, 2)];
        v.sort();
        assert_eq!(v, vec![fe(-1, 5), fe(0, 1), fe(1, 0), FieldElement::from_ratio(1, 2)]);
    }
}
