//! Exact scalars: arbitrary-precision rationals and real quadratic fields
//! `Q(√D)`, with the golden field `Q(√5)` as the main instance.
//!
//! Every symbolic object in the crate is generic over [`Scalar`], so the same
//! polynomial and trigonometric machinery runs over `Q`, `Q(√5)` and `Q(√3)`.

use std::cmp::Ordering;
use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = BigRational;

/// Builds the rational `num / den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    fn of_rational(q: &Rational) -> Sign {
        if q.is_zero() {
            Sign::Zero
        } else if q.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

/// Exact ordered field element usable as a coefficient.
pub trait Scalar:
    Clone
    + Eq
    + Ord
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    fn sign(&self) -> Sign;

    fn checked_inv(&self) -> Option<Self>;

    /// Galois conjugation; the identity on `Q`.
    fn conj(&self) -> Self;

    fn to_f64(&self) -> f64;

    /// `Some(q)` when the value lies in `Q`.
    fn to_rational(&self) -> Option<Rational>;

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        rhs.checked_inv()
            .map(|inv| self.clone() * inv)
            .ok_or(Error::DivisionByZero)
    }

    fn abs(&self) -> Self {
        if self.sign() == Sign::Negative {
            -self.clone()
        } else {
            self.clone()
        }
    }
}

impl Scalar for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }

    fn sign(&self) -> Sign {
        Sign::of_rational(self)
    }

    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn conj(&self) -> Self {
        self.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
}

/// Element `r + s·√D` of the real quadratic field `Q(√D)`.
///
/// `D` must be a positive non-square integer, so `(r, s)` determines the value
/// uniquely and structural equality is value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticNumber<const D: u32> {
    r: Rational,
    s: Rational,
}

/// `Q(√5)`, the coefficient field of the icosahedral constructions.
pub type GoldenNumber = QuadraticNumber<5>;

/// `Q(√3)`, needed for the planar field with dihedral symmetry.
pub type Sqrt3Number = QuadraticNumber<3>;

impl<const D: u32> QuadraticNumber<D> {
    pub fn new(r: Rational, s: Rational) -> Self {
        debug_assert!(!is_perfect_square(D), "radicand {D} must not be a square");
        QuadraticNumber { r, s }
    }

    pub fn from_ratios(r: (i64, i64), s: (i64, i64)) -> Self {
        Self::new(rat(r.0, r.1), rat(s.0, s.1))
    }

    pub fn rational(q: Rational) -> Self {
        Self::new(q, Rational::zero())
    }

    pub fn integer(n: i64) -> Self {
        Self::rational(Rational::from_integer(BigInt::from(n)))
    }

    /// The generator `√D`.
    pub fn root() -> Self {
        Self::new(Rational::zero(), Rational::one())
    }

    pub fn rational_part(&self) -> &Rational {
        &self.r
    }

    pub fn radical_part(&self) -> &Rational {
        &self.s
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// The non-trivial automorphism `√D ↦ −√D`.
    pub fn tau(&self) -> Self {
        Self::new(self.r.clone(), -self.s.clone())
    }

    /// Field norm `r² − D·s²`.
    pub fn norm(&self) -> Rational {
        &self.r * &self.r - Rational::from_integer(BigInt::from(D)) * &self.s * &self.s
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        Ok(Self::new(&self.r / &n, -(&self.s / &n)))
    }

    pub fn pow(&self, exp: i32) -> Result<Self> {
        let base = if exp < 0 { self.inv()? } else { self.clone() };
        let mut acc = Self::one();
        for _ in 0..exp.unsigned_abs() {
            acc = acc * &base;
        }
        Ok(acc)
    }

    /// Exact sign under the embedding with `√D > 0`, using integer arithmetic
    /// only.
    pub fn signum(&self) -> Sign {
        let sr = Sign::of_rational(&self.r);
        let ss = Sign::of_rational(&self.s);
        match (sr, ss) {
            (Sign::Zero, s) | (s, Sign::Zero) => s,
            (a, b) if a == b => a,
            (rs, _) => {
                // opposite signs: compare r² with D·s²
                let r2 = &self.r * &self.r;
                let ds2 = Rational::from_integer(BigInt::from(D)) * &self.s * &self.s;
                match r2.cmp(&ds2) {
                    Ordering::Greater => rs,
                    Ordering::Less => flip(rs),
                    Ordering::Equal => Sign::Zero,
                }
            }
        }
    }
}

fn flip(s: Sign) -> Sign {
    match s {
        Sign::Negative => Sign::Positive,
        Sign::Zero => Sign::Zero,
        Sign::Positive => Sign::Negative,
    }
}

fn is_perfect_square(n: u32) -> bool {
    let r = (n as f64).sqrt().round() as u32;
    r * r == n
}

impl GoldenNumber {
    /// `φ = (1 + √5)/2`.
    pub fn phi() -> Self {
        Self::from_ratios((1, 2), (1, 2))
    }

    /// `φ⁻¹ = φ − 1`.
    pub fn phi_inv() -> Self {
        Self::from_ratios((-1, 2), (1, 2))
    }

    pub fn sqrt5() -> Self {
        Self::root()
    }
}

impl<const D: u32> Zero for QuadraticNumber<D> {
    fn zero() -> Self {
        Self::new(Rational::zero(), Rational::zero())
    }

    fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }
}

impl<const D: u32> One for QuadraticNumber<D> {
    fn one() -> Self {
        Self::new(Rational::one(), Rational::zero())
    }
}

impl<const D: u32> Neg for QuadraticNumber<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.r, -self.s)
    }
}

impl<const D: u32> Neg for &QuadraticNumber<D> {
    type Output = QuadraticNumber<D>;
    fn neg(self) -> QuadraticNumber<D> {
        QuadraticNumber::new(-self.r.clone(), -self.s.clone())
    }
}

impl<'a, const D: u32> Add<&'a QuadraticNumber<D>> for QuadraticNumber<D> {
    type Output = Self;
    fn add(mut self, rhs: &'a Self) -> Self {
        self += rhs;
        self
    }
}

impl<const D: u32> Add for QuadraticNumber<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self + &rhs
    }
}

impl<'a, const D: u32> Sub<&'a QuadraticNumber<D>> for QuadraticNumber<D> {
    type Output = Self;
    fn sub(mut self, rhs: &'a Self) -> Self {
        self -= rhs;
        self
    }
}

impl<const D: u32> Sub for QuadraticNumber<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self - &rhs
    }
}

impl<'a, const D: u32> AddAssign<&'a QuadraticNumber<D>> for QuadraticNumber<D> {
    fn add_assign(&mut self, rhs: &'a Self) {
        self.r += &rhs.r;
        self.s += &rhs.s;
    }
}

impl<'a, const D: u32> SubAssign<&'a QuadraticNumber<D>> for QuadraticNumber<D> {
    fn sub_assign(&mut self, rhs: &'a Self) {
        self.r -= &rhs.r;
        self.s -= &rhs.s;
    }
}

impl<'a, const D: u32> Mul<&'a QuadraticNumber<D>> for QuadraticNumber<D> {
    type Output = Self;
    fn mul(self, rhs: &'a Self) -> Self {
        &self * rhs
    }
}

impl<'a, 'b, const D: u32> Mul<&'b QuadraticNumber<D>> for &'a QuadraticNumber<D> {
    type Output = QuadraticNumber<D>;
    fn mul(self, rhs: &'b QuadraticNumber<D>) -> QuadraticNumber<D> {
        // shortcut for the common all-rational case
        if self.s.is_zero() && rhs.s.is_zero() {
            return QuadraticNumber::rational(&self.r * &rhs.r);
        }
        let d = Rational::from_integer(BigInt::from(D));
        let r = &self.r * &rhs.r + d * &self.s * &rhs.s;
        let s = &self.r * &rhs.s + &self.s * &rhs.r;
        QuadraticNumber::new(r, s)
    }
}

impl<const D: u32> Mul for QuadraticNumber<D> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

/// Panics on division by zero; use [`Scalar::checked_div`] for a `Result`.
impl<const D: u32> Div for QuadraticNumber<D> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        self * rhs.inv().expect("division by zero in Q(√D)")
    }
}

impl<const D: u32> PartialOrd for QuadraticNumber<D> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Numeric order of the real embedding.
impl<const D: u32> Ord for QuadraticNumber<D> {
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        match (self.clone() - other).signum() {
            Sign::Negative => Ordering::Less,
            Sign::Zero => Ordering::Equal,
            Sign::Positive => Ordering::Greater,
        }
    }
}

impl<const D: u32> Scalar for QuadraticNumber<D> {
    fn from_rational(q: Rational) -> Self {
        Self::rational(q)
    }

    fn sign(&self) -> Sign {
        self.signum()
    }

    fn checked_inv(&self) -> Option<Self> {
        self.inv().ok()
    }

    fn conj(&self) -> Self {
        self.tau()
    }

    fn to_f64(&self) -> f64 {
        // IEEE sqrt is correctly rounded, so this is √D rounded once.
        let root = f64::from(D).sqrt();
        Scalar::to_f64(&self.r) + Scalar::to_f64(&self.s) * root
    }

    fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.r.clone())
    }
}

impl<const D: u32> Default for QuadraticNumber<D> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<const D: u32> From<i64> for QuadraticNumber<D> {
    fn from(n: i64) -> Self {
        Self::integer(n)
    }
}

impl<const D: u32> From<Rational> for QuadraticNumber<D> {
    fn from(q: Rational) -> Self {
        Self::rational(q)
    }
}

/// Textual form `p/q + (r/s)√D`; the radical term is omitted when zero and the
/// rational term is omitted when zero and the radical term is not.
impl<const D: u32> Display for QuadraticNumber<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.r.is_zero(), self.s.is_zero()) {
            (_, true) => write!(f, "{}", self.r),
            (true, false) => write!(f, "({})√{}", self.s, D),
            (false, false) => write!(f, "{} + ({})√{}", self.r, self.s, D),
        }
    }
}

impl<const D: u32> Debug for QuadraticNumber<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        Display::fmt(self, f)
    }
}

impl<const D: u32> FromStr for QuadraticNumber<D> {
    type Err = Error;

    /// Accepts the [`Display`] form as well as `sqrtD` in place of `√D`,
    /// a leading or inner minus sign, and a bare `√D`.
    fn from_str(input: &str) -> Result<Self> {
        let err = || Error::Parse {
            what: "quadratic number",
            input: input.to_string(),
        };
        let compact: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        let compact = compact.replace(&format!("sqrt{D}"), &format!("√{D}"));
        let radical = format!("√{D}");
        let Some(head) = compact.strip_suffix(&radical) else {
            let r = parse_rational(&compact).ok_or_else(err)?;
            return Ok(Self::rational(r));
        };
        // head is "<rational>±(<coef>)", "<rational>±<coef>", "(<coef>)", "<coef>" or empty
        let (rational_str, coef_str, negate) = if let Some(inner_head) = head.strip_suffix(')') {
            let open = inner_head.rfind('(').ok_or_else(err)?;
            let coef = &inner_head[open + 1..];
            let before = &inner_head[..open];
            split_signed_prefix(before, coef)
        } else {
            // find the last binary + or - (not at position 0, not after '/')
            let bytes = head.as_bytes();
            let mut split = None;
            for i in (1..bytes.len()).rev() {
                if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'/' {
                    split = Some(i);
                    break;
                }
            }
            match split {
                Some(i) => {
                    let negate = bytes[i] == b'-';
                    (&head[..i], &head[i + 1..], negate)
                }
                None => ("", head, false),
            }
        };
        let r = if rational_str.is_empty() {
            Rational::zero()
        } else {
            parse_rational(rational_str).ok_or_else(err)?
        };
        let mut s = match coef_str {
            "" | "+" => Rational::one(),
            "-" => -Rational::one(),
            c => parse_rational(c).ok_or_else(err)?,
        };
        if negate {
            s = -s;
        }
        Ok(Self::new(r, s))
    }
}

fn split_signed_prefix<'a>(before: &'a str, coef: &'a str) -> (&'a str, &'a str, bool) {
    if let Some(r) = before.strip_suffix('+') {
        (r, coef, false)
    } else if let Some(r) = before.strip_suffix('-') {
        (r, coef, true)
    } else {
        (before, coef, false)
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.strip_prefix('+').unwrap_or(s);
    Rational::from_str(s).ok()
}

impl<const D: u32> Serialize for QuadraticNumber<D> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de, const D: u32> Deserialize<'de> for QuadraticNumber<D> {
    fn deserialize<De: Deserializer<'de>>(deserializer: De) -> std::result::Result<Self, De::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Field arithmetic with division by zero reported as an error.
pub fn arith<const D: u32>(
    a: &QuadraticNumber<D>,
    b: &QuadraticNumber<D>,
    op: ArithOp,
) -> Result<QuadraticNumber<D>> {
    Ok(match op {
        ArithOp::Add => a.clone() + b,
        ArithOp::Sub => a.clone() - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.clone() * &b.inv()?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn phi() -> GoldenNumber {
        GoldenNumber::phi()
    }

    #[test]
    fn phi_squared_is_phi_plus_one() {
        assert_eq!(&phi() * &phi(), phi() + GoldenNumber::one());
    }

    #[test]
    fn reciprocal_of_phi() {
        let inv = arith(&GoldenNumber::one(), &phi(), ArithOp::Div).unwrap();
        assert_eq!(inv, phi() - GoldenNumber::one());
        assert_eq!(inv, GoldenNumber::phi_inv());
    }

    #[test]
    fn unit_length_identity() {
        let p2 = phi().pow(2).unwrap();
        let m2 = phi().pow(-2).unwrap();
        assert_eq!(p2 + m2 + GoldenNumber::one(), GoldenNumber::integer(4));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = arith(&phi(), &GoldenNumber::zero(), ArithOp::Div);
        assert_eq!(r, Err(Error::DivisionByZero));
        assert!(GoldenNumber::zero().inv().is_err());
    }

    #[test]
    fn tau_examples() {
        assert_eq!(phi().tau(), -GoldenNumber::phi_inv());
        assert_eq!(phi().tau(), GoldenNumber::from_ratios((1, 2), (-1, 2)));
        let q = GoldenNumber::rational(rat(3, 7));
        assert_eq!(q.tau(), q);
        assert_eq!(GoldenNumber::sqrt5().tau().tau(), GoldenNumber::sqrt5());
    }

    #[test]
    fn sign_examples() {
        // φ − 8/5 = −11/10 + √5/2 > 0 since 125 > 121
        let x = phi() - GoldenNumber::rational(rat(8, 5));
        assert_eq!(x.signum(), Sign::Positive);
        assert_eq!(GoldenNumber::zero().signum(), Sign::Zero);
        assert_eq!(phi().tau().signum(), Sign::Negative);
        assert!(GoldenNumber::phi_inv() < GoldenNumber::one());
        assert!(GoldenNumber::sqrt5() > GoldenNumber::integer(2));
    }

    #[test]
    fn display_and_parse() {
        let x = GoldenNumber::from_ratios((1, 2), (-3, 4));
        assert_eq!(x.to_string(), "1/2 + (-3/4)√5");
        for text in ["1/2 + (-3/4)√5", "1/2-(3/4)√5", "1/2 - 3/4 sqrt5", " 1/2+(-3/4)sqrt5"] {
            assert_eq!(text.parse::<GoldenNumber>().unwrap(), x, "{text}");
        }
        assert_eq!("√5".parse::<GoldenNumber>().unwrap(), GoldenNumber::sqrt5());
        assert_eq!("-√5".parse::<GoldenNumber>().unwrap(), -GoldenNumber::sqrt5());
        assert_eq!("(2)√5".parse::<GoldenNumber>().unwrap().to_string(), "(2)√5");
        assert_eq!("-7/3".parse::<GoldenNumber>().unwrap(), GoldenNumber::rational(rat(-7, 3)));
        assert!("1/2 + x".parse::<GoldenNumber>().is_err());
        assert_eq!(Sqrt3Number::root().to_string(), "(1)√3");
    }

    #[test]
    fn serde_uses_text_form() {
        let x = GoldenNumber::phi();
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, "\"1/2 + (1/2)√5\"");
        let back: GoldenNumber = serde_json::from_str(&json).unwrap();
        assert_eq!(back, x);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-200i64..200, 1i64..60).prop_map(|(n, d)| rat(n, d))
    }

    fn golden() -> impl Strategy<Value = GoldenNumber> {
        (small_rational(), small_rational()).prop_map(|(r, s)| GoldenNumber::new(r, s))
    }

    proptest! {
        #[test]
        fn tau_is_a_ring_homomorphism(x in golden(), y in golden()) {
            prop_assert_eq!((x.clone() + &y).tau(), x.tau() + &y.tau());
            prop_assert_eq!((&x * &y).tau(), &x.tau() * &y.tau());
            prop_assert_eq!(x.tau().tau(), x);
        }

        #[test]
        fn inverse_is_two_sided(x in golden()) {
            prop_assume!(!x.is_zero());
            prop_assert_eq!(&x * &x.inv().unwrap(), GoldenNumber::one());
        }

        #[test]
        fn text_form_round_trips(x in golden()) {
            prop_assert_eq!(x.to_string().parse::<GoldenNumber>().unwrap(), x);
        }
    }

    /// Sign oracle: compare against √5 to 50 digits using scaled integers.
    #[test]
    fn sign_agrees_with_fifty_digit_evaluation() {
        use rand::{Rng, SeedableRng};
        let sqrt5_digits = "223606797749978969640917366873127623544061835961152";
        let scale = BigInt::from(10).pow(50);
        let sqrt5_scaled: BigInt = sqrt5_digits.parse().unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let (a, b, c, d) = (
                rng.gen_range(-10_000i64..10_000),
                rng.gen_range(1i64..500),
                rng.gen_range(-10_000i64..10_000),
                rng.gen_range(1i64..500),
            );
            let x = GoldenNumber::from_ratios((a, b), (c, d));
            // value·b·d·10^50 ≈ a·d·10^50 + c·b·sqrt5_scaled
            let approx = BigInt::from(a * d) * &scale + BigInt::from(c * b) * &sqrt5_scaled;
            let expected = match approx.sign() {
                num_bigint::Sign::Minus => Sign::Negative,
                num_bigint::Sign::NoSign => Sign::Zero,
                num_bigint::Sign::Plus => Sign::Positive,
            };
            assert_eq!(x.signum(), expected, "{x}");
        }
    }
}
