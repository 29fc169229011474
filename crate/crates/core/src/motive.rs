//! Classes in the Lefschetz subring `Z[L]` of the Grothendieck ring, and
//! point counts of isotropic Grassmannians over finite fields.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::serde_big::BigSigned;
use crate::weyl::{length_histogram, CosetCache, ParabolicSubgroup};

/// An integer polynomial in `L`; index `j` holds the coefficient of `L^j`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LPolynomial {
    coeffs: Vec<BigInt>,
}

impl LPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        LPolynomial { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_i64s(&[1])
    }

    /// `L^k`.
    pub fn lefschetz_power(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[k] = BigInt::one();
        Self::new(c)
    }

    /// `[P^r] = 1 + L + ⋯ + L^r`.
    pub fn projective_space(r: usize) -> Self {
        Self::new(vec![BigInt::one(); r + 1])
    }

    /// `x^k − 1`.
    fn power_minus_one(k: usize) -> Self {
        let mut c = vec![BigInt::zero(); k + 1];
        c[0] = -BigInt::one();
        c[k] += BigInt::one();
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> BigInt {
        self.coeffs.get(j).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at `L = 1`.
    pub fn coefficient_sum(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Exact division; fails if the remainder is nonzero or a leading
    /// coefficient does not divide.
    pub fn div_exact(&self, divisor: &LPolynomial) -> Result<LPolynomial> {
        let Some(dd) = divisor.degree() else {
            return Err(Error::InexactDivision(
                "division by the zero polynomial".into(),
            ));
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        let n = rem.len();
        if n <= dd {
            return Err(Error::InexactDivision(format!("{self} by {divisor}")));
        }
        let mut quot = vec![BigInt::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::InexactDivision(format!("{self} by {divisor}")));
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(Error::InexactDivision(format!("{self} by {divisor}")));
        }
        Ok(Self::new(quot))
    }
}

impl Add for &LPolynomial {
    type Output = LPolynomial;
    fn add(self, rhs: &LPolynomial) -> LPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LPolynomial::new((0..n).map(|j| self.coeff(j) + rhs.coeff(j)).collect())
    }
}

impl Sub for &LPolynomial {
    type Output = LPolynomial;
    fn sub(self, rhs: &LPolynomial) -> LPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        LPolynomial::new((0..n).map(|j| self.coeff(j) - rhs.coeff(j)).collect())
    }
}

impl Neg for &LPolynomial {
    type Output = LPolynomial;
    fn neg(self) -> LPolynomial {
        LPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Mul for &LPolynomial {
    type Output = LPolynomial;
    fn mul(self, rhs: &LPolynomial) -> LPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return LPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        LPolynomial::new(out)
    }
}

/// `1 + L + 2*L^2 - L^5`; the zero polynomial prints as `0`.
impl fmt::Display for LPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            first = false;
            let unit = mag.is_one();
            match j {
                0 => write!(f, "{mag}")?,
                1 if unit => f.write_str("L")?,
                1 => write!(f, "{mag}*L")?,
                _ if unit => write!(f, "L^{j}")?,
                _ => write!(f, "{mag}*L^{j}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl Serialize for LPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let v: Vec<BigSigned> = self.coeffs.iter().cloned().map(BigSigned).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<BigSigned>::deserialize(d)?;
        Ok(LPolynomial::new(v.into_iter().map(|b| b.0).collect()))
    }
}

/// `[G/P]` as the length generating function of `W^I`: one affine cell
/// `A^{ℓ(w)}` per minimal coset representative.
pub fn class_of_quotient(p: &ParabolicSubgroup, cap: usize) -> Result<LPolynomial> {
    Ok(class_from_lengths(&p.coset_lengths(cap)?))
}

/// Same as [`class_of_quotient`], reading and filling an on-disk cache.
pub fn class_of_quotient_cached(
    p: &ParabolicSubgroup,
    cache: &CosetCache,
    cap: usize,
) -> Result<LPolynomial> {
    Ok(class_from_lengths(&cache.coset_lengths(p, cap)?))
}

pub fn class_from_lengths(lengths: &[u32]) -> LPolynomial {
    LPolynomial::new(
        length_histogram(lengths)
            .into_iter()
            .map(BigInt::from)
            .collect(),
    )
}

fn check_igr(d: usize, n: usize) -> Result<()> {
    if d == 0 || d > n {
        return Err(Error::InvalidParameter(format!(
            "IGr({d}, {}) needs 1 <= d <= n",
            2 * n
        )));
    }
    Ok(())
}

/// `#IGr(d, 2n)(F_q) = ∏_{j=1}^{d} (q^{2(n−j+1)} − 1)/(q^j − 1)`.
pub fn igr_point_count(d: usize, n: usize, q: u64) -> Result<BigUint> {
    check_igr(d, n)?;
    if q < 2 {
        return Err(Error::InvalidParameter(format!(
            "field size {q} must be at least 2"
        )));
    }
    let q = BigUint::from(q);
    let one = BigUint::one();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for j in 1..=d {
        num *= Pow::pow(&q, (2 * (n - j + 1)) as u32) - &one;
        den *= Pow::pow(&q, j as u32) - &one;
    }
    let (count, r) = num.div_rem(&den);
    if !r.is_zero() {
        return Err(Error::InexactDivision(format!(
            "point count of IGr({d}, {}) at q = {q}",
            2 * n
        )));
    }
    Ok(count)
}

/// The point-count polynomial of `IGr(d, 2n)` read as a polynomial in `L`,
/// by exact division of `∏ (x^{2(n−j+1)} − 1)` by `∏ (x^j − 1)`.
pub fn igr_class(d: usize, n: usize) -> Result<LPolynomial> {
    check_igr(d, n)?;
    let mut num = LPolynomial::one();
    let mut den = LPolynomial::one();
    for j in 1..=d {
        num = &num * &LPolynomial::power_minus_one(2 * (n - j + 1));
        den = &den * &LPolynomial::power_minus_one(j);
    }
    num.div_exact(&den)
}

/// `[P^{r−2}]·(f2 − f1)`, which equals `L^{r−1}([Z_1] − [Z_2])` for a roof of
/// rank `r`; zero certifies the L-equivalence relation.
pub fn roof_identity_residual(f1: &LPolynomial, f2: &LPolynomial, r: usize) -> LPolynomial {
    assert!(r >= 2, "roof rank must be at least 2");
    &LPolynomial::projective_space(r - 2) * &(f2 - f1)
}

/// Convenience for callers holding machine integers.
pub fn big(x: i64) -> BigInt {
    BigInt::from(x)
}
