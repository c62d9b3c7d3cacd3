//! The fraction field of `Z[q^±1, r^±1]`: exact rational functions in `q, r`.
//!
//! Values are kept in a canonical reduced form so that structural equality is
//! value equality: the gcd of numerator and denominator is a unit, the
//! denominator has minimal exponents zero and positive leading coefficient
//! under the lexicographic `(e_r, e_q)` order.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::gcd::poly_gcd;
use super::laurent::LaurentPoly;
use super::ArithError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalFn {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RationalFn {
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    /// Reduce an arbitrary fraction to canonical form.
    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RationalFn { num, den: LaurentPoly::one() };
        }
        let (num, den) = if den.as_monomial().is_some() || num.as_monomial().is_some() {
            (num, den)
        } else {
            let g = poly_gcd(&num, &den).expect("nonzero inputs");
            if g.is_one() {
                (num, den)
            } else {
                (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
            }
        };
        Self::normalize_units(num, den)
    }

    /// Canonical-form bookkeeping for a fraction already in lowest terms:
    /// shift the denominator's monomial part across the bar, strip the
    /// common integer content, fix the sign.
    fn normalize_units(mut num: LaurentPoly, mut den: LaurentPoly) -> Self {
        if num.is_zero() {
            return RationalFn { num, den: LaurentPoly::one() };
        }
        let (min_r, min_q) = den.min_exponents().unwrap();
        if min_r != 0 || min_q != 0 {
            den = den.shift(-min_q, -min_r);
            num = num.shift(-min_q, -min_r);
        }
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = num.divide_content(&c);
            den = den.divide_content(&c);
        }
        if den.leading_coeff().is_negative() {
            num = -num;
            den = -den;
        }
        RationalFn { num, den }
    }

    /// Construct from parts already known to be canonical (crate internal).
    pub(crate) fn from_canonical_parts(num: LaurentPoly, den: LaurentPoly) -> Self {
        RationalFn { num, den }
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RationalFn { num: p, den: LaurentPoly::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    pub fn r() -> Self {
        Self::from_poly(LaurentPoly::r())
    }

    pub fn monomial(c: impl Into<BigInt>, e_q: i64, e_r: i64) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, e_q, e_r))
    }

    /// `omega = q - q^{-1}`.
    pub fn omega() -> Self {
        Self::from_poly(LaurentPoly::omega())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize_units(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: i64) -> Result<Self, ArithError> {
        if e == 0 {
            return Ok(Self::one());
        }
        let base = if e < 0 { self.inv()? } else { self.clone() };
        // Numerator and denominator are already coprime, so powers need no
        // further reduction beyond unit bookkeeping.
        let n = base.num.pow(e.unsigned_abs());
        let d = base.den.pow(e.unsigned_abs());
        Ok(Self::normalize_units(n, d))
    }

    /// Exact substitution `r -> eps * q^a` on the reduced fraction.
    pub fn substitute_r(&self, eps: i8, a: i64) -> Result<Self, ArithError> {
        let den = self.den.substitute_r(eps, a);
        if den.is_zero() {
            return Err(ArithError::SpecializationPole);
        }
        let num = self.num.substitute_r(eps, a);
        Ok(Self::reduced(num, den))
    }

    /// Exact evaluation over the rationals.
    pub fn eval_rational(&self, q0: &BigRational, r0: &BigRational) -> Result<BigRational, ArithError> {
        if q0.is_zero() || r0.is_zero() {
            return Err(ArithError::InvalidPoint("q0 and r0 must be nonzero".into()));
        }
        let den = eval_poly_rational(&self.den, q0, r0);
        if den.is_zero() {
            return Err(ArithError::EvaluationPole);
        }
        Ok(eval_poly_rational(&self.num, q0, r0) / den)
    }

    /// Exact evaluation over the prime field `F_p`.
    pub fn eval_mod_p(&self, q0: u64, r0: u64, p: u64) -> Result<u64, ArithError> {
        if !is_prime(p) {
            return Err(ArithError::InvalidPoint(format!("{p} is not prime")));
        }
        let (q0, r0) = (q0 % p, r0 % p);
        if q0 == 0 || r0 == 0 {
            return Err(ArithError::InvalidPoint("q0 and r0 must be nonzero mod p".into()));
        }
        let den = eval_poly_mod_p(&self.den, q0, r0, p);
        if den == 0 {
            return Err(ArithError::EvaluationPole);
        }
        let num = eval_poly_mod_p(&self.num, q0, r0, p);
        Ok(mul_mod(num, inv_mod(den, p), p))
    }

    /// Canonical string, `num / den` with the denominator elided when 1.
    pub fn canonical_string(&self) -> String {
        if self.den.is_one() {
            self.num.canonical_string()
        } else {
            format!("({}) / ({})", self.num.canonical_string(), self.den.canonical_string())
        }
    }
}

impl fmt::Display for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for RationalFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl Add<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn add(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        // a/b + c/d with g = gcd(b, d): the sum a(d/g) + c(b/g) over b(d/g)
        // can only share factors with g, so the final gcd stays small.
        if self.den == rhs.den {
            let num = self.num.clone() + &rhs.num;
            if num.is_zero() {
                return RationalFn::zero();
            }
            let g = poly_gcd(&num, &self.den).expect("nonzero");
            return if g.is_one() {
                RationalFn::normalize_units(num, self.den.clone())
            } else {
                RationalFn::normalize_units(
                    num.div_exact(&g).unwrap(),
                    self.den.div_exact(&g).unwrap(),
                )
            };
        }
        let g = poly_gcd(&self.den, &rhs.den).expect("nonzero");
        if g.is_one() {
            // Coprime denominators: the result is already in lowest terms.
            let num = (&self.num * &rhs.den) + &(&rhs.num * &self.den);
            let den = &self.den * &rhs.den;
            return RationalFn::normalize_units(num, den);
        }
        let b_red = self.den.div_exact(&g).unwrap();
        let d_red = rhs.den.div_exact(&g).unwrap();
        let num = (&self.num * &d_red) + &(&rhs.num * &b_red);
        if num.is_zero() {
            return RationalFn::zero();
        }
        let h = poly_gcd(&num, &g).expect("nonzero");
        let (num, den) = if h.is_one() {
            (num, &self.den * &d_red)
        } else {
            (num.div_exact(&h).unwrap(), &self.den.div_exact(&h).unwrap() * &d_red)
        };
        RationalFn::normalize_units(num, den)
    }
}

impl Sub<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn sub(self, rhs: &RationalFn) -> RationalFn {
        self + &(-rhs)
    }
}

impl Neg for &RationalFn {
    type Output = RationalFn;
    fn neg(self) -> RationalFn {
        RationalFn { num: -self.num.clone(), den: self.den.clone() }
    }
}

impl Mul<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn mul(self, rhs: &RationalFn) -> RationalFn {
        if self.is_zero() || rhs.is_zero() {
            return RationalFn::zero();
        }
        // Cross-reduce before multiplying; the four pieces are then pairwise
        // coprime and the product needs no further gcd.
        let g1 = poly_gcd(&self.num, &rhs.den).expect("nonzero");
        let g2 = poly_gcd(&rhs.num, &self.den).expect("nonzero");
        let n1 = if g1.is_one() { self.num.clone() } else { self.num.div_exact(&g1).unwrap() };
        let d2 = if g1.is_one() { rhs.den.clone() } else { rhs.den.div_exact(&g1).unwrap() };
        let n2 = if g2.is_one() { rhs.num.clone() } else { rhs.num.div_exact(&g2).unwrap() };
        let d1 = if g2.is_one() { self.den.clone() } else { self.den.div_exact(&g2).unwrap() };
        RationalFn::normalize_units(&n1 * &n2, &d1 * &d2)
    }
}

impl Div<&RationalFn> for &RationalFn {
    type Output = RationalFn;
    fn div(self, rhs: &RationalFn) -> RationalFn {
        self * &rhs.inv().expect("division by zero rational function")
    }
}

fn eval_poly_rational(p: &LaurentPoly, q0: &BigRational, r0: &BigRational) -> BigRational {
    let mut acc = BigRational::zero();
    for ((e_r, e_q), c) in p.iter_terms() {
        let term = BigRational::from(c.clone()) * rat_pow(q0, *e_q) * rat_pow(r0, *e_r);
        acc += term;
    }
    acc
}

fn rat_pow(x: &BigRational, e: i64) -> BigRational {
    if e == 0 {
        return BigRational::one();
    }
    let base = if e < 0 { x.recip() } else { x.clone() };
    let mut acc = BigRational::one();
    let mut b = base;
    let mut e = e.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            acc *= &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    acc
}

fn eval_poly_mod_p(p: &LaurentPoly, q0: u64, r0: u64, m: u64) -> u64 {
    let mut acc = 0u64;
    for ((e_r, e_q), c) in p.iter_terms() {
        let c = bigint_mod(c, m);
        let t = mul_mod(c, mul_mod(pow_mod_signed(q0, *e_q, m), pow_mod_signed(r0, *e_r, m), m), m);
        acc = (acc + t) % m;
    }
    acc
}

fn bigint_mod(c: &BigInt, m: u64) -> u64 {
    let r = c.mod_floor(&BigInt::from(m));
    u64::try_from(r).expect("mod_floor result fits")
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

fn pow_mod_signed(b: u64, e: i64, m: u64) -> u64 {
    if e >= 0 {
        pow_mod(b, e as u64, m)
    } else {
        pow_mod(inv_mod(b, m), e.unsigned_abs(), m)
    }
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(num: LaurentPoly, den: LaurentPoly) -> RationalFn {
        RationalFn::new(num, den).unwrap()
    }

    #[test]
    fn canonical_form_is_unique() {
        // (q^2-1)/(q-q^-1) reduces to q.
        let v = rf(LaurentPoly::q2_minus_one(), LaurentPoly::omega());
        assert_eq!(v, RationalFn::q());
    }

    #[test]
    fn cross_multiplication_equality() {
        // a/b == c/d iff ad == cb, on a couple of fixed samples.
        let a = rf(
            &LaurentPoly::r() * &LaurentPoly::q2_minus_one(),
            LaurentPoly::r_minus_eps_q(1, 1),
        );
        let b = rf(
            &(&LaurentPoly::r() * &LaurentPoly::q2_minus_one()) * &LaurentPoly::q(),
            &LaurentPoly::r_minus_eps_q(1, 1) * &LaurentPoly::q(),
        );
        assert_eq!(a, b);
        assert_eq!(&a.num * b.den(), &b.num * a.den());
    }

    #[test]
    fn substitute_r_examples() {
        let rq = RationalFn::from_poly(LaurentPoly::r_minus_eps_q(1, 1));
        assert!(rq.substitute_r(1, 1).unwrap().is_zero());

        // (r^2 q^2 - 1)/(r - q) at r = q^-1 is 0.
        let num = LaurentPoly::monomial(1, 2, 2) + &LaurentPoly::constant(-1);
        let v = rf(num, LaurentPoly::r_minus_eps_q(1, 1));
        assert!(v.substitute_r(1, -1).unwrap().is_zero());
    }

    #[test]
    fn substitution_pole_detected() {
        let v = rf(LaurentPoly::one(), LaurentPoly::r_minus_eps_q(1, 1));
        assert!(matches!(v.substitute_r(1, 1), Err(ArithError::SpecializationPole)));
    }

    #[test]
    fn eval_rational_and_mod_p() {
        let three = rf(
            LaurentPoly::one() + &LaurentPoly::q_pow(2) + &LaurentPoly::q_pow(4),
            LaurentPoly::one(),
        );
        let one = BigRational::one();
        assert_eq!(three.eval_rational(&one, &one).unwrap(), BigRational::from(BigInt::from(3)));

        let rq = RationalFn::from_poly(LaurentPoly::r_minus_eps_q(1, 1));
        assert_eq!(rq.eval_mod_p(2, 2, 7).unwrap(), 0);
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(7));
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(1));
        assert!(!is_prime(561));
    }
}
