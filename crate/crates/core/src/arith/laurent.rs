//! Exact Laurent polynomials in the two indeterminates `q` and `r` with
//! arbitrary-precision integer coefficients.
//!
//! Every scalar appearing in the library lives in `Z[q^±1, r^±1]` or its
//! fraction field, so all arithmetic here is exact: no rounding anywhere.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(e_r, e_q)` of a monomial `r^{e_r} q^{e_q}`.
///
/// The component order matters: the derived lexicographic `Ord` on the pair
/// (first `e_r`, ties by `e_q`) is the term order used for leading terms,
/// division and canonical printing.
pub type ExpPair = (i64, i64);

/// An element of `Z[q^±1, r^±1]`, stored as a sparse map from exponent pairs
/// to nonzero coefficients.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LaurentPoly {
    terms: BTreeMap<ExpPair, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0, 0)
    }

    /// `c * q^{e_q} * r^{e_r}`; a zero coefficient yields the zero polynomial.
    pub fn monomial(c: impl Into<BigInt>, e_q: i64, e_r: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((e_r, e_q), c);
        }
        LaurentPoly { terms }
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1, 0)
    }

    /// The indeterminate `r`.
    pub fn r() -> Self {
        Self::monomial(1, 0, 1)
    }

    /// `q^a`.
    pub fn q_pow(a: i64) -> Self {
        Self::monomial(1, a, 0)
    }

    /// `r^b`.
    pub fn r_pow(b: i64) -> Self {
        Self::monomial(1, 0, b)
    }

    /// `r - eps * q^a` for `eps` in `{+1, -1}`.
    pub fn r_minus_eps_q(eps: i8, a: i64) -> Self {
        let mut p = Self::r();
        p += &Self::monomial(-BigInt::from(eps), a, 0);
        p
    }

    /// `q^2 - 1`.
    pub fn q2_minus_one() -> Self {
        Self::monomial(1, 2, 0) + &Self::constant(-1)
    }

    /// `omega = q - q^{-1}`.
    pub fn omega() -> Self {
        Self::q_pow(1) + &Self::monomial(-1, -1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter_terms(&self) -> impl Iterator<Item = (&ExpPair, &BigInt)> {
        self.terms.iter()
    }

    /// True when the polynomial is a single term `c * q^a * r^b`.
    pub fn as_monomial(&self) -> Option<(&BigInt, i64, i64)> {
        if self.terms.len() == 1 {
            let ((e_r, e_q), c) = self.terms.iter().next().unwrap();
            Some((c, *e_q, *e_r))
        } else {
            None
        }
    }

    pub fn coeff(&self, e_q: i64, e_r: i64) -> BigInt {
        self.terms.get(&(e_r, e_q)).cloned().unwrap_or_else(BigInt::zero)
    }

    fn insert_term(&mut self, key: ExpPair, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(key) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Leading term under the lexicographic order on `(e_r, e_q)`.
    pub fn leading_term(&self) -> Option<(ExpPair, &BigInt)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }

    pub fn leading_coeff(&self) -> BigInt {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(BigInt::zero)
    }

    /// Minimal `(e_r, e_q)` over the support, component-wise.
    pub fn min_exponents(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let mut min_r = i64::MAX;
        let mut min_q = i64::MAX;
        for (e_r, e_q) in self.terms.keys() {
            min_r = min_r.min(*e_r);
            min_q = min_q.min(*e_q);
        }
        Some((min_r, min_q))
    }

    /// Maximal `(e_r, e_q)` over the support, component-wise.
    pub fn max_exponents(&self) -> Option<(i64, i64)> {
        if self.is_zero() {
            return None;
        }
        let mut max_r = i64::MIN;
        let mut max_q = i64::MIN;
        for (e_r, e_q) in self.terms.keys() {
            max_r = max_r.max(*e_r);
            max_q = max_q.max(*e_q);
        }
        Some((max_r, max_q))
    }

    /// Multiply by the monomial `q^{d_q} r^{d_r}`.
    pub fn shift(&self, d_q: i64, d_r: i64) -> Self {
        if d_q == 0 && d_r == 0 {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|((e_r, e_q), c)| ((*e_r + d_r, *e_q + d_q), c.clone()))
            .collect();
        LaurentPoly { terms }
    }

    /// Shift so that the minimal exponents become `(0, 0)`; returns the
    /// applied offset `(d_q, d_r)` such that `self = result * q^{d_q} r^{d_r}`.
    pub fn shift_to_origin(&self) -> (Self, i64, i64) {
        match self.min_exponents() {
            None => (Self::zero(), 0, 0),
            Some((min_r, min_q)) => (self.shift(-min_q, -min_r), min_q, min_r),
        }
    }

    /// Gcd of all coefficients, always nonnegative; zero for the zero poly.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn divide_content(&self, g: &BigInt) -> Self {
        if g.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(k, c)| (*k, c / g)).collect();
        LaurentPoly { terms }
    }

    pub fn mul_bigint(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        let terms = self.terms.iter().map(|(k, v)| (*k, v * c)).collect();
        LaurentPoly { terms }
    }

    pub fn pow(&self, mut e: u64) -> Self {
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

    /// Exact division in the Laurent ring: `Some(self / d)` when `d` divides
    /// `self` exactly, `None` otherwise. Monomials are units here, so only the
    /// polynomial part of `d` matters.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, e_q, e_r)) = d.as_monomial() {
            let shifted = self.shift(-e_q, -e_r);
            if c.is_one() {
                return Some(shifted);
            }
            let mut terms = BTreeMap::new();
            for (k, v) in shifted.terms {
                let (quo, rem) = v.div_rem(c);
                if !rem.is_zero() {
                    return None;
                }
                terms.insert(k, quo);
            }
            return Some(LaurentPoly { terms });
        }
        let (a, aq, ar) = self.shift_to_origin();
        let (b, bq, br) = d.shift_to_origin();
        let mut rem = a;
        let mut quo = LaurentPoly::zero();
        let (bk, bc) = b.leading_term().expect("nonzero divisor");
        let bc = bc.clone();
        while !rem.is_zero() {
            let (rk, rc) = rem.leading_term().unwrap();
            // In an exact division every leading term must be reducible.
            if rk.0 < bk.0 || rk.1 < bk.1 {
                return None;
            }
            let (c, cr) = rc.div_rem(&bc);
            if !cr.is_zero() {
                return None;
            }
            let t_key = (rk.0 - bk.0, rk.1 - bk.1);
            quo.insert_term(t_key, c.clone());
            let t = LaurentPoly::monomial(c, t_key.1, t_key.0);
            rem = rem - &(&t * &b);
        }
        Some(quo.shift(aq - bq, ar - br))
    }

    /// Substitute `r -> eps * q^a`, collapsing to a Laurent polynomial in `q`.
    pub fn substitute_r(&self, eps: i8, a: i64) -> Self {
        let mut out = Self::zero();
        for ((e_r, e_q), c) in &self.terms {
            let sign_flip = eps < 0 && e_r.rem_euclid(2) == 1;
            let c = if sign_flip { -c.clone() } else { c.clone() };
            out.insert_term((0, e_q + a * e_r), c);
        }
        out
    }

    /// View as a polynomial in `r` (exponents must be nonnegative): the entry
    /// at index `k` is the coefficient of `r^k`, itself a poly in `q` only.
    pub fn r_coefficients(&self) -> Vec<LaurentPoly> {
        if self.is_zero() {
            return Vec::new();
        }
        let (min_r, max_r) = {
            let mn = self.min_exponents().unwrap().0;
            let mx = self.max_exponents().unwrap().0;
            (mn, mx)
        };
        assert!(min_r >= 0, "r_coefficients requires nonnegative r-exponents");
        let mut out = vec![LaurentPoly::zero(); (max_r + 1) as usize];
        for ((e_r, e_q), c) in &self.terms {
            out[*e_r as usize].insert_term((0, *e_q), c.clone());
        }
        out
    }

    pub fn from_r_coefficients(coeffs: &[LaurentPoly]) -> Self {
        let mut out = Self::zero();
        for (k, p) in coeffs.iter().enumerate() {
            for ((e_r, e_q), c) in &p.terms {
                debug_assert_eq!(*e_r, 0);
                out.insert_term((k as i64, *e_q), c.clone());
            }
        }
        out
    }

    pub fn degree_r(&self) -> Option<i64> {
        self.max_exponents().map(|(r, _)| r)
    }

    /// Canonical string form: terms sorted by `(e_r, e_q)` descending,
    /// written as `c*r^b*q^a` with unit exponents elided.
    pub fn canonical_string(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, ((e_r, e_q), c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if i == 0 {
                if neg {
                    out.push('-');
                }
            } else if neg {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            let mut parts: Vec<String> = Vec::new();
            if !mag.is_one() || (*e_r == 0 && *e_q == 0) {
                parts.push(mag.to_string());
            }
            if *e_r != 0 {
                parts.push(if *e_r == 1 { "r".into() } else { format!("r^{e_r}") });
            }
            if *e_q != 0 {
                parts.push(if *e_q == 1 { "q".into() } else { format!("q^{e_q}") });
            }
            out.push_str(&parts.join("*"));
        }
        out
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.canonical_string())
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.insert_term(*k, c.clone());
        }
    }
}

impl Add<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: &LaurentPoly) -> LaurentPoly {
        self += rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (k, c) in &rhs.terms {
            self.insert_term(*k, -c.clone());
        }
    }
}

impl Sub<&LaurentPoly> for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: &LaurentPoly) -> LaurentPoly {
        self -= rhs;
        self
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        let terms = self.terms.into_iter().map(|(k, c)| (k, -c)).collect();
        LaurentPoly { terms }
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl Mul<&LaurentPoly> for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((c, e_q, e_r)) = rhs.as_monomial() {
            return self.shift(e_q, e_r).mul_bigint(c);
        }
        if let Some((c, e_q, e_r)) = self.as_monomial() {
            return rhs.shift(e_q, e_r).mul_bigint(c);
        }
        let (small, large) = if self.terms.len() <= rhs.terms.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut out = LaurentPoly::zero();
        for ((s_r, s_q), sc) in &small.terms {
            for ((l_r, l_q), lc) in &large.terms {
                out.insert_term((s_r + l_r, s_q + l_q), sc * lc);
            }
        }
        out
    }
}

impl MulAssign<&LaurentPoly> for LaurentPoly {
    fn mul_assign(&mut self, rhs: &LaurentPoly) {
        *self = &*self * rhs;
    }
}
