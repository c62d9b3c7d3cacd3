//! Values kept as `unit * prod atom^exponent`.
//!
//! Gram determinants are accumulated in this form so that factor scanning is
//! exact set membership and nothing is expanded until asked. The atom
//! alphabet covers every factor the determinant formulas produce: `r - eps
//! q^a`, quantum integers `[k]`, `q^2 - 1`, plus a primitive `Generic`
//! fallback that keeps `expand(factorize(v)) = v` total.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::rational::RationalFn;
use super::ArithError;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum FactorAtom {
    /// `r - eps * q^a`, `eps` in `{+1, -1}`.
    RMinus { eps: i8, a: i64 },
    /// The quantum integer `[k] = 1 + q^2 + ... + q^{2k-2}`, `k >= 2`.
    QuantumInt(u32),
    /// `q^2 - 1`.
    QSquareMinusOne,
    /// Primitive, canonically normalized residual factor.
    Generic(LaurentPoly),
}

impl FactorAtom {
    pub fn poly(&self) -> LaurentPoly {
        match self {
            FactorAtom::RMinus { eps, a } => LaurentPoly::r_minus_eps_q(*eps, *a),
            FactorAtom::QuantumInt(k) => quantum_int_poly(*k as i64),
            FactorAtom::QSquareMinusOne => LaurentPoly::q2_minus_one(),
            FactorAtom::Generic(p) => p.clone(),
        }
    }

    /// Short label used in rendered output, e.g. `r-q^3`, `[2]`, `q^2-1`.
    pub fn label(&self) -> String {
        match self {
            FactorAtom::RMinus { eps, a } => {
                let sign = if *eps >= 0 { '-' } else { '+' };
                match a {
                    0 => format!("r{sign}1"),
                    1 => format!("r{sign}q"),
                    _ => format!("r{sign}q^{a}"),
                }
            }
            FactorAtom::QuantumInt(k) => format!("[{k}]"),
            FactorAtom::QSquareMinusOne => "q^2-1".to_string(),
            FactorAtom::Generic(p) => p.canonical_string(),
        }
    }

    fn needs_parens(&self) -> bool {
        !matches!(self, FactorAtom::QuantumInt(_))
    }
}

/// `[m]` for any integer `m`: `[0] = 0` and `[-m] = -q^{-2m} [m]`, the unique
/// Laurent extension with `[m] = (q^{2m} - 1)/(q^2 - 1)`.
pub fn quantum_int_poly(m: i64) -> LaurentPoly {
    if m == 0 {
        return LaurentPoly::zero();
    }
    if m < 0 {
        return -quantum_int_poly(-m).shift(2 * m, 0);
    }
    let mut p = LaurentPoly::zero();
    for j in 0..m {
        p += &LaurentPoly::q_pow(2 * j);
    }
    p
}

/// Monomial unit `coeff * q^{e_q} * r^{e_r}` with a rational coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactorUnit {
    pub coeff: BigRational,
    pub e_q: i64,
    pub e_r: i64,
}

impl FactorUnit {
    pub fn one() -> Self {
        FactorUnit { coeff: BigRational::one(), e_q: 0, e_r: 0 }
    }
}

/// A nonzero value of `Q(q, r)` as `unit * prod atom^exp`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FactoredValue {
    unit: FactorUnit,
    factors: BTreeMap<FactorAtom, i64>,
}

impl FactoredValue {
    pub fn one() -> Self {
        FactoredValue { unit: FactorUnit::one(), factors: BTreeMap::new() }
    }

    pub fn from_parts(unit: FactorUnit, factors: BTreeMap<FactorAtom, i64>) -> Self {
        let mut v = FactoredValue { unit, factors };
        v.factors.retain(|_, e| *e != 0);
        v
    }

    pub fn from_unit(coeff: BigRational, e_q: i64, e_r: i64) -> Self {
        assert!(!coeff.is_zero(), "factored values are nonzero");
        FactoredValue { unit: FactorUnit { coeff, e_q, e_r }, factors: BTreeMap::new() }
    }

    pub fn mul_atom_assign(&mut self, atom: &FactorAtom, e: i64) {
        if e == 0 {
            return;
        }
        let slot = self.factors.entry(atom.clone()).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.factors.remove(atom);
        }
    }

    pub fn unit(&self) -> &FactorUnit {
        &self.unit
    }

    pub fn factors(&self) -> impl Iterator<Item = (&FactorAtom, i64)> {
        self.factors.iter().map(|(a, e)| (a, *e))
    }

    pub fn exponent_of(&self, atom: &FactorAtom) -> i64 {
        self.factors.get(atom).copied().unwrap_or(0)
    }

    /// Multiply `other^e` into `self`.
    pub fn mul_pow_assign(&mut self, other: &FactoredValue, e: i64) {
        if e == 0 {
            return;
        }
        assert!(!other.unit.coeff.is_zero(), "factored values are nonzero");
        self.unit.coeff *= rational_pow(&other.unit.coeff, e);
        self.unit.e_q += e * other.unit.e_q;
        self.unit.e_r += e * other.unit.e_r;
        for (atom, exp) in &other.factors {
            let slot = self.factors.entry(atom.clone()).or_insert(0);
            *slot += e * exp;
            if *slot == 0 {
                self.factors.remove(atom);
            }
        }
    }

    pub fn mul(&self, other: &FactoredValue) -> FactoredValue {
        let mut out = self.clone();
        out.mul_pow_assign(other, 1);
        out
    }

    pub fn pow(&self, e: i64) -> FactoredValue {
        let mut out = FactoredValue::one();
        out.mul_pow_assign(self, e);
        out
    }

    /// Expand into an unreduced numerator/denominator pair.
    pub fn expand_pair(&self) -> (LaurentPoly, LaurentPoly) {
        let mut num = LaurentPoly::monomial(
            self.unit.coeff.numer().clone(),
            self.unit.e_q,
            self.unit.e_r,
        );
        let mut den = LaurentPoly::constant(self.unit.coeff.denom().clone());
        for (atom, exp) in &self.factors {
            let p = atom.poly().pow(exp.unsigned_abs());
            if *exp > 0 {
                num = &num * &p;
            } else {
                den = &den * &p;
            }
        }
        (num, den)
    }

    /// Expand to a reduced rational function. Denominator atoms are divided
    /// out of the numerator exactly where possible, so the final gcd only
    /// ever sees small leftovers.
    pub fn expand(&self) -> RationalFn {
        let mut num = LaurentPoly::monomial(
            self.unit.coeff.numer().clone(),
            self.unit.e_q,
            self.unit.e_r,
        );
        let mut den = LaurentPoly::constant(self.unit.coeff.denom().clone());
        for (atom, exp) in &self.factors {
            if *exp > 0 {
                num = &num * &atom.poly().pow(*exp as u64);
            }
        }
        for (atom, exp) in &self.factors {
            if *exp < 0 {
                let p = atom.poly();
                for _ in 0..exp.unsigned_abs() {
                    match num.div_exact(&p) {
                        Some(next) => num = next,
                        None => den = &den * &p,
                    }
                }
            }
        }
        RationalFn::new(num, den).expect("factored denominators are nonzero")
    }

    /// Re-factorize the expanded value; the result is the canonical
    /// factorization of the represented value.
    pub fn canonicalized(&self) -> FactoredValue {
        factorize(&self.expand())
    }

    /// `(eps, a)` of the `r - eps q^a` atoms with positive net exponent in
    /// the canonical factorization.
    pub fn r_minus_atoms(&self) -> Vec<(i8, i64)> {
        self.canonicalized()
            .factors
            .iter()
            .filter_map(|(atom, exp)| match atom {
                FactorAtom::RMinus { eps, a } if *exp > 0 => Some((*eps, *a)),
                _ => None,
            })
            .collect()
    }

    /// Value equality through expansion (cross multiplication; exact).
    pub fn value_eq(&self, other: &FactoredValue) -> bool {
        let (n1, d1) = self.expand_pair();
        let (n2, d2) = other.expand_pair();
        &n1 * &d2 == &n2 * &d1
    }

    pub fn substitute_r(&self, eps: i8, a: i64) -> Result<RationalFn, ArithError> {
        self.expand().substitute_r(eps, a)
    }

    /// Deterministic text rendering, e.g. `32 * q^2 * (r-q)^2 * [3]^15`.
    pub fn render_text(&self) -> String {
        let mut parts: Vec<String> = Vec::new();
        if !self.unit.coeff.is_one() {
            parts.push(self.unit.coeff.to_string());
        }
        if self.unit.e_r != 0 {
            parts.push(if self.unit.e_r == 1 { "r".into() } else { format!("r^{}", self.unit.e_r) });
        }
        if self.unit.e_q != 0 {
            parts.push(if self.unit.e_q == 1 { "q".into() } else { format!("q^{}", self.unit.e_q) });
        }
        for (atom, exp) in &self.factors {
            let base = if atom.needs_parens() {
                format!("({})", atom.label())
            } else {
                atom.label()
            };
            parts.push(if *exp == 1 { base } else { format!("{base}^{exp}") });
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" * ")
        }
    }
}

impl fmt::Display for FactoredValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_text())
    }
}

fn rational_pow(x: &BigRational, e: i64) -> BigRational {
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

/// Factor a nonzero rational function over the atom alphabet by exact trial
/// division. Deterministic: the output depends only on the value.
pub fn factorize(v: &RationalFn) -> FactoredValue {
    assert!(!v.is_zero(), "cannot factorize zero");
    let (cn, qn, rn, num_atoms) = factor_poly(v.num());
    let (cd, qd, rd, den_atoms) = factor_poly(v.den());
    let unit = FactorUnit {
        coeff: BigRational::new(cn, cd),
        e_q: qn - qd,
        e_r: rn - rd,
    };
    let mut factors = num_atoms;
    for (atom, exp) in den_atoms {
        let slot = factors.entry(atom.clone()).or_insert(0);
        *slot -= exp;
        if *slot == 0 {
            factors.remove(&atom);
        }
    }
    FactoredValue { unit, factors }
}

/// Factor a nonzero Laurent polynomial as
/// `content * q^{e_q} * r^{e_r} * prod atom^exp` with positive atoms only.
pub fn factor_poly(p: &LaurentPoly) -> (BigInt, i64, i64, BTreeMap<FactorAtom, i64>) {
    assert!(!p.is_zero());
    let (mut work, e_q, e_r) = p.shift_to_origin();
    let mut content = work.content();
    if work.leading_coeff().is_negative() {
        content = -content;
    }
    work = work.divide_content(&content);

    let mut atoms: BTreeMap<FactorAtom, i64> = BTreeMap::new();
    let mut push = |atom: FactorAtom, count: i64, atoms: &mut BTreeMap<FactorAtom, i64>| {
        if count != 0 {
            *atoms.entry(atom).or_insert(0) += count;
        }
    };

    let mut extract = |atom_poly: &LaurentPoly, work: &mut LaurentPoly| -> i64 {
        let mut count = 0;
        while let Some(next) = work.div_exact(atom_poly) {
            *work = next;
            count += 1;
        }
        count
    };

    let q2m1 = LaurentPoly::q2_minus_one();
    let c = extract(&q2m1, &mut work);
    push(FactorAtom::QSquareMinusOne, c, &mut atoms);

    // Window for r - eps q^a derived from the q-degree of the input.
    let q_spread = work.max_exponents().map(|(_, q)| q).unwrap_or(0);
    let has_r = work.degree_r().unwrap_or(0) > 0;
    if has_r {
        let w = q_spread + 1;
        for eps in [1i8, -1] {
            for a in -w..=w {
                let atom = FactorAtom::RMinus { eps, a };
                let c = extract(&atom.poly(), &mut work);
                push(atom, c, &mut atoms);
            }
        }
    }

    // Quantum integers, largest first so [k] is not shredded into smaller
    // cyclotomic pieces.
    let q_spread = work.max_exponents().map(|(_, q)| q).unwrap_or(0);
    let k_max = (q_spread / 2 + 1).max(0) as u32;
    for k in (2..=k_max).rev() {
        let c = extract(&FactorAtom::QuantumInt(k).poly(), &mut work);
        push(FactorAtom::QuantumInt(k), c, &mut atoms);
    }

    // A sweep of q^m + 1 binomials tidies the cyclotomic residue left by the
    // degenerate-parameter determinants.
    let q_spread = work.max_exponents().map(|(_, q)| q).unwrap_or(0);
    for m in (1..=q_spread).rev() {
        let b = LaurentPoly::q_pow(m) + &LaurentPoly::one();
        let c = extract(&b, &mut work);
        push(FactorAtom::Generic(b), c, &mut atoms);
    }

    if !work.is_one() {
        if let Some((c, 0, 0)) = work.as_monomial() {
            content *= c;
        } else {
            push(FactorAtom::Generic(work.clone()), 1, &mut atoms);
        }
    }
    (content, e_q, e_r, atoms)
}

// Serde support: the factor map is serialized as a sequence of pairs and the
// unit coefficient as a `num/den` string, which round-trips exactly.

#[derive(serde::Serialize, serde::Deserialize)]
struct UnitRepr {
    coeff: String,
    e_q: i64,
    e_r: i64,
}

#[derive(serde::Serialize, serde::Deserialize)]
enum AtomRepr {
    RMinus { eps: i8, a: i64 },
    QuantumInt(u32),
    QSquareMinusOne,
    Generic(Vec<(String, i64, i64)>),
}

#[derive(serde::Serialize, serde::Deserialize)]
struct FactoredRepr {
    unit: UnitRepr,
    factors: Vec<(AtomRepr, i64)>,
}

fn poly_to_triples(p: &LaurentPoly) -> Vec<(String, i64, i64)> {
    p.iter_terms()
        .map(|((e_r, e_q), c)| (c.to_string(), *e_q, *e_r))
        .collect()
}

fn poly_from_triples(ts: &[(String, i64, i64)]) -> Result<LaurentPoly, String> {
    let mut p = LaurentPoly::zero();
    for (c, e_q, e_r) in ts {
        let c: BigInt = c.parse().map_err(|e| format!("bad coefficient: {e}"))?;
        p += &LaurentPoly::monomial(c, *e_q, *e_r);
    }
    Ok(p)
}

impl serde::Serialize for FactoredValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = FactoredRepr {
            unit: UnitRepr {
                coeff: self.unit.coeff.to_string(),
                e_q: self.unit.e_q,
                e_r: self.unit.e_r,
            },
            factors: self
                .factors
                .iter()
                .map(|(a, e)| {
                    let ar = match a {
                        FactorAtom::RMinus { eps, a } => AtomRepr::RMinus { eps: *eps, a: *a },
                        FactorAtom::QuantumInt(k) => AtomRepr::QuantumInt(*k),
                        FactorAtom::QSquareMinusOne => AtomRepr::QSquareMinusOne,
                        FactorAtom::Generic(p) => AtomRepr::Generic(poly_to_triples(p)),
                    };
                    (ar, *e)
                })
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> serde::Deserialize<'de> for FactoredValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let repr = FactoredRepr::deserialize(d)?;
        let coeff: BigRational = repr.unit.coeff.parse().map_err(D::Error::custom)?;
        let mut factors = BTreeMap::new();
        for (ar, e) in repr.factors {
            let atom = match ar {
                AtomRepr::RMinus { eps, a } => FactorAtom::RMinus { eps, a },
                AtomRepr::QuantumInt(k) => FactorAtom::QuantumInt(k),
                AtomRepr::QSquareMinusOne => FactorAtom::QSquareMinusOne,
                AtomRepr::Generic(ts) => {
                    FactorAtom::Generic(poly_from_triples(&ts).map_err(D::Error::custom)?)
                }
            };
            factors.insert(atom, e);
        }
        Ok(FactoredValue {
            unit: FactorUnit { coeff, e_q: repr.unit.e_q, e_r: repr.unit.e_r },
            factors,
        })
    }
}
