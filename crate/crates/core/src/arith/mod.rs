//! Exact arithmetic over `Z[q^±1, r^±1]` and its fraction field `Q(q, r)`,
//! together with factored representations and specializations.

mod factored;
mod gcd;
mod laurent;
mod rational;

pub use factored::{factor_poly, factorize, quantum_int_poly, FactorAtom, FactorUnit, FactoredValue};
pub use gcd::{canonicalize as canonical_poly, poly_gcd};
pub use laurent::{ExpPair, LaurentPoly};
pub use rational::{is_prime, RationalFn};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("gcd undefined")]
    GcdUndefined,
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization pole")]
    SpecializationPole,
    #[error("evaluation pole")]
    EvaluationPole,
    #[error("invalid evaluation point: {0}")]
    InvalidPoint(String),
}

/// The quantum integer `[m]` as a rational function; `[0] = 0` and
/// `[-m] = -q^{-2m} [m]`.
pub fn quantum_int(m: i64) -> RationalFn {
    RationalFn::from_poly(quantum_int_poly(m))
}

/// `[m]! = [m][m-1]...[1]`, with `[0]! = 1`.
pub fn quantum_int_factorial(m: u32) -> RationalFn {
    let mut acc = LaurentPoly::one();
    for j in 2..=m as i64 {
        acc = &acc * &quantum_int_poly(j);
    }
    RationalFn::from_poly(acc)
}

/// `[lambda]! = prod_i [lambda_i]!` over the rows of a partition given by its
/// parts.
pub fn quantum_factorial(parts: &[u32]) -> RationalFn {
    let mut acc = RationalFn::one();
    for &m in parts {
        acc = &acc * &quantum_int_factorial(m);
    }
    acc
}

/// The loop parameter `delta = (q + r)(q r - 1) / (r (q^2 - 1))`, the value of
/// the closure of an idempotent strand: `E_i^2 = delta E_i`.
pub fn delta_param() -> RationalFn {
    let q_plus_r = LaurentPoly::q() + &LaurentPoly::r();
    let qr_minus_1 = LaurentPoly::monomial(1, 1, 1) + &LaurentPoly::constant(-1);
    let num = &q_plus_r * &qr_minus_1;
    let den = &LaurentPoly::r() * &LaurentPoly::q2_minus_one();
    RationalFn::new(num, den).expect("denominator is nonzero")
}

/// Serialize a rational function in the wire form
/// `{"num": [[c, e_q, e_r], ...], "den": [[...]]}` with terms sorted by
/// `(e_r, e_q)` descending and coefficients as decimal strings.
pub fn rational_to_json(v: &RationalFn) -> serde_json::Value {
    fn side(p: &LaurentPoly) -> serde_json::Value {
        let mut terms: Vec<serde_json::Value> = Vec::new();
        for ((e_r, e_q), c) in p.iter_terms().collect::<Vec<_>>().into_iter().rev() {
            terms.push(serde_json::json!([c.to_string(), e_q, e_r]));
        }
        serde_json::Value::Array(terms)
    }
    serde_json::json!({ "num": side(v.num()), "den": side(v.den()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn quantum_int_values() {
        // [3] = 1 + q^2 + q^4
        let expect = LaurentPoly::one() + &LaurentPoly::q_pow(2) + &LaurentPoly::q_pow(4);
        assert_eq!(quantum_int(3), RationalFn::from_poly(expect));
        assert!(quantum_int(0).is_zero());
        // [-1] = -q^-2
        assert_eq!(quantum_int(-1), RationalFn::monomial(-1, -2, 0));
        // [-m] = -q^{-2m} [m]
        let m = 4;
        let lhs = quantum_int(-m);
        let rhs = &RationalFn::monomial(-1, -2 * m, 0) * &quantum_int(m);
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn quantum_factorial_values() {
        // [(2)]! = [2]! = 1 + q^2
        assert_eq!(quantum_factorial(&[2]), quantum_int(2));
        // empty partition: empty product
        assert!(quantum_factorial(&[]).is_one());
        // [(2,1)]! = [2]! [1]! = 1 + q^2
        assert_eq!(quantum_factorial(&[2, 1]), quantum_int(2));
    }

    #[test]
    fn delta_closed_forms_agree() {
        let delta = delta_param();
        // delta = 1 + omega^{-1} (r - r^{-1})
        let omega_inv = RationalFn::omega().inv().unwrap();
        let r = RationalFn::r();
        let alt = &RationalFn::one() + &(&omega_inv * &(&r - &r.inv().unwrap()));
        assert_eq!(delta, alt);
    }

    #[test]
    fn delta_numeric() {
        let delta = delta_param();
        let q0 = BigRational::from(BigInt::from(2));
        let r0 = BigRational::from(BigInt::from(3));
        let got = delta.eval_rational(&q0, &r0).unwrap();
        assert_eq!(got, BigRational::new(BigInt::from(25), BigInt::from(9)));
    }

    #[test]
    fn delta_vanishes_at_degenerate_r() {
        // r = q^{-1} makes (qr - 1) vanish.
        assert!(delta_param().substitute_r(1, -1).unwrap().is_zero());
        // r = -q makes (q + r) vanish.
        assert!(delta_param().substitute_r(-1, 1).unwrap().is_zero());
    }

    #[test]
    fn delta_factorization() {
        // The alphabet includes r - q^{-1} and r + q, so delta factors with
        // no generic residue; expansion reproduces the value exactly.
        let f = factorize(&delta_param());
        let back = f.expand();
        assert_eq!(back, delta_param());
        assert_eq!(f.exponent_of(&FactorAtom::QSquareMinusOne), -1);
        assert_eq!(f.exponent_of(&FactorAtom::RMinus { eps: 1, a: -1 }), 1);
        assert_eq!(f.exponent_of(&FactorAtom::RMinus { eps: -1, a: 1 }), 1);
    }

    #[test]
    fn json_wire_form() {
        let v = RationalFn::new(
            LaurentPoly::r() + &LaurentPoly::q(),
            LaurentPoly::q2_minus_one(),
        )
        .unwrap();
        let j = rational_to_json(&v);
        assert_eq!(j["num"][0], serde_json::json!(["1", 0, 1]));
        assert_eq!(j["num"][1], serde_json::json!(["1", 1, 0]));
        assert_eq!(j["den"][0], serde_json::json!(["1", 2, 0]));
    }
}
