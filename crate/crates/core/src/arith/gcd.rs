//! Exact gcd of bivariate Laurent polynomials.
//!
//! Monomials are units of `Z[q^±1, r^±1]`, so the gcd is computed after
//! shifting minimal exponents to zero and is returned in canonical form:
//! primitive, minimal exponents zero, positive leading coefficient under the
//! lexicographic order on `(e_r, e_q)`.
//!
//! The bivariate case runs a primitive remainder sequence over `Z[q][r`]`;
//! the `r`-degrees occurring in this library are bounded by tableau counts,
//! so the simple PRS is adequate.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;
use super::ArithError;

/// Canonical gcd: divides both inputs exactly and the cofactors have unit gcd.
pub fn poly_gcd(a: &LaurentPoly, b: &LaurentPoly) -> Result<LaurentPoly, ArithError> {
    if a.is_zero() && b.is_zero() {
        return Err(ArithError::GcdUndefined);
    }
    if a.is_zero() {
        return Ok(canonicalize(b));
    }
    if b.is_zero() {
        return Ok(canonicalize(a));
    }
    let (a0, _, _) = a.shift_to_origin();
    let (b0, _, _) = b.shift_to_origin();
    if a0.as_monomial().is_some() || b0.as_monomial().is_some() {
        // Monomials are units; the primitive gcd is trivial.
        return Ok(LaurentPoly::one());
    }
    let dr_a = a0.degree_r().unwrap();
    let dr_b = b0.degree_r().unwrap();
    if dr_a == 0 && dr_b == 0 {
        return Ok(canonicalize(&uni_gcd(&a0, &b0)));
    }
    // Split q-content from the r-coefficient vectors and recurse on
    // primitive parts.
    let ca = r_content(&a0);
    let cb = r_content(&b0);
    let pa = exact_div(&a0, &ca);
    let pb = exact_div(&b0, &cb);
    let content_gcd = uni_gcd(&ca, &cb);
    let prim_gcd = primitive_prs(pa, pb);
    Ok(canonicalize(&(&content_gcd * &prim_gcd)))
}

fn exact_div(a: &LaurentPoly, d: &LaurentPoly) -> LaurentPoly {
    a.div_exact(d).expect("internal gcd division must be exact")
}

/// Gcd of the `r`-coefficients, a polynomial in `q` alone.
fn r_content(a: &LaurentPoly) -> LaurentPoly {
    let mut g = LaurentPoly::zero();
    for c in a.r_coefficients() {
        if c.is_zero() {
            continue;
        }
        g = if g.is_zero() { c } else { uni_gcd(&g, &c) };
        if g.is_one() {
            break;
        }
    }
    g
}

/// Primitive remainder sequence in `r` for `r`-primitive inputs.
fn primitive_prs(mut f: LaurentPoly, mut g: LaurentPoly) -> LaurentPoly {
    if f.degree_r().unwrap() < g.degree_r().unwrap() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let rem = pseudo_rem_r(&f, &g);
        if rem.is_zero() {
            return g;
        }
        let (rem0, _, _) = rem.shift_to_origin();
        if rem0.degree_r().unwrap() == 0 {
            // Coprime as polynomials in r; any common factor would have been
            // in the contents, which were stripped off.
            return LaurentPoly::one();
        }
        let c = r_content(&rem0);
        f = g;
        g = exact_div(&rem0, &c);
    }
}

/// Pseudo-remainder of `a` by `b` as polynomials in `r` with `Z[q]`
/// coefficients (`deg_r a >= deg_r b >= 1`).
fn pseudo_rem_r(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let bc = b.r_coefficients();
    let n = bc.len() - 1;
    let lead_b = bc[n].clone();
    let mut rem = a.r_coefficients();
    while rem.len() > n && !rem.iter().all(LaurentPoly::is_zero) {
        while rem.last().is_some_and(LaurentPoly::is_zero) {
            rem.pop();
        }
        if rem.len() <= n {
            break;
        }
        let m = rem.len() - 1;
        let lead_r = rem[m].clone();
        // rem <- lead_b * rem - lead_r * r^{m-n} * b
        for item in rem.iter_mut() {
            *item = &*item * &lead_b;
        }
        for (j, bj) in bc.iter().enumerate() {
            let t = &lead_r * bj;
            rem[m - n + j] = std::mem::take(&mut rem[m - n + j]) - &t;
        }
        rem.pop();
    }
    LaurentPoly::from_r_coefficients(&rem)
}

/// Primitive-PRS gcd for polynomials in `q` alone (already shifted so all
/// exponents are nonnegative). Result is primitive with positive lead.
fn uni_gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    let mut f = dense(&a.divide_content(&a.content()));
    let mut g = dense(&b.divide_content(&b.content()));
    if f.len() < g.len() {
        std::mem::swap(&mut f, &mut g);
    }
    loop {
        let rem = uni_prem(&f, &g);
        if rem.is_empty() {
            break;
        }
        f = g;
        g = uni_primitive(rem);
    }
    from_dense(&g)
}

fn dense(p: &LaurentPoly) -> Vec<BigInt> {
    let (p0, _, _) = p.shift_to_origin();
    let deg = p0.max_exponents().map(|(_, q)| q).unwrap_or(0);
    let mut v = vec![BigInt::zero(); (deg + 1) as usize];
    for ((e_r, e_q), c) in p0.iter_terms() {
        debug_assert_eq!(*e_r, 0);
        v[*e_q as usize] = c.clone();
    }
    v
}

fn from_dense(v: &[BigInt]) -> LaurentPoly {
    let mut p = LaurentPoly::zero();
    for (i, c) in v.iter().enumerate() {
        if !c.is_zero() {
            p += &LaurentPoly::monomial(c.clone(), i as i64, 0);
        }
    }
    p
}

fn uni_trim(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
}

fn uni_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            return v;
        }
    }
    for c in v.iter_mut() {
        *c = &*c / &g;
    }
    v
}

fn uni_prem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let n = b.len() - 1;
    let lead_b = &b[n];
    let mut rem = a.to_vec();
    loop {
        uni_trim(&mut rem);
        if rem.len() <= n {
            return rem;
        }
        let m = rem.len() - 1;
        let lead_r = rem[m].clone();
        for c in rem.iter_mut() {
            *c = &*c * lead_b;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[m - n + j] -= &lead_r * bj;
        }
        rem.pop();
    }
}

/// Canonical form: primitive, minimal exponents zero, positive leading
/// coefficient under the `(e_r, e_q)` order.
pub fn canonicalize(p: &LaurentPoly) -> LaurentPoly {
    if p.is_zero() {
        return LaurentPoly::zero();
    }
    let (p0, _, _) = p.shift_to_origin();
    let c = p0.content();
    let mut out = p0.divide_content(&c);
    if out.leading_coeff().is_negative() {
        out = -out;
    }
    out
}
