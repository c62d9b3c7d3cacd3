//! Gram determinants of the cell modules: the diagonal idempotent
//! coefficients `E_tt(k)`, the branching scalars `gamma_{lambda/mu}`,
//! per-tableau norms `<f_t, f_t>`, and the determinants themselves, computed
//! both as a product of norms over the tableau basis and by the branching
//! recursion. The two routes are independent and must agree exactly.

use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::arith::{
    delta_param, factor_poly, factorize, quantum_int, ArithError, FactorAtom, FactoredValue,
    LaurentPoly, RationalFn,
};
use crate::combin::{
    apply_s, branching_predecessors, cell_dim, enum_updown, sim_class, t_lambda, CellLabel,
    CombinError, Node, Partition, UpDownTableau,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GramError {
    #[error(transparent)]
    Combin(#[from] CombinError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error("position {0}: the neighbouring shapes differ; no rank-one coefficient is defined")]
    ShapesDiffer(usize),
    #[error("({0}) and ({1}) do not form a branching edge")]
    NotAnEdge(Partition, Partition),
    #[error("{0}")]
    Precondition(String),
}

/// The norms `<f_t, f_t>` of one cell, keyed by tableau.
#[derive(Clone)]
pub struct NormTable {
    pub cell: CellLabel,
    pub norms: BTreeMap<UpDownTableau, RationalFn>,
}

/// The branching scalar attached to an edge `(l, mu) -> (f, lambda)`.
#[derive(Clone)]
pub struct GammaFactor {
    pub from: CellLabel,
    pub to: CellLabel,
    pub value: RationalFn,
}

/// A Gram determinant in factored form, together with the module rank.
#[derive(Clone)]
pub struct GramDeterminant {
    pub n: u32,
    pub cell: CellLabel,
    pub value: FactoredValue,
    pub dim: u64,
}

/// Shared caches for gamma factors and determinants. Reads are concurrent;
/// inserts are idempotent, so racing recomputation is harmless.
#[derive(Default)]
pub struct GramCtx {
    gamma: RwLock<HashMap<(Partition, Partition), RationalFn>>,
    gamma_factored: RwLock<HashMap<(Partition, Partition), FactoredValue>>,
    dets: RwLock<HashMap<(u32, Partition), FactoredValue>>,
}

impl GramCtx {
    pub fn new() -> Self {
        Self::default()
    }
}

/// `E_tt(k)`: the diagonal coefficient of the rank-one `E_k` block at a
/// position where the tableau revisits the same shape (`t_{k-1} = t_{k+1}`):
///
/// `r c^{-1} (1 + omega^{-1}(c - c^{-1})) prod_{s ~ t, s != t}
///  (c - c_s^{-1}) / (c - c_s)` with `c = c_t(k)`.
pub fn e_tt(t: &UpDownTableau, k: usize) -> Result<RationalFn, GramError> {
    if k == 0 || k >= t.n() {
        return Err(CombinError::BadPosition(k).into());
    }
    if t.step(k - 1) != t.step(k + 1) {
        return Err(GramError::ShapesDiffer(k));
    }
    let c = t.content_at(k).to_rational();
    let c_inv = c.inv()?;
    let omega_inv = RationalFn::omega().inv()?;
    let head = &RationalFn::one() + &(&omega_inv * &(&c - &c_inv));
    let mut val = &(&RationalFn::r() * &c_inv) * &head;
    for s in sim_class(t, k)? {
        if s == *t {
            continue;
        }
        let cs = s.content_at(k).to_rational();
        let num = &c - &cs.inv()?;
        let den = &c - &cs;
        val = &val * &(&num / &den);
    }
    Ok(val)
}

/// Branching scalar for a one-box-added edge: `mu = lambda \ p` with
/// `p = (k, lambda_k)` removable. Writing `c_p = row - col` and taking
/// addable (`col - row`) and removable (`row - col`) contents over the nodes
/// strictly below row `k`:
///
/// `gamma = -q^{2 lambda_k} prod [c_p + c(r1)] / prod [c_p - c(r2)]`.
pub fn gamma_add(lambda: &Partition, p: Node) -> Result<RationalFn, GramError> {
    if !lambda.removable_nodes().contains(&p) {
        return Err(CombinError::WrongNodeKind(p.row, p.col).into());
    }
    let c_p = p.row as i64 - p.col as i64;
    let mut num = RationalFn::monomial(-1, 2 * p.col as i64, 0);
    for r1 in lambda.addable_nodes() {
        if r1.row > p.row {
            num = &num * &quantum_int(c_p + (r1.col as i64 - r1.row as i64));
        }
    }
    let mut den = RationalFn::one();
    for r2 in lambda.removable_nodes() {
        if r2.row > p.row {
            den = &den * &quantum_int(c_p - (r2.row as i64 - r2.col as i64));
        }
    }
    Ok(&num / &den)
}

/// Branching scalar for a one-box-removed edge: `mu = lambda ∪ p` with
/// `p = (k, mu_k)`.
///
/// When `p` lies in the last row of `mu` this is `[mu_k] E_tt(n-1)` on the
/// witness tableau that climbs to `mu` row by row and then removes `p`.
/// Otherwise the removal step is pushed down to position `a + 1`
/// (`a = mu_1 + ... + mu_k`) through box swaps, the truncation is evaluated
/// with `e_tt`, and the remaining node contributions enter through factors
/// `r^2 q^{-2(c(p) -+ c(node))} - 1` over the nodes strictly below row `k`.
pub fn gamma_remove(lambda: &Partition, mu: &Partition) -> Result<RationalFn, GramError> {
    let p = mu
        .box_difference(lambda)
        .ok_or_else(|| GramError::NotAnEdge(lambda.clone(), mu.clone()))?;
    let k = p.row;
    let mu_k = p.col as i64;
    let witness = {
        // Minimal ambient witness: climb to mu with no hops, then remove p.
        let mut steps = t_lambda(mu.size(), 0, mu)?.steps().to_vec();
        steps.push(lambda.clone());
        UpDownTableau::new(steps)?
    };
    let n = witness.n();
    if k as usize == mu.len() {
        // Last-row case: the witness already revisits lambda at n-2.
        return Ok(&quantum_int(mu_k) * &e_tt(&witness, n - 1)?);
    }
    // General case: swap the removal step down to position a+1.
    let a: usize = mu.parts()[..k as usize].iter().map(|&x| x as usize).sum();
    let mut u = witness;
    for j in ((a + 1)..n).rev() {
        u = apply_s(&u, j)?.ok_or_else(|| {
            GramError::Precondition(format!("swap at {j} must exist for a lower-row removal"))
        })?;
    }
    let v = u.truncate(a + 1);
    let e_vv = e_tt(&v, a)?;

    let c_p = p.row as i64 - p.col as i64; // removable content in mu
    let rr = RationalFn::monomial(1, 0, 2); // r^2
    let head_den =
        &(&rr * &RationalFn::monomial(1, 2 * (mu_k - 2 * k as i64), 0)) - &RationalFn::one();
    let mut val = &(&quantum_int(mu_k) * &e_vv) / &head_den;
    for r1 in mu.addable_nodes() {
        if r1.row > k {
            let c1 = r1.col as i64 - r1.row as i64;
            let f = &(&rr * &RationalFn::monomial(1, -2 * (c_p - c1), 0)) - &RationalFn::one();
            val = &val * &f;
        }
    }
    for r2 in mu.removable_nodes() {
        if r2.row > k {
            let c2 = r2.row as i64 - r2.col as i64;
            let f = &(&rr * &RationalFn::monomial(1, -2 * (c_p + c2), 0)) - &RationalFn::one();
            val = &val / &f;
        }
    }
    Ok(val)
}

/// `gamma_{lambda/mu}` for the branching edge from shape `mu` to shape
/// `lambda` (sizes differ by one); memoized by the shape pair, which is all
/// the scalar depends on.
pub fn gamma(ctx: &GramCtx, lambda: &Partition, mu: &Partition) -> Result<RationalFn, GramError> {
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = ctx.gamma.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let value = if lambda.size() == mu.size() + 1 {
        let p = lambda
            .box_difference(mu)
            .ok_or_else(|| GramError::NotAnEdge(lambda.clone(), mu.clone()))?;
        gamma_add(lambda, p)?
    } else if mu.size() == lambda.size() + 1 {
        gamma_remove(lambda, mu)?
    } else {
        return Err(GramError::NotAnEdge(lambda.clone(), mu.clone()));
    };
    ctx.gamma.write().unwrap().insert(key, value.clone());
    Ok(value)
}

fn gamma_factored(
    ctx: &GramCtx,
    lambda: &Partition,
    mu: &Partition,
) -> Result<FactoredValue, GramError> {
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = ctx.gamma_factored.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let value = factorize(&gamma(ctx, lambda, mu)?);
    ctx.gamma_factored.write().unwrap().insert(key, value.clone());
    Ok(value)
}

/// The `GammaFactor` record for an explicit edge `(l, mu) -> (f, lambda)` of
/// the branching graph at level `n`.
pub fn gamma_factor(
    ctx: &GramCtx,
    n: u32,
    from: &CellLabel,
    to: &CellLabel,
) -> Result<GammaFactor, GramError> {
    CellLabel::new(n - 1, from.f, from.lambda.clone())?;
    CellLabel::new(n, to.f, to.lambda.clone())?;
    let edge_ok = branching_predecessors(n, to.f, &to.lambda)?.contains(from);
    if !edge_ok {
        return Err(GramError::NotAnEdge(to.lambda.clone(), from.lambda.clone()));
    }
    Ok(GammaFactor {
        from: from.clone(),
        to: to.clone(),
        value: gamma(ctx, &to.lambda, &from.lambda)?,
    })
}

/// `<f_t, f_t>`: the product of the branching scalars along the path.
pub fn norm_of(ctx: &GramCtx, t: &UpDownTableau) -> Result<RationalFn, GramError> {
    let mut acc = RationalFn::one();
    for i in 1..=t.n() {
        acc = &acc * &gamma(ctx, t.step(i), t.step(i - 1))?;
    }
    Ok(acc)
}

/// All norms of one cell.
pub fn norm_table(ctx: &GramCtx, n: u32, f: u32, lambda: &Partition) -> Result<NormTable, GramError> {
    let cell = CellLabel::new(n, f, lambda.clone())?;
    let mut norms = BTreeMap::new();
    for t in enum_updown(n, f, lambda)? {
        let v = norm_of(ctx, &t)?;
        norms.insert(t, v);
    }
    Ok(NormTable { cell, norms })
}

/// The norm ratio `1 - omega^2 c_t(k) c_t(k+1) / (c_t(k+1) - c_t(k))^2`
/// stepping from `t` to the swap `t s_k` when the swap descends:
/// `norm(t s_k) = ratio * norm(t)`.
pub fn norm_step_check(t: &UpDownTableau, k: usize) -> Result<RationalFn, GramError> {
    if k == 0 || k >= t.n() {
        return Err(CombinError::BadPosition(k).into());
    }
    if t.step(k - 1) == t.step(k + 1) {
        return Err(GramError::Precondition("swap requires distinct neighbouring shapes".into()));
    }
    let s = apply_s(t, k)?
        .ok_or_else(|| GramError::Precondition("no swap exists at this position".into()))?;
    match crate::combin::cmp_cell_level(s.step(k), t.step(k)) {
        Some(std::cmp::Ordering::Less) => {}
        _ => {
            return Err(GramError::Precondition("the swap must descend in the cell order".into()));
        }
    }
    let c1 = t.content_at(k).to_rational();
    let c2 = t.content_at(k + 1).to_rational();
    let omega_sq = RationalFn::omega().pow(2)?;
    let diff = &c2 - &c1;
    let ratio = &RationalFn::one() - &(&(&omega_sq * &(&c1 * &c2)) / &diff.pow(2)?);
    Ok(ratio)
}

/// Determinant as the product of all tableau norms, then factorized.
///
/// The numerator is expanded polynomial-by-polynomial; denominators are kept
/// as factored atoms and divided out exactly at the end, so no large gcd is
/// ever taken.
pub fn gram_det_direct(
    ctx: &GramCtx,
    n: u32,
    f: u32,
    lambda: &Partition,
) -> Result<GramDeterminant, GramError> {
    let cell = CellLabel::new(n, f, lambda.clone())?;
    let dim = cell_dim(n, f, lambda)?;
    let mut num = LaurentPoly::one();
    let mut den = FactoredValue::one();
    for t in enum_updown(n, f, lambda)? {
        let nt = norm_of(ctx, &t)?;
        num = &num * nt.num();
        den.mul_pow_assign(&factorize(&RationalFn::from_poly(nt.den().clone())), 1);
    }
    let du = den.unit();
    let mut value = FactoredValue::from_unit(du.coeff.recip(), -du.e_q, -du.e_r);
    for (atom, e) in den.factors() {
        let p = atom.poly();
        for _ in 0..e {
            match num.div_exact(&p) {
                Some(next) => num = next,
                None => value.mul_atom_assign(atom, -1),
            }
        }
    }
    let (c, e_q, e_r, atoms) = factor_poly(&num);
    value.mul_pow_assign(&FactoredValue::from_unit(BigRational::from(c), e_q, e_r), 1);
    for (atom, e) in atoms {
        value.mul_atom_assign(&atom, e);
    }
    Ok(GramDeterminant { n, cell, value, dim })
}

/// Determinant by the branching recursion,
/// `det G_{f,lambda} = prod over edges of det G_{l,mu} * gamma^{dim}`,
/// memoized over lower levels.
pub fn gram_det_recursive(
    ctx: &GramCtx,
    n: u32,
    f: u32,
    lambda: &Partition,
) -> Result<GramDeterminant, GramError> {
    let cell = CellLabel::new(n, f, lambda.clone())?;
    let dim = cell_dim(n, f, lambda)?;
    let value = det_rec(ctx, n, f, lambda)?;
    Ok(GramDeterminant { n, cell, value, dim })
}

fn det_rec(ctx: &GramCtx, n: u32, f: u32, lambda: &Partition) -> Result<FactoredValue, GramError> {
    if n == 0 {
        return Ok(FactoredValue::one());
    }
    let key = (n, lambda.clone());
    if let Some(v) = ctx.dets.read().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let mut value = FactoredValue::one();
    for pred in branching_predecessors(n, f, lambda)? {
        let sub = det_rec(ctx, n - 1, pred.f, &pred.lambda)?;
        value.mul_pow_assign(&sub, 1);
        let g = gamma_factored(ctx, lambda, &pred.lambda)?;
        value.mul_pow_assign(&g, cell_dim(n - 1, pred.f, &pred.lambda)? as i64);
    }
    ctx.dets.write().unwrap().insert(key, value.clone());
    Ok(value)
}

/// The `(eps, a)` pairs of the `r - eps q^a` factors occurring with positive
/// exponent in the reduced determinant.
pub fn det_factors_scan(
    ctx: &GramCtx,
    n: u32,
    f: u32,
    lambda: &Partition,
) -> Result<Vec<(i8, i64)>, GramError> {
    Ok(gram_det_recursive(ctx, n, f, lambda)?.value.r_minus_atoms())
}

/// Factor duality between conjugate cells: `r - eps q^a` occurs in
/// `det G_{f,lambda}` iff `r + eps q^{-a}` occurs in `det G_{f,lambda'}`.
pub fn dual_factor_check(
    ctx: &GramCtx,
    n: u32,
    f: u32,
    lambda: &Partition,
) -> Result<bool, GramError> {
    let own: std::collections::BTreeSet<(i8, i64)> =
        det_factors_scan(ctx, n, f, lambda)?.into_iter().collect();
    let dual: std::collections::BTreeSet<(i8, i64)> =
        det_factors_scan(ctx, n, f, &lambda.conjugate())?
            .into_iter()
            .map(|(eps, a)| (-eps, -a))
            .collect();
    Ok(own == dual)
}

/// Closed form for `det G_{1,(n-2)}`, the cell with one arc and a single-row
/// partition:
///
/// `q^{(n-1)(3n-4)/2} ([n-2]!/(r(q^2-1)))^{n(n-1)/2} (r-q)^{n(n-3)/2}
///  (r+q^3)^{(n-1)(n-2)/2} (r^2-q^{6-2n})^{n-1} (r-q^{3-2n})`.
pub fn one_row_closed_form(n: u32) -> FactoredValue {
    assert!(n >= 2);
    let n = n as i64;
    let e_fact = n * (n - 1) / 2;
    let mut v = FactoredValue::from_unit(BigRational::one(), (n - 1) * (3 * n - 4) / 2, -e_fact);
    for m in 2..=(n - 2) {
        v.mul_atom_assign(&FactorAtom::QuantumInt(m as u32), e_fact);
    }
    v.mul_atom_assign(&FactorAtom::QSquareMinusOne, -e_fact);
    v.mul_atom_assign(&FactorAtom::RMinus { eps: 1, a: 1 }, n * (n - 3) / 2);
    v.mul_atom_assign(&FactorAtom::RMinus { eps: -1, a: 3 }, (n - 1) * (n - 2) / 2);
    v.mul_atom_assign(&FactorAtom::RMinus { eps: 1, a: 3 - n }, n - 1);
    v.mul_atom_assign(&FactorAtom::RMinus { eps: -1, a: 3 - n }, n - 1);
    v.mul_atom_assign(&FactorAtom::RMinus { eps: 1, a: 3 - 2 * n }, 1);
    v
}

/// `delta^f [lambda]!`, the norm of the distinguished maximal tableau.
pub fn base_norm(f: u32, lambda: &Partition) -> RationalFn {
    let v = delta_param().pow(f as i64).expect("delta is nonzero");
    &v * &lambda.quantum_factorial()
}
