//! Matrices of the generators on a cell module in the orthogonal basis, and
//! the relation certifier that checks them against the defining relations of
//! the algebra — the library's independent correctness oracle.
//!
//! The Jucys-Murphy elements act diagonally by contents. On a class where
//! the tableau revisits a shape, `E_i` is the rank-one block with diagonal
//! `E_tt(i)` (constant columns) and `T_i` is recovered as the unique solution
//! of the intertwining identity `T_i L_{i+1} = L_i T_i + omega L_{i+1} -
//! omega r^{-1} E_i L_i T_i`. Elsewhere `E_i` vanishes and `T_i` acts by the
//! two-content formulas. All of this is gauge-dependent; only gauge-invariant
//! statements are certified.

use std::collections::HashMap;
use std::time::Instant;

use thiserror::Error;

use crate::arith::{delta_param, ArithError, RationalFn};
use crate::combin::{
    cell_dim, cmp_cell_level, enum_updown, CellLabel, CombinError, Partition, UpDownTableau,
};
use crate::gram::{e_tt, GramError};

#[derive(Debug, Clone, Error)]
pub enum SeminormalError {
    #[error(transparent)]
    Combin(#[from] CombinError),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Gram(#[from] GramError),
    #[error("non-generic block: {0}")]
    NonGenericBlock(String),
    #[error("centrality violated: {0}")]
    CentralityViolated(String),
    #[error("certification failed for {cell}: {first_failure}")]
    CertificationFailed { cell: String, first_failure: String },
}

/// Dense square matrix over `Q(q, r)`.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    dim: usize,
    entries: Vec<RationalFn>,
}

impl Mat {
    pub fn zeros(dim: usize) -> Self {
        Mat { dim, entries: vec![RationalFn::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zeros(dim);
        for i in 0..dim {
            *m.at_mut(i, i) = RationalFn::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn at(&self, row: usize, col: usize) -> &RationalFn {
        &self.entries[row * self.dim + col]
    }

    pub fn at_mut(&mut self, row: usize, col: usize) -> &mut RationalFn {
        &mut self.entries[row * self.dim + col]
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.dim, rhs.dim);
        let n = self.dim;
        let mut out = Mat::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let prod = a * b;
                    *out.at_mut(i, j) = &*out.at(i, j) + &prod;
                }
            }
        }
        out
    }

    pub fn add(&self, rhs: &Mat) -> Mat {
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(&rhs.entries) {
            *x = &*x + y;
        }
        out
    }

    pub fn sub(&self, rhs: &Mat) -> Mat {
        let mut out = self.clone();
        for (x, y) in out.entries.iter_mut().zip(&rhs.entries) {
            *x = &*x - y;
        }
        out
    }

    pub fn scale(&self, c: &RationalFn) -> Mat {
        let mut out = self.clone();
        for x in out.entries.iter_mut() {
            *x = &*x * c;
        }
        out
    }

    /// `self + c * I`.
    pub fn add_scalar(&self, c: &RationalFn) -> Mat {
        let mut out = self.clone();
        for i in 0..self.dim {
            *out.at_mut(i, i) = &*out.at(i, i) + c;
        }
        out
    }

    /// Scale column `j` by `d[j]` (right multiplication by a diagonal).
    pub fn scale_cols(&self, d: &[RationalFn]) -> Mat {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !out.at(i, j).is_zero() {
                    *out.at_mut(i, j) = &*out.at(i, j) * &d[j];
                }
            }
        }
        out
    }

    /// Scale row `i` by `d[i]` (left multiplication by a diagonal).
    pub fn scale_rows(&self, d: &[RationalFn]) -> Mat {
        let mut out = self.clone();
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !out.at(i, j).is_zero() {
                    *out.at_mut(i, j) = &d[i] * out.at(i, j);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RationalFn::is_zero)
    }

    /// First nonzero entry, for failure reports.
    pub fn first_nonzero(&self) -> Option<(usize, usize, &RationalFn)> {
        for i in 0..self.dim {
            for j in 0..self.dim {
                if !self.at(i, j).is_zero() {
                    return Some((i, j, self.at(i, j)));
                }
            }
        }
        None
    }

    /// Gauss-Jordan inverse; `None` when singular.
    pub fn inverse(&self) -> Option<Mat> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&row| !a.at(row, col).is_zero())?;
            if pivot != col {
                for j in 0..n {
                    let tmp = a.at(pivot, j).clone();
                    *a.at_mut(pivot, j) = a.at(col, j).clone();
                    *a.at_mut(col, j) = tmp;
                    let tmp = inv.at(pivot, j).clone();
                    *inv.at_mut(pivot, j) = inv.at(col, j).clone();
                    *inv.at_mut(col, j) = tmp;
                }
            }
            let p = a.at(col, col).clone();
            let p_inv = p.inv().ok()?;
            for j in 0..n {
                *a.at_mut(col, j) = &*a.at(col, j) * &p_inv;
                *inv.at_mut(col, j) = &*inv.at(col, j) * &p_inv;
            }
            for row in 0..n {
                if row == col || a.at(row, col).is_zero() {
                    continue;
                }
                let factor = a.at(row, col).clone();
                for j in 0..n {
                    let t = &factor * a.at(col, j);
                    *a.at_mut(row, j) = &*a.at(row, j) - &t;
                    let t = &factor * inv.at(col, j);
                    *inv.at_mut(row, j) = &*inv.at(row, j) - &t;
                }
            }
        }
        Some(inv)
    }
}

/// The matrices of `T_i`, `E_i` (`i = 1..n-1`) and the diagonal `L_i`
/// (`i = 1..n`) on one cell module, in the `enum_updown` basis order.
#[derive(Clone)]
pub struct RepBlock {
    pub n: u32,
    pub cell: CellLabel,
    pub basis: Vec<UpDownTableau>,
    pub t_mats: Vec<Mat>,
    pub e_mats: Vec<Mat>,
    pub l_diags: Vec<Vec<RationalFn>>,
}

impl RepBlock {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn t(&self, i: usize) -> &Mat {
        &self.t_mats[i - 1]
    }

    pub fn e(&self, i: usize) -> &Mat {
        &self.e_mats[i - 1]
    }

    pub fn l(&self, i: usize) -> &[RationalFn] {
        &self.l_diags[i - 1]
    }
}

/// Group basis indices into classes agreeing everywhere except position `i`.
fn classes_at(basis: &[UpDownTableau], i: usize) -> Vec<Vec<usize>> {
    let mut order: Vec<Vec<usize>> = Vec::new();
    let mut seen: HashMap<Vec<Partition>, usize> = HashMap::new();
    for (idx, t) in basis.iter().enumerate() {
        let mut key = t.steps().to_vec();
        key.remove(i);
        match seen.get(&key) {
            Some(&slot) => order[slot].push(idx),
            None => {
                seen.insert(key, order.len());
                order.push(vec![idx]);
            }
        }
    }
    order
}

/// Construct the matrices without certifying them. `build_rep` is the
/// checked entry point; this one exists so tests can perturb a block and
/// watch the certifier catch it.
pub fn construct_rep(n: u32, f: u32, lambda: &Partition) -> Result<RepBlock, SeminormalError> {
    let cell = CellLabel::new(n, f, lambda.clone())?;
    let basis = enum_updown(n, f, lambda)?;
    let dim = basis.len();
    debug_assert_eq!(dim as u64, cell_dim(n, f, lambda)?);

    let l_diags: Vec<Vec<RationalFn>> = (1..=n as usize)
        .map(|k| basis.iter().map(|t| t.content_at(k).to_rational()).collect())
        .collect();

    let omega = RationalFn::omega();
    let omega_r_inv = &omega * &RationalFn::r().inv()?;
    let q = RationalFn::q();
    let minus_q_inv = RationalFn::monomial(-1, -1, 0);

    let mut t_mats = Vec::with_capacity(n as usize - 1);
    let mut e_mats = Vec::with_capacity(n as usize - 1);
    for i in 1..n as usize {
        let mut t_mat = Mat::zeros(dim);
        let mut e_mat = Mat::zeros(dim);
        for class in classes_at(&basis, i) {
            let rep = &basis[class[0]];
            if rep.step(i - 1) == rep.step(i + 1) {
                build_rank_one_block(&basis, &class, i, &omega_r_inv, &mut t_mat, &mut e_mat)?;
            } else if class.len() == 1 {
                let (a, _) = rep.step_box(i);
                let (b, _) = rep.step_box(i + 1);
                let idx = class[0];
                if a.row == b.row {
                    *t_mat.at_mut(idx, idx) = q.clone();
                } else if a.col == b.col {
                    *t_mat.at_mut(idx, idx) = minus_q_inv.clone();
                } else {
                    return Err(SeminormalError::NonGenericBlock(format!(
                        "isolated tableau {rep} at {i} has no swap partner"
                    )));
                }
            } else {
                build_pair_block(&basis, &class, i, &omega, &mut t_mat)?;
            }
        }
        t_mats.push(t_mat);
        e_mats.push(e_mat);
    }
    Ok(RepBlock { n, cell, basis, t_mats, e_mats, l_diags })
}

/// Pair class `{t, t s_i}` with distinct neighbouring shapes: diagonal
/// entries `omega c(i+1) / (c(i+1) - c(i))`, gauge 1 from the smaller
/// tableau, and the norm-step ratio back from the larger one (solved from
/// the quadratic `T^2 = 1 + omega T` on the block).
fn build_pair_block(
    basis: &[UpDownTableau],
    class: &[usize],
    i: usize,
    omega: &RationalFn,
    t_mat: &mut Mat,
) -> Result<(), SeminormalError> {
    assert_eq!(class.len(), 2);
    let (x, y) = (class[0], class[1]);
    for &idx in class {
        let t = &basis[idx];
        let c1 = t.content_at(i).to_rational();
        let c2 = t.content_at(i + 1).to_rational();
        *t_mat.at_mut(idx, idx) = &(omega * &c2) / &(&c2 - &c1);
    }
    let ord = cmp_cell_level(basis[x].step(i), basis[y].step(i)).ok_or_else(|| {
        SeminormalError::NonGenericBlock("incomparable pair shapes".to_string())
    })?;
    let (small, large) = if ord == std::cmp::Ordering::Less { (x, y) } else { (y, x) };
    // The block determinant must be -1: off-diagonal product = diag product + 1.
    let c1 = basis[small].content_at(i).to_rational();
    let c2 = basis[small].content_at(i + 1).to_rational();
    let omega_sq = omega * omega;
    let diff = &c2 - &c1;
    let ratio = &RationalFn::one() - &(&(&omega_sq * &(&c1 * &c2)) / &diff.pow(2)?);
    *t_mat.at_mut(small, large) = RationalFn::one();
    *t_mat.at_mut(large, small) = ratio;
    Ok(())
}

/// Class revisiting a shape: `E` is rank one with constant columns
/// `E_tt(i)`, and `T` solves the intertwining identity column by column.
fn build_rank_one_block(
    basis: &[UpDownTableau],
    class: &[usize],
    i: usize,
    omega_r_inv: &RationalFn,
    t_mat: &mut Mat,
    e_mat: &mut Mat,
) -> Result<(), SeminormalError> {
    let m = class.len();
    let e_vals: Vec<RationalFn> = class
        .iter()
        .map(|&idx| crate::gram::e_tt(&basis[idx], i))
        .collect::<Result<_, _>>()?;
    for (xp, &x) in class.iter().enumerate() {
        for &y in class {
            *e_mat.at_mut(x, y) = e_vals[xp].clone();
        }
    }
    let d1: Vec<RationalFn> =
        class.iter().map(|&idx| basis[idx].content_at(i).to_rational()).collect();
    let d2: Vec<RationalFn> =
        class.iter().map(|&idx| basis[idx].content_at(i + 1).to_rational()).collect();
    // M = (I - omega r^{-1} E) D1, so the identity reads X D2 = M X + omega D2.
    let mut mm = vec![vec![RationalFn::zero(); m]; m];
    for x in 0..m {
        for y in 0..m {
            let mut v = -&(omega_r_inv * &e_vals[x]);
            if x == y {
                v = &v + &RationalFn::one();
            }
            mm[x][y] = &v * &d1[y];
        }
    }
    let omega = RationalFn::omega();
    for s in 0..m {
        // (c_s(i+1) I - M) x = omega c_s(i+1) e_s
        let mut a: Vec<Vec<RationalFn>> = (0..m)
            .map(|x| {
                (0..m)
                    .map(|y| {
                        let mut v = -&mm[x][y];
                        if x == y {
                            v = &v + &d2[s];
                        }
                        v
                    })
                    .collect()
            })
            .collect();
        let mut b = vec![RationalFn::zero(); m];
        b[s] = &omega * &d2[s];
        let x = solve_linear(&mut a, &mut b).ok_or_else(|| {
            SeminormalError::NonGenericBlock(format!(
                "intertwining system singular on the class of {} at {i}",
                basis[class[0]]
            ))
        })?;
        for (tp, &t_idx) in class.iter().enumerate() {
            *t_mat.at_mut(t_idx, class[s]) = x[tp].clone();
        }
    }
    Ok(())
}

/// Gaussian elimination with exact pivoting; `None` when singular.
fn solve_linear(a: &mut [Vec<RationalFn>], b: &mut [RationalFn]) -> Option<Vec<RationalFn>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&row| !a[row][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p_inv = a[col][col].inv().ok()?;
        for j in col..n {
            a[col][j] = &a[col][j] * &p_inv;
        }
        b[col] = &b[col] * &p_inv;
        for row in 0..n {
            if row == col || a[row][col].is_zero() {
                continue;
            }
            let f = a[row][col].clone();
            for j in col..n {
                let t = &f * &a[col][j];
                a[row][j] = &a[row][j] - &t;
            }
            let t = &f * &b[col];
            b[row] = &b[row] - &t;
        }
    }
    Some(b.to_vec())
}

/// One certified relation: name, verdict, optional first failing entry, and
/// elapsed wall time.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RelationCheck {
    pub name: String,
    pub pass: bool,
    pub detail: Option<String>,
    pub millis: u128,
}

#[derive(Clone, Debug, serde::Serialize)]
pub struct CertifyReport {
    pub n: u32,
    pub cell: String,
    pub dim: usize,
    pub checks: Vec<RelationCheck>,
    pub all_pass: bool,
}

impl CertifyReport {
    pub fn first_failure(&self) -> Option<&RelationCheck> {
        self.checks.iter().find(|c| !c.pass)
    }
}

/// Check every defining relation as an exact matrix identity over `Q(q, r)`.
pub fn certify_relations(rep: &RepBlock) -> CertifyReport {
    let n = rep.n as usize;
    let dim = rep.dim();
    let q = RationalFn::q();
    let r_inv = RationalFn::r().inv().expect("r is invertible");
    let omega_inv = RationalFn::omega().inv().expect("omega is invertible");
    let delta = delta_param();

    let t_invs: Vec<Option<Mat>> = rep.t_mats.iter().map(Mat::inverse).collect();

    let mut checks: Vec<RelationCheck> = Vec::new();
    let mut run = |name: &str, body: &mut dyn FnMut() -> Option<String>| {
        let start = Instant::now();
        let detail = body();
        checks.push(RelationCheck {
            name: name.to_string(),
            pass: detail.is_none(),
            detail,
            millis: start.elapsed().as_millis(),
        });
    };

    let fail_at = |who: &str, d: &Mat| -> Option<String> {
        d.first_nonzero().map(|(s, t, v)| format!("{who}: entry ({s},{t}) differs by {v}"))
    };

    run("cubic", &mut || {
        // (T_i - q)(T_i + q^-1)(T_i - r^-1) = 0
        for i in 1..n {
            let a = rep.t(i).add_scalar(&(-&q));
            let b = rep.t(i).add_scalar(&q.inv().unwrap());
            let c = rep.t(i).add_scalar(&(-&r_inv));
            let d = a.mul(&b).mul(&c);
            if !d.is_zero() {
                return fail_at(&format!("T_{i}"), &d);
            }
        }
        None
    });

    run("braid", &mut || {
        for i in 1..n.saturating_sub(1) {
            let lhs = rep.t(i).mul(rep.t(i + 1)).mul(rep.t(i));
            let rhs = rep.t(i + 1).mul(rep.t(i)).mul(rep.t(i + 1));
            let d = lhs.sub(&rhs);
            if !d.is_zero() {
                return fail_at(&format!("T_{i} T_{} T_{i}", i + 1), &d);
            }
        }
        None
    });

    run("commute-far", &mut || {
        for i in 1..n {
            for j in (i + 2)..n {
                let d = rep.t(i).mul(rep.t(j)).sub(&rep.t(j).mul(rep.t(i)));
                if !d.is_zero() {
                    return fail_at(&format!("[T_{i}, T_{j}]"), &d);
                }
            }
        }
        None
    });

    run("hook-twist", &mut || {
        // E_i T_j^{±1} E_i = r^{±1} E_i for j = i ± 1
        for i in 1..n {
            for j in [i.wrapping_sub(1), i + 1] {
                if j < 1 || j >= n {
                    continue;
                }
                let plus = rep.e(i).mul(rep.t(j)).mul(rep.e(i));
                let d = plus.sub(&rep.e(i).scale(&RationalFn::r()));
                if !d.is_zero() {
                    return fail_at(&format!("E_{i} T_{j} E_{i}"), &d);
                }
                let tj_inv = match &t_invs[j - 1] {
                    Some(m) => m,
                    None => return Some(format!("T_{j} is singular")),
                };
                let minus = rep.e(i).mul(tj_inv).mul(rep.e(i));
                let d = minus.sub(&rep.e(i).scale(&r_inv));
                if !d.is_zero() {
                    return fail_at(&format!("E_{i} T_{j}^-1 E_{i}"), &d);
                }
            }
        }
        None
    });

    run("twist-eigen", &mut || {
        for i in 1..n {
            let scaled = rep.e(i).scale(&r_inv);
            let d1 = rep.e(i).mul(rep.t(i)).sub(&scaled);
            if !d1.is_zero() {
                return fail_at(&format!("E_{i} T_{i}"), &d1);
            }
            let d2 = rep.t(i).mul(rep.e(i)).sub(&scaled);
            if !d2.is_zero() {
                return fail_at(&format!("T_{i} E_{i}"), &d2);
            }
        }
        None
    });

    run("e-def", &mut || {
        // E_i = 1 - omega^{-1}(T_i - T_i^{-1})
        for i in 1..n {
            let ti_inv = match &t_invs[i - 1] {
                Some(m) => m,
                None => return Some(format!("T_{i} is singular")),
            };
            let diff = rep.t(i).sub(ti_inv).scale(&omega_inv);
            let rhs = Mat::identity(dim).sub(&diff);
            let d = rep.e(i).sub(&rhs);
            if !d.is_zero() {
                return fail_at(&format!("E_{i}"), &d);
            }
        }
        None
    });

    run("e-idempotent", &mut || {
        for i in 1..n {
            let d = rep.e(i).mul(rep.e(i)).sub(&rep.e(i).scale(&delta));
            if !d.is_zero() {
                return fail_at(&format!("E_{i}^2"), &d);
            }
        }
        None
    });

    run("e-sandwich", &mut || {
        for i in 1..n {
            for j in [i.wrapping_sub(1), i + 1] {
                if j < 1 || j >= n {
                    continue;
                }
                let d = rep.e(i).mul(rep.e(j)).mul(rep.e(i)).sub(rep.e(i));
                if !d.is_zero() {
                    return fail_at(&format!("E_{i} E_{j} E_{i}"), &d);
                }
            }
        }
        None
    });

    run("e-slide", &mut || {
        // E_i E_j = T_j T_i E_j for j = i ± 1
        for i in 1..n {
            for j in [i.wrapping_sub(1), i + 1] {
                if j < 1 || j >= n {
                    continue;
                }
                let lhs = rep.e(i).mul(rep.e(j));
                let rhs = rep.t(j).mul(rep.t(i)).mul(rep.e(j));
                let d = lhs.sub(&rhs);
                if !d.is_zero() {
                    return fail_at(&format!("E_{i} E_{j}"), &d);
                }
            }
        }
        None
    });

    run("jm-conjugate", &mut || {
        // L_{i+1} = T_i L_i T_i
        for i in 1..n {
            let lhs = rep.t(i).scale_cols(rep.l(i)).mul(rep.t(i));
            let mut rhs = Mat::zeros(dim);
            for s in 0..dim {
                *rhs.at_mut(s, s) = rep.l(i + 1)[s].clone();
            }
            let d = lhs.sub(&rhs);
            if !d.is_zero() {
                return fail_at(&format!("T_{i} L_{i} T_{i}"), &d);
            }
        }
        None
    });

    run("jm-pair-commute", &mut || {
        // T_i L_i L_{i+1} = L_i L_{i+1} T_i
        for i in 1..n {
            let prod: Vec<RationalFn> =
                rep.l(i).iter().zip(rep.l(i + 1)).map(|(a, b)| a * b).collect();
            let d = rep.t(i).scale_cols(&prod).sub(&rep.t(i).scale_rows(&prod));
            if !d.is_zero() {
                return fail_at(&format!("[T_{i}, L_{i} L_{}]", i + 1), &d);
            }
        }
        None
    });

    let all_pass = checks.iter().all(|c| c.pass);
    CertifyReport { n: rep.n, cell: rep.cell.to_string(), dim, checks, all_pass }
}

/// Construct and certify; an uncertified block is a construction failure.
pub fn build_rep(n: u32, f: u32, lambda: &Partition) -> Result<RepBlock, SeminormalError> {
    let rep = construct_rep(n, f, lambda)?;
    let report = certify_relations(&rep);
    if !report.all_pass {
        let first = report.first_failure().expect("some check failed");
        return Err(SeminormalError::CertificationFailed {
            cell: rep.cell.to_string(),
            first_failure: format!("{}: {}", first.name, first.detail.clone().unwrap_or_default()),
        });
    }
    Ok(rep)
}

/// The central element `L_2 L_3 ... L_n` must act as a scalar on the block;
/// returns that scalar.
pub fn central_scalar(rep: &RepBlock) -> Result<RationalFn, SeminormalError> {
    let dim = rep.dim();
    let mut diag = vec![RationalFn::one(); dim];
    for i in 2..=rep.n as usize {
        for (d, l) in diag.iter_mut().zip(rep.l(i)) {
            *d = &*d * l;
        }
    }
    let first = diag[0].clone();
    for (s, v) in diag.iter().enumerate() {
        if *v != first {
            return Err(SeminormalError::CentralityViolated(format!(
                "basis element {s} carries {v} instead of {first}"
            )));
        }
    }
    Ok(first)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combin::cell_labels;
    use crate::gram::e_tt;

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn smallest_blocks_match_the_two_generator_cases() {
        let rep = build_rep(2, 0, &pt(&[2])).unwrap();
        assert_eq!(rep.t(1).at(0, 0), &RationalFn::q());
        assert!(rep.e(1).at(0, 0).is_zero());

        let rep = build_rep(2, 1, &Partition::empty()).unwrap();
        assert_eq!(rep.t(1).at(0, 0), &RationalFn::r().inv().unwrap());
        assert_eq!(rep.e(1).at(0, 0), &delta_param());
    }

    #[test]
    fn lambda3_certifies() {
        for cell in cell_labels(3) {
            let rep = build_rep(3, cell.f, &cell.lambda).unwrap();
            let report = certify_relations(&rep);
            assert!(report.all_pass, "{cell}: {:?}", report.first_failure());
        }
    }

    #[test]
    fn rank_one_diagonal_matches_ett_and_trace() {
        let delta = delta_param();
        for n in 2..=4u32 {
            for cell in cell_labels(n) {
                let rep = construct_rep(n, cell.f, &cell.lambda).unwrap();
                for i in 1..n as usize {
                    let mut class_count = 0usize;
                    let mut trace = RationalFn::zero();
                    for (idx, t) in rep.basis.iter().enumerate() {
                        trace = &trace + rep.e(i).at(idx, idx);
                        if t.step(i - 1) == t.step(i + 1) {
                            assert_eq!(rep.e(i).at(idx, idx), &e_tt(t, i).unwrap());
                            if crate::combin::sim_class(t, i).unwrap()[0] == *t {
                                class_count += 1;
                            }
                        } else {
                            assert!(rep.e(i).at(idx, idx).is_zero());
                        }
                    }
                    let expect = &delta * &RationalFn::from_int(class_count as i64);
                    assert_eq!(trace, expect, "trace of E_{i} on {cell}");
                }
            }
        }
    }

    #[test]
    fn perturbed_block_fails_braid() {
        let mut rep = construct_rep(3, 1, &pt(&[1])).unwrap();
        let report = certify_relations(&rep);
        assert!(report.all_pass);
        // Flip the sign of one off-diagonal T entry.
        let mut flipped = None;
        'outer: for i in 1..=2usize {
            for s in 0..rep.dim() {
                for t in 0..rep.dim() {
                    if s != t && !rep.t(i).at(s, t).is_zero() {
                        flipped = Some((i, s, t));
                        break 'outer;
                    }
                }
            }
        }
        let (i, s, t) = flipped.expect("some off-diagonal entry exists");
        let v = rep.t_mats[i - 1].at(s, t).clone();
        *rep.t_mats[i - 1].at_mut(s, t) = -&v;
        let report = certify_relations(&rep);
        assert!(!report.all_pass);
        let braid = report.checks.iter().find(|c| c.name == "braid").unwrap();
        assert!(!braid.pass, "sign flip must break the braid identity");
    }

    #[test]
    fn central_scalar_examples() {
        let rep = build_rep(2, 1, &Partition::empty()).unwrap();
        assert_eq!(central_scalar(&rep).unwrap(), RationalFn::r().inv().unwrap());

        let rep = build_rep(3, 1, &pt(&[1])).unwrap();
        assert_eq!(central_scalar(&rep).unwrap(), RationalFn::one());

        for cell in cell_labels(4) {
            let rep = construct_rep(4, cell.f, &cell.lambda).unwrap();
            central_scalar(&rep).unwrap();
        }
    }
}
