//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//! Everything is exact — equality means identical canonical forms, with no
//! tolerances anywhere.
//!
//! Run with `cargo test -p bmw-core --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use bmw_core::arith::{quantum_int, LaurentPoly, RationalFn};
use num_traits::Signed;
use bmw_core::combin::{
    apply_s, cell_dim, cell_labels, cmp_cell_level, double_factorial_odd, enum_updown, sim_class,
    Partition, UpDownTableau,
};
use bmw_core::gram::{
    dual_factor_check, e_tt, gram_det_direct, gram_det_recursive, norm_of, norm_step_check,
    one_row_closed_form, GramCtx,
};
use bmw_core::semisimple::cross_check_criterion;
use bmw_core::{build_rep, certify_relations, delta_param};

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn report(criterion: &str, pass: bool, detail: &str) {
    let tag = if pass { "PASS" } else { "FAIL" };
    println!("[{tag}] {criterion}: {detail}");
    assert!(pass, "{criterion}: {detail}");
}

#[test]
fn criterion_1_closed_form_reproduction() {
    let ctx = GramCtx::new();
    let mut all = true;
    for n in 2..=6u32 {
        let lambda = if n == 2 { Partition::empty() } else { pt(&[n - 2]) };
        let rec = gram_det_recursive(&ctx, n, 1, &lambda).unwrap();
        let closed = one_row_closed_form(n);
        if !rec.value.value_eq(&closed) {
            all = false;
            println!("  closed form mismatch at n = {n}");
        }
    }
    report(
        "criterion 1",
        all,
        "det G_(1,(n-2)) equals the closed form exactly for n = 2..6",
    );
}

#[test]
fn criterion_2_two_route_oracle() {
    let ctx = GramCtx::new();
    let mut all = true;
    let mut cells = 0;
    for n in 1..=5u32 {
        for cell in cell_labels(n) {
            cells += 1;
            let direct = gram_det_direct(&ctx, n, cell.f, &cell.lambda).unwrap();
            let rec = gram_det_recursive(&ctx, n, cell.f, &cell.lambda).unwrap();
            if !direct.value.value_eq(&rec.value) {
                all = false;
                println!("  route disagreement at {cell}, n = {n}");
            }
        }
    }
    report(
        "criterion 2",
        all,
        &format!("norm-product and branching-recursion determinants agree on all {cells} cells, n <= 5"),
    );
}

struct Fixture {
    n: u32,
    f: u32,
    lambda: &'static [u32],
    eps: i8,
    a: i64,
    label: &'static str,
    expected: fn() -> RationalFn,
}

fn qp(e: i64) -> RationalFn {
    RationalFn::monomial(1, e, 0)
}

fn one_plus_q(e: i64) -> RationalFn {
    RationalFn::from_poly(LaurentPoly::q_pow(e) + &LaurentPoly::one())
}

fn prod(fs: &[RationalFn]) -> RationalFn {
    fs.iter().fold(RationalFn::one(), |acc, f| &acc * f)
}

#[test]
fn criterion_3_degenerate_parameter_fixtures() {
    // Explicit determinants at r = q^{-1} and r = -q, verified externally for
    // the original computation; exact equality required, and a unit-monomial
    // discrepancy is called out separately from a structural one.
    let fixtures: Vec<Fixture> = vec![
        Fixture {
            n: 3, f: 1, lambda: &[1], eps: 1, a: -1,
            label: "det G_(1,(1)) at r=q^-1",
            expected: || one_plus_q(4),
        },
        Fixture {
            n: 3, f: 1, lambda: &[1], eps: -1, a: 1,
            label: "det G_(1,(1)) at r=-q",
            expected: || one_plus_q(4),
        },
        Fixture {
            n: 5, f: 1, lambda: &[3], eps: -1, a: 1,
            label: "det G_(1,(3)) at r=-q",
            expected: || {
                prod(&[
                    RationalFn::from_int(32),
                    quantum_int(2).pow(10).unwrap(),
                    quantum_int(3).pow(14).unwrap(),
                    one_plus_q(8),
                ])
            },
        },
        Fixture {
            n: 5, f: 1, lambda: &[3], eps: 1, a: -1,
            label: "det G_(1,(3)) at r=q^-1",
            expected: || {
                -&prod(&[
                    quantum_int(2).pow(10).unwrap(),
                    quantum_int(3).pow(11).unwrap(),
                    qp(-2),
                    one_plus_q(4).pow(6).unwrap(),
                ])
            },
        },
        Fixture {
            n: 5, f: 1, lambda: &[1, 1, 1], eps: -1, a: 1,
            label: "det G_(1,(1,1,1)) at r=-q",
            expected: || prod(&[qp(-2), quantum_int(3), one_plus_q(4).pow(6).unwrap()]),
        },
        Fixture {
            n: 5, f: 1, lambda: &[1, 1, 1], eps: 1, a: -1,
            label: "det G_(1,(1,1,1)) at r=q^-1",
            expected: || {
                prod(&[
                    RationalFn::from_int(32),
                    quantum_int(3).pow(4).unwrap(),
                    one_plus_q(8),
                ])
            },
        },
        Fixture {
            n: 5, f: 1, lambda: &[2, 1], eps: -1, a: 1,
            label: "det G_(1,(2,1)) at r=-q",
            expected: || {
                -&prod(&[
                    qp(2),
                    quantum_int(2).pow(4).unwrap(),
                    quantum_int(3).pow(15).unwrap(),
                    one_plus_q(6).pow(4).unwrap(),
                ])
            },
        },
        Fixture {
            n: 5, f: 1, lambda: &[2, 1], eps: 1, a: -1,
            label: "det G_(1,(2,1)) at r=q^-1",
            expected: || {
                -&prod(&[
                    qp(2),
                    quantum_int(2).pow(4).unwrap(),
                    quantum_int(3).pow(15).unwrap(),
                    one_plus_q(6).pow(4).unwrap(),
                ])
            },
        },
        Fixture {
            n: 5, f: 2, lambda: &[1], eps: -1, a: 1,
            label: "det G_(2,(1)) at r=-q",
            expected: || {
                -&prod(&[
                    RationalFn::from_int(32),
                    qp(2),
                    one_plus_q(2),
                    one_plus_q(4).pow(10).unwrap(),
                    one_plus_q(6),
                ])
            },
        },
        Fixture {
            n: 5, f: 2, lambda: &[1], eps: 1, a: -1,
            label: "det G_(2,(1)) at r=q^-1",
            expected: || {
                -&prod(&[
                    RationalFn::from_int(32),
                    qp(2),
                    one_plus_q(2),
                    one_plus_q(4).pow(10).unwrap(),
                    one_plus_q(6),
                ])
            },
        },
    ];

    let ctx = GramCtx::new();
    let mut all = true;
    for fx in &fixtures {
        let det = gram_det_recursive(&ctx, fx.n, fx.f, &pt(fx.lambda)).unwrap();
        let got = det.value.substitute_r(fx.eps, fx.a).unwrap();
        let expected = (fx.expected)();
        if got != expected {
            all = false;
            let ratio = &got / &expected;
            if ratio.num().as_monomial().is_some() && ratio.den().is_one() {
                println!("  {}: unit-monomial-only mismatch, got = expected * {}", fx.label, ratio);
            } else {
                println!("  {}: structural mismatch\n    got      {}\n    expected {}", fx.label, got, expected);
            }
        }
    }
    report("criterion 3", all, "all degenerate-parameter determinants match the published values exactly");
}

#[test]
fn criterion_4_relation_certification() {
    let mut all = true;
    let mut cells: Vec<(u32, u32, Partition)> = Vec::new();
    for n in [3u32, 4] {
        for cell in cell_labels(n) {
            cells.push((n, cell.f, cell.lambda));
        }
    }
    cells.push((5, 1, pt(&[3])));
    cells.push((5, 1, pt(&[2, 1])));
    cells.push((5, 2, pt(&[1])));

    for (n, f, lambda) in &cells {
        match build_rep(*n, *f, lambda) {
            Ok(rep) => {
                let rpt = certify_relations(&rep);
                if !rpt.all_pass {
                    all = false;
                    println!("  ({f}, ({lambda})) at n={n}: {:?}", rpt.first_failure());
                }
            }
            Err(e) => {
                all = false;
                println!("  ({f}, ({lambda})) at n={n}: {e}");
            }
        }
    }
    report(
        "criterion 4",
        all,
        &format!("every defining relation holds on all {} certified cells", cells.len()),
    );
}

#[test]
fn criterion_5_combinatorial_identities() {
    let mut all = true;
    for n in 1..=7u32 {
        let mut sum: u128 = 0;
        for cell in cell_labels(n) {
            let dim = cell_dim(n, cell.f, &cell.lambda).unwrap();
            let count = enum_updown(n, cell.f, &cell.lambda).unwrap().len() as u64;
            if count != dim {
                all = false;
                println!("  enumeration vs formula mismatch at {cell}, n = {n}");
            }
            sum += (dim as u128) * (dim as u128);
        }
        if sum != double_factorial_odd(n) {
            all = false;
            println!("  rank sum at n = {n}: {sum} != (2n-1)!!");
        }
    }
    for n in 2..=6u32 {
        for cell in cell_labels(n) {
            let dim = cell_dim(n, cell.f, &cell.lambda).unwrap();
            let branch_sum: u64 = bmw_core::combin::branching_predecessors(n, cell.f, &cell.lambda)
                .unwrap()
                .iter()
                .map(|c| cell_dim(n - 1, c.f, &c.lambda).unwrap())
                .sum();
            if dim != branch_sum {
                all = false;
                println!("  branching sum mismatch at {cell}, n = {n}");
            }
        }
    }
    report(
        "criterion 5",
        all,
        "rank sums equal (2n-1)!! (n <= 7), enumeration matches the hook formula (n <= 7), branching sums match (n <= 6)",
    );
}

#[test]
fn criterion_6_conjugate_factor_duality() {
    let ctx = GramCtx::new();
    let mut all = true;
    let mut cells = 0;
    for n in 1..=5u32 {
        for cell in cell_labels(n) {
            cells += 1;
            if !dual_factor_check(&ctx, n, cell.f, &cell.lambda).unwrap() {
                all = false;
                println!("  duality fails at {cell}, n = {n}");
            }
        }
    }
    report(
        "criterion 6",
        all,
        &format!("the factor involution (eps, a) -> (-eps, -a) holds on all {cells} cells, n <= 5"),
    );
}

#[test]
fn criterion_7_criterion_agreement() {
    let ctx = GramCtx::new();
    let mut all = true;
    let mut checked = 0;
    for n in [3u32, 4, 5] {
        let mut vanishing: Vec<(i8, i64)> = Vec::new();
        for eps in [1i8, -1] {
            for a in -11..=11i64 {
                if (eps, a) == (1, -1) || (eps, a) == (-1, 1) {
                    continue; // outside the hypothesis of the determinant route
                }
                let c = cross_check_criterion(&ctx, n, eps, a).unwrap();
                checked += 1;
                if !c.agree {
                    all = false;
                    println!("  disagreement at n = {n}, r = {}q^{a}", if eps > 0 { "" } else { "-" });
                }
                if !c.decision_semisimple {
                    vanishing.push((eps, a));
                }
            }
        }
        if n == 3 {
            vanishing.sort();
            let expect = vec![(-1, 0), (-1, 3), (1, -3), (1, 0)];
            if vanishing != expect {
                all = false;
                println!("  n = 3 vanishing set {vanishing:?} != {{q^-3, ±1, -q^3}}");
            }
        }
    }
    report(
        "criterion 7",
        all,
        &format!("decision procedure and determinant route agree at all {checked} sampled parameters, n in {{3,4,5}}"),
    );
}

#[test]
fn criterion_8_invariant_suites() {
    let ctx = GramCtx::new();
    let delta = delta_param();
    let mut all = true;

    // E_tt trace law: the diagonal entries over a revisiting class sum to
    // delta, for every class, n <= 5.
    for n in 2..=5u32 {
        for cell in cell_labels(n) {
            for t in enum_updown(n, cell.f, &cell.lambda).unwrap() {
                for k in 1..t.n() {
                    if t.step(k - 1) != t.step(k + 1) {
                        continue;
                    }
                    let class = sim_class(&t, k).unwrap();
                    if class[0] != t {
                        continue;
                    }
                    let mut sum = RationalFn::zero();
                    for u in &class {
                        sum = &sum + &e_tt(u, k).unwrap();
                    }
                    if sum != delta {
                        all = false;
                        println!("  trace law fails for the class of {t} at {k}");
                    }
                }
            }
        }
    }

    // Central content: the product of all step contents is constant on each
    // cell, n <= 5.
    for n in 1..=5u32 {
        for cell in cell_labels(n) {
            let ts = enum_updown(n, cell.f, &cell.lambda).unwrap();
            let key = |t: &UpDownTableau| {
                t.contents()
                    .iter()
                    .fold((0i64, 0i64), |(er, eq), c| (er + c.e_r as i64, eq + c.e_q))
            };
            let first = key(&ts[0]);
            if ts.iter().any(|t| key(t) != first) {
                all = false;
                println!("  central content varies inside {cell}, n = {n}");
            }
        }
    }

    // Content strings separate tableaux, n <= 5.
    for n in 1..=5u32 {
        for cell in cell_labels(n) {
            let ts = enum_updown(n, cell.f, &cell.lambda).unwrap();
            let mut seen = std::collections::HashSet::new();
            for t in &ts {
                if !seen.insert(t.contents()) {
                    all = false;
                    println!("  duplicate content string inside {cell}, n = {n}");
                }
            }
        }
    }

    // Norm-step property: norm(t s_k) = ratio * norm(t) whenever the swap
    // descends, n <= 5.
    for n in 2..=5u32 {
        for cell in cell_labels(n) {
            for t in enum_updown(n, cell.f, &cell.lambda).unwrap() {
                for k in 1..t.n() {
                    if t.step(k - 1) == t.step(k + 1) {
                        continue;
                    }
                    let Ok(Some(s)) = apply_s(&t, k) else { continue };
                    if cmp_cell_level(s.step(k), t.step(k)) != Some(std::cmp::Ordering::Less) {
                        continue;
                    }
                    let ratio = norm_step_check(&t, k).unwrap();
                    let lhs = norm_of(&ctx, &s).unwrap();
                    let rhs = &ratio * &norm_of(&ctx, &t).unwrap();
                    if lhs != rhs {
                        all = false;
                        println!("  norm-step property fails at {t}, k = {k}");
                    }
                }
            }
        }
    }

    // Positivity of structure: every norm is nonzero over Q(q, r).
    for n in 1..=5u32 {
        for cell in cell_labels(n) {
            for t in enum_updown(n, cell.f, &cell.lambda).unwrap() {
                if norm_of(&ctx, &t).unwrap().is_zero() {
                    all = false;
                    println!("  vanishing norm at {t}");
                }
            }
        }
    }

    // Integrality: after clearing q^2-1 powers and the monomial unit, every
    // determinant is a Laurent polynomial over the integers.
    for n in 1..=5u32 {
        for cell in cell_labels(n) {
            let det = gram_det_recursive(&ctx, n, cell.f, &cell.lambda).unwrap();
            let reduced = det.value.expand();
            let den = reduced.den();
            // The reduced denominator must divide a power of q^2 - 1.
            let mut rest = den.clone();
            let q2m1 = LaurentPoly::q2_minus_one();
            while let Some(next) = rest.div_exact(&q2m1) {
                rest = next;
            }
            let int_unit = match rest.as_monomial() {
                Some((c, _, _)) => c.abs() == num_bigint::BigInt::from(1),
                None => false,
            };
            if !int_unit {
                all = false;
                println!("  determinant of {cell} at n = {n} is not integral: den = {den}");
            }
        }
    }

    report(
        "criterion 8",
        all,
        "trace law, central content, content distinctness, norm-step property, nonzero norms and integrality all hold exactly, n <= 5",
    );
}
