//! Strategies and predicates shared by the property tests and the
//! acceptance harness.

#![allow(dead_code)]

use matdarboux::algebra::linsolve::{mat_vec, nullspace, rank};
use matdarboux::algebra::q;
use matdarboux::darboux::{conjugate, Direction};
use matdarboux::weights::{boundary_check, formal_symmetry_test, w_adjoint};
use matdarboux::{
    eigenvalue_poly, membership_test, monic_sequence, solve_bounded_order, verify_strong, Caps, DarbouxCertificate,
    GaussianRational as C, Kernel, MatC, MatDiffOp, MatP, MatR, MatrixWeight, Poly, RatFun, Q,
};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

type Outcome = Result<(), TestCaseError>;

fn ok<T>(r: matdarboux::Result<T>) -> Result<T, TestCaseError> {
    r.map_err(|e| TestCaseError::fail(e.to_string()))
}

// ---------------------------------------------------------------- strategies

pub fn small_q() -> impl Strategy<Value = Q> {
    (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d))
}

pub fn nonzero_q() -> impl Strategy<Value = Q> {
    small_q().prop_filter("nonzero", |v| !v.is_zero())
}

pub fn small_c() -> impl Strategy<Value = C> {
    (small_q(), -2i64..=2).prop_map(|(re, im)| C::new(re, q(im, 1)))
}

pub fn alpha() -> impl Strategy<Value = Q> {
    prop::sample::select(vec![q(-1, 2), q(0, 1), q(1, 2), q(1, 1), q(3, 2)])
}

pub fn poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_c(), 0..=max_deg + 1).prop_map(Poly::new)
}

pub fn nonzero_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
    poly(max_deg).prop_filter("nonzero", |p| !p.is_zero())
}

pub fn ratfun() -> impl Strategy<Value = RatFun> {
    (poly(2), nonzero_poly(2)).prop_map(|(n, d)| RatFun::new(n, d).expect("nonzero denominator"))
}

pub fn matc(n: usize) -> impl Strategy<Value = MatC> {
    prop::collection::vec(small_c(), n * n).prop_map(move |v| MatC::from_vec(n, n, v))
}

/// Hermitian constant matrix.
pub fn hermitian(n: usize) -> impl Strategy<Value = MatC> {
    matc(n).prop_map(|m| m.add(&m.conj_transpose()))
}

pub fn matp(n: usize, deg: usize) -> impl Strategy<Value = MatP> {
    prop::collection::vec(poly(deg), n * n).prop_map(move |v| MatP::from_vec(n, n, v))
}

/// Invertible `n × n` matrix of small rational functions.
pub fn invertible_matr(n: usize) -> impl Strategy<Value = MatR> {
    let entry = (poly(1), prop::sample::select(vec![Poly::one(), Poly::from_ints(&[1, 1]), Poly::from_ints(&[-2, 0, 1])]))
        .prop_map(|(n, d)| RatFun::new(n, d).expect("nonzero denominator"));
    prop::collection::vec(entry, n * n)
        .prop_map(move |v| MatR::from_vec(n, n, v))
        .prop_filter("invertible", |m| !m.det().is_zero())
}

/// Operator `Σ_{j ≤ order} ∂^j F_j` with polynomial coefficients of degree `≤ deg`.
pub fn op(n: usize, order: usize, deg: usize) -> impl Strategy<Value = MatDiffOp> {
    prop::collection::vec(matp(n, deg), 1..=order + 1)
        .prop_map(move |cs| MatDiffOp::from_poly_coeffs(n, cs).expect("square coefficients"))
}

/// Operator with `deg F_j ≤ j`.
pub fn graded_op(n: usize, order: usize) -> impl Strategy<Value = MatDiffOp> {
    (0..=order)
        .prop_flat_map(move |o| (0..=o).map(|j| matp(n, j)).collect::<Vec<_>>())
        .prop_map(move |cs| MatDiffOp::from_poly_coeffs(n, cs).expect("square coefficients"))
}

/// `x^n I + Σ_{k<n} T_k x^k` for each `n ≤ 12`, sharing the random tail.
pub fn monic_family(size: usize) -> impl Strategy<Value = Vec<MatP>> {
    prop::collection::vec(matc(size), 12).prop_map(move |tail| {
        (0..=12)
            .map(|n| {
                let mut cs: Vec<MatC> = tail[..n].to_vec();
                cs.push(MatC::identity(size));
                MatP::from_coeff_mats(size, size, &cs)
            })
            .collect()
    })
}

/// Positive-definite 2 × 2 weights over every kernel.
#[derive(Clone, Debug)]
pub enum WeightCase {
    HermiteLinear(Q),
    HermiteQuadratic(Q),
    Laguerre(Q, Q),
    Jacobi(Q, Q, Q),
}

impl WeightCase {
    pub fn build(&self) -> MatrixWeight {
        let x = Poly::x();
        let unit = |a: &Q, k: usize| {
            MatP::from_rows(vec![
                vec![Poly::one(), Poly::monomial(C::real(a.clone()), k)],
                vec![Poly::zero(), Poly::one()],
            ])
        };
        match self {
            Self::HermiteLinear(a) => MatrixWeight::from_factor(Kernel::Hermite, unit(a, 1), vec![Poly::one(); 2]),
            Self::HermiteQuadratic(a) => MatrixWeight::from_factor(Kernel::Hermite, unit(a, 2), vec![Poly::one(); 2]),
            Self::Laguerre(a, al) => MatrixWeight::from_factor(Kernel::laguerre(al.clone()), unit(a, 1), vec![x, Poly::one()]),
            Self::Jacobi(a, al, be) => {
                MatrixWeight::from_factor(Kernel::jacobi(al.clone(), be.clone()), unit(a, 1), vec![Poly::one(); 2])
            }
        }
        .expect("valid weight")
    }
}

pub fn weight_case() -> impl Strategy<Value = WeightCase> {
    prop_oneof![
        nonzero_q().prop_map(WeightCase::HermiteLinear),
        nonzero_q().prop_map(WeightCase::HermiteQuadratic),
        (nonzero_q(), alpha()).prop_map(|(a, al)| WeightCase::Laguerre(a, al)),
        (nonzero_q(), alpha(), alpha()).prop_map(|(a, al, be)| WeightCase::Jacobi(a, al, be)),
    ]
}

// ------------------------------------------------------------------ fixtures

pub fn hermite_scalar(size: usize) -> MatrixWeight {
    MatrixWeight::scalar(Kernel::Hermite, size).expect("scalar weight")
}

/// `δ = ∂² − 2x∂` acting on `size × size` matrices.
pub fn hermite_delta(size: usize) -> MatDiffOp {
    let m = |p: Poly| MatP::scalar(size, p);
    MatDiffOp::from_poly_coeffs(size, vec![m(Poly::zero()), m(Poly::from_ints(&[0, -2])), m(Poly::one())])
        .expect("square coefficients")
}

/// `Σ_k δ^k M_k`, a member of `D(e^{−x²} I)`.
pub fn delta_poly(ms: &[MatC]) -> MatDiffOp {
    let size = ms[0].rows();
    let delta = hermite_delta(size);
    ms.iter().enumerate().fold(MatDiffOp::zero(size), |acc, (k, m)| {
        acc.add(&delta.pow(k).compose(&MatDiffOp::constant(m)).expect("same size"))
    })
}

/// Weight `e^{−x²} (1 + a²x², ax; ax, 1)`.
pub fn hermite_linear(a: &Q) -> MatrixWeight {
    WeightCase::HermiteLinear(a.clone()).build()
}

/// Strong certificate from `e^{−x²} I` to [`hermite_linear`], transformer
/// `∂(0, 1; 1, −ax) − (2/a) I`.
pub fn hermite_linear_cert(a: &Q, caps: Caps) -> DarbouxCertificate {
    let c = |v: Q| Poly::constant(C::real(v));
    let f1 = MatP::from_rows(vec![vec![Poly::zero(), Poly::one()], vec![Poly::one(), Poly::monomial(C::real(-a), 1)]]);
    let f0 = MatP::scalar(2, c(q(-2, 1) / a));
    let v = MatDiffOp::from_poly_coeffs(2, vec![f0, f1]).expect("square coefficients");
    verify_strong(&v, &hermite_scalar(2), &hermite_linear(a), caps).expect("certificate runs")
}

fn real_combination(basis: &[MatDiffOp], coeffs: &[i64]) -> MatDiffOp {
    let size = basis.first().map_or(1, MatDiffOp::size);
    basis
        .iter()
        .zip(coeffs.iter().cycle())
        .fold(MatDiffOp::zero(size), |acc, (b, &k)| acc.add(&b.scale(&C::from_int(k))))
}

// ---------------------------------------------------------------- predicates

pub fn poly_ring_laws(p: &Poly, qq: &Poly, r: &Poly) -> Outcome {
    prop_assert_eq!(&(p + qq) * r, &(p * r) + &(qq * r));
    prop_assert_eq!((p * qq).derivative(), &(&p.derivative() * qq) + &(p * &qq.derivative()));
    Ok(())
}

/// `Π (d ν − n) · (ν² + k)` has exactly the nonnegative integers among `n/d`
/// as nonnegative integer roots.
pub fn integer_roots_exact(roots: &[(i64, i64)], k: i64) -> Outcome {
    let p = roots
        .iter()
        .fold(Poly::from_ints(&[k, 0, 1]), |acc, &(n, d)| &acc * &Poly::from_ints(&[-n, d]));
    let mut expected: Vec<usize> =
        roots.iter().filter(|&&(n, d)| n >= 0 && n % d == 0).map(|&(n, d)| (n / d) as usize).collect();
    expected.sort_unstable();
    expected.dedup();
    prop_assert_eq!(p.nonneg_integer_roots(), expected);
    Ok(())
}

pub fn ratfun_canonical(a: &RatFun, b: &RatFun) -> Outcome {
    let mut results = vec![a + b, a - b, a * b, a.derivative()];
    if let Ok(inv) = b.inv() {
        results.push(a * &inv);
    }
    for r in results {
        prop_assert!(r.num().gcd(r.den()).is_one(), "gcd(num, den) ≠ 1 in {}", r);
        prop_assert_eq!(r.den().leading().cloned(), Some(C::one()), "denominator not monic in {}", r);
    }
    Ok(())
}

pub fn inverse_involution(m: &MatR) -> Outcome {
    let inv = ok(m.inverse())?;
    prop_assert_eq!(&ok(inv.inverse())?, m);
    prop_assert_eq!(m.mul(&inv), MatR::identity(m.rows()));
    Ok(())
}

pub fn nullspace_laws(a: &[Vec<C>], cols: usize) -> Outcome {
    let ns = nullspace(a, cols);
    for v in &ns {
        prop_assert!(mat_vec(a, v).iter().all(Zero::is_zero), "A v ≠ 0");
    }
    let r = rank(a);
    prop_assert_eq!(ns.len(), cols - r, "rank-nullity");
    prop_assert_eq!(rank(&ns), ns.len(), "nullspace vectors dependent");
    Ok(())
}

pub fn apply_linear(p1: &MatP, p2: &MatP, c: &C, a: &MatDiffOp, b: &MatDiffOp) -> Outcome {
    let comb = p1.scale_c(c).add(p2);
    let lhs = ok(a.apply_poly(&comb))?;
    prop_assert_eq!(lhs, ok(a.apply_poly(p1))?.scale_c(c).add(&ok(a.apply_poly(p2))?));
    let lhs = ok(a.add(b).apply_poly(p1))?;
    prop_assert_eq!(lhs, ok(a.apply_poly(p1))?.add(&ok(b.apply_poly(p1))?));
    let lhs = ok(a.compose(b).and_then(|ab| ab.apply_poly(p1)))?;
    prop_assert_eq!(lhs, ok(b.apply_poly(&ok(a.apply_poly(p1))?))?, "apply(P, A∘B) = apply(apply(P, A), B)");
    Ok(())
}

pub fn compose_associative(a: &MatDiffOp, b: &MatDiffOp, c: &MatDiffOp) -> Outcome {
    let l = ok(a.compose(b).and_then(|ab| ab.compose(c)))?;
    let r = ok(b.compose(c).and_then(|bc| a.compose(&bc)))?;
    prop_assert_eq!(l, r);
    Ok(())
}

pub fn formal_adjoint_laws(a: &MatDiffOp, b: &MatDiffOp) -> Outcome {
    prop_assert_eq!(&a.formal_adjoint().formal_adjoint(), a);
    let ab = ok(a.compose(b))?;
    prop_assert_eq!(ab.formal_adjoint(), ok(b.formal_adjoint().compose(&a.formal_adjoint()))?);
    prop_assert_eq!(a.add(b).formal_adjoint(), a.formal_adjoint().add(&b.formal_adjoint()));
    Ok(())
}

pub fn order_additive(a: &MatDiffOp, b: &MatDiffOp) -> Outcome {
    let nonsingular = |d: &MatDiffOp| d.leading_coeff().is_some_and(|l| !l.det().is_zero());
    prop_assume!(nonsingular(a) && nonsingular(b));
    let ab = ok(a.compose(b))?;
    prop_assert_eq!(ab.order(), Some(a.order().unwrap() + b.order().unwrap()));
    Ok(())
}

pub fn degree_preserving_sound(v: &MatDiffOp, family: &[MatP]) -> Outcome {
    prop_assume!(v.degree_preserving_test().is_yes());
    for (n, p) in family.iter().enumerate() {
        let out = ok(v.apply_poly(p))?;
        prop_assert_eq!(out.degree(), Some(n));
        prop_assert!(!out.coeff(n).det().is_zero(), "singular leading coefficient at n = {}", n);
    }
    Ok(())
}

pub fn sesquilinear(w: &MatrixWeight, p1: &MatP, p2: &MatP, qm: &MatP, c: &C) -> Outcome {
    let ip = |p: &MatP, qq: &MatP| ok(w.inner_product(p, qq));
    let lhs = ip(&p1.scale_c(c).add(p2), qm)?;
    prop_assert_eq!(lhs, ip(p1, qm)?.scale_c(c).add(&ip(p2, qm)?));
    prop_assert_eq!(ip(p1, &qm.scale_c(c))?, ip(p1, qm)?.scale_c(&c.conj()));
    prop_assert_eq!(ip(qm, p1)?, ip(p1, qm)?.conj_transpose());
    Ok(())
}

/// `⟨P, P⟩` for `P = T x^d + lower` with `T` nonsingular.
pub fn positive_definite(w: &MatrixWeight, lower: &MatP, t: &MatC) -> Outcome {
    prop_assume!(!t.det().is_zero());
    let d = lower.degree().map_or(0, |k| k + 1);
    let p = lower.add(&MatP::from_coeff_mats(2, 2, &[vec![MatC::zeros(2, 2); d], vec![t.clone()]].concat()));
    let g = ok(w.inner_product(&p, &p))?;
    prop_assert!(g.is_hermitian());
    for m in g.leading_minors() {
        prop_assert!(m.is_real() && m.re.is_positive(), "leading minor {} not positive", m);
    }
    Ok(())
}

pub fn dagger_involution(w: &MatrixWeight, d: &MatDiffOp) -> Outcome {
    let dd = ok(w_adjoint(d, w).and_then(|a| w_adjoint(&a, w)))?;
    prop_assert_eq!(&dd, d);
    Ok(())
}

/// `⟨x^j E_pq · D, x^k E_rs⟩ = ⟨x^j E_pq, x^k E_rs · D†⟩` on the given pairs.
pub fn adjoint_identity(w: &MatrixWeight, d: &MatDiffOp, pairs: &[(usize, usize, usize, usize, usize, usize)]) -> Outcome {
    prop_assert!(ok(boundary_check(d, w))?);
    let dag = ok(w_adjoint(d, w))?;
    let mono = |k: usize, r: usize, s: usize| MatP::from_coeff_mats(2, 2, &[vec![MatC::zeros(2, 2); k], vec![MatC::unit(2, r, s)]].concat());
    for &(j, p, qq, k, r, s) in pairs {
        let a = mono(j, p, qq);
        let b = mono(k, r, s);
        let lhs = ok(w.inner_product(&ok(d.apply_poly(&a))?, &b))?;
        let rhs = ok(w.inner_product(&a, &ok(dag.apply_poly(&b))?))?;
        prop_assert_eq!(lhs, rhs, "pair x^{} E{}{}, x^{} E{}{}", j, p, qq, k, r, s);
    }
    Ok(())
}

pub fn mop_laws(w: &MatrixWeight, k: usize) -> Outcome {
    let t = ok(monic_sequence(w, k))?;
    ok(t.verify_orthogonality())?;
    for (n, norm) in t.norms().iter().enumerate() {
        prop_assert!(norm.is_hermitian(), "norm {} not Hermitian", n);
        for m in norm.leading_minors() {
            prop_assert!(m.is_real() && m.re.is_positive(), "norm {} has minor {}", n, m);
        }
    }
    for n in 0..k {
        ok(t.recurrence_coeffs(n))?;
    }
    Ok(())
}

/// `Λ(A∘B) = Λ(A)Λ(B)` and `Λ(cA + B) = cΛ(A) + Λ(B)`.
pub fn representation(a: &MatDiffOp, b: &MatDiffOp, c: &C) -> Outcome {
    let la = ok(eigenvalue_poly(a))?;
    let lb = ok(eigenvalue_poly(b))?;
    prop_assert_eq!(ok(a.compose(b).and_then(|ab| eigenvalue_poly(&ab)))?, la.mul(&lb));
    prop_assert_eq!(ok(eigenvalue_poly(&a.scale(c).add(b)))?, la.scale(c).add(&lb));
    Ok(())
}

/// Representation property on members of `D(e^{−x²} I)`; the product is
/// checked to stay in the algebra.
pub fn representation_members(ma: &[MatC], mb: &[MatC], c: &C) -> Outcome {
    let a = delta_poly(ma);
    let b = delta_poly(mb);
    let w = hermite_scalar(ma[0].rows());
    prop_assert!(ok(a.compose(&b).and_then(|ab| membership_test(&ab, &w, 8)))?);
    representation(&a, &b, c)
}

pub fn solver_outputs_are_members(w: &MatrixWeight, m: usize) -> Outcome {
    let r = ok(solve_bounded_order(w, m, m + 2))?;
    prop_assert!(r.all_members && r.symmetric_split_holds());
    for d in &r.basis {
        prop_assert!(ok(membership_test(d, w, r.k_final + 4))?, "{} is not a member", d);
    }
    for s in &r.symmetric_basis {
        prop_assert!(ok(formal_symmetry_test(s, w))?, "{} is not symmetric", s);
    }
    Ok(())
}

/// Symmetric operators over `e^{−x²} I` have even order and a constant
/// Hermitian leading coefficient.
pub fn sim_hermite(m: usize, coeffs: &[i64]) -> Outcome {
    let w = hermite_scalar(2);
    let r = ok(solve_bounded_order(&w, m, m + 2))?;
    let d = real_combination(&r.symmetric_basis, coeffs);
    prop_assert!(ok(formal_symmetry_test(&d, &w))?);
    let Some(o) = d.order() else { return Ok(()) };
    prop_assert_eq!(o % 2, 0);
    let lead = d.leading_coeff().unwrap();
    let consts: Option<Vec<C>> = lead.entries().iter().map(|e| e.as_poly().filter(|p| p.is_constant()).map(|p| p.coeff(0))).collect();
    prop_assert!(consts.is_some(), "non-constant leading coefficient {}", lead);
    let lc = MatC::from_vec(2, 2, consts.unwrap());
    prop_assert!(lc.is_hermitian(), "leading coefficient {} not Hermitian", lc);
    Ok(())
}

/// Even-order symmetric operators over `diag(w_{α+1}, w_α)` have leading
/// coefficient `diag(k₁xᵏ, k₄xᵏ)` with real `k₁, k₄`.
pub fn sim_laguerre(al: &Q, m: usize, coeffs: &[i64]) -> Outcome {
    let diag = MatP::diag(vec![Poly::x(), Poly::one()]);
    let w = ok(MatrixWeight::new(Kernel::laguerre(al.clone()), diag))?;
    let r = ok(solve_bounded_order(&w, m, m + 2))?;
    let d = real_combination(&r.symmetric_basis, coeffs);
    prop_assert!(ok(formal_symmetry_test(&d, &w))?);
    let Some(o) = d.order() else { return Ok(()) };
    if o % 2 == 1 {
        return Ok(());
    }
    let k = o / 2;
    let lead = d.leading_coeff().unwrap().to_poly();
    prop_assert!(lead.is_some(), "rational leading coefficient");
    let lead = lead.unwrap();
    prop_assert!(lead[(0, 1)].is_zero() && lead[(1, 0)].is_zero(), "off-diagonal leading coefficient {}", lead);
    for i in 0..2 {
        let e = &lead[(i, i)];
        let shaped = e.is_zero() || (e.degree() == Some(k) && e.coeffs()[..k].iter().all(Zero::is_zero));
        prop_assert!(shaped, "entry {} of {} is not a multiple of x^{}", i, lead, k);
        prop_assert!(e.coeff(k).is_real());
    }
    Ok(())
}

/// Conjugation down and back up keeps symmetry and adds `2·ord V` each way.
pub fn conjugation_parity(cert: &DarbouxCertificate, hs: &[MatC]) -> Outcome {
    let a = delta_poly(hs);
    prop_assert!(ok(formal_symmetry_test(&a, &cert.source))?);
    let down = ok(conjugate(&a, cert, Direction::Down))?;
    prop_assert_eq!(down.order(), a.order().map(|o| o + 2));
    prop_assert!(ok(formal_symmetry_test(&down, &cert.target))?);
    let up = ok(conjugate(&down, cert, Direction::Up))?;
    prop_assert_eq!(up.order(), a.order().map(|o| o + 4));
    prop_assert!(ok(formal_symmetry_test(&up, &cert.source))?);
    Ok(())
}

/// For `B ∈ D(W̃)`, `N∘(V∘B∘N)∘V` has the eigenvalue of `D̃∘B∘D̃`.
pub fn round_trip(cert: &DarbouxCertificate, ms: &[MatC]) -> Outcome {
    let b = ok(conjugate(&delta_poly(ms), cert, Direction::Down))?;
    let back = ok(conjugate(&b, cert, Direction::Up).and_then(|u| conjugate(&u, cert, Direction::Down)))?;
    let dt = ok(cert.d_tilde())?;
    let expected = ok(dt.compose(&b).and_then(|x| x.compose(&dt)))?;
    prop_assert_eq!(ok(eigenvalue_poly(&back))?, ok(eigenvalue_poly(&expected))?);
    Ok(())
}

/// Over a strong transform of `e^{−x²} I`, an odd order bound yields only
/// even-order operators.
pub fn parity_corollary(a: &Q, m: usize) -> Outcome {
    let r = ok(solve_bounded_order(&hermite_linear(a), m, m + 2))?;
    for d in &r.basis {
        prop_assert_eq!(d.order().map(|o| o % 2), Some(0), "odd-order member {}", d);
    }
    Ok(())
}

/// `⟨P·V, Q⟩_{W̃} = ⟨P, Q·N⟩_W` for arbitrary polynomial pairs.
pub fn adjointness_bilinear(cert: &DarbouxCertificate, p: &MatP, qm: &MatP) -> Outcome {
    let n = ok(cert.companion())?;
    let lhs = ok(cert.v.apply_poly(p).and_then(|pv| cert.target.inner_product(&pv, qm)))?;
    let rhs = ok(n.apply_poly(qm).and_then(|qn| cert.source.inner_product(p, &qn)))?;
    prop_assert_eq!(lhs, rhs);
    Ok(())
}

// -------------------------------------------------------------------- suites

fn matrix_rows() -> impl Strategy<Value = (Vec<Vec<C>>, usize)> {
    (1usize..=4, 1usize..=5).prop_flat_map(|(r, c)| {
        let entry = prop_oneof![4 => (-2i64..=2).prop_map(C::from_int), 1 => small_c()];
        (prop::collection::vec(prop::collection::vec(entry, c), r), Just(c))
    })
}

fn pairs() -> impl Strategy<Value = Vec<(usize, usize, usize, usize, usize, usize)>> {
    prop::collection::vec((0usize..=8, 0usize..2, 0usize..2, 0usize..=8, 0usize..2, 0usize..2), 6)
}

/// Runs `f` on `cases` fresh inputs with a fixed seed; each suite gets its own
/// runner because a runner counts successes across calls.
fn run<S: Strategy>(
    cases: u32,
    name: &'static str,
    s: S,
    f: impl Fn(S::Value) -> Outcome,
) -> (&'static str, Result<(), String>) {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    let mut runner = TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha));
    (name, runner.run(&s, f).map_err(|e| e.to_string()))
}

/// Every property suite at a fixed seed; `(name, outcome)` per suite.
pub fn run_suites(light: u32, heavy: u32) -> Vec<(&'static str, Result<(), String>)> {
    let caps = Caps { degree: 8, n_check: 8 };
    vec![
        run(light, "polynomial ring laws", (poly(4), poly(4), poly(4)), |(a, b, c)| poly_ring_laws(&a, &b, &c)),
        run(
            light,
            "nonnegative integer roots",
            (prop::collection::vec((-50i64..=5000, 1i64..=3), 0..=5), 1i64..=5),
            |(r, k)| integer_roots_exact(&r, k),
        ),
        run(light, "rational functions stay canonical", (ratfun(), ratfun()), |(a, b)| ratfun_canonical(&a, &b)),
        run(light, "inverse is an involution (2×2)", invertible_matr(2), |m| inverse_involution(&m)),
        run(light, "inverse is an involution (3×3)", invertible_matr(3), |m| inverse_involution(&m)),
        run(light, "nullspace vectors", matrix_rows(), |(a, c)| nullspace_laws(&a, c)),
        run(
            light,
            "apply is linear",
            (matp(2, 3), matp(2, 3), small_c(), op(2, 2, 2), op(2, 2, 2)),
            |(p1, p2, c, a, b)| apply_linear(&p1, &p2, &c, &a, &b),
        ),
        run(light, "compose is associative", (op(2, 2, 2), op(2, 2, 2), op(2, 2, 2)), |(a, b, c)| {
            compose_associative(&a, &b, &c)
        }),
        run(light, "formal adjoint is an involutive anti-homomorphism", (op(2, 2, 2), op(2, 2, 2)), |(a, b)| {
            formal_adjoint_laws(&a, &b)
        }),
        run(light, "order is additive", (op(2, 3, 2), op(2, 3, 2)), |(a, b)| order_additive(&a, &b)),
        run(light, "degree-preserving test is sound", (graded_op(2, 2), monic_family(2)), |(v, f)| {
            degree_preserving_sound(&v, &f)
        }),
        run(
            light,
            "inner product is a sesquilinear Hermitian form",
            (weight_case(), matp(2, 3), matp(2, 3), matp(2, 3), small_c()),
            |(w, p1, p2, qm, c)| sesquilinear(&w.build(), &p1, &p2, &qm, &c),
        ),
        run(light, "Gram matrices are positive definite", (weight_case(), matp(2, 2), matc(2)), |(w, l, t)| {
            positive_definite(&w.build(), &l, &t)
        }),
        run(light, "W-adjoint is an involution", (weight_case(), op(2, 2, 2)), |(w, d)| {
            dagger_involution(&w.build(), &d)
        }),
        run(light, "adjoint identity on monomials", (nonzero_q(), op(2, 2, 2), pairs()), |(a, d, ps)| {
            adjoint_identity(&hermite_linear(&a), &d, &ps)
        }),
        run(light, "monic orthogonal polynomials", weight_case(), |w| mop_laws(&w.build(), 6)),
        run(light, "eigenvalue map is a linear representation", (graded_op(2, 3), graded_op(2, 3), small_c()), |(a, b, c)| {
            representation(&a, &b, &c)
        }),
        run(
            heavy,
            "representation on members",
            (prop::collection::vec(matc(2), 1..=2), prop::collection::vec(matc(2), 1..=2), small_c()),
            |(a, b, c)| representation_members(&a, &b, &c),
        ),
        run(heavy, "solver outputs are symmetric-split members", (weight_case(), 1usize..=2), |(w, m)| {
            solver_outputs_are_members(&w.build(), m)
        }),
        run(heavy, "symmetric Hermite operators", (1usize..=4, prop::collection::vec(-3i64..=3, 8)), |(m, c)| {
            sim_hermite(m, &c)
        }),
        run(
            heavy,
            "symmetric Laguerre direct-sum operators",
            (alpha(), 1usize..=2, prop::collection::vec(-3i64..=3, 8)),
            |(al, m, c)| sim_laguerre(&al, m, &c),
        ),
        run(heavy, "conjugation keeps symmetry and parity", (nonzero_q(), prop::collection::vec(hermitian(2), 1..=2)), |(a, hs)| {
            conjugation_parity(&hermite_linear_cert(&a, caps), &hs)
        }),
        run(heavy, "round trip through a certificate", (nonzero_q(), prop::collection::vec(matc(2), 1..=2)), |(a, ms)| {
            round_trip(&hermite_linear_cert(&a, caps), &ms)
        }),
        run(heavy, "odd order bounds give even operators", (nonzero_q(), prop::sample::select(vec![1usize, 3])), |(a, m)| {
            parity_corollary(&a, m)
        }),
        run(heavy, "adjointness extends to polynomial pairs", (nonzero_q(), matp(2, 4), matp(2, 4)), |(a, p, qm)| {
            adjointness_bilinear(&hermite_linear_cert(&a, caps), &p, &qm)
        }),
    ]
}
