//! The algebra `D(W)` of operators having the monic orthogonal polynomials
//! as eigenfunctions: `P_n·D = Λ_n(D) P_n`.
//!
//! Eigenvalues are kept as polynomials in a formal index `ν`, so identities
//! "for all n" are decided exactly. Since `P ↦ Λ(P)` is injective on `D(W)`
//! and `Λ(A∘B) = Λ(A)Λ(B)`, relations between members are checked on
//! eigenvalues.

use std::fmt;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{Echelon, GaussianRational, MatC, MatP, Poly, RatFun};
use crate::diffop::MatDiffOp;
use crate::error::{Error, Result};
use crate::mop::{monic_sequence, MOPTable};
use crate::weights::{w_adjoint, MatrixWeight};

type C = GaussianRational;

/// `Λ(ν)`: an `N×N` matrix of polynomials in the formal index `ν`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EigenMatrix(pub MatP);

impl EigenMatrix {
    pub fn size(&self) -> usize {
        self.0.rows()
    }

    pub fn identity(n: usize) -> Self {
        Self(MatP::identity(n))
    }

    pub fn scalar(n: usize, p: Poly) -> Self {
        Self(MatP::scalar(n, p))
    }

    pub fn constant(m: &MatC) -> Self {
        Self(m.to_poly())
    }

    pub fn matrix(&self) -> &MatP {
        &self.0
    }

    /// `Λ_n` at a concrete integer.
    pub fn at(&self, n: usize) -> MatC {
        self.0.map(|p| p.eval(&C::from_int(n as i64)))
    }

    pub fn add(&self, o: &Self) -> Self {
        Self(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Self(self.0.sub(&o.0))
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self(self.0.mul(&o.0))
    }

    pub fn scale(&self, c: &C) -> Self {
        Self(self.0.scale_c(c))
    }

    pub fn pow(&self, k: usize) -> Self {
        Self(self.0.pow(k))
    }

    pub fn commutator(&self, o: &Self) -> Self {
        Self(self.0.commutator(&o.0))
    }

    pub fn commutes_with(&self, o: &Self) -> bool {
        self.commutator(o).0.is_zero()
    }

    /// `c(ν)·I` for some polynomial `c`.
    pub fn is_scalar(&self) -> bool {
        let n = self.size();
        (0..n).all(|i| (0..n).all(|j| if i == j { self.0[(i, i)] == self.0[(0, 0)] } else { self.0[(i, j)].is_zero() }))
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.degree()
    }

    /// Determinant as a polynomial in `ν`.
    pub fn det(&self) -> Poly {
        self.0.det()
    }
}

impl fmt::Display for EigenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.size() {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.size() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.0[(i, j)].display_in("n"))?;
            }
        }
        write!(f, "]")
    }
}

impl fmt::Debug for EigenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `Λ(ν) = Σ_i [ν]_i F_i^i`, where `F_i^i` is the `x^i` coefficient of `F_i`.
pub fn eigenvalue_poly(d: &MatDiffOp) -> Result<EigenMatrix> {
    d.leading_symbol().map(EigenMatrix)
}

/// `P_n·D = Λ_n P_n` for `n = 0..=n_check`, with `P_n` from `table`.
pub fn membership_in(d: &MatDiffOp, table: &MOPTable, n_check: usize) -> Result<bool> {
    if n_check > table.max_degree() {
        return Err(Error::OutOfRange { index: n_check, max: table.max_degree() });
    }
    let Ok(lam) = eigenvalue_poly(d) else { return Ok(false) };
    let ok = (0..=n_check).into_par_iter().all(|n| {
        let p = &table.polys()[n];
        match d.apply(p) {
            Ok(lhs) => lhs == p.lmul_c(&lam.at(n)).to_ratfun(),
            Err(_) => false,
        }
    });
    Ok(ok)
}

/// Membership of `D` in `D(W)`, checked exactly for `n = 0..=n_check`.
pub fn membership_test(d: &MatDiffOp, w: &MatrixWeight, n_check: usize) -> Result<bool> {
    if d.size() != w.size() {
        return Err(Error::SizeMismatch { expected: w.size(), found: d.size() });
    }
    if d.checked_poly_coeffs().is_err() {
        return Ok(false);
    }
    membership_in(d, &monic_sequence(w, n_check)?, n_check)
}

/// Equality of two members of `D(W)` decided by their eigenvalues.
pub fn operator_equal_by_separation(d1: &MatDiffOp, d2: &MatDiffOp, table: &MOPTable) -> Result<bool> {
    let n_check = table.max_degree();
    for (name, d) in [("first", d1), ("second", d2)] {
        if !membership_in(d, table, n_check)? {
            return Err(Error::NotMember(format!("{name} operator {d}")));
        }
    }
    Ok(eigenvalue_poly(d1)? == eigenvalue_poly(d2)?)
}

/// `D1∘D2 = D2∘D1`, decided by `[Λ(D1), Λ(D2)] = 0`.
pub fn commutation_check(d1: &MatDiffOp, d2: &MatDiffOp) -> Result<bool> {
    Ok(eigenvalue_poly(d1)?.commutes_with(&eigenvalue_poly(d2)?))
}

/// `Z` commutes with every generator.
pub fn center_candidate_check(z: &MatDiffOp, generators: &[MatDiffOp]) -> Result<bool> {
    let lz = eigenvalue_poly(z)?;
    for g in generators {
        if !lz.commutes_with(&eigenvalue_poly(g)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of `{c : [Σ_k c_k Λ_k, Λ_target] = 0}`.
pub fn commuting_combinations(span: &[EigenMatrix], target: &EigenMatrix) -> Vec<Vec<C>> {
    let comms: Vec<MatP> = span.iter().map(|l| l.commutator(target).0).collect();
    let deg = comms.iter().filter_map(MatP::degree).max().unwrap_or(0);
    let mut ech = Echelon::new(span.len());
    for e in 0..target.size() * target.size() {
        for d in 0..=deg {
            let row: Vec<C> = comms.iter().map(|m| m.entries()[e].coeff(d)).collect();
            if row.iter().any(|c| !c.is_zero()) {
                ech.insert(row);
            }
        }
    }
    ech.nullspace()
}

/// One step of the solver's stabilization record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    /// Equations used: `n = 0..=k`.
    pub k: usize,
    pub dimension: usize,
}

/// The space `D(W)_{≤m}` computed from finitely many eigen-equations.
#[derive(Clone, Debug)]
pub struct SolveResult {
    pub order_bound: usize,
    pub unknowns: usize,
    pub basis: Vec<MatDiffOp>,
    /// A real basis of the symmetric members; its real dimension equals the
    /// complex dimension of `basis` when `D = S ⊕ iS` holds.
    pub symmetric_basis: Vec<MatDiffOp>,
    pub trace: Vec<TraceStep>,
    pub k_final: usize,
    pub n_check: usize,
    /// Every basis element passed the membership test at `n_check`.
    pub all_members: bool,
}

impl SolveResult {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// `dim_ℝ S = dim_ℂ D`.
    pub fn symmetric_split_holds(&self) -> bool {
        self.symmetric_basis.len() == self.basis.len()
    }
}

/// Unknown `(i, j, r, s)`: the `x^j E_rs` part of `F_i`, `j ≤ i ≤ m`.
fn unknowns(size: usize, m: usize) -> Vec<(usize, usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..=m {
        for j in 0..=i {
            for r in 0..size {
                for s in 0..size {
                    out.push((i, j, r, s));
                }
            }
        }
    }
    out
}

/// Rows of `P_n·D − Λ_n(D)P_n = 0`, one per coefficient of `x^d` and entry.
fn equation_rows(p: &MatP, n: usize, size: usize, unk: &[(usize, usize, usize, usize)]) -> Vec<Vec<C>> {
    let m = unk.last().map_or(0, |u| u.0);
    let derivs: Vec<MatP> = (0..=m).map(|i| p.nth_derivative(i)).collect();
    let cols: Vec<MatP> = unk
        .iter()
        .map(|&(i, j, r, s)| {
            let mono = MatP::from_fn(size, size, |a, b| {
                if a == r && b == s {
                    Poly::monomial(C::one(), j)
                } else {
                    Poly::zero()
                }
            });
            let mut col = derivs[i].mul(&mono);
            if i == j {
                let ff = Poly::falling_factorial_at(n, i);
                if !ff.is_zero() {
                    let e = MatC::unit(size, r, s).scale_c(&C::real(ff.into()));
                    col = col.sub(&p.lmul_c(&e));
                }
            }
            col
        })
        .collect();
    let mut rows = Vec::new();
    for d in 0..=n {
        for a in 0..size {
            for b in 0..size {
                let row: Vec<C> = cols.iter().map(|c| c[(a, b)].coeff(d)).collect();
                if row.iter().any(|c| !c.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    rows
}

fn operator_from_vector(v: &[C], size: usize, m: usize, unk: &[(usize, usize, usize, usize)]) -> MatDiffOp {
    let mut coeffs = vec![MatP::zeros(size, size); m + 1];
    for (c, &(i, j, r, s)) in v.iter().zip(unk) {
        if !c.is_zero() {
            coeffs[i][(r, s)] = &coeffs[i][(r, s)] + &Poly::monomial(c.clone(), j);
        }
    }
    MatDiffOp::from_poly_coeffs(size, coeffs).expect("square coefficients")
}

/// Solves for `D(W)_{≤m}`.
///
/// Equations for `n = 0..=K` are added in steps of two until the nullspace
/// dimension is the same at three consecutive steps. Each basis element is
/// then checked for membership at `n_check = K_final + 4`.
pub fn solve_bounded_order(w: &MatrixWeight, m: usize, k_start: usize) -> Result<SolveResult> {
    let size = w.size();
    let unk = unknowns(size, m);
    let mut table = monic_sequence(w, k_start + 12)?;
    let mut ech = Echelon::new(unk.len());
    let mut trace: Vec<TraceStep> = Vec::new();
    let mut next_n = 0;
    let mut k = k_start;
    loop {
        if k + 4 > table.max_degree() {
            table = monic_sequence(w, k + 12)?;
        }
        let batch: Vec<Vec<Vec<C>>> =
            (next_n..=k).into_par_iter().map(|n| equation_rows(&table.polys()[n], n, size, &unk)).collect();
        for rows in batch {
            for row in rows {
                ech.insert(row);
            }
        }
        next_n = k + 1;
        trace.push(TraceStep { k, dimension: unk.len() - ech.rank() });
        let t = trace.len();
        if t >= 3 && trace[t - 1].dimension == trace[t - 2].dimension && trace[t - 2].dimension == trace[t - 3].dimension
        {
            break;
        }
        k += 2;
    }
    let basis: Vec<MatDiffOp> = ech.nullspace().iter().map(|v| operator_from_vector(v, size, m, &unk)).collect();
    let n_check = k + 4;
    let mut all_members = true;
    for b in &basis {
        if !membership_in(b, &table, n_check)? {
            all_members = false;
        }
    }
    let symmetric_basis = symmetric_subbasis(&basis, w)?;
    Ok(SolveResult { order_bound: m, unknowns: unk.len(), basis, symmetric_basis, trace, k_final: k, n_check, all_members })
}

/// Whether `op` lies in the complex span of `basis` (polynomial operators).
pub fn in_span(basis: &[MatDiffOp], op: &MatDiffOp) -> Result<bool> {
    let all: Vec<&MatDiffOp> = basis.iter().chain(std::iter::once(op)).collect();
    let order = all.iter().filter_map(|d| d.order()).max().unwrap_or(0);
    let mut deg = 0;
    let mut coeffs = Vec::with_capacity(all.len());
    for d in &all {
        let cs = d.checked_poly_coeffs()?;
        deg = deg.max(cs.iter().filter_map(MatP::degree).max().unwrap_or(0));
        coeffs.push(cs);
    }
    let flatten = |cs: &[MatP]| -> Vec<C> {
        let mut v = Vec::new();
        for i in 0..=order {
            let m = cs.get(i).cloned().unwrap_or_else(|| MatP::zeros(op.size(), op.size()));
            for e in m.entries() {
                v.extend((0..=deg).map(|k| e.coeff(k)));
            }
        }
        v
    };
    let vecs: Vec<Vec<C>> = coeffs.iter().map(|c| flatten(c)).collect();
    let mut ech = Echelon::new(vecs[0].len());
    for v in &vecs[..basis.len()] {
        ech.insert(v.clone());
    }
    Ok(ech.contains(&vecs[basis.len()]))
}

/// Real basis of `{Σ c_k B_k : D† = D}`.
///
/// With `c_k = u_k + i v_k`, the condition is
/// `Σ u_k (B_k† − B_k) − v_k i (B_k† + B_k) = 0`, linear over ℝ.
pub fn symmetric_subbasis(basis: &[MatDiffOp], w: &MatrixWeight) -> Result<Vec<MatDiffOp>> {
    let d = basis.len();
    if d == 0 {
        return Ok(Vec::new());
    }
    let size = w.size();
    let i = C::i();
    let mut cols: Vec<MatDiffOp> = Vec::with_capacity(2 * d);
    let daggers: Vec<MatDiffOp> = basis.iter().map(|b| w_adjoint(b, w)).collect::<Result<_>>()?;
    for (b, bd) in basis.iter().zip(&daggers) {
        cols.push(bd.sub(b));
    }
    for (b, bd) in basis.iter().zip(&daggers) {
        cols.push(bd.add(b).scale(&(-&i)));
    }
    let order = cols.iter().filter_map(MatDiffOp::order).max();
    let mut ech = Echelon::new(2 * d);
    if let Some(order) = order {
        for j in 0..=order {
            for e in 0..size * size {
                let entries: Vec<RatFun> = cols.iter().map(|c| c.coeff(j).entries()[e].clone()).collect();
                let den = entries.iter().fold(Poly::one(), |acc, r| {
                    let g = acc.gcd(r.den());
                    (&acc * r.den()).div_exact(&g).expect("gcd divides")
                });
                let nums: Vec<Poly> =
                    entries.iter().map(|r| &r.num().clone() * &den.div_exact(r.den()).expect("lcm")).collect();
                let deg = nums.iter().filter_map(Poly::degree).max().unwrap_or(0);
                for dd in 0..=deg {
                    let re: Vec<C> = nums.iter().map(|p| C::real(p.coeff(dd).re)).collect();
                    let im: Vec<C> = nums.iter().map(|p| C::real(p.coeff(dd).im)).collect();
                    for row in [re, im] {
                        if row.iter().any(|c| !c.is_zero()) {
                            ech.insert(row);
                        }
                    }
                }
            }
        }
    }
    Ok(ech
        .nullspace()
        .into_iter()
        .map(|uv| {
            basis.iter().enumerate().fold(MatDiffOp::zero(size), |acc, (k, b)| {
                let c = C::new(uv[k].re.clone(), uv[d + k].re.clone());
                if c.is_zero() {
                    acc
                } else {
                    acc.add(&b.scale(&c))
                }
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::Kernel;

    fn delta() -> MatDiffOp {
        MatDiffOp::from_poly_coeffs(
            1,
            vec![MatP::zeros(1, 1), MatP::scalar(1, Poly::from_ints(&[0, -2])), MatP::identity(1)],
        )
        .unwrap()
    }

    #[test]
    fn hermite_eigenvalue() {
        assert_eq!(eigenvalue_poly(&delta()).unwrap(), EigenMatrix::scalar(1, Poly::from_ints(&[0, -2])));
        let w = MatrixWeight::scalar(Kernel::Hermite, 1).unwrap();
        assert!(membership_test(&delta(), &w, 10).unwrap());
        assert!(membership_test(&MatDiffOp::identity(1), &w, 10).unwrap());
        assert!(!membership_test(&MatDiffOp::derivative_power(1, 1), &w, 10).unwrap());
    }

    #[test]
    fn representation_property() {
        let w = MatrixWeight::scalar(Kernel::Hermite, 1).unwrap();
        let t = monic_sequence(&w, 10).unwrap();
        let d2 = delta().compose(&delta()).unwrap();
        let l = eigenvalue_poly(&delta()).unwrap();
        assert_eq!(eigenvalue_poly(&d2).unwrap(), l.mul(&l));
        assert!(operator_equal_by_separation(&d2, &MatDiffOp::poly_of(&Poly::from_ints(&[0, 0, 1]), &delta()), &t)
            .unwrap());
        assert!(operator_equal_by_separation(&MatDiffOp::derivative_power(1, 1), &delta(), &t).is_err());
    }

    #[test]
    fn solver_hermite_scalar() {
        let w = MatrixWeight::scalar(Kernel::Hermite, 1).unwrap();
        let r = solve_bounded_order(&w, 2, 4).unwrap();
        assert_eq!(r.dimension(), 2);
        assert!(r.all_members);
        assert!(r.symmetric_split_holds());
        // the eigenvalues (c0 + c1 ν) of the basis must span those of 1 and δ
        let mut base = Echelon::new(2);
        for b in &r.basis {
            let l = eigenvalue_poly(b).unwrap().0[(0, 0)].clone();
            base.insert(vec![l.coeff(0), l.coeff(1)]);
        }
        let span_has = |d: &MatDiffOp| {
            let l = eigenvalue_poly(d).unwrap().0[(0, 0)].clone();
            base.contains(&[l.coeff(0), l.coeff(1)])
        };
        assert!(span_has(&delta()));
        assert!(span_has(&MatDiffOp::identity(1)));
    }

    #[test]
    fn commutation() {
        let a = EigenMatrix(MatP::from_rows(vec![vec![Poly::x(), Poly::one()], vec![Poly::zero(), Poly::zero()]]));
        let id = EigenMatrix::identity(2);
        assert!(a.commutes_with(&id));
        assert!(id.is_scalar());
        assert!(!a.is_scalar());
        // combinations of {I, a} commuting with a: all of them
        assert_eq!(commuting_combinations(&[id.clone(), a.clone()], &a).len(), 2);
        let b = EigenMatrix(MatP::from_rows(vec![vec![Poly::zero(), Poly::zero()], vec![Poly::one(), Poly::zero()]]));
        // only multiples of I commute with b
        let ns = commuting_combinations(&[id, a], &b);
        assert_eq!(ns.len(), 1);
        assert!(ns[0][1].is_zero());
    }
}
