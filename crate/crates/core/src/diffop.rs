//! Matrix differential operators acting on the right.
//!
//! `D = Σ_j ∂^j F_j(x)` acts on a matrix polynomial by
//! `P·D = Σ_j P^{(j)}(x) F_j(x)`. Composition follows the action:
//! `A.compose(B)` applies `A` first, so `P·(A∘B) = (P·A)·B`.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{GaussianRational, MatC, MatP, MatR, Poly, RatFun};
use crate::error::{Error, Result};

type C = GaussianRational;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MatDiffOp {
    size: usize,
    /// `coeffs[j]` multiplies `∂^j`; trailing zero coefficients are trimmed.
    coeffs: Vec<MatR>,
}

/// Verdict of [`MatDiffOp::degree_preserving_test`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DegreePreserving {
    Yes,
    /// A coefficient `F_j` has degree above `j`; `index` is that `j`.
    DegreeTooHigh { index: usize },
    /// `det L(ν)` vanishes at `ν = witness` (the smallest such integer).
    SingularAt { witness: usize },
}

impl DegreePreserving {
    pub fn is_yes(&self) -> bool {
        matches!(self, Self::Yes)
    }

    pub fn witness(&self) -> Option<usize> {
        match self {
            Self::Yes => None,
            Self::DegreeTooHigh { index } => Some(*index),
            Self::SingularAt { witness } => Some(*witness),
        }
    }
}

fn binom(n: usize, k: usize) -> C {
    let mut acc: i64 = 1;
    for t in 0..k {
        acc = acc * (n - t) as i64 / (t + 1) as i64;
    }
    C::from_int(acc)
}

impl MatDiffOp {
    pub fn new(size: usize, mut coeffs: Vec<MatR>) -> Result<Self> {
        for c in &coeffs {
            if c.rows() != size || c.cols() != size {
                return Err(Error::SizeMismatch { expected: size, found: c.rows().max(c.cols()) });
            }
        }
        while coeffs.last().is_some_and(MatR::is_zero) {
            coeffs.pop();
        }
        Ok(Self { size, coeffs })
    }

    pub fn from_poly_coeffs(size: usize, coeffs: Vec<MatP>) -> Result<Self> {
        Self::new(size, coeffs.iter().map(MatP::to_ratfun).collect())
    }

    pub fn zero(size: usize) -> Self {
        Self { size, coeffs: Vec::new() }
    }

    pub fn identity(size: usize) -> Self {
        Self::constant(&MatC::identity(size))
    }

    /// The order-zero operator `P ↦ P·M`.
    pub fn constant(m: &MatC) -> Self {
        Self::multiplication(&m.to_ratfun())
    }

    /// The order-zero operator `P ↦ P·F(x)`.
    pub fn multiplication(f: &MatR) -> Self {
        Self::new(f.rows(), vec![f.clone()]).expect("square coefficient")
    }

    /// `∂^k I`.
    pub fn derivative_power(size: usize, k: usize) -> Self {
        let mut coeffs = vec![MatR::zeros(size, size); k + 1];
        coeffs[k] = MatR::identity(size);
        Self { size, coeffs }
    }

    /// `op ⊗ I_size`: a scalar operator acting on every entry.
    pub fn from_scalar(op: &MatDiffOp, size: usize) -> Self {
        assert_eq!(op.size, 1, "scalar operator expected");
        Self {
            size,
            coeffs: op.coeffs.iter().map(|c| MatR::scalar(size, c[(0, 0)].clone())).collect(),
        }
    }

    /// Block-diagonal operator from scalar operators, one per diagonal entry.
    pub fn diag(ops: &[MatDiffOp]) -> Self {
        let n = ops.len();
        let order = ops.iter().filter_map(MatDiffOp::order).max().map_or(0, |o| o + 1);
        let coeffs = (0..order)
            .map(|j| {
                let mut m = MatR::zeros(n, n);
                for (i, op) in ops.iter().enumerate() {
                    assert_eq!(op.size, 1, "scalar operator expected");
                    m[(i, i)] = op.coeff(j)[(0, 0)].clone();
                }
                m
            })
            .collect();
        Self::new(n, coeffs).expect("square")
    }

    /// `Σ_k c_k A^k` for a polynomial `p = Σ c_k t^k`.
    pub fn poly_of(p: &Poly, a: &MatDiffOp) -> Self {
        let mut acc = Self::zero(a.size);
        let mut pw = Self::identity(a.size);
        for (k, c) in p.coeffs().iter().enumerate() {
            if k > 0 {
                pw = pw.compose(a).expect("same size");
            }
            if !c.is_zero() {
                acc = acc.add(&pw.scale(c));
            }
        }
        acc
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn coeffs(&self) -> &[MatR] {
        &self.coeffs
    }

    /// Coefficient of `∂^j` (zero beyond the order).
    pub fn coeff(&self, j: usize) -> MatR {
        self.coeffs.get(j).cloned().unwrap_or_else(|| MatR::zeros(self.size, self.size))
    }

    /// True order, `None` for the zero operator.
    pub fn order(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coeff(&self) -> Option<&MatR> {
        self.coeffs.last()
    }

    pub fn is_polynomial(&self) -> bool {
        self.coeffs.iter().all(MatR::is_poly)
    }

    pub fn poly_coeffs(&self) -> Option<Vec<MatP>> {
        self.coeffs.iter().map(MatR::to_poly).collect()
    }

    /// Polynomial coefficients with `deg F_j ≤ j` for all `j`.
    pub fn checked_poly_coeffs(&self) -> Result<Vec<MatP>> {
        let ps = self
            .poly_coeffs()
            .ok_or_else(|| Error::NotPolynomial(format!("operator {self} has rational coefficients")))?;
        for (j, f) in ps.iter().enumerate() {
            if let Some(d) = f.degree().filter(|&d| d > j) {
                return Err(Error::DegreeTooHigh { index: j, degree: d });
            }
        }
        Ok(ps)
    }

    fn check_size(&self, n: usize) -> Result<()> {
        if self.size != n {
            return Err(Error::SizeMismatch { expected: self.size, found: n });
        }
        Ok(())
    }

    pub fn apply(&self, p: &MatP) -> Result<MatR> {
        self.check_size(p.rows())?;
        let pr = p.to_ratfun();
        let mut acc = MatR::zeros(p.rows(), self.size);
        let mut dp = pr;
        for (j, f) in self.coeffs.iter().enumerate() {
            if j > 0 {
                dp = dp.derivative();
            }
            if dp.is_zero() {
                break;
            }
            if !f.is_zero() {
                acc = acc.add(&dp.mul(f));
            }
        }
        Ok(acc)
    }

    /// `P·D` for a polynomial operator, as a matrix polynomial.
    pub fn apply_poly(&self, p: &MatP) -> Result<MatP> {
        self.apply(p)?
            .to_poly()
            .ok_or_else(|| Error::NotPolynomial(format!("{self} applied to {p}")))
    }

    /// `A∘B` with `A` applied first.
    ///
    /// The coefficient of `∂^m` is `Σ_{i+l=m} Σ_{k≥l} C(k,l) F_i^{(k−l)} G_k`.
    pub fn compose(&self, o: &Self) -> Result<Self> {
        self.check_size(o.size)?;
        if self.is_zero() || o.is_zero() {
            return Ok(Self::zero(self.size));
        }
        let (s, t) = (self.coeffs.len(), o.coeffs.len());
        let mut out = vec![MatR::zeros(self.size, self.size); s + t - 1];
        for (i, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let mut derivs = vec![f.clone()];
            for _ in 1..t {
                let next = derivs.last().unwrap().derivative();
                derivs.push(next);
            }
            for (k, g) in o.coeffs.iter().enumerate() {
                if g.is_zero() {
                    continue;
                }
                for l in 0..=k {
                    let fd = &derivs[k - l];
                    if fd.is_zero() {
                        continue;
                    }
                    let term = fd.mul(g);
                    let b = binom(k, l);
                    out[i + l] = out[i + l].add(&term.map(|e| e.scale(&b)));
                }
            }
        }
        Self::new(self.size, out)
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.size, o.size, "operator sizes");
        let len = self.coeffs.len().max(o.coeffs.len());
        Self::new(self.size, (0..len).map(|j| self.coeff(j).add(&o.coeff(j))).collect()).expect("sizes")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Self { size: self.size, coeffs: self.coeffs.iter().map(MatR::neg).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::new(self.size, self.coeffs.iter().map(|m| m.map(|e| e.scale(c))).collect()).expect("sizes")
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.size), |acc, _| acc.compose(self).expect("sizes"))
    }

    /// `A∘B − B∘A`.
    pub fn commutator(&self, o: &Self) -> Result<Self> {
        Ok(self.compose(o)?.sub(&o.compose(self)?))
    }

    /// Formal adjoint: the involution extending conjugate transposition and
    /// sending `∂` to `−∂`.
    ///
    /// `(∂^J F)* = F*∘(−∂)^J`, whose standard form is
    /// `Σ_k ∂^k (−1)^J C(J,k) (F*)^{(J−k)}`.
    pub fn formal_adjoint(&self) -> Self {
        let n = self.size;
        let mut out = vec![MatR::zeros(n, n); self.coeffs.len()];
        for (j, f) in self.coeffs.iter().enumerate() {
            if f.is_zero() {
                continue;
            }
            let fs = f.conj_transpose();
            let sign = if j % 2 == 0 { C::from_int(1) } else { C::from_int(-1) };
            let mut d = fs;
            // d = (F*)^{(j-k)} as k runs downward from j
            for k in (0..=j).rev() {
                let c = &sign * &binom(j, k);
                out[k] = out[k].add(&d.map(|e| e.scale(&c)));
                d = d.derivative();
            }
        }
        Self::new(n, out).expect("sizes")
    }

    /// Leading-symbol map `L(ν) = Σ_j [ν]_j · (x^j coefficient of F_j)` as a
    /// matrix of polynomials in `ν`. For members of `D(W)` this is the
    /// eigenvalue `Λ_ν`.
    pub fn leading_symbol(&self) -> Result<MatP> {
        let ps = self.checked_poly_coeffs()?;
        let mut acc = MatP::zeros(self.size, self.size);
        for (j, f) in ps.iter().enumerate() {
            let top = f.coeff(j);
            if top.is_zero() {
                continue;
            }
            let ff = Poly::falling_factorial(j);
            acc = acc.add(&top.map(|c| ff.scale(c)));
        }
        Ok(acc)
    }

    /// Whether `deg(P·V) = deg P` for every matrix polynomial `P`, decided by
    /// `det L(n) ≠ 0` at every integer `n ≥ 0`.
    pub fn degree_preserving_test(&self) -> DegreePreserving {
        let Some(ps) = self.poly_coeffs() else {
            return DegreePreserving::DegreeTooHigh { index: 0 };
        };
        for (j, f) in ps.iter().enumerate() {
            if f.degree().is_some_and(|d| d > j) {
                return DegreePreserving::DegreeTooHigh { index: j };
            }
        }
        let det = self.leading_symbol().expect("checked").det();
        if det.is_zero() {
            return DegreePreserving::SingularAt { witness: 0 };
        }
        match det.nonneg_integer_roots().first() {
            Some(&w) => DegreePreserving::SingularAt { witness: w },
            None => DegreePreserving::Yes,
        }
    }

    /// Entrywise complex conjugate of every coefficient (not the adjoint).
    pub fn conj_coeffs(&self) -> Self {
        Self { size: self.size, coeffs: self.coeffs.iter().map(|m| m.map(RatFun::conj)).collect() }
    }
}

impl fmt::Display for MatDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "{c}")?,
                1 => write!(f, "∂{c}")?,
                _ => write!(f, "∂^{j}{c}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MatDiffOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
