//! Dense matrices over the exact rings of this crate.

use std::fmt;
use std::ops::{Index, IndexMut};

use super::poly::Poly;
use super::ratfun::RatFun;
use super::scalar::{GaussianRational, Q};
use crate::error::{Error, Result};

/// Minimal ring interface shared by scalars, polynomials and rational functions.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    /// Entrywise complex conjugation of coefficients (`x` is real).
    fn conj(&self) -> Self;
}

/// A ring in which nonzero elements are invertible.
pub trait Field: Ring {
    fn inverse(&self) -> Result<Self>;
}

macro_rules! impl_ring {
    ($t:ty) => {
        impl Ring for $t {
            fn zero() -> Self {
                <$t>::zero()
            }
            fn one() -> Self {
                <$t>::one()
            }
            fn is_zero(&self) -> bool {
                <$t>::is_zero(self)
            }
            fn plus(&self, o: &Self) -> Self {
                self + o
            }
            fn minus(&self, o: &Self) -> Self {
                self - o
            }
            fn times(&self, o: &Self) -> Self {
                self * o
            }
            fn negated(&self) -> Self {
                -self
            }
            fn conj(&self) -> Self {
                <$t>::conj(self)
            }
        }
    };
}

impl_ring!(Poly);
impl_ring!(RatFun);

impl Ring for GaussianRational {
    fn zero() -> Self {
        <Self as num_traits::Zero>::zero()
    }
    fn one() -> Self {
        <Self as num_traits::One>::one()
    }
    fn is_zero(&self) -> bool {
        <Self as num_traits::Zero>::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn conj(&self) -> Self {
        GaussianRational::conj(self)
    }
}

impl Field for GaussianRational {
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
}

impl Field for RatFun {
    fn inverse(&self) -> Result<Self> {
        self.inv()
    }
}

/// Row-major dense matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type MatC = Mat<GaussianRational>;
pub type MatP = Mat<Poly>;
pub type MatR = Mat<RatFun>;

impl<T: Ring> Mat<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        Self { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    pub fn scalar(n: usize, c: T) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { c.clone() } else { T::zero() })
    }

    pub fn diag(entries: Vec<T>) -> Self {
        let n = entries.len();
        let mut m = Self::zeros(n, n);
        for (i, e) in entries.into_iter().enumerate() {
            m[(i, i)] = e;
        }
        m
    }

    /// Matrix unit `E_{ij}` of size `n`.
    pub fn unit(n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(n, n);
        m[(i, j)] = T::one();
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> Mat<U> {
        Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<U: Ring>(&self, f: impl FnMut(&T) -> Result<U>) -> Result<Mat<U>> {
        Ok(Mat { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect::<Result<_>>()? })
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if self.rows != o.rows || self.cols != o.cols {
            return Err(Error::SizeMismatch { expected: self.rows * self.cols, found: o.rows * o.cols });
        }
        Ok(())
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect(),
        })
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(Mat {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| a.minus(b)).collect(),
        })
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::SizeMismatch { expected: self.cols, found: o.rows });
        }
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = &o.data[k * o.cols + j];
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * o.cols + j;
                    out.data[idx] = out.data[idx].plus(&a.times(b));
                }
            }
        }
        Ok(out)
    }

    /// Panicking convenience wrappers for code that has already checked shapes.
    pub fn add(&self, o: &Self) -> Self {
        self.try_add(o).expect("matrix shapes")
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.try_sub(o).expect("matrix shapes")
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.try_mul(o).expect("matrix shapes")
    }

    pub fn neg(&self) -> Self {
        self.map(Ring::negated)
    }

    /// Multiplies every entry by `c` (on the left).
    pub fn scale(&self, c: &T) -> Self {
        self.map(|a| c.times(a))
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    /// Hermitian conjugate: conjugate entries, then transpose.
    pub fn conj_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].conj())
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    /// Commutator `AB - BA`.
    pub fn commutator(&self, o: &Self) -> Self {
        self.mul(o).sub(&o.mul(self))
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::identity(self.rows), |acc, _| acc.mul(self))
    }

    fn minor(&self, skip_r: usize, skip_c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != skip_r) {
            for j in (0..self.cols).filter(|&j| j != skip_c) {
                data.push(self[(i, j)].clone());
            }
        }
        Self { rows: self.rows - 1, cols: self.cols - 1, data }
    }

    /// Determinant by cofactor expansion; matrices here are at most 3×3 or 4×4.
    pub fn det(&self) -> T {
        assert!(self.is_square(), "determinant of a non-square matrix");
        match self.rows {
            0 => T::one(),
            1 => self.data[0].clone(),
            2 => self.data[0].times(&self.data[3]).minus(&self.data[1].times(&self.data[2])),
            n => {
                let mut acc = T::zero();
                for j in 0..n {
                    let a = &self[(0, j)];
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.times(&self.minor(0, j).det());
                    acc = if j % 2 == 0 { acc.plus(&term) } else { acc.minus(&term) };
                }
                acc
            }
        }
    }

    /// Classical adjugate, `M·adj(M) = det(M)·I`.
    pub fn adjugate(&self) -> Self {
        let n = self.rows;
        if n == 1 {
            return Self::identity(1);
        }
        Self::from_fn(n, n, |i, j| {
            let c = self.minor(j, i).det();
            if (i + j) % 2 == 0 {
                c
            } else {
                c.negated()
            }
        })
    }

    /// Leading principal minors `det(M[..k, ..k])`, `k = 1..=n`.
    pub fn leading_minors(&self) -> Vec<T> {
        (1..=self.rows)
            .map(|k| Self::from_fn(k, k, |i, j| self[(i, j)].clone()).det())
            .collect()
    }
}

impl<T: Field> Mat<T> {
    /// Inverse via adjugate and determinant.
    pub fn inverse(&self) -> Result<Self> {
        let det = self.det();
        if det.is_zero() {
            return Err(Error::Singular { det: det.to_string() });
        }
        let inv = det.inverse()?;
        Ok(self.adjugate().map(|a| a.times(&inv)))
    }
}

impl<T> Index<(usize, usize)> for Mat<T> {
    type Output = T;
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> IndexMut<(usize, usize)> for Mat<T> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

impl<T: fmt::Display> fmt::Display for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

impl<T: fmt::Display> fmt::Debug for Mat<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl MatC {
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&c| GaussianRational::from_int(c)).collect()).collect())
    }

    pub fn to_poly(&self) -> MatP {
        self.map(|c| Poly::constant(c.clone()))
    }

    pub fn to_ratfun(&self) -> MatR {
        self.map(|c| RatFun::constant(c.clone()))
    }

    pub fn scale_c(&self, c: &GaussianRational) -> Self {
        self.map(|a| c * a)
    }
}

impl MatP {
    /// Largest entry degree, `None` for the zero matrix.
    pub fn degree(&self) -> Option<usize> {
        self.data.iter().filter_map(Poly::degree).max()
    }

    /// Matrix coefficient of `x^k`.
    pub fn coeff(&self, k: usize) -> MatC {
        self.map(|p| p.coeff(k))
    }

    /// All coefficient matrices `[M_0, …, M_d]`.
    pub fn coeff_mats(&self) -> Vec<MatC> {
        match self.degree() {
            None => Vec::new(),
            Some(d) => (0..=d).map(|k| self.coeff(k)).collect(),
        }
    }

    /// `Σ_k M_k x^k`.
    pub fn from_coeff_mats(n_rows: usize, n_cols: usize, mats: &[MatC]) -> Self {
        Self::from_fn(n_rows, n_cols, |i, j| Poly::new(mats.iter().map(|m| m[(i, j)].clone()).collect()))
    }

    pub fn derivative(&self) -> Self {
        self.map(Poly::derivative)
    }

    pub fn nth_derivative(&self, k: usize) -> Self {
        self.map(|p| p.nth_derivative(k))
    }

    pub fn to_ratfun(&self) -> MatR {
        self.map(|p| RatFun::from_poly(p.clone()))
    }

    pub fn eval_q(&self, x: &Q) -> MatC {
        self.map(|p| p.eval_q(x))
    }

    pub fn scale_c(&self, c: &GaussianRational) -> Self {
        self.map(|p| p.scale(c))
    }

    /// Left multiplication by a constant matrix.
    pub fn lmul_c(&self, m: &MatC) -> Self {
        m.to_poly().mul(self)
    }

    /// Monic in the matrix sense: degree `n` with identity leading coefficient.
    pub fn is_monic(&self) -> bool {
        self.degree().is_some_and(|d| self.coeff(d) == MatC::identity(self.rows))
    }
}

impl MatR {
    pub fn is_poly(&self) -> bool {
        self.data.iter().all(RatFun::is_poly)
    }

    pub fn to_poly(&self) -> Option<MatP> {
        if !self.is_poly() {
            return None;
        }
        Some(self.map(|r| r.num().clone()))
    }

    pub fn derivative(&self) -> Self {
        self.map(RatFun::derivative)
    }
}
