//! Dense univariate polynomials over ℚ(i).
//!
//! Coefficients are stored lowest degree first. The representation is
//! canonical: the coefficient vector is empty for the zero polynomial and the
//! last stored coefficient is nonzero otherwise, so derived equality is exact
//! polynomial equality.
//!
//! The same type is used for polynomials in `x` and for eigenvalue
//! polynomials in the formal index `ν`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::scalar::{GaussianRational, Q};
use crate::error::{Error, Result};

type C = GaussianRational;

/// Sturm sequence `p, p', −rem(p, p'), …` of a real square-free polynomial.
fn sturm_chain(p: &Poly) -> Vec<Poly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().unwrap().is_constant() {
        let n = chain.len();
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]).expect("nonzero divisor");
        if r.is_zero() {
            break;
        }
        chain.push(-r);
    }
    chain
}

/// Sign variations of the chain at the integer `x`, zeros skipped.
fn sign_changes(chain: &[Poly], x: &BigInt) -> usize {
    let x = Q::from_integer(x.clone());
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval_q(&x).re)
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<C>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::new(vec![c])
    }

    pub fn from_rational(c: Q) -> Self {
        Self::constant(C::real(c))
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(C::from_int(n))
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::monomial(C::one(), 1)
    }

    pub fn monomial(c: C, k: usize) -> Self {
        let mut v = vec![C::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn from_ints(cs: &[i64]) -> Self {
        Self::new(cs.iter().map(|&c| C::from_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(C::is_real)
    }

    pub fn conj(&self) -> Self {
        Self { coeffs: self.coeffs.iter().map(C::conj).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn scale_q(&self, c: &Q) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.scale(c)).collect())
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![C::zero(); k];
        v.extend(self.coeffs.iter().cloned());
        Self { coeffs: v }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.scale(&Q::from_integer(BigInt::from(k))))
                .collect(),
        )
    }

    pub fn nth_derivative(&self, n: usize) -> Self {
        if n >= self.coeffs.len() {
            return Self::zero();
        }
        // d^n/dx^n x^k = k!/(k-n)! x^(k-n)
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(n)
                .map(|(k, c)| {
                    let f: BigInt = ((k - n + 1)..=k).map(BigInt::from).product();
                    c.scale(&Q::from_integer(f))
                })
                .collect(),
        )
    }

    pub fn eval(&self, x: &C) -> C {
        let mut acc = C::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn eval_q(&self, x: &Q) -> C {
        self.eval(&C::real(x.clone()))
    }

    /// `p(q(x))`.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Euclidean division. Errors when dividing by the zero polynomial.
    pub fn div_rem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.leading().unwrap().inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                rem[k + j] -= &(&c * dc);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    /// Exact division; errors if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Result<Poly> {
        let (qq, r) = self.div_rem(d)?;
        if !r.is_zero() {
            return Err(Error::Verification(format!("{self} is not divisible by {d}")));
        }
        Ok(qq)
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.monic(), other.monic());
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_zero() {
            if b.is_constant() {
                return Poly::one();
            }
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// Order of vanishing at the point `c` (`None` for the zero polynomial).
    pub fn order_at(&self, c: &Q) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let lin = Poly::new(vec![C::real(-c.clone()), C::one()]);
        let mut p = self.clone();
        let mut k = 0;
        loop {
            let (qq, r) = p.div_rem(&lin).expect("nonzero divisor");
            if !r.is_zero() {
                return Some(k);
            }
            p = qq;
            k += 1;
        }
    }

    /// Real and imaginary parts as polynomials with rational coefficients.
    pub fn split_re_im(&self) -> (Poly, Poly) {
        (
            Poly::new(self.coeffs.iter().map(|c| C::real(c.re.clone())).collect()),
            Poly::new(self.coeffs.iter().map(|c| C::real(c.im.clone())).collect()),
        )
    }

    /// Falling factorial `[ν]_i = ν(ν-1)…(ν-i+1)` as a polynomial in `ν`.
    pub fn falling_factorial(i: usize) -> Poly {
        (0..i).fold(Poly::one(), |acc, k| &acc * &Poly::from_ints(&[-(k as i64), 1]))
    }

    /// `[n]_i` for a concrete integer `n`.
    pub fn falling_factorial_at(n: usize, i: usize) -> BigInt {
        if i > n {
            return BigInt::zero();
        }
        ((n - i + 1)..=n).map(BigInt::from).product()
    }

    /// Nonnegative integer roots in increasing order (empty for the zero
    /// polynomial, which has every point as a root).
    ///
    /// Integer roots of a Gaussian-rational polynomial are roots of the gcd of
    /// its real and imaginary parts. Positive roots are isolated exactly by
    /// bisecting `(0, B]`, with `B` the Cauchy bound, using Sturm sequences of
    /// the square-free part; each unit interval that still holds a root is
    /// tested at its integer endpoint.
    pub fn nonneg_integer_roots(&self) -> Vec<usize> {
        if self.is_zero() {
            return Vec::new();
        }
        let (re, im) = self.split_re_im();
        let g = if im.is_zero() { re } else if re.is_zero() { im } else { re.gcd(&im) };
        if g.is_constant() {
            return Vec::new();
        }
        let shift = g.coeffs.iter().position(|c| !c.is_zero()).expect("nonzero polynomial");
        let h = Poly::new(g.coeffs[shift..].to_vec());
        let mut roots = Vec::new();
        if shift > 0 {
            roots.push(0);
        }
        if h.is_constant() {
            return roots;
        }
        let sf = h.div_exact(&h.gcd(&h.derivative())).expect("gcd divides");
        let chain = sturm_chain(&sf);
        let lead = h.leading().expect("nonconstant").re.abs();
        let max_ratio = h.coeffs[..h.coeffs.len() - 1].iter().map(|c| c.re.abs() / &lead).max().expect("nonconstant");
        let bound = max_ratio.ceil().to_integer() + BigInt::one();
        let mut stack = vec![(BigInt::zero(), bound)];
        while let Some((lo, hi)) = stack.pop() {
            if sign_changes(&chain, &lo) <= sign_changes(&chain, &hi) {
                continue;
            }
            if &hi - &lo == BigInt::one() {
                if h.eval_q(&Q::from_integer(hi.clone())).is_zero() {
                    roots.push(usize::try_from(&hi).expect("root fits in usize"));
                }
                continue;
            }
            let mid: BigInt = (&lo + &hi) / 2;
            stack.push((mid.clone(), hi));
            stack.push((lo, mid));
        }
        roots
    }

    /// Formats the polynomial using `var` as the indeterminate.
    pub fn display_in(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !out.is_empty() {
                out.push_str(" + ");
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            if k > 0 && c.is_one() {
                out.push_str(&mono);
            } else if k > 0 {
                out.push_str(&format!("{c}*{mono}"));
            } else {
                out.push_str(&c.to_string());
            }
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_in("x"))
    }
}

impl<'a> Add<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let (long, short) = if self.coeffs.len() >= o.coeffs.len() { (self, o) } else { (o, self) };
        let mut v = long.coeffs.clone();
        for (a, b) in v.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        Poly::new(v)
    }
}

impl<'a> Sub<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let mut v = self.coeffs.clone();
        v.resize(n, C::zero());
        for (a, b) in v.iter_mut().zip(&o.coeffs) {
            *a -= b;
        }
        Poly::new(v)
    }
}

impl<'a> Mul<&'a Poly> for &'a Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![C::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += &(a * b);
                }
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly { (&self).$m(&o) }
        }
        impl<'a> $tr<&'a Poly> for Poly {
            type Output = Poly;
            fn $m(self, o: &Poly) -> Poly { (&self).$m(o) }
        }
        impl<'a> $tr<Poly> for &'a Poly {
            type Output = Poly;
            fn $m(self, o: Poly) -> Poly { self.$m(&o) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::scalar::{q, qi};

    fn p(cs: &[(i64, i64)]) -> Poly {
        Poly::new(cs.iter().map(|&(n, d)| C::real(q(n, d))).collect())
    }

    #[test]
    fn integer_roots() {
        // (ν-3)(ν+2)ν(2ν-1)
        let p = &(&Poly::from_ints(&[-3, 1]) * &Poly::from_ints(&[2, 1])) * &Poly::from_ints(&[0, -1, 2]);
        assert_eq!(p.nonneg_integer_roots(), vec![0, 3]);
        let p = Poly::from_ints(&[-12, 1]).scale(&C::i());
        assert_eq!(p.nonneg_integer_roots(), vec![12]);
        assert!(Poly::from_ints(&[1, 0, 1]).nonneg_integer_roots().is_empty());
        assert!(Poly::from_int(5).nonneg_integer_roots().is_empty());
    }

    #[test]
    fn integer_roots_far_out_and_repeated() {
        let big = &Poly::from_ints(&[-1_000_003, 1]) * &Poly::from_ints(&[-1_000_003, 1]);
        let p = &(&big * &Poly::from_ints(&[-5, 1])) * &Poly::from_ints(&[1, 0, 1]);
        assert_eq!(p.nonneg_integer_roots(), vec![5, 1_000_003]);
        // roots 1, 3/2, 2 crowd one unit interval
        let p = &(&Poly::from_ints(&[-1, 1]) * &Poly::from_ints(&[-3, 2])) * &Poly::from_ints(&[-2, 1]);
        assert_eq!(p.nonneg_integer_roots(), vec![1, 2]);
        let p = Poly::from_ints(&[-7, 2]).scale(&C::real(q(1, 3)));
        assert!(p.nonneg_integer_roots().is_empty());
    }

    #[test]
    fn canonical_form_drops_trailing_zeros() {
        let a = Poly::from_ints(&[1, 2, 0, 0]);
        assert_eq!(a.degree(), Some(1));
        assert_eq!(Poly::from_ints(&[0, 0]).degree(), None);
        assert!(Poly::from_ints(&[0]).is_zero());
    }

    #[test]
    fn derivative_of_hermite_two() {
        // d/dx (x^2 - 1/2) = 2x
        let h2 = p(&[(-1, 2), (0, 1), (1, 1)]);
        assert_eq!(h2.derivative(), Poly::from_ints(&[0, 2]));
        assert_eq!(h2.nth_derivative(2), Poly::from_int(2));
        assert_eq!(h2.nth_derivative(3), Poly::zero());
    }

    #[test]
    fn gcd_is_monic() {
        let a = Poly::from_ints(&[-1, 0, 1]);
        let b = Poly::from_ints(&[-1, 1]);
        assert_eq!(a.gcd(&b), b);
        let c = Poly::from_ints(&[-2, 2]);
        assert_eq!(a.gcd(&c), b);
        assert_eq!(Poly::from_ints(&[1, 1]).gcd(&Poly::from_ints(&[2, 1])), Poly::one());
    }

    #[test]
    fn evaluate_laguerre_weight_entry() {
        // x(1 + a^2 x) with a = 1 at x = 2
        let e = Poly::from_ints(&[0, 1, 1]);
        assert_eq!(e.eval_q(&qi(2)), C::from_int(6));
    }

    #[test]
    fn division() {
        let a = Poly::from_ints(&[-1, 0, 0, 1]);
        let (qq, r) = a.div_rem(&Poly::from_ints(&[-1, 1])).unwrap();
        assert_eq!(qq, Poly::from_ints(&[1, 1, 1]));
        assert!(r.is_zero());
        assert!(a.div_rem(&Poly::zero()).is_err());
    }

    #[test]
    fn orders_and_falling_factorials() {
        let a = Poly::from_ints(&[0, 0, 3, 1]);
        assert_eq!(a.order_at(&qi(0)), Some(2));
        assert_eq!(a.order_at(&qi(-3)), Some(1));
        assert_eq!(Poly::falling_factorial(3), Poly::from_ints(&[0, 2, -3, 1]));
        assert_eq!(Poly::falling_factorial_at(5, 2), BigInt::from(20));
        assert_eq!(Poly::falling_factorial_at(1, 2), BigInt::from(0));
    }
}
