//! Monic matrix orthogonal polynomials and three-term recurrences.

use crate::algebra::{MatC, MatP, Poly};
use crate::error::{Error, Result};
use crate::weights::{BlockMoments, MatrixWeight};

/// Monic orthogonal polynomials `P_0..P_K` of a weight and their squared norms.
#[derive(Clone, Debug)]
pub struct MOPTable {
    weight: MatrixWeight,
    polys: Vec<MatP>,
    norms: Vec<MatC>,
    moments: BlockMoments,
}

/// `x^n I` of size `n_size`.
pub fn monomial(size: usize, n: usize) -> MatP {
    MatP::scalar(size, Poly::monomial(num_traits::One::one(), n))
}

/// Builds `P_0..P_K` by block Gram–Schmidt on `x^n I`:
/// `P_n = x^n I − Σ_{k<n} ⟨x^n I, P_k⟩ ‖P_k‖⁻² P_k`.
pub fn monic_sequence(w: &MatrixWeight, k_max: usize) -> Result<MOPTable> {
    let n = w.size();
    // room for ⟨x P_K, P_K⟩ and ⟨x^K, P_K⟩ plus one extra degree
    let moments = w.block_moments(2 * k_max + 2);
    let mut polys: Vec<MatP> = Vec::with_capacity(k_max + 1);
    let mut norms: Vec<MatC> = Vec::with_capacity(k_max + 1);
    let mut inv_norms: Vec<MatC> = Vec::with_capacity(k_max + 1);
    for deg in 0..=k_max {
        let xn = monomial(n, deg);
        let mut p = xn.clone();
        for (pk, ik) in polys.iter().zip(&inv_norms) {
            let c = moments.inner(&xn, pk).mul(ik);
            if !c.is_zero() {
                p = p.sub(&pk.lmul_c(&c));
            }
        }
        let norm = moments.inner(&p, &p);
        let inv = norm.inverse().map_err(|_| {
            Error::InvalidWeight(format!("singular moment system at degree {deg}: ‖P_{deg}‖² = {norm}"))
        })?;
        polys.push(p);
        norms.push(norm);
        inv_norms.push(inv);
    }
    Ok(MOPTable { weight: w.clone(), polys, norms, moments })
}

impl MOPTable {
    pub fn weight(&self) -> &MatrixWeight {
        &self.weight
    }

    pub fn max_degree(&self) -> usize {
        self.polys.len() - 1
    }

    pub fn polys(&self) -> &[MatP] {
        &self.polys
    }

    pub fn poly(&self, n: usize) -> Result<&MatP> {
        self.polys.get(n).ok_or(Error::OutOfRange { index: n, max: self.max_degree() })
    }

    pub fn norms(&self) -> &[MatC] {
        &self.norms
    }

    pub fn norm(&self, n: usize) -> Result<&MatC> {
        self.norms.get(n).ok_or(Error::OutOfRange { index: n, max: self.max_degree() })
    }

    /// Inner product using the cached moments (degrees up to `2K + 2` in total).
    pub fn inner(&self, p: &MatP, q: &MatP) -> Result<MatC> {
        let need = p.degree().unwrap_or(0) + q.degree().unwrap_or(0);
        if need < self.moments.len() {
            Ok(self.moments.inner(p, q))
        } else {
            self.weight.inner_product(p, q)
        }
    }

    /// `(B_n, C_n)` in `x P_n = P_{n+1} + B_n P_n + C_n P_{n−1}`, with the
    /// identity re-verified exactly. `C_0 = 0`.
    pub fn recurrence_coeffs(&self, n: usize) -> Result<(MatC, MatC)> {
        if n + 1 > self.max_degree() {
            return Err(Error::OutOfRange { index: n + 1, max: self.max_degree() });
        }
        let size = self.weight.size();
        let xp = self.polys[n].mul(&MatP::scalar(size, Poly::x()));
        let b = self.inner(&xp, &self.polys[n])?.mul(&self.norms[n].inverse()?);
        let c = if n == 0 {
            MatC::zeros(size, size)
        } else {
            self.inner(&xp, &self.polys[n - 1])?.mul(&self.norms[n - 1].inverse()?)
        };
        let mut rhs = self.polys[n + 1].add(&self.polys[n].lmul_c(&b));
        if n > 0 {
            rhs = rhs.add(&self.polys[n - 1].lmul_c(&c));
        }
        if rhs != xp {
            return Err(Error::Verification(format!("three-term identity fails at n = {n}")));
        }
        Ok((b, c))
    }

    /// Checks `⟨P_n, P_m⟩ = 0` for all `n ≠ m`.
    pub fn verify_orthogonality(&self) -> Result<()> {
        for i in 0..self.polys.len() {
            for j in 0..i {
                if !self.inner(&self.polys[i], &self.polys[j])?.is_zero() {
                    return Err(Error::NotOrthogonal(format!("P_{i} and P_{j}")));
                }
            }
        }
        Ok(())
    }
}

/// Coefficients of `x Q_n = A_n Q_{n+1} + B_n Q_n + C_n Q_{n−1}` for an
/// orthogonal sequence with nonsingular leading coefficients (`C_0 = 0`).
/// The coefficients are projections of `x Q_n`, and the identity is
/// re-verified exactly.
pub fn general_recurrence(seq: &[MatP], w: &MatrixWeight, n: usize) -> Result<(MatC, MatC, MatC)> {
    if n + 1 >= seq.len() {
        return Err(Error::OutOfRange { index: n + 1, max: seq.len().saturating_sub(1) });
    }
    let size = w.size();
    let lo = n.saturating_sub(1);
    for i in lo..=n + 1 {
        for j in lo..i {
            if !w.inner_product(&seq[i], &seq[j])?.is_zero() {
                return Err(Error::NotOrthogonal(format!("Q_{i} and Q_{j}")));
            }
        }
    }
    let xq = seq[n].mul(&MatP::scalar(size, Poly::x()));
    let proj = |k: usize| -> Result<MatC> {
        let norm = w.inner_product(&seq[k], &seq[k])?;
        Ok(w.inner_product(&xq, &seq[k])?.mul(&norm.inverse()?))
    };
    let a = proj(n + 1)?;
    let b = proj(n)?;
    let c = if n == 0 { MatC::zeros(size, size) } else { proj(n - 1)? };
    let mut rhs = seq[n + 1].lmul_c(&a).add(&seq[n].lmul_c(&b));
    if n > 0 {
        rhs = rhs.add(&seq[n - 1].lmul_c(&c));
    }
    if rhs != xq {
        return Err(Error::Verification(format!("recurrence identity fails at n = {n}")));
    }
    Ok((a, b, c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi, GaussianRational};
    use crate::weights::Kernel;

    fn scalar(p: &MatP) -> Poly {
        p[(0, 0)].clone()
    }

    #[test]
    fn hermite_scalar() {
        let w = MatrixWeight::scalar(Kernel::Hermite, 1).unwrap();
        let t = monic_sequence(&w, 8).unwrap();
        assert_eq!(t.poly(0).unwrap(), &MatP::identity(1));
        assert_eq!(scalar(t.poly(2).unwrap()), Poly::new(vec![GaussianRational::real(q(-1, 2)), 0.into(), 1.into()]));
        let (_, c1) = t.recurrence_coeffs(1).unwrap();
        assert_eq!(c1, MatC::scalar(1, GaussianRational::real(q(1, 2))));
        // classical recursion H_{n+1} = x H_n − (n/2) H_{n−1}
        for n in 1..8 {
            let rhs = &(&Poly::x() * &scalar(&t.polys()[n]))
                - &scalar(&t.polys()[n - 1]).scale_q(&q(n as i64, 2));
            assert_eq!(scalar(&t.polys()[n + 1]), rhs);
        }
        t.verify_orthogonality().unwrap();
    }

    #[test]
    fn laguerre_scalar() {
        let w = MatrixWeight::scalar(Kernel::laguerre(q(1, 2)), 1).unwrap();
        let t = monic_sequence(&w, 3).unwrap();
        assert_eq!(scalar(t.poly(1).unwrap()), Poly::new(vec![GaussianRational::real(q(-3, 2)), 1.into()]));
        let (b0, _) = t.recurrence_coeffs(0).unwrap();
        assert_eq!(b0, MatC::scalar(1, GaussianRational::real(q(3, 2))));
    }

    #[test]
    fn even_weight_has_zero_b() {
        let w = MatrixWeight::scalar(Kernel::Hermite, 2).unwrap();
        let t = monic_sequence(&w, 9).unwrap();
        for n in 0..=8 {
            let (b, _) = t.recurrence_coeffs(n).unwrap();
            assert!(b.is_zero());
        }
        assert!(t.recurrence_coeffs(9).is_err());
    }

    #[test]
    fn monic_input_gives_identity_a() {
        let w = MatrixWeight::scalar(Kernel::laguerre(qi(0)), 2).unwrap();
        let t = monic_sequence(&w, 4).unwrap();
        for n in 0..3 {
            let (a, b, c) = general_recurrence(t.polys(), &w, n).unwrap();
            assert_eq!(a, MatC::identity(2));
            assert_eq!((b, c), t.recurrence_coeffs(n).unwrap());
        }
    }

    #[test]
    fn non_orthogonal_input_rejected() {
        let w = MatrixWeight::scalar(Kernel::Hermite, 1).unwrap();
        let seq = vec![MatP::identity(1), monomial(1, 2), monomial(1, 3)];
        assert!(matches!(general_recurrence(&seq, &w, 1), Err(Error::NotOrthogonal(_))));
    }
}
