//! Darboux transformations between matrix weights.
//!
//! A certificate "from `W` to `W̃`" stores a transformer `V` with
//! `P_n·V = A_n P̃_n`, where `P_n` and `P̃_n` are the monic sequences of the
//! source `W` and the target `W̃`. The companion is `N = W̃ V* W⁻¹`, and
//! `D = V∘N` lies in `D(W)`. Conjugation runs in two directions:
//!
//! * [`Direction::Down`]: `A ∈ D(W) ↦ N∘A∘V ∈ D(W̃)`;
//! * [`Direction::Up`]: `A ∈ D(W̃) ↦ V∘A∘N ∈ D(W)`.
//!
//! Here `∘` is composition in application order (left factor acts first).

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{MatC, MatP};
use crate::diffop::{DegreePreserving, MatDiffOp};
use crate::dw::{eigenvalue_poly, membership_in};
use crate::error::{Error, Result};
use crate::mop::{monic_sequence, monomial, MOPTable};
use crate::weights::{boundary_check, formal_symmetry_test, twisted_adjoint, MatrixWeight};

/// Degree caps for the finite checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Monomial degree bound for adjointness and proportionality checks.
    pub degree: usize,
    /// Largest `n` in membership checks.
    pub n_check: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Self { degree: 12, n_check: 12 }
    }
}

/// Outcome of every check in a certificate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub companion_polynomial: bool,
    pub v_degree_preserving: bool,
    pub n_degree_preserving: bool,
    pub d_in_dw: bool,
    pub adjointness_verified: bool,
    pub boundary_verified: bool,
    pub eigenvalues_nonsingular: bool,
    pub proportional_verified: bool,
    pub v_leading_nonsingular: bool,
}

impl Flags {
    pub fn all(&self) -> bool {
        self.named().iter().all(|(_, v)| *v)
    }

    pub fn named(&self) -> [(&'static str, bool); 9] {
        [
            ("companion_polynomial", self.companion_polynomial),
            ("v_degree_preserving", self.v_degree_preserving),
            ("n_degree_preserving", self.n_degree_preserving),
            ("d_in_dw", self.d_in_dw),
            ("adjointness_verified", self.adjointness_verified),
            ("boundary_verified", self.boundary_verified),
            ("eigenvalues_nonsingular", self.eigenvalues_nonsingular),
            ("proportional_verified", self.proportional_verified),
            ("v_leading_nonsingular", self.v_leading_nonsingular),
        ]
    }
}

/// Audited record of a (possibly strong) Darboux transformation.
#[derive(Clone, Debug)]
pub struct DarbouxCertificate {
    pub source: MatrixWeight,
    pub target: MatrixWeight,
    pub v: MatDiffOp,
    pub n: Option<MatDiffOp>,
    pub flags: Flags,
    pub caps: Caps,
    /// Human-readable reasons for every failed flag.
    pub diagnostics: Vec<String>,
    /// `A_n` with `P_n·V = A_n P̃_n`, for `n ≤ caps.degree` (when computed).
    pub leading: Vec<MatC>,
}

impl DarbouxCertificate {
    pub fn is_strong(&self) -> bool {
        self.flags.all()
    }

    /// Degree-preserving factors, `D ∈ D(W)`, and proportional sequences.
    pub fn is_plain(&self) -> bool {
        let f = &self.flags;
        f.v_degree_preserving && f.n_degree_preserving && f.d_in_dw && f.proportional_verified
    }

    pub fn companion(&self) -> Result<&MatDiffOp> {
        self.n.as_ref().ok_or_else(|| Error::Verification("certificate has no companion operator".into()))
    }

    /// `D = V∘N ∈ D(W)`.
    pub fn d(&self) -> Result<MatDiffOp> {
        self.v.compose(self.companion()?)
    }

    /// `D̃ = N∘V ∈ D(W̃)`.
    pub fn d_tilde(&self) -> Result<MatDiffOp> {
        self.companion()?.compose(&self.v)
    }
}

/// `N = W̃ V* W⁻¹`, accepted only with polynomial coefficients of
/// degree-preserving shape (`deg N_j ≤ j`).
pub fn companion_operator(v: &MatDiffOp, w: &MatrixWeight, w_tilde: &MatrixWeight) -> Result<MatDiffOp> {
    let n = twisted_adjoint(v, w_tilde, w)?;
    for (j, f) in n.coeffs().iter().enumerate() {
        for (idx, e) in f.entries().iter().enumerate() {
            let bad = match e.as_poly() {
                None => true,
                Some(p) => p.degree().is_some_and(|d| d > j),
            };
            if bad {
                let (r, c) = (idx / f.cols(), idx % f.cols());
                return Err(Error::NotPolynomial(format!(
                    "not a strong candidate: coefficient of ∂^{j} entry ({r},{c}) is {e}"
                )));
            }
        }
    }
    Ok(n)
}

fn dp_flag(name: &str, op: &MatDiffOp, diags: &mut Vec<String>) -> bool {
    match op.degree_preserving_test() {
        DegreePreserving::Yes => true,
        DegreePreserving::DegreeTooHigh { index } => {
            diags.push(format!("{name}: coefficient of ∂^{index} has degree above {index}"));
            false
        }
        DegreePreserving::SingularAt { witness } => {
            diags.push(format!("{name}: leading symbol singular at n = {witness}"));
            false
        }
    }
}

/// Runs every check of a strong Darboux transformation from `w` to `w_tilde`
/// with transformer `v`. Failures are recorded, not raised.
pub fn verify_strong(v: &MatDiffOp, w: &MatrixWeight, w_tilde: &MatrixWeight, caps: Caps) -> Result<DarbouxCertificate> {
    if v.size() != w.size() || w.size() != w_tilde.size() {
        return Err(Error::SizeMismatch { expected: w.size(), found: v.size().max(w_tilde.size()) });
    }
    let mut diags = Vec::new();
    let mut flags = Flags::default();
    let table_len = caps.degree.max(caps.n_check);
    let src = monic_sequence(w, table_len)?;
    let tgt = monic_sequence(w_tilde, table_len)?;

    flags.v_degree_preserving = dp_flag("V", v, &mut diags);
    flags.v_leading_nonsingular = match v.leading_coeff() {
        Some(lc) if !lc.det().is_zero() => true,
        _ => {
            diags.push("V: leading coefficient is singular".into());
            false
        }
    };

    let n = match companion_operator(v, w, w_tilde) {
        Ok(n) => {
            flags.companion_polynomial = true;
            Some(n)
        }
        Err(e) => {
            diags.push(format!("companion: {e}"));
            None
        }
    };

    flags.boundary_verified = match boundary_check(v, w_tilde) {
        Ok(true) => true,
        Ok(false) => {
            diags.push("boundary terms of ⟨P·V, Q⟩ do not vanish at a finite endpoint".into());
            false
        }
        Err(e) => {
            diags.push(format!("boundary: {e}"));
            false
        }
    };

    let mut leading = Vec::new();
    flags.proportional_verified = match proportionality(v, &src, &tgt, caps.degree) {
        Ok(a) => {
            leading = a;
            true
        }
        Err(e) => {
            diags.push(format!("proportionality: {e}"));
            false
        }
    };

    if let Some(n_op) = &n {
        flags.n_degree_preserving = dp_flag("N", n_op, &mut diags);
        let d = v.compose(n_op)?;
        flags.d_in_dw = membership_in(&d, &src, caps.n_check)?;
        if !flags.d_in_dw {
            diags.push(format!("D = V∘N is not in D(W) (checked to n = {})", caps.n_check));
        }
        flags.eigenvalues_nonsingular = match eigenvalue_poly(&d) {
            Ok(l) => {
                let det = l.det();
                let roots = det.nonneg_integer_roots();
                if det.is_zero() || !roots.is_empty() {
                    diags.push(format!("det Λ_n(D) vanishes at n = {}", roots.first().copied().unwrap_or(0)));
                    false
                } else {
                    true
                }
            }
            Err(e) => {
                diags.push(format!("eigenvalue: {e}"));
                false
            }
        };
        flags.adjointness_verified = match adjointness(v, n_op, w, w_tilde, caps.degree) {
            Ok(()) => true,
            Err(e) => {
                diags.push(format!("adjointness: {e}"));
                false
            }
        };
    }

    Ok(DarbouxCertificate {
        source: w.clone(),
        target: w_tilde.clone(),
        v: v.clone(),
        n,
        flags,
        caps,
        diagnostics: diags,
        leading,
    })
}

/// `⟨x^j I·V, x^k I⟩_{W̃} = ⟨x^j I, x^k I·N⟩_W` for `j, k ≤ cap`. By
/// sesquilinearity and `(E_pq P)·V = E_pq (P·V)` this covers every pair of
/// monomials `x^j E_pq`, `x^k E_rs`.
pub fn adjointness(v: &MatDiffOp, n: &MatDiffOp, w: &MatrixWeight, w_tilde: &MatrixWeight, cap: usize) -> Result<()> {
    let size = w.size();
    let xs: Vec<MatP> = (0..=cap).map(|j| monomial(size, j)).collect();
    let xv: Vec<MatP> = xs.iter().map(|p| v.apply_poly(p)).collect::<Result<_>>()?;
    let xn: Vec<MatP> = xs.iter().map(|p| n.apply_poly(p)).collect::<Result<_>>()?;
    let max_deg = |ps: &[MatP]| ps.iter().filter_map(MatP::degree).max().unwrap_or(0);
    let bt = w_tilde.block_moments(max_deg(&xv) + cap);
    let bs = w.block_moments(cap + max_deg(&xn));
    for j in 0..=cap {
        for k in 0..=cap {
            let lhs = bt.inner(&xv[j], &xs[k]);
            let rhs = bs.inner(&xs[j], &xn[k]);
            if lhs != rhs {
                return Err(Error::Verification(format!("pair (x^{j} I, x^{k} I): {lhs} ≠ {rhs}")));
            }
        }
    }
    Ok(())
}

/// `P_n·V = A_n P̃_n` with `A_n` nonsingular, for `n ≤ cap`; returns `A_n`.
fn proportionality(v: &MatDiffOp, src: &MOPTable, tgt: &MOPTable, cap: usize) -> Result<Vec<MatC>> {
    let mut out = Vec::with_capacity(cap + 1);
    for n in 0..=cap {
        let q = v.apply_poly(src.poly(n)?)?;
        if q.degree() != Some(n) {
            return Err(Error::Verification(format!("deg(P_{n}·V) = {:?}", q.degree())));
        }
        let a = q.coeff(n);
        if a.det().is_zero() {
            return Err(Error::Verification(format!("A_{n} = {a} is singular")));
        }
        if q != tgt.poly(n)?.lmul_c(&a) {
            return Err(Error::Verification(format!("P_{n}·V is not A_{n} P̃_{n}")));
        }
        out.push(a);
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `A ∈ D(W) ↦ N∘A∘V ∈ D(W̃)`.
    Down,
    /// `A ∈ D(W̃) ↦ V∘A∘N ∈ D(W)`.
    Up,
}

/// Sandwich product across a certificate, with membership of the input and
/// output checked. For strong certificates the order satisfies
/// `ord = ord(A) + 2·ord(V)`, and symmetric inputs give symmetric outputs.
pub fn conjugate(a: &MatDiffOp, cert: &DarbouxCertificate, dir: Direction) -> Result<MatDiffOp> {
    let n = cert.companion()?;
    let (from, to) = match dir {
        Direction::Down => (&cert.source, &cert.target),
        Direction::Up => (&cert.target, &cert.source),
    };
    let n_check = cert.caps.n_check;
    let from_table = monic_sequence(from, n_check)?;
    if !membership_in(a, &from_table, n_check)? {
        return Err(Error::NotMember(format!("{a} is not in the source algebra of the conjugation")));
    }
    let out = match dir {
        Direction::Down => n.compose(a)?.compose(&cert.v)?,
        Direction::Up => cert.v.compose(a)?.compose(n)?,
    };
    let to_table = monic_sequence(to, n_check)?;
    if !membership_in(&out, &to_table, n_check)? {
        return Err(Error::Verification(format!("conjugate of {a} left the target algebra")));
    }
    if cert.is_strong() {
        let expected = a.order().map(|o| o + 2 * cert.v.order().unwrap_or(0));
        if out.order() != expected {
            return Err(Error::Verification(format!("order {:?} ≠ {:?} after conjugation", out.order(), expected)));
        }
        if formal_symmetry_test(a, from)? && !formal_symmetry_test(&out, to)? {
            return Err(Error::Verification(format!("conjugate of symmetric {a} is not symmetric")));
        }
    }
    Ok(out)
}

/// Certificate for `W₁ → W₃` with transformer `V₁∘V₂`.
pub fn transformer_compose(c1: &DarbouxCertificate, c2: &DarbouxCertificate) -> Result<DarbouxCertificate> {
    if !c1.is_strong() || !c2.is_strong() {
        return Err(Error::Verification("both certificates must be strong".into()));
    }
    if c1.target != c2.source {
        return Err(Error::Verification("target of the first certificate is not the source of the second".into()));
    }
    let v = c1.v.compose(&c2.v)?;
    let cert = verify_strong(&v, &c1.source, &c2.target, c1.caps)?;
    if !cert.is_strong() {
        return Err(Error::Verification(format!("composed transformer failed: {}", cert.diagnostics.join("; "))));
    }
    Ok(cert)
}

/// Certificate for `W̃ → W` with transformer `N`.
pub fn reverse(cert: &DarbouxCertificate) -> Result<DarbouxCertificate> {
    verify_strong(cert.companion()?, &cert.target, &cert.source, cert.caps)
}

/// `Q_n = P_n·V` with leading coefficients and an orthogonality verdict.
#[derive(Clone, Debug)]
pub struct MappedSequence {
    pub polys: Vec<MatP>,
    pub leading: Vec<MatC>,
    pub orthogonal: bool,
}

pub fn mapped_sequence(cert: &DarbouxCertificate, table: &MOPTable) -> Result<MappedSequence> {
    let polys: Vec<MatP> = table.polys().iter().map(|p| cert.v.apply_poly(p)).collect::<Result<_>>()?;
    let leading: Vec<MatC> =
        polys.iter().enumerate().map(|(n, q)| q.coeff(n)).collect();
    let max = polys.iter().filter_map(MatP::degree).max().unwrap_or(0);
    let bm = cert.target.block_moments(2 * max);
    let mut orthogonal = true;
    'outer: for i in 0..polys.len() {
        for j in 0..i {
            if !bm.inner(&polys[i], &polys[j]).is_zero() {
                orthogonal = false;
                break 'outer;
            }
        }
    }
    Ok(MappedSequence { polys, leading, orthogonal })
}

/// The strong transformer `V = M⁻¹` from `W` to `M W M*`.
pub fn constant_conjugation(w: &MatrixWeight, m: &MatC) -> Result<(MatDiffOp, MatrixWeight)> {
    let mp = m.to_poly();
    let h = mp.mul(w.h()).mul(&mp.conj_transpose());
    let target = MatrixWeight::new(w.kernel().clone(), h)?;
    Ok((MatDiffOp::constant(&m.inverse()?), target))
}
