//! Check helpers shared by the catalog entries, plus closed-form scalar
//! orthogonal polynomials used as independent oracles.

use num_traits::One;

use crate::algebra::{MatC, MatP, Poly, Q};
use crate::darboux::{conjugate, mapped_sequence, verify_strong, Caps, DarbouxCertificate, Direction};
use crate::diffop::MatDiffOp;
use crate::dw::{eigenvalue_poly, in_span, membership_in, solve_bounded_order, EigenMatrix};
use crate::error::Result;
use crate::mop::{general_recurrence, monic_sequence, MOPTable};
use crate::report::{Check, Group};
use crate::weights::{formal_symmetry_test, MatrixWeight};

/// Monic Hermite polynomials `H_0..=H_n` from `H_{k+1} = x H_k − (k/2) H_{k−1}`.
pub fn hermite_monic(n: usize) -> Vec<Poly> {
    let mut out = vec![Poly::one(), Poly::x()];
    for k in 1..n {
        let next = &(&Poly::x() * &out[k]) - &out[k - 1].scale_q(&Q::new(k.into(), 2.into()));
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// Monic Laguerre polynomials `L_0^α..=L_n^α` from
/// `L_{k+1} = (x − (2k + α + 1)) L_k − k (k + α) L_{k−1}`.
pub fn laguerre_monic(n: usize, alpha: &Q) -> Vec<Poly> {
    let mut out = vec![Poly::one(), &Poly::x() - &Poly::from_rational(alpha + Q::one())];
    for k in 1..n {
        let kq = Q::from_integer(k.into());
        let shift = Poly::from_rational(&kq * Q::from_integer(2.into()) + alpha + Q::one());
        let next =
            &(&(&Poly::x() - &shift) * &out[k]) - &out[k - 1].scale_q(&(&kq * (&kq + alpha)));
        out.push(next);
    }
    out.truncate(n + 1);
    out
}

/// `seq[n − k]`, or zero when `k > n`.
pub(crate) fn back(seq: &[Poly], n: usize, k: usize) -> Poly {
    if k > n {
        Poly::zero()
    } else {
        seq[n - k].clone()
    }
}

/// Largest `n` in closed-form sequence comparisons.
pub(crate) const SEQUENCE_MAX: usize = 8;
/// Largest `n` in the monic three-term identity check.
pub(crate) const RECURRENCE_MAX: usize = 10;

/// Per-sample state: source/target weights, their monic tables, and the
/// checks recorded so far.
pub(crate) struct Session {
    pub src: MatrixWeight,
    pub tgt: MatrixWeight,
    pub src_table: MOPTable,
    pub tgt_table: MOPTable,
    pub caps: Caps,
    pub checks: Vec<Check>,
}

impl Session {
    pub fn new(src: MatrixWeight, tgt: MatrixWeight, caps: Caps) -> Result<Self> {
        let k = caps.n_check.max(RECURRENCE_MAX + 1);
        Ok(Self {
            src_table: monic_sequence(&src, k)?,
            tgt_table: monic_sequence(&tgt, k)?,
            src,
            tgt,
            caps,
            checks: Vec::new(),
        })
    }

    pub fn record(&mut self, name: impl Into<String>, group: Group, r: Result<(bool, String)>) {
        let name = name.into();
        self.checks.push(match r {
            Ok((ok, detail)) => Check::new(name, group, ok, detail),
            Err(e) => Check::new(name, group, false, format!("error: {e}")),
        });
    }

    /// Compares against a displayed formula that may carry a typo. Passes when
    /// the displayed form holds; when only the corrected form holds the check
    /// is a recorded discrepancy whose detail names the correction.
    pub fn displayed_or_corrected(
        &mut self,
        name: impl Into<String>,
        group: Group,
        shown: Result<(bool, String)>,
        corrected: Result<bool>,
        correction: &str,
    ) {
        let name = name.into();
        self.checks.push(match (shown, corrected) {
            (Ok((true, _)), _) => Check::new(name, group, true, ""),
            (Ok((false, d)), Ok(true)) => Check::discrepancy(name, group, format!("{correction}; {d}")),
            (Ok((false, d)), _) => Check::new(name, group, false, d),
            (Err(e), _) => Check::new(name, group, false, format!("error: {e}")),
        });
    }

    fn table(&self, on_target: bool) -> (&MatrixWeight, &MOPTable) {
        if on_target {
            (&self.tgt, &self.tgt_table)
        } else {
            (&self.src, &self.src_table)
        }
    }

    /// `V∘N` against a displayed `D`.
    pub fn factorization(&mut self, v: &MatDiffOp, n: &MatDiffOp, d: &MatDiffOp) {
        let r = v.compose(n).map(|vn| (vn == *d, format!("V∘N = {vn}")));
        self.record("V∘N equals the displayed D", Group::Factorization, r);
    }

    /// As `factorization`, falling back to a corrected `D`.
    pub fn factorization_corrected(
        &mut self,
        v: &MatDiffOp,
        n: &MatDiffOp,
        d: &MatDiffOp,
        fixed: &MatDiffOp,
        correction: &str,
    ) {
        let name = "V∘N equals the displayed D";
        match v.compose(n) {
            Ok(vn) => {
                let shown = Ok((vn == *d, format!("V∘N = {vn}")));
                self.displayed_or_corrected(name, Group::Factorization, shown, Ok(vn == *fixed), correction);
            }
            Err(e) => self.record(name, Group::Factorization, Err(e)),
        }
    }

    /// Runs the full certificate pipeline and records whether it is strong
    /// (or plain but not strong, when `expect_strong` is false).
    pub fn certificate(&mut self, v: &MatDiffOp, expect_strong: bool) -> Result<DarbouxCertificate> {
        let cert = verify_strong(v, &self.src, &self.tgt, self.caps)?;
        let detail = format!("flags {:?}; {}", cert.flags, cert.diagnostics.join("; "));
        if expect_strong {
            self.record("strong Darboux certificate", Group::Certificate, Ok((cert.is_strong(), detail)));
        } else {
            let r = Ok((cert.is_plain() && !cert.is_strong(), detail));
            self.record("plain but not strong certificate", Group::NonStrong, r);
        }
        Ok(cert)
    }

    pub fn companion_displayed(&mut self, cert: &DarbouxCertificate, n: &MatDiffOp) {
        let r = cert.companion().map(|c| (c == n, format!("computed N = {c}")));
        self.record("companion W̃V*W⁻¹ equals the displayed N", Group::Factorization, r);
    }

    /// Membership (and optionally symmetry) of `op` in the source or target algebra.
    pub fn member(&mut self, name: &str, op: &MatDiffOp, on_target: bool, symmetric: bool) {
        let n_check = self.caps.n_check;
        let (w, t) = self.table(on_target);
        let r = membership_in(op, t, n_check).map(|ok| (ok, format!("{op} fails P_n·D = Λ_n P_n")));
        let sym = symmetric.then(|| formal_symmetry_test(op, w).map(|ok| (ok, format!("{op} is not symmetric"))));
        self.record(format!("{name} is a member"), Group::Membership, r);
        if let Some(s) = sym {
            self.record(format!("{name} is symmetric"), Group::Membership, s);
        }
    }

    /// `N∘E∘V`, compared with a displayed operator; returns the computed one.
    pub fn conjugate_displayed(
        &mut self,
        name: &str,
        e: &MatDiffOp,
        cert: &DarbouxCertificate,
        shown: &MatDiffOp,
    ) -> Result<MatDiffOp> {
        let d = conjugate(e, cert, Direction::Down)?;
        let ok = d == *shown;
        self.record(
            format!("{name} = N∘E∘V matches the displayed operator"),
            Group::Membership,
            Ok((ok, format!("computed {d}"))),
        );
        Ok(d)
    }

    pub fn relation(&mut self, name: &str, lhs: Result<EigenMatrix>, rhs: Result<EigenMatrix>) {
        let r = lhs.and_then(|l| rhs.map(|r| (l == r, format!("Λ(lhs) = {l}, Λ(rhs) = {r}"))));
        self.record(name, Group::Relation, r);
    }

    pub fn eigen_displayed(&mut self, name: &str, op: &MatDiffOp, shown: &EigenMatrix) {
        let r = eigenvalue_poly(op).map(|l| (l == *shown, format!("computed Λ = {l}")));
        self.record(format!("Λ({name}) matches the displayed formula"), Group::Eigenvalue, r);
    }

    /// `P_n·V` against a closed form for `n ≤ SEQUENCE_MAX`, plus orthogonality.
    pub fn sequence(&mut self, cert: &DarbouxCertificate, closed: impl Fn(usize) -> MatP) -> Option<Vec<MatP>> {
        self.sequence_corrected(cert, closed, None::<(fn(usize) -> MatP, &str)>)
    }

    /// As `sequence`, with an optional corrected closed form and its description.
    pub fn sequence_corrected(
        &mut self,
        cert: &DarbouxCertificate,
        closed: impl Fn(usize) -> MatP,
        fixed: Option<(impl Fn(usize) -> MatP, &str)>,
    ) -> Option<Vec<MatP>> {
        let seq = match mapped_sequence(cert, &self.src_table) {
            Ok(s) => s,
            Err(e) => {
                self.record("P_n·V matches the closed form", Group::Sequence, Err(e));
                return None;
            }
        };
        let bad = (0..=SEQUENCE_MAX).find(|&n| seq.polys[n] != closed(n));
        let detail = bad.map_or(String::new(), |n| format!("n = {n}: computed {}", seq.polys[n]));
        let name = "P_n·V matches the closed form";
        match fixed {
            Some((f, correction)) => {
                let ok = (0..=SEQUENCE_MAX).all(|n| seq.polys[n] == f(n));
                self.displayed_or_corrected(name, Group::Sequence, Ok((bad.is_none(), detail)), Ok(ok), correction);
            }
            None => self.record(name, Group::Sequence, Ok((bad.is_none(), detail))),
        }
        self.record(
            "P_n·V is orthogonal for the target",
            Group::Sequence,
            Ok((seq.orthogonal, "nonzero inner product".into())),
        );
        Some(seq.polys)
    }

    /// Recurrence of a non-monic orthogonal sequence against displayed
    /// `A_n`, `B_n = 0`, `C_n`.
    pub fn recurrence_displayed(&mut self, seq: &[MatP], a: impl Fn(usize) -> MatC, c: impl Fn(usize) -> MatC) {
        let r = (|| {
            for n in 0..=SEQUENCE_MAX {
                let (an, bn, cn) = general_recurrence(seq, &self.tgt, n)?;
                if an != a(n) || !bn.is_zero() || cn != c(n) {
                    return Ok((false, format!("n = {n}: A = {an}, B = {bn}, C = {cn}")));
                }
            }
            Ok((true, String::new()))
        })();
        self.record("recurrence coefficients match the displayed A_n, B_n, C_n", Group::Recurrence, r);
    }

    /// Monic three-term identity for both weights up to `RECURRENCE_MAX`.
    pub fn three_term(&mut self) {
        for (label, t) in [("source", &self.src_table), ("target", &self.tgt_table)] {
            let r = (0..=RECURRENCE_MAX).try_for_each(|n| t.recurrence_coeffs(n).map(|_| ()));
            let check = match r {
                Ok(()) => Check::new(format!("monic three-term identity ({label})"), Group::Recurrence, true, ""),
                Err(e) => Check::new(format!("monic three-term identity ({label})"), Group::Recurrence, false, e.to_string()),
            };
            self.checks.push(check);
        }
    }

    /// `dim D(W̃)_{≤m}` and, when given, that the solution space is the span of `expected`.
    pub fn solver(&mut self, m: usize, dim: usize, expected: &[MatDiffOp]) {
        let r = solve_bounded_order(&self.tgt, m, m + 2).and_then(|s| {
            let mut ok = s.dimension() == dim && s.all_members && s.symmetric_split_holds();
            for e in expected {
                ok &= in_span(&s.basis, e)?;
            }
            Ok((ok, format!("dimension {} (trace {:?})", s.dimension(), s.trace)))
        });
        self.record(format!("operators of order ≤ {m} form a space of dimension {dim}"), Group::Solver, r);
    }
}

/// Constant matrix from rows of rationals.
pub(crate) fn qmat(rows: Vec<Vec<Q>>) -> MatC {
    MatC::from_rows(rows.into_iter().map(|r| r.into_iter().map(crate::GaussianRational::real).collect()).collect())
}
