//! Built-in examples and their verification checklists.
//!
//! Every entry builds its weights and operators from rational parameters,
//! then runs a fixed list of exact checks. Operators are written top-down:
//! the first coefficient block belongs to the highest power of `∂`.

mod checks;
mod entries;

use std::time::Instant;

use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::algebra::{format_rational, parse_const, parse_poly, parse_poly_in, MatP, Params, Poly, Q};
use crate::darboux::Caps;
use crate::diffop::MatDiffOp;
use crate::dw::EigenMatrix;
use crate::error::{Error, Result};
use crate::report::{Check, Group, Report, SampleReport, Timings};

pub use checks::{hermite_monic, laguerre_monic};

/// Static description of a catalog entry.
#[derive(Clone, Copy, Debug)]
pub struct EntryInfo {
    pub id: &'static str,
    pub summary: &'static str,
    /// Parameter names in sample order.
    pub params: &'static [&'static str],
    /// Documented only; cannot be verified.
    pub stub: bool,
}

const ENTRIES: &[EntryInfo] = &[
    EntryInfo {
        id: "laguerre-4",
        summary: "Laguerre weight x^alpha e^-x (x(1+a^2 x), a x; a x, 1) over x^(alpha+1) e^-x ⊕ x^alpha e^-x",
        params: &["a", "alpha"],
        stub: false,
    },
    EntryInfo {
        id: "hermite-I",
        summary: "Hermite weight e^-x^2 (1+a^2 x^4, a x^2; a x^2, 1) over e^-x^2 I",
        params: &["a"],
        stub: false,
    },
    EntryInfo {
        id: "hermite-II",
        summary: "Hermite weight e^-x^2 (1+a^2 x^2, a x; a x, 1) over e^-x^2 I",
        params: &["a"],
        stub: false,
    },
    EntryInfo {
        id: "threebythree",
        summary: "3x3 Hermite weight: plain but not strong Darboux transformation of e^-x^2 I",
        params: &["a", "b"],
        stub: false,
    },
    EntryInfo {
        id: "lag-directsum-nonstrong",
        summary: "x^(alpha+1) e^-x ⊕ x^alpha e^-x over x^alpha e^-x I: plain but not strong",
        params: &["alpha"],
        stub: false,
    },
    EntryInfo {
        id: "beyond-1",
        summary: "Hermite weight with a fourth-order operator and none of order two",
        params: &["a"],
        stub: false,
    },
    EntryInfo {
        id: "beyond-2",
        summary: "Hermite weight with a sixth-order operator and none of order two or four",
        params: &["a", "b"],
        stub: false,
    },
    EntryInfo {
        id: "hermite-III",
        summary: "stub: e^-x^2 (e^(2bx)+a^2 x^2, a x; a x, 1) mixes the kernels e^(-x^2+2bx) and e^-x^2, which are not supported",
        params: &["a", "b"],
        stub: true,
    },
];

pub fn catalog_list() -> &'static [EntryInfo] {
    ENTRIES
}

pub fn entry(id: &str) -> Result<&'static EntryInfo> {
    ENTRIES.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownEntry(id.to_string()))
}

fn sample_values(name: &str) -> [Q; 3] {
    let q = |n: i64, d: i64| Q::new(n.into(), d.into());
    match name {
        "a" => [q(1, 1), q(2, 1), q(1, 3)],
        "alpha" => [q(1, 2), q(0, 1), q(3, 2)],
        "b" => [q(1, 1), q(-1, 2), q(2, 1)],
        _ => unreachable!("unknown parameter {name}"),
    }
}

/// The three default samples of an entry (parameter lists zipped).
pub fn default_samples(id: &str) -> Result<Vec<Params>> {
    let e = entry(id)?;
    Ok((0..3)
        .map(|k| e.params.iter().map(|p| (p.to_string(), sample_values(p)[k].clone())).collect())
        .collect())
}

/// Fills missing parameters from the first default sample and checks domains.
pub fn complete_params(id: &str, given: &Params) -> Result<Params> {
    let e = entry(id)?;
    for k in given.keys() {
        if !e.params.contains(&k.as_str()) {
            return Err(Error::InvalidParam(format!("`{id}` has no parameter `{k}` (expected {:?})", e.params)));
        }
    }
    let mut out = default_samples(id)?.swap_remove(0);
    out.extend(given.iter().map(|(k, v)| (k.clone(), v.clone())));
    for (k, v) in &out {
        match k.as_str() {
            "alpha" if *v <= -Q::one() => {
                return Err(Error::InvalidParam(format!("alpha must be > -1, got {}", format_rational(v))))
            }
            "a" | "b" if v.is_zero() => return Err(Error::InvalidParam(format!("{k} must be nonzero"))),
            _ => {}
        }
    }
    Ok(out)
}

/// Runs the checklist of `id` at one parameter sample.
pub fn run_verification(id: &str, params: &Params, caps: Caps) -> Result<SampleReport> {
    let e = entry(id)?;
    if e.stub {
        return Err(Error::InvalidParam(format!("`{id}` is a documentation stub: {}", e.summary)));
    }
    let params = complete_params(id, params)?;
    let ctx = Ctx { p: params.clone() };
    let checks = match entries::run(id, &ctx, caps) {
        Ok(c) => c,
        Err(err) => vec![Check::new("pipeline", Group::Certificate, false, err.to_string())],
    };
    Ok(SampleReport { params: params.iter().map(|(k, v)| (k.clone(), format_rational(v))).collect(), checks })
}

/// Source and target weight of `id` at `params` (missing values take the
/// first default sample).
pub fn entry_weights(id: &str, params: &Params) -> Result<(crate::weights::MatrixWeight, crate::weights::MatrixWeight)> {
    let e = entry(id)?;
    if e.stub {
        return Err(Error::InvalidParam(format!("`{id}` is a documentation stub: {}", e.summary)));
    }
    entries::weights(id, &Ctx { p: complete_params(id, params)? })
}

/// Runs `id` at every sample in parallel and assembles a report.
pub fn run_entry(id: &str, samples: &[Params], caps: Caps) -> Result<Report> {
    entry(id)?;
    let results: Vec<Result<(SampleReport, f64)>> = samples
        .par_iter()
        .map(|p| {
            let t = Instant::now();
            let r = run_verification(id, p, caps)?;
            Ok((r, t.elapsed().as_secs_f64()))
        })
        .collect();
    let mut reports = Vec::new();
    let mut timings = Timings::default();
    for r in results {
        let (s, t) = r?;
        reports.push(s);
        timings.samples.push(t);
    }
    Ok(Report {
        entry: id.to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        degree_cap: caps.degree,
        n_check: caps.n_check,
        samples: reports,
        timings,
    })
}

/// Parameter environment plus parsing shortcuts for transcribed data.
pub(crate) struct Ctx {
    pub p: Params,
}

impl Ctx {
    pub fn get(&self, k: &str) -> Q {
        self.p[k].clone()
    }

    pub fn poly(&self, src: &str) -> Poly {
        parse_poly(src, &self.p).unwrap_or_else(|e| panic!("catalog expression: {e}"))
    }

    pub fn c(&self, src: &str) -> crate::GaussianRational {
        parse_const(src, &self.p).unwrap_or_else(|e| panic!("catalog constant: {e}"))
    }

    /// Square matrix from row-major entry expressions in `x`.
    pub fn mat(&self, entries: &[&str]) -> MatP {
        let n = square_side(entries.len());
        MatP::from_fn(n, n, |r, c| self.poly(entries[r * n + c]))
    }

    /// Operator from coefficient blocks, highest power of `∂` first.
    pub fn op(&self, top_down: &[&[&str]]) -> MatDiffOp {
        let n = square_side(top_down[0].len());
        let coeffs: Vec<MatP> = top_down.iter().rev().map(|b| self.mat(b)).collect();
        MatDiffOp::from_poly_coeffs(n, coeffs).expect("square blocks")
    }

    /// Matrix of polynomials in the scalar operator `delta`; entries are
    /// expressions in the indeterminate `d`.
    pub fn in_delta(&self, delta: &MatDiffOp, entries: &[&str]) -> MatDiffOp {
        let n = square_side(entries.len());
        let blocks: Vec<MatDiffOp> = entries
            .iter()
            .map(|s| {
                let p = parse_poly_in(s, "d", &self.p).unwrap_or_else(|e| panic!("catalog expression: {e}"));
                MatDiffOp::poly_of(&p, delta)
            })
            .collect();
        let order = blocks.iter().filter_map(MatDiffOp::order).max().unwrap_or(0);
        let coeffs = (0..=order)
            .map(|j| MatP::from_fn(n, n, |r, c| blocks[r * n + c].coeff(j)[(0, 0)].as_poly().expect("polynomial coefficient").clone()))
            .collect();
        MatDiffOp::from_poly_coeffs(n, coeffs).expect("square blocks")
    }

    /// Matrix of polynomials in `n` (an eigenvalue formula).
    pub fn eig(&self, entries: &[&str]) -> EigenMatrix {
        let k = square_side(entries.len());
        EigenMatrix(MatP::from_fn(k, k, |r, c| {
            parse_poly_in(entries[r * k + c], "n", &self.p).unwrap_or_else(|e| panic!("catalog expression: {e}"))
        }))
    }
}

fn square_side(len: usize) -> usize {
    let n = (len as f64).sqrt().round() as usize;
    assert_eq!(n * n, len, "entry count {len} is not a square");
    n
}

/// Classical scalar operators.
pub(crate) fn hermite_delta() -> MatDiffOp {
    MatDiffOp::from_poly_coeffs(
        1,
        vec![MatP::zeros(1, 1), MatP::scalar(1, Poly::from_ints(&[0, -2])), MatP::identity(1)],
    )
    .expect("scalar")
}

/// `∂² x + ∂ (alpha + 1 − x)`.
pub(crate) fn laguerre_delta(alpha: &Q) -> MatDiffOp {
    let c1 = &Poly::from_rational(alpha + Q::one()) - &Poly::x();
    MatDiffOp::from_poly_coeffs(1, vec![MatP::zeros(1, 1), MatP::scalar(1, c1), MatP::scalar(1, Poly::x())])
        .expect("scalar")
}

/// Parses `k=v` with `v` a rational literal such as `-1/2` or `0.5`.
pub fn parse_param(s: &str) -> Result<(String, Q)> {
    let (k, v) = s.split_once('=').ok_or_else(|| Error::Parse(format!("expected key=value, got `{s}`")))?;
    let v = v.trim();
    let q = if let Some((ip, fp)) = v.split_once('.') {
        let neg = ip.trim_start().starts_with('-');
        let digits = format!("{}{}", ip.trim_start_matches('-'), fp);
        let num: num_bigint::BigInt =
            digits.parse().map_err(|_| Error::Parse(format!("bad decimal `{v}`")))?;
        let den = num_bigint::BigInt::from(10u32).pow(fp.len() as u32);
        let q = Q::new(num, den);
        if neg {
            -q
        } else {
            q
        }
    } else {
        crate::algebra::parse_rational(v)?
    };
    Ok((k.trim().to_string(), q))
}
