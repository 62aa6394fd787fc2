//! JSON files for weights and operators, and JSON views of certificates and
//! solver results.
//!
//! Scalars are string literals: `p/q` for a rational, `p/q,r/s` for
//! `p/q + (r/s)i`. A polynomial is an array of coefficient literals in
//! ascending degree (`[]` is zero) and a matrix is an array of rows.
//! Parsing reports schema violations with the JSON path of the offending
//! value, for example `h[1][0][2]`.

use serde::de::{self, Deserializer};
use serde::ser::Serializer;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::algebra::{format_rational, parse_rational, GaussianRational, MatP, Poly, Q};
use crate::darboux::DarbouxCertificate;
use crate::diffop::MatDiffOp;
use crate::dw::SolveResult;
use crate::error::{Error, Result};
use crate::weights::{Kernel, MatrixWeight};

/// A `p/q` literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rational(pub Q);

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map(Rational).map_err(de::Error::custom)
    }
}

/// A `p/q` or `p/q,r/s` literal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scalar(pub GaussianRational);

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.0.to_literal())
    }
}

impl<'de> Deserialize<'de> for Scalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        GaussianRational::parse_literal(&s).map(Scalar).map_err(de::Error::custom)
    }
}

type PolyJson = Vec<Scalar>;
type MatrixJson = Vec<Vec<PolyJson>>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum KernelJson {
    Hermite,
    Laguerre { alpha: Rational },
    Jacobi { alpha: Rational, beta: Rational },
}

/// On-disk weight: kernel, `H`, and optionally a factor `T` with
/// `H = T·diag·T*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct WeightJson {
    pub kernel: KernelJson,
    pub h: MatrixJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub factor: Option<MatrixJson>,
}

/// On-disk operator `Σ ∂^j F_j`; `coeffs[j]` is `F_j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorJson {
    pub size: usize,
    pub coeffs: Vec<MatrixJson>,
}

fn schema(path: impl Into<String>, message: impl ToString) -> Error {
    Error::Schema { path: path.into(), message: message.to_string() }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| schema(e.path().to_string(), e.inner()))
}

fn poly_to_json(p: &Poly) -> PolyJson {
    p.coeffs().iter().cloned().map(Scalar).collect()
}

fn matrix_to_json(m: &MatP) -> MatrixJson {
    m.to_rows().iter().map(|r| r.iter().map(poly_to_json).collect()).collect()
}

fn matrix_from_json(m: &MatrixJson, path: &str, size: Option<usize>) -> Result<MatP> {
    let n = size.unwrap_or(m.len());
    if m.len() != n || n == 0 {
        return Err(schema(path, format!("expected {n} rows, found {}", m.len())));
    }
    for (i, row) in m.iter().enumerate() {
        if row.len() != n {
            return Err(schema(format!("{path}[{i}]"), format!("expected {n} entries, found {}", row.len())));
        }
    }
    Ok(MatP::from_rows(
        m.iter().map(|r| r.iter().map(|p| Poly::new(p.iter().map(|c| c.0.clone()).collect())).collect()).collect(),
    ))
}

impl KernelJson {
    pub fn from_kernel(k: &Kernel) -> Self {
        match k {
            Kernel::Hermite => Self::Hermite,
            Kernel::Laguerre { alpha } => Self::Laguerre { alpha: Rational(alpha.clone()) },
            Kernel::Jacobi { alpha, beta } => Self::Jacobi { alpha: Rational(alpha.clone()), beta: Rational(beta.clone()) },
        }
    }

    pub fn to_kernel(&self) -> Result<Kernel> {
        let k = match self {
            Self::Hermite => Kernel::Hermite,
            Self::Laguerre { alpha } => Kernel::laguerre(alpha.0.clone()),
            Self::Jacobi { alpha, beta } => Kernel::jacobi(alpha.0.clone(), beta.0.clone()),
        };
        k.validate().map_err(|e| schema("kernel", e))?;
        Ok(k)
    }
}

impl WeightJson {
    pub fn from_weight(w: &MatrixWeight) -> Self {
        Self {
            kernel: KernelJson::from_kernel(w.kernel()),
            h: matrix_to_json(w.h()),
            factor: w.factor().map(|f| matrix_to_json(&f.t)),
        }
    }

    pub fn to_weight(&self) -> Result<MatrixWeight> {
        let kernel = self.kernel.to_kernel()?;
        let h = matrix_from_json(&self.h, "h", None)?;
        let w = MatrixWeight::new(kernel, h).map_err(|e| schema("h", e))?;
        match &self.factor {
            Some(t) => {
                let t = matrix_from_json(t, "factor", Some(w.size()))?;
                w.with_factor(t).map_err(|e| schema("factor", e))
            }
            None => Ok(w),
        }
    }
}

impl OperatorJson {
    /// Fails for operators with non-polynomial coefficients.
    pub fn from_operator(d: &MatDiffOp) -> Result<Self> {
        let coeffs = d.checked_poly_coeffs()?;
        Ok(Self { size: d.size(), coeffs: coeffs.iter().map(matrix_to_json).collect() })
    }

    pub fn to_operator(&self) -> Result<MatDiffOp> {
        if self.size == 0 {
            return Err(schema("size", "must be positive"));
        }
        let cs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, m)| matrix_from_json(m, &format!("coeffs[{j}]"), Some(self.size)))
            .collect::<Result<Vec<_>>>()?;
        MatDiffOp::from_poly_coeffs(self.size, cs).map_err(|e| schema("coeffs", e))
    }
}

pub fn parse_weight(text: &str) -> Result<MatrixWeight> {
    from_json::<WeightJson>(text)?.to_weight()
}

pub fn parse_operator(text: &str) -> Result<MatDiffOp> {
    from_json::<OperatorJson>(text)?.to_operator()
}

fn pretty<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

pub fn weight_to_json(w: &MatrixWeight) -> String {
    pretty(&WeightJson::from_weight(w))
}

pub fn operator_to_json(d: &MatDiffOp) -> Result<String> {
    Ok(pretty(&OperatorJson::from_operator(d)?))
}

fn operator_value(d: &MatDiffOp) -> Value {
    OperatorJson::from_operator(d).map_or_else(|e| json!({ "error": e.to_string() }), |o| json!(o))
}

/// Certificate with its inputs given by reference (file names or catalog ids).
pub fn certificate_value(cert: &DarbouxCertificate, source: &str, transformer: &str, target: &str) -> Value {
    json!({
        "source": source,
        "transformer": transformer,
        "target": target,
        "strong": cert.is_strong(),
        "plain": cert.is_plain(),
        "flags": cert.flags,
        "caps": cert.caps,
        "diagnostics": cert.diagnostics,
        "v": operator_value(&cert.v),
        "n": cert.n.as_ref().map(operator_value),
    })
}

pub fn solve_value(r: &SolveResult, weight: &str) -> Value {
    json!({
        "weight": weight,
        "max_order": r.order_bound,
        "dimension": r.dimension(),
        "unknowns": r.unknowns,
        "k_final": r.k_final,
        "n_check": r.n_check,
        "all_members": r.all_members,
        "symmetric_split": r.symmetric_split_holds(),
        "trace": r.trace.iter().map(|t| json!({ "k": t.k, "dimension": t.dimension })).collect::<Vec<_>>(),
        "basis": r.basis.iter().map(operator_value).collect::<Vec<_>>(),
        "symmetric_basis": r.symmetric_basis.iter().map(operator_value).collect::<Vec<_>>(),
    })
}
