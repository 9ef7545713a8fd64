//! JSON wire format for forms, critical points, and decompositions.
//!
//! Emission is hand-rolled: every float carries 17 significant digits
//! (round-trip exact for f64) and key order is fixed, so identical
//! inputs produce byte-identical documents. Parsing goes through
//! serde_json and accepts the emitted schema plus bare coefficient
//! arrays for inline use.

use serde_json::Value;

use crate::eigen::{CriticalRank1, EigenDecomposition};
use crate::error::{Error, Result};
use crate::experiments::{SweepReport, TableReport};
use crate::form::{BinaryForm, Scalar, ScalarField};
use crate::rank::CriticalRankK;
use crate::spectral::{RezDecomposition, SpectralDecomposition};

/// A float with 17 significant digits; parses back to the same bits.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

/// A complex scalar as a [re, im] pair.
fn pair(c: Scalar) -> String {
    format!("[{},{}]", num(c.re), num(c.im))
}

fn join(parts: Vec<String>) -> String {
    parts.join(",")
}

/// {"degree":…,"coeffs":[…],"field":…} with real coefficients plain
/// and complex ones as [re, im] pairs.
pub fn form_to_json(f: &BinaryForm) -> String {
    let real = f.field() == ScalarField::Real;
    let coeffs = join(
        f.coeffs().iter().map(|&c| if real { num(c.re) } else { pair(c) }).collect(),
    );
    let field = if real { "real" } else { "complex" };
    format!("{{\"degree\":{},\"coeffs\":[{}],\"field\":\"{}\"}}", f.degree(), coeffs, field)
}

fn parse_err(msg: &str) -> Error {
    Error::Parse(msg.to_string())
}

/// A number or a [re, im] pair.
fn scalar_from_value(v: &Value) -> Result<Scalar> {
    match v {
        Value::Number(n) => {
            let x = n.as_f64().ok_or_else(|| parse_err("coefficient out of f64 range"))?;
            Ok(Scalar::new(x, 0.0))
        }
        Value::Array(p) if p.len() == 2 => {
            let re = p[0].as_f64().ok_or_else(|| parse_err("re component must be a number"))?;
            let im = p[1].as_f64().ok_or_else(|| parse_err("im component must be a number"))?;
            Ok(Scalar::new(re, im))
        }
        _ => Err(parse_err("coefficient must be a number or a [re, im] pair")),
    }
}

/// Parses an already-deserialized form object.
pub fn form_from_value(v: &Value) -> Result<BinaryForm> {
    let obj = v.as_object().ok_or_else(|| parse_err("form must be a JSON object"))?;
    let degree = obj
        .get("degree")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("missing or non-integer \"degree\""))? as usize;
    let field = match obj.get("field").and_then(Value::as_str) {
        Some("real") => ScalarField::Real,
        Some("complex") => ScalarField::Complex,
        Some(other) => return Err(Error::Parse(format!("unknown field \"{other}\""))),
        None => return Err(parse_err("missing \"field\" (\"real\" or \"complex\")")),
    };
    let entries = obj
        .get("coeffs")
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("missing \"coeffs\" array"))?;
    let coeffs: Vec<Scalar> = entries.iter().map(scalar_from_value).collect::<Result<_>>()?;
    if coeffs.len() != degree + 1 {
        return Err(Error::Parse(format!(
            "degree {degree} needs {} coefficients, got {}",
            degree + 1,
            coeffs.len()
        )));
    }
    if field == ScalarField::Real && coeffs.iter().any(|c| c.im != 0.0) {
        return Err(parse_err("field is \"real\" but a coefficient has an imaginary part"));
    }
    BinaryForm::new(degree, coeffs, field)
}

/// Parses {"degree":…,"coeffs":[…],"field":…} from text.
pub fn form_from_json(text: &str) -> Result<BinaryForm> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    form_from_value(&v)
}

/// Parses a bare coefficient array like [1,0,0,2] or [[0,1],2,…],
/// entries c_0..c_d.
pub fn coeffs_from_inline(text: &str) -> Result<Vec<Scalar>> {
    let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let arr = v.as_array().ok_or_else(|| parse_err("inline form must be a JSON array"))?;
    arr.iter().map(scalar_from_value).collect()
}

fn direction(l: &crate::form::LinearForm) -> String {
    format!("[{},{}]", pair(l.a), pair(l.b))
}

fn rank1_to_json(p: &CriticalRank1) -> String {
    format!(
        "{{\"v\":{},\"lambda\":{},\"multiplicity\":{},\"real\":{}}}",
        direction(&p.v),
        pair(p.lambda),
        p.multiplicity,
        p.is_real
    )
}

/// A list of eigen pairs, or the degenerate-circle variant.
pub fn eigen_to_json(e: &EigenDecomposition) -> String {
    match e {
        EigenDecomposition::Discrete(pairs) => {
            format!("[{}]", join(pairs.iter().map(rank1_to_json).collect()))
        }
        EigenDecomposition::Circle { coefficient } => {
            format!("{{\"circle\":true,\"coefficient\":{}}}", pair(*coefficient))
        }
    }
}

/// One critical point with its census flags and certificates.
pub fn critical_to_json(p: &CriticalRankK) -> String {
    let summands = join(
        p.summands
            .iter()
            .map(|s| format!("{{\"mu\":{},\"l\":{}}}", pair(s.mu), direction(&s.l)))
            .collect(),
    );
    let tangent = p.tangent.as_ref().map_or(String::new(), |t| {
        format!(
            ",\"tangent\":{{\"mu\":{},\"nu\":{},\"l\":{}}}",
            pair(t.mu),
            pair(t.nu),
            direction(&t.l)
        )
    });
    let cert = p.cert_residual.map_or_else(|| "null".to_string(), num);
    format!(
        "{{\"k\":{},\"degree\":{},\"summands\":[{}]{},\"distance\":{},\"grad_residual\":{},\"cert_residual\":{},\"boundary\":{},\"real\":{},\"uncertified\":{}}}",
        p.k,
        p.degree,
        summands,
        tangent,
        num(p.distance),
        num(p.grad_residual),
        cert,
        p.boundary,
        p.is_real,
        p.uncertified
    )
}

pub fn critical_list_to_json(pts: &[CriticalRankK]) -> String {
    format!("[{}]", join(pts.iter().map(critical_to_json).collect()))
}

/// Basis powers, coefficients, residual, and the repeated-root flag.
pub fn spectral_to_json(s: &SpectralDecomposition) -> String {
    format!(
        "{{\"basis\":[{}],\"coeffs\":[{}],\"residual\":{},\"multiple_roots\":{}}}",
        join(s.basis.iter().map(form_to_json).collect()),
        join(s.coeffs.iter().map(|&c| pair(c)).collect()),
        num(s.residual),
        s.multiple_roots
    )
}

/// Degree, rotation, common weight, summand directions, residual.
pub fn rez_to_json(r: &RezDecomposition) -> String {
    let summands = join(r.summands.iter().map(|l| format!("[{},{}]", num(l.a.re), num(l.b.re))).collect());
    format!(
        "{{\"d\":{},\"phi\":{},\"c_d\":{},\"summands\":[{}],\"residual\":{}}}",
        r.d,
        num(r.phi),
        num(r.c_d),
        summands,
        num(r.residual)
    )
}

/// Table rows with witnesses, the seven-real hunt, and samples used.
pub fn table_to_json(rep: &TableReport) -> String {
    let rows = join(
        rep.rows
            .iter()
            .map(|r| {
                let witness =
                    r.witness.as_ref().map_or_else(|| "null".to_string(), form_to_json);
                format!(
                    "{{\"n_real_roots\":{},\"n_real_crit1\":{},\"n_real_crit2\":{},\"found\":{},\"witness\":{}}}",
                    r.n_real_roots,
                    r.n_real_crit1,
                    r.n_real_crit2,
                    r.found(),
                    witness
                )
            })
            .collect(),
    );
    let seven = rep.seven_real.as_ref().map_or_else(|| "null".to_string(), form_to_json);
    format!(
        "{{\"rows\":[{}],\"seven_real\":{},\"samples_used\":{}}}",
        rows, seven, rep.samples_used
    )
}

/// Sweep outcome: sample counts, histogram, and any violations.
pub fn sweep_to_json(rep: &SweepReport) -> String {
    let violations = join(
        rep.violations
            .iter()
            .map(|v| {
                format!(
                    "{{\"form\":{},\"n_real_roots\":{},\"n_real_crit1\":{}}}",
                    form_to_json(&v.form),
                    v.n_real_roots,
                    v.n_real_crit1
                )
            })
            .collect(),
    );
    let histogram =
        join(rep.crit1_histogram.iter().map(|n| n.to_string()).collect());
    format!(
        "{{\"degree\":{},\"samples\":{},\"skipped\":{},\"violations\":[{}],\"crit1_histogram\":[{}]}}",
        rep.degree, rep.samples, rep.skipped, violations, histogram
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rank::SearchBudget;

    #[test]
    fn real_form_round_trips_exactly() {
        let f = BinaryForm::real(&[1.0, -0.125, std::f64::consts::PI, 2e-17, 3.5]);
        let g = form_from_json(&form_to_json(&f)).unwrap();
        assert_eq!(f.coeffs(), g.coeffs());
        assert_eq!(g.field(), ScalarField::Real);
    }

    #[test]
    fn complex_form_round_trips_exactly() {
        let coeffs = vec![Scalar::new(1.5, -2.25), Scalar::new(0.0, 1e-30), Scalar::new(-3.0, 0.125)];
        let f = BinaryForm::new(2, coeffs, ScalarField::Complex).unwrap();
        let g = form_from_json(&form_to_json(&f)).unwrap();
        assert_eq!(f.coeffs(), g.coeffs());
        assert_eq!(g.field(), ScalarField::Complex);
    }

    #[test]
    fn floats_carry_seventeen_significant_digits() {
        let text = form_to_json(&BinaryForm::real(&[std::f64::consts::PI, 0.0]));
        assert!(text.contains("3.1415926535897931e0"), "{text}");
    }

    #[test]
    fn malformed_documents_are_rejected_with_parse_errors() {
        for bad in [
            "not json",
            "[1,2,3]",
            "{\"degree\":2,\"coeffs\":[1,2],\"field\":\"real\"}",
            "{\"degree\":1,\"coeffs\":[1,2],\"field\":\"rational\"}",
            "{\"degree\":1,\"coeffs\":[[1,2],[3,4]],\"field\":\"real\"}",
            "{\"degree\":1,\"coeffs\":[1,\"x\"],\"field\":\"real\"}",
        ] {
            assert!(matches!(form_from_json(bad), Err(Error::Parse(_))), "{bad}");
        }
    }

    #[test]
    fn inline_arrays_accept_mixed_scalars() {
        let c = coeffs_from_inline("[1,0,[0,2],2]").unwrap();
        assert_eq!(c.len(), 4);
        assert_eq!(c[2], Scalar::new(0.0, 2.0));
    }

    #[test]
    fn eigen_output_re_parses_as_json() {
        let f = BinaryForm::real(&[1.0, 0.0, 0.0, 0.0, 1.0]);
        let text = eigen_to_json(&crate::eigen::eigen_pairs(&f).unwrap());
        let v: Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 4);
    }

    #[test]
    fn census_output_re_parses_and_keeps_flags() {
        let f = BinaryForm::real(&[0.3, -1.2, 0.8, 0.5, -0.9]);
        let pts = crate::rank::critical_rank_k(
            &f,
            2,
            ScalarField::Complex,
            &SearchBudget::for_rank(2).with_seed(7),
        )
        .unwrap();
        let v: Value = serde_json::from_str(&critical_list_to_json(&pts)).unwrap();
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 7);
        for entry in arr {
            for key in ["k", "summands", "distance", "grad_residual", "boundary", "real"] {
                assert!(entry.get(key).is_some(), "missing {key}");
            }
        }
    }

    #[test]
    fn emission_is_deterministic() {
        let f = BinaryForm::real(&[0.3, -1.2, 0.8, 0.5, -0.9]);
        let run = || {
            let pts = crate::rank::critical_rank_k(
                &f,
                2,
                ScalarField::Complex,
                &SearchBudget::for_rank(2).with_seed(11),
            )
            .unwrap();
            critical_list_to_json(&pts)
        };
        assert_eq!(run(), run());
    }
}
