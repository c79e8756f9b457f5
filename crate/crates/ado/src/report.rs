//! Serialization and pretty-printing of computed invariants.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{AdoError, Result};
use crate::ring::{Color, CycNum, WeightLaurent, WeightRat};

/// A computed invariant together with the provenance needed to reproduce it.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub name: String,
    pub n: usize,
    pub color: Color,
    pub e: i64,
    pub pipeline: String,
    pub value: WeightRat,
}

/// Which formal variable to print in: `t`, or `x = t^{−2}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variable {
    T,
    X,
}

fn rational_str(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let mk_err = || AdoError::Parse(format!("bad rational {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.parse().map_err(|_| mk_err())?;
            let q: BigInt = q.parse().map_err(|_| mk_err())?;
            if q.is_zero() {
                return Err(mk_err());
            }
            Ok(BigRational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(BigRational::from_integer(p))
        }
    }
}

fn laurent_to_json(l: &WeightLaurent) -> Value {
    let terms: Vec<Value> = l
        .terms()
        .map(|(e, c)| {
            let coeffs: Vec<Value> = c
                .coeffs()
                .iter()
                .map(|r| Value::String(rational_str(r)))
                .collect();
            json!([coeffs, e])
        })
        .collect();
    Value::Array(terms)
}

fn laurent_from_json(color: Color, v: &Value) -> Result<WeightLaurent> {
    let err = || AdoError::Parse("malformed polynomial term list".into());
    let mut out = WeightLaurent::zero(color);
    for term in v.as_array().ok_or_else(err)? {
        let pair = term.as_array().ok_or_else(err)?;
        if pair.len() != 2 {
            return Err(err());
        }
        let coeffs = pair[0].as_array().ok_or_else(err)?;
        if coeffs.len() != color.degree() {
            return Err(AdoError::Parse(format!(
                "coefficient vector has length {}, expected {}",
                coeffs.len(),
                color.degree()
            )));
        }
        let exp = pair[1].as_i64().ok_or_else(err)?;
        let mut c = CycNum::zero(color);
        for (k, rv) in coeffs.iter().enumerate() {
            let r = parse_rational(rv.as_str().ok_or_else(err)?)?;
            if !r.is_zero() {
                let term = CycNum::zeta_pow(color, k as i64).scale_by(&r);
                c = &c + &term;
            }
        }
        out = &out + &WeightLaurent::monomial(color, exp, c);
    }
    Ok(out)
}

impl Report {
    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "n": self.n,
            "N": self.color.n(),
            "e": self.e,
            "pipeline": self.pipeline,
            "variable": "t",
            "num": laurent_to_json(self.value.num()),
            "den": laurent_to_json(self.value.den()),
        })
    }

    pub fn from_json(v: &Value) -> Result<Report> {
        let err = |what: &str| AdoError::Parse(format!("report JSON missing {what}"));
        let color = Color(v.get("N").and_then(Value::as_u64).ok_or_else(|| err("N"))? as u32);
        if v.get("variable").and_then(Value::as_str) != Some("t") {
            return Err(AdoError::Parse("report variable must be \"t\"".into()));
        }
        let num = laurent_from_json(color, v.get("num").ok_or_else(|| err("num"))?)?;
        let den = laurent_from_json(color, v.get("den").ok_or_else(|| err("den"))?)?;
        Ok(Report {
            name: v
                .get("name")
                .and_then(Value::as_str)
                .unwrap_or("")
                .to_string(),
            n: v.get("n").and_then(Value::as_u64).ok_or_else(|| err("n"))? as usize,
            color,
            e: v.get("e").and_then(Value::as_i64).ok_or_else(|| err("e"))?,
            pipeline: v
                .get("pipeline")
                .and_then(Value::as_str)
                .ok_or_else(|| err("pipeline"))?
                .to_string(),
            value: WeightRat::new(num, den)?,
        })
    }

    /// Human-readable polynomial, in `t` or in `x = t^{−2}` (where odd
    /// `t`-exponents print as half powers of `x`).
    pub fn display_value(&self, var: Variable) -> String {
        let num = laurent_display(self.value.num(), var);
        match self.value.as_laurent() {
            Some(_) => num,
            None => format!("({}) / ({})", num, laurent_display(self.value.den(), var)),
        }
    }

    /// Numeric value at a concrete color `λ`, evaluating `t = exp(iπλ/N)`.
    pub fn eval_at(&self, lambda: f64) -> (Complex64, bool) {
        let t = Complex64::from_polar(1.0, std::f64::consts::PI * lambda / self.color.n() as f64);
        self.value.eval(t)
    }
}

fn power_str(var: Variable, t_exp: i64) -> String {
    match var {
        Variable::T => match t_exp {
            0 => String::new(),
            1 => "*t".into(),
            _ => format!("*t^{t_exp}"),
        },
        Variable::X => {
            // x = t^{−2}
            if t_exp == 0 {
                String::new()
            } else if t_exp % 2 == 0 {
                let e = -t_exp / 2;
                if e == 1 {
                    "*x".into()
                } else {
                    format!("*x^{e}")
                }
            } else {
                format!("*x^({}/2)", -t_exp)
            }
        }
    }
}

fn laurent_display(l: &WeightLaurent, var: Variable) -> String {
    if l.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (e, c) in l.terms() {
        if !out.is_empty() {
            out.push_str(" + ");
        }
        out.push_str(&format!("({c}){}", power_str(var, e)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;
    use crate::invariant::direct_invariant;

    fn sample_report(color: Color, text: &str) -> Report {
        let w = BraidWord::parse(text).unwrap();
        Report {
            name: "sample".into(),
            n: w.strands(),
            color,
            e: w.exponent_sum(),
            pipeline: "direct".into(),
            value: direct_invariant(color, &w).unwrap(),
        }
    }

    #[test]
    fn json_round_trip() {
        for (color, text) in [(Color(2), "1 1 1"), (Color(3), "1 -2 1 -2")] {
            let r = sample_report(color, text);
            let v = r.to_json();
            let back = Report::from_json(&v).unwrap();
            assert_eq!(back, r);
            // and through actual serialization
            let s = serde_json::to_string(&v).unwrap();
            let v2: Value = serde_json::from_str(&s).unwrap();
            assert_eq!(Report::from_json(&v2).unwrap(), r);
        }
    }

    #[test]
    fn json_shape() {
        let r = sample_report(Color(2), "1 1 1");
        let v = r.to_json();
        assert_eq!(v["variable"], "t");
        assert_eq!(v["N"], 2);
        assert_eq!(v["n"], 2);
        assert_eq!(v["e"], 3);
        let num = v["num"].as_array().unwrap();
        // trefoil at N=2: t^{-2} − 1 + t^{2}, three terms, ascending exponents
        assert_eq!(num.len(), 3);
        assert_eq!(num[0][1], -2);
        assert_eq!(num[0][0].as_array().unwrap().len(), Color(2).degree());
    }

    #[test]
    fn malformed_json_rejected() {
        assert!(Report::from_json(&json!({"n": 2})).is_err());
        assert!(Report::from_json(&json!({
            "name": "x", "n": 2, "N": 2, "e": 0, "pipeline": "direct",
            "variable": "x", "num": [], "den": []
        }))
        .is_err());
        assert!(Report::from_json(&json!({
            "name": "x", "n": 2, "N": 2, "e": 0, "pipeline": "direct",
            "variable": "t", "num": [[["1"], 0]], "den": [[["1", "0"], 0]]
        }))
        .is_err());
    }

    #[test]
    fn display_variables() {
        let r = sample_report(Color(2), "1 1 1");
        let in_t = r.display_value(Variable::T);
        assert_eq!(in_t, "(1)*t^-2 + (-1) + (1)*t^2");
        let in_x = r.display_value(Variable::X);
        assert_eq!(in_x, "(1)*x + (-1) + (1)*x^-1");
    }

    #[test]
    fn half_powers_in_x() {
        assert_eq!(power_str(Variable::X, 1), "*x^(-1/2)");
        assert_eq!(power_str(Variable::X, -3), "*x^(3/2)");
        assert_eq!(power_str(Variable::X, -2), "*x");
    }

    #[test]
    fn numeric_eval() {
        // unknot evaluates to 1 at any λ
        let r = sample_report(Color(3), "1 2");
        let (v, ill) = r.eval_at(0.37);
        assert!(!ill);
        assert!((v - Complex64::new(1.0, 0.0)).norm() < 1e-12);
    }
}
