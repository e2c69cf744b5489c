//! `construct` pipelines: stages separated by `|`, applied left to right.
//!
//! The first stage produces a value; every later stage transforms it.

use num_complex::Complex64;

use halfplane::io::{MatroidJson, PolynomialJson};
use halfplane::matroid::{graphic_matroid, support_matroid, transversal_matroid, Graph};
use halfplane::poly::{
    parallel_connection, principal_coextension, principal_cotruncation, principal_extension, principal_truncation,
    series_connection, two_sum,
};
use halfplane::repr::{det_construction, per_construction};
use halfplane::{subset, GeneralPolynomial, Matroid, MultiAffinePolynomial};

use crate::input::{self, AnyPoly};
use crate::CliError;

#[derive(Clone, Debug)]
pub enum Value {
    Poly(MultiAffinePolynomial),
    General(GeneralPolynomial),
    Matroid(Matroid),
}

impl Value {
    pub fn to_json(&self) -> serde_json::Value {
        let v = match self {
            Value::Poly(p) => serde_json::to_value(PolynomialJson::from_multiaffine(p)),
            Value::General(g) => serde_json::to_value(PolynomialJson::from_general(g)),
            Value::Matroid(m) => serde_json::to_value(MatroidJson::from_matroid(m)),
        };
        v.expect("serializable value")
    }

    fn poly(self) -> Result<MultiAffinePolynomial, CliError> {
        match self {
            Value::Poly(p) => Ok(p),
            Value::Matroid(m) => Ok(m.basis_polynomial()),
            Value::General(g) => Ok(g.to_multiaffine()?),
        }
    }

    fn general(self) -> GeneralPolynomial {
        match self {
            Value::Poly(p) => p.to_general(),
            Value::Matroid(m) => m.basis_polynomial().to_general(),
            Value::General(g) => g,
        }
    }

    fn n(&self) -> usize {
        match self {
            Value::Poly(p) => p.n(),
            Value::General(g) => g.n(),
            Value::Matroid(m) => m.n(),
        }
    }
}

impl From<AnyPoly> for Value {
    fn from(p: AnyPoly) -> Self {
        match p {
            AnyPoly::Multi(p) => Value::Poly(p),
            AnyPoly::General(g) => Value::General(g),
        }
    }
}

fn arity(args: &[&str], k: usize, usage: &str) -> Result<(), CliError> {
    if args.len() == k {
        Ok(())
    } else {
        Err(CliError::Input(format!("usage: {usage}")))
    }
}

fn count(arg: &str) -> Result<usize, CliError> {
    arg.parse().map_err(|_| CliError::Input(format!("bad count `{arg}`")))
}

fn source(op: &str, args: &[&str]) -> Result<Value, CliError> {
    Ok(match op {
        "basis" => {
            arity(args, 1, "basis NAME|FILE")?;
            Value::Poly(input::matroid(args[0])?.basis_polynomial())
        }
        "matroid" => {
            arity(args, 1, "matroid NAME|FILE")?;
            Value::Matroid(input::matroid(args[0])?)
        }
        "indep" => {
            arity(args, 1, "indep NAME|FILE")?;
            Value::Poly(input::matroid(args[0])?.independent_set_polynomial())
        }
        "poly" => {
            arity(args, 1, "poly FILE")?;
            input::polynomial_file(args[0])?.into()
        }
        "detpoly" => {
            arity(args, 1, "detpoly FILE")?;
            Value::Poly(det_construction(&input::complex_matrix(args[0])?)?)
        }
        "perpoly" => {
            arity(args, 1, "perpoly FILE")?;
            Value::Poly(per_construction(&input::nonneg_matrix(args[0])?)?)
        }
        "transversal" => {
            arity(args, 1, "transversal NAME|FILE")?;
            Value::Matroid(transversal_matroid(&input::presentation(args[0])?))
        }
        "complete" => {
            arity(args, 1, "complete K")?;
            Value::Matroid(graphic_matroid(&Graph::complete(count(args[0])?)?))
        }
        "elementary" => {
            arity(args, 2, "elementary K N")?;
            Value::Poly(MultiAffinePolynomial::elementary_symmetric(count(args[0])?, count(args[1])?)?)
        }
        _ => return Err(CliError::Input(format!("`{op}` cannot start a pipeline"))),
    })
}

fn connect(op: &str, value: Value, args: &[&str]) -> Result<Value, CliError> {
    arity(args, 3, &format!("{op} NAME|FILE E F"))?;
    let (e, f) = (input::element(args[1])?, input::element(args[2])?);
    if let Value::Matroid(m) = &value {
        let other = input::matroid(args[0])?;
        let glued = match op {
            "parallel" => m.parallel_connection(e, &other, f)?,
            "series" => m.series_connection(e, &other, f)?,
            _ => m.two_sum(e, &other, f)?,
        };
        return Ok(Value::Matroid(glued.value));
    }
    let AnyPoly::Multi(q) = input::polynomial(args[0])? else {
        return Err(CliError::Input(format!("{op} needs a multiaffine operand")));
    };
    let p = value.poly()?;
    let glued = match op {
        "parallel" => parallel_connection(&p, e, &q, f)?,
        "series" => series_connection(&p, e, &q, f)?,
        _ => two_sum(&p, e, &q, f)?,
    };
    Ok(Value::Poly(glued.value))
}

fn transform(op: &str, value: Value, args: &[&str]) -> Result<Value, CliError> {
    let n = value.n();
    let set_arg = |usage: &str| -> Result<u64, CliError> {
        match args {
            [] => Ok(subset::full(n)),
            [s] => input::element_set(s, n),
            _ => Err(CliError::Input(format!("usage: {usage}"))),
        }
    };
    Ok(match op {
        "dual" => {
            arity(args, 0, "dual")?;
            match value {
                Value::Matroid(m) => Value::Matroid(m.dual()),
                v => Value::Poly(v.poly()?.dual()),
            }
        }
        "delete" | "contract" => {
            arity(args, 1, &format!("{op} E"))?;
            let e = input::element(args[0])?;
            match (op, value) {
                ("delete", Value::Matroid(m)) => Value::Matroid(m.delete(e)?),
                ("contract", Value::Matroid(m)) => Value::Matroid(m.contract(e)?),
                ("delete", v) => Value::Poly(v.poly()?.delete(e)?),
                (_, v) => Value::Poly(v.poly()?.contract(e)?),
            }
        }
        "relax" => {
            arity(args, 1, "relax SET")?;
            let h = input::element_set(args[0], n)?;
            match value {
                Value::Matroid(m) => Value::Matroid(m.relax(h)?),
                v => {
                    let p = v.poly()?;
                    // validates that h is a circuit-hyperplane of the support
                    support_matroid(&p)?.relax(h)?;
                    let term = MultiAffinePolynomial::from_terms(n, [(h, Complex64::new(1.0, 0.0))])?;
                    Value::Poly(p.add(&term)?)
                }
            }
        }
        "support" => {
            arity(args, 0, "support")?;
            Value::Matroid(support_matroid(&value.poly()?)?)
        }
        "basis" => {
            arity(args, 0, "basis")?;
            Value::Poly(value.poly()?)
        }
        "trunc" | "cotrunc" | "extend" | "coextend" => {
            arity(args, 1, &format!("{op} WEIGHTS"))?;
            let lambda = input::weights(args[0], n)?;
            let p = value.poly()?;
            Value::Poly(match op {
                "trunc" => principal_truncation(&p, &lambda)?,
                "cotrunc" => principal_cotruncation(&p, &lambda)?,
                "extend" => principal_extension(&p, &lambda)?,
                _ => principal_coextension(&p, &lambda)?,
            })
        }
        "flat" => {
            let a = set_arg("flat [SET|all]")?;
            Value::General(value.general().multiaffine_part(a)?)
        }
        "fold" => {
            let a = set_arg("fold [SET|all]")?;
            Value::General(value.general().fold_mod2(a)?)
        }
        "leading" => {
            arity(args, 0, "leading")?;
            match value {
                Value::General(g) => Value::General(g.leading_part()),
                v => Value::Poly(v.poly()?.leading_part()),
            }
        }
        "mul" => {
            arity(args, 1, "mul NAME|FILE")?;
            Value::General(value.general().mul(&input::polynomial(args[0])?.general())?)
        }
        "conv" => {
            arity(args, 1, "conv NAME|FILE")?;
            let AnyPoly::Multi(q) = input::polynomial(args[0])? else {
                return Err(CliError::Input("conv needs a multiaffine operand".into()));
            };
            Value::Poly(value.poly()?.convolution(&q)?)
        }
        "parallel" | "series" | "twosum" => connect(op, value, args)?,
        "multiaffine" => {
            arity(args, 0, "multiaffine")?;
            Value::Poly(value.poly()?)
        }
        _ => return Err(CliError::Input(format!("unknown operation `{op}`"))),
    })
}

/// Run a pipeline; errors name the failing stage (1-based).
pub fn run(script: &str) -> Result<Value, CliError> {
    let mut value: Option<Value> = None;
    for (i, stage) in script.split('|').enumerate() {
        let words: Vec<&str> = stage.split_whitespace().collect();
        let Some((op, args)) = words.split_first() else {
            return Err(CliError::Input(format!("step {}: empty stage", i + 1)));
        };
        let step = match value.take() {
            None => source(op, args),
            Some(v) => transform(op, v, args),
        };
        value = Some(step.map_err(|e| CliError::Step { step: i + 1, stage: stage.trim().to_string(), source: Box::new(e) })?);
    }
    value.ok_or_else(|| CliError::Input("empty pipeline".into()))
}
