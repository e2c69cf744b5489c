//! Human-readable output for `--pretty`.

use std::fmt::Write;

use num_complex::Complex64;

use halfplane::hpp::Rank2Report;
use halfplane::repr::{NicenessSolution, TransversalWeights};
use halfplane::repro::FixtureReport;
use halfplane::{subset, HppReport, Matroid};

use crate::pipeline::Value;

fn coefficient(c: Complex64) -> String {
    if c.im == 0.0 {
        format!("{}", c.re)
    } else {
        format!("({}{:+}i)", c.re, c.im)
    }
}

fn monomial(vars: impl Iterator<Item = (usize, u32)>) -> String {
    vars.map(|(e, k)| if k == 1 { format!("x{e}") } else { format!("x{e}^{k}") }).collect()
}

fn sum(terms: Vec<(String, Complex64)>) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms
        .into_iter()
        .map(|(m, c)| match (m.is_empty(), c == Complex64::new(1.0, 0.0)) {
            (true, _) => coefficient(c),
            (false, true) => m,
            (false, false) => format!("{}·{m}", coefficient(c)),
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

pub fn value(v: &Value) -> String {
    match v {
        Value::Poly(p) => {
            let terms = p.terms().map(|(s, c)| (monomial(subset::elems(s).map(|e| (e, 1))), c)).collect();
            format!("n = {}\n{}", p.n(), sum(terms))
        }
        Value::General(g) => {
            let terms = g
                .terms()
                .map(|(m, c)| (monomial(m.iter().enumerate().filter(|(_, &k)| k > 0).map(|(e, &k)| (e, k))), c))
                .collect();
            format!("n = {}\n{}", g.n(), sum(terms))
        }
        Value::Matroid(m) => matroid("matroid", m),
    }
}

pub fn matroid(name: &str, m: &Matroid) -> String {
    let mut out = format!("{name}: n = {}, rank = {}, {} bases\n", m.n(), m.rank(), m.num_bases());
    for b in m.bases() {
        let _ = writeln!(out, "  {:?}", subset::to_vec(b));
    }
    out.trim_end().to_string()
}

pub fn hpp(r: &HppReport) -> String {
    let mut out = format!(
        "method {:?}: {} of {} trials gave counterexamples (rate {:.3e}), {} inconclusive, seed {}",
        r.method,
        r.counterexamples,
        r.trials,
        r.rate(),
        r.inconclusive,
        r.seed
    );
    if let (Some(i), Some(cert)) = (r.first_index, &r.certificate) {
        let _ = write!(out, "\nfirst counterexample at trial {i}: {cert:?}");
    }
    out
}

pub fn rank2(r: &Rank2Report) -> String {
    format!(
        "half-plane property: {}\nλ₂ = {:.6e}\neigenvalues: {:?}",
        if r.hpp { "yes" } else { "no" },
        r.lambda2,
        r.eigenvalues
    )
}

pub fn reproduce(reports: &[FixtureReport]) -> String {
    let mut out = String::new();
    for f in reports {
        let _ = writeln!(out, "{:<8} {}  [{}] \"{}\"", f.name, if f.pass { "PASS" } else { "FAIL" }, f.origin, f.quote);
        for c in &f.cases {
            let _ = writeln!(out, "    {:<4} {} (ε = {}, a = {})", if c.pass { "ok" } else { "FAIL" }, c.label, c.eps, c.a);
            for k in c.checks.iter().filter(|k| !k.pass) {
                let _ = writeln!(out, "         {}: {}", k.kind, k.detail);
            }
        }
        for t in &f.thresholds {
            let _ = writeln!(out, "    {:<4} n = {} threshold {}", if t.pass { "ok" } else { "FAIL" }, t.n, t.upper);
        }
        for s in &f.searches {
            let _ = writeln!(
                out,
                "    {:<4} {} {:?}: {} / {} (expected {})",
                if s.pass { "ok" } else { "FAIL" },
                s.matroid,
                s.report.method,
                s.report.counterexamples,
                s.report.trials,
                s.expected
            );
        }
    }
    out.trim_end().to_string()
}

pub fn niceness(s: &NicenessSolution) -> String {
    let weights: Vec<String> = s.weights.iter().map(|w| w.to_string()).collect();
    format!(
        "status: {:?}\nweights: ({})\nequations: {}, solution-set dimension: {}{}",
        s.status,
        weights.join(", "),
        s.equations,
        s.kernel_dim,
        if s.heuristic { " (heuristic)" } else { "" }
    )
}

pub fn transversal(t: &TransversalWeights) -> String {
    let mut out = format!("uniform: {}\n", t.uniform);
    if t.rank_mismatch {
        out.push_str("number of weighted sets differs from the rank\n");
    }
    for (b, v) in &t.values {
        let _ = writeln!(out, "  {b:?}  {v}");
    }
    out.trim_end().to_string()
}
