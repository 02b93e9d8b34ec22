//! Upper and lower bounds on Kronecker coefficients, and a report that sets
//! them next to the exact value.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::Serialize;

use crate::barvinok::{closed_form_e, count_approx, log_bracket, log_sum_exp, maximize_g_3d, LogBound, DEFAULT_TOL};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partitions::{count_partitions, factorial, Count, Partition};
use crate::symfun::{dim_irrep, kostka, kronecker};
use crate::tables::{count_binary_3d_with, count_pyramids_with, count_tables_2d, count_tables_3d_with, for_each_table_2d};

/// A bound that is either an exact integer or known only through its log.
#[derive(Clone, Debug, PartialEq)]
pub enum BoundValue {
    Exact(Count),
    Log(LogBound),
}

impl BoundValue {
    pub fn log_value(&self) -> f64 {
        match self {
            BoundValue::Exact(c) => LogBound::of_count(c).log_value,
            BoundValue::Log(l) => l.log_value,
        }
    }

    pub fn approx(&self) -> String {
        match self {
            BoundValue::Exact(c) => count_approx(c),
            BoundValue::Log(l) => l.approx(),
        }
    }

    /// `self ≥ count`, exactly for integers and with float slack for logs.
    pub fn at_least(&self, count: &Count) -> bool {
        match self {
            BoundValue::Exact(c) => c >= count,
            BoundValue::Log(l) => l.covers(count, 1e-12),
        }
    }

    /// `self ≤ count`; lower bounds are always exact.
    pub fn at_most(&self, count: &Count) -> bool {
        match self {
            BoundValue::Exact(c) => c <= count,
            BoundValue::Log(l) => {
                let (_, hi) = log_bracket(count);
                l.log_value <= hi + 1e-12 * (1.0 + hi.abs())
            }
        }
    }

    pub(crate) fn cmp_value(&self, other: &BoundValue) -> Ordering {
        match (self, other) {
            (BoundValue::Exact(a), BoundValue::Exact(b)) => a.cmp(b),
            _ => self.log_value().partial_cmp(&other.log_value()).unwrap_or(Ordering::Equal),
        }
    }
}

/// A bound value with a short description of how it was obtained.
#[derive(Clone, Debug, PartialEq)]
pub struct Bound {
    pub value: BoundValue,
    pub method: String,
}

fn check_sizes(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<usize> {
    let n = lambda.size();
    if mu.size() != n || nu.size() != n {
        return Err(Error::sizes("Kronecker triples need |λ| = |µ| = |ν|", &[n, mu.size(), nu.size()]));
    }
    Ok(n)
}

/// `⌊f^µ f^ν / f^λ⌋` with the three sorted so that `f^λ` is the largest.
pub fn bound_dimension(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    check_sizes(lambda, mu, nu)?;
    let mut dims = [dim_irrep(lambda), dim_irrep(mu), dim_irrep(nu)];
    dims.sort();
    Ok(&dims[0] * &dims[1] / &dims[2])
}

/// Near-uniform weight with `parts` entries summing to `n`, capped at `n`
/// entries (zeros carry no content).
pub fn near_uniform(n: usize, parts: usize) -> Vec<usize> {
    let k = parts.min(n).max(1);
    let (q, r) = (n / k, n % k);
    (0..k).map(|i| if i < r { q + 1 } else { q }).filter(|&x| x > 0).collect()
}

/// The three ways of choosing which partition plays `ν`.
fn rotations<'a>(l: &'a Partition, m: &'a Partition, n: &'a Partition) -> [(&'a Partition, &'a Partition, &'a Partition, &'static str); 3] {
    [(l, m, n, "ν=3rd"), (m, n, l, "ν=1st"), (n, l, m, "ν=2nd")]
}

/// `T(λ, µ) · K(ν, τ)` with `τ` near-uniform on `ℓm` parts, minimized over
/// the choice of `ν`; above the Kronecker limit, the closed form
/// `E(ℓmr, n) · E(ℓm, n)`.
pub fn bound_kostka_chain(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Bound> {
    bound_kostka_chain_with(lambda, mu, nu, &Limits::default())
}

pub fn bound_kostka_chain_with(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Bound> {
    let n = check_sizes(lambda, mu, nu)?;
    if n <= limits.kronecker_n {
        let mut best: Option<Bound> = None;
        for (a, b, c, tag) in rotations(lambda, mu, nu) {
            let tau = near_uniform(n, a.len() * b.len());
            let v = count_tables_2d(a, b)? * kostka(c, &tau);
            let cand = Bound { value: BoundValue::Exact(v), method: format!("exact T·K(ν,τ), {tag}") };
            if best.as_ref().is_none_or(|b| cand.value.cmp_value(&b.value) == Ordering::Less) {
                best = Some(cand);
            }
        }
        return Ok(best.expect("three rotations"));
    }
    let mut best = f64::INFINITY;
    let mut tag = "";
    for (a, b, c, t) in rotations(lambda, mu, nu) {
        let lm = (a.len() * b.len()) as f64;
        let v = closed_form_e(lm * c.len() as f64, n as f64)?.log_value + closed_form_e(lm, n as f64)?.log_value;
        if v < best {
            best = v;
            tag = t;
        }
    }
    Ok(Bound { value: BoundValue::Log(LogBound::new(best)), method: format!("closed form E(ℓmr,n)·E(ℓm,n), {tag}") })
}

/// `Σ_{B ∈ T(λ,µ)} K(ν, B)`, the first inequality of the Kostka chain.
pub fn kostka_chain_sum(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Count> {
    let n = check_sizes(lambda, mu, nu)?;
    Limits::check("n for the Kostka chain sum", n, limits.tables_n)?;
    let mut hist: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    for_each_table_2d(lambda.parts(), mu.parts(), None, limits.max_states, |b| {
        let mut w: Vec<usize> = b.iter().copied().filter(|&x| x > 0).collect();
        w.sort_unstable_by(|x, y| y.cmp(x));
        *hist.entry(w).or_default() += 1;
    })?;
    Ok(hist.iter().map(|(w, k)| kostka(nu, w) * *k).sum())
}

/// `T(λ, µ, ν)` when countable, else `E(ℓmr, n)`.
pub fn bound_ct3(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Bound> {
    bound_ct3_with(lambda, mu, nu, &Limits::default())
}

pub fn bound_ct3_with(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Bound> {
    let n = check_sizes(lambda, mu, nu)?;
    match count_tables_3d_with(lambda, mu, nu, limits) {
        Ok(t) => Ok(Bound { value: BoundValue::Exact(t), method: "exact T(λ,µ,ν)".into() }),
        Err(Error::LimitExceeded { .. }) => Ok(Bound {
            value: BoundValue::Log(ct3_closed_form(lambda, mu, nu)?),
            method: format!("closed form E(ℓmr,n) (n={n} above the table limit)"),
        }),
        Err(e) => Err(e),
    }
}

/// `E(ℓmr, n) = (1 + ℓmr/n)^n (1 + n/ℓmr)^{ℓmr}`.
pub fn ct3_closed_form(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<LogBound> {
    let n = check_sizes(lambda, mu, nu)?;
    if n == 0 {
        return Ok(LogBound::one());
    }
    closed_form_e((lambda.len() * mu.len() * nu.len()) as f64, n as f64)
}

/// Barvinok's bound `exp g(Z)` on `T(λ, µ, ν)`.
pub fn ct3_barvinok(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<LogBound> {
    check_sizes(lambda, mu, nu)?;
    Ok(maximize_g_3d(lambda, mu, nu, DEFAULT_TOL)?.1)
}

/// `B(λ′, µ′, ν′)`.
pub fn bound_binary(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    bound_binary_with(lambda, mu, nu, &Limits::default())
}

pub fn bound_binary_with(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Count> {
    check_sizes(lambda, mu, nu)?;
    count_binary_3d_with(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate(), limits)
}

/// `Pyr(λ′, µ′, ν′)`, a lower bound.
pub fn lower_bound_pyramid(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    lower_bound_pyramid_with(lambda, mu, nu, &Limits::default())
}

pub fn lower_bound_pyramid_with(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Count> {
    check_sizes(lambda, mu, nu)?;
    count_pyramids_with(&lambda.conjugate(), &mu.conjugate(), &nu.conjugate(), limits)
}

/// One summand of the reduced-coefficient bound.
#[derive(Clone, Debug, Serialize)]
pub struct ReducedTerm {
    pub n: usize,
    pub v: usize,
    pub log_value: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReducedBound {
    pub bound: LogBound,
    pub terms: Vec<ReducedTerm>,
}

/// `log E(s, w)`, zero when `w = 0` and `-inf` when `s = 0 < w` (no
/// partition of `w` with at most zero rows).
fn log_e_or_empty(s: usize, w: usize) -> f64 {
    match (s, w) {
        (_, 0) => 0.0,
        (0, _) => f64::NEG_INFINITY,
        _ => closed_form_e(s as f64, w as f64).map(|e| e.log_value).unwrap_or(f64::NEG_INFINITY),
    }
}

/// Upper bound on the reduced Kronecker coefficient
/// `Σ_n E(ℓmr, n) E(ℓm, v−c) E(ℓr, v−b) E(mr, v−a)` over `n ≤ min(a,b,c)`,
/// `n ≡ a+b+c (mod 2)`, with `v = (a+b+c−n)/2`. Summands where any of
/// `v−a, v−b, v−c` is negative are skipped.
pub fn bound_reduced(alpha: &Partition, beta: &Partition, gamma: &Partition) -> ReducedBound {
    let (a, b, c) = (alpha.size(), beta.size(), gamma.size());
    let (l, m, r) = (alpha.len(), beta.len(), gamma.len());
    let total = a + b + c;
    let mut terms = Vec::new();
    for n in (0..=a.min(b).min(c)).filter(|n| (total - n) % 2 == 0) {
        let v = (total - n) / 2;
        if v < a || v < b || v < c {
            continue;
        }
        let log_value = log_e_or_empty(l * m * r, n)
            + log_e_or_empty(l * m, v - c)
            + log_e_or_empty(l * r, v - b)
            + log_e_or_empty(m * r, v - a);
        if log_value > f64::NEG_INFINITY {
            terms.push(ReducedTerm { n, v, log_value });
        }
    }
    let bound = LogBound::new(log_sum_exp(terms.iter().map(|t| t.log_value)));
    ReducedBound { bound, terms }
}

#[derive(Clone, Debug, Serialize)]
pub struct MultiLrBound {
    pub bound: LogBound,
    /// Position (0, 1, 2) of the partitions used as `λ`, `µ`, `ν`.
    pub order: [usize; 3],
}

/// `log[r! p(n)^{3r−2} n^{r−1} (ℓ+λ₁)^{rℓ²/2} (m+µ₁)^{rm²/2}]` for one
/// assignment of roles.
pub fn multi_lr_log(lambda: &Partition, mu: &Partition, nu: &Partition) -> f64 {
    let n = lambda.size();
    let (l, m, r) = (lambda.len() as f64, mu.len() as f64, nu.len() as f64);
    let pn = LogBound::of_count(&count_partitions(n)).log_value;
    let rf = LogBound::of_count(&factorial(nu.len())).log_value;
    let nf = n as f64;
    let nlog = if n == 0 { 0.0 } else { (r - 1.0) * nf.ln() };
    rf + (3.0 * r - 2.0) * pn
        + nlog
        + r * l * l / 2.0 * (l + lambda.first() as f64).max(1.0).ln()
        + r * m * m / 2.0 * (m + mu.first() as f64).max(1.0).ln()
}

/// The multi-LR bound minimized over the six assignments of roles.
pub fn bound_multi_lr(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<MultiLrBound> {
    check_sizes(lambda, mu, nu)?;
    let ps = [lambda, mu, nu];
    let mut best = MultiLrBound { bound: LogBound::new(f64::INFINITY), order: [0, 1, 2] };
    for order in [[0, 1, 2], [1, 0, 2], [0, 2, 1], [2, 0, 1], [1, 2, 0], [2, 1, 0]] {
        let v = multi_lr_log(ps[order[0]], ps[order[1]], ps[order[2]]);
        if v < best.bound.log_value {
            best = MultiLrBound { bound: LogBound::new(v), order };
        }
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    Upper,
    Lower,
}

/// One line of a [`BoundReport`].
#[derive(Clone, Debug, Serialize)]
pub struct BoundEntry {
    pub name: String,
    pub kind: BoundKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub log_value: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact_value: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub approx: Option<String>,
    pub method: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unavailable: Option<String>,
    #[serde(skip)]
    pub value: Option<BoundValue>,
}

impl BoundEntry {
    fn available(name: &str, kind: BoundKind, value: BoundValue, method: String) -> Self {
        let (log_value, exact_value) = match &value {
            BoundValue::Exact(c) => (None, Some(c.to_string())),
            BoundValue::Log(l) => (Some(l.log_value), None),
        };
        BoundEntry {
            name: name.into(),
            kind,
            log_value,
            exact_value,
            approx: Some(value.approx()),
            method,
            unavailable: None,
            value: Some(value),
        }
    }

    fn missing(name: &str, kind: BoundKind, err: &Error) -> Self {
        BoundEntry {
            name: name.into(),
            kind,
            log_value: None,
            exact_value: None,
            approx: None,
            method: String::new(),
            unavailable: Some(err.to_string()),
            value: None,
        }
    }
}

/// Every bound for one triple, with the exact value when computable.
#[derive(Clone, Debug, Serialize)]
pub struct BoundReport {
    pub triple: [Partition; 3],
    #[serde(skip_serializing_if = "Option::is_none")]
    pub exact: Option<String>,
    pub bounds: Vec<BoundEntry>,
    pub tightest: Option<String>,
    #[serde(skip)]
    pub exact_value: Option<Count>,
}

/// Names accepted by [`compare_all`]'s filter, in report order.
pub const BOUND_NAMES: [&str; 9] =
    ["dimension", "kostka_chain", "kostka_sum", "ct3", "ct3_closed_form", "barvinok_3d", "binary", "multi_lr", "pyramid"];

impl BoundReport {
    /// Entries that contradict the exact value.
    pub fn violations(&self) -> Vec<&BoundEntry> {
        let Some(g) = &self.exact_value else {
            return Vec::new();
        };
        self.bounds
            .iter()
            .filter(|e| match (&e.value, e.kind) {
                (Some(v), BoundKind::Upper) => !v.at_least(g),
                (Some(v), BoundKind::Lower) => !v.at_most(g),
                (None, _) => false,
            })
            .collect()
    }

    pub fn entry(&self, name: &str) -> Option<&BoundEntry> {
        self.bounds.iter().find(|e| e.name == name)
    }

    /// One CSV row per bound: triple, bound_name, kind, log_value,
    /// exact_value, is_tightest.
    pub fn to_csv(&self) -> String {
        let triple = format!("{} | {} | {}", self.triple[0], self.triple[1], self.triple[2]);
        let mut out = String::from("triple,bound_name,kind,log_value,exact_value,is_tightest\n");
        for e in &self.bounds {
            let kind = match e.kind {
                BoundKind::Upper => "upper",
                BoundKind::Lower => "lower",
            };
            let log = e.value.as_ref().map(|v| format!("{}", v.log_value())).unwrap_or_default();
            let exact = e.exact_value.clone().unwrap_or_default();
            let tight = self.tightest.as_deref() == Some(e.name.as_str());
            out.push_str(&format!("\"{triple}\",{},{kind},{log},{exact},{tight}\n", e.name));
        }
        out
    }
}

/// Runs every bound (or those named in `only`) and the exact coefficient
/// when `n` is within the Kronecker limit. Failures of single bounds are
/// recorded as unavailable.
pub fn compare_all(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<BoundReport> {
    compare_selected(lambda, mu, nu, limits, None)
}

pub fn compare_selected(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    limits: &Limits,
    only: Option<&[String]>,
) -> Result<BoundReport> {
    let n = check_sizes(lambda, mu, nu)?;
    if let Some(names) = only {
        if let Some(bad) = names.iter().find(|s| !BOUND_NAMES.contains(&s.as_str())) {
            return Err(Error::InvalidArgument(format!("unknown bound {bad:?}; known: {}", BOUND_NAMES.join(", "))));
        }
    }
    let wanted = |name: &str| only.is_none_or(|names| names.iter().any(|s| s == name));
    let mut bounds = Vec::new();
    let mut push = |name: &str, kind: BoundKind, r: Result<(BoundValue, String)>| {
        if !wanted(name) {
            return;
        }
        bounds.push(match r {
            Ok((v, method)) => BoundEntry::available(name, kind, v, method),
            Err(e) => BoundEntry::missing(name, kind, &e),
        });
    };
    use BoundKind::{Lower, Upper};
    if wanted("dimension") {
        push("dimension", Upper, bound_dimension(lambda, mu, nu).map(|c| (BoundValue::Exact(c), "f^µ·f^ν/f^λ".into())));
    }
    if wanted("kostka_chain") {
        push("kostka_chain", Upper, bound_kostka_chain_with(lambda, mu, nu, limits).map(|b| (b.value, b.method)));
    }
    if wanted("kostka_sum") {
        push(
            "kostka_sum",
            Upper,
            kostka_chain_sum(lambda, mu, nu, limits).map(|c| (BoundValue::Exact(c), "Σ_B K(ν,B) over B ∈ T(λ,µ)".into())),
        );
    }
    if wanted("ct3") {
        push("ct3", Upper, bound_ct3_with(lambda, mu, nu, limits).map(|b| (b.value, b.method)));
    }
    if wanted("ct3_closed_form") {
        push("ct3_closed_form", Upper, ct3_closed_form(lambda, mu, nu).map(|l| (BoundValue::Log(l), "E(ℓmr,n)".into())));
    }
    if wanted("barvinok_3d") {
        push(
            "barvinok_3d",
            Upper,
            ct3_barvinok(lambda, mu, nu).map(|l| (BoundValue::Log(l), "max g(Z) over P(λ,µ,ν), dual value".into())),
        );
    }
    if wanted("binary") {
        push("binary", Upper, bound_binary_with(lambda, mu, nu, limits).map(|c| (BoundValue::Exact(c), "B(λ′,µ′,ν′)".into())));
    }
    if wanted("multi_lr") {
        push(
            "multi_lr",
            Upper,
            bound_multi_lr(lambda, mu, nu).map(|b| {
                let names = ["1st", "2nd", "3rd"];
                let [a, bb, c] = b.order;
                (BoundValue::Log(b.bound), format!("λ={}, µ={}, ν={}", names[a], names[bb], names[c]))
            }),
        );
    }
    if wanted("pyramid") {
        push(
            "pyramid",
            Lower,
            lower_bound_pyramid_with(lambda, mu, nu, limits).map(|c| (BoundValue::Exact(c), "Pyr(λ′,µ′,ν′)".into())),
        );
    }
    let exact_value = if n <= limits.kronecker_n { Some(kronecker(lambda, mu, nu)?) } else { None };
    let mut tightest: Option<&BoundEntry> = None;
    for e in bounds.iter().filter(|e| e.kind == Upper) {
        let Some(v) = &e.value else { continue };
        if tightest.is_none_or(|t| v.cmp_value(t.value.as_ref().expect("available")) == Ordering::Less) {
            tightest = Some(e);
        }
    }
    let tightest = tightest.map(|e| e.name.clone());
    Ok(BoundReport {
        triple: [lambda.clone(), mu.clone(), nu.clone()],
        exact: exact_value.as_ref().map(|g| g.to_string()),
        bounds,
        tightest,
        exact_value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::generate_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    #[test]
    fn dimension_examples() {
        let t = p("2,1");
        assert_eq!(bound_dimension(&t, &t, &t).unwrap(), c(2));
        assert_eq!(bound_dimension(&p("5"), &p("5"), &p("5")).unwrap(), c(1));
        let hook = Partition::hook(4, 3);
        assert_eq!(dim_irrep(&hook), c(20));
        assert_eq!(bound_dimension(&hook, &hook, &hook).unwrap(), c(20));
        assert!(bound_dimension(&t, &t, &p("2")).is_err());
    }

    #[test]
    fn kostka_chain_examples() {
        let t = p("2,1");
        let b = bound_kostka_chain(&t, &t, &t).unwrap();
        // τ = (1,1,1): T((2,1),(2,1)) · f^(2,1) = 2 · 2
        assert_eq!(b.value, BoundValue::Exact(c(4)));
        assert_eq!(near_uniform(3, 4), vec![1, 1, 1]);
        assert_eq!(near_uniform(7, 3), vec![3, 2, 2]);
        let row = Partition::row(30);
        let closed = bound_kostka_chain_with(&row, &row, &row, &Limits { kronecker_n: 10, ..Limits::default() }).unwrap();
        let expect = closed_form_e(1.0, 30.0).unwrap().log_value * 2.0;
        assert!(matches!(closed.value, BoundValue::Log(l) if (l.log_value - expect).abs() < 1e-12));
        assert!(closed.value.log_value() >= 0.0);
    }

    #[test]
    fn chain_inequalities_small_n() {
        let limits = Limits::default();
        for n in 1..=5 {
            let parts = generate_partitions(n, None, None);
            for a in &parts {
                for b in &parts {
                    for d in &parts {
                        let g = kronecker(a, b, d).unwrap();
                        let sum = kostka_chain_sum(a, b, d, &limits).unwrap();
                        let tau = near_uniform(n, a.len() * b.len());
                        let middle = count_tables_2d(a, b).unwrap() * kostka(d, &tau);
                        let last = count_tables_2d(a, b).unwrap() * crate::tables::count_tables_weights(d.parts(), &tau);
                        assert!(g <= sum && sum <= middle && middle <= last, "{a:?} {b:?} {d:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn ct3_examples() {
        let t = p("2,1");
        let b = bound_ct3(&t, &t, &t).unwrap();
        assert!(matches!(&b.value, BoundValue::Exact(v) if *v >= c(1)));
        for n in [5usize, 20, 100] {
            let col = Partition::column(n);
            let row = Partition::row(n);
            let e = ct3_closed_form(&row, &row, &row).unwrap();
            assert!(e.log_value >= 0.0);
            // ℓmr ≤ n gives at most 4^n
            let e2 = ct3_closed_form(&col, &row, &row).unwrap();
            assert!(e2.log_value <= n as f64 * 4f64.ln() + 1e-9);
        }
        let tiny = Limits { tables_n: 2, ..Limits::default() };
        let b = bound_ct3_with(&t, &t, &t, &tiny).unwrap();
        assert!(matches!(b.value, BoundValue::Log(_)));
    }

    #[test]
    fn binary_and_pyramid_examples() {
        let rect = p("2,2,2,2");
        assert_eq!(bound_binary(&rect, &rect, &rect).unwrap(), c(1));
        assert_eq!(lower_bound_pyramid(&rect, &rect, &rect).unwrap(), c(1));
        assert_eq!(kronecker(&rect, &rect, &rect).unwrap(), c(1));
        let hook = Partition::hook(4, 3);
        assert!(bound_binary(&hook, &hook, &hook).unwrap() > factorial(3));
        for n in 1..=4 {
            let row = Partition::row(n);
            assert_eq!(bound_binary(&row, &row, &row).unwrap(), factorial(n) * factorial(n));
        }
        let conj = p("3,3,2,2,1,1,1");
        assert_eq!(lower_bound_pyramid(&conj, &conj, &conj).unwrap(), c(2));
        let rho = p("3,2,1");
        assert_eq!(lower_bound_pyramid(&rho, &rho, &p("2,2,2")).unwrap(), c(0));
    }

    #[test]
    fn reduced_examples() {
        let e = Partition::empty();
        let r = bound_reduced(&e, &e, &e);
        assert_eq!(r.bound.log_value, 0.0);
        assert_eq!(r.terms.len(), 1);
        let one = p("1");
        let r = bound_reduced(&one, &one, &one);
        assert_eq!(r.terms.len(), 1);
        assert_eq!((r.terms[0].n, r.terms[0].v), (1, 1));
        assert!((r.bound.log_value - 4f64.ln()).abs() < 1e-12);
    }

    #[test]
    fn multi_lr_examples() {
        let t = p("2,1");
        let b = bound_multi_lr(&t, &t, &t).unwrap();
        let expect = (2.0 * 3f64.powi(4) * 3.0 * 4f64.powi(4) * 4f64.powi(4)).ln();
        assert!((b.bound.log_value - expect).abs() < 1e-9);
        let row = Partition::row(6);
        let b = bound_multi_lr(&row, &row, &row).unwrap();
        let expect = (11.0f64 * 7.0).ln();
        assert!((b.bound.log_value - expect).abs() < 1e-9);
        // non-decreasing in r with ℓ, m, n fixed
        let lam = p("4,2");
        let vals: Vec<f64> = ["6", "3,3", "2,2,2"].iter().map(|s| multi_lr_log(&lam, &lam, &p(s))).collect();
        assert!(vals.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn report_examples() {
        let limits = Limits::default();
        let t = p("2,1");
        let r = compare_all(&t, &t, &t, &limits).unwrap();
        assert_eq!(r.exact.as_deref(), Some("1"));
        assert!(r.violations().is_empty());
        assert!(r.bounds.iter().all(|e| e.unavailable.is_none()));
        let row = p("4");
        let r = compare_all(&row, &row, &row, &limits).unwrap();
        assert_eq!(r.tightest.as_deref(), Some("dimension"));
        let cube = p("4,4");
        let only = vec!["ct3".to_string()];
        let r = compare_selected(&cube, &cube, &cube, &limits, Some(&only)).unwrap();
        assert_eq!(r.bounds.len(), 1);
        assert!(compare_selected(&cube, &cube, &cube, &limits, Some(&["nope".to_string()])).is_err());
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.starts_with("{\"triple\":[[4,4],[4,4],[4,4]],\"exact\":"));
        assert!(r.to_csv().lines().count() == 2);
    }
}
