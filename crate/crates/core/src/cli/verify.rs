//! Exhaustive invariant sweeps over all partitions of one size.
//!
//! Work items (pairs or triples) are spread over a rayon pool; results are
//! gathered in input order, so the summary does not depend on the worker
//! count.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Debug;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::barvinok::{closed_form_e, maximize_g_2d, maximize_g_3d, maximize_h_binary, maximize_h_binary_2d, DEFAULT_TOL};
use crate::bounds::{
    bound_binary_with, bound_ct3_with, bound_dimension, bound_kostka_chain_with, bound_multi_lr, ct3_closed_form,
    kostka_chain_sum, lower_bound_pyramid_with, BoundValue,
};
use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partitions::{factorial, generate_partitions, Count, Partition};
use crate::symfun::{character, dim_irrep, kostka, kronecker, kronecker_via_vallejo};
use crate::tables::{count_binary_2d, count_binary_3d_with, count_tables_2d, count_tables_3d_with};

/// Relative slack for comparisons between floating-point bounds.
const FLOAT_SLACK: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    /// Pyr ≤ g ≤ every upper bound, plus `f^ν ≤ B(λ,λ′,ν)`.
    Sandwich,
    /// `T(λ,µ) = Σ_ν K(ν,λ)K(ν,µ)` and the Kostka-vs-table bounds.
    Rsk,
    /// Kostka monotonicity in dominance, and the order axioms.
    Dominance,
    /// `T` (2D and 3D) and `G` monotone under majorization.
    Majorization,
    /// Barvinok bounds cover exact counts; uniform margins match `E`.
    Barvinok,
    /// The inverse-Kostka route to `g` agrees with the character formula.
    Vallejo,
    /// Permutation and transposition symmetries, character orthogonality.
    Symmetry,
}

impl Suite {
    pub const ALL: [Suite; 7] =
        [Suite::Sandwich, Suite::Rsk, Suite::Dominance, Suite::Majorization, Suite::Barvinok, Suite::Vallejo, Suite::Symmetry];
}

/// One failed check: which objects, which inequality, and both sides.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub suite: Suite,
    pub subject: String,
    pub check: String,
    pub lhs: String,
    pub rhs: String,
}

/// How often an upper bound was available, the smallest, and exact.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Tightness {
    pub available: u64,
    pub tightest: u64,
    pub equal_to_exact: u64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteSummary {
    pub suite: Suite,
    pub checked: u64,
    pub violations: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepResult {
    pub n: usize,
    pub checked: u64,
    pub suites: Vec<SuiteSummary>,
    pub violations: Vec<Violation>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub tightness: BTreeMap<String, Tightness>,
    /// Not serialized; the command prints it on stderr.
    #[serde(skip)]
    pub wall_time: Duration,
}

impl SweepResult {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Default)]
struct Tally {
    checked: u64,
    violations: Vec<Violation>,
    tightness: BTreeMap<String, Tightness>,
}

impl Tally {
    fn check(&mut self, ok: bool, violation: impl FnOnce() -> Violation) {
        self.checked += 1;
        if !ok {
            self.violations.push(violation());
        }
    }

    fn merge(&mut self, other: Tally) {
        self.checked += other.checked;
        self.violations.extend(other.violations);
        for (k, t) in other.tightness {
            let e = self.tightness.entry(k).or_default();
            e.available += t.available;
            e.tightest += t.tightest;
            e.equal_to_exact += t.equal_to_exact;
        }
    }
}

fn violation(suite: Suite, subject: impl Into<String>, check: &str, lhs: impl ToString, rhs: impl ToString) -> Violation {
    Violation { suite, subject: subject.into(), check: check.into(), lhs: lhs.to_string(), rhs: rhs.to_string() }
}

fn subject<P: Debug>(ps: &[P]) -> String {
    ps.iter().map(|p| format!("{p:?}")).collect::<Vec<_>>().join(" ")
}

/// Runs `f` on every item in parallel and merges the tallies in order.
fn sweep<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<Tally> + Sync + Send) -> Result<Tally> {
    let parts: Vec<Tally> = items.par_iter().map(f).collect::<Result<_>>()?;
    let mut total = Tally::default();
    for p in parts {
        total.merge(p);
    }
    Ok(total)
}

fn pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (0..k).map(move |j| (i, j))).collect()
}

fn triples(k: usize) -> Vec<(usize, usize, usize)> {
    (0..k).flat_map(|i| (0..k).flat_map(move |j| (0..k).map(move |l| (i, j, l)))).collect()
}

/// `dom[i][j]` iff `ps[j] ⊴ ps[i]`.
fn dominance_matrix(ps: &[Partition]) -> Result<Vec<Vec<bool>>> {
    ps.iter().map(|a| ps.iter().map(|b| b.dominated_by(a)).collect()).collect()
}

/// Runs the selected suites on all partitions of `n` with `workers` threads.
pub fn run_verify(n: usize, suites: &[Suite], workers: usize, limits: &Limits) -> Result<SweepResult> {
    let start = Instant::now();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .map_err(|e| Error::InvalidArgument(format!("cannot start {workers} workers: {e}")))?;
    let mut selected = suites.to_vec();
    selected.sort();
    selected.dedup();
    let mut result = SweepResult {
        n,
        checked: 0,
        suites: Vec::new(),
        violations: Vec::new(),
        tightness: BTreeMap::new(),
        wall_time: Duration::ZERO,
    };
    for suite in selected {
        let tally = pool.install(|| run_suite(suite, n, limits))?;
        result.checked += tally.checked;
        result.suites.push(SuiteSummary { suite, checked: tally.checked, violations: tally.violations.len() });
        result.violations.extend(tally.violations);
        for (k, t) in tally.tightness {
            result.tightness.insert(k, t);
        }
    }
    result.wall_time = start.elapsed();
    Ok(result)
}

fn run_suite(suite: Suite, n: usize, limits: &Limits) -> Result<Tally> {
    let ps = generate_partitions(n, None, None);
    match suite {
        Suite::Sandwich => sandwich(n, &ps, limits),
        Suite::Rsk => rsk(n, &ps, limits),
        Suite::Dominance => dominance(&ps),
        Suite::Majorization => majorization(n, &ps, limits),
        Suite::Barvinok => barvinok(n, &ps, limits),
        Suite::Vallejo => vallejo(n, &ps, limits),
        Suite::Symmetry => symmetry(n, &ps, limits),
    }
}

fn sandwich(n: usize, ps: &[Partition], limits: &Limits) -> Result<Tally> {
    const S: Suite = Suite::Sandwich;
    Limits::check("n for the sandwich sweep", n, limits.kronecker_n.min(limits.binary_n).min(limits.tables_n))?;
    let mut total = sweep(&triples(ps.len()), |&(i, j, k)| {
        let (a, b, c) = (&ps[i], &ps[j], &ps[k]);
        let who = || subject(&[a, b, c]);
        let mut t = Tally::default();
        let g = kronecker(a, b, c)?;
        let pyr = lower_bound_pyramid_with(a, b, c, limits)?;
        t.check(pyr <= g, || violation(S, who(), "pyramid ≤ g", &pyr, &g));
        let uppers: [(&str, BoundValue); 7] = [
            ("dimension", BoundValue::Exact(bound_dimension(a, b, c)?)),
            ("kostka_chain", bound_kostka_chain_with(a, b, c, limits)?.value),
            ("kostka_sum", BoundValue::Exact(kostka_chain_sum(a, b, c, limits)?)),
            ("ct3", bound_ct3_with(a, b, c, limits)?.value),
            ("ct3_closed_form", BoundValue::Log(ct3_closed_form(a, b, c)?)),
            ("binary", BoundValue::Exact(bound_binary_with(a, b, c, limits)?)),
            ("multi_lr", BoundValue::Log(bound_multi_lr(a, b, c)?.bound)),
        ];
        let mut best = 0;
        for (idx, (name, value)) in uppers.iter().enumerate() {
            t.check(value.at_least(&g), || violation(S, who(), &format!("g ≤ {name}"), &g, value.approx()));
            let e = t.tightness.entry(name.to_string()).or_default();
            e.available += 1;
            let exact = match value {
                BoundValue::Exact(v) => *v == g,
                BoundValue::Log(l) => l.compare_count(&g).is_none(),
            };
            if exact {
                e.equal_to_exact += 1;
            }
            if value.cmp_value(&uppers[best].1) == Ordering::Less {
                best = idx;
            }
        }
        t.tightness.entry(uppers[best].0.to_string()).or_default().tightest += 1;
        Ok(t)
    })?;
    // f^ν ≤ B(λ, λ′, ν)
    total.merge(sweep(&pairs(ps.len()), |&(i, k)| {
        let (a, c) = (&ps[i], &ps[k]);
        let mut t = Tally::default();
        let b = count_binary_3d_with(a, &a.conjugate(), c, limits)?;
        let f = dim_irrep(c);
        t.check(f <= b, || violation(S, subject(&[a, c]), "f^ν ≤ B(λ,λ′,ν)", &f, &b));
        Ok(t)
    })?);
    Ok(total)
}

fn rsk(n: usize, ps: &[Partition], limits: &Limits) -> Result<Tally> {
    const S: Suite = Suite::Rsk;
    Limits::check("n for the RSK sweep", n, limits.tables_n.min(limits.binary_n))?;
    sweep(&pairs(ps.len()), |&(i, j)| {
        let (a, b) = (&ps[i], &ps[j]);
        let who = || subject(&[a, b]);
        let mut t = Tally::default();
        let tab = count_tables_2d(a, b)?;
        let rsk: Count = ps.iter().map(|nu| kostka(nu, a) * kostka(nu, b)).sum();
        t.check(tab == rsk, || violation(S, who(), "T(λ,µ) = Σ_ν K(ν,λ)K(ν,µ)", &tab, &rsk));
        let k = kostka(a, b);
        t.check(k <= tab, || violation(S, who(), "K(λ,µ) ≤ T(λ,µ)", &k, &tab));
        let bin = count_binary_2d(&a.conjugate(), b)?;
        t.check(k <= bin, || violation(S, who(), "K(λ,µ) ≤ B(λ′,µ)", &k, &bin));
        Ok(t)
    })
}

fn dominance(ps: &[Partition]) -> Result<Tally> {
    const S: Suite = Suite::Dominance;
    let dom = dominance_matrix(ps)?;
    let conj: Vec<Partition> = ps.iter().map(Partition::conjugate).collect();
    sweep(&pairs(ps.len()), |&(i, j)| {
        let (a, b) = (&ps[i], &ps[j]);
        let who = || subject(&[a, b]);
        let mut t = Tally::default();
        // a ⊴ b
        let le = dom[j][i];
        if i == j {
            t.check(le, || violation(S, who(), "λ ⊴ λ", false, true));
        }
        if le && dom[i][j] {
            t.check(i == j, || violation(S, who(), "λ ⊴ µ ⊴ λ ⇒ λ = µ", a, b));
        }
        let rev = conj[j].dominated_by(&conj[i])?;
        t.check(le == rev, || violation(S, who(), "λ ⊴ µ ⇔ µ′ ⊴ λ′", le, rev));
        if le {
            for (k, c) in ps.iter().enumerate() {
                if dom[k][j] {
                    t.check(dom[k][i], || violation(S, subject(&[a, b, c]), "λ ⊴ µ ⊴ ν ⇒ λ ⊴ ν", false, true));
                }
            }
            for nu in ps {
                let (ka, kb) = (kostka(nu, a), kostka(nu, b));
                t.check(ka >= kb, || violation(S, subject(&[nu, a, b]), "K(ν,λ) ≥ K(ν,µ) for λ ⊴ µ", &ka, &kb));
            }
        }
        Ok(t)
    })
}

fn majorization(n: usize, ps: &[Partition], limits: &Limits) -> Result<Tally> {
    const S: Suite = Suite::Majorization;
    Limits::check("n for the majorization sweep", n, limits.tables_n)?;
    let dom = dominance_matrix(ps)?;
    let below: Vec<Vec<usize>> = dom.iter().map(|row| (0..ps.len()).filter(|&k| row[k]).collect()).collect();
    let k = ps.len();
    let pair_list = pairs(k);

    let t2: Vec<Count> = pair_list.par_iter().map(|&(i, j)| count_tables_2d(&ps[i], &ps[j])).collect::<Result<_>>()?;
    let g2: Vec<f64> = pair_list
        .par_iter()
        .map(|&(i, j)| maximize_g_2d(&ps[i], &ps[j], DEFAULT_TOL).map(|r| r.1.log_value))
        .collect::<Result<_>>()?;
    let mut total = sweep(&pair_list, |&(i, j)| {
        let mut t = Tally::default();
        for &a in &below[i] {
            for &b in &below[j] {
                if (a, b) == (i, j) {
                    continue;
                }
                let who = || subject(&[&ps[i], &ps[j], &ps[a], &ps[b]]);
                let (hi, lo) = (&t2[i * k + j], &t2[a * k + b]);
                t.check(hi <= lo, || violation(S, who(), "T(λ,µ) ≤ T(α,β) for λ ⊵ α, µ ⊵ β", hi, lo));
                let (gh, gl) = (g2[i * k + j], g2[a * k + b]);
                t.check(gh <= gl + FLOAT_SLACK * (1.0 + gl.abs()), || {
                    violation(S, who(), "log G(λ,µ) ≤ log G(α,β) for λ ⊵ α, µ ⊵ β", gh, gl)
                });
            }
        }
        Ok(t)
    })?;

    let triple_list = triples(k);
    let t3: Vec<Count> =
        triple_list.par_iter().map(|&(i, j, l)| count_tables_3d_with(&ps[i], &ps[j], &ps[l], limits)).collect::<Result<_>>()?;
    total.merge(sweep(&triple_list, |&(i, j, l)| {
        let mut t = Tally::default();
        let hi = &t3[(i * k + j) * k + l];
        for &a in &below[i] {
            for &b in &below[j] {
                for &c in &below[l] {
                    if (a, b, c) == (i, j, l) {
                        continue;
                    }
                    let lo = &t3[(a * k + b) * k + c];
                    t.check(hi <= lo, || {
                        violation(
                            S,
                            subject(&[&ps[i], &ps[j], &ps[l], &ps[a], &ps[b], &ps[c]]),
                            "T(λ,µ,ν) ≤ T(α,β,γ) for λ ⊵ α, µ ⊵ β, ν ⊵ γ",
                            hi,
                            lo,
                        )
                    });
                }
            }
        }
        Ok(t)
    })?);
    Ok(total)
}

fn barvinok(n: usize, ps: &[Partition], limits: &Limits) -> Result<Tally> {
    const S: Suite = Suite::Barvinok;
    Limits::check("n for the Barvinok sweep", n, limits.tables_n.min(limits.binary_n))?;
    let mut total = sweep(&pairs(ps.len()), |&(i, j)| {
        let (a, b) = (&ps[i], &ps[j]);
        let who = || subject(&[a, b]);
        let mut t = Tally::default();
        let tab = count_tables_2d(a, b)?;
        let g = maximize_g_2d(a, b, DEFAULT_TOL)?.1;
        t.check(g.covers(&tab, 1e-12), || violation(S, who(), "T(λ,µ) ≤ exp g(Z)", &tab, g.approx()));
        let bin = count_binary_2d(a, b)?;
        match maximize_h_binary_2d(a, b, DEFAULT_TOL) {
            Ok((_, h)) => t.check(h.covers(&bin, 1e-12), || violation(S, who(), "B(λ,µ) ≤ exp h(Z)", &bin, h.approx())),
            Err(Error::Infeasible(_)) => t.check(bin.is_zero(), || violation(S, who(), "B(λ,µ) = 0 when infeasible", &bin, 0)),
            Err(e) => return Err(e),
        }
        Ok(t)
    })?;
    total.merge(sweep(&triples(ps.len()), |&(i, j, l)| {
        let (a, b, c) = (&ps[i], &ps[j], &ps[l]);
        let who = || subject(&[a, b, c]);
        let mut t = Tally::default();
        let tab = count_tables_3d_with(a, b, c, limits)?;
        let g = maximize_g_3d(a, b, c, DEFAULT_TOL)?.1;
        t.check(g.covers(&tab, 1e-12), || violation(S, who(), "T(λ,µ,ν) ≤ exp g(Z)", &tab, g.approx()));
        let e = ct3_closed_form(a, b, c)?;
        t.check(g.log_value <= e.log_value + FLOAT_SLACK * (1.0 + e.log_value.abs()), || {
            violation(S, who(), "log G(λ,µ,ν) ≤ log E(ℓmr,n)", g.log_value, e.log_value)
        });
        let bin = count_binary_3d_with(a, b, c, limits)?;
        match maximize_h_binary(a, b, c, DEFAULT_TOL) {
            Ok((_, h)) => {
                t.check(h.covers(&bin, 1e-12), || violation(S, who(), "B(λ,µ,ν) ≤ exp h(Z)", &bin, h.approx()))
            }
            Err(Error::Infeasible(_)) => {
                t.check(bin.is_zero(), || violation(S, who(), "B(λ,µ,ν) = 0 when infeasible", &bin, 0))
            }
            Err(e) => return Err(e),
        }
        Ok(t)
    })?);
    // Uniform margins: log G((n/ℓ)^ℓ, (n/m)^m) = log E(ℓm, n).
    let divisors: Vec<usize> = (1..=n).filter(|&d| n.is_multiple_of(d)).collect();
    let uniform: Vec<(usize, usize)> = divisors.iter().flat_map(|&l| divisors.iter().map(move |&m| (l, m))).collect();
    total.merge(sweep(&uniform, |&(l, m)| {
        let (a, b) = (Partition::rectangle(n / l, l), Partition::rectangle(n / m, m));
        let mut t = Tally::default();
        let g = maximize_g_2d(&a, &b, DEFAULT_TOL)?.1.log_value;
        let e = closed_form_e((l * m) as f64, n as f64)?.log_value;
        t.check((g - e).abs() <= 1e-8 * e.abs().max(1e-300), || {
            violation(S, subject(&[&a, &b]), "log G = log E(ℓm,n) for uniform margins", g, e)
        });
        Ok(t)
    })?);
    Ok(total)
}

fn vallejo(n: usize, ps: &[Partition], limits: &Limits) -> Result<Tally> {
    const S: Suite = Suite::Vallejo;
    Limits::check("n for the Vallejo sweep", n, limits.vallejo_n.min(limits.kronecker_n))?;
    sweep(&triples(ps.len()), |&(i, j, l)| {
        let (a, b, c) = (&ps[i], &ps[j], &ps[l]);
        let mut t = Tally::default();
        let g = kronecker(a, b, c)?;
        let v = kronecker_via_vallejo(a, b, c)?;
        t.check(g == v, || violation(S, subject(&[a, b, c]), "inverse-Kostka formula = character formula", &v, &g));
        Ok(t)
    })
}

fn symmetry(n: usize, ps: &[Partition], limits: &Limits) -> Result<Tally> {
    const S: Suite = Suite::Symmetry;
    Limits::check("n for the symmetry sweep", n, limits.kronecker_n.min(limits.tables_n).min(limits.binary_n))?;
    let mut total = sweep(&triples(ps.len()), |&(i, j, l)| {
        let p = [&ps[i], &ps[j], &ps[l]];
        let who = || subject(&p);
        let mut t = Tally::default();
        let g = kronecker(p[0], p[1], p[2])?;
        let tab = count_tables_3d_with(p[0], p[1], p[2], limits)?;
        let bin = count_binary_3d_with(p[0], p[1], p[2], limits)?;
        for o in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let (x, y, z) = (p[o[0]], p[o[1]], p[o[2]]);
            let gp = kronecker(x, y, z)?;
            t.check(gp == g, || violation(S, who(), &format!("g invariant under {o:?}"), &gp, &g));
            let tp = count_tables_3d_with(x, y, z, limits)?;
            t.check(tp == tab, || violation(S, who(), &format!("T invariant under {o:?}"), &tp, &tab));
            let bp = count_binary_3d_with(x, y, z, limits)?;
            t.check(bp == bin, || violation(S, who(), &format!("B invariant under {o:?}"), &bp, &bin));
        }
        let gt = kronecker(&p[0].conjugate(), &p[1].conjugate(), p[2])?;
        t.check(gt == g, || violation(S, who(), "g(λ′,µ′,ν) = g(λ,µ,ν)", &gt, &g));
        Ok(t)
    })?;
    let nf = BigInt::from(factorial(n));
    let classes: Vec<BigInt> = ps.iter().map(|c| BigInt::from(c.class_size())).collect();
    total.merge(sweep(&pairs(ps.len()), |&(i, j)| {
        let (a, b) = (&ps[i], &ps[j]);
        let mut t = Tally::default();
        let mut s = BigInt::zero();
        for (c, size) in ps.iter().zip(&classes) {
            s += size * character(a, c)? * character(b, c)?;
        }
        let want = if i == j { nf.clone() } else { BigInt::zero() };
        t.check(s == want, || violation(S, subject(&[a, b]), "Σ_µ (n!/z_µ) χ^λ(µ) χ^κ(µ) = n! δ", &s, &want));
        let (t2, t2r) = (count_tables_2d(a, b)?, count_tables_2d(b, a)?);
        t.check(t2 == t2r, || violation(S, subject(&[a, b]), "T(λ,µ) = T(µ,λ)", &t2, &t2r));
        let (b2, b2r) = (count_binary_2d(a, b)?, count_binary_2d(b, a)?);
        t.check(b2 == b2r, || violation(S, subject(&[a, b]), "B(λ,µ) = B(µ,λ)", &b2, &b2r));
        Ok(t)
    })?);
    Ok(total)
}
