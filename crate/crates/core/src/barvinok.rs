//! Upper bounds on table counts by maximizing concave functions over
//! transportation polytopes.
//!
//! For a 3D table the stationary point of `g(Z) = Σ (z+1)log(z+1) − z log z`
//! over the polytope has the form `z_{ijk} = 1/(exp(u_i+v_j+w_k) − 1)`; for
//! the binary objective `h(Z) = Σ −z log z − (1−z) log(1−z)` it is
//! `z_{ijk} = 1/(1 + exp(u_i+v_j+w_k))`. The solver runs coordinate sweeps on
//! the dual variables, then Newton steps on the full dual. The reported
//! [`LogBound`] is the dual objective, which bounds the maximum from above
//! for any dual point.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Count, Partition};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const MAX_SWEEPS: usize = 100_000;

/// Natural logarithm of an upper-bound value.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize)]
pub struct LogBound {
    pub log_value: f64,
}

impl LogBound {
    pub fn new(log_value: f64) -> Self {
        LogBound { log_value }
    }

    pub fn one() -> Self {
        LogBound { log_value: 0.0 }
    }

    /// `ln(count)`, or `-inf` for zero.
    pub fn of_count(count: &Count) -> Self {
        let (lo, hi) = log_bracket(count);
        LogBound { log_value: 0.5 * (lo + hi) }
    }

    pub fn value(&self) -> f64 {
        self.log_value.exp()
    }

    pub fn times(self, other: LogBound) -> LogBound {
        LogBound { log_value: self.log_value + other.log_value }
    }

    /// Whether `exp(self) ≥ count`, allowing a relative slack `slack` on the
    /// logarithm scale (float rounding of the bound itself).
    pub fn covers(&self, count: &Count, slack: f64) -> bool {
        if count.is_zero() {
            return true;
        }
        let (lo, _) = log_bracket(count);
        self.log_value + slack * (1.0 + self.log_value.abs()) >= lo
    }

    /// Order against an exact count; `None` when the float cannot decide.
    pub fn compare_count(&self, count: &Count) -> Option<Ordering> {
        let (lo, hi) = log_bracket(count);
        if self.log_value > hi {
            Some(Ordering::Greater)
        } else if self.log_value < lo {
            Some(Ordering::Less)
        } else {
            None
        }
    }

    /// Scientific rendering with three significant digits, e.g. `1.47e141`.
    pub fn approx(&self) -> String {
        if self.log_value == f64::NEG_INFINITY {
            return "0".into();
        }
        sci_from_log10(self.log_value / std::f64::consts::LN_10)
    }
}

impl fmt::Display for LogBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp({})", self.log_value)
    }
}

/// Interval `[lo, hi]` containing `ln(count)`, from its top 64 bits.
pub fn log_bracket(count: &Count) -> (f64, f64) {
    let bits = count.bits();
    if bits == 0 {
        return (f64::NEG_INFINITY, f64::NEG_INFINITY);
    }
    if bits <= 53 {
        let v = count.to_f64().unwrap_or(f64::INFINITY).ln();
        return (v - 1e-15 * v.abs(), v + 1e-15 * v.abs());
    }
    let shift = bits - 64;
    let top: BigUint = count >> shift;
    let t = top.to_u64().unwrap_or(u64::MAX) as f64;
    let base = shift as f64 * std::f64::consts::LN_2;
    let lo = t.ln() + base;
    let hi = (t + 1.0).ln() + base;
    (lo - 1e-15 * lo.abs(), hi + 1e-15 * hi.abs())
}

fn sci_from_log10(l10: f64) -> String {
    let mut exp = l10.floor();
    let mut mant = 10f64.powf(l10 - exp);
    if (mant * 100.0).round() >= 1000.0 {
        mant /= 10.0;
        exp += 1.0;
    }
    format!("{:.2}e{}", mant, exp as i64)
}

/// Scientific rendering of an exact count with three significant digits,
/// rounded from its decimal expansion.
pub fn count_approx(count: &Count) -> String {
    let digits = count.to_string();
    if digits.len() <= 3 {
        let v: f64 = digits.parse().unwrap_or(0.0);
        if v == 0.0 {
            return "0".into();
        }
        return sci_from_log10(v.log10());
    }
    let lead: u64 = digits[..4].parse().unwrap_or(0);
    let mut mant = (lead + 5) / 10;
    let mut exp = digits.len() - 1;
    if mant >= 1000 {
        mant /= 10;
        exp += 1;
    }
    format!("{}.{:02}e{}", mant / 100, mant % 100, exp)
}

/// A point of the transportation polytope with its objective value.
#[derive(Clone, Debug, Serialize)]
pub struct PolytopePoint {
    pub dims: Vec<usize>,
    /// Row-major entries.
    pub entries: Vec<f64>,
    /// Per margin, the largest absolute deviation of a slice sum.
    pub margin_residuals: Vec<f64>,
    pub objective: f64,
}

impl PolytopePoint {
    pub fn max_residual(&self) -> f64 {
        self.margin_residuals.iter().copied().fold(0.0, f64::max)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Objective {
    /// `g`, tables with unbounded entries.
    Tables,
    /// `h`, 0/1 tables.
    Binary,
}

impl Objective {
    /// Cell value at dual parameter `θ`.
    fn z(self, t: f64) -> f64 {
        match self {
            Objective::Tables => 1.0 / t.exp_m1(),
            Objective::Binary => {
                if t > 0.0 {
                    let e = (-t).exp();
                    e / (1.0 + e)
                } else {
                    1.0 / (1.0 + t.exp())
                }
            }
        }
    }

    /// `−dz/dθ`.
    fn dz(self, z: f64) -> f64 {
        match self {
            Objective::Tables => z * (1.0 + z),
            Objective::Binary => z * (1.0 - z),
        }
    }

    /// Convex conjugate term `ψ(θ) = max_z [F(z) − θz]`.
    fn psi(self, t: f64) -> f64 {
        match self {
            Objective::Tables => -(-(-t).exp_m1()).ln(),
            Objective::Binary => {
                if t > 0.0 {
                    (-t).exp().ln_1p()
                } else {
                    -t + t.exp().ln_1p()
                }
            }
        }
    }

    fn value(self, z: f64) -> f64 {
        fn xlogx(x: f64) -> f64 {
            if x <= 0.0 {
                0.0
            } else {
                x * x.ln()
            }
        }
        match self {
            Objective::Tables => xlogx(z + 1.0) - xlogx(z),
            Objective::Binary => -xlogx(z) - xlogx(1.0 - z),
        }
    }

    fn in_domain(self, t: f64) -> bool {
        match self {
            Objective::Tables => t > 0.0 && t.is_finite(),
            Objective::Binary => t.is_finite(),
        }
    }
}

/// `g(z) = (z+1) log(z+1) − z log z`, summed over entries.
pub fn g_objective(entries: &[f64]) -> f64 {
    entries.iter().map(|&z| Objective::Tables.value(z)).sum()
}

/// `h(z) = −z log z − (1−z) log(1−z)`, summed over entries.
pub fn h_objective(entries: &[f64]) -> f64 {
    entries.iter().map(|&z| Objective::Binary.value(z)).sum()
}

/// One constraint of the dual: a slice of free cells and its target sum.
struct Slice {
    cells: Vec<usize>,
    target: f64,
}

struct Problem {
    kind: Objective,
    dims: [usize; 3],
    margins: [Vec<f64>; 3],
    /// Cells pinned to 0 or 1 by peeling (binary only).
    fixed: Vec<Option<f64>>,
    tol: f64,
}

struct Dual {
    slices: Vec<Slice>,
    /// Slices containing each free cell.
    cell_slices: Vec<Vec<usize>>,
    free: Vec<usize>,
    u: Vec<f64>,
}

impl Problem {
    fn cell(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    fn coords(&self, c: usize) -> [usize; 3] {
        [c / (self.dims[1] * self.dims[2]), (c / self.dims[2]) % self.dims[1], c % self.dims[2]]
    }

    fn slice_cells(&self, axis: usize, idx: usize) -> Vec<usize> {
        let n_cells = self.dims.iter().product();
        (0..n_cells).filter(|&c| self.coords(c)[axis] == idx).collect()
    }

    /// Pins every cell forced by a slice being empty or full; repeats to a
    /// fixed point. Errors if some slice cannot be met.
    fn peel(&mut self) -> Result<()> {
        loop {
            let mut changed = false;
            for axis in 0..3 {
                for idx in 0..self.dims[axis] {
                    let cells = self.slice_cells(axis, idx);
                    let fixed_sum: f64 = cells.iter().filter_map(|&c| self.fixed[c]).sum();
                    let free: Vec<usize> = cells.iter().copied().filter(|&c| self.fixed[c].is_none()).collect();
                    let residual = self.margins[axis][idx] - fixed_sum;
                    if residual < -0.5 || residual > free.len() as f64 + 0.5 {
                        return Err(Error::Infeasible(format!(
                            "slice {idx} of margin {} needs {} ones but only {} cells remain",
                            axis + 1,
                            self.margins[axis][idx],
                            free.len() as f64 + fixed_sum
                        )));
                    }
                    if free.is_empty() {
                        continue;
                    }
                    let pin = if residual < 0.5 {
                        Some(0.0)
                    } else if residual > free.len() as f64 - 0.5 {
                        Some(1.0)
                    } else {
                        None
                    };
                    if let Some(v) = pin {
                        for c in free {
                            self.fixed[c] = Some(v);
                        }
                        changed = true;
                    }
                }
            }
            if !changed {
                return Ok(());
            }
        }
    }

    fn pin_saturated(&mut self, dual: &Dual) -> bool {
        let mut pinned = false;
        for &c in &dual.free {
            let z = self.kind.z(dual.theta(c));
            if z < 1e-12 {
                self.fixed[c] = Some(0.0);
                pinned = true;
            } else if z > 1.0 - 1e-12 {
                self.fixed[c] = Some(1.0);
                pinned = true;
            }
        }
        pinned
    }

    fn dual(&self) -> Dual {
        let n_cells = self.fixed.len();
        let free: Vec<usize> = (0..n_cells).filter(|&c| self.fixed[c].is_none()).collect();
        let mut slices = Vec::new();
        let mut cell_slices = vec![Vec::new(); n_cells];
        for axis in 0..3 {
            for idx in 0..self.dims[axis] {
                let cells = self.slice_cells(axis, idx);
                let fixed_sum: f64 = cells.iter().filter_map(|&c| self.fixed[c]).sum();
                let cells: Vec<usize> = cells.into_iter().filter(|&c| self.fixed[c].is_none()).collect();
                if cells.is_empty() {
                    continue;
                }
                for &c in &cells {
                    cell_slices[c].push(slices.len());
                }
                slices.push(Slice { cells, target: self.margins[axis][idx] - fixed_sum });
            }
        }
        // θ = 1 everywhere is inside both domains
        let u = slices.iter().map(|s| if s.cells.is_empty() { 0.0 } else { 1.0 / 3.0 }).collect();
        Dual { slices, cell_slices, free, u }
    }
}

impl Dual {
    fn theta(&self, c: usize) -> f64 {
        self.cell_slices[c].iter().map(|&s| self.u[s]).sum()
    }

    fn value(&self, kind: Objective) -> f64 {
        let linear: f64 = self.slices.iter().zip(&self.u).map(|(s, u)| s.target * u).sum();
        linear + self.free.iter().map(|&c| kind.psi(self.theta(c))).sum::<f64>()
    }

    /// The objective is non-negative on the polytope, so by weak duality a
    /// negative dual value proves the polytope empty.
    fn check_feasible(&self, kind: Objective) -> Result<()> {
        let v = self.value(kind);
        if v < -1e-9 {
            return Err(Error::Infeasible(format!("dual value {v:.3e} < 0 certifies an empty polytope")));
        }
        Ok(())
    }

    fn max_residual(&self, kind: Objective) -> f64 {
        self.slices
            .iter()
            .map(|s| {
                let sum: f64 = s.cells.iter().map(|&c| kind.z(self.theta(c))).sum();
                (sum - s.target).abs()
            })
            .fold(0.0, f64::max)
    }

    /// Exact minimization of the dual in one coordinate: solves
    /// `Σ_{c ∈ slice} z(t + r_c) = target` by safeguarded Newton.
    fn coordinate_step(&mut self, s: usize, kind: Objective) {
        let rest: Vec<f64> = self.slices[s].cells.iter().map(|&c| self.theta(c) - self.u[s]).collect();
        let target = self.slices[s].target;
        let f = |t: f64| -> (f64, f64) {
            let mut sum = 0.0;
            let mut der = 0.0;
            for r in &rest {
                let z = kind.z(t + r);
                sum += z;
                der += kind.dz(z);
            }
            (sum - target, der)
        };
        // f is decreasing in t; find a bracket [lo, hi] with f(lo) > 0 > f(hi)
        let floor = match kind {
            Objective::Tables => -rest.iter().copied().fold(f64::INFINITY, f64::min),
            Objective::Binary => f64::NEG_INFINITY,
        };
        let mut t = self.u[s];
        if !(t > floor) {
            t = floor + 1.0;
        }
        let mut lo = floor;
        let mut hi = f64::INFINITY;
        for _ in 0..200 {
            let (val, der) = f(t);
            if !val.is_finite() {
                lo = t;
            } else if val.abs() <= 1e-15 * target.max(1.0) {
                break;
            } else if val > 0.0 {
                lo = t;
            } else {
                hi = t;
            }
            let mut next = if val.is_finite() && der > 0.0 { t + val / der } else { f64::NAN };
            if !(next > lo && next < hi) {
                next = match (lo.is_finite(), hi.is_finite()) {
                    (true, true) => 0.5 * (lo + hi),
                    (true, false) => lo + 2.0 * (t - lo).abs().max(1.0),
                    (false, true) => hi - 2.0 * (hi - t).abs().max(1.0),
                    (false, false) => t + 1.0,
                };
            }
            if (next - t).abs() <= 1e-16 * t.abs().max(1.0) {
                t = next;
                break;
            }
            t = next;
        }
        self.u[s] = t;
    }

    fn sweep(&mut self, kind: Objective) {
        for s in 0..self.slices.len() {
            self.coordinate_step(s, kind);
        }
    }

    /// One damped Newton step on the full dual. Returns false if no
    /// decrease was found.
    fn newton_step(&mut self, kind: Objective) -> bool {
        let k = self.slices.len();
        let mut grad: Vec<f64> = self.slices.iter().map(|s| s.target).collect();
        let mut hess = vec![0.0; k * k];
        for &c in &self.free {
            let z = kind.z(self.theta(c));
            let w = kind.dz(z);
            let ss = &self.cell_slices[c];
            for &a in ss {
                grad[a] -= z;
                for &b in ss {
                    hess[a * k + b] += w;
                }
            }
        }
        let trace: f64 = (0..k).map(|i| hess[i * k + i]).sum();
        let ridge = 1e-13 * trace.max(1e-300);
        for i in 0..k {
            hess[i * k + i] += ridge;
        }
        let neg: Vec<f64> = grad.iter().map(|g| -g).collect();
        let Some(step) = cholesky_solve(&hess, &neg, k) else {
            return false;
        };
        let base = self.value(kind);
        let base_residual = grad.iter().fold(0.0f64, |m, g| m.max(g.abs()));
        let slope: f64 = grad.iter().zip(&step).map(|(g, d)| g * d).sum();
        let old = self.u.clone();
        let mut alpha = 1.0;
        for _ in 0..60 {
            for i in 0..k {
                self.u[i] = old[i] + alpha * step[i];
            }
            if self.free.iter().all(|&c| kind.in_domain(self.theta(c))) {
                let v = self.value(kind);
                // the value test loses resolution near the optimum, where
                // the residual still shrinks
                if v.is_finite() && (v <= base + 1e-4 * alpha * slope || self.max_residual(kind) < 0.5 * base_residual) {
                    return true;
                }
            }
            alpha *= 0.5;
        }
        self.u = old;
        false
    }
}

fn cholesky_solve(a: &[f64], b: &[f64], n: usize) -> Option<Vec<f64>> {
    let mut l = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..=i {
            let s: f64 = a[i * n + j] - (0..j).map(|p| l[i * n + p] * l[j * n + p]).sum::<f64>();
            if i == j {
                if s <= 0.0 {
                    return None;
                }
                l[i * n + i] = s.sqrt();
            } else {
                l[i * n + j] = s / l[j * n + j];
            }
        }
    }
    let mut y = vec![0.0; n];
    for i in 0..n {
        y[i] = (b[i] - (0..i).map(|p| l[i * n + p] * y[p]).sum::<f64>()) / l[i * n + i];
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        x[i] = (y[i] - (i + 1..n).map(|p| l[p * n + i] * x[p]).sum::<f64>()) / l[i * n + i];
    }
    Some(x)
}

impl Problem {
    fn new(kind: Objective, margins: [&Partition; 3], tol: f64) -> Result<Self> {
        if !(tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
        }
        let n = margins[0].size();
        if margins.iter().any(|m| m.size() != n) {
            let sizes: Vec<usize> = margins.iter().map(|m| m.size()).collect();
            return Err(Error::sizes("polytope margins need equal sizes", &sizes));
        }
        if n == 0 {
            return Err(Error::InvalidArgument("margins must be non-empty".into()));
        }
        let dims = [margins[0].len(), margins[1].len(), margins[2].len()];
        let to_f = |p: &Partition| p.parts().iter().map(|&x| x as f64).collect::<Vec<f64>>();
        let fixed = vec![None; dims.iter().product()];
        Ok(Problem { kind, dims, margins: [to_f(margins[0]), to_f(margins[1]), to_f(margins[2])], fixed, tol })
    }

    fn point(&self, dual: &Dual) -> PolytopePoint {
        let mut entries: Vec<f64> = self.fixed.iter().map(|f| f.unwrap_or(0.0)).collect();
        for &c in &dual.free {
            entries[c] = self.kind.z(dual.theta(c));
        }
        self.point_from(entries)
    }

    fn point_from(&self, entries: Vec<f64>) -> PolytopePoint {
        let mut sums = [vec![0.0; self.dims[0]], vec![0.0; self.dims[1]], vec![0.0; self.dims[2]]];
        for (c, &z) in entries.iter().enumerate() {
            let [i, j, k] = self.coords(c);
            sums[0][i] += z;
            sums[1][j] += z;
            sums[2][k] += z;
        }
        let margin_residuals = (0..3)
            .map(|a| sums[a].iter().zip(&self.margins[a]).map(|(s, m)| (s - m).abs()).fold(0.0, f64::max))
            .collect();
        let objective = entries.iter().map(|&z| self.kind.value(z)).sum();
        PolytopePoint { dims: self.dims.to_vec(), entries, margin_residuals, objective }
    }

    fn solve(mut self) -> Result<(PolytopePoint, LogBound)> {
        if self.kind == Objective::Binary {
            self.peel()?;
        }
        let mut sweeps = 0;
        let mut residual;
        loop {
            let mut dual = self.dual();
            if dual.free.is_empty() {
                let point = self.point(&dual);
                let bound = LogBound::new(point.objective);
                return Ok((point, bound));
            }
            residual = dual.max_residual(self.kind);
            let mut best = residual;
            let mut since_best = 0;
            while residual >= self.tol && sweeps < MAX_SWEEPS && since_best < 200 {
                // coordinate sweeps until roughly converged, then Newton
                let polish = residual <= 1e-3 || sweeps % 64 == 63;
                if !(polish && dual.newton_step(self.kind)) {
                    dual.sweep(self.kind);
                }
                sweeps += 1;
                residual = dual.max_residual(self.kind);
                if sweeps % 64 == 0 {
                    dual.check_feasible(self.kind)?;
                }
                if residual < 0.5 * best {
                    best = residual;
                    since_best = 0;
                } else {
                    since_best += 1;
                }
            }
            if residual < self.tol {
                let point = self.point(&dual);
                // weak duality: the dual value bounds the maximum from above
                let bound = LogBound::new(dual.value(self.kind).max(point.objective));
                return Ok((point, bound));
            }
            dual.check_feasible(self.kind)?;
            // a stalled binary solve sits on a face of the cube that peeling
            // did not detect: pin the cells that reached it and re-solve
            if self.kind == Objective::Binary && sweeps < MAX_SWEEPS && self.pin_saturated(&dual) {
                self.peel()?;
                continue;
            }
            break;
        }
        if self.kind == Objective::Tables {
            return self.projected_gradient();
        }
        Err(Error::NonConvergence { iterations: sweeps, residual })
    }

    /// Projected gradient ascent for `g`, started from the independence
    /// table. Steps stay in the null space of the margin map, so every
    /// iterate satisfies the margins exactly up to rounding.
    fn projected_gradient(&self) -> Result<(PolytopePoint, LogBound)> {
        let [l, m, r] = self.dims;
        let n: f64 = self.margins[0].iter().sum();
        let mut z = vec![0.0; l * m * r];
        for i in 0..l {
            for j in 0..m {
                for k in 0..r {
                    z[self.cell(i, j, k)] = self.margins[0][i] * self.margins[1][j] * self.margins[2][k] / (n * n);
                }
            }
        }
        let mut value = g_objective(&z);
        let mut norm = f64::INFINITY;
        let mut iterations = 0;
        while iterations < MAX_SWEEPS {
            iterations += 1;
            let grad: Vec<f64> = z.iter().map(|&x| (1.0 / x).ln_1p()).collect();
            let dir = project_null(&grad, self.dims);
            norm = dir.iter().map(|d| d * d).sum::<f64>().sqrt();
            if norm < self.tol {
                break;
            }
            let mut step = 1.0;
            let mut moved = false;
            while step > 1e-18 {
                let cand: Vec<f64> = z.iter().zip(&dir).map(|(x, d)| x + step * d).collect();
                if cand.iter().all(|&x| x > 0.0) {
                    let v = g_objective(&cand);
                    if v > value {
                        z = cand;
                        value = v;
                        moved = true;
                        break;
                    }
                }
                step *= 0.5;
            }
            if !moved {
                break;
            }
        }
        let point = self.point_from(z);
        if norm < 1e-6 && point.max_residual() < self.tol.max(1e-9) {
            let bound = LogBound::new(point.objective);
            return Ok((point, bound));
        }
        Err(Error::NonConvergence { iterations, residual: norm })
    }
}

/// Orthogonal projection onto arrays whose three one-dimensional margins
/// all vanish.
fn project_null(x: &[f64], dims: [usize; 3]) -> Vec<f64> {
    let [l, m, r] = dims;
    let idx = |i: usize, j: usize, k: usize| (i * m + j) * r + k;
    let mut a = vec![0.0; l];
    let mut b = vec![0.0; m];
    let mut c = vec![0.0; r];
    let mut s = 0.0;
    for i in 0..l {
        for j in 0..m {
            for k in 0..r {
                let v = x[idx(i, j, k)];
                a[i] += v;
                b[j] += v;
                c[k] += v;
                s += v;
            }
        }
    }
    let (lf, mf, rf) = (l as f64, m as f64, r as f64);
    let mut out = vec![0.0; x.len()];
    for i in 0..l {
        for j in 0..m {
            for k in 0..r {
                out[idx(i, j, k)] = x[idx(i, j, k)] - a[i] / (mf * rf) - b[j] / (lf * rf) - c[k] / (lf * mf)
                    + 2.0 * s / (lf * mf * rf);
            }
        }
    }
    out
}

fn drop_axis(mut point: PolytopePoint) -> PolytopePoint {
    point.dims.truncate(2);
    point.margin_residuals.truncate(2);
    point
}

/// Maximizer of `g` over `P(λ, µ)`; `T(λ, µ) ≤ exp(bound)`.
pub fn maximize_g_2d(lambda: &Partition, mu: &Partition, tol: f64) -> Result<(PolytopePoint, LogBound)> {
    let single = Partition::row(lambda.size());
    let (point, bound) = Problem::new(Objective::Tables, [lambda, mu, &single], tol)?.solve()?;
    Ok((drop_axis(point), bound))
}

/// Maximizer of `g` over `P(λ, µ, ν)`; `T(λ, µ, ν) ≤ exp(bound)`.
pub fn maximize_g_3d(lambda: &Partition, mu: &Partition, nu: &Partition, tol: f64) -> Result<(PolytopePoint, LogBound)> {
    Problem::new(Objective::Tables, [lambda, mu, nu], tol)?.solve()
}

/// Maximizer of `h` over `Q(λ, µ, ν)`, the polytope cut by the unit cube;
/// `B(λ, µ, ν) ≤ exp(bound)`.
pub fn maximize_h_binary(lambda: &Partition, mu: &Partition, nu: &Partition, tol: f64) -> Result<(PolytopePoint, LogBound)> {
    let (l, m, r) = (lambda.len(), mu.len(), nu.len());
    for (name, p, cap) in [("λ₁ ≤ ℓ(µ)ℓ(ν)", lambda, m * r), ("µ₁ ≤ ℓ(λ)ℓ(ν)", mu, l * r), ("ν₁ ≤ ℓ(λ)ℓ(µ)", nu, l * m)] {
        if p.first() > cap {
            return Err(Error::Infeasible(format!("capacity {name} violated: {} > {cap}", p.first())));
        }
    }
    Problem::new(Objective::Binary, [lambda, mu, nu], tol)?.solve()
}

/// 2D binary bound, the third margin collapsed to a single level.
pub fn maximize_h_binary_2d(lambda: &Partition, mu: &Partition, tol: f64) -> Result<(PolytopePoint, LogBound)> {
    let single = Partition::row(lambda.size());
    let (point, bound) = maximize_h_binary(lambda, mu, &single, tol)?;
    Ok((drop_axis(point), bound))
}

/// `log E(s, w) = w log(1 + s/w) + s log(1 + w/s)`, with `E(s, 0) = 1`.
pub fn closed_form_e(s: f64, w: f64) -> Result<LogBound> {
    if !(s > 0.0) || !(w >= 0.0) {
        return Err(Error::InvalidArgument(format!("E(s, w) needs s > 0 and w ≥ 0, got s = {s}, w = {w}")));
    }
    if w == 0.0 {
        return Ok(LogBound::one());
    }
    Ok(LogBound::new(w * (s / w).ln_1p() + s * (w / s).ln_1p()))
}

/// Log-sum-exp of a sequence of log values.
pub fn log_sum_exp(values: impl IntoIterator<Item = f64>) -> f64 {
    let v: Vec<f64> = values.into_iter().collect();
    let max = v.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + v.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}
