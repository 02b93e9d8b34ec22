//! Exact counts of contingency tables with prescribed margins: 2D and 3D
//! tables of non-negative integers, 0/1 tables, and pyramids (downward-closed
//! 0/1 tables, equivalently plane partitions).
//!
//! Axis convention for 3D tables `x_{ijk}`: the first margin is
//! `λ_i = Σ_{j,k} x_{ijk}`, the second `µ_j = Σ_{i,k} x_{ijk}`, the third
//! `ν_k = Σ_{i,j} x_{ijk}`.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::limits::{Limits, StateBudget};
use crate::partitions::{binomial, Count, Partition};

/// Dense `rows × cols` table of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Table2D {
    rows: usize,
    cols: usize,
    entries: Vec<usize>,
}

impl Table2D {
    pub fn new(rows: usize, cols: usize, entries: Vec<usize>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::InvalidArgument(format!("{rows}×{cols} table needs {} entries", rows * cols)));
        }
        Ok(Table2D { rows, cols, entries })
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.entries[i * self.cols + j]
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn row_margins(&self) -> Vec<usize> {
        self.entries.chunks(self.cols.max(1)).map(|r| r.iter().sum()).collect()
    }

    pub fn col_margins(&self) -> Vec<usize> {
        (0..self.cols).map(|j| (0..self.rows).map(|i| self.get(i, j)).sum()).collect()
    }

    pub fn total(&self) -> usize {
        self.entries.iter().sum()
    }

    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|&e| e <= 1)
    }
}

/// Dense `ℓ × m × r` table of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Table3D {
    dims: [usize; 3],
    entries: Vec<usize>,
}

impl Table3D {
    pub fn zeros(dims: [usize; 3]) -> Self {
        Table3D { dims, entries: vec![0; dims[0] * dims[1] * dims[2]] }
    }

    pub fn new(dims: [usize; 3], entries: Vec<usize>) -> Result<Self> {
        if entries.len() != dims.iter().product::<usize>() {
            return Err(Error::InvalidArgument(format!("{dims:?} table has wrong entry count {}", entries.len())));
        }
        Ok(Table3D { dims, entries })
    }

    pub fn dims(&self) -> [usize; 3] {
        self.dims
    }

    fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        (i * self.dims[1] + j) * self.dims[2] + k
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> usize {
        if i >= self.dims[0] || j >= self.dims[1] || k >= self.dims[2] {
            return 0;
        }
        self.entries[self.offset(i, j, k)]
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, v: usize) {
        let o = self.offset(i, j, k);
        self.entries[o] = v;
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// Sums over the 2D slices orthogonal to `axis`.
    pub fn margin(&self, axis: usize) -> Vec<usize> {
        let mut m = vec![0; self.dims[axis]];
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    m[[i, j, k][axis]] += self.get(i, j, k);
                }
            }
        }
        m
    }

    pub fn margins(&self) -> [Vec<usize>; 3] {
        [self.margin(0), self.margin(1), self.margin(2)]
    }

    pub fn is_binary(&self) -> bool {
        self.entries.iter().all(|&e| e <= 1)
    }

    /// Binary and downward closed: every 1 has all its lower neighbours set.
    pub fn is_pyramid(&self) -> bool {
        if !self.is_binary() {
            return false;
        }
        for i in 0..self.dims[0] {
            for j in 0..self.dims[1] {
                for k in 0..self.dims[2] {
                    if self.get(i, j, k) == 1
                        && ((i > 0 && self.get(i - 1, j, k) == 0)
                            || (j > 0 && self.get(i, j - 1, k) == 0)
                            || (k > 0 && self.get(i, j, k - 1) == 0))
                    {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// A downward-closed 0/1 table, stored as its plane partition of column
/// heights: cell `(i, j, k)` is present iff `k < heights[i][j]`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Pyramid {
    heights: Vec<Vec<usize>>,
}

impl Pyramid {
    /// Validates that `heights` is a plane partition (rows and columns weakly
    /// decreasing, no empty rows, no zero entries).
    pub fn from_heights(heights: Vec<Vec<usize>>) -> Result<Self> {
        for (i, row) in heights.iter().enumerate() {
            if row.is_empty() || row.contains(&0) || row.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidArgument(format!("row {i} of {heights:?} is not a partition")));
            }
            if i > 0 {
                let prev = &heights[i - 1];
                if row.len() > prev.len() || row.iter().zip(prev).any(|(a, b)| a > b) {
                    return Err(Error::InvalidArgument(format!("columns of {heights:?} are not weakly decreasing")));
                }
            }
        }
        Ok(Pyramid { heights })
    }

    /// Reads a pyramid off a 3D table, which must be binary and downward closed.
    pub fn from_table(table: &Table3D) -> Result<Self> {
        if !table.is_pyramid() {
            return Err(Error::InvalidArgument("table is not a downward-closed 0/1 table".into()));
        }
        let [l, m, r] = table.dims();
        let heights: Vec<Vec<usize>> = (0..l)
            .map(|i| {
                (0..m)
                    .map(|j| (0..r).take_while(|&k| table.get(i, j, k) == 1).count())
                    .take_while(|&h| h > 0)
                    .collect::<Vec<_>>()
            })
            .take_while(|row| !row.is_empty())
            .collect();
        Pyramid::from_heights(heights)
    }

    pub fn empty() -> Self {
        Pyramid { heights: Vec::new() }
    }

    pub fn heights(&self) -> &[Vec<usize>] {
        &self.heights
    }

    pub fn size(&self) -> usize {
        self.heights.iter().flatten().sum()
    }

    pub fn height(&self, i: usize, j: usize) -> usize {
        self.heights.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn contains(&self, i: usize, j: usize, k: usize) -> bool {
        k < self.height(i, j)
    }

    /// Bounding box `[ℓ, m, r]`.
    pub fn dims(&self) -> [usize; 3] {
        let l = self.heights.len();
        let m = self.heights.first().map_or(0, |r| r.len());
        let r = self.height(0, 0);
        [l, m, r]
    }

    pub fn cells(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for (i, row) in self.heights.iter().enumerate() {
            for (j, &h) in row.iter().enumerate() {
                out.extend((0..h).map(|k| (i, j, k)));
            }
        }
        out
    }

    pub fn to_table(&self) -> Table3D {
        let mut t = Table3D::zeros(self.dims());
        for (i, j, k) in self.cells() {
            t.set(i, j, k, 1);
        }
        t
    }

    /// The three margins `(λ, µ, ν)`; each is a partition.
    pub fn margins(&self) -> (Partition, Partition, Partition) {
        let rows = self.heights.iter().map(|r| r.iter().sum());
        let m = self.dims()[1];
        let cols = (0..m).map(|j| self.heights.iter().map(|r| r.get(j).copied().unwrap_or(0)).sum());
        let r = self.height(0, 0);
        let levels = (0..r).map(|k| self.heights.iter().flatten().filter(|&&h| h > k).count());
        (Partition::from_unsorted(rows), Partition::from_unsorted(cols), Partition::from_unsorted(levels))
    }

    /// Reflection swapping the first two axes.
    pub fn transpose(&self) -> Pyramid {
        let m = self.dims()[1];
        let heights = (0..m)
            .map(|j| self.heights.iter().filter_map(|r| r.get(j).copied()).collect())
            .collect();
        Pyramid { heights }
    }

    /// Cyclic rotation of axes: cell `(i, j, k)` moves to `(j, k, i)`.
    pub fn rotate(&self) -> Pyramid {
        let [l, m, r] = self.dims();
        // new heights h'[a][b] = #{i : (i, a, b) present} = #{i : h[i][a] > b}
        let heights = (0..m)
            .map(|a| {
                (0..r)
                    .map(|b| (0..l).filter(|&i| self.height(i, a) > b).count())
                    .take_while(|&h| h > 0)
                    .collect::<Vec<_>>()
            })
            .take_while(|row| !row.is_empty())
            .collect();
        Pyramid { heights }
    }

    pub fn is_cyclically_symmetric(&self) -> bool {
        self.rotate() == *self
    }

    pub fn is_totally_symmetric(&self) -> bool {
        self.is_cyclically_symmetric() && self.transpose() == *self
    }
}

impl fmt::Debug for Pyramid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pyramid{:?}", self.heights)
    }
}

fn check_sizes(context: &'static str, ps: &[&Partition]) -> Result<usize> {
    let n = ps[0].size();
    if ps.iter().any(|p| p.size() != n) {
        let sizes: Vec<usize> = ps.iter().map(|p| p.size()).collect();
        return Err(Error::sizes(context, &sizes));
    }
    Ok(n)
}

/// Row-by-row counter. The state is the multiset of remaining column
/// deficits, kept sorted so permuted states share one memo entry.
struct RowDp<'a> {
    rows: &'a [usize],
    binary: bool,
    memo: HashMap<(usize, Vec<usize>), Count>,
}

impl<'a> RowDp<'a> {
    fn new(rows: &'a [usize], binary: bool) -> Self {
        RowDp { rows, binary, memo: HashMap::new() }
    }

    fn count(&mut self, i: usize, deficits: Vec<usize>) -> Count {
        if i == self.rows.len() {
            return if deficits.is_empty() { Count::one() } else { Count::zero() };
        }
        let rows_left = self.rows.len() - i;
        if self.binary && deficits.first().is_some_and(|&d| d > rows_left) {
            return Count::zero();
        }
        if rows_left == 1 {
            // the last row is forced
            let ok = deficits.iter().sum::<usize>() == self.rows[i] && (!self.binary || deficits.iter().all(|&d| d <= 1));
            return if ok { Count::one() } else { Count::zero() };
        }
        let key = (i, deficits);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let groups = run_lengths(&key.1);
        let mut total = Count::zero();
        let mut next = Vec::with_capacity(key.1.len());
        let mut outcomes = Vec::new();
        distribute(&groups, 0, self.rows[i], self.binary, &mut next, Count::one(), &mut outcomes);
        for (mut state, ways) in outcomes {
            state.retain(|&d| d > 0);
            state.sort_unstable_by(|a, b| b.cmp(a));
            total += ways * self.count(i + 1, state);
        }
        self.memo.insert(key, total.clone());
        total
    }
}

fn run_lengths(sorted: &[usize]) -> Vec<(usize, usize)> {
    let mut groups: Vec<(usize, usize)> = Vec::new();
    for &d in sorted {
        match groups.last_mut() {
            Some((v, c)) if *v == d => *c += 1,
            _ => groups.push((d, 1)),
        }
    }
    groups
}

/// Splits `left` units of one row over groups of equal-deficit columns.
/// Within a group only how many columns take each amount matters; the
/// number of column choices is the multinomial coefficient.
fn distribute(
    groups: &[(usize, usize)],
    g: usize,
    left: usize,
    binary: bool,
    next: &mut Vec<usize>,
    ways: Count,
    out: &mut Vec<(Vec<usize>, Count)>,
) {
    if g == groups.len() {
        if left == 0 {
            out.push((next.clone(), ways));
        }
        return;
    }
    let (d, c) = groups[g];
    let capacity: usize = groups[g..].iter().map(|&(d, c)| if binary { c } else { d * c }).sum();
    if capacity < left {
        return;
    }
    let max_take = if binary { 1 } else { d };
    split_group(groups, g, d, c, 0, max_take, left, binary, next, ways, out);
}

#[allow(clippy::too_many_arguments)]
fn split_group(
    groups: &[(usize, usize)],
    g: usize,
    d: usize,
    cols: usize,
    amount: usize,
    max_take: usize,
    left: usize,
    binary: bool,
    next: &mut Vec<usize>,
    ways: Count,
    out: &mut Vec<(Vec<usize>, Count)>,
) {
    if cols == 0 {
        distribute(groups, g + 1, left, binary, next, ways, out);
        return;
    }
    if amount > max_take.min(left) {
        return;
    }
    let mark = next.len();
    for k in 0..=cols {
        if k * amount > left {
            break;
        }
        next.truncate(mark);
        next.extend(std::iter::repeat(d - amount).take(k));
        let w = &ways * binomial(cols, k);
        split_group(groups, g, d, cols - k, amount + 1, max_take, left - k * amount, binary, next, w, out);
    }
    next.truncate(mark);
}

fn count_rows_against(rows: &[usize], cols: &[usize], binary: bool) -> Count {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return Count::zero();
    }
    let rows: Vec<usize> = rows.iter().copied().filter(|&r| r > 0).collect();
    let mut deficits: Vec<usize> = cols.iter().copied().filter(|&c| c > 0).collect();
    deficits.sort_unstable_by(|a, b| b.cmp(a));
    if binary && !gale_ryser(&rows, &deficits) {
        return Count::zero();
    }
    RowDp::new(&rows, binary).count(0, deficits)
}

/// Gale–Ryser test for the existence of a 0/1 matrix with the given row
/// sums and (sorted, decreasing) column sums.
pub fn gale_ryser(rows: &[usize], cols_desc: &[usize]) -> bool {
    if rows.iter().sum::<usize>() != cols_desc.iter().sum::<usize>() {
        return false;
    }
    let mut prefix = 0;
    for (k, &c) in cols_desc.iter().enumerate() {
        prefix += c;
        let cap: usize = rows.iter().map(|&r| r.min(k + 1)).sum();
        if prefix > cap {
            return false;
        }
    }
    true
}

/// Tables with row sums `rows` and column sums `cols`, both arbitrary
/// compositions (zeros allowed, order irrelevant). Zero if the totals differ.
pub fn count_tables_weights(rows: &[usize], cols: &[usize]) -> Count {
    count_rows_against(rows, cols, false)
}

/// 0/1 tables with row sums `rows` and column sums `cols`.
pub fn count_binary_weights(rows: &[usize], cols: &[usize]) -> Count {
    count_rows_against(rows, cols, true)
}

/// `T(λ, µ)`: contingency tables with row sums `λ` and column sums `µ`.
pub fn count_tables_2d(lambda: &Partition, mu: &Partition) -> Result<Count> {
    check_sizes("2D tables need |λ| = |µ|", &[lambda, mu])?;
    Ok(count_tables_weights(lambda.parts(), mu.parts()))
}

/// `B(λ, µ)`: 0/1 tables with row sums `λ` and column sums `µ`.
pub fn count_binary_2d(lambda: &Partition, mu: &Partition) -> Result<Count> {
    check_sizes("binary tables need |λ| = |µ|", &[lambda, mu])?;
    Ok(count_binary_weights(lambda.parts(), mu.parts()))
}

/// Calls `visit` with the row-major entries of every table with the given
/// margins whose entries are at most `cap`.
pub fn for_each_table_2d(
    rows: &[usize],
    cols: &[usize],
    cap: Option<usize>,
    budget_cap: usize,
    mut visit: impl FnMut(&[usize]),
) -> Result<()> {
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return Ok(());
    }
    let m = cols.len();
    let mut entries = vec![0; rows.len() * m];
    let mut col_left = cols.to_vec();
    let mut budget = StateBudget::new("2D table enumeration", budget_cap);
    let cap = cap.unwrap_or(usize::MAX);

    #[allow(clippy::too_many_arguments)]
    fn go(
        cell: usize,
        row_left: usize,
        rows: &[usize],
        m: usize,
        cap: usize,
        entries: &mut Vec<usize>,
        col_left: &mut Vec<usize>,
        budget: &mut StateBudget,
        visit: &mut dyn FnMut(&[usize]),
    ) -> Result<()> {
        let (i, j) = (cell / m.max(1), cell % m.max(1));
        if i == rows.len() || m == 0 {
            if col_left.iter().all(|&c| c == 0) {
                budget.tick()?;
                visit(entries);
            }
            return Ok(());
        }
        if j == m - 1 {
            // last column of the row is forced
            if row_left > col_left[j] || row_left > cap {
                return Ok(());
            }
            entries[cell] = row_left;
            col_left[j] -= row_left;
            let next_row = rows.get(i + 1).copied().unwrap_or(0);
            go(cell + 1, next_row, rows, m, cap, entries, col_left, budget, visit)?;
            col_left[j] += row_left;
            return Ok(());
        }
        let room: usize = col_left[j + 1..].iter().map(|&c| c.min(cap)).sum();
        let hi = row_left.min(col_left[j]).min(cap);
        let lo = row_left.saturating_sub(room);
        for v in (lo..=hi).rev() {
            entries[cell] = v;
            col_left[j] -= v;
            go(cell + 1, row_left - v, rows, m, cap, entries, col_left, budget, visit)?;
            col_left[j] += v;
        }
        entries[cell] = 0;
        Ok(())
    }

    go(0, rows.first().copied().unwrap_or(0), rows, m, cap, &mut entries, &mut col_left, &mut budget, &mut visit)
}

type Histogram = Vec<(Vec<usize>, u64)>;

thread_local! {
    static SLICE_HIST: RefCell<HashMap<(Partition, Partition, usize), std::rc::Rc<Histogram>>> =
        RefCell::new(HashMap::new());
    static T2_CACHE: RefCell<HashMap<(Vec<usize>, Vec<usize>, bool), Count>> = RefCell::new(HashMap::new());
}

/// Histogram of the sorted non-zero entries of every `A ∈ T(µ, ν)` with
/// entries at most `cap`.
fn slice_histogram(mu: &Partition, nu: &Partition, cap: usize, limits: &Limits) -> Result<std::rc::Rc<Histogram>> {
    let key = (mu.clone(), nu.clone(), cap);
    if let Some(h) = SLICE_HIST.with(|c| c.borrow().get(&key).cloned()) {
        return Ok(h);
    }
    let mut hist: BTreeMap<Vec<usize>, u64> = BTreeMap::new();
    let cap_opt = if cap == usize::MAX { None } else { Some(cap) };
    for_each_table_2d(mu.parts(), nu.parts(), cap_opt, limits.max_states, |a| {
        let mut flat: Vec<usize> = a.iter().copied().filter(|&x| x > 0).collect();
        flat.sort_unstable_by(|x, y| y.cmp(x));
        *hist.entry(flat).or_default() += 1;
    })?;
    let h = std::rc::Rc::new(hist.into_iter().collect::<Histogram>());
    SLICE_HIST.with(|c| c.borrow_mut().insert(key, h.clone()));
    Ok(h)
}

fn cached_rows_against(rows: &[usize], cols_sorted: &[usize], binary: bool) -> Count {
    let key = (rows.to_vec(), cols_sorted.to_vec(), binary);
    if let Some(v) = T2_CACHE.with(|c| c.borrow().get(&key).cloned()) {
        return v;
    }
    let v = count_rows_against(rows, cols_sorted, binary);
    T2_CACHE.with(|c| c.borrow_mut().insert(key, v.clone()));
    v
}

/// `T(λ, µ, ν)`: 3D contingency tables with the three margins, via
/// `T(λ,µ,ν) = Σ_{A ∈ T(µ,ν)} T(λ, A)` where `A` is flattened into the second
/// margin of a 2D count.
pub fn count_tables_3d(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    count_tables_3d_with(lambda, mu, nu, &Limits::default())
}

pub fn count_tables_3d_with(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Count> {
    let n = check_sizes("3D tables need |λ| = |µ| = |ν|", &[lambda, mu, nu])?;
    Limits::check("n for 3D table counts", n, limits.tables_n)?;
    if n == 0 {
        return Ok(Count::one());
    }
    let hist = slice_histogram(mu, nu, usize::MAX, limits)?;
    let mut total = Count::zero();
    for (flat, mult) in hist.iter() {
        total += cached_rows_against(lambda.parts(), flat, false) * *mult;
    }
    Ok(total)
}

/// `B(λ, µ, ν)`: 3D 0/1 tables with the three margins. Enumerates the
/// projections `A ∈ T(µ,ν)` with entries at most `ℓ(λ)`, then counts the
/// `ℓ(λ) × (ℓ(µ)ℓ(ν))` 0/1 fillings of each, pruned by Gale–Ryser.
pub fn count_binary_3d(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    count_binary_3d_with(lambda, mu, nu, &Limits::default())
}

pub fn count_binary_3d_with(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Count> {
    let n = check_sizes("binary tables need |λ| = |µ| = |ν|", &[lambda, mu, nu])?;
    Limits::check("n for binary table counts", n, limits.binary_n)?;
    if n == 0 {
        return Ok(Count::one());
    }
    // slice capacities: each x-slice holds at most ℓ(µ)ℓ(ν) ones, and so on
    let (l, m, r) = (lambda.len(), mu.len(), nu.len());
    if lambda.first() > m * r || mu.first() > l * r || nu.first() > l * m {
        return Ok(Count::zero());
    }
    let hist = slice_histogram(mu, nu, l, limits)?;
    let mut total = Count::zero();
    for (flat, mult) in hist.iter() {
        total += cached_rows_against(lambda.parts(), flat, true) * *mult;
    }
    Ok(total)
}

/// Calls `visit` on every partition with sum `sum` fitting entrywise under
/// `bound` (and under `col_room`, the per-column space left).
fn for_each_row(bound: &[usize], sum: usize, visit: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
    let mut row = Vec::with_capacity(bound.len());
    fn go(bound: &[usize], left: usize, row: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize]) -> Result<()>) -> Result<()> {
        if left == 0 {
            return visit(row);
        }
        let j = row.len();
        if j == bound.len() {
            return Ok(());
        }
        let cap = bound[j].min(row.last().copied().unwrap_or(usize::MAX)).min(left);
        // the rest must fit in the remaining columns
        let room: usize = (j..bound.len()).map(|c| bound[c].min(cap)).sum();
        if room < left {
            return Ok(());
        }
        for v in (1..=cap).rev() {
            row.push(v);
            go(bound, left - v, row, visit)?;
            row.pop();
        }
        Ok(())
    }
    go(bound, sum, &mut row, visit)
}

/// Every plane partition of `n`, as pyramids.
pub fn plane_partitions(n: usize) -> Vec<Pyramid> {
    let mut out = Vec::new();
    for_each_plane_partition(n, |p| out.push(Pyramid { heights: p.to_vec() }));
    out
}

/// Visits every plane partition of `n` as its rows of heights.
pub fn for_each_plane_partition(n: usize, mut visit: impl FnMut(&[Vec<usize>])) {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    fn go(left: usize, rows: &mut Vec<Vec<usize>>, visit: &mut dyn FnMut(&[Vec<usize>])) {
        if left == 0 {
            visit(rows);
            return;
        }
        let bound: Vec<usize> = match rows.last() {
            Some(prev) => prev.clone(),
            None => vec![left; left],
        };
        let max_sum = bound.iter().sum::<usize>().min(left);
        for s in (1..=max_sum).rev() {
            let mut choices = Vec::new();
            let _ = for_each_row(&bound, s, &mut |r| {
                choices.push(r.to_vec());
                Ok(())
            });
            for r in choices {
                rows.push(r);
                go(left - s, rows, visit);
                rows.pop();
            }
        }
    }
    go(n, &mut rows, &mut visit);
}

/// Number of plane partitions of `n` per margin triple.
pub fn pyramid_margin_histogram(n: usize) -> BTreeMap<(Partition, Partition, Partition), u64> {
    let mut hist = BTreeMap::new();
    for_each_plane_partition(n, |rows| {
        let p = Pyramid { heights: rows.to_vec() };
        *hist.entry(p.margins()).or_default() += 1;
    });
    hist
}

/// Every pyramid with margins `(λ, µ, ν)`.
///
/// Builds the height array row by row (row `i` is a partition of `λ_i`
/// under row `i−1`), pruning on column sums against `µ` and level counts
/// against `ν`.
pub fn enumerate_pyramids(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Vec<Pyramid>> {
    enumerate_pyramids_with(lambda, mu, nu, &Limits::default())
}

pub fn enumerate_pyramids_with(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Vec<Pyramid>> {
    let n = check_sizes("pyramids need |λ| = |µ| = |ν|", &[lambda, mu, nu])?;
    Limits::check("n for pyramid enumeration", n, limits.pyramid_n)?;
    let mut out = Vec::new();
    if n == 0 {
        out.push(Pyramid::empty());
        return Ok(out);
    }
    let mut search = PyramidSearch {
        lambda: lambda.parts(),
        mu: mu.parts(),
        nu: nu.parts(),
        col_used: vec![0; mu.len()],
        level_used: vec![0; nu.len()],
        rows: Vec::new(),
        budget: StateBudget::new("pyramid search", limits.max_states),
    };
    search.run(&mut out)?;
    Ok(out)
}

/// `Pyr(λ, µ, ν)`.
pub fn count_pyramids(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    Ok(Count::from(enumerate_pyramids(lambda, mu, nu)?.len()))
}

pub fn count_pyramids_with(lambda: &Partition, mu: &Partition, nu: &Partition, limits: &Limits) -> Result<Count> {
    Ok(Count::from(enumerate_pyramids_with(lambda, mu, nu, limits)?.len()))
}

struct PyramidSearch<'a> {
    lambda: &'a [usize],
    mu: &'a [usize],
    nu: &'a [usize],
    col_used: Vec<usize>,
    level_used: Vec<usize>,
    rows: Vec<Vec<usize>>,
    budget: StateBudget,
}

impl PyramidSearch<'_> {
    fn run(&mut self, out: &mut Vec<Pyramid>) -> Result<()> {
        let i = self.rows.len();
        if i == self.lambda.len() {
            if self.col_used == self.mu && self.level_used == self.nu {
                out.push(Pyramid { heights: self.rows.clone() });
            }
            return Ok(());
        }
        self.budget.tick()?;
        let rows_after = self.lambda.len() - i - 1;
        let height_cap = self.nu.len();
        let bound: Vec<usize> = match self.rows.last() {
            Some(prev) => prev.iter().enumerate().map(|(j, &h)| h.min(self.mu[j] - self.col_used[j])).collect(),
            None => self.mu.iter().map(|&c| c.min(height_cap)).collect(),
        };
        let mut candidates = Vec::new();
        for_each_row(&bound, self.lambda[i], &mut |row| {
            candidates.push(row.to_vec());
            Ok(())
        })?;
        'next: for row in candidates {
            // later rows sit under this one, so each column can gain at most
            // rows_after × (this height) more
            for (j, &need) in self.mu.iter().enumerate() {
                let h = row.get(j).copied().unwrap_or(0);
                let left = need - self.col_used[j] - h.min(need - self.col_used[j]);
                if h > need - self.col_used[j] || left > rows_after * h {
                    continue 'next;
                }
            }
            let mut levels_ok = true;
            for &h in &row {
                for k in 0..h {
                    self.level_used[k] += 1;
                    if self.level_used[k] > self.nu[k] {
                        levels_ok = false;
                    }
                }
            }
            if levels_ok {
                for (j, &h) in row.iter().enumerate() {
                    self.col_used[j] += h;
                }
                self.rows.push(row.clone());
                let r = self.run(out);
                self.rows.pop();
                for (j, &h) in row.iter().enumerate() {
                    self.col_used[j] -= h;
                }
                r?;
            }
            for &h in &row {
                for k in 0..h {
                    self.level_used[k] -= 1;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{count_plane_partitions, factorial, generate_partitions, staircase};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn c(v: u64) -> Count {
        Count::from(v)
    }

    /// Every ℓ×m×r array with entries in 0..=cap and the given margins.
    fn brute_3d(l: &Partition, m: &Partition, r: &Partition, cap: usize) -> u64 {
        let dims = [l.len(), m.len(), r.len()];
        let cells = dims.iter().product::<usize>();
        let mut left = [l.parts().to_vec(), m.parts().to_vec(), r.parts().to_vec()];
        fn go(idx: usize, cells: usize, cap: usize, dims: [usize; 3], left: &mut [Vec<usize>; 3]) -> u64 {
            if idx == cells {
                return left.iter().all(|v| v.iter().all(|&x| x == 0)) as u64;
            }
            let (i, j, k) = (idx / (dims[1] * dims[2]), (idx / dims[2]) % dims[1], idx % dims[2]);
            let mut total = 0;
            for v in 0..=cap.min(left[0][i]).min(left[1][j]).min(left[2][k]) {
                left[0][i] -= v;
                left[1][j] -= v;
                left[2][k] -= v;
                total += go(idx + 1, cells, cap, dims, left);
                left[0][i] += v;
                left[1][j] += v;
                left[2][k] += v;
            }
            total
        }
        go(0, cells, cap, dims, &mut left)
    }

    #[test]
    fn tables_2d_examples() {
        assert_eq!(count_tables_2d(&p("3,3"), &p("3,3")).unwrap(), c(4));
        assert_eq!(count_tables_2d(&p("1,1,1"), &p("1,1,1")).unwrap(), c(6));
        for mu in generate_partitions(6, None, None) {
            assert_eq!(count_tables_2d(&p("6"), &mu).unwrap(), c(1));
        }
        assert_eq!(count_tables_2d(&Partition::column(7), &Partition::column(7)).unwrap(), factorial(7));
        assert!(count_tables_2d(&p("2"), &p("3")).is_err());
    }

    #[test]
    fn tables_2d_match_enumeration() {
        for n in 1..=7 {
            let parts = generate_partitions(n, None, None);
            for a in &parts {
                for b in &parts {
                    let mut k = 0u64;
                    for_each_table_2d(a.parts(), b.parts(), None, usize::MAX, |_| k += 1).unwrap();
                    assert_eq!(count_tables_2d(a, b).unwrap(), c(k), "{a:?} {b:?}");
                    let mut kb = 0u64;
                    for_each_table_2d(a.parts(), b.parts(), Some(1), usize::MAX, |_| kb += 1).unwrap();
                    assert_eq!(count_binary_2d(a, b).unwrap(), c(kb), "{a:?} {b:?}");
                }
            }
        }
    }

    #[test]
    fn weights_with_zeros_and_order() {
        assert_eq!(count_tables_weights(&[2, 0, 1], &[1, 2]), count_tables_weights(&[2, 1], &[2, 1]));
        assert_eq!(count_tables_weights(&[1, 2], &[3, 0]), c(1));
        assert_eq!(count_tables_weights(&[1, 2], &[2]), c(0));
        assert_eq!(count_binary_weights(&[2, 2], &[2, 1, 1]), c(2));
    }

    #[test]
    fn tables_3d_examples() {
        assert_eq!(count_tables_3d(&p("4"), &p("4"), &p("4")).unwrap(), c(1));
        assert_eq!(count_tables_3d(&p("1,1"), &p("1,1"), &p("1,1")).unwrap(), c(4));
        let t = p("2,1");
        assert_eq!(count_tables_3d(&t, &t, &t).unwrap(), c(brute_3d(&t, &t, &t, 3)));
        assert!(count_tables_3d(&t, &t, &p("2")).is_err());
    }

    #[test]
    fn tables_3d_match_brute_force() {
        for n in 1..=4 {
            let parts = generate_partitions(n, None, None);
            for a in &parts {
                for b in &parts {
                    for d in &parts {
                        assert_eq!(count_tables_3d(a, b, d).unwrap(), c(brute_3d(a, b, d, n)), "{a:?} {b:?} {d:?}");
                        assert_eq!(count_binary_3d(a, b, d).unwrap(), c(brute_3d(a, b, d, 1)), "{a:?} {b:?} {d:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn binary_3d_examples() {
        let cube = p("4,4");
        assert_eq!(count_binary_3d(&cube, &cube, &cube).unwrap(), c(1));
        assert_eq!(count_binary_3d(&p("1,1"), &p("1,1"), &p("1,1")).unwrap(), c(4));
        for n in 2..=5 {
            let row = Partition::row(n);
            assert_eq!(count_binary_3d(&row, &row, &row).unwrap(), c(0));
        }
        // (1^n)^3 binary tables are 3D permutations: (n!)^2
        let col = Partition::column(4);
        assert_eq!(count_binary_3d(&col, &col, &col).unwrap(), factorial(4) * factorial(4));
        // the literal (2,2,2,2) triple is not rigid
        let rect = p("2,2,2,2");
        assert!(count_binary_3d(&rect, &rect, &rect).unwrap() > c(1));
    }

    #[test]
    fn pyramid_examples() {
        let a = p("7,4,2");
        let pyrs = enumerate_pyramids(&a, &a, &a).unwrap();
        assert_eq!(pyrs.len(), 2);
        for pyr in &pyrs {
            assert!(pyr.to_table().is_pyramid());
            assert_eq!(pyr.margins(), (a.clone(), a.clone(), a.clone()));
        }
        assert_ne!(pyrs[0], pyrs[1]);
        assert_eq!(count_pyramids(&p("3"), &p("1,1,1"), &p("3")).unwrap(), c(1));
        assert_eq!(count_pyramids(&p("3"), &p("3"), &p("3")).unwrap(), c(0));
        assert!(count_pyramids(&p("3"), &p("2"), &p("3")).is_err());
        for l in 1..=3 {
            let rho = staircase(l).unwrap();
            for nu in generate_partitions(rho.size(), None, None) {
                let k = count_pyramids(&rho, &rho, &nu).unwrap();
                if nu.len() == 1 {
                    assert_eq!(k, c(1));
                } else {
                    assert_eq!(k, c(0), "{nu:?}");
                }
            }
        }
    }

    #[test]
    fn plane_partitions_sum_to_p2() {
        for n in 0..=10 {
            let hist = pyramid_margin_histogram(n);
            let total: u64 = hist.values().sum();
            assert_eq!(c(total), count_plane_partitions(n));
            for ((a, b, d), k) in hist {
                assert_eq!(count_pyramids(&a, &b, &d).unwrap(), c(k), "{a:?} {b:?} {d:?}");
            }
        }
    }

    #[test]
    fn pyramid_symmetries() {
        let pyrs = plane_partitions(6);
        for pyr in &pyrs {
            let (a, b, d) = pyr.margins();
            let t = pyr.transpose();
            assert_eq!(t.margins(), (b.clone(), a.clone(), d.clone()));
            let r = pyr.rotate();
            assert!(r.to_table().is_pyramid());
            assert_eq!(r.margins(), (b, d, a));
            assert_eq!(r.rotate().rotate(), *pyr);
            assert_eq!(Pyramid::from_table(&pyr.to_table()).unwrap(), *pyr);
        }
    }

    #[test]
    fn invalid_pyramids_rejected() {
        assert!(Pyramid::from_heights(vec![vec![1, 2]]).is_err());
        assert!(Pyramid::from_heights(vec![vec![2], vec![1, 1]]).is_err());
        let mut t = Table3D::zeros([2, 1, 1]);
        t.set(1, 0, 0, 1);
        assert!(!t.is_pyramid());
        assert!(Pyramid::from_table(&t).is_err());
    }

    #[test]
    fn state_cap_is_reported() {
        let tight = Limits { max_states: 3, ..Limits::default() };
        let col = Partition::column(5);
        let err = count_tables_3d_with(&col, &col, &p("3,2"), &tight).unwrap_err();
        assert!(matches!(err, Error::LimitExceeded { .. }));
        let small_n = Limits { tables_n: 3, ..Limits::default() };
        assert!(matches!(count_tables_3d_with(&col, &col, &col, &small_n), Err(Error::LimitExceeded { .. })));
    }
}
