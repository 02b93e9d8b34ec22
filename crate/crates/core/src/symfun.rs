//! Exact representation-theoretic quantities for the symmetric group:
//! dimensions, characters, Kostka and Littlewood–Richardson numbers, the
//! inverse Kostka matrix, and Kronecker / reduced Kronecker coefficients.
//!
//! Recursive quantities are memoized in thread-local tables, so concurrent
//! callers each work on their own cache and always see the same values.

use std::cell::RefCell;
use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{dominance_leq, factorial, generate_partitions, pad_first_row, Count, Partition, SignedCount};

/// Value of an irreducible character on a conjugacy class.
pub type CharacterValue = SignedCount;

/// An ordered list of non-negative integers used as the content of a
/// tableau. Unlike a [`Partition`], order matters and zeros are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeightComposition(Vec<usize>);

impl WeightComposition {
    pub fn new(entries: Vec<usize>) -> Self {
        WeightComposition(entries)
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }
}

impl AsRef<[usize]> for WeightComposition {
    fn as_ref(&self) -> &[usize] {
        &self.0
    }
}

impl AsRef<[usize]> for Partition {
    fn as_ref(&self) -> &[usize] {
        self.parts()
    }
}

impl From<Vec<usize>> for WeightComposition {
    fn from(v: Vec<usize>) -> Self {
        WeightComposition(v)
    }
}

fn check_equal_sizes(context: &'static str, parts: &[&Partition]) -> Result<usize> {
    let n = parts[0].size();
    if parts.iter().any(|p| p.size() != n) {
        let sizes: Vec<usize> = parts.iter().map(|p| p.size()).collect();
        return Err(Error::sizes(context, &sizes));
    }
    Ok(n)
}

/// `f^λ = n! / ∏ hooks`, the number of standard Young tableaux of shape `λ`.
pub fn dim_irrep(lambda: &Partition) -> Count {
    let conj = lambda.conjugate();
    let mut hooks = Count::one();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j) - i - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(lambda.size()) / hooks
}

thread_local! {
    static CHAR_MEMO: RefCell<HashMap<(Partition, Vec<usize>), BigInt>> = RefCell::new(HashMap::new());
}

/// `χ^λ(µ)`: the irreducible character `λ` on the class of cycle type `µ`,
/// by the Murnaghan–Nakayama rule.
pub fn character(lambda: &Partition, mu: &Partition) -> Result<CharacterValue> {
    check_equal_sizes("character needs |λ| = |µ|", &[lambda, mu])?;
    Ok(mn_rec(lambda, mu.parts()))
}

fn mn_rec(shape: &Partition, cycles: &[usize]) -> BigInt {
    let Some((&k, rest)) = cycles.split_first() else {
        return BigInt::one();
    };
    let key = (shape.clone(), cycles.to_vec());
    if let Some(v) = CHAR_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let mut total = BigInt::zero();
    for (smaller, negative) in border_strips(shape, k) {
        let v = mn_rec(&smaller, rest);
        if negative {
            total -= v;
        } else {
            total += v;
        }
    }
    CHAR_MEMO.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

/// Every way to remove a border strip of `k` cells from `shape`, as the
/// remaining shape and whether the strip has odd height (negative sign).
///
/// Works on the beta-set `β_i = λ_i + (ℓ − 1 − i)`: a strip removal moves one
/// bead from `β` to `β − k` (which must be free); the strip height is the
/// number of beads jumped over.
pub fn border_strips(shape: &Partition, k: usize) -> Vec<(Partition, bool)> {
    let len = shape.len();
    let beta: Vec<usize> = (0..len).map(|i| shape.part(i) + (len - 1 - i)).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let jumped = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut nb = beta.clone();
        nb[i] = target;
        nb.sort_unstable_by(|a, c| c.cmp(a));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(j, &x)| x - (len - 1 - j)).collect();
        out.push((Partition::new(parts).expect("beta-set gives a partition"), jumped % 2 == 1));
    }
    out
}

/// Kronecker coefficient `g(λ,µ,ν) = (1/n!) Σ_ρ (n!/z_ρ) χ^λ(ρ) χ^µ(ρ) χ^ν(ρ)`.
pub fn kronecker(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    let n = check_equal_sizes("Kronecker coefficient needs |λ| = |µ| = |ν|", &[lambda, mu, nu])?;
    let mut total = BigInt::zero();
    for rho in generate_partitions(n, None, None) {
        let a = mn_rec(lambda, rho.parts());
        if a.is_zero() {
            continue;
        }
        let b = mn_rec(mu, rho.parts());
        if b.is_zero() {
            continue;
        }
        let c = mn_rec(nu, rho.parts());
        total += a * b * c * BigInt::from(rho.class_size());
    }
    let (q, r) = total.div_rem(&BigInt::from(factorial(n)));
    if !r.is_zero() || q.sign() == Sign::Minus {
        return Err(Error::Consistency(format!(
            "class sum for g({lambda:?},{mu:?},{nu:?}) is {total}, not a non-negative multiple of {n}!"
        )));
    }
    Ok(q.to_biguint().expect("checked non-negative"))
}

thread_local! {
    static KOSTKA_MEMO: RefCell<HashMap<(Partition, Vec<usize>), Count>> = RefCell::new(HashMap::new());
}

/// `K(ν, w)`: semistandard tableaux of shape `ν` and content `w`. The
/// content may be any composition (order matters for the recursion, not for
/// the result).
pub fn kostka<W: AsRef<[usize]> + ?Sized>(nu: &Partition, w: &W) -> Count {
    let w = w.as_ref();
    if nu.size() != w.iter().sum::<usize>() {
        return Count::zero();
    }
    kostka_rec(nu, w)
}

/// Removes the letter `w.len()` as a horizontal strip of `w.last()` cells.
fn kostka_rec(shape: &Partition, w: &[usize]) -> Count {
    let Some((&last, prefix)) = w.split_last() else {
        return if shape.is_empty() { Count::one() } else { Count::zero() };
    };
    if last == 0 {
        return kostka_rec(shape, prefix);
    }
    let nonzero = w.iter().filter(|&&x| x > 0).count();
    if shape.len() > nonzero {
        return Count::zero();
    }
    if prefix.iter().all(|&x| x == 0) {
        return if shape.len() == 1 { Count::one() } else { Count::zero() };
    }
    let key = (shape.clone(), w.to_vec());
    if let Some(v) = KOSTKA_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return v;
    }
    let mut total = Count::zero();
    for inner in horizontal_strip_removals(shape, last) {
        total += kostka_rec(&inner, prefix);
    }
    KOSTKA_MEMO.with(|m| m.borrow_mut().insert(key, total.clone()));
    total
}

/// All `κ ⊆ shape` such that `shape/κ` is a horizontal strip of `k` cells,
/// i.e. `shape_{i+1} ≤ κ_i ≤ shape_i`.
pub fn horizontal_strip_removals(shape: &Partition, k: usize) -> Vec<Partition> {
    let parts = shape.parts();
    let mut out = Vec::new();
    let mut cur = vec![0usize; parts.len()];
    fn go(i: usize, left: usize, parts: &[usize], cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == parts.len() {
            if left == 0 {
                out.push(Partition::new(cur.clone()).expect("strip removal keeps a partition"));
            }
            return;
        }
        let lo = parts.get(i + 1).copied().unwrap_or(0);
        let hi = parts[i];
        // cells still removable in rows i.. bound the search
        let room: usize = (i..parts.len()).map(|r| parts[r] - parts.get(r + 1).copied().unwrap_or(0)).sum();
        if room < left {
            return;
        }
        for keep in (lo..=hi).rev() {
            let take = hi - keep;
            if take > left {
                break;
            }
            cur[i] = keep;
            go(i + 1, left - take, parts, cur, out);
        }
    }
    go(0, k, parts, &mut cur, &mut out);
    out
}

thread_local! {
    static LR_MEMO: RefCell<HashMap<(Partition, Partition, Partition), Count>> = RefCell::new(HashMap::new());
}

/// Littlewood–Richardson coefficient `c^λ_{µν}`: the number of LR tableaux of
/// skew shape `λ/µ` and content `ν` (semistandard, reverse reading word a
/// lattice word).
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    if lambda.size() != mu.size() + nu.size() {
        return Err(Error::sizes("LR coefficient needs |λ| = |µ| + |ν|", &[lambda.size(), mu.size(), nu.size()]));
    }
    if !mu.contained_in(lambda) || !nu.contained_in(lambda) {
        return Ok(Count::zero());
    }
    if nu.is_empty() {
        return Ok(Count::from((lambda == mu) as u8));
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = LR_MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return Ok(v);
    }
    let v = Count::from(count_lr_tableaux(lambda, mu, nu));
    LR_MEMO.with(|m| m.borrow_mut().insert(key, v.clone()));
    Ok(v)
}

fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    // Cells in reverse reading order: rows top to bottom, each right to left.
    let cells: Vec<(usize, usize)> = (0..lambda.len())
        .flat_map(|r| (mu.part(r)..lambda.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..lambda.len()).map(|r| vec![0; lambda.part(r)]).collect();
    let mut counts = vec![0usize; nu.len()];

    struct Ctx<'a> {
        cells: &'a [(usize, usize)],
        mu: &'a Partition,
        lambda: &'a Partition,
        nu: &'a Partition,
    }

    fn go(ctx: &Ctx, idx: usize, grid: &mut [Vec<usize>], counts: &mut [usize]) -> u64 {
        if idx == ctx.cells.len() {
            return 1;
        }
        let (r, c) = ctx.cells[idx];
        // rows weakly increase left to right: bounded by the right neighbour
        let hi = if c + 1 < ctx.lambda.part(r) { grid[r][c + 1] } else { ctx.nu.len() };
        // columns strictly increase downward when the cell above is in the skew shape
        let lo = if r > 0 && c >= ctx.mu.part(r - 1) { grid[r - 1][c] + 1 } else { 1 };
        let mut total = 0;
        for letter in lo..=hi {
            let k = letter - 1;
            if counts[k] >= ctx.nu.part(k) {
                continue;
            }
            if k > 0 && counts[k] >= counts[k - 1] {
                continue;
            }
            counts[k] += 1;
            grid[r][c] = letter;
            total += go(ctx, idx + 1, grid, counts);
            counts[k] -= 1;
        }
        grid[r][c] = 0;
        total
    }

    let ctx = Ctx { cells: &cells, mu, lambda, nu };
    go(&ctx, 0, &mut grid, &mut counts)
}

/// Multi-LR coefficient `c(λ | ρ¹, …, ρˢ)`, the multiplicity of `s_λ` in
/// `s_{ρ¹} ⋯ s_{ρˢ}`, folded left to right over chains
/// `∅ = κ⁰ ⊆ κ¹ ⊆ … ⊆ κˢ = λ`.
pub fn multi_lr(lambda: &Partition, rhos: &[Partition]) -> Result<Count> {
    let total: usize = rhos.iter().map(|r| r.size()).sum();
    if total != lambda.size() {
        let mut sizes = vec![lambda.size()];
        sizes.extend(rhos.iter().map(|r| r.size()));
        return Err(Error::sizes("multi-LR coefficient needs |λ| = Σ|ρⁱ|", &sizes));
    }
    let mut layer: BTreeMap<Partition, Count> = BTreeMap::new();
    layer.insert(Partition::empty(), Count::one());
    let mut size = 0;
    for rho in rhos {
        size += rho.size();
        let targets: Vec<Partition> = generate_partitions(size, Some(lambda.len()), Some(lambda.first()))
            .into_iter()
            .filter(|k| k.contained_in(lambda))
            .collect();
        let mut next: BTreeMap<Partition, Count> = BTreeMap::new();
        for (kappa, weight) in &layer {
            for outer in targets.iter().filter(|t| kappa.contained_in(t)) {
                let c = lr_coefficient(outer, kappa, rho)?;
                if !c.is_zero() {
                    *next.entry(outer.clone()).or_default() += weight * c;
                }
            }
        }
        layer = next;
    }
    Ok(layer.remove(lambda).unwrap_or_default())
}

/// Exact inverse of the Kostka matrix on the partitions of one size.
#[derive(Clone, Debug)]
pub struct InverseKostkaMatrix {
    n: usize,
    index: Vec<Partition>,
    entries: Vec<Vec<SignedCount>>,
}

impl InverseKostkaMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    /// Row/column labels, reverse lexicographic (a linear extension of dominance,
    /// largest first).
    pub fn partitions(&self) -> &[Partition] {
        &self.index
    }

    fn position(&self, p: &Partition) -> Option<usize> {
        self.index.binary_search_by(|q| p.cmp(q)).ok()
    }

    /// Entry `(λ, µ)`; zero unless `λ ⊵ µ`.
    pub fn get(&self, lambda: &Partition, mu: &Partition) -> SignedCount {
        match (self.position(lambda), self.position(mu)) {
            (Some(i), Some(j)) => self.entries[i][j].clone(),
            _ => SignedCount::zero(),
        }
    }

    pub fn rows(&self) -> &[Vec<SignedCount>] {
        &self.entries
    }
}

/// Inverse of `K(λ, µ)` (rows: shapes, columns: contents) by unitriangular
/// back-substitution.
pub fn inverse_kostka(n: usize) -> Result<InverseKostkaMatrix> {
    if n == 0 {
        return Err(Error::InvalidArgument("inverse Kostka matrix needs n ≥ 1".into()));
    }
    let index = generate_partitions(n, None, None);
    let size = index.len();
    let k: Vec<Vec<BigInt>> = index
        .iter()
        .map(|lam| index.iter().map(|mu| BigInt::from(kostka(lam, mu))).collect())
        .collect();
    let mut inv = vec![vec![BigInt::zero(); size]; size];
    for j in 0..size {
        inv[j][j] = BigInt::one();
        for i in (0..j).rev() {
            let mut acc = BigInt::zero();
            for m in i + 1..=j {
                if !k[i][m].is_zero() && !inv[m][j].is_zero() {
                    acc += &k[i][m] * &inv[m][j];
                }
            }
            inv[i][j] = -acc;
        }
    }
    Ok(InverseKostkaMatrix { n, index, entries: inv })
}

thread_local! {
    static INV_KOSTKA: RefCell<HashMap<usize, std::rc::Rc<InverseKostkaMatrix>>> = RefCell::new(HashMap::new());
}

fn cached_inverse_kostka(n: usize) -> Result<std::rc::Rc<InverseKostkaMatrix>> {
    if let Some(m) = INV_KOSTKA.with(|c| c.borrow().get(&n).cloned()) {
        return Ok(m);
    }
    let m = std::rc::Rc::new(inverse_kostka(n)?);
    INV_KOSTKA.with(|c| c.borrow_mut().insert(n, m.clone()));
    Ok(m)
}

/// Every tuple `(ρ¹, …, ρˢ)` with `ρⁱ ⊢ πᵢ`.
fn partition_tuples(pi: &Partition) -> Vec<Vec<Partition>> {
    let mut tuples: Vec<Vec<Partition>> = vec![Vec::new()];
    for &part in pi.parts() {
        let choices = generate_partitions(part, None, None);
        tuples = tuples
            .into_iter()
            .flat_map(|t| {
                choices.iter().map(move |c| {
                    let mut t = t.clone();
                    t.push(c.clone());
                    t
                })
            })
            .collect();
    }
    tuples
}

/// `LR(λ, µ | π) = Σ_{ρⁱ ⊢ πᵢ} c(λ | ρ) · c(µ | ρ)`.
pub fn lr_pair_sum(lambda: &Partition, mu: &Partition, pi: &Partition) -> Result<Count> {
    let mut total = Count::zero();
    for rhos in partition_tuples(pi) {
        let a = multi_lr(lambda, &rhos)?;
        if a.is_zero() {
            continue;
        }
        total += a * multi_lr(mu, &rhos)?;
    }
    Ok(total)
}

/// `g(λ,µ,ν) = Σ_{π ⊵ ν} K⁻¹(π, ν) · LR(λ, µ | π)`, evaluated term by term.
pub fn kronecker_via_vallejo(lambda: &Partition, mu: &Partition, nu: &Partition) -> Result<Count> {
    let n = check_equal_sizes("Kronecker coefficient needs |λ| = |µ| = |ν|", &[lambda, mu, nu])?;
    if n == 0 {
        return Ok(Count::one());
    }
    let inv = cached_inverse_kostka(n)?;
    let mut total = BigInt::zero();
    for pi in inv.partitions() {
        if !dominance_leq(nu, pi)? {
            continue;
        }
        let coeff = inv.get(pi, nu);
        if coeff.is_zero() {
            continue;
        }
        total += coeff * BigInt::from(lr_pair_sum(lambda, mu, pi)?);
    }
    if total.is_negative() {
        return Err(Error::Consistency(format!("Vallejo sum for ({lambda:?},{mu:?},{nu:?}) is negative: {total}")));
    }
    Ok(total.to_biguint().expect("checked non-negative"))
}

/// Size at which the reduced coefficient is read off: `|α|+|β|+|γ| + max first row`.
pub fn reduced_kronecker_size(alpha: &Partition, beta: &Partition, gamma: &Partition) -> usize {
    alpha.size() + beta.size() + gamma.size() + alpha.first().max(beta.first()).max(gamma.first())
}

/// Reduced Kronecker coefficient `ḡ(α,β,γ) = g(α[n], β[n], γ[n])` for large
/// `n`. Evaluated at `n*` and `n*+1`; disagreement is reported as an error.
pub fn reduced_kronecker(alpha: &Partition, beta: &Partition, gamma: &Partition) -> Result<Count> {
    let n = reduced_kronecker_size(alpha, beta, gamma);
    let at = |n: usize| -> Result<Count> {
        kronecker(&pad_first_row(alpha, n)?, &pad_first_row(beta, n)?, &pad_first_row(gamma, n)?)
    };
    let value = at(n)?;
    let next = at(n + 1)?;
    if value != next {
        return Err(Error::Consistency(format!(
            "reduced Kronecker ({alpha:?},{beta:?},{gamma:?}) not stable: {value} at n={n}, {next} at n={}",
            n + 1
        )));
    }
    Ok(value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::generate_partitions;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn count(v: u64) -> Count {
        Count::from(v)
    }

    /// Standard Young tableaux by filling cells with 1..n one at a time.
    fn syt_count(shape: &Partition) -> u64 {
        fn go(rows: &mut Vec<usize>, shape: &Partition) -> u64 {
            if rows.iter().sum::<usize>() == shape.size() {
                return 1;
            }
            let mut total = 0;
            for r in 0..shape.len() {
                let can = rows[r] < shape.part(r) && (r == 0 || rows[r - 1] > rows[r]);
                if can {
                    rows[r] += 1;
                    total += go(rows, shape);
                    rows[r] -= 1;
                }
            }
            total
        }
        go(&mut vec![0; shape.len()], shape)
    }

    /// Semistandard tableaux of shape `shape` and content `w`, brute force over
    /// all row fillings.
    fn ssyt_count(shape: &Partition, w: &[usize]) -> u64 {
        let cells: Vec<(usize, usize)> =
            (0..shape.len()).flat_map(|r| (0..shape.part(r)).map(move |c| (r, c))).collect();
        let mut grid: Vec<Vec<usize>> = (0..shape.len()).map(|r| vec![0; shape.part(r)]).collect();
        let mut left = w.to_vec();
        fn go(i: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<usize>>, left: &mut Vec<usize>) -> u64 {
            if i == cells.len() {
                return 1;
            }
            let (r, c) = cells[i];
            let mut total = 0;
            for v in 0..left.len() {
                if left[v] == 0 {
                    continue;
                }
                if c > 0 && grid[r][c - 1] > v {
                    continue;
                }
                if r > 0 && grid[r - 1][c] >= v {
                    continue;
                }
                left[v] -= 1;
                grid[r][c] = v;
                total += go(i + 1, cells, grid, left);
                left[v] += 1;
            }
            total
        }
        go(0, &cells, &mut grid, &mut left)
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(dim_irrep(&p("5")), count(1));
        assert_eq!(dim_irrep(&p("2,1")), count(2));
        assert_eq!(dim_irrep(&p("3,2,1")), count(16));
        for n in 1..=7 {
            for lam in generate_partitions(n, None, None) {
                assert_eq!(dim_irrep(&lam), count(syt_count(&lam)), "{lam:?}");
                assert_eq!(dim_irrep(&lam), kostka(&lam, &Partition::column(n)));
            }
        }
    }

    #[test]
    fn character_examples() {
        for mu in generate_partitions(5, None, None) {
            assert_eq!(character(&p("5"), &mu).unwrap(), BigInt::one());
        }
        assert_eq!(character(&p("1,1,1"), &p("1,1,1")).unwrap(), BigInt::one());
        assert_eq!(character(&p("2,1"), &p("3")).unwrap(), BigInt::from(-1));
        assert!(character(&p("2,1"), &p("2")).is_err());
    }

    /// S₃ characters from permutation matrices: trivial, sign, and
    /// (fixed points − 1) for the standard representation.
    #[test]
    fn s3_kronecker_from_permutations() {
        let perms: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let fix = |s: &[usize; 3]| (0..3).filter(|&i| s[i] == i).count() as i64;
        let sign = |s: &[usize; 3]| if fix(s) == 1 { -1 } else { 1 };
        let chars: Vec<(Partition, Box<dyn Fn(&[usize; 3]) -> i64>)> = vec![
            (p("3"), Box::new(|_| 1)),
            (p("1,1,1"), Box::new(sign)),
            (p("2,1"), Box::new(move |s| fix(s) - 1)),
        ];
        for (a, ca) in &chars {
            for (b, cb) in &chars {
                for (c, cc) in &chars {
                    let sum: i64 = perms.iter().map(|s| ca(s) * cb(s) * cc(s)).sum();
                    assert_eq!(sum % 6, 0);
                    assert_eq!(kronecker(a, b, c).unwrap(), count((sum / 6) as u64), "{a:?} {b:?} {c:?}");
                }
            }
        }
    }

    #[test]
    fn kronecker_examples() {
        assert_eq!(kronecker(&p("4"), &p("4"), &p("4")).unwrap(), count(1));
        assert_eq!(kronecker(&p("2,1"), &p("2,1"), &p("2,1")).unwrap(), count(1));
        let hook = Partition::hook(4, 3);
        assert_eq!(kronecker(&hook, &hook, &hook).unwrap(), count(1));
        assert!(kronecker(&p("2,1"), &p("2,1"), &p("2")).is_err());
    }

    #[test]
    fn column_orthogonality() {
        for n in 1..=7 {
            let parts = generate_partitions(n, None, None);
            for a in &parts {
                for b in &parts {
                    let s: BigInt = parts
                        .iter()
                        .map(|mu| character(a, mu).unwrap() * character(b, mu).unwrap() * BigInt::from(mu.class_size()))
                        .sum();
                    let expected = if a == b { BigInt::from(factorial(n)) } else { BigInt::zero() };
                    assert_eq!(s, expected);
                }
            }
        }
    }

    #[test]
    fn kostka_examples() {
        for lam in generate_partitions(6, None, None) {
            assert_eq!(kostka(&lam, &lam), count(1));
        }
        assert_eq!(kostka(&p("2,1"), &[1usize, 1, 1]), count(2));
        assert_eq!(kostka(&p("2,2"), &p("3,1")), count(0));
        assert_eq!(kostka(&p("2,1"), &[1usize, 0, 2]), count(1));
        assert_eq!(kostka(&p("2,1"), &[5usize]), count(0));
    }

    #[test]
    fn kostka_matches_brute_force() {
        for n in 1..=6 {
            for lam in generate_partitions(n, None, None) {
                for mu in generate_partitions(n, None, None) {
                    assert_eq!(kostka(&lam, &mu), count(ssyt_count(&lam, mu.parts())), "{lam:?} {mu:?}");
                }
            }
        }
        assert_eq!(kostka(&p("3,2"), &[0usize, 2, 1, 0, 2]), count(ssyt_count(&p("3,2"), &[0, 2, 1, 0, 2])));
    }

    #[test]
    fn lr_examples() {
        assert_eq!(lr_coefficient(&p("2,1"), &p("1"), &p("1,1")).unwrap(), count(1));
        assert_eq!(lr_coefficient(&p("3,2"), &p("3,2"), &p("")).unwrap(), count(1));
        assert_eq!(lr_coefficient(&p("4,2"), &p("2,1"), &p("2,1")).unwrap(), count(1));
        assert_eq!(lr_coefficient(&p("3,2,1"), &p("2,1"), &p("2,1")).unwrap(), count(2));
        assert_eq!(lr_coefficient(&p("3"), &p("2,1"), &p("")).unwrap(), count(0));
        assert!(lr_coefficient(&p("3"), &p("1"), &p("1")).is_err());
    }

    /// Pieri: `c^λ_{µ,(k)} = 1` iff `λ/µ` is a horizontal strip of size k.
    #[test]
    fn lr_pieri() {
        for n in 1..=7 {
            for lam in generate_partitions(n, None, None) {
                for k in 1..=n {
                    for mu in generate_partitions(n - k, None, None) {
                        let strip = mu.contained_in(&lam)
                            && (0..lam.len()).all(|i| mu.part(i) >= lam.part(i + 1));
                        let row = lr_coefficient(&lam, &mu, &Partition::row(k)).unwrap();
                        assert_eq!(row, count(strip as u64), "{lam:?} {mu:?} {k}");
                        let vstrip = mu.contained_in(&lam) && (0..lam.len()).all(|i| lam.part(i) - mu.part(i) <= 1);
                        let col = lr_coefficient(&lam, &mu, &Partition::column(k)).unwrap();
                        assert_eq!(col, count(vstrip as u64));
                    }
                }
            }
        }
    }

    /// Multiplicity of `χ^λ` in the character induced from
    /// `χ^{ρ¹} × … × χ^{ρˢ}` on a Young subgroup, computed from class sums.
    fn induced_multiplicity(lambda: &Partition, rhos: &[Partition]) -> Count {
        let mut classes: Vec<(Vec<usize>, BigInt, num_rational_like::Frac)> =
            vec![(Vec::new(), BigInt::one(), num_rational_like::Frac::one())];
        for rho in rhos {
            let mut next = Vec::new();
            for (cycles, chi, weight) in &classes {
                for tau in generate_partitions(rho.size(), None, None) {
                    let c = character(rho, &tau).unwrap();
                    if c.is_zero() {
                        continue;
                    }
                    let mut cyc = cycles.clone();
                    cyc.extend_from_slice(tau.parts());
                    next.push((cyc, chi * c, weight.div(BigInt::from(tau.centralizer_order()))));
                }
            }
            classes = next;
        }
        let mut acc = num_rational_like::Frac::zero();
        for (cycles, chi, weight) in classes {
            let cls = Partition::from_unsorted(cycles);
            let value = character(lambda, &cls).unwrap() * chi;
            acc = acc.add(&weight.mul(value));
        }
        acc.to_count()
    }

    /// Minimal exact rational arithmetic for the induction oracle.
    mod num_rational_like {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Zero};

        #[derive(Clone)]
        pub struct Frac(BigInt, BigInt);

        impl Frac {
            pub fn one() -> Self {
                Frac(BigInt::one(), BigInt::one())
            }
            pub fn zero() -> Self {
                Frac(BigInt::zero(), BigInt::one())
            }
            fn norm(n: BigInt, d: BigInt) -> Self {
                let g = n.gcd(&d);
                if g.is_zero() {
                    return Frac(n, d);
                }
                Frac(n / &g, d / g)
            }
            pub fn div(&self, k: BigInt) -> Self {
                Self::norm(self.0.clone(), &self.1 * k)
            }
            pub fn mul(&self, k: BigInt) -> Self {
                Self::norm(&self.0 * k, self.1.clone())
            }
            pub fn add(&self, o: &Frac) -> Self {
                Self::norm(&self.0 * &o.1 + &o.0 * &self.1, &self.1 * &o.1)
            }
            pub fn to_count(&self) -> super::Count {
                assert!(self.1.is_one(), "multiplicity must be an integer");
                self.0.to_biguint().expect("multiplicity is non-negative")
            }
        }
    }

    #[test]
    fn lr_matches_induction_oracle() {
        for n in 1..=6 {
            for lam in generate_partitions(n, None, None) {
                for k in 0..=n {
                    for mu in generate_partitions(k, None, None) {
                        for nu in generate_partitions(n - k, None, None) {
                            let expected = induced_multiplicity(&lam, &[mu.clone(), nu.clone()]);
                            assert_eq!(lr_coefficient(&lam, &mu, &nu).unwrap(), expected, "{lam:?} {mu:?} {nu:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn multi_lr_examples() {
        let lam = p("3,2,1");
        for rho in generate_partitions(6, None, None) {
            assert_eq!(multi_lr(&lam, &[rho.clone()]).unwrap(), count((rho == lam) as u64));
        }
        for mu in generate_partitions(3, None, None) {
            for nu in generate_partitions(3, None, None) {
                assert_eq!(
                    multi_lr(&lam, &[mu.clone(), nu.clone()]).unwrap(),
                    lr_coefficient(&lam, &mu, &nu).unwrap()
                );
            }
        }
        let cols = vec![p("1,1"), p("1,1"), p("1,1")];
        assert_eq!(multi_lr(&p("2,2,1,1"), &cols).unwrap(), count(3));
        assert_eq!(induced_multiplicity(&p("2,2,1,1"), &cols), count(3));
        assert!(multi_lr(&p("2,2"), &[p("1")]).is_err());
    }

    #[test]
    fn multi_lr_matches_induction_and_is_order_free() {
        let triples = [
            vec![p("2,1"), p("1"), p("2")],
            vec![p("1,1"), p("2"), p("1,1")],
            vec![p("2"), p("2"), p("2")],
            vec![p("3"), p("1"), p("1,1")],
        ];
        for rhos in &triples {
            let n: usize = rhos.iter().map(|r| r.size()).sum();
            for lam in generate_partitions(n, None, None) {
                let base = multi_lr(&lam, rhos).unwrap();
                assert_eq!(base, induced_multiplicity(&lam, rhos), "{lam:?} {rhos:?}");
                let mut rev = rhos.clone();
                rev.reverse();
                assert_eq!(multi_lr(&lam, &rev).unwrap(), base);
                let rot = vec![rhos[1].clone(), rhos[2].clone(), rhos[0].clone()];
                assert_eq!(multi_lr(&lam, &rot).unwrap(), base);
            }
        }
    }

    #[test]
    fn inverse_kostka_is_an_inverse() {
        for n in 1..=7 {
            let inv = inverse_kostka(n).unwrap();
            let parts = inv.partitions().to_vec();
            for a in &parts {
                assert_eq!(inv.get(a, a), BigInt::one());
                for b in &parts {
                    let s: BigInt = parts.iter().map(|c| BigInt::from(kostka(a, c)) * inv.get(c, b)).sum();
                    assert_eq!(s, if a == b { BigInt::one() } else { BigInt::zero() });
                    if !inv.get(a, b).is_zero() {
                        assert!(dominance_leq(b, a).unwrap(), "entry ({a:?},{b:?}) outside dominance");
                    }
                }
            }
        }
        assert!(inverse_kostka(0).is_err());
    }

    #[test]
    fn vallejo_examples() {
        assert_eq!(kronecker_via_vallejo(&p("4"), &p("4"), &p("4")).unwrap(), count(1));
        assert_eq!(kronecker_via_vallejo(&p("2,1"), &p("2,1"), &p("2,1")).unwrap(), count(1));
    }

    #[test]
    fn reduced_examples() {
        let e = Partition::empty();
        assert_eq!(reduced_kronecker(&e, &e, &e).unwrap(), count(1));
        assert_eq!(reduced_kronecker(&p("1"), &p("1"), &p("1")).unwrap(), count(1));
        // stable value of g((n-1,1)^3) straight from the character formula
        for n in 3..=9 {
            let h = Partition::hook(n - 1, 1);
            assert_eq!(kronecker(&h, &h, &h).unwrap(), count(1));
        }
        assert_eq!(reduced_kronecker(&p("2,1"), &p("1"), &p("1,1")).unwrap(), count(1));
    }
}
