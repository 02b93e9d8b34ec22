//! Explicit pyramids: equal-margin pairs, the staircase family built from
//! them, and symmetric plane partitions.

use std::collections::{BTreeMap, HashSet};
use std::sync::OnceLock;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::limits::Limits;
use crate::partitions::{binomial, Count, Partition};
use crate::tables::{enumerate_pyramids, for_each_plane_partition, Pyramid};

/// A margin triple carried by at least two pyramids.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EqualMarginHit {
    pub n: usize,
    pub margins: [Partition; 3],
    pub count: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct EqualMarginSearch {
    pub n_max: usize,
    pub hits: Vec<EqualMarginHit>,
    /// First hit with `λ = µ = ν`, if any.
    pub smallest_self_triple: Option<EqualMarginHit>,
}

impl EqualMarginSearch {
    pub fn self_triples(&self) -> impl Iterator<Item = &EqualMarginHit> {
        self.hits.iter().filter(|h| h.margins[0] == h.margins[1] && h.margins[1] == h.margins[2])
    }
}

/// Groups the plane partitions of every `n ≤ n_max` by margin triple and
/// keeps the triples shared by two or more of them.
pub fn equal_margin_pyramids_search(n_max: usize, limits: &Limits) -> Result<EqualMarginSearch> {
    Limits::check("n for the equal-margin search", n_max, limits.pyramid_n)?;
    let mut hits = Vec::new();
    for n in 0..=n_max {
        let mut hist: BTreeMap<[Partition; 3], u64> = BTreeMap::new();
        for_each_plane_partition(n, |rows| {
            let (a, b, c) = Pyramid::from_heights(rows.to_vec()).expect("plane partition").margins();
            *hist.entry([a, b, c]).or_default() += 1;
        });
        hits.extend(hist.into_iter().filter(|(_, k)| *k >= 2).map(|(margins, count)| EqualMarginHit { n, margins, count }));
    }
    let smallest_self_triple =
        hits.iter().find(|h| h.margins[0] == h.margins[1] && h.margins[1] == h.margins[2]).cloned();
    Ok(EqualMarginSearch { n_max, hits, smallest_self_triple })
}

/// The two pyramids with margins `(7,4,2)³`, in a fixed order.
pub fn seven_four_two_pair() -> &'static [Pyramid; 2] {
    static PAIR: OnceLock<[Pyramid; 2]> = OnceLock::new();
    PAIR.get_or_init(|| {
        let m: Partition = "7,4,2".parse().expect("partition");
        let mut found = enumerate_pyramids(&m, &m, &m).expect("small search");
        found.sort();
        assert_eq!(found.len(), 2, "(7,4,2)³ must carry exactly two pyramids");
        [found[0].clone(), found[1].clone()]
    })
}

/// Pyramids obtained by blowing up the staircase pyramid
/// `{(I,J,K) : I+J+K ≤ s−2}` by 3 and placing one of the two `(7,4,2)³`
/// pyramids in each 3×3×3 block of the frontier `I+J+K = s−1`.
#[derive(Clone, Debug, Serialize)]
pub struct PyramidFamily {
    pub s: usize,
    /// Number of cells of every member.
    pub size: usize,
    pub margins: [Partition; 3],
    /// `2^{s(s+1)/2}`, as a decimal string in JSON.
    #[serde(serialize_with = "crate::constructions::ser_count")]
    pub member_count: Count,
    /// The two pyramids placed at frontier blocks.
    pub generators: [Vec<Vec<usize>>; 2],
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub members: Vec<Vec<Vec<usize>>>,
}

pub(crate) fn ser_count<S: serde::Serializer>(c: &Count, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&c.to_string())
}

/// Frontier block positions `(I, J)`; the block sits at `K = s−1−I−J`.
fn frontier(s: usize) -> Vec<(usize, usize)> {
    (0..s).flat_map(|i| (0..s - i).map(move |j| (i, j))).collect()
}

/// Cells of the member selected by `mask` (bit `t` picks the second
/// generator at the `t`-th frontier block).
pub fn staircase_member(s: usize, mask: u64) -> Result<Pyramid> {
    if s == 0 {
        return Err(Error::InvalidArgument("staircase family needs s ≥ 1".into()));
    }
    let pair = seven_four_two_pair();
    let blocks = frontier(s);
    let mut choice = vec![vec![None; s]; s];
    for (t, &(i, j)) in blocks.iter().enumerate() {
        choice[i][j] = Some(&pair[((mask >> t) & 1) as usize]);
    }
    let mut heights = Vec::new();
    for big_i in 0..s {
        for a in 0..3 {
            let mut row = Vec::new();
            for big_j in 0..s - big_i {
                let full = 3 * (s - 1 - big_i - big_j);
                let x = choice[big_i][big_j].expect("frontier block");
                for b in 0..3 {
                    row.push(full + x.height(a, b));
                }
            }
            while row.last() == Some(&0) {
                row.pop();
            }
            if !row.is_empty() {
                heights.push(row);
            }
        }
    }
    Pyramid::from_heights(heights)
}

/// Builds and verifies the family: every member is a pyramid, members are
/// pairwise distinct, margins agree, and the size is
/// `27·C(s+1,3) + 13·C(s+1,2)`.
pub fn staircase_family(s: usize) -> Result<PyramidFamily> {
    staircase_family_with(s, true)
}

/// As [`staircase_family`]; `keep_members` stores the height arrays.
pub fn staircase_family_with(s: usize, keep_members: bool) -> Result<PyramidFamily> {
    if s == 0 {
        return Err(Error::InvalidArgument("staircase family needs s ≥ 1".into()));
    }
    let frontier_len = s * (s + 1) / 2;
    Limits::check("frontier blocks of the staircase family", frontier_len, 16)?;
    let first = staircase_member(s, 0)?;
    let margins = first.margins();
    let size = first.size();
    let expect = 27 * to_usize(&binomial(s + 1, 3)) + 13 * frontier_len;
    if size != expect {
        return Err(Error::Consistency(format!("staircase family s={s}: {size} cells, formula gives {expect}")));
    }
    let mut seen = HashSet::new();
    let mut members = Vec::new();
    for mask in 0..(1u64 << frontier_len) {
        let p = staircase_member(s, mask)?;
        if !p.to_table().is_pyramid() {
            return Err(Error::Consistency(format!("member {mask} is not downward closed")));
        }
        if p.margins() != margins || p.size() != size {
            return Err(Error::Consistency(format!("member {mask} has different margins")));
        }
        if keep_members {
            members.push(p.heights().to_vec());
        }
        if !seen.insert(p) {
            return Err(Error::Consistency(format!("member {mask} repeats an earlier one")));
        }
    }
    let pair = seven_four_two_pair();
    Ok(PyramidFamily {
        s,
        size,
        margins: [margins.0, margins.1, margins.2],
        member_count: Count::from(1u8) << frontier_len,
        generators: [pair[0].heights().to_vec(), pair[1].heights().to_vec()],
        members,
    })
}

fn to_usize(c: &Count) -> usize {
    c.to_u64_digits().first().copied().unwrap_or(0) as usize
}

/// A totally symmetric plane partition together with its margin.
#[derive(Clone, Debug, Serialize)]
pub struct SymmetricMember {
    pub heights: Vec<Vec<usize>>,
    pub margin: Partition,
    pub self_conjugate_margin: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct TotallySymmetric {
    pub n: usize,
    #[serde(serialize_with = "crate::constructions::ser_count")]
    pub count: Count,
    pub members: Vec<SymmetricMember>,
}

impl TotallySymmetric {
    pub fn all_margins_self_conjugate(&self) -> bool {
        self.members.iter().all(|m| m.self_conjugate_margin)
    }
}

/// Totally symmetric plane partitions of `n` (invariant under all
/// permutations of the axes). Their margins are `(λ, λ, λ)`; whether `λ`
/// is self-conjugate is reported per member, not assumed.
pub fn totally_symmetric_count(n: usize, limits: &Limits) -> Result<TotallySymmetric> {
    Limits::check("n for totally symmetric plane partitions", n, limits.pyramid_n)?;
    let mut members = Vec::new();
    for_each_plane_partition(n, |rows| {
        let p = Pyramid::from_heights(rows.to_vec()).expect("plane partition");
        if p.is_totally_symmetric() {
            let (margin, _, _) = p.margins();
            let self_conjugate_margin = margin.is_self_conjugate();
            members.push(SymmetricMember { heights: rows.to_vec(), margin, self_conjugate_margin });
        }
    });
    Ok(TotallySymmetric { n, count: Count::from(members.len()), members })
}

/// Two distinct plane partitions with the same margins `(λ, λ, λ)`: a
/// cyclically symmetric one and its reflection.
#[derive(Clone, Debug, Serialize)]
pub struct CyclicWitness {
    pub n: usize,
    pub margin: Partition,
    pub first: Vec<Vec<usize>>,
    pub second: Vec<Vec<usize>>,
}

/// Smallest cyclically symmetric, not totally symmetric plane partition
/// with a self-conjugate margin, searching sizes up to `n_max`.
pub fn cyclic_not_total_witness(n_max: usize, limits: &Limits) -> Result<Option<CyclicWitness>> {
    cyclic_search(n_max, limits, true)
}

/// As [`cyclic_not_total_witness`] without the self-conjugacy requirement.
pub fn cyclic_not_total_pair(n_max: usize, limits: &Limits) -> Result<Option<CyclicWitness>> {
    cyclic_search(n_max, limits, false)
}

fn cyclic_search(n_max: usize, limits: &Limits, self_conjugate: bool) -> Result<Option<CyclicWitness>> {
    Limits::check("n for the cyclic witness search", n_max, limits.pyramid_n)?;
    for n in 1..=n_max {
        let mut found: Option<CyclicWitness> = None;
        for_each_plane_partition(n, |rows| {
            if found.is_some() {
                return;
            }
            let p = Pyramid::from_heights(rows.to_vec()).expect("plane partition");
            if !p.is_cyclically_symmetric() {
                return;
            }
            let t = p.transpose();
            if t == p {
                return;
            }
            let (margin, _, _) = p.margins();
            if self_conjugate && !margin.is_self_conjugate() {
                return;
            }
            found = Some(CyclicWitness { n, margin, first: rows.to_vec(), second: t.heights().to_vec() });
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}
