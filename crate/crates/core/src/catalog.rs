//! Enumeration of marked actions by connected-sum insertion, grouping into
//! classes of circle actions, and the named families.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{ensure_invariant, Error, Result};
use crate::invariants::{regularity, SequenceInvariants};
use crate::sequence::MarkedSequence;

/// The `n + 2` children of a level-`(n-1)` sequence: a 1 prepended, the sum
/// of each adjacent pair inserted between them, and a 1 appended.
pub fn insertions(seq: &MarkedSequence) -> Result<Vec<MarkedSequence>> {
    let k = seq.entries();
    let mut out = Vec::with_capacity(k.len() + 2);
    let mut with_one = vec![1];
    with_one.extend_from_slice(k);
    out.push(MarkedSequence::from_trusted(with_one));
    for w in 0..k.len() - 1 {
        let sum = k[w]
            .checked_add(k[w + 1])
            .ok_or_else(|| Error::InvalidSequence("weight overflow".into()))?;
        let mut child = Vec::with_capacity(k.len() + 1);
        child.extend_from_slice(&k[..=w]);
        child.push(sum);
        child.extend_from_slice(&k[w + 1..]);
        out.push(MarkedSequence::from_trusted(child));
    }
    let mut with_one = k.to_vec();
    with_one.push(1);
    out.push(MarkedSequence::from_trusted(with_one));
    Ok(out)
}

/// Children of every parent, canonicalized, sorted and deduplicated.
/// The parallel path partitions by parent and must agree byte for byte with
/// the sequential one.
pub fn expand_level(parents: &[MarkedSequence], parallel: bool) -> Result<Vec<MarkedSequence>> {
    let children: Vec<Vec<MarkedSequence>> = if parallel {
        parents.par_iter().map(insertions).collect::<Result<_>>()?
    } else {
        parents.iter().map(insertions).collect::<Result<_>>()?
    };
    let set: BTreeSet<MarkedSequence> = children
        .into_iter()
        .flatten()
        .map(|s| s.canonical())
        .collect();
    Ok(set.into_iter().collect())
}

/// Canonical representatives of all level-`n` sequences up to reversal,
/// sorted lexicographically.
pub fn enumerate_marked(n: usize) -> Result<Vec<MarkedSequence>> {
    Catalog::new().level(n).map(<[_]>::to_vec)
}

/// Every level-`n` sequence, reversals included.
pub fn enumerate_all(n: usize) -> Result<Vec<MarkedSequence>> {
    let mut all: BTreeSet<MarkedSequence> = BTreeSet::new();
    for s in enumerate_marked(n)? {
        all.insert(s.reversed());
        all.insert(s);
    }
    Ok(all.into_iter().collect())
}

/// Breadth-first level sets, memoized.
#[derive(Debug, Clone)]
pub struct Catalog {
    levels: Vec<Vec<MarkedSequence>>,
    parallel: bool,
}

impl Default for Catalog {
    fn default() -> Self {
        Catalog::new()
    }
}

impl Catalog {
    pub fn new() -> Self {
        Catalog {
            levels: vec![vec![MarkedSequence::base()]],
            parallel: true,
        }
    }

    pub fn sequential() -> Self {
        Catalog {
            parallel: false,
            ..Catalog::new()
        }
    }

    pub fn level(&mut self, n: usize) -> Result<&[MarkedSequence]> {
        while self.levels.len() <= n {
            let next = expand_level(self.levels.last().expect("level 0 present"), self.parallel)?;
            self.levels.push(next);
        }
        Ok(&self.levels[n])
    }
}

/// How sequences are grouped into circle-action classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum U1Relation {
    /// Multiset of the maximal blocks of entries > 1, each block up to
    /// reversal. Blocks may slide past runs of 1s and past each other.
    #[default]
    BlockMultiset,
    /// Maximal runs of 1s collapsed to a separator, the word taken up to
    /// reversal. Blocks keep their relative order.
    CollapsedWord,
}

impl std::str::FromStr for U1Relation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "blocks" => Ok(U1Relation::BlockMultiset),
            "collapsed" => Ok(U1Relation::CollapsedWord),
            other => Err(Error::InvalidArgument(format!(
                "unknown relation '{other}' (expected blocks or collapsed)"
            ))),
        }
    }
}

/// Key of a circle-action class; equal keys mean equivalent actions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct U1Key(Vec<Vec<u64>>);

fn blocks(seq: &MarkedSequence) -> Vec<Vec<u64>> {
    seq.entries()
        .split(|&x| x == 1)
        .filter(|b| !b.is_empty())
        .map(<[u64]>::to_vec)
        .collect()
}

fn min_with_reversal(v: Vec<u64>) -> Vec<u64> {
    let mut r = v.clone();
    r.reverse();
    v.min(r)
}

pub fn u1_key(seq: &MarkedSequence, relation: U1Relation) -> U1Key {
    match relation {
        U1Relation::BlockMultiset => {
            let mut b: Vec<Vec<u64>> = blocks(seq).into_iter().map(min_with_reversal).collect();
            b.sort();
            U1Key(b)
        }
        U1Relation::CollapsedWord => {
            let b = blocks(seq);
            let mut r: Vec<Vec<u64>> = b
                .iter()
                .rev()
                .map(|x| x.iter().rev().copied().collect())
                .collect();
            if b < r {
                r = b;
            }
            U1Key(r)
        }
    }
}

/// Blocks in brackets, e.g. `[2][2,5,3]`; the empty key is `[]`.
impl fmt::Display for U1Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("[]");
        }
        for b in &self.0 {
            let inner: Vec<String> = b.iter().map(u64::to_string).collect();
            write!(f, "[{}]", inner.join(","))?;
        }
        Ok(())
    }
}

impl Serialize for U1Key {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for U1Key {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        if s == "[]" {
            return Ok(U1Key(Vec::new()));
        }
        let body = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| serde::de::Error::custom(format!("malformed key '{s}'")))?;
        body.split("][")
            .map(|b| {
                b.split(',')
                    .map(|x| x.parse::<u64>().map_err(serde::de::Error::custom))
                    .collect()
            })
            .collect::<std::result::Result<_, _>>()
            .map(U1Key)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogClass {
    pub canonical: MarkedSequence,
    /// Every marked sequence in the class, reversals included, sorted.
    pub members: Vec<MarkedSequence>,
    pub u1_key: U1Key,
    pub m: usize,
    /// `l`-vector of the canonical representative.
    pub l: Vec<u64>,
    /// Largest `n + r - s` over the members; absent when semi-free.
    pub slack: Option<i64>,
}

impl CatalogClass {
    fn from_members(members: BTreeSet<MarkedSequence>, relation: U1Relation) -> Result<Self> {
        let canonical = members.iter().next().cloned().ok_or_else(|| {
            Error::Invariant("empty catalog class".into())
        })?;
        let inv = SequenceInvariants::compute(&canonical)?;
        let slack = members.iter().filter_map(|s| regularity(s).slack).max();
        Ok(CatalogClass {
            u1_key: u1_key(&canonical, relation),
            m: inv.m(),
            l: inv.l.l,
            canonical,
            members: members.into_iter().collect(),
            slack,
        })
    }
}

/// One class per reversal orbit.
pub fn marked_classes(n: usize) -> Result<Vec<CatalogClass>> {
    marked_classes_from(&enumerate_marked(n)?, U1Relation::default())
}

fn marked_classes_from(canonicals: &[MarkedSequence], relation: U1Relation) -> Result<Vec<CatalogClass>> {
    canonicals
        .par_iter()
        .map(|c| CatalogClass::from_members([c.clone(), c.reversed()].into(), relation))
        .collect()
}

/// Groups the reversal classes by [`u1_key`]; returns the classes sorted by
/// canonical representative and their number `delta(n)`.
pub fn u1_classes(n: usize, relation: U1Relation) -> Result<(Vec<CatalogClass>, usize)> {
    group_u1(&enumerate_marked(n)?, relation)
}

fn group_u1(canonicals: &[MarkedSequence], relation: U1Relation) -> Result<(Vec<CatalogClass>, usize)> {
    let mut groups: BTreeMap<U1Key, BTreeSet<MarkedSequence>> = BTreeMap::new();
    for c in canonicals {
        let g = groups.entry(u1_key(c, relation)).or_default();
        g.insert(c.reversed());
        g.insert(c.clone());
    }
    let mut classes = groups
        .into_values()
        .map(|g| CatalogClass::from_members(g, relation))
        .collect::<Result<Vec<_>>>()?;
    classes.sort_by(|a, b| a.canonical.cmp(&b.canonical));
    let delta = classes.len();
    Ok((classes, delta))
}

pub fn delta(n: usize, relation: U1Relation) -> Result<usize> {
    let seqs = enumerate_marked(n)?;
    Ok(seqs
        .iter()
        .map(|s| u1_key(s, relation))
        .collect::<BTreeSet<_>>()
        .len())
}

/// Prepending 1 to a representative of each class at level `n - 1` lands in
/// pairwise distinct classes at level `n`.
pub fn end_insertion_injective(n: usize, relation: U1Relation) -> Result<bool> {
    if n == 0 {
        return Ok(true);
    }
    let (prev, _) = u1_classes(n - 1, relation)?;
    let images: BTreeSet<U1Key> = prev
        .iter()
        .map(|c| {
            let mut k = vec![1];
            k.extend_from_slice(c.canonical.entries());
            u1_key(&MarkedSequence::from_trusted(k), relation)
        })
        .collect();
    Ok(images.len() == prev.len())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaRow {
    pub n: usize,
    pub delta: usize,
    pub marked_classes: usize,
    /// `delta(n) / n^2`, absent at `n = 0`.
    #[serde(serialize_with = "serialize_opt_rational")]
    pub ratio: Option<BigRational>,
}

fn serialize_opt_rational<S: serde::Serializer>(
    q: &Option<BigRational>,
    serializer: S,
) -> std::result::Result<S::Ok, S::Error> {
    match q {
        Some(q) => crate::rational::serialize_rational(q, serializer),
        None => serializer.serialize_none(),
    }
}

/// `delta(n)` and `delta(n)/n^2` for `n <= n_max`, checking monotonicity and
/// end-insertion injectivity along the way.
pub fn growth_report(n_max: usize, relation: U1Relation) -> Result<Vec<DeltaRow>> {
    let mut catalog = Catalog::new();
    let mut rows: Vec<DeltaRow> = Vec::new();
    for n in 0..=n_max {
        let level = catalog.level(n)?;
        let keys: BTreeSet<U1Key> = level.iter().map(|s| u1_key(s, relation)).collect();
        let delta = keys.len();
        if let Some(prev) = rows.last() {
            ensure_invariant!(
                delta >= prev.delta,
                "delta({n}) = {delta} < delta({}) = {}",
                n - 1,
                prev.delta
            );
            ensure_invariant!(
                end_insertion_injective(n, relation)?,
                "end insertion is not injective at n = {n}"
            );
        }
        let ratio = (n > 0).then(|| {
            BigRational::new(BigInt::from(delta), BigInt::from(n * n))
        });
        rows.push(DeltaRow {
            n,
            delta,
            marked_classes: level.len(),
            ratio,
        });
    }
    Ok(rows)
}

/// `(1, ..., 1)`, `(1, 2, ..., n, 1)`, `(1, 2, ..., n-1, 1, 1)` and
/// `(1, 2, ..., k, 1, n-k, ..., 2, 1)` for `floor((n+1)/2) <= k <= n-2`.
pub fn family_lebrun(n: usize) -> Result<Vec<MarkedSequence>> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "the LeBrun family is listed for n >= 3, got {n}"
        )));
    }
    let up = |top: usize| (1..=top as u64).collect::<Vec<_>>();
    let mut out = vec![MarkedSequence::all_ones(n)];
    let mut s = up(n);
    s.push(1);
    out.push(MarkedSequence::new(s)?);
    let mut s = up(n - 1);
    s.extend([1, 1]);
    out.push(MarkedSequence::new(s)?);
    for k in n.div_ceil(2)..=n - 2 {
        let mut s = up(k);
        s.push(1);
        s.extend((1..=(n - k) as u64).rev());
        out.push(MarkedSequence::new(s)?);
    }
    Ok(out)
}

/// One `{1,2}`-sequence per number `c` of 2s, `0 <= c <= floor(n/2)`.
pub fn family_involutive(n: usize) -> Result<Vec<MarkedSequence>> {
    if n < 1 {
        return Err(Error::InvalidArgument("the involutive family needs n >= 1".into()));
    }
    (0..=n / 2)
        .map(|c| {
            let mut k = Vec::with_capacity(n + 1);
            for _ in 0..c {
                k.extend([1, 2]);
            }
            k.resize(n + 1, 1);
            MarkedSequence::new(k)
        })
        .collect()
}

/// Starts from `(1,2,1)` and repeatedly inserts the largest adjacent sum,
/// taking the rightmost pair on ties.
pub fn family_fibonacci(n: usize) -> Result<MarkedSequence> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "the Fibonacci family starts at n = 2, got {n}"
        )));
    }
    let mut k: Vec<u64> = vec![1, 2, 1];
    for _ in 2..n {
        let (w, sum) = k
            .windows(2)
            .enumerate()
            .map(|(w, p)| (w, p[0].checked_add(p[1])))
            .max_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
            .expect("at least one adjacency");
        let sum = sum.ok_or_else(|| Error::InvalidArgument("weight overflow".into()))?;
        k.insert(w + 1, sum);
    }
    MarkedSequence::new(k)
}

/// `f(1) = f(2) = 1`.
pub fn fibonacci(j: usize) -> u64 {
    let (mut a, mut b) = (0u64, 1u64);
    for _ in 0..j {
        (a, b) = (b, a + b);
    }
    a
}

/// On-disk cache of the reversal classes of one level.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogCache {
    pub n: usize,
    pub classes: Vec<CatalogClass>,
}

pub fn cache_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("catalog-n{n}.json"))
}

/// Reversal classes at level `n`, read from `dir` when a matching cache is
/// present and written there otherwise. An unreadable cache is rebuilt.
pub fn marked_classes_cached(n: usize, dir: Option<&Path>) -> Result<Vec<CatalogClass>> {
    let Some(dir) = dir else {
        return marked_classes(n);
    };
    let path = cache_path(dir, n);
    if let Ok(text) = std::fs::read_to_string(&path) {
        if let Ok(cache) = serde_json::from_str::<CatalogCache>(&text) {
            if cache.n == n && cache.classes.iter().all(|c| c.canonical.n() == n) {
                return Ok(cache.classes);
            }
        }
    }
    let classes = marked_classes(n)?;
    std::fs::create_dir_all(dir)?;
    let cache = CatalogCache { n, classes };
    std::fs::write(&path, serde_json::to_string(&cache)?)?;
    Ok(cache.classes)
}

/// Circle-action classes regrouped from the reversal classes.
pub fn u1_classes_from(marked: &[CatalogClass], relation: U1Relation) -> Result<(Vec<CatalogClass>, usize)> {
    let canonicals: Vec<MarkedSequence> = marked.iter().map(|c| c.canonical.clone()).collect();
    group_u1(&canonicals, relation)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn seqs(v: &[&str]) -> Vec<MarkedSequence> {
        v.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn strs(v: &[MarkedSequence]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn insertion_children() {
        let c = insertions(&"1,1,1,1".parse().unwrap()).unwrap();
        assert_eq!(
            strs(&c),
            ["(1,1,1,1,1)", "(1,2,1,1,1)", "(1,1,2,1,1)", "(1,1,1,2,1)", "(1,1,1,1,1)"]
        );
        let c = insertions(&"1,2,3,1".parse().unwrap()).unwrap();
        assert_eq!(
            strs(&c),
            ["(1,1,2,3,1)", "(1,3,2,3,1)", "(1,2,5,3,1)", "(1,2,3,4,1)", "(1,2,3,1,1)"]
        );
        let c = insertions(&MarkedSequence::base()).unwrap();
        assert_eq!(strs(&c), ["(1,1)", "(1,1)"]);
    }

    #[test]
    fn small_levels() {
        assert_eq!(enumerate_marked(2).unwrap(), seqs(&["1,1,1", "1,2,1"]));
        assert_eq!(enumerate_marked(3).unwrap(), seqs(&["1,1,1,1", "1,1,2,1", "1,2,3,1"]));
        assert_eq!(enumerate_all(3).unwrap().len(), 5);
        assert_eq!(enumerate_marked(4).unwrap().len(), 9);
    }

    #[test]
    fn parallel_matches_sequential() {
        let mut a = Catalog::new();
        let mut b = Catalog::sequential();
        assert_eq!(a.level(8).unwrap(), b.level(8).unwrap());
    }

    #[test]
    fn keys() {
        let s: MarkedSequence = "1,3,2,1,2,1".parse().unwrap();
        assert_eq!(u1_key(&s, U1Relation::BlockMultiset).to_string(), "[2][2,3]");
        assert_eq!(u1_key(&s, U1Relation::CollapsedWord).to_string(), "[2][2,3]");
        let s: MarkedSequence = "1,2,1,3,2,1".parse().unwrap();
        assert_eq!(u1_key(&s, U1Relation::BlockMultiset).to_string(), "[2][2,3]");
        assert_eq!(u1_key(&s, U1Relation::CollapsedWord).to_string(), "[2][3,2]");
        assert_eq!(u1_key(&MarkedSequence::all_ones(4), U1Relation::BlockMultiset).to_string(), "[]");
        let k = u1_key(&s, U1Relation::BlockMultiset);
        let json = serde_json::to_string(&k).unwrap();
        assert_eq!(serde_json::from_str::<U1Key>(&json).unwrap(), k);
    }

    #[test]
    fn delta_small() {
        let d: Vec<usize> = (0..=5).map(|n| delta(n, U1Relation::BlockMultiset).unwrap()).collect();
        assert_eq!(d, vec![1, 1, 2, 3, 7, 15]);
        assert_eq!(delta(5, U1Relation::CollapsedWord).unwrap(), 16);
    }

    #[test]
    fn families() {
        assert_eq!(
            strs(&family_lebrun(4).unwrap()),
            ["(1,1,1,1,1)", "(1,2,3,4,1)", "(1,2,3,1,1)", "(1,2,1,2,1)"]
        );
        assert_eq!(family_lebrun(3).unwrap().len(), 3);
        assert_eq!(
            strs(&family_involutive(7).unwrap()),
            [
                "(1,1,1,1,1,1,1,1)",
                "(1,2,1,1,1,1,1,1)",
                "(1,2,1,2,1,1,1,1)",
                "(1,2,1,2,1,2,1,1)"
            ]
        );
        assert_eq!(family_fibonacci(5).unwrap().to_string(), "(1,2,5,8,3,1)");
        assert_eq!(family_fibonacci(7).unwrap().to_string(), "(1,2,5,13,21,8,3,1)");
        assert_eq!(fibonacci(1), 1);
        assert_eq!(fibonacci(9), 34);
    }

    #[test]
    fn cache_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let a = marked_classes_cached(4, Some(dir.path())).unwrap();
        assert!(cache_path(dir.path(), 4).exists());
        let b = marked_classes_cached(4, Some(dir.path())).unwrap();
        assert_eq!(a, b);
        std::fs::write(cache_path(dir.path(), 4), "not json").unwrap();
        assert_eq!(marked_classes_cached(4, Some(dir.path())).unwrap(), a);
    }
}
