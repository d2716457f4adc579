//! Adapted orderings of the window, reduced words for the longest Weyl
//! group element, and the cluster-algebra initial seed they induce.
//!
//! An ordering `x(1) < ... < x(r)` of the window objects is adapted when
//! `Hom(x(i), x(j)) = 0` for `i < j`; its letter word `(pi(x(1)), ...,
//! pi(x(r)))` is then a reduced word for `w_0` adapted to the orientation.
//! Seed data lives on the index set `[-n,-1] ∪ [1,r]`: next-occurrence
//! pointers `k+`, the exchangeable set `e`, the seed quiver and its
//! exchange matrices, the relabelling `theta`, and extremal-weight labels
//! for the generalized minors.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::dynkin::DynkinType;
use crate::error::{Error, Result};
use crate::numerics::EulerData;
use crate::rigid::summand_dimvec;
use crate::weyl::{reflect, simple_root, w0_apply, WeightVector};
use crate::zq::{Window, ZqVertex};

/// A total order on the window objects with vanishing forward Hom spaces,
/// together with its letter word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdaptedOrdering {
    /// `x(1), ..., x(r)`.
    pub objects: Vec<ZqVertex>,
    /// `pi` applied positionwise.
    pub word: Vec<usize>,
}

impl AdaptedOrdering {
    fn from_objects(objects: Vec<ZqVertex>) -> AdaptedOrdering {
        let word = objects.iter().map(|v| v.vertex).collect();
        AdaptedOrdering { objects, word }
    }

    /// 1-based position of a window object.
    pub fn position_of(&self, v: ZqVertex) -> Option<i64> {
        self.objects
            .iter()
            .position(|&x| x == v)
            .map(|p| p as i64 + 1)
    }

    /// Rebuilds the ordering from a word: the `m`-th occurrence of letter
    /// `q` names the object `(m-1, q)`. Fails if the letter counts do not
    /// exhaust the window.
    pub fn from_word(window: &Window, word: &[usize]) -> Result<AdaptedOrdering> {
        if word.len() != window.len() {
            return Err(Error::Parse(format!(
                "word length {} does not match the window size {}",
                word.len(),
                window.len()
            )));
        }
        let n = window.quiver().rank();
        let mut counts = vec![0i64; n + 1];
        let mut objects = Vec::with_capacity(word.len());
        for &q in word {
            if q < 1 || q > n {
                return Err(Error::Parse(format!("letter {q} out of range")));
            }
            let x = ZqVertex::new(counts[q], q);
            if !window.contains(x) {
                return Err(Error::Parse(format!(
                    "letter {q} occurs more than N({q})+1 times"
                )));
            }
            counts[q] += 1;
            objects.push(x);
        }
        Ok(AdaptedOrdering::from_objects(objects))
    }
}

/// The canonical adapted ordering: repeated sink-peeling of the window.
///
/// Among the available sinks (never more than one per tau-orbit row) the
/// next object is the one with the smallest column, then the longest row,
/// then the smallest vertex label; once every available sink is the last
/// remaining object of its row, the tail is emitted by descending vertex
/// label. This layered order reproduces the reference layout of the window
/// figures.
pub fn adapted_ordering(window: &Window) -> AdaptedOrdering {
    let r = window.len();
    let n = window.quiver().rank();
    let mut out_deg = vec![0usize; r];
    let mut in_adj: Vec<Vec<usize>> = vec![Vec::new(); r];
    for &(s, d, _) in window.arrows() {
        out_deg[s] += 1;
        in_adj[d].push(s);
    }
    let mut remaining = vec![true; r];
    let mut row_left = vec![0usize; n + 1];
    for &x in window.objects() {
        row_left[x.vertex] += 1;
    }

    let mut objects = Vec::with_capacity(r);
    for _ in 0..r {
        let sinks: Vec<usize> = (0..r)
            .filter(|&i| remaining[i] && out_deg[i] == 0)
            .collect();
        debug_assert!(!sinks.is_empty(), "window digraph must stay acyclic");
        let tail_only = sinks.iter().all(|&i| row_left[window.pi(i)] == 1);
        let pick = if tail_only {
            *sinks.iter().max_by_key(|&&i| window.pi(i)).unwrap()
        } else {
            *sinks
                .iter()
                .min_by_key(|&&i| {
                    let v = window.object(i);
                    (v.column, -window.exponent(v.vertex), v.vertex)
                })
                .unwrap()
        };
        remaining[pick] = false;
        row_left[window.pi(pick)] -= 1;
        for &p in &in_adj[pick] {
            out_deg[p] -= 1;
        }
        objects.push(window.object(pick));
    }
    AdaptedOrdering::from_objects(objects)
}

/// Checks the defining property against a Hom table.
pub fn ordering_is_adapted(window: &Window, hom: &[Vec<i64>], ordering: &AdaptedOrdering) -> bool {
    let idx: Vec<usize> = ordering
        .objects
        .iter()
        .map(|&v| window.index_of(v).expect("ordering object in window"))
        .collect();
    for i in 0..idx.len() {
        for j in i + 1..idx.len() {
            if hom[idx[i]][idx[j]] != 0 {
                return false;
            }
        }
    }
    true
}

/// Enumerates adapted orderings by backtracking, up to `limit` of them.
pub fn enumerate_adapted_orderings(
    window: &Window,
    hom: &[Vec<i64>],
    limit: usize,
) -> Vec<Vec<usize>> {
    let r = window.len();
    let mut used = vec![false; r];
    let mut current = Vec::with_capacity(r);
    let mut out = Vec::new();
    fn go(
        r: usize,
        hom: &[Vec<i64>],
        used: &mut Vec<bool>,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
        limit: usize,
    ) {
        if out.len() >= limit {
            return;
        }
        if current.len() == r {
            out.push(current.clone());
            return;
        }
        for cand in 0..r {
            if used[cand] {
                continue;
            }
            // cand precedes everything still unused
            let ok = (0..r).all(|y| y == cand || used[y] || hom[cand][y] == 0);
            if !ok {
                continue;
            }
            used[cand] = true;
            current.push(cand);
            go(r, hom, used, current, out, limit);
            used[cand] = false;
            current.pop();
            if out.len() >= limit {
                return;
            }
        }
    }
    go(r, hom, &mut used, &mut current, &mut out, limit);
    out
}

/// The seed index set `[-n,-1] ∪ [1,r]` in increasing order.
pub fn seed_positions(n: usize, r: usize) -> Vec<i64> {
    (-(n as i64)..=-1).chain(1..=r as i64).collect()
}

/// Letter at a seed position: `|i_{-j}| = j` for the virtual prefix.
pub fn letter_at(word: &[usize], k: i64) -> usize {
    if k < 0 {
        (-k) as usize
    } else {
        word[k as usize - 1]
    }
}

/// Next-occurrence pointers `k+` (value `r+1` when the letter never
/// reappears) and the exchangeable set `e`.
pub fn kplus_and_e(word: &[usize], n: usize) -> (BTreeMap<i64, i64>, BTreeSet<i64>) {
    let r = word.len() as i64;
    let positions = seed_positions(n, word.len());
    let mut kplus = BTreeMap::new();
    for (a, &k) in positions.iter().enumerate() {
        let target = letter_at(word, k);
        let next = positions[a + 1..]
            .iter()
            .copied()
            .find(|&l| letter_at(word, l) == target)
            .unwrap_or(r + 1);
        kplus.insert(k, next);
    }
    let e: BTreeSet<i64> = (1..=r).filter(|&k| kplus[&k] <= r).collect();
    (kplus, e)
}

/// Arrows of the seed quiver on `[-n,-1] ∪ [1,r]`: for `k < l` with at
/// least one endpoint exchangeable, `k -> l` iff `k+ = l`, and `l -> k` iff
/// `l < k+ < l+` and the Cartan entry at the two letters is `-1`.
pub fn atilde(word: &[usize], t: &DynkinType) -> BTreeSet<(i64, i64)> {
    let n = t.rank;
    let cartan = t.cartan();
    let (kplus, e) = kplus_and_e(word, n);
    let positions = seed_positions(n, word.len());
    let mut arrows = BTreeSet::new();
    for (a, &k) in positions.iter().enumerate() {
        for &l in &positions[a + 1..] {
            if !e.contains(&k) && !e.contains(&l) {
                continue;
            }
            if kplus[&k] == l {
                arrows.insert((k, l));
            }
            if l < kplus[&k] && kplus[&k] < kplus[&l] {
                let (ik, il) = (letter_at(word, k), letter_at(word, l));
                if cartan.get(ik - 1, il - 1) == -1 {
                    arrows.insert((l, k));
                }
            }
        }
    }
    arrows
}

/// Exchange matrix read off the seed quiver: rows over `[-n,-1] ∪ [1,r]`,
/// columns over `e` ascending; entries `+1` for `row -> col`, `-1` for
/// `col -> row`.
pub fn btilde(word: &[usize], t: &DynkinType) -> Vec<Vec<i64>> {
    let arrows = atilde(word, t);
    let (_, e) = kplus_and_e(word, t.rank);
    let positions = seed_positions(t.rank, word.len());
    positions
        .iter()
        .map(|&k| {
            e.iter()
                .map(|&l| {
                    if arrows.contains(&(k, l)) {
                        1
                    } else if arrows.contains(&(l, k)) {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// [`btilde`] with the rows of the non-exchangeable positive positions
/// removed: `r` rows by `r - n` columns.
pub fn btilde_prime(word: &[usize], t: &DynkinType) -> Vec<Vec<i64>> {
    let b = btilde(word, t);
    let (_, e) = kplus_and_e(word, t.rank);
    let positions = seed_positions(t.rank, word.len());
    positions
        .iter()
        .zip(b)
        .filter(|(&k, _)| k < 0 || e.contains(&k))
        .map(|(_, row)| row)
        .collect()
}

/// The relabelling of positions by frozen indices and exchangeable
/// positions: `theta(j) = -q` when `x(j) = (0, q)`, else the position of
/// `tau^{-1} x(j)`. A bijection `[1,r] -> [-n,-1] ∪ e`.
pub fn theta(ordering: &AdaptedOrdering) -> BTreeMap<i64, i64> {
    let mut map = BTreeMap::new();
    for (idx, &x) in ordering.objects.iter().enumerate() {
        let j = idx as i64 + 1;
        let k = if x.column == 0 {
            -(x.vertex as i64)
        } else {
            ordering
                .position_of(x.tau(-1))
                .expect("tau-orbit predecessor listed")
        };
        map.insert(j, k);
    }
    map
}

/// Extremal-weight label of the generalized minor at a seed position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorLabel {
    pub k: i64,
    /// The fundamental-weight index `|i_k|`.
    pub fundamental: usize,
    /// `v_{>k}(varpi_{|i_k|})` in fundamental-weight coordinates.
    pub weight: WeightVector,
}

/// `v_{>k} = s_{i_r} ... s_{i_{k+1}}` for positive `k`, `w_0` for frozen
/// `k`; the label weight is its action on the fundamental weight of the
/// letter at `k`.
pub fn minor_label(t: &DynkinType, word: &[usize], k: i64) -> MinorLabel {
    let fundamental = letter_at(word, k);
    let base = WeightVector::fundamental(t.rank, fundamental);
    let weight = if k < 0 {
        w0_apply(t, &base)
    } else {
        // apply s_{i_{k+1}} first, s_{i_r} last
        let mut v = base;
        for &q in &word[k as usize..] {
            v = reflect(t, q, &v);
        }
        v
    };
    MinorLabel {
        k,
        fundamental,
        weight,
    }
}

/// Divided-power exponents along a word applied left to right:
/// `b_m = (s_{i_{m-1}} ... s_{i_1} lambda)(h_{i_m})`.
pub fn lowering_exponents(t: &DynkinType, letters: &[usize], lambda: &WeightVector) -> Vec<i64> {
    let mut v = lambda.clone();
    let mut out = Vec::with_capacity(letters.len());
    for &q in letters {
        out.push(v.eval(q));
        v = reflect(t, q, &v);
    }
    out
}

/// Per-position weight consistency: the summand dimension vector of `x(j)`
/// lowers the fundamental weight of its row to exactly the minor label
/// weight at `theta(j)`.
pub fn weight_consistency(
    window: &Window,
    ed: &EulerData,
    ordering: &AdaptedOrdering,
) -> Result<Vec<(i64, bool)>> {
    let t = window.quiver().dynkin();
    let th = theta(ordering);
    let mut out = Vec::with_capacity(ordering.objects.len());
    for (idx, &x) in ordering.objects.iter().enumerate() {
        let j = idx as i64 + 1;
        let k = th[&j];
        let i = letter_at(&ordering.word, k);
        let dims = summand_dimvec(window, ed, x)?;
        let mut lhs = WeightVector::fundamental(t.rank, i);
        for q in 1..=t.rank {
            let alpha = simple_root(&t, q);
            for (a, b) in lhs.0.iter_mut().zip(alpha.0.iter()) {
                *a -= dims[q - 1] * b;
            }
        }
        let rhs = minor_label(&t, &ordering.word, k).weight;
        out.push((j, lhs == rhs));
    }
    Ok(out)
}

/// Builds the seed quiver directly from the window: tau-orbit chains
/// `-q -> pos(0,q) -> ... -> pos(N(q),q)`, the positional images of the
/// window arrows, and their `theta`-shifts (which supply the arrows into
/// frozen vertices at the injective boundary); arrows with both endpoints
/// non-exchangeable are dropped.
pub fn comparison_quiver(window: &Window, ordering: &AdaptedOrdering) -> BTreeSet<(i64, i64)> {
    let n = window.quiver().rank();
    let (_, e) = kplus_and_e(&ordering.word, n);
    let th = theta(ordering);
    let meets_e = |k: i64, l: i64| e.contains(&k) || e.contains(&l);
    let mut arrows = BTreeSet::new();

    for q in 1..=n {
        let mut chain = vec![-(q as i64)];
        for i in 0..=window.exponent(q) {
            chain.push(
                ordering
                    .position_of(ZqVertex::new(i, q))
                    .expect("window object listed"),
            );
        }
        for w in chain.windows(2) {
            if meets_e(w[0], w[1]) {
                arrows.insert((w[0], w[1]));
            }
        }
    }

    for &(s, d, _) in window.arrows() {
        let k = ordering.position_of(window.object(s)).unwrap();
        let l = ordering.position_of(window.object(d)).unwrap();
        if meets_e(k, l) {
            arrows.insert((k, l));
        }
        let (a, b) = (th[&k], th[&l]);
        if meets_e(a, b) {
            arrows.insert((a, b));
        }
    }
    arrows
}

/// Graph equality of [`atilde`] with the window-derived
/// [`comparison_quiver`].
pub fn comparison_matches(window: &Window, ordering: &AdaptedOrdering) -> bool {
    let t = window.quiver().dynkin();
    atilde(&ordering.word, &t) == comparison_quiver(window, ordering)
}

/// Serialized seed for the `seed` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SeedJson {
    pub word: Vec<usize>,
    pub e: Vec<i64>,
    pub theta: BTreeMap<i64, i64>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<i64>>,
    #[serde(rename = "Bprime")]
    pub b_prime: Vec<Vec<i64>>,
    pub minors: Vec<MinorJson>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MinorJson {
    pub k: i64,
    pub fundamental: usize,
    pub weight: Vec<i64>,
}

pub fn seed_json(window: &Window, ordering: &AdaptedOrdering) -> SeedJson {
    let t = window.quiver().dynkin();
    let word = ordering.word.clone();
    let (_, e) = kplus_and_e(&word, t.rank);
    let minors = seed_positions(t.rank, word.len())
        .into_iter()
        .map(|k| {
            let m = minor_label(&t, &word, k);
            MinorJson {
                k,
                fundamental: m.fundamental,
                weight: m.weight.0,
            }
        })
        .collect();
    SeedJson {
        b: btilde(&word, &t),
        b_prime: btilde_prime(&word, &t),
        e: e.into_iter().collect(),
        theta: theta(ordering),
        minors,
        word,
    }
}
