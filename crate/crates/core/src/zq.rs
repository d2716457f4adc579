//! The stable translation quiver `ZQ` and the Auslander-Reiten window.
//!
//! `ZQ` has vertices `Z x Q_0`. For every arrow `a: t -> h` of `Q` and every
//! column `i` there are arrows
//!
//! ```text
//!   (i, a):  (i+1, t) -> (i, h)       (i, a*): (i, h) -> (i, t)
//! ```
//!
//! so paths never increase the column. The translation is
//! `tau(i,q) = (i+1,q)`.
//!
//! The Nakayama permutation `nu` is the translation-reflection
//! `nu(p,q) = (p + shift(q), mu(q))` with the per-family shift below; it
//! determines the exponents `N(q)` by `tau^{N(q)}(0,q) = nu(0, mu(q))` and
//! with them the window `{(i,q) : 0 <= i <= N(q)}`, whose vertices are in
//! bijection with the indecomposable `kQ`-modules. An object is injective
//! in the window iff its column is `0` and projective iff its column is
//! `N(q)`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dynkin::{Family, Quiver};
use crate::error::{Error, Result};

/// A vertex `(column, vertex)` of `ZQ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ZqVertex {
    pub column: i64,
    pub vertex: usize,
}

impl ZqVertex {
    pub fn new(column: i64, vertex: usize) -> Self {
        ZqVertex { column, vertex }
    }

    /// `tau^k`.
    pub fn tau(&self, k: i64) -> ZqVertex {
        ZqVertex::new(self.column + k, self.vertex)
    }
}

/// Label of a `ZQ` arrow: the underlying `Q`-arrow index at a column,
/// either the arrow itself or its starred double.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ZqArrow {
    pub column: i64,
    pub arrow: usize,
    pub star: bool,
}

/// Number of arrows pointing towards vertex `1` on the unique walk from `1`
/// to `q` in the underlying tree.
pub fn walk_defect(quiver: &Quiver, q: usize) -> i64 {
    let n = quiver.rank();
    debug_assert!((1..=n).contains(&q));
    // parent pointers of the tree rooted at 1
    let mut parent = vec![0usize; n + 1];
    let mut seen = vec![false; n + 1];
    seen[1] = true;
    let mut stack = vec![1usize];
    while let Some(u) = stack.pop() {
        for a in quiver.arrows() {
            for (x, y) in [(a.tail, a.head), (a.head, a.tail)] {
                if x == u && !seen[y] {
                    seen[y] = true;
                    parent[y] = u;
                    stack.push(y);
                }
            }
        }
    }
    let mut count = 0;
    let mut v = q;
    while v != 1 {
        let p = parent[v];
        // the walk edge {p, v} with p nearer to 1; an arrow v -> p points
        // towards 1
        if quiver.arrows().iter().any(|a| a.tail == v && a.head == p) {
            count += 1;
        }
        v = p;
    }
    count
}

/// Column shift of the Nakayama permutation at `q`:
/// `nu(p, q) = (p + nakayama_shift(q), mu(q))`.
pub fn nakayama_shift(quiver: &Quiver, q: usize) -> i64 {
    let t = quiver.dynkin();
    let n = t.rank as i64;
    let mu_q = t.mu(q);
    let l = |v: usize| walk_defect(quiver, v);
    match t.family {
        Family::A => q as i64 - 1 + l(mu_q) - l(q),
        Family::D => n - 2 + l(mu_q) - l(q),
        Family::E => match t.rank {
            6 => {
                if q <= 5 {
                    q as i64 + 2 + l(mu_q) - l(q)
                } else {
                    5
                }
            }
            7 => 8,
            _ => 14,
        },
    }
}

pub fn nakayama(quiver: &Quiver, v: ZqVertex) -> ZqVertex {
    ZqVertex::new(
        v.column + nakayama_shift(quiver, v.vertex),
        quiver.dynkin().mu(v.vertex),
    )
}

pub fn nakayama_inv(quiver: &Quiver, v: ZqVertex) -> ZqVertex {
    let mu_v = quiver.dynkin().mu(v.vertex);
    ZqVertex::new(v.column - nakayama_shift(quiver, mu_v), mu_v)
}

/// Object-level suspension. On vertices the suspension acts through the
/// inverse twist, so that `sigma(sigma(v)) = tau^{-h}(v)` with `h` the
/// Coxeter number.
pub fn sigma(quiver: &Quiver, v: ZqVertex) -> ZqVertex {
    nakayama_inv(quiver, v.tau(-1))
}

/// The exponent `N(q)` defined by `tau^{N(q)}(0,q) = nu(0, mu(q))`.
pub fn nu_exponent(quiver: &Quiver, q: usize) -> Result<i64> {
    let t = quiver.dynkin();
    let img = nakayama(quiver, ZqVertex::new(0, t.mu(q)));
    if img.vertex != q {
        return Err(Error::InternalInconsistency(format!(
            "nu(0,{}) = ({},{}) is not in the tau-orbit of (0,{q})",
            t.mu(q),
            img.column,
            img.vertex
        )));
    }
    if img.column < 0 {
        return Err(Error::InternalInconsistency(format!(
            "negative exponent N({q}) = {}",
            img.column
        )));
    }
    Ok(img.column)
}

/// A neighboring vertex together with the arrow label reaching it.
pub type ZqNeighbor = (ZqVertex, ZqArrow);

/// Incoming and outgoing `ZQ` arrows at a vertex (unrestricted, the full
/// translation quiver).
pub fn zq_arrows_at(quiver: &Quiver, v: ZqVertex) -> (Vec<ZqNeighbor>, Vec<ZqNeighbor>) {
    let mut incoming = Vec::new();
    let mut outgoing = Vec::new();
    for (idx, a) in quiver.arrows().iter().enumerate() {
        // (i, a): (i+1, t) -> (i, h)
        if a.head == v.vertex {
            incoming.push((
                ZqVertex::new(v.column + 1, a.tail),
                ZqArrow {
                    column: v.column,
                    arrow: idx,
                    star: false,
                },
            ));
        }
        if a.tail == v.vertex {
            outgoing.push((
                ZqVertex::new(v.column - 1, a.head),
                ZqArrow {
                    column: v.column - 1,
                    arrow: idx,
                    star: false,
                },
            ));
        }
        // (i, a*): (i, h) -> (i, t)
        if a.tail == v.vertex {
            incoming.push((
                ZqVertex::new(v.column, a.head),
                ZqArrow {
                    column: v.column,
                    arrow: idx,
                    star: true,
                },
            ));
        }
        if a.head == v.vertex {
            outgoing.push((
                ZqVertex::new(v.column, a.tail),
                ZqArrow {
                    column: v.column,
                    arrow: idx,
                    star: true,
                },
            ));
        }
    }
    incoming.sort_unstable_by_key(|(w, _)| (w.column, w.vertex));
    outgoing.sort_unstable_by_key(|(w, _)| (w.column, w.vertex));
    (incoming, outgoing)
}

/// The window between the two canonical copies of `Q^op` in `ZQ`: objects
/// `(i,q)` with `0 <= i <= N(q)` and all `ZQ` arrows between them.
#[derive(Debug, Clone)]
pub struct Window {
    quiver: Quiver,
    /// `N(q)` indexed by `q - 1`.
    n: Vec<i64>,
    /// Objects sorted by `(column, vertex)`.
    objects: Vec<ZqVertex>,
    index: BTreeMap<(i64, usize), usize>,
    /// Arrows as `(source index, target index, label)`, sorted.
    arrows: Vec<(usize, usize, ZqArrow)>,
}

impl Window {
    pub fn build(quiver: &Quiver) -> Result<Window> {
        let t = quiver.dynkin();
        let mut n = Vec::with_capacity(t.rank);
        for q in 1..=t.rank {
            n.push(nu_exponent(quiver, q)?);
        }
        let h = t.coxeter_number();
        for q in 1..=t.rank {
            if n[q - 1] + n[t.mu(q) - 1] != h - 2 {
                return Err(Error::InternalInconsistency(format!(
                    "N({q}) + N(mu({q})) = {} differs from h - 2 = {}",
                    n[q - 1] + n[t.mu(q) - 1],
                    h - 2
                )));
            }
        }

        let mut objects = Vec::new();
        for q in 1..=t.rank {
            for i in 0..=n[q - 1] {
                objects.push(ZqVertex::new(i, q));
            }
        }
        objects.sort_unstable_by_key(|v| (v.column, v.vertex));
        if objects.len() != t.positive_roots() {
            return Err(Error::InternalInconsistency(format!(
                "window has {} objects, expected {}",
                objects.len(),
                t.positive_roots()
            )));
        }
        let index: BTreeMap<(i64, usize), usize> = objects
            .iter()
            .enumerate()
            .map(|(k, v)| ((v.column, v.vertex), k))
            .collect();

        let mut arrows = Vec::new();
        for (src_idx, &src) in objects.iter().enumerate() {
            let (_, outgoing) = zq_arrows_at(quiver, src);
            for (dst, label) in outgoing {
                if let Some(&dst_idx) = index.get(&(dst.column, dst.vertex)) {
                    arrows.push((src_idx, dst_idx, label));
                }
            }
        }
        arrows.sort_unstable();

        Ok(Window {
            quiver: quiver.clone(),
            n,
            objects,
            index,
            arrows,
        })
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn exponent(&self, q: usize) -> i64 {
        self.n[q - 1]
    }

    pub fn exponents(&self) -> &[i64] {
        &self.n
    }

    /// Number of objects, i.e. the number of positive roots.
    pub fn len(&self) -> usize {
        self.objects.len()
    }

    pub fn is_empty(&self) -> bool {
        self.objects.is_empty()
    }

    pub fn objects(&self) -> &[ZqVertex] {
        &self.objects
    }

    pub fn arrows(&self) -> &[(usize, usize, ZqArrow)] {
        &self.arrows
    }

    pub fn contains(&self, v: ZqVertex) -> bool {
        self.index.contains_key(&(v.column, v.vertex))
    }

    pub fn index_of(&self, v: ZqVertex) -> Option<usize> {
        self.index.get(&(v.column, v.vertex)).copied()
    }

    pub fn object(&self, idx: usize) -> ZqVertex {
        self.objects[idx]
    }

    /// `pi` forgets the column.
    pub fn pi(&self, idx: usize) -> usize {
        self.objects[idx].vertex
    }

    /// Projective objects sit at the end of their tau-orbit row.
    pub fn is_projective(&self, v: ZqVertex) -> bool {
        v.column == self.exponent(v.vertex)
    }

    /// Injective objects sit at column 0.
    pub fn is_injective(&self, v: ZqVertex) -> bool {
        v.column == 0
    }

    pub fn out_neighbors(&self, idx: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|&&(s, _, _)| s == idx)
            .map(|&(_, d, _)| d)
            .collect()
    }

    pub fn in_neighbors(&self, idx: usize) -> Vec<usize> {
        self.arrows
            .iter()
            .filter(|&&(_, d, _)| d == idx)
            .map(|&(s, _, _)| s)
            .collect()
    }
}

/// Serialized window:
/// `{"objects":[[i,q],...],"arrows":[[[i,q],[i,q]],...],"N":{"q":N}}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WindowJson {
    pub objects: Vec<[i64; 2]>,
    pub arrows: Vec<[[i64; 2]; 2]>,
    #[serde(rename = "N")]
    pub n: BTreeMap<usize, i64>,
}

impl Window {
    pub fn to_json(&self) -> WindowJson {
        let enc = |v: ZqVertex| [v.column, v.vertex as i64];
        let mut arrows: Vec<[[i64; 2]; 2]> = self
            .arrows
            .iter()
            .map(|&(s, d, _)| [enc(self.objects[s]), enc(self.objects[d])])
            .collect();
        arrows.sort_unstable();
        WindowJson {
            objects: self.objects.iter().map(|&v| enc(v)).collect(),
            arrows,
            n: (1..=self.quiver.rank())
                .map(|q| (q, self.exponent(q)))
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{d5_example, DynkinType, Quiver};

    fn a2() -> Quiver {
        Quiver::parse(DynkinType::new(Family::A, 2).unwrap(), "1>2").unwrap()
    }

    #[test]
    fn zq_arrow_examples() {
        let q = a2();
        let (inc, out) = zq_arrows_at(&q, ZqVertex::new(0, 2));
        assert_eq!(
            inc.iter().map(|(v, _)| *v).collect::<Vec<_>>(),
            vec![ZqVertex::new(1, 1)]
        );
        assert_eq!(
            out.iter().map(|(v, _)| *v).collect::<Vec<_>>(),
            vec![ZqVertex::new(0, 1)]
        );

        let (_, out) = zq_arrows_at(&q, ZqVertex::new(5, 1));
        assert_eq!(
            out.iter().map(|(v, _)| *v).collect::<Vec<_>>(),
            vec![ZqVertex::new(4, 2)]
        );

        let d5 = d5_example();
        let (inc, _) = zq_arrows_at(&d5, ZqVertex::new(0, 4));
        assert_eq!(
            inc.iter().map(|(v, _)| *v).collect::<Vec<_>>(),
            vec![ZqVertex::new(0, 3)]
        );
    }

    #[test]
    fn walk_defect_examples() {
        let q = a2();
        assert_eq!(walk_defect(&q, 1), 0);
        assert_eq!(walk_defect(&q, 2), 0);

        let d5 = d5_example();
        let l: Vec<i64> = (1..=5).map(|v| walk_defect(&d5, v)).collect();
        // walk 1-2-3-4 carries the two arrows 2>1 and 4>3 towards 1
        assert_eq!(l, vec![0, 1, 1, 2, 1]);
    }

    #[test]
    fn nakayama_examples() {
        let q = a2();
        assert_eq!(nakayama(&q, ZqVertex::new(0, 1)), ZqVertex::new(0, 2));

        let e7 = Quiver::all_orientations(DynkinType::new(Family::E, 7).unwrap())
            .into_iter()
            .next()
            .unwrap();
        assert_eq!(nakayama(&e7, ZqVertex::new(0, 3)), ZqVertex::new(8, 3));

        let d5 = d5_example();
        assert_eq!(nakayama(&d5, ZqVertex::new(0, 4)), ZqVertex::new(2, 5));
        assert_eq!(nakayama(&d5, ZqVertex::new(0, 5)), ZqVertex::new(4, 4));
        // nakayama_inv really inverts
        for q in 1..=5 {
            for c in -3..4 {
                let v = ZqVertex::new(c, q);
                assert_eq!(nakayama_inv(&d5, nakayama(&d5, v)), v);
            }
        }
    }

    #[test]
    fn nu_exponent_examples() {
        let q = a2();
        assert_eq!(nu_exponent(&q, 1).unwrap(), 1);
        assert_eq!(nu_exponent(&q, 2).unwrap(), 0);

        let d5 = d5_example();
        let n: Vec<i64> = (1..=5).map(|v| nu_exponent(&d5, v).unwrap()).collect();
        assert_eq!(n, vec![3, 3, 3, 4, 2]);

        for e8 in Quiver::all_orientations(DynkinType::new(Family::E, 8).unwrap())
            .into_iter()
            .take(8)
        {
            for v in 1..=8 {
                assert_eq!(nu_exponent(&e8, v).unwrap(), 14);
            }
        }
    }

    #[test]
    fn window_examples() {
        let w = Window::build(&a2()).unwrap();
        assert_eq!(
            w.objects(),
            &[
                ZqVertex::new(0, 1),
                ZqVertex::new(0, 2),
                ZqVertex::new(1, 1)
            ]
        );
        let inj: Vec<ZqVertex> = w
            .objects()
            .iter()
            .copied()
            .filter(|&v| w.is_injective(v))
            .collect();
        let proj: Vec<ZqVertex> = w
            .objects()
            .iter()
            .copied()
            .filter(|&v| w.is_projective(v))
            .collect();
        assert_eq!(inj, vec![ZqVertex::new(0, 1), ZqVertex::new(0, 2)]);
        assert_eq!(proj, vec![ZqVertex::new(0, 2), ZqVertex::new(1, 1)]);

        let d5 = Window::build(&d5_example()).unwrap();
        assert_eq!(d5.len(), 20);

        let a1 =
            Window::build(&Quiver::new(DynkinType::new(Family::A, 1).unwrap(), vec![]).unwrap())
                .unwrap();
        assert_eq!(a1.len(), 1);
        let v = a1.objects()[0];
        assert!(a1.is_projective(v) && a1.is_injective(v));
        assert!(a1.arrows().is_empty());
    }

    #[test]
    fn exponents_orientation_independent_when_mu_trivial() {
        // mu is the identity exactly for D_even, E7 and E8, and there the
        // exponent function cannot see the orientation
        for t in [
            DynkinType::new(Family::D, 4).unwrap(),
            DynkinType::new(Family::D, 6).unwrap(),
            DynkinType::new(Family::E, 7).unwrap(),
            DynkinType::new(Family::E, 8).unwrap(),
        ] {
            let mut seen: Option<Vec<i64>> = None;
            for q in Quiver::all_orientations(t) {
                let n: Vec<i64> = (1..=t.rank).map(|v| nu_exponent(&q, v).unwrap()).collect();
                match &seen {
                    None => seen = Some(n),
                    Some(first) => assert_eq!(&n, first, "{q}"),
                }
            }
        }
    }

    #[test]
    fn window_mesh_symmetry_and_pi() {
        for t in crate::dynkin::all_types(6) {
            for q in Quiver::all_orientations(t) {
                let w = Window::build(&q).unwrap();
                // mesh symmetry: in-neighbors of non-projective x equal
                // out-neighbors of tau x
                for (idx, &x) in w.objects().iter().enumerate() {
                    if w.is_projective(x) {
                        continue;
                    }
                    let tx = w.index_of(x.tau(1)).unwrap();
                    let mut a = w.in_neighbors(idx);
                    let mut b = w.out_neighbors(tx);
                    a.sort_unstable();
                    b.sort_unstable();
                    assert_eq!(a, b, "mesh broken at {x:?} in {q}");
                }
                // pi restricted to injectives and projectives is a bijection
                let mut inj: Vec<usize> = w
                    .objects()
                    .iter()
                    .filter(|&&v| w.is_injective(v))
                    .map(|v| v.vertex)
                    .collect();
                inj.sort_unstable();
                assert_eq!(inj, (1..=t.rank).collect::<Vec<_>>());
                let mut proj: Vec<usize> = w
                    .objects()
                    .iter()
                    .filter(|&&v| w.is_projective(v))
                    .map(|v| v.vertex)
                    .collect();
                proj.sort_unstable();
                assert_eq!(proj, (1..=t.rank).collect::<Vec<_>>());
            }
        }
    }

    #[test]
    fn sigma_identities() {
        let q = a2();
        let v = ZqVertex::new(0, 1);
        assert_eq!(sigma(&q, sigma(&q, v)), v.tau(-3));

        for t in crate::dynkin::all_types(8) {
            let h = t.coxeter_number();
            let quiver = Quiver::all_orientations(t).into_iter().next().unwrap();
            for c in -6..7 {
                for vx in 1..=t.rank {
                    let v = ZqVertex::new(c, vx);
                    assert_eq!(sigma(&quiver, sigma(&quiver, v)), v.tau(-h));
                    // nu and tau commute
                    assert_eq!(nakayama(&quiver, v.tau(1)), nakayama(&quiver, v).tau(1));
                }
            }
        }
    }
}
