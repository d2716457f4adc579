//! Simply-laced Dynkin diagrams, their canonical vertex labelling, the
//! involution `mu` induced by the longest Weyl group element, and quiver
//! orientations with source reflections.
//!
//! Vertex labels are 1-based and fixed once and for all:
//!
//! * `A_n`: the path `1 - 2 - ... - n`;
//! * `D_n` (n >= 4): the path `1 - 2 - ... - (n-2)` with both `n-1` and `n`
//!   attached to `n-2`;
//! * `E_n` (n in 6..8): the path `1 - 2 - ... - (n-1)` with `n` attached
//!   to `3`.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mat::IntMat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    D,
    E,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::D => 'D',
            Family::E => 'E',
        }
    }

    pub fn parse(c: char) -> Result<Family> {
        match c.to_ascii_uppercase() {
            'A' => Ok(Family::A),
            'D' => Ok(Family::D),
            'E' => Ok(Family::E),
            other => Err(Error::Parse(format!("unknown family letter '{other}'"))),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A simply-laced Dynkin diagram: a family letter plus a rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DynkinType {
    pub family: Family,
    pub rank: usize,
}

impl DynkinType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::D => rank >= 4,
            Family::E => (6..=8).contains(&rank),
        };
        if !ok {
            return Err(Error::Parse(format!(
                "invalid rank {rank} for family {family}"
            )));
        }
        Ok(DynkinType { family, rank })
    }

    /// Diagram edges as `(min, max)` pairs, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let mut es: Vec<(usize, usize)> = match self.family {
            Family::A => (1..n).map(|i| (i, i + 1)).collect(),
            Family::D => {
                let mut v: Vec<_> = (1..n - 2).map(|i| (i, i + 1)).collect();
                v.push((n - 2, n - 1));
                v.push((n - 2, n));
                v
            }
            Family::E => {
                let mut v: Vec<_> = (1..n - 1).map(|i| (i, i + 1)).collect();
                v.push((3, n));
                v
            }
        };
        es.sort_unstable();
        es
    }

    pub fn adjacent(&self, p: usize, q: usize) -> bool {
        let (a, b) = (p.min(q), p.max(q));
        a != b && self.edges().contains(&(a, b))
    }

    /// The involution on vertices given by `-w_0` acting on simple roots.
    pub fn mu(&self, q: usize) -> usize {
        debug_assert!((1..=self.rank).contains(&q));
        let n = self.rank;
        match self.family {
            Family::A => n + 1 - q,
            Family::D if n % 2 == 1 && q >= n - 1 => 2 * n - 1 - q,
            Family::E if n == 6 && q <= 5 => 6 - q,
            _ => q,
        }
    }

    /// Cartan matrix: 2 on the diagonal, -1 exactly on diagram edges.
    pub fn cartan(&self) -> IntMat {
        let n = self.rank;
        let mut c = IntMat::zero(n);
        for i in 0..n {
            c.set(i, i, 2);
        }
        for (a, b) in self.edges() {
            c.set(a - 1, b - 1, -1);
            c.set(b - 1, a - 1, -1);
        }
        c
    }

    pub fn coxeter_number(&self) -> i64 {
        let n = self.rank as i64;
        match self.family {
            Family::A => n + 1,
            Family::D => 2 * n - 2,
            Family::E => match self.rank {
                6 => 12,
                7 => 18,
                _ => 30,
            },
        }
    }

    /// Number of positive roots; equals the number of window objects.
    pub fn positive_roots(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A directed edge `tail -> head` of a quiver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Arrow {
    pub tail: usize,
    pub head: usize,
}

impl Arrow {
    pub fn new(tail: usize, head: usize) -> Self {
        Arrow { tail, head }
    }
}

impl fmt::Display for Arrow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.tail, self.head)
    }
}

/// An orientation of a simply-laced Dynkin diagram.
///
/// Arrows are stored sorted by `(tail, head)` so that serialized output is
/// deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    dynkin: DynkinType,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Validates that `arrows` orient every diagram edge exactly once.
    pub fn new(dynkin: DynkinType, arrows: Vec<Arrow>) -> Result<Self> {
        let edges = dynkin.edges();
        if arrows.len() != edges.len() {
            return Err(Error::EdgeMismatch(format!(
                "expected {} arrows for {dynkin}, got {}",
                edges.len(),
                arrows.len()
            )));
        }
        let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
        for a in &arrows {
            if a.tail == a.head
                || a.tail < 1
                || a.head < 1
                || a.tail > dynkin.rank
                || a.head > dynkin.rank
            {
                return Err(Error::EdgeMismatch(format!("invalid arrow {a}")));
            }
            let e = (a.tail.min(a.head), a.tail.max(a.head));
            if !edges.contains(&e) {
                return Err(Error::EdgeMismatch(format!(
                    "{a} is not an edge of the {dynkin} diagram"
                )));
            }
            if !seen.insert(e) {
                return Err(Error::EdgeMismatch(format!(
                    "edge {}-{} oriented twice",
                    e.0, e.1
                )));
            }
        }
        let mut arrows = arrows;
        arrows.sort_unstable();
        Ok(Quiver { dynkin, arrows })
    }

    /// Parses an arrow list like `"4>3,3>5,2>3,2>1"`.
    pub fn parse(dynkin: DynkinType, spec: &str) -> Result<Self> {
        let mut arrows = Vec::new();
        if dynkin.rank > 1 {
            for part in spec.split(',') {
                let part = part.trim();
                let (t, h) = part
                    .split_once('>')
                    .ok_or_else(|| Error::Parse(format!("bad arrow '{part}', expected t>h")))?;
                let tail: usize = t
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad tail in '{part}'")))?;
                let head: usize = h
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad head in '{part}'")))?;
                arrows.push(Arrow::new(tail, head));
            }
        } else if !spec.trim().is_empty() {
            return Err(Error::Parse("rank-1 quivers take no arrows".into()));
        }
        Quiver::new(dynkin, arrows)
    }

    pub fn dynkin(&self) -> DynkinType {
        self.dynkin
    }

    pub fn rank(&self) -> usize {
        self.dynkin.rank
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow_spec(&self) -> String {
        self.arrows
            .iter()
            .map(|a| a.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }

    pub fn in_degree(&self, q: usize) -> usize {
        self.arrows.iter().filter(|a| a.head == q).count()
    }

    /// A source has no incoming arrows.
    pub fn is_source(&self, q: usize) -> bool {
        self.in_degree(q) == 0
    }

    pub fn sources(&self) -> Vec<usize> {
        (1..=self.rank()).filter(|&q| self.is_source(q)).collect()
    }

    /// Reverses every arrow starting at the source `q`.
    pub fn reflect_at_source(&self, q: usize) -> Result<Quiver> {
        if let Some(a) = self.arrows.iter().find(|a| a.head == q) {
            return Err(Error::NotASource {
                vertex: q,
                tail: a.tail,
                head: a.head,
            });
        }
        let arrows = self
            .arrows
            .iter()
            .map(|a| {
                if a.tail == q {
                    Arrow::new(a.head, a.tail)
                } else {
                    *a
                }
            })
            .collect();
        Quiver::new(self.dynkin, arrows)
    }

    /// The opposite quiver: every arrow reversed.
    pub fn opposite(&self) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow::new(a.head, a.tail))
            .collect();
        Quiver::new(self.dynkin, arrows).expect("opposite of a valid quiver is valid")
    }

    /// All `2^(rank-1)` orientations of the diagram, in a fixed order.
    pub fn all_orientations(dynkin: DynkinType) -> Vec<Quiver> {
        let edges = dynkin.edges();
        let m = edges.len();
        (0..1usize << m)
            .map(|bits| {
                let arrows = edges
                    .iter()
                    .enumerate()
                    .map(|(i, &(u, v))| {
                        if bits >> i & 1 == 0 {
                            Arrow::new(u, v)
                        } else {
                            Arrow::new(v, u)
                        }
                    })
                    .collect();
                Quiver::new(dynkin, arrows).expect("orientation of diagram edges")
            })
            .collect()
    }

    /// A topological order of the vertices: tails before heads, ties by label.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.rank();
        let mut indeg = vec![0usize; n + 1];
        for a in &self.arrows {
            indeg[a.head] += 1;
        }
        let mut ready: BTreeSet<usize> = (1..=n).filter(|&q| indeg[q] == 0).collect();
        let mut out = Vec::with_capacity(n);
        while let Some(&q) = ready.iter().next() {
            ready.remove(&q);
            out.push(q);
            for a in self.arrows.iter().filter(|a| a.tail == q) {
                indeg[a.head] -= 1;
                if indeg[a.head] == 0 {
                    ready.insert(a.head);
                }
            }
        }
        debug_assert_eq!(out.len(), n);
        out
    }
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.dynkin, self.arrow_spec())
    }
}

/// Serialized form: `{"type":"D","rank":5,"arrows":[[2,1],[2,3],[3,5],[4,3]]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuiverJson {
    #[serde(rename = "type")]
    pub family: String,
    pub rank: usize,
    pub arrows: Vec<[usize; 2]>,
}

impl Quiver {
    pub fn to_json(&self) -> QuiverJson {
        QuiverJson {
            family: self.dynkin.family.letter().to_string(),
            rank: self.dynkin.rank,
            arrows: self.arrows.iter().map(|a| [a.tail, a.head]).collect(),
        }
    }

    pub fn from_json(j: &QuiverJson) -> Result<Quiver> {
        let mut chars = j.family.chars();
        let c = chars
            .next()
            .ok_or_else(|| Error::Parse("empty family".into()))?;
        if chars.next().is_some() {
            return Err(Error::Parse(format!("bad family '{}'", j.family)));
        }
        let dynkin = DynkinType::new(Family::parse(c)?, j.rank)?;
        Quiver::new(
            dynkin,
            j.arrows.iter().map(|&[t, h]| Arrow::new(t, h)).collect(),
        )
    }
}

/// The running example used throughout the test suite: type `D5` with
/// arrows `4>3, 3>5, 2>3, 2>1`.
pub fn d5_example() -> Quiver {
    let t = DynkinType::new(Family::D, 5).unwrap();
    Quiver::parse(t, "4>3,3>5,2>3,2>1").unwrap()
}

/// Every simply-laced Dynkin type of rank at most `max_rank`.
pub fn all_types(max_rank: usize) -> Vec<DynkinType> {
    let mut v = Vec::new();
    for r in 1..=max_rank {
        v.push(DynkinType {
            family: Family::A,
            rank: r,
        });
        if r >= 4 {
            v.push(DynkinType {
                family: Family::D,
                rank: r,
            });
        }
        if (6..=8).contains(&r) {
            v.push(DynkinType {
                family: Family::E,
                rank: r,
            });
        }
    }
    v
}
