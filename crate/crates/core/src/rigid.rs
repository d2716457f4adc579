//! The canonical rigid module over the preprojective algebra obtained by
//! pushing the window injectives down, at the level of dimension vectors.
//!
//! For a window object `x = (j, q)` the summand dimension vector is
//!
//! ```text
//!   dim M(x)(mu(p)) = sum_{i=j}^{N(q)} (phi^i i_q)(p),
//! ```
//!
//! with the independent fiber-sum oracle `dim M(x)(p') = sum over window
//! objects y in column-class p' of dim Hom(y, x)`. Summing over all `x`
//! gives the total dimension vector; the dimension of the graded
//! endomorphism algebra has a closed binomial formula and an independent
//! homogeneous-component sum. Rigidity is certified by
//! `<total, total> == dim End`.

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinType, Family, Quiver};
use crate::error::{Error, Result};
use crate::numerics::{dim_sum, DimVec, EulerData};
use crate::zq::{Window, ZqVertex};

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n {
        return 0;
    }
    let mut acc = 1i64;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Dimension vector of the summand attached to window object `x = (j, q)`.
pub fn summand_dimvec(window: &Window, ed: &EulerData, x: ZqVertex) -> Result<DimVec> {
    let bound = window.exponent(x.vertex);
    if x.column < 0 || x.column > bound {
        return Err(Error::OutOfWindow {
            column: x.column,
            vertex: x.vertex,
            bound,
        });
    }
    let t = window.quiver().dynkin();
    let n = t.rank;
    let mut out = vec![0i64; n];
    for i in x.column..=bound {
        let v = ed.phi_injective(i, x.vertex);
        for p in 1..=n {
            out[t.mu(p) - 1] += v[p - 1];
        }
    }
    Ok(out)
}

/// Fiber-sum oracle for [`summand_dimvec`]: entry `p'` is the sum of
/// `dim Hom(y, x)` over window objects `y` with `pi(y) = p'`.
pub fn summand_dimvec_via_hom(window: &Window, hom: &[Vec<i64>], x: ZqVertex) -> DimVec {
    let n = window.quiver().rank();
    let xi = window.index_of(x).expect("window object");
    let mut out = vec![0i64; n];
    for yi in 0..window.len() {
        out[window.pi(yi) - 1] += hom[yi][xi];
    }
    out
}

/// Total dimension vector: `(dim M)(mu(p)) = sum_q sum_i (i+1)(phi^i i_q)(p)`.
pub fn total_dimvec(window: &Window, ed: &EulerData) -> DimVec {
    let t = window.quiver().dynkin();
    let n = t.rank;
    let mut out = vec![0i64; n];
    for q in 1..=n {
        for i in 0..=window.exponent(q) {
            let v = ed.phi_injective(i, q);
            for p in 1..=n {
                out[t.mu(p) - 1] += (i + 1) * v[p - 1];
            }
        }
    }
    out
}

/// Dimension of the graded endomorphism algebra by the binomial formula
/// `sum_q sum_i (C(N(q)+2, 2) - C(i+1, 2)) |phi^i i_q|`.
pub fn dim_end(window: &Window, ed: &EulerData) -> i64 {
    let n = window.quiver().rank();
    let mut acc = 0i64;
    for q in 1..=n {
        let nq = window.exponent(q);
        for i in 0..=nq {
            let weight = binom(nq + 2, 2) - binom(i + 1, 2);
            acc += weight * dim_sum(&ed.phi_injective(i, q));
        }
    }
    acc
}

/// Independent computation of [`dim_end`] as the sum of all homogeneous
/// components: degree-`k` morphisms `x -> y` have dimension
/// `dim Hom(tau^k x, y)` while `tau^k x` stays in the window.
pub fn dim_end_via_graded(window: &Window, hom: &[Vec<i64>]) -> i64 {
    let mut acc = 0i64;
    for &x in window.objects() {
        let reach = window.exponent(x.vertex) - x.column;
        for k in 0..=reach {
            let shifted = window
                .index_of(x.tau(k))
                .expect("tau^k x inside the window");
            acc += hom[shifted].iter().sum::<i64>();
        }
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityCertificate {
    pub euler: i64,
    #[serde(rename = "dimEnd")]
    pub dim_end: i64,
    pub rigid: bool,
}

/// `<dim M, dim M>` against `dim End`; equality certifies rigidity.
pub fn rigidity_certificate(window: &Window, ed: &EulerData) -> RigidityCertificate {
    let total = total_dimvec(window, ed);
    let euler = ed.form(&total, &total);
    let end = dim_end(window, ed);
    RigidityCertificate {
        euler,
        dim_end: end,
        rigid: euler == end,
    }
}

/// Reference into the arrow lists of a [`GradedQuiver`]: degree 0 or 1 plus
/// the index within that list.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRef {
    pub degree: u8,
    pub index: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RelationKind {
    Mesh,
    Commutativity,
    Zero,
}

/// A relation as data: a signed sum of length-2 paths from `source` to
/// `target`. Each term is `(first, second, coeff)` read as
/// `coeff * (second after first)`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Relation {
    pub kind: RelationKind,
    pub source: ZqVertex,
    pub target: ZqVertex,
    pub terms: Vec<(ArrowRef, ArrowRef, i64)>,
}

/// The graded quiver of the endomorphism algebra: mesh (degree-0) arrows of
/// the window plus one degree-1 arrow `x -> tau x` per non-projective `x`,
/// with mesh, commutativity and zero relations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GradedQuiver {
    pub vertices: Vec<ZqVertex>,
    pub arrows0: Vec<(ZqVertex, ZqVertex)>,
    pub arrows1: Vec<(ZqVertex, ZqVertex)>,
    pub relations: Vec<Relation>,
}

impl GradedQuiver {
    fn arrow0_index(&self, src: ZqVertex, dst: ZqVertex) -> Option<usize> {
        self.arrows0.iter().position(|&(s, d)| s == src && d == dst)
    }

    fn arrow1_index(&self, src: ZqVertex) -> Option<usize> {
        self.arrows1.iter().position(|&(s, _)| s == src)
    }
}

pub fn graded_quiver(window: &Window) -> GradedQuiver {
    let vertices: Vec<ZqVertex> = window.objects().to_vec();
    let mut arrows0: Vec<(ZqVertex, ZqVertex)> = window
        .arrows()
        .iter()
        .map(|&(s, d, _)| (window.object(s), window.object(d)))
        .collect();
    arrows0.sort_unstable();
    let mut arrows1: Vec<(ZqVertex, ZqVertex)> = vertices
        .iter()
        .copied()
        .filter(|&x| !window.is_projective(x))
        .map(|x| (x, x.tau(1)))
        .collect();
    arrows1.sort_unstable();

    let mut gq = GradedQuiver {
        vertices,
        arrows0,
        arrows1,
        relations: Vec::new(),
    };

    let mut relations = Vec::new();
    // one mesh relation per non-injective object, running from x to
    // tau^{-1} x through the mesh middles
    for &x in gq.vertices.iter() {
        if window.is_injective(x) {
            continue;
        }
        let z = x.tau(-1);
        let zi = window.index_of(z).expect("non-injective object");
        let mut terms = Vec::new();
        for &(mi, _, label) in window.arrows().iter().filter(|&&(_, d, _)| d == zi) {
            let m = window.object(mi);
            let alpha = gq.arrow0_index(m, z).expect("in-arrow of mesh target");
            let beta = gq.arrow0_index(x, m).expect("mesh partner arrow");
            let coeff = if label.star { 1 } else { -1 };
            terms.push((
                ArrowRef {
                    degree: 0,
                    index: beta,
                },
                ArrowRef {
                    degree: 0,
                    index: alpha,
                },
                coeff,
            ));
        }
        relations.push(Relation {
            kind: RelationKind::Mesh,
            source: x,
            target: z,
            terms,
        });
    }
    // per degree-0 arrow a: x -> y with y non-projective, the degree-1
    // relation t_y a - (tau a) t_x, a zero relation when x is projective
    for (idx, &(x, y)) in gq.arrows0.iter().enumerate() {
        if window.is_projective(y) {
            continue;
        }
        let a = ArrowRef {
            degree: 0,
            index: idx,
        };
        let t_y = ArrowRef {
            degree: 1,
            index: gq.arrow1_index(y).expect("t_y exists for non-projective y"),
        };
        if window.is_projective(x) {
            relations.push(Relation {
                kind: RelationKind::Zero,
                source: x,
                target: y.tau(1),
                terms: vec![(a, t_y, 1)],
            });
        } else {
            let t_x = ArrowRef {
                degree: 1,
                index: gq.arrow1_index(x).expect("t_x exists for non-projective x"),
            };
            let tau_a = ArrowRef {
                degree: 0,
                index: gq
                    .arrow0_index(x.tau(1), y.tau(1))
                    .expect("translated arrow stays in the window"),
            };
            relations.push(Relation {
                kind: RelationKind::Commutativity,
                source: x,
                target: y.tau(1),
                terms: vec![(a, t_y, 1), (t_x, tau_a, -1)],
            });
        }
    }
    gq.relations = relations;
    gq
}

/// Closed form for the endomorphism dimension of the reference orientation;
/// `E` ranks outside 6..8 are rejected.
pub fn dq_closed_form(family: Family, rank: usize) -> Result<i64> {
    let n = rank as i64;
    match family {
        Family::A => {
            if rank < 1 {
                return Err(Error::WrongFamily { family: 'A', rank });
            }
            Ok(2 * binom(n, 5) + 7 * binom(n, 4) + 9 * binom(n, 3) + 5 * binom(n, 2) + n)
        }
        Family::D => {
            if rank < 4 {
                return Err(Error::WrongFamily { family: 'D', rank });
            }
            Ok(27 * binom(n, 5) + 43 * binom(n, 4) + 19 * binom(n, 3) + 2 * binom(n, 2))
        }
        Family::E => match rank {
            6 => Ok(2444),
            7 => Ok(13130),
            8 => Ok(107114),
            _ => Err(Error::WrongFamily { family: 'E', rank }),
        },
    }
}

/// The orientation for which [`dq_closed_form`] tabulates the dimension:
/// `A`: the linear order `1>2>...>n`; `D`: linear into the fork; `E`: every
/// arrow pointing at the branch vertex 3 with the long arm oriented inward.
pub fn closed_form_orientation(family: Family, rank: usize) -> Result<Quiver> {
    let t = DynkinType::new(family, rank)?;
    let mut spec: Vec<String> = Vec::new();
    match family {
        Family::A => {
            for i in 1..rank {
                spec.push(format!("{}>{}", i, i + 1));
            }
        }
        Family::D => {
            for i in 1..rank - 2 {
                spec.push(format!("{}>{}", i, i + 1));
            }
            spec.push(format!("{}>{}", rank - 2, rank - 1));
            spec.push(format!("{}>{}", rank - 2, rank));
        }
        Family::E => {
            spec.push("1>2".into());
            spec.push("2>3".into());
            spec.push(format!("{rank}>3"));
            spec.push("4>3".into());
            for j in 5..rank {
                spec.push(format!("{j}>{}", j - 1));
            }
        }
    }
    Quiver::parse(t, &spec.join(","))
}

/// Dual summand dimension vectors: entry `mu(p')` of `P(x)` is the sum of
/// `dim Hom(x, y)` over window objects `y` with `pi(y) = p'`, the same
/// relabelling that [`summand_dimvec`] carries. With it, the multiset of
/// dual summands of `Q` equals the multiset of summands of `Q^op` exactly
/// (the window of `Q^op` is the opposite of the window of `Q` under a
/// bijection sending the tau-orbit of `q` to the orbit of `mu(q)`).
pub fn dual_summands(window: &Window, hom: &[Vec<i64>]) -> Vec<(ZqVertex, DimVec)> {
    let t = window.quiver().dynkin();
    let n = t.rank;
    window
        .objects()
        .iter()
        .map(|&x| {
            let xi = window.index_of(x).unwrap();
            let mut out = vec![0i64; n];
            for yi in 0..window.len() {
                out[t.mu(window.pi(yi)) - 1] += hom[xi][yi];
            }
            (x, out)
        })
        .collect()
}

/// Serialized rigid-module data for the `start` command.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StartJson {
    pub summands: Vec<SummandJson>,
    pub total: Vec<i64>,
    #[serde(rename = "dimEnd")]
    pub dim_end: i64,
    pub euler: i64,
    pub rigid: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SummandJson {
    pub object: [i64; 2],
    pub dim: Vec<i64>,
}

pub fn start_json(window: &Window, ed: &EulerData) -> Result<StartJson> {
    let summands = window
        .objects()
        .iter()
        .map(|&x| {
            Ok(SummandJson {
                object: [x.column, x.vertex as i64],
                dim: summand_dimvec(window, ed, x)?,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let cert = rigidity_certificate(window, ed);
    Ok(StartJson {
        summands,
        total: total_dimvec(window, ed),
        dim_end: cert.dim_end,
        euler: cert.euler,
        rigid: cert.rigid,
    })
}
