//! Independent Hom-dimension oracle on small types: realize the mesh
//! category as the path category of the window modulo the mesh ideal and
//! compute morphism-space dimensions by exact integer linear algebra
//! (fraction-free Gaussian elimination), then compare against the
//! three-case formula.

use std::collections::BTreeMap;

use arquiver::dynkin::{d5_example, DynkinType, Family, Quiver};
use arquiver::numerics::{hom_table, EulerData};
use arquiver::zq::Window;

/// All directed paths between window objects as arrow-index sequences,
/// including the empty path at every object. The degree-0 window digraph
/// is acyclic, so this terminates.
fn all_paths(window: &Window) -> BTreeMap<(usize, usize), Vec<Vec<usize>>> {
    let r = window.len();
    let mut out_arrows: Vec<Vec<(usize, usize)>> = vec![Vec::new(); r]; // (arrow id, target)
    for (id, &(s, d, _)) in window.arrows().iter().enumerate() {
        out_arrows[s].push((id, d));
    }
    let mut paths: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
    fn dfs(
        src: usize,
        at: usize,
        prefix: &mut Vec<usize>,
        out_arrows: &[Vec<(usize, usize)>],
        paths: &mut BTreeMap<(usize, usize), Vec<Vec<usize>>>,
    ) {
        paths.entry((src, at)).or_default().push(prefix.clone());
        for &(id, next) in &out_arrows[at] {
            prefix.push(id);
            dfs(src, next, prefix, out_arrows, paths);
            prefix.pop();
        }
    }
    for src in 0..r {
        dfs(src, src, &mut Vec::new(), &out_arrows, &mut paths);
    }
    paths
}

/// Rank of an integer matrix by Bareiss fraction-free elimination.
fn rank_i128(mut m: Vec<Vec<i128>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0usize;
    let mut prev = 1i128;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| m[r][c] != 0) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..rows {
            for cc in c + 1..cols {
                m[r][cc] = (m[rank][c] * m[r][cc] - m[r][c] * m[rank][cc]) / prev;
            }
            m[r][c] = 0;
        }
        prev = m[rank][c];
        rank += 1;
        if rank == rows {
            break;
        }
    }
    rank
}

/// A signed length-2 path: (first arrow, second arrow, coefficient).
type MeshTerm = (usize, usize, i128);

/// Mesh generators: for each non-injective `x` a signed sum of length-2
/// paths `x -> m -> tau^{-1} x`, with sign `+` on starred in-arrows.
fn mesh_generators(window: &Window) -> Vec<(usize, usize, Vec<MeshTerm>)> {
    let mut arrow_by_ends: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for (id, &(s, d, _)) in window.arrows().iter().enumerate() {
        arrow_by_ends.insert((s, d), id);
    }
    let mut out = Vec::new();
    for (xi, &x) in window.objects().iter().enumerate() {
        if window.is_injective(x) {
            continue;
        }
        let zi = window.index_of(x.tau(-1)).unwrap();
        let mut terms = Vec::new();
        for (id, &(mi, di, label)) in window.arrows().iter().enumerate() {
            if di != zi {
                continue;
            }
            let first = arrow_by_ends[&(xi, mi)];
            let coeff = if label.star { 1 } else { -1 };
            terms.push((first, id, coeff));
        }
        out.push((xi, zi, terms));
    }
    out
}

fn check_quiver(quiver: &Quiver) {
    let window = Window::build(quiver).unwrap();
    let ed = EulerData::build(quiver);
    let hom = hom_table(&window, &ed).unwrap();
    let paths = all_paths(&window);
    let meshes = mesh_generators(&window);
    let empty: Vec<Vec<usize>> = Vec::new();

    for (xi, hom_row) in hom.iter().enumerate() {
        for (yi, &hom_dim) in hom_row.iter().enumerate() {
            let base = paths.get(&(xi, yi)).unwrap_or(&empty);
            let index: BTreeMap<&Vec<usize>, usize> =
                base.iter().enumerate().map(|(i, p)| (p, i)).collect();
            let mut rows: Vec<Vec<i128>> = Vec::new();
            for &(wi, zi, ref terms) in &meshes {
                let lefts = paths.get(&(xi, wi)).unwrap_or(&empty);
                let rights = paths.get(&(zi, yi)).unwrap_or(&empty);
                for p1 in lefts {
                    for p2 in rights {
                        let mut row = vec![0i128; base.len()];
                        for &(a1, a2, c) in terms {
                            let mut full = p1.clone();
                            full.push(a1);
                            full.push(a2);
                            full.extend_from_slice(p2);
                            row[index[&full]] += c;
                        }
                        if row.iter().any(|&v| v != 0) {
                            rows.push(row);
                        }
                    }
                }
            }
            let oracle = base.len() as i64 - rank_i128(rows) as i64;
            assert_eq!(
                hom_dim,
                oracle,
                "mesh-category oracle disagrees in {quiver} at Hom({:?},{:?})",
                window.object(xi),
                window.object(yi)
            );
        }
    }
}

#[test]
fn hom_dims_match_mesh_quotient_a2() {
    let t = DynkinType::new(Family::A, 2).unwrap();
    for q in Quiver::all_orientations(t) {
        check_quiver(&q);
    }
}

#[test]
fn hom_dims_match_mesh_quotient_a3() {
    let t = DynkinType::new(Family::A, 3).unwrap();
    for q in Quiver::all_orientations(t) {
        check_quiver(&q);
    }
}

#[test]
fn hom_dims_match_mesh_quotient_d4() {
    let t = DynkinType::new(Family::D, 4).unwrap();
    for q in Quiver::all_orientations(t) {
        check_quiver(&q);
    }
}

#[test]
fn hom_dims_match_mesh_quotient_d5_example() {
    check_quiver(&d5_example());
}
