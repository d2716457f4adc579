//! Weyl group word arithmetic on the weight lattice.
//!
//! Weights are stored in fundamental-weight coordinates, so the evaluation
//! `lambda(h_i)` is a coordinate read and the simple root `alpha_i` is the
//! `i`-th row of the Cartan matrix. Words act right to left: the word
//! `(i_1, ..., i_m)` sends `v` to `s_{i_1}(s_{i_2}(... s_{i_m}(v)))`.

use serde::{Deserialize, Serialize};

use crate::dynkin::{DynkinType, Quiver};

/// An integral weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![0; rank])
    }

    /// The fundamental weight at `q` (1-based).
    pub fn fundamental(rank: usize, q: usize) -> Self {
        let mut v = vec![0; rank];
        v[q - 1] = 1;
        WeightVector(v)
    }

    /// Evaluation `lambda(h_q)` (1-based `q`).
    pub fn eval(&self, q: usize) -> i64 {
        self.0[q - 1]
    }
}

/// The simple root `alpha_q` in fundamental-weight coordinates.
pub fn simple_root(t: &DynkinType, q: usize) -> WeightVector {
    let c = t.cartan();
    WeightVector((0..t.rank).map(|j| c.get(q - 1, j)).collect())
}

/// The simple reflection `s_q(v) = v - v(h_q) * alpha_q`.
pub fn reflect(t: &DynkinType, q: usize, v: &WeightVector) -> WeightVector {
    let coeff = v.eval(q);
    if coeff == 0 {
        return v.clone();
    }
    let alpha = simple_root(t, q);
    WeightVector(
        v.0.iter()
            .zip(alpha.0.iter())
            .map(|(&a, &b)| a - coeff * b)
            .collect(),
    )
}

/// Applies the word right to left: `s_{w_1} ∘ s_{w_2} ∘ ... ∘ s_{w_m}`.
pub fn weyl_apply(t: &DynkinType, word: &[usize], v: &WeightVector) -> WeightVector {
    let mut out = v.clone();
    for &q in word.iter().rev() {
        out = reflect(t, q, &out);
    }
    out
}

/// `w_0` acts on weights by `w_0(varpi_i) = -varpi_{mu(i)}`, extended linearly.
pub fn w0_apply(t: &DynkinType, v: &WeightVector) -> WeightVector {
    let mut out = vec![0; t.rank];
    for (i, &c) in v.0.iter().enumerate() {
        out[t.mu(i + 1) - 1] -= c;
    }
    WeightVector(out)
}

/// Result of checking a word against the longest element and adaptedness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LongestAdaptedReport {
    pub is_longest: bool,
    pub is_adapted: bool,
}

/// Checks whether `word` is a reduced expression for `w_0` (length equals the
/// number of positive roots and every simple root is sent to `-alpha_{mu}`)
/// and whether it is adapted to `quiver` (each letter is a source of the
/// successively reflected quiver).
pub fn verify_longest_adapted(word: &[usize], quiver: &Quiver) -> LongestAdaptedReport {
    let t = quiver.dynkin();
    let mut is_longest = word.len() == t.positive_roots();
    if is_longest {
        for j in 1..=t.rank {
            let img = weyl_apply(&t, word, &simple_root(&t, j));
            let expect = WeightVector(simple_root(&t, t.mu(j)).0.iter().map(|&x| -x).collect());
            if img != expect {
                is_longest = false;
                break;
            }
        }
    }

    let mut is_adapted = true;
    let mut q = quiver.clone();
    for &letter in word {
        if letter < 1 || letter > t.rank {
            is_adapted = false;
            break;
        }
        match q.reflect_at_source(letter) {
            Ok(next) => q = next,
            Err(_) => {
                is_adapted = false;
                break;
            }
        }
    }

    LongestAdaptedReport {
        is_longest,
        is_adapted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::{d5_example, Family};

    fn a2() -> DynkinType {
        DynkinType::new(Family::A, 2).unwrap()
    }

    #[test]
    fn reflection_examples() {
        let t = a2();
        let w1 = WeightVector::fundamental(2, 1);
        assert_eq!(reflect(&t, 1, &w1), WeightVector(vec![-1, 1]));
        assert_eq!(reflect(&t, 2, &w1), w1);
        // s_1(s_2(varpi_1)) applied right to left by the word (1,2)
        assert_eq!(weyl_apply(&t, &[1, 2], &w1), WeightVector(vec![-1, 1]));
    }

    #[test]
    fn reflections_are_involutions() {
        for ty in crate::dynkin::all_types(8) {
            for q in 1..=ty.rank {
                for j in 1..=ty.rank {
                    let v = simple_root(&ty, j);
                    assert_eq!(reflect(&ty, q, &reflect(&ty, q, &v)), v);
                }
            }
        }
    }

    #[test]
    fn longest_adapted_examples() {
        let q = Quiver::parse(a2(), "1>2").unwrap();
        let r = verify_longest_adapted(&[1, 2, 1], &q);
        assert!(r.is_longest && r.is_adapted);
        let r = verify_longest_adapted(&[2, 1, 2], &q);
        assert!(r.is_longest && !r.is_adapted);
        let r = verify_longest_adapted(&[1, 2], &q);
        assert!(!r.is_longest);

        let d5 = d5_example();
        let word = [4, 2, 1, 3, 5, 4, 2, 1, 3, 5, 4, 2, 1, 3, 5, 4, 2, 3, 4, 1];
        let r = verify_longest_adapted(&word, &d5);
        assert!(r.is_longest && r.is_adapted);
    }

    #[test]
    fn w0_matrix_matches_mu_rule() {
        let t = DynkinType::new(Family::D, 5).unwrap();
        let word = [4, 2, 1, 3, 5, 4, 2, 1, 3, 5, 4, 2, 1, 3, 5, 4, 2, 3, 4, 1];
        for j in 1..=5 {
            let w = WeightVector::fundamental(5, j);
            assert_eq!(weyl_apply(&t, &word, &w), w0_apply(&t, &w));
        }
    }
}
