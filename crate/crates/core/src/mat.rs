//! Small exact integer matrices.
//!
//! Everything in the crate lives in rank <= 8, so a dense row-major `i64`
//! matrix is all that is needed. The only inverse ever taken is of a
//! unitriangular-up-to-permutation matrix `I - A` with `A` nilpotent, which
//! has the exact integer inverse `I + A + A^2 + ...`.

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntMat {
    pub n: usize,
    data: Vec<i64>,
}

impl IntMat {
    pub fn zero(n: usize) -> Self {
        IntMat {
            n,
            data: vec![0; n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMat::zero(n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        let mut m = IntMat::zero(n);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), n, "square matrix expected");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.n + j] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    pub fn transpose(&self) -> IntMat {
        let mut m = IntMat::zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                m.set(j, i, self.get(i, j));
            }
        }
        m
    }

    pub fn neg(&self) -> IntMat {
        let mut m = self.clone();
        for v in &mut m.data {
            *v = -*v;
        }
        m
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        assert_eq!(self.n, rhs.n);
        let mut m = IntMat::zero(self.n);
        for i in 0..self.n {
            for k in 0..self.n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..self.n {
                    m.set(i, j, m.get(i, j) + a * rhs.get(k, j));
                }
            }
        }
        m
    }

    /// Matrix-vector product, vectors as columns.
    pub fn matvec(&self, v: &[i64]) -> Vec<i64> {
        assert_eq!(v.len(), self.n);
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * v[j]).sum())
            .collect()
    }

    pub fn pow(&self, k: u32) -> IntMat {
        let mut acc = IntMat::identity(self.n);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact inverse of `self = I - A` with `A` nilpotent (e.g. the
    /// adjacency matrix of an acyclic quiver): `(I - A)^{-1} = sum A^k`.
    pub fn inverse_unipotent(&self) -> IntMat {
        let n = self.n;
        let mut a = IntMat::identity(n);
        for i in 0..n {
            for j in 0..n {
                a.set(i, j, a.get(i, j) - self.get(i, j));
            }
        }
        // a = A; sum the finite geometric series
        let mut acc = IntMat::identity(n);
        let mut pw = IntMat::identity(n);
        for _ in 0..n {
            pw = pw.mul(&a);
            if pw.data.iter().all(|&v| v == 0) {
                break;
            }
            for i in 0..n * n {
                acc.data[i] += pw.data[i];
            }
        }
        debug_assert_eq!(acc.mul(self), IntMat::identity(n));
        acc
    }
}
