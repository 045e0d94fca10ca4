//! Small dense linear algebra over the prime field Z_p, just enough for
//! Frobenius fixed-point spaces and kernel ranks.

/// Row-major matrix over Z_p.
#[derive(Clone, Debug)]
pub(crate) struct ZpMatrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<u64>,
}

impl ZpMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        ZpMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn mul(&self, other: &ZpMatrix, p: u64) -> ZpMatrix {
        assert_eq!(self.cols, other.rows);
        let mut out = ZpMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let cur = out.at(i, j);
                    out.set(i, j, (cur + a * other.at(k, j)) % p);
                }
            }
        }
        out
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[u64], p: u64) -> Vec<u64> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![0u64; self.rows];
        for (i, o) in out.iter_mut().enumerate() {
            let mut acc = 0u64;
            for j in 0..self.cols {
                acc += self.at(i, j) * v[j];
            }
            *o = acc % p;
        }
        out
    }

    /// Rank by Gaussian elimination (destructive on a copy).
    pub fn rank(&self, p: u64) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(r) = (pivot_row..m.rows).find(|&r| m.at(r, col) != 0) else {
                continue;
            };
            m.data.swap_rows(pivot_row, r, m.cols);
            let inv = inv_mod(m.at(pivot_row, col), p);
            for j in col..m.cols {
                m.set(pivot_row, j, m.at(pivot_row, j) * inv % p);
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && m.at(r2, col) != 0 {
                    let f = m.at(r2, col);
                    for j in col..m.cols {
                        let v = (m.at(r2, j) + (p - f) * m.at(pivot_row, j)) % p;
                        m.set(r2, j, v);
                    }
                }
            }
            pivot_row += 1;
            rank += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        rank
    }

    /// Basis of the right nullspace { v : M v = 0 }.
    pub fn nullspace(&self, p: u64) -> Vec<Vec<u64>> {
        let mut m = self.clone();
        let mut pivot_cols = Vec::new();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            let Some(r) = (pivot_row..m.rows).find(|&r| m.at(r, col) != 0) else {
                continue;
            };
            m.data.swap_rows(pivot_row, r, m.cols);
            let inv = inv_mod(m.at(pivot_row, col), p);
            for j in 0..m.cols {
                m.set(pivot_row, j, m.at(pivot_row, j) * inv % p);
            }
            for r2 in 0..m.rows {
                if r2 != pivot_row && m.at(r2, col) != 0 {
                    let f = m.at(r2, col);
                    for j in 0..m.cols {
                        let v = (m.at(r2, j) + (p - f) * m.at(pivot_row, j)) % p;
                        m.set(r2, j, v);
                    }
                }
            }
            pivot_cols.push(col);
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        let mut basis = Vec::new();
        for free in 0..m.cols {
            if pivot_cols.contains(&free) {
                continue;
            }
            let mut v = vec![0u64; m.cols];
            v[free] = 1;
            for (row, &pc) in pivot_cols.iter().enumerate() {
                let coeff = m.at(row, free);
                if coeff != 0 {
                    v[pc] = p - coeff;
                }
            }
            basis.push(v);
        }
        basis
    }
}

trait SwapRows {
    fn swap_rows(&mut self, a: usize, b: usize, cols: usize);
}

impl SwapRows for Vec<u64> {
    fn swap_rows(&mut self, a: usize, b: usize, cols: usize) {
        if a == b {
            return;
        }
        for j in 0..cols {
            self.swap(a * cols + j, b * cols + j);
        }
    }
}

/// Inverse mod a prime, by Fermat.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_and_nullspace() {
        // x + y = 0 over Z_3 has a 1-dimensional nullspace spanned by (1, 2).
        let m = ZpMatrix { rows: 1, cols: 2, data: vec![1, 1] };
        assert_eq!(m.rank(3), 1);
        let ns = m.nullspace(3);
        assert_eq!(ns.len(), 1);
        let v = &ns[0];
        assert_eq!((v[0] + v[1]) % 3, 0);
        assert!(v.iter().any(|&c| c != 0));
    }

    #[test]
    fn identity_rank() {
        assert_eq!(ZpMatrix::identity(4).rank(2), 4);
        assert!(ZpMatrix::identity(3).nullspace(5).is_empty());
    }

    #[test]
    fn inverses() {
        for p in [2u64, 3, 5, 7, 11] {
            for a in 1..p {
                assert_eq!(a * inv_mod(a, p) % p, 1);
            }
        }
    }
}
