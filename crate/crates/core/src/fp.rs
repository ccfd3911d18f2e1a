//! Dense linear algebra over the prime field F_p: Gaussian elimination
//! with deterministic first-nonzero pivoting, rank, RREF, kernels, and
//! multi-RHS solving. Entries are stored reduced in [0, p).

use crate::partition::PrimeChar;

#[derive(Clone, PartialEq, Eq)]
pub struct MatFp {
    rows: usize,
    cols: usize,
    p: u64,
    data: Vec<u32>,
}

impl std::fmt::Debug for MatFp {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "MatFp {}x{} mod {} [", self.rows, self.cols, self.p)?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", &self.data[i * self.cols..(i + 1) * self.cols])?;
        }
        write!(f, "]")
    }
}

impl MatFp {
    pub fn zeros(rows: usize, cols: usize, p: &PrimeChar) -> Self {
        MatFp {
            rows,
            cols,
            p: p.p() as u64,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize, p: &PrimeChar) -> Self {
        let mut m = Self::zeros(n, n, p);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from signed integer entries, reducing mod p.
    pub fn from_int_rows(rows: &[Vec<i64>], p: &PrimeChar) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        let pm = p.p() as i64;
        let mut m = Self::zeros(r, c, p);
        for (i, row) in rows.iter().enumerate() {
            assert_eq!(row.len(), c);
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v.rem_euclid(pm) as u32);
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn at(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        debug_assert!((v as u64) < self.p);
        self.data[i * self.cols + j] = v;
    }

    fn inv_mod(&self, a: u64) -> u64 {
        // Fermat: a^(p-2) mod p
        debug_assert!(a % self.p != 0);
        let mut base = a % self.p;
        let mut e = self.p - 2;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % self.p;
            }
            base = base * base % self.p;
            e >>= 1;
        }
        acc
    }

    pub fn mul(&self, other: &MatFp) -> MatFp {
        assert_eq!(self.cols, other.rows);
        assert_eq!(self.p, other.p);
        let mut out = vec![0u64; self.rows * other.cols];
        // ikj loop order; u64 accumulators, reduced lazily
        let reduce_every = (u64::MAX / (self.p * self.p)) as usize;
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            let mut since_reduce = 0usize;
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o += a * b as u64;
                }
                since_reduce += 1;
                if since_reduce >= reduce_every {
                    for o in orow.iter_mut() {
                        *o %= self.p;
                    }
                    since_reduce = 0;
                }
            }
            for o in orow.iter_mut() {
                *o %= self.p;
            }
        }
        MatFp {
            rows: self.rows,
            cols: other.cols,
            p: self.p,
            data: out.into_iter().map(|v| v as u32).collect(),
        }
    }

    pub fn add_scaled_identity(&self, scalar: i64) -> MatFp {
        assert_eq!(self.rows, self.cols);
        let s = scalar.rem_euclid(self.p as i64) as u64;
        let mut out = self.clone();
        for i in 0..self.rows {
            let v = (out.at(i, i) as u64 + s) % self.p;
            out.set(i, i, v as u32);
        }
        out
    }

    pub fn trace(&self) -> u32 {
        assert_eq!(self.rows, self.cols);
        let mut t = 0u64;
        for i in 0..self.rows {
            t = (t + self.at(i, i) as u64) % self.p;
        }
        t as u32
    }

    /// In-place reduced row echelon form. Returns the pivot columns.
    /// Pivot choice is deterministic: first row with a nonzero entry.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0usize;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.at(i, c) != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..self.cols {
                    self.data.swap(r * self.cols + j, pr * self.cols + j);
                }
            }
            let inv = self.inv_mod(self.at(r, c) as u64);
            for j in c..self.cols {
                let v = self.at(r, j) as u64 * inv % self.p;
                self.set(r, j, v as u32);
            }
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.at(i, c) as u64;
                if f == 0 {
                    continue;
                }
                let f = self.p - f;
                for j in c..self.cols {
                    let v = (self.at(i, j) as u64 + f * self.at(r, j) as u64) % self.p;
                    self.set(i, j, v as u32);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref().len()
    }

    /// Basis of the right kernel; each vector has a 1 in its free column.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let mut m = self.clone();
        let pivots = m.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for f in 0..self.cols {
            if pivot_set.contains(&f) {
                continue;
            }
            let mut v = vec![0u32; self.cols];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                let coeff = m.at(r, f) as u64;
                if coeff != 0 {
                    v[pc] = (self.p - coeff) as u32;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Solves self · X = B for X when self is square and invertible.
    /// Returns None if self is singular.
    pub fn solve_many(&self, b: &MatFp) -> Option<MatFp> {
        assert_eq!(self.rows, self.cols);
        assert_eq!(self.rows, b.rows);
        assert_eq!(self.p, b.p);
        let n = self.rows;
        // augmented [A | B], Gauss-Jordan
        let cols = n + b.cols;
        let mut aug = MatFp {
            rows: n,
            cols,
            p: self.p,
            data: vec![0; n * cols],
        };
        for i in 0..n {
            for j in 0..n {
                aug.set(i, j, self.at(i, j));
            }
            for j in 0..b.cols {
                aug.set(i, n + j, b.at(i, j));
            }
        }
        let pivots = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return None;
        }
        let mut x = MatFp::zeros(n, b.cols, &PrimeChar::new(self.p as u32).unwrap());
        for i in 0..n {
            for j in 0..b.cols {
                x.set(i, j, aug.at(i, n + j));
            }
        }
        Some(x)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    /// Vertically stacks matrices with equal column counts.
    pub fn vstack(mats: &[&MatFp]) -> MatFp {
        let cols = mats[0].cols;
        let p = mats[0].p;
        let mut data = Vec::new();
        let mut rows = 0;
        for m in mats {
            assert_eq!(m.cols, cols);
            assert_eq!(m.p, p);
            data.extend_from_slice(&m.data);
            rows += m.rows;
        }
        MatFp { rows, cols, p, data }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pc(p: u32) -> PrimeChar {
        PrimeChar::new(p).unwrap()
    }

    #[test]
    fn rank_and_rref() {
        let p = pc(3);
        let m = MatFp::from_int_rows(&[vec![2, 1], vec![1, 2]], &p);
        assert_eq!(m.rank(), 1); // det = 3 ≡ 0 mod 3
        let p = pc(2);
        let m = MatFp::from_int_rows(&[vec![2, 1], vec![1, 2]], &p);
        assert_eq!(m.rank(), 2); // [[0,1],[1,0]]
    }

    #[test]
    fn kernel_members() {
        let p = pc(5);
        let m = MatFp::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6]], &p);
        let ker = m.kernel();
        assert_eq!(ker.len(), 2);
        for v in &ker {
            let vm = MatFp::from_int_rows(
                &v.iter().map(|&x| vec![x as i64]).collect::<Vec<_>>(),
                &p,
            );
            assert!(m.mul(&vm).is_zero());
        }
    }

    #[test]
    fn solve_roundtrip() {
        let p = pc(7);
        let a = MatFp::from_int_rows(&[vec![1, 2, 0], vec![0, 1, 4], vec![3, 0, 1]], &p);
        let b = MatFp::from_int_rows(&[vec![1, 0], vec![2, 5], vec![6, 3]], &p);
        let x = a.solve_many(&b).unwrap();
        assert_eq!(a.mul(&x), b);
        let singular = MatFp::from_int_rows(&[vec![1, 2, 3], vec![2, 4, 6], vec![0, 0, 1]], &p);
        assert!(singular.solve_many(&b).is_none());
    }

    #[test]
    fn mul_identity() {
        let p = pc(5);
        let a = MatFp::from_int_rows(&[vec![1, 2], vec![3, 4]], &p);
        let id = MatFp::identity(2, &p);
        assert_eq!(a.mul(&id), a);
        assert_eq!(id.mul(&a), a);
    }
}
