//! Dense linear algebra over a prime field `F_p`.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// The prime field `F_p`. Elements are stored as `u64` in `0..p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u64,
}

impl Default for Field {
    fn default() -> Self {
        Self { p: 2 }
    }
}

pub type Matrix = Vec<Vec<u64>>;

impl Field {
    /// `p` must be a prime below `2^31`.
    pub fn new(p: u64) -> Result<Self> {
        if !(2..1 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::Parse(format!("{p} is not a supported prime")));
        }
        Ok(Self { p })
    }

    pub fn characteristic(self) -> u64 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u64 {
        x.rem_euclid(self.p as i64) as u64
    }

    pub fn add(self, a: u64, b: u64) -> u64 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn neg(self, a: u64) -> u64 {
        (self.p - a) % self.p
    }

    pub fn inv(self, a: u64) -> u64 {
        debug_assert!(a != 0);
        self.pow(a, self.p - 2)
    }

    fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        vec![vec![0; cols]; rows]
    }

    pub fn identity(n: usize) -> Matrix {
        let mut m = Self::zeros(n, n);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m
    }

    /// `a · b` for an `r×k` and a `k×c` matrix; `cols` fixes the width when
    /// `b` has no rows.
    pub fn matmul(self, a: &Matrix, b: &Matrix, cols: usize) -> Matrix {
        let mut out = Self::zeros(a.len(), cols);
        for (i, row) in a.iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (j, &y) in b[k].iter().enumerate() {
                    out[i][j] = (out[i][j] + x * y) % self.p;
                }
            }
        }
        out
    }

    pub fn rank(self, m: &Matrix) -> usize {
        let mut m = m.clone();
        self.row_reduce(&mut m).len()
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn row_reduce(self, m: &mut Matrix) -> Vec<usize> {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(k) = (r..rows).find(|&k| m[k][c] != 0) else {
                continue;
            };
            m.swap(r, k);
            let inv = self.inv(m[r][c]);
            for x in m[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = m[r].clone();
            for (k, row) in m.iter_mut().enumerate() {
                if k != r && row[c] != 0 {
                    let f = row[c];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        *x = self.sub(*x, self.mul(f, y));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        m.truncate(r);
        pivots
    }

    /// Basis of the kernel `{x : m·x = 0}` for a matrix with `cols` columns.
    pub fn nullspace(self, m: &Matrix, cols: usize) -> Vec<Vec<u64>> {
        let mut m = m.clone();
        let pivots = self.row_reduce(&mut m);
        let mut basis = Vec::new();
        for free in (0..cols).filter(|c| !pivots.contains(c)) {
            let mut v = vec![0; cols];
            v[free] = 1;
            for (row, &pc) in m.iter().zip(&pivots) {
                v[pc] = self.neg(row[free]);
            }
            basis.push(v);
        }
        basis
    }

    pub fn transpose(m: &Matrix, cols: usize) -> Matrix {
        let mut t = Self::zeros(cols, m.len());
        for (i, row) in m.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                t[j][i] = x;
            }
        }
        t
    }
}

/// A subspace `W ⊆ V ⊆ F_p^N` together with coordinates on the quotient
/// `V / W`, built from spanning sets of both.
#[derive(Clone, Debug)]
pub struct Quotient {
    field: Field,
    ambient: usize,
    /// Echelon basis of `V`: rows in RREF, each tagged with its quotient
    /// coordinate (`None` for rows lying in `W`'s part of the echelon).
    rows: Vec<(usize, Vec<u64>, Vec<u64>)>,
    dim: usize,
    representatives: Vec<Vec<u64>>,
}

impl Quotient {
    /// Coordinates of `V / W` where `V` is spanned by `v_span` plus `w_span`.
    pub fn new(field: Field, ambient: usize, w_span: &[Vec<u64>], v_span: &[Vec<u64>]) -> Self {
        // Reduce the W vectors first; their pivots carry zero quotient
        // coordinates. Each further independent V vector gets a fresh one.
        let mut q = Self {
            field,
            ambient,
            rows: Vec::new(),
            dim: 0,
            representatives: Vec::new(),
        };
        for w in w_span {
            q.insert(w.clone(), None);
        }
        for v in v_span {
            let d = q.dim;
            if q.insert(v.clone(), Some(d)) {
                q.dim += 1;
                q.representatives.push(v.clone());
            }
        }
        q
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Vectors of `V` whose classes form the coordinate basis of `V / W`.
    pub fn representatives(&self) -> &[Vec<u64>] {
        &self.representatives
    }

    /// Reduces `v` against the stored rows, accumulating the quotient
    /// coordinates of the pivots it uses. Returns the remainder.
    fn reduce(&self, mut v: Vec<u64>) -> (Vec<u64>, Vec<u64>) {
        let f = self.field;
        let mut coords = vec![0; self.dim];
        for (pc, row, tag) in &self.rows {
            let c = v[*pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in v.iter_mut().zip(row) {
                *x = f.sub(*x, f.mul(c, y));
            }
            for (k, &t) in tag.iter().enumerate() {
                if t != 0 {
                    coords[k] = f.add(coords[k], f.mul(c, t));
                }
            }
        }
        (v, coords)
    }

    fn insert(&mut self, v: Vec<u64>, coord: Option<usize>) -> bool {
        let f = self.field;
        let (mut rem, coords) = self.reduce(v);
        let Some(pc) = rem.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(rem[pc]);
        for x in rem.iter_mut() {
            *x = f.mul(*x, inv);
        }
        // tag = (e_coord − coords) / pivot value, so that reducing the
        // original vector recovers e_coord.
        let width = self.dim + usize::from(coord.is_some());
        let mut tag = vec![0; width];
        for (k, &c) in coords.iter().enumerate() {
            tag[k] = f.neg(c);
        }
        if let Some(k) = coord {
            tag[k] = f.add(tag[k], 1);
        }
        for t in tag.iter_mut() {
            *t = f.mul(*t, inv);
        }
        // Keep earlier rows free of the new pivot.
        for (_, row, rtag) in self.rows.iter_mut() {
            let c = row[pc];
            if c == 0 {
                continue;
            }
            for (x, &y) in row.iter_mut().zip(&rem) {
                *x = f.sub(*x, f.mul(c, y));
            }
            rtag.resize(width, 0);
            for (x, &y) in rtag.iter_mut().zip(&tag) {
                *x = f.sub(*x, f.mul(c, y));
            }
        }
        for (_, _, rtag) in self.rows.iter_mut() {
            rtag.resize(width, 0);
        }
        self.rows.push((pc, rem, tag));
        true
    }

    /// Coordinates of `v ∈ V` in `V / W`. Errors when `v ∉ V`.
    pub fn coordinates(&self, v: &[u64]) -> Result<Vec<u64>> {
        debug_assert_eq!(v.len(), self.ambient);
        let (rem, mut coords) = self.reduce(v.to_vec());
        if rem.iter().any(|&x| x != 0) {
            return Err(Error::MalformedModel("vector outside the subspace".into()));
        }
        coords.resize(self.dim, 0);
        Ok(coords)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_over_two_fields() {
        let m = vec![vec![1, 1, 0], vec![0, 1, 1], vec![1, 0, 1]];
        assert_eq!(Field::new(2).unwrap().rank(&m), 2);
        assert_eq!(Field::new(3).unwrap().rank(&m), 3);
    }

    #[test]
    fn nullspace_is_kernel() {
        let f = Field::new(5).unwrap();
        let m = vec![vec![1, 2, 3, 4], vec![2, 4, 1, 3]];
        let ker = f.nullspace(&m, 4);
        assert_eq!(ker.len(), 4 - f.rank(&m));
        for v in ker {
            for row in &m {
                let s = row.iter().zip(&v).fold(0, |acc, (&a, &b)| f.add(acc, f.mul(a, b)));
                assert_eq!(s, 0);
            }
        }
    }

    #[test]
    fn quotient_coordinates() {
        let f = Field::new(3).unwrap();
        // V = span(e0, e1, e2), W = span(e0 + e1)
        let w = vec![vec![1, 1, 0]];
        let v = vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]];
        let q = Quotient::new(f, 3, &w, &v);
        assert_eq!(q.dim(), 2);
        let a = q.coordinates(&[1, 0, 0]).unwrap();
        let b = q.coordinates(&[0, 1, 0]).unwrap();
        // e0 ≡ −e1 mod W
        assert_eq!(a, b.iter().map(|&x| f.neg(x)).collect::<Vec<_>>());
        assert_eq!(q.coordinates(&[1, 1, 0]).unwrap(), vec![0, 0]);
        for (k, r) in q.representatives().iter().enumerate() {
            let mut e = vec![0, 0];
            e[k] = 1;
            assert_eq!(q.coordinates(r).unwrap(), e);
        }
        assert!(q.coordinates(&[0, 0, 1]).unwrap().iter().any(|&x| x != 0));
        assert!(Field::new(4).is_err());
    }
}
