//! Finite simplicial complexes of dimension at most two with vertex values.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::value::PiRational;

/// A simplicial complex on vertices `0..n`, stored as the full list of
/// simplices (sorted vertex lists), closed under taking faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    n_vertices: usize,
    simplices: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// Checks that every simplex has at most three distinct vertices in
    /// range, that there are no duplicates, and that all faces are present.
    pub fn new(n_vertices: usize, simplices: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(simplices.len());
        for s in simplices {
            let mut sorted = s.clone();
            sorted.sort_unstable();
            sorted.dedup();
            if sorted.len() != s.len() || s.is_empty() || s.len() > 3 {
                return Err(Error::MalformedComplex(format!("bad simplex {s:?}")));
            }
            if let Some(&v) = sorted.iter().find(|&&v| v >= n_vertices) {
                return Err(Error::MalformedComplex(format!("vertex {v} out of range")));
            }
            if !seen.insert(sorted.clone()) {
                return Err(Error::MalformedComplex(format!("duplicate simplex {s:?}")));
            }
            out.push(sorted);
        }
        for v in 0..n_vertices {
            if !seen.contains(&alloc::vec![v]) {
                return Err(Error::MalformedComplex(format!("vertex {v} missing")));
            }
        }
        for s in &out {
            for face in faces(s) {
                if !seen.contains(&face) {
                    return Err(Error::MalformedComplex(format!(
                        "face {face:?} of {s:?} missing"
                    )));
                }
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        Ok(Self {
            n_vertices,
            simplices: out,
        })
    }

    /// The complex generated by the given simplices and all their faces.
    pub fn from_maximal(n_vertices: usize, top: &[Vec<usize>]) -> Result<Self> {
        let mut all = BTreeSet::new();
        for v in 0..n_vertices {
            all.insert(alloc::vec![v]);
        }
        for s in top {
            let mut s = s.clone();
            s.sort_unstable();
            let k = s.len();
            if k == 0 || k > 3 {
                return Err(Error::MalformedComplex(format!("bad simplex {s:?}")));
            }
            for mask in 1u32..(1 << k) {
                let face: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect();
                all.insert(face);
            }
        }
        Self::new(n_vertices, all.into_iter().collect())
    }

    pub fn n_vertices(&self) -> usize {
        self.n_vertices
    }

    /// All simplices, ordered by dimension then lexicographically.
    pub fn simplices(&self) -> &[Vec<usize>] {
        &self.simplices
    }

    pub fn dim(&self) -> usize {
        self.simplices.iter().map(Vec::len).max().unwrap_or(1) - 1
    }

    pub fn of_dim(&self, d: usize) -> impl Iterator<Item = &Vec<usize>> + '_ {
        self.simplices.iter().filter(move |s| s.len() == d + 1)
    }

    /// Index of each simplex within its dimension.
    pub fn index_by_dim(&self) -> BTreeMap<&[usize], usize> {
        let mut counters = [0usize; 3];
        self.simplices
            .iter()
            .map(|s| {
                let d = s.len() - 1;
                counters[d] += 1;
                (s.as_slice(), counters[d] - 1)
            })
            .collect()
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        let mut parent: Vec<usize> = (0..self.n_vertices).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for e in self.of_dim(1) {
            let (a, b) = (find(&mut parent, e[0]), find(&mut parent, e[1]));
            parent[a] = b;
        }
        (0..self.n_vertices).filter(|&v| find(&mut parent, v) == v).count()
    }

    /// Whether every simplex lies in an `n`-simplex and every
    /// `(n−1)`-simplex is a face of exactly two, for `n = dim ≥ 1`.
    pub fn is_closed_pseudomanifold(&self) -> bool {
        let n = self.dim();
        if n == 0 {
            return true;
        }
        let mut cofaces: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
        for s in self.of_dim(n) {
            for f in faces(s) {
                *cofaces.entry(f).or_insert(0) += 1;
            }
        }
        let ridges_ok = self.of_dim(n - 1).all(|r| cofaces.get(r) == Some(&2));
        let mut covered = BTreeSet::new();
        for s in self.of_dim(n) {
            let k = s.len();
            for mask in 1u32..(1 << k) {
                covered.insert((0..k).filter(|i| mask >> i & 1 == 1).map(|i| s[i]).collect::<Vec<_>>());
            }
        }
        ridges_ok && self.simplices.iter().all(|s| covered.contains(s))
    }
}

/// Codimension-one faces, in the order of the omitted vertex.
pub(crate) fn faces(s: &[usize]) -> Vec<Vec<usize>> {
    if s.len() == 1 {
        return Vec::new();
    }
    (0..s.len())
        .map(|i| s.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, &v)| v).collect())
        .collect()
}

/// A value at every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexFunction {
    pub values: Vec<PiRational>,
}

impl VertexFunction {
    pub fn new(values: Vec<PiRational>) -> Self {
        Self { values }
    }

    pub fn check(&self, k: &SimplicialComplex) -> Result<()> {
        if self.values.len() != k.n_vertices() {
            return Err(Error::MalformedComplex(format!(
                "{} values for {} vertices",
                self.values.len(),
                k.n_vertices()
            )));
        }
        Ok(())
    }

    pub fn negate(&self) -> Self {
        Self::new(self.values.iter().map(|v| -v.clone()).collect())
    }

    /// Sorted distinct values.
    pub fn critical_values(&self) -> Vec<PiRational> {
        let mut v = self.values.clone();
        v.sort();
        v.dedup();
        v
    }
}

/// The boundary of the `n`-cycle `0, 1, …, n−1`.
pub fn cycle(n: usize) -> SimplicialComplex {
    let edges: Vec<Vec<usize>> = (0..n).map(|i| alloc::vec![i, (i + 1) % n]).collect();
    SimplicialComplex::from_maximal(n, &edges).expect("valid cycle")
}

/// The `m × m` grid triangulation of the torus (`m ≥ 3`).
pub fn torus(m: usize) -> SimplicialComplex {
    let v = |i: usize, j: usize| (i % m) * m + (j % m);
    let mut tris = Vec::new();
    for i in 0..m {
        for j in 0..m {
            tris.push(alloc::vec![v(i, j), v(i + 1, j), v(i + 1, j + 1)]);
            tris.push(alloc::vec![v(i, j), v(i, j + 1), v(i + 1, j + 1)]);
        }
    }
    SimplicialComplex::from_maximal(m * m, &tris).expect("valid torus")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(SimplicialComplex::new(2, alloc::vec![alloc::vec![0], alloc::vec![0, 1]]).is_err());
        assert!(SimplicialComplex::new(1, alloc::vec![alloc::vec![0], alloc::vec![0]]).is_err());
        assert!(SimplicialComplex::new(1, alloc::vec![alloc::vec![0], alloc::vec![0, 3]]).is_err());
        let c = cycle(4);
        assert_eq!(c.simplices().len(), 8);
        assert_eq!(c.dim(), 1);
        assert!(c.is_closed_pseudomanifold());
        let t = torus(4);
        assert_eq!((t.of_dim(0).count(), t.of_dim(1).count(), t.of_dim(2).count()), (16, 48, 32));
        assert!(t.is_closed_pseudomanifold());
        assert_eq!(t.components(), 1);
        let path = SimplicialComplex::from_maximal(3, &[alloc::vec![0, 1], alloc::vec![1, 2]]).unwrap();
        assert!(!path.is_closed_pseudomanifold());
    }
}
