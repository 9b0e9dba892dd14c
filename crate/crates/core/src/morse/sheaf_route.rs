//! The sheaf-theoretic barcode of `h`: stalks `H^*(K, {h ≤ t})` assembled
//! into a stratified model and decomposed.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::barcode::{GradedBarcode, HomSpace};
use crate::error::{Error, Result};
use crate::field::{Field, Matrix, Quotient};
use crate::morse::complex::{faces, SimplicialComplex, VertexFunction};
use crate::strat::{sample_points, StratModel};
use crate::value::PiRational;

struct Cochains<'a> {
    field: Field,
    by_dim: Vec<Vec<&'a Vec<usize>>>,
    /// `boundary[q]`: rows are `(q−1)`-simplices, columns `q`-simplices.
    boundary: Vec<Matrix>,
    values: Vec<Vec<PiRational>>,
}

impl<'a> Cochains<'a> {
    fn new(k: &'a SimplicialComplex, f: &VertexFunction, field: Field) -> Self {
        let n = k.dim();
        let by_dim: Vec<Vec<&Vec<usize>>> = (0..=n).map(|q| k.of_dim(q).collect()).collect();
        let index = k.index_by_dim();
        let mut boundary = alloc::vec![Matrix::new()];
        for q in 1..=n {
            let mut m = Field::zeros(by_dim[q - 1].len(), by_dim[q].len());
            for (j, s) in by_dim[q].iter().enumerate() {
                for (i, face) in faces(s).iter().enumerate() {
                    m[index[face.as_slice()]][j] = if i % 2 == 0 { 1 } else { field.neg(1) };
                }
            }
            boundary.push(m);
        }
        let values = by_dim
            .iter()
            .map(|ss| {
                ss.iter()
                    .map(|s| s.iter().map(|&v| f.values[v].clone()).max().unwrap())
                    .collect()
            })
            .collect();
        Self {
            field,
            by_dim,
            boundary,
            values,
        }
    }

    fn top(&self) -> usize {
        self.by_dim.len() - 1
    }

    /// Indices of `q`-simplices outside `{h ≤ s}`.
    fn free(&self, q: usize, s: &PiRational) -> Vec<usize> {
        (0..self.by_dim[q].len()).filter(|&i| self.values[q][i] > *s).collect()
    }

    /// `H^q(K, {h ≤ s})` as cocycles modulo coboundaries.
    fn relative(&self, q: usize, s: &PiRational) -> Quotient {
        let field = self.field;
        let nq = self.by_dim[q].len();
        let free = self.free(q, s);
        // cocycles: x supported on `free` with ∂_{q+1}^T x = 0
        let cocycles: Vec<Vec<u64>> = if q == self.top() {
            free.iter()
                .map(|&i| {
                    let mut v = alloc::vec![0; nq];
                    v[i] = 1;
                    v
                })
                .collect()
        } else {
            let up = &self.boundary[q + 1];
            let rows: Matrix = (0..self.by_dim[q + 1].len())
                .map(|t| free.iter().map(|&i| up[i][t]).collect())
                .collect();
            field
                .nullspace(&rows, free.len())
                .into_iter()
                .map(|x| {
                    let mut v = alloc::vec![0; nq];
                    for (&i, c) in free.iter().zip(x) {
                        v[i] = c;
                    }
                    v
                })
                .collect()
        };
        let coboundaries: Vec<Vec<u64>> = if q == 0 {
            Vec::new()
        } else {
            let down = &self.boundary[q];
            self.free(q - 1, s)
                .into_iter()
                .map(|sigma| down[sigma].clone())
                .collect()
        };
        Quotient::new(field, nq, &coboundaries, &cocycles)
    }
}

fn check_duality(k: &SimplicialComplex, field: Field) -> Result<()> {
    if k.dim() > 2 || !k.is_closed_pseudomanifold() {
        return Err(Error::NotAManifold(
            "expected a closed pseudomanifold of dimension at most 2".into(),
        ));
    }
    let n = k.dim();
    if n == 0 {
        return Ok(());
    }
    // orientable over F_p: top homology has one class per component
    let f = VertexFunction::new(alloc::vec![PiRational::zero(); k.n_vertices()]);
    let c = Cochains::new(k, &f, field);
    let top_betti = c.by_dim[n].len() - field.rank(&c.boundary[n]);
    if top_betti != k.components() {
        return Err(Error::NotAManifold(format!(
            "not orientable over F_{}",
            field.characteristic()
        )));
    }
    Ok(())
}

/// Graded dimensions of `H^*(K, {h ≤ s})`.
pub fn relative_cohomology(
    k: &SimplicialComplex,
    h: &VertexFunction,
    s: &PiRational,
    field: Field,
) -> Result<HomSpace> {
    h.check(k)?;
    let c = Cochains::new(k, h, field);
    Ok(HomSpace::from_pairs(
        (0..=c.top()).map(|q| (q as i64, c.relative(q, s).dim() as u64)),
    ))
}

/// The stratified model of `t ↦ H^*(K, {h ≤ t})` with restriction maps
/// from larger to smaller `t`, in cohomological degrees.
pub fn sheaf_model(k: &SimplicialComplex, h: &VertexFunction, field: Field) -> Result<StratModel> {
    h.check(k)?;
    let c = Cochains::new(k, h, field);
    let critical = h.critical_values();
    let samples = sample_points(&critical);
    let n = c.top();
    let at = |s: &PiRational| -> Vec<Quotient> { (0..=n).map(|q| c.relative(q, s)).collect() };
    let dims = |qs: &[Quotient]| {
        HomSpace::from_pairs(qs.iter().enumerate().map(|(q, x)| (q as i64, x.dim() as u64)))
    };
    let stalks: Vec<Vec<Quotient>> = samples.iter().map(at).collect();
    let open_dims = stalks.iter().map(|s| dims(s)).collect();
    let point_dims = critical.iter().map(|l| dims(&at(l))).collect();
    let mut maps: BTreeMap<i64, Vec<Matrix>> = BTreeMap::new();
    for q in 0..=n {
        let mut ms = Vec::new();
        for i in 0..critical.len() {
            let (left, right) = (&stalks[i][q], &stalks[i + 1][q]);
            let mut m = Field::zeros(left.dim(), right.dim());
            for (col, rep) in right.representatives().iter().enumerate() {
                // cochains relative to the larger sublevel set are relative
                // to the smaller one
                for (row, x) in left.coordinates(rep)?.into_iter().enumerate() {
                    m[row][col] = x;
                }
            }
            ms.push(m);
        }
        maps.insert(q as i64, ms);
    }
    Ok(StratModel {
        field,
        critical,
        open_dims,
        point_dims,
        maps,
    })
}

/// Barcode of the superlevel module of `h` computed through the sheaf
/// `t ↦ H^*(K, {h ≤ t})` and duality: cohomological degree `q` is reported
/// as homological degree `n − q`, `n = dim K`. `K` must be a closed
/// pseudomanifold of dimension at most 2, orientable over the field.
pub fn sheaf_route_barcode(
    k: &SimplicialComplex,
    h: &VertexFunction,
    field: Field,
) -> Result<GradedBarcode> {
    check_duality(k, field)?;
    let n = k.dim() as i64;
    let b = sheaf_model(k, h, field)?.decompose()?;
    Ok(GradedBarcode::new(b.bars().iter().map(|bar| {
        let mut bar = bar.clone();
        bar.degree = n - bar.degree;
        bar
    })))
}
