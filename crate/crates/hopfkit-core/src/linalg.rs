//! Exact dense linear algebra over [`CycScalar`]: rank, kernels, solving,
//! Kronecker products, and echelonized subspaces.
//!
//! The tensor index convention is fixed project-wide: the left factor is
//! major, `(i ⊗ j) ↦ i * dim_right + j`.

use crate::scalar::CycScalar;

/// Dense row-major matrix of exact scalars.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat {
    pub rows: usize,
    pub cols: usize,
    data: Vec<CycScalar>,
}

impl std::fmt::Debug for Mat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.at(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

impl Mat {
    pub fn zero(rows: usize, cols: usize) -> Mat {
        Mat { rows, cols, data: vec![CycScalar::from_int(0); rows * cols] }
    }

    pub fn identity(n: usize) -> Mat {
        let mut m = Mat::zero(n, n);
        for i in 0..n {
            m.set(i, i, CycScalar::from_int(1));
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> CycScalar) -> Mat {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        Mat { rows, cols, data }
    }

    pub fn from_rows(rows: Vec<Vec<CycScalar>>) -> Mat {
        let nr = rows.len();
        let nc = if nr == 0 { 0 } else { rows[0].len() };
        assert!(rows.iter().all(|r| r.len() == nc));
        Mat { rows: nr, cols: nc, data: rows.into_iter().flatten().collect() }
    }

    pub fn at(&self, r: usize, c: usize) -> &CycScalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycScalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[CycScalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn col_vec(&self, c: usize) -> Vec<CycScalar> {
        (0..self.rows).map(|r| self.at(r, c).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |r, c| self.at(c, r).clone())
    }

    pub fn add(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).add(other.at(r, c)))
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).sub(other.at(r, c)))
    }

    pub fn scale(&self, s: &CycScalar) -> Mat {
        Mat::from_fn(self.rows, self.cols, |r, c| self.at(r, c).mul(s))
    }

    pub fn matmul(&self, other: &Mat) -> Mat {
        assert_eq!(self.cols, other.rows, "matmul dimension mismatch");
        let mut out = Mat::zero(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let b = other.at(k, c);
                    if !b.is_zero() {
                        let v = out.at(r, c).add(&a.mul(b));
                        out.set(r, c, v);
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(self.cols, v.len());
        let mut out = vec![CycScalar::from_int(0); self.rows];
        for r in 0..self.rows {
            for c in 0..self.cols {
                let a = self.at(r, c);
                if !a.is_zero() && !v[c].is_zero() {
                    out[r] = out[r].add(&a.mul(&v[c]));
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Kronecker product with the fixed left-factor-major convention:
    /// entry ((i*p + k), (j*q + l)) = A[i][j] * B[k][l].
    pub fn kron(&self, other: &Mat) -> Mat {
        let (p, q) = (other.rows, other.cols);
        let mut out = Mat::zero(self.rows * p, self.cols * q);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.at(i, j);
                if a.is_zero() {
                    continue;
                }
                for k in 0..p {
                    for l in 0..q {
                        let b = other.at(k, l);
                        if !b.is_zero() {
                            out.set(i * p + k, j * q + l, a.mul(b));
                        }
                    }
                }
            }
        }
        out
    }
}

/// Permutation matrix sending X ⊗ Y to Y ⊗ X, where dim X = a, dim Y = b:
/// e_(i*b + j) ↦ e_(j*a + i).
pub fn flip_mat(a: usize, b: usize) -> Mat {
    let mut m = Mat::zero(a * b, a * b);
    for i in 0..a {
        for j in 0..b {
            m.set(j * a + i, i * b + j, CycScalar::from_int(1));
        }
    }
    m
}

fn scalar_size(s: &CycScalar) -> usize {
    let (num, den) = s.raw();
    num.iter().map(|c| c.bits() as usize).sum::<usize>() + den.bits() as usize
}

/// Reduced row echelon form; returns the echelon matrix and pivot columns.
/// Pivot rows are normalized to leading coefficient 1. Deterministic: among
/// candidate pivots the smallest-coefficient row (then lowest index) wins.
pub fn rref(m: &Mat) -> (Mat, Vec<usize>) {
    let mut a = m.clone();
    let mut pivots = Vec::new();
    let mut r = 0usize;
    for c in 0..a.cols {
        if r >= a.rows {
            break;
        }
        let mut best: Option<(usize, usize)> = None;
        for rr in r..a.rows {
            if !a.at(rr, c).is_zero() {
                let sz = scalar_size(a.at(rr, c));
                if best.map_or(true, |(bsz, _)| sz < bsz) {
                    best = Some((sz, rr));
                }
            }
        }
        let Some((_, pr)) = best else { continue };
        if pr != r {
            for cc in 0..a.cols {
                let tmp = a.at(r, cc).clone();
                a.set(r, cc, a.at(pr, cc).clone());
                a.set(pr, cc, tmp);
            }
        }
        let inv = a.at(r, c).inv().expect("pivot nonzero");
        for cc in c..a.cols {
            let v = a.at(r, cc).mul(&inv);
            a.set(r, cc, v);
        }
        for rr in 0..a.rows {
            if rr != r && !a.at(rr, c).is_zero() {
                let f = a.at(rr, c).clone();
                for cc in c..a.cols {
                    let v = a.at(rr, cc).sub(&f.mul(a.at(r, cc)));
                    a.set(rr, cc, v);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &Mat) -> usize {
    rref(m).1.len()
}

/// Basis of the right kernel {x : M x = 0}.
pub fn kernel_basis(m: &Mat) -> Vec<Vec<CycScalar>> {
    let (e, pivots) = rref(m);
    let mut is_pivot = vec![None; m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![CycScalar::from_int(0); m.cols];
        v[free] = CycScalar::from_int(1);
        for (c, slot) in is_pivot.iter().enumerate() {
            if let Some(r) = slot {
                v[c] = e.at(*r, free).neg();
            }
        }
        basis.push(v);
    }
    basis
}

/// Any solution of M x = b, or None.
pub fn solve(m: &Mat, b: &[CycScalar]) -> Option<Vec<CycScalar>> {
    assert_eq!(m.rows, b.len());
    let mut aug = Mat::zero(m.rows, m.cols + 1);
    for r in 0..m.rows {
        for c in 0..m.cols {
            aug.set(r, c, m.at(r, c).clone());
        }
        aug.set(r, m.cols, b[r].clone());
    }
    let (e, pivots) = rref(&aug);
    if pivots.contains(&m.cols) {
        return None; // inconsistent
    }
    let mut x = vec![CycScalar::from_int(0); m.cols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = e.at(r, m.cols).clone();
    }
    Some(x)
}

pub fn inverse(m: &Mat) -> Option<Mat> {
    if m.rows != m.cols {
        return None;
    }
    let n = m.rows;
    let mut aug = Mat::zero(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            aug.set(r, c, m.at(r, c).clone());
        }
        aug.set(r, n + r, CycScalar::from_int(1));
    }
    let (e, pivots) = rref(&aug);
    if pivots.len() < n || pivots[n - 1] >= n {
        return None;
    }
    Some(Mat::from_fn(n, n, |r, c| e.at(r, n + c).clone()))
}

/// Echelonized subspace of a fixed ambient coordinate space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient_dim: usize,
    basis: Vec<Vec<CycScalar>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Subspace {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_vectors(ambient_dim: usize, vectors: &[Vec<CycScalar>]) -> Subspace {
        for v in vectors {
            assert_eq!(v.len(), ambient_dim);
        }
        if vectors.is_empty() {
            return Subspace::zero(ambient_dim);
        }
        let (e, pivots) = rref(&Mat::from_rows(vectors.to_vec()));
        let basis = (0..pivots.len()).map(|r| e.row(r).to_vec()).collect();
        Subspace { ambient_dim, basis, pivots }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Vec<CycScalar>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduce v against the echelon basis; the remainder is zero iff v lies in the span.
    pub fn reduce(&self, v: &[CycScalar]) -> Vec<CycScalar> {
        assert_eq!(v.len(), self.ambient_dim);
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(self.pivots.iter()) {
            if !w[p].is_zero() {
                let f = w[p].clone();
                for c in p..self.ambient_dim {
                    if !row[c].is_zero() {
                        w[c] = w[c].sub(&f.mul(&row[c]));
                    }
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[CycScalar]) -> bool {
        self.reduce(v).iter().all(|c| c.is_zero())
    }

    /// Insert a vector, returning true if it enlarged the span.
    pub fn insert(&mut self, v: &[CycScalar]) -> bool {
        let w = self.reduce(v);
        let Some(p) = w.iter().position(|c| !c.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero");
        let mut row: Vec<CycScalar> = w.iter().map(|c| c.mul(&inv)).collect();
        row[p] = CycScalar::from_int(1);
        // back-substitute into existing rows to keep reduced echelon form
        for r in 0..self.basis.len() {
            let f = self.basis[r][p].clone();
            if !f.is_zero() {
                for c in 0..self.ambient_dim {
                    if !row[c].is_zero() {
                        self.basis[r][c] = self.basis[r][c].sub(&f.mul(&row[c]));
                    }
                }
            }
        }
        let at = self.pivots.iter().position(|&q| q > p).unwrap_or(self.pivots.len());
        self.pivots.insert(at, p);
        self.basis.insert(at, row);
        true
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        let mut out = self.clone();
        for v in other.basis.iter() {
            out.insert(v);
        }
        out
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        if self.dim() == 0 || other.dim() == 0 {
            return Subspace::zero(self.ambient_dim);
        }
        // columns [A | B]; kernel vectors give A-combinations in the intersection
        let a = self.dim();
        let m = Mat::from_fn(self.ambient_dim, a + other.dim(), |r, c| {
            if c < a {
                self.basis[c][r].clone()
            } else {
                other.basis[c - a][r].clone()
            }
        });
        let mut vectors = Vec::new();
        for k in kernel_basis(&m) {
            let mut v = vec![CycScalar::from_int(0); self.ambient_dim];
            for (i, coef) in k[..a].iter().enumerate() {
                if !coef.is_zero() {
                    for c in 0..self.ambient_dim {
                        if !self.basis[i][c].is_zero() {
                            v[c] = v[c].add(&coef.mul(&self.basis[i][c]));
                        }
                    }
                }
            }
            vectors.push(v);
        }
        Subspace::from_vectors(self.ambient_dim, &vectors)
    }

    /// Matrix of the quotient map onto the complement spanned by the
    /// non-pivot standard coordinates, taken in increasing index order.
    /// Its kernel is exactly this subspace.
    pub fn quotient_projection(&self) -> Mat {
        let free: Vec<usize> =
            (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect();
        let mut pi = Mat::zero(free.len(), self.ambient_dim);
        // pi(v) = coordinates of (v reduced by the echelon rows) at free indices
        for (t, &ft) in free.iter().enumerate() {
            pi.set(t, ft, CycScalar::from_int(1));
            for (r, &p) in self.pivots.iter().enumerate() {
                let c = self.basis[r][ft].neg();
                if !c.is_zero() {
                    pi.set(t, p, c);
                }
            }
        }
        pi
    }

    /// Standard-basis representatives of the complement coordinates, in the
    /// same order as the rows of [`Self::quotient_projection`].
    pub fn complement_indices(&self) -> Vec<usize> {
        (0..self.ambient_dim).filter(|c| !self.pivots.contains(c)).collect()
    }
}

/// Sparse vector: strictly increasing indices, no explicit zeros.
pub type SparseVec = Vec<(u32, CycScalar)>;

pub fn sparse_from_dense(v: &[CycScalar]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i as u32, c.clone()))
        .collect()
}

pub fn sparse_to_dense(v: &SparseVec, n: usize) -> Vec<CycScalar> {
    let mut out = vec![CycScalar::from_int(0); n];
    for (i, c) in v.iter() {
        out[*i as usize] = c.clone();
    }
    out
}

/// out += coef * v, merging sorted sparse representations.
pub fn sparse_add_scaled(out: &mut SparseVec, v: &[(u32, CycScalar)], coef: &CycScalar) {
    if coef.is_zero() || v.is_empty() {
        return;
    }
    let mut merged: SparseVec = Vec::with_capacity(out.len() + v.len());
    let (mut i, mut j) = (0usize, 0usize);
    while i < out.len() || j < v.len() {
        if j >= v.len() || (i < out.len() && out[i].0 < v[j].0) {
            merged.push(out[i].clone());
            i += 1;
        } else if i >= out.len() || v[j].0 < out[i].0 {
            let c = v[j].1.mul(coef);
            if !c.is_zero() {
                merged.push((v[j].0, c));
            }
            j += 1;
        } else {
            let c = out[i].1.add(&v[j].1.mul(coef));
            if !c.is_zero() {
                merged.push((out[i].0, c));
            }
            i += 1;
            j += 1;
        }
    }
    *out = merged;
}

pub fn sparse_scale(v: &SparseVec, coef: &CycScalar) -> SparseVec {
    if coef.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, c)| (*i, c.mul(coef))).collect()
}

pub fn sparse_eq(a: &SparseVec, b: &SparseVec) -> bool {
    a.len() == b.len() && a.iter().zip(b.iter()).all(|(x, y)| x.0 == y.0 && x.1 == y.1)
}

pub fn sparse_unit(i: u32) -> SparseVec {
    vec![(i, CycScalar::from_int(1))]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::CycScalar;
    use proptest::prelude::*;

    fn int(v: i64) -> CycScalar {
        CycScalar::from_int(v)
    }

    fn mat_i64(rows: &[&[i64]]) -> Mat {
        Mat::from_rows(rows.iter().map(|r| r.iter().map(|&v| int(v)).collect()).collect())
    }

    #[test]
    fn rank_of_identity() {
        assert_eq!(rank(&Mat::identity(5)), 5);
    }

    #[test]
    fn kernel_of_zero_matrix() {
        let k = kernel_basis(&Mat::zero(3, 3));
        assert_eq!(k.len(), 3);
        assert_eq!(Subspace::from_vectors(3, &k).dim(), 3);
    }

    #[test]
    fn rank_of_sign_bicharacter_matrix_over_z4() {
        // beta(g^a, g^b) = (-1)^(a b) on Z/4
        let m = Mat::from_fn(4, 4, |a, b| int(if (a * b) % 2 == 0 { 1 } else { -1 }));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn rank_invariant_under_transpose() {
        let m = mat_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), rank(&m.transpose()));
        assert_eq!(rank(&m), 2);
    }

    #[test]
    fn solve_and_inverse() {
        let m = mat_i64(&[&[2, 1], &[1, 1]]);
        let x = solve(&m, &[int(3), int(2)]).unwrap();
        assert_eq!(m.apply(&x), vec![int(3), int(2)]);
        let inv = inverse(&m).unwrap();
        assert_eq!(inv.matmul(&m), Mat::identity(2));
        assert!(inverse(&mat_i64(&[&[1, 2], &[2, 4]])).is_none());
        assert!(solve(&mat_i64(&[&[1, 1], &[1, 1]]), &[int(0), int(1)]).is_none());
    }

    #[test]
    fn kron_identities() {
        assert_eq!(Mat::identity(2).kron(&Mat::identity(3)), Mat::identity(6));
        let d = mat_i64(&[&[1, 0], &[0, -1]]);
        let dd = d.kron(&d);
        assert_eq!(
            dd,
            mat_i64(&[&[1, 0, 0, 0], &[0, -1, 0, 0], &[0, 0, -1, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn kron_associates_with_fixed_convention() {
        let a = mat_i64(&[&[1, 2], &[0, 1]]);
        let b = mat_i64(&[&[3], &[1]]);
        let c = mat_i64(&[&[1, -1]]);
        assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }

    #[test]
    fn subspace_operations() {
        let e1 = vec![int(1), int(0), int(0)];
        let e2 = vec![int(0), int(1), int(0)];
        let e3 = vec![int(0), int(0), int(1)];
        let s12 = Subspace::from_vectors(3, &[e1.clone(), e2.clone()]);
        let s1 = Subspace::from_vectors(3, &[e1.clone()]);
        let s2 = Subspace::from_vectors(3, &[e2.clone()]);
        assert_eq!(s1.sum(&s2), s12);
        let diag = Subspace::from_vectors(3, &[vec![int(1), int(1), int(0)]]);
        assert_eq!(diag.intersect(&s1).dim(), 0);
        let s23 = Subspace::from_vectors(3, &[e2.clone(), e3.clone()]);
        let meet = s12.intersect(&s23);
        assert_eq!(meet.dim(), 1);
        assert!(meet.contains(&e2));
        assert!(!meet.contains(&e1));
    }

    #[test]
    fn quotient_projection_kernel_is_subspace() {
        let s = Subspace::from_vectors(3, &[vec![int(1), int(1), int(0)]]);
        let pi = s.quotient_projection();
        assert_eq!(pi.rows, 2);
        assert!(pi.apply(&[int(1), int(1), int(0)]).iter().all(|c| c.is_zero()));
        assert!(!pi.apply(&[int(1), int(0), int(0)]).iter().all(|c| c.is_zero()));
    }

    fn arb_small_mat() -> impl Strategy<Value = Mat> {
        (1usize..=4, 1usize..=4).prop_flat_map(|(r, c)| {
            prop::collection::vec(-3i64..=3, r * c)
                .prop_map(move |vals| Mat { rows: r, cols: c, data: vals.into_iter().map(int).collect() })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn kernel_vectors_are_killed(m in arb_small_mat()) {
            let ks = kernel_basis(&m);
            prop_assert_eq!(rank(&m) + ks.len(), m.cols);
            for k in ks {
                prop_assert!(m.apply(&k).iter().all(|c| c.is_zero()));
            }
        }

        #[test]
        fn kron_mixed_product(a in arb_small_mat(), b in arb_small_mat(), c in arb_small_mat(), d in arb_small_mat()) {
            // kron(A,B) kron(C,D) = kron(AC, BD) whenever shapes compose
            prop_assume!(a.cols == c.rows && b.cols == d.rows);
            let lhs = a.kron(&b).matmul(&c.kron(&d));
            let rhs = a.matmul(&c).kron(&b.matmul(&d));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
