//! Finite-dimensional Hopf algebras presented by structure constants,
//! with full axiom verification, duals, centers, class functions,
//! ideals and Hopf quotients.
//!
//! Conventions, fixed project-wide:
//! - `mult` entry (i, j, k) is the coefficient of `b_k` in `b_i * b_j`;
//! - `comult` entry (i, j, k) is the coefficient of `b_j ⊗ b_k` in `Δ(b_i)`;
//! - a linear map `T` is stored as the matrix with `T(b_j) = Σ_i M[i][j] b_i`
//!   (columns are images);
//! - tensor indices are left-factor major: `b_i ⊗ b_j ↦ i * dim + j`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{
    kernel_basis, rank, sparse_add_scaled, sparse_eq, sparse_from_dense, sparse_scale,
    sparse_to_dense, sparse_unit, Mat, SparseVec, Subspace,
};
use crate::scalar::CycScalar;

#[derive(Debug, Error)]
pub enum HopfError {
    #[error("not a Hopf ideal: {condition}")]
    NotHopfIdeal { condition: String },
    #[error("antipode is not invertible")]
    SingularAntipode,
    #[error("{0} is not an algebra representation")]
    NotARepresentation(String),
}

/// Structure-constant tensor c[i][j][k], stored as sorted sparse triples.
/// Used both for multiplication (product of `b_i b_j` read off along k)
/// and comultiplication (`Δ(b_i)` read off along the pair (j, k)).
#[derive(Clone, Debug, PartialEq)]
pub struct StructTensor {
    pub dim: usize,
    entries: Vec<(u32, u32, u32, CycScalar)>,
}

impl StructTensor {
    pub fn from_entries(dim: usize, mut entries: Vec<(u32, u32, u32, CycScalar)>) -> StructTensor {
        entries.retain(|e| !e.3.is_zero());
        entries.sort_by_key(|e| (e.0, e.1, e.2));
        let mut merged: Vec<(u32, u32, u32, CycScalar)> = Vec::with_capacity(entries.len());
        for e in entries {
            if let Some(last) = merged.last_mut() {
                if (last.0, last.1, last.2) == (e.0, e.1, e.2) {
                    last.3 = last.3.add(&e.3);
                    continue;
                }
            }
            merged.push(e);
        }
        merged.retain(|e| !e.3.is_zero());
        StructTensor { dim, entries: merged }
    }

    pub fn entries(&self) -> &[(u32, u32, u32, CycScalar)] {
        &self.entries
    }

    fn range_of(&self, key: impl Fn(&(u32, u32, u32, CycScalar)) -> std::cmp::Ordering) -> &[(u32, u32, u32, CycScalar)] {
        let lo = self.entries.partition_point(|e| key(e) == std::cmp::Ordering::Less);
        let hi = self.entries.partition_point(|e| key(e) != std::cmp::Ordering::Greater);
        &self.entries[lo..hi]
    }

    /// All entries with first indices (i, j): the product b_i b_j for mult.
    pub fn slice_ij(&self, i: u32, j: u32) -> &[(u32, u32, u32, CycScalar)] {
        self.range_of(|e| (e.0, e.1).cmp(&(i, j)))
    }

    /// All entries with first index i: Δ(b_i) for comult.
    pub fn slice_i(&self, i: u32) -> &[(u32, u32, u32, CycScalar)] {
        self.range_of(|e| e.0.cmp(&i))
    }
}

/// Element of H ⊗ H with sparse coefficients over pairs of basis indices.
#[derive(Clone, Debug, PartialEq)]
pub struct Tens2 {
    pub dim: usize,
    pub map: BTreeMap<(u32, u32), CycScalar>,
}

impl Tens2 {
    pub fn zero(dim: usize) -> Tens2 {
        Tens2 { dim, map: BTreeMap::new() }
    }

    pub fn insert_add(&mut self, key: (u32, u32), v: CycScalar) {
        if v.is_zero() {
            return;
        }
        let entry = self.map.entry(key).or_insert_with(|| CycScalar::from_int(0));
        *entry = entry.add(&v);
        if entry.is_zero() {
            self.map.remove(&key);
        }
    }

    pub fn add(&self, other: &Tens2) -> Tens2 {
        let mut out = self.clone();
        for (k, v) in other.map.iter() {
            out.insert_add(*k, v.clone());
        }
        out
    }

    pub fn sub(&self, other: &Tens2) -> Tens2 {
        let mut out = self.clone();
        for (k, v) in other.map.iter() {
            out.insert_add(*k, v.neg());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }

    pub fn flip(&self) -> Tens2 {
        let mut out = Tens2::zero(self.dim);
        for ((i, j), v) in self.map.iter() {
            out.insert_add((*j, *i), v.clone());
        }
        out
    }

    pub fn from_mat(m: &Mat) -> Tens2 {
        assert_eq!(m.rows, m.cols);
        let mut out = Tens2::zero(m.rows);
        for i in 0..m.rows {
            for j in 0..m.cols {
                if !m.at(i, j).is_zero() {
                    out.insert_add((i as u32, j as u32), m.at(i, j).clone());
                }
            }
        }
        out
    }

    pub fn to_mat(&self) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for ((i, j), v) in self.map.iter() {
            m.set(*i as usize, *j as usize, v.clone());
        }
        m
    }
}

/// Element of H ⊗ H ⊗ H, sparse.
#[derive(Clone, Debug, PartialEq)]
pub struct Tens3 {
    pub dim: usize,
    pub map: BTreeMap<(u32, u32, u32), CycScalar>,
}

impl Tens3 {
    pub fn zero(dim: usize) -> Tens3 {
        Tens3 { dim, map: BTreeMap::new() }
    }

    pub fn insert_add(&mut self, key: (u32, u32, u32), v: CycScalar) {
        if v.is_zero() {
            return;
        }
        let entry = self.map.entry(key).or_insert_with(|| CycScalar::from_int(0));
        *entry = entry.add(&v);
        if entry.is_zero() {
            self.map.remove(&key);
        }
    }

    pub fn sub(&self, other: &Tens3) -> Tens3 {
        let mut out = self.clone();
        for (k, v) in other.map.iter() {
            out.insert_add(*k, v.neg());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.map.is_empty()
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Metadata {
    pub grouplikes: Vec<String>,
    pub tags: BTreeMap<String, String>,
}

/// A finite-dimensional Hopf algebra over Q(zeta_conductor).
#[derive(Clone, Debug)]
pub struct HopfAlgebra {
    pub dim: usize,
    pub conductor: u32,
    pub basis_labels: Vec<String>,
    pub mult: StructTensor,
    pub unit: Vec<CycScalar>,
    pub comult: StructTensor,
    pub counit: Vec<CycScalar>,
    pub antipode: Mat,
    pub metadata: Metadata,
}

/// One verified (or failed) axiom, with a witness on failure.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Outcome of an axiom-verification run.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Report {
        Report { checks: Vec::new() }
    }

    pub fn push(&mut self, name: &str, pass: bool, witness: Option<String>) {
        self.checks.push(Check { name: name.to_string(), pass, witness });
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failed(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| !c.pass).collect()
    }
}

impl Default for Report {
    fn default() -> Self {
        Self::new()
    }
}

impl HopfAlgebra {
    /// Structural well-formedness (shapes and index ranges); panics on misuse.
    pub fn assert_well_formed(&self) {
        assert_eq!(self.basis_labels.len(), self.dim);
        assert_eq!(self.unit.len(), self.dim);
        assert_eq!(self.counit.len(), self.dim);
        assert_eq!(self.antipode.rows, self.dim);
        assert_eq!(self.antipode.cols, self.dim);
        let n = self.dim as u32;
        for e in self.mult.entries() {
            assert!(e.0 < n && e.1 < n && e.2 < n);
        }
        for e in self.comult.entries() {
            assert!(e.0 < n && e.1 < n && e.2 < n);
        }
    }

    pub fn zero_scalar(&self) -> CycScalar {
        CycScalar::zero(self.conductor)
    }

    pub fn unit_sparse(&self) -> SparseVec {
        sparse_from_dense(&self.unit)
    }

    /// Product of two sparse elements.
    pub fn mul_vec(&self, a: &SparseVec, b: &SparseVec) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (i, ca) in a.iter() {
            for (j, cb) in b.iter() {
                let c = ca.mul(cb);
                if c.is_zero() {
                    continue;
                }
                for (_, _, k, m) in self.mult.slice_ij(*i, *j) {
                    sparse_add_scaled(&mut out, &[(*k, m.clone())], &c);
                }
            }
        }
        out
    }

    pub fn counit_of(&self, v: &SparseVec) -> CycScalar {
        let mut s = self.zero_scalar();
        for (i, c) in v.iter() {
            if !self.counit[*i as usize].is_zero() {
                s = s.add(&c.mul(&self.counit[*i as usize]));
            }
        }
        s
    }

    pub fn antipode_vec(&self, v: &SparseVec) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for (j, c) in v.iter() {
            let col = sparse_from_dense(&self.antipode.col_vec(*j as usize));
            sparse_add_scaled(&mut out, &col, c);
        }
        out
    }

    /// Δ of a sparse element, as an element of H ⊗ H.
    pub fn delta_vec(&self, v: &SparseVec) -> Tens2 {
        let mut out = Tens2::zero(self.dim);
        for (i, c) in v.iter() {
            for (_, j, k, d) in self.comult.slice_i(*i) {
                out.insert_add((*j, *k), c.mul(d));
            }
        }
        out
    }

    /// Product in H ⊗ H: (a ⊗ b)(c ⊗ d) = ac ⊗ bd, extended bilinearly.
    pub fn mul_t2(&self, a: &Tens2, b: &Tens2) -> Tens2 {
        let mut out = Tens2::zero(self.dim);
        for ((i1, j1), c1) in a.map.iter() {
            for ((i2, j2), c2) in b.map.iter() {
                let c = c1.mul(c2);
                if c.is_zero() {
                    continue;
                }
                for (_, _, k1, m1) in self.mult.slice_ij(*i1, *i2) {
                    let cm = c.mul(m1);
                    if cm.is_zero() {
                        continue;
                    }
                    for (_, _, k2, m2) in self.mult.slice_ij(*j1, *j2) {
                        out.insert_add((*k1, *k2), cm.mul(m2));
                    }
                }
            }
        }
        out
    }

    /// Product in H ⊗ H ⊗ H, componentwise.
    pub fn mul_t3(&self, a: &Tens3, b: &Tens3) -> Tens3 {
        let mut out = Tens3::zero(self.dim);
        for ((i1, j1, k1), c1) in a.map.iter() {
            for ((i2, j2, k2), c2) in b.map.iter() {
                let c = c1.mul(c2);
                if c.is_zero() {
                    continue;
                }
                for (_, _, x, mx) in self.mult.slice_ij(*i1, *i2) {
                    let cx = c.mul(mx);
                    if cx.is_zero() {
                        continue;
                    }
                    for (_, _, y, my) in self.mult.slice_ij(*j1, *j2) {
                        let cy = cx.mul(my);
                        if cy.is_zero() {
                            continue;
                        }
                        for (_, _, z, mz) in self.mult.slice_ij(*k1, *k2) {
                            out.insert_add((*x, *y, *z), cy.mul(mz));
                        }
                    }
                }
            }
        }
        out
    }

    /// (Δ ⊗ id) applied to an element of H ⊗ H.
    pub fn delta_left_t2(&self, t: &Tens2) -> Tens3 {
        let mut out = Tens3::zero(self.dim);
        for ((i, j), c) in t.map.iter() {
            for (_, a, b, d) in self.comult.slice_i(*i) {
                out.insert_add((*a, *b, *j), c.mul(d));
            }
        }
        out
    }

    /// (id ⊗ Δ) applied to an element of H ⊗ H.
    pub fn delta_right_t2(&self, t: &Tens2) -> Tens3 {
        let mut out = Tens3::zero(self.dim);
        for ((i, j), c) in t.map.iter() {
            for (_, a, b, d) in self.comult.slice_i(*j) {
                out.insert_add((*i, *a, *b), c.mul(d));
            }
        }
        out
    }

    /// Embed an element of H ⊗ H into H ⊗ H ⊗ H at the given legs
    /// (e.g. legs (0, 2) gives R13).
    pub fn embed_t2(&self, t: &Tens2, leg_a: usize, leg_b: usize) -> Tens3 {
        let unit = sparse_from_dense(&self.unit);
        let mut out = Tens3::zero(self.dim);
        for ((i, j), c) in t.map.iter() {
            for (u, cu) in unit.iter() {
                let mut key = [0u32; 3];
                key[leg_a] = *i;
                key[leg_b] = *j;
                let leg_u = 3 - leg_a - leg_b;
                key[leg_u] = *u;
                out.insert_add((key[0], key[1], key[2]), c.mul(cu));
            }
        }
        out
    }

    /// (ε ⊗ id) of an element of H ⊗ H, as a sparse vector.
    pub fn counit_left_t2(&self, t: &Tens2) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for ((i, j), c) in t.map.iter() {
            let e = self.counit[*i as usize].clone();
            if !e.is_zero() {
                sparse_add_scaled(&mut out, &[(*j, e)], c);
            }
        }
        out
    }

    /// (id ⊗ ε) of an element of H ⊗ H, as a sparse vector.
    pub fn counit_right_t2(&self, t: &Tens2) -> SparseVec {
        let mut out: SparseVec = Vec::new();
        for ((i, j), c) in t.map.iter() {
            let e = self.counit[*j as usize].clone();
            if !e.is_zero() {
                sparse_add_scaled(&mut out, &[(*i, e)], c);
            }
        }
        out
    }

    /// S ∘ S as a matrix.
    pub fn s_squared(&self) -> Mat {
        self.antipode.matmul(&self.antipode)
    }

    /// Exact test for Δv = v ⊗ v and ε(v) = 1.
    pub fn is_grouplike(&self, v: &SparseVec) -> bool {
        if !self.counit_of(v).is_one() {
            return false;
        }
        let dv = self.delta_vec(v);
        let mut outer = Tens2::zero(self.dim);
        for (i, ci) in v.iter() {
            for (j, cj) in v.iter() {
                outer.insert_add((*i, *j), ci.mul(cj));
            }
        }
        dv == outer
    }

    /// Left multiplication by basis element i, as a matrix.
    pub fn left_mult_mat(&self, i: u32) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for j in 0..self.dim as u32 {
            for (_, _, k, c) in self.mult.slice_ij(i, j) {
                m.set(*k as usize, j as usize, c.clone());
            }
        }
        m
    }

    /// Right multiplication by basis element j, as a matrix.
    pub fn right_mult_mat(&self, j: u32) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for i in 0..self.dim as u32 {
            for (_, _, k, c) in self.mult.slice_ij(i, j) {
                m.set(*k as usize, i as usize, c.clone());
            }
        }
        m
    }

    /// Left multiplication by an arbitrary element, as a matrix.
    pub fn left_mult_mat_of(&self, v: &SparseVec) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for (i, c) in v.iter() {
            for j in 0..self.dim as u32 {
                for (_, _, k, d) in self.mult.slice_ij(*i, j) {
                    let cur = m.at(*k as usize, j as usize).add(&c.mul(d));
                    m.set(*k as usize, j as usize, cur);
                }
            }
        }
        m
    }
}

/// Run the full Hopf-algebra axiom suite.
pub fn verify_hopf(h: &HopfAlgebra) -> Report {
    h.assert_well_formed();
    let n = h.dim as u32;
    let mut rep = Report::new();

    // pairwise products cached as sparse vectors
    let prods: Vec<Vec<SparseVec>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    h.mult
                        .slice_ij(i, j)
                        .iter()
                        .map(|(_, _, k, c)| (*k, c.clone()))
                        .collect::<SparseVec>()
                })
                .collect()
        })
        .collect();

    // associativity: (b_i b_j) b_k = b_i (b_j b_k)
    let mut assoc_witness = None;
    'assoc: for i in 0..n {
        for j in 0..n {
            let ij = &prods[i as usize][j as usize];
            for k in 0..n {
                let mut lhs: SparseVec = Vec::new();
                for (m, c) in ij.iter() {
                    sparse_add_scaled(&mut lhs, &prods[*m as usize][k as usize], c);
                }
                let jk = &prods[j as usize][k as usize];
                let mut rhs: SparseVec = Vec::new();
                for (m, c) in jk.iter() {
                    sparse_add_scaled(&mut rhs, &prods[i as usize][*m as usize], c);
                }
                if !sparse_eq(&lhs, &rhs) {
                    assoc_witness = Some(format!("(i,j,k)=({i},{j},{k})"));
                    break 'assoc;
                }
            }
        }
    }
    rep.push("associativity", assoc_witness.is_none(), assoc_witness);

    // unit
    let unit = h.unit_sparse();
    let mut unit_witness = None;
    for i in 0..n {
        let e = sparse_unit(i);
        if !sparse_eq(&h.mul_vec(&unit, &e), &e) || !sparse_eq(&h.mul_vec(&e, &unit), &e) {
            unit_witness = Some(format!("i={i}"));
            break;
        }
    }
    rep.push("unit", unit_witness.is_none(), unit_witness);

    // coassociativity: (Δ ⊗ id)Δ = (id ⊗ Δ)Δ on basis elements
    let mut coassoc_witness = None;
    for i in 0..n {
        let d = h.delta_vec(&sparse_unit(i));
        if h.delta_left_t2(&d) != h.delta_right_t2(&d) {
            coassoc_witness = Some(format!("i={i}"));
            break;
        }
    }
    rep.push("coassociativity", coassoc_witness.is_none(), coassoc_witness);

    // counit: (ε ⊗ id)Δ = id = (id ⊗ ε)Δ
    let mut counit_witness = None;
    for i in 0..n {
        let e = sparse_unit(i);
        let d = h.delta_vec(&e);
        if !sparse_eq(&h.counit_left_t2(&d), &e) || !sparse_eq(&h.counit_right_t2(&d), &e) {
            counit_witness = Some(format!("i={i}"));
            break;
        }
    }
    rep.push("counit", counit_witness.is_none(), counit_witness);

    // Δ is an algebra map: Δ(b_i b_j) = Δ(b_i)Δ(b_j), Δ(1) = 1 ⊗ 1
    let mut dmap_witness = None;
    'dmap: for i in 0..n {
        let di = h.delta_vec(&sparse_unit(i));
        for j in 0..n {
            let dj = h.delta_vec(&sparse_unit(j));
            let lhs = h.delta_vec(&prods[i as usize][j as usize]);
            if lhs != h.mul_t2(&di, &dj) {
                dmap_witness = Some(format!("(i,j)=({i},{j})"));
                break 'dmap;
            }
        }
    }
    if dmap_witness.is_none() {
        let d1 = h.delta_vec(&unit);
        let mut unit_t2 = Tens2::zero(h.dim);
        for (a, ca) in unit.iter() {
            for (b, cb) in unit.iter() {
                unit_t2.insert_add((*a, *b), ca.mul(cb));
            }
        }
        if d1 != unit_t2 {
            dmap_witness = Some("Δ(1) ≠ 1⊗1".to_string());
        }
    }
    rep.push("comult_algebra_map", dmap_witness.is_none(), dmap_witness);

    // ε is an algebra map
    let mut emap_witness = None;
    'emap: for i in 0..n {
        for j in 0..n {
            let lhs = h.counit_of(&prods[i as usize][j as usize]);
            let rhs = h.counit[i as usize].mul(&h.counit[j as usize]);
            if lhs != rhs {
                emap_witness = Some(format!("(i,j)=({i},{j})"));
                break 'emap;
            }
        }
    }
    if emap_witness.is_none() && !h.counit_of(&unit).is_one() {
        emap_witness = Some("ε(1) ≠ 1".to_string());
    }
    rep.push("counit_algebra_map", emap_witness.is_none(), emap_witness);

    // antipode: m(S ⊗ id)Δ = uε = m(id ⊗ S)Δ
    let mut ant_witness = None;
    for i in 0..n {
        let d = h.delta_vec(&sparse_unit(i));
        let mut left: SparseVec = Vec::new();
        let mut right: SparseVec = Vec::new();
        for ((a, b), c) in d.map.iter() {
            let sa = h.antipode_vec(&sparse_unit(*a));
            left_accumulate(h, &mut left, &sa, *b, c);
            let sb = h.antipode_vec(&sparse_unit(*b));
            right_accumulate(h, &mut right, *a, &sb, c);
        }
        let target = sparse_scale(&unit, &h.counit[i as usize]);
        if !sparse_eq(&left, &target) || !sparse_eq(&right, &target) {
            ant_witness = Some(format!("i={i}"));
            break;
        }
    }
    rep.push("antipode", ant_witness.is_none(), ant_witness);

    let s_ok = rank(&h.antipode) == h.dim;
    rep.push("antipode_invertible", s_ok, if s_ok { None } else { Some("rank(S) < dim".into()) });

    rep
}

fn left_accumulate(h: &HopfAlgebra, out: &mut SparseVec, a: &SparseVec, b: u32, coef: &CycScalar) {
    for (i, ci) in a.iter() {
        let c = ci.mul(coef);
        for (_, _, k, m) in h.mult.slice_ij(*i, b) {
            sparse_add_scaled(out, &[(*k, m.clone())], &c);
        }
    }
}

fn right_accumulate(h: &HopfAlgebra, out: &mut SparseVec, a: u32, b: &SparseVec, coef: &CycScalar) {
    for (j, cj) in b.iter() {
        let c = cj.mul(coef);
        for (_, _, k, m) in h.mult.slice_ij(a, *j) {
            sparse_add_scaled(out, &[(*k, m.clone())], &c);
        }
    }
}

/// Dual Hopf algebra on the dual basis: multiplication is the transpose
/// of Δ, comultiplication the transpose of multiplication, antipode the
/// transpose of S.
pub fn dual(h: &HopfAlgebra) -> HopfAlgebra {
    let mut mult = Vec::new();
    for (i, j, k, c) in h.comult.entries() {
        // (b_j^* b_k^*)(b_i) = Δ(b_i)[j][k]
        mult.push((*j, *k, *i, c.clone()));
    }
    let mut comult = Vec::new();
    for (i, j, k, c) in h.mult.entries() {
        // Δ*(b_k^*) hits b_i^* ⊗ b_j^* with the coefficient of b_k in b_i b_j
        comult.push((*k, *i, *j, c.clone()));
    }
    HopfAlgebra {
        dim: h.dim,
        conductor: h.conductor,
        basis_labels: h.basis_labels.iter().map(|l| format!("{l}*")).collect(),
        mult: StructTensor::from_entries(h.dim, mult),
        unit: h.counit.clone(),
        comult: StructTensor::from_entries(h.dim, comult),
        counit: h.unit.clone(),
        antipode: h.antipode.transpose(),
        metadata: Metadata::default(),
    }
}

/// Basis of the center {z : z b_i = b_i z for all i}.
pub fn center_basis(h: &HopfAlgebra) -> Subspace {
    let n = h.dim;
    let mut rows: Vec<Vec<CycScalar>> = Vec::new();
    for i in 0..n as u32 {
        let li = h.left_mult_mat(i);
        let ri = h.right_mult_mat(i);
        let comm = li.sub(&ri);
        for r in 0..n {
            if !comm.row(r).iter().all(|c| c.is_zero()) {
                rows.push(comm.row(r).to_vec());
            }
        }
    }
    if rows.is_empty() {
        // commutative algebra: everything is central
        let mut basis = Vec::new();
        for i in 0..n {
            let mut v = vec![CycScalar::from_int(0); n];
            v[i] = CycScalar::from_int(1);
            basis.push(v);
        }
        return Subspace::from_vectors(n, &basis);
    }
    let m = Mat::from_rows(rows);
    Subspace::from_vectors(n, &kernel_basis(&m))
}

/// Basis of {f in H* : f(b_i b_j) = f(b_j S²(b_i))}, in dual coordinates.
pub fn class_functions_basis(h: &HopfAlgebra) -> Subspace {
    let n = h.dim;
    let s2 = h.s_squared();
    let mut rows: Vec<Vec<CycScalar>> = Vec::new();
    for i in 0..n as u32 {
        // S²(b_i) as a sparse vector
        let s2i = sparse_from_dense(&s2.col_vec(i as usize));
        for j in 0..n as u32 {
            let mut row = vec![CycScalar::from_int(0); n];
            for (_, _, k, c) in h.mult.slice_ij(i, j) {
                row[*k as usize] = row[*k as usize].add(c);
            }
            for (l, cl) in s2i.iter() {
                for (_, _, k, c) in h.mult.slice_ij(j, *l) {
                    row[*k as usize] = row[*k as usize].sub(&cl.mul(c));
                }
            }
            if !row.iter().all(|c| c.is_zero()) {
                rows.push(row);
            }
        }
    }
    if rows.is_empty() {
        let mut basis = Vec::new();
        for i in 0..n {
            let mut v = vec![CycScalar::from_int(0); n];
            v[i] = CycScalar::from_int(1);
            basis.push(v);
        }
        return Subspace::from_vectors(n, &basis);
    }
    Subspace::from_vectors(n, &kernel_basis(&Mat::from_rows(rows)))
}

/// Smallest two-sided ideal containing the generators: iterate
/// span <- span + b_i·span + span·b_i to a fixpoint.
pub fn ideal_closure(h: &HopfAlgebra, generators: &[Vec<CycScalar>]) -> Subspace {
    let n = h.dim;
    let mut span = Subspace::from_vectors(n, generators);
    loop {
        let mut grew = false;
        let current: Vec<Vec<CycScalar>> = span.basis().to_vec();
        for w in current.iter() {
            let ws = sparse_from_dense(w);
            for i in 0..n as u32 {
                let left = h.mul_vec(&sparse_unit(i), &ws);
                if span.insert(&sparse_to_dense(&left, n)) {
                    grew = true;
                }
                let right = h.mul_vec(&ws, &sparse_unit(i));
                if span.insert(&sparse_to_dense(&right, n)) {
                    grew = true;
                }
            }
        }
        if !grew {
            return span;
        }
    }
}

/// Hopf-algebra quotient H/I by a Hopf ideal, with the projection matrix.
///
/// The quotient basis is the complement of I completed from its echelon
/// form (lowest-index pivots first), so structure constants are
/// reproducible across runs.
pub fn hopf_quotient(h: &HopfAlgebra, ideal: &Subspace) -> Result<(HopfAlgebra, Mat), HopfError> {
    let n = h.dim;
    assert_eq!(ideal.ambient_dim, n);
    let pi = ideal.quotient_projection();
    let reps = ideal.complement_indices();
    let q = reps.len();

    let fail = |condition: &str| HopfError::NotHopfIdeal { condition: condition.to_string() };

    // two-sided ideal
    for w in ideal.basis() {
        let ws = sparse_from_dense(w);
        for i in 0..n as u32 {
            let l = h.mul_vec(&sparse_unit(i), &ws);
            if !pi.apply(&sparse_to_dense(&l, n)).iter().all(|c| c.is_zero()) {
                return Err(fail("not a left ideal"));
            }
            let r = h.mul_vec(&ws, &sparse_unit(i));
            if !pi.apply(&sparse_to_dense(&r, n)).iter().all(|c| c.is_zero()) {
                return Err(fail("not a right ideal"));
            }
        }
    }
    // ε(I) = 0
    for w in ideal.basis() {
        if !h.counit_of(&sparse_from_dense(w)).is_zero() {
            return Err(fail("counit does not vanish on ideal"));
        }
    }
    // S(I) ⊆ I
    for w in ideal.basis() {
        let sw = h.antipode_vec(&sparse_from_dense(w));
        if !ideal.contains(&sparse_to_dense(&sw, n)) {
            return Err(fail("not antipode-stable"));
        }
    }
    // coideal: (π ⊗ π)Δ(I) = 0
    for w in ideal.basis() {
        let dw = h.delta_vec(&sparse_from_dense(w));
        if !project_t2(&dw, &pi).is_zero() {
            return Err(fail("not a coideal"));
        }
    }

    // induced structure on representatives
    let mut mult = Vec::new();
    for a in 0..q {
        for b in 0..q {
            let prod = h.mul_vec(&sparse_unit(reps[a] as u32), &sparse_unit(reps[b] as u32));
            let img = pi.apply(&sparse_to_dense(&prod, n));
            for (k, c) in img.iter().enumerate() {
                if !c.is_zero() {
                    mult.push((a as u32, b as u32, k as u32, c.clone()));
                }
            }
        }
    }
    let mut comult = Vec::new();
    for a in 0..q {
        let d = h.delta_vec(&sparse_unit(reps[a] as u32));
        for ((j, k), c) in project_t2_pairs(&d, &pi) {
            comult.push((a as u32, j, k, c));
        }
    }
    let unit_q = pi.apply(&h.unit);
    let counit_q: Vec<CycScalar> = reps.iter().map(|&r| h.counit[r].clone()).collect();
    let mut antipode_q = Mat::zero(q, q);
    for a in 0..q {
        let sa = h.antipode_vec(&sparse_unit(reps[a] as u32));
        let img = pi.apply(&sparse_to_dense(&sa, n));
        for (k, c) in img.iter().enumerate() {
            if !c.is_zero() {
                antipode_q.set(k, a, c.clone());
            }
        }
    }
    let out = HopfAlgebra {
        dim: q,
        conductor: h.conductor,
        basis_labels: reps.iter().map(|&r| h.basis_labels[r].clone()).collect(),
        mult: StructTensor::from_entries(q, mult),
        unit: unit_q,
        comult: StructTensor::from_entries(q, comult),
        counit: counit_q,
        antipode: antipode_q,
        metadata: Metadata::default(),
    };
    Ok((out, pi))
}

/// (π ⊗ π) of an element of H ⊗ H, as a Tens2 over the quotient.
pub fn project_t2(t: &Tens2, pi: &Mat) -> Tens2 {
    let mut out = Tens2::zero(pi.rows);
    for ((i, j), c) in t.map.iter() {
        for a in 0..pi.rows {
            let pa = pi.at(a, *i as usize);
            if pa.is_zero() {
                continue;
            }
            let ca = c.mul(pa);
            for b in 0..pi.rows {
                let pb = pi.at(b, *j as usize);
                if !pb.is_zero() {
                    out.insert_add((a as u32, b as u32), ca.mul(pb));
                }
            }
        }
    }
    out
}

fn project_t2_pairs(t: &Tens2, pi: &Mat) -> Vec<((u32, u32), CycScalar)> {
    project_t2(t, pi).map.into_iter().collect()
}

/// A finite-dimensional left H-module given by the action of each basis element.
#[derive(Clone, Debug)]
pub struct HModule {
    pub dim: usize,
    pub rho: Vec<Mat>,
}

impl HModule {
    /// The one-dimensional module through the counit.
    pub fn trivial(h: &HopfAlgebra) -> HModule {
        HModule {
            dim: 1,
            rho: (0..h.dim).map(|i| Mat::from_fn(1, 1, |_, _| h.counit[i].clone())).collect(),
        }
    }

    /// One-dimensional module from an algebra character given by its values
    /// on basis elements.
    pub fn from_character(values: Vec<CycScalar>) -> HModule {
        HModule {
            dim: 1,
            rho: values.into_iter().map(|v| Mat::from_fn(1, 1, |_, _| v.clone())).collect(),
        }
    }

    /// The left regular module.
    pub fn regular(h: &HopfAlgebra) -> HModule {
        HModule { dim: h.dim, rho: (0..h.dim as u32).map(|i| h.left_mult_mat(i)).collect() }
    }

    /// Action of an arbitrary element.
    pub fn act(&self, v: &SparseVec) -> Mat {
        let mut m = Mat::zero(self.dim, self.dim);
        for (i, c) in v.iter() {
            m = m.add(&self.rho[*i as usize].scale(c));
        }
        m
    }

    /// Exact check that rho is an algebra representation with rho(1) = id.
    pub fn is_representation(&self, h: &HopfAlgebra) -> bool {
        if self.rho.len() != h.dim {
            return false;
        }
        if self.act(&h.unit_sparse()) != Mat::identity(self.dim) {
            return false;
        }
        for i in 0..h.dim as u32 {
            for j in 0..h.dim as u32 {
                let lhs = self.rho[i as usize].matmul(&self.rho[j as usize]);
                let mut rhs = Mat::zero(self.dim, self.dim);
                for (_, _, k, c) in h.mult.slice_ij(i, j) {
                    rhs = rhs.add(&self.rho[*k as usize].scale(c));
                }
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    /// Tensor product module via Δ.
    pub fn tensor(&self, other: &HModule, h: &HopfAlgebra) -> HModule {
        let mut rho = Vec::with_capacity(h.dim);
        for i in 0..h.dim as u32 {
            let mut m = Mat::zero(self.dim * other.dim, self.dim * other.dim);
            for (_, j, k, c) in h.comult.slice_i(i) {
                m = m.add(&self.rho[*j as usize].kron(&other.rho[*k as usize]).scale(c));
            }
            rho.push(m);
        }
        HModule { dim: self.dim * other.dim, rho }
    }
}

/// Label-matched structure-constant comparison (same dimension and the
/// identity correspondence of bases).
pub fn same_structure_constants(a: &HopfAlgebra, b: &HopfAlgebra) -> bool {
    if a.dim != b.dim {
        return false;
    }
    let eq_t = |x: &StructTensor, y: &StructTensor| {
        let xe = x.entries();
        let ye = y.entries();
        xe.len() == ye.len()
            && xe
                .iter()
                .zip(ye.iter())
                .all(|(p, q)| (p.0, p.1, p.2) == (q.0, q.1, q.2) && p.3 == q.3)
    };
    eq_t(&a.mult, &b.mult)
        && eq_t(&a.comult, &b.comult)
        && a.unit == b.unit
        && a.counit == b.counit
        && a.antipode == b.antipode
}

