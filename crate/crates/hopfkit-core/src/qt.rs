//! Everything derived from an R-matrix on a Hopf algebra: the
//! quasitriangularity axioms, the monodromy Q = R21·R, the Drinfeld map
//! and factorizability, class-function restriction Omega and
//! weak-factorizability, the transparency ideal and Mueger triviality,
//! the central subspace Xi bounding rank(Omega), and the three-way
//! equivalence crosscheck.

use serde::Serialize;
use thiserror::Error;

use crate::hopf::{
    center_basis, class_functions_basis, ideal_closure, HModule, HopfAlgebra, Report, Tens2, Tens3,
};
use crate::linalg::{self, rank, sparse_from_dense, Mat, Subspace};
use crate::scalar::CycScalar;

#[derive(Debug, Error)]
pub enum QtError {
    #[error("image of Omega is not central (convention inconsistency)")]
    OmegaImageNotCentral,
    #[error("{0} is not an algebra representation")]
    NotARepresentation(String),
    #[error("module is not transparent")]
    NotTransparent,
}

/// Which slot of the monodromy the class function is applied to.
/// The default is pinned by requiring the image of Omega to be central
/// and the equivalence crosscheck to hold across the whole zoo; the
/// alternate variant is kept for the selection suite. With class
/// functions cut out by f(ba) = f(a S²(b)), the right slot is the one
/// that lands in the center on noncommutative examples (the left slot
/// fails already on the double of the 9-dimensional Taft algebra).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OmegaVariant {
    /// f ↦ (f ⊗ id)(Q)
    LeftSlot,
    /// f ↦ (id ⊗ f)(Q)
    RightSlot,
}

pub const PINNED_OMEGA_VARIANT: OmegaVariant = OmegaVariant::RightSlot;

/// A Hopf algebra together with an R-matrix, R = Σ R[i][j] b_i ⊗ b_j.
#[derive(Clone, Debug)]
pub struct QTStructure {
    pub h: HopfAlgebra,
    pub r: Mat,
    /// Cached inverse of R in H ⊗ H, when one could be certified.
    pub r_inv: Option<Mat>,
}

impl QTStructure {
    pub fn new(h: HopfAlgebra, r: Mat) -> QTStructure {
        assert_eq!((r.rows, r.cols), (h.dim, h.dim));
        let mut qt = QTStructure { h, r, r_inv: None };
        qt.r_inv = qt.compute_r_inverse();
        qt
    }

    pub fn r_t2(&self) -> Tens2 {
        Tens2::from_mat(&self.r)
    }

    pub fn unit_t2(&self) -> Tens2 {
        let unit = self.h.unit_sparse();
        let mut out = Tens2::zero(self.h.dim);
        for (a, ca) in unit.iter() {
            for (b, cb) in unit.iter() {
                out.insert_add((*a, *b), ca.mul(cb));
            }
        }
        out
    }

    /// (S ⊗ id) applied to an element of H ⊗ H.
    fn antipode_left_t2(&self, t: &Tens2) -> Tens2 {
        let mut out = Tens2::zero(self.h.dim);
        for ((i, j), c) in t.map.iter() {
            for k in 0..self.h.dim {
                let s = self.h.antipode.at(k, *i as usize);
                if !s.is_zero() {
                    out.insert_add((k as u32, *j), c.mul(s));
                }
            }
        }
        out
    }

    fn compute_r_inverse(&self) -> Option<Mat> {
        let r = self.r_t2();
        let unit = self.unit_t2();
        // For a genuine quasitriangular structure (S ⊗ id)R is the inverse.
        let cand = self.antipode_left_t2(&r);
        if self.h.mul_t2(&cand, &r) == unit && self.h.mul_t2(&r, &cand) == unit {
            return Some(cand.to_mat());
        }
        // Small cases: solve for a two-sided inverse directly.
        let n = self.h.dim;
        if n <= 32 {
            let n2 = n * n;
            let mut lm = Mat::zero(n2, n2);
            for ((i, j), c) in r.map.iter() {
                // left multiplication by R on H ⊗ H
                for a in 0..n as u32 {
                    for b in 0..n as u32 {
                        for (_, _, k1, m1) in self.h.mult.slice_ij(*i, a) {
                            for (_, _, k2, m2) in self.h.mult.slice_ij(*j, b) {
                                let row = (*k1 as usize) * n + *k2 as usize;
                                let col = (a as usize) * n + b as usize;
                                let v = lm.at(row, col).add(&c.mul(m1).mul(m2));
                                lm.set(row, col, v);
                            }
                        }
                    }
                }
            }
            let mut rhs = vec![CycScalar::from_int(0); n2];
            for ((a, b), c) in unit.map.iter() {
                rhs[(*a as usize) * n + *b as usize] = c.clone();
            }
            if let Some(x) = linalg::solve(&lm, &rhs) {
                let xm = Mat::from_fn(n, n, |i, j| x[i * n + j].clone());
                let xt = Tens2::from_mat(&xm);
                if self.h.mul_t2(&xt, &r) == unit && self.h.mul_t2(&r, &xt) == unit {
                    return Some(xm);
                }
            }
        }
        None
    }
}

/// Quasitriangularity axioms: R invertible, Δcop intertwining, and the
/// two coproduct identities; the counit consequences are checked as well.
pub fn verify_qt(qt: &QTStructure) -> Report {
    let h = &qt.h;
    let mut rep = Report::new();
    let r = qt.r_t2();

    rep.push(
        "r_invertible",
        qt.r_inv.is_some(),
        if qt.r_inv.is_some() { None } else { Some("no two-sided inverse found for R".into()) },
    );

    let one = h.unit_sparse();
    let eps_left_ok = linalg::sparse_eq(&h.counit_left_t2(&r), &one);
    let eps_right_ok = linalg::sparse_eq(&h.counit_right_t2(&r), &one);
    rep.push("counit_left_leg", eps_left_ok, (!eps_left_ok).then(|| "(ε⊗id)R ≠ 1".into()));
    rep.push("counit_right_leg", eps_right_ok, (!eps_right_ok).then(|| "(id⊗ε)R ≠ 1".into()));

    // Δcop(h) R = R Δ(h) for all basis h
    let mut cop_witness = None;
    for i in 0..h.dim as u32 {
        let d = h.delta_vec(&linalg::sparse_unit(i));
        let lhs = h.mul_t2(&d.flip(), &r);
        let rhs = h.mul_t2(&r, &d);
        if lhs != rhs {
            cop_witness = Some(format!("basis element {i}"));
            break;
        }
    }
    rep.push("delta_cop_intertwine", cop_witness.is_none(), cop_witness);

    // (Δ ⊗ id)R = R13 R23
    let r13 = h.embed_t2(&r, 0, 2);
    let r23 = h.embed_t2(&r, 1, 2);
    let r12 = h.embed_t2(&r, 0, 1);
    let lhs = h.delta_left_t2(&r);
    let rhs = h.mul_t3(&r13, &r23);
    let w = hex_witness(&lhs, &rhs);
    rep.push("coproduct_left", w.is_none(), w);

    // (id ⊗ Δ)R = R13 R12
    let lhs = h.delta_right_t2(&r);
    let rhs = h.mul_t3(&r13, &r12);
    let w = hex_witness(&lhs, &rhs);
    rep.push("coproduct_right", w.is_none(), w);

    rep
}

fn hex_witness(lhs: &Tens3, rhs: &Tens3) -> Option<String> {
    let diff = lhs.sub(rhs);
    diff.map.keys().next().map(|k| format!("first differing coefficient at {k:?}"))
}

/// The monodromy Q = R21 · R.
pub fn monodromy(qt: &QTStructure) -> Tens2 {
    let r = qt.r_t2();
    qt.h.mul_t2(&r.flip(), &r)
}

/// Matrix of the Drinfeld map f ↦ (f ⊗ id)(Q) from dual to primal
/// coordinates: the transpose of Q's coefficient matrix.
pub fn drinfeld_map_matrix(qt: &QTStructure) -> Mat {
    monodromy(qt).to_mat().transpose()
}

pub fn is_factorizable(qt: &QTStructure) -> bool {
    rank(&drinfeld_map_matrix(qt)) == qt.h.dim
}

/// Omega restricted to class functions, expressed in the computed bases
/// of CF(H) and Z(H).
pub struct OmegaData {
    pub cf: Subspace,
    pub ce: Subspace,
    pub matrix: Mat,
    pub rank: usize,
}

pub fn omega_data_with(qt: &QTStructure, variant: OmegaVariant) -> Result<OmegaData, QtError> {
    let h = &qt.h;
    let n = h.dim;
    let q = monodromy(qt);
    let cf = class_functions_basis(h);
    let ce = center_basis(h);
    let mut cols: Vec<Vec<CycScalar>> = Vec::with_capacity(cf.dim());
    for f in cf.basis() {
        let mut z = vec![CycScalar::from_int(0); n];
        for ((i, j), c) in q.map.iter() {
            match variant {
                OmegaVariant::LeftSlot => {
                    // (f ⊗ id)Q
                    if !f[*i as usize].is_zero() {
                        z[*j as usize] = z[*j as usize].add(&f[*i as usize].mul(c));
                    }
                }
                OmegaVariant::RightSlot => {
                    if !f[*j as usize].is_zero() {
                        z[*i as usize] = z[*i as usize].add(&f[*j as usize].mul(c));
                    }
                }
            }
        }
        if !ce.contains(&z) {
            return Err(QtError::OmegaImageNotCentral);
        }
        cols.push(z);
    }
    // express each image in the CE basis
    let d = ce.dim();
    let b = Mat::from_fn(n, d, |r, c| ce.basis()[c][r].clone());
    let mut matrix = Mat::zero(d, cf.dim());
    for (cidx, z) in cols.iter().enumerate() {
        let x = linalg::solve(&b, z).expect("image verified central");
        for (ridx, v) in x.iter().enumerate() {
            matrix.set(ridx, cidx, v.clone());
        }
    }
    let rk = rank(&matrix);
    Ok(OmegaData { cf, ce, matrix, rank: rk })
}

pub fn omega_data(qt: &QTStructure) -> Result<OmegaData, QtError> {
    omega_data_with(qt, PINNED_OMEGA_VARIANT)
}

pub fn omega_matrix(qt: &QTStructure) -> Result<Mat, QtError> {
    Ok(omega_data(qt)?.matrix)
}

pub fn omega_rank(qt: &QTStructure) -> Result<usize, QtError> {
    Ok(omega_data(qt)?.rank)
}

pub fn is_weakly_factorizable(qt: &QTStructure) -> Result<bool, QtError> {
    let d = omega_data(qt)?;
    Ok(d.cf.dim() == d.ce.dim() && d.rank == d.cf.dim())
}

/// The two-sided ideal generated by the components of Q − 1 ⊗ 1.
///
/// A module V is transparent (trivial double braiding against every
/// module) iff (id ⊗ ρ_V)(Q) = 1 ⊗ id_V, i.e. iff ρ_V kills every
/// component of Q − 1 ⊗ 1, hence iff I·V = 0. Transparent modules are
/// therefore exactly the modules of H/I, and the transparent part is
/// trivial (only direct sums of the unit object) iff H/I is the ground
/// field: its regular module would otherwise be a transparent module of
/// dimension > 1. That is the codim(I) = 1 criterion behind
/// [`is_muger_trivial`]; the equivalence crosscheck validates it
/// against the two rank-based criteria rather than trusting it alone.
pub fn transparency_ideal(qt: &QTStructure) -> Subspace {
    let h = &qt.h;
    let n = h.dim;
    let qhat = monodromy(qt).sub(&qt.unit_t2());
    let mut gens: Vec<Vec<CycScalar>> = Vec::new();
    for i in 0..n as u32 {
        let mut g = vec![CycScalar::from_int(0); n];
        let mut nonzero = false;
        for ((a, j), c) in qhat.map.iter() {
            if *a == i {
                g[*j as usize] = c.clone();
                nonzero = true;
            }
        }
        if nonzero {
            gens.push(g);
        }
    }
    ideal_closure(h, &gens)
}

pub fn is_muger_trivial(qt: &QTStructure) -> bool {
    transparency_ideal(qt).dim() == qt.h.dim - 1
}

/// V is transparent iff (id ⊗ ρ)(Q) = 1 ⊗ id_V exactly.
pub fn is_transparent_module(qt: &QTStructure, module: &HModule) -> Result<bool, QtError> {
    if !module.is_representation(&qt.h) {
        return Err(QtError::NotARepresentation("module".into()));
    }
    let q = monodromy(qt);
    let n = qt.h.dim;
    for i in 0..n as u32 {
        let mut t = Mat::zero(module.dim, module.dim);
        for ((a, j), c) in q.map.iter() {
            if *a == i {
                t = t.add(&module.rho[*j as usize].scale(c));
            }
        }
        let expected = Mat::identity(module.dim).scale(&qt.h.unit[i as usize]);
        if t != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Xi = {z in Z(H) : Δ(z) − z ⊗ 1 ∈ H ⊗ I}, I the transparency ideal.
pub fn xi_basis(qt: &QTStructure) -> Subspace {
    let h = &qt.h;
    let n = h.dim;
    let ideal = transparency_ideal(qt);
    let pi = ideal.quotient_projection();
    let codim = pi.rows;
    let ce = center_basis(h);
    if ce.dim() == 0 {
        return Subspace::zero(n);
    }
    // column per center basis vector: (id ⊗ π)(Δz − z⊗1) flattened
    let mut m = Mat::zero(n * codim, ce.dim());
    for (cidx, z) in ce.basis().iter().enumerate() {
        let zs = sparse_from_dense(z);
        let mut t = h.delta_vec(&zs);
        let one = h.unit_sparse();
        for (i, ci) in zs.iter() {
            for (u, cu) in one.iter() {
                t.insert_add((*i, *u), ci.mul(cu).neg());
            }
        }
        for ((i, j), c) in t.map.iter() {
            for rr in 0..codim {
                let p = pi.at(rr, *j as usize);
                if !p.is_zero() {
                    let row = (*i as usize) * codim + rr;
                    let v = m.at(row, cidx).add(&c.mul(p));
                    m.set(row, cidx, v);
                }
            }
        }
    }
    let mut vectors = Vec::new();
    for k in linalg::kernel_basis(&m) {
        let mut v = vec![CycScalar::from_int(0); n];
        for (cidx, coef) in k.iter().enumerate() {
            if !coef.is_zero() {
                for t in 0..n {
                    if !ce.basis()[cidx][t].is_zero() {
                        v[t] = v[t].add(&coef.mul(&ce.basis()[cidx][t]));
                    }
                }
            }
        }
        vectors.push(v);
    }
    Subspace::from_vectors(n, &vectors)
}

#[derive(Clone, Debug, Serialize)]
pub struct RankBoundReport {
    pub omega_rank: usize,
    pub dim_xi: usize,
    pub bound_holds: bool,
    pub equality: bool,
}

pub fn check_rank_bound(qt: &QTStructure) -> Result<RankBoundReport, QtError> {
    let rk = omega_rank(qt)?;
    let xi = xi_basis(qt).dim();
    Ok(RankBoundReport { omega_rank: rk, dim_xi: xi, bound_holds: rk <= xi, equality: rk == xi })
}

/// The three independently computed non-degeneracy criteria and their
/// agreement. `consistent` must hold for every genuine example; a false
/// value is a test failure upstream, never silently accepted.
#[derive(Clone, Debug, Serialize)]
pub struct CrosscheckReport {
    pub factorizable: bool,
    pub weakly_factorizable: bool,
    pub muger_trivial: bool,
    pub omega_rank: usize,
    pub dim_cf: usize,
    pub dim_ce: usize,
    pub dim_xi: usize,
    pub transparency_codim: usize,
    pub consistent: bool,
}

pub fn equivalence_crosscheck(qt: &QTStructure) -> Result<CrosscheckReport, QtError> {
    let fact = is_factorizable(qt);
    let od = omega_data(qt)?;
    let weak = od.cf.dim() == od.ce.dim() && od.rank == od.cf.dim();
    let ideal = transparency_ideal(qt);
    let muger = ideal.dim() == qt.h.dim - 1;
    let xi = xi_basis(qt);
    Ok(CrosscheckReport {
        factorizable: fact,
        weakly_factorizable: weak,
        muger_trivial: muger,
        omega_rank: od.rank,
        dim_cf: od.cf.dim(),
        dim_ce: od.ce.dim(),
        dim_xi: xi.dim(),
        transparency_codim: qt.h.dim - ideal.dim(),
        consistent: fact == weak && weak == muger,
    })
}
