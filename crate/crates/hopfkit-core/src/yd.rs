//! Braided Hopf algebras inside Rep(H, R) and Yetter-Drinfeld modules
//! over them: the braiding of the base category, the braided axiom
//! checkers, the YD braiding Sigma, tensor products, the adjoint and
//! coadjoint modules P and Q, and Mueger-center membership.

use thiserror::Error;

use crate::hopf::{HModule, HopfAlgebra, Report, StructTensor};
use crate::linalg::{self, flip_mat, inverse, kernel_basis, rank, Mat, Subspace};
use crate::qt::{is_transparent_module, QTStructure};
use crate::scalar::CycScalar;

#[derive(Debug, Error)]
pub enum YdError {
    #[error("{0} is not an algebra representation")]
    NotARepresentation(String),
    #[error("module is not transparent, trivial embedding undefined")]
    NotTransparent,
    #[error("Yetter-Drinfeld braiding is singular (internal error)")]
    SingularBraiding,
    #[error("q is not a primitive root of unity of the required order")]
    NotPrimitiveRoot,
    #[error("braided Hopf axiom failed: {0}")]
    BraidedAxiomFailure(String),
}

/// The braiding of Rep(H, R): sigma(x ⊗ y) = Σ (R2 · y) ⊗ (R1 · x),
/// as a matrix X ⊗ Y → Y ⊗ X.
pub fn braiding_of_c(qt: &QTStructure, x: &HModule, y: &HModule) -> Result<Mat, YdError> {
    if !x.is_representation(&qt.h) {
        return Err(YdError::NotARepresentation("left module".into()));
    }
    if !y.is_representation(&qt.h) {
        return Err(YdError::NotARepresentation("right module".into()));
    }
    Ok(braiding_unchecked(qt, x, y))
}

fn braiding_unchecked(qt: &QTStructure, x: &HModule, y: &HModule) -> Mat {
    let mut t = Mat::zero(x.dim * y.dim, x.dim * y.dim);
    for i in 0..qt.h.dim {
        for j in 0..qt.h.dim {
            let c = qt.r.at(i, j);
            if !c.is_zero() {
                t = t.add(&x.rho[i].kron(&y.rho[j]).scale(c));
            }
        }
    }
    flip_mat(x.dim, y.dim).matmul(&t)
}

/// A Hopf algebra in the braided category Rep(H, R).
///
/// The carrier is an H-module; all structure tensors follow the same
/// conventions as [`HopfAlgebra`].
#[derive(Clone, Debug)]
pub struct BraidedHopfAlgebra {
    pub carrier: HModule,
    pub mult: StructTensor,
    pub unit: Vec<CycScalar>,
    pub comult: StructTensor,
    pub counit: Vec<CycScalar>,
    pub antipode: Mat,
}

impl BraidedHopfAlgebra {
    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    /// Multiplication as a matrix B ⊗ B → B.
    pub fn mult_mat(&self) -> Mat {
        let nb = self.dim();
        let mut m = Mat::zero(nb, nb * nb);
        for (i, j, k, c) in self.mult.entries() {
            m.set(*k as usize, (*i as usize) * nb + *j as usize, c.clone());
        }
        m
    }

    /// Comultiplication as a matrix B → B ⊗ B.
    pub fn comult_mat(&self) -> Mat {
        let nb = self.dim();
        let mut m = Mat::zero(nb * nb, nb);
        for (i, j, k, c) in self.comult.entries() {
            m.set((*j as usize) * nb + *k as usize, *i as usize, c.clone());
        }
        m
    }

    pub fn unit_mat(&self) -> Mat {
        Mat::from_fn(self.dim(), 1, |r, _| self.unit[r].clone())
    }

    pub fn counit_mat(&self) -> Mat {
        Mat::from_fn(1, self.dim(), |_, c| self.counit[c].clone())
    }

    /// Self-braiding sigma_{B,B} of the carrier.
    pub fn self_braiding(&self, qt: &QTStructure) -> Mat {
        braiding_unchecked(qt, &self.carrier, &self.carrier)
    }
}

/// Solve m ∘ (S ⊗ id) ∘ Δ = u ∘ ε for S by exact linear algebra.
/// Works verbatim for braided Hopf algebras: the defining convolution
/// identity contains no braiding.
pub fn solve_antipode(
    dim: usize,
    mult: &StructTensor,
    comult: &StructTensor,
    unit: &[CycScalar],
    counit: &[CycScalar],
) -> Option<Mat> {
    let n2 = dim * dim;
    // unknowns S[s][j] (row-major); equations indexed by (input a, output k)
    let mut m = Mat::zero(n2, n2);
    let mut rhs = vec![CycScalar::from_int(0); n2];
    for a in 0..dim as u32 {
        for (_, j, l, cd) in comult.slice_i(a) {
            for s in 0..dim as u32 {
                for (_, _, k, cm) in mult.slice_ij(s, *l) {
                    let row = a as usize * dim + *k as usize;
                    let col = s as usize * dim + *j as usize;
                    let v = m.at(row, col).add(&cd.mul(cm));
                    m.set(row, col, v);
                }
            }
        }
        for k in 0..dim {
            rhs[a as usize * dim + k] = counit[a as usize].mul(&unit[k]);
        }
    }
    let x = linalg::solve(&m, &rhs)?;
    Some(Mat::from_fn(dim, dim, |s, j| x[s * dim + j].clone()))
}

/// Full braided-Hopf-algebra axiom suite in Rep(H, R).
pub fn verify_braided_hopf(b: &BraidedHopfAlgebra, qt: &QTStructure) -> Report {
    let mut rep = Report::new();
    let nb = b.dim();
    let nh = qt.h.dim;
    let id_b = Mat::identity(nb);

    let carrier_ok = b.carrier.is_representation(&qt.h);
    rep.push("carrier_representation", carrier_ok, (!carrier_ok).then(|| "rho is not a representation".into()));
    if !carrier_ok {
        return rep;
    }

    let m = b.mult_mat();
    let d = b.comult_mat();
    let u = b.unit_mat();
    let e = b.counit_mat();
    let sigma = b.self_braiding(qt);

    // algebra axioms
    let assoc = m.matmul(&m.kron(&id_b)) == m.matmul(&id_b.kron(&m));
    rep.push("associativity", assoc, (!assoc).then(|| "m(m⊗id) ≠ m(id⊗m)".into()));
    let unit_ok = m.matmul(&u.kron(&id_b)) == id_b && m.matmul(&id_b.kron(&u)) == id_b;
    rep.push("unit", unit_ok, (!unit_ok).then(|| "unit law fails".into()));

    // coalgebra axioms
    let coassoc = d.kron(&id_b).matmul(&d) == id_b.kron(&d).matmul(&d);
    rep.push("coassociativity", coassoc, (!coassoc).then(|| "(Δ⊗id)Δ ≠ (id⊗Δ)Δ".into()));
    let counit_ok = e.kron(&id_b).matmul(&d) == id_b && id_b.kron(&e).matmul(&d) == id_b;
    rep.push("counit", counit_ok, (!counit_ok).then(|| "counit law fails".into()));

    // H-linearity of every structure map
    let carrier2 = b.carrier.tensor(&b.carrier, &qt.h);
    let mut lin_witness = None;
    for i in 0..nh {
        let rho_b = &b.carrier.rho[i];
        let rho_bb = &carrier2.rho[i];
        if rho_b.matmul(&m) != m.matmul(rho_bb) {
            lin_witness = Some(format!("m not H-linear at basis {i}"));
            break;
        }
        if rho_bb.matmul(&d) != d.matmul(rho_b) {
            lin_witness = Some(format!("Δ not H-linear at basis {i}"));
            break;
        }
        let eps_i = &qt.h.counit[i];
        if rho_b.matmul(&u) != u.scale(eps_i) {
            lin_witness = Some(format!("u not H-linear at basis {i}"));
            break;
        }
        if e.matmul(rho_b) != e.scale(eps_i) {
            lin_witness = Some(format!("ε not H-linear at basis {i}"));
            break;
        }
        if rho_b.matmul(&b.antipode) != b.antipode.matmul(rho_b) {
            lin_witness = Some(format!("S not H-linear at basis {i}"));
            break;
        }
    }
    rep.push("h_linearity", lin_witness.is_none(), lin_witness);

    // braided bialgebra axiom: Δm = (m⊗m)(id⊗σ⊗id)(Δ⊗Δ)
    let lhs = d.matmul(&m);
    let rhs = m
        .kron(&m)
        .matmul(&id_b.kron(&sigma).kron(&id_b))
        .matmul(&d.kron(&d));
    let bb = lhs == rhs;
    rep.push("braided_bialgebra", bb, (!bb).then(|| "Δ∘m ≠ (m⊗m)(id⊗σ⊗id)(Δ⊗Δ)".into()));

    let du = d.matmul(&u) == u.kron(&u);
    rep.push("comult_unit", du, (!du).then(|| "Δ(1) ≠ 1⊗1".into()));
    let em = e.matmul(&m) == e.kron(&e);
    rep.push("counit_mult", em, (!em).then(|| "ε∘m ≠ ε⊗ε".into()));
    let eu = e.matmul(&u) == Mat::identity(1);
    rep.push("counit_unit", eu, (!eu).then(|| "ε(1) ≠ 1".into()));

    // antipode convolution identities
    let target = u.matmul(&e);
    let s_left = m.matmul(&b.antipode.kron(&id_b)).matmul(&d) == target;
    let s_right = m.matmul(&id_b.kron(&b.antipode)).matmul(&d) == target;
    rep.push("antipode", s_left && s_right, (!(s_left && s_right)).then(|| "convolution identity fails".into()));
    let s_inv = rank(&b.antipode) == nb;
    rep.push("antipode_invertible", s_inv, (!s_inv).then(|| "S singular".into()));

    rep
}

/// The truncated line k[x]/(x^N) with primitive x, as a braided Hopf
/// algebra over the cyclic group with chi(g, g) = zeta_N. Returns the
/// base quasitriangular structure together with B.
pub fn nichols_truncated_line(n: u32) -> Result<(QTStructure, BraidedHopfAlgebra), YdError> {
    nichols_truncated_line_with(n, 1)
}

/// Same, with chi(g, g) = zeta_N^qexp; qexp must be prime to N.
pub fn nichols_truncated_line_with(n: u32, qexp: i64) -> Result<(QTStructure, BraidedHopfAlgebra), YdError> {
    if n < 2 {
        return Err(YdError::NotPrimitiveRoot);
    }
    let q = CycScalar::root_of_unity(n, qexp);
    for k in 1..n {
        if q.pow(k).is_one() {
            return Err(YdError::NotPrimitiveRoot);
        }
    }
    let qt = crate::zoo::group_algebra_with_bicharacter(&[n], &[vec![qexp]], n)
        .map_err(|e| YdError::BraidedAxiomFailure(e.to_string()))?;
    let nb = n as usize;
    // carrier: x^a has group degree g^a, so g^t acts by zeta^(t a)
    let rho: Vec<Mat> = (0..nb)
        .map(|t| {
            Mat::from_fn(nb, nb, |r, c| {
                if r == c {
                    CycScalar::root_of_unity(n, (t as i64) * (r as i64))
                } else {
                    CycScalar::zero(n)
                }
            })
        })
        .collect();
    let carrier = HModule { dim: nb, rho };
    let mut mult = Vec::new();
    for a in 0..nb {
        for c in 0..nb {
            if a + c < nb {
                mult.push((a as u32, c as u32, (a + c) as u32, CycScalar::one(n)));
            }
        }
    }
    let mult = StructTensor::from_entries(nb, mult);
    // comultiplication: braided powers of Δx = x ⊗ 1 + 1 ⊗ x inside
    // B ⊗ B with (x^a1 ⊗ x^a2)(x^b1 ⊗ x^b2) = q^(a2 b1) x^(a1+b1) ⊗ x^(a2+b2)
    let qq = q.clone();
    let t2_mul = |u: &Vec<Vec<CycScalar>>, v: &Vec<Vec<CycScalar>>| -> Vec<Vec<CycScalar>> {
        let mut out = vec![vec![CycScalar::zero(n); nb]; nb];
        for a1 in 0..nb {
            for a2 in 0..nb {
                if u[a1][a2].is_zero() {
                    continue;
                }
                for b1 in 0..nb {
                    for b2 in 0..nb {
                        if v[b1][b2].is_zero() || a1 + b1 >= nb || a2 + b2 >= nb {
                            continue;
                        }
                        let coef = u[a1][a2]
                            .mul(&v[b1][b2])
                            .mul(&qq.pow((a2 * b1) as u32));
                        out[a1 + b1][a2 + b2] = out[a1 + b1][a2 + b2].add(&coef);
                    }
                }
            }
        }
        out
    };
    let mut dx = vec![vec![CycScalar::zero(n); nb]; nb];
    dx[1][0] = CycScalar::one(n);
    dx[0][1] = CycScalar::one(n);
    let mut comult = Vec::new();
    let mut cur = vec![vec![CycScalar::zero(n); nb]; nb];
    cur[0][0] = CycScalar::one(n);
    for a in 0..nb {
        for j in 0..nb {
            for k in 0..nb {
                if !cur[j][k].is_zero() {
                    comult.push((a as u32, j as u32, k as u32, cur[j][k].clone()));
                }
            }
        }
        if a + 1 < nb {
            cur = t2_mul(&cur, &dx);
        }
    }
    let comult = StructTensor::from_entries(nb, comult);
    let mut counit = vec![CycScalar::zero(n); nb];
    counit[0] = CycScalar::one(n);
    let mut unit = vec![CycScalar::zero(n); nb];
    unit[0] = CycScalar::one(n);
    let antipode = solve_antipode(nb, &mult, &comult, &unit, &counit)
        .ok_or_else(|| YdError::BraidedAxiomFailure("antipode equation has no solution".into()))?;
    Ok((
        qt,
        BraidedHopfAlgebra { carrier, mult, unit, comult, counit, antipode },
    ))
}

/// A Yetter-Drinfeld module over B in Rep(H, R): a right B-module and
/// right B-comodule in the category, subject to the compatibility
/// condition checked by [`verify_yd_module`].
#[derive(Clone, Debug)]
pub struct YDModule {
    pub carrier: HModule,
    /// act: M ⊗ B → M
    pub act: Mat,
    /// coact: M → M ⊗ B
    pub coact: Mat,
}

impl YDModule {
    pub fn dim(&self) -> usize {
        self.carrier.dim
    }
}

/// The trivial one-dimensional YD module (trivial action and coaction
/// on the trivial H-module).
pub fn trivial_yd(b: &BraidedHopfAlgebra, qt: &QTStructure) -> YDModule {
    let v = HModule::trivial(&qt.h);
    YDModule {
        act: Mat::identity(1).kron(&b.counit_mat()),
        coact: Mat::identity(1).kron(&b.unit_mat()),
        carrier: v,
    }
}

/// Yetter-Drinfeld condition and all module/comodule/linearity axioms.
pub fn verify_yd_module(m: &YDModule, b: &BraidedHopfAlgebra, qt: &QTStructure) -> Report {
    let mut rep = Report::new();
    let nb = b.dim();
    let md = m.dim();
    let id_m = Mat::identity(md);
    let id_b = Mat::identity(nb);

    let carrier_ok = m.carrier.is_representation(&qt.h);
    rep.push("carrier_representation", carrier_ok, (!carrier_ok).then(|| "rho not a representation".into()));
    if !carrier_ok {
        return rep;
    }

    let mm = b.mult_mat();
    let dd = b.comult_mat();
    let uu = b.unit_mat();
    let ee = b.counit_mat();

    // right module axioms
    let assoc = m.act.matmul(&m.act.kron(&id_b)) == m.act.matmul(&id_m.kron(&mm));
    rep.push("module_associativity", assoc, (!assoc).then(|| "act(act⊗id) ≠ act(id⊗m)".into()));
    let unit_ok = m.act.matmul(&id_m.kron(&uu)) == id_m;
    rep.push("module_unit", unit_ok, (!unit_ok).then(|| "act(id⊗u) ≠ id".into()));

    // right comodule axioms
    let coassoc = m.coact.kron(&id_b).matmul(&m.coact) == id_m.kron(&dd).matmul(&m.coact);
    rep.push("comodule_coassociativity", coassoc, (!coassoc).then(|| "(δ⊗id)δ ≠ (id⊗Δ)δ".into()));
    let counit_ok = id_m.kron(&ee).matmul(&m.coact) == id_m;
    rep.push("comodule_counit", counit_ok, (!counit_ok).then(|| "(id⊗ε)δ ≠ id".into()));

    // H-linearity of act and coact
    let mb = m.carrier.tensor(&b.carrier, &qt.h);
    let mut lin_witness = None;
    for i in 0..qt.h.dim {
        if m.carrier.rho[i].matmul(&m.act) != m.act.matmul(&mb.rho[i]) {
            lin_witness = Some(format!("act not H-linear at basis {i}"));
            break;
        }
        if mb.rho[i].matmul(&m.coact) != m.coact.matmul(&m.carrier.rho[i]) {
            lin_witness = Some(format!("coact not H-linear at basis {i}"));
            break;
        }
    }
    rep.push("h_linearity", lin_witness.is_none(), lin_witness);

    // Yetter-Drinfeld compatibility
    let sigma_mb = braiding_unchecked(qt, &m.carrier, &b.carrier);
    let sigma_bm = braiding_unchecked(qt, &b.carrier, &m.carrier);
    let sigma_bb = b.self_braiding(qt);
    let lhs = id_m
        .kron(&mm)
        .matmul(&sigma_bm.kron(&id_b))
        .matmul(&id_b.kron(&m.coact.matmul(&m.act)))
        .matmul(&sigma_mb.kron(&id_b))
        .matmul(&id_m.kron(&dd));
    let rhs = m
        .act
        .kron(&mm)
        .matmul(&id_m.kron(&sigma_bb).kron(&id_b))
        .matmul(&m.coact.kron(&dd));
    let yd_ok = lhs == rhs;
    let witness = (!yd_ok).then(|| {
        let diff = lhs.sub(&rhs);
        let mut w = String::from("YD identity fails");
        'outer: for r in 0..diff.rows {
            for c in 0..diff.cols {
                if !diff.at(r, c).is_zero() {
                    w = format!("YD identity fails at matrix entry ({r},{c})");
                    break 'outer;
                }
            }
        }
        w
    });
    rep.push("yetter_drinfeld", yd_ok, witness);

    rep
}

/// The braiding Sigma_{M,N} = (id_N ⊗ act_M)(sigma_{M,N} ⊗ id_B)(id_M ⊗ coact_N).
pub fn yd_braiding(m: &YDModule, n: &YDModule, b: &BraidedHopfAlgebra, qt: &QTStructure) -> Mat {
    let id_m = Mat::identity(m.dim());
    let id_n = Mat::identity(n.dim());
    let id_b = Mat::identity(b.dim());
    let sigma_mn = braiding_unchecked(qt, &m.carrier, &n.carrier);
    id_n.kron(&m.act).matmul(&sigma_mn.kron(&id_b)).matmul(&id_m.kron(&n.coact))
}

/// Inverse braiding, by exact matrix inversion. A singular Sigma on
/// valid Yetter-Drinfeld modules is an internal error.
pub fn yd_braiding_inverse(
    m: &YDModule,
    n: &YDModule,
    b: &BraidedHopfAlgebra,
    qt: &QTStructure,
) -> Result<Mat, YdError> {
    inverse(&yd_braiding(m, n, b, qt)).ok_or(YdError::SingularBraiding)
}

/// Tensor product of YD modules with the codiagonal action/coaction
/// (right-right conventions; one braided crossing each).
pub fn yd_tensor(m: &YDModule, n: &YDModule, b: &BraidedHopfAlgebra, qt: &QTStructure) -> YDModule {
    let id_m = Mat::identity(m.dim());
    let id_mn = Mat::identity(m.dim() * n.dim());
    let id_b = Mat::identity(b.dim());
    let sigma_nb = braiding_unchecked(qt, &n.carrier, &b.carrier);
    let sigma_bn = braiding_unchecked(qt, &b.carrier, &n.carrier);
    let act = m
        .act
        .kron(&n.act)
        .matmul(&id_m.kron(&sigma_nb).kron(&id_b))
        .matmul(&id_mn.kron(&b.comult_mat()));
    let coact = id_mn
        .kron(&b.mult_mat())
        .matmul(&id_m.kron(&sigma_bn).kron(&id_b))
        .matmul(&m.coact.kron(&n.coact));
    YDModule { carrier: m.carrier.tensor(&n.carrier, &qt.h), act, coact }
}

/// P: the underlying object B with the adjoint action
/// ad = m(S ⊗ m)(sigma_{B,B} ⊗ id)(id ⊗ Δ) and the regular coaction Δ.
pub fn adjoint_yd_p(b: &BraidedHopfAlgebra, qt: &QTStructure) -> YDModule {
    let id_b = Mat::identity(b.dim());
    let mm = b.mult_mat();
    let act = mm
        .matmul(&b.antipode.kron(&mm))
        .matmul(&b.self_braiding(qt).kron(&id_b))
        .matmul(&id_b.kron(&b.comult_mat()));
    YDModule { carrier: b.carrier.clone(), act, coact: b.comult_mat() }
}

/// Q: the underlying object B with the regular action m and the
/// coadjoint coaction (id ⊗ m)(sigma_{B,B} ⊗ id)(S ⊗ Δ)Δ.
pub fn coadjoint_yd_q(b: &BraidedHopfAlgebra, qt: &QTStructure) -> YDModule {
    let id_b = Mat::identity(b.dim());
    let dd = b.comult_mat();
    let coact = id_b
        .kron(&b.mult_mat())
        .matmul(&b.self_braiding(qt).kron(&id_b))
        .matmul(&b.antipode.kron(&dd))
        .matmul(&dd);
    YDModule { carrier: b.carrier.clone(), act: b.mult_mat(), coact }
}

/// A convenient regular-size test object: the tensor product P ⊗ Q of
/// the adjoint and coadjoint modules.
pub fn regular_yd(b: &BraidedHopfAlgebra, qt: &QTStructure) -> YDModule {
    yd_tensor(&adjoint_yd_p(b, qt), &coadjoint_yd_q(b, qt), b, qt)
}

/// Objects of the Mueger center of the base category become YD modules
/// with the trivial action and coaction; defined only on transparent modules.
pub fn trivial_yd_embed(
    v: &HModule,
    b: &BraidedHopfAlgebra,
    qt: &QTStructure,
) -> Result<YDModule, YdError> {
    let transparent = is_transparent_module(qt, v)
        .map_err(|_| YdError::NotARepresentation("embedded module".into()))?;
    if !transparent {
        return Err(YdError::NotTransparent);
    }
    let id_v = Mat::identity(v.dim);
    Ok(YDModule {
        carrier: v.clone(),
        act: id_v.kron(&b.counit_mat()),
        coact: id_v.kron(&b.unit_mat()),
    })
}

/// Membership in the Mueger center of the Yetter-Drinfeld category:
/// trivial action, trivial coaction, and a transparent underlying object.
/// On a positive answer the double braiding against P, Q and P ⊗ Q is
/// additionally verified as a spot check.
pub fn yd_muger_membership(
    m: &YDModule,
    b: &BraidedHopfAlgebra,
    qt: &QTStructure,
) -> Result<bool, YdError> {
    let id_m = Mat::identity(m.dim());
    let trivial_act = m.act == id_m.kron(&b.counit_mat());
    let trivial_coact = m.coact == id_m.kron(&b.unit_mat());
    if !trivial_act || !trivial_coact {
        return Ok(false);
    }
    let transparent = is_transparent_module(qt, &m.carrier)
        .map_err(|_| YdError::NotARepresentation("module".into()))?;
    if !transparent {
        return Ok(false);
    }
    for other in [adjoint_yd_p(b, qt), coadjoint_yd_q(b, qt), regular_yd(b, qt)] {
        let fwd = yd_braiding(m, &other, b, qt);
        let bwd = yd_braiding(&other, m, b, qt);
        if bwd.matmul(&fwd) != Mat::identity(m.dim() * other.dim()) {
            return Err(YdError::SingularBraiding);
        }
    }
    Ok(true)
}

/// For a module that fails membership, name a concrete witness partner
/// among {P, Q} whose double braiding with it is nontrivial, if any.
pub fn yd_muger_witness(
    m: &YDModule,
    b: &BraidedHopfAlgebra,
    qt: &QTStructure,
) -> Option<&'static str> {
    let p = adjoint_yd_p(b, qt);
    let q = coadjoint_yd_q(b, qt);
    for (name, other) in [("P", p), ("Q", q)] {
        let fwd = yd_braiding(m, &other, b, qt);
        let bwd = yd_braiding(&other, m, b, qt);
        if bwd.matmul(&fwd) != Mat::identity(m.dim() * other.dim()) {
            return Some(name);
        }
    }
    None
}

/// Basis of the space of YD endomorphisms of M (commuting with the
/// H-action, B-action and B-coaction); used for exact naturality checks.
pub fn yd_endomorphisms(m: &YDModule, b: &BraidedHopfAlgebra) -> Vec<Mat> {
    let md = m.dim();
    let nb = b.dim();
    let mut rows: Vec<Vec<CycScalar>> = Vec::new();
    // T rho_i = rho_i T: constraint a T = T a, unknowns T (md x md) row-major
    for a in m.carrier.rho.iter() {
        for r in 0..md {
            for s in 0..md {
                let mut row = vec![CycScalar::from_int(0); md * md];
                for k in 0..md {
                    // (a T)[r][s] = sum_k a[r][k] T[k][s]
                    row[k * md + s] = row[k * md + s].add(a.at(r, k));
                    // (T a)[r][s] = sum_k T[r][k] a[k][s]
                    row[r * md + k] = row[r * md + k].sub(a.at(k, s));
                }
                if !row.iter().all(|v| v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    // act (T ⊗ id_B) = T act   and   (T ⊗ id_B) coact = coact T
    for r in 0..md {
        for s in 0..md * nb {
            let mut row = vec![CycScalar::from_int(0); md * md];
            // lhs[r][s] = sum_{k,j} act[r][(k nb + j)] (T⊗I)[(k nb + j)][s];
            // (T⊗I)[(k nb + j)][(t nb + u)] = T[k][t] delta_{j u}
            let (t, u) = (s / nb, s % nb);
            for k in 0..md {
                row[k * md + t] = row[k * md + t].add(m.act.at(r, k * nb + u));
            }
            // rhs[r][s] = sum_k T[r][k] act[k][s]
            for k in 0..md {
                row[r * md + k] = row[r * md + k].sub(m.act.at(k, s));
            }
            if !row.iter().all(|v| v.is_zero()) {
                rows.push(row);
            }
        }
    }
    for s in 0..md {
        for rr in 0..md * nb {
            let mut row = vec![CycScalar::from_int(0); md * md];
            let (t, u) = (rr / nb, rr % nb);
            // lhs[(t nb + u)][s] = sum_k (T⊗I)[(t nb+u)][(k nb+u)] coact[(k nb + u)][s]
            for k in 0..md {
                row[t * md + k] = row[t * md + k].add(m.coact.at(k * nb + u, s));
            }
            // rhs = coact T: sum_k coact[rr][k] T[k][s]
            for k in 0..md {
                row[k * md + s] = row[k * md + s].sub(m.coact.at(rr, k));
            }
            if !row.iter().all(|v| v.is_zero()) {
                rows.push(row);
            }
        }
    }
    let kernel = if rows.is_empty() {
        Subspace::from_vectors(md * md, &{
            let mut vs = Vec::new();
            for i in 0..md * md {
                let mut v = vec![CycScalar::from_int(0); md * md];
                v[i] = CycScalar::from_int(1);
                vs.push(v);
            }
            vs
        })
        .basis()
        .to_vec()
    } else {
        kernel_basis(&Mat::from_rows(rows))
    };
    kernel
        .into_iter()
        .map(|v| Mat::from_fn(md, md, |r, c| v[r * md + c].clone()))
        .collect()
}

/// Hexagon identities and naturality of Sigma, checked exactly on the
/// given triples of valid YD modules.
pub fn verify_hexagons(
    qt: &QTStructure,
    b: &BraidedHopfAlgebra,
    triples: &[(&YDModule, &YDModule, &YDModule)],
) -> Report {
    let mut rep = Report::new();
    for (idx, (m, n, p)) in triples.iter().enumerate() {
        let mn = yd_tensor(m, n, b, qt);
        let np = yd_tensor(n, p, b, qt);
        let id_m = Mat::identity(m.dim());
        let id_n = Mat::identity(n.dim());
        let id_p = Mat::identity(p.dim());

        let hex1 = yd_braiding(&mn, p, b, qt)
            == yd_braiding(m, p, b, qt)
                .kron(&id_n)
                .matmul(&id_m.kron(&yd_braiding(n, p, b, qt)));
        rep.push(&format!("hexagon1_triple{idx}"), hex1, (!hex1).then(|| "Σ_{M⊗N,P} decomposition fails".into()));

        let hex2 = yd_braiding(m, &np, b, qt)
            == id_n
                .kron(&yd_braiding(m, p, b, qt))
                .matmul(&yd_braiding(m, n, b, qt).kron(&id_p));
        rep.push(&format!("hexagon2_triple{idx}"), hex2, (!hex2).then(|| "Σ_{M,N⊗P} decomposition fails".into()));

        let sigma = yd_braiding(m, n, b, qt);
        let mut nat_ok = true;
        'nat: for f in yd_endomorphisms(m, b) {
            for g in yd_endomorphisms(n, b) {
                if sigma.matmul(&f.kron(&g)) != g.kron(&f).matmul(&sigma) {
                    nat_ok = false;
                    break 'nat;
                }
            }
        }
        rep.push(&format!("naturality_triple{idx}"), nat_ok, (!nat_ok).then(|| "Σ not natural".into()));
    }
    rep
}

/// H-module morphism space Hom_H(X, Y), used for base-category
/// naturality checks.
pub fn module_homs(h: &HopfAlgebra, x: &HModule, y: &HModule) -> Vec<Mat> {
    let (dx, dy) = (x.dim, y.dim);
    let mut rows = Vec::new();
    for i in 0..h.dim {
        for r in 0..dy {
            for s in 0..dx {
                let mut row = vec![CycScalar::from_int(0); dy * dx];
                for k in 0..dy {
                    row[k * dx + s] = row[k * dx + s].add(y.rho[i].at(r, k));
                }
                for k in 0..dx {
                    row[r * dx + k] = row[r * dx + k].sub(x.rho[i].at(k, s));
                }
                if !row.iter().all(|v| v.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = if rows.is_empty() {
        let mut vs = Vec::new();
        for i in 0..dy * dx {
            let mut v = vec![CycScalar::from_int(0); dy * dx];
            v[i] = CycScalar::from_int(1);
            vs.push(v);
        }
        vs
    } else {
        kernel_basis(&Mat::from_rows(rows))
    };
    kernel
        .into_iter()
        .map(|v| Mat::from_fn(dy, dx, |r, c| v[r * dx + c].clone()))
        .collect()
}

/// Expose the unchecked braiding for module pairs already known valid.
pub fn braiding_of_c_unchecked(qt: &QTStructure, x: &HModule, y: &HModule) -> Mat {
    braiding_unchecked(qt, x, y)
}
