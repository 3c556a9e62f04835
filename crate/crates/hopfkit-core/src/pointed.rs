//! The metric-group sandbox: finite abelian groups with bicharacters,
//! where tensor full subcategories are subgroups, Frobenius-Perron
//! dimensions are orders, and the Mueger center is the radical of the
//! symmetrized form. Everything here is brute-force enumeration plus
//! one exact rank computation, independent of the Hopf-algebra stack.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::linalg::{rank, Mat};
use crate::scalar::CycScalar;

#[derive(Debug, Error)]
pub enum PointedError {
    #[error("bicharacter exponents incompatible with the group orders and conductor")]
    IncompatibleExponents,
    #[error("group too large for subgroup enumeration: |G| = {0}")]
    GroupTooLarge(usize),
}

/// Finite abelian group presented by invariant factors; elements are
/// exponent tuples enumerated lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinAbGroup {
    pub invariant_factors: Vec<u32>,
    elements: Vec<Vec<u32>>,
}

impl FinAbGroup {
    pub fn new(invariant_factors: Vec<u32>) -> FinAbGroup {
        assert!(!invariant_factors.is_empty() && invariant_factors.iter().all(|&f| f >= 1));
        let mut elements = vec![vec![]];
        for &f in invariant_factors.iter() {
            let mut next = Vec::with_capacity(elements.len() * f as usize);
            for t in elements {
                for v in 0..f {
                    let mut t2: Vec<u32> = t.clone();
                    t2.push(v);
                    next.push(t2);
                }
            }
            elements = next;
        }
        FinAbGroup { invariant_factors, elements }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Vec<u32>] {
        &self.elements
    }

    pub fn index_of(&self, t: &[u32]) -> usize {
        let mut idx = 0usize;
        for (pos, &v) in t.iter().enumerate() {
            idx = idx * self.invariant_factors[pos] as usize
                + (v % self.invariant_factors[pos]) as usize;
        }
        idx
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        let t: Vec<u32> = self.elements[a]
            .iter()
            .zip(self.elements[b].iter())
            .zip(self.invariant_factors.iter())
            .map(|((&x, &y), &f)| (x + y) % f)
            .collect();
        self.index_of(&t)
    }

    pub fn identity(&self) -> usize {
        0
    }

    /// Subgroup generated by a set of element indices (closure under addition).
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<usize> {
        let mut set = BTreeSet::new();
        set.insert(self.identity());
        let mut frontier: Vec<usize> = vec![self.identity()];
        while let Some(cur) = frontier.pop() {
            for &g in gens {
                let nxt = self.add(cur, g);
                if set.insert(nxt) {
                    frontier.push(nxt);
                }
            }
        }
        set.into_iter().collect()
    }

    /// All subgroups, as sorted element-index lists, enumerated by closure
    /// over generators with pruning via Lagrange. Exact and deterministic.
    pub fn all_subgroups(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut known: BTreeSet<Vec<usize>> = BTreeSet::new();
        known.insert(vec![self.identity()]);
        let mut frontier: Vec<Vec<usize>> = vec![vec![self.identity()]];
        while let Some(sub) = frontier.pop() {
            for g in 0..n {
                if sub.binary_search(&g).is_ok() {
                    continue;
                }
                let mut gens: Vec<usize> = sub.clone();
                gens.push(g);
                let bigger = self.generated_subgroup(&gens);
                if known.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
        known.into_iter().collect()
    }
}

/// Bicharacter chi(g, h) = zeta_L^(g·E·h) on a finite abelian group.
#[derive(Clone, Debug)]
pub struct Bicharacter {
    pub group: FinAbGroup,
    pub exponent_matrix: Vec<Vec<i64>>,
    pub conductor: u32,
}

impl Bicharacter {
    pub fn new(
        group: FinAbGroup,
        exponent_matrix: Vec<Vec<i64>>,
        conductor: u32,
    ) -> Result<Bicharacter, PointedError> {
        let m = group.invariant_factors.len();
        if exponent_matrix.len() != m || exponent_matrix.iter().any(|r| r.len() != m) {
            return Err(PointedError::IncompatibleExponents);
        }
        let l = conductor as i64;
        for i in 0..m {
            for j in 0..m {
                let ni = group.invariant_factors[i] as i64;
                let nj = group.invariant_factors[j] as i64;
                if (ni * exponent_matrix[i][j]) % l != 0 || (exponent_matrix[i][j] * nj) % l != 0 {
                    return Err(PointedError::IncompatibleExponents);
                }
            }
        }
        Ok(Bicharacter { group, exponent_matrix, conductor })
    }

    /// Exponent of zeta_L in chi(a, b).
    pub fn exponent(&self, a: usize, b: usize) -> i64 {
        let l = self.conductor as i64;
        let ta = &self.group.elements()[a];
        let tb = &self.group.elements()[b];
        let mut e = 0i64;
        for i in 0..ta.len() {
            for j in 0..tb.len() {
                e = (e + (ta[i] as i64) * self.exponent_matrix[i][j] % l * (tb[j] as i64)) % l;
            }
        }
        e.rem_euclid(l)
    }

    pub fn value(&self, a: usize, b: usize) -> CycScalar {
        CycScalar::root_of_unity(self.conductor, self.exponent(a, b))
    }

    /// The symmetrization beta(g, h) = chi(g, h) chi(h, g).
    pub fn symmetric_form(&self) -> Bicharacter {
        let m = self.exponent_matrix.len();
        let e: Vec<Vec<i64>> = (0..m)
            .map(|i| (0..m).map(|j| self.exponent_matrix[i][j] + self.exponent_matrix[j][i]).collect())
            .collect();
        Bicharacter { group: self.group.clone(), exponent_matrix: e, conductor: self.conductor }
    }
}

/// {g : beta(g, h) = 1 for all h}, by exhaustive enumeration.
pub fn radical(beta: &Bicharacter) -> Vec<usize> {
    let n = beta.group.order();
    (0..n)
        .filter(|&g| (0..n).all(|h| beta.exponent(g, h) == 0))
        .collect()
}

/// Exact rank of the |G| x |G| character-value matrix [beta(g, h)].
pub fn pointed_omega_rank(beta: &Bicharacter) -> usize {
    let n = beta.group.order();
    let m = Mat::from_fn(n, n, |g, h| beta.value(g, h));
    let rk = rank(&m);
    // independent arithmetic identity: rank = |G| / |radical|
    debug_assert_eq!(rk, n / radical(beta).len());
    rk
}

#[derive(Clone, Debug, Serialize)]
pub struct CentralizerReport {
    pub group: Vec<u32>,
    pub radical_order: usize,
    pub subgroups_checked: usize,
    pub identities_ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
}

/// For every subgroup A: |A| · |A⊥| = |G| · |A ∩ rad| and A⊥⊥ = <A, rad>,
/// with A⊥ = {g : beta(g, a) = 1 for all a in A}.
pub fn check_centralizer_identities(beta: &Bicharacter) -> Result<CentralizerReport, PointedError> {
    let g = &beta.group;
    let n = g.order();
    if n > 10_000 {
        return Err(PointedError::GroupTooLarge(n));
    }
    let rad = radical(beta);
    let subs = g.all_subgroups();
    let perp = |a: &[usize]| -> Vec<usize> {
        (0..n)
            .filter(|&x| a.iter().all(|&y| beta.exponent(x, y) == 0))
            .collect()
    };
    let mut violation = None;
    for a in subs.iter() {
        let ap = perp(a);
        let meet: Vec<usize> = a.iter().copied().filter(|x| rad.binary_search(x).is_ok()).collect();
        if a.len() * ap.len() != n * meet.len() {
            violation = Some(format!(
                "order identity fails for subgroup of order {}: |A||A⊥|={} vs |G||A∩rad|={}",
                a.len(),
                a.len() * ap.len(),
                n * meet.len()
            ));
            break;
        }
        let app = perp(&ap);
        let mut gens: Vec<usize> = a.clone();
        gens.extend(rad.iter().copied());
        let join = g.generated_subgroup(&gens);
        if app != join {
            violation = Some(format!(
                "double centralizer fails for subgroup of order {}: |A⊥⊥|={} vs |A∨rad|={}",
                a.len(),
                app.len(),
                join.len()
            ));
            break;
        }
    }
    Ok(CentralizerReport {
        group: g.invariant_factors.clone(),
        radical_order: rad.len(),
        subgroups_checked: subs.len(),
        identities_ok: violation.is_none(),
        violation,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BridgeReport {
    pub group: Vec<u32>,
    pub pointed_rank: usize,
    pub hopf_rank: usize,
    pub radical_trivial: bool,
    pub muger_trivial: bool,
    pub factorizable: bool,
    pub agree: bool,
}

/// Bridge the pointed model against the Hopf-algebra pipeline on the
/// same bicharacter: ranks and triviality criteria must agree exactly.
pub fn pointed_vs_hopf_crosscheck(chi: &Bicharacter) -> Result<BridgeReport, crate::zoo::ZooError> {
    let beta = chi.symmetric_form();
    let pointed_rank = pointed_omega_rank(&beta);
    let rad_trivial = radical(&beta).len() == 1;
    let qt = crate::zoo::group_algebra_with_bicharacter(
        &chi.group.invariant_factors,
        &chi.exponent_matrix,
        chi.conductor,
    )?;
    let hopf_rank = crate::qt::omega_rank(&qt)
        .map_err(|e| crate::zoo::ZooError::InvalidParameter(e.to_string()))?;
    let muger = crate::qt::is_muger_trivial(&qt);
    let fact = crate::qt::is_factorizable(&qt);
    Ok(BridgeReport {
        group: chi.group.invariant_factors.clone(),
        pointed_rank,
        hopf_rank,
        radical_trivial: rad_trivial,
        muger_trivial: muger,
        factorizable: fact,
        agree: pointed_rank == hopf_rank && rad_trivial == muger && rad_trivial == fact,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: u32, e: i64, l: u32) -> Bicharacter {
        Bicharacter::new(FinAbGroup::new(vec![n]), vec![vec![e]], l).unwrap()
    }

    #[test]
    fn symmetric_form_examples() {
        // sl2 datum on Z/5: chi(g,g) = q^2, beta(g,g) = q^4
        let chi = cyclic(5, 2, 5);
        let beta = chi.symmetric_form();
        assert_eq!(beta.exponent(1, 1), 4);
        // trivial chi
        let chi = cyclic(3, 0, 3);
        assert_eq!(chi.symmetric_form().exponent(1, 1), 0);
        // super case: chi(g,g) = -1 over Z/2, beta trivial
        let chi = cyclic(2, 1, 2);
        let beta = chi.symmetric_form();
        assert!((0..2).all(|a| (0..2).all(|b| beta.exponent(a, b) == 0)));
    }

    #[test]
    fn radical_examples() {
        let beta = cyclic(5, 2, 5).symmetric_form();
        assert_eq!(radical(&beta), vec![0]);
        let beta = cyclic(4, 1, 4).symmetric_form();
        assert_eq!(radical(&beta), vec![0, 2]);
        let beta = cyclic(6, 0, 6);
        assert_eq!(radical(&beta).len(), 6);
    }

    #[test]
    fn omega_rank_examples() {
        assert_eq!(pointed_omega_rank(&cyclic(5, 2, 5).symmetric_form()), 5);
        assert_eq!(pointed_omega_rank(&cyclic(4, 1, 4).symmetric_form()), 2);
        assert_eq!(pointed_omega_rank(&cyclic(3, 0, 3)), 1);
    }

    #[test]
    fn rank_equals_order_over_radical() {
        for (factors, e, l) in [
            (vec![4u32], vec![vec![1i64]], 4u32),
            (vec![6], vec![vec![2]], 6),
            (vec![2, 4], vec![vec![2, 0], vec![0, 1]], 4),
            (vec![3, 3], vec![vec![1, 2], vec![0, 1]], 3),
            (vec![12], vec![vec![3]], 12),
        ] {
            let chi = Bicharacter::new(FinAbGroup::new(factors), e, l).unwrap();
            let beta = chi.symmetric_form();
            let rk = pointed_omega_rank(&beta);
            assert_eq!(rk, beta.group.order() / radical(&beta).len());
        }
    }

    #[test]
    fn subgroup_enumeration_counts() {
        // Z/12 has one subgroup per divisor
        let g = FinAbGroup::new(vec![12]);
        assert_eq!(g.all_subgroups().len(), 6);
        // Klein four group: {e}, three Z/2's, full
        let g = FinAbGroup::new(vec![2, 2]);
        assert_eq!(g.all_subgroups().len(), 5);
    }

    #[test]
    fn centralizer_identities_examples() {
        for (factors, e, l) in [
            (vec![5u32], vec![vec![2i64]], 5u32),
            (vec![4], vec![vec![1]], 4),
            (vec![2], vec![vec![1]], 2),
            (vec![15], vec![vec![3]], 15),
        ] {
            let chi = Bicharacter::new(FinAbGroup::new(factors.clone()), e, l).unwrap();
            let rep = check_centralizer_identities(&chi.symmetric_form()).unwrap();
            assert!(rep.identities_ok, "violation on {factors:?}: {:?}", rep.violation);
        }
    }

    #[test]
    fn incompatible_exponents_rejected() {
        // chi(g,g) = i on Z/2 is not bimultiplicative-compatible: 2·1 ≠ 0 mod 4
        assert!(Bicharacter::new(FinAbGroup::new(vec![2]), vec![vec![1]], 4).is_err());
    }
}
