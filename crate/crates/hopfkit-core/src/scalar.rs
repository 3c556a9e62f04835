//! Exact arithmetic in cyclotomic fields `Q(zeta_L)`.
//!
//! A scalar is a polynomial in `z = zeta_L` with rational coefficients,
//! kept fully reduced modulo the L-th cyclotomic polynomial `Phi_L`. The
//! residue basis `1, z, ..., z^(phi(L)-1)` makes the representation
//! canonical, so equality is coefficient-wise. There is no floating
//! point anywhere: coefficients are arbitrary-precision rationals stored
//! as an integer vector over a common positive denominator.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use once_cell::sync::Lazy;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("conductor {0} does not divide {1}")]
    NonDivisibleConductor(u32, u32),
    #[error("cannot parse scalar literal `{0}`: {1}")]
    Parse(String, String),
}

/// Euler's totient.
pub fn euler_phi(mut n: u32) -> u32 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn lcm_u32(a: u32, b: u32) -> u32 {
    a / a.gcd(&b) * b
}

/// Cached data for one conductor: phi(L) and every power z^e reduced
/// mod Phi_L, e in 0..max(L, 2*phi-1). The table covers both lifting
/// (exponents below L) and the overflow degrees produced by products.
struct CycCtx {
    phi: usize,
    monomials: Vec<Vec<BigInt>>,
}

impl CycCtx {
    fn build(l: u32) -> CycCtx {
        let phi = euler_phi(l) as usize;
        let phi_poly = cyclotomic_poly(l);
        debug_assert_eq!(phi_poly.len(), phi + 1);
        let need = std::cmp::max(l as usize, 2 * phi.max(1) - 1);
        let mut monomials: Vec<Vec<BigInt>> = Vec::with_capacity(need);
        let mut cur = vec![BigInt::zero(); phi];
        cur[0] = BigInt::one();
        monomials.push(cur.clone());
        for _ in 1..need {
            // multiply by z, reduce the degree-phi overflow by Phi_L (monic):
            // z^phi = -sum_{d<phi} Phi[d] z^d
            let mut next = vec![BigInt::zero(); phi];
            for d in 0..phi - 1 {
                next[d + 1] = cur[d].clone();
            }
            let lead = cur[phi - 1].clone();
            if !lead.is_zero() {
                for d in 0..phi {
                    next[d] -= &lead * &phi_poly[d];
                }
            }
            monomials.push(next.clone());
            cur = next;
        }
        CycCtx { phi, monomials }
    }
}

/// Coefficients of Phi_L, ascending degree, monic.
fn cyclotomic_poly(l: u32) -> Vec<BigInt> {
    // x^l - 1 divided exactly by the product of Phi_d over proper divisors d.
    let mut num = vec![BigInt::zero(); l as usize + 1];
    num[0] = -BigInt::one();
    num[l as usize] = BigInt::one();
    for d in 1..l {
        if l % d == 0 {
            let phi_d = cyclotomic_poly(d);
            num = poly_div_exact(&num, &phi_d);
        }
    }
    num
}

fn poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dn = den.len() - 1;
    assert!(den[dn].is_one());
    let qn = rem.len() - 1 - dn;
    let mut quot = vec![BigInt::zero(); qn + 1];
    for qi in (0..=qn).rev() {
        let c = rem[qi + dn].clone();
        if !c.is_zero() {
            quot[qi] = c.clone();
            for (di, dc) in den.iter().enumerate() {
                rem[qi + di] -= &c * dc;
            }
        }
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    quot
}

static REGISTRY: Lazy<RwLock<HashMap<u32, Arc<CycCtx>>>> = Lazy::new(|| RwLock::new(HashMap::new()));

fn ctx(l: u32) -> Arc<CycCtx> {
    assert!(l >= 1, "conductor must be positive");
    if let Some(c) = REGISTRY.read().unwrap().get(&l) {
        return c.clone();
    }
    let built = Arc::new(CycCtx::build(l));
    REGISTRY.write().unwrap().entry(l).or_insert(built).clone()
}

/// Exact element of `Q(zeta_L)` in canonical reduced form.
///
/// `num` has length phi(L); the value is `sum num[d] z^d / den` with
/// `den > 0` and `gcd(num..., den) = 1`.
#[derive(Clone)]
pub struct CycScalar {
    l: u32,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycScalar {
    fn normalized(l: u32, mut num: Vec<BigInt>, mut den: BigInt) -> CycScalar {
        debug_assert!(!den.is_zero());
        if den.is_negative() {
            den = -den;
            for c in num.iter_mut() {
                *c = -std::mem::take(c);
            }
        }
        let mut g = den.clone();
        for c in num.iter() {
            if !c.is_zero() {
                g = g.gcd(c);
            }
            if g.is_one() {
                break;
            }
        }
        if num.iter().all(|c| c.is_zero()) {
            return CycScalar { l, num, den: BigInt::one() };
        }
        if !g.is_one() {
            den /= &g;
            for c in num.iter_mut() {
                *c = std::mem::take(c) / &g;
            }
        }
        CycScalar { l, num, den }
    }

    pub fn zero(l: u32) -> CycScalar {
        let phi = ctx(l).phi;
        CycScalar { l, num: vec![BigInt::zero(); phi], den: BigInt::one() }
    }

    pub fn one(l: u32) -> CycScalar {
        let mut s = CycScalar::zero(l);
        s.num[0] = BigInt::one();
        s
    }

    pub fn from_int(v: i64) -> CycScalar {
        CycScalar { l: 1, num: vec![BigInt::from(v)], den: BigInt::one() }
    }

    pub fn from_ratio(p: i64, q: i64) -> CycScalar {
        assert!(q != 0);
        CycScalar::normalized(1, vec![BigInt::from(p)], BigInt::from(q))
    }

    pub fn from_big_ratio(p: BigInt, q: BigInt) -> CycScalar {
        assert!(!q.is_zero());
        CycScalar::normalized(1, vec![p], q)
    }

    /// `zeta_L^k`, exponent taken mod L.
    pub fn root_of_unity(l: u32, k: i64) -> CycScalar {
        let c = ctx(l);
        let e = k.rem_euclid(l as i64) as usize;
        CycScalar { l, num: c.monomials[e].clone(), den: BigInt::one() }
    }

    pub fn conductor(&self) -> u32 {
        self.l
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    /// Re-express the same field element in `Q(zeta_l2)`; requires `l | l2`.
    pub fn lift(&self, l2: u32) -> Result<CycScalar, ScalarError> {
        if self.l == l2 {
            return Ok(self.clone());
        }
        if l2 % self.l != 0 {
            return Err(ScalarError::NonDivisibleConductor(self.l, l2));
        }
        let step = (l2 / self.l) as usize;
        let c2 = ctx(l2);
        let mut num = vec![BigInt::zero(); c2.phi];
        for (d, coef) in self.num.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let mono = &c2.monomials[d * step];
            for (t, m) in mono.iter().enumerate() {
                if !m.is_zero() {
                    num[t] += coef * m;
                }
            }
        }
        Ok(CycScalar::normalized(l2, num, self.den.clone()))
    }

    fn common(a: &CycScalar, b: &CycScalar) -> (CycScalar, CycScalar) {
        if a.l == b.l {
            (a.clone(), b.clone())
        } else {
            let l = lcm_u32(a.l, b.l);
            (a.lift(l).unwrap(), b.lift(l).unwrap())
        }
    }

    pub fn add(&self, other: &CycScalar) -> CycScalar {
        if self.is_zero() {
            return if other.l == lcm_u32(self.l, other.l) { other.clone() } else { Self::common(self, other).1 };
        }
        if other.is_zero() {
            return if self.l == lcm_u32(self.l, other.l) { self.clone() } else { Self::common(self, other).0 };
        }
        let (a, b) = Self::common(self, other);
        let mut num = Vec::with_capacity(a.num.len());
        for d in 0..a.num.len() {
            num.push(&a.num[d] * &b.den + &b.num[d] * &a.den);
        }
        CycScalar::normalized(a.l, num, &a.den * &b.den)
    }

    pub fn sub(&self, other: &CycScalar) -> CycScalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> CycScalar {
        CycScalar {
            l: self.l,
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }

    pub fn mul(&self, other: &CycScalar) -> CycScalar {
        if self.is_zero() || other.is_zero() {
            return CycScalar::zero(lcm_u32(self.l, other.l));
        }
        let (a, b) = Self::common(self, other);
        let c = ctx(a.l);
        let phi = c.phi;
        let mut conv = vec![BigInt::zero(); 2 * phi - 1];
        for (i, ai) in a.num.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.num.iter().enumerate() {
                if !bj.is_zero() {
                    conv[i + j] += ai * bj;
                }
            }
        }
        let mut num = conv[..phi].to_vec();
        for d in phi..2 * phi - 1 {
            if conv[d].is_zero() {
                continue;
            }
            let mono = &c.monomials[d];
            for (t, m) in mono.iter().enumerate() {
                if !m.is_zero() {
                    num[t] += &conv[d] * m;
                }
            }
        }
        CycScalar::normalized(a.l, num, &a.den * &b.den)
    }

    pub fn scale_int(&self, k: i64) -> CycScalar {
        if k == 0 {
            return CycScalar::zero(self.l);
        }
        let kb = BigInt::from(k);
        CycScalar::normalized(self.l, self.num.iter().map(|c| c * &kb).collect(), self.den.clone())
    }

    pub fn inv(&self) -> Result<CycScalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let c = ctx(self.l);
        let phi = c.phi;
        if self.is_rational() {
            return Ok(CycScalar::normalized(
                self.l,
                {
                    let mut v = vec![BigInt::zero(); phi];
                    v[0] = self.den.clone();
                    v
                },
                self.num[0].clone(),
            ));
        }
        // solve (self) * x = 1 in the residue basis: columns are self * z^k
        let mut aug: Vec<Vec<BigInt>> = Vec::with_capacity(phi);
        let cols: Vec<CycScalar> = (0..phi)
            .map(|k| {
                let zk = CycScalar { l: self.l, num: c.monomials[k].clone(), den: BigInt::one() };
                self.mul(&zk)
            })
            .collect();
        // integer matrix: scale each column by the lcm of denominators later;
        // work over rationals encoded as (num, den) per column instead.
        // Simpler: solve with rational rows via fraction-free elimination on
        // a small dense system of BigRationals emulated by pairs.
        for row in 0..phi {
            let mut r: Vec<BigInt> = Vec::with_capacity(phi + 1);
            // common denominator across the row: product of column dens
            // (phi is tiny; keep it simple and exact)
            let mut lcm = BigInt::one();
            for col in cols.iter() {
                lcm = lcm.lcm(&col.den);
            }
            for col in cols.iter() {
                r.push(&col.num[row] * (&lcm / &col.den));
            }
            r.push(if row == 0 { lcm } else { BigInt::zero() });
            aug.push(r);
        }
        // exact Gauss over Q encoded as integer rows with implicit common den 1
        // (we only need the solution vector, solved by fraction-free elimination
        // followed by back substitution with exact divisions)
        let sol = solve_int_system(&mut aug, phi).ok_or(ScalarError::DivisionByZero)?;
        let (nums, den) = sol;
        Ok(CycScalar::normalized(self.l, nums, den))
    }

    pub fn pow(&self, e: u32) -> CycScalar {
        let mut acc = CycScalar::one(self.l);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Raw coefficient access (length phi(L), over the stored denominator).
    pub fn raw(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    /// Parse the scalar literal grammar: a rational `-?\d+(/\d+)?` or a
    /// polynomial in `z` such as `1/2*z^3-2*z+1`, with `z = zeta_L`.
    pub fn parse(input: &str, l: u32) -> Result<CycScalar, ScalarError> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(ScalarError::Parse(input.into(), "empty literal".into()));
        }
        let bytes = s.as_bytes();
        let mut pos = 0usize;
        let mut acc = CycScalar::zero(l);
        let err = |m: &str| ScalarError::Parse(input.into(), m.into());
        while pos < bytes.len() {
            let mut sign = 1i64;
            while pos < bytes.len() && (bytes[pos] == b'+' || bytes[pos] == b'-') {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            }
            if pos >= bytes.len() {
                return Err(err("dangling sign"));
            }
            // optional coefficient
            let mut p = BigInt::one();
            let mut q = BigInt::one();
            let mut saw_coef = false;
            if bytes[pos].is_ascii_digit() {
                saw_coef = true;
                let start = pos;
                while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    pos += 1;
                }
                p = s[start..pos].parse().map_err(|_| err("bad integer"))?;
                if pos < bytes.len() && bytes[pos] == b'/' {
                    pos += 1;
                    let start = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    if start == pos {
                        return Err(err("missing denominator"));
                    }
                    q = s[start..pos].parse().map_err(|_| err("bad denominator"))?;
                    if q.is_zero() {
                        return Err(err("zero denominator"));
                    }
                }
            }
            // optional monomial
            let mut exp: i64 = 0;
            let mut saw_z = false;
            if pos < bytes.len() && (bytes[pos] == b'*' || bytes[pos] == b'z') {
                if bytes[pos] == b'*' {
                    pos += 1;
                    if pos >= bytes.len() || bytes[pos] != b'z' {
                        return Err(err("expected z after *"));
                    }
                }
                if pos < bytes.len() && bytes[pos] == b'z' {
                    saw_z = true;
                    pos += 1;
                    exp = 1;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        let start = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        if start == pos {
                            return Err(err("missing exponent"));
                        }
                        exp = s[start..pos].parse().map_err(|_| err("bad exponent"))?;
                    }
                }
            }
            if !saw_coef && !saw_z {
                return Err(err("expected term"));
            }
            let mut term = if saw_z {
                CycScalar::root_of_unity(l, exp)
            } else {
                CycScalar::one(l)
            };
            if sign < 0 {
                p = -p;
            }
            term = term.mul(&CycScalar::normalized(1, vec![p], q));
            acc = acc.add(&term);
        }
        acc.lift(l)
    }
}

/// Solve an integer-encoded phi x (phi+1) augmented system exactly.
/// Returns (solution numerators, common denominator) if nonsingular.
fn solve_int_system(aug: &mut Vec<Vec<BigInt>>, n: usize) -> Option<(Vec<BigInt>, BigInt)> {
    let mut row = 0usize;
    let mut pivots = Vec::new();
    for col in 0..n {
        let mut pr = None;
        for r in row..n {
            if !aug[r][col].is_zero() {
                pr = Some(r);
                break;
            }
        }
        let pr = pr?;
        aug.swap(row, pr);
        for r in 0..n {
            if r != row && !aug[r][col].is_zero() {
                let a = aug[row][col].clone();
                let b = aug[r][col].clone();
                for c2 in 0..=n {
                    let v = &aug[r][c2] * &a - &aug[row][c2] * &b;
                    aug[r][c2] = v;
                }
                // keep rows primitive to bound growth
                let mut g = BigInt::zero();
                for c2 in 0..=n {
                    g = g.gcd(&aug[r][c2]);
                    if g.is_one() {
                        break;
                    }
                }
                if !g.is_zero() && !g.is_one() {
                    for c2 in 0..=n {
                        aug[r][c2] = std::mem::take(&mut aug[r][c2]) / &g;
                    }
                }
            }
        }
        pivots.push((row, col));
        row += 1;
        if row == n {
            break;
        }
    }
    if pivots.len() < n {
        return None;
    }
    // diagonalized up to scaling: x[col] = rhs[row]/pivot
    let mut nums = vec![BigInt::zero(); n];
    let mut den = BigInt::one();
    for &(r, c) in pivots.iter() {
        den = den.lcm(&aug[r][c]);
    }
    for &(r, c) in pivots.iter() {
        nums[c] = &aug[r][n] * (&den / &aug[r][c]);
    }
    Some((nums, den))
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        if self.l == other.l {
            return self.den == other.den && self.num == other.num;
        }
        let (a, b) = CycScalar::common(self, other);
        a.den == b.den && a.num == b.num
    }
}

impl Eq for CycScalar {}

impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut out = String::new();
        for d in (0..self.num.len()).rev() {
            let c = &self.num[d];
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let abs = c.abs();
            let g = abs.gcd(&self.den);
            let (p, q) = (&abs / &g, &self.den / &g);
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push(if neg { '-' } else { '+' });
            }
            let unit_coef = p.is_one() && q.is_one();
            if d == 0 {
                out.push_str(&p.to_string());
                if !q.is_one() {
                    out.push('/');
                    out.push_str(&q.to_string());
                }
            } else {
                if !unit_coef {
                    out.push_str(&p.to_string());
                    if !q.is_one() {
                        out.push('/');
                        out.push_str(&q.to_string());
                    }
                    out.push('*');
                }
                out.push('z');
                if d > 1 {
                    out.push('^');
                    out.push_str(&d.to_string());
                }
            }
        }
        write!(f, "{out}")
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self, self.l)
    }
}
