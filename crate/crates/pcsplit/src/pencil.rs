//! Exact linear algebra for pencils of skew-symmetric bilinear forms: ranks,
//! kernels, kernel sums, singular parameter lines, and the dimension-level
//! Jordan–Kronecker profile.
//!
//! The generic rank of `A + tB` is computed over the rational function field
//! by fraction-free (Bareiss) elimination with polynomial entries. Singular
//! parameters are harvested as rational roots of a maximal minor — any
//! parameter where the rank drops annihilates every maximal minor, so the
//! candidate list is complete over the rationals — and each candidate is
//! confirmed by an exact rank computation. Root finding itself is exact:
//! Sturm-sequence isolation followed by integer tests on a monic transform.
//! There are no tolerances anywhere in this module.

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, RowSpan};
use crate::rational::{rat, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// A point of the projective parameter line: a finite rational or `∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ProjParam {
    Finite(Rat),
    Infinity,
}

impl ProjParam {
    pub fn zero() -> Self {
        ProjParam::Finite(Rat::zero())
    }

    pub fn one() -> Self {
        ProjParam::Finite(Rat::one())
    }
}

impl PartialOrd for ProjParam {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ProjParam {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use ProjParam::*;
        match (self, other) {
            (Finite(a), Finite(b)) => a.cmp(b),
            (Finite(_), Infinity) => std::cmp::Ordering::Less,
            (Infinity, Finite(_)) => std::cmp::Ordering::Greater,
            (Infinity, Infinity) => std::cmp::Ordering::Equal,
        }
    }
}

impl fmt::Display for ProjParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ProjParam::Finite(t) => f.write_str(&crate::rational::rat_to_string(t)),
            ProjParam::Infinity => f.write_str("inf"),
        }
    }
}

/// Skew-symmetric exact matrix; the constructor enforces `Mᵀ = -M`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewMatrix {
    m: QMatrix,
}

impl SkewMatrix {
    pub fn new(m: QMatrix) -> Result<Self> {
        if !m.is_skew() {
            return Err(Error::NonSkew);
        }
        Ok(SkewMatrix { m })
    }

    pub fn size(&self) -> usize {
        self.m.rows()
    }

    pub fn matrix(&self) -> &QMatrix {
        &self.m
    }

    pub fn rank(&self) -> usize {
        self.m.rank()
    }

    pub fn corank(&self) -> usize {
        self.size() - self.rank()
    }

    /// Exact rank and kernel basis; the rank of a skew form is even.
    pub fn rank_and_kernel(&self) -> (usize, Vec<Vec<Rat>>) {
        let rank = self.m.rank();
        debug_assert!(rank.is_multiple_of(2), "skew matrices have even rank");
        (rank, self.m.kernel_basis())
    }

    /// Value of the form on a pair of vectors.
    pub fn pair(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let my = self.m.mul_vec(y);
        x.iter()
            .zip(&my)
            .fold(Rat::zero(), |acc, (a, b)| acc + a * b)
    }
}

/// Exact rank and kernel of a skew matrix given as a plain matrix.
pub fn rank_and_kernel(m: &QMatrix) -> Result<(usize, Vec<Vec<Rat>>)> {
    Ok(SkewMatrix::new(m.clone())?.rank_and_kernel())
}

/// A pencil of skew forms `A + tB` (with `t = ∞ ↦ B`).
#[derive(Debug, Clone)]
pub struct SkewPencil {
    pub a: SkewMatrix,
    pub b: SkewMatrix,
}

impl SkewPencil {
    pub fn new(a: SkewMatrix, b: SkewMatrix) -> Self {
        assert_eq!(a.size(), b.size(), "pencil members must share a size");
        SkewPencil { a, b }
    }

    pub fn size(&self) -> usize {
        self.a.size()
    }

    pub fn member_at(&self, t: &ProjParam) -> SkewMatrix {
        match t {
            ProjParam::Infinity => self.b.clone(),
            ProjParam::Finite(t) => {
                let m = self.a.matrix().add(&self.b.matrix().scale(t));
                SkewMatrix::new(m).expect("combination of skew matrices is skew")
            }
        }
    }

    /// Generic rank of the pencil members, attained at all but finitely many
    /// parameters.
    pub fn generic_rank(&self) -> usize {
        self.generic_rank_and_minor().0
    }

    /// Bareiss elimination over `Q[t]`: the rank over the function field and
    /// one maximal minor as a polynomial in `t`.
    fn generic_rank_and_minor(&self) -> (usize, UPoly) {
        let n = self.size();
        let mut m: Vec<Vec<UPoly>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        UPoly::new(vec![
                            self.a.matrix().at(i, j).clone(),
                            self.b.matrix().at(i, j).clone(),
                        ])
                    })
                    .collect()
            })
            .collect();
        let mut prev = UPoly::one();
        let mut rank = 0;
        let mut last_pivot = UPoly::one();
        for step in 0..n {
            let Some((pi, pj)) = (step..n)
                .flat_map(|i| (step..n).map(move |j| (i, j)))
                .find(|&(i, j)| !m[i][j].is_zero())
            else {
                break;
            };
            m.swap(step, pi);
            for row in m.iter_mut() {
                row.swap(step, pj);
            }
            for i in (step + 1)..n {
                for j in (step + 1)..n {
                    let num = &(&m[step][step] * &m[i][j]) - &(&m[i][step] * &m[step][j]);
                    m[i][j] = num.div_exact(&prev);
                }
            }
            prev = m[step][step].clone();
            last_pivot = prev.clone();
            rank += 1;
        }
        (rank, last_pivot)
    }
}

/// The parameters where the rank of a pencil member drops, together with
/// the degeneracy marker for pencils spanning a single line of forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularParams {
    /// All parameters (including `∞`) where `rank(A + tB)` is below the
    /// generic rank, listed exactly and in order.
    pub params: Vec<ProjParam>,
    /// True when the two members span only one line of forms (one is a
    /// scalar multiple of the other, possibly zero). Block-structure
    /// reasoning needs a genuinely two-dimensional space, so this case is
    /// kept distinguished; the rank then drops exactly where the member
    /// vanishes.
    pub proportional: bool,
}

/// All parameters (including `∞`) where `rank(A + tB)` falls below the
/// generic rank. Candidates are the rational roots of one maximal minor —
/// a rank drop annihilates every maximal minor — and every candidate is
/// confirmed by an exact rank computation, so the list is exact.
pub fn singular_parameters(p: &SkewPencil) -> Result<SingularParams> {
    let a = p.a.matrix();
    let b = p.b.matrix();
    if a.is_zero() && b.is_zero() {
        return Err(Error::EmptyPencil);
    }
    let (m, minor) = p.generic_rank_and_minor();
    let mut params = Vec::new();
    for root in minor.rational_roots() {
        if p.member_at(&ProjParam::Finite(root.clone())).rank() < m {
            params.push(ProjParam::Finite(root));
        }
    }
    if p.b.rank() < m {
        params.push(ProjParam::Infinity);
    }
    params.sort();
    Ok(SingularParams {
        params,
        proportional: is_proportional(p),
    })
}

fn is_proportional(p: &SkewPencil) -> bool {
    let a = p.a.matrix();
    let b = p.b.matrix();
    let n = p.size();
    if a.is_zero() || b.is_zero() {
        return true;
    }
    let mut lambda: Option<Rat> = None;
    for i in 0..n {
        for j in 0..n {
            let (x, y) = (a.at(i, j), b.at(i, j));
            match (x.is_zero(), y.is_zero()) {
                (true, true) => {}
                (true, false) | (false, true) => return false,
                (false, false) => {
                    let r = y / x;
                    match &lambda {
                        None => lambda = Some(r),
                        Some(l) if *l == r => {}
                        Some(_) => return false,
                    }
                }
            }
        }
    }
    true
}

/// `L = Σ ker(A + tB)` over regular parameters, sampled deterministically
/// over small integers with singular values skipped. Requires at least
/// `size + 1` regular parameters within the budget; stabilization is
/// re-checked with one extra sample.
pub fn kernel_sum(p: &SkewPencil, sample_budget: usize) -> Result<(usize, Vec<Vec<Rat>>)> {
    if p.a.matrix().is_zero() && p.b.matrix().is_zero() {
        return Err(Error::EmptyPencil);
    }
    let n = p.size();
    let m = p.generic_rank();
    let needed = n + 1;
    let mut span = RowSpan::new();
    let mut used = 0usize;
    let mut attempts = 0usize;
    let mut candidates = sample_params();
    while used < needed + 1 {
        if attempts >= sample_budget {
            return Err(Error::InsufficientRegularParameters {
                needed: needed + 1,
                budget: sample_budget,
            });
        }
        let t = candidates.next().expect("parameter stream is infinite");
        attempts += 1;
        let member = p.member_at(&ProjParam::Finite(t));
        if member.rank() < m {
            continue; // singular parameter
        }
        let before = span.dim();
        for v in member.matrix().kernel_basis() {
            span.insert(v);
        }
        used += 1;
        if used == needed + 1 {
            assert_eq!(
                span.dim(),
                before,
                "kernel sum failed to stabilize after {} regular samples",
                needed
            );
        }
    }
    Ok((span.dim(), span.basis().to_vec()))
}

/// Deterministic stream of small integer parameters 0, 1, -1, 2, -2, ...
fn sample_params() -> impl Iterator<Item = Rat> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![rat(0)]
        } else {
            vec![rat(k), rat(-k)]
        }
    })
}

/// Dimension-level summary of the Jordan–Kronecker structure of a pencil.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilProfile {
    pub size: usize,
    pub generic_rank: usize,
    pub singular: SingularParams,
    pub kernel_sum_dim: usize,
    /// Number of singular parameter lines; every rank drop comes from a
    /// Jordan block at that line, Kronecker blocks never drop rank.
    pub jordan_line_count: usize,
}

impl PencilProfile {
    /// Half the total dimension carried by Jordan blocks,
    /// `n - m/2 - dim L`; zero exactly for an all-Kronecker pencil.
    pub fn jordan_defect(&self) -> usize {
        self.size - self.generic_rank / 2 - self.kernel_sum_dim
    }
}

/// Assemble the profile of a pencil: generic rank, singular lines,
/// kernel-sum dimension, and the Jordan line count.
pub fn jk_profile(p: &SkewPencil) -> Result<PencilProfile> {
    let singular = singular_parameters(p)?;
    let generic_rank = p.generic_rank();
    debug_assert!(generic_rank.is_multiple_of(2));
    let (kernel_sum_dim, _) = kernel_sum(p, 4 * p.size() + 16)?;
    // Kronecker blocks never drop rank, so every singular line comes from a
    // Jordan block; block reasoning needs a two-dimensional form space.
    let jordan_line_count = if singular.proportional {
        0
    } else {
        singular.params.len()
    };
    let profile = PencilProfile {
        size: p.size(),
        generic_rank,
        singular,
        kernel_sum_dim,
        jordan_line_count,
    };
    if !profile.singular.proportional {
        debug_assert!(profile.jordan_defect() >= profile.jordan_line_count);
    }
    Ok(profile)
}

/// Exact geometry at a single singular line (the hypothesis of the
/// kernel-sum dimension formula): `C` the singular member with
/// `rk C = m - 2` and a regular member of rank 2 on `ker C`.
#[derive(Debug, Clone)]
pub struct JordanLineGeometry {
    pub singular_param: ProjParam,
    pub generic_rank: usize,
    pub ker_c_dim: usize,
    pub l_dim: usize,
    pub l_cap_ker_c_dim: usize,
    /// `A(ker C, L ∩ ker C) = 0` checked exactly.
    pub pairing_vanishes: bool,
}

/// Verify the single-Jordan-line situation. Reports a descriptive error
/// when the pencil does not meet the hypothesis instead of asserting any
/// dimension formula.
pub fn jordan_line_geometry(p: &SkewPencil) -> Result<JordanLineGeometry> {
    let singular = singular_parameters(p)?;
    if singular.proportional {
        return Err(Error::InvalidConfig(
            "proportional pencil: the two-form hypothesis fails".into(),
        ));
    }
    let [line] = singular.params.as_slice() else {
        return Err(Error::InvalidConfig(format!(
            "expected exactly one singular line, found {}",
            singular.params.len()
        )));
    };
    let m = p.generic_rank();
    let c = p.member_at(line);
    if c.rank() != m - 2 {
        return Err(Error::InvalidConfig(format!(
            "singular member has rank {}, expected {}",
            c.rank(),
            m - 2
        )));
    }
    let (_, ker_c) = c.rank_and_kernel();
    // A regular member restricted to ker C must have rank exactly 2.
    let reg = sample_params()
        .map(ProjParam::Finite)
        .find(|t| t != line && p.member_at(t).rank() == m)
        .expect("regular member exists");
    let a = p.member_at(&reg);
    let restricted = QMatrix::from_fn(ker_c.len(), ker_c.len(), |i, j| {
        a.pair(&ker_c[i], &ker_c[j])
    });
    if restricted.rank() != 2 {
        return Err(Error::InvalidConfig(format!(
            "regular member has rank {} on ker C, hypothesis needs 2",
            restricted.rank()
        )));
    }
    let (l_dim, l_basis) = kernel_sum(p, 4 * p.size() + 16)?;
    let inter = span_intersection(&l_basis, &ker_c);
    let pairing_vanishes = ker_c
        .iter()
        .all(|u| inter.iter().all(|v| a.pair(u, v).is_zero()));
    Ok(JordanLineGeometry {
        singular_param: line.clone(),
        generic_rank: m,
        ker_c_dim: ker_c.len(),
        l_dim,
        l_cap_ker_c_dim: inter.len(),
        pairing_vanishes,
    })
}

/// Basis of the intersection of two spans given by bases.
pub fn span_intersection(u: &[Vec<Rat>], w: &[Vec<Rat>]) -> Vec<Vec<Rat>> {
    if u.is_empty() || w.is_empty() {
        return Vec::new();
    }
    let n = u[0].len();
    let cols = u.len() + w.len();
    let stacked = QMatrix::from_fn(n, cols, |i, j| {
        if j < u.len() {
            u[j][i].clone()
        } else {
            w[j - u.len()][i].clone()
        }
    });
    let mut span = RowSpan::new();
    for combo in stacked.kernel_basis() {
        let mut v = vec![Rat::zero(); n];
        for (j, c) in combo.iter().take(u.len()).enumerate() {
            if !c.is_zero() {
                for i in 0..n {
                    v[i] += c * &u[j][i];
                }
            }
        }
        span.insert(v);
    }
    span.basis().to_vec()
}

// ---------------------------------------------------------------------------
// Dense univariate polynomials over Q, enough for fraction-free elimination
// and exact rational root finding.
// ---------------------------------------------------------------------------

/// Univariate polynomial with exact rational coefficients, ascending order,
/// trailing zeros stripped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPoly {
    coeffs: Vec<Rat>,
}

impl UPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UPoly { coeffs }
    }

    pub fn zero() -> Self {
        UPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        UPoly {
            coeffs: vec![Rat::one()],
        }
    }

    pub fn constant(c: Rat) -> Self {
        UPoly::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> UPoly {
        UPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rat::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    fn add(&self, other: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(Rat::zero);
                    a + b
                })
                .collect(),
        )
    }

    fn neg(&self) -> UPoly {
        UPoly {
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    fn mul(&self, other: &UPoly) -> UPoly {
        if self.is_zero() || other.is_zero() {
            return UPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        UPoly::new(out)
    }

    /// Long division; the divisor must be nonzero.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        assert!(!d.is_zero(), "division by the zero polynomial");
        let dd = d.degree().unwrap();
        let lead = d.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        let mut quo = vec![Rat::zero(); self.coeffs.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1;
            let c = rem[k].clone();
            if c.is_zero() {
                rem.pop();
                continue;
            }
            let q = &c / &lead;
            quo[k - dd] = q.clone();
            for i in 0..=dd {
                let delta = &q * &d.coeffs[i];
                rem[k - dd + i] = &rem[k - dd + i] - &delta;
            }
            rem.pop();
        }
        (UPoly::new(quo), UPoly::new(rem))
    }

    /// Exact division; the remainder must vanish (used inside fraction-free
    /// elimination where divisibility is guaranteed).
    pub fn div_exact(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.div_rem(d);
        assert!(r.is_zero(), "fraction-free division left a remainder");
        q
    }

    fn monic(&self) -> UPoly {
        match self.degree() {
            None => UPoly::zero(),
            Some(d) => {
                let lead = self.coeffs[d].clone();
                UPoly::new(self.coeffs.iter().map(|c| c / &lead).collect())
            }
        }
    }

    pub fn gcd(&self, other: &UPoly) -> UPoly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// All rational roots, exactly. The square-free part is transformed to a
    /// monic integer polynomial whose rational roots are integers; real
    /// roots are isolated with Sturm sequences at half-integer endpoints and
    /// the lone integer candidate of each unit interval is tested.
    pub fn rational_roots(&self) -> Vec<Rat> {
        let Some(deg) = self.degree() else {
            return Vec::new(); // identically zero: callers treat separately
        };
        if deg == 0 {
            return Vec::new();
        }
        let sq_free = {
            let der = self.derivative();
            let g = self.gcd(&der);
            self.div_rem(&g).0
        };
        // Clear denominators to an integer polynomial.
        let lcm = crate::rational::denominator_lcm(sq_free.coeffs.iter());
        let int_coeffs: Vec<BigInt> = sq_free
            .coeffs
            .iter()
            .map(|c| (c * Rat::from_integer(lcm.clone())).numer().clone())
            .collect();
        let d = int_coeffs.len() - 1;
        let lead = int_coeffs[d].clone();
        // Monic transform: u = lead·t turns p into the monic integer
        // polynomial q(u) = lead^{d-1}·p(u/lead) with coefficients
        // a_k·lead^{d-1-k} (and 1 in degree d).
        let mut monic_coeffs: Vec<Rat> = int_coeffs
            .iter()
            .enumerate()
            .map(|(k, a)| {
                let mut pw = BigInt::one();
                for _ in k..d.saturating_sub(1) {
                    pw *= &lead;
                }
                Rat::from_integer(a * pw)
            })
            .collect();
        monic_coeffs[d] = Rat::one();
        let q = UPoly::new(monic_coeffs);
        let mut roots: Vec<Rat> = q
            .integer_roots()
            .into_iter()
            .map(|u| Rat::new(u, lead.clone()))
            .collect();
        roots.sort();
        roots.dedup();
        roots.retain(|r| self.eval(r).is_zero());
        roots
    }

    /// Integer roots of a monic square-free integer polynomial via Sturm
    /// bisection on intervals with half-integer endpoints.
    fn integer_roots(&self) -> Vec<BigInt> {
        let Some(d) = self.degree() else {
            return Vec::new();
        };
        if d == 0 {
            return Vec::new();
        }
        let sturm = self.sturm_sequence();
        // Cauchy bound: all roots lie in |x| <= 1 + max |a_i|.
        let bound: BigInt = self
            .coeffs
            .iter()
            .map(|c| c.numer().abs())
            .max()
            .unwrap_or_else(BigInt::zero)
            + BigInt::from(2);
        let half = Rat::new(BigInt::one(), BigInt::from(2));
        let count = |lo: &Rat, hi: &Rat| -> usize {
            sign_variations(&sturm, lo) - sign_variations(&sturm, hi)
        };
        let mut out = Vec::new();
        let mut stack = vec![(-bound.clone(), bound.clone())];
        while let Some((a, b)) = stack.pop() {
            let lo = Rat::from_integer(a.clone()) - &half;
            let hi = Rat::from_integer(b.clone()) + &half;
            if count(&lo, &hi) == 0 {
                continue;
            }
            if a == b {
                let v = Rat::from_integer(a.clone());
                if self.eval(&v).is_zero() {
                    out.push(a);
                }
                continue;
            }
            // Floor division keeps mid in [a, b-1] on negative ranges too.
            let mid = num_integer::Integer::div_floor(&(&a + &b), &BigInt::from(2));
            stack.push((a.clone(), mid.clone()));
            stack.push((mid + BigInt::one(), b));
        }
        out.sort();
        out
    }

    fn sturm_sequence(&self) -> Vec<UPoly> {
        let mut seq = vec![self.clone(), self.derivative()];
        loop {
            let n = seq.len();
            if seq[n - 1].is_zero() {
                seq.pop();
                break;
            }
            let (_, r) = seq[n - 2].div_rem(&seq[n - 1]);
            if r.is_zero() {
                break;
            }
            seq.push(r.neg());
        }
        seq
    }
}

fn sign_variations(seq: &[UPoly], x: &Rat) -> usize {
    let mut vars = 0;
    let mut last: Option<bool> = None;
    for p in seq {
        let v = p.eval(x);
        if v.is_zero() {
            continue;
        }
        let pos = v.is_positive();
        if let Some(prev) = last {
            if prev != pos {
                vars += 1;
            }
        }
        last = Some(pos);
    }
    vars
}

impl std::ops::Add for &UPoly {
    type Output = UPoly;
    fn add(self, rhs: &UPoly) -> UPoly {
        UPoly::add(self, rhs)
    }
}

impl std::ops::Sub for &UPoly {
    type Output = UPoly;
    fn sub(self, rhs: &UPoly) -> UPoly {
        self.add(&rhs.neg())
    }
}

impl std::ops::Mul for &UPoly {
    type Output = UPoly;
    fn mul(self, rhs: &UPoly) -> UPoly {
        UPoly::mul(self, rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn qm(rows: &[&[i64]]) -> QMatrix {
        QMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| rat(x)).collect())
                .collect(),
        )
    }

    fn skew(rows: &[&[i64]]) -> SkewMatrix {
        SkewMatrix::new(qm(rows)).unwrap()
    }

    #[test]
    fn rank_and_kernel_basics() {
        let (rank, kernel) = rank_and_kernel(&qm(&[&[0, 0, 0], &[0, 0, 0], &[0, 0, 0]])).unwrap();
        assert_eq!(rank, 0);
        assert_eq!(kernel.len(), 3);
        let (rank, kernel) = rank_and_kernel(&qm(&[&[0, 1], &[-1, 0]])).unwrap();
        assert_eq!(rank, 2);
        assert!(kernel.is_empty());
        assert!(matches!(
            rank_and_kernel(&qm(&[&[0, 1], &[1, 0]])),
            Err(Error::NonSkew)
        ));
    }

    fn kronecker3() -> SkewPencil {
        // One Kronecker block of size 3: rank 2 for every member.
        let a = skew(&[&[0, 1, 0], &[-1, 0, 0], &[0, 0, 0]]);
        let b = skew(&[&[0, 0, 0], &[0, 0, 1], &[0, -1, 0]]);
        SkewPencil::new(a, b)
    }

    #[test]
    fn singular_parameters_examples() {
        // A + tB = (1-t)A: singular exactly at t = 1.
        let a = skew(&[&[0, 1], &[-1, 0]]);
        let b = skew(&[&[0, -1], &[1, 0]]);
        // (A, -A) is a proportional pencil: rank drops exactly at t = 1.
        let p = SkewPencil::new(a.clone(), b);
        assert_eq!(
            singular_parameters(&p).unwrap(),
            SingularParams {
                params: vec![ProjParam::Finite(rat(1))],
                proportional: true,
            }
        );

        // Two Jordan lines: diag((1+t)A, (1+2t)A).
        let a2 = skew(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 1], &[0, 0, -1, 0]]);
        let b2 = skew(&[&[0, 1, 0, 0], &[-1, 0, 0, 0], &[0, 0, 0, 2], &[0, 0, -2, 0]]);
        let p = SkewPencil::new(a2, b2);
        assert_eq!(
            singular_parameters(&p).unwrap(),
            SingularParams {
                params: vec![ProjParam::Finite(rat(-1)), ProjParam::Finite(ratio(-1, 2))],
                proportional: false,
            }
        );

        // All-Kronecker pencil: no singular parameters at all.
        assert_eq!(
            singular_parameters(&kronecker3()).unwrap(),
            SingularParams {
                params: vec![],
                proportional: false,
            }
        );

        // Zero pencil is rejected.
        let z = SkewMatrix::new(QMatrix::zeros(2, 2)).unwrap();
        assert!(matches!(
            singular_parameters(&SkewPencil::new(z.clone(), z)),
            Err(Error::EmptyPencil)
        ));
    }

    #[test]
    fn kernel_sum_of_kronecker_block() {
        let p = kronecker3();
        let (dim, basis) = kernel_sum(&p, 32).unwrap();
        // corank + m/2 = 1 + 1 = 2: the kernels sweep span{v1, v3}.
        assert_eq!(dim, 2);
        let mut span = RowSpan::new();
        for v in basis {
            span.insert(v);
        }
        assert!(span.contains(&[rat(1), rat(0), rat(0)]));
        assert!(span.contains(&[rat(0), rat(0), rat(1)]));
        assert!(!span.contains(&[rat(0), rat(1), rat(0)]));
    }

    #[test]
    fn kernel_sum_needs_a_nonzero_member() {
        let z = SkewMatrix::new(QMatrix::zeros(3, 3)).unwrap();
        assert!(matches!(
            kernel_sum(&SkewPencil::new(z.clone(), z), 16),
            Err(Error::EmptyPencil)
        ));
    }

    /// Kronecker(3) ⊕ Jordan(2) at t = -1: the single-Jordan-line pencil.
    fn single_jordan_line() -> SkewPencil {
        let mut a = QMatrix::zeros(5, 5);
        let mut b = QMatrix::zeros(5, 5);
        // Kronecker block on coordinates 0..3.
        a.set(0, 1, rat(1));
        a.set(1, 0, rat(-1));
        b.set(1, 2, rat(1));
        b.set(2, 1, rat(-1));
        // Jordan block on coordinates 3..5, singular at t = -1.
        a.set(3, 4, rat(1));
        a.set(4, 3, rat(-1));
        b.set(3, 4, rat(1));
        b.set(4, 3, rat(-1));
        SkewPencil::new(SkewMatrix::new(a).unwrap(), SkewMatrix::new(b).unwrap())
    }

    #[test]
    fn profile_of_single_jordan_line_pencil() {
        let p = single_jordan_line();
        let profile = jk_profile(&p).unwrap();
        assert_eq!(profile.size, 5);
        assert_eq!(profile.generic_rank, 4);
        assert_eq!(
            profile.singular,
            SingularParams {
                params: vec![ProjParam::Finite(rat(-1))],
                proportional: false,
            }
        );
        assert_eq!(profile.jordan_line_count, 1);
        // dim L = n - m/2 - 1 = 5 - 2 - 1 = 2.
        assert_eq!(profile.kernel_sum_dim, 2);
        assert_eq!(profile.jordan_defect(), 1);

        let geom = jordan_line_geometry(&p).unwrap();
        assert_eq!(geom.ker_c_dim, 3);
        assert_eq!(geom.l_dim, 2);
        // dim(L ∩ ker C) = n - m = 1.
        assert_eq!(geom.l_cap_ker_c_dim, 1);
        assert!(geom.pairing_vanishes);
    }

    #[test]
    fn jordan_geometry_rejects_all_kronecker_pencils() {
        assert!(jordan_line_geometry(&kronecker3()).is_err());
        // Proportional pencils fail the two-form hypothesis outright.
        let a = skew(&[&[0, 1], &[-1, 0]]);
        let b = skew(&[&[0, 3], &[-3, 0]]);
        assert!(matches!(
            jordan_line_geometry(&SkewPencil::new(a, b)),
            Err(Error::InvalidConfig(_))
        ));
    }

    #[test]
    fn kernel_sum_budget_exhaustion() {
        assert!(matches!(
            kernel_sum(&kronecker3(), 2),
            Err(Error::InsufficientRegularParameters { .. })
        ));
    }

    #[test]
    fn profile_of_kronecker3() {
        let profile = jk_profile(&kronecker3()).unwrap();
        assert_eq!(profile.generic_rank, 2);
        assert_eq!(profile.jordan_line_count, 0);
        assert_eq!(profile.kernel_sum_dim, 2); // n - m/2
        assert_eq!(profile.jordan_defect(), 0);
    }

    #[test]
    fn upoly_division_and_gcd() {
        // (t-2)(t+3) = t² + t - 6
        let p = UPoly::new(vec![rat(-6), rat(1), rat(1)]);
        let d = UPoly::new(vec![rat(-2), rat(1)]);
        let (q, r) = p.div_rem(&d);
        assert!(r.is_zero());
        assert_eq!(q, UPoly::new(vec![rat(3), rat(1)]));
        let g = p.gcd(&UPoly::new(vec![rat(2), rat(-3), rat(1)])); // (t-1)(t-2)
        assert_eq!(g, UPoly::new(vec![rat(-2), rat(1)]));
    }

    #[test]
    fn rational_roots_are_found_exactly() {
        // (t - 2)(t + 3)(2t - 5)(t² + 1)
        let p = [
            UPoly::new(vec![rat(-2), rat(1)]),
            UPoly::new(vec![rat(3), rat(1)]),
            UPoly::new(vec![rat(-5), rat(2)]),
            UPoly::new(vec![rat(1), rat(0), rat(1)]),
        ]
        .iter()
        .fold(UPoly::one(), |acc, f| &acc * f);
        let roots = p.rational_roots();
        assert_eq!(roots, vec![rat(-3), rat(2), ratio(5, 2)]);
        // A squared factor must not hide the root.
        let sq = &p * &UPoly::new(vec![rat(-2), rat(1)]);
        assert_eq!(sq.rational_roots(), vec![rat(-3), rat(2), ratio(5, 2)]);
        // No rational roots at all.
        assert!(UPoly::new(vec![rat(1), rat(0), rat(1)])
            .rational_roots()
            .is_empty());
    }
}
