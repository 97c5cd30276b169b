//! The Lie–Poisson bracket on `S(g)`, the contracted brackets of a
//! 2-splitting, the one-parameter family they span, and Poisson tensors as
//! exact skew matrices.
//!
//! A bracket is represented by its table on basis pairs; the extension to
//! polynomials is the derivation rule
//! `{P,Q} = Σ_{i<j} {x_i,x_j} (∂_iP ∂_jQ - ∂_jP ∂_iQ)`. Tables are immutable
//! once built, so bracket evaluation is pure and freely parallelizable.

use crate::error::Result;
use crate::linalg::QMatrix;
use crate::pencil::{SkewMatrix, SkewPencil};
use crate::polyring::Poly;
use crate::rational::Rat;
use crate::rootdata::{LieAlgebraData, Splitting};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Parameter of the bracket family: a finite rational `t` or `∞`.
///
/// `t = 1` is the Lie–Poisson bracket, `t = 0` the contraction onto
/// `h ⋉ r^ab`, and `∞` the contraction onto `r ⋉ h^ab`. The same projective
/// parameter indexes the members of a pencil of skew forms.
pub use crate::pencil::ProjParam as BracketParam;

/// A Poisson bracket determined by its values on basis pairs.
#[derive(Debug, Clone)]
pub struct BracketKernel {
    dim: usize,
    /// `{x_i, x_j}` for `i < j`, as sparse coordinate lists.
    table: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
}

impl BracketKernel {
    /// The Lie–Poisson bracket: `{x, y} = [x, y]` on degree-1 elements.
    pub fn lie(g: &LieAlgebraData) -> Self {
        BracketKernel {
            dim: g.dim,
            table: g.constants().clone(),
        }
    }

    /// The contracted bracket at one end of the family. For `end = 0`:
    /// full bracket on `h×h`, the `r`-component on mixed pairs, zero on
    /// `r×r`; the `∞` end swaps the roles of the summands.
    fn contraction(g: &LieAlgebraData, s: &Splitting, infinity_end: bool) -> Self {
        let h_mask = s.h_mask(g.dim);
        let mut table = BTreeMap::new();
        for (&(i, j), terms) in g.constants() {
            let keep_full = if infinity_end {
                !h_mask[i] && !h_mask[j]
            } else {
                h_mask[i] && h_mask[j]
            };
            let drop_all = if infinity_end {
                h_mask[i] && h_mask[j]
            } else {
                !h_mask[i] && !h_mask[j]
            };
            if drop_all {
                continue;
            }
            let filtered: Vec<(usize, Rat)> = if keep_full {
                terms.clone()
            } else {
                // mixed pair: project onto the complementary summand
                terms
                    .iter()
                    .filter(|(k, _)| h_mask[*k] == infinity_end)
                    .cloned()
                    .collect()
            };
            if !filtered.is_empty() {
                table.insert((i, j), filtered);
            }
        }
        BracketKernel { dim: g.dim, table }
    }

    pub fn contraction_zero(g: &LieAlgebraData, s: &Splitting) -> Self {
        Self::contraction(g, s, false)
    }

    pub fn contraction_infinity(g: &LieAlgebraData, s: &Splitting) -> Self {
        Self::contraction(g, s, true)
    }

    /// Member of the family `{,}_t = {,}_0 + t{,}_∞`. The `∞` end is the
    /// contracted bracket of `r ⋉ h^ab` directly, never a limit.
    pub fn family(g: &LieAlgebraData, s: &Splitting, t: &BracketParam) -> Self {
        match t {
            BracketParam::Infinity => Self::contraction_infinity(g, s),
            BracketParam::Finite(t) if t.is_zero() => Self::contraction_zero(g, s),
            BracketParam::Finite(t) => {
                let zero_end = Self::contraction_zero(g, s);
                let inf_end = Self::contraction_infinity(g, s);
                let mut table = zero_end.table;
                for ((i, j), terms) in inf_end.table {
                    let entry = table.entry((i, j)).or_default();
                    for (k, c) in terms {
                        let scaled = &c * t;
                        match entry.iter_mut().find(|(kk, _)| *kk == k) {
                            Some((_, v)) => *v = &*v + &scaled,
                            None => entry.push((k, scaled)),
                        }
                    }
                    entry.retain(|(_, c)| !c.is_zero());
                }
                table.retain(|_, v| !v.is_empty());
                BracketKernel { dim: g.dim, table }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `{x_i, x_j}` with the sign handled for either order.
    pub fn pair(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self.table.get(&(i, j)).cloned().unwrap_or_default(),
            Ordering::Greater => self
                .table
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
        }
    }

    /// Bracket of polynomials given precomputed partial derivatives.
    pub fn bracket_via_partials(&self, dp: &[Poly], dq: &[Poly]) -> Poly {
        let mut out = Poly::zero(self.dim);
        for (&(i, j), terms) in &self.table {
            let left = (!dp[i].is_zero() && !dq[j].is_zero()).then(|| &dp[i] * &dq[j]);
            let right = (!dp[j].is_zero() && !dq[i].is_zero()).then(|| &dp[j] * &dq[i]);
            let a = match (left, right) {
                (None, None) => continue,
                (Some(x), None) => x,
                (None, Some(y)) => y.neg(),
                (Some(x), Some(y)) => &x - &y,
            };
            if a.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out.add_assign_scaled_var_shift(&a, *k, c);
            }
        }
        out
    }

    pub fn bracket(&self, p: &Poly, q: &Poly) -> Poly {
        assert_eq!(p.nvars(), self.dim);
        assert_eq!(q.nvars(), self.dim);
        let dp: Vec<Poly> = (0..self.dim).map(|i| p.partial(i)).collect();
        let dq: Vec<Poly> = (0..self.dim).map(|i| q.partial(i)).collect();
        self.bracket_via_partials(&dp, &dq)
    }

    /// The Poisson tensor at a point: entry `(i,j)` is `{x_i,x_j}` evaluated
    /// at `ξ`. Always exactly skew.
    pub fn tensor_at(&self, xi: &[Rat]) -> SkewMatrix {
        assert_eq!(xi.len(), self.dim);
        let mut m = QMatrix::zeros(self.dim, self.dim);
        for (&(i, j), terms) in &self.table {
            let mut v = Rat::zero();
            for (k, c) in terms {
                if !xi[*k].is_zero() {
                    v += c * &xi[*k];
                }
            }
            if !v.is_zero() {
                m.set(i, j, v.clone());
                m.set(j, i, -v);
            }
        }
        SkewMatrix::new(m).expect("bracket tensors are skew by construction")
    }

    /// Exact Jacobi identity on all basis triples.
    pub fn jacobi_holds(&self) -> bool {
        let n = self.dim;
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    let mut acc = vec![Rat::zero(); n];
                    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                        for (m, cm) in self.pair(b, c) {
                            for (t, ct) in self.pair(a, m) {
                                acc[t] += &cm * &ct;
                            }
                        }
                    }
                    if acc.iter().any(|x| !x.is_zero()) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// `{P, Q}` under the Lie–Poisson bracket of `g`.
pub fn lie_poisson(p: &Poly, q: &Poly, g: &LieAlgebraData) -> Poly {
    BracketKernel::lie(g).bracket(p, q)
}

/// `{P, Q}_t` for the family attached to a splitting.
pub fn bracket_t(p: &Poly, q: &Poly, g: &LieAlgebraData, s: &Splitting, t: &BracketParam) -> Poly {
    BracketKernel::family(g, s, t).bracket(p, q)
}

/// `π_t(ξ)` as an exact skew matrix.
pub fn tensor_at(
    g: &LieAlgebraData,
    s: &Splitting,
    t: &BracketParam,
    xi: &[Rat],
) -> Result<SkewMatrix> {
    Ok(BracketKernel::family(g, s, t).tensor_at(xi))
}

/// The pair `(π_0(ξ), π_∞(ξ))`; members at finite `t` are `π_0 + t·π_∞`.
pub fn pencil_at(g: &LieAlgebraData, s: &Splitting, xi: &[Rat]) -> SkewPencil {
    let a = BracketKernel::contraction_zero(g, s).tensor_at(xi);
    let b = BracketKernel::contraction_infinity(g, s).tensor_at(xi);
    SkewPencil::new(a, b)
}
