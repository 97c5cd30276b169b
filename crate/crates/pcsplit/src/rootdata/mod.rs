//! Classical Lie algebras with exact structure constants, the invariant
//! trace form, 2-splittings, and distinguished points.
//!
//! Everything is derived from explicit matrix realizations in the defining
//! representation: structure constants are commutators of concrete matrices
//! expressed back in the chosen basis, the invariant form is the trace form,
//! and root data (weights, simple roots, the highest root and its
//! coefficients) are computed from the adjoint action rather than hard-coded.
//! The fixed basis order is: positive root vectors, Cartan elements, negative
//! root vectors (and for `g×g`, the first copy before the second).

mod classical;

pub use classical::{build_classical, build_double};

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::{rat, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Classical series label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Series {
    A,
    B,
    C,
    D,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            _ => None,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// Ambient algebra kind: a simple classical algebra or the direct sum of two
/// copies of one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Simple(Series),
    Double(Series),
}

impl Family {
    pub fn series(self) -> Series {
        match self {
            Family::Simple(s) | Family::Double(s) => s,
        }
    }

    pub fn is_double(self) -> bool {
        matches!(self, Family::Double(_))
    }
}

/// Which summand of an attached splitting a basis element belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Part {
    H,
    R,
}

/// One element of the fixed ordered basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub index: usize,
    pub label: String,
    /// None until a splitting is attached.
    pub part: Option<Part>,
}

/// Supported splitting scenarios.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scenario {
    /// `g = b ⊕ u_-`, a Borel against the opposite nilradical.
    BorelOpposite,
    /// `g = b ⊕ g_0`, fixed points of a maximal-rank involution (type A).
    Involution,
    /// `g×g = (Δ_t^- ⊕ (u × u_-)) ⊕ Δ_g`.
    Manin,
}

impl Scenario {
    pub fn name(self) -> &'static str {
        match self {
            Scenario::BorelOpposite => "borel",
            Scenario::Involution => "involution",
            Scenario::Manin => "manin",
        }
    }

    pub fn from_name(s: &str) -> Option<Scenario> {
        match s {
            "borel" => Some(Scenario::BorelOpposite),
            "involution" => Some(Scenario::Involution),
            "manin" => Some(Scenario::Manin),
            _ => None,
        }
    }
}

impl fmt::Display for Scenario {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Partition of the basis into two bracket-closed spans.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Splitting {
    pub h_indices: Vec<usize>,
    pub r_indices: Vec<usize>,
    pub scenario: Scenario,
}

impl Splitting {
    /// Mask over the basis: true on the first summand.
    pub fn h_mask(&self, dim: usize) -> Vec<bool> {
        let mut mask = vec![false; dim];
        for &i in &self.h_indices {
            mask[i] = true;
        }
        mask
    }
}

/// A point of `g*` given by its values on the fixed basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointOnDual(pub Vec<Rat>);

impl PointOnDual {
    pub fn coords(&self) -> &[Rat] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }
}

/// One positive root with its paired basis vectors and weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootInfo {
    /// Basis index of the root vector in `u`.
    pub e_index: usize,
    /// Basis index of the opposite root vector in `u_-`.
    pub f_index: usize,
    /// Values of the root on the Cartan basis.
    pub weight: Vec<Rat>,
}

/// Root bookkeeping extracted from the adjoint action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootData {
    pub roots: Vec<RootInfo>,
    /// Positions (into `roots`) of the simple roots, in basis order.
    pub simple: Vec<usize>,
    /// Position (into `roots`) of the highest root.
    pub highest: usize,
    /// Coefficients of the highest root over the simple roots.
    pub highest_coeffs: Vec<i64>,
}

/// A classical Lie algebra (or a double) with exact structure constants.
#[derive(Debug, Clone)]
pub struct LieAlgebraData {
    pub family: Family,
    /// Rank of the ambient algebra (twice the simple rank for a double).
    pub rank: usize,
    pub dim: usize,
    pub basis: Vec<BasisElement>,
    /// `[x_i, x_j] = Σ_k c·x_k`, stored for `i < j` only.
    constants: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
    /// Trace form of the defining representation on basis pairs.
    pub form: QMatrix,
    /// Defining representation matrices, when the algebra was built from one.
    pub rep: Option<Vec<QMatrix>>,
    pub root_data: Option<RootData>,
    /// Number of positive-root vectors leading the basis (simple algebras).
    pub u_count: usize,
}

impl LieAlgebraData {
    /// The magic number `b(g) = (dim g + ind g)/2`; for these reductive
    /// algebras the index equals the rank.
    pub fn b_magic(&self) -> usize {
        (self.dim + self.rank) / 2
    }

    pub(crate) fn new_raw(
        family: Family,
        rank: usize,
        labels: Vec<String>,
        constants: BTreeMap<(usize, usize), Vec<(usize, Rat)>>,
        form: QMatrix,
        rep: Option<Vec<QMatrix>>,
        root_data: Option<RootData>,
        u_count: usize,
    ) -> Self {
        let dim = labels.len();
        let basis = labels
            .into_iter()
            .enumerate()
            .map(|(index, label)| BasisElement {
                index,
                label,
                part: None,
            })
            .collect();
        LieAlgebraData {
            family,
            rank,
            dim,
            basis,
            constants,
            form,
            rep,
            root_data,
            u_count,
        }
    }

    pub fn constants(&self) -> &BTreeMap<(usize, usize), Vec<(usize, Rat)>> {
        &self.constants
    }

    /// `[x_i, x_j]` as a sparse coordinate list; antisymmetry is structural.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<(usize, Rat)> {
        use std::cmp::Ordering;
        match i.cmp(&j) {
            Ordering::Equal => Vec::new(),
            Ordering::Less => self.constants.get(&(i, j)).cloned().unwrap_or_default(),
            Ordering::Greater => self
                .constants
                .get(&(j, i))
                .map(|v| v.iter().map(|(k, c)| (*k, -c.clone())).collect())
                .unwrap_or_default(),
        }
    }

    /// Bilinear extension of the bracket to coordinate vectors.
    pub fn bracket_vectors(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let mut out = vec![Rat::zero(); self.dim];
        for ((i, j), terms) in &self.constants {
            let a = &x[*i] * &y[*j] - &x[*j] * &y[*i];
            if a.is_zero() {
                continue;
            }
            for (k, c) in terms {
                out[*k] += &a * c;
            }
        }
        out
    }

    /// Is the span of these basis indices closed under the bracket?
    pub fn span_bracket_closed(&self, indices: &[usize]) -> bool {
        let inside = {
            let mut v = vec![false; self.dim];
            for &i in indices {
                v[i] = true;
            }
            v
        };
        for (a, &i) in indices.iter().enumerate() {
            for &j in &indices[a + 1..] {
                if self
                    .bracket_basis(i, j)
                    .iter()
                    .any(|(k, c)| !c.is_zero() && !inside[*k])
                {
                    return false;
                }
            }
        }
        true
    }

    /// Tag every basis element with its summand under `s`.
    pub fn attach_splitting(&mut self, s: &Splitting) {
        for b in &mut self.basis {
            b.part = None;
        }
        for &i in &s.h_indices {
            self.basis[i].part = Some(Part::H);
        }
        for &i in &s.r_indices {
            self.basis[i].part = Some(Part::R);
        }
    }

    /// Identify an element of `g` with a point of `g*` via the stored
    /// invariant form: `ξ(x_i) = form(v, x_i)`.
    pub fn point_from_element(&self, v: &[Rat]) -> PointOnDual {
        PointOnDual(self.form.mul_vec(v))
    }

    /// Rebuild the algebra in a new basis. `p` has the new basis vectors as
    /// columns (in old coordinates); returns the new algebra together with
    /// the substitution matrix whose row `i` expresses the old variable
    /// `x_i` in the new variables, suitable for
    /// [`crate::polyring::Poly::substitute_linear`].
    pub fn change_basis(
        &self,
        p: &QMatrix,
        family: Family,
        labels: Vec<String>,
    ) -> Result<(LieAlgebraData, QMatrix)> {
        assert_eq!(p.rows(), self.dim);
        assert_eq!(p.cols(), self.dim);
        assert_eq!(labels.len(), self.dim);
        let p_inv = p.inverse()?;
        let n = self.dim;
        let mut constants = BTreeMap::new();
        for a in 0..n {
            for b in (a + 1)..n {
                // [y_a, y_b] in old coordinates, then back through p^{-1}.
                let ya: Vec<Rat> = (0..n).map(|i| p.at(i, a).clone()).collect();
                let yb: Vec<Rat> = (0..n).map(|i| p.at(i, b).clone()).collect();
                let w = self.bracket_vectors(&ya, &yb);
                let coords = p_inv.mul_vec(&w);
                let entry: Vec<(usize, Rat)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, c)| !c.is_zero())
                    .collect();
                if !entry.is_empty() {
                    constants.insert((a, b), entry);
                }
            }
        }
        let form = p.transpose().mul(&self.form).mul(p);
        let rep = self.rep.as_ref().map(|mats| {
            (0..n)
                .map(|a| {
                    let mut acc = QMatrix::zeros(mats[0].rows(), mats[0].cols());
                    for (i, m) in mats.iter().enumerate() {
                        if !p.at(i, a).is_zero() {
                            acc = acc.add(&m.scale(p.at(i, a)));
                        }
                    }
                    acc
                })
                .collect()
        });
        let new = LieAlgebraData::new_raw(
            family,
            self.rank,
            labels,
            constants,
            form,
            rep,
            None,
            self.u_count,
        );
        // Row i of the substitution matrix: x_i = Σ_j (p^{-1})_{ji} y_j.
        let old_in_new = p_inv.transpose();
        Ok((new, old_in_new))
    }
}

/// Outcome of one structural validation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationCheck {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

/// Per-invariant validation report; `pass` means every check holds exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<ValidationCheck>,
}

impl ValidationReport {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

/// Check antisymmetry conventions, the Jacobi identity on every basis
/// triple, invariance and nondegeneracy of the stored form, and the
/// classical dimension formula. Failures become report entries, not errors.
pub fn validate_structure(g: &LieAlgebraData) -> ValidationReport {
    let n = g.dim;
    let mut checks = Vec::new();

    let shape_ok = g.constants.keys().all(|&(i, j)| i < j && j < n)
        && g.constants
            .values()
            .all(|v| v.iter().all(|(k, c)| *k < n && !c.is_zero()));
    checks.push(ValidationCheck {
        name: "antisymmetry".into(),
        pass: shape_ok,
        detail: "constants stored once per unordered pair, no zero entries".into(),
    });

    let mut jacobi_fail = None;
    'outer: for i in 0..n {
        for j in (i + 1)..n {
            for k in (j + 1)..n {
                let mut acc = vec![Rat::zero(); n];
                for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
                    // [x_a, [x_b, x_c]]
                    for (m, cm) in g.bracket_basis(b, c) {
                        for (t, ct) in g.bracket_basis(a, m) {
                            acc[t] += &cm * &ct;
                        }
                    }
                }
                if acc.iter().any(|x| !x.is_zero()) {
                    jacobi_fail = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    checks.push(ValidationCheck {
        name: "jacobi".into(),
        pass: jacobi_fail.is_none(),
        detail: match jacobi_fail {
            None => "holds on all basis triples".into(),
            Some((i, j, k)) => format!("fails on triple ({i},{j},{k})"),
        },
    });

    let mut invariance_fail = None;
    'outer2: for i in 0..n {
        for j in 0..n {
            for k in j..n {
                // form([x_i, x_j], x_k) + form(x_j, [x_i, x_k]) = 0
                let mut acc = Rat::zero();
                for (m, c) in g.bracket_basis(i, j) {
                    acc += &c * g.form.at(m, k);
                }
                for (m, c) in g.bracket_basis(i, k) {
                    acc += &c * g.form.at(j, m);
                }
                if !acc.is_zero() {
                    invariance_fail = Some((i, j, k));
                    break 'outer2;
                }
            }
        }
    }
    checks.push(ValidationCheck {
        name: "form_invariance".into(),
        pass: invariance_fail.is_none(),
        detail: match invariance_fail {
            None => "form([x,y],z) + form(y,[x,z]) = 0 on all triples".into(),
            Some(t) => format!("fails on triple {:?}", t),
        },
    });

    let nondeg = g.form.rank() == n;
    checks.push(ValidationCheck {
        name: "form_nondegenerate".into(),
        pass: nondeg,
        detail: format!("rank {} of {}", g.form.rank(), n),
    });

    let (l, expected_dim) = match g.family {
        Family::Simple(s) => (g.rank, classical_dim(s, g.rank)),
        Family::Double(s) => (g.rank, classical_dim(s, g.rank / 2).map(|d| 2 * d)),
    };
    let dims_ok = Some(g.dim) == expected_dim && l <= g.dim;
    checks.push(ValidationCheck {
        name: "dimension_formula".into(),
        pass: dims_ok,
        detail: format!("dim {} rank {}", g.dim, g.rank),
    });

    ValidationReport { checks }
}

fn classical_dim(s: Series, l: usize) -> Option<usize> {
    match s {
        Series::A => Some((l + 1) * (l + 1) - 1),
        Series::B => Some(2 * l * l + l),
        Series::C => Some(2 * l * l + l),
        Series::D => Some(2 * l * l - l),
    }
}

/// The splitting `(h, r) = (b, u_-)`.
pub fn splitting_borel_opposite(g: &LieAlgebraData) -> Splitting {
    assert!(
        !g.family.is_double(),
        "borel splitting applies to a simple algebra"
    );
    let l = g.rank;
    let u = g.u_count;
    Splitting {
        h_indices: (0..u + l).collect(),
        r_indices: (u + l..g.dim).collect(),
        scenario: Scenario::BorelOpposite,
    }
}

/// Data of a realization whose basis makes the splitting a coordinate
/// partition, together with the substitution expressing the standard
/// variables in the realization variables.
#[derive(Debug, Clone)]
pub struct Realized {
    pub algebra: LieAlgebraData,
    pub splitting: Splitting,
    /// Row `i` gives the standard variable `x_i` in realization variables.
    pub old_in_new: QMatrix,
}

/// Maximal-rank involution splitting `g = b ⊕ g_0` for type A
/// (`σ(x) = -xᵀ`, `g_0 = so_n`). The realization basis is
/// `(e_α, h_i | e_α - f_α)`.
pub fn splitting_involution_max_rank(g: &LieAlgebraData) -> Result<Realized> {
    if g.family != Family::Simple(Series::A) {
        return Err(Error::UnsupportedScenario {
            series: g.family.series().to_string(),
            rank: g.rank,
            reason: "the maximal-rank involution realization is implemented for type A only".into(),
        });
    }
    let n = g.dim;
    let l = g.rank;
    let u = g.u_count;
    let mut p = QMatrix::zeros(n, n);
    let mut labels = Vec::with_capacity(n);
    for (col, idx) in (0..u + l).enumerate() {
        p.set(idx, col, rat(1));
        labels.push(g.basis[idx].label.clone());
    }
    for a in 0..u {
        let col = u + l + a;
        let e_idx = a;
        let f_idx = u + l + a;
        p.set(e_idx, col, rat(1));
        p.set(f_idx, col, rat(-1));
        labels.push(format!("k{}", g.basis[e_idx].label.trim_start_matches('e')));
    }
    let (mut algebra, old_in_new) = g.change_basis(&p, g.family, labels)?;
    let splitting = Splitting {
        h_indices: (0..u + l).collect(),
        r_indices: (u + l..n).collect(),
        scenario: Scenario::Involution,
    };
    algebra.attach_splitting(&splitting);
    Ok(Realized {
        algebra,
        splitting,
        old_in_new,
    })
}

/// The Manin-style splitting of the double,
/// `g×g = (Δ_t^- ⊕ (u × u_-)) ⊕ Δ_g`. Returns the double in its realization
/// basis; `old_in_new` refers to the standard product basis of `g×g`.
pub fn splitting_manin(g: &LieAlgebraData) -> Result<(LieAlgebraData, Realized)> {
    if g.family.is_double() {
        return Err(Error::UnsupportedScenario {
            series: g.family.series().to_string(),
            rank: g.rank,
            reason: "the double of a double is not supported".into(),
        });
    }
    if g.rank > 3 {
        return Err(Error::UnsupportedScenario {
            series: g.family.series().to_string(),
            rank: g.rank,
            reason: "the double is supported for rank at most 3".into(),
        });
    }
    let double = build_double(g)?;
    let n = g.dim;
    let l = g.rank;
    let u = g.u_count;
    let nn = 2 * n;
    let mut p = QMatrix::zeros(nn, nn);
    let mut labels = Vec::with_capacity(nn);
    let mut col = 0;
    // h-block: (e_α, 0), then (h_i, -h_i), then (0, f_α).
    for a in 0..u {
        p.set(a, col, rat(1));
        labels.push(format!("({},0)", g.basis[a].label));
        col += 1;
    }
    for i in 0..l {
        let h = u + i;
        p.set(h, col, rat(1));
        p.set(n + h, col, rat(-1));
        labels.push(format!("({},-{})", g.basis[h].label, g.basis[h].label));
        col += 1;
    }
    for a in 0..u {
        let f = u + l + a;
        p.set(n + f, col, rat(1));
        labels.push(format!("(0,{})", g.basis[f].label));
        col += 1;
    }
    // r-block: the diagonal copy of the standard basis.
    for b in 0..n {
        p.set(b, col, rat(1));
        p.set(n + b, col, rat(1));
        labels.push(format!("({0},{0})", g.basis[b].label));
        col += 1;
    }
    debug_assert_eq!(col, nn);
    let (mut algebra, old_in_new) = double.change_basis(&p, double.family, labels)?;
    let splitting = Splitting {
        h_indices: (0..n).collect(),
        r_indices: (n..nn).collect(),
        scenario: Scenario::Manin,
    };
    algebra.attach_splitting(&splitting);
    Ok((
        double,
        Realized {
            algebra,
            splitting,
            old_in_new,
        },
    ))
}

/// A principal sl2-triple `{e, h, f}` with `e` the sum of simple root
/// vectors, together with the distinguished regular point `y = e + h - f`
/// viewed in `g*` through the invariant form.
#[derive(Debug, Clone)]
pub struct PrincipalTriple {
    pub e: Vec<Rat>,
    pub h: Vec<Rat>,
    pub f: Vec<Rat>,
    pub y: PointOnDual,
}

pub fn principal_nilpotent_point(g: &LieAlgebraData) -> PrincipalTriple {
    let rd = g
        .root_data
        .as_ref()
        .expect("principal triple requires root data");
    let l = g.rank;
    let n = g.dim;

    let mut e = vec![Rat::zero(); n];
    for &s in &rd.simple {
        e[rd.roots[s].e_index] = rat(1);
    }

    // h ∈ t with α_i(h) = 2 for every simple root.
    let a = QMatrix::from_fn(l, l, |i, j| rd.roots[rd.simple[i]].weight[j].clone());
    let rhs: Vec<Rat> = vec![rat(2); l];
    let coeffs = solve_square(&a, &rhs).expect("simple-root weights are independent");
    let mut h = vec![Rat::zero(); n];
    for (j, c) in coeffs.into_iter().enumerate() {
        h[g.u_count + j] = c;
    }

    // f = Σ c_i f_{α_i} solving [e, f] = h.
    let cols: Vec<Vec<Rat>> = rd
        .simple
        .iter()
        .map(|&s| {
            let mut unit = vec![Rat::zero(); n];
            unit[rd.roots[s].f_index] = rat(1);
            g.bracket_vectors(&e, &unit)
        })
        .collect();
    let sys = QMatrix::from_fn(n, l, |i, j| cols[j][i].clone());
    let sol = solve_overdetermined(&sys, &h).expect("principal triple closes");
    let mut f = vec![Rat::zero(); n];
    for (j, c) in sol.into_iter().enumerate() {
        f[rd.roots[rd.simple[j]].f_index] = c;
    }

    debug_assert_eq!(g.bracket_vectors(&e, &f), h);

    let y: Vec<Rat> = (0..n).map(|i| &e[i] + &h[i] - &f[i]).collect();
    let y = g.point_from_element(&y);
    PrincipalTriple { e, h, f, y }
}

fn solve_square(a: &QMatrix, rhs: &[Rat]) -> Result<Vec<Rat>> {
    let inv = a.inverse()?;
    Ok(inv.mul_vec(rhs))
}

fn solve_overdetermined(a: &QMatrix, rhs: &[Rat]) -> Option<Vec<Rat>> {
    let rows = a.rows();
    let cols = a.cols();
    let aug = QMatrix::from_fn(rows, cols + 1, |i, j| {
        if j < cols {
            a.at(i, j).clone()
        } else {
            rhs[i].clone()
        }
    });
    let (r, pivots) = aug.rref();
    if pivots.contains(&cols) {
        return None; // inconsistent
    }
    let mut sol = vec![Rat::zero(); cols];
    for (row, &col) in pivots.iter().enumerate() {
        sol[col] = r.at(row, cols).clone();
    }
    // Verify exactly; free columns are left at zero.
    let check = a.mul_vec(&sol);
    (check == rhs.to_vec()).then_some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brackets::{tensor_at, BracketParam};
    use crate::rational::ratio;

    #[test]
    fn borel_splitting_of_sl2() {
        let g = build_classical(Series::A, 1).unwrap();
        let s = splitting_borel_opposite(&g);
        assert_eq!(s.h_indices, vec![0, 1]); // e, h
        assert_eq!(s.r_indices, vec![2]); // f
        assert!(g.span_bracket_closed(&s.h_indices));
        assert!(g.span_bracket_closed(&s.r_indices));
    }

    #[test]
    fn borel_splitting_dimensions() {
        for (s, l) in [
            (Series::A, 2),
            (Series::A, 3),
            (Series::C, 2),
            (Series::B, 2),
        ] {
            let g = build_classical(s, l).unwrap();
            let sp = splitting_borel_opposite(&g);
            assert_eq!(sp.h_indices.len(), g.b_magic(), "{s}{l}");
            assert_eq!(sp.r_indices.len(), g.u_count, "{s}{l}");
            assert!(g.span_bracket_closed(&sp.h_indices));
            assert!(g.span_bracket_closed(&sp.r_indices));
        }
    }

    #[test]
    fn simple_negative_root_vectors_are_lowest_weight_for_b() {
        // [e_α, f_i] stays inside b for every positive root α and simple i:
        // α - α_i is never a negative root.
        for (s, l) in [
            (Series::A, 2),
            (Series::A, 3),
            (Series::B, 2),
            (Series::C, 2),
        ] {
            let g = build_classical(s, l).unwrap();
            let rd = g.root_data.as_ref().unwrap();
            let b_limit = g.u_count + g.rank; // indices below this lie in b
            for &simple in &rd.simple {
                let f_idx = rd.roots[simple].f_index;
                for root in &rd.roots {
                    for (k, c) in g.bracket_basis(root.e_index, f_idx) {
                        assert!(
                            c.is_zero() || k < b_limit,
                            "{s}{l}: [e, f_i] leaves b at basis index {k}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn principal_triple_of_sl2_and_its_point() {
        let g = build_classical(Series::A, 1).unwrap();
        let t = principal_nilpotent_point(&g);
        assert_eq!(t.e, vec![rat(1), rat(0), rat(0)]);
        assert_eq!(t.h, vec![rat(0), rat(1), rat(0)]);
        assert_eq!(t.f, vec![rat(0), rat(0), rat(1)]);
        // Oracle: pair y = e + h - f against the basis with the explicit
        // 2x2 trace form [[0,0,1],[0,2,0],[1,0,0]].
        assert_eq!(t.y.coords(), &[rat(-1), rat(2), rat(1)]);
    }

    #[test]
    fn principal_triple_relations() {
        for (s, l) in [
            (Series::A, 1),
            (Series::A, 2),
            (Series::A, 3),
            (Series::C, 2),
        ] {
            let g = build_classical(s, l).unwrap();
            let t = principal_nilpotent_point(&g);
            // [e, f] = h, [h, e] = 2e, [h, f] = -2f, exactly.
            assert_eq!(g.bracket_vectors(&t.e, &t.f), t.h, "{s}{l}");
            let two_e: Vec<Rat> = t.e.iter().map(|c| c * rat(2)).collect();
            assert_eq!(g.bracket_vectors(&t.h, &t.e), two_e, "{s}{l}");
            let minus_two_f: Vec<Rat> = t.f.iter().map(|c| c * rat(-2)).collect();
            assert_eq!(g.bracket_vectors(&t.h, &t.f), minus_two_f, "{s}{l}");
            // f is supported on the negative simple root vectors.
            let rd = g.root_data.as_ref().unwrap();
            for (i, c) in t.f.iter().enumerate() {
                if !c.is_zero() {
                    assert!(rd.simple.iter().any(|&r| rd.roots[r].f_index == i));
                }
            }
        }
    }

    #[test]
    fn sl3_principal_f_is_twice_the_simple_sum() {
        let g = build_classical(Series::A, 2).unwrap();
        let t = principal_nilpotent_point(&g);
        let rd = g.root_data.as_ref().unwrap();
        for &r in &rd.simple {
            assert_eq!(t.f[rd.roots[r].f_index], rat(2));
        }
    }

    #[test]
    fn principal_point_is_regular_for_the_whole_family() {
        for (s, l) in [(Series::A, 1), (Series::A, 2), (Series::C, 2)] {
            let g = build_classical(s, l).unwrap();
            let sp = splitting_borel_opposite(&g);
            let y = principal_nilpotent_point(&g).y;
            for t in [
                BracketParam::zero(),
                BracketParam::one(),
                BracketParam::Finite(ratio(7, 3)),
                BracketParam::Infinity,
            ] {
                let tensor = tensor_at(&g, &sp, &t, y.coords()).unwrap();
                assert_eq!(tensor.corank(), l, "{s}{l} at t = {t}");
            }
        }
    }

    #[test]
    fn involution_realization_of_sl2() {
        let g = build_classical(Series::A, 1).unwrap();
        let r = splitting_involution_max_rank(&g).unwrap();
        assert_eq!(r.splitting.h_indices, vec![0, 1]);
        assert_eq!(r.splitting.r_indices, vec![2]);
        assert_eq!(r.algebra.basis[2].label, "k12");
        assert!(r.algebra.span_bracket_closed(&r.splitting.r_indices));
        assert!(validate_structure(&r.algebra).pass());
        // Parts are attached by the constructor.
        assert_eq!(r.algebra.basis[0].part, Some(Part::H));
        assert_eq!(r.algebra.basis[2].part, Some(Part::R));
        // The transpose involution negates the realization matrices of g0
        // and the Cartan sits in the (-1)-eigenspace: σ(h) = -h.
        let rep = r.algebra.rep.as_ref().unwrap();
        let k = &rep[2];
        assert_eq!(k.transpose(), k.scale(&rat(-1)));
        let h = &g.rep.as_ref().unwrap()[1];
        assert_eq!(h.transpose(), h.clone());
    }

    #[test]
    fn involution_dimension_counts() {
        // dim g0 = dim u: 3 + 5 = 8 for sl3.
        let g = build_classical(Series::A, 2).unwrap();
        let r = splitting_involution_max_rank(&g).unwrap();
        assert_eq!(r.splitting.r_indices.len(), 3);
        assert_eq!(r.splitting.h_indices.len(), 5);
        assert!(r.algebra.span_bracket_closed(&r.splitting.r_indices));
        assert!(r.algebra.span_bracket_closed(&r.splitting.h_indices));
        // Other series are rejected.
        let b2 = build_classical(Series::B, 2).unwrap();
        assert!(matches!(
            splitting_involution_max_rank(&b2),
            Err(Error::UnsupportedScenario { .. })
        ));
    }

    #[test]
    fn manin_realization_of_sl2() {
        let g = build_classical(Series::A, 1).unwrap();
        let (double, r) = splitting_manin(&g).unwrap();
        assert_eq!(double.dim, 6);
        assert_eq!(r.algebra.dim, 6);
        assert_eq!(r.splitting.h_indices.len(), 3);
        assert_eq!(r.splitting.r_indices.len(), 3);
        assert_eq!(double.b_magic(), 4); // b(g×g) = 2b(g)
        assert!(r.algebra.span_bracket_closed(&r.splitting.h_indices));
        assert!(r.algebra.span_bracket_closed(&r.splitting.r_indices));
        assert!(validate_structure(&r.algebra).pass());
        // [Δ_t^-, u × u_-] stays inside u × u_-: bracketing the twisted
        // Cartan (index 1) with (e,0) and (0,f) never meets the diagonal.
        for uv in [0usize, 2] {
            for (k, c) in r.algebra.bracket_basis(1, uv) {
                assert!(c.is_zero() || (k == 0 || k == 2));
            }
        }
        // Rank cap on the double.
        let a4 = build_classical(Series::A, 4).unwrap();
        assert!(splitting_manin(&a4).is_err());
    }
}
