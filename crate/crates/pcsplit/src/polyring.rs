//! Sparse multivariate polynomials over exact rationals: the symmetric
//! algebra `S(g)` in the coordinates of a fixed ordered basis.
//!
//! Exponent vectors are dense and of fixed length (the ambient dimension),
//! coefficients are arbitrary-precision rationals in lowest terms, and the
//! stored term map never contains a zero coefficient, so equality is exact
//! structural equality. Terms are kept in graded lexicographic order; nothing
//! algorithmic depends on the order, it only pins down serialization.

use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::{denominator_lcm, Rat};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// Monomial as a dense exponent vector, ordered by total degree then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn total_degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// Degree counted over the variables selected by `mask`.
    pub fn masked_degree(&self, mask: &[bool]) -> usize {
        self.0
            .iter()
            .zip(mask)
            .filter(|(_, &m)| m)
            .map(|(&e, _)| e as usize)
            .sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Bi-degree `(h, r)` of a bi-homogeneous component w.r.t. a splitting.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BiDegree {
    pub h: usize,
    pub r: usize,
}

impl BiDegree {
    pub fn total(&self) -> usize {
        self.h + self.r
    }
}

impl fmt::Display for BiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.h, self.r)
    }
}

/// Which top component of Convention 2 to extract.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TopSide {
    /// `H^•`: maximal degree in the second summand (r).
    SecondSummandMax,
    /// `H_•`: maximal degree in the first summand (h).
    FirstSummandMax,
}

/// Sparse polynomial in `nvars` variables with exact rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rat>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Poly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(Monomial(vec![0; nvars]), c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    /// The coordinate variable `x_i` as a degree-1 polynomial.
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut exp = vec![0; nvars];
        exp[i] = 1;
        Self::monomial(nvars, exp, Rat::one())
    }

    pub fn monomial(nvars: usize, exp: Vec<u32>, coeff: Rat) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = Poly::zero(nvars);
        if !coeff.is_zero() {
            p.terms.insert(Monomial(exp), coeff);
        }
        p
    }

    /// A linear form from coordinates.
    pub fn linear(coords: &[Rat]) -> Self {
        let n = coords.len();
        let mut p = Poly::zero(n);
        for (i, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                let mut exp = vec![0; n];
                exp[i] = 1;
                p.terms.insert(Monomial(exp), c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Maximal total exponent; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms
            .keys()
            .map(|m| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Total degree if every term has the same one. The zero polynomial is
    /// homogeneous of degree 0 by convention.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|m| m.total_degree());
        let Some(first) = it.next() else {
            return Some(0);
        };
        it.all(|d| d == first).then_some(first)
    }

    fn insert_term(&mut self, m: Monomial, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    fn check_dims(&self, other: &Poly) -> Result<()> {
        if self.nvars == other.nvars {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        }
    }

    pub fn checked_add(&self, other: &Poly) -> Result<Poly> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_dims(other)?;
        let mut out = Poly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.insert_term(m1.mul(m2), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rat) -> Poly {
        if s.is_zero() {
            return Poly::zero(self.nvars);
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            out.terms.insert(m.clone(), c * s);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        self.scale(&-Rat::one())
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut out = Poly::one(self.nvars);
        for _ in 0..e {
            out = out.checked_mul(self).expect("same ambient dimension");
        }
        out
    }

    /// In-place `self += c · x_var · other`; the hot path of polynomial
    /// Poisson brackets.
    pub fn add_assign_scaled_var_shift(&mut self, other: &Poly, var: usize, c: &Rat) {
        debug_assert_eq!(self.nvars, other.nvars);
        debug_assert!(var < self.nvars);
        for (m, coeff) in &other.terms {
            let mut exp = m.0.clone();
            exp[var] += 1;
            self.insert_term(Monomial(exp), coeff * c);
        }
    }

    /// Partial derivative with respect to `x_i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut exp = m.0.clone();
            exp[i] = e - 1;
            out.insert_term(Monomial(exp), c * Rat::from_integer(BigInt::from(e)));
        }
        out
    }

    /// Exact evaluation at a rational point.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (m, c) in &self.terms {
            let mut prod = c.clone();
            for (i, &e) in m.0.iter().enumerate() {
                for _ in 0..e {
                    prod *= &point[i];
                }
            }
            acc += prod;
        }
        acc
    }

    /// Gradient at a point, expressed in the fixed basis: the differential
    /// `d_ξP` as an element of `g`. For a coordinate variable this returns
    /// the corresponding standard basis vector.
    pub fn grad_at(&self, point: &[Rat]) -> Vec<Rat> {
        (0..self.nvars)
            .map(|i| self.partial(i).eval(point))
            .collect()
    }

    /// Substitute each variable by a linear form: `x_i ↦ Σ_j rows[i][j]·y_j`.
    /// The result lives in `rows.cols()` variables.
    pub fn substitute_linear(&self, rows: &QMatrix) -> Poly {
        assert_eq!(rows.rows(), self.nvars);
        let new_n = rows.cols();
        let forms: Vec<Poly> = (0..self.nvars).map(|i| Poly::linear(rows.row(i))).collect();
        let mut out = Poly::zero(new_n);
        for (m, c) in &self.terms {
            let mut prod = Poly::constant(new_n, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    prod = prod
                        .checked_mul(&forms[i].pow(e))
                        .expect("same ambient dimension");
                }
            }
            out = out.checked_add(&prod).expect("same ambient dimension");
        }
        out
    }

    /// Reinterpret in a larger variable set, shifting every variable index
    /// by `offset`.
    pub fn embed(&self, new_nvars: usize, offset: usize) -> Poly {
        assert!(offset + self.nvars <= new_nvars);
        let mut out = Poly::zero(new_nvars);
        for (m, c) in &self.terms {
            let mut exp = vec![0u32; new_nvars];
            exp[offset..offset + self.nvars].copy_from_slice(&m.0);
            out.terms.insert(Monomial(exp), c.clone());
        }
        out
    }

    /// True when every variable occurring in the polynomial is flagged in
    /// `allowed`.
    pub fn supported_on(&self, allowed: &[bool]) -> bool {
        self.terms
            .keys()
            .all(|m| m.0.iter().zip(allowed).all(|(&e, &ok)| e == 0 || ok))
    }

    /// Bi-homogeneous decomposition w.r.t. the variable partition given by
    /// `h_mask` (true = first summand). Requires a homogeneous input; the
    /// nonzero components are returned with ascending first-summand degree
    /// and sum back to the input.
    pub fn bihomogeneous_decompose(&self, h_mask: &[bool]) -> Result<Vec<(BiDegree, Poly)>> {
        assert_eq!(h_mask.len(), self.nvars);
        let Some(d) = self.homogeneous_degree() else {
            return Err(Error::NonHomogeneous);
        };
        let mut comps: BTreeMap<usize, Poly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let i = m.masked_degree(h_mask);
            comps
                .entry(i)
                .or_insert_with(|| Poly::zero(self.nvars))
                .insert_term(m.clone(), c.clone());
        }
        Ok(comps
            .into_iter()
            .map(|(i, p)| (BiDegree { h: i, r: d - i }, p))
            .collect())
    }

    /// The component of maximal degree in the chosen summand (Convention 2):
    /// `H^•` for [`TopSide::SecondSummandMax`], `H_•` for
    /// [`TopSide::FirstSummandMax`].
    pub fn top_component(&self, h_mask: &[bool], side: TopSide) -> Result<(BiDegree, Poly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let comps = self.bihomogeneous_decompose(h_mask)?;
        let picked = match side {
            TopSide::FirstSummandMax => comps.into_iter().next_back(),
            TopSide::SecondSummandMax => comps.into_iter().next(),
        };
        Ok(picked.expect("nonzero polynomial has a component"))
    }

    /// The contraction map `φ_s`: multiply every second-summand variable by
    /// the nonzero scalar `s`, keep first-summand variables fixed. `φ_1` is
    /// the identity and `φ_s ∘ φ_s' = φ_{ss'}`.
    pub fn apply_phi(&self, h_mask: &[bool], s: &Rat) -> Result<Poly> {
        assert_eq!(h_mask.len(), self.nvars);
        if s.is_zero() {
            return Err(Error::ZeroScalar);
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in &self.terms {
            let r_deg =
                m.0.iter()
                    .zip(h_mask)
                    .filter(|(_, &h)| !h)
                    .map(|(&e, _)| e)
                    .sum::<u32>();
            let mut factor = Rat::one();
            for _ in 0..r_deg {
                factor *= s;
            }
            out.terms.insert(m.clone(), c * &factor);
        }
        Ok(out)
    }

    /// Clear denominators and content: the result has coprime integer
    /// coefficients with a positive leading coefficient, and is a nonzero
    /// rational multiple of the input.
    pub fn primitive_integral(&self) -> Poly {
        if self.is_zero() {
            return self.clone();
        }
        let lcm = denominator_lcm(self.terms.values());
        let scaled: Vec<(Monomial, BigInt)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let v = c * Rat::from_integer(lcm.clone());
                debug_assert!(v.denom().is_one());
                (m.clone(), v.numer().clone())
            })
            .collect();
        let mut content = BigInt::zero();
        for (_, c) in &scaled {
            content = num_integer::Integer::gcd(&content, c);
        }
        let lead_sign = scaled.last().map(|(_, c)| c.is_negative()).unwrap_or(false);
        if lead_sign {
            content = -content;
        }
        let mut out = Poly::zero(self.nvars);
        for (m, c) in scaled {
            out.terms.insert(m, Rat::from_integer(c / content.clone()));
        }
        out
    }

    /// If `self = c · other` for a nonzero rational `c`, return `c`.
    pub fn proportional_to(&self, other: &Poly) -> Option<Rat> {
        if self.nvars != other.nvars || self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let (m0, c0) = self.terms.iter().next().unwrap();
        let d0 = other.terms.get(m0)?;
        let ratio = c0 / d0;
        for (m, c) in &self.terms {
            let d = other.terms.get(m)?;
            if *c != d * &ratio {
                return None;
            }
        }
        Some(ratio)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", c)?;
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => write!(f, "*x{}", i)?,
                    _ => write!(f, "*x{}^{}", i, e)?,
                }
            }
        }
        Ok(())
    }
}

impl std::ops::Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("ambient dimension mismatch")
    }
}

impl std::ops::Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("ambient dimension mismatch")
    }
}

impl std::ops::Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("ambient dimension mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    fn x(i: usize) -> Poly {
        Poly::var(3, i)
    }

    /// e, h, f coordinates with `H = h² + 4ef`.
    fn casimir_like() -> Poly {
        let h2 = Poly::monomial(3, vec![0, 2, 0], rat(1));
        let ef = Poly::monomial(3, vec![1, 0, 1], rat(4));
        &h2 + &ef
    }

    #[test]
    fn binomial_square_expands() {
        let s = &Poly::var(2, 0) + &Poly::var(2, 1);
        let sq = &s * &s;
        let expected = &(&Poly::monomial(2, vec![2, 0], rat(1))
            + &Poly::monomial(2, vec![1, 1], rat(2)))
            + &Poly::monomial(2, vec![0, 2], rat(1));
        assert_eq!(sq, expected);
    }

    #[test]
    fn scale_by_zero_is_empty() {
        let p = casimir_like();
        let z = p.scale(&rat(0));
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn dimension_mismatch_is_rejected() {
        let p = Poly::var(2, 0);
        let q = Poly::var(3, 0);
        assert!(matches!(
            p.checked_add(&q),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            p.checked_mul(&q),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn bihomogeneous_decomposition_of_casimir() {
        // Splitting (b, u_-) on (e, h, f): h-variables are e and h.
        let mask = [true, true, false];
        let comps = casimir_like().bihomogeneous_decompose(&mask).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].0, BiDegree { h: 1, r: 1 });
        assert_eq!(comps[0].1, Poly::monomial(3, vec![1, 0, 1], rat(4)));
        assert_eq!(comps[1].0, BiDegree { h: 2, r: 0 });
        assert_eq!(comps[1].1, Poly::monomial(3, vec![0, 2, 0], rat(1)));
        let sum = comps.iter().fold(Poly::zero(3), |acc, (_, p)| &acc + p);
        assert_eq!(sum, casimir_like());
    }

    #[test]
    fn non_homogeneous_input_rejected() {
        let p = &x(0) + &(&x(1) * &x(1));
        assert!(matches!(
            p.bihomogeneous_decompose(&[true, true, false]),
            Err(Error::NonHomogeneous)
        ));
    }

    #[test]
    fn top_components_of_casimir() {
        let mask = [true, true, false];
        let (bd, top) = casimir_like()
            .top_component(&mask, TopSide::SecondSummandMax)
            .unwrap();
        assert_eq!(bd, BiDegree { h: 1, r: 1 });
        assert_eq!(top, Poly::monomial(3, vec![1, 0, 1], rat(4)));
        let (bd, low) = casimir_like()
            .top_component(&mask, TopSide::FirstSummandMax)
            .unwrap();
        assert_eq!(bd, BiDegree { h: 2, r: 0 });
        assert_eq!(low, Poly::monomial(3, vec![0, 2, 0], rat(1)));
        assert!(matches!(
            Poly::zero(3).top_component(&mask, TopSide::SecondSummandMax),
            Err(Error::ZeroPolynomial)
        ));
    }

    #[test]
    fn phi_scales_second_summand_variables() {
        let mask = [true, true, false];
        let s = ratio(3, 2);
        // φ_s(f) = s·f for f in the second summand.
        assert_eq!(x(2).apply_phi(&mask, &s).unwrap(), x(2).scale(&s));
        // φ_1 is the identity.
        assert_eq!(
            casimir_like().apply_phi(&mask, &rat(1)).unwrap(),
            casimir_like()
        );
        // φ_s(h² + 4ef) = h² + 4s·ef.
        let expected = &Poly::monomial(3, vec![0, 2, 0], rat(1))
            + &Poly::monomial(3, vec![1, 0, 1], rat(4) * &s);
        assert_eq!(casimir_like().apply_phi(&mask, &s).unwrap(), expected);
        assert!(matches!(
            casimir_like().apply_phi(&mask, &rat(0)),
            Err(Error::ZeroScalar)
        ));
    }

    #[test]
    fn gradient_examples() {
        // d_ξ(x) = x for a coordinate.
        let g = x(1).grad_at(&[rat(5), rat(-2), rat(7)]);
        assert_eq!(g, vec![rat(0), rat(1), rat(0)]);
        // d_ξ(ef) at ξ = (-1, 2, 1) is e - f.
        let ef = Poly::monomial(3, vec![1, 0, 1], rat(1));
        let g = ef.grad_at(&[rat(-1), rat(2), rat(1)]);
        assert_eq!(g, vec![rat(1), rat(0), rat(-1)]);
    }

    #[test]
    fn substitution_by_linear_forms() {
        // f ↦ e - k in coordinates (e, h, f) -> (e, h, k).
        let rows = QMatrix::from_rows(vec![
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(0), rat(-1)],
        ]);
        let p = casimir_like().substitute_linear(&rows);
        // h² + 4e(e - k) = h² + 4e² - 4ek
        let expected = &(&Poly::monomial(3, vec![0, 2, 0], rat(1))
            + &Poly::monomial(3, vec![2, 0, 0], rat(4)))
            + &Poly::monomial(3, vec![1, 0, 1], rat(-4));
        assert_eq!(p, expected);
    }

    #[test]
    fn primitive_integral_and_proportionality() {
        let p = casimir_like().scale(&ratio(-3, 4));
        let q = p.primitive_integral();
        assert_eq!(q, casimir_like());
        assert_eq!(p.proportional_to(&casimir_like()), Some(ratio(-3, 4)));
        assert_eq!(casimir_like().proportional_to(&x(0)), None);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly(nvars: usize, max_terms: usize) -> impl Strategy<Value = Poly> {
            proptest::collection::vec(
                (proptest::collection::vec(0u32..3, nvars), -6i64..6, 1i64..4),
                0..max_terms,
            )
            .prop_map(move |terms| {
                let mut p = Poly::zero(nvars);
                for (exp, n, d) in terms {
                    p = &p + &Poly::monomial(nvars, exp, ratio(n, d));
                }
                p
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn mul_commutes(p in arb_poly(3, 5), q in arb_poly(3, 5)) {
                prop_assert_eq!(&p * &q, &q * &p);
            }

            #[test]
            fn mul_associates_and_distributes(
                p in arb_poly(3, 4),
                q in arb_poly(3, 4),
                r in arb_poly(3, 4),
            ) {
                prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
                prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
            }

            #[test]
            fn phi_is_a_ring_automorphism(p in arb_poly(3, 4), q in arb_poly(3, 4)) {
                let mask = [true, false, false];
                let s = ratio(2, 3);
                let lhs = (&p * &q).apply_phi(&mask, &s).unwrap();
                let rhs = &p.apply_phi(&mask, &s).unwrap() * &q.apply_phi(&mask, &s).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn phi_composes(p in arb_poly(3, 4)) {
                let mask = [true, true, false];
                let s = ratio(5, 2);
                let t = ratio(-1, 3);
                let lhs = p.apply_phi(&mask, &s).unwrap().apply_phi(&mask, &t).unwrap();
                let rhs = p.apply_phi(&mask, &(s * t)).unwrap();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn gradient_satisfies_leibniz(p in arb_poly(3, 4), q in arb_poly(3, 4)) {
                let xi = [ratio(1, 2), rat(-3), rat(2)];
                let lhs = (&p * &q).grad_at(&xi);
                let pv = p.eval(&xi);
                let qv = q.eval(&xi);
                let gp = p.grad_at(&xi);
                let gq = q.grad_at(&xi);
                for i in 0..3 {
                    prop_assert_eq!(lhs[i].clone(), &pv * &gq[i] + &qv * &gp[i]);
                }
            }

            #[test]
            fn decomposition_parts_sum_back(p in arb_poly(4, 5)) {
                let mask = [true, true, false, false];
                if let Some(d) = p.homogeneous_degree() {
                    let comps = p.bihomogeneous_decompose(&mask).unwrap();
                    prop_assert!(comps.len() <= d + 1);
                    let sum = comps.iter().fold(Poly::zero(4), |acc, (_, c)| &acc + c);
                    prop_assert_eq!(sum, p);
                }
            }
        }
    }
}
