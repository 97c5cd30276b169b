//! Matrix realizations of the classical algebras in their defining
//! representations, and extraction of exact structure constants and root
//! data from them.
//!
//! Conventions: `sl_{l+1}` uses elementary matrices; `so_m` and `sp_{2l}`
//! preserve the anti-diagonal symmetric (resp. alternating) form, so that
//! upper/diagonal/lower triangular matrices realize `u`, `t`, `u_-` and the
//! transpose involution acts literally. No sign table is ever consulted:
//! every structure constant is a commutator of explicit matrices expressed
//! back in the basis.

use super::{Family, LieAlgebraData, RootData, RootInfo, Series};
use crate::error::{Error, Result};
use crate::linalg::QMatrix;
use crate::rational::{rat, Rat};
use num_traits::Zero;
use std::collections::BTreeMap;

/// Supported table: A1–A4 and B2, C2 with the optional B3 and D4.
fn supported(series: Series, rank: usize) -> bool {
    matches!(
        (series, rank),
        (Series::A, 1..=4) | (Series::B, 2..=3) | (Series::C, 2) | (Series::D, 4)
    )
}

/// Build a classical simple Lie algebra with basis ordered as
/// `(u, t, u_-)`, exact structure constants, the trace form of the defining
/// representation, and computed root data.
pub fn build_classical(series: Series, rank: usize) -> Result<LieAlgebraData> {
    if rank == 0 || !supported(series, rank) {
        return Err(Error::UnsupportedAlgebra {
            series: series.to_string(),
            rank,
        });
    }
    let real = match series {
        Series::A => special_linear(rank),
        Series::B => orthogonal_or_symplectic(series, 2 * rank + 1),
        Series::C => orthogonal_or_symplectic(series, 2 * rank),
        Series::D => orthogonal_or_symplectic(series, 2 * rank),
    };
    assemble(series, rank, real)
}

struct Realization {
    rep_size: usize,
    mats: Vec<QMatrix>,
    labels: Vec<String>,
    u_count: usize,
}

fn unit(n: usize, i: usize, j: usize) -> QMatrix {
    let mut m = QMatrix::zeros(n, n);
    m.set(i, j, rat(1));
    m
}

fn special_linear(l: usize) -> Realization {
    let n = l + 1;
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    let mut upper = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            upper.push((i, j));
        }
    }
    for &(i, j) in &upper {
        mats.push(unit(n, i, j));
        labels.push(format!("e{}{}", i + 1, j + 1));
    }
    for i in 0..l {
        let mut m = unit(n, i, i);
        m.set(i + 1, i + 1, rat(-1));
        mats.push(m);
        labels.push(format!("h{}", i + 1));
    }
    for &(i, j) in &upper {
        mats.push(unit(n, j, i));
        labels.push(format!("f{}{}", i + 1, j + 1));
    }
    Realization {
        rep_size: n,
        mats,
        labels,
        u_count: upper.len(),
    }
}

/// `so_m` (series B/D, all signs +1) or `sp_m` (series C, split signs) with
/// the anti-diagonal form. Basis matrices are
/// `F_{ij} = E_{ij} - ε_i ε_j E_{m+1-j, m+1-i}` at canonical positions.
fn orthogonal_or_symplectic(series: Series, m: usize) -> Realization {
    let l = m / 2;
    let eps = |i: usize| -> i64 {
        if series == Series::C && i >= l {
            -1
        } else {
            1
        }
    };
    let f_mat = |i: usize, j: usize| -> QMatrix {
        let mut x = unit(m, i, j);
        let (mi, mj) = (m - 1 - j, m - 1 - i);
        let s = rat(-eps(i) * eps(j));
        let cur = x.at(mi, mj).clone();
        x.set(mi, mj, cur + s);
        x
    };
    let mirror = |i: usize, j: usize| (m - 1 - j, m - 1 - i);
    let mut upper = Vec::new();
    for i in 0..m {
        for j in (i + 1)..m {
            if series != Series::C && i + j == m - 1 {
                continue; // F vanishes for the orthogonal algebras
            }
            if mirror(i, j) < (i, j) {
                continue; // non-canonical representative of the same space
            }
            upper.push((i, j));
        }
    }
    let mut mats = Vec::new();
    let mut labels = Vec::new();
    for &(i, j) in &upper {
        mats.push(f_mat(i, j));
        labels.push(format!("e{}{}", i + 1, j + 1));
    }
    for i in 0..l {
        mats.push(f_mat(i, i));
        labels.push(format!("h{}", i + 1));
    }
    for &(i, j) in &upper {
        mats.push(f_mat(j, i));
        labels.push(format!("f{}{}", i + 1, j + 1));
    }
    Realization {
        rep_size: m,
        mats,
        labels,
        u_count: upper.len(),
    }
}

fn vec_of(m: &QMatrix) -> Vec<Rat> {
    let mut v = Vec::with_capacity(m.rows() * m.cols());
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            v.push(m.at(i, j).clone());
        }
    }
    v
}

fn commutator(a: &QMatrix, b: &QMatrix) -> QMatrix {
    let ab = a.mul(b);
    let ba = b.mul(a);
    QMatrix::from_fn(a.rows(), a.cols(), |i, j| ab.at(i, j) - ba.at(i, j))
}

fn assemble(series: Series, rank: usize, real: Realization) -> Result<LieAlgebraData> {
    let n = real.mats.len();
    let nsq = real.rep_size * real.rep_size;

    // Exact decoder for coordinates in the matrix basis: D = (BᵀB)⁻¹Bᵀ.
    let basis_cols = QMatrix::from_fn(nsq, n, |i, j| {
        real.mats[j]
            .at(i / real.rep_size, i % real.rep_size)
            .clone()
    });
    let bt = basis_cols.transpose();
    let gram = bt.mul(&basis_cols);
    let decoder = gram
        .inverse()
        .expect("basis matrices are linearly independent")
        .mul(&bt);
    let coords_of = |x: &QMatrix| -> Vec<Rat> {
        let coords = decoder.mul_vec(&vec_of(x));
        debug_assert_eq!(
            basis_cols.mul_vec(&coords),
            vec_of(x),
            "element not in span"
        );
        coords
    };

    let mut constants = BTreeMap::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let c = commutator(&real.mats[i], &real.mats[j]);
            let coords = coords_of(&c);
            let entry: Vec<(usize, Rat)> = coords
                .into_iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .collect();
            if !entry.is_empty() {
                constants.insert((i, j), entry);
            }
        }
    }

    let form = QMatrix::from_fn(n, n, |i, j| {
        let prod = real.mats[i].mul(&real.mats[j]);
        let mut tr = Rat::zero();
        for d in 0..real.rep_size {
            tr += prod.at(d, d);
        }
        tr
    });

    let root_data = extract_root_data(&real, rank, &coords_of);

    Ok(LieAlgebraData::new_raw(
        Family::Simple(series),
        rank,
        real.labels,
        constants,
        form,
        Some(real.mats),
        Some(root_data),
        real.u_count,
    ))
}

fn extract_root_data(
    real: &Realization,
    l: usize,
    coords_of: &impl Fn(&QMatrix) -> Vec<Rat>,
) -> RootData {
    let u = real.u_count;
    let mut roots = Vec::with_capacity(u);
    for a in 0..u {
        let mut weight = Vec::with_capacity(l);
        for i in 0..l {
            let c = commutator(&real.mats[u + i], &real.mats[a]);
            let coords = coords_of(&c);
            debug_assert!(
                coords
                    .iter()
                    .enumerate()
                    .all(|(k, v)| k == a || v.is_zero()),
                "basis vector is not a weight vector"
            );
            weight.push(coords[a].clone());
        }
        roots.push(RootInfo {
            e_index: a,
            f_index: u + l + a,
            weight,
        });
    }

    // A positive root is simple iff it is not the sum of two positive roots.
    let weights: Vec<&Vec<Rat>> = roots.iter().map(|r| &r.weight).collect();
    let is_sum = |w: &Vec<Rat>| -> bool {
        for w1 in &weights {
            for w2 in &weights {
                let sum: Vec<Rat> = w1.iter().zip(w2.iter()).map(|(a, b)| a + b).collect();
                if sum == *w {
                    return true;
                }
            }
        }
        false
    };
    let simple: Vec<usize> = (0..u).filter(|&a| !is_sum(&roots[a].weight)).collect();
    assert_eq!(simple.len(), l, "expected {} simple roots", l);

    // Expand every root over the simple ones; the highest root maximizes the
    // coefficient sum.
    let a_mat = QMatrix::from_fn(l, l, |i, j| roots[simple[j]].weight[i].clone());
    let a_inv = a_mat.inverse().expect("simple roots span");
    let mut highest = 0usize;
    let mut best_height = Rat::zero();
    let mut highest_coeffs = Vec::new();
    for (idx, r) in roots.iter().enumerate() {
        let coeffs = a_inv.mul_vec(&r.weight);
        let height: Rat = coeffs.iter().fold(Rat::zero(), |acc, c| acc + c);
        if height > best_height {
            best_height = height;
            highest = idx;
            highest_coeffs = coeffs;
        }
    }
    let highest_coeffs: Vec<i64> = highest_coeffs
        .iter()
        .map(|c| {
            use num_traits::ToPrimitive;
            assert!(c.is_integer(), "highest-root coefficients are integers");
            c.numer().to_i64().expect("small coefficient")
        })
        .collect();

    RootData {
        roots,
        simple,
        highest,
        highest_coeffs,
    }
}

/// The direct sum `g ⊕ g` with componentwise brackets; the first copy's
/// basis precedes the second's.
pub fn build_double(g: &LieAlgebraData) -> Result<LieAlgebraData> {
    if g.family.is_double() {
        return Err(Error::UnsupportedScenario {
            series: g.family.series().to_string(),
            rank: g.rank,
            reason: "cannot double a double".into(),
        });
    }
    let n = g.dim;
    let mut labels = Vec::with_capacity(2 * n);
    for b in &g.basis {
        labels.push(format!("{}@1", b.label));
    }
    for b in &g.basis {
        labels.push(format!("{}@2", b.label));
    }
    let mut constants = BTreeMap::new();
    for ((i, j), terms) in g.constants() {
        constants.insert((*i, *j), terms.clone());
        constants.insert(
            (*i + n, *j + n),
            terms.iter().map(|(k, c)| (k + n, c.clone())).collect(),
        );
    }
    let form = QMatrix::from_fn(2 * n, 2 * n, |i, j| {
        if (i < n) == (j < n) {
            g.form.at(i % n, j % n).clone()
        } else {
            Rat::zero()
        }
    });
    Ok(LieAlgebraData::new_raw(
        Family::Double(g.family.series()),
        2 * g.rank,
        labels,
        constants,
        form,
        None,
        None,
        g.u_count,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::validate_structure;

    /// Oracle: commutators of the explicit 2x2 matrices for sl2.
    #[test]
    fn sl2_matches_matrix_commutators() {
        let g = build_classical(Series::A, 1).unwrap();
        assert_eq!(g.dim, 3);
        assert_eq!(
            g.basis.iter().map(|b| b.label.as_str()).collect::<Vec<_>>(),
            vec!["e12", "h1", "f12"]
        );
        // [e, f] = h
        assert_eq!(g.bracket_basis(0, 2), vec![(1, rat(1))]);
        // [h, e] = 2e
        assert_eq!(g.bracket_basis(1, 0), vec![(0, rat(2))]);
        // [h, f] = -2f
        assert_eq!(g.bracket_basis(1, 2), vec![(2, rat(-2))]);
        // trace form: (e,f) = 1, (h,h) = 2
        assert_eq!(g.form.at(0, 2), &rat(1));
        assert_eq!(g.form.at(1, 1), &rat(2));
        assert_eq!(g.form.at(0, 0), &rat(0));
    }

    #[test]
    fn sl3_shape() {
        let g = build_classical(Series::A, 2).unwrap();
        assert_eq!(g.dim, 8);
        assert_eq!(g.rank, 2);
        assert_eq!(g.u_count, 3);
        assert!(validate_structure(&g).pass());
    }

    #[test]
    fn sp4_shape_and_highest_root() {
        let g = build_classical(Series::C, 2).unwrap();
        assert_eq!(g.dim, 10);
        assert_eq!(g.b_magic(), 6);
        let rd = g.root_data.as_ref().unwrap();
        assert_eq!(rd.roots.len(), 4);
        // Long highest root 2ε1 with coefficients (2, 1).
        assert_eq!(rd.highest_coeffs, vec![2, 1]);
        assert!(validate_structure(&g).pass());
    }

    #[test]
    fn so5_highest_root_has_a_two() {
        let g = build_classical(Series::B, 2).unwrap();
        assert_eq!(g.dim, 10);
        let rd = g.root_data.as_ref().unwrap();
        assert_eq!(rd.highest_coeffs, vec![1, 2]);
        assert!(validate_structure(&g).pass());
    }

    #[test]
    fn every_supported_algebra_validates() {
        for (s, l) in [
            (Series::A, 1),
            (Series::A, 2),
            (Series::A, 3),
            (Series::A, 4),
            (Series::B, 2),
            (Series::B, 3),
            (Series::C, 2),
            (Series::D, 4),
        ] {
            let g = build_classical(s, l).unwrap();
            let report = validate_structure(&g);
            assert!(report.pass(), "{s}{l}: {:?}", report);
            let rd = g.root_data.as_ref().unwrap();
            assert_eq!(rd.simple.len(), l);
            assert_eq!(2 * g.u_count + l, g.dim);
        }
    }

    #[test]
    fn unsupported_pairs_are_rejected() {
        assert!(build_classical(Series::A, 5).is_err());
        assert!(build_classical(Series::C, 3).is_err());
        assert!(build_classical(Series::D, 3).is_err());
        assert!(build_classical(Series::B, 0).is_err());
    }

    #[test]
    fn double_of_sl2() {
        let g = build_classical(Series::A, 1).unwrap();
        let d = build_double(&g).unwrap();
        assert_eq!(d.dim, 6);
        assert_eq!(d.rank, 2);
        assert_eq!(d.b_magic(), 4); // 2·b(sl2)
        assert!(validate_structure(&d).pass());
        // Components do not talk to each other.
        assert!(d.bracket_basis(0, 3).is_empty());
        assert_eq!(d.bracket_basis(3, 5), vec![(4, rat(1))]);
    }
}
