//! Serialized document formats: one JSON document family with a version
//! field, shared by the CLI, the reports, and the regression tests.
//!
//! Every arbitrary-precision number is rendered as a decimal string
//! (`"n"` or `"n/d"`); exponent vectors are plain integer arrays. Term
//! lists follow the canonical graded-lexicographic order, so serializing
//! the same value twice yields identical bytes.

use crate::error::{Error, Result};
use crate::generators::GeneratorSet;
use crate::invariants::InvariantSet;
use crate::linalg::QMatrix;
use crate::pencil::{PencilProfile, ProjParam};
use crate::polyring::Poly;
use crate::rational::{rat_from_string, rat_to_string, Rat};
use crate::rootdata::{Family, LieAlgebraData, PointOnDual, Series};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

pub const DOC_VERSION: &str = "1";

/// Algebra document: basis labels, sparse structure constants
/// `(i, j, k, numerator, denominator)`, and the invariant form entries.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraDoc {
    pub version: String,
    pub kind: String,
    pub series: String,
    pub rank: String,
    pub doubled: bool,
    pub dim: String,
    pub positive_roots: String,
    pub basis: Vec<String>,
    pub constants: Vec<[String; 5]>,
    pub form: Vec<[String; 4]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub highest_root_coeffs: Option<Vec<String>>,
}

impl AlgebraDoc {
    pub fn from_algebra(g: &LieAlgebraData) -> Self {
        let mut constants = Vec::new();
        for ((i, j), terms) in g.constants() {
            for (k, c) in terms {
                constants.push([
                    i.to_string(),
                    j.to_string(),
                    k.to_string(),
                    c.numer().to_string(),
                    c.denom().to_string(),
                ]);
            }
        }
        let mut form = Vec::new();
        for i in 0..g.dim {
            for j in i..g.dim {
                let v = g.form.at(i, j);
                if !v.is_zero() {
                    form.push([
                        i.to_string(),
                        j.to_string(),
                        v.numer().to_string(),
                        v.denom().to_string(),
                    ]);
                }
            }
        }
        AlgebraDoc {
            version: DOC_VERSION.into(),
            kind: "algebra".into(),
            series: g.family.series().to_string(),
            rank: match g.family {
                Family::Simple(_) => g.rank.to_string(),
                Family::Double(_) => (g.rank / 2).to_string(),
            },
            doubled: g.family.is_double(),
            dim: g.dim.to_string(),
            positive_roots: g.u_count.to_string(),
            basis: g.basis.iter().map(|b| b.label.clone()).collect(),
            constants,
            form,
            highest_root_coeffs: g
                .root_data
                .as_ref()
                .map(|rd| rd.highest_coeffs.iter().map(|a| a.to_string()).collect()),
        }
    }

    /// Rebuild an algebra value (without representation or root data) from
    /// the document; enough for validation and bracket work.
    pub fn to_algebra(&self) -> Result<LieAlgebraData> {
        let series = Series::from_letter(self.series.chars().next().unwrap_or('?'))
            .ok_or_else(|| Error::InvalidConfig(format!("unknown series {}", self.series)))?;
        let rank: usize = self
            .rank
            .parse()
            .map_err(|_| Error::InvalidConfig("bad rank".into()))?;
        let dim: usize = self
            .dim
            .parse()
            .map_err(|_| Error::InvalidConfig("bad dim".into()))?;
        let u_count: usize = self
            .positive_roots
            .parse()
            .map_err(|_| Error::InvalidConfig("bad positive_roots".into()))?;
        if self.basis.len() != dim {
            return Err(Error::InvalidConfig("basis length != dim".into()));
        }
        let mut constants: BTreeMap<(usize, usize), Vec<(usize, Rat)>> = BTreeMap::new();
        for [i, j, k, num, den] in &self.constants {
            let parse = |s: &str| -> Result<usize> {
                s.parse()
                    .map_err(|_| Error::InvalidConfig(format!("bad index {s}")))
            };
            let (i, j, k) = (parse(i)?, parse(j)?, parse(k)?);
            let c = rat_from_string(&format!("{num}/{den}"))
                .ok_or_else(|| Error::InvalidConfig("bad rational".into()))?;
            constants.entry((i, j)).or_default().push((k, c));
        }
        let mut form = QMatrix::zeros(dim, dim);
        for [i, j, num, den] in &self.form {
            let i: usize = i
                .parse()
                .map_err(|_| Error::InvalidConfig("bad form index".into()))?;
            let j: usize = j
                .parse()
                .map_err(|_| Error::InvalidConfig("bad form index".into()))?;
            let v = rat_from_string(&format!("{num}/{den}"))
                .ok_or_else(|| Error::InvalidConfig("bad rational".into()))?;
            form.set(i, j, v.clone());
            form.set(j, i, v);
        }
        let family = if self.doubled {
            Family::Double(series)
        } else {
            Family::Simple(series)
        };
        let ambient_rank = if self.doubled { 2 * rank } else { rank };
        Ok(LieAlgebraData::new_raw(
            family,
            ambient_rank,
            self.basis.clone(),
            constants,
            form,
            None,
            None,
            u_count,
        ))
    }
}

/// Polynomial document: `{vars, terms: [{exp, num, den}]}` in canonical
/// monomial order.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PolyDoc {
    pub vars: Vec<String>,
    pub terms: Vec<TermDoc>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermDoc {
    pub exp: Vec<u32>,
    pub num: String,
    pub den: String,
}

impl PolyDoc {
    pub fn from_poly(p: &Poly, vars: &[String]) -> Self {
        PolyDoc {
            vars: vars.to_vec(),
            terms: p
                .terms()
                .map(|(m, c)| TermDoc {
                    exp: m.0.clone(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        }
    }

    pub fn to_poly(&self) -> Result<Poly> {
        let n = self.vars.len();
        let mut p = Poly::zero(n);
        for t in &self.terms {
            if t.exp.len() != n {
                return Err(Error::InvalidConfig("exponent length != vars".into()));
            }
            let c = rat_from_string(&format!("{}/{}", t.num, t.den))
                .ok_or_else(|| Error::InvalidConfig("bad rational".into()))?;
            p = p.checked_add(&Poly::monomial(n, t.exp.clone(), c))?;
        }
        Ok(p)
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InvariantSetDoc {
    pub version: String,
    pub kind: String,
    pub realization: String,
    pub degrees: Vec<String>,
    pub polys: Vec<PolyDoc>,
}

impl InvariantSetDoc {
    pub fn new(inv: &InvariantSet, vars: &[String]) -> Self {
        InvariantSetDoc {
            version: DOC_VERSION.into(),
            kind: "invariants".into(),
            realization: inv.realization.clone(),
            degrees: inv.degrees.iter().map(|d| d.to_string()).collect(),
            polys: inv
                .polys
                .iter()
                .map(|p| PolyDoc::from_poly(p, vars))
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorItemDoc {
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bidegree: Option<[usize; 2]>,
    pub poly: PolyDoc,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeneratorSetDoc {
    pub version: String,
    pub kind: String,
    pub scenario: String,
    pub series: String,
    pub rank: String,
    pub expected_count: String,
    pub items: Vec<GeneratorItemDoc>,
}

impl GeneratorSetDoc {
    pub fn new(set: &GeneratorSet, series: Series, rank: usize, vars: &[String]) -> Self {
        GeneratorSetDoc {
            version: DOC_VERSION.into(),
            kind: "generators".into(),
            scenario: set.scenario.name().into(),
            series: series.to_string(),
            rank: rank.to_string(),
            expected_count: set.expected_count.to_string(),
            items: set
                .items
                .iter()
                .map(|it| GeneratorItemDoc {
                    provenance: it.provenance.clone(),
                    bidegree: it.bidegree.map(|bd| [bd.h, bd.r]),
                    poly: PolyDoc::from_poly(&it.poly, vars),
                })
                .collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PointDoc {
    pub version: String,
    pub kind: String,
    pub coords: Vec<String>,
}

impl PointDoc {
    pub fn from_point(p: &PointOnDual) -> Self {
        PointDoc {
            version: DOC_VERSION.into(),
            kind: "point".into(),
            coords: p.coords().iter().map(rat_to_string).collect(),
        }
    }

    pub fn to_point(&self) -> Result<PointOnDual> {
        let coords = self
            .coords
            .iter()
            .map(|s| {
                rat_from_string(s)
                    .ok_or_else(|| Error::InvalidConfig(format!("bad coordinate {s}")))
            })
            .collect::<Result<Vec<Rat>>>()?;
        Ok(PointOnDual(coords))
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SingularDoc {
    pub params: Vec<String>,
    pub proportional: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ProfileDoc {
    pub version: String,
    pub kind: String,
    pub size: String,
    pub generic_rank: String,
    pub singular: SingularDoc,
    pub kernel_sum_dim: String,
    pub jordan_line_count: String,
}

fn param_string(p: &ProjParam) -> String {
    match p {
        ProjParam::Finite(t) => rat_to_string(t),
        ProjParam::Infinity => "inf".into(),
    }
}

impl ProfileDoc {
    pub fn from_profile(p: &PencilProfile) -> Self {
        ProfileDoc {
            version: DOC_VERSION.into(),
            kind: "pencil-profile".into(),
            size: p.size.to_string(),
            generic_rank: p.generic_rank.to_string(),
            singular: SingularDoc {
                params: p.singular.params.iter().map(param_string).collect(),
                proportional: p.singular.proportional,
            },
            kernel_sum_dim: p.kernel_sum_dim.to_string(),
            jordan_line_count: p.jordan_line_count.to_string(),
        }
    }
}

/// One certificate as serialized: name, status, witness data. Elapsed time
/// is reported on stdout only so that identical runs produce byte-identical
/// report files.
#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CheckDoc {
    pub name: String,
    pub status: String,
    pub witness: serde_json::Value,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportAlgebraDoc {
    pub series: String,
    pub rank: String,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ReportDoc {
    pub version: String,
    pub kind: String,
    pub algebra: ReportAlgebraDoc,
    pub scenario: String,
    pub seed: String,
    pub samples: String,
    pub bound: String,
    pub checks: Vec<CheckDoc>,
}

/// Serialize any document deterministically (sorted object keys come from
/// the default `serde_json` map; struct fields keep declaration order).
pub fn to_json_pretty<T: Serialize>(doc: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(doc)?;
    s.push('\n');
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{build_classical, validate_structure};

    #[test]
    fn algebra_document_round_trip() {
        let g = build_classical(Series::A, 2).unwrap();
        let doc = AlgebraDoc::from_algebra(&g);
        let back = doc.to_algebra().unwrap();
        assert_eq!(back.dim, g.dim);
        assert_eq!(back.constants(), g.constants());
        assert_eq!(back.form, g.form);
        assert!(validate_structure(&back).pass());
        // Document serialization is stable byte-for-byte.
        let one = to_json_pretty(&doc).unwrap();
        let two = to_json_pretty(&AlgebraDoc::from_algebra(&g)).unwrap();
        assert_eq!(one, two);
    }

    #[test]
    fn poly_document_round_trip() {
        use crate::rational::ratio;
        let p = &Poly::monomial(3, vec![2, 0, 1], ratio(-7, 3))
            + &Poly::monomial(3, vec![0, 1, 0], ratio(1, 2));
        let vars = vec!["e".into(), "h".into(), "f".into()];
        let doc = PolyDoc::from_poly(&p, &vars);
        assert_eq!(doc.to_poly().unwrap(), p);
    }

    #[test]
    fn point_document_round_trip() {
        let p = PointOnDual(vec![crate::rational::rat(-1), crate::rational::ratio(3, 2)]);
        let doc = PointDoc::from_point(&p);
        assert_eq!(doc.to_point().unwrap(), p);
    }
}
