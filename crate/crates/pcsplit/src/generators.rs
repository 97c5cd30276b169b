//! Generator sets of the Poisson-commutative subalgebras attached to a
//! 2-splitting: the centres of the two contractions, the commutative
//! subalgebra spanned by all regular centres, and the maximality witness of
//! the Borel scenario.
//!
//! Everything is assembled from bi-homogeneous components of the basic
//! symmetric invariants in the realization coordinates of the scenario, so
//! membership and commutativity claims are verified by exact symbolic
//! brackets downstream.

use crate::brackets::{BracketKernel, BracketParam};
use crate::error::{Error, Result};
use crate::invariants::{basic_invariants, InvariantSet};
use crate::polyring::{BiDegree, Poly, TopSide};
use crate::rational::Rat;
use crate::rootdata::{
    build_classical, splitting_borel_opposite, splitting_involution_max_rank, splitting_manin,
    LieAlgebraData, Scenario, Series, Splitting,
};
use num_traits::Zero;

/// A generator with its provenance tag and, when it is a bi-homogeneous
/// component, its bi-degree.
#[derive(Debug, Clone)]
pub struct GeneratorItem {
    pub poly: Poly,
    pub provenance: String,
    pub bidegree: Option<BiDegree>,
}

/// Tagged generator list with the count the construction predicts. For the
/// maximality witness the expected count is the transcendence degree, one
/// less than the item count (the top component is a monomial in the added
/// root vectors).
#[derive(Debug, Clone)]
pub struct GeneratorSet {
    pub scenario: Scenario,
    pub items: Vec<GeneratorItem>,
    pub expected_count: usize,
}

impl GeneratorSet {
    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn polys(&self) -> impl Iterator<Item = &Poly> {
        self.items.iter().map(|it| &it.poly)
    }
}

/// Which end of the bracket family a centre belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ContractionEnd {
    Zero,
    Infinity,
}

impl ContractionEnd {
    pub fn param(self) -> BracketParam {
        match self {
            ContractionEnd::Zero => BracketParam::zero(),
            ContractionEnd::Infinity => BracketParam::Infinity,
        }
    }
}

/// Everything a scenario needs in one place: the simple algebra, the ambient
/// algebra in standard coordinates, the realization whose basis makes the
/// splitting a coordinate partition, and the invariants transported into
/// realization coordinates.
#[derive(Debug, Clone)]
pub struct ScenarioContext {
    pub scenario: Scenario,
    pub series: Series,
    /// Rank of the simple factor.
    pub base_rank: usize,
    /// The simple algebra `g` in its standard basis.
    pub base: LieAlgebraData,
    /// The ambient algebra in standard coordinates (`g`, or `g×g`).
    pub standard: LieAlgebraData,
    /// The ambient algebra in realization coordinates, parts attached.
    pub algebra: LieAlgebraData,
    pub splitting: Splitting,
    /// Basic invariants in realization coordinates (pairs interleaved for
    /// the double).
    pub invariants: InvariantSet,
    /// Realization indices of the Cartan-type central elements the
    /// construction adjoins: `t` for the Borel scenario, the diagonal Cartan for the
    /// Manin scenario, empty for the involution scenario.
    pub cartan_indices: Vec<usize>,
}

impl ScenarioContext {
    pub fn new(series: Series, rank: usize, scenario: Scenario) -> Result<Self> {
        let base = build_classical(series, rank)?;
        match scenario {
            Scenario::BorelOpposite => {
                let splitting = splitting_borel_opposite(&base);
                let mut algebra = base.clone();
                algebra.attach_splitting(&splitting);
                let invariants = basic_invariants(&base)?;
                let cartan_indices = (base.u_count..base.u_count + rank).collect();
                Ok(ScenarioContext {
                    scenario,
                    series,
                    base_rank: rank,
                    standard: base.clone(),
                    base,
                    algebra,
                    splitting,
                    invariants,
                    cartan_indices,
                })
            }
            Scenario::Involution => {
                let realized = splitting_involution_max_rank(&base)?;
                let inv = basic_invariants(&base)?;
                let polys = inv
                    .polys
                    .iter()
                    .map(|p| p.substitute_linear(&realized.old_in_new))
                    .collect();
                let invariants = InvariantSet {
                    polys,
                    degrees: inv.degrees,
                    realization: format!("{} in (b, g0) coordinates", inv.realization),
                };
                Ok(ScenarioContext {
                    scenario,
                    series,
                    base_rank: rank,
                    standard: base.clone(),
                    base,
                    algebra: realized.algebra,
                    splitting: realized.splitting,
                    invariants,
                    cartan_indices: Vec::new(),
                })
            }
            Scenario::Manin => {
                let (double, realized) = splitting_manin(&base)?;
                let inv = basic_invariants(&double)?;
                let polys: Vec<Poly> = inv
                    .polys
                    .iter()
                    .map(|p| p.substitute_linear(&realized.old_in_new))
                    .collect();
                let invariants = InvariantSet {
                    polys,
                    degrees: inv.degrees,
                    realization: format!("{} in Manin coordinates", inv.realization),
                };
                // Diagonal Cartan sits in the r-block at the Cartan offset.
                let n = base.dim;
                let cartan_indices = (n + base.u_count..n + base.u_count + rank).collect();
                Ok(ScenarioContext {
                    scenario,
                    series,
                    base_rank: rank,
                    standard: double,
                    base,
                    algebra: realized.algebra,
                    splitting: realized.splitting,
                    invariants,
                    cartan_indices,
                })
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim
    }

    pub fn h_mask(&self) -> Vec<bool> {
        self.splitting.h_mask(self.dim())
    }

    /// `b(g)` of the ambient algebra.
    pub fn b_magic(&self) -> usize {
        self.algebra.b_magic()
    }

    /// The homogeneous family whose bi-homogeneous components generate the
    /// commutative subalgebra: the invariants themselves, or for the double
    /// the two combinations per invariant pair. Each entry carries a tag,
    /// the polynomial, its degree, and whether its pure-h component
    /// survives (governs the component range `1..=d` vs `1..=d-1`).
    pub fn component_sources(&self) -> Vec<ComponentSource> {
        match self.scenario {
            Scenario::BorelOpposite | Scenario::Involution => self
                .invariants
                .polys
                .iter()
                .zip(&self.invariants.degrees)
                .enumerate()
                .map(|(j, (p, &d))| ComponentSource {
                    tag: format!("H{}", j + 1),
                    poly: p.clone(),
                    degree: d,
                    top_included: self.scenario == Scenario::Involution,
                    excluded_top_vanishes: false,
                    antisymmetric: false,
                })
                .collect(),
            Scenario::Manin => {
                let mut out = Vec::new();
                let pairs = self.invariants.polys.len() / 2;
                for j in 0..pairs {
                    let h_i = &self.invariants.polys[2 * j];
                    let h_ii = &self.invariants.polys[2 * j + 1];
                    let d = self.invariants.degrees[2 * j];
                    let sign_even = d.is_multiple_of(2);
                    // The combination H_I ± H_II whose restriction to the
                    // annihilator of the diagonal survives contributes
                    // components up to the pure-h one; the other vanishes
                    // there and stops one earlier.
                    let (surviving, vanishing) = if sign_even {
                        (h_i + h_ii, h_i - h_ii)
                    } else {
                        (h_i - h_ii, h_i + h_ii)
                    };
                    let sign_char = |plus: bool| if plus { '+' } else { '-' };
                    out.push(ComponentSource {
                        tag: format!("H{0}I{1}H{0}II", j + 1, sign_char(sign_even)),
                        poly: surviving,
                        degree: d,
                        top_included: true,
                        excluded_top_vanishes: false,
                        antisymmetric: !sign_even,
                    });
                    out.push(ComponentSource {
                        tag: format!("H{0}I{1}H{0}II", j + 1, sign_char(!sign_even)),
                        poly: vanishing,
                        degree: d,
                        top_included: false,
                        excluded_top_vanishes: true,
                        antisymmetric: sign_even,
                    });
                }
                out
            }
        }
    }
}

/// One homogeneous polynomial whose bi-homogeneous components enter a
/// generator set.
#[derive(Debug, Clone)]
pub struct ComponentSource {
    pub tag: String,
    pub poly: Poly,
    pub degree: usize,
    /// Whether the pure-h component `(d, 0)` belongs to the generator range.
    pub top_included: bool,
    /// When the pure-h component is excluded: does it vanish identically
    /// (Manin anti-matching combination), as opposed to being a redundant
    /// Cartan polynomial (Borel scenario)?
    pub excluded_top_vanishes: bool,
    /// The τ-antisymmetric combination `H_I - H_II` of a double.
    pub antisymmetric: bool,
}

fn cartan_items(ctx: &ScenarioContext) -> Vec<GeneratorItem> {
    ctx.cartan_indices
        .iter()
        .map(|&i| GeneratorItem {
            poly: Poly::var(ctx.dim(), i),
            provenance: format!("cartan({})", ctx.algebra.basis[i].label),
            bidegree: None,
        })
        .collect()
}

fn component_item(source: &ComponentSource, bd: BiDegree, poly: Poly) -> GeneratorItem {
    GeneratorItem {
        provenance: format!("{}_{}", source.tag, bd),
        poly,
        bidegree: Some(bd),
    }
}

/// Generators of the Poisson centre of the contraction at one end of the
/// family: top bi-homogeneous components of the invariants (plus the
/// central Cartan elements where the construction adjoins them).
pub fn center_generators(ctx: &ScenarioContext, end: ContractionEnd) -> Result<GeneratorSet> {
    let mask = ctx.h_mask();
    let l = ctx.base_rank;
    let mut items = Vec::new();
    let expected_count;
    match (ctx.scenario, end) {
        (Scenario::BorelOpposite, ContractionEnd::Zero)
        | (Scenario::Involution, ContractionEnd::Zero) => {
            for src in ctx.component_sources() {
                let (bd, top) = src.poly.top_component(&mask, TopSide::SecondSummandMax)?;
                items.push(component_item(&src, bd, top));
            }
            expected_count = l;
        }
        (Scenario::BorelOpposite, ContractionEnd::Infinity) => {
            items.extend(cartan_items(ctx));
            expected_count = l;
        }
        (Scenario::Involution, ContractionEnd::Infinity) => {
            for src in ctx.component_sources() {
                let (bd, top) = src.poly.top_component(&mask, TopSide::FirstSummandMax)?;
                items.push(component_item(&src, bd, top));
            }
            expected_count = l;
        }
        (Scenario::Manin, ContractionEnd::Zero) => {
            // F_j = (H_{j,I} - H_{j,II})^• together with the diagonal Cartan.
            for src in ctx.component_sources() {
                if src.antisymmetric {
                    let (bd, top) = src.poly.top_component(&mask, TopSide::SecondSummandMax)?;
                    items.push(component_item(&src, bd, top));
                }
            }
            items.extend(cartan_items(ctx));
            expected_count = 2 * l;
        }
        (Scenario::Manin, ContractionEnd::Infinity) => {
            for src in ctx.component_sources() {
                let (bd, top) = src.poly.top_component(&mask, TopSide::FirstSummandMax)?;
                items.push(component_item(&src, bd, top));
            }
            expected_count = 2 * l;
        }
    }
    ensure_nonzero(&items)?;
    Ok(GeneratorSet {
        scenario: ctx.scenario,
        items,
        expected_count,
    })
}

/// Free generators of the commutative subalgebra spanned by the centres of
/// all regular brackets: the bi-homogeneous components of the invariant
/// family over the splitting bigrading, with the Cartan basis adjoined for
/// the Borel and Manin scenarios.
///
/// Counts: Borel `l + Σ(d_j - 1) = b(g)`; involution `Σ d_j = b(g)`; Manin
/// `2b(g)`.
pub fn pc_generators(ctx: &ScenarioContext) -> Result<GeneratorSet> {
    let mask = ctx.h_mask();
    let mut items = cartan_items(ctx);
    for src in ctx.component_sources() {
        let comps = src.poly.bihomogeneous_decompose(&mask)?;
        let hi = if src.top_included {
            src.degree
        } else {
            src.degree - 1
        };
        for (bd, poly) in comps {
            if bd.h >= 1 && bd.h <= hi {
                items.push(component_item(&src, bd, poly));
            }
        }
    }
    let expected_count = match ctx.scenario {
        Scenario::BorelOpposite => ctx.b_magic(),
        Scenario::Involution => ctx.b_magic(),
        Scenario::Manin => ctx.b_magic(), // ambient is the double: 2b(g)
    };
    if items.len() != expected_count {
        return Err(Error::InvalidConfig(format!(
            "generator count {} does not match the predicted {}",
            items.len(),
            expected_count
        )));
    }
    ensure_nonzero(&items)?;
    Ok(GeneratorSet {
        scenario: ctx.scenario,
        items,
        expected_count,
    })
}

/// The maximality witness of the Borel scenario: the commutative-subalgebra
/// generators together with `e_δ` and `f_1, …, f_l`. Its transcendence
/// degree is `b(g) + l`; the item list carries one redundancy (the top
/// component of the last invariant is a monomial in the adjoined root
/// vectors), which is why `expected_count = b(g) + l` while the list is one
/// longer.
pub fn maximality_witness(ctx: &ScenarioContext) -> Result<GeneratorSet> {
    if ctx.scenario != Scenario::BorelOpposite {
        return Err(Error::UnsupportedScenario {
            series: ctx.series.to_string(),
            rank: ctx.base_rank,
            reason: "the maximality witness is a Borel-scenario construction".into(),
        });
    }
    let mut set = pc_generators(ctx)?;
    let rd = ctx
        .base
        .root_data
        .as_ref()
        .expect("classical algebras carry root data");
    let n = ctx.dim();
    let e_delta = rd.roots[rd.highest].e_index;
    set.items.push(GeneratorItem {
        poly: Poly::var(n, e_delta),
        provenance: format!("root-vector({})", ctx.base.basis[e_delta].label),
        bidegree: None,
    });
    for &s in &rd.simple {
        let f_idx = rd.roots[s].f_index;
        set.items.push(GeneratorItem {
            poly: Poly::var(n, f_idx),
            provenance: format!("root-vector({})", ctx.base.basis[f_idx].label),
            bidegree: None,
        });
    }
    set.expected_count = ctx.b_magic() + ctx.base_rank;
    Ok(set)
}

/// The torus-invariant monomial `e_δ^c · Π f_i^{c·a_i}` is a power of the
/// top component of the last invariant, up to the scalar returned here.
pub fn torus_monomial_power_scalar(ctx: &ScenarioContext, c: u32) -> Result<Option<Rat>> {
    let (top, monomial) = highest_top_component(ctx)?;
    Ok(top.pow(c).proportional_to(&monomial.pow(c)))
}

/// The top component of the last invariant and the predicted monomial
/// `e_δ · Π f_i^{a_i}`.
pub fn highest_top_component(ctx: &ScenarioContext) -> Result<(Poly, Poly)> {
    let mask = ctx.h_mask();
    let last = ctx
        .invariants
        .polys
        .last()
        .ok_or_else(|| Error::InvalidConfig("empty invariant set".into()))?;
    let (_, top) = last.top_component(&mask, TopSide::SecondSummandMax)?;
    let rd = ctx
        .base
        .root_data
        .as_ref()
        .expect("classical algebras carry root data");
    let n = ctx.dim();
    let mut exp = vec![0u32; n];
    exp[rd.roots[rd.highest].e_index] = 1;
    for (i, &s) in rd.simple.iter().enumerate() {
        exp[rd.roots[s].f_index] = rd.highest_coeffs[i] as u32;
    }
    let monomial = Poly::monomial(n, exp, Rat::from_integer(1.into()));
    Ok((top, monomial))
}

fn ensure_nonzero(items: &[GeneratorItem]) -> Result<()> {
    for it in items {
        if it.poly.is_zero() {
            return Err(Error::InvalidConfig(format!(
                "generator {} is identically zero",
                it.provenance
            )));
        }
    }
    Ok(())
}

/// Exact centre-membership check: every element of the set brackets to zero
/// with every degree-1 element under the given end's contracted bracket.
pub fn is_exact_center(ctx: &ScenarioContext, set: &GeneratorSet, end: ContractionEnd) -> bool {
    let kernel = BracketKernel::family(&ctx.algebra, &ctx.splitting, &end.param());
    let n = ctx.dim();
    set.polys().all(|p| {
        let dp: Vec<Poly> = (0..n).map(|i| p.partial(i)).collect();
        (0..n).all(|i| {
            let mut dx = vec![Poly::zero(n); n];
            dx[i] = Poly::one(n);
            kernel.bracket_via_partials(&dp, &dx).is_zero()
        })
    })
}

/// The `Σ_j deg_V H_j = dim V` identity over the scenario's invariant
/// family: `V = r` for the Borel and involution splittings, `V = h` for the
/// Manin splitting. Returns (sum, dim V).
pub fn ggs_identity(ctx: &ScenarioContext) -> Result<(usize, usize)> {
    let mask = ctx.h_mask();
    let mut sum = 0usize;
    let manin = ctx.scenario == Scenario::Manin;
    for src in ctx.component_sources() {
        let side = if manin {
            TopSide::FirstSummandMax
        } else {
            TopSide::SecondSummandMax
        };
        let (bd, _) = src.poly.top_component(&mask, side)?;
        sum += if manin { bd.h } else { bd.r };
    }
    let v_dim = if manin {
        ctx.splitting.h_indices.len()
    } else {
        ctx.splitting.r_indices.len()
    };
    Ok((sum, v_dim))
}

/// Restriction vanishing: the pure-r component of every source vanishes or
/// lies in the Cartan subalgebra adjoined to the set, and for sources whose
/// pure-h component is excluded that component vanishes identically.
pub fn restriction_vanishing_holds(ctx: &ScenarioContext) -> Result<bool> {
    let mask = ctx.h_mask();
    let cartan_only = {
        let mut v = vec![false; ctx.dim()];
        for &i in &ctx.cartan_indices {
            v[i] = true;
        }
        v
    };
    for src in ctx.component_sources() {
        let comps = src.poly.bihomogeneous_decompose(&mask)?;
        for (bd, poly) in comps {
            if bd.h == 0 {
                // (0, d): must vanish, except that for the double it may lie
                // in the diagonal Cartan (and is then redundant).
                if ctx.scenario == Scenario::Manin {
                    if !poly.supported_on(&cartan_only) {
                        return Ok(false);
                    }
                } else {
                    return Ok(false); // a nonzero (0, d) component exists
                }
            }
            if bd.h == src.degree && src.excluded_top_vanishes {
                return Ok(false); // a component that must vanish is present
            }
        }
    }
    Ok(true)
}

/// The pure-h components the Borel construction drops are polynomials in the
/// Cartan variables alone (so they already lie in the subalgebra generated
/// by the adjoined Cartan basis).
pub fn pure_h_components_in_cartan(ctx: &ScenarioContext) -> Result<bool> {
    let mask = ctx.h_mask();
    let cartan_only = {
        let mut v = vec![false; ctx.dim()];
        for &i in &ctx.cartan_indices {
            v[i] = true;
        }
        v
    };
    for src in ctx.component_sources() {
        if src.top_included || src.excluded_top_vanishes {
            continue; // included in the set, or identically zero
        }
        for (bd, poly) in src.poly.bihomogeneous_decompose(&mask)? {
            if bd.h == src.degree && !poly.supported_on(&cartan_only) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Vandermonde-style closure: for each source `H` of degree `d`,
/// `φ_t(H) = Σ_i t^{d-i} (H)_{i,d-i}` exactly at every sampled `t`, and
/// every component outside the generator range vanishes or lies in the
/// adjoined Cartan subalgebra. Together these place each `φ_t(H)` inside
/// the algebra generated by the returned set.
pub fn vandermonde_closure_holds(ctx: &ScenarioContext, samples: &[Rat]) -> Result<bool> {
    let mask = ctx.h_mask();
    let cartan_only = {
        let mut v = vec![false; ctx.dim()];
        for &i in &ctx.cartan_indices {
            v[i] = true;
        }
        v
    };
    for src in ctx.component_sources() {
        let comps = src.poly.bihomogeneous_decompose(&mask)?;
        for (bd, poly) in &comps {
            let in_range = bd.h >= 1
                && bd.h
                    <= if src.top_included {
                        src.degree
                    } else {
                        src.degree - 1
                    };
            if !in_range && !poly.supported_on(&cartan_only) {
                return Ok(false);
            }
        }
        for t in samples {
            if t.is_zero() {
                continue;
            }
            let lhs = src.poly.apply_phi(&mask, t)?;
            let mut rhs = Poly::zero(ctx.dim());
            for (bd, poly) in &comps {
                let mut factor = Rat::from_integer(1.into());
                for _ in 0..(src.degree - bd.h) {
                    factor *= t;
                }
                rhs = &rhs + &poly.scale(&factor);
            }
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
