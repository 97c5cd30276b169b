//! Orchestrated identity checks producing machine-readable certificates.
//!
//! Every `pass` is backed by an exact zero or an exact rank over the
//! rationals; sampling only chooses *where* to evaluate, never *how close*
//! the answer is. Checks that need a conforming sample (a regular point, a
//! point on a divisor, a point in general position) retry within a budget
//! and report `inconclusive` when the budget runs out — genericity can not
//! be refuted by unlucky sampling. Each check derives its own random stream
//! from the run seed and the check name, so reports are byte-identical for
//! identical configurations regardless of scheduling.

use crate::brackets::{pencil_at, BracketKernel, BracketParam};
use crate::docs::{CheckDoc, ReportAlgebraDoc, ReportDoc, DOC_VERSION};
use crate::error::{Error, Result};
use crate::generators::{
    center_generators, ggs_identity, highest_top_component, is_exact_center, maximality_witness,
    pc_generators, pure_h_components_in_cartan, restriction_vanishing_holds,
    torus_monomial_power_scalar, vandermonde_closure_holds, ContractionEnd, GeneratorSet,
    ScenarioContext,
};
use crate::invariants::check_adg_invariance;
use crate::linalg::QMatrix;
use crate::pencil::kernel_sum;
use crate::polyring::{BiDegree, Poly};
use crate::rational::{rat, rat_to_string, Rat};
use crate::rootdata::{principal_nilpotent_point, validate_structure, Scenario, Series};
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};
use std::time::Instant;

/// Run configuration, echoed into every report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RunConfig {
    pub seed: u64,
    pub samples: usize,
    /// Sampled integer coordinates live in `[-bound, bound]`.
    pub bound: i64,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            samples: 16,
            bound: 20,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Inconclusive => "inconclusive",
        }
    }

    fn from_bool(b: bool) -> Status {
        if b {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

/// One executed check: exact verdict plus the witness data needed to replay
/// it (sampled points, ranks found, pairs checked).
#[derive(Debug, Clone)]
pub struct Certificate {
    pub name: String,
    pub status: Status,
    pub witness: Value,
    /// Wall-clock time; reported on stdout, never serialized into the
    /// report file (identical runs must produce identical bytes).
    pub elapsed_ms: u128,
}

impl Certificate {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

/// Report of one scenario run.
#[derive(Debug, Clone)]
pub struct Report {
    pub series: Series,
    pub rank: usize,
    pub scenario: Scenario,
    pub config: RunConfig,
    pub certificates: Vec<Certificate>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.certificates.iter().all(|c| c.passed())
    }

    pub fn to_doc(&self) -> ReportDoc {
        ReportDoc {
            version: DOC_VERSION.into(),
            kind: "report".into(),
            algebra: ReportAlgebraDoc {
                series: self.series.to_string(),
                rank: self.rank.to_string(),
            },
            scenario: self.scenario.name().into(),
            seed: self.config.seed.to_string(),
            samples: self.config.samples.to_string(),
            bound: self.config.bound.to_string(),
            checks: self
                .certificates
                .iter()
                .map(|c| CheckDoc {
                    name: c.name.clone(),
                    status: c.status.as_str().into(),
                    witness: c.witness.clone(),
                })
                .collect(),
        }
    }

    pub fn summary_lines(&self) -> Vec<String> {
        self.certificates
            .iter()
            .map(|c| {
                format!(
                    "{:<12} {:<24} {} ms",
                    c.status.as_str().to_uppercase(),
                    c.name,
                    c.elapsed_ms
                )
            })
            .collect()
    }
}

// ---------------------------------------------------------------------------
// Deterministic sampling
// ---------------------------------------------------------------------------

/// SplitMix64 stream seeded from `(seed, name)`; identical inputs give an
/// identical stream on every platform and schedule.
#[derive(Debug, Clone)]
pub struct Stream {
    state: u64,
}

impl Stream {
    pub fn derive(seed: u64, name: &str) -> Stream {
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        for b in name.as_bytes() {
            h ^= u64::from(*b);
            h = h.wrapping_mul(0x1000_0000_01b3);
        }
        Stream {
            state: h ^ seed.wrapping_mul(0x9e37_79b9_7f4a_7c15),
        }
    }

    fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Integer in `[-bound, bound]`.
    pub fn int_in(&mut self, bound: i64) -> i64 {
        let span = (2 * bound + 1) as u64;
        (self.next_u64() % span) as i64 - bound
    }

    /// Point with integer coordinates in `[-bound, bound]`.
    pub fn point(&mut self, dim: usize, bound: i64) -> Vec<Rat> {
        (0..dim).map(|_| rat(self.int_in(bound))).collect()
    }
}

fn point_json(p: &[Rat]) -> Value {
    Value::Array(p.iter().map(|c| Value::String(rat_to_string(c))).collect())
}

/// Exact rank of the Jacobian of a polynomial family at a point.
pub fn jacobian_rank(polys: &[&Poly], xi: &[Rat]) -> usize {
    let rows: Vec<Vec<Rat>> = polys.iter().map(|p| p.grad_at(xi)).collect();
    QMatrix::from_rows(rows).rank()
}

fn timed(name: &str, f: impl FnOnce() -> (Status, Value)) -> Certificate {
    let start = Instant::now();
    let (status, witness) = f();
    Certificate {
        name: name.into(),
        status,
        witness,
        elapsed_ms: start.elapsed().as_millis(),
    }
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

/// Pass iff every pairwise bracket of the set is the exact zero polynomial
/// under `{,}_t`. Pairs are checked in parallel.
pub fn check_commute(ctx: &ScenarioContext, set: &GeneratorSet, t: &BracketParam) -> Certificate {
    let name = match t {
        BracketParam::Infinity => "commute_tinf".to_string(),
        BracketParam::Finite(v) if v.is_zero() => "commute_t0".into(),
        BracketParam::Finite(v) => format!("commute_t{}", rat_to_string(v)),
    };
    timed(&name, || {
        let kernel = BracketKernel::family(&ctx.algebra, &ctx.splitting, t);
        let n = ctx.dim();
        // Integer-normalized copies keep the bignum arithmetic cheap; the
        // vanishing of a bracket is scale-invariant.
        let polys: Vec<Poly> = set.polys().map(|p| p.primitive_integral()).collect();
        let partials: Vec<Vec<Poly>> = polys
            .par_iter()
            .map(|p| (0..n).map(|i| p.partial(i)).collect())
            .collect();
        let mut pairs = Vec::new();
        for i in 0..polys.len() {
            for j in (i + 1)..polys.len() {
                pairs.push((i, j));
            }
        }
        let failures: Vec<(usize, usize)> = pairs
            .par_iter()
            .filter(|&&(i, j)| {
                !kernel
                    .bracket_via_partials(&partials[i], &partials[j])
                    .is_zero()
            })
            .cloned()
            .collect();
        let witness = json!({
            "bracket": t.to_string(),
            "pairs_checked": pairs.len().to_string(),
            "failing_pairs": failures
                .iter()
                .map(|(i, j)| json!([
                    set.items[*i].provenance,
                    set.items[*j].provenance,
                ]))
                .collect::<Vec<_>>(),
        });
        (Status::from_bool(failures.is_empty()), witness)
    })
}

/// Maximum over sampled points of the exact Jacobian rank: a lower bound
/// for the transcendence degree, nondecreasing in `trials`.
pub fn trdeg_estimate(set: &GeneratorSet, trials: usize, seed: u64, bound: i64) -> usize {
    let polys: Vec<&Poly> = set.polys().collect();
    let Some(dim) = polys.first().map(|p| p.nvars()) else {
        return 0;
    };
    let mut stream = Stream::derive(seed, "trdeg");
    let mut best = 0;
    for _ in 0..trials.max(1) {
        let xi = stream.point(dim, bound);
        best = best.max(jacobian_rank(&polys, &xi));
    }
    best
}

/// Minimum over sampled points of the corank of `π_t`: an upper bound for
/// the index of `g_(t)`, nonincreasing in `trials`, equal to the index on
/// the generic stratum.
pub fn index_estimate(
    ctx: &ScenarioContext,
    t: &BracketParam,
    trials: usize,
    seed: u64,
    bound: i64,
) -> usize {
    let kernel = BracketKernel::family(&ctx.algebra, &ctx.splitting, t);
    let mut stream = Stream::derive(seed, &format!("index_{t}"));
    let mut best = ctx.dim();
    for _ in 0..trials.max(1) {
        let xi = stream.point(ctx.dim(), bound);
        best = best.min(kernel.tensor_at(&xi).corank());
    }
    best
}

/// Completeness at a point: pass iff the point is regular
/// (`corank π_1(ξ) = ind g`) and `dim d_ξ(set) = b(g)`; the zero point is
/// trivially complete (its orbit has dimension 0).
pub fn completeness_check(ctx: &ScenarioContext, set: &GeneratorSet, xi: &[Rat]) -> Certificate {
    timed("completeness_at_y", || {
        if xi.iter().all(|c| c.is_zero()) {
            return (
                Status::Pass,
                json!({
                    "point": point_json(xi),
                    "orbit_dimension": "0",
                    "note": "zero point: the orbit is a point, trivially complete",
                }),
            );
        }
        let corank = BracketKernel::lie(&ctx.algebra).tensor_at(xi).corank();
        let polys: Vec<&Poly> = set.polys().collect();
        let span = jacobian_rank(&polys, xi);
        let regular = corank == ctx.algebra.rank;
        let complete = span == ctx.b_magic();
        (
            Status::from_bool(regular && complete),
            json!({
                "point": point_json(xi),
                "corank_pi1": corank.to_string(),
                "expected_corank": ctx.algebra.rank.to_string(),
                "differential_span": span.to_string(),
                "expected_span": ctx.b_magic().to_string(),
            }),
        )
    })
}

/// Divisor specification for the singular-set checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Divisor {
    /// `D(α) = {ξ : ξ([e_α, f_α]) = 0}` for the positive root at this
    /// index.
    RootHyperplane(usize),
    /// `D_i = {ξ : ξ(f_i) = 0}` for the i-th simple root (0-based); only
    /// meaningful when the highest-root coefficient exceeds 1.
    SimpleRootZero(usize),
}

/// Minimal corank of `π_t` over points sampled on the divisor. The Borel
/// scenario's standard coordinates are assumed.
pub fn divisor_corank(
    ctx: &ScenarioContext,
    divisor: Divisor,
    end: ContractionEnd,
    trials: usize,
    seed: u64,
    bound: i64,
) -> Result<(usize, Vec<Rat>)> {
    let rd = ctx
        .base
        .root_data
        .as_ref()
        .expect("classical algebras carry root data");
    let n = ctx.dim();
    let constraint: Vec<Rat> = match divisor {
        Divisor::RootHyperplane(root_idx) => {
            let e = rd.roots[root_idx].e_index;
            let f = rd.roots[root_idx].f_index;
            let mut unit_e = vec![Rat::zero(); n];
            unit_e[e] = rat(1);
            let mut unit_f = vec![Rat::zero(); n];
            unit_f[f] = rat(1);
            ctx.base.bracket_vectors(&unit_e, &unit_f)
        }
        Divisor::SimpleRootZero(i) => {
            let coeff = rd.highest_coeffs[i];
            if coeff <= 1 {
                return Err(Error::InvalidDivisor(format!(
                    "the highest-root coefficient at simple root {} is {}, so this divisor is \
                     not part of the singular set (it is 1 for every coefficient in type A)",
                    i + 1,
                    coeff
                )));
            }
            let mut v = vec![Rat::zero(); n];
            v[rd.roots[rd.simple[i]].f_index] = rat(1);
            v
        }
    };
    let kernel = BracketKernel::family(&ctx.algebra, &ctx.splitting, &end.param());
    let mut stream = Stream::derive(seed, &format!("divisor_{:?}_{:?}", divisor, end));
    let pivot = constraint
        .iter()
        .position(|c| !c.is_zero())
        .expect("divisor constraint is a nonzero linear form");
    let mut best = n;
    let mut witness = Vec::new();
    for _ in 0..trials.max(1) {
        // Sample the hyperplane: free integer coordinates, then solve the
        // single linear condition for the pivot coordinate.
        let mut xi = stream.point(n, bound);
        let mut dot = Rat::zero();
        for (k, c) in constraint.iter().enumerate() {
            if k != pivot && !c.is_zero() {
                dot += c * &xi[k];
            }
        }
        xi[pivot] = -dot / &constraint[pivot];
        let corank = kernel.tensor_at(&xi).corank();
        if corank < best {
            best = corank;
            witness = xi;
        }
    }
    Ok((best, witness))
}

// ---------------------------------------------------------------------------
// Scenario orchestration
// ---------------------------------------------------------------------------

fn structure_certificate(ctx: &ScenarioContext) -> Certificate {
    timed("structure", || {
        let report = validate_structure(&ctx.algebra);
        let witness = json!({
            "checks": report
                .checks
                .iter()
                .map(|c| json!({
                    "name": c.name,
                    "pass": c.pass.to_string(),
                    "detail": c.detail,
                }))
                .collect::<Vec<_>>(),
        });
        (Status::from_bool(report.pass()), witness)
    })
}

fn splitting_certificate(ctx: &ScenarioContext) -> Certificate {
    timed("splitting", || {
        let s = &ctx.splitting;
        let h_closed = ctx.algebra.span_bracket_closed(&s.h_indices);
        let r_closed = ctx.algebra.span_bracket_closed(&s.r_indices);
        let disjoint_cover = {
            let mut seen = vec![0u8; ctx.dim()];
            for &i in s.h_indices.iter().chain(&s.r_indices) {
                seen[i] += 1;
            }
            seen.iter().all(|&c| c == 1)
        };
        let dims_ok = match ctx.scenario {
            Scenario::BorelOpposite => s.h_indices.len() == ctx.b_magic(),
            Scenario::Involution => {
                s.r_indices.len() == ctx.base.u_count && s.h_indices.len() == ctx.base.b_magic()
            }
            Scenario::Manin => s.h_indices.len() == s.r_indices.len(),
        };
        (
            Status::from_bool(h_closed && r_closed && disjoint_cover && dims_ok),
            json!({
                "h_dim": s.h_indices.len().to_string(),
                "r_dim": s.r_indices.len().to_string(),
                "h_bracket_closed": h_closed.to_string(),
                "r_bracket_closed": r_closed.to_string(),
                "disjoint_cover": disjoint_cover.to_string(),
            }),
        )
    })
}

fn invariants_certificate(ctx: &ScenarioContext, config: &RunConfig) -> Certificate {
    timed("invariants", || {
        let inv = &ctx.invariants;
        let invariant_ok = inv
            .polys
            .par_iter()
            .all(|p| check_adg_invariance(p, &ctx.algebra));
        let degrees_ok = inv.degrees.windows(2).all(|w| w[0] <= w[1])
            && inv.degree_sum() == ctx.b_magic()
            && inv
                .polys
                .iter()
                .zip(&inv.degrees)
                .all(|(p, &d)| p.homogeneous_degree() == Some(d));
        // Kostant regularity at a sampled regular point: the differentials
        // of the basic invariants span a space of dimension ind g.
        let mut stream = Stream::derive(config.seed, "invariants_kostant");
        let lie = BracketKernel::lie(&ctx.algebra);
        let mut kostant = Status::Inconclusive;
        let mut kostant_point = Vec::new();
        for _ in 0..(8 * config.samples) {
            let xi = stream.point(ctx.dim(), config.bound);
            if lie.tensor_at(&xi).corank() == ctx.algebra.rank {
                let polys: Vec<&Poly> = inv.polys.iter().collect();
                kostant = Status::from_bool(jacobian_rank(&polys, &xi) == ctx.algebra.rank);
                kostant_point = xi;
                break;
            }
        }
        let status = if !invariant_ok || !degrees_ok || kostant == Status::Fail {
            Status::Fail
        } else {
            kostant
        };
        (
            status,
            json!({
                "realization": inv.realization,
                "ad_invariant": invariant_ok.to_string(),
                "degrees": inv.degrees.iter().map(|d| d.to_string()).collect::<Vec<_>>(),
                "degree_sum": inv.degree_sum().to_string(),
                "expected_degree_sum": ctx.b_magic().to_string(),
                "kostant_rank_point": point_json(&kostant_point),
            }),
        )
    })
}

fn bigrading_certificate(ctx: &ScenarioContext, config: &RunConfig) -> Certificate {
    timed("bigrading", || {
        let (ggs_sum, v_dim) = match ggs_identity(ctx) {
            Ok(v) => v,
            Err(e) => return (Status::Fail, json!({ "error": e.to_string() })),
        };
        let restriction = restriction_vanishing_holds(ctx).unwrap_or(false);
        let pure_h = pure_h_components_in_cartan(ctx).unwrap_or(false);
        let mut stream = Stream::derive(config.seed, "vandermonde");
        let samples: Vec<Rat> = (0..4)
            .map(|_| {
                let mut v = stream.int_in(config.bound);
                if v == 0 {
                    v = 1;
                }
                rat(v)
            })
            .collect();
        let vandermonde = vandermonde_closure_holds(ctx, &samples).unwrap_or(false);
        (
            Status::from_bool(ggs_sum == v_dim && restriction && pure_h && vandermonde),
            json!({
                "ggs_degree_sum": ggs_sum.to_string(),
                "complement_dim": v_dim.to_string(),
                "restriction_vanishing": restriction.to_string(),
                "pure_h_in_cartan": pure_h.to_string(),
                "vandermonde_closure": vandermonde.to_string(),
                "vandermonde_samples": samples.iter().map(rat_to_string).collect::<Vec<_>>(),
            }),
        )
    })
}

fn center_certificate(ctx: &ScenarioContext, end: ContractionEnd) -> Certificate {
    let name = match end {
        ContractionEnd::Zero => "center_zero",
        ContractionEnd::Infinity => "center_infinity",
    };
    timed(name, || {
        let set = match center_generators(ctx, end) {
            Ok(s) => s,
            Err(e) => return (Status::Fail, json!({ "error": e.to_string() })),
        };
        let count_ok = set.len() == set.expected_count;
        let membership = is_exact_center(ctx, &set, end);
        // The 0-end top components of the Borel and involution scenarios
        // sit in bi-degree (1, d_j - 1).
        let bidegrees_ok = match (ctx.scenario, end) {
            (Scenario::BorelOpposite | Scenario::Involution, ContractionEnd::Zero) => set
                .items
                .iter()
                .zip(&ctx.invariants.degrees)
                .all(|(item, &d)| item.bidegree == Some(BiDegree { h: 1, r: d - 1 })),
            (Scenario::BorelOpposite, ContractionEnd::Infinity) => set
                .items
                .iter()
                .zip(&ctx.cartan_indices)
                .all(|(item, &i)| item.poly == Poly::var(ctx.dim(), i)),
            _ => true,
        };
        (
            Status::from_bool(count_ok && membership && bidegrees_ok),
            json!({
                "count": set.len().to_string(),
                "expected_count": set.expected_count.to_string(),
                "exact_center_membership": membership.to_string(),
                "items": set.items.iter().map(|i| i.provenance.clone()).collect::<Vec<_>>(),
            }),
        )
    })
}

fn counts_certificate(_ctx: &ScenarioContext, set: &GeneratorSet) -> Certificate {
    timed("counts", || {
        let expected = set.expected_count;
        let nonzero = set.polys().all(|p| !p.is_zero());
        (
            Status::from_bool(set.len() == expected && nonzero),
            json!({
                "count": set.len().to_string(),
                "expected": expected.to_string(),
                "all_nonzero": nonzero.to_string(),
                "items": set.items.iter().map(|i| i.provenance.clone()).collect::<Vec<_>>(),
            }),
        )
    })
}

fn trdeg_certificate(ctx: &ScenarioContext, set: &GeneratorSet, config: &RunConfig) -> Certificate {
    timed("trdeg", || {
        let expected = set.expected_count;
        let polys: Vec<&Poly> = set.polys().collect();
        let mut stream = Stream::derive(config.seed, "trdeg");
        let mut full_rank_points = Vec::new();
        let mut best = 0usize;
        for _ in 0..(8 * config.samples) {
            if full_rank_points.len() >= 3 {
                break;
            }
            let xi = stream.point(ctx.dim(), config.bound);
            let r = jacobian_rank(&polys, &xi);
            best = best.max(r);
            if r == expected {
                full_rank_points.push(xi);
            }
        }
        let status = if full_rank_points.len() >= 3 {
            Status::Pass
        } else if best > expected {
            Status::Fail
        } else {
            Status::Inconclusive
        };
        (
            status,
            json!({
                "expected": expected.to_string(),
                "max_rank_found": best.to_string(),
                "full_rank_points": full_rank_points.iter().map(|p| point_json(p)).collect::<Vec<_>>(),
            }),
        )
    })
}

fn index_certificate(ctx: &ScenarioContext, t: &BracketParam, config: &RunConfig) -> Certificate {
    let name = match t {
        BracketParam::Infinity => "index_tinf".to_string(),
        BracketParam::Finite(v) if v.is_zero() => "index_t0".into(),
        BracketParam::Finite(v) => format!("index_t{}", rat_to_string(v)),
    };
    timed(&name, || {
        let expected = ctx.algebra.rank;
        let found = index_estimate(ctx, t, config.samples, config.seed, config.bound);
        let status = if found == expected {
            Status::Pass
        } else if found < expected {
            Status::Fail // the index can never undercut the rank here
        } else {
            Status::Inconclusive // no regular point found within budget
        };
        (
            status,
            json!({
                "bracket": t.to_string(),
                "min_corank": found.to_string(),
                "expected_index": expected.to_string(),
                "trials": config.samples.to_string(),
            }),
        )
    })
}

fn kernel_sum_certificate(ctx: &ScenarioContext, config: &RunConfig) -> Certificate {
    timed("kernel_sum", || {
        let mut stream = Stream::derive(config.seed, "kernel_sum");
        let lie = BracketKernel::lie(&ctx.algebra);
        for _ in 0..(8 * config.samples) {
            let xi = stream.point(ctx.dim(), config.bound);
            if lie.tensor_at(&xi).corank() != ctx.algebra.rank {
                continue;
            }
            let pencil = pencil_at(&ctx.algebra, &ctx.splitting, &xi);
            let budget = 4 * ctx.dim() + 16;
            return match kernel_sum(&pencil, budget) {
                Ok((dim, _)) => (
                    Status::from_bool(dim == ctx.b_magic()),
                    json!({
                        "point": point_json(&xi),
                        "kernel_sum_dim": dim.to_string(),
                        "expected": ctx.b_magic().to_string(),
                    }),
                ),
                Err(e) => (Status::Inconclusive, json!({ "error": e.to_string() })),
            };
        }
        (
            Status::Inconclusive,
            json!({ "note": "no regular point found within budget" }),
        )
    })
}

fn completeness_certificate(ctx: &ScenarioContext, set: &GeneratorSet) -> Certificate {
    let triple = principal_nilpotent_point(&ctx.base);
    completeness_check(ctx, set, triple.y.coords())
}

fn divisors_certificate(
    ctx: &ScenarioContext,
    end: ContractionEnd,
    config: &RunConfig,
) -> Certificate {
    let name = match end {
        ContractionEnd::Zero => "divisors_zero",
        ContractionEnd::Infinity => "divisors_infinity",
    };
    timed(name, || {
        let rd = ctx.base.root_data.as_ref().expect("root data");
        let expected = ctx.base_rank + 2;
        let mut entries = Vec::new();
        let mut all_ok = true;
        match end {
            ContractionEnd::Infinity => {
                for idx in 0..rd.roots.len() {
                    let (corank, point) = divisor_corank(
                        ctx,
                        Divisor::RootHyperplane(idx),
                        end,
                        config.samples,
                        config.seed,
                        config.bound,
                    )
                    .expect("root hyperplanes are always valid divisors");
                    all_ok &= corank == expected;
                    entries.push(json!({
                        "divisor": format!("D({})", ctx.base.basis[rd.roots[idx].e_index].label),
                        "min_corank": corank.to_string(),
                        "expected": expected.to_string(),
                        "point": point_json(&point),
                    }));
                }
            }
            ContractionEnd::Zero => {
                let candidates: Vec<usize> = (0..ctx.base_rank)
                    .filter(|&i| rd.highest_coeffs[i] > 1)
                    .collect();
                if candidates.is_empty() {
                    return (
                        Status::Pass,
                        json!({
                            "note": "vacuous: every highest-root coefficient is 1, the \
                                     0-contraction has no singular divisors",
                            "highest_root_coeffs": rd
                                .highest_coeffs
                                .iter()
                                .map(|a| a.to_string())
                                .collect::<Vec<_>>(),
                        }),
                    );
                }
                for i in candidates {
                    let (corank, point) = divisor_corank(
                        ctx,
                        Divisor::SimpleRootZero(i),
                        end,
                        config.samples,
                        config.seed,
                        config.bound,
                    )
                    .expect("coefficient checked above");
                    all_ok &= corank == expected;
                    entries.push(json!({
                        "divisor": format!("D_{}", i + 1),
                        "min_corank": corank.to_string(),
                        "expected": expected.to_string(),
                        "point": point_json(&point),
                    }));
                }
            }
        }
        (Status::from_bool(all_ok), json!({ "divisors": entries }))
    })
}

fn witness_certificate(ctx: &ScenarioContext, config: &RunConfig) -> Certificate {
    timed("witness_rank", || {
        let witness_set = match maximality_witness(ctx) {
            Ok(w) => w,
            Err(e) => return (Status::Fail, json!({ "error": e.to_string() })),
        };
        let rd = ctx.base.root_data.as_ref().expect("root data");
        let marked: Vec<usize> = std::iter::once(rd.roots[rd.highest].e_index)
            .chain(rd.simple.iter().map(|&s| rd.roots[s].f_index))
            .collect();
        let mut stream = Stream::derive(config.seed, "witness_rank");
        // Condition: the point is nonzero on at least l of the l+1 marked
        // root vectors.
        for _ in 0..(8 * config.samples) {
            let xi = stream.point(ctx.dim(), config.bound);
            let nonzero = marked.iter().filter(|&&i| !xi[i].is_zero()).count();
            if nonzero < ctx.base_rank {
                continue;
            }
            let polys: Vec<&Poly> = witness_set.polys().collect();
            let rank = jacobian_rank(&polys, &xi);
            let expected = witness_set.expected_count;
            let monomial_power = torus_monomial_power_scalar(ctx, 2).ok().flatten().is_some();
            let (top, monomial) = match highest_top_component(ctx) {
                Ok(v) => v,
                Err(e) => return (Status::Fail, json!({ "error": e.to_string() })),
            };
            let top_scalar = top.proportional_to(&monomial);
            return (
                Status::from_bool(rank == expected && monomial_power && top_scalar.is_some()),
                json!({
                    "point": point_json(&xi),
                    "jacobian_rank": rank.to_string(),
                    "expected": expected.to_string(),
                    "top_component_scalar": top_scalar
                        .map(|s| rat_to_string(&s))
                        .unwrap_or_else(|| "none".into()),
                    "torus_monomial_is_power": monomial_power.to_string(),
                }),
            );
        }
        (
            Status::Inconclusive,
            json!({ "note": "no point satisfying the open condition found within budget" }),
        )
    })
}

/// Execute every check of a prepared scenario context. Certificates are
/// independent and run in parallel; each derives its own sampling stream
/// from the seed and the check name, and the collected order is fixed, so
/// the report never depends on the schedule.
pub fn run_checks(ctx: &ScenarioContext, config: &RunConfig) -> Vec<Certificate> {
    let set = match pc_generators(ctx) {
        Ok(set) => set,
        Err(e) => {
            return vec![
                structure_certificate(ctx),
                splitting_certificate(ctx),
                Certificate {
                    name: "counts".into(),
                    status: Status::Fail,
                    witness: json!({ "error": e.to_string() }),
                    elapsed_ms: 0,
                },
            ];
        }
    };
    let set = &set;
    type Task<'a> = Box<dyn Fn() -> Certificate + Send + Sync + 'a>;
    let mut tasks: Vec<Task> = vec![
        Box::new(|| structure_certificate(ctx)),
        Box::new(|| splitting_certificate(ctx)),
        Box::new(|| invariants_certificate(ctx, config)),
        Box::new(|| bigrading_certificate(ctx, config)),
        Box::new(|| center_certificate(ctx, ContractionEnd::Zero)),
        Box::new(|| center_certificate(ctx, ContractionEnd::Infinity)),
        Box::new(|| counts_certificate(ctx, set)),
        Box::new(|| check_commute(ctx, set, &BracketParam::zero())),
        Box::new(|| check_commute(ctx, set, &BracketParam::one())),
        Box::new(|| check_commute(ctx, set, &BracketParam::Infinity)),
        Box::new(|| trdeg_certificate(ctx, set, config)),
        Box::new(|| index_certificate(ctx, &BracketParam::zero(), config)),
        Box::new(|| index_certificate(ctx, &BracketParam::one(), config)),
        Box::new(|| index_certificate(ctx, &BracketParam::Infinity, config)),
        Box::new(|| kernel_sum_certificate(ctx, config)),
    ];
    if ctx.scenario == Scenario::BorelOpposite {
        tasks.push(Box::new(|| completeness_certificate(ctx, set)));
        tasks.push(Box::new(|| {
            divisors_certificate(ctx, ContractionEnd::Infinity, config)
        }));
        tasks.push(Box::new(|| {
            divisors_certificate(ctx, ContractionEnd::Zero, config)
        }));
        tasks.push(Box::new(|| witness_certificate(ctx, config)));
    }
    tasks.par_iter().map(|task| task()).collect()
}

/// Build the scenario and run the full check suite.
pub fn run_scenario(
    scenario: Scenario,
    series: Series,
    rank: usize,
    config: &RunConfig,
) -> Result<Report> {
    let ctx = ScenarioContext::new(series, rank, scenario)?;
    let certificates = run_checks(&ctx, config);
    Ok(Report {
        series,
        rank,
        scenario,
        config: *config,
        certificates,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::ScenarioContext;

    fn ctx(series: Series, rank: usize, scenario: Scenario) -> ScenarioContext {
        ScenarioContext::new(series, rank, scenario).unwrap()
    }

    #[test]
    fn commute_detects_a_bad_generator() {
        let c = ctx(Series::A, 1, Scenario::BorelOpposite);
        let mut set = pc_generators(&c).unwrap();
        let cert = check_commute(&c, &set, &BracketParam::one());
        assert!(cert.passed());
        // Adding e breaks commutativity: {e, ef} = eh ≠ 0.
        set.items.push(crate::generators::GeneratorItem {
            poly: Poly::var(3, 0),
            provenance: "intruder(e)".into(),
            bidegree: None,
        });
        let cert = check_commute(&c, &set, &BracketParam::one());
        assert_eq!(cert.status, Status::Fail);
    }

    #[test]
    fn empty_and_singleton_sets_commute() {
        let c = ctx(Series::A, 1, Scenario::BorelOpposite);
        let empty = GeneratorSet {
            scenario: Scenario::BorelOpposite,
            items: vec![],
            expected_count: 0,
        };
        assert!(check_commute(&c, &empty, &BracketParam::one()).passed());
        let single = GeneratorSet {
            scenario: Scenario::BorelOpposite,
            items: vec![crate::generators::GeneratorItem {
                poly: Poly::var(3, 0),
                provenance: "e".into(),
                bidegree: None,
            }],
            expected_count: 1,
        };
        assert!(check_commute(&c, &single, &BracketParam::one()).passed());
    }

    #[test]
    fn trdeg_estimates() {
        let c = ctx(Series::A, 1, Scenario::BorelOpposite);
        let set = pc_generators(&c).unwrap();
        assert_eq!(trdeg_estimate(&set, 8, 42, 20), 2);
        // Duplicating a generator leaves the rank unchanged.
        let mut dup = set.clone();
        dup.items.push(dup.items[0].clone());
        assert_eq!(trdeg_estimate(&dup, 8, 42, 20), 2);
        // Monotone in the number of trials.
        let one = trdeg_estimate(&set, 1, 7, 20);
        let many = trdeg_estimate(&set, 12, 7, 20);
        assert!(one <= many);
    }

    #[test]
    fn manin_trdeg_is_twice_b() {
        let c = ctx(Series::A, 1, Scenario::Manin);
        let set = pc_generators(&c).unwrap();
        assert_eq!(trdeg_estimate(&set, 8, 42, 20), 4);
    }

    #[test]
    fn index_estimates_for_sl2() {
        let c = ctx(Series::A, 1, Scenario::BorelOpposite);
        for t in [
            BracketParam::zero(),
            BracketParam::one(),
            BracketParam::Infinity,
        ] {
            assert_eq!(index_estimate(&c, &t, 8, 42, 20), 1, "t = {t}");
        }
        let m = ctx(Series::A, 1, Scenario::Manin);
        assert_eq!(index_estimate(&m, &BracketParam::zero(), 8, 42, 20), 2);
    }

    #[test]
    fn completeness_at_y_for_sl2_and_sl3() {
        for (rank, expect_span) in [(1usize, 2usize), (2, 5)] {
            let c = ctx(Series::A, rank, Scenario::BorelOpposite);
            let set = pc_generators(&c).unwrap();
            let cert = completeness_certificate(&c, &set);
            assert!(cert.passed(), "A{rank}: {:?}", cert.witness);
            assert_eq!(
                cert.witness["differential_span"],
                expect_span.to_string(),
                "A{rank}"
            );
        }
    }

    #[test]
    fn zero_point_is_trivially_complete() {
        let c = ctx(Series::A, 1, Scenario::BorelOpposite);
        let set = pc_generators(&c).unwrap();
        let cert = completeness_check(&c, &set, &[rat(0), rat(0), rat(0)]);
        assert!(cert.passed());
        assert_eq!(cert.witness["orbit_dimension"], "0");
    }

    #[test]
    fn sl2_divisor_corank_at_infinity() {
        let c = ctx(Series::A, 1, Scenario::BorelOpposite);
        let (corank, _) = divisor_corank(
            &c,
            Divisor::RootHyperplane(0),
            ContractionEnd::Infinity,
            8,
            42,
            20,
        )
        .unwrap();
        assert_eq!(corank, 3); // l + 2
    }

    #[test]
    fn type_a_rejects_simple_root_divisors() {
        let c = ctx(Series::A, 2, Scenario::BorelOpposite);
        let err = divisor_corank(
            &c,
            Divisor::SimpleRootZero(0),
            ContractionEnd::Zero,
            4,
            42,
            20,
        );
        assert!(matches!(err, Err(Error::InvalidDivisor(_))));
    }

    #[test]
    fn index_estimate_is_monotone_in_trials() {
        let c = ctx(Series::A, 2, Scenario::BorelOpposite);
        let one = index_estimate(&c, &BracketParam::zero(), 1, 3, 20);
        let many = index_estimate(&c, &BracketParam::zero(), 12, 3, 20);
        assert!(many <= one);
    }

    #[test]
    fn kostant_rank_tracks_regularity() {
        // rank{d_ξ H_j} = l exactly when corank π_1(ξ) = l: true at a
        // sampled regular point, false at the singular point ξ = 0.
        let c = ctx(Series::A, 2, Scenario::BorelOpposite);
        let lie = BracketKernel::lie(&c.algebra);
        let polys: Vec<&Poly> = c.invariants.polys.iter().collect();
        let mut stream = Stream::derive(42, "kostant_test");
        let xi = loop {
            let xi = stream.point(c.dim(), 20);
            if lie.tensor_at(&xi).corank() == c.algebra.rank {
                break xi;
            }
        };
        assert_eq!(jacobian_rank(&polys, &xi), c.algebra.rank);
        let zero = vec![rat(0); c.dim()];
        assert_ne!(lie.tensor_at(&zero).corank(), c.algebra.rank);
        assert_ne!(jacobian_rank(&polys, &zero), c.algebra.rank);
        // A nonzero singular point: the functional supported on the highest
        // root vector (the minimal nilpotent direction). The differentials
        // must drop rank exactly as the corank leaves the regular value.
        let mut minimal = vec![rat(0); c.dim()];
        minimal[1] = rat(1); // coordinate of the highest root vector of sl3
        let corank = lie.tensor_at(&minimal).corank();
        assert!(corank > c.algebra.rank, "corank {corank}");
        assert!(jacobian_rank(&polys, &minimal) < c.algebra.rank);
    }

    #[test]
    fn streams_are_deterministic_and_name_separated() {
        let a: Vec<i64> = {
            let mut s = Stream::derive(42, "check");
            (0..8).map(|_| s.int_in(20)).collect()
        };
        let b: Vec<i64> = {
            let mut s = Stream::derive(42, "check");
            (0..8).map(|_| s.int_in(20)).collect()
        };
        assert_eq!(a, b);
        let c: Vec<i64> = {
            let mut s = Stream::derive(42, "other");
            (0..8).map(|_| s.int_in(20)).collect()
        };
        assert_ne!(a, c);
        let mut s = Stream::derive(7, "bounds");
        for _ in 0..100 {
            let v = s.int_in(5);
            assert!((-5..=5).contains(&v));
        }
    }
}
