//! Coefficient predictions from checkerboard graph data, twist numbers from
//! Jones coefficients, and the volume bounds they imply.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::graph::{self, Multigraph, SimplifiedGraph};
use crate::jones;
use crate::polynomial::LaurentPoly;
use crate::tutte;

/// Volume of the ideal regular hyperbolic tetrahedron, at full double
/// precision.
pub const V0: f64 = 1.0149416064096536;

/// Absolute tolerance for comparisons of volume bounds against ingested
/// census volumes.
pub const VOLUME_TOLERANCE: f64 = 1e-9;

fn choose2(k: i64) -> i64 {
    k * (k - 1) / 2
}

/// The three highest-degree coefficients of `T_G(-t, -1/t)` predicted from
/// graph data alone: `a_top` at degree `|V| - 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoefficientPrediction {
    pub a_top: i64,
    pub a_top_minus_1: i64,
    pub a_top_minus_2: i64,
    pub top_degree: i64,
}

/// Predict the top three coefficients from `(|V|, |E~|, n(2), tri)` of a
/// connected loop-free graph.
pub fn predict_top_coefficients(s: &SimplifiedGraph) -> Result<CoefficientPrediction> {
    if s.loop_count() > 0 {
        return Err(Error::HasLoops);
    }
    let v = s.vertex_count() as i64;
    let base = s.base_edge_count() as i64;
    let n2 = s.n_count(2) as i64;
    let tri = s.triangle_count() as i64;

    let sign_top = if (v - 1).rem_euclid(2) == 0 { 1 } else { -1 };
    let a_top = sign_top;
    let a_top_minus_1 = sign_top * (v - 1 - base);
    let a_top_minus_2 = -sign_top * (-choose2(a_top_minus_1.abs() + 1) - n2 + tri);
    Ok(CoefficientPrediction {
        a_top,
        a_top_minus_1,
        a_top_minus_2,
        top_degree: v - 1,
    })
}

/// True iff the top three coefficients of `jones_eval(G)` match the
/// prediction exactly, including the top degree.
pub fn verify_prediction(g: &Multigraph) -> Result<bool> {
    if g.has_loops() {
        return Err(Error::HasLoops);
    }
    if !g.is_connected() {
        return Err(Error::BadArgument(
            "coefficient prediction requires a connected graph".into(),
        ));
    }
    let predicted = predict_top_coefficients(&g.simplify())?;
    let eval = tutte::jones_eval(g);
    let top = match eval.max_degree() {
        Some(m) => m,
        None => return Ok(false),
    };
    Ok(top == predicted.top_degree
        && eval.coeff(top) == BigInt::from(predicted.a_top)
        && eval.coeff(top - 1) == BigInt::from(predicted.a_top_minus_1)
        && eval.coeff(top - 2) == BigInt::from(predicted.a_top_minus_2))
}

/// `(|a_(m-1)|, |a_(m-2)|)` from adjacency traces:
/// `|a_(m-1)| = trace(A~^2)/2 + 1 - |V|` and
/// `|a_(m-2)| = C(|a_(m-1)|+1, 2) + n(2) - trace(A~^3)/6`.
pub fn trace_corollary(s: &SimplifiedGraph) -> Result<(i64, i64)> {
    if s.loop_count() > 0 {
        return Err(Error::HasLoops);
    }
    let (trace2, trace3, n2) = s.adjacency_traces();
    let v = s.vertex_count() as i64;
    let a_m1 = trace2 as i64 / 2 + 1 - v;
    let a_m2 = choose2(a_m1 + 1) + n2 as i64 - trace3 as i64 / 6;
    Ok((a_m1, a_m2))
}

/// Coefficient vector of a Jones polynomial together with the twist numbers
/// `T_i = |a_(n+i)| + |a_(m-i)|`.
#[derive(Clone, Debug)]
pub struct TwistProfile {
    /// ascending coefficient list from `t^n` to `t^m`, zeros explicit
    pub coeffs: Vec<(i64, BigInt)>,
    /// `twist[i]` holds `T_(i+1)`, for `1 <= i+1 <= span/2`
    pub twist: Vec<BigInt>,
    pub span: i64,
}

impl TwistProfile {
    /// `|a_(n+i)|`, reading coefficients outside the span as zero.
    pub fn abs_from_low(&self, i: usize) -> BigInt {
        self.coeffs
            .get(i)
            .map(|(_, c)| c.abs())
            .unwrap_or_else(BigInt::zero)
    }

    /// `|a_(m-i)|`, reading coefficients outside the span as zero.
    pub fn abs_from_high(&self, i: usize) -> BigInt {
        if i >= self.coeffs.len() {
            return BigInt::zero();
        }
        self.coeffs[self.coeffs.len() - 1 - i].1.abs()
    }

    /// `T_i` as defined for `i >= 1`, zero-extended beyond the span.
    pub fn twist_number(&self, i: usize) -> BigInt {
        self.abs_from_low(i) + self.abs_from_high(i)
    }

    /// The twist number `T(K) = T_1`.
    pub fn t1(&self) -> BigInt {
        self.twist_number(1)
    }
}

/// Extract the twist profile of a Jones polynomial. `T_i` is populated for
/// `1 <= i <= floor(span/2)`.
pub fn twist_profile(poly: &LaurentPoly) -> Result<TwistProfile> {
    let coeffs = poly.coefficients()?;
    let span = poly.span().expect("nonzero polynomial");
    let profile = TwistProfile {
        coeffs,
        twist: Vec::new(),
        span,
    };
    let twist = (1..=(span / 2) as usize)
        .map(|i| profile.twist_number(i))
        .collect();
    Ok(TwistProfile { twist, ..profile })
}

/// Graph-side twist number `|E~| + |E~*| - |E|` of a reduced alternating
/// diagram.
pub fn twist_number_from_graphs(d: &PlanarDiagram) -> Result<i64> {
    if !d.is_alternating() {
        return Err(Error::NotAlternating);
    }
    let (p, g) = d.checkerboard_graphs();
    if p.has_loops() || g.has_loops() {
        return Err(Error::NotReduced);
    }
    let base = p.simplify().base_edge_count() as i64;
    let base_dual = g.simplify().base_edge_count() as i64;
    Ok(base + base_dual - p.edge_count() as i64)
}

/// Second-order coefficient identity: checks
/// `|a_(n+2)| + |a_(m-2)| + |a_(m-1)| |a_(n+1)|
///   = (T + T^2)/2 + n(2) + n*(2) - tri - tri*`
/// with the right-hand side read off the checkerboard pair.
pub fn second_order_identity_check(d: &PlanarDiagram) -> Result<bool> {
    let v = jones_via_tutte_profile(d)?;
    let t = twist_number_from_graphs(d)?;
    let (p, g) = d.checkerboard_graphs();
    let (sp, sg) = (p.simplify(), g.simplify());
    let rhs = (t + t * t) / 2 + sp.n_count(2) as i64 + sg.n_count(2) as i64
        - sp.triangle_count() as i64
        - sg.triangle_count() as i64;
    let lhs = v.abs_from_low(2) + v.abs_from_high(2) + v.abs_from_low(1) * v.abs_from_high(1);
    Ok(lhs == BigInt::from(rhs))
}

fn jones_via_tutte_profile(d: &PlanarDiagram) -> Result<TwistProfile> {
    let j = jones::jones_via_tutte(d)?;
    twist_profile(&j.poly)
}

/// Two-sided volume bounds from a twist profile. Values are reported as
/// computed and may be non-positive for very small knots; the hypotheses
/// (alternating, prime, non-torus) are the caller's responsibility.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VolumeBounds {
    pub lower: f64,
    pub upper: f64,
    pub lackenby_lower: f64,
    pub lackenby_upper: f64,
    pub adams_upper: Option<f64>,
}

impl VolumeBounds {
    /// `lower <= vol <= upper`, to the volume tolerance.
    pub fn brackets(&self, volume: f64) -> bool {
        self.lower <= volume + VOLUME_TOLERANCE && volume <= self.upper + VOLUME_TOLERANCE
    }

    /// `lackenby_lower <= vol < lackenby_upper`, to the volume tolerance.
    pub fn lackenby_brackets(&self, volume: f64) -> bool {
        self.lackenby_lower <= volume + VOLUME_TOLERANCE
            && volume < self.lackenby_upper + VOLUME_TOLERANCE
    }
}

/// `2 v0 (max(|a_(m-1)|, |a_(n+1)|) - 1) <= Vol <= 10 v0 (|a_(n+1)| + |a_(m-1)| - 1)`,
/// plus the twist-number bounds `v0 (T - 2) <= Vol < 10 v0 (T - 1)`.
pub fn volume_bounds(p: &TwistProfile, crossings: Option<usize>) -> VolumeBounds {
    let lo = p.abs_from_low(1).to_f64().unwrap_or(f64::INFINITY);
    let hi = p.abs_from_high(1).to_f64().unwrap_or(f64::INFINITY);
    let t1 = lo + hi;
    VolumeBounds {
        lower: 2.0 * V0 * (lo.max(hi) - 1.0),
        upper: 10.0 * V0 * (t1 - 1.0),
        lackenby_lower: V0 * (t1 - 2.0),
        lackenby_upper: 10.0 * V0 * (t1 - 1.0),
        adams_upper: crossings.and_then(adams_upper),
    }
}

/// Adams bound `Vol <= (4c - 16) v0`, defined for crossing number `c > 4`.
pub fn adams_upper(c: usize) -> Option<f64> {
    if c > 4 {
        Some((4.0 * c as f64 - 16.0) * V0)
    } else {
        None
    }
}

/// Bundle of per-diagram identity checks used by the `verify` subcommand:
/// the Jones-side and graph-side twist numbers, the second-order identity,
/// and the structural facts for reduced alternating diagrams.
#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub twist_graph_side: i64,
    pub twist_jones_side: BigInt,
    pub twist_numbers_agree: bool,
    pub second_order_identity: bool,
    pub span_equals_crossings: bool,
    pub signs_alternate: bool,
    pub extreme_coeffs_unit: bool,
    pub prediction_matches_both_graphs: bool,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.twist_numbers_agree
            && self.second_order_identity
            && self.span_equals_crossings
            && self.signs_alternate
            && self.extreme_coeffs_unit
            && self.prediction_matches_both_graphs
    }
}

/// Signs alternate in the weak sense: some global sign `eps` has
/// `eps (-1)^i a_(n+i) >= 0` for every coefficient, zeros allowed (torus
/// knots like the trefoil have interior zeros).
pub fn signs_alternate(coeffs: &[(i64, BigInt)]) -> bool {
    let fits = |eps: i64| {
        coeffs.iter().enumerate().all(|(i, (_, c))| {
            let signed = if i % 2 == 0 { c.clone() } else { -c };
            (signed * eps) >= BigInt::zero()
        })
    };
    fits(1) || fits(-1)
}

/// Run every Theorem and Proposition identity on one reduced alternating
/// diagram.
pub fn verify_diagram(d: &PlanarDiagram) -> Result<VerifyReport> {
    let j = jones::jones_both_routes(d)?;
    let profile = twist_profile(&j.poly)?;
    let graph_t = twist_number_from_graphs(d)?;
    let (p, g) = d.checkerboard_graphs();
    let prediction_matches = verify_prediction(&p)?
        && verify_prediction(&graph::dual(&p, d)?)?
        && verify_prediction(&g)?;
    Ok(VerifyReport {
        twist_graph_side: graph_t,
        twist_jones_side: profile.t1(),
        twist_numbers_agree: profile.t1() == BigInt::from(graph_t),
        second_order_identity: second_order_identity_check(d)?,
        span_equals_crossings: profile.span == d.crossing_count() as i64,
        signs_alternate: signs_alternate(&profile.coeffs),
        extreme_coeffs_unit: profile.abs_from_low(0) == BigInt::from(1)
            && profile.abs_from_high(0) == BigInt::from(1),
        prediction_matches_both_graphs: prediction_matches,
    })
}

/// The worked example's Jones polynomial: coefficients (1, -4, 11, -23, 35,
/// -47, 53, -52, 47, -34, 22, -11, 4, -1) from `t^-12` up to `t`.
pub fn sample_13_crossing_jones() -> LaurentPoly {
    let coeffs: [i64; 14] = [1, -4, 11, -23, 35, -47, 53, -52, 47, -34, 22, -11, 4, -1];
    LaurentPoly::from_terms((0..14).map(|i| (i as i64 - 12, coeffs[i])))
}
