//! The Jones polynomial by two independent routes: the Tutte evaluation of
//! the positive checkerboard graph (alternating diagrams) and the Kauffman
//! bracket state sum (any diagram). The bracket is the oracle of record;
//! route agreement validates every diagram-level convention.

use num_traits::Signed;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::graph::{self, UnionFind};
use crate::polynomial::LaurentPoly;
use crate::tutte;

/// State-enumeration cutoff for the bracket (2^c smoothing states).
pub const BRACKET_CROSSING_LIMIT: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Route {
    Tutte,
    Bracket,
}

#[derive(Clone, Debug)]
pub struct JonesPolynomial {
    pub poly: LaurentPoly,
    pub route: Route,
}

/// `V_K(t) = (-1)^w t^((b-a+3w)/4) T_G(-t, -1/t)` with `G` the positive
/// checkerboard graph, `a = |V(G)|`, `b = |V(G*)|` and `w` the writhe.
/// Requires a reduced alternating diagram.
pub fn jones_via_tutte(d: &PlanarDiagram) -> Result<JonesPolynomial> {
    let g = d.positive_checkerboard()?;
    let g_dual = graph::dual(&g, d)?;
    if g.has_loops() || g_dual.has_loops() {
        return Err(Error::NotReduced);
    }
    let a = g.vertex_count() as i64;
    let b = g_dual.vertex_count() as i64;
    let w = d.writhe();
    let numerator = b - a + 3 * w;
    if numerator.rem_euclid(4) != 0 {
        return Err(Error::NonIntegralShift(numerator));
    }
    let eval = tutte::jones_eval(&g).shifted(numerator / 4);
    let poly = if w.rem_euclid(2) == 0 { eval } else { -&eval };
    Ok(JonesPolynomial {
        poly,
        route: Route::Tutte,
    })
}

/// Kauffman bracket state sum: over the `2^c` smoothings,
/// `A^(#A - #B) (-A^2 - A^-2)^(loops - 1)`, corrected by `(-A)^(-3w)` and
/// converted by `t = A^-4`. Works for alternating and non-alternating
/// diagrams alike.
pub fn jones_via_bracket(d: &PlanarDiagram) -> Result<JonesPolynomial> {
    let c = d.crossing_count();
    if c > BRACKET_CROSSING_LIMIT {
        return Err(Error::TooLarge(format!(
            "bracket state sum enumerates 2^c states; c = {c} exceeds {BRACKET_CROSSING_LIMIT}"
        )));
    }
    if c == 0 {
        return Ok(JonesPolynomial {
            poly: LaurentPoly::one(),
            route: Route::Bracket,
        });
    }

    let n_edges = d.edge_count();
    let delta = LaurentPoly::from_terms([(2, -1), (-2, -1)]);
    let mut delta_pows = Vec::with_capacity(n_edges + 1);
    delta_pows.push(LaurentPoly::one());
    for i in 1..=n_edges {
        delta_pows.push(&delta_pows[i - 1] * &delta);
    }

    // 0-based slot labels per crossing, smoothings as arc identifications:
    // the A-smoothing joins slots (a,b) and (c,d), the B-smoothing (a,d)
    // and (b,c)
    let slots: Vec<[usize; 4]> = d
        .crossings()
        .iter()
        .map(|cr| cr.slots().map(|l| l - 1))
        .collect();

    let mut bracket = LaurentPoly::zero();
    for state in 0u32..(1u32 << c) {
        let mut uf = UnionFind::new(n_edges);
        let mut a_count: i64 = 0;
        for (i, &[a, b, cc, dd]) in slots.iter().enumerate() {
            if state >> i & 1 == 0 {
                uf.union(a, b);
                uf.union(cc, dd);
                a_count += 1;
            } else {
                uf.union(a, dd);
                uf.union(b, cc);
            }
        }
        let loops = uf.components();
        let exponent = 2 * a_count - c as i64;
        let term = delta_pows[loops - 1].shifted(exponent);
        bracket = &bracket + &term;
    }

    // multiply by (-A)^(-3w) = (-1)^w A^(-3w)
    let w = d.writhe();
    let corrected = bracket.shifted(-3 * w);
    let corrected = if w.rem_euclid(2) == 0 {
        corrected
    } else {
        -&corrected
    };

    // substitute t = A^-4; any remainder signals a convention bug
    let mut terms = Vec::new();
    for (exp, coeff) in corrected.iter() {
        if exp.rem_euclid(4) != 0 {
            return Err(Error::NonIntegralExponent(exp));
        }
        terms.push((-exp / 4, coeff.clone()));
    }
    Ok(JonesPolynomial {
        poly: LaurentPoly::from_terms(terms),
        route: Route::Bracket,
    })
}

/// Run both routes and insist on exact agreement (alternating diagrams).
pub fn jones_both_routes(d: &PlanarDiagram) -> Result<JonesPolynomial> {
    let tutte_route = jones_via_tutte(d)?;
    let bracket_route = jones_via_bracket(d)?;
    if tutte_route.poly != bracket_route.poly {
        return Err(Error::InvalidDiagram(format!(
            "route disagreement: tutte gave {}, bracket gave {}",
            tutte_route.poly, bracket_route.poly
        )));
    }
    Ok(tutte_route)
}

impl JonesPolynomial {
    /// `|V(1)|` must be 1 for a knot.
    pub fn passes_unit_check(&self) -> bool {
        self.poly.eval_at_one().abs() == 1.into()
    }
}
