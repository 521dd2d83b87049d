//! Cross-module properties over the shipped diagram fixtures.

use std::path::Path;

use num_bigint::BigInt;
use num_traits::Signed;

use knotpoly::census;
use knotpoly::diagram::PlanarDiagram;
use knotpoly::graph;
use knotpoly::invariants;
use knotpoly::jones;
use knotpoly::tutte;

fn census_records() -> Vec<census::CensusRecord> {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/census.csv");
    census::load_census(path).unwrap()
}

fn all_diagrams() -> Vec<(String, PlanarDiagram)> {
    let mut out = vec![
        ("unknot".to_string(), PlanarDiagram::unknot()),
        ("trefoil".to_string(), PlanarDiagram::trefoil()),
        ("figure_eight".to_string(), PlanarDiagram::figure_eight()),
    ];
    for r in census_records() {
        out.push((r.name.clone(), PlanarDiagram::parse(&r.pd).unwrap()));
    }
    out
}

#[test]
fn checkerboard_pairs_satisfy_euler_relations() {
    for (name, d) in all_diagrams() {
        let (p, g) = d.checkerboard_graphs();
        assert_eq!(p.edge_count(), d.crossing_count(), "{name}");
        assert_eq!(g.edge_count(), d.crossing_count(), "{name}");
        assert_eq!(
            p.vertex_count() + g.vertex_count(),
            d.crossing_count() + 2,
            "{name}"
        );
        assert_eq!(d.faces().len(), d.crossing_count() + 2, "{name}");
    }
}

#[test]
fn tutte_duality_transposition_on_all_fixtures() {
    // T_G(x,y) = T_G*(y,x) for every checkerboard pair
    for (name, d) in all_diagrams() {
        let (p, g) = d.checkerboard_graphs();
        let tp = tutte::tutte_deletion_contraction(&p);
        let tg = tutte::tutte_deletion_contraction(&g);
        assert_eq!(tp.transposed(), tg, "{name}: duality transposition failed");
    }
}

#[test]
fn jones_unit_evaluation_on_all_fixtures() {
    // |V(1)| = 1 for every knot
    for (name, d) in all_diagrams() {
        let j = jones::jones_via_bracket(&d).unwrap();
        assert_eq!(j.poly.eval_at_one().abs(), BigInt::from(1), "{name}");
        assert!(j.passes_unit_check(), "{name}");
    }
}

#[test]
fn predictions_hold_for_both_graphs_of_alternating_fixtures() {
    for (name, d) in all_diagrams() {
        if !d.is_alternating() || d.crossing_count() == 0 {
            continue;
        }
        let (p, g) = d.checkerboard_graphs();
        assert!(invariants::verify_prediction(&p).unwrap(), "{name}: purple");
        assert!(invariants::verify_prediction(&g).unwrap(), "{name}: gold");
        // the trace corollary agrees with the direct prediction
        for graph in [&p, &g] {
            let s = graph.simplify();
            let direct = invariants::predict_top_coefficients(&s).unwrap();
            let (am1, am2) = invariants::trace_corollary(&s).unwrap();
            assert_eq!(am1, direct.a_top_minus_1.abs(), "{name}");
            assert_eq!(am2, direct.a_top_minus_2.abs(), "{name}");
        }
    }
}

#[test]
fn bound_ordering_on_all_profiles() {
    // 2 v0 (max - 1) <= 10 v0 (sum - 1) holds whenever max >= 1; torus
    // knots can have both second coefficients zero and fall outside that
    for record in census_records() {
        let profile = census::profile_for_record(&record).unwrap();
        let max = profile.abs_from_low(1).max(profile.abs_from_high(1));
        if max < BigInt::from(1) {
            continue;
        }
        let bounds = invariants::volume_bounds(&profile, Some(record.crossings));
        assert!(
            bounds.lower <= bounds.upper + 1e-12,
            "{}: lower {} > upper {}",
            record.name,
            bounds.lower,
            bounds.upper
        );
        assert!(bounds.lackenby_lower <= bounds.lackenby_upper + 1e-12);
    }
}

#[test]
fn dual_round_trips_on_all_fixtures() {
    for (name, d) in all_diagrams() {
        let (p, g) = d.checkerboard_graphs();
        let dual_p = graph::dual(&p, &d).unwrap();
        assert_eq!(dual_p.structure_key(), g.structure_key(), "{name}");
        let back = graph::dual(&dual_p, &d).unwrap();
        assert_eq!(back.structure_key(), p.structure_key(), "{name}");
    }
}

#[test]
fn alternating_fixtures_have_opposite_uniform_signs() {
    for (name, d) in all_diagrams() {
        if d.crossing_count() == 0 {
            continue;
        }
        let (p, g) = d.checkerboard_graphs();
        if d.is_alternating() {
            let mut signs = [p.uniform_sign(), g.uniform_sign()];
            signs.sort();
            assert_eq!(signs, [Some(-1), Some(1)], "{name}");
        } else {
            assert!(
                p.uniform_sign().is_none() || g.uniform_sign().is_none(),
                "{name}: non-alternating diagram with sign-uniform graphs"
            );
        }
    }
}
