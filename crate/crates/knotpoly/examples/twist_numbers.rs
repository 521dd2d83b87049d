//! Twist numbers two ways: from Jones coefficients (T_i = |a_(n+i)| +
//! |a_(m-i)|) and from the checkerboard graphs (|E~| + |E~*| - |E|), plus
//! the second-order coefficient identity.
//!
//! ```bash
//! cargo run -p knotpoly --example twist_numbers
//! ```

use knotpoly::diagram::PlanarDiagram;
use knotpoly::invariants;
use knotpoly::jones;

fn main() {
    for (name, d) in [
        ("trefoil", PlanarDiagram::trefoil()),
        ("figure-eight", PlanarDiagram::figure_eight()),
    ] {
        let j = jones::jones_both_routes(&d).unwrap();
        let profile = invariants::twist_profile(&j.poly).unwrap();
        let graph_side = invariants::twist_number_from_graphs(&d).unwrap();
        println!("{name}: V(t) = {}", j.poly);
        println!("  span = {} (= crossing number)", profile.span);
        print!("  twist numbers:");
        for (i, t) in profile.twist.iter().enumerate() {
            print!(" T_{} = {t}", i + 1);
        }
        println!();
        println!("  graph-side twist number = {graph_side}");
        assert_eq!(profile.t1(), graph_side.into());
        assert!(invariants::second_order_identity_check(&d).unwrap());
        println!("  second-order identity holds");
    }

    // the coefficient predictions need no diagram at all, only the graph
    let d = PlanarDiagram::figure_eight();
    let g = d.positive_checkerboard().unwrap();
    let prediction = invariants::predict_top_coefficients(&g.simplify()).unwrap();
    println!(
        "figure-eight positive graph predicts top coefficients {}, {}, {} at degree {}",
        prediction.a_top, prediction.a_top_minus_1, prediction.a_top_minus_2, prediction.top_degree
    );
    assert!(invariants::verify_prediction(&g).unwrap());
    let (am1, am2) = invariants::trace_corollary(&g.simplify()).unwrap();
    println!("adjacency traces give |a_(m-1)| = {am1}, |a_(m-2)| = {am2}");
}
