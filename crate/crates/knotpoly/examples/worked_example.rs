//! End-to-end tour on the 13-crossing sample knot: parse the shipped PD,
//! reproduce its Jones polynomial on both routes, read the twist data off
//! the checkerboard graphs, and bracket its hyperbolic volume.
//!
//! ```bash
//! cargo run -p knotpoly --example worked_example
//! ```

use std::path::Path;

use knotpoly::diagram::PlanarDiagram;
use knotpoly::graph;
use knotpoly::invariants;
use knotpoly::jones;
use knotpoly::polynomial::ExpOrder;

fn main() {
    let pd = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/k13_sample.pd");
    let d = PlanarDiagram::parse(&std::fs::read_to_string(pd).unwrap()).unwrap();
    println!("diagram: {d}");

    let j = jones::jones_both_routes(&d).unwrap();
    println!("V(t) = {}", j.poly.render(ExpOrder::Ascending));

    let g = d.positive_checkerboard().unwrap();
    let g_dual = graph::dual(&g, &d).unwrap();
    for (name, graph) in [("G", &g), ("G*", &g_dual)] {
        let s = graph.simplify();
        println!(
            "{name}: |V| = {}, |E| = {}, |E~| = {}, n(2) = {}, tri = {}",
            graph.vertex_count(),
            graph.edge_count(),
            s.base_edge_count(),
            s.n_count(2),
            s.triangle_count()
        );
    }

    let t = invariants::twist_number_from_graphs(&d).unwrap();
    let profile = invariants::twist_profile(&j.poly).unwrap();
    println!(
        "twist number: {t} from the graphs, T_1 = {} from the Jones coefficients",
        profile.t1()
    );

    let bounds = invariants::volume_bounds(&profile, Some(d.crossing_count()));
    let volume = 21.1052106828;
    println!(
        "{:.6} <= Vol = {volume} <= {:.6}",
        bounds.lower, bounds.upper
    );
    assert!(bounds.brackets(volume));
}
