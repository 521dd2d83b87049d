//! Faces, checkerboard 2-coloring and the signed graph pair of a diagram.
//!
//! ```bash
//! cargo run -p knotpoly --example checkerboard_graphs
//! ```

use knotpoly::diagram::{FaceColor, PlanarDiagram};
use knotpoly::graph;

fn main() {
    let d = PlanarDiagram::trefoil();
    println!("diagram: {d}");
    println!(
        "crossings = {}, edges = {}, writhe = {}, alternating = {}",
        d.crossing_count(),
        d.edge_count(),
        d.writhe(),
        d.is_alternating()
    );

    let purple = d
        .faces()
        .iter()
        .filter(|f| f.color == FaceColor::Purple)
        .count();
    println!(
        "faces: {} total ({} purple, {} gold)",
        d.faces().len(),
        purple,
        d.faces().len() - purple
    );

    let (p, g) = d.checkerboard_graphs();
    for (name, graph) in [("purple", &p), ("gold", &g)] {
        println!(
            "{name} graph: |V| = {}, |E| = {}, uniform sign = {:?}, edges:\n{}",
            graph.vertex_count(),
            graph.edge_count(),
            graph.uniform_sign(),
            graph.edge_list_text()
        );
    }

    // the two graphs are planar duals of each other
    let dual_of_p = graph::dual(&p, &d).unwrap();
    assert_eq!(dual_of_p.structure_key(), g.structure_key());
    println!("dual(purple) = gold, as it should be");

    // for an alternating diagram exactly one side is all-positive
    let positive = d.positive_checkerboard().unwrap();
    println!(
        "positive checkerboard graph has {} vertices",
        positive.vertex_count()
    );
}
