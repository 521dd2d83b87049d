//! The three Tutte evaluation paths: brute-force subset sum,
//! deletion-contraction with parallel-class blocks, and the weighted sum
//! over the spanning simple graph. All three must agree exactly.
//!
//! ```bash
//! cargo run -p knotpoly --example tutte_engines
//! ```

use knotpoly::graph::Multigraph;
use knotpoly::tutte;

fn main() {
    // triangle with one tripled edge: multiplicities matter to all engines
    let mut g = Multigraph::from_edges(3, [(0, 1), (1, 2), (0, 2)]);
    g.add_edge(0, 1);
    g.add_edge(0, 1);

    let full = tutte::tutte_deletion_contraction(&g);
    println!("T(x,y) = {full}");

    let brute = tutte::tutte_brute_force(&g).unwrap().eval_at_jones_point();
    let recursive = tutte::jones_eval(&g);
    let weighted = tutte::jones_eval_weighted(&g).unwrap();
    assert_eq!(brute, recursive);
    assert_eq!(brute, weighted);
    println!("T(-t,-1/t) = {brute}  (three engines agree)");

    // the weighted engine rests on the alternating series P(m)
    for m in 1..=4 {
        println!("P({m}) = {}", tutte::p_series(m).unwrap().value);
    }

    // parallel classes collapse to a closed form: m edges give
    // x + y + ... + y^(m-1)
    let bundle = Multigraph::from_edges(2, std::iter::repeat_n((0, 1), 5));
    println!(
        "5 parallel edges: T = {}",
        tutte::tutte_deletion_contraction(&bundle)
    );
}
