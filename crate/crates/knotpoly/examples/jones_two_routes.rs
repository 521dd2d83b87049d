//! Compute the Jones polynomial of a PD-coded knot by both routes and
//! check they agree exactly.
//!
//! ```bash
//! cargo run -p knotpoly --example jones_two_routes
//! ```

use knotpoly::diagram::PlanarDiagram;
use knotpoly::jones;
use knotpoly::polynomial::ExpOrder;

fn main() {
    let diagrams = [
        ("trefoil", PlanarDiagram::trefoil()),
        ("figure-eight", PlanarDiagram::figure_eight()),
        (
            "6_2",
            PlanarDiagram::parse(
                "X(1,9,2,8) X(3,10,4,11) X(5,3,6,2) X(11,7,12,6) X(7,1,8,12) X(9,4,10,5)",
            )
            .unwrap(),
        ),
    ];

    for (name, d) in diagrams {
        let tutte_route = jones::jones_via_tutte(&d).unwrap();
        let bracket_route = jones::jones_via_bracket(&d).unwrap();
        assert_eq!(tutte_route.poly, bracket_route.poly, "routes must agree");
        println!("{name} (c = {}, w = {}):", d.crossing_count(), d.writhe());
        println!("  V(t) = {}", tutte_route.poly.render(ExpOrder::Ascending));
        println!("  tutte and bracket routes agree exactly");
    }

    // mirroring the diagram substitutes t -> 1/t
    let mirror = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    let v = jones::jones_via_bracket(&PlanarDiagram::trefoil()).unwrap();
    let vm = jones::jones_via_bracket(&mirror).unwrap();
    assert_eq!(vm.poly, v.poly.mirrored());
    println!("mirror trefoil: V(t) = {} (the t <-> 1/t image)", vm.poly);
}
