//! Volume bounds straight from Jones coefficients: feed in a published
//! polynomial, no diagram required.
//!
//! ```bash
//! cargo run -p knotpoly --example volume_bounds
//! ```

use knotpoly::invariants::{self, V0};
use knotpoly::polynomial::LaurentPoly;

fn main() {
    // the 13-crossing sample knot: coefficients of t^-12 .. t^1
    let coeffs: [i64; 14] = [1, -4, 11, -23, 35, -47, 53, -52, 47, -34, 22, -11, 4, -1];
    let poly = LaurentPoly::from_terms((0..14).map(|i| (i as i64 - 12, coeffs[i])));
    println!("V(t) = {poly}");

    let profile = invariants::twist_profile(&poly).unwrap();
    println!(
        "|a_(n+1)| = {}, |a_(m-1)| = {}, twist number T = {}",
        profile.abs_from_low(1),
        profile.abs_from_high(1),
        profile.t1()
    );

    let bounds = invariants::volume_bounds(&profile, Some(13));
    let volume = 21.1052106828; // hyperbolic volume of this knot's complement
    println!("v0 = {V0}");
    println!(
        "coefficient bounds: {:.6} <= Vol <= {:.6}",
        bounds.lower, bounds.upper
    );
    println!(
        "twist-number bounds: {:.6} <= Vol < {:.6}",
        bounds.lackenby_lower, bounds.lackenby_upper
    );
    if let Some(adams) = bounds.adams_upper {
        println!("crossing-number bound: Vol <= {adams:.6}");
    }
    assert!(bounds.brackets(volume));
    assert!(bounds.lackenby_brackets(volume));
    println!("published volume {volume} sits inside both brackets");
}
