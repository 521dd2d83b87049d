//! The batch pipeline: load the shipped census fixture, run both Jones
//! routes on every record, check the volume bounds on the eligible rows,
//! and emit the (T_i, volume) scatter files.
//!
//! ```bash
//! cargo run -p knotpoly --example census_scan
//! ```

use std::path::Path;

use knotpoly::census;

fn main() {
    let data = Path::new(env!("CARGO_MANIFEST_DIR")).join("data/census.csv");
    let records = census::load_census(&data).unwrap();
    println!("{} census records loaded", records.len());

    let rows = census::scan(&records);
    for row in &rows {
        let twists: Vec<String> = row.twist.iter().map(u64::to_string).collect();
        let status = match (&row.error, row.within_bounds) {
            (Some(e), _) => format!("error: {e}"),
            (None, Some(true)) => "bounds ok".into(),
            (None, Some(false)) => "BOUND VIOLATION".into(),
            (None, None) => "bounds n/a".into(),
        };
        println!(
            "{:<12} c={:<3} T=[{}] vol={:<20} {status}",
            row.name,
            row.crossings,
            twists.join(","),
            row.volume
        );
    }

    let out = std::env::temp_dir().join("knotpoly_scatter");
    let written = census::emit_scatter_files(&rows, &[1, 2, 3, 4], &out, false).unwrap();
    println!("scatter files:");
    for path in written {
        println!("  {}", path.display());
    }
}
