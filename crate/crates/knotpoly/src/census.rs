//! Census ingestion and the scatter pipeline: load knot records with
//! externally computed volumes, run both Jones routes, extract twist
//! numbers, check the volume bounds, and emit plot-ready scatter files.

use std::fs::File;
use std::io::{self, Read, Write};
use std::path::Path;

use num_traits::ToPrimitive;
use serde::Deserialize;

use crate::diagram::PlanarDiagram;
use crate::error::{Error, Result};
use crate::invariants::{self, TwistProfile, VolumeBounds};
use crate::jones;

/// One knot record: PD code plus census metadata. A volume of 0 means
/// non-hyperbolic or unknown; such rows are excluded from bound checks.
#[derive(Clone, Debug, PartialEq)]
pub struct CensusRecord {
    pub name: String,
    pub crossings: usize,
    pub alternating: bool,
    pub prime: bool,
    pub torus: bool,
    pub pd: String,
    pub volume: f64,
}

#[derive(Debug, Deserialize)]
struct RawRecord {
    name: String,
    crossings: usize,
    alternating: u8,
    prime: u8,
    torus: u8,
    pd: String,
    volume: f64,
}

/// Read and validate a census CSV, schema
/// `name,crossings,alternating,prime,torus,pd,volume` with 0/1 booleans.
/// Every PD code must parse to a diagram with the stated crossing count.
pub fn load_census(path: impl AsRef<Path>) -> Result<Vec<CensusRecord>> {
    let file = File::open(path.as_ref())?;
    load_census_from(file)
}

pub fn load_census_from(reader: impl Read) -> Result<Vec<CensusRecord>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_reader(reader);
    let mut records = Vec::new();
    for (idx, row) in rdr.deserialize::<RawRecord>().enumerate() {
        let line = idx + 2; // header occupies line 1
        let raw = row.map_err(|e| Error::Csv {
            row: line,
            reason: e.to_string(),
        })?;
        let as_bool = |field: &str, v: u8| -> Result<bool> {
            match v {
                0 => Ok(false),
                1 => Ok(true),
                _ => Err(Error::Csv {
                    row: line,
                    reason: format!("{field} must be 0 or 1, got {v}"),
                }),
            }
        };
        let record = CensusRecord {
            alternating: as_bool("alternating", raw.alternating)?,
            prime: as_bool("prime", raw.prime)?,
            torus: as_bool("torus", raw.torus)?,
            name: raw.name,
            crossings: raw.crossings,
            pd: raw.pd,
            volume: raw.volume,
        };
        if record.volume < 0.0 {
            return Err(Error::Csv {
                row: line,
                reason: format!("volume must be >= 0, got {}", record.volume),
            });
        }
        let diagram = PlanarDiagram::parse(&record.pd).map_err(|e| Error::Csv {
            row: line,
            reason: format!("bad PD code for {}: {e}", record.name),
        })?;
        if diagram.crossing_count() != record.crossings {
            return Err(Error::Csv {
                row: line,
                reason: format!(
                    "{}: PD code has {} crossings but the crossings column says {}",
                    record.name,
                    diagram.crossing_count(),
                    record.crossings
                ),
            });
        }
        if diagram.is_alternating() != record.alternating {
            return Err(Error::Csv {
                row: line,
                reason: format!(
                    "{}: diagram alternation ({}) disagrees with the alternating column",
                    record.name,
                    diagram.is_alternating()
                ),
            });
        }
        records.push(record);
    }
    Ok(records)
}

/// Pipeline output for one record. Rows that exceed computation limits
/// carry an error marker instead of being dropped.
#[derive(Clone, Debug)]
pub struct ScatterRow {
    pub name: String,
    pub crossings: usize,
    pub alternating: bool,
    pub prime: bool,
    pub torus: bool,
    pub volume: f64,
    /// `twist[i]` holds `T_(i+1)`; populated up to `floor(span/2)`
    pub twist: Vec<u64>,
    pub bounds: Option<VolumeBounds>,
    /// `Some(result)` only for alternating, prime, non-torus, hyperbolic rows
    pub within_bounds: Option<bool>,
    /// `Some(true/false)` when both routes ran
    pub routes_agree: Option<bool>,
    pub error: Option<String>,
}

/// Run the full pipeline over the records, in input order. The bracket
/// route runs on every diagram within its state limit; the Tutte route runs
/// additionally on alternating diagrams and the two results are compared.
pub fn scan(records: &[CensusRecord]) -> Vec<ScatterRow> {
    records.iter().map(scan_record).collect()
}

fn scan_record(record: &CensusRecord) -> ScatterRow {
    let mut row = ScatterRow {
        name: record.name.clone(),
        crossings: record.crossings,
        alternating: record.alternating,
        prime: record.prime,
        torus: record.torus,
        volume: record.volume,
        twist: Vec::new(),
        bounds: None,
        within_bounds: None,
        routes_agree: None,
        error: None,
    };
    let diagram = match PlanarDiagram::parse(&record.pd) {
        Ok(d) => d,
        Err(e) => {
            row.error = Some(format!("PD parse failed: {e}"));
            return row;
        }
    };

    let bracket = match jones::jones_via_bracket(&diagram) {
        Ok(j) => Some(j.poly),
        Err(Error::TooLarge(_)) => None,
        Err(e) => {
            row.error = Some(format!("bracket route failed: {e}"));
            return row;
        }
    };
    let tutte = if record.alternating {
        match jones::jones_via_tutte(&diagram) {
            Ok(j) => Some(j.poly),
            Err(e) => {
                row.error = Some(format!("tutte route failed: {e}"));
                return row;
            }
        }
    } else {
        None
    };
    if let (Some(b), Some(t)) = (&bracket, &tutte) {
        row.routes_agree = Some(b == t);
        if b != t {
            row.error = Some(format!("route disagreement: tutte {t}, bracket {b}"));
            return row;
        }
    }
    let poly = match bracket.or(tutte) {
        Some(p) => p,
        None => {
            row.error = Some("diagram exceeds every route's computation limit".into());
            return row;
        }
    };

    let profile = match invariants::twist_profile(&poly) {
        Ok(p) => p,
        Err(e) => {
            row.error = Some(format!("twist profile failed: {e}"));
            return row;
        }
    };
    row.twist = profile
        .twist
        .iter()
        .map(|t| t.to_u64().expect("twist numbers fit in u64"))
        .collect();
    let bounds = invariants::volume_bounds(&profile, Some(record.crossings));
    row.bounds = Some(bounds);
    if record.alternating && record.prime && !record.torus && record.volume > 0.0 {
        row.within_bounds =
            Some(bounds.brackets(record.volume) && bounds.lackenby_brackets(record.volume));
    }
    row
}

pub fn profile_for_record(record: &CensusRecord) -> Result<TwistProfile> {
    let diagram = PlanarDiagram::parse(&record.pd)?;
    let j = jones::jones_via_bracket(&diagram)?;
    invariants::twist_profile(&j.poly)
}

/// Largest `i` offered without the override flag, matching the appendix
/// plots (`T` through `T_4`).
pub const DEFAULT_MAX_TI: usize = 4;

/// Write the `(T_i, volume)` scatter column for `1 <= i <= 4`.
pub fn emit_scatter(rows: &[ScatterRow], i: usize, out: impl Write) -> Result<()> {
    if !(1..=DEFAULT_MAX_TI).contains(&i) {
        return Err(Error::BadArgument(format!(
            "T_{i} is outside the default range 1..={DEFAULT_MAX_TI}; use the override flag \
             for higher indices"
        )));
    }
    emit_scatter_any(rows, i, out)
}

/// Write the scatter column for any `i >= 1` (the override path). Rows
/// whose span is too short for `T_i` are skipped; row order is input order.
pub fn emit_scatter_any(rows: &[ScatterRow], i: usize, mut out: impl Write) -> Result<()> {
    if i < 1 {
        return Err(Error::BadArgument("T_i needs i >= 1".into()));
    }
    writeln!(out, "T{i},volume")?;
    for row in rows {
        if row.error.is_some() {
            continue;
        }
        if let Some(t) = row.twist.get(i - 1) {
            writeln!(out, "{t},{}", format_volume(row.volume))?;
        }
    }
    Ok(())
}

/// Volumes render with full shortest-roundtrip precision, so identical
/// inputs produce byte-identical scatter files.
fn format_volume(v: f64) -> String {
    format!("{v}")
}

/// Write scatter files `scatter_t{i}.csv` for each requested index into a
/// directory; returns the paths written.
pub fn emit_scatter_files(
    rows: &[ScatterRow],
    indices: &[usize],
    out_dir: impl AsRef<Path>,
    allow_any_index: bool,
) -> Result<Vec<std::path::PathBuf>> {
    std::fs::create_dir_all(out_dir.as_ref())?;
    let mut written = Vec::new();
    for &i in indices {
        let path = out_dir.as_ref().join(format!("scatter_t{i}.csv"));
        let file = io::BufWriter::new(File::create(&path)?);
        if allow_any_index {
            emit_scatter_any(rows, i, file)?;
        } else {
            emit_scatter(rows, i, file)?;
        }
        written.push(path);
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn trefoil_record() -> CensusRecord {
        CensusRecord {
            name: "3_1".into(),
            crossings: 3,
            alternating: true,
            prime: true,
            torus: true,
            pd: "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)".into(),
            volume: 0.0,
        }
    }

    fn figure_eight_record() -> CensusRecord {
        CensusRecord {
            name: "4_1".into(),
            crossings: 4,
            alternating: true,
            prime: true,
            torus: false,
            pd: "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)".into(),
            volume: 2.029883212819307,
        }
    }

    const VALID_CSV: &str = "\
name,crossings,alternating,prime,torus,pd,volume
3_1,3,1,1,1,\"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\",0.0
4_1,4,1,1,0,\"X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)\",2.029883212819307
0_1,0,1,1,0,\"unknot\",0.0
";

    #[test]
    fn load_valid_rows() {
        // the unknot row uses a non-PD placeholder and must fail cleanly,
        // so drop it first
        let two_rows: String = VALID_CSV.lines().take(3).collect::<Vec<_>>().join("\n");
        let records = load_census_from(two_rows.as_bytes()).unwrap();
        assert_eq!(records.len(), 2);
        assert_eq!(records[0], trefoil_record());
        assert_eq!(records[1], figure_eight_record());
    }

    #[test]
    fn load_rejects_unparseable_pd_with_line_number() {
        let err = load_census_from(VALID_CSV.as_bytes()).unwrap_err();
        match err {
            Error::Csv { row, .. } => assert_eq!(row, 4),
            other => panic!("expected Csv error, got {other:?}"),
        }
    }

    #[test]
    fn load_rejects_crossing_count_mismatch() {
        let csv = "\
name,crossings,alternating,prime,torus,pd,volume
3_1,5,1,1,1,\"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\",0.0
";
        let err = load_census_from(csv.as_bytes()).unwrap_err();
        match err {
            Error::Csv { row, reason } => {
                assert_eq!(row, 2);
                assert!(reason.contains("3 crossings"));
            }
            other => panic!("expected Csv error, got {other:?}"),
        }
    }

    #[test]
    fn load_rejects_non_binary_booleans() {
        let csv = "\
name,crossings,alternating,prime,torus,pd,volume
3_1,3,2,1,1,\"X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)\",0.0
";
        assert!(matches!(
            load_census_from(csv.as_bytes()),
            Err(Error::Csv { row: 2, .. })
        ));
    }

    #[test]
    fn scan_torus_rows_have_no_bound_check() {
        let rows = scan(&[trefoil_record()]);
        assert_eq!(rows.len(), 1);
        let row = &rows[0];
        assert_eq!(row.within_bounds, None);
        assert_eq!(row.routes_agree, Some(true));
        assert_eq!(row.twist, vec![1]);
        assert!(row.error.is_none());
    }

    #[test]
    fn scan_hyperbolic_row_passes_bounds() {
        let rows = scan(&[figure_eight_record()]);
        let row = &rows[0];
        assert_eq!(row.within_bounds, Some(true));
        assert_eq!(row.routes_agree, Some(true));
        assert_eq!(row.twist, vec![2, 2]);
    }

    #[test]
    fn scan_marks_bad_rows_instead_of_dropping() {
        let mut bad = trefoil_record();
        bad.pd = "X(1,2,3)".into();
        let rows = scan(&[bad, figure_eight_record()]);
        assert_eq!(rows.len(), 2);
        assert!(rows[0].error.is_some());
        assert!(rows[1].error.is_none());
    }

    #[test]
    fn scatter_emission() {
        let rows = scan(&[trefoil_record(), figure_eight_record()]);
        let mut buf = Vec::new();
        emit_scatter(&rows, 1, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "T1,volume\n1,0\n2,2.029883212819307\n");

        // T_2 is undefined for the trefoil (span 3), so only one data row
        let mut buf2 = Vec::new();
        emit_scatter(&rows, 2, &mut buf2).unwrap();
        assert_eq!(
            String::from_utf8(buf2).unwrap(),
            "T2,volume\n2,2.029883212819307\n"
        );
    }

    #[test]
    fn scatter_rejects_out_of_range_index_without_override() {
        let rows = scan(&[figure_eight_record()]);
        let mut buf = Vec::new();
        assert!(matches!(
            emit_scatter(&rows, 5, &mut buf),
            Err(Error::BadArgument(_))
        ));
        // the override path accepts it
        emit_scatter_any(&rows, 5, &mut buf).unwrap();
    }

    #[test]
    fn scatter_of_empty_input_is_header_only() {
        let mut buf = Vec::new();
        emit_scatter(&[], 1, &mut buf).unwrap();
        assert_eq!(String::from_utf8(buf).unwrap(), "T1,volume\n");
    }

    #[test]
    fn scan_is_deterministic() {
        let records = [trefoil_record(), figure_eight_record()];
        let mut out1 = Vec::new();
        let mut out2 = Vec::new();
        emit_scatter(&scan(&records), 1, &mut out1).unwrap();
        emit_scatter(&scan(&records), 1, &mut out2).unwrap();
        assert_eq!(out1, out2);
    }
}
