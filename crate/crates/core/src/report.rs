//! Output writers: grid CSV, metadata sidecar, long-format plot data, the
//! two-decimal text table, and sample-network exports.
//!
//! Data files are pure functions of their inputs. Anything run-dependent
//! (wall time, thread count) goes to the metadata sidecar only.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};

use crate::calibration::render_options;
use crate::error::{Error, Result};
use crate::montecarlo::{CellSummary, GridCell, Simulation};
use crate::network::DirectedNetwork;
use crate::params::ModelOptions;

/// Below this many replications per cell the metadata carries a warning.
pub const RECOMMENDED_MIN_REPLICATIONS: usize = 100;

/// Column order of the grid CSV.
pub const GRID_COLUMNS: [&str; 17] = [
    "row",
    "retention_eta0",
    "formation_eta1",
    "retention_eta1",
    "bias",
    "coverage",
    "corr_t0",
    "corr_t1",
    "fpp_t0",
    "fpp_t1",
    "retention_rate",
    "formation_eta0",
    "b1",
    "n",
    "reps",
    "degenerate",
    "status",
];

/// Column order of the long-format plot data.
pub const PLOT_COLUMNS: [&str; 7] = [
    "row",
    "retention_eta0",
    "formation_eta1",
    "retention_eta1",
    "b1",
    "statistic",
    "value",
];

/// Column order of the sample-network node table.
pub const NODE_COLUMNS: [&str; 9] = [
    "id",
    "y_t0",
    "y_t1",
    "out_degree_t0",
    "in_degree_t0",
    "out_degree_t1",
    "in_degree_t1",
    "isolate_t0",
    "isolate_t1",
];

/// Column order of the sample-network edge list.
pub const EDGE_COLUMNS: [&str; 3] = ["source", "target", "wave"];

fn num(x: f64) -> String {
    format!("{x}")
}

fn opt(x: Option<f64>) -> String {
    x.map(num).unwrap_or_default()
}

/// One CSV row per cell. Failed cells keep their coordinates and carry the
/// error in the `status` column with the statistics left empty.
pub fn write_grid_csv<W: Write>(out: W, cells: &[GridCell], results: &[Result<CellSummary>]) -> Result<()> {
    if cells.len() != results.len() {
        return Err(Error::Dimension(format!(
            "{} cells but {} results",
            cells.len(),
            results.len()
        )));
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(GRID_COLUMNS)?;
    for (cell, result) in cells.iter().zip(results) {
        let p = &cell.params;
        let mut record = vec![
            (cell.index + 1).to_string(),
            num(p.eta0_ret),
            num(p.eta1_form),
            num(p.eta1_ret),
        ];
        match result {
            Ok(s) => {
                record.extend([
                    num(s.bias),
                    num(s.coverage),
                    opt(s.corr_t0),
                    opt(s.corr_t1),
                    num(s.fpp_t0),
                    num(s.fpp_t1),
                    opt(s.retention_rate),
                    num(p.eta0_form),
                    num(p.b1),
                    p.n.to_string(),
                    s.replications.to_string(),
                    s.degenerate.to_string(),
                    "ok".to_string(),
                ]);
            }
            Err(e) => {
                record.extend(std::iter::repeat_n(String::new(), 7));
                record.extend([
                    num(p.eta0_form),
                    num(p.b1),
                    p.n.to_string(),
                    p.replications.to_string(),
                    String::new(),
                    format!("error: {e}"),
                ]);
            }
        }
        w.write_record(&record)?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Long format: one row per cell per statistic. Failed cells are omitted.
pub fn write_plot_data<W: Write>(out: W, cells: &[GridCell], results: &[Result<CellSummary>]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(PLOT_COLUMNS)?;
    for (cell, result) in cells.iter().zip(results) {
        let Ok(s) = result else { continue };
        let p = &cell.params;
        let stats = [
            ("bias", Some(s.bias)),
            ("coverage", Some(s.coverage)),
            ("bias_mc_se", Some(s.bias_mc_se())),
            ("mean_se", Some(s.mean_se)),
            ("corr_t0", s.corr_t0),
            ("corr_t1", s.corr_t1),
            ("fpp_t0", Some(s.fpp_t0)),
            ("fpp_t1", Some(s.fpp_t1)),
            ("retention_rate", s.retention_rate),
        ];
        for (name, value) in stats {
            w.write_record([
                (cell.index + 1).to_string(),
                num(p.eta0_ret),
                num(p.eta1_form),
                num(p.eta1_ret),
                num(p.b1),
                name.to_string(),
                opt(value),
            ])?;
        }
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

fn fixed(x: Option<f64>) -> String {
    match x {
        // avoid printing "-0.00" for tiny negatives
        Some(v) if v.is_finite() => {
            let s = format!("{v:.2}");
            if s == "-0.00" {
                "0.00".to_string()
            } else {
                s
            }
        }
        _ => "-".to_string(),
    }
}

/// Fixed-width table with two decimals, for reading in a terminal.
pub fn render_table(cells: &[GridCell], results: &[Result<CellSummary>]) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{:>4} {:>6} {:>7} {:>7} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
        "row", "ret_e0", "form_e1", "ret_e1", "bias", "cover", "corr0", "corr1", "fpp0", "fpp1", "retain"
    );
    for (cell, result) in cells.iter().zip(results) {
        let p = &cell.params;
        let _ = write!(
            out,
            "{:>4} {:>6} {:>7} {:>7}",
            cell.index + 1,
            p.eta0_ret,
            p.eta1_form,
            p.eta1_ret
        );
        match result {
            Ok(s) => {
                let _ = writeln!(
                    out,
                    " {:>6} {:>6} {:>6} {:>6} {:>6} {:>6} {:>6}",
                    fixed(Some(s.bias)),
                    fixed(Some(s.coverage)),
                    fixed(s.corr_t0),
                    fixed(s.corr_t1),
                    fixed(Some(s.fpp_t0)),
                    fixed(Some(s.fpp_t1)),
                    fixed(s.retention_rate)
                );
            }
            Err(e) => {
                let _ = writeln!(out, " error: {e}");
            }
        }
    }
    out
}

/// Contents of the metadata sidecar.
#[derive(Clone, Debug, PartialEq)]
pub struct RunMetadata {
    pub command: String,
    pub seed: u64,
    pub replications: usize,
    pub threads: usize,
    pub n: usize,
    pub cells: usize,
    pub failed_cells: usize,
    pub formation_eta0: Vec<f64>,
    pub options: ModelOptions,
    pub wall_time_secs: f64,
}

impl RunMetadata {
    pub fn below_recommended_minimum(&self) -> bool {
        self.replications < RECOMMENDED_MIN_REPLICATIONS
    }

    /// `key=value` lines.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "command={}", self.command);
        let _ = writeln!(out, "crate_version={}", env!("CARGO_PKG_VERSION"));
        let _ = writeln!(out, "seed={}", self.seed);
        let _ = writeln!(out, "replications={}", self.replications);
        let _ = writeln!(out, "threads={}", self.threads);
        let _ = writeln!(out, "n={}", self.n);
        let _ = writeln!(out, "cells={}", self.cells);
        let _ = writeln!(out, "failed_cells={}", self.failed_cells);
        let eta0: Vec<String> = self.formation_eta0.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "formation_eta0={}", eta0.join(","));
        out.push_str(&render_options(&self.options, ""));
        let _ = writeln!(out, "wall_time_secs={:.3}", self.wall_time_secs);
        if self.below_recommended_minimum() {
            let _ = writeln!(
                out,
                "warning=replications below recommended minimum ({} < {})",
                self.replications, RECOMMENDED_MIN_REPLICATIONS
            );
        }
        out
    }
}

/// Sidecar path for a data file: `table.csv` becomes `table.csv.meta`.
pub fn sidecar_path(data: &Path) -> PathBuf {
    let mut name = data.as_os_str().to_owned();
    name.push(".meta");
    PathBuf::from(name)
}

/// Writes `contents` to `path`, naming the path in any error.
pub fn write_file(path: &Path, contents: &[u8]) -> Result<()> {
    std::fs::write(path, contents).map_err(|e| Error::io(path, e))
}

/// Ties of the second wave as exported: ties present at both waves.
pub fn retained_ties(sim: &Simulation) -> Result<DirectedNetwork> {
    sim.net_t0.intersection(&sim.net_t1)
}

fn is_isolate(net: &DirectedNetwork, i: usize) -> bool {
    net.out_degree(i) == 0 && net.in_degree(i) == 0
}

/// Node table of a sample network.
pub fn write_nodes_csv<W: Write>(out: W, sim: &Simulation) -> Result<()> {
    let t1 = retained_ties(sim)?;
    let t0 = &sim.net_t0;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(NODE_COLUMNS)?;
    for i in 0..t0.n() {
        w.write_record([
            i.to_string(),
            num(sim.panel.y_t0()[i]),
            num(sim.panel.y_t1()[i]),
            t0.out_degree(i).to_string(),
            t0.in_degree(i).to_string(),
            t1.out_degree(i).to_string(),
            t1.in_degree(i).to_string(),
            is_isolate(t0, i).to_string(),
            is_isolate(&t1, i).to_string(),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Edge list with one row per directed tie and wave (`t0` or `t1`).
pub fn write_edges_csv<W: Write>(out: W, sim: &Simulation) -> Result<()> {
    let t1 = retained_ties(sim)?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(EDGE_COLUMNS)?;
    for (wave, net) in [("t0", &sim.net_t0), ("t1", &t1)] {
        for (i, j) in net.edges() {
            w.write_record([i.to_string(), j.to_string(), wave.to_string()])?;
        }
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}

/// Graphviz digraph of both waves. Nodes carry their traits and isolate
/// flags, edges a `wave` attribute.
pub fn render_dot(sim: &Simulation) -> Result<String> {
    let t1 = retained_ties(sim)?;
    let t0 = &sim.net_t0;
    let mut out = String::from("digraph sample {\n");
    for i in 0..t0.n() {
        let _ = writeln!(
            out,
            "  n{i} [y_t0=\"{}\", y_t1=\"{}\", isolate_t0=\"{}\", isolate_t1=\"{}\"];",
            sim.panel.y_t0()[i],
            sim.panel.y_t1()[i],
            is_isolate(t0, i),
            is_isolate(&t1, i)
        );
    }
    for (wave, net, style) in [("t0", t0, "solid"), ("t1", &t1, "bold")] {
        for (i, j) in net.edges() {
            let _ = writeln!(out, "  n{i} -> n{j} [wave=\"{wave}\", style={style}];");
        }
    }
    out.push_str("}\n");
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::montecarlo::{reference_grid, simulate};
    use crate::params::SimParams;

    fn summary() -> CellSummary {
        CellSummary {
            bias: -0.0012,
            coverage: 0.95,
            mean_beta3: -0.0012,
            sd_beta3: 0.01,
            mean_se: 0.01,
            corr_t0: Some(0.001),
            corr_t1: None,
            fpp_t0: 6.2,
            fpp_t1: 3.1,
            retention_rate: Some(0.5),
            replications: 10,
            degenerate: 0,
        }
    }

    #[test]
    fn grid_csv_layout() {
        let cells = reference_grid(&SimParams::default());
        let cells = &cells[..2];
        let results = vec![Ok(summary()), Err(Error::CellDegenerate(1))];
        let mut buf = Vec::new();
        write_grid_csv(&mut buf, cells, &results).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], GRID_COLUMNS.join(","));
        assert!(lines[1].starts_with("1,0,0,0,-0.0012,0.95,0.001,,6.2,3.1,0.5,-2.5,0,1000,10,0,ok"));
        assert!(lines[2].starts_with("2,0,0,0.025,,,,,,,,-2.5,0,1000,1000,,error: cell degenerate"));
        assert_eq!(lines.len(), 3);
    }

    #[test]
    fn table_uses_two_decimals() {
        let cells = reference_grid(&SimParams::default());
        let table = render_table(&cells[..1], &[Ok(summary())]);
        let row = table.lines().nth(1).unwrap();
        assert!(row.contains("0.00") && !row.contains("-0.00"), "{row}");
        assert!(row.contains("6.20") && row.contains("0.95"), "{row}");
    }

    #[test]
    fn metadata_warns_on_small_runs() {
        let meta = RunMetadata {
            command: "replicate-table1".into(),
            seed: 42,
            replications: 1,
            threads: 2,
            n: 1000,
            cells: 60,
            failed_cells: 0,
            formation_eta0: vec![-2.5],
            options: ModelOptions::default(),
            wall_time_secs: 0.5,
        };
        let text = meta.render();
        assert!(text.contains("seed=42\n"));
        assert!(text.contains("replications below recommended minimum"));
        let meta = RunMetadata {
            replications: 100,
            ..meta
        };
        assert!(!meta.render().contains("warning="));
    }

    #[test]
    fn sidecar_appends_suffix() {
        assert_eq!(sidecar_path(Path::new("out/t.csv")), PathBuf::from("out/t.csv.meta"));
    }

    #[test]
    fn network_exports_agree() {
        let params = SimParams {
            n: 30,
            eta1_form: 0.05,
            eta1_ret: 0.05,
            eta0_ret: 1.0,
            ..SimParams::default()
        };
        let sim = simulate(&params, 0, 0).unwrap();
        let t1 = retained_ties(&sim).unwrap();
        let mut edges = Vec::new();
        write_edges_csv(&mut edges, &sim).unwrap();
        let edges = String::from_utf8(edges).unwrap();
        assert_eq!(edges.lines().count(), 1 + sim.net_t0.tie_count() + t1.tie_count());
        let dot = render_dot(&sim).unwrap();
        assert_eq!(dot.matches(" -> ").count(), sim.net_t0.tie_count() + t1.tie_count());
    }
}
