//! Small-order chromatic tables for the four-color families.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use spacking_core::{chromatic, GraphSpec, PackingSequence};

use crate::usage;

const TABLE1_ROWS: [usize; 20] = [
    3, 4, 5, 6, 7, 9, 10, 11, 12, 13, 17, 18, 19, 20, 25, 26, 27, 33, 34, 41,
];
const TABLE1_FAMILIES: [&str; 4] = ["1,2,4,4", "1,2,4,5", "1,2,4,6", "1,2,5,5"];
const TABLE2_ROWS: [usize; 16] = [3, 4, 5, 6, 7, 9, 10, 11, 12, 14, 15, 17, 19, 22, 23, 27];
const TABLE2_FAMILIES: [&str; 3] = ["1,3,4,4", "1,3,4,5", "1,3,5,5"];

#[derive(Clone, Debug, Serialize)]
pub struct Column {
    pub name: String,
    pub representative: PackingSequence,
}

#[derive(Clone, Debug, Serialize)]
pub struct Cell {
    pub chromatic: u32,
    pub witness: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub n: usize,
    /// `chi(P_n)`, identical for every column's representative.
    pub path: Cell,
    pub cycles: Vec<Cell>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Metadata {
    pub tool: &'static str,
    pub version: &'static str,
    pub runtime_ms: u128,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableArtifact {
    pub table: u32,
    pub columns: Vec<Column>,
    pub rows: Vec<Row>,
    pub metadata: Metadata,
}

fn cell(g: GraphSpec, s: &PackingSequence) -> Cell {
    let r = chromatic(&g, s);
    Cell {
        chromatic: r.chromatic,
        witness: r.witness.to_string(),
    }
}

/// Computes table 1 or 2 from canonical representatives.
pub fn build_table(id: u32) -> anyhow::Result<TableArtifact> {
    let start = Instant::now();
    let (rows, fams): (&[usize], &[&str]) = match id {
        1 => (&TABLE1_ROWS, &TABLE1_FAMILIES),
        2 => (&TABLE2_ROWS, &TABLE2_FAMILIES),
        _ => return Err(usage(format!("unknown table {id}; expected 1 or 2"))),
    };
    let columns: Vec<Column> = fams
        .iter()
        .enumerate()
        .map(|(i, f)| Column {
            name: format!("S{}", i + 1),
            representative: f.parse().expect("table families parse"),
        })
        .collect();
    let rows: Vec<Row> = rows
        .par_iter()
        .map(|&n| {
            let path = GraphSpec::path(n).expect("rows have n >= 3");
            let cycle = GraphSpec::cycle(n).expect("rows have n >= 3");
            let paths: Vec<Cell> = columns
                .iter()
                .map(|c| cell(path, &c.representative))
                .collect();
            assert!(
                paths.iter().all(|p| p.chromatic == paths[0].chromatic),
                "path values differ across columns at n = {n}"
            );
            Row {
                n,
                path: paths[0].clone(),
                cycles: columns
                    .iter()
                    .map(|c| cell(cycle, &c.representative))
                    .collect(),
            }
        })
        .collect();
    Ok(TableArtifact {
        table: id,
        columns,
        rows,
        metadata: Metadata {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            runtime_ms: start.elapsed().as_millis(),
        },
    })
}

impl TableArtifact {
    /// `n,P,S1,...` with one row per order.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["n".to_string(), "P".to_string()];
        header.extend(self.columns.iter().map(|c| c.name.clone()));
        w.write_record(&header).expect("in-memory writes succeed");
        for r in &self.rows {
            let mut rec = vec![r.n.to_string(), r.path.chromatic.to_string()];
            rec.extend(r.cycles.iter().map(|c| c.chromatic.to_string()));
            w.write_record(&rec).expect("in-memory writes succeed");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush succeeds")).expect("csv is utf-8")
    }

    pub fn to_json(&self) -> String {
        crate::to_json(self)
    }
}
