//! Text formats: graph JSON and DOT, dominating-family JSON, reconfiguration
//! graph JSON and DOT, and the CSV tables.
//!
//! All output is 1-based and deterministic for a given input.

use std::fmt::Write as _;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::Serialize;

use crate::counting::CountTable;
use crate::domination::DomFamily;
use crate::graph::Graph;
use crate::reconfig::ReconfigGraph;

pub fn graph_json(g: &Graph) -> String {
    serde_json::to_string(&g.to_json()).expect("graph JSON is always serialisable")
}

pub fn graph_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in 1..=g.n() {
        let _ = writeln!(out, "  v{v};");
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  v{} -- v{};", u + 1, v + 1);
    }
    out.push_str("}\n");
    out
}

/// Each member as a sorted list of 1-based vertices, in family order.
pub fn family_json(family: &DomFamily) -> String {
    let sets: Vec<Vec<usize>> = family.iter().map(|s| s.labels()).collect();
    serde_json::to_string(&sets).expect("vertex lists are always serialisable")
}

#[derive(Serialize)]
struct ReconfigJson {
    base_n: usize,
    k: usize,
    nodes: Vec<Vec<usize>>,
    edges: Vec<[usize; 2]>,
}

pub fn reconfig_json(r: &ReconfigGraph) -> String {
    let doc = ReconfigJson {
        base_n: r.base_n(),
        k: r.k(),
        nodes: r.nodes().iter().map(|s| s.labels()).collect(),
        edges: r.edges().into_iter().map(|(i, j)| [i, j]).collect(),
    };
    serde_json::to_string(&doc).expect("reconfiguration JSON is always serialisable")
}

pub fn reconfig_dot(r: &ReconfigGraph) -> String {
    let mut out = format!("graph D{} {{\n", r.k());
    for (i, s) in r.nodes().iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{s}\"];");
    }
    for (i, j) in r.edges() {
        let _ = writeln!(out, "  n{i} -- n{j};");
    }
    out.push_str("}\n");
    out
}

fn finish(writer: csv::Writer<Vec<u8>>) -> String {
    let bytes = writer.into_inner().expect("writing to memory cannot fail");
    String::from_utf8(bytes).expect("CSV of integers is UTF-8")
}

/// `n,j,count`, one row per nonzero `d(G, j)`.
pub fn counts_csv(n: usize, counts: &[BigUint]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["n", "j", "count"])
        .expect("in-memory write");
    for (j, c) in counts.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
        w.write_record([n.to_string(), j.to_string(), c.to_string()])
            .expect("in-memory write");
    }
    finish(w)
}

/// `family,n,j,count`, one row per nonzero entry.
pub fn triangle_csv(table: &CountTable) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "n", "j", "count"])
        .expect("in-memory write");
    let family = table.family().name();
    for (n, row) in table.rows() {
        for (j, c) in row.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            w.write_record([
                family.to_string(),
                n.to_string(),
                j.to_string(),
                c.to_string(),
            ])
            .expect("in-memory write");
        }
    }
    finish(w)
}

/// `family,n,order` for a sequence starting at `first_n`.
pub fn sequence_csv(family: &str, first_n: usize, values: &[BigUint]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["family", "n", "order"])
        .expect("in-memory write");
    for (i, v) in values.iter().enumerate() {
        w.write_record([family.to_string(), (first_n + i).to_string(), v.to_string()])
            .expect("in-memory write");
    }
    finish(w)
}
