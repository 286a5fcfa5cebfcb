//! Self-check suites: closed forms against brute force, generating-function
//! identities, and computed tables against the published ones.

use crate::compose::specialize_tilde_matched;
use crate::cores::{
    matched_cycle_tilde, walsh_complete, walsh_cycle, walsh_k5e, walsh_m, walsh_matched_cycle,
    walsh_mstar,
};
use crate::enumerate::{
    crown_tilde, crown_tilde_direct, discrepancies, projective_planar_table, toroidal_core_table,
    toroidal_table, unlabelled_graph_counts, CountTable, PlanarNetworkData,
};
use crate::error::Result;
use crate::matching::verify_matching_gf;
use crate::oracle::{
    all_graphs, burnside_unlabelled_count, matched_walsh_bruteforce, network_walsh_bruteforce,
    walsh_bruteforce, Sign, SmallGraph,
};
use crate::reference;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Oracle,
    Gf,
    Tables,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, outcome: Result<bool>) -> Self {
        let (passed, detail) = match outcome {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "mismatch".to_string()),
            Err(e) => (false, e.to_string()),
        };
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }

    fn with_detail(name: impl Into<String>, passed: bool, detail: String) -> Self {
        Check {
            name: name.into(),
            passed,
            detail,
        }
    }
}

/// The graph made of two `K5`s sharing the edge `01`, optionally without
/// that edge.
pub fn glued_k5_pair(keep_shared_edge: bool) -> SmallGraph {
    let mut edges = Vec::new();
    for block in [[0, 1, 2, 3, 4], [0, 1, 5, 6, 7]] {
        for i in 0..5 {
            for j in i + 1..5 {
                if (block[i], block[j]) != (0, 1) {
                    edges.push((block[i], block[j]));
                }
            }
        }
    }
    if keep_shared_edge {
        edges.push((0, 1));
    }
    SmallGraph::new(8, &edges).expect("valid edge list")
}

/// The `K5 \ e` network with poles `0` and `1`.
pub fn k5_minus_edge_network() -> SmallGraph {
    let edges: Vec<_> = (0..5)
        .flat_map(|i| (i + 1..5).map(move |j| (i, j)))
        .filter(|&e| e != (0, 1))
        .collect();
    SmallGraph::new(5, &edges)
        .and_then(|g| g.with_poles(0, 1))
        .expect("valid network")
}

fn oracle_suite() -> Vec<Check> {
    let mut out = Vec::new();
    for n in 3..=8 {
        out.push(Check::new(
            format!("cycle C{n} closed form = brute force"),
            walsh_bruteforce(&[SmallGraph::cycle(n)]).map(|b| b == walsh_cycle(n as u32)),
        ));
    }
    for n in 2..=5 {
        out.push(Check::new(
            format!("complete K{n} closed form = brute force"),
            walsh_bruteforce(&[SmallGraph::complete(n)]).map(|b| b == walsh_complete(n as u32)),
        ));
    }
    out.push(Check::new(
        "M graph = brute force",
        walsh_bruteforce(&[glued_k5_pair(true)]).map(|b| b == walsh_m()),
    ));
    out.push(Check::new(
        "M* graph = brute force",
        walsh_bruteforce(&[glued_k5_pair(false)]).map(|b| b == walsh_mstar()),
    ));
    let net = k5_minus_edge_network();
    for (sign, label) in [(Sign::Plus, "+"), (Sign::Minus, "-")] {
        out.push(Check::new(
            format!("K5\\e network {label} = brute force"),
            network_walsh_bruteforce(&net, sign).map(|b| b == walsh_k5e(sign)),
        ));
    }
    for n in 3..=7 {
        out.push(Check::new(
            format!("matched cycle C{n}: series, tilde and brute force agree"),
            (|| {
                let closed = walsh_matched_cycle(n as u32);
                let brute = matched_walsh_bruteforce(&SmallGraph::cycle(n))?;
                let tilde = specialize_tilde_matched(&closed)?;
                Ok(closed == brute && tilde == matched_cycle_tilde(n as u32))
            })(),
        ));
    }
    out
}

fn gf_suite() -> Vec<Check> {
    let mut out = vec![Check::new(
        "path and cycle matching generating functions to x^20",
        Ok(verify_matching_gf(20)),
    )];
    let burnside: Result<Vec<u64>> = (1..=6)
        .map(|n| Ok(burnside_unlabelled_count(&all_graphs(n))?.values().sum()))
        .collect();
    let pipeline = unlabelled_graph_counts(6);
    let passed = matches!((&pipeline, &burnside), (Ok(a), Ok(b)) if a == b);
    let detail = format!("composition {pipeline:?}, Burnside {burnside:?}");
    out.push(Check::with_detail(
        "unlabelled graphs on 1..6 vertices",
        passed,
        detail,
    ));
    out
}

fn table_check(
    name: &str,
    table: Result<CountTable>,
    published: &[(u32, u32, u64)],
    max_n: u32,
) -> Check {
    match table {
        Ok(t) => {
            let diffs = discrepancies(&t, published, max_n);
            let detail = diffs
                .iter()
                .map(|d| {
                    format!(
                        "(n={}, m={}): computed {}, published {}",
                        d.n, d.m, d.computed, d.published
                    )
                })
                .collect::<Vec<_>>()
                .join("; ");
            Check::with_detail(name, diffs.is_empty(), detail)
        }
        Err(e) => Check::with_detail(name, false, e.to_string()),
    }
}

fn tables_suite() -> Vec<Check> {
    let data = PlanarNetworkData::embedded();
    let mut out = Vec::new();
    let cores = toroidal_core_table(64).map(|t| {
        let mut wrong = Vec::new();
        for (i, &expected) in reference::TOROIDAL_CORES.iter().enumerate() {
            let n = reference::TOROIDAL_CORES_FROM + i as u32;
            if t.get(n) != Some(expected) {
                wrong.push(format!(
                    "n={n}: computed {:?}, published {expected}",
                    t.get(n)
                ));
            }
        }
        wrong
    });
    out.push(match cores {
        Ok(wrong) => Check::with_detail(
            "toroidal cores, n = 5..64",
            wrong.is_empty(),
            wrong.join("; "),
        ),
        Err(e) => Check::with_detail("toroidal cores, n = 5..64", false, e.to_string()),
    });
    match (crown_tilde(64), crown_tilde_direct(64)) {
        (Ok(h), Ok(direct)) if h != direct => out.push(Check::with_detail(
            "toroidal crowns through x^64",
            false,
            "specialized crown series differs from the closed-form matched-cycle route".into(),
        )),
        (h, direct) => {
            let table = h.and_then(|h| direct.and_then(|_| CountTable::from_series(&h, 64)));
            out.push(table_check(
                "toroidal crowns through x^64",
                table,
                &reference::CROWNS,
                64,
            ));
        }
    }
    out.push(table_check(
        "projective-planar graphs, n <= 9",
        projective_planar_table(9, &data),
        &reference::PROJECTIVE_PLANAR,
        9,
    ));
    out.push(table_check(
        "toroidal non-projective-planar graphs, n <= 12",
        toroidal_table(12, &data),
        &reference::TOROIDAL_NON_PROJECTIVE,
        12,
    ));
    out
}

pub fn run(suite: Suite) -> Vec<Check> {
    match suite {
        Suite::Oracle => oracle_suite(),
        Suite::Gf => gf_suite(),
        Suite::Tables => tables_suite(),
    }
}
