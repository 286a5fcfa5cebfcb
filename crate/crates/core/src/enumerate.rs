//! The enumeration pipelines: toroidal crowns, toroidal cores, and the
//! 2-connected K3,3-free projective-planar and toroidal graph tables.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::compose::{
    compose_matched, compose_walsh, specialize_tilde, tilde_of_composition, BivariateSeries,
    NetworkSeriesPair,
};
use crate::cores::{
    matched_cycle_tilde, walsh_complete, walsh_k5, walsh_k5e, walsh_m, walsh_matched_cycle,
    walsh_mstar,
};
use crate::error::{Error, Result};
use crate::oracle::Sign;
use crate::series::{IndexSeries, Monomial, Rational, VarRef};

const EMBEDDED_PLANAR_NETWORKS: &str = include_str!("../data/planar_networks.txt");

/// Strongly planar networks by internal vertices, in the factored form
/// `y + (1 + y) * sum_n x^n p_n(y)`; each row is `(n, [(edges, count)])`.
const PLANAR_FACTORED: [(u32, &[(u32, u64)]); 4] = [
    (1, &[(2, 1)]),
    (2, &[(3, 1), (4, 3), (5, 1)]),
    (3, &[(4, 1), (5, 8), (6, 15), (7, 9), (8, 3)]),
    (
        4,
        &[
            (5, 1),
            (6, 16),
            (7, 66),
            (8, 112),
            (9, 97),
            (10, 47),
            (11, 9),
        ],
    ),
];

const PLANAR_SYMMETRIC_FACTORED: [(u32, &[(u32, u64)]); 4] = [
    (1, &[(2, 1)]),
    (2, &[(3, 1), (4, 1), (5, 1)]),
    (3, &[(4, 1), (5, 2), (6, 3), (7, 3), (8, 1)]),
    (
        4,
        &[(5, 1), (6, 4), (7, 8), (8, 12), (9, 13), (10, 7), (11, 3)],
    ),
];

/// Vertices of the smallest core in each family.
const K5_VERTICES: u32 = 5;
const M_VERTICES: u32 = 8;

/// Counts of a 2-pole network class by `(internal vertices, edges)`:
/// `(all networks, pole-exchange symmetric networks)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanarNetworkData {
    rows: BTreeMap<(u32, u32), (u64, u64)>,
    extent: u32,
}

impl PlanarNetworkData {
    /// The bundled table of strongly planar networks with up to four
    /// internal vertices, checked against its factored form.
    pub fn embedded() -> Self {
        let data = Self::parse(EMBEDDED_PLANAR_NETWORKS).expect("bundled network data parses");
        assert_eq!(
            data,
            Self::from_factored(),
            "bundled network data disagrees with its factored form"
        );
        data
    }

    fn from_factored() -> Self {
        fn expand(table: &[(u32, &[(u32, u64)])]) -> BTreeMap<(u32, u32), u64> {
            let mut out = BTreeMap::from([((0, 1), 1)]);
            for &(n, row) in table {
                for &(m, c) in row {
                    *out.entry((n, m)).or_default() += c;
                    *out.entry((n, m + 1)).or_default() += c;
                }
            }
            out
        }
        let plus = expand(&PLANAR_FACTORED);
        let minus = expand(&PLANAR_SYMMETRIC_FACTORED);
        let rows = plus
            .keys()
            .chain(minus.keys())
            .map(|&k| {
                (
                    k,
                    (
                        plus.get(&k).copied().unwrap_or(0),
                        minus.get(&k).copied().unwrap_or(0),
                    ),
                )
            })
            .collect();
        Self { rows, extent: 4 }
    }

    /// Parses the `network-series v1` format: a header line, then one
    /// `n m plus_count minus_count` line per nonzero entry. Blank lines and
    /// `#` comments are ignored. The data is taken to be complete for every
    /// internal-vertex count up to the largest one present.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        match lines.next() {
            Some((_, "network-series v1")) => {}
            Some((line, _)) => {
                return Err(Error::Parse {
                    line,
                    message: "expected header `network-series v1`".into(),
                })
            }
            None => {
                return Err(Error::Parse {
                    line: 0,
                    message: "empty network data".into(),
                })
            }
        }
        let mut rows = BTreeMap::new();
        let mut extent = 0;
        for (line, l) in lines {
            let fields: Vec<u64> = l
                .split_whitespace()
                .map(|w| w.parse::<u64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|e| Error::Parse {
                    line,
                    message: e.to_string(),
                })?;
            let [n, m, plus, minus] = fields[..] else {
                return Err(Error::Parse {
                    line,
                    message: "expected `n m plus_count minus_count`".into(),
                });
            };
            let key = (n as u32, m as u32);
            if minus > plus {
                return Err(Error::Parse {
                    line,
                    message: "symmetric count exceeds total".into(),
                });
            }
            if rows.insert(key, (plus, minus)).is_some() {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate entry for n = {n}, m = {m}"),
                });
            }
            extent = extent.max(key.0);
        }
        Ok(Self { rows, extent })
    }

    /// Largest internal-vertex count covered.
    pub fn extent(&self) -> u32 {
        self.extent
    }

    pub fn rows(&self) -> impl Iterator<Item = ((u32, u32), (u64, u64))> + '_ {
        self.rows.iter().map(|(&k, &v)| (k, v))
    }

    pub fn series(&self) -> NetworkSeriesPair {
        let side = |pick: fn(&(u64, u64)) -> u64| {
            BivariateSeries::from_terms(
                self.rows
                    .iter()
                    .map(|(&k, v)| (k, Rational::from_integer(BigInt::from(pick(v))))),
            )
            .truncate(self.extent)
        };
        NetworkSeriesPair::new(side(|v| v.0), side(|v| v.1)).expect("parsed counts are valid")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: u32,
    pub m: u32,
    pub count: u64,
}

/// Counts by vertices and edges, sorted by `n` then `m`, zero rows omitted.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    /// Reads a counting series; every coefficient must be a nonnegative
    /// integer.
    pub fn from_series(s: &BivariateSeries, max_n: u32) -> Result<Self> {
        s.check_counting()?;
        let rows = s
            .iter()
            .filter(|&((n, _), _)| n <= max_n)
            .map(|((n, m), c)| {
                Ok(CountRow {
                    n,
                    m,
                    count: to_count(c, n, m)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self { rows })
    }

    pub fn get(&self, n: u32, m: u32) -> u64 {
        self.rows
            .iter()
            .find(|r| r.n == n && r.m == m)
            .map_or(0, |r| r.count)
    }
}

fn to_count(c: &Rational, n: u32, m: u32) -> Result<u64> {
    c.to_integer().to_u64().ok_or_else(|| Error::NotACount {
        term: format!("x^{n} y^{m}"),
        value: c.to_string(),
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCountRow {
    pub n: u32,
    pub count: u64,
}

/// Counts by vertices only, one row per `n` (zeros included).
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VertexCountTable {
    pub rows: Vec<VertexCountRow>,
}

impl VertexCountTable {
    pub fn get(&self, n: u32) -> Option<u64> {
        self.rows.iter().find(|r| r.n == n).map(|r| r.count)
    }
}

fn k5e_pair() -> (IndexSeries, IndexSeries) {
    (walsh_k5e(Sign::Plus), walsh_k5e(Sign::Minus))
}

/// Largest crown cycle length with a crown of at most `trunc` vertices: a
/// crown on `n` cycle vertices substitutes at least `ceil(n/2)` edges, each
/// adding three vertices.
fn max_crown_cycle(trunc: u32) -> u32 {
    (3u32..)
        .take_while(|&n| n + 3 * n.div_ceil(2) <= trunc)
        .last()
        .unwrap_or(0)
}

/// Walsh series of toroidal crowns with at most `trunc` vertices.
pub fn crown_walsh(trunc: u32) -> IndexSeries {
    let (plus, minus) = k5e_pair();
    let top = max_crown_cycle(trunc);
    let parts: Vec<IndexSeries> = (3..=top)
        .into_par_iter()
        .map(|n| {
            compose_matched(&walsh_matched_cycle(n), &plus, &minus, Some(trunc))
                .expect("exact series compose soundly")
        })
        .collect();
    parts
        .iter()
        .fold(IndexSeries::zero().truncate(trunc), |acc, p| &acc + p)
}

/// Tilde series of toroidal crowns, by specializing [`crown_walsh`].
pub fn crown_tilde(trunc: u32) -> Result<BivariateSeries> {
    specialize_tilde(&crown_walsh(trunc))
}

/// Tilde series of toroidal crowns from the closed-form matched-cycle
/// tilde series with each unmatched edge replaced by a `K5 \ e` network
/// (three vertices, nine edges).
pub fn crown_tilde_direct(trunc: u32) -> Result<BivariateSeries> {
    let network = IndexSeries::term(
        Rational::from_integer(1.into()),
        Monomial::from_pairs([(VarRef::x(), 3), (VarRef::y(), 9)]),
    );
    let parts: Vec<Result<IndexSeries>> = (3..=max_crown_cycle(trunc))
        .into_par_iter()
        .map(|n| {
            matched_cycle_tilde(n)
                .substitute_with(Some(trunc), |v| (v == VarRef::z()).then(|| network.clone()))
        })
        .collect();
    let mut out = BivariateSeries::zero().truncate(trunc);
    for p in parts {
        out = &out + &BivariateSeries::from_index_series(&p?)?;
    }
    out.check_counting()?;
    Ok(out)
}

/// Crown counts as a table.
pub fn crown_table(max_n: u32) -> Result<CountTable> {
    CountTable::from_series(&crown_tilde(max_n)?, max_n)
}

/// Walsh series of all toroidal cores: `K5`, `M`, `M*` and the crowns.
pub fn toroidal_cores_walsh(trunc: u32) -> IndexSeries {
    let fixed = &(&walsh_k5() + &walsh_m()) + &walsh_mstar();
    (&fixed.truncate(trunc) + &crown_walsh(trunc)).truncate(trunc)
}

/// Unlabelled toroidal cores by vertex count, `n = 1..=max_n`.
pub fn toroidal_core_table(max_n: u32) -> Result<VertexCountTable> {
    let tilde = specialize_tilde(&toroidal_cores_walsh(max_n))?;
    let marginal = tilde.y_marginal();
    let rows = (1..=max_n)
        .map(|n| {
            let c = marginal.get(&n).cloned().unwrap_or_else(Rational::zero);
            Ok(VertexCountRow {
                n,
                count: to_count(&c, n, 0)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(VertexCountTable { rows })
}

fn extent_guard(max_n: u32, smallest_core: u32, data: &PlanarNetworkData) -> Result<()> {
    let limit = smallest_core + data.extent();
    if max_n > limit {
        return Err(Error::OutOfRange {
            requested: max_n,
            limit,
            reason: format!(
                "the network data covers at most {} internal vertices, so counts are exact only up to {} + {}",
                data.extent(),
                smallest_core,
                data.extent()
            ),
        });
    }
    Ok(())
}

/// 2-connected K3,3-free non-planar projective-planar graphs: `K5` with
/// planar networks substituted for its edges.
pub fn projective_planar_table(max_n: u32, data: &PlanarNetworkData) -> Result<CountTable> {
    extent_guard(max_n, K5_VERTICES, data)?;
    let tilde = tilde_of_composition(&walsh_k5(), &data.series(), Some(max_n))?;
    CountTable::from_series(&tilde, max_n)
}

/// 2-connected K3,3-free toroidal graphs that are not projective-planar:
/// the cores `M`, `M*` and the crowns with planar networks substituted.
pub fn toroidal_table(max_n: u32, data: &PlanarNetworkData) -> Result<CountTable> {
    extent_guard(max_n, M_VERTICES, data)?;
    let cores =
        &(&(&walsh_m() + &walsh_mstar()).truncate(max_n) + &crown_walsh(max_n)).truncate(max_n);
    let tilde = tilde_of_composition(cores, &data.series(), Some(max_n))?;
    CountTable::from_series(&tilde, max_n)
}

/// Unlabelled simple graphs on `n` vertices, for `n = 1..=max_n`: complete
/// graphs with each edge either kept or removed.
pub fn unlabelled_graph_counts(max_n: u32) -> Result<Vec<u64>> {
    let optional = &IndexSeries::one() + &IndexSeries::var(VarRef::b(1));
    let optional_tau = &IndexSeries::one() + &IndexSeries::var(VarRef::c(1));
    (1..=max_n)
        .map(|n| {
            let w = compose_walsh(&walsh_complete(n), &optional, &optional_tau, None)?;
            let total: Rational = specialize_tilde(&w)?.iter().map(|(_, c)| c.clone()).sum();
            to_count(&total, n, 0)
        })
        .collect()
}

/// A coefficient where a computed table and a published one disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub n: u32,
    pub m: u32,
    pub computed: u64,
    pub published: u64,
}

/// Compares a computed table with published `(n, m, count)` rows over
/// every `(n, m)` with `n <= max_n` present in either.
pub fn discrepancies(
    computed: &CountTable,
    published: &[(u32, u32, u64)],
    max_n: u32,
) -> Vec<Discrepancy> {
    let mut keys: BTreeMap<(u32, u32), (u64, u64)> = BTreeMap::new();
    for r in computed.rows.iter().filter(|r| r.n <= max_n) {
        keys.entry((r.n, r.m)).or_default().0 = r.count;
    }
    for &(n, m, c) in published.iter().filter(|r| r.0 <= max_n) {
        keys.entry((n, m)).or_default().1 = c;
    }
    keys.into_iter()
        .filter(|(_, (a, b))| a != b)
        .map(|((n, m), (computed, published))| Discrepancy {
            n,
            m,
            computed,
            published,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn embedded_data_matches_factored_form() {
        let data = PlanarNetworkData::embedded();
        assert_eq!(data.extent(), 4);
        let nets = data.series();
        assert_eq!(
            nets.plus.coefficient(0, 1),
            Rational::from_integer(1.into())
        );
        assert_eq!(
            nets.plus.coefficient(4, 8),
            Rational::from_integer(178.into())
        );
        assert_eq!(
            nets.minus.coefficient(4, 12),
            Rational::from_integer(3.into())
        );
    }

    #[test]
    fn parse_errors() {
        assert!(PlanarNetworkData::parse("").is_err());
        assert!(PlanarNetworkData::parse("network-series v2\n").is_err());
        assert!(PlanarNetworkData::parse("network-series v1\n0 1 1\n").is_err());
        assert!(PlanarNetworkData::parse("network-series v1\n0 1 1 2\n").is_err());
        assert!(PlanarNetworkData::parse("network-series v1\n0 1 1 1\n0 1 1 1\n").is_err());
        let ok = PlanarNetworkData::parse("network-series v1\n# bare edge\n0 1 1 1\n").unwrap();
        assert_eq!(ok.extent(), 0);
    }

    #[test]
    fn crown_cycle_bounds() {
        assert_eq!(max_crown_cycle(8), 0);
        assert_eq!(max_crown_cycle(9), 3);
        assert_eq!(max_crown_cycle(12), 4);
        assert_eq!(max_crown_cycle(64), 25);
    }

    #[test]
    fn smallest_crowns() {
        let h = crown_tilde(20).unwrap();
        let one = Rational::from_integer(1.into());
        assert_eq!(h.coefficient(9, 19), one);
        assert_eq!(h.coefficient(12, 27), one);
        assert_eq!(h.coefficient(18, 38), Rational::from_integer(2.into()));
        assert_eq!(h, crown_tilde_direct(20).unwrap());
        assert!(crown_table(8).unwrap().rows.is_empty());
    }

    #[test]
    fn range_guards() {
        let data = PlanarNetworkData::embedded();
        assert!(matches!(
            projective_planar_table(10, &data),
            Err(Error::OutOfRange { limit: 9, .. })
        ));
        assert!(matches!(
            toroidal_table(13, &data),
            Err(Error::OutOfRange { limit: 12, .. })
        ));
    }

    #[test]
    fn small_graph_counts() {
        assert_eq!(unlabelled_graph_counts(5).unwrap(), vec![1, 2, 4, 11, 34]);
    }
}
