//! Network substitution counted two ways: through the series, and by
//! building every substituted graph and sorting it into isomorphism classes.

use std::collections::BTreeMap;

use walsh::compose::{tilde_of_composition, BivariateSeries, NetworkSeriesPair};
use walsh::cores::{walsh_complete, walsh_cycle};
use walsh::oracle::{count_classes, network_class_walsh, Sign, SmallGraph};
use walsh::series::{IndexSeries, Rational};

/// A network given by its internal vertex count and edges, where `0` and
/// `1` are the poles and internal vertices are `2..`.
struct Gadget {
    internal: usize,
    edges: Vec<(usize, usize)>,
}

impl Gadget {
    fn graph(&self) -> SmallGraph {
        SmallGraph::new(self.internal + 2, &self.edges)
            .and_then(|g| g.with_poles(0, 1))
            .unwrap()
    }
}

/// Every labelled way of replacing the core edges by gadgets (both
/// orientations), with at most `max_extra` added vertices. Core vertices
/// get colour 0 and gadget vertices colour 1.
fn substitutions(
    core: &SmallGraph,
    gadgets: &[Gadget],
    max_extra: usize,
) -> Vec<(SmallGraph, Vec<u32>)> {
    let core_edges = core.edges();
    let mut out = Vec::new();
    let mut choice = vec![(0usize, false); core_edges.len()];
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        extra: usize,
        core: &SmallGraph,
        core_edges: &[(usize, usize)],
        gadgets: &[Gadget],
        max_extra: usize,
        choice: &mut Vec<(usize, bool)>,
        out: &mut Vec<(SmallGraph, Vec<u32>)>,
    ) {
        if i == core_edges.len() {
            let mut n = core.n();
            let mut edges = Vec::new();
            for (&(u, v), &(gi, flip)) in core_edges.iter().zip(choice.iter()) {
                let (p0, p1) = if flip { (v, u) } else { (u, v) };
                let g = &gadgets[gi];
                let base = n;
                n += g.internal;
                let map = |w: usize| match w {
                    0 => p0,
                    1 => p1,
                    _ => base + w - 2,
                };
                edges.extend(g.edges.iter().map(|&(a, b)| (map(a), map(b))));
            }
            let colors = (0..n).map(|v| u32::from(v >= core.n())).collect();
            out.push((SmallGraph::new(n, &edges).unwrap(), colors));
            return;
        }
        for (gi, g) in gadgets.iter().enumerate() {
            if extra + g.internal > max_extra {
                continue;
            }
            for flip in [false, true] {
                choice[i] = (gi, flip);
                rec(
                    i + 1,
                    extra + g.internal,
                    core,
                    core_edges,
                    gadgets,
                    max_extra,
                    choice,
                    out,
                );
            }
        }
    }
    rec(
        0,
        0,
        core,
        &core_edges,
        gadgets,
        max_extra,
        &mut choice,
        &mut out,
    );
    out
}

fn tilde_pair(gadgets: &[Gadget]) -> NetworkSeriesPair {
    let reps: Vec<SmallGraph> = gadgets.iter().map(Gadget::graph).collect();
    NetworkSeriesPair::from_walsh(
        &network_class_walsh(&reps, Sign::Plus).unwrap(),
        &network_class_walsh(&reps, Sign::Minus).unwrap(),
    )
    .unwrap()
}

fn as_counts(s: &BivariateSeries) -> BTreeMap<(usize, usize), u64> {
    s.iter()
        .map(|((i, j), c)| ((i as usize, j as usize), c.to_integer().try_into().unwrap()))
        .collect()
}

#[test]
fn triangle_with_edges_and_two_paths() {
    let gadgets = [
        Gadget {
            internal: 0,
            edges: vec![(0, 1)],
        },
        Gadget {
            internal: 1,
            edges: vec![(0, 2), (2, 1)],
        },
    ];
    let reps: Vec<SmallGraph> = gadgets.iter().map(Gadget::graph).collect();
    let minus = network_class_walsh(&reps, Sign::Minus).unwrap();
    // Exchanging the poles of the 2-path fixes its middle vertex and swaps
    // its two edges in one cylindrical 2-cycle.
    let expected_minus =
        IndexSeries::parse_canonical_text("walsh-series v1\ntrunc exact\n1/1 c1\n1/1 a1 b2\n")
            .unwrap();
    assert_eq!(minus, expected_minus);
    let nets = tilde_pair(&gadgets);
    let one = Rational::from_integer(1.into());
    assert_eq!(
        nets.plus,
        BivariateSeries::from_terms([((0, 1), one.clone()), ((1, 2), one.clone())])
    );
    assert_eq!(nets.minus, nets.plus);
    let series = tilde_of_composition(&walsh_cycle(3), &nets, None).unwrap();
    let brute = count_classes(&substitutions(&SmallGraph::cycle(3), &gadgets, 3)).unwrap();
    assert_eq!(as_counts(&series), brute);
    assert_eq!(brute.len(), 4);
}

#[test]
fn k4_with_subdivided_edges() {
    let gadgets = [
        Gadget {
            internal: 0,
            edges: vec![(0, 1)],
        },
        Gadget {
            internal: 1,
            edges: vec![(0, 2), (2, 1)],
        },
    ];
    let nets = tilde_pair(&gadgets);
    let series = tilde_of_composition(&walsh_complete(4), &nets, Some(8)).unwrap();
    let brute = count_classes(&substitutions(&SmallGraph::complete(4), &gadgets, 4)).unwrap();
    assert_eq!(as_counts(&series), brute);
}

#[test]
fn k4_with_an_asymmetric_network() {
    // A triangle on pole 0 with a pendant edge to pole 1, together with
    // its reversal: no symmetry exchanges the poles of either one.
    let gadgets = [
        Gadget {
            internal: 0,
            edges: vec![(0, 1)],
        },
        Gadget {
            internal: 2,
            edges: vec![(0, 2), (2, 3), (0, 3), (3, 1)],
        },
        Gadget {
            internal: 2,
            edges: vec![(1, 2), (2, 3), (1, 3), (3, 0)],
        },
    ];
    let nets = tilde_pair(&gadgets);
    assert_eq!(
        nets.plus.coefficient(2, 4),
        Rational::from_integer(2.into())
    );
    assert_eq!(
        nets.minus.coefficient(2, 4),
        Rational::from_integer(0.into())
    );
    let series = tilde_of_composition(&walsh_complete(4), &nets, Some(8)).unwrap();
    let brute = count_classes(&substitutions(&SmallGraph::complete(4), &gadgets, 4)).unwrap();
    assert_eq!(as_counts(&series), brute);
    assert!(brute.values().sum::<u64>() > 5);
}

#[test]
fn k4_with_a_symmetric_and_an_asymmetric_network() {
    let gadgets = [
        Gadget {
            internal: 0,
            edges: vec![(0, 1)],
        },
        Gadget {
            internal: 1,
            edges: vec![(0, 2), (2, 1)],
        },
        Gadget {
            internal: 2,
            edges: vec![(0, 2), (2, 3), (0, 3), (3, 1)],
        },
        Gadget {
            internal: 2,
            edges: vec![(1, 2), (2, 3), (1, 3), (3, 0)],
        },
    ];
    let nets = tilde_pair(&gadgets);
    let series = tilde_of_composition(&walsh_complete(4), &nets, Some(7)).unwrap();
    let brute = count_classes(&substitutions(&SmallGraph::complete(4), &gadgets, 3)).unwrap();
    assert_eq!(as_counts(&series), brute);
}

#[test]
fn classes_not_closed_under_pole_exchange_are_rejected() {
    let gadgets = [
        Gadget {
            internal: 0,
            edges: vec![(0, 1)],
        },
        Gadget {
            internal: 2,
            edges: vec![(0, 2), (2, 3), (0, 3), (3, 1)],
        },
    ];
    let nets = tilde_pair(&gadgets);
    assert!(matches!(
        tilde_of_composition(&walsh_complete(4), &nets, Some(8)),
        Err(walsh::Error::NotACount { .. })
    ));
}
