//! Brute-force ground truth for small graphs.
//!
//! Everything here works straight from the definitions: automorphism groups
//! by exhaustive backtracking, edge cycles classified by following each
//! orbit, Walsh series as orbit-weighted averages over the group, and
//! unlabelled counts by Burnside's lemma or canonical forms. It is slow on
//! purpose and only meant for graphs with a handful of vertices.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::series::{IndexSeries, Monomial, Rational, VarRef};

pub const AUTOMORPHISM_LIMIT: usize = 10;
pub const MATCHING_LIMIT: usize = 12;
pub const BURNSIDE_LIMIT: usize = 7;
const MAX_VERTICES: usize = 32;

/// A simple graph on vertices `0..n`, optionally with two distinguished
/// poles (which makes it a 2-pole network).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    adj: Vec<u32>,
    poles: Option<(usize, usize)>,
}

impl SmallGraph {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                n,
                limit: MAX_VERTICES,
            });
        }
        let mut adj = vec![0u32; n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} out of range for n = {n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at {u}")));
            }
            if adj[u] & (1 << v) != 0 {
                return Err(Error::InvalidGraph(format!("repeated edge {u}-{v}")));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(SmallGraph { adj, poles: None })
    }

    /// Marks two vertices as the poles `0` and `1` of a network.
    pub fn with_poles(mut self, zero: usize, one: usize) -> Result<Self> {
        if zero == one || zero >= self.n() || one >= self.n() {
            return Err(Error::InvalidGraph(format!("bad poles ({zero}, {one})")));
        }
        self.poles = Some((zero, one));
        Ok(self)
    }

    pub fn complete(n: usize) -> Self {
        let edges: Vec<_> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .collect();
        Self::new(n, &edges).expect("valid")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Self::new(n, &edges).expect("valid")
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Self::new(n, &edges).expect("valid")
    }

    /// Parses the edge-list text format: optional `poles u v` and
    /// `vertices u v ...` headers, then one `u v` edge per line. Labels are
    /// arbitrary nonnegative integers, renumbered in increasing order.
    pub fn parse(text: &str) -> Result<Self> {
        let err = |line: usize, message: String| Error::Parse { line, message };
        let mut labels = BTreeSet::new();
        let mut edges = Vec::new();
        let mut poles = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let mut words = line.split_whitespace();
            let first = words.next().unwrap();
            let nums = |words: std::str::SplitWhitespace| -> Result<Vec<u32>> {
                words
                    .map(|w| {
                        w.parse::<u32>()
                            .map_err(|e| err(i + 1, format!("`{w}`: {e}")))
                    })
                    .collect()
            };
            match first {
                "poles" => {
                    let p = nums(words)?;
                    if p.len() != 2 {
                        return Err(err(i + 1, "poles takes two labels".into()));
                    }
                    labels.extend(&p);
                    poles = Some((p[0], p[1]));
                }
                "vertices" => labels.extend(nums(words)?),
                _ => {
                    let mut all = vec![first
                        .parse::<u32>()
                        .map_err(|e| err(i + 1, format!("`{first}`: {e}")))?];
                    all.extend(nums(words)?);
                    if all.len() != 2 {
                        return Err(err(i + 1, "edge lines hold exactly two labels".into()));
                    }
                    labels.extend(&all);
                    edges.push((all[0], all[1]));
                }
            }
        }
        let index: BTreeMap<u32, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        let edges: Vec<_> = edges.iter().map(|(u, v)| (index[u], index[v])).collect();
        let g = SmallGraph::new(index.len(), &edges)?;
        match poles {
            Some((p, q)) => g.with_poles(index[&p], index[&q]),
            None => Ok(g),
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn poles(&self) -> Option<(usize, usize)> {
        self.poles
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & (1 << v) != 0
    }

    pub fn degree(&self, u: usize) -> u32 {
        self.adj[u].count_ones()
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n() {
            for v in u + 1..self.n() {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn edge_count(&self) -> usize {
        self.adj
            .iter()
            .map(|m| m.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Same graph with the edge `uv` present.
    pub fn with_edge(&self, u: usize, v: usize) -> Self {
        let mut g = self.clone();
        g.adj[u] |= 1 << v;
        g.adj[v] |= 1 << u;
        g
    }

    fn connected_without(&self, removed: Option<usize>) -> bool {
        let alive: Vec<usize> = (0..self.n()).filter(|&v| Some(v) != removed).collect();
        let Some(&start) = alive.first() else {
            return true;
        };
        let mask_alive: u32 = alive.iter().fold(0, |m, &v| m | (1 << v));
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & mask_alive & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == mask_alive
    }

    /// 2-connected in the block sense, with `K_2` counted as 2-connected.
    pub fn is_biconnected(&self) -> bool {
        match self.n() {
            0 | 1 => false,
            2 => self.has_edge(0, 1),
            _ => {
                self.connected_without(None)
                    && (0..self.n()).all(|v| self.connected_without(Some(v)))
            }
        }
    }

    fn is_automorphism(&self, p: &Permutation) -> bool {
        p.len() == self.n()
            && self
                .edges()
                .iter()
                .all(|&(u, v)| self.has_edge(p.image(u), p.image(v)))
    }
}

/// A permutation of `0..n`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::InvalidGraph("not a bijection".into()));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// Builds a permutation of `0..n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for cyc in cycles {
            for (i, &v) in cyc.iter().enumerate() {
                if v >= n {
                    return Err(Error::InvalidGraph(format!("{v} out of range")));
                }
                images[v] = cyc[(i + 1) % cyc.len()];
            }
        }
        Permutation::new(images)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn image(&self, v: usize) -> usize {
        self.0[v]
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn pow_apply(&self, v: usize, k: usize) -> usize {
        (0..k).fold(v, |w, _| self.0[w])
    }

    /// Cycle lengths, one entry per cycle, in order of first element.
    pub fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.len()];
        let mut out = Vec::new();
        for start in 0..self.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut v = start;
            while !seen[v] {
                seen[v] = true;
                v = self.0[v];
                len += 1;
            }
            out.push(len);
        }
        out
    }

    /// Cycle type as a map from cycle length to multiplicity.
    pub fn cycle_type(&self) -> BTreeMap<usize, u32> {
        let mut out = BTreeMap::new();
        for l in self.cycle_lengths() {
            *out.entry(l).or_insert(0) += 1;
        }
        out
    }
}

/// Visits every bijection `g -> h` that preserves adjacency, subject to a
/// per-vertex admissibility filter. The visitor returns `false` to stop.
fn for_each_isomorphism<A, V>(g: &SmallGraph, h: &SmallGraph, admissible: A, mut visit: V)
where
    A: Fn(usize, usize) -> bool,
    V: FnMut(&[usize]) -> bool,
{
    let n = g.n();
    if h.n() != n || g.edge_count() != h.edge_count() {
        return;
    }
    let mut image = vec![usize::MAX; n];
    let mut used = 0u32;

    fn rec<A: Fn(usize, usize) -> bool, V: FnMut(&[usize]) -> bool>(
        g: &SmallGraph,
        h: &SmallGraph,
        admissible: &A,
        visit: &mut V,
        image: &mut Vec<usize>,
        used: &mut u32,
        i: usize,
    ) -> bool {
        let n = g.n();
        if i == n {
            return visit(image);
        }
        for j in 0..n {
            if *used & (1 << j) != 0 || g.degree(i) != h.degree(j) || !admissible(i, j) {
                continue;
            }
            if (0..i).any(|k| g.has_edge(i, k) != h.has_edge(j, image[k])) {
                continue;
            }
            image[i] = j;
            *used |= 1 << j;
            let keep_going = rec(g, h, admissible, visit, image, used, i + 1);
            *used &= !(1 << j);
            if !keep_going {
                return false;
            }
        }
        true
    }

    rec(g, h, &admissible, &mut visit, &mut image, &mut used, 0);
}

/// All automorphisms of `g`, by backtracking with degree pruning. Poles are
/// ignored here; network callers sort the result by pole behaviour.
pub fn automorphisms(g: &SmallGraph) -> Result<Vec<Permutation>> {
    if g.n() > AUTOMORPHISM_LIMIT {
        return Err(Error::GraphTooLarge {
            n: g.n(),
            limit: AUTOMORPHISM_LIMIT,
        });
    }
    let mut out = Vec::new();
    for_each_isomorphism(
        g,
        g,
        |_, _| true,
        |img| {
            out.push(Permutation(img.to_vec()));
            true
        },
    );
    Ok(out)
}

pub fn are_isomorphic(g: &SmallGraph, h: &SmallGraph) -> bool {
    let mut found = false;
    for_each_isomorphism(
        g,
        h,
        |_, _| true,
        |_| {
            found = true;
            false
        },
    );
    found
}

/// Pole-preserving isomorphism of networks (`0 -> 0`, `1 -> 1`).
pub fn are_isomorphic_networks(g: &SmallGraph, h: &SmallGraph) -> bool {
    let (Some((g0, g1)), Some((h0, h1))) = (g.poles(), h.poles()) else {
        return false;
    };
    let mut found = false;
    for_each_isomorphism(
        g,
        h,
        |i, j| (i == g0) == (j == h0) && (i == g1) == (j == h1),
        |_| {
            found = true;
            false
        },
    );
    found
}

/// One edge orbit of an automorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeOrbit {
    pub edges: Vec<(usize, usize)>,
    /// True if `sigma^len` swaps the endpoints of each edge.
    pub mobius: bool,
}

impl EdgeOrbit {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

fn norm(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// Splits the edge set into orbits of `sigma` and classifies each as
/// cylindrical or Möbius.
pub fn edge_orbits(g: &SmallGraph, sigma: &Permutation) -> Result<Vec<EdgeOrbit>> {
    if !g.is_automorphism(sigma) {
        return Err(Error::NotAnAutomorphism);
    }
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for (u, v) in g.edges() {
        if seen.contains(&(u, v)) {
            continue;
        }
        let mut orbit = Vec::new();
        let mut e = (u, v);
        loop {
            seen.insert(e);
            orbit.push(e);
            e = norm(sigma.image(e.0), sigma.image(e.1));
            if e == (u, v) {
                break;
            }
        }
        let l = orbit.len();
        let mobius = sigma.pow_apply(u, l) == v;
        debug_assert!(mobius || sigma.pow_apply(u, l) == u);
        out.push(EdgeOrbit {
            edges: orbit,
            mobius,
        });
    }
    Ok(out)
}

fn vertex_part(sigma: &Permutation) -> Vec<(VarRef, u32)> {
    sigma
        .cycle_type()
        .into_iter()
        .map(|(l, k)| (VarRef::a(l as u32), k))
        .collect()
}

/// The weight `a^{sigma} b^{cyl} c^{mob}` of a graph automorphism.
pub fn edge_cycle_monomial(g: &SmallGraph, sigma: &Permutation) -> Result<Monomial> {
    let mut pairs = vertex_part(sigma);
    for orbit in edge_orbits(g, sigma)? {
        let l = orbit.len() as u32;
        pairs.push((
            if orbit.mobius {
                VarRef::c(l)
            } else {
                VarRef::b(l)
            },
            1,
        ));
    }
    Ok(Monomial::from_pairs(pairs))
}

/// The two-sort weight of an automorphism fixing a matching: matched edge
/// cycles go to `b`/`c`, unmatched ones to `beta`/`gamma`.
pub fn matched_cycle_monomial(
    g: &SmallGraph,
    sigma: &Permutation,
    matching: &BTreeSet<(usize, usize)>,
) -> Result<Monomial> {
    let mut pairs = vertex_part(sigma);
    for orbit in edge_orbits(g, sigma)? {
        let l = orbit.len() as u32;
        let matched = matching.contains(&orbit.edges[0]);
        if orbit.edges.iter().any(|e| matching.contains(e) != matched) {
            return Err(Error::InvalidGraph(
                "matching is not fixed by the permutation".into(),
            ));
        }
        let v = match (matched, orbit.mobius) {
            (true, false) => VarRef::b(l),
            (true, true) => VarRef::c(l),
            (false, false) => VarRef::beta(l),
            (false, true) => VarRef::gamma(l),
        };
        pairs.push((v, 1));
    }
    Ok(Monomial::from_pairs(pairs))
}

fn group_average<I: IntoIterator<Item = Monomial>>(weights: I, order: usize) -> IndexSeries {
    let unit = Rational::new(BigInt::from(1), BigInt::from(order));
    let mut out = IndexSeries::zero();
    for m in weights {
        out.add_term(m, unit.clone());
    }
    out
}

/// Walsh series of a class given by pairwise non-isomorphic representatives.
pub fn walsh_bruteforce(representatives: &[SmallGraph]) -> Result<IndexSeries> {
    for (i, g) in representatives.iter().enumerate() {
        for (j, h) in representatives.iter().enumerate().skip(i + 1) {
            if g.n() <= 8 && h.n() == g.n() && are_isomorphic(g, h) {
                return Err(Error::DuplicateRepresentative(i, j));
            }
        }
    }
    let mut out = IndexSeries::zero();
    for g in representatives {
        let group = automorphisms(g)?;
        let weights = group
            .iter()
            .map(|s| edge_cycle_monomial(g, s))
            .collect::<Result<Vec<_>>>()?;
        out = &out + &group_average(weights, group.len());
    }
    Ok(out)
}

/// Whether network automorphisms fix the poles (`+`) or exchange them (`-`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// `W^+` or `W^-` of a single network, straight from the definition: the
/// graph weight of each pole-fixing (resp. pole-swapping) automorphism with
/// the pole cycles divided out.
pub fn network_walsh_bruteforce(net: &SmallGraph, sign: Sign) -> Result<IndexSeries> {
    let (p0, p1) = net
        .poles()
        .ok_or_else(|| Error::InvalidGraph("network needs poles".into()))?;
    if !net.with_edge(p0, p1).is_biconnected() {
        return Err(Error::NotBiconnected);
    }
    let group: Vec<Permutation> = automorphisms(net)?
        .into_iter()
        .filter(|s| match sign {
            Sign::Plus => s.image(p0) == p0 && s.image(p1) == p1,
            Sign::Minus => s.image(p0) == p1 && s.image(p1) == p0,
        })
        .collect();
    if group.is_empty() {
        return Ok(IndexSeries::zero());
    }
    let divisor = match sign {
        Sign::Plus => Monomial::power(VarRef::a(1), 2),
        Sign::Minus => Monomial::var(VarRef::a(2)),
    };
    let weights = group
        .iter()
        .map(|s| {
            let m = edge_cycle_monomial(net, s)?;
            m.div(&divisor).ok_or_else(|| Error::InexactDivision {
                divisor: divisor.to_string(),
                term: m.to_string(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(group_average(weights, group.len()))
}

/// Sum of [`network_walsh_bruteforce`] over pole-preserving isomorphism
/// class representatives.
pub fn network_class_walsh(reps: &[SmallGraph], sign: Sign) -> Result<IndexSeries> {
    for (i, g) in reps.iter().enumerate() {
        for (j, h) in reps.iter().enumerate().skip(i + 1) {
            if are_isomorphic_networks(g, h) {
                return Err(Error::DuplicateRepresentative(i, j));
            }
        }
    }
    let mut out = IndexSeries::zero();
    for r in reps {
        out = &out + &network_walsh_bruteforce(r, sign)?;
    }
    Ok(out)
}

/// Every matching of `g`, the empty one included; each is a sorted edge list.
pub fn matchings(g: &SmallGraph) -> Result<Vec<Vec<(usize, usize)>>> {
    if g.n() > MATCHING_LIMIT {
        return Err(Error::GraphTooLarge {
            n: g.n(),
            limit: MATCHING_LIMIT,
        });
    }
    let edges = g.edges();
    let mut out = Vec::new();
    let mut current = Vec::new();

    fn rec(
        edges: &[(usize, usize)],
        i: usize,
        used: u32,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        if i == edges.len() {
            out.push(current.clone());
            return;
        }
        rec(edges, i + 1, used, current, out);
        let (u, v) = edges[i];
        if used & ((1 << u) | (1 << v)) == 0 {
            current.push((u, v));
            rec(edges, i + 1, used | (1 << u) | (1 << v), current, out);
            current.pop();
        }
    }

    rec(&edges, 0, 0, &mut current, &mut out);
    Ok(out)
}

/// Extended (two-sort) Walsh series of one matched graph class
/// `{(g, mu)}`: averages over `Aut(g)` the weights of all matchings fixed by
/// each automorphism.
pub fn matched_walsh_bruteforce(g: &SmallGraph) -> Result<IndexSeries> {
    let group = automorphisms(g)?;
    let all: Vec<BTreeSet<(usize, usize)>> = matchings(g)?
        .into_iter()
        .map(|m| m.into_iter().collect())
        .collect();
    let mut weights = Vec::new();
    for s in &group {
        for mu in &all {
            let fixed = mu
                .iter()
                .all(|&(u, v)| mu.contains(&norm(s.image(u), s.image(v))));
            if fixed {
                weights.push(matched_cycle_monomial(g, s, mu)?);
            }
        }
    }
    Ok(group_average(weights, group.len()))
}

/// Lexicographic successor of a permutation in place; false at the end.
fn next_permutation(p: &mut [usize]) -> bool {
    let n = p.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every permutation of `0..n`.
pub fn symmetric_group(n: usize) -> Vec<Permutation> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation(p.clone())];
    while next_permutation(&mut p) {
        out.push(Permutation(p.clone()));
    }
    out
}

fn edge_slots(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect()
}

fn edge_mask(g: &SmallGraph, slots: &[(usize, usize)]) -> u64 {
    slots
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| g.has_edge(u, v))
        .fold(0, |m, (i, _)| m | (1 << i))
}

/// All `2^(n choose 2)` labelled simple graphs on `0..n`.
pub fn all_graphs(n: usize) -> Vec<SmallGraph> {
    let slots = edge_slots(n);
    (0u64..1 << slots.len())
        .map(|mask| {
            let edges: Vec<_> = slots
                .iter()
                .enumerate()
                .filter(|(i, _)| mask & (1 << i) != 0)
                .map(|(_, &e)| e)
                .collect();
            SmallGraph::new(n, &edges).expect("valid")
        })
        .collect()
}

/// Unlabelled counts of an isomorphism-closed class of labelled graphs on
/// `0..n`, refined by edge count: `(1/n!) sum_sigma |Fix(sigma)|`.
pub fn burnside_unlabelled_count(class: &[SmallGraph]) -> Result<BTreeMap<usize, u64>> {
    let Some(first) = class.first() else {
        return Ok(BTreeMap::new());
    };
    let n = first.n();
    if n > BURNSIDE_LIMIT {
        return Err(Error::GraphTooLarge {
            n,
            limit: BURNSIDE_LIMIT,
        });
    }
    if class.iter().any(|g| g.n() != n) {
        return Err(Error::InvalidGraph("class mixes vertex counts".into()));
    }
    let slots = edge_slots(n);
    let slot_index: BTreeMap<(usize, usize), usize> =
        slots.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let masks: Vec<(u64, usize)> = class
        .iter()
        .map(|g| (edge_mask(g, &slots), g.edge_count()))
        .collect();

    let mut fixed: BTreeMap<usize, BigInt> = BTreeMap::new();
    let group = symmetric_group(n);
    for sigma in &group {
        let map: Vec<usize> = slots
            .iter()
            .map(|&(u, v)| slot_index[&norm(sigma.image(u), sigma.image(v))])
            .collect();
        for &(mask, m) in &masks {
            let mut image = 0u64;
            let mut rest = mask;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                image |= 1 << map[i];
            }
            if image == mask {
                *fixed.entry(m).or_insert_with(BigInt::zero) += 1;
            }
        }
    }
    let order = BigInt::from(group.len());
    fixed
        .into_iter()
        .map(|(m, total)| {
            if (&total % &order) != BigInt::zero() {
                return Err(Error::InvalidGraph(
                    "class is not closed under relabelling".into(),
                ));
            }
            Ok((m, (total / &order).to_u64().expect("small")))
        })
        .collect()
}

/// Smallest adjacency bit string over all relabellings that keep vertex
/// colours in place. Two coloured graphs are isomorphic iff their codes match.
pub fn canonical_code(g: &SmallGraph, colors: &[u32]) -> Result<Vec<u64>> {
    let n = g.n();
    if n > 9 {
        return Err(Error::GraphTooLarge { n, limit: 9 });
    }
    let slots = edge_slots(n);
    let mut best: Option<Vec<u64>> = None;
    for sigma in symmetric_group(n) {
        if (0..n).any(|v| colors[v] != colors[sigma.image(v)]) {
            continue;
        }
        // Relabel: new vertex sigma(v) gets old vertex v's neighbourhood.
        let mut inv = vec![0; n];
        for v in 0..n {
            inv[sigma.image(v)] = v;
        }
        let code: Vec<u64> = std::iter::once(
            slots
                .iter()
                .enumerate()
                .filter(|(_, &(u, v))| g.has_edge(inv[u], inv[v]))
                .fold(0u64, |m, (i, _)| m | (1 << i)),
        )
        .chain(colors.iter().map(|&c| c as u64))
        .collect();
        if best.as_ref().is_none_or(|b| code < *b) {
            best = Some(code);
        }
    }
    Ok(best.unwrap_or_default())
}

/// Number of isomorphism classes in a list of coloured graphs, per
/// `(vertex count, edge count)`.
pub fn count_classes(graphs: &[(SmallGraph, Vec<u32>)]) -> Result<BTreeMap<(usize, usize), u64>> {
    let mut seen = BTreeSet::new();
    let mut out = BTreeMap::new();
    for (g, colors) in graphs {
        let code = canonical_code(g, colors)?;
        if seen.insert((g.n(), code)) {
            *out.entry((g.n(), g.edge_count())).or_insert(0) += 1;
        }
    }
    Ok(out)
}
